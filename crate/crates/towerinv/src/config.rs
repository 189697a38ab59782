//! Run configuration for commands and check suites.

use serde::{Deserialize, Serialize};

use crate::error::{Result, TowerError};
use crate::hp::{Ctx, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct RunConfig {
    /// Mantissa width of the high-precision reals.
    pub precision_bits: usize,
    /// Relative tolerance for synthetic limit checks.
    pub tol_synthetic: f64,
    /// Gap threshold for real-tower trend checks.
    pub tol_trend: f64,
    /// Rational primes tracked per field/tower.
    pub prime_bound: u64,
    /// Seed for the randomized suites.
    pub seed: u64,
    pub output_format: OutputFormat,
    /// Top conductor cap for cyclotomic towers.
    pub cyclotomic_cap: u64,
    /// Search bounds and tolerance for norm recovery from the constant C.
    pub norm_t_bound: u64,
    pub norm_f_bound: u64,
    pub norm_tol: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            precision_bits: 128,
            tol_synthetic: 1e-9,
            tol_trend: 0.5,
            prime_bound: 100,
            seed: 42,
            output_format: OutputFormat::Json,
            cyclotomic_cap: 3000,
            norm_t_bound: 1_000_000,
            norm_f_bound: 20,
            norm_tol: 1e-12,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.precision_bits < 64 {
            return Err(TowerError::InvalidParameter(format!(
                "precision_bits must be >= 64, got {}",
                self.precision_bits
            )));
        }
        for (name, v) in [
            ("tol_synthetic", self.tol_synthetic),
            ("tol_trend", self.tol_trend),
            ("norm_tol", self.norm_tol),
        ] {
            if !(v > 0.0) {
                return Err(TowerError::InvalidParameter(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        Ok(())
    }

    pub fn ctx(&self) -> Result<Ctx> {
        Ctx::new(self.precision_bits)
    }

    /// Relative tolerance for exact-identity assertions: 2^-100 at the
    /// default 128-bit precision, scaling with the mantissa.
    pub fn tol_exact(&self, ctx: &Ctx) -> Real {
        ctx.exact_identity_tol()
    }

    pub fn tol_synthetic_real(&self, ctx: &Ctx) -> Real {
        ctx.from_f64(self.tol_synthetic)
    }

    /// Load from the file named by TOWERINV_CONFIG when set, otherwise the
    /// defaults.
    pub fn from_env() -> Result<RunConfig> {
        match std::env::var_os("TOWERINV_CONFIG") {
            None => Ok(RunConfig::default()),
            Some(path) => {
                let text = std::fs::read_to_string(&path).map_err(|e| {
                    TowerError::ParseError(format!(
                        "cannot read config {}: {e}",
                        path.to_string_lossy()
                    ))
                })?;
                let cfg: RunConfig = serde_json::from_str(&text)?;
                cfg.validate()?;
                Ok(cfg)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        RunConfig::default().validate().unwrap();
    }

    #[test]
    fn precision_floor_enforced() {
        let cfg = RunConfig {
            precision_bits: 32,
            ..RunConfig::default()
        };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn exact_tolerance_is_two_to_minus_100_at_default() {
        let cfg = RunConfig::default();
        let ctx = cfg.ctx().unwrap();
        let tol = cfg.tol_exact(&ctx);
        let expect = 2f64.powi(-100);
        let got = crate::hp::to_f64(&tol);
        assert!((got / expect - 1.0).abs() < 1e-9, "{got} vs {expect}");
    }
}
