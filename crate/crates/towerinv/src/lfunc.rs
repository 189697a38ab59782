//! Dirichlet L-values at s = 1 and the analytic class number formula.
//!
//! `|L(1, chi)|` for a primitive non-principal character comes from the
//! finite closed forms: the weighted character sum with weights `a` for odd
//! characters and `ln sin(pi a / m)` for even ones. The slowly converging
//! partial series only serves as an internal cross-check with an explicit
//! tail bound; the closed form is authoritative.

use std::collections::BTreeMap;

use crate::chars::DirichletCharacter;
use crate::error::{Result, TowerError};
use crate::fields::AbelianField;
use crate::hp::{gt, lt, to_f64, Complex, Ctx, Real};

/// |L(1, chi)| together with its natural log, for a primitive
/// non-principal chi.
#[derive(Debug, Clone)]
pub struct LValue {
    pub character: DirichletCharacter,
    pub value: Real,
    pub log_value: Real,
}

/// log of the residue of zeta_K at 1 and log(h_K * R_K) assembled from it.
#[derive(Debug, Clone)]
pub struct ClassRegData {
    pub log_residue: Real,
    pub log_hr: Real,
}

/// Series length multiplier: the cross-check sums 20000*m terms, giving a
/// tail bound of 2m/N = 1e-4 by the Dirichlet test.
const SERIES_PERIODS: u64 = 20_000;

/// Shared scratch for L-value evaluation: memoized values keyed by the
/// character's canonical key, plus per-modulus harmonic residue tables for
/// the series cross-check.
#[derive(Default)]
pub struct LValueCache {
    values: BTreeMap<Vec<u64>, LValue>,
    harmonics: BTreeMap<u64, Vec<f64>>,
}

impl LValueCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn l_one(&mut self, chi: &DirichletCharacter, ctx: &mut Ctx) -> Result<LValue> {
        let key = chi.canonical_key();
        if let Some(v) = self.values.get(&key) {
            return Ok(v.clone());
        }
        let prim = chi.primitive()?;
        let value = l_one_uncached(&prim, ctx, Some(self))?;
        self.values.insert(key, value.clone());
        Ok(value)
    }

    fn harmonic_table(&mut self, m: u64) -> &[f64] {
        self.harmonics
            .entry(m)
            .or_insert_with(|| harmonic_residues(m))
    }
}

/// Per-residue partial harmonic sums H_r = sum over n <= 20000*m with
/// n = r mod m of 1/n.
fn harmonic_residues(m: u64) -> Vec<f64> {
    let n_max = SERIES_PERIODS * m;
    let mut h = vec![0.0f64; m as usize];
    for n in 1..=n_max {
        h[(n % m) as usize] += 1.0 / n as f64;
    }
    h
}

/// |L(1, chi)| by the closed form, for primitive non-principal chi.
pub fn l_one(chi: &DirichletCharacter, ctx: &mut Ctx) -> Result<LValue> {
    let prim = chi.primitive()?;
    l_one_uncached(&prim, ctx, None)
}

fn l_one_uncached(
    chi: &DirichletCharacter,
    ctx: &mut Ctx,
    cache: Option<&mut LValueCache>,
) -> Result<LValue> {
    if chi.is_principal() {
        return Err(TowerError::PrincipalCharacter);
    }
    debug_assert_eq!(chi.modulus(), chi.conductor(), "caller primitivizes");

    let value = closed_form(chi, ctx)?;

    // Internal cross-check against direct partial summation with the
    // Dirichlet-test tail bound; escalate the mantissa once on disagreement.
    let series = match cache {
        Some(c) => series_value(chi, c.harmonic_table(chi.modulus())),
        None => series_value(chi, &harmonic_residues(chi.modulus())),
    };
    let tail = 2.0 * chi.modulus() as f64 / (SERIES_PERIODS * chi.modulus()) as f64;
    let tol = tail + 1e-6;
    if (to_f64(&value) - series).abs() > tol {
        let mut hi = ctx.escalated()?;
        let value2 = closed_form(chi, &mut hi)?;
        if (to_f64(&value2) - series).abs() > tol {
            return Err(TowerError::Internal(format!(
                "L(1, chi) closed form {} disagrees with series {} beyond tail bound {} (conductor {})",
                to_f64(&value2),
                series,
                tol,
                chi.modulus()
            )));
        }
    }

    if !gt(&value, &ctx.zero()) {
        return Err(TowerError::Internal(format!(
            "non-positive |L(1, chi)| at conductor {}",
            chi.modulus()
        )));
    }
    let log_value = ctx.ln(&value);
    Ok(LValue {
        character: chi.clone(),
        value,
        log_value,
    })
}

fn closed_form(chi: &DirichletCharacter, ctx: &mut Ctx) -> Result<Real> {
    let m = chi.modulus();
    let mut roots: BTreeMap<(u64, u64), Complex> = BTreeMap::new();
    let mut sum = Complex::zero(ctx);
    if chi.is_even() {
        // weights ln sin(pi a / m), symmetric under a -> m - a
        let mut lnsin: BTreeMap<u64, Real> = BTreeMap::new();
        for a in 1..m {
            let Some(v) = chi.value(a) else { continue };
            let arg = a.min(m - a);
            if !lnsin.contains_key(&arg) {
                let pi = ctx.pi();
                let x = ctx.div(&ctx.mul(&pi, &ctx.from_u64(arg)), &ctx.from_u64(m));
                let s = ctx.sin(&x);
                let l = ctx.ln(&s);
                lnsin.insert(arg, l);
            }
            let w = lnsin[&arg].clone();
            let conj = v.conj();
            let z = roots
                .entry((conj.numerator(), conj.order()))
                .or_insert_with(|| conj.to_complex(ctx))
                .clone();
            sum = sum.add(&z.scale(&w, ctx), ctx);
        }
        // |L| = |sum| / sqrt(m)
        let sqrt_m = ctx.sqrt(&ctx.from_u64(m));
        Ok(ctx.div(&sum.modulus(ctx), &sqrt_m))
    } else {
        for a in 1..m {
            let Some(v) = chi.value(a) else { continue };
            let w = ctx.from_u64(a);
            let conj = v.conj();
            let z = roots
                .entry((conj.numerator(), conj.order()))
                .or_insert_with(|| conj.to_complex(ctx))
                .clone();
            sum = sum.add(&z.scale(&w, ctx), ctx);
        }
        // |L| = pi / m^(3/2) * |sum|
        let m_real = ctx.from_u64(m);
        let m32 = ctx.mul(&m_real, &ctx.sqrt(&m_real));
        let pi = ctx.pi();
        let c = ctx.div(&pi, &m32);
        Ok(ctx.mul(&c, &sum.modulus(ctx)))
    }
}

/// |sum_{n<=N} chi(n)/n| in f64, via the per-residue harmonic table.
fn series_value(chi: &DirichletCharacter, harmonics: &[f64]) -> f64 {
    let m = chi.modulus();
    let mut re = 0.0f64;
    let mut im = 0.0f64;
    for a in 1..=m {
        let Some(v) = chi.value(a % m) else { continue };
        let (vr, vi) = v.to_complex_f64();
        let h = harmonics[(a % m) as usize];
        re += vr * h;
        im += vi * h;
    }
    (re * re + im * im).sqrt()
}

/// log(h_K R_K) via the analytic class number formula:
/// log hR = log w + g_K - r1 log 2 - r2 log 2pi + sum_{chi != 1} log|L(1,chi)|.
pub fn log_hr(
    field: &AbelianField,
    ctx: &mut Ctx,
    cache: &mut LValueCache,
) -> Result<ClassRegData> {
    if field.is_rationals() {
        return Ok(ClassRegData {
            log_residue: ctx.zero(),
            log_hr: ctx.zero(),
        });
    }
    // Deterministic reduction order: sort by the primitive canonical key.
    let mut prims: Vec<&DirichletCharacter> = field
        .primitive_characters()
        .iter()
        .filter(|c| !c.is_principal())
        .collect();
    prims.sort_by_key(|c| c.canonical_key());

    let mut log_residue = ctx.zero();
    for chi in prims {
        let lv = cache.l_one(chi, ctx)?;
        log_residue = ctx.add(&log_residue, &lv.log_value);
    }

    let (r1, r2) = field.signature();
    let w = ctx.ln_u64(field.roots_of_unity_count());
    let ln2 = ctx.ln2();
    let ln2pi = ctx.ln_two_pi();
    let mut log_hr = ctx.add(&w, field.genus());
    log_hr = ctx.sub(&log_hr, &ctx.mul(&ctx.from_u64(r1), &ln2));
    log_hr = ctx.sub(&log_hr, &ctx.mul(&ctx.from_u64(r2), &ln2pi));
    log_hr = ctx.add(&log_hr, &log_residue);

    // h >= 1 and R = 1 for imaginary quadratics, so log hR >= 0 there up to
    // rounding; higher-degree fields can genuinely drop below 0 (so can real
    // quadratics), hence only finiteness is asserted in general.
    if r1 == 0 && field.degree() == 2 {
        let eps = ctx.exact_identity_tol();
        if lt(&log_hr, &eps.neg()) {
            return Err(TowerError::Internal(format!(
                "negative log(hR) = {} for an imaginary quadratic field",
                to_f64(&log_hr)
            )));
        }
    }
    if log_hr.is_inf() || log_hr.is_nan() {
        return Err(TowerError::Internal("log(hR) is not finite".into()));
    }
    Ok(ClassRegData {
        log_residue,
        log_hr,
    })
}

/// log(h R)/g_K, the level contribution to the Brauer-Siegel ratio.
pub fn bs_numerator(field: &AbelianField, ctx: &mut Ctx, cache: &mut LValueCache) -> Result<Real> {
    if field.genus().is_zero() {
        return Err(TowerError::ZeroGenus);
    }
    let data = log_hr(field, ctx, cache)?;
    Ok(ctx.div(&data.log_hr, field.genus()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{cyclotomic_field, quadratic_field, real_cyclotomic_field};

    fn ctx() -> Ctx {
        Ctx::new(128).unwrap()
    }

    #[test]
    fn chi_minus_4_gives_pi_over_4() {
        let mut ctx = ctx();
        let chi = DirichletCharacter::kronecker(-4).unwrap();
        let lv = l_one(&chi, &mut ctx).unwrap();
        let expect = std::f64::consts::PI / 4.0;
        assert!((to_f64(&lv.value) - expect).abs() < 1e-15);
    }

    #[test]
    fn even_quadratic_mod_5() {
        let mut ctx = ctx();
        let chi = DirichletCharacter::kronecker(5).unwrap();
        let lv = l_one(&chi, &mut ctx).unwrap();
        // (2/sqrt 5) ln((1+sqrt 5)/2)
        let expect = 2.0 / 5f64.sqrt() * ((1.0 + 5f64.sqrt()) / 2.0).ln();
        assert!((to_f64(&lv.value) - expect).abs() < 1e-15);
    }

    #[test]
    fn odd_quadratic_mod_3() {
        let mut ctx = ctx();
        let chi = DirichletCharacter::kronecker(-3).unwrap();
        let lv = l_one(&chi, &mut ctx).unwrap();
        let expect = std::f64::consts::PI / (3.0 * 3f64.sqrt());
        assert!((to_f64(&lv.value) - expect).abs() < 1e-15);
    }

    #[test]
    fn principal_character_rejected() {
        let mut ctx = ctx();
        let chi = DirichletCharacter::principal(5).unwrap();
        assert!(matches!(
            l_one(&chi, &mut ctx),
            Err(TowerError::PrincipalCharacter)
        ));
    }

    #[test]
    fn conjugate_characters_share_l_modulus() {
        let mut ctx = ctx();
        let k = cyclotomic_field(5, &mut ctx).unwrap();
        let quartics: Vec<_> = k
            .primitive_characters()
            .iter()
            .filter(|c| c.order() == 4)
            .collect();
        assert_eq!(quartics.len(), 2);
        let a = l_one(quartics[0], &mut ctx).unwrap();
        let b = l_one(quartics[1], &mut ctx).unwrap();
        let tol = ctx.exact_identity_tol();
        assert!(ctx.close(&a.value, &b.value, &tol));
    }

    #[test]
    fn gaussian_log_hr_vanishes() {
        let mut ctx = ctx();
        let mut cache = LValueCache::new();
        let k = quadratic_field(-4, &mut ctx).unwrap();
        let data = log_hr(&k, &mut ctx, &mut cache).unwrap();
        // h = R = 1: the formula collapses to ln 1 = 0
        assert!(to_f64(&data.log_hr).abs() < 1e-25);
    }

    #[test]
    fn real_quadratic_log_hr_is_negative() {
        let mut ctx = ctx();
        let mut cache = LValueCache::new();
        let k = real_cyclotomic_field(5, &mut ctx).unwrap();
        let data = log_hr(&k, &mut ctx, &mut cache).unwrap();
        // h = 1, R = ln((1+sqrt5)/2) < 1
        let expect = ((1.0 + 5f64.sqrt()) / 2.0f64).ln().ln();
        assert!((to_f64(&data.log_hr) - expect).abs() < 1e-12);
        assert!(to_f64(&data.log_hr) < 0.0);
    }

    #[test]
    fn bs_numerator_zero_genus_rejected() {
        let mut ctx = ctx();
        let mut cache = LValueCache::new();
        let q = crate::fields::rationals(&mut ctx).unwrap();
        assert!(matches!(
            bs_numerator(&q, &mut ctx, &mut cache),
            Err(TowerError::ZeroGenus)
        ));
        let k = quadratic_field(-4, &mut ctx).unwrap();
        let bs = bs_numerator(&k, &mut ctx, &mut cache).unwrap();
        assert!(to_f64(&bs).abs() < 1e-25);
    }
}
