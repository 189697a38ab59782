//! High-precision real arithmetic context.
//!
//! All transcendental evaluation in this crate goes through [`Ctx`], which
//! carries the configured mantissa width, the rounding mode, and the
//! constants cache. Computations run with a fixed number of guard bits on
//! top of the configured precision so that identity checks at relative
//! tolerance `2^-100` (the default contract at 128 bits) are meaningful
//! after summation over a few thousand terms.

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};

use crate::error::{Result, TowerError};

pub type Real = BigFloat;

/// Guard bits added on top of the configured precision for internal work.
const GUARD_BITS: usize = 32;

pub struct Ctx {
    /// Configured mantissa width in bits (the contract precision).
    bits: usize,
    /// Working precision: `bits + GUARD_BITS`.
    wp: usize,
    rm: RoundingMode,
    cc: Consts,
}

impl Ctx {
    pub fn new(precision_bits: usize) -> Result<Self> {
        if precision_bits < 64 {
            return Err(TowerError::InvalidParameter(format!(
                "precision must be at least 64 bits, got {precision_bits}"
            )));
        }
        let cc = Consts::new()
            .map_err(|e| TowerError::Internal(format!("constants cache: {e:?}")))?;
        Ok(Ctx {
            bits: precision_bits,
            wp: precision_bits + GUARD_BITS,
            rm: RoundingMode::ToEven,
            cc,
        })
    }

    pub fn precision_bits(&self) -> usize {
        self.bits
    }

    /// A context with doubled mantissa, for precision escalation.
    pub fn escalated(&self) -> Result<Ctx> {
        Ctx::new(self.bits * 2)
    }

    pub fn zero(&self) -> Real {
        BigFloat::new(self.wp)
    }

    pub fn one(&self) -> Real {
        BigFloat::from_u64(1, self.wp)
    }

    pub fn from_u64(&self, v: u64) -> Real {
        BigFloat::from_u64(v, self.wp)
    }

    pub fn from_i64(&self, v: i64) -> Real {
        BigFloat::from_i64(v, self.wp)
    }

    pub fn from_f64(&self, v: f64) -> Real {
        BigFloat::from_f64(v, self.wp)
    }

    pub fn parse(&mut self, s: &str) -> Result<Real> {
        let v = BigFloat::parse(s, Radix::Dec, self.wp, self.rm, &mut self.cc);
        if v.is_nan() {
            return Err(TowerError::ParseError(format!("not a decimal number: {s:?}")));
        }
        Ok(v)
    }

    pub fn pi(&mut self) -> Real {
        self.cc.pi(self.wp, self.rm)
    }

    /// ln(2π), used by the archimedean terms of the invariants.
    pub fn ln_two_pi(&mut self) -> Real {
        let two_pi = self.pi().mul(&self.from_u64(2), self.wp, self.rm);
        self.ln(&two_pi)
    }

    pub fn ln2(&mut self) -> Real {
        self.ln(&self.from_u64(2))
    }

    pub fn add(&self, a: &Real, b: &Real) -> Real {
        a.add(b, self.wp, self.rm)
    }

    pub fn sub(&self, a: &Real, b: &Real) -> Real {
        a.sub(b, self.wp, self.rm)
    }

    pub fn mul(&self, a: &Real, b: &Real) -> Real {
        a.mul(b, self.wp, self.rm)
    }

    pub fn div(&self, a: &Real, b: &Real) -> Real {
        a.div(b, self.wp, self.rm)
    }

    pub fn ln(&mut self, a: &Real) -> Real {
        a.ln(self.wp, self.rm, &mut self.cc)
    }

    pub fn exp(&mut self, a: &Real) -> Real {
        a.exp(self.wp, self.rm, &mut self.cc)
    }

    pub fn sin(&mut self, a: &Real) -> Real {
        a.sin(self.wp, self.rm, &mut self.cc)
    }

    pub fn cos(&mut self, a: &Real) -> Real {
        a.cos(self.wp, self.rm, &mut self.cc)
    }

    pub fn sqrt(&self, a: &Real) -> Real {
        a.sqrt(self.wp, self.rm)
    }

    pub fn powi(&self, a: &Real, n: usize) -> Real {
        a.powi(n, self.wp, self.rm)
    }

    /// ln(n) for an exact integer argument.
    pub fn ln_u64(&mut self, n: u64) -> Real {
        self.ln(&self.from_u64(n))
    }

    /// ln(q / (q - 1)) where q = base^exp, computed without forming q when
    /// the power is large: ln(q/(q-1)) = -ln(1 - q^{-1}).
    pub fn ln_q_over_q_minus_1(&mut self, base: u64, exp: u64) -> Result<Real> {
        if base < 2 {
            return Err(TowerError::InvalidParameter(format!(
                "norm must be at least 2, got {base}"
            )));
        }
        // q^{-1} = exp(-exp * ln base)
        let neg_ln_q = self
            .ln_u64(base)
            .mul(&self.from_u64(exp), self.wp, self.rm)
            .neg();
        let inv_q = self.exp(&neg_ln_q);
        let one_minus = self.sub(&self.one(), &inv_q);
        if one_minus.is_zero() || one_minus.is_negative() {
            // q so large that 1 - 1/q rounds to 1; the term is below any
            // tolerance in use, return exact zero.
            return Ok(self.zero());
        }
        Ok(self.ln(&one_minus).neg())
    }

    /// 2^-100 at the default contract precision; scaled if precision differs.
    pub fn exact_identity_tol(&self) -> Real {
        let shift = self.bits.saturating_sub(28).max(64) as i64;
        // 2^-(bits - 28): for 128 bits this is 2^-100.
        let mut t = self.one();
        t.set_exponent((1 - shift) as astro_float::Exponent);
        t
    }

    /// |a - b| <= tol * max(1, |a|, |b|).
    pub fn close(&self, a: &Real, b: &Real, tol: &Real) -> bool {
        let diff = self.sub(a, b).abs();
        let mut scale = self.one();
        let aa = a.abs();
        let bb = b.abs();
        if gt(&aa, &scale) {
            scale = aa;
        }
        if gt(&bb, &scale) {
            scale = bb;
        }
        let bound = self.mul(tol, &scale);
        !gt(&diff, &bound)
    }

    /// Format with the given number of significant decimal digits,
    /// deterministic across runs. Zero renders as "0".
    pub fn format_sig(&mut self, v: &Real, digits: usize) -> String {
        if v.is_zero() {
            return "0".to_string();
        }
        if v.is_nan() {
            return "nan".to_string();
        }
        if v.is_inf() {
            return if v.is_inf_pos() { "inf" } else { "-inf" }.to_string();
        }
        let (sign, mant, exp) = v
            .convert_to_radix(Radix::Dec, self.rm, &mut self.cc)
            .expect("finite value converts to decimal");
        format_decimal(sign, &mant, exp as i64, digits)
    }
}

/// Value = sign * 0.d1 d2 d3 ... * 10^exp, rounded to `digits` significant
/// digits and rendered as scientific notation `d.ddd...e(+|-)xx`.
fn format_decimal(sign: Sign, mant: &[u8], exp: i64, digits: usize) -> String {
    let mut ds: Vec<u8> = mant.to_vec();
    // Strip leading zeros (convert_to_radix keeps mantissa normalized, but be safe).
    let lead = ds.iter().take_while(|&&d| d == 0).count();
    ds.drain(..lead);
    let mut exp = exp - lead as i64;
    if ds.is_empty() {
        return "0".to_string();
    }
    if ds.len() > digits {
        let round_up = ds[digits] >= 5;
        ds.truncate(digits);
        if round_up {
            let mut i = digits;
            loop {
                if i == 0 {
                    ds.insert(0, 1);
                    ds.truncate(digits);
                    exp += 1;
                    break;
                }
                i -= 1;
                if ds[i] == 9 {
                    ds[i] = 0;
                } else {
                    ds[i] += 1;
                    break;
                }
            }
        }
    } else {
        ds.resize(digits, 0);
    }
    let mut out = String::with_capacity(digits + 8);
    if sign == Sign::Neg {
        out.push('-');
    }
    out.push((b'0' + ds[0]) as char);
    out.push('.');
    for &d in &ds[1..] {
        out.push((b'0' + d) as char);
    }
    // Leading digit sits at 10^(exp-1).
    let e10 = exp - 1;
    out.push('e');
    if e10 >= 0 {
        out.push('+');
    }
    out.push_str(&e10.to_string());
    out
}

pub fn gt(a: &Real, b: &Real) -> bool {
    matches!(a.cmp(b), Some(c) if c > 0)
}

pub fn lt(a: &Real, b: &Real) -> bool {
    matches!(a.cmp(b), Some(c) if c < 0)
}

/// Lossy conversion for diagnostics and the FFI convenience getters.
pub fn to_f64(v: &Real) -> f64 {
    if v.is_zero() {
        return 0.0;
    }
    if v.is_nan() {
        return f64::NAN;
    }
    if v.is_inf() {
        return if v.is_inf_pos() {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        };
    }
    let (words, _n, sign, exp, _) = v.as_raw_parts().expect("finite value has raw parts");
    // Mantissa words are little-endian; value = 0.mant * 2^exp.
    let mut acc = 0.0f64;
    let top = words.len();
    for (i, &w) in words.iter().enumerate().skip(top.saturating_sub(2)) {
        let bit_offset = ((top - i) * 64) as i32;
        acc += (w as f64) * 2f64.powi(exp - bit_offset);
    }
    if sign == Sign::Neg {
        acc = -acc;
    }
    acc
}

/// Complex value backed by high-precision reals; only what the character
/// sums need.
#[derive(Debug, Clone)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn zero(ctx: &Ctx) -> Self {
        Complex {
            re: ctx.zero(),
            im: ctx.zero(),
        }
    }

    pub fn add(&self, other: &Complex, ctx: &Ctx) -> Complex {
        Complex {
            re: ctx.add(&self.re, &other.re),
            im: ctx.add(&self.im, &other.im),
        }
    }

    pub fn mul(&self, other: &Complex, ctx: &Ctx) -> Complex {
        Complex {
            re: ctx.sub(&ctx.mul(&self.re, &other.re), &ctx.mul(&self.im, &other.im)),
            im: ctx.add(&ctx.mul(&self.re, &other.im), &ctx.mul(&self.im, &other.re)),
        }
    }

    pub fn scale(&self, s: &Real, ctx: &Ctx) -> Complex {
        Complex {
            re: ctx.mul(&self.re, s),
            im: ctx.mul(&self.im, s),
        }
    }

    pub fn modulus(&self, ctx: &Ctx) -> Real {
        let m2 = ctx.add(&ctx.mul(&self.re, &self.re), &ctx.mul(&self.im, &self.im));
        ctx.sqrt(&m2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_rounds_and_carries() {
        let mut ctx = Ctx::new(128).unwrap();
        let x = ctx.parse("1.23456789").unwrap();
        assert_eq!(ctx.format_sig(&x, 5), "1.2346e+0");
        let y = ctx.parse("9.99999").unwrap();
        assert_eq!(ctx.format_sig(&y, 3), "1.00e+1");
        let z = ctx.parse("-0.000123").unwrap();
        assert_eq!(ctx.format_sig(&z, 3), "-1.23e-4");
        assert_eq!(ctx.format_sig(&ctx.zero(), 10), "0");
    }

    #[test]
    fn format_is_stable_across_runs() {
        let mut a = Ctx::new(128).unwrap();
        let mut b = Ctx::new(128).unwrap();
        let x = a.ln(&a.from_u64(2));
        let y = b.ln(&b.from_u64(2));
        assert_eq!(a.format_sig(&x, 30), b.format_sig(&y, 30));
        assert_eq!(&a.format_sig(&x, 30)[..10], "6.93147180");
    }

    #[test]
    fn to_f64_round_trips_small_values() {
        let ctx = Ctx::new(128).unwrap();
        for v in [0.0, 1.0, -2.5, 0.125, 1e10, -3.0e-7] {
            let x = ctx.from_f64(v);
            assert_eq!(to_f64(&x), v);
        }
    }

    #[test]
    fn ln_q_term_handles_huge_powers() {
        let mut ctx = Ctx::new(128).unwrap();
        // ln(2/(2-1)) = ln 2
        let t = ctx.ln_q_over_q_minus_1(2, 1).unwrap();
        let l2 = ctx.ln2();
        assert!(ctx.close(&t, &l2, &ctx.exact_identity_tol()));
        // Gigantic power collapses to zero rather than erroring.
        let tiny = ctx.ln_q_over_q_minus_1(2, 100_000).unwrap();
        assert!(tiny.is_zero() || lt(&tiny, &ctx.parse("1e-1000").unwrap()));
    }

    #[test]
    fn close_uses_absolute_floor_near_zero() {
        let mut ctx = Ctx::new(128).unwrap();
        let a = ctx.parse("1e-38").unwrap();
        let b = ctx.zero();
        let tol = ctx.parse("1e-20").unwrap();
        assert!(ctx.close(&a, &b, &tol));
        let c = ctx.parse("1e-19").unwrap();
        assert!(!ctx.close(&c, &b, &tol));
    }
}
