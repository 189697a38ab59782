//! Prime splitting in abelian fields and discriminant-exponent bookkeeping.
//!
//! Splitting is computed character-theoretically: the inertia subgroup at p
//! is cut out by the characters ramified at p, and the Frobenius order is
//! read off the values of the unramified characters at p. No ideal
//! factorization happens anywhere.

use num_bigint::BigUint;
use num_integer::Integer;
use serde::Serialize;

use crate::chars::{as_prime_power, is_prime};
use crate::error::{Result, TowerError};
use crate::fields::AbelianField;
use crate::hp::{Ctx, Real};

/// Decomposition type (e, f, g) of a rational prime in an abelian field:
/// ramification index, inertia degree, number of primes above.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SplitData {
    pub p: u64,
    pub e: u64,
    pub f: u64,
    pub g: u64,
}

impl SplitData {
    pub fn degree(&self) -> u64 {
        self.e * self.f * self.g
    }
}

/// Norm classes indexing the prime-counting sets: a rational prime power,
/// or one of the two archimedean kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum NormClass {
    Real,
    Complex,
    /// p^k with p prime, k >= 1.
    PrimePower { p: u64, k: u32 },
}

impl NormClass {
    pub fn prime_power(p: u64, k: u32) -> Result<NormClass> {
        if !is_prime(p) || k == 0 {
            return Err(TowerError::InvalidParameter(format!(
                "{p}^{k} is not a prime power"
            )));
        }
        Ok(NormClass::PrimePower { p, k })
    }

    pub fn from_value(q: u64) -> Result<NormClass> {
        match as_prime_power(q) {
            Some((p, k)) => Ok(NormClass::PrimePower { p, k }),
            None => Err(TowerError::InvalidParameter(format!(
                "{q} is not a prime power"
            ))),
        }
    }
}

/// Splitting of the rational prime p in K, from character data.
pub fn split_prime(field: &AbelianField, p: u64) -> Result<SplitData> {
    if !is_prime(p) {
        return Err(TowerError::InvalidParameter(format!("{p} is not prime")));
    }
    let d = field.degree();
    let unram: Vec<_> = field
        .primitive_characters()
        .iter()
        .filter(|c| c.conductor() % p != 0)
        .collect();
    let e = d / unram.len() as u64;
    let mut f = 1u64;
    for chi in &unram {
        let v = chi
            .value(p)
            .expect("p is coprime to the conductor of an unramified character");
        f = f.lcm(&v.order());
    }
    let g = d / (e * f);
    debug_assert_eq!(e * f * g, d);
    Ok(SplitData { p, e, f, g })
}

/// Number of primes of K with norm alpha. Archimedean classes return the
/// signature; a prime power p^k requires p within the caller's bound.
pub fn count_phi(field: &AbelianField, alpha: NormClass, prime_bound: u64) -> Result<u64> {
    match alpha {
        NormClass::Real => Ok(field.signature().0),
        NormClass::Complex => Ok(field.signature().1),
        NormClass::PrimePower { p, k } => {
            if p > prime_bound {
                return Err(TowerError::InvalidParameter(format!(
                    "prime {p} exceeds the configured bound {prime_bound}"
                )));
            }
            let s = split_prime(field, p)?;
            Ok(if s.f == k as u64 { s.g } else { 0 })
        }
    }
}

/// Ramification record of one rational prime in a relative extension L/K:
/// relative ramification index, wild exponent beta, and the data needed to
/// reassemble the exponent of Np in N_{K/Q} D_{L/K}.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RamExponent {
    pub prime: u64,
    /// Relative ramification index e of p in L/K.
    pub e: u64,
    /// Wild contribution; zero exactly for tame primes.
    pub beta: u64,
    /// [L:K]
    pub index: u64,
    /// Inertia degree of p in the base K over Q (norm of a base prime is
    /// p^base_f).
    pub base_f: u64,
    /// Number of primes of K above p.
    pub base_g: u64,
}

impl RamExponent {
    /// The exponent [L:K](1 - 1/e + beta/e) of one base-prime norm in
    /// N_{K/Q} D_{L/K}, as a reduced rational (num, den).
    pub fn disc_exponent(&self) -> (u64, u64) {
        let num = self.index * (self.e - 1 + self.beta);
        let den = self.e;
        let g = num.gcd(&den);
        (num / g, den / g)
    }

    pub fn is_tame(&self) -> bool {
        self.beta == 0
    }

    /// Exponent of the rational prime p itself in N_{K/Q} D_{L/K}.
    pub fn rational_valuation(&self) -> Result<u64> {
        let (num, den) = self.disc_exponent();
        if den != 1 {
            return Err(TowerError::NonIntegralExponent(format!(
                "prime {}: exponent {num}/{den}",
                self.prime
            )));
        }
        Ok(self.base_g * self.base_f * num)
    }
}

#[derive(Debug)]
pub struct DiscFormula {
    /// Exact value of N_{K/Q} D_{L/K}.
    pub norm_disc: BigUint,
    /// g_{L/K} = (1/2) ln N_{K/Q} D_{L/K}.
    pub rel_genus: Real,
    /// g_L/[L:K] = g_K + (1/2) sum (1 - 1/e_i + beta_i/e_i) ln Np_i.
    pub per_degree_genus: Real,
}

/// Evaluate the discriminant-norm product over a ramified-prime list.
/// `norms[i]` is the norm of the i-th base prime (a prime power), matching
/// `rams[i]`. An empty list is the unramified extension with product 1.
pub fn disc_formula(
    rams: &[RamExponent],
    norms: &[u64],
    base_genus: &Real,
    ctx: &mut Ctx,
) -> Result<DiscFormula> {
    if rams.len() != norms.len() {
        return Err(TowerError::InvalidParameter(format!(
            "{} ramification records but {} norms",
            rams.len(),
            norms.len()
        )));
    }
    let mut index = None;
    let mut norm_disc = BigUint::from(1u32);
    let mut half_sum = ctx.zero();
    for (ram, &q) in rams.iter().zip(norms) {
        if as_prime_power(q).is_none() {
            return Err(TowerError::InvalidParameter(format!(
                "norm {q} is not a prime power"
            )));
        }
        match index {
            None => index = Some(ram.index),
            Some(ix) if ix == ram.index => {}
            Some(ix) => {
                return Err(TowerError::InvalidParameter(format!(
                    "mixed extension degrees {ix} and {}",
                    ram.index
                )))
            }
        }
        let (num, den) = ram.disc_exponent();
        if den != 1 {
            return Err(TowerError::NonIntegralExponent(format!(
                "prime {}: exponent {num}/{den} of norm {q}",
                ram.prime
            )));
        }
        norm_disc *= BigUint::from(q).pow(num as u32);
        // (1 - 1/e + beta/e) ln q  =  (num/index) ln q
        let ln_q = ctx.ln_u64(q);
        let term = ctx.div(
            &ctx.mul(&ctx.from_u64(num), &ln_q),
            &ctx.from_u64(ram.index),
        );
        half_sum = ctx.add(&half_sum, &term);
    }
    let half = ctx.div(&ctx.one(), &ctx.from_u64(2));
    let half_sum = ctx.mul(&half_sum, &half);
    let rel_genus = if let Some(ix) = index {
        ctx.mul(&half_sum, &ctx.from_u64(ix))
    } else {
        ctx.zero()
    };
    let per_degree_genus = ctx.add(base_genus, &half_sum);
    Ok(DiscFormula {
        norm_disc,
        rel_genus,
        per_degree_genus,
    })
}

/// Solve the wild exponent beta of p in L/K by inverting the discriminant
/// exponent formula against the conductor-discriminant valuation.
///
/// Unramified primes come back with e = 1, beta = 0, and a zero exponent;
/// they carry no entry in any ramified-prime list.
pub fn solve_beta(l: &AbelianField, k: &AbelianField, p: u64) -> Result<RamExponent> {
    let index = l.index_over(k)?;
    let vl = l.disc_valuation(p);
    let vk = k.disc_valuation(p);
    // valuation of the rational prime p in N_{K/Q} D_{L/K} through
    // |D_L| = |D_K|^{[L:K]} * N_{K/Q} D_{L/K}
    let scaled = index
        .checked_mul(vk)
        .ok_or_else(|| TowerError::Internal("valuation overflow".into()))?;
    if vl < scaled {
        return Err(TowerError::InconsistentRamification(format!(
            "negative relative valuation at {p}: {vl} < {index}*{vk}"
        )));
    }
    let vrel = vl - scaled;

    let sl = split_prime(l, p)?;
    let sk = split_prime(k, p)?;
    if sl.e % sk.e != 0 || sl.f % sk.f != 0 {
        return Err(TowerError::InconsistentRamification(format!(
            "splitting at {p} does not refine the base: L=({},{}), K=({},{})",
            sl.e, sl.f, sk.e, sk.f
        )));
    }
    let e = sl.e / sk.e;

    if e == 1 {
        if vrel != 0 {
            return Err(TowerError::InconsistentRamification(format!(
                "prime {p} unramified in L/K but carries discriminant valuation {vrel}"
            )));
        }
        return Ok(RamExponent {
            prime: p,
            e: 1,
            beta: 0,
            index,
            base_f: sk.f,
            base_g: sk.g,
        });
    }

    // vrel = base_g * base_f * index * (e - 1 + beta)/e
    let weight = sk.g * sk.f * index;
    let num = (vrel as u128) * (e as u128);
    let den = weight as u128;
    if num % den != 0 {
        return Err(TowerError::InconsistentRamification(format!(
            "prime {p}: non-integral (e-1+beta) = {num}/{den}"
        )));
    }
    let e_minus_1_plus_beta = (num / den) as u64;
    if e_minus_1_plus_beta + 1 < e {
        return Err(TowerError::InconsistentRamification(format!(
            "prime {p}: negative beta from valuation {vrel}"
        )));
    }
    let beta = e_minus_1_plus_beta + 1 - e;
    let tame = e % p != 0;
    if tame != (beta == 0) {
        return Err(TowerError::InconsistentRamification(format!(
            "prime {p}: beta = {beta} contradicts tameness (e = {e})"
        )));
    }
    Ok(RamExponent {
        prime: p,
        e,
        beta,
        index,
        base_f: sk.f,
        base_g: sk.g,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{cyclotomic_field, quadratic_field, rationals};
    use crate::hp::{to_f64, Ctx};

    fn ctx() -> Ctx {
        Ctx::new(128).unwrap()
    }

    #[test]
    fn gaussian_splitting_examples() {
        let mut ctx = ctx();
        let k = quadratic_field(-4, &mut ctx).unwrap();
        // 7 is inert: x^2 + 1 irreducible mod 7
        let s7 = split_prime(&k, 7).unwrap();
        assert_eq!((s7.e, s7.f, s7.g), (1, 2, 1));
        // 2 ramifies
        let s2 = split_prime(&k, 2).unwrap();
        assert_eq!((s2.e, s2.f, s2.g), (2, 1, 1));
        // 5 splits: -1 is a square mod 5
        let s5 = split_prime(&k, 5).unwrap();
        assert_eq!((s5.e, s5.f, s5.g), (1, 1, 2));
    }

    #[test]
    fn fifth_cyclotomic_complete_splitting_at_11() {
        let mut ctx = ctx();
        let k = cyclotomic_field(5, &mut ctx).unwrap();
        let s = split_prime(&k, 11).unwrap();
        assert_eq!((s.e, s.f, s.g), (1, 1, 4));
        // 2 has order 4 mod 5
        let s2 = split_prime(&k, 2).unwrap();
        assert_eq!((s2.e, s2.f, s2.g), (1, 4, 1));
        // 5 is totally ramified
        let s5 = split_prime(&k, 5).unwrap();
        assert_eq!((s5.e, s5.f, s5.g), (4, 1, 1));
    }

    #[test]
    fn phi_counts_match_split_data() {
        let mut ctx = ctx();
        let k = quadratic_field(-4, &mut ctx).unwrap();
        assert_eq!(count_phi(&k, NormClass::Complex, 100).unwrap(), 1);
        assert_eq!(count_phi(&k, NormClass::Real, 100).unwrap(), 0);
        let a49 = NormClass::from_value(49).unwrap();
        assert_eq!(count_phi(&k, a49, 100).unwrap(), 1);
        let a7 = NormClass::from_value(7).unwrap();
        assert_eq!(count_phi(&k, a7, 100).unwrap(), 0);
        let l = cyclotomic_field(5, &mut ctx).unwrap();
        let a11 = NormClass::from_value(11).unwrap();
        assert_eq!(count_phi(&l, a11, 100).unwrap(), 4);
    }

    #[test]
    fn phi_rejects_primes_beyond_bound() {
        let mut ctx = ctx();
        let k = quadratic_field(-4, &mut ctx).unwrap();
        let big = NormClass::from_value(101).unwrap();
        assert!(count_phi(&k, big, 100).is_err());
    }

    #[test]
    fn beta_zero_for_tame_and_one_for_gaussian_two() {
        let mut ctx = ctx();
        let q = rationals(&mut ctx).unwrap();
        let m3 = quadratic_field(-3, &mut ctx).unwrap();
        let r = solve_beta(&m3, &q, 3).unwrap();
        assert_eq!((r.e, r.beta), (2, 0));
        assert!(r.is_tame());
        assert_eq!(r.rational_valuation().unwrap(), 1);

        let i = quadratic_field(-4, &mut ctx).unwrap();
        let r2 = solve_beta(&i, &q, 2).unwrap();
        assert_eq!((r2.e, r2.beta), (2, 1));
        assert!(!r2.is_tame());
        assert_eq!(r2.rational_valuation().unwrap(), 2);
    }

    #[test]
    fn unramified_prime_solves_to_zero_exponent() {
        let mut ctx = ctx();
        let q = rationals(&mut ctx).unwrap();
        let z9 = cyclotomic_field(9, &mut ctx).unwrap();
        let r = solve_beta(&z9, &q, 2).unwrap();
        assert_eq!((r.e, r.beta), (1, 0));
        assert_eq!(r.rational_valuation().unwrap(), 0);
    }

    #[test]
    fn disc_formula_examples() {
        let mut ctx = ctx();
        let g0 = ctx.zero();
        // Q(sqrt-3)/Q: one tame prime 3, e = 2
        let ram = RamExponent {
            prime: 3,
            e: 2,
            beta: 0,
            index: 2,
            base_f: 1,
            base_g: 1,
        };
        let out = disc_formula(&[ram], &[3], &g0, &mut ctx).unwrap();
        assert_eq!(out.norm_disc, BigUint::from(3u32));
        // Q(i)/Q: 2 is wild with beta = 1
        let ram2 = RamExponent {
            prime: 2,
            e: 2,
            beta: 1,
            index: 2,
            base_f: 1,
            base_g: 1,
        };
        let out2 = disc_formula(&[ram2], &[2], &g0, &mut ctx).unwrap();
        assert_eq!(out2.norm_disc, BigUint::from(4u32));
        assert!((to_f64(&out2.rel_genus) - 4f64.ln() / 2.0).abs() < 1e-12);
        // empty list: unramified
        let out3 = disc_formula(&[], &[], &g0, &mut ctx).unwrap();
        assert_eq!(out3.norm_disc, BigUint::from(1u32));
        assert!(out3.rel_genus.is_zero());
    }

    #[test]
    fn non_integral_exponent_rejected() {
        let mut ctx = ctx();
        let g0 = ctx.zero();
        // index 3 with e = 2 makes the exponent 3/2 * 1 non-integral
        let bad = RamExponent {
            prime: 3,
            e: 2,
            beta: 0,
            index: 3,
            base_f: 1,
            base_g: 1,
        };
        let r = disc_formula(&[bad], &[3], &g0, &mut ctx);
        assert!(matches!(r, Err(TowerError::NonIntegralExponent(_))));
    }
}
