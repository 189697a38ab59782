//! Dirichlet characters with exact root-of-unity values.
//!
//! A character mod m is stored as its full value table on the residues
//! coprime to m; each value is an exact root of unity `(order, num)`
//! meaning `e^{2*pi*i*num/order}`. The exact representation keeps the
//! group law, conductor computation, and Frobenius orders free of any
//! floating-point rounding; conversion to floats happens only inside
//! L-value evaluation.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::error::{Result, TowerError};
use crate::hp::{Complex, Ctx, Real};

/// An exact root of unity `e^{2*pi*i*num/order}` with the fraction
/// `num/order` in lowest terms and `0 <= num < order`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootOfUnity {
    order: u64,
    num: u64,
}

impl RootOfUnity {
    pub fn one() -> Self {
        RootOfUnity { order: 1, num: 0 }
    }

    /// e^{2*pi*i*num/order}; the fraction is reduced on construction.
    pub fn new(num: u64, order: u64) -> Self {
        assert!(order > 0, "root of unity needs a positive order");
        let num = num % order;
        if num == 0 {
            return RootOfUnity { order: 1, num: 0 };
        }
        let g = num.gcd(&order);
        RootOfUnity {
            order: order / g,
            num: num / g,
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn is_one(&self) -> bool {
        self.num == 0
    }

    /// True when the value is exactly -1.
    pub fn is_minus_one(&self) -> bool {
        self.order == 2 && self.num == 1
    }

    pub fn mul(&self, other: &RootOfUnity) -> RootOfUnity {
        // num1/ord1 + num2/ord2 mod 1
        let l = self.order.lcm(&other.order);
        let n = (self.num * (l / self.order) + other.num * (l / other.order)) % l;
        RootOfUnity::new(n, l)
    }

    pub fn conj(&self) -> RootOfUnity {
        RootOfUnity::new(self.order - self.num, self.order)
    }

    pub fn pow(&self, k: u64) -> RootOfUnity {
        let k = k % self.order;
        RootOfUnity::new((self.num as u128 * k as u128 % self.order as u128) as u64, self.order)
    }

    /// Embed into the complex plane at the context precision.
    pub fn to_complex(&self, ctx: &mut Ctx) -> Complex {
        let angle = unit_angle(ctx, self.num, self.order);
        Complex {
            re: ctx.cos(&angle),
            im: ctx.sin(&angle),
        }
    }

    pub fn to_complex_f64(&self) -> (f64, f64) {
        let a = 2.0 * std::f64::consts::PI * (self.num as f64) / (self.order as f64);
        (a.cos(), a.sin())
    }
}

fn unit_angle(ctx: &mut Ctx, num: u64, order: u64) -> Real {
    let pi = ctx.pi();
    let two_pi = ctx.mul(&ctx.from_u64(2), &pi);
    ctx.div(&ctx.mul(&two_pi, &ctx.from_u64(num)), &ctx.from_u64(order))
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization by trial division; desk-scale inputs only.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut k = 0;
            while n % d == 0 {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `Some((p, k))` when n = p^k with p prime and k >= 1.
pub fn as_prime_power(n: u64) -> Option<(u64, u32)> {
    let f = factorize(n);
    if f.len() == 1 {
        Some(f[0])
    } else {
        None
    }
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .map(|(p, k)| p.pow(k - 1) * (p - 1))
        .product::<u64>()
        .max(1)
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, k) in factorize(n) {
        let snapshot = out.clone();
        let mut pw = 1u64;
        for _ in 0..k {
            pw *= p;
            out.extend(snapshot.iter().map(|d| d * pw));
        }
    }
    out.sort_unstable();
    out
}

fn multiplicative_order(a: u64, m: u64, group_order: u64) -> u64 {
    let mut ord = group_order;
    for (p, _) in factorize(group_order) {
        while ord % p == 0 && pow_mod(a, ord / p, m) == 1 {
            ord /= p;
        }
    }
    ord
}

/// One cyclic factor of a local unit group (Z/q)^*, q a prime power.
#[derive(Debug, Clone)]
struct LocalCyclic {
    generator: u64,
    order: u64,
    /// dlog[a] = exponent of a on this generator, u64::MAX off-support.
    dlog: Vec<u64>,
}

/// Structure of (Z/q)^* for a prime power q.
#[derive(Debug, Clone)]
struct LocalUnits {
    modulus: u64,
    factors: Vec<LocalCyclic>,
}

impl LocalUnits {
    fn new(q: u64) -> Self {
        if q <= 2 {
            return LocalUnits {
                modulus: q,
                factors: vec![],
            };
        }
        if q == 4 {
            return LocalUnits {
                modulus: 4,
                factors: vec![cyclic_table(3, 2, 4)],
            };
        }
        if q % 2 == 0 {
            // 2^k, k >= 3: <-1> x <5>
            let half_order = q / 4;
            return LocalUnits {
                modulus: q,
                factors: vec![cyclic_table(q - 1, 2, q), cyclic_table(5, half_order, q)],
            };
        }
        // odd prime power: cyclic
        let (p, _) = as_prime_power(q).expect("odd prime power expected");
        let phi = euler_phi(q);
        let mut g = 2u64;
        loop {
            if g % p != 0 && multiplicative_order(g, q, phi) == phi {
                break;
            }
            g += 1;
        }
        LocalUnits {
            modulus: q,
            factors: vec![cyclic_table(g, phi, q)],
        }
    }

    /// Exponent vector of `a` (already reduced mod modulus, coprime).
    fn dlog(&self, a: u64) -> Vec<u64> {
        if self.factors.is_empty() {
            return vec![];
        }
        if self.factors.len() == 2 {
            // 2^k with k >= 3: a = (-1)^s * 5^j
            let q = self.modulus;
            let five = &self.factors[1];
            if five.dlog[a as usize] != u64::MAX {
                return vec![0, five.dlog[a as usize]];
            }
            let neg = q - a;
            debug_assert!(five.dlog[neg as usize] != u64::MAX);
            return vec![1, five.dlog[neg as usize]];
        }
        vec![self.factors[0].dlog[a as usize]]
    }
}

fn cyclic_table(generator: u64, order: u64, modulus: u64) -> LocalCyclic {
    let mut dlog = vec![u64::MAX; modulus as usize];
    let mut x = 1u64;
    for j in 0..order {
        dlog[x as usize] = j;
        x = ((x as u128 * generator as u128) % modulus as u128) as u64;
    }
    LocalCyclic {
        generator,
        order,
        dlog,
    }
}

/// Structure of (Z/m)^* as a product of cyclic factors across the
/// prime-power parts of m.
#[derive(Debug, Clone)]
pub struct UnitGroup {
    modulus: u64,
    locals: Vec<LocalUnits>,
    units: Vec<u64>,
}

impl UnitGroup {
    pub fn new(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(TowerError::InvalidParameter("modulus must be positive".into()));
        }
        let locals = factorize(m)
            .into_iter()
            .map(|(p, k)| LocalUnits::new(p.pow(k)))
            .collect();
        let units = if m == 1 {
            vec![1]
        } else {
            (1..=m).filter(|a| a.gcd(&m) == 1).collect()
        };
        Ok(UnitGroup { modulus: m, locals, units })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Residues coprime to the modulus, ascending. For m = 1 the single
    /// representative is 1.
    pub fn units(&self) -> &[u64] {
        &self.units
    }

    pub fn order(&self) -> u64 {
        self.units.len() as u64
    }

    /// The dual generators: one character per cyclic factor, sending that
    /// factor's generator to a primitive root of unity of the factor order.
    pub fn dual_generators(&self) -> Vec<DirichletCharacter> {
        let mut out = Vec::new();
        let mut seen = 0usize;
        let all_orders: Vec<u64> = self
            .locals
            .iter()
            .flat_map(|l| l.factors.iter().map(|f| f.order))
            .collect();
        for local in &self.locals {
            for fi in 0..local.factors.len() {
                let idx = seen + fi;
                let mut values = BTreeMap::new();
                for &a in &self.units {
                    let exps = self.full_dlog(a);
                    let e = exps[idx];
                    values.insert(a, RootOfUnity::new(e, all_orders[idx]));
                }
                out.push(
                    DirichletCharacter::from_values(self.modulus, values)
                        .expect("dual generator is a character"),
                );
            }
            seen += local.factors.len();
        }
        let _ = &out; // keep closure order deterministic: locals ascend by prime
        out
    }

    fn full_dlog(&self, a: u64) -> Vec<u64> {
        let mut out = Vec::new();
        for local in &self.locals {
            let r = a % local.modulus;
            out.extend(local.dlog(r));
        }
        out
    }
}

/// A Dirichlet character given by its exact value table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirichletCharacter {
    modulus: u64,
    values: BTreeMap<u64, RootOfUnity>,
    conductor: u64,
    even: bool,
}

impl DirichletCharacter {
    /// Build from a complete value table on the units mod `modulus`,
    /// checking multiplicativity.
    pub fn from_values(modulus: u64, values: BTreeMap<u64, RootOfUnity>) -> Result<Self> {
        if modulus == 0 {
            return Err(TowerError::InvalidCharacter("modulus must be positive".into()));
        }
        let group = UnitGroup::new(modulus)?;
        for &a in group.units() {
            if !values.contains_key(&a) {
                return Err(TowerError::InvalidCharacter(format!(
                    "missing value at residue {a} mod {modulus}"
                )));
            }
        }
        if values.len() != group.units().len() {
            return Err(TowerError::InvalidCharacter(
                "value table has entries outside the unit group".into(),
            ));
        }
        if modulus > 1 && !values[&1].is_one() {
            return Err(TowerError::InvalidCharacter("value at 1 must be 1".into()));
        }
        // Multiplicativity on a generating set propagates to the whole group.
        let gens: Vec<u64> = group
            .locals
            .iter()
            .flat_map(|l| {
                let lm = l.modulus;
                let m = modulus;
                l.factors.iter().map(move |f| {
                    // lift local generator: x = g mod q, x = 1 mod m/q
                    lift_crt(f.generator, lm, m)
                })
            })
            .collect();
        for &g in &gens {
            for &a in group.units() {
                let prod = ((g as u128 * a as u128) % modulus as u128) as u64;
                let prod = if modulus == 1 { 1 } else { prod };
                if values[&prod] != values[&g].mul(&values[&a]) {
                    return Err(TowerError::InvalidCharacter(format!(
                        "not multiplicative at ({g}, {a}) mod {modulus}"
                    )));
                }
            }
        }
        let mut chi = DirichletCharacter {
            modulus,
            values,
            conductor: 1,
            even: true,
        };
        chi.conductor = chi.compute_conductor(&group);
        chi.even = if modulus <= 2 {
            true
        } else {
            chi.values[&(modulus - 1)].is_one()
        };
        Ok(chi)
    }

    /// Character determined by exponents on the dual generators of the
    /// unit group mod m; `exps[i]` is the power of the i-th dual generator.
    pub fn from_dual_exponents(group: &UnitGroup, exps: &[u64]) -> Result<Self> {
        let gens = group.dual_generators();
        if exps.len() != gens.len() {
            return Err(TowerError::InvalidCharacter(format!(
                "expected {} exponents, got {}",
                gens.len(),
                exps.len()
            )));
        }
        let mut values: BTreeMap<u64, RootOfUnity> =
            group.units().iter().map(|&a| (a, RootOfUnity::one())).collect();
        for (chi, &e) in gens.iter().zip(exps) {
            for (&a, v) in values.iter_mut() {
                *v = v.mul(&chi.values[&a].pow(e));
            }
        }
        DirichletCharacter::from_values(group.modulus(), values)
    }

    pub fn principal(modulus: u64) -> Result<Self> {
        let group = UnitGroup::new(modulus)?;
        let values = group.units().iter().map(|&a| (a, RootOfUnity::one())).collect();
        DirichletCharacter::from_values(modulus, values)
    }

    /// Quadratic character attached to a fundamental discriminant `d`
    /// (Kronecker symbol), defined mod |d|.
    pub fn kronecker(d: i64) -> Result<Self> {
        if d == 0 {
            return Err(TowerError::InvalidCharacter("discriminant must be nonzero".into()));
        }
        let m = d.unsigned_abs();
        let group = UnitGroup::new(m)?;
        let mut values = BTreeMap::new();
        for &a in group.units() {
            let k = kronecker_symbol(d, a as i64);
            let v = match k {
                1 => RootOfUnity::one(),
                -1 => RootOfUnity::new(1, 2),
                _ => {
                    return Err(TowerError::InvalidCharacter(format!(
                        "{d} is not a fundamental discriminant (symbol vanishes at {a})"
                    )))
                }
            };
            values.insert(a, v);
        }
        DirichletCharacter::from_values(m, values)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_even(&self) -> bool {
        self.even
    }

    pub fn is_principal(&self) -> bool {
        self.conductor == 1
    }

    /// Value at `a`; `None` means zero (a not coprime to the modulus).
    pub fn value(&self, a: u64) -> Option<RootOfUnity> {
        if self.modulus == 1 {
            return Some(RootOfUnity::one());
        }
        let r = a % self.modulus;
        self.values.get(&r).copied()
    }

    pub fn values(&self) -> &BTreeMap<u64, RootOfUnity> {
        &self.values
    }

    /// Order of the character in the dual group.
    pub fn order(&self) -> u64 {
        self.values
            .values()
            .fold(1u64, |acc, v| acc.lcm(&v.order()))
    }

    pub fn mul(&self, other: &DirichletCharacter) -> Result<DirichletCharacter> {
        if self.modulus != other.modulus {
            return Err(TowerError::InvalidCharacter(format!(
                "modulus mismatch: {} vs {}",
                self.modulus, other.modulus
            )));
        }
        let values = self
            .values
            .iter()
            .map(|(&a, v)| (a, v.mul(&other.values[&a])))
            .collect();
        // Skip revalidation: products of characters are characters.
        let group = UnitGroup::new(self.modulus)?;
        let mut chi = DirichletCharacter {
            modulus: self.modulus,
            values,
            conductor: 1,
            even: true,
        };
        chi.conductor = chi.compute_conductor(&group);
        chi.even = if self.modulus <= 2 {
            true
        } else {
            chi.values[&(self.modulus - 1)].is_one()
        };
        Ok(chi)
    }

    pub fn conj(&self) -> DirichletCharacter {
        let values = self.values.iter().map(|(&a, v)| (a, v.conj())).collect();
        DirichletCharacter {
            modulus: self.modulus,
            values,
            conductor: self.conductor,
            even: self.even,
        }
    }

    fn compute_conductor(&self, group: &UnitGroup) -> u64 {
        if self.modulus == 1 {
            return 1;
        }
        'next: for f in divisors(self.modulus) {
            for &a in group.units() {
                if a % f == 1 && !self.values[&a].is_one() {
                    continue 'next;
                }
            }
            return f;
        }
        self.modulus
    }

    /// The primitive character of conductor `self.conductor()` inducing this
    /// one.
    pub fn primitive(&self) -> Result<DirichletCharacter> {
        let f = self.conductor;
        if f == self.modulus {
            return Ok(self.clone());
        }
        let fg = UnitGroup::new(f)?;
        let mut values = BTreeMap::new();
        for &r in fg.units() {
            // lift r to a residue coprime to the full modulus; the reduction
            // (Z/m)^* -> (Z/f)^* is surjective for f | m, so a lift exists
            // among r, r+f, ..., r+(m/f-1)f.
            let mut lift = None;
            for t in 0..(self.modulus / f) {
                let cand = r + t * f;
                if gcd_u64(cand, self.modulus) == 1 {
                    lift = Some(cand);
                    break;
                }
            }
            let a = lift.expect("surjective reduction provides a coprime lift");
            values.insert(r, self.values[&a]);
        }
        DirichletCharacter::from_values(f, values)
    }

    /// Induce up to a larger modulus `m` (the conductor must divide m).
    pub fn induce(&self, m: u64) -> Result<DirichletCharacter> {
        let prim = self.primitive()?;
        if m % prim.modulus != 0 {
            return Err(TowerError::InvalidCharacter(format!(
                "conductor {} does not divide target modulus {m}",
                prim.modulus
            )));
        }
        let group = UnitGroup::new(m)?;
        let values = group
            .units()
            .iter()
            .map(|&a| {
                let v = prim.value(a).expect("a coprime to m is coprime to the conductor");
                (a, v)
            })
            .collect();
        DirichletCharacter::from_values(m, values)
    }

    /// Stable canonical encoding of the underlying primitive character,
    /// used for set membership and deterministic ordering.
    pub fn canonical_key(&self) -> Vec<u64> {
        let prim = self.primitive().expect("primitivization is total");
        let mut key = vec![prim.modulus];
        for (&a, v) in &prim.values {
            key.push(a);
            key.push(v.order());
            key.push(v.numerator());
        }
        key
    }
}

fn lift_crt(local_gen: u64, local_mod: u64, full_mod: u64) -> u64 {
    if local_mod == full_mod {
        return local_gen % full_mod;
    }
    let other = full_mod / local_mod;
    // x = local_gen mod local_mod, x = 1 mod other
    for t in 0..local_mod {
        let cand = 1 + t * other;
        if cand % local_mod == local_gen % local_mod {
            return cand % full_mod;
        }
    }
    unreachable!("CRT lift exists for coprime moduli")
}

/// Kronecker symbol (a|n) extended to all integers, computed by the
/// standard reciprocity algorithm.
pub fn kronecker_symbol(mut a: i64, mut n: i64) -> i64 {
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut result = 1i64;
    if n < 0 {
        n = -n;
        if a < 0 {
            result = -result;
        }
    }
    // factor out twos from n
    let mut twos = 0;
    while n % 2 == 0 {
        n /= 2;
        twos += 1;
    }
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        let am8 = ((a % 8) + 8) % 8;
        if twos % 2 == 1 && (am8 == 3 || am8 == 5) {
            result = -result;
        }
    }
    a = ((a % n) + n) % n;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let nm8 = n % 8;
            if nm8 == 3 || nm8 == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Closure of a character list under multiplication; all inputs must share
/// one modulus. The result is sorted by canonical key, principal first.
pub fn generate_group(gens: &[DirichletCharacter]) -> Result<Vec<DirichletCharacter>> {
    if gens.is_empty() {
        return Err(TowerError::InvalidCharacter("empty generator list".into()));
    }
    let m = gens[0].modulus();
    let mut elems: BTreeMap<Vec<u64>, DirichletCharacter> = BTreeMap::new();
    let principal = DirichletCharacter::principal(m)?;
    elems.insert(encode_table(&principal), principal);
    let mut frontier: Vec<DirichletCharacter> = vec![];
    for g in gens {
        if g.modulus() != m {
            return Err(TowerError::InvalidCharacter(format!(
                "generators must share one modulus ({} vs {m})",
                g.modulus()
            )));
        }
        if elems.insert(encode_table(g), g.clone()).is_none() {
            frontier.push(g.clone());
        }
    }
    while let Some(chi) = frontier.pop() {
        let snapshot: Vec<DirichletCharacter> = elems.values().cloned().collect();
        for other in snapshot {
            let prod = chi.mul(&other)?;
            let key = encode_table(&prod);
            if !elems.contains_key(&key) {
                elems.insert(key, prod.clone());
                frontier.push(prod);
            }
        }
    }
    Ok(elems.into_values().collect())
}

fn encode_table(chi: &DirichletCharacter) -> Vec<u64> {
    let mut key = Vec::with_capacity(1 + 3 * chi.values.len());
    // is_principal first so the trivial character sorts to the front
    key.push(if chi.is_principal() { 0 } else { 1 });
    for (&a, v) in &chi.values {
        key.push(a);
        key.push(v.order());
        key.push(v.numerator());
    }
    key
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_of_unity_normalizes() {
        let a = RootOfUnity::new(2, 8);
        assert_eq!((a.numerator(), a.order()), (1, 4));
        let b = RootOfUnity::new(6, 8);
        assert_eq!(a.mul(&b), RootOfUnity::one());
        assert!(RootOfUnity::new(4, 8).is_minus_one());
    }

    #[test]
    fn unit_group_mod_8_has_two_factors() {
        let g = UnitGroup::new(8).unwrap();
        assert_eq!(g.order(), 4);
        let gens = g.dual_generators();
        assert_eq!(gens.len(), 2);
        for chi in &gens {
            assert_eq!(chi.order(), 2);
        }
    }

    #[test]
    fn chi_minus_4_is_odd_with_conductor_4() {
        let chi = DirichletCharacter::kronecker(-4).unwrap();
        assert_eq!(chi.modulus(), 4);
        assert_eq!(chi.conductor(), 4);
        assert!(!chi.is_even());
        assert_eq!(chi.value(3).unwrap(), RootOfUnity::new(1, 2));
        assert!(chi.value(2).is_none());
    }

    #[test]
    fn conductor_of_induced_character_drops_back() {
        let chi3 = DirichletCharacter::kronecker(-3).unwrap();
        let lifted = chi3.induce(9).unwrap();
        assert_eq!(lifted.modulus(), 9);
        assert_eq!(lifted.conductor(), 3);
        let prim = lifted.primitive().unwrap();
        assert_eq!(prim.modulus(), 3);
        assert_eq!(prim.canonical_key(), chi3.canonical_key());
    }

    #[test]
    fn full_group_mod_5_is_cyclic_of_order_4() {
        let g = UnitGroup::new(5).unwrap();
        let gens = g.dual_generators();
        assert_eq!(gens.len(), 1);
        let group = generate_group(&gens).unwrap();
        assert_eq!(group.len(), 4);
        let orders: Vec<u64> = group.iter().map(|c| c.order()).collect();
        let mut sorted = orders.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2, 4, 4]);
    }

    #[test]
    fn kronecker_symbol_matches_legendre_for_odd_primes() {
        // (a|7) via Euler's criterion
        for a in 1..7i64 {
            let euler = pow_mod(a as u64, 3, 7); // (7-1)/2 = 3
            let expect = if euler == 1 { 1 } else { -1 };
            assert_eq!(kronecker_symbol(a, 7), expect, "a={a}");
        }
    }

    #[test]
    fn rejects_non_multiplicative_table() {
        // corrupt one value of a genuine character mod 5
        let g = UnitGroup::new(5).unwrap();
        let chi = &g.dual_generators()[0];
        let mut values = chi.values().clone();
        values.insert(2, RootOfUnity::new(1, 2));
        let r = DirichletCharacter::from_values(5, values);
        assert!(matches!(r, Err(TowerError::InvalidCharacter(_))));
    }

    #[test]
    fn principal_mod_1_works() {
        let chi = DirichletCharacter::principal(1).unwrap();
        assert!(chi.is_principal());
        assert_eq!(chi.conductor(), 1);
        assert!(chi.value(7).unwrap().is_one());
    }
}
