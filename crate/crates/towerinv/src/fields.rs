//! Abelian number fields presented by finite groups of Dirichlet characters.
//!
//! A field is identified with its character group; degree, signature,
//! discriminant (conductor-discriminant product), genus, and the number of
//! roots of unity are all read off the group. There is no polynomial or
//! ring-of-integers representation anywhere.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::chars::{generate_group, DirichletCharacter, RootOfUnity, UnitGroup};
use crate::error::{Result, TowerError};
use crate::hp::{Ctx, Real};

#[derive(Debug, Clone)]
pub struct AbelianField {
    label: String,
    modulus: u64,
    /// Character group at the field modulus, principal first, closed under
    /// multiplication.
    group: Vec<DirichletCharacter>,
    /// Primitive versions of the group elements, parallel to `group`.
    primitive: Vec<DirichletCharacter>,
    degree: u64,
    r1: u64,
    r2: u64,
    abs_disc: BigUint,
    genus: Real,
    roots_of_unity: u64,
}

/// Construct the abelian field cut out by the group generated by the given
/// characters mod `modulus`.
pub fn build_abelian_field(
    label: &str,
    modulus: u64,
    generators: &[DirichletCharacter],
    ctx: &mut Ctx,
) -> Result<AbelianField> {
    if modulus == 0 {
        return Err(TowerError::InvalidParameter("modulus must be positive".into()));
    }
    for g in generators {
        if g.modulus() != modulus {
            return Err(TowerError::InvalidCharacter(format!(
                "generator has modulus {} but the field modulus is {modulus}",
                g.modulus()
            )));
        }
    }
    let group = if generators.is_empty() {
        vec![DirichletCharacter::principal(modulus)?]
    } else {
        generate_group(generators)?
    };
    let primitive: Vec<DirichletCharacter> =
        group.iter().map(|c| c.primitive()).collect::<Result<_>>()?;
    let degree = group.len() as u64;

    let all_even = group.iter().all(|c| c.is_even());
    let (r1, r2) = if all_even {
        (degree, 0)
    } else {
        debug_assert!(degree % 2 == 0, "odd character forces even degree");
        (0, degree / 2)
    };

    let mut abs_disc = BigUint::from(1u32);
    let mut genus = ctx.zero();
    for chi in &primitive {
        abs_disc *= BigUint::from(chi.conductor());
        if chi.conductor() > 1 {
            let lc = ctx.ln_u64(chi.conductor());
            genus = ctx.add(&genus, &lc);
        }
    }
    let half = ctx.div(&ctx.one(), &ctx.from_u64(2));
    genus = ctx.mul(&genus, &half);

    let roots_of_unity = count_roots_of_unity(modulus, &primitive, &abs_disc)?;

    Ok(AbelianField {
        label: label.to_string(),
        modulus,
        group,
        primitive,
        degree,
        r1,
        r2,
        abs_disc,
        genus,
        roots_of_unity,
    })
}

/// Largest n with the full character group mod n inside the field's group,
/// searched over divisors of 2*modulus and capped at 2*|DـK|; see the
/// module notes on why this bound is safe.
fn count_roots_of_unity(
    modulus: u64,
    primitive: &[DirichletCharacter],
    abs_disc: &BigUint,
) -> Result<u64> {
    let keys: BTreeSet<Vec<u64>> = primitive.iter().map(|c| c.canonical_key()).collect();
    let cap = BigUint::from(2u32) * abs_disc;
    let mut best = 1u64;
    for n in crate::chars::divisors(2 * modulus) {
        if BigUint::from(n) > cap {
            continue;
        }
        let g = UnitGroup::new(n)?;
        let contained = g
            .dual_generators()
            .iter()
            .all(|chi| keys.contains(&chi.canonical_key()));
        if contained && n > best {
            best = n;
        }
    }
    Ok(if best % 2 == 1 { 2 * best } else { best })
}

impl AbelianField {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn group(&self) -> &[DirichletCharacter] {
        &self.group
    }

    /// Primitive characters of the group, parallel to `group()`.
    pub fn primitive_characters(&self) -> &[DirichletCharacter] {
        &self.primitive
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn signature(&self) -> (u64, u64) {
        (self.r1, self.r2)
    }

    pub fn abs_disc(&self) -> &BigUint {
        &self.abs_disc
    }

    /// g_K = (1/2) ln |D_K|, non-negative, zero exactly for the rationals.
    pub fn genus(&self) -> &Real {
        &self.genus
    }

    pub fn roots_of_unity_count(&self) -> u64 {
        self.roots_of_unity
    }

    pub fn is_rationals(&self) -> bool {
        self.degree == 1
    }

    /// Exponent of the rational prime p in |D_K| (sum over conductors).
    pub fn disc_valuation(&self, p: u64) -> u64 {
        self.primitive
            .iter()
            .map(|c| {
                let mut f = c.conductor();
                let mut v = 0;
                while f % p == 0 {
                    f /= p;
                    v += 1;
                }
                v
            })
            .sum()
    }

    pub fn canonical_key_set(&self) -> BTreeSet<Vec<u64>> {
        self.primitive.iter().map(|c| c.canonical_key()).collect()
    }

    /// True when `self` is contained in `other` (character groups nest).
    pub fn is_subfield_of(&self, other: &AbelianField) -> bool {
        let mine = self.canonical_key_set();
        let theirs = other.canonical_key_set();
        mine.is_subset(&theirs)
    }

    /// [L:K] where L = self, K = sub; errors when containment fails.
    pub fn index_over(&self, sub: &AbelianField) -> Result<u64> {
        if !sub.is_subfield_of(self) {
            return Err(TowerError::NotASubfield(format!(
                "{} is not a subfield of {}",
                sub.label, self.label
            )));
        }
        debug_assert!(self.degree % sub.degree == 0);
        Ok(self.degree / sub.degree)
    }
}

/// g_{L/K} = g_L - [L:K] g_K, the relative genus; requires K inside L.
pub fn relative_genus(l: &AbelianField, k: &AbelianField, ctx: &Ctx) -> Result<Real> {
    let index = l.index_over(k)?;
    let scaled = ctx.mul(&ctx.from_u64(index), k.genus());
    Ok(ctx.sub(l.genus(), &scaled))
}

// ---------------------------------------------------------------------------
// Named constructors used across the crate and by the sample specs.
// ---------------------------------------------------------------------------

pub fn rationals(ctx: &mut Ctx) -> Result<AbelianField> {
    build_abelian_field("Q", 1, &[], ctx)
}

/// Q(zeta_n), the n-th cyclotomic field.
pub fn cyclotomic_field(n: u64, ctx: &mut Ctx) -> Result<AbelianField> {
    let g = UnitGroup::new(n)?;
    let gens = g.dual_generators();
    build_abelian_field(&format!("Q(zeta_{n})"), n, &gens, ctx)
}

/// Maximal real subfield Q(zeta_n)^+: the even characters mod n.
pub fn real_cyclotomic_field(n: u64, ctx: &mut Ctx) -> Result<AbelianField> {
    let g = UnitGroup::new(n)?;
    let full = generate_group(&g.dual_generators())?;
    let evens: Vec<DirichletCharacter> = full.into_iter().filter(|c| c.is_even()).collect();
    build_abelian_field(&format!("Q(zeta_{n})+"), n, &evens, ctx)
}

/// Quadratic field of fundamental discriminant d, via the Kronecker character.
pub fn quadratic_field(d: i64, ctx: &mut Ctx) -> Result<AbelianField> {
    let chi = DirichletCharacter::kronecker(d)?;
    let label = format!("Q(sqrt{})", disc_radical(d));
    build_abelian_field(&label, chi.modulus(), &[chi], ctx)
}

fn disc_radical(d: i64) -> i64 {
    // underlying squarefree integer of a fundamental discriminant
    if d % 4 == 0 {
        d / 4
    } else {
        d
    }
}

// ---------------------------------------------------------------------------
// JSON serialization: {label, modulus, generators:[{modulus, values}]} with
// exact integers as decimal strings and values as [order, num] pairs.
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
pub struct FieldSpec {
    pub label: String,
    pub modulus: String,
    pub generators: Vec<CharSpec>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CharSpec {
    pub modulus: String,
    /// residue (decimal string) -> [order, num] meaning e^{2 pi i num/order}
    pub values: std::collections::BTreeMap<String, (u64, u64)>,
}

fn parse_u64(s: &str, what: &str) -> Result<u64> {
    s.parse::<u64>()
        .map_err(|_| TowerError::ParseError(format!("{what}: not a decimal integer: {s:?}")))
}

impl CharSpec {
    pub fn to_character(&self) -> Result<DirichletCharacter> {
        let m = parse_u64(&self.modulus, "character modulus")?;
        let mut values = std::collections::BTreeMap::new();
        for (k, &(order, num)) in &self.values {
            let a = parse_u64(k, "residue")?;
            if order == 0 {
                return Err(TowerError::InvalidCharacter(format!(
                    "zero order at residue {a}"
                )));
            }
            values.insert(a, RootOfUnity::new(num, order));
        }
        DirichletCharacter::from_values(m, values)
    }

    pub fn from_character(chi: &DirichletCharacter) -> CharSpec {
        CharSpec {
            modulus: chi.modulus().to_string(),
            values: chi
                .values()
                .iter()
                .map(|(&a, v)| (a.to_string(), (v.order(), v.numerator())))
                .collect(),
        }
    }
}

impl FieldSpec {
    pub fn to_field(&self, ctx: &mut Ctx) -> Result<AbelianField> {
        let m = parse_u64(&self.modulus, "field modulus")?;
        let gens: Vec<DirichletCharacter> = self
            .generators
            .iter()
            .map(|g| g.to_character())
            .collect::<Result<_>>()?;
        build_abelian_field(&self.label, m, &gens, ctx)
    }

    /// Emit a spec with a small generating set of the field's group.
    pub fn from_field(field: &AbelianField) -> FieldSpec {
        let mut gens: Vec<DirichletCharacter> = Vec::new();
        let mut span: BTreeSet<Vec<u64>> = BTreeSet::new();
        span.insert(
            DirichletCharacter::principal(field.modulus())
                .expect("principal exists")
                .canonical_key(),
        );
        for chi in field.group() {
            if span.contains(&chi.canonical_key()) {
                continue;
            }
            gens.push(chi.clone());
            let regen = generate_group(&gens).expect("closure of valid characters");
            span = regen.iter().map(|c| c.canonical_key()).collect();
        }
        FieldSpec {
            label: field.label().to_string(),
            modulus: field.modulus().to_string(),
            generators: gens.iter().map(CharSpec::from_character).collect(),
        }
    }
}

pub fn field_from_json(json: &str, ctx: &mut Ctx) -> Result<AbelianField> {
    let spec: FieldSpec = serde_json::from_str(json)?;
    spec.to_field(ctx)
}

pub fn field_to_json(field: &AbelianField) -> String {
    serde_json::to_string_pretty(&FieldSpec::from_field(field)).expect("field spec serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hp::to_f64;

    fn ctx() -> Ctx {
        Ctx::new(128).unwrap()
    }

    #[test]
    fn rationals_have_trivial_invariants() {
        let mut ctx = ctx();
        let q = rationals(&mut ctx).unwrap();
        assert_eq!(q.degree(), 1);
        assert_eq!(q.signature(), (1, 0));
        assert_eq!(q.abs_disc(), &BigUint::from(1u32));
        assert!(q.genus().is_zero());
        assert_eq!(q.roots_of_unity_count(), 2);
    }

    #[test]
    fn gaussian_field_matches_known_data() {
        let mut ctx = ctx();
        let k = quadratic_field(-4, &mut ctx).unwrap();
        assert_eq!(k.degree(), 2);
        assert_eq!(k.signature(), (0, 1));
        assert_eq!(k.abs_disc(), &BigUint::from(4u32));
        assert_eq!(k.roots_of_unity_count(), 4);
        assert!((to_f64(k.genus()) - (4.0f64).ln() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn fifth_cyclotomic_has_disc_125() {
        let mut ctx = ctx();
        let k = cyclotomic_field(5, &mut ctx).unwrap();
        assert_eq!(k.degree(), 4);
        assert_eq!(k.abs_disc(), &BigUint::from(125u32));
        assert_eq!(k.signature(), (0, 2));
        assert_eq!(k.roots_of_unity_count(), 10);
    }

    #[test]
    fn real_quadratic_in_fifth_cyclotomic() {
        let mut ctx = ctx();
        let l = cyclotomic_field(5, &mut ctx).unwrap();
        let k = real_cyclotomic_field(5, &mut ctx).unwrap();
        assert_eq!(k.degree(), 2);
        assert_eq!(k.abs_disc(), &BigUint::from(5u32));
        assert_eq!(k.signature(), (2, 0));
        assert_eq!(k.roots_of_unity_count(), 2);
        assert!(k.is_subfield_of(&l));
        assert_eq!(l.index_over(&k).unwrap(), 2);
        // g_{L/K} = (1/2) ln 125 - 2 * (1/2) ln 5 = (1/2) ln 5
        let rel = relative_genus(&l, &k, &ctx).unwrap();
        assert!((to_f64(&rel) - 0.5 * 5f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn relative_genus_of_field_over_itself_is_zero() {
        let mut ctx = ctx();
        let k = quadratic_field(-4, &mut ctx).unwrap();
        let rel = relative_genus(&k, &k, &ctx).unwrap();
        assert!(rel.is_zero() || to_f64(&rel).abs() < 1e-30);
    }

    #[test]
    fn subfield_check_rejects_unrelated_fields() {
        let mut ctx = ctx();
        let k = quadratic_field(-4, &mut ctx).unwrap();
        let l = quadratic_field(5, &mut ctx).unwrap();
        assert!(matches!(
            relative_genus(&l, &k, &ctx),
            Err(TowerError::NotASubfield(_))
        ));
    }

    #[test]
    fn wrong_generator_modulus_rejected() {
        let mut ctx = ctx();
        let chi = DirichletCharacter::kronecker(-4).unwrap();
        let r = build_abelian_field("bad", 8, &[chi], &mut ctx);
        assert!(matches!(r, Err(TowerError::InvalidCharacter(_))));
    }

    #[test]
    fn field_spec_round_trip() {
        let mut ctx = ctx();
        let k = cyclotomic_field(5, &mut ctx).unwrap();
        let json = field_to_json(&k);
        let back = field_from_json(&json, &mut ctx).unwrap();
        assert_eq!(back.degree(), 4);
        assert_eq!(back.abs_disc(), k.abs_disc());
        assert_eq!(back.canonical_key_set(), k.canonical_key_set());
    }
}
