//! Nil-Coxeter and id-Coxeter algebras over polynomial coefficients, the
//! generating products whose coefficients are the Schubert and Grothendieck
//! polynomials, and the word-sum definitions of those polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::permgroup::{coxeter_length, GroupKind, GroupType, SignedPermutation};
use crate::polyring::{BetaPoly, LaurentPoly, Monomial, SparsePoly};
use crate::words::{compatible_sequences, hecke_words, WordKind};

/// A coefficient ring for algebra elements.
pub trait Coefficient: Clone {
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn mul(&self, other: &Self) -> Self;
    fn times_beta(&self) -> Self;
}

impl Coefficient for SparsePoly {
    fn is_zero(&self) -> bool {
        SparsePoly::is_zero(self)
    }

    fn add_assign(&mut self, other: &Self) {
        self.add_assign_ref(other);
    }

    fn mul(&self, other: &Self) -> Self {
        self.mul_ref(other)
    }

    fn times_beta(&self) -> Self {
        self.mul_beta()
    }
}

impl Coefficient for LaurentPoly {
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }

    fn add_assign(&mut self, other: &Self) {
        self.add_assign_ref(other);
    }

    fn mul(&self, other: &Self) -> Self {
        self.mul_ref(other)
    }

    fn times_beta(&self) -> Self {
        self.shifted(1, 0)
    }
}

/// `β = 0` (nil-Coxeter, `u_s^2 = 0`) or formal `β` (id-Coxeter, `π_s^2 = β π_s`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Nil,
    Id,
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nil" => Ok(Flavor::Nil),
            "id" => Ok(Flavor::Id),
            _ => Err(Error::Parse(format!("unknown flavor {s:?}"))),
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Nil => "nil",
            Flavor::Id => "id",
        })
    }
}

/// A finitely supported combination `Σ c_w π_w` (or `Σ c_w u_w`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement<C> {
    kind: GroupKind,
    flavor: Flavor,
    support: BTreeMap<SignedPermutation, C>,
}

impl<C: Coefficient> AlgebraElement<C> {
    /// The identity element `1 · π_id`.
    pub fn one(kind: GroupKind, flavor: Flavor, one: C) -> Self {
        let mut support = BTreeMap::new();
        if !one.is_zero() {
            support.insert(SignedPermutation::identity(), one);
        }
        AlgebraElement {
            kind,
            flavor,
            support,
        }
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn support(&self) -> impl Iterator<Item = (&SignedPermutation, &C)> {
        self.support.iter()
    }

    pub fn coefficient(&self, w: &SignedPermutation) -> Option<&C> {
        self.support.get(w)
    }

    /// `self · (1 + coeff · π_g)`.
    pub fn h_multiply(&self, label: i32, coeff: &C) -> Result<Self> {
        let g = self.kind.normalize_generator(label)?;
        let ty = self.kind.ty();
        let mut out = self.support.clone();
        for (v, c) in &self.support {
            let prod = c.mul(coeff);
            let (target, prod) = if v.has_right_descent(ty, g) {
                match self.flavor {
                    Flavor::Nil => continue,
                    Flavor::Id => (v.clone(), prod.times_beta()),
                }
            } else {
                (v.mul_generator(ty, g), prod)
            };
            if prod.is_zero() {
                continue;
            }
            match out.get_mut(&target) {
                Some(slot) => {
                    slot.add_assign(&prod);
                    if slot.is_zero() {
                        out.remove(&target);
                    }
                }
                None => {
                    out.insert(target, prod);
                }
            }
        }
        Ok(AlgebraElement {
            kind: self.kind,
            flavor: self.flavor,
            support: out,
        })
    }

    /// Multiplies by every factor of a plan in order, realizing weights with `realize`.
    pub fn apply_plan(&self, plan: &[Factor], realize: impl Fn(&Weight) -> C) -> Result<Self> {
        let mut e = self.clone();
        for f in plan {
            e = e.h_multiply(f.generator, &realize(&f.weight))?;
        }
        Ok(e)
    }
}

impl AlgebraElement<SparsePoly> {
    /// The coefficient polynomial of `π_w` (zero if `w` is not in the support).
    pub fn coefficient_of(&self, w: &SignedPermutation, lo: i32, hi: i32) -> SparsePoly {
        self.support
            .get(w)
            .cloned()
            .unwrap_or_else(|| SparsePoly::zero(lo, hi))
    }
}

/// The argument of one factor `h_g(·)`: a variable, a sum of two variables,
/// or their `⊕`. Repeated indices give `2x_i` and `x_i ⊕ x_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Weight {
    Var(i32),
    Sum(i32, i32),
    OPlus(i32, i32),
}

impl Weight {
    pub fn indices(&self) -> Vec<i32> {
        match *self {
            Weight::Var(i) => vec![i],
            Weight::Sum(i, j) | Weight::OPlus(i, j) => vec![i, j],
        }
    }

    /// The weight as a polynomial in the window `[lo, hi]`.
    pub fn to_poly(&self, lo: i32, hi: i32, xdeg_cap: Option<u32>, beta_cap: Option<u32>) -> Result<SparsePoly> {
        let var = |i| SparsePoly::var(i, lo, hi).map(|p| p.with_caps(xdeg_cap, beta_cap));
        Ok(match *self {
            Weight::Var(i) => var(i)?,
            Weight::Sum(i, j) => &var(i)? + &var(j)?,
            Weight::OPlus(i, j) => var(i)?.oplus(&var(j)?),
        })
    }

    /// The weight after `x_i ↦ q^{i−1}`.
    pub fn specialized(&self, beta_cap: Option<u32>) -> LaurentPoly {
        let q = |i: i32| LaurentPoly::monomial(i as i64 - 1, BetaPoly::one(), beta_cap);
        match *self {
            Weight::Var(i) => q(i),
            Weight::Sum(i, j) => {
                let mut p = q(i);
                p.add_assign_ref(&q(j));
                p
            }
            Weight::OPlus(i, j) => {
                let mut p = q(i);
                p.add_assign_ref(&q(j));
                p.add_assign_ref(&q(i).mul_ref(&q(j)).shifted(1, 0));
                p
            }
        }
    }
}

/// One factor `h_g(weight)` of a product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Factor {
    pub generator: i32,
    pub weight: Weight,
}

fn factor(generator: i32, weight: Weight) -> Factor {
    Factor { generator, weight }
}

/// Which generating product to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductFamily {
    A,
    B,
    C,
    D,
}

impl ProductFamily {
    pub fn group_type(self) -> GroupType {
        match self {
            ProductFamily::A => GroupType::A,
            ProductFamily::B | ProductFamily::C => GroupType::BC,
            ProductFamily::D => GroupType::D,
        }
    }
}

impl FromStr for ProductFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(ProductFamily::A),
            "B" | "b" => Ok(ProductFamily::B),
            "C" | "c" => Ok(ProductFamily::C),
            "D" | "d" => Ok(ProductFamily::D),
            _ => Err(Error::Parse(format!("unknown product family {s:?}"))),
        }
    }
}

/// The order-of-multiplication form of a product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    /// `Π_i X(x_i) · Π_{i≥1} A_i(x_i)` with one block per variable.
    Definitional,
    /// `Π_j Π_i h_i(x_{i+j} + x_j)` and its variants.
    Factored,
}

/// `A_i(x) = h_{n−1}(x) ⋯ h_i(x)`.
fn a_block(n: i32, i: i32, w: Weight, out: &mut Vec<Factor>) {
    for g in (i..n).rev() {
        out.push(factor(g, w));
    }
}

/// The factors of a generating product, in multiplication order.
///
/// Blocks whose variables would fall below `floor` are omitted; for the
/// definitional form that is the same as setting `x_i = 0` for `i < floor`.
/// Type-A products only use generators `1..n−1`.
pub fn product_plan(
    n: usize,
    family: ProductFamily,
    flavor: Flavor,
    form: Form,
    floor: i32,
) -> Vec<Factor> {
    let n = n as i32;
    let mut plan = Vec::new();
    let pair = |i: i32, j: i32| match flavor {
        Flavor::Nil => Weight::Sum(i, j),
        Flavor::Id => Weight::OPlus(i, j),
    };
    match (family, form) {
        (ProductFamily::A, Form::Definitional) => {
            for i in floor..n {
                a_block(n, i.max(1), Weight::Var(i), &mut plan);
            }
        }
        (ProductFamily::A, Form::Factored) => {
            for j in floor..=0 {
                for i in 1..n {
                    plan.push(factor(i, Weight::Var(i + j)));
                }
            }
        }
        (ProductFamily::B | ProductFamily::C | ProductFamily::D, Form::Definitional) => {
            for i in floor..=0 {
                let x = Weight::Var(i);
                for g in (1..n).rev() {
                    plan.push(factor(g, x));
                }
                match family {
                    ProductFamily::B => plan.push(factor(0, x)),
                    ProductFamily::C => plan.push(factor(0, pair(i, i))),
                    _ => plan.push(factor(-1, x)),
                }
                let start = if family == ProductFamily::D { 2 } else { 1 };
                for g in start..n {
                    plan.push(factor(g, x));
                }
            }
            for i in 1..n {
                a_block(n, i, Weight::Var(i), &mut plan);
            }
        }
        (ProductFamily::B, Form::Factored) => {
            for j in floor..=0 {
                plan.push(factor(0, Weight::Var(j)));
                for i in 1..n {
                    plan.push(factor(i, pair(i + j, j)));
                }
            }
        }
        (ProductFamily::C, Form::Factored) => {
            for j in floor..=0 {
                for i in 0..n {
                    plan.push(factor(i, pair(i + j, j)));
                }
            }
        }
        (ProductFamily::D, Form::Factored) => {
            for j in ((floor + 1).div_euclid(2) + (floor + 1).rem_euclid(2))..=0 {
                let (odd, even) = (2 * j - 1, 2 * j);
                for i in 1..n {
                    plan.push(factor(if i == 1 { -1 } else { i }, pair(i + odd, odd)));
                }
                for i in 1..n {
                    plan.push(factor(i, pair(i + even, even)));
                }
            }
        }
    }
    plan
}

/// Every monomial whose smallest variable index exceeds this threshold has
/// the same coefficient in the definitional and factored products built
/// with the same floor.
pub fn trusted_threshold(n: usize, floor: i32) -> i32 {
    n as i32 - 1 + floor
}

fn check_family(kind: GroupKind, family: ProductFamily) -> Result<()> {
    if kind.ty() != family.group_type() {
        let expected = GroupKind::new(family.group_type(), kind.rank().max(2))?;
        return Err(Error::KindMismatch(kind, expected));
    }
    Ok(())
}

/// Builds a generating product over polynomial coefficients in the window
/// `[floor, n−1]`.
pub fn build_product(
    kind: GroupKind,
    flavor: Flavor,
    family: ProductFamily,
    form: Form,
    floor: i32,
    xdeg_cap: Option<u32>,
    beta_cap: Option<u32>,
) -> Result<AlgebraElement<SparsePoly>> {
    check_family(kind, family)?;
    let (lo, hi) = (floor.min(1), kind.rank() as i32 - 1);
    let plan = product_plan(kind.rank(), family, flavor, form, floor);
    let one = SparsePoly::one(lo, hi).with_caps(xdeg_cap, beta_cap);
    let mut e = AlgebraElement::one(kind, flavor, one);
    for f in &plan {
        let w = f.weight.to_poly(lo, hi, xdeg_cap, beta_cap)?;
        e = e.h_multiply(f.generator, &w)?;
    }
    Ok(e)
}

/// The definitional product with `x_i ↦ q^{i−1}` applied to every factor.
pub fn build_specialized(
    kind: GroupKind,
    flavor: Flavor,
    family: ProductFamily,
    floor: i32,
    beta_cap: Option<u32>,
) -> Result<AlgebraElement<LaurentPoly>> {
    check_family(kind, family)?;
    let plan = product_plan(kind.rank(), family, flavor, Form::Definitional, floor);
    AlgebraElement::one(kind, flavor, LaurentPoly::one(beta_cap))
        .apply_plan(&plan, |w| w.specialized(beta_cap))
}

/// The word-sum families of Schubert and Grothendieck polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    ABackstable,
    B,
    C,
    D,
    AGroth,
    BGroth,
    CGroth,
    DGroth,
}

impl Family {
    pub fn word_kind(self) -> WordKind {
        match self {
            Family::A | Family::ABackstable | Family::AGroth => WordKind::A,
            Family::B | Family::BGroth => WordKind::BSigned,
            Family::C | Family::CGroth => WordKind::CSigned,
            Family::D | Family::DGroth => WordKind::DSigned,
        }
    }

    pub fn is_grothendieck(self) -> bool {
        matches!(
            self,
            Family::AGroth | Family::BGroth | Family::CGroth | Family::DGroth
        )
    }

    pub fn product_family(self) -> ProductFamily {
        match self {
            Family::A | Family::ABackstable | Family::AGroth => ProductFamily::A,
            Family::B | Family::BGroth => ProductFamily::B,
            Family::C | Family::CGroth => ProductFamily::C,
            Family::D | Family::DGroth => ProductFamily::D,
        }
    }

    pub fn flavor(self) -> Flavor {
        if self.is_grothendieck() {
            Flavor::Id
        } else {
            Flavor::Nil
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "A" => Family::A,
            "Abackstable" => Family::ABackstable,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "Agrothendieck" | "Agroth" => Family::AGroth,
            "Bgroth" => Family::BGroth,
            "Cgroth" => Family::CGroth,
            "Dgroth" => Family::DGroth,
            _ => return Err(Error::Parse(format!("unknown family {s:?}"))),
        })
    }
}

/// `Σ_a Σ_i β^{ℓ(a)−ℓ(w)} x_i` over Hecke (or reduced) words `a` of length
/// at most `ℓ(w) + beta_cap` and compatible sequences `i` with entries
/// `>= floor` (entries `>= 1` for the ordinary type-A family).
pub fn brute_polynomial(
    family: Family,
    kind: GroupKind,
    w: &SignedPermutation,
    floor: i32,
    beta_cap: u32,
) -> Result<SparsePoly> {
    let wk = family.word_kind();
    if kind.ty() != wk.group_type() {
        return Err(Error::KindMismatch(kind, wk.group(kind.rank().max(2))?));
    }
    let len = coxeter_length(kind, w)?;
    let extra = if family.is_grothendieck() { beta_cap } else { 0 };
    let floor = if family == Family::A { 1 } else { floor };
    let (lo, hi) = (floor.min(1), kind.rank() as i32 - 1);
    let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
    for a in hecke_words(wk, kind.rank(), w, extra as usize)? {
        let b = (a.len() - len) as u32;
        for seq in compatible_sequences(&a, floor) {
            *terms.entry(Monomial::from_indices(b, &seq)).or_default() += BigInt::one();
        }
    }
    let mut p = SparsePoly::zero(lo, hi);
    for (m, c) in terms {
        p.add_assign_ref(&SparsePoly::term(c, m, lo, hi)?);
    }
    if family.is_grothendieck() {
        p = p.with_caps(None, Some(beta_cap));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::elements;

    fn perm(s: &str) -> SignedPermutation {
        SignedPermutation::parse(s).unwrap()
    }

    fn x(i: i32) -> SparsePoly {
        SparsePoly::var(i, -5, 5).unwrap()
    }

    #[test]
    fn h_multiply_examples() {
        let s2 = GroupKind::a(2).unwrap();
        let one = AlgebraElement::one(s2, Flavor::Nil, SparsePoly::one(-5, 5));
        let e = one.h_multiply(1, &x(1)).unwrap();
        assert_eq!(e.coefficient(&SignedPermutation::identity()), Some(&SparsePoly::one(-5, 5)));
        assert_eq!(e.coefficient(&perm("2,1")), Some(&x(1)));

        let mut u = AlgebraElement::one(s2, Flavor::Nil, SparsePoly::one(-5, 5));
        u.support.clear();
        u.support.insert(perm("2,1"), SparsePoly::one(-5, 5));
        let v = u.h_multiply(1, &x(2)).unwrap();
        assert_eq!(v, u);

        let bc = GroupKind::bc(2).unwrap();
        let h = AlgebraElement::one(bc, Flavor::Id, SparsePoly::one(-5, 5))
            .h_multiply(0, &x(1))
            .unwrap()
            .h_multiply(0, &x(2))
            .unwrap();
        assert_eq!(h.coefficient(&perm("-1")), Some(&x(1).oplus(&x(2))));
    }

    #[test]
    fn invalid_generator_is_rejected() {
        let s3 = GroupKind::a(3).unwrap();
        let one = AlgebraElement::one(s3, Flavor::Nil, SparsePoly::one(-5, 5));
        assert!(matches!(one.h_multiply(0, &x(1)), Err(Error::InvalidGenerator { .. })));
    }

    #[test]
    fn example_coefficients() {
        let s4 = GroupKind::a(4).unwrap();
        let e = build_product(s4, Flavor::Nil, ProductFamily::A, Form::Definitional, 1, None, None).unwrap();
        let c = e.coefficient_of(&perm("2,1,4,3"), 1, 3);
        assert_eq!(c.coeff(&Monomial::from_indices(0, &[1, 3])), 1.into());
        assert_eq!(e.coefficient_of(&SignedPermutation::identity(), 1, 3), SparsePoly::one(1, 3));

        let bc2 = GroupKind::bc(2).unwrap();
        let c2 = build_product(bc2, Flavor::Nil, ProductFamily::C, Form::Definitional, -4, None, None).unwrap();
        let w = perm("-2,-1");
        let sc = c2.coefficient_of(&w, -4, 1);
        assert_eq!(sc.coeff(&Monomial::from_indices(0, &[-1, 0, 0])), 4.into());
        let b2 = build_product(bc2, Flavor::Nil, ProductFamily::B, Form::Definitional, -4, None, None).unwrap();
        let sb = b2.coefficient_of(&w, -4, 1);
        assert_eq!(sb.scale(&4.into()), sc);

        let d4 = GroupKind::d(4).unwrap();
        let d = build_product(d4, Flavor::Nil, ProductFamily::D, Form::Definitional, -1, Some(6), None).unwrap();
        let sd = d.coefficient_of(&perm("-1,2,3,-4"), -1, 3);
        assert_eq!(sd.coeff(&Monomial::from_indices(0, &[0, 0, 0, 1, 2, 3])), 1.into());
    }

    #[test]
    fn brute_examples() {
        let s2 = GroupKind::a(2).unwrap();
        let s1 = perm("2,1");
        assert_eq!(brute_polynomial(Family::A, s2, &s1, -3, 0).unwrap().to_string(), "x[1]");
        // (1,1) and (1,1,1) have no positive compatible sequences.
        let g = brute_polynomial(Family::AGroth, s2, &s1, 1, 2).unwrap();
        assert_eq!(g.to_string(), "x[1]");
        let back = brute_polynomial(Family::AGroth, s2, &s1, 0, 2).unwrap();
        assert_eq!(back.to_string(), "x[0] + x[1] + b*x[0]*x[1]");
        let s4 = GroupKind::a(4).unwrap();
        let p = brute_polynomial(Family::ABackstable, s4, &perm("2,1,4,3"), -3, 0).unwrap();
        assert_eq!(p.coeff(&Monomial::from_indices(0, &[-3, 3])), 1.into());
        assert_eq!(p.coeff(&Monomial::from_indices(0, &[0, 1])), 2.into());
        assert_eq!(p.coeff(&Monomial::from_indices(0, &[0, 0])), 1.into());
    }

    #[test]
    fn product_plans_have_the_expected_shape() {
        let plan = product_plan(3, ProductFamily::D, Flavor::Nil, Form::Definitional, 0);
        let gens: Vec<i32> = plan.iter().map(|f| f.generator).collect();
        assert_eq!(gens, vec![2, 1, -1, 2, 2, 1, 2]);
        let c = product_plan(2, ProductFamily::C, Flavor::Id, Form::Definitional, 0);
        assert_eq!(c[1], factor(0, Weight::OPlus(0, 0)));
        let f = product_plan(3, ProductFamily::D, Flavor::Nil, Form::Factored, -3);
        assert_eq!(f.len(), 8);
        assert_eq!(f[0], factor(-1, Weight::Sum(-2, -3)));
        assert!(product_plan(3, ProductFamily::D, Flavor::Nil, Form::Factored, -2).iter().all(|f| f.weight.indices().iter().all(|&i| i >= -2)));
    }

    #[test]
    fn definitional_products_match_word_sums() {
        for (family, kind, floor) in [
            (Family::ABackstable, GroupKind::a(4).unwrap(), -2),
            (Family::A, GroupKind::a(3).unwrap(), 1),
            (Family::B, GroupKind::bc(2).unwrap(), -3),
            (Family::C, GroupKind::bc(2).unwrap(), -3),
            (Family::D, GroupKind::d(3).unwrap(), -2),
            (Family::AGroth, GroupKind::a(3).unwrap(), -1),
            (Family::CGroth, GroupKind::bc(2).unwrap(), -1),
            (Family::DGroth, GroupKind::d(2).unwrap(), -2),
        ] {
            let beta = if family.is_grothendieck() { Some(2) } else { None };
            let floor_used = if family == Family::A { 1 } else { floor };
            let e = build_product(kind, family.flavor(), family.product_family(), Form::Definitional, floor_used, None, beta).unwrap();
            for w in elements(kind) {
                let brute = brute_polynomial(family, kind, &w, floor, 2).unwrap();
                let (lo, hi) = brute.window();
                let prod = e.coefficient_of(&w, lo, hi);
                assert!(prod.terms_eq(&brute), "{family:?} {w}: {:?}", prod.first_difference(&brute));
            }
        }
    }

    #[test]
    fn specialized_product_is_the_specialized_polynomial() {
        let kind = GroupKind::bc(2).unwrap();
        let poly = build_product(kind, Flavor::Id, ProductFamily::C, Form::Definitional, -3, None, Some(2)).unwrap();
        let spec = build_specialized(kind, Flavor::Id, ProductFamily::C, -3, Some(2)).unwrap();
        for w in elements(kind) {
            let p = poly.coefficient_of(&w, -3, 1);
            let direct = crate::polyring::specialize_unchecked(&p);
            let via = spec.coefficient(&w).cloned().unwrap_or_else(|| LaurentPoly::zero(Some(2)));
            assert_eq!(direct, via, "{w}");
        }
    }
}
