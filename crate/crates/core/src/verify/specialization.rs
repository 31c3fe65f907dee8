use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::nilhecke::{build_product, build_specialized, Family, Flavor, Form, ProductFamily};
use crate::permgroup::{coxeter_length, elements, GroupKind, GroupType, SignedPermutation};
use crate::polyring::{
    expand_rational, finite_specialize_q, q_factorial, q_integer, soundness_bound, BetaPoly,
    LaurentPoly, LaurentSeries,
};
use crate::verify::report::{params, Report, Verdict};
use crate::words::{
    decorated_sum, hecke_generator_words, statistic, LetterWord, Statistic, WeightedStatistic,
    WordKind,
};

/// Number of exponents below the top term compared by default.
pub const DEFAULT_DEPTH: i64 = 25;

/// Default `β`-degree cap for the Grothendieck checks.
pub const DEFAULT_BETA_CAP: u32 = 2;

/// Numerators of the word side, keyed by `(β-degree, word length)`: a map
/// from `q`-exponent to multiplicity. The full word side is the sum over
/// keys of numerator over the denominator of that length.
pub type Numerators = BTreeMap<(u32, usize), BTreeMap<i64, BigInt>>;

fn group_for(family: Family, kind: GroupKind) -> Result<()> {
    let ty = family.word_kind().group_type();
    if kind.ty() != ty {
        return Err(Error::KindMismatch(kind, GroupKind::new(ty, kind.rank().max(2))?));
    }
    Ok(())
}

fn effective_beta(family: Family, beta_cap: u32) -> u32 {
    if family.is_grothendieck() {
        beta_cap
    } else {
        0
    }
}

/// Exponents `k` (or `2k` in type D) with `1 <= k <= len`.
pub fn denominators(family: Family, len: usize) -> Vec<u32> {
    let step = if family.word_kind().group_type() == GroupType::D { 2 } else { 1 };
    (1..=len as u32).map(|k| step * k).collect()
}

fn plus_factors(c: i64, plus: &[i32]) -> BTreeMap<i64, BigInt> {
    let mut poly = BTreeMap::from([(c, BigInt::one())]);
    for &a in plus {
        let mut next: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (&e, k) in &poly {
            *next.entry(e + a as i64).or_default() += k;
            *next.entry(e).or_default() += k;
        }
        poly = next;
    }
    poly
}

/// The numerator contributed by all words over the alphabet of `family`
/// that lie above one generator word.
fn word_numerator(family: Family, n: usize, gens: &[i32]) -> Result<BTreeMap<i64, BigInt>> {
    Ok(match family {
        Family::A | Family::ABackstable | Family::AGroth => {
            let a = LetterWord::from_ints(WordKind::A, n, gens)?;
            let e = statistic(&a, Statistic::Sum)? + statistic(&a, Statistic::Comaj)?;
            BTreeMap::from([(e as i64, BigInt::one())])
        }
        Family::B | Family::C => {
            let a = LetterWord::from_ints(WordKind::CNonneg, n, gens)?;
            plus_factors(statistic(&a, Statistic::Comaj)? as i64, gens)
        }
        Family::BGroth => decorated_sum(WordKind::BSigned, gens, WeightedStatistic::SigmaComajBC),
        Family::CGroth => decorated_sum(WordKind::CSigned, gens, WeightedStatistic::SigmaComajBC),
        Family::D => decorated_sum(WordKind::DSigned, gens, WeightedStatistic::PlusFactorsComajD),
        Family::DGroth => decorated_sum(WordKind::DPrimed, gens, WeightedStatistic::SigmaComajD),
    })
}

/// The word side of the principal specialization of `family` at `w`, as
/// numerators over `Π (q^k − 1)` (or `Π (q^{2k} − 1)` in type D).
///
/// Grothendieck families include Hecke words of length up to
/// `ℓ(w) + beta_cap`; Schubert families use reduced words only. For type B
/// Schubert the type-C numerators are divided by `2^{ℓ_0(w)}`.
pub fn rhs_numerators(family: Family, kind: GroupKind, w: &SignedPermutation, beta_cap: u32) -> Result<Numerators> {
    group_for(family, kind)?;
    let len = coxeter_length(kind, w)?;
    let extra = effective_beta(family, beta_cap);
    let mut nums: Numerators = BTreeMap::new();
    for (k, words) in hecke_generator_words(kind, w, extra as usize)?.into_iter().enumerate() {
        let slot = nums.entry((k as u32, len + k)).or_default();
        for gens in words {
            for (e, c) in word_numerator(family, kind.rank(), &gens)? {
                *slot.entry(e).or_default() += c;
            }
        }
        slot.retain(|_, c| !c.is_zero());
    }
    nums.retain(|_, p| !p.is_empty());
    if family == Family::B {
        let d = BigInt::one() << w.ell_zero();
        for p in nums.values_mut() {
            for c in p.values_mut() {
                if !(&*c % &d).is_zero() {
                    return Err(Error::Parse(format!("type-C numerator of {w} is not divisible by {d}")));
                }
                *c /= &d;
            }
        }
    }
    Ok(nums)
}

/// Highest exponent of the word side, or `None` if it vanishes.
pub fn rhs_top(family: Family, nums: &Numerators) -> Option<i64> {
    nums.iter()
        .filter_map(|(&(_, len), p)| {
            let shift: i64 = denominators(family, len).iter().map(|&d| d as i64).sum();
            p.keys().next_back().map(|e| e - shift)
        })
        .max()
}

/// Expands the numerators down to `cutoff`.
pub fn rhs_series(family: Family, nums: &Numerators, cutoff: i64, beta_cap: Option<u32>) -> LaurentSeries {
    let mut acc = LaurentPoly::zero(beta_cap);
    for (&(b, len), p) in nums {
        let den = denominators(family, len);
        for (&e, c) in p {
            let s = expand_rational(e, &[], &den, cutoff);
            for (exp, coeff) in s.terms() {
                acc.add_term(exp, &BetaPoly::monomial(coeff.coeff(0) * c, b));
            }
        }
    }
    acc.to_series(cutoff)
}

/// The word side of the specialization, down to `cutoff`.
pub fn specialization_rhs(
    family: Family,
    kind: GroupKind,
    w: &SignedPermutation,
    cutoff: i64,
    beta_cap: u32,
) -> Result<LaurentSeries> {
    let nums = rhs_numerators(family, kind, w, beta_cap)?;
    Ok(rhs_series(family, &nums, cutoff, series_cap(family, beta_cap)))
}

fn series_cap(family: Family, beta_cap: u32) -> Option<u32> {
    family.is_grothendieck().then_some(beta_cap)
}

/// The largest `x`-degree among the discarded monomials of the coefficient of `w`.
fn discarded_degree(family: Family, kind: GroupKind, w: &SignedPermutation, beta_cap: u32) -> Result<u32> {
    Ok(coxeter_length(kind, w)? as u32 + effective_beta(family, beta_cap))
}

/// The soundness bound of the specialized product built with `floor`.
pub fn lhs_bound(family: Family, kind: GroupKind, w: &SignedPermutation, floor: i32, beta_cap: u32) -> Result<i64> {
    let degree = discarded_degree(family, kind, w, beta_cap)?;
    Ok(soundness_bound(floor.min(1), degree, kind.rank() as i32 - 1))
}

/// The largest floor whose soundness bound lies below `cutoff`.
pub fn floor_for_cutoff(family: Family, kind: GroupKind, w: &SignedPermutation, cutoff: i64, beta_cap: u32) -> Result<i32> {
    let degree = discarded_degree(family, kind, w, beta_cap)? as i64;
    let spread = (degree.max(1) - 1) * (kind.rank() as i64 - 2).max(0);
    Ok((cutoff - spread).min(1) as i32)
}

fn product_flavor(family: Family) -> (ProductFamily, Flavor) {
    (family.product_family(), family.flavor())
}

/// The product side of the specialization: the coefficient of `w` in the
/// specialized generating product with blocks down to `floor`.
pub fn specialization_lhs(
    family: Family,
    kind: GroupKind,
    w: &SignedPermutation,
    floor: i32,
    cutoff: i64,
    beta_cap: u32,
) -> Result<LaurentSeries> {
    group_for(family, kind)?;
    kind.check(w)?;
    let bound = lhs_bound(family, kind, w, floor, beta_cap)?;
    if cutoff <= bound {
        return Err(Error::SoundnessBound { cutoff, bound });
    }
    let (pf, flavor) = product_flavor(family);
    let e = build_specialized(kind, flavor, pf, floor, series_cap(family, beta_cap))?;
    Ok(e.coefficient(w).cloned().unwrap_or_default().to_series(cutoff))
}

fn compare(
    lhs: &LaurentSeries,
    rhs: &LaurentSeries,
    cutoff: i64,
    bound: i64,
    beta_cap: Option<u32>,
) -> (Verdict, Vec<serde_json::Value>) {
    match lhs.first_difference(rhs, cutoff, beta_cap) {
        None => (Verdict::Pass, Vec::new()),
        Some(m) => {
            let v = if m.exponent > bound {
                Verdict::Fail
            } else {
                Verdict::Inconclusive
            };
            (v, vec![json!({"exponent": m.exponent, "beta": m.beta, "left": m.left, "right": m.right})])
        }
    }
}

/// Compares the product and word sides of the principal specialization of
/// `family` at `w` on every exponent `>= cutoff` (default: 25 below the top
/// term) and every `β`-degree `<= beta_cap`. The floor defaults to the
/// largest one that makes the cutoff sound.
pub fn check_specialization(
    family: Family,
    kind: GroupKind,
    w: &SignedPermutation,
    cutoff: Option<i64>,
    floor: Option<i32>,
    beta_cap: u32,
) -> Result<Report> {
    group_for(family, kind)?;
    kind.check(w)?;
    let nums = rhs_numerators(family, kind, w, beta_cap)?;
    let top = rhs_top(family, &nums).unwrap_or(0);
    let cutoff = cutoff.unwrap_or(top - DEFAULT_DEPTH);
    let floor = match floor {
        Some(f) => f,
        None => floor_for_cutoff(family, kind, w, cutoff, beta_cap)?,
    };
    let lhs = specialization_lhs(family, kind, w, floor, cutoff, beta_cap)?;
    let bound = lhs_bound(family, kind, w, floor, beta_cap)?;
    let cap = series_cap(family, beta_cap);
    let rhs = rhs_series(family, &nums, cutoff, cap);
    let (verdict, diff) = compare(&lhs, &rhs, cutoff, bound, cap);
    Ok(Report::new(
        "specialization",
        params([
            ("family", json!(format!("{family:?}"))),
            ("n", json!(kind.rank())),
            ("w", json!(w.to_string())),
            ("cutoff", json!(cutoff)),
            ("floor", json!(floor)),
            ("bound", json!(bound)),
            ("beta", json!(cap.unwrap_or(0))),
        ]),
        diff,
    )
    .with_verdict(verdict))
}

/// [`check_specialization`] for every element of the group, sharing one
/// specialized product. Each element is compared `depth` exponents below
/// its top term. Reports come back in the sorted element order.
pub fn specialization_sweep(family: Family, kind: GroupKind, depth: i64, beta_cap: u32) -> Result<Vec<Report>> {
    group_for(family, kind)?;
    let ws = elements(kind);
    let prepared: Vec<(Numerators, i64, i32)> = ws
        .par_iter()
        .map(|w| {
            let nums = rhs_numerators(family, kind, w, beta_cap)?;
            let cutoff = rhs_top(family, &nums).unwrap_or(0) - depth;
            let floor = floor_for_cutoff(family, kind, w, cutoff, beta_cap)?;
            Ok((nums, cutoff, floor))
        })
        .collect::<Result<_>>()?;
    let floor = prepared.iter().map(|p| p.2).min().unwrap_or(1);
    let (pf, flavor) = product_flavor(family);
    let cap = series_cap(family, beta_cap);
    let product = build_specialized(kind, flavor, pf, floor, cap)?;
    ws.par_iter()
        .zip(prepared.par_iter())
        .map(|(w, (nums, cutoff, _))| {
            let bound = lhs_bound(family, kind, w, floor, beta_cap)?;
            if *cutoff <= bound {
                return Err(Error::SoundnessBound { cutoff: *cutoff, bound });
            }
            let lhs = product.coefficient(w).cloned().unwrap_or_default().to_series(*cutoff);
            let rhs = rhs_series(family, nums, *cutoff, cap);
            let (verdict, diff) = compare(&lhs, &rhs, *cutoff, bound, cap);
            Ok(Report::new(
                "specialization",
                params([
                    ("family", json!(format!("{family:?}"))),
                    ("n", json!(kind.rank())),
                    ("w", json!(w.to_string())),
                    ("cutoff", json!(cutoff)),
                    ("floor", json!(floor)),
                    ("bound", json!(bound)),
                    ("beta", json!(cap.unwrap_or(0))),
                ]),
                diff,
            )
            .with_verdict(verdict))
        })
        .collect()
}

/// `[p]_q! · S_w(1, q, …, q^{n−1}) = Σ_a [a_1]_q ⋯ [a_p]_q q^{comaj(a)}` over
/// reduced words of `w`, for every `w ∈ S_n`.
pub fn check_macdonald_finite(n: usize) -> Result<Report> {
    let kind = GroupKind::a(n)?;
    let mut diff = Vec::new();
    if n >= 2 {
        let product = build_product(kind, Flavor::Nil, ProductFamily::A, Form::Definitional, 1, None, None)?;
        let hi = n as i32 - 1;
        for w in elements(kind) {
            let len = coxeter_length(kind, &w)?;
            let lhs = finite_specialize_q(&product.coefficient_of(&w, 1, hi))?.mul_ref(&q_factorial(len as u32));
            let mut rhs = LaurentPoly::zero(None);
            for gens in hecke_generator_words(kind, &w, 0)?.remove(0) {
                let a = LetterWord::from_ints(WordKind::A, n, &gens)?;
                let mut term = LaurentPoly::q_power(statistic(&a, Statistic::Comaj)? as i64, 1);
                for &g in &gens {
                    term = term.mul_ref(&q_integer(g as u32));
                }
                rhs.add_assign_ref(&term);
            }
            if lhs != rhs {
                diff.push(json!({"w": w.to_string(), "left": lhs.to_string(), "right": rhs.to_string()}));
                break;
            }
        }
    }
    Ok(Report::new("macdonald_finite", params([("n", json!(n))]), diff))
}
