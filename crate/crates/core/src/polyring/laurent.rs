use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::beta::BetaPoly;
use super::sparse::{Monomial, SparsePoly, TermJson};
use crate::error::{Error, Result};

/// An exact Laurent polynomial in `q` with coefficients in `Z[β]`,
/// optionally truncated in `β`-degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BetaPoly>,
    beta_cap: Option<u32>,
}

impl LaurentPoly {
    pub fn zero(beta_cap: Option<u32>) -> Self {
        LaurentPoly {
            coeffs: BTreeMap::new(),
            beta_cap,
        }
    }

    pub fn one(beta_cap: Option<u32>) -> Self {
        Self::monomial(0, BetaPoly::one(), beta_cap)
    }

    pub fn monomial(exp: i64, c: BetaPoly, beta_cap: Option<u32>) -> Self {
        let mut p = Self::zero(beta_cap);
        p.add_term(exp, &c);
        p
    }

    /// `c · q^exp`.
    pub fn q_power(exp: i64, c: impl Into<BigInt>) -> Self {
        Self::monomial(exp, BetaPoly::constant(c), None)
    }

    pub fn beta_cap(&self) -> Option<u32> {
        self.beta_cap
    }

    pub fn add_term(&mut self, exp: i64, c: &BetaPoly) {
        let c = c.clone().truncated(self.beta_cap);
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        for (&e, c) in &other.coeffs {
            self.add_term(e, c);
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let cap = match (self.beta_cap, other.beta_cap) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, None) => a,
            (None, b) => b,
        };
        let mut out = Self::zero(cap);
        for (&e, a) in &self.coeffs {
            for (&f, b) in &other.coeffs {
                out.add_term(e + f, &a.mul_capped(b, cap));
            }
        }
        out
    }

    /// Multiplies by `β^k · q^e`.
    pub fn shifted(&self, k: u32, e: i64) -> Self {
        let mut out = Self::zero(self.beta_cap);
        for (&f, c) in &self.coeffs {
            out.add_term(e + f, &c.shift(k, self.beta_cap));
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.beta_cap);
        for (&e, a) in &self.coeffs {
            out.add_term(e, &a.scale(c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BetaPoly {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    pub fn top(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn bottom(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BetaPoly)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// Truncates to a series that stores exponents `>= cutoff`.
    pub fn to_series(&self, cutoff: i64) -> LaurentSeries {
        let top = self.top().unwrap_or(cutoff - 1).max(cutoff - 1);
        LaurentSeries {
            coeffs: self
                .coeffs
                .range(cutoff..)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
            top,
            cutoff,
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .rev()
            .map(|(&e, c)| format_q_term(e, c))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn format_q_term(e: i64, c: &BetaPoly) -> String {
    let q = match e {
        0 => String::new(),
        1 => "q".to_string(),
        _ => format!("q^{e}"),
    };
    let single = c.terms().count() == 1;
    let cs = c.to_string();
    match (q.is_empty(), cs.as_str()) {
        (true, _) => cs,
        (false, "1") => q,
        (false, _) if single => format!("{cs}*{q}"),
        (false, _) => format!("({cs})*{q}"),
    }
}

/// A Laurent series in `q^{-1}` with coefficients in `Z[β]`.
///
/// Every coefficient of an exponent in `[cutoff, top]` is known exactly
/// (absent means zero); nothing is claimed below `cutoff`, and all exponents
/// above `top` vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    coeffs: BTreeMap<i64, BetaPoly>,
    top: i64,
    cutoff: i64,
}

/// The first place where two series disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesMismatch {
    pub exponent: i64,
    pub beta: u32,
    pub left: String,
    pub right: String,
}

impl LaurentSeries {
    pub fn top(&self) -> i64 {
        self.top
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    /// The coefficient of `q^exp`, or `None` below the cutoff.
    pub fn coeff(&self, exp: i64) -> Option<BetaPoly> {
        (exp >= self.cutoff).then(|| self.coeffs.get(&exp).cloned().unwrap_or_default())
    }

    /// Integer coefficient of `q^exp β^beta`, or `None` below the cutoff.
    pub fn coeff_int(&self, exp: i64, beta: u32) -> Option<BigInt> {
        self.coeff(exp).map(|c| c.coeff(beta))
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BetaPoly)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// Highest exponent actually carrying a nonzero coefficient.
    pub fn leading_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let cutoff = self.cutoff.max(other.cutoff);
        let mut coeffs: BTreeMap<i64, BetaPoly> = BTreeMap::new();
        for (&e, c) in self.coeffs.range(cutoff..).chain(other.coeffs.range(cutoff..)) {
            let slot = coeffs.entry(e).or_default();
            *slot += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentSeries {
            coeffs,
            top: self.top.max(other.top),
            cutoff,
        }
    }

    pub fn mul(&self, other: &Self, beta_cap: Option<u32>) -> Self {
        let cutoff = (self.cutoff + other.top).max(other.cutoff + self.top);
        let mut coeffs: BTreeMap<i64, BetaPoly> = BTreeMap::new();
        for (&e, a) in &self.coeffs {
            for (&f, b) in &other.coeffs {
                if e + f >= cutoff {
                    *coeffs.entry(e + f).or_default() += &a.mul_capped(b, beta_cap);
                }
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentSeries {
            coeffs,
            top: self.top + other.top,
            cutoff,
        }
    }

    /// Compares the two series on every exponent `>= from` known to both,
    /// and on `β`-degrees `<= beta_cap` (all degrees if `None`).
    pub fn first_difference(
        &self,
        other: &Self,
        from: i64,
        beta_cap: Option<u32>,
    ) -> Option<SeriesMismatch> {
        let lo = from.max(self.cutoff).max(other.cutoff);
        let hi = self.top.max(other.top);
        for e in (lo..=hi).rev() {
            let (a, b) = (self.coeff(e).unwrap_or_default(), other.coeff(e).unwrap_or_default());
            let deg = a.degree().max(b.degree()).unwrap_or(0);
            let deg = beta_cap.map_or(deg, |c| deg.min(c));
            for k in 0..=deg {
                let (x, y) = (a.coeff(k), b.coeff(k));
                if x != y {
                    return Some(SeriesMismatch {
                        exponent: e,
                        beta: k,
                        left: x.to_string(),
                        right: y.to_string(),
                    });
                }
            }
        }
        None
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            top: self.top,
            cutoff: self.cutoff,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| {
                    let terms = c
                        .terms()
                        .map(|(b, k)| TermJson::from_parts(&Monomial::from_indices(b, &[]), k))
                        .collect();
                    (e, terms)
                })
                .collect(),
        }
    }

    pub fn from_json(json: &SeriesJson) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (&e, terms) in &json.coeffs {
            if e < json.cutoff || e > json.top {
                return Err(Error::Parse(format!(
                    "exponent {e} outside [{}, {}]",
                    json.cutoff, json.top
                )));
            }
            let mut c = BetaPoly::zero();
            for t in terms {
                let (m, k) = t.to_parts()?;
                if !m.vars().is_empty() {
                    return Err(Error::Parse("series coefficients must not contain x".into()));
                }
                c += &BetaPoly::monomial(k, m.beta());
            }
            if !c.is_zero() {
                coeffs.insert(e, c);
            }
        }
        Ok(LaurentSeries {
            coeffs,
            top: json.top,
            cutoff: json.cutoff,
        })
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .rev()
            .map(|(&e, c)| format_q_term(e, c))
            .collect();
        if parts.is_empty() {
            write!(f, "O(q^{})", self.cutoff - 1)
        } else {
            write!(f, "{} + O(q^{})", parts.join(" + "), self.cutoff - 1)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub top: i64,
    pub cutoff: i64,
    pub coeffs: BTreeMap<i64, Vec<TermJson>>,
}

/// Expands `q^c · Π (q^a + 1) / Π (q^p − 1)` in powers of `q^{-1}` down to
/// `cutoff`, using `1/(q^p − 1) = q^{-p} + q^{-2p} + ⋯`.
pub fn expand_rational(c: i64, plus: &[u32], minus: &[u32], cutoff: i64) -> LaurentSeries {
    let mut num: BTreeMap<i64, BigInt> = BTreeMap::new();
    num.insert(c, BigInt::one());
    for &a in plus {
        let mut next = BTreeMap::new();
        for (&e, k) in &num {
            *next.entry(e + a as i64).or_insert_with(BigInt::zero) += k;
            *next.entry(e).or_insert_with(BigInt::zero) += k;
        }
        num = next;
    }
    let shift: i64 = minus.iter().map(|&p| p as i64).sum();
    let top = c + plus.iter().map(|&a| a as i64).sum::<i64>() - shift;
    let depth = (top - cutoff).max(-1);
    let partitions = partition_counts(minus, depth);
    let mut coeffs: BTreeMap<i64, BetaPoly> = BTreeMap::new();
    for (&e, k) in &num {
        let base = e - shift;
        for (d, count) in partitions.iter().enumerate() {
            let exp = base - d as i64;
            if exp < cutoff {
                break;
            }
            if !count.is_zero() {
                *coeffs.entry(exp).or_default() += &BetaPoly::constant(k * count);
            }
        }
    }
    coeffs.retain(|_, c| !c.is_zero());
    LaurentSeries {
        coeffs,
        top: top.max(cutoff - 1),
        cutoff,
    }
}

/// Coefficients of `Π 1/(1 − u^p)` up to `u^depth`.
fn partition_counts(parts: &[u32], depth: i64) -> Vec<BigInt> {
    if depth < 0 {
        return Vec::new();
    }
    let len = depth as usize + 1;
    let mut g = vec![BigInt::zero(); len];
    g[0] = BigInt::one();
    for &p in parts {
        let p = p as usize;
        for k in p..len {
            let prev = g[k - p].clone();
            g[k] += prev;
        }
    }
    g
}

/// Largest exponent that might still be affected by monomials discarded
/// when a polynomial was computed with variables `x_i`, `i >= floor`, and
/// `x`-degree at most `degree`, when the largest variable index is `top_index`.
///
/// Every exponent strictly above the bound is exact after `x_i ↦ q^{i−1}`.
pub fn soundness_bound(floor: i32, degree: u32, top_index: i32) -> i64 {
    let d = degree.max(1) as i64 - 1;
    (floor as i64 - 1) + d * (top_index as i64 - 1).max(0)
}

/// `x_i ↦ q^{i−1}`, keeping exponents `>= cutoff`.
///
/// The cutoff must lie above the soundness bound of the polynomial's window
/// and degree data (see [`soundness_bound`]); `degree` is the total
/// `x`-degree the discarded monomials could have had.
pub fn principal_specialize(p: &SparsePoly, degree: u32, cutoff: i64) -> Result<LaurentSeries> {
    let (lo, hi) = p.window();
    let bound = soundness_bound(lo, degree, hi);
    if cutoff <= bound {
        return Err(Error::SoundnessBound { cutoff, bound });
    }
    Ok(specialize_unchecked(p).to_series(cutoff))
}

pub(crate) fn specialize_unchecked(p: &SparsePoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero(p.beta_cap());
    for (m, c) in p.terms() {
        let e: i64 = m
            .vars()
            .iter()
            .map(|&(i, k)| (i as i64 - 1) * k as i64)
            .sum();
        out.add_term(e, &BetaPoly::monomial(c.clone(), m.beta()));
    }
    out
}

/// `x_i ↦ q^{i−1}` for a polynomial in positive-index variables.
pub fn finite_specialize_q(p: &SparsePoly) -> Result<LaurentPoly> {
    if let Some(i) = p.terms().find_map(|(m, _)| m.min_index().filter(|&i| i <= 0)) {
        return Err(Error::NegativeVariable(i));
    }
    Ok(specialize_unchecked(p))
}

/// The `q`-integer `[a]_q = 1 + q + ⋯ + q^{a−1}`.
pub fn q_integer(a: u32) -> LaurentPoly {
    let mut p = LaurentPoly::zero(None);
    for e in 0..a as i64 {
        p.add_term(e, &BetaPoly::one());
    }
    p
}

/// `[p]_q! = [1]_q [2]_q ⋯ [p]_q`.
pub fn q_factorial(p: u32) -> LaurentPoly {
    (1..=p).fold(LaurentPoly::one(None), |acc, a| acc.mul_ref(&q_integer(a)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &LaurentSeries, range: std::ops::RangeInclusive<i64>) -> Vec<i64> {
        range
            .rev()
            .map(|e| s.coeff_int(e, 0).unwrap().try_into().unwrap())
            .collect()
    }

    #[test]
    fn geometric_series() {
        let s = expand_rational(0, &[], &[1], -3);
        assert_eq!(ints(&s, -3..=0), vec![0, 1, 1, 1]);
        assert_eq!(s.coeff(-4), None);
    }

    #[test]
    fn two_simple_poles() {
        let s = expand_rational(4, &[], &[1, 1], -4);
        assert_eq!(ints(&s, -4..=2), vec![1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(s.top(), 2);
    }

    #[test]
    fn type_c_rank_two_series() {
        let s = expand_rational(1, &[], &[1, 1, 3], -9);
        assert_eq!(ints(&s, -9..=-4), vec![4, 8, 12, 20, 28, 36].into_iter().map(|c| c / 4).collect::<Vec<_>>());
        let s4 = LaurentSeries::mul(&s, &LaurentPoly::q_power(0, 4).to_series(-100), None);
        assert_eq!(ints(&s4, -9..=-4), vec![4, 8, 12, 20, 28, 36]);
        assert_eq!(s4.coeff_int(-3, 0), Some(0.into()));
    }

    #[test]
    fn series_arithmetic_tightens_cutoff() {
        let a = expand_rational(0, &[], &[1], -5);
        let b = expand_rational(0, &[], &[1], -8);
        assert_eq!(a.add(&b).cutoff(), -5);
        let ab = a.mul(&b, None);
        assert_eq!(ab.cutoff(), -6);
        let direct = expand_rational(0, &[], &[1, 1], -6);
        assert_eq!(ab.first_difference(&direct, i64::MIN, None), None);
    }

    #[test]
    fn specialization_respects_soundness() {
        let x0 = SparsePoly::var(0, -3, 2).unwrap();
        let sq = &x0 * &x0;
        let s = principal_specialize(&sq, 2, -2).unwrap();
        assert_eq!(s.coeff_int(-2, 0), Some(1.into()));
        assert_eq!(
            principal_specialize(&sq, 2, -3).unwrap_err(),
            Error::SoundnessBound { cutoff: -3, bound: -3 }
        );
    }

    #[test]
    fn finite_specialization() {
        let x = |i| SparsePoly::var(i, 1, 3).unwrap();
        let p = &(&x(1) * &x(1)) * &x(2);
        assert_eq!(finite_specialize_q(&p).unwrap(), LaurentPoly::q_power(1, 1));
        assert_eq!(finite_specialize_q(&x(1)).unwrap(), LaurentPoly::one(None));
        let y = SparsePoly::var(0, 0, 3).unwrap();
        assert_eq!(finite_specialize_q(&y).unwrap_err(), Error::NegativeVariable(0));
    }

    #[test]
    fn json_round_trip() {
        let s = expand_rational(1, &[2], &[1, 3], -10);
        let j = serde_json::to_string(&s.to_json()).unwrap();
        let back: SeriesJson = serde_json::from_str(&j).unwrap();
        assert_eq!(LaurentSeries::from_json(&back).unwrap(), s);
    }

    #[test]
    fn q_factorial_three() {
        let f = q_factorial(3);
        let expect = [1, 2, 2, 1];
        for (e, c) in expect.iter().enumerate() {
            assert_eq!(f.coeff(e as i64), BetaPoly::constant(*c));
        }
    }
}
