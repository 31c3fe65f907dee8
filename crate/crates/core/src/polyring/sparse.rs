use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `β^b · Π x_i^{e_i}`, with the `x` exponents sorted by variable index.
///
/// The derived order is the canonical term order: `β`-exponent first, then
/// the `(index, exponent)` pairs lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    beta: u32,
    vars: Vec<(i32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(i: i32) -> Self {
        Monomial {
            beta: 0,
            vars: vec![(i, 1)],
        }
    }

    /// Builds `β^beta · x_{i_1} ⋯ x_{i_p}` from a list of (possibly repeated) indices.
    pub fn from_indices(beta: u32, indices: &[i32]) -> Self {
        let mut counts: BTreeMap<i32, u32> = BTreeMap::new();
        for &i in indices {
            *counts.entry(i).or_default() += 1;
        }
        Monomial {
            beta,
            vars: counts.into_iter().collect(),
        }
    }

    pub fn from_parts(beta: u32, vars: BTreeMap<i32, u32>) -> Self {
        Monomial {
            beta,
            vars: vars.into_iter().filter(|&(_, e)| e > 0).collect(),
        }
    }

    pub fn beta(&self) -> u32 {
        self.beta
    }

    pub fn vars(&self) -> &[(i32, u32)] {
        &self.vars
    }

    pub fn xdeg(&self) -> u32 {
        self.vars.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, i: i32) -> u32 {
        self.vars
            .binary_search_by_key(&i, |&(j, _)| j)
            .map(|k| self.vars[k].1)
            .unwrap_or(0)
    }

    pub fn min_index(&self) -> Option<i32> {
        self.vars.first().map(|&(i, _)| i)
    }

    pub fn max_index(&self) -> Option<i32> {
        self.vars.last().map(|&(i, _)| i)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut vars = Vec::with_capacity(self.vars.len() + other.vars.len());
        let (mut a, mut b) = (self.vars.iter().peekable(), other.vars.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(i, e)), Some(&&(j, f))) => {
                    if i == j {
                        vars.push((i, e + f));
                        a.next();
                        b.next();
                    } else if i < j {
                        vars.push((i, e));
                        a.next();
                    } else {
                        vars.push((j, f));
                        b.next();
                    }
                }
                (Some(&&t), None) => {
                    vars.push(t);
                    a.next();
                }
                (None, Some(&&t)) => {
                    vars.push(t);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial {
            beta: self.beta + other.beta,
            vars,
        }
    }

    fn with_beta(&self, beta: u32) -> Monomial {
        Monomial {
            beta,
            vars: self.vars.clone(),
        }
    }

    fn map_indices(&self, f: impl Fn(i32) -> i32) -> Monomial {
        let mut counts: BTreeMap<i32, u32> = BTreeMap::new();
        for &(i, e) in &self.vars {
            *counts.entry(f(i)).or_default() += e;
        }
        Monomial::from_parts(self.beta, counts)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.beta {
            0 => {}
            1 => parts.push("b".to_string()),
            b => parts.push(format!("b^{b}")),
        }
        for &(i, e) in &self.vars {
            if e == 1 {
                parts.push(format!("x[{i}]"));
            } else {
                parts.push(format!("x[{i}]^{e}"));
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// An exact polynomial in `β` and the variables `x_i`, `lo <= i <= hi`.
///
/// Optional caps on the total `x`-degree and on the `β`-degree truncate every
/// result; both caps belong to the value, and arithmetic between values keeps
/// the tighter of the two caps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, BigInt>,
    lo: i32,
    hi: i32,
    xdeg_cap: Option<u32>,
    beta_cap: Option<u32>,
}

fn min_cap(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl SparsePoly {
    pub fn zero(lo: i32, hi: i32) -> Self {
        SparsePoly {
            terms: BTreeMap::new(),
            lo,
            hi,
            xdeg_cap: None,
            beta_cap: None,
        }
    }

    pub fn one(lo: i32, hi: i32) -> Self {
        Self::constant(1, lo, hi)
    }

    pub fn constant(c: impl Into<BigInt>, lo: i32, hi: i32) -> Self {
        let mut p = Self::zero(lo, hi);
        p.add_term(Monomial::one(), c.into());
        p
    }

    pub fn var(i: i32, lo: i32, hi: i32) -> Result<Self> {
        Self::term(1, Monomial::var(i), lo, hi)
    }

    pub fn beta(lo: i32, hi: i32) -> Self {
        let mut p = Self::zero(lo, hi);
        p.add_term(Monomial::from_indices(1, &[]), BigInt::one());
        p
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial, lo: i32, hi: i32) -> Result<Self> {
        if let Some(&(i, _)) = m.vars.iter().find(|&&(i, _)| i < lo || i > hi) {
            return Err(Error::WindowOverflow { index: i, lo, hi });
        }
        let mut p = Self::zero(lo, hi);
        p.add_term(m, c.into());
        Ok(p)
    }

    /// Same polynomial with the given caps applied.
    pub fn with_caps(mut self, xdeg_cap: Option<u32>, beta_cap: Option<u32>) -> Self {
        self.xdeg_cap = min_cap(self.xdeg_cap, xdeg_cap);
        self.beta_cap = min_cap(self.beta_cap, beta_cap);
        let (xc, bc) = (self.xdeg_cap, self.beta_cap);
        self.terms
            .retain(|m, _| xc.is_none_or(|c| m.xdeg() <= c) && bc.is_none_or(|c| m.beta <= c));
        self
    }

    /// Same terms, reported in a (larger) window.
    pub fn with_window(mut self, lo: i32, hi: i32) -> Result<Self> {
        for m in self.terms.keys() {
            if let (Some(a), Some(b)) = (m.min_index(), m.max_index()) {
                if a < lo || b > hi {
                    return Err(Error::WindowOverflow {
                        index: if a < lo { a } else { b },
                        lo,
                        hi,
                    });
                }
            }
        }
        self.lo = lo;
        self.hi = hi;
        Ok(self)
    }

    pub fn window(&self) -> (i32, i32) {
        (self.lo, self.hi)
    }

    pub fn xdeg_cap(&self) -> Option<u32> {
        self.xdeg_cap
    }

    pub fn beta_cap(&self) -> Option<u32> {
        self.beta_cap
    }

    fn admits(&self, m: &Monomial) -> bool {
        self.xdeg_cap.is_none_or(|c| m.xdeg() <= c) && self.beta_cap.is_none_or(|c| m.beta <= c)
    }

    /// Adds `c · m`, respecting caps. The window is not checked.
    pub(crate) fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() || !self.admits(&m) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn max_xdeg(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::xdeg).max()
    }

    fn empty_like(&self, other: &Self) -> Self {
        SparsePoly {
            terms: BTreeMap::new(),
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
            xdeg_cap: min_cap(self.xdeg_cap, other.xdeg_cap),
            beta_cap: min_cap(self.beta_cap, other.beta_cap),
        }
    }

    fn map_terms(&self, f: impl Fn(&Monomial, &BigInt) -> Option<(Monomial, BigInt)>) -> Self {
        let mut out = SparsePoly {
            terms: BTreeMap::new(),
            ..*self
        };
        for (m, c) in &self.terms {
            if let Some((m2, c2)) = f(m, c) {
                out.add_term(m2, c2);
            }
        }
        out
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        self.lo = self.lo.min(other.lo);
        self.hi = self.hi.max(other.hi);
        if other.xdeg_cap != self.xdeg_cap || other.beta_cap != self.beta_cap {
            let capped = std::mem::replace(self, Self::zero(0, 0))
                .with_caps(other.xdeg_cap, other.beta_cap);
            *self = capped;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let mut out = self.empty_like(other);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                if out.admits(&m) {
                    out.add_term(m, c1 * c2);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self.map_terms(|m, a| Some((m.clone(), a * c)))
    }

    /// Multiplies by `β`.
    pub fn mul_beta(&self) -> Self {
        self.map_terms(|m, c| Some((m.with_beta(m.beta + 1), c.clone())))
    }

    /// `a ⊕ b = a + b + β a b`.
    pub fn oplus(&self, other: &Self) -> Self {
        let mut out = self + other;
        out.add_assign_ref(&self.mul_ref(other).mul_beta());
        out
    }

    /// Keeps only terms with `β`-degree at most `cap`.
    pub fn truncate_beta(&self, cap: u32) -> Self {
        self.map_terms(|m, c| (m.beta <= cap).then(|| (m.clone(), c.clone())))
    }

    /// The part of `self` of `β`-degree exactly `k`.
    pub fn beta_slice(&self, k: u32) -> Self {
        self.map_terms(|m, c| (m.beta == k).then(|| (m.clone(), c.clone())))
    }

    /// Substitutes `x_i = 0` for every `i` with `pred(i)`.
    pub fn set_zero(&self, pred: impl Fn(i32) -> bool) -> Self {
        self.map_terms(|m, c| (!m.vars.iter().any(|&(i, _)| pred(i))).then(|| (m.clone(), c.clone())))
    }

    /// Substitutes `β = 0`.
    pub fn beta_zero(&self) -> Self {
        self.beta_slice(0)
    }

    /// Monomials whose smallest variable index exceeds `threshold`
    /// (constants always qualify).
    pub fn trusted_part(&self, threshold: i32) -> Self {
        self.map_terms(|m, c| {
            m.min_index()
                .is_none_or(|i| i > threshold)
                .then(|| (m.clone(), c.clone()))
        })
    }

    /// Exchanges the variables `x_i` and `x_j`.
    pub fn swap_variables(&self, i: i32, j: i32) -> Self {
        self.map_terms(|m, c| {
            Some((
                m.map_indices(|k| if k == i { j } else if k == j { i } else { k }),
                c.clone(),
            ))
        })
    }

    /// Term-by-term comparison ignoring windows and caps; returns the first
    /// monomial (in canonical order) where the coefficients differ.
    pub fn first_difference(&self, other: &Self) -> Option<(Monomial, BigInt, BigInt)> {
        let keys: std::collections::BTreeSet<&Monomial> =
            self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().find_map(|m| {
            let (a, b) = (self.coeff(m), other.coeff(m));
            (a != b).then(|| (m.clone(), a, b))
        })
    }

    pub fn terms_eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }

    /// Whether every coefficient is divisible by `d`, and the quotient if so.
    pub fn exact_div(&self, d: &BigInt) -> Option<Self> {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            if !(&*c % d).is_zero() {
                return None;
            }
            *c = &*c / d;
        }
        Some(out)
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            window: [self.lo, self.hi],
            xdeg_cap: self.xdeg_cap,
            beta_cap: self.beta_cap,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson::from_parts(m, c))
                .collect(),
        }
    }

    pub fn from_json(json: &PolyJson) -> Result<Self> {
        let [lo, hi] = json.window;
        let mut p = Self::zero(lo, hi).with_caps(json.xdeg_cap, json.beta_cap);
        for t in &json.terms {
            let (m, c) = t.to_parts()?;
            p.add_assign_ref(&Self::term(c, m, lo, hi)?.with_caps(json.xdeg_cap, json.beta_cap));
        }
        Ok(p)
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;

    fn add(self, other: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out.add_assign_ref(other);
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        self.map_terms(|m, c| Some((m.clone(), -c)))
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;

    fn sub(self, other: &SparsePoly) -> SparsePoly {
        self + &(-other)
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;

    fn mul(self, other: &SparsePoly) -> SparsePoly {
        self.mul_ref(other)
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *m == Monomial::one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

/// One term in the JSON interchange format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub beta: u32,
    pub x: BTreeMap<i32, u32>,
}

impl TermJson {
    pub fn from_parts(m: &Monomial, c: &BigInt) -> Self {
        TermJson {
            coeff: c.to_string(),
            beta: m.beta,
            x: m.vars.iter().copied().collect(),
        }
    }

    pub fn to_parts(&self) -> Result<(Monomial, BigInt)> {
        let c: BigInt = self
            .coeff
            .parse()
            .map_err(|e| Error::Parse(format!("bad coefficient {:?}: {e}", self.coeff)))?;
        Ok((Monomial::from_parts(self.beta, self.x.clone()), c))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub window: [i32; 2],
    pub xdeg_cap: Option<u32>,
    pub beta_cap: Option<u32>,
    pub terms: Vec<TermJson>,
}
