//! Signed permutations and the Coxeter groups `S_n`, `W^BC_n` and `W^D_n`.
//!
//! Every element is stored as its window `[w(1), ..., w(N)]`; the values on
//! negative integers follow from `w(-i) = -w(i)` and everything outside the
//! window is fixed. Trailing fixed points are trimmed so that equal group
//! elements compare (and hash) equal regardless of the window they were
//! built in.
//!
//! Generator labels are plain integers:
//!
//! | type | labels              | generator                          |
//! |------|---------------------|------------------------------------|
//! | A    | `1..n-1`            | `s_i = (i, i+1)`                   |
//! | BC   | `0..n-1`            | `t_0 = (-1, 1)`, `t_i = t_{-i}`     |
//! | D    | `-1, 1..n-1`        | `r_{-1} = (1,-2)(-1,2)`, `r_i = t_i` |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupType {
    A,
    BC,
    D,
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupType::A => "A",
            GroupType::BC => "BC",
            GroupType::D => "D",
        })
    }
}

/// A finite classical Coxeter group: a type together with its rank `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupKind {
    ty: GroupType,
    rank: usize,
}

impl GroupKind {
    pub fn new(ty: GroupType, rank: usize) -> Result<Self> {
        let min = if ty == GroupType::D { 2 } else { 1 };
        if rank < min {
            return Err(Error::InvalidRank {
                ty: match ty {
                    GroupType::A => "A",
                    GroupType::BC => "BC",
                    GroupType::D => "D",
                },
                rank,
            });
        }
        Ok(GroupKind { ty, rank })
    }

    pub fn a(rank: usize) -> Result<Self> {
        Self::new(GroupType::A, rank)
    }

    pub fn bc(rank: usize) -> Result<Self> {
        Self::new(GroupType::BC, rank)
    }

    pub fn d(rank: usize) -> Result<Self> {
        Self::new(GroupType::D, rank)
    }

    pub fn ty(&self) -> GroupType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Canonical generator labels, in the order used for enumeration.
    pub fn generators(&self) -> Vec<i32> {
        let n = self.rank as i32;
        match self.ty {
            GroupType::A => (1..n).collect(),
            GroupType::BC => (0..n).collect(),
            GroupType::D => std::iter::once(-1).chain(1..n).collect(),
        }
    }

    fn allowed_labels(&self) -> String {
        let n = self.rank as i32;
        match self.ty {
            GroupType::A if n == 1 => "none".to_string(),
            GroupType::A => format!("1..={}", n - 1),
            GroupType::BC => format!("{}..={}", -(n - 1), n - 1),
            GroupType::D => format!("-1, ±2..=±{} and 1..={}", n - 1, n - 1),
        }
    }

    /// Maps an alias such as `t_{-i}` or `r_{-i}` (i ≥ 2) to its canonical label.
    pub fn normalize_generator(&self, label: i32) -> Result<i32> {
        let n = self.rank as i32;
        let ok = match self.ty {
            GroupType::A => (1..n).contains(&label).then_some(label),
            GroupType::BC => (label.abs() < n).then_some(label.abs()),
            GroupType::D => match label {
                -1 => Some(-1),
                l if l.abs() >= 1 && l.abs() < n => Some(if l == 1 { 1 } else { l.abs() }),
                _ => None,
            },
        };
        ok.ok_or_else(|| Error::InvalidGenerator {
            label,
            kind: *self,
            allowed: self.allowed_labels(),
        })
    }

    pub fn contains(&self, w: &SignedPermutation) -> bool {
        if w.window_size() > self.rank {
            return false;
        }
        match self.ty {
            GroupType::A => w.images.iter().all(|&v| v > 0),
            GroupType::BC => true,
            GroupType::D => w.ell_zero().is_multiple_of(2),
        }
    }

    pub fn check(&self, w: &SignedPermutation) -> Result<()> {
        if self.contains(w) {
            Ok(())
        } else {
            Err(Error::NotInGroup {
                perm: w.to_string(),
                kind: *self,
            })
        }
    }

    /// Number of group elements.
    pub fn order(&self) -> usize {
        let fact: usize = (1..=self.rank).product();
        match self.ty {
            GroupType::A => fact,
            GroupType::BC => fact << self.rank,
            GroupType::D => fact << (self.rank - 1),
        }
    }

    pub fn longest_length(&self) -> usize {
        let n = self.rank;
        match self.ty {
            GroupType::A => n * (n - 1) / 2,
            GroupType::BC => n * n,
            GroupType::D => n * (n - 1),
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ty {
            GroupType::A => write!(f, "S_{}", self.rank),
            GroupType::BC => write!(f, "W^BC_{}", self.rank),
            GroupType::D => write!(f, "W^D_{}", self.rank),
        }
    }
}

/// A permutation `w` of the integers with `w(-i) = -w(i)` that fixes every
/// `i` outside a finite window.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn identity() -> Self {
        SignedPermutation { images: Vec::new() }
    }

    /// Builds `w` from `[w(1), ..., w(N)]`, checking bijectivity.
    pub fn from_window(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n {
                return Err(Error::Parse(format!(
                    "image {v} out of range for window of size {n}"
                )));
            }
            if seen[a] {
                return Err(Error::Parse(format!("repeated absolute value {a}")));
            }
            seen[a] = true;
        }
        Ok(Self::trimmed(images))
    }

    fn trimmed(mut images: Vec<i32>) -> Self {
        while images.last() == Some(&(images.len() as i32)) {
            images.pop();
        }
        SignedPermutation { images }
    }

    /// Smallest `N` such that `w` fixes every `i > N`.
    pub fn window_size(&self) -> usize {
        self.images.len()
    }

    /// The window `[w(1), ..., w(n)]`, padded with fixed points.
    pub fn window(&self, n: usize) -> Vec<i32> {
        (1..=n.max(self.images.len()) as i32)
            .map(|i| self.apply(i))
            .collect()
    }

    pub fn apply(&self, i: i32) -> i32 {
        let a = i.unsigned_abs() as usize;
        if i == 0 || a > self.images.len() {
            i
        } else {
            i.signum() * self.images[a - 1]
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.is_empty()
    }

    pub fn inverse(&self) -> Self {
        let n = self.images.len();
        let mut inv = vec![0; n];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v.unsigned_abs() as usize - 1] = v.signum() * (i as i32 + 1);
        }
        SignedPermutation { images: inv }
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.images.len().max(other.images.len()) as i32;
        Self::trimmed((1..=n).map(|i| self.apply(other.apply(i))).collect())
    }

    /// `ℓ_0(w)`: the number of positive `i` with `w(i) < 0`.
    pub fn ell_zero(&self) -> usize {
        self.images.iter().filter(|&&v| v < 0).count()
    }

    /// Whether `s_g` (in the labelling of `ty`) is a right descent of `w`.
    pub fn has_right_descent(&self, ty: GroupType, g: i32) -> bool {
        match (ty, g) {
            (GroupType::BC, 0) => self.apply(1) < 0,
            (GroupType::D, -1) => self.apply(1) + self.apply(2) < 0,
            (_, g) => self.apply(g) > self.apply(g + 1),
        }
    }

    /// Right multiplication `w · s_g`.
    pub fn mul_generator(&self, ty: GroupType, g: i32) -> Self {
        let need = (g.max(1) + 1) as usize;
        let mut v = self.window(need);
        match (ty, g) {
            (GroupType::BC, 0) => v[0] = -v[0],
            (GroupType::D, -1) => {
                let (a, b) = (v[0], v[1]);
                v[0] = -b;
                v[1] = -a;
            }
            (_, g) => v.swap(g as usize - 1, g as usize),
        }
        Self::trimmed(v)
    }

    /// Parses the comma-separated window notation, e.g. `"2,-1,3"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::identity());
        }
        let images = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i32>()
                    .map_err(|e| Error::Parse(format!("bad image {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_window(images)
    }
}

impl TryFrom<Vec<i32>> for SignedPermutation {
    type Error = Error;

    fn try_from(images: Vec<i32>) -> Result<Self> {
        Self::from_window(images)
    }
}

impl From<SignedPermutation> for Vec<i32> {
    fn from(w: SignedPermutation) -> Vec<i32> {
        w.images
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.images.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

pub fn identity(_kind: GroupKind) -> SignedPermutation {
    SignedPermutation::identity()
}

pub fn generator(kind: GroupKind, label: i32) -> Result<SignedPermutation> {
    let g = kind.normalize_generator(label)?;
    Ok(SignedPermutation::identity().mul_generator(kind.ty(), g))
}

/// `a ∘ b` after checking that both factors lie in `kind`.
pub fn multiply(
    kind: GroupKind,
    a: &SignedPermutation,
    b: &SignedPermutation,
) -> Result<SignedPermutation> {
    kind.check(a)?;
    kind.check(b)?;
    Ok(a.compose(b))
}

/// Coxeter length, found by repeatedly stripping a right descent.
pub fn coxeter_length(kind: GroupKind, w: &SignedPermutation) -> Result<usize> {
    kind.check(w)?;
    Ok(length_unchecked(kind, w))
}

pub(crate) fn length_unchecked(kind: GroupKind, w: &SignedPermutation) -> usize {
    let gens = kind.generators();
    let mut w = w.clone();
    let mut len = 0;
    while let Some(&g) = gens.iter().find(|&&g| w.has_right_descent(kind.ty(), g)) {
        w = w.mul_generator(kind.ty(), g);
        len += 1;
    }
    len
}

/// One reduced word (as canonical generator labels) for `w`.
pub fn reduced_word(kind: GroupKind, w: &SignedPermutation) -> Result<Vec<i32>> {
    kind.check(w)?;
    let gens = kind.generators();
    let mut w = w.clone();
    let mut word = Vec::new();
    while let Some(&g) = gens.iter().find(|&&g| w.has_right_descent(kind.ty(), g)) {
        w = w.mul_generator(kind.ty(), g);
        word.push(g);
    }
    word.reverse();
    Ok(word)
}

/// Demazure (0-Hecke) product of a sequence of generator labels.
///
/// Returns `(w, k)` with `π_{a_1} ⋯ π_{a_N} = β^k π_w`, so `k = N - ℓ(w)`.
pub fn demazure_product(kind: GroupKind, labels: &[i32]) -> Result<(SignedPermutation, usize)> {
    let mut w = SignedPermutation::identity();
    let mut k = 0;
    for &label in labels {
        let g = kind.normalize_generator(label)?;
        if w.has_right_descent(kind.ty(), g) {
            k += 1;
        } else {
            w = w.mul_generator(kind.ty(), g);
        }
    }
    Ok((w, k))
}

/// Demazure product of two group elements: `π_u π_v = β^k π_w`.
pub fn demazure_multiply(
    kind: GroupKind,
    u: &SignedPermutation,
    v: &SignedPermutation,
) -> Result<(SignedPermutation, usize)> {
    kind.check(u)?;
    let mut w = u.clone();
    let mut k = 0;
    for g in reduced_word(kind, v)? {
        if w.has_right_descent(kind.ty(), g) {
            k += 1;
        } else {
            w = w.mul_generator(kind.ty(), g);
        }
    }
    Ok((w, k))
}

pub fn ell_zero(w: &SignedPermutation) -> usize {
    w.ell_zero()
}

/// The diagram automorphism of `W^D_n` exchanging `r_1` and `r_{-1}`,
/// realized as conjugation by `t_0`.
pub fn star(w: &SignedPermutation) -> Result<SignedPermutation> {
    if !w.ell_zero().is_multiple_of(2) {
        let rank = w.window_size().max(2);
        return Err(Error::NotInGroup {
            perm: w.to_string(),
            kind: GroupKind::d(rank)?,
        });
    }
    Ok(w.mul_generator(GroupType::BC, 0).conjugate_sign_first())
}

impl SignedPermutation {
    // t_0 · w: negate every image whose absolute value is 1.
    fn conjugate_sign_first(&self) -> Self {
        let v = self
            .window(1)
            .into_iter()
            .map(|x| if x.abs() == 1 { -x } else { x })
            .collect();
        Self::trimmed(v)
    }
}

/// All elements of the group, sorted.
pub fn elements(kind: GroupKind) -> Vec<SignedPermutation> {
    let n = kind.rank();
    let mut perms = Vec::new();
    let mut current: Vec<i32> = (1..=n as i32).collect();
    permutations(&mut current, 0, &mut perms);
    let mut out = Vec::with_capacity(kind.order());
    for p in perms {
        match kind.ty() {
            GroupType::A => out.push(SignedPermutation::trimmed(p)),
            GroupType::BC | GroupType::D => {
                for mask in 0u32..(1 << n) {
                    if kind.ty() == GroupType::D && mask.count_ones() % 2 == 1 {
                        continue;
                    }
                    let v = p
                        .iter()
                        .enumerate()
                        .map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x })
                        .collect();
                    out.push(SignedPermutation::trimmed(v));
                }
            }
        }
    }
    out.sort();
    out
}

fn permutations(v: &mut Vec<i32>, k: usize, out: &mut Vec<Vec<i32>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, out);
        v.swap(k, i);
    }
}
