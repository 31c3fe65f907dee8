//! Words over the typed alphabets used for reduced and Hecke words, bounded
//! compatible sequences, and the word statistics (`comaj` and its variants).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::permgroup::{GroupKind, GroupType, SignedPermutation};

/// A single letter: a plain integer, the formal letter `-0`, or a primed
/// integer `a'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Int(i32),
    MinusZero,
    Primed(i32),
}

impl Letter {
    /// Absolute value of the letter, forgetting signs and primes.
    pub fn magnitude(self) -> i32 {
        match self {
            Letter::Int(v) | Letter::Primed(v) => v.abs(),
            Letter::MinusZero => 0,
        }
    }

    pub fn unprimed(self) -> Letter {
        match self {
            Letter::Primed(v) => Letter::Int(v),
            l => l,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Int(v) => write!(f, "{v}"),
            Letter::MinusZero => f.write_str("-0"),
            Letter::Primed(v) => write!(f, "{v}'"),
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-0" {
            return Ok(Letter::MinusZero);
        }
        let (body, primed) = match s.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let v: i32 = body
            .parse()
            .map_err(|e| Error::Parse(format!("bad letter {s:?}: {e}")))?;
        match (primed, v) {
            (true, 0) => Err(Error::Parse("0 cannot be primed".into())),
            (true, v) => Ok(Letter::Primed(v)),
            (false, v) => Ok(Letter::Int(v)),
        }
    }
}

/// The alphabet a word is drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WordKind {
    /// `1..n-1`.
    A,
    /// `-(n-1)..n-1`, with `0` but without `-0`.
    BSigned,
    /// `-(n-1)..n-1` together with `-0`.
    CSigned,
    /// `0..n-1`.
    CNonneg,
    /// `±1..±(n-1)`; `1` and `-1` are different generators.
    DSigned,
    /// The `DSigned` letters and their primed copies.
    DPrimed,
}

impl WordKind {
    pub fn group_type(self) -> GroupType {
        match self {
            WordKind::A => GroupType::A,
            WordKind::BSigned | WordKind::CSigned | WordKind::CNonneg => GroupType::BC,
            WordKind::DSigned | WordKind::DPrimed => GroupType::D,
        }
    }

    pub fn group(self, rank: usize) -> Result<GroupKind> {
        GroupKind::new(self.group_type(), rank)
    }

    pub fn name(self) -> &'static str {
        match self {
            WordKind::A => "A",
            WordKind::BSigned => "B±",
            WordKind::CSigned => "C±",
            WordKind::CNonneg => "C≥0",
            WordKind::DSigned => "D±",
            WordKind::DPrimed => "Dprimed",
        }
    }

    pub fn contains(self, rank: usize, letter: Letter) -> bool {
        let m = rank as i32 - 1;
        match (self, letter) {
            (WordKind::A, Letter::Int(v)) => (1..=m).contains(&v),
            (WordKind::BSigned, Letter::Int(v)) | (WordKind::CSigned, Letter::Int(v)) => {
                v.abs() <= m
            }
            (WordKind::CSigned, Letter::MinusZero) => m >= 0,
            (WordKind::CNonneg, Letter::Int(v)) => (0..=m).contains(&v),
            (WordKind::DSigned, Letter::Int(v))
            | (WordKind::DPrimed, Letter::Int(v))
            | (WordKind::DPrimed, Letter::Primed(v)) => v != 0 && v.abs() <= m,
            _ => false,
        }
    }

    /// The generator label (in the labelling of [`crate::permgroup`]) named
    /// by a letter of this alphabet.
    pub fn generator(self, letter: Letter) -> i32 {
        match (self.group_type(), letter.unprimed()) {
            (_, Letter::MinusZero) => 0,
            (GroupType::A, Letter::Int(v)) => v,
            (GroupType::BC, Letter::Int(v)) => v.abs(),
            (GroupType::D, Letter::Int(-1)) => -1,
            (GroupType::D, Letter::Int(v)) => v.abs(),
            (_, Letter::Primed(_)) => unreachable!("unprimed above"),
        }
    }

    /// All letters of this alphabet naming the generator `g`.
    pub fn decorations(self, g: i32) -> Vec<Letter> {
        match self {
            WordKind::A | WordKind::CNonneg => vec![Letter::Int(g)],
            WordKind::BSigned if g == 0 => vec![Letter::Int(0)],
            WordKind::CSigned if g == 0 => vec![Letter::MinusZero, Letter::Int(0)],
            WordKind::BSigned | WordKind::CSigned => vec![Letter::Int(-g), Letter::Int(g)],
            WordKind::DSigned if g.abs() == 1 => vec![Letter::Int(g)],
            WordKind::DSigned => vec![Letter::Int(-g), Letter::Int(g)],
            WordKind::DPrimed => WordKind::DSigned
                .decorations(g)
                .into_iter()
                .flat_map(|l| [Letter::Primed(l.magnitude() * sign(l)), l])
                .collect(),
        }
    }

    /// Sort key for the order used by compatible sequences: integers in
    /// their usual order with `-0` between `-1` and `0`; primed alphabets
    /// use the primed order of [`Statistic::ComajD`].
    fn compat_key(self, letter: Letter) -> i64 {
        match self {
            WordKind::DPrimed => comaj_d_key(letter),
            _ => match letter {
                Letter::Int(v) | Letter::Primed(v) => 2 * v as i64,
                Letter::MinusZero => -1,
            },
        }
    }

    /// Largest positive index a compatible sequence may place under `letter`
    /// (0 when no positive index is allowed).
    fn positive_bound(self, letter: Letter) -> i32 {
        match letter {
            Letter::Int(v) if v > 0 => v,
            Letter::Primed(v) if v > 0 => v - 1,
            _ => 0,
        }
    }
}

fn sign(l: Letter) -> i32 {
    match l {
        Letter::Int(v) | Letter::Primed(v) if v < 0 => -1,
        _ => 1,
    }
}

impl fmt::Display for WordKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A finite word over the alphabet of a given kind and rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LetterWord {
    letters: Vec<Letter>,
    kind: WordKind,
    rank: usize,
}

impl LetterWord {
    pub fn new(kind: WordKind, rank: usize, letters: Vec<Letter>) -> Result<Self> {
        if let Some(l) = letters.iter().find(|&&l| !kind.contains(rank, l)) {
            return Err(Error::LetterNotInAlphabet {
                letter: l.to_string(),
                alphabet: kind.to_string(),
                rank,
            });
        }
        Ok(LetterWord {
            letters,
            kind,
            rank,
        })
    }

    pub fn from_ints(kind: WordKind, rank: usize, letters: &[i32]) -> Result<Self> {
        Self::new(kind, rank, letters.iter().map(|&v| Letter::Int(v)).collect())
    }

    /// Parses comma-separated letters such as `"2',-1',-1,-3,2"`.
    pub fn parse(kind: WordKind, rank: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        let letters = if s.is_empty() {
            Vec::new()
        } else {
            s.split(',').map(str::parse).collect::<Result<Vec<Letter>>>()?
        };
        Self::new(kind, rank, letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn kind(&self) -> WordKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The generator labels named by the letters.
    pub fn generators(&self) -> Vec<i32> {
        self.letters.iter().map(|&l| self.kind.generator(l)).collect()
    }
}

impl fmt::Display for LetterWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(Letter::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// All generator words of length `ℓ(w) + k` whose Demazure product is `w`.
///
/// The last letter `s` of such a word is a right descent of `w`, and the
/// prefix is a Hecke word either for `ws` (same `k`) or for `w` (one fewer
/// extra letter).
struct HeckeEnumerator {
    group: GroupKind,
    memo: HashMap<(SignedPermutation, usize), Vec<Vec<i32>>>,
}

impl HeckeEnumerator {
    fn words(&mut self, w: &SignedPermutation, k: usize) -> Vec<Vec<i32>> {
        if w.is_identity() {
            return if k == 0 { vec![Vec::new()] } else { Vec::new() };
        }
        let key = (w.clone(), k);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let ty = self.group.ty();
        let mut out = Vec::new();
        for g in self.group.generators() {
            if !w.has_right_descent(ty, g) {
                continue;
            }
            let ws = w.mul_generator(ty, g);
            let mut prefixes = self.words(&ws, k);
            if k > 0 {
                prefixes.extend(self.words(w, k - 1));
            }
            for mut p in prefixes {
                p.push(g);
                out.push(p);
            }
        }
        self.memo.insert(key, out.clone());
        out
    }
}

/// Generator words for `w` of length `ℓ(w) + k` for every `k <= max_extra`,
/// grouped by `k`.
pub fn hecke_generator_words(
    group: GroupKind,
    w: &SignedPermutation,
    max_extra: usize,
) -> Result<Vec<Vec<Vec<i32>>>> {
    group.check(w)?;
    let mut e = HeckeEnumerator {
        group,
        memo: HashMap::new(),
    };
    Ok((0..=max_extra)
        .map(|k| {
            let mut ws = e.words(w, k);
            ws.sort();
            ws
        })
        .collect())
}

fn decorate_all(kind: WordKind, rank: usize, gens: &[i32], out: &mut Vec<LetterWord>) {
    let options: Vec<Vec<Letter>> = gens.iter().map(|&g| kind.decorations(g)).collect();
    let mut current = Vec::with_capacity(gens.len());
    fn rec(
        options: &[Vec<Letter>],
        current: &mut Vec<Letter>,
        kind: WordKind,
        rank: usize,
        out: &mut Vec<LetterWord>,
    ) {
        match options.split_first() {
            None => out.push(LetterWord {
                letters: current.clone(),
                kind,
                rank,
            }),
            Some((first, rest)) => {
                for &l in first {
                    current.push(l);
                    rec(rest, current, kind, rank, out);
                    current.pop();
                }
            }
        }
    }
    rec(&options, &mut current, kind, rank, out);
}

/// All words over the alphabet of `kind` of length at most
/// `ℓ(w) + max_extra` whose Demazure product is `w`, sorted.
pub fn hecke_words(
    kind: WordKind,
    rank: usize,
    w: &SignedPermutation,
    max_extra: usize,
) -> Result<Vec<LetterWord>> {
    let group = kind.group(rank)?;
    let mut out = Vec::new();
    for by_len in hecke_generator_words(group, w, max_extra)? {
        for gens in by_len {
            decorate_all(kind, rank, &gens, &mut out);
        }
    }
    out.sort();
    Ok(out)
}

/// All minimal-length words over the alphabet of `kind` for `w`, sorted.
pub fn reduced_words(kind: WordKind, rank: usize, w: &SignedPermutation) -> Result<Vec<LetterWord>> {
    hecke_words(kind, rank, w, 0)
}

/// All bounded compatible sequences `min_index <= i_1 <= ⋯ <= i_p` for `a`.
pub fn compatible_sequences(a: &LetterWord, min_index: i32) -> Vec<Vec<i32>> {
    let kind = a.kind;
    let bounds: Vec<i32> = a.letters.iter().map(|&l| kind.positive_bound(l)).collect();
    let strict: Vec<bool> = a
        .letters
        .windows(2)
        .map(|p| kind.compat_key(p[0]) <= kind.compat_key(p[1]))
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(a.len());
    compat_rec(&bounds, &strict, min_index, &mut current, &mut out);
    out
}

fn compat_rec(
    bounds: &[i32],
    strict: &[bool],
    lo: i32,
    current: &mut Vec<i32>,
    out: &mut Vec<Vec<i32>>,
) {
    let j = current.len();
    if j == bounds.len() {
        out.push(current.clone());
        return;
    }
    for i in lo..=bounds[j] {
        current.push(i);
        let next = if j < strict.len() && strict[j] { i + 1 } else { i };
        compat_rec(bounds, strict, next, current, out);
        current.pop();
    }
}

/// The word statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statistic {
    /// Sum of the ascent positions `i` with `a_i < a_{i+1}`.
    Comaj,
    /// `comaj` for the order `-0 ≺ 0 ≺ -1 ≺ 1 ≺ -2 ≺ 2 ≺ ⋯`.
    ComajBC,
    /// Number of positive letters plus twice the sum of ascent positions for
    /// the order `-1 ≺ -2 ≺ ⋯ ≺ 1 ≺ 2 ≺ ⋯` (primed letters just below their
    /// unprimed copies).
    ComajD,
    /// Sum of the letters.
    Sum,
    /// Sum of the positive letters.
    SigmaBC,
    /// Sum of `|a_i|` over the unprimed letters.
    SigmaD,
}

impl Statistic {
    pub fn name(self) -> &'static str {
        match self {
            Statistic::Comaj => "comaj",
            Statistic::ComajBC => "comaj_BC",
            Statistic::ComajD => "comaj_D",
            Statistic::Sum => "sum",
            Statistic::SigmaBC => "sigma_BC",
            Statistic::SigmaD => "sigma_D",
        }
    }

    fn applies_to(self, kind: WordKind) -> bool {
        use WordKind::*;
        match self {
            Statistic::Comaj | Statistic::Sum => matches!(kind, A | CNonneg),
            Statistic::ComajBC | Statistic::SigmaBC => matches!(kind, BSigned | CSigned | CNonneg),
            Statistic::ComajD | Statistic::SigmaD => matches!(kind, DSigned | DPrimed),
        }
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "comaj" => Statistic::Comaj,
            "comaj_BC" | "comaj_bc" => Statistic::ComajBC,
            "comaj_D" | "comaj_d" => Statistic::ComajD,
            "sum" => Statistic::Sum,
            "sigma_BC" | "sigma_bc" => Statistic::SigmaBC,
            "sigma_D" | "sigma_d" => Statistic::SigmaD,
            _ => return Err(Error::Parse(format!("unknown statistic {s:?}"))),
        })
    }
}

fn comaj_bc_key(l: Letter) -> i64 {
    match l {
        Letter::MinusZero => 0,
        Letter::Int(0) => 1,
        Letter::Int(v) | Letter::Primed(v) if v < 0 => 2 * (-v as i64),
        Letter::Int(v) | Letter::Primed(v) => 2 * v as i64 + 1,
    }
}

const D_POSITIVE_OFFSET: i64 = 1 << 20;

fn comaj_d_key(l: Letter) -> i64 {
    let (v, primed) = match l {
        Letter::Int(v) => (v, false),
        Letter::Primed(v) => (v, true),
        Letter::MinusZero => (0, false),
    };
    let base = 2 * v.abs() as i64 - primed as i64;
    if v < 0 {
        base
    } else {
        D_POSITIVE_OFFSET + base
    }
}

fn ascent_sum(letters: &[Letter], key: impl Fn(Letter) -> i64, weight: u64) -> u64 {
    letters
        .windows(2)
        .enumerate()
        .filter(|(_, p)| key(p[0]) < key(p[1]))
        .map(|(i, _)| weight * (i as u64 + 1))
        .sum()
}

fn int_key(l: Letter) -> i64 {
    match l {
        Letter::Int(v) | Letter::Primed(v) => v as i64,
        Letter::MinusZero => 0,
    }
}

/// Evaluates a statistic on a word.
pub fn statistic(a: &LetterWord, which: Statistic) -> Result<u64> {
    if !which.applies_to(a.kind) {
        return Err(Error::StatisticMismatch {
            statistic: which.name(),
            alphabet: a.kind.to_string(),
        });
    }
    let ls = &a.letters;
    Ok(match which {
        Statistic::Comaj => ascent_sum(ls, int_key, 1),
        Statistic::ComajBC => ascent_sum(ls, comaj_bc_key, 1),
        Statistic::ComajD => {
            let positive = ls.iter().filter(|&&l| sign(l) > 0).count() as u64;
            positive + ascent_sum(ls, comaj_d_key, 2)
        }
        Statistic::Sum => ls.iter().map(|&l| int_key(l) as u64).sum(),
        Statistic::SigmaBC => ls
            .iter()
            .filter_map(|&l| match l {
                Letter::Int(v) if v > 0 => Some(v as u64),
                _ => None,
            })
            .sum(),
        Statistic::SigmaD => ls
            .iter()
            .filter_map(|&l| match l {
                Letter::Int(v) => Some(v.unsigned_abs() as u64),
                _ => None,
            })
            .sum(),
    })
}

/// The combined exponents appearing in the principal-specialization sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightedStatistic {
    /// `Σ_BC + comaj_BC`.
    SigmaComajBC,
    /// `Σ_D + comaj_D`.
    SigmaComajD,
    /// `Π (q^{|a_i|} + 1) · q^{comaj_D}`, summed over `D±` decorations.
    PlusFactorsComajD,
}

/// `Σ q^{stat(a)}` over all decorations `a` (in the alphabet of `kind`) of a
/// generator word, as a map from exponent to multiplicity.
///
/// Computed by dynamic programming over positions, keeping only the last
/// chosen letter as state.
pub fn decorated_sum(
    kind: WordKind,
    gens: &[i32],
    stat: WeightedStatistic,
) -> BTreeMap<i64, BigInt> {
    let key: fn(Letter) -> i64 = match stat {
        WeightedStatistic::SigmaComajBC => comaj_bc_key,
        _ => comaj_d_key,
    };
    let ascent_weight: i64 = match stat {
        WeightedStatistic::SigmaComajBC => 1,
        _ => 2,
    };
    // Each letter contributes a polynomial in q independent of its neighbours.
    let local = |l: Letter| -> Vec<i64> {
        match stat {
            WeightedStatistic::SigmaComajBC => match l {
                Letter::Int(v) if v > 0 => vec![v as i64],
                _ => vec![0],
            },
            WeightedStatistic::SigmaComajD => {
                let pos = (sign(l) > 0) as i64;
                match l {
                    Letter::Int(v) => vec![pos + v.abs() as i64],
                    _ => vec![pos],
                }
            }
            WeightedStatistic::PlusFactorsComajD => {
                let pos = (sign(l) > 0) as i64;
                vec![pos + l.magnitude() as i64, pos]
            }
        }
    };
    let mut states: Vec<(Letter, BTreeMap<i64, BigInt>)> = Vec::new();
    for (pos, &g) in gens.iter().enumerate() {
        let mut next: Vec<(Letter, BTreeMap<i64, BigInt>)> = Vec::new();
        for l in kind.decorations(g) {
            let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
            let contributions: Vec<(i64, BigInt)> = if pos == 0 {
                vec![(0, BigInt::one())]
            } else {
                states
                    .iter()
                    .flat_map(|(prev, poly)| {
                        let asc = if key(*prev) < key(l) {
                            ascent_weight * pos as i64
                        } else {
                            0
                        };
                        poly.iter().map(move |(&e, c)| (e + asc, c.clone()))
                    })
                    .collect()
            };
            for (e, c) in contributions {
                for d in local(l) {
                    *acc.entry(e + d).or_default() += &c;
                }
            }
            next.push((l, acc));
        }
        states = next;
    }
    if gens.is_empty() {
        return BTreeMap::from([(0, BigInt::one())]);
    }
    let mut total: BTreeMap<i64, BigInt> = BTreeMap::new();
    for (_, poly) in states {
        for (e, c) in poly {
            *total.entry(e).or_default() += c;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::{coxeter_length, demazure_product, elements};

    fn perm(s: &str) -> SignedPermutation {
        SignedPermutation::parse(s).unwrap()
    }

    fn word(kind: WordKind, rank: usize, s: &str) -> LetterWord {
        LetterWord::parse(kind, rank, s).unwrap()
    }

    #[test]
    fn letters_round_trip() {
        let w = word(WordKind::DPrimed, 4, "2',-1',-1,-3,2");
        assert_eq!(w.to_string(), "2',-1',-1,-3,2");
        let c = word(WordKind::CSigned, 3, "-0,1,0");
        assert_eq!(c.letters()[0], Letter::MinusZero);
        assert_eq!(c.to_string(), "-0,1,0");
        assert!(LetterWord::parse(WordKind::BSigned, 3, "-0").is_err());
        assert!(LetterWord::parse(WordKind::A, 3, "3").is_err());
        assert!(LetterWord::parse(WordKind::DSigned, 3, "0").is_err());
    }

    #[test]
    fn reduced_words_type_a() {
        let ws = reduced_words(WordKind::A, 4, &perm("2,1,4,3")).unwrap();
        let strs: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
        assert_eq!(strs, vec!["1,3", "3,1"]);
    }

    #[test]
    fn reduced_words_type_c_signed() {
        let ws = reduced_words(WordKind::CSigned, 2, &perm("-2,-1")).unwrap();
        assert_eq!(ws.len(), 8);
        for w in &ws {
            let mags: Vec<i32> = w.letters().iter().map(|l| l.magnitude()).collect();
            assert_eq!(mags, vec![0, 1, 0]);
        }
        assert_eq!(reduced_words(WordKind::BSigned, 2, &perm("-2,-1")).unwrap().len(), 2);
    }

    #[test]
    fn reduced_words_type_d_signed() {
        let ws = reduced_words(WordKind::DSigned, 4, &perm("-1,2,3,-4")).unwrap();
        assert_eq!(ws.len(), 32);
        for w in &ws {
            let ones: Vec<i32> = w
                .letters()
                .iter()
                .filter_map(|&l| match l {
                    Letter::Int(v) if v.abs() == 1 => Some(v),
                    _ => None,
                })
                .collect();
            assert_eq!(ones.len(), 2);
            assert_eq!(ones[0], -ones[1]);
        }
    }

    #[test]
    fn hecke_words_small_cases() {
        let s1 = perm("2,1");
        let ws = hecke_words(WordKind::A, 2, &s1, 2).unwrap();
        let strs: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
        assert_eq!(strs, vec!["1", "1,1", "1,1,1"]);
        let v = perm("2,1,4,3");
        assert_eq!(
            hecke_words(WordKind::A, 4, &v, 0).unwrap(),
            reduced_words(WordKind::A, 4, &v).unwrap()
        );
    }

    #[test]
    fn hecke_words_match_brute_force() {
        let group = GroupKind::a(4).unwrap();
        let v = perm("2,1,4,3");
        let mut brute = Vec::new();
        for a in 1..=3 {
            for b in 1..=3 {
                for c in 1..=3 {
                    if demazure_product(group, &[a, b, c]).unwrap() == (v.clone(), 1) {
                        brute.push(vec![a, b, c]);
                    }
                }
            }
        }
        let ws = hecke_words(WordKind::A, 4, &v, 1).unwrap();
        let long: Vec<Vec<i32>> = ws.iter().filter(|w| w.len() == 3).map(|w| w.generators()).collect();
        let mut sorted = long.clone();
        sorted.sort();
        assert_eq!(sorted, brute);
        assert_eq!(brute.len(), 6);
    }

    #[test]
    fn every_hecke_word_has_the_right_product() {
        for (kind, rank) in [
            (WordKind::A, 4),
            (WordKind::CSigned, 3),
            (WordKind::DSigned, 3),
            (WordKind::DPrimed, 3),
        ] {
            let group = kind.group(rank).unwrap();
            for w in elements(group) {
                let l = coxeter_length(group, &w).unwrap();
                for a in hecke_words(kind, rank, &w, 1).unwrap() {
                    let (u, k) = demazure_product(group, &a.generators()).unwrap();
                    assert_eq!(u, w);
                    assert_eq!(k + l, a.len());
                }
            }
        }
    }

    #[test]
    fn nonneg_words_are_the_unsigned_signed_words() {
        let group = GroupKind::bc(3).unwrap();
        for w in elements(group) {
            let nonneg: Vec<Vec<i32>> = reduced_words(WordKind::CNonneg, 3, &w)
                .unwrap()
                .iter()
                .map(LetterWord::generators)
                .collect();
            let mut from_signed: Vec<Vec<i32>> = reduced_words(WordKind::CSigned, 3, &w)
                .unwrap()
                .iter()
                .filter(|a| a.letters().iter().all(|l| matches!(l, Letter::Int(v) if *v >= 0)))
                .map(LetterWord::generators)
                .collect();
            from_signed.sort();
            assert_eq!(nonneg, from_signed);
        }
    }

    #[test]
    fn compatible_sequence_examples() {
        let a = word(WordKind::A, 4, "1,3");
        let seqs = compatible_sequences(&a, -1);
        let mut brute = Vec::new();
        for i1 in -1..=1 {
            for i2 in (i1 + 1)..=3 {
                brute.push(vec![i1, i2]);
            }
        }
        assert_eq!(seqs, brute);
        assert_eq!(seqs.len(), 9);
        let empty = word(WordKind::A, 4, "");
        assert_eq!(compatible_sequences(&empty, 0), vec![Vec::<i32>::new()]);
        let mz = word(WordKind::CSigned, 2, "-0");
        assert_eq!(compatible_sequences(&mz, 0), vec![vec![0]]);
    }

    #[test]
    fn compatible_sequences_are_monotone_in_floor() {
        for s in ["3,1,2", "1,2,1", "2,1"] {
            let a = word(WordKind::A, 4, s);
            for m in -3..=1 {
                let hi = compatible_sequences(&a, m);
                let lo = compatible_sequences(&a, m - 1);
                assert!(hi.iter().all(|x| lo.contains(x)));
            }
        }
    }

    #[test]
    fn statistic_examples() {
        let d = word(WordKind::DSigned, 4, "-1,-2,3,1");
        assert_eq!(statistic(&d, Statistic::ComajD).unwrap(), 8);
        let bc = word(WordKind::CSigned, 3, "-1,1,-2,1");
        assert_eq!(statistic(&bc, Statistic::SigmaBC).unwrap(), 2);
        assert_eq!(statistic(&bc, Statistic::ComajBC).unwrap(), 3);
        let p = word(WordKind::DPrimed, 4, "2',-1',-1,-3,2");
        assert_eq!(statistic(&p, Statistic::SigmaD).unwrap(), 6);
        assert_eq!(statistic(&p, Statistic::ComajD).unwrap(), 20);
        let a = word(WordKind::A, 4, "1,3,2");
        assert_eq!(statistic(&a, Statistic::Comaj).unwrap(), 1);
        assert_eq!(statistic(&a, Statistic::Sum).unwrap(), 6);
        assert_eq!(
            statistic(&a, Statistic::ComajD).unwrap_err(),
            Error::StatisticMismatch {
                statistic: "comaj_D",
                alphabet: "A".into()
            }
        );
    }

    fn explicit_sum(kind: WordKind, rank: usize, gens: &[i32], stat: WeightedStatistic) -> BTreeMap<i64, BigInt> {
        let mut all = Vec::new();
        decorate_all(kind, rank, gens, &mut all);
        let mut out: BTreeMap<i64, BigInt> = BTreeMap::new();
        for a in all {
            let exps: Vec<i64> = match stat {
                WeightedStatistic::SigmaComajBC => vec![
                    (statistic(&a, Statistic::SigmaBC).unwrap() + statistic(&a, Statistic::ComajBC).unwrap()) as i64,
                ],
                WeightedStatistic::SigmaComajD => vec![
                    (statistic(&a, Statistic::SigmaD).unwrap() + statistic(&a, Statistic::ComajD).unwrap()) as i64,
                ],
                WeightedStatistic::PlusFactorsComajD => {
                    let base = statistic(&a, Statistic::ComajD).unwrap() as i64;
                    let mut es = vec![base];
                    for l in a.letters() {
                        es = es
                            .into_iter()
                            .flat_map(|e| [e, e + l.magnitude() as i64])
                            .collect();
                    }
                    es
                }
            };
            for e in exps {
                *out.entry(e).or_default() += 1;
            }
        }
        out
    }

    #[test]
    fn decorated_sums_match_explicit_enumeration() {
        for (kind, rank, stat) in [
            (WordKind::CSigned, 3, WeightedStatistic::SigmaComajBC),
            (WordKind::BSigned, 3, WeightedStatistic::SigmaComajBC),
            (WordKind::DPrimed, 4, WeightedStatistic::SigmaComajD),
            (WordKind::DSigned, 4, WeightedStatistic::PlusFactorsComajD),
        ] {
            let group = kind.group(rank).unwrap();
            for w in elements(group).into_iter().step_by(7) {
                for by_len in hecke_generator_words(group, &w, 1).unwrap() {
                    for gens in by_len.iter().take(5) {
                        assert_eq!(
                            decorated_sum(kind, gens, stat),
                            explicit_sum(kind, rank, gens, stat),
                            "{kind} {gens:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn signed_decorations_give_the_closed_product() {
        // Σ over signed decorations of q^{Σ_BC + comaj_BC} equals
        // Π (q^{|a_i|} + 1) q^{comaj(|a|)}.
        for rank in 1..=3 {
            let group = GroupKind::bc(rank).unwrap();
            for w in elements(group) {
                for gens in &hecke_generator_words(group, &w, 0).unwrap()[0] {
                    let lhs = decorated_sum(WordKind::CSigned, gens, WeightedStatistic::SigmaComajBC);
                    let unsigned = LetterWord::from_ints(WordKind::CNonneg, rank, gens).unwrap();
                    let c = statistic(&unsigned, Statistic::Comaj).unwrap() as i64;
                    let mut rhs: BTreeMap<i64, BigInt> = BTreeMap::from([(c, BigInt::one())]);
                    for &g in gens {
                        let mut next: BTreeMap<i64, BigInt> = BTreeMap::new();
                        for (e, k) in &rhs {
                            *next.entry(e + g as i64).or_default() += k;
                            *next.entry(*e).or_default() += k;
                        }
                        rhs = next;
                    }
                    assert_eq!(lhs, rhs, "{w} {gens:?}");
                }
            }
        }
    }

    #[test]
    fn type_a_hecke_letters_stay_in_range() {
        for n in 1..=4 {
            let group = GroupKind::a(n).unwrap();
            for w in elements(group) {
                for a in hecke_words(WordKind::A, n, &w, 2).unwrap() {
                    assert!(a.generators().iter().all(|&g| g >= 1 && g < n as i32));
                }
            }
        }
    }
}
