//! The right id-Coxeter modules spanned by involutions and by
//! fixed-point-free involutions, their Hecke words, Hecke atoms, pipe
//! dreams, and involution Grothendieck polynomials.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde_json::json;

use crate::error::{Error, Result};
use crate::nilhecke::{AlgebraElement, Factor, Flavor, Weight};
use crate::permgroup::{coxeter_length, elements, reduced_word, GroupKind, GroupType, SignedPermutation};
use crate::polyring::SparsePoly;
use crate::verify::Report;
use crate::words::{compatible_sequences, hecke_words, LetterWord, WordKind};

/// Which module: involutions started at `1`, or fixed-point-free
/// involutions started at `1^FPF = (1,2)(3,4)⋯`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvFlavor {
    Invol,
    Fpf,
}

impl FromStr for InvFlavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "invol" => Ok(InvFlavor::Invol),
            "fpf" => Ok(InvFlavor::Fpf),
            _ => Err(Error::Parse(format!("unknown involution flavor {s:?}"))),
        }
    }
}

impl fmt::Display for InvFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvFlavor::Invol => "invol",
            InvFlavor::Fpf => "fpf",
        })
    }
}

/// The result of `m_z · π_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Action {
    /// `m_{z'}`.
    Move(SignedPermutation),
    /// `β m_z`.
    Beta,
    Zero,
}

/// A module element `Σ c_z m_z`.
pub type ModuleExpansion = BTreeMap<SignedPermutation, SparsePoly>;

/// The module of rank `n` and the given flavor. Basis elements `m_z` are
/// indexed by involutions `z` of `{1, …, n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvolutionModule {
    n: usize,
    flavor: InvFlavor,
}

fn conjugate(z: &SignedPermutation, i: i32, n: usize) -> SignedPermutation {
    let s = |k: i32| {
        if k == i {
            i + 1
        } else if k == i + 1 {
            i
        } else {
            k
        }
    };
    let images = (1..=n as i32).map(|k| s(z.apply(s(k)))).collect();
    SignedPermutation::from_window(images).expect("conjugate of a permutation")
}

impl InvolutionModule {
    pub fn new(n: usize, flavor: InvFlavor) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank { ty: "A", rank: n });
        }
        if flavor == InvFlavor::Fpf && !n.is_multiple_of(2) {
            return Err(Error::OddFpfRank(n));
        }
        Ok(InvolutionModule { n, flavor })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn flavor(&self) -> InvFlavor {
        self.flavor
    }

    pub fn group(&self) -> GroupKind {
        GroupKind::a(self.n).expect("rank checked")
    }

    pub fn start(&self) -> SignedPermutation {
        match self.flavor {
            InvFlavor::Invol => SignedPermutation::identity(),
            InvFlavor::Fpf => {
                let images = (1..=self.n as i32).map(|i| if i % 2 == 1 { i + 1 } else { i - 1 }).collect();
                SignedPermutation::from_window(images).expect("even rank")
            }
        }
    }

    /// `m_z · π_i` for `1 <= i < n`.
    pub fn act(&self, z: &SignedPermutation, i: i32) -> Action {
        let (a, b) = (z.apply(i), z.apply(i + 1));
        match self.flavor {
            InvFlavor::Invol if a < b => {
                let c = conjugate(z, i, self.n);
                if &c == z {
                    Action::Move(z.mul_generator(GroupType::A, i))
                } else {
                    Action::Move(c)
                }
            }
            InvFlavor::Fpf if a < b => Action::Move(conjugate(z, i, self.n)),
            InvFlavor::Fpf if a == i + 1 && b == i => Action::Zero,
            _ => Action::Beta,
        }
    }

    /// `m_start · π_{a_1} ⋯ π_{a_p} = β^k m_z`, or `None` if it vanishes.
    pub fn apply_word(&self, z: &SignedPermutation, word: &[i32]) -> Option<(SignedPermutation, usize)> {
        let mut z = z.clone();
        let mut k = 0;
        for &i in word {
            match self.act(&z, i) {
                Action::Move(y) => z = y,
                Action::Beta => k += 1,
                Action::Zero => return None,
            }
        }
        Some((z, k))
    }

    fn letters(&self) -> std::ops::Range<i32> {
        1..self.n as i32
    }

    /// `ℓ̂` of every basis element reachable from the start element.
    pub fn distances(&self) -> BTreeMap<SignedPermutation, usize> {
        let mut dist = BTreeMap::new();
        let start = self.start();
        dist.insert(start.clone(), 0);
        let mut queue = VecDeque::from([start]);
        while let Some(z) = queue.pop_front() {
            let d = dist[&z];
            for i in self.letters() {
                if let Action::Move(y) = self.act(&z, i) {
                    if !dist.contains_key(&y) {
                        dist.insert(y.clone(), d + 1);
                        queue.push_back(y);
                    }
                }
            }
        }
        dist
    }

    /// All basis elements reachable from the start element, sorted.
    pub fn elements(&self) -> Vec<SignedPermutation> {
        self.distances().into_keys().collect()
    }

    pub fn ell_hat(&self, z: &SignedPermutation) -> Result<usize> {
        self.distances()
            .get(z)
            .copied()
            .ok_or_else(|| Error::Unreachable(z.to_string()))
    }

    /// Involution Hecke words for `z` of length at most `ℓ̂(z) + max_extra`.
    pub fn inv_hecke_words(&self, z: &SignedPermutation, max_extra: usize) -> Result<Vec<LetterWord>> {
        let dist = self.distances();
        let target = *dist.get(z).ok_or_else(|| Error::Unreachable(z.to_string()))?;
        let max_len = target + max_extra;
        let mut out = Vec::new();
        let mut word = Vec::new();
        self.word_rec(&self.start(), z, &dist, target, max_len, &mut word, &mut out);
        out.sort();
        out.into_iter()
            .map(|w| LetterWord::from_ints(WordKind::A, self.n, &w))
            .collect()
    }

    #[allow(clippy::too_many_arguments)]
    fn word_rec(
        &self,
        state: &SignedPermutation,
        z: &SignedPermutation,
        dist: &BTreeMap<SignedPermutation, usize>,
        target: usize,
        max_len: usize,
        word: &mut Vec<i32>,
        out: &mut Vec<Vec<i32>>,
    ) {
        if state == z {
            out.push(word.clone());
        }
        if word.len() == max_len {
            return;
        }
        for i in self.letters() {
            let next = match self.act(state, i) {
                Action::Move(y) => y,
                Action::Beta => state.clone(),
                Action::Zero => continue,
            };
            if dist[&next] > target || target - dist[&next] > max_len - word.len() - 1 {
                continue;
            }
            word.push(i);
            self.word_rec(&next, z, dist, target, max_len, word, out);
            word.pop();
        }
    }

    /// Every `w ∈ S_n` with `m_start · π_w` a nonzero multiple of `m_z`,
    /// tested on one reduced word of `w`.
    pub fn hecke_atoms(&self, z: &SignedPermutation) -> Result<Vec<SignedPermutation>> {
        self.ell_hat(z)?;
        let group = self.group();
        let start = self.start();
        let mut out = Vec::new();
        for w in elements(group) {
            let word = reduced_word(group, &w)?;
            if let Some((y, _)) = self.apply_word(&start, &word) {
                if &y == z {
                    out.push(w);
                }
            }
        }
        Ok(out)
    }

    /// Cells of the staircase, in reading order.
    fn cells(&self) -> Vec<(i32, i32)> {
        let n = self.n as i32;
        let mut cells = Vec::new();
        for i in 1..n {
            for j in (1..=i).rev() {
                if i + j - 1 > n - 1 || (self.flavor == InvFlavor::Fpf && i == j) {
                    continue;
                }
                cells.push((i, j));
            }
        }
        cells
    }

    /// All pipe dreams, grouped by the basis element their reading word reaches.
    pub fn all_pipe_dreams(&self) -> BTreeMap<SignedPermutation, Vec<PipeDream>> {
        let cells = self.cells();
        let mut out: BTreeMap<SignedPermutation, Vec<PipeDream>> = BTreeMap::new();
        let mut chosen = Vec::new();
        self.dream_rec(&cells, 0, &self.start(), &mut chosen, &mut out);
        for v in out.values_mut() {
            v.sort();
        }
        out
    }

    fn dream_rec(
        &self,
        cells: &[(i32, i32)],
        k: usize,
        state: &SignedPermutation,
        chosen: &mut Vec<(i32, i32)>,
        out: &mut BTreeMap<SignedPermutation, Vec<PipeDream>>,
    ) {
        if k == cells.len() {
            out.entry(state.clone())
                .or_default()
                .push(PipeDream::new(chosen.clone()));
            return;
        }
        self.dream_rec(cells, k + 1, state, chosen, out);
        let (i, j) = cells[k];
        let next = match self.act(state, i + j - 1) {
            Action::Move(y) => y,
            Action::Beta => state.clone(),
            Action::Zero => return,
        };
        chosen.push((i, j));
        self.dream_rec(cells, k + 1, &next, chosen, out);
        chosen.pop();
    }

    pub fn inv_pipe_dreams(&self, z: &SignedPermutation) -> Result<Vec<PipeDream>> {
        self.ell_hat(z)?;
        Ok(self.all_pipe_dreams().remove(z).unwrap_or_default())
    }

    fn window(&self) -> (i32, i32) {
        (1, (self.n as i32 - 1).max(1))
    }

    /// `x_{i⊕j}`: `x_i` on the diagonal, `x_i ⊕ x_j` below it.
    fn cell_weight(&self, i: i32, j: i32) -> Weight {
        if i == j {
            Weight::Var(i)
        } else {
            Weight::OPlus(i, j)
        }
    }

    /// The involution Grothendieck polynomial of `z`.
    ///
    /// The pipe-dream formula is exact; the word sum is exact through
    /// `β`-degree `beta_cap` and truncated above it.
    pub fn grothendieck(&self, z: &SignedPermutation, method: InvMethod, beta_cap: u32) -> Result<SparsePoly> {
        let lhat = self.ell_hat(z)?;
        let (lo, hi) = self.window();
        let mut total = SparsePoly::zero(lo, hi);
        match method {
            InvMethod::PipeDream => {
                for d in self.inv_pipe_dreams(z)? {
                    let mut term = SparsePoly::one(lo, hi);
                    for &(i, j) in d.cells() {
                        term = &term * &self.cell_weight(i, j).to_poly(lo, hi, None, None)?;
                    }
                    for _ in lhat..d.cells().len() {
                        term = term.mul_beta();
                    }
                    total.add_assign_ref(&term);
                }
            }
            InvMethod::WordSum => {
                total = total.with_caps(None, Some(beta_cap));
                for a in self.inv_hecke_words(z, beta_cap as usize)? {
                    let b = (a.len() - lhat) as u32;
                    for seq in compatible_sequences(&a, 1) {
                        let m = crate::polyring::Monomial::from_indices(b, &seq);
                        total.add_assign_ref(&SparsePoly::term(1, m, lo, hi)?);
                    }
                }
            }
        }
        Ok(total)
    }

    /// `m_start · (product of factors)`, expanded in the basis `m_z`.
    pub fn expand(&self, plan: &[Factor]) -> Result<ModuleExpansion> {
        let (lo, hi) = self.window();
        let lo = lo.min(0);
        let mut e: ModuleExpansion = BTreeMap::from([(self.start(), SparsePoly::one(lo, hi))]);
        for f in plan {
            let x = f.weight.to_poly(lo, hi, None, None)?;
            let mut next = e.clone();
            for (z, c) in &e {
                let (target, term) = match self.act(z, f.generator) {
                    Action::Move(y) => (y, c * &x),
                    Action::Beta => (z.clone(), (c * &x).mul_beta()),
                    Action::Zero => continue,
                };
                let slot = next.entry(target.clone()).or_insert_with(|| SparsePoly::zero(lo, hi));
                slot.add_assign_ref(&term);
                if slot.is_zero() {
                    next.remove(&target);
                }
            }
            e = next;
        }
        Ok(e)
    }

    /// The factors `h_{i+j−1}(x_{i⊕j})` of the staircase product, in order.
    pub fn staircase_plan(&self) -> Vec<Factor> {
        let n = self.n as i32;
        let mut plan = Vec::new();
        let (first, shift) = match self.flavor {
            InvFlavor::Invol => (1, 0),
            InvFlavor::Fpf => (2, 1),
        };
        for i in first..n {
            for j in (1..=(i - shift).min(n - i)).rev() {
                plan.push(Factor {
                    generator: i + j - 1,
                    weight: self.cell_weight(i, j),
                });
            }
        }
        plan
    }
}

/// How to compute an involution Grothendieck polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvMethod {
    PipeDream,
    WordSum,
}

impl FromStr for InvMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pipedream" => Ok(InvMethod::PipeDream),
            "wordsum" | "words" => Ok(InvMethod::WordSum),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

/// A finite set of cells `(i, j)`, stored in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PipeDream {
    cells: Vec<(i32, i32)>,
}

impl PipeDream {
    pub fn new(mut cells: Vec<(i32, i32)>) -> Self {
        cells.sort();
        cells.dedup();
        PipeDream { cells }
    }

    pub fn cells(&self) -> &[(i32, i32)] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// The letters `i + j − 1` listed in reading order (rows top to bottom,
    /// right to left within a row).
    pub fn reading_word(&self) -> Vec<i32> {
        let mut cells = self.cells.clone();
        cells.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        cells.into_iter().map(|(i, j)| i + j - 1).collect()
    }
}

impl fmt::Display for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cells.iter().map(|(i, j)| format!("({i},{j})")).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// `A_i(x) = h_{n−1}(x) ⋯ h_i(x)` and `Ã_i(x) = h_i(x) ⋯ h_{n−1}(x)`.
fn a_factors(n: i32, i: i32, w: Weight, reversed: bool) -> Vec<Factor> {
    let mut gens: Vec<i32> = (i..n).rev().collect();
    if reversed {
        gens.reverse();
    }
    gens.into_iter().map(|g| Factor { generator: g, weight: w }).collect()
}

/// `A_1(x_1) A_2(x_2) ⋯ A_{n−1}(x_{n−1})`.
pub fn grothendieck_plan(n: usize) -> Vec<Factor> {
    let n = n as i32;
    (1..n).flat_map(|i| a_factors(n, i, Weight::Var(i), false)).collect()
}

fn poly_diff(name: &str, a: &SparsePoly, b: &SparsePoly) -> Option<serde_json::Value> {
    a.first_difference(b).map(|(m, x, y)| {
        json!({"at": name, "monomial": m.to_string(), "left": x.to_string(), "right": y.to_string()})
    })
}

/// `Ã_i(y) A_i(x_i) ⋯ A_{n−1}(x_{n−1}) = Π_{j>i} A_j(x_{j−1}) · Π_{j>=i} h_j(x_j ⊕ y)`
/// in the id-Coxeter algebra of `S_n`, with `y` realized as `x_0`.
pub fn check_commute_lemma(n: usize, i: usize) -> Result<Report> {
    let kind = GroupKind::a(n)?;
    let (ni, ii) = (n as i32, i as i32);
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), json!(n));
    params.insert("i".to_string(), json!(i));
    if i == 0 || i >= n {
        return Err(Error::InvalidGenerator {
            label: ii,
            kind,
            allowed: format!("1..{}", n - 1),
        });
    }
    let mut lhs = a_factors(ni, ii, Weight::Var(0), true);
    for j in ii..ni {
        lhs.extend(a_factors(ni, j, Weight::Var(j), false));
    }
    let mut rhs = Vec::new();
    for j in (ii + 1)..ni {
        rhs.extend(a_factors(ni, j, Weight::Var(j - 1), false));
    }
    for j in ii..ni {
        rhs.push(Factor {
            generator: j,
            weight: Weight::OPlus(j, 0),
        });
    }
    let (lo, hi) = (0, ni - 1);
    let one = AlgebraElement::one(kind, Flavor::Id, SparsePoly::one(lo, hi));
    let realize = |w: &Weight| w.to_poly(lo, hi, None, None).expect("indices inside window");
    let left = one.apply_plan(&lhs, realize)?;
    let right = one.apply_plan(&rhs, realize)?;
    let mut diff = Vec::new();
    let keys: BTreeSet<&SignedPermutation> = left.support().map(|(w, _)| w).chain(right.support().map(|(w, _)| w)).collect();
    for w in keys {
        let a = left.coefficient(w).cloned().unwrap_or_else(|| SparsePoly::zero(lo, hi));
        let b = right.coefficient(w).cloned().unwrap_or_else(|| SparsePoly::zero(lo, hi));
        if let Some(d) = poly_diff(&w.to_string(), &a, &b) {
            diff.push(d);
            break;
        }
    }
    Ok(Report::new("commute_lemma", params, diff))
}

/// `m_start · A_1(x_1) ⋯ A_{n−1}(x_{n−1})` equals `m_start` times the
/// staircase product `Π_i Π_j h_{i+j−1}(x_{i⊕j})`.
pub fn check_prop_is(n: usize, flavor: InvFlavor) -> Result<Report> {
    let module = InvolutionModule::new(n, flavor)?;
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), json!(n));
    params.insert("flavor".to_string(), json!(flavor.to_string()));
    let full = module.expand(&grothendieck_plan(n))?;
    let stair = module.expand(&module.staircase_plan())?;
    let mut diff = Vec::new();
    let keys: BTreeSet<&SignedPermutation> = full.keys().chain(stair.keys()).collect();
    let (lo, hi) = (0, (n as i32 - 1).max(1));
    for z in keys {
        let a = full.get(z).cloned().unwrap_or_else(|| SparsePoly::zero(lo, hi));
        let b = stair.get(z).cloned().unwrap_or_else(|| SparsePoly::zero(lo, hi));
        if let Some(d) = poly_diff(&z.to_string(), &a, &b) {
            diff.push(d);
            break;
        }
    }
    Ok(Report::new("staircase_product", params, diff))
}

/// For every `z`, the pipe-dream formula agrees with the word-sum
/// definition through `β`-degree `beta_cap`, and the word sum equals the
/// coefficient of `m_z` in `m_start · A_1(x_1) ⋯ A_{n−1}(x_{n−1})`.
pub fn check_pipe_dreams(n: usize, flavor: InvFlavor, beta_cap: u32) -> Result<Report> {
    let module = InvolutionModule::new(n, flavor)?;
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), json!(n));
    params.insert("flavor".to_string(), json!(flavor.to_string()));
    params.insert("beta".to_string(), json!(beta_cap));
    let expansion = module.expand(&grothendieck_plan(n))?;
    let mut diff = Vec::new();
    for z in module.elements() {
        let dreams = module.grothendieck(&z, InvMethod::PipeDream, beta_cap)?.truncate_beta(beta_cap);
        let words = module.grothendieck(&z, InvMethod::WordSum, beta_cap)?;
        if let Some(d) = poly_diff(&format!("{z} pipedream/wordsum"), &dreams, &words) {
            diff.push(d);
        }
        let from_product = expansion
            .get(&z)
            .map(|p| p.truncate_beta(beta_cap))
            .unwrap_or_else(|| SparsePoly::zero(0, 0));
        if let Some(d) = poly_diff(&format!("{z} product/wordsum"), &from_product, &words) {
            diff.push(d);
        }
    }
    Ok(Report::new("involution_pipe_dreams", params, diff))
}

/// `InvHecke(z)` is the disjoint union of `Hecke(w)` over the Hecke atoms
/// `w`, for words of length up to `ℓ̂(z) + max_extra`.
pub fn check_atoms(n: usize, flavor: InvFlavor, max_extra: usize) -> Result<Report> {
    let module = InvolutionModule::new(n, flavor)?;
    let group = module.group();
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), json!(n));
    params.insert("flavor".to_string(), json!(flavor.to_string()));
    params.insert("max_extra".to_string(), json!(max_extra));
    let mut diff = Vec::new();
    for z in module.elements() {
        let lhat = module.ell_hat(&z)?;
        let max_len = lhat + max_extra;
        let words: Vec<Vec<i32>> = module
            .inv_hecke_words(&z, max_extra)?
            .iter()
            .map(LetterWord::generators)
            .collect();
        let mut union: Vec<Vec<i32>> = Vec::new();
        for w in module.hecke_atoms(&z)? {
            let len = coxeter_length(group, &w)?;
            if len > max_len {
                continue;
            }
            union.extend(
                hecke_words(WordKind::A, n, &w, max_len - len)?
                    .iter()
                    .map(LetterWord::generators),
            );
        }
        let distinct: BTreeSet<&Vec<i32>> = union.iter().collect();
        if distinct.len() != union.len() {
            diff.push(json!({"at": z.to_string(), "problem": "atoms share a Hecke word"}));
        }
        union.sort();
        if union != words {
            diff.push(json!({"at": z.to_string(), "problem": "union of atom Hecke sets differs",
                "involution_words": words.len(), "atom_words": union.len()}));
        }
    }
    Ok(Report::new("hecke_atoms", params, diff))
}

/// The defining relations `π_i π_i = β π_i`, braid and commutation
/// relations act identically on every basis element, checked along the
/// given words (each relation applied at every position where it fits).
pub fn check_module_relations(n: usize, flavor: InvFlavor, words: &[Vec<i32>]) -> Result<Report> {
    let module = InvolutionModule::new(n, flavor)?;
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), json!(n));
    params.insert("flavor".to_string(), json!(flavor.to_string()));
    params.insert("words".to_string(), json!(words.len()));
    let states = module.elements();
    let mut diff = Vec::new();
    let lift = |r: Option<(SignedPermutation, usize)>, extra: usize| r.map(|(z, k)| (z, k + extra));
    'words: for word in words {
        for z in &states {
            let base = module.apply_word(z, word);
            for p in 0..word.len() {
                let mut rewrites: Vec<(Vec<i32>, usize)> = Vec::new();
                if p + 1 < word.len() {
                    let (a, b) = (word[p], word[p + 1]);
                    if a == b {
                        let mut w = word.clone();
                        w.remove(p);
                        rewrites.push((w, 1));
                    } else if (a - b).abs() > 1 {
                        let mut w = word.clone();
                        w.swap(p, p + 1);
                        rewrites.push((w, 0));
                    }
                }
                if p + 2 < word.len() && word[p] == word[p + 2] && (word[p] - word[p + 1]).abs() == 1 {
                    let mut w = word.clone();
                    let (a, b) = (word[p], word[p + 1]);
                    w[p] = b;
                    w[p + 1] = a;
                    w[p + 2] = b;
                    rewrites.push((w, 0));
                }
                for (w, extra) in rewrites {
                    // A dropped π_i contributes one fewer factor of β.
                    if lift(module.apply_word(z, &w), extra) != base {
                        diff.push(json!({"start": z.to_string(), "word": word, "rewritten": w}));
                        break 'words;
                    }
                }
            }
        }
    }
    Ok(Report::new("module_relations", params, diff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Monomial;

    fn perm(s: &str) -> SignedPermutation {
        SignedPermutation::parse(s).unwrap()
    }

    fn fpf_example() -> SignedPermutation {
        perm("4,3,2,1")
    }

    #[test]
    fn action_rules() {
        let m = InvolutionModule::new(3, InvFlavor::Invol).unwrap();
        let s2 = perm("1,3,2");
        assert_eq!(m.act(&SignedPermutation::identity(), 2), Action::Move(s2.clone()));
        assert_eq!(m.act(&s2, 2), Action::Beta);
        let f = InvolutionModule::new(4, InvFlavor::Fpf).unwrap();
        assert_eq!(f.act(&f.start(), 1), Action::Zero);
        assert_eq!(f.act(&f.start(), 2), Action::Move(perm("3,4,1,2")));
        assert!(InvolutionModule::new(3, InvFlavor::Fpf).is_err());
    }

    #[test]
    fn hecke_word_examples() {
        let m = InvolutionModule::new(4, InvFlavor::Invol).unwrap();
        let y = perm("1,4,3,2");
        let ws: Vec<String> = m.inv_hecke_words(&y, 0).unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(ws, vec!["2,3", "3,2"]);
        assert_eq!(m.ell_hat(&y).unwrap(), 2);
        for w in m.inv_hecke_words(&y, 2).unwrap() {
            let g = w.generators();
            assert!(g.contains(&2) && g.contains(&3) && g.iter().all(|&a| a == 2 || a == 3));
        }
        assert_eq!(m.inv_hecke_words(&y, 2).unwrap().len(), 2 + 6 + 14);

        let f = InvolutionModule::new(4, InvFlavor::Fpf).unwrap();
        let z = fpf_example();
        let ws: Vec<String> = f.inv_hecke_words(&z, 0).unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(ws, vec!["2,1", "2,3"]);
        assert_eq!(f.ell_hat(&z).unwrap(), 2);
        // A run of 2s, then a nonempty word on {1, 3}.
        let fpf_words = f.inv_hecke_words(&z, 2).unwrap();
        for w in &fpf_words {
            let g = w.generators();
            let k = g.iter().take_while(|&&a| a == 2).count();
            assert!(k >= 1 && k < g.len());
            assert!(g[k..].iter().all(|&a| a == 1 || a == 3));
        }
        assert_eq!(fpf_words.len(), 2 + 6 + 14);
        assert!(fpf_words.iter().any(|w| w.generators() == vec![2, 2, 1]));
        let e = m.inv_hecke_words(&SignedPermutation::identity(), 0).unwrap();
        assert_eq!(e.len(), 1);
        assert!(e[0].is_empty());
    }

    #[test]
    fn atoms() {
        let m = InvolutionModule::new(4, InvFlavor::Invol).unwrap();
        let atoms = m.hecke_atoms(&perm("1,4,3,2")).unwrap();
        assert!(atoms.contains(&perm("1,3,4,2")));
        assert!(atoms.contains(&perm("1,4,2,3")));
        assert_eq!(m.hecke_atoms(&SignedPermutation::identity()).unwrap(), vec![SignedPermutation::identity()]);
        for flavor in [InvFlavor::Invol, InvFlavor::Fpf] {
            assert!(check_atoms(4, flavor, 2).unwrap().passed());
        }
    }

    #[test]
    fn pipe_dream_examples() {
        let m = InvolutionModule::new(4, InvFlavor::Invol).unwrap();
        let y = perm("1,4,3,2");
        let dreams: Vec<String> = m.inv_pipe_dreams(&y).unwrap().iter().map(|d| d.to_string()).collect();
        assert_eq!(dreams, vec!["[(2,1),(2,2)]", "[(2,1),(2,2),(3,1)]", "[(2,1),(3,1)]"]);
        let f = InvolutionModule::new(4, InvFlavor::Fpf).unwrap();
        let dz: Vec<String> = f.inv_pipe_dreams(&fpf_example()).unwrap().iter().map(|d| d.to_string()).collect();
        assert_eq!(dz, vec!["[(2,1),(3,1)]"]);
        let id = m.inv_pipe_dreams(&SignedPermutation::identity()).unwrap();
        assert_eq!(id, vec![PipeDream::new(Vec::new())]);
    }

    #[test]
    fn grothendieck_examples() {
        let x = |i| SparsePoly::var(i, 1, 3).unwrap();
        let m = InvolutionModule::new(4, InvFlavor::Invol).unwrap();
        let y = perm("1,4,3,2");
        let x21 = x(2).oplus(&x(1));
        let x31 = x(3).oplus(&x(1));
        let expect = &(&(&x21 * &x(2)) + &(&x21 * &x31)) + &(&(&x21 * &x(2)) * &x31).mul_beta();
        assert_eq!(m.grothendieck(&y, InvMethod::PipeDream, 2).unwrap(), expect);
        let ws = m.grothendieck(&y, InvMethod::WordSum, 2).unwrap();
        assert!(ws.terms_eq(&expect.truncate_beta(2)));
        let f = InvolutionModule::new(4, InvFlavor::Fpf).unwrap();
        assert_eq!(f.grothendieck(&fpf_example(), InvMethod::PipeDream, 2).unwrap(), &x21 * &x31);
        let one = m.grothendieck(&SignedPermutation::identity(), InvMethod::PipeDream, 2).unwrap();
        assert_eq!(one.to_string(), "1");
        assert_eq!(one.coeff(&Monomial::one()), 1.into());
    }

    #[test]
    fn identities_at_small_rank() {
        for n in 2..=4 {
            for i in 1..n {
                assert!(check_commute_lemma(n, i).unwrap().passed(), "lemma n={n} i={i}");
            }
            assert!(check_prop_is(n, InvFlavor::Invol).unwrap().passed());
        }
        assert!(check_prop_is(2, InvFlavor::Fpf).unwrap().passed());
        assert!(check_prop_is(4, InvFlavor::Fpf).unwrap().passed());
        assert!(check_pipe_dreams(3, InvFlavor::Invol, 2).unwrap().passed());
    }
}
