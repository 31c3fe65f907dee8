use std::fmt;
use std::str::FromStr;

use serde_json::json;

use crate::error::{Error, Result};
use crate::involution::{
    check_atoms, check_commute_lemma, check_module_relations, check_pipe_dreams, check_prop_is,
    InvFlavor,
};
use crate::nilhecke::{Family, Flavor, ProductFamily};
use crate::permgroup::GroupKind;
use crate::verify::products::{check_bc_ratio, check_product_forms};
use crate::verify::report::{params, Report, Verdict};
use crate::verify::specialization::{check_macdonald_finite, specialization_sweep, DEFAULT_BETA_CAP, DEFAULT_DEPTH};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Macdonald,
    TypeA,
    TypeC,
    TypeD,
    Groth,
    Products,
    BcRatio,
    Involution,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "macdonald" => Suite::Macdonald,
            "typeA" => Suite::TypeA,
            "typeC" => Suite::TypeC,
            "typeD" => Suite::TypeD,
            "groth" => Suite::Groth,
            "products" => Suite::Products,
            "bcratio" => Suite::BcRatio,
            "involution" => Suite::Involution,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Macdonald => "macdonald",
            Suite::TypeA => "typeA",
            Suite::TypeC => "typeC",
            Suite::TypeD => "typeD",
            Suite::Groth => "groth",
            Suite::Products => "products",
            Suite::BcRatio => "bcratio",
            Suite::Involution => "involution",
            Suite::All => "all",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Overrides every default rank.
    pub n: Option<usize>,
    /// Number of exponents below the top term compared in specialization sweeps.
    pub depth: i64,
    pub beta_cap: u32,
    pub slow: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            n: None,
            depth: DEFAULT_DEPTH,
            beta_cap: DEFAULT_BETA_CAP,
            slow: false,
        }
    }
}

/// Floor used by the product-form and ratio checks.
pub const PRODUCT_FLOOR: i32 = -5;

impl SuiteOptions {
    fn rank_a(&self) -> usize {
        self.n.unwrap_or(if self.slow { 5 } else { 4 })
    }

    fn rank_bcd(&self, grothendieck: bool) -> usize {
        self.n.unwrap_or(if self.slow && !grothendieck { 4 } else { 3 })
    }

    fn rank_involution(&self) -> usize {
        self.n.unwrap_or(4)
    }
}

/// Combines per-element reports into one: failing if any part fails,
/// inconclusive if any part is and none fails.
pub fn summarize(check: &str, p: std::collections::BTreeMap<String, serde_json::Value>, parts: Vec<Report>) -> Report {
    let mut diff = Vec::new();
    let mut verdict = Verdict::Pass;
    for r in &parts {
        match r.verdict {
            Verdict::Pass => {}
            Verdict::Fail => verdict = Verdict::Fail,
            Verdict::Inconclusive if verdict == Verdict::Pass => verdict = Verdict::Inconclusive,
            Verdict::Inconclusive => {}
        }
        if !r.passed() {
            diff.push(json!({"params": r.params, "verdict": r.verdict, "diff": r.diff}));
        }
    }
    let mut p = p;
    p.insert("elements".to_string(), json!(parts.len()));
    Report::new(check, p, Vec::new()).with_verdict(verdict).with_diff(diff)
}

fn sweep(family: Family, n: usize, opts: &SuiteOptions) -> Result<Report> {
    let ty = family.word_kind().group_type();
    let beta = if family.is_grothendieck() { opts.beta_cap } else { 0 };
    let p = params([
        ("family", json!(format!("{family:?}"))),
        ("n", json!(n)),
        ("depth", json!(opts.depth)),
        ("beta", json!(beta)),
    ]);
    let Ok(kind) = GroupKind::new(ty, n) else {
        let mut p = p;
        p.insert("degenerate".to_string(), json!(true));
        return Ok(Report::new("specialization_sweep", p, Vec::new()));
    };
    let parts = specialization_sweep(family, kind, opts.depth, opts.beta_cap)?;
    Ok(summarize("specialization_sweep", p, parts))
}

/// Every involution check at rank `n`: pipe dreams against word sums,
/// the staircase product, the atom decomposition, the module relations
/// on all words of length at most 5, and (for involutions) the commutation
/// lemma at every `i`.
pub fn check_involution(n: usize, flavor: InvFlavor, beta_cap: u32) -> Result<Vec<Report>> {
    let mut out = vec![
        check_pipe_dreams(n, flavor, beta_cap)?,
        check_prop_is(n, flavor)?,
        check_atoms(n, flavor, 2)?,
    ];
    let letters: Vec<i32> = (1..n as i32).collect();
    let mut words: Vec<Vec<i32>> = vec![Vec::new()];
    let mut frontier = words.clone();
    for _ in 0..5 {
        frontier = frontier
            .iter()
            .flat_map(|w| {
                letters.iter().map(move |&a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
        words.extend(frontier.iter().cloned());
    }
    out.push(check_module_relations(n, flavor, &words)?);
    if flavor == InvFlavor::Invol {
        for i in 1..n {
            out.push(check_commute_lemma(n, i)?);
        }
    }
    Ok(out)
}

/// Runs one suite (or all of them); reports come back in a fixed order.
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Macdonald {
        out.push(check_macdonald_finite(opts.rank_a())?);
    }
    if all || suite == Suite::TypeA {
        out.push(sweep(Family::ABackstable, opts.rank_a(), opts)?);
    }
    if all || suite == Suite::TypeA || suite == Suite::Groth {
        out.push(sweep(Family::AGroth, opts.rank_a(), opts)?);
    }
    if all || suite == Suite::TypeC {
        out.push(sweep(Family::C, opts.rank_bcd(false), opts)?);
    }
    if all || suite == Suite::TypeC || suite == Suite::Groth {
        out.push(sweep(Family::BGroth, opts.rank_bcd(true), opts)?);
        out.push(sweep(Family::CGroth, opts.rank_bcd(true), opts)?);
    }
    if all || suite == Suite::TypeD {
        out.push(sweep(Family::D, opts.rank_bcd(false), opts)?);
    }
    if all || suite == Suite::TypeD || suite == Suite::Groth {
        out.push(sweep(Family::DGroth, opts.rank_bcd(true), opts)?);
    }
    if all || suite == Suite::Products {
        for flavor in [Flavor::Nil, Flavor::Id] {
            out.push(check_product_forms(ProductFamily::A, flavor, opts.rank_a(), PRODUCT_FLOOR, opts.beta_cap)?);
            for family in [ProductFamily::B, ProductFamily::C, ProductFamily::D] {
                let n = opts.rank_bcd(flavor == Flavor::Id);
                out.push(check_product_forms(family, flavor, n, PRODUCT_FLOOR, opts.beta_cap)?);
            }
        }
    }
    if all || suite == Suite::BcRatio {
        out.push(check_bc_ratio(opts.rank_bcd(false), PRODUCT_FLOOR)?);
    }
    if all || suite == Suite::Involution {
        let n = opts.rank_involution();
        out.extend(check_involution(n, InvFlavor::Invol, opts.beta_cap)?);
        if n.is_multiple_of(2) {
            out.extend(check_involution(n, InvFlavor::Fpf, opts.beta_cap)?);
        }
    }
    Ok(out)
}
