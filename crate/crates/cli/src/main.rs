use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use schubert_core::involution::{InvFlavor, InvMethod, InvolutionModule};
use schubert_core::nilhecke::{brute_polynomial, build_product, trusted_threshold, Family, Form};
use schubert_core::permgroup::{GroupKind, GroupType, SignedPermutation};
use schubert_core::polyring::{LaurentSeries, SparsePoly};
use schubert_core::verify::{
    floor_for_cutoff, lhs_bound, rhs_numerators, rhs_series, rhs_top, run_suite, specialization_lhs,
    Report, Suite, SuiteOptions, Verdict, DEFAULT_BETA_CAP, DEFAULT_DEPTH,
};
use schubert_core::words::{hecke_words, statistic, LetterWord, Statistic, WordKind};
use schubert_core::Error;

#[derive(Parser)]
#[command(name = "schubert", version, about = "Schubert and Grothendieck polynomials of classical types")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a polynomial.
    Compute(ComputeArgs),
    /// Principal specialization as a truncated Laurent series in 1/q.
    Specialize(SpecializeArgs),
    /// List Hecke words.
    Words(WordsArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Schubert,
    Grothendieck,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TypeArg {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "C")]
    C,
    #[value(name = "D")]
    D,
    #[value(name = "invol")]
    Invol,
    #[value(name = "fpf")]
    Fpf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormArg {
    Words,
    Product,
    Factored,
    Pipedream,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutArg {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Lhs,
    Rhs,
    Both,
}

#[derive(clap::Args)]
struct ComputeArgs {
    #[arg(long, value_enum, default_value = "schubert")]
    family: FamilyArg,
    #[arg(long = "type", value_enum, value_name = "TYPE")]
    ty: TypeArg,
    /// Signed window, e.g. "-2,-1".
    #[arg(long, allow_hyphen_values = true)]
    perm: String,
    #[arg(long)]
    n: usize,
    /// Smallest variable index.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    floor: i32,
    /// Drop terms of larger x-degree.
    #[arg(long)]
    xdeg: Option<u32>,
    #[arg(long, default_value_t = DEFAULT_BETA_CAP)]
    beta: u32,
    #[arg(long, value_enum)]
    form: Option<FormArg>,
    #[arg(long, value_enum, default_value = "text")]
    out: OutArg,
}

#[derive(clap::Args)]
struct SpecializeArgs {
    #[arg(long, value_enum, default_value = "schubert")]
    family: FamilyArg,
    #[arg(long = "type", value_enum, value_name = "TYPE")]
    ty: TypeArg,
    #[arg(long, allow_hyphen_values = true)]
    perm: String,
    #[arg(long)]
    n: usize,
    /// Smallest variable index of the product side (default: the largest sound one).
    #[arg(long, allow_hyphen_values = true)]
    floor: Option<i32>,
    #[arg(long, default_value_t = DEFAULT_BETA_CAP)]
    beta: u32,
    #[arg(long, value_enum, default_value = "both")]
    side: SideArg,
    /// Lowest exponent printed (default: 25 below the top term).
    #[arg(long, allow_hyphen_values = true)]
    cutoff: Option<i64>,
    #[arg(long, value_enum, default_value = "text")]
    out: OutArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlphabetArg {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "C")]
    C,
    #[value(name = "Cnonneg")]
    CNonneg,
    #[value(name = "D")]
    D,
    #[value(name = "Dprimed")]
    DPrimed,
    #[value(name = "invol")]
    Invol,
    #[value(name = "fpf")]
    Fpf,
}

#[derive(clap::Args)]
struct WordsArgs {
    #[arg(long = "type", value_enum, value_name = "TYPE")]
    ty: AlphabetArg,
    #[arg(long, allow_hyphen_values = true)]
    perm: String,
    #[arg(long)]
    n: usize,
    /// Extra letters beyond the minimal length.
    #[arg(long, default_value_t = 0)]
    extra: usize,
    /// Statistics to print next to each word, e.g. "comaj,sum".
    #[arg(long, value_delimiter = ',')]
    stat: Vec<String>,
    #[arg(long, value_enum, default_value = "text")]
    out: OutArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Macdonald,
    #[value(name = "typeA")]
    TypeA,
    #[value(name = "typeC")]
    TypeC,
    #[value(name = "typeD")]
    TypeD,
    Groth,
    Products,
    Bcratio,
    Involution,
    All,
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: SuiteArg,
    #[arg(long)]
    n: Option<usize>,
    /// Number of exponents below each top term to compare.
    #[arg(long, default_value_t = DEFAULT_DEPTH)]
    cutoff: i64,
    #[arg(long, default_value_t = DEFAULT_BETA_CAP)]
    beta: u32,
    /// Larger default ranks.
    #[arg(long)]
    slow: bool,
    #[arg(long, value_enum, default_value = "text")]
    out: OutArg,
}

/// A failure with its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::LetterNotInAlphabet { .. } => 2,
            Error::SoundnessBound { .. } => 4,
            _ => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn semantic(message: String) -> Failure {
    Failure { code: 3, message }
}

type CliResult = Result<u8, Failure>;

fn group_type(ty: TypeArg) -> Option<GroupType> {
    match ty {
        TypeArg::A => Some(GroupType::A),
        TypeArg::B | TypeArg::C => Some(GroupType::BC),
        TypeArg::D => Some(GroupType::D),
        TypeArg::Invol | TypeArg::Fpf => None,
    }
}

fn family_of(family: FamilyArg, ty: TypeArg, floor: i32) -> Family {
    match (family, ty) {
        (FamilyArg::Schubert, TypeArg::A) if floor >= 1 => Family::A,
        (FamilyArg::Schubert, TypeArg::A) => Family::ABackstable,
        (FamilyArg::Schubert, TypeArg::B) => Family::B,
        (FamilyArg::Schubert, TypeArg::C) => Family::C,
        (FamilyArg::Schubert, _) => Family::D,
        (FamilyArg::Grothendieck, TypeArg::A) => Family::AGroth,
        (FamilyArg::Grothendieck, TypeArg::B) => Family::BGroth,
        (FamilyArg::Grothendieck, TypeArg::C) => Family::CGroth,
        (FamilyArg::Grothendieck, _) => Family::DGroth,
    }
}

fn print_poly(p: &SparsePoly, out: OutArg) {
    match out {
        OutArg::Text => println!("{p}"),
        OutArg::Json => println!("{}", serde_json::to_string(&p.to_json()).expect("json")),
    }
}

fn inv_module(ty: TypeArg, n: usize, perm: &SignedPermutation) -> Result<InvolutionModule, Failure> {
    let flavor = if ty == TypeArg::Invol {
        InvFlavor::Invol
    } else {
        InvFlavor::Fpf
    };
    let m = InvolutionModule::new(n, flavor)?;
    m.ell_hat(perm)?;
    Ok(m)
}

fn cmd_compute(a: &ComputeArgs) -> CliResult {
    let w = SignedPermutation::parse(&a.perm)?;
    let Some(ty) = group_type(a.ty) else {
        let m = inv_module(a.ty, a.n, &w)?;
        let method = match a.form {
            None | Some(FormArg::Pipedream) => InvMethod::PipeDream,
            Some(FormArg::Words) => InvMethod::WordSum,
            Some(_) => return Err(semantic("involution polynomials support --form pipedream or words".into())),
        };
        let beta = if a.family == FamilyArg::Schubert { 0 } else { a.beta };
        let p = m.grothendieck(&w, method, beta)?.truncate_beta(beta).with_caps(a.xdeg, None);
        print_poly(&p, a.out);
        return Ok(0);
    };
    let kind = GroupKind::new(ty, a.n)?;
    kind.check(&w)?;
    let family = family_of(a.family, a.ty, a.floor);
    let beta = if family.is_grothendieck() { Some(a.beta) } else { None };
    let (lo, hi) = (a.floor.min(1), a.n as i32 - 1);
    let p = match a.form.unwrap_or(FormArg::Words) {
        FormArg::Words => brute_polynomial(family, kind, &w, a.floor, a.beta)?.with_caps(a.xdeg, None),
        FormArg::Product => build_product(kind, family.flavor(), family.product_family(), Form::Definitional, a.floor, a.xdeg, beta)?
            .coefficient_of(&w, lo, hi),
        FormArg::Factored => build_product(kind, family.flavor(), family.product_family(), Form::Factored, a.floor, a.xdeg, beta)?
            .coefficient_of(&w, lo, hi)
            .trusted_part(trusted_threshold(a.n, a.floor)),
        FormArg::Pipedream => return Err(semantic("pipe dreams are only available for --type invol or fpf".into())),
    };
    print_poly(&p, a.out);
    Ok(0)
}

fn series_json(s: &LaurentSeries) -> serde_json::Value {
    serde_json::to_value(s.to_json()).expect("json")
}

fn cmd_specialize(a: &SpecializeArgs) -> CliResult {
    let w = SignedPermutation::parse(&a.perm)?;
    let Some(ty) = group_type(a.ty) else {
        return Err(semantic("principal specializations are defined for types A, B, C, D".into()));
    };
    let kind = GroupKind::new(ty, a.n)?;
    kind.check(&w)?;
    let family = family_of(a.family, a.ty, 0);
    let nums = rhs_numerators(family, kind, &w, a.beta)?;
    let cutoff = a.cutoff.unwrap_or(rhs_top(family, &nums).unwrap_or(0) - DEFAULT_DEPTH);
    let floor = match a.floor {
        Some(f) => f,
        None => floor_for_cutoff(family, kind, &w, cutoff, a.beta)?,
    };
    let cap = family.is_grothendieck().then_some(a.beta);
    let lhs = match a.side {
        SideArg::Rhs => None,
        _ => Some(specialization_lhs(family, kind, &w, floor, cutoff, a.beta)?),
    };
    let rhs = match a.side {
        SideArg::Lhs => None,
        _ => Some(rhs_series(family, &nums, cutoff, cap)),
    };
    let mut code = 0;
    let mut verdict = None;
    if let (Some(l), Some(r)) = (&lhs, &rhs) {
        let bound = lhs_bound(family, kind, &w, floor, a.beta)?;
        let v = match l.first_difference(r, cutoff, cap) {
            None => Verdict::Pass,
            Some(m) if m.exponent > bound => Verdict::Fail,
            Some(_) => Verdict::Inconclusive,
        };
        if v != Verdict::Pass {
            code = 1;
        }
        verdict = Some(v);
    }
    match a.out {
        OutArg::Text => {
            if let Some(l) = &lhs {
                println!("lhs: {l}");
            }
            if let Some(r) = &rhs {
                println!("rhs: {r}");
            }
            if let Some(v) = verdict {
                println!("verdict: {v}");
            }
        }
        OutArg::Json => {
            let mut o = serde_json::Map::new();
            o.insert("cutoff".into(), json!(cutoff));
            o.insert("floor".into(), json!(floor));
            if let Some(l) = &lhs {
                o.insert("lhs".into(), series_json(l));
            }
            if let Some(r) = &rhs {
                o.insert("rhs".into(), series_json(r));
            }
            if let Some(v) = verdict {
                o.insert("verdict".into(), json!(v));
            }
            println!("{}", serde_json::Value::Object(o));
        }
    }
    Ok(code)
}

fn cmd_words(a: &WordsArgs) -> CliResult {
    let w = SignedPermutation::parse(&a.perm)?;
    let stats: Vec<Statistic> = a.stat.iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
    let words: Vec<LetterWord> = match a.ty {
        AlphabetArg::Invol | AlphabetArg::Fpf => {
            let ty = if a.ty == AlphabetArg::Invol {
                TypeArg::Invol
            } else {
                TypeArg::Fpf
            };
            inv_module(ty, a.n, &w)?.inv_hecke_words(&w, a.extra)?
        }
        _ => {
            let kind = match a.ty {
                AlphabetArg::A => WordKind::A,
                AlphabetArg::B => WordKind::BSigned,
                AlphabetArg::C => WordKind::CSigned,
                AlphabetArg::CNonneg => WordKind::CNonneg,
                AlphabetArg::D => WordKind::DSigned,
                _ => WordKind::DPrimed,
            };
            hecke_words(kind, a.n, &w, a.extra)?
        }
    };
    let mut rows = Vec::new();
    for word in &words {
        let values: Vec<u64> = stats.iter().map(|&s| statistic(word, s)).collect::<Result<_, _>>()?;
        rows.push((word, values));
    }
    match a.out {
        OutArg::Text => {
            for (word, values) in rows {
                let extra: Vec<String> = stats.iter().zip(&values).map(|(s, v)| format!(" {}={v}", s.name())).collect();
                println!("{word}{}", extra.concat());
            }
        }
        OutArg::Json => {
            let list: Vec<serde_json::Value> = rows
                .into_iter()
                .map(|(word, values)| {
                    let st: serde_json::Map<String, serde_json::Value> =
                        stats.iter().zip(values).map(|(s, v)| (s.name().to_string(), json!(v))).collect();
                    json!({"word": word.to_string(), "length": word.len(), "stats": st})
                })
                .collect();
            println!("{}", json!({"perm": w.to_string(), "n": a.n, "words": list}));
        }
    }
    Ok(0)
}

fn cmd_verify(a: &VerifyArgs) -> CliResult {
    let suite: Suite = match a.suite {
        SuiteArg::Macdonald => Suite::Macdonald,
        SuiteArg::TypeA => Suite::TypeA,
        SuiteArg::TypeC => Suite::TypeC,
        SuiteArg::TypeD => Suite::TypeD,
        SuiteArg::Groth => Suite::Groth,
        SuiteArg::Products => Suite::Products,
        SuiteArg::Bcratio => Suite::BcRatio,
        SuiteArg::Involution => Suite::Involution,
        SuiteArg::All => Suite::All,
    };
    let opts = SuiteOptions {
        n: a.n,
        depth: a.cutoff,
        beta_cap: a.beta,
        slow: a.slow,
    };
    let reports: Vec<Report> = run_suite(suite, &opts)?;
    for r in &reports {
        match a.out {
            OutArg::Text => println!("{r}"),
            OutArg::Json => println!("{}", r.to_json()),
        }
    }
    Ok(if reports.iter().all(Report::passed) { 0 } else { 1 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute(a) => cmd_compute(a),
        Command::Specialize(a) => cmd_specialize(a),
        Command::Words(a) => cmd_words(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
