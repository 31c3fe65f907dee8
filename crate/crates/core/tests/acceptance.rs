//! End-to-end acceptance checks. Runs without the libtest harness so that
//! each criterion prints exactly one PASS/FAIL line.

use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use schubert_core::involution::{
    check_commute_lemma, check_module_relations, check_pipe_dreams, check_prop_is, InvFlavor,
    InvMethod, InvolutionModule,
};
use schubert_core::nilhecke::{Family, Flavor, ProductFamily};
use schubert_core::permgroup::{GroupKind, SignedPermutation};
use schubert_core::polyring::{LaurentSeries, SparsePoly};
use schubert_core::verify::{
    check_bc_ratio, check_beta_collapse, check_hecke_support, check_macdonald_finite,
    check_product_forms, check_stability, floor_for_cutoff, specialization_lhs,
    specialization_rhs, specialization_sweep, Report,
};
use schubert_core::Result;

type Outcome = Result<std::result::Result<(), String>>;
type Criterion = (&'static str, fn() -> Outcome);

fn perm(s: &str) -> SignedPermutation {
    SignedPermutation::parse(s).unwrap()
}

fn all_pass(reports: &[Report]) -> std::result::Result<(), String> {
    match reports.iter().find(|r| !r.passed()) {
        None => Ok(()),
        Some(r) => Err(r.to_string()),
    }
}

fn coefficients(s: &LaurentSeries, from: i64, to: i64) -> Vec<i64> {
    (to..=from)
        .rev()
        .map(|e| s.coeff_int(e, 0).map_or(i64::MIN, |c| c.try_into().unwrap_or(i64::MIN)))
        .collect()
}

/// Both sides of the specialization, with the product side built at the
/// largest sound floor for `cutoff`.
fn both_sides(family: Family, kind: GroupKind, w: &SignedPermutation, cutoff: i64) -> Result<(LaurentSeries, LaurentSeries)> {
    let floor = floor_for_cutoff(family, kind, w, cutoff, 0)?;
    Ok((
        specialization_lhs(family, kind, w, floor, cutoff, 0)?,
        specialization_rhs(family, kind, w, cutoff, 0)?,
    ))
}

fn series_example(family: Family, kind: GroupKind, w: &str, from: i64, to: i64, expected: &[i64]) -> Outcome {
    let w = perm(w);
    let (lhs, rhs) = both_sides(family, kind, &w, to)?;
    for (side, s) in [("product", &lhs), ("words", &rhs)] {
        let got = coefficients(s, from, to);
        if got != expected {
            return Ok(Err(format!("{side} side coefficients {got:?}, expected {expected:?}")));
        }
    }
    Ok(Ok(()))
}

fn criterion_1() -> Outcome {
    series_example(Family::A, GroupKind::a(4)?, "2,1,4,3", 2, -4, &[1, 2, 3, 4, 5, 6, 7])
}

fn criterion_2() -> Outcome {
    series_example(Family::C, GroupKind::bc(2)?, "-2,-1", -4, -9, &[4, 8, 12, 20, 28, 36])
}

fn criterion_3() -> Outcome {
    series_example(Family::D, GroupKind::d(4)?, "-1,2,3,-4", 0, -5, &[1, 3, 7, 15, 27, 46])
}

fn criterion_4() -> Outcome {
    Ok(all_pass(&[check_macdonald_finite(4)?, check_macdonald_finite(5)?]))
}

fn sweeps(families: &[Family], n: usize, make: fn(usize) -> Result<GroupKind>) -> Outcome {
    let mut reports = Vec::new();
    for &f in families {
        reports.extend(specialization_sweep(f, make(n)?, 25, 2)?);
    }
    Ok(all_pass(&reports))
}

fn criterion_5() -> Outcome {
    sweeps(&[Family::ABackstable, Family::AGroth], 4, GroupKind::a)
}

fn criterion_6() -> Outcome {
    if let Err(e) = sweeps(&[Family::C, Family::BGroth, Family::CGroth], 3, GroupKind::bc)? {
        return Ok(Err(e));
    }
    sweeps(&[Family::D, Family::DGroth], 3, GroupKind::d)
}

fn criterion_7() -> Outcome {
    let mut reports = Vec::new();
    for flavor in [Flavor::Nil, Flavor::Id] {
        reports.push(check_product_forms(ProductFamily::A, flavor, 4, -5, 2)?);
        for family in [ProductFamily::B, ProductFamily::C, ProductFamily::D] {
            reports.push(check_product_forms(family, flavor, 3, -5, 2)?);
        }
    }
    Ok(all_pass(&reports))
}

fn criterion_8() -> Outcome {
    Ok(all_pass(&[check_bc_ratio(3, -5)?]))
}

fn criterion_9() -> Outcome {
    let reports = [
        check_pipe_dreams(4, InvFlavor::Invol, 2)?,
        check_pipe_dreams(4, InvFlavor::Fpf, 2)?,
    ];
    if let Err(e) = all_pass(&reports) {
        return Ok(Err(e));
    }
    let invol = InvolutionModule::new(4, InvFlavor::Invol)?;
    let fpf = InvolutionModule::new(4, InvFlavor::Fpf)?;
    let (y, z) = (perm("1,4,3,2"), perm("4,3,2,1"));
    let dreams: Vec<String> = invol.inv_pipe_dreams(&y)?.iter().map(ToString::to_string).collect();
    if dreams != ["[(2,1),(2,2)]", "[(2,1),(2,2),(3,1)]", "[(2,1),(3,1)]"] {
        return Ok(Err(format!("dreams of (2,4): {dreams:?}")));
    }
    let dz: Vec<String> = fpf.inv_pipe_dreams(&z)?.iter().map(ToString::to_string).collect();
    if dz != ["[(2,1),(3,1)]"] {
        return Ok(Err(format!("dreams of the fpf example: {dz:?}")));
    }
    let x = |i| SparsePoly::var(i, 1, 3).unwrap();
    let x21 = x(2).oplus(&x(1));
    let x31 = x(3).oplus(&x(1));
    let gy = &(&(&x21 * &x(2)) + &(&x21 * &x31)) + &(&(&x21 * &x(2)) * &x31).mul_beta();
    let gz = &x21 * &x31;
    if invol.grothendieck(&y, InvMethod::PipeDream, 2)? != gy {
        return Ok(Err("involution Grothendieck polynomial of (2,4) differs".into()));
    }
    if fpf.grothendieck(&z, InvMethod::PipeDream, 2)? != gz {
        return Ok(Err("fpf involution Grothendieck polynomial differs".into()));
    }
    Ok(Ok(()))
}

fn criterion_10() -> Outcome {
    let mut reports = Vec::new();
    for n in 2..=4 {
        for i in 1..n {
            reports.push(check_commute_lemma(n, i)?);
        }
        reports.push(check_prop_is(n, InvFlavor::Invol)?);
    }
    reports.push(check_prop_is(2, InvFlavor::Fpf)?);
    reports.push(check_prop_is(4, InvFlavor::Fpf)?);
    Ok(all_pass(&reports))
}

fn criterion_11() -> Outcome {
    let mut reports = vec![
        check_stability(4, -3, 2)?,
        check_beta_collapse(ProductFamily::A, 4, -3, 2)?,
        check_hecke_support(4, 3)?,
    ];
    for family in [ProductFamily::B, ProductFamily::C, ProductFamily::D] {
        reports.push(check_beta_collapse(family, 3, -3, 2)?);
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let words: Vec<Vec<i32>> = (0..1000)
        .map(|_| {
            let len = rng.gen_range(0..=8);
            (0..len).map(|_| rng.gen_range(1..4)).collect()
        })
        .collect();
    for flavor in [InvFlavor::Invol, InvFlavor::Fpf] {
        reports.push(check_module_relations(4, flavor, &words)?);
    }
    Ok(all_pass(&reports))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("type-A series q^4/(q-1)^2", criterion_1),
        ("type-C series coefficients", criterion_2),
        ("type-D series coefficients", criterion_3),
        ("finite q-specialization sweep over S_4 and S_5", criterion_4),
        ("type-A Schubert and Grothendieck specialization sweeps", criterion_5),
        ("types B, C, D specialization sweeps", criterion_6),
        ("definitional and factored products agree", criterion_7),
        ("type C equals 2^l0 times type B", criterion_8),
        ("involution pipe dreams and word sums", criterion_9),
        ("commutation lemma and staircase products", criterion_10),
        ("property suites", criterion_11),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(Ok(())) => println!("PASS criterion {}: {name} ({secs:.1}s)", k + 1),
            Ok(Err(why)) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", k + 1);
            }
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: error: {e}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
