use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use crate::error::Result;
use crate::nilhecke::{build_product, trusted_threshold, Flavor, Form, ProductFamily};
use crate::permgroup::{demazure_product, elements, GroupKind, SignedPermutation};
use crate::polyring::SparsePoly;
use crate::verify::report::{params, Report};
use crate::words::{hecke_words, WordKind};

fn kind_for(family: ProductFamily, n: usize) -> Result<GroupKind> {
    GroupKind::new(family.group_type(), n)
}

fn poly_diff(w: &SignedPermutation, a: &SparsePoly, b: &SparsePoly) -> Option<Value> {
    a.first_difference(b).map(|(m, x, y)| {
        json!({"w": w.to_string(), "monomial": m.to_string(), "left": x.to_string(), "right": y.to_string()})
    })
}

fn degenerate(check: &str, mut p: std::collections::BTreeMap<String, Value>) -> Report {
    p.insert("degenerate".to_string(), json!(true));
    Report::new(check, p, Vec::new())
}

/// The definitional and factored generating products agree on every
/// monomial whose smallest variable index exceeds `n − 1 + floor`.
///
/// Id-flavored products are compared modulo `β^{beta_cap+1}`.
pub fn check_product_forms(
    family: ProductFamily,
    flavor: Flavor,
    n: usize,
    floor: i32,
    beta_cap: u32,
) -> Result<Report> {
    let p = params([
        ("family", json!(format!("{family:?}"))),
        ("flavor", json!(flavor.to_string())),
        ("n", json!(n)),
        ("floor", json!(floor)),
        ("threshold", json!(trusted_threshold(n, floor))),
        ("beta", json!(if flavor == Flavor::Id { beta_cap } else { 0 })),
    ]);
    let Ok(kind) = kind_for(family, n) else {
        return Ok(degenerate("product_forms", p));
    };
    let cap = (flavor == Flavor::Id).then_some(beta_cap);
    let def = build_product(kind, flavor, family, Form::Definitional, floor, None, cap)?;
    let fac = build_product(kind, flavor, family, Form::Factored, floor, None, cap)?;
    let (lo, hi) = (floor.min(1), n as i32 - 1);
    let th = trusted_threshold(n, floor);
    let mut diff = Vec::new();
    for w in elements(kind) {
        let a = def.coefficient_of(&w, lo, hi).trusted_part(th);
        let b = fac.coefficient_of(&w, lo, hi).trusted_part(th);
        if let Some(d) = poly_diff(&w, &a, &b) {
            diff.push(d);
            break;
        }
    }
    Ok(Report::new("product_forms", p, diff))
}

/// `S^C_w = 2^{ℓ_0(w)} S^B_w` for every `w ∈ W^BC_n`, with both products
/// built down to `floor`.
pub fn check_bc_ratio(n: usize, floor: i32) -> Result<Report> {
    let p = params([("n", json!(n)), ("floor", json!(floor))]);
    let kind = GroupKind::bc(n)?;
    let b = build_product(kind, Flavor::Nil, ProductFamily::B, Form::Definitional, floor, None, None)?;
    let c = build_product(kind, Flavor::Nil, ProductFamily::C, Form::Definitional, floor, None, None)?;
    let (lo, hi) = (floor.min(1), n as i32 - 1);
    let mut diff = Vec::new();
    for w in elements(kind) {
        let ratio = BigInt::one() << w.ell_zero();
        let scaled = b.coefficient_of(&w, lo, hi).scale(&ratio);
        if let Some(d) = poly_diff(&w, &c.coefficient_of(&w, lo, hi), &scaled) {
            diff.push(d);
            break;
        }
    }
    Ok(Report::new("bc_ratio", p, diff))
}

/// Setting `x_i = 0` for `i <= 0` in the backstable type-A products (both
/// flavors) gives the ordinary ones.
pub fn check_stability(n: usize, floor: i32, beta_cap: u32) -> Result<Report> {
    let p = params([("n", json!(n)), ("floor", json!(floor)), ("beta", json!(beta_cap))]);
    let kind = GroupKind::a(n)?;
    let hi = n as i32 - 1;
    let mut diff = Vec::new();
    if n >= 2 {
        for (flavor, cap) in [(Flavor::Nil, None), (Flavor::Id, Some(beta_cap))] {
            let back = build_product(kind, flavor, ProductFamily::A, Form::Definitional, floor, None, cap)?;
            let ord = build_product(kind, flavor, ProductFamily::A, Form::Definitional, 1, None, cap)?;
            for w in elements(kind) {
                let a = back.coefficient_of(&w, floor.min(1), hi).set_zero(|i| i <= 0);
                let b = ord.coefficient_of(&w, 1, hi);
                if !a.terms_eq(&b) {
                    diff.push(poly_diff(&w, &a.with_window(1, hi)?, &b).unwrap_or(json!({"w": w.to_string()})));
                    break;
                }
            }
        }
    }
    Ok(Report::new("stability", p, diff))
}

/// The `β = 0` part of every id-Coxeter product equals the nil-Coxeter
/// product of the same family.
pub fn check_beta_collapse(family: ProductFamily, n: usize, floor: i32, beta_cap: u32) -> Result<Report> {
    let p = params([
        ("family", json!(format!("{family:?}"))),
        ("n", json!(n)),
        ("floor", json!(floor)),
    ]);
    let Ok(kind) = kind_for(family, n) else {
        return Ok(degenerate("beta_collapse", p));
    };
    let (lo, hi) = (floor.min(1), n as i32 - 1);
    let nil = build_product(kind, Flavor::Nil, family, Form::Definitional, floor, None, None)?;
    let id = build_product(kind, Flavor::Id, family, Form::Definitional, floor, None, Some(beta_cap))?;
    let mut diff = Vec::new();
    for w in elements(kind) {
        let a = id.coefficient_of(&w, lo, hi).beta_zero();
        let b = nil.coefficient_of(&w, lo, hi);
        if !a.terms_eq(&b) {
            diff.push(json!({"w": w.to_string(), "left": a.to_string(), "right": b.to_string()}));
            break;
        }
    }
    Ok(Report::new("beta_collapse", p, diff))
}

/// Every Hecke word of every `w ∈ S_n` uses letters in `1..n−1` and has
/// Demazure product `w`.
pub fn check_hecke_support(n: usize, max_extra: usize) -> Result<Report> {
    let p = params([("n", json!(n)), ("max_extra", json!(max_extra))]);
    let kind = GroupKind::a(n)?;
    let mut diff = Vec::new();
    for w in elements(kind) {
        for a in hecke_words(WordKind::A, n, &w, max_extra)? {
            let gens = a.generators();
            let in_range = gens.iter().all(|&g| 1 <= g && g < n as i32);
            if !in_range || demazure_product(kind, &gens)?.0 != w {
                diff.push(json!({"w": w.to_string(), "word": a.to_string()}));
                break;
            }
        }
    }
    Ok(Report::new("hecke_support", p, diff))
}
