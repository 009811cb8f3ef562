//! Flatness and projectivity as exact freeness tests.
//!
//! Over an artinian local ring, a finite module is flat iff free, and
//! freeness is decided constructively: lift a residue basis and test
//! that the induced map from a free module is bijective. `check_flat`
//! runs this over the local factors of R; `check_projective_over_s`
//! over the local factors of S itself.

use super::VerifyReport;
use crate::algebra::LocalFactor;
use crate::field::Fq;
use crate::linalg::{Mat, Subspace};
use crate::module::TauModule;
use serde_json::json;

struct FactorFreeness {
    factor_dim: usize,
    residue_rank: usize,
    free: bool,
}

/// Freeness of the part of M supported on one local factor of an
/// algebra acting through `embed_to_s` (R or S itself).
fn factor_freeness(
    m: &TauModule,
    factor: &LocalFactor,
    embed_to_s: &dyn Fn(&[Fq]) -> Vec<Fq>,
) -> FactorFreeness {
    let field = m.base().clone();
    let n = m.dim();
    // the component e·M
    let e_s = embed_to_s(&factor.idempotent);
    let e_mat = m.act_vec(&e_s);
    let comp_rows: Vec<Vec<Fq>> = (0..n).map(|j| e_mat.col(j)).collect();
    let component = Subspace::from_spanning(&field, &comp_rows, n);
    let comp_dim = component.dim();
    if comp_dim == 0 {
        return FactorFreeness { factor_dim: 0, residue_rank: 0, free: true };
    }
    // m·(eM)
    let max_gens: Vec<Vec<Fq>> = (0..factor.max_ideal.dim())
        .flat_map(|i| {
            let x_local = factor.max_ideal.basis_vector(i);
            let x_parent = factor.embed.apply(&field, &x_local);
            let x_s = embed_to_s(&x_parent);
            let x_mat = m.act_vec(&x_s);
            (0..component.dim())
                .map(|b| x_mat.apply(&field, &component.basis_vector(b)))
                .collect::<Vec<_>>()
        })
        .collect();
    let radical_part = Subspace::from_spanning(&field, &max_gens, n);
    // lift a residue-field basis of eM/𝔪·eM: pick vectors outside the
    // running span and absorb their full R_i-orbit, so the images are
    // k-independent (the action on the quotient factors through k)
    let fd = factor.algebra.dim();
    let mut lifted: Vec<Vec<Fq>> = Vec::new();
    let mut span = radical_part.clone();
    for b in 0..component.dim() {
        let v = component.basis_vector(b);
        if span.contains(&field, &v) {
            continue;
        }
        for eb in 0..fd {
            let x_parent = factor.embed.apply(&field, &factor.algebra.basis_elem(eb));
            let x_s = embed_to_s(&x_parent);
            span.insert(&field, &m.act_on(&x_s, &v));
        }
        lifted.push(v);
    }
    let rank = lifted.len();
    // induced map (A_factor)^rank → eM: columns act(embed(basis))·v_j
    let mut induced = Mat::zeros(n, rank * fd);
    for (j, v) in lifted.iter().enumerate() {
        for b in 0..fd {
            let x_parent = factor.embed.apply(&field, &factor.algebra.basis_elem(b));
            let x_s = embed_to_s(&x_parent);
            let img = m.act_on(&x_s, v);
            for r in 0..n {
                induced[(r, j * fd + b)] = img[r];
            }
        }
    }
    let free = rank * fd == comp_dim && induced.rank(&field) == comp_dim;
    FactorFreeness { factor_dim: comp_dim, residue_rank: rank, free }
}

/// Every finitely presented unit module is flat over R; for finite
/// modules over the artinian local factors this is freeness, tested
/// exactly per factor.
pub fn check_flat(m: &TauModule) -> VerifyReport {
    let ts = m.parent();
    let locals = ts.r().local_data();
    let mut failures = Vec::new();
    let mut ranks = Vec::new();
    for (i, factor) in locals.factors.iter().enumerate() {
        let embed = |x: &[Fq]| ts.r_to_s(x);
        let res = factor_freeness(m, factor, &embed);
        ranks.push(res.residue_rank);
        if !res.free {
            failures.push(json!({
                "factor": i,
                "component_dim": res.factor_dim,
                "residue_rank": res.residue_rank,
                "factor_algebra_dim": factor.algebra.dim(),
            }));
        }
    }
    if failures.is_empty() {
        VerifyReport::pass(format!("flat[{}]", m.label()))
    } else {
        VerifyReport::fail(
            format!("flat[{}]", m.label()),
            json!({ "module": m.label(), "failed_factors": failures }),
        )
    }
}

/// Projectivity over S itself (freeness over each local factor of S);
/// when Λ is a field and R is connected the rank must moreover be
/// constant across factors.
pub fn check_projective_over_s(m: &TauModule) -> VerifyReport {
    let ts = m.parent();
    let locals = ts.s().local_data();
    let mut failures = Vec::new();
    let mut ranks = Vec::new();
    for (i, factor) in locals.factors.iter().enumerate() {
        let embed = |x: &[Fq]| x.to_vec();
        let res = factor_freeness(m, factor, &embed);
        ranks.push(res.residue_rank);
        if !res.free {
            failures.push(json!({
                "factor": i,
                "component_dim": res.factor_dim,
                "residue_rank": res.residue_rank,
            }));
        }
    }
    let want_constant_rank =
        ts.lambda().is_field() && crate::algebra::is_connected(ts.r());
    let constant = ranks.windows(2).all(|w| w[0] == w[1]);
    if failures.is_empty() && (!want_constant_rank || constant) {
        VerifyReport::pass(format!("projective[{}]", m.label()))
    } else {
        VerifyReport::fail(
            format!("projective[{}]", m.label()),
            json!({
                "module": m.label(),
                "failed_factors": failures,
                "ranks": ranks,
                "constant_rank_required": want_constant_rank,
            }),
        )
    }
}
