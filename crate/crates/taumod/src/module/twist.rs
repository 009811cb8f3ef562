//! The Frobenius twist F*M, built directly from its definition as
//! (S ⊗_{𝔽_q} M) / ⟨ s·F(s')⊗m − s⊗s'·m ⟩, together with the
//! linearization φ: F*M → M, φ(s⊗m) = s·τ(m).
//!
//! Over a singular base this quotient can be larger or smaller than M —
//! that failure of exactness of F* is the structural obstruction the
//! unit condition works around, and `frobenius_nonexact_demo` exhibits
//! it. The cheap unit test in [`TauModule::is_unit`] avoids this
//! construction; the direct model here is the definitional object and
//! the oracle the fast path is tested against.

use super::{ModuleMorphism, TauModule};
use crate::linalg::{Mat, QuotientSpace};

#[derive(Debug, Clone)]
pub struct TwistData {
    /// F*M with its induced τ (τ(s⊗m) = F(s)⊗τ(m)).
    pub module: TauModule,
    /// φ: F*M → M in quotient coordinates.
    pub phi: Mat,
    /// φ⁻¹ when φ is bijective (iff M is unit).
    pub unit_section: Option<Mat>,
    /// The ambient quotient bookkeeping (index (k, j) ↦ e_k ⊗ m_j).
    pub quot: QuotientSpace,
}

pub fn frobenius_twist(m: &TauModule) -> TwistData {
    let field = m.base().clone();
    let ts = m.parent().clone();
    let s = ts.s();
    let ds = ts.dim();
    let n = m.dim();
    let ambient = ds * n;

    // relations s·F(s')⊗m − s⊗s'·m on basis triples
    let mut rels = Vec::with_capacity(ds * ds * n);
    for sp in 0..ds {
        let f_sp = ts.frob_vec(&s.basis_elem(sp));
        for j in 0..n {
            let mut e = vec![field.zero(); n];
            e[j] = field.one();
            let acted = m.act(sp).apply(&field, &e);
            for si in 0..ds {
                let left = s.mul_vec(&s.basis_elem(si), &f_sp);
                let mut rel = vec![field.zero(); ambient];
                for (k, &c) in left.iter().enumerate() {
                    rel[k * n + j] = c;
                }
                for (t, &c) in acted.iter().enumerate() {
                    rel[si * n + t] = field.sub(rel[si * n + t], c);
                }
                rels.push(rel);
            }
        }
    }
    let quot = QuotientSpace::new(&field, &rels, ambient);

    // ambient operators: act(e_t) = L_t ⊗ I_n, τ = F_S ⊗ τ_M
    let ident_n = Mat::identity(&field, n);
    let acts: Vec<Mat> = (0..ds)
        .map(|t| quot.induced(&field, &s.left_mul_basis_matrix(t).kron(&field, &ident_n)))
        .collect();
    let tau_ambient = ts.frob_matrix().kron(&field, m.tau());
    let tau = quot.induced(&field, &tau_ambient);
    let module = TauModule::new_unchecked(
        ts.clone(),
        acts,
        tau,
        format!("F*({})", m.label()),
        None,
    );

    // φ on quotient coordinates: lift, then (k, j) ↦ e_k · τ(m_j)
    let qd = quot.dim();
    let mut phi = Mat::zeros(n, qd);
    for col in 0..qd {
        let mut e = vec![field.zero(); qd];
        e[col] = field.one();
        let w = quot.lift(&field, &e);
        let mut img = vec![field.zero(); n];
        for k in 0..ds {
            for j in 0..n {
                let c = w[k * n + j];
                if c.is_zero() {
                    continue;
                }
                let mut ej = vec![field.zero(); n];
                ej[j] = field.one();
                let tv = m.apply_tau(&ej);
                let part = m.act(k).apply(&field, &tv);
                for (o, p) in img.iter_mut().zip(part) {
                    *o = field.add(*o, field.mul(c, p));
                }
            }
        }
        for row in 0..n {
            phi[(row, col)] = img[row];
        }
    }
    let unit_section = if qd == n { phi.inverse(&field) } else { None };
    TwistData { module, phi, unit_section, quot }
}

/// F*α for a morphism α: M → N, as a map between the given twists.
pub fn twist_morphism(
    alpha: &ModuleMorphism,
    source_twist: &TwistData,
    target_twist: &TwistData,
) -> ModuleMorphism {
    let field = alpha.source().base().clone();
    let ds = alpha.source().parent().dim();
    let ambient_map = Mat::identity(&field, ds).kron(&field, alpha.matrix());
    let sd = source_twist.module.dim();
    let td = target_twist.module.dim();
    let mut mat = Mat::zeros(td, sd);
    for col in 0..sd {
        let mut e = vec![field.zero(); sd];
        e[col] = field.one();
        let w = source_twist.quot.lift(&field, &e);
        let img = ambient_map.apply(&field, &w);
        let cls = target_twist.quot.project(&field, &img);
        for row in 0..td {
            mat[(row, col)] = cls[row];
        }
    }
    ModuleMorphism::new_unchecked(
        source_twist.module.clone(),
        target_twist.module.clone(),
        mat,
    )
}

/// dim F*M computed through the Frobenius-twisted presentation; used to
/// cross-check the direct construction.
pub fn twist_dim_via_presentation(m: &TauModule) -> usize {
    let pres = m.presentation();
    let twisted = pres.rel.map_entries(|e| m.parent().frob_vec(e));
    let lin = twisted.linearize(m.parent().s());
    pres.generator_count() * m.parent().dim() - lin.rank(m.base())
}
