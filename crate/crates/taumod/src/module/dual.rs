//! Duals of free unit modules and the rigidity identities.
//!
//! For M = S^r with τ(v) = C·F(v), the dual carries τ(w) = (C⁻¹)ᵀ·F(w);
//! this is exactly the condition making evaluation τ-equivariant.
//! Evaluation and coevaluation are returned as validated morphisms, and
//! `rigidity_identities` computes both triangle composites through the
//! actual tensor machinery and compares them with the identity matrix.

use super::tensor_prod::{tensor, tensor_morphism_matrix, TensorProduct};
use super::{unit_object, ModuleMorphism, TauModule};
use crate::error::{Error, Result};
use crate::linalg::Mat;

#[derive(Debug, Clone)]
pub struct DualData {
    pub module: TauModule,
    /// ev: M ⊗ M^∨ → 1.
    pub ev: ModuleMorphism,
    /// coev: 1 → M^∨ ⊗ M.
    pub coev: ModuleMorphism,
    /// The tensor products ev and coev are defined on.
    pub m_tensor_dual: TensorProduct,
    pub dual_tensor_m: TensorProduct,
}

pub fn dual(m: &TauModule) -> Result<DualData> {
    let ff = m.free_form().ok_or(Error::NotFreeOverS)?;
    let ts = m.parent().clone();
    let s = ts.s();
    let field = ts.base().clone();
    let ds = s.dim();
    let r = ff.rank;
    let c_inv = ff
        .twist
        .inverse(s)
        .ok_or_else(|| Error::NotUnit("dual requires an invertible twist matrix".into()))?;
    let dual_twist = c_inv.transpose();
    let dual_module =
        TauModule::new_free(ts.clone(), dual_twist, format!("{}^", m.label()));

    let one = unit_object(&ts);
    let m_tensor_dual = tensor(m, &dual_module);
    let dual_tensor_m = tensor(&dual_module, m);

    // ev on the free layout: slot (i,j), S-coordinate e_k ↦ δ_{ij}·e_k
    let nt = m_tensor_dual.module.dim();
    let mut ev_mat = Mat::zeros(ds, nt);
    for i in 0..r {
        let slot = i * r + i;
        for k in 0..ds {
            ev_mat[(k, slot * ds + k)] = field.one();
        }
    }
    let ev = ModuleMorphism::new(m_tensor_dual.module.clone(), one.clone(), ev_mat)?;

    // coev: e_k ↦ Σ_i (slot (i,i), e_k)
    let nt2 = dual_tensor_m.module.dim();
    let mut coev_mat = Mat::zeros(nt2, ds);
    for i in 0..r {
        let slot = i * r + i;
        for k in 0..ds {
            coev_mat[(slot * ds + k, k)] = field.one();
        }
    }
    let coev = ModuleMorphism::new(one, dual_tensor_m.module.clone(), coev_mat)?;

    Ok(DualData { module: dual_module, ev, coev, m_tensor_dual, dual_tensor_m })
}

/// Both triangle identities, computed through explicit unit and
/// associativity bookkeeping; returns the two composite matrices so the
/// caller can compare them with identities bit-exactly.
pub fn rigidity_identities(m: &TauModule) -> Result<(Mat, Mat)> {
    let dualdata = dual(m)?;
    let d = &dualdata.module;
    let ts = m.parent().clone();
    let field = ts.base().clone();
    let one = unit_object(&ts);

    // composite 1: M → M⊗1 → M⊗(D⊗M) → (M⊗D)⊗M → 1⊗M → M
    let m_one = tensor(m, &one);
    let m_dm = tensor(m, &dualdata.dual_tensor_m.module);
    let md_m = tensor(&dualdata.m_tensor_dual.module, m);
    let one_m = tensor(&one, m);

    let rho = unit_iso_right(m, &m_one); // M → M⊗1
    let id_coev = tensor_morphism_matrix(
        &Mat::identity(&field, m.dim()),
        dualdata.coev.matrix(),
        &m_one,
        &m_dm,
    );
    let assoc1 = associator(
        m,
        d,
        m,
        &dualdata.dual_tensor_m,
        &m_dm,
        &dualdata.m_tensor_dual,
        &md_m,
    );
    let ev_id = tensor_morphism_matrix(
        dualdata.ev.matrix(),
        &Mat::identity(&field, m.dim()),
        &md_m,
        &one_m,
    );
    let lambda_inv = unit_iso_left(m, &one_m)
        .inverse(&field)
        .expect("left unit constraint is an isomorphism");
    let comp1 = lambda_inv
        .matmul(&field, &ev_id)
        .matmul(&field, &assoc1)
        .matmul(&field, &id_coev)
        .matmul(&field, &rho);

    // composite 2: D → 1⊗D → (D⊗M)⊗D → D⊗(M⊗D) → D⊗1 → D
    let one_d = tensor(&one, d);
    let dm_d = tensor(&dualdata.dual_tensor_m.module, d);
    let d_md = tensor(d, &dualdata.m_tensor_dual.module);
    let d_one = tensor(d, &one);

    let lambda_d = unit_iso_left(d, &one_d); // D → 1⊗D
    let coev_id = tensor_morphism_matrix(
        dualdata.coev.matrix(),
        &Mat::identity(&field, d.dim()),
        &one_d,
        &dm_d,
    );
    let assoc2 = associator(
        d,
        m,
        d,
        &dualdata.m_tensor_dual,
        &d_md,
        &dualdata.dual_tensor_m,
        &dm_d,
    )
    .inverse(&field)
    .expect("associator is an isomorphism");
    let id_ev = tensor_morphism_matrix(
        &Mat::identity(&field, d.dim()),
        dualdata.ev.matrix(),
        &d_md,
        &d_one,
    );
    let rho_d_inv = unit_iso_right(d, &d_one)
        .inverse(&field)
        .expect("right unit constraint is an isomorphism");
    let comp2 = rho_d_inv
        .matmul(&field, &id_ev)
        .matmul(&field, &assoc2)
        .matmul(&field, &coev_id)
        .matmul(&field, &lambda_d);

    Ok((comp1, comp2))
}

/// v ↦ v⊗1 as a matrix M → M⊗1.
fn unit_iso_right(m: &TauModule, m_one: &TensorProduct) -> Mat {
    let field = m.base();
    let one_s = m.parent().s().one();
    let mut out = Mat::zeros(m_one.module.dim(), m.dim());
    for j in 0..m.dim() {
        let mut e = vec![field.zero(); m.dim()];
        e[j] = field.one();
        let cls = m_one.pure_tensor(&e, &one_s);
        for i in 0..m_one.module.dim() {
            out[(i, j)] = cls[i];
        }
    }
    out
}

/// v ↦ 1⊗v as a matrix M → 1⊗M.
fn unit_iso_left(m: &TauModule, one_m: &TensorProduct) -> Mat {
    let field = m.base();
    let one_s = m.parent().s().one();
    let mut out = Mat::zeros(one_m.module.dim(), m.dim());
    for j in 0..m.dim() {
        let mut e = vec![field.zero(); m.dim()];
        e[j] = field.one();
        let cls = one_m.pure_tensor(&one_s, &e);
        for i in 0..one_m.module.dim() {
            out[(i, j)] = cls[i];
        }
    }
    out
}

/// The associativity constraint A⊗(B⊗C) → (A⊗B)⊗C through triple
/// Kronecker coordinates (the flat index is literally associative).
#[allow(clippy::too_many_arguments)]
fn associator(
    a: &TauModule,
    _b: &TauModule,
    c: &TauModule,
    bc: &TensorProduct,
    a_bc: &TensorProduct,
    ab: &TensorProduct,
    ab_c: &TensorProduct,
) -> Mat {
    let field = a.base().clone();
    // lift A⊗(B⊗C) to A ⊗ (B ⊗ C) Kronecker coordinates, then to the
    // triple product, reproject through (A⊗B) ⊗ C
    let lift_outer = a_bc.lift_matrix(); // (n_A·n_BC) × n_{A(BC)}
    let lift_inner = Mat::identity(&field, a.dim()).kron(&field, &bc.lift_matrix());
    let to_ab = ab.pure.kron(&field, &Mat::identity(&field, c.dim()));
    let finish = ab_c.pure.matmul(&field, &to_ab);
    finish
        .matmul(&field, &lift_inner)
        .matmul(&field, &lift_outer)
}
