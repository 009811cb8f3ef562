//! Artinian descent: a finitely presented unit module over Λ⊗R with R
//! artinian local is the base change of its reduction M/𝔪M along the
//! coefficient-field splitting k → R.
//!
//! The descent returns both routes: the reduction M₀ with an explicit
//! isomorphism M₀⊗_k R ≅ M (found by hom-space search; the lemma
//! guarantees existence, so a failed search is a theorem violation),
//! and the presentation route — a Frobenius power F^N(A) of the
//! relation matrix whose entries land in Λ⊗s(k), re-read as a
//! presentation over Λ⊗k for cross-validation.

use crate::algebra::{AlgebraMap, SMat, TensorAlgebra};
use crate::error::{Error, Result};
use crate::field::Fq;
use crate::linalg::{Mat, QuotientSpace, Subspace};
use crate::module::{find_isomorphism, BaseChange, ModuleMorphism, TauModule};

#[derive(Debug, Clone)]
pub struct Descent {
    /// Λ⊗k.
    pub reduced_ts: TensorAlgebra,
    /// M₀ = M/𝔪M over Λ⊗k.
    pub reduced: TauModule,
    /// The coefficient-field splitting k → R.
    pub section: AlgebraMap,
    /// M₀ ⊗_k R, over a tensor algebra structurally equal to M's.
    pub extended: TauModule,
    /// Isomorphism M₀⊗R → M.
    pub iso: ModuleMorphism,
    /// (N, F^N(A)): the twisted relation matrix with entries in Λ⊗s(k),
    /// re-expressed over Λ⊗k.
    pub reduced_presentation: (usize, SMat),
}

pub fn artinian_descend(m: &TauModule, seed: u64) -> Result<Descent> {
    if !m.is_unit() {
        return Err(Error::NotUnit("descent needs a unit module".into()));
    }
    let ts = m.parent().clone();
    let field = ts.base().clone();
    let locals = ts.r().local_data();
    if locals.factors.len() != 1 {
        return Err(Error::NotLocal(format!("R = {} is not local", ts.r().label())));
    }
    let factor = &locals.factors[0];
    let k = factor.residue.clone();
    // section k → R through the factor coordinates
    let section_mat = factor.embed.matmul(&field, &factor.section);
    let section = AlgebraMap::new(k.clone(), ts.r().clone(), section_mat)?;
    let reduced_ts = TensorAlgebra::new(ts.lambda().clone(), k.clone())?;

    // M₀ = M/(Λ⊗𝔪)M
    let mut mm_gens: Vec<Vec<Fq>> = Vec::new();
    for i in 0..factor.max_ideal.dim() {
        let x_r = factor.embed.apply(&field, &factor.max_ideal.basis_vector(i));
        let x_s = ts.r_to_s(&x_r);
        let x_mat = m.act_vec(&x_s);
        for j in 0..m.dim() {
            mm_gens.push(x_mat.col(j));
        }
    }
    let quot = QuotientSpace::new(&field, &mm_gens, m.dim());
    let dl = ts.lambda().dim();
    let dk = k.dim();
    let mut acts = Vec::with_capacity(dl * dk);
    for i in 0..dl {
        let lam_s = ts.lambda_to_s(&ts.lambda().basis_elem(i));
        for j in 0..dk {
            let kj_r = section.apply(&k.basis_elem(j));
            let kj_s = ts.r_to_s(&kj_r);
            let elem = ts.s().mul_vec(&lam_s, &kj_s);
            acts.push(quot.induced(&field, &m.act_vec(&elem)));
        }
    }
    let tau0 = quot.induced(&field, m.tau());
    let reduced = TauModule::new_unchecked(
        reduced_ts.clone(),
        acts,
        tau0,
        format!("{}/m", m.label()),
        None,
    );

    // extend back and search for the isomorphism the lemma promises
    let bc = BaseChange::on_r(&reduced_ts, &section)?;
    debug_assert_eq!(bc.target_algebra(), &ts);
    let extended = rebase(&bc.module(&reduced), &ts);
    let iso = find_isomorphism(&extended, m, seed).ok_or_else(|| {
        Error::TheoremViolation(format!(
            "no isomorphism M0⊗R ≅ {} found (dim M0⊗R = {}, dim M = {})",
            m.label(),
            extended.dim(),
            m.dim()
        ))
    })?;

    // presentation route: F^N(A) has entries in Λ⊗s(k)
    let pres = m.presentation();
    let n_power = factor.section_power;
    let twisted = pres.rel.map_entries(|e| ts.frob_vec_pow(e, n_power));
    // membership in Λ⊗s(k) and re-reading over Λ⊗k
    let dr = ts.r().dim();
    let mut basis_rows: Vec<Vec<Fq>> = Vec::new();
    for i in 0..dl {
        for j in 0..dk {
            let kj_r = section.apply(&k.basis_elem(j));
            basis_rows.push(ts.pure_tensor(&ts.lambda().basis_elem(i), &kj_r));
        }
    }
    let coeff_space = Subspace::from_spanning(&field, &basis_rows, dl * dr);
    let coeff_mat = Mat::from_fn(dl * dr, dl * dk, |r, c| basis_rows[c][r]);
    let mut reduced_rel = SMat::zeros(reduced_ts.s(), twisted.rows(), twisted.cols());
    for r in 0..twisted.rows() {
        for c in 0..twisted.cols() {
            let entry = twisted.at(r, c);
            if !coeff_space.contains(&field, entry) {
                return Err(Error::TheoremViolation(format!(
                    "F^{}(A) entry ({}, {}) does not lie in Λ⊗s(k)",
                    n_power, r, c
                )));
            }
            let coords = coeff_mat
                .solve(&field, entry)
                .expect("membership was just checked");
            reduced_rel.set(r, c, coords);
        }
    }

    Ok(Descent {
        reduced_ts,
        reduced,
        section,
        extended,
        iso,
        reduced_presentation: (n_power, reduced_rel),
    })
}

/// Re-attach a module to a structurally equal tensor algebra instance
/// so morphism construction against modules over `ts` type-checks.
fn rebase(m: &TauModule, ts: &TensorAlgebra) -> TauModule {
    assert_eq!(m.parent(), ts);
    let acts: Vec<Mat> = (0..ts.dim()).map(|i| m.act(i).clone()).collect();
    TauModule::new_unchecked(ts.clone(), acts, m.tau().clone(), m.label(), None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::SMat;
    use crate::module::test_support::*;
    use crate::module::unit_object;

    #[test]
    fn worked_example_one_plus_x() {
        // Λ = F_2, R = F_2[x]/(x²), M = R with τ(v) = (1+x)·F(v):
        // unit, and M ≅ 1 via multiplication by u = 1+x
        let ts = dual_number_base();
        let one_plus_x = ts.s().add_vec(&ts.s().one(), &ts.r_to_s(&[Fq(0), Fq(1)]));
        let mut c = SMat::zeros(ts.s(), 1, 1);
        c.set(0, 0, one_plus_x.clone());
        let m = TauModule::new_free(ts.clone(), c, "AS(1+x)");
        assert!(m.is_unit());
        let descent = artinian_descend(&m, 17).unwrap();
        assert_eq!(descent.reduced.dim(), 1);
        assert!(descent.iso.is_isomorphism());
        // the witness u = 1+x: v ↦ u·v is an explicit isomorphism M → 1
        let one_obj = unit_object(&ts);
        let u_mat = ts.s().left_mul_matrix(&one_plus_x);
        let witness = ModuleMorphism::new(m.clone(), one_obj, u_mat).unwrap();
        assert!(witness.is_isomorphism());
    }

    #[test]
    fn already_reduced_module_descends_to_itself() {
        let ts = dual_number_base();
        let one = unit_object(&ts);
        let descent = artinian_descend(&one, 3).unwrap();
        assert_eq!(descent.reduced.dim(), 1);
        assert_eq!(descent.extended.dim(), one.dim());
        assert!(descent.iso.is_isomorphism());
        // presentation route: no relations for a free module
        assert_eq!(descent.reduced_presentation.1.cols(), 0);
    }

    #[test]
    fn descent_requires_unit() {
        let ts = dual_number_base();
        let x = ts.r_to_s(&[Fq(0), Fq(1)]);
        let mut c = SMat::zeros(ts.s(), 1, 1);
        c.set(0, 0, x);
        let nil = TauModule::new_free(ts.clone(), c, "nil");
        assert!(matches!(artinian_descend(&nil, 0), Err(Error::NotUnit(_))));
    }

    #[test]
    fn descent_requires_local_base() {
        let field = crate::field::GaloisField::new(2, 1, None).unwrap();
        let a = crate::algebra::base_field_algebra(&field);
        let r = crate::algebra::product_algebra(&a, &a);
        let ts = TensorAlgebra::new(a, r).unwrap();
        let one = unit_object(&ts);
        assert!(matches!(artinian_descend(&one, 0), Err(Error::NotLocal(_))));
    }
}
