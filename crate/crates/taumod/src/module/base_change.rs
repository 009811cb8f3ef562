//! Base change of τ-modules along algebra maps on either tensor factor.
//!
//! Pullback is computed through presentations: if M = coker(A) over S
//! then M⊗_S S' = coker(ĝ(A)) over S', with τ transported through the
//! generator expression T (τ on S^g is x ↦ T·F(x), which descends). The
//! same coordinates serve morphisms, so exactness/faithfulness checks
//! compare matrices directly.

use super::{ModuleMorphism, Presentation, TauModule};
use crate::algebra::{AlgVec, AlgebraMap, FiniteAlgebra, SMat, TensorAlgebra};
use crate::error::{Error, Result};
use crate::field::Fq;
use crate::linalg::{Mat, QuotientSpace};

#[derive(Debug, Clone)]
pub struct BaseChange {
    source_ts: TensorAlgebra,
    target_ts: TensorAlgebra,
    /// The induced algebra map S → S'.
    s_map: Mat,
}

impl BaseChange {
    /// Base change along g: R → R′ (the geometric side).
    pub fn on_r(ts: &TensorAlgebra, map: &AlgebraMap) -> Result<BaseChange> {
        if map.source() != ts.r() {
            return Err(Error::ShapeMismatch(
                "base-change map must start at the R factor".into(),
            ));
        }
        let target_ts = TensorAlgebra::new(ts.lambda().clone(), map.target().clone())?;
        let field = ts.base();
        let (dl, dr, drp) = (ts.lambda().dim(), ts.r().dim(), map.target().dim());
        let mut s_map = Mat::zeros(dl * drp, dl * dr);
        for i in 0..dl {
            for j in 0..dr {
                for t in 0..drp {
                    s_map[(i * drp + t, i * dr + j)] = map.matrix()[(t, j)];
                }
            }
        }
        let _ = field;
        Ok(BaseChange { source_ts: ts.clone(), target_ts, s_map })
    }

    /// Base change along g: Λ → Λ′ (the coefficient side).
    pub fn on_lambda(ts: &TensorAlgebra, map: &AlgebraMap) -> Result<BaseChange> {
        if map.source() != ts.lambda() {
            return Err(Error::ShapeMismatch(
                "base-change map must start at the Λ factor".into(),
            ));
        }
        let target_ts = TensorAlgebra::new(map.target().clone(), ts.r().clone())?;
        let (dl, dlp, dr) = (ts.lambda().dim(), map.target().dim(), ts.r().dim());
        let mut s_map = Mat::zeros(dlp * dr, dl * dr);
        for i in 0..dl {
            for u in 0..dlp {
                let c = map.matrix()[(u, i)];
                if c.is_zero() {
                    continue;
                }
                for j in 0..dr {
                    s_map[(u * dr + j, i * dr + j)] = c;
                }
            }
        }
        Ok(BaseChange { source_ts: ts.clone(), target_ts, s_map })
    }

    pub fn source_algebra(&self) -> &TensorAlgebra {
        &self.source_ts
    }

    pub fn target_algebra(&self) -> &TensorAlgebra {
        &self.target_ts
    }

    pub fn apply_s(&self, x: &[Fq]) -> AlgVec {
        self.s_map.apply(self.source_ts.base(), x)
    }

    fn map_smat(&self, m: &SMat) -> SMat {
        m.map_entries(|e| self.apply_s(e))
    }

    pub fn module(&self, m: &TauModule) -> TauModule {
        self.transport(m).0
    }

    /// Transported module together with its quotient coordinates on
    /// S'^g (needed to push extra operators through the base change).
    pub fn module_with_coords(&self, m: &TauModule) -> (TauModule, QuotientSpace, usize) {
        self.transport(m)
    }

    fn transport(&self, m: &TauModule) -> (TauModule, QuotientSpace, usize) {
        assert_eq!(m.parent(), &self.source_ts, "module lives over a different S");
        let field = self.source_ts.base().clone();
        let sp: &FiniteAlgebra = self.target_ts.s();
        let dsp = sp.dim();
        let pres = m.presentation();
        let g = pres.generator_count();
        let rel_p = self.map_smat(&pres.rel);
        let t_p = self.map_smat(&pres.tau_on_gens);
        let ambient = g * dsp;
        let rel_lin = rel_p.linearize(sp);
        let rel_cols: Vec<Vec<Fq>> = (0..rel_lin.cols()).map(|j| rel_lin.col(j)).collect();
        let quot = QuotientSpace::new(&field, &rel_cols, ambient);
        let ident_g = Mat::identity(&field, g);
        let acts: Vec<Mat> = (0..dsp)
            .map(|t| quot.induced(&field, &ident_g.kron(&field, sp.left_mul_basis_matrix(t))))
            .collect();
        let frob_block = ident_g.kron(&field, self.target_ts.frob_matrix());
        let tau_ambient = t_p.linearize(sp).matmul(&field, &frob_block);
        let tau = quot.induced(&field, &tau_ambient);
        let free = if rel_p.cols() == 0 {
            Some(super::FreeForm { rank: g, twist: t_p })
        } else {
            None
        };
        let module = TauModule::new_unchecked(
            self.target_ts.clone(),
            acts,
            tau,
            format!("{}'", m.label()),
            free,
        );
        (module, quot, g)
    }

    /// Base change of a morphism; its source and target are structurally
    /// equal to `self.module(α.source())` and `self.module(α.target())`.
    pub fn morphism(&self, alpha: &ModuleMorphism) -> ModuleMorphism {
        let field = self.source_ts.base().clone();
        let (m_p, m_quot, _gm) = self.transport(alpha.source());
        let (n_p, n_quot, _gn) = self.transport(alpha.target());
        let sp = self.target_ts.s();
        let ds = self.source_ts.dim();

        // express α on source generators as an S-matrix G
        let m_pres = alpha.source().presentation();
        let n_pres = alpha.target().presentation();
        let gm = m_pres.generator_count();
        let gn = n_pres.generator_count();
        let mut g_mat = SMat::zeros(self.source_ts.s(), gn, gm);
        for (i, &gen) in m_pres.gens.iter().enumerate() {
            let mut e = vec![field.zero(); alpha.source().dim()];
            e[gen] = field.one();
            let img = alpha.matrix().apply(&field, &e);
            let pre = n_pres.lift.apply(&field, &img);
            for (j, chunk) in Presentation::chunks(&pre, ds).into_iter().enumerate() {
                g_mat.set(j, i, chunk);
            }
        }
        let g_p = self.map_smat(&g_mat).linearize(sp);
        let mut mat = Mat::zeros(n_p.dim(), m_p.dim());
        for col in 0..m_p.dim() {
            let mut e = vec![field.zero(); m_p.dim()];
            e[col] = field.one();
            let lifted = m_quot.lift(&field, &e);
            let img = g_p.apply(&field, &lifted);
            let cls = n_quot.project(&field, &img);
            for row in 0..n_p.dim() {
                mat[(row, col)] = cls[row];
            }
        }
        ModuleMorphism::new_unchecked(m_p, n_p, mat)
    }
}

#[cfg(test)]
mod tests {
    use super::super::test_support::*;
    use super::super::{find_isomorphism, unit_object};
    use super::*;
    use crate::algebra::{base_field_algebra, extension_field_algebra};

    fn residue_map_r(ts: &TensorAlgebra) -> AlgebraMap {
        // R = F_2[x]/(x^2) → F_2
        let field = ts.base();
        let k = base_field_algebra(field);
        let mat = Mat::from_rows(vec![vec![Fq(1), Fq(0)]], 2);
        AlgebraMap::new(ts.r().clone(), k, mat).unwrap()
    }

    #[test]
    fn identity_base_change_is_isomorphic() {
        let ts = dual_number_base();
        let one = unit_object(&ts);
        let bc = BaseChange::on_r(&ts, &AlgebraMap::identity(ts.r())).unwrap();
        let moved = bc.module(&one);
        assert_eq!(moved.dim(), one.dim());
        let iso = find_isomorphism(&moved, &one, 13).expect("identity pullback");
        assert!(iso.is_isomorphism());
    }

    #[test]
    fn reduction_to_the_point_shrinks_dimension() {
        let ts = dual_number_base();
        let one = unit_object(&ts);
        let bc = BaseChange::on_r(&ts, &residue_map_r(&ts)).unwrap();
        let moved = bc.module(&one);
        assert_eq!(moved.dim(), 1);
        assert!(moved.is_unit());
    }

    #[test]
    fn field_extension_doubles_free_dimension() {
        let field = crate::field::GaloisField::new(2, 1, None).unwrap();
        let lambda = base_field_algebra(&field);
        let r = base_field_algebra(&field);
        let ts = TensorAlgebra::new(lambda, r.clone()).unwrap();
        let one = unit_object(&ts);
        let f4 = extension_field_algebra(&field, 2);
        // embedding F_2 → F_4
        let mat = Mat::from_rows(vec![vec![Fq(1)], vec![Fq(0)]], 1);
        let embed = AlgebraMap::new(r, f4, mat).unwrap();
        let bc = BaseChange::on_r(&ts, &embed).unwrap();
        let moved = bc.module(&one);
        assert_eq!(moved.dim(), 2 * one.dim());
        assert!(moved.is_unit());
    }

    #[test]
    fn base_change_preserves_units_and_morphisms() {
        let ts = dual_number_base();
        let one = unit_object(&ts);
        let sum = super::super::direct_sum(&one, &one);
        let bc = BaseChange::on_r(&ts, &residue_map_r(&ts)).unwrap();
        let alpha = bc.morphism(&sum.project_left);
        assert!(!alpha.is_zero());
        assert!(bc.module(&sum.module).is_unit());
        // composition law: pullback of id is id
        let idm = ModuleMorphism::identity(&sum.module);
        let moved_id = bc.morphism(&idm);
        assert_eq!(moved_id.matrix(), &Mat::identity(ts.base(), moved_id.source().dim()));
    }

    #[test]
    fn base_change_respects_composition() {
        // F_2[x]/(x^2) → F_2 → F_4 in two hops equals the composite hop
        let ts = dual_number_base();
        let field = ts.base();
        let k = base_field_algebra(field);
        let f4 = extension_field_algebra(field, 2);
        let red = residue_map_r(&ts);
        let embed = AlgebraMap::new(
            k.clone(),
            f4.clone(),
            Mat::from_rows(vec![vec![Fq(1)], vec![Fq(0)]], 1),
        )
        .unwrap();
        let composite = embed.compose(&red);
        let one = unit_object(&ts);
        let two_hops = {
            let bc1 = BaseChange::on_r(&ts, &red).unwrap();
            let mid = bc1.module(&one);
            let bc2 = BaseChange::on_r(bc1.target_algebra(), &embed).unwrap();
            bc2.module(&mid)
        };
        let one_hop = BaseChange::on_r(&ts, &composite).unwrap().module(&one);
        assert_eq!(two_hops.dim(), one_hop.dim());
        let rebased = {
            let acts: Vec<Mat> =
                (0..one_hop.parent().dim()).map(|i| two_hops.act(i).clone()).collect();
            TauModule::new_unchecked(
                one_hop.parent().clone(),
                acts,
                two_hops.tau().clone(),
                "two-hops",
                None,
            )
        };
        let iso = find_isomorphism(&rebased, &one_hop, 5).expect("functoriality");
        assert!(iso.is_isomorphism());
    }

    #[test]
    fn lambda_side_tower_reduction() {
        // Λ = F_2[t]/(t²) → F_2 (kill t); the unit object stays unit
        let ts = nonreduced_lambda_base();
        let field = ts.base();
        let k = base_field_algebra(field);
        let mat = Mat::from_rows(vec![vec![Fq(1), Fq(0)]], 2);
        let red = AlgebraMap::new(ts.lambda().clone(), k, mat).unwrap();
        let bc = BaseChange::on_lambda(&ts, &red).unwrap();
        let one = unit_object(&ts);
        let moved = bc.module(&one);
        assert_eq!(moved.dim(), ts.r().dim());
        assert!(moved.is_unit());
    }
}
