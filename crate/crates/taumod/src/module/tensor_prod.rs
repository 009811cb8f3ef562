//! Tensor products M ⊗_S N with τ = τ_M ⊗ τ_N.
//!
//! The general construction is the quotient of M ⊗_{𝔽_q} N by the
//! balancing relations s·m⊗n − m⊗s·n. When both factors carry free
//! certificates the result is built directly as the free module with
//! twist C_M ⊗ C_N, which the quotient route must (and, in tests, does)
//! reproduce up to isomorphism. `pure` maps Kronecker coordinates of
//! M ⊗_{𝔽_q} N onto the product, which is how morphisms are tensored.

use super::{FreeForm, TauModule};
use crate::field::Fq;
use crate::linalg::{Mat, QuotientSpace};

#[derive(Debug, Clone)]
pub struct TensorProduct {
    pub module: TauModule,
    /// n_T × (n_M·n_N): image of the pure tensor map on Kronecker
    /// coordinates ((i, j) ↦ i·n_N + j).
    pub pure: Mat,
}

impl TensorProduct {
    /// Class of a pure tensor u⊗v.
    pub fn pure_tensor(&self, u: &[Fq], v: &[Fq]) -> Vec<Fq> {
        let field = self.module.base();
        let n2 = v.len();
        let mut kron = vec![field.zero(); u.len() * v.len()];
        for (i, &a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in v.iter().enumerate() {
                kron[i * n2 + j] = field.mul(a, b);
            }
        }
        self.pure.apply(field, &kron)
    }

    /// A right inverse of `pure` (column-wise solve); sections of the
    /// projection are not unique, any choice works for morphism lifts.
    pub fn lift_matrix(&self) -> Mat {
        let field = self.module.base();
        let nt = self.pure.rows();
        let big = self.pure.cols();
        let mut out = Mat::zeros(big, nt);
        for j in 0..nt {
            let mut e = vec![field.zero(); nt];
            e[j] = field.one();
            let sol = self
                .pure
                .solve(field, &e)
                .expect("pure tensor map must be onto");
            for r in 0..big {
                out[(r, j)] = sol[r];
            }
        }
        out
    }
}

pub fn tensor(m: &TauModule, n: &TauModule) -> TensorProduct {
    assert_eq!(m.parent(), n.parent(), "tensor over mismatched base algebras");
    if let (Some(fm), Some(fn_)) = (m.free_form(), n.free_form()) {
        return tensor_free(m, n, fm, fn_);
    }
    tensor_general(m, n)
}

fn tensor_free(m: &TauModule, n: &TauModule, fm: &FreeForm, fn_: &FreeForm) -> TensorProduct {
    let ts = m.parent().clone();
    let field = ts.base().clone();
    let s = ts.s();
    let ds = s.dim();
    let twist = fm.twist.kron(s, &fn_.twist);
    let module = TauModule::new_free(
        ts.clone(),
        twist,
        format!("{}⊗{}", m.label(), n.label()),
    );
    // pure: ((i,k),(j,l)) ↦ slot (i·r2+j), S-entry e_k·e_l
    let (r1, r2) = (fm.rank, fn_.rank);
    let (nm, nn) = (m.dim(), n.dim());
    let mut pure = Mat::zeros(r1 * r2 * ds, nm * nn);
    for i in 0..r1 {
        for k in 0..ds {
            for j in 0..r2 {
                for l in 0..ds {
                    let col = (i * ds + k) * nn + (j * ds + l);
                    let entry = s.mul_entry(k, l);
                    let slot = i * r2 + j;
                    for (t, &c) in entry.iter().enumerate() {
                        if !c.is_zero() {
                            pure[(slot * ds + t, col)] = c;
                        }
                    }
                }
            }
        }
    }
    let _ = &field;
    TensorProduct { module, pure }
}

fn tensor_general(m: &TauModule, n: &TauModule) -> TensorProduct {
    let ts = m.parent().clone();
    let field = ts.base().clone();
    let ds = ts.dim();
    let (nm, nn) = (m.dim(), n.dim());
    let ambient = nm * nn;
    let mut rels = Vec::with_capacity(ds * nm * nn);
    for s in 0..ds {
        let am = m.act(s);
        let an = n.act(s);
        for i in 0..nm {
            let mi = am.col(i);
            for j in 0..nn {
                let nj = an.col(j);
                let mut rel = vec![field.zero(); ambient];
                for (t, &c) in mi.iter().enumerate() {
                    rel[t * nn + j] = c;
                }
                for (t, &c) in nj.iter().enumerate() {
                    rel[i * nn + t] = field.sub(rel[i * nn + t], c);
                }
                rels.push(rel);
            }
        }
    }
    let quot = QuotientSpace::new(&field, &rels, ambient);
    let ident_n = Mat::identity(&field, nn);
    let acts: Vec<Mat> = (0..ds)
        .map(|s| quot.induced(&field, &m.act(s).kron(&field, &ident_n)))
        .collect();
    let tau = quot.induced(&field, &m.tau().kron(&field, n.tau()));
    let module = TauModule::new_unchecked(
        ts.clone(),
        acts,
        tau,
        format!("{}⊗{}", m.label(), n.label()),
        None,
    );
    let pure = quot.projection_matrix(&field);
    TensorProduct { module, pure }
}

/// α⊗β as a matrix between the given tensor products.
pub fn tensor_morphism_matrix(
    alpha: &Mat,
    beta: &Mat,
    source: &TensorProduct,
    target: &TensorProduct,
) -> Mat {
    let field = source.module.base().clone();
    let kron = alpha.kron(&field, beta);
    let lifted = kron.matmul(&field, &source.lift_matrix());
    target.pure.matmul(&field, &lifted)
}

#[cfg(test)]
mod tests {
    use super::super::test_support::*;
    use super::super::{find_isomorphism, unit_object};
    use super::*;

    #[test]
    fn unit_tensor_unit_is_unit() {
        let ts = dual_number_base();
        let one = unit_object(&ts);
        let t = tensor(&one, &one);
        assert_eq!(t.module.dim(), one.dim());
        assert!(t.module.is_unit());
        let iso = find_isomorphism(&t.module, &one, 7).expect("1⊗1 ≅ 1");
        assert!(iso.is_isomorphism());
    }

    #[test]
    fn free_ranks_multiply() {
        let ts = nonreduced_lambda_base();
        let one = unit_object(&ts);
        let t = tensor(&one, &one);
        assert_eq!(t.module.free_form().unwrap().rank, 1);
        let t2 = tensor(&t.module, &one);
        assert_eq!(t2.module.dim(), ts.dim());
        assert_eq!(t2.module.free_form().unwrap().rank, 1);
    }

    #[test]
    fn general_route_matches_free_route() {
        // strip the free certificate and compare via isomorphism search
        let ts = dual_number_base();
        let one = unit_object(&ts);
        let free = tensor(&one, &one);
        // rebuild `one` without certificate
        let acts: Vec<Mat> = (0..ts.dim()).map(|i| one.act(i).clone()).collect();
        let stripped =
            TauModule::new(ts.clone(), acts, one.tau().clone(), "1-stripped").unwrap();
        let general = tensor(&stripped, &stripped);
        assert_eq!(general.module.dim(), free.module.dim());
        let iso = find_isomorphism(&general.module, &free.module, 11)
            .expect("two tensor constructions agree");
        assert!(iso.is_isomorphism());
    }

    #[test]
    fn left_unit_constraint_is_an_isomorphism() {
        let ts = dual_number_base();
        let one = unit_object(&ts);
        let m = quotient_by_x_module(&ts);
        let t = tensor(&one, &m);
        // 1⊗M ≅ M via s⊗m ↦ s·m; the pure-tensor map against one_S
        // gives the inverse direction
        assert_eq!(t.module.dim(), m.dim());
        let field = ts.base();
        let mut iso = Mat::zeros(t.module.dim(), m.dim());
        for j in 0..m.dim() {
            let mut e = vec![field.zero(); m.dim()];
            e[j] = field.one();
            let cls = t.pure_tensor(&ts.s().one(), &e);
            for i in 0..t.module.dim() {
                iso[(i, j)] = cls[i];
            }
        }
        assert!(iso.is_invertible(field));
    }
}
