//! The twisted tensor algebra S = Λ⊗R with its partial Frobenius F:
//! identity on the coefficient side Λ, q-power on the base side R.

use super::{tensor_product_algebra, AlgVec, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::field::{Fq, GaloisField};
use crate::linalg::{Mat, Subspace};
use std::fmt;
use std::sync::Arc;

struct TensorInner {
    lambda: FiniteAlgebra,
    r: FiniteAlgebra,
    s: FiniteAlgebra,
    /// λ ↦ λ⊗1, an algebra embedding Λ → S.
    copro_lambda: Mat,
    /// r ↦ 1⊗r.
    copro_r: Mat,
    /// F = id_Λ ⊗ (q-power on R).
    frob: Mat,
}

/// S = Λ ⊗_{𝔽_q} R with basis e_i⊗f_j at index i·dim(R)+j.
#[derive(Clone)]
pub struct TensorAlgebra(Arc<TensorInner>);

impl fmt::Debug for TensorAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorAlgebra({} (x) {})", self.0.lambda.label(), self.0.r.label())
    }
}

impl PartialEq for TensorAlgebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.lambda == other.0.lambda && self.0.r == other.0.r)
    }
}
impl Eq for TensorAlgebra {}

impl TensorAlgebra {
    pub fn new(lambda: FiniteAlgebra, r: FiniteAlgebra) -> Result<TensorAlgebra> {
        if lambda.base() != r.base() {
            return Err(Error::BaseFieldMismatch);
        }
        let field = lambda.base().clone();
        let s = tensor_product_algebra(&lambda, &r);
        let (dl, dr) = (lambda.dim(), r.dim());
        let ds = dl * dr;
        let mut copro_lambda = Mat::zeros(ds, dl);
        for i in 0..dl {
            for (t, &c) in r.one().iter().enumerate() {
                copro_lambda[(i * dr + t, i)] = c;
            }
        }
        let mut copro_r = Mat::zeros(ds, dr);
        for j in 0..dr {
            for (t, &c) in lambda.one().iter().enumerate() {
                copro_r[(t * dr + j, j)] = c;
            }
        }
        let frob = Mat::identity(&field, dl).kron(&field, r.frob_matrix());
        Ok(TensorAlgebra(Arc::new(TensorInner {
            lambda,
            r,
            s,
            copro_lambda,
            copro_r,
            frob,
        })))
    }

    pub fn base(&self) -> &GaloisField {
        self.0.lambda.base()
    }

    pub fn lambda(&self) -> &FiniteAlgebra {
        &self.0.lambda
    }

    pub fn r(&self) -> &FiniteAlgebra {
        &self.0.r
    }

    pub fn s(&self) -> &FiniteAlgebra {
        &self.0.s
    }

    pub fn dim(&self) -> usize {
        self.0.s.dim()
    }

    pub fn copro_lambda(&self) -> &Mat {
        &self.0.copro_lambda
    }

    pub fn copro_r(&self) -> &Mat {
        &self.0.copro_r
    }

    pub fn frob_matrix(&self) -> &Mat {
        &self.0.frob
    }

    pub fn frob_vec(&self, x: &[Fq]) -> AlgVec {
        self.0.frob.apply(self.base(), x)
    }

    pub fn frob_vec_pow(&self, x: &[Fq], n: usize) -> AlgVec {
        let mut v = x.to_vec();
        for _ in 0..n {
            v = self.frob_vec(&v);
        }
        v
    }

    pub fn lambda_to_s(&self, x: &[Fq]) -> AlgVec {
        self.0.copro_lambda.apply(self.base(), x)
    }

    pub fn r_to_s(&self, x: &[Fq]) -> AlgVec {
        self.0.copro_r.apply(self.base(), x)
    }

    /// The image Λ⊗1 as a subspace of S.
    pub fn lambda_image(&self) -> Subspace {
        let field = self.base();
        let rows: Vec<Vec<Fq>> = (0..self.0.lambda.dim())
            .map(|i| self.0.copro_lambda.col(i))
            .collect();
        Subspace::from_spanning(field, &rows, self.dim())
    }

    /// λ⊗r as an element of S.
    pub fn pure_tensor(&self, lam: &[Fq], r: &[Fq]) -> AlgVec {
        let field = self.base();
        let dr = self.0.r.dim();
        let mut out = vec![field.zero(); self.dim()];
        for (i, &a) in lam.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in r.iter().enumerate() {
                out[i * dr + j] = field.mul(a, b);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::super::{base_field_algebra, extension_field_algebra, quotient_poly_algebra};
    use super::*;
    use crate::field::GaloisField;
    use crate::poly::Poly;

    fn dual_numbers(field: &GaloisField) -> FiniteAlgebra {
        let f = Poly::from_coeffs(field, vec![Fq(0), Fq(0), Fq(1)]);
        quotient_poly_algebra(field, &f, "x")
    }

    #[test]
    fn trivial_lambda_recovers_r() {
        let field = GaloisField::new(2, 1, None).unwrap();
        let lambda = base_field_algebra(&field);
        let r = dual_numbers(&field);
        let ts = TensorAlgebra::new(lambda, r).unwrap();
        assert_eq!(ts.dim(), 2);
        // F(x) = x^2 = 0
        let x = ts.r_to_s(&[Fq(0), Fq(1)]);
        assert_eq!(ts.frob_vec(&x), vec![Fq(0), Fq(0)]);
    }

    #[test]
    fn frobenius_is_a_ring_endomorphism_fixing_lambda() {
        let field = GaloisField::new(2, 1, None).unwrap();
        let lambda = dual_numbers(&field).relabel("F2[t]/(t^2)");
        let r = extension_field_algebra(&field, 2);
        let ts = TensorAlgebra::new(lambda.clone(), r.clone()).unwrap();
        assert_eq!(ts.dim(), 4);
        let s = ts.s();
        for i in 0..ts.dim() {
            for j in 0..ts.dim() {
                let x = s.basis_elem(i);
                let y = s.basis_elem(j);
                let lhs = ts.frob_vec(&s.mul_vec(&x, &y));
                let rhs = s.mul_vec(&ts.frob_vec(&x), &ts.frob_vec(&y));
                assert_eq!(lhs, rhs);
            }
        }
        for i in 0..lambda.dim() {
            let li = ts.lambda_to_s(&lambda.basis_elem(i));
            assert_eq!(ts.frob_vec(&li), li);
        }
        // F on 1⊗R is the q-power of R
        for j in 0..r.dim() {
            let rj = ts.r_to_s(&r.basis_elem(j));
            assert_eq!(ts.frob_vec(&rj), ts.r_to_s(&r.frob_vec(&r.basis_elem(j))));
        }
        // F(t⊗g) = t⊗g^2
        let t_gen = ts.pure_tensor(&lambda.basis_elem(1), &r.basis_elem(1));
        let expected = ts.pure_tensor(&lambda.basis_elem(1), &r.frob_vec(&r.basis_elem(1)));
        assert_eq!(ts.frob_vec(&t_gen), expected);
    }

    #[test]
    fn double_frobenius_is_q_squared_on_r_side() {
        let field = GaloisField::new(2, 1, None).unwrap();
        let lambda = base_field_algebra(&field);
        let r = extension_field_algebra(&field, 2);
        let ts = TensorAlgebra::new(lambda, r.clone()).unwrap();
        let f2 = ts.frob_matrix().matmul(&field, ts.frob_matrix());
        for j in 0..r.dim() {
            let rj = ts.r_to_s(&r.basis_elem(j));
            let lhs = f2.apply(&field, &rj);
            let rhs = ts.r_to_s(&r.frob_vec(&r.frob_vec(&r.basis_elem(j))));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn mismatched_base_fields_rejected() {
        let f2 = GaloisField::new(2, 1, None).unwrap();
        let f3 = GaloisField::new(3, 1, None).unwrap();
        let a = base_field_algebra(&f2);
        let b = base_field_algebra(&f3);
        assert!(matches!(TensorAlgebra::new(a, b), Err(Error::BaseFieldMismatch)));
    }
}
