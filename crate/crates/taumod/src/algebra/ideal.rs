//! Ideals of a finite algebra as canonical subspaces, plus the
//! contraction/extension calculus along Λ → S = Λ⊗R and the
//! F-invariance predicate.

use super::{AlgVec, FiniteAlgebra, TensorAlgebra};
use crate::error::{Error, Result};
use crate::field::Fq;
use crate::linalg::Subspace;

/// An ideal stored as its row-reduced 𝔽_q-basis, so ideal equality is a
/// bit-exact comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSubspace {
    parent: FiniteAlgebra,
    space: Subspace,
}

impl IdealSubspace {
    /// The ideal generated by the given elements.
    pub fn from_generators(parent: &FiniteAlgebra, gens: &[AlgVec]) -> IdealSubspace {
        let field = parent.base();
        let mut space = Subspace::from_spanning(field, gens, parent.dim());
        // close under multiplication by basis elements
        loop {
            let mut grew = false;
            let current: Vec<AlgVec> =
                (0..space.dim()).map(|i| space.basis_vector(i)).collect();
            for v in &current {
                for i in 0..parent.dim() {
                    let w = parent.left_mul_basis_matrix(i).apply(field, v);
                    grew |= space.insert(field, &w);
                }
            }
            if !grew {
                return IdealSubspace { parent: parent.clone(), space };
            }
        }
    }

    /// Wrap an existing subspace, verifying closure under multiplication.
    pub fn from_subspace(parent: &FiniteAlgebra, space: Subspace) -> Result<IdealSubspace> {
        let field = parent.base();
        if space.ambient() != parent.dim() {
            return Err(Error::ShapeMismatch("ideal ambient dimension mismatch".into()));
        }
        for b in 0..space.dim() {
            let v = space.basis_vector(b);
            for i in 0..parent.dim() {
                let w = parent.left_mul_basis_matrix(i).apply(field, &v);
                if !space.contains(field, &w) {
                    return Err(Error::NotAnIdeal(format!(
                        "basis vector {} times e{} leaves the subspace",
                        b, i
                    )));
                }
            }
        }
        Ok(IdealSubspace { parent: parent.clone(), space })
    }

    pub fn zero(parent: &FiniteAlgebra) -> IdealSubspace {
        IdealSubspace { parent: parent.clone(), space: Subspace::zero(parent.dim()) }
    }

    pub fn unit(parent: &FiniteAlgebra) -> IdealSubspace {
        IdealSubspace {
            parent: parent.clone(),
            space: Subspace::full(parent.base(), parent.dim()),
        }
    }

    pub fn principal(parent: &FiniteAlgebra, x: &[Fq]) -> IdealSubspace {
        IdealSubspace::from_generators(parent, &[x.to_vec()])
    }

    pub fn parent(&self) -> &FiniteAlgebra {
        &self.parent
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.dim() == 0
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.space.is_full()
    }

    pub fn contains(&self, x: &[Fq]) -> bool {
        self.space.contains(self.parent.base(), x)
    }

    pub fn basis_vectors(&self) -> Vec<AlgVec> {
        (0..self.space.dim()).map(|i| self.space.basis_vector(i)).collect()
    }
}

/// {λ ∈ Λ : λ⊗1 ∈ I}, an ideal of Λ.
pub fn ideal_contract(ts: &TensorAlgebra, ideal: &IdealSubspace) -> IdealSubspace {
    assert_eq!(ideal.parent(), ts.s(), "contraction expects an ideal of S");
    let field = ts.base();
    let lambda = ts.lambda();
    let mut gens = Vec::new();
    // λ with copro(λ) ∈ I: kernel of Λ → S/I
    let quot = crate::linalg::QuotientSpace::from_subspace(ideal.space().clone());
    let dl = lambda.dim();
    let mut m = crate::linalg::Mat::zeros(quot.dim(), dl);
    for j in 0..dl {
        let img = ts.lambda_to_s(&lambda.basis_elem(j));
        let cls = quot.project(field, &img);
        for i in 0..quot.dim() {
            m[(i, j)] = cls[i];
        }
    }
    for v in m.kernel(field) {
        gens.push(v);
    }
    IdealSubspace::from_generators(lambda, &gens)
}

/// J·S for an ideal J of Λ.
pub fn ideal_extend(ts: &TensorAlgebra, ideal: &IdealSubspace) -> IdealSubspace {
    assert_eq!(ideal.parent(), ts.lambda(), "extension expects an ideal of Λ");
    let gens: Vec<AlgVec> = ideal
        .basis_vectors()
        .iter()
        .map(|j| ts.lambda_to_s(j))
        .collect();
    IdealSubspace::from_generators(ts.s(), &gens)
}

/// True iff the ideal generated by F(I) equals I.
pub fn is_f_invariant(ts: &TensorAlgebra, ideal: &IdealSubspace) -> bool {
    assert_eq!(ideal.parent(), ts.s());
    let gens: Vec<AlgVec> = ideal.basis_vectors().iter().map(|v| ts.frob_vec(v)).collect();
    let image = IdealSubspace::from_generators(ts.s(), &gens);
    image == *ideal
}

#[cfg(test)]
mod tests {
    use super::super::{base_field_algebra, quotient_poly_algebra};
    use super::*;
    use crate::field::GaloisField;
    use crate::poly::Poly;

    fn setup() -> (TensorAlgebra, AlgVec) {
        // Λ = F_2[t]/(t^2), R = F_2[x]/(x^2)
        let field = GaloisField::new(2, 1, None).unwrap();
        let f = Poly::from_coeffs(&field, vec![Fq(0), Fq(0), Fq(1)]);
        let lambda = quotient_poly_algebra(&field, &f, "t");
        let r = quotient_poly_algebra(&field, &f, "x");
        let ts = TensorAlgebra::new(lambda.clone(), r).unwrap();
        let t_in_s = ts.lambda_to_s(&lambda.basis_elem(1));
        (ts, t_in_s)
    }

    #[test]
    fn contract_zero_and_unit() {
        let (ts, _) = setup();
        assert!(ideal_contract(&ts, &IdealSubspace::zero(ts.s())).is_zero());
        assert!(ideal_contract(&ts, &IdealSubspace::unit(ts.s())).is_unit_ideal());
    }

    #[test]
    fn contract_of_extended_principal_ideal() {
        let (ts, t) = setup();
        let i = IdealSubspace::principal(ts.s(), &t);
        let contracted = ideal_contract(&ts, &i);
        // (t)·S ∩ Λ = (t)
        let t_lambda = ts.lambda().basis_elem(1);
        let expected = IdealSubspace::principal(ts.lambda(), &t_lambda);
        assert_eq!(contracted, expected);
        // extended ideals are stable under extend∘contract
        assert_eq!(ideal_extend(&ts, &contracted), i);
    }

    #[test]
    fn extension_dimension_for_free_case() {
        let (ts, _) = setup();
        let t_lambda = ts.lambda().basis_elem(1);
        let j = IdealSubspace::principal(ts.lambda(), &t_lambda);
        let e = ideal_extend(&ts, &j);
        assert_eq!(e.dim(), j.dim() * ts.r().dim());
    }

    #[test]
    fn square_zero_ideal_is_not_f_invariant() {
        // S = F_2[x]/(x^2) with Λ = F_2: F(x) = 0 generates 0 ≠ (x)
        let field = GaloisField::new(2, 1, None).unwrap();
        let lambda = base_field_algebra(&field);
        let f = Poly::from_coeffs(&field, vec![Fq(0), Fq(0), Fq(1)]);
        let r = quotient_poly_algebra(&field, &f, "x");
        let ts = TensorAlgebra::new(lambda, r).unwrap();
        let x = ts.r_to_s(&[Fq(0), Fq(1)]);
        let i = IdealSubspace::principal(ts.s(), &x);
        assert!(!is_f_invariant(&ts, &i));
    }

    #[test]
    fn lambda_side_ideals_are_f_invariant() {
        let (ts, t) = setup();
        let i = IdealSubspace::principal(ts.s(), &t);
        assert!(is_f_invariant(&ts, &i));
    }

    #[test]
    fn non_ideal_subspace_rejected() {
        let (ts, _) = setup();
        // span{1} is not an ideal of S
        let space = crate::linalg::Subspace::from_spanning(
            ts.base(),
            &[ts.s().one()],
            ts.dim(),
        );
        assert!(IdealSubspace::from_subspace(ts.s(), space).is_err());
    }
}
