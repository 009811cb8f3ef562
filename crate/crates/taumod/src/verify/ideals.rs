//! The invariant closed subscheme theorem at desk scale: over a
//! connected R, every F-invariant ideal of S = Λ⊗R is extended from Λ.

use super::{mat_json, VerifyReport};
use crate::algebra::{ideal_contract, ideal_extend, is_connected, is_f_invariant, IdealSubspace,
    TensorAlgebra};
use crate::error::{Error, Result};
use crate::field::{Fq, GaloisField};
use crate::linalg::{Mat, Subspace};
use serde_json::json;

/// If I is F-invariant, assert I = (I ∩ Λ)·S. Vacuously true when I is
/// not F-invariant. Errors when R is disconnected (hypothesis violated,
/// nothing asserted).
pub fn check_invariant_ideal(ts: &TensorAlgebra, ideal: &IdealSubspace) -> Result<VerifyReport> {
    if !is_connected(ts.r()) {
        return Err(Error::Hypothesis(
            "invariant-ideal theorem requires a connected R".into(),
        ));
    }
    if !is_f_invariant(ts, ideal) {
        return Ok(VerifyReport::pass("invariant-ideal[not F-invariant, vacuous]"));
    }
    let contracted = ideal_contract(ts, ideal);
    let extended = ideal_extend(ts, &contracted);
    if extended == *ideal {
        Ok(VerifyReport::pass(format!(
            "invariant-ideal[dim {} = extension of dim {}]",
            ideal.dim(),
            contracted.dim()
        )))
    } else {
        Ok(VerifyReport::fail(
            "invariant-ideal",
            json!({
                "ideal_basis": mat_json(ideal.space().basis()),
                "contraction_basis": mat_json(contracted.space().basis()),
                "extension_basis": mat_json(extended.space().basis()),
            }),
        ))
    }
}

/// Every subspace of 𝔽_q^n, enumerated through reduced row echelon
/// forms (pivot column set plus free entries). Exact and exhaustive;
/// use only for small n.
pub fn enumerate_subspaces(field: &GaloisField, n: usize) -> Vec<Subspace> {
    let q = field.order();
    let mut out = vec![Subspace::zero(n)];
    for mask in 1u32..(1 << n) {
        let pivots: Vec<usize> = (0..n).filter(|&c| mask & (1 << c) != 0).collect();
        let k = pivots.len();
        // free positions: (row r, col c) with c > pivots[r], c not a pivot
        let mut free_pos = Vec::new();
        for (r, &p) in pivots.iter().enumerate() {
            for c in (p + 1)..n {
                if !pivots.contains(&c) {
                    free_pos.push((r, c));
                }
            }
        }
        let total = (q as u128).pow(free_pos.len() as u32);
        for code in 0..total {
            let mut m = Mat::zeros(k, n);
            for (r, &p) in pivots.iter().enumerate() {
                m[(r, p)] = field.one();
            }
            let mut c = code;
            for &(r, col) in &free_pos {
                m[(r, col)] = Fq((c % q as u128) as u32);
                c /= q as u128;
            }
            let rows: Vec<Vec<Fq>> = (0..k).map(|i| m.row(i).to_vec()).collect();
            out.push(Subspace::from_spanning(field, &rows, n));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{base_field_algebra, quotient_poly_algebra};
    use crate::poly::Poly;

    #[test]
    fn subspace_counts_match_galois_numbers() {
        let f2 = GaloisField::new(2, 1, None).unwrap();
        // Galois numbers over F_2: n=2 → 5, n=3 → 16, n=4 → 67
        assert_eq!(enumerate_subspaces(&f2, 2).len(), 5);
        assert_eq!(enumerate_subspaces(&f2, 3).len(), 16);
        assert_eq!(enumerate_subspaces(&f2, 4).len(), 67);
        let f3 = GaloisField::new(3, 1, None).unwrap();
        assert_eq!(enumerate_subspaces(&f3, 2).len(), 6);
    }

    #[test]
    fn exhaustive_invariant_scan_dim_4() {
        // Λ = F_2[t]/(t²), R = F_2[x]/(x²): every F-invariant ideal of
        // the 4-dimensional S is extended from Λ
        let field = GaloisField::new(2, 1, None).unwrap();
        let f = Poly::from_coeffs(&field, vec![Fq(0), Fq(0), Fq(1)]);
        let lambda = quotient_poly_algebra(&field, &f, "t");
        let r = quotient_poly_algebra(&field, &f, "x");
        let ts = TensorAlgebra::new(lambda, r).unwrap();
        let mut invariant_count = 0;
        for sub in enumerate_subspaces(&field, ts.dim()) {
            let Ok(ideal) = IdealSubspace::from_subspace(ts.s(), sub) else {
                continue;
            };
            if is_f_invariant(&ts, &ideal) {
                invariant_count += 1;
            }
            let rep = check_invariant_ideal(&ts, &ideal).unwrap();
            assert!(rep.verdict, "failed on ideal of dim {}", ideal.dim());
        }
        // Λ = F_2[t]/(t²) has ideals 0, (t), Λ: the invariant ideals of S
        // are exactly their extensions
        assert_eq!(invariant_count, 3);
    }

    #[test]
    fn disconnected_r_is_a_hypothesis_violation() {
        let field = GaloisField::new(2, 1, None).unwrap();
        let a = base_field_algebra(&field);
        let r = crate::algebra::product_algebra(&a, &a);
        let ts = TensorAlgebra::new(a, r).unwrap();
        let zero = IdealSubspace::zero(ts.s());
        assert!(matches!(
            check_invariant_ideal(&ts, &zero),
            Err(Error::Hypothesis(_))
        ));
    }
}
