//! Pullback along a morphism of base algebras: exact, faithful, and
//! conservative on unit modules (for connected source R and nonzero
//! target). Verified over supplied corpora by direct computation.

use super::VerifyReport;
use crate::algebra::{is_connected, AlgebraMap, TensorAlgebra};
use crate::error::{Error, Result};
use crate::field::Fq;
use crate::linalg::Subspace;
use crate::module::{BaseChange, ModuleMorphism, TauModule};
use serde_json::json;

/// (a) short exact sequences of unit modules stay exact, (b) a module
/// pulling back to zero is zero, (c) a morphism pulling back to zero is
/// zero — all over the supplied corpus.
pub fn check_pullback(
    ts: &TensorAlgebra,
    map: &AlgebraMap,
    modules: &[TauModule],
    morphisms: &[ModuleMorphism],
    seses: &[(ModuleMorphism, ModuleMorphism)],
) -> Result<VerifyReport> {
    if !is_connected(ts.r()) {
        return Err(Error::Hypothesis("pullback theorem requires connected R".into()));
    }
    let bc = BaseChange::on_r(ts, map)?;
    let mut failures = Vec::new();

    for (i, (incl, proj)) in seses.iter().enumerate() {
        let fi = bc.morphism(incl);
        let fp = bc.morphism(proj);
        let field = ts.base();
        let inj = fi.matrix().rank(field) == fi.source().dim();
        let surj = fp.matrix().rank(field) == fp.target().dim();
        let im_rows: Vec<Vec<Fq>> =
            (0..fi.matrix().cols()).map(|j| fi.matrix().col(j)).collect();
        let im = Subspace::from_spanning(field, &im_rows, fi.target().dim());
        let ker = Subspace::from_spanning(
            field,
            &fp.matrix().kernel(field),
            fp.source().dim(),
        );
        if !(inj && surj && im == ker) {
            failures.push(json!({ "kind": "exactness", "index": i }));
        }
    }
    for (i, m) in modules.iter().enumerate() {
        let moved = bc.module(m);
        if moved.dim() == 0 && m.dim() != 0 {
            failures.push(json!({
                "kind": "conservativity",
                "index": i,
                "module": m.label(),
            }));
        }
    }
    for (i, alpha) in morphisms.iter().enumerate() {
        let moved = bc.morphism(alpha);
        if moved.is_zero() && !alpha.is_zero() {
            failures.push(json!({ "kind": "faithfulness", "index": i }));
        }
    }
    if failures.is_empty() {
        Ok(VerifyReport::pass(format!(
            "pullback[{} → {}]",
            ts.r().label(),
            map.target().label()
        )))
    } else {
        Ok(VerifyReport::fail(
            format!("pullback[{} → {}]", ts.r().label(), map.target().label()),
            json!({ "failures": failures }),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::base_field_algebra;
    use crate::linalg::Mat;
    use crate::module::test_support::*;
    use crate::module::{cokernel, direct_sum, unit_object};

    #[test]
    fn identity_pullback_passes_everything() {
        let ts = dual_number_base();
        let one = unit_object(&ts);
        let sum = direct_sum(&one, &one);
        let (_, proj) = cokernel(&sum.inject_left);
        let rep = check_pullback(
            &ts,
            &AlgebraMap::identity(ts.r()),
            &[one.clone(), sum.module.clone()],
            &[sum.project_left.clone(), ModuleMorphism::identity(&one)],
            &[(sum.inject_left.clone(), proj)],
        )
        .unwrap();
        assert!(rep.verdict);
    }

    #[test]
    fn reduction_to_point_is_exact_faithful_conservative() {
        let ts = dual_number_base();
        let field = ts.base();
        let k = base_field_algebra(field);
        let red = AlgebraMap::new(
            ts.r().clone(),
            k,
            Mat::from_rows(vec![vec![Fq(1), Fq(0)]], 2),
        )
        .unwrap();
        let one = unit_object(&ts);
        let sum = direct_sum(&one, &one);
        let (_, proj) = cokernel(&sum.inject_left);
        let rep = check_pullback(
            &ts,
            &red,
            &[one.clone(), sum.module.clone()],
            std::slice::from_ref(&sum.project_left),
            &[(sum.inject_left.clone(), proj)],
        )
        .unwrap();
        assert!(rep.verdict, "witness {:?}", rep.witness);
    }
}
