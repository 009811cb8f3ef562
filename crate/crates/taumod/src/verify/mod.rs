//! Theorem-level verifiers: each structure theorem of the unit-module
//! category as an executable check producing a [`VerifyReport`], plus
//! the seeded corpus suites that drive them at scale.

mod descent;
mod flatness;
mod ideals;
mod pullback;
mod solutions;
pub mod suites;
mod tannakian;

pub use descent::{artinian_descend, Descent};
pub use flatness::{check_flat, check_projective_over_s};
pub use ideals::{check_invariant_ideal, enumerate_subspaces};
pub use pullback::check_pullback;
pub use solutions::{
    covering_solutions, galois_charpoly, solution_map, solutions, subfield_embedding, CharPoly,
    SolutionSpace,
};
pub use tannakian::{check_fiber_functor, end_of_unit, section_to_base, EndOfUnit, FiberPoint};

use serde::Serialize;

/// Outcome of one verification. A false verdict always carries a
/// serializable witness reproducing the failure.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub check: String,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
    /// Wall time; carried for diagnostics, excluded from deterministic
    /// output channels.
    #[serde(skip)]
    pub millis: u128,
}

impl VerifyReport {
    pub fn pass(check: impl Into<String>) -> VerifyReport {
        VerifyReport { check: check.into(), verdict: true, witness: None, millis: 0 }
    }

    pub fn fail(check: impl Into<String>, witness: serde_json::Value) -> VerifyReport {
        VerifyReport { check: check.into(), verdict: false, witness: Some(witness), millis: 0 }
    }

    pub fn with_millis(mut self, millis: u128) -> VerifyReport {
        self.millis = millis;
        self
    }
}

/// Render a matrix as nested code lists for witnesses.
pub(crate) fn mat_json(m: &crate::linalg::Mat) -> serde_json::Value {
    let rows: Vec<Vec<u32>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|c| c.0).collect())
        .collect();
    serde_json::json!(rows)
}
