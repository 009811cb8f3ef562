//! Presentations, Fitting ideals, and the invariant-ideal theorem:
//! every F-invariant ideal of S is extended from Λ, and Fitting ideals
//! of unit modules are extensions of their contractions.
//!
//! Run with: cargo run --example fitting_ideals

use taumod::algebra::{
    extension_field_algebra, ideal_contract, ideal_extend, is_f_invariant, quotient_poly_algebra,
    IdealSubspace, TensorAlgebra,
};
use taumod::field::{Fq, GaloisField};
use taumod::module::fitting_ideal;
use taumod::zoo;

fn main() {
    // Λ = F_2[t]/(t^2+t) ≅ F_2×F_2, R = F_4
    let f2 = GaloisField::new(2, 1, None).unwrap();
    let tsplit = taumod::poly::Poly::from_coeffs(&f2, vec![Fq(0), Fq(1), Fq(1)]);
    let lambda = quotient_poly_algebra(&f2, &tsplit, "t");
    let r = extension_field_algebra(&f2, 2);
    let ts = TensorAlgebra::new(lambda.clone(), r).unwrap();

    // M = e1·S^2 ⊕ e2·S: unit, projective, NOT free over S
    let m = zoo::idempotent_split_module(&ts, &[2, 1], 11).unwrap();
    println!("module of dim {} over S of dim {}", m.dim(), ts.dim());
    println!("generators in the canonical presentation: {}", m.presentation().generator_count());

    for n in 0..=3 {
        let fitt = fitting_ideal(&m, n);
        let contracted = ideal_contract(&ts, &fitt);
        let back = ideal_extend(&ts, &contracted);
        println!(
            "Fitt_{}: F_q-dim {} in S; contraction has dim {} in Λ; extension matches: {}",
            n,
            fitt.dim(),
            contracted.dim(),
            back == fitt
        );
    }

    // the invariant closed subscheme theorem on a principal ideal
    let t_elem = ts.lambda_to_s(&lambda.basis_elem(1));
    let ideal = IdealSubspace::principal(ts.s(), &t_elem);
    println!(
        "\n(t)·S: F-invariant = {}, equals extension of its contraction = {}",
        is_f_invariant(&ts, &ideal),
        ideal_extend(&ts, &ideal_contract(&ts, &ideal)) == ideal
    );
}
