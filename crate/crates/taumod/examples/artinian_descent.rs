//! Artinian descent: over a local artinian R, every finitely presented
//! unit module is the base change of its residue reduction along the
//! coefficient-field splitting, with an explicit isomorphism.
//!
//! Run with: cargo run --example artinian_descent

use taumod::algebra::{base_field_algebra, quotient_poly_algebra, TensorAlgebra};
use taumod::field::{Fq, GaloisField};
use taumod::module::{unit_object, ModuleMorphism};
use taumod::verify::artinian_descend;
use taumod::zoo;

fn main() {
    // Λ = F_2, R = F_2[x]/(x^2); M = R with τ(v) = (1+x)·F(v)
    let f2 = GaloisField::new(2, 1, None).unwrap();
    let lambda = base_field_algebra(&f2);
    let x2 = taumod::poly::Poly::from_coeffs(&f2, vec![Fq(0), Fq(0), Fq(1)]);
    let r = quotient_poly_algebra(&f2, &x2, "x");
    let ts = TensorAlgebra::new(lambda, r).unwrap();

    let one_plus_x = ts.s().add_vec(&ts.s().one(), &ts.r_to_s(&[Fq(0), Fq(1)]));
    let m = zoo::artin_schreier(&ts, &one_plus_x).unwrap();
    println!("M = AS(1+x) over F_2[x]/(x^2): unit = {}", m.is_unit());

    let descent = artinian_descend(&m, 17).unwrap();
    println!(
        "reduction M/mM has dim {} over Λ⊗k; descent isomorphism verified: {}",
        descent.reduced.dim(),
        descent.iso.is_isomorphism()
    );
    println!(
        "presentation route: F^{}(A) has entries in Λ⊗s(k), {} relation columns",
        descent.reduced_presentation.0,
        descent.reduced_presentation.1.cols()
    );

    // the classical witness: u = 1+x satisfies u·(1+x) = 1 = F(u), so
    // multiplication by u is an isomorphism M → 1
    let u_mat = ts.s().left_mul_matrix(&one_plus_x);
    let witness = ModuleMorphism::new(m.clone(), unit_object(&ts), u_mat).unwrap();
    println!("explicit witness u = 1+x gives M ≅ 1: {}", witness.is_isomorphism());

    // a random rank-2 unit module descends too
    let m2 = zoo::random_unit(&ts, 2, 5);
    let d2 = artinian_descend(&m2, 23).unwrap();
    println!(
        "random rank-2 unit module: dim {} descends to dim {}, isomorphism verified: {}",
        m2.dim(),
        d2.reduced.dim(),
        d2.iso.is_isomorphism()
    );
}
