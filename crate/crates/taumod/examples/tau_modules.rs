//! τ-modules over S = Λ⊗R: the unit object, Artin–Schreier twists,
//! nilpotent modules, unit/nilpotent predicates, hom spaces, kernels
//! and cokernels.
//!
//! Run with: cargo run --example tau_modules

use taumod::algebra::{base_field_algebra, quotient_poly_algebra, TensorAlgebra};
use taumod::field::{Fq, GaloisField};
use taumod::module::{cokernel, direct_sum, hom_space, kernel, unit_object};
use taumod::poly::Poly;
use taumod::zoo;

fn main() {
    // Λ = F_2, R = F_2[x]/(x^2): the smallest singular base
    let f2 = GaloisField::new(2, 1, None).unwrap();
    let lambda = base_field_algebra(&f2);
    let x2 = Poly::from_coeffs(&f2, vec![Fq(0), Fq(0), Fq(1)]);
    let r = quotient_poly_algebra(&f2, &x2, "x");
    let ts = TensorAlgebra::new(lambda, r).unwrap();

    let one = unit_object(&ts);
    println!("unit object: dim {}, unit = {}", one.dim(), one.is_unit());

    // τ(v) = x·F(v) is nilpotent: x·x^2 = 0
    let nil = zoo::nilpotent_example(&ts).unwrap();
    println!(
        "nilpotent example: nilpotent = {}, unit = {}",
        nil.is_nilpotent(),
        nil.is_unit()
    );

    // τ(v) = (1+x)·F(v) is unit
    let u = ts.s().add_vec(&ts.s().one(), &ts.r_to_s(&[Fq(0), Fq(1)]));
    let m = zoo::artin_schreier(&ts, &u).unwrap();
    println!("AS(1+x): unit = {}", m.is_unit());

    // Hom(unit, nilpotent) vanishes; End(1) ≅ Λ
    println!("dim Hom(1, nilpotent) = {}", hom_space(&one, &nil).len());
    println!("dim End(1)            = {}", hom_space(&one, &one).len());

    // kernels and cokernels of unit-module morphisms stay unit
    let sum = direct_sum(&one, &m);
    let (ker, _) = kernel(&sum.project_left);
    let (coker, _) = cokernel(&sum.inject_left);
    println!(
        "kernel of projection: dim {}, unit = {}; cokernel of inclusion: dim {}, unit = {}",
        ker.dim(),
        ker.is_unit(),
        coker.dim(),
        coker.is_unit()
    );
}
