//! Tensor products, duals, and the rigidity identities: evaluation and
//! coevaluation are genuine τ-module morphisms and both triangle
//! composites are identity matrices, bit-exactly.
//!
//! Run with: cargo run --example rigid_duality

use taumod::algebra::{extension_field_algebra, quotient_poly_algebra, TensorAlgebra};
use taumod::field::{Fq, GaloisField};
use taumod::linalg::Mat;
use taumod::module::{dual, find_isomorphism, rigidity_identities, tensor, unit_object};
use taumod::zoo;

fn main() {
    // Λ = F_4 (a field), R = F_2[x]/(x^2) (singular)
    let f2 = GaloisField::new(2, 1, None).unwrap();
    let lambda = extension_field_algebra(&f2, 2);
    let x2 = taumod::poly::Poly::from_coeffs(&f2, vec![Fq(0), Fq(0), Fq(1)]);
    let r = quotient_poly_algebra(&f2, &x2, "x");
    let ts = TensorAlgebra::new(lambda, r).unwrap();

    let m = zoo::random_unit(&ts, 2, 31);
    println!("random free unit module of rank 2, dim {}", m.dim());

    let d = dual(&m).unwrap();
    println!("dual built; ev and coev validated as τ-module morphisms");

    let (c1, c2) = rigidity_identities(&m).unwrap();
    let field = ts.base();
    println!(
        "triangle (ev⊗id)∘assoc∘(id⊗coev) = id on M: {}",
        c1 == Mat::identity(field, m.dim())
    );
    println!(
        "triangle (id⊗ev)∘assoc⁻¹∘(coev⊗id) = id on M^∨: {}",
        c2 == Mat::identity(field, d.module.dim())
    );

    // double dual is isomorphic to the module
    let dd = dual(&d.module).unwrap();
    let iso = find_isomorphism(&m, &dd.module, 3).expect("M ≅ M^∨∨");
    println!("M ≅ M^∨∨ via an explicit isomorphism: {}", iso.is_isomorphism());

    // 1 ⊗ M ≅ M and ranks multiply
    let one = unit_object(&ts);
    let t = tensor(&one, &m);
    println!(
        "1⊗M has dim {} (= dim M); M⊗M has rank {}",
        t.module.dim(),
        tensor(&m, &m).module.free_form().unwrap().rank
    );
}
