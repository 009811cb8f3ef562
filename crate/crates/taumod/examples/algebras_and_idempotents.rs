//! Finite-dimensional commutative algebras by structure constants:
//! idempotent decomposition, maximal ideals, residue fields, and the
//! coefficient-field splitting s(c) = lift(c)^{q^N}.
//!
//! Run with: cargo run --example algebras_and_idempotents

use taumod::algebra::{
    extension_field_algebra, primitive_idempotents, product_algebra, quotient_poly_algebra,
    tensor_product_algebra,
};
use taumod::field::{Fq, GaloisField};
use taumod::poly::Poly;

fn main() {
    let f2 = GaloisField::new(2, 1, None).unwrap();

    // F_4[x]/(x^3) over F_2: local with residue field F_4, m = (x), e = 3
    let f4 = extension_field_algebra(&f2, 2);
    let x3 = Poly::from_coeffs(&f2, vec![Fq(0), Fq(0), Fq(0), Fq(1)]);
    let rx = quotient_poly_algebra(&f2, &x3, "x");
    let a = tensor_product_algebra(&f4, &rx);
    println!("algebra {} of dimension {}", a.label(), a.dim());

    let locals = primitive_idempotents(&a);
    for (i, factor) in locals.factors.iter().enumerate() {
        println!(
            "factor {}: dim {}, maximal ideal dim {}, nilpotency e = {}, residue {} (dim {}), splitting power N = {} (s(c) = lift(c)^(q^N))",
            i,
            factor.algebra.dim(),
            factor.max_ideal.dim(),
            factor.nilpotency,
            factor.residue.label(),
            factor.residue.dim(),
            factor.section_power,
        );
    }

    // a split algebra decomposes into two factors
    let split = product_algebra(&f4, &quotient_poly_algebra(&f2, &x3, "y"));
    let locals = primitive_idempotents(&split);
    println!(
        "\n{} decomposes into {} local factors with idempotents:",
        split.label(),
        locals.factors.len()
    );
    for e in locals.idempotents() {
        println!("  {}", split.format_elem(&e));
    }
}
