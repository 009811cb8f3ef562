//! Exact arithmetic in 𝔽_q and polynomial factorization.
//!
//! Run with: cargo run --example finite_fields

use taumod::field::{Fq, GaloisField};
use taumod::poly::{self, Poly};

fn main() {
    // F_4 with the canonical modulus u^2 + u + 1
    let f4 = GaloisField::new(2, 2, None).unwrap();
    let g = f4.generator();
    println!("F_4 modulus: {:?}", f4.modulus());
    println!("g^2       = {}", f4.format_elem(f4.mul(g, g)));
    println!("g^2 + g   = {}", f4.format_elem(f4.add(f4.mul(g, g), g)));

    // Frobenius: squaring permutes F_4 and fixes F_2
    for x in f4.elements() {
        println!(
            "frob_2({}) = {}",
            f4.format_elem(x),
            f4.format_elem(f4.frobenius_power(x, 2, 1))
        );
    }

    // factorization over F_4: x^5 + x^4 + x (contains repeated factors
    // and an extension-field-irreducible part)
    let f = Poly::from_coeffs(&f4, vec![Fq(0), Fq(1), Fq(0), Fq(0), Fq(1), Fq(1)]);
    let fac = poly::factor(&f4, &f, 42).unwrap();
    println!("\nfactoring {}:", f.format(&f4, "x"));
    for (p, m) in &fac.factors {
        println!("  ({})^{}", p.format(&f4, "x"), m);
    }
    assert_eq!(fac.product(&f4), f);
    println!("product reconstructs the input exactly");

    // deterministic irreducible search
    let h = poly::find_irreducible(&f4, 3);
    println!("\ncanonical irreducible of degree 3 over F_4: {}", h.format(&f4, "x"));
}
