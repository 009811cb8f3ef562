//! Frobenius pullback is not exact over a singular base: the short
//! exact sequence 0 → 𝔪 → R → k → 0 acquires a kernel after F*.
//!
//! Run with: cargo run --example kunz_nonexact

use taumod::algebra::{extension_field_algebra, quotient_poly_algebra, square_zero_plane};
use taumod::field::{Fq, GaloisField};
use taumod::poly::Poly;
use taumod::zoo::frobenius_nonexact_demo;

fn main() {
    let f2 = GaloisField::new(2, 1, None).unwrap();
    let x2 = Poly::from_coeffs(&f2, vec![Fq(0), Fq(0), Fq(1)]);

    for r in [
        quotient_poly_algebra(&f2, &x2, "x"), // F_2[x]/(x^2)
        square_zero_plane(&f2),               // F_2[x,y]/(x,y)^2
        extension_field_algebra(&f2, 2),      // F_4: regular, vacuous
    ] {
        let rep = frobenius_nonexact_demo(&r).unwrap();
        println!("{}", rep.check);
    }
}
