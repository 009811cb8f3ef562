//! The solution functor ε: Artin–Schreier fixed points, Lang
//! trivialization, and characteristic polynomials of Frobenius.
//!
//! Run with: cargo run --example solution_spaces

use taumod::algebra::{base_field_algebra, TensorAlgebra};
use taumod::field::{Fq, GaloisField};
use taumod::verify::{galois_charpoly, solutions};
use taumod::zoo;

fn main() {
    // Λ = R = F_3: modules are F_3-spaces with a semilinear τ
    let f3 = GaloisField::new(3, 1, None).unwrap();
    let ts = TensorAlgebra::new(base_field_algebra(&f3), base_field_algebra(&f3)).unwrap();

    // AS(c): τ(v) = c·F(v); solutions over F_{3^n} are the Artin–Schreier
    // locus c·t^3 = t
    for c in 1..3u32 {
        let m = zoo::artin_schreier(&ts, &[Fq(c)]).unwrap();
        print!("AS({}): Sol dims over F_3, F_9, F_27, F_81:", c);
        for n in 1..=4 {
            print!(" {}", solutions(&m, n).dim());
        }
        let (cover, sol, cp) = galois_charpoly(&m).unwrap();
        println!(
            "  → trivializes at cover degree {} with |Sol| = {}, charpoly {}",
            cover,
            3usize.pow(sol.dim() as u32),
            cp.format(ts.lambda())
        );
    }

    // a rank-2 example: |Sol| = |Λ|^2 after trivialization
    let m = zoo::random_unit(&ts, 2, 99);
    let (cover, sol, cp) = galois_charpoly(&m).unwrap();
    println!(
        "\nrandom rank-2 unit module: trivializes at cover degree {}, Λ-rank {}, charpoly {}",
        cover,
        sol.free_rank.unwrap(),
        cp.format(ts.lambda())
    );

    // nilpotent modules have no solutions at any level
    let f2 = GaloisField::new(2, 1, None).unwrap();
    let x2 = taumod::poly::Poly::from_coeffs(&f2, vec![Fq(0), Fq(0), Fq(1)]);
    let r = taumod::algebra::quotient_poly_algebra(&f2, &x2, "x");
    let ts2 = TensorAlgebra::new(base_field_algebra(&f2), r).unwrap();
    let nil = zoo::nilpotent_example(&ts2).unwrap();
    println!(
        "\nnilpotent module: Sol dims over extensions 1..4 = {:?}",
        (1..=4).map(|n| solutions(&nil, n).dim()).collect::<Vec<_>>()
    );
}
