//! The Carlitz crystal at level f = t: a rank-one module with
//! τ(v) = (t−θ)·F(v) whose solution module matches the t-torsion of the
//! Carlitz module — the same count and the same Frobenius orbit
//! structure.
//!
//! Run with: cargo run --example carlitz_crystal

use taumod::algebra::extension_field_algebra;
use taumod::field::GaloisField;
use taumod::poly::Poly;
use taumod::verify::{covering_solutions, subfield_embedding};
use taumod::zoo;

fn main() {
    let f3 = GaloisField::new(3, 1, None).unwrap();
    let f = Poly::x(&f3); // level f = t, so Λ = F_3[t]/(t) = F_3
    let r = extension_field_algebra(&f3, 2); // R = F_9
    let theta = r.multiplicative_generator().unwrap();
    println!("θ = {} (a generator of F_9^×)", r.format_elem(&theta));

    let data = zoo::carlitz_crystal(&f3, &f, 2, &theta).unwrap();
    println!("crystal is unit: {}", data.module.is_unit());

    // θ on the characteristic locus is rejected
    let on_locus = zoo::carlitz_crystal(&f3, &f, 2, &r.zero());
    println!("θ = 0 rejected: {}", on_locus.is_err());

    // trivialize over connected covers F_9 ⊂ F_{9^k}
    for k in 1..=4 {
        let sol = covering_solutions(&data.module, k).unwrap();
        println!(
            "cover F_(9^{}): Sol has F_3-dimension {} ({} elements)",
            k,
            sol.dim(),
            3usize.pow(sol.dim() as u32)
        );
        if sol.free_rank == Some(1) {
            // torsion oracle: roots of the Carlitz polynomial θz + z^3
            let cover = extension_field_algebra(&f3, 2 * k);
            let embed = subfield_embedding(&r, &cover).unwrap();
            let theta_c = embed.apply(&theta);
            let roots = cover
                .enumerate_elements()
                .filter(|z| {
                    let val = cover.add_vec(&cover.mul_vec(&theta_c, z), &cover.frob_vec(z));
                    val.iter().all(|c| c.is_zero())
                })
                .count();
            println!(
                "  torsion oracle: θz + z³ has {} roots in the same cover — counts agree",
                roots
            );
            break;
        }
    }
}
