//! Idempotent decomposition of a finite commutative algebra into local
//! factors, with per-factor maximal ideal, residue field, nilpotency
//! exponent, and the coefficient-field splitting s(c) = lift(c)^{q^N}.
//!
//! Idempotents are found inside the fixed-point subalgebra
//! B = ker(x ↦ x^q − x): B is spanned by the primitive idempotents, and
//! every element of B has a squarefree minimal polynomial split over
//! 𝔽_q, so Lagrange interpolation on the roots always refines a block
//! until it is one-dimensional. This avoids any dependence on lucky
//! basis choices.

use super::{AlgVec, FiniteAlgebra};
use crate::linalg::{Mat, Subspace};
use crate::poly;

#[derive(Debug, Clone)]
pub struct LocalFactor {
    /// The primitive idempotent cutting out this factor, in A-coordinates.
    pub idempotent: AlgVec,
    /// Columns embed factor coordinates into A.
    pub embed: Mat,
    /// Projection A → factor coordinates (x ↦ coordinates of e·x).
    pub project: Mat,
    /// The local algebra A_i = e·A on its canonical basis.
    pub algebra: FiniteAlgebra,
    /// Maximal ideal of A_i, in A_i coordinates.
    pub max_ideal: Subspace,
    /// Least e with 𝔪^e = 0 (e = 1 when the factor is a field).
    pub nilpotency: usize,
    /// Residue field k = A_i/𝔪 as an 𝔽_q-algebra on the coefficient-field basis.
    pub residue: FiniteAlgebra,
    /// Ring-homomorphic section k → A_i (the coefficient field).
    pub section: Mat,
    /// Quotient map A_i → k, satisfying residue_map ∘ section = id.
    pub residue_map: Mat,
    /// The exponent N with s(c) = lift(c)^{q^N}: least multiple of
    /// [k:𝔽_q] with q^N ≥ nilpotency.
    pub section_power: usize,
}

#[derive(Debug, Clone)]
pub struct LocalData {
    pub factors: Vec<LocalFactor>,
}

impl LocalData {
    pub fn is_connected(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn idempotents(&self) -> Vec<AlgVec> {
        self.factors.iter().map(|f| f.idempotent.clone()).collect()
    }
}

pub fn is_connected(a: &FiniteAlgebra) -> bool {
    // number of components = dim of the Frobenius fixed space
    let field = a.base();
    let fixed = a.frob_matrix().sub(field, &Mat::identity(field, a.dim()));
    fixed.kernel(field).len() == 1
}

/// Full local decomposition.
pub fn primitive_idempotents(a: &FiniteAlgebra) -> LocalData {
    let idempotents = find_primitive_idempotents(a);
    let factors = idempotents
        .into_iter()
        .map(|e| build_factor(a, e))
        .collect();
    LocalData { factors }
}

fn find_primitive_idempotents(a: &FiniteAlgebra) -> Vec<AlgVec> {
    let field = a.base();
    let d = a.dim();
    // Berlekamp subalgebra B = ker(frob - id)
    let fixed = a.frob_matrix().sub(field, &Mat::identity(field, d));
    let b_basis = fixed.kernel(field);
    let target = b_basis.len();

    let mut blocks: Vec<AlgVec> = vec![a.one()];
    while blocks.len() < target {
        let mut next: Vec<AlgVec> = Vec::new();
        let mut split_any = false;
        for e in &blocks {
            match split_block(a, e, &b_basis) {
                Some(parts) => {
                    split_any = true;
                    next.extend(parts);
                }
                None => next.push(e.clone()),
            }
        }
        assert!(split_any, "idempotent refinement stalled below the component count");
        blocks = next;
    }
    // canonical order: by coefficient codes
    blocks.sort();
    blocks
}

/// Try to split the idempotent e using elements of B. Returns None when
/// e·B is one-dimensional, i.e. e is primitive.
fn split_block(a: &FiniteAlgebra, e: &AlgVec, b_basis: &[AlgVec]) -> Option<Vec<AlgVec>> {
    let field = a.base();
    for z in b_basis {
        let w = a.mul_vec(e, z);
        let minp = a.minimal_poly(&w);
        let roots = poly::roots(field, &minp);
        if roots.len() < 2 {
            continue;
        }
        // Lagrange idempotents at the distinct roots, restricted to the block
        let mut parts = Vec::new();
        for &alpha in &roots {
            let mut num = crate::poly::Poly::one(field);
            let mut den = field.one();
            for &beta in &roots {
                if beta == alpha {
                    continue;
                }
                // num *= (x - beta), den *= (alpha - beta)
                let lin = crate::poly::Poly::from_coeffs(field, vec![field.neg(beta), field.one()]);
                num = num.mul(field, &lin);
                den = field.mul(den, field.sub(alpha, beta));
            }
            let scale = field.inv(den).unwrap();
            let lag = num.scale(field, scale);
            let part = a.mul_vec(e, &a.eval_poly(&lag, &w));
            if part.iter().any(|c| !c.is_zero()) {
                parts.push(part);
            }
        }
        if parts.len() >= 2 {
            return Some(parts);
        }
    }
    None
}

fn build_factor(a: &FiniteAlgebra, e: AlgVec) -> LocalFactor {
    let field = a.base().clone();
    let d = a.dim();
    // basis of e·A
    let gens: Vec<AlgVec> = (0..d)
        .map(|i| a.mul_vec(&e, &a.basis_elem(i)))
        .collect();
    let span = Subspace::from_spanning(&field, &gens, d);
    let di = span.dim();
    let embed = Mat::from_fn(d, di, |r, c| span.basis_vector(c)[r]);
    // projection: coordinates of e·x in the factor basis
    let mut project = Mat::zeros(di, d);
    for j in 0..d {
        let img = a.mul_vec(&e, &a.basis_elem(j));
        let coords = span.coords(&field, &img).expect("e*x lies in e*A");
        for i in 0..di {
            project[(i, j)] = coords[i];
        }
    }
    // structure constants of the factor on the span basis
    let mut mul = vec![field.zero(); di * di * di];
    for i in 0..di {
        let bi = span.basis_vector(i);
        for j in 0..di {
            let bj = span.basis_vector(j);
            let prod = a.mul_vec(&bi, &bj);
            let coords = span.coords(&field, &prod).expect("factor closed under product");
            for k in 0..di {
                mul[(i * di + j) * di + k] = coords[k];
            }
        }
    }
    let one_coords = span.coords(&field, &e).expect("idempotent lies in its own factor");
    let algebra = FiniteAlgebra::new_unchecked(
        field.clone(),
        di,
        mul,
        one_coords,
        format!("{}|e", a.label()),
    );
    debug_assert!(algebra.validate_axioms().is_ok());

    // maximal ideal = kernel of a high q-power (kills exactly the nilpotents)
    let q = field.order();
    let mut n0 = 0usize;
    let mut reach = 1u64;
    while reach < di as u64 {
        reach = reach.saturating_mul(q);
        n0 += 1;
    }
    let frob = algebra.frob_matrix().clone();
    let mut frob_n0 = Mat::identity(&field, di);
    for _ in 0..n0 {
        frob_n0 = frob.matmul(&field, &frob_n0);
    }
    let max_ideal = Subspace::from_spanning(&field, &frob_n0.kernel(&field), di);

    // nilpotency exponent: least E with m^E = 0
    let nilpotency = if max_ideal.dim() == 0 {
        1
    } else {
        let mut power = max_ideal.clone();
        let mut exp = 1;
        while power.dim() > 0 {
            let mut next_gens = Vec::new();
            for i in 0..power.dim() {
                for j in 0..max_ideal.dim() {
                    next_gens
                        .push(algebra.mul_vec(&power.basis_vector(i), &max_ideal.basis_vector(j)));
                }
            }
            power = Subspace::from_spanning(&field, &next_gens, di);
            exp += 1;
            assert!(exp <= di + 1, "maximal ideal fails to nilpotate");
        }
        exp
    };

    // residue degree and section power
    let res_deg = di - max_ideal.dim();
    let mut section_power = res_deg;
    while !pow_at_least(q, section_power, nilpotency as u64) {
        section_power += res_deg;
    }
    // coefficient field = image of x ↦ x^{q^N}
    let mut frob_n = Mat::identity(&field, di);
    for _ in 0..section_power {
        frob_n = frob.matmul(&field, &frob_n);
    }
    let img_rows: Vec<AlgVec> = (0..di).map(|j| frob_n.col(j)).collect();
    let coeff_field = Subspace::from_spanning(&field, &img_rows, di);
    assert_eq!(
        coeff_field.dim(),
        res_deg,
        "coefficient field dimension must equal the residue degree"
    );
    let section = Mat::from_fn(di, res_deg, |r, c| coeff_field.basis_vector(c)[r]);
    // residue map: coordinates along the decomposition A_i = C ⊕ m
    let mut decomp = Mat::zeros(di, di);
    for c in 0..res_deg {
        for r in 0..di {
            decomp[(r, c)] = coeff_field.basis_vector(c)[r];
        }
    }
    for c in 0..max_ideal.dim() {
        for r in 0..di {
            decomp[(r, res_deg + c)] = max_ideal.basis_vector(c)[r];
        }
    }
    let decomp_inv = decomp
        .inverse(&field)
        .expect("coefficient field and maximal ideal are complementary");
    let residue_map = Mat::from_fn(res_deg, di, |r, c| decomp_inv[(r, c)]);

    // residue field as an algebra on the coefficient-field basis
    let mut res_mul = vec![field.zero(); res_deg * res_deg * res_deg];
    for i in 0..res_deg {
        let bi = coeff_field.basis_vector(i);
        for j in 0..res_deg {
            let bj = coeff_field.basis_vector(j);
            let prod = algebra.mul_vec(&bi, &bj);
            let coords = coeff_field
                .coords(&field, &prod)
                .expect("coefficient field closed under product");
            for k in 0..res_deg {
                res_mul[(i * res_deg + j) * res_deg + k] = coords[k];
            }
        }
    }
    let res_one = coeff_field
        .coords(&field, &algebra.one())
        .expect("unit lies in the coefficient field");
    let residue = FiniteAlgebra::new_unchecked(
        field.clone(),
        res_deg,
        res_mul,
        res_one,
        format!("F{}", q.pow(res_deg as u32)),
    );
    debug_assert!(residue.is_field());

    LocalFactor {
        idempotent: e,
        embed,
        project,
        algebra,
        max_ideal,
        nilpotency,
        residue,
        section,
        residue_map,
        section_power,
    }
}

fn pow_at_least(q: u64, n: usize, bound: u64) -> bool {
    let mut acc: u64 = 1;
    for _ in 0..n {
        acc = acc.saturating_mul(q);
        if acc >= bound {
            return true;
        }
    }
    acc >= bound
}
