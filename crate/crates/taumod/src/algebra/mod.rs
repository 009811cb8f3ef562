//! Finite-dimensional commutative unital 𝔽_q-algebras presented by
//! structure constants, together with algebra homomorphisms, matrices
//! over an algebra, twisted tensor algebras S = Λ⊗R, ideals, and the
//! idempotent/local decomposition with coefficient-field splittings.

mod ideal;
mod local;
mod smat;
mod tensor;

pub use ideal::{ideal_contract, ideal_extend, is_f_invariant, IdealSubspace};
pub use local::{is_connected, primitive_idempotents, LocalData, LocalFactor};
pub use smat::SMat;
pub use tensor::TensorAlgebra;

use crate::error::{Error, Result};
use crate::field::{Fq, GaloisField};
use crate::linalg::Mat;
use crate::poly::{self, Poly};
use std::fmt;
use std::sync::{Arc, OnceLock};

/// An algebra element: its coefficient vector on the chosen basis.
pub type AlgVec = Vec<Fq>;

struct AlgebraInner {
    base: GaloisField,
    dim: usize,
    /// Structure constants: mul[(i·d + j)·d + k] is the e_k-coefficient
    /// of e_i · e_j.
    mul: Vec<Fq>,
    one: AlgVec,
    label: String,
    /// Left-multiplication matrix of each basis element.
    left_mul: Vec<Mat>,
    /// Matrix of x ↦ x^q (q = base field order); 𝔽_q-linear.
    frob: Mat,
    /// Cached idempotent/local decomposition.
    local: OnceLock<LocalData>,
}

#[derive(Clone)]
pub struct FiniteAlgebra(Arc<AlgebraInner>);

impl fmt::Debug for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteAlgebra({}, dim {})", self.0.label, self.0.dim)
    }
}

impl PartialEq for FiniteAlgebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.base == other.0.base
                && self.0.dim == other.0.dim
                && self.0.mul == other.0.mul
                && self.0.one == other.0.one)
    }
}
impl Eq for FiniteAlgebra {}

impl FiniteAlgebra {
    /// Validated construction from structure constants. Rejects
    /// non-commutative, non-associative or non-unital data, reporting
    /// the failing basis pair or triple.
    pub fn new(
        base: GaloisField,
        dim: usize,
        mul: Vec<Fq>,
        one: AlgVec,
        label: impl Into<String>,
    ) -> Result<FiniteAlgebra> {
        if dim == 0 {
            return Err(Error::ShapeMismatch("algebra dimension must be >= 1".into()));
        }
        if mul.len() != dim * dim * dim {
            return Err(Error::ShapeMismatch(format!(
                "structure tensor has {} entries, expected {}^3",
                mul.len(),
                dim
            )));
        }
        if one.len() != dim {
            return Err(Error::ShapeMismatch("unit vector length mismatch".into()));
        }
        let alg = Self::new_unchecked(base, dim, mul, one, label);
        alg.validate_axioms()?;
        Ok(alg)
    }

    /// Construction without the axiom scan, for products/quotients that
    /// are associative by construction. Callers own the invariant.
    pub fn new_unchecked(
        base: GaloisField,
        dim: usize,
        mul: Vec<Fq>,
        one: AlgVec,
        label: impl Into<String>,
    ) -> FiniteAlgebra {
        let mut left_mul = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut m = Mat::zeros(dim, dim);
            for j in 0..dim {
                for k in 0..dim {
                    m[(k, j)] = mul[(i * dim + j) * dim + k];
                }
            }
            left_mul.push(m);
        }
        let mut inner = AlgebraInner {
            base,
            dim,
            mul,
            one,
            label: label.into(),
            left_mul,
            frob: Mat::zeros(dim, dim),
            local: OnceLock::new(),
        };
        let mut frob = Mat::zeros(dim, dim);
        for j in 0..dim {
            let mut e = vec![inner.base.zero(); dim];
            e[j] = inner.base.one();
            let img = pow_vec_raw(&inner, &e, inner.base.order());
            for i in 0..dim {
                frob[(i, j)] = img[i];
            }
        }
        inner.frob = frob;
        FiniteAlgebra(Arc::new(inner))
    }

    pub fn validate_axioms(&self) -> Result<()> {
        let d = self.0.dim;
        for i in 0..d {
            for j in 0..d {
                if self.mul_entry(i, j) != self.mul_entry(j, i) {
                    return Err(Error::NotCommutative { i, j });
                }
            }
        }
        for i in 0..d {
            let prod = self.mul_vec(&self.0.one, &self.basis_elem(i));
            if prod != self.basis_elem(i) {
                return Err(Error::NotUnital { i });
            }
        }
        for i in 0..d {
            for j in 0..d {
                let eij = self.mul_entry(i, j).to_vec();
                for k in 0..d {
                    let lhs = self.mul_basis(&eij, k);
                    let jk = self.mul_entry(j, k).to_vec();
                    let rhs = self.mul_vec(&self.basis_elem(i), &jk);
                    if lhs != rhs {
                        return Err(Error::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &GaloisField {
        &self.0.base
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn relabel(&self, label: impl Into<String>) -> FiniteAlgebra {
        FiniteAlgebra::new_unchecked(
            self.0.base.clone(),
            self.0.dim,
            self.0.mul.clone(),
            self.0.one.clone(),
            label,
        )
    }

    pub fn one(&self) -> AlgVec {
        self.0.one.clone()
    }

    pub fn zero(&self) -> AlgVec {
        vec![self.0.base.zero(); self.0.dim]
    }

    pub fn basis_elem(&self, i: usize) -> AlgVec {
        let mut v = self.zero();
        v[i] = self.0.base.one();
        v
    }

    pub fn scalar(&self, c: Fq) -> AlgVec {
        let f = self.base();
        self.0.one.iter().map(|&u| f.mul(c, u)).collect()
    }

    pub fn structure_constants(&self) -> &[Fq] {
        &self.0.mul
    }

    /// e_i · e_j as a coefficient vector.
    pub fn mul_entry(&self, i: usize, j: usize) -> &[Fq] {
        let d = self.0.dim;
        &self.0.mul[(i * d + j) * d..(i * d + j) * d + d]
    }

    pub fn add_vec(&self, x: &[Fq], y: &[Fq]) -> AlgVec {
        let f = self.base();
        x.iter().zip(y).map(|(&a, &b)| f.add(a, b)).collect()
    }

    pub fn sub_vec(&self, x: &[Fq], y: &[Fq]) -> AlgVec {
        let f = self.base();
        x.iter().zip(y).map(|(&a, &b)| f.sub(a, b)).collect()
    }

    pub fn scale_vec(&self, c: Fq, x: &[Fq]) -> AlgVec {
        let f = self.base();
        x.iter().map(|&a| f.mul(c, a)).collect()
    }

    /// x · e_k.
    fn mul_basis(&self, x: &[Fq], k: usize) -> AlgVec {
        let f = self.base();
        let d = self.0.dim;
        let mut out = self.zero();
        for (m, &xm) in x.iter().enumerate() {
            if xm.is_zero() {
                continue;
            }
            let entry = self.mul_entry(m, k);
            for t in 0..d {
                out[t] = f.add(out[t], f.mul(xm, entry[t]));
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[Fq], y: &[Fq]) -> AlgVec {
        let f = self.base();
        let d = self.0.dim;
        debug_assert_eq!(x.len(), d);
        debug_assert_eq!(y.len(), d);
        let mut out = self.zero();
        for (i, &xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = f.mul(xi, yj);
                let entry = self.mul_entry(i, j);
                for t in 0..d {
                    out[t] = f.add(out[t], f.mul(c, entry[t]));
                }
            }
        }
        out
    }

    pub fn pow_vec(&self, x: &[Fq], e: u64) -> AlgVec {
        pow_vec_raw(&self.0, x, e)
    }

    /// Matrix of y ↦ x·y.
    pub fn left_mul_matrix(&self, x: &[Fq]) -> Mat {
        let f = self.base();
        let d = self.0.dim;
        let mut out = Mat::zeros(d, d);
        for (i, &xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            out = out.add(f, &self.0.left_mul[i].scale(f, xi));
        }
        out
    }

    pub fn left_mul_basis_matrix(&self, i: usize) -> &Mat {
        &self.0.left_mul[i]
    }

    pub fn is_invertible_vec(&self, x: &[Fq]) -> bool {
        self.left_mul_matrix(x).is_invertible(self.base())
    }

    pub fn inv_vec(&self, x: &[Fq]) -> Option<AlgVec> {
        let m = self.left_mul_matrix(x);
        let inv = m.inverse(self.base())?;
        Some(inv.apply(self.base(), &self.0.one))
    }

    /// Matrix of the q-power map x ↦ x^q.
    pub fn frob_matrix(&self) -> &Mat {
        &self.0.frob
    }

    /// Idempotent/local decomposition, computed once and cached.
    pub fn local_data(&self) -> &LocalData {
        self.0.local.get_or_init(|| local::primitive_idempotents(self))
    }

    pub fn frob_vec(&self, x: &[Fq]) -> AlgVec {
        self.0.frob.apply(self.base(), x)
    }

    /// Evaluate a polynomial over 𝔽_q at an algebra element.
    pub fn eval_poly(&self, f: &Poly, x: &[Fq]) -> AlgVec {
        let mut acc = self.zero();
        for &c in f.coeffs.iter().rev() {
            acc = self.mul_vec(&acc, x);
            acc = self.add_vec(&acc, &self.scalar(c));
        }
        acc
    }

    /// Monic minimal polynomial of an element over 𝔽_q.
    pub fn minimal_poly(&self, x: &[Fq]) -> Poly {
        let f = self.base();
        let d = self.0.dim;
        let mut powers: Vec<AlgVec> = vec![self.one()];
        loop {
            let k = powers.len();
            let next = self.mul_vec(powers.last().unwrap(), x);
            // is `next` a combination of the previous powers?
            let m = Mat::from_fn(d, k, |i, j| powers[j][i]);
            if let Some(sol) = m.solve(f, &next) {
                let mut coeffs: Vec<Fq> = sol.iter().map(|&c| f.neg(c)).collect();
                coeffs.push(f.one());
                return Poly::from_coeffs(f, coeffs);
            }
            powers.push(next);
            assert!(powers.len() <= d + 1, "minimal polynomial search overran dimension");
        }
    }

    /// All q^dim elements, in code order. Only sensible for tiny algebras.
    pub fn enumerate_elements(&self) -> impl Iterator<Item = AlgVec> + '_ {
        let q = self.base().order();
        let d = self.0.dim;
        let total = q.checked_pow(d as u32).expect("algebra too large to enumerate");
        (0..total).map(move |mut code| {
            let mut v = Vec::with_capacity(d);
            for _ in 0..d {
                v.push(Fq((code % q) as u32));
                code /= q;
            }
            v
        })
    }

    /// A field iff reduced (no nilpotents) and connected. Both read off
    /// the q-power matrix: nilpotents are ker(Q^N) for q^N ≥ dim, and
    /// the fixed space of Q has 𝔽_q-dimension = number of components.
    pub fn is_field(&self) -> bool {
        let f = self.base();
        let d = self.0.dim;
        let mut n_iter = 0u32;
        let mut bound = 1u64;
        while bound < d as u64 {
            bound = bound.saturating_mul(f.order());
            n_iter += 1;
        }
        let mut qn = Mat::identity(f, d);
        for _ in 0..n_iter {
            qn = self.0.frob.matmul(f, &qn);
        }
        if qn.rank(f) != d {
            return false;
        }
        let fixed = self.0.frob.sub(f, &Mat::identity(f, d));
        fixed.kernel(f).len() == 1
    }

    /// A generator of the multiplicative group, for fields: the
    /// code-smallest element of order q^dim − 1.
    pub fn multiplicative_generator(&self) -> Option<AlgVec> {
        if !self.is_field() {
            return None;
        }
        let order = self.base().order().pow(self.0.dim as u32) - 1;
        self.enumerate_elements().find(|x| {
            if x.iter().all(|c| c.is_zero()) {
                return false;
            }
            // x generates iff x^(order/l) != 1 for every prime l | order
            let mut n = order;
            let mut primes = Vec::new();
            let mut d = 2;
            while d * d <= n {
                if n.is_multiple_of(d) {
                    primes.push(d);
                    while n.is_multiple_of(d) {
                        n /= d;
                    }
                }
                d += 1;
            }
            if n > 1 {
                primes.push(n);
            }
            primes.iter().all(|&l| self.pow_vec(x, order / l) != self.one())
        })
    }

    pub fn format_elem(&self, x: &[Fq]) -> String {
        let f = self.base();
        if x.iter().all(|c| c.is_zero()) {
            return "0".into();
        }
        // scalar multiples of the unit print as field elements
        for c in 1..f.order() as u32 {
            if *x == self.scalar(Fq(c)) {
                return f.format_elem(Fq(c));
            }
        }
        let mut parts = Vec::new();
        for (i, &c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = f.format_elem(c);
            if cs == "1" {
                parts.push(format!("e{}", i));
            } else if cs.contains('+') {
                parts.push(format!("({})e{}", cs, i));
            } else {
                parts.push(format!("{}e{}", cs, i));
            }
        }
        parts.join(" + ")
    }
}

fn pow_vec_raw(inner: &AlgebraInner, x: &[Fq], mut e: u64) -> AlgVec {
    // local multiply to avoid needing the wrapper type
    let f = &inner.base;
    let d = inner.dim;
    let mul = |a: &[Fq], b: &[Fq]| -> AlgVec {
        let mut out = vec![f.zero(); d];
        for (i, &ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = f.mul(ai, bj);
                let entry = &inner.mul[(i * d + j) * d..(i * d + j) * d + d];
                for t in 0..d {
                    out[t] = f.add(out[t], f.mul(c, entry[t]));
                }
            }
        }
        out
    };
    let mut base = x.to_vec();
    let mut acc = inner.one.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        base = mul(&base, &base);
        e >>= 1;
    }
    acc
}

/// 𝔽_q itself as a 1-dimensional algebra.
pub fn base_field_algebra(field: &GaloisField) -> FiniteAlgebra {
    let label = format!("F{}", field.order());
    FiniteAlgebra::new_unchecked(field.clone(), 1, vec![field.one()], vec![field.one()], label)
}

/// 𝔽_q[x]/(f) on the basis 1, x, …, x^{deg−1}.
pub fn quotient_poly_algebra(field: &GaloisField, f: &Poly, var: &str) -> FiniteAlgebra {
    let d = f.degree().expect("modulus must be nonzero");
    assert!(d >= 1, "modulus must have positive degree");
    let f = f.monic(field);
    // x^k mod f for k up to 2d-2
    let mut powers: Vec<Poly> = Vec::with_capacity(2 * d - 1);
    let mut cur = Poly::one(field);
    for _ in 0..(2 * d - 1) {
        powers.push(cur.rem(field, &f));
        cur = cur.mul(field, &Poly::x(field));
    }
    let mut mul = vec![field.zero(); d * d * d];
    for i in 0..d {
        for j in 0..d {
            let prod = &powers[i + j];
            for (k, &c) in prod.coeffs.iter().enumerate() {
                mul[(i * d + j) * d + k] = c;
            }
        }
    }
    let mut one = vec![field.zero(); d];
    one[0] = field.one();
    let label = format!("F{}[{}]/({})", field.order(), var, f.format(field, var));
    FiniteAlgebra::new_unchecked(field.clone(), d, mul, one, label)
}

/// 𝔽_{q^n} as an n-dimensional 𝔽_q-algebra, with the canonical modulus.
pub fn extension_field_algebra(field: &GaloisField, n: usize) -> FiniteAlgebra {
    if n == 1 {
        return base_field_algebra(field);
    }
    let h = poly::find_irreducible(field, n);
    let alg = quotient_poly_algebra(field, &h, "y");
    let q = field.order();
    alg.relabel(format!("F{}", (q as u128).pow(n as u32)))
}

/// Product algebra A × B (componentwise operations).
pub fn product_algebra(a: &FiniteAlgebra, b: &FiniteAlgebra) -> FiniteAlgebra {
    assert_eq!(a.base(), b.base(), "product over mismatched base fields");
    let field = a.base().clone();
    let (da, db) = (a.dim(), b.dim());
    let d = da + db;
    let mut mul = vec![field.zero(); d * d * d];
    for i in 0..da {
        for j in 0..da {
            let entry = a.mul_entry(i, j);
            for k in 0..da {
                mul[(i * d + j) * d + k] = entry[k];
            }
        }
    }
    for i in 0..db {
        for j in 0..db {
            let entry = b.mul_entry(i, j);
            for k in 0..db {
                mul[((da + i) * d + (da + j)) * d + (da + k)] = entry[k];
            }
        }
    }
    let mut one = vec![field.zero(); d];
    one[..da].copy_from_slice(&a.one());
    one[da..].copy_from_slice(&b.one());
    let label = format!("{} x {}", a.label(), b.label());
    FiniteAlgebra::new_unchecked(field, d, mul, one, label)
}

/// Tensor product A ⊗_{𝔽_q} B on the basis e_i⊗f_j ↦ index i·dim(B)+j.
pub fn tensor_product_algebra(a: &FiniteAlgebra, b: &FiniteAlgebra) -> FiniteAlgebra {
    assert_eq!(a.base(), b.base(), "tensor over mismatched base fields");
    let field = a.base().clone();
    let (da, db) = (a.dim(), b.dim());
    let d = da * db;
    let mut mul = vec![field.zero(); d * d * d];
    for i in 0..da {
        for k in 0..da {
            let ea = a.mul_entry(i, k);
            for j in 0..db {
                for l in 0..db {
                    let eb = b.mul_entry(j, l);
                    let row = ((i * db + j) * d + (k * db + l)) * d;
                    for (s, &ca) in ea.iter().enumerate() {
                        if ca.is_zero() {
                            continue;
                        }
                        for (t, &cb) in eb.iter().enumerate() {
                            mul[row + s * db + t] = field.mul(ca, cb);
                        }
                    }
                }
            }
        }
    }
    let mut one = vec![field.zero(); d];
    for (s, &ca) in a.one().iter().enumerate() {
        for (t, &cb) in b.one().iter().enumerate() {
            one[s * db + t] = field.mul(ca, cb);
        }
    }
    let label = format!("{} (x) {}", a.label(), b.label());
    FiniteAlgebra::new_unchecked(field, d, mul, one, label)
}

/// 𝔽_q[x,y]/(x,y)²: the 3-dimensional local algebra with square-zero
/// maximal ideal of embedding dimension two.
pub fn square_zero_plane(field: &GaloisField) -> FiniteAlgebra {
    let d = 3;
    let mut mul = vec![field.zero(); d * d * d];
    // e0 = 1, e1 = x, e2 = y; 1 is the unit, all other products vanish
    for i in 0..d {
        mul[i * d + i] = field.one();
        mul[(i * d) * d + i] = field.one();
    }
    let mut one = vec![field.zero(); d];
    one[0] = field.one();
    let label = format!("F{}[x,y]/(x,y)^2", field.order());
    FiniteAlgebra::new_unchecked(field.clone(), d, mul, one, label)
}

/// A validated 𝔽_q-algebra homomorphism given by its matrix. Every such
/// map automatically commutes with q-power Frobenius.
#[derive(Debug, Clone)]
pub struct AlgebraMap {
    source: FiniteAlgebra,
    target: FiniteAlgebra,
    mat: Mat,
}

impl AlgebraMap {
    pub fn new(source: FiniteAlgebra, target: FiniteAlgebra, mat: Mat) -> Result<AlgebraMap> {
        if source.base() != target.base() {
            return Err(Error::BaseFieldMismatch);
        }
        if mat.rows() != target.dim() || mat.cols() != source.dim() {
            return Err(Error::ShapeMismatch(format!(
                "algebra map matrix is {}x{}, expected {}x{}",
                mat.rows(),
                mat.cols(),
                target.dim(),
                source.dim()
            )));
        }
        let f = source.base();
        if mat.apply(f, &source.one()) != target.one() {
            return Err(Error::NotRingHom("does not preserve the unit".into()));
        }
        for i in 0..source.dim() {
            let gi = mat.apply(f, &source.basis_elem(i));
            for j in 0..source.dim() {
                let gj = mat.apply(f, &source.basis_elem(j));
                let lhs = mat.apply(f, source.mul_entry(i, j));
                let rhs = target.mul_vec(&gi, &gj);
                if lhs != rhs {
                    return Err(Error::NotRingHom(format!(
                        "multiplicativity fails on basis pair (e{}, e{})",
                        i, j
                    )));
                }
            }
        }
        Ok(AlgebraMap { source, target, mat })
    }

    pub fn identity(a: &FiniteAlgebra) -> AlgebraMap {
        AlgebraMap {
            source: a.clone(),
            target: a.clone(),
            mat: Mat::identity(a.base(), a.dim()),
        }
    }

    pub fn source(&self) -> &FiniteAlgebra {
        &self.source
    }

    pub fn target(&self) -> &FiniteAlgebra {
        &self.target
    }

    pub fn matrix(&self) -> &Mat {
        &self.mat
    }

    pub fn apply(&self, x: &[Fq]) -> AlgVec {
        self.mat.apply(self.source.base(), x)
    }

    pub fn compose(&self, inner: &AlgebraMap) -> AlgebraMap {
        assert_eq!(inner.target, self.source, "composition type mismatch");
        AlgebraMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            mat: self.mat.matmul(self.source.base(), &inner.mat),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::GaloisField;

    fn f2() -> GaloisField {
        GaloisField::new(2, 1, None).unwrap()
    }

    #[test]
    fn dual_numbers_are_a_valid_algebra() {
        let field = f2();
        let f = Poly::from_coeffs(&field, vec![Fq(0), Fq(0), Fq(1)]); // x^2
        let a = quotient_poly_algebra(&field, &f, "x");
        assert_eq!(a.dim(), 2);
        a.validate_axioms().unwrap();
        // x * x = 0
        assert_eq!(a.mul_vec(&a.basis_elem(1), &a.basis_elem(1)), a.zero());
        assert!(!a.is_field());
    }

    #[test]
    fn product_algebra_is_valid_and_disconnected() {
        let field = f2();
        let a = base_field_algebra(&field);
        let p = product_algebra(&a, &a);
        p.validate_axioms().unwrap();
        assert!(!p.is_field());
        // the two idempotents multiply to zero
        assert_eq!(p.mul_vec(&p.basis_elem(0), &p.basis_elem(1)), p.zero());
    }

    #[test]
    fn perturbed_tensor_is_rejected_with_the_failing_triple() {
        let field = f2();
        let f = Poly::from_coeffs(&field, vec![Fq(0), Fq(0), Fq(0), Fq(1)]); // x^3
        let a = quotient_poly_algebra(&field, &f, "x");
        let mut mul = a.structure_constants().to_vec();
        // corrupt x * x^2 to equal 1 (kept symmetric): then
        // (x·x)·x^2 = x^2·x^2 = 0 but x·(x·x^2) = x·1 = x
        mul[(3 + 2) * 3] = field.one();
        mul[(2 * 3 + 1) * 3] = field.one();
        let res = FiniteAlgebra::new(field, 3, mul, a.one(), "broken");
        match res {
            Err(Error::NotAssociative { .. }) => {}
            other => panic!("expected an associativity failure, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn extension_field_is_a_field() {
        let field = f2();
        let f4 = extension_field_algebra(&field, 2);
        f4.validate_axioms().unwrap();
        assert!(f4.is_field());
        // generator satisfies y^2 = y + 1 under the canonical modulus
        let y = f4.basis_elem(1);
        let y2 = f4.mul_vec(&y, &y);
        assert_eq!(y2, f4.add_vec(&f4.one(), &y));
    }

    #[test]
    fn tensor_product_dims_multiply() {
        let field = f2();
        let f4 = extension_field_algebra(&field, 2);
        let r = quotient_poly_algebra(
            &field,
            &Poly::from_coeffs(&field, vec![Fq(0), Fq(0), Fq(1)]),
            "x",
        );
        let t = tensor_product_algebra(&f4, &r);
        assert_eq!(t.dim(), 4);
        t.validate_axioms().unwrap();
    }

    #[test]
    fn frobenius_matrix_is_multiplicative() {
        let field = GaloisField::new(3, 1, None).unwrap();
        let r = extension_field_algebra(&field, 2); // F_9 over F_3
        for i in 0..r.dim() {
            for j in 0..r.dim() {
                let x = r.basis_elem(i);
                let y = r.basis_elem(j);
                let lhs = r.frob_vec(&r.mul_vec(&x, &y));
                let rhs = r.mul_vec(&r.frob_vec(&x), &r.frob_vec(&y));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn minimal_poly_of_nilpotent() {
        let field = f2();
        let f = Poly::from_coeffs(&field, vec![Fq(0), Fq(0), Fq(1)]);
        let a = quotient_poly_algebra(&field, &f, "x");
        let mp = a.minimal_poly(&a.basis_elem(1));
        // x has minimal polynomial t^2
        assert_eq!(mp, Poly::from_coeffs(&field, vec![Fq(0), Fq(0), Fq(1)]));
    }

    #[test]
    fn inv_vec_finds_inverses() {
        let field = f2();
        let f4 = extension_field_algebra(&field, 2);
        let y = f4.basis_elem(1);
        let yi = f4.inv_vec(&y).unwrap();
        assert_eq!(f4.mul_vec(&y, &yi), f4.one());
        let r = square_zero_plane(&field);
        assert!(r.inv_vec(&r.basis_elem(1)).is_none());
    }

    #[test]
    fn algebra_map_validation() {
        let field = f2();
        let r = quotient_poly_algebra(
            &field,
            &Poly::from_coeffs(&field, vec![Fq(0), Fq(0), Fq(1)]),
            "x",
        );
        let k = base_field_algebra(&field);
        // residue map R -> F_2 (kill x)
        let m = Mat::from_rows(vec![vec![Fq(1), Fq(0)]], 2);
        AlgebraMap::new(r.clone(), k.clone(), m).unwrap();
        // x |-> 1 is not a ring map
        let bad = Mat::from_rows(vec![vec![Fq(1), Fq(1)]], 2);
        assert!(AlgebraMap::new(r, k, bad).is_err());
    }
}
