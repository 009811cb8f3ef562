//! Exact dense linear algebra over 𝔽_q: row reduction, kernels, solves,
//! and the subspace/quotient bookkeeping the module layer is built on.
//!
//! Vectors are column vectors (`Vec<Fq>`); a matrix maps length-`cols`
//! vectors to length-`rows` vectors. Subspaces are stored as the rows of
//! a reduced row echelon matrix, which makes equality of subspaces a
//! bit-exact comparison.

use crate::field::{Fq, GaloisField};
use std::ops::{Index, IndexMut};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Fq>,
}

impl Index<(usize, usize)> for Mat {
    type Output = Fq;
    fn index(&self, (r, c): (usize, usize)) -> &Fq {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Fq {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![Fq::ZERO; rows * cols] }
    }

    pub fn identity(field: &GaloisField, n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Fq>>, cols: usize) -> Mat {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols);
            data.extend(row);
        }
        Mat { rows: r, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Fq) -> Mat {
        let mut m = Mat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Fq] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Fq> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn add(&self, field: &GaloisField, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| field.add(a, b))
            .collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, field: &GaloisField, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| field.sub(a, b))
            .collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, field: &GaloisField, c: Fq) -> Mat {
        let data = self.data.iter().map(|&a| field.mul(a, c)).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn matmul(&self, field: &GaloisField, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = field.mul(a, other[(k, j)]);
                    out[(i, j)] = field.add(out[(i, j)], prod);
                }
            }
        }
        out
    }

    pub fn apply(&self, field: &GaloisField, v: &[Fq]) -> Vec<Fq> {
        assert_eq!(self.cols, v.len(), "apply shape mismatch");
        let mut out = vec![field.zero(); self.rows];
        for (i, slot) in out.iter_mut().enumerate() {
            let row = self.row(i);
            let mut acc = field.zero();
            for (a, &x) in row.iter().zip(v) {
                if !a.is_zero() && !x.is_zero() {
                    acc = field.add(acc, field.mul(*a, x));
                }
            }
            *slot = acc;
        }
        out
    }

    pub fn kron(&self, field: &GaloisField, other: &Mat) -> Mat {
        let mut out = Mat::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] =
                            field.mul(a, other[(k, l)]);
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)]
            } else {
                other[(i, j - self.cols)]
            }
        })
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self, field: &GaloisField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pr = 0usize;
        for pc in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(sel) = (pr..self.rows).find(|&r| !self[(r, pc)].is_zero()) else {
                continue;
            };
            if sel != pr {
                for c in 0..self.cols {
                    let tmp = self[(pr, c)];
                    self[(pr, c)] = self[(sel, c)];
                    self[(sel, c)] = tmp;
                }
            }
            let inv = field.inv(self[(pr, pc)]).unwrap();
            if inv.0 != 1 {
                for c in pc..self.cols {
                    self[(pr, c)] = field.mul(self[(pr, c)], inv);
                }
            }
            for r in 0..self.rows {
                if r == pr {
                    continue;
                }
                let factor = self[(r, pc)];
                if factor.is_zero() {
                    continue;
                }
                for c in pc..self.cols {
                    let sub = field.mul(factor, self[(pr, c)]);
                    self[(r, c)] = field.sub(self[(r, c)], sub);
                }
            }
            pivots.push(pc);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self, field: &GaloisField) -> usize {
        let mut m = self.clone();
        m.rref(field).len()
    }

    /// Basis of the right null space; each returned vector v satisfies
    /// self · v = 0. Canonical (from the rref of self).
    pub fn kernel(&self, field: &GaloisField) -> Vec<Vec<Fq>> {
        let mut m = self.clone();
        let pivots = m.rref(field);
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for j in 0..self.cols {
            if pivot_set[j].is_some() {
                continue;
            }
            let mut v = vec![field.zero(); self.cols];
            v[j] = field.one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = field.neg(m[(r, j)]);
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of self · x = b, if any.
    pub fn solve(&self, field: &GaloisField, b: &[Fq]) -> Option<Vec<Fq>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Mat::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)]
            } else {
                b[i]
            }
        });
        let pivots = aug.rref(field);
        if pivots.last() == Some(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![field.zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug[(r, self.cols)];
        }
        Some(x)
    }

    pub fn inverse(&self, field: &GaloisField) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = self.hstack(&Mat::identity(field, n));
        let pivots = aug.rref(field);
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| i != c) {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| aug[(i, n + j)]))
    }

    pub fn is_invertible(&self, field: &GaloisField) -> bool {
        self.rows == self.cols && self.rank(field) == self.rows
    }
}

/// A subspace of 𝔽_q^n in canonical form: rows of an rref matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    basis: Mat,
    pivots: Vec<usize>,
    ambient: usize,
}

impl Subspace {
    pub fn from_spanning(field: &GaloisField, vectors: &[Vec<Fq>], ambient: usize) -> Subspace {
        let mut m = Mat::from_rows(vectors.to_vec(), ambient);
        let pivots = m.rref(field);
        let dim = pivots.len();
        let basis = Mat::from_fn(dim, ambient, |i, j| m[(i, j)]);
        Subspace { basis, pivots, ambient }
    }

    pub fn zero(ambient: usize) -> Subspace {
        Subspace { basis: Mat::zeros(0, ambient), pivots: Vec::new(), ambient }
    }

    pub fn full(field: &GaloisField, ambient: usize) -> Subspace {
        Subspace {
            basis: Mat::identity(field, ambient),
            pivots: (0..ambient).collect(),
            ambient,
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Fq> {
        self.basis.row(i).to_vec()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Reduce v by the basis rows; returns (coordinates, residue).
    /// v lies in the subspace iff the residue is zero.
    pub fn reduce(&self, field: &GaloisField, v: &[Fq]) -> (Vec<Fq>, Vec<Fq>) {
        assert_eq!(v.len(), self.ambient);
        let mut res = v.to_vec();
        let mut coords = vec![field.zero(); self.dim()];
        for (r, &pc) in self.pivots.iter().enumerate() {
            let c = res[pc];
            if c.is_zero() {
                continue;
            }
            coords[r] = c;
            for (j, slot) in res.iter_mut().enumerate() {
                let sub = field.mul(c, self.basis[(r, j)]);
                *slot = field.sub(*slot, sub);
            }
        }
        (coords, res)
    }

    pub fn contains(&self, field: &GaloisField, v: &[Fq]) -> bool {
        self.reduce(field, v).1.iter().all(|c| c.is_zero())
    }

    /// Coordinates of v in the canonical basis; None if v is outside.
    pub fn coords(&self, field: &GaloisField, v: &[Fq]) -> Option<Vec<Fq>> {
        let (coords, res) = self.reduce(field, v);
        res.iter().all(|c| c.is_zero()).then_some(coords)
    }

    pub fn sum(&self, field: &GaloisField, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let stacked = self.basis.vstack(&other.basis);
        let rows: Vec<Vec<Fq>> = (0..stacked.rows()).map(|i| stacked.row(i).to_vec()).collect();
        Subspace::from_spanning(field, &rows, self.ambient)
    }

    /// Grow in place by one vector; returns false if already contained.
    pub fn insert(&mut self, field: &GaloisField, v: &[Fq]) -> bool {
        if self.contains(field, v) {
            return false;
        }
        let mut rows: Vec<Vec<Fq>> = (0..self.basis.rows())
            .map(|i| self.basis.row(i).to_vec())
            .collect();
        rows.push(v.to_vec());
        *self = Subspace::from_spanning(field, &rows, self.ambient);
        true
    }
}

/// The quotient 𝔽_q^n / W with canonical coordinates: the standard basis
/// vectors at the non-pivot columns of W's rref descend to a basis.
#[derive(Debug, Clone)]
pub struct QuotientSpace {
    sub: Subspace,
    nonpivot: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(field: &GaloisField, vectors: &[Vec<Fq>], ambient: usize) -> QuotientSpace {
        let sub = Subspace::from_spanning(field, vectors, ambient);
        Self::from_subspace(sub)
    }

    pub fn from_subspace(sub: Subspace) -> QuotientSpace {
        let mut is_pivot = vec![false; sub.ambient];
        for &c in &sub.pivots {
            is_pivot[c] = true;
        }
        let nonpivot = (0..sub.ambient).filter(|&c| !is_pivot[c]).collect();
        QuotientSpace { sub, nonpivot }
    }

    pub fn dim(&self) -> usize {
        self.nonpivot.len()
    }

    pub fn ambient(&self) -> usize {
        self.sub.ambient
    }

    pub fn subspace(&self) -> &Subspace {
        &self.sub
    }

    /// Class of an ambient vector in quotient coordinates.
    pub fn project(&self, field: &GaloisField, v: &[Fq]) -> Vec<Fq> {
        let (_, res) = self.sub.reduce(field, v);
        self.nonpivot.iter().map(|&c| res[c]).collect()
    }

    /// The canonical representative of a quotient class.
    pub fn lift(&self, field: &GaloisField, coords: &[Fq]) -> Vec<Fq> {
        assert_eq!(coords.len(), self.dim());
        let mut v = vec![field.zero(); self.sub.ambient];
        for (&c, &x) in self.nonpivot.iter().zip(coords) {
            v[c] = x;
        }
        v
    }

    /// The matrix of an ambient endomorphism on the quotient, assuming
    /// it preserves the subspace.
    pub fn induced(&self, field: &GaloisField, a: &Mat) -> Mat {
        let q = self.dim();
        let mut out = Mat::zeros(q, q);
        for j in 0..q {
            let mut e = vec![field.zero(); q];
            e[j] = field.one();
            let img = a.apply(field, &self.lift(field, &e));
            let col = self.project(field, &img);
            for i in 0..q {
                out[(i, j)] = col[i];
            }
        }
        out
    }

    /// Matrix of the projection 𝔽_q^n → quotient coordinates.
    pub fn projection_matrix(&self, field: &GaloisField) -> Mat {
        let n = self.sub.ambient;
        let mut out = Mat::zeros(self.dim(), n);
        for j in 0..n {
            let mut e = vec![field.zero(); n];
            e[j] = field.one();
            let col = self.project(field, &e);
            for i in 0..self.dim() {
                out[(i, j)] = col[i];
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;
    use proptest::prelude::*;

    fn f4() -> GaloisField {
        GaloisField::new(2, 2, None).unwrap()
    }

    fn random_mat(field: &GaloisField, rng: &mut Rng, rows: usize, cols: usize) -> Mat {
        Mat::from_fn(rows, cols, |_, _| rng.element(field))
    }

    #[test]
    fn inverse_roundtrip() {
        let f = f4();
        let mut rng = Rng::from_seed(5);
        let mut found = 0;
        while found < 20 {
            let m = random_mat(&f, &mut rng, 5, 5);
            if let Some(inv) = m.inverse(&f) {
                assert_eq!(m.matmul(&f, &inv), Mat::identity(&f, 5));
                assert_eq!(inv.matmul(&f, &m), Mat::identity(&f, 5));
                found += 1;
            }
        }
    }

    #[test]
    fn kernel_vectors_are_killed() {
        let f = f4();
        let mut rng = Rng::from_seed(9);
        for _ in 0..50 {
            let m = random_mat(&f, &mut rng, 4, 7);
            let ker = m.kernel(&f);
            assert_eq!(ker.len(), 7 - m.rank(&f));
            for v in &ker {
                assert!(m.apply(&f, v).iter().all(|c| c.is_zero()));
            }
        }
    }

    #[test]
    fn solve_finds_solutions() {
        let f = f4();
        let mut rng = Rng::from_seed(11);
        for _ in 0..50 {
            let m = random_mat(&f, &mut rng, 5, 3);
            let x: Vec<Fq> = (0..3).map(|_| rng.element(&f)).collect();
            let b = m.apply(&f, &x);
            let sol = m.solve(&f, &b).expect("consistent system must solve");
            assert_eq!(m.apply(&f, &sol), b);
        }
    }

    #[test]
    fn quotient_dimensions_add_up() {
        let f = f4();
        let mut rng = Rng::from_seed(13);
        for _ in 0..30 {
            let gens: Vec<Vec<Fq>> = (0..3).map(|_| rng.vector(&f, 6)).collect();
            let q = QuotientSpace::new(&f, &gens, 6);
            assert_eq!(q.dim() + q.subspace().dim(), 6);
            // project∘lift = id on quotient coordinates
            for j in 0..q.dim() {
                let mut e = vec![f.zero(); q.dim()];
                e[j] = f.one();
                assert_eq!(q.project(&f, &q.lift(&f, &e)), e);
            }
        }
    }

    #[test]
    fn subspace_membership_and_coords() {
        let f = f4();
        let mut rng = Rng::from_seed(17);
        let gens: Vec<Vec<Fq>> = (0..3).map(|_| rng.vector(&f, 5)).collect();
        let sub = Subspace::from_spanning(&f, &gens, 5);
        for _ in 0..30 {
            // random combination of generators must be inside
            let mut v = vec![f.zero(); 5];
            for g in &gens {
                let c = rng.element(&f);
                for (vi, &gi) in v.iter_mut().zip(g) {
                    *vi = f.add(*vi, f.mul(c, gi));
                }
            }
            let coords = sub.coords(&f, &v).expect("combination must be inside");
            // rebuild from coords
            let mut w = vec![f.zero(); 5];
            for (i, &c) in coords.iter().enumerate() {
                for (wj, &bj) in w.iter_mut().zip(sub.basis().row(i)) {
                    *wj = f.add(*wj, f.mul(c, bj));
                }
            }
            assert_eq!(v, w);
        }
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(seed in 0u64..1000) {
            let f = f4();
            let mut rng = Rng::from_seed(seed);
            let rows = 1 + (seed % 5) as usize;
            let cols = 1 + (seed % 7) as usize;
            let mut m = random_mat(&f, &mut rng, rows, cols);
            m.rref(&f);
            let again = {
                let mut c = m.clone();
                c.rref(&f);
                c
            };
            prop_assert_eq!(m, again);
        }

        #[test]
        fn rank_bounded_by_shape(seed in 0u64..500) {
            let f = f4();
            let mut rng = Rng::from_seed(seed);
            let rows = 1 + (seed % 6) as usize;
            let cols = 1 + (seed % 4) as usize;
            let m = random_mat(&f, &mut rng, rows, cols);
            prop_assert!(m.rank(&f) <= rows.min(cols));
        }
    }
}
