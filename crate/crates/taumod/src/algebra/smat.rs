//! Matrices with entries in a finite-dimensional commutative algebra.
//!
//! Used for relation matrices of module presentations, the τ-matrix of
//! free modules, and minor/determinant computations over S (no division,
//! so determinants expand by cofactors — sizes here are tiny).

use super::{AlgVec, FiniteAlgebra};
use crate::linalg::Mat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SMat {
    rows: usize,
    cols: usize,
    data: Vec<AlgVec>,
}

impl SMat {
    pub fn zeros(alg: &FiniteAlgebra, rows: usize, cols: usize) -> SMat {
        SMat { rows, cols, data: vec![alg.zero(); rows * cols] }
    }

    pub fn identity(alg: &FiniteAlgebra, n: usize) -> SMat {
        let mut m = SMat::zeros(alg, n, n);
        for i in 0..n {
            m.set(i, i, alg.one());
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, data: Vec<AlgVec>) -> SMat {
        assert_eq!(data.len(), rows * cols);
        SMat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &AlgVec {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: AlgVec) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<AlgVec> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn map_entries(&self, f: impl Fn(&AlgVec) -> AlgVec) -> SMat {
        SMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn matmul(&self, alg: &FiniteAlgebra, other: &SMat) -> SMat {
        assert_eq!(self.cols, other.rows);
        let mut out = SMat::zeros(alg, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.iter().all(|c| c.is_zero()) {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = alg.mul_vec(a, other.at(k, j));
                    let cur = alg.add_vec(out.at(i, j), &prod);
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> SMat {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.at(r, c).clone());
            }
        }
        SMat { rows: self.cols, cols: self.rows, data }
    }

    pub fn kron(&self, alg: &FiniteAlgebra, other: &SMat) -> SMat {
        let mut out = SMat::zeros(alg, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let v = alg.mul_vec(self.at(i, j), other.at(k, l));
                        out.set(i * other.rows + k, j * other.cols + l, v);
                    }
                }
            }
        }
        out
    }

    /// The 𝔽_q-linearization: the matrix of v ↦ A·v as a map of
    /// 𝔽_q-spaces S^cols → S^rows, with slot i occupying coordinates
    /// [i·d, (i+1)·d).
    pub fn linearize(&self, alg: &FiniteAlgebra) -> Mat {
        let d = alg.dim();
        let mut out = Mat::zeros(self.rows * d, self.cols * d);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let block = alg.left_mul_matrix(self.at(i, j));
                for r in 0..d {
                    for c in 0..d {
                        out[(i * d + r, j * d + c)] = block[(r, c)];
                    }
                }
            }
        }
        out
    }

    /// Inverse over the algebra, via the 𝔽_q-linearization. Returns
    /// None when the matrix is not invertible over S.
    pub fn inverse(&self, alg: &FiniteAlgebra) -> Option<SMat> {
        assert_eq!(self.rows, self.cols);
        let d = alg.dim();
        let field = alg.base();
        let lin = self.linearize(alg);
        let inv = lin.inverse(field)?;
        let mut out = SMat::zeros(alg, self.rows, self.cols);
        for j in 0..self.cols {
            // solve A x = e_j (unit of S in slot j)
            let mut rhs = vec![field.zero(); self.rows * d];
            rhs[j * d..(j + 1) * d].copy_from_slice(&alg.one());
            let x = inv.apply(field, &rhs);
            for i in 0..self.rows {
                out.set(i, j, x[i * d..(i + 1) * d].to_vec());
            }
        }
        Some(out)
    }

    pub fn is_invertible(&self, alg: &FiniteAlgebra) -> bool {
        self.rows == self.cols && self.linearize(alg).is_invertible(alg.base())
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self, alg: &FiniteAlgebra) -> AlgVec {
        assert_eq!(self.rows, self.cols);
        match self.rows {
            0 => alg.one(),
            1 => self.at(0, 0).clone(),
            _ => {
                let mut acc = alg.zero();
                for j in 0..self.cols {
                    let a = self.at(0, j);
                    if a.iter().all(|c| c.is_zero()) {
                        continue;
                    }
                    let minor = self.strike(0, j);
                    let term = alg.mul_vec(a, &minor.det(alg));
                    if j % 2 == 0 {
                        acc = alg.add_vec(&acc, &term);
                    } else {
                        acc = alg.sub_vec(&acc, &term);
                    }
                }
                acc
            }
        }
    }

    fn strike(&self, row: usize, col: usize) -> SMat {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in 0..self.rows {
            if r == row {
                continue;
            }
            for c in 0..self.cols {
                if c == col {
                    continue;
                }
                data.push(self.at(r, c).clone());
            }
        }
        SMat { rows: self.rows - 1, cols: self.cols - 1, data }
    }

    /// All k×k minors (determinants of k×k submatrices).
    pub fn minors(&self, alg: &FiniteAlgebra, k: usize) -> Vec<AlgVec> {
        if k == 0 {
            return vec![alg.one()];
        }
        if k > self.rows || k > self.cols {
            return Vec::new();
        }
        let row_sets = combinations(self.rows, k);
        let col_sets = combinations(self.cols, k);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for rs in &row_sets {
            for cs in &col_sets {
                let mut data = Vec::with_capacity(k * k);
                for &r in rs {
                    for &c in cs {
                        data.push(self.at(r, c).clone());
                    }
                }
                let sub = SMat { rows: k, cols: k, data };
                out.push(sub.det(alg));
            }
        }
        out
    }

    pub fn format(&self, alg: &FiniteAlgebra) -> String {
        let mut lines = Vec::new();
        for r in 0..self.rows {
            let entries: Vec<String> =
                (0..self.cols).map(|c| alg.format_elem(self.at(r, c))).collect();
            lines.push(format!("[{}]", entries.join(", ")));
        }
        lines.join("\n")
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::super::{extension_field_algebra, quotient_poly_algebra};
    use super::*;
    use crate::field::{Fq, GaloisField};
    use crate::poly::Poly;

    #[test]
    fn det_of_diagonal_is_product() {
        let field = GaloisField::new(2, 1, None).unwrap();
        let a = extension_field_algebra(&field, 2);
        let y = a.basis_elem(1);
        let mut m = SMat::identity(&a, 3);
        m.set(1, 1, y.clone());
        let d = m.det(&a);
        assert_eq!(d, y);
    }

    #[test]
    fn inverse_over_dual_numbers() {
        let field = GaloisField::new(2, 1, None).unwrap();
        let f = Poly::from_coeffs(&field, vec![Fq(0), Fq(0), Fq(1)]);
        let r = quotient_poly_algebra(&field, &f, "x");
        // [[1+x, 0],[x, 1]] is invertible (unit diagonal)
        let one_px = r.add_vec(&r.one(), &r.basis_elem(1));
        let mut m = SMat::identity(&r, 2);
        m.set(0, 0, one_px);
        m.set(1, 0, r.basis_elem(1));
        let inv = m.inverse(&r).unwrap();
        assert_eq!(m.matmul(&r, &inv), SMat::identity(&r, 2));
        assert_eq!(inv.matmul(&r, &m), SMat::identity(&r, 2));
    }

    #[test]
    fn minors_count_and_content() {
        let field = GaloisField::new(2, 1, None).unwrap();
        let a = extension_field_algebra(&field, 2);
        let m = SMat::identity(&a, 3);
        let minors = m.minors(&a, 2);
        assert_eq!(minors.len(), 9);
        // exactly the three diagonal-aligned 2x2 minors are 1
        let ones = minors.iter().filter(|v| **v == a.one()).count();
        assert_eq!(ones, 3);
    }
}
