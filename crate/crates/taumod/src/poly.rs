//! Univariate polynomials over 𝔽_q: exact arithmetic, irreducibility,
//! and full factorization (squarefree decomposition, distinct-degree
//! splitting, seeded Cantor–Zassenhaus equal-degree splitting).

use crate::error::{Error, Result};
use crate::field::{Fq, GaloisField};
use crate::rng::Rng;

/// Coefficients low-to-high with no trailing zeros; zero is the empty list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Poly {
    pub coeffs: Vec<Fq>,
}

impl Poly {
    pub fn from_coeffs(_field: &GaloisField, mut coeffs: Vec<Fq>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one(field: &GaloisField) -> Poly {
        Poly { coeffs: vec![field.one()] }
    }

    pub fn constant(field: &GaloisField, c: Fq) -> Poly {
        Poly::from_coeffs(field, vec![c])
    }

    /// The monomial x.
    pub fn x(field: &GaloisField) -> Poly {
        Poly { coeffs: vec![field.zero(), field.one()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].0 == 1
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Fq {
        *self.coeffs.last().expect("lead of zero polynomial")
    }

    pub fn add(&self, field: &GaloisField, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![field.zero(); n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i] = c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            out[i] = field.add(out[i], c);
        }
        Poly::from_coeffs(field, out)
    }

    pub fn neg(&self, field: &GaloisField) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|&c| field.neg(c)).collect() }
    }

    pub fn sub(&self, field: &GaloisField, other: &Poly) -> Poly {
        self.add(field, &other.neg(field))
    }

    pub fn mul(&self, field: &GaloisField, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        Poly::from_coeffs(field, out)
    }

    pub fn scale(&self, field: &GaloisField, c: Fq) -> Poly {
        Poly::from_coeffs(field, self.coeffs.iter().map(|&a| field.mul(a, c)).collect())
    }

    pub fn monic(&self, field: &GaloisField) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let li = field.inv(self.lead()).unwrap();
        self.scale(field, li)
    }

    pub fn divmod(&self, field: &GaloisField, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.coeffs.len() < divisor.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let dl = field.inv(divisor.lead()).unwrap();
        let mut rem = self.coeffs.clone();
        let dd = divisor.coeffs.len() - 1;
        let mut quot = vec![field.zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = field.mul(rem[k], dl);
            if c.is_zero() {
                continue;
            }
            quot[k - dd] = c;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + i] = field.sub(rem[k - dd + i], field.mul(c, d));
            }
        }
        (Poly::from_coeffs(field, quot), Poly::from_coeffs(field, rem))
    }

    pub fn rem(&self, field: &GaloisField, divisor: &Poly) -> Poly {
        self.divmod(field, divisor).1
    }

    pub fn gcd(&self, field: &GaloisField, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(field, &b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic(field)
        }
    }

    pub fn derivative(&self, field: &GaloisField) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| {
                let scalar = field.from_int(i as u64);
                field.mul(c, scalar)
            })
            .collect();
        Poly::from_coeffs(field, coeffs)
    }

    pub fn eval(&self, field: &GaloisField, x: Fq) -> Fq {
        let mut acc = field.zero();
        for &c in self.coeffs.iter().rev() {
            acc = field.add(field.mul(acc, x), c);
        }
        acc
    }

    pub fn pow_mod(&self, field: &GaloisField, mut e: u128, modulus: &Poly) -> Poly {
        let mut base = self.rem(field, modulus);
        let mut acc = Poly::one(field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(field, &base).rem(field, modulus);
            }
            base = base.mul(field, &base).rem(field, modulus);
            e >>= 1;
        }
        acc
    }

    pub fn format(&self, field: &GaloisField, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let pow = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{}^{}", var, i),
            };
            let cs = field.format_elem(c);
            let part = if i == 0 {
                cs
            } else if cs == "1" {
                pow
            } else if cs.contains('+') {
                format!("({}){}", cs, pow)
            } else {
                format!("{}{}", cs, pow)
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

/// x^{q^n} mod f, computed by iterating the q-power map so exponents
/// never overflow.
fn frobenius_mod(field: &GaloisField, n: usize, f: &Poly) -> Poly {
    let q = field.order() as u128;
    let mut h = Poly::x(field).rem(field, f);
    for _ in 0..n {
        h = h.pow_mod(field, q, f);
    }
    h
}

/// Rabin irreducibility test for a monic polynomial of degree ≥ 1.
pub fn is_irreducible(field: &GaloisField, f: &Poly) -> bool {
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(n) => n,
    };
    if n == 1 {
        return true;
    }
    let f = f.monic(field);
    let x = Poly::x(field);
    // x^{q^n} = x mod f
    let xqn = frobenius_mod(field, n, &f);
    if xqn != x.rem(field, &f) {
        return false;
    }
    // gcd(x^{q^{n/l}} - x, f) = 1 for every prime l | n
    let mut m = n;
    let mut primes = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            primes.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    for l in primes {
        let h = frobenius_mod(field, n / l, &f).sub(field, &x);
        if f.gcd(field, &h).degree() != Some(0) {
            return false;
        }
    }
    true
}

/// The canonically smallest monic irreducible of the given degree:
/// the first hit when non-leading coefficient vectors are enumerated by
/// their base-q code. Deterministic, so serialized data is stable.
pub fn find_irreducible(field: &GaloisField, degree: usize) -> Poly {
    assert!(degree >= 1);
    let q = field.order();
    let mut code = vec![0u32; degree];
    loop {
        let mut coeffs: Vec<Fq> = code.iter().map(|&c| Fq(c)).collect();
        coeffs.push(field.one());
        let f = Poly { coeffs };
        if is_irreducible(field, &f) {
            return f;
        }
        // odometer increment
        let mut i = 0;
        loop {
            code[i] += 1;
            if (code[i] as u64) < q {
                break;
            }
            code[i] = 0;
            i += 1;
            assert!(i < degree, "no irreducible of degree {} found", degree);
        }
    }
}

/// p-th root of a polynomial of the form v(x^p) over 𝔽_{p^a}:
/// coefficient-wise p-th roots via γ ↦ γ^{p^{a−1}}.
fn pth_root(field: &GaloisField, f: &Poly) -> Poly {
    let p = field.characteristic();
    let a = field.extension_degree() as u32;
    let root_exp = p.pow(a - 1);
    let mut out = Vec::new();
    for (i, &c) in f.coeffs.iter().enumerate() {
        if i % p as usize == 0 {
            out.push(field.pow(c, root_exp));
        } else {
            debug_assert!(c.is_zero());
        }
    }
    Poly::from_coeffs(field, out)
}

/// Squarefree decomposition in characteristic p, Yun-style with
/// p-th-root recursion. Input monic; returns (squarefree monic, mult).
fn squarefree_decomposition(field: &GaloisField, f: &Poly) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    let mut stack = vec![(f.clone(), 1u32)];
    let p = field.characteristic() as u32;
    while let Some((f, outer)) = stack.pop() {
        if f.degree() == Some(0) {
            continue;
        }
        let df = f.derivative(field);
        if df.is_zero() {
            stack.push((pth_root(field, &f), outer * p));
            continue;
        }
        let mut c = f.gcd(field, &df);
        let mut w = f.divmod(field, &c).0;
        let mut i = 1u32;
        while w.degree() != Some(0) {
            let y = w.gcd(field, &c);
            let z = w.divmod(field, &y).0;
            if z.degree() != Some(0) {
                out.push((z.monic(field), i * outer));
            }
            w = y;
            c = c.divmod(field, &w).0;
            i += 1;
        }
        if c.degree() != Some(0) {
            stack.push((pth_root(field, &c), outer * p));
        }
    }
    out
}

/// Distinct-degree splitting of a squarefree monic polynomial:
/// returns (d, product of the irreducible factors of degree d).
fn distinct_degree(field: &GaloisField, f: &Poly) -> Vec<(usize, Poly)> {
    let q = field.order() as u128;
    let mut out = Vec::new();
    let mut h = f.clone();
    let x = Poly::x(field);
    let mut xq = Poly::x(field).rem(field, &h);
    let mut d = 0usize;
    while h.degree().unwrap_or(0) > 0 {
        d += 1;
        if 2 * d > h.degree().unwrap() {
            out.push((h.degree().unwrap(), h.clone()));
            break;
        }
        xq = xq.pow_mod(field, q, &h);
        let g = h.gcd(field, &xq.sub(field, &x));
        if g.degree() != Some(0) {
            out.push((d, g.clone()));
            h = h.divmod(field, &g).0;
            xq = xq.rem(field, &h);
        }
    }
    out
}

/// Cantor–Zassenhaus equal-degree splitting: f is a squarefree monic
/// product of irreducibles all of degree d. Randomness comes from the
/// explicit seeded stream.
fn equal_degree(field: &GaloisField, f: &Poly, d: usize, rng: &mut Rng) -> Vec<Poly> {
    let n = f.degree().unwrap();
    if n == d {
        return vec![f.clone()];
    }
    let q = field.order();
    loop {
        let mut coeffs = Vec::with_capacity(n);
        for _ in 0..n {
            coeffs.push(rng.element(field));
        }
        let a = Poly::from_coeffs(field, coeffs);
        if a.degree().unwrap_or(0) < 1 {
            continue;
        }
        let g0 = f.gcd(field, &a);
        if g0.degree() != Some(0) && g0.degree() != f.degree() {
            let rest = f.divmod(field, &g0).0;
            let mut out = equal_degree(field, &g0, d, rng);
            out.extend(equal_degree(field, &rest, d, rng));
            return out;
        }
        let b = if q % 2 == 1 {
            // a^((q^d - 1)/2) - 1 mod f
            let e = (q as u128).pow(d as u32) - 1;
            let ap = a.pow_mod(field, e / 2, f);
            ap.sub(field, &Poly::one(field))
        } else {
            // trace map to F_2: a + a^2 + a^4 + ... over F_{2^k}, kd terms
            let k = field.extension_degree();
            let steps = k * d;
            let mut acc = a.rem(field, f);
            let mut cur = acc.clone();
            for _ in 1..steps {
                cur = cur.mul(field, &cur).rem(field, f);
                acc = acc.add(field, &cur);
            }
            acc
        };
        let g = f.gcd(field, &b);
        if g.degree() != Some(0) && g.degree() != f.degree() {
            let rest = f.divmod(field, &g).0;
            let mut out = equal_degree(field, &g, d, rng);
            out.extend(equal_degree(field, &rest, d, rng));
            return out;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub lead: Fq,
    /// Monic irreducible factors with multiplicities, sorted by
    /// (degree, coefficient codes) so output is canonical.
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn product(&self, field: &GaloisField) -> Poly {
        let mut acc = Poly::constant(field, self.lead);
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(field, f);
            }
        }
        acc
    }
}

/// Full factorization into monic irreducibles. The seed drives the
/// equal-degree splitting, so results are deterministic per seed (and
/// the sorted factor list is the same for every seed).
pub fn factor(field: &GaloisField, f: &Poly, seed: u64) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lead = f.lead();
    let monic = f.monic(field);
    let mut rng = Rng::from_seed(seed);
    let mut factors: Vec<(Poly, u32)> = Vec::new();
    for (sqf, mult) in squarefree_decomposition(field, &monic) {
        for (d, prod) in distinct_degree(field, &sqf) {
            for irred in equal_degree(field, &prod, d, &mut rng) {
                factors.push((irred.monic(field), mult));
            }
        }
    }
    factors.sort_by(|a, b| {
        (a.0.coeffs.len(), &a.0.coeffs)
            .cmp(&(b.0.coeffs.len(), &b.0.coeffs))
    });
    Ok(Factorization { lead, factors })
}

/// All roots of f in the field, by direct scan (fields here are tiny).
pub fn roots(field: &GaloisField, f: &Poly) -> Vec<Fq> {
    field.elements().filter(|&x| f.eval(field, x).is_zero()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> GaloisField {
        GaloisField::new(2, 1, None).unwrap()
    }

    fn poly(field: &GaloisField, codes: &[u32]) -> Poly {
        Poly::from_coeffs(field, codes.iter().map(|&c| Fq(c)).collect())
    }

    #[test]
    fn product_degree_adds() {
        let f = f2();
        let a = poly(&f, &[1, 1, 1]);
        let b = poly(&f, &[0, 1]);
        assert_eq!(a.mul(&f, &b).degree(), Some(3));
    }

    #[test]
    fn factor_x2_plus_x_over_f2() {
        let f = f2();
        let g = poly(&f, &[0, 1, 1]); // x^2 + x
        let fac = factor(&f, &g, 0).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.factors[0].0, poly(&f, &[0, 1])); // x
        assert_eq!(fac.factors[1].0, poly(&f, &[1, 1])); // x + 1
        assert_eq!(fac.factors[0].1, 1);
        assert_eq!(fac.factors[1].1, 1);
    }

    #[test]
    fn factor_x2_plus_1_over_f2_is_a_square() {
        let f = f2();
        let g = poly(&f, &[1, 0, 1]); // x^2 + 1 = (x+1)^2
        let fac = factor(&f, &g, 0).unwrap();
        assert_eq!(fac.factors, vec![(poly(&f, &[1, 1]), 2)]);
    }

    #[test]
    fn factor_zero_rejected() {
        let f = f2();
        assert_eq!(factor(&f, &Poly::zero(), 0), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn random_factorizations_multiply_back_over_f4() {
        let f4 = GaloisField::new(2, 2, None).unwrap();
        let mut rng = Rng::from_seed(42);
        for _ in 0..200 {
            let deg = 1 + rng.below(8) as usize;
            let mut coeffs: Vec<Fq> = (0..deg).map(|_| rng.element(&f4)).collect();
            coeffs.push(f4.one());
            let g = Poly::from_coeffs(&f4, coeffs);
            let fac = factor(&f4, &g, rng.next_u64()).unwrap();
            assert_eq!(fac.product(&f4), g);
            for (p, _) in &fac.factors {
                assert!(is_irreducible(&f4, p), "factor {:?} not irreducible", p);
            }
        }
    }

    #[test]
    fn random_factorizations_multiply_back_500_cases() {
        // degree <= 10 over a few small fields, non-monic leads included
        let fields = [
            GaloisField::new(2, 1, None).unwrap(),
            GaloisField::new(3, 1, None).unwrap(),
            GaloisField::new(2, 2, None).unwrap(),
            GaloisField::new(5, 1, None).unwrap(),
        ];
        let mut rng = Rng::from_seed(777);
        for case in 0..500 {
            let field = &fields[case % fields.len()];
            let deg = 1 + rng.below(10) as usize;
            let mut coeffs: Vec<Fq> = (0..deg).map(|_| rng.element(field)).collect();
            coeffs.push(rng.nonzero_element(field));
            let g = Poly::from_coeffs(field, coeffs);
            let fac = factor(field, &g, rng.next_u64()).unwrap();
            assert_eq!(fac.product(field), g, "case {}", case);
        }
    }

    #[test]
    fn canonical_irreducible_is_stable() {
        let f2 = f2();
        let g = find_irreducible(&f2, 2);
        assert_eq!(g, poly(&f2, &[1, 1, 1])); // x^2 + x + 1
        let f3 = GaloisField::new(3, 1, None).unwrap();
        let h = find_irreducible(&f3, 2);
        assert_eq!(h, poly(&f3, &[1, 0, 1])); // x^2 + 1
    }

    #[test]
    fn roots_by_scan() {
        let f3 = GaloisField::new(3, 1, None).unwrap();
        let g = poly(&f3, &[2, 0, 1]); // x^2 + 2 = x^2 - 1
        let r = roots(&f3, &g);
        assert_eq!(r, vec![Fq(1), Fq(2)]);
    }
}
