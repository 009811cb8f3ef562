//! Exact arithmetic in the ground field 𝔽_q = 𝔽_p[u]/(g).
//!
//! A [`GaloisField`] is a shared context object; elements are compact
//! [`Fq`] codes (the base-p digits of the coefficient vector), and all
//! arithmetic goes through the field so moduli stay runtime data. For
//! the small fields this library targets, add/mul/inv tables are
//! precomputed at construction and every operation is a lookup.

use crate::error::{Error, Result};
use crate::poly;
use std::fmt;
use std::sync::Arc;

/// An element of a [`GaloisField`], encoded as Σ cᵢ pⁱ where
/// (c₀, …, c_{a−1}) is the canonical coefficient vector over 𝔽_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fq(pub u32);

impl Fq {
    pub const ZERO: Fq = Fq(0);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Largest order for which lookup tables are built. Everything in the
/// intended regime (q ≤ 81 in practice) is far below this.
const TABLE_LIMIT: u64 = 512;

/// Hard cap on field size; large fields are out of scope.
const ORDER_LIMIT: u64 = 1 << 16;

struct FieldInner {
    p: u64,
    a: usize,
    q: u64,
    /// Monic irreducible modulus over 𝔽_p, low-to-high, length a+1.
    modulus: Vec<u64>,
    add: Vec<u32>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    neg: Vec<u32>,
}

/// The field 𝔽_q = 𝔽_p[u]/(g), q = p^a.
#[derive(Clone)]
pub struct GaloisField(Arc<FieldInner>);

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.a == other.0.a && self.0.modulus == other.0.modulus)
    }
}
impl Eq for GaloisField {}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl GaloisField {
    /// Construct 𝔽_{p^a}. When `modulus` is omitted, the canonical
    /// modulus is the irreducible monic polynomial whose non-leading
    /// coefficient vector has the smallest base-p code; this makes
    /// serialized data reproducible across runs.
    pub fn new(p: u64, a: usize, modulus: Option<&[u64]>) -> Result<GaloisField> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if a == 0 {
            return Err(Error::InvalidField("exponent must be positive".into()));
        }
        let q = (p as u128).checked_pow(a as u32).unwrap_or(u128::MAX);
        if q > ORDER_LIMIT as u128 {
            return Err(Error::InvalidField(format!(
                "field order p^a = {}^{} exceeds the supported limit {}",
                p, a, ORDER_LIMIT
            )));
        }
        let q = q as u64;
        let modulus = match modulus {
            Some(m) => {
                let m: Vec<u64> = m.iter().map(|&c| c % p).collect();
                if m.len() != a + 1 || *m.last().unwrap() != 1 {
                    return Err(Error::InvalidField(format!(
                        "modulus must be monic of degree {}",
                        a
                    )));
                }
                if a > 1 && !modulus_is_irreducible(p, &m)? {
                    return Err(Error::ReducibleModulus);
                }
                m
            }
            None => canonical_modulus(p, a)?,
        };
        Ok(GaloisField::from_parts(p, a, q, modulus))
    }

    fn from_parts(p: u64, a: usize, q: u64, modulus: Vec<u64>) -> GaloisField {
        let mut inner = FieldInner {
            p,
            a,
            q,
            modulus,
            add: Vec::new(),
            mul: Vec::new(),
            inv: Vec::new(),
            neg: Vec::new(),
        };
        if q <= TABLE_LIMIT {
            build_tables(&mut inner);
        }
        GaloisField(Arc::new(inner))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn extension_degree(&self) -> usize {
        self.0.a
    }

    pub fn order(&self) -> u64 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn zero(&self) -> Fq {
        Fq(0)
    }

    pub fn one(&self) -> Fq {
        Fq(1)
    }

    /// The residue class of the generator u (only meaningful for a > 1;
    /// for a = 1 this is zero since u ≡ 0 mod the canonical modulus x).
    pub fn generator(&self) -> Fq {
        if self.0.a == 1 {
            self.from_int(self.0.modulus[0].wrapping_neg().wrapping_add(self.0.p) % self.0.p)
        } else {
            Fq(self.0.p as u32)
        }
    }

    /// Embed an integer via the prime subfield.
    pub fn from_int(&self, n: u64) -> Fq {
        Fq((n % self.0.p) as u32)
    }

    /// Decode an element into its length-a coefficient vector over 𝔽_p.
    pub fn coeffs(&self, x: Fq) -> Vec<u64> {
        let mut code = x.0 as u64;
        let mut out = Vec::with_capacity(self.0.a);
        for _ in 0..self.0.a {
            out.push(code % self.0.p);
            code /= self.0.p;
        }
        out
    }

    /// Encode a coefficient vector (entries taken mod p; shorter vectors
    /// are zero-padded). Rejects vectors longer than the degree.
    pub fn encode(&self, coeffs: &[u64]) -> Result<Fq> {
        if coeffs.len() > self.0.a {
            return Err(Error::InvalidField(format!(
                "coefficient vector of length {} in a degree-{} field",
                coeffs.len(),
                self.0.a
            )));
        }
        let mut code = 0u64;
        for (i, &c) in coeffs.iter().enumerate() {
            code += (c % self.0.p) * self.0.p.pow(i as u32);
        }
        Ok(Fq(code as u32))
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.0.q as u32).map(Fq)
    }

    pub fn add(&self, x: Fq, y: Fq) -> Fq {
        if !self.0.add.is_empty() {
            return Fq(self.0.add[(x.0 as u64 * self.0.q + y.0 as u64) as usize]);
        }
        self.add_slow(x, y)
    }

    pub fn neg(&self, x: Fq) -> Fq {
        if !self.0.neg.is_empty() {
            return Fq(self.0.neg[x.0 as usize]);
        }
        let coeffs: Vec<u64> = self.coeffs(x).iter().map(|&c| (self.0.p - c) % self.0.p).collect();
        self.encode(&coeffs).unwrap()
    }

    pub fn sub(&self, x: Fq, y: Fq) -> Fq {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: Fq, y: Fq) -> Fq {
        if !self.0.mul.is_empty() {
            return Fq(self.0.mul[(x.0 as u64 * self.0.q + y.0 as u64) as usize]);
        }
        self.mul_slow(x, y)
    }

    pub fn inv(&self, x: Fq) -> Option<Fq> {
        if x.is_zero() {
            return None;
        }
        if !self.0.inv.is_empty() {
            return Some(Fq(self.0.inv[x.0 as usize]));
        }
        Some(self.pow(x, self.0.q - 2))
    }

    pub fn div(&self, x: Fq, y: Fq) -> Option<Fq> {
        self.inv(y).map(|yi| self.mul(x, yi))
    }

    pub fn pow(&self, x: Fq, mut e: u64) -> Fq {
        let mut base = x;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// x^{q₀ⁿ} for a power q₀ of the characteristic: the n-th iterate of
    /// the q₀-power Frobenius. Panics if q₀ is not a power of p.
    pub fn frobenius_power(&self, x: Fq, q0: u64, n: u64) -> Fq {
        assert!(
            is_power_of(q0, self.0.p),
            "frobenius base {} is not a power of the characteristic {}",
            q0,
            self.0.p
        );
        if x.is_zero() {
            return x;
        }
        // x has multiplicative order dividing q-1, so reduce the exponent.
        let e = mod_pow(q0 % (self.0.q - 1).max(1), n, self.0.q - 1);
        self.pow(x, if e == 0 { self.0.q - 1 } else { e })
    }

    fn add_slow(&self, x: Fq, y: Fq) -> Fq {
        let (a, b) = (self.coeffs(x), self.coeffs(y));
        let coeffs: Vec<u64> = a.iter().zip(&b).map(|(&u, &v)| (u + v) % self.0.p).collect();
        self.encode(&coeffs).unwrap()
    }

    fn mul_slow(&self, x: Fq, y: Fq) -> Fq {
        let (a, b) = (self.coeffs(x), self.coeffs(y));
        let p = self.0.p;
        let deg = self.0.a;
        let mut prod = vec![0u64; 2 * deg - 1];
        for (i, &u) in a.iter().enumerate() {
            if u == 0 {
                continue;
            }
            for (j, &v) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u * v) % p;
            }
        }
        // reduce modulo the monic modulus
        for k in (deg..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &m) in self.0.modulus.iter().enumerate().take(deg) {
                let idx = k - deg + i;
                prod[idx] = (prod[idx] + c * (p - m)) % p;
            }
        }
        prod.truncate(deg);
        self.encode(&prod).unwrap()
    }

    /// Render an element as a polynomial in u, e.g. "u+1".
    pub fn format_elem(&self, x: Fq) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let coeffs = self.coeffs(x);
        let mut parts = Vec::new();
        for (i, &c) in coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => "u".into(),
                _ => format!("u^{}", i),
            };
            let part = if i == 0 {
                format!("{}", c)
            } else if c == 1 {
                var
            } else {
                format!("{}{}", c, var)
            };
            parts.push(part);
        }
        parts.join("+")
    }
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    if n == 0 {
        return false;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

fn mod_pow(base: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut b = base % m;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn build_tables(inner: &mut FieldInner) {
    let q = inner.q as usize;
    let shell = GaloisField(Arc::new(FieldInner {
        p: inner.p,
        a: inner.a,
        q: inner.q,
        modulus: inner.modulus.clone(),
        add: Vec::new(),
        mul: Vec::new(),
        inv: Vec::new(),
        neg: Vec::new(),
    }));
    let mut add = vec![0u32; q * q];
    let mut mul = vec![0u32; q * q];
    let mut inv = vec![0u32; q];
    let mut neg = vec![0u32; q];
    for x in 0..q as u32 {
        neg[x as usize] = shell.neg(Fq(x)).0;
        for y in 0..q as u32 {
            add[x as usize * q + y as usize] = shell.add_slow(Fq(x), Fq(y)).0;
            mul[x as usize * q + y as usize] = shell.mul_slow(Fq(x), Fq(y)).0;
        }
    }
    for x in 1..q as u32 {
        inv[x as usize] = shell.pow(Fq(x), inner.q - 2).0;
    }
    inner.add = add;
    inner.mul = mul;
    inner.inv = inv;
    inner.neg = neg;
}

/// Irreducibility of a monic polynomial over 𝔽_p, tested through the
/// generic machinery over the prime field.
fn modulus_is_irreducible(p: u64, m: &[u64]) -> Result<bool> {
    let prime_field = GaloisField::from_parts(p, 1, p, vec![0, 1]);
    let f = poly::Poly::from_coeffs(
        &prime_field,
        m.iter().map(|&c| Fq((c % p) as u32)).collect(),
    );
    Ok(poly::is_irreducible(&prime_field, &f))
}

fn canonical_modulus(p: u64, a: usize) -> Result<Vec<u64>> {
    if a == 1 {
        return Ok(vec![0, 1]);
    }
    let q = p.pow(a as u32);
    for code in 0..q {
        let mut coeffs = Vec::with_capacity(a + 1);
        let mut c = code;
        for _ in 0..a {
            coeffs.push(c % p);
            c /= p;
        }
        coeffs.push(1);
        if modulus_is_irreducible(p, &coeffs)? {
            return Ok(coeffs);
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn laws_hold_exhaustively(field: &GaloisField) {
        let q = field.order();
        assert!(q <= 64);
        let els: Vec<Fq> = field.elements().collect();
        for &x in &els {
            assert_eq!(field.add(x, field.zero()), x);
            assert_eq!(field.mul(x, field.one()), x);
            assert_eq!(field.add(x, field.neg(x)), field.zero());
            if !x.is_zero() {
                let xi = field.inv(x).unwrap();
                assert_eq!(field.mul(x, xi), field.one());
            }
            // Fermat: x^q = x
            assert_eq!(field.pow(x, q), x);
        }
        for &x in &els {
            for &y in &els {
                assert_eq!(field.add(x, y), field.add(y, x));
                assert_eq!(field.mul(x, y), field.mul(y, x));
                for &z in &els {
                    assert_eq!(field.mul(field.mul(x, y), z), field.mul(x, field.mul(y, z)));
                    assert_eq!(field.add(field.add(x, y), z), field.add(x, field.add(y, z)));
                    assert_eq!(
                        field.mul(x, field.add(y, z)),
                        field.add(field.mul(x, y), field.mul(x, z))
                    );
                }
            }
        }
    }

    #[test]
    fn field_laws_exhaustive_up_to_64() {
        for (p, a) in [(2, 1), (2, 2), (2, 3), (2, 6), (3, 1), (3, 2), (5, 1), (7, 1)] {
            let f = GaloisField::new(p, a, None).unwrap();
            laws_hold_exhaustively(&f);
        }
    }

    #[test]
    fn f2_is_the_prime_field() {
        let f2 = GaloisField::new(2, 1, None).unwrap();
        assert_eq!(f2.order(), 2);
        assert_eq!(f2.add(f2.one(), f2.one()), f2.zero());
    }

    #[test]
    fn f4_generator_satisfies_its_relation() {
        let f4 = GaloisField::new(2, 2, Some(&[1, 1, 1])).unwrap();
        let g = f4.generator();
        // g^2 = g + 1
        assert_eq!(f4.mul(g, g), f4.add(g, f4.one()));
    }

    #[test]
    fn canonical_f9_modulus_is_irreducible() {
        let f9 = GaloisField::new(3, 2, None).unwrap();
        assert_eq!(f9.order(), 9);
        // brute-force check: the modulus has no root among the 9 linear
        // candidates, hence no linear factor, hence irreducible (deg 2)
        let m = f9.modulus().to_vec();
        let f3 = GaloisField::new(3, 1, None).unwrap();
        for r in 0..3u64 {
            let x = f3.from_int(r);
            let mut acc = f3.zero();
            for &c in m.iter().rev() {
                acc = f3.add(f3.mul(acc, x), f3.from_int(c));
            }
            assert!(!acc.is_zero(), "root found at {}", r);
        }
    }

    #[test]
    fn rejects_reducible_modulus() {
        // x^2 + 1 = (x+1)^2 over F_2
        assert!(matches!(
            GaloisField::new(2, 2, Some(&[1, 0, 1])),
            Err(Error::ReducibleModulus)
        ));
    }

    #[test]
    fn rejects_non_prime() {
        assert!(matches!(GaloisField::new(6, 1, None), Err(Error::NotPrime(6))));
    }

    #[test]
    fn frobenius_fixes_the_whole_field_at_its_own_order() {
        for (p, a) in [(2, 3), (3, 2), (2, 2)] {
            let f = GaloisField::new(p, a, None).unwrap();
            let q = f.order();
            for x in f.elements() {
                for k in 0..4 {
                    assert_eq!(f.frobenius_power(x, q, k), x);
                }
            }
        }
    }

    #[test]
    fn frobenius_squares_in_f4() {
        let f4 = GaloisField::new(2, 2, Some(&[1, 1, 1])).unwrap();
        let g = f4.generator();
        assert_eq!(f4.frobenius_power(g, 2, 1), f4.add(g, f4.one()));
    }

    #[test]
    fn frobenius_is_additive_over_f8() {
        let f8 = GaloisField::new(2, 3, None).unwrap();
        for x in f8.elements() {
            for y in f8.elements() {
                assert_eq!(
                    f8.frobenius_power(f8.add(x, y), 2, 1),
                    f8.add(f8.frobenius_power(x, 2, 1), f8.frobenius_power(y, 2, 1))
                );
            }
        }
    }

    #[test]
    fn encode_decode_roundtrip() {
        let f9 = GaloisField::new(3, 2, None).unwrap();
        for x in f9.elements() {
            assert_eq!(f9.encode(&f9.coeffs(x)).unwrap(), x);
        }
    }
}
