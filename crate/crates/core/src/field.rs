//! Exact arithmetic in finite fields GF(q), q = p^e a prime power.
//!
//! Elements are plain integers in `[0, q)`: the base-p digit expansion of the
//! value encodes the coefficients of a polynomial over GF(p), constant term in
//! the least significant digit. Multiplication and inversion go through
//! exp/log tables built from a fixed primitive element, so every operation is
//! O(1) after construction.

use thiserror::Error;

/// Largest supported field size (table bound).
pub const MAX_Q: u64 = 1 << 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field size {0} exceeds the table bound {MAX_Q}")]
    TooLarge(u64),
    #[error("division by zero in GF(q)")]
    DivisionByZero,
}

/// A concrete finite field GF(p^e) with precomputed discrete-log tables.
///
/// Immutable after construction; shared freely across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u32,
    e: u32,
    q: u32,
    /// Monic irreducible modulus, constant term first, length e+1.
    /// For e = 1 this is `[0, 1]` (the polynomial x) and is unused.
    modulus: Vec<u32>,
    /// exp[i] = g^i for a fixed primitive element g, length 2(q-1).
    exp: Vec<u32>,
    /// log[a] for a in [1, q); log[0] is a sentinel.
    log: Vec<u32>,
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut fs = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            fs.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        fs.push(n);
    }
    fs
}

/// Polynomial arithmetic over GF(p) on little-endian coefficient vectors,
/// used only during field construction.
mod gfp_poly {
    pub fn trim(v: &mut Vec<u32>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        let mut out: Vec<u32> = out.into_iter().map(|x| x as u32).collect();
        trim(&mut out);
        out
    }

    /// Remainder of a by the monic polynomial m.
    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r: Vec<u32> = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        while r.len() > dm {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - dm;
            for i in 0..m.len() {
                let sub = (lead as u64 * m[i] as u64) % p as u64;
                let idx = shift + i;
                r[idx] = ((r[idx] as u64 + p as u64 - sub as u64 % p as u64) % p as u64) as u32;
            }
            trim(&mut r);
            if r.is_empty() {
                break;
            }
        }
        r
    }
}

impl FieldSpec {
    /// Build GF(q), with the lexicographically smallest monic irreducible
    /// modulus (coefficients compared constant-term first). Deterministic.
    pub fn new(q: u64) -> Result<Self, FieldError> {
        if q < 2 {
            return Err(FieldError::NotPrimePower(q));
        }
        if q > MAX_Q {
            return Err(FieldError::TooLarge(q));
        }
        let fs = prime_factors(q);
        if fs.len() != 1 {
            return Err(FieldError::NotPrimePower(q));
        }
        let p = fs[0] as u32;
        let mut e = 0u32;
        let mut t = q;
        while t > 1 {
            t /= p as u64;
            e += 1;
        }
        let q = q as u32;
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            Self::smallest_irreducible(p, e)
        };
        let mut spec = FieldSpec {
            p,
            e,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        spec.build_tables();
        Ok(spec)
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn e(&self) -> u32 {
        self.e
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    fn smallest_irreducible(p: u32, e: u32) -> Vec<u32> {
        // Candidates are monic of degree e; enumerate the low coefficients
        // (c_0, ..., c_{e-1}) in lexicographic order, c_0 most significant.
        let total = (p as u64).pow(e);
        for idx in 0..total {
            let mut c = vec![0u32; e as usize + 1];
            let mut t = idx;
            for slot in (0..e as usize).rev() {
                c[slot] = (t % p as u64) as u32;
                t /= p as u64;
            }
            c[e as usize] = 1;
            if Self::is_irreducible(&c, p) {
                return c;
            }
        }
        unreachable!("an irreducible polynomial of every degree exists over GF(p)")
    }

    /// Trial division by every monic polynomial of degree 1..=e/2.
    fn is_irreducible(f: &[u32], p: u32) -> bool {
        let e = f.len() - 1;
        if f[0] == 0 {
            return e == 1; // divisible by x
        }
        for d in 1..=(e / 2) {
            let count = (p as u64).pow(d as u32);
            for idx in 0..count {
                let mut g = vec![0u32; d + 1];
                let mut t = idx;
                for slot in 0..d {
                    g[slot] = (t % p as u64) as u32;
                    t /= p as u64;
                }
                g[d] = 1;
                if gfp_poly::rem(f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    fn value_to_poly(&self, mut v: u32) -> Vec<u32> {
        let mut c = Vec::new();
        while v > 0 {
            c.push(v % self.p);
            v /= self.p;
        }
        c
    }

    fn poly_to_value(&self, c: &[u32]) -> u32 {
        let mut v = 0u64;
        for &x in c.iter().rev() {
            v = v * self.p as u64 + x as u64;
        }
        v as u32
    }

    fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        let pa = self.value_to_poly(a);
        let pb = self.value_to_poly(b);
        let prod = gfp_poly::mul(&pa, &pb, self.p);
        let r = gfp_poly::rem(&prod, &self.modulus, self.p);
        self.poly_to_value(&r)
    }

    fn build_tables(&mut self) {
        let q = self.q as u64;
        let group_factors = prime_factors(q - 1);
        let gen = (1..self.q)
            .find(|&g| {
                group_factors.iter().all(|&r| {
                    let mut acc = 1u32;
                    for _ in 0..(q - 1) / r {
                        acc = self.mul_raw(acc, g);
                    }
                    acc != 1
                })
            })
            .expect("the multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(2 * (self.q as usize - 1));
        let mut log = vec![0u32; self.q as usize];
        let mut acc = 1u32;
        for i in 0..(self.q - 1) {
            exp.push(acc);
            log[acc as usize] = i;
            acc = self.mul_raw(acc, gen);
        }
        debug_assert_eq!(acc, 1);
        exp.extend_from_within(..);
        self.exp = exp;
        self.log = log;
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            let s = a + b;
            if s >= self.q {
                s - self.q
            } else {
                s
            }
        } else if self.p == 2 {
            a ^ b
        } else {
            // digitwise addition base p
            let (mut a, mut b) = (a, b);
            let mut out = 0u32;
            let mut place = 1u32;
            while a > 0 || b > 0 {
                out += place * ((a % self.p + b % self.p) % self.p);
                a /= self.p;
                b /= self.p;
                place *= self.p;
            }
            out
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.e == 1 {
            if a == 0 {
                0
            } else {
                self.q - a
            }
        } else if self.p == 2 {
            a
        } else {
            let mut a = a;
            let mut out = 0u32;
            let mut place = 1u32;
            while a > 0 {
                let d = a % self.p;
                out += place * if d == 0 { 0 } else { self.p - d };
                a /= self.p;
                place *= self.p;
            }
            out
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32, FieldError> {
        if a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let l = self.log[a as usize];
        Ok(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^n with the usual conventions pow(a, 0) = 1, pow(0, n) = 0 for n > 0.
    pub fn pow(&self, a: u32, n: u64) -> u32 {
        if n == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = self.log[a as usize] as u64;
        self.exp[((l * (n % (self.q as u64 - 1))) % (self.q as u64 - 1)) as usize]
    }

    /// All field elements in value order.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_and_extension_construction() {
        let f2 = FieldSpec::new(2).unwrap();
        assert_eq!((f2.p(), f2.e()), (2, 1));
        let f4 = FieldSpec::new(4).unwrap();
        assert_eq!((f4.p(), f4.e()), (2, 2));
        // x^2 + x + 1 is the only monic irreducible quadratic over GF(2)
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        assert_eq!(FieldSpec::new(6), Err(FieldError::NotPrimePower(6)));
        assert_eq!(
            FieldSpec::new(1 << 17),
            Err(FieldError::TooLarge(1 << 17))
        );
    }

    #[test]
    fn arithmetic_examples() {
        let f5 = FieldSpec::new(5).unwrap();
        assert_eq!(f5.mul(2, 3), 1);
        assert_eq!(f5.inv(2).unwrap(), 3);
        let f4 = FieldSpec::new(4).unwrap();
        // x * x = x^2 = x + 1
        assert_eq!(f4.mul(2, 2), 3);
        let f2 = FieldSpec::new(2).unwrap();
        assert_eq!(f2.add(1, 1), 0);
        assert_eq!(f5.inv(0), Err(FieldError::DivisionByZero));
        assert_eq!(f5.div(3, 0), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn inverse_and_frobenius_small_fields() {
        for q in 2..=64u64 {
            let Ok(f) = FieldSpec::new(q) else { continue };
            for a in 1..f.q() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "q={q} a={a}");
            }
            for a in 0..f.q() {
                assert_eq!(f.pow(a, q), a, "Frobenius q={q} a={a}");
            }
        }
    }

    #[test]
    fn commutative_associative_exhaustive() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = FieldSpec::new(q).unwrap();
            for a in 0..f.q() {
                for b in 0..f.q() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..f.q() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn sub_is_add_inverse() {
        for q in [3u64, 9, 27] {
            let f = FieldSpec::new(q).unwrap();
            for a in 0..f.q() {
                for b in 0..f.q() {
                    assert_eq!(f.add(f.sub(a, b), b), a);
                }
            }
        }
    }
}
