//! Small finite fields `GF(q)`, `q = p^f`.
//!
//! Elements are encoded as integers in `[0, q)`. For a prime field this is the
//! residue itself; for an extension field it is the base-`p` digit string of the
//! coefficient vector of a polynomial modulo a fixed primitive polynomial (the
//! lexicographically first monic one of degree `f`). Digit `i` is the
//! coefficient of `x^i`, so `p` encodes the generator `x`.

use std::fmt;

use crate::error::GroupError;

/// Largest field order with table-driven extension arithmetic.
pub const MAX_EXTENSION_ORDER: u32 = 1 << 12;

#[derive(Clone, PartialEq, Eq)]
pub struct Field {
    p: u32,
    degree: u32,
    q: u32,
    /// Primitive polynomial coefficients `c_0..c_{f-1}` (monic, low to high).
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Returns `(p, f)` with `q = p^f` if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q {
        if q.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if p * p > q {
        return Some((q, 1));
    }
    let mut r = q;
    let mut f = 0;
    while r.is_multiple_of(p) {
        r /= p;
        f += 1;
    }
    (r == 1).then_some((p, f))
}

impl Field {
    pub fn new(q: u32) -> Result<Self, GroupError> {
        let (p, f) = prime_power(q as u64)
            .ok_or_else(|| GroupError::Inadmissible(format!("{q} is not a prime power")))?;
        let p = p as u32;
        if f == 1 {
            return Ok(Self::prime(p));
        }
        if q > MAX_EXTENSION_ORDER {
            return Err(GroupError::Inadmissible(format!(
                "extension field of order {q} exceeds {MAX_EXTENSION_ORDER}"
            )));
        }
        Ok(Self::extension(p, f))
    }

    fn prime(p: u32) -> Self {
        let mut field = Field {
            p,
            degree: 1,
            q: p,
            modulus: vec![],
            exp: vec![],
            log: vec![],
        };
        if p > 2 {
            let g = (2..p)
                .find(|&g| field.mult_order(g) == (p - 1) as u64)
                .expect("prime field has a primitive root");
            field.fill_tables(g);
        } else {
            field.fill_tables(1);
        }
        field
    }

    fn extension(p: u32, f: u32) -> Self {
        let q = p.pow(f);
        // Search monic polynomials x^f + c_{f-1}x^{f-1} + .. + c_0 for one in which x is primitive.
        for code in 0..q {
            let coeffs: Vec<u32> = (0..f).map(|i| (code / p.pow(i)) % p).collect();
            if coeffs[0] == 0 {
                continue;
            }
            let mut field = Field {
                p,
                degree: f,
                q,
                modulus: coeffs,
                exp: vec![],
                log: vec![],
            };
            if field.x_is_primitive() {
                field.fill_tables(p);
                return field;
            }
        }
        unreachable!("a primitive polynomial exists for every finite field")
    }

    fn digits(&self, a: u32) -> Vec<u32> {
        (0..self.degree)
            .map(|i| (a / self.p.pow(i)) % self.p)
            .collect()
    }

    fn undigits(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    /// Multiplication by `x` in the polynomial representation.
    fn times_x(&self, a: u32) -> u32 {
        let d = self.digits(a);
        let top = d[self.degree as usize - 1];
        let mut out = vec![0u32; self.degree as usize];
        for i in (1..self.degree as usize).rev() {
            out[i] = d[i - 1];
        }
        // x^f = -(c_0 + .. + c_{f-1} x^{f-1})
        for (i, o) in out.iter_mut().enumerate() {
            let sub = (top * self.modulus[i]) % self.p;
            *o = (*o + self.p - sub) % self.p;
        }
        self.undigits(&out)
    }

    fn x_is_primitive(&self) -> bool {
        let mut a = 1u32;
        for k in 1..self.q {
            a = self.times_x(a);
            if a == 1 {
                return k == self.q - 1;
            }
            if a == 0 {
                return false;
            }
        }
        false
    }

    fn fill_tables(&mut self, generator: u32) {
        let n = (self.q - 1) as usize;
        let mut exp = vec![0u32; n];
        let mut log = vec![u32::MAX; self.q as usize];
        let mut a = 1u32;
        for (k, e) in exp.iter_mut().enumerate() {
            *e = a;
            log[a as usize] = k as u32;
            a = if self.degree == 1 {
                ((a as u64 * generator as u64) % self.p as u64) as u32
            } else {
                self.times_x(a)
            };
        }
        self.exp = exp;
        self.log = log;
    }

    fn mult_order(&self, a: u32) -> u64 {
        let p = self.p as u64;
        let mut x = a as u64 % p;
        let mut k = 1;
        while x != 1 {
            x = x * a as u64 % p;
            k += 1;
        }
        k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_prime_field(&self) -> bool {
        self.degree == 1
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> u32 {
        if self.q == 2 {
            1
        } else {
            self.exp[1]
        }
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.degree == 1 {
            return (a + b) % self.p;
        }
        let mut out = 0;
        let mut scale = 1;
        let (mut a, mut b) = (a, b);
        for _ in 0..self.degree {
            out += ((a % self.p + b % self.p) % self.p) * scale;
            a /= self.p;
            b /= self.p;
            scale *= self.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.degree == 1 {
            return (self.p - a) % self.p;
        }
        let mut out = 0;
        let mut scale = 1;
        let mut a = a;
        for _ in 0..self.degree {
            out += ((self.p - a % self.p) % self.p) * scale;
            a /= self.p;
            scale *= self.p;
        }
        out
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
        if self.degree == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        let n = self.q - 1;
        self.exp[((self.log[a as usize] + self.log[b as usize]) % n) as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.q - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.q - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * (e % n)) % n) as usize]
    }

    /// Discrete logarithm base the primitive element.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// The field automorphism `a -> a^(p^k)`.
    pub fn frobenius(&self, a: u32, k: u32) -> u32 {
        self.pow(a, (self.p as u64).pow(k))
    }

    pub fn is_square(&self, a: u32) -> bool {
        a == 0 || self.p == 2 || self.log[a as usize].is_multiple_of(2)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }
}

impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.q.hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}
