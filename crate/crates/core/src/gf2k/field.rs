use super::GfError;
use crate::perm::prime_divisors;
use serde::Serialize;
use std::fmt;

pub const MAX_DEGREE: u32 = 16;

/// Element of GF(2^k) in polynomial basis: bit `i` is the coefficient of `x^i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FieldElem(pub u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

/// Carry-less product of two GF(2) polynomials.
pub(crate) fn clmul(a: u64, b: u64) -> u64 {
    let mut acc = 0;
    let mut b = b;
    let mut shift = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a << shift;
        }
        b >>= 1;
        shift += 1;
    }
    acc
}

fn poly_degree(a: u64) -> i32 {
    63 - a.leading_zeros() as i32
}

pub(crate) fn poly_rem(mut a: u64, m: u64) -> u64 {
    let dm = poly_degree(m);
    while a != 0 && poly_degree(a) >= dm {
        a ^= m << (poly_degree(a) - dm);
    }
    a
}

pub(crate) fn poly_mulmod(a: u64, b: u64, m: u64) -> u64 {
    poly_rem(clmul(a, b), m)
}

fn poly_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = poly_rem(a, b);
        a = b;
        b = r;
    }
    a
}

/// `x^(2^e) mod m` by repeated squaring.
fn x_pow_2e(e: u32, m: u64) -> u64 {
    let mut r = poly_rem(0b10, m);
    for _ in 0..e {
        r = poly_mulmod(r, r, m);
    }
    r
}

/// Rabin's test: `m` of degree `k` is irreducible iff `x^(2^k) = x` mod `m`
/// and `gcd(x^(2^(k/r)) - x, m) = 1` for every prime `r | k`.
pub fn is_irreducible(m: u64) -> bool {
    let k = poly_degree(m);
    if k < 1 {
        return false;
    }
    let k = k as u32;
    let x = poly_rem(0b10, m);
    if x_pow_2e(k, m) != x {
        return false;
    }
    prime_divisors(k as u64)
        .into_iter()
        .all(|r| poly_gcd(m, x_pow_2e(k / r as u32, m) ^ x) == 1)
}

fn poly_powmod(base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = poly_rem(1, m);
    let mut b = poly_rem(base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(acc, b, m);
        }
        b = poly_mulmod(b, b, m);
        e >>= 1;
    }
    acc
}

/// The binary field GF(2^k) with log/antilog tables over the primitive
/// element `theta`, the class of `x`.
#[derive(Clone)]
pub struct Field {
    k: u32,
    modulus: u32,
    /// `exp[i] = theta^i` for `0 <= i < 2(q-1)`.
    exp: Vec<u32>,
    /// `log[a]` for nonzero `a`.
    log: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("k", &self.k)
            .field("modulus", &format_args!("{:#b}", self.modulus))
            .finish()
    }
}

impl Field {
    /// GF(2^k) over the least degree-`k` polynomial that is irreducible and
    /// has `x` primitive.
    pub fn new(k: u32) -> Result<Field, GfError> {
        if !(1..=MAX_DEGREE).contains(&k) {
            return Err(GfError::DegreeOutOfRange(k));
        }
        let order = (1u64 << k) - 1;
        let primes = prime_divisors(order);
        let modulus = ((1u64 << k)..(1u64 << (k + 1)))
            .find(|&m| {
                is_irreducible(m)
                    && poly_powmod(0b10, order, m) == 1
                    && primes.iter().all(|&r| poly_powmod(0b10, order / r, m) != 1)
            })
            .expect("a primitive polynomial exists in every degree");
        Ok(Field::with_modulus(k, modulus as u32))
    }

    fn with_modulus(k: u32, modulus: u32) -> Field {
        let q1 = (1usize << k) - 1;
        let mut exp = vec![0u32; 2 * q1];
        let mut log = vec![0u32; q1 + 1];
        let theta = poly_rem(0b10, modulus as u64);
        let mut cur = 1u64;
        for i in 0..q1 {
            exp[i] = cur as u32;
            exp[i + q1] = cur as u32;
            log[cur as usize] = i as u32;
            cur = poly_mulmod(cur, theta, modulus as u64);
        }
        Field {
            k,
            modulus,
            exp,
            log,
        }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u32 {
        1 << self.k
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn theta(&self) -> FieldElem {
        FieldElem(self.exp[1 % self.exp.len()])
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q()).map(FieldElem)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = FieldElem> {
        (1..self.q()).map(FieldElem)
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(a.0 ^ b.0)
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        FieldElem(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    /// Product by shift-and-reduce, independent of the tables.
    pub fn mul_slow(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(poly_mulmod(a.0 as u64, b.0 as u64, self.modulus as u64) as u32)
    }

    #[inline]
    pub fn square(&self, a: FieldElem) -> FieldElem {
        self.mul(a, a)
    }

    pub fn inv(&self, a: FieldElem) -> Option<FieldElem> {
        if a.0 == 0 {
            return None;
        }
        let q1 = self.q() - 1;
        Some(FieldElem(self.exp[((q1 - self.log[a.0 as usize]) % q1) as usize]))
    }

    /// `theta^e` for any integer exponent.
    pub fn theta_pow(&self, e: i64) -> FieldElem {
        let q1 = (self.q() - 1) as i64;
        FieldElem(self.exp[e.rem_euclid(q1) as usize])
    }

    /// Discrete log to base `theta`, in `0..q-1`.
    pub fn log(&self, a: FieldElem) -> Option<u32> {
        (a.0 != 0).then(|| self.log[a.0 as usize])
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        if e == 0 {
            return FieldElem::ONE;
        }
        if a.0 == 0 {
            return FieldElem::ZERO;
        }
        let q1 = (self.q() - 1) as u64;
        let l = (self.log[a.0 as usize] as u64 * (e % q1)) % q1;
        FieldElem(self.exp[l as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: FieldElem) -> Option<u64> {
        let l = self.log(a)? as u64;
        let q1 = (self.q() - 1) as u64;
        Some(q1 / crate::perm::gcd(l, q1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn gf2() {
        let f = Field::new(1).unwrap();
        assert_eq!(f.q(), 2);
        assert_eq!(f.theta(), FieldElem::ONE);
        assert_eq!(f.modulus(), 0b11);
    }

    #[test]
    fn gf16_theta_primitive() {
        let f = Field::new(4).unwrap();
        assert_eq!(f.q(), 16);
        let th = f.theta();
        assert_eq!(f.pow(th, 15), FieldElem::ONE);
        assert_ne!(f.pow(th, 5), FieldElem::ONE);
        assert_ne!(f.pow(th, 3), FieldElem::ONE);
        // x^4 + x + 1 is the least primitive quartic
        assert_eq!(f.modulus(), 0b10011);
    }

    #[test]
    fn gf256_modulus() {
        let f = Field::new(8).unwrap();
        assert_eq!(f.q(), 256);
        // x^8 + x^4 + x^3 + x^2 + 1: x^8+x^4+x^3+x+1 is irreducible but x
        // is not primitive modulo it.
        assert_eq!(f.modulus(), 0x11d);
        assert_eq!(f.order(f.theta()), Some(255));
    }

    #[test]
    fn degree_range() {
        assert_eq!(Field::new(0).unwrap_err(), GfError::DegreeOutOfRange(0));
        assert_eq!(Field::new(17).unwrap_err(), GfError::DegreeOutOfRange(17));
        assert!(Field::new(16).is_ok());
    }

    #[test]
    fn irreducibility_against_root_and_factor_search() {
        // brute force: no factor of degree 1..=k/2
        fn brute(m: u64) -> bool {
            let k = poly_degree(m);
            (2u64..(1 << (k / 2 + 1))).all(|d| poly_rem(m, d) != 0)
        }
        for m in 2u64..(1 << 11) {
            assert_eq!(is_irreducible(m), brute(m), "m = {m:#b}");
        }
    }

    proptest! {
        #[test]
        fn field_axioms(a in 0u32..256, b in 0u32..256, c in 0u32..256) {
            let f = Field::new(8).unwrap();
            let (a, b, c) = (FieldElem(a), FieldElem(b), FieldElem(c));
            prop_assert_eq!(f.mul(a, b), f.mul_slow(a, b));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.square(f.add(a, b)), f.add(f.square(a), f.square(b)));
            if !a.is_zero() {
                prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElem::ONE);
            }
        }
    }
}
