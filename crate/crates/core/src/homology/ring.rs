//! Coefficient arithmetic for sparse elimination. Every operation that can
//! overflow returns `None`, so callers can restart with big integers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub(crate) trait Arith: Sync {
    type T: Clone + Send + Sync + std::fmt::Debug;

    fn lift(&self, v: i64) -> Self::T;
    fn is_zero(&self, x: &Self::T) -> bool;
    fn is_unit(&self, x: &Self::T) -> bool;
    /// The factor `f` with `x + f·u = 0`, for a unit `u`.
    fn cancel(&self, x: &Self::T, u: &Self::T) -> Option<Self::T>;
    /// `x + f·y`.
    fn fma(&self, x: &Self::T, f: &Self::T, y: &Self::T) -> Option<Self::T>;
    /// `f·y`.
    fn mul(&self, f: &Self::T, y: &Self::T) -> Option<Self::T>;
    fn to_big(&self, x: &Self::T) -> BigInt;
}

/// Machine integers with overflow detection.
pub(crate) struct Int64;

impl Arith for Int64 {
    type T = i64;

    fn lift(&self, v: i64) -> i64 {
        v
    }
    fn is_zero(&self, x: &i64) -> bool {
        *x == 0
    }
    fn is_unit(&self, x: &i64) -> bool {
        x.abs() == 1
    }
    fn cancel(&self, x: &i64, u: &i64) -> Option<i64> {
        // u = ±1 is its own inverse
        x.checked_mul(*u)?.checked_neg()
    }
    fn fma(&self, x: &i64, f: &i64, y: &i64) -> Option<i64> {
        x.checked_add(f.checked_mul(*y)?)
    }
    fn mul(&self, f: &i64, y: &i64) -> Option<i64> {
        f.checked_mul(*y)
    }
    fn to_big(&self, x: &i64) -> BigInt {
        BigInt::from(*x)
    }
}

/// Arbitrary-precision integers.
pub(crate) struct Big;

impl Arith for Big {
    type T = BigInt;

    fn lift(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }
    fn is_zero(&self, x: &BigInt) -> bool {
        x.is_zero()
    }
    fn is_unit(&self, x: &BigInt) -> bool {
        x.abs().is_one()
    }
    fn cancel(&self, x: &BigInt, u: &BigInt) -> Option<BigInt> {
        Some(-(x * u))
    }
    fn fma(&self, x: &BigInt, f: &BigInt, y: &BigInt) -> Option<BigInt> {
        Some(x + f * y)
    }
    fn mul(&self, f: &BigInt, y: &BigInt) -> Option<BigInt> {
        Some(f * y)
    }
    fn to_big(&self, x: &BigInt) -> BigInt {
        x.clone()
    }
}

/// The prime field `𝔽_p`, `p < 2³²`.
pub(crate) struct ModP {
    p: u64,
}

impl ModP {
    pub(crate) fn new(p: u32) -> Self {
        ModP { p: p as u64 }
    }

    fn inverse(&self, x: u32) -> u32 {
        // x^(p−2) by square and multiply
        let (mut base, mut exp, mut acc) = (x as u64 % self.p, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc as u32
    }
}

impl Arith for ModP {
    type T = u32;

    fn lift(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn is_zero(&self, x: &u32) -> bool {
        *x == 0
    }
    fn is_unit(&self, x: &u32) -> bool {
        *x != 0
    }
    fn cancel(&self, x: &u32, u: &u32) -> Option<u32> {
        let q = *x as u64 * self.inverse(*u) as u64 % self.p;
        Some(((self.p - q) % self.p) as u32)
    }
    fn fma(&self, x: &u32, f: &u32, y: &u32) -> Option<u32> {
        Some(((*x as u64 + *f as u64 * *y as u64) % self.p) as u32)
    }
    fn mul(&self, f: &u32, y: &u32) -> Option<u32> {
        Some((*f as u64 * *y as u64 % self.p) as u32)
    }
    fn to_big(&self, x: &u32) -> BigInt {
        BigInt::from(*x)
    }
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    (2..)
        .take_while(|d| d * d <= p)
        .all(|d| !p.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod_p_inverse_and_cancel() {
        let f = ModP::new(7);
        for x in 1..7u32 {
            assert_eq!(x as u64 * f.inverse(x) as u64 % 7, 1);
            let u = 3;
            let c = f.cancel(&x, &u).unwrap();
            assert_eq!(f.fma(&x, &c, &u), Some(0));
        }
        assert_eq!(f.lift(-1), 6);
        let big = ModP::new(2_147_483_647);
        assert_eq!(
            big.fma(&2_147_483_646, &2_147_483_646, &2_147_483_646),
            Some(0)
        );
    }

    #[test]
    fn int64_overflow_is_reported() {
        assert_eq!(Int64.fma(&i64::MAX, &1, &1), None);
        assert_eq!(Int64.cancel(&5, &-1), Some(5));
        assert!(Int64.is_unit(&-1));
    }

    #[test]
    fn primality() {
        let primes: Vec<u32> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime(2_147_483_647));
    }
}
