//! Arithmetic in a prime field `GF(p)` with `p < 2^62`.
//!
//! Residues are plain `u64` values in `[0, p)`. Products go through `u128`;
//! the elimination kernels use Shoup's precomputed-quotient multiplication,
//! which avoids 128-bit division in the inner loop.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `2^62 - 57`, the largest prime below `2^62`.
pub const DEFAULT_PRIME: u64 = 4_611_686_018_427_387_847;

/// A prime modulus together with the operations of `GF(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Modulus {
    p: u64,
}

impl Default for Modulus {
    fn default() -> Self {
        Modulus { p: DEFAULT_PRIME }
    }
}

impl Modulus {
    /// Validates that `p` is an odd prime below `2^62`.
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p >= 1 << 62 || !is_prime_u64(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Modulus { p })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        if a % self.p == 0 {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }

    pub fn from_i64(&self, v: i64) -> u64 {
        let r = v.rem_euclid(self.p as i64);
        r as u64
    }

    pub fn from_i128(&self, v: i128) -> u64 {
        v.rem_euclid(self.p as i128) as u64
    }

    pub fn from_bigint(&self, v: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        v.mod_floor(&p).to_u64().expect("residue fits in u64")
    }

    /// Symmetric lift into `(-p/2, p/2]`.
    pub fn centered(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            -((self.p - a) as i64)
        } else {
            a as i64
        }
    }

    /// Precomputed quotient `floor(w * 2^64 / p)` for [`Modulus::mul_shoup`].
    #[inline]
    pub fn shoup(&self, w: u64) -> u64 {
        (((w as u128) << 64) / self.p as u128) as u64
    }

    /// `x * w mod p` given `w_shoup = self.shoup(w)`; `w < p`, any `x < p`.
    #[inline(always)]
    pub fn mul_shoup(&self, x: u64, w: u64, w_shoup: u64) -> u64 {
        let q = ((x as u128 * w_shoup as u128) >> 64) as u64;
        let r = x.wrapping_mul(w).wrapping_sub(q.wrapping_mul(self.p));
        if r >= self.p {
            r - self.p
        } else {
            r
        }
    }

    /// Recovers `n/d` from its residue with `|n|, d <= sqrt(p/2)`.
    pub fn rational_reconstruct(&self, a: u64) -> Option<(i64, i64)> {
        let bound = ((self.p / 2) as f64).sqrt() as i128;
        let (mut r0, mut r1) = (self.p as i128, a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 > bound {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        if t1 == 0 || t1.abs() > bound {
            return None;
        }
        let (n, d) = if t1 < 0 { (-r1, -t1) } else { (r1, t1) };
        if self.from_i128(n) != self.mul(a, self.from_i128(d)) {
            return None;
        }
        let g = n.abs().gcd(&d);
        Some(((n / g) as i64, (d / g) as i64))
    }
}

/// A residue modulo a compile-time prime, usable as a polynomial coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64 = DEFAULT_PRIME>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

impl<const P: u64> std::fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> std::ops::Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp(((self.0 as u128 + o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> std::ops::Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp(((self.0 as u128 + P as u128 - o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> std::ops::Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> std::ops::Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> num_traits::One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> crate::exactalg::poly::Reduce for Fp<P> {
    fn residue(&self, m: &Modulus) -> u64 {
        self.0 % m.p()
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Reduces a big integer that is known to be small into `i64`, if it fits.
pub fn bigint_to_i64(v: &BigInt) -> Option<i64> {
    if v.is_zero() {
        return Some(0);
    }
    if v.abs().bits() > 62 {
        return None;
    }
    v.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn default_prime_is_prime_and_large() {
        assert!(is_prime_u64(DEFAULT_PRIME));
        assert!(DEFAULT_PRIME > 1 << 61);
        assert!(!is_prime_u64(DEFAULT_PRIME + 2));
        assert!(Modulus::new(DEFAULT_PRIME + 2).is_err());
        assert!(Modulus::new(2).is_err());
    }

    #[test]
    fn reconstructs_small_fractions() {
        let m = Modulus::default();
        let a = m.mul(m.from_i64(-7), m.inv(6).unwrap());
        assert_eq!(m.rational_reconstruct(a), Some((-7, 6)));
        assert_eq!(m.rational_reconstruct(m.from_i64(-3)), Some((-3, 1)));
    }

    #[test]
    fn residue_coefficients_wrap() {
        let a = Fp::<7>::from_i64(-1);
        assert_eq!(a.value(), 6);
        assert_eq!((a * a).value(), 1);
        assert_eq!((a + Fp::new(1)).value(), 0);
    }

    proptest! {
        #[test]
        fn shoup_matches_plain(x in 0u64..DEFAULT_PRIME, w in 0u64..DEFAULT_PRIME) {
            let m = Modulus::default();
            prop_assert_eq!(m.mul_shoup(x, w, m.shoup(w)), m.mul(x, w));
        }

        #[test]
        fn inverse_roundtrip(a in 1u64..DEFAULT_PRIME) {
            let m = Modulus::default();
            prop_assert_eq!(m.mul(a, m.inv(a).unwrap()), 1);
        }
    }
}
