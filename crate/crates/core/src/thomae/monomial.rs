use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::charspace::Perm;
use crate::exactalg::{IntPoly, Modulus};

/// `sign * prod W_ij` with `W_ij = X_i - X_j`, `i < j`, kept as a sorted
/// factor list. Two values are equal as polynomials exactly when they are
/// equal here, since the `W_ij` are pairwise non-associate primes.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SignedMonomial {
    sign: i8,
    factors: Vec<(u8, u8)>,
}

impl SignedMonomial {
    pub fn zero() -> Self {
        SignedMonomial { sign: 0, factors: Vec::new() }
    }

    pub fn one() -> Self {
        SignedMonomial { sign: 1, factors: Vec::new() }
    }

    /// Factors may be given in either orientation; `(j, i)` with `i < j`
    /// contributes a sign.
    pub fn new(sign: i8, factors: impl IntoIterator<Item = (u8, u8)>) -> Self {
        if sign == 0 {
            return Self::zero();
        }
        let mut s = sign.signum();
        let mut fs: Vec<(u8, u8)> = factors
            .into_iter()
            .map(|(i, j)| {
                assert!(i != j && (1..=8).contains(&i) && (1..=8).contains(&j), "bad factor ({i},{j})");
                if i > j {
                    s = -s;
                    (j, i)
                } else {
                    (i, j)
                }
            })
            .collect();
        fs.sort_unstable();
        SignedMonomial { sign: s, factors: fs }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn factors(&self) -> &[(u8, u8)] {
        &self.factors
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn contains(&self, i: u8, j: u8) -> bool {
        let key = if i < j { (i, j) } else { (j, i) };
        self.factors.binary_search(&key).is_ok()
    }

    pub fn neg(&self) -> Self {
        SignedMonomial { sign: -self.sign, factors: self.factors.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut fs = self.factors.clone();
        fs.extend_from_slice(&other.factors);
        fs.sort_unstable();
        SignedMonomial { sign: self.sign * other.sign, factors: fs }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Image under `X_i -> X_sigma(i)`.
    pub fn permute(&self, sigma: &Perm) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        SignedMonomial::new(self.sign, self.factors.iter().map(|&(i, j)| (sigma.apply(i), sigma.apply(j))))
    }

    pub fn to_poly(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero(8);
        }
        let p = self.factors.iter().fold(IntPoly::one(8), |acc, &(i, j)| {
            &acc * &IntPoly::difference(8, (i - 1) as usize, (j - 1) as usize)
        });
        p.scale(&BigInt::from(self.sign))
    }

    pub fn eval_mod(&self, x: &[u64], m: &Modulus) -> u64 {
        if self.is_zero() {
            return 0;
        }
        let v = self
            .factors
            .iter()
            .fold(1u64, |acc, &(i, j)| m.mul(acc, m.sub(x[(i - 1) as usize], x[(j - 1) as usize])));
        if self.sign < 0 {
            m.neg(v)
        } else {
            v
        }
    }

    pub fn eval(&self, x: &[BigInt]) -> BigInt {
        let v: BigInt = self
            .factors
            .iter()
            .map(|&(i, j)| &x[(i - 1) as usize] - &x[(j - 1) as usize])
            .product();
        v * BigInt::from(self.sign)
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        self.sign as f64
            * self
                .factors
                .iter()
                .map(|&(i, j)| x[(i - 1) as usize] - x[(j - 1) as usize])
                .product::<f64>()
    }
}

impl fmt::Display for SignedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            0 => write!(f, "0"),
            s => {
                write!(f, "{}", if s < 0 { "-" } else { "+" })?;
                for (i, j) in &self.factors {
                    write!(f, "W{i}{j}")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for SignedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_sets_sign() {
        let a = SignedMonomial::new(1, [(2, 1), (3, 4)]);
        assert_eq!(a, SignedMonomial::new(-1, [(1, 2), (3, 4)]));
        assert_eq!(a.to_string(), "-W12W34");
    }

    #[test]
    fn expansion_matches_evaluation() {
        let a = SignedMonomial::new(-1, [(1, 3), (2, 5), (1, 3)]);
        let x: Vec<BigInt> = [3, 1, 4, 1, 5, 9, 2, 6].iter().map(|&v| BigInt::from(v)).collect();
        // -(3-4)^2 (1-5)
        assert_eq!(a.to_poly().eval(&x), BigInt::from(4));
        let xf: Vec<f64> = [3., 1., 4., 1., 5., 9., 2., 6.].to_vec();
        assert_eq!(a.eval_f64(&xf), 4.0);
    }

    #[test]
    fn permutation_tracks_orientation() {
        let a = SignedMonomial::new(1, [(1, 2)]);
        let s = Perm::transposition(1, 2);
        assert_eq!(a.permute(&s), SignedMonomial::new(-1, [(1, 2)]));
    }
}
