//! Power-series expansion of rational functions with integer coefficients.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `numerator / denominator` as univariate integer polynomials, constant
/// term of the denominator a unit so the expansion stays integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    numerator: Vec<BigInt>,
    denominator: Vec<BigInt>,
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficients of `(1 - t^k)^mult`.
fn cyclotomic_power(k: usize, mult: usize) -> Vec<BigInt> {
    let mut f = vec![BigInt::one()];
    let mut base = vec![BigInt::zero(); k + 1];
    base[0] = BigInt::one();
    base[k] = -BigInt::one();
    for _ in 0..mult {
        f = poly_mul(&f, &base);
    }
    f
}

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

impl RationalSeries {
    pub fn new(numerator: Vec<BigInt>, denominator: Vec<BigInt>) -> Result<Self> {
        match denominator.first() {
            Some(c) if c.abs().is_one() => Ok(RationalSeries {
                numerator,
                denominator,
            }),
            _ => Err(Error::NonUnitDenominator),
        }
    }

    /// `numerator / prod (1 - t^k)^mult` over the given `(k, mult)` pairs.
    pub fn with_factors(numerator: Vec<BigInt>, factors: &[(usize, usize)]) -> Self {
        let mut den = vec![BigInt::one()];
        for &(k, mult) in factors {
            den = poly_mul(&den, &cyclotomic_power(k, mult));
        }
        RationalSeries {
            numerator,
            denominator: den,
        }
    }

    /// Multiplies by `prod (1 - t^k)^mult`.
    pub fn times_factors(&self, factors: &[(usize, usize)]) -> Self {
        let mut num = self.numerator.clone();
        for &(k, mult) in factors {
            num = poly_mul(&num, &cyclotomic_power(k, mult));
        }
        RationalSeries {
            numerator: num,
            denominator: self.denominator.clone(),
        }
    }

    /// Divides by `prod (1 - t^k)^mult`.
    pub fn over_factors(&self, factors: &[(usize, usize)]) -> Self {
        let mut den = self.denominator.clone();
        for &(k, mult) in factors {
            den = poly_mul(&den, &cyclotomic_power(k, mult));
        }
        RationalSeries {
            numerator: self.numerator.clone(),
            denominator: den,
        }
    }

    /// Coefficients of `t^0 .. t^n`.
    pub fn expand(&self, n: usize) -> Vec<BigInt> {
        let c0 = &self.denominator[0];
        let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.numerator.get(k).cloned().unwrap_or_default();
            for j in 1..self.denominator.len().min(k + 1) {
                acc -= &self.denominator[j] * &out[k - j];
            }
            // c0 is +-1, so division is multiplication.
            out.push(acc * c0);
        }
        out
    }
}

/// Keeps every `step`-th coefficient, starting at index 0.
pub fn subsequence(coeffs: &[BigInt], step: usize) -> Vec<BigInt> {
    coeffs.iter().step_by(step).cloned().collect()
}
