//! Randomized polynomial identity testing over `GF(p)` (Schwartz-Zippel).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::modp::Modulus;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PitVerdict {
    /// True when every sampled value was zero.
    pub zero: bool,
    /// First point with a nonzero value, if any.
    pub witness: Option<Vec<u64>>,
    pub trials: usize,
    pub degree_bound: u64,
    pub seed: u64,
    /// `log10` of `(degree_bound / p)^trials`, the false-ZERO probability bound.
    pub log10_error_bound: f64,
}

impl PitVerdict {
    pub fn bound_string(&self) -> String {
        format!("<= 10^{:.1}", self.log10_error_bound)
    }
}

/// Samples points of `GF(p)^nvars` from a seeded stream.
pub struct PointSampler {
    rng: ChaCha8Rng,
    modulus: Modulus,
}

impl PointSampler {
    pub fn new(seed: u64, modulus: Modulus) -> Self {
        PointSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            modulus,
        }
    }

    pub fn scalar(&mut self) -> u64 {
        self.rng.gen_range(0..self.modulus.p())
    }

    pub fn point(&mut self, nvars: usize) -> Vec<u64> {
        (0..nvars).map(|_| self.scalar()).collect()
    }
}

/// Tests whether the black box `f` of total degree at most `degree_bound`
/// vanishes identically, by evaluating it at `trials` random points.
pub fn pit_is_zero<F>(
    nvars: usize,
    degree_bound: u64,
    trials: usize,
    seed: u64,
    modulus: Modulus,
    mut f: F,
) -> Result<PitVerdict>
where
    F: FnMut(&[u64]) -> Result<u64>,
{
    if trials == 0 {
        return Err(Error::Invalid("PIT needs at least one trial".into()));
    }
    if degree_bound >= modulus.p() {
        return Err(Error::Invalid(format!(
            "degree bound {degree_bound} is not below the modulus"
        )));
    }
    let mut sampler = PointSampler::new(seed, modulus);
    let per_trial = if degree_bound == 0 {
        f64::NEG_INFINITY
    } else {
        (degree_bound as f64).log10() - (modulus.p() as f64).log10()
    };
    let mut verdict = PitVerdict {
        zero: true,
        witness: None,
        trials,
        degree_bound,
        seed,
        log10_error_bound: per_trial * trials as f64,
    };
    for _ in 0..trials {
        let pt = sampler.point(nvars);
        if f(&pt)? != 0 {
            verdict.zero = false;
            verdict.witness = Some(pt);
            break;
        }
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::poly::IntPoly;

    #[test]
    fn zero_function_is_zero_with_bound() {
        let m = Modulus::default();
        let v = pit_is_zero(3, 4, 8, 1, m, |_| Ok(0)).unwrap();
        assert!(v.zero);
        assert!(v.log10_error_bound < -100.0);
    }

    #[test]
    fn single_variable_has_witness() {
        let m = Modulus::default();
        let v = pit_is_zero(1, 1, 1, 7, m, |x| Ok(x[0])).unwrap();
        assert!(!v.zero);
        assert_ne!(v.witness.unwrap()[0], 0);
    }

    #[test]
    fn binomial_square_identity() {
        let m = Modulus::default();
        let x = IntPoly::var(2, 0);
        let y = IntPoly::var(2, 1);
        let two = IntPoly::constant(2, 2.into());
        let lhs = (&x - &y).pow(2);
        let rhs = &(&x.pow(2) - &(&two * &(&x * &y))) + &y.pow(2);
        assert!((&lhs - &rhs).is_zero());
        let v = pit_is_zero(2, 2, 20, 3, m, |pt| {
            Ok(m.sub(lhs.eval_mod(pt, &m), rhs.eval_mod(pt, &m)))
        })
        .unwrap();
        assert!(v.zero);
    }

    #[test]
    fn errors_propagate() {
        let m = Modulus::default();
        let r = pit_is_zero(1, 1, 3, 0, m, |_| Err(Error::Invalid("boom".into())));
        assert!(r.is_err());
        assert!(pit_is_zero(1, 1, 0, 0, m, |_| Ok(0)).is_err());
    }
}
