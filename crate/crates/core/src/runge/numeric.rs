//! Numerical checks of the duplication formulas and of the Schottky constant.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::gauss::dot;
use super::theta::{f_eval, theta_eval, SiegelPoint};
use crate::charspace::Char;
use crate::error::Result;

pub const DEFAULT_RADIUS: i64 = 12;
pub const VERIFY_TOLERANCE: f64 = 1e-8;
pub const SPREAD_TOLERANCE: f64 = 1e-6;
pub const ODD_TOLERANCE: f64 = 1e-10;

/// All 64 theta constants and the 8 second-kind constants at one point.
pub struct ThetaSample {
    pub point: SiegelPoint,
    pub theta: Vec<Complex64>,
    pub f: Vec<Complex64>,
    /// Largest tail bound among the sums.
    pub tail_bound: f64,
}

impl ThetaSample {
    pub fn new(point: SiegelPoint, radius: i64) -> Result<Self> {
        let mut tail: f64 = 0.0;
        let mut theta = Vec::with_capacity(64);
        for m in Char::all() {
            let t = theta_eval(m, &point, radius)?;
            tail = tail.max(t.tail_bound);
            theta.push(t.value);
        }
        let mut f = Vec::with_capacity(8);
        for a in 0..8 {
            let t = f_eval(a, &point, radius)?;
            tail = tail.max(t.tail_bound);
            f.push(t.value);
        }
        Ok(ThetaSample { point, theta, f, tail_bound: tail })
    }

    pub fn theta_of(&self, m: Char) -> Complex64 {
        self.theta[m.digit() as usize]
    }
}

/// `m'` and `m''` of a characteristic as 3-bit integers, bit `k` holding
/// coordinate `k`.
pub fn halves(m: Char) -> (usize, usize) {
    let b = m.bits();
    let pack = |x: &[u8]| x.iter().enumerate().map(|(k, &v)| (v as usize) << k).sum();
    (pack(&b[..3]), pack(&b[3..]))
}

pub fn from_halves(p: usize, q: usize) -> Char {
    let bit = |x: usize, k: usize| ((x >> k) & 1) as u8;
    Char::from_bits([bit(p, 0), bit(p, 1), bit(p, 2), bit(q, 0), bit(q, 1), bit(q, 2)])
}

fn sign(k: u32) -> f64 {
    if k % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Right side of the squared-theta formula with the printed overall sign
/// `(-1)^{m'.m''}`.
pub fn printed_square(s: &ThetaSample, m: Char) -> Complex64 {
    let (p, q) = halves(m);
    (0..8).map(|a| s.f[p ^ a] * s.f[a]).sum::<Complex64>() * sign(dot(p, q))
}

/// Right side with the sign `(-1)^{a.m''}` inside the sum.
pub fn variant_square(s: &ThetaSample, m: Char) -> Complex64 {
    let (p, q) = halves(m);
    (0..8).map(|a| s.f[p ^ a] * s.f[a] * sign(dot(a, q))).sum()
}

/// `(1/8) sum_c (-1)^{a.c} theta^2[a+b, c]`, the inverse formula for `f_a f_b`.
pub fn product_from_squares(s: &ThetaSample, a: usize, b: usize) -> Complex64 {
    (0..8).map(|c| s.theta_of(from_halves(a ^ b, c)).powi(2) * sign(dot(a, c))).sum::<Complex64>() / 8.0
}

fn relative(x: Complex64, y: Complex64) -> f64 {
    (x - y).norm() / x.norm().max(y.norm()).max(1e-300)
}

#[derive(Clone, Debug, Serialize)]
pub struct DuplicationReport {
    pub points: usize,
    pub radius: i64,
    pub max_tail_bound: f64,
    pub max_odd_theta: f64,
    pub printed_max_residual: f64,
    pub variant_max_residual: f64,
    /// Characteristics where the printed sign fails.
    pub printed_failures: usize,
    pub inverse_formula_max_residual: f64,
    /// `"printed"`, `"variant"`, `"both"` or `"neither"`.
    pub matching: String,
}

impl DuplicationReport {
    pub fn exactly_one_matches(&self) -> bool {
        self.matching == "printed" || self.matching == "variant"
    }
}

pub fn random_samples(points: usize, radius: i64, seed: u64) -> Result<Vec<ThetaSample>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..points).map(|_| ThetaSample::new(SiegelPoint::random(&mut rng), radius)).collect()
}

pub fn duplication_check(samples: &[ThetaSample], radius: i64) -> DuplicationReport {
    let evens: Vec<Char> = Char::all().filter(|m| m.is_even()).collect();
    let (mut printed, mut variant, mut inverse, mut odd, mut tail) = (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let mut printed_bad = std::collections::BTreeSet::new();
    for s in samples {
        tail = tail.max(s.tail_bound);
        for m in Char::all().filter(|m| m.is_odd()) {
            odd = odd.max(s.theta_of(m).norm());
        }
        for &m in &evens {
            let lhs = s.theta_of(m).powi(2);
            let r = relative(lhs, printed_square(s, m));
            if r >= VERIFY_TOLERANCE {
                printed_bad.insert(m);
            }
            printed = printed.max(r);
            variant = variant.max(relative(lhs, variant_square(s, m)));
        }
        for a in 0..8 {
            for b in 0..8 {
                inverse = inverse.max(relative(s.f[a] * s.f[b], product_from_squares(s, a, b)));
            }
        }
    }
    let matching = match (printed < VERIFY_TOLERANCE, variant < VERIFY_TOLERANCE) {
        (true, true) => "both",
        (true, false) => "printed",
        (false, true) => "variant",
        (false, false) => "neither",
    };
    DuplicationReport {
        points: samples.len(),
        radius,
        max_tail_bound: tail,
        max_odd_theta: odd,
        printed_max_residual: printed,
        variant_max_residual: variant,
        printed_failures: printed_bad.len(),
        inverse_formula_max_residual: inverse,
        matching: matching.into(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SchottkyFit {
    pub points: usize,
    pub values: Vec<(f64, f64)>,
    pub mean: (f64, f64),
    pub relative_spread: f64,
    pub distance_to_eight: f64,
}

impl SchottkyFit {
    pub fn constant(&self) -> bool {
        self.relative_spread < SPREAD_TOLERANCE
    }

    pub fn confirms_eight(&self) -> bool {
        self.constant() && self.distance_to_eight < SPREAD_TOLERANCE * 8.0
    }
}

/// `(sum theta^8)^2 / sum theta^16` over the even characteristics.
pub fn schottky_numeric_fit(samples: &[ThetaSample]) -> SchottkyFit {
    let values: Vec<Complex64> = samples
        .iter()
        .map(|s| {
            let (mut s8, mut s16) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
            for m in Char::all().filter(|m| m.is_even()) {
                let t8 = s.theta_of(m).powi(8);
                s8 += t8;
                s16 += t8 * t8;
            }
            s8 * s8 / s16
        })
        .collect();
    let mean = values.iter().sum::<Complex64>() / values.len().max(1) as f64;
    let spread = values.iter().map(|v| (v - mean).norm()).fold(0.0, f64::max) / mean.norm();
    SchottkyFit {
        points: values.len(),
        values: values.iter().map(|v| (v.re, v.im)).collect(),
        mean: (mean.re, mean.im),
        relative_spread: spread,
        distance_to_eight: (mean - Complex64::new(8.0, 0.0)).norm(),
    }
}
