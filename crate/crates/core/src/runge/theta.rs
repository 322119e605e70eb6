//! Truncated lattice sums for theta constants of the first and second kind
//! on the Siegel upper half-space of degree 3.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::charspace::Char;
use crate::error::{Error, Result};

/// A symmetric `Z = X + iY` with `Y` positive definite.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SiegelPoint {
    re: [[f64; 3]; 3],
    im: [[f64; 3]; 3],
}

fn is_symmetric(m: &[[f64; 3]; 3]) -> bool {
    (0..3).all(|i| (0..3).all(|j| m[i][j] == m[j][i]))
}

/// Cholesky test for positive definiteness of a symmetric 3x3 matrix.
fn positive_definite(m: &[[f64; 3]; 3]) -> bool {
    let mut l = [[0.0f64; 3]; 3];
    for i in 0..3 {
        for j in 0..=i {
            let s: f64 = (0..j).map(|k| l[i][k] * l[j][k]).sum();
            if i == j {
                let d = m[i][i] - s;
                if d <= 0.0 {
                    return false;
                }
                l[i][i] = d.sqrt();
            } else {
                l[i][j] = (m[i][j] - s) / l[j][j];
            }
        }
    }
    true
}

impl SiegelPoint {
    pub fn new(re: [[f64; 3]; 3], im: [[f64; 3]; 3]) -> Result<Self> {
        if !is_symmetric(&re) || !is_symmetric(&im) {
            return Err(Error::Invalid("Siegel point must be symmetric".into()));
        }
        if !positive_definite(&im) {
            return Err(Error::Invalid("imaginary part is not positive definite".into()));
        }
        Ok(SiegelPoint { re, im })
    }

    /// `i` times the identity.
    pub fn i_identity() -> Self {
        let mut im = [[0.0; 3]; 3];
        for (k, row) in im.iter_mut().enumerate() {
            row[k] = 1.0;
        }
        SiegelPoint { re: [[0.0; 3]; 3], im }
    }

    /// Real part uniform in `[-1/2, 1/2]`, imaginary part the identity plus
    /// a symmetric perturbation with entries in `[-0.1, 0.1]`.
    pub fn random<R: Rng>(rng: &mut R) -> Self {
        let mut re = [[0.0; 3]; 3];
        let mut im = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in i..3 {
                re[i][j] = rng.gen_range(-0.5..=0.5);
                re[j][i] = re[i][j];
                im[i][j] = f64::from(u8::from(i == j)) + rng.gen_range(-0.1..=0.1);
                im[j][i] = im[i][j];
            }
        }
        SiegelPoint::new(re, im).expect("diagonally dominant")
    }

    /// A lower bound for the smallest eigenvalue of `Y` (Gershgorin).
    pub fn min_eigen_bound(&self) -> f64 {
        (0..3)
            .map(|i| self.im[i][i] - (0..3).filter(|&j| j != i).map(|j| self.im[i][j].abs()).sum::<f64>())
            .fold(f64::INFINITY, f64::min)
    }

    fn quad(m: &[[f64; 3]; 3], v: &[f64; 3]) -> f64 {
        (0..3).map(|i| (0..3).map(|j| m[i][j] * v[i] * v[j]).sum::<f64>()).sum()
    }
}

/// A truncated sum with a bound on the omitted terms.
#[derive(Clone, Copy, Debug)]
pub struct Truncated {
    pub value: Complex64,
    pub radius: i64,
    pub tail_bound: f64,
}

/// Bound for `sum |exp(-c pi Y[v])|` over `v` in a shifted lattice with max
/// norm of the integer part above `radius`: shells of max norm `k` have at
/// most `24 k^2 + 2` points and `Y[v] >= lambda (k - 1/2)^2` on them.
pub fn tail_bound(lambda: f64, c: f64, radius: i64) -> f64 {
    if lambda <= 0.0 {
        return f64::INFINITY;
    }
    let mut total = 0.0;
    for k in radius + 1..radius + 200 {
        let k = k as f64;
        total += (24.0 * k * k + 2.0) * (-c * PI * lambda * (k - 0.5).powi(2)).exp();
    }
    total
}

fn lattice_sum(z: &SiegelPoint, radius: i64, shift: [f64; 3], mut phase: impl FnMut(&[f64; 3]) -> f64, c: f64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for n0 in -radius..=radius {
        for n1 in -radius..=radius {
            for n2 in -radius..=radius {
                let v = [n0 as f64 + shift[0], n1 as f64 + shift[1], n2 as f64 + shift[2]];
                let real = -c * PI * SiegelPoint::quad(&z.im, &v);
                let angle = c * PI * SiegelPoint::quad(&z.re, &v) + phase(&v);
                acc += Complex64::from_polar(real.exp(), angle);
            }
        }
    }
    acc
}

/// `theta[m](Z) = sum_n exp(pi i (Z[n + m'/2] + (n + m'/2) . m''))`.
pub fn theta_eval(m: Char, z: &SiegelPoint, radius: i64) -> Result<Truncated> {
    if radius < 1 {
        return Err(Error::Invalid("radius must be at least 1".into()));
    }
    let b = m.bits();
    let shift = [b[0], b[1], b[2]].map(|x| f64::from(x) / 2.0);
    let dp = [b[3], b[4], b[5]].map(f64::from);
    let value = lattice_sum(z, radius, shift, |v| PI * (v[0] * dp[0] + v[1] * dp[1] + v[2] * dp[2]), 1.0);
    Ok(Truncated { value, radius, tail_bound: tail_bound(z.min_eigen_bound(), 1.0, radius) })
}

/// `f_a(Z) = sum_g exp(2 pi i Z[g + a/2])`, `a` a 3-bit integer.
pub fn f_eval(a: usize, z: &SiegelPoint, radius: i64) -> Result<Truncated> {
    if radius < 1 || a >= 8 {
        return Err(Error::Invalid("radius must be at least 1 and a < 8".into()));
    }
    let shift = [0, 1, 2].map(|k| ((a >> k) & 1) as f64 / 2.0);
    let value = lattice_sum(z, radius, shift, |_| 0.0, 2.0);
    Ok(Truncated { value, radius, tail_bound: tail_bound(z.min_eigen_bound(), 2.0, radius) })
}

/// The one-dimensional sum `sum_n exp(-pi n^2)`.
pub fn jacobi_sum() -> f64 {
    (-50i64..=50).map(|n| (-PI * (n * n) as f64).exp()).sum()
}
