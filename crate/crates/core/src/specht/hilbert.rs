use num_bigint::BigInt;
use serde::Serialize;

use super::tableau::enumerate_tableaux;
use crate::exactalg::poly::monomials_of_degree;
use crate::exactalg::series::ints;
use crate::exactalg::{Modulus, PointSampler, PrimeFieldMatrix, RationalSeries};

/// `(n^5 + 5n^4 + 11n^3 + 13n^2 + 9n + 3) / 3`.
pub fn howe_dim(n: u64) -> u128 {
    let n = n as u128;
    let num = n.pow(5) + 5 * n.pow(4) + 11 * n.pow(3) + 13 * n.pow(2) + 9 * n + 3;
    debug_assert_eq!(num % 3, 0);
    num / 3
}

fn binom(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Sum over `(i_1, .., i_n)` with `sum k i_k = total` of the successive
/// binomials `prod_k C(8 - i_1 - .. - i_{k-1}, i_k)`.
fn composition_sum(n: u64, total: u64) -> u128 {
    fn go(k: u64, n: u64, remaining: u64, free: u128) -> u128 {
        if remaining == 0 {
            return 1;
        }
        if k > n {
            return 0;
        }
        let mut acc = 0;
        let mut i = 0u64;
        while i as u128 <= free && i * k <= remaining {
            acc += binom(free, i as u128) * go(k + 1, n, remaining - i * k, free - i as u128);
            i += 1;
        }
        acc
    }
    go(1, n, total, 8)
}

pub fn deconcini_dim(n: u64) -> u128 {
    if n == 0 {
        return 1;
    }
    composition_sum(n, 4 * n) - composition_sum(n, 4 * n - 1)
}

/// `(1 + 8t + 22t^2 + 8t^3 + t^4) / (1 - t)^6`.
pub fn config_series() -> RationalSeries {
    RationalSeries::with_factors(ints(&[1, 8, 22, 8, 1]), &[(1, 6)])
}

pub fn config_series_coeff(n: usize) -> BigInt {
    config_series().expand(n)[n].clone()
}

/// Outcome of a rank computation certifying a graded dimension.
#[derive(Clone, Debug, Serialize)]
pub struct RankCertificate {
    pub degree: usize,
    pub monomials: usize,
    pub points: usize,
    pub rank: usize,
    pub seed: u64,
    pub prime: u64,
    /// log10 of the chance that the computed rank is below the true
    /// dimension because the points were special.
    pub log10_error_bound: f64,
}

/// Rank of the evaluation matrix of all degree-`n` monomials in `Y_1 .. Y_14`
/// at `points` random configurations over GF(p). With at least as many
/// points as the true dimension, the rank equals it unless the points hit a
/// hypersurface of degree `4n * rank`.
pub fn graded_dim_config(n: usize, points: usize, seed: u64, modulus: Modulus) -> RankCertificate {
    let monos = monomials_of_degree(14, n);
    let (_, standard) = enumerate_tableaux();
    let mut sampler = PointSampler::new(seed, modulus);
    let rows: Vec<Vec<u64>> = (0..points)
        .map(|_| {
            let x = sampler.point(8);
            let y: Vec<u64> = standard.iter().map(|t| t.eval_mod(&x, &modulus)).collect();
            monomial_values(&y, n, &monos, &modulus)
        })
        .collect();
    let rank = if monos.is_empty() { 0 } else { PrimeFieldMatrix::from_rows(rows, modulus).rank() };
    let p = modulus.p() as f64;
    let bound = ((4 * n * rank.max(1)) as f64).log10() - p.log10();
    RankCertificate {
        degree: n,
        monomials: monos.len(),
        points,
        rank,
        seed,
        prime: modulus.p(),
        log10_error_bound: if n == 0 { f64::NEG_INFINITY } else { bound },
    }
}

pub(crate) fn monomial_values(y: &[u64], n: usize, monos: &[Vec<u8>], m: &Modulus) -> Vec<u64> {
    let powers: Vec<Vec<u64>> = y
        .iter()
        .map(|&v| {
            let mut p = vec![1u64; n + 1];
            for e in 1..=n {
                p[e] = m.mul(p[e - 1], v);
            }
            p
        })
        .collect();
    monos
        .iter()
        .map(|e| {
            e.iter()
                .enumerate()
                .filter(|(_, &d)| d > 0)
                .fold(1u64, |acc, (i, &d)| m.mul(acc, powers[i][d as usize]))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count_vectors(n: u64, total: u64) -> u128 {
        // digit vectors d in [0, n]^8 with the given sum
        let mut ways = vec![0u128; (total + 1) as usize];
        ways[0] = 1;
        for _ in 0..8 {
            let mut next = vec![0u128; ways.len()];
            for (s, &w) in ways.iter().enumerate() {
                for d in 0..=n as usize {
                    if s + d < next.len() {
                        next[s + d] += w;
                    }
                }
            }
            ways = next;
        }
        ways[total as usize]
    }

    #[test]
    fn formulas_agree_with_series() {
        let series = config_series().expand(10);
        for n in 0..=10u64 {
            assert_eq!(BigInt::from(howe_dim(n)), series[n as usize], "howe {n}");
            assert_eq!(BigInt::from(deconcini_dim(n)), series[n as usize], "deconcini {n}");
        }
        assert_eq!(howe_dim(6), 5719);
        assert_eq!(deconcini_dim(1), 70 - 56);
    }

    #[test]
    fn deconcini_counts_digit_vectors() {
        for n in 1..=8u64 {
            assert_eq!(deconcini_dim(n), count_vectors(n, 4 * n) - count_vectors(n, 4 * n - 1));
        }
    }

    #[test]
    fn low_degree_ranks() {
        let m = Modulus::default();
        assert_eq!(graded_dim_config(0, 5, 1, m).rank, 1);
        assert_eq!(graded_dim_config(1, 30, 1, m).rank, 14);
        assert_eq!(graded_dim_config(2, 120, 2, m).rank, 91);
    }
}
