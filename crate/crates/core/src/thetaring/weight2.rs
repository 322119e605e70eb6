use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::forms::ThetaForms;
use crate::assets::{Assets, THETA4_EXAMPLE};
use crate::charspace::{parse_theta_chars, Char};
use crate::error::{Error, Result};
use crate::exactalg::texpoly::{linear_coefficients, parse_poly, VarScheme};
use crate::exactalg::{rational, IntPoly, Modulus, PointSampler, PrimeFieldMatrix};
use crate::thomae::d_of_char;

pub fn theta_scheme() -> VarScheme {
    VarScheme::new("\\Theta", 15, 1)
}

#[derive(Clone, Debug, Serialize)]
pub struct Weight2Report {
    pub points: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    pub kernel_is_all_ones: bool,
    /// The sum of all fifteen images expands to zero exactly.
    pub sum_vanishes_exactly: bool,
    pub seed: u64,
}

impl Weight2Report {
    pub fn all_pass(&self) -> bool {
        self.rank == 14 && self.kernel_dim == 1 && self.kernel_is_all_ones && self.sum_vanishes_exactly
    }
}

pub fn weight2_structure(forms: &ThetaForms, points: usize, seed: u64, modulus: Modulus) -> Weight2Report {
    let mut sampler = PointSampler::new(seed, modulus);
    let rows: Vec<Vec<u64>> = (0..points).map(|_| forms.values_mod(&sampler.point(8), &modulus)).collect();
    let mat = PrimeFieldMatrix::from_rows(rows, modulus);
    let rank = mat.rank();
    let kernel = mat.nullspace();
    let kernel_is_all_ones = kernel.len() == 1 && {
        let v = &kernel[0];
        v.iter().all(|&c| c == v[0]) && v[0] != 0
    };
    let mut total = IntPoly::zero(8);
    for set in forms.sets() {
        for &m in set {
            total = &total + &d_of_char(m).expect("even").to_poly();
        }
    }
    Weight2Report {
        points,
        rank,
        kernel_dim: kernel.len(),
        kernel_is_all_ones,
        sum_vanishes_exactly: total.is_zero(),
        seed,
    }
}

const SOLVE_POINTS: usize = 30;

/// Rational `c` with `sum c_i D(Theta_i) = D(theta[m]^4)`, normalised so that
/// the coefficient of the last form is zero; unique modulo `(1, .., 1)`.
pub fn theta4_in_theta(forms: &ThetaForms, m: Char) -> Result<Vec<BigRational>> {
    if m.is_odd() {
        return Err(Error::OddCharacteristic(m.digit()));
    }
    if m.is_zero() {
        return Ok(vec![BigRational::zero(); 15]);
    }
    let target = d_of_char(m)?;
    let images: Vec<Vec<crate::thomae::SignedMonomial>> = forms
        .sets()
        .iter()
        .map(|s| s.iter().map(|&c| d_of_char(c).expect("even")).collect())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e7a);
    let rows: Vec<Vec<BigRational>> = (0..SOLVE_POINTS)
        .map(|_| {
            let x: Vec<BigInt> = (0..8).map(|_| BigInt::from(rng.gen_range(-50i64..=50))).collect();
            let mut row: Vec<BigRational> = images
                .iter()
                .map(|ims| BigRational::from_integer(ims.iter().map(|d| d.eval(&x)).sum()))
                .collect();
            // drop the last column: it is dependent on the others
            row.truncate(14);
            row.push(BigRational::from_integer(target.eval(&x)));
            row
        })
        .collect();
    let (r, pivots) = rational::rref(&rows);
    if pivots.last() == Some(&14) || pivots.len() != 14 {
        return Err(Error::Inconsistent);
    }
    let mut c: Vec<BigRational> = r.iter().take(14).map(|row| row[14].clone()).collect();
    c.push(BigRational::zero());
    Ok(c)
}

/// Checks `sum c_i D(Theta_i) = D(theta[m]^4)` at `points` random points mod p.
pub fn recheck(forms: &ThetaForms, m: Char, c: &[BigRational], points: usize, seed: u64, modulus: Modulus) -> Result<bool> {
    let target = d_of_char(m)?;
    let coeffs: Vec<u64> = c
        .iter()
        .map(|q| {
            let n = modulus.from_bigint(q.numer());
            let d = modulus.from_bigint(q.denom());
            modulus.mul(n, modulus.inv(d).expect("denominator prime to p"))
        })
        .collect();
    let mut sampler = PointSampler::new(seed, modulus);
    for _ in 0..points {
        let x = sampler.point(8);
        let v = forms.values_mod(&x, &modulus);
        let lhs = v.iter().zip(&coeffs).fold(0, |acc, (&a, &b)| modulus.add(acc, modulus.mul(a, b)));
        if lhs != target.eval_mod(&x, &modulus) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, Serialize)]
pub struct Theta4Report {
    pub characteristic: String,
    pub multiplier: i64,
    pub printed_forms: Vec<usize>,
    /// The printed identity holds as an exact polynomial identity.
    pub printed_exact: bool,
    /// The solver's vector differs from the printed one by a multiple of `(1, .., 1)`.
    pub solver_agrees: bool,
    pub all_even_solved: usize,
    pub all_even_rechecked: usize,
}

impl Theta4Report {
    pub fn all_pass(&self) -> bool {
        self.printed_exact && self.solver_agrees && self.all_even_solved == 35 && self.all_even_rechecked == 35
    }
}

fn parse_theta4_example(text: &str) -> Result<(i64, Char, Vec<BigInt>)> {
    let err = |r: &str| Error::Asset { name: THETA4_EXAMPLE.into(), reason: r.into() };
    let (lhs, rhs) = text.split_once('=').ok_or_else(|| err("no equation"))?;
    let m = *parse_theta_chars(lhs)?.first().ok_or_else(|| err("no characteristic"))?;
    let mult: String = lhs
        .trim_start_matches('$')
        .chars()
        .take_while(|c| c.is_ascii_digit())
        .collect();
    let mult = if mult.is_empty() { 1 } else { mult.parse().map_err(|_| err("bad multiplier"))? };
    let rhs = rhs.trim().trim_end_matches('$').trim_end_matches('.');
    let p = parse_poly(rhs, &theta_scheme())?;
    let c = linear_coefficients(&p).ok_or_else(|| err("right side is not linear"))?;
    Ok((mult, m, c))
}

pub fn theta4_suite(forms: &ThetaForms, assets: &Assets, seed: u64, modulus: Modulus) -> Result<Theta4Report> {
    let (mult, m, printed) = parse_theta4_example(&assets.text(THETA4_EXAMPLE)?)?;
    let lhs = d_of_char(m)?.to_poly().scale(&BigInt::from(mult));
    let mut rhs = IntPoly::zero(8);
    for (i, c) in printed.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for &n in &forms.sets()[i] {
            rhs = &rhs + &d_of_char(n)?.to_poly().scale(c);
        }
    }
    let solved = theta4_in_theta(forms, m)?;
    let diff: Vec<BigRational> = printed
        .iter()
        .zip(&solved)
        .map(|(p, s)| BigRational::new(p.clone(), BigInt::from(mult)) - s)
        .collect();
    let solver_agrees = diff.iter().all(|d| d == &diff[0]);
    let mut solved_count = 0;
    let mut rechecked = 0;
    for n in crate::charspace::nonzero_evens() {
        if let Ok(c) = theta4_in_theta(forms, n) {
            solved_count += 1;
            if recheck(forms, n, &c, 50, seed, modulus)? {
                rechecked += 1;
            }
        }
    }
    Ok(Theta4Report {
        characteristic: m.to_string(),
        multiplier: mult,
        printed_forms: printed.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i + 1).collect(),
        printed_exact: lhs == rhs,
        solver_agrees,
        all_even_solved: solved_count,
        all_even_rechecked: rechecked,
    })
}


#[cfg(test)]
mod tests {
    use super::*;

    fn forms() -> ThetaForms {
        ThetaForms::load(&Assets::embedded()).unwrap()
    }

    #[test]
    fn weight_two_rank_and_kernel() {
        let r = weight2_structure(&forms(), 40, 1, Modulus::default());
        assert!(r.all_pass(), "{r:?}");
    }

    #[test]
    fn printed_fourth_power_identity() {
        let r = theta4_suite(&forms(), &Assets::embedded(), 5, Modulus::default()).unwrap();
        assert!(r.all_pass(), "{r:?}");
        assert_eq!(r.multiplier, 6);
        assert_eq!(r.printed_forms, vec![13, 14, 15]);
    }

    #[test]
    fn zero_characteristic_gives_zero_vector() {
        assert!(theta4_in_theta(&forms(), Char::ZERO).unwrap().iter().all(Zero::is_zero));
    }
}
