use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::tableau::{enumerate_tableaux, Tableau};
use crate::error::{Error, Result};
use crate::exactalg::{rational, IntPoly};

const SOLVE_POINTS: usize = 20;
const CHECK_POINTS: usize = 10;
const POINT_SEED: u64 = 0x59_5e_ed;

/// The standard Specht polynomials `Y_1 .. Y_14` in `X_1 .. X_8`.
#[derive(Clone, Debug)]
pub struct SpechtBasis {
    tableaux: Vec<Tableau>,
    polys: Vec<IntPoly>,
}

impl SpechtBasis {
    pub fn standard() -> Self {
        let (_, tableaux) = enumerate_tableaux();
        let polys = tableaux.iter().map(Tableau::polynomial).collect();
        SpechtBasis { tableaux, polys }
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.polys
    }

    /// `Y_{i+1}`.
    pub fn y(&self, i: usize) -> &IntPoly {
        &self.polys[i]
    }

    /// Coordinates of a degree-4 polynomial in the basis. Solved from
    /// evaluations at integer points, residual-checked at further points and
    /// finally confirmed by exact re-expansion.
    pub fn express(&self, p: &IntPoly) -> Result<Vec<BigRational>> {
        if p.nvars() != 8 {
            return Err(Error::VariableCount(8, p.nvars()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(POINT_SEED);
        let mut point = || -> Vec<BigInt> { (0..8).map(|_| BigInt::from(rng.gen_range(-64i64..=64))).collect() };
        let rows: Vec<Vec<BigRational>> = (0..SOLVE_POINTS)
            .map(|_| {
                let x = point();
                let mut row: Vec<BigRational> =
                    self.tableaux.iter().map(|t| BigRational::from_integer(t.eval(&x))).collect();
                row.push(BigRational::from_integer(p.eval(&x)));
                row
            })
            .collect();
        let (r, pivots) = rational::rref(&rows);
        if pivots.last() == Some(&14) {
            return Err(Error::Invalid("polynomial lies outside the Specht span".into()));
        }
        if pivots.len() != 14 {
            return Err(Error::Invalid("evaluation points are degenerate".into()));
        }
        let coeffs: Vec<BigRational> = r.iter().map(|row| row[14].clone()).collect();
        for _ in 0..CHECK_POINTS {
            let x = point();
            let lhs: BigRational = self
                .tableaux
                .iter()
                .zip(&coeffs)
                .map(|(t, c)| c * BigRational::from_integer(t.eval(&x)))
                .sum();
            if lhs != BigRational::from_integer(p.eval(&x)) {
                return Err(Error::Invalid("polynomial lies outside the Specht span".into()));
            }
        }
        let lcm = coeffs.iter().fold(BigInt::one(), |l, c| num_integer::Integer::lcm(&l, c.denom()));
        let combo = self.polys.iter().zip(&coeffs).fold(IntPoly::zero(8), |acc, (y, c)| {
            let scaled = (c * BigRational::from_integer(lcm.clone())).to_integer();
            &acc + &y.scale(&scaled)
        });
        if combo != p.scale(&lcm) {
            return Err(Error::Invalid("re-expansion mismatch".into()));
        }
        Ok(coeffs)
    }
}

/// Integer coordinates of every tableau's Specht polynomial, in the order of
/// [`enumerate_tableaux`].
pub fn tableau_coordinates() -> &'static [(Tableau, [i64; 14])] {
    static CELL: OnceLock<Vec<(Tableau, [i64; 14])>> = OnceLock::new();
    CELL.get_or_init(|| {
        let basis = SpechtBasis::standard();
        let (all, _) = enumerate_tableaux();
        all.into_iter()
            .map(|t| {
                let c = basis.express(&t.polynomial()).expect("every tableau lies in the span");
                let mut v = [0i64; 14];
                for (slot, x) in v.iter_mut().zip(&c) {
                    assert!(x.is_integer(), "non-integral coordinate for {t}");
                    *slot = i64::try_from(x.to_integer()).expect("small coordinate");
                }
                (t, v)
            })
            .collect()
    })
}

/// Coordinates of the Specht polynomial of `t`.
pub fn coordinates_of(t: &Tableau) -> [i64; 14] {
    let table = tableau_coordinates();
    let k = table.binary_search_by(|(u, _)| u.cmp(t)).expect("tableau is enumerated");
    table[k].1
}
