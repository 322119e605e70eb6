use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{IntPoly, Modulus};

/// A 2x4 array of the digits 1..8 with increasing top row and every column
/// increasing downwards.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    top: [u8; 4],
    bottom: [u8; 4],
}

impl Tableau {
    pub fn new(top: [u8; 4], bottom: [u8; 4]) -> Result<Self> {
        let mut seen = 0u16;
        for &d in top.iter().chain(&bottom) {
            if !(1..=8).contains(&d) || seen >> d & 1 == 1 {
                return Err(Error::Invalid(format!("tableau entries must be 1..8 once each: {top:?}/{bottom:?}")));
            }
            seen |= 1 << d;
        }
        if !top.windows(2).all(|w| w[0] < w[1]) || !(0..4).all(|k| top[k] < bottom[k]) {
            return Err(Error::Invalid(format!("not a tableau: {top:?}/{bottom:?}")));
        }
        Ok(Tableau { top, bottom })
    }

    /// The tableau whose columns are the given disjoint pairs, together with
    /// the sign relating the product of `(X_a - X_b)` over the pairs as
    /// given to the tableau's Specht polynomial.
    pub fn from_pairs(pairs: [(u8, u8); 4]) -> Result<(Tableau, i8)> {
        let mut sign = 1i8;
        let mut cols: Vec<(u8, u8)> = pairs
            .iter()
            .map(|&(a, b)| {
                if a > b {
                    sign = -sign;
                    (b, a)
                } else {
                    (a, b)
                }
            })
            .collect();
        cols.sort_unstable();
        let t = Tableau::new(
            [cols[0].0, cols[1].0, cols[2].0, cols[3].0],
            [cols[0].1, cols[1].1, cols[2].1, cols[3].1],
        )?;
        Ok((t, sign))
    }

    pub fn top(&self) -> [u8; 4] {
        self.top
    }

    pub fn bottom(&self) -> [u8; 4] {
        self.bottom
    }

    pub fn columns(&self) -> [(u8, u8); 4] {
        [0, 1, 2, 3].map(|k| (self.top[k], self.bottom[k]))
    }

    pub fn is_standard(&self) -> bool {
        self.bottom.windows(2).all(|w| w[0] < w[1])
    }

    /// `prod (X_i - X_j)` over the columns, in 8 variables.
    pub fn polynomial(&self) -> IntPoly {
        self.columns()
            .iter()
            .fold(IntPoly::one(8), |acc, &(i, j)| &acc * &IntPoly::difference(8, (i - 1) as usize, (j - 1) as usize))
    }

    pub fn eval_mod(&self, x: &[u64], m: &Modulus) -> u64 {
        self.columns()
            .iter()
            .fold(1, |acc, &(i, j)| m.mul(acc, m.sub(x[(i - 1) as usize], x[(j - 1) as usize])))
    }

    pub fn eval(&self, x: &[BigInt]) -> BigInt {
        self.columns()
            .iter()
            .fold(BigInt::from(1), |acc, &(i, j)| acc * (&x[(i - 1) as usize] - &x[(j - 1) as usize]))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: String = self.top.iter().map(|d| d.to_string()).collect();
        let b: String = self.bottom.iter().map(|d| d.to_string()).collect();
        write!(f, "{t}/{b}")
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau({self})")
    }
}

fn matchings(rest: &[u8], acc: &mut Vec<(u8, u8)>, out: &mut Vec<[(u8, u8); 4]>) {
    if rest.is_empty() {
        out.push([acc[0], acc[1], acc[2], acc[3]]);
        return;
    }
    let first = rest[0];
    for k in 1..rest.len() {
        let remaining: Vec<u8> = rest[1..].iter().copied().filter(|&x| x != rest[k]).collect();
        acc.push((first, rest[k]));
        matchings(&remaining, acc, out);
        acc.pop();
    }
}

/// All tableaux and the standard ones, both sorted (top row first); the
/// standard list is in the basis order `Y_1 .. Y_14`.
pub fn enumerate_tableaux() -> (Vec<Tableau>, Vec<Tableau>) {
    let mut ms = Vec::new();
    matchings(&[1, 2, 3, 4, 5, 6, 7, 8], &mut Vec::new(), &mut ms);
    let mut all: Vec<Tableau> = ms
        .into_iter()
        .map(|m| Tableau::from_pairs(m).expect("perfect matching").0)
        .collect();
    all.sort();
    all.dedup();
    let standard = all.iter().copied().filter(Tableau::is_standard).collect();
    (all, standard)
}
