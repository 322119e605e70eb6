//! Characteristic functions of maximal singular subspaces and the linear
//! and quadratic relations among them.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::chars::Char;
use super::subspace::{singular_subspaces, Subspace};
use crate::exactalg::rational;

/// The 0/1 indicator of a subspace on the 64 characteristics.
pub fn chi(s: &Subspace) -> [i64; 64] {
    let mut v = [0; 64];
    for m in Char::all() {
        if s.contains(m) {
            v[m.digit() as usize] = 1;
        }
    }
    v
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointRelations {
    pub point: Char,
    pub containing_maximals: usize,
    /// Orderings of the six maximal subspaces that satisfy each relation.
    pub linear_orderings: usize,
    pub quadratic_orderings: usize,
    pub both_orderings: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChiReport {
    pub difference_span_dim: usize,
    pub points: Vec<PointRelations>,
}

impl ChiReport {
    pub fn all_pass(&self) -> bool {
        self.difference_span_dim == 14
            && self.points.len() == 35
            && self
                .points
                .iter()
                .all(|p| p.containing_maximals == 6 && p.linear_orderings > 0 && p.quadratic_orderings > 0)
    }

    /// The first point lacking a valid ordering, if any.
    pub fn offending_point(&self) -> Option<Char> {
        self.points
            .iter()
            .find(|p| p.containing_maximals != 6 || p.linear_orderings == 0 || p.quadratic_orderings == 0)
            .map(|p| p.point)
    }
}

fn permutations6() -> Vec<[usize; 6]> {
    let mut out = Vec::with_capacity(720);
    let mut cur = [0usize, 1, 2, 3, 4, 5];
    loop {
        out.push(cur);
        let Some(i) = (0..5).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..6).rev().find(|&j| cur[j] > cur[i]).expect("successor");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

fn linear_holds(c: &[&[i64; 64]; 6]) -> bool {
    (0..64).all(|x| c[0][x] - c[1][x] + c[2][x] - c[3][x] + c[4][x] - c[5][x] == 0)
}

fn quadratic_holds(c: &[&[i64; 64]; 6]) -> bool {
    (0..64).all(|x| (c[0][x] - c[1][x]) * (c[0][x] - c[3][x]) == (c[2][x] - c[5][x]) * (c[4][x] - c[5][x]))
}

pub fn chi_layer() -> ChiReport {
    let maximals = singular_subspaces(3);
    let chis: Vec<[i64; 64]> = maximals.iter().map(chi).collect();
    let diffs: Vec<Vec<i64>> = chis[1..]
        .iter()
        .map(|c| c.iter().zip(&chis[0]).map(|(a, b)| a - b).collect())
        .collect();
    let rows: Vec<Vec<BigRational>> = rational::to_rational_rows(&diffs);
    let difference_span_dim = rational::rank(&rows);

    let perms = permutations6();
    let points = Char::all()
        .filter(|m| m.is_even() && !m.is_zero())
        .map(|a| {
            let through: Vec<&[i64; 64]> = maximals
                .iter()
                .zip(&chis)
                .filter(|(s, _)| s.contains(a))
                .map(|(_, c)| c)
                .collect();
            let mut p = PointRelations {
                point: a,
                containing_maximals: through.len(),
                linear_orderings: 0,
                quadratic_orderings: 0,
                both_orderings: 0,
            };
            if through.len() == 6 {
                for perm in &perms {
                    let c = perm.map(|i| through[i]);
                    let l = linear_holds(&c);
                    let q = quadratic_holds(&c);
                    p.linear_orderings += l as usize;
                    p.quadratic_orderings += q as usize;
                    p.both_orderings += (l && q) as usize;
                }
            }
            p
        })
        .collect();
    ChiReport {
        difference_span_dim,
        points,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi_relations() {
        let r = chi_layer();
        assert_eq!(r.difference_span_dim, 14);
        assert_eq!(r.points.len(), 35);
        assert!(r.all_pass(), "{:?}", r.offending_point());
    }
}
