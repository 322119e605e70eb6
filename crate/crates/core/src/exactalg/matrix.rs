//! Dense matrices over `GF(p)`: rank, reduced row echelon form, kernels and
//! linear solves.

use super::modp::Modulus;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFieldMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
    modulus: Modulus,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: PrimeFieldMatrix,
    pub pivots: Vec<usize>,
}

impl PrimeFieldMatrix {
    pub fn zeros(rows: usize, cols: usize, modulus: Modulus) -> Self {
        PrimeFieldMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
            modulus,
        }
    }

    pub fn identity(n: usize, modulus: Modulus) -> Self {
        let mut m = Self::zeros(n, n, modulus);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds from row-major residues; entries are reduced mod p.
    pub fn from_rows(rows: Vec<Vec<u64>>, modulus: Modulus) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.into_iter().map(|v| v % modulus.p()));
        }
        PrimeFieldMatrix {
            rows: r,
            cols: c,
            data,
            modulus,
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>], modulus: Modulus) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| modulus.from_i64(v)).collect())
                .collect(),
            modulus,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.modulus.p();
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.modulus);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Invalid(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let m = self.modulus;
        let mut out = Self::zeros(self.rows, other.cols, m);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = m.add(out.data[idx], m.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let m = self.modulus;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| m.add(acc, m.mul(a, b)))
            })
            .collect()
    }

    /// Row rank by Gaussian elimination. Consumes a copy of the entries.
    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.eliminate(false)
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Echelon {
        let mut work = self.clone();
        let rank = work.eliminate(true);
        let mut pivots = Vec::with_capacity(rank);
        for r in 0..rank {
            let c = (0..work.cols).find(|&c| work.get(r, c) != 0).expect("pivot row");
            pivots.push(c);
        }
        Echelon {
            matrix: work,
            pivots,
        }
    }

    /// In-place forward elimination; with `reduce`, also clears above pivots
    /// and scales pivots to 1. Returns the rank.
    fn eliminate(&mut self, reduce: bool) -> usize {
        let m = self.modulus;
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for c in 0..cols {
            if rank == rows {
                break;
            }
            let Some(pr) = (rank..rows).find(|&r| self.data[r * cols + c] != 0) else {
                continue;
            };
            if pr != rank {
                for j in c..cols {
                    self.data.swap(pr * cols + j, rank * cols + j);
                }
            }
            let inv = m.inv(self.data[rank * cols + c]).expect("nonzero pivot");
            for j in c..cols {
                let idx = rank * cols + j;
                self.data[idx] = m.mul(self.data[idx], inv);
            }
            let (head, tail) = self.data.split_at_mut((rank + 1) * cols);
            let pivot_row = &head[rank * cols + c..(rank + 1) * cols];
            let clear = |row: &mut [u64]| {
                let f = row[0];
                if f == 0 {
                    return;
                }
                let nf = m.neg(f);
                let nfs = m.shoup(nf);
                for (x, &pv) in row.iter_mut().zip(pivot_row) {
                    *x = m.add(*x, m.mul_shoup(pv, nf, nfs));
                }
            };
            for r in 0..rows - rank - 1 {
                clear(&mut tail[r * cols + c..(r + 1) * cols]);
            }
            if reduce {
                let pivot_copy: Vec<u64> = pivot_row.to_vec();
                for r in 0..rank {
                    let row = &mut head[r * cols + c..(r + 1) * cols];
                    let f = row[0];
                    if f == 0 {
                        continue;
                    }
                    let nf = m.neg(f);
                    let nfs = m.shoup(nf);
                    for (x, &pv) in row.iter_mut().zip(&pivot_copy) {
                        *x = m.add(*x, m.mul_shoup(pv, nf, nfs));
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Basis of the right kernel `{x : A x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let m = self.modulus;
        let ech = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (r, &p) in ech.pivots.iter().enumerate() {
                v[p] = m.neg(ech.matrix.get(r, free));
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `A x = b`; free variables are set to zero.
    pub fn solve(&self, b: &[u64]) -> Result<Vec<u64>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1, self.modulus);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.data[r * (self.cols + 1) + c] = self.get(r, c);
            }
            aug.data[r * (self.cols + 1) + self.cols] = b[r] % self.modulus.p();
        }
        let ech = aug.rref();
        if ech.pivots.last() == Some(&self.cols) {
            return Err(Error::Inconsistent);
        }
        let mut x = vec![0; self.cols];
        for (r, &p) in ech.pivots.iter().enumerate() {
            x[p] = ech.matrix.get(r, self.cols);
        }
        Ok(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_and_zero() {
        let m = Modulus::default();
        assert_eq!(PrimeFieldMatrix::identity(3, m).rank(), 3);
        assert_eq!(PrimeFieldMatrix::zeros(4, 6, m).rank(), 0);
    }

    #[test]
    fn vandermonde_is_full_rank_when_determinant_is_nonzero() {
        let m = Modulus::default();
        let nodes = [3u64, 10, 11, 1 << 40, 987_654_321];
        let mut det = 1u64;
        for i in 0..5 {
            for j in i + 1..5 {
                det = m.mul(det, m.sub(nodes[j], nodes[i]));
            }
        }
        assert_ne!(det, 0);
        let rows = nodes
            .iter()
            .map(|&x| (0..5).map(|k| m.pow(x, k)).collect())
            .collect();
        assert_eq!(PrimeFieldMatrix::from_rows(rows, m).rank(), 5);
    }

    #[test]
    fn solve_and_kernel() {
        let m = Modulus::new(101).unwrap();
        let a = PrimeFieldMatrix::from_i64_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]], m);
        assert_eq!(a.rank(), 2);
        let ker = a.nullspace();
        assert_eq!(ker.len(), 1);
        assert!(a.mul_vec(&ker[0]).iter().all(|&v| v == 0));
        let x = a.solve(&[6, 12, 2]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![6, 12, 2]);
        assert!(a.solve(&[1, 0, 0]).is_err());
    }

    #[test]
    fn rref_has_unit_pivots() {
        let m = Modulus::new(13).unwrap();
        let a = PrimeFieldMatrix::from_i64_rows(&[vec![0, 2, 4], vec![3, 1, 0]], m);
        let e = a.rref();
        assert_eq!(e.pivots, vec![0, 1]);
        assert_eq!(e.matrix.get(0, 0), 1);
        assert_eq!(e.matrix.get(1, 1), 1);
        assert_eq!(e.matrix.get(0, 1), 0);
    }

    fn random_low_rank(seed: u64, r: usize, c: usize, k: usize) -> PrimeFieldMatrix {
        let m = Modulus::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut left = PrimeFieldMatrix::zeros(r, k, m);
        let mut right = PrimeFieldMatrix::zeros(k, c, m);
        for i in 0..r {
            for j in 0..k {
                left.set(i, j, rng.gen_range(0..m.p()));
            }
        }
        for i in 0..k {
            for j in 0..c {
                right.set(i, j, rng.gen_range(0..m.p()));
            }
        }
        left.mul(&right).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn rank_is_transpose_invariant(seed in any::<u64>(), r in 1usize..50, c in 1usize..50, k in 0usize..50) {
            let a = random_low_rank(seed, r, c, k);
            let rk = a.rank();
            prop_assert!(rk <= r.min(c).min(k));
            prop_assert_eq!(rk, a.transpose().rank());
        }

        #[test]
        fn rank_is_permutation_invariant(seed in any::<u64>(), r in 1usize..30, c in 1usize..30, k in 0usize..30) {
            let a = random_low_rank(seed, r, c, k);
            let mut rows: Vec<Vec<u64>> = (0..r).map(|i| a.row(i).to_vec()).collect();
            rows.reverse();
            for row in rows.iter_mut() {
                row.rotate_left(seed as usize % c);
            }
            let b = PrimeFieldMatrix::from_rows(rows, a.modulus());
            prop_assert_eq!(a.rank(), b.rank());
        }
    }
}
