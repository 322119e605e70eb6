//! Exact 8x8 matrices over the dyadic Gaussian rationals `Z[i][1/2]`, indexed
//! by `F_2^3`, and the finite groups they generate.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_complex::Complex;

use crate::error::{Error, Result};

type Gi = Complex<i64>;

/// `num / 2^shift`, with `shift` minimal, so equal matrices have equal
/// representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussMatrix {
    num: [[Gi; 8]; 8],
    shift: u32,
}

/// Standard dot product on `F_2^3`, elements encoded as 3-bit integers.
pub fn dot(a: usize, b: usize) -> u32 {
    (a & b).count_ones()
}

fn i_pow(k: i64) -> Gi {
    match k.rem_euclid(4) {
        0 => Gi::new(1, 0),
        1 => Gi::new(0, 1),
        2 => Gi::new(-1, 0),
        _ => Gi::new(0, -1),
    }
}

impl GaussMatrix {
    fn normalized(mut num: [[Gi; 8]; 8], mut shift: u32) -> Self {
        while shift > 0 && num.iter().flatten().all(|z| z.re % 2 == 0 && z.im % 2 == 0) {
            for z in num.iter_mut().flatten() {
                *z = Gi::new(z.re / 2, z.im / 2);
            }
            shift -= 1;
        }
        GaussMatrix { num, shift }
    }

    pub fn scalar(z: Gi) -> Self {
        let mut num = [[Gi::new(0, 0); 8]; 8];
        for (i, row) in num.iter_mut().enumerate() {
            row[i] = z;
        }
        Self::normalized(num, 0)
    }

    pub fn identity() -> Self {
        Self::scalar(Gi::new(1, 0))
    }

    /// `((1+i)/2)^3 ((-1)^{a.b})`; the scalar is `(-1+i)/4`.
    pub fn s_tilde() -> Self {
        let mut num = [[Gi::new(0, 0); 8]; 8];
        for (a, row) in num.iter_mut().enumerate() {
            for (b, z) in row.iter_mut().enumerate() {
                let sign = if dot(a, b) % 2 == 0 { 1 } else { -1 };
                *z = Gi::new(-sign, sign);
            }
        }
        Self::normalized(num, 2)
    }

    /// Diagonal matrix with entries `i^{S[a]}` for `S = diag(s)`. The entries
    /// only depend on `s mod 4`.
    pub fn t_tilde(s: [i64; 3]) -> Self {
        let mut num = [[Gi::new(0, 0); 8]; 8];
        for (a, row) in num.iter_mut().enumerate() {
            let value: i64 = (0..3).map(|k| s[k] * ((a >> k) & 1) as i64).sum();
            row[a] = i_pow(value);
        }
        Self::normalized(num, 0)
    }

    pub fn diagonal_signs(signs: [i64; 8]) -> Self {
        let mut num = [[Gi::new(0, 0); 8]; 8];
        for (a, row) in num.iter_mut().enumerate() {
            row[a] = Gi::new(signs[a], 0);
        }
        Self::normalized(num, 0)
    }

    pub fn mul(&self, other: &GaussMatrix) -> GaussMatrix {
        let mut num = [[Gi::new(0, 0); 8]; 8];
        for (i, row) in num.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = (0..8).fold(Gi::new(0, 0), |acc, k| acc + self.num[i][k] * other.num[k][j]);
            }
        }
        Self::normalized(num, self.shift + other.shift)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> GaussMatrix {
        let mut num = [[Gi::new(0, 0); 8]; 8];
        for (i, row) in num.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = self.num[j][i].conj();
            }
        }
        GaussMatrix { num, shift: self.shift }
    }

    pub fn is_unitary(&self) -> bool {
        self.mul(&self.adjoint()) == GaussMatrix::identity()
    }

    /// Inverse of a unitary matrix.
    pub fn inverse(&self) -> Result<GaussMatrix> {
        if !self.is_unitary() {
            return Err(Error::Invalid("matrix is not unitary".into()));
        }
        Ok(self.adjoint())
    }

    /// Entry `(a, b)` as `(re, im, shift)`, meaning `(re + i im) / 2^shift`.
    pub fn entry(&self, a: usize, b: usize) -> (i64, i64, u32) {
        let z = self.num[a][b];
        (z.re, z.im, self.shift)
    }

    pub fn entry_f64(&self, a: usize, b: usize) -> num_complex::Complex64 {
        let z = self.num[a][b];
        let d = (1u64 << self.shift) as f64;
        num_complex::Complex64::new(z.re as f64 / d, z.im as f64 / d)
    }

    /// Whether every row and column has exactly one nonzero entry.
    pub fn is_monomial(&self) -> bool {
        let zero = Gi::new(0, 0);
        (0..8).all(|i| (0..8).filter(|&j| self.num[i][j] != zero).count() == 1)
            && (0..8).all(|j| (0..8).filter(|&i| self.num[i][j] != zero).count() == 1)
    }
}

impl fmt::Debug for GaussMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GaussMatrix / 2^{}", self.shift)?;
        for row in &self.num {
            let cells: Vec<String> = row.iter().map(|z| format!("{}{:+}i", z.re, z.im)).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// A finite matrix group listed by breadth-first closure under right
/// multiplication by the generators.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    elements: HashSet<GaussMatrix>,
}

impl MatrixGroup {
    pub fn closure(generators: &[GaussMatrix], cap: usize) -> Result<Self> {
        let mut elements = HashSet::new();
        let mut queue = VecDeque::new();
        elements.insert(GaussMatrix::identity());
        queue.push_back(GaussMatrix::identity());
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = x.mul(g);
                if !elements.contains(&y) {
                    if elements.len() == cap {
                        return Err(Error::ClosureCap(cap));
                    }
                    elements.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(MatrixGroup { elements })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &GaussMatrix) -> bool {
        self.elements.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &MatrixGroup) -> bool {
        self.elements.iter().all(|g| other.contains(g))
    }

    pub fn elements(&self) -> impl Iterator<Item = &GaussMatrix> {
        self.elements.iter()
    }
}

/// `T(2 e_k)` and `S^-1 T(2 e_k) S` for `k = 1, 2, 3`; these generate the
/// same group as the full families over integral diagonal `S`, since
/// `T(2S)` only depends on `S mod 2` and is multiplicative in `S`.
pub fn n3_prime_generators() -> Result<Vec<GaussMatrix>> {
    let s = GaussMatrix::s_tilde();
    let s_inv = s.inverse()?;
    let mut out = Vec::new();
    for k in 0..3 {
        let mut e = [0i64; 3];
        e[k] = 2;
        let t = GaussMatrix::t_tilde(e);
        out.push(t.clone());
        out.push(s_inv.mul(&t).mul(&s));
    }
    Ok(out)
}

/// The generators of `N_3'` together with `iE`.
pub fn n3_generators() -> Result<Vec<GaussMatrix>> {
    let mut g = n3_prime_generators()?;
    g.push(GaussMatrix::scalar(Gi::new(0, 1)));
    Ok(g)
}

pub const CLOSURE_CAP: usize = 1 << 20;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_tilde_entries_and_unitarity() {
        let s = GaussMatrix::s_tilde();
        assert_eq!(s.entry(0, 0), (-1, 1, 2));
        assert_eq!(s.entry(1, 1), (1, -1, 2));
        assert!(s.is_unitary());
    }

    #[test]
    fn t_tilde_special_cases() {
        assert_eq!(GaussMatrix::t_tilde([0, 0, 0]), GaussMatrix::identity());
        assert_eq!(GaussMatrix::t_tilde([1, 2, 3]), GaussMatrix::t_tilde([5, -2, -1]));
        let t = GaussMatrix::t_tilde([2, 4, 6]);
        for a in 0..8 {
            let (re, im, _) = t.entry(a, a);
            assert!(im == 0 && re.abs() == 1);
        }
    }

    #[test]
    fn conjugated_generators_are_translations() {
        for g in n3_prime_generators().unwrap() {
            assert!(g.is_monomial());
        }
    }

    #[test]
    fn index_two_and_the_scalars() {
        let n3p = MatrixGroup::closure(&n3_prime_generators().unwrap(), CLOSURE_CAP).unwrap();
        let n3 = MatrixGroup::closure(&n3_generators().unwrap(), CLOSURE_CAP).unwrap();
        assert!(n3p.contains(&GaussMatrix::scalar(Gi::new(-1, 0))));
        assert!(!n3p.contains(&GaussMatrix::scalar(Gi::new(0, 1))));
        assert!(n3p.is_subgroup_of(&n3));
        assert_eq!(n3.order(), 2 * n3p.order());
    }

    #[test]
    fn closure_ignores_generator_order() {
        let mut g = n3_prime_generators().unwrap();
        let a = MatrixGroup::closure(&g, CLOSURE_CAP).unwrap();
        g.reverse();
        let b = MatrixGroup::closure(&g, CLOSURE_CAP).unwrap();
        assert_eq!(a.order(), b.order());
        assert!(a.is_subgroup_of(&b));
    }
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct GroupReport {
    pub n3_order: usize,
    pub n3_prime_order: usize,
    pub index: usize,
    pub minus_e_in_n3_prime: bool,
    pub i_e_in_n3_prime: bool,
    pub i_e_in_n3: bool,
    pub n3_prime_in_n3: bool,
    /// Order of the closure with the generators reversed.
    pub reversed_order: usize,
    pub s_tilde_unitary: bool,
}

impl GroupReport {
    pub fn all_pass(&self) -> bool {
        self.minus_e_in_n3_prime
            && !self.i_e_in_n3_prime
            && self.i_e_in_n3
            && self.n3_prime_in_n3
            && self.index == 2
            && self.n3_order == 2 * self.n3_prime_order
            && self.reversed_order == self.n3_prime_order
            && self.s_tilde_unitary
    }
}

pub fn group_report() -> Result<GroupReport> {
    let prime_gens = n3_prime_generators()?;
    let n3p = MatrixGroup::closure(&prime_gens, CLOSURE_CAP)?;
    let n3 = MatrixGroup::closure(&n3_generators()?, CLOSURE_CAP)?;
    let mut reversed = prime_gens.clone();
    reversed.reverse();
    let rev = MatrixGroup::closure(&reversed, CLOSURE_CAP)?;
    let i_e = GaussMatrix::scalar(Gi::new(0, 1));
    Ok(GroupReport {
        n3_order: n3.order(),
        n3_prime_order: n3p.order(),
        index: n3.order() / n3p.order().max(1),
        minus_e_in_n3_prime: n3p.contains(&GaussMatrix::scalar(Gi::new(-1, 0))),
        i_e_in_n3_prime: n3p.contains(&i_e),
        i_e_in_n3: n3.contains(&i_e),
        n3_prime_in_n3: n3p.is_subgroup_of(&n3),
        reversed_order: if rev.is_subgroup_of(&n3p) { rev.order() } else { 0 },
        s_tilde_unitary: GaussMatrix::s_tilde().is_unitary(),
    })
}
