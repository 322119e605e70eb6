//! Sparse multivariate polynomials with dense exponent vectors.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so iteration order
//! is lexicographic and two equal polynomials always have identical term
//! lists. Zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::modp::Modulus;
use crate::error::{Error, Result};

/// Ring operations needed for polynomial coefficients.
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Coefficient for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Coefficients that have a well-defined image in `GF(p)`.
pub trait Reduce {
    fn residue(&self, m: &Modulus) -> u64;
}

impl Reduce for BigInt {
    fn residue(&self, m: &Modulus) -> u64 {
        m.from_bigint(self)
    }
}

impl Reduce for i64 {
    fn residue(&self, m: &Modulus) -> u64 {
        m.from_i64(*self)
    }
}

pub type Exponent = Vec<u8>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly<C> {
    nvars: usize,
    terms: BTreeMap<Exponent, C>,
}

pub type IntPoly = SparsePoly<BigInt>;

impl<C: Coefficient> SparsePoly<C> {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    /// The variable with index `i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable {i} out of range for {nvars} variables");
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(e, C::one());
        p
    }

    pub fn monomial(exponent: Exponent, c: C) -> Self {
        let mut p = Self::zero(exponent.len());
        p.add_term(exponent, c);
        p
    }

    /// Linear form `sum coeffs[i] * x_i`.
    pub fn linear(coeffs: &[C]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    /// `x_i - x_j`.
    pub fn difference(nvars: usize, i: usize, j: usize) -> Self {
        Self::var(nvars, i) - Self::var(nvars, j)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, C)>>(nvars: usize, terms: I) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::VariableCount(nvars, e.len()));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[u8]) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    /// Leading term in lexicographic order.
    pub fn leading(&self) -> Option<(&Exponent, &C)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&d| d as u32).sum())
            .max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().map(|&d| d as u32).sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn add_term(&mut self, e: Exponent, c: C) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCount(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut out = Self::zero(self.nvars);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces variable `i` by `images[i]`; all images share one variable count.
    pub fn substitute(&self, images: &[SparsePoly<C>]) -> Result<SparsePoly<C>> {
        if images.len() != self.nvars {
            return Err(Error::VariableCount(self.nvars, images.len()));
        }
        let target = images.first().map_or(0, |p| p.nvars);
        if let Some(bad) = images.iter().find(|p| p.nvars != target) {
            return Err(Error::VariableCount(target, bad.nvars));
        }
        let max_deg: Vec<u8> = (0..self.nvars)
            .map(|i| self.terms.keys().map(|e| e[i]).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<SparsePoly<C>>> = images
            .iter()
            .zip(&max_deg)
            .map(|(img, &d)| {
                let mut v = vec![SparsePoly::one(target)];
                for k in 1..=d as usize {
                    let next = &v[k - 1] * img;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = SparsePoly::zero(target);
        for (e, c) in &self.terms {
            let mut term = SparsePoly::constant(target, c.clone());
            for (i, &d) in e.iter().enumerate() {
                if d > 0 {
                    term = &term * &powers[i][d as usize];
                }
            }
            for (te, tc) in term.terms {
                out.add_term(te, tc);
            }
        }
        Ok(out)
    }

    /// Renames variables: variable `i` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.nvars];
            for (i, &d) in e.iter().enumerate() {
                f[perm[i]] = d;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> SparsePoly<D> {
        let mut out = SparsePoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Evaluates at a point with values in `C`.
    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.nvars);
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &d) in point.iter().zip(e) {
                for _ in 0..d {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }
}

impl<C: Coefficient + Reduce> SparsePoly<C> {
    /// Evaluates at a point of `GF(p)^n`.
    pub fn eval_mod(&self, point: &[u64], m: &Modulus) -> u64 {
        assert_eq!(point.len(), self.nvars);
        let mut acc = 0;
        for (e, c) in &self.terms {
            let mut t = c.residue(m);
            for (&x, &d) in point.iter().zip(e) {
                if d > 0 {
                    t = m.mul(t, m.pow(x, d as u64));
                }
            }
            acc = m.add(acc, t);
        }
        acc
    }
}

impl<'a, C: Coefficient> Add for &'a SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn add(self, rhs: Self) -> SparsePoly<C> {
        self.try_add(rhs).expect("variable count mismatch")
    }
}

impl<'a, C: Coefficient> Sub for &'a SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn sub(self, rhs: Self) -> SparsePoly<C> {
        self.try_sub(rhs).expect("variable count mismatch")
    }
}

impl<'a, C: Coefficient> Mul for &'a SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn mul(self, rhs: Self) -> SparsePoly<C> {
        self.try_mul(rhs).expect("variable count mismatch")
    }
}

impl<C: Coefficient> Add for SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn add(self, rhs: Self) -> SparsePoly<C> {
        &self + &rhs
    }
}

impl<C: Coefficient> Sub for SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn sub(self, rhs: Self) -> SparsePoly<C> {
        &self - &rhs
    }
}

impl<C: Coefficient> Mul for SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn mul(self, rhs: Self) -> SparsePoly<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> Neg for SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn neg(self) -> SparsePoly<C> {
        let nvars = self.nvars;
        SparsePoly {
            nvars,
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<C: Coefficient + fmt::Display> SparsePoly<C> {
    /// Renders with variable names `{prefix}{i+1}`, highest term first.
    pub fn render(&self, prefix: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &d)| d > 0)
                .map(|(i, &d)| {
                    if d == 1 {
                        format!("{prefix}{}", i + 1)
                    } else {
                        format!("{prefix}{}^{d}", i + 1)
                    }
                })
                .collect();
            if vars.is_empty() {
                out.push_str(&mag);
            } else {
                if mag != "1" {
                    out.push_str(&mag);
                    out.push('*');
                }
                out.push_str(&vars.join("*"));
            }
        }
        out
    }
}

impl<C: Coefficient + fmt::Display> fmt::Debug for SparsePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("x"))
    }
}

/// All exponent vectors of total degree `d` in `n` variables, lexicographically descending.
pub fn monomials_of_degree(n: usize, d: usize) -> Vec<Exponent> {
    fn rec(n: usize, d: usize, prefix: &mut Vec<u8>, out: &mut Vec<Exponent>) {
        if prefix.len() == n - 1 {
            prefix.push(d as u8);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k as u8);
            rec(n, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(i: usize) -> IntPoly {
        IntPoly::var(3, i)
    }

    #[test]
    fn difference_of_squares() {
        let lhs = &(&x(0) - &x(1)) * &(&x(0) + &x(1));
        let rhs = &x(0).pow(2) - &x(1).pow(2);
        assert_eq!(lhs, rhs);
        assert_eq!(&lhs + &IntPoly::zero(3), lhs);
    }

    #[test]
    fn vandermonde_product_matches_direct_evaluation() {
        let p = &(&(&x(0) - &x(1)) * &(&x(1) - &x(2))) * &(&x(2) - &x(0));
        let pt: Vec<BigInt> = [1, 2, 3].iter().map(|&v| BigInt::from(v)).collect();
        let direct = (1 - 2) * (2 - 3) * (3 - 1);
        assert_eq!(p.eval(&pt), BigInt::from(direct));
        assert_eq!(p.total_degree(), Some(3));
        assert!(p.is_homogeneous());
    }

    #[test]
    fn mismatched_variable_counts_are_rejected() {
        let a = IntPoly::var(2, 0);
        let b = IntPoly::var(3, 0);
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn substitution_composes() {
        // x0 -> x0 + x1, x1 -> x0 - x1: x0*x1 becomes x0^2 - x1^2
        let two = IntPoly::var(2, 0) * IntPoly::var(2, 1);
        let imgs = vec![
            &IntPoly::var(2, 0) + &IntPoly::var(2, 1),
            &IntPoly::var(2, 0) - &IntPoly::var(2, 1),
        ];
        let got = two.substitute(&imgs).unwrap();
        assert_eq!(got, &IntPoly::var(2, 0).pow(2) - &IntPoly::var(2, 1).pow(2));
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(14, 2).len(), 105);
        assert_eq!(monomials_of_degree(15, 3).len(), 680);
        assert_eq!(monomials_of_degree(14, 4).len(), 2380);
    }

    fn arb_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec((prop::collection::vec(0u8..3, 3), -5i64..=5), 0..6).prop_map(|ts| {
            IntPoly::from_terms(3, ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
        }
    }
}
