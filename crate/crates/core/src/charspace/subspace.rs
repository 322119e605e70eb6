//! Subspaces of `F_2^6` in reduced echelon form, with a 64-bit membership mask.

use std::collections::BTreeSet;

use super::chars::Char;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Subspace {
    /// Reduced echelon basis, ordered by decreasing leading bit.
    basis: Vec<Char>,
    members: u64,
}

impl Subspace {
    pub fn zero() -> Self {
        Subspace {
            basis: Vec::new(),
            members: 1,
        }
    }

    pub fn span(gens: &[Char]) -> Self {
        let mut basis: Vec<u8> = Vec::new();
        for g in gens {
            let mut v = g.digit();
            for &b in &basis {
                let lead = 7 - b.leading_zeros();
                if v >> lead & 1 == 1 {
                    v ^= b;
                }
            }
            if v == 0 {
                continue;
            }
            let lead = 7 - v.leading_zeros();
            for b in basis.iter_mut() {
                if *b >> lead & 1 == 1 {
                    *b ^= v;
                }
            }
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
        let mut members = 0u64;
        for mask in 0..1u32 << basis.len() {
            let v = basis
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .fold(0u8, |acc, (_, &b)| acc ^ b);
            members |= 1 << v;
        }
        Subspace {
            basis: basis.into_iter().map(|b| Char::from_digit(b).expect("6-bit")).collect(),
            members,
        }
    }

    pub fn basis(&self) -> &[Char] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn mask(&self) -> u64 {
        self.members
    }

    pub fn contains(&self, m: Char) -> bool {
        self.members >> m.digit() & 1 == 1
    }

    pub fn elements(&self) -> Vec<Char> {
        Char::all().filter(|&m| self.contains(m)).collect()
    }

    pub fn nonzero_elements(&self) -> Vec<Char> {
        Char::all().filter(|&m| !m.is_zero() && self.contains(m)).collect()
    }

    pub fn is_totally_singular(&self) -> bool {
        self.elements().iter().all(|m| m.is_even())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.members & !other.members == 0
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let common: Vec<Char> = Char::all()
            .filter(|&m| self.contains(m) && other.contains(m))
            .collect();
        Subspace::span(&common)
    }

    /// The coset `a + self` as a sorted list.
    pub fn coset(&self, a: Char) -> Vec<Char> {
        let mut v: Vec<Char> = self.elements().into_iter().map(|m| m + a).collect();
        v.sort();
        v
    }

    /// One representative per coset, the smallest element of each.
    pub fn coset_representatives(&self) -> Vec<Char> {
        let mut seen = 0u64;
        let mut reps = Vec::new();
        for a in Char::all() {
            if seen >> a.digit() & 1 == 1 {
                continue;
            }
            reps.push(a);
            for m in self.coset(a) {
                seen |= 1 << m.digit();
            }
        }
        reps
    }

    pub fn orthogonal_complement(&self) -> Subspace {
        let perp: Vec<Char> = Char::all()
            .filter(|&n| self.basis.iter().all(|&b| b.pairing(n) == 0))
            .collect();
        Subspace::span(&perp)
    }
}

/// All totally singular subspaces of the given dimension, sorted.
pub fn singular_subspaces(d: usize) -> Vec<Subspace> {
    let singular: Vec<Char> = Char::all().filter(|m| m.is_even() && !m.is_zero()).collect();
    let mut found = BTreeSet::new();
    let mut current = vec![Subspace::zero()];
    for _ in 0..d {
        let mut next = BTreeSet::new();
        for s in &current {
            for &m in &singular {
                if s.contains(m) || s.basis.iter().any(|&b| b.pairing(m) == 1) {
                    continue;
                }
                let mut gens = s.basis.clone();
                gens.push(m);
                next.insert(Subspace::span(&gens));
            }
        }
        current = next.into_iter().collect();
    }
    found.extend(current);
    found.into_iter().collect()
}

/// Totally singular subspaces found by brute force over all spans of `d`
/// vectors; independent of [`singular_subspaces`].
pub fn singular_subspaces_brute(d: usize) -> usize {
    let mut set = BTreeSet::new();
    fn rec(start: u8, left: usize, gens: &mut Vec<Char>, d: usize, set: &mut BTreeSet<u64>) {
        if left == 0 {
            let s = Subspace::span(gens);
            if s.dim() == d && s.is_totally_singular() {
                set.insert(s.mask());
            }
            return;
        }
        for v in start..64 {
            gens.push(Char::from_digit(v).expect("6-bit"));
            rec(v + 1, left - 1, gens, d, set);
            gens.pop();
        }
    }
    rec(1, d, &mut Vec::new(), d, &mut set);
    set.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singular_counts() {
        assert_eq!(singular_subspaces(1).len(), 35);
        assert_eq!(singular_subspaces(3).len(), 30);
        let planes = singular_subspaces(2);
        assert_eq!(planes.len(), singular_subspaces_brute(2));
        assert!(planes.iter().all(|p| p.dim() == 2 && p.is_totally_singular()));
    }

    #[test]
    fn span_is_canonical() {
        let a = Char::from_digit(6).unwrap();
        let b = Char::from_digit(8).unwrap();
        assert_eq!(Subspace::span(&[a, b]), Subspace::span(&[a + b, b, a]));
        assert_eq!(Subspace::span(&[a, b]).elements().len(), 4);
    }

    #[test]
    fn complement_dimension() {
        for s in singular_subspaces(2) {
            let p = s.orthogonal_complement();
            assert_eq!(p.dim(), 4);
            assert!(s.is_subspace_of(&p));
        }
    }
}
