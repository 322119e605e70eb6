//! The subset dictionary: even subsets `T` of `B = {1..8}` modulo
//! complement correspond bijectively to characteristics `m(T)`.
//!
//! The map is fixed by its values on `{1,i}` (`i = 2..8`) and on the empty
//! set, together with `m(T1 o T2) = m(T1) + m(T2) + m(empty)` where `o` is
//! symmetric difference. `U = {1,2,3,4}` is sent to zero.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::chars::Char;
use crate::error::{Error, Result};

/// A subset of `{1..8}` stored as a bitmask (bit `i-1` for element `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EvenSubset(u8);

pub const U: EvenSubset = EvenSubset(0b0000_1111);
pub const EMPTY: EvenSubset = EvenSubset(0);
pub const FULL: EvenSubset = EvenSubset(0xff);

impl EvenSubset {
    pub fn from_mask(mask: u8) -> Result<Self> {
        if mask.count_ones() % 2 == 1 {
            return Err(Error::OddSubset(elements_of(mask)));
        }
        Ok(EvenSubset(mask))
    }

    /// From 1-based elements.
    pub fn from_elements(elems: &[u8]) -> Result<Self> {
        let mut mask = 0u8;
        for &e in elems {
            if !(1..=8).contains(&e) {
                return Err(Error::Invalid(format!("element {e} not in 1..8")));
            }
            mask |= 1 << (e - 1);
        }
        Self::from_mask(mask)
    }

    pub fn pair(i: u8, j: u8) -> Result<Self> {
        if i == j || !(1..=8).contains(&i) || !(1..=8).contains(&j) {
            return Err(Error::InvalidPair(i, j));
        }
        Ok(EvenSubset((1 << (i - 1)) | (1 << (j - 1))))
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: u8) -> bool {
        (1..=8).contains(&i) && self.0 >> (i - 1) & 1 == 1
    }

    pub fn elements(self) -> Vec<u8> {
        elements_of(self.0)
    }

    pub fn complement(self) -> Self {
        EvenSubset(!self.0)
    }

    /// Symmetric difference `T1 o T2`.
    pub fn circ(self, other: Self) -> Self {
        EvenSubset(self.0 ^ other.0)
    }

    pub fn intersection_len(self, other: Self) -> usize {
        (self.0 & other.0).count_ones() as usize
    }

    /// The representative of `{T, complement}` that does not contain 8.
    pub fn canonical(self) -> Self {
        if self.contains(8) {
            self.complement()
        } else {
            self
        }
    }

    /// All 128 even subsets in mask order.
    pub fn all() -> impl Iterator<Item = EvenSubset> {
        (0..=255u8).filter(|m| m.count_ones() % 2 == 0).map(EvenSubset)
    }

    /// The 64 canonical representatives.
    pub fn canonical_all() -> impl Iterator<Item = EvenSubset> {
        (0..128u8).filter(|m| m.count_ones() % 2 == 0).map(EvenSubset)
    }
}

fn elements_of(mask: u8) -> Vec<u8> {
    (1..=8).filter(|i| mask >> (i - 1) & 1 == 1).collect()
}

impl fmt::Display for EvenSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.elements().iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", e.join(","))
    }
}

impl fmt::Debug for EvenSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `m({1,i})` for `i = 2..8`.
pub const BASE_PAIRS: [[u8; 6]; 7] = [
    [1, 1, 1, 1, 0, 0],
    [1, 1, 0, 0, 1, 1],
    [0, 0, 1, 1, 1, 1],
    [0, 1, 1, 0, 0, 0],
    [1, 0, 0, 0, 0, 1],
    [0, 0, 0, 1, 1, 0],
    [1, 0, 1, 0, 1, 0],
];

/// `m(empty)`.
pub const BASE_EMPTY: [u8; 6] = [0, 1, 0, 1, 0, 1];

pub fn m_empty() -> Char {
    Char::from_bits(BASE_EMPTY)
}

fn m_one(i: u8) -> Char {
    Char::from_bits(BASE_PAIRS[(i - 2) as usize])
}

/// `m({i,j})` from the base table: `{i,j} = {1,i} o {1,j}` when neither is 1.
pub fn m_pair(i: u8, j: u8) -> Char {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    if a == 1 {
        m_one(b)
    } else {
        m_one(a) + m_one(b) + m_empty()
    }
}

/// `m(T)`, pairing the sorted elements consecutively.
pub fn char_of_subset(t: EvenSubset) -> Char {
    char_of_pairing(&sorted_pairing(t))
}

/// Consecutive pairing of the sorted elements.
pub fn sorted_pairing(t: EvenSubset) -> Vec<(u8, u8)> {
    t.elements().chunks(2).map(|c| (c[0], c[1])).collect()
}

/// `m` of a disjoint union of pairs: `sum m(pairs) + (k-1) m(empty)`.
pub fn char_of_pairing(pairs: &[(u8, u8)]) -> Char {
    if pairs.is_empty() {
        return m_empty();
    }
    let mut acc = Char::ZERO;
    for &(i, j) in pairs {
        acc += m_pair(i, j);
    }
    if pairs.len() % 2 == 0 {
        acc += m_empty();
    }
    acc
}

/// The linear isometry `phi(S) = m(S o U)` from even subsets modulo
/// complement (with form `|S|/2 mod 2`) onto `(F_2^6, q)`.
pub fn phi(s: EvenSubset) -> Char {
    char_of_subset(s.circ(U))
}

/// `m(T_ij)` where `T_ij o U = {i,j}`; always odd.
pub fn t_ij_char(i: u8, j: u8) -> Result<Char> {
    Ok(phi(EvenSubset::pair(i, j)?))
}

/// Inverse of [`char_of_subset`] on canonical representatives.
pub fn subset_of_char(m: Char) -> EvenSubset {
    EvenSubset::canonical_all()
        .find(|&t| char_of_subset(t) == m)
        .expect("subset dictionary is onto")
}

/// Inverse of [`phi`] on canonical representatives.
pub fn phi_inverse(m: Char) -> EvenSubset {
    EvenSubset::canonical_all()
        .find(|&s| phi(s) == m)
        .expect("phi is onto")
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct MumfordReport {
    /// a): fibers are exactly `{T, complement}`.
    pub fibers_ok: bool,
    pub image_size: usize,
    /// b) violations over all ordered pairs of even subsets.
    pub composition_violations: usize,
    /// c) violations over all even subsets.
    pub parity_violations: usize,
    /// d) violations over all ordered pairs.
    pub sign_violations: usize,
    /// Pairs checked for b) and d).
    pub pairs_checked: usize,
    /// Subsets for which two different pair decompositions disagree.
    pub decomposition_violations: usize,
    pub witnesses: Vec<String>,
}

impl MumfordReport {
    pub fn all_pass(&self) -> bool {
        self.fibers_ok
            && self.image_size == 64
            && self.composition_violations == 0
            && self.parity_violations == 0
            && self.sign_violations == 0
            && self.decomposition_violations == 0
    }
}

/// Every perfect matching of the sorted elements.
fn all_pairings(elems: &[u8]) -> Vec<Vec<(u8, u8)>> {
    if elems.is_empty() {
        return vec![Vec::new()];
    }
    let first = elems[0];
    let mut out = Vec::new();
    for k in 1..elems.len() {
        let rest: Vec<u8> = elems[1..].iter().enumerate().filter(|(i, _)| i + 1 != k).map(|(_, &e)| e).collect();
        for mut p in all_pairings(&rest) {
            p.insert(0, (first, elems[k]));
            out.push(p);
        }
    }
    out
}

/// Checks properties a) through d) exhaustively.
pub fn verify_mumford_properties() -> MumfordReport {
    let mut r = MumfordReport::default();
    let all: Vec<EvenSubset> = EvenSubset::all().collect();
    let chars: Vec<Char> = all.iter().map(|&t| char_of_subset(t)).collect();

    r.fibers_ok = true;
    for (a, &ta) in all.iter().enumerate() {
        for (b, &tb) in all.iter().enumerate() {
            let same = chars[a] == chars[b];
            let related = ta == tb || ta == tb.complement();
            if same != related {
                r.fibers_ok = false;
                if r.witnesses.len() < 5 {
                    r.witnesses.push(format!("a) {ta} vs {tb}"));
                }
            }
        }
    }
    let mut image: Vec<Char> = chars.clone();
    image.sort();
    image.dedup();
    r.image_size = image.len();

    let me = m_empty();
    for (a, &ta) in all.iter().enumerate() {
        let size_circ_u = ta.circ(U).len();
        if chars[a].is_even() != (size_circ_u % 4 == 0) {
            r.parity_violations += 1;
            if r.witnesses.len() < 5 {
                r.witnesses.push(format!("c) {ta}"));
            }
        }
        for p in all_pairings(&ta.elements()) {
            if char_of_pairing(&p) != chars[a] {
                r.decomposition_violations += 1;
            }
        }
        for (b, &tb) in all.iter().enumerate() {
            r.pairs_checked += 1;
            let c = char_of_subset(ta.circ(tb));
            if c != chars[a] + chars[b] + me {
                r.composition_violations += 1;
                if r.witnesses.len() < 5 {
                    r.witnesses.push(format!("b) {ta}, {tb}"));
                }
            }
            let lhs = chars[a].e() * chars[b].e() * c.e();
            let rhs = if ta.intersection_len(tb) % 2 == 0 { 1 } else { -1 };
            if lhs != rhs {
                r.sign_violations += 1;
                if r.witnesses.len() < 5 {
                    r.witnesses.push(format!("d) {ta}, {tb}"));
                }
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn base_values() {
        assert_eq!(char_of_subset(EvenSubset::pair(1, 8).unwrap()), Char::from_bits([1, 0, 1, 0, 1, 0]));
        assert_eq!(char_of_subset(U), Char::ZERO);
        let m34 = char_of_subset(EvenSubset::pair(3, 4).unwrap());
        assert_eq!(m34, Char::from_bits([1, 0, 1, 0, 0, 1]));
        assert!(m34.is_odd());
        assert_eq!(char_of_subset(EMPTY), m_empty());
        assert_eq!(char_of_subset(FULL), m_empty());
    }

    #[test]
    fn t12_is_m34() {
        assert_eq!(t_ij_char(1, 2).unwrap(), char_of_subset(EvenSubset::pair(3, 4).unwrap()));
        assert!(t_ij_char(3, 3).is_err());
    }

    #[test]
    fn t_ij_exhausts_odds() {
        let mut v: Vec<Char> = Vec::new();
        for i in 1..=8 {
            for j in i + 1..=8 {
                v.push(t_ij_char(i, j).unwrap());
            }
        }
        assert!(v.iter().all(|m| m.is_odd()));
        v.sort();
        v.dedup();
        assert_eq!(v.len(), 28);
    }

    #[test]
    fn properties_hold() {
        let r = verify_mumford_properties();
        assert!(r.all_pass(), "{:?}", r.witnesses);
        assert_eq!(r.pairs_checked, 1 << 14);
    }

    #[test]
    fn odd_subsets_rejected() {
        assert!(EvenSubset::from_elements(&[1, 2, 3]).is_err());
    }

    proptest! {
        #[test]
        fn phi_is_linear_and_isometric(a in 0u8..=255, b in 0u8..=255) {
            let even = |x: u8| x ^ (((x.count_ones() & 1) as u8) << 7);
            let (a, b) = (even(a), even(b));
            let (sa, sb) = (EvenSubset::from_mask(a).unwrap(), EvenSubset::from_mask(b).unwrap());
            prop_assert_eq!(phi(sa.circ(sb)), phi(sa) + phi(sb));
            prop_assert_eq!(phi(sa).q() as usize, (sa.len() / 2) % 2);
        }
    }
}
