//! Permutations of `{1..8}` and their action on characteristics.

use std::fmt;
use std::sync::OnceLock;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::chars::Char;
use super::mumford::{char_of_subset, phi, phi_inverse, EvenSubset, U};

/// A permutation of `{1..8}`; stored 0-based, `images[i]` is the image of `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm([u8; 8]);

impl Perm {
    pub fn identity() -> Self {
        Perm([0, 1, 2, 3, 4, 5, 6, 7])
    }

    /// From 1-based images: `images[i-1] = sigma(i)`.
    pub fn from_images(images: [u8; 8]) -> Option<Self> {
        let mut seen = 0u8;
        let mut p = [0u8; 8];
        for (i, &v) in images.iter().enumerate() {
            if !(1..=8).contains(&v) || seen >> (v - 1) & 1 == 1 {
                return None;
            }
            seen |= 1 << (v - 1);
            p[i] = v - 1;
        }
        Some(Perm(p))
    }

    /// The cycle `(c0 c1 ... ck)` on 1-based points.
    pub fn cycle(points: &[u8]) -> Self {
        let mut p = Self::identity().0;
        for k in 0..points.len() {
            let from = points[k] - 1;
            let to = points[(k + 1) % points.len()] - 1;
            p[from as usize] = to;
        }
        Perm(p)
    }

    pub fn transposition(i: u8, j: u8) -> Self {
        Self::cycle(&[i, j])
    }

    /// 1-based image of a 1-based point.
    pub fn apply(&self, i: u8) -> u8 {
        self.0[(i - 1) as usize] + 1
    }

    /// 0-based image of a 0-based index.
    pub fn apply0(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images0(&self) -> [u8; 8] {
        self.0
    }

    /// `self o other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        let mut p = [0u8; 8];
        for (i, slot) in p.iter_mut().enumerate() {
            *slot = self.0[other.0[i] as usize];
        }
        Perm(p)
    }

    pub fn inverse(&self) -> Perm {
        let mut p = [0u8; 8];
        for i in 0..8 {
            p[self.0[i] as usize] = i as u8;
        }
        Perm(p)
    }

    pub fn sign(&self) -> i8 {
        let mut inv = 0;
        for i in 0..8 {
            for j in i + 1..8 {
                if self.0[i] > self.0[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    pub fn apply_subset(&self, t: EvenSubset) -> EvenSubset {
        let mut mask = 0u8;
        for i in 0..8 {
            if t.mask() >> i & 1 == 1 {
                mask |= 1 << self.0[i];
            }
        }
        EvenSubset::from_mask(mask).expect("size preserved")
    }

    /// All 40320 permutations in lexicographic order of their image lists.
    pub fn all() -> Vec<Perm> {
        let mut out = Vec::with_capacity(40320);
        let mut cur = [0u8, 1, 2, 3, 4, 5, 6, 7];
        loop {
            out.push(Perm(cur));
            let Some(i) = (0..7).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..8).rev().find(|&j| cur[j] > cur[i]).expect("successor");
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }

    pub fn random<R: Rng>(rng: &mut R) -> Perm {
        let mut p = [0u8, 1, 2, 3, 4, 5, 6, 7];
        for i in (1..8).rev() {
            let j = rng.gen_range(0..=i);
            p.swap(i, j);
        }
        Perm(p)
    }

    /// `(1 2)` and `(1 2 ... 8)`, which generate the symmetric group.
    pub fn generators() -> [Perm; 2] {
        [Perm::transposition(1, 2), Perm::cycle(&[1, 2, 3, 4, 5, 6, 7, 8])]
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "[{}]", v.join(" "))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

/// A linear map of `F_2^6`, stored by the images of the unit vectors
/// (`cols[b]` is the image of the characteristic with only bit `b` set).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct F2Matrix {
    cols: [Char; 6],
}

impl F2Matrix {
    pub fn identity() -> Self {
        let mut cols = [Char::ZERO; 6];
        for (b, c) in cols.iter_mut().enumerate() {
            *c = Char::from_digit(1 << b).expect("6-bit");
        }
        F2Matrix { cols }
    }

    pub fn from_columns(cols: [Char; 6]) -> Self {
        F2Matrix { cols }
    }

    pub fn apply(&self, m: Char) -> Char {
        let mut acc = Char::ZERO;
        for b in 0..6 {
            if m.digit() >> b & 1 == 1 {
                acc += self.cols[b];
            }
        }
        acc
    }

    /// `self * other`.
    pub fn mul(&self, other: &F2Matrix) -> F2Matrix {
        let mut cols = [Char::ZERO; 6];
        for (b, c) in cols.iter_mut().enumerate() {
            *c = self.apply(other.cols[b]);
        }
        F2Matrix { cols }
    }

    pub fn preserves_q(&self) -> bool {
        Char::all().all(|m| self.apply(m).q() == m.q())
    }

    /// Rows in `m1..m6` order, each entry 0/1.
    pub fn rows(&self) -> [[u8; 6]; 6] {
        let mut r = [[0u8; 6]; 6];
        for (row, slot) in r.iter_mut().enumerate() {
            for (col, entry) in slot.iter_mut().enumerate() {
                let image = self.cols[5 - col];
                *entry = image.bits()[row];
            }
        }
        r
    }
}

fn basis_preimages() -> &'static [EvenSubset; 6] {
    static CELL: OnceLock<[EvenSubset; 6]> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = [EvenSubset::from_mask(0).expect("empty"); 6];
        for (b, slot) in out.iter_mut().enumerate() {
            *slot = phi_inverse(Char::from_digit(1 << b).expect("6-bit"));
        }
        out
    })
}

/// The orthogonal matrix of `sigma`: `M phi(S) = phi(sigma S)`, equivalently
/// `M m(T) = m(sigma(T o U) o U)`. It agrees with `m(T) -> m(sigma T)` exactly
/// when `sigma` maps `U` to `U` or to its complement.
pub fn perm_to_orthogonal(sigma: &Perm) -> F2Matrix {
    let pre = basis_preimages();
    let mut cols = [Char::ZERO; 6];
    for (b, c) in cols.iter_mut().enumerate() {
        *c = phi(sigma.apply_subset(pre[b]));
    }
    F2Matrix { cols }
}

/// Whether `m(T) -> m(sigma T)` is a linear map of `F_2^6`.
pub fn literal_action_is_linear(sigma: &Perm) -> bool {
    let table: Vec<(Char, Char)> = EvenSubset::canonical_all()
        .map(|t| (char_of_subset(t), char_of_subset(sigma.apply_subset(t))))
        .collect();
    let mut f = [Char::ZERO; 64];
    for &(m, im) in &table {
        f[m.digit() as usize] = im;
    }
    if !f[0].is_zero() {
        return false;
    }
    Char::all().all(|m| Char::all().all(|n| f[(m + n).digit() as usize] == f[m.digit() as usize] + f[n.digit() as usize]))
}

/// Number of linear maps of `F_2^6` preserving `q`, by backtracking over
/// images of the unit vectors.
pub fn orthogonal_group_order() -> usize {
    fn rec(b: usize, images: &mut Vec<Char>) -> usize {
        if b == 6 {
            return 1;
        }
        let e = Char::from_digit(1 << b).expect("6-bit");
        let mut count = 0;
        for v in Char::all() {
            if v.q() != e.q() {
                continue;
            }
            let ok = images.iter().enumerate().all(|(a, &w)| {
                let ea = Char::from_digit(1 << a).expect("6-bit");
                w.pairing(v) == ea.pairing(e)
            });
            if ok {
                images.push(v);
                count += rec(b + 1, images);
                images.pop();
            }
        }
        count
    }
    rec(0, &mut Vec::new())
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct OrthogonalReport {
    pub perms_checked: usize,
    pub q_violations: usize,
    pub distinct_images: usize,
    pub orthogonal_group_order: usize,
    pub homomorphism_pairs_checked: usize,
    pub homomorphism_violations: usize,
    pub t_ij_violations: usize,
    /// Permutations for which the literal rule `m(T) -> m(sigma T)` is linear.
    pub literal_linear_count: usize,
}

impl OrthogonalReport {
    pub fn all_pass(&self) -> bool {
        self.q_violations == 0
            && self.distinct_images == self.perms_checked
            && self.distinct_images == self.orthogonal_group_order
            && self.homomorphism_violations == 0
            && self.t_ij_violations == 0
    }
}

/// Checks the isomorphism onto the orthogonal group: every image preserves
/// `q`, the map is injective and its image has the order of the full group,
/// and it is multiplicative on `random_pairs` random pairs plus all pairs of
/// generators.
pub fn verify_orthogonal_isomorphism<R: Rng>(rng: &mut R, random_pairs: usize) -> OrthogonalReport {
    let mut r = OrthogonalReport::default();
    let perms = Perm::all();
    let mut images = Vec::with_capacity(perms.len());
    for p in &perms {
        let m = perm_to_orthogonal(p);
        if !m.preserves_q() {
            r.q_violations += 1;
        }
        images.push(m);
    }
    r.perms_checked = perms.len();
    images.sort();
    images.dedup();
    r.distinct_images = images.len();
    r.orthogonal_group_order = orthogonal_group_order();

    let mut pairs: Vec<(Perm, Perm)> = Vec::new();
    for a in Perm::generators() {
        for b in Perm::generators() {
            pairs.push((a, b));
        }
    }
    for _ in 0..random_pairs {
        pairs.push((Perm::random(rng), Perm::random(rng)));
    }
    for (a, b) in &pairs {
        r.homomorphism_pairs_checked += 1;
        if perm_to_orthogonal(&a.compose(b)) != perm_to_orthogonal(a).mul(&perm_to_orthogonal(b)) {
            r.homomorphism_violations += 1;
        }
        let m = perm_to_orthogonal(a);
        for i in 1..=8u8 {
            for j in i + 1..=8 {
                let t = super::mumford::t_ij_char(i, j).expect("pair");
                let t2 = super::mumford::t_ij_char(a.apply(i), a.apply(j)).expect("pair");
                if m.apply(t) != t2 {
                    r.t_ij_violations += 1;
                }
            }
        }
    }
    r.literal_linear_count = perms.iter().filter(|p| {
        let image = p.apply_subset(U);
        (image == U || image == U.complement()) && literal_action_is_linear(p)
    }).count();
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn perm_basics() {
        assert_eq!(Perm::all().len(), 40320);
        let c = Perm::cycle(&[1, 2, 3]);
        assert_eq!(c.apply(1), 2);
        assert_eq!(c.apply(3), 1);
        assert_eq!(c.compose(&c.inverse()), Perm::identity());
        assert_eq!(Perm::transposition(1, 2).sign(), -1);
        assert_eq!(c.sign(), 1);
        assert!(Perm::from_images([1, 1, 2, 3, 4, 5, 6, 7]).is_none());
    }

    #[test]
    fn identity_maps_to_identity() {
        assert_eq!(perm_to_orthogonal(&Perm::identity()), F2Matrix::identity());
    }

    #[test]
    fn transposition_fixes_zero_and_permutes_odds_like_pairs() {
        let s = Perm::transposition(1, 2);
        let m = perm_to_orthogonal(&s);
        assert_eq!(m.apply(Char::ZERO), Char::ZERO);
        for i in 1..=8u8 {
            for j in i + 1..=8 {
                let t = super::super::mumford::t_ij_char(i, j).unwrap();
                let t2 = super::super::mumford::t_ij_char(s.apply(i), s.apply(j)).unwrap();
                assert_eq!(m.apply(t), t2);
            }
        }
    }

    #[test]
    fn literal_rule_is_affine_off_the_stabilizer() {
        assert!(literal_action_is_linear(&Perm::transposition(1, 2)));
        assert!(!literal_action_is_linear(&Perm::transposition(4, 5)));
    }

    #[test]
    fn isomorphism_report() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let r = verify_orthogonal_isomorphism(&mut rng, 50);
        assert!(r.all_pass(), "{r:?}");
        assert_eq!(r.distinct_images, 40320);
        assert_eq!(r.literal_linear_count, 1152);
    }
}
