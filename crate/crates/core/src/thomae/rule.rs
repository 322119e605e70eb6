use std::sync::OnceLock;

use super::monomial::SignedMonomial;
use crate::charspace::mumford::{m_empty, subset_of_char, U};
use crate::charspace::{char_of_subset, Char, EvenSubset};
use crate::error::{Error, Result};

/// The image of `theta[m(T)]^4`: zero unless `|T o U| = 4`, otherwise
/// `e(m(T), m(empty)) (-1)^{|T n U|}` times the discriminant divided by the
/// cross differences `X_i - X_j`, `i` in `T o U`, `j` outside it.
pub fn d_of_subset(t: EvenSubset) -> SignedMonomial {
    let s = t.circ(U);
    if s.len() != 4 {
        return SignedMonomial::zero();
    }
    let mut sign = char_of_subset(t).e_pair(m_empty());
    if t.intersection_len(U) % 2 == 1 {
        sign = -sign;
    }
    let mut factors = Vec::with_capacity(12);
    for i in 1..=8u8 {
        for j in i + 1..=8 {
            if s.contains(i) == s.contains(j) {
                factors.push((i, j));
            } else if s.contains(j) {
                // cross factor (X_j - X_i) = -W_ij removed from the discriminant
                sign = -sign;
            }
        }
    }
    SignedMonomial::new(sign, factors)
}

pub fn d_of_char(m: Char) -> Result<SignedMonomial> {
    if m.is_odd() {
        return Err(Error::OddCharacteristic(m.digit()));
    }
    static IMAGES: OnceLock<Vec<SignedMonomial>> = OnceLock::new();
    let table = IMAGES.get_or_init(|| {
        Char::all()
            .map(|m| if m.is_even() { d_of_subset(subset_of_char(m)) } else { SignedMonomial::zero() })
            .collect()
    });
    Ok(table[m.digit() as usize].clone())
}

/// `D(T) = D(B - T)` for every even subset.
pub fn complement_invariant() -> bool {
    EvenSubset::all().all(|t| d_of_subset(t) == d_of_subset(t.complement()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(pairs: &[(u8, u8)]) -> Vec<(u8, u8)> {
        pairs.to_vec()
    }

    #[test]
    fn zero_maps_to_zero() {
        assert!(d_of_char(Char::ZERO).unwrap().is_zero());
    }

    #[test]
    fn empty_set_image() {
        let d = d_of_char(m_empty()).unwrap();
        let expect = SignedMonomial::new(
            1,
            w(&[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8)]),
        );
        assert_eq!(d, expect);
    }

    #[test]
    fn first_table_row() {
        let d = d_of_char(Char::from_digit(1).unwrap()).unwrap();
        let expect = SignedMonomial::new(
            -1,
            w(&[(1, 3), (1, 6), (1, 7), (2, 4), (2, 5), (2, 8), (3, 6), (3, 7), (4, 5), (4, 8), (5, 8), (6, 7)]),
        );
        assert_eq!(d, expect);
    }

    #[test]
    fn well_defined_on_complements() {
        assert!(complement_invariant());
    }

    #[test]
    fn odd_rejected() {
        assert!(d_of_char(Char::from_bits([1, 1, 1, 1, 0, 0])).is_err());
    }
}
