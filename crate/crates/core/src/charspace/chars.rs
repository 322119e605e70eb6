//! Characteristics: vectors of `F_2^6` written as `(m' | m'')`.
//!
//! A characteristic is packed into the low six bits of a byte so that its
//! numeric value equals the digit `32 m1 + 16 m2 + 8 m3 + 4 m4 + 2 m5 + m6`.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Char(u8);

impl Char {
    pub const ZERO: Char = Char(0);

    /// From the digit `32 m1 + ... + m6`; values above 63 are rejected.
    pub fn from_digit(d: u8) -> Option<Char> {
        (d < 64).then_some(Char(d))
    }

    pub fn from_bits(bits: [u8; 6]) -> Char {
        Char(bits.iter().fold(0, |acc, &b| (acc << 1) | (b & 1)))
    }

    pub fn from_halves(prime: [u8; 3], dprime: [u8; 3]) -> Char {
        Char::from_bits([prime[0], prime[1], prime[2], dprime[0], dprime[1], dprime[2]])
    }

    pub fn digit(self) -> u8 {
        self.0
    }

    pub fn bits(self) -> [u8; 6] {
        let mut b = [0; 6];
        for (k, slot) in b.iter_mut().enumerate() {
            *slot = (self.0 >> (5 - k)) & 1;
        }
        b
    }

    /// `m'` as a 3-bit number with `m1` in the high bit.
    pub fn prime(self) -> u8 {
        self.0 >> 3
    }

    /// `m''` as a 3-bit number with `m4` in the high bit.
    pub fn dprime(self) -> u8 {
        self.0 & 7
    }

    /// `q(m) = m' . m''`.
    pub fn q(self) -> u8 {
        ((self.prime() & self.dprime()).count_ones() & 1) as u8
    }

    /// `(m, n) = m' . n'' + m'' . n'`.
    pub fn pairing(self, other: Char) -> u8 {
        (((self.prime() & other.dprime()).count_ones() + (self.dprime() & other.prime()).count_ones()) & 1)
            as u8
    }

    pub fn is_even(self) -> bool {
        self.q() == 0
    }

    pub fn is_odd(self) -> bool {
        self.q() == 1
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// `e(m) = (-1)^q(m)`.
    pub fn e(self) -> i8 {
        1 - 2 * self.q() as i8
    }

    /// `e(m, n) = (-1)^(m, n)`.
    pub fn e_pair(self, other: Char) -> i8 {
        1 - 2 * self.pairing(other) as i8
    }

    pub fn all() -> impl Iterator<Item = Char> {
        (0..64).map(Char)
    }
}

impl std::ops::Add for Char {
    type Output = Char;
    fn add(self, rhs: Char) -> Char {
        Char(self.0 ^ rhs.0)
    }
}

impl std::ops::AddAssign for Char {
    fn add_assign(&mut self, rhs: Char) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Display for Char {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = self.bits();
        write!(f, "({},{},{},{},{},{})", b[0], b[1], b[2], b[3], b[4], b[5])
    }
}

impl fmt::Debug for Char {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Char{self}")
    }
}

/// The 36 even and 28 odd characteristics, each in increasing digit order.
pub fn enumerate_chars() -> (Vec<Char>, Vec<Char>) {
    Char::all().partition(|m| m.is_even())
}

pub fn nonzero_evens() -> Vec<Char> {
    Char::all().filter(|m| m.is_even() && !m.is_zero()).collect()
}

pub fn odds() -> Vec<Char> {
    Char::all().filter(|m| m.is_odd()).collect()
}

/// Characteristics written as `\vartheta\left[ .. \right]`, in order of
/// appearance. A single `3x2` matrix has rows `(m'_k, m''_k)`; two column
/// matrices give `m'` then `m''`.
pub fn parse_theta_chars(text: &str) -> crate::Result<Vec<Char>> {
    let mut out = Vec::new();
    let mut rest = text;
    while let Some(k) = rest.find("\\left[") {
        let after = &rest[k + 6..];
        let end = after
            .find("\\right]")
            .ok_or_else(|| crate::Error::Parse("unterminated theta characteristic".into()))?;
        let body = &after[..end];
        let digits: Vec<u8> = body
            .replace("\\cr", " ")
            .bytes()
            .filter(|b| *b == b'0' || *b == b'1')
            .map(|b| b - b'0')
            .collect();
        if digits.len() != 6 {
            return Err(crate::Error::Parse(format!("characteristic needs 6 entries: {body:?}")));
        }
        let m = match body.matches("\\matrix{").count() {
            1 => Char::from_halves([digits[0], digits[2], digits[4]], [digits[1], digits[3], digits[5]]),
            2 => Char::from_halves([digits[0], digits[1], digits[2]], [digits[3], digits[4], digits[5]]),
            _ => return Err(crate::Error::Parse(format!("unrecognised characteristic layout: {body:?}"))),
        };
        out.push(m);
        rest = &after[end..];
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_characteristic_layouts() {
        let one = "\\vartheta\\left[\\matrix{0&1\\cr0&1\\cr0&0\\cr}\\right]^4";
        let two = "6\\vartheta\\left[\\matrix{0\\cr0\\cr0}\\matrix{0\\cr0\\cr1}\\right]^4";
        assert_eq!(parse_theta_chars(one).unwrap(), vec![Char::from_digit(6).unwrap()]);
        assert_eq!(parse_theta_chars(two).unwrap(), vec![Char::from_digit(1).unwrap()]);
    }

    #[test]
    fn counts() {
        let (e, o) = enumerate_chars();
        assert_eq!((e.len(), o.len()), (36, 28));
    }

    #[test]
    fn digit_layout() {
        let m = Char::from_bits([0, 0, 0, 1, 1, 0]);
        assert_eq!(m.digit(), 6);
        assert_eq!(Char::from_bits([1, 1, 1, 1, 0, 0]).q(), 1);
        assert_eq!(Char::from_bits([0, 1, 0, 1, 0, 1]).q(), 0);
        assert_eq!(m.to_string(), "(0,0,0,1,1,0)");
    }

    #[test]
    fn polarization_and_nondegeneracy() {
        for m in Char::all() {
            assert_eq!(m.pairing(m), 0);
            for n in Char::all() {
                assert_eq!((m + n).q() ^ m.q() ^ n.q(), m.pairing(n));
                assert_eq!(m.pairing(n), n.pairing(m));
            }
            if !m.is_zero() {
                assert!(Char::all().any(|n| m.pairing(n) == 1));
            }
        }
    }
}
