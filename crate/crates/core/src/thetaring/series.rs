use num_bigint::BigInt;
use serde::Serialize;

use crate::exactalg::series::{ints, subsequence};
use crate::exactalg::RationalSeries;

/// Hilbert series of the full ring of level-2 genus-3 modular forms:
/// `(1 - z^8) N(z) / ((1 - z^2)^4 (1 - z)^4)`.
pub fn full_ring_series() -> RationalSeries {
    RationalSeries::with_factors(ints(&[1, -3, 13, -17, 44, -17, 13, -3, 1]), &[(2, 4), (1, 4)]).times_factors(&[(8, 1)])
}

/// The restriction to the hyperelliptic locus: the above times
/// `(1 - z)(1 - z^4) / (1 - z^8)`.
pub fn hyperelliptic_series() -> RationalSeries {
    full_ring_series().times_factors(&[(1, 1), (4, 1)]).over_factors(&[(8, 1)])
}

/// Even-weight part in the variable `z^2`:
/// `(1 + 8z^2 + 36z^4 + 106z^6 + 91z^8 + 14z^10) / (1 - z^2)^6`.
pub fn even_part_series() -> RationalSeries {
    RationalSeries::with_factors(ints(&[1, 0, 8, 0, 36, 0, 106, 0, 91, 0, 14]), &[(2, 6)])
}

pub const FULL_RING_PRINTED: [i64; 11] = [1, 1, 15, 29, 135, 310, 870, 1830, 3992, 7534, 14142];
pub const HYPERELLIPTIC_PRINTED: [i64; 9] = [1, 0, 14, 14, 105, 175, 546, 946, 2057];
/// Coefficients of `z^0, z^2, .., z^18`.
pub const EVEN_PART_PRINTED: [i64; 10] = [1, 14, 105, 546, 2057, 6062, 14945, 32306, 63217, 114478];

#[derive(Clone, Debug, Serialize)]
pub struct SeriesMismatch {
    pub series: &'static str,
    pub power: usize,
    pub printed: String,
    pub computed: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesReport {
    pub coefficients_checked: usize,
    pub mismatches: Vec<SeriesMismatch>,
    /// The even-degree part of the hyperelliptic series equals the even-part
    /// closed form through `z^40`.
    pub even_part_agrees: bool,
}

impl SeriesReport {
    pub fn all_pass(&self) -> bool {
        self.mismatches.is_empty() && self.even_part_agrees
    }
}

fn compare(name: &'static str, printed: &[i64], computed: &[BigInt], step: usize, out: &mut Vec<SeriesMismatch>) -> usize {
    for (k, (p, c)) in printed.iter().zip(computed).enumerate() {
        if BigInt::from(*p) != *c {
            out.push(SeriesMismatch { series: name, power: k * step, printed: p.to_string(), computed: c.to_string() });
        }
    }
    printed.len()
}

pub fn series_suite() -> SeriesReport {
    let mut mismatches = Vec::new();
    let mut checked = 0;
    checked += compare("full ring", &FULL_RING_PRINTED, &full_ring_series().expand(10), 1, &mut mismatches);
    checked += compare("hyperelliptic", &HYPERELLIPTIC_PRINTED, &hyperelliptic_series().expand(8), 1, &mut mismatches);
    let even = subsequence(&even_part_series().expand(18), 2);
    checked += compare("even part", &EVEN_PART_PRINTED, &even, 2, &mut mismatches);
    let even_part_agrees = subsequence(&hyperelliptic_series().expand(40), 2) == subsequence(&even_part_series().expand(40), 2);
    SeriesReport { coefficients_checked: checked, mismatches, even_part_agrees }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_expansions() {
        let r = series_suite();
        assert!(r.all_pass(), "{r:?}");
        assert_eq!(r.coefficients_checked, 30);
    }

    #[test]
    fn selected_coefficients() {
        assert_eq!(full_ring_series().expand(4)[4], BigInt::from(135));
        assert_eq!(hyperelliptic_series().expand(7)[7], BigInt::from(946));
        assert_eq!(even_part_series().expand(10)[10], BigInt::from(6062));
    }
}
