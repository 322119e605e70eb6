use super::forms::ThetaForms;
use crate::exactalg::poly::monomials_of_degree;
use crate::exactalg::{Modulus, PointSampler, PrimeFieldMatrix};
use crate::specht::hilbert::monomial_values;
use crate::specht::RankCertificate;

/// Rank of the evaluation matrix of all monomials of weight `w` (degree
/// `w / 2`) in the fifteen images, at `points` random configurations.
pub fn graded_dim_b(forms: &ThetaForms, w: usize, points: usize, seed: u64, modulus: Modulus) -> RankCertificate {
    assert!(w % 2 == 0, "weights are even");
    let n = w / 2;
    let monos = monomials_of_degree(15, n);
    let mut sampler = PointSampler::new(seed, modulus);
    let rows: Vec<Vec<u64>> = (0..points)
        .map(|_| {
            let v = forms.values_mod(&sampler.point(8), &modulus);
            monomial_values(&v, n, &monos, &modulus)
        })
        .collect();
    let rank = PrimeFieldMatrix::from_rows(rows, modulus).rank();
    let bound = ((12 * n * rank.max(1)) as f64).log10() - (modulus.p() as f64).log10();
    RankCertificate {
        degree: w,
        monomials: monos.len(),
        points,
        rank,
        seed,
        prime: modulus.p(),
        log10_error_bound: if n == 0 { f64::NEG_INFINITY } else { bound },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assets::Assets;

    #[test]
    fn weights_two_and_four() {
        let f = ThetaForms::load(&Assets::embedded()).unwrap();
        let m = Modulus::default();
        assert_eq!(graded_dim_b(&f, 2, 30, 1, m).rank, 14);
        assert_eq!(graded_dim_b(&f, 4, 130, 2, m).rank, 105);
    }
}
