use super::basis::coordinates_of;
use super::tableau::{enumerate_tableaux, Tableau};
use crate::charspace::Perm;
use crate::exactalg::IntPoly;
use num_bigint::BigInt;

/// The 14x14 integer matrix of a permutation acting on span(Y).
///
/// `sigma` sends `X_i` to `X_sigma(i)`; column `i` holds the coordinates of
/// `sigma . Y_{i+1}`, so matrices multiply like the permutations
/// (`sigma.compose(tau)` maps to `M(sigma) M(tau)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct YAction(pub [[i64; 14]; 14]);

impl YAction {
    pub fn identity() -> Self {
        let mut m = [[0i64; 14]; 14];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        YAction(m)
    }

    pub fn of(sigma: &Perm) -> Self {
        let (_, standard) = enumerate_tableaux();
        let mut m = [[0i64; 14]; 14];
        for (i, t) in standard.iter().enumerate() {
            let (image, sign) = permuted(t, sigma);
            let c = coordinates_of(&image);
            for k in 0..14 {
                m[k][i] = sign as i64 * c[k];
            }
        }
        YAction(m)
    }

    pub fn mul(&self, other: &YAction) -> YAction {
        let mut out = [[0i64; 14]; 14];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = (0..14).map(|k| self.0[i][k] * other.0[k][j]).sum();
            }
        }
        YAction(out)
    }

    /// Coefficients of `sigma . (sum a_i Y_i)`.
    pub fn on_linear_form(&self, a: &[i64]) -> Vec<i64> {
        (0..14).map(|k| (0..14).map(|i| self.0[k][i] * a[i]).sum()).collect()
    }

    /// `sigma . f` for a polynomial in `Y_1 .. Y_14`.
    pub fn on_poly(&self, f: &IntPoly) -> IntPoly {
        let images: Vec<IntPoly> = (0..14)
            .map(|i| {
                let col: Vec<BigInt> = (0..14).map(|k| BigInt::from(self.0[k][i])).collect();
                IntPoly::linear(&col)
            })
            .collect();
        f.substitute(&images).expect("14 images for 14 variables")
    }
}

fn permuted(t: &Tableau, sigma: &Perm) -> (Tableau, i8) {
    let pairs = t.columns().map(|(a, b)| (sigma.apply(a), sigma.apply(b)));
    Tableau::from_pairs(pairs).expect("a permutation keeps a perfect matching")
}

/// `sigma . P` for the Specht polynomial of any tableau, as a signed tableau.
pub fn act_on_tableau(t: &Tableau, sigma: &Perm) -> (Tableau, i8) {
    permuted(t, sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specht::SpechtBasis;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_acts_trivially() {
        assert_eq!(YAction::of(&Perm::identity()), YAction::identity());
    }

    #[test]
    fn transposition_squares_to_identity() {
        let m = YAction::of(&Perm::transposition(1, 2));
        assert_ne!(m, YAction::identity());
        assert_eq!(m.mul(&m), YAction::identity());
    }

    #[test]
    fn homomorphism_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let s = Perm::random(&mut rng);
            let t = Perm::random(&mut rng);
            assert_eq!(YAction::of(&s.compose(&t)), YAction::of(&s).mul(&YAction::of(&t)));
        }
    }

    #[test]
    fn matches_variable_permutation() {
        let b = SpechtBasis::standard();
        let s = Perm::cycle(&[1, 3, 6, 2]);
        let m = YAction::of(&s);
        let images: Vec<IntPoly> = (0..8).map(|i| IntPoly::var(8, s.apply0(i))).collect();
        for i in 0..14 {
            let moved = b.y(i).substitute(&images).unwrap();
            let combo = (0..14).fold(IntPoly::zero(8), |acc, k| &acc + &b.y(k).scale(&BigInt::from(m.0[k][i])));
            assert_eq!(moved, combo);
        }
    }
}
