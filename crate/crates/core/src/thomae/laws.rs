use rand::Rng;
use serde::Serialize;

use super::monomial::SignedMonomial;
use super::rule::d_of_char;
use crate::charspace::{nonzero_evens, perm_to_orthogonal, t_ij_char, Char, Perm};
use crate::exactalg::IntPoly;

fn image(m: Char) -> SignedMonomial {
    d_of_char(m).expect("even characteristic")
}

#[derive(Clone, Debug, Serialize)]
pub struct SupportReport {
    pub checks: usize,
    /// `(m, i, j)` where presence of `W_ij` disagrees with `(m, t_ij) = 0`.
    pub violations: Vec<(String, u8, u8)>,
    pub twelve_factors: bool,
}

impl SupportReport {
    pub fn all_pass(&self) -> bool {
        self.checks == 35 * 28 && self.violations.is_empty() && self.twelve_factors
    }
}

/// `W_ij` divides `D_m` exactly when `m` is orthogonal to `t_ij`.
pub fn support_law() -> SupportReport {
    let mut violations = Vec::new();
    let mut checks = 0;
    let mut twelve = true;
    for m in nonzero_evens() {
        let d = image(m);
        twelve &= d.factors().len() == 12;
        for i in 1..=8u8 {
            for j in i + 1..=8 {
                checks += 1;
                let orthogonal = m.pairing(t_ij_char(i, j).expect("valid pair")) == 0;
                if d.contains(i, j) != orthogonal {
                    violations.push((m.to_string(), i, j));
                }
            }
        }
    }
    SupportReport { checks, violations, twelve_factors: twelve }
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivarianceReport {
    pub perm: String,
    pub perm_sign: i8,
    pub monomial_mismatches: usize,
    /// `D_{M m} / (sigma . D_m)` when it is the same sign for every `m`.
    pub uniform_sign: Option<i8>,
}

impl EquivarianceReport {
    pub fn exact(&self) -> bool {
        self.monomial_mismatches == 0 && self.uniform_sign == Some(1)
    }
}

/// Compares `sigma . D_m` with `D` of the transported characteristic.
pub fn equivariance(sigma: &Perm) -> EquivarianceReport {
    let mat = perm_to_orthogonal(sigma);
    let mut mismatches = 0;
    let mut signs = Vec::new();
    for m in nonzero_evens() {
        let moved = image(m).permute(sigma);
        let target = image(mat.apply(m));
        if moved.factors() != target.factors() {
            mismatches += 1;
        } else {
            signs.push(moved.sign() * target.sign());
        }
    }
    let uniform = if mismatches == 0 && signs.windows(2).all(|w| w[0] == w[1]) {
        signs.first().copied()
    } else {
        None
    };
    EquivarianceReport {
        perm: sigma.to_string(),
        perm_sign: sigma.sign(),
        monomial_mismatches: mismatches,
        uniform_sign: uniform,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivarianceSummary {
    pub perms_checked: usize,
    pub monomials_match: bool,
    /// Every even permutation acts exactly.
    pub even_exact: bool,
    /// Every odd permutation acts up to the same uniform sign.
    pub odd_uniform_sign: Option<i8>,
}

/// Generators, the identity and `random` further permutations.
pub fn equivariance_suite<R: Rng>(rng: &mut R, random: usize) -> (EquivarianceSummary, Vec<EquivarianceReport>) {
    let mut perms = vec![Perm::identity()];
    perms.extend(Perm::generators());
    perms.extend((0..random).map(|_| Perm::random(rng)));
    let reports: Vec<EquivarianceReport> = perms.iter().map(equivariance).collect();
    let monomials_match = reports.iter().all(|r| r.monomial_mismatches == 0);
    let even_exact = reports.iter().filter(|r| r.perm_sign == 1).all(|r| r.uniform_sign == Some(1));
    let odd: Vec<Option<i8>> = reports.iter().filter(|r| r.perm_sign == -1).map(|r| r.uniform_sign).collect();
    let odd_uniform_sign = match odd.first() {
        Some(&first) if odd.iter().all(|&s| s == first) => first,
        _ => None,
    };
    (
        EquivarianceSummary { perms_checked: reports.len(), monomials_match, even_exact, odd_uniform_sign },
        reports,
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct SumReport {
    pub summands: usize,
    pub terms_before_collection: usize,
    pub residual_terms: usize,
}

impl SumReport {
    pub fn all_pass(&self) -> bool {
        self.summands == 35 && self.residual_terms == 0
    }
}

/// The same comparison over every permutation.
pub fn equivariance_exhaustive() -> EquivarianceSummary {
    let mut monomials_match = true;
    let mut even_exact = true;
    let mut odd: Option<Option<i8>> = None;
    for s in Perm::all() {
        let r = equivariance(&s);
        monomials_match &= r.monomial_mismatches == 0;
        if r.perm_sign == 1 {
            even_exact &= r.uniform_sign == Some(1);
        } else {
            odd = match odd {
                None => Some(r.uniform_sign),
                Some(prev) if prev == r.uniform_sign => Some(prev),
                Some(_) => Some(None),
            };
        }
    }
    EquivarianceSummary { perms_checked: 40320, monomials_match, even_exact, odd_uniform_sign: odd.flatten() }
}

/// Exact expansion of the sum of all images.
pub fn sum_vanishing() -> SumReport {
    let mut total = IntPoly::zero(8);
    let mut before = 0;
    let evens = nonzero_evens();
    for &m in &evens {
        let p = image(m).to_poly();
        before += p.len();
        total = &total + &p;
    }
    SumReport { summands: evens.len(), terms_before_collection: before, residual_terms: total.len() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn support_law_holds() {
        let r = support_law();
        assert!(r.all_pass(), "{:?}", r.violations);
    }

    #[test]
    fn identity_is_exact() {
        assert!(equivariance(&Perm::identity()).exact());
    }

    #[test]
    fn transported_monomials_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let (s, _) = equivariance_suite(&mut rng, 20);
        assert!(s.monomials_match);
        assert!(s.even_exact);
        assert_eq!(s.odd_uniform_sign, Some(-1));
    }

    #[test]
    fn sign_character_over_all_permutations() {
        let s = equivariance_exhaustive();
        assert!(s.monomials_match && s.even_exact);
        assert_eq!(s.odd_uniform_sign, Some(-1));
    }

    #[test]
    fn total_sum_vanishes() {
        let r = sum_vanishing();
        assert!(r.all_pass(), "{r:?}");
    }
}
