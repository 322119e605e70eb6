use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::basis::SpechtBasis;
use crate::assets::{Assets, KOIKE_GENERATORS};
use crate::error::{Error, Result};
use crate::exactalg::texpoly::{parse_poly, split_labelled, VarScheme};
use crate::exactalg::IntPoly;

pub fn y_scheme() -> VarScheme {
    VarScheme::new("Y", 14, 1)
}

/// The 14 quadratic generators `J_1 .. J_14`, parsed from the asset.
pub fn koike_ideal(assets: &Assets) -> Result<Vec<IntPoly>> {
    let text = assets.text(KOIKE_GENERATORS)?;
    let entries = split_labelled(&text, "J");
    let labels: Vec<usize> = entries.iter().map(|(n, _)| *n).collect();
    if labels != (1..=14).collect::<Vec<_>>() {
        return Err(Error::Asset {
            name: KOIKE_GENERATORS.into(),
            reason: format!("expected labels 1..14, found {labels:?}"),
        });
    }
    let scheme = y_scheme();
    entries
        .iter()
        .map(|(n, body)| {
            parse_poly(body, &scheme).map_err(|e| Error::Asset {
                name: KOIKE_GENERATORS.into(),
                reason: format!("J_{n}: {e}"),
            })
        })
        .collect()
}

/// Substitutes the Specht polynomials for `Y_1 .. Y_14`.
pub fn to_x(f: &IntPoly, basis: &SpechtBasis) -> Result<IntPoly> {
    f.substitute(basis.polys())
}

#[derive(Clone, Debug, Serialize)]
pub struct KoikeReport {
    pub generators: usize,
    /// Labels of generators that do not vanish, with the leading surviving
    /// X-monomial rendered.
    pub failures: Vec<(usize, String)>,
}

impl KoikeReport {
    pub fn all_pass(&self) -> bool {
        self.generators == 14 && self.failures.is_empty()
    }
}

/// Exact check that every generator vanishes after substitution.
pub fn verify_koike(assets: &Assets) -> Result<KoikeReport> {
    let gens = koike_ideal(assets)?;
    let basis = SpechtBasis::standard();
    let mut failures = Vec::new();
    for (k, g) in gens.iter().enumerate() {
        let x = to_x(g, &basis)?;
        if let Some((e, c)) = x.leading() {
            let lead = IntPoly::monomial(e.clone(), c.clone());
            failures.push((k + 1, lead.render("X")));
        }
    }
    Ok(KoikeReport {
        generators: gens.len(),
        failures,
    })
}

/// The Y-coordinates of a random integer configuration of 8 points.
pub fn random_configuration_point(seed: u64) -> Vec<BigInt> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x: Vec<BigInt> = (0..8).map(|_| BigInt::from(rng.gen_range(-1000i64..=1000))).collect();
    SpechtBasis::standard().polys().iter().map(|y| y.eval(&x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn printed_generators_vanish() {
        let r = verify_koike(&Assets::embedded()).unwrap();
        assert!(r.all_pass(), "{:?}", r.failures);
    }

    #[test]
    fn first_and_third_generators_as_printed() {
        let g = koike_ideal(&Assets::embedded()).unwrap();
        let s = y_scheme();
        assert_eq!(g[0], parse_poly("Y_9Y_{13}-Y_8Y_{14}", &s).unwrap());
        assert_eq!(g[2], parse_poly("Y_7Y_{11}-Y_6Y_{12}", &s).unwrap());
    }

    #[test]
    fn a_product_outside_the_ideal_does_not_vanish() {
        let y = random_configuration_point(3);
        let f = parse_poly("Y_1Y_2-Y_3Y_4", &y_scheme()).unwrap();
        assert!(!f.eval(&y).is_zero());
        let g = koike_ideal(&Assets::embedded()).unwrap();
        assert!(g.iter().all(|j| j.eval(&y).is_zero()));
    }

    #[test]
    fn mutated_asset_is_reported() {
        let dir = tempfile::tempdir().unwrap();
        let text = Assets::embedded_text(KOIKE_GENERATORS).unwrap().replacen("Y_{9}Y_{13}-Y_{8}Y_{14}", "Y_{9}Y_{13}+Y_{8}Y_{14}", 1);
        std::fs::write(dir.path().join(KOIKE_GENERATORS), text).unwrap();
        let r = verify_koike(&Assets::with_dir(dir.path())).unwrap();
        assert_eq!(r.failures.len(), 1);
        assert_eq!(r.failures[0].0, 1);
    }
}
