//! Graded dimensions compared across series expansions, closed formulas,
//! printed values and rank certification.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::suites::{CONFIG_DIMS_PRINTED, CONFIG_DIM_SIX_PRINTED, RANK_MARGIN, RANK_SEEDS};
use super::RunConfig;
use crate::assets::Assets;
use crate::error::{Error, Result};
use crate::specht::{config_series, deconcini_dim, graded_dim_config, howe_dim};
use crate::thetaring::series::{
    even_part_series, full_ring_series, hyperelliptic_series, EVEN_PART_PRINTED, FULL_RING_PRINTED,
};
use crate::thetaring::{graded_dim_b, ThetaForms};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HilbertRing {
    /// The ring generated by the Specht polynomials, graded by degree.
    Config,
    /// The even ring of Theta-forms, graded by weight.
    B,
    /// The full ring of modular forms, series only.
    A,
}

impl FromStr for HilbertRing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "config" => Ok(HilbertRing::Config),
            "B" | "b" => Ok(HilbertRing::B),
            "A" | "a" => Ok(HilbertRing::A),
            _ => Err(Error::Invalid(format!("unknown ring {s:?}"))),
        }
    }
}

impl HilbertRing {
    /// Largest degree the driver accepts.
    pub fn max_degree(self) -> usize {
        match self {
            HilbertRing::Config => 40,
            HilbertRing::B => 40,
            HilbertRing::A => 60,
        }
    }

    /// Largest degree whose rank is certified, by default and with `deep`.
    pub fn max_certified(self, deep: bool) -> Option<usize> {
        match (self, deep) {
            (HilbertRing::Config, false) => Some(4),
            (HilbertRing::Config, true) => Some(5),
            (HilbertRing::B, false) => Some(6),
            (HilbertRing::B, true) => Some(8),
            (HilbertRing::A, _) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DimRow {
    pub degree: usize,
    pub series: String,
    pub closed_forms: Vec<String>,
    pub printed: Option<u64>,
    /// Ranks under consecutive seeds; empty when not certified.
    pub ranks: Vec<usize>,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HilbertTable {
    pub ring: HilbertRing,
    pub seed: u64,
    pub rows: Vec<DimRow>,
    pub all_agree: bool,
}

impl HilbertTable {
    pub fn to_markdown(&self) -> String {
        let mut out = String::from("| degree | series | closed forms | printed | ranks | agree |\n|---|---|---|---|---|---|\n");
        for r in &self.rows {
            let ranks: Vec<String> = r.ranks.iter().map(usize::to_string).collect();
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} | {} |\n",
                r.degree,
                r.series,
                if r.closed_forms.is_empty() { "-".into() } else { r.closed_forms.join(" ") },
                r.printed.map_or("-".into(), |p| p.to_string()),
                if ranks.is_empty() { "-".into() } else { ranks.join(" ") },
                r.agree
            ));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,series,closed_forms,printed,ranks,agree\n");
        for r in &self.rows {
            let ranks: Vec<String> = r.ranks.iter().map(usize::to_string).collect();
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.degree,
                r.series,
                r.closed_forms.join(" "),
                r.printed.map_or(String::new(), |p| p.to_string()),
                ranks.join(" "),
                r.agree
            ));
        }
        out
    }
}

fn coefficient(series: &[BigInt], n: usize) -> String {
    series[n].to_string()
}

fn printed_value(ring: HilbertRing, n: usize) -> Option<u64> {
    match ring {
        HilbertRing::Config => match n {
            1..=4 => Some(CONFIG_DIMS_PRINTED[n - 1]),
            6 => Some(CONFIG_DIM_SIX_PRINTED),
            _ => None,
        },
        HilbertRing::B => (n % 2 == 0).then(|| EVEN_PART_PRINTED.get(n / 2).map(|&v| v as u64)).flatten(),
        HilbertRing::A => FULL_RING_PRINTED.get(n).map(|&v| v as u64),
    }
}

struct Context {
    ring: HilbertRing,
    series: Vec<BigInt>,
    closed: Vec<Vec<BigInt>>,
    forms: Option<ThetaForms>,
}

impl Context {
    fn new(ring: HilbertRing, top: usize, assets: &Assets) -> Result<Self> {
        Ok(match ring {
            HilbertRing::Config => Context {
                ring,
                series: config_series().expand(top),
                closed: vec![
                    (0..=top).map(|n| BigInt::from(howe_dim(n as u64))).collect(),
                    (0..=top).map(|n| BigInt::from(deconcini_dim(n as u64))).collect(),
                ],
                forms: None,
            },
            HilbertRing::B => Context {
                ring,
                series: hyperelliptic_series().expand(top),
                closed: vec![even_part_series().expand(top)],
                forms: Some(ThetaForms::load(assets)?),
            },
            HilbertRing::A => Context { ring, series: full_ring_series().expand(top), closed: Vec::new(), forms: None },
        })
    }

    fn row(&self, n: usize, config: &RunConfig) -> Result<DimRow> {
        let series = coefficient(&self.series, n);
        let closed_forms: Vec<String> = self.closed.iter().map(|c| coefficient(c, n)).collect();
        let printed = printed_value(self.ring, n);
        let certify = n > 0 && self.ring.max_certified(config.deep).is_some_and(|m| n <= m);
        let mut ranks = Vec::new();
        if certify {
            let expected: usize = series.parse().map_err(|_| Error::Invalid("dimension too large".into()))?;
            let points = expected + RANK_MARGIN;
            let modulus = config.modulus()?;
            for k in 0..RANK_SEEDS {
                let seed = config.seed + k;
                ranks.push(match &self.forms {
                    Some(f) => graded_dim_b(f, n, points, seed, modulus).rank,
                    None => graded_dim_config(n, points, seed, modulus).rank,
                });
            }
        }
        let agree = closed_forms.iter().all(|c| *c == series)
            && printed.map_or(true, |p| p.to_string() == series)
            && ranks.iter().all(|r| r.to_string() == series);
        Ok(DimRow { degree: n, series, closed_forms, printed, ranks, agree })
    }
}

fn check_range(ring: HilbertRing, degrees: &[usize]) -> Result<()> {
    if let Some(&d) = degrees.iter().find(|&&d| d > ring.max_degree()) {
        return Err(Error::Invalid(format!("degree {d} exceeds the limit {} for this ring", ring.max_degree())));
    }
    if ring == HilbertRing::B && degrees.iter().any(|d| d % 2 == 1) {
        return Err(Error::Invalid("weights of the even ring are even".into()));
    }
    Ok(())
}

/// Rows for every degree up to `max` (every even weight for the even ring).
pub fn hilbert_table(ring: HilbertRing, max: usize, config: &RunConfig, assets: &Assets) -> Result<HilbertTable> {
    let degrees: Vec<usize> = match ring {
        HilbertRing::B => (0..=max).step_by(2).collect(),
        _ => (0..=max).collect(),
    };
    weight_dims(ring, &degrees, config, assets)
}

/// Rows for the given degrees.
pub fn weight_dims(ring: HilbertRing, degrees: &[usize], config: &RunConfig, assets: &Assets) -> Result<HilbertTable> {
    check_range(ring, degrees)?;
    let top = degrees.iter().copied().max().unwrap_or(0);
    let ctx = Context::new(ring, top, assets)?;
    let rows = degrees.iter().map(|&n| ctx.row(n, config)).collect::<Result<Vec<_>>>()?;
    let all_agree = rows.iter().all(|r| r.agree);
    Ok(HilbertTable { ring, seed: config.seed, rows, all_agree })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_ring_series_only() {
        let t = hilbert_table(HilbertRing::A, 10, &RunConfig::default(), &Assets::embedded()).unwrap();
        assert!(t.all_agree);
        assert_eq!(t.rows[9].series, "7534");
        assert!(t.rows.iter().all(|r| r.ranks.is_empty()));
    }

    #[test]
    fn even_ring_low_weights_are_certified() {
        let t = weight_dims(HilbertRing::B, &[2, 4], &RunConfig::default(), &Assets::embedded()).unwrap();
        assert!(t.all_agree);
        assert_eq!(t.rows[1].ranks, vec![105; 3]);
    }

    #[test]
    fn configuration_ring_beyond_certification() {
        let t = weight_dims(HilbertRing::Config, &[1, 6, 9], &RunConfig::default(), &Assets::embedded()).unwrap();
        assert!(t.all_agree);
        assert_eq!(t.rows[0].ranks, vec![14; 3]);
        assert_eq!(t.rows[1].series, "5719");
        assert!(t.rows[2].ranks.is_empty());
    }

    #[test]
    fn limits() {
        let cfg = RunConfig::default();
        assert!(weight_dims(HilbertRing::B, &[3], &cfg, &Assets::embedded()).is_err());
        assert!(hilbert_table(HilbertRing::Config, 1000, &cfg, &Assets::embedded()).is_err());
    }
}
