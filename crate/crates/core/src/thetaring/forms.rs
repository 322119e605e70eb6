use serde::Serialize;

use crate::assets::{Assets, THETA_SUBSPACES};
use crate::charspace::combinatorics::same_family;
use crate::charspace::{nonzero_evens, parse_theta_chars, singular_subspaces, Char, Subspace};
use crate::error::{Error, Result};
use crate::exactalg::texpoly::split_labelled_by;
use crate::exactalg::Modulus;
use crate::thomae::{d_of_char, SignedMonomial};

fn asset_err(reason: String) -> Error {
    Error::Asset { name: THETA_SUBSPACES.into(), reason }
}

/// The fifteen subspaces `A_1 .. A_15`, each as its seven nonzero elements
/// in printed order.
#[derive(Clone, Debug)]
pub struct ThetaForms {
    sets: Vec<[Char; 7]>,
    images: Vec<[SignedMonomial; 7]>,
}

/// Digit lists `A_i=[..]`; empty fields between commas are skipped.
pub fn parse_digit_lists(text: &str) -> Result<Vec<[Char; 7]>> {
    let entries = split_labelled_by(text, "A", b'&');
    let mut out = Vec::new();
    for (k, (label, body)) in entries.iter().enumerate() {
        if *label != k + 1 {
            return Err(asset_err(format!("expected A_{} but found A_{label}", k + 1)));
        }
        let open = body.find('[').ok_or_else(|| asset_err(format!("A_{label}: no list")))?;
        let close = body.find(']').ok_or_else(|| asset_err(format!("A_{label}: unclosed list")))?;
        let digits: Vec<Char> = body[open + 1..close]
            .split(',')
            .map(str::trim)
            .filter(|f| !f.is_empty())
            .map(|f| f.parse::<u8>().ok().and_then(Char::from_digit))
            .collect::<Option<_>>()
            .ok_or_else(|| asset_err(format!("A_{label}: bad digit")))?;
        let set: [Char; 7] = digits
            .try_into()
            .map_err(|d: Vec<Char>| asset_err(format!("A_{label}: {} entries", d.len())))?;
        out.push(set);
    }
    if out.len() != 15 {
        return Err(asset_err(format!("expected 15 lists, found {}", out.len())));
    }
    Ok(out)
}

impl ThetaForms {
    pub fn from_sets(sets: Vec<[Char; 7]>) -> Result<Self> {
        let images = sets
            .iter()
            .map(|s| -> Result<[SignedMonomial; 7]> {
                let v: Vec<SignedMonomial> = s.iter().map(|&m| d_of_char(m)).collect::<Result<_>>()?;
                Ok(v.try_into().expect("seven"))
            })
            .collect::<Result<_>>()?;
        Ok(ThetaForms { sets, images })
    }

    pub fn load(assets: &Assets) -> Result<Self> {
        Self::from_sets(parse_digit_lists(&assets.text(THETA_SUBSPACES)?)?)
    }

    pub fn sets(&self) -> &[[Char; 7]] {
        &self.sets
    }

    pub fn subspace(&self, i: usize) -> Subspace {
        Subspace::span(&self.sets[i])
    }

    /// Values of the fifteen images at `x`.
    pub fn values_mod(&self, x: &[u64], m: &Modulus) -> Vec<u64> {
        self.images
            .iter()
            .map(|ims| ims.iter().fold(0, |acc, d| m.add(acc, d.eval_mod(x, m))))
            .collect()
    }

    pub fn values_f64(&self, x: &[f64]) -> Vec<f64> {
        self.images.iter().map(|ims| ims.iter().map(|d| d.eval_f64(x)).sum()).collect()
    }

    /// `i` (0-based) with `A_i` equal to `s`.
    pub fn index_of(&self, s: &Subspace) -> Option<usize> {
        (0..15).find(|&i| self.subspace(i) == *s)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DecodeReport {
    pub lists: usize,
    pub singular_subspaces: usize,
    pub one_family: bool,
    pub display_matches_first: bool,
    pub display_terms: usize,
    /// How many lists contain each nonzero even characteristic (min, max).
    pub incidence: (usize, usize),
}

impl DecodeReport {
    pub fn all_pass(&self) -> bool {
        self.lists == 15
            && self.singular_subspaces == 15
            && self.one_family
            && self.display_matches_first
            && self.incidence == (3, 3)
    }
}

/// Each list is a maximal totally singular subspace minus zero, all in one
/// family, and the printed expansion of the first form uses the same
/// characteristics.
pub fn decode_check(assets: &Assets) -> Result<DecodeReport> {
    let text = assets.text(THETA_SUBSPACES)?;
    let forms = ThetaForms::load(assets)?;
    let maximals = singular_subspaces(3);
    let mut singular = 0;
    for set in forms.sets() {
        let s = Subspace::span(set);
        let mut elems = s.nonzero_elements();
        elems.sort();
        let mut listed = set.to_vec();
        listed.sort();
        if s.dim() == 3 && s.is_totally_singular() && elems == listed && maximals.contains(&s) {
            singular += 1;
        }
    }
    let spaces: Vec<Subspace> = (0..15).map(|i| forms.subspace(i)).collect();
    let one_family = spaces.iter().all(|s| same_family(&spaces[0], s));
    let display = text.split("\\Theta_{1}").nth(1).unwrap_or("");
    let shown = parse_theta_chars(display)?;
    let mut shown_sorted = shown.clone();
    shown_sorted.sort();
    let mut first = forms.sets()[0].to_vec();
    first.sort();
    let counts: Vec<usize> = nonzero_evens()
        .iter()
        .map(|m| forms.sets().iter().filter(|s| s.contains(m)).count())
        .collect();
    Ok(DecodeReport {
        lists: forms.sets().len(),
        singular_subspaces: singular,
        one_family,
        display_matches_first: shown == forms.sets()[0].to_vec() || shown_sorted == first,
        display_terms: shown.len(),
        incidence: (*counts.iter().min().unwrap_or(&0), *counts.iter().max().unwrap_or(&0)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_lists_decode() {
        let r = decode_check(&Assets::embedded()).unwrap();
        assert!(r.all_pass(), "{r:?}");
        assert_eq!(r.display_terms, 7);
    }

    #[test]
    fn first_and_last_lists() {
        let f = ThetaForms::load(&Assets::embedded()).unwrap();
        assert_eq!(f.sets()[0][0], Char::from_bits([0, 0, 0, 1, 1, 0]));
        let last: Vec<Char> = f.sets()[14].to_vec();
        assert!(last.iter().all(|m| m.prime() == 0 && m.dprime() != 0));
    }
}
