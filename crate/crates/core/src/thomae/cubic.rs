use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::monomial::SignedMonomial;
use super::rule::d_of_char;
use crate::assets::{Assets, Y_CUBIC_EXAMPLE};
use crate::charspace::{nonzero_evens, parse_theta_chars, perm_to_orthogonal, Char, Perm};
use crate::error::{Error, Result};
use crate::exactalg::poly::monomials_of_degree;
use crate::exactalg::texpoly::{linear_coefficients, parse_poly};
use crate::exactalg::IntPoly;
use crate::specht::koike::y_scheme;
use crate::specht::{SpechtBasis, YAction};

/// A product of three linear forms in `Y_1 .. Y_14`, with an overall sign.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YCubic {
    pub sign: i64,
    pub forms: [Vec<i64>; 3],
}

impl YCubic {
    pub fn to_y_poly(&self) -> IntPoly {
        let p = self
            .forms
            .iter()
            .fold(IntPoly::one(14), |acc, f| &acc * &IntPoly::linear(&f.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>()));
        p.scale(&BigInt::from(self.sign))
    }

    /// Coefficients over the 560 cubic monomials in the order of
    /// `monomials_of_degree(14, 3)`.
    pub fn coefficient_vector(&self) -> Vec<i64> {
        let p = self.to_y_poly();
        monomials_of_degree(14, 3)
            .iter()
            .map(|e| p.coefficient(e).to_i64().expect("small coefficient"))
            .collect()
    }

    /// The X-polynomial obtained by substituting the Specht polynomials.
    pub fn to_x_poly(&self, basis: &SpechtBasis) -> IntPoly {
        let p = self.forms.iter().fold(IntPoly::one(8), |acc, f| {
            let lin = f
                .iter()
                .zip(basis.polys())
                .fold(IntPoly::zero(8), |s, (&c, y)| &s + &y.scale(&BigInt::from(c)));
            &acc * &lin
        });
        p.scale(&BigInt::from(self.sign))
    }

    pub fn transport(&self, action: &YAction, sign: i64) -> YCubic {
        YCubic {
            sign: self.sign * sign,
            forms: [0, 1, 2].map(|k| action.on_linear_form(&self.forms[k])),
        }
    }
}

/// The printed factorization: its characteristic and the three linear forms.
pub fn printed_factorization(assets: &Assets) -> Result<(Char, YCubic)> {
    let text = assets.text(Y_CUBIC_EXAMPLE)?;
    let err = |reason: String| Error::Asset { name: Y_CUBIC_EXAMPLE.into(), reason };
    let chars = parse_theta_chars(&text)?;
    let m = *chars.first().ok_or_else(|| err("no characteristic".into()))?;
    let body = text.split("\\longmapsto").nth(1).ok_or_else(|| err("no image".into()))?;
    let mut forms = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (k, ch) in body.char_indices() {
        match ch {
            '(' => {
                if depth == 0 {
                    start = k + 1;
                }
                depth += 1;
            }
            ')' => {
                depth -= 1;
                if depth == 0 {
                    let p = parse_poly(&body[start..k], &y_scheme())?;
                    let c = linear_coefficients(&p).ok_or_else(|| err("factor is not linear".into()))?;
                    forms.push(c.iter().map(|v| v.to_i64().expect("small")).collect::<Vec<i64>>());
                }
            }
            _ => {}
        }
    }
    let forms: [Vec<i64>; 3] = forms.try_into().map_err(|f: Vec<_>| err(format!("expected 3 factors, found {}", f.len())))?;
    Ok((m, YCubic { sign: 1, forms }))
}

/// For each nonzero even characteristic, the first permutation in
/// lexicographic order carrying `from` to it.
fn transporters(from: Char) -> BTreeMap<Char, Perm> {
    let mut map = BTreeMap::new();
    for s in Perm::all() {
        map.entry(perm_to_orthogonal(&s).apply(from)).or_insert(s);
        if map.len() == 35 {
            break;
        }
    }
    map
}

/// Moves the printed factorization to every nonzero even characteristic.
pub struct CubicTransport {
    base: Char,
    printed: YCubic,
    /// `+1` if the printed product expands to `D` of its characteristic,
    /// `-1` if to its negative, `None` otherwise.
    printed_sign: Option<i64>,
    perms: BTreeMap<Char, Perm>,
}

impl CubicTransport {
    pub fn new(assets: &Assets) -> Result<Self> {
        let (base, printed) = printed_factorization(assets)?;
        let x = printed.to_x_poly(&SpechtBasis::standard());
        let d = d_of_char(base)?.to_poly();
        let printed_sign = if x == d {
            Some(1)
        } else if x == -d {
            Some(-1)
        } else {
            None
        };
        Ok(CubicTransport { base, printed, printed_sign, perms: transporters(base) })
    }

    pub fn base(&self) -> Char {
        self.base
    }

    pub fn printed(&self) -> &YCubic {
        &self.printed
    }

    pub fn printed_sign(&self) -> Option<i64> {
        self.printed_sign
    }

    /// A cubic in `Y` whose Specht substitution is exactly `D_m`; `None`
    /// for `m = 0`.
    pub fn representative(&self, m: Char) -> Result<Option<YCubic>> {
        if m.is_odd() {
            return Err(Error::OddCharacteristic(m.digit()));
        }
        if m.is_zero() {
            return Ok(None);
        }
        let fix = self.printed_sign.ok_or(Error::Inconsistent)?;
        let sigma = self.perms.get(&m).ok_or(Error::Inconsistent)?;
        let moved: SignedMonomial = d_of_char(self.base)?.permute(sigma);
        let target = d_of_char(m)?;
        if moved.factors() != target.factors() {
            return Err(Error::Inconsistent);
        }
        let sign = (moved.sign() * target.sign()) as i64 * fix;
        Ok(Some(self.printed.transport(&YAction::of(sigma), sign)))
    }
}

pub fn cubic_in_y(m: Char, assets: &Assets) -> Result<Option<YCubic>> {
    CubicTransport::new(assets)?.representative(m)
}

#[derive(Clone, Debug, Serialize)]
pub struct CubicReport {
    pub printed_characteristic: String,
    /// Exact ratio of the printed product to the image (`+1`, `-1`), if any.
    pub printed_ratio: Option<i64>,
    pub representatives_checked: usize,
    pub failures: Vec<String>,
}

impl CubicReport {
    pub fn printed_exact(&self) -> bool {
        self.printed_ratio == Some(1)
    }

    pub fn representatives_pass(&self) -> bool {
        self.representatives_checked == 35 && self.failures.is_empty()
    }
}

/// Exact re-expansion of the printed factorization and of a representative
/// for every nonzero even characteristic.
pub fn verify_cubics(assets: &Assets) -> Result<CubicReport> {
    let basis = SpechtBasis::standard();
    let transport = CubicTransport::new(assets)?;
    let mut failures = Vec::new();
    let mut checked = 0;
    for m in nonzero_evens() {
        checked += 1;
        match transport.representative(m) {
            Ok(Some(c)) if c.to_x_poly(&basis) == d_of_char(m)?.to_poly() => {}
            _ => failures.push(m.to_string()),
        }
    }
    Ok(CubicReport {
        printed_characteristic: transport.base().to_string(),
        printed_ratio: transport.printed_sign(),
        representatives_checked: checked,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_factorization_is_negated_image() {
        let (m, c) = printed_factorization(&Assets::embedded()).unwrap();
        assert_eq!(m, Char::from_digit(1).unwrap());
        assert_eq!(c.forms[2][7], 1);
        assert_eq!(c.forms[2][8], -1);
        let basis = SpechtBasis::standard();
        // the printed product is the negative of the tabulated image
        assert_eq!(c.to_x_poly(&basis), -d_of_char(m).unwrap().to_poly());
        assert_eq!(c.coefficient_vector().len(), 560);
    }

    #[test]
    fn zero_has_no_representative() {
        assert!(cubic_in_y(Char::ZERO, &Assets::embedded()).unwrap().is_none());
    }

    #[test]
    fn transported_representative_expands() {
        let basis = SpechtBasis::standard();
        let m = crate::charspace::mumford::m_empty();
        let c = cubic_in_y(m, &Assets::embedded()).unwrap().unwrap();
        assert_eq!(c.to_x_poly(&basis), d_of_char(m).unwrap().to_poly());
    }
}
