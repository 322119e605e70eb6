//! Linear subspaces of the `Y`-coordinate space cut out by ten linear forms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::assets::{Assets, BASE_IDEAL_EXAMPLE, CUSP_EIGHT_IDEALS};
use crate::error::{Error, Result};
use crate::exactalg::rational::{nullspace, primitive_integer_vector, projective_normal, rref};
use crate::exactalg::texpoly::{linear_coefficients, parse_poly_list};
use crate::specht::koike::y_scheme;
use crate::specht::YAction;

pub type Vector = [i64; 14];

/// Zero set of ten independent linear forms in `Y_1 .. Y_14`.
///
/// `forms` is the reduced row echelon form of the ideal's linear part with
/// each row scaled to a primitive integer vector, so two spaces are equal
/// exactly when their `forms` are.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearSpace {
    forms: Vec<Vector>,
    param: Vec<Vector>,
}

fn to_i64(v: &[BigInt]) -> Result<Vector> {
    let mut out = [0i64; 14];
    for (slot, x) in out.iter_mut().zip(v) {
        *slot = x.to_i64().ok_or_else(|| Error::Invalid("coordinate exceeds i64".into()))?;
    }
    Ok(out)
}

fn rational_rows(rows: &[Vector]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
        .collect()
}

impl LinearSpace {
    pub fn from_forms(forms: &[Vector]) -> Result<Self> {
        let (reduced, _) = rref(&rational_rows(forms));
        if reduced.len() != 10 {
            return Err(Error::Invalid(format!("linear forms of rank {} instead of 10", reduced.len())));
        }
        let canonical = reduced
            .iter()
            .map(|r| to_i64(&primitive_integer_vector(r)))
            .collect::<Result<Vec<_>>>()?;
        let param = nullspace(&reduced, 14)
            .iter()
            .map(|v| to_i64(&projective_normal(v)))
            .collect::<Result<Vec<_>>>()?;
        Ok(LinearSpace { forms: canonical, param })
    }

    pub fn forms(&self) -> &[Vector] {
        &self.forms
    }

    /// Four integer vectors spanning the space.
    pub fn parametrization(&self) -> &[Vector] {
        &self.param
    }

    pub fn contains(&self, y: &Vector) -> bool {
        self.forms.iter().all(|f| dot(f, y) == 0)
    }

    /// Whether the linear form `a . Y` vanishes on the whole space.
    pub fn kills(&self, a: &[i64]) -> bool {
        self.param.iter().all(|p| p.iter().zip(a).map(|(x, y)| x * y).sum::<i64>() == 0)
    }

    /// The zero set of the forms moved by `action`.
    pub fn moved(&self, action: &YAction) -> Result<Self> {
        let forms: Vec<Vector> = self
            .forms
            .iter()
            .map(|f| {
                let v = action.on_linear_form(f);
                let mut out = [0i64; 14];
                out.copy_from_slice(&v);
                out
            })
            .collect();
        LinearSpace::from_forms(&forms)
    }

    /// Dimension of the intersection of the two spaces as vector spaces.
    pub fn intersection_dim(&self, other: &LinearSpace) -> usize {
        let mut rows = self.forms.clone();
        rows.extend_from_slice(&other.forms);
        14 - rref(&rational_rows(&rows)).0.len()
    }

    /// A spanning set of the intersection, each vector primitive.
    pub fn intersection(&self, other: &LinearSpace) -> Result<Vec<Vector>> {
        let mut rows = self.forms.clone();
        rows.extend_from_slice(&other.forms);
        nullspace(&rational_rows(&rows), 14).iter().map(|v| to_i64(&projective_normal(v))).collect()
    }
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Projective normal form of an integer vector.
pub fn normalize(v: &[i64]) -> Result<Vector> {
    let big: Vec<BigInt> = v.iter().map(|&x| x.into()).collect();
    to_i64(&projective_normal(&big))
}

fn space_from_list(src: &str) -> Result<LinearSpace> {
    let polys = parse_poly_list(src, &y_scheme())?;
    let forms = polys
        .iter()
        .map(|p| {
            let c = linear_coefficients(p).ok_or_else(|| Error::Parse("generator is not a linear form".into()))?;
            if c.iter().all(Zero::is_zero) {
                return Err(Error::Parse("zero generator".into()));
            }
            to_i64(&c)
        })
        .collect::<Result<Vec<_>>>()?;
    if forms.len() != 10 {
        return Err(Error::Parse(format!("{} generators instead of 10", forms.len())));
    }
    LinearSpace::from_forms(&forms)
}

/// Strips display markup from a transcription.
fn strip_markup(src: &str) -> String {
    src.replace("\\qquad", " ").replace("\\cr", " ").replace(['&', '$'], " ")
}

/// Top-level parenthesized groups, parentheses included.
fn paren_groups(src: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in src.char_indices() {
        match ch {
            '(' => {
                if depth == 0 {
                    start = i;
                }
                depth += 1;
            }
            ')' => {
                depth -= 1;
                if depth == 0 {
                    out.push(&src[start..=i]);
                }
                if depth < 0 {
                    return Err(Error::Parse("unbalanced parentheses".into()));
                }
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse("unbalanced parentheses".into()));
    }
    Ok(out)
}

fn asset_error(name: &str, e: Error) -> Error {
    Error::Asset { name: name.into(), reason: e.to_string() }
}

/// The ideal displayed as the first base-locus component.
pub fn base_space(assets: &Assets) -> Result<LinearSpace> {
    let text = strip_markup(&assets.text(BASE_IDEAL_EXAMPLE)?);
    let groups = paren_groups(&text).map_err(|e| asset_error(BASE_IDEAL_EXAMPLE, e))?;
    match groups.as_slice() {
        [one] => space_from_list(one).map_err(|e| asset_error(BASE_IDEAL_EXAMPLE, e)),
        _ => Err(asset_error(BASE_IDEAL_EXAMPLE, Error::Parse(format!("{} ideals instead of 1", groups.len())))),
    }
}

/// The eight ideals through the printed cusp, and the cusp itself.
pub fn printed_cusp_data(assets: &Assets) -> Result<(Vec<LinearSpace>, Vector)> {
    let raw = assets.text(CUSP_EIGHT_IDEALS)?;
    let (ideals, point) = raw
        .rsplit_once('[')
        .ok_or_else(|| asset_error(CUSP_EIGHT_IDEALS, Error::Parse("no bracketed point".into())))?;
    let point = point.split(']').next().unwrap_or_default();
    let coords: Vec<i64> = point
        .split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| asset_error(CUSP_EIGHT_IDEALS, Error::Parse(e.to_string())))?;
    if coords.len() != 14 {
        return Err(asset_error(CUSP_EIGHT_IDEALS, Error::Parse(format!("point with {} coordinates", coords.len()))));
    }
    let text = strip_markup(ideals);
    let spaces = paren_groups(&text)
        .and_then(|g| g.iter().map(|s| space_from_list(s)).collect::<Result<Vec<_>>>())
        .map_err(|e| asset_error(CUSP_EIGHT_IDEALS, e))?;
    let mut cusp = [0i64; 14];
    cusp.copy_from_slice(&coords);
    Ok((spaces, cusp))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_space_is_a_coordinate_subspace() {
        let s = base_space(&Assets::embedded()).unwrap();
        assert_eq!(s.forms().len(), 10);
        assert_eq!(s.parametrization().len(), 4);
        let mut free: Vec<usize> = s
            .parametrization()
            .iter()
            .map(|p| p.iter().position(|&x| x != 0).unwrap())
            .collect();
        free.sort();
        // Y_1, Y_4, Y_7, Y_12 survive.
        assert_eq!(free, vec![0, 3, 6, 11]);
    }

    #[test]
    fn printed_cusp_data_parses() {
        let (spaces, cusp) = printed_cusp_data(&Assets::embedded()).unwrap();
        assert_eq!(spaces.len(), 8);
        assert_eq!(cusp, [0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0]);
        assert_eq!(spaces[0], base_space(&Assets::embedded()).unwrap());
    }

    #[test]
    fn canonical_form_ignores_generator_order_and_scale() {
        let s = base_space(&Assets::embedded()).unwrap();
        let mut forms = s.forms().to_vec();
        forms.reverse();
        forms[0] = forms[0].map(|x| -3 * x);
        forms[1] = std::array::from_fn(|i| forms[1][i] + forms[2][i]);
        assert_eq!(LinearSpace::from_forms(&forms).unwrap(), s);
    }
}
