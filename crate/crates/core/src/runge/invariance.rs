//! Exact invariance of the quadric `P` and the octic `Q` in `F_0 .. F_7`.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use serde::Serialize;

use super::gauss::{n3_prime_generators, GaussMatrix, MatrixGroup, CLOSURE_CAP};
use crate::assets::{Assets, P_POLY, Q_POLY};
use crate::error::{Error, Result};
use crate::exactalg::texpoly::{parse_poly, VarScheme};
use crate::exactalg::{IntPoly, SparsePoly};

pub type GaussPoly = SparsePoly<Complex<BigRational>>;

pub fn f_scheme() -> VarScheme {
    VarScheme::new("F", 8, 0)
}

/// Parses `name := body` with display markup removed.
fn parse_display(text: &str, name: &str) -> Result<IntPoly> {
    let asset_err = |reason: String| Error::Asset { name: name.into(), reason };
    let (_, body) = text.split_once('=').ok_or_else(|| asset_err("no '='".into()))?;
    let body = body.replace("\\break", " ").replace('$', " ");
    let body = body.trim().trim_end_matches(['}', ',', '.', ' ', '\n']);
    parse_poly(body, &f_scheme()).map_err(|e| asset_err(e.to_string()))
}

pub fn load_p(assets: &Assets) -> Result<IntPoly> {
    parse_display(&assets.text(P_POLY)?, P_POLY)
}

pub fn load_q(assets: &Assets) -> Result<IntPoly> {
    parse_display(&assets.text(Q_POLY)?, Q_POLY)
}

fn to_gauss(p: &IntPoly) -> GaussPoly {
    p.map_coeffs(|c| Complex::new(BigRational::from_integer(c.clone()), BigRational::from_integer(BigInt::from(0))))
}

fn entry(g: &GaussMatrix, a: usize, b: usize) -> Complex<BigRational> {
    let (re, im, shift) = g.entry(a, b);
    let d = BigInt::from(1u64) << shift;
    Complex::new(BigRational::new(re.into(), d.clone()), BigRational::new(im.into(), d))
}

/// `p(g F)`: each `F_a` replaced by `sum_b g[a][b] F_b`.
pub fn act(g: &GaussMatrix, p: &GaussPoly) -> Result<GaussPoly> {
    let images: Vec<GaussPoly> = (0..8)
        .map(|a| SparsePoly::linear(&(0..8).map(|b| entry(g, a, b)).collect::<Vec<_>>()))
        .collect();
    p.substitute(&images)
}

#[derive(Clone, Debug, Serialize)]
pub struct InvarianceReport {
    pub generators: usize,
    pub p_terms: usize,
    pub q_terms: usize,
    pub p_invariant: usize,
    pub q_invariant: usize,
    /// Offending generator index and a monomial of the difference.
    pub failures: Vec<(usize, String)>,
    /// A diagonal sign change outside the group moves `Q`.
    pub control_outside_group: bool,
    pub control_moves_q: bool,
}

impl InvarianceReport {
    pub fn all_pass(&self) -> bool {
        self.p_invariant == self.generators
            && self.q_invariant == self.generators
            && self.control_outside_group
            && self.control_moves_q
    }
}

pub fn invariance_pq(assets: &Assets) -> Result<InvarianceReport> {
    let p = to_gauss(&load_p(assets)?);
    let q = to_gauss(&load_q(assets)?);
    let gens = n3_prime_generators()?;
    let mut failures = Vec::new();
    let (mut p_ok, mut q_ok) = (0, 0);
    for (k, g) in gens.iter().enumerate() {
        for (poly, count, name) in [(&p, &mut p_ok, "P"), (&q, &mut q_ok, "Q")] {
            let moved = act(g, poly)?;
            if &moved == poly {
                *count += 1;
            } else {
                let diff = moved.try_sub(poly)?;
                let (e, _) = diff.leading().expect("nonzero difference");
                failures.push((k, format!("{name}: exponent {e:?}")));
            }
        }
    }
    let control = GaussMatrix::diagonal_signs([-1, 1, 1, 1, 1, 1, 1, 1]);
    let group = MatrixGroup::closure(&gens, CLOSURE_CAP)?;
    Ok(InvarianceReport {
        generators: gens.len(),
        p_terms: p.len(),
        q_terms: q.len(),
        p_invariant: p_ok,
        q_invariant: q_ok,
        failures,
        control_outside_group: !group.contains(&control),
        control_moves_q: act(&control, &q)? != q,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_and_q_parse() {
        let a = Assets::embedded();
        let p = load_p(&a).unwrap();
        assert_eq!(p.len(), 8);
        let q = load_q(&a).unwrap();
        assert!(q.is_homogeneous());
        assert_eq!(q.total_degree(), Some(8));
    }

    #[test]
    fn invariance_holds() {
        let r = invariance_pq(&Assets::embedded()).unwrap();
        assert!(r.all_pass(), "{r:?}");
    }

    #[test]
    fn p_is_moved_by_a_non_unitary_change() {
        let p = to_gauss(&load_p(&Assets::embedded()).unwrap());
        let t = GaussMatrix::t_tilde([1, 0, 0]);
        // a diagonal of fourth roots of unity squares some entries to -1
        assert_ne!(act(&t, &p).unwrap(), p);
    }
}
