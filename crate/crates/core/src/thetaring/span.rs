//! Dimensions of the spans of the relation families in weight 8, computed
//! by evaluating each relation at random points of the 14-dimensional space
//! left after eliminating the linear relation.

use serde::Serialize;

use super::forms::ThetaForms;
use super::relations::{alternating_generators, coset_quartic_relations, induced_permutation, printed_cubic, squared_quartic_relations};
use super::weight2::theta4_in_theta;
use crate::assets::Assets;
use crate::charspace::nonzero_evens;
use crate::error::Result;
use crate::exactalg::poly::monomials_of_degree;
use crate::exactalg::{IntPoly, Modulus, PointSampler, PrimeFieldMatrix};

/// A weight-8 relation among the Theta-forms, evaluated through the
/// expressions of the `theta[m]^4` as linear forms.
#[derive(Clone, Debug)]
pub enum Relation {
    /// A cubic times `T_j`.
    CubicMultiple(usize, usize),
    /// `prod_{a+M} - prod_{b+M}`.
    Coset(Vec<u8>, Vec<u8>),
    /// `A^2 + B^2 + C^2 - 2AB - 2AC - 2BC` over three pairs; the flag is
    Squared([(u8, u8); 3]),
    Schottky,
}

pub struct RelationFamilies {
    pub linear: Vec<Vec<u64>>,
    cubics: Vec<IntPoly>,
    pub relations: Vec<Relation>,
    modulus: Modulus,
}

impl RelationFamilies {
    pub fn build(forms: &ThetaForms, assets: &Assets, modulus: Modulus) -> Result<Self> {
        let m = &modulus;
        let mut linear = vec![vec![0u64; 14]; 64];
        for c in nonzero_evens() {
            let q = theta4_in_theta(forms, c)?;
            for k in 0..14 {
                let n = m.from_bigint(q[k].numer());
                let d = m.from_bigint(q[k].denom());
                linear[c.digit() as usize][k] = m.mul(n, m.inv(d).expect("unit"));
            }
        }
        let perms: Vec<Vec<usize>> = alternating_generators().iter().filter_map(|g| induced_permutation(forms, g)).collect();
        let mut cubics: Vec<IntPoly> = vec![printed_cubic(assets)?];
        let mut k = 0;
        while k < cubics.len() {
            for p in &perms {
                let h = cubics[k].permute_vars(p);
                if !cubics.contains(&h) {
                    cubics.push(h);
                }
            }
            k += 1;
        }
        let mut relations = Vec::new();
        for i in 0..cubics.len() {
            for j in 0..14 {
                relations.push(Relation::CubicMultiple(i, j));
            }
        }
        for q in coset_quartic_relations().0 {
            relations.push(Relation::Coset(q.first, q.second));
        }
        let (passing, _) = squared_quartic_relations(4, 0x5eed, modulus)?;
        for (_, pairs) in passing {
            relations.push(Relation::Squared(pairs.map(|(a, b)| (a.digit(), b.digit()))));
        }
        relations.push(Relation::Schottky);
        Ok(RelationFamilies { linear, cubics, relations, modulus })
    }

    /// Values of all relations at `t = (T_1, .., T_14)`.
    pub fn values(&self, t: &[u64]) -> Vec<u64> {
        let m = &self.modulus;
        let mut full = t.to_vec();
        full.push(t.iter().fold(0, |acc, &v| m.sub(acc, v)));
        let l: Vec<u64> = self
            .linear
            .iter()
            .map(|row| row.iter().zip(t).fold(0, |acc, (&a, &b)| m.add(acc, m.mul(a, b))))
            .collect();
        let cubic_vals: Vec<u64> = self.cubics.iter().map(|f| f.eval_mod(&full, m)).collect();
        let prod = |ds: &[u8]| ds.iter().fold(1u64, |acc, &d| m.mul(acc, l[d as usize]));
        self.relations
            .iter()
            .map(|r| match r {
                Relation::CubicMultiple(i, j) => m.mul(cubic_vals[*i], t[*j]),
                Relation::Coset(a, b) => m.sub(prod(a), prod(b)),
                Relation::Squared(pairs) => {
                    let v: Vec<u64> = pairs.iter().map(|&(a, b)| m.mul(l[a as usize], l[b as usize])).collect();
                    let (a, b, c) = (v[0], v[1], v[2]);
                    let sq = m.add(m.add(m.mul(a, a), m.mul(b, b)), m.mul(c, c));
                    let cr = m.add(m.add(m.mul(a, b), m.mul(a, c)), m.mul(b, c));
                    m.sub(sq, m.add(cr, cr))
                }
                Relation::Schottky => {
                    let (mut s2, mut s4) = (0, 0);
                    for c in nonzero_evens() {
                        let v = l[c.digit() as usize];
                        let v2 = m.mul(v, v);
                        s2 = m.add(s2, v2);
                        s4 = m.add(s4, m.mul(v2, v2));
                    }
                    m.sub(m.mul(s2, s2), m.mul(8, s4))
                }
            })
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationSpanReport {
    pub points: usize,
    pub quartic_monomials: usize,
    /// Relations that fail to vanish at a point of the image.
    pub nonvanishing_on_image: usize,
    pub cubic_multiples: usize,
    pub with_coset_quartics: usize,
    pub squared_quartics_alone: usize,
    pub with_squared_quartics: usize,
    pub with_schottky: usize,
    /// Weight-8 dimension implied by the full span.
    pub implied_weight8_dim: usize,
    /// Quartic relations needed beyond the multiples of the cubics.
    pub new_quartics: usize,
}

fn rank_of(rows: Vec<Vec<u64>>, modulus: Modulus) -> usize {
    if rows.is_empty() {
        0
    } else {
        PrimeFieldMatrix::from_rows(rows, modulus).rank()
    }
}

pub fn relation_spans(forms: &ThetaForms, assets: &Assets, points: usize, seed: u64, modulus: Modulus) -> Result<RelationSpanReport> {
    let fam = RelationFamilies::build(forms, assets, modulus)?;
    let mut sampler = PointSampler::new(seed ^ 0x5a, modulus);
    let mut nonvanishing = vec![false; fam.relations.len()];
    for _ in 0..3 {
        let v = forms.values_mod(&sampler.point(8), &modulus);
        for (k, val) in fam.values(&v[..14]).iter().enumerate() {
            nonvanishing[k] |= *val != 0;
        }
    }
    let mut sampler = PointSampler::new(seed, modulus);
    let cols: Vec<Vec<u64>> = (0..points).map(|_| fam.values(&sampler.point(14))).collect();
    let row = |k: usize| -> Vec<u64> { cols.iter().map(|c| c[k]).collect() };
    let select = |keep: &dyn Fn(&Relation) -> bool| -> Vec<Vec<u64>> {
        fam.relations.iter().enumerate().filter(|(_, r)| keep(r)).map(|(k, _)| row(k)).collect()
    };
    let cubic = rank_of(select(&|r| matches!(r, Relation::CubicMultiple(..))), modulus);
    let coset = rank_of(select(&|r| matches!(r, Relation::CubicMultiple(..) | Relation::Coset(..))), modulus);
    let squared_alone = rank_of(select(&|r| matches!(r, Relation::Squared(..))), modulus);
    let squared = rank_of(select(&|r| !matches!(r, Relation::Schottky)), modulus);
    let total = rank_of(select(&|_| true), modulus);
    let monos = monomials_of_degree(14, 4).len();
    Ok(RelationSpanReport {
        points,
        quartic_monomials: monos,
        nonvanishing_on_image: nonvanishing.iter().filter(|&&b| b).count(),
        cubic_multiples: cubic,
        with_coset_quartics: coset,
        squared_quartics_alone: squared_alone,
        with_squared_quartics: squared,
        with_schottky: total,
        implied_weight8_dim: monos - total,
        new_quartics: total - cubic,
    })
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_relation_vanishes_on_the_image() {
        let assets = Assets::embedded();
        let forms = ThetaForms::load(&assets).unwrap();
        let m = Modulus::default();
        let fam = RelationFamilies::build(&forms, &assets, m).unwrap();
        assert_eq!(fam.relations.len(), 15 * 14 + 105 + 210 + 1);
        let mut sampler = PointSampler::new(11, m);
        for _ in 0..2 {
            let v = forms.values_mod(&sampler.point(8), &m);
            assert!(fam.values(&v[..14]).iter().all(|&x| x == 0));
        }
        let off = fam.values(&sampler.point(14));
        assert!(off.iter().any(|&x| x != 0));
    }
}
