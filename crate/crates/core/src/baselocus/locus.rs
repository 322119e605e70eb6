//! Vanishing of the Thomae images on the base-locus components, the matching
//! with odd triplets, and the incidence geometry of the cusps.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::orbit::{cusp_orbit, orbit_of_base_space, Orbit};
use super::space::{normalize, printed_cusp_data, LinearSpace, Vector};
use crate::assets::Assets;
use crate::charspace::{
    enumerate_odd_triplets, enumerate_sextuplets, nonzero_evens, orthogonal_even_set, perm_to_orthogonal, t_ij_char,
    Char, Perm,
};
use crate::error::{Error, Result};
use crate::exactalg::IntPoly;
use crate::specht::{koike_ideal, SpechtBasis, YAction};
use crate::thomae::{CubicTransport, YCubic};

/// The Koike generators, the Specht basis and one cubic representative per
/// nonzero even characteristic.
pub struct LocusContext {
    koike: Vec<IntPoly>,
    basis: SpechtBasis,
    cubics: BTreeMap<Char, YCubic>,
}

/// A triple of points of `{1..8}` made to collide.
pub type Collision = [u8; 3];

impl LocusContext {
    pub fn new(assets: &Assets) -> Result<Self> {
        let transport = CubicTransport::new(assets)?;
        let mut cubics = BTreeMap::new();
        for m in nonzero_evens() {
            let c = transport.representative(m)?.ok_or(Error::Inconsistent)?;
            cubics.insert(m, c);
        }
        Ok(LocusContext { koike: koike_ideal(assets)?, basis: SpechtBasis::standard(), cubics })
    }

    pub fn point_on_variety(&self, y: &Vector) -> bool {
        let p: Vec<BigInt> = y.iter().map(|&v| v.into()).collect();
        self.koike.iter().all(|f| f.eval(&p).is_zero())
    }

    /// Substitutes the parametrization into every Koike generator.
    pub fn space_on_variety(&self, s: &LinearSpace) -> bool {
        let images = restriction(s);
        self.koike.iter().all(|f| f.substitute(&images).expect("14 images").is_zero())
    }

    /// Nonzero even characteristics whose cubic representative restricts to
    /// zero on the space. A product of linear forms vanishes on a linear
    /// space exactly when one of its factors does.
    pub fn restricted_zeros(&self, s: &LinearSpace) -> Vec<Char> {
        self.cubics.iter().filter(|(_, c)| c.forms.iter().any(|f| s.kills(f))).map(|(&m, _)| m).collect()
    }

    /// `Y_1 .. Y_14` along the curve where the points of `c` collide at rate
    /// `eps`, as polynomials in `eps`; the other points are random integers.
    pub fn collision_curve(&self, c: Collision, seed: u64) -> Vec<IntPoly> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut values: Vec<i64> = Vec::new();
        while values.len() < 10 {
            let v = rng.gen_range(-1000..=1000);
            if !values.contains(&v) {
                values.push(v);
            }
        }
        let x: Vec<IntPoly> = (1..=8u8)
            .map(|i| {
                let base = IntPoly::constant(1, BigInt::from(values[c[0] as usize - 1]));
                match c.iter().position(|&p| p == i) {
                    None => IntPoly::constant(1, BigInt::from(values[i as usize - 1])),
                    Some(0) => base,
                    Some(k) => &base + &IntPoly::var(1, 0).scale(&BigInt::from(values[7 + k])),
                }
            })
            .collect();
        self.basis.polys().iter().map(|y| y.substitute(&x).expect("8 images")).collect()
    }

    /// The point of `P^13` reached by the curve at `eps = 0`.
    pub fn collision_limit(&self, curve: &[IntPoly]) -> Result<Vector> {
        let low = curve.iter().filter_map(lowest_order).min().ok_or(Error::Inconsistent)?;
        let v: Vec<i64> = curve
            .iter()
            .map(|f| f.coefficient(&[low as u8]).to_i64().ok_or_else(|| Error::Invalid("coordinate exceeds i64".into())))
            .collect::<Result<_>>()?;
        normalize(&v)
    }

    /// Order in `eps` of each Thomae image along the curve, through the cubic
    /// representatives evaluated at the curve's `Y`-values.
    pub fn orders_along(&self, curve: &[IntPoly]) -> BTreeMap<Char, Option<u32>> {
        self.cubics
            .iter()
            .map(|(&m, c)| {
                let f = c.to_y_poly().substitute(curve).expect("14 images");
                (m, lowest_order(&f))
            })
            .collect()
    }

    /// `0` together with the characteristics whose images vanish to more
    /// than the minimal order along the curve, i.e. vanish on the image of
    /// the exceptional divisor.
    pub fn image_zeros(&self, curve: &[IntPoly]) -> Vec<Char> {
        let orders = self.orders_along(curve);
        let min = orders.values().flatten().min().copied();
        let mut out = vec![Char::ZERO];
        out.extend(orders.iter().filter(|(_, &o)| o.is_none() || o > min).map(|(&m, _)| m));
        out
    }
}

fn lowest_order(f: &IntPoly) -> Option<u32> {
    f.terms().map(|(e, _)| e[0] as u32).min()
}

fn restriction(s: &LinearSpace) -> Vec<IntPoly> {
    (0..14)
        .map(|i| {
            let coeffs: Vec<BigInt> = s.parametrization().iter().map(|p| BigInt::from(p[i])).collect();
            IntPoly::linear(&coeffs)
        })
        .collect()
}

/// All 3-subsets of `{1..8}`.
pub fn collisions() -> Vec<Collision> {
    let mut out = Vec::new();
    for a in 1..=8u8 {
        for b in a + 1..=8 {
            for c in b + 1..=8 {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// The odd triplet of the pairs inside a collision.
pub fn collision_triplet(c: Collision) -> Result<[Char; 3]> {
    let mut t = [t_ij_char(c[0], c[1])?, t_ij_char(c[0], c[2])?, t_ij_char(c[1], c[2])?];
    t.sort();
    Ok(t)
}

/// The odd triplet with zero sum whose orthogonal nonzero evens are `five`.
pub fn triplet_for(five: &[Char]) -> Option<[Char; 3]> {
    let mut hits = enumerate_odd_triplets().into_iter().filter(|t| orthogonal_even_set(t) == five);
    let first = hits.next()?;
    hits.next().is_none().then_some(first)
}

#[derive(Clone, Debug, Serialize)]
pub struct SpaceReport {
    pub on_variety: bool,
    /// Every Thomae image restricts to zero on the space.
    pub all_images_vanish: bool,
    /// The collision whose limit points lie on the space.
    pub collision: Option<Collision>,
    pub vanishing: Vec<u8>,
    pub triplet: Option<[u8; 3]>,
    /// The triplet equals the one formed by the colliding pairs.
    pub triplet_matches_collision: bool,
}

impl SpaceReport {
    pub fn all_pass(&self) -> bool {
        self.on_variety
            && self.all_images_vanish
            && self.vanishing.len() == 6
            && self.triplet.is_some()
            && self.triplet_matches_collision
    }
}

/// A collision with its curve and limit point.
pub struct CollisionData {
    pub collision: Collision,
    pub curve: Vec<IntPoly>,
    pub limit: Vector,
}

pub fn collision_table(ctx: &LocusContext, seed: u64) -> Result<Vec<CollisionData>> {
    collisions()
        .into_iter()
        .map(|c| {
            let curve = ctx.collision_curve(c, seed);
            let limit = ctx.collision_limit(&curve)?;
            Ok(CollisionData { collision: c, curve, limit })
        })
        .collect()
}

pub fn variety_and_vanishing_check(ctx: &LocusContext, table: &[CollisionData], s: &LinearSpace) -> Result<SpaceReport> {
    let found: Vec<&CollisionData> = table.iter().filter(|d| s.contains(&d.limit)).collect();
    let found = match found.as_slice() {
        [one] => Some(*one),
        _ => None,
    };
    let vanishing = found.map(|d| ctx.image_zeros(&d.curve)).unwrap_or_default();
    let triplet = if vanishing.len() == 6 { triplet_for(&vanishing[1..]) } else { None };
    let matches = match (found, triplet) {
        (Some(d), Some(t)) => collision_triplet(d.collision)? == t,
        _ => false,
    };
    Ok(SpaceReport {
        on_variety: ctx.space_on_variety(s),
        all_images_vanish: ctx.restricted_zeros(s).len() == 35,
        collision: found.map(|d| d.collision),
        vanishing: vanishing.iter().map(|m| m.digit()).collect(),
        triplet: triplet.map(|t| t.map(Char::digit)),
        triplet_matches_collision: matches,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LocusReport {
    pub spaces: usize,
    pub stabilizer_order: usize,
    pub kernel_order: usize,
    pub printed_spaces_in_orbit: usize,
    pub spaces_on_variety: usize,
    /// Spaces on which all 35 nonzero Thomae images restrict to zero.
    pub spaces_in_base_locus: usize,
    /// Distinct collisions matched one per space.
    pub distinct_collisions: usize,
    /// Histogram of the image vanishing-set sizes.
    pub vanishing_sizes: BTreeMap<usize, usize>,
    /// The vanishing sets coincide with the sextuplets containing `0`.
    pub vanishing_sets_are_sextuplets: bool,
    pub distinct_triplets: usize,
    pub triplet_bijective: bool,
    pub base_triplet: Option<[u8; 3]>,
    pub equivariance_checked: usize,
    pub equivariance_failures: usize,
}

impl LocusReport {
    pub fn all_pass(&self) -> bool {
        self.spaces == 56
            && self.stabilizer_order == 720
            && self.printed_spaces_in_orbit == 8
            && self.spaces_on_variety == 56
            && self.spaces_in_base_locus == 56
            && self.distinct_collisions == 56
            && self.vanishing_sizes.get(&6) == Some(&56)
            && self.vanishing_sets_are_sextuplets
            && self.triplet_bijective
            && self.equivariance_failures == 0
    }
}

fn triplet_set(t: &[u8; 3]) -> BTreeSet<u8> {
    t.iter().copied().collect()
}

pub fn locus_suite<R: Rng>(assets: &Assets, rng: &mut R, random_perms: usize, seed: u64) -> Result<LocusReport> {
    let ctx = LocusContext::new(assets)?;
    let orbit = orbit_of_base_space(assets)?;
    let census = orbit.group_census();
    let (printed, _) = printed_cusp_data(assets)?;
    let table = collision_table(&ctx, seed)?;
    let reports = orbit
        .members
        .iter()
        .map(|s| variety_and_vanishing_check(&ctx, &table, s))
        .collect::<Result<Vec<_>>>()?;
    let collisions: BTreeSet<Collision> = reports.iter().filter_map(|r| r.collision).collect();
    let mut sizes = BTreeMap::new();
    for r in &reports {
        *sizes.entry(r.vanishing.len()).or_insert(0) += 1;
    }
    let sets: BTreeSet<Vec<u8>> = reports.iter().map(|r| r.vanishing.clone()).collect();
    let sextuplets: BTreeSet<Vec<u8>> =
        enumerate_sextuplets().iter().map(|s| s.iter().map(|m| m.digit()).collect()).collect();
    let triplets: BTreeSet<BTreeSet<u8>> = reports.iter().filter_map(|r| r.triplet.as_ref().map(triplet_set)).collect();
    let all_triplets = enumerate_odd_triplets().len();
    let mut failures = 0;
    for _ in 0..random_perms {
        let sigma = Perm::random(rng);
        let o = perm_to_orthogonal(&sigma);
        let k = rng.gen_range(0..orbit.len());
        let moved = orbit.members[k].moved(&YAction::of(&sigma))?;
        let expected = reports[k].triplet.map(|t| t.map(|d| o.apply(Char::from_digit(d).expect("digit")).digit()));
        let got = variety_and_vanishing_check(&ctx, &table, &moved)?.triplet;
        if expected.as_ref().map(triplet_set) != got.as_ref().map(triplet_set) {
            failures += 1;
        }
    }
    Ok(LocusReport {
        spaces: orbit.len(),
        stabilizer_order: census.stabilizer_order,
        kernel_order: census.kernel_order,
        printed_spaces_in_orbit: printed.iter().filter(|s| orbit.position(s).is_some()).count(),
        spaces_on_variety: reports.iter().filter(|r| r.on_variety).count(),
        spaces_in_base_locus: reports.iter().filter(|r| r.all_images_vanish).count(),
        distinct_collisions: collisions.len(),
        vanishing_sizes: sizes,
        vanishing_sets_are_sextuplets: sets == sextuplets,
        distinct_triplets: triplets.len(),
        triplet_bijective: triplets.len() == orbit.len()
            && orbit.len() == all_triplets
            && reports.iter().all(|r| r.triplet.is_some() && r.triplet_matches_collision),
        base_triplet: reports.first().and_then(|r| r.triplet),
        equivariance_checked: random_perms,
        equivariance_failures: failures,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CuspReport {
    pub printed_on_variety: bool,
    pub printed_in_printed_spaces: usize,
    pub cusps: usize,
    pub cusps_on_variety: usize,
    /// Histogram of the number of spaces through each cusp.
    pub spaces_per_cusp: BTreeMap<usize, usize>,
    /// Histogram of the number of cusps on each space.
    pub cusps_per_space: BTreeMap<usize, usize>,
    pub characteristics_assigned: usize,
    pub characteristic_bijective: bool,
    /// Histogram of intersection dimensions over pairs of distinct spaces.
    pub intersection_dims: BTreeMap<usize, usize>,
    pub intersections_without_cusp: usize,
    pub point_intersections_not_cusp: usize,
}

impl CuspReport {
    pub fn all_pass(&self) -> bool {
        self.printed_on_variety
            && self.printed_in_printed_spaces == 8
            && self.cusps == 35
            && self.cusps_on_variety == 35
            && self.spaces_per_cusp.keys().eq([8].iter())
            && self.cusps_per_space.keys().eq([5].iter())
            && self.characteristic_bijective
            && self.intersections_without_cusp == 0
            && self.point_intersections_not_cusp == 0
    }
}

/// The unique nonzero even characteristic orthogonal to every member of the
/// given triplets.
pub fn char_of_cusp(triplets: &[[Char; 3]]) -> Option<Char> {
    let all: Vec<Char> = triplets.iter().flatten().copied().collect();
    match orthogonal_even_set(&all).as_slice() {
        [m] => Some(*m),
        _ => None,
    }
}

pub fn cusp_suite(assets: &Assets, seed: u64) -> Result<CuspReport> {
    let ctx = LocusContext::new(assets)?;
    let spaces: Orbit<LinearSpace> = orbit_of_base_space(assets)?;
    let (printed, cusp) = printed_cusp_data(assets)?;
    let cusps = cusp_orbit(&cusp)?;
    let table = collision_table(&ctx, seed)?;
    let triplets: Vec<Option<[Char; 3]>> = spaces
        .members
        .iter()
        .map(|s| {
            let r = variety_and_vanishing_check(&ctx, &table, s)?;
            Ok(r.triplet.map(|t| t.map(|d| Char::from_digit(d).expect("digit"))))
        })
        .collect::<Result<_>>()?;
    let incident: Vec<Vec<usize>> = cusps
        .members
        .iter()
        .map(|c| (0..spaces.len()).filter(|&i| spaces.members[i].contains(c)).collect())
        .collect();
    let mut per_cusp = BTreeMap::new();
    for inc in &incident {
        *per_cusp.entry(inc.len()).or_insert(0) += 1;
    }
    let mut per_space = BTreeMap::new();
    for s in &spaces.members {
        *per_space.entry(cusps.members.iter().filter(|c| s.contains(c)).count()).or_insert(0) += 1;
    }
    let chars: Vec<Option<Char>> = incident
        .iter()
        .map(|inc| {
            let ts: Option<Vec<[Char; 3]>> = inc.iter().map(|&i| triplets[i]).collect();
            ts.and_then(|ts| char_of_cusp(&ts))
        })
        .collect();
    let assigned: BTreeSet<Char> = chars.iter().flatten().copied().collect();
    let mut dims = BTreeMap::new();
    let mut without = 0;
    let mut not_cusp = 0;
    for i in 0..spaces.len() {
        for j in i + 1..spaces.len() {
            let (a, b) = (&spaces.members[i], &spaces.members[j]);
            let d = a.intersection_dim(b);
            *dims.entry(d).or_insert(0) += 1;
            if d == 0 {
                continue;
            }
            if !cusps.members.iter().any(|c| a.contains(c) && b.contains(c)) {
                without += 1;
            }
            if d == 1 {
                let v = normalize(&a.intersection(b)?[0])?;
                if cusps.position(&v).is_none() {
                    not_cusp += 1;
                }
            }
        }
    }
    Ok(CuspReport {
        printed_on_variety: ctx.point_on_variety(&cusp),
        printed_in_printed_spaces: printed.iter().filter(|s| s.contains(&cusp)).count(),
        cusps: cusps.len(),
        cusps_on_variety: cusps.members.iter().filter(|c| ctx.point_on_variety(c)).count(),
        spaces_per_cusp: per_cusp,
        cusps_per_space: per_space,
        characteristics_assigned: chars.iter().flatten().count(),
        characteristic_bijective: chars.iter().all(Option::is_some)
            && assigned.len() == cusps.len()
            && assigned.len() == nonzero_evens().len(),
        intersection_dims: dims,
        intersections_without_cusp: without,
        point_intersections_not_cusp: not_cusp,
    })
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::baselocus::space::base_space;
    use rand::SeedableRng;

    #[test]
    fn base_space_is_the_collision_of_three_points() {
        let assets = Assets::embedded();
        let ctx = LocusContext::new(&assets).unwrap();
        let table = collision_table(&ctx, 1).unwrap();
        let s = base_space(&assets).unwrap();
        let r = variety_and_vanishing_check(&ctx, &table, &s).unwrap();
        assert!(r.all_pass(), "{r:?}");
        let t = r.triplet.unwrap().map(|d| Char::from_digit(d).unwrap());
        let five: Vec<u8> = orthogonal_even_set(&t).iter().map(|m| m.digit()).collect();
        assert_eq!(five, r.vanishing[1..].to_vec());
    }

    #[test]
    fn factor_test_agrees_with_substitution() {
        let assets = Assets::embedded();
        let ctx = LocusContext::new(&assets).unwrap();
        let s = base_space(&assets).unwrap();
        let images = restriction(&s);
        let zeros = ctx.restricted_zeros(&s);
        for (m, c) in &ctx.cubics {
            let restricted = c.to_y_poly().substitute(&images).unwrap();
            assert_eq!(restricted.is_zero(), zeros.contains(m));
        }
    }

    #[test]
    fn image_orders_are_one_and_three() {
        let assets = Assets::embedded();
        let ctx = LocusContext::new(&assets).unwrap();
        let curve = ctx.collision_curve([2, 5, 7], 9);
        let mut hist = BTreeMap::new();
        for o in ctx.orders_along(&curve).values() {
            *hist.entry(*o).or_insert(0) += 1;
        }
        assert_eq!(hist, BTreeMap::from([(Some(1), 30), (Some(3), 5)]));
    }

    #[test]
    fn locus_suite_passes() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let r = locus_suite(&Assets::embedded(), &mut rng, 10, 1).unwrap();
        assert!(r.all_pass(), "{r:?}");
    }

    #[test]
    fn cusp_suite_passes() {
        let r = cusp_suite(&Assets::embedded(), 1).unwrap();
        assert!(r.all_pass(), "{r:?}");
    }
}
