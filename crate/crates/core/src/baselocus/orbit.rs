//! The symmetric-group orbits of the base-locus components and of the cusps.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;

use super::space::{base_space, normalize, LinearSpace, Vector};
use crate::assets::Assets;
use crate::charspace::Perm;
use crate::error::{Error, Result};
use crate::specht::YAction;

/// Image of a point when the forms are moved by `sigma`: the transpose of the
/// matrix of `sigma^-1`, so incidence with moved spaces is preserved.
pub fn move_point(sigma: &Perm, y: &Vector) -> Vector {
    let m = YAction::of(&sigma.inverse());
    let mut out = [0i64; 14];
    for (k, slot) in out.iter_mut().enumerate() {
        *slot = (0..14).map(|i| m.0[i][k] * y[i]).sum();
    }
    out
}

/// A finite orbit with the action of the two standard generators recorded
/// as permutations of the orbit indices.
#[derive(Clone, Debug)]
pub struct Orbit<T> {
    pub members: Vec<T>,
    /// `generator_images[g][i]` is the index of `g . members[i]`.
    pub generator_images: [Vec<usize>; 2],
}

fn orbit_by<T, F>(start: T, cap: usize, act: F) -> Result<Orbit<T>>
where
    T: Clone + Ord,
    F: Fn(&Perm, &T) -> Result<T>,
{
    let gens = Perm::generators();
    let mut index: BTreeMap<T, usize> = BTreeMap::new();
    let mut members = vec![start.clone()];
    index.insert(start, 0);
    let mut images: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    let mut k = 0;
    while k < members.len() {
        for (g, img) in gens.iter().zip(images.iter_mut()) {
            let next = act(g, &members[k])?;
            let idx = match index.get(&next) {
                Some(&i) => i,
                None => {
                    if members.len() == cap {
                        return Err(Error::ClosureCap(cap));
                    }
                    members.push(next.clone());
                    index.insert(next, members.len() - 1);
                    members.len() - 1
                }
            };
            img.push(idx);
        }
        k += 1;
    }
    Ok(Orbit { members, generator_images: images })
}

pub fn space_orbit(start: &LinearSpace) -> Result<Orbit<LinearSpace>> {
    orbit_by(start.clone(), 10_000, |g, s| s.moved(&YAction::of(g)))
}

pub fn orbit_of_base_space(assets: &Assets) -> Result<Orbit<LinearSpace>> {
    space_orbit(&base_space(assets)?)
}

pub fn cusp_orbit(start: &Vector) -> Result<Orbit<Vector>> {
    orbit_by(normalize(start)?, 10_000, |g, y| normalize(&move_point(g, y)))
}

impl<T: PartialEq> Orbit<T> {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn position(&self, x: &T) -> Option<usize> {
        self.members.iter().position(|m| m == x)
    }

    /// Walks the whole symmetric group through the generators, composing the
    /// induced index permutations, and counts the stabilizer of the first
    /// member and the kernel of the action.
    pub fn group_census(&self) -> GroupCensus {
        let gens = Perm::generators();
        let n = self.members.len();
        let identity: Vec<usize> = (0..n).collect();
        let mut seen: HashMap<Perm, Vec<usize>> = HashMap::new();
        seen.insert(Perm::identity(), identity.clone());
        let mut queue = VecDeque::from([Perm::identity()]);
        while let Some(tau) = queue.pop_front() {
            let pi = seen[&tau].clone();
            for (g, img) in gens.iter().zip(&self.generator_images) {
                let rho = g.compose(&tau);
                if !seen.contains_key(&rho) {
                    seen.insert(rho, pi.iter().map(|&i| img[i]).collect());
                    queue.push_back(rho);
                }
            }
        }
        GroupCensus {
            group_order: seen.len(),
            stabilizer_order: seen.values().filter(|p| p[0] == 0).count(),
            kernel_order: seen.values().filter(|p| **p == identity).count(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GroupCensus {
    pub group_order: usize,
    pub stabilizer_order: usize,
    pub kernel_order: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baselocus::space::printed_cusp_data;

    #[test]
    fn fifty_six_spaces_with_trivial_kernel() {
        let orbit = orbit_of_base_space(&Assets::embedded()).unwrap();
        assert_eq!(orbit.len(), 56);
        let c = orbit.group_census();
        assert_eq!(c.group_order, 40320);
        assert_eq!(c.stabilizer_order * 56, 40320);
        assert_eq!(c.kernel_order, 1);
    }

    #[test]
    fn printed_spaces_lie_in_the_orbit() {
        let assets = Assets::embedded();
        let orbit = orbit_of_base_space(&assets).unwrap();
        let (printed, _) = printed_cusp_data(&assets).unwrap();
        assert!(printed.iter().all(|s| orbit.position(s).is_some()));
    }

    #[test]
    fn thirty_five_cusps() {
        let (_, cusp) = printed_cusp_data(&Assets::embedded()).unwrap();
        assert_eq!(cusp_orbit(&cusp).unwrap().len(), 35);
    }

    #[test]
    fn moved_points_follow_moved_spaces() {
        let assets = Assets::embedded();
        let (spaces, cusp) = printed_cusp_data(&assets).unwrap();
        let sigma = Perm::cycle(&[2, 5, 7]).compose(&Perm::transposition(1, 8));
        let y = move_point(&sigma, &cusp);
        for s in &spaces {
            assert!(s.moved(&YAction::of(&sigma)).unwrap().contains(&y));
        }
    }
}
