//! Counting combinatorics on the characteristics: stars, odd triplets,
//! sextuplets, the two families of maximal singular subspaces and the
//! boundary dictionaries relating odd and even characteristics.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::chars::{nonzero_evens, odds, Char};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Four odd characteristics forming a coset of a 2-dimensional totally
/// singular subspace; stored sorted.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Star(pub [Char; 4]);

impl Star {
    /// Validates and sorts four characteristics.
    pub fn new(mut members: [Char; 4]) -> Result<Star> {
        members.sort();
        let sum = members.iter().fold(Char::ZERO, |a, &m| a + m);
        let distinct = members.windows(2).all(|w| w[0] != w[1]);
        let odd = members.iter().all(|m| m.is_odd());
        let pairwise_even = (0..4).all(|i| (i + 1..4).all(|j| (members[i] + members[j]).is_even()));
        if !(distinct && odd && pairwise_even && sum.is_zero()) {
            return Err(Error::Invalid(format!("not a star: {members:?}")));
        }
        Ok(Star(members))
    }

    pub fn members(&self) -> &[Char; 4] {
        &self.0
    }

    /// The subspace `{a + b : a, b in star}`.
    pub fn difference_space(&self) -> Subspace {
        let m = &self.0;
        Subspace::span(&[m[0] + m[1], m[0] + m[2]])
    }

    /// The 3-dimensional span of the four members.
    pub fn span(&self) -> Subspace {
        Subspace::span(&self.0)
    }
}

fn pairwise_even(a: Char, b: Char) -> bool {
    (a + b).is_even()
}

/// All 105 stars.
pub fn enumerate_stars() -> Vec<Star> {
    let o = odds();
    let mut out = BTreeSet::new();
    for i in 0..o.len() {
        for j in i + 1..o.len() {
            if !pairwise_even(o[i], o[j]) {
                continue;
            }
            for k in j + 1..o.len() {
                if !pairwise_even(o[i], o[k]) || !pairwise_even(o[j], o[k]) {
                    continue;
                }
                let d = o[i] + o[j] + o[k];
                if let Ok(s) = Star::new([o[i], o[j], o[k], d]) {
                    out.insert(s);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Unordered triples of odd characteristics with zero sum, each sorted.
pub fn enumerate_odd_triplets() -> Vec<[Char; 3]> {
    let o = odds();
    let mut out = Vec::new();
    for i in 0..o.len() {
        for j in i + 1..o.len() {
            let c = o[i] + o[j];
            if c.is_odd() && c > o[j] {
                out.push([o[i], o[j], c]);
            }
        }
    }
    out
}

/// Nonzero even characteristics orthogonal to every input.
pub fn orthogonal_even_set(chars: &[Char]) -> Vec<Char> {
    nonzero_evens()
        .into_iter()
        .filter(|&m| chars.iter().all(|&a| m.pairing(a) == 0))
        .collect()
}

/// Nonzero even characteristics orthogonal to at least one input.
pub fn orthogonal_even_union(chars: &[Char]) -> Vec<Char> {
    nonzero_evens()
        .into_iter()
        .filter(|&m| chars.iter().any(|&a| m.pairing(a) == 0))
        .collect()
}

/// Odd characteristics orthogonal to `m`.
pub fn odds_orthogonal_to(m: Char) -> Vec<Char> {
    odds().into_iter().filter(|&a| a.pairing(m) == 0).collect()
}

/// Two maximal singular subspaces lie in the same family when their
/// intersection has even projective dimension, i.e. odd vector dimension.
pub fn same_family(a: &Subspace, b: &Subspace) -> bool {
    a.intersection(b).dim() % 2 == 1
}

/// Splits maximal singular subspaces into the two families. The class
/// containing the first input comes first.
pub fn so_orbit_split(maximals: &[Subspace]) -> Result<(Vec<Subspace>, Vec<Subspace>)> {
    let Some(first) = maximals.first() else {
        return Ok((Vec::new(), Vec::new()));
    };
    let (a, b): (Vec<Subspace>, Vec<Subspace>) =
        maximals.iter().cloned().partition(|s| same_family(first, s));
    let consistent = a.iter().all(|x| a.iter().all(|y| same_family(x, y)))
        && b.iter().all(|x| b.iter().all(|y| same_family(x, y)))
        && a.iter().all(|x| b.iter().all(|y| !same_family(x, y)));
    if !consistent {
        return Err(Error::Invalid("intersection parity is not an equivalence relation".into()));
    }
    Ok((a, b))
}

/// The sextuplet printed as an example: columns `m1 .. m6`.
pub fn example_sextuplet() -> [Char; 6] {
    [
        Char::from_bits([0, 0, 0, 0, 0, 0]),
        Char::from_bits([1, 1, 1, 1, 0, 1]),
        Char::from_bits([0, 0, 0, 1, 1, 1]),
        Char::from_bits([1, 0, 0, 0, 0, 0]),
        Char::from_bits([0, 1, 0, 1, 0, 0]),
        Char::from_bits([0, 0, 1, 1, 1, 0]),
    ]
}

pub fn is_sextuplet(s: &[Char]) -> bool {
    let distinct: BTreeSet<Char> = s.iter().copied().collect();
    if s.len() != 6 || distinct.len() != 6 || !s.iter().all(|m| m.is_even()) {
        return false;
    }
    for i in 0..6 {
        for j in i + 1..6 {
            for k in j + 1..6 {
                if !(s[i] + s[j] + s[k]).is_odd() {
                    return false;
                }
            }
        }
    }
    true
}

/// Sets of six even characteristics containing 0 with every sum of three odd,
/// each sorted.
pub fn enumerate_sextuplets() -> Vec<[Char; 6]> {
    let ev = nonzero_evens();
    let mut out = Vec::new();
    let mut cur: Vec<Char> = Vec::with_capacity(5);
    fn rec(ev: &[Char], start: usize, cur: &mut Vec<Char>, out: &mut Vec<[Char; 6]>) {
        if cur.len() == 5 {
            let mut s = [Char::ZERO; 6];
            s[1..].copy_from_slice(cur);
            if is_sextuplet(&s) {
                out.push(s);
            }
            return;
        }
        for idx in start..ev.len() {
            let m = ev[idx];
            // A triple with 0 forces every pairwise sum to be odd.
            if cur.iter().all(|&c| (c + m).is_odd()) {
                cur.push(m);
                rec(ev, idx + 1, cur, out);
                cur.pop();
            }
        }
    }
    rec(&ev, 0, &mut cur, &mut out);
    out
}

/// For each unordered way to split `set` (12 odd characteristics) into three
/// disjoint stars.
pub fn star_partitions(set: &[Char], stars: &[Star]) -> Vec<[Star; 3]> {
    let inside: Vec<Star> = stars
        .iter()
        .filter(|s| s.0.iter().all(|m| set.contains(m)))
        .copied()
        .collect();
    let mut out = Vec::new();
    for i in 0..inside.len() {
        for j in i + 1..inside.len() {
            for k in j + 1..inside.len() {
                let mut all: Vec<Char> = inside[i].0.iter().chain(&inside[j].0).chain(&inside[k].0).copied().collect();
                all.sort();
                all.dedup();
                if all.len() == 12 && all.len() == set.len() {
                    out.push([inside[i], inside[j], inside[k]]);
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StarEntry {
    pub star: Star,
    /// Nonzero evens orthogonal to at least one member.
    pub orthogonal_union: usize,
    /// The even `n` with `n + span(star)` entirely even, if unique.
    pub even_coset_shift: Option<Char>,
    /// Whether that coset is exactly the evens not in the union.
    pub coset_is_complement: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EvenEntry {
    pub m: Char,
    pub orthogonal_odds: Vec<Char>,
    pub star_partitions: usize,
    /// Evens `n` with `m + n` odd.
    pub odd_sum_partners: Vec<Char>,
    /// Zero-sum odd triplets all orthogonal to `m`.
    pub incident_triplets: usize,
    /// Whether the partners equal the union of the other four evens
    /// orthogonal to those triplets.
    pub partners_from_triplets: bool,
}

/// The dictionaries between odd data (pairs, triples, stars) and sets of
/// even characteristics.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundaryDictionaries {
    pub sextuplets: Vec<[Char; 6]>,
    pub example_sextuplet_found: bool,
    pub stars: Vec<StarEntry>,
    pub single_odd_orthogonal: Vec<usize>,
    /// Odd pairs with even sum, with their union and common orthogonal counts.
    pub even_sum_pairs: Vec<([Char; 2], usize, usize)>,
    /// Odd pairs with odd sum, with their union and common orthogonal counts.
    pub odd_sum_pairs: Vec<([Char; 2], usize, usize)>,
    /// Odd pairs with odd sum whose triplet does not cover all nonzero evens.
    pub uncovered_triplets: usize,
    pub triplets: Vec<([Char; 3], usize)>,
    /// Odd triples with pairwise even sums.
    pub pairwise_even_triples: usize,
    /// Such triples, grouped by the star they complete: group sizes.
    pub triples_per_star: Vec<usize>,
    pub evens: Vec<EvenEntry>,
}

pub fn boundary_dictionaries() -> BoundaryDictionaries {
    let o = odds();
    let stars = enumerate_stars();
    let triplets = enumerate_odd_triplets();
    let sextuplets = enumerate_sextuplets();
    let mut example = example_sextuplet();
    example.sort();
    let example_sextuplet_found = sextuplets.contains(&example);

    let star_entries = stars
        .iter()
        .map(|s| {
            let union = orthogonal_even_union(&s.0);
            let span = s.span();
            let shifts: Vec<Char> = nonzero_evens()
                .into_iter()
                .filter(|&n| span.coset(n).iter().all(|m| m.is_even()))
                .collect();
            let mut shift_cosets: Vec<Vec<Char>> = shifts.iter().map(|&n| span.coset(n)).collect();
            shift_cosets.dedup();
            let even_coset_shift = (shift_cosets.len() == 1).then(|| shift_cosets[0][0]);
            let rest: Vec<Char> = nonzero_evens().into_iter().filter(|m| !union.contains(m)).collect();
            let coset_is_complement = shift_cosets.len() == 1 && shift_cosets[0] == rest;
            StarEntry {
                star: *s,
                orthogonal_union: union.len(),
                even_coset_shift,
                coset_is_complement,
            }
        })
        .collect();

    let single_odd_orthogonal = o.iter().map(|&a| orthogonal_even_set(&[a]).len()).collect();

    let mut even_sum_pairs = Vec::new();
    let mut odd_sum_pairs = Vec::new();
    let mut uncovered_triplets = 0;
    for i in 0..o.len() {
        for j in i + 1..o.len() {
            let pair = [o[i], o[j]];
            let entry = (pair, orthogonal_even_union(&pair).len(), orthogonal_even_set(&pair).len());
            if (o[i] + o[j]).is_even() {
                even_sum_pairs.push(entry);
            } else {
                if orthogonal_even_union(&[o[i], o[j], o[i] + o[j]]).len() != 35 {
                    uncovered_triplets += 1;
                }
                odd_sum_pairs.push(entry);
            }
        }
    }

    let triplet_entries: Vec<([Char; 3], usize)> =
        triplets.iter().map(|t| (*t, orthogonal_even_set(t).len())).collect();

    let mut pairwise_even_triples = 0;
    let mut per_star = std::collections::BTreeMap::<Star, usize>::new();
    for i in 0..o.len() {
        for j in i + 1..o.len() {
            for k in j + 1..o.len() {
                if pairwise_even(o[i], o[j]) && pairwise_even(o[i], o[k]) && pairwise_even(o[j], o[k]) {
                    pairwise_even_triples += 1;
                    if let Ok(s) = Star::new([o[i], o[j], o[k], o[i] + o[j] + o[k]]) {
                        *per_star.entry(s).or_default() += 1;
                    }
                }
            }
        }
    }

    let evens = nonzero_evens()
        .into_iter()
        .map(|m| {
            let orthogonal_odds = odds_orthogonal_to(m);
            let star_partitions = star_partitions(&orthogonal_odds, &stars).len();
            let odd_sum_partners: Vec<Char> =
                Char::all().filter(|&n| n.is_even() && (m + n).is_odd()).collect();
            let incident: Vec<&[Char; 3]> =
                triplets.iter().filter(|t| t.iter().all(|a| a.pairing(m) == 0)).collect();
            let mut from_triplets = BTreeSet::new();
            for t in &incident {
                for n in orthogonal_even_set(*t) {
                    if n != m {
                        from_triplets.insert(n);
                    }
                }
            }
            let partners: BTreeSet<Char> = odd_sum_partners.iter().copied().collect();
            EvenEntry {
                m,
                orthogonal_odds,
                star_partitions,
                odd_sum_partners,
                incident_triplets: incident.len(),
                partners_from_triplets: partners == from_triplets,
            }
        })
        .collect();

    BoundaryDictionaries {
        sextuplets,
        example_sextuplet_found,
        stars: star_entries,
        single_odd_orthogonal,
        even_sum_pairs,
        odd_sum_pairs,
        uncovered_triplets,
        triplets: triplet_entries,
        pairwise_even_triples,
        triples_per_star: per_star.into_values().collect(),
        evens,
    }
}
