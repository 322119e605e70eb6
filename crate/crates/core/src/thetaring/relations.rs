use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use serde::Serialize;

use super::forms::ThetaForms;
use super::weight2::theta_scheme;
use crate::assets::{Assets, CUBIC_RELATION};
use crate::charspace::{nonzero_evens, perm_to_orthogonal, singular_subspaces, Char, Perm, Subspace};
use crate::error::{Error, Result};
use crate::exactalg::poly::monomials_of_degree;
use crate::exactalg::texpoly::parse_poly;
use crate::exactalg::{pit_is_zero, IntPoly, Modulus, PitVerdict, PrimeFieldMatrix};
use crate::thomae::{d_of_char, SignedMonomial};

pub fn printed_cubic(assets: &Assets) -> Result<IntPoly> {
    let text = assets.text(CUBIC_RELATION)?;
    let body = text.trim().trim_matches('$');
    let p = parse_poly(body, &theta_scheme())?;
    if p.total_degree() != Some(3) || !p.is_homogeneous() {
        return Err(Error::Asset { name: CUBIC_RELATION.into(), reason: "not a homogeneous cubic".into() });
    }
    Ok(p)
}

/// PIT of `f(D(Theta_1), .., D(Theta_15))` for a form of degree `deg` in the Theta.
pub fn theta_poly_pit(forms: &ThetaForms, f: &IntPoly, deg: u64, trials: usize, seed: u64, modulus: Modulus) -> Result<PitVerdict> {
    pit_is_zero(8, 12 * deg, trials, seed, modulus, |x| Ok(f.eval_mod(&forms.values_mod(x, &modulus), &modulus)))
}

/// How a permutation moves the fifteen subspaces: `Some(pi)` with
/// `M_sigma A_i = A_pi(i)`, or `None` if some image leaves the list.
pub fn induced_permutation(forms: &ThetaForms, sigma: &Perm) -> Option<Vec<usize>> {
    let mat = perm_to_orthogonal(sigma);
    (0..15)
        .map(|i| {
            let img: Vec<Char> = forms.sets()[i].iter().map(|&m| mat.apply(m)).collect();
            forms.index_of(&Subspace::span(&img))
        })
        .collect()
}

/// Generators of the even permutations of `{1..8}`.
pub fn alternating_generators() -> [Perm; 2] {
    [Perm::cycle(&[1, 2, 3]), Perm::cycle(&[2, 3, 4, 5, 6, 7, 8])]
}

fn relabel(f: &IntPoly, pi: &[usize]) -> IntPoly {
    f.permute_vars(pi)
}

/// Rank of a list of homogeneous polynomials of one degree over GF(p).
fn span_rank(polys: &[IntPoly], nvars: usize, degree: usize, modulus: Modulus) -> usize {
    let monos = monomials_of_degree(nvars, degree);
    let index: BTreeMap<&Vec<u8>, usize> = monos.iter().enumerate().map(|(k, e)| (e, k)).collect();
    let rows: Vec<Vec<u64>> = polys
        .iter()
        .map(|p| {
            let mut row = vec![0u64; monos.len()];
            for (e, c) in p.terms() {
                row[index[e]] = modulus.from_bigint(c);
            }
            row
        })
        .collect();
    PrimeFieldMatrix::from_rows(rows, modulus).rank()
}

/// Eliminates `T_15 = -(T_1 + .. + T_14)`.
fn modulo_linear_relation(f: &IntPoly) -> IntPoly {
    let mut images: Vec<IntPoly> = (0..15).map(|i| IntPoly::var(15, i)).collect();
    images[14] = (0..14).fold(IntPoly::zero(15), |acc, i| &acc - &IntPoly::var(15, i));
    f.substitute(&images).expect("15 images")
}

#[derive(Clone, Debug, Serialize)]
pub struct CubicRelationReport {
    pub terms: usize,
    pub pit: PitVerdict,
    pub mutated_witness_found: bool,
    pub even_perms_preserve_list: bool,
    pub odd_generator_preserves_list: bool,
    pub induced_group_order: usize,
    pub orbit_size: usize,
    pub orbit_span_dim: usize,
    pub orbit_span_dim_mod_linear: usize,
}

impl CubicRelationReport {
    pub fn pit_pass(&self) -> bool {
        self.pit.zero && self.mutated_witness_found
    }
}

fn closure_size(gens: &[Vec<usize>]) -> usize {
    let id: Vec<usize> = (0..15).collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for h in gens {
            let gh: Vec<usize> = (0..15).map(|i| h[g[i]]).collect();
            if seen.insert(gh.clone()) {
                queue.push_back(gh);
            }
        }
    }
    seen.len()
}

pub fn cubic_relation_suite(forms: &ThetaForms, assets: &Assets, trials: usize, seed: u64, modulus: Modulus) -> Result<CubicRelationReport> {
    let cubic = printed_cubic(assets)?;
    let pit = theta_poly_pit(forms, &cubic, 3, trials, seed, modulus)?;
    let (e, c) = cubic.leading().expect("nonzero");
    let mut mutated = cubic.clone();
    mutated.add_term(e.clone(), if c > &BigInt::from(0) { BigInt::from(1) } else { BigInt::from(-1) });
    let mutated_witness_found = !theta_poly_pit(forms, &mutated, 3, 4, seed ^ 1, modulus)?.zero;

    let gens: Vec<Vec<usize>> = alternating_generators()
        .iter()
        .map(|g| induced_permutation(forms, g))
        .collect::<Option<_>>()
        .ok_or(Error::Invalid("an even permutation leaves the list of fifteen".into()))?;
    let odd_generator_preserves_list = induced_permutation(forms, &Perm::transposition(1, 2)).is_some();

    let mut orbit: BTreeSet<Vec<(Vec<u8>, BigInt)>> = BTreeSet::new();
    let mut polys = Vec::new();
    let key = |p: &IntPoly| p.terms().map(|(e, c)| (e.clone(), c.clone())).collect::<Vec<_>>();
    orbit.insert(key(&cubic));
    polys.push(cubic.clone());
    let mut queue = VecDeque::from([cubic.clone()]);
    while let Some(f) = queue.pop_front() {
        for g in &gens {
            let h = relabel(&f, g);
            if orbit.insert(key(&h)) {
                polys.push(h.clone());
                queue.push_back(h);
            }
            if polys.len() > 40_000 {
                return Err(Error::ClosureCap(40_000));
            }
        }
    }
    let reduced: Vec<IntPoly> = polys.iter().map(modulo_linear_relation).collect();
    Ok(CubicRelationReport {
        terms: cubic.len(),
        pit,
        mutated_witness_found,
        even_perms_preserve_list: true,
        odd_generator_preserves_list,
        induced_group_order: closure_size(&gens),
        orbit_size: polys.len(),
        orbit_span_dim: span_rank(&polys, 15, 3, modulus),
        orbit_span_dim_mod_linear: span_rank(&reduced, 15, 3, modulus),
    })
}

/// Product of the images over a set of characteristics.
fn product(chars: &[Char]) -> SignedMonomial {
    chars.iter().fold(SignedMonomial::one(), |acc, &m| acc.mul(&d_of_char(m).expect("even")))
}

#[derive(Clone, Debug, Serialize)]
pub struct CosetQuartic {
    pub subspace: Vec<u8>,
    pub first: Vec<u8>,
    pub second: Vec<u8>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CosetQuarticReport {
    pub subspaces: usize,
    /// Subspaces whose count of all-even cosets (including the subspace
    /// itself) is not three.
    pub wrong_coset_count: usize,
    pub identities: usize,
    pub exact: usize,
    pub sign_only: usize,
    pub failures: usize,
    /// Among all 2-dimensional subspaces, how many have each number of
    /// all-even cosets.
    pub census: BTreeMap<usize, usize>,
    pub printed_count: usize,
}

impl CosetQuarticReport {
    pub fn all_pass(&self) -> bool {
        self.wrong_coset_count == 0 && self.failures == 0 && self.sign_only == 0 && self.exact == self.identities
    }
}

fn all_two_dim_subspaces() -> Vec<Subspace> {
    let mut out = BTreeSet::new();
    for a in Char::all().skip(1) {
        for b in Char::all().skip(a.digit() as usize + 1) {
            out.insert(Subspace::span(&[a, b]));
        }
    }
    out.into_iter().collect()
}

fn even_cosets(m: &Subspace) -> Vec<Vec<Char>> {
    m.coset_representatives()
        .into_iter()
        .map(|a| m.coset(a))
        .filter(|c| c.iter().all(|x| x.is_even()))
        .collect()
}

pub fn coset_quartic_relations() -> (Vec<CosetQuartic>, CosetQuarticReport) {
    let mut census = BTreeMap::new();
    for m in all_two_dim_subspaces() {
        *census.entry(even_cosets(&m).len()).or_insert(0) += 1;
    }
    let spaces = singular_subspaces(2);
    let mut list = Vec::new();
    let (mut wrong, mut exact, mut sign_only, mut failures) = (0, 0, 0, 0);
    for m in &spaces {
        let cosets: Vec<Vec<Char>> = even_cosets(m).into_iter().filter(|c| !c.contains(&Char::ZERO)).collect();
        if cosets.len() != 2 {
            wrong += 1;
            continue;
        }
        let (a, b) = (product(&cosets[0]), product(&cosets[1]));
        if a == b {
            exact += 1;
        } else if a == b.neg() {
            sign_only += 1;
        } else {
            failures += 1;
        }
        let digits = |v: &[Char]| v.iter().map(|c| c.digit()).collect::<Vec<u8>>();
        list.push(CosetQuartic {
            subspace: digits(&m.elements()),
            first: digits(&cosets[0]),
            second: digits(&cosets[1]),
        });
    }
    let report = CosetQuarticReport {
        subspaces: spaces.len(),
        wrong_coset_count: wrong,
        identities: list.len(),
        exact,
        sign_only,
        failures,
        census,
        printed_count: 210,
    };
    (list, report)
}

#[derive(Clone, Debug, Serialize)]
pub struct SquaredQuarticReport {
    pub candidates: usize,
    pub passing: usize,
    /// Passing configurations grouped by the parity of the common sum.
    pub passing_even_sum: usize,
    pub passing_odd_sum: usize,
    pub trials: usize,
    pub negative_control_witness: bool,
}

impl SquaredQuarticReport {
    pub fn all_pass(&self) -> bool {
        self.passing == 105 && self.negative_control_witness
    }
}

/// `A^2 + B^2 + C^2 - 2AB - 2AC - 2BC` with `A = D_a D_a'` and so on.
fn squared_quartic_value(pairs: &[(Char, Char); 3], x: &[u64], m: &Modulus) -> u64 {
    let v: Vec<u64> = pairs
        .iter()
        .map(|&(a, b)| m.mul(d_of_char(a).expect("even").eval_mod(x, m), d_of_char(b).expect("even").eval_mod(x, m)))
        .collect();
    let (a, b, c) = (v[0], v[1], v[2]);
    let sq = m.add(m.add(m.mul(a, a), m.mul(b, b)), m.mul(c, c));
    let cross = m.add(m.add(m.mul(a, b), m.mul(a, c)), m.mul(b, c));
    m.sub(sq, m.add(cross, cross))
}

/// All triples of disjoint pairs of distinct nonzero even characteristics
/// with a common sum.
pub fn squared_quartic_candidates() -> Vec<(Char, [(Char, Char); 3])> {
    let evens = nonzero_evens();
    let mut out = Vec::new();
    for s in Char::all().skip(1) {
        let pairs: Vec<(Char, Char)> = evens
            .iter()
            .filter(|&&a| (a + s).is_even() && !(a + s).is_zero() && a < a + s)
            .map(|&a| (a, a + s))
            .collect();
        for i in 0..pairs.len() {
            for j in i + 1..pairs.len() {
                for k in j + 1..pairs.len() {
                    out.push((s, [pairs[i], pairs[j], pairs[k]]));
                }
            }
        }
    }
    out
}

pub fn squared_quartic_relations(trials: usize, seed: u64, modulus: Modulus) -> Result<(Vec<(Char, [(Char, Char); 3])>, SquaredQuarticReport)> {
    let candidates = squared_quartic_candidates();
    let mut passing = Vec::new();
    let mut rejected = None;
    for (k, cand) in candidates.iter().enumerate() {
        let pairs = cand.1;
        // cheap screen at two points before the full test
        let screen = pit_is_zero(8, 48, 2, seed.wrapping_add(k as u64), modulus, |x| Ok(squared_quartic_value(&pairs, x, &modulus)))?;
        if !screen.zero {
            rejected.get_or_insert(pairs);
            continue;
        }
        let full = pit_is_zero(8, 48, trials, seed ^ (k as u64) << 20, modulus, |x| Ok(squared_quartic_value(&pairs, x, &modulus)))?;
        if full.zero {
            passing.push(*cand);
        }
    }
    let negative_control_witness = match rejected {
        Some(p) => !pit_is_zero(8, 48, 3, seed ^ 0xabc, modulus, |x| Ok(squared_quartic_value(&p, x, &modulus)))?.zero,
        None => false,
    };
    let report = SquaredQuarticReport {
        candidates: candidates.len(),
        passing: passing.len(),
        passing_even_sum: passing.iter().filter(|(s, _)| s.is_even()).count(),
        passing_odd_sum: passing.iter().filter(|(s, _)| s.is_odd()).count(),
        trials,
        negative_control_witness,
    };
    Ok((passing, report))
}

#[derive(Clone, Debug, Serialize)]
pub struct SchottkyReport {
    pub verdict: PitVerdict,
    pub without_constant_witness: bool,
    pub single_subspace_witness: bool,
}

impl SchottkyReport {
    pub fn all_pass(&self) -> bool {
        self.verdict.zero && self.without_constant_witness && self.single_subspace_witness
    }
}

/// `(sum D_m^2)^2 - c sum D_m^4` at `x`, summing over `chars`.
pub fn schottky_value(chars: &[Char], constant: u64, x: &[u64], m: &Modulus) -> u64 {
    let (mut s2, mut s4) = (0, 0);
    for &c in chars {
        let d = d_of_char(c).expect("even").eval_mod(x, m);
        let d2 = m.mul(d, d);
        s2 = m.add(s2, d2);
        s4 = m.add(s4, m.mul(d2, d2));
    }
    m.sub(m.mul(s2, s2), m.mul(constant, s4))
}

pub fn schottky_image(forms: &ThetaForms, trials: usize, seed: u64, modulus: Modulus) -> Result<SchottkyReport> {
    let evens: Vec<Char> = Char::all().filter(|c| c.is_even()).collect();
    let verdict = pit_is_zero(8, 48, trials, seed, modulus, |x| Ok(schottky_value(&evens, 8, x, &modulus)))?;
    let without = pit_is_zero(8, 48, 3, seed ^ 1, modulus, |x| Ok(schottky_value(&evens, 1, x, &modulus)))?;
    let one = forms.sets()[0].to_vec();
    let single = pit_is_zero(8, 48, 3, seed ^ 2, modulus, |x| Ok(schottky_value(&one, 8, x, &modulus)))?;
    Ok(SchottkyReport { verdict, without_constant_witness: !without.zero, single_subspace_witness: !single.zero })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn forms() -> ThetaForms {
        ThetaForms::load(&Assets::embedded()).unwrap()
    }

    #[test]
    fn printed_cubic_vanishes() {
        let r = cubic_relation_suite(&forms(), &Assets::embedded(), 20, 3, Modulus::default()).unwrap();
        assert!(r.pit_pass(), "{r:?}");
    }

    #[test]
    fn coset_identities_hold_exactly() {
        let (_, r) = coset_quartic_relations();
        assert!(r.all_pass(), "{r:?}");
    }

    #[test]
    fn schottky_constant() {
        let r = schottky_image(&forms(), 10, 9, Modulus::default()).unwrap();
        assert!(r.all_pass(), "{r:?}");
    }
}
