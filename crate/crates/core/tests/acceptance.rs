//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Red criteria are printed, not hidden. The process exits 0 unless
//! `OCTAD_ACCEPTANCE_STRICT` is set, in which case any red criterion exits 1.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use octad_core::assets::Assets;
use octad_core::charspace::{self, Char};
use octad_core::exactalg::{Modulus, DEFAULT_PRIME};
use octad_core::report::{self, RunConfig, Status, Target};
use octad_core::runge::numeric::{duplication_check, random_samples, schottky_numeric_fit};
use octad_core::thetaring::series::{EVEN_PART_PRINTED, FULL_RING_PRINTED, HYPERELLIPTIC_PRINTED};
use octad_core::{baselocus, runge, specht, thetaring, thomae};

const SEEDS: [u64; 3] = [11, 12, 13];
const ODD_THETA_TOLERANCE: f64 = 1e-10;
const DUPLICATION_TOLERANCE: f64 = 1e-8;
const SCHOTTKY_SPREAD_TOLERANCE: f64 = 1e-6;
const NUMERIC_POINTS: usize = 5;
const THETA_RADIUS: i64 = 12;
const CUBIC_TRIALS: usize = 100;
const CUBIC_DEGREE: u64 = 36;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn run(number: usize, title: &str, budget: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let o = f();
    let elapsed = start.elapsed();
    let in_time = elapsed <= budget;
    let pass = o.pass && in_time;
    println!(
        "criterion {number:>2} {}  {title}: {} ({:.2} s of {} s){}",
        if pass { "PASS" } else { "FAIL" },
        o.detail,
        elapsed.as_secs_f64(),
        budget.as_secs(),
        if in_time { "" } else { " over budget" }
    );
    pass
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

// Independent oracles on characteristics, working on raw digits.

fn bits(d: u8) -> ([u8; 3], [u8; 3]) {
    let b = |k: u8| (d >> (5 - k)) & 1;
    ([b(0), b(1), b(2)], [b(3), b(4), b(5)])
}

fn q(d: u8) -> u8 {
    let (p, s) = bits(d);
    (p[0] * s[0] + p[1] * s[1] + p[2] * s[2]) % 2
}

fn pairing(a: u8, b: u8) -> u8 {
    let (ap, as_) = bits(a);
    let (bp, bs) = bits(b);
    (0..3).map(|i| ap[i] * bs[i] + as_[i] * bp[i]).sum::<u8>() % 2
}

fn evens() -> Vec<u8> {
    (1..64).filter(|&d| q(d) == 0).collect()
}

fn odds() -> Vec<u8> {
    (0..64).filter(|&d| q(d) == 1).collect()
}

/// Sets of four odds of the form `a + M` with `M` a totally singular plane.
fn oracle_stars() -> Vec<[u8; 4]> {
    let o = odds();
    let mut out = Vec::new();
    for i in 0..o.len() {
        for j in i + 1..o.len() {
            for k in j + 1..o.len() {
                let l = o[i] ^ o[j] ^ o[k];
                if l > o[k] && q(l) == 1 {
                    let diffs = [o[i] ^ o[j], o[i] ^ o[k], o[i] ^ l];
                    if diffs.iter().all(|&x| q(x) == 0) {
                        out.push([o[i], o[j], o[k], l]);
                    }
                }
            }
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let r = specht::verify_koike(&Assets::embedded()).expect("asset");
    outcome(r.all_pass(), format!("{}/{} quadratic relations vanish exactly", r.generators - r.failures.len(), r.generators))
}

/// Coefficient of `t^n` in `(1 + 8t + 22t^2 + 8t^3 + t^4) / (1 - t)^6`.
fn oracle_config_dim(n: u64) -> u128 {
    let num = [1u128, 8, 22, 8, 1];
    let binom = |a: u64, b: u64| -> u128 { (0..b).fold(1u128, |acc, i| acc * (a - i) as u128 / (i + 1) as u128) };
    (0..=4u64).filter(|&k| k <= n).map(|k| num[k as usize] * binom(n - k + 5, 5)).sum()
}

fn criterion_2() -> Outcome {
    let printed = [14u128, 91, 364, 1085];
    let m = Modulus::new(DEFAULT_PRIME).unwrap();
    let mut ok = true;
    let mut notes = Vec::new();
    for (k, &p) in printed.iter().enumerate() {
        let n = k + 1;
        let formulas = [oracle_config_dim(n as u64), specht::howe_dim(n as u64), specht::deconcini_dim(n as u64)];
        let ranks: Vec<usize> = SEEDS.iter().map(|&s| specht::graded_dim_config(n, p as usize + 30, s, m).rank).collect();
        ok &= formulas.iter().all(|&f| f == p) && ranks.iter().all(|&r| r as u128 == p);
        notes.push(format!("n={n}: {p}"));
    }
    let five = oracle_config_dim(5);
    ok &= five == 2666 && specht::howe_dim(5) == five && specht::deconcini_dim(5) == five;
    ok &= specht::howe_dim(6) == 5719 && specht::deconcini_dim(6) == 5719;
    notes.push(format!("n=5: {five}, n=6: {}", specht::howe_dim(6)));
    outcome(ok, format!("{} agree three ways under 3 seeds", notes.join(", ")))
}

fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    let mut check = |what: &str, expected: String, actual: String| {
        if expected != actual {
            failures.push(format!("{what} {actual} (expected {expected})"));
        }
    };
    let (ev, od) = charspace::enumerate_chars();
    check("parity", format!("{}/{}", evens().len() + 1, odds().len()), format!("{}/{}", ev.len(), od.len()));
    check("parity printed", "36/28".into(), format!("{}/{}", ev.len(), od.len()));

    let maximals = charspace::singular_subspaces(3);
    let mut oracle_max = BTreeSet::new();
    let e = evens();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            for k in j + 1..e.len() {
                let (a, b, c) = (e[i], e[j], e[k]);
                let set: BTreeSet<u8> = [a, b, c, a ^ b, a ^ c, b ^ c, a ^ b ^ c].into_iter().collect();
                if set.len() == 7 && !set.contains(&0) && set.iter().all(|&x| q(x) == 0) {
                    oracle_max.insert(set);
                }
            }
        }
    }
    check("maximal subspaces", oracle_max.len().to_string(), maximals.len().to_string());
    check("maximal subspaces printed", "30".into(), maximals.len().to_string());
    let split = charspace::so_orbit_split(&maximals).map(|(a, b)| format!("{}+{}", a.len(), b.len()));
    check("family split", "15+15".into(), split.unwrap_or_else(|e| e.to_string()));

    let stars = oracle_stars();
    check("stars", "105".into(), charspace::enumerate_stars().len().to_string());
    check("stars oracle", stars.len().to_string(), charspace::enumerate_stars().len().to_string());

    let o = odds();
    let mut zero_sum = 0;
    let mut pairwise_even = 0;
    let mut per_star = std::collections::BTreeMap::<u8, usize>::new();
    for i in 0..o.len() {
        for j in i + 1..o.len() {
            for k in j + 1..o.len() {
                if o[i] ^ o[j] ^ o[k] == 0 {
                    zero_sum += 1;
                }
                let sums = [o[i] ^ o[j], o[i] ^ o[k], o[j] ^ o[k]];
                if sums.iter().all(|&s| q(s) == 0) {
                    pairwise_even += 1;
                    *per_star.entry(o[i] ^ o[j] ^ o[k]).or_default() += 0;
                }
            }
        }
    }
    let mut triples_per_star = vec![0usize; stars.len()];
    for i in 0..o.len() {
        for j in i + 1..o.len() {
            for k in j + 1..o.len() {
                if [o[i] ^ o[j], o[i] ^ o[k], o[j] ^ o[k]].iter().all(|&s| q(s) == 0) {
                    if let Some(s) = stars.iter().position(|s| [o[i], o[j], o[k]].iter().all(|x| s.contains(x))) {
                        triples_per_star[s] += 1;
                    }
                }
            }
        }
    }
    check("zero-sum odd triplets", "56".into(), charspace::enumerate_odd_triplets().len().to_string());
    check("zero-sum odd triplets oracle", zero_sum.to_string(), charspace::enumerate_odd_triplets().len().to_string());

    let mut sextuplets = 0;
    let n = e.len();
    let mut idx = [0usize; 5];
    fn rec(e: &[u8], start: usize, depth: usize, idx: &mut [usize; 5], count: &mut usize) {
        if depth == 5 {
            let mut s: Vec<u8> = idx.iter().map(|&i| e[i]).collect();
            s.push(0);
            for a in 0..6 {
                for b in a + 1..6 {
                    for c in b + 1..6 {
                        if q(s[a] ^ s[b] ^ s[c]) == 0 {
                            return;
                        }
                    }
                }
            }
            *count += 1;
            return;
        }
        for i in start..e.len() {
            idx[depth] = i;
            rec(e, i + 1, depth + 1, idx, count);
        }
    }
    rec(&e, 0, 0, &mut idx, &mut sextuplets);
    let _ = n;
    let d = charspace::boundary_dictionaries();
    check("sextuplets", "56".into(), d.sextuplets.len().to_string());
    check("sextuplets oracle", sextuplets.to_string(), d.sextuplets.len().to_string());
    check("worked sextuplet present", "true".into(), d.example_sextuplet_found.to_string());

    let even_sum_pairs = (0..o.len()).flat_map(|i| (i + 1..o.len()).map(move |j| (i, j))).filter(|&(i, j)| q(o[i] ^ o[j]) == 0).count();
    check("even-sum odd pairs", "210".into(), d.even_sum_pairs.len().to_string());
    check("even-sum odd pairs oracle", even_sum_pairs.to_string(), d.even_sum_pairs.len().to_string());
    check("pairwise-even triples", "420".into(), d.pairwise_even_triples.to_string());
    check("pairwise-even triples oracle", pairwise_even.to_string(), d.pairwise_even_triples.to_string());
    let groups: BTreeSet<usize> = triples_per_star.iter().copied().collect();
    check("triples per star", "{4}".into(), format!("{groups:?}"));

    let mut partitions = BTreeSet::new();
    let mut orthogonal = BTreeSet::new();
    let mut complements = BTreeSet::new();
    for &m in &e {
        let perp: Vec<u8> = o.iter().copied().filter(|&a| pairing(a, m) == 0).collect();
        orthogonal.insert(perp.len());
        let inside: Vec<&[u8; 4]> = stars.iter().filter(|s| s.iter().all(|x| perp.contains(x))).collect();
        let mut count = 0;
        for i in 0..inside.len() {
            for j in i + 1..inside.len() {
                for k in j + 1..inside.len() {
                    let all: BTreeSet<u8> = inside[i].iter().chain(inside[j]).chain(inside[k]).copied().collect();
                    if all.len() == 12 {
                        count += 1;
                    }
                }
            }
        }
        partitions.insert(count);
        complements.insert(e.iter().filter(|&&x| q(x ^ m) == 1).count() + usize::from(q(m) == 1));
    }
    check("odds orthogonal to each even", "{12}".into(), format!("{orthogonal:?}"));
    check("three-star partitions per even", "{5}".into(), format!("{partitions:?}"));
    check("odd-sum complements", "{16}".into(), format!("{complements:?}"));
    let lib_partitions: BTreeSet<usize> = d.evens.iter().map(|x| x.star_partitions).collect();
    check("partitions oracle", format!("{partitions:?}"), format!("{lib_partitions:?}"));
    let lib_complements: BTreeSet<usize> = d.evens.iter().map(|x| x.odd_sum_partners.len()).collect();
    check("complements oracle", format!("{complements:?}"), format!("{lib_complements:?}"));

    if failures.is_empty() {
        outcome(true, "36/28, 30 = 15+15, 105 stars, 56 triplets, 56 sextuplets, 210 pairs, 420 = 105x4, 12 odds, 5 partitions, 16")
    } else {
        outcome(false, failures.join("; "))
    }
}

fn criterion_4() -> Outcome {
    let m = charspace::verify_mumford_properties();
    let mut rng = ChaCha8Rng::seed_from_u64(SEEDS[0]);
    let o = charspace::perm::verify_orthogonal_isomorphism(&mut rng, 500);
    outcome(
        m.all_pass() && m.pairs_checked == 1 << 14 && o.all_pass(),
        format!(
            "properties hold on {} pairs; {} permutations give {} distinct q-preserving images, {} products checked",
            m.pairs_checked, o.perms_checked, o.distinct_images, o.homomorphism_pairs_checked
        ),
    )
}

fn criterion_5() -> Outcome {
    let a = Assets::embedded();
    let t = thomae::verify_table(&a).expect("asset");
    let s = thomae::support_law();
    let z = thomae::sum_vanishing();
    outcome(
        t.all_pass() && s.all_pass() && z.all_pass(),
        format!(
            "{}/35 nonzero rows match with signs, support law {} cases {} violations, sum leaves {} terms",
            t.matched.min(t.nonzero_rows),
            s.checks,
            s.violations.len(),
            z.residual_terms
        ),
    )
}

fn criterion_6() -> Outcome {
    let r = thomae::verify_cubics(&Assets::embedded()).expect("asset");
    let ratio = r.printed_ratio.map_or("none".into(), |x| x.to_string());
    outcome(
        r.printed_exact() && r.representatives_pass(),
        format!(
            "printed factorization re-expands to {} times the image; representatives {}/35",
            ratio,
            r.representatives_checked - r.failures.len()
        ),
    )
}

fn criterion_7() -> Outcome {
    let a = Assets::embedded();
    let m = Modulus::new(DEFAULT_PRIME).unwrap();
    let forms = thetaring::ThetaForms::load(&a).expect("asset");
    let w2 = thetaring::weight2_structure(&forms, 40, SEEDS[0], m);
    let mut ok = w2.all_pass();
    let mut notes = vec![format!("rank {} kernel all-ones {}", w2.rank, w2.kernel_is_all_ones)];
    for (w, expected) in [(4usize, 105usize), (6, 546), (8, 2057)] {
        let ranks: Vec<usize> =
            SEEDS.iter().map(|&s| thetaring::graded_dim_b(&forms, w, expected + 30, s, m).rank).collect();
        ok &= ranks.iter().all(|&r| r == expected);
        notes.push(format!("w{w} {ranks:?}"));
    }
    outcome(ok, notes.join(", "))
}

fn criterion_8() -> Outcome {
    let a = Assets::embedded();
    let m = Modulus::new(DEFAULT_PRIME).unwrap();
    let forms = thetaring::ThetaForms::load(&a).expect("asset");
    let cubic = thetaring::cubic_relation_suite(&forms, &a, CUBIC_TRIALS, SEEDS[0], m).expect("asset");
    let bound = CUBIC_TRIALS as f64 * ((CUBIC_DEGREE as f64).log10() - (m.p() as f64).log10());
    let cubic_ok = cubic.pit.zero
        && cubic.pit.trials == CUBIC_TRIALS
        && cubic.pit.degree_bound == CUBIC_DEGREE
        && cubic.pit.log10_error_bound <= bound + 1e-9;
    let (_, coset) = thetaring::coset_quartic_relations();
    let (_, squared) = thetaring::squared_quartic_relations(8, SEEDS[0], m).expect("search");
    let schottky = thetaring::schottky_image(&forms, 8, SEEDS[0], m).expect("pit");
    let ok = cubic_ok
        && coset.all_pass()
        && squared.passing == 105
        && schottky.verdict.zero
        && schottky.without_constant_witness;
    outcome(
        ok,
        format!(
            "cubic zero at {} points (bound 10^{:.0}); {}/{} coset identities exact; squared search finds {} (105 expected); Schottky zero {} and without constant detected {}",
            cubic.pit.trials,
            cubic.pit.log10_error_bound,
            coset.exact,
            coset.identities,
            squared.passing,
            schottky.verdict.zero,
            schottky.without_constant_witness
        ),
    )
}

fn criterion_9() -> Outcome {
    let a = Assets::embedded();
    let mut rng = ChaCha8Rng::seed_from_u64(SEEDS[0]);
    let l = baselocus::locus_suite(&a, &mut rng, 20, SEEDS[0]).expect("locus");
    let c = baselocus::cusp_suite(&a, SEEDS[0]).expect("cusps");
    let ok = l.spaces == 56
        && l.printed_spaces_in_orbit == 8
        && c.printed_on_variety
        && c.printed_in_printed_spaces == 8
        && c.cusps == 35
        && c.spaces_per_cusp.keys().eq([8].iter())
        && c.cusps_per_space.keys().eq([5].iter())
        && l.vanishing_sizes.get(&6) == Some(&56)
        && l.vanishing_sizes.len() == 1
        && l.vanishing_sets_are_sextuplets
        && l.triplet_bijective;
    outcome(
        ok,
        format!(
            "orbit {} holding {}/8 printed; cusp on variety {} and on {}/8; {} cusps; spaces per cusp {:?}; cusps per space {:?}; vanishing sizes {:?}; triplets bijective {}",
            l.spaces,
            l.printed_spaces_in_orbit,
            c.printed_on_variety,
            c.printed_in_printed_spaces,
            c.cusps,
            c.spaces_per_cusp,
            c.cusps_per_space,
            l.vanishing_sizes,
            l.triplet_bijective
        ),
    )
}

fn criterion_10() -> Outcome {
    let g = runge::group_report().expect("closure");
    let inv = runge::invariance_pq(&Assets::embedded()).expect("asset");
    let ok = g.minus_e_in_n3_prime && !g.i_e_in_n3_prime && g.index == 2 && g.n3_prime_in_n3 && inv.all_pass();
    outcome(
        ok,
        format!(
            "orders {} in {}, index {}, -E in {}, iE in {}; P invariant {}/{}, Q invariant {}/{}",
            g.n3_prime_order,
            g.n3_order,
            g.index,
            g.minus_e_in_n3_prime,
            g.i_e_in_n3_prime,
            inv.p_invariant,
            inv.generators,
            inv.q_invariant,
            inv.generators
        ),
    )
}

fn criterion_11() -> Outcome {
    let samples = random_samples(NUMERIC_POINTS, THETA_RADIUS, SEEDS[0]).expect("theta");
    let d = duplication_check(&samples, THETA_RADIUS);
    let fit = schottky_numeric_fit(&samples);
    let printed_ok = d.printed_max_residual < DUPLICATION_TOLERANCE;
    let variant_ok = d.variant_max_residual < DUPLICATION_TOLERANCE;
    let ok = d.max_odd_theta < ODD_THETA_TOLERANCE && printed_ok != variant_ok && fit.relative_spread < SCHOTTKY_SPREAD_TOLERANCE;
    outcome(
        ok,
        format!(
            "odd thetas {:.1e}; printed sign residual {:.1e}, inner sign residual {:.1e}; Schottky ratio {:.12} spread {:.1e}, {} 8",
            d.max_odd_theta,
            d.printed_max_residual,
            d.variant_max_residual,
            fit.mean.0,
            fit.relative_spread,
            if fit.distance_to_eight < 8.0 * SCHOTTKY_SPREAD_TOLERANCE { "equal to" } else { "differs from" }
        ),
    )
}

fn criterion_12() -> Outcome {
    let s = thetaring::series_suite();
    let has = |v: &[i64], x: i64| v.contains(&x);
    let ok = s.all_pass()
        && FULL_RING_PRINTED.len() == 11
        && HYPERELLIPTIC_PRINTED.len() == 9
        && has(&EVEN_PART_PRINTED, 6062)
        && has(&EVEN_PART_PRINTED, 14945);
    outcome(
        ok,
        format!("{} printed coefficients, {} mismatches, even parts agree {}", s.coefficients_checked, s.mismatches.len(), s.even_part_agrees),
    )
}

fn criterion_13() -> Outcome {
    let report = report::verify(&Target::All, &RunConfig::default(), &Assets::embedded()).expect("verify");
    let forbidden = ["normal", "resolution", "analytic"];
    let claims: Vec<&str> = report
        .checks
        .iter()
        .filter(|c| forbidden.iter().any(|w| c.name.to_lowercase().contains(w)))
        .map(|c| c.name.as_str())
        .collect();
    let info = |name: &str| report.find(name).map(|c| (c.status, c.expected.clone(), c.actual.clone()));
    let coset = info("coset quartic identities against the printed count");
    let quartic = info("quartic relations beyond cubic multiples");
    let ok = claims.is_empty()
        && coset.as_ref().is_some_and(|c| c.0 == Status::Info && c.1 == "210")
        && quartic.as_ref().is_some_and(|c| c.0 == Status::Info && c.1 == "127");
    outcome(
        ok,
        format!(
            "{} checks, none on excluded topics; coset count {:?}; new quartics {:?}",
            report.checks.len(),
            coset.map(|c| format!("{:?} printed {} found {}", c.0, c.1, c.2)),
            quartic.map(|c| format!("{:?} printed {} found {}", c.0, c.1, c.2))
        ),
    )
}

fn main() {
    let _ = Char::from_digit(0);
    let results = [
        run(1, "quadratic relations among Specht polynomials", secs(5), criterion_1),
        run(2, "configuration ring Hilbert function", secs(60), criterion_2),
        run(3, "characteristic combinatorics", secs(5), criterion_3),
        run(4, "subset properties and the orthogonal isomorphism", secs(30), criterion_4),
        run(5, "Thomae table, support law and vanishing sum", secs(30), criterion_5),
        run(6, "cubic factorization and representatives", secs(60), criterion_6),
        run(7, "Theta-ring graded dimensions", secs(600), criterion_7),
        run(8, "relations among Theta-forms", secs(300), criterion_8),
        run(9, "base locus and cusps", secs(120), criterion_9),
        run(10, "corrected matrix group and invariants", secs(120), criterion_10),
        run(11, "numerical theta suite", secs(60), criterion_11),
        run(12, "series bookkeeping", secs(1), criterion_12),
        run(13, "scope and documented discrepancies", secs(300), criterion_13),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("{passed}/{} criteria pass", results.len());
    if passed < results.len() && std::env::var_os("OCTAD_ACCEPTANCE_STRICT").is_some() {
        std::process::exit(1);
    }
}
