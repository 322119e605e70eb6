use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use octad_core::assets::Assets;
use octad_core::charspace::Char;
use octad_core::exactalg::{Modulus, PrimeFieldMatrix, PointSampler, DEFAULT_PRIME};
use octad_core::runge::{n3_prime_generators, theta_eval, MatrixGroup, SiegelPoint};
use octad_core::specht::koike_ideal;

fn modulus() -> Modulus {
    Modulus::new(DEFAULT_PRIME).expect("prime")
}

fn rank(c: &mut Criterion) {
    let m = modulus();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in [100usize, 300] {
        let rows: Vec<Vec<u64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..m.p())).collect()).collect();
        let a = PrimeFieldMatrix::from_rows(rows, m);
        c.bench_function(&format!("rank {n}x{n}"), |b| b.iter(|| black_box(&a).rank()));
    }
}

fn pit_eval(c: &mut Criterion) {
    let m = modulus();
    let ideal = koike_ideal(&Assets::embedded()).expect("asset");
    let mut sampler = PointSampler::new(2, m);
    let point = sampler.point(ideal[0].nvars());
    c.bench_function("quadratic relations at one point", |b| {
        b.iter(|| ideal.iter().map(|f| f.eval_mod(black_box(&point), &m)).fold(0, |acc, v| m.add(acc, v)))
    });
}

fn theta(c: &mut Criterion) {
    let z = SiegelPoint::random(&mut ChaCha8Rng::seed_from_u64(3));
    let ch = Char::from_digit(0).expect("digit");
    for radius in [6i64, 12] {
        c.bench_function(&format!("theta constant radius {radius}"), |b| {
            b.iter(|| theta_eval(ch, black_box(&z), radius).expect("theta"))
        });
    }
}

fn closure(c: &mut Criterion) {
    let gens = n3_prime_generators().expect("generators");
    c.bench_function("group closure", |b| b.iter(|| MatrixGroup::closure(black_box(&gens), 1024).expect("closure").order()));
}

criterion_group! {
    name = kernels;
    config = Criterion::default().sample_size(20);
    targets = rank, pit_eval, theta, closure
}
criterion_main!(kernels);
