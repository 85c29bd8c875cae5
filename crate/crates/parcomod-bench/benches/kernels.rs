use std::hint::black_box;
use std::path::{Path, PathBuf};

use criterion::{criterion_group, criterion_main, Criterion};
use parcomod::corpus::{self, BaseChoice, Workspace};
use parcomod::exactlin::{pushout, Field};
use parcomod::hopfgalois::canonical_map;
use parcomod::monoidal::{geometric_reflection, tensor_pcd};
use parcomod::pcd::{check_gencoass, classify};
use parcomod::samples::{random_invertible, random_surjection};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn load(name: &str) -> Workspace {
    let dir: PathBuf = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    corpus::load(&dir.join(name)).expect("bundled corpus loads")
}

fn linear_algebra(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let f5 = Field::fp(5).unwrap();
    let maps: Vec<_> =
        (0..16).map(|_| (random_surjection(f5, 6, 4, &mut rng), random_surjection(f5, 6, 3, &mut rng))).collect();
    c.bench_function("pushout_gf5_dim6", |b| {
        b.iter(|| {
            for (f, g) in &maps {
                black_box(pushout(f, g).unwrap());
            }
        })
    });
    let m = random_invertible(Field::Q, 12, &mut rng);
    c.bench_function("rank_q_dim12", |b| b.iter(|| black_box(m.rank())));
}

fn pcd_kernels(c: &mut Criterion) {
    let q = load("q.json");
    let d2 = &q.pcds["affine_d2"];
    c.bench_function("classify_affine_d2", |b| b.iter(|| black_box(classify(d2))));
    c.bench_function("gencoass_affine_d2", |b| b.iter(|| black_box(check_gencoass(d2).unwrap())));
    let d3 = &q.pcds["affine_d3"];
    c.bench_function("classify_affine_d3", |b| b.iter(|| black_box(classify(d3))));
}

fn monoidal_kernels(c: &mut Criterion) {
    let ws = load("gf2.json");
    let (l, r) = (&ws.pcds["tensor_witness_left"], &ws.pcds["tensor_witness_right"]);
    let h = &ws.bialgebras[l.coalgebra_name()];
    c.bench_function("tensor_gf2_witness", |b| b.iter(|| black_box(tensor_pcd(l, r, h).unwrap())));
    let t = &ws.pcds["tensor_witness"];
    c.bench_function("reflection_gf2_witness", |b| b.iter(|| black_box(geometric_reflection(t, 3).unwrap())));
}

fn galois_kernels(c: &mut Criterion) {
    let ws = load("gf3.json");
    let pca = &ws.comodule_algebras["b_prime"];
    let base = BaseChoice::K.subspace(pca);
    c.bench_function("canonical_map_b_prime", |b| b.iter(|| black_box(canonical_map(pca, &base).unwrap())));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = linear_algebra, pcd_kernels, monoidal_kernels, galois_kernels
}
criterion_main!(benches);
