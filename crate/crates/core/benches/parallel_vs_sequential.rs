use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use qgw_core::exterior::{omega_build, ExteriorAlgebra};
use qgw_core::ncalg::Element;
use qgw_core::par::{par_map, seq_map};
use qgw_core::reps::{quasitriangularity_identities, RKind, RepLabel};
use qgw_core::rmatlab::catalog::gl_standard;
use qgw_core::scalars::Scalar;

fn words(letters: u8, len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.iter().flat_map(|w: &Vec<u8>| (0..letters).map(move |g| [w.as_slice(), &[g]].concat())).collect();
    }
    out
}

fn d_squared(o: &ExteriorAlgebra, w: &[u8]) -> bool {
    let e = Element::word(w.to_vec(), Scalar::one());
    o.differential(&o.differential(&e).unwrap()).unwrap().is_zero()
}

fn bench_exterior(c: &mut Criterion) {
    let o = omega_build(&gl_standard(3).unwrap()).unwrap();
    let ws = words(6, 3);
    let mut g = c.benchmark_group("d_squared_gl3_len3");
    g.sample_size(10);
    g.bench_function(BenchmarkId::new("sequential", ws.len()), |b| b.iter(|| seq_map(&ws, |w| d_squared(&o, w))));
    g.bench_function(BenchmarkId::new("parallel", ws.len()), |b| b.iter(|| par_map(&ws, |w| d_squared(&o, w))));
    g.finish();
}

fn bench_triples(c: &mut Criterion) {
    let labels: Vec<RepLabel> = [(1, 0), (2, 1), (0, 1), (1, 2)].iter().map(|&(a, b)| RepLabel::Int(a, b)).collect();
    let mut triples: Vec<[RepLabel; 3]> = Vec::new();
    for a in &labels {
        for b in &labels {
            triples.push([a.clone(), b.clone(), labels[0].clone()]);
        }
    }
    let run = |t: &[RepLabel; 3]| quasitriangularity_identities([&t[0], &t[1], &t[2]], RKind::Standard).unwrap().len();
    let mut g = c.benchmark_group("quasitriangular_triples");
    g.sample_size(10);
    g.bench_function(BenchmarkId::new("sequential", triples.len()), |b| b.iter(|| seq_map(&triples, run)));
    g.bench_function(BenchmarkId::new("parallel", triples.len()), |b| b.iter(|| par_map(&triples, run)));
    g.finish();
}

criterion_group!(benches, bench_exterior, bench_triples);
criterion_main!(benches);
