use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use vtham::exec::Exec;
use vtham::explicit::catalog;
use vtham::gf2k::{eq2_table, quad_irreducible_m, Field};
use vtham::hamilton::{find_hamilton_cycle, SolverConfig};

fn modes() -> [(&'static str, Exec); 2] {
    [("sequential", Exec::Sequential), ("available", Exec::available())]
}

fn field_counts(c: &mut Criterion) {
    let f = Field::new(8).unwrap();
    let m = quad_irreducible_m(&f).unwrap();
    let mut group = c.benchmark_group("eq2_table_q256");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| eq2_table(black_box(&f), m, exec)));
    }
    group.finish();
}

fn hamilton(c: &mut Criterion) {
    let mut group = c.benchmark_group("hamilton_cycle");
    group.sample_size(10);
    for graph in ["truncated_petersen", "coxeter"] {
        let g = catalog(graph).unwrap().graph;
        for (name, exec) in modes() {
            let cfg = SolverConfig { exec, ..Default::default() };
            group.bench_with_input(BenchmarkId::new(graph, name), &g, |b, g| b.iter(|| find_hamilton_cycle(g, &cfg)));
        }
    }
    group.finish();
}

criterion_group!(benches, field_counts, hamilton);
criterion_main!(benches);
