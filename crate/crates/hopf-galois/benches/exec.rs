use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hopf_galois::builders::{circle_hopf, group_algebra, paper_example, reduced_can, GroupTable};
use hopf_galois::extensions::{can_full, coinvariants, ComoduleAlgebra};
use hopf_galois::hopf::{verify_structure, Structure};
use hopf_galois::par::{with_exec, Exec};
use hopf_galois::{Field, Subspace};

fn strategies(c: &mut Criterion) {
    let d8 = group_algebra(&GroupTable::d8(), Field::Q);
    let circle = ComoduleAlgebra::regular(&circle_hopf(Field::Qi).unwrap());
    let circle_b = coinvariants(&circle, None).unwrap();
    let example = paper_example().unwrap();

    let mut group = c.benchmark_group("exec");
    group.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        let name = format!("{exec:?}");
        group.bench_with_input(BenchmarkId::new("verify_d8", &name), &exec, |b, &e| {
            b.iter(|| with_exec(e, || verify_structure(Structure::Hopf(&d8)).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("can_circle", &name), &exec, |b, &e| {
            b.iter(|| with_exec(e, || can_full(&circle, &circle_b).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("reduced_can", &name), &exec, |b, &e| {
            b.iter(|| with_exec(e, || reduced_can(&example).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("invariants_128", &name), &exec, |b, &e| {
            b.iter(|| with_exec(e, || example.module.invariants(&Subspace::full(Field::Qi, 8))))
        });
    }
    group.finish();
}

criterion_group!(benches, strategies);
criterion_main!(benches);
