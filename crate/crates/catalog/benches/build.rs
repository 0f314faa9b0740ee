use catalog::earth::EarthKind;
use catalog::{build_many, build_many_sequential, census, Family, FamilyId};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn batches() -> Vec<(&'static str, Vec<FamilyId>)> {
    let defaults = census().into_iter().map(|e| FamilyId::new(e.family)).collect();
    // larger earth maps, where each build dominates the scheduling cost
    let earth = (3..24).map(|p| FamilyId::new(Family::Earth(EarthKind::Quad(5))).with_p(p)).collect();
    vec![("census", defaults), ("earth-quad5", earth)]
}

fn bench_build(c: &mut Criterion) {
    let mut g = c.benchmark_group("build_many");
    g.sample_size(20);
    for (name, ids) in batches() {
        g.bench_with_input(BenchmarkId::new("parallel", name), &ids, |b, ids| b.iter(|| build_many(black_box(ids))));
        g.bench_with_input(BenchmarkId::new("sequential", name), &ids, |b, ids| {
            b.iter(|| build_many_sequential(black_box(ids)))
        });
    }
    g.finish();
}

criterion_group!(benches, bench_build);
criterion_main!(benches);
