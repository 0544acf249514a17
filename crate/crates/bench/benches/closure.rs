use criterion::{criterion_group, criterion_main, Criterion};
use regunip_bench::group;
use regunip_core::parabolics::enumerate_borels;

fn closures(c: &mut Criterion) {
    for (label, p, k) in [("SL3", 2, 1), ("Sp4", 2, 1), ("SL3", 3, 1), ("SL2", 2, 4)] {
        c.bench_function(&format!("closure {label}(F{})", u32::pow(p, k)), |b| {
            b.iter(|| group(label, p, k).unwrap().order().unwrap())
        });
    }
}

fn borels(c: &mut Criterion) {
    let g = regunip_bench::forced("SL4", 2, 1).unwrap();
    c.bench_function("enumerate_borels SL4(F2)", |b| b.iter(|| enumerate_borels(&g).unwrap().len()));
}

criterion_group!(benches, closures, borels);
criterion_main!(benches);
