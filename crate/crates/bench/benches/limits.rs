use criterion::{criterion_group, criterion_main, Criterion};
use regunip_bench::forced;
use regunip_core::parabolics::{limit_membership_classify, LimitClass};
use regunip_core::rootdata::canonical_cocharacter;
use regunip_core::verdicts::is_regular_unipotent;

fn classify_all(c: &mut Criterion) {
    let g = forced("SL3", 3, 1).unwrap();
    let real = g.require_realization().unwrap().clone();
    let f = g.field().clone();
    let elems = g.closure().unwrap().elements().to_vec();
    for subset in [vec![], vec![0]] {
        let lambda = canonical_cocharacter(real.datum(), &subset);
        c.bench_function(&format!("classify SL3(F3), type {subset:?}"), |b| {
            b.iter(|| {
                elems
                    .iter()
                    .filter(|x| limit_membership_classify(&lambda, &real, x, &f).0 != LimitClass::Outside)
                    .count()
            })
        });
    }
}

fn regularity(c: &mut Criterion) {
    let g = forced("SL4", 2, 1).unwrap();
    let u = g.require_realization().unwrap().standard_regular_unipotent(g.field());
    c.bench_function("is_regular_unipotent SL4(F2)", |b| b.iter(|| is_regular_unipotent(&u, &g).unwrap().answer));
}

criterion_group!(benches, classify_all, regularity);
criterion_main!(benches);
