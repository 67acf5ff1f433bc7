use criterion::{criterion_group, criterion_main, Criterion};
use dqg_core::nfcore::{normal_form, Atom, Session};
use dqg_core::rmatrix::verify_qdybe;

fn bench_normal_form(c: &mut Criterion) {
    let sess = Session::new(3);
    let word = [(3, 1), (2, 3), (3, 2), (1, 2), (2, 1)];
    c.bench_function("normal_form len5 n3", |b| {
        b.iter(|| {
            let atoms: Vec<Atom> = word.iter().map(|&(i, j)| Atom::T(i, j)).collect();
            normal_form(&sess, &atoms)
        })
    });
}

fn bench_qdybe(c: &mut Criterion) {
    c.bench_function("qdybe n2", |b| b.iter(|| verify_qdybe(2)));
}

criterion_group!(benches, bench_normal_form, bench_qdybe);
criterion_main!(benches);
