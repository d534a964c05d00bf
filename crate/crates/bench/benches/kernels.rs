use criterion::{black_box, criterion_group, criterion_main, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use singbraid::sample::random_pure_word;
use singbraid::*;

fn desingularization(c: &mut Criterion) {
    let w = parse_braid("t1 s2 t3 S1 t2 t1 s3 t3 S2 t2 t1 t3", 4).unwrap();
    c.bench_function("desingularize 8 singular letters", |b| {
        b.iter(|| desingularize(black_box(&w)).unwrap())
    });
    let u = parse_braid("s1 t2 s1 S2 t1", 3).unwrap();
    let v = parse_braid("s1 t2 t1 s2 S2 s1 S2", 3).unwrap();
    c.bench_function("sb_equal 3 strands", |b| {
        b.iter(|| sb_equal(black_box(&u), black_box(&v)).unwrap())
    });
}

fn rewriting(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let words: Vec<BraidWord> = (0..32)
        .map(|_| random_pure_word(&mut rng, 4, 12, 5))
        .collect();
    c.bench_function("rs_rewrite 32 words in SP_4", |b| {
        b.iter(|| {
            words
                .iter()
                .map(|w| rs_rewrite(w).unwrap().len())
                .sum::<usize>()
        })
    });
    c.bench_function("sp_presentation n=5", |b| {
        b.iter(|| sp_presentation(black_box(5)).unwrap())
    });
}

fn groups(c: &mut Criterion) {
    let s3 = GroupPresentation::with_default_names(
        2,
        ["x1 x1", "x2 x2 x2", "x1 x2 x1 x2"]
            .iter()
            .map(|r| FreeWord::parse(r, 2).unwrap())
            .collect(),
    )
    .unwrap();
    c.bench_function("todd_coxeter S3", |b| {
        b.iter(|| todd_coxeter(black_box(&s3), &[], 1000))
    });
    let g1 = group_of_braid(RepId::Phi1, &parse_braid("s1 t1", 2).unwrap()).unwrap();
    let s4 = FiniteGroupModel::symmetric(4).unwrap();
    c.bench_function("count_homs G1 into S4", |b| {
        b.iter(|| count_homs(black_box(&g1), &s4).unwrap())
    });
    let sp4 = sp_presentation(4).unwrap();
    c.bench_function("abelianization SP_4", |b| {
        b.iter(|| abelianization(black_box(&sp4)))
    });
}

fn singquandles(c: &mut Criterion) {
    let mut group = c.benchmark_group("singquandles");
    group.sample_size(10);
    group.bench_function("enumerate order 3", |b| {
        b.iter(|| enumerate_singquandles(3, false).unwrap().len())
    });
    let models = enumerate_singquandles(3, true).unwrap();
    let p = fundamental_singquandle(&parse_braid("s1 s2 t1 S2 t2", 3).unwrap()).unwrap();
    group.bench_function("colorings by all order 3 classes", |b| {
        b.iter(|| {
            models
                .iter()
                .map(|m| count_sq_colorings(&p, m).unwrap())
                .sum::<u64>()
        })
    });
    group.finish();
}

criterion_group!(benches, desingularization, rewriting, groups, singquandles);
criterion_main!(benches);
