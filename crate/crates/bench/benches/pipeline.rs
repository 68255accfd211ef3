use std::hint::black_box;
use std::path::PathBuf;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion, Throughput};
use newsent::{build_index, Lexicon, Pipeline, ScoringConfig, TermWeights, TokenStream};
use newsent_bench::synthetic_corpus;

const SEED: u64 = 0x5e4715;

fn lexicon_text() -> String {
    let swn = std::env::var_os("NEWSENT_SWN").map(PathBuf::from).unwrap_or_else(|| {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/sentiwordnet/SentiWordNet_3.0.0.txt")
    });
    let fixture = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/resources/fixture_lexicon.txt");
    std::fs::read_to_string(&swn).or_else(|_| std::fs::read_to_string(fixture)).unwrap()
}

fn preprocessing(c: &mut Criterion) {
    let corpus = synthetic_corpus(200, 400, SEED);
    let pipeline = Pipeline::new(Lexicon::fixture());
    let bytes: usize = corpus.documents.iter().map(|d| d.raw_text.len()).sum();
    let mut group = c.benchmark_group("preprocess");
    group.throughput(Throughput::Bytes(bytes as u64));
    group.bench_function("tokenize", |b| {
        b.iter(|| {
            for doc in &corpus.documents {
                black_box(newsent::tokenize(&doc.raw_text));
            }
        })
    });
    group.bench_function("full", |b| {
        b.iter(|| {
            for doc in &corpus.documents {
                black_box(pipeline.preprocess_document(doc));
            }
        })
    });
    group.finish();
}

fn weighting(c: &mut Criterion) {
    let corpus = synthetic_corpus(2000, 400, SEED);
    let pipeline = Pipeline::new(Lexicon::fixture());
    let streams: Vec<TokenStream> = corpus.documents.iter().map(|d| pipeline.preprocess_document(d)).collect();
    c.bench_function("build_index/2000", |b| b.iter(|| black_box(build_index(&streams).unwrap())));
    let index = build_index(&streams).unwrap();
    let cfg = Default::default();
    c.bench_function("term_weights/2000", |b| {
        b.iter(|| {
            for s in &streams {
                black_box(TermWeights::compute(s, &index, cfg));
            }
        })
    });
}

fn lexicon(c: &mut Criterion) {
    let text = lexicon_text();
    let mut group = c.benchmark_group("lexicon");
    group.sample_size(10);
    group.throughput(Throughput::Bytes(text.len() as u64));
    group.bench_function("parse", |b| b.iter(|| black_box(Lexicon::parse_str(&text).unwrap())));
    group.finish();
}

fn scoring(c: &mut Criterion) {
    let corpus = synthetic_corpus(2225, 400, SEED);
    let cfg = ScoringConfig::default();
    let mut group = c.benchmark_group("score_corpus");
    group.sample_size(10);
    group.bench_function("2225_docs", |b| {
        b.iter_batched(
            || Pipeline::new(Lexicon::fixture()),
            |p| black_box(p.score_corpus(&corpus, &cfg).unwrap()),
            BatchSize::LargeInput,
        )
    });
    group.finish();
}

criterion_group!(benches, preprocessing, weighting, lexicon, scoring);
criterion_main!(benches);
