//! Brute-force reference implementations and fixtures shared by the
//! integration tests. Nothing here calls the weighting or aggregation code
//! under test.

#![allow(dead_code)]

use std::path::PathBuf;

use newsent::lexicon::SynsetEntry;
use newsent::{Category, Corpus, Document, IdfMode, SenseMode, TfMode, Weighting};
use rand::seq::SliceRandom;
use rand::Rng;

/// Fixture-lexicon lemmas that survive preprocessing unchanged.
pub const OPINION_WORDS: &[&str] = &[
    "good", "excellent", "bad", "terrible", "happy", "sad", "great", "poor", "win", "lose",
    "profit", "loss", "growth", "crisis", "success", "failure", "strong", "weak", "love", "hate",
    "boost", "fall", "rise", "award", "death", "film", "market", "cat", "star", "goose",
];

/// Words absent from the fixture lexicon, also unchanged by preprocessing.
pub const FILLER_WORDS: &[&str] = &[
    "blorf", "tazzle", "quonk", "glemp", "vrask", "zindle", "plurt", "mogwub",
];

pub fn tfidf_oracle(docs: &[Vec<String>], d: usize, term: &str, tf_mode: TfMode, idf_mode: IdfMode) -> f64 {
    let mut count = 0usize;
    for t in &docs[d] {
        if t == term {
            count += 1;
        }
    }
    let mut df = 0usize;
    for doc in docs {
        let mut found = false;
        for t in doc {
            if t == term {
                found = true;
            }
        }
        if found {
            df += 1;
        }
    }
    if count == 0 || df == 0 {
        return 0.0;
    }
    let n = docs.len() as f64;
    let tf = match tf_mode {
        TfMode::Relative => count as f64 / docs[d].len() as f64,
        TfMode::Raw => count as f64,
        TfMode::Log => 1.0 + (count as f64).ln(),
    };
    let idf = match idf_mode {
        IdfMode::Plain => (n / df as f64).ln(),
        IdfMode::Smooth => ((1.0 + n) / (1.0 + df as f64)).ln() + 1.0,
    };
    tf * idf
}

/// Linear scan over every synset for the lemma's senses.
pub fn polarity_oracle(entries: &[SynsetEntry], lemma: &str, mode: SenseMode) -> Option<f64> {
    let mut senses: Vec<(u32, f64)> = Vec::new();
    for e in entries {
        for l in &e.lemmas {
            if l.lemma == lemma {
                senses.push((l.sense_rank, e.pos_score - e.neg_score));
            }
        }
    }
    if senses.is_empty() {
        return None;
    }
    let (mut num, mut den) = (0.0, 0.0);
    match mode {
        SenseMode::Rank => {
            for (r, p) in &senses {
                num += p / *r as f64;
                den += 1.0 / *r as f64;
            }
        }
        SenseMode::Average => {
            for (_, p) in &senses {
                num += p;
                den += 1.0;
            }
        }
        SenseMode::First => {
            let min = senses.iter().map(|s| s.0).min().unwrap();
            for (r, p) in &senses {
                if *r == min {
                    num += p;
                    den += 1.0;
                }
            }
        }
    }
    Some(num / den)
}

#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    pub weighting: Weighting,
    pub sense_mode: SenseMode,
    pub min_weight: f64,
    pub tf_mode: TfMode,
    pub idf_mode: IdfMode,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            weighting: Weighting::Tfidf,
            sense_mode: SenseMode::Rank,
            min_weight: 0.0,
            tf_mode: TfMode::Relative,
            idf_mode: IdfMode::Plain,
        }
    }
}

/// Document score by literal formula: weighted mean polarity over distinct
/// opinion terms, uniform when every weight is zero, 0 without opinion terms.
pub fn score_oracle(docs: &[Vec<String>], d: usize, entries: &[SynsetEntry], cfg: OracleConfig) -> f64 {
    let mut distinct: Vec<&String> = Vec::new();
    for t in &docs[d] {
        if !distinct.contains(&t) {
            distinct.push(t);
        }
    }
    let mut terms: Vec<(f64, f64)> = Vec::new();
    for t in distinct {
        let Some(s) = polarity_oracle(entries, t, cfg.sense_mode) else {
            continue;
        };
        let tfidf = tfidf_oracle(docs, d, t, cfg.tf_mode, cfg.idf_mode);
        if tfidf < cfg.min_weight {
            continue;
        }
        let w = match cfg.weighting {
            Weighting::Tfidf => tfidf,
            Weighting::Uniform => 1.0,
        };
        terms.push((w, s));
    }
    if terms.is_empty() {
        return 0.0;
    }
    if terms.iter().all(|(w, _)| *w == 0.0) {
        for t in &mut terms {
            t.0 = 1.0;
        }
    }
    let num: f64 = terms.iter().map(|(w, s)| w * s).sum();
    let den: f64 = terms.iter().map(|(w, _)| w).sum();
    num / den
}

/// Up to `max_docs` documents of 0..=`max_tokens` words drawn from `vocab`.
pub fn random_docs(rng: &mut impl Rng, vocab: &[&str], max_docs: usize, max_tokens: usize) -> Vec<Vec<String>> {
    let n_docs = rng.gen_range(1..=max_docs);
    // A narrower per-corpus vocabulary makes shared terms (df > 1) common.
    let k = rng.gen_range(1..=vocab.len());
    let local: Vec<&str> = vocab.choose_multiple(rng, k).copied().collect();
    (0..n_docs)
        .map(|_| {
            let len = rng.gen_range(0..=max_tokens);
            (0..len)
                .map(|_| local.choose(rng).unwrap().to_string())
                .collect()
        })
        .collect()
}

pub fn opinion_vocab() -> Vec<&'static str> {
    OPINION_WORDS.iter().chain(FILLER_WORDS).copied().collect()
}

/// Wraps word lists as documents spread over a few categories.
pub fn corpus_from_docs(docs: &[Vec<String>]) -> Corpus {
    const CATS: [&str; 3] = ["business", "sport", "tech"];
    Corpus::from_documents(
        docs.iter()
            .enumerate()
            .map(|(i, words)| {
                let cat = CATS[i % CATS.len()];
                Document {
                    id: format!("{cat}/{i:03}"),
                    category: Category::new(cat).unwrap(),
                    raw_text: words.join(" "),
                }
            })
            .collect(),
    )
}

fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

/// `NEWSENT_SWN`, else `data/sentiwordnet/SentiWordNet_3.0.0.txt` in the workspace.
pub fn sentiwordnet_path() -> Option<PathBuf> {
    let path = std::env::var_os("NEWSENT_SWN")
        .map(PathBuf::from)
        .unwrap_or_else(|| workspace_root().join("data/sentiwordnet/SentiWordNet_3.0.0.txt"));
    path.is_file().then_some(path)
}

/// `NEWSENT_BBC_DIR`, else `data/bbc` in the workspace.
pub fn bbc_root() -> Option<PathBuf> {
    let path = std::env::var_os("NEWSENT_BBC_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| workspace_root().join("data/bbc"));
    path.is_dir().then_some(path)
}
