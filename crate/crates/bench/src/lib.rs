//! Synthetic inputs for the criterion benchmarks under `benches/`.

use newsent::{Category, Corpus, Document};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CATEGORIES: [&str; 5] = ["business", "entertainment", "politics", "sport", "tech"];

// Mix of fixture-lexicon lemmas, inflected forms and plain filler.
const WORDS: &[&str] = &[
    "good", "bad", "excellent", "terrible", "happy", "sad", "strong", "weak", "profits", "losses",
    "rose", "fell", "growing", "failure", "success", "market", "company", "companies", "shares",
    "the", "a", "of", "and", "in", "to", "was", "is", "said", "year", "film", "team", "game",
    "government", "people", "new", "first", "match", "players", "election", "software", "phone",
];

/// Deterministic corpus of `n_docs` documents spread over five categories.
pub fn synthetic_corpus(n_docs: usize, words_per_doc: usize, seed: u64) -> Corpus {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let documents = (0..n_docs)
        .map(|i| {
            let cat = CATEGORIES[i % CATEGORIES.len()];
            let len = rng.gen_range(words_per_doc / 2..=words_per_doc * 3 / 2);
            let words: Vec<&str> = (0..len).map(|_| *WORDS.choose(&mut rng).unwrap()).collect();
            Document {
                id: format!("{cat}/{i:05}"),
                category: Category::new(cat).unwrap(),
                raw_text: words.join(" ") + ".",
            }
        })
        .collect();
    Corpus::from_documents(documents)
}
