//! Document polarity from TF-IDF weights and word polarities.
//!
//! A document's score is the weight-normalized average polarity of its distinct
//! opinion words (terms present in the lexicon):
//!
//! ```text
//! score(d) = Σ w(t)·s(t) / Σ w(t)
//! ```
//!
//! where `w(t)` is the term's TF-IDF weight (or 1 under [`Weighting::Uniform`])
//! and `s(t)` its polarity. A document without opinion words scores 0. When
//! every selected term has weight 0 (a term occurring in every document, or a
//! one-document corpus) the terms are averaged uniformly instead.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use log::info;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{Corpus, Document};
use crate::error::{Error, Result};
use crate::lexicon::{Lexicon, SenseMode};
use crate::morphology::{self, MorphologyRules};
use crate::text::{self, StopwordList, TokenStream};
use crate::weighting::{build_index, TermWeights, TfIdfConfig, VocabularyIndex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Positive,
    Negative,
    Neutral,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Positive => "positive",
            Self::Negative => "negative",
            Self::Neutral => "neutral",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Weighting {
    #[default]
    Tfidf,
    Uniform,
}

impl fmt::Display for Weighting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Tfidf => "tfidf",
            Self::Uniform => "uniform",
        })
    }
}

impl FromStr for Weighting {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tfidf" => Ok(Self::Tfidf),
            "uniform" => Ok(Self::Uniform),
            other => Err(format!("unknown weighting {other:?} (expected tfidf or uniform)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScoringConfig {
    /// Scores with `|score| <= epsilon` are neutral.
    pub epsilon: f64,
    pub weighting: Weighting,
    pub sense_mode: SenseMode,
    /// Terms whose TF-IDF weight falls below this are ignored, in both weighting modes.
    pub min_weight: f64,
    pub tfidf: TfIdfConfig,
}

impl Default for ScoringConfig {
    fn default() -> Self {
        Self {
            epsilon: 0.0,
            weighting: Weighting::Tfidf,
            sense_mode: SenseMode::Rank,
            min_weight: 0.0,
            tfidf: TfIdfConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DocumentVerdict {
    pub doc_id: String,
    /// In `[-1, 1]`.
    pub score: f64,
    pub label: Label,
    /// Tokens whose term contributed to the score.
    pub n_opinion_words: usize,
    /// Unnormalized `Σ w·s`, for debugging.
    pub raw_sum: f64,
}

pub fn classify(score: f64, epsilon: f64) -> Label {
    if score.abs() <= epsilon {
        Label::Neutral
    } else if score > epsilon {
        Label::Positive
    } else {
        Label::Negative
    }
}

pub fn score_document(
    stream: &TokenStream,
    weights: &TermWeights,
    lex: &Lexicon,
    cfg: &ScoringConfig,
) -> DocumentVerdict {
    let terms: BTreeSet<&str> = stream.texts().collect();
    let mut selected = Vec::new();
    for term in terms {
        let weight = weights.get(term);
        if weight < cfg.min_weight {
            continue;
        }
        if let Some(p) = lex.word_polarity(term, cfg.sense_mode) {
            let w = match cfg.weighting {
                Weighting::Tfidf => weight,
                Weighting::Uniform => 1.0,
            };
            selected.push((term, w, p.score));
        }
    }

    let total_weight: f64 = selected.iter().map(|(_, w, _)| w).sum();
    if total_weight == 0.0 {
        for entry in &mut selected {
            entry.1 = 1.0;
        }
    }
    let (num, den) = selected
        .iter()
        .fold((0.0, 0.0), |(num, den), (_, w, s)| (num + w * s, den + w));
    let score = if den > 0.0 { (num / den).clamp(-1.0, 1.0) } else { 0.0 };
    let n_opinion_words = stream
        .texts()
        // `selected` is in term order
        .filter(|t| selected.binary_search_by(|(term, _, _)| (*term).cmp(t)).is_ok())
        .count();

    DocumentVerdict {
        doc_id: stream.doc_id.clone(),
        score,
        label: classify(score, cfg.epsilon),
        n_opinion_words,
        raw_sum: num,
    }
}

/// Shared resources for preprocessing and scoring.
#[derive(Debug, Clone)]
pub struct Pipeline {
    pub lexicon: Lexicon,
    pub stopwords: StopwordList,
    pub morphology: MorphologyRules,
}

impl Pipeline {
    /// English stopwords and the bundled WordNet exception lists.
    pub fn new(lexicon: Lexicon) -> Self {
        Self {
            lexicon,
            stopwords: StopwordList::english(),
            morphology: MorphologyRules::wordnet(),
        }
    }

    pub fn with_stopwords(mut self, stopwords: StopwordList) -> Self {
        self.stopwords = stopwords;
        self
    }

    pub fn with_morphology(mut self, morphology: MorphologyRules) -> Self {
        self.morphology = morphology;
        self
    }

    /// Tokenize, lowercase, drop stopwords, reduce to base forms.
    pub fn preprocess(&self, doc_id: &str, raw_text: &str) -> TokenStream {
        let stream = text::tokenize(raw_text).with_doc_id(doc_id);
        let stream = text::transform_lowercase(stream);
        let stream = text::filter_stopwords(stream, &self.stopwords);
        morphology::stem(stream, &self.morphology, &self.lexicon)
    }

    pub fn preprocess_document(&self, doc: &Document) -> TokenStream {
        self.preprocess(&doc.id, &doc.raw_text)
    }

    /// Scores already-preprocessed streams against an index built over them.
    pub fn score_streams(&self, streams: &[TokenStream], cfg: &ScoringConfig) -> Result<Vec<DocumentVerdict>> {
        let index = build_index(streams)?;
        info!("scoring {} documents over {} distinct terms", index.n_docs(), index.len());
        Ok(streams
            .par_iter()
            .map(|s| self.score_stream(s, &index, cfg))
            .collect())
    }

    pub fn score_stream(&self, stream: &TokenStream, index: &VocabularyIndex, cfg: &ScoringConfig) -> DocumentVerdict {
        let weights = TermWeights::compute(stream, index, cfg.tfidf);
        score_document(stream, &weights, &self.lexicon, cfg)
    }

    /// One verdict per document, in corpus order.
    pub fn score_corpus(&self, corpus: &Corpus, cfg: &ScoringConfig) -> Result<Vec<DocumentVerdict>> {
        if corpus.is_empty() {
            return Err(Error::EmptyIndex);
        }
        let streams: Vec<TokenStream> = corpus
            .documents
            .par_iter()
            .map(|d| self.preprocess_document(d))
            .collect();
        self.score_streams(&streams, cfg)
    }

    /// Scores a single text as a one-document corpus.
    pub fn score_text(&self, doc_id: &str, raw_text: &str, cfg: &ScoringConfig) -> DocumentVerdict {
        let stream = self.preprocess(doc_id, raw_text);
        let index = build_index([&stream]).expect("one stream");
        self.score_stream(&stream, &index, cfg)
    }
}

/// Runs the full pipeline with the bundled WordNet exception lists.
pub fn score_corpus(
    corpus: &Corpus,
    lex: &Lexicon,
    stops: &StopwordList,
    cfg: &ScoringConfig,
) -> Result<Vec<DocumentVerdict>> {
    Pipeline::new(lex.clone())
        .with_stopwords(stops.clone())
        .score_corpus(corpus, cfg)
}
