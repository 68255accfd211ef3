//! TF-IDF term weighting over a corpus of token streams.
//!
//! The default weight is relative term frequency times the unsmoothed natural
//! log inverse document frequency:
//!
//! ```text
//! tfidf(t, d) = count(t, d) / |d| * ln(N / df(t))
//! ```
//!
//! Terms the index has never seen get weight 0.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text::TokenStream;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TfMode {
    /// count / stream length
    #[default]
    Relative,
    /// count
    Raw,
    /// 1 + ln(count)
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IdfMode {
    /// ln(N / df)
    #[default]
    Plain,
    /// ln((1 + N) / (1 + df)) + 1
    Smooth,
}

macro_rules! keyword_enum {
    ($ty:ident { $($variant:ident => $name:literal),+ $(,)? }) => {
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(match self { $(Self::$variant => $name),+ })
            }
        }

        impl FromStr for $ty {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($name => Ok(Self::$variant),)+
                    other => Err(format!(
                        "unknown {} {other:?} (expected one of: {})",
                        stringify!($ty),
                        [$($name),+].join(", ")
                    )),
                }
            }
        }
    };
}

keyword_enum!(TfMode { Relative => "relative", Raw => "raw", Log => "log" });
keyword_enum!(IdfMode { Plain => "plain", Smooth => "smooth" });

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TfIdfConfig {
    pub tf: TfMode,
    pub idf: IdfMode,
}

/// Document frequencies over a corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VocabularyIndex {
    doc_freq: HashMap<String, usize>,
    n_docs: usize,
}

fn distinct_terms(stream: &TokenStream) -> impl Iterator<Item = &str> {
    let mut seen = std::collections::HashSet::new();
    stream.texts().filter(move |t| seen.insert(*t))
}

fn term_counts(stream: &TokenStream) -> HashMap<&str, usize> {
    let mut counts = HashMap::new();
    for t in stream.texts() {
        *counts.entry(t).or_insert(0) += 1;
    }
    counts
}

pub fn build_index<'a, I>(streams: I) -> Result<VocabularyIndex>
where
    I: IntoParallelIterator<Item = &'a TokenStream>,
{
    let (doc_freq, n_docs) = streams
        .into_par_iter()
        .fold(
            || (HashMap::<String, usize>::new(), 0usize),
            |(mut df, n), stream| {
                for term in distinct_terms(stream) {
                    *df.entry(term.to_string()).or_insert(0) += 1;
                }
                (df, n + 1)
            },
        )
        .reduce(
            || (HashMap::new(), 0),
            |(mut a, na), (b, nb)| {
                for (term, n) in b {
                    *a.entry(term).or_insert(0) += n;
                }
                (a, na + nb)
            },
        );
    if n_docs == 0 {
        return Err(Error::EmptyIndex);
    }
    Ok(VocabularyIndex { doc_freq, n_docs })
}

impl VocabularyIndex {
    pub fn n_docs(&self) -> usize {
        self.n_docs
    }

    /// 0 for terms outside the corpus.
    pub fn doc_freq(&self, term: &str) -> usize {
        self.doc_freq.get(term).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.doc_freq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.doc_freq.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &str> {
        self.doc_freq.keys().map(String::as_str)
    }

    /// 0 for terms outside the corpus.
    pub fn idf(&self, term: &str, mode: IdfMode) -> f64 {
        let df = self.doc_freq(term);
        if df == 0 {
            return 0.0;
        }
        let n = self.n_docs as f64;
        let df = df as f64;
        match mode {
            IdfMode::Plain => (n / df).ln(),
            IdfMode::Smooth => ((1.0 + n) / (1.0 + df)).ln() + 1.0,
        }
    }
}

fn tf_value(count: usize, len: usize, mode: TfMode) -> f64 {
    if count == 0 {
        return 0.0;
    }
    match mode {
        TfMode::Relative => count as f64 / len as f64,
        TfMode::Raw => count as f64,
        TfMode::Log => 1.0 + (count as f64).ln(),
    }
}

/// Relative frequency of `term` in `stream`; 0 for an empty stream.
pub fn tf(term: &str, stream: &TokenStream) -> f64 {
    let count = stream.texts().filter(|t| *t == term).count();
    tf_value(count, stream.len(), TfMode::Relative)
}

pub fn tfidf(term: &str, stream: &TokenStream, index: &VocabularyIndex) -> f64 {
    tfidf_with(term, stream, index, TfIdfConfig::default())
}

pub fn tfidf_with(term: &str, stream: &TokenStream, index: &VocabularyIndex, cfg: TfIdfConfig) -> f64 {
    let count = stream.texts().filter(|t| *t == term).count();
    tf_value(count, stream.len(), cfg.tf) * index.idf(term, cfg.idf)
}

/// TF-IDF weights of every distinct term of one document.
#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct TermWeights {
    pub doc_id: String,
    pub weights: BTreeMap<String, f64>,
}

impl TermWeights {
    pub fn compute(stream: &TokenStream, index: &VocabularyIndex, cfg: TfIdfConfig) -> Self {
        let len = stream.len();
        let weights = term_counts(stream)
            .into_iter()
            .map(|(term, count)| {
                let w = tf_value(count, len, cfg.tf) * index.idf(term, cfg.idf);
                (term.to_string(), w)
            })
            .collect();
        Self {
            doc_id: stream.doc_id.clone(),
            weights,
        }
    }

    /// 0 for terms not in the document.
    pub fn get(&self, term: &str) -> f64 {
        self.weights.get(term).copied().unwrap_or(0.0)
    }

    /// Multiplies every weight by `factor`.
    pub fn scaled(mut self, factor: f64) -> Self {
        for w in self.weights.values_mut() {
            *w *= factor;
        }
        self
    }
}
