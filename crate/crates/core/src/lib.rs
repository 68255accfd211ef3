//! Lexicon-based, document-level sentiment analysis for news corpora.
//!
//! The pipeline runs in five stages:
//!
//! 1. [`corpus`]: load `<root>/<category>/<file>` trees into labeled documents;
//! 2. [`text`] and [`morphology`]: tokenize, lowercase, drop stopwords and
//!    reduce words to WordNet base forms;
//! 3. [`weighting`]: TF-IDF weights over the whole corpus;
//! 4. [`lexicon`]: SentiWordNet 3.0 polarity per lemma;
//! 5. [`scoring`]: weighted average polarity per document, classified as
//!    positive, negative or neutral.
//!
//! [`report`] aggregates verdicts per category and renders them.
//!
//! ```
//! use newsent::{Lexicon, Pipeline, ScoringConfig, Label};
//!
//! let pipeline = Pipeline::new(Lexicon::fixture());
//! let verdict = pipeline.score_text("doc", "A good and excellent film.", &ScoringConfig::default());
//! assert_eq!(verdict.label, Label::Positive);
//! ```

pub mod corpus;
pub mod error;
pub mod lexicon;
pub mod morphology;
pub mod report;
pub mod scoring;
pub mod text;
pub mod weighting;

pub use corpus::{load_corpus, load_single, Category, Corpus, Document};
pub use error::{Error, Result};
pub use lexicon::{parse_lexicon, Lexicon, PartOfSpeech, SenseMode, SynsetEntry, WordPolarity};
pub use morphology::{stem, MorphologyRules};
pub use report::{render, summarize, CategoryReport, Format, RunManifest};
pub use scoring::{classify, score_corpus, score_document, DocumentVerdict, Label, Pipeline, ScoringConfig, Weighting};
pub use text::{filter_stopwords, tokenize, transform_lowercase, StopwordList, Token, TokenStream};
pub use weighting::{build_index, tf, tfidf, IdfMode, TermWeights, TfIdfConfig, TfMode, VocabularyIndex};
