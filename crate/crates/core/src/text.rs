//! Tokenization, case folding and stopword filtering.

use std::collections::HashSet;
use std::io::BufRead;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const DEFAULT_STOPWORDS: &str = include_str!("../resources/stopwords_en.txt");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub text: String,
    /// Ordinal of the token in the original tokenization, kept through filtering.
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TokenStream {
    pub doc_id: String,
    pub tokens: Vec<Token>,
}

impl TokenStream {
    pub fn with_doc_id(mut self, id: impl Into<String>) -> Self {
        self.doc_id = id.into();
        self
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn texts(&self) -> impl Iterator<Item = &str> {
        self.tokens.iter().map(|t| t.text.as_str())
    }

    /// Builds a stream directly from token texts, numbering them in order.
    pub fn from_texts<I, S>(doc_id: impl Into<String>, texts: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self {
            doc_id: doc_id.into(),
            tokens: texts
                .into_iter()
                .enumerate()
                .map(|(position, text)| Token {
                    text: text.into(),
                    position,
                })
                .collect(),
        }
    }
}

fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '\u{2019}'
}

/// Splits text into maximal runs of alphabetic characters, allowing an
/// apostrophe only between two letters ("don't", "o'clock"). Everything else,
/// digits included, separates tokens and is dropped. Curly apostrophes are
/// normalized to `'`.
pub fn tokenize(raw_text: &str) -> TokenStream {
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut chars = raw_text.chars().peekable();

    let flush = |current: &mut String, tokens: &mut Vec<Token>| {
        if !current.is_empty() {
            let position = tokens.len();
            tokens.push(Token {
                text: std::mem::take(current),
                position,
            });
        }
    };

    while let Some(c) = chars.next() {
        if c.is_alphabetic() {
            current.push(c);
        } else if is_apostrophe(c)
            && !current.is_empty()
            && chars.peek().is_some_and(|n| n.is_alphabetic())
        {
            current.push('\'');
        } else {
            flush(&mut current, &mut tokens);
        }
    }
    flush(&mut current, &mut tokens);

    TokenStream {
        doc_id: String::new(),
        tokens,
    }
}

pub fn transform_lowercase(mut stream: TokenStream) -> TokenStream {
    for token in &mut stream.tokens {
        if token.text.chars().any(char::is_uppercase) {
            token.text = token.text.to_lowercase();
        }
    }
    stream
}

/// A set of lowercase words to drop from token streams.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StopwordList {
    words: HashSet<String>,
}

impl StopwordList {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The bundled English list (179 words).
    pub fn english() -> Self {
        Self::parse_str(DEFAULT_STOPWORDS)
    }

    /// Entries are lowercased; blank entries are dropped.
    pub fn from_words<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Self {
            words: words
                .into_iter()
                .map(|w| w.as_ref().trim().to_lowercase())
                .filter(|w| !w.is_empty())
                .collect(),
        }
    }

    /// One word per line; lines starting with `#` are comments.
    pub fn parse_str(text: &str) -> Self {
        Self::from_words(text.lines().filter(|l| !l.trim_start().starts_with('#')))
    }

    pub fn from_reader(reader: impl BufRead) -> std::io::Result<Self> {
        let mut words = Vec::new();
        for line in reader.lines() {
            let line = line?;
            if !line.trim_start().starts_with('#') {
                words.push(line);
            }
        }
        Ok(Self::from_words(words))
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let file = std::fs::File::open(path).map_err(|source| Error::Resource {
            what: format!("stopword list {}", path.display()),
            source,
        })?;
        Self::from_reader(std::io::BufReader::new(file)).map_err(|source| Error::Resource {
            what: format!("stopword list {}", path.display()),
            source,
        })
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

pub fn filter_stopwords(mut stream: TokenStream, stops: &StopwordList) -> TokenStream {
    stream.tokens.retain(|t| !stops.contains(&t.text));
    stream
}
