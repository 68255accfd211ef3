//! WordNet-style morphological reduction ("stem (wordNet)").
//!
//! A token is mapped to its base form by
//!
//! 1. the exception lists (`noun.exc`, `verb.exc`, `adj.exc`, `adv.exc`), taking
//!    the first listed base form the lexicon knows in that word class;
//! 2. the token itself, if the lexicon knows it;
//! 3. the detachment-suffix rules of each word class, taking the first result
//!    the lexicon knows in that class;
//! 4. an exception base form the lexicon does not know;
//! 5. otherwise the token unchanged.
//!
//! The reduction is repeated until it reaches a fixed point, so [`stem`] is
//! idempotent.

use std::collections::HashMap;
use std::io::BufRead;
use std::path::Path;

use crate::error::{Error, Result};
use crate::lexicon::{Lexicon, WordClass};
use crate::text::TokenStream;

const NOUN_EXC: &str = include_str!("../resources/noun.exc");
const VERB_EXC: &str = include_str!("../resources/verb.exc");
const ADJ_EXC: &str = include_str!("../resources/adj.exc");
const ADV_EXC: &str = include_str!("../resources/adv.exc");

const MAX_PASSES: usize = 8;

const NOUN_RULES: &[(&str, &str)] = &[
    ("s", ""),
    ("ses", "s"),
    ("xes", "x"),
    ("zes", "z"),
    ("ches", "ch"),
    ("shes", "sh"),
    ("men", "man"),
    ("ies", "y"),
];

const VERB_RULES: &[(&str, &str)] = &[
    ("s", ""),
    ("ies", "y"),
    ("es", "e"),
    ("es", ""),
    ("ed", "e"),
    ("ed", ""),
    ("ing", "e"),
    ("ing", ""),
];

const ADJ_RULES: &[(&str, &str)] = &[("er", ""), ("est", ""), ("er", "e"), ("est", "e")];

fn class_index(class: WordClass) -> usize {
    match class {
        WordClass::Noun => 0,
        WordClass::Verb => 1,
        WordClass::Adjective => 2,
        WordClass::Adverb => 3,
    }
}

fn rules_for(class: WordClass) -> &'static [(&'static str, &'static str)] {
    match class {
        WordClass::Noun => NOUN_RULES,
        WordClass::Verb => VERB_RULES,
        WordClass::Adjective => ADJ_RULES,
        WordClass::Adverb => &[],
    }
}

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')
}

/// Exception lists per word class: inflected form → base forms.
#[derive(Debug, Clone, Default)]
pub struct MorphologyRules {
    exceptions: [HashMap<String, Vec<String>>; 4],
}

impl MorphologyRules {
    /// Detachment rules only, no exception lists.
    pub fn without_exceptions() -> Self {
        Self::default()
    }

    /// The bundled WordNet 3.0 exception lists.
    pub fn wordnet() -> Self {
        let mut rules = Self::default();
        for (class, text) in [
            (WordClass::Noun, NOUN_EXC),
            (WordClass::Verb, VERB_EXC),
            (WordClass::Adjective, ADJ_EXC),
            (WordClass::Adverb, ADV_EXC),
        ] {
            rules
                .add_exceptions(class, text.as_bytes())
                .expect("reading from memory cannot fail");
        }
        rules
    }

    /// Reads any of `noun.exc`, `verb.exc`, `adj.exc`, `adv.exc` present in `dir`.
    pub fn from_dir(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref();
        let mut rules = Self::default();
        for (class, name) in [
            (WordClass::Noun, "noun.exc"),
            (WordClass::Verb, "verb.exc"),
            (WordClass::Adjective, "adj.exc"),
            (WordClass::Adverb, "adv.exc"),
        ] {
            let path = dir.join(name);
            if !path.is_file() {
                continue;
            }
            let resource_err = |source| Error::Resource {
                what: format!("exception list {}", path.display()),
                source,
            };
            let file = std::fs::File::open(&path).map_err(resource_err)?;
            rules
                .add_exceptions(class, std::io::BufReader::new(file))
                .map_err(resource_err)?;
        }
        Ok(rules)
    }

    /// Adds lines of the form `inflected base [base ...]`.
    pub fn add_exceptions(&mut self, class: WordClass, reader: impl BufRead) -> std::io::Result<()> {
        let map = &mut self.exceptions[class_index(class)];
        for line in reader.lines() {
            let line = line?;
            let mut words = line.split_whitespace();
            let Some(inflected) = words.next() else {
                continue;
            };
            let bases: Vec<String> = words.map(str::to_string).collect();
            if !bases.is_empty() {
                map.entry(inflected.to_string()).or_default().extend(bases);
            }
        }
        Ok(())
    }

    pub fn exceptions(&self, word: &str, class: WordClass) -> &[String] {
        self.exceptions[class_index(class)]
            .get(word)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn exception_count(&self) -> usize {
        self.exceptions.iter().map(HashMap::len).sum()
    }

    fn detach(word: &str, class: WordClass) -> Vec<String> {
        if class == WordClass::Noun && (word.len() <= 2 || word.ends_with("ss")) {
            return Vec::new();
        }
        let mut out: Vec<String> = rules_for(class)
            .iter()
            .filter_map(|(suffix, ending)| {
                let stem = word.strip_suffix(suffix)?;
                (!stem.is_empty()).then(|| format!("{stem}{ending}"))
            })
            .collect();
        // Doubled final consonant: running -> run, stopped -> stop, bigger -> big.
        let doubled: &[&str] = match class {
            WordClass::Verb => &["ing", "ed"],
            WordClass::Adjective => &["er", "est"],
            _ => &[],
        };
        for suffix in doubled {
            if let Some(stem) = word.strip_suffix(suffix) {
                let mut chars = stem.chars().rev();
                if let (Some(a), Some(b)) = (chars.next(), chars.next()) {
                    if a == b && a.is_alphabetic() && !is_vowel(a) {
                        out.push(stem[..stem.len() - a.len_utf8()].to_string());
                    }
                }
            }
        }
        out
    }

    /// One reduction step for a single lowercase word.
    pub fn base_form(&self, word: &str, lexicon: &Lexicon) -> String {
        let mut unknown_exception = None;
        for class in WordClass::ALL {
            for base in self.exceptions(word, class) {
                if lexicon.has_lemma_as(base, class) {
                    return base.clone();
                }
                unknown_exception.get_or_insert(base);
            }
        }
        if lexicon.contains(word) {
            return word.to_string();
        }
        for class in WordClass::ALL {
            if let Some(base) = Self::detach(word, class)
                .into_iter()
                .find(|b| lexicon.has_lemma_as(b, class))
            {
                return base;
            }
        }
        unknown_exception.cloned().unwrap_or_else(|| word.to_string())
    }

    /// Repeats [`MorphologyRules::base_form`] until the word stops changing.
    pub fn lemmatize(&self, word: &str, lexicon: &Lexicon) -> String {
        let mut current = word.to_string();
        for _ in 0..MAX_PASSES {
            let next = self.base_form(&current, lexicon);
            if next == current {
                break;
            }
            current = next;
        }
        current
    }
}

/// Replaces every token with its base form. Expects lowercase input.
pub fn stem(mut stream: TokenStream, rules: &MorphologyRules, lexicon: &Lexicon) -> TokenStream {
    let mut cache: HashMap<String, String> = HashMap::new();
    for token in &mut stream.tokens {
        let base = cache
            .entry(token.text.clone())
            .or_insert_with(|| rules.lemmatize(&token.text, lexicon));
        if *base != token.text {
            token.text = base.clone();
        }
    }
    stream
}
