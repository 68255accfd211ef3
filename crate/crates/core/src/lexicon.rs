//! SentiWordNet 3.0 lexicon parsing and per-lemma polarity.
//!
//! Data lines carry six tab-separated fields:
//!
//! ```text
//! POS  ID  PosScore  NegScore  SynsetTerms  Gloss
//! a    00001740  0.125  0  able#1  (usually followed by `to') having ...
//! ```
//!
//! `SynsetTerms` is a space-separated list of `lemma#sense_rank`. Lines starting
//! with `#` are comments.

use std::collections::HashMap;
use std::fmt;
use std::io::BufRead;
use std::path::Path;
use std::str::FromStr;

use log::{debug, info, warn};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const FIXTURE: &str = include_str!("../resources/fixture_lexicon.txt");

/// Tolerance on `pos + neg <= 1`; the published file rounds to 1/8ths and
/// some synsets sit exactly on the bound.
pub const SCORE_SUM_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PartOfSpeech {
    #[serde(rename = "n")]
    Noun,
    #[serde(rename = "v")]
    Verb,
    #[serde(rename = "a")]
    Adjective,
    #[serde(rename = "s")]
    AdjectiveSatellite,
    #[serde(rename = "r")]
    Adverb,
}

/// Part of speech with adjective satellites folded into adjectives, as used by
/// WordNet's morphology files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WordClass {
    Noun,
    Verb,
    Adjective,
    Adverb,
}

impl WordClass {
    pub const ALL: [WordClass; 4] = [Self::Noun, Self::Verb, Self::Adjective, Self::Adverb];
}

impl PartOfSpeech {
    pub fn tag(self) -> char {
        match self {
            Self::Noun => 'n',
            Self::Verb => 'v',
            Self::Adjective => 'a',
            Self::AdjectiveSatellite => 's',
            Self::Adverb => 'r',
        }
    }

    pub fn word_class(self) -> WordClass {
        match self {
            Self::Noun => WordClass::Noun,
            Self::Verb => WordClass::Verb,
            Self::Adjective | Self::AdjectiveSatellite => WordClass::Adjective,
            Self::Adverb => WordClass::Adverb,
        }
    }
}

impl FromStr for PartOfSpeech {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "n" => Ok(Self::Noun),
            "v" => Ok(Self::Verb),
            "a" => Ok(Self::Adjective),
            "s" => Ok(Self::AdjectiveSatellite),
            "r" => Ok(Self::Adverb),
            other => Err(format!("unknown part of speech {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaSense {
    pub lemma: String,
    pub sense_rank: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SynsetEntry {
    pub pos: PartOfSpeech,
    /// Eight-digit WordNet 3.0 synset offset.
    pub synset_id: String,
    pub pos_score: f64,
    pub neg_score: f64,
    pub lemmas: Vec<LemmaSense>,
    pub gloss: String,
}

impl SynsetEntry {
    pub fn polarity(&self) -> f64 {
        self.pos_score - self.neg_score
    }

    pub fn objectivity(&self) -> f64 {
        1.0 - self.pos_score - self.neg_score
    }
}

/// A data line that was skipped during parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MalformedLine {
    /// 1-based.
    pub line: usize,
    pub reason: String,
}

/// One sense of a lemma: the synset it belongs to and its rank within the lemma.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SenseRef {
    pub entry: usize,
    pub sense_rank: u32,
}

/// How the senses of a lemma combine into one polarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SenseMode {
    /// Only the most common sense (rank 1) counts.
    First,
    /// Senses weighted by `1 / sense_rank`.
    #[default]
    Rank,
    /// All senses weighted equally.
    Average,
}

impl fmt::Display for SenseMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::First => "first",
            Self::Rank => "rank",
            Self::Average => "average",
        })
    }
}

impl FromStr for SenseMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "first" => Ok(Self::First),
            "rank" => Ok(Self::Rank),
            "average" => Ok(Self::Average),
            other => Err(format!("unknown sense mode {other:?} (expected first, rank or average)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WordPolarity<'a> {
    pub lemma: &'a str,
    /// In `[-1, 1]`.
    pub score: f64,
}

#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    pub entries: Vec<SynsetEntry>,
    by_lemma: HashMap<String, Vec<SenseRef>>,
    pub malformed: Vec<MalformedLine>,
}

fn parse_line(line: &str) -> Result<SynsetEntry, String> {
    let fields: Vec<&str> = line.split('\t').collect();
    if fields.len() != 6 {
        return Err(format!("expected 6 tab-separated fields, found {}", fields.len()));
    }
    let pos: PartOfSpeech = fields[0].parse()?;
    let synset_id = fields[1];
    if synset_id.len() != 8 || !synset_id.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("bad synset id {synset_id:?}"));
    }
    let score = |s: &str, what: &str| -> Result<f64, String> {
        let v: f64 = s.parse().map_err(|_| format!("bad {what} {s:?}"))?;
        if !(0.0..=1.0).contains(&v) {
            return Err(format!("{what} {v} outside [0, 1]"));
        }
        Ok(v)
    };
    let pos_score = score(fields[2], "PosScore")?;
    let neg_score = score(fields[3], "NegScore")?;
    if pos_score + neg_score > 1.0 + SCORE_SUM_SLACK {
        return Err(format!("PosScore + NegScore = {} exceeds 1", pos_score + neg_score));
    }
    let lemmas = fields[4]
        .split_whitespace()
        .map(|term| {
            let (lemma, rank) = term
                .rsplit_once('#')
                .ok_or_else(|| format!("synset term {term:?} lacks #rank"))?;
            let sense_rank: u32 = rank
                .parse()
                .map_err(|_| format!("bad sense rank in {term:?}"))?;
            if lemma.is_empty() || sense_rank == 0 {
                return Err(format!("bad synset term {term:?}"));
            }
            Ok(LemmaSense {
                lemma: lemma.to_string(),
                sense_rank,
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    if lemmas.is_empty() {
        return Err("no synset terms".to_string());
    }
    Ok(SynsetEntry {
        pos,
        synset_id: synset_id.to_string(),
        pos_score,
        neg_score,
        lemmas,
        gloss: fields[5].to_string(),
    })
}

/// Parses a SentiWordNet 3.0 file. Malformed data lines are skipped and
/// recorded in [`Lexicon::malformed`]; a source with no parseable line at all
/// is rejected.
pub fn parse_lexicon(source: impl BufRead) -> Result<Lexicon> {
    let mut entries = Vec::new();
    let mut malformed = Vec::new();
    for (idx, line) in source.lines().enumerate() {
        let line = line?;
        let line = line.strip_suffix('\r').unwrap_or(&line);
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        match parse_line(line) {
            Ok(entry) => entries.push(entry),
            Err(reason) => {
                // separator-only lines (the stock file ends with one) carry nothing
                if line.chars().any(|c| c.is_alphanumeric()) {
                    warn!("lexicon line {}: {}", idx + 1, reason);
                } else {
                    debug!("lexicon line {}: {}", idx + 1, reason);
                }
                malformed.push(MalformedLine {
                    line: idx + 1,
                    reason,
                });
            }
        }
    }
    if entries.is_empty() {
        return Err(Error::NotSentiWordNet {
            malformed: malformed.len(),
        });
    }
    let mut lex = Lexicon::from_entries(entries);
    info!(
        "parsed {} synsets, {} lemmas ({} malformed lines)",
        lex.entries.len(),
        lex.lemma_count(),
        malformed.len()
    );
    lex.malformed = malformed;
    Ok(lex)
}

impl Lexicon {
    pub fn from_entries(entries: Vec<SynsetEntry>) -> Self {
        let mut by_lemma: HashMap<String, Vec<SenseRef>> = HashMap::new();
        for (i, entry) in entries.iter().enumerate() {
            for sense in &entry.lemmas {
                by_lemma.entry(sense.lemma.clone()).or_default().push(SenseRef {
                    entry: i,
                    sense_rank: sense.sense_rank,
                });
            }
        }
        // Canonical order so that lookups do not depend on line order.
        for senses in by_lemma.values_mut() {
            senses.sort_by(|a, b| {
                let (ea, eb) = (&entries[a.entry], &entries[b.entry]);
                (a.sense_rank, ea.pos, &ea.synset_id).cmp(&(b.sense_rank, eb.pos, &eb.synset_id))
            });
        }
        Self {
            entries,
            by_lemma,
            malformed: Vec::new(),
        }
    }

    pub fn parse_str(text: &str) -> Result<Self> {
        parse_lexicon(text.as_bytes())
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let file = std::fs::File::open(path).map_err(|source| Error::Resource {
            what: format!("lexicon {}", path.display()),
            source,
        })?;
        parse_lexicon(std::io::BufReader::new(file))
    }

    /// The small bundled lexicon used by tests and examples.
    pub fn fixture() -> Self {
        Self::parse_str(FIXTURE).expect("bundled fixture lexicon parses")
    }

    pub fn contains(&self, lemma: &str) -> bool {
        self.by_lemma.contains_key(lemma)
    }

    pub fn lemma_count(&self) -> usize {
        self.by_lemma.len()
    }

    pub fn lemmas(&self) -> impl Iterator<Item = &str> {
        self.by_lemma.keys().map(String::as_str)
    }

    /// Senses of a lemma ordered by rank, then part of speech, then synset id.
    pub fn senses(&self, lemma: &str) -> &[SenseRef] {
        self.by_lemma.get(lemma).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn has_lemma_as(&self, lemma: &str, class: WordClass) -> bool {
        self.senses(lemma)
            .iter()
            .any(|s| self.entries[s.entry].pos.word_class() == class)
    }

    /// The same lexicon with every entry's positive and negative scores exchanged.
    pub fn swap_polarity(&self) -> Self {
        let mut swapped = self.clone();
        for e in &mut swapped.entries {
            std::mem::swap(&mut e.pos_score, &mut e.neg_score);
        }
        swapped
    }

    /// Aggregated polarity of a lemma over all its senses, pooled across parts
    /// of speech. `None` when the lemma is not in the lexicon.
    ///
    /// In [`SenseMode::First`], a lemma with several rank-1 senses (one per part
    /// of speech) averages them.
    pub fn word_polarity<'a>(&self, lemma: &'a str, mode: SenseMode) -> Option<WordPolarity<'a>> {
        let senses = self.by_lemma.get(lemma)?;
        if let [only] = senses.as_slice() {
            return Some(WordPolarity {
                lemma,
                score: self.entries[only.entry].polarity(),
            });
        }
        let min_rank = senses.iter().map(|s| s.sense_rank).min()?;
        let mut num = 0.0;
        let mut den = 0.0;
        for sense in senses {
            let w = match mode {
                SenseMode::Rank => 1.0 / f64::from(sense.sense_rank),
                SenseMode::Average => 1.0,
                SenseMode::First if sense.sense_rank == min_rank => 1.0,
                SenseMode::First => continue,
            };
            num += w * self.entries[sense.entry].polarity();
            den += w;
        }
        Some(WordPolarity {
            lemma,
            score: (num / den).clamp(-1.0, 1.0),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn comment_lines_contribute_nothing() {
        let lex = Lexicon::parse_str("# comment\na\t00001740\t0.125\t0\table#1\tgloss\n").unwrap();
        assert_eq!(lex.entries.len(), 1);
        assert!(lex.malformed.is_empty());
        assert!(matches!(
            Lexicon::parse_str("# only a comment\n"),
            Err(Error::NotSentiWordNet { malformed: 0 })
        ));
    }

    #[test]
    fn parses_well_formed_line() {
        let lex = Lexicon::parse_str("a\t00001740\t0.125\t0\table#1\tgloss text").unwrap();
        let e = &lex.entries[0];
        assert_eq!(e.pos, PartOfSpeech::Adjective);
        assert_eq!(e.synset_id, "00001740");
        assert_eq!(e.pos_score, 0.125);
        assert_eq!(e.neg_score, 0.0);
        assert_eq!(
            e.lemmas,
            [LemmaSense {
                lemma: "able".into(),
                sense_rank: 1
            }]
        );
        assert_eq!(e.gloss, "gloss text");
        assert_abs_diff_eq!(e.objectivity(), 0.875);
    }

    #[test]
    fn multi_term_synset() {
        let lex = Lexicon::parse_str("a\t00002312\t0\t0\tdorsal#2 abaxial#1\tfacing away").unwrap();
        assert!(lex.contains("dorsal"));
        assert!(lex.contains("abaxial"));
        assert_eq!(lex.senses("dorsal")[0].sense_rank, 2);
    }

    #[test]
    fn malformed_lines_are_skipped() {
        let text = "\
a\t00001740\t0.125\t0\table#1\tok
a\t00001740\t0.125\tgloss missing a field
x\t00001740\t0.125\t0\table#1\tbad pos
a\t0001740\t0.125\t0\table#1\tshort id
a\t00001740\t0.75\t0.5\table#1\tsum above one
a\t00001740\t0.1\t0\table\tno rank
a\t00001740\t0.1\t0\table#0\tzero rank
a\t00001740\t0.1\t0\t\tno terms
\t\t\t\t#\t
";
        let lex = Lexicon::parse_str(text).unwrap();
        assert_eq!(lex.entries.len(), 1);
        let lines: Vec<_> = lex.malformed.iter().map(|m| m.line).collect();
        assert_eq!(lines, [2, 3, 4, 5, 6, 7, 8, 9]);
    }

    #[test]
    fn all_malformed_is_not_a_lexicon() {
        assert!(matches!(
            Lexicon::parse_str("hello world\n"),
            Err(Error::NotSentiWordNet { malformed: 1 })
        ));
    }

    #[test]
    fn crlf_lines() {
        let lex = Lexicon::parse_str("n\t00000001\t0.5\t0\tfoo#1\tg\r\n").unwrap();
        assert_eq!(lex.entries[0].gloss, "g");
    }

    #[test]
    fn single_sense_same_in_every_mode() {
        let lex = Lexicon::parse_str("a\t00000001\t0.625\t0\tsuperb#1\tg").unwrap();
        for mode in [SenseMode::First, SenseMode::Rank, SenseMode::Average] {
            assert_eq!(lex.word_polarity("superb", mode).unwrap().score, 0.625);
        }
    }

    #[test]
    fn rank_weighted_two_senses() {
        let lex = Lexicon::parse_str(
            "a\t00000001\t0.5\t0\tmixed#1\tg\nn\t00000002\t0\t0.5\tmixed#2\tg",
        )
        .unwrap();
        let rank = lex.word_polarity("mixed", SenseMode::Rank).unwrap().score;
        assert_abs_diff_eq!(rank, (1.0 * 0.5 + 0.5 * -0.5) / 1.5, epsilon = 1e-12);
        assert_abs_diff_eq!(rank, 1.0 / 6.0, epsilon = 1e-12);
        assert_eq!(lex.word_polarity("mixed", SenseMode::Average).unwrap().score, 0.0);
        assert_eq!(lex.word_polarity("mixed", SenseMode::First).unwrap().score, 0.5);
    }

    #[test]
    fn first_mode_pools_rank_one_across_pos() {
        let lex = Lexicon::parse_str(
            "a\t00000001\t0.5\t0\tfine#1\tg\nn\t00000002\t0\t0.25\tfine#1\tg\nv\t00000003\t0\t1\tfine#2\tg",
        )
        .unwrap();
        assert_eq!(lex.word_polarity("fine", SenseMode::First).unwrap().score, 0.125);
    }

    #[test]
    fn unknown_lemma_is_absent() {
        assert!(Lexicon::fixture().word_polarity("zzzz", SenseMode::Rank).is_none());
    }

    #[test]
    fn word_class_lookup() {
        let lex = Lexicon::parse_str("s\t00000001\t0.5\t0\tbright#1\tg").unwrap();
        assert!(lex.has_lemma_as("bright", WordClass::Adjective));
        assert!(!lex.has_lemma_as("bright", WordClass::Noun));
    }

    #[test]
    fn swap_negates_polarity() {
        let lex = Lexicon::fixture();
        let swapped = lex.swap_polarity();
        for lemma in lex.lemmas() {
            for mode in [SenseMode::First, SenseMode::Rank, SenseMode::Average] {
                let a = lex.word_polarity(lemma, mode).unwrap().score;
                let b = swapped.word_polarity(lemma, mode).unwrap().score;
                assert_eq!(a, -b, "{lemma} {mode}");
            }
        }
    }

    #[test]
    fn fixture_is_well_formed() {
        let lex = Lexicon::fixture();
        assert!(lex.malformed.is_empty());
        assert!(lex.entries.len() >= 30);
        assert!(lex.word_polarity("good", SenseMode::Rank).unwrap().score > 0.0);
        assert!(lex.word_polarity("excellent", SenseMode::Rank).unwrap().score > 0.0);
        assert!(lex.word_polarity("bad", SenseMode::Rank).unwrap().score < 0.0);
    }

    #[test]
    fn sense_mode_round_trip() {
        for mode in [SenseMode::First, SenseMode::Rank, SenseMode::Average] {
            assert_eq!(mode.to_string().parse::<SenseMode>().unwrap(), mode);
        }
        assert!("best".parse::<SenseMode>().is_err());
    }
}
