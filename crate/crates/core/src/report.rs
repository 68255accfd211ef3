//! Per-category sentiment counts and their renderings.

use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::corpus::{Category, Corpus};
use crate::error::{Error, Result};
use crate::scoring::{DocumentVerdict, Label, ScoringConfig};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryReport {
    pub category: Category,
    pub total: usize,
    pub positive: usize,
    pub negative: usize,
    pub neutral: usize,
}

impl CategoryReport {
    fn empty(category: Category) -> Self {
        Self {
            category,
            total: 0,
            positive: 0,
            negative: 0,
            neutral: 0,
        }
    }

    pub fn is_partition(&self) -> bool {
        self.positive + self.negative + self.neutral == self.total
    }

    fn check(&self) -> Result<()> {
        if self.is_partition() {
            Ok(())
        } else {
            Err(Error::BrokenPartition {
                category: self.category.to_string(),
                total: self.total,
                positive: self.positive,
                negative: self.negative,
                neutral: self.neutral,
            })
        }
    }
}

/// Counts labels per category. Every corpus document needs exactly one verdict.
pub fn summarize(verdicts: &[DocumentVerdict], corpus: &Corpus) -> Result<Vec<CategoryReport>> {
    let mut labels: HashMap<&str, Label> = HashMap::with_capacity(verdicts.len());
    for v in verdicts {
        if corpus.get(&v.doc_id).is_none() {
            return Err(Error::UnknownDocument(v.doc_id.clone()));
        }
        if labels.insert(&v.doc_id, v.label).is_some() {
            return Err(Error::DuplicateVerdict(v.doc_id.clone()));
        }
    }
    let mut reports: BTreeMap<&Category, CategoryReport> = BTreeMap::new();
    for doc in &corpus.documents {
        let label = *labels
            .get(doc.id.as_str())
            .ok_or_else(|| Error::MissingVerdict(doc.id.clone()))?;
        let r = reports
            .entry(&doc.category)
            .or_insert_with(|| CategoryReport::empty(doc.category.clone()));
        r.total += 1;
        match label {
            Label::Positive => r.positive += 1,
            Label::Negative => r.negative += 1,
            Label::Neutral => r.neutral += 1,
        }
    }
    Ok(reports.into_values().collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Table,
    Csv,
    Json,
    Svg,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Table => "table",
            Self::Csv => "csv",
            Self::Json => "json",
            Self::Svg => "svg",
        })
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(Self::Table),
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            "svg" => Ok(Self::Svg),
            other => Err(format!("unknown format {other:?} (expected table, csv, json or svg)")),
        }
    }
}

pub const TABLE_HEADINGS: [&str; 5] = ["NEWS CLASS", "TOTAL ARTICLES", "POSITIVE", "NEGATIVE", "NEUTRAL"];

pub fn render(reports: &[CategoryReport], format: Format) -> Result<Vec<u8>> {
    if reports.is_empty() {
        return Err(Error::EmptyReport);
    }
    for r in reports {
        r.check()?;
    }
    match format {
        Format::Table => Ok(render_table(reports).into_bytes()),
        Format::Csv => render_csv(reports),
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(reports)?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Svg => Ok(render_svg(reports).into_bytes()),
    }
}

fn display_name(category: &Category) -> String {
    let mut chars = category.as_str().chars();
    match chars.next() {
        Some(first) => first.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

fn render_table(reports: &[CategoryReport]) -> String {
    let rows: Vec<[String; 5]> = reports
        .iter()
        .map(|r| {
            [
                display_name(&r.category),
                r.total.to_string(),
                r.positive.to_string(),
                r.negative.to_string(),
                r.neutral.to_string(),
            ]
        })
        .collect();
    let mut widths = TABLE_HEADINGS.map(|h| h.chars().count());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::from("SENTIMENT RESULTS\n");
    let mut line = |cells: [&str; 5]| {
        let mut l = format!("{:<w$}", cells[0], w = widths[0]);
        for (cell, w) in cells[1..].iter().zip(&widths[1..]) {
            write!(l, "  {cell:>w$}").unwrap();
        }
        out.push_str(l.trim_end());
        out.push('\n');
    };
    line(TABLE_HEADINGS);
    for row in &rows {
        line([&row[0], &row[1], &row[2], &row[3], &row[4]]);
    }
    out
}

fn render_csv(reports: &[CategoryReport]) -> Result<Vec<u8>> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for r in reports {
        writer.serialize(r)?;
    }
    writer
        .into_inner()
        .map_err(|e| Error::Io(e.into_error()))
}

/// Parses the csv rendering back into reports.
pub fn parse_csv(bytes: &[u8]) -> Result<Vec<CategoryReport>> {
    let mut reader = csv::Reader::from_reader(bytes);
    let reports = reader.deserialize().collect::<Result<Vec<CategoryReport>, _>>()?;
    if reports.iter().any(|r| r.category.as_str().is_empty()) {
        return Err(Error::Csv(csv::Error::from(std::io::Error::new(
            std::io::ErrorKind::InvalidData,
            "empty category name",
        ))));
    }
    Ok(reports)
}

fn xml_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

const BAR_WIDTH: usize = 22;
const GROUP_GAP: usize = 34;
const PLOT_HEIGHT: usize = 260;
const MARGIN_LEFT: usize = 60;
const MARGIN_TOP: usize = 50;
const SERIES: [(&str, &str); 3] = [
    ("positive", "#4e79a7"),
    ("negative", "#e15759"),
    ("neutral", "#bab0ac"),
];

fn nice_ceiling(max: usize) -> usize {
    let max = max.max(1);
    let magnitude = 10usize.pow((max as f64).log10().floor() as u32);
    let step = [1, 2, 5, 10]
        .into_iter()
        .map(|m| m * magnitude)
        .find(|s| max.div_ceil(*s) <= 10)
        .unwrap_or(10 * magnitude);
    max.div_ceil(step) * step
}

/// Grouped bar chart: one group per category, bars for positive, negative and
/// neutral counts.
fn render_svg(reports: &[CategoryReport]) -> String {
    let group_width = 3 * BAR_WIDTH + GROUP_GAP;
    let width = MARGIN_LEFT + reports.len() * group_width + 40;
    let height = MARGIN_TOP + PLOT_HEIGHT + 60;
    let max = reports
        .iter()
        .map(|r| r.positive.max(r.negative).max(r.neutral))
        .max()
        .unwrap_or(0);
    let y_max = nice_ceiling(max);
    let scale = |v: usize| v as f64 * PLOT_HEIGHT as f64 / y_max as f64;
    let baseline = MARGIN_TOP + PLOT_HEIGHT;

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">"#
    )
    .unwrap();
    writeln!(s, r#"  <title>Sentiment per news category</title>"#).unwrap();
    writeln!(s, r#"  <rect width="{width}" height="{height}" fill="white"/>"#).unwrap();

    // y axis with ticks
    let ticks = 5;
    for i in 0..=ticks {
        let v = y_max * i / ticks;
        let y = baseline as f64 - scale(v);
        writeln!(
            s,
            r##"  <line x1="{MARGIN_LEFT}" y1="{y:.1}" x2="{x2}" y2="{y:.1}" stroke="#dddddd"/>"##,
            x2 = width - 20
        )
        .unwrap();
        writeln!(
            s,
            r#"  <text x="{x}" y="{y:.1}" text-anchor="end" dominant-baseline="middle">{v}</text>"#,
            x = MARGIN_LEFT - 6
        )
        .unwrap();
    }

    for (i, r) in reports.iter().enumerate() {
        let x0 = MARGIN_LEFT + GROUP_GAP / 2 + i * group_width;
        let name = xml_escape(r.category.as_str());
        writeln!(s, r#"  <g class="category" data-category="{name}">"#).unwrap();
        for (j, ((series, colour), value)) in SERIES
            .iter()
            .zip([r.positive, r.negative, r.neutral])
            .enumerate()
        {
            let h = scale(value);
            writeln!(
                s,
                r#"    <rect class="{series}" x="{x}" y="{y:.1}" width="{BAR_WIDTH}" height="{h:.1}" fill="{colour}"><title>{name} {series}: {value}</title></rect>"#,
                x = x0 + j * BAR_WIDTH,
                y = baseline as f64 - h,
            )
            .unwrap();
        }
        writeln!(
            s,
            r#"    <text x="{x}" y="{y}" text-anchor="middle">{label}</text>"#,
            x = x0 + 3 * BAR_WIDTH / 2,
            y = baseline + 18,
            label = xml_escape(&display_name(&r.category)),
        )
        .unwrap();
        writeln!(s, "  </g>").unwrap();
    }
    writeln!(
        s,
        r##"  <line x1="{MARGIN_LEFT}" y1="{baseline}" x2="{x2}" y2="{baseline}" stroke="#333333"/>"##,
        x2 = width - 20
    )
    .unwrap();

    // legend
    for (k, (series, colour)) in SERIES.iter().enumerate() {
        let x = MARGIN_LEFT + k * 100;
        writeln!(
            s,
            r#"  <rect x="{x}" y="18" width="12" height="12" fill="{colour}"/><text x="{tx}" y="28">{series}</text>"#,
            tx = x + 18
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

/// Per-category counts reported for the original lexicon-based run over the
/// BBC news corpus: (category, total, positive, negative, neutral).
///
/// The totals add up to 2240, not the 2225 files of the published dataset;
/// the dataset's entertainment folder holds 386 files, not 401.
pub const REPORTED_BBC_COUNTS: [(&str, usize, usize, usize, usize); 5] = [
    ("business", 510, 274, 205, 31),
    ("entertainment", 401, 163, 220, 18),
    ("politics", 417, 205, 200, 12),
    ("sport", 511, 246, 236, 29),
    ("tech", 401, 170, 216, 15),
];

/// Number of files per category in the published BBC dataset.
pub const BBC_DATASET_COUNTS: [(&str, usize); 5] = [
    ("business", 510),
    ("entertainment", 386),
    ("politics", 417),
    ("sport", 511),
    ("tech", 401),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    PositiveLeads,
    NegativeLeads,
}

/// Which side outnumbers the other in the reported results.
pub const REPORTED_DIRECTIONS: [(&str, Direction); 4] = [
    ("business", Direction::PositiveLeads),
    ("sport", Direction::PositiveLeads),
    ("entertainment", Direction::NegativeLeads),
    ("tech", Direction::NegativeLeads),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectionalCheck {
    pub category: String,
    pub expected: Direction,
    pub positive: usize,
    pub negative: usize,
    pub matched: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectionalAgreement {
    pub checks: Vec<DirectionalCheck>,
    pub matched: usize,
    pub evaluated: usize,
    /// e.g. "3 of 4 directional claims matched"
    pub summary: String,
}

/// Compares each run's positive/negative balance with the reported direction,
/// for the categories present in `reports`.
pub fn directional_agreement(reports: &[CategoryReport]) -> DirectionalAgreement {
    let checks: Vec<DirectionalCheck> = REPORTED_DIRECTIONS
        .iter()
        .filter_map(|(name, expected)| {
            let r = reports.iter().find(|r| r.category.as_str() == *name)?;
            let matched = match expected {
                Direction::PositiveLeads => r.positive > r.negative,
                Direction::NegativeLeads => r.negative > r.positive,
            };
            Some(DirectionalCheck {
                category: name.to_string(),
                expected: *expected,
                positive: r.positive,
                negative: r.negative,
                matched,
            })
        })
        .collect();
    let matched = checks.iter().filter(|c| c.matched).count();
    let evaluated = checks.len();
    DirectionalAgreement {
        summary: format!("{matched} of {evaluated} directional claims matched"),
        checks,
        matched,
        evaluated,
    }
}

/// One category's counts next to the reported and published-dataset counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceComparison {
    pub category: String,
    pub observed: CategoryReport,
    pub reported_total: Option<usize>,
    pub dataset_total: Option<usize>,
}

pub fn compare_with_reference(reports: &[CategoryReport]) -> Vec<ReferenceComparison> {
    reports
        .iter()
        .map(|r| {
            let name = r.category.as_str();
            ReferenceComparison {
                category: name.to_string(),
                observed: r.clone(),
                reported_total: REPORTED_BBC_COUNTS
                    .iter()
                    .find(|row| row.0 == name)
                    .map(|row| row.1),
                dataset_total: BBC_DATASET_COUNTS
                    .iter()
                    .find(|row| row.0 == name)
                    .map(|row| row.1),
            }
        })
        .collect()
}

/// Everything needed to repeat a `score-corpus` run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool_version: String,
    pub timestamp: String,
    pub corpus_path: String,
    pub lexicon_path: String,
    /// `None` means the bundled English list.
    pub stopwords_path: Option<String>,
    /// `None` means the bundled WordNet exception lists.
    pub morphology_path: Option<String>,
    pub config: ScoringConfig,
    pub format: Format,
    pub documents: usize,
    pub skipped_files: usize,
    pub lexicon_entries: usize,
    pub lexicon_malformed_lines: usize,
    pub reports: Vec<CategoryReport>,
    pub reference: Vec<ReferenceComparison>,
    pub directional_agreement: DirectionalAgreement,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::Document;

    fn report(cat: &str, t: usize, p: usize, n: usize, u: usize) -> CategoryReport {
        CategoryReport {
            category: Category::new(cat).unwrap(),
            total: t,
            positive: p,
            negative: n,
            neutral: u,
        }
    }

    fn verdict(id: &str, label: Label) -> DocumentVerdict {
        DocumentVerdict {
            doc_id: id.into(),
            score: 0.0,
            label,
            n_opinion_words: 0,
            raw_sum: 0.0,
        }
    }

    fn corpus(ids: &[&str]) -> Corpus {
        Corpus::from_documents(
            ids.iter()
                .map(|id| Document {
                    id: id.to_string(),
                    category: Category::new(id.split('/').next().unwrap()).unwrap(),
                    raw_text: String::new(),
                })
                .collect(),
        )
    }

    #[test]
    fn summarize_counts() {
        let c = corpus(&["business/1", "business/2"]);
        let v = [verdict("business/1", Label::Positive), verdict("business/2", Label::Neutral)];
        assert_eq!(summarize(&v, &c).unwrap(), [report("business", 2, 1, 0, 1)]);
    }

    #[test]
    fn summarize_only_present_categories() {
        let c = corpus(&["tech/1", "sport/1"]);
        let v = [verdict("tech/1", Label::Negative), verdict("sport/1", Label::Positive)];
        let r = summarize(&v, &c).unwrap();
        let names: Vec<_> = r.iter().map(|r| r.category.as_str()).collect();
        assert_eq!(names, ["sport", "tech"]);
    }

    #[test]
    fn summarize_errors() {
        let c = corpus(&["tech/1"]);
        assert!(matches!(
            summarize(&[verdict("tech/2", Label::Positive)], &c),
            Err(Error::UnknownDocument(_))
        ));
        assert!(matches!(summarize(&[], &c), Err(Error::MissingVerdict(_))));
        assert!(matches!(
            summarize(&[verdict("tech/1", Label::Positive), verdict("tech/1", Label::Positive)], &c),
            Err(Error::DuplicateVerdict(_))
        ));
    }

    #[test]
    fn csv_exact_bytes() {
        let out = render(&[report("business", 2, 1, 0, 1)], Format::Csv).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "category,total,positive,negative,neutral\nbusiness,2,1,0,1\n"
        );
    }

    #[test]
    fn csv_quotes_awkward_names() {
        let reports = [report("arts, culture", 1, 1, 0, 0), report("tech", 3, 1, 1, 1)];
        let out = render(&reports, Format::Csv).unwrap();
        assert_eq!(parse_csv(&out).unwrap(), reports);
    }

    #[test]
    fn table_headings() {
        let out = String::from_utf8(render(&[report("business", 2, 1, 0, 1)], Format::Table).unwrap()).unwrap();
        let header = out.lines().nth(1).unwrap();
        let mut rest = header;
        for h in TABLE_HEADINGS {
            let at = rest.find(h).unwrap_or_else(|| panic!("missing {h} in {header:?}"));
            rest = &rest[at + h.len()..];
        }
        assert!(out.lines().nth(2).unwrap().starts_with("Business"));
    }

    #[test]
    fn json_is_an_array() {
        let out = render(&[report("business", 2, 1, 0, 1)], Format::Json).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
        assert_eq!(v[0]["category"], "business");
        assert_eq!(v[0]["neutral"], 1);
    }

    #[test]
    fn svg_is_well_formed() {
        let reports = [report("business", 2, 1, 0, 1), report("<tech & co>", 3, 0, 2, 1)];
        let out = String::from_utf8(render(&reports, Format::Svg).unwrap()).unwrap();
        let doc = roxmltree::Document::parse(&out).unwrap();
        let groups: Vec<_> = doc
            .descendants()
            .filter(|n| n.attribute("class") == Some("category"))
            .collect();
        assert_eq!(groups.len(), 2);
        assert_eq!(groups[1].attribute("data-category"), Some("<tech & co>"));
        for g in groups {
            let bars = g.children().filter(|n| n.has_tag_name("rect")).count();
            assert_eq!(bars, 3);
        }
    }

    #[test]
    fn render_rejects_bad_input() {
        assert!(matches!(render(&[], Format::Csv), Err(Error::EmptyReport)));
        assert!(matches!(
            render(&[report("x", 3, 1, 1, 0)], Format::Table),
            Err(Error::BrokenPartition { .. })
        ));
        assert!("xml".parse::<Format>().is_err());
    }

    #[test]
    fn reported_counts_are_internally_consistent() {
        let total: usize = REPORTED_BBC_COUNTS.iter().map(|r| r.1).sum();
        assert_eq!(total, 2240);
        for (_, t, p, n, u) in REPORTED_BBC_COUNTS {
            assert_eq!(p + n + u, t);
        }
        assert_eq!(BBC_DATASET_COUNTS.iter().map(|r| r.1).sum::<usize>(), 2225);
    }

    #[test]
    fn reported_counts_agree_with_reported_directions() {
        let reports: Vec<_> = REPORTED_BBC_COUNTS
            .iter()
            .map(|&(c, t, p, n, u)| report(c, t, p, n, u))
            .collect();
        let agreement = directional_agreement(&reports);
        assert_eq!((agreement.matched, agreement.evaluated), (4, 4));
        assert_eq!(agreement.summary, "4 of 4 directional claims matched");
    }

    #[test]
    fn directional_agreement_partial() {
        let agreement = directional_agreement(&[report("business", 3, 1, 2, 0), report("politics", 1, 1, 0, 0)]);
        assert_eq!((agreement.matched, agreement.evaluated), (0, 1));
    }

    #[test]
    fn nice_axis() {
        assert_eq!(nice_ceiling(0), 1);
        assert_eq!(nice_ceiling(7), 7);
        assert_eq!(nice_ceiling(274), 300);
        assert_eq!(nice_ceiling(1001), 2000);
    }
}
