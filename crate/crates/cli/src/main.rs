use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use newsent::report::{compare_with_reference, directional_agreement};
use newsent::{
    load_corpus, render, summarize, Format, IdfMode, Lexicon, MorphologyRules, Pipeline, RunManifest, ScoringConfig,
    SenseMode, StopwordList, TfIdfConfig, TfMode, Weighting,
};

/// Lexicon-based sentiment analysis for news corpora.
#[derive(Debug, Parser)]
#[command(name = "newsent", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Score text read from stdin and print one JSON verdict line.
    ScoreText(ScoreText),
    /// Score every document of a corpus and write a per-category report.
    ScoreCorpus(ScoreCorpus),
}

#[derive(Debug, Args)]
struct Resources {
    /// SentiWordNet 3.0 lexicon file.
    #[arg(long, value_name = "PATH")]
    lexicon: PathBuf,
    /// Stopword list, one word per line (default: bundled English list).
    #[arg(long, value_name = "PATH")]
    stopwords: Option<PathBuf>,
    /// Directory with WordNet noun.exc/verb.exc/adj.exc/adv.exc files
    /// (default: bundled WordNet 3.0 lists).
    #[arg(long, value_name = "DIR")]
    morphology: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Scoring {
    /// Scores within [-epsilon, epsilon] are neutral.
    #[arg(long, default_value_t = 0.0, value_parser = non_negative, allow_hyphen_values = true)]
    epsilon: f64,
    #[arg(long, default_value_t = SenseMode::Rank, value_name = "first|rank|average")]
    sense_mode: SenseMode,
    #[arg(long, default_value_t = Weighting::Tfidf, value_name = "tfidf|uniform")]
    weighting: Weighting,
}

#[derive(Debug, Args)]
struct ScoreText {
    #[command(flatten)]
    resources: Resources,
    #[command(flatten)]
    scoring: Scoring,
}

#[derive(Debug, Args)]
struct ScoreCorpus {
    /// Corpus root laid out as <root>/<category>/<file>.
    #[arg(long, value_name = "DIR")]
    corpus: PathBuf,
    #[command(flatten)]
    resources: Resources,
    #[command(flatten)]
    scoring: Scoring,
    #[arg(long, default_value_t = Format::Table, value_name = "table|csv|json|svg")]
    format: Format,
    /// Report file (default: stdout). The run manifest is written next to it.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Manifest file (default: <out>.manifest.json when --out is given).
    #[arg(long, value_name = "PATH")]
    manifest: Option<PathBuf>,
    /// Ignore terms whose TF-IDF weight is below this.
    #[arg(long, default_value_t = 0.0, value_parser = non_negative, allow_hyphen_values = true)]
    min_weight: f64,
    #[arg(long, default_value_t = TfMode::Relative, value_name = "relative|raw|log")]
    tf_mode: TfMode,
    #[arg(long, default_value_t = IdfMode::Plain, value_name = "plain|smooth")]
    idf_mode: IdfMode,
}

fn non_negative(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if v.is_finite() && v >= 0.0 {
        Ok(v)
    } else {
        Err(format!("{s} must be a finite non-negative number"))
    }
}

fn pipeline(resources: &Resources) -> Result<Pipeline> {
    let lexicon = Lexicon::from_path(&resources.lexicon)?;
    let mut pipeline = Pipeline::new(lexicon);
    if let Some(path) = &resources.stopwords {
        pipeline = pipeline.with_stopwords(StopwordList::from_path(path)?);
    }
    if let Some(dir) = &resources.morphology {
        anyhow::ensure!(dir.is_dir(), "morphology directory {} not found", dir.display());
        pipeline = pipeline.with_morphology(MorphologyRules::from_dir(dir)?);
    }
    Ok(pipeline)
}

fn score_text(args: ScoreText) -> Result<()> {
    let pipeline = pipeline(&args.resources)?;
    let mut text = String::new();
    io::stdin()
        .read_to_string(&mut text)
        .context("cannot read stdin")?;
    let cfg = ScoringConfig {
        epsilon: args.scoring.epsilon,
        weighting: args.scoring.weighting,
        sense_mode: args.scoring.sense_mode,
        ..Default::default()
    };
    let verdict = pipeline.score_text("stdin", &text, &cfg);
    let mut stdout = io::stdout().lock();
    serde_json::to_writer(&mut stdout, &verdict)?;
    writeln!(stdout)?;
    Ok(())
}

fn path_string(p: &Path) -> String {
    p.display().to_string()
}

fn score_corpus(args: ScoreCorpus) -> Result<()> {
    let pipeline = pipeline(&args.resources)?;
    let corpus = load_corpus(&args.corpus)?;
    let cfg = ScoringConfig {
        epsilon: args.scoring.epsilon,
        weighting: args.scoring.weighting,
        sense_mode: args.scoring.sense_mode,
        min_weight: args.min_weight,
        tfidf: TfIdfConfig {
            tf: args.tf_mode,
            idf: args.idf_mode,
        },
    };
    let verdicts = pipeline.score_corpus(&corpus, &cfg)?;
    let reports = summarize(&verdicts, &corpus)?;
    let rendered = render(&reports, args.format)?;

    match &args.out {
        Some(path) => fs::write(path, &rendered).with_context(|| format!("cannot write {}", path.display()))?,
        None => io::stdout().lock().write_all(&rendered)?,
    }

    let manifest_path = args.manifest.clone().or_else(|| {
        args.out.as_ref().map(|out| {
            let mut name = out.as_os_str().to_owned();
            name.push(".manifest.json");
            PathBuf::from(name)
        })
    });
    if let Some(path) = manifest_path {
        let manifest = RunManifest {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            corpus_path: path_string(&args.corpus),
            lexicon_path: path_string(&args.resources.lexicon),
            stopwords_path: args.resources.stopwords.as_deref().map(path_string),
            morphology_path: args.resources.morphology.as_deref().map(path_string),
            config: cfg,
            format: args.format,
            documents: corpus.len(),
            skipped_files: corpus.warnings.len(),
            lexicon_entries: pipeline.lexicon.entries.len(),
            lexicon_malformed_lines: pipeline.lexicon.malformed.len(),
            reference: compare_with_reference(&reports),
            directional_agreement: directional_agreement(&reports),
            reports,
        };
        let mut json = serde_json::to_vec_pretty(&manifest)?;
        json.push(b'\n');
        fs::write(&path, json).with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(())
}

/// clap's multi-line usage errors folded into one line.
fn one_line(err: &clap::Error) -> String {
    let rendered = err.render().to_string();
    let mut parts = Vec::new();
    for line in rendered.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with("For more information") {
            break;
        }
        parts.push(line.to_string());
    }
    parts.join(" ")
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();

    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = err.print();
                return ExitCode::SUCCESS;
            }
            eprintln!("newsent: {}", one_line(&err));
            return ExitCode::from(2);
        }
    };

    let result = match cli.command {
        Command::ScoreText(args) => score_text(args),
        Command::ScoreCorpus(args) => score_corpus(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("newsent: error: {err:#}");
            ExitCode::from(1)
        }
    }
}
