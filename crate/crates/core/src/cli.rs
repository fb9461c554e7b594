//! The `rouge2` command line.
//!
//! Exit status: 0 on success, 1 on a usage or configuration error, 2 when
//! the run completed but some tasks were skipped or failed. The report goes
//! to standard output (or `--output`); diagnostics go to standard error.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;
use std::sync::Arc;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};

use crate::error::{Error, Result};
use crate::harness::{discover_pairs, write_report, Aggregation, Evaluator};
use crate::options::{Measure, MeasureConfig, ScoreOptions};
use crate::synonyms::load_dictionary;
use crate::text::{load_stopwords, StopwordSet};
use crate::topic::{Lexicon, TopicFilter, DEFAULT_TAG};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 1;
pub const EXIT_TASK_ERRORS: i32 = 2;

/// A `--metric` value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricSpec {
    RougeN(usize),
    Topic,
    TopicUniq,
}

impl std::str::FromStr for MetricSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rouge1" => Ok(MetricSpec::RougeN(1)),
            "rouge2" => Ok(MetricSpec::RougeN(2)),
            "topic" => Ok(MetricSpec::Topic),
            "topicUniq" => Ok(MetricSpec::TopicUniq),
            other => match other.strip_prefix("rougeN:").map(str::parse::<usize>) {
                Some(Ok(n)) if n >= 1 => Ok(MetricSpec::RougeN(n)),
                Some(_) => Err(format!("`{other}`: n must be a positive integer")),
                None => Err(format!(
                    "unknown metric `{other}` (expected rouge1, rouge2, rougeN:<n>, topic or topicUniq)"
                )),
            },
        }
    }
}

fn parse_pos(s: &str) -> Result<TopicFilter, String> {
    TopicFilter::parse(s).map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "rouge2", version, about = "ROUGE-N, ROUGE-Topic and ROUGE-TopicUniq summary evaluation")]
struct Args {
    /// Directory of system summaries named <task>_<system>.txt|tag
    #[arg(long, value_name = "DIR")]
    systems: PathBuf,

    /// Directory of reference summaries named <task>.<k>.txt|tag
    #[arg(long, value_name = "DIR")]
    references: PathBuf,

    /// rouge1, rouge2, rougeN:<n>, topic or topicUniq (repeatable)
    #[arg(long = "metric", value_name = "METRIC", required = true)]
    metrics: Vec<MetricSpec>,

    /// POS tag prefixes for topic metrics, e.g. NN,JJ or NN|JJ
    #[arg(long, value_name = "LIST", value_parser = parse_pos)]
    pos: Option<TopicFilter>,

    /// Synonym dictionary; enables synonym matching
    #[arg(long, value_name = "FILE")]
    synonyms: Option<PathBuf>,

    /// Stopword list used by --remove-stopwords (default: bundled list)
    #[arg(long, value_name = "FILE")]
    stopwords: Option<PathBuf>,

    /// Remove stopwords before scoring
    #[arg(long)]
    remove_stopwords: bool,

    /// word<TAB>TAG lexicon for tagging plain summaries in topic metrics
    #[arg(long, value_name = "FILE")]
    lexicon: Option<PathBuf>,

    /// Tag for words missing from the lexicon
    #[arg(long, value_name = "TAG", default_value = DEFAULT_TAG)]
    default_tag: String,

    /// Multi-reference aggregation: mean or max
    #[arg(long, value_name = "MODE", default_value = "mean")]
    aggregate: Aggregation,

    /// Write the CSV report here instead of standard output
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
}

/// Validated command-line configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub systems_dir: PathBuf,
    pub references_dir: PathBuf,
    pub metrics: Vec<MetricSpec>,
    pub pos: Option<TopicFilter>,
    pub synonym_path: Option<PathBuf>,
    pub stopword_path: Option<PathBuf>,
    pub remove_stopwords: bool,
    pub lexicon_path: Option<PathBuf>,
    pub default_tag: String,
    pub aggregation: Aggregation,
    pub output_path: Option<PathBuf>,
}

impl CliConfig {
    pub fn synonyms_enabled(&self) -> bool {
        self.synonym_path.is_some()
    }
}

/// Parses `argv` (including the program name).
///
/// Help and version requests come back as errors of kind `DisplayHelp` /
/// `DisplayVersion`, as with clap.
pub fn parse_args<I, T>(argv: I) -> Result<CliConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = Args::try_parse_from(argv)?;
    let needs_pos = args
        .metrics
        .iter()
        .any(|m| matches!(m, MetricSpec::Topic | MetricSpec::TopicUniq));
    if needs_pos && args.pos.is_none() {
        return Err(Args::command().error(
            ErrorKind::MissingRequiredArgument,
            "topic metrics require --pos <LIST>",
        ));
    }
    if args.default_tag.trim().is_empty() {
        return Err(Args::command().error(ErrorKind::InvalidValue, "--default-tag must not be empty"));
    }
    Ok(CliConfig {
        systems_dir: args.systems,
        references_dir: args.references,
        metrics: args.metrics,
        pos: args.pos,
        synonym_path: args.synonyms,
        stopword_path: args.stopwords,
        remove_stopwords: args.remove_stopwords,
        lexicon_path: args.lexicon,
        default_tag: args.default_tag,
        aggregation: args.aggregate,
        output_path: args.output,
    })
}

/// Builds the measure list from a config, loading its resources.
pub fn measure_configs(config: &CliConfig) -> Result<Vec<MeasureConfig>> {
    let mut options = ScoreOptions::default();
    if config.remove_stopwords {
        let stopwords = match &config.stopword_path {
            Some(path) => load_stopwords(path)?,
            None => StopwordSet::reference(),
        };
        options = options.with_stopwords(Arc::new(stopwords));
    }
    if let Some(path) = &config.synonym_path {
        options = options.with_synonyms(Arc::new(load_dictionary(path)?));
    }
    config
        .metrics
        .iter()
        .map(|m| {
            let measure = match m {
                MetricSpec::RougeN(n) => Measure::RougeN(*n),
                MetricSpec::Topic | MetricSpec::TopicUniq => {
                    let filter = config
                        .pos
                        .clone()
                        .ok_or_else(|| Error::Config("topic metrics require --pos".into()))?;
                    if *m == MetricSpec::Topic {
                        Measure::Topic(filter)
                    } else {
                        Measure::TopicUniq(filter)
                    }
                }
            };
            Ok(MeasureConfig::new(measure, options.clone()))
        })
        .collect()
}

fn execute(config: &CliConfig) -> Result<i32> {
    for (flag, dir) in [("--systems", &config.systems_dir), ("--references", &config.references_dir)] {
        if !dir.is_dir() {
            return Err(Error::Config(format!("{flag}: {} is not a directory", dir.display())));
        }
    }
    if config.stopword_path.is_some() && !config.remove_stopwords {
        eprintln!("warning: --stopwords has no effect without --remove-stopwords");
    }

    let mut evaluator = Evaluator::new(measure_configs(config)?, config.aggregation)?;
    if let Some(path) = &config.lexicon_path {
        evaluator = evaluator.with_tagger(Arc::new(Lexicon::load(path, &config.default_tag)?));
    }

    let discovery = discover_pairs(&config.systems_dir, &config.references_dir)?;
    let mut report = evaluator.evaluate(&discovery.tasks);
    report.warnings.extend(discovery.skipped);

    for warning in &report.warnings {
        eprintln!("warning: {warning}");
    }
    for error in &report.errors {
        eprintln!("error: {error}");
    }

    match &config.output_path {
        Some(path) => write_report(&report, path)?,
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            report.write_csv(&mut lock)?;
            lock.flush().map_err(|source| Error::Write {
                path: "<stdout>".into(),
                source,
            })?;
        }
    }

    Ok(if report.has_problems() { EXIT_TASK_ERRORS } else { EXIT_OK })
}

/// Runs the tool and returns its exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match parse_args(argv) {
        Ok(config) => config,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return EXIT_OK;
        }
        Err(e) => {
            eprint!("{}", e.render());
            return EXIT_CONFIG;
        }
    };
    match execute(&config) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_CONFIG
        }
    }
}
