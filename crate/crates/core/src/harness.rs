//! Batch evaluation: summary discovery, multi-reference scoring and CSV reports.
//!
//! Directory layout:
//!
//! ```text
//! systems/<task>_<system>.txt   (or .tag for word_TAG input)
//! references/<task>.<k>.txt     (k = 1, 2, ...)
//! ```
//!
//! N-gram measures prefer `.txt` and topic measures prefer `.tag` when a
//! summary exists in both forms.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ngram::{harmonic_mean, score_rouge_n, RougeScore};
use crate::options::{Measure, MeasureConfig};
use crate::text::{tokenize, TokenizedText};
use crate::topic::{
    filter_topics, parse_tagged, score_rouge_topic, score_rouge_topic_uniq, tag_with_lexicon,
    Lexicon, TaggedText,
};

/// CSV header of [`Report::write_csv`].
pub const REPORT_COLUMNS: [&str; 12] = [
    "task",
    "system",
    "measure",
    "settings",
    "references",
    "aggregation",
    "recall",
    "precision",
    "f_score",
    "recall_full",
    "precision_full",
    "f_score_full",
];

/// One summary, available as plain text, tagged text or both.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SummaryDoc {
    pub plain: Option<TokenizedText>,
    pub tagged: Option<TaggedText>,
}

impl SummaryDoc {
    pub fn plain(text: TokenizedText) -> Self {
        SummaryDoc {
            plain: Some(text),
            tagged: None,
        }
    }

    pub fn tagged(text: TaggedText) -> Self {
        SummaryDoc {
            plain: None,
            tagged: Some(text),
        }
    }

    pub fn from_text(text: &str) -> Self {
        Self::plain(tokenize(text))
    }

    /// Token stream for n-gram measures: the plain text, else the tagged
    /// text with tags dropped.
    pub fn ngram_view(&self) -> TokenizedText {
        match (&self.plain, &self.tagged) {
            (Some(p), _) => p.clone(),
            (None, Some(t)) => t.to_plain(),
            (None, None) => TokenizedText::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluationTask {
    pub task_id: String,
    pub system_id: String,
    pub system: SummaryDoc,
    /// Ordered by reference number.
    pub references: Vec<SummaryDoc>,
}

/// Result of scanning the input directories.
#[derive(Debug, Clone, Default)]
pub struct Discovery {
    pub tasks: Vec<EvaluationTask>,
    /// System files skipped because no reference matched their task.
    pub skipped: Vec<String>,
}

#[derive(Debug, Default)]
struct DocPaths {
    txt: Option<PathBuf>,
    tag: Option<PathBuf>,
}

impl DocPaths {
    fn set(&mut self, ext: Ext, path: PathBuf) {
        match ext {
            Ext::Txt => self.txt = Some(path),
            Ext::Tag => self.tag = Some(path),
        }
    }

    fn load(&self) -> Result<SummaryDoc> {
        let read = |p: &Path| fs::read_to_string(p).map_err(|e| Error::load(p, e));
        let plain = self.txt.as_deref().map(|p| read(p).map(|s| tokenize(&s))).transpose()?;
        let tagged = self
            .tag
            .as_deref()
            .map(|p| {
                read(p).and_then(|s| {
                    parse_tagged(&s).map_err(|e| Error::Config(format!("{}: {e}", p.display())))
                })
            })
            .transpose()?;
        Ok(SummaryDoc { plain, tagged })
    }
}

#[derive(Debug, Clone, Copy)]
enum Ext {
    Txt,
    Tag,
}

/// Regular, non-hidden files of a directory as `(file name, path)`, sorted.
fn list_files(dir: &Path) -> Result<Vec<(String, PathBuf)>> {
    let entries = fs::read_dir(dir).map_err(|e| Error::load(dir, e))?;
    let mut files = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| Error::load(dir, e))?;
        let path = entry.path();
        if !path.is_file() {
            continue;
        }
        let name = entry.file_name().to_string_lossy().into_owned();
        if name.starts_with('.') {
            continue;
        }
        files.push((name, path));
    }
    files.sort();
    Ok(files)
}

fn split_extension(name: &str) -> Option<(&str, Ext)> {
    if let Some(stem) = name.strip_suffix(".txt") {
        Some((stem, Ext::Txt))
    } else {
        name.strip_suffix(".tag").map(|stem| (stem, Ext::Tag))
    }
}

/// Pairs every system summary with the references of its task.
///
/// A system stem `<task>_<system>` is split at the underscore that yields
/// the longest task id with references; without any, it splits at the
/// first underscore and the system is reported as skipped.
pub fn discover_pairs(systems_dir: impl AsRef<Path>, references_dir: impl AsRef<Path>) -> Result<Discovery> {
    let systems_dir = systems_dir.as_ref();
    let references_dir = references_dir.as_ref();
    let mut bad = Vec::new();

    let mut references: BTreeMap<String, BTreeMap<usize, DocPaths>> = BTreeMap::new();
    for (name, path) in list_files(references_dir)? {
        let parsed = split_extension(&name).and_then(|(stem, ext)| {
            let (task, k) = stem.rsplit_once('.')?;
            let k: usize = k.parse().ok().filter(|&k| k >= 1)?;
            (!task.is_empty()).then(|| (task.to_string(), k, ext))
        });
        match parsed {
            Some((task, k, ext)) => references.entry(task).or_default().entry(k).or_default().set(ext, path),
            None => bad.push(path.display().to_string()),
        }
    }

    let mut systems: BTreeMap<(String, String), DocPaths> = BTreeMap::new();
    for (name, path) in list_files(systems_dir)? {
        let parsed = split_extension(&name).and_then(|(stem, ext)| {
            let splits: Vec<(&str, &str)> = stem
                .match_indices('_')
                .map(|(i, _)| (&stem[..i], &stem[i + 1..]))
                .filter(|(task, system)| !task.is_empty() && !system.is_empty())
                .collect();
            let (task, system) = splits
                .iter()
                .rev()
                .find(|(task, _)| references.contains_key(*task))
                .or(splits.first())?;
            Some((task.to_string(), system.to_string(), ext))
        });
        match parsed {
            Some((task, system, ext)) => systems.entry((task, system)).or_default().set(ext, path),
            None => bad.push(path.display().to_string()),
        }
    }

    if !bad.is_empty() {
        return Err(Error::Config(format!(
            "unrecognized summary file names (expected <task>_<system>.txt|tag or <task>.<k>.txt|tag): {}",
            bad.join(", ")
        )));
    }

    let mut discovery = Discovery::default();
    for ((task_id, system_id), paths) in systems {
        let Some(refs) = references.get(&task_id) else {
            discovery.skipped.push(format!(
                "skipped {task_id}_{system_id}: no reference summaries for task `{task_id}`"
            ));
            continue;
        };
        discovery.tasks.push(EvaluationTask {
            system: paths.load()?,
            references: refs.values().map(DocPaths::load).collect::<Result<_>>()?,
            task_id,
            system_id,
        });
    }
    Ok(discovery)
}

/// How per-reference scores of one system summary are combined.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Aggregation {
    /// Mean recall and mean precision; F from those means.
    #[default]
    Mean,
    /// The per-reference score with the best F (then recall, then first).
    Max,
}

impl fmt::Display for Aggregation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Aggregation::Mean => "mean",
            Aggregation::Max => "max",
        })
    }
}

impl FromStr for Aggregation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mean" => Ok(Aggregation::Mean),
            "max" => Ok(Aggregation::Max),
            other => Err(format!("unknown aggregation `{other}` (expected mean or max)")),
        }
    }
}

/// Combines per-reference scores.
///
/// For [`Aggregation::Mean`] the count fields hold sums over the inputs,
/// while recall and precision are the means of the per-reference values.
pub fn aggregate(scores: &[RougeScore], mode: Aggregation) -> Result<RougeScore> {
    let first = scores
        .first()
        .ok_or_else(|| Error::InvalidArgument("cannot aggregate an empty score list".into()))?;
    match mode {
        Aggregation::Mean => {
            let n = scores.len() as f64;
            let recall = scores.iter().map(|s| s.recall).sum::<f64>() / n;
            let precision = scores.iter().map(|s| s.precision).sum::<f64>() / n;
            Ok(RougeScore {
                recall,
                precision,
                f_score: harmonic_mean(precision, recall),
                overlap: scores.iter().map(|s| s.overlap).sum(),
                ref_size: scores.iter().map(|s| s.ref_size).sum(),
                sys_size: scores.iter().map(|s| s.sys_size).sum(),
            })
        }
        Aggregation::Max => {
            let mut best = first;
            for s in &scores[1..] {
                if (s.f_score, s.recall) > (best.f_score, best.recall) {
                    best = s;
                }
            }
            Ok(*best)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub task_id: String,
    pub system_id: String,
    pub measure: String,
    pub settings: String,
    pub references: usize,
    pub aggregation: Aggregation,
    pub score: RougeScore,
}

/// Score of a system against a single reference (1-based).
#[derive(Debug, Clone, PartialEq)]
pub struct DetailRow {
    pub task_id: String,
    pub system_id: String,
    pub measure: String,
    pub settings: String,
    pub reference: usize,
    pub score: RougeScore,
}

/// A task/measure combination that could not be scored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaskError {
    pub task_id: String,
    pub system_id: String,
    pub measure: String,
    pub message: String,
}

impl fmt::Display for TaskError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{} [{}]: {}", self.task_id, self.system_id, self.measure, self.message)
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    pub rows: Vec<ReportRow>,
    pub details: Vec<DetailRow>,
    pub warnings: Vec<String>,
    pub errors: Vec<TaskError>,
}

impl Report {
    /// Whether any task was skipped or failed.
    pub fn has_problems(&self) -> bool {
        !self.warnings.is_empty() || !self.errors.is_empty()
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut csv = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(writer);
        csv.write_record(REPORT_COLUMNS)?;
        for row in &self.rows {
            let s = &row.score;
            csv.write_record([
                row.task_id.as_str(),
                row.system_id.as_str(),
                row.measure.as_str(),
                row.settings.as_str(),
                &row.references.to_string(),
                &row.aggregation.to_string(),
                &format!("{:.3}", s.recall),
                &format!("{:.3}", s.precision),
                &format!("{:.3}", s.f_score),
                &s.recall.to_string(),
                &s.precision.to_string(),
                &s.f_score.to_string(),
            ])?;
        }
        csv.flush().map_err(csv::Error::from)?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("csv output is UTF-8"))
    }
}

pub fn write_report(report: &Report, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|source| Error::Write {
        path: path.to_path_buf(),
        source,
    })?;
    let mut out = BufWriter::new(file);
    report.write_csv(&mut out)?;
    out.flush().map_err(|source| Error::Write {
        path: path.to_path_buf(),
        source,
    })
}

/// Runs configured measures over evaluation tasks.
#[derive(Debug, Clone)]
pub struct Evaluator {
    configs: Vec<MeasureConfig>,
    aggregation: Aggregation,
    tagger: Option<Arc<Lexicon>>,
}

type TaskOutcome = (Vec<ReportRow>, Vec<DetailRow>, Vec<TaskError>);

impl Evaluator {
    pub fn new(configs: Vec<MeasureConfig>, aggregation: Aggregation) -> Result<Self> {
        if configs.is_empty() {
            return Err(Error::Config("no measures configured".into()));
        }
        if configs.iter().any(|c| c.measure == Measure::RougeN(0)) {
            return Err(Error::Config("ROUGE-N needs n >= 1".into()));
        }
        Ok(Evaluator {
            configs,
            aggregation,
            tagger: None,
        })
    }

    /// Tags plain summaries for topic measures when `.tag` input is missing.
    pub fn with_tagger(mut self, lexicon: Arc<Lexicon>) -> Self {
        self.tagger = Some(lexicon);
        self
    }

    pub fn configs(&self) -> &[MeasureConfig] {
        &self.configs
    }

    /// Scores every task against every configured measure.
    ///
    /// Tasks run in parallel; rows come out ordered by task then measure.
    pub fn evaluate(&self, tasks: &[EvaluationTask]) -> Report {
        let outcomes: Vec<TaskOutcome> = tasks.par_iter().map(|t| self.evaluate_task(t)).collect();
        let mut report = Report::default();
        for (rows, details, errors) in outcomes {
            report.rows.extend(rows);
            report.details.extend(details);
            report.errors.extend(errors);
        }
        report
    }

    fn evaluate_task(&self, task: &EvaluationTask) -> TaskOutcome {
        let mut outcome: TaskOutcome = Default::default();
        for config in &self.configs {
            let measure = config.measure.to_string();
            let settings = config.settings();
            let scored = self
                .score_references(task, config)
                .and_then(|per_ref| Ok((aggregate(&per_ref, self.aggregation)?, per_ref)));
            match scored {
                Ok((score, per_ref)) => {
                    outcome.1.extend(per_ref.into_iter().enumerate().map(|(i, score)| DetailRow {
                        task_id: task.task_id.clone(),
                        system_id: task.system_id.clone(),
                        measure: measure.clone(),
                        settings: settings.clone(),
                        reference: i + 1,
                        score,
                    }));
                    outcome.0.push(ReportRow {
                        task_id: task.task_id.clone(),
                        system_id: task.system_id.clone(),
                        measure,
                        settings,
                        references: task.references.len(),
                        aggregation: self.aggregation,
                        score,
                    });
                }
                Err(e) => outcome.2.push(TaskError {
                    task_id: task.task_id.clone(),
                    system_id: task.system_id.clone(),
                    measure: format!("{measure} {settings}"),
                    message: e.to_string(),
                }),
            }
        }
        outcome
    }

    fn score_references(&self, task: &EvaluationTask, config: &MeasureConfig) -> Result<Vec<RougeScore>> {
        if task.references.is_empty() {
            return Err(Error::InvalidArgument("task has no reference summaries".into()));
        }
        let opts = &config.options;
        match &config.measure {
            Measure::RougeN(n) => {
                let system = task.system.ngram_view();
                task.references
                    .iter()
                    .map(|r| score_rouge_n(&r.ngram_view(), &system, *n, opts))
                    .collect()
            }
            Measure::Topic(filter) | Measure::TopicUniq(filter) => {
                let (system, references) = self.tagged_views(task)?;
                let system = filter_topics(&system, filter);
                let uniq = matches!(config.measure, Measure::TopicUniq(_));
                Ok(references
                    .iter()
                    .map(|r| {
                        let r = filter_topics(r, filter);
                        if uniq {
                            score_rouge_topic_uniq(&r, &system, opts)
                        } else {
                            score_rouge_topic(&r, &system, opts)
                        }
                    })
                    .collect())
            }
        }
    }

    // Gold tags when every summary of the task has them; otherwise every
    // summary goes through the lexicon tagger so the task is tagged uniformly.
    fn tagged_views(&self, task: &EvaluationTask) -> Result<(TaggedText, Vec<TaggedText>)> {
        let docs = || std::iter::once(&task.system).chain(&task.references);
        if let Some(tagged) = docs().map(|d| d.tagged.clone()).collect::<Option<Vec<_>>>() {
            let mut tagged = tagged.into_iter();
            let system = tagged.next().expect("system summary present");
            return Ok((system, tagged.collect()));
        }
        let lexicon = self.tagger.as_deref().ok_or_else(|| {
            Error::Config("topic measure needs .tag summaries or a lexicon tagger".into())
        })?;
        let tag = |d: &SummaryDoc| tag_with_lexicon(&d.ngram_view(), lexicon);
        Ok((tag(&task.system), task.references.iter().map(tag).collect()))
    }
}
