//! Measure selection and the feature switches shared by every measure.

use std::fmt;
use std::sync::Arc;

use crate::synonyms::SynonymDictionary;
use crate::text::StopwordSet;
use crate::topic::TopicFilter;

/// Optional features applied on top of a measure. A feature is enabled
/// exactly when its resource is present.
#[derive(Debug, Clone, Default)]
pub struct ScoreOptions {
    pub stopwords: Option<Arc<StopwordSet>>,
    pub synonyms: Option<Arc<SynonymDictionary>>,
}

impl ScoreOptions {
    pub fn with_stopwords(mut self, stopwords: Arc<StopwordSet>) -> Self {
        self.stopwords = Some(stopwords);
        self
    }

    pub fn with_synonyms(mut self, synonyms: Arc<SynonymDictionary>) -> Self {
        self.synonyms = Some(synonyms);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Measure {
    /// ROUGE-N with the given gram order (≥ 1).
    RougeN(usize),
    Topic(TopicFilter),
    TopicUniq(TopicFilter),
}

impl Measure {
    pub fn topic_filter(&self) -> Option<&TopicFilter> {
        match self {
            Measure::RougeN(_) => None,
            Measure::Topic(f) | Measure::TopicUniq(f) => Some(f),
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measure::RougeN(n) => write!(f, "ROUGE-{n}"),
            Measure::Topic(_) => f.write_str("ROUGE-Topic"),
            Measure::TopicUniq(_) => f.write_str("ROUGE-TopicUniq"),
        }
    }
}

/// One configured measure of an evaluation run.
#[derive(Debug, Clone)]
pub struct MeasureConfig {
    pub measure: Measure,
    pub options: ScoreOptions,
}

impl MeasureConfig {
    pub fn new(measure: Measure, options: ScoreOptions) -> Self {
        MeasureConfig { measure, options }
    }

    /// Modifier list for report output, e.g. `pos=NN|JJ+StopWordRemoval+Synonyms`,
    /// or `none`.
    pub fn settings(&self) -> String {
        let mut parts = Vec::new();
        if let Some(filter) = self.measure.topic_filter() {
            parts.push(format!("pos={filter}"));
        }
        if self.options.stopwords.is_some() {
            parts.push("StopWordRemoval".to_string());
        }
        if self.options.synonyms.is_some() {
            parts.push("Synonyms".to_string());
        }
        if parts.is_empty() {
            "none".to_string()
        } else {
            parts.join("+")
        }
    }
}
