//! ROUGE 2.0 style summary evaluation.
//!
//! The crate scores system summaries against reference summaries with the
//! ROUGE-N family plus the topic measures (ROUGE-Topic, ROUGE-TopicUniq).
//! Every measure can be combined with stopword removal and synonym-aware
//! matching:
//!
//! - [`text`]: tokenization, normalization and stopword filtering
//! - [`ngram`]: n-gram extraction, clipped overlap and [`RougeScore`]
//! - [`synonyms`]: synonym dictionaries and maximum-matching overlap
//! - [`topic`]: POS-tagged text, topic filters and the topic measures
//! - [`harness`]: batch evaluation over directories and CSV reports
//! - [`cli`]: the `rouge2` command-line front end
//!
//! ```
//! use rouge2::{score_rouge_n, tokenize, ScoreOptions};
//!
//! let reference = tokenize("The phone is very lightweight. The display is also very bright and clear.");
//! let system = tokenize("Lightweight phone. Bright screen. Screen is very clear.");
//! let score = score_rouge_n(&reference, &system, 1, &ScoreOptions::default()).unwrap();
//! assert_eq!((score.overlap, score.ref_size, score.sys_size), (6, 13, 8));
//! ```

pub mod cli;
pub mod error;
pub mod harness;
pub mod matching;
pub mod ngram;
pub mod options;
pub mod synonyms;
pub mod text;
pub mod topic;

pub use error::{Error, Result};
pub use harness::{
    aggregate, discover_pairs, write_report, Aggregation, Discovery, EvaluationTask, Evaluator,
    Report, ReportRow, SummaryDoc,
};
pub use ngram::{clipped_overlap, extract_ngrams, f_score, score_rouge_n, NGram, NGramBag, RougeScore};
pub use options::{Measure, MeasureConfig, ScoreOptions};
pub use synonyms::{
    build_dictionary, load_dictionary, matching_overlap, synonymous, SynonymDictionary,
    SynsetRecord,
};
pub use text::{load_stopwords, remove_stopwords, tokenize, StopwordSet, Token, TokenizedText};
pub use topic::{
    filter_topics, parse_tagged, score_rouge_topic, score_rouge_topic_uniq, tag_with_lexicon,
    Lexicon, TaggedText, TopicFilter, TopicTokens,
};
