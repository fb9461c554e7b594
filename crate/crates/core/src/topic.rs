//! POS-tagged text, topic filters and the ROUGE-Topic measures.
//!
//! A topic is every token whose POS tag starts with one of the filter's
//! options, so `NN` admits `NN`, `NNS`, `NNP` and `NNPS` while `VBD` admits
//! only `VBD`. ROUGE-Topic counts overlap over the topic token multisets;
//! ROUGE-TopicUniq over the sets of distinct topic words.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::ngram::{score_bags, NGramBag, RougeScore};
use crate::options::ScoreOptions;
use crate::text::{normalize_word, split_words, StopwordSet, Token, TokenizedText};

pub const DEFAULT_TAG: &str = "NN";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedToken {
    pub token: Token,
    pub pos: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TaggedText {
    sentences: Vec<Vec<TaggedToken>>,
}

impl TaggedText {
    pub fn sentences(&self) -> &[Vec<TaggedToken>] {
        &self.sentences
    }

    pub fn tokens(&self) -> impl Iterator<Item = &TaggedToken> {
        self.sentences.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.sentences.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The underlying token sequence without tags.
    pub fn to_plain(&self) -> TokenizedText {
        TokenizedText::from_sentences(
            self.sentences
                .iter()
                .map(|s| s.iter().map(|t| t.token.clone()).collect())
                .collect(),
        )
    }

    pub fn without_stopwords(&self, stopwords: &StopwordSet) -> TaggedText {
        let sentences = self
            .sentences
            .iter()
            .map(|sentence| {
                sentence
                    .iter()
                    .filter(|t| !stopwords.contains(&t.token.normalized))
                    .enumerate()
                    .map(|(position, t)| {
                        let mut t = t.clone();
                        t.token.position = position;
                        t
                    })
                    .collect()
            })
            .collect();
        TaggedText { sentences }
    }
}

/// Parses whitespace-separated `word_TAG` tokens, one sentence per line.
///
/// The tag follows the last `_`. Words are normalized like plain text;
/// tokens that normalize to nothing (punctuation) are dropped with their
/// tags, and a word that splits into several tokens tags each of them.
pub fn parse_tagged(text: &str) -> Result<TaggedText> {
    let mut sentences = Vec::new();
    let mut token_index = 0;
    for (line_idx, line) in text.lines().enumerate() {
        let mut sentence = Vec::new();
        for raw in line.split_whitespace() {
            let bad = || Error::Tagged {
                line: line_idx + 1,
                token_index,
                token: raw.to_string(),
            };
            let (word, tag) = raw.rsplit_once('_').ok_or_else(bad)?;
            if word.is_empty() || tag.is_empty() {
                return Err(bad());
            }
            for (surface, normalized) in split_words(word) {
                sentence.push(TaggedToken {
                    token: Token {
                        surface,
                        normalized,
                        sentence_index: sentences.len(),
                        position: sentence.len(),
                    },
                    pos: tag.to_string(),
                });
            }
            token_index += 1;
        }
        if !sentence.is_empty() {
            sentences.push(sentence);
        }
    }
    Ok(TaggedText { sentences })
}

/// Word-to-tag lookup table with a fallback tag for unknown words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexicon {
    tags: HashMap<String, String>,
    default_tag: String,
}

impl Default for Lexicon {
    fn default() -> Self {
        Lexicon::new(DEFAULT_TAG)
    }
}

impl Lexicon {
    pub fn new(default_tag: impl Into<String>) -> Self {
        Lexicon {
            tags: HashMap::new(),
            default_tag: default_tag.into(),
        }
    }

    /// Later insertions override earlier ones.
    pub fn insert(&mut self, word: &str, tag: impl Into<String>) {
        if let Some(word) = normalize_word(word) {
            self.tags.insert(word, tag.into());
        }
    }

    pub fn tag(&self, normalized: &str) -> &str {
        self.tags.get(normalized).map_or(&self.default_tag, String::as_str)
    }

    pub fn default_tag(&self) -> &str {
        &self.default_tag
    }

    pub fn len(&self) -> usize {
        self.tags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tags.is_empty()
    }

    /// Parses `word<TAB>TAG` lines. Entries that are not a single word are
    /// skipped since no token can match them.
    pub fn parse(contents: &str, source_name: &str, default_tag: &str) -> Result<Self> {
        let mut lexicon = Lexicon::new(default_tag);
        for (idx, raw) in contents.lines().enumerate() {
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let (word, tag) = line
                .split_once('\t')
                .map(|(w, t)| (w.trim(), t.trim()))
                .filter(|(_, t)| !t.is_empty() && !t.contains(char::is_whitespace))
                .ok_or_else(|| Error::parse(source_name, idx + 1, "expected `word<TAB>TAG`"))?;
            lexicon.insert(word, tag);
        }
        Ok(lexicon)
    }

    pub fn load(path: impl AsRef<Path>, default_tag: &str) -> Result<Self> {
        let path = path.as_ref();
        let contents = fs::read_to_string(path).map_err(|e| Error::load(path, e))?;
        Self::parse(&contents, &path.display().to_string(), default_tag)
    }
}

/// Tags every token by exact lookup of its normalized form.
pub fn tag_with_lexicon(text: &TokenizedText, lexicon: &Lexicon) -> TaggedText {
    TaggedText {
        sentences: text
            .sentences()
            .iter()
            .map(|s| {
                s.iter()
                    .map(|t| TaggedToken {
                        pos: lexicon.tag(&t.normalized).to_string(),
                        token: t.clone(),
                    })
                    .collect()
            })
            .collect(),
    }
}

/// Non-empty list of POS tag prefixes, combined by union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopicFilter {
    options: Vec<String>,
}

impl TopicFilter {
    pub fn new<I>(options: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: AsRef<str>,
    {
        let mut out: Vec<String> = Vec::new();
        for opt in options {
            let opt = opt.as_ref().trim();
            if opt.is_empty() || opt.contains(char::is_whitespace) {
                return Err(Error::InvalidArgument(format!("invalid POS option `{opt}`")));
            }
            let opt = opt.to_uppercase();
            if !out.contains(&opt) {
                out.push(opt);
            }
        }
        if out.is_empty() {
            return Err(Error::InvalidArgument("topic filter needs at least one POS option".into()));
        }
        Ok(TopicFilter { options: out })
    }

    /// Parses a comma- or pipe-separated list such as `NN,JJ` or `NN|JJ`.
    pub fn parse(list: &str) -> Result<Self> {
        Self::new(list.split([',', '|']))
    }

    pub fn options(&self) -> &[String] {
        &self.options
    }

    pub fn matches(&self, tag: &str) -> bool {
        let tag = tag.to_uppercase();
        self.options.iter().any(|o| tag.starts_with(o.as_str()))
    }
}

impl fmt::Display for TopicFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.options.join("|"))
    }
}

/// Topic words of one summary, in order, with their distinct set.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TopicTokens {
    tokens: Vec<String>,
    unique: BTreeSet<String>,
}

impl TopicTokens {
    pub fn new(tokens: Vec<String>) -> Self {
        let unique = tokens.iter().cloned().collect();
        TopicTokens { tokens, unique }
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn unique(&self) -> &BTreeSet<String> {
        &self.unique
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    fn without_stopwords(&self, stopwords: &StopwordSet) -> TopicTokens {
        TopicTokens::new(
            self.tokens
                .iter()
                .filter(|w| !stopwords.contains(w))
                .cloned()
                .collect(),
        )
    }
}

pub fn filter_topics(text: &TaggedText, filter: &TopicFilter) -> TopicTokens {
    TopicTokens::new(
        text.tokens()
            .filter(|t| filter.matches(&t.pos))
            .map(|t| t.token.normalized.clone())
            .collect(),
    )
}

fn apply_stopwords(reference: &TopicTokens, system: &TopicTokens, opts: &ScoreOptions) -> (TopicTokens, TopicTokens) {
    match opts.stopwords.as_deref() {
        Some(stop) => (reference.without_stopwords(stop), system.without_stopwords(stop)),
        None => (reference.clone(), system.clone()),
    }
}

/// ROUGE-Topic: overlap of topic token multisets.
pub fn score_rouge_topic(reference: &TopicTokens, system: &TopicTokens, opts: &ScoreOptions) -> RougeScore {
    let (reference, system) = apply_stopwords(reference, system, opts);
    score_bags(
        &NGramBag::unigrams(reference.tokens),
        &NGramBag::unigrams(system.tokens),
        opts,
    )
}

/// ROUGE-TopicUniq: overlap of the distinct topic word sets.
pub fn score_rouge_topic_uniq(reference: &TopicTokens, system: &TopicTokens, opts: &ScoreOptions) -> RougeScore {
    let (reference, system) = apply_stopwords(reference, system, opts);
    score_bags(
        &NGramBag::unigrams(reference.unique),
        &NGramBag::unigrams(system.unique),
        opts,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synonyms::SynonymDictionary;
    use crate::text::tokenize;
    use std::sync::Arc;

    fn topics(words: &[&str]) -> TopicTokens {
        TopicTokens::new(words.iter().map(|w| w.to_string()).collect())
    }

    fn synonyms() -> ScoreOptions {
        let mut d = SynonymDictionary::new();
        d.insert_pair("display", "screen");
        ScoreOptions::default().with_synonyms(Arc::new(d))
    }

    const REF_TAGS: &str = "The_DT phone_NN is_VBZ very_RB lightweight_JJ ._.\n\
                            The_DT display_NN is_VBZ also_RB very_RB bright_JJ and_CC clear_JJ ._.\n";

    #[test]
    fn parse_simple_line() {
        let t = parse_tagged("the_DT phone_NN is_VBZ very_RB lightweight_JJ").unwrap();
        assert_eq!(t.len(), 5);
        assert_eq!(t.sentences()[0][4].pos, "JJ");
        assert_eq!(t.sentences()[0][4].token.normalized, "lightweight");
        assert!(parse_tagged("").unwrap().is_empty());
    }

    #[test]
    fn parse_drops_punctuation_and_splits_on_last_underscore() {
        let t = parse_tagged("superb_JJ ,_, my_PRP$ New_York_NNP ._.").unwrap();
        let words: Vec<_> = t.tokens().map(|t| (t.token.normalized.as_str(), t.pos.as_str())).collect();
        assert_eq!(words, [("superb", "JJ"), ("my", "PRP$"), ("new", "NNP"), ("york", "NNP")]);
    }

    #[test]
    fn parse_errors_report_token_index() {
        let err = parse_tagged("good_JJ\nphone_NN bad").unwrap_err();
        match err {
            Error::Tagged { line, token_index, ref token } => {
                assert_eq!((line, token_index, token.as_str()), (2, 2, "bad"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_tagged("word_").is_err());
        assert!(parse_tagged("_NN").is_err());
    }

    #[test]
    fn lexicon_lookup_and_fallback() {
        let mut lex = Lexicon::default();
        lex.insert("bright", "JJ");
        let tagged = tag_with_lexicon(&tokenize("Bright zzzz"), &lex);
        let tags: Vec<_> = tagged.tokens().map(|t| t.pos.as_str()).collect();
        assert_eq!(tags, ["JJ", "NN"]);
        assert_eq!(tagged.to_plain(), tokenize("Bright zzzz"));
    }

    #[test]
    fn lexicon_parse_overrides() {
        let lex = Lexicon::parse("bright\tNN\nbright\tJJ\n# x\n", "lex", "XX").unwrap();
        assert_eq!(lex.tag("bright"), "JJ");
        assert_eq!(lex.tag("other"), "XX");
        assert!(Lexicon::parse("bright JJ\n", "lex", "NN").is_err());
    }

    #[test]
    fn filter_prefix_semantics() {
        let nn = TopicFilter::parse("NN").unwrap();
        assert!(nn.matches("NN") && nn.matches("NNS") && nn.matches("NNP") && nn.matches("NNPS"));
        assert!(!nn.matches("JJ"));
        let vbd = TopicFilter::parse("VBD").unwrap();
        assert!(vbd.matches("VBD") && !vbd.matches("VBZ") && !vbd.matches("VB"));
        let nnp = TopicFilter::parse("nnp").unwrap();
        assert!(nnp.matches("NNPS") && !nnp.matches("NN"));
    }

    #[test]
    fn filter_parse_rules() {
        assert_eq!(TopicFilter::parse("NN,JJ").unwrap(), TopicFilter::parse("NN|JJ").unwrap());
        assert_eq!(TopicFilter::parse("NN,JJ,NN").unwrap().options().len(), 2);
        assert!(TopicFilter::parse("").is_err());
        assert!(TopicFilter::parse("NN,,JJ").is_err());
        assert!(TopicFilter::new(Vec::<String>::new()).is_err());
    }

    #[test]
    fn reference_topics() {
        let t = parse_tagged(REF_TAGS).unwrap();
        let topics = filter_topics(&t, &TopicFilter::parse("NN,JJ").unwrap());
        assert_eq!(topics.tokens(), ["phone", "lightweight", "display", "bright", "clear"]);
        assert_eq!(topics.unique().len(), 5);
        assert!(filter_topics(&t, &TopicFilter::parse("ZZ").unwrap()).is_empty());
    }

    #[test]
    fn topic_scores_short_system() {
        let r = topics(&["phone", "lightweight", "display", "bright", "clear"]);
        let s = topics(&["lightweight", "phone", "bright", "screen", "screen", "clear"]);
        let plain = ScoreOptions::default();

        let t = score_rouge_topic(&r, &s, &plain);
        assert_eq!((t.overlap, t.ref_size, t.sys_size), (4, 5, 6));
        let t = score_rouge_topic(&r, &s, &synonyms());
        assert_eq!((t.overlap, t.ref_size, t.sys_size), (5, 5, 6));
        let u = score_rouge_topic_uniq(&r, &s, &plain);
        assert_eq!((u.overlap, u.ref_size, u.sys_size), (4, 5, 5));
        let u = score_rouge_topic_uniq(&r, &s, &synonyms());
        assert_eq!((u.recall, u.precision, u.f_score), (1.0, 1.0, 1.0));
    }

    #[test]
    fn identical_topics_score_one() {
        let r = topics(&["phone", "phone", "screen"]);
        let s = score_rouge_topic(&r, &r, &ScoreOptions::default());
        assert_eq!((s.recall, s.precision, s.f_score), (1.0, 1.0, 1.0));
    }

    #[test]
    fn stopwords_apply_to_topics() {
        let r = topics(&["phone", "thing"]);
        let s = topics(&["phone"]);
        let opts = ScoreOptions::default().with_stopwords(Arc::new(StopwordSet::from_words(["thing"])));
        let score = score_rouge_topic(&r, &s, &opts);
        assert_eq!((score.recall, score.precision), (1.0, 1.0));
    }

    #[test]
    fn tagged_stopword_removal_reindexes() {
        let t = parse_tagged(REF_TAGS).unwrap();
        let f = t.without_stopwords(&StopwordSet::reference());
        assert_eq!(f.len(), 5);
        assert_eq!(f.sentences()[1][0].token.normalized, "display");
        assert_eq!(f.sentences()[1][0].token.position, 0);
    }
}
