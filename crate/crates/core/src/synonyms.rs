//! Synonym dictionaries and synonym-aware overlap.
//!
//! Two words are synonymous when they are equal or either one lists the
//! other in the dictionary. The relation is one hop only: `a~b` and `b~c`
//! do not make `a~c`.
//!
//! Overlap under synonymy is the size of a maximum bipartite matching
//! between reference and system gram instances, so every instance is
//! consumed at most once.
//!
//! Dictionary file format, one entry per line:
//!
//! ```text
//! # comment
//! display<TAB>screen,monitor
//! ```
//!
//! Synset record format, one record per line:
//!
//! ```text
//! noun|display:12,screen:8|hypernym=surface:2;hyponym=touchscreen:5
//! verb|run:20|troponym=sprint:4,jog:6;hypernym=travel:9
//! adjective|bright:9|satellite=luminous:0
//! ```
//!
//! The third field holds `kind=lemma,...` groups separated by `;`; each
//! group is one related synset and a kind may repeat. Valid kinds are
//! `hyponym`/`hypernym` for nouns, `troponym`/`hypernym` for verbs and
//! `satellite` for adjectives.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matching::BipartiteGraph;
use crate::ngram::{NGram, NGramBag};
use crate::text::normalize_word;

/// Relation-derived noun and verb synonyms need a tag count above this.
pub const MIN_TAG_COUNT_EXCLUSIVE: u32 = 3;

static NO_SYNONYMS: BTreeSet<String> = BTreeSet::new();

/// Headword to synonym-set map. Words are stored normalized.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SynonymDictionary {
    entries: BTreeMap<String, BTreeSet<String>>,
}

impl SynonymDictionary {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `synonyms` to the entry for `headword`, creating it if needed.
    ///
    /// Words are normalized; anything that is not a single word is skipped,
    /// as is the headword itself.
    pub fn insert<I>(&mut self, headword: &str, synonyms: I)
    where
        I: IntoIterator,
        I::Item: AsRef<str>,
    {
        let Some(head) = normalize_word(headword) else {
            return;
        };
        let set = self.entries.entry(head.clone()).or_default();
        set.extend(
            synonyms
                .into_iter()
                .filter_map(|s| normalize_word(s.as_ref()))
                .filter(|s| *s != head),
        );
    }

    /// Symmetric pair insertion: `a` lists `b` and `b` lists `a`.
    pub fn insert_pair(&mut self, a: &str, b: &str) {
        self.insert(a, [b]);
        self.insert(b, [a]);
    }

    /// Synonyms listed for `word`; empty when the word is absent.
    pub fn lookup(&self, word: &str) -> &BTreeSet<String> {
        self.entries.get(word).unwrap_or(&NO_SYNONYMS)
    }

    pub fn headwords(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &BTreeSet<String>)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entrywise inclusion: every synonym listed here is also listed in `other`.
    pub fn is_subset_of(&self, other: &SynonymDictionary) -> bool {
        self.entries
            .iter()
            .all(|(head, syns)| syns.is_subset(other.lookup(head)))
    }

    /// Parses the tab-separated dictionary format. Duplicate headwords merge.
    pub fn parse(contents: &str, source_name: &str) -> Result<Self> {
        let mut dict = SynonymDictionary::new();
        for (idx, raw) in contents.lines().enumerate() {
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let (head, rest) = line
                .split_once('\t')
                .ok_or_else(|| Error::parse(source_name, idx + 1, "expected `headword<TAB>synonyms`"))?;
            if normalize_word(head).is_none() {
                return Err(Error::parse(
                    source_name,
                    idx + 1,
                    format!("headword `{}` is not a single word", head.trim()),
                ));
            }
            dict.insert(head, rest.split(',').map(str::trim).filter(|s| !s.is_empty()));
        }
        Ok(dict)
    }
}

/// Writes the dictionary in its file format, entries sorted by headword.
impl fmt::Display for SynonymDictionary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (head, syns) in &self.entries {
            let joined: Vec<&str> = syns.iter().map(String::as_str).collect();
            writeln!(f, "{head}\t{}", joined.join(","))?;
        }
        Ok(())
    }
}

pub fn load_dictionary(path: impl AsRef<Path>) -> Result<SynonymDictionary> {
    let path = path.as_ref();
    let contents = fs::read_to_string(path).map_err(|e| Error::load(path, e))?;
    SynonymDictionary::parse(&contents, &path.display().to_string())
}

/// `a == b`, or either word lists the other.
pub fn synonymous(a: &str, b: &str, dict: &SynonymDictionary) -> bool {
    a == b || dict.lookup(a).contains(b) || dict.lookup(b).contains(a)
}

fn grams_match(a: &NGram, b: &NGram, dict: &SynonymDictionary) -> bool {
    a.order() == b.order()
        && a
            .words()
            .iter()
            .zip(b.words())
            .all(|(x, y)| synonymous(x, y, dict))
}

/// Maximum matching between gram instances where grams match position-wise
/// under [`synonymous`].
pub fn matching_overlap(
    ref_grams: &NGramBag,
    sys_grams: &NGramBag,
    dict: &SynonymDictionary,
) -> Result<usize> {
    ref_grams.check_same_order(sys_grams)?;
    Ok(matching_count(ref_grams, sys_grams, dict))
}

pub(crate) fn matching_count(ref_grams: &NGramBag, sys_grams: &NGramBag, dict: &SynonymDictionary) -> usize {
    // Instance ranges per distinct gram.
    let expand = |bag: &NGramBag| {
        let mut next = 0;
        bag.iter()
            .map(|(gram, count)| {
                let range = next..next + count;
                next += count;
                (gram.clone(), range)
            })
            .collect::<Vec<_>>()
    };
    let ref_instances = expand(ref_grams);
    let sys_instances = expand(sys_grams);

    let mut graph = BipartiteGraph::new(ref_grams.total(), sys_grams.total());
    for (rg, r_range) in &ref_instances {
        for (sg, s_range) in &sys_instances {
            if grams_match(rg, sg, dict) {
                for l in r_range.clone() {
                    for r in s_range.clone() {
                        graph.add_edge(l, r);
                    }
                }
            }
        }
    }
    graph.maximum_matching()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SynsetPos {
    Noun,
    Verb,
    Adjective,
}

impl SynsetPos {
    fn allows(self, kind: RelationKind) -> bool {
        use RelationKind::*;
        match self {
            SynsetPos::Noun => matches!(kind, Hyponym | Hypernym),
            SynsetPos::Verb => matches!(kind, Troponym | Hypernym),
            SynsetPos::Adjective => matches!(kind, Satellite),
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            SynsetPos::Noun => "noun",
            SynsetPos::Verb => "verb",
            SynsetPos::Adjective => "adjective",
        }
    }
}

impl FromStr for SynsetPos {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "noun" => Ok(SynsetPos::Noun),
            "verb" => Ok(SynsetPos::Verb),
            "adjective" => Ok(SynsetPos::Adjective),
            other => Err(format!("unknown part of speech `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationKind {
    Hyponym,
    Hypernym,
    Troponym,
    Satellite,
}

impl RelationKind {
    fn as_str(self) -> &'static str {
        match self {
            RelationKind::Hyponym => "hyponym",
            RelationKind::Hypernym => "hypernym",
            RelationKind::Troponym => "troponym",
            RelationKind::Satellite => "satellite",
        }
    }
}

impl FromStr for RelationKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "hyponym" => Ok(RelationKind::Hyponym),
            "hypernym" => Ok(RelationKind::Hypernym),
            "troponym" => Ok(RelationKind::Troponym),
            "satellite" => Ok(RelationKind::Satellite),
            other => Err(format!("unknown relation kind `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma {
    pub word: String,
    pub tag_count: u32,
}

impl Lemma {
    pub fn new(word: impl Into<String>, tag_count: u32) -> Self {
        Lemma {
            word: word.into(),
            tag_count,
        }
    }
}

/// One synset with the related synsets used for dictionary construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynsetRecord {
    pub pos: SynsetPos,
    pub lemmas: Vec<Lemma>,
    /// Each entry of a relation list is one related synset's lemmas.
    pub relations: BTreeMap<RelationKind, Vec<Vec<Lemma>>>,
}

impl SynsetRecord {
    pub fn new(pos: SynsetPos, lemmas: Vec<Lemma>) -> Self {
        SynsetRecord {
            pos,
            lemmas,
            relations: BTreeMap::new(),
        }
    }

    pub fn with_relation(mut self, kind: RelationKind, lemmas: Vec<Lemma>) -> Self {
        self.relations.entry(kind).or_default().push(lemmas);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.lemmas.is_empty() {
            return Err(Error::Validation("record has no lemmas".into()));
        }
        for kind in self.relations.keys() {
            if !self.pos.allows(*kind) {
                return Err(Error::Validation(format!(
                    "{} relation not valid for a {} synset",
                    kind.as_str(),
                    self.pos.as_str()
                )));
            }
        }
        Ok(())
    }
}

fn write_lemmas(f: &mut fmt::Formatter<'_>, lemmas: &[Lemma]) -> fmt::Result {
    for (i, l) in lemmas.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{}:{}", l.word, l.tag_count)?;
    }
    Ok(())
}

impl fmt::Display for SynsetRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|", self.pos.as_str())?;
        write_lemmas(f, &self.lemmas)?;
        let mut first = true;
        for (kind, groups) in &self.relations {
            for group in groups {
                f.write_str(if first { "|" } else { ";" })?;
                first = false;
                write!(f, "{}=", kind.as_str())?;
                write_lemmas(f, group)?;
            }
        }
        Ok(())
    }
}

fn parse_lemmas(field: &str) -> Result<Vec<Lemma>, String> {
    field
        .split(',')
        .map(|item| {
            let (word, count) = item
                .split_once(':')
                .ok_or_else(|| format!("lemma `{item}` lacks `:tag_count`"))?;
            if word.is_empty() {
                return Err(format!("empty lemma in `{item}`"));
            }
            let tag_count = count
                .parse::<u32>()
                .map_err(|_| format!("bad tag count `{count}` for `{word}`"))?;
            Ok(Lemma::new(word, tag_count))
        })
        .collect()
}

impl FromStr for SynsetRecord {
    type Err = String;

    fn from_str(line: &str) -> Result<Self, Self::Err> {
        let mut fields = line.split('|');
        let pos: SynsetPos = fields.next().unwrap_or_default().parse()?;
        let lemmas = parse_lemmas(fields.next().ok_or("missing lemma field")?)?;
        let mut record = SynsetRecord::new(pos, lemmas);
        if let Some(relations) = fields.next() {
            for group in relations.split(';').filter(|g| !g.is_empty()) {
                let (kind, lemmas) = group
                    .split_once('=')
                    .ok_or_else(|| format!("relation `{group}` lacks `kind=`"))?;
                record = record.with_relation(kind.parse()?, parse_lemmas(lemmas)?);
            }
        }
        if fields.next().is_some() {
            return Err("too many `|` fields".into());
        }
        Ok(record)
    }
}

/// Parses a synset record stream; `#` lines and blank lines are ignored.
pub fn parse_synset_records(contents: &str, source_name: &str) -> Result<Vec<SynsetRecord>> {
    contents
        .lines()
        .enumerate()
        .map(|(i, l)| (i, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, l)| l.parse().map_err(|msg: String| Error::parse(source_name, i + 1, msg)))
        .collect()
}

pub fn load_synset_records(path: impl AsRef<Path>) -> Result<Vec<SynsetRecord>> {
    let path = path.as_ref();
    let contents = fs::read_to_string(path).map_err(|e| Error::load(path, e))?;
    parse_synset_records(&contents, &path.display().to_string())
}

/// Builds a dictionary from synset records.
///
/// Every lemma of a record becomes a headword listing its co-lemmas. Nouns
/// add hyponym and hypernym lemmas, verbs add troponym and hypernym lemmas,
/// in both cases only when the lemma's tag count exceeds
/// [`MIN_TAG_COUNT_EXCLUSIVE`]. Adjectives add satellite lemmas with no
/// tag-count filter. Co-lemmas are never filtered.
pub fn build_dictionary<I>(records: I) -> Result<SynonymDictionary>
where
    I: IntoIterator<Item = SynsetRecord>,
{
    let mut dict = SynonymDictionary::new();
    for record in records {
        record.validate()?;
        let related: Vec<&str> = record
            .relations
            .values()
            .flatten()
            .flatten()
            .filter(|l| record.pos == SynsetPos::Adjective || l.tag_count > MIN_TAG_COUNT_EXCLUSIVE)
            .map(|l| l.word.as_str())
            .collect();
        for lemma in &record.lemmas {
            let co_lemmas = record.lemmas.iter().map(|l| l.word.as_str());
            dict.insert(&lemma.word, co_lemmas.chain(related.iter().copied()));
        }
    }
    Ok(dict)
}
