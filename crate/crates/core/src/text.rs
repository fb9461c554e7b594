//! Tokenization, normalization and stopword filtering.
//!
//! Sentences end at `.`, `!` or `?` when followed by whitespace or the end
//! of input. Inside a sentence a token is a maximal run of alphanumeric
//! characters, optionally joined by internal apostrophes (`don't`). The
//! normalized form of a token is its lowercase surface; punctuation never
//! survives into a token.

use std::collections::HashSet;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

/// Bundled stopword list, one word per line.
pub const REFERENCE_STOPWORDS: &str = include_str!("../data/stopwords-rouge2-reference.txt");

/// File name of the bundled stopword list.
pub const REFERENCE_STOPWORDS_NAME: &str = "stopwords-rouge2-reference.txt";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    /// Text as it appeared in the input.
    pub surface: String,
    pub normalized: String,
    pub sentence_index: usize,
    /// Ordinal within the sentence, contiguous from 0.
    pub position: usize,
}

/// Sentence-segmented token sequences.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TokenizedText {
    sentences: Vec<Vec<Token>>,
}

impl TokenizedText {
    /// Builds a text from words, one inner iterator per sentence.
    ///
    /// Each word is normalized; words that do not normalize to a single
    /// token are dropped.
    pub fn from_words<S, W>(sentences: S) -> Self
    where
        S: IntoIterator<Item = W>,
        W: IntoIterator,
        W::Item: AsRef<str>,
    {
        let sentences = sentences
            .into_iter()
            .enumerate()
            .map(|(sentence_index, words)| {
                words
                    .into_iter()
                    .filter_map(|w| {
                        let surface = w.as_ref().to_string();
                        normalize_word(&surface).map(|normalized| (surface, normalized))
                    })
                    .enumerate()
                    .map(|(position, (surface, normalized))| Token {
                        surface,
                        normalized,
                        sentence_index,
                        position,
                    })
                    .collect()
            })
            .collect();
        TokenizedText { sentences }
    }

    pub fn sentences(&self) -> &[Vec<Token>] {
        &self.sentences
    }

    pub fn tokens(&self) -> impl Iterator<Item = &Token> {
        self.sentences.iter().flatten()
    }

    /// Normalized words in reading order.
    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.tokens().map(|t| t.normalized.as_str())
    }

    pub fn len(&self) -> usize {
        self.sentences.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub(crate) fn from_sentences(sentences: Vec<Vec<Token>>) -> Self {
        TokenizedText { sentences }
    }
}

/// Splits `text` into sentences of normalized tokens.
pub fn tokenize(text: &str) -> TokenizedText {
    let chars: Vec<char> = text.chars().collect();
    let mut sentences = Vec::new();
    let mut current: Vec<Token> = Vec::new();
    let mut i = 0;

    while i < chars.len() {
        let c = chars[i];
        if c.is_alphanumeric() {
            let end = word_end(&chars, i);
            let surface: String = chars[i..end].iter().collect();
            current.push(Token {
                normalized: surface.to_lowercase(),
                surface,
                sentence_index: sentences.len(),
                position: current.len(),
            });
            i = end;
            continue;
        }
        if matches!(c, '.' | '!' | '?') && chars.get(i + 1).map_or(true, |n| n.is_whitespace()) {
            if !current.is_empty() {
                sentences.push(std::mem::take(&mut current));
            }
        }
        i += 1;
    }
    if !current.is_empty() {
        sentences.push(current);
    }
    TokenizedText { sentences }
}

/// End (exclusive) of the word starting at `start`, which must be alphanumeric.
fn word_end(chars: &[char], start: usize) -> usize {
    let mut end = start + 1;
    while end < chars.len() {
        if chars[end].is_alphanumeric() {
            end += 1;
        } else if chars[end] == '\''
            && chars.get(end + 1).is_some_and(|c| c.is_alphanumeric())
        {
            end += 2;
        } else {
            break;
        }
    }
    end
}

/// Splits a fragment into `(surface, normalized)` word pieces using the
/// tokenizer's word rules, ignoring sentence boundaries.
pub(crate) fn split_words(fragment: &str) -> Vec<(String, String)> {
    let chars: Vec<char> = fragment.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        if chars[i].is_alphanumeric() {
            let end = word_end(&chars, i);
            let surface: String = chars[i..end].iter().collect();
            let normalized = surface.to_lowercase();
            out.push((surface, normalized));
            i = end;
        } else {
            i += 1;
        }
    }
    out
}

/// Normalizes a single word: lowercase with surrounding punctuation removed.
///
/// Returns `None` when nothing is left or the remainder is not one token
/// (e.g. it contains a space or a hyphen).
pub fn normalize_word(word: &str) -> Option<String> {
    let mut pieces = split_words(word);
    if pieces.len() != 1 {
        return None;
    }
    pieces.pop().map(|(_, normalized)| normalized)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StopwordSet {
    words: HashSet<String>,
}

impl StopwordSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The bundled reference list.
    pub fn reference() -> Self {
        Self::parse(REFERENCE_STOPWORDS)
    }

    /// Builds a set from words, normalizing each; entries that are not a
    /// single word are skipped.
    pub fn from_words<I>(words: I) -> Self
    where
        I: IntoIterator,
        I::Item: AsRef<str>,
    {
        StopwordSet {
            words: words
                .into_iter()
                .filter_map(|w| normalize_word(w.as_ref()))
                .collect(),
        }
    }

    /// Parses the one-word-per-line format; `#` lines and blank lines are ignored.
    pub fn parse(contents: &str) -> Self {
        Self::from_words(
            contents
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#')),
        )
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.words.iter().map(String::as_str)
    }
}

pub fn load_stopwords(path: impl AsRef<Path>) -> Result<StopwordSet> {
    let path = path.as_ref();
    let contents = fs::read_to_string(path).map_err(|e| Error::load(path, e))?;
    Ok(StopwordSet::parse(&contents))
}

/// Drops every token whose normalized form is a stopword.
///
/// Sentences are kept even when they become empty; positions are
/// re-indexed from 0.
pub fn remove_stopwords(text: &TokenizedText, stopwords: &StopwordSet) -> TokenizedText {
    let sentences = text
        .sentences
        .iter()
        .map(|sentence| {
            sentence
                .iter()
                .filter(|t| !stopwords.contains(&t.normalized))
                .enumerate()
                .map(|(position, t)| Token {
                    position,
                    ..t.clone()
                })
                .collect()
        })
        .collect();
    TokenizedText { sentences }
}
