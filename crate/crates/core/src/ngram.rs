//! ROUGE-N: n-gram extraction, clipped overlap and recall/precision/F.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::options::ScoreOptions;
use crate::synonyms;
use crate::text::{remove_stopwords, TokenizedText};

/// A sequence of `n` normalized words.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NGram(Vec<String>);

impl NGram {
    pub fn new(words: Vec<String>) -> Result<Self> {
        if words.is_empty() {
            return Err(Error::InvalidArgument("an n-gram needs at least one word".into()));
        }
        Ok(NGram(words))
    }

    pub fn words(&self) -> &[String] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for NGram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.join(" "))
    }
}

/// Multiset of n-grams of a single order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NGramBag {
    order: usize,
    counts: BTreeMap<NGram, usize>,
    total: usize,
}

impl NGramBag {
    pub fn new(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidArgument("n-gram order must be at least 1".into()));
        }
        Ok(NGramBag {
            order,
            counts: BTreeMap::new(),
            total: 0,
        })
    }

    pub fn from_grams<I: IntoIterator<Item = NGram>>(order: usize, grams: I) -> Result<Self> {
        let mut bag = Self::new(order)?;
        for gram in grams {
            bag.insert(gram)?;
        }
        Ok(bag)
    }

    /// Unigram bag over a word sequence.
    pub fn unigrams<I>(words: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<String>,
    {
        let mut bag = NGramBag {
            order: 1,
            counts: BTreeMap::new(),
            total: 0,
        };
        for w in words {
            bag.add(NGram(vec![w.into()]), 1);
        }
        bag
    }

    pub fn insert(&mut self, gram: NGram) -> Result<()> {
        if gram.order() != self.order {
            return Err(Error::InvalidArgument(format!(
                "{}-gram `{gram}` added to a bag of order {}",
                gram.order(),
                self.order
            )));
        }
        self.add(gram, 1);
        Ok(())
    }

    fn add(&mut self, gram: NGram, count: usize) {
        *self.counts.entry(gram).or_insert(0) += count;
        self.total += count;
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of gram instances, counting multiplicity.
    pub fn total(&self) -> usize {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn count(&self, gram: &NGram) -> usize {
        self.counts.get(gram).copied().unwrap_or(0)
    }

    /// Distinct grams with their multiplicities, in sorted order.
    pub fn iter(&self) -> impl Iterator<Item = (&NGram, usize)> {
        self.counts.iter().map(|(g, &c)| (g, c))
    }

    pub(crate) fn check_same_order(&self, other: &NGramBag) -> Result<()> {
        if self.order != other.order {
            return Err(Error::InvalidArgument(format!(
                "cannot compare {}-grams with {}-grams",
                self.order, other.order
            )));
        }
        Ok(())
    }
}

/// Every contiguous window of `n` tokens inside a sentence.
pub fn extract_ngrams(text: &TokenizedText, n: usize) -> Result<NGramBag> {
    let mut bag = NGramBag::new(n)?;
    for sentence in text.sentences() {
        for window in sentence.windows(n) {
            let words = window.iter().map(|t| t.normalized.clone()).collect();
            bag.add(NGram(words), 1);
        }
    }
    Ok(bag)
}

/// Σ over distinct grams of `min(count_ref, count_sys)`.
pub fn clipped_overlap(ref_grams: &NGramBag, sys_grams: &NGramBag) -> Result<usize> {
    ref_grams.check_same_order(sys_grams)?;
    Ok(clipped_count(ref_grams, sys_grams))
}

pub(crate) fn clipped_count(a: &NGramBag, b: &NGramBag) -> usize {
    let (small, large) = if a.counts.len() <= b.counts.len() { (a, b) } else { (b, a) };
    small
        .iter()
        .map(|(gram, count)| count.min(large.count(gram)))
        .sum()
}

/// Recall, precision and F-score with the counts that produced them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RougeScore {
    pub recall: f64,
    pub precision: f64,
    pub f_score: f64,
    pub overlap: usize,
    pub ref_size: usize,
    pub sys_size: usize,
}

impl RougeScore {
    /// Builds a score from raw counts; an empty side scores 0 on its fraction.
    pub fn from_counts(overlap: usize, ref_size: usize, sys_size: usize) -> Self {
        let ratio = |num: usize, den: usize| if den == 0 { 0.0 } else { num as f64 / den as f64 };
        let recall = ratio(overlap, ref_size);
        let precision = ratio(overlap, sys_size);
        RougeScore {
            recall,
            precision,
            f_score: harmonic_mean(precision, recall),
            overlap,
            ref_size,
            sys_size,
        }
    }

    pub fn zero() -> Self {
        Self::from_counts(0, 0, 0)
    }
}

/// Harmonic mean of precision and recall (β = 1).
pub fn f_score(precision: f64, recall: f64) -> Result<f64> {
    for (name, v) in [("precision", precision), ("recall", recall)] {
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::InvalidArgument(format!("{name} {v} is outside [0, 1]")));
        }
    }
    Ok(harmonic_mean(precision, recall))
}

pub(crate) fn harmonic_mean(precision: f64, recall: f64) -> f64 {
    let sum = precision + recall;
    if sum > 0.0 {
        2.0 * precision * recall / sum
    } else {
        0.0
    }
}

/// ROUGE-N between a reference and a system summary.
///
/// Stopwords are removed from both texts before n-grams are extracted.
/// With a synonym dictionary the overlap is the maximum matching of gram
/// instances under synonymy, otherwise the clipped overlap.
pub fn score_rouge_n(
    reference: &TokenizedText,
    system: &TokenizedText,
    n: usize,
    opts: &ScoreOptions,
) -> Result<RougeScore> {
    let (ref_grams, sys_grams) = match opts.stopwords.as_deref() {
        Some(stop) => (
            extract_ngrams(&remove_stopwords(reference, stop), n)?,
            extract_ngrams(&remove_stopwords(system, stop), n)?,
        ),
        None => (extract_ngrams(reference, n)?, extract_ngrams(system, n)?),
    };
    Ok(score_bags(&ref_grams, &sys_grams, opts))
}

/// Scores two bags of equal order.
pub(crate) fn score_bags(ref_grams: &NGramBag, sys_grams: &NGramBag, opts: &ScoreOptions) -> RougeScore {
    debug_assert_eq!(ref_grams.order(), sys_grams.order());
    let overlap = match opts.synonyms.as_deref() {
        Some(dict) => synonyms::matching_count(ref_grams, sys_grams, dict),
        None => clipped_count(ref_grams, sys_grams),
    };
    RougeScore::from_counts(overlap, ref_grams.total(), sys_grams.total())
}
