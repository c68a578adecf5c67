//! Word store for the generated-cover methods.
//!
//! File format: one entry per line, `word` or `word<TAB>gloss`. Lines that
//! start with `#` are comments and blank lines are ignored. Words are 6 to 15
//! ASCII letters; a gloss is short hint text without parentheses.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::error::{BucketQuery, Error, Result};
use crate::stego::Method;

pub const MIN_WORD_LEN: usize = 6;
pub const MAX_WORD_LEN: usize = 15;

const PICK_ATTEMPTS: usize = 8;

const BUNDLED: &str = include_str!("../data/dictionary.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordEntry {
    word: String,
    gloss: Option<String>,
}

impl WordEntry {
    pub fn new(word: impl Into<String>, gloss: Option<String>) -> Result<Self> {
        let word = word.into();
        check_word(&word).map_err(|reason| Error::parse(0, reason))?;
        if let Some(g) = &gloss {
            check_gloss(g).map_err(|reason| Error::parse(0, reason))?;
        }
        Ok(Self { word, gloss })
    }

    pub fn word(&self) -> &str {
        &self.word
    }

    pub fn gloss(&self) -> Option<&str> {
        self.gloss.as_deref()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Lowercased first letter.
    pub fn initial(&self) -> char {
        self.word.as_bytes()[0].to_ascii_lowercase() as char
    }
}

fn check_word(word: &str) -> Result<(), String> {
    if !word.bytes().all(|b| b.is_ascii_alphabetic()) {
        return Err(format!("word {word:?} contains non-letters"));
    }
    if !(MIN_WORD_LEN..=MAX_WORD_LEN).contains(&word.len()) {
        return Err(format!(
            "word {word:?} has length {}, expected {MIN_WORD_LEN}..={MAX_WORD_LEN}",
            word.len()
        ));
    }
    Ok(())
}

fn check_gloss(gloss: &str) -> Result<(), String> {
    if gloss.is_empty() {
        return Err("empty gloss".into());
    }
    if gloss.contains(['(', ')', '\n', '\r']) {
        return Err(format!("gloss {gloss:?} contains parentheses or line breaks"));
    }
    Ok(())
}

/// Immutable, indexed word store.
#[derive(Debug, Clone, Default)]
pub struct Dictionary {
    entries: Vec<WordEntry>,
    by_length: BTreeMap<usize, Vec<usize>>,
    by_length_and_initial: BTreeMap<(usize, char), Vec<usize>>,
}

/// A word chosen by [`Dictionary::pick_word`].
#[derive(Debug, Clone, Copy)]
pub struct Pick<'d> {
    pub entry: &'d WordEntry,
    /// Every qualifying word had already been used, so this one repeats.
    pub reused: bool,
}

impl Dictionary {
    /// Parses a dictionary file. Duplicate words (compared case-insensitively)
    /// keep the first occurrence.
    pub fn load(text: &str) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut entries = Vec::new();
        for (index, raw) in text.lines().enumerate() {
            let line_no = index + 1;
            let line = raw.trim_end();
            if line.trim_start().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let (word, gloss) = match line.split_once('\t') {
                Some((w, g)) => (w.trim(), Some(g.trim())),
                None => (line.trim(), None),
            };
            check_word(word).map_err(|reason| Error::parse(line_no, reason))?;
            let gloss = match gloss {
                Some("") | None => None,
                Some(g) => {
                    check_gloss(g).map_err(|reason| Error::parse(line_no, reason))?;
                    Some(g.to_string())
                }
            };
            if seen.insert(word.to_ascii_lowercase()) {
                entries.push(WordEntry {
                    word: word.to_string(),
                    gloss,
                });
            }
        }
        Ok(Self::from_entries(entries))
    }

    /// The word list shipped with the crate.
    pub fn bundled() -> Self {
        Self::load(BUNDLED).expect("bundled dictionary is well formed")
    }

    fn from_entries(entries: Vec<WordEntry>) -> Self {
        let mut by_length: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut by_length_and_initial: BTreeMap<(usize, char), Vec<usize>> = BTreeMap::new();
        for (i, e) in entries.iter().enumerate() {
            by_length.entry(e.len()).or_default().push(i);
            by_length_and_initial
                .entry((e.len(), e.initial()))
                .or_default()
                .push(i);
        }
        Self {
            entries,
            by_length,
            by_length_and_initial,
        }
    }

    pub fn entries(&self) -> &[WordEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries of the given length, optionally restricted to an initial
    /// letter (case-insensitive).
    pub fn bucket(&self, length: usize, initial: Option<char>) -> impl Iterator<Item = &WordEntry> {
        let ids = match initial {
            Some(c) => self
                .by_length_and_initial
                .get(&(length, c.to_ascii_lowercase())),
            None => self.by_length.get(&length),
        };
        ids.map(Vec::as_slice)
            .unwrap_or_default()
            .iter()
            .map(|&i| &self.entries[i])
    }

    /// Picks a uniformly random qualifying word, preferring words not in
    /// `used`. Falls back to a used word when the bucket is exhausted.
    pub fn pick_word<'d, R: Rng + ?Sized>(
        &'d self,
        length: usize,
        initial: Option<char>,
        needs_gloss: bool,
        used: &HashSet<String>,
        rng: &mut R,
    ) -> Result<Pick<'d>> {
        let qualifying: Vec<&WordEntry> = self
            .bucket(length, initial)
            .filter(|e| !needs_gloss || e.gloss.is_some())
            .collect();
        if qualifying.is_empty() {
            return Err(Error::EmptyBucket(BucketQuery {
                length,
                initial: initial.map(|c| c.to_ascii_lowercase()),
                needs_gloss,
            }));
        }
        // Rejection sampling keeps the draw uniform over fresh words; the
        // scan below only runs once the bucket is mostly used up.
        for _ in 0..PICK_ATTEMPTS {
            let entry = *qualifying.choose(rng).expect("non-empty");
            if !used.contains(entry.word()) {
                return Ok(Pick { entry, reused: false });
            }
        }
        let fresh: Vec<&WordEntry> = qualifying
            .iter()
            .copied()
            .filter(|e| !used.contains(e.word()))
            .collect();
        Ok(match fresh.choose(rng) {
            Some(&entry) => Pick { entry, reused: false },
            None => Pick {
                entry: qualifying.choose(rng).expect("non-empty"),
                reused: true,
            },
        })
    }

    /// Lists the buckets `method` may need that hold no word.
    pub fn audit_coverage(&self, method: Method) -> CoverageReport {
        let mut gaps = Vec::new();
        match method {
            Method::MissingLetter => {
                for length in MIN_WORD_LEN..=MAX_WORD_LEN {
                    if self.bucket(length, None).next().is_none() {
                        gaps.push(Gap::Length(length));
                    }
                    if !self.bucket(length, None).any(|e| e.gloss.is_some()) {
                        gaps.push(Gap::Glossed(length));
                    }
                }
            }
            Method::Wordlist => {
                for (length, initial) in crate::wordlist::required_buckets() {
                    if self.bucket(length, Some(initial)).next().is_none() {
                        gaps.push(Gap::Bucket { length, initial });
                    }
                }
            }
            Method::Paragraph => {}
        }
        CoverageReport { method, gaps }
    }
}

impl FromStr for Dictionary {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::load(s)
    }
}

/// A bucket that a hide method may need but the dictionary lacks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Gap {
    /// No word of this length at all.
    Length(usize),
    /// No glossed word of this length (needed for hinted puzzle lines).
    Glossed(usize),
    /// No word of this length with this initial.
    Bucket { length: usize, initial: char },
}

impl Gap {
    /// The lookup that would fail on this gap.
    pub fn query(self) -> BucketQuery {
        match self {
            Gap::Length(length) => BucketQuery { length, initial: None, needs_gloss: false },
            Gap::Glossed(length) => BucketQuery { length, initial: None, needs_gloss: true },
            Gap::Bucket { length, initial } => BucketQuery {
                length,
                initial: Some(initial),
                needs_gloss: false,
            },
        }
    }
}

impl fmt::Display for Gap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gap::Length(l) => write!(f, "{l}\tany"),
            Gap::Glossed(l) => write!(f, "{l}\tglossed"),
            Gap::Bucket { length, initial } => write!(f, "{length}\t{initial}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageReport {
    pub method: Method,
    pub gaps: Vec<Gap>,
}

impl CoverageReport {
    pub fn is_complete(&self) -> bool {
        self.gaps.is_empty()
    }

    pub fn gap_set(&self) -> BTreeSet<Gap> {
        self.gaps.iter().copied().collect()
    }
}
