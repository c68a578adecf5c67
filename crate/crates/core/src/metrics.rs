//! Capacity and similarity measures.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Percentage of the cover taken up by hidden bytes: `100 * hidden / cover`.
pub fn capacity_percent(hidden_bytes: usize, cover_bytes: usize) -> Result<f64> {
    if cover_bytes == 0 {
        return Err(Error::ZeroCover);
    }
    Ok(100.0 * hidden_bytes as f64 / cover_bytes as f64)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityReport {
    pub hidden_bytes: usize,
    pub cover_bytes: usize,
    pub percent: f64,
}

impl CapacityReport {
    pub fn new(hidden_bytes: usize, cover_bytes: usize) -> Result<Self> {
        Ok(Self {
            hidden_bytes,
            cover_bytes,
            percent: capacity_percent(hidden_bytes, cover_bytes)?,
        })
    }
}

/// Winkler prefix bonus settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimilarityParams {
    prefix_scale: f64,
    max_prefix: usize,
}

impl SimilarityParams {
    /// `prefix_scale` must lie in `[0, 0.25]` so scores stay within `[0, 1]`
    /// for prefixes of up to four characters.
    pub fn new(prefix_scale: f64, max_prefix: usize) -> Result<Self> {
        if !(0.0..=0.25).contains(&prefix_scale) {
            return Err(Error::InvalidParams(format!(
                "prefix scale {prefix_scale} outside [0, 0.25]"
            )));
        }
        if prefix_scale * max_prefix as f64 > 1.0 {
            return Err(Error::InvalidParams(format!(
                "prefix scale {prefix_scale} times max prefix {max_prefix} exceeds 1"
            )));
        }
        Ok(Self {
            prefix_scale,
            max_prefix,
        })
    }

    pub fn prefix_scale(&self) -> f64 {
        self.prefix_scale
    }

    pub fn max_prefix(&self) -> usize {
        self.max_prefix
    }
}

impl Default for SimilarityParams {
    fn default() -> Self {
        Self {
            prefix_scale: 0.1,
            max_prefix: 4,
        }
    }
}

/// Jaro similarity over Unicode scalar values.
///
/// Two characters match when equal and no further apart than
/// `max(|a|, |b|) / 2 - 1`. Transpositions are half the number of positions
/// where the matched subsequences of `a` and `b` disagree.
pub fn jaro(a: &str, b: &str) -> f64 {
    if a == b {
        return 1.0;
    }
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    if a.is_empty() || b.is_empty() {
        return 0.0;
    }

    let window = (a.len().max(b.len()) / 2).saturating_sub(1);
    let mut b_taken = vec![false; b.len()];
    let mut a_matched = Vec::with_capacity(a.len());
    for (i, &ca) in a.iter().enumerate() {
        let lo = i.saturating_sub(window);
        let hi = (i + window + 1).min(b.len());
        if lo >= hi {
            continue;
        }
        if let Some(j) = (lo..hi).find(|&j| !b_taken[j] && b[j] == ca) {
            b_taken[j] = true;
            a_matched.push(ca);
        }
    }
    let m = a_matched.len();
    if m == 0 {
        return 0.0;
    }
    let b_matched = b.iter().zip(&b_taken).filter(|(_, &t)| t).map(|(&c, _)| c);
    let out_of_order = a_matched.iter().zip(b_matched).filter(|(x, y)| **x != *y).count();

    let m = m as f64;
    let t = out_of_order as f64 / 2.0;
    (m / a.len() as f64 + m / b.len() as f64 + (m - t) / m) / 3.0
}

/// Jaro score raised by the common-prefix bonus `L * p * (1 - jaro)`.
pub fn jaro_winkler(a: &str, b: &str, params: &SimilarityParams) -> f64 {
    let base = jaro(a, b);
    let prefix = a
        .chars()
        .zip(b.chars())
        .take_while(|(x, y)| x == y)
        .take(params.max_prefix)
        .count();
    base + prefix as f64 * params.prefix_scale * (1.0 - base)
}

/// Line-by-line Jaro-Winkler scores of a cover and its stego file.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityReport {
    /// `(1-based line index, score)`.
    pub per_pair: Vec<(usize, f64)>,
    pub average: f64,
}

impl SimilarityReport {
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (i, s) in &self.per_pair {
            let _ = writeln!(out, "{i}\t{s:.4}");
        }
        let _ = writeln!(out, "average\t{:.2}", self.average);
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::from("| pair | score |\n|---:|---:|\n");
        for (i, s) in &self.per_pair {
            let _ = writeln!(out, "| {i} | {s:.4} |");
        }
        let _ = writeln!(out, "| average | {:.2} |", self.average);
        out
    }
}

/// Scores line `i` of `cover` against line `i` of `stego` with default
/// parameters. Hint text on stego lines is compared as-is. Empty files give
/// an average of 1.
pub fn stego_similarity_report(cover: &str, stego: &str) -> Result<SimilarityReport> {
    let cover_lines: Vec<&str> = cover.lines().collect();
    let stego_lines: Vec<&str> = stego.lines().collect();
    if cover_lines.len() != stego_lines.len() {
        return Err(Error::LineCountMismatch {
            cover: cover_lines.len(),
            stego: stego_lines.len(),
        });
    }
    let params = SimilarityParams::default();
    let per_pair: Vec<(usize, f64)> = cover_lines
        .iter()
        .zip(&stego_lines)
        .enumerate()
        .map(|(i, (c, s))| (i + 1, jaro_winkler(c, s, &params)))
        .collect();
    let average = if per_pair.is_empty() {
        1.0
    } else {
        per_pair.iter().map(|(_, s)| s).sum::<f64>() / per_pair.len() as f64
    };
    Ok(SimilarityReport { per_pair, average })
}
