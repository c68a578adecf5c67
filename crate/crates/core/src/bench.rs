//! Standard capacity and similarity benchmark.
//!
//! Each sample gets its own seeded random source per method, so results do
//! not depend on the order or thread the samples run on.

use std::fmt::Write as _;

use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::dictionary::Dictionary;
use crate::error::Result;
use crate::metrics;
use crate::otp;
use crate::paragraph;
use crate::stego::{self, CoverSource, Method};

/// Embedded-data samples for the capacity table, sized 3 to 508 bytes.
pub const CAPACITY_SAMPLES: [&str; 10] = [
    "Ego",
    "Minute",
    "Hello World!",
    "Failure is never final !",
    "Smile is an inexpensive way to improve your looks.",
    "Its not the load that breaks you down, its the way you carry it",
    "Don't find hundred reasons why you can't do a thing, but just find one reason why you can and do it.",
    "Tide recedes and leaves behind bright sea shells on sand\r\n\
Sun sets but its warmth lingers on land\r\n\
Music stops and its echoes on in sweet refrains\r\n\
For every joy that passes, something beautiful remains",
    "Steganography is not a new area. It dates back to 5th century BC. Harpagus used hare to send \
his message by killing it and hiding the message inside its belly. A person disguised as hunter \
carried the hare to the destination. Another incident was of King Darius of Susa. Histiaeus was \
assigned the duty of shaving the head of his most trusted slave.",
    "Steganography is not a new area. It dates back to 5th century BC. Harpagus used hare to send \
his message by killing it and hiding the message inside its belly. A person disguised as hunter \
carried the hare to the destination. Another incident was of King Darius of Susa. Histiaeus, \
prisoner of Darius, was assigned the duty of shaving the head of his most trusted slave and then \
the message was tattooed on his shaved scalp. After some time, when the hairs of the slave grew \
back, his head was shaved again.\n",
];

/// Short samples for the missing-letter similarity table.
pub const SIMILARITY_SAMPLES: [&str; 10] = [
    "A",
    "try",
    "smile",
    "silence",
    "Happiness",
    "possibility",
    "Steganography",
    "glimmer of hope",
    "the art of living",
    "outstanding success",
];

/// Published average capacities (%) of other text methods, shown for
/// reference only.
pub const REPORTED_CAPACITY: [(&str, f64); 6] = [
    ("White Steg", 1.874),
    ("SMS Texting", 1.71),
    ("Feature Coding", 1.479),
    ("Word Map", 1.464),
    ("Spam Text", 1.164),
    ("Word Shift", 1.03),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Tsv,
    Markdown,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CapacityRow {
    pub sample_bytes: usize,
    /// Capacity (%) per method, in [`Method::ALL`] order.
    pub percent: [f64; 3],
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub capacity: Vec<CapacityRow>,
    pub capacity_average: [f64; 3],
    /// Missing-letter cover/stego Jaro-Winkler average per similarity sample.
    pub similarity: Vec<f64>,
    pub similarity_average: f64,
    pub reuse_warnings: usize,
}

fn sample_rng(seed: u64, table: u64, sample: usize, method: usize) -> StdRng {
    StdRng::seed_from_u64(seed ^ (table << 48) ^ ((sample as u64) << 8) ^ method as u64)
}

struct Measured {
    percent: f64,
    cover: String,
    stego: String,
    reuse: usize,
}

fn measure(
    method: Method,
    message: &[u8],
    dict: &Dictionary,
    corpus: &str,
    rng: &mut StdRng,
) -> Result<Measured> {
    let (cipher, _) = otp::encipher(message, rng);
    let bundle = match method {
        Method::Paragraph => {
            let cover = paragraph::fitted_cover(corpus, cipher.len())?;
            stego::hide(method, &cipher, CoverSource::Text(cover), rng)?
        }
        _ => stego::hide(method, &cipher, CoverSource::Dictionary(dict), rng)?,
    };
    Ok(Measured {
        percent: metrics::capacity_percent(bundle.stats.hidden_bytes, bundle.stats.cover_bytes)?,
        cover: bundle.cover_text,
        stego: bundle.stego_text,
        reuse: bundle.stats.reuse_warnings,
    })
}

fn capacity_row(index: usize, dict: &Dictionary, corpus: &str, seed: u64) -> Result<(CapacityRow, usize)> {
    let sample = CAPACITY_SAMPLES[index].as_bytes();
    let mut percent = [0.0; 3];
    let mut reuse = 0;
    for (m, method) in Method::ALL.into_iter().enumerate() {
        let out = measure(method, sample, dict, corpus, &mut sample_rng(seed, 1, index, m))?;
        percent[m] = out.percent;
        reuse += out.reuse;
    }
    Ok((
        CapacityRow {
            sample_bytes: sample.len(),
            percent,
        },
        reuse,
    ))
}

fn similarity_score(index: usize, dict: &Dictionary, seed: u64) -> Result<(f64, usize)> {
    let sample = SIMILARITY_SAMPLES[index].as_bytes();
    let out = measure(Method::MissingLetter, sample, dict, "", &mut sample_rng(seed, 2, index, 0))?;
    let report = metrics::stego_similarity_report(&out.cover, &out.stego)?;
    Ok((report.average, out.reuse))
}

fn mean(values: impl ExactSizeIterator<Item = f64>) -> f64 {
    let n = values.len();
    values.sum::<f64>() / n as f64
}

/// Runs both tables. Samples are processed on scoped threads; every sample
/// owns its random source, so the result depends only on `seed`.
pub fn run(dict: &Dictionary, corpus: &str, seed: u64) -> Result<BenchReport> {
    let (capacity, similarity) = std::thread::scope(|s| {
        let cap: Vec<_> = (0..CAPACITY_SAMPLES.len())
            .map(|i| s.spawn(move || capacity_row(i, dict, corpus, seed)))
            .collect();
        let sim: Vec<_> = (0..SIMILARITY_SAMPLES.len())
            .map(|i| s.spawn(move || similarity_score(i, dict, seed)))
            .collect();
        let cap: Result<Vec<_>> = cap.into_iter().map(|h| h.join().expect("bench worker panicked")).collect();
        let sim: Result<Vec<_>> = sim.into_iter().map(|h| h.join().expect("bench worker panicked")).collect();
        (cap, sim)
    });
    let capacity = capacity?;
    let similarity = similarity?;

    let reuse_warnings =
        capacity.iter().map(|(_, r)| r).sum::<usize>() + similarity.iter().map(|(_, r)| r).sum::<usize>();
    let capacity: Vec<CapacityRow> = capacity.into_iter().map(|(row, _)| row).collect();
    let similarity: Vec<f64> = similarity.into_iter().map(|(s, _)| s).collect();
    let capacity_average =
        std::array::from_fn(|m| mean(capacity.iter().map(|row| row.percent[m])));
    let similarity_average = mean(similarity.iter().copied());

    Ok(BenchReport {
        capacity,
        capacity_average,
        similarity,
        similarity_average,
        reuse_warnings,
    })
}

impl BenchReport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Tsv => self.to_tsv(),
            Format::Markdown => self.to_markdown(),
        }
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("# capacity (%)\nsample\tbytes");
        for m in Method::ALL {
            let _ = write!(out, "\t{m}");
        }
        out.push('\n');
        for (i, row) in self.capacity.iter().enumerate() {
            let _ = write!(out, "{}\t{}", i + 1, row.sample_bytes);
            for p in row.percent {
                let _ = write!(out, "\t{p:.2}");
            }
            out.push('\n');
        }
        out.push_str("average\t");
        for p in self.capacity_average {
            let _ = write!(out, "\t{p:.3}");
        }
        out.push_str("\n\n# average capacity (%)\nmethod\taverage\tsource\n");
        for (m, p) in Method::ALL.into_iter().zip(self.capacity_average) {
            let _ = writeln!(out, "{m}\t{p:.3}\tmeasured");
        }
        for (name, p) in REPORTED_CAPACITY {
            let _ = writeln!(out, "{name}\t{p}\treported, not recomputed");
        }
        out.push_str("\n# missing-letter similarity (Jaro-Winkler)\nsample\ttext\tscore\n");
        for (i, s) in self.similarity.iter().enumerate() {
            let _ = writeln!(out, "{}\t{}\t{s:.3}", i + 1, SIMILARITY_SAMPLES[i]);
        }
        let _ = writeln!(out, "average\t\t{:.3}", self.similarity_average);
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::from("### Capacity (%)\n\n| sample | bytes |");
        for m in Method::ALL {
            let _ = write!(out, " {m} |");
        }
        out.push_str("\n|---:|---:|---:|---:|---:|\n");
        for (i, row) in self.capacity.iter().enumerate() {
            let _ = write!(out, "| {} | {} |", i + 1, row.sample_bytes);
            for p in row.percent {
                let _ = write!(out, " {p:.2} |");
            }
            out.push('\n');
        }
        out.push_str("| average | |");
        for p in self.capacity_average {
            let _ = write!(out, " {p:.3} |");
        }
        out.push_str("\n\n### Average capacity (%)\n\n| method | average | source |\n|---|---:|---|\n");
        for (m, p) in Method::ALL.into_iter().zip(self.capacity_average) {
            let _ = writeln!(out, "| {m} | {p:.3} | measured |");
        }
        for (name, p) in REPORTED_CAPACITY {
            let _ = writeln!(out, "| {name} | {p} | reported, not recomputed |");
        }
        out.push_str("\n### Missing-letter similarity (Jaro-Winkler)\n\n| sample | text | score |\n|---:|---|---:|\n");
        for (i, s) in self.similarity.iter().enumerate() {
            let _ = writeln!(out, "| {} | {} | {s:.3} |", i + 1, SIMILARITY_SAMPLES[i]);
        }
        let _ = writeln!(out, "| average | | {:.3} |", self.similarity_average);
        out
    }
}
