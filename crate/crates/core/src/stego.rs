//! Types shared by the three hiding methods.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::cipher::CipherText;
use crate::dictionary::Dictionary;
use crate::error::{Error, Result};
use crate::missing_letter::{self, MissingLetterKey};
use crate::paragraph::{self, ParagraphKey};
use crate::wordlist::{self, WordlistKey};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    MissingLetter,
    Wordlist,
    Paragraph,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::MissingLetter, Method::Wordlist, Method::Paragraph];

    pub fn name(self) -> &'static str {
        match self {
            Method::MissingLetter => "missing-letter",
            Method::Wordlist => "wordlist",
            Method::Paragraph => "paragraph",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method {s:?} (expected missing-letter, wordlist or paragraph)"))
    }
}

/// Method-specific side channel needed to extract the hidden units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StegoKey {
    MissingLetter(MissingLetterKey),
    Wordlist(WordlistKey),
    Paragraph(ParagraphKey),
}

impl StegoKey {
    pub fn method(&self) -> Method {
        match self {
            StegoKey::MissingLetter(_) => Method::MissingLetter,
            StegoKey::Wordlist(_) => Method::Wordlist,
            StegoKey::Paragraph(_) => Method::Paragraph,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StegoStats {
    /// Number of cipher units embedded.
    pub hidden_bytes: usize,
    /// Size in bytes of the cover the units were measured against.
    pub cover_bytes: usize,
    /// Words written (generated methods) or consumed (paragraph).
    pub words_used: usize,
    /// Picks that had to repeat an already used word.
    pub reuse_warnings: usize,
}

impl StegoStats {
    /// Percentage capacity, or `None` for an empty cover.
    pub fn capacity_percent(&self) -> Option<f64> {
        crate::metrics::capacity_percent(self.hidden_bytes, self.cover_bytes).ok()
    }
}

/// Output of a hide operation.
#[derive(Debug, Clone, PartialEq)]
pub struct StegoBundle {
    /// Content of the stego file.
    pub stego_text: String,
    /// The cover the stego text is compared against: the unmasked word list
    /// for missing-letter, the stego text itself for wordlist, and the input
    /// cover for paragraph.
    pub cover_text: String,
    pub stego_key: StegoKey,
    pub stats: StegoStats,
}

/// What a hide method embeds into.
#[derive(Debug, Clone, Copy)]
pub enum CoverSource<'a> {
    /// Word store for the generated-cover methods.
    Dictionary(&'a Dictionary),
    /// Existing text for the paragraph method.
    Text(&'a str),
}

/// Runs the hide step of `method`.
pub fn hide<R: Rng + ?Sized>(
    method: Method,
    cipher: &CipherText,
    source: CoverSource<'_>,
    rng: &mut R,
) -> Result<StegoBundle> {
    match (method, source) {
        (Method::MissingLetter, CoverSource::Dictionary(d)) => missing_letter::hide(cipher, d, rng),
        (Method::Wordlist, CoverSource::Dictionary(d)) => wordlist::hide(cipher, d, rng),
        (Method::Paragraph, CoverSource::Text(t)) => paragraph::hide(cipher, t),
        (Method::Paragraph, CoverSource::Dictionary(_)) => {
            Err(Error::Usage("paragraph method needs a cover text".into()))
        }
        (m, CoverSource::Text(_)) => Err(Error::Usage(format!("{m} method needs a dictionary"))),
    }
}

/// Runs the seek step matching the key's method.
pub fn seek(stego_text: &str, key: &StegoKey) -> Result<CipherText> {
    match key {
        StegoKey::MissingLetter(k) => missing_letter::seek(stego_text, k),
        StegoKey::Wordlist(k) => wordlist::seek(stego_text, k),
        StegoKey::Paragraph(k) => paragraph::seek(stego_text, k),
    }
}
