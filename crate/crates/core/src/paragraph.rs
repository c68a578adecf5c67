//! Paragraph hiding: the cover text is left untouched.
//!
//! The cipher is expanded to bits, most significant bit first. Each bit takes
//! the next usable cover word and writes its first letter (bit 0) or last
//! letter (bit 1) to the key. A word is usable when its first and last
//! letters differ; letters are the ASCII alphabetic characters of the token,
//! so surrounding punctuation is skipped.

use std::fmt;

use crate::cipher::CipherText;
use crate::error::{Error, Result};
use crate::stego::{StegoBundle, StegoKey, StegoStats};

/// Column at which key files are wrapped.
pub const KEY_WRAP: usize = 72;

/// Bundled English prose corpus used as the default cover.
pub const BUNDLED_COVER: &str = include_str!("../data/cover.txt");

/// A whitespace-delimited token of the cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverToken<'a> {
    pub raw: &'a str,
    /// Byte offset of `raw` in the cover.
    pub offset: usize,
    pub start: Option<char>,
    pub end: Option<char>,
}

impl CoverToken<'_> {
    pub fn usable(&self) -> bool {
        matches!((self.start, self.end), (Some(s), Some(e)) if s != e)
    }

    fn letter_for(&self, bit: bool) -> char {
        let letter = if bit { self.end } else { self.start };
        letter.expect("usable token has letters")
    }
}

fn classify(raw: &str, offset: usize) -> CoverToken<'_> {
    let mut letters = raw
        .chars()
        .filter(char::is_ascii_alphabetic)
        .map(|c| c.to_ascii_lowercase());
    let start = letters.next();
    let end = letters.next_back().or(start);
    CoverToken {
        raw,
        offset,
        start,
        end,
    }
}

pub fn tokenize(cover: &str) -> Vec<CoverToken<'_>> {
    let mut tokens = Vec::new();
    let mut token_start = None;
    for (i, c) in cover.char_indices() {
        match (c.is_whitespace(), token_start) {
            (true, Some(s)) => {
                tokens.push(classify(&cover[s..i], s));
                token_start = None;
            }
            (false, None) => token_start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = token_start {
        tokens.push(classify(&cover[s..], s));
    }
    tokens
}

fn usable_tokens<'a>(tokens: &'a [CoverToken<'a>]) -> impl Iterator<Item = (usize, &'a CoverToken<'a>)> {
    tokens.iter().enumerate().filter(|(_, t)| t.usable())
}

/// Bits of a cipher, eight per unit, most significant first.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BitStream(Vec<bool>);

impl BitStream {
    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn to_bits(cipher: &CipherText) -> BitStream {
    BitStream(
        cipher
            .units()
            .iter()
            .flat_map(|&u| (0..8).rev().map(move |i| (u >> i) & 1 == 1))
            .collect(),
    )
}

pub fn from_bits(bits: &[bool]) -> Result<CipherText> {
    if !bits.len().is_multiple_of(8) {
        return Err(Error::BadBitCount(bits.len()));
    }
    Ok(CipherText::new(
        bits.chunks(8)
            .map(|byte| byte.iter().fold(0u8, |acc, &b| (acc << 1) | u8::from(b)))
            .collect(),
    ))
}

/// Lowercase letters, one per hidden bit.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParagraphKey(String);

impl ParagraphKey {
    /// Builds a key from letters; input is lowercased. Returns `None` if any
    /// character is not an ASCII letter.
    pub fn new(letters: &str) -> Option<Self> {
        letters
            .chars()
            .all(|c| c.is_ascii_alphabetic())
            .then(|| Self(letters.to_ascii_lowercase()))
    }

    pub fn letters(&self) -> &str {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ParagraphKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Hides `cipher` in `cover`. The stego text is the cover, byte for byte.
pub fn hide(cipher: &CipherText, cover: &str) -> Result<StegoBundle> {
    let bits = to_bits(cipher);
    let tokens = tokenize(cover);
    let found = usable_tokens(&tokens).count();
    if found < bits.len() {
        return Err(Error::CoverTooShort {
            needed: bits.len(),
            found,
        });
    }
    let key: String = usable_tokens(&tokens)
        .zip(bits.bits())
        .map(|((_, token), &bit)| token.letter_for(bit))
        .collect();
    let stats = StegoStats {
        hidden_bytes: cipher.len(),
        cover_bytes: cover.len(),
        words_used: bits.len(),
        reuse_warnings: 0,
    };
    Ok(StegoBundle {
        stego_text: cover.to_string(),
        cover_text: cover.to_string(),
        stego_key: StegoKey::Paragraph(ParagraphKey(key)),
        stats,
    })
}

pub fn seek(stego_text: &str, key: &ParagraphKey) -> Result<CipherText> {
    if !key.len().is_multiple_of(8) {
        return Err(Error::BadBitCount(key.len()));
    }
    let tokens = tokenize(stego_text);
    let mut usable = usable_tokens(&tokens);
    let mut bits = Vec::with_capacity(key.len());
    for (key_index, letter) in key.letters().chars().enumerate() {
        let Some((token_index, token)) = usable.next() else {
            return Err(Error::CoverTooShort {
                needed: key.len(),
                found: key_index,
            });
        };
        let bit = if Some(letter) == token.start {
            false
        } else if Some(letter) == token.end {
            true
        } else {
            return Err(Error::KeyMismatch {
                key_index,
                token_index,
                letter,
            });
        };
        bits.push(bit);
    }
    from_bits(&bits)
}

/// Shortest prefix of `corpus` that can carry `units` cipher units: it ends
/// right after the last usable word the bits would consume.
pub fn fitted_cover(corpus: &str, units: usize) -> Result<&str> {
    let needed = units * 8;
    if needed == 0 {
        return Ok("");
    }
    let tokens = tokenize(corpus);
    let end = usable_tokens(&tokens).nth(needed - 1).map(|(_, t)| t.offset + t.raw.len());
    match end {
        Some(end) => Ok(&corpus[..end]),
        None => Err(Error::CoverTooShort {
            needed,
            found: usable_tokens(&tokens).count(),
        }),
    }
}
