//! Line-oriented file formats.
//!
//! * cipher and one-time key files: one decimal unit (0-255) per line;
//! * missing-letter stego key: one flag (0-10) per line;
//! * wordlist stego key: one digit (0-2) per line;
//! * paragraph stego key: lowercase letters wrapped at 72 columns, line
//!   breaks ignored on read.
//!
//! Every non-empty file ends with a newline.

use crate::cipher::{CipherText, OneTimeKey};
use crate::error::{Error, Result};
use crate::missing_letter::MissingLetterKey;
use crate::paragraph::{ParagraphKey, KEY_WRAP};
use crate::stego::{Method, StegoKey};
use crate::wordlist::WordlistKey;

fn write_numbers(values: &[u8]) -> String {
    values.iter().map(|v| format!("{v}\n")).collect()
}

fn read_numbers(text: &str, max: u8) -> Result<Vec<u8>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let l = l.trim();
            l.parse::<u8>()
                .ok()
                .filter(|&v| v <= max)
                .ok_or_else(|| Error::parse(i + 1, format!("expected an integer in 0..={max}, got {l:?}")))
        })
        .collect()
}

pub fn write_cipher(cipher: &CipherText) -> String {
    write_numbers(cipher.units())
}

pub fn read_cipher(text: &str) -> Result<CipherText> {
    read_numbers(text, u8::MAX).map(CipherText::new)
}

pub fn write_otp_key(key: &OneTimeKey) -> String {
    write_numbers(key.units())
}

pub fn read_otp_key(text: &str) -> Result<OneTimeKey> {
    read_numbers(text, u8::MAX).map(OneTimeKey::new)
}

pub fn write_stego_key(key: &StegoKey) -> String {
    match key {
        StegoKey::MissingLetter(k) => write_numbers(k.flags()),
        StegoKey::Wordlist(k) => write_numbers(k.digits()),
        StegoKey::Paragraph(k) => k
            .letters()
            .as_bytes()
            .chunks(KEY_WRAP)
            .map(|chunk| format!("{}\n", String::from_utf8_lossy(chunk)))
            .collect(),
    }
}

pub fn read_stego_key(method: Method, text: &str) -> Result<StegoKey> {
    Ok(match method {
        Method::MissingLetter => StegoKey::MissingLetter(MissingLetterKey::new(read_numbers(text, 10)?)),
        Method::Wordlist => StegoKey::Wordlist(WordlistKey::new(read_numbers(text, 2)?)),
        Method::Paragraph => {
            let mut letters = String::with_capacity(text.len());
            for (i, line) in text.lines().enumerate() {
                let line = line.trim();
                if !line.bytes().all(|b| b.is_ascii_alphabetic()) {
                    return Err(Error::parse(i + 1, format!("key line {line:?} has non-letters")));
                }
                letters.push_str(line);
            }
            StegoKey::Paragraph(ParagraphKey::new(&letters).expect("validated letters"))
        }
    })
}
