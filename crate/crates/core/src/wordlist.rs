//! Wordlist hiding.
//!
//! A unit `n` is read as three digits `k l r`. The key stores `k`; the word
//! length is `l` (or `l + 10` when `l < 6`); the initial letter is the
//! `(k + l + r)`-th letter of the alphabet, 1-based. Unit 0 has digit sum 0
//! and is written as a 10-letter word starting with `z`, a letter no other
//! unit can produce.

use std::collections::{BTreeSet, HashSet};

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::cipher::CipherText;
use crate::dictionary::Dictionary;
use crate::error::{Error, Result};
use crate::missing_letter::MIN_LINES;
use crate::stego::{StegoBundle, StegoKey, StegoStats};

const SENTINEL_INITIAL: char = 'z';
const SENTINEL_LENGTH: usize = 10;
const PADDING_LENGTH: usize = 10;
/// Highest initial a non-sentinel unit can produce (digit sum 19).
const LAST_INITIAL: char = 's';

/// Per-unit digits and the word shape they select.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordlistEncoding {
    pub msd: u8,
    pub middle: u8,
    pub least: u8,
    pub digit_sum: u8,
    pub word_length: usize,
    pub initial: char,
}

impl WordlistEncoding {
    pub fn of(unit: u8) -> Self {
        let (msd, middle, least) = (unit / 100, (unit / 10) % 10, unit % 10);
        let digit_sum = msd + middle + least;
        if unit == 0 {
            return Self {
                msd,
                middle,
                least,
                digit_sum,
                word_length: SENTINEL_LENGTH,
                initial: SENTINEL_INITIAL,
            };
        }
        let word_length = usize::from(if middle < 6 { middle + 10 } else { middle });
        Self {
            msd,
            middle,
            least,
            digit_sum,
            word_length,
            initial: (b'a' + digit_sum - 1) as char,
        }
    }

    pub fn is_sentinel(&self) -> bool {
        self.initial == SENTINEL_INITIAL
    }
}

/// Every `(length, initial)` bucket some unit in `0..=255` needs, sentinel
/// included.
pub fn required_buckets() -> BTreeSet<(usize, char)> {
    (0..=255u8)
        .map(WordlistEncoding::of)
        .map(|e| (e.word_length, e.initial))
        .collect()
}

/// Most significant digit of each unit, one line each in the key file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WordlistKey(Vec<u8>);

impl WordlistKey {
    pub fn new(digits: Vec<u8>) -> Self {
        Self(digits)
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Hides `cipher` as a list of unmodified dictionary words. The generated list
/// is both cover and stego file.
pub fn hide<R: Rng + ?Sized>(cipher: &CipherText, dict: &Dictionary, rng: &mut R) -> Result<StegoBundle> {
    let mut used = HashSet::new();
    let mut words = Vec::with_capacity(cipher.len().max(MIN_LINES));
    let mut digits = Vec::with_capacity(cipher.len());
    let mut reuse_warnings = 0;

    for &unit in cipher.units() {
        let enc = WordlistEncoding::of(unit);
        let pick = dict.pick_word(enc.word_length, Some(enc.initial), false, &used, rng)?;
        reuse_warnings += usize::from(pick.reused);
        used.insert(pick.entry.word().to_string());
        words.push(pick.entry.word().to_string());
        digits.push(enc.msd);
    }
    let padding_initials: Vec<char> = ('a'..=LAST_INITIAL)
        .filter(|&c| dict.bucket(PADDING_LENGTH, Some(c)).next().is_some())
        .collect();
    for _ in cipher.len()..MIN_LINES {
        let initial = padding_initials.choose(rng).copied().unwrap_or('a');
        let pick = dict.pick_word(PADDING_LENGTH, Some(initial), false, &used, rng)?;
        reuse_warnings += usize::from(pick.reused);
        used.insert(pick.entry.word().to_string());
        words.push(pick.entry.word().to_string());
    }

    let stego_text: String = words.iter().map(|w| format!("{w}\n")).collect();
    let stats = StegoStats {
        hidden_bytes: cipher.len(),
        cover_bytes: stego_text.len(),
        words_used: words.len(),
        reuse_warnings,
    };
    Ok(StegoBundle {
        cover_text: stego_text.clone(),
        stego_text,
        stego_key: StegoKey::Wordlist(WordlistKey(digits)),
        stats,
    })
}

pub fn seek(stego_text: &str, key: &WordlistKey) -> Result<CipherText> {
    let mut words = stego_text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let mut units = Vec::with_capacity(key.len());
    for (index, &k) in key.digits().iter().enumerate() {
        let (line_no, word) = words.next().ok_or_else(|| {
            Error::malformed(
                index + 1,
                format!("stego has {index} words, key has {} digits", key.len()),
            )
        })?;
        units.push(decode_word(line_no, word, k)?);
    }
    Ok(CipherText::new(units))
}

fn decode_word(line_no: usize, word: &str, k: u8) -> Result<u8> {
    if !word.bytes().all(|b| b.is_ascii_alphabetic()) {
        return Err(Error::malformed(line_no, format!("{word:?} is not a plain word")));
    }
    let len = word.len();
    if !(crate::dictionary::MIN_WORD_LEN..=crate::dictionary::MAX_WORD_LEN).contains(&len) {
        return Err(Error::malformed(line_no, format!("word length {len} out of range")));
    }
    let initial = word.as_bytes()[0].to_ascii_lowercase() as char;
    if initial == SENTINEL_INITIAL {
        if k != 0 || len != SENTINEL_LENGTH {
            return Err(Error::malformed(line_no, "sentinel word needs key digit 0 and 10 letters"));
        }
        return Ok(0);
    }
    if initial > LAST_INITIAL {
        return Err(Error::malformed(line_no, format!("initial '{initial}' encodes no unit")));
    }
    let l = if len > 9 { len - 10 } else { len } as i32;
    let s = i32::from(initial as u8 - b'a' + 1);
    let k = i32::from(k);
    let r = s - (l + k);
    if !(0..=9).contains(&r) {
        return Err(Error::malformed(line_no, format!("least digit {r} out of range")));
    }
    let unit = 100 * k + 10 * l + r;
    u8::try_from(unit).map_err(|_| Error::malformed(line_no, format!("unit {unit} exceeds 255")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn hide_one(unit: u8, seed: u64) -> String {
        let b = hide(
            &CipherText::new(vec![unit]),
            &Dictionary::bundled(),
            &mut StdRng::seed_from_u64(seed),
        )
        .unwrap();
        b.stego_text.lines().next().unwrap().to_string()
    }

    #[test]
    fn encoding_examples() {
        let e = WordlistEncoding::of(100);
        assert_eq!((e.msd, e.word_length, e.digit_sum, e.initial), (1, 10, 1, 'a'));
        let e = WordlistEncoding::of(115);
        assert_eq!((e.msd, e.word_length, e.digit_sum, e.initial), (1, 11, 7, 'g'));
        let e = WordlistEncoding::of(55);
        assert_eq!((e.msd, e.word_length, e.digit_sum, e.initial), (0, 15, 10, 'j'));
        let e = WordlistEncoding::of(0);
        assert!(e.is_sentinel());
        assert_eq!((e.msd, e.word_length), (0, 10));
    }

    #[test]
    fn hide_examples() {
        for seed in 0..10 {
            let w = hide_one(100, seed);
            assert_eq!((w.len(), w.as_bytes()[0]), (10, b'a'));
            let w = hide_one(115, seed);
            assert_eq!((w.len(), w.as_bytes()[0]), (11, b'g'));
            let w = hide_one(0, seed);
            assert_eq!((w.len(), w.as_bytes()[0]), (10, b'z'));
            let w = hide_one(55, seed);
            assert_eq!((w.len(), w.as_bytes()[0]), (15, b'j'));
        }
    }

    #[test]
    fn abjuration_decodes_to_100() {
        let d = Dictionary::load("abjuration\n").unwrap();
        let b = hide(&CipherText::new(vec![100]), &d, &mut StdRng::seed_from_u64(1)).unwrap();
        assert!(matches!(&b.stego_key, StegoKey::Wordlist(k) if k.digits() == [1]));
        assert!(b.stego_text.starts_with("abjuration\n"));
        assert_eq!(seek("abjuration\n", &WordlistKey::new(vec![1])).unwrap().units(), [100]);
    }

    #[test]
    fn seek_examples() {
        let key = |k| WordlistKey::new(vec![k]);
        assert_eq!(seek("generations\n", &key(1)).unwrap().units(), [115]);
        assert_eq!(seek("zoological\n", &key(0)).unwrap().units(), [0]);
        assert_eq!(seek("Zoological\n", &key(0)).unwrap().units(), [0]);
    }

    #[test]
    fn seek_rejects_malformed() {
        for (text, k) in [
            ("abjuration\n", 2),   // r = 1 - 2 < 0
            ("tremendous\n", 0),   // 't' encodes nothing
            ("zoological\n", 1),   // sentinel with k != 0
            ("zoologically\n", 0), // sentinel with wrong length
            ("short\n", 0),
            ("ab?uration\n", 1),
        ] {
            let r = seek(text, &WordlistKey::new(vec![k]));
            assert!(matches!(r, Err(Error::MalformedStego { .. })), "{text:?}: {r:?}");
        }
        // k=2, l=9, s=19 ('s') gives 290
        let r = seek("something\n", &WordlistKey::new(vec![2]));
        assert!(matches!(r, Err(Error::MalformedStego { .. })), "{r:?}");
        let r = seek("abjuration\n", &WordlistKey::new(vec![1, 1]));
        assert!(matches!(r, Err(Error::MalformedStego { .. })));
    }

    #[test]
    fn required_buckets_cover_sentinel_and_stop_at_s() {
        let b = required_buckets();
        assert!(b.contains(&(10, 'z')));
        assert!(b.iter().all(|&(l, c)| (6..=15).contains(&l) && (c <= 's' || c == 'z')));
        assert!(!b.contains(&(6, 'a')));
    }

    #[test]
    fn padding_and_identity() {
        let b = hide(&CipherText::new(vec![1, 2]), &Dictionary::bundled(), &mut StdRng::seed_from_u64(4)).unwrap();
        assert_eq!(b.stego_text.lines().count(), 10);
        assert_eq!(b.stego_text, b.cover_text);
        assert!(matches!(&b.stego_key, StegoKey::Wordlist(k) if k.len() == 2));
    }

    proptest! {
        #[test]
        fn round_trip(units in proptest::collection::vec(any::<u8>(), 0..64), seed: u64) {
            let cipher = CipherText::new(units);
            let b = hide(&cipher, &Dictionary::bundled(), &mut StdRng::seed_from_u64(seed)).unwrap();
            let StegoKey::Wordlist(key) = &b.stego_key else { unreachable!() };
            prop_assert!(key.digits().iter().all(|&d| d <= 2));
            prop_assert!(!b.stego_text.contains(['?', '(']));
            for w in b.stego_text.lines() {
                let c = w.as_bytes()[0].to_ascii_lowercase();
                prop_assert!(c <= b's' || c == b'z');
            }
            prop_assert_eq!(seek(&b.stego_text, key).unwrap(), cipher);
        }
    }
}
