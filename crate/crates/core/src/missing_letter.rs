//! Missing-letter puzzle hiding.
//!
//! Each cipher unit becomes one dictionary word with one or two letters
//! replaced by `?`. The word length, the `?` positions and the presence of a
//! hint carry the decimal digits of the unit; units of 100 and above also
//! write a flag (1 + last digit) to the stego key, smaller units write 0.
//!
//! Positions are 1-based throughout.

use std::collections::HashSet;
use std::fmt;

use rand::Rng;

use crate::cipher::CipherText;
use crate::dictionary::Dictionary;
use crate::error::{Error, Result};
use crate::stego::{StegoBundle, StegoKey, StegoStats};

/// Stego files always carry at least this many lines.
pub const MIN_LINES: usize = 10;
const PADDING_LENGTH: usize = 10;
const MASK: char = '?';

/// Where the `?` marks go for one unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mask {
    At(usize),
    /// A single mark anywhere in `lo..=hi`.
    Anywhere { lo: usize, hi: usize },
    /// A mark at `first` plus a second one drawn from `lo..=hi`.
    Pair { first: usize, lo: usize, hi: usize },
}

/// Deterministic part of the encoding of one unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnitRule {
    pub flag: u8,
    pub length: usize,
    pub mask: Mask,
    pub hint: bool,
}

pub fn rule(n: u8) -> UnitRule {
    let n = usize::from(n);
    if n < 100 {
        let (q, r) = (n / 10, n % 10);
        let length = if q < 6 { 10 + q } else { q };
        let mask = if r == 0 {
            Mask::Anywhere { lo: 1, hi: length }
        } else if r <= q {
            Mask::At(r)
        } else {
            let lo = if q >= 6 { 4 } else { 10 };
            Mask::Pair {
                first: r - q,
                lo,
                hi: length,
            }
        };
        UnitRule {
            flag: 0,
            length,
            mask,
            hint: r == 0,
        }
    } else {
        let q = n / 100;
        let r = (n / 10) % 10;
        let length = 10 + q;
        let mask = if r == 0 {
            Mask::Anywhere { lo: 10, hi: length }
        } else {
            Mask::At(r)
        };
        UnitRule {
            flag: 1 + (n % 10) as u8,
            length,
            mask,
            hint: false,
        }
    }
}

/// One line of the stego file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuzzleLine {
    masked: String,
    hint: Option<String>,
    source: String,
}

impl PuzzleLine {
    /// Masks `source` at the given 1-based positions.
    pub fn new(source: &str, positions: &[usize], hint: Option<String>) -> Self {
        let masked = source
            .chars()
            .enumerate()
            .map(|(i, c)| if positions.contains(&(i + 1)) { MASK } else { c })
            .collect();
        Self {
            masked,
            hint,
            source: source.to_string(),
        }
    }

    pub fn masked(&self) -> &str {
        &self.masked
    }

    pub fn hint(&self) -> Option<&str> {
        self.hint.as_deref()
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// 1-based positions of the `?` marks, ascending.
    pub fn mask_positions(&self) -> Vec<usize> {
        mask_positions(&self.masked)
    }
}

impl fmt::Display for PuzzleLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.masked)?;
        if let Some(h) = &self.hint {
            write!(f, " ({h})")?;
        }
        Ok(())
    }
}

fn mask_positions(masked: &str) -> Vec<usize> {
    masked
        .chars()
        .enumerate()
        .filter(|&(_, c)| c == MASK)
        .map(|(i, _)| i + 1)
        .collect()
}

/// Per-unit flags, one line each in the key file: 0 for units below 100,
/// otherwise 1 + the unit's last digit.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MissingLetterKey(Vec<u8>);

impl MissingLetterKey {
    pub fn new(flags: Vec<u8>) -> Self {
        Self(flags)
    }

    pub fn flags(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn place_marks<R: Rng + ?Sized>(mask: Mask, rng: &mut R) -> Vec<usize> {
    match mask {
        Mask::At(p) => vec![p],
        Mask::Anywhere { lo, hi } => vec![rng.random_range(lo..=hi)],
        Mask::Pair { first, lo, hi } => {
            let second = rng.random_range(lo..=hi);
            // the ranges are built so the first mark always precedes the second
            assert!(first < lo && first < second, "mask order violated: {first} / {second}");
            vec![first, second]
        }
    }
}

fn encode_tracked<R: Rng + ?Sized>(
    n: u8,
    dict: &Dictionary,
    used: &mut HashSet<String>,
    rng: &mut R,
) -> Result<(PuzzleLine, u8, bool)> {
    let rule = rule(n);
    let pick = dict.pick_word(rule.length, None, rule.hint, used, rng)?;
    let positions = place_marks(rule.mask, rng);
    let hint = if rule.hint {
        pick.entry.gloss().map(str::to_string)
    } else {
        None
    };
    used.insert(pick.entry.word().to_string());
    Ok((PuzzleLine::new(pick.entry.word(), &positions, hint), rule.flag, pick.reused))
}

/// Encodes a single unit as a puzzle line and its key flag.
pub fn encode_unit<R: Rng + ?Sized>(n: u8, dict: &Dictionary, rng: &mut R) -> Result<(PuzzleLine, u8)> {
    let (line, flag, _) = encode_tracked(n, dict, &mut HashSet::new(), rng)?;
    Ok((line, flag))
}

/// Hides `cipher` as a missing-letter puzzle.
///
/// Ciphers shorter than [`MIN_LINES`] get extra 10-letter padding lines with
/// one random mark each; they carry no key flag. The reported cover is the
/// unmasked, unhinted word list.
pub fn hide<R: Rng + ?Sized>(cipher: &CipherText, dict: &Dictionary, rng: &mut R) -> Result<StegoBundle> {
    let mut used = HashSet::new();
    let mut lines = Vec::with_capacity(cipher.len().max(MIN_LINES));
    let mut flags = Vec::with_capacity(cipher.len());
    let mut reuse_warnings = 0;

    for &n in cipher.units() {
        let (line, flag, reused) = encode_tracked(n, dict, &mut used, rng)?;
        reuse_warnings += usize::from(reused);
        lines.push(line);
        flags.push(flag);
    }
    for _ in cipher.len()..MIN_LINES {
        let pick = dict.pick_word(PADDING_LENGTH, None, false, &used, rng)?;
        reuse_warnings += usize::from(pick.reused);
        used.insert(pick.entry.word().to_string());
        let position = rng.random_range(1..=PADDING_LENGTH);
        lines.push(PuzzleLine::new(pick.entry.word(), &[position], None));
    }

    let stego_text: String = lines.iter().map(|l| format!("{l}\n")).collect();
    let cover_text: String = lines.iter().map(|l| format!("{}\n", l.source())).collect();
    let stats = StegoStats {
        hidden_bytes: cipher.len(),
        cover_bytes: cover_text.len(),
        words_used: lines.len(),
        reuse_warnings,
    };
    Ok(StegoBundle {
        stego_text,
        cover_text,
        stego_key: StegoKey::MissingLetter(MissingLetterKey(flags)),
        stats,
    })
}

struct ParsedLine<'a> {
    masked: &'a str,
    hinted: bool,
}

fn parse_line(line_no: usize, line: &str) -> Result<ParsedLine<'_>> {
    let (masked, hinted) = match line.split_once(' ') {
        None => (line, false),
        Some((word, rest)) => {
            let ok = rest.len() > 2 && rest.starts_with('(') && rest.ends_with(')');
            if !ok {
                return Err(Error::malformed(line_no, format!("bad hint {rest:?}")));
            }
            (word, true)
        }
    };
    if masked.is_empty() || !masked.chars().all(|c| c == MASK || c.is_ascii_alphabetic()) {
        return Err(Error::malformed(line_no, format!("bad puzzle word {masked:?}")));
    }
    Ok(ParsedLine { masked, hinted })
}

/// Recovers the cipher units from a puzzle stego file. Lines past the end of
/// the key (padding) are ignored.
pub fn seek(stego_text: &str, key: &MissingLetterKey) -> Result<CipherText> {
    let mut lines = stego_text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l.trim_end()));
    let mut units = Vec::with_capacity(key.len());
    for (index, &flag) in key.flags().iter().enumerate() {
        let (line_no, line) = lines.next().ok_or_else(|| {
            Error::malformed(
                index + 1,
                format!("stego has {index} puzzle lines, key has {} flags", key.len()),
            )
        })?;
        units.push(decode_line(line_no, line, flag)?);
    }
    Ok(CipherText::new(units))
}

fn decode_line(line_no: usize, line: &str, flag: u8) -> Result<u8> {
    let parsed = parse_line(line_no, line)?;
    let positions = mask_positions(parsed.masked);
    let word_len = parsed.masked.chars().count();
    if !(crate::dictionary::MIN_WORD_LEN..=crate::dictionary::MAX_WORD_LEN).contains(&word_len) {
        return Err(Error::malformed(line_no, format!("word length {word_len} out of range")));
    }
    let unit = match (flag, positions.as_slice()) {
        (_, []) | (_, [_, _, _, ..]) => {
            return Err(Error::malformed(line_no, format!("{} missing letters", positions.len())))
        }
        (_, [_, _]) if parsed.hinted => {
            return Err(Error::malformed(line_no, "hint on a two-mark word"))
        }
        (0, marks) => {
            let l = if word_len > 9 { word_len - 10 } else { word_len };
            let r = match marks {
                _ if parsed.hinted => 0,
                [first, _] => l + first,
                [only] => *only,
                _ => unreachable!(),
            };
            let unit = 10 * l + r;
            if unit >= 100 {
                return Err(Error::malformed(line_no, format!("flag 0 but unit {unit}")));
            }
            unit
        }
        (1..=10, [position]) if !parsed.hinted => {
            if word_len < 11 {
                return Err(Error::malformed(line_no, format!("flag {flag} needs 11+ letters")));
            }
            let a = usize::from(flag - 1);
            let l = word_len - 10;
            let r = if *position > 9 { 0 } else { *position };
            100 * l + 10 * r + a
        }
        (1..=10, _) => {
            return Err(Error::malformed(line_no, format!("flag {flag} on a two-mark or hinted word")))
        }
        _ => return Err(Error::malformed(line_no, format!("flag {flag} out of range"))),
    };
    u8::try_from(unit).map_err(|_| Error::malformed(line_no, format!("unit {unit} exceeds 255")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn dict() -> Dictionary {
        Dictionary::bundled()
    }

    fn encode(n: u8, seed: u64) -> (PuzzleLine, u8) {
        encode_unit(n, &dict(), &mut StdRng::seed_from_u64(seed)).unwrap()
    }

    #[test]
    fn unit_72() {
        for seed in 0..20 {
            let (line, flag) = encode(72, seed);
            assert_eq!(flag, 0);
            assert_eq!(line.masked().len(), 7);
            assert_eq!(line.mask_positions(), [2]);
            assert!(line.hint().is_none());
        }
    }

    #[test]
    fn unit_58() {
        for seed in 0..20 {
            let (line, flag) = encode(58, seed);
            assert_eq!(flag, 0);
            assert_eq!(line.masked().len(), 15);
            let marks = line.mask_positions();
            assert_eq!(marks.len(), 2);
            assert_eq!(marks[0], 3);
            assert!((10..=15).contains(&marks[1]));
        }
    }

    #[test]
    fn unit_101() {
        for seed in 0..20 {
            let (line, flag) = encode(101, seed);
            assert_eq!(flag, 2);
            assert_eq!(line.masked().len(), 11);
            let marks = line.mask_positions();
            assert!(marks == [10] || marks == [11], "{marks:?}");
        }
    }

    #[test]
    fn unit_40_is_hinted() {
        for seed in 0..20 {
            let (line, flag) = encode(40, seed);
            assert_eq!(flag, 0);
            assert_eq!(line.masked().len(), 14);
            let marks = line.mask_positions();
            assert_eq!(marks.len(), 1);
            assert!(marks[0] <= 14);
            assert!(line.hint().is_some());
        }
    }

    #[test]
    fn hint_without_gloss_fails() {
        let d = Dictionary::load("background\nabjuration\n").unwrap();
        let err = encode_unit(0, &d, &mut StdRng::seed_from_u64(0)).unwrap_err();
        assert!(matches!(err, Error::EmptyBucket(q) if q.needs_gloss && q.length == 10));
    }

    #[test]
    fn seek_examples() {
        let key = |f: u8| MissingLetterKey::new(vec![f]);
        assert_eq!(seek("TETRACYCL?NE (antibiotic)\n", &key(0)).unwrap().units(), [20]);
        assert_eq!(seek("backgroun?d\n", &key(2)).unwrap().units(), [101]);
        assert_eq!(seek("k?tchen\n", &key(0)).unwrap().units(), [72]);
    }

    #[test]
    fn hide_lengths() {
        let d = dict();
        let mut rng = StdRng::seed_from_u64(11);
        let b = hide(&CipherText::new((0..12).collect()), &d, &mut rng).unwrap();
        assert_eq!(b.stego_text.lines().count(), 12);
        assert!(matches!(&b.stego_key, StegoKey::MissingLetter(k) if k.len() == 12));

        let b = hide(&CipherText::new(vec![65, 200, 7]), &d, &mut rng).unwrap();
        assert_eq!(b.stego_text.lines().count(), 10);
        assert!(matches!(&b.stego_key, StegoKey::MissingLetter(k) if k.len() == 3));
        for line in b.stego_text.lines().skip(3) {
            assert_eq!(line.len(), 10);
            assert_eq!(line.matches('?').count(), 1);
        }

        let b = hide(&CipherText::default(), &d, &mut rng).unwrap();
        assert_eq!(b.stego_text.lines().count(), 10);
        assert!(matches!(&b.stego_key, StegoKey::MissingLetter(k) if k.is_empty()));
        assert_eq!(b.stats.hidden_bytes, 0);
    }

    #[test]
    fn cover_is_unmasked_word_list() {
        let b = hide(&CipherText::new(vec![0, 10, 250]), &dict(), &mut StdRng::seed_from_u64(5)).unwrap();
        assert_eq!(b.cover_text.lines().count(), b.stego_text.lines().count());
        assert_eq!(b.stats.cover_bytes, b.cover_text.len());
        for (c, s) in b.cover_text.lines().zip(b.stego_text.lines()) {
            assert!(!c.contains('?') && !c.contains('('));
            let masked = s.split(' ').next().unwrap();
            assert_eq!(c.len(), masked.len());
            for (a, b) in c.chars().zip(masked.chars()) {
                assert!(b == '?' || a == b);
            }
        }
    }

    #[test]
    fn seek_rejects_malformed() {
        let cases: &[(&str, u8)] = &[
            ("kitchen\n", 0),
            ("k??ch?n\n", 0),
            ("k?tch?n (room)\n", 0),
            ("k?tchen (room\n", 0),
            ("k?tchen\n", 11),
            ("k?tchen\n", 3),
            ("backgro?nd\n", 3),
            ("backgro?nd?\n", 3),
            ("intervention?\n", 9),
            ("k?t\n", 0),
        ];
        for &(text, flag) in cases {
            let r = seek(text, &MissingLetterKey::new(vec![flag]));
            assert!(matches!(r, Err(Error::MalformedStego { .. })), "{text:?} {flag}: {r:?}");
        }
        let r = seek("k?tchen\n", &MissingLetterKey::new(vec![0, 0]));
        assert!(matches!(r, Err(Error::MalformedStego { .. })));
    }

    #[test]
    fn rule_table_matches_case_analysis() {
        // Independent restatement of the case table, computed per digit.
        for n in 0..=255u8 {
            let got = rule(n);
            let d = [n / 100, (n / 10) % 10, n % 10].map(usize::from);
            if n < 100 {
                let (q, r) = (d[1], d[2]);
                assert_eq!(got.flag, 0);
                assert_eq!(got.length, if q < 6 { q + 10 } else { q });
                assert_eq!(got.hint, r == 0);
                match got.mask {
                    Mask::Anywhere { lo: 1, hi } => assert!(r == 0 && hi == got.length),
                    Mask::At(p) => assert!(r != 0 && r <= q && p == r),
                    Mask::Pair { first, lo, hi } => {
                        assert!(r > q && first == r - q && hi == got.length);
                        assert_eq!(lo, if q <= 5 { 10 } else { 4 });
                        assert!(first < lo);
                    }
                    other => panic!("n={n}: {other:?}"),
                }
            } else {
                assert_eq!(got.flag as usize, 1 + d[2]);
                assert_eq!(got.length, 10 + d[0]);
                assert!(!got.hint);
                match got.mask {
                    Mask::Anywhere { lo: 10, hi } => assert!(d[1] == 0 && hi == got.length),
                    Mask::At(p) => assert!(d[1] != 0 && p == d[1]),
                    other => panic!("n={n}: {other:?}"),
                }
            }
        }
    }

    proptest! {
        #[test]
        fn round_trip(units in proptest::collection::vec(any::<u8>(), 0..64), seed: u64) {
            let cipher = CipherText::new(units);
            let b = hide(&cipher, &dict(), &mut StdRng::seed_from_u64(seed)).unwrap();
            let StegoKey::MissingLetter(key) = &b.stego_key else { unreachable!() };
            prop_assert_eq!(seek(&b.stego_text, key).unwrap(), cipher);
        }

        #[test]
        fn every_unit_round_trips(n: u8, seed: u64) {
            let (line, flag) = encode(n, seed);
            let text = format!("{line}\n");
            let units = seek(&text, &MissingLetterKey::new(vec![flag])).unwrap().into_units();
            prop_assert_eq!(units, vec![n]);
            prop_assert_eq!(flag == 0, n < 100);
            let marks = line.mask_positions();
            prop_assert!(marks.len() == 1 || marks.len() == 2);
            prop_assert!(line.hint().is_none() || marks.len() == 1);
            prop_assert!((6..=15).contains(&line.masked().len()));
        }
    }
}
