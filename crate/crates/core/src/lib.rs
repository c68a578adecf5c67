//! Text steganography toolkit.
//!
//! A message is first scrambled with a one-time pad ([`otp`]), and the
//! resulting cipher units are hidden by one of three methods:
//!
//! * [`missing_letter`]: generated word list where each word has one or two
//!   letters replaced by `?`, sometimes followed by a hint;
//! * [`wordlist`]: generated list of unmodified words whose length and
//!   initial letter carry the unit;
//! * [`paragraph`]: an untouched English cover text, with the bits carried
//!   by a key of start/end letters.
//!
//! [`metrics`] measures capacity and Jaro-Winkler similarity, and [`bench`]
//! runs the standard sample set through all three methods.

pub mod bench;
pub mod cipher;
pub mod dictionary;
mod error;
pub mod formats;
pub mod metrics;
pub mod missing_letter;
pub mod otp;
pub mod paragraph;
pub mod stego;
pub mod wordlist;

pub use cipher::{CipherText, OneTimeKey};
pub use dictionary::{Dictionary, WordEntry};
pub use error::{BucketQuery, Error, Result};
pub use stego::{CoverSource, Method, StegoBundle, StegoKey, StegoStats};

use rand::rngs::StdRng;
use rand::SeedableRng;

/// Random source seeded from the operating system's entropy pool, or from
/// `seed` when one is given (reproducible runs and tests).
pub fn random_source(seed: Option<u64>) -> StdRng {
    match seed {
        Some(seed) => StdRng::seed_from_u64(seed),
        None => StdRng::from_os_rng(),
    }
}
