//! One-time-pad scrambling of message bytes.
//!
//! Each byte `n` is combined with a fresh random key unit `r`:
//! `e = n - x*y + r (mod 256)`, where `x` and `y` are the tens and units of
//! the digit-square-sum of `r`. Deciphering reverses the offset with the same
//! key unit.

use rand::Rng;

use crate::cipher::{CipherText, OneTimeKey};
use crate::error::{Error, Result};

/// Number of slots in the random pool key units are drawn from.
pub const POOL_SIZE: usize = 1000;

/// Fixed-size pool of random octets. Each draw picks a random slot and
/// refills it, so a key unit is never taken straight off the generator.
#[derive(Debug, Clone)]
pub struct KeyPool {
    slots: Vec<u8>,
}

impl KeyPool {
    pub fn fill<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let slots = (0..POOL_SIZE).map(|_| rng.random::<u8>()).collect();
        Self { slots }
    }

    pub fn draw<R: Rng + ?Sized>(&mut self, rng: &mut R) -> u8 {
        let index = rng.random_range(0..self.slots.len());
        let unit = self.slots[index];
        self.slots[index] = rng.random::<u8>();
        unit
    }
}

/// Sum of the squares of the decimal digits of `r` (no zero padding).
pub fn digit_square_sum(r: u8) -> u8 {
    let mut rest = r;
    let mut sum = 0u8;
    while rest > 0 {
        let d = rest % 10;
        sum += d * d;
        rest /= 10;
    }
    sum
}

/// `x * y` for `s = digit_square_sum(r)`, `x = s / 10`, `y = s % 10`.
fn key_offset(r: u8) -> u8 {
    let s = digit_square_sum(r);
    (s / 10) * (s % 10)
}

pub fn scramble(n: u8, r: u8) -> u8 {
    n.wrapping_sub(key_offset(r)).wrapping_add(r)
}

pub fn unscramble(e: u8, r: u8) -> u8 {
    e.wrapping_sub(r).wrapping_add(key_offset(r))
}

/// Scrambles `message` with a fresh key drawn from `rng`.
///
/// The key has exactly one unit per message byte; an empty message yields an
/// empty cipher and an empty key.
pub fn encipher<R: Rng + ?Sized>(message: &[u8], rng: &mut R) -> (CipherText, OneTimeKey) {
    let mut pool = KeyPool::fill(rng);
    let mut cipher = Vec::with_capacity(message.len());
    let mut key = Vec::with_capacity(message.len());
    for &n in message {
        let r = pool.draw(rng);
        key.push(r);
        cipher.push(scramble(n, r));
    }
    (CipherText::new(cipher), OneTimeKey::new(key))
}

pub fn decipher(cipher: &CipherText, key: &OneTimeKey) -> Result<Vec<u8>> {
    if cipher.len() != key.len() {
        return Err(Error::LengthMismatch {
            cipher: cipher.len(),
            key: key.len(),
        });
    }
    Ok(cipher
        .units()
        .iter()
        .zip(key.units())
        .map(|(&e, &r)| unscramble(e, r))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::Rng;
    use rand::SeedableRng;

    fn digits_oracle(r: u8) -> u32 {
        r.to_string()
            .chars()
            .map(|c| c.to_digit(10).unwrap().pow(2))
            .sum()
    }

    #[test]
    fn digit_square_sum_examples() {
        assert_eq!(digit_square_sum(0), 0);
        assert_eq!(digit_square_sum(255), 54);
        assert_eq!(digit_square_sum(59), 106);
        assert_eq!(digit_square_sum(199), 163);
    }

    #[test]
    fn digit_square_sum_matches_oracle_everywhere() {
        for r in 0..=255u8 {
            assert_eq!(u32::from(digit_square_sum(r)), digits_oracle(r), "r={r}");
        }
    }

    #[test]
    fn scramble_examples() {
        assert_eq!(scramble(65, 59), 64);
        assert_eq!(scramble(0, 199), 151);
        for n in 0..=255u8 {
            assert_eq!(scramble(n, 0), n);
            assert_eq!(unscramble(n, 0), n);
        }
        assert_eq!(unscramble(64, 59), 65);
        assert_eq!(unscramble(151, 199), 0);
    }

    #[test]
    fn raw_value_below_zero_wraps() {
        // n=0, r=59 gives -1 before reduction
        assert_eq!(scramble(0, 59), 255);
        assert_eq!(unscramble(255, 59), 0);
    }

    #[test]
    fn encipher_follows_pool_draws() {
        // Re-run the pool steps by hand against an identically seeded generator.
        let message = b"Hello World!";
        let (cipher, key) = encipher(message, &mut StdRng::seed_from_u64(7));

        let mut rng = StdRng::seed_from_u64(7);
        let mut pool: Vec<u8> = (0..1000).map(|_| rng.random()).collect();
        for (i, &n) in message.iter().enumerate() {
            let slot = rng.random_range(0..1000);
            let r = pool[slot];
            pool[slot] = rng.random();
            assert_eq!(key.units()[i], r);
            let s = digits_oracle(r) as i32;
            let e = (i32::from(n) - (s / 10) * (s % 10) + i32::from(r)).rem_euclid(256);
            assert_eq!(i32::from(cipher.units()[i]), e);
        }
    }

    #[test]
    fn empty_message() {
        let (cipher, key) = encipher(b"", &mut StdRng::seed_from_u64(1));
        assert!(cipher.is_empty());
        assert!(key.is_empty());
        assert_eq!(decipher(&cipher, &key).unwrap(), Vec::<u8>::new());
    }

    #[test]
    fn hello_world_round_trip() {
        for seed in 0..20 {
            let (cipher, key) = encipher(b"Hello World!", &mut StdRng::seed_from_u64(seed));
            assert_eq!(key.len(), 12);
            assert_eq!(decipher(&cipher, &key).unwrap(), b"Hello World!");
        }
    }

    #[test]
    fn length_mismatch() {
        let err = decipher(&CipherText::new(vec![1, 2, 3]), &OneTimeKey::new(vec![1, 2])).unwrap_err();
        assert!(matches!(err, Error::LengthMismatch { cipher: 3, key: 2 }));
    }

    #[test]
    fn fresh_keys_differ() {
        let mut keys = std::collections::HashSet::new();
        let mut rng = StdRng::from_os_rng();
        for _ in 0..100 {
            let (_, key) = encipher(b"12345678", &mut rng);
            assert!(keys.insert(key));
        }
    }

    proptest! {
        #[test]
        fn round_trip(message in proptest::collection::vec(any::<u8>(), 0..512), seed: u64) {
            let (cipher, key) = encipher(&message, &mut StdRng::seed_from_u64(seed));
            prop_assert_eq!(key.len(), message.len());
            prop_assert_eq!(cipher.len(), message.len());
            prop_assert_eq!(decipher(&cipher, &key).unwrap(), message);
        }
    }
}
