//! Scrambled message units and the one-time key that produced them.

/// Scrambled message: one unit in `0..=255` per message byte.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct CipherText(Vec<u8>);

/// Key units in draw order, one per message byte. Meant to be used once.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct OneTimeKey(Vec<u8>);

macro_rules! unit_seq {
    ($ty:ident) => {
        impl $ty {
            pub fn new(units: Vec<u8>) -> Self {
                Self(units)
            }

            pub fn units(&self) -> &[u8] {
                &self.0
            }

            pub fn into_units(self) -> Vec<u8> {
                self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }
        }

        impl From<Vec<u8>> for $ty {
            fn from(units: Vec<u8>) -> Self {
                Self(units)
            }
        }

        impl From<&[u8]> for $ty {
            fn from(units: &[u8]) -> Self {
                Self(units.to_vec())
            }
        }

        impl AsRef<[u8]> for $ty {
            fn as_ref(&self) -> &[u8] {
                &self.0
            }
        }
    };
}

unit_seq!(CipherText);
unit_seq!(OneTimeKey);
