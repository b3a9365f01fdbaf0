use std::ops::Deref;

use crate::error::{Error, Result};
use crate::key::Key;

/// True iff every adjacent pair is non-decreasing. Unmetered.
pub fn verify_sorted<K: Ord>(keys: &[K]) -> bool {
    keys.windows(2).all(|w| w[0] <= w[1])
}

/// A non-decreasing list of keys. Duplicates are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SortedSequence<K> {
    keys: Vec<K>,
}

impl<K: Key> SortedSequence<K> {
    /// Validates order without touching any meter.
    pub fn new(keys: Vec<K>) -> Result<Self> {
        if let Some(t) = keys.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::NotSorted { position: t + 1 });
        }
        Ok(Self { keys })
    }

    /// Sorts `keys` with the standard library (unmetered).
    pub fn from_unsorted(mut keys: Vec<K>) -> Self {
        keys.sort_unstable();
        Self { keys }
    }

    pub(crate) fn new_unchecked(keys: Vec<K>) -> Self {
        debug_assert!(verify_sorted(&keys));
        Self { keys }
    }

    pub fn as_slice(&self) -> &[K] {
        &self.keys
    }

    pub fn into_vec(self) -> Vec<K> {
        self.keys
    }
}

impl<K> Deref for SortedSequence<K> {
    type Target = [K];

    fn deref(&self) -> &[K] {
        &self.keys
    }
}

impl<K: Key> TryFrom<Vec<K>> for SortedSequence<K> {
    type Error = Error;

    fn try_from(keys: Vec<K>) -> Result<Self> {
        Self::new(keys)
    }
}
