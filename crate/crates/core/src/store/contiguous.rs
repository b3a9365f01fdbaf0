use super::{Backend, Cursor, RankedStore};
use crate::error::{Error, Result};
use crate::key::Key;
use crate::meter::CompareMeter;
use crate::sequence::SortedSequence;

/// A single growable buffer. Inserts shift the tail, `O(len)` each.
#[derive(Debug, Clone)]
pub struct Contiguous<K> {
    keys: Vec<K>,
    generation: u64,
    validate: bool,
}

impl<K: Key> Default for Contiguous<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Key> Contiguous<K> {
    pub fn new() -> Self {
        Self::with_capacity(0)
    }

    pub fn with_capacity(capacity: usize) -> Self {
        Self {
            keys: Vec::with_capacity(capacity),
            generation: 0,
            validate: cfg!(debug_assertions),
        }
    }

    fn check(&self, cursor: Cursor) -> Result<()> {
        if cursor.generation != self.generation {
            return Err(Error::StaleCursor);
        }
        Ok(())
    }

    fn cursor(&self, rank: usize) -> Cursor {
        Cursor {
            rank,
            block: 0,
            offset: rank,
            generation: self.generation,
        }
    }
}

impl<K: Key> RankedStore<K> for Contiguous<K> {
    fn backend(&self) -> Backend {
        Backend::Contiguous
    }

    fn len(&self) -> usize {
        self.keys.len()
    }

    fn cursor_at(&self, rank: usize) -> Result<Cursor> {
        if rank > self.keys.len() {
            return Err(Error::RankOutOfBounds {
                rank,
                size: self.keys.len(),
            });
        }
        Ok(self.cursor(rank))
    }

    fn advance_while_leq(&self, cursor: Cursor, key: K, meter: &mut CompareMeter) -> Result<Cursor> {
        self.check(cursor)?;
        let tail = &self.keys[cursor.rank..];
        let passed = tail.iter().take_while(|&&k| k <= key).count();
        // One test per passed element, plus the failing test if one ran.
        let tests = passed + usize::from(passed < tail.len());
        meter.add(tests as u64);
        Ok(self.cursor(cursor.rank + passed))
    }

    fn insert_at(&mut self, cursor: Cursor, key: K) -> Result<Cursor> {
        self.check(cursor)?;
        let rank = cursor.rank;
        if self.validate {
            let before = rank.checked_sub(1).map(|r| self.keys[r]);
            let after = self.keys.get(rank).copied();
            if before.is_some_and(|b| b > key) || after.is_some_and(|a| a < key) {
                return Err(Error::OrderViolation { rank });
            }
        }
        self.keys.insert(rank, key);
        self.generation += 1;
        Ok(self.cursor(rank))
    }

    fn peek(&self, cursor: Cursor) -> Result<Option<K>> {
        self.check(cursor)?;
        Ok(self.keys.get(cursor.rank).copied())
    }

    fn export_sorted(&self) -> SortedSequence<K> {
        SortedSequence::new_unchecked(self.keys.clone())
    }

    fn set_validation(&mut self, enabled: bool) {
        self.validate = enabled;
    }
}
