use super::{Backend, Cursor, RankedStore};
use crate::error::{Error, Result};
use crate::key::Key;
use crate::meter::CompareMeter;
use crate::sequence::SortedSequence;

/// Keys per block. A full block splits in half on insert.
pub const BLOCK_CAPACITY: usize = 64;

const NIL: usize = usize::MAX;

#[derive(Debug, Clone)]
struct Block<K> {
    keys: Vec<K>,
    prev: usize,
    next: usize,
}

/// A doubly linked list of fixed-capacity key arrays.
///
/// Blocks live in an arena and link by index. Only the head block may be
/// empty, and only while the whole store is empty. The store remembers the
/// block of the most recent insert together with its starting rank, so
/// `cursor_at` near the last write walks few blocks.
#[derive(Debug, Clone)]
pub struct LinkedBlocks<K> {
    blocks: Vec<Block<K>>,
    head: usize,
    tail: usize,
    len: usize,
    generation: u64,
    // (block, rank of its first key); refreshed by every insert.
    finger: (usize, usize),
    validate: bool,
}

impl<K: Key> Default for LinkedBlocks<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Key> LinkedBlocks<K> {
    pub fn new() -> Self {
        Self::with_capacity(0)
    }

    pub fn with_capacity(expected_len: usize) -> Self {
        let mut blocks = Vec::with_capacity(1 + 2 * expected_len / BLOCK_CAPACITY);
        blocks.push(Block {
            keys: Vec::with_capacity(BLOCK_CAPACITY),
            prev: NIL,
            next: NIL,
        });
        Self {
            blocks,
            head: 0,
            tail: 0,
            len: 0,
            generation: 0,
            finger: (0, 0),
            validate: cfg!(debug_assertions),
        }
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    fn check(&self, cursor: Cursor) -> Result<()> {
        if cursor.generation != self.generation {
            return Err(Error::StaleCursor);
        }
        Ok(())
    }

    /// Moves an end-of-block position onto the next block's first key.
    fn normalized(&self, mut block: usize, mut offset: usize, rank: usize) -> Cursor {
        while offset == self.blocks[block].keys.len() && self.blocks[block].next != NIL {
            block = self.blocks[block].next;
            offset = 0;
        }
        Cursor {
            rank,
            block,
            offset,
            generation: self.generation,
        }
    }

    fn before(&self, block: usize, offset: usize) -> Option<K> {
        if offset > 0 {
            return Some(self.blocks[block].keys[offset - 1]);
        }
        let prev = self.blocks[block].prev;
        (prev != NIL).then(|| *self.blocks[prev].keys.last().expect("non-head blocks are non-empty"))
    }

    fn after(&self, block: usize, offset: usize) -> Option<K> {
        if let Some(&k) = self.blocks[block].keys.get(offset) {
            return Some(k);
        }
        let next = self.blocks[block].next;
        (next != NIL).then(|| self.blocks[next].keys[0])
    }

    /// Splits a full block, returning the new right half's index.
    fn split(&mut self, block: usize) -> usize {
        let half = BLOCK_CAPACITY / 2;
        let mut right_keys = Vec::with_capacity(BLOCK_CAPACITY);
        right_keys.extend(self.blocks[block].keys.drain(half..));
        let next = self.blocks[block].next;
        let right = self.blocks.len();
        self.blocks.push(Block {
            keys: right_keys,
            prev: block,
            next,
        });
        self.blocks[block].next = right;
        if next == NIL {
            self.tail = right;
        } else {
            self.blocks[next].prev = right;
        }
        right
    }
}

impl<K: Key> RankedStore<K> for LinkedBlocks<K> {
    fn backend(&self) -> Backend {
        Backend::LinkedBlocks
    }

    fn len(&self) -> usize {
        self.len
    }

    fn cursor_at(&self, rank: usize) -> Result<Cursor> {
        if rank > self.len {
            return Err(Error::RankOutOfBounds { rank, size: self.len });
        }
        let tail_start = self.len - self.blocks[self.tail].keys.len();
        let (mut block, mut start) = [(self.head, 0), self.finger, (self.tail, tail_start)]
            .into_iter()
            .min_by_key(|&(_, s)| s.abs_diff(rank))
            .expect("three candidates");
        if rank >= start {
            while rank - start >= self.blocks[block].keys.len() && self.blocks[block].next != NIL {
                start += self.blocks[block].keys.len();
                block = self.blocks[block].next;
            }
        } else {
            while start > rank {
                block = self.blocks[block].prev;
                start -= self.blocks[block].keys.len();
            }
        }
        Ok(self.normalized(block, rank - start, rank))
    }

    fn advance_while_leq(&self, cursor: Cursor, key: K, meter: &mut CompareMeter) -> Result<Cursor> {
        self.check(cursor)?;
        let (mut block, mut offset, mut rank) = (cursor.block, cursor.offset, cursor.rank);
        let mut tests = 0u64;
        loop {
            let keys = &self.blocks[block].keys[offset..];
            let passed = keys.iter().take_while(|&&k| k <= key).count();
            rank += passed;
            offset += passed;
            tests += passed as u64;
            if passed < keys.len() {
                tests += 1;
                break;
            }
            let next = self.blocks[block].next;
            if next == NIL {
                break;
            }
            block = next;
            offset = 0;
        }
        meter.add(tests);
        Ok(self.normalized(block, offset, rank))
    }

    fn insert_at(&mut self, cursor: Cursor, key: K) -> Result<Cursor> {
        self.check(cursor)?;
        let rank = cursor.rank;
        let (mut block, mut offset) = (cursor.block, cursor.offset);
        if self.validate {
            let low = self.before(block, offset);
            let high = self.after(block, offset);
            if low.is_some_and(|b| b > key) || high.is_some_and(|a| a < key) {
                return Err(Error::OrderViolation { rank });
            }
        }
        if self.blocks[block].keys.len() == BLOCK_CAPACITY {
            let right = self.split(block);
            let half = BLOCK_CAPACITY / 2;
            if offset > half {
                block = right;
                offset -= half;
            }
        }
        self.blocks[block].keys.insert(offset, key);
        self.len += 1;
        self.generation += 1;
        self.finger = (block, rank - offset);
        Ok(Cursor {
            rank,
            block,
            offset,
            generation: self.generation,
        })
    }

    fn peek(&self, cursor: Cursor) -> Result<Option<K>> {
        self.check(cursor)?;
        Ok(self.blocks[cursor.block].keys.get(cursor.offset).copied())
    }

    fn export_sorted(&self) -> SortedSequence<K> {
        let mut out = Vec::with_capacity(self.len);
        let mut block = self.head;
        while block != NIL {
            out.extend_from_slice(&self.blocks[block].keys);
            block = self.blocks[block].next;
        }
        SortedSequence::new_unchecked(out)
    }

    fn set_validation(&mut self, enabled: bool) {
        self.validate = enabled;
    }
}
