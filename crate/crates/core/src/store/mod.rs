//! The growing sorted output list and its forward-scanning cursor.
//!
//! Two interchangeable backends are provided. [`LinkedBlocks`] keeps keys in
//! a doubly linked list of small fixed-capacity arrays, so an insert at a
//! held cursor shifts at most one block. [`Contiguous`] keeps one growable
//! buffer and shifts the whole tail on every insert. Both produce identical
//! contents and identical comparison counts for the same call sequence.

mod contiguous;
mod linked;

use std::fmt;
use std::str::FromStr;

pub use contiguous::Contiguous;
pub use linked::{LinkedBlocks, BLOCK_CAPACITY};

use crate::error::Result;
use crate::key::Key;
use crate::meter::CompareMeter;
use crate::sequence::SortedSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Backend {
    #[default]
    LinkedBlocks,
    Contiguous,
}

impl Backend {
    pub const ALL: [Backend; 2] = [Backend::LinkedBlocks, Backend::Contiguous];

    pub fn name(self) -> &'static str {
        match self {
            Backend::LinkedBlocks => "linked",
            Backend::Contiguous => "contiguous",
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Backend {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "linked" => Ok(Backend::LinkedBlocks),
            "contiguous" => Ok(Backend::Contiguous),
            other => Err(format!("unknown backend `{other}` (expected linked|contiguous)")),
        }
    }
}

/// A position in a [`RankedStore`]: `rank` in `[0, len]`, where `len` is
/// one past the end.
///
/// Cursors carry the store generation they were issued under. Any insert
/// bumps the generation, so only the cursor returned by that insert stays
/// usable; presenting an older one yields [`Error::StaleCursor`].
///
/// [`Error::StaleCursor`]: crate::Error::StaleCursor
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cursor {
    rank: usize,
    block: usize,
    offset: usize,
    generation: u64,
}

impl Cursor {
    pub fn rank(&self) -> usize {
        self.rank
    }
}

pub trait RankedStore<K: Key> {
    fn backend(&self) -> Backend;

    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Materializes a cursor at `rank`.
    fn cursor_at(&self, rank: usize) -> Result<Cursor>;

    /// Moves forward past every element `<= key`, stopping at the first
    /// larger element or at the end. Each examined element costs exactly
    /// one metered comparison; reaching the end costs nothing.
    fn advance_while_leq(&self, cursor: Cursor, key: K, meter: &mut CompareMeter) -> Result<Cursor>;

    /// Inserts `key` so it occupies `cursor.rank()`. The returned cursor
    /// addresses the new element. No comparisons are metered; the optional
    /// neighbour validation is unmetered.
    fn insert_at(&mut self, cursor: Cursor, key: K) -> Result<Cursor>;

    /// The element under the cursor, or `None` at the end.
    fn peek(&self, cursor: Cursor) -> Result<Option<K>>;

    fn export_sorted(&self) -> SortedSequence<K>;

    /// Enables the neighbour-order check in `insert_at`. On by default in
    /// debug builds.
    fn set_validation(&mut self, enabled: bool);
}

/// Runs `f` against a freshly created store of the requested backend.
pub fn with_store<K: Key, R>(
    backend: Backend,
    capacity_hint: usize,
    f: impl FnOnce(&mut dyn RankedStore<K>) -> R,
) -> R {
    match backend {
        Backend::LinkedBlocks => f(&mut LinkedBlocks::with_capacity(capacity_hint)),
        Backend::Contiguous => f(&mut Contiguous::with_capacity(capacity_hint)),
    }
}
