//! Sorting the sumset `X + Y = {x + y}` of two sorted sequences by row-wise
//! insertion with a forward-only scan, extended to k-fold sumsets through a
//! winner-tree merge of translated copies.
//!
//! Every algorithm takes a [`CompareMeter`] and charges it for each key
//! comparison made while scanning, merging or sorting (see [`pairwise`] for
//! the one unmetered lookahead test), so the structured sorters can be compared with the
//! instrumented merge sort and quicksort baselines in [`baseline`] on
//! machine-independent comparison counts. [`bench`](mod@bench) reproduces seeded
//! benchmark runs and [`io`] reads sequence files and writes the CSV tables.
//!
//! ```
//! use sumset_sort::{sort_sumset, Backend, CompareMeter, SortedSequence};
//!
//! let x = SortedSequence::new(vec![2i64, 4, 6]).unwrap();
//! let y = SortedSequence::new(vec![1i64, 3, 5]).unwrap();
//! let mut meter = CompareMeter::new();
//! let z = sort_sumset(&x, &y, Backend::LinkedBlocks, &mut meter).unwrap();
//! assert_eq!(z.as_slice(), &[3, 5, 5, 7, 7, 7, 9, 9, 11]);
//! assert_eq!(meter.count(), 12);
//! ```

pub mod baseline;
pub mod bench;
mod error;
pub mod io;
pub mod key;
pub mod kfold;
pub mod matrix;
mod meter;
pub mod pairwise;
mod sequence;
pub mod store;

pub use baseline::{counted_sort, enumerate_sums, oracle_sorted_sumset, BaselineKind};
pub use error::{Error, Result};
pub use key::{checked_sum, FiniteF64, Key};
pub use kfold::{merge_translated, sort_kfold, sort_kfold_with_stats};
pub use matrix::{matrix_property_check, MatrixPropertyReport};
pub use meter::CompareMeter;
pub use pairwise::{low_vector, sort_sumset, trace_sort, InsertionTrace};
pub use sequence::{verify_sorted, SortedSequence};
pub use store::{Backend, Cursor, RankedStore};
