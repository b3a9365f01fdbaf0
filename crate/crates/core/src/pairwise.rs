//! Row-wise insertion sort of the sumset `X + Y`.
//!
//! Row `i` of the implicit matrix is `x[i] + y[0..]`, which is already
//! non-decreasing. Each row is merged into the growing output by a forward
//! scan that starts at the remembered insertion rank `ip`. While a row is
//! inserted, any sum that does not exceed the next row's smallest sum
//! (`low[i + 1] = x[i + 1] + y[0]`) moves `ip` to that sum's rank, so the
//! next row's scan skips the prefix that is already known to be smaller.
//!
//! The scan predicate is `<=`: equal keys are passed over, so ties land in
//! insertion order.
//!
//! Only the scan tests go through the meter. The lookahead test against
//! `low` is counted separately in [`InsertionTrace::lookahead_tests`].

use crate::error::{Error, Result};
use crate::key::Key;
use crate::meter::CompareMeter;
use crate::sequence::SortedSequence;
use crate::store::{with_store, Backend, RankedStore};

/// `low[i] = x[i] + y[0]`, the smallest sum of each row.
pub fn low_vector<K: Key>(x: &[K], y: &[K]) -> Result<Vec<K>> {
    let y0 = *y.first().ok_or(Error::EmptyInput)?;
    x.iter().map(|&xi| xi.checked_sum(y0)).collect()
}

/// Pointer positions recorded while sorting, one entry per row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionTrace<K> {
    /// `ip` at the start of each row (the rank the row's scan starts from).
    pub ip_per_row: Vec<usize>,
    /// Rank of the row's last inserted sum.
    pub cp_end_per_row: Vec<usize>,
    /// Scan steps taken in the row, `cp_end - ip`.
    pub advances_per_row: Vec<usize>,
    /// Rank at which every sum was inserted, row-major.
    pub insert_ranks: Vec<usize>,
    /// The key just below `ip` when each row starts (`None` when `ip = 0`).
    pub key_below_ip: Vec<Option<K>>,
    /// Metered scan comparisons.
    pub total_comparisons: u64,
    /// Unmetered `sum <= low[i + 1]` tests.
    pub lookahead_tests: u64,
}

impl<K> Default for InsertionTrace<K> {
    fn default() -> Self {
        Self {
            ip_per_row: Vec::new(),
            cp_end_per_row: Vec::new(),
            advances_per_row: Vec::new(),
            insert_ranks: Vec::new(),
            key_below_ip: Vec::new(),
            total_comparisons: 0,
            lookahead_tests: 0,
        }
    }
}

impl<K: Key> InsertionTrace<K> {
    /// Checks the pointer invariants against the row minima `low`:
    ///
    /// * `ip` starts at 0 and never exceeds the previous row's final `cp`;
    /// * every key below `ip` is `<= low[i]` when row `i` starts;
    /// * within a row, insertion ranks are strictly increasing and never
    ///   below the row's `ip`.
    ///
    /// Returns a description of the first failure.
    pub fn check_invariants(&self, low: &[K]) -> Result<(), String> {
        let rows = self.ip_per_row.len();
        if rows == 0 {
            return Ok(());
        }
        if self.ip_per_row[0] != 0 {
            return Err(format!("ip starts at {}, not 0", self.ip_per_row[0]));
        }
        let width = self.insert_ranks.len() / rows;
        #[allow(clippy::needless_range_loop)]
        for i in 0..rows {
            let ip = self.ip_per_row[i];
            let end = self.cp_end_per_row[i];
            if end < ip || self.advances_per_row[i] != end - ip {
                return Err(format!(
                    "row {i}: cp_end {end} / ip {ip} / advances {}",
                    self.advances_per_row[i]
                ));
            }
            if i + 1 < rows && self.ip_per_row[i + 1] > end {
                return Err(format!(
                    "row {i}: next ip {} beyond cp_end {end}",
                    self.ip_per_row[i + 1]
                ));
            }
            if let Some(below) = self.key_below_ip[i] {
                if below > low[i] {
                    return Err(format!("row {i}: key {below:?} below ip exceeds low {:?}", low[i]));
                }
            }
            let ranks = &self.insert_ranks[i * width..(i + 1) * width];
            if ranks.first().is_some_and(|&r| r < ip) {
                return Err(format!("row {i}: inserted before ip {ip}"));
            }
            if let Some(w) = ranks.windows(2).find(|w| w[1] <= w[0]) {
                return Err(format!("row {i}: cp moved backwards {} -> {}", w[0], w[1]));
            }
        }
        Ok(())
    }
}

fn run<K: Key>(
    x: &[K],
    y: &[K],
    store: &mut dyn RankedStore<K>,
    meter: &mut CompareMeter,
    mut trace: Option<&mut InsertionTrace<K>>,
) -> Result<()> {
    let low = low_vector(x, y)?;
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    let rows = x.len();
    let mut ip = 0;
    for i in 0..rows {
        let row_start = ip;
        let mut cp = store.cursor_at(ip)?;
        if let Some(t) = trace.as_deref_mut() {
            t.ip_per_row.push(ip);
            let below = match ip.checked_sub(1) {
                Some(r) => store.peek(store.cursor_at(r)?)?,
                None => None,
            };
            t.key_below_ip.push(below);
        }
        for &yj in y {
            let sum = x[i].checked_sum(yj)?;
            cp = store.advance_while_leq(cp, sum, meter)?;
            cp = store.insert_at(cp, sum)?;
            if let Some(t) = trace.as_deref_mut() {
                t.insert_ranks.push(cp.rank());
            }
            if i + 1 < rows {
                if let Some(t) = trace.as_deref_mut() {
                    t.lookahead_tests += 1;
                }
                if sum <= low[i + 1] {
                    ip = cp.rank();
                }
            }
        }
        if let Some(t) = trace.as_deref_mut() {
            t.cp_end_per_row.push(cp.rank());
            t.advances_per_row.push(cp.rank() - row_start);
        }
    }
    Ok(())
}

/// Sorts all `|X|·|Y|` pairwise sums.
///
/// `X` and `Y` may differ in length. Only the scan comparisons are added to
/// `meter`.
pub fn sort_sumset<K: Key>(
    x: &SortedSequence<K>,
    y: &SortedSequence<K>,
    backend: Backend,
    meter: &mut CompareMeter,
) -> Result<SortedSequence<K>> {
    let cells = x.len().saturating_mul(y.len());
    with_store(backend, cells, |store| {
        run(x, y, store, meter, None)?;
        Ok(store.export_sorted())
    })
}

/// Like [`sort_sumset`], additionally recording the pointer trace.
pub fn trace_sort<K: Key>(
    x: &SortedSequence<K>,
    y: &SortedSequence<K>,
    backend: Backend,
) -> Result<(SortedSequence<K>, InsertionTrace<K>)> {
    let cells = x.len().saturating_mul(y.len());
    with_store(backend, cells, |store| {
        let mut meter = CompareMeter::new();
        let mut trace = InsertionTrace::default();
        run(x, y, store, &mut meter, Some(&mut trace))?;
        trace.total_comparisons = meter.count();
        Ok((store.export_sorted(), trace))
    })
}
