//! k-fold sumsets `X1 + X2 + ... + Xk`.
//!
//! The two-list base case uses [`sort_sumset`]. Each further list `Xk` is
//! folded in by merging `|Xk|` translated copies of the sorted partial
//! sumset, `{z + x : z in Z}` for every `x in Xk`, through a winner tree.

use crate::error::{Error, Result};
use crate::key::Key;
use crate::meter::CompareMeter;
use crate::pairwise::sort_sumset;
use crate::sequence::SortedSequence;
use crate::store::Backend;

/// Head of one translated list: `value = base[offset] + shifts[list_index]`.
///
/// An exhausted entry (`offset == base.len()`) stands in for `+inf`: it
/// loses to every live entry without a key comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeapEntry<K> {
    pub value: K,
    pub list_index: usize,
    pub offset: usize,
    pub exhausted: bool,
}

/// A tournament tree over `n` leaves where every internal node caches the
/// leaf index of its subtree's minimum.
///
/// Uses the implicit layout `tree[1..n]` for internal nodes and
/// `tree[n..2n]` for leaves, which is valid for any `n >= 1`. Ties on value
/// go to the smaller `list_index`.
#[derive(Debug, Clone)]
pub struct WinnerTree<K> {
    leaves: Vec<HeapEntry<K>>,
    tree: Vec<usize>,
}

impl<K: Key> WinnerTree<K> {
    /// Builds the tree bottom-up with at most `n - 1` metered comparisons.
    pub fn new(leaves: Vec<HeapEntry<K>>, meter: &mut CompareMeter) -> Result<Self> {
        let n = leaves.len();
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        let mut tree = vec![0; 2 * n];
        for (i, slot) in tree[n..].iter_mut().enumerate() {
            *slot = i;
        }
        let mut wt = Self { leaves, tree };
        for node in (1..n).rev() {
            wt.tree[node] = wt.play(wt.tree[2 * node], wt.tree[2 * node + 1], meter);
        }
        Ok(wt)
    }

    pub fn len(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaves.is_empty()
    }

    /// The current minimum (exhausted only once every leaf is).
    pub fn winner(&self) -> &HeapEntry<K> {
        &self.leaves[self.tree[1]]
    }

    /// Replaces the current winner's leaf and replays its root path, costing
    /// at most `ceil(log2 n)` metered comparisons.
    pub fn replace_winner(&mut self, entry: HeapEntry<K>, meter: &mut CompareMeter) {
        let n = self.leaves.len();
        let leaf = self.winner().list_index;
        debug_assert_eq!(self.leaves[leaf].list_index, entry.list_index);
        self.leaves[leaf] = entry;
        let mut node = (n + leaf) / 2;
        while node >= 1 {
            self.tree[node] = self.play(self.tree[2 * node], self.tree[2 * node + 1], meter);
            node /= 2;
        }
    }

    fn play(&self, a: usize, b: usize, meter: &mut CompareMeter) -> usize {
        let (ea, eb) = (&self.leaves[a], &self.leaves[b]);
        match (ea.exhausted, eb.exhausted) {
            (true, true) => a.min(b),
            (true, false) => b,
            (false, true) => a,
            (false, false) => match meter.cmp(&ea.value, &eb.value) {
                std::cmp::Ordering::Less => a,
                std::cmp::Ordering::Greater => b,
                std::cmp::Ordering::Equal => a.min(b),
            },
        }
    }
}

/// Merges the translated copies `base + shifts[i]`, `i in 0..n`, into one
/// sorted sequence of length `|base| * n`.
pub fn merge_translated<K: Key>(
    base: &SortedSequence<K>,
    shifts: &SortedSequence<K>,
    meter: &mut CompareMeter,
) -> Result<SortedSequence<K>> {
    if base.is_empty() || shifts.is_empty() {
        return Err(Error::EmptyInput);
    }
    let head = base[0];
    let leaves = shifts
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            Ok(HeapEntry {
                value: head.checked_sum(s)?,
                list_index: i,
                offset: 0,
                exhausted: false,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut tree = WinnerTree::new(leaves, meter)?;

    let total = base.len() * shifts.len();
    let mut out = Vec::with_capacity(total);
    for _ in 0..total {
        let top = *tree.winner();
        debug_assert!(!top.exhausted);
        out.push(top.value);
        let offset = top.offset + 1;
        let next = match base.get(offset) {
            Some(&z) => HeapEntry {
                value: z.checked_sum(shifts[top.list_index])?,
                list_index: top.list_index,
                offset,
                exhausted: false,
            },
            None => HeapEntry {
                exhausted: true,
                offset,
                ..top
            },
        };
        tree.replace_winner(next, meter);
    }
    Ok(SortedSequence::new_unchecked(out))
}

/// Comparison counts of one [`sort_kfold_with_stats`] run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KfoldStats {
    pub base_comparisons: u64,
    /// One entry per folded list `X3..Xk`: (comparisons, output length).
    pub merges: Vec<(u64, usize)>,
}

/// Sorts the k-fold sumset of `lists` (k >= 2, equal lengths).
pub fn sort_kfold<K: Key>(
    lists: &[SortedSequence<K>],
    backend: Backend,
    meter: &mut CompareMeter,
) -> Result<SortedSequence<K>> {
    sort_kfold_with_stats(lists, backend, meter).map(|(z, _)| z)
}

pub fn sort_kfold_with_stats<K: Key>(
    lists: &[SortedSequence<K>],
    backend: Backend,
    meter: &mut CompareMeter,
) -> Result<(SortedSequence<K>, KfoldStats)> {
    if lists.len() < 2 {
        return Err(Error::Arity { k: lists.len() });
    }
    let n = lists[0].len();
    if let Some(other) = lists.iter().find(|l| l.len() != n) {
        return Err(Error::LengthMismatch {
            left: n,
            right: other.len(),
        });
    }
    if n == 0 {
        return Err(Error::EmptyInput);
    }

    let mut stats = KfoldStats::default();
    let before = meter.count();
    let mut z = sort_sumset(&lists[0], &lists[1], backend, meter)?;
    stats.base_comparisons = meter.count() - before;
    for shifts in &lists[2..] {
        let before = meter.count();
        z = merge_translated(&z, shifts, meter)?;
        stats.merges.push((meter.count() - before, z.len()));
    }
    Ok((z, stats))
}

/// `2 * (ceil(log2 n) + 1)`, the per-output-element merge budget.
pub fn merge_budget_per_element(n: usize) -> u64 {
    let ceil_log2 = if n <= 1 {
        0
    } else {
        usize::BITS - (n - 1).leading_zeros()
    };
    2 * (u64::from(ceil_log2) + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64]) -> SortedSequence<i64> {
        SortedSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn merge_examples() {
        let mut m = CompareMeter::new();
        let z = seq(&[3, 5, 5, 7, 7, 7, 9, 9, 11]);
        assert_eq!(merge_translated(&z, &seq(&[0]), &mut m).unwrap(), z);
        assert_eq!(m.count(), 0);
        assert_eq!(
            merge_translated(&seq(&[0, 1]), &seq(&[0, 2]), &mut m)
                .unwrap()
                .as_slice(),
            &[0, 1, 2, 3]
        );
        assert_eq!(
            merge_translated(&seq(&[0, 1, 2]), &seq(&[0, 0]), &mut m)
                .unwrap()
                .as_slice(),
            &[0, 0, 1, 1, 2, 2]
        );
        assert!(matches!(
            merge_translated(&seq(&[]), &seq(&[1]), &mut m),
            Err(Error::EmptyInput)
        ));
        assert!(matches!(
            merge_translated(&seq(&[1]), &seq(&[i64::MAX]), &mut m),
            Err(Error::Overflow)
        ));
    }

    #[test]
    fn winner_tree_ties_prefer_low_index() {
        let mut m = CompareMeter::new();
        let e = |i| HeapEntry {
            value: 4i64,
            list_index: i,
            offset: 0,
            exhausted: false,
        };
        let tree = WinnerTree::new(vec![e(0), e(1), e(2)], &mut m).unwrap();
        assert_eq!(tree.winner().list_index, 0);
        assert_eq!(m.count(), 2);
    }

    #[test]
    fn replay_cost_is_one_path() {
        for n in 1..40usize {
            let mut m = CompareMeter::new();
            let leaves = (0..n)
                .map(|i| HeapEntry {
                    value: i as i64,
                    list_index: i,
                    offset: 0,
                    exhausted: false,
                })
                .collect();
            let mut tree = WinnerTree::new(leaves, &mut m).unwrap();
            assert!(m.count() <= n.saturating_sub(1) as u64);
            let ceil_log2 = merge_budget_per_element(n) / 2 - 1;
            let before = m.count();
            tree.replace_winner(
                HeapEntry {
                    value: 1000,
                    list_index: 0,
                    offset: 1,
                    exhausted: false,
                },
                &mut m,
            );
            assert!(m.count() - before <= ceil_log2, "n={n}");
            assert_eq!(tree.winner().value, if n == 1 { 1000 } else { 1 });
        }
    }

    #[test]
    fn kfold_examples() {
        let mut m = CompareMeter::new();
        let z = sort_kfold(
            &[seq(&[0, 1]), seq(&[0, 2]), seq(&[0, 4])],
            Backend::LinkedBlocks,
            &mut m,
        )
        .unwrap();
        assert_eq!(z.as_slice(), &[0, 1, 2, 3, 4, 5, 6, 7]);
        let z = sort_kfold(&[seq(&[2, 4, 6]), seq(&[1, 3, 5])], Backend::Contiguous, &mut m).unwrap();
        assert_eq!(z.as_slice(), &[3, 5, 5, 7, 7, 7, 9, 9, 11]);
    }

    #[test]
    fn kfold_three_copies_of_one_two_three() {
        let l = seq(&[1, 2, 3]);
        let mut m = CompareMeter::new();
        let z = sort_kfold(&[l.clone(), l.clone(), l], Backend::LinkedBlocks, &mut m).unwrap();
        // Multiplicities of sums 3..=9 over 27 ordered triples.
        let counts: Vec<usize> = (3..=9).map(|s| z.iter().filter(|&&v| v == s).count()).collect();
        assert_eq!(counts, vec![1, 3, 6, 7, 6, 3, 1]);
    }

    #[test]
    fn kfold_errors() {
        let mut m = CompareMeter::new();
        assert!(matches!(
            sort_kfold(&[seq(&[1])], Backend::LinkedBlocks, &mut m),
            Err(Error::Arity { k: 1 })
        ));
        assert!(matches!(
            sort_kfold(&[seq(&[1]), seq(&[1, 2])], Backend::LinkedBlocks, &mut m),
            Err(Error::LengthMismatch { left: 1, right: 2 })
        ));
        assert!(matches!(
            sort_kfold(&[seq(&[]), seq(&[])], Backend::LinkedBlocks, &mut m),
            Err(Error::EmptyInput)
        ));
    }

    #[test]
    fn budget_values() {
        assert_eq!(merge_budget_per_element(1), 2);
        assert_eq!(merge_budget_per_element(2), 4);
        assert_eq!(merge_budget_per_element(5), 8);
        assert_eq!(merge_budget_per_element(8), 8);
        assert_eq!(merge_budget_per_element(10), 10);
    }
}
