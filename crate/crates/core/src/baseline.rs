//! Comparison-counted general-purpose sorts over the fully enumerated
//! sumset. They are the reference point for the structured sorters and,
//! through [`oracle_sorted_sumset`], the ground truth in tests.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::key::Key;
use crate::meter::CompareMeter;
use crate::sequence::SortedSequence;

/// Slices at or below this length are finished by insertion sort.
pub const QUICKSORT_CUTOFF: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaselineKind {
    MergeSort,
    QuickSort,
}

impl BaselineKind {
    pub const ALL: [BaselineKind; 2] = [BaselineKind::MergeSort, BaselineKind::QuickSort];

    pub fn name(self) -> &'static str {
        match self {
            BaselineKind::MergeSort => "mergesort",
            BaselineKind::QuickSort => "quicksort",
        }
    }
}

impl fmt::Display for BaselineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for BaselineKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "mergesort" => Ok(BaselineKind::MergeSort),
            "quicksort" => Ok(BaselineKind::QuickSort),
            other => Err(format!("unknown baseline `{other}`")),
        }
    }
}

/// All `prod |Xi|` sums in row-major order (the last list varies fastest).
pub fn enumerate_sums<K: Key>(lists: &[SortedSequence<K>]) -> Result<Vec<K>> {
    let (first, rest) = lists.split_first().ok_or(Error::EmptyInput)?;
    if lists.iter().any(|l| l.is_empty()) {
        return Err(Error::EmptyInput);
    }
    let mut sums: Vec<K> = first.to_vec();
    for list in rest {
        let mut next = Vec::with_capacity(sums.len() * list.len());
        for &s in &sums {
            for &v in list.iter() {
                next.push(s.checked_sum(v)?);
            }
        }
        sums = next;
    }
    Ok(sums)
}

/// Sorts a copy of `values`, metering every comparator call.
pub fn counted_sort<K: Key>(mut values: Vec<K>, kind: BaselineKind, meter: &mut CompareMeter) -> SortedSequence<K> {
    match kind {
        BaselineKind::MergeSort => merge_sort(&mut values, meter),
        BaselineKind::QuickSort => quick_sort(&mut values, meter),
    }
    SortedSequence::new_unchecked(values)
}

/// Enumerates and merge-sorts the sumset on a throwaway meter.
pub fn oracle_sorted_sumset<K: Key>(lists: &[SortedSequence<K>]) -> Result<SortedSequence<K>> {
    let sums = enumerate_sums(lists)?;
    Ok(counted_sort(sums, BaselineKind::MergeSort, &mut CompareMeter::new()))
}

/// Top-down stable merge sort with one scratch buffer.
fn merge_sort<K: Key>(v: &mut [K], meter: &mut CompareMeter) {
    if v.len() < 2 {
        return;
    }
    let mut scratch = v.to_vec();
    merge_sort_into(&mut scratch, v, meter);
}

// Sorts `dst` using `src` (same contents) as scratch; roles alternate per level.
fn merge_sort_into<K: Key>(src: &mut [K], dst: &mut [K], meter: &mut CompareMeter) {
    let len = dst.len();
    if len < 2 {
        return;
    }
    let mid = len / 2;
    {
        let (sl, sr) = src.split_at_mut(mid);
        let (dl, dr) = dst.split_at_mut(mid);
        merge_sort_into(dl, sl, meter);
        merge_sort_into(dr, sr, meter);
    }
    let (left, right) = src.split_at(mid);
    let (mut i, mut j, mut k) = (0, 0, 0);
    while i < left.len() && j < right.len() {
        // Take from the right only when strictly smaller: keeps it stable.
        if meter.lt(&right[j], &left[i]) {
            dst[k] = right[j];
            j += 1;
        } else {
            dst[k] = left[i];
            i += 1;
        }
        k += 1;
    }
    dst[k..k + left.len() - i].copy_from_slice(&left[i..]);
    k += left.len() - i;
    dst[k..].copy_from_slice(&right[j..]);
}

/// Median-of-three quicksort with a sentinel-guarded partition, recursing on
/// the smaller side.
fn quick_sort<K: Key>(v: &mut [K], meter: &mut CompareMeter) {
    let mut v = v;
    while v.len() > QUICKSORT_CUTOFF {
        let hi = v.len() - 1;
        let mid = v.len() / 2;
        if meter.lt(&v[mid], &v[0]) {
            v.swap(mid, 0);
        }
        if meter.lt(&v[hi], &v[0]) {
            v.swap(hi, 0);
        }
        if meter.lt(&v[hi], &v[mid]) {
            v.swap(hi, mid);
        }
        // v[0] <= pivot <= v[hi]; park the pivot at hi - 1.
        v.swap(mid, hi - 1);
        let pivot = v[hi - 1];
        let mut i = 0;
        let mut j = hi - 1;
        loop {
            i += 1;
            while meter.lt(&v[i], &pivot) {
                i += 1;
            }
            j -= 1;
            while meter.lt(&pivot, &v[j]) {
                j -= 1;
            }
            if i >= j {
                break;
            }
            v.swap(i, j);
        }
        v.swap(i, hi - 1);
        let (left, rest) = v.split_at_mut(i);
        let right = &mut rest[1..];
        if left.len() < right.len() {
            quick_sort(left, meter);
            v = right;
        } else {
            quick_sort(right, meter);
            v = left;
        }
    }
    insertion_sort(v, meter);
}

fn insertion_sort<K: Key>(v: &mut [K], meter: &mut CompareMeter) {
    for t in 1..v.len() {
        let key = v[t];
        let mut s = t;
        while s > 0 && meter.lt(&key, &v[s - 1]) {
            v[s] = v[s - 1];
            s -= 1;
        }
        v[s] = key;
    }
}
