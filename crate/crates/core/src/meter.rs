use std::cmp::Ordering;

/// Counts key-to-key order tests.
///
/// Every call to [`CompareMeter::cmp`] or [`CompareMeter::le`] is one
/// comparison in the comparison model. Index arithmetic and rank checks are
/// free and must not go through the meter. The count never decreases.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CompareMeter {
    count: u64,
}

impl CompareMeter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    #[inline]
    pub fn cmp<K: Ord>(&mut self, a: &K, b: &K) -> Ordering {
        self.count += 1;
        a.cmp(b)
    }

    #[inline]
    pub fn le<K: Ord>(&mut self, a: &K, b: &K) -> bool {
        self.count += 1;
        a <= b
    }

    #[inline]
    pub fn lt<K: Ord>(&mut self, a: &K, b: &K) -> bool {
        self.count += 1;
        a < b
    }

    /// Books `n` comparisons that a caller evaluated in a tight loop.
    #[inline]
    pub(crate) fn add(&mut self, n: u64) {
        self.count += n;
    }
}
