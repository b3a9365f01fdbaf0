use proptest::prelude::*;
use sumset_sort::{counted_sort, BaselineKind, CompareMeter};

proptest! {
    #[test]
    fn both_kinds_sort_identically(v in prop::collection::vec(-30i64..30, 0..400)) {
        let mut expect = v.clone();
        expect.sort();
        for kind in BaselineKind::ALL {
            let mut m = CompareMeter::new();
            prop_assert_eq!(counted_sort(v.clone(), kind, &mut m).into_vec(), expect.clone());
        }
    }
}

#[test]
fn mergesort_count_is_near_m_log_m() {
    // Deterministic pseudo-random values from a linear congruential sequence.
    let mut state = 0x2545_f491_4f6c_dd1du64;
    for m in [1_000usize, 10_000, 100_000] {
        let v: Vec<i64> = (0..m)
            .map(|_| {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                (state >> 33) as i64
            })
            .collect();
        let mut meter = CompareMeter::new();
        counted_sort(v, BaselineKind::MergeSort, &mut meter);
        let mf = m as f64;
        let upper = mf * mf.log2();
        let c = meter.count() as f64;
        assert!(
            c <= upper && c >= upper - 2.0 * mf,
            "m={m}: {c} outside [{}, {upper}]",
            upper - 2.0 * mf
        );
    }
}

#[test]
fn quicksort_handles_sorted_and_constant_runs() {
    for v in [
        (0..5000).collect::<Vec<i64>>(),
        (0..5000).rev().collect(),
        vec![1; 5000],
    ] {
        let mut m = CompareMeter::new();
        let out = counted_sort(v.clone(), BaselineKind::QuickSort, &mut m).into_vec();
        let mut expect = v;
        expect.sort();
        assert_eq!(out, expect);
        assert!(m.count() < 5000 * 40, "{} comparisons", m.count());
    }
}
