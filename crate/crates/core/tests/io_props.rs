use std::path::Path;

use proptest::prelude::*;
use sumset_sort::bench::{run_suite, BenchConfig};
use sumset_sort::io::{comparisons_table, format_keys, parse_sequence_text, Cell, CsvTable};
use sumset_sort::{FiniteF64, SortedSequence};

fn numeric_table() -> impl Strategy<Value = CsvTable> {
    (1usize..6, 0usize..8).prop_flat_map(|(cols, rows)| {
        let cell = prop_oneof![
            any::<i64>().prop_map(Cell::Int),
            (-1e12f64..1e12)
                .prop_filter("non-integral", |v| v.fract() != 0.0)
                .prop_map(Cell::Float),
        ];
        prop::collection::vec(prop::collection::vec(cell, cols), rows).prop_map(move |rows| CsvTable {
            header: (0..cols).map(|c| format!("c{c}")).collect(),
            rows,
        })
    })
}

proptest! {
    #[test]
    fn csv_round_trip(table in numeric_table()) {
        let bytes = table.to_csv_bytes().unwrap();
        let text = String::from_utf8(bytes).unwrap();
        prop_assert!(!text.contains('\r'));
        prop_assert_eq!(CsvTable::parse(&text).unwrap(), table);
    }

    #[test]
    fn sequence_text_round_trip(mut v in prop::collection::vec(any::<i64>(), 1..50)) {
        v.sort();
        let text = format_keys(&v);
        let back: SortedSequence<i64> = parse_sequence_text(&text, Path::new("mem")).unwrap();
        prop_assert_eq!(back.as_slice(), v.as_slice());
    }

    #[test]
    fn float_keys_round_trip_exactly(mut v in prop::collection::vec(-1e300f64..1e300, 1..30)) {
        v.sort_by(f64::total_cmp);
        let keys: Vec<FiniteF64> = v.iter().map(|&f| FiniteF64::new(f).unwrap()).collect();
        let back: SortedSequence<FiniteF64> = parse_sequence_text(&format_keys(&keys), Path::new("mem")).unwrap();
        prop_assert_eq!(back.as_slice(), keys.as_slice());
    }
}

#[test]
fn comparisons_table_matches_golden() {
    let config = BenchConfig {
        sizes: vec![10, 20],
        trials: 2,
        ..BenchConfig::default()
    };
    let records = run_suite(&config).unwrap();
    let bytes = comparisons_table(&records).to_csv_bytes().unwrap();
    assert_eq!(
        String::from_utf8(bytes).unwrap(),
        include_str!("golden/comparisons_seed42.csv")
    );
}

#[test]
fn counts_are_deterministic() {
    let config = BenchConfig {
        sizes: vec![30],
        trials: 3,
        seed: 7,
        ..BenchConfig::default()
    };
    let a: Vec<_> = run_suite(&config).unwrap().into_iter().map(|r| r.comparisons).collect();
    let b: Vec<_> = run_suite(&config).unwrap().into_iter().map(|r| r.comparisons).collect();
    assert_eq!(a, b);
}
