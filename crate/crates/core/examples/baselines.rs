//! Compares the comparison count of the row-insertion sorter with merge sort
//! and quicksort over the enumerated sums, for a few sizes.
//!
//!     cargo run --release --example baselines

use sumset_sort::bench::{generate_inputs, ValueRange};
use sumset_sort::{counted_sort, enumerate_sums, sort_sumset, Backend, BaselineKind, CompareMeter};

fn main() -> sumset_sort::Result<()> {
    println!(
        "{:>6} {:>12} {:>12} {:>12} {:>10}",
        "n", "proposed", "mergesort", "quicksort", "prop/n^2"
    );
    for n in [25usize, 50, 100, 200, 400] {
        let (x, y) = generate_inputs(n, 42, ValueRange::default());
        let mut proposed = CompareMeter::new();
        let z = sort_sumset(&x, &y, Backend::LinkedBlocks, &mut proposed)?;

        let mut counts = Vec::new();
        for kind in BaselineKind::ALL {
            let mut meter = CompareMeter::new();
            let sorted = counted_sort(enumerate_sums(&[x.clone(), y.clone()])?, kind, &mut meter);
            assert_eq!(sorted, z);
            counts.push(meter.count());
        }
        println!(
            "{n:>6} {:>12} {:>12} {:>12} {:>10.1}",
            proposed.count(),
            counts[0],
            counts[1],
            proposed.count() as f64 / (n * n) as f64
        );
    }
    Ok(())
}
