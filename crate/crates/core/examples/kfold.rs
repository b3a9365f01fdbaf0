//! Sorts a 3-fold sumset and shows how the comparisons split between the
//! pairwise base case and the translated-copy merge.
//!
//!     cargo run --example kfold

use sumset_sort::kfold::merge_budget_per_element;
use sumset_sort::{oracle_sorted_sumset, sort_kfold_with_stats, Backend, CompareMeter, SortedSequence};

fn main() -> sumset_sort::Result<()> {
    let lists = vec![
        SortedSequence::new(vec![0i64, 10, 20, 30])?,
        SortedSequence::new(vec![1, 2, 3, 4])?,
        SortedSequence::new(vec![100, 200, 300, 400])?,
    ];
    let mut meter = CompareMeter::new();
    let (z, stats) = sort_kfold_with_stats(&lists, Backend::LinkedBlocks, &mut meter)?;
    assert_eq!(z, oracle_sorted_sumset(&lists)?);

    println!("{} sums, first ten {:?}", z.len(), &z[..10]);
    println!("X1+X2: {} comparisons", stats.base_comparisons);
    let budget = merge_budget_per_element(lists[0].len());
    for (c, len) in &stats.merges {
        println!(
            "merge: {c} comparisons for {len} outputs ({:.2} each, budget {budget})",
            *c as f64 / *len as f64
        );
    }
    Ok(())
}
