//! Sorts X = [2, 4, 6], Y = [1, 3, 5] and prints where the insertion pointer
//! sits at the start of each row.
//!
//!     cargo run --example worked_example

use sumset_sort::{low_vector, trace_sort, Backend, SortedSequence};

fn main() -> sumset_sort::Result<()> {
    let x = SortedSequence::new(vec![2i64, 4, 6])?;
    let y = SortedSequence::new(vec![1i64, 3, 5])?;

    println!("low = {:?}", low_vector(&x, &y)?);
    let (z, trace) = trace_sort(&x, &y, Backend::LinkedBlocks)?;
    for row in 0..x.len() {
        let ranks = &trace.insert_ranks[row * y.len()..(row + 1) * y.len()];
        println!(
            "row {row}: starts at rank {}, inserts at {ranks:?}, ends at {}",
            trace.ip_per_row[row], trace.cp_end_per_row[row]
        );
    }
    println!("Z = {:?}", z.as_slice());
    println!(
        "{} comparisons ({} lookahead tests unmetered)",
        trace.total_comparisons, trace.lookahead_tests
    );
    Ok(())
}
