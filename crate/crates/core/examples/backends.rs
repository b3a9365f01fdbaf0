//! Runs the same instance on both ranked-store backends: identical output and
//! counts, different wall time.
//!
//!     cargo run --release --example backends -- 400

use std::time::Instant;

use sumset_sort::bench::{generate_inputs, ValueRange};
use sumset_sort::{sort_sumset, Backend, CompareMeter};

fn main() -> sumset_sort::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(300);
    let (x, y) = generate_inputs(n, 42, ValueRange::default());

    let mut outputs = Vec::new();
    for backend in Backend::ALL {
        let mut meter = CompareMeter::new();
        let start = Instant::now();
        let z = sort_sumset(&x, &y, backend, &mut meter)?;
        println!(
            "{backend:>10}: {} comparisons, {:.1} ms",
            meter.count(),
            start.elapsed().as_secs_f64() * 1e3
        );
        outputs.push(z);
    }
    assert_eq!(outputs[0], outputs[1]);
    Ok(())
}
