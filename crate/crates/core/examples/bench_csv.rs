//! Runs a small benchmark suite and writes the two CSV tables to a directory
//! (default: a fresh temp dir), then prints them.
//!
//!     cargo run --release --example bench_csv -- out/

use std::path::PathBuf;

use sumset_sort::bench::{run_suite, BenchConfig};
use sumset_sort::io::{comparisons_table, emit_csv, tn2_table};

fn main() -> sumset_sort::Result<()> {
    let dir = match std::env::args().nth(1) {
        Some(d) => PathBuf::from(d),
        None => std::env::temp_dir().join("sumset-bench"),
    };
    std::fs::create_dir_all(&dir)?;

    let config = BenchConfig {
        sizes: vec![50, 100, 200],
        trials: 3,
        ..BenchConfig::default()
    };
    let records = run_suite(&config)?;
    for (name, table) in [
        ("comparisons.csv", comparisons_table(&records)),
        ("tn2.csv", tn2_table(&records)),
    ] {
        let path = dir.join(name);
        emit_csv(&table, &path)?;
        println!("== {}", path.display());
        print!("{}", std::fs::read_to_string(&path)?);
    }
    Ok(())
}
