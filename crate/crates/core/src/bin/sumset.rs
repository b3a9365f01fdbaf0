//! Command-line front end: input generation, sorting, verification, k-fold
//! runs, benchmarks and matrix property checks.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 I/O error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sumset_sort::bench::{
    derive_seed, generate_inputs, run_suite, Algorithm, BenchConfig, ValueRange, DEFAULT_MAX_CELLS,
};
use sumset_sort::io::{comparisons_table, emit_csv, format_keys, parse_sequence_file, tn2_table, write_sequence_file};
use sumset_sort::{
    low_vector, matrix_property_check, oracle_sorted_sumset, sort_kfold_with_stats, trace_sort, Backend, CompareMeter,
    Error, FiniteF64, Key, SortedSequence,
};

#[derive(Parser)]
#[command(name = "sumset", version, about = "Sort sumsets X+Y with counted comparisons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SeedArgs {
    /// Run seed.
    #[arg(long, env = "SUMSET_SEED", default_value_t = sumset_sort::bench::DEFAULT_SEED)]
    seed: u64,
    /// Inclusive key range for generated inputs, `lo:hi`.
    #[arg(long, default_value = "0:10000")]
    range: ValueRange,
}

#[derive(Subcommand)]
enum Command {
    /// Write two random sorted inputs, x.txt and y.txt.
    Gen {
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[command(flatten)]
        seed: SeedArgs,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Sort X+Y from two key files.
    Sort {
        x: PathBuf,
        y: PathBuf,
        #[arg(long, default_value = "linked")]
        backend: Backend,
        /// Print the comparison count to stderr.
        #[arg(long)]
        count: bool,
        /// Print per-row pointer positions to stderr.
        #[arg(long)]
        trace: bool,
        /// Write the sorted sums here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Exit 1 if comparisons exceed 2·|X|·|Y|.
        #[arg(long)]
        strict: bool,
        /// Read keys as finite doubles instead of 64-bit integers.
        #[arg(long)]
        float: bool,
    },
    /// Sort a k-fold sumset from k key files, or from k random lists.
    Kfold {
        files: Vec<PathBuf>,
        /// Number of random lists when no files are given.
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Length of each random list when no files are given.
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[command(flatten)]
        seed: SeedArgs,
        #[arg(long, default_value = "linked")]
        backend: Backend,
        #[arg(long)]
        count: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        float: bool,
    },
    /// Check the sorter against the oracle on random instances.
    Verify {
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,10,50")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[command(flatten)]
        seed: SeedArgs,
        /// Also fail when the comparison bound 2n² is exceeded.
        #[arg(long)]
        strict: bool,
    },
    /// Run the benchmark suite and write comparisons.csv and tn2.csv.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "100,200,500,1000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[command(flatten)]
        seed: SeedArgs,
        #[arg(long, default_value = "linked")]
        backend: Backend,
        /// proposed | mergesort | quicksort | all
        #[arg(long, default_value = "all")]
        algo: String,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Largest permitted n² per size.
        #[arg(long, default_value_t = DEFAULT_MAX_CELLS)]
        max_cells: u64,
        /// Exit 1 if any proposed run exceeded 2n² comparisons.
        #[arg(long)]
        strict: bool,
    },
    /// Check monotonicity, Monge and threshold-prefix properties of X+Y.
    Props {
        x: PathBuf,
        y: PathBuf,
        #[arg(long)]
        threshold: Option<String>,
        #[arg(long)]
        float: bool,
    },
}

enum Failure {
    Verification(String),
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Error(Error::Io(e))
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen { n, seed, out } => gen(n, &seed, &out),
        Command::Sort {
            float: true,
            x,
            y,
            backend,
            count,
            trace,
            out,
            strict,
        } => sort::<FiniteF64>(&x, &y, backend, count, trace, out.as_deref(), strict),
        Command::Sort {
            x,
            y,
            backend,
            count,
            trace,
            out,
            strict,
            ..
        } => sort::<i64>(&x, &y, backend, count, trace, out.as_deref(), strict),
        Command::Kfold {
            files,
            k,
            n,
            seed,
            backend,
            count,
            out,
            float,
        } => {
            let out = out.as_deref();
            if files.is_empty() {
                kfold(&random_lists(k, n, &seed), backend, count, out)
            } else if float {
                read_lists::<FiniteF64>(&files).and_then(|l| kfold(&l, backend, count, out))
            } else {
                read_lists::<i64>(&files).and_then(|l| kfold(&l, backend, count, out))
            }
        }
        Command::Verify {
            sizes,
            trials,
            seed,
            strict,
        } => verify(&sizes, trials, &seed, strict),
        Command::Bench {
            sizes,
            trials,
            seed,
            backend,
            algo,
            out,
            max_cells,
            strict,
        } => bench(sizes, trials, &seed, backend, &algo, &out, max_cells, strict),
        Command::Props { x, y, threshold, float } => {
            if float {
                props::<FiniteF64>(&x, &y, threshold.as_deref())
            } else {
                props::<i64>(&x, &y, threshold.as_deref())
            }
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Error(Error::Io(e))) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::Io(_) | Error::Csv(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn write_keys<K: Key>(keys: &[K], out: Option<&Path>) -> CmdResult {
    let text = format_keys(keys);
    match out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn gen(n: usize, seed: &SeedArgs, out: &Path) -> CmdResult {
    if n == 0 {
        return Err(Error::Config("--n must be at least 1".into()).into());
    }
    let (x, y) = generate_inputs(n, seed.seed, seed.range);
    fs::create_dir_all(out)?;
    write_sequence_file(out.join("x.txt"), &x)?;
    write_sequence_file(out.join("y.txt"), &y)?;
    println!("{}\n{}", out.join("x.txt").display(), out.join("y.txt").display());
    Ok(())
}

fn sort<K: Key>(
    x: &Path,
    y: &Path,
    backend: Backend,
    count: bool,
    trace: bool,
    out: Option<&Path>,
    strict: bool,
) -> CmdResult {
    let x: SortedSequence<K> = parse_sequence_file(x)?;
    let y: SortedSequence<K> = parse_sequence_file(y)?;
    let (z, t) = trace_sort(&x, &y, backend)?;
    let bound = 2 * x.len() as u64 * y.len() as u64;
    if count {
        eprintln!("comparisons: {} (2·|X|·|Y| = {bound})", t.total_comparisons);
    }
    if trace {
        for i in 0..t.ip_per_row.len() {
            eprintln!(
                "row {i}: ip={} cp_end={} advances={}",
                t.ip_per_row[i], t.cp_end_per_row[i], t.advances_per_row[i]
            );
        }
    }
    write_keys(&z, out)?;
    if strict && t.total_comparisons > bound {
        return Err(Failure::Verification(format!(
            "{} comparisons exceed 2·|X|·|Y| = {bound}",
            t.total_comparisons
        )));
    }
    Ok(())
}

fn random_lists(k: usize, n: usize, seed: &SeedArgs) -> Vec<SortedSequence<i64>> {
    let mut lists = Vec::with_capacity(k + 1);
    for i in 0..k.div_ceil(2) {
        let (a, b) = generate_inputs(n, derive_seed(seed.seed, n, i), seed.range);
        lists.push(a);
        lists.push(b);
    }
    lists.truncate(k);
    lists
}

fn kfold<K: Key>(lists: &[SortedSequence<K>], backend: Backend, count: bool, out: Option<&Path>) -> CmdResult {
    let mut meter = CompareMeter::new();
    let (z, stats) = sort_kfold_with_stats(lists, backend, &mut meter)?;
    if count {
        eprintln!("base comparisons: {}", stats.base_comparisons);
        for (i, (c, len)) in stats.merges.iter().enumerate() {
            eprintln!("merge {}: {c} comparisons for {len} outputs", i + 3);
        }
        eprintln!("total comparisons: {}", meter.count());
    }
    write_keys(&z, out)
}

fn read_lists<K: Key>(files: &[PathBuf]) -> Result<Vec<SortedSequence<K>>, Failure> {
    Ok(files.iter().map(parse_sequence_file).collect::<Result<_, _>>()?)
}

fn verify(sizes: &[usize], trials: usize, seed: &SeedArgs, strict: bool) -> CmdResult {
    let mut failures = Vec::new();
    let mut over_bound = 0usize;
    let mut instances = 0usize;
    for &n in sizes {
        if n == 0 {
            return Err(Error::Config("sizes must be >= 1".into()).into());
        }
        for trial in 0..trials {
            let (x, y) = generate_inputs(n, derive_seed(seed.seed, n, trial), seed.range);
            let oracle = oracle_sorted_sumset(&[x.clone(), y.clone()])?;
            let low = low_vector(&x, &y)?;
            let mut first: Option<(SortedSequence<i64>, _)> = None;
            for backend in Backend::ALL {
                let (z, t) = trace_sort(&x, &y, backend)?;
                if z != oracle {
                    failures.push(format!("n={n} trial={trial} {backend}: output differs from oracle"));
                }
                if let Err(msg) = t.check_invariants(&low) {
                    failures.push(format!("n={n} trial={trial} {backend}: {msg}"));
                }
                match &first {
                    None => first = Some((z, t)),
                    Some((z0, t0)) => {
                        if *z0 != z || *t0 != t {
                            failures.push(format!("n={n} trial={trial}: backends disagree"));
                        }
                    }
                }
            }
            let t = first.expect("two backends").1;
            let bound = 2 * (n as u64) * (n as u64);
            if t.total_comparisons > bound {
                over_bound += 1;
                eprintln!(
                    "n={n} trial={trial}: {} comparisons > 2n² = {bound}",
                    t.total_comparisons
                );
            }
            instances += 1;
        }
    }
    println!(
        "{instances} instances: {} correctness failures, {over_bound} over the 2n² comparison bound",
        failures.len()
    );
    for f in &failures {
        eprintln!("{f}");
    }
    if !failures.is_empty() {
        return Err(Failure::Verification(format!("{} failures", failures.len())));
    }
    if strict && over_bound > 0 {
        return Err(Failure::Verification(format!(
            "{over_bound} instances over the comparison bound"
        )));
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn bench(
    sizes: Vec<usize>,
    trials: usize,
    seed: &SeedArgs,
    backend: Backend,
    algo: &str,
    out: &Path,
    max_cells: u64,
    strict: bool,
) -> CmdResult {
    let algorithms = if algo == "all" {
        Algorithm::ALL.to_vec()
    } else {
        algo.split(',')
            .map(|a| a.parse::<Algorithm>())
            .collect::<Result<_, _>>()
            .map_err(Error::Config)?
    };
    let config = BenchConfig {
        sizes,
        trials,
        seed: seed.seed,
        value_range: seed.range,
        algorithms,
        backend,
        max_cells,
        ..BenchConfig::default()
    };
    let records = run_suite(&config)?;
    fs::create_dir_all(out)?;
    emit_csv(&comparisons_table(&records), out.join("comparisons.csv"))?;
    if records.iter().any(|r| r.algorithm == Algorithm::Proposed) {
        emit_csv(&tn2_table(&records), out.join("tn2.csv"))?;
    }
    let mut stdout = std::io::stdout().lock();
    writeln!(
        stdout,
        "{:>7} {:>10} {:>16} {:>12} {:>14}",
        "n", "algorithm", "comparisons", "time_ms", "T/n²_ms"
    )?;
    for r in &records {
        writeln!(
            stdout,
            "{:>7} {:>10} {:>16.1} {:>12.3} {:>14.3e}{}",
            r.n,
            r.algorithm,
            r.mean_comparisons,
            r.mean_time_ms,
            r.mean_t_over_n2_ms,
            if r.bound_exceeded { "  > 2n²" } else { "" }
        )?;
    }
    if strict && records.iter().any(|r| r.bound_exceeded) {
        return Err(Failure::Verification("proposed comparisons exceeded 2n²".into()));
    }
    Ok(())
}

fn props<K: Key>(x: &Path, y: &Path, threshold: Option<&str>) -> CmdResult {
    let x: SortedSequence<K> = parse_sequence_file(x)?;
    let y: SortedSequence<K> = parse_sequence_file(y)?;
    let threshold = threshold
        .map(|t| K::parse_key(t).map_err(|m| Error::Config(format!("threshold: {m}"))))
        .transpose()?;
    let report = matrix_property_check(&x, &y, threshold)?;
    println!("rows_monotone: {}", report.rows_monotone);
    println!("cols_monotone: {}", report.cols_monotone);
    println!("monge_holds: {}", report.monge_holds);
    println!("ferrers_prefix_holds: {}", report.ferrers_prefix_holds);
    if let Some(v) = report.first_violation {
        println!("first_violation: {v:?}");
        return Err(Failure::Verification("matrix property violated".into()));
    }
    Ok(())
}
