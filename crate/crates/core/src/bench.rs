//! Seeded benchmark runs of the structured sorter against the baselines.
//!
//! Inputs come from a pinned generator: `ChaCha8Rng` seeded through
//! `seed_from_u64`, drawing all of `X` before `Y` from an inclusive uniform
//! range. Every trial gets its own seed derived from `(seed, n, trial)`, and
//! all algorithms in a trial see the same inputs. Comparison counts are
//! therefore bit-identical across runs and platforms; wall times are not.

use std::fmt;
use std::hint::black_box;
use std::str::FromStr;
use std::time::Instant;

use rand::distributions::{Distribution, Uniform};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::baseline::{counted_sort, enumerate_sums, BaselineKind};
use crate::error::{Error, Result};
use crate::meter::CompareMeter;
use crate::pairwise::sort_sumset;
use crate::sequence::SortedSequence;
use crate::store::Backend;

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_SIZES: [usize; 4] = [100, 200, 500, 1000];
pub const DEFAULT_TRIALS: usize = 10;
pub const DEFAULT_MAX_CELLS: u64 = 1 << 27;
pub const DEFAULT_STABILITY_RATIO: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Proposed,
    MergeSort,
    QuickSort,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Proposed, Algorithm::MergeSort, Algorithm::QuickSort];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Proposed => "proposed",
            Algorithm::MergeSort => "mergesort",
            Algorithm::QuickSort => "quicksort",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algorithm `{s}` (expected proposed|mergesort|quicksort)"))
    }
}

/// Inclusive key interval; parses from `lo:hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValueRange {
    pub lo: i64,
    pub hi: i64,
}

impl Default for ValueRange {
    fn default() -> Self {
        Self { lo: 0, hi: 10_000 }
    }
}

impl FromStr for ValueRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) = s.split_once(':').ok_or_else(|| format!("range `{s}` is not lo:hi"))?;
        let lo = lo.trim().parse::<i64>().map_err(|e| e.to_string())?;
        let hi = hi.trim().parse::<i64>().map_err(|e| e.to_string())?;
        if lo > hi {
            return Err(format!("empty range {lo}:{hi}"));
        }
        Ok(Self { lo, hi })
    }
}

impl fmt::Display for ValueRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub value_range: ValueRange,
    pub algorithms: Vec<Algorithm>,
    pub backend: Backend,
    /// Largest permitted `n^2`.
    pub max_cells: u64,
    /// `tn2_stability` flags a run whose top-half T/n^2 means spread wider
    /// than this max/min ratio.
    pub stability_ratio: f64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            sizes: DEFAULT_SIZES.to_vec(),
            trials: DEFAULT_TRIALS,
            seed: DEFAULT_SEED,
            value_range: ValueRange::default(),
            algorithms: Algorithm::ALL.to_vec(),
            backend: Backend::LinkedBlocks,
            max_cells: DEFAULT_MAX_CELLS,
            stability_ratio: DEFAULT_STABILITY_RATIO,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Config(m.to_owned()));
        if self.trials == 0 {
            return bad("trials must be at least 1");
        }
        if self.sizes.is_empty() || self.sizes.contains(&0) {
            return bad("sizes must be non-empty and all >= 1");
        }
        if self.algorithms.is_empty() {
            return bad("no algorithms selected");
        }
        if self.value_range.lo > self.value_range.hi {
            return bad("value range is empty");
        }
        for &n in &self.sizes {
            let cells = (n as u128) * (n as u128);
            if cells > u128::from(self.max_cells) {
                return Err(Error::ResourceLimit {
                    cells,
                    cap: self.max_cells,
                });
            }
        }
        Ok(())
    }
}

/// Aggregate of one `(n, algorithm)` cell over all trials.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub n: usize,
    pub algorithm: Algorithm,
    /// Per-trial comparison counts, in trial order.
    pub comparisons: Vec<u64>,
    pub mean_comparisons: f64,
    pub mean_time_ms: f64,
    pub std_time_ms: f64,
    pub mean_t_over_n2_ms: f64,
    pub std_t_over_n2_ms: f64,
    /// Set when any proposed-algorithm trial exceeded `2 n^2` comparisons.
    pub bound_exceeded: bool,
}

impl BenchRecord {
    pub fn max_comparisons(&self) -> u64 {
        self.comparisons.iter().copied().max().unwrap_or(0)
    }
}

/// splitmix64 finalizer over the run seed, size and trial index.
pub fn derive_seed(seed: u64, n: usize, trial: usize) -> u64 {
    let mut z = seed
        ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (trial as u64).wrapping_add(1).wrapping_mul(0xD1B5_4A32_D192_ED03);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Two sorted sequences of `n` uniform draws from `range` (X first, then Y).
pub fn generate_inputs(n: usize, seed: u64, range: ValueRange) -> (SortedSequence<i64>, SortedSequence<i64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dist = Uniform::new_inclusive(range.lo, range.hi);
    let x: Vec<i64> = (0..n).map(|_| dist.sample(&mut rng)).collect();
    let y: Vec<i64> = (0..n).map(|_| dist.sample(&mut rng)).collect();
    (SortedSequence::from_unsorted(x), SortedSequence::from_unsorted(y))
}

fn mean_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

/// Runs one trial of one algorithm; returns (comparisons, nanoseconds).
fn run_once(
    algorithm: Algorithm,
    x: &SortedSequence<i64>,
    y: &SortedSequence<i64>,
    backend: Backend,
) -> Result<(u64, u128)> {
    let mut meter = CompareMeter::new();
    let nanos = match algorithm {
        Algorithm::Proposed => {
            let start = Instant::now();
            let z = sort_sumset(x, y, backend, &mut meter)?;
            let nanos = start.elapsed().as_nanos();
            black_box(z);
            nanos
        }
        Algorithm::MergeSort | Algorithm::QuickSort => {
            let kind = if algorithm == Algorithm::MergeSort {
                BaselineKind::MergeSort
            } else {
                BaselineKind::QuickSort
            };
            let values = enumerate_sums(&[x.clone(), y.clone()])?;
            let start = Instant::now();
            let z = counted_sort(values, kind, &mut meter);
            let nanos = start.elapsed().as_nanos();
            black_box(z);
            nanos
        }
    };
    Ok((meter.count(), nanos))
}

/// One record per `(size, algorithm)`, sizes in config order and algorithms
/// in canonical order. Timing excludes input generation and enumeration.
pub fn run_suite(config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    config.validate()?;
    let mut algorithms = config.algorithms.clone();
    algorithms.sort();
    algorithms.dedup();

    let mut records = Vec::new();
    for &n in &config.sizes {
        let mut counts = vec![Vec::with_capacity(config.trials); algorithms.len()];
        let mut times_ms = vec![Vec::with_capacity(config.trials); algorithms.len()];
        for trial in 0..config.trials {
            let (x, y) = generate_inputs(n, derive_seed(config.seed, n, trial), config.value_range);
            for (a, &algorithm) in algorithms.iter().enumerate() {
                let (count, nanos) = run_once(algorithm, &x, &y, config.backend)?;
                counts[a].push(count);
                times_ms[a].push(nanos as f64 / 1e6);
            }
        }
        let n2 = (n * n) as f64;
        for (a, &algorithm) in algorithms.iter().enumerate() {
            let comparisons = std::mem::take(&mut counts[a]);
            let mean_comparisons = comparisons.iter().sum::<u64>() as f64 / config.trials as f64;
            let (mean_time_ms, std_time_ms) = mean_std(&times_ms[a]);
            let per_n2: Vec<f64> = times_ms[a].iter().map(|t| t / n2).collect();
            let (mean_t_over_n2_ms, std_t_over_n2_ms) = mean_std(&per_n2);
            let bound = 2 * (n as u64) * (n as u64);
            let bound_exceeded = algorithm == Algorithm::Proposed && comparisons.iter().any(|&c| c > bound);
            records.push(BenchRecord {
                n,
                algorithm,
                comparisons,
                mean_comparisons,
                mean_time_ms,
                std_time_ms,
                mean_t_over_n2_ms,
                std_t_over_n2_ms,
                bound_exceeded,
            });
        }
    }
    Ok(records)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Tn2Report {
    pub records: Vec<BenchRecord>,
    /// max/min of mean T/n^2 over the larger half of the sizes.
    pub spread: f64,
    pub stable: bool,
}

/// Runs only the proposed algorithm and summarizes T/n^2 per size.
pub fn tn2_stability(config: &BenchConfig) -> Result<Tn2Report> {
    let config = BenchConfig {
        algorithms: vec![Algorithm::Proposed],
        ..config.clone()
    };
    let records = run_suite(&config)?;
    let mut by_size: Vec<&BenchRecord> = records.iter().collect();
    by_size.sort_by_key(|r| r.n);
    let top = &by_size[by_size.len() / 2..];
    let means = top.iter().map(|r| r.mean_t_over_n2_ms);
    let max = means.clone().fold(f64::MIN, f64::max);
    let min = means.fold(f64::MAX, f64::min);
    let spread = if min > 0.0 { max / min } else { f64::INFINITY };
    Ok(Tn2Report {
        stable: spread <= config.stability_ratio,
        spread,
        records,
    })
}
