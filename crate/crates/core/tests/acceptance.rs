// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero when any
// gating criterion fails. Run with `cargo test --test acceptance`.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::Instant;

use sumset_sort::bench::{derive_seed, generate_inputs, run_suite, tn2_stability, Algorithm, BenchConfig, ValueRange};
use sumset_sort::kfold::merge_budget_per_element;
use sumset_sort::{
    low_vector, matrix_property_check, oracle_sorted_sumset, sort_kfold_with_stats, trace_sort, Backend, CompareMeter,
    InsertionTrace, SortedSequence,
};

const SEED: u64 = 42;
const C1_SIZES: [usize; 7] = [1, 2, 3, 10, 50, 100, 256];
const C1_INSTANCES_PER_SIZE: usize = 100;
const C1_TIME_LIMIT_S: f64 = 30.0;
const C5_CASES: [(usize, usize); 5] = [(3, 2), (3, 5), (3, 10), (4, 5), (5, 4)];
const C5_TIME_LIMIT_S: f64 = 60.0;
const C6_INSTANCES: usize = 50;
const C6_THRESHOLDS: usize = 5;
const C7_SIZES: [usize; 4] = [100, 200, 500, 1000];
const C8_SIZES: [usize; 3] = [500, 1000, 2000];
const C8_RATIO_BAND: (f64, f64) = (1.0, 2.0);
const C8_SPREAD_LIMIT: f64 = 3.0;
const TRIALS: usize = 10;
const GOLDEN_COMPARISONS: &str = include_str!("golden/comparisons_seed42.csv");

#[derive(Default)]
struct Suite {
    gating_failures: usize,
    // (criterion number, suffix, printed lines)
    entries: Vec<(u32, String, Vec<String>)>,
}

impl Suite {
    fn report(&mut self, id: &str, name: &str, pass: bool, gating: bool, detail: impl AsRef<str>) {
        let tag = match (pass, gating) {
            (true, _) => "PASS",
            (false, true) => "FAIL",
            (false, false) => "FAIL (report-only)",
        };
        if !pass && gating {
            self.gating_failures += 1;
        }
        let split = id.find(|c: char| !c.is_ascii_digit()).unwrap_or(id.len());
        let line = format!("[{tag}] {id:>3} {name}: {}", detail.as_ref());
        self.entries
            .push((id[..split].parse().unwrap(), id[split..].to_owned(), vec![line]));
    }

    // Indented detail under the most recent criterion.
    fn note(&mut self, text: impl AsRef<str>) {
        let lines = &mut self.entries.last_mut().expect("note after report").2;
        lines.push(format!("      {}", text.as_ref()));
    }

    fn print(&mut self) {
        self.entries.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        for (_, _, lines) in &self.entries {
            for line in lines {
                println!("{line}");
            }
        }
    }
}

struct Instance {
    label: String,
    x: SortedSequence<i64>,
    y: SortedSequence<i64>,
}

fn seq(v: Vec<i64>) -> SortedSequence<i64> {
    SortedSequence::from_unsorted(v)
}

// Every tenth instance is all-equal, three in ten draw from a narrow range so
// sums repeat heavily, the rest use the default range.
fn random_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    for n in C1_SIZES {
        for t in 0..C1_INSTANCES_PER_SIZE {
            let seed = derive_seed(SEED, n, t);
            let (label, x, y) = match t % 10 {
                0 => {
                    let (x, y) = generate_inputs(1, seed, ValueRange::default());
                    ("all-equal", seq(vec![x[0]; n]), seq(vec![y[0]; n]))
                }
                1..=3 => {
                    let hi = (n as i64 / 4).max(1);
                    let (x, y) = generate_inputs(n, seed, ValueRange { lo: 0, hi });
                    ("duplicates", x, y)
                }
                _ => {
                    let (x, y) = generate_inputs(n, seed, ValueRange::default());
                    ("uniform", x, y)
                }
            };
            out.push(Instance {
                label: format!("{label} n={n} trial={t}"),
                x,
                y,
            });
        }
    }
    out
}

fn adversarial_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    for n in [10usize, 50, 100, 256] {
        let ni = n as i64;
        let idx = || 0..ni;
        let cases: Vec<(&str, Vec<i64>, Vec<i64>)> = vec![
            ("progression x=i y=i", idx().collect(), idx().collect()),
            (
                "progression x=n*i y=i",
                idx().map(|i| i * ni).collect(),
                idx().collect(),
            ),
            (
                "progression x=i y=n*i",
                idx().collect(),
                idx().map(|i| i * ni).collect(),
            ),
            (
                "cluster+outlier",
                idx()
                    .map(|i| if i + 1 < ni { 5000 + i % 3 } else { 1_000_000 })
                    .collect(),
                idx()
                    .map(|i| if i + 1 < ni { 5000 + i % 3 } else { 1_000_000 })
                    .collect(),
            ),
            (
                "outlier+cluster",
                idx().map(|i| if i == 0 { -1_000_000 } else { 5000 }).collect(),
                idx().collect(),
            ),
            ("all-equal", vec![7; n], vec![3; n]),
            ("equal x distinct y", vec![7; n], idx().collect()),
        ];
        for (label, x, y) in cases {
            out.push(Instance {
                label: format!("{label} n={n}"),
                x: seq(x),
                y: seq(y),
            });
        }
    }
    out
}

fn dump(inst: &Instance, t: &InsertionTrace<i64>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "instance: {}", inst.label);
    let _ = writeln!(s, "X = {:?}", inst.x.as_slice());
    let _ = writeln!(s, "Y = {:?}", inst.y.as_slice());
    let _ = writeln!(
        s,
        "comparisons = {} (2n^2 = {})",
        t.total_comparisons,
        2 * inst.x.len() * inst.y.len()
    );
    let _ = writeln!(s, "ip_per_row = {:?}", t.ip_per_row);
    let _ = writeln!(s, "cp_end_per_row = {:?}", t.cp_end_per_row);
    let _ = writeln!(s, "advances_per_row = {:?}", t.advances_per_row);
    let _ = writeln!(s, "key_below_ip = {:?}", t.key_below_ip);
    s
}

fn pairwise_criteria(suite: &mut Suite) {
    let start = Instant::now();
    let random = random_instances();
    let adversarial = adversarial_instances();

    let mut oracle_mismatch = Vec::new();
    let mut invariant_failures = Vec::new();
    let mut backend_mismatch = Vec::new();
    let mut over_bound: Vec<(String, f64)> = Vec::new();
    let mut first_dump: Option<String> = None;
    let mut worst_ratio_by_size: Vec<(usize, f64)> = Vec::new();
    let mut c1_time = 0.0;

    for (pass, instances) in [("random", &random), ("adversarial", &adversarial)] {
        for inst in instances.iter() {
            let n = inst.x.len();
            let oracle = oracle_sorted_sumset(&[inst.x.clone(), inst.y.clone()]).unwrap();
            let low = low_vector(&inst.x, &inst.y).unwrap();
            let (z, t) = trace_sort(&inst.x, &inst.y, Backend::LinkedBlocks).unwrap();
            if z != oracle {
                oracle_mismatch.push(inst.label.clone());
            }
            if let Err(msg) = t.check_invariants(&low) {
                invariant_failures.push(format!("{}: {msg}", inst.label));
            }
            if pass == "random" {
                let (z2, t2) = trace_sort(&inst.x, &inst.y, Backend::Contiguous).unwrap();
                if z2 != z || t2 != t {
                    backend_mismatch.push(inst.label.clone());
                }
            }
            let n2 = (n * n) as f64;
            let ratio = t.total_comparisons as f64 / n2;
            if t.total_comparisons > 2 * (n * n) as u64 {
                over_bound.push((inst.label.clone(), ratio));
                if first_dump.is_none() {
                    first_dump = Some(dump(inst, &t));
                }
            }
            if pass == "random" {
                match worst_ratio_by_size.iter_mut().find(|(m, _)| *m == n) {
                    Some((_, w)) => *w = w.max(ratio),
                    None => worst_ratio_by_size.push((n, ratio)),
                }
            }
        }
        if pass == "random" {
            c1_time = start.elapsed().as_secs_f64();
        }
    }

    let total = random.len();
    suite.report(
        "1",
        "correctness vs oracle",
        oracle_mismatch.is_empty() && c1_time < C1_TIME_LIMIT_S,
        true,
        format!(
            "{} / {} instances differ (incl. adversarial); {c1_time:.1} s for the random set incl. both backends (limit {C1_TIME_LIMIT_S} s){}",
            oracle_mismatch.len(),
            random.len() + adversarial.len(),
            oracle_mismatch.first().map(|l| format!("; first: {l}")).unwrap_or_default()
        ),
    );

    let checked = random.len() + adversarial.len();
    let worst = over_bound.iter().map(|(_, r)| *r).fold(0.0, f64::max);
    let sizes: Vec<String> = worst_ratio_by_size
        .iter()
        .map(|(n, r)| format!("n={n}: {r:.2}"))
        .collect();
    suite.report(
        "2",
        "comparisons <= 2n^2",
        over_bound.is_empty(),
        true,
        format!(
            "{} / {checked} instances over the bound; worst comparisons/n^2 = {worst:.2}; worst per random size [{}]",
            over_bound.len(),
            sizes.join(", ")
        ),
    );
    if let Some(d) = first_dump {
        let path = Path::new(env!("CARGO_TARGET_TMPDIR")).join("criterion2_violations.txt");
        let mut all = d.clone();
        for (label, r) in &over_bound {
            let _ = writeln!(all, "{label}: comparisons/n^2 = {r:.3}");
        }
        let _ = fs::write(&path, all);
        suite.note("first violating instance:");
        for line in d.lines() {
            suite.note(format!("  {line}"));
        }
        suite.note(format!("full list: {}", path.display()));
    }

    suite.report(
        "4",
        "insertion-pointer invariants",
        invariant_failures.is_empty(),
        true,
        format!(
            "{} / {checked} instances fail{}",
            invariant_failures.len(),
            invariant_failures
                .first()
                .map(|l| format!("; first: {l}"))
                .unwrap_or_default()
        ),
    );
    suite.report(
        "9",
        "backend equivalence",
        backend_mismatch.is_empty(),
        true,
        format!(
            "{} / {total} instances differ in output, trace or count",
            backend_mismatch.len()
        ),
    );
}

fn worked_example(suite: &mut Suite) {
    let x = seq(vec![2, 4, 6]);
    let y = seq(vec![1, 3, 5]);
    let low = low_vector(&x, &y).unwrap();
    let mut ok = true;
    let mut detail = Vec::new();
    for backend in Backend::ALL {
        let (z, t) = trace_sort(&x, &y, backend).unwrap();
        ok &= z.as_slice() == [3, 5, 5, 7, 7, 7, 9, 9, 11];
        ok &= t.ip_per_row.get(1) == Some(&1) && z.len() == 9;
        detail.push(format!(
            "{backend}: ip_per_row {:?}, {} comparisons",
            t.ip_per_row, t.total_comparisons
        ));
    }
    ok &= low == [3, 5, 7];
    suite.report(
        "3",
        "worked example",
        ok,
        true,
        format!("low {low:?}; {}", detail.join("; ")),
    );
}

fn kfold_criterion(suite: &mut Suite) {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut worst: f64 = 0.0;
    for (k, n) in C5_CASES {
        for trial in 0..10 {
            let lists: Vec<SortedSequence<i64>> = (0..k)
                .map(|i| {
                    generate_inputs(
                        n,
                        derive_seed(SEED ^ k as u64, n, trial * k + i),
                        ValueRange { lo: 0, hi: 50 },
                    )
                    .0
                })
                .collect();
            let mut meter = CompareMeter::new();
            let (z, stats) = sort_kfold_with_stats(&lists, Backend::LinkedBlocks, &mut meter).unwrap();
            if z != oracle_sorted_sumset(&lists).unwrap() {
                failures.push(format!("(k={k}, n={n}) trial {trial}: output differs"));
            }
            let budget = merge_budget_per_element(n) as f64;
            for &(c, len) in &stats.merges {
                let per = c as f64 / len as f64;
                worst = worst.max(per / budget);
                if per > budget {
                    failures.push(format!(
                        "(k={k}, n={n}) trial {trial}: {per:.2} comparisons per element > {budget}"
                    ));
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    suite.report(
        "5",
        "k-fold equivalence and merge budget",
        failures.is_empty() && secs < C5_TIME_LIMIT_S,
        true,
        format!(
            "{} failures over {} runs; peak merge cost {:.0}% of 2(ceil(log2 n)+1); {secs:.2} s{}",
            failures.len(),
            C5_CASES.len() * 10,
            worst * 100.0,
            failures.first().map(|l| format!("; first: {l}")).unwrap_or_default()
        ),
    );
}

fn matrix_criterion(suite: &mut Suite) {
    let mut violations = Vec::new();
    for t in 0..C6_INSTANCES {
        let n = 1 + (t * 13) % 64;
        let seed = derive_seed(SEED, n, 10_000 + t);
        let range = if t % 3 == 0 {
            ValueRange { lo: 0, hi: 20 }
        } else {
            ValueRange::default()
        };
        let (x, y) = generate_inputs(n, seed, range);
        // Thresholds are drawn from the sums themselves plus one below the minimum.
        let probes = generate_inputs(
            C6_THRESHOLDS,
            seed ^ 1,
            ValueRange {
                lo: 0,
                hi: (n * n) as i64 - 1,
            },
        );
        let sums: Vec<i64> = x.iter().flat_map(|&a| y.iter().map(move |&b| a + b)).collect();
        let mut thresholds: Vec<i64> = probes
            .0
            .iter()
            .take(C6_THRESHOLDS - 1)
            .map(|&p| sums[p as usize])
            .collect();
        thresholds.push(x[0] + y[0] - 1);
        for th in thresholds {
            let r = matrix_property_check(&x, &y, Some(th)).unwrap();
            if !r.all_hold() {
                violations.push(format!("n={n} t={t} threshold={th}: {:?}", r.first_violation));
            }
        }
    }
    suite.report(
        "6",
        "matrix properties",
        violations.is_empty(),
        true,
        format!(
            "{} violations over {} instances x {C6_THRESHOLDS} thresholds{}",
            violations.len(),
            C6_INSTANCES,
            violations.first().map(|l| format!("; first: {l}")).unwrap_or_default()
        ),
    );
}

fn mean_of(records: &[sumset_sort::bench::BenchRecord], n: usize, a: Algorithm) -> f64 {
    records
        .iter()
        .find(|r| r.n == n && r.algorithm == a)
        .unwrap()
        .mean_comparisons
}

fn baseline_criterion(suite: &mut Suite) {
    let config = BenchConfig {
        sizes: C7_SIZES.to_vec(),
        trials: TRIALS,
        seed: SEED,
        ..BenchConfig::default()
    };
    let records = run_suite(&config).unwrap();
    let mut below_both = true;
    let mut ratios = Vec::new();
    let mut rows = Vec::new();
    for n in C7_SIZES {
        let p = mean_of(&records, n, Algorithm::Proposed);
        let m = mean_of(&records, n, Algorithm::MergeSort);
        let q = mean_of(&records, n, Algorithm::QuickSort);
        below_both &= p < m && p < q;
        ratios.push(m / p);
        rows.push(format!("n={n}: proposed {p:.0}, mergesort {m:.0}, quicksort {q:.0}"));
    }
    let grows = ratios.windows(2).all(|w| w[1] > w[0]);
    let ratio_text: Vec<String> = ratios.iter().map(|r| format!("{r:.3}")).collect();
    suite.report(
        "7",
        "baseline separation",
        below_both && grows,
        true,
        format!(
            "proposed below both baselines: {below_both}; mergesort/proposed [{}] increasing: {grows}",
            ratio_text.join(", ")
        ),
    );
    for row in rows {
        suite.note(row);
    }
    let expected: Vec<String> = C7_SIZES
        .iter()
        .zip(&ratios)
        .map(|(&n, r)| format!("{:+.0}%", (r / ((n * n) as f64).log2() * 2.0 - 1.0) * 100.0))
        .collect();
    suite.note(format!(
        "mergesort/proposed vs log2(n^2)/2: deviation [{}] (tolerance +-30%)",
        expected.join(", ")
    ));
    let p100 = mean_of(&records, 100, Algorithm::Proposed);
    let p200 = mean_of(&records, 200, Algorithm::Proposed);
    suite.note(format!(
        "proposed mean at n=100: {p100:.0} (2n^2 = 20000); n=200/n=100 ratio {:.2} (4 expected for n^2 growth)",
        p200 / p100
    ));
}

fn constancy_criterion(suite: &mut Suite) {
    let config = BenchConfig {
        sizes: C8_SIZES.to_vec(),
        trials: TRIALS,
        seed: SEED,
        backend: Backend::LinkedBlocks,
        ..BenchConfig::default()
    };
    let report = tn2_stability(&config).unwrap();
    let mut in_band = true;
    let mut ratios = Vec::new();
    for r in &report.records {
        let ratio = r.mean_comparisons / (r.n * r.n) as f64;
        in_band &= (C8_RATIO_BAND.0..=C8_RATIO_BAND.1).contains(&ratio);
        ratios.push(format!("n={}: {ratio:.2}", r.n));
    }
    suite.report(
        "8a",
        "comparisons/n^2 in [1, 2]",
        in_band,
        true,
        format!("[{}]", ratios.join(", ")),
    );
    let means: Vec<f64> = report.records.iter().map(|r| r.mean_t_over_n2_ms).collect();
    let max = means.iter().cloned().fold(f64::MIN, f64::max);
    let min = means.iter().cloned().fold(f64::MAX, f64::min);
    let spread = max / min;
    let cells: Vec<String> = report
        .records
        .iter()
        .map(|r| {
            format!(
                "n={}: {:.3e} +- {:.1e} ms",
                r.n, r.mean_t_over_n2_ms, r.std_t_over_n2_ms
            )
        })
        .collect();
    suite.report(
        "8b",
        "T/n^2 spread <= 3 (wall time)",
        spread <= C8_SPREAD_LIMIT,
        false,
        format!("max/min = {spread:.2} over [{}]", cells.join(", ")),
    );
}

fn golden_criterion(suite: &mut Suite) {
    let dir = tempfile::tempdir().unwrap();
    let status = Command::new(env!("CARGO_BIN_EXE_sumset"))
        .args(["bench", "--sizes", "10,20", "--trials", "2", "--seed", "42", "--out"])
        .arg(dir.path())
        .env_remove("SUMSET_SEED")
        .output()
        .unwrap();
    let comparisons = fs::read_to_string(dir.path().join("comparisons.csv")).unwrap_or_default();
    let tn2 = fs::read_to_string(dir.path().join("tn2.csv")).unwrap_or_default();
    let tn2_lines: Vec<&str> = tn2.split_terminator('\n').collect();
    let tn2_ok = tn2_lines.first() == Some(&"n,mean_duration_ms,std_dev_ms")
        && tn2_lines.len() == 3
        && tn2_lines[1].starts_with("10,")
        && tn2_lines[2].starts_with("20,")
        && !tn2.contains('\r');
    let exact = comparisons == GOLDEN_COMPARISONS;
    suite.report(
        "10",
        "CSV golden files",
        status.status.success() && exact && tn2_ok,
        true,
        format!("comparisons.csv byte-identical: {exact}; tn2.csv schema: {tn2_ok}"),
    );
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut suite = Suite::default();
    pairwise_criteria(&mut suite);
    worked_example(&mut suite);
    kfold_criterion(&mut suite);
    matrix_criterion(&mut suite);
    baseline_criterion(&mut suite);
    constancy_criterion(&mut suite);
    golden_criterion(&mut suite);
    suite.print();
    println!(
        "acceptance: {} gating criteria failed ({:.1} s)",
        suite.gating_failures,
        start.elapsed().as_secs_f64()
    );
    if suite.gating_failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
