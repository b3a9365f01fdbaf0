//! Sequence files and CSV tables.
//!
//! Sequence files hold one key per line; blank lines and lines starting with
//! `#` are skipped. CSV output is comma-separated with `\n` line endings and
//! the header first.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;

use crate::bench::{Algorithm, BenchRecord};
use crate::error::{Error, Result};
use crate::key::Key;
use crate::sequence::SortedSequence;

/// Reads a sorted key file. `NotSorted` and `Parse` report 1-based line
/// numbers.
pub fn parse_sequence_file<K: Key>(path: impl AsRef<Path>) -> Result<SortedSequence<K>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    parse_sequence_text(&text, path)
}

pub fn parse_sequence_text<K: Key>(text: &str, origin: &Path) -> Result<SortedSequence<K>> {
    let mut keys: Vec<K> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let key = K::parse_key(line).map_err(|message| Error::Parse {
            path: origin.to_path_buf(),
            line: idx + 1,
            message,
        })?;
        if keys.last().is_some_and(|&prev| prev > key) {
            return Err(Error::NotSorted { position: idx + 1 });
        }
        keys.push(key);
    }
    if keys.is_empty() {
        return Err(Error::EmptyInput);
    }
    SortedSequence::new(keys)
}

/// One key per line, `\n`-terminated.
pub fn format_keys<K: Key>(keys: &[K]) -> String {
    let mut out = String::with_capacity(keys.len() * 6);
    for k in keys {
        out.push_str(&k.to_string());
        out.push('\n');
    }
    out
}

pub fn write_sequence_file<K: Key>(path: impl AsRef<Path>, keys: &[K]) -> Result<()> {
    let mut file = fs::File::create(path)?;
    file.write_all(format_keys(keys).as_bytes())?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Int(v) => write!(f, "{v}"),
            Cell::Float(v) => write!(f, "{v}"),
            Cell::Text(s) => f.write_str(s),
        }
    }
}

impl Cell {
    fn parse(text: &str) -> Cell {
        if let Ok(v) = text.parse::<i64>() {
            Cell::Int(v)
        } else if let Ok(v) = text.parse::<f64>() {
            Cell::Float(v)
        } else {
            Cell::Text(text.to_owned())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct CsvTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl CsvTable {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn check_rectangular(&self) -> Result<()> {
        for (row, cells) in self.rows.iter().enumerate() {
            if cells.len() != self.header.len() {
                return Err(Error::RaggedRow {
                    row: row + 1,
                    found: cells.len(),
                    expected: self.header.len(),
                });
            }
        }
        Ok(())
    }

    pub fn to_csv_bytes(&self) -> Result<Vec<u8>> {
        self.check_rectangular()?;
        let mut writer = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        writer.write_record(&self.header)?;
        for row in &self.rows {
            writer.write_record(row.iter().map(Cell::to_string))?;
        }
        writer.into_inner().map_err(|e| Error::Io(e.into_error()))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .flexible(true)
            .from_reader(text.as_bytes());
        let header = reader.headers()?.iter().map(str::to_owned).collect();
        let mut table = CsvTable {
            header,
            rows: Vec::new(),
        };
        for record in reader.records() {
            table.rows.push(record?.iter().map(Cell::parse).collect());
        }
        table.check_rectangular()?;
        Ok(table)
    }
}

pub fn emit_csv(table: &CsvTable, path: impl AsRef<Path>) -> Result<()> {
    let bytes = table.to_csv_bytes()?;
    fs::write(path, bytes)?;
    Ok(())
}

/// `n,<algorithm>...` with each cell the trial-mean comparison count rounded
/// to an integer. Columns follow the canonical order
/// proposed, mergesort, quicksort, restricted to the algorithms present.
pub fn comparisons_table(records: &[BenchRecord]) -> CsvTable {
    let algorithms: Vec<Algorithm> = Algorithm::ALL
        .into_iter()
        .filter(|a| records.iter().any(|r| r.algorithm == *a))
        .collect();
    let mut table = CsvTable::new(std::iter::once("n").chain(algorithms.iter().map(|a| a.name())));
    let mut sizes: Vec<usize> = Vec::new();
    for r in records {
        if !sizes.contains(&r.n) {
            sizes.push(r.n);
        }
    }
    for n in sizes {
        let mut row = vec![Cell::Int(n as i64)];
        for a in &algorithms {
            let cell = records
                .iter()
                .find(|r| r.n == n && r.algorithm == *a)
                .map(|r| Cell::Int(r.mean_comparisons.round() as i64))
                .unwrap_or(Cell::Text(String::new()));
            row.push(cell);
        }
        table.rows.push(row);
    }
    table
}

/// `n,mean_duration_ms,std_dev_ms` of T/n^2 for the proposed algorithm.
pub fn tn2_table(records: &[BenchRecord]) -> CsvTable {
    let mut table = CsvTable::new(["n", "mean_duration_ms", "std_dev_ms"]);
    for r in records.iter().filter(|r| r.algorithm == Algorithm::Proposed) {
        table.rows.push(vec![
            Cell::Int(r.n as i64),
            Cell::Float(r.mean_t_over_n2_ms),
            Cell::Float(r.std_t_over_n2_ms),
        ]);
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::key::FiniteF64;

    fn parse_i64(text: &str) -> Result<SortedSequence<i64>> {
        parse_sequence_text(text, Path::new("mem"))
    }

    #[test]
    fn sequence_examples() {
        assert_eq!(parse_i64("2\n4\n6\n").unwrap().as_slice(), &[2, 4, 6]);
        assert!(matches!(parse_i64(""), Err(Error::EmptyInput)));
        assert!(matches!(parse_i64("5\n3\n"), Err(Error::NotSorted { position: 2 })));
        assert_eq!(parse_i64("# x\n\n1\n  \n1\n# end\n").unwrap().as_slice(), &[1, 1]);
        match parse_i64("1\nseven\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn float_sequences() {
        let s: SortedSequence<FiniteF64> = parse_sequence_text("-0.5\n0.1\n1e3\n", Path::new("mem")).unwrap();
        assert_eq!(format_keys(&s), "-0.5\n0.1\n1000\n");
        assert!(parse_sequence_text::<FiniteF64>("nan\n", Path::new("mem")).is_err());
    }

    #[test]
    fn csv_layout() {
        let mut t = CsvTable::new(["n", "proposed", "mergesort", "quicksort"]);
        t.rows
            .push(vec![Cell::Int(100), Cell::Int(1), Cell::Int(2), Cell::Int(3)]);
        assert_eq!(
            String::from_utf8(t.to_csv_bytes().unwrap()).unwrap(),
            "n,proposed,mergesort,quicksort\n100,1,2,3\n"
        );
        let empty = CsvTable::new(["n", "mean_duration_ms", "std_dev_ms"]);
        assert_eq!(empty.to_csv_bytes().unwrap(), b"n,mean_duration_ms,std_dev_ms\n");
    }

    #[test]
    fn ragged_rows_are_rejected() {
        let mut t = CsvTable::new(["a", "b"]);
        t.rows.push(vec![Cell::Int(1)]);
        assert!(matches!(
            t.to_csv_bytes(),
            Err(Error::RaggedRow {
                row: 1,
                found: 1,
                expected: 2
            })
        ));
        assert!(matches!(CsvTable::parse("a,b\n1\n"), Err(Error::RaggedRow { .. })));
    }

    #[test]
    fn emit_to_disk() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.csv");
        let mut t = CsvTable::new(["n", "x"]);
        t.rows.push(vec![Cell::Int(3), Cell::Float(0.25)]);
        emit_csv(&t, &path).unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), "n,x\n3,0.25\n");
        assert!(matches!(
            emit_csv(&t, dir.path().join("missing/t.csv")),
            Err(Error::Io(_))
        ));
    }
}
