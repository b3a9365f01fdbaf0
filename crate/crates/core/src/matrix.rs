//! Structural checks on the implicit sumset matrix `M[i][j] = x[i] + y[j]`.
//!
//! These are test-support routines: they inspect the inputs directly and do
//! not meter comparisons.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::key::Key;

/// Largest side length for which the quadrangle inequality is checked on
/// every quadruple; above it, quadruples are sampled.
pub const EXHAUSTIVE_MONGE_LIMIT: usize = 64;

/// Sampled quadruples per matrix cell above [`EXHAUSTIVE_MONGE_LIMIT`].
pub const MONGE_SAMPLES_PER_CELL: usize = 10;

const MONGE_SAMPLE_SEED: u64 = 0x6d6f_6e67_6500_0001;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    RowsMonotone,
    ColsMonotone,
    Monge,
    FerrersPrefix,
}

/// Cells `(i, j)` and `(i2, j2)` that witness a failed property.
///
/// For the monotonicity and prefix properties the two cells share a row or
/// a column; for the quadrangle inequality they are opposite corners.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub property: Property,
    pub i: usize,
    pub j: usize,
    pub i2: usize,
    pub j2: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixPropertyReport {
    pub rows_monotone: bool,
    pub cols_monotone: bool,
    pub monge_holds: bool,
    pub ferrers_prefix_holds: bool,
    pub first_violation: Option<Violation>,
}

impl MatrixPropertyReport {
    pub fn all_hold(&self) -> bool {
        self.rows_monotone && self.cols_monotone && self.monge_holds && self.ferrers_prefix_holds
    }
}

/// Re-evaluates a witness against the inputs; true if it still shows a
/// violation.
pub fn recheck_violation<K: Key>(x: &[K], y: &[K], threshold: Option<K>, v: &Violation) -> Result<bool> {
    let m = |i: usize, j: usize| x[i].checked_sum(y[j]);
    Ok(match v.property {
        Property::RowsMonotone | Property::ColsMonotone => m(v.i, v.j)? > m(v.i2, v.j2)?,
        Property::Monge => !K::quadrangle_leq(m(v.i, v.j)?, m(v.i2, v.j2)?, m(v.i, v.j2)?, m(v.i2, v.j)?),
        Property::FerrersPrefix => match threshold {
            Some(t) => v.j < v.j2 && m(v.i, v.j)? > t && m(v.i2, v.j2)? <= t,
            None => false,
        },
    })
}

/// Checks row and column monotonicity, the quadrangle (Monge) inequality,
/// and, when a threshold is given, that `{j : M[i][j] <= t}` is a prefix of
/// every row.
///
/// The inputs are plain slices so callers can probe deliberately unsorted
/// data.
pub fn matrix_property_check<K: Key>(x: &[K], y: &[K], threshold: Option<K>) -> Result<MatrixPropertyReport> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    let n = x.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }

    let mut m = Vec::with_capacity(n * n);
    for &xi in x {
        for &yj in y {
            m.push(xi.checked_sum(yj)?);
        }
    }
    let at = |i: usize, j: usize| m[i * n + j];

    let mut first: Option<Violation> = None;
    let mut note = |v: Violation| {
        first.get_or_insert(v);
    };

    let rows = (0..n)
        .flat_map(|i| (0..n - 1).map(move |j| (i, j)))
        .find(|&(i, j)| at(i, j) > at(i, j + 1));
    if let Some((i, j)) = rows {
        note(Violation {
            property: Property::RowsMonotone,
            i,
            j,
            i2: i,
            j2: j + 1,
        });
    }

    let cols = (0..n)
        .flat_map(|j| (0..n - 1).map(move |i| (i, j)))
        .find(|&(i, j)| at(i, j) > at(i + 1, j));
    if let Some((i, j)) = cols {
        note(Violation {
            property: Property::ColsMonotone,
            i,
            j,
            i2: i + 1,
            j2: j,
        });
    }

    let quad_fails =
        |i: usize, j: usize, i2: usize, j2: usize| !K::quadrangle_leq(at(i, j), at(i2, j2), at(i, j2), at(i2, j));
    let mut monge = None;
    if n <= EXHAUSTIVE_MONGE_LIMIT {
        'outer: for i in 0..n {
            for i2 in i + 1..n {
                for j in 0..n {
                    for j2 in j + 1..n {
                        if quad_fails(i, j, i2, j2) {
                            monge = Some((i, j, i2, j2));
                            break 'outer;
                        }
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(MONGE_SAMPLE_SEED ^ n as u64);
        let pair = |rng: &mut ChaCha8Rng| {
            let a = rng.gen_range(0..n);
            let mut b = rng.gen_range(0..n - 1);
            if b >= a {
                b += 1;
            }
            (a.min(b), a.max(b))
        };
        for _ in 0..MONGE_SAMPLES_PER_CELL * n * n {
            let (i, i2) = pair(&mut rng);
            let (j, j2) = pair(&mut rng);
            if quad_fails(i, j, i2, j2) {
                monge = Some((i, j, i2, j2));
                break;
            }
        }
    }
    if let Some((i, j, i2, j2)) = monge {
        note(Violation {
            property: Property::Monge,
            i,
            j,
            i2,
            j2,
        });
    }

    let mut ferrers = None;
    if let Some(t) = threshold {
        for i in 0..n {
            if let Some(j) = (0..n).find(|&j| at(i, j) > t) {
                if let Some(j2) = (j + 1..n).find(|&j2| at(i, j2) <= t) {
                    ferrers = Some((i, j, j2));
                    break;
                }
            }
        }
    }
    if let Some((i, j, j2)) = ferrers {
        note(Violation {
            property: Property::FerrersPrefix,
            i,
            j,
            i2: i,
            j2,
        });
    }

    Ok(MatrixPropertyReport {
        rows_monotone: rows.is_none(),
        cols_monotone: cols.is_none(),
        monge_holds: monge.is_none(),
        ferrers_prefix_holds: ferrers.is_none(),
        first_violation: first,
    })
}
