//! Checks the structure of the implicit matrix M[i][j] = x[i] + y[j] for sorted
//! inputs, then shows the witness reported once Y is shuffled.
//!
//!     cargo run --example matrix_props

use sumset_sort::matrix::recheck_violation;
use sumset_sort::matrix_property_check;

fn main() -> sumset_sort::Result<()> {
    let x = [2i64, 4, 6];
    let y = [1i64, 3, 5];
    let report = matrix_property_check(&x, &y, Some(7))?;
    println!("sorted inputs: {report:?}");

    let shuffled = [3i64, 1, 5];
    let report = matrix_property_check(&x, &shuffled, Some(4))?;
    println!("shuffled Y:    {report:?}");
    if let Some(v) = report.first_violation {
        println!(
            "M[{}][{}] = {} vs M[{}][{}] = {}; still a violation: {}",
            v.i,
            v.j,
            x[v.i] + shuffled[v.j],
            v.i2,
            v.j2,
            x[v.i2] + shuffled[v.j2],
            recheck_violation(&x, &shuffled, Some(4), &v)?
        );
    }
    Ok(())
}
