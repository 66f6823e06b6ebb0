//! Small dense solves with a conditioning guard.

use nalgebra::{DMatrix, DVector, SMatrix, SVector};

use crate::error::{Error, Result};

/// Systems whose 2-norm condition number exceeds this are rejected.
pub const MAX_CONDITION: f64 = 1e14;

/// 2-norm condition number from the singular values.
pub fn condition_number<const N: usize>(a: &SMatrix<f64, N, N>) -> f64 {
    let sv = DMatrix::from_column_slice(N, N, a.as_slice()).singular_values();
    let max = sv.max();
    let min = sv.min();
    if min == 0.0 {
        f64::INFINITY
    } else {
        max / min
    }
}

/// Solves `a x = b` by partial-pivot LU after checking conditioning.
pub fn solve<const N: usize>(a: SMatrix<f64, N, N>, b: SVector<f64, N>) -> Result<SVector<f64, N>> {
    let condition = condition_number(&a);
    if !condition.is_finite() || condition > MAX_CONDITION {
        return Err(Error::SingularSystem { condition });
    }
    let a = DMatrix::from_column_slice(N, N, a.as_slice());
    let x = a.lu().solve(&DVector::from_column_slice(b.as_slice())).ok_or(Error::SingularSystem { condition })?;
    Ok(SVector::from_column_slice(x.as_slice()))
}

/// Max-norm of `a x − b` divided by `max(|a||x|, |b|)` row-wise.
pub fn relative_residual<const N: usize>(
    a: &SMatrix<f64, N, N>,
    x: &SVector<f64, N>,
    b: &SVector<f64, N>,
) -> f64 {
    let mut worst = 0.0_f64;
    for i in 0..N {
        let mut lhs = 0.0;
        let mut scale = b[i].abs();
        let mut mag = 0.0;
        for j in 0..N {
            lhs += a[(i, j)] * x[j];
            mag += (a[(i, j)] * x[j]).abs();
        }
        scale = scale.max(mag);
        if scale > 0.0 {
            worst = worst.max((lhs - b[i]).abs() / scale);
        }
    }
    worst
}
