use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::UniPoly;
use crate::error::{Error, Result};
use crate::BigRational;

/// Interpolates a polynomial of degree at most `degree` through the first
/// `degree + 1` points and checks it against every remaining point.
pub fn lagrange_interpolate(points: &[(i64, BigRational)], degree: usize) -> Result<UniPoly> {
    if points.len() < degree + 1 {
        return Err(Error::Internal(alloc::format!(
            "need {} points for degree {degree}, got {}",
            degree + 1,
            points.len()
        )));
    }
    let (fit, check) = points.split_at(degree + 1);
    let mut acc = UniPoly::zero();
    for (i, (xi, yi)) in fit.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = UniPoly::one();
        let mut denom = BigRational::one();
        for (j, (xj, _)) in fit.iter().enumerate() {
            if i != j {
                basis = &basis * &UniPoly::linear_root(*xj);
                denom *= BigRational::from_integer((xi - xj).into());
            }
        }
        acc = &acc + &basis.scale(&(yi / denom));
    }
    for (x, y) in check {
        if acc.eval_int(*x) != *y {
            return Err(Error::InterpolationMismatch(*x));
        }
    }
    Ok(acc)
}

/// Samples `f` at consecutive integers from `start` and interpolates with
/// `extra` consistency checks.
pub fn interpolate_from<F>(start: i64, degree: usize, extra: usize, mut f: F) -> Result<UniPoly>
where
    F: FnMut(i64) -> Result<BigRational>,
{
    let points = (0..(degree + 1 + extra) as i64)
        .map(|i| f(start + i).map(|y| (start + i, y)))
        .collect::<Result<Vec<_>>>()?;
    lagrange_interpolate(&points, degree)
}
