//! Scalar root finding by bisection.

use crate::error::{Error, Result};

const MAX_ITERATIONS: usize = 2_000;
const MAX_DOUBLINGS: usize = 1_100;

/// Bisects `f` on `[lo, hi]` until the bracket cannot be split any further in
/// double precision or `f` hits exactly zero.
///
/// `f(lo)` and `f(hi)` must have opposite signs (zero counts as either).
/// Returns the endpoint whose value is closer to zero.
pub fn bisect(mut f: impl FnMut(f64) -> f64, mut lo: f64, mut hi: f64) -> Result<f64> {
    let mut f_lo = f(lo);
    let mut f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.is_nan() || f_hi.is_nan() || f_lo.signum() == f_hi.signum() {
        return Err(Error::Bracket {
            op: "bisect",
            detail: format!("f({lo}) = {f_lo}, f({hi}) = {f_hi} do not straddle zero"),
        });
    }
    for _ in 0..MAX_ITERATIONS {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    Ok(if f_lo.abs() <= f_hi.abs() { lo } else { hi })
}

/// Doubles `hi` until `reached(hi)` holds, starting from `start`.
pub fn grow_upper_bracket(start: f64, mut reached: impl FnMut(f64) -> bool) -> Result<f64> {
    let mut hi = start;
    for _ in 0..MAX_DOUBLINGS {
        if reached(hi) {
            return Ok(hi);
        }
        hi *= 2.0;
        if !hi.is_finite() {
            break;
        }
    }
    Err(Error::Bracket {
        op: "grow_upper_bracket",
        detail: format!("no upper bracket found from {start}"),
    })
}
