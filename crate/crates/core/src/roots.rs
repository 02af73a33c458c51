//! Bracketing root search on continuous scalar margins.

/// Default bracket width for threshold searches.
pub const BISECT_WIDTH: f64 = 1e-10;

/// Bisects `f` on `[lo, hi]` where `f(lo) < 0 <= f(hi)`, returning the
/// midpoint of the final bracket once its width is at most `width`.
pub fn bisect(mut f: impl FnMut(f64) -> f64, mut lo: f64, mut hi: f64, width: f64) -> f64 {
    debug_assert!(f(lo) < 0.0 && f(hi) >= 0.0, "root not bracketed");
    while hi - lo > width {
        let mid = 0.5 * (lo + hi);
        if f(mid) >= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Smallest `x` in `[lo, hi]` where `f` becomes nonnegative.
///
/// Scans `steps` equal intervals for the first sign change from negative to
/// nonnegative, then bisects inside it. Returns `None` when `f` stays
/// negative on every scanned point.
pub fn first_crossing(
    mut f: impl FnMut(f64) -> f64,
    lo: f64,
    hi: f64,
    steps: usize,
    width: f64,
) -> Option<f64> {
    if f(lo) >= 0.0 {
        return Some(lo);
    }
    let h = (hi - lo) / steps as f64;
    let mut prev = lo;
    for i in 1..=steps {
        let x = if i == steps { hi } else { lo + h * i as f64 };
        if f(x) >= 0.0 {
            return Some(bisect(&mut f, prev, x, width));
        }
        prev = x;
    }
    None
}
