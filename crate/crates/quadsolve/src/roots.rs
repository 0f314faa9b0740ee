use crate::SolveError;

/// Grid used to isolate sign changes before bisection.
pub const SCAN_POINTS: usize = 10_000;

/// All roots of `g` on `[lo, hi]`: the interval is scanned on a uniform grid
/// and every sign change is bisected down to `tol`. Results are ascending
/// and deterministic.
pub fn find_roots(g: impl Fn(f64) -> f64, lo: f64, hi: f64, tol: f64) -> Vec<f64> {
    let mut roots = Vec::new();
    if !(hi > lo) {
        return roots;
    }
    let step = (hi - lo) / SCAN_POINTS as f64;
    let mut x0 = lo;
    let mut y0 = g(x0);
    for i in 1..=SCAN_POINTS {
        let x1 = if i == SCAN_POINTS { hi } else { lo + step * i as f64 };
        let y1 = g(x1);
        if y0 == 0.0 {
            if roots.last().is_none_or(|&r: &f64| (r - x0).abs() > tol) {
                roots.push(x0);
            }
        } else if y0.is_finite() && y1.is_finite() && y0 * y1 < 0.0 {
            roots.push(bisect(&g, x0, x1, y0, tol));
        }
        x0 = x1;
        y0 = y1;
    }
    if y0 == 0.0 && roots.last().is_none_or(|&r| (r - x0).abs() > tol) {
        roots.push(x0);
    }
    roots
}

fn bisect(g: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, mut glo: f64, tol: f64) -> f64 {
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let gm = g(mid);
        if gm == 0.0 {
            return mid;
        }
        if (gm < 0.0) == (glo < 0.0) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
        if mid == lo && mid == hi {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// The smallest root of `g` in `[lo, hi]`; errors when the scan finds no
/// sign change.
pub fn find_root(g: impl Fn(f64) -> f64, lo: f64, hi: f64, tol: f64) -> Result<f64, SolveError> {
    find_roots(g, lo, hi, tol)
        .first()
        .copied()
        .ok_or(SolveError::NoRoot { lo, hi })
}
