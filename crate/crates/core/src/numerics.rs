//! Scalar search utilities: golden-section refinement, ternary minimization,
//! monotone-root bisection and tiny least-squares fits. Nothing here knows
//! about circle maps; everything takes closures.

use rug::Float;

/// Golden-section *maximization* of `f` on `[lo, hi]`, f64 flavor.
/// Returns `(argmax, max)` after `steps` interval reductions.
pub fn golden_max(f: impl Fn(f64) -> f64, lo: f64, hi: f64, steps: usize) -> (f64, f64) {
    const INV_PHI: f64 = 0.6180339887498949;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..steps {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    if fc >= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Ternary *minimization* on MPFR floats. `steps` cuts the bracket by 1/3 each
/// round, so ~2.4 steps per decimal digit of argument accuracy.
pub fn ternary_min_float(
    f: impl Fn(&Float) -> Float,
    lo: &Float,
    hi: &Float,
    steps: usize,
) -> (Float, Float) {
    let mut a = lo.clone();
    let mut b = hi.clone();
    let three = Float::with_val(a.prec(), 3);
    for _ in 0..steps {
        let third = Float::with_val(a.prec(), &b - &a) / &three;
        let m1 = a.clone() + &third;
        let m2 = b.clone() - &third;
        if f(&m1) <= f(&m2) {
            b = m2;
        } else {
            a = m1;
        }
    }
    let mid = (a + &b) / Float::with_val(b.prec(), 2);
    let val = f(&mid);
    (mid, val)
}

/// Bisection root find for a monotonically increasing predicate function:
/// `f(lo) < 0 <= f(hi)` is required; shrinks until `hi - lo <= tol`.
/// Returns the final bracket.
pub fn bisect_increasing_float(
    f: impl Fn(&Float) -> std::cmp::Ordering,
    lo: &Float,
    hi: &Float,
    tol: &Float,
) -> (Float, Float) {
    let mut a = lo.clone();
    let mut b = hi.clone();
    let two = Float::with_val(a.prec(), 2);
    loop {
        let width = Float::with_val(a.prec(), &b - &a);
        if width <= *tol {
            return (a, b);
        }
        let mid = Float::with_val(a.prec(), &a + &b) / &two;
        match f(&mid) {
            std::cmp::Ordering::Less => a = mid,
            _ => b = mid,
        }
    }
}

/// Ordinary least squares for `y ~ slope * x + intercept`.
/// Returns `(slope, intercept, max_abs_residual)`.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    assert_eq!(xs.len(), ys.len());
    assert!(xs.len() >= 2, "need at least two points for a line fit");
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let resid = xs
        .iter()
        .zip(ys)
        .map(|(&x, &y)| (y - slope * x - intercept).abs())
        .fold(0.0_f64, f64::max);
    (slope, intercept, resid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Float;

    #[test]
    fn golden_finds_parabola_peak() {
        let (x, v) = golden_max(|x| 1.0 - (x - 0.3) * (x - 0.3), 0.0, 1.0, 60);
        assert!((x - 0.3).abs() < 1e-9, "argmax off: {x}");
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn ternary_finds_min() {
        let f = |x: &Float| {
            let d = x.clone() - Float::with_val(x.prec(), 0.7);
            d.square()
        };
        let lo = Float::with_val(128, 0);
        let hi = Float::with_val(128, 1);
        let (x, _) = ternary_min_float(f, &lo, &hi, 200);
        let err = (x - Float::with_val(128, 0.7)).abs();
        assert!(err < 1e-20, "ternary argmin error {err}");
    }

    #[test]
    fn bisect_monotone() {
        // root of x - 1/3 on [0,1]
        let third = Float::with_val(128, 1) / Float::with_val(128, 3);
        let f = |x: &Float| x.partial_cmp(&third).unwrap();
        let lo = Float::with_val(128, 0);
        let hi = Float::with_val(128, 1);
        let tol = Float::with_val(128, 1e-30);
        let (a, b) = bisect_increasing_float(f, &lo, &hi, &tol);
        assert!(a <= third && third <= b);
        assert!(Float::with_val(128, &b - &a) <= tol);
    }

    #[test]
    fn line_fit_recovers_slope() {
        let xs: Vec<f64> = (0..10).map(|i| i as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 2.5 * x - 1.0).collect();
        let (s, b, r) = linear_fit(&xs, &ys);
        assert!((s - 2.5).abs() < 1e-12 && (b + 1.0).abs() < 1e-12 && r < 1e-12);
    }
}
