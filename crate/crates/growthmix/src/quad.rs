//! Adaptive Simpson quadrature on a finite interval.
//!
//! Small utility used throughout the test suites as the independent
//! integration oracle for densities and moments.

/// Integrate `f` over `[a, b]` to the requested relative tolerance.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel_tol: f64) -> f64 {
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(a, b, fa, fm, fb);
    adaptive(&f, a, b, fa, fm, fb, whole, rel_tol * whole.abs().max(1e-300), 60)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adaptive<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    abs_tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * abs_tol {
        return left + right + delta / 15.0;
    }
    adaptive(f, a, m, fa, flm, fm, left, 0.5 * abs_tol, depth - 1)
        + adaptive(f, m, b, fm, frm, fb, right, 0.5 * abs_tol, depth - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn polynomial_exact() {
        let got = integrate(|x| 3.0 * x * x, 0.0, 2.0, 1e-12);
        assert_relative_eq!(got, 8.0, max_relative = 1e-12);
    }

    #[test]
    fn gaussian_integral() {
        let got = integrate(
            |x| (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt(),
            -10.0,
            10.0,
            1e-12,
        );
        assert_relative_eq!(got, 1.0, max_relative = 1e-10);
    }

    #[test]
    fn sharp_peak() {
        // narrow Gaussian away from interval midpoint
        let got = integrate(
            |x| (-(x - 0.123f64).powi(2) / (2.0 * 1e-4)).exp(),
            -5.0,
            5.0,
            1e-11,
        );
        let want = (2.0 * std::f64::consts::PI * 1e-4).sqrt();
        assert_relative_eq!(got, want, max_relative = 1e-8);
    }
}
