//! Curve comparison utilities: interpolation, composite Simpson
//! quadrature, mean absolute error and the overlap score between two
//! spreading-ability curves.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Overlap between two curves sampled over the same abscissa range:
/// `f_overlap = 1 / (1 + s_delta)` where `s_delta` integrates the absolute
/// gap between the curves. `1` means the curves agree everywhere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OverlapReport<F: Real> {
    pub f_overlap: F,
    pub s_delta: F,
    pub fine_grid_points: usize,
}

/// Interpolation rule used when resampling curves onto a fine grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Interpolation {
    #[default]
    Linear,
    Cubic,
}

/// `n` evenly spaced points from `a` to `b` inclusive.
pub fn linspace<F: Real>(a: F, b: F, n: usize) -> Vec<F> {
    assert!(n >= 2, "linspace needs at least two points");
    let step = (b - a) / F::of_usize(n - 1);
    let mut xs: Vec<F> = (0..n).map(|i| a + step * F::of_usize(i)).collect();
    xs[n - 1] = b;
    xs
}

/// `n` logarithmically spaced points from `a` to `b` inclusive; `a, b > 0`.
pub fn logspace<F: Real>(a: F, b: F, n: usize) -> Vec<F> {
    assert!(a > F::zero() && b > F::zero(), "logspace needs positive bounds");
    let mut xs: Vec<F> = linspace(a.ln(), b.ln(), n).into_iter().map(F::exp).collect();
    xs[0] = a;
    xs[n - 1] = b;
    xs
}

fn check_knots<F: Real>(xs: &[F], ys: &[F]) -> Result<()> {
    if xs.len() != ys.len() {
        return Err(Error::Usage(format!(
            "knot arrays differ in length: {} vs {}",
            xs.len(),
            ys.len()
        )));
    }
    if xs.len() < 2 {
        return Err(Error::Usage("interpolation needs at least two knots".into()));
    }
    if xs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Usage("knot abscissae must be strictly increasing".into()));
    }
    Ok(())
}

fn locate<F: Real>(xs: &[F], x: F) -> Result<usize> {
    let lo = xs[0];
    let hi = xs[xs.len() - 1];
    // Tolerate endpoint jitter from grid construction, nothing more.
    let slack = (hi - lo) * F::of(1e-12);
    if x < lo - slack || x > hi + slack {
        return Err(Error::Domain(format!(
            "query {x} outside interpolation range [{lo}, {hi}]"
        )));
    }
    let x = if x < lo { lo } else if x > hi { hi } else { x };
    // Index of the interval [xs[k], xs[k+1]] containing x.
    let k = match xs.binary_search_by(|probe| probe.partial_cmp(&x).expect("finite")) {
        Ok(i) => i.min(xs.len() - 2),
        Err(i) => i.saturating_sub(1).min(xs.len() - 2),
    };
    Ok(k)
}

/// Piecewise-linear interpolation of `(xs, ys)` at `x_new`. Exact at the
/// knots; querying outside `[xs[0], xs[last]]` is a domain error.
pub fn linear_interpolate<F: Real>(xs: &[F], ys: &[F], x_new: &[F]) -> Result<Vec<F>> {
    check_knots(xs, ys)?;
    x_new
        .iter()
        .map(|&x| {
            let k = locate(xs, x)?;
            let t = (x - xs[k]) / (xs[k + 1] - xs[k]);
            Ok(ys[k] + t * (ys[k + 1] - ys[k]))
        })
        .collect()
}

/// Natural cubic spline interpolation of `(xs, ys)` at `x_new`.
pub fn cubic_interpolate<F: Real>(xs: &[F], ys: &[F], x_new: &[F]) -> Result<Vec<F>> {
    check_knots(xs, ys)?;
    let n = xs.len();
    if n == 2 {
        return linear_interpolate(xs, ys, x_new);
    }
    // Second derivatives from the tridiagonal system of the natural spline.
    let mut m = vec![F::zero(); n];
    let mut diag = vec![F::zero(); n];
    let mut rhs = vec![F::zero(); n];
    let mut upper = vec![F::zero(); n];
    diag[0] = F::one();
    for i in 1..n - 1 {
        let h0 = xs[i] - xs[i - 1];
        let h1 = xs[i + 1] - xs[i];
        diag[i] = F::of(2.0) * (h0 + h1);
        upper[i] = h1;
        rhs[i] = F::of(6.0) * ((ys[i + 1] - ys[i]) / h1 - (ys[i] - ys[i - 1]) / h0);
    }
    diag[n - 1] = F::one();
    // Thomas elimination; the natural boundary rows are trivial.
    for i in 2..n - 1 {
        let h0 = xs[i] - xs[i - 1];
        let w = h0 / diag[i - 1];
        diag[i] = diag[i] - w * upper[i - 1];
        rhs[i] = rhs[i] - w * rhs[i - 1];
    }
    for i in (1..n - 1).rev() {
        m[i] = (rhs[i] - upper[i] * m[i + 1]) / diag[i];
    }
    x_new
        .iter()
        .map(|&x| {
            let k = locate(xs, x)?;
            let h = xs[k + 1] - xs[k];
            let a = (xs[k + 1] - x) / h;
            let b = (x - xs[k]) / h;
            Ok(a * ys[k]
                + b * ys[k + 1]
                + ((a * a * a - a) * m[k] + (b * b * b - b) * m[k + 1]) * h * h / F::of(6.0))
        })
        .collect()
}

/// Composite Simpson quadrature result. When the sample count is even the
/// last interval is integrated with the trapezoid rule instead.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimpsonResult<F: Real> {
    pub value: F,
    pub trapezoid_tail: bool,
}

/// Composite Simpson integration of samples `ys` over uniformly spaced
/// abscissae `xs`.
pub fn simpson_integrate<F: Real>(ys: &[F], xs: &[F]) -> Result<SimpsonResult<F>> {
    check_knots(xs, ys)?;
    let n = xs.len();
    if n < 3 {
        return Err(Error::Usage("Simpson integration needs at least three points".into()));
    }
    let h = (xs[n - 1] - xs[0]) / F::of_usize(n - 1);
    let jitter = h * F::of(1e-6);
    if xs.windows(2).any(|w| ((w[1] - w[0]) - h).abs() > jitter) {
        return Err(Error::Usage("Simpson integration needs uniform spacing".into()));
    }
    let odd_count = n % 2 == 1;
    let simpson_end = if odd_count { n - 1 } else { n - 2 };
    let mut acc = F::zero();
    let mut k = 0;
    while k < simpson_end {
        acc = acc + ys[k] + F::of(4.0) * ys[k + 1] + ys[k + 2];
        k += 2;
    }
    let mut value = acc * h / F::of(3.0);
    if !odd_count {
        value = value + (ys[n - 2] + ys[n - 1]) * h / F::of(2.0);
    }
    Ok(SimpsonResult {
        value,
        trapezoid_tail: !odd_count,
    })
}

/// Mean absolute difference between two equal-length sample vectors.
pub fn mean_abs_diff<F: Real>(a: &[F], b: &[F]) -> Result<F> {
    if a.len() != b.len() || a.is_empty() {
        return Err(Error::Usage(format!(
            "mean absolute difference needs equal non-empty lengths, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    let sum: F = a.iter().zip(b).map(|(&x, &y)| (x - y).abs()).sum();
    Ok(sum / F::of_usize(a.len()))
}

/// Default number of fine-grid points used by [`f_overlap`].
pub const DEFAULT_FINE_GRID: usize = 401;

/// Overlap score between two spreading-ability curves sampled at the same
/// infection-rate points. Both curves are resampled onto a fine uniform
/// grid, the absolute gap is integrated with Simpson's rule, and the score
/// is `1 / (1 + integral)`.
pub fn f_overlap<F: Real>(beta: &[F], rho0: &[F], rhol: &[F]) -> Result<OverlapReport<F>> {
    f_overlap_opts(beta, rho0, rhol, Interpolation::Linear, DEFAULT_FINE_GRID)
}

/// [`f_overlap`] with an explicit interpolation rule and fine-grid size.
pub fn f_overlap_opts<F: Real>(
    beta: &[F],
    rho0: &[F],
    rhol: &[F],
    interpolation: Interpolation,
    fine_grid_points: usize,
) -> Result<OverlapReport<F>> {
    if beta.len() != rho0.len() || beta.len() != rhol.len() {
        return Err(Error::Usage(format!(
            "curve arrays differ in length: {} / {} / {}",
            beta.len(),
            rho0.len(),
            rhol.len()
        )));
    }
    check_knots(beta, rho0)?;
    if fine_grid_points < 3 {
        return Err(Error::Usage("fine grid needs at least three points".into()));
    }
    let fine = linspace(beta[0], beta[beta.len() - 1], fine_grid_points);
    let (a, b) = match interpolation {
        Interpolation::Linear => (
            linear_interpolate(beta, rho0, &fine)?,
            linear_interpolate(beta, rhol, &fine)?,
        ),
        Interpolation::Cubic => (
            cubic_interpolate(beta, rho0, &fine)?,
            cubic_interpolate(beta, rhol, &fine)?,
        ),
    };
    let delta: Vec<F> = a.iter().zip(&b).map(|(&x, &y)| (x - y).abs()).collect();
    let s_delta = simpson_integrate(&delta, &fine)?.value;
    Ok(OverlapReport {
        f_overlap: F::one() / (F::one() + s_delta),
        s_delta,
        fine_grid_points,
    })
}
