//! Adaptive composite Gauss–Legendre quadrature of complex integrands along
//! a straight segment.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Result, SchurError};

/// Points per panel.
pub const PANEL_ORDER: usize = 15;
/// Maximum number of bisection levels.
pub const MAX_DEPTH: u32 = 20;

/// Gauss–Legendre nodes on `[-1, 1]` and weights, from Newton iteration on
/// the three-term Legendre recurrence.
pub fn gauss_legendre(order: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; order];
    let mut weights = vec![0.0; order];
    let n = order as f64;
    for i in 0..order.div_ceil(2) {
        // Tricomi initial guess for the i-th largest root
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(order, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(order, x);
        dp = if d != 0.0 { d } else { dp };
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[order - 1 - i] = x;
        weights[i] = w;
        weights[order - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(order: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=order {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let n = order as f64;
    (p1, n * (x * p1 - p0) / (x * x - 1.0))
}

fn panel_rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(PANEL_ORDER))
}

/// Integrates `f(ζ) dζ` along the segment from `start` to `end`, bisecting
/// panels until the panel-versus-halves difference is within an absolute
/// budget of `tol` overall.
///
/// Nodes are interior to each panel, so `f` is never evaluated at the
/// endpoints.
pub fn integrate_segment<F>(f: F, start: Complex64, end: Complex64, tol: f64) -> Result<Complex64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let dir = end - start;
    // ∫ f(start + t·dir) dir dt over t ∈ [0, 1]
    let g = |t: f64| -> Result<Complex64> { Ok(f(start + dir * t)? * dir) };
    let whole = panel(&g, 0.0, 1.0)?;
    refine(&g, 0.0, 1.0, whole, tol, 0)
}

fn panel<G>(g: &G, lo: f64, hi: f64) -> Result<Complex64>
where
    G: Fn(f64) -> Result<Complex64>,
{
    let (nodes, weights) = panel_rule();
    let mid = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let mut sum = Complex64::new(0.0, 0.0);
    for (x, w) in nodes.iter().zip(weights) {
        sum += g(mid + half * x)? * *w;
    }
    Ok(sum * half)
}

fn refine<G>(g: &G, lo: f64, hi: f64, whole: Complex64, tol: f64, depth: u32) -> Result<Complex64>
where
    G: Fn(f64) -> Result<Complex64>,
{
    let mid = 0.5 * (lo + hi);
    let left = panel(g, lo, mid)?;
    let right = panel(g, mid, hi)?;
    let halves = left + right;
    let err = (halves - whole).norm();
    let floor = 64.0 * f64::EPSILON * halves.norm();
    if err <= tol.max(floor) {
        return Ok(halves);
    }
    if depth + 1 >= MAX_DEPTH {
        return Err(SchurError::QuadratureNonConvergence {
            max_depth: MAX_DEPTH,
            error: err,
        });
    }
    Ok(refine(g, lo, mid, left, 0.5 * tol, depth + 1)?
        + refine(g, mid, hi, right, 0.5 * tol, depth + 1)?)
}
