//! Predicates on sampled closed curves: containment in a convex polygon,
//! convexity, simplicity, set distances and enclosed area.

use num_complex::Complex64;
use rustfft::FftPlanner;

fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

fn edges(points: &[Complex64]) -> impl Iterator<Item = (Complex64, Complex64)> + '_ {
    let n = points.len();
    (0..n).map(move |i| (points[i], points[(i + 1) % n]))
}

/// Shoelace area, positive for counterclockwise curves.
pub fn polygon_area(points: &[Complex64]) -> f64 {
    0.5 * edges(points).map(|(a, b)| cross(a, b)).sum::<f64>()
}

fn orientation(points: &[Complex64]) -> f64 {
    if polygon_area(points) < 0.0 {
        -1.0
    } else {
        1.0
    }
}

/// Largest outward distance of `w` from the edge lines of a convex polygon:
/// negative inside, positive outside.
pub fn signed_distance(polygon: &[Complex64], w: Complex64) -> f64 {
    let orient = orientation(polygon);
    edges(polygon)
        .filter_map(|(a, b)| {
            let e = b - a;
            let len = e.norm();
            (len > 0.0).then(|| -orient * cross(e, w - a) / len)
        })
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Point-in-convex-polygon test, accepting points at most `geom_tol`
/// outside an edge.
pub fn contains(polygon: &[Complex64], w: Complex64, geom_tol: f64) -> bool {
    signed_distance(polygon, w) <= geom_tol
}

fn segment_distance(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    let e = b - a;
    let len2 = e.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = (((p - a) * e.conj()).re / len2).clamp(0.0, 1.0);
    (p - (a + e * t)).norm()
}

/// Distance from `w` to the closed polyline through `polygon`.
pub fn boundary_distance(polygon: &[Complex64], w: Complex64) -> f64 {
    edges(polygon)
        .map(|(a, b)| segment_distance(w, a, b))
        .fold(f64::INFINITY, f64::min)
}

/// Most negative normalised cross product of consecutive edges, signed so
/// that a convex curve gives non-negative values whatever its orientation.
pub fn convexity_defect(boundary: &[Complex64]) -> f64 {
    let n = boundary.len();
    if n < 3 {
        return 0.0;
    }
    let orient = orientation(boundary);
    (0..n)
        .map(|i| {
            let e1 = boundary[(i + 1) % n] - boundary[i];
            let e2 = boundary[(i + 2) % n] - boundary[(i + 1) % n];
            let scale = e1.norm() * e2.norm();
            if scale == 0.0 {
                0.0
            } else {
                orient * cross(e1, e2) / scale
            }
        })
        .fold(f64::INFINITY, f64::min)
}

/// Total signed turning of a closed polygon, in radians.
pub fn total_turning(boundary: &[Complex64]) -> f64 {
    let n = boundary.len();
    (0..n)
        .map(|i| {
            let e1 = boundary[(i + 1) % n] - boundary[i];
            let e2 = boundary[(i + 2) % n] - boundary[(i + 1) % n];
            (e2 * e1.conj()).arg()
        })
        .sum()
}

fn segments_cross(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> bool {
    let d1 = cross(b - a, c - a);
    let d2 = cross(b - a, d - a);
    let d3 = cross(d - c, a - c);
    let d4 = cross(d - c, b - c);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

/// Whether the closed polygon is simple. A polygon that turns one way at
/// every vertex (within `tol`) and winds exactly once is accepted directly;
/// anything else falls back to a pairwise edge test.
pub fn is_simple(boundary: &[Complex64], tol: f64) -> bool {
    let n = boundary.len();
    if n < 3 {
        return false;
    }
    if min_separation(boundary) == 0.0 {
        return false;
    }
    if convexity_defect(boundary) >= -tol
        && (total_turning(boundary).abs() - std::f64::consts::TAU).abs() < 1e-6
    {
        return true;
    }
    for i in 0..n {
        let (a, b) = (boundary[i], boundary[(i + 1) % n]);
        for j in (i + 2)..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let (c, d) = (boundary[j], boundary[(j + 1) % n]);
            if segments_cross(a, b, c, d) {
                return false;
            }
        }
    }
    true
}

/// Smallest distance between two distinct vertices.
pub fn min_separation(points: &[Complex64]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            best = best.min((points[i] - points[j]).norm());
        }
    }
    best
}

/// Symmetric Hausdorff distance between two closed polylines, measured from
/// each vertex set to the other polyline.
pub fn hausdorff_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    let one_way = |from: &[Complex64], to: &[Complex64]| {
        from.iter()
            .map(|&p| boundary_distance(to, p))
            .fold(0.0, f64::max)
    };
    one_way(a, b).max(one_way(b, a))
}

/// Area enclosed by a closed curve sampled at equispaced parameter values,
/// from its discrete Fourier coefficients: `π Σ k |c_k|²`.
///
/// For analytic curves this converges exponentially in the number of
/// samples, unlike the shoelace area of the inscribed polygon.
pub fn spectral_area(samples: &[Complex64]) -> f64 {
    let n = samples.len();
    if n == 0 {
        return 0.0;
    }
    let mut buf = samples.to_vec();
    FftPlanner::<f64>::new()
        .plan_fft_forward(n)
        .process(&mut buf);
    let scale = 1.0 / n as f64;
    let area: f64 = buf
        .iter()
        .enumerate()
        .map(|(k, c)| {
            // DFT with e^{-ikθ}: coefficient of e^{ikθ} sits at bin k
            let freq = if k <= n / 2 {
                k as f64
            } else {
                k as f64 - n as f64
            };
            freq * (c * scale).norm_sqr()
        })
        .sum();
    std::f64::consts::PI * area
}
