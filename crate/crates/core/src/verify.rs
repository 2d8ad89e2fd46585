//! Property suites over random Schur parameters: the mirror and determinant
//! identities of the Schur polynomials, the two disk inequalities, the
//! parameter round trip and the agreement of the two evaluation routes of
//! the extremal interpolant.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Result, SchurError};
use crate::poly::{build_polynomials, omega_nested, omega_rational, SchurPolynomials};
use crate::schur::{data_from_parameters, schur_parameters, SchurClassification, ToleranceConfig};

pub const IDENTITY_TOL: f64 = 1e-10;
pub const ROUND_TRIP_TOL: f64 = 1e-8;
pub const EQUIVALENCE_TOL: f64 = 1e-12;

/// How a suite statistic is compared with its bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Bound {
    /// `value < bound`
    Below(f64),
    /// `value ≥ bound`
    AtLeast(f64),
    /// `value > bound`
    Above(f64),
}

impl Bound {
    fn holds(&self, value: f64) -> bool {
        match *self {
            Bound::Below(b) => value < b,
            Bound::AtLeast(b) => value >= b,
            Bound::Above(b) => value > b,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub statistic: &'static str,
    pub value: f64,
    pub bound: Bound,
    pub cases: usize,
}

impl SuiteResult {
    fn new(
        name: &'static str,
        statistic: &'static str,
        value: f64,
        bound: Bound,
        cases: usize,
    ) -> Self {
        SuiteResult {
            name,
            statistic,
            value,
            bound,
            cases,
        }
    }

    pub fn passed(&self) -> bool {
        self.bound.holds(self.value)
    }
}

/// `radii × angles` polar grid.
pub fn polar_grid(radii: &[f64], angles: usize) -> Vec<Complex64> {
    radii
        .iter()
        .flat_map(|&r| {
            (0..angles).map(move |k| Complex64::from_polar(r, TAU * k as f64 / angles as f64))
        })
        .collect()
}

/// Grid for the identities: radii 0.3, 0.7, 1.0 with 64 angles.
pub fn identity_grid() -> Vec<Complex64> {
    polar_grid(&[0.3, 0.7, 1.0], 64)
}

/// Grid for the inequalities: radii 0.1, 0.2, ..., 1.0 with 64 angles.
pub fn inequality_grid() -> Vec<Complex64> {
    let radii: Vec<f64> = (1..=10).map(|k| k as f64 / 10.0).collect();
    polar_grid(&radii, 64)
}

/// Random parameters: degree uniform in `0..=max_degree`, entries uniform by
/// area in the disk of the given radius.
pub fn random_gammas(
    seed: u64,
    count: usize,
    max_degree: usize,
    radius: f64,
) -> Vec<Vec<Complex64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(0..=max_degree);
            (0..=n)
                .map(|_| random_disk_point(&mut rng, radius))
                .collect()
        })
        .collect()
}

pub fn random_disk_point<R: Rng>(rng: &mut R, radius: f64) -> Complex64 {
    Complex64::from_polar(radius * rng.gen::<f64>().sqrt(), rng.gen_range(0.0..TAU))
}

/// Max residual of `Ã(z) = z^n conj(B(1/conj z))` and
/// `B̃(z) = z^n conj(A(1/conj z))` over nonzero grid points.
pub fn mirror_residual(set: &SchurPolynomials, grid: &[Complex64]) -> f64 {
    let n = set.degree() as i32;
    grid.iter()
        .filter(|z| z.norm() > 0.0)
        .map(|&z| {
            let w = 1.0 / z.conj();
            let zn = z.powi(n);
            let r1 = (set.a_tilde.eval(z) - zn * set.b.eval(w).conj()).norm();
            let r2 = (set.b_tilde.eval(z) - zn * set.a.eval(w).conj()).norm();
            r1.max(r2)
        })
        .fold(0.0, f64::max)
}

/// Max residual of `ÃB - AB̃ = z^n ∏(1 - |γ|²)`.
pub fn determinant_residual(set: &SchurPolynomials, grid: &[Complex64]) -> f64 {
    let n = set.degree() as i32;
    grid.iter()
        .map(|&z| {
            let lhs = set.a_tilde.eval(z) * set.b.eval(z) - set.a.eval(z) * set.b_tilde.eval(z);
            (lhs - z.powi(n) * set.weight()).norm()
        })
        .fold(0.0, f64::max)
}

/// Min of `|B|² - |A|² - ∏(1 - |γ|²)`; non-negative on the closed disk.
pub fn coercivity_slack(set: &SchurPolynomials, grid: &[Complex64]) -> f64 {
    grid.iter()
        .map(|&z| set.b.eval(z).norm_sqr() - set.a.eval(z).norm_sqr() - set.weight())
        .fold(f64::INFINITY, f64::min)
}

/// Min of `|B| - |B̃|`; positive on the closed disk.
pub fn domination_margin(set: &SchurPolynomials, grid: &[Complex64]) -> f64 {
    grid.iter()
        .map(|&z| set.b.eval(z).norm() - set.b_tilde.eval(z).norm())
        .fold(f64::INFINITY, f64::min)
}

/// Runs the four polynomial suites over `gammas`. Parameters outside the
/// open disk are rejected with a contract violation.
pub fn polynomial_suites(gammas: &[Vec<Complex64>]) -> Result<Vec<SuiteResult>> {
    let sets = gammas
        .iter()
        .map(|g| build_polynomials(g))
        .collect::<Result<Vec<_>>>()?;
    let id_grid = identity_grid();
    let ineq_grid = inequality_grid();
    let fold_max = |f: &dyn Fn(&SchurPolynomials) -> f64| sets.iter().map(f).fold(0.0, f64::max);
    let fold_min =
        |f: &dyn Fn(&SchurPolynomials) -> f64| sets.iter().map(f).fold(f64::INFINITY, f64::min);
    let cases = sets.len();
    Ok(vec![
        SuiteResult::new(
            "mirror identity",
            "max residual",
            fold_max(&|s| mirror_residual(s, &id_grid)),
            Bound::Below(IDENTITY_TOL),
            cases,
        ),
        SuiteResult::new(
            "determinant identity",
            "max residual",
            fold_max(&|s| determinant_residual(s, &id_grid)),
            Bound::Below(IDENTITY_TOL),
            cases,
        ),
        SuiteResult::new(
            "denominator coercivity",
            "min slack",
            fold_min(&|s| coercivity_slack(s, &ineq_grid)),
            Bound::AtLeast(-IDENTITY_TOL),
            cases,
        ),
        SuiteResult::new(
            "strict domination |B~| < |B|",
            "min margin",
            fold_min(&|s| domination_margin(s, &ineq_grid)),
            Bound::Above(0.0),
            cases,
        ),
    ])
}

/// Max componentwise error of `schur_parameters ∘ data_from_parameters`.
pub fn round_trip_error(gammas: &[Vec<Complex64>]) -> Result<f64> {
    let tol = ToleranceConfig::default();
    let mut worst: f64 = 0.0;
    for gamma in gammas {
        let data = data_from_parameters(gamma)?;
        match schur_parameters(&data, &tol) {
            SchurClassification::Interior { gamma: back } if back.len() == gamma.len() => {
                for (a, b) in back.iter().zip(gamma) {
                    worst = worst.max((a - b).norm());
                }
            }
            _ => return Ok(f64::INFINITY),
        }
    }
    Ok(worst)
}

/// Max `|omega_nested - omega_rational|` over random `(γ, ε, z)` with
/// `|ε|, |z| ≤ 1`.
pub fn representation_gap(seed: u64, count: usize) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..count {
        let n = rng.gen_range(0..=8);
        let gamma: Vec<Complex64> = (0..=n).map(|_| random_disk_point(&mut rng, 0.95)).collect();
        let eps = random_disk_point(&mut rng, 1.0);
        let z = random_disk_point(&mut rng, 1.0);
        let set = build_polynomials(&gamma)?;
        let gap = (omega_nested(&gamma, eps, z)? - omega_rational(&set, eps, z)?).norm();
        worst = worst.max(gap);
    }
    Ok(worst)
}

/// The full default suite: 500 random parameters (degree ≤ 8, radius 0.9)
/// and 1000 evaluation triples.
pub fn run_default(seed: u64) -> Result<Vec<SuiteResult>> {
    let gammas = random_gammas(seed, 500, 8, 0.9);
    let mut out = polynomial_suites(&gammas)?;
    out.push(SuiteResult::new(
        "schur round trip",
        "max error",
        round_trip_error(&gammas)?,
        Bound::Below(ROUND_TRIP_TOL),
        gammas.len(),
    ));
    out.push(SuiteResult::new(
        "nested vs rational",
        "max gap",
        representation_gap(seed.wrapping_add(1), 1000)?,
        Bound::Below(EQUIVALENCE_TOL),
        1000,
    ));
    Ok(out)
}

/// Runs the polynomial suites on caller-supplied parameters.
pub fn run_on(gamma: &[Complex64]) -> Result<Vec<SuiteResult>> {
    if gamma.is_empty() {
        return Err(SchurError::contract("Schur parameter must be non-empty"));
    }
    polynomial_suites(&[gamma.to_vec()])
}
