//! Variability regions of `∫_0^{z0} ζ^j (g(ζ) - g(0)) dζ` over analytic
//! `g = P ∘ ω` whose `ω` interpolates prescribed Carathéodory data.
//!
//! Interior data give a convex Jordan domain whose boundary is traced by
//! `ε ↦ Q(z0, ε)` on the unit circle, where `Q` integrates the extremal
//! interpolant `ω_{γ,ε}`. Boundary data give a single point and exterior data
//! the empty set.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::domains::{half_plane, DomainMap};
use crate::error::{Result, SchurError};
use crate::geometry;
use crate::poly::{build_polynomials, schur_lift, SchurPolynomials};
use crate::quad::integrate_segment;
use crate::schur::{
    data_from_parameters, mobius, schur_parameters, CaratheodoryData, SchurClassification,
    ToleranceConfig,
};

/// Smallest boundary sampling accepted by [`region`].
pub const MIN_SAMPLES: usize = 16;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

#[derive(Debug, Clone)]
pub struct RegionRequest {
    pub data: CaratheodoryData,
    pub j: i32,
    pub z0: Complex64,
    pub domain: DomainMap,
    pub samples: usize,
    pub tol: ToleranceConfig,
}

impl RegionRequest {
    /// Builds a request from interior Schur parameters instead of raw data.
    pub fn from_gamma(
        gamma: &[Complex64],
        j: i32,
        z0: Complex64,
        domain: DomainMap,
        samples: usize,
        tol: ToleranceConfig,
    ) -> Result<Self> {
        Ok(RegionRequest {
            data: data_from_parameters(gamma)?,
            j,
            z0,
            domain,
            samples,
            tol,
        })
    }

    pub fn validate(&self) -> Result<()> {
        check_j(self.j)?;
        check_z0(self.z0)?;
        if self.samples < MIN_SAMPLES {
            return Err(SchurError::invalid(format!(
                "at least {MIN_SAMPLES} boundary samples are required, got {}",
                self.samples
            )));
        }
        self.tol.validate()
    }
}

fn check_j(j: i32) -> Result<()> {
    if j < -1 {
        return Err(SchurError::invalid(format!(
            "exponent j must be ≥ -1, got {j}"
        )));
    }
    Ok(())
}

fn check_z0(z0: Complex64) -> Result<()> {
    let r = z0.norm();
    if !(r > 0.0 && r < 1.0) {
        return Err(SchurError::invalid(format!(
            "z0 must satisfy 0 < |z0| < 1, got |z0| = {r}"
        )));
    }
    Ok(())
}

/// A sampled convex Jordan region.
#[derive(Debug, Clone, PartialEq)]
pub struct JordanRegion {
    /// `θ_k = 2πk/N`.
    pub eps_angles: Vec<f64>,
    /// `Q(z0, e^{iθ_k})`.
    pub boundary: Vec<Complex64>,
    /// `Q(z0, 0)`, an interior point.
    pub interior_witness: Complex64,
}

impl JordanRegion {
    pub fn contains(&self, w: Complex64, geom_tol: f64) -> bool {
        geometry::contains(&self.boundary, w, geom_tol)
    }

    /// Outward distance of `w` from the sampled hull; negative inside.
    pub fn signed_distance(&self, w: Complex64) -> f64 {
        geometry::signed_distance(&self.boundary, w)
    }

    pub fn convexity_defect(&self) -> f64 {
        geometry::convexity_defect(&self.boundary)
    }

    /// Enclosed area of the boundary curve, computed spectrally.
    pub fn area(&self) -> f64 {
        geometry::spectral_area(&self.boundary)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum RegionResult {
    Empty,
    SinglePoint { w0: Complex64 },
    Jordan(JordanRegion),
}

/// `ζ^j (P(ω(ζ)) - P(c0))`, with the removable value at `ζ = 0` for `j = -1`
/// supplied by the caller.
fn weighted_increment<F>(
    domain: &DomainMap,
    j: i32,
    p_c0: Complex64,
    zero_limit: Complex64,
    omega: F,
    zeta: Complex64,
) -> Result<Complex64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    if zeta == ZERO {
        return Ok(if j == -1 { zero_limit } else { ZERO });
    }
    let diff = domain.eval(omega(zeta)?)? - p_c0;
    Ok(match j {
        0 => diff,
        _ => diff * zeta.powi(j),
    })
}

fn check_epsilon(epsilon: Complex64) -> Result<()> {
    if epsilon.norm() > 1.0 + 1e-12 {
        return Err(SchurError::contract(format!(
            "ε must lie in the closed unit disk, got modulus {}",
            epsilon.norm()
        )));
    }
    Ok(())
}

/// The integrand of `Q(z, ε)` at `ζ`: `ζ^j (P(ω_{γ,ε}(ζ)) - P(γ0))`.
///
/// For `j = -1` and `ζ = 0` this returns the limit `P'(γ0) ω'_{γ,ε}(0)`.
pub fn integrand(
    set: &SchurPolynomials,
    epsilon: Complex64,
    j: i32,
    domain: &DomainMap,
    zeta: Complex64,
) -> Result<Complex64> {
    check_j(j)?;
    check_epsilon(epsilon)?;
    if zeta.norm() >= 1.0 {
        return Err(SchurError::contract(format!(
            "integrand needs |ζ| < 1, got {}",
            zeta.norm()
        )));
    }
    let extremal = Extremal::new(set, domain, j, |_| epsilon, epsilon)?;
    extremal.at(zeta)
}

/// Integrand of a lifted interpolant with all per-call constants resolved.
struct Extremal<'a, F> {
    set: &'a SchurPolynomials,
    domain: &'a DomainMap,
    j: i32,
    omega_star: F,
    p_c0: Complex64,
    zero_limit: Complex64,
}

impl<'a, F> Extremal<'a, F>
where
    F: Fn(Complex64) -> Complex64,
{
    fn new(
        set: &'a SchurPolynomials,
        domain: &'a DomainMap,
        j: i32,
        omega_star: F,
        omega_star_at_zero: Complex64,
    ) -> Result<Self> {
        let c0 = set.gamma()[0];
        let p_c0 = domain.eval(c0)?;
        let zero_limit = if j == -1 {
            domain.derivative(c0)? * set.lift_derivative_at_zero(omega_star_at_zero)
        } else {
            ZERO
        };
        Ok(Extremal {
            set,
            domain,
            j,
            omega_star,
            p_c0,
            zero_limit,
        })
    }

    fn at(&self, zeta: Complex64) -> Result<Complex64> {
        weighted_increment(
            self.domain,
            self.j,
            self.p_c0,
            self.zero_limit,
            |z| schur_lift(self.set, &self.omega_star, z),
            zeta,
        )
    }

    fn integrate(&self, z0: Complex64, quad_tol: f64) -> Result<Complex64> {
        integrate_segment(|z| self.at(z), ZERO, z0, quad_tol)
    }
}

/// `Q_{γ,j}(z0, ε) = ∫_0^{z0} ζ^j (P(ω_{γ,ε}(ζ)) - P(γ0)) dζ` along the
/// straight segment.
pub fn q_value(
    set: &SchurPolynomials,
    domain: &DomainMap,
    j: i32,
    z0: Complex64,
    epsilon: Complex64,
    quad_tol: f64,
) -> Result<Complex64> {
    check_j(j)?;
    check_z0(z0)?;
    check_epsilon(epsilon)?;
    Extremal::new(set, domain, j, |_| epsilon, epsilon)?.integrate(z0, quad_tol)
}

/// The same functional for the interpolant lifted from an arbitrary `ω*`
/// with `sup |ω*| ≤ 1`.
pub fn integrate_lift<F>(
    set: &SchurPolynomials,
    domain: &DomainMap,
    j: i32,
    z0: Complex64,
    omega_star: F,
    quad_tol: f64,
) -> Result<Complex64>
where
    F: Fn(Complex64) -> Complex64,
{
    check_j(j)?;
    check_z0(z0)?;
    let at_zero = omega_star(ZERO);
    Extremal::new(set, domain, j, omega_star, at_zero)?.integrate(z0, quad_tol)
}

/// Samples `Q(z0, e^{iθ_k})` at `θ_k = 2πk/n`.
pub fn boundary_curve(
    set: &SchurPolynomials,
    domain: &DomainMap,
    j: i32,
    z0: Complex64,
    n: usize,
    quad_tol: f64,
) -> Result<(Vec<f64>, Vec<Complex64>)> {
    let angles: Vec<f64> = (0..n).map(|k| TAU * k as f64 / n as f64).collect();
    let values = angles
        .par_iter()
        .map(|&t| q_value(set, domain, j, z0, Complex64::from_polar(1.0, t), quad_tol))
        .collect::<Result<Vec<_>>>()?;
    Ok((angles, values))
}

/// Computes the variability region for a request.
pub fn region(request: &RegionRequest) -> Result<RegionResult> {
    request.validate()?;
    let tol = &request.tol;
    match schur_parameters(&request.data, tol) {
        SchurClassification::Exterior { .. } => Ok(RegionResult::Empty),
        SchurClassification::Boundary {
            gamma_prefix,
            unimodular_index,
        } => {
            let w0 = single_point(
                &gamma_prefix,
                unimodular_index,
                &request.data,
                &request.domain,
                request.j,
                request.z0,
                tol.quad_tol,
            )?;
            Ok(RegionResult::SinglePoint { w0 })
        }
        SchurClassification::Interior { gamma } => {
            let set = build_polynomials(&gamma)?;
            let (eps_angles, boundary) = boundary_curve(
                &set,
                &request.domain,
                request.j,
                request.z0,
                request.samples,
                tol.quad_tol,
            )?;
            if !geometry::is_simple(&boundary, tol.geom_tol) {
                return Err(SchurError::GeometryDegenerate(
                    "sampled boundary polygon is not simple".into(),
                ));
            }
            let interior_witness = q_value(
                &set,
                &request.domain,
                request.j,
                request.z0,
                ZERO,
                tol.quad_tol,
            )?;
            Ok(RegionResult::Jordan(JordanRegion {
                eps_angles,
                boundary,
                interior_witness,
            }))
        }
    }
}

/// The unique interpolant of boundary data,
/// `σ_{γ0}(ζ σ_{γ1}(... ζ σ_{γ_{i-1}}(γ_i ζ) ...))`, or the constant `γ0`
/// when `i = 0`.
pub fn boundary_interpolant(gamma_prefix: &[Complex64], zeta: Complex64) -> Result<Complex64> {
    let Some((&last, head)) = gamma_prefix.split_last() else {
        return Err(SchurError::contract("empty Schur parameter"));
    };
    head.iter()
        .rev()
        .try_fold(last, |w, &g| mobius(g, zeta * w))
}

/// The single point of the region for boundary data.
///
/// When `i = 0` the interpolant is the unimodular constant `c0`; the
/// integrand `P(c0) - P(c0)` vanishes identically and the point is `0`.
pub fn single_point(
    gamma_prefix: &[Complex64],
    unimodular_index: usize,
    data: &CaratheodoryData,
    domain: &DomainMap,
    j: i32,
    z0: Complex64,
    quad_tol: f64,
) -> Result<Complex64> {
    check_j(j)?;
    check_z0(z0)?;
    if unimodular_index == 0 {
        return Ok(ZERO);
    }
    let c = data.coeffs();
    let p_c0 = domain.eval(c[0])?;
    let zero_limit = if j == -1 {
        domain.derivative(c[0])? * c[1]
    } else {
        ZERO
    };
    integrate_segment(
        |zeta| {
            weighted_increment(
                domain,
                j,
                p_c0,
                zero_limit,
                |z| boundary_interpolant(gamma_prefix, z),
                zeta,
            )
        },
        ZERO,
        z0,
        quad_tol,
    )
}

/// The closed-form boundary curve of `{log f'(z0)}` over convex `f` with
/// `f''(0) = 2λ`:
///
/// ```text
/// -(1 - λcos(θ/2)/R) log(1 - e^{iθ/2} z0 / (iλ sin(θ/2) - R))
/// -(1 + λcos(θ/2)/R) log(1 - e^{iθ/2} z0 / (iλ sin(θ/2) + R)),
/// R = sqrt(1 - λ² sin²(θ/2))
/// ```
pub fn closed_form_curve(lambda: f64, z0: Complex64, theta: f64) -> Result<Complex64> {
    if !(0.0..1.0).contains(&lambda) {
        return Err(SchurError::invalid(format!(
            "λ must lie in [0, 1), got {lambda}"
        )));
    }
    check_z0(z0)?;
    let (s, c) = (0.5 * theta).sin_cos();
    let radical = (1.0 - lambda * lambda * s * s).sqrt();
    let rotated = Complex64::from_polar(1.0, 0.5 * theta) * z0;
    let ratio = lambda * c / radical;
    let log_term = |den: Complex64| -> Result<Complex64> {
        let arg = 1.0 - rotated / den;
        if arg.re <= 0.0 && arg.im.abs() <= 1e-14 {
            return Err(SchurError::BranchCutHit {
                re: arg.re,
                im: arg.im,
            });
        }
        Ok(arg.ln())
    };
    let minus = log_term(Complex64::new(-radical, lambda * s))?;
    let plus = log_term(Complex64::new(radical, lambda * s))?;
    Ok(-(1.0 - ratio) * minus - (1.0 + ratio) * plus)
}

/// Domain, data and exponent under which the general region reduces to the
/// convex-function case: `Ω` the right half-plane, `c = (0, λ)`, `j = -1`.
pub fn closed_form_setup(lambda: f64) -> Result<(DomainMap, CaratheodoryData, i32)> {
    if !(0.0..1.0).contains(&lambda) {
        return Err(SchurError::invalid(format!(
            "λ must lie in [0, 1), got {lambda}"
        )));
    }
    // g(0) = P(0) = 1 and g'(0) = P'(0) c1 = 2 c1
    let data = CaratheodoryData::new(vec![ZERO, Complex64::new(lambda, 0.0)])?;
    Ok((half_plane(), data, -1))
}

/// `factor · ∏ (z - a) / (1 - conj(a) z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlaschkeProduct {
    pub zeros: Vec<Complex64>,
    pub factor: Complex64,
}

/// Largest zero modulus drawn by [`BlaschkeProduct::random`].
pub const ORACLE_ZERO_RADIUS: f64 = 0.95;
/// Largest degree drawn by [`BlaschkeProduct::random`].
pub const ORACLE_MAX_DEGREE: usize = 6;

impl BlaschkeProduct {
    pub fn constant(factor: Complex64) -> Self {
        BlaschkeProduct {
            zeros: Vec::new(),
            factor,
        }
    }

    /// Degree uniform in `0..=6`, zeros uniform by area in the disk of
    /// radius 0.95, uniform unimodular factor.
    pub fn random<R: Rng>(rng: &mut R) -> Self {
        let degree = rng.gen_range(0..=ORACLE_MAX_DEGREE);
        let zeros = (0..degree)
            .map(|_| {
                let r = ORACLE_ZERO_RADIUS * rng.gen::<f64>().sqrt();
                Complex64::from_polar(r, rng.gen_range(0.0..TAU))
            })
            .collect();
        let factor = Complex64::from_polar(1.0, rng.gen_range(0.0..TAU));
        BlaschkeProduct { zeros, factor }
    }

    pub fn degree(&self) -> usize {
        self.zeros.len()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.zeros
            .iter()
            .fold(self.factor, |acc, &a| acc * (z - a) / (1.0 - a.conj() * z))
    }
}

/// One Monte-Carlo member of the region.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleSample {
    pub seed: u64,
    pub blaschke_degree: usize,
    pub zeros: Vec<Complex64>,
    pub unimodular_factor: Complex64,
    pub value: Complex64,
}

/// Draws a random finite Blaschke product `ω*`, lifts it to an interpolant
/// of the data and integrates the resulting `g = P ∘ ω`.
pub fn sample_member(
    set: &SchurPolynomials,
    domain: &DomainMap,
    j: i32,
    z0: Complex64,
    seed: u64,
    quad_tol: f64,
) -> Result<OracleSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let omega_star = BlaschkeProduct::random(&mut rng);
    let value = integrate_lift(set, domain, j, z0, |z| omega_star.eval(z), quad_tol)?;
    Ok(OracleSample {
        seed,
        blaschke_degree: omega_star.degree(),
        zeros: omega_star.zeros,
        unimodular_factor: omega_star.factor,
        value,
    })
}

/// SplitMix64 finaliser, used to derive per-sample seeds.
fn mix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Seed of the `index`-th sample of a batch.
pub fn sample_seed(base: u64, index: u64) -> u64 {
    mix(base ^ mix(index))
}

/// `count` oracle samples in index order; deterministic for a given seed.
pub fn sample_batch(
    set: &SchurPolynomials,
    domain: &DomainMap,
    j: i32,
    z0: Complex64,
    seed: u64,
    count: usize,
    quad_tol: f64,
) -> Result<Vec<OracleSample>> {
    (0..count as u64)
        .into_par_iter()
        .map(|i| sample_member(set, domain, j, z0, sample_seed(seed, i), quad_tol))
        .collect()
}
