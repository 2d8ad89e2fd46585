//! Schur polynomials and the extremal interpolants built from them.
//!
//! From an interior Schur parameter `γ = (γ0, ..., γn)` the four polynomials
//! `A, B, Ã, B̃` are seeded with `A0 = conj(γ0), B0 = 1, Ã0 = 1, B̃0 = γ0` and
//! advanced by
//!
//! ```text
//! [A' Ã']   [z       conj(g)] [A Ã]
//! [B' B̃'] = [g·z     1      ] [B B̃]      g = γ_{k+1}
//! ```
//!
//! Every interpolant of the data is then `(zÃω* + B̃) / (zAω* + B)` for some
//! `ω*` in the closed unit ball of `H^∞`.

use num_complex::Complex64;

use crate::error::{Result, SchurError};
use crate::schur::{mobius, DENOM_FLOOR};

/// Slack on `|ε| ≤ 1` and `|z| ≤ 1` preconditions, absorbing rounding in
/// `e^{iθ}`.
const UNIT_SLACK: f64 = 1e-12;

/// Dense polynomial, coefficients in ascending degree order.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial(pub Vec<Complex64>);

impl Polynomial {
    pub fn coeffs(&self) -> &[Complex64] {
        &self.0
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        eval_poly(self, z)
    }

    /// Multiplies by `scale · z`, dropping the top coefficient. Callers keep
    /// the formal degree large enough that it is always zero.
    fn shifted(&self, scale: Complex64) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); self.0.len()];
        for (dst, &src) in out.iter_mut().skip(1).zip(&self.0) {
            *dst = scale * src;
        }
        out
    }
}

/// Horner evaluation.
pub fn eval_poly(p: &Polynomial, z: Complex64) -> Complex64 {
    p.0.iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// The Schur polynomials `A_n, B_n, Ã_n, B̃_n` of an interior parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct SchurPolynomials {
    gamma: Vec<Complex64>,
    pub a: Polynomial,
    pub b: Polynomial,
    pub a_tilde: Polynomial,
    pub b_tilde: Polynomial,
    /// `∏ (1 - |γ_k|²)`
    weight: f64,
}

/// Point values of the four Schur polynomials.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SchurValues {
    pub a: Complex64,
    pub b: Complex64,
    pub a_tilde: Complex64,
    pub b_tilde: Complex64,
}

impl SchurPolynomials {
    pub fn gamma(&self) -> &[Complex64] {
        &self.gamma
    }

    pub fn degree(&self) -> usize {
        self.gamma.len() - 1
    }

    /// `∏_{k=0}^{n} (1 - |γ_k|²)`.
    pub fn weight(&self) -> f64 {
        self.weight
    }

    pub(crate) fn values(&self, z: Complex64) -> SchurValues {
        SchurValues {
            a: self.a.eval(z),
            b: self.b.eval(z),
            a_tilde: self.a_tilde.eval(z),
            b_tilde: self.b_tilde.eval(z),
        }
    }

    /// Derivative at the origin of the lift of `ω*`, given `ω*(0)`.
    pub(crate) fn lift_derivative_at_zero(&self, omega_star_at_zero: Complex64) -> Complex64 {
        let coeff = |p: &Polynomial, k: usize| p.0.get(k).copied().unwrap_or_default();
        let g0 = self.gamma[0];
        (coeff(&self.a_tilde, 0) - g0 * coeff(&self.a, 0)) * omega_star_at_zero
            + coeff(&self.b_tilde, 1)
            - g0 * coeff(&self.b, 1)
    }
}

/// Builds the Schur polynomials from an interior Schur parameter.
pub fn build_polynomials(gamma: &[Complex64]) -> Result<SchurPolynomials> {
    if gamma.is_empty() {
        return Err(SchurError::contract("Schur parameter must be non-empty"));
    }
    if let Some(p) = gamma.iter().position(|g| !(g.norm() < 1.0)) {
        return Err(SchurError::contract(format!(
            "Schur parameter γ_{p} has modulus {} ≥ 1",
            gamma[p].norm()
        )));
    }
    let len = gamma.len();
    let zero = Complex64::new(0.0, 0.0);
    let seed = |c: Complex64| {
        let mut v = vec![zero; len];
        v[0] = c;
        Polynomial(v)
    };
    let g0 = gamma[0];
    let mut a = seed(g0.conj());
    let mut b = seed(Complex64::new(1.0, 0.0));
    let mut a_tilde = seed(Complex64::new(1.0, 0.0));
    let mut b_tilde = seed(g0);

    for &g in &gamma[1..] {
        let one = Complex64::new(1.0, 0.0);
        let za = a.shifted(one);
        let za_t = a_tilde.shifted(one);
        let gza = a.shifted(g);
        let gza_t = a_tilde.shifted(g);
        let gc = g.conj();
        let next_a: Vec<_> = za.iter().zip(&b.0).map(|(x, y)| x + gc * y).collect();
        let next_a_t: Vec<_> = za_t
            .iter()
            .zip(&b_tilde.0)
            .map(|(x, y)| x + gc * y)
            .collect();
        let next_b: Vec<_> = gza.iter().zip(&b.0).map(|(x, y)| x + y).collect();
        let next_b_t: Vec<_> = gza_t.iter().zip(&b_tilde.0).map(|(x, y)| x + y).collect();
        a = Polynomial(next_a);
        a_tilde = Polynomial(next_a_t);
        b = Polynomial(next_b);
        b_tilde = Polynomial(next_b_t);
    }

    let weight = gamma.iter().map(|g| 1.0 - g.norm_sqr()).product();
    Ok(SchurPolynomials {
        gamma: gamma.to_vec(),
        a,
        b,
        a_tilde,
        b_tilde,
        weight,
    })
}

fn check_unit(what: &str, v: Complex64) -> Result<()> {
    if v.norm() > 1.0 + UNIT_SLACK {
        return Err(SchurError::contract(format!(
            "{what} must lie in the closed unit disk, got modulus {}",
            v.norm()
        )));
    }
    Ok(())
}

/// `ω_{γ,ε}(z) = σ_{γ0}(z σ_{γ1}(... z σ_{γn}(ε z) ...))`, evaluated from the
/// inside out.
pub fn omega_nested(gamma: &[Complex64], epsilon: Complex64, z: Complex64) -> Result<Complex64> {
    check_unit("ε", epsilon)?;
    check_unit("z", z)?;
    if gamma.is_empty() {
        return Err(SchurError::contract("Schur parameter must be non-empty"));
    }
    gamma
        .iter()
        .rev()
        .try_fold(epsilon, |w, &g| mobius(g, z * w))
}

/// `ω_{γ,ε}(z) = (εzÃ_n + B̃_n) / (εzA_n + B_n)`.
pub fn omega_rational(
    set: &SchurPolynomials,
    epsilon: Complex64,
    z: Complex64,
) -> Result<Complex64> {
    check_unit("ε", epsilon)?;
    check_unit("z", z)?;
    lift_value(set, epsilon, z)
}

fn lift_value(set: &SchurPolynomials, omega_star: Complex64, z: Complex64) -> Result<Complex64> {
    let v = set.values(z);
    let t = z * omega_star;
    let den = t * v.a + v.b;
    if den.norm() < DENOM_FLOOR {
        return Err(SchurError::DegenerateDenominator {
            modulus: den.norm(),
        });
    }
    Ok((t * v.a_tilde + v.b_tilde) / den)
}

/// Lifts a function `ω*` in the closed unit ball to the interpolant
/// `(zÃω* + B̃) / (zAω* + B)`. The bound `|ω*| ≤ 1` is only checked at `z`.
pub fn schur_lift<F>(set: &SchurPolynomials, omega_star: F, z: Complex64) -> Result<Complex64>
where
    F: Fn(Complex64) -> Complex64,
{
    if z.norm() >= 1.0 {
        return Err(SchurError::contract(format!(
            "schur_lift needs |z| < 1, got {}",
            z.norm()
        )));
    }
    let w = omega_star(z);
    if !(w.norm() <= 1.0 + 1e-9) {
        return Err(SchurError::contract(format!(
            "ω* must be bounded by one, |ω*(z)| = {}",
            w.norm()
        )));
    }
    lift_value(set, w, z)
}

/// The disk `|ω(z) - ρ| ≤ r` containing the values at `z` of all
/// interpolants of the data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VariabilityDisk {
    pub center: Complex64,
    pub radius: f64,
}

pub fn variability_disk(set: &SchurPolynomials, z: Complex64) -> Result<VariabilityDisk> {
    let abs_z = z.norm();
    if abs_z >= 1.0 {
        return Err(SchurError::contract(format!(
            "variability_disk needs |z| < 1, got {abs_z}"
        )));
    }
    let v = set.values(z);
    let z2 = abs_z * abs_z;
    let den = v.b.norm_sqr() - z2 * v.a.norm_sqr();
    let center = (v.b.conj() * v.b_tilde - z2 * v.a.conj() * v.a_tilde) / den;
    let radius = abs_z.powi(set.degree() as i32 + 1) * set.weight / den;
    Ok(VariabilityDisk { center, radius })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::TAU;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn real(v: &[f64]) -> Vec<Complex64> {
        v.iter().map(|&x| c(x, 0.0)).collect()
    }

    fn poly_close(p: &Polynomial, expected: &[f64]) {
        let e = real(expected);
        for (k, want) in e.iter().enumerate() {
            let got = p.0.get(k).copied().unwrap_or_default();
            assert!((got - want).norm() < 1e-15, "{p:?} vs {expected:?}");
        }
        assert!(p.0[e.len()..].iter().all(|x| x.norm() == 0.0));
    }

    #[test]
    fn seed_polynomials() {
        let s = build_polynomials(&real(&[0.5])).unwrap();
        poly_close(&s.a, &[0.5]);
        poly_close(&s.b, &[1.0]);
        poly_close(&s.a_tilde, &[1.0]);
        poly_close(&s.b_tilde, &[0.5]);
    }

    #[test]
    fn one_step_polynomials() {
        let s = build_polynomials(&real(&[0.5, 0.5])).unwrap();
        poly_close(&s.a, &[0.5, 0.5]);
        poly_close(&s.b, &[1.0, 0.25]);
        poly_close(&s.a_tilde, &[0.25, 1.0]);
        poly_close(&s.b_tilde, &[0.5, 0.5]);
    }

    #[test]
    fn zero_parameters() {
        let s = build_polynomials(&[c(0.0, 0.0); 4]).unwrap();
        poly_close(&s.a, &[]);
        poly_close(&s.b, &[1.0]);
        poly_close(&s.a_tilde, &[0.0, 0.0, 0.0, 1.0]);
        poly_close(&s.b_tilde, &[]);
    }

    #[test]
    fn build_rejects_unimodular() {
        assert!(matches!(
            build_polynomials(&real(&[0.5, 1.0])),
            Err(SchurError::ContractViolation(_))
        ));
        assert!(build_polynomials(&[]).is_err());
    }

    #[test]
    fn normalisation_at_origin() {
        let gamma = vec![c(0.3, 0.1), c(-0.2, 0.5), c(0.7, -0.1)];
        let s = build_polynomials(&gamma).unwrap();
        assert_eq!(s.b.0[0], c(1.0, 0.0));
        assert_eq!(s.b_tilde.0[0], gamma[0]);
        assert_eq!(*s.a_tilde.0.last().unwrap(), c(1.0, 0.0));
    }

    #[test]
    fn horner_examples() {
        assert_eq!(
            eval_poly(&Polynomial(real(&[1.0, 0.25])), c(0.0, 0.0)),
            c(1.0, 0.0)
        );
        assert_eq!(
            eval_poly(&Polynomial(real(&[0.5, 0.5])), c(1.0, 0.0)),
            c(1.0, 0.0)
        );
        assert_eq!(
            eval_poly(&Polynomial(real(&[0.0, 0.0, 1.0])), c(0.0, 2.0)),
            c(-4.0, 0.0)
        );
    }

    #[test]
    fn nested_examples() {
        let gamma = vec![c(0.2, -0.3), c(0.5, 0.1)];
        let eps = c(0.6, 0.2);
        assert_eq!(omega_nested(&gamma, eps, c(0.0, 0.0)).unwrap(), gamma[0]);

        let z = c(0.3, 0.4);
        let w = omega_nested(&[c(0.0, 0.0); 2], eps, z).unwrap();
        assert!((w - eps * z * z).norm() < 1e-15);

        let w = omega_nested(&real(&[0.5, 0.5]), c(0.0, 0.0), z).unwrap();
        assert!((w - (0.5 + 0.5 * z) / (1.0 + 0.25 * z)).norm() < 1e-15);

        assert!(omega_nested(&gamma, c(1.1, 0.0), z).is_err());
    }

    #[test]
    fn rational_examples() {
        let s = build_polynomials(&real(&[0.5, 0.5])).unwrap();
        let w = omega_rational(&s, c(0.0, 0.0), c(0.2, 0.0)).unwrap();
        assert!((w - c(0.6 / 1.05, 0.0)).norm() < 1e-15);

        let s = build_polynomials(&[c(0.3, 0.4), c(0.1, 0.0)]).unwrap();
        assert_eq!(
            omega_rational(&s, c(0.0, 1.0), c(0.0, 0.0)).unwrap(),
            c(0.3, 0.4)
        );

        let s = build_polynomials(&[c(0.0, 0.0); 2]).unwrap();
        let w = omega_rational(&s, c(1.0, 0.0), c(0.0, 1.0)).unwrap();
        assert!((w - c(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn lift_examples() {
        let gamma = vec![c(0.4, 0.2), c(-0.3, 0.3)];
        let s = build_polynomials(&gamma).unwrap();
        let z = c(0.25, -0.5);
        let eps = c(0.0, -0.8);
        assert_eq!(
            schur_lift(&s, |_| eps, z).unwrap(),
            omega_rational(&s, eps, z).unwrap()
        );
        let w = schur_lift(&s, |_| c(0.0, 0.0), z).unwrap();
        assert!((w - s.b_tilde.eval(z) / s.b.eval(z)).norm() < 1e-15);

        let s = build_polynomials(&[c(0.0, 0.0); 2]).unwrap();
        let w = schur_lift(&s, |z| z, c(0.3, 0.0)).unwrap();
        assert!((w - c(0.027, 0.0)).norm() < 1e-15);

        assert!(schur_lift(&s, |_| c(2.0, 0.0), c(0.3, 0.0)).is_err());
        assert!(schur_lift(&s, |z| z, c(1.0, 0.0)).is_err());
    }

    #[test]
    fn lift_interpolates_data() {
        // Taylor coefficients of the lift via the discrete Cauchy integral
        let gamma = vec![c(0.1, 0.6), c(-0.4, 0.2), c(0.3, -0.3)];
        let s = build_polynomials(&gamma).unwrap();
        let data = crate::schur::data_from_parameters(&gamma).unwrap();
        let omega_star = |z: Complex64| (z - c(0.5, 0.1)) / (1.0 - c(0.5, -0.1) * z) * c(0.0, 1.0);
        let m = 128;
        let r = 0.4;
        let vals: Vec<_> = (0..m)
            .map(|k| {
                schur_lift(
                    &s,
                    omega_star,
                    Complex64::from_polar(r, TAU * k as f64 / m as f64),
                )
                .unwrap()
            })
            .collect();
        for (p, want) in data.coeffs().iter().enumerate() {
            let got: Complex64 = vals
                .iter()
                .enumerate()
                .map(|(k, v)| v * Complex64::from_polar(1.0, -TAU * (p * k) as f64 / m as f64))
                .sum::<Complex64>()
                / (m as f64 * r.powi(p as i32));
            assert!(
                (got - want).norm() < 1e-12,
                "coefficient {p}: {got} vs {want}"
            );
        }
    }

    /// Center and radius of the circle traced by ε ↦ ω_{γ,ε}(z), |ε| = 1,
    /// from three sampled points.
    fn circle_through(set: &SchurPolynomials, z: Complex64) -> (Complex64, f64) {
        let p: Vec<_> = [0.0, TAU / 3.0, 2.0 * TAU / 3.0]
            .iter()
            .map(|&t| omega_nested(set.gamma(), Complex64::from_polar(1.0, t), z).unwrap())
            .collect();
        let (a, b, cc) = (p[0], p[1], p[2]);
        let d = 2.0 * (a.re * (b.im - cc.im) + b.re * (cc.im - a.im) + cc.re * (a.im - b.im));
        let ux = (a.norm_sqr() * (b.im - cc.im)
            + b.norm_sqr() * (cc.im - a.im)
            + cc.norm_sqr() * (a.im - b.im))
            / d;
        let uy = (a.norm_sqr() * (cc.re - b.re)
            + b.norm_sqr() * (a.re - cc.re)
            + cc.norm_sqr() * (b.re - a.re))
            / d;
        let center = c(ux, uy);
        (center, (a - center).norm())
    }

    #[test]
    fn disk_examples() {
        let s = build_polynomials(&[c(0.2, 0.3), c(0.5, 0.0)]).unwrap();
        let d = variability_disk(&s, c(0.0, 0.0)).unwrap();
        assert_eq!(d.center, c(0.2, 0.3));
        assert_eq!(d.radius, 0.0);

        let s = build_polynomials(&[c(0.0, 0.0); 2]).unwrap();
        let z = c(0.3, 0.4);
        let d = variability_disk(&s, z).unwrap();
        let (oc, or) = circle_through(&s, z);
        assert!(d.center.norm() < 1e-15 && oc.norm() < 1e-12);
        assert!((d.radius - 0.25).abs() < 1e-15 && (or - 0.25).abs() < 1e-12);

        let s = build_polynomials(&real(&[0.5])).unwrap();
        let d = variability_disk(&s, c(0.5, 0.0)).unwrap();
        let (oc, or) = circle_through(&s, c(0.5, 0.0));
        assert!((oc - c(0.4, 0.0)).norm() < 1e-12 && (or - 0.4).abs() < 1e-12);
        assert!((d.center - c(0.4, 0.0)).norm() < 1e-15);
        assert!((d.radius - 0.4).abs() < 1e-15);

        assert!(variability_disk(&s, c(1.0, 0.0)).is_err());
    }

    fn disk_point(radius: f64) -> impl Strategy<Value = Complex64> {
        (0.0..1.0f64, 0.0..TAU).prop_map(move |(u, t)| Complex64::from_polar(radius * u.sqrt(), t))
    }

    proptest! {
        #[test]
        fn nested_equals_rational(
            gamma in prop::collection::vec(disk_point(0.95), 1..10),
            eps in disk_point(1.0),
            z in disk_point(1.0),
        ) {
            let s = build_polynomials(&gamma).unwrap();
            let a = omega_nested(&gamma, eps, z).unwrap();
            let b = omega_rational(&s, eps, z).unwrap();
            prop_assert!((a - b).norm() < 1e-12);
        }

        #[test]
        fn blaschke_on_circle(
            gamma in prop::collection::vec(disk_point(0.9), 1..9),
            t in 0.0..TAU,
            s in 0.0..TAU,
        ) {
            let set = build_polynomials(&gamma).unwrap();
            let w = omega_rational(&set, Complex64::from_polar(1.0, t), Complex64::from_polar(1.0, s)).unwrap();
            prop_assert!((w.norm() - 1.0).abs() < 1e-10);
        }

        #[test]
        fn extremal_values_on_disk_boundary(
            gamma in prop::collection::vec(disk_point(0.9), 1..9),
            z in disk_point(0.99),
            t in 0.0..TAU,
            shrink in 0.0..0.99f64,
        ) {
            let set = build_polynomials(&gamma).unwrap();
            let d = variability_disk(&set, z).unwrap();
            let eps = Complex64::from_polar(1.0, t);
            let on = omega_rational(&set, eps, z).unwrap();
            prop_assert!(((on - d.center).norm() - d.radius).abs() < 1e-10);
            if d.radius > 1e-6 {
                let inside = omega_rational(&set, eps * shrink, z).unwrap();
                prop_assert!((inside - d.center).norm() < d.radius);
            }
        }
    }
}
