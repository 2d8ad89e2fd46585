//! The Schur algorithm on Carathéodory data.
//!
//! Data `c = (c0, ..., cn)` is peeled one coefficient at a time: with
//! `γ_j = c_0^{(j)}` and `|γ_j| < 1`, the next data vector is
//!
//! ```text
//! c_0^{(j+1)} = c_1^{(j)} / (1 - |γ_j|²)
//! c_p^{(j+1)} = (c_{p+1}^{(j)} + conj(γ_j) Σ_{l=1..p} c_{p-l}^{(j+1)} c_l^{(j)}) / (1 - |γ_j|²)
//! ```
//!
//! A parameter of modulus greater than one, or a unimodular parameter followed
//! by a nonzero tail, means no bounded-by-one interpolant exists.

use num_complex::Complex64;

use crate::error::{Result, SchurError};

/// Denominators smaller than this are reported as degenerate.
pub(crate) const DENOM_FLOOR: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    /// Half-width of the band around `|γ| = 1` treated as unimodular.
    pub cls_tol: f64,
    /// Absolute error target for the segment quadrature.
    pub quad_tol: f64,
    /// Slack for hull containment and convexity checks.
    pub geom_tol: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        ToleranceConfig {
            cls_tol: 1e-12,
            quad_tol: 1e-10,
            geom_tol: 1e-6,
        }
    }
}

impl ToleranceConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.cls_tol >= 0.0 && self.cls_tol < 1.0) {
            return Err(SchurError::invalid(format!(
                "cls_tol must lie in [0, 1), got {}",
                self.cls_tol
            )));
        }
        if !(self.quad_tol > 0.0 && self.quad_tol.is_finite()) {
            return Err(SchurError::invalid(format!(
                "quad_tol must be positive, got {}",
                self.quad_tol
            )));
        }
        if !(self.geom_tol > 0.0 && self.geom_tol.is_finite()) {
            return Err(SchurError::invalid(format!(
                "geom_tol must be positive, got {}",
                self.geom_tol
            )));
        }
        Ok(())
    }
}

/// Prospective initial Taylor coefficients `(c0, ..., cn)` of a function in
/// the closed unit ball of `H^∞`.
#[derive(Debug, Clone, PartialEq)]
pub struct CaratheodoryData {
    coeffs: Vec<Complex64>,
}

impl CaratheodoryData {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(SchurError::invalid("Carathéodory data must be non-empty"));
        }
        if let Some(p) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(SchurError::invalid(format!(
                "coefficient {p} is not finite"
            )));
        }
        Ok(CaratheodoryData { coeffs })
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// The degree `n`; the data has `n + 1` entries.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn into_inner(self) -> Vec<Complex64> {
        self.coeffs
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExteriorReason {
    ModulusExceedsOne,
    UnimodularWithNonzeroTail,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SchurClassification {
    /// Every parameter lies strictly inside the disk; `gamma` has `n + 1` entries.
    Interior { gamma: Vec<Complex64> },
    /// `gamma_prefix[unimodular_index]` is unimodular and the remaining
    /// parameters vanish; the interpolant is a unique finite Blaschke product.
    Boundary {
        gamma_prefix: Vec<Complex64>,
        unimodular_index: usize,
    },
    /// No interpolant exists. `witness_index` is the index of the first
    /// parameter that is infinite or exceeds one in modulus.
    Exterior {
        witness_index: usize,
        reason: ExteriorReason,
    },
}

impl SchurClassification {
    pub fn label(&self) -> &'static str {
        match self {
            SchurClassification::Interior { .. } => "interior",
            SchurClassification::Boundary { .. } => "boundary",
            SchurClassification::Exterior { .. } => "exterior",
        }
    }
}

/// The disk automorphism `σ_a(z) = (z + a) / (1 + conj(a) z)`.
pub fn mobius(a: Complex64, z: Complex64) -> Result<Complex64> {
    if a.norm() >= 1.0 {
        return Err(SchurError::contract(format!(
            "Möbius parameter must satisfy |a| < 1, got |a| = {}",
            a.norm()
        )));
    }
    let den = 1.0 + a.conj() * z;
    if den.norm() < DENOM_FLOOR {
        return Err(SchurError::DegenerateDenominator {
            modulus: den.norm(),
        });
    }
    Ok((z + a) / den)
}

/// Inverse of [`mobius`]: `σ_a^{-1}(w) = (w - a) / (1 - conj(a) w)`.
pub fn mobius_inverse(a: Complex64, w: Complex64) -> Result<Complex64> {
    mobius(-a, w)
}

/// One step of the Schur recursion: maps `c^{(j)}` (length `m ≥ 2`) with
/// leading entry `gamma_j` to `c^{(j+1)}` (length `m - 1`).
pub fn schur_step(c: &[Complex64], gamma_j: Complex64) -> Result<Vec<Complex64>> {
    if c.len() < 2 {
        return Err(SchurError::contract(format!(
            "schur_step needs at least two coefficients, got {}",
            c.len()
        )));
    }
    if c[0] != gamma_j {
        return Err(SchurError::contract(
            "schur_step: gamma_j must equal the leading coefficient",
        ));
    }
    let modulus = gamma_j.norm();
    if modulus >= 1.0 {
        return Err(SchurError::contract(format!(
            "schur_step requires |γ| < 1, got {modulus}"
        )));
    }
    Ok(step_unchecked(c, gamma_j))
}

fn step_unchecked(c: &[Complex64], gamma: Complex64) -> Vec<Complex64> {
    let denom = 1.0 - gamma.norm_sqr();
    let conj = gamma.conj();
    let m = c.len() - 1;
    let mut next: Vec<Complex64> = Vec::with_capacity(m);
    for p in 0..m {
        let conv: Complex64 = (1..=p).map(|l| next[p - l] * c[l]).sum();
        next.push((c[p + 1] + conj * conv) / denom);
    }
    next
}

/// Runs the Schur algorithm and classifies `data` as interior, boundary or
/// exterior to the coefficient body.
pub fn schur_parameters(data: &CaratheodoryData, tol: &ToleranceConfig) -> SchurClassification {
    let band = tol.cls_tol;
    let mut current = data.coeffs().to_vec();
    let mut gamma = Vec::with_capacity(current.len());
    loop {
        let j = gamma.len();
        let g = current[0];
        let modulus = g.norm();
        if modulus > 1.0 + band {
            return SchurClassification::Exterior {
                witness_index: j,
                reason: ExteriorReason::ModulusExceedsOne,
            };
        }
        if (modulus - 1.0).abs() <= band {
            if let Some(p) = current[1..].iter().position(|c| c.norm() > band) {
                return SchurClassification::Exterior {
                    witness_index: j + p + 1,
                    reason: ExteriorReason::UnimodularWithNonzeroTail,
                };
            }
            gamma.push(g);
            return SchurClassification::Boundary {
                gamma_prefix: gamma,
                unimodular_index: j,
            };
        }
        gamma.push(g);
        if current.len() == 1 {
            return SchurClassification::Interior { gamma };
        }
        current = step_unchecked(&current, g);
    }
}

/// Inverse of the Schur algorithm on the interior: the unique data whose
/// Schur parameters are `gamma`.
pub fn data_from_parameters(gamma: &[Complex64]) -> Result<CaratheodoryData> {
    if gamma.is_empty() {
        return Err(SchurError::contract("Schur parameter must be non-empty"));
    }
    if let Some(p) = gamma.iter().position(|g| !(g.norm() < 1.0)) {
        return Err(SchurError::contract(format!(
            "Schur parameter γ_{p} has modulus {} ≥ 1",
            gamma[p].norm()
        )));
    }
    let n = gamma.len() - 1;
    let coeffs = nested_series(&gamma[..n], gamma[n], n + 1)?;
    CaratheodoryData::new(coeffs)
}

/// First `len` Taylor coefficients of
/// `σ_{p_0}(z σ_{p_1}(... z σ_{p_{k-1}}(z · inner) ...))` with a constant
/// innermost value.
pub(crate) fn nested_series(
    params: &[Complex64],
    inner: Complex64,
    len: usize,
) -> Result<Vec<Complex64>> {
    let mut w = vec![Complex64::new(0.0, 0.0); len];
    w[0] = inner;
    for &a in params.iter().rev() {
        // s = z·w, truncated
        let mut s = vec![Complex64::new(0.0, 0.0); len];
        s[1..].copy_from_slice(&w[..len - 1]);
        let mut num = s.clone();
        num[0] += a;
        let den: Vec<Complex64> = s.iter().map(|&x| a.conj() * x).collect();
        // den[0] = 1 + conj(a)·s[0] = 1 since s[0] = 0
        for k in 0..len {
            let acc: Complex64 = (1..=k).map(|i| den[i] * w[k - i]).sum();
            w[k] = num[k] - acc;
        }
        if !w.iter().all(|c| c.is_finite()) {
            return Err(SchurError::DegenerateDenominator { modulus: 0.0 });
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn real(v: &[f64]) -> Vec<Complex64> {
        v.iter().map(|&x| c(x, 0.0)).collect()
    }

    /// Taylor coefficients by the discrete Cauchy integral on `|z| = r`.
    fn cauchy_coeffs(f: impl Fn(Complex64) -> Complex64, len: usize) -> Vec<Complex64> {
        let m = 256;
        let r = 0.5;
        let samples: Vec<Complex64> = (0..m)
            .map(|k| {
                f(Complex64::from_polar(
                    r,
                    std::f64::consts::TAU * k as f64 / m as f64,
                ))
            })
            .collect();
        (0..len)
            .map(|p| {
                let s: Complex64 = samples
                    .iter()
                    .enumerate()
                    .map(|(k, v)| {
                        v * Complex64::from_polar(
                            1.0,
                            -std::f64::consts::TAU * (p * k) as f64 / m as f64,
                        )
                    })
                    .sum();
                s / (m as f64 * r.powi(p as i32))
            })
            .collect()
    }

    fn assert_close(a: &[Complex64], b: &[Complex64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).norm() < tol, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn mobius_examples() {
        let z = c(0.3, 0.4);
        assert_eq!(mobius(c(0.0, 0.0), z).unwrap(), z);
        assert_eq!(mobius(c(0.7, 0.0), c(0.0, 0.0)).unwrap(), c(0.7, 0.0));
        assert!((mobius(c(0.5, 0.0), c(0.5, 0.0)).unwrap() - c(0.8, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn mobius_rejects_boundary_parameter() {
        assert!(matches!(
            mobius(c(1.0, 0.0), c(0.0, 0.0)),
            Err(SchurError::ContractViolation(_))
        ));
    }

    #[test]
    fn mobius_degenerate_denominator() {
        // 1 + conj(a) z = 0 with |a| < 1 requires |z| > 1
        let a = c(0.5, 0.0);
        assert!(matches!(
            mobius(a, c(-2.0, 0.0)),
            Err(SchurError::DegenerateDenominator { .. })
        ));
    }

    #[test]
    fn schur_step_examples() {
        let out = schur_step(&real(&[0.5, 0.375]), c(0.5, 0.0)).unwrap();
        assert_close(&out, &real(&[0.5]), 1e-15);

        let tail = vec![c(0.0, 0.0), c(0.1, -0.2), c(0.3, 0.05), c(-0.4, 0.0)];
        let out = schur_step(&tail, c(0.0, 0.0)).unwrap();
        assert_eq!(out, tail[1..].to_vec());

        // oracle: ω = σ_{1/2}(z (1/2 + z/2)) has c^{(1)} = (1/2, 1/2)
        let oracle = cauchy_coeffs(
            |z| {
                let w = z * (0.5 + 0.5 * z);
                (w + 0.5) / (1.0 + 0.5 * w)
            },
            3,
        );
        assert_close(&oracle, &real(&[0.5, 0.375, 0.28125]), 1e-12);
        let out = schur_step(&real(&[0.5, 0.375, 0.28125]), c(0.5, 0.0)).unwrap();
        assert_close(&out, &real(&[0.5, 0.5]), 1e-15);
    }

    #[test]
    fn schur_step_contract() {
        assert!(schur_step(&real(&[0.5]), c(0.5, 0.0)).is_err());
        assert!(schur_step(&real(&[1.0, 0.0]), c(1.0, 0.0)).is_err());
        assert!(schur_step(&real(&[0.5, 0.0]), c(0.4, 0.0)).is_err());
    }

    #[test]
    fn classification_examples() {
        let tol = ToleranceConfig::default();
        let cls = schur_parameters(&CaratheodoryData::new(real(&[2.0, 0.0])).unwrap(), &tol);
        assert_eq!(
            cls,
            SchurClassification::Exterior {
                witness_index: 0,
                reason: ExteriorReason::ModulusExceedsOne
            }
        );
        let cls = schur_parameters(&CaratheodoryData::new(real(&[1.0, 0.0])).unwrap(), &tol);
        assert_eq!(
            cls,
            SchurClassification::Boundary {
                gamma_prefix: real(&[1.0]),
                unimodular_index: 0
            }
        );
        let cls = schur_parameters(&CaratheodoryData::new(real(&[0.5, 0.375])).unwrap(), &tol);
        match cls {
            SchurClassification::Interior { gamma } => {
                assert_close(&gamma, &real(&[0.5, 0.5]), 1e-15)
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unimodular_with_tail_is_exterior() {
        let tol = ToleranceConfig::default();
        let cls = schur_parameters(
            &CaratheodoryData::new(real(&[1.0, 0.0, 0.1])).unwrap(),
            &tol,
        );
        assert_eq!(
            cls,
            SchurClassification::Exterior {
                witness_index: 2,
                reason: ExteriorReason::UnimodularWithNonzeroTail
            }
        );
        // γ = (0.5, 1.2): the second parameter leaves the disk
        let cls = schur_parameters(&CaratheodoryData::new(real(&[0.5, 0.9])).unwrap(), &tol);
        assert_eq!(
            cls,
            SchurClassification::Exterior {
                witness_index: 1,
                reason: ExteriorReason::ModulusExceedsOne
            }
        );
    }

    #[test]
    fn boundary_at_second_parameter() {
        // ω = σ_{1/2}(i z): c = (1/2, 3i/4, 3/8) has γ = (1/2, i, 0)
        let tol = ToleranceConfig::default();
        let g1 = c(0.0, 1.0);
        let data = vec![c(0.5, 0.0), 0.75 * g1, -0.375 * g1 * g1];
        let oracle = cauchy_coeffs(|z| (g1 * z + 0.5) / (1.0 + 0.5 * g1 * z), 3);
        assert_close(&oracle, &data, 1e-12);
        match schur_parameters(&CaratheodoryData::new(data).unwrap(), &tol) {
            SchurClassification::Boundary {
                gamma_prefix,
                unimodular_index,
            } => {
                assert_eq!(unimodular_index, 1);
                assert_close(&gamma_prefix, &[c(0.5, 0.0), g1], 1e-14);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn tolerance_band() {
        let tol = ToleranceConfig::default();
        let just_over = CaratheodoryData::new(real(&[1.0 + 1e-13])).unwrap();
        assert_eq!(schur_parameters(&just_over, &tol).label(), "boundary");
        let over = CaratheodoryData::new(real(&[1.0 + 1e-9])).unwrap();
        assert_eq!(schur_parameters(&over, &tol).label(), "exterior");
        let under = CaratheodoryData::new(real(&[1.0 - 1e-13])).unwrap();
        assert_eq!(schur_parameters(&under, &tol).label(), "boundary");
    }

    #[test]
    fn data_validation() {
        assert!(CaratheodoryData::new(vec![]).is_err());
        assert!(CaratheodoryData::new(vec![c(f64::NAN, 0.0)]).is_err());
        let bad = ToleranceConfig {
            cls_tol: 1.0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn data_from_parameters_examples() {
        let zeros = vec![c(0.0, 0.0); 5];
        assert_eq!(data_from_parameters(&zeros).unwrap().coeffs(), &zeros[..]);

        let oracle = cauchy_coeffs(|z| (0.5 * z + 0.5) / (1.0 + 0.25 * z), 2);
        assert_close(&oracle, &real(&[0.5, 0.375]), 1e-12);
        let out = data_from_parameters(&real(&[0.5, 0.5])).unwrap();
        assert_close(out.coeffs(), &real(&[0.5, 0.375]), 1e-15);

        let g0 = c(0.2, -0.6);
        assert_eq!(data_from_parameters(&[g0]).unwrap().coeffs(), &[g0]);
        assert!(data_from_parameters(&[c(1.0, 0.0)]).is_err());
    }

    #[test]
    fn data_from_parameters_matches_cauchy_oracle() {
        let gamma = vec![c(0.3, -0.2), c(-0.5, 0.4), c(0.1, 0.7), c(0.6, 0.0)];
        let oracle = cauchy_coeffs(
            |z| {
                let mut w = c(0.0, 0.0);
                for &g in gamma.iter().rev() {
                    let u = z * w;
                    w = (u + g) / (1.0 + g.conj() * u);
                }
                w
            },
            gamma.len(),
        );
        let data = data_from_parameters(&gamma).unwrap();
        assert_close(data.coeffs(), &oracle, 1e-12);
    }

    fn disk_point(radius: f64) -> impl Strategy<Value = Complex64> {
        (0.0..1.0f64, 0.0..std::f64::consts::TAU)
            .prop_map(move |(u, t)| Complex64::from_polar(radius * u.sqrt(), t))
    }

    proptest! {
        #[test]
        fn round_trip(gamma in prop::collection::vec(disk_point(0.9), 1..10)) {
            let data = data_from_parameters(&gamma).unwrap();
            match schur_parameters(&data, &ToleranceConfig::default()) {
                SchurClassification::Interior { gamma: back } => {
                    prop_assert_eq!(back.len(), gamma.len());
                    for (a, b) in back.iter().zip(&gamma) {
                        prop_assert!((a - b).norm() < 1e-8);
                    }
                }
                other => prop_assert!(false, "{:?}", other),
            }
        }

        #[test]
        fn mobius_inverse_round_trip(a in disk_point(0.99), z in disk_point(1.0)) {
            let w = mobius_inverse(a, z).unwrap();
            prop_assert!((mobius(a, w).unwrap() - z).norm() < 1e-12);
        }

        #[test]
        fn mobius_preserves_disk(a in disk_point(0.99), z in disk_point(1.0)) {
            prop_assert!(mobius(a, z).unwrap().norm() <= 1.0 + 1e-12);
        }

        #[test]
        fn classification_is_total(
            coeffs in prop::collection::vec((-2.0..2.0f64, -2.0..2.0f64), 1..8)
        ) {
            let data = CaratheodoryData::new(coeffs.iter().map(|&(a, b)| c(a, b)).collect()).unwrap();
            match schur_parameters(&data, &ToleranceConfig::default()) {
                SchurClassification::Interior { gamma } => {
                    prop_assert_eq!(gamma.len(), data.coeffs().len());
                    prop_assert!(gamma.iter().all(|g| g.norm() < 1.0 - 1e-12));
                }
                SchurClassification::Boundary { gamma_prefix, unimodular_index } => {
                    prop_assert_eq!(gamma_prefix.len(), unimodular_index + 1);
                }
                SchurClassification::Exterior { witness_index, .. } => {
                    prop_assert!(witness_index < data.coeffs().len());
                }
            }
        }
    }
}
