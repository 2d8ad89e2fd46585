//! Convex target domains given by a Riemann map `P` of the unit disk, with
//! its derivative and inverse.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Result, SchurError};
use crate::schur::DENOM_FLOOR;

pub type ComplexFn = Arc<dyn Fn(Complex64) -> Result<Complex64> + Send + Sync>;

/// A conformal map `P` of the unit disk onto a convex domain `Ω ≠ ℂ`.
///
/// Convexity of the image is not checked; the built-in constructors are
/// convex by construction.
#[derive(Clone)]
pub struct DomainMap {
    label: String,
    map: ComplexFn,
    derivative: ComplexFn,
    inverse: ComplexFn,
}

impl fmt::Debug for DomainMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DomainMap")
            .field("label", &self.label)
            .finish()
    }
}

fn checked_div(num: Complex64, den: Complex64) -> Result<Complex64> {
    if den.norm() < DENOM_FLOOR {
        return Err(SchurError::DegenerateDenominator {
            modulus: den.norm(),
        });
    }
    Ok(num / den)
}

impl DomainMap {
    pub fn new(
        label: impl Into<String>,
        map: ComplexFn,
        derivative: ComplexFn,
        inverse: ComplexFn,
    ) -> Self {
        DomainMap {
            label: label.into(),
            map,
            derivative,
            inverse,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        (self.map)(z)
    }

    pub fn derivative(&self, z: Complex64) -> Result<Complex64> {
        (self.derivative)(z)
    }

    pub fn inverse(&self, w: Complex64) -> Result<Complex64> {
        (self.inverse)(w)
    }

    /// Parses `"half-plane"`, `"strip"` or `"disk:<re>,<im>,<r>"`.
    pub fn from_label(label: &str) -> Result<Self> {
        let label = label.trim();
        match label {
            "half-plane" => Ok(half_plane()),
            "strip" => Ok(strip()),
            _ => {
                let Some(rest) = label.strip_prefix("disk:") else {
                    return Err(SchurError::invalid(format!(
                        "unknown domain label {label:?}"
                    )));
                };
                let parts: Vec<f64> = rest
                    .split(',')
                    .map(|s| s.trim().parse::<f64>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|e| SchurError::invalid(format!("bad disk label {label:?}: {e}")))?;
                match parts[..] {
                    [re, im, r] if re.is_finite() && im.is_finite() => {
                        disk(Complex64::new(re, im), r)
                    }
                    _ => Err(SchurError::invalid(format!(
                        "disk label must be disk:<re>,<im>,<r>, got {label:?}"
                    ))),
                }
            }
        }
    }
}

/// The right half-plane via the Cayley map `P(z) = (1 + z) / (1 - z)`.
pub fn half_plane() -> DomainMap {
    let one = Complex64::new(1.0, 0.0);
    DomainMap::new(
        "half-plane",
        Arc::new(move |z| checked_div(one + z, one - z)),
        Arc::new(move |z| checked_div(Complex64::new(2.0, 0.0), (one - z) * (one - z))),
        Arc::new(move |w| checked_div(w - one, w + one)),
    )
}

/// The disk `|w - center| < radius` via `P(z) = center + radius · z`.
pub fn disk(center: Complex64, radius: f64) -> Result<DomainMap> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(SchurError::invalid(format!(
            "disk radius must be positive, got {radius}"
        )));
    }
    Ok(DomainMap::new(
        format!("disk:{},{},{}", center.re, center.im, radius),
        Arc::new(move |z| Ok(center + radius * z)),
        Arc::new(move |_| Ok(Complex64::new(radius, 0.0))),
        Arc::new(move |w| Ok((w - center) / radius)),
    ))
}

/// The strip `|Im w| < π/2` via `P(z) = log((1 + z) / (1 - z))`.
///
/// `(1 + z) / (1 - z)` has positive real part on the disk, so the principal
/// logarithm never meets its cut there.
pub fn strip() -> DomainMap {
    let one = Complex64::new(1.0, 0.0);
    DomainMap::new(
        "strip",
        Arc::new(move |z| {
            let q = checked_div(one + z, one - z)?;
            if q.norm() < DENOM_FLOOR {
                return Err(SchurError::DegenerateDenominator { modulus: q.norm() });
            }
            Ok(q.ln())
        }),
        Arc::new(move |z| checked_div(Complex64::new(2.0, 0.0), one - z * z)),
        Arc::new(move |w| Ok((w / 2.0).tanh())),
    )
}
