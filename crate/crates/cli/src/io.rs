//! Input JSON, boundary CSV and complex-number text formats.
//!
//! Complex numbers are `[re, im]` pairs in JSON and two columns in CSV. The
//! boundary CSV ends with a comment line `# {...}` carrying the interior
//! witness and the convexity defect.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use schurvar::domains::{half_plane, DomainMap};
use schurvar::schur::CaratheodoryData;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    s.parse::<Complex64>()
        .map_err(|e| format!("cannot parse complex number {s:?}: {e}"))
}

pub fn complex_json(values: &[Complex64]) -> Value {
    Value::Array(
        values
            .iter()
            .map(|z| serde_json::json!([z.re, z.im]))
            .collect(),
    )
}

#[derive(Deserialize)]
struct InputFile {
    coefficients: Vec<[f64; 2]>,
    domain: Option<String>,
}

pub struct Job {
    pub data: CaratheodoryData,
    pub domain: DomainMap,
}

/// Reads `{"coefficients": [[re, im], ...], "domain": label}`. A domain
/// given on the command line wins over the file.
pub fn read_input(path: &Path, domain_override: Option<&str>) -> Result<Job, CliError> {
    let text = fs::read_to_string(path)?;
    let input: InputFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let coeffs = input
        .coefficients
        .iter()
        .map(|[re, im]| Complex64::new(*re, *im))
        .collect();
    let data = CaratheodoryData::new(coeffs)?;
    let domain = match domain_override.or(input.domain.as_deref()) {
        Some(label) => DomainMap::from_label(label)?,
        None => half_plane(),
    };
    Ok(Job { data, domain })
}

pub fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct Row {
    theta: f64,
    re: f64,
    im: f64,
}

#[derive(Serialize, Deserialize)]
struct Sidecar {
    interior_witness: [f64; 2],
    convexity_defect: f64,
}

pub struct Curve {
    pub theta: Vec<f64>,
    pub values: Vec<Complex64>,
    pub witness: Option<Complex64>,
    pub convexity_defect: Option<f64>,
}

impl Curve {
    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        for (&theta, z) in self.theta.iter().zip(&self.values) {
            writer
                .serialize(Row {
                    theta,
                    re: z.re,
                    im: z.im,
                })
                .map_err(|e| CliError::Input(e.to_string()))?;
        }
        let mut out = String::from_utf8(
            writer
                .into_inner()
                .map_err(|e| CliError::Input(e.to_string()))?,
        )
        .expect("csv output is utf-8");
        if let (Some(w), Some(defect)) = (self.witness, self.convexity_defect) {
            let sidecar = Sidecar {
                interior_witness: [w.re, w.im],
                convexity_defect: defect,
            };
            out.push_str("# ");
            out.push_str(&serde_json::to_string(&sidecar).expect("plain struct serializes"));
            out.push('\n');
        }
        Ok(out)
    }

    pub fn read(path: &Path) -> Result<Curve, CliError> {
        let text = fs::read_to_string(path)?;
        Self::parse(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }

    pub fn parse(text: &str) -> Result<Curve, String> {
        let mut body = String::new();
        let mut sidecar = None;
        for line in text.lines() {
            match line.strip_prefix('#') {
                Some(rest) => {
                    let s: Sidecar = serde_json::from_str(rest.trim())
                        .map_err(|e| format!("bad trailer: {e}"))?;
                    sidecar = Some(s);
                }
                None => {
                    body.push_str(line);
                    body.push('\n');
                }
            }
        }
        let mut reader = csv::Reader::from_reader(body.as_bytes());
        let headers = reader.headers().map_err(|e| e.to_string())?;
        if headers != vec!["theta", "re", "im"] {
            return Err(format!(
                "expected header theta,re,im, got {:?}",
                headers.iter().collect::<Vec<_>>()
            ));
        }
        let mut theta = Vec::new();
        let mut values = Vec::new();
        for row in reader.deserialize::<Row>() {
            let row = row.map_err(|e| e.to_string())?;
            if !(row.theta.is_finite() && row.re.is_finite() && row.im.is_finite()) {
                return Err("non-finite value in curve".into());
            }
            theta.push(row.theta);
            values.push(Complex64::new(row.re, row.im));
        }
        if values.is_empty() {
            return Err("curve has no rows".into());
        }
        Ok(Curve {
            theta,
            values,
            witness: sidecar
                .as_ref()
                .map(|s| Complex64::new(s.interior_witness[0], s.interior_witness[1])),
            convexity_defect: sidecar.map(|s| s.convexity_defect),
        })
    }
}
