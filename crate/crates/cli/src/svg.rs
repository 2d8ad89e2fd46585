//! Standalone SVG rendering of a boundary curve.

use std::fmt::Write;

use num_complex::Complex64;

use crate::error::CliError;
use crate::io::Curve;

const SIZE: f64 = 600.0;
const MARGIN: f64 = 60.0;
const TARGET_TICKS: f64 = 5.0;

/// Axis-aligned box in the w-plane.
#[derive(Debug, Clone, Copy)]
struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Frame {
    fn around(points: &[Complex64]) -> Frame {
        let mut f = Frame {
            x0: f64::INFINITY,
            x1: f64::NEG_INFINITY,
            y0: f64::INFINITY,
            y1: f64::NEG_INFINITY,
        };
        for p in points {
            f.x0 = f.x0.min(p.re);
            f.x1 = f.x1.max(p.re);
            f.y0 = f.y0.min(p.im);
            f.y1 = f.y1.max(p.im);
        }
        // equal scales on both axes, centred, with 5% padding
        let span = (f.x1 - f.x0).max(f.y1 - f.y0).max(1e-12) * 1.1;
        let (cx, cy) = ((f.x0 + f.x1) / 2.0, (f.y0 + f.y1) / 2.0);
        Frame {
            x0: cx - span / 2.0,
            x1: cx + span / 2.0,
            y0: cy - span / 2.0,
            y1: cy + span / 2.0,
        }
    }

    fn px(&self, x: f64) -> f64 {
        MARGIN + (x - self.x0) / (self.x1 - self.x0) * (SIZE - 2.0 * MARGIN)
    }

    fn py(&self, y: f64) -> f64 {
        SIZE - MARGIN - (y - self.y0) / (self.y1 - self.y0) * (SIZE - 2.0 * MARGIN)
    }
}

/// Tick step of the form {1, 2, 5} × 10^k giving about `TARGET_TICKS` ticks.
fn tick_step(span: f64) -> f64 {
    let raw = span / TARGET_TICKS;
    let base = 10f64.powf(raw.log10().floor());
    [1.0, 2.0, 5.0, 10.0]
        .into_iter()
        .map(|m| m * base)
        .find(|s| *s >= raw)
        .unwrap_or(10.0 * base)
}

fn ticks(lo: f64, hi: f64) -> (Vec<f64>, usize) {
    let step = tick_step(hi - lo);
    let decimals = (-step.log10().floor()).max(0.0) as usize;
    let first = (lo / step).ceil() as i64;
    let last = (hi / step).floor() as i64;
    ((first..=last).map(|k| k as f64 * step).collect(), decimals)
}

pub fn render(curve: &Curve) -> Result<String, CliError> {
    if curve.values.is_empty() {
        return Err(CliError::Input("cannot plot an empty curve".into()));
    }
    let mut all = curve.values.clone();
    all.extend(curve.witness);
    let f = Frame::around(&all);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#);

    // axes sit on Re w = 0 / Im w = 0 when visible, else on the frame edge
    let ax_y = f.py(0.0f64.clamp(f.y0, f.y1));
    let ax_x = f.px(0.0f64.clamp(f.x0, f.x1));
    let _ = writeln!(
        s,
        r#"<g id="axes" stroke="black" stroke-width="1"><line x1="{:.3}" y1="{ax_y:.3}" x2="{:.3}" y2="{ax_y:.3}"/><line x1="{ax_x:.3}" y1="{:.3}" x2="{ax_x:.3}" y2="{:.3}"/></g>"#,
        MARGIN,
        SIZE - MARGIN,
        SIZE - MARGIN,
        MARGIN
    );
    let _ = writeln!(
        s,
        r#"<g id="ticks" font-family="sans-serif" font-size="10">"#
    );
    let (xt, xd) = ticks(f.x0, f.x1);
    for x in xt {
        let px = f.px(x);
        let _ = writeln!(
            s,
            r#"<line x1="{px:.3}" y1="{:.3}" x2="{px:.3}" y2="{:.3}" stroke="black"/><text x="{px:.3}" y="{:.3}" text-anchor="middle">{x:.xd$}</text>"#,
            ax_y - 4.0,
            ax_y + 4.0,
            ax_y + 16.0
        );
    }
    let (yt, yd) = ticks(f.y0, f.y1);
    for y in yt {
        let py = f.py(y);
        let _ = writeln!(
            s,
            r#"<line x1="{:.3}" y1="{py:.3}" x2="{:.3}" y2="{py:.3}" stroke="black"/><text x="{:.3}" y="{:.3}" text-anchor="end">{y:.yd$}</text>"#,
            ax_x - 4.0,
            ax_x + 4.0,
            ax_x - 6.0,
            py + 3.0
        );
    }
    let _ = writeln!(s, "</g>");

    let mut points: Vec<String> = curve
        .values
        .iter()
        .map(|z| format!("{:.3},{:.3}", f.px(z.re), f.py(z.im)))
        .collect();
    points.push(points[0].clone());
    let _ = writeln!(
        s,
        r#"<polyline id="boundary" fill="none" stroke="steelblue" stroke-width="1.5" points="{}"/>"#,
        points.join(" ")
    );
    if let Some(w) = curve.witness {
        let _ = writeln!(
            s,
            r#"<circle id="witness" cx="{:.3}" cy="{:.3}" r="3" fill="crimson"/>"#,
            f.px(w.re),
            f.py(w.im)
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}
