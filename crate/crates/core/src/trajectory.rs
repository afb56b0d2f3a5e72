//! Sampled flow curves and their CSV, JSON and SVG renderings.

use std::fmt::Write as _;
use std::io::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::annulus::{core_geodesic, AnnulusCoords};
use crate::error::{Error, Result};
use crate::twist::{TwistMethod, TwistParameter};

pub const CSV_HEADER: &str = "t,X1,X2,X3,X4,L,trace";

/// One point of the flow. `length` and `trace` belong to the twisted
/// coordinates and stay constant along a trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrajectorySample {
    pub t: f64,
    #[serde(rename = "X1")]
    pub x1: f64,
    #[serde(rename = "X2")]
    pub x2: f64,
    #[serde(rename = "X3")]
    pub x3: f64,
    #[serde(rename = "X4")]
    pub x4: f64,
    #[serde(rename = "L")]
    pub length: f64,
    pub trace: f64,
}

impl TrajectorySample {
    pub fn coords(&self) -> [f64; 4] {
        [self.x1, self.x2, self.x3, self.x4]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrajectoryInput {
    pub coords: [f64; 4],
    pub t_max: f64,
    pub steps: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Invariants {
    #[serde(rename = "L")]
    pub length: f64,
    pub trace: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trajectory {
    pub input: TrajectoryInput,
    pub invariants: Invariants,
    pub samples: Vec<TrajectorySample>,
}

/// `steps + 1` samples at `t = k · t_max / steps`, `k = 0..=steps`.
pub fn sample_flow(
    method: &dyn TwistMethod,
    x: &AnnulusCoords,
    t_max: f64,
    steps: usize,
) -> Result<Trajectory> {
    if steps < 2 {
        return Err(Error::InvalidArgument(format!(
            "steps must be >= 2, got {steps}"
        )));
    }
    if !(t_max.is_finite() && t_max > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "t_max must be positive, got {t_max}"
        )));
    }
    let geo = core_geodesic(x);
    let samples = (0..=steps)
        .map(|k| {
            // Hit the endpoint exactly rather than via k * (t_max / steps).
            let t = if k == steps {
                t_max
            } else {
                t_max * k as f64 / steps as f64
            };
            let y = method.twist(x, TwistParameter::new(t)?)?;
            let g = core_geodesic(&y);
            let [x1, x2, x3, x4] = y.as_array();
            Ok(TrajectorySample {
                t,
                x1,
                x2,
                x3,
                x4,
                length: g.length,
                trace: g.trace_abs,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Trajectory {
        input: TrajectoryInput {
            coords: x.as_array(),
            t_max,
            steps,
        },
        invariants: Invariants {
            length: geo.length,
            trace: geo.trace_abs,
        },
        samples,
    })
}

/// 17 significant digits, enough to round-trip any `f64`.
pub fn format_f64(v: f64) -> String {
    format!("{v:.16e}")
}

impl Trajectory {
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        w.write_all(self.to_csv().as_bytes())?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(64 * (self.samples.len() + 1));
        out.push_str(CSV_HEADER);
        out.push('\n');
        for s in &self.samples {
            let row = [s.t, s.x1, s.x2, s.x3, s.x4, s.length, s.trace].map(format_f64);
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("trajectory serialises");
        s.push('\n');
        s
    }

    pub fn to_svg(&self, proj: Projection) -> String {
        render_svg(&self.samples, proj)
    }
}

/// Which two coordinates to plot, optionally on a log scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Projection {
    pub x_axis: usize,
    pub y_axis: usize,
    pub log: bool,
}

impl Default for Projection {
    fn default() -> Self {
        Projection {
            x_axis: 1,
            y_axis: 2,
            log: true,
        }
    }
}

impl Projection {
    fn label(&self, axis: usize) -> String {
        if self.log {
            format!("log X{axis}")
        } else {
            format!("X{axis}")
        }
    }

    fn value(&self, s: &TrajectorySample, axis: usize) -> f64 {
        let v = s.coords()[axis - 1];
        if self.log {
            v.ln()
        } else {
            v
        }
    }
}

impl FromStr for Projection {
    type Err = Error;

    /// `Xi,Xj` or `logXi,logXj`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidProjection(s.to_string());
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        let parse = |part: &str| -> Option<(bool, usize)> {
            let part = part.trim();
            let (log, rest) = match part.strip_prefix("log") {
                Some(rest) => (true, rest),
                None => (false, part),
            };
            let idx: usize = rest.strip_prefix('X')?.parse().ok()?;
            (1..=4).contains(&idx).then_some((log, idx))
        };
        let ((log_a, i), (log_b, j)) = (parse(a).ok_or_else(bad)?, parse(b).ok_or_else(bad)?);
        if log_a != log_b || i == j {
            return Err(bad());
        }
        Ok(Projection {
            x_axis: i,
            y_axis: j,
            log: log_a,
        })
    }
}

const SVG_WIDTH: f64 = 800.0;
const SVG_HEIGHT: f64 = 600.0;
const MARGIN_LEFT: f64 = 90.0;
const MARGIN_RIGHT: f64 = 30.0;
const MARGIN_TOP: f64 = 30.0;
const MARGIN_BOTTOM: f64 = 70.0;
const STROKE: &str = "magenta";
const TICK_LABELS: usize = 5;

fn padded_range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    });
    if !lo.is_finite() || !hi.is_finite() {
        return (0.0, 1.0);
    }
    if hi - lo < 1e-12 * lo.abs().max(1.0) {
        (lo - 0.5, hi + 0.5)
    } else {
        (lo, hi)
    }
}

fn render_svg(samples: &[TrajectorySample], proj: Projection) -> String {
    let (x_lo, x_hi) = padded_range(samples.iter().map(|s| proj.value(s, proj.x_axis)));
    let (y_lo, y_hi) = padded_range(samples.iter().map(|s| proj.value(s, proj.y_axis)));
    let plot_w = SVG_WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = SVG_HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let sx = |v: f64| MARGIN_LEFT + (v - x_lo) / (x_hi - x_lo) * plot_w;
    let sy = |v: f64| MARGIN_TOP + (y_hi - v) / (y_hi - y_lo) * plot_h;
    let (x0, y0, x1, y1) = (
        MARGIN_LEFT,
        MARGIN_TOP + plot_h,
        MARGIN_LEFT + plot_w,
        MARGIN_TOP,
    );

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(
        svg,
        r#"<rect x="0" y="0" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" fill="white"/>"#
    );

    // Axes with min/max labels.
    let _ = writeln!(
        svg,
        r#"<g stroke="black" stroke-width="1"><line x1="{x0:.2}" y1="{y0:.2}" x2="{x1:.2}" y2="{y0:.2}"/><line x1="{x0:.2}" y1="{y0:.2}" x2="{x0:.2}" y2="{y1:.2}"/></g>"#
    );
    let _ = writeln!(
        svg,
        r#"<text x="{x0:.2}" y="{:.2}" text-anchor="start">{x_lo:.4}</text>"#,
        y0 + 18.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="{x1:.2}" y="{:.2}" text-anchor="end">{x_hi:.4}</text>"#,
        y0 + 18.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{y0:.2}" text-anchor="end">{y_lo:.4}</text>"#,
        x0 - 6.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{y_hi:.4}</text>"#,
        x0 - 6.0,
        y1 + 10.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
        MARGIN_LEFT + plot_w / 2.0,
        SVG_HEIGHT - 20.0,
        proj.label(proj.x_axis)
    );
    let _ = writeln!(
        svg,
        r#"<text x="20" y="{:.2}" text-anchor="middle" transform="rotate(-90 20 {:.2})">{}</text>"#,
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0,
        proj.label(proj.y_axis)
    );

    let points: Vec<(f64, f64)> = samples
        .iter()
        .map(|s| {
            (
                sx(proj.value(s, proj.x_axis)),
                sy(proj.value(s, proj.y_axis)),
            )
        })
        .collect();
    let mut d = String::new();
    for (k, (px, py)) in points.iter().enumerate() {
        let _ = write!(d, "{}{px:.2},{py:.2}", if k == 0 { "M" } else { " L" });
    }
    let _ = writeln!(
        svg,
        r#"<path d="{d}" fill="none" stroke="{STROKE}" stroke-width="2"/>"#
    );

    // t labels at evenly spaced samples, always including both ends.
    if !samples.is_empty() {
        let last = samples.len() - 1;
        let count = TICK_LABELS.min(samples.len());
        let mut picked: Vec<usize> = (0..count)
            .map(|k| {
                if count == 1 {
                    0
                } else {
                    k * last / (count - 1)
                }
            })
            .collect();
        picked.dedup();
        for k in picked {
            let (px, py) = points[k];
            let _ = writeln!(
                svg,
                r#"<circle cx="{px:.2}" cy="{py:.2}" r="3" fill="{STROKE}"/>"#
            );
            let _ = writeln!(
                svg,
                r#"<text x="{:.2}" y="{:.2}">t={}</text>"#,
                px + 5.0,
                py - 5.0,
                samples[k].t
            );
        }
    }
    svg.push_str("</svg>\n");
    svg
}
