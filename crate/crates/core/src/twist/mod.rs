//! The Fenchel–Nielsen twist flow along the core curve of the annulus.
//!
//! The time-`t` twist rotates one side of the core geodesic by `t · L(f2)`.
//! Three evaluators are provided and registered by name:
//!
//! | name     | route                                                        |
//! |----------|--------------------------------------------------------------|
//! | `closed` | cosh/exponential closed form in `X`, `L(f2)` and `√(X1 X2)`  |
//! | `p-form` | rational expressions in `e^{tL}` and the fixed points `p1, p2` |
//! | `oracle` | lifts the vertices, moves one gap by the stratum map and recomputes the four cross ratios |
//!
//! `p-form` is the canonical route; the others serve as cross-checks. The
//! integer-time flow is the Dehn twist, available as an exact rational map in
//! [`dehn`].

mod closed;
pub mod dehn;
mod oracle;
mod p_form;
mod registry;
mod stratum;

use std::fmt;

use crate::annulus::AnnulusCoords;
use crate::error::{Error, Result};

pub use closed::twist_closed;
pub use dehn::dehn_twist;
pub use oracle::{twist_oracle, twist_oracle_one_sided};
pub use p_form::twist_p_form;
pub use registry::{method, methods, ClosedForm, Oracle, PForm, TwistMethod, DEFAULT_METHOD};
pub use stratum::{stratum_map, twisted_endpoints, StratumMap, TwistedEndpoints};

/// Above this value of `t·L` the rational forms are evaluated in terms of
/// `e^{-tL}` instead of `e^{tL}`.
pub(crate) const SHIFT_THRESHOLD: f64 = 300.0;

/// Twist amount in units of the core length `L(f2)`; any finite real.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct TwistParameter(f64);

impl TwistParameter {
    pub fn new(t: f64) -> Result<Self> {
        if t.is_finite() {
            Ok(TwistParameter(t))
        } else {
            Err(Error::NonFiniteTwist(t))
        }
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for TwistParameter {
    type Error = Error;

    fn try_from(t: f64) -> Result<Self> {
        TwistParameter::new(t)
    }
}

impl fmt::Display for TwistParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The canonical twist (`p-form`).
pub fn twist(x: &AnnulusCoords, t: TwistParameter) -> Result<AnnulusCoords> {
    twist_p_form(x, t)
}

/// Validates the four outputs of a twist evaluation.
pub(crate) fn finish(out: [f64; 4], x: &AnnulusCoords, t: TwistParameter) -> Result<AnnulusCoords> {
    if out.iter().all(|v| v.is_finite() && *v > 0.0) {
        AnnulusCoords::from_array(out).map_err(|e| range_error(x, t, &e.to_string()))
    } else {
        Err(range_error(x, t, &format!("outputs {out:?}")))
    }
}

fn range_error(x: &AnnulusCoords, t: TwistParameter, what: &str) -> Error {
    Error::Range(format!(
        "twist of {:?} by t = {} : {what}",
        x.as_array(),
        t.value()
    ))
}
