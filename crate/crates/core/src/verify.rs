//! Seeded self-check suite.
//!
//! # Reproducing the random inputs
//!
//! Suite number `k` (0-based, in the order of [`SUITES`]) draws from a
//! SplitMix64 generator whose 64-bit state starts at `seed + k` (wrapping).
//! Each step adds `0x9e3779b97f4a7c15` to the state and returns the usual
//! SplitMix64 finaliser of it. A uniform double in `[0, 1)` is
//! `(next >> 11) · 2⁻⁵³`. Coordinates are log-uniform on `(0.1, 10)`:
//! `X = exp(ln 0.1 + u · (ln 10 - ln 0.1))`, drawn in the order `X1..X4`,
//! followed by whatever scalar parameters the suite needs.

use std::fmt;

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::annulus::{coords_from_endpoints, endpoints, AnnulusCoords};
use crate::error::{Error, Result};
use crate::mobius::{cross_ratio, MobiusMap, ProjectivePoint};
use crate::tolerance::{max_rel_err, rel_err};
use crate::twist::{dehn_twist, twist_closed, twist_oracle, twist_p_form, TwistParameter};

pub const COORD_MIN: f64 = 0.1;
pub const COORD_MAX: f64 = 10.0;

/// Deterministic source of test inputs; see the module docs for the exact
/// generator.
#[derive(Debug, Clone)]
pub struct SampleStream {
    rng: SplitMix64,
}

impl SampleStream {
    pub fn new(seed: u64) -> Self {
        SampleStream {
            rng: SplitMix64::seed_from_u64(seed),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform on `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + self.unit() * (hi - lo)
    }

    pub fn log_uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.uniform(lo.ln(), hi.ln()).exp()
    }

    /// Log-uniform coordinates on `(0.1, 10)⁴`.
    pub fn coords(&mut self) -> AnnulusCoords {
        let x = [(); 4].map(|_| self.log_uniform(COORD_MIN, COORD_MAX));
        AnnulusCoords::from_array(x).expect("positive coordinates are always hyperbolic")
    }

    /// A map with entries in `[-2, 2]` and determinant at least `0.5`.
    pub fn mobius(&mut self) -> MobiusMap {
        loop {
            let [a, b, c, d] = [(); 4].map(|_| self.uniform(-2.0, 2.0));
            if a * d - b * c >= 0.5 {
                return MobiusMap::new(a, b, c, d).expect("determinant checked");
            }
        }
    }

    /// Four distinct points in `[-5, 5]`, pairwise at least `0.05` apart,
    /// with the slot given by the next draw (one in five) replaced by `∞`.
    pub fn quadruple(&mut self) -> [ProjectivePoint; 4] {
        loop {
            let v = [(); 4].map(|_| self.uniform(-5.0, 5.0));
            let slot = (self.unit() * 5.0) as usize;
            let separated = (0..4).all(|i| ((i + 1)..4).all(|j| (v[i] - v[j]).abs() >= 0.05));
            if separated {
                let mut pts = v.map(ProjectivePoint::Finite);
                if slot < 4 {
                    pts[slot] = ProjectivePoint::Infinity;
                }
                return pts;
            }
        }
    }
}

/// Names of the suites, in run order.
pub const SUITES: [&str; 7] = [
    "oracle-equivalence",
    "flow-additivity",
    "trace-invariance",
    "dehn-compatibility",
    "round-trip",
    "specializations",
    "cross-ratio-invariance",
];

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub max_rel_err: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub seed: u64,
    pub samples: usize,
    pub tol: f64,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "seed={} samples={} tol={:e}",
            self.seed, self.samples, self.tol
        )?;
        for s in &self.suites {
            writeln!(
                f,
                "{:<4} {:<24} cases={:<6} max_rel_err={:.3e}",
                if s.passed { "PASS" } else { "FAIL" },
                s.name,
                s.cases,
                s.max_rel_err
            )?;
        }
        write!(
            f,
            "{}",
            if self.passed() {
                "all suites passed"
            } else {
                "verification FAILED"
            }
        )
    }
}

fn t(v: f64) -> TwistParameter {
    TwistParameter::new(v).expect("finite")
}

fn arr(x: Result<AnnulusCoords>) -> Result<[f64; 4]> {
    x.map(|c| c.as_array())
}

/// `closed ≡ p-form ≡ oracle` for `t ∈ [0, 3]`.
pub fn oracle_equivalence(rng: &mut SampleStream, n: usize) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for _ in 0..n {
        let x = rng.coords();
        let tw = t(rng.uniform(0.0, 3.0));
        let a = arr(twist_closed(&x, tw))?;
        let b = arr(twist_p_form(&x, tw))?;
        let c = arr(twist_oracle(&x, tw))?;
        worst = worst
            .max(max_rel_err(&a, &b))
            .max(max_rel_err(&b, &c))
            .max(max_rel_err(&a, &c));
    }
    Ok(worst)
}

/// `twist(twist(X, s), t) = twist(X, s + t)` for `s, t ∈ [0, 2]`.
pub fn flow_additivity(rng: &mut SampleStream, n: usize) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for _ in 0..n {
        let x = rng.coords();
        let s = rng.uniform(0.0, 2.0);
        let u = rng.uniform(0.0, 2.0);
        let stepwise = twist_p_form(&twist_p_form(&x, t(s))?, t(u))?;
        let direct = twist_p_form(&x, t(s + u))?;
        worst = worst.max(max_rel_err(&stepwise.as_array(), &direct.as_array()));
    }
    Ok(worst)
}

/// `|tr(f2)|` of the twisted coordinates equals the original.
pub fn trace_invariance(rng: &mut SampleStream, n: usize) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for _ in 0..n {
        let x = rng.coords();
        let y = twist_p_form(&x, t(rng.uniform(0.0, 3.0)))?;
        worst = worst.max(rel_err(y.trace_abs(), x.trace_abs()));
    }
    Ok(worst)
}

/// Rational `m`-fold Dehn twist against the closed form at `t = m`, `m = 1, 2, 3`.
pub fn dehn_compatibility(rng: &mut SampleStream, n: usize) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for _ in 0..n {
        let x = rng.coords();
        for m in 1..=3 {
            let a = dehn_twist(&x, m)?;
            let b = twist_closed(&x, t(m as f64))?;
            worst = worst.max(max_rel_err(&a.as_array(), &b.as_array()));
        }
    }
    Ok(worst)
}

/// Coordinates → endpoints → coordinates.
pub fn round_trip(rng: &mut SampleStream, n: usize) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for _ in 0..n {
        let x = rng.coords();
        let back = coords_from_endpoints(&endpoints(&x))?;
        worst = worst.max(max_rel_err(&back.as_array(), &x.as_array()));
    }
    Ok(worst)
}

/// `t = 0` is the identity and `t = 1` the rational Dehn map.
pub fn specializations(rng: &mut SampleStream, n: usize) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for _ in 0..n {
        let x = rng.coords();
        let [x1, x2, x3, x4] = x.as_array();
        let dehn = [
            x1 * x1 * x2 / ((x1 + 1.0) * (x1 + 1.0)),
            1.0 / x1,
            (x1 + 1.0) * x3,
            (x1 + 1.0) * x4,
        ];
        worst = worst
            .max(max_rel_err(
                &twist_closed(&x, t(0.0))?.as_array(),
                &x.as_array(),
            ))
            .max(max_rel_err(&twist_closed(&x, t(1.0))?.as_array(), &dehn));
    }
    Ok(worst)
}

/// Cross ratios are unchanged by a random Möbius map.
pub fn cross_ratio_invariance(rng: &mut SampleStream, n: usize) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for _ in 0..n {
        let [x, y, z, w] = rng.quadruple();
        let m = rng.mobius();
        let before = cross_ratio(x, y, z, w)?;
        let after = cross_ratio(m.apply(x), m.apply(y), m.apply(z), m.apply(w))?;
        worst = worst.max(rel_err(before, after));
    }
    Ok(worst)
}

type SuiteFn = fn(&mut SampleStream, usize) -> Result<f64>;

const SUITE_FNS: [SuiteFn; 7] = [
    oracle_equivalence,
    flow_additivity,
    trace_invariance,
    dehn_compatibility,
    round_trip,
    specializations,
    cross_ratio_invariance,
];

/// Runs every suite on `samples` seeded cases each.
pub fn run(samples: usize, seed: u64, tol: f64) -> Result<VerifyReport> {
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be >= 1".into()));
    }
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be non-negative, got {tol}"
        )));
    }
    let suites = SUITES
        .iter()
        .zip(SUITE_FNS)
        .enumerate()
        .map(|(k, (&name, suite))| {
            let mut rng = SampleStream::new(seed.wrapping_add(k as u64));
            let max_rel_err = suite(&mut rng, samples)?;
            Ok(SuiteReport {
                name,
                cases: samples,
                max_rel_err,
                passed: max_rel_err <= tol,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        seed,
        samples,
        tol,
        suites,
    })
}
