//! Points of the projective line `R ∪ {∞}` and the action of `PSL(2,R)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::tolerance::Tolerance;

/// Below this magnitude (after normalisation) the lower-left entry is treated
/// as zero and `∞` is taken as a fixed point.
const LOWER_LEFT_EPS: f64 = 1e-14;

/// Slack used when classifying an element by its trace.
const TRACE_EPS: f64 = 1e-12;

/// A point on the boundary circle of the upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProjectivePoint {
    Finite(f64),
    Infinity,
}

impl ProjectivePoint {
    pub fn finite(v: f64) -> Result<Self> {
        if v.is_finite() {
            Ok(ProjectivePoint::Finite(v))
        } else {
            Err(Error::NonFinitePoint(v))
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ProjectivePoint::Infinity)
    }

    pub fn as_finite(&self) -> Option<f64> {
        match *self {
            ProjectivePoint::Finite(v) => Some(v),
            ProjectivePoint::Infinity => None,
        }
    }

    /// Exact on the infinity tag, tolerant on finite values.
    pub fn approx_eq(&self, other: &ProjectivePoint, tol: Tolerance) -> bool {
        match (*self, *other) {
            (ProjectivePoint::Infinity, ProjectivePoint::Infinity) => true,
            (ProjectivePoint::Finite(a), ProjectivePoint::Finite(b)) => tol.close(a, b),
            _ => false,
        }
    }
}

impl From<f64> for ProjectivePoint {
    /// Infinite floats map to the point at infinity. NaN is not a point and panics.
    fn from(v: f64) -> Self {
        assert!(!v.is_nan(), "NaN is not a point of the projective line");
        if v.is_infinite() {
            ProjectivePoint::Infinity
        } else {
            ProjectivePoint::Finite(v)
        }
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectivePoint::Finite(v) => write!(f, "{v}"),
            ProjectivePoint::Infinity => f.write_str("∞"),
        }
    }
}

/// The cross ratio `[x:y:z:w] = (w-x)/(w-z) · (z-y)/(y-x)`.
///
/// One argument may be `∞`; the two factors that contain it are replaced by
/// their limit, which is `+1` when it sits in the same position of numerator
/// and denominator (`x` or `w`) and `-1` otherwise (`y` or `z`).
pub fn cross_ratio(
    x: ProjectivePoint,
    y: ProjectivePoint,
    z: ProjectivePoint,
    w: ProjectivePoint,
) -> Result<f64> {
    use ProjectivePoint::{Finite, Infinity};

    let pts = [x, y, z, w];
    for i in 0..4 {
        for j in (i + 1)..4 {
            if pts[i] == pts[j] {
                return Err(Error::DegenerateCrossRatio(
                    "two of the four points coincide",
                ));
            }
        }
    }

    let value = match (x, y, z, w) {
        (Infinity, Finite(y), Finite(z), Finite(w)) => (z - y) / (w - z),
        (Finite(x), Infinity, Finite(z), Finite(w)) => -(w - x) / (w - z),
        (Finite(x), Finite(y), Infinity, Finite(w)) => -(w - x) / (y - x),
        (Finite(x), Finite(y), Finite(z), Infinity) => (z - y) / (y - x),
        (Finite(x), Finite(y), Finite(z), Finite(w)) => (w - x) / (w - z) * ((z - y) / (y - x)),
        _ => unreachable!("at most one point can be infinite once distinctness holds"),
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::DegenerateCrossRatio("value is not finite"))
    }
}

/// Conjugacy class of a non-identity element, read off from `|tr|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Identity,
    Elliptic,
    Parabolic,
    Hyperbolic,
}

/// An element of `PSL(2,R)`, stored as the determinant-one representative
/// whose first nonzero entry (in `a, b, c, d` order) is positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusMap {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl MobiusMap {
    pub const IDENTITY: MobiusMap = MobiusMap {
        a: 1.0,
        b: 0.0,
        c: 0.0,
        d: 1.0,
    };

    /// Builds the map `p ↦ (a p + b)/(c p + d)` from a matrix with positive
    /// determinant, normalising it to determinant one.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let det = a * d - b * c;
        if !(a.is_finite() && b.is_finite() && c.is_finite() && d.is_finite())
            || !det.is_finite()
            || det <= 0.0
        {
            return Err(Error::InvalidMatrix { det });
        }
        let k = det.sqrt().recip();
        Ok(MobiusMap {
            a: a * k,
            b: b * k,
            c: c * k,
            d: d * k,
        }
        .canonical_sign())
    }

    pub fn identity() -> Self {
        Self::IDENTITY
    }

    /// `diag(λ, 1/λ)` for `λ > 0`, i.e. `p ↦ λ² p`.
    pub fn diagonal(lambda: f64) -> Result<Self> {
        Self::new(lambda, 0.0, 0.0, lambda.recip())
    }

    pub fn entries(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn inverse(&self) -> Self {
        MobiusMap {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
        .canonical_sign()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MobiusMap) -> Self {
        compose(self, other)
    }

    pub fn apply(&self, p: ProjectivePoint) -> ProjectivePoint {
        apply(self, p)
    }

    pub fn trace_abs(&self) -> f64 {
        (self.a + self.d).abs()
    }

    pub fn classify(&self) -> Classification {
        let tr = self.trace_abs();
        if *self == Self::IDENTITY {
            Classification::Identity
        } else if tr > 2.0 + TRACE_EPS {
            Classification::Hyperbolic
        } else if tr < 2.0 - TRACE_EPS {
            Classification::Elliptic
        } else {
            Classification::Parabolic
        }
    }

    pub fn translation_length(&self) -> Result<f64> {
        translation_length(self)
    }

    pub fn fixed_points(&self) -> Result<(ProjectivePoint, ProjectivePoint)> {
        fixed_points(self)
    }

    /// Entrywise comparison of canonical representatives.
    pub fn approx_eq(&self, other: &MobiusMap, tol: Tolerance) -> bool {
        self.entries()
            .iter()
            .zip(other.entries())
            .all(|(x, y)| tol.close(*x, y))
    }

    fn canonical_sign(self) -> Self {
        let lead = [self.a, self.b, self.c, self.d]
            .into_iter()
            .find(|v| *v != 0.0)
            .unwrap_or(1.0);
        if lead < 0.0 {
            MobiusMap {
                a: -self.a,
                b: -self.b,
                c: -self.c,
                d: -self.d,
            }
        } else {
            self
        }
    }
}

impl fmt::Display for MobiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Matrix product `m1 · m2`, renormalised to determinant one.
pub fn compose(m1: &MobiusMap, m2: &MobiusMap) -> MobiusMap {
    let a = m1.a * m2.a + m1.b * m2.c;
    let b = m1.a * m2.b + m1.b * m2.d;
    let c = m1.c * m2.a + m1.d * m2.c;
    let d = m1.c * m2.b + m1.d * m2.d;
    // det(m1 m2) = 1 up to rounding, so this only fails on overflow.
    MobiusMap::new(a, b, c, d).unwrap_or(MobiusMap { a, b, c, d }.canonical_sign())
}

/// Fractional-linear action, total on the projective line.
pub fn apply(m: &MobiusMap, p: ProjectivePoint) -> ProjectivePoint {
    match p {
        ProjectivePoint::Infinity => {
            if m.c == 0.0 {
                ProjectivePoint::Infinity
            } else {
                ProjectivePoint::Finite(m.a / m.c)
            }
        }
        ProjectivePoint::Finite(x) => {
            let den = m.c * x + m.d;
            if den == 0.0 {
                ProjectivePoint::Infinity
            } else {
                ProjectivePoint::from((m.a * x + m.b) / den)
            }
        }
    }
}

pub fn trace_abs(m: &MobiusMap) -> f64 {
    m.trace_abs()
}

/// `L = 2 arccosh(|tr| / 2)`; only defined for hyperbolic elements.
pub fn translation_length(m: &MobiusMap) -> Result<f64> {
    let tr = m.trace_abs();
    if tr <= 2.0 {
        return Err(Error::NotHyperbolic { trace_abs: tr });
    }
    Ok(2.0 * (tr / 2.0).acosh())
}

/// The two fixed points of a hyperbolic element as `(attracting, repelling)`.
///
/// A fixed point `p` has multiplier `1/(c p + d)²`, so the attracting one is
/// the root with `|c p + d| > 1`, i.e. the one belonging to the eigenvalue of
/// larger magnitude.
pub fn fixed_points(m: &MobiusMap) -> Result<(ProjectivePoint, ProjectivePoint)> {
    let tr = m.trace_abs();
    if m.classify() != Classification::Hyperbolic {
        return Err(Error::NotHyperbolic { trace_abs: tr });
    }
    let MobiusMap { a, b, c, d } = *m;

    if c.abs() < LOWER_LEFT_EPS {
        // p ↦ (a p + b)/d: ∞ is fixed with multiplier d/a, the other root solves p(d - a) = b.
        let finite = ProjectivePoint::Finite(b / (d - a));
        return Ok(if a.abs() > d.abs() {
            (ProjectivePoint::Infinity, finite)
        } else {
            (finite, ProjectivePoint::Infinity)
        });
    }

    // Roots of c p² + (d - a) p - b = 0. Discriminant (d - a)² + 4bc = tr² - 4.
    let disc = ((d - a) * (d - a) + 4.0 * b * c).max(0.0).sqrt();
    let q = -0.5 * ((d - a) + (d - a).signum_or_one() * disc);
    let r1 = q / c;
    let r2 = -b / q;
    let attracting_first = (c * r1 + d).abs() > (c * r2 + d).abs();
    let (r1, r2) = (ProjectivePoint::Finite(r1), ProjectivePoint::Finite(r2));
    Ok(if attracting_first { (r1, r2) } else { (r2, r1) })
}

trait SignumOrOne {
    fn signum_or_one(self) -> f64;
}

impl SignumOrOne for f64 {
    fn signum_or_one(self) -> f64 {
        if self < 0.0 {
            -1.0
        } else {
            1.0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use ProjectivePoint::{Finite, Infinity};

    fn f(v: f64) -> ProjectivePoint {
        Finite(v)
    }

    /// f2 for X = (1,1,1,1): (1/√1)·[[2, -1], [-1, 1]].
    fn f2_unit() -> MobiusMap {
        MobiusMap::new(2.0, -1.0, -1.0, 1.0).unwrap()
    }

    #[test]
    fn cross_ratio_examples() {
        assert_eq!(cross_ratio(f(-1.0), f(0.0), f(1.0), Infinity).unwrap(), 1.0);
        assert_eq!(cross_ratio(f(0.0), f(1.0), f(2.0), f(3.0)).unwrap(), 3.0);
    }

    #[test]
    fn cross_ratio_infinity_limits_match_large_finite() {
        // Replace ∞ by a huge finite value in each slot and compare.
        let base = [f(-2.0), f(0.5), f(1.5), f(4.0)];
        for slot in 0..4 {
            let mut with_inf = base;
            with_inf[slot] = Infinity;
            let mut with_big = base;
            with_big[slot] = f(1e12);
            let exact = cross_ratio(with_inf[0], with_inf[1], with_inf[2], with_inf[3]).unwrap();
            let approx = cross_ratio(with_big[0], with_big[1], with_big[2], with_big[3]).unwrap();
            assert!(
                (exact - approx).abs() < 1e-9,
                "slot {slot}: {exact} vs {approx}"
            );
        }
    }

    #[test]
    fn cross_ratio_rejects_coincident_points() {
        assert!(matches!(
            cross_ratio(f(1.0), f(1.0), f(2.0), f(3.0)),
            Err(Error::DegenerateCrossRatio(_))
        ));
        assert!(cross_ratio(f(0.0), f(1.0), f(2.0), f(0.0)).is_err());
        assert!(cross_ratio(f(0.0), f(1.0), f(2.0), f(2.0)).is_err());
    }

    #[test]
    fn cross_ratio_other_endpoint_of_diagonal() {
        // [x:y:z:w] = [z:w:x:y]
        let (x, y, z, w) = (f(-3.0), f(-1.0), f(0.25), f(2.0));
        let a = cross_ratio(x, y, z, w).unwrap();
        let b = cross_ratio(z, w, x, y).unwrap();
        assert!((a - b).abs() < 1e-14);
    }

    #[test]
    fn apply_examples() {
        assert_eq!(MobiusMap::identity().apply(f(2.5)), f(2.5));
        let f2 = f2_unit();
        assert_eq!(f2.apply(f(0.0)), f(-1.0));
        assert_eq!(f2.apply(f(1.0)), Infinity);
        assert_eq!(f2.apply(Infinity), f(-2.0));
        let translate = MobiusMap::new(1.0, 3.0, 0.0, 1.0).unwrap();
        assert_eq!(translate.apply(Infinity), Infinity);
    }

    #[test]
    fn normalisation_and_sign() {
        let m = MobiusMap::new(2.0, 4.0, 6.0, 16.0).unwrap();
        assert!((m.det() - 1.0).abs() < 1e-15);
        let doubled = MobiusMap::new(4.0, 8.0, 12.0, 32.0).unwrap();
        assert_eq!(m, doubled);
        let negated = MobiusMap::new(-2.0, -4.0, -6.0, -16.0).unwrap();
        assert_eq!(m, negated);
        let leading_zero = MobiusMap::new(0.0, -1.0, 1.0, 0.0).unwrap();
        assert_eq!(leading_zero.entries(), [0.0, 1.0, -1.0, 0.0]);
    }

    #[test]
    fn new_rejects_bad_matrices() {
        assert!(MobiusMap::new(1.0, 0.0, 0.0, -1.0).is_err());
        assert!(MobiusMap::new(1.0, 1.0, 1.0, 1.0).is_err());
        assert!(MobiusMap::new(f64::NAN, 0.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn compose_examples() {
        let f2 = f2_unit();
        assert_eq!(compose(&MobiusMap::identity(), &f2), f2);
        assert!(compose(&f2, &f2.inverse()).approx_eq(&MobiusMap::identity(), Tolerance::EXACT));

        // Two parabolic generators; compare against a hand-expanded product.
        let u = MobiusMap::new(1.0, 2.0, 0.0, 1.0).unwrap();
        let v = MobiusMap::new(1.0, 0.0, -2.0, 1.0).unwrap();
        let uv = compose(&u, &v);
        // [[1,2],[0,1]]·[[1,0],[-2,1]] = [[-3, 2],[-2, 1]], sign-flipped to canonical form.
        assert_eq!(uv.entries(), [3.0, -2.0, 2.0, -1.0]);
        assert_eq!(u.classify(), Classification::Parabolic);
        assert_eq!(uv.trace_abs(), 2.0);
    }

    #[test]
    fn trace_examples() {
        assert_eq!(MobiusMap::identity().trace_abs(), 2.0);
        assert_eq!(f2_unit().trace_abs(), 3.0);
        // X = (4,1,1,1): (1/2)·[[8, -4], [-1, 1]]
        let f2 = MobiusMap::new(8.0 / 2.0, -4.0 / 2.0, -1.0 / 2.0, 1.0 / 2.0).unwrap();
        assert!((f2.trace_abs() - 4.5).abs() < 1e-15);
    }

    #[test]
    fn translation_length_examples() {
        let lambda = 1.0f64.exp();
        let m = MobiusMap::diagonal(lambda).unwrap();
        assert!((m.trace_abs() - 2.0 * 1.0f64.cosh()).abs() < 1e-15);
        assert!((m.translation_length().unwrap() - 2.0).abs() < 1e-14);

        let l = f2_unit().translation_length().unwrap();
        assert!((l - 1.9248473002).abs() < 1e-10, "{l}");

        let theta = 0.3f64;
        let rot = MobiusMap::new(theta.cos(), -theta.sin(), theta.sin(), theta.cos()).unwrap();
        assert_eq!(rot.classify(), Classification::Elliptic);
        assert!(matches!(
            rot.translation_length(),
            Err(Error::NotHyperbolic { .. })
        ));
    }

    #[test]
    fn fixed_points_examples() {
        let diag = MobiusMap::diagonal(3.0).unwrap();
        assert_eq!(diag.fixed_points().unwrap(), (Infinity, f(0.0)));
        let contracting = MobiusMap::diagonal(1.0 / 3.0).unwrap();
        assert_eq!(contracting.fixed_points().unwrap(), (f(0.0), Infinity));

        let (p, q) = f2_unit().fixed_points().unwrap();
        let mut pts = [p.as_finite().unwrap(), q.as_finite().unwrap()];
        pts.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let golden = (5.0f64.sqrt() - 1.0) / 2.0;
        assert!((pts[0] - golden).abs() < 1e-12);
        assert!((pts[1] + golden + 1.0).abs() < 1e-12);
        assert!((pts[0] * pts[1] + 1.0).abs() < 1e-12);

        let parabolic = MobiusMap::new(1.0, 1.0, 0.0, 1.0).unwrap();
        assert!(parabolic.fixed_points().is_err());
    }

    #[test]
    fn attracting_fixed_point_attracts() {
        let m = f2_unit();
        let (att, rep) = m.fixed_points().unwrap();
        let mut p = f(0.1);
        for _ in 0..200 {
            p = m.apply(p);
        }
        assert!(p.approx_eq(&att, Tolerance::DEFAULT));
        let mut p = f(0.1);
        let inv = m.inverse();
        for _ in 0..200 {
            p = inv.apply(p);
        }
        assert!(p.approx_eq(&rep, Tolerance::DEFAULT));
    }

    fn arb_map() -> impl Strategy<Value = MobiusMap> {
        (-3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64).prop_filter_map(
            "positive determinant",
            |(a, b, c, d)| {
                let det = a * d - b * c;
                if det > 0.1 {
                    MobiusMap::new(a, b, c, d).ok()
                } else {
                    None
                }
            },
        )
    }

    fn arb_hyperbolic() -> impl Strategy<Value = MobiusMap> {
        arb_map().prop_filter("hyperbolic", |m| m.trace_abs() > 2.05)
    }

    proptest! {
        #[test]
        fn composition_matches_successive_application(m1 in arb_map(), m2 in arb_map(), p in -5.0..5.0f64) {
            let lhs = compose(&m1, &m2).apply(f(p));
            let rhs = m1.apply(m2.apply(f(p)));
            match (lhs, rhs) {
                (Finite(a), Finite(b)) if a.abs() < 1e6 => {
                    prop_assert!((a - b).abs() <= 1e-9 * a.abs().max(1.0));
                }
                _ => {}
            }
        }

        #[test]
        fn trace_and_length_are_conjugation_invariant(m in arb_hyperbolic(), g in arb_map()) {
            let conj = compose(&compose(&g, &m), &g.inverse());
            prop_assert!((conj.trace_abs() - m.trace_abs()).abs() < 1e-9 * m.trace_abs());
            let l0 = m.translation_length().unwrap();
            let l1 = conj.translation_length().unwrap();
            prop_assert!((l0 - l1).abs() < 1e-7 * l0.max(1.0));
        }

        #[test]
        fn fixed_points_are_fixed(m in arb_hyperbolic()) {
            let (p, q) = m.fixed_points().unwrap();
            let tol = Tolerance::new(1e-9, 1e-9);
            prop_assert!(m.apply(p).approx_eq(&p, tol), "{} -> {}", p, m.apply(p));
            prop_assert!(m.apply(q).approx_eq(&q, tol), "{} -> {}", q, m.apply(q));
        }

        #[test]
        fn scaling_is_idempotent(m in arb_map(), s in 0.1..10.0f64) {
            let [a, b, c, d] = m.entries();
            let scaled = MobiusMap::new(s * a, s * b, s * c, s * d).unwrap();
            prop_assert!(scaled.approx_eq(&m, Tolerance::EXACT));
        }
    }
}
