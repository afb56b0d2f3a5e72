//! Coordinate model of the once-marked annulus.
//!
//! A point of the (enhanced) Teichmüller space is described by four positive
//! cross ratios `(X1, X2, X3, X4)`, one per arc of the fixed triangulation.
//! Lifting to the upper half-plane with three vertices pinned at `0, 1, ∞`
//! determines the remaining ideal vertices
//!
//! ```text
//! x1 = -X1,  x2 = -X1 (X2 + 1),  x3 = -X1 X3 / (X3 + 1),  x4 = (X4 + 1) / X4,
//! ```
//!
//! which sit on the real line as `x2 < x1 < x3 < 0 < 1 < x4 < ∞`.
//!
//! The lifted triangles are `(x2, x1, ∞)`, `(x1, 0, ∞)`, `(0, 1, ∞)`,
//! `(x1, x3, 0)` and `(1, x4, ∞)`. Arc 1 is lifted to `0–∞`, arc 2 to
//! `x1–∞` (and to `0–1`, its image under `f2⁻¹`), arc 3 to `x1–0` and arc 4
//! to `1–∞`. The quadrilateral of each arc is listed in [`ARC_QUADRILATERALS`].

use crate::error::{Error, Result};
use crate::mobius::{cross_ratio, MobiusMap, ProjectivePoint};

/// Hyperbolicity margin enforced by [`AnnulusCoords::new`].
const TRACE_MARGIN: f64 = 1e-12;

/// Labels for the seven ideal vertices of the lifted fundamental domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Vertex {
    X1,
    X2,
    X3,
    X4,
    Zero,
    One,
    Infinity,
}

impl Vertex {
    /// Whether the vertex lies in the gap bounded by the axis of `f2` that
    /// contains `0`, i.e. strictly between the fixed points `p2 < p1`.
    ///
    /// These are the vertices carried along by the stratum map of the twist;
    /// the others lie in the identity stratum.
    pub fn is_inside_axis(&self) -> bool {
        matches!(self, Vertex::X1 | Vertex::X3 | Vertex::Zero)
    }
}

/// Vertex quadruple `[x : y : z : w]` of the quadrilateral around each arc,
/// counter-clockwise with `x`–`z` the lifted arc. Index `i` holds arc `i + 1`.
pub const ARC_QUADRILATERALS: [[Vertex; 4]; 4] = [
    [Vertex::Zero, Vertex::One, Vertex::Infinity, Vertex::X1],
    [Vertex::Infinity, Vertex::X2, Vertex::X1, Vertex::Zero],
    [Vertex::Zero, Vertex::Infinity, Vertex::X1, Vertex::X3],
    [Vertex::One, Vertex::X4, Vertex::Infinity, Vertex::Zero],
];

/// The four cross-ratio coordinates `(X1, X2, X3, X4)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnnulusCoords([f64; 4]);

impl AnnulusCoords {
    pub fn new(x1: f64, x2: f64, x3: f64, x4: f64) -> Result<Self> {
        Self::from_array([x1, x2, x3, x4])
    }

    pub fn from_array(x: [f64; 4]) -> Result<Self> {
        for (i, &v) in x.iter().enumerate() {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::NonPositiveCoordinate {
                    name: format!("X{}", i + 1),
                    value: v,
                });
            }
        }
        let tr = holonomy_trace(x[0], x[1]);
        if tr.is_nan() || tr <= 2.0 + TRACE_MARGIN {
            return Err(Error::DegenerateHolonomy { trace_abs: tr });
        }
        Ok(AnnulusCoords(x))
    }

    pub fn x1(&self) -> f64 {
        self.0[0]
    }
    pub fn x2(&self) -> f64 {
        self.0[1]
    }
    pub fn x3(&self) -> f64 {
        self.0[2]
    }
    pub fn x4(&self) -> f64 {
        self.0[3]
    }

    pub fn as_array(&self) -> [f64; 4] {
        self.0
    }

    /// `√(X1 X2)`, the normalising factor of `f2`.
    pub fn sqrt_x1x2(&self) -> f64 {
        (self.x1() * self.x2()).sqrt()
    }

    /// `|tr(f2)| = (X1 (X2 + 1) + 1) / √(X1 X2)`.
    pub fn trace_abs(&self) -> f64 {
        holonomy_trace(self.x1(), self.x2())
    }
}

impl TryFrom<[f64; 4]> for AnnulusCoords {
    type Error = Error;

    fn try_from(x: [f64; 4]) -> Result<Self> {
        Self::from_array(x)
    }
}

fn holonomy_trace(x1: f64, x2: f64) -> f64 {
    (x1 * (x2 + 1.0) + 1.0) / (x1 * x2).sqrt()
}

/// The lifted ideal vertices `x1..x4`; `0`, `1` and `∞` are pinned.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EndpointConfig {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    pub x4: f64,
}

impl EndpointConfig {
    /// Checks `x2 < x1 < x3 < 0 < 1 < x4`.
    pub fn new(x1: f64, x2: f64, x3: f64, x4: f64) -> Result<Self> {
        let e = EndpointConfig { x1, x2, x3, x4 };
        e.check_ordering()?;
        Ok(e)
    }

    pub fn check_ordering(&self) -> Result<()> {
        let EndpointConfig { x1, x2, x3, x4 } = *self;
        if ![x1, x2, x3, x4].iter().all(|v| v.is_finite()) {
            return Err(Error::EndpointOrdering("endpoints must be finite".into()));
        }
        let chain = [
            (x2, x1, "x2 < x1"),
            (x1, x3, "x1 < x3"),
            (x3, 0.0, "x3 < 0"),
            (1.0, x4, "1 < x4"),
        ];
        for (lo, hi, what) in chain {
            if lo.is_nan() || hi.is_nan() || lo >= hi {
                return Err(Error::EndpointOrdering(format!(
                    "{what} fails ({lo} vs {hi})"
                )));
            }
        }
        Ok(())
    }

    pub fn vertex(&self, v: Vertex) -> ProjectivePoint {
        match v {
            Vertex::X1 => ProjectivePoint::Finite(self.x1),
            Vertex::X2 => ProjectivePoint::Finite(self.x2),
            Vertex::X3 => ProjectivePoint::Finite(self.x3),
            Vertex::X4 => ProjectivePoint::Finite(self.x4),
            Vertex::Zero => ProjectivePoint::Finite(0.0),
            Vertex::One => ProjectivePoint::Finite(1.0),
            Vertex::Infinity => ProjectivePoint::Infinity,
        }
    }
}

/// Geodesic data of the core curve: `|tr(f2)|`, its length and the fixed
/// points `p1 > 0 > p2` of `f2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoreGeodesic {
    pub trace_abs: f64,
    pub length: f64,
    pub p1: f64,
    pub p2: f64,
}

pub fn endpoints(x: &AnnulusCoords) -> EndpointConfig {
    let [a, b, c, d] = x.as_array();
    EndpointConfig {
        x1: -a,
        x2: -a * (b + 1.0),
        x3: -a * c / (c + 1.0),
        x4: (d + 1.0) / d,
    }
}

/// The holonomy gluing the two lifts of arc 2:
/// `f2 = (1/√(X1 X2)) [[X1 (X2 + 1), -X1], [-1, 1]]`.
///
/// It sends `0 ↦ x1`, `1 ↦ ∞`, `∞ ↦ x2` and `1/(X2 + 1) ↦ 0`, carrying the
/// triangle `(0, 1, ∞)` onto `(x1, ∞, x2)`.
pub fn holonomy_f2(x: &AnnulusCoords) -> MobiusMap {
    let s = x.sqrt_x1x2();
    let (a, b) = (x.x1(), x.x2());
    MobiusMap::new(a * (b + 1.0) / s, -a / s, -1.0 / s, 1.0 / s)
        .expect("f2 has determinant one for positive coordinates")
}

pub fn core_geodesic(x: &AnnulusCoords) -> CoreGeodesic {
    let trace_abs = x.trace_abs();
    let length = 2.0 * (trace_abs / 2.0).acosh();
    let (p1, p2) = quadratic_fixed_points(x);
    CoreGeodesic {
        trace_abs,
        length,
        p1,
        p2,
    }
}

/// Roots of `p² + (X1 (X2 + 1) - 1) p - X1 = 0`.
///
/// The discriminant `(X1(X2+1)+1)² - 4 X1 X2` is evaluated as
/// `(X1 X2 - X1 - 1)² + 4 X1² X2` (a sum of positive terms), the root of
/// larger magnitude first and the other from `p1 p2 = -X1`.
pub fn quadratic_fixed_points(x: &AnnulusCoords) -> (f64, f64) {
    let (a, b) = (x.x1(), x.x2());
    let ab = a * b;
    let disc = ((ab - a - 1.0).powi(2) + 4.0 * a * ab).sqrt();
    let half_sum = 1.0 - a * (b + 1.0);
    if half_sum >= 0.0 {
        let p1 = 0.5 * (half_sum + disc);
        (p1, -a / p1)
    } else {
        let p2 = 0.5 * (half_sum - disc);
        (-a / p2, p2)
    }
}

/// The exponential forms `p1 = 1 - √(X1 X2) e^{-L/2}`, `p2 = 1 - √(X1 X2) e^{L/2}`.
pub fn exponential_fixed_points(x: &AnnulusCoords, length: f64) -> (f64, f64) {
    let s = x.sqrt_x1x2();
    let h = 0.5 * length;
    (1.0 - s * (-h).exp(), 1.0 - s * h.exp())
}

/// Recovers the coordinates from a lifted configuration by evaluating the
/// cross ratio of each quadrilateral in [`ARC_QUADRILATERALS`].
pub fn coords_from_endpoints(e: &EndpointConfig) -> Result<AnnulusCoords> {
    e.check_ordering()?;
    let mut out = [0.0; 4];
    for (slot, quad) in out.iter_mut().zip(ARC_QUADRILATERALS.iter()) {
        let [x, y, z, w] = quad.map(|v| e.vertex(v));
        *slot = cross_ratio(x, y, z, w)?;
    }
    AnnulusCoords::from_array(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mobius::ProjectivePoint::{Finite, Infinity};
    use crate::tolerance::{max_rel_err, Tolerance};
    use proptest::prelude::*;

    fn unit() -> AnnulusCoords {
        AnnulusCoords::new(1.0, 1.0, 1.0, 1.0).unwrap()
    }

    #[test]
    fn constructor_rejects_non_positive() {
        let err = AnnulusCoords::new(1.0, -1.0, 1.0, 1.0).unwrap_err();
        assert_eq!(
            err,
            Error::NonPositiveCoordinate {
                name: "X2".into(),
                value: -1.0
            }
        );
        assert!(AnnulusCoords::new(0.0, 1.0, 1.0, 1.0).is_err());
        assert!(AnnulusCoords::new(1.0, 1.0, f64::INFINITY, 1.0).is_err());
        assert!(AnnulusCoords::new(1.0, 1.0, 1.0, f64::NAN).is_err());
    }

    #[test]
    fn endpoints_examples() {
        let e = endpoints(&unit());
        assert_eq!((e.x1, e.x2, e.x3, e.x4), (-1.0, -2.0, -0.5, 2.0));
        let e = endpoints(&AnnulusCoords::new(2.0, 1.0, 1.0, 1.0).unwrap());
        assert_eq!((e.x1, e.x2, e.x3, e.x4), (-2.0, -4.0, -1.0, 2.0));
    }

    #[test]
    fn arc_one_cross_ratio_at_unit() {
        let e = endpoints(&unit());
        let [x, y, z, w] = ARC_QUADRILATERALS[0].map(|v| e.vertex(v));
        assert_eq!(cross_ratio(x, y, z, w).unwrap(), 1.0);
    }

    #[test]
    fn holonomy_examples() {
        let f2 = holonomy_f2(&unit());
        assert_eq!(f2.entries(), [2.0, -1.0, -1.0, 1.0]);
        assert_eq!(f2.trace_abs(), 3.0);

        let x = AnnulusCoords::new(2.0, 3.0, 0.5, 4.0).unwrap();
        let e = endpoints(&x);
        let f2 = holonomy_f2(&x);
        let tol = Tolerance::DEFAULT;
        assert!(f2.apply(Finite(0.0)).approx_eq(&Finite(e.x1), tol));
        assert_eq!(f2.apply(Finite(1.0)), Infinity);
        assert!(f2.apply(Infinity).approx_eq(&Finite(e.x2), tol));
        assert!(f2
            .apply(Finite(1.0 / (x.x2() + 1.0)))
            .approx_eq(&Finite(0.0), tol));
        assert!((f2.trace_abs() - x.trace_abs()).abs() < 1e-14);
        assert!((x.trace_abs() - (2.0 * 4.0 + 1.0) / 6f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn holonomy_maps_arc_two_quadrilaterals_onto_each_other() {
        // f2 carries (0, 1/(X2+1), 1, ∞) onto (x1, 0, ∞, x2), so both lifts of
        // arc 2 see the same cross ratio X2.
        let x = AnnulusCoords::new(0.7, 2.5, 1.3, 0.4).unwrap();
        let q = Finite(1.0 / (x.x2() + 1.0));
        let lifted = cross_ratio(Finite(0.0), q, Finite(1.0), Infinity).unwrap();
        assert!((lifted - x.x2()).abs() < 1e-14);
    }

    #[test]
    fn core_geodesic_unit() {
        let g = core_geodesic(&unit());
        assert_eq!(g.trace_abs, 3.0);
        assert!((g.length - 1.9248473002).abs() < 1e-10);
        assert!((g.p1 - 0.6180339887).abs() < 1e-10);
        assert!((g.p2 + 1.6180339887).abs() < 1e-10);
    }

    #[test]
    fn core_geodesic_matches_mobius_fixed_points() {
        let x = AnnulusCoords::new(3.0, 0.2, 1.0, 5.0).unwrap();
        let g = core_geodesic(&x);
        let (a, b) = holonomy_f2(&x).fixed_points().unwrap();
        let mut pts = [a.as_finite().unwrap(), b.as_finite().unwrap()];
        pts.sort_by(|u, v| v.partial_cmp(u).unwrap());
        assert!(max_rel_err(&pts, &[g.p1, g.p2]) < 1e-12);
        let l = holonomy_f2(&x).translation_length().unwrap();
        assert!((l - g.length).abs() < 1e-12);
    }

    #[test]
    fn round_trip_examples() {
        for x in [unit(), AnnulusCoords::new(2.0, 3.0, 0.5, 4.0).unwrap()] {
            let back = coords_from_endpoints(&endpoints(&x)).unwrap();
            assert!(max_rel_err(&back.as_array(), &x.as_array()) < 1e-10);
        }
    }

    #[test]
    fn ordering_violation_rejected() {
        let mut e = endpoints(&unit());
        e.x3 = -1.5;
        assert!(matches!(
            coords_from_endpoints(&e),
            Err(Error::EndpointOrdering(_))
        ));
        let mut e = endpoints(&unit());
        e.x4 = 0.5;
        assert!(coords_from_endpoints(&e).is_err());
        assert!(EndpointConfig::new(-1.0, -2.0, -0.5, 2.0).is_ok());
        assert!(EndpointConfig::new(-1.0, -0.9, -0.5, 2.0).is_err());
    }

    #[test]
    fn inside_vertices_lie_between_fixed_points() {
        let x = AnnulusCoords::new(0.3, 4.0, 2.0, 0.6).unwrap();
        let e = endpoints(&x);
        let g = core_geodesic(&x);
        for v in [
            Vertex::X1,
            Vertex::X2,
            Vertex::X3,
            Vertex::X4,
            Vertex::Zero,
            Vertex::One,
        ] {
            let p = e.vertex(v).as_finite().unwrap();
            assert_eq!(v.is_inside_axis(), g.p2 < p && p < g.p1, "{v:?}");
        }
    }

    fn log_uniform() -> impl Strategy<Value = f64> {
        (0.1f64.ln()..10.0f64.ln()).prop_map(f64::exp)
    }

    fn arb_coords() -> impl Strategy<Value = AnnulusCoords> {
        [log_uniform(), log_uniform(), log_uniform(), log_uniform()]
            .prop_map(|a| AnnulusCoords::from_array(a).unwrap())
    }

    proptest! {
        #[test]
        fn round_trip_identity(x in arb_coords()) {
            let e = endpoints(&x);
            prop_assert!(e.check_ordering().is_ok());
            let back = coords_from_endpoints(&e).unwrap();
            prop_assert!(max_rel_err(&back.as_array(), &x.as_array()) < 1e-10);
        }

        #[test]
        fn fixed_point_identities(x in arb_coords()) {
            let g = core_geodesic(&x);
            prop_assert!((g.p1 * g.p2 + x.x1()).abs() < 1e-10);
            prop_assert!((g.p1 + g.p2 - (1.0 - x.x1() * x.x2() - x.x1())).abs() < 1e-10 * (1.0 + x.x1() * x.x2()));
            prop_assert!(g.p1 > 0.0 && g.p1 < 1.0 && g.p2 < 0.0);
            let (e1, e2) = exponential_fixed_points(&x, g.length);
            prop_assert!(max_rel_err(&[e1, e2], &[g.p1, g.p2]) < 1e-10);
        }

        #[test]
        fn half_length_cosh(x in arb_coords()) {
            let g = core_geodesic(&x);
            let lhs = (g.length / 2.0).cosh() * 2.0 * x.sqrt_x1x2();
            let rhs = x.x1() * x.x2() + x.x1() + 1.0;
            prop_assert!((lhs - rhs).abs() < 1e-10 * rhs);
        }
    }
}
