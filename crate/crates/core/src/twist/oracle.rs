use super::{finish, stratum_map, TwistParameter};
use crate::annulus::{endpoints, AnnulusCoords, Vertex, ARC_QUADRILATERALS};
use crate::error::Result;
use crate::mobius::cross_ratio;

/// Twist computed from the hyperbolic picture alone.
///
/// The lifted vertices `0, x1, x3` lie in the gap between the fixed points
/// of `f2`; `x2, 1, x4, ∞` lie on the other side of the axis. Twisting by `t`
/// moves the first gap by the stratum map `E_t` relative to the second. Each
/// new coordinate is the cross ratio of the moved quadrilateral of its arc.
///
/// The relative motion is split as `E_{t/2}` on the inner gap and `E_{-t/2}`
/// on the outer one. This differs from "`E_t` inside, identity outside" by the
/// global isometry `E_{-t/2}`, so the cross ratios are the same, but neither
/// side gets squeezed against a fixed point by more than `e^{tL/2}`.
pub fn twist_oracle(x: &AnnulusCoords, t: TwistParameter) -> Result<AnnulusCoords> {
    let half = TwistParameter::new(0.5 * t.value())?;
    let inner = stratum_map(x, half)?;
    let outer = stratum_map(x, TwistParameter::new(-half.value())?)?;
    let ends = endpoints(x);
    let image = |v: Vertex| {
        let p = ends.vertex(v);
        if v.is_inside_axis() {
            inner.apply(p)
        } else {
            outer.apply(p)
        }
    };
    let mut out = [0.0; 4];
    for (slot, quad) in out.iter_mut().zip(ARC_QUADRILATERALS.iter()) {
        let [a, b, c, d] = quad.map(image);
        *slot = cross_ratio(a, b, c, d)?;
    }
    finish(out, x, t)
}

/// The unbalanced form: `E_t` on the inner gap, identity outside. Kept for
/// tests; it loses about `log10(e^{tL})` digits as the inner vertices crowd
/// towards the attracting fixed point.
#[doc(hidden)]
pub fn twist_oracle_one_sided(x: &AnnulusCoords, t: TwistParameter) -> Result<AnnulusCoords> {
    let e = stratum_map(x, t)?;
    let ends = endpoints(x);
    let image = |v: Vertex| {
        let p = ends.vertex(v);
        if v.is_inside_axis() {
            e.apply(p)
        } else {
            p
        }
    };
    let mut out = [0.0; 4];
    for (slot, quad) in out.iter_mut().zip(ARC_QUADRILATERALS.iter()) {
        let [a, b, c, d] = quad.map(image);
        *slot = cross_ratio(a, b, c, d)?;
    }
    finish(out, x, t)
}
