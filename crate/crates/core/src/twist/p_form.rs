use super::{finish, TwistParameter, SHIFT_THRESHOLD};
use crate::annulus::{core_geodesic, AnnulusCoords};
use crate::error::Result;

/// Twist via the fixed points `p1, p2` of `f2`. With `E = e^{tL}`,
/// `Q = p1² + p2² + 2 X1` and `D = (X1 + p1) E - (X1 + p2)`:
///
/// ```text
/// X1' = X1 Q E / D²
/// X2' = X2 (p1 E - p2)² / (Q E)
/// X3' = X3 D / (p1 E - p2)
/// X4' = X4 D / (p1 E - p2)
/// ```
///
/// `Q` is evaluated as `(p1 - p2)²` and `D` as `X1 (E - 1) + (p1 E - p2)`
/// (both equal via `p1 p2 = -X1`), so every factor collapses exactly at `t = 0`.
pub fn twist_p_form(x: &AnnulusCoords, t: TwistParameter) -> Result<AnnulusCoords> {
    let g = core_geodesic(x);
    let (p1, p2) = (g.p1, g.p2);
    let [x1, x2, x3, x4] = x.as_array();
    let gap = p1 - p2;
    let q = gap * gap;
    let tl = t.value() * g.length;

    let out = if tl > SHIFT_THRESHOLD {
        // Divide numerator and denominator by E; u = 1/E stays bounded.
        let u = (-tl).exp();
        let m = p1 - p2 * u;
        let d = x1 * (1.0 - u) + m;
        [
            x1 * q * u / (d * d),
            x2 * m * m / (q * u),
            x3 * d / m,
            x4 * d / m,
        ]
    } else {
        let e = tl.exp();
        let m = p1 * e - p2;
        let d = x1 * tl.exp_m1() + m;
        [
            x1 * q * e / (d * d),
            x2 * m * m / (q * e),
            x3 * d / m,
            x4 * d / m,
        ]
    };
    finish(out, x, t)
}
