use super::{finish, TwistParameter, SHIFT_THRESHOLD};
use crate::annulus::AnnulusCoords;
use crate::error::Result;

/// Closed form in terms of `L = L(f2)` and `s = √(X1 X2)`.
///
/// With `E = e^{tL}`, `N = 2 (X1 X2 cosh L - 2 s cosh(L/2) + X1 + 1)`,
/// `A = (s e^{-L/2} - X1 - 1) E - (s e^{L/2} - X1 - 1)` and
/// `B = (s e^{-L/2} - 1) E - (s e^{L/2} - 1)`:
///
/// ```text
/// X1' = X1 N E / A²,  X2' = X2 B² / (N E),  X3' = X3 A / B,  X4' = X4 A / B.
/// ```
pub fn twist_closed(x: &AnnulusCoords, t: TwistParameter) -> Result<AnnulusCoords> {
    let [x1, x2, x3, x4] = x.as_array();
    let s = x.sqrt_x1x2();
    let length = 2.0 * (x.trace_abs() / 2.0).acosh();
    let (e_minus, e_plus) = ((-0.5 * length).exp(), (0.5 * length).exp());
    let n = 2.0 * (x1 * x2 * length.cosh() - 2.0 * s * (0.5 * length).cosh() + x1 + 1.0);

    let (a_lead, a_tail) = (s * e_minus - x1 - 1.0, s * e_plus - x1 - 1.0);
    let (b_lead, b_tail) = (s * e_minus - 1.0, s * e_plus - 1.0);

    let tl = t.value() * length;
    let out = if tl > SHIFT_THRESHOLD {
        let u = (-tl).exp();
        let a = a_lead - a_tail * u;
        let b = b_lead - b_tail * u;
        [
            x1 * n * u / (a * a),
            x2 * b * b / (n * u),
            x3 * a / b,
            x4 * a / b,
        ]
    } else {
        let e = tl.exp();
        let a = a_lead * e - a_tail;
        let b = b_lead * e - b_tail;
        [
            x1 * n * e / (a * a),
            x2 * b * b / (n * e),
            x3 * a / b,
            x4 * a / b,
        ]
    };
    finish(out, x, t)
}
