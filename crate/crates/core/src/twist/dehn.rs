//! The Dehn twist as a rational map.
//!
//! The time-one twist is
//! `(X1, X2, X3, X4) ↦ (X1² X2 / (X1 + 1)², 1/X1, (X1 + 1) X3, (X1 + 1) X4)`
//! with inverse
//! `(Y1, Y2, Y3, Y4) ↦ (1/Y2, Y1 (1 + Y2)², Y2 Y3 / (1 + Y2), Y2 Y4 / (1 + Y2))`.
//! Both are written over any [`Num`] type so they can be evaluated exactly
//! over the rationals.

use num_traits::Num;

use crate::annulus::AnnulusCoords;
use crate::error::{Error, Result};

pub fn dehn_step<T: Num + Clone>(x: &[T; 4]) -> [T; 4] {
    let [x1, x2, x3, x4] = x.clone();
    let s = x1.clone() + T::one();
    [
        x1.clone() * x1.clone() * x2 / (s.clone() * s.clone()),
        T::one() / x1,
        s.clone() * x3,
        s * x4,
    ]
}

pub fn dehn_step_inverse<T: Num + Clone>(y: &[T; 4]) -> [T; 4] {
    let [y1, y2, y3, y4] = y.clone();
    let s = T::one() + y2.clone();
    [
        T::one() / y2.clone(),
        y1 * s.clone() * s.clone(),
        y2.clone() * y3 / s.clone(),
        y2 * y4 / s,
    ]
}

/// `m`-fold Dehn twist; negative `m` iterates the inverse.
pub fn dehn_iterate<T: Num + Clone>(x: &[T; 4], m: i64) -> [T; 4] {
    let mut cur = x.clone();
    for _ in 0..m.unsigned_abs() {
        cur = if m > 0 {
            dehn_step(&cur)
        } else {
            dehn_step_inverse(&cur)
        };
    }
    cur
}

pub fn dehn_twist(x: &AnnulusCoords, m: i64) -> Result<AnnulusCoords> {
    let out = dehn_iterate(&x.as_array(), m);
    AnnulusCoords::from_array(out)
        .map_err(|e| Error::Range(format!("{m}-fold Dehn twist of {:?}: {e}", x.as_array())))
}
