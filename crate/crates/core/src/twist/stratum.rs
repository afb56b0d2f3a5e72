use super::TwistParameter;
use crate::annulus::{core_geodesic, endpoints, AnnulusCoords};
use crate::error::{Error, Result};
use crate::mobius::{compose, MobiusMap, ProjectivePoint};

/// The hyperbolic element applied to the gap containing `0` when twisting by
/// `t`: same axis as `f2` (from `p2` to `p1`) and translation length `|t|·L`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StratumMap {
    pub map: MobiusMap,
    pub p1: f64,
    pub p2: f64,
    /// Signed displacement `t·L` along the axis.
    pub shift: f64,
}

impl StratumMap {
    pub fn apply(&self, p: ProjectivePoint) -> ProjectivePoint {
        self.map.apply(p)
    }
}

/// `E = A⁻¹ · diag(e^{tL/2}, e^{-tL/2}) · A` with
/// `A = (1/√(p1 - p2)) [[1, -p1], [1, -p2]]`, which sends `p1 ↦ 0` and `p2 ↦ ∞`.
pub fn stratum_map(x: &AnnulusCoords, t: TwistParameter) -> Result<StratumMap> {
    let g = core_geodesic(x);
    let shift = t.value() * g.length;
    let k = (g.p1 - g.p2).sqrt().recip();
    let to_axis = MobiusMap::new(k, -g.p1 * k, k, -g.p2 * k)?;
    let lambda = (0.5 * shift).exp();
    let diag = MobiusMap::diagonal(lambda).map_err(|_| {
        Error::Range(format!(
            "stratum map for t·L = {shift} is not representable"
        ))
    })?;
    let map = compose(&compose(&to_axis.inverse(), &diag), &to_axis);
    Ok(StratumMap {
        map,
        p1: g.p1,
        p2: g.p2,
        shift,
    })
}

/// Images of the three vertices in the moving gap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwistedEndpoints {
    pub zero: ProjectivePoint,
    pub x1: ProjectivePoint,
    pub x3: ProjectivePoint,
}

/// `(E(0), E(x1), E(x3))` for the stratum map `E` of `(x, t)`.
pub fn twisted_endpoints(x: &AnnulusCoords, t: TwistParameter) -> Result<TwistedEndpoints> {
    let e = stratum_map(x, t)?;
    let ends = endpoints(x);
    Ok(TwistedEndpoints {
        zero: e.apply(ProjectivePoint::Finite(0.0)),
        x1: e.apply(ProjectivePoint::Finite(ends.x1)),
        x3: e.apply(ProjectivePoint::Finite(ends.x3)),
    })
}
