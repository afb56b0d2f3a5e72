/// Mixed relative/absolute comparison tolerance.
///
/// Two scalars `a`, `b` are close when `|a - b| <= max(rel * max(|a|, |b|), abs)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
}

impl Tolerance {
    /// Default for projective points and equivalence checks.
    pub const DEFAULT: Tolerance = Tolerance {
        rel: 1e-9,
        abs: 1e-9,
    };
    /// Used where two routes are algebraically identical (t = 0, t = 1).
    pub const EXACT: Tolerance = Tolerance {
        rel: 1e-12,
        abs: 1e-12,
    };

    pub const fn new(rel: f64, abs: f64) -> Self {
        Tolerance { rel, abs }
    }

    pub const fn relative(rel: f64) -> Self {
        Tolerance { rel, abs: rel }
    }

    pub fn close(&self, a: f64, b: f64) -> bool {
        let scale = a.abs().max(b.abs());
        (a - b).abs() <= (self.rel * scale).max(self.abs)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::DEFAULT
    }
}

/// `|a - b| / max(|a|, |b|)`, zero when both vanish.
pub fn rel_err(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

/// Largest [`rel_err`] over paired slices.
pub fn max_rel_err(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| rel_err(x, y))
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn close_uses_abs_floor_near_zero() {
        let tol = Tolerance::DEFAULT;
        assert!(tol.close(0.0, 5e-10));
        assert!(!tol.close(0.0, 5e-9));
        assert!(tol.close(1e6, 1e6 + 1e-4));
        assert!(!tol.close(1e6, 1e6 + 1e-2));
    }

    #[test]
    fn rel_err_is_symmetric() {
        assert_eq!(rel_err(2.0, 1.0), rel_err(1.0, 2.0));
        assert_eq!(rel_err(0.0, 0.0), 0.0);
        assert_eq!(max_rel_err(&[1.0, 4.0], &[1.0, 2.0]), 0.5);
    }
}
