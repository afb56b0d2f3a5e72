//! The twist inside the coordinate vector of a larger marked surface.
//!
//! Four arcs of a triangulation that bound an embedded once-marked annulus
//! around the twisting curve transform exactly as the annulus coordinates;
//! every other coordinate is left alone. Whether the four indexed arcs really
//! bound such an annulus is not checked (there is no triangulation
//! combinatorics here); the embedding is taken as given.

use crate::annulus::AnnulusCoords;
use crate::error::{Error, Result};
use crate::twist::{twist_closed, TwistMethod, TwistParameter};

/// Positive cross-ratio coordinates of a labelled triangulation, `n >= 4`.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceCoords(Vec<f64>);

impl SurfaceCoords {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 4 {
            return Err(Error::SurfaceTooSmall(coords.len()));
        }
        if let Some((i, &v)) = coords
            .iter()
            .enumerate()
            .find(|(_, v)| !(v.is_finite() && **v > 0.0))
        {
            return Err(Error::NonPositiveCoordinate {
                name: format!("coordinate {}", i + 1),
                value: v,
            });
        }
        Ok(SurfaceCoords(coords))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    /// 1-based access, matching arc labels.
    pub fn get(&self, index: usize) -> Option<f64> {
        index.checked_sub(1).and_then(|i| self.0.get(i).copied())
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }
}

/// 1-based indices of the arcs playing the roles of annulus arcs 1–4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnnulusEmbedding([usize; 4]);

impl AnnulusEmbedding {
    pub fn new(i1: usize, i2: usize, i3: usize, i4: usize) -> Result<Self> {
        let idx = [i1, i2, i3, i4];
        if idx.contains(&0) {
            return Err(Error::InvalidEmbedding("indices are 1-based".into()));
        }
        for a in 0..4 {
            for b in (a + 1)..4 {
                if idx[a] == idx[b] {
                    return Err(Error::InvalidEmbedding(format!(
                        "index {} repeated",
                        idx[a]
                    )));
                }
            }
        }
        Ok(AnnulusEmbedding(idx))
    }

    pub fn indices(&self) -> [usize; 4] {
        self.0
    }

    fn check_fits(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&i| i > n) {
            Some(i) => Err(Error::InvalidEmbedding(format!(
                "index {i} out of range for {n} coordinates"
            ))),
            None => Ok(()),
        }
    }

    /// The four embedded coordinates as an annulus quadruple.
    pub fn extract(&self, s: &SurfaceCoords) -> Result<AnnulusCoords> {
        self.check_fits(s.len())?;
        AnnulusCoords::from_array(self.0.map(|i| s.0[i - 1]))
    }
}

/// Replaces the embedded quadruple by its closed-form twist.
pub fn apply_local_twist(
    s: &SurfaceCoords,
    emb: &AnnulusEmbedding,
    t: TwistParameter,
) -> Result<SurfaceCoords> {
    let local = emb.extract(s)?;
    splice(s, emb, twist_closed(&local, t)?)
}

/// As [`apply_local_twist`], with a caller-chosen evaluator.
pub fn apply_local_twist_with(
    method: &dyn TwistMethod,
    s: &SurfaceCoords,
    emb: &AnnulusEmbedding,
    t: TwistParameter,
) -> Result<SurfaceCoords> {
    let local = emb.extract(s)?;
    splice(s, emb, method.twist(&local, t)?)
}

fn splice(s: &SurfaceCoords, emb: &AnnulusEmbedding, y: AnnulusCoords) -> Result<SurfaceCoords> {
    let mut out = s.0.clone();
    for (i, v) in emb.0.iter().zip(y.as_array()) {
        out[i - 1] = v;
    }
    Ok(SurfaceCoords(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tolerance::max_rel_err;

    fn t(v: f64) -> TwistParameter {
        TwistParameter::new(v).unwrap()
    }

    #[test]
    fn examples() {
        let s = SurfaceCoords::new(vec![1.0, 1.0, 1.0, 1.0, 5.0, 7.0]).unwrap();
        let emb = AnnulusEmbedding::new(1, 2, 3, 4).unwrap();
        assert_eq!(apply_local_twist(&s, &emb, t(0.0)).unwrap(), s);

        let y = apply_local_twist(&s, &emb, t(1.0)).unwrap();
        assert!(max_rel_err(y.as_slice(), &[0.25, 1.0, 2.0, 2.0, 5.0, 7.0]) < 1e-12);
        assert_eq!(&y.as_slice()[4..], &[5.0, 7.0]);
    }

    #[test]
    fn invalid_embeddings() {
        assert!(matches!(
            AnnulusEmbedding::new(1, 2, 2, 4),
            Err(Error::InvalidEmbedding(_))
        ));
        assert!(AnnulusEmbedding::new(0, 1, 2, 3).is_err());
        let s = SurfaceCoords::new(vec![1.0; 5]).unwrap();
        let emb = AnnulusEmbedding::new(1, 2, 3, 6).unwrap();
        assert!(apply_local_twist(&s, &emb, t(0.5)).is_err());
    }

    #[test]
    fn invalid_surfaces() {
        assert_eq!(
            SurfaceCoords::new(vec![1.0; 3]),
            Err(Error::SurfaceTooSmall(3))
        );
        assert!(SurfaceCoords::new(vec![1.0, 1.0, 0.0, 1.0]).is_err());
    }

    #[test]
    fn scattered_embedding() {
        let s = SurfaceCoords::new(vec![9.0, 2.0, 0.5, 3.0, 0.7, 1.5, 4.0]).unwrap();
        let emb = AnnulusEmbedding::new(6, 2, 7, 4).unwrap();
        let y = apply_local_twist(&s, &emb, t(0.8)).unwrap();
        let local = AnnulusCoords::new(1.5, 2.0, 4.0, 3.0).unwrap();
        let expected = twist_closed(&local, t(0.8)).unwrap().as_array();
        assert_eq!([y.get(6), y.get(2), y.get(7), y.get(4)], expected.map(Some));
        for i in [1, 3, 5] {
            assert_eq!(y.get(i).unwrap().to_bits(), s.get(i).unwrap().to_bits());
        }
    }
}
