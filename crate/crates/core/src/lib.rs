//! Fenchel–Nielsen twist flow on the cross-ratio coordinates of the
//! once-marked annulus.
//!
//! The crate is organised bottom-up:
//!
//! - [`mobius`]: points of the projective line, cross ratios and `PSL(2,R)`
//!   maps (classification, translation length, fixed points).
//! - [`annulus`]: the coordinate model `(X1, X2, X3, X4)`, the lifted
//!   endpoint configuration, the holonomy `f2` of the core curve and its
//!   geodesic data.
//! - [`twist`]: the twist flow itself. Three interchangeable evaluators are
//!   registered by name (`closed`, `p-form`, `oracle`) behind the
//!   [`twist::TwistMethod`] trait, plus the rational m-fold Dehn twist.
//! - [`surface`]: the twist applied to four coordinates of a larger surface.
//! - [`trajectory`] and [`verify`]: sampled flow curves with CSV/JSON/SVG
//!   output, and the seeded self-check suite used by the CLI.
//!
//! ```
//! use annulus_twist::{AnnulusCoords, TwistParameter, twist};
//!
//! let x = AnnulusCoords::new(1.0, 1.0, 1.0, 1.0).unwrap();
//! let y = twist::twist_p_form(&x, TwistParameter::new(1.0).unwrap()).unwrap();
//! assert!((y.x1() - 0.25).abs() < 1e-12);
//! assert!((y.x3() - 2.0).abs() < 1e-12);
//! ```

pub mod annulus;
pub mod error;
pub mod mobius;
pub mod surface;
pub mod tolerance;
pub mod trajectory;
pub mod twist;
pub mod verify;

pub use annulus::{AnnulusCoords, CoreGeodesic, EndpointConfig};
pub use error::{Error, Result};
pub use mobius::{MobiusMap, ProjectivePoint};
pub use surface::{AnnulusEmbedding, SurfaceCoords};
pub use tolerance::Tolerance;
pub use twist::{StratumMap, TwistMethod, TwistParameter};
