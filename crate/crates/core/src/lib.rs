//! Exact invariants of circle actions on almost complex manifolds with
//! isolated fixed points, computed from the weights at the fixed points.
//!
//! The crate is layered bottom-up:
//!
//! - [`algebra`]: rationals, Laurent polynomials and canonical rational
//!   functions in one indeterminate.
//! - [`model`]: fixed-point datasets, their file format and `N_i` profiles.
//! - [`genus`]: the `chi_y`-genus coefficients by the holomorphic
//!   Lefschetz fixed-point formula.
//! - [`localization`]: Chern numbers by localization.
//! - [`certify`]: every necessary condition bundled into one certificate.
//! - [`reproduce`]: the four-fixed-points-in-dimension-ten case analysis and
//!   an exhaustive weight search.

pub mod algebra;
pub mod certify;
pub mod fixtures;
pub mod genus;
pub mod localization;
pub mod model;
pub mod report;
pub mod reproduce;
mod subsets;

pub use model::{parse_dataset, FixedPoint, FixedPointDataset, NProfile, ParsedDataset};
