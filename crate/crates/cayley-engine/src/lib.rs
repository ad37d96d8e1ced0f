//! Exact algebraic closure criteria for billiards in confocal families.
//!
//! The periodicity conditions here are all of one shape: expand `√𝒫` as a
//! truncated series around one or two points, assemble a structured matrix
//! of its coefficients, and decide a determinant or rank predicate. With
//! rational inputs the series coefficients live in quadratic extensions of
//! `ℚ`, so every verdict is exact; no rank tolerance ever enters.
//!
//! The single-point conditions ([`cayley_planar`], [`period_condition_ddim`],
//! [`on_quadric_condition`]) factor the surd out entirely and reduce to
//! rational linear algebra. The two-point conditions
//! ([`cayley_two_conic`], [`two_ellipsoid_game_condition`]) mix the surds of
//! `𝒫` at the two expansion points and are decided in the biquadratic
//! extension `ℚ(√𝒫(β₁), √𝒫(β₂))`.

pub mod biquad;
pub mod ddim;
pub mod error;
pub mod on_quadric;
pub mod planar;
pub mod rational;
pub mod report;
pub mod search;
pub mod series;
pub mod two_point;

pub use ddim::period_condition_ddim;
pub use error::CayleyError;
pub use on_quadric::on_quadric_condition;
pub use planar::cayley_planar;
pub use report::{ConditionKind, ConditionReport};
pub use search::{bisect_planar_caustic, find_caustic_for_period};
pub use series::{sqrt_series, Branch, SqrtSeries};
pub use two_point::{cayley_two_conic, two_ellipsoid_game_condition};
