//! Geometry of a confocal family of quadrics in `ℝ^d`.
//!
//! A family is fixed by semi-axis parameters `a₁ > a₂ > ⋯ > a_d > 0`; the
//! quadric with parameter `λ` is
//!
//! ```text
//! Q_λ(x) = x₁²/(a₁−λ) + ⋯ + x_d²/(a_d−λ) = 1.
//! ```
//!
//! This crate provides the primitives every billiard construction rests on:
//! classification of `Q_λ`, Jacobian elliptic coordinates of a point,
//! line–quadric intersection, real and virtual reflection, the `d−1` caustic
//! parameters of a line (Chasles), tangent hyperplanes and pencil tests.
//!
//! Everything is a pure function of its inputs; no module-level state.
//! Polynomial operations are also available over arbitrary-precision
//! rationals (see [`exact`]) so that downstream algebraic criteria can stay
//! exact when their inputs are rational.

pub mod caustics;
pub mod coords;
pub mod direction;
pub mod error;
pub mod exact;
pub mod family;
pub mod hyperplane;
pub mod intersect;
pub mod pencil;
pub mod poly;
pub mod ray;
pub mod reflect;
pub mod tolerance;

pub use caustics::{caustics_of_line, CausticSet};
pub use coords::{elliptic_coordinates, EllipticCoords};
pub use direction::direction_for_caustics;
pub use error::GeometryError;
pub use family::{classify, ConfocalFamily, QuadricKind, QuadricParam};
pub use hyperplane::{in_pencil, tangent_hyperplane, tangent_planes_in_pencil, Hyperplane};
pub use intersect::{intersect, LineQuadricHits};
pub use pencil::{pencil_polynomial, pencil_polynomial_exact};
pub use ray::Ray;
pub use reflect::{reflect, ReflectionMode};
pub use tolerance::ToleranceProfile;
