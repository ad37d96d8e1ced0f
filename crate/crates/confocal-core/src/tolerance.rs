use serde::{Deserialize, Serialize};

/// Numeric tolerances used by geometric predicates.
///
/// All point tolerances are relative to the largest axis `a₁` of the family
/// in question; direction tolerances are absolute (directions are unit
/// vectors).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceProfile {
    /// Relative tolerance for `|Q_λ(p) − 1|` in on-quadric checks.
    pub on_quadric: f64,
    /// Absolute tolerance for `| |v| − 1 |` in unit-direction checks.
    pub unit_direction: f64,
    /// Relative tolerance under which a discriminant counts as zero
    /// (tangency) in line–quadric intersection.
    pub tangency: f64,
    /// Relative tolerance for matching caustic parameters between lines.
    pub caustic_match: f64,
    /// Singular-value ratio below which a set of hyperplanes counts as a
    /// pencil (rank ≤ 2).
    pub pencil_rank: f64,
    /// Minimal advance parameter `t` accepted for a next bounce, relative to
    /// the scene scale.
    pub min_advance: f64,
}

impl Default for ToleranceProfile {
    fn default() -> Self {
        ToleranceProfile {
            on_quadric: 1e-9,
            unit_direction: 1e-12,
            tangency: 1e-10,
            caustic_match: 1e-10,
            pencil_rank: 1e-9,
            min_advance: 1e-10,
        }
    }
}
