//! Pinned numeric tolerances.
//!
//! Every tolerance used by the geometry lives here so that test suites and
//! downstream callers agree on exactly one value per concern. Causal
//! classification itself uses none of these: interval signs are compared
//! exactly, and points landing on a light cone are classified as lightlike
//! only when the residual is exactly zero.

/// Absolute bound on the defining residual of a surface-membership test.
///
/// A point q lies on the deformed cone surface when |-4 t^2 + <x,x>| is at
/// most this value (with t > 0). Also reused wherever a constructed surface
/// is required to coincide with a coordinate level set.
pub const SURFACE_MEMBERSHIP: f64 = 1e-12;

/// Spacelikeness margin for constructed surfaces: the discrete gradient of
/// an accepted surface must satisfy |grad tau| <= 1 - SPACELIKE_MARGIN at
/// every interior grid node.
pub const SPACELIKE_MARGIN: f64 = 1e-6;

/// Default spatial grid spacing, in window units, for surface sampling and
/// verification when the caller does not pick one.
pub const DEFAULT_GRID_H: f64 = 0.05;

/// Mollifier half-width, in grid cells. The smoothing kernel spans
/// `KERNEL_CELLS` cells per side; shrink-and-retry halves the width from
/// here.
pub const KERNEL_CELLS: usize = 4;

/// Achronality slack for validating *input* surfaces: a surface is rejected
/// as non-achronal when its discrete gradient exceeds 1 + ACHRONAL_SLACK
/// anywhere. The slack absorbs finite-difference error on exactly-Lipschitz-1
/// inputs.
pub const ACHRONAL_SLACK: f64 = 1e-9;
