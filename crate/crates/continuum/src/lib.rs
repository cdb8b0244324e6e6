//! Exact causal geometry for finite Minkowski windows, with or without a
//! single excised causal shadow.
//!
//! The crate provides:
//!
//! * [`SpacetimeModel`] — a bounded window of 1+1 to 3+1 dimensional flat
//!   spacetime, optionally with the full light cone of one interior point
//!   removed, and exact (tolerance-free) causal classification of event
//!   pairs in either model;
//! * [`BallDiamond`] — double cones over spatial balls with closed-form
//!   membership, causal hulls, and causal disjointness;
//! * [`SurfaceFunction`] — grid-sampled Cauchy surfaces carrying an exact
//!   expression tree, so every construction re-verifies at half spacing;
//! * [`deform_surface_through_point`] — smooths a Lipschitz surface and
//!   pins it through a marked point within a per-node deviation budget;
//! * [`check_squeeze_conditions`] — dense-sampling verification that a
//!   deformed surface traps causal hulls between nested base sets;
//! * [`interpolate_cone`] — squeezes a third diamond between two nested
//!   ones so that its base lies on a smooth surface through the excision
//!   point.
//!
//! Causal predicates never use tolerances; only surface constructions do,
//! and those tolerances are pinned in [`tol`].

pub mod diamond;
pub mod error;
pub mod event;
pub mod model;
pub mod surface;
pub mod tol;

pub use diamond::{causally_disjoint_cones, interpolate_cone, BallDiamond, ConeInterpolation};
pub use error::{ConeError, ModelError, SurfaceError};
pub use event::{interval, spatial_dist, time_orientation, Event, Interval, TimeOrder};
pub use model::{ModelKind, SpacetimeModel, Window};
pub use surface::{
    check_squeeze_conditions, deform_surface_through_point, BaseBall, EpsProfile, Grid,
    Regularity, SqueezeReport, SurfaceExpr, SurfaceFunction,
};
