//! Error types for model construction, causal queries, and surface work.

use thiserror::Error;

use crate::event::Event;

/// Errors from model construction and point-level causal queries.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum ModelError {
    #[error("window must have positive volume on every axis")]
    EmptyWindow,
    #[error("spatial dimension {0} unsupported, expected 1..=3")]
    BadDimension(usize),
    #[error("event has dimension {got}, model has {want}")]
    DimMismatch { got: usize, want: usize },
    #[error("excision point must lie strictly inside the window")]
    ExcisionPointNotInterior,
    #[error("event ({0:?}) outside the model window")]
    OutOfWindow(Event),
    #[error("event ({0:?}) lies in the excised causal shadow")]
    InExcisedShadow(Event),
    #[error("operation requires an excised model")]
    NoExcisionPoint,
}

/// Errors from cone construction and cone interpolation.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum ConeError {
    #[error("cone radius must be strictly positive, got {0}")]
    DegenerateRadius(f64),
    #[error("closed double cone does not fit inside the window")]
    OutOfWindow,
    #[error("cone dimension {got} does not match model dimension {want}")]
    DimMismatch { got: usize, want: usize },
    #[error("cone meets the excised causal shadow (slack {slack})")]
    ShadowOverlap { slack: f64 },
    #[error("nesting slack {slack} is below grid resolution {h}")]
    NoRoom { slack: f64, h: f64 },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

/// Errors from surface deformation and squeeze checking.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum SurfaceError {
    #[error("input surface is not achronal: discrete gradient {grad} at node {node}")]
    NotAchronal { node: usize, grad: f64 },
    #[error("deformation cannot meet the requested tolerance: best deviation {achieved} vs eps {needed}")]
    ToleranceUnachievable { needed: f64, achieved: f64 },
    #[error("base sets are not strictly nested: {0}")]
    PreconditionNesting(String),
    #[error("eps must be strictly positive everywhere")]
    NonPositiveEps,
    #[error("surfaces must share one grid")]
    GridMismatch,
    #[error("pin point does not project onto a grid node")]
    PinOffGrid,
}
