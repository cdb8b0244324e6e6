//! Spacetime windows: plain Minkowski and Minkowski with the causal shadow
//! of one interior point removed.
//!
//! The excised model is the manifold `M \ J(p)`: both cones of the excision
//! point, boundary included, are cut out. For points of the remainder the
//! causal order is exactly the restriction of the ambient order: a causal
//! curve between two points that both avoid `J(p)` can never meet `J(p)`,
//! because entering the future cone traps the curve inside it (and dually
//! for the past cone). `causal_relation` therefore classifies by ambient
//! interval after rejecting shadow points.

use crate::error::ModelError;
use crate::event::{interval, spatial_dist, Event, Interval};
use crate::tol;

/// Closed coordinate box: one time interval and `dim` spatial intervals.
#[derive(Debug, Clone, PartialEq)]
pub struct Window {
    pub time: [f64; 2],
    pub space: Vec<[f64; 2]>,
}

impl Window {
    pub fn new(time: [f64; 2], space: &[[f64; 2]]) -> Result<Self, ModelError> {
        if time[1] <= time[0] || space.iter().any(|s| s[1] <= s[0]) {
            return Err(ModelError::EmptyWindow);
        }
        Ok(Window { time, space: space.to_vec() })
    }

    /// Symmetric box `[-r, r]` on the time axis and every spatial axis.
    pub fn symmetric(dim: usize, r: f64) -> Result<Self, ModelError> {
        Window::new([-r, r], &vec![[-r, r]; dim])
    }

    pub fn dim(&self) -> usize {
        self.space.len()
    }

    pub fn contains(&self, q: &Event) -> bool {
        q.t >= self.time[0]
            && q.t <= self.time[1]
            && q.x.len() == self.space.len()
            && q.x
                .iter()
                .zip(&self.space)
                .all(|(c, s)| *c >= s[0] && *c <= s[1])
    }

    fn strictly_contains(&self, q: &Event) -> bool {
        q.t > self.time[0]
            && q.t < self.time[1]
            && q.x.len() == self.space.len()
            && q.x
                .iter()
                .zip(&self.space)
                .all(|(c, s)| *c > s[0] && *c < s[1])
    }

    /// Spacetime volume of the box.
    pub fn volume(&self) -> f64 {
        (self.time[1] - self.time[0])
            * self
                .space
                .iter()
                .map(|s| s[1] - s[0])
                .product::<f64>()
    }
}

/// Which spacetime the window models.
#[derive(Debug, Clone, PartialEq)]
pub enum ModelKind {
    Minkowski,
    /// Minkowski minus the closed causal shadow `J(point)`.
    Excised { point: Event },
}

/// A finite window of 1+d Minkowski spacetime, `d` in `1..=3`, optionally
/// with one interior point's causal shadow excised.
#[derive(Debug, Clone, PartialEq)]
pub struct SpacetimeModel {
    kind: ModelKind,
    dim: usize,
    window: Window,
}

impl SpacetimeModel {
    pub fn minkowski(dim: usize, window: Window) -> Result<Self, ModelError> {
        Self::build(ModelKind::Minkowski, dim, window)
    }

    pub fn excised(dim: usize, window: Window, point: Event) -> Result<Self, ModelError> {
        Self::build(ModelKind::Excised { point }, dim, window)
    }

    fn build(kind: ModelKind, dim: usize, window: Window) -> Result<Self, ModelError> {
        if !(1..=3).contains(&dim) {
            return Err(ModelError::BadDimension(dim));
        }
        if window.dim() != dim {
            return Err(ModelError::DimMismatch { got: window.dim(), want: dim });
        }
        if let ModelKind::Excised { point } = &kind {
            if point.dim() != dim {
                return Err(ModelError::DimMismatch { got: point.dim(), want: dim });
            }
            if !window.strictly_contains(point) {
                return Err(ModelError::ExcisionPointNotInterior);
            }
        }
        Ok(SpacetimeModel { kind, dim, window })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn kind(&self) -> &ModelKind {
        &self.kind
    }

    pub fn excision_point(&self) -> Option<&Event> {
        match &self.kind {
            ModelKind::Excised { point } => Some(point),
            ModelKind::Minkowski => None,
        }
    }

    fn check_in_window(&self, q: &Event) -> Result<(), ModelError> {
        if q.dim() != self.dim {
            return Err(ModelError::DimMismatch { got: q.dim(), want: self.dim });
        }
        if !self.window.contains(q) {
            return Err(ModelError::OutOfWindow(q.clone()));
        }
        Ok(())
    }

    /// True when `q` belongs to the model's manifold: for the excised model,
    /// strictly spacelike to the excision point (shadow boundary excluded);
    /// for plain Minkowski, everywhere in the window.
    pub fn excision_membership(&self, q: &Event) -> Result<bool, ModelError> {
        self.check_in_window(q)?;
        match &self.kind {
            ModelKind::Minkowski => Ok(true),
            ModelKind::Excised { point } => Ok(interval(point, q) == Interval::Spacelike),
        }
    }

    /// Classifies the causal relation of a window pair.
    ///
    /// For the excised model both arguments must avoid the shadow; the
    /// verdict is then the ambient interval class (see the module notes for
    /// why no path correction is needed).
    pub fn causal_relation(&self, a: &Event, b: &Event) -> Result<Interval, ModelError> {
        self.check_in_window(a)?;
        self.check_in_window(b)?;
        if let ModelKind::Excised { point } = &self.kind {
            for q in [a, b] {
                if interval(point, q) != Interval::Spacelike {
                    return Err(ModelError::InExcisedShadow(q.clone()));
                }
            }
        }
        Ok(interval(a, b))
    }

    /// Membership in the worked deformed-cone surface: the upper half light
    /// cone of half slope through the excision point (origin for plain
    /// Minkowski), i.e. residual `-4 dt^2 + <dx,dx>` zero within
    /// [`tol::SURFACE_MEMBERSHIP`] and `dt > 0`.
    pub fn surface_membership_co(&self, q: &Event) -> Result<bool, ModelError> {
        self.check_in_window(q)?;
        let (dt, dx2) = match &self.kind {
            ModelKind::Excised { point } => {
                let d = spatial_dist(&q.x, &point.x);
                (q.t - point.t, d * d)
            }
            ModelKind::Minkowski => {
                let d2: f64 = q.x.iter().map(|c| c * c).sum();
                (q.t, d2)
            }
        };
        let residual = -4.0 * dt * dt + dx2;
        Ok(residual.abs() <= tol::SURFACE_MEMBERSHIP && dt > 0.0)
    }
}
