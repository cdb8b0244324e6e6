//! Events and the causal classification of event pairs.

/// A point of a spacetime window: one time coordinate and `dim` spatial
/// coordinates, all in window units with the speed of light set to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Event {
    pub t: f64,
    pub x: Vec<f64>,
}

impl Event {
    pub fn new(t: f64, x: &[f64]) -> Self {
        Event { t, x: x.to_vec() }
    }

    /// Builds an event from a flat `[t, x1, .., xd]` coordinate record.
    pub fn from_coords(coords: &[f64]) -> Option<Self> {
        let (&t, x) = coords.split_first()?;
        if x.is_empty() {
            return None;
        }
        Some(Event { t, x: x.to_vec() })
    }

    pub fn dim(&self) -> usize {
        self.x.len()
    }

    /// Flat `[t, x1, .., xd]` record, the inverse of [`Event::from_coords`].
    pub fn coords(&self) -> Vec<f64> {
        let mut c = Vec::with_capacity(1 + self.x.len());
        c.push(self.t);
        c.extend_from_slice(&self.x);
        c
    }
}

/// Euclidean distance between two spatial coordinate vectors.
pub fn spatial_dist(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(p, q)| (p - q) * (p - q))
        .sum::<f64>()
        .sqrt()
}

/// Sign class of the Minkowski interval between two events. The relation is
/// symmetric; direction lives in [`TimeOrder`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interval {
    /// Same coordinates.
    Identical,
    /// Timelike separated: the interval is negative (mostly-plus signature).
    Chronological,
    /// Null separated, residual exactly zero.
    Lightlike,
    /// Spacelike separated: the interval is positive.
    Spacelike,
}

impl Interval {
    /// Chronological or lightlike (or identical): some causal curve joins
    /// the pair.
    pub fn is_causal(self) -> bool {
        !matches!(self, Interval::Spacelike)
    }
}

/// Time ordering of `b` relative to `a`, by coordinate time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TimeOrder {
    Past,
    Simultaneous,
    Future,
}

/// Classifies the interval between two events of equal spatial dimension.
///
/// The comparison is exact: `-dt^2 + |dx|^2` is compared against zero with
/// no tolerance, so lightlike verdicts arise only from exactly-null residuals.
pub fn interval(a: &Event, b: &Event) -> Interval {
    debug_assert_eq!(a.dim(), b.dim());
    if a.t == b.t && a.x == b.x {
        return Interval::Identical;
    }
    let dt = b.t - a.t;
    let dx2: f64 = a
        .x
        .iter()
        .zip(&b.x)
        .map(|(p, q)| (p - q) * (p - q))
        .sum();
    let s = -dt * dt + dx2;
    if s < 0.0 {
        Interval::Chronological
    } else if s > 0.0 {
        Interval::Spacelike
    } else {
        Interval::Lightlike
    }
}

/// Direction of `b` as seen from `a`, independent of the interval class.
pub fn time_orientation(a: &Event, b: &Event) -> TimeOrder {
    if b.t > a.t {
        TimeOrder::Future
    } else if b.t < a.t {
        TimeOrder::Past
    } else {
        TimeOrder::Simultaneous
    }
}
