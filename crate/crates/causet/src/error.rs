use continuum::{Event, ModelError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CausetError {
    #[error("relation has a cycle through element {0}")]
    CycleDetected(usize),
    #[error("expected about {expected:.0} elements, above the cap of {cap}")]
    TooDense { expected: f64, cap: usize },
    #[error("element id {0} out of range")]
    BadElement(usize),
    #[error("sets live on different causets (capacities {0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("elements {0} and {1} are causally related, so the set is not an antichain")]
    NotAntichain(usize, usize),
    #[error("no Cauchy slice found near the requested time after {tried} attempts")]
    NoCauchySlice { tried: usize },
    #[error("event {0:?} carries no coordinates in this causet")]
    NoCoords(usize),
    #[error("duplicate event at {0:?}")]
    DuplicateEvent(Event),
    #[error(transparent)]
    Model(#[from] ModelError),
}
