//! The causal-set type: a finite strict partial order stored as closure and
//! covering bit matrices, optionally embedded in a spacetime model.

use crate::bitmat::BitMatrix;
use crate::error::CausetError;
use continuum::{time_orientation, Event, SpacetimeModel, TimeOrder};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, Poisson};

/// Hard cap on sprinkled causet size; a density/window combination that
/// expects more elements is refused rather than ground through.
pub const SPRINKLE_CAP: usize = 20_000;

/// A finite causal set. `order` holds the strict relation's reachability
/// closure (`order.get(i, j)` means `i` strictly precedes `j`), `hasse` its
/// covering relation, and `past` the transpose of `order` for fast
/// past-cone reads.
#[derive(Debug, Clone)]
pub struct Causet {
    n: usize,
    order: BitMatrix,
    hasse: BitMatrix,
    past: BitMatrix,
    hasse_past: BitMatrix,
    coords: Option<Vec<Event>>,
    seed: Option<u64>,
}

impl Causet {
    /// Builds from arbitrary relation pairs; the closure is computed and a
    /// cycle is an error.
    pub fn from_relation(n: usize, pairs: &[(usize, usize)]) -> Result<Self, CausetError> {
        for &(i, j) in pairs {
            if i >= n {
                return Err(CausetError::BadElement(i));
            }
            if j >= n {
                return Err(CausetError::BadElement(j));
            }
        }
        let mut order = BitMatrix::from_pairs(n, pairs);
        order.transitive_close();
        if let Some(i) = order.first_diagonal() {
            return Err(CausetError::CycleDetected(i));
        }
        Ok(Self::from_closed_order(n, order, None, None))
    }

    /// Builds from covering pairs; identical to [`Causet::from_relation`]
    /// except in intent (covers are what the on-disk format stores).
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self, CausetError> {
        Self::from_relation(n, covers)
    }

    fn from_closed_order(
        n: usize,
        order: BitMatrix,
        coords: Option<Vec<Event>>,
        seed: Option<u64>,
    ) -> Self {
        let hasse = order.transitive_reduce();
        let past = order.transpose();
        let hasse_past = hasse.transpose();
        Causet { n, order, hasse, past, hasse_past, coords, seed }
    }

    /// Builds the order induced by a spacetime model on explicit events.
    /// Every event must lie in the model (in particular, outside any
    /// excised shadow); duplicates are rejected so the order stays strict.
    pub fn from_events(model: &SpacetimeModel, events: &[Event]) -> Result<Self, CausetError> {
        let n = events.len();
        let mut order = BitMatrix::new(n);
        for i in 0..n {
            model.check_in_window(&events[i])?;
            if !model.excision_membership(&events[i])? {
                return Err(CausetError::Model(continuum::ModelError::InExcisedShadow(
                    events[i].clone(),
                )));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let rel = model.causal_relation(&events[i], &events[j])?;
                if rel == continuum::Interval::Identical {
                    return Err(CausetError::DuplicateEvent(events[i].clone()));
                }
                if rel.is_causal() && time_orientation(&events[i], &events[j]) == TimeOrder::Future
                {
                    order.set(i, j);
                }
            }
        }
        debug_assert!(order.first_diagonal().is_none());
        Ok(Self::from_closed_order(n, order, Some(events.to_vec()), None))
    }

    /// Poisson sprinkling at the given density, deterministic in the seed.
    /// For an excised model, points landing in the removed shadow are
    /// rejected, which realizes the Poisson process on the surviving
    /// region. Events are sorted by time (then spatially) before the order
    /// is built, so element ids increase toward the future.
    pub fn sprinkle(
        model: &SpacetimeModel,
        density: f64,
        seed: u64,
    ) -> Result<Self, CausetError> {
        let volume = model.window().volume();
        let expected = density * volume;
        if expected > SPRINKLE_CAP as f64 {
            return Err(CausetError::TooDense { expected, cap: SPRINKLE_CAP });
        }
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        let count = if expected > 0.0 {
            Poisson::new(expected)
                .expect("positive finite mean")
                .sample(&mut rng) as usize
        } else {
            0
        };
        let w = model.window().clone();
        let mut events = Vec::with_capacity(count);
        for _ in 0..count {
            let t = rng.random_range(w.time[0]..w.time[1]);
            let x: Vec<f64> =
                w.space.iter().map(|s| rng.random_range(s[0]..s[1])).collect();
            let ev = Event::new(t, &x);
            if model.excision_membership(&ev)? {
                events.push(ev);
            }
        }
        events.sort_by(|a, b| {
            a.t.total_cmp(&b.t).then_with(|| {
                a.x.iter()
                    .zip(&b.x)
                    .map(|(u, v)| u.total_cmp(v))
                    .find(|o| o.is_ne())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
        });
        let mut c = Self::from_events(model, &events)?;
        c.seed = Some(seed);
        Ok(c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn coords(&self) -> Option<&[Event]> {
        self.coords.as_deref()
    }

    pub fn coord(&self, i: usize) -> Result<&Event, CausetError> {
        self.coords
            .as_ref()
            .and_then(|c| c.get(i))
            .ok_or(CausetError::NoCoords(i))
    }

    /// Strict precedence: `i` is in the causal past of `j`.
    pub fn precedes(&self, i: usize, j: usize) -> bool {
        self.order.get(i, j)
    }

    /// Causally related in either direction (strictly).
    pub fn related(&self, i: usize, j: usize) -> bool {
        self.order.get(i, j) || self.order.get(j, i)
    }

    pub fn order(&self) -> &BitMatrix {
        &self.order
    }

    pub fn hasse(&self) -> &BitMatrix {
        &self.hasse
    }

    /// Transpose of the strict order: row `i` is the strict past of `i`.
    pub fn past_matrix(&self) -> &BitMatrix {
        &self.past
    }

    /// Transpose of the covering relation: row `i` lists the covering
    /// predecessors of `i`.
    pub fn hasse_past(&self) -> &BitMatrix {
        &self.hasse_past
    }

    /// Element ids in a topological order of the strict relation (parents
    /// before children). Sprinkled causets are already sorted by time, but
    /// hand-built relations may use any labeling.
    pub fn topo_order(&self) -> Vec<usize> {
        let mut indeg: Vec<usize> =
            (0..self.n).map(|i| self.hasse_past.row_count(i)).collect();
        // Smallest ready id first, for a deterministic extension.
        let mut ready: std::collections::BTreeSet<usize> =
            (0..self.n).filter(|&i| indeg[i] == 0).collect();
        let mut out = Vec::with_capacity(self.n);
        while let Some(&i) = ready.iter().next() {
            ready.remove(&i);
            out.push(i);
            for j in self.hasse.row_iter(i) {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    ready.insert(j);
                }
            }
        }
        debug_assert_eq!(out.len(), self.n, "closed acyclic orders always extend");
        out
    }

    /// The relation as CSV: header row with ids, then one row per element
    /// with 1 where the row element strictly precedes the column element.
    pub fn relation_csv(&self) -> String {
        let mut out = String::from("id");
        for j in 0..self.n {
            out.push_str(&format!(",{j}"));
        }
        out.push('\n');
        for i in 0..self.n {
            out.push_str(&format!("{i}"));
            for j in 0..self.n {
                out.push_str(if self.order.get(i, j) { ",1" } else { ",0" });
            }
            out.push('\n');
        }
        out
    }
}
