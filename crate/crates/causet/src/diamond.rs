//! Diamonds anchored on a Cauchy slice: bases and their domains of
//! dependence, plus interpolation between nested diamonds.
//!
//! Two structural facts carry this module (both follow from the domain-of-
//! dependence DP and antichain-ness of the slice):
//!
//! * the span of a base meets the slice exactly in the base, so distinct
//!   bases give distinct spans;
//! * spans are strictly monotone in the base: a proper base extension
//!   properly extends the span.
//!
//! Consequently a diamond strictly between two nested diamonds exists
//! exactly when the outer base has at least two elements the inner lacks,
//! and the minimal interpolating spans sit over single-element extensions.

use crate::bitmat::Bits;
use crate::causet::Causet;
use crate::dod::{check_antichain, domain_of_dependence};
use crate::error::CausetError;
use crate::region::EXHAUSTIVE_LIMIT;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// A base on a slice together with its span (domain of dependence).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diamond {
    pub base: Bits,
    pub span: Bits,
}

impl Diamond {
    pub fn over(c: &Causet, base: Bits) -> Result<Diamond, CausetError> {
        check_antichain(c, &base)?;
        let span = domain_of_dependence(c, &base)?;
        Ok(Diamond { base, span })
    }
}

/// How diamond bases on a slice are enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiamondMode {
    /// Every nonempty base (slice must have at most
    /// [`EXHAUSTIVE_LIMIT`] members).
    Exhaustive,
    /// Singletons, coordinate balls when the causet is embedded, and
    /// random subsets, deterministically from the seed, up to `cap` bases.
    Sampled { seed: u64, cap: usize },
}

/// The family of diamonds over bases drawn from a slice. Deterministic:
/// sorted by base and deduplicated.
pub fn diamonds_on_slice(
    c: &Causet,
    slice: &Bits,
    mode: DiamondMode,
) -> Result<Vec<Diamond>, CausetError> {
    check_antichain(c, slice)?;
    let members = slice.ids();
    let mut bases: Vec<Bits> = Vec::new();
    match mode {
        DiamondMode::Exhaustive => {
            assert!(
                members.len() <= EXHAUSTIVE_LIMIT,
                "exhaustive diamond enumeration is capped at {EXHAUSTIVE_LIMIT} slice members"
            );
            for mask in 1u64..(1u64 << members.len()) {
                let ids: Vec<usize> = members
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &i)| i)
                    .collect();
                bases.push(Bits::from_ids(c.n(), &ids));
            }
        }
        DiamondMode::Sampled { seed, cap } => {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            for &i in &members {
                bases.push(Bits::from_ids(c.n(), &[i]));
            }
            // Coordinate balls: the k nearest slice members around a
            // center, for a few k per center.
            if c.coords().is_some() {
                for &center in &members {
                    let ec = c.coord(center)?;
                    let mut by_dist: Vec<usize> = members.clone();
                    by_dist.sort_by(|&a, &b| {
                        let da = continuum::spatial_dist(&c.coord(a).unwrap().x, &ec.x);
                        let db = continuum::spatial_dist(&c.coord(b).unwrap().x, &ec.x);
                        da.total_cmp(&db).then(a.cmp(&b))
                    });
                    let mut k = 2usize;
                    while k <= by_dist.len() {
                        bases.push(Bits::from_ids(c.n(), &by_dist[..k]));
                        k *= 2;
                    }
                }
            }
            // Random subsets fill the remainder.
            let want = cap.max(bases.len());
            while bases.len() < want + 8 {
                let mut ids = Vec::new();
                for &i in &members {
                    if rng.random_range(0..3u8) == 0 {
                        ids.push(i);
                    }
                }
                if !ids.is_empty() {
                    bases.push(Bits::from_ids(c.n(), &ids));
                }
            }
        }
    }
    bases.sort();
    bases.dedup();
    if let DiamondMode::Sampled { cap, .. } = mode {
        bases.truncate(cap);
    }
    bases.into_iter().map(|b| Diamond::over(c, b)).collect()
}

/// Grows a region by `steps` covering-relation hops (both directions).
pub fn dilate(c: &Causet, r: &Bits, steps: usize) -> Result<Bits, CausetError> {
    if r.capacity() != c.n() {
        return Err(CausetError::SizeMismatch(r.capacity(), c.n()));
    }
    let mut out = r.clone();
    for _ in 0..steps {
        let mut next = out.clone();
        for i in out.iter() {
            next.union_with_words(c.hasse().row(i));
            next.union_with_words(c.hasse_past().row(i));
        }
        out = next;
    }
    Ok(out)
}

/// Why no strictly intermediate diamond exists.
#[derive(Debug, Clone)]
pub struct NoInterpolant {
    /// Outer-base elements missing from the inner base (at most one, or
    /// the bases coincide).
    pub free_elements: Vec<usize>,
    /// The only candidate span strictly above the inner one, when the gap
    /// is a single element — it coincides with the outer span, so it fails
    /// strict nesting at the top.
    pub nearest: Option<Diamond>,
    pub candidates_tried: usize,
}

#[derive(Debug, Clone)]
pub enum Interpolation {
    Found(Diamond),
    None(NoInterpolant),
}

/// Finds a diamond strictly between two nested diamonds over the same
/// slice, if one exists.
///
/// Since spans meet the slice exactly in their bases, any qualifying
/// candidate base sits strictly between the two given bases, and minimal
/// spans come from single-element extensions of the inner base. The
/// smallest qualifying span is returned; ties break toward the
/// lexicographically smallest base.
pub fn interpolate_diamond(
    c: &Causet,
    inner: &Diamond,
    outer: &Diamond,
) -> Result<Interpolation, CausetError> {
    if inner.base.capacity() != c.n() || outer.base.capacity() != c.n() {
        return Err(CausetError::SizeMismatch(
            inner.base.capacity(),
            outer.base.capacity(),
        ));
    }
    if !inner.base.is_subset(&outer.base) {
        // Nested spans over one slice force nested bases; refuse anything
        // else as a malformed question.
        let i = inner
            .base
            .iter()
            .find(|i| !outer.base.contains(*i))
            .expect("non-subset has a witness");
        return Err(CausetError::BadElement(i));
    }
    let mut gap = outer.base.clone();
    gap.subtract(&inner.base);
    let free: Vec<usize> = gap.ids();
    if free.len() < 2 {
        let nearest = if free.len() == 1 {
            Some(outer.clone())
        } else {
            None
        };
        return Ok(Interpolation::None(NoInterpolant {
            free_elements: free.clone(),
            nearest,
            candidates_tried: free.len(),
        }));
    }
    let mut best: Option<Diamond> = None;
    for &g in &free {
        let mut base = inner.base.clone();
        base.insert(g);
        let d = Diamond::over(c, base)?;
        debug_assert!(inner.span.is_subset(&d.span) && d.span.is_subset(&outer.span));
        let better = match &best {
            None => true,
            Some(b) => {
                let (ls, lb) = (d.span.len(), b.span.len());
                ls < lb || (ls == lb && d.base < b.base)
            }
        };
        if better {
            best = Some(d);
        }
    }
    Ok(Interpolation::Found(best.expect("gap has at least two candidates")))
}
