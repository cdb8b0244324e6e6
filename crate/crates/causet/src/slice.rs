//! Cauchy-slice generation for embedded causets.
//!
//! A greedy sweep ordered by distance from a target time always yields a
//! maximal antichain, but a maximal antichain need not determine the whole
//! causet (a covering chain can dodge it). The generator therefore checks
//! the domain of dependence and retries from nearby target times on a
//! deterministic schedule before giving up.

use crate::bitmat::Bits;
use crate::causet::Causet;
use crate::dod::{domain_of_dependence, is_cauchy_slice};
use crate::error::CausetError;

/// Greedy maximal antichain built by sweeping elements in ascending
/// `key(i)`, with ties broken by the lower element id (the sweep order is
/// total, so the result is fully deterministic).
fn greedy_antichain(c: &Causet, key: impl Fn(usize) -> f64) -> Bits {
    let mut idx: Vec<usize> = (0..c.n()).collect();
    idx.sort_by(|&a, &b| key(a).total_cmp(&key(b)).then(a.cmp(&b)));
    let mut chosen = Bits::new(c.n());
    for i in idx {
        if !chosen.intersects_words(c.order().row(i))
            && !chosen.intersects_words(c.past_matrix().row(i))
        {
            chosen.insert(i);
        }
    }
    chosen
}

/// A maximal antichain near coordinate time `t0`, guaranteed to be a
/// Cauchy slice. Retries a deterministic ladder of nearby target times
/// when the greedy antichain at `t0` fails to determine everything.
pub fn cauchy_slice_near(c: &Causet, t0: f64) -> Result<Bits, CausetError> {
    if c.n() == 0 {
        return Ok(Bits::new(0));
    }
    let times: Vec<f64> = (0..c.n())
        .map(|i| c.coord(i).map(|e| e.t))
        .collect::<Result<_, _>>()?;
    let span = times.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
        - times.iter().cloned().fold(f64::INFINITY, f64::min);
    let step = if span > 0.0 { span / 16.0 } else { 1.0 };
    let mut tried = 0;
    for k in 0..=8i64 {
        for sign in [1.0, -1.0] {
            if k == 0 && sign < 0.0 {
                continue;
            }
            let target = t0 + sign * k as f64 * step;
            let slice = greedy_antichain(c, |i| (times[i] - target).abs());
            tried += 1;
            if is_cauchy_slice(c, &slice)? {
                return Ok(slice);
            }
        }
    }
    Err(CausetError::NoCauchySlice { tried })
}

/// Outcome of anchoring a maximal antichain at one element.
#[derive(Debug, Clone)]
pub struct AnchoredSlice {
    pub members: Bits,
    /// Whether the antichain is also a Cauchy slice.
    pub cauchy: bool,
}

/// The maximal antichain through element `anchor`, grown greedily outward.
///
/// Candidates are ranked by coordinate-time distance from the anchor's
/// time, ties by lower id; the anchor itself sorts first, so it is always
/// a member. The result is always a maximal antichain; whether it is
/// Cauchy is reported rather than required, because an anchored slice may
/// legitimately fail to determine everything.
pub fn slice_through_point(c: &Causet, anchor: usize) -> Result<AnchoredSlice, CausetError> {
    if anchor >= c.n() {
        return Err(CausetError::BadElement(anchor));
    }
    let t_anchor = c.coord(anchor)?.t;
    let members = greedy_antichain(c, |i| {
        if i == anchor {
            f64::NEG_INFINITY
        } else {
            (c.coord(i).map(|e| e.t).unwrap_or(f64::INFINITY) - t_anchor).abs()
        }
    });
    debug_assert!(members.contains(anchor));
    let cauchy = domain_of_dependence(c, &members)?.len() == c.n();
    Ok(AnchoredSlice { members, cauchy })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dod::{check_antichain, is_maximal_antichain};
    use continuum::{Event, SpacetimeModel, Window};

    fn sprinkled(seed: u64) -> Causet {
        let m = SpacetimeModel::minkowski(1, Window::symmetric(1, 3.0).unwrap()).unwrap();
        Causet::sprinkle(&m, 6.0, seed).unwrap()
    }

    #[test]
    fn generated_slices_are_cauchy_antichains() {
        for seed in [1u64, 2, 3, 4, 5] {
            let c = sprinkled(seed);
            let s = cauchy_slice_near(&c, 0.0).unwrap();
            assert!(is_cauchy_slice(&c, &s).unwrap());
            assert!(is_maximal_antichain(&c, &s).unwrap());
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let a = cauchy_slice_near(&sprinkled(9), 0.5).unwrap();
        let b = cauchy_slice_near(&sprinkled(9), 0.5).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn anchored_slice_contains_its_anchor_and_is_maximal() {
        let c = sprinkled(17);
        for anchor in 0..c.n().min(10) {
            let s = slice_through_point(&c, anchor).unwrap();
            assert!(s.members.contains(anchor));
            check_antichain(&c, &s.members).unwrap();
            assert!(is_maximal_antichain(&c, &s.members).unwrap());
        }
    }

    #[test]
    fn anchored_slice_reports_cauchy_failures_honestly() {
        // A fence (0 -> 1 <- 2 -> 3) embedded so the greedy sweep from
        // anchor 0 picks 3 before 2, producing the maximal antichain
        // {0, 3} that the covering chain 2 -> 1 dodges.
        let m = SpacetimeModel::minkowski(1, Window::symmetric(1, 10.0).unwrap()).unwrap();
        let events = vec![
            Event::new(0.0, &[0.0]),
            Event::new(1.0, &[0.5]),
            Event::new(-2.5, &[3.0]),
            Event::new(0.1, &[4.2]),
        ];
        let c = Causet::from_events(&m, &events).unwrap();
        assert!(c.precedes(0, 1) && c.precedes(2, 1) && c.precedes(2, 3));
        assert!(!c.related(0, 3) && !c.related(1, 3) && !c.related(0, 2));
        let s = slice_through_point(&c, 0).unwrap();
        assert_eq!(s.members.ids(), vec![0, 3]);
        assert!(is_maximal_antichain(&c, &s.members).unwrap());
        assert!(!s.cauchy);
    }
}
