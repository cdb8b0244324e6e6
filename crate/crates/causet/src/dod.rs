//! Causal cones and the discrete domain of dependence.
//!
//! The future domain of dependence of a set `S` is computed by dynamic
//! programming over a topological order: an element outside `S` belongs to
//! `D+(S)` exactly when it has at least one covering predecessor and every
//! covering predecessor already belongs to `D+(S)` — i.e. every past-
//! directed causal path from it is forced into `S`. The past version is the
//! dual over covering successors.

use crate::bitmat::Bits;
use crate::causet::Causet;
use crate::error::CausetError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Closure {
    /// The cone without the element itself.
    Strict,
    /// The cone including the element itself.
    Reflexive,
}

/// Strict or reflexive causal future of one element.
pub fn future(c: &Causet, i: usize, closure: Closure) -> Result<Bits, CausetError> {
    if i >= c.n() {
        return Err(CausetError::BadElement(i));
    }
    let mut out = c.order().row_bits(i);
    if closure == Closure::Reflexive {
        out.insert(i);
    }
    Ok(out)
}

/// Strict or reflexive causal past of one element.
pub fn past(c: &Causet, i: usize, closure: Closure) -> Result<Bits, CausetError> {
    if i >= c.n() {
        return Err(CausetError::BadElement(i));
    }
    let mut out = c.past_matrix().row_bits(i);
    if closure == Closure::Reflexive {
        out.insert(i);
    }
    Ok(out)
}

/// Reflexive future of a whole set.
pub fn future_of_set(c: &Causet, s: &Bits) -> Result<Bits, CausetError> {
    check_capacity(c, s)?;
    let mut out = s.clone();
    for i in s.iter() {
        out.union_with_words(c.order().row(i));
    }
    Ok(out)
}

/// Reflexive past of a whole set.
pub fn past_of_set(c: &Causet, s: &Bits) -> Result<Bits, CausetError> {
    check_capacity(c, s)?;
    let mut out = s.clone();
    for i in s.iter() {
        out.union_with_words(c.past_matrix().row(i));
    }
    Ok(out)
}

/// Reflexive causal hull: past and future of the set together.
pub fn causal_hull(c: &Causet, s: &Bits) -> Result<Bits, CausetError> {
    let mut out = future_of_set(c, s)?;
    out.union_with(&past_of_set(c, s)?);
    Ok(out)
}

fn check_capacity(c: &Causet, s: &Bits) -> Result<(), CausetError> {
    if s.capacity() != c.n() {
        return Err(CausetError::SizeMismatch(s.capacity(), c.n()));
    }
    Ok(())
}

/// Future domain of dependence `D+(S)`.
pub fn future_domain(c: &Causet, s: &Bits) -> Result<Bits, CausetError> {
    check_capacity(c, s)?;
    let mut dom = s.clone();
    for i in c.topo_order() {
        if dom.contains(i) {
            continue;
        }
        let mut preds = c.hasse_past().row_iter(i).peekable();
        if preds.peek().is_some() && preds.all(|p| dom.contains(p)) {
            dom.insert(i);
        }
    }
    Ok(dom)
}

/// Past domain of dependence `D-(S)`.
pub fn past_domain(c: &Causet, s: &Bits) -> Result<Bits, CausetError> {
    check_capacity(c, s)?;
    let mut dom = s.clone();
    for i in c.topo_order().into_iter().rev() {
        if dom.contains(i) {
            continue;
        }
        let mut succs = c.hasse().row_iter(i).peekable();
        if succs.peek().is_some() && succs.all(|q| dom.contains(q)) {
            dom.insert(i);
        }
    }
    Ok(dom)
}

/// Full domain of dependence `D(S) = D+(S) ∪ D-(S)`.
pub fn domain_of_dependence(c: &Causet, s: &Bits) -> Result<Bits, CausetError> {
    let mut dom = future_domain(c, s)?;
    dom.union_with(&past_domain(c, s)?);
    Ok(dom)
}

/// Checks that `s` is an antichain; on failure names a related pair.
pub fn check_antichain(c: &Causet, s: &Bits) -> Result<(), CausetError> {
    check_capacity(c, s)?;
    for i in s.iter() {
        if s.intersects_words(c.order().row(i)) {
            let j = c
                .order()
                .row_iter(i)
                .find(|j| s.contains(*j))
                .expect("intersection witnessed above");
            return Err(CausetError::NotAntichain(i, j));
        }
    }
    Ok(())
}

/// Whether `s` is a Cauchy slice: an antichain whose domain of dependence
/// is the whole causet. A related pair inside `s` is an error (the
/// question is then malformed), an undetermined element is `Ok(false)`.
pub fn is_cauchy_slice(c: &Causet, s: &Bits) -> Result<bool, CausetError> {
    check_antichain(c, s)?;
    Ok(domain_of_dependence(c, s)?.len() == c.n())
}

/// Whether `s` is a maximal antichain: an antichain that cannot be
/// extended, i.e. every element outside is related to something inside.
pub fn is_maximal_antichain(c: &Causet, s: &Bits) -> Result<bool, CausetError> {
    check_antichain(c, s)?;
    for i in 0..c.n() {
        if s.contains(i) {
            continue;
        }
        let row_f = c.order().row(i);
        let row_p = c.past_matrix().row(i);
        if !s.intersects_words(row_f) && !s.intersects_words(row_p) {
            return Ok(false);
        }
    }
    Ok(true)
}
