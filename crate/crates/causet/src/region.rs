//! Regions of a causal set and order-convexity.
//!
//! A region is order-convex when it contains every element lying causally
//! between two of its members. Causal intervals `I(x, y)` (the future of
//! `x` intersected with the past of `y`) are the basic convex sets;
//! intersections of convex sets are convex, which is how the sampled
//! family generator produces variety beyond intervals.

use crate::bitmat::Bits;
use crate::causet::Causet;
use crate::error::CausetError;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// The reflexive causal interval between two elements: empty unless
/// `x` precedes `y` (or they coincide).
pub fn interval_region(c: &Causet, x: usize, y: usize) -> Result<Bits, CausetError> {
    if x >= c.n() {
        return Err(CausetError::BadElement(x));
    }
    if y >= c.n() {
        return Err(CausetError::BadElement(y));
    }
    let mut fut = c.order().row_bits(x);
    fut.insert(x);
    let mut pst = c.past_matrix().row_bits(y);
    pst.insert(y);
    fut.intersect_with(&pst);
    Ok(fut)
}

/// Whether the region contains every element between two of its members.
pub fn is_convex(c: &Causet, r: &Bits) -> Result<bool, CausetError> {
    Ok(first_convexity_gap(c, r)?.is_none())
}

/// A witness element strictly between two members but outside the region,
/// if one exists.
pub fn first_convexity_gap(
    c: &Causet,
    r: &Bits,
) -> Result<Option<(usize, usize, usize)>, CausetError> {
    if r.capacity() != c.n() {
        return Err(CausetError::SizeMismatch(r.capacity(), c.n()));
    }
    for x in r.iter() {
        // Elements strictly above x that are below some member of r.
        for z in c.order().row_iter(x) {
            if r.contains(z) {
                continue;
            }
            if let Some(y) = c.order().row_iter(z).find(|y| r.contains(*y)) {
                return Ok(Some((x, z, y)));
            }
        }
    }
    Ok(None)
}

/// Whether no element of `a` is causally related (or equal) to an element
/// of `b`.
pub fn causally_disjoint(c: &Causet, a: &Bits, b: &Bits) -> Result<bool, CausetError> {
    if a.capacity() != c.n() || b.capacity() != c.n() {
        return Err(CausetError::SizeMismatch(a.capacity(), b.capacity()));
    }
    if a.intersects(b) {
        return Ok(false);
    }
    for i in a.iter() {
        if b.intersects_words(c.order().row(i)) || b.intersects_words(c.past_matrix().row(i)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All elements spacelike to `i` (the complement of its reflexive causal
/// hull).
pub fn spacelike_complement(c: &Causet, i: usize) -> Result<Bits, CausetError> {
    if i >= c.n() {
        return Err(CausetError::BadElement(i));
    }
    let mut hull = c.order().row_bits(i);
    hull.union_with(&c.past_matrix().row_bits(i));
    hull.insert(i);
    Ok(hull.complement())
}

/// How a convex family is generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyMode {
    /// Every convex subset (feasible only for small causets).
    Exhaustive,
    /// Intervals, their pairwise intersections, and random convex sets, up
    /// to a size cap, drawn deterministically from a seed.
    Sampled { seed: u64, cap: usize },
}

/// Upper bound on the causet size for exhaustive family enumeration.
pub const EXHAUSTIVE_LIMIT: usize = 12;

/// Deterministic family of order-convex regions (the empty region is
/// excluded; the full region appears when convex, which it always is).
/// The family is sorted and deduplicated so equal inputs give identical
/// output.
pub fn convex_region_family(c: &Causet, mode: FamilyMode) -> Result<Vec<Bits>, CausetError> {
    let n = c.n();
    let mut fam: Vec<Bits> = Vec::new();
    match mode {
        FamilyMode::Exhaustive => {
            assert!(
                n <= EXHAUSTIVE_LIMIT,
                "exhaustive enumeration is capped at {EXHAUSTIVE_LIMIT} elements"
            );
            for mask in 1u64..(1u64 << n) {
                let ids: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                let r = Bits::from_ids(n, &ids);
                if is_convex(c, &r)? {
                    fam.push(r);
                }
            }
        }
        FamilyMode::Sampled { seed, cap } => {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            // All singleton regions (always convex) for small n, sampled
            // otherwise.
            for i in 0..n.min(cap) {
                fam.push(Bits::from_ids(n, &[i]));
            }
            // Random intervals.
            let budget = cap.max(16);
            for _ in 0..budget {
                let x = rng.random_range(0..n);
                let y = rng.random_range(0..n);
                let (x, y) = if c.precedes(y, x) { (y, x) } else { (x, y) };
                let r = interval_region(c, x, y)?;
                if !r.is_empty() {
                    fam.push(r);
                }
            }
            // Intersections of sampled intervals stay convex and produce
            // shapes intervals alone cannot.
            for _ in 0..budget / 2 {
                if fam.len() < 2 {
                    break;
                }
                let a = rng.random_range(0..fam.len());
                let b = rng.random_range(0..fam.len());
                let mut r = fam[a].clone();
                r.intersect_with(&fam[b]);
                if !r.is_empty() {
                    fam.push(r);
                }
            }
            // Order-convex hulls of small random seed sets: the union of
            // all pairwise intervals is convex by transitivity.
            for _ in 0..budget / 2 {
                let k = rng.random_range(1..=3usize);
                let ids: Vec<usize> = (0..k).map(|_| rng.random_range(0..n)).collect();
                let mut hull = Bits::from_ids(n, &ids);
                for &x in &ids {
                    for &y in &ids {
                        if c.precedes(x, y) {
                            hull.union_with(&interval_region(c, x, y)?);
                        }
                    }
                }
                fam.push(hull);
            }
        }
    }
    fam.sort();
    fam.dedup();
    if let FamilyMode::Sampled { cap, .. } = mode {
        fam.truncate(cap);
    }
    Ok(fam)
}
