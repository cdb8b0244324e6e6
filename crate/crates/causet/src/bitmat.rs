//! Dense bit-packed sets and square bit matrices.
//!
//! Causal relations on a few thousand elements are dense enough that
//! bit-packed rows beat adjacency lists for the closure, reduction, and
//! reachability sweeps this crate runs constantly; 64-way word parallelism
//! keeps the n^3 closure comfortably fast at the sizes the verification
//! suites use.

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// Fixed-capacity bit set over element ids `0..n`. Trailing bits of the
/// last word are always kept zero, so whole-word comparisons are exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bits {
    n: usize,
    words: Vec<u64>,
}

impl Bits {
    pub fn new(n: usize) -> Self {
        Bits { n, words: vec![0; words_for(n)] }
    }

    pub fn from_ids(n: usize, ids: &[usize]) -> Self {
        let mut b = Bits::new(n);
        for &i in ids {
            b.insert(i);
        }
        b
    }

    pub fn full(n: usize) -> Self {
        let mut b = Bits::new(n);
        for w in &mut b.words {
            *w = u64::MAX;
        }
        b.mask_tail();
        b
    }

    fn mask_tail(&mut self) {
        let extra = self.words.len() * WORD - self.n;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= u64::MAX >> extra;
            }
        }
    }

    pub fn capacity(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.n);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.n);
        self.words[i / WORD] &= !(1 << (i % WORD));
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.n);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn complement(&self) -> Bits {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        out.mask_tail();
        out
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn intersects_words(&self, row: &[u64]) -> bool {
        self.words.iter().zip(row).any(|(a, b)| a & b != 0)
    }

    pub fn union_with_words(&mut self, row: &[u64]) {
        for (a, b) in self.words.iter_mut().zip(row) {
            *a |= b;
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * WORD + b)
                }
            })
        })
    }

    pub fn ids(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Square bit matrix with row-major packed storage; `get(i, j)` reads the
/// j-th bit of row i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    n: usize,
    w: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let w = words_for(n);
        BitMatrix { n, w, bits: vec![0; n * w] }
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut m = BitMatrix::new(n);
        for &(i, j) in pairs {
            m.set(i, j);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, i: usize, j: usize) {
        debug_assert!(i < self.n && j < self.n);
        self.bits[i * self.w + j / WORD] |= 1 << (j % WORD);
    }

    pub fn clear(&mut self, i: usize, j: usize) {
        self.bits[i * self.w + j / WORD] &= !(1 << (j % WORD));
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.n && j < self.n);
        self.bits[i * self.w + j / WORD] >> (j % WORD) & 1 == 1
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.w..(i + 1) * self.w]
    }

    pub fn row_bits(&self, i: usize) -> Bits {
        Bits { n: self.n, words: self.row(i).to_vec() }
    }

    pub fn row_iter(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * WORD + b)
                }
            })
        })
    }

    pub fn row_count(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Reachability closure in place (Warshall with word-parallel row OR).
    pub fn transitive_close(&mut self) {
        for k in 0..self.n {
            let (kw, kb) = (k / WORD, k % WORD);
            for i in 0..self.n {
                if i == k {
                    continue;
                }
                if self.bits[i * self.w + kw] >> kb & 1 == 1 {
                    let (ir, kr) = (i * self.w, k * self.w);
                    for t in 0..self.w {
                        let v = self.bits[kr + t];
                        self.bits[ir + t] |= v;
                    }
                }
            }
        }
    }

    /// Whether any diagonal bit is set (a reachability closure with a set
    /// diagonal certifies a cycle through that element).
    pub fn first_diagonal(&self) -> Option<usize> {
        (0..self.n).find(|&i| self.get(i, i))
    }

    /// Covering relation of a transitively closed, irreflexive relation:
    /// keeps `i -> j` only when no `k` has `i -> k -> j`.
    pub fn transitive_reduce(&self) -> BitMatrix {
        let mut out = self.clone();
        let mut composite = vec![0u64; self.w];
        for i in 0..self.n {
            composite.iter_mut().for_each(|w| *w = 0);
            for k in self.row_iter(i) {
                let kr = k * self.w;
                for t in 0..self.w {
                    composite[t] |= self.bits[kr + t];
                }
            }
            let ir = i * self.w;
            for t in 0..self.w {
                out.bits[ir + t] &= !composite[t];
            }
        }
        out
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::new(self.n);
        for i in 0..self.n {
            for j in self.row_iter(i) {
                out.set(j, i);
            }
        }
        out
    }
}
