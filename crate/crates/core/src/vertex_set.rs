//! Fixed-universe bitset over vertex identifiers `0..n`.

use std::fmt;

const WORD: usize = 64;

/// A set of vertices drawn from a fixed universe `0..capacity`.
///
/// Two sets compare equal only when they share the same universe size and
/// the same members.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    capacity: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(capacity: usize) -> Self {
        Self {
            capacity,
            words: vec![0; capacity.div_ceil(WORD)],
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut set = Self::empty(capacity);
        for (i, w) in set.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let bits = (capacity - lo).min(WORD);
            *w = if bits == WORD { u64::MAX } else { (1u64 << bits) - 1 };
        }
        set
    }

    /// Builds a set from vertex identifiers. Panics if any identifier is out
    /// of range.
    pub fn from_iter_in<I: IntoIterator<Item = usize>>(capacity: usize, items: I) -> Self {
        let mut set = Self::empty(capacity);
        for v in items {
            set.insert(v);
        }
        set
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.capacity && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Inserts `v`, returning `true` if it was not already present.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.capacity, "vertex {v} outside universe 0..{}", self.capacity);
        let word = &mut self.words[v / WORD];
        let bit = 1u64 << (v % WORD);
        let fresh = *word & bit == 0;
        *word |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.capacity {
            return false;
        }
        let word = &mut self.words[v / WORD];
        let bit = 1u64 << (v % WORD);
        let present = *word & bit != 0;
        *word &= !bit;
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.capacity
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !*b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Number of members of `self` not in `other`.
    pub fn difference_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// 1-based member list, the convention used by every external surface.
    pub fn to_one_based(&self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Lexicographic order on the ascending member lists.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter()
            .cmp(other.iter())
            .then(self.capacity.cmp(&other.capacity))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
