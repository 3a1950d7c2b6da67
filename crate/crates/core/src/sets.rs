//! Fixed-domain bit sets used for extents, intents and carrier subsets.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::marker::PhantomData;

const WORD_BITS: usize = u64::BITS as usize;

/// Marker for sets of object indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Objects {}

/// Marker for sets of attribute indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Attributes {}

/// Marker for subsets of a probability-space carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Points {}

pub type ObjectSet = IndexSet<Objects>;
pub type AttributeSet = IndexSet<Attributes>;
pub type CarrierSet = IndexSet<Points>;

/// A subset of `0..domain`, stored as a dense bit vector.
///
/// The type parameter only tags what the indices refer to; two sets with
/// different domains never compare equal.
pub struct IndexSet<K> {
    domain: usize,
    words: Vec<u64>,
    _kind: PhantomData<fn() -> K>,
}

impl<K> IndexSet<K> {
    pub fn empty(domain: usize) -> Self {
        Self {
            domain,
            words: vec![0; domain.div_ceil(WORD_BITS)],
            _kind: PhantomData,
        }
    }

    pub fn full(domain: usize) -> Self {
        let mut set = Self::empty(domain);
        for (i, word) in set.words.iter_mut().enumerate() {
            let remaining = domain - i * WORD_BITS;
            *word = if remaining >= WORD_BITS {
                u64::MAX
            } else {
                (1u64 << remaining) - 1
            };
        }
        set
    }

    /// Builds a set from indices. Panics if an index is out of the domain.
    pub fn from_indices<I: IntoIterator<Item = usize>>(domain: usize, indices: I) -> Self {
        let mut set = Self::empty(domain);
        for i in indices {
            set.insert(i);
        }
        set
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.domain && self.words[index / WORD_BITS] & (1 << (index % WORD_BITS)) != 0
    }

    pub fn insert(&mut self, index: usize) -> bool {
        assert!(
            index < self.domain,
            "index {index} out of domain {}",
            self.domain
        );
        let word = &mut self.words[index / WORD_BITS];
        let mask = 1 << (index % WORD_BITS);
        let fresh = *word & mask == 0;
        *word |= mask;
        fresh
    }

    pub fn remove(&mut self, index: usize) -> bool {
        if index >= self.domain {
            return false;
        }
        let word = &mut self.words[index / WORD_BITS];
        let mask = 1 << (index % WORD_BITS);
        let present = *word & mask != 0;
        *word &= !mask;
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Indices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.domain).filter(move |&i| self.contains(i))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_domain(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_domain(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        Self::full(self.domain).difference(self)
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_domain(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// Compares the ascending index lists lexicographically.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }

    /// Reinterprets the indices under a different marker.
    pub fn retag<L>(&self) -> IndexSet<L> {
        IndexSet {
            domain: self.domain,
            words: self.words.clone(),
            _kind: PhantomData,
        }
    }

    /// Copies the set into a larger (or equal) domain.
    pub fn widen(&self, domain: usize) -> Self {
        assert!(domain >= self.domain);
        Self::from_indices(domain, self.iter())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        self.check_domain(other);
        Self {
            domain: self.domain,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
            _kind: PhantomData,
        }
    }

    fn check_domain(&self, other: &Self) {
        assert_eq!(
            self.domain, other.domain,
            "index sets over different domains"
        );
    }
}

impl<K> Clone for IndexSet<K> {
    fn clone(&self) -> Self {
        Self {
            domain: self.domain,
            words: self.words.clone(),
            _kind: PhantomData,
        }
    }
}

impl<K> PartialEq for IndexSet<K> {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain && self.words == other.words
    }
}

impl<K> Eq for IndexSet<K> {}

impl<K> Hash for IndexSet<K> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.domain.hash(state);
        self.words.hash(state);
    }
}

impl<K> fmt::Debug for IndexSet<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_complement_respect_domain() {
        for domain in [0, 1, 63, 64, 65, 130] {
            let full = CarrierSet::full(domain);
            assert_eq!(full.len(), domain);
            assert!(full.complement().is_empty());
            assert_eq!(CarrierSet::empty(domain).complement(), full);
        }
    }

    #[test]
    fn set_algebra() {
        let a = ObjectSet::from_indices(70, [0, 3, 66]);
        let b = ObjectSet::from_indices(70, [3, 5, 66, 69]);
        assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), vec![3, 66]);
        assert_eq!(a.union(&b).len(), 5);
        assert_eq!(a.difference(&b).iter().collect::<Vec<_>>(), vec![0]);
        assert!(a.intersection(&b).is_subset(&a));
        assert!(!a.is_subset(&b));
        assert!(a.difference(&b).is_disjoint(&b));
    }

    #[test]
    fn lexicographic_order() {
        let ab = ObjectSet::from_indices(3, [0, 1]);
        let bc = ObjectSet::from_indices(3, [1, 2]);
        let a = ObjectSet::from_indices(3, [0]);
        assert_eq!(ab.lex_cmp(&bc), Ordering::Less);
        assert_eq!(a.lex_cmp(&ab), Ordering::Less);
        assert_eq!(bc.lex_cmp(&bc), Ordering::Equal);
    }
}
