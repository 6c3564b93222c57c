//! Faces as bitsets over the arc universe of one polygon.

use std::fmt;

/// Largest arc universe a [`Face`] can index.
pub const MAX_ARCS: usize = 128;

/// A set of arc indices. Bit `i` stands for the `i`-th arc of the owning
/// polygon's canonical arc list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Face(u128);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_bits(bits: u128) -> Self {
        Face(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        Face(1u128 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Face(indices.into_iter().fold(0u128, |acc, i| acc | (1u128 << i)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(self, i: usize) -> Self {
        Face(self.0 | (1u128 << i))
    }

    pub fn remove(self, i: usize) -> Self {
        Face(self.0 & !(1u128 << i))
    }

    pub fn union(self, other: Face) -> Self {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Self {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Self {
        Face(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    /// Indices in increasing order.
    pub fn iter(self) -> FaceIter {
        FaceIter(self.0)
    }

    /// Sorted index list, the canonical comparison key for faces.
    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of `self`, the empty set included.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut next = Some(full);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 {
                None
            } else {
                Some((cur - 1) & full)
            };
            Some(Face(cur))
        })
    }
}

pub struct FaceIter(u128);

impl Iterator for FaceIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Orders faces by their sorted index lists.
pub fn canonical_cmp(a: &Face, b: &Face) -> std::cmp::Ordering {
    a.iter().cmp(b.iter())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_operations() {
        let a = Face::from_indices([0, 3, 5]);
        let b = Face::from_indices([3, 5, 100]);
        assert_eq!(a.intersection(b).indices(), vec![3, 5]);
        assert_eq!(a.union(b).len(), 4);
        assert!(Face::from_indices([3]).is_subset(a));
        assert!(!b.is_subset(a));
        assert_eq!(a.remove(3).indices(), vec![0, 5]);
        assert!(b.contains(100));
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let a = Face::from_indices([1, 2, 7]);
        let mut subs: Vec<_> = a.subsets().map(|f| f.indices()).collect();
        subs.sort();
        assert_eq!(subs.len(), 8);
        assert!(subs.contains(&vec![]));
        assert!(subs.contains(&vec![1, 2, 7]));
    }

    #[test]
    fn canonical_order_is_lexicographic_on_indices() {
        let a = Face::from_indices([0, 5]);
        let b = Face::from_indices([1, 2]);
        assert_eq!(canonical_cmp(&a, &b), std::cmp::Ordering::Less);
    }
}
