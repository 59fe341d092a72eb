use core::cmp::Ordering;
use core::fmt;

use fixedbitset::FixedBitSet;

use crate::abelian_group::Element;

/// A subset of a finite abelian group, stored as a dense membership set over
/// element indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GSubset {
    bits: FixedBitSet,
}

impl GSubset {
    pub fn empty(universe: usize) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        Self { bits }
    }

    /// Builds a set from element indices. Indices outside the universe are ignored.
    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Self {
        let mut set = Self::empty(universe);
        for i in indices {
            if i < universe {
                set.bits.insert(i);
            }
        }
        set
    }

    pub fn from_elements<I: IntoIterator<Item = Element>>(universe: usize, elements: I) -> Self {
        Self::from_indices(universe, elements.into_iter().map(Element::index))
    }

    /// Bit `i` of `mask` is membership of element `i`. Requires `universe <= 64`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        debug_assert!(universe <= 64);
        Self::from_indices(universe, (0..universe).filter(|&i| mask >> i & 1 == 1))
    }

    pub fn to_mask(&self) -> u64 {
        debug_assert!(self.universe() <= 64);
        self.indices().fold(0, |m, i| m | 1 << i)
    }

    /// Size of the ambient group.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.bits.is_full()
    }

    pub fn contains(&self, e: Element) -> bool {
        self.bits.contains(e.index())
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.bits.contains(i)
    }

    pub fn insert(&mut self, e: Element) {
        self.bits.insert(e.index());
    }

    pub fn remove(&mut self, e: Element) {
        self.bits.remove(e.index());
    }

    /// Members in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.bits.ones().map(Element::from_index_unchecked)
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn first(&self) -> Option<Element> {
        self.bits.minimum().map(Element::from_index_unchecked)
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.bits.union_with(&other.bits);
        out
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.bits.intersect_with(&other.bits);
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.bits.difference_with(&other.bits);
        out
    }

    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        out.bits.toggle_range(..);
        out
    }

    pub fn union_with(&mut self, other: &Self) {
        self.bits.union_with(&other.bits);
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    /// Lexicographic comparison of the ascending member lists.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.indices().cmp(other.indices())
    }

    pub(crate) fn bits(&self) -> &FixedBitSet {
        &self.bits
    }
}

impl fmt::Debug for GSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.indices()).finish()
    }
}
