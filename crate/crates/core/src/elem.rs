//! Dense element identifiers and bitset-backed element sets.

use std::fmt;

use fixedbitset::FixedBitSet;

/// Index of an element inside one lattice. Only meaningful relative to the
/// lattice that produced it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(u32);

impl Elem {
    #[inline]
    pub fn new(index: usize) -> Self {
        Elem(u32::try_from(index).expect("element index exceeds u32"))
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A subset of the elements of a lattice of fixed size.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    bits: FixedBitSet,
}

impl ElemSet {
    pub fn empty(universe: usize) -> Self {
        ElemSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        ElemSet { bits }
    }

    pub fn from_elems(universe: usize, elems: impl IntoIterator<Item = Elem>) -> Self {
        let mut set = Self::empty(universe);
        for e in elems {
            set.insert(e);
        }
        set
    }

    /// Size of the ambient element universe (not the number of members).
    #[inline]
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        self.bits.contains(e.index())
    }

    /// Inserts `e`, returning `true` if it was not already present.
    #[inline]
    pub fn insert(&mut self, e: Elem) -> bool {
        !self.bits.put(e.index())
    }

    #[inline]
    pub fn remove(&mut self, e: Elem) {
        self.bits.set(e.index(), false);
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.bits.ones().map(Elem::new)
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &ElemSet) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn intersection_count(&self, other: &ElemSet) -> usize {
        self.bits.intersection_count(&other.bits)
    }

    /// Ordering used for deterministic listings: by size, then by the sorted
    /// member indices compared lexicographically.
    pub fn canonical_cmp(&self, other: &ElemSet) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.bits.ones()).finish()
    }
}
