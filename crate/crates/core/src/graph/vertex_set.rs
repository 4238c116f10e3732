use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{GraphError, MAX_ORDER};

/// A set of vertex ids packed into one machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., order - 1}`.
    #[inline]
    pub const fn full(order: usize) -> Self {
        if order >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << order) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Complement relative to `{0, ..., order - 1}`.
    #[inline]
    pub const fn complement(self, order: usize) -> Self {
        VertexSet(!self.0 & VertexSet::full(order).0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest element, if any.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Largest element plus one, or 0 for the empty set.
    #[inline]
    pub const fn bound(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Shift every id up by `offset`. Bits shifted past the word are lost,
    /// so callers check capacity first.
    #[inline]
    pub const fn shifted(self, offset: usize) -> Self {
        if offset >= 64 {
            VertexSet(0)
        } else {
            VertexSet(self.0 << offset)
        }
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Build from ids, rejecting any id `>= order`.
    pub fn from_ids<I: IntoIterator<Item = usize>>(ids: I, order: usize) -> Result<Self, GraphError> {
        let mut set = VertexSet::EMPTY;
        for v in ids {
            if v >= order {
                return Err(GraphError::VertexOutOfRange { vertex: v, order });
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// Parse the sidecar format: sorted comma-separated ids, empty string for
    /// the empty set.
    pub fn parse_ids(text: &str, order: usize) -> Result<Self, GraphError> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(VertexSet::EMPTY);
        }
        let mut ids = Vec::new();
        for (i, part) in text.split(',').enumerate() {
            let id: usize = part.trim().parse().map_err(|_| GraphError::Parse {
                offset: i,
                message: format!("invalid vertex id {:?}", part.trim()),
            })?;
            ids.push(id);
        }
        VertexSet::from_ids(ids, order)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over the ids of a [`VertexSet`].
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for VertexSet {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        VertexSet::parse_ids(s, MAX_ORDER)
    }
}

// Serialized as a sorted array of ids.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let ids = Vec::<usize>::deserialize(deserializer)?;
        VertexSet::from_ids(ids, MAX_ORDER).map_err(serde::de::Error::custom)
    }
}
