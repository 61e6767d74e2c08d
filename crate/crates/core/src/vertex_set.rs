//! Small vertex sets stored as 128-bit masks.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// A set of vertex ids in `0..128`, backed by a single mask.
///
/// Vertex sets are the faces of a [`Complex`](crate::Complex) and the
/// neighborhoods of a [`Graph`](crate::Graph). They are `Copy`, so all set
/// operations return new values.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{v}`.
    pub fn singleton(v: usize) -> Self {
        assert!(v < 128, "vertex id {v} out of bitset range");
        VertexSet(1u128 << v)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= 128, "vertex count {n} out of bitset range");
        if n == 128 {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < 128, "vertex id {v} out of bitset range");
        self.0 |= 1u128 << v;
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < 128, "vertex id {v} out of bitset range");
        self.0 &= !(1u128 << v);
    }

    /// `self` with `v` removed, as a new value.
    pub fn without(self, v: usize) -> Self {
        let mut s = self;
        s.remove(v);
        s
    }

    /// `self` with `v` inserted, as a new value.
    pub fn with(self, v: usize) -> Self {
        let mut s = self;
        s.insert(v);
        s
    }

    pub fn contains(&self, v: usize) -> bool {
        v < 128 && self.0 & (1u128 << v) != 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// The unique element, if the set is a singleton.
    pub fn single_vertex(&self) -> Option<usize> {
        if self.0.count_ones() == 1 {
            Some(self.0.trailing_zeros() as usize)
        } else {
            None
        }
    }

    pub fn min_vertex(&self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Ascending iterator over the elements.
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic order on the ascending element sequences, so that
    /// `{0,2} < {0,3} < {1,3}` and a proper prefix sorts first.
    pub fn lex_cmp(&self, other: &VertexSet) -> Ordering {
        let mut a = self.0;
        let mut b = other.0;
        loop {
            if a == b {
                return Ordering::Equal;
            }
            if a == 0 {
                return Ordering::Less;
            }
            if b == 0 {
                return Ordering::Greater;
            }
            match a.trailing_zeros().cmp(&b.trailing_zeros()) {
                Ordering::Equal => {
                    a &= a - 1;
                    b &= b - 1;
                }
                unequal => return unequal,
            }
        }
    }

    pub(crate) fn mask(&self) -> u128 {
        self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Serializes as the ascending list of elements, e.g. `[0, 2]`.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_operations() {
        let a: VertexSet = [0, 2, 5].into_iter().collect();
        let b: VertexSet = [2, 3].into_iter().collect();
        assert_eq!((a | b).to_vec(), vec![0, 2, 3, 5]);
        assert_eq!((a & b).to_vec(), vec![2]);
        assert_eq!((a - b).to_vec(), vec![0, 5]);
        assert!(VertexSet::singleton(2).is_subset_of(&a));
        assert!(!b.is_subset_of(&a));
        assert_eq!(a.len(), 3);
        assert_eq!(VertexSet::full(3).to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn single_vertex() {
        assert_eq!(VertexSet::singleton(7).single_vertex(), Some(7));
        assert_eq!(VertexSet::EMPTY.single_vertex(), None);
        assert_eq!(VertexSet::full(2).single_vertex(), None);
    }

    #[test]
    fn lex_order_is_on_sorted_sequences() {
        let s = |vs: &[usize]| vs.iter().copied().collect::<VertexSet>();
        assert_eq!(s(&[0, 2]).lex_cmp(&s(&[0, 3])), Ordering::Less);
        assert_eq!(s(&[0, 3]).lex_cmp(&s(&[1, 3])), Ordering::Less);
        assert_eq!(s(&[0]).lex_cmp(&s(&[0, 2])), Ordering::Less);
        assert_eq!(s(&[0, 3]).lex_cmp(&s(&[0, 2, 5])), Ordering::Greater);
        // {0,5} numerically exceeds {1,2} but precedes it lexicographically
        assert_eq!(s(&[0, 5]).lex_cmp(&s(&[1, 2])), Ordering::Less);
        assert_eq!(s(&[1, 2]).lex_cmp(&s(&[1, 2])), Ordering::Equal);
    }

    #[test]
    fn display_and_serialize() {
        let a: VertexSet = [0, 2].into_iter().collect();
        assert_eq!(a.to_string(), "{0,2}");
        assert_eq!(serde_json::to_string(&a).unwrap(), "[0,2]");
    }
}
