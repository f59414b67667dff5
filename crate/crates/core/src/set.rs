//! Fixed-capacity vertex sets backed by a single `u128`.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, Sub, SubAssign};

/// Vertex identifier: a 0-based index below the order of its graph.
pub type VertexId = usize;

/// Maximum number of vertices any graph or set may hold.
pub const CAPACITY: usize = 128;

/// A set of vertex ids in `0..CAPACITY`.
///
/// The set itself carries no universe size; complements and fullness are
/// always taken relative to an explicit order `n`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn new() -> Self {
        VertexSet(0)
    }

    #[inline]
    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u128 {
        self.0
    }

    /// `{0, .., n-1}`. Panics if `n > CAPACITY`.
    #[inline]
    pub fn full(n: usize) -> Self {
        assert!(n <= CAPACITY, "universe {n} exceeds capacity {CAPACITY}");
        if n == CAPACITY {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: VertexId) -> Self {
        assert!(v < CAPACITY, "vertex {v} exceeds capacity {CAPACITY}");
        VertexSet(1u128 << v)
    }

    #[inline]
    pub fn contains(self, v: VertexId) -> bool {
        v < CAPACITY && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: VertexId) {
        *self |= VertexSet::singleton(v);
    }

    #[inline]
    pub fn remove(&mut self, v: VertexId) {
        if v < CAPACITY {
            self.0 &= !(1u128 << v);
        }
    }

    #[inline]
    pub fn with(self, v: VertexId) -> Self {
        self | VertexSet::singleton(v)
    }

    #[inline]
    pub fn without(self, v: VertexId) -> Self {
        let mut s = self;
        s.remove(v);
        s
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member.
    #[inline]
    pub fn first(self) -> Option<VertexId> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Largest member.
    #[inline]
    pub fn last(self) -> Option<VertexId> {
        if self.0 == 0 {
            None
        } else {
            Some(127 - self.0.leading_zeros() as usize)
        }
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// `{0..n} - self`.
    #[inline]
    pub fn complement(self, n: usize) -> Self {
        VertexSet::full(n) - self
    }

    /// Members in ascending order.
    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<VertexId> {
        self.iter().collect()
    }
}

#[derive(Clone)]
pub struct Iter(u128);

impl Iterator for Iter {
    type Item = VertexId;

    #[inline]
    fn next(&mut self) -> Option<VertexId> {
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

impl IntoIterator for VertexSet {
    type Item = VertexId;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a VertexId>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $op:tt, $atr:ident, $af:ident) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $f(self, rhs: VertexSet) -> VertexSet {
                VertexSet(self.0 $op rhs.0)
            }
        }
        impl $atr for VertexSet {
            #[inline]
            fn $af(&mut self, rhs: VertexSet) {
                self.0 = self.0 $op rhs.0;
            }
        }
    };
}

binop!(BitOr, bitor, |, BitOrAssign, bitor_assign);
binop!(BitAnd, bitand, &, BitAndAssign, bitand_assign);

impl BitXor for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitxor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 ^ rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl SubAssign for VertexSet {
    #[inline]
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.0 &= !rhs.0;
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// All `k`-subsets of `{0..n}` in lexicographic order of their sorted members.
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    assert!(n <= CAPACITY);
    let mut idx: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let cur = idx.as_mut()?;
        let out: VertexSet = cur.iter().collect();
        // Advance to the next combination.
        let mut i = k;
        loop {
            if i == 0 {
                idx = None;
                break;
            }
            i -= 1;
            if cur[i] < n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basics() {
        let s: VertexSet = [3, 0, 127].iter().collect();
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_vec(), vec![0, 3, 127]);
        assert_eq!(s.first(), Some(0));
        assert_eq!(s.last(), Some(127));
        assert!(s.contains(127));
        assert!(!s.contains(128));
        assert_eq!(VertexSet::full(128).len(), 128);
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
        assert_eq!(s.to_string(), "{0,3,127}");
        assert_eq!(s.without(3).with(5).to_vec(), vec![0, 5, 127]);
    }

    #[test]
    fn combinations_in_lex_order() {
        let all: Vec<Vec<usize>> = subsets_of_size(4, 2).map(|s| s.to_vec()).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets_of_size(5, 0).collect::<Vec<_>>(), vec![VertexSet::EMPTY]);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
        assert_eq!(subsets_of_size(10, 4).count(), 210);
    }

    #[test]
    #[should_panic]
    fn singleton_over_capacity_panics() {
        let _ = VertexSet::singleton(128);
    }

    fn arb_set(n: usize) -> impl Strategy<Value = VertexSet> {
        proptest::collection::btree_set(0..n, 0..n).prop_map(|s| s.into_iter().collect())
    }

    proptest! {
        #[test]
        fn set_algebra_laws(a in arb_set(100), b in arb_set(100), c in arb_set(100)) {
            let n = 100;
            prop_assert_eq!(a | (b & c), (a | b) & (a | c));
            prop_assert_eq!(a - b, a & b.complement(n));
            prop_assert_eq!((a | b).complement(n), a.complement(n) & b.complement(n));
            prop_assert_eq!((a | b).len() + (a & b).len(), a.len() + b.len());
            prop_assert!((a & b).is_subset(a));
            prop_assert_eq!(a.complement(n).complement(n), a);
            let members: Vec<_> = a.iter().collect();
            prop_assert!(members.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
