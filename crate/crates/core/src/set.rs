use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use crate::ElementId;

/// Largest poset the bitset representation supports.
pub const MAX_ELEMENTS: usize = 64;

/// A set of elements of a poset, stored as a 64-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: ElementId) -> Self {
        ElementSet(1u64 << x)
    }

    pub fn contains(self, x: ElementId) -> bool {
        x < MAX_ELEMENTS && self.0 >> x & 1 == 1
    }

    pub fn insert(&mut self, x: ElementId) {
        self.0 |= 1u64 << x;
    }

    pub fn remove(&mut self, x: ElementId) {
        self.0 &= !(1u64 << x);
    }

    pub fn with(self, x: ElementId) -> Self {
        ElementSet(self.0 | 1u64 << x)
    }

    pub fn without(self, x: ElementId) -> Self {
        ElementSet(self.0 & !(1u64 << x))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<ElementId> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<ElementId> {
        self.iter().collect()
    }
}

impl FromIterator<ElementId> for ElementSet {
    fn from_iter<I: IntoIterator<Item = ElementId>>(iter: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl IntoIterator for ElementSet {
    type Item = ElementId;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = ElementId;

    fn next(&mut self) -> Option<ElementId> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl BitAnd for ElementSet {
    type Output = ElementSet;
    fn bitand(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & rhs.0)
    }
}

impl BitOr for ElementSet {
    type Output = ElementSet;
    fn bitor(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 | rhs.0)
    }
}

impl Sub for ElementSet {
    type Output = ElementSet;
    fn sub(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & !rhs.0)
    }
}

// Complement within all 64 slots; callers mask with `full(n)`.
impl Not for ElementSet {
    type Output = ElementSet;
    fn not(self) -> ElementSet {
        ElementSet(!self.0)
    }
}

impl BitAndAssign for ElementSet {
    fn bitand_assign(&mut self, rhs: ElementSet) {
        self.0 &= rhs.0;
    }
}

impl BitOrAssign for ElementSet {
    fn bitor_assign(&mut self, rhs: ElementSet) {
        self.0 |= rhs.0;
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iterates_in_ascending_order() {
        let s: ElementSet = [5, 0, 63, 7].into_iter().collect();
        assert_eq!(s.to_vec(), vec![0, 5, 7, 63]);
        assert_eq!(s.len(), 4);
        assert_eq!(s.first(), Some(0));
    }

    #[test]
    fn full_sets() {
        assert_eq!(ElementSet::full(0), ElementSet::EMPTY);
        assert_eq!(ElementSet::full(3).to_vec(), vec![0, 1, 2]);
        assert_eq!(ElementSet::full(64).len(), 64);
    }
}
