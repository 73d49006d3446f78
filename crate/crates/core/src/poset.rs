//! Finite strict partial orders on `0..n`.
//!
//! A [`Poset`] keeps the full strict order (as up-sets and down-sets) together
//! with the cover relation, so comparability and cover queries are single
//! bitset lookups.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::set::{ElementSet, MAX_ELEMENTS};
use crate::ElementId;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    above: Vec<ElementSet>,
    below: Vec<ElementSet>,
    upper_covers: Vec<ElementSet>,
    lower_covers: Vec<ElementSet>,
    labels: Vec<Option<String>>,
}

/// Element renumbering produced when a poset is restricted to a subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexMap {
    old_to_new: Vec<Option<ElementId>>,
    new_to_old: Vec<ElementId>,
}

impl IndexMap {
    fn for_subset(n: usize, keep: ElementSet) -> Self {
        let new_to_old = keep.to_vec();
        let mut old_to_new = vec![None; n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        IndexMap {
            old_to_new,
            new_to_old,
        }
    }

    pub fn to_new(&self, old: ElementId) -> Option<ElementId> {
        self.old_to_new.get(old).copied().flatten()
    }

    pub fn to_old(&self, new: ElementId) -> ElementId {
        self.new_to_old[new]
    }

    pub fn old_len(&self) -> usize {
        self.old_to_new.len()
    }

    pub fn new_len(&self) -> usize {
        self.new_to_old.len()
    }
}

/// An induced N: `a ≺ b ≻ c ≺ d` with `a` and `d` incomparable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NWitness {
    pub a: ElementId,
    pub b: ElementId,
    pub c: ElementId,
    pub d: ElementId,
}

/// A bijection of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<ElementId>);

impl Permutation {
    pub fn new(image: Vec<ElementId>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &y in &image {
            if y >= n || std::mem::replace(&mut seen[y], true) {
                return Err(Error::NotAPermutation(n));
            }
        }
        Ok(Permutation(image))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Exchanges `a` and `b`, fixing everything else.
    pub fn transposition(n: usize, a: ElementId, b: ElementId) -> Result<Self> {
        if a >= n || b >= n {
            return Err(Error::IndexOutOfRange { index: a.max(b), n });
        }
        let mut image: Vec<_> = (0..n).collect();
        image.swap(a, b);
        Ok(Permutation(image))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, x: ElementId) -> ElementId {
        self.0[x]
    }

    pub fn apply_set(&self, s: ElementSet) -> ElementSet {
        s.iter().map(|x| self.0[x]).collect()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        Permutation(inv)
    }

    pub fn as_slice(&self) -> &[ElementId] {
        &self.0
    }
}

impl Poset {
    /// Builds the order generated by `pairs` (each `(x, y)` meaning `x < y`).
    ///
    /// Pairs need not be covers: the transitive closure is taken and the
    /// cover relation recomputed from it.
    pub fn new(n: usize, pairs: &[(ElementId, ElementId)]) -> Result<Self> {
        check_size(n)?;
        let mut above = vec![ElementSet::EMPTY; n];
        for &(x, y) in pairs {
            for z in [x, y] {
                if z >= n {
                    return Err(Error::IndexOutOfRange { index: z, n });
                }
            }
            if x == y {
                return Err(Error::CycleDetected(x));
            }
            above[x].insert(y);
        }
        Self::from_relation(above)
    }

    /// Closes an arbitrary relation given as successor sets.
    pub fn from_relation(mut above: Vec<ElementSet>) -> Result<Self> {
        let n = above.len();
        check_size(n)?;
        let all = ElementSet::full(n);
        if let Some(x) = (0..n).find(|&x| !above[x].is_subset(all)) {
            let index = (above[x] - all).first().unwrap_or(MAX_ELEMENTS);
            return Err(Error::IndexOutOfRange { index, n });
        }
        for k in 0..n {
            let via = above[k];
            for row in above.iter_mut() {
                if row.contains(k) {
                    *row |= via;
                }
            }
        }
        if let Some(x) = (0..n).find(|&x| above[x].contains(x)) {
            return Err(Error::CycleDetected(x));
        }
        Ok(Self::from_closed(above, vec![None; n]))
    }

    // `above` must already be a strict order.
    fn from_closed(above: Vec<ElementSet>, labels: Vec<Option<String>>) -> Self {
        let n = above.len();
        let mut below = vec![ElementSet::EMPTY; n];
        for (x, up) in above.iter().enumerate() {
            for y in up.iter() {
                below[y].insert(x);
            }
        }
        let upper_covers: Vec<ElementSet> = above
            .iter()
            .map(|&up| {
                let mut indirect = ElementSet::EMPTY;
                for z in up.iter() {
                    indirect |= above[z];
                }
                up - indirect
            })
            .collect();
        let mut lower_covers = vec![ElementSet::EMPTY; n];
        for (x, covers) in upper_covers.iter().enumerate() {
            for y in covers.iter() {
                lower_covers[y].insert(x);
            }
        }
        Poset {
            n,
            above,
            below,
            upper_covers,
            lower_covers,
            labels,
        }
    }

    /// # Panics
    /// If `n` is zero or above [`MAX_ELEMENTS`].
    pub fn antichain(n: usize) -> Self {
        check_size(n).expect("antichain size");
        Self::from_closed(vec![ElementSet::EMPTY; n], vec![None; n])
    }

    /// The chain `0 < 1 < .. < n-1`.
    ///
    /// # Panics
    /// If `n` is zero or above [`MAX_ELEMENTS`].
    pub fn chain(n: usize) -> Self {
        check_size(n).expect("chain size");
        let all = ElementSet::full(n);
        let above = (0..n).map(|x| all - ElementSet::full(x + 1)).collect();
        Self::from_closed(above, vec![None; n])
    }

    pub fn len(&self) -> usize {
        self.n
    }

    /// Always false: posets have at least one element.
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn elements(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn check_element(&self, x: ElementId) -> Result<()> {
        if x < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: x,
                n: self.n,
            })
        }
    }

    /// Strict `x < y`.
    pub fn less(&self, x: ElementId, y: ElementId) -> bool {
        self.above[x].contains(y)
    }

    /// Non-strict `x ≤ y`.
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        x == y || self.less(x, y)
    }

    pub fn comparable(&self, x: ElementId, y: ElementId) -> bool {
        x == y || self.less(x, y) || self.less(y, x)
    }

    pub fn incomparable(&self, x: ElementId, y: ElementId) -> bool {
        !self.comparable(x, y)
    }

    /// `x ≺ y`.
    pub fn covers(&self, x: ElementId, y: ElementId) -> bool {
        self.upper_covers[x].contains(y)
    }

    /// Everything strictly above `x`.
    pub fn upper_set(&self, x: ElementId) -> ElementSet {
        self.above[x]
    }

    /// Everything strictly below `x`.
    pub fn lower_set(&self, x: ElementId) -> ElementSet {
        self.below[x]
    }

    /// Elements incomparable to `x` (excluding `x`).
    pub fn incomparable_set(&self, x: ElementId) -> ElementSet {
        self.elements() - self.above[x] - self.below[x] - ElementSet::singleton(x)
    }

    pub fn upper_covers(&self, x: ElementId) -> ElementSet {
        self.upper_covers[x]
    }

    pub fn lower_covers(&self, x: ElementId) -> ElementSet {
        self.lower_covers[x]
    }

    pub fn minimals(&self) -> ElementSet {
        self.minimals_within(self.elements())
    }

    pub fn maximals(&self) -> ElementSet {
        self.elements()
            .iter()
            .filter(|&x| self.above[x].is_empty())
            .collect()
    }

    /// Minimal elements of the suborder induced on `subset`.
    pub fn minimals_within(&self, subset: ElementSet) -> ElementSet {
        subset
            .iter()
            .filter(|&x| (self.below[x] & subset).is_empty())
            .collect()
    }

    /// All cover pairs `(x, y)` in lexicographic order.
    pub fn cover_pairs(&self) -> Vec<(ElementId, ElementId)> {
        (0..self.n)
            .flat_map(|x| self.upper_covers[x].iter().map(move |y| (x, y)))
            .collect()
    }

    /// All strict pairs `x < y` in lexicographic order.
    pub fn relation_pairs(&self) -> Vec<(ElementId, ElementId)> {
        (0..self.n)
            .flat_map(|x| self.above[x].iter().map(move |y| (x, y)))
            .collect()
    }

    /// Incomparable pairs `(x, y)` with `x < y` as indices.
    pub fn incomparable_pairs(&self) -> Vec<(ElementId, ElementId)> {
        (0..self.n)
            .flat_map(|x| {
                (self.incomparable_set(x) - ElementSet::full(x + 1))
                    .iter()
                    .map(move |y| (x, y))
            })
            .collect()
    }

    pub fn label(&self, x: ElementId) -> Option<&str> {
        self.labels[x].as_deref()
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn set_label(&mut self, x: ElementId, label: impl Into<String>) -> Result<()> {
        self.check_element(x)?;
        self.labels[x] = Some(label.into());
        Ok(())
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Self {
        for (slot, l) in self.labels.iter_mut().zip(labels) {
            *slot = Some(l.into());
        }
        self
    }

    pub fn clear_labels(&mut self) {
        self.labels.iter_mut().for_each(|l| *l = None);
    }

    /// Display name: the label if present, else the index.
    pub fn name(&self, x: ElementId) -> String {
        self.labels[x].clone().unwrap_or_else(|| x.to_string())
    }

    /// The order with every relation reversed; labels are kept.
    pub fn dual(&self) -> Poset {
        Poset {
            n: self.n,
            above: self.below.clone(),
            below: self.above.clone(),
            upper_covers: self.lower_covers.clone(),
            lower_covers: self.upper_covers.clone(),
            labels: self.labels.clone(),
        }
    }

    /// Suborder induced on `keep`, renumbered densely in ascending order.
    pub fn induced(&self, keep: ElementSet) -> Result<(Poset, IndexMap)> {
        if !keep.is_subset(self.elements()) {
            let index = (keep - self.elements()).first().unwrap_or(0);
            return Err(Error::IndexOutOfRange { index, n: self.n });
        }
        check_size(keep.len())?;
        let map = IndexMap::for_subset(self.n, keep);
        let above = map
            .new_to_old
            .iter()
            .map(|&old| {
                (self.above[old] & keep)
                    .iter()
                    .map(|y| map.to_new(y).expect("kept element"))
                    .collect()
            })
            .collect();
        let labels = map
            .new_to_old
            .iter()
            .map(|&old| self.labels[old].clone())
            .collect();
        Ok((Self::from_closed(above, labels), map))
    }

    /// `P ∖ {a}` with the old→new index map.
    pub fn delete_element(&self, a: ElementId) -> Result<(Poset, IndexMap)> {
        self.check_element(a)?;
        if self.n == 1 {
            return Err(Error::Underflow);
        }
        self.induced(self.elements().without(a))
    }

    pub fn is_chain(&self) -> bool {
        (0..self.n).all(|x| self.incomparable_set(x).is_empty())
    }

    pub fn is_antichain(&self) -> bool {
        self.above.iter().all(|s| s.is_empty())
    }

    /// A maximum antichain, lexicographically least among those found first
    /// by the branch-and-bound search.
    pub fn max_antichain(&self) -> ElementSet {
        fn search(p: &Poset, chosen: ElementSet, candidates: ElementSet, best: &mut ElementSet) {
            if chosen.len() + candidates.len() <= best.len() {
                return;
            }
            let Some(v) = candidates.first() else {
                *best = chosen;
                return;
            };
            search(p, chosen.with(v), candidates & p.incomparable_set(v), best);
            search(p, chosen, candidates.without(v), best);
        }
        let mut best = ElementSet::EMPTY;
        search(self, ElementSet::EMPTY, self.elements(), &mut best);
        best
    }

    pub fn width(&self) -> usize {
        self.max_antichain().len()
    }

    /// Every element outside `set` relates the same way to all its members.
    pub fn is_autonomous(&self, set: ElementSet) -> bool {
        self.is_autonomous_within(set, self.elements())
    }

    /// Autonomy of `set` in the suborder induced on `universe`.
    pub fn is_autonomous_within(&self, set: ElementSet, universe: ElementSet) -> bool {
        let outside = universe - set;
        outside.iter().all(|v| {
            let above_v = self.above[v] & set;
            let below_v = self.below[v] & set;
            (above_v.is_empty() || above_v == set) && (below_v.is_empty() || below_v == set)
        })
    }

    /// Lexicographically least N in the cover relation.
    pub fn find_n(&self) -> Option<NWitness> {
        for a in 0..self.n {
            for b in self.upper_covers[a].iter() {
                for c in self.lower_covers[b].without(a).iter() {
                    let candidates = self.upper_covers[c].without(b) & self.incomparable_set(a);
                    if let Some(d) = candidates.first() {
                        return Some(NWitness { a, b, c, d });
                    }
                }
            }
        }
        None
    }

    pub fn is_n_free(&self) -> bool {
        self.find_n().is_none()
    }

    /// Lexicographic sum over `index`: members of component `i` lie below
    /// members of component `j` whenever `i < j` in the index poset.
    /// Elements are numbered by concatenating the components.
    pub fn lex_sum(index: &Poset, components: &[Poset]) -> Result<Poset> {
        if components.len() < 2 {
            return Err(Error::ArityMismatch(format!(
                "a lexicographic sum needs at least two components, got {}",
                components.len()
            )));
        }
        if index.len() != components.len() {
            return Err(Error::ArityMismatch(format!(
                "index poset has {} elements but {} components were given",
                index.len(),
                components.len()
            )));
        }
        Self::sum_by(components, |i, j| index.less(i, j))
    }

    /// Disjoint sum `P1 + P2 + ..`; a single component is returned unchanged.
    pub fn disjoint_sum(components: &[Poset]) -> Result<Poset> {
        Self::sum_by(components, |_, _| false)
    }

    /// Linear sum `P1 ⊕ P2 ⊕ ..`; a single component is returned unchanged.
    pub fn linear_sum(components: &[Poset]) -> Result<Poset> {
        Self::sum_by(components, |i, j| i < j)
    }

    fn sum_by(components: &[Poset], index_less: impl Fn(usize, usize) -> bool) -> Result<Poset> {
        if components.is_empty() {
            return Err(Error::ArityMismatch(
                "a sum needs at least one component".into(),
            ));
        }
        let total: usize = components.iter().map(Poset::len).sum();
        check_size(total)?;
        let mut spans = Vec::with_capacity(components.len());
        let mut offset = 0;
        for c in components {
            spans.push(ElementSet::full(offset + c.len()) - ElementSet::full(offset));
            offset += c.len();
        }
        let mut above = Vec::with_capacity(total);
        let mut labels = Vec::with_capacity(total);
        offset = 0;
        for (i, c) in components.iter().enumerate() {
            let later: ElementSet = (0..components.len())
                .filter(|&j| j != i && index_less(i, j))
                .fold(ElementSet::EMPTY, |acc, j| acc | spans[j]);
            for x in 0..c.len() {
                let inside = ElementSet::from_bits(c.above[x].bits() << offset);
                above.push(inside | later);
                labels.push(c.labels[x].clone());
            }
            offset += c.len();
        }
        Ok(Self::from_closed(above, labels))
    }

    /// `x < y ⟺ f(x) < f(y)` for all pairs.
    pub fn is_automorphism(&self, f: &Permutation) -> Result<bool> {
        if f.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: f.len(),
            });
        }
        Ok((0..self.n).all(|x| f.apply_set(self.above[x]) == self.above[f.apply(x)]))
    }

    /// Connected components of the comparability graph, ordered by least
    /// member; each component is sorted.
    pub fn connected_components(&self) -> Vec<Vec<ElementId>> {
        let mut unseen = self.elements();
        let mut out = Vec::new();
        while let Some(start) = unseen.first() {
            let mut component = ElementSet::singleton(start);
            unseen.remove(start);
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                let next = (self.above[x] | self.below[x]) & unseen;
                for y in next.iter() {
                    unseen.remove(y);
                    component.insert(y);
                    queue.push_back(y);
                }
            }
            out.push(component.to_vec());
        }
        out
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("n", &self.n)
            .field("covers", &self.cover_pairs())
            .finish()
    }
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Empty)
    } else if n > MAX_ELEMENTS {
        Err(Error::TooManyElements {
            n,
            max: MAX_ELEMENTS,
        })
    } else {
        Ok(())
    }
}
