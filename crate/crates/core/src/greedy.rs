//! Greedy linear extensions.
//!
//! A linear extension `x1 < x2 < .. < xn` is greedy when it is built by
//! starting at a minimal element and, after placing `xi`, continuing with an
//! element above `xi` whenever one of them is minimal among the elements not
//! yet placed. Only when no such element exists may the next element be any
//! minimal element of the remainder (a jump).
//!
//! Enumeration is a depth-first search over these choices in ascending
//! element order, so every sequence is produced once and in a canonical
//! order. Counting and pair statistics never materialize the extensions:
//! the number of completions depends only on the set of unplaced elements
//! and the last placed element, and is memoized on that state.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poset::{Permutation, Poset};
use crate::ratio::Ratio;
use crate::set::ElementSet;
use crate::ElementId;

/// Default bound on enumerated extensions (and on memoized search states).
pub const DEFAULT_CAP: u64 = 10_000_000;

/// Which family of linear extensions an operation ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtensionKind {
    Greedy,
    All,
}

impl ExtensionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ExtensionKind::Greedy => "greedy",
            ExtensionKind::All => "all",
        }
    }
}

/// Elements that may be placed next.
pub fn allowed_next(
    poset: &Poset,
    kind: ExtensionKind,
    remaining: ElementSet,
    last: Option<ElementId>,
) -> ElementSet {
    let minimal = poset.minimals_within(remaining);
    match (kind, last) {
        (ExtensionKind::Greedy, Some(last)) => {
            let climb = poset.upper_set(last) & minimal;
            if climb.is_empty() {
                minimal
            } else {
                climb
            }
        }
        _ => minimal,
    }
}

/// A linear order on the elements, with inverse position lookup.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearExtension {
    order: Vec<ElementId>,
    position: Vec<usize>,
}

impl LinearExtension {
    /// Wraps a permutation of `0..n` without reference to any order.
    pub fn new(order: Vec<ElementId>) -> Result<Self> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (i, &x) in order.iter().enumerate() {
            if x >= n || position[x] != usize::MAX {
                return Err(Error::NotAPermutation(n));
            }
            position[x] = i;
        }
        Ok(LinearExtension { order, position })
    }

    /// Wraps `order` after checking it is a linear extension of `poset`.
    pub fn for_poset(poset: &Poset, order: Vec<ElementId>) -> Result<Self> {
        if order.len() != poset.len() {
            return Err(Error::NotALinearExtension);
        }
        let l = Self::new(order).map_err(|_| Error::NotALinearExtension)?;
        if l.is_extension_of(poset) {
            Ok(l)
        } else {
            Err(Error::NotALinearExtension)
        }
    }

    pub fn is_extension_of(&self, poset: &Poset) -> bool {
        self.order.len() == poset.len()
            && poset
                .relation_pairs()
                .iter()
                .all(|&(x, y)| self.position[x] < self.position[y])
    }

    pub fn order(&self) -> &[ElementId] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn position(&self, x: ElementId) -> usize {
        self.position[x]
    }

    pub fn precedes(&self, x: ElementId, y: ElementId) -> bool {
        self.position[x] < self.position[y]
    }

    /// The reversed sequence, a linear extension of the dual order.
    pub fn reversed(&self) -> LinearExtension {
        let order: Vec<_> = self.order.iter().rev().copied().collect();
        let n = order.len();
        let position = self.position.iter().map(|&p| n - 1 - p).collect();
        LinearExtension { order, position }
    }

    /// `f(x1) < f(x2) < ..`.
    pub fn map(&self, f: &Permutation) -> LinearExtension {
        LinearExtension::new(self.order.iter().map(|&x| f.apply(x)).collect())
            .expect("image of a permutation")
    }

    pub fn into_order(self) -> Vec<ElementId> {
        self.order
    }
}

/// Streaming depth-first enumeration in canonical order.
pub struct Extensions<'a> {
    poset: &'a Poset,
    kind: ExtensionKind,
    prefix: Vec<ElementId>,
    choices: Vec<ElementSet>,
    remaining: ElementSet,
}

impl<'a> Extensions<'a> {
    pub fn new(poset: &'a Poset, kind: ExtensionKind) -> Self {
        let remaining = poset.elements();
        Extensions {
            poset,
            kind,
            prefix: Vec::with_capacity(poset.len()),
            choices: vec![allowed_next(poset, kind, remaining, None)],
            remaining,
        }
    }
}

impl Iterator for Extensions<'_> {
    type Item = LinearExtension;

    fn next(&mut self) -> Option<LinearExtension> {
        loop {
            let top = self.choices.last_mut()?;
            match top.first() {
                Some(v) => {
                    top.remove(v);
                    self.remaining.remove(v);
                    if self.remaining.is_empty() {
                        self.prefix.push(v);
                        let out = LinearExtension::new(self.prefix.clone()).expect("permutation");
                        self.prefix.pop();
                        self.remaining.insert(v);
                        return Some(out);
                    }
                    self.prefix.push(v);
                    self.choices
                        .push(allowed_next(self.poset, self.kind, self.remaining, Some(v)));
                }
                None => {
                    self.choices.pop();
                    if let Some(v) = self.prefix.pop() {
                        self.remaining.insert(v);
                    }
                }
            }
        }
    }
}

pub fn enumerate_extensions(
    poset: &Poset,
    kind: ExtensionKind,
    cap: u64,
) -> Result<Vec<LinearExtension>> {
    let mut out = Vec::new();
    for l in Extensions::new(poset, kind) {
        if out.len() as u64 >= cap {
            return Err(Error::CapExceeded(cap));
        }
        out.push(l);
    }
    Ok(out)
}

/// All greedy linear extensions in canonical order.
pub fn greedy_extensions(poset: &Poset) -> Result<Vec<LinearExtension>> {
    enumerate_extensions(poset, ExtensionKind::Greedy, DEFAULT_CAP)
}

pub fn all_linear_extensions(poset: &Poset) -> Result<Vec<LinearExtension>> {
    enumerate_extensions(poset, ExtensionKind::All, DEFAULT_CAP)
}

/// Checks the greedy rule position by position.
pub fn is_greedy(poset: &Poset, l: &LinearExtension) -> Result<bool> {
    if !l.is_extension_of(poset) {
        return Err(Error::NotALinearExtension);
    }
    let mut remaining = poset.elements();
    let mut last = None;
    for &v in l.order() {
        if !allowed_next(poset, ExtensionKind::Greedy, remaining, last).contains(v) {
            return Ok(false);
        }
        remaining.remove(v);
        last = Some(v);
    }
    Ok(true)
}

/// Chain blocks of a linear extension, split at its jumps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<ElementId>>,
    /// Indices `i` such that `(x_i, x_{i+1})` is a jump.
    pub jump_positions: Vec<usize>,
}

impl BlockDecomposition {
    pub fn jump_count(&self) -> usize {
        self.jump_positions.len()
    }
}

pub fn blocks(poset: &Poset, l: &LinearExtension) -> Result<BlockDecomposition> {
    if !l.is_extension_of(poset) {
        return Err(Error::NotALinearExtension);
    }
    let order = l.order();
    let mut blocks = vec![vec![order[0]]];
    let mut jump_positions = Vec::new();
    for (i, w) in order.windows(2).enumerate() {
        if poset.incomparable(w[0], w[1]) {
            jump_positions.push(i);
            blocks.push(Vec::new());
        }
        blocks.last_mut().expect("nonempty").push(w[1]);
    }
    Ok(BlockDecomposition {
        blocks,
        jump_positions,
    })
}

/// Number of jumps, without building the blocks.
pub fn jump_count(poset: &Poset, order: &[ElementId]) -> usize {
    order
        .windows(2)
        .filter(|w| poset.incomparable(w[0], w[1]))
        .count()
}

type StateKey = (u64, u8);

const NO_LAST: u8 = u8::MAX;

/// Memoized completion counts over search states.
struct Completions<'a> {
    poset: &'a Poset,
    kind: ExtensionKind,
    cap: u64,
    memo: HashMap<StateKey, BigUint>,
}

impl<'a> Completions<'a> {
    fn new(poset: &'a Poset, kind: ExtensionKind, cap: u64) -> Self {
        Completions {
            poset,
            kind,
            cap,
            memo: HashMap::new(),
        }
    }

    fn key(&self, remaining: ElementSet, last: Option<ElementId>) -> StateKey {
        match (self.kind, last) {
            (ExtensionKind::Greedy, Some(l)) => (remaining.bits(), l as u8),
            _ => (remaining.bits(), NO_LAST),
        }
    }

    fn count(&mut self, remaining: ElementSet, last: Option<ElementId>) -> Result<BigUint> {
        if remaining.is_empty() {
            return Ok(BigUint::one());
        }
        let key = self.key(remaining, last);
        if let Some(c) = self.memo.get(&key) {
            return Ok(c.clone());
        }
        if self.memo.len() as u64 >= self.cap {
            return Err(Error::CapExceeded(self.cap));
        }
        let mut total = BigUint::zero();
        for v in allowed_next(self.poset, self.kind, remaining, last) {
            total += self.count(remaining.without(v), Some(v))?;
        }
        self.memo.insert(key, total.clone());
        Ok(total)
    }
}

pub fn count_extensions(poset: &Poset, kind: ExtensionKind, cap: u64) -> Result<BigUint> {
    Completions::new(poset, kind, cap).count(poset.elements(), None)
}

/// `|G(P)|`.
pub fn greedy_count(poset: &Poset) -> Result<BigUint> {
    count_extensions(poset, ExtensionKind::Greedy, DEFAULT_CAP)
}

/// For every ordered pair, how many extensions put the first element
/// before the second.
#[derive(Clone, Debug)]
pub struct PairCounts {
    pub kind: ExtensionKind,
    pub total: BigUint,
    before: Vec<Vec<BigUint>>,
}

impl PairCounts {
    pub fn compute(poset: &Poset, kind: ExtensionKind, cap: u64) -> Result<Self> {
        let n = poset.len();
        let mut completions = Completions::new(poset, kind, cap);
        let total = completions.count(poset.elements(), None)?;
        let mut before = vec![vec![BigUint::zero(); n]; n];

        // Forward pass layer by layer: `reach` counts the prefixes arriving at a state.
        let mut layer: HashMap<StateKey, (ElementSet, Option<ElementId>, BigUint)> =
            HashMap::from([(
                (poset.elements().bits(), NO_LAST),
                (poset.elements(), None, BigUint::one()),
            )]);
        for _ in 0..n {
            let mut next: HashMap<StateKey, (ElementSet, Option<ElementId>, BigUint)> =
                HashMap::new();
            for (remaining, last, reach) in layer.into_values() {
                for v in allowed_next(poset, kind, remaining, last) {
                    let rest = remaining.without(v);
                    let through = &reach * completions.count(rest, Some(v))?;
                    for y in rest {
                        before[v][y] += &through;
                    }
                    let key = completions.key(rest, Some(v));
                    next.entry(key)
                        .and_modify(|e| e.2 += &reach)
                        .or_insert_with(|| (rest, Some(v), reach.clone()));
                }
            }
            layer = next;
        }
        Ok(PairCounts {
            kind,
            total,
            before,
        })
    }

    pub fn before(&self, x: ElementId, y: ElementId) -> &BigUint {
        &self.before[x][y]
    }

    pub fn ratio(&self, x: ElementId, y: ElementId) -> Ratio {
        Ratio::new(self.before[x][y].clone(), self.total.clone())
    }
}

fn pair_ratio(poset: &Poset, kind: ExtensionKind, x: ElementId, y: ElementId) -> Result<Ratio> {
    poset.check_element(x)?;
    poset.check_element(y)?;
    if x == y {
        return Err(Error::PreconditionViolated(
            "a pair needs two distinct elements".into(),
        ));
    }
    Ok(PairCounts::compute(poset, kind, DEFAULT_CAP)?.ratio(x, y))
}

/// `GP_P(x < y)`: share of greedy extensions putting `x` before `y`.
pub fn gp_ratio(poset: &Poset, x: ElementId, y: ElementId) -> Result<Ratio> {
    pair_ratio(poset, ExtensionKind::Greedy, x, y)
}

/// `P_P(x < y)` over all linear extensions.
pub fn p_ratio(poset: &Poset, x: ElementId, y: ElementId) -> Result<Ratio> {
    pair_ratio(poset, ExtensionKind::All, x, y)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairRatio {
    pub x: ElementId,
    pub y: ElementId,
    pub ratio: Ratio,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceReport {
    pub kind: ExtensionKind,
    pub total: BigUint,
    /// One entry per incomparable pair with `x < y` as indices.
    pub pairs: Vec<PairRatio>,
    pub best_pair: Option<(ElementId, ElementId)>,
    /// `min(r, 1 - r)` of the best pair.
    pub best_level: Option<BigRational>,
    pub alpha: Option<BigRational>,
    /// Whether `best_level ≥ alpha`, when an alpha was given.
    pub meets_alpha: Option<bool>,
}

impl BalanceReport {
    pub fn best(&self) -> Option<&PairRatio> {
        let (x, y) = self.best_pair?;
        self.pairs.iter().find(|p| p.x == x && p.y == y)
    }

    /// Pairs whose ratio lies in `[alpha, 1 - alpha]`.
    pub fn pairs_within(&self, alpha: &BigRational) -> Vec<&PairRatio> {
        self.pairs
            .iter()
            .filter(|p| &p.ratio.balance() >= alpha)
            .collect()
    }
}

pub fn balance_report(poset: &Poset, alpha: Option<BigRational>) -> Result<BalanceReport> {
    balance_report_with(poset, alpha, ExtensionKind::Greedy, DEFAULT_CAP)
}

pub fn balance_report_with(
    poset: &Poset,
    alpha: Option<BigRational>,
    kind: ExtensionKind,
    cap: u64,
) -> Result<BalanceReport> {
    let counts = PairCounts::compute(poset, kind, cap)?;
    let pairs: Vec<PairRatio> = poset
        .incomparable_pairs()
        .into_iter()
        .map(|(x, y)| PairRatio {
            x,
            y,
            ratio: counts.ratio(x, y),
        })
        .collect();
    let mut best: Option<(ElementId, ElementId, BigRational)> = None;
    for p in &pairs {
        let level = p.ratio.balance();
        if best.as_ref().is_none_or(|(_, _, b)| level > *b) {
            best = Some((p.x, p.y, level));
        }
    }
    let best_pair = best.as_ref().map(|(x, y, _)| (*x, *y));
    let best_level = best.map(|(_, _, l)| l);
    let meets_alpha = alpha
        .as_ref()
        .map(|a| best_level.as_ref().is_some_and(|l| l >= a));
    Ok(BalanceReport {
        kind,
        total: counts.total,
        pairs,
        best_pair,
        best_level,
        alpha,
        meets_alpha,
    })
}

/// Image of a greedy extension under an automorphism; greedy again.
pub fn apply_automorphism(
    poset: &Poset,
    f: &Permutation,
    l: &LinearExtension,
) -> Result<LinearExtension> {
    if !poset.is_automorphism(f)? {
        return Err(Error::NotAutomorphism);
    }
    if !is_greedy(poset, l)? {
        return Err(Error::NotGreedy);
    }
    Ok(l.map(f))
}

pub fn dual_extension(l: &LinearExtension) -> LinearExtension {
    l.reversed()
}

/// Every greedy extension reversed is greedy for the dual order.
pub fn is_reversible(poset: &Poset) -> Result<bool> {
    let dual = poset.dual();
    for l in enumerate_extensions(poset, ExtensionKind::Greedy, DEFAULT_CAP)? {
        if !is_greedy(&dual, &l.reversed())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Some greedy extension placing `x` before `y`; one exists whenever
/// `y ≰ x`.
pub fn exists_greedy_before(poset: &Poset, x: ElementId, y: ElementId) -> Result<LinearExtension> {
    poset.check_element(x)?;
    poset.check_element(y)?;
    if poset.leq(y, x) {
        return Err(Error::PreconditionViolated(format!(
            "{y} ≤ {x} in the order"
        )));
    }

    fn search(
        poset: &Poset,
        x: ElementId,
        y: ElementId,
        remaining: ElementSet,
        last: Option<ElementId>,
        prefix: &mut Vec<ElementId>,
        dead: &mut HashSet<StateKey>,
    ) -> bool {
        if remaining.is_empty() {
            return true;
        }
        let key = (remaining.bits(), last.map_or(NO_LAST, |l| l as u8));
        if dead.contains(&key) {
            return false;
        }
        let mut options = allowed_next(poset, ExtensionKind::Greedy, remaining, last);
        if remaining.contains(x) {
            options.remove(y);
        }
        for v in options {
            prefix.push(v);
            if search(poset, x, y, remaining.without(v), Some(v), prefix, dead) {
                return true;
            }
            prefix.pop();
        }
        dead.insert(key);
        false
    }

    let mut prefix = Vec::with_capacity(poset.len());
    if search(
        poset,
        x,
        y,
        poset.elements(),
        None,
        &mut prefix,
        &mut HashSet::new(),
    ) {
        LinearExtension::new(prefix)
    } else {
        Err(Error::PreconditionViolated(format!(
            "no greedy extension places {x} before {y}"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n_poset() -> Poset {
        Poset::new(4, &[(0, 1), (2, 1), (2, 3)]).unwrap()
    }

    fn n_plus_point() -> Poset {
        Poset::new(5, &[(0, 2), (0, 3), (1, 3)]).unwrap()
    }

    fn orders(ls: &[LinearExtension]) -> Vec<Vec<usize>> {
        ls.iter().map(|l| l.order().to_vec()).collect()
    }

    fn ext(p: &Poset, order: &[usize]) -> LinearExtension {
        LinearExtension::for_poset(p, order.to_vec()).unwrap()
    }

    #[test]
    fn n_has_three_greedy_extensions() {
        let g = greedy_extensions(&n_poset()).unwrap();
        assert_eq!(
            orders(&g),
            vec![vec![0, 2, 1, 3], vec![0, 2, 3, 1], vec![2, 3, 0, 1]]
        );
        assert_eq!(greedy_count(&n_poset()).unwrap(), 3u32.into());
    }

    #[test]
    fn counts() {
        assert_eq!(greedy_extensions(&n_plus_point()).unwrap().len(), 11);
        assert_eq!(greedy_count(&n_plus_point()).unwrap(), 11u32.into());
        assert_eq!(greedy_extensions(&Poset::antichain(3)).unwrap().len(), 6);
        assert_eq!(greedy_count(&Poset::antichain(4)).unwrap(), 24u32.into());
        assert_eq!(all_linear_extensions(&n_poset()).unwrap().len(), 5);
    }

    #[test]
    fn cap_is_enforced() {
        let p = Poset::antichain(4);
        assert_eq!(
            enumerate_extensions(&p, ExtensionKind::Greedy, 23),
            Err(Error::CapExceeded(23))
        );
        assert_eq!(
            enumerate_extensions(&p, ExtensionKind::Greedy, 24)
                .unwrap()
                .len(),
            24
        );
        assert_eq!(
            count_extensions(&Poset::antichain(12), ExtensionKind::Greedy, 100),
            Err(Error::CapExceeded(100))
        );
    }

    #[test]
    fn greedy_membership() {
        let n = n_poset();
        assert!(is_greedy(&n, &ext(&n, &[0, 2, 1, 3])).unwrap());
        let p = Poset::new(3, &[(0, 1)]).unwrap();
        assert!(!is_greedy(&p, &ext(&p, &[0, 2, 1])).unwrap());
        assert_eq!(
            orders(&greedy_extensions(&p).unwrap()),
            vec![vec![0, 1, 2], vec![2, 0, 1]]
        );
        let c = Poset::chain(4);
        assert!(is_greedy(&c, &ext(&c, &[0, 1, 2, 3])).unwrap());
        let bad = LinearExtension::new(vec![1, 0, 2, 3]).unwrap();
        assert_eq!(is_greedy(&n, &bad), Err(Error::NotALinearExtension));
    }

    #[test]
    fn block_decomposition() {
        let n = n_poset();
        let b = blocks(&n, &ext(&n, &[0, 2, 1, 3])).unwrap();
        assert_eq!(b.blocks, vec![vec![0], vec![2, 1], vec![3]]);
        assert_eq!(b.jump_count(), 2);
        assert_eq!(blocks(&n, &ext(&n, &[2, 3, 0, 1])).unwrap().jump_count(), 1);
        let c = Poset::chain(5);
        let b = blocks(&c, &ext(&c, &[0, 1, 2, 3, 4])).unwrap();
        assert_eq!((b.blocks.len(), b.jump_count()), (1, 0));
    }

    #[test]
    fn ratios() {
        let f = n_plus_point();
        assert_eq!(gp_ratio(&f, 1, 0).unwrap().fraction(), "8/11");
        assert_eq!(gp_ratio(&f, 1, 2).unwrap().fraction(), "8/11");
        assert_eq!(
            gp_ratio(&Poset::antichain(2), 0, 1).unwrap().fraction(),
            "1/2"
        );
        assert_eq!(gp_ratio(&Poset::chain(3), 0, 2).unwrap().fraction(), "1/1");
        assert_eq!(gp_ratio(&Poset::chain(3), 2, 0).unwrap().fraction(), "0/1");
        assert!(gp_ratio(&f, 1, 1).is_err());
        assert_eq!(
            p_ratio(&Poset::antichain(2), 0, 1).unwrap().fraction(),
            "1/2"
        );
        assert_eq!(p_ratio(&Poset::chain(3), 0, 2).unwrap().fraction(), "1/1");
    }

    #[test]
    fn n_all_extension_ratio_matches_enumeration() {
        let n = n_poset();
        let all = all_linear_extensions(&n).unwrap();
        let before = all.iter().filter(|l| l.precedes(0, 3)).count();
        let r = p_ratio(&n, 0, 3).unwrap();
        assert_eq!(r.count(), &BigUint::from(before));
        assert_eq!(r.total(), &BigUint::from(5u32));
    }

    #[test]
    fn balance_of_small_instances() {
        let r = balance_report(&n_poset(), None).unwrap();
        assert_eq!(r.best_level, Some(BigRational::new(1.into(), 3.into())));
        let bd = r.pairs.iter().find(|p| (p.x, p.y) == (1, 3)).unwrap();
        assert_eq!(bd.ratio.fraction(), "1/3");

        let r = balance_report(
            &Poset::antichain(2),
            Some(BigRational::new(1.into(), 3.into())),
        )
        .unwrap();
        assert_eq!(r.best_level, Some(BigRational::new(1.into(), 2.into())));
        assert_eq!(r.meets_alpha, Some(true));

        let r = balance_report(&Poset::chain(3), None).unwrap();
        assert!(r.pairs.is_empty() && r.best_pair.is_none());
    }

    #[test]
    fn automorphism_images() {
        let v = Poset::new(3, &[(0, 2), (1, 2)]).unwrap();
        let l = ext(&v, &[0, 1, 2]);
        let id = Permutation::identity(3);
        assert_eq!(apply_automorphism(&v, &id, &l).unwrap(), l);
        let swap = Permutation::transposition(3, 0, 1).unwrap();
        let image = apply_automorphism(&v, &swap, &l).unwrap();
        assert_eq!(image.order(), &[1, 0, 2]);
        assert!(is_greedy(&v, &image).unwrap());

        let f = n_plus_point();
        let l = greedy_extensions(&f).unwrap().remove(0);
        let swap = Permutation::transposition(5, 0, 1).unwrap();
        assert_eq!(
            apply_automorphism(&f, &swap, &l),
            Err(Error::NotAutomorphism)
        );
    }

    #[test]
    fn reversibility() {
        assert!(is_reversible(&Poset::antichain(2)).unwrap());
        assert!(is_reversible(&Poset::new(3, &[(0, 1)]).unwrap()).unwrap());
        let l = LinearExtension::new(vec![2, 0, 1]).unwrap();
        assert_eq!(dual_extension(&l).order(), &[1, 0, 2]);
        assert_eq!(dual_extension(&l).position(1), 0);
    }

    #[test]
    fn greedy_before_witnesses() {
        let n = n_poset();
        let l = exists_greedy_before(&n, 0, 2).unwrap();
        assert!(l.precedes(0, 2) && is_greedy(&n, &l).unwrap());
        let l = exists_greedy_before(&Poset::antichain(2), 1, 0).unwrap();
        assert_eq!(l.order(), &[1, 0]);
        assert!(matches!(
            exists_greedy_before(&Poset::chain(3), 2, 0),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
