//! Counting formulas for sums of posets, the removable-minimal reduction and
//! the constructive search for a pair split exactly in half by the greedy
//! extensions of an N-free poset.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::greedy::{
    self, enumerate_extensions, greedy_count, is_greedy, ExtensionKind, LinearExtension,
    DEFAULT_CAP,
};
use crate::poset::Poset;
use crate::set::ElementSet;
use crate::ElementId;

/// `(a1 + .. + am)! / (a1! .. am!)`.
pub fn multinomial(parts: &[u64]) -> BigUint {
    let mut acc = BigUint::one();
    let mut sum = 0u64;
    for &k in parts {
        sum += k;
        acc *= binomial(sum, k);
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn factorial(m: u64) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, i| acc * i)
}

/// Number of greedy extensions with each jump count.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JumpProfile(pub BTreeMap<usize, BigUint>);

impl JumpProfile {
    pub fn of(poset: &Poset) -> Result<Self> {
        Self::of_capped(poset, DEFAULT_CAP)
    }

    pub fn of_capped(poset: &Poset, cap: u64) -> Result<Self> {
        let mut profile = BTreeMap::new();
        for l in enumerate_extensions(poset, ExtensionKind::Greedy, cap)? {
            *profile
                .entry(greedy::jump_count(poset, l.order()))
                .or_insert_with(BigUint::zero) += 1u32;
        }
        Ok(JumpProfile(profile))
    }

    pub fn total(&self) -> BigUint {
        self.0.values().sum()
    }
}

/// `|G(P1 + .. + Pm)|` from the components' jump profiles.
///
/// Each greedy extension of the sum interleaves the blocks of one greedy
/// extension per component, keeping each component's blocks in order; any
/// such interleaving is greedy. With `s_i` jumps in component `i` there are
/// `multinomial(s_1 + 1, .., s_m + 1)` interleavings. The profiles are
/// folded one component at a time, keyed by the running number of blocks.
pub fn count_disjoint_sum(components: &[Poset]) -> Result<BigUint> {
    if components.is_empty() {
        return Err(Error::ArityMismatch(
            "a sum needs at least one component".into(),
        ));
    }
    let mut by_blocks: BTreeMap<u64, BigUint> = BTreeMap::from([(0, BigUint::one())]);
    for c in components {
        let profile = JumpProfile::of(c)?;
        let mut next: BTreeMap<u64, BigUint> = BTreeMap::new();
        for (&blocks_so_far, weight) in &by_blocks {
            for (&jumps, count) in &profile.0 {
                let k = jumps as u64 + 1;
                let ways = binomial(blocks_so_far + k, k);
                *next.entry(blocks_so_far + k).or_insert_with(BigUint::zero) +=
                    weight * count * ways;
            }
        }
        by_blocks = next;
    }
    Ok(by_blocks.into_values().sum())
}

/// `|G(P1 ⊕ .. ⊕ Pk)| = Π |G(Pi)|`.
pub fn count_linear_sum(components: &[Poset]) -> Result<BigUint> {
    if components.is_empty() {
        return Err(Error::ArityMismatch(
            "a sum needs at least one component".into(),
        ));
    }
    components
        .iter()
        .try_fold(BigUint::one(), |acc, c| Ok(acc * greedy_count(c)?))
}

/// `|G|` of a disjoint sum of `m` chains: `m!`.
pub fn count_chain_sum(m: u64) -> BigUint {
    factorial(m)
}

/// Minimal, non-maximal elements each of whose upper covers has no other
/// lower cover, i.e. becomes minimal once the element is removed.
pub fn removable_minimals(poset: &Poset) -> Vec<ElementId> {
    let minimal = poset.minimals();
    minimal
        .iter()
        .filter(|&a| {
            let up = poset.upper_covers(a);
            !up.is_empty()
                && up
                    .iter()
                    .all(|c| poset.lower_covers(c) == ElementSet::singleton(a))
        })
        .collect()
}

fn check_removable(poset: &Poset, a: ElementId) -> Result<()> {
    poset.check_element(a)?;
    if removable_minimals(poset).contains(&a) {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(format!(
            "{a} is not a removable minimal element"
        )))
    }
}

/// `L ∖ {a}`, renumbered as in [`Poset::delete_element`].
pub fn project_extension(
    poset: &Poset,
    a: ElementId,
    l: &LinearExtension,
) -> Result<LinearExtension> {
    check_removable(poset, a)?;
    if !is_greedy(poset, l)? {
        return Err(Error::PreconditionViolated(
            "extension is not greedy".into(),
        ));
    }
    let (_, map) = poset.delete_element(a)?;
    let order = l.order().iter().filter_map(|&x| map.to_new(x)).collect();
    LinearExtension::new(order)
}

/// Inverse of [`project_extension`]: put `a` immediately before the first
/// of its upper covers in `l` (given in the numbering of `P ∖ {a}`).
pub fn lift_extension(poset: &Poset, a: ElementId, l: &LinearExtension) -> Result<LinearExtension> {
    check_removable(poset, a)?;
    let (rest, map) = poset.delete_element(a)?;
    if !l.is_extension_of(&rest) || !is_greedy(&rest, l)? {
        return Err(Error::PreconditionViolated(
            "extension is not greedy for the reduced poset".into(),
        ));
    }
    let covers = poset.upper_covers(a);
    let old: Vec<ElementId> = l.order().iter().map(|&x| map.to_old(x)).collect();
    let at = old
        .iter()
        .position(|&x| covers.contains(x))
        .expect("a is not maximal");
    let mut order = Vec::with_capacity(poset.len());
    order.extend_from_slice(&old[..at]);
    order.push(a);
    order.extend_from_slice(&old[at..]);
    LinearExtension::new(order)
}

/// First pair of minimal elements (lexicographically) forming an autonomous set.
pub fn autonomous_minimal_pair(poset: &Poset) -> Option<(ElementId, ElementId)> {
    let minimal = poset.minimals().to_vec();
    for (i, &x) in minimal.iter().enumerate() {
        for &y in &minimal[i + 1..] {
            if poset.is_autonomous(ElementSet::singleton(x).with(y)) {
                return Some((x, y));
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessStep {
    /// A removable minimal element (original numbering) was deleted.
    RemovedMinimal(ElementId),
    /// The remaining poset had this autonomous pair of minimal elements.
    AutonomousPair(ElementId, ElementId),
}

impl fmt::Display for WitnessStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessStep::RemovedMinimal(a) => write!(f, "removed minimal {a}"),
            WitnessStep::AutonomousPair(x, y) => write!(f, "autonomous minimal pair {{{x}, {y}}}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPair {
    pub x: ElementId,
    pub y: ElementId,
    pub trace: Vec<WitnessStep>,
}

/// A pair with `GP(x < y) = 1/2` in an N-free poset that is not a chain.
///
/// Removable minimal elements are deleted (least index first) since that
/// preserves every before-count among the survivors; once none is left, two
/// minimal elements forming an autonomous set exist, and swapping them is an
/// automorphism that pairs up the greedy extensions.
pub fn half_balanced_witness(poset: &Poset) -> Result<WitnessPair> {
    if !poset.is_n_free() {
        return Err(Error::NotNFree);
    }
    if poset.is_chain() {
        return Err(Error::IsChain);
    }
    let mut current = poset.clone();
    let mut original: Vec<ElementId> = (0..poset.len()).collect();
    let mut trace = Vec::new();
    while let Some(&a) = removable_minimals(&current).first() {
        trace.push(WitnessStep::RemovedMinimal(original[a]));
        let (rest, map) = current.delete_element(a)?;
        assert!(
            rest.is_n_free() && !rest.is_chain(),
            "removing a removable minimal must leave an N-free non-chain"
        );
        original = (0..rest.len()).map(|i| original[map.to_old(i)]).collect();
        current = rest;
    }
    let (x, y) = autonomous_minimal_pair(&current).ok_or_else(|| {
        Error::PreconditionViolated("no autonomous pair of minimal elements".into())
    })?;
    let (x, y) = (original[x], original[y]);
    trace.push(WitnessStep::AutonomousPair(x, y));
    Ok(WitnessPair { x, y, trace })
}

/// `(x, y, z)` with `x < z`, `y` incomparable to both, and `{x, y}`
/// autonomous once `z` is removed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GoodTriple {
    pub x: ElementId,
    pub y: ElementId,
    pub z: ElementId,
}

pub fn good_triples(poset: &Poset) -> Vec<GoodTriple> {
    let mut out = Vec::new();
    for x in 0..poset.len() {
        for y in poset.incomparable_set(x) {
            for z in poset.upper_set(x) & poset.incomparable_set(y) {
                let pair = ElementSet::singleton(x).with(y);
                if poset.is_autonomous_within(pair, poset.elements().without(z)) {
                    out.push(GoodTriple { x, y, z });
                }
            }
        }
    }
    out
}
