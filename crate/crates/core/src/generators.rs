//! Test posets: series-parallel expressions, seeded random orders and
//! exhaustive labeled families.

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::set::{ElementSet, MAX_ELEMENTS};

/// Default bound for [`enumerate_labeled_posets`].
pub const DEFAULT_LABELED_LIMIT: usize = 6;

/// Default number of rejection rounds in [`random_nfree`].
pub const DEFAULT_NFREE_ATTEMPTS: usize = 1000;

/// Series-parallel expression; the concrete syntax is
/// `chain(k)`, `antichain(k)`, `lin(e1, e2, ..)` and `dis(e1, e2, ..)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpExpr {
    Chain(usize),
    Antichain(usize),
    Lin(Vec<SpExpr>),
    Dis(Vec<SpExpr>),
}

impl SpExpr {
    /// Number of elements of the evaluated poset.
    pub fn size(&self) -> usize {
        match self {
            SpExpr::Chain(k) | SpExpr::Antichain(k) => *k,
            SpExpr::Lin(parts) | SpExpr::Dis(parts) => parts.iter().map(SpExpr::size).sum(),
        }
    }

    pub fn eval(&self) -> Result<Poset> {
        match self {
            SpExpr::Chain(k) | SpExpr::Antichain(k) if *k == 0 || *k > MAX_ELEMENTS => Err(
                Error::SizeError(format!("leaf size {k} must be in 1..={MAX_ELEMENTS}")),
            ),
            SpExpr::Chain(k) => Ok(Poset::chain(*k)),
            SpExpr::Antichain(k) => Ok(Poset::antichain(*k)),
            SpExpr::Lin(parts) | SpExpr::Dis(parts) => {
                if parts.len() < 2 {
                    return Err(Error::ArityMismatch(format!(
                        "lin/dis need at least two operands, got {}",
                        parts.len()
                    )));
                }
                let components = parts.iter().map(SpExpr::eval).collect::<Result<Vec<_>>>()?;
                if matches!(self, SpExpr::Lin(_)) {
                    Poset::linear_sum(&components)
                } else {
                    Poset::disjoint_sum(&components)
                }
            }
        }
    }
}

impl fmt::Display for SpExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, parts) = match self {
            SpExpr::Chain(k) => return write!(f, "chain({k})"),
            SpExpr::Antichain(k) => return write!(f, "antichain({k})"),
            SpExpr::Lin(parts) => ("lin", parts),
            SpExpr::Dis(parts) => ("dis", parts),
        };
        write!(f, "{name}(")?;
        for (i, p) in parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for SpExpr {
    type Err = Error;

    fn from_str(text: &str) -> Result<SpExpr> {
        let compact: Vec<u8> = text.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        let mut parser = ExprParser {
            input: &compact,
            pos: 0,
        };
        let expr = parser.expr()?;
        if parser.pos != compact.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(expr)
    }
}

struct ExprParser<'a> {
    input: &'a [u8],
    pos: usize,
}

impl ExprParser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            line: 1,
            message: format!("{message} at offset {}", self.pos),
        }
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        if self.input.get(self.pos) == Some(&byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", byte as char)))
        }
    }

    fn word(&mut self) -> &[u8] {
        let start = self.pos;
        while self
            .input
            .get(self.pos)
            .is_some_and(u8::is_ascii_alphabetic)
        {
            self.pos += 1;
        }
        &self.input[start..self.pos]
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.input.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.input[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| self.error("expected a number"))
    }

    fn expr(&mut self) -> Result<SpExpr> {
        let start = self.pos;
        let word = self.word().to_vec();
        self.expect(b'(')?;
        let expr = match word.as_slice() {
            b"chain" => SpExpr::Chain(self.number()?),
            b"antichain" => SpExpr::Antichain(self.number()?),
            b"lin" | b"dis" => {
                let mut parts = vec![self.expr()?];
                while self.input.get(self.pos) == Some(&b',') {
                    self.pos += 1;
                    parts.push(self.expr()?);
                }
                if word == b"lin" {
                    SpExpr::Lin(parts)
                } else {
                    SpExpr::Dis(parts)
                }
            }
            _ => {
                self.pos = start;
                return Err(self.error("expected chain, antichain, lin or dis"));
            }
        };
        self.expect(b')')?;
        Ok(expr)
    }
}

fn check_n(n: usize) -> Result<()> {
    if (1..=MAX_ELEMENTS).contains(&n) {
        Ok(())
    } else {
        Err(Error::SizeError(format!(
            "size {n} must be in 1..={MAX_ELEMENTS}"
        )))
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random series-parallel expression on exactly `n` elements.
pub fn random_sp_expr<R: Rng>(n: usize, rng: &mut R) -> SpExpr {
    if n == 1 {
        return SpExpr::Chain(1);
    }
    if rng.random_bool(0.15) {
        return if rng.random_bool(0.5) {
            SpExpr::Chain(n)
        } else {
            SpExpr::Antichain(n)
        };
    }
    let arity = if n >= 3 && rng.random_bool(0.25) {
        3
    } else {
        2
    };
    let mut cuts = sample(rng, n - 1, arity - 1).into_vec();
    cuts.sort_unstable();
    let mut parts = Vec::with_capacity(arity);
    let mut prev = 0;
    for c in cuts.into_iter().map(|c| c + 1).chain([n]) {
        parts.push(random_sp_expr(c - prev, rng));
        prev = c;
    }
    if rng.random_bool(0.5) {
        SpExpr::Lin(parts)
    } else {
        SpExpr::Dis(parts)
    }
}

pub fn random_sp(n: usize, seed: u64) -> Result<Poset> {
    check_n(n)?;
    random_sp_expr(n, &mut rng_from_seed(seed)).eval()
}

fn random_dag<R: Rng>(n: usize, p: f64, rng: &mut R) -> Poset {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                pairs.push((i, j));
            }
        }
    }
    Poset::new(n, &pairs).expect("forward edges are acyclic")
}

/// Independent coin flips for each `i < j`, then transitive closure.
pub fn random_poset(n: usize, edge_probability: f64, seed: u64) -> Result<Poset> {
    check_n(n)?;
    if !(0.0..=1.0).contains(&edge_probability) {
        return Err(Error::ProbabilityRange(edge_probability));
    }
    Ok(random_dag(n, edge_probability, &mut rng_from_seed(seed)))
}

/// Rejection-samples random orders (with a random edge probability per
/// round) until one is N-free; falls back to a series-parallel order.
pub fn random_nfree(n: usize, seed: u64, max_attempts: usize) -> Result<Poset> {
    check_n(n)?;
    let mut rng = rng_from_seed(seed);
    for _ in 0..max_attempts {
        let p = rng.random_range(0.0..=1.0);
        let candidate = random_dag(n, p, &mut rng);
        if candidate.is_n_free() {
            return Ok(candidate);
        }
    }
    random_sp_expr(n, &mut rng).eval()
}

/// Calls `visit` once for every strict order on `0..n`.
///
/// Orders are grown one element at a time: element `k` is attached below an
/// up-closed set `U` and above a down-closed set `D` of the earlier
/// elements, where everything in `D` is already below everything in `U`.
/// Each labeled order arises from exactly one sequence of such choices.
pub fn for_each_labeled_poset(
    n: usize,
    limit: usize,
    mut visit: impl FnMut(&Poset),
) -> Result<u64> {
    if n == 0 {
        return Err(Error::SizeError("size must be at least 1".into()));
    }
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    check_n(n)?;

    fn grow(above: &mut Vec<ElementSet>, n: usize, visit: &mut dyn FnMut(&Poset), count: &mut u64) {
        let k = above.len();
        if k == n {
            *count += 1;
            visit(&Poset::from_relation(above.clone()).expect("strict order"));
            return;
        }
        let earlier = ElementSet::full(k);
        let mut below_of = vec![ElementSet::EMPTY; k];
        for (x, up) in above.iter().enumerate() {
            for y in up.iter() {
                below_of[y].insert(x);
            }
        }
        for d_bits in 0..1u64 << k {
            let down = ElementSet::from_bits(d_bits);
            if !down.iter().all(|x| below_of[x].is_subset(down)) {
                continue;
            }
            let allowed = down.iter().fold(earlier - down, |acc, d| acc & above[d]);
            // every subset of `allowed`, including the empty one
            let mut u_bits = allowed.bits();
            loop {
                let up = ElementSet::from_bits(u_bits);
                if up.iter().all(|u| above[u].is_subset(up)) {
                    for d in down.iter() {
                        above[d].insert(k);
                    }
                    above.push(up);
                    grow(above, n, visit, count);
                    above.pop();
                    for d in down.iter() {
                        above[d].remove(k);
                    }
                }
                if u_bits == 0 {
                    break;
                }
                u_bits = (u_bits - 1) & allowed.bits();
            }
        }
    }

    let mut count = 0;
    grow(&mut Vec::with_capacity(n), n, &mut visit, &mut count);
    Ok(count)
}

/// Every labeled poset on `n ≤ 6` elements satisfying `predicate`.
pub fn enumerate_labeled_posets(
    n: usize,
    predicate: impl Fn(&Poset) -> bool,
) -> Result<Vec<Poset>> {
    let mut out = Vec::new();
    for_each_labeled_poset(n, DEFAULT_LABELED_LIMIT, |p| {
        if predicate(p) {
            out.push(p.clone());
        }
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn parses_and_prints_expressions() {
        let e: SpExpr = " lin( antichain(2) ,\n dis(chain(1), chain(2)) )"
            .parse()
            .unwrap();
        assert_eq!(e.to_string(), "lin(antichain(2),dis(chain(1),chain(2)))");
        assert_eq!(e.size(), 5);
        assert_eq!(e.to_string().parse::<SpExpr>().unwrap(), e);
        assert!("lin(chain(1)".parse::<SpExpr>().is_err());
        assert!("tree(1)".parse::<SpExpr>().is_err());
        assert!("chain(1)x".parse::<SpExpr>().is_err());
        assert!("chain()".parse::<SpExpr>().is_err());
    }

    #[test]
    fn evaluates_expressions() {
        let p = "dis(chain(1),chain(2))"
            .parse::<SpExpr>()
            .unwrap()
            .eval()
            .unwrap();
        assert_eq!(p.cover_pairs(), vec![(1, 2)]);
        let p = "lin(antichain(2),antichain(2))"
            .parse::<SpExpr>()
            .unwrap()
            .eval()
            .unwrap();
        assert!(p.is_n_free());
        assert_eq!(p.len(), 4);
        assert_eq!(
            "chain(5)".parse::<SpExpr>().unwrap().eval().unwrap(),
            Poset::chain(5)
        );
        assert!(matches!(
            SpExpr::Lin(vec![SpExpr::Chain(1)]).eval(),
            Err(Error::ArityMismatch(_))
        ));
        assert!(matches!(SpExpr::Chain(0).eval(), Err(Error::SizeError(_))));
    }

    #[test]
    fn random_sp_is_deterministic_and_n_free() {
        assert_eq!(random_sp(1, 99).unwrap(), Poset::chain(1));
        let p = random_sp(8, 1).unwrap();
        assert_eq!(p.len(), 8);
        assert!(p.is_n_free());
        assert_eq!(random_sp(8, 1).unwrap(), p);
        assert!(matches!(random_sp(0, 1), Err(Error::SizeError(_))));
    }

    #[test]
    fn random_poset_extremes() {
        assert_eq!(random_poset(6, 0.0, 3).unwrap(), Poset::antichain(6));
        assert_eq!(random_poset(6, 1.0, 3).unwrap(), Poset::chain(6));
        assert_eq!(
            random_poset(6, 0.3, 7).unwrap(),
            random_poset(6, 0.3, 7).unwrap()
        );
        assert!(matches!(
            random_poset(6, 1.5, 3),
            Err(Error::ProbabilityRange(_))
        ));
        assert!(matches!(random_poset(0, 0.5, 3), Err(Error::SizeError(_))));
    }

    #[test]
    fn random_nfree_outputs_are_n_free() {
        for seed in 0..50 {
            let p = random_nfree(4 + (seed as usize % 5), seed, DEFAULT_NFREE_ATTEMPTS).unwrap();
            assert!(p.is_n_free());
        }
        // zero attempts forces the series-parallel fallback
        assert!(random_nfree(9, 5, 0).unwrap().is_n_free());
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(for_each_labeled_poset(1, 6, |_| {}).unwrap(), 1);
        assert_eq!(for_each_labeled_poset(2, 6, |_| {}).unwrap(), 3);
        assert_eq!(for_each_labeled_poset(3, 6, |_| {}).unwrap(), 19);
        assert_eq!(for_each_labeled_poset(4, 6, |_| {}).unwrap(), 219);
        assert_eq!(
            for_each_labeled_poset(7, 6, |_| {}),
            Err(Error::LimitExceeded { n: 7, limit: 6 })
        );
    }

    #[test]
    fn labeled_posets_are_distinct() {
        let all = enumerate_labeled_posets(4, |_| true).unwrap();
        let distinct: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), all.len());
        let width_two = enumerate_labeled_posets(3, |p| p.width() == 2).unwrap();
        assert!(width_two.iter().all(|p| !p.is_chain()));
    }
}
