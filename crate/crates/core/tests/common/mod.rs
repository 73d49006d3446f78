//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls the library's order or greedy code: the order is
//! rebuilt from the cover pairs and every permutation is checked directly.

#![allow(dead_code)]

use greedy_balance::Poset;

/// Reflexive-transitive closure as a boolean matrix.
pub struct Order {
    pub n: usize,
    leq: Vec<Vec<bool>>,
}

impl Order {
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Order {
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(x, y) in pairs {
            leq[x][y] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if leq[i][k] && leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
        Order { n, leq }
    }

    pub fn of(p: &Poset) -> Order {
        Order::from_pairs(p.len(), &p.cover_pairs())
    }

    pub fn less(&self, x: usize, y: usize) -> bool {
        x != y && self.leq[x][y]
    }

    pub fn is_extension(&self, order: &[usize]) -> bool {
        (0..order.len()).all(|i| (0..i).all(|j| !self.less(order[i], order[j])))
    }

    /// Greedy: whenever a not-yet-placed element that is minimal among the
    /// remaining ones lies above the last placed element, the next element
    /// lies above it too.
    pub fn is_greedy(&self, order: &[usize]) -> bool {
        if !self.is_extension(order) {
            return false;
        }
        for i in 0..order.len().saturating_sub(1) {
            let last = order[i];
            let rest = &order[i + 1..];
            let minimal = |z: usize| rest.iter().all(|&w| !self.less(w, z));
            let can_climb = rest.iter().any(|&z| minimal(z) && self.less(last, z));
            if can_climb && !self.less(last, order[i + 1]) {
                return false;
            }
        }
        true
    }

    pub fn greedy_extensions(&self) -> Vec<Vec<usize>> {
        permutations(self.n)
            .into_iter()
            .filter(|o| self.is_greedy(o))
            .collect()
    }
}

/// Every permutation of `0..n`, by recursive insertion.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for shorter in permutations(n - 1) {
        for slot in 0..=shorter.len() {
            let mut p = shorter.clone();
            p.insert(slot, n - 1);
            out.push(p);
        }
    }
    out
}

/// `(count with x before y, total)` over greedy extensions.
pub fn before_count(order: &Order, x: usize, y: usize) -> (usize, usize) {
    let all = order.greedy_extensions();
    let before = all
        .iter()
        .filter(|o| o.iter().position(|&e| e == x) < o.iter().position(|&e| e == y))
        .count();
    (before, all.len())
}

pub fn factorial(m: u64) -> u64 {
    (1..=m).product()
}
