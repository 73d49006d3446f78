//! Fixed workloads for the criterion benches in `benches/`.

use greedy_balance::generators::{random_poset, random_sp};
use greedy_balance::Poset;

/// Series-parallel poset, deterministic per `(n, seed)`.
pub fn sp_workload(n: usize, seed: u64) -> Poset {
    random_sp(n, seed).expect("valid size")
}

/// Sparse random order, deterministic per `(n, seed)`.
pub fn random_workload(n: usize, seed: u64) -> Poset {
    random_poset(n, 0.2, seed).expect("valid size")
}
