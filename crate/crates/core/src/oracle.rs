//! Brute-force reference implementations.
//!
//! These share nothing with the fast paths beyond the basic table lookups
//! and exist to cross-check them on small inputs.

use crate::algebra::{Partition, UnaryAlgebra};
use crate::group::{FiniteGroup, SubgroupSet};
use crate::lattice::FiniteLattice;
use crate::{Error, Result};

pub const MAX_SUBSET_ORACLE_ORDER: usize = 16;
pub const MAX_PARTITION_ORACLE_UNIVERSE: usize = 10;
pub const MAX_PERMUTATION_ORACLE_SIZE: usize = 8;

/// Every subset of `g` that contains the identity and is closed under
/// products, sorted like [`crate::group::all_subgroups`].
pub fn subgroups_by_subsets(g: &FiniteGroup) -> Result<Vec<SubgroupSet>> {
    let n = g.order();
    if n > MAX_SUBSET_ORACLE_ORDER {
        return Err(Error::Capacity {
            what: "subset oracle group order",
            size: n,
            bound: MAX_SUBSET_ORACLE_ORDER,
        });
    }
    let mut out = Vec::new();
    for bits in 0u32..1 << n {
        let has = |x: usize| bits >> x & 1 == 1;
        if !has(g.identity()) {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&x| has(x)).collect();
        let closed = members.iter().all(|&a| members.iter().all(|&b| has(g.mul(a, b))));
        if closed {
            out.push(SubgroupSet::from_members(g, members)?);
        }
    }
    out.sort();
    Ok(out)
}

/// All set partitions of `0..m`, as restricted growth strings.
pub fn all_partitions(m: usize) -> Vec<Partition> {
    fn grow(labels: &mut Vec<usize>, m: usize, out: &mut Vec<Partition>) {
        if labels.len() == m {
            out.push(Partition::from_labels(labels));
            return;
        }
        let next = labels.iter().max().map_or(0, |&b| b + 1);
        for b in 0..=next {
            labels.push(b);
            grow(labels, m, out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::with_capacity(m), m, &mut out);
    out
}

/// Every partition stable under every operation of `a`, sorted like
/// [`crate::algebra::all_congruences`].
pub fn congruences_by_partitions(a: &UnaryAlgebra) -> Result<Vec<Partition>> {
    let m = a.universe_size();
    if m > MAX_PARTITION_ORACLE_UNIVERSE {
        return Err(Error::Capacity {
            what: "partition oracle universe",
            size: m,
            bound: MAX_PARTITION_ORACLE_UNIVERSE,
        });
    }
    let mut out: Vec<Partition> = all_partitions(m).into_iter().filter(|p| a.is_congruence(p)).collect();
    out.sort_by(|p, q| {
        (std::cmp::Reverse(p.block_count()), p.block_ids()).cmp(&(std::cmp::Reverse(q.block_count()), q.block_ids()))
    });
    Ok(out)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// The lexicographically first bijection preserving and reflecting order,
/// found by trying every permutation.
pub fn isomorphism_by_permutations<A, B>(l1: &FiniteLattice<A>, l2: &FiniteLattice<B>) -> Result<Option<Vec<usize>>> {
    let n = l1.size();
    if n > MAX_PERMUTATION_ORACLE_SIZE {
        return Err(Error::Capacity {
            what: "permutation oracle lattice",
            size: n,
            bound: MAX_PERMUTATION_ORACLE_SIZE,
        });
    }
    if n != l2.size() {
        return Ok(None);
    }
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        if (0..n).all(|a| (0..n).all(|b| l1.leq(a, b) == l2.leq(p[a], p[b]))) {
            return Ok(Some(p));
        }
        if !next_permutation(&mut p) {
            return Ok(None);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (0..8).map(|m| all_partitions(m).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203, 877]);
    }

    #[test]
    fn permutations_enumerate_all() {
        let mut p = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 24);
        assert_eq!(p, vec![3, 2, 1, 0]);
    }
}
