use std::cmp::Reverse;
use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;

use super::{Partition, UnaryAlgebra, UnionFind};
use crate::lattice::{lattice_from_poset, FiniteLattice};
use crate::{Bounds, Error, Result};

fn principal(a: &UnaryAlgebra, x: usize, y: usize) -> Partition {
    let mut uf = UnionFind::new(a.universe_size());
    let mut pending = VecDeque::new();
    if uf.union(x, y) {
        pending.push_back((x, y));
    }
    // Every merged pair is pushed once; its images are merged in turn. The
    // equivalence generated by the pushed pairs is then closed under the ops.
    while let Some((u, v)) = pending.pop_front() {
        for &op in a.compute_ops() {
            let (fu, fv) = (a.apply(op, u), a.apply(op, v));
            if uf.union(fu, fv) {
                pending.push_back((fu, fv));
            }
        }
    }
    uf.to_partition()
}

/// `Cg(x, y)`: the least congruence identifying `x` and `y`.
pub fn principal_congruence(a: &UnaryAlgebra, x: usize, y: usize) -> Result<Partition> {
    for z in [x, y] {
        if z >= a.universe_size() {
            return Err(Error::IndexOutOfRange {
                index: z,
                len: a.universe_size(),
            });
        }
    }
    Ok(principal(a, x, y))
}

/// All congruences of `a`, finest first.
///
/// Every congruence is a join of principal congruences, so the join closure
/// of the distinct `Cg(x, y)` together with the identity partition is the
/// whole of `Con a`. Results are re-checked against every operation.
pub fn all_congruences(a: &UnaryAlgebra, bounds: &Bounds) -> Result<Vec<Partition>> {
    let m = a.universe_size();
    if m > bounds.max_universe {
        return Err(Error::capacity("congruence universe", m, bounds.max_universe));
    }

    let mut principals: Vec<Partition> = (0..m)
        .into_par_iter()
        .flat_map_iter(|x| (x + 1..m).map(move |y| principal(a, x, y)))
        .collect();
    principals.sort_unstable();
    principals.dedup();

    let mut result = vec![Partition::identity(m)];
    let mut seen: HashSet<Partition> = result.iter().cloned().collect();
    for p in &principals {
        let known = result.len();
        for i in 0..known {
            let j = result[i].join(p);
            if seen.insert(j.clone()) {
                result.push(j);
                if result.len() > bounds.max_congruences {
                    return Err(Error::capacity(
                        "congruence lattice",
                        result.len(),
                        bounds.max_congruences,
                    ));
                }
            }
        }
    }

    result.sort_unstable_by(|p, q| {
        (Reverse(p.block_count()), p.block_ids()).cmp(&(Reverse(q.block_count()), q.block_ids()))
    });
    if let Some(bad) = result.par_iter().find_any(|p| !a.is_congruence(p)) {
        return Err(Error::Verification(format!(
            "partition {bad} is not stable under every operation"
        )));
    }
    Ok(result)
}

/// `Con a` ordered by refinement.
pub fn congruence_lattice(a: &UnaryAlgebra, bounds: &Bounds) -> Result<FiniteLattice<Partition>> {
    lattice_from_poset(all_congruences(a, bounds)?, Partition::refines)
}
