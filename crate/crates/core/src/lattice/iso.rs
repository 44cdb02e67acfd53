//! Order-isomorphism search between finite lattices.
//!
//! Elements are first coloured by Hasse-diagram invariants (rank, co-rank,
//! cover degrees), then the colours are refined by the multisets of
//! neighbouring colours until stable. Both lattices are refined with a
//! shared colour table so classes correspond. Backtracking then only pairs
//! elements of equal colour.

use std::collections::HashMap;

use super::FiniteLattice;
use crate::{Bounds, Error, Result};

type Signature = (usize, Vec<usize>, Vec<usize>);

fn corank<T>(l: &FiniteLattice<T>) -> Vec<usize> {
    let n = l.size();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| std::cmp::Reverse(l.rank(x)));
    let mut depth = vec![0; n];
    // processing by decreasing rank visits upper covers first
    for &x in &order {
        depth[x] = l.upper_covers(x).iter().map(|&y| depth[y] + 1).max().unwrap_or(0);
    }
    depth
}

fn initial_colours<T>(l: &FiniteLattice<T>) -> Vec<(usize, usize, usize, usize)> {
    let depth = corank(l);
    (0..l.size())
        .map(|x| (l.rank(x), depth[x], l.upper_covers(x).len(), l.lower_covers(x).len()))
        .collect()
}

fn refine<A, B>(l1: &FiniteLattice<A>, l2: &FiniteLattice<B>) -> (Vec<usize>, Vec<usize>) {
    let mut table = HashMap::new();
    let mut intern = |key| {
        let next = table.len();
        *table.entry(key).or_insert(next)
    };
    let mut c1: Vec<usize> = initial_colours(l1).into_iter().map(&mut intern).collect();
    let mut c2: Vec<usize> = initial_colours(l2).into_iter().map(&mut intern).collect();

    let classes = |c1: &[usize], c2: &[usize]| {
        let mut v: Vec<usize> = c1.iter().chain(c2).copied().collect();
        v.sort_unstable();
        v.dedup();
        v.len()
    };
    let mut count = classes(&c1, &c2);
    loop {
        let mut table: HashMap<Signature, usize> = HashMap::new();
        let mut step = |l_covers: &dyn Fn(usize) -> (Vec<usize>, Vec<usize>), colours: &[usize]| {
            (0..colours.len())
                .map(|x| {
                    let (mut up, mut down) = l_covers(x);
                    up.sort_unstable();
                    down.sort_unstable();
                    let next = table.len();
                    *table.entry((colours[x], up, down)).or_insert(next)
                })
                .collect::<Vec<usize>>()
        };
        let n1 = step(
            &|x| {
                (
                    l1.upper_covers(x).iter().map(|&y| c1[y]).collect(),
                    l1.lower_covers(x).iter().map(|&y| c1[y]).collect(),
                )
            },
            &c1,
        );
        let n2 = step(
            &|x| {
                (
                    l2.upper_covers(x).iter().map(|&y| c2[y]).collect(),
                    l2.lower_covers(x).iter().map(|&y| c2[y]).collect(),
                )
            },
            &c2,
        );
        let next_count = classes(&n1, &n2);
        c1 = n1;
        c2 = n2;
        if next_count == count {
            return (c1, c2);
        }
        count = next_count;
    }
}

struct Search<'a, A, B> {
    l1: &'a FiniteLattice<A>,
    l2: &'a FiniteLattice<B>,
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    image: Vec<usize>,
    used: Vec<bool>,
}

impl<A, B> Search<'_, A, B> {
    fn consistent(&self, depth: usize, v: usize, w: usize) -> bool {
        self.order[..depth].iter().all(|&u| {
            let fu = self.image[u];
            self.l1.leq(u, v) == self.l2.leq(fu, w) && self.l1.leq(v, u) == self.l2.leq(w, fu)
        })
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for i in 0..self.candidates[v].len() {
            let w = self.candidates[v][i];
            if self.used[w] || !self.consistent(depth, v, w) {
                continue;
            }
            self.image[v] = w;
            self.used[w] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[w] = false;
        }
        false
    }
}

/// Whether `map` is a bijection `l1 -> l2` that preserves and reflects order.
pub fn is_order_isomorphism<A, B>(l1: &FiniteLattice<A>, l2: &FiniteLattice<B>, map: &[usize]) -> bool {
    let n = l1.size();
    if n != l2.size() || map.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &y in map {
        if y >= n || std::mem::replace(&mut hit[y], true) {
            return false;
        }
    }
    (0..n).all(|a| (0..n).all(|b| l1.leq(a, b) == l2.leq(map[a], map[b])))
}

/// Finds an order isomorphism `l1 -> l2` as an index map, if one exists.
/// A returned map is always verified with [`is_order_isomorphism`].
pub fn lattice_isomorphism<A, B>(
    l1: &FiniteLattice<A>,
    l2: &FiniteLattice<B>,
    bounds: &Bounds,
) -> Result<Option<Vec<usize>>> {
    for size in [l1.size(), l2.size()] {
        if size > bounds.max_lattice {
            return Err(Error::capacity(
                "lattice for isomorphism search",
                size,
                bounds.max_lattice,
            ));
        }
    }
    if l1.size() != l2.size() || l1.cover_count() != l2.cover_count() {
        return Ok(None);
    }

    let (c1, c2) = refine(l1, l2);
    let histogram = |c: &[usize]| {
        let mut h = c.to_vec();
        h.sort_unstable();
        h
    };
    if histogram(&c1) != histogram(&c2) {
        return Ok(None);
    }

    let n = l1.size();
    let mut by_colour: HashMap<usize, Vec<usize>> = HashMap::new();
    for (w, &c) in c2.iter().enumerate() {
        by_colour.entry(c).or_default().push(w);
    }
    let candidates: Vec<Vec<usize>> = c1.iter().map(|c| by_colour[c].clone()).collect();
    // bottom-up, small classes first within a rank
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (l1.rank(v), candidates[v].len(), v));

    let mut search = Search {
        l1,
        l2,
        order,
        candidates,
        image: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if !search.extend(0) {
        return Ok(None);
    }
    if !is_order_isomorphism(l1, l2, &search.image) {
        return Err(Error::Verification(
            "isomorphism search produced a non-isomorphism".into(),
        ));
    }
    Ok(Some(search.image))
}
