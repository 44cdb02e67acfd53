//! Finite bounded lattices.
//!
//! A [`FiniteLattice`] is built once from a partial order and then carries
//! precomputed meet and join tables, the Hasse diagram and the rank of every
//! element. Payloads are opaque; the subgroup and congruence lattices store
//! [`crate::SubgroupSet`] and [`crate::Partition`] values respectively.

mod dot;
mod groups;
mod iso;
mod modular;

use fixedbitset::FixedBitSet;

use crate::{Error, Result};

pub use groups::{normal_subgroup_lattice, subgroup_lattice};
pub use iso::{is_order_isomorphism, lattice_isomorphism};
pub use modular::{is_modular, pentagon_witness, N5Witness};

#[derive(Debug, Clone)]
pub struct FiniteLattice<T> {
    elements: Vec<T>,
    /// `up[x]` holds every `y` with `x <= y`.
    up: Vec<FixedBitSet>,
    meet: Vec<u32>,
    join: Vec<u32>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
    rank: Vec<usize>,
    bottom: usize,
    top: usize,
}

/// Builds a lattice from `elements` ordered by `leq`.
///
/// The relation is validated as a partial order and every pair must have a
/// meet and a join; otherwise [`Error::NotAPartialOrder`] or
/// [`Error::NotALattice`] is returned.
///
/// Meets are found with bitsets laid out along a linear extension: the
/// meet of `a` and `b` is the last common lower bound, and it is genuine
/// exactly when its own down-set has the size of the common down-set.
pub fn lattice_from_poset<T>(elements: Vec<T>, leq: impl Fn(&T, &T) -> bool) -> Result<FiniteLattice<T>> {
    let n = elements.len();
    if n == 0 {
        return Err(Error::EmptyPoset);
    }

    let mut up = vec![FixedBitSet::with_capacity(n); n];
    let mut down = vec![FixedBitSet::with_capacity(n); n];
    for x in 0..n {
        for y in 0..n {
            if leq(&elements[x], &elements[y]) {
                up[x].insert(y);
                down[y].insert(x);
            }
        }
    }
    for x in 0..n {
        if !up[x].contains(x) {
            return Err(Error::NotAPartialOrder(format!("element {x} is not below itself")));
        }
        for y in up[x].ones() {
            if y != x && up[y].contains(x) {
                return Err(Error::NotAPartialOrder(format!(
                    "elements {x} and {y} are mutually below"
                )));
            }
            if !up[y].is_subset(&up[x]) {
                return Err(Error::NotAPartialOrder(format!(
                    "transitivity fails through {x} <= {y}"
                )));
            }
        }
    }

    let down_count: Vec<usize> = down.iter().map(|s| s.count_ones(..)).collect();
    let up_count: Vec<usize> = up.iter().map(|s| s.count_ones(..)).collect();
    // x < y implies down(x) is a proper subset of down(y)
    let mut linear: Vec<usize> = (0..n).collect();
    linear.sort_by_key(|&x| (down_count[x], x));
    let mut pos = vec![0; n];
    for (p, &x) in linear.iter().enumerate() {
        pos[x] = p;
    }
    let reindex = |set: &FixedBitSet| {
        let mut out = FixedBitSet::with_capacity(n);
        out.extend(set.ones().map(|x| pos[x]));
        out
    };
    let down_lin: Vec<FixedBitSet> = down.iter().map(reindex).collect();
    let up_lin: Vec<FixedBitSet> = up.iter().map(reindex).collect();

    let mut meet = vec![0u32; n * n];
    let mut join = vec![0u32; n * n];
    for a in 0..n {
        for b in a..n {
            let m = down_lin[a]
                .intersection(&down_lin[b])
                .next_back()
                .map(|p| linear[p])
                .filter(|&m| down_lin[a].intersection_count(&down_lin[b]) == down_count[m])
                .ok_or(Error::NotALattice { a, b, kind: "meet" })?;
            let j = up_lin[a]
                .intersection(&up_lin[b])
                .next()
                .map(|p| linear[p])
                .filter(|&j| up_lin[a].intersection_count(&up_lin[b]) == up_count[j])
                .ok_or(Error::NotALattice { a, b, kind: "join" })?;
            meet[a * n + b] = m as u32;
            meet[b * n + a] = m as u32;
            join[a * n + b] = j as u32;
            join[b * n + a] = j as u32;
        }
    }

    let bottom = linear[0];
    let top = linear[n - 1];
    debug_assert_eq!(up_count[bottom], n);
    debug_assert_eq!(down_count[top], n);

    let mut upper_covers = vec![Vec::new(); n];
    let mut lower_covers = vec![Vec::new(); n];
    for x in 0..n {
        for y in up[x].ones() {
            if y != x && up[x].intersection_count(&down[y]) == 2 {
                upper_covers[x].push(y);
                lower_covers[y].push(x);
            }
        }
    }

    let mut rank = vec![0; n];
    for &y in &linear {
        rank[y] = lower_covers[y].iter().map(|&x| rank[x] + 1).max().unwrap_or(0);
    }

    Ok(FiniteLattice {
        elements,
        up,
        meet,
        join,
        upper_covers,
        lower_covers,
        rank,
        bottom,
        top,
    })
}

impl<T> FiniteLattice<T> {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, x: usize) -> &T {
        &self.elements[x]
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size() + b] as usize
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size() + b] as usize
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    /// Hasse diagram edges `(lower, upper)`, sorted.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        (0..self.size())
            .flat_map(|x| self.upper_covers[x].iter().map(move |&y| (x, y)))
            .collect()
    }

    pub fn cover_count(&self) -> usize {
        self.upper_covers.iter().map(Vec::len).sum()
    }

    /// Length of the longest chain from the bottom to `x`.
    pub fn rank(&self, x: usize) -> usize {
        self.rank[x]
    }

    pub fn height(&self) -> usize {
        self.rank[self.top]
    }

    pub fn is_chain(&self) -> bool {
        (0..self.size()).all(|a| (0..self.size()).all(|b| self.comparable(a, b)))
    }

    pub fn map<U>(self, f: impl FnMut(T) -> U) -> FiniteLattice<U> {
        FiniteLattice {
            elements: self.elements.into_iter().map(f).collect(),
            up: self.up,
            meet: self.meet,
            join: self.join,
            upper_covers: self.upper_covers,
            lower_covers: self.lower_covers,
            rank: self.rank,
            bottom: self.bottom,
            top: self.top,
        }
    }

    /// Index of the first element whose payload satisfies `pred`.
    pub fn position(&self, pred: impl Fn(&T) -> bool) -> Option<usize> {
        self.elements.iter().position(pred)
    }

    fn check_index(&self, x: usize) -> Result<()> {
        if x < self.size() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: x,
                len: self.size(),
            })
        }
    }
}

impl<T: Clone> FiniteLattice<T> {
    /// The principal filter `{y : x <= y}` with the induced order; its
    /// bottom is `x`. Elements keep their relative order.
    pub fn filter_above(&self, x: usize) -> Result<FiniteLattice<T>> {
        self.check_index(x)?;
        let members: Vec<usize> = self.up[x].ones().collect();
        let sub = lattice_from_poset(members, |&a, &b| self.leq(a, b))?;
        Ok(sub.map(|i| self.elements[i].clone()))
    }
}

/// Free-standing form of [`FiniteLattice::filter_above`].
pub fn filter_above<T: Clone>(l: &FiniteLattice<T>, x: usize) -> Result<FiniteLattice<T>> {
    l.filter_above(x)
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// Lattice on `0..n` from explicit `(lower, upper)` cover pairs.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> FiniteLattice<usize> {
        let mut reach = vec![vec![false; n]; n];
        for (i, row) in reach.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in covers {
            reach[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if reach[i][k] && reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
        lattice_from_poset((0..n).collect(), |&a, &b| reach[a][b]).unwrap()
    }

    pub fn chain(n: usize) -> FiniteLattice<usize> {
        lattice_from_poset((0..n).collect(), |a, b| a <= b).unwrap()
    }

    /// 0 < a=1 < c=2 < 1=4, 0 < b=3 < 1=4
    pub fn pentagon() -> FiniteLattice<usize> {
        from_covers(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])
    }

    pub fn diamond() -> FiniteLattice<usize> {
        from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
    }

    /// Subsets of an `n`-set under inclusion.
    pub fn boolean(n: usize) -> FiniteLattice<usize> {
        lattice_from_poset((0..1 << n).collect(), |&a, &b| a & b == a).unwrap()
    }
}
