//! Finite groups given by Cayley tables.
//!
//! Elements are the indices `0..order`. Direct products index the pair
//! `(i, j)` as `i * |h| + j`, so the factor embeddings and the diagonal have
//! closed-form member lists.

mod builtin;
mod cayley_file;
mod coset;
mod subgroup;

use std::fmt;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::{Bounds, Error, Result};

pub use builtin::{alternating, cyclic, dihedral, quaternion, symmetric};
pub use cayley_file::{load_cayley_file, parse_cayley, to_cayley_text};
pub use coset::{left_cosets, LeftCosetSpace};
pub use subgroup::{
    all_subgroups, diagonal_subgroup, factor_embeddings, is_dedekind, is_normal, normal_subgroups,
    small_generating_set, subgroup_generate, subgroup_join, SubgroupSet,
};

#[derive(Clone)]
pub struct FiniteGroup {
    label: String,
    order: usize,
    cayley: Vec<u32>,
    identity: usize,
    inverse: Vec<u32>,
    generators: OnceLock<Vec<usize>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Builds a group from a row-major Cayley table, validating every group
    /// axiom.
    ///
    /// Associativity is checked exhaustively when the order is at most
    /// `bounds.assoc_check_order` (or `bounds.force_assoc_check` is set).
    /// Larger tables are checked with Light's test against a generating set,
    /// which is complete but costs `O(|gens| · n²)` instead of `O(n³)`.
    pub fn from_table(label: impl Into<String>, cayley: Vec<u32>, bounds: &Bounds) -> Result<Self> {
        let order = (cayley.len() as f64).sqrt().round() as usize;
        if order == 0 || order * order != cayley.len() {
            return Err(Error::InvalidGroup(format!(
                "table has {} entries, which is not a positive square",
                cayley.len()
            )));
        }
        if order > bounds.max_group_order {
            return Err(Error::capacity("group order", order, bounds.max_group_order));
        }
        if let Some(bad) = cayley.iter().position(|&v| v as usize >= order) {
            return Err(Error::InvalidGroup(format!(
                "entry ({}, {}) = {} is out of range",
                bad / order,
                bad % order,
                cayley[bad]
            )));
        }

        let at = |a: usize, b: usize| cayley[a * order + b] as usize;
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;

        let mut inverse = vec![0u32; order];
        for (x, slot) in inverse.iter_mut().enumerate() {
            let y = (0..order)
                .find(|&y| at(x, y) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {x} has no right inverse")))?;
            if at(y, x) != identity {
                return Err(Error::InvalidGroup(format!(
                    "right inverse {y} of {x} is not a left inverse"
                )));
            }
            *slot = y as u32;
        }

        let group = FiniteGroup {
            label: label.into(),
            order,
            cayley,
            identity,
            inverse,
            generators: OnceLock::new(),
        };
        if order <= bounds.assoc_check_order || bounds.force_assoc_check {
            group.check_associative_exhaustive()?;
        } else {
            group.check_associative_light()?;
        }
        Ok(group)
    }

    /// Trusted constructor for tables built from already validated groups.
    pub(crate) fn from_parts(
        label: String,
        order: usize,
        cayley: Vec<u32>,
        identity: usize,
        inverse: Vec<u32>,
    ) -> Self {
        debug_assert_eq!(cayley.len(), order * order);
        debug_assert_eq!(inverse.len(), order);
        FiniteGroup {
            label,
            order,
            cayley,
            identity,
            inverse,
            generators: OnceLock::new(),
        }
    }

    fn check_associative_exhaustive(&self) -> Result<()> {
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(x, y);
                for z in 0..n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Err(Error::InvalidGroup(format!("({x}*{y})*{z} != {x}*({y}*{z})")));
                    }
                }
            }
        }
        Ok(())
    }

    // Light's test: the elements g with (xg)y = x(gy) for all x, y form a
    // submagma, so checking a set whose product closure is everything suffices.
    fn check_associative_light(&self) -> Result<()> {
        let n = self.order;
        let mut reached = FixedBitSet::with_capacity(n);
        let mut list: Vec<usize> = Vec::new();
        let mut gens: Vec<usize> = Vec::new();
        while let Some(next) = (0..n).find(|&x| !reached.contains(x)) {
            gens.push(next);
            reached.insert(next);
            list.push(next);
            let mut i = 0;
            while i < list.len() {
                let y = list[i];
                for &g in &gens {
                    for z in [self.mul(y, g), self.mul(g, y)] {
                        if !reached.put(z) {
                            list.push(z);
                        }
                    }
                }
                i += 1;
            }
        }
        for &g in &gens {
            for x in 0..n {
                let xg = self.mul(x, g);
                for y in 0..n {
                    if self.mul(xg, y) != self.mul(x, self.mul(g, y)) {
                        return Err(Error::InvalidGroup(format!("({x}*{g})*{y} != {x}*({g}*{y})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Row `a` of the Cayley table: the products `a * b` for every `b`.
    pub fn row(&self, a: usize) -> &[u32] {
        &self.cayley[a * self.order..(a + 1) * self.order]
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The greedy generating set of [`small_generating_set`], computed once.
    pub fn generators(&self) -> &[usize] {
        self.generators.get_or_init(|| small_generating_set(self))
    }

    pub(crate) fn check_index(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: x,
                len: self.order,
            })
        }
    }
}

/// Direct product `g × h` with the pair `(i, j)` stored at index `i * |h| + j`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup, bounds: &Bounds) -> Result<FiniteGroup> {
    let (ng, nh) = (g.order(), h.order());
    let n = ng * nh;
    if n > bounds.max_group_order {
        return Err(Error::capacity("direct product order", n, bounds.max_group_order));
    }
    let mut cayley = Vec::with_capacity(n * n);
    for a in 0..n {
        let (a1, a2) = (a / nh, a % nh);
        let (row1, row2) = (g.row(a1), h.row(a2));
        for &b in &row1[..ng] {
            let base = b as usize * nh;
            cayley.extend(row2.iter().map(|&p| (base + p as usize) as u32));
        }
    }
    let inverse = (0..n).map(|a| (g.inv(a / nh) * nh + h.inv(a % nh)) as u32).collect();
    let identity = g.identity() * nh + h.identity();
    Ok(FiniteGroup::from_parts(
        format!("{}x{}", g.label(), h.label()),
        n,
        cayley,
        identity,
        inverse,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_product() {
        let b = Bounds::default();
        let c1 = cyclic(1).unwrap();
        let p = direct_product(&c1, &c1, &b).unwrap();
        assert_eq!(p.order(), 1);
        assert_eq!(p.identity(), 0);
    }

    #[test]
    fn klein_four_has_exponent_two() {
        let b = Bounds::default();
        let c2 = cyclic(2).unwrap();
        let v = direct_product(&c2, &c2, &b).unwrap();
        assert_eq!(v.order(), 4);
        for x in v.elements() {
            let expected = if x == v.identity() { 1 } else { 2 };
            assert_eq!(v.element_order(x), expected);
        }
    }

    #[test]
    fn s3_squared_has_order_36_and_is_a_group() {
        let b = Bounds::default();
        let s3 = symmetric(3).unwrap();
        let g = direct_product(&s3, &s3, &b).unwrap();
        assert_eq!(g.order(), 36);
        // round-trip through the validating constructor
        FiniteGroup::from_table("check", g.cayley.clone(), &b).unwrap();
    }

    #[test]
    fn product_over_capacity_is_rejected() {
        let b = Bounds {
            max_group_order: 100,
            ..Bounds::default()
        };
        let a5 = alternating(5).unwrap();
        assert!(direct_product(&a5, &a5, &b).unwrap_err().is_capacity());
    }

    #[test]
    fn a5_squared_fits_default_bound() {
        let b = Bounds::default();
        let a5 = alternating(5).unwrap();
        let g = direct_product(&a5, &a5, &b).unwrap();
        assert_eq!(g.order(), 3600);
        assert_eq!(g.mul(g.identity(), 1234), 1234);
        assert_eq!(g.mul(1234, g.inv(1234)), g.identity());
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // A loop of order 5 that is not a group.
        let table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ];
        let flat: Vec<u32> = table.iter().flatten().copied().collect();
        let exhaustive = Bounds::default();
        assert!(matches!(
            FiniteGroup::from_table("loop", flat.clone(), &exhaustive),
            Err(Error::InvalidGroup(_))
        ));
        let light = Bounds {
            assoc_check_order: 0,
            ..Bounds::default()
        };
        assert!(matches!(
            FiniteGroup::from_table("loop", flat, &light),
            Err(Error::InvalidGroup(_))
        ));
    }

    #[test]
    fn light_test_accepts_groups() {
        let b = Bounds {
            assoc_check_order: 0,
            ..Bounds::default()
        };
        let s4 = symmetric(4).unwrap();
        FiniteGroup::from_table("S4", s4.cayley.clone(), &b).unwrap();
    }
}
