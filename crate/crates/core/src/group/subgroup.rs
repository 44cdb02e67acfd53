use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;

use super::FiniteGroup;
use crate::{Bounds, Error, Result};

/// A subgroup, stored as the sorted list of its member indices plus a
/// membership mask over the parent group.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubgroupSet {
    members: Vec<usize>,
    mask: FixedBitSet,
}

impl SubgroupSet {
    fn from_mask(mask: FixedBitSet) -> Self {
        SubgroupSet {
            members: mask.ones().collect(),
            mask,
        }
    }

    /// Members must already be closed; checked in debug builds only.
    pub(crate) fn from_members_unchecked(parent_order: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut mask = FixedBitSet::with_capacity(parent_order);
        mask.extend(members);
        Self::from_mask(mask)
    }

    /// Validates that `members` is a subgroup of `g`.
    pub fn from_members(g: &FiniteGroup, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = FixedBitSet::with_capacity(g.order());
        for x in members {
            g.check_index(x)?;
            mask.insert(x);
        }
        let h = Self::from_mask(mask);
        h.check_subgroup_of(g)?;
        Ok(h)
    }

    pub(crate) fn check_subgroup_of(&self, g: &FiniteGroup) -> Result<()> {
        if self.parent_order() != g.order() {
            return Err(Error::NotASubgroup(format!(
                "member mask has length {} but {} has order {}",
                self.parent_order(),
                g.label(),
                g.order()
            )));
        }
        if !self.contains(g.identity()) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        // a * b^-1 in H for all a, b
        for &a in &self.members {
            for &b in &self.members {
                let q = g.mul(a, g.inv(b));
                if !self.contains(q) {
                    return Err(Error::NotASubgroup(format!("{a} * {b}^-1 = {q} is not a member")));
                }
            }
        }
        if !g.order().is_multiple_of(self.len()) {
            return Err(Error::NotASubgroup(format!(
                "size {} does not divide {}",
                self.len(),
                g.order()
            )));
        }
        Ok(())
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn parent_order(&self) -> usize {
        self.mask.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.mask.contains(x)
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    pub fn is_subgroup_of(&self, other: &SubgroupSet) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn intersection(&self, other: &SubgroupSet) -> SubgroupSet {
        let mut mask = self.mask.clone();
        mask.intersect_with(&other.mask);
        Self::from_mask(mask)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }
}

impl Ord for SubgroupSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for SubgroupSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SubgroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubgroupSet{self}")
    }
}

impl fmt::Display for SubgroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

// Closes `seed` (already a subgroup, or just the identity) under right
// multiplication by `gens`. In a finite group this is the generated subgroup.
fn close(g: &FiniteGroup, mut mask: FixedBitSet, mut list: Vec<usize>, gens: &[usize]) -> FixedBitSet {
    let mut i = 0;
    while i < list.len() {
        let row = g.row(list[i]);
        for &s in gens {
            let y = row[s] as usize;
            if !mask.put(y) {
                list.push(y);
            }
        }
        i += 1;
    }
    mask
}

fn generated_mask(g: &FiniteGroup, gens: &[usize]) -> FixedBitSet {
    let mut mask = FixedBitSet::with_capacity(g.order());
    mask.insert(g.identity());
    close(g, mask, vec![g.identity()], gens)
}

/// The smallest subgroup of `g` containing `gens`.
pub fn subgroup_generate(g: &FiniteGroup, gens: &[usize]) -> Result<SubgroupSet> {
    for &x in gens {
        g.check_index(x)?;
    }
    Ok(SubgroupSet::from_mask(generated_mask(g, gens)))
}

/// `<a ∪ b>`.
pub fn subgroup_join(g: &FiniteGroup, a: &SubgroupSet, b: &SubgroupSet) -> SubgroupSet {
    let gens: Vec<usize> = a.members().iter().chain(b.members()).copied().collect();
    SubgroupSet::from_mask(generated_mask(g, &gens))
}

/// Greedy generating set: repeatedly add the element whose adjunction
/// yields the largest subgroup (ties to the smallest index). Every step at
/// least doubles the generated subgroup, so the result has at most
/// `log2 |g|` elements.
pub fn small_generating_set(g: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut current = generated_mask(g, &[]);
    while current.count_ones(..) < g.order() {
        let seed: Vec<usize> = current.ones().collect();
        let mut best: Option<(usize, FixedBitSet)> = None;
        let mut tried = FixedBitSet::with_capacity(g.order());
        for x in g.elements() {
            if current.contains(x) || tried.contains(x) {
                continue;
            }
            let mut with_x = gens.clone();
            with_x.push(x);
            let next = close(g, current.clone(), seed.clone(), &with_x);
            let size = next.count_ones(..);
            // every element of the new coset H x gives the same subgroup
            for &h in &seed {
                tried.insert(g.mul(h, x));
            }
            if best.as_ref().is_none_or(|(_, b)| size > b.count_ones(..)) {
                best = Some((x, next));
            }
            if size == g.order() {
                break;
            }
        }
        let (x, next) = best.expect("a non-member exists while the subgroup is proper");
        gens.push(x);
        current = next;
    }
    gens
}

/// Every subgroup of `g`, sorted by `(size, members)`.
///
/// Cyclic extension: start from the cyclic subgroups and repeatedly join
/// each known subgroup with a cyclic subgroup it does not contain until no
/// new subgroup appears. Every subgroup is a join of cyclic subgroups, so
/// the search is complete.
pub fn all_subgroups(g: &FiniteGroup, bounds: &Bounds) -> Result<Vec<SubgroupSet>> {
    if g.order() > bounds.max_enumeration_order {
        return Err(Error::capacity(
            "subgroup enumeration group order",
            g.order(),
            bounds.max_enumeration_order,
        ));
    }

    // one generator per cyclic subgroup
    let mut cyclic: Vec<(usize, FixedBitSet)> = Vec::new();
    let mut seen: HashMap<FixedBitSet, usize> = HashMap::new();
    for x in g.elements() {
        let mask = generated_mask(g, &[x]);
        if !seen.contains_key(&mask) {
            seen.insert(mask.clone(), cyclic.len());
            cyclic.push((x, mask));
        }
    }

    let mut known: Vec<(FixedBitSet, Vec<usize>)> = cyclic
        .iter()
        .map(|(x, mask)| (mask.clone(), if *x == g.identity() { vec![] } else { vec![*x] }))
        .collect();
    let mut index: HashMap<FixedBitSet, usize> = seen;

    let mut next = 0;
    while next < known.len() {
        let (mask, gens) = known[next].clone();
        let members: Vec<usize> = mask.ones().collect();
        for (z, zmask) in &cyclic {
            if zmask.is_subset(&mask) {
                continue;
            }
            let mut ext = gens.clone();
            ext.push(*z);
            let joined = close(g, mask.clone(), members.clone(), &ext);
            if !index.contains_key(&joined) {
                index.insert(joined.clone(), known.len());
                known.push((joined, ext));
            }
        }
        next += 1;
    }

    let mut subgroups: Vec<SubgroupSet> = known.into_iter().map(|(m, _)| SubgroupSet::from_mask(m)).collect();
    subgroups.sort();
    Ok(subgroups)
}

/// `x h x⁻¹ ∈ H` for every `x ∈ g` and `h ∈ H`.
pub fn is_normal(g: &FiniteGroup, h: &SubgroupSet) -> bool {
    g.elements().all(|x| {
        let xi = g.inv(x);
        h.members().iter().all(|&m| h.contains(g.mul(g.mul(x, m), xi)))
    })
}

pub fn normal_subgroups(g: &FiniteGroup, bounds: &Bounds) -> Result<Vec<SubgroupSet>> {
    Ok(all_subgroups(g, bounds)?
        .into_iter()
        .filter(|h| is_normal(g, h))
        .collect())
}

/// Whether every subgroup of `g` is normal.
pub fn is_dedekind(g: &FiniteGroup, bounds: &Bounds) -> Result<bool> {
    Ok(all_subgroups(g, bounds)?.iter().all(|h| is_normal(g, h)))
}

/// `D = {(x, x)}` inside `s × s` (row-major product indexing).
pub fn diagonal_subgroup(s: &FiniteGroup) -> SubgroupSet {
    let n = s.order();
    SubgroupSet::from_members_unchecked(n * n, (0..n).map(|i| i * n + i))
}

/// `T1 = S × {1}` and `T2 = {1} × S` inside `s × s`.
pub fn factor_embeddings(s: &FiniteGroup) -> (SubgroupSet, SubgroupSet) {
    let n = s.order();
    let e = s.identity();
    (
        SubgroupSet::from_members_unchecked(n * n, (0..n).map(|i| i * n + e)),
        SubgroupSet::from_members_unchecked(n * n, (0..n).map(|j| e * n + j)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alternating, cyclic, dihedral, direct_product, quaternion, symmetric};

    fn sizes(v: &[SubgroupSet]) -> Vec<usize> {
        v.iter().map(SubgroupSet::len).collect()
    }

    #[test]
    fn generate_empty_is_trivial() {
        let s3 = symmetric(3).unwrap();
        let h = subgroup_generate(&s3, &[]).unwrap();
        assert_eq!(h.members(), &[0]);
    }

    #[test]
    fn transposition_and_three_cycle_generate_s3() {
        let s3 = symmetric(3).unwrap();
        let t = (0..6).find(|&x| s3.element_order(x) == 2).unwrap();
        let c = (0..6).find(|&x| s3.element_order(x) == 3).unwrap();
        assert_eq!(subgroup_generate(&s3, &[t, c]).unwrap().len(), 6);
        assert!(subgroup_generate(&s3, &[6]).is_err());
    }

    #[test]
    fn t1_and_diagonal_generate_everything() {
        let b = Bounds::default();
        let s3 = symmetric(3).unwrap();
        let g = direct_product(&s3, &s3, &b).unwrap();
        let (t1, t2) = factor_embeddings(&s3);
        let d = diagonal_subgroup(&s3);
        for (x, y) in [(&t1, &d), (&t1, &t2), (&d, &t2)] {
            assert_eq!(subgroup_join(&g, x, y).len(), 36);
            assert!(x.intersection(y).is_trivial());
        }
        assert_eq!(t1.len(), 6);
        assert_eq!(d.len(), 6);
        for h in [&t1, &t2, &d] {
            h.check_subgroup_of(&g).unwrap();
        }
    }

    #[test]
    fn subgroup_counts() {
        let b = Bounds::default();
        assert_eq!(sizes(&all_subgroups(&cyclic(1).unwrap(), &b).unwrap()), vec![1]);
        assert_eq!(
            sizes(&all_subgroups(&symmetric(3).unwrap(), &b).unwrap()),
            vec![1, 2, 2, 2, 3, 6]
        );
        assert_eq!(all_subgroups(&quaternion().unwrap(), &b).unwrap().len(), 6);
        assert_eq!(all_subgroups(&symmetric(4).unwrap(), &b).unwrap().len(), 30);
        assert_eq!(all_subgroups(&alternating(5).unwrap(), &b).unwrap().len(), 59);
    }

    #[test]
    fn enumeration_bound() {
        let b = Bounds {
            max_enumeration_order: 10,
            ..Bounds::default()
        };
        assert!(all_subgroups(&cyclic(12).unwrap(), &b).unwrap_err().is_capacity());
    }

    #[test]
    fn normality() {
        let b = Bounds::default();
        let s3 = symmetric(3).unwrap();
        let subs = all_subgroups(&s3, &b).unwrap();
        let normal: Vec<bool> = subs.iter().map(|h| is_normal(&s3, h)).collect();
        assert_eq!(normal, vec![true, false, false, false, true, true]);
        assert_eq!(normal_subgroups(&cyclic(2).unwrap(), &b).unwrap().len(), 2);
        assert_eq!(normal_subgroups(&alternating(5).unwrap(), &b).unwrap().len(), 2);
    }

    #[test]
    fn dedekind() {
        let b = Bounds::default();
        assert!(is_dedekind(&cyclic(6).unwrap(), &b).unwrap());
        assert!(is_dedekind(&quaternion().unwrap(), &b).unwrap());
        assert!(!is_dedekind(&symmetric(3).unwrap(), &b).unwrap());
        assert!(!is_dedekind(&dihedral(4).unwrap(), &b).unwrap());
    }

    #[test]
    fn generating_sets() {
        let b = Bounds::default();
        assert!(small_generating_set(&cyclic(1).unwrap()).is_empty());
        let s3 = symmetric(3).unwrap();
        let gens = small_generating_set(&s3);
        assert_eq!(gens.len(), 2);
        assert_eq!(subgroup_generate(&s3, &gens).unwrap().len(), 6);
        let g = direct_product(&s3, &s3, &b).unwrap();
        let gens = small_generating_set(&g);
        assert!(gens.len() <= 4);
        assert_eq!(subgroup_generate(&g, &gens).unwrap().len(), 36);
    }

    #[test]
    fn generating_set_of_a5_squared() {
        let b = Bounds::default();
        let a5 = alternating(5).unwrap();
        let g = direct_product(&a5, &a5, &b).unwrap();
        let gens = g.generators();
        assert!(gens.len() <= 11);
        assert_eq!(subgroup_generate(&g, gens).unwrap().len(), 3600);
    }

    #[test]
    fn from_members_rejects_non_subgroups() {
        let s3 = symmetric(3).unwrap();
        assert!(SubgroupSet::from_members(&s3, [0, 1, 2]).is_err());
        assert!(SubgroupSet::from_members(&s3, [1]).is_err());
        assert!(SubgroupSet::from_members(&s3, [0, 9]).is_err());
        assert!(SubgroupSet::from_members(&s3, [0]).is_ok());
    }
}
