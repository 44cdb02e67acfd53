use super::{FiniteGroup, SubgroupSet};
use crate::Result;

/// The left cosets `xH` of a subgroup, each represented by its smallest
/// member.
#[derive(Debug, Clone)]
pub struct LeftCosetSpace {
    subgroup: SubgroupSet,
    reps: Vec<usize>,
    coset_of: Vec<usize>,
}

impl LeftCosetSpace {
    pub fn subgroup(&self) -> &SubgroupSet {
        &self.subgroup
    }

    /// Number of cosets, i.e. the index `|G : H|`.
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn rep(&self, coset: usize) -> usize {
        self.reps[coset]
    }

    /// Index of the coset containing group element `x`.
    #[inline]
    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x]
    }

    /// The members `rep · h` of a coset, in subgroup-member order.
    pub fn members<'a>(&'a self, g: &'a FiniteGroup, coset: usize) -> impl Iterator<Item = usize> + 'a {
        let rep = self.reps[coset];
        self.subgroup.members().iter().map(move |&h| g.mul(rep, h))
    }
}

pub fn left_cosets(g: &FiniteGroup, h: &SubgroupSet) -> Result<LeftCosetSpace> {
    h.check_subgroup_of(g)?;
    let n = g.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::with_capacity(n / h.len());
    // scanning in ascending order makes each representative the coset minimum
    for x in 0..n {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &m in h.members() {
            coset_of[g.mul(x, m)] = id;
        }
    }
    Ok(LeftCosetSpace {
        subgroup: h.clone(),
        reps,
        coset_of,
    })
}
