use super::{lattice_from_poset, FiniteLattice};
use crate::group::{all_subgroups, normal_subgroups, FiniteGroup, SubgroupSet};
use crate::{Bounds, Result};

/// `Sub(g)` ordered by inclusion, elements in `(size, members)` order.
pub fn subgroup_lattice(g: &FiniteGroup, bounds: &Bounds) -> Result<FiniteLattice<SubgroupSet>> {
    lattice_from_poset(all_subgroups(g, bounds)?, SubgroupSet::is_subgroup_of)
}

/// `NSub(g)` ordered by inclusion.
pub fn normal_subgroup_lattice(g: &FiniteGroup, bounds: &Bounds) -> Result<FiniteLattice<SubgroupSet>> {
    lattice_from_poset(normal_subgroups(g, bounds)?, SubgroupSet::is_subgroup_of)
}
