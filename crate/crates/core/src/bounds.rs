use serde::{Deserialize, Serialize};

/// Size limits for every enumeration kernel.
///
/// All kernels fail with [`crate::Error::Capacity`] rather than running away
/// when an input exceeds its bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// Largest group order that may be constructed (direct products included).
    pub max_group_order: usize,
    /// Groups up to this order get an exhaustive O(n³) associativity check.
    pub assoc_check_order: usize,
    /// Forces the exhaustive associativity check regardless of order.
    pub force_assoc_check: bool,
    /// Largest group order for which all subgroups are enumerated.
    pub max_enumeration_order: usize,
    /// Largest universe for which all congruences are computed.
    pub max_universe: usize,
    /// Largest congruence lattice the join closure may grow to.
    pub max_congruences: usize,
    /// Largest lattice accepted by the isomorphism search.
    pub max_lattice: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_group_order: 3600,
            assoc_check_order: 256,
            force_assoc_check: false,
            max_enumeration_order: 120,
            max_universe: 128,
            max_congruences: 4096,
            max_lattice: 256,
        }
    }
}
