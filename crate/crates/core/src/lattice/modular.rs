use serde::{Deserialize, Serialize};

use super::FiniteLattice;

/// A pentagon sublattice `bottom < a < c < top`, `bottom < b < top` with `b`
/// incomparable to both `a` and `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct N5Witness {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub bottom: usize,
    pub top: usize,
}

impl N5Witness {
    pub fn indices(&self) -> [usize; 5] {
        [self.a, self.b, self.c, self.bottom, self.top]
    }

    /// Re-checks the pentagon against the lattice tables.
    pub fn verify<T>(&self, l: &FiniteLattice<T>) -> bool {
        let &N5Witness { a, b, c, bottom, top } = self;
        let n = l.size();
        if self.indices().iter().any(|&x| x >= n) {
            return false;
        }
        a != c
            && l.leq(a, c)
            && !l.comparable(a, b)
            && !l.comparable(b, c)
            && l.meet(a, b) == bottom
            && l.meet(c, b) == bottom
            && l.join(a, b) == top
            && l.join(c, b) == top
    }
}

/// The lexicographically smallest `(a, b, c)` spanning a pentagon, if any.
pub fn pentagon_witness<T>(l: &FiniteLattice<T>) -> Option<N5Witness> {
    let n = l.size();
    for a in 0..n {
        for b in (0..n).filter(|&b| !l.comparable(a, b)) {
            let (bottom, top) = (l.meet(a, b), l.join(a, b));
            // c must sit strictly between a and a ∨ b
            let hit = (0..n).find(|&c| {
                c != a
                    && l.leq(a, c)
                    && l.leq(c, top)
                    && !l.comparable(b, c)
                    && l.meet(c, b) == bottom
                    && l.join(c, b) == top
            });
            if let Some(c) = hit {
                return Some(N5Witness { a, b, c, bottom, top });
            }
        }
    }
    None
}

/// A finite lattice is modular iff it has no pentagon sublattice.
pub fn is_modular<T>(l: &FiniteLattice<T>) -> bool {
    pentagon_witness(l).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::fixtures::*;
    use proptest::prelude::*;

    fn modular_by_definition<T>(l: &FiniteLattice<T>) -> bool {
        let n = l.size();
        (0..n)
            .all(|a| (0..n).all(|c| !l.leq(a, c) || (0..n).all(|b| l.join(a, l.meet(b, c)) == l.meet(l.join(a, b), c))))
    }

    #[test]
    fn chains_and_diamond_are_modular() {
        for n in 1..6 {
            assert!(is_modular(&chain(n)));
        }
        assert!(is_modular(&diamond()));
        assert!(is_modular(&boolean(3)));
    }

    #[test]
    fn pentagon_is_its_own_witness() {
        let l = pentagon();
        let w = pentagon_witness(&l).unwrap();
        assert_eq!(
            w,
            N5Witness {
                a: 1,
                b: 3,
                c: 2,
                bottom: 0,
                top: 4
            }
        );
        assert!(w.verify(&l));
        let mut sorted = w.indices();
        sorted.sort_unstable();
        assert_eq!(sorted, [0, 1, 2, 3, 4]);
    }

    // Random lattices: down-closed families of subsets of a 4-set containing
    // the empty set and closed under intersection, ordered by inclusion.
    fn closure_system(seeds: &[u8]) -> FiniteLattice<u8> {
        let mut sets: Vec<u8> = vec![0, 0xF];
        sets.extend(seeds.iter().map(|s| s & 0xF));
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..sets.len() {
                for j in 0..sets.len() {
                    let m = sets[i] & sets[j];
                    if !sets.contains(&m) {
                        sets.push(m);
                        changed = true;
                    }
                }
            }
        }
        sets.sort_unstable();
        sets.dedup();
        crate::lattice::lattice_from_poset(sets, |&a, &b| a & b == a).unwrap()
    }

    proptest! {
        #[test]
        fn agrees_with_definition(seeds in proptest::collection::vec(any::<u8>(), 0..8)) {
            let l = closure_system(&seeds);
            let w = pentagon_witness(&l);
            prop_assert_eq!(w.is_none(), modular_by_definition(&l));
            if let Some(w) = w {
                prop_assert!(w.verify(&l));
            }
        }
    }
}
