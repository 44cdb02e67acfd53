//! Fast paths against the brute-force oracles.

use isotopy_core::algebra::{all_congruences, coset_gset, twisted_gset};
use isotopy_core::group::{
    all_subgroups, alternating, cyclic, dihedral, is_normal, quaternion, subgroup_generate, symmetric, FiniteGroup,
};
use isotopy_core::lattice::{lattice_from_poset, lattice_isomorphism, subgroup_lattice, FiniteLattice};
use isotopy_core::oracle::{congruences_by_partitions, isomorphism_by_permutations, subgroups_by_subsets};
use isotopy_core::Bounds;
use proptest::prelude::*;

/// Every built-in group of order at most 12.
fn small_builtins() -> Vec<FiniteGroup> {
    let mut gs: Vec<FiniteGroup> = (1..=12).map(|n| cyclic(n).unwrap()).collect();
    gs.extend((1..=6).map(|n| dihedral(n).unwrap()));
    gs.extend((1..=3).map(|n| symmetric(n).unwrap()));
    gs.extend((1..=4).map(|n| alternating(n).unwrap()));
    gs.push(quaternion().unwrap());
    gs
}

#[test]
fn subgroups_match_subset_oracle() {
    let b = Bounds::default();
    for g in small_builtins() {
        assert_eq!(
            all_subgroups(&g, &b).unwrap(),
            subgroups_by_subsets(&g).unwrap(),
            "{}",
            g.label()
        );
    }
}

#[test]
fn known_subgroup_counts() {
    let b = Bounds::default();
    let count = |g: FiniteGroup| all_subgroups(&g, &b).unwrap().len();
    assert_eq!(count(symmetric(3).unwrap()), 6);
    assert_eq!(count(quaternion().unwrap()), 6);
    assert_eq!(count(dihedral(4).unwrap()), 10);
    assert_eq!(count(alternating(4).unwrap()), 10);
    assert_eq!(count(cyclic(12).unwrap()), 6);
}

#[test]
fn generation_is_idempotent() {
    let b = Bounds::default();
    for g in small_builtins() {
        for h in all_subgroups(&g, &b).unwrap() {
            assert_eq!(subgroup_generate(&g, h.members()).unwrap(), h);
        }
    }
}

#[test]
fn normality_matches_conjugation_oracle() {
    let b = Bounds::default();
    for g in small_builtins() {
        for h in all_subgroups(&g, &b).unwrap() {
            let conj_closed = g.elements().all(|x| {
                let conj: Vec<usize> = {
                    let mut v: Vec<usize> = h.members().iter().map(|&m| g.mul(g.mul(x, m), g.inv(x))).collect();
                    v.sort_unstable();
                    v
                };
                conj == h.members()
            });
            assert_eq!(is_normal(&g, &h), conj_closed);
        }
    }
}

#[test]
fn congruences_match_partition_oracle() {
    let b = Bounds::default();
    let mut checked = 0;
    for g in small_builtins() {
        for h in all_subgroups(&g, &b).unwrap() {
            if g.order() / h.len() > 7 {
                continue;
            }
            let alg = coset_gset(&g, &h).unwrap();
            assert_eq!(
                all_congruences(&alg, &b).unwrap(),
                congruences_by_partitions(&alg).unwrap(),
                "{} / {h}",
                g.label()
            );
            checked += 1;
        }
    }
    for s in [cyclic(2).unwrap(), cyclic(3).unwrap(), symmetric(3).unwrap()] {
        let alg = twisted_gset(&s, &b).unwrap();
        assert_eq!(
            all_congruences(&alg, &b).unwrap(),
            congruences_by_partitions(&alg).unwrap()
        );
        checked += 1;
    }
    assert!(checked > 100);
}

#[test]
fn isomorphism_matches_permutation_oracle_on_subgroup_lattices() {
    let b = Bounds::default();
    let lattices: Vec<FiniteLattice<_>> = small_builtins()
        .iter()
        .map(|g| subgroup_lattice(g, &b).unwrap())
        .filter(|l| l.size() <= 7)
        .collect();
    for l1 in &lattices {
        for l2 in &lattices {
            let fast = lattice_isomorphism(l1, l2, &b).unwrap();
            let slow = isomorphism_by_permutations(l1, l2).unwrap();
            assert_eq!(fast.is_some(), slow.is_some());
        }
    }
}

// Random lattices of size <= 7: intersection-closed families of subsets of
// a 4-set that contain the empty and full sets.
fn closure_system(seeds: &[u8]) -> FiniteLattice<u8> {
    let mut sets = vec![0u8, 0xF];
    sets.extend(seeds.iter().map(|s| s & 0xF));
    loop {
        let n = sets.len();
        for i in 0..n {
            for j in 0..n {
                let m = sets[i] & sets[j];
                if !sets.contains(&m) {
                    sets.push(m);
                }
            }
        }
        if sets.len() == n {
            break;
        }
    }
    sets.sort_unstable();
    sets.dedup();
    lattice_from_poset(sets, |&a, &b| a & b == a).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn isomorphism_matches_permutation_oracle(
        s1 in proptest::collection::vec(any::<u8>(), 0..4),
        s2 in proptest::collection::vec(any::<u8>(), 0..4),
    ) {
        let (l1, l2) = (closure_system(&s1), closure_system(&s2));
        prop_assume!(l1.size() <= 7 && l2.size() <= 7);
        let fast = lattice_isomorphism(&l1, &l2, &Bounds::default()).unwrap();
        let slow = isomorphism_by_permutations(&l1, &l2).unwrap();
        prop_assert_eq!(fast.is_some(), slow.is_some());
    }

    #[test]
    fn filter_above_bottom_is_identity(seeds in proptest::collection::vec(any::<u8>(), 0..6)) {
        let l = closure_system(&seeds);
        let f = l.filter_above(l.bottom()).unwrap();
        prop_assert_eq!(f.elements(), l.elements());
        let id: Vec<usize> = (0..l.size()).collect();
        prop_assert!(isotopy_core::lattice::is_order_isomorphism(&l, &f, &id));
    }
}
