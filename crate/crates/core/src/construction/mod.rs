//! The isotopic pair built from a finite group `S`.
//!
//! With `G = S × S`, `T1 = S × 1`, `T2 = 1 × S` and the diagonal `D`:
//!
//! * `A = G/T1` and `C = G/T2` under left multiplication,
//! * `B = G/D` under the twisted action `(g1, g2)(x1, x2)D = (g2 x1, g1 x2)D`,
//! * `φ((x1, x2)T1, (y1, y2)T2) = ((x2, y1)D, (y1, y2)T2)` is an isomorphism
//!   `A × C -> B × C` fixing the second coordinate, so `A ~_C B`.
//!
//! `Con A` is isomorphic to `Sub(S)` while `Con B` is isomorphic to
//! `NSub(S)`, so the two differ whenever `S` has a non-normal subgroup.

mod report;

use serde::{Deserialize, Serialize};

use crate::algebra::{
    congruence_lattice, coset_gset_on, homomorphism_violation, product_algebra, twisted_gset_on, Partition,
    UnaryAlgebra,
};
use crate::group::{
    diagonal_subgroup, direct_product, factor_embeddings, is_dedekind, left_cosets, subgroup_join, FiniteGroup,
    LeftCosetSpace, SubgroupSet,
};
use crate::lattice::{lattice_isomorphism, normal_subgroup_lattice, subgroup_lattice, FiniteLattice};
use crate::{Bounds, Error, Result};

pub use report::{
    main_report, CongruenceCounts, CorrespondenceSummary, Counts, DiagonalFilterSummary, GroupSummary, IsotopySummary,
    LatticeComparison, OperationCounts, ProductModularity, ReportOptions, Stage, Verdict, VerificationReport,
    PRODUCT_GATE_ORDER, SCHEMA_VERSION,
};

#[derive(Debug, Clone)]
pub struct ExampleBundle {
    s: FiniteGroup,
    g: FiniteGroup,
    t1: SubgroupSet,
    t2: SubgroupSet,
    d: SubgroupSet,
    cosets_t1: LeftCosetSpace,
    cosets_t2: LeftCosetSpace,
    cosets_d: LeftCosetSpace,
    alg_a: UnaryAlgebra,
    alg_b: UnaryAlgebra,
    alg_c: UnaryAlgebra,
    dedekind: bool,
    notes: Vec<String>,
}

/// Builds `G`, `T1`, `T2`, `D` and the algebras `A`, `B`, `C` from `s`.
///
/// Dedekind groups are rejected unless `allow_dedekind` is set: for them
/// `Sub(S) = NSub(S)` and the congruence lattices coincide.
pub fn build_example(s: &FiniteGroup, allow_dedekind: bool, bounds: &Bounds) -> Result<ExampleBundle> {
    let dedekind = is_dedekind(s, bounds)?;
    if dedekind && !allow_dedekind {
        return Err(Error::DedekindGroupRejected {
            group: s.label().to_string(),
        });
    }

    let g = direct_product(s, s, bounds)?;
    let (t1, t2) = factor_embeddings(s);
    let d = diagonal_subgroup(s);
    for (x, y, names) in [(&t1, &d, "T1, D"), (&d, &t2, "D, T2"), (&t1, &t2, "T1, T2")] {
        if !x.intersection(y).is_trivial() {
            return Err(Error::Verification(format!("{names} intersect non-trivially")));
        }
        if subgroup_join(&g, x, y).len() != g.order() {
            return Err(Error::Verification(format!("{names} do not generate G")));
        }
    }

    let cosets_t1 = left_cosets(&g, &t1)?;
    let cosets_t2 = left_cosets(&g, &t2)?;
    let cosets_d = left_cosets(&g, &d)?;
    let alg_a = coset_gset_on(&g, &cosets_t1)?;
    let alg_c = coset_gset_on(&g, &cosets_t2)?;
    let alg_b = twisted_gset_on(s, &g, &cosets_d)?;
    for alg in [&alg_a, &alg_b, &alg_c] {
        debug_assert_eq!(alg.universe_size(), s.order());
    }

    let mut notes = vec![format!(
        "G = {0} of order {1}; A = G/T1, C = G/T2, B = G/D with the twisted action",
        g.label(),
        g.order()
    )];
    if dedekind {
        notes.push(format!(
            "{} is a Dedekind group; Con A and Con B are expected to be isomorphic",
            s.label()
        ));
    }

    Ok(ExampleBundle {
        s: s.clone(),
        g,
        t1,
        t2,
        d,
        cosets_t1,
        cosets_t2,
        cosets_d,
        alg_a,
        alg_b,
        alg_c,
        dedekind,
        notes,
    })
}

impl ExampleBundle {
    pub fn s(&self) -> &FiniteGroup {
        &self.s
    }

    pub fn g(&self) -> &FiniteGroup {
        &self.g
    }

    pub fn t1(&self) -> &SubgroupSet {
        &self.t1
    }

    pub fn t2(&self) -> &SubgroupSet {
        &self.t2
    }

    pub fn d(&self) -> &SubgroupSet {
        &self.d
    }

    pub fn cosets_t1(&self) -> &LeftCosetSpace {
        &self.cosets_t1
    }

    pub fn cosets_t2(&self) -> &LeftCosetSpace {
        &self.cosets_t2
    }

    pub fn cosets_d(&self) -> &LeftCosetSpace {
        &self.cosets_d
    }

    pub fn alg_a(&self) -> &UnaryAlgebra {
        &self.alg_a
    }

    pub fn alg_b(&self) -> &UnaryAlgebra {
        &self.alg_b
    }

    pub fn alg_c(&self) -> &UnaryAlgebra {
        &self.alg_c
    }

    pub fn is_dedekind(&self) -> bool {
        self.dedekind
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    /// φ evaluated on explicit representatives `x ∈ xT1`, `y ∈ yT2` (group
    /// elements of `G`), returning coset indices in `G/D` and `G/T2`.
    pub fn phi_from_reps(&self, x: usize, y: usize) -> (usize, usize) {
        let n = self.s.order();
        let x2 = x % n;
        let y1 = y / n;
        (self.cosets_d.coset_of(x2 * n + y1), self.cosets_t2.coset_of(y))
    }

    /// φ on coset indices, computed from the canonical representatives.
    pub fn phi(&self, x_coset: usize, y_coset: usize) -> (usize, usize) {
        self.phi_from_reps(self.cosets_t1.rep(x_coset), self.cosets_t2.rep(y_coset))
    }

    pub fn product_ac(&self) -> Result<UnaryAlgebra> {
        product_algebra(&self.alg_a, &self.alg_c)
    }

    pub fn product_bc(&self) -> Result<UnaryAlgebra> {
        product_algebra(&self.alg_b, &self.alg_c)
    }
}

/// Free-standing form of [`ExampleBundle::phi`].
pub fn phi(bundle: &ExampleBundle, x_coset: usize, y_coset: usize) -> (usize, usize) {
    bundle.phi(x_coset, y_coset)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    /// Two representatives of the same input pair disagree.
    NotWellDefined {
        a: usize,
        c: usize,
        x: usize,
        y: usize,
    },
    NotHomomorphism {
        label: usize,
        point: usize,
    },
    NotInjective {
        first: usize,
        second: usize,
        image: usize,
    },
    SecondCoordinateMoved {
        point: usize,
        image: usize,
    },
    WrongSize {
        domain: usize,
        codomain: usize,
    },
}

/// The table of a candidate isotopy `A × C -> B × C` and its checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotopyWitness {
    pub map: Vec<usize>,
    pub well_defined: bool,
    pub homomorphism: bool,
    pub bijective: bool,
    pub second_coordinate_fixed: bool,
    pub counterexample: Option<Counterexample>,
}

impl IsotopyWitness {
    /// All four checks pass, so the map witnesses `A ~_C B`.
    pub fn certifies(&self) -> bool {
        self.well_defined && self.homomorphism && self.bijective && self.second_coordinate_fixed
    }

    pub fn inverse(&self) -> Option<Vec<usize>> {
        if !self.bijective {
            return None;
        }
        let mut inv = vec![0; self.map.len()];
        for (p, &q) in self.map.iter().enumerate() {
            inv[q] = p;
        }
        Some(inv)
    }
}

/// Checks a map table `domain -> codomain` between products `X × C` and
/// `Y × C`, where `second` is `|C|`: homomorphism, bijectivity and that the
/// `C` coordinate is untouched. The map is taken as given, so
/// `well_defined` is always true here.
pub fn certify_map(map: &[usize], domain: &UnaryAlgebra, codomain: &UnaryAlgebra, second: usize) -> IsotopyWitness {
    let mut w = IsotopyWitness {
        map: map.to_vec(),
        well_defined: true,
        homomorphism: false,
        bijective: false,
        second_coordinate_fixed: false,
        counterexample: None,
    };
    let (m, k) = (domain.universe_size(), codomain.universe_size());
    if map.len() != m || m != k || map.iter().any(|&q| q >= k) || domain.labels() != codomain.labels() {
        w.counterexample = Some(Counterexample::WrongSize { domain: m, codomain: k });
        return w;
    }

    let mut first_hit = vec![usize::MAX; k];
    let mut collision = None;
    for (p, &q) in map.iter().enumerate() {
        if first_hit[q] != usize::MAX {
            collision.get_or_insert(Counterexample::NotInjective {
                first: first_hit[q],
                second: p,
                image: q,
            });
        } else {
            first_hit[q] = p;
        }
    }
    let moved = (0..m).find(|&p| map[p] % second != p % second);
    let violation = homomorphism_violation(map, domain, codomain);

    w.bijective = collision.is_none();
    w.second_coordinate_fixed = moved.is_none();
    w.homomorphism = violation.is_none();
    w.counterexample = violation
        .map(|(label, point)| Counterexample::NotHomomorphism { label, point })
        .or(collision)
        .or(moved.map(|point| Counterexample::SecondCoordinateMoved {
            point,
            image: map[point],
        }));
    w
}

/// Builds the full table of φ and verifies it: independence of the chosen
/// representatives (exhaustively over every representative pair), the
/// homomorphism property against `B × C`, injectivity (hence bijectivity,
/// since `|A × C| = |B × C|`) and preservation of the second coordinate.
pub fn verify_isotopy(bundle: &ExampleBundle) -> Result<IsotopyWitness> {
    let (na, nc) = (bundle.alg_a.universe_size(), bundle.alg_c.universe_size());
    let g = &bundle.g;

    let mut not_well_defined = None;
    let mut map = Vec::with_capacity(na * nc);
    for a in 0..na {
        for c in 0..nc {
            let (b, c2) = bundle.phi(a, c);
            map.push(b * nc + c2);
            if not_well_defined.is_some() {
                continue;
            }
            'reps: for x in bundle.cosets_t1.members(g, a) {
                for y in bundle.cosets_t2.members(g, c) {
                    if bundle.phi_from_reps(x, y) != (b, c2) {
                        not_well_defined = Some(Counterexample::NotWellDefined { a, c, x, y });
                        break 'reps;
                    }
                }
            }
        }
    }

    let ac = bundle.product_ac()?;
    let bc = bundle.product_bc()?;
    let mut w = certify_map(&map, &ac, &bc, nc);
    if let Some(cx) = not_well_defined {
        w.well_defined = false;
        w.counterexample = Some(cx);
    }
    Ok(w)
}

/// Certifies the inverse of `witness` as a map `B × C -> A × C`, i.e. the
/// symmetric relation `B ~_C A`.
pub fn symmetric_witness(bundle: &ExampleBundle, witness: &IsotopyWitness) -> Result<Option<IsotopyWitness>> {
    let Some(inv) = witness.inverse() else {
        return Ok(None);
    };
    let ac = bundle.product_ac()?;
    let bc = bundle.product_bc()?;
    Ok(Some(certify_map(&inv, &bc, &ac, bundle.alg_c.universe_size())))
}

#[derive(Debug, Clone)]
pub struct DiagonalFilterCheck {
    pub filter: FiniteLattice<SubgroupSet>,
    pub nsub: FiniteLattice<SubgroupSet>,
    pub isomorphism: Option<Vec<usize>>,
}

impl DiagonalFilterCheck {
    pub fn holds(&self) -> bool {
        self.isomorphism.is_some()
    }
}

/// Compares the filter above the diagonal in `Sub(S × S)` with `NSub(S)`.
/// Only abstract isomorphism is checked; no explicit map is assumed.
pub fn check_diagonal_filter(s: &FiniteGroup, bounds: &Bounds) -> Result<DiagonalFilterCheck> {
    let g = direct_product(s, s, bounds)?;
    let sub = subgroup_lattice(&g, bounds)?;
    let d = diagonal_subgroup(s);
    let at = sub
        .position(|h| *h == d)
        .ok_or_else(|| Error::Verification("diagonal missing from the subgroup lattice".into()))?;
    let filter = sub.filter_above(at)?;
    let nsub = normal_subgroup_lattice(s, bounds)?;
    let isomorphism = lattice_isomorphism(&filter, &nsub, bounds)?;
    Ok(DiagonalFilterCheck {
        filter,
        nsub,
        isomorphism,
    })
}

#[derive(Debug, Clone)]
pub struct CorrespondenceCheck {
    pub congruences: FiniteLattice<Partition>,
    pub filter: FiniteLattice<SubgroupSet>,
    pub isomorphism: Option<Vec<usize>>,
}

impl CorrespondenceCheck {
    pub fn holds(&self) -> bool {
        self.isomorphism.is_some()
    }
}

/// Compares `Con(G/H)` with the filter above `H` in `Sub(G)`.
pub fn check_con_correspondence(g: &FiniteGroup, h: &SubgroupSet, bounds: &Bounds) -> Result<CorrespondenceCheck> {
    let cosets = left_cosets(g, h)?;
    let congruences = congruence_lattice(&coset_gset_on(g, &cosets)?, bounds)?;
    let sub = subgroup_lattice(g, bounds)?;
    let at = sub
        .position(|k| k == h)
        .ok_or_else(|| Error::Verification("subgroup missing from the subgroup lattice".into()))?;
    let filter = sub.filter_above(at)?;
    let isomorphism = lattice_isomorphism(&congruences, &filter, bounds)?;
    Ok(CorrespondenceCheck {
        congruences,
        filter,
        isomorphism,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alternating, cyclic, quaternion, symmetric};

    fn s3_bundle() -> ExampleBundle {
        build_example(&symmetric(3).unwrap(), false, &Bounds::default()).unwrap()
    }

    #[test]
    fn s3_bundle_shape() {
        let b = s3_bundle();
        assert_eq!(b.g().order(), 36);
        for alg in [b.alg_a(), b.alg_b(), b.alg_c()] {
            assert_eq!(alg.universe_size(), 6);
        }
        assert!(!b.is_dedekind());
    }

    #[test]
    fn q8_is_rejected_unless_forced() {
        let q8 = quaternion().unwrap();
        let err = build_example(&q8, false, &Bounds::default()).unwrap_err();
        assert!(matches!(err, Error::DedekindGroupRejected { ref group } if group == "Q8"));
        assert!(build_example(&q8, true, &Bounds::default()).unwrap().is_dedekind());
    }

    #[test]
    fn phi_basics() {
        let b = s3_bundle();
        // the identity lies in coset 0 of every coset space
        assert_eq!(phi(&b, 0, 0), (0, 0));
        for a in 0..6 {
            for c in 0..6 {
                assert_eq!(b.phi(a, c).1, c);
            }
        }
    }

    #[test]
    fn phi_is_independent_of_representatives() {
        let b = s3_bundle();
        let g = b.g();
        let mut checked = 0;
        for a in 0..6 {
            for c in 0..6 {
                let expected = b.phi(a, c);
                for x in b.cosets_t1().members(g, a) {
                    for y in b.cosets_t2().members(g, c) {
                        assert_eq!(b.phi_from_reps(x, y), expected);
                        checked += 1;
                    }
                }
            }
        }
        assert_eq!(checked, 36 * 36);
    }

    #[test]
    fn s3_isotopy_certifies_both_ways() {
        let b = s3_bundle();
        let w = verify_isotopy(&b).unwrap();
        assert!(w.certifies(), "{:?}", w.counterexample);
        let back = symmetric_witness(&b, &w).unwrap().unwrap();
        assert!(back.certifies());
    }

    #[test]
    fn abelian_case_still_certifies() {
        let b = build_example(&cyclic(2).unwrap(), true, &Bounds::default()).unwrap();
        assert!(verify_isotopy(&b).unwrap().certifies());
    }

    #[test]
    fn corrupted_maps_are_caught() {
        let b = s3_bundle();
        let w = verify_isotopy(&b).unwrap();
        let (ac, bc) = (b.product_ac().unwrap(), b.product_bc().unwrap());

        let mut swapped = w.map.clone();
        swapped.swap(0, 1);
        let bad = certify_map(&swapped, &ac, &bc, 6);
        assert!(!bad.homomorphism);
        assert!(bad.counterexample.is_some());

        let mut collapsed = w.map.clone();
        collapsed[1] = collapsed[0];
        let bad = certify_map(&collapsed, &ac, &bc, 6);
        assert!(!bad.bijective);
        assert!(!bad.certifies());

        // B-coordinate swap keeps the second coordinate but breaks equivariance
        let mut shuffled = w.map.clone();
        let (p, q) = (0, (0..36).find(|&q| w.map[q] % 6 == w.map[0] % 6 && q != 0).unwrap());
        shuffled.swap(p, q);
        let bad = certify_map(&shuffled, &ac, &bc, 6);
        assert!(bad.second_coordinate_fixed && bad.bijective);
        assert!(!bad.homomorphism);
    }

    #[test]
    fn diagonal_filter_small_cases() {
        let bounds = Bounds::default();
        let c1 = check_diagonal_filter(&cyclic(1).unwrap(), &bounds).unwrap();
        assert_eq!((c1.filter.size(), c1.nsub.size()), (1, 1));
        assert!(c1.holds());
        let s3 = check_diagonal_filter(&symmetric(3).unwrap(), &bounds).unwrap();
        assert_eq!((s3.filter.size(), s3.nsub.size()), (3, 3));
        assert!(s3.filter.is_chain() && s3.holds());
    }

    #[test]
    fn diagonal_filter_a4() {
        let bounds = Bounds {
            max_enumeration_order: 144,
            ..Bounds::default()
        };
        let a4 = check_diagonal_filter(&alternating(4).unwrap(), &bounds).unwrap();
        assert_eq!((a4.filter.size(), a4.nsub.size()), (3, 3));
        assert!(a4.holds());
    }

    #[test]
    fn correspondence_small_cases() {
        let bounds = Bounds::default();
        let s3 = symmetric(3).unwrap();
        let all = crate::group::subgroup_generate(&s3, &[1, 3]).unwrap();
        let top = check_con_correspondence(&s3, &all, &bounds).unwrap();
        assert_eq!((top.congruences.size(), top.filter.size()), (1, 1));
        let trivial = crate::group::subgroup_generate(&s3, &[]).unwrap();
        let regular = check_con_correspondence(&s3, &trivial, &bounds).unwrap();
        assert_eq!(regular.congruences.size(), 6);
        assert!(regular.holds());

        let b = s3_bundle();
        let t1 = check_con_correspondence(b.g(), b.t1(), &bounds).unwrap();
        assert_eq!(t1.filter.size(), 6);
        assert!(t1.holds());
    }
}
