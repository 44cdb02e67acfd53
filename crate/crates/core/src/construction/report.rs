use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{
    build_example, check_con_correspondence, check_diagonal_filter, symmetric_witness, verify_isotopy, Counterexample,
};
use crate::algebra::congruence_lattice;
use crate::group::{all_subgroups, is_normal, FiniteGroup};
use crate::lattice::{lattice_isomorphism, pentagon_witness, N5Witness};
use crate::{Bounds, Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

/// `Con(A × C)` is only computed for `|S|` up to this order.
pub const PRODUCT_GATE_ORDER: usize = 12;

#[derive(Debug, Clone, Default)]
pub struct ReportOptions {
    pub allow_dedekind: bool,
    pub skip_product: bool,
    pub timings: bool,
    pub bounds: Bounds,
}

/// A pipeline stage that either ran or was skipped for capacity reasons.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Stage<T> {
    Computed(T),
    Skipped { reason: String },
}

impl<T> Stage<T> {
    pub fn computed(&self) -> Option<&T> {
        match self {
            Stage::Computed(t) => Some(t),
            Stage::Skipped { .. } => None,
        }
    }

    fn skipped(reason: impl Into<String>) -> Self {
        Stage::Skipped { reason: reason.into() }
    }
}

// Capacity errors mark the stage as skipped; anything else is fatal.
fn stage<T>(r: Result<T>) -> Result<Stage<T>> {
    match r {
        Ok(t) => Ok(Stage::Computed(t)),
        Err(e @ Error::Capacity { .. }) => Ok(Stage::skipped(e.to_string())),
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub name: String,
    pub order: usize,
    pub abelian: bool,
    pub dedekind: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counts {
    pub subgroups: usize,
    pub normal_subgroups: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OperationCounts {
    /// Operations stored per algebra (one per element of `G`).
    pub total: usize,
    /// Operations used to close congruences (a generating set of `G`).
    pub used_for_computation: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IsotopySummary {
    pub well_defined: bool,
    pub homomorphism: bool,
    pub bijective: bool,
    pub second_coordinate_fixed: bool,
    pub isotopic: bool,
    /// The inverse table certifies `B ~_C A`.
    pub symmetric: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CongruenceCounts {
    pub con_a: usize,
    pub con_b: usize,
    pub con_c: usize,
    pub con_a_equals_sub: bool,
    pub con_b_equals_nsub: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LatticeComparison {
    pub sizes_equal: bool,
    pub isomorphic: bool,
    /// `"size"` when a size mismatch settled it, otherwise `"search"`.
    pub decided_by: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProductModularity {
    pub universe: usize,
    pub congruences: usize,
    pub modular: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n5_witness: Option<N5Witness>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagonalFilterSummary {
    pub filter_size: usize,
    pub nsub_size: usize,
    pub isomorphic: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrespondenceSummary {
    pub con_a_size: usize,
    pub filter_size: usize,
    pub isomorphic: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub passed: bool,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub group: GroupSummary,
    pub acting_group_order: usize,
    pub counts: Counts,
    pub operations: OperationCounts,
    pub isotopy: IsotopySummary,
    pub congruences: Stage<CongruenceCounts>,
    pub comparison: Stage<LatticeComparison>,
    pub product_modularity: Stage<ProductModularity>,
    pub diagonal_filter: Stage<DiagonalFilterSummary>,
    pub correspondence: Stage<CorrespondenceSummary>,
    pub notes: Vec<String>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict.passed
    }

    /// Expected outcomes: the isotopy always certifies; non-Dedekind groups
    /// give non-isomorphic lattices with `|Con B| < |Con A|` and a
    /// non-modular `Con(A × C)`; Dedekind groups give isomorphic lattices.
    fn judge(&self) -> Verdict {
        let mut failures = Vec::new();
        let iso = &self.isotopy;
        if !iso.isotopic {
            failures.push(format!("isotopy map failed: {:?}", iso.counterexample));
        }
        if !iso.symmetric {
            failures.push("inverse map does not certify B ~_C A".into());
        }
        match &self.congruences {
            Stage::Computed(c) => {
                if !c.con_a_equals_sub {
                    failures.push(format!(
                        "|Con A| = {} but |Sub(S)| = {}",
                        c.con_a, self.counts.subgroups
                    ));
                }
                if !c.con_b_equals_nsub {
                    failures.push(format!(
                        "|Con B| = {} but |NSub(S)| = {}",
                        c.con_b, self.counts.normal_subgroups
                    ));
                }
                if !self.group.dedekind && c.con_b >= c.con_a {
                    failures.push(format!("expected |Con B| < |Con A|, got {} vs {}", c.con_b, c.con_a));
                }
            }
            Stage::Skipped { reason } => failures.push(format!("congruence lattices not computed: {reason}")),
        }
        match &self.comparison {
            Stage::Computed(cmp) if self.group.dedekind && !cmp.isomorphic => {
                failures.push("Dedekind group but Con A and Con B are not isomorphic".into())
            }
            Stage::Computed(cmp) if !self.group.dedekind && cmp.isomorphic => {
                failures.push("non-Dedekind group but Con A and Con B are isomorphic".into())
            }
            Stage::Computed(_) => {}
            Stage::Skipped { reason } => failures.push(format!("lattice comparison not computed: {reason}")),
        }
        if let (Stage::Computed(m), Stage::Computed(cmp)) = (&self.product_modularity, &self.comparison) {
            if m.modular && !cmp.isomorphic {
                failures.push("Con(A x C) is modular yet Con A and Con B differ".into());
            }
        }
        if let Stage::Computed(l) = &self.diagonal_filter {
            if !l.isomorphic {
                failures.push("filter above D is not isomorphic to NSub(S)".into());
            }
        }
        if let Stage::Computed(c) = &self.correspondence {
            if !c.isomorphic {
                failures.push("Con A is not isomorphic to the filter above T1".into());
            }
        }
        Verdict {
            passed: failures.is_empty(),
            failures,
        }
    }
}

struct Clock {
    enabled: bool,
    laps: BTreeMap<String, f64>,
}

impl Clock {
    fn time<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.enabled {
            self.laps.insert(name.to_string(), start.elapsed().as_secs_f64() * 1e3);
        }
        out
    }
}

/// Runs the whole pipeline for `s` and aggregates the outcome.
///
/// Errors from building the example (Dedekind rejection, capacity limits on
/// `S` or `S × S`) are returned; capacity limits hit by later stages mark
/// those stages as skipped.
pub fn main_report(s: &FiniteGroup, opts: &ReportOptions) -> Result<VerificationReport> {
    let bounds = &opts.bounds;
    let mut clock = Clock {
        enabled: opts.timings,
        laps: BTreeMap::new(),
    };

    let subgroups = clock.time("subgroups", || all_subgroups(s, bounds))?;
    let normal = subgroups.iter().filter(|h| is_normal(s, h)).count();
    let bundle = clock.time("build", || build_example(s, opts.allow_dedekind, bounds))?;

    let witness = clock.time("isotopy", || verify_isotopy(&bundle))?;
    let symmetric = clock
        .time("isotopy_inverse", || symmetric_witness(&bundle, &witness))?
        .is_some_and(|w| w.certifies());

    let (con_a, con_b) = clock.time("congruences", || {
        rayon::join(
            || congruence_lattice(bundle.alg_a(), bounds),
            || congruence_lattice(bundle.alg_b(), bounds),
        )
    });
    let con_c = clock.time("congruences_c", || congruence_lattice(bundle.alg_c(), bounds));
    let (con_a, con_b, con_c) = (stage(con_a)?, stage(con_b)?, stage(con_c)?);

    let (congruences, comparison) = match (&con_a, &con_b, &con_c) {
        (Stage::Computed(la), Stage::Computed(lb), Stage::Computed(lc)) => {
            let counts = CongruenceCounts {
                con_a: la.size(),
                con_b: lb.size(),
                con_c: lc.size(),
                con_a_equals_sub: la.size() == subgroups.len(),
                con_b_equals_nsub: lb.size() == normal,
            };
            let comparison = if la.size() != lb.size() {
                Stage::Computed(LatticeComparison {
                    sizes_equal: false,
                    isomorphic: false,
                    decided_by: "size".into(),
                })
            } else {
                stage(clock.time("isomorphism", || lattice_isomorphism(la, lb, bounds)))?.map_computed(|iso| {
                    LatticeComparison {
                        sizes_equal: true,
                        isomorphic: iso.is_some(),
                        decided_by: "search".into(),
                    }
                })
            };
            (Stage::Computed(counts), comparison)
        }
        _ => {
            let reason = [&con_a.reason(), &con_b.reason(), &con_c.reason()]
                .into_iter()
                .flatten()
                .next()
                .cloned()
                .unwrap_or_default();
            (Stage::skipped(reason.clone()), Stage::skipped(reason))
        }
    };

    let product_modularity = if opts.skip_product {
        Stage::skipped("product congruences disabled")
    } else if s.order() > PRODUCT_GATE_ORDER {
        Stage::skipped(format!(
            "|S| = {} exceeds {PRODUCT_GATE_ORDER}; Con(A x C) is only computed for small S",
            s.order()
        ))
    } else {
        stage(clock.time("product_modularity", || -> Result<ProductModularity> {
            let ac = bundle.product_ac()?;
            let l = congruence_lattice(&ac, bounds)?;
            let n5 = pentagon_witness(&l);
            if let Some(w) = &n5 {
                if !w.verify(&l) {
                    return Err(Error::Verification("pentagon witness failed re-verification".into()));
                }
            }
            Ok(ProductModularity {
                universe: ac.universe_size(),
                congruences: l.size(),
                modular: n5.is_none(),
                n5_witness: n5,
            })
        }))?
    };

    let diagonal_filter =
        stage(clock.time("diagonal_filter", || check_diagonal_filter(s, bounds)))?.map_computed(|c| {
            DiagonalFilterSummary {
                filter_size: c.filter.size(),
                nsub_size: c.nsub.size(),
                isomorphic: c.holds(),
            }
        });
    let correspondence = stage(clock.time("correspondence", || {
        check_con_correspondence(bundle.g(), bundle.t1(), bounds)
    }))?
    .map_computed(|c| CorrespondenceSummary {
        con_a_size: c.congruences.size(),
        filter_size: c.filter.size(),
        isomorphic: c.holds(),
    });

    let mut report = VerificationReport {
        schema_version: SCHEMA_VERSION,
        group: GroupSummary {
            name: s.label().to_string(),
            order: s.order(),
            abelian: s.is_abelian(),
            dedekind: bundle.is_dedekind(),
        },
        acting_group_order: bundle.g().order(),
        counts: Counts {
            subgroups: subgroups.len(),
            normal_subgroups: normal,
        },
        operations: OperationCounts {
            total: bundle.alg_a().op_count(),
            used_for_computation: bundle.alg_a().compute_ops().len(),
        },
        isotopy: IsotopySummary {
            well_defined: witness.well_defined,
            homomorphism: witness.homomorphism,
            bijective: witness.bijective,
            second_coordinate_fixed: witness.second_coordinate_fixed,
            isotopic: witness.certifies(),
            symmetric,
            counterexample: witness.counterexample.clone(),
        },
        congruences,
        comparison,
        product_modularity,
        diagonal_filter,
        correspondence,
        notes: bundle.notes().to_vec(),
        verdict: Verdict {
            passed: false,
            failures: vec![],
        },
        timings_ms: opts.timings.then_some(clock.laps),
    };
    report.verdict = report.judge();
    Ok(report)
}

impl<T> Stage<T> {
    fn map_computed<U>(self, f: impl FnOnce(T) -> U) -> Stage<U> {
        match self {
            Stage::Computed(t) => Stage::Computed(f(t)),
            Stage::Skipped { reason } => Stage::Skipped { reason },
        }
    }

    fn reason(&self) -> Option<String> {
        match self {
            Stage::Computed(_) => None,
            Stage::Skipped { reason } => Some(reason.clone()),
        }
    }
}
