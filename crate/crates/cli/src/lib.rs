//! Driver behind the `isotopy` binary.
//!
//! [`run`] takes parsed arguments and writes to the given streams, so the
//! binary is a thin wrapper and everything here is testable in-process.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use isotopy_core::algebra::{all_congruences, congruence_lattice, coset_gset, UnaryAlgebra};
use isotopy_core::construction::{build_example, main_report, ReportOptions, Stage, PRODUCT_GATE_ORDER};
use isotopy_core::group::{all_subgroups, is_normal};
use isotopy_core::lattice::{lattice_isomorphism, normal_subgroup_lattice, subgroup_lattice};
use isotopy_core::oracle::{
    congruences_by_partitions, isomorphism_by_permutations, subgroups_by_subsets, MAX_PARTITION_ORACLE_UNIVERSE,
    MAX_PERMUTATION_ORACLE_SIZE, MAX_SUBSET_ORACLE_ORDER,
};
use isotopy_core::{Bounds, Error, FiniteGroup, FiniteLattice, VerificationReport};

mod spec;

pub use spec::{parse_group_spec, Family, GroupSpec, SpecError};

/// Process exit codes. These are part of the command-line interface and do
/// not change between releases.
pub mod exit {
    pub const OK: i32 = 0;
    /// A verdict did not hold, or an oracle disagreed with a fast path.
    pub const VERIFICATION_FAILED: i32 = 1;
    /// Bad arguments or an unparseable group spec.
    pub const USAGE: i32 = 2;
    /// An input exceeded a configured bound.
    pub const CAPACITY: i32 = 3;
    /// A Dedekind group was given without `--allow-dedekind`.
    pub const DEDEKIND_REJECTED: i32 = 4;
    pub const IO: i32 = 5;
    /// A Cayley table file that does not describe a group.
    pub const INVALID_INPUT: i32 = 6;
}

#[derive(Debug, Parser)]
#[command(
    name = "isotopy",
    version,
    about = "Build and verify isotopic coset algebras with different congruence lattices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the full pipeline on S and report every check.
    Verify { spec: GroupSpec },
    /// Write Hasse diagrams (DOT) of Sub(S), NSub(S), Con A, Con B and Con(A x C).
    Lattices { spec: GroupSpec },
    /// Compare the fast kernels against brute-force oracles on S.
    Oracle { spec: GroupSpec },
    /// List the subgroups of S.
    Subgroups { spec: GroupSpec },
    /// List the congruences of one of the constructed algebras.
    Congruences {
        spec: GroupSpec,
        #[arg(long, value_enum, default_value_t = Which::A)]
        algebra: Which,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    A,
    B,
    C,
    Product,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Options {
    /// Build the construction for Dedekind groups too.
    #[arg(long, global = true)]
    pub allow_dedekind: bool,
    /// Do not compute Con(A x C).
    #[arg(long, global = true)]
    pub skip_product: bool,
    /// Largest group order whose subgroups are enumerated.
    #[arg(long, global = true, value_name = "N")]
    pub max_order: Option<usize>,
    /// Largest group order that may be constructed, products included.
    #[arg(long, global = true, value_name = "N")]
    pub max_group_order: Option<usize>,
    /// Largest algebra universe whose congruences are computed.
    #[arg(long, global = true, value_name = "N")]
    pub max_universe: Option<usize>,
    /// Largest number of congruences computed for one algebra.
    #[arg(long, global = true, value_name = "N")]
    pub max_congruences: Option<usize>,
    /// Largest lattice accepted by the isomorphism search.
    #[arg(long, global = true, value_name = "N")]
    pub max_lattice: Option<usize>,
    /// Output directory (report.json for verify; DOT files for lattices).
    #[arg(long, global = true, value_name = "DIR")]
    pub out: Option<PathBuf>,
    /// Leave wall-clock timings out of the report.
    #[arg(long, global = true)]
    pub no_timings: bool,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

impl Options {
    pub fn bounds(&self) -> Bounds {
        let mut b = Bounds::default();
        let set = |slot: &mut usize, v: Option<usize>| {
            if let Some(v) = v {
                *slot = v;
            }
        };
        set(&mut b.max_enumeration_order, self.max_order);
        set(&mut b.max_group_order, self.max_group_order);
        set(&mut b.max_universe, self.max_universe);
        set(&mut b.max_congruences, self.max_congruences);
        set(&mut b.max_lattice, self.max_lattice);
        b
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_group_spec(s)
    }
}

#[derive(Debug)]
enum Failure {
    Core(Error),
    Usage(String),
    Write(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Write(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Write(e.into())
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Capacity { .. } => exit::CAPACITY,
        Error::DedekindGroupRejected { .. } => exit::DEDEKIND_REJECTED,
        Error::Io(_) => exit::IO,
        Error::InvalidGroup(_) | Error::CayleyParse { .. } => exit::INVALID_INPUT,
        _ => exit::VERIFICATION_FAILED,
    }
}

/// Runs one command and returns the process exit code. Diagnostics go to
/// `err`; results go to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Verify { spec } => verify(spec, &cli.opts, out, err),
        Command::Lattices { spec } => lattices(spec, &cli.opts, out),
        Command::Oracle { spec } => oracle(spec, &cli.opts, out),
        Command::Subgroups { spec } => subgroups(spec, &cli.opts, out),
        Command::Congruences { spec, algebra } => congruences(spec, *algebra, &cli.opts, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Core(e @ Error::DedekindGroupRejected { .. }) => (
                    exit::DEDEKIND_REJECTED,
                    format!("{}\nhint: rerun with --allow-dedekind to build it as a control", dedekind_message(&e)),
                ),
                Failure::Core(e @ Error::Capacity { .. }) => (
                    exit::CAPACITY,
                    format!("{e}\nhint: raise the bound with --max-order, --max-universe, --max-congruences or --max-lattice"),
                ),
                Failure::Core(e) => (exit_code(&e), e.to_string()),
                Failure::Usage(m) => (exit::USAGE, m),
                Failure::Write(e) => (exit::IO, e.to_string()),
            };
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn dedekind_message(e: &Error) -> String {
    match e {
        Error::DedekindGroupRejected { group } => format!(
            "{group} is a Dedekind group: every subgroup is normal, so Sub and NSub coincide and \
             Con A and Con B would be isomorphic"
        ),
        _ => e.to_string(),
    }
}

fn load(spec: &GroupSpec, bounds: &Bounds) -> Result<FiniteGroup, Failure> {
    Ok(spec.build(bounds)?)
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn verify(spec: &GroupSpec, opts: &Options, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let bounds = opts.bounds();
    let s = load(spec, &bounds)?;
    let report = main_report(
        &s,
        &ReportOptions {
            allow_dedekind: opts.allow_dedekind,
            skip_product: opts.skip_product,
            timings: !opts.no_timings,
            bounds,
        },
    )?;
    if opts.json {
        write_json(out, &report)?;
    } else {
        write_summary(out, &report)?;
    }
    if let Some(dir) = &opts.out {
        fs::create_dir_all(dir)?;
        let mut text = serde_json::to_string_pretty(&report)?;
        text.push('\n');
        fs::write(dir.join("report.json"), text)?;
    }
    if report.passed() {
        Ok(exit::OK)
    } else {
        for f in &report.verdict.failures {
            writeln!(err, "failed: {f}")?;
        }
        Ok(exit::VERIFICATION_FAILED)
    }
}

fn write_summary(out: &mut dyn Write, r: &VerificationReport) -> io::Result<()> {
    let g = &r.group;
    let class = if g.dedekind { "Dedekind" } else { "non-Dedekind" };
    writeln!(out, "group {} (order {}, {class})", g.name, g.order)?;
    writeln!(
        out,
        "subgroups {}, normal {}",
        r.counts.subgroups, r.counts.normal_subgroups
    )?;
    writeln!(
        out,
        "operations {} ({} used for congruence generation)",
        r.operations.total, r.operations.used_for_computation
    )?;
    let i = &r.isotopy;
    writeln!(
        out,
        "phi: well-defined {}, homomorphism {}, bijective {}, second coordinate fixed {}, inverse certifies {}",
        yes(i.well_defined),
        yes(i.homomorphism),
        yes(i.bijective),
        yes(i.second_coordinate_fixed),
        yes(i.symmetric)
    )?;
    match &r.congruences {
        Stage::Computed(c) => writeln!(
            out,
            "|Con A| = {}, |Con B| = {}, |Con C| = {}",
            c.con_a, c.con_b, c.con_c
        )?,
        Stage::Skipped { reason } => writeln!(out, "congruences skipped: {reason}")?,
    }
    match &r.comparison {
        Stage::Computed(c) => writeln!(
            out,
            "Con A isomorphic to Con B: {} (by {})",
            yes(c.isomorphic),
            c.decided_by
        )?,
        Stage::Skipped { reason } => writeln!(out, "comparison skipped: {reason}")?,
    }
    match &r.product_modularity {
        Stage::Computed(p) => {
            write!(
                out,
                "Con(A x C): {} congruences on {} points, modular {}",
                p.congruences,
                p.universe,
                yes(p.modular)
            )?;
            if let Some(w) = &p.n5_witness {
                write!(out, ", N5 at {:?}", w.indices())?;
            }
            writeln!(out)?;
        }
        Stage::Skipped { reason } => writeln!(out, "Con(A x C) skipped: {reason}")?,
    }
    match &r.diagonal_filter {
        Stage::Computed(l) => writeln!(
            out,
            "filter above D: {} elements, NSub(S): {}, isomorphic {}",
            l.filter_size,
            l.nsub_size,
            yes(l.isomorphic)
        )?,
        Stage::Skipped { reason } => writeln!(out, "filter above D skipped: {reason}")?,
    }
    match &r.correspondence {
        Stage::Computed(c) => writeln!(
            out,
            "Con A vs filter above T1: {} and {}, isomorphic {}",
            c.con_a_size,
            c.filter_size,
            yes(c.isomorphic)
        )?,
        Stage::Skipped { reason } => writeln!(out, "filter above T1 skipped: {reason}")?,
    }
    for n in &r.notes {
        writeln!(out, "note: {n}")?;
    }
    writeln!(out, "verdict: {}", if r.passed() { "PASS" } else { "FAIL" })
}

#[derive(Serialize)]
struct DiagramEntry {
    file: String,
    nodes: usize,
    edges: usize,
}

fn lattices(spec: &GroupSpec, opts: &Options, out: &mut dyn Write) -> Result<i32, Failure> {
    let Some(dir) = &opts.out else {
        return Err(Failure::Usage("lattices needs --out DIR".into()));
    };
    let bounds = opts.bounds();
    let s = load(spec, &bounds)?;
    let bundle = build_example(&s, opts.allow_dedekind, &bounds)?;

    let mut diagrams: Vec<(&str, String, usize, usize)> = Vec::new();
    let mut add =
        |name: &'static str, l_dot: String, nodes: usize, edges: usize| diagrams.push((name, l_dot, nodes, edges));
    let sub = subgroup_lattice(&s, &bounds)?;
    add("sub.dot", sub.to_dot(), sub.size(), sub.cover_count());
    let nsub = normal_subgroup_lattice(&s, &bounds)?;
    add("nsub.dot", nsub.to_dot(), nsub.size(), nsub.cover_count());
    let con_a = congruence_lattice(bundle.alg_a(), &bounds)?;
    add("con_a.dot", con_a.to_dot(), con_a.size(), con_a.cover_count());
    let con_b = congruence_lattice(bundle.alg_b(), &bounds)?;
    add("con_b.dot", con_b.to_dot(), con_b.size(), con_b.cover_count());
    let mut skipped = None;
    if !opts.skip_product && s.order() <= PRODUCT_GATE_ORDER {
        match congruence_lattice(&bundle.product_ac()?, &bounds) {
            Ok(l) => add("con_ac.dot", l.to_dot(), l.size(), l.cover_count()),
            Err(e @ Error::Capacity { .. }) => skipped = Some(format!("con_ac.dot skipped: {e}")),
            Err(e) => return Err(e.into()),
        }
    }

    fs::create_dir_all(dir)?;
    let mut entries = Vec::new();
    for (name, dot, nodes, edges) in diagrams {
        fs::write(dir.join(name), dot)?;
        entries.push(DiagramEntry {
            file: display_path(&dir.join(name)),
            nodes,
            edges,
        });
    }
    if opts.json {
        write_json(out, &entries)?;
    } else {
        for e in &entries {
            writeln!(out, "wrote {} ({} nodes, {} edges)", e.file, e.nodes, e.edges)?;
        }
        if let Some(note) = skipped {
            writeln!(out, "{note}")?;
        }
    }
    Ok(exit::OK)
}

fn display_path(p: &Path) -> String {
    p.to_string_lossy().into_owned()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Agree,
    Disagree,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleCheck {
    pub check: String,
    pub subject: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub schema_version: u32,
    pub group: String,
    pub order: usize,
    pub checks: Vec<OracleCheck>,
    pub all_agree: bool,
}

fn strip<T>(l: FiniteLattice<T>) -> FiniteLattice<()> {
    l.map(|_| ())
}

/// Runs every applicable oracle comparison for `s`.
///
/// Covers the subgroups of `s`, the congruences of each coset G-set `s/H`
/// and of the three constructed algebras when small enough, and pairwise
/// isomorphism between every collected lattice within the permutation
/// oracle's size limit.
pub fn oracle_report(s: &FiniteGroup, bounds: &Bounds) -> Result<OracleReport, Error> {
    let mut checks = Vec::new();
    let mut push = |check: &str, subject: String, status: CheckStatus, detail: String| {
        checks.push(OracleCheck {
            check: check.into(),
            subject,
            status,
            detail,
        })
    };
    let verdict = |ok: bool| if ok { CheckStatus::Agree } else { CheckStatus::Disagree };

    let subs = all_subgroups(s, bounds)?;
    if s.order() <= MAX_SUBSET_ORACLE_ORDER {
        let brute = subgroups_by_subsets(s)?;
        push(
            "subgroups",
            s.label().into(),
            verdict(brute == subs),
            format!("{} fast, {} oracle", subs.len(), brute.len()),
        );
    } else {
        push(
            "subgroups",
            s.label().into(),
            CheckStatus::Skipped,
            format!("order {} exceeds {MAX_SUBSET_ORACLE_ORDER}", s.order()),
        );
    }

    let mut lattices: Vec<(String, FiniteLattice<()>)> = Vec::new();
    lattices.push((format!("Sub({})", s.label()), strip(subgroup_lattice(s, bounds)?)));
    lattices.push((
        format!("NSub({})", s.label()),
        strip(normal_subgroup_lattice(s, bounds)?),
    ));

    let mut algebras: Vec<(String, UnaryAlgebra)> = Vec::new();
    for h in &subs {
        let index = s.order() / h.len();
        if index <= MAX_PARTITION_ORACLE_UNIVERSE {
            algebras.push((format!("{}/{}", s.label(), h), coset_gset(s, h)?));
        }
    }
    if s.order() <= MAX_PARTITION_ORACLE_UNIVERSE {
        let bundle = build_example(s, true, bounds)?;
        algebras.push(("A".into(), bundle.alg_a().clone()));
        algebras.push(("B".into(), bundle.alg_b().clone()));
        algebras.push(("C".into(), bundle.alg_c().clone()));
    }
    for (name, alg) in &algebras {
        let fast = all_congruences(alg, bounds)?;
        let mut brute = congruences_by_partitions(alg)?;
        let mut sorted = fast.clone();
        sorted.sort();
        brute.sort();
        push(
            "congruences",
            name.clone(),
            verdict(sorted == brute),
            format!(
                "{} fast, {} oracle on {} points",
                fast.len(),
                brute.len(),
                alg.universe_size()
            ),
        );
        lattices.push((format!("Con({name})"), strip(congruence_lattice(alg, bounds)?)));
    }
    if subs.iter().any(|h| s.order() / h.len() > MAX_PARTITION_ORACLE_UNIVERSE) {
        push(
            "congruences",
            format!("{}/H", s.label()),
            CheckStatus::Skipped,
            format!("coset spaces larger than {MAX_PARTITION_ORACLE_UNIVERSE} points left out"),
        );
    }

    lattices.retain(|(_, l)| l.size() <= MAX_PERMUTATION_ORACLE_SIZE);
    let mut agree = 0;
    let mut disagreements = Vec::new();
    for (i, (n1, l1)) in lattices.iter().enumerate() {
        for (n2, l2) in &lattices[i..] {
            let fast = lattice_isomorphism(l1, l2, bounds)?.is_some();
            let brute = isomorphism_by_permutations(l1, l2)?.is_some();
            if fast == brute {
                agree += 1;
            } else {
                disagreements.push(format!("{n1} vs {n2}: fast {fast}, oracle {brute}"));
            }
        }
    }
    push(
        "isomorphism",
        format!("{} lattices of size <= {MAX_PERMUTATION_ORACLE_SIZE}", lattices.len()),
        verdict(disagreements.is_empty()),
        if disagreements.is_empty() {
            format!("{agree} pairs agree")
        } else {
            disagreements.join("; ")
        },
    );

    let all_agree = checks.iter().all(|c| c.status != CheckStatus::Disagree);
    Ok(OracleReport {
        schema_version: isotopy_core::construction::SCHEMA_VERSION,
        group: s.label().into(),
        order: s.order(),
        checks,
        all_agree,
    })
}

fn oracle(spec: &GroupSpec, opts: &Options, out: &mut dyn Write) -> Result<i32, Failure> {
    let bounds = opts.bounds();
    let s = load(spec, &bounds)?;
    let report = oracle_report(&s, &bounds)?;
    if opts.json {
        write_json(out, &report)?;
    } else {
        for c in &report.checks {
            let status = match c.status {
                CheckStatus::Agree => "agree",
                CheckStatus::Disagree => "DISAGREE",
                CheckStatus::Skipped => "skipped",
            };
            writeln!(out, "{status:<8} {:<12} {}: {}", c.check, c.subject, c.detail)?;
        }
        writeln!(
            out,
            "{}",
            if report.all_agree {
                "all oracles agree"
            } else {
                "oracle mismatch"
            }
        )?;
    }
    Ok(if report.all_agree {
        exit::OK
    } else {
        exit::VERIFICATION_FAILED
    })
}

#[derive(Serialize)]
struct SubgroupEntry {
    order: usize,
    normal: bool,
    members: Vec<usize>,
}

#[derive(Serialize)]
struct SubgroupListing {
    schema_version: u32,
    group: String,
    order: usize,
    subgroups: Vec<SubgroupEntry>,
}

fn subgroups(spec: &GroupSpec, opts: &Options, out: &mut dyn Write) -> Result<i32, Failure> {
    let bounds = opts.bounds();
    let s = load(spec, &bounds)?;
    let subs = all_subgroups(&s, &bounds)?;
    let listing = SubgroupListing {
        schema_version: isotopy_core::construction::SCHEMA_VERSION,
        group: s.label().into(),
        order: s.order(),
        subgroups: subs
            .iter()
            .map(|h| SubgroupEntry {
                order: h.len(),
                normal: is_normal(&s, h),
                members: h.members().to_vec(),
            })
            .collect(),
    };
    if opts.json {
        write_json(out, &listing)?;
    } else {
        for (i, (h, e)) in subs.iter().zip(&listing.subgroups).enumerate() {
            let mark = if e.normal { " normal" } else { "" };
            writeln!(out, "{i:>4}  order {:<4}{h}{mark}", e.order)?;
        }
        let normal = listing.subgroups.iter().filter(|e| e.normal).count();
        writeln!(out, "{} subgroups of {}, {normal} normal", subs.len(), s.label())?;
    }
    Ok(exit::OK)
}

#[derive(Serialize)]
struct CongruenceEntry {
    blocks: usize,
    partition: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct CongruenceListing {
    schema_version: u32,
    group: String,
    algebra: String,
    universe: usize,
    congruences: Vec<CongruenceEntry>,
}

fn congruences(spec: &GroupSpec, which: Which, opts: &Options, out: &mut dyn Write) -> Result<i32, Failure> {
    let bounds = opts.bounds();
    let s = load(spec, &bounds)?;
    let bundle = build_example(&s, opts.allow_dedekind, &bounds)?;
    let (name, product);
    let alg = match which {
        Which::A => {
            name = "A";
            bundle.alg_a()
        }
        Which::B => {
            name = "B";
            bundle.alg_b()
        }
        Which::C => {
            name = "C";
            bundle.alg_c()
        }
        Which::Product => {
            name = "A x C";
            product = bundle.product_ac()?;
            &product
        }
    };
    let cons = all_congruences(alg, &bounds)?;
    if opts.json {
        write_json(
            out,
            &CongruenceListing {
                schema_version: isotopy_core::construction::SCHEMA_VERSION,
                group: s.label().into(),
                algebra: name.into(),
                universe: alg.universe_size(),
                congruences: cons
                    .iter()
                    .map(|p| CongruenceEntry {
                        blocks: p.block_count(),
                        partition: p.blocks(),
                    })
                    .collect(),
            },
        )?;
    } else {
        for (i, p) in cons.iter().enumerate() {
            writeln!(out, "{i:>4}  {:>3} blocks  {p}", p.block_count())?;
        }
        writeln!(
            out,
            "{} congruences of {name} over {} ({} points)",
            cons.len(),
            s.label(),
            alg.universe_size()
        )?;
    }
    Ok(exit::OK)
}
