//! Unary algebras, in particular G-sets whose operations are the actions of
//! the group elements, and their congruences.

mod congruence;
mod partition;

use crate::group::{diagonal_subgroup, direct_product, left_cosets, FiniteGroup, LeftCosetSpace, SubgroupSet};
use crate::{Bounds, Error, Result};

pub use congruence::{all_congruences, congruence_lattice, principal_congruence};
pub use partition::{Partition, UnionFind};

/// A finite set with a labelled family of unary operations.
///
/// Every operation is a permutation of the universe. A subset of the
/// operations (`compute_ops`) is used when closing congruences; for G-sets
/// it is a generating set of the acting group, which yields the same
/// congruences as the full operation set.
#[derive(Debug, Clone)]
pub struct UnaryAlgebra {
    universe_size: usize,
    labels: Vec<usize>,
    /// `labels.len() × universe_size`, row per operation.
    maps: Vec<u32>,
    signature: String,
    compute_ops: Vec<usize>,
    compute_are_generators: bool,
}

impl UnaryAlgebra {
    pub fn new(
        universe_size: usize,
        labels: Vec<usize>,
        maps: Vec<Vec<usize>>,
        signature: impl Into<String>,
    ) -> Result<Self> {
        if universe_size == 0 {
            return Err(Error::InvalidAlgebra("empty universe".into()));
        }
        if labels.len() != maps.len() {
            return Err(Error::InvalidAlgebra(format!(
                "{} labels for {} operations",
                labels.len(),
                maps.len()
            )));
        }
        let mut flat = Vec::with_capacity(labels.len() * universe_size);
        for (label, map) in labels.iter().zip(&maps) {
            if map.len() != universe_size {
                return Err(Error::InvalidAlgebra(format!(
                    "operation {label} has {} entries, expected {universe_size}",
                    map.len()
                )));
            }
            let mut hit = vec![false; universe_size];
            for &v in map {
                if v >= universe_size || std::mem::replace(&mut hit[v], true) {
                    return Err(Error::InvalidAlgebra(format!("operation {label} is not a permutation")));
                }
            }
            flat.extend(map.iter().map(|&v| v as u32));
        }
        Ok(UnaryAlgebra {
            universe_size,
            compute_ops: (0..labels.len()).collect(),
            compute_are_generators: false,
            labels,
            maps: flat,
            signature: signature.into(),
        })
    }

    fn from_flat(universe_size: usize, labels: Vec<usize>, maps: Vec<u32>, signature: String) -> Self {
        debug_assert_eq!(maps.len(), labels.len() * universe_size);
        UnaryAlgebra {
            universe_size,
            compute_ops: (0..labels.len()).collect(),
            compute_are_generators: false,
            labels,
            maps,
            signature,
        }
    }

    /// Restricts congruence computations to the operations at `ops`.
    /// `generators` records that they generate the acting group.
    pub fn with_compute_ops(mut self, ops: Vec<usize>, generators: bool) -> Result<Self> {
        if let Some(&bad) = ops.iter().find(|&&i| i >= self.labels.len()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                len: self.labels.len(),
            });
        }
        self.compute_ops = ops;
        self.compute_are_generators = generators;
        Ok(self)
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn op_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn signature(&self) -> &str {
        &self.signature
    }

    pub fn compute_ops(&self) -> &[usize] {
        &self.compute_ops
    }

    pub fn compute_ops_are_generators(&self) -> bool {
        self.compute_are_generators
    }

    /// The map of the operation at position `i`.
    pub fn op(&self, i: usize) -> &[u32] {
        &self.maps[i * self.universe_size..(i + 1) * self.universe_size]
    }

    #[inline]
    pub fn apply(&self, i: usize, x: usize) -> usize {
        self.maps[i * self.universe_size + x] as usize
    }

    pub fn op_by_label(&self, label: usize) -> Option<&[u32]> {
        self.labels.iter().position(|&l| l == label).map(|i| self.op(i))
    }

    /// Whether `p` is stable under every operation, not only `compute_ops`.
    pub fn is_congruence(&self, p: &Partition) -> bool {
        p.universe_size() == self.universe_size && (0..self.op_count()).all(|i| p.is_stable_under(self.op(i)))
    }

    /// The orbit of `x` under the operations.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.universe_size];
        seen[x] = true;
        let mut list = vec![x];
        let mut i = 0;
        while i < list.len() {
            for &op in &self.compute_ops {
                let y = self.apply(op, list[i]);
                if !std::mem::replace(&mut seen[y], true) {
                    list.push(y);
                }
            }
            i += 1;
        }
        list.sort_unstable();
        list
    }
}

fn gset_signature(g: &FiniteGroup) -> String {
    format!("G-set over {} (order {})", g.label(), g.order())
}

fn gset(g: &FiniteGroup, universe_size: usize, image: impl Fn(usize, usize) -> usize) -> Result<UnaryAlgebra> {
    let mut maps = Vec::with_capacity(g.order() * universe_size);
    for a in g.elements() {
        maps.extend((0..universe_size).map(|c| image(a, c) as u32));
    }
    let alg = UnaryAlgebra::from_flat(universe_size, g.elements().collect(), maps, gset_signature(g));
    alg.with_compute_ops(g.generators().to_vec(), true)
}

/// The left-multiplication action of `g` on the cosets in `cosets`.
pub fn coset_gset_on(g: &FiniteGroup, cosets: &LeftCosetSpace) -> Result<UnaryAlgebra> {
    gset(g, cosets.len(), |a, c| cosets.coset_of(g.mul(a, cosets.rep(c))))
}

/// `⟨G/H, G⟩` with `a(xH) = (ax)H`.
pub fn coset_gset(g: &FiniteGroup, h: &SubgroupSet) -> Result<UnaryAlgebra> {
    coset_gset_on(g, &left_cosets(g, h)?)
}

/// The twisted action of `G = s × s` on `G/D` for the diagonal `D`:
/// `(a1, a2)` sends `(x1, x2)D` to `(a2 x1, a1 x2)D`. `cosets` must be the
/// coset space of the diagonal in `g = s × s`.
pub fn twisted_gset_on(s: &FiniteGroup, g: &FiniteGroup, cosets: &LeftCosetSpace) -> Result<UnaryAlgebra> {
    let n = s.order();
    if g.order() != n * n || cosets.subgroup() != &diagonal_subgroup(s) {
        return Err(Error::InvalidAlgebra(format!(
            "twisted action needs the diagonal coset space of {0}x{0}",
            s.label()
        )));
    }
    gset(g, cosets.len(), |a, c| {
        let (a1, a2) = (a / n, a % n);
        let r = cosets.rep(c);
        let (x1, x2) = (r / n, r % n);
        cosets.coset_of(s.mul(a2, x1) * n + s.mul(a1, x2))
    })
}

pub fn twisted_gset(s: &FiniteGroup, bounds: &Bounds) -> Result<UnaryAlgebra> {
    let g = direct_product(s, s, bounds)?;
    let cosets = left_cosets(&g, &diagonal_subgroup(s))?;
    twisted_gset_on(s, &g, &cosets)
}

/// `a × c` acting componentwise; the pair `(x, y)` is stored at
/// `x * |c| + y`.
pub fn product_algebra(a: &UnaryAlgebra, c: &UnaryAlgebra) -> Result<UnaryAlgebra> {
    if a.signature != c.signature || a.labels != c.labels {
        return Err(Error::SignatureMismatch {
            left: a.signature.clone(),
            right: c.signature.clone(),
        });
    }
    let (ma, mc) = (a.universe_size, c.universe_size);
    let m = ma * mc;
    let mut maps = Vec::with_capacity(a.op_count() * m);
    for i in 0..a.op_count() {
        let (fa, fc) = (a.op(i), c.op(i));
        for &ax in &fa[..ma] {
            let base = ax * mc as u32;
            maps.extend(fc.iter().map(|&y| base + y));
        }
    }
    let mut ops = a.compute_ops.clone();
    ops.extend(&c.compute_ops);
    ops.sort_unstable();
    ops.dedup();
    UnaryAlgebra::from_flat(m, a.labels.clone(), maps, a.signature.clone())
        .with_compute_ops(ops, a.compute_are_generators && c.compute_are_generators)
}

/// First `(operation label, point)` where `f` fails to commute with the
/// operations, or `None` if `f: a -> b` is a homomorphism.
pub fn homomorphism_violation(f: &[usize], a: &UnaryAlgebra, b: &UnaryAlgebra) -> Option<(usize, usize)> {
    assert_eq!(a.labels, b.labels, "homomorphism check across different signatures");
    for i in 0..a.op_count() {
        let (fa, fb) = (a.op(i), b.op(i));
        for x in 0..a.universe_size {
            if f[fa[x] as usize] != fb[f[x]] as usize {
                return Some((a.labels[i], x));
            }
        }
    }
    None
}

/// Whether `f(g^a(x)) = g^b(f(x))` for every label `g` and point `x`.
pub fn is_homomorphism(f: &[usize], a: &UnaryAlgebra, b: &UnaryAlgebra) -> bool {
    a.labels == b.labels
        && f.len() == a.universe_size
        && f.iter().all(|&y| y < b.universe_size)
        && homomorphism_violation(f, a, b).is_none()
}

/// Checks that the operations of `alg` form an action of `g`:
/// `(gh)^alg = g^alg ∘ h^alg` and `e^alg = id`. Returns the first failing
/// `(g, h, x)`; the identity law is reported as `(e, e, x)`.
pub fn action_law_violation(g: &FiniteGroup, alg: &UnaryAlgebra) -> Option<(usize, usize, usize)> {
    assert_eq!(
        alg.labels(),
        &g.elements().collect::<Vec<_>>()[..],
        "operations must be labelled by all of g"
    );
    let e = g.identity();
    if let Some(x) = (0..alg.universe_size).find(|&x| alg.apply(e, x) != x) {
        return Some((e, e, x));
    }
    for a in g.elements() {
        let fa = alg.op(a);
        for b in g.elements() {
            let (fb, fab) = (alg.op(b), alg.op(g.mul(a, b)));
            if let Some(x) = (0..alg.universe_size).find(|&x| fab[x] != fa[fb[x] as usize]) {
                return Some((a, b, x));
            }
        }
    }
    None
}
