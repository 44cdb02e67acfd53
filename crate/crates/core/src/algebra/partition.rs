use std::collections::HashMap;
use std::fmt;

/// Disjoint-set forest with union by rank and path halving.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<u32>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            rank: vec![0; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let grand = self.parent[self.parent[x] as usize];
            self.parent[x] = grand;
            x = grand as usize;
        }
        x
    }

    /// Merges the classes of `a` and `b`; false if they were already one.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if self.rank[ra] < self.rank[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[lo] = hi as u32;
        if self.rank[lo] == self.rank[hi] {
            self.rank[hi] += 1;
        }
        true
    }

    pub fn to_partition(&mut self) -> Partition {
        let roots: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Partition::from_labels(&roots)
    }
}

/// A partition of `0..m` in canonical form: block ids are numbered by first
/// occurrence, so equal partitions have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    block_id: Vec<u32>,
    blocks: usize,
}

impl Partition {
    /// Canonicalises arbitrary block labels.
    pub fn from_labels<L: Copy + Eq + std::hash::Hash>(labels: &[L]) -> Self {
        let mut ids: HashMap<L, u32> = HashMap::new();
        let block_id = labels
            .iter()
            .map(|l| {
                let next = ids.len() as u32;
                *ids.entry(*l).or_insert(next)
            })
            .collect();
        Partition {
            block_id,
            blocks: ids.len(),
        }
    }

    /// Every element in its own block (the least congruence).
    pub fn identity(m: usize) -> Self {
        Partition {
            block_id: (0..m as u32).collect(),
            blocks: m,
        }
    }

    /// One block (the greatest congruence).
    pub fn total(m: usize) -> Self {
        Partition {
            block_id: vec![0; m],
            blocks: m.min(1),
        }
    }

    pub fn from_blocks(m: usize, blocks: &[Vec<usize>]) -> Self {
        let mut labels = vec![usize::MAX; m];
        for (i, block) in blocks.iter().enumerate() {
            for &x in block {
                labels[x] = i;
            }
        }
        assert!(
            labels.iter().all(|&l| l != usize::MAX),
            "blocks must cover the universe"
        );
        Self::from_labels(&labels)
    }

    pub fn universe_size(&self) -> usize {
        self.block_id.len()
    }

    pub fn block_count(&self) -> usize {
        self.blocks
    }

    pub fn block_ids(&self) -> &[u32] {
        &self.block_id
    }

    #[inline]
    pub fn block_of(&self, x: usize) -> usize {
        self.block_id[x] as usize
    }

    pub fn same_block(&self, x: usize, y: usize) -> bool {
        self.block_id[x] == self.block_id[y]
    }

    /// Blocks in order of least element, each sorted.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.blocks];
        for (x, &b) in self.block_id.iter().enumerate() {
            out[b as usize].push(x);
        }
        out
    }

    fn first_of_block(&self) -> Vec<usize> {
        let mut first = vec![usize::MAX; self.blocks];
        for (x, &b) in self.block_id.iter().enumerate().rev() {
            first[b as usize] = x;
        }
        first
    }

    /// Whether every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        let first = self.first_of_block();
        (0..self.universe_size()).all(|x| other.same_block(x, first[self.block_of(x)]))
    }

    pub fn join(&self, other: &Partition) -> Partition {
        let mut uf = UnionFind::new(self.universe_size());
        for p in [self, other] {
            let first = p.first_of_block();
            for x in 0..p.universe_size() {
                uf.union(x, first[p.block_of(x)]);
            }
        }
        uf.to_partition()
    }

    pub fn meet(&self, other: &Partition) -> Partition {
        let pairs: Vec<(u32, u32)> = self
            .block_id
            .iter()
            .copied()
            .zip(other.block_id.iter().copied())
            .collect();
        Self::from_labels(&pairs)
    }

    /// Whether `x ~ y` implies `f(x) ~ f(y)` for the map `f`.
    pub fn is_stable_under(&self, map: &[u32]) -> bool {
        let first = self.first_of_block();
        (0..self.universe_size()).all(|x| self.same_block(map[x] as usize, map[first[self.block_of(x)]] as usize))
    }
}

impl fmt::Display for Partition {
    /// Block notation such as `|0 3|1 4|2 5|`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("|")?;
        for block in self.blocks() {
            let items: Vec<String> = block.iter().map(usize::to_string).collect();
            write!(f, "{}|", items.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn notation() {
        let p = Partition::from_labels(&[7, 8, 9, 7, 8, 9]);
        assert_eq!(p.to_string(), "|0 3|1 4|2 5|");
        assert_eq!(p.block_ids(), &[0, 1, 2, 0, 1, 2]);
        assert_eq!(Partition::total(1).to_string(), "|0|");
        assert_eq!(Partition::identity(3).to_string(), "|0|1|2|");
    }

    #[test]
    fn union_find() {
        let mut uf = UnionFind::new(5);
        assert!(uf.union(0, 3));
        assert!(uf.union(3, 4));
        assert!(!uf.union(0, 4));
        assert_eq!(uf.to_partition().to_string(), "|0 3 4|1|2|");
    }

    #[test]
    fn refinement_order() {
        let fine = Partition::from_labels(&[0, 0, 1, 2]);
        let coarse = Partition::from_labels(&[0, 0, 1, 1]);
        assert!(fine.refines(&coarse));
        assert!(!coarse.refines(&fine));
        assert!(Partition::identity(4).refines(&fine));
        assert!(fine.refines(&Partition::total(4)));
    }

    #[test]
    fn stability() {
        let p = Partition::from_labels(&[0, 1, 0, 1]);
        assert!(p.is_stable_under(&[1, 2, 3, 0]));
        assert!(!p.is_stable_under(&[0, 2, 1, 3]));
    }

    fn labels(max: usize) -> impl Strategy<Value = Vec<u8>> {
        proptest::collection::vec(0u8..4, max)
    }

    proptest! {
        #[test]
        fn join_and_meet_are_bounds(a in labels(7), b in labels(7)) {
            let (p, q) = (Partition::from_labels(&a), Partition::from_labels(&b));
            let (j, m) = (p.join(&q), p.meet(&q));
            prop_assert!(p.refines(&j) && q.refines(&j));
            prop_assert!(m.refines(&p) && m.refines(&q));
            prop_assert_eq!(&p.join(&m), &p);
            prop_assert_eq!(&p.meet(&j), &p);
            // canonical form: first occurrences are 0, 1, 2, ...
            let mut next = 0;
            for &id in j.block_ids() {
                prop_assert!(id <= next);
                if id == next { next += 1; }
            }
            prop_assert_eq!(next as usize, j.block_count());
        }
    }
}
