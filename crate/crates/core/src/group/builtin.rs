//! Built-in group families: cyclic, dihedral, symmetric, alternating and Q8.

use std::collections::HashMap;

use super::FiniteGroup;
use crate::{Bounds, Error, Result};

fn check_param(family: &str, n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        Err(Error::InvalidGroup(format!(
            "{family} parameter {n} is outside the supported range 1..={max}"
        )))
    } else {
        Ok(())
    }
}

fn build(label: String, n: usize, mul: impl Fn(usize, usize) -> usize) -> Result<FiniteGroup> {
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        table.extend((0..n).map(|b| mul(a, b) as u32));
    }
    FiniteGroup::from_table(label, table, &Bounds::default())
}

/// Cyclic group `Cn` on `0..n` under addition mod `n`, for `1 <= n <= 64`.
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    check_param("cyclic", n, 64)?;
    build(format!("C{n}"), n, |a, b| (a + b) % n)
}

/// Dihedral group `Dn` of order `2n`, for `1 <= n <= 12`.
///
/// Element `r^k s^e` is stored at index `e * n + k`.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    check_param("dihedral", n, 12)?;
    build(format!("D{n}"), 2 * n, |x, y| {
        let (e, a) = (x / n, x % n);
        let (f, b) = (y / n, y % n);
        // s r^b = r^{-b} s
        let k = if e == 0 { (a + b) % n } else { (a + n - b) % n };
        ((e + f) % 2) * n + k
    })
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    fn extend(prefix: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Vec<u8>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i as u8);
                extend(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

fn is_even(p: &[u8]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

// Products compose right to left: (p * q)(i) = p(q(i)).
fn permutation_group(label: String, perms: Vec<Vec<u8>>) -> Result<FiniteGroup> {
    let index: HashMap<&[u8], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    build(label, perms.len(), |a, b| {
        let composed: Vec<u8> = perms[b].iter().map(|&i| perms[a][i as usize]).collect();
        index[composed.as_slice()]
    })
}

/// Symmetric group `Sn`, `1 <= n <= 5`, on permutations in lexicographic
/// order (index 0 is the identity).
pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    check_param("symmetric", n, 5)?;
    permutation_group(format!("S{n}"), permutations(n))
}

/// Alternating group `An`, `1 <= n <= 5`, on even permutations in
/// lexicographic order.
pub fn alternating(n: usize) -> Result<FiniteGroup> {
    check_param("alternating", n, 5)?;
    let even = permutations(n).into_iter().filter(|p| is_even(p)).collect();
    permutation_group(format!("A{n}"), even)
}

/// Quaternion group `Q8`, indexed `1, -1, i, -i, j, -j, k, -k`.
pub fn quaternion() -> Result<FiniteGroup> {
    // unit products among 1, i, j, k as (unit, negated)
    const UNITS: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    build("Q8".into(), 8, |a, b| {
        let (u, neg) = UNITS[a / 2][b / 2];
        let sign = (a % 2 == 1) ^ (b % 2 == 1) ^ neg;
        2 * u + sign as usize
    })
}
