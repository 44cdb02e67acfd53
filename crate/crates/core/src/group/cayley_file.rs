//! Plain-text Cayley tables.
//!
//! ```text
//! 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! ```
//!
//! Line 1 holds the order `n`, followed by `n` rows of `n` space-separated
//! products. Element 0 must be the identity.

use std::fmt::Write as _;
use std::path::Path;

use super::FiniteGroup;
use crate::{Bounds, Error, Result};

pub fn parse_cayley(label: &str, text: &str, bounds: &Bounds) -> Result<FiniteGroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line, header) = lines.next().ok_or(Error::CayleyParse {
        line: 1,
        message: "empty file".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::CayleyParse {
        line,
        message: format!("expected the group order, found {header:?}"),
    })?;
    if n == 0 {
        return Err(Error::CayleyParse {
            line,
            message: "group order must be positive".into(),
        });
    }
    if n > bounds.max_group_order {
        return Err(Error::capacity("group order", n, bounds.max_group_order));
    }

    let mut table = Vec::with_capacity(n * n);
    for row in 0..n {
        let (line, text) = lines.next().ok_or(Error::CayleyParse {
            line: line + row + 1,
            message: format!("expected {n} rows, found {row}"),
        })?;
        let before = table.len();
        for tok in text.split_whitespace() {
            let v: u32 = tok.parse().map_err(|_| Error::CayleyParse {
                line,
                message: format!("not an element index: {tok:?}"),
            })?;
            if v as usize >= n {
                return Err(Error::CayleyParse {
                    line,
                    message: format!("entry {v} is outside 0..{n}"),
                });
            }
            table.push(v);
        }
        if table.len() - before != n {
            return Err(Error::CayleyParse {
                line,
                message: format!("expected {n} entries, found {}", table.len() - before),
            });
        }
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::CayleyParse {
            line,
            message: "trailing data after the table".into(),
        });
    }

    let group = FiniteGroup::from_table(label, table, bounds)?;
    if group.identity() != 0 {
        return Err(Error::InvalidGroup(format!(
            "element 0 must be the identity, found identity {}",
            group.identity()
        )));
    }
    Ok(group)
}

pub fn load_cayley_file(path: &Path, bounds: &Bounds) -> Result<FiniteGroup> {
    let text = std::fs::read_to_string(path)?;
    let label = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "file".into());
    parse_cayley(&label, &text, bounds)
}

pub fn to_cayley_text(g: &FiniteGroup) -> String {
    let mut out = format!("{}\n", g.order());
    for a in g.elements() {
        let row: Vec<String> = g.row(a).iter().map(u32::to_string).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{dihedral, symmetric};

    #[test]
    fn round_trip() {
        let b = Bounds::default();
        for g in [symmetric(3).unwrap(), dihedral(4).unwrap()] {
            let back = parse_cayley("x", &to_cayley_text(&g), &b).unwrap();
            assert_eq!(back.order(), g.order());
            for a in g.elements() {
                assert_eq!(back.row(a), g.row(a));
            }
        }
    }

    #[test]
    fn c3() {
        let g = parse_cayley("c3", "3\n0 1 2\n1 2 0\n2 0 1\n", &Bounds::default()).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.inv(1), 2);
    }

    #[test]
    fn errors() {
        let b = Bounds::default();
        let bad = [
            "",
            "x\n",
            "0\n",
            "2\n0 1\n",
            "2\n0 1\n1\n",
            "2\n0 1\n1 2\n",
            "2\n0 1\n1 0\n0 1\n",
        ];
        for text in bad {
            assert!(
                matches!(parse_cayley("t", text, &b), Err(Error::CayleyParse { .. })),
                "{text:?}"
            );
        }
        // identity at 1
        assert!(matches!(
            parse_cayley("t", "2\n1 0\n0 1\n", &b),
            Err(Error::InvalidGroup(_))
        ));
        // not a Latin square
        assert!(matches!(
            parse_cayley("t", "2\n0 1\n1 1\n", &b),
            Err(Error::InvalidGroup(_))
        ));
    }
}
