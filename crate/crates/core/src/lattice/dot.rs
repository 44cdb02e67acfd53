use std::fmt::{Display, Write as _};

use super::FiniteLattice;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

impl<T> FiniteLattice<T> {
    /// Graphviz rendering of the Hasse diagram: one node per element, one
    /// edge per cover, drawn bottom to top with nodes grouped by rank.
    pub fn to_dot_with(&self, label: impl Fn(&T) -> String) -> String {
        let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n");
        for (i, e) in self.elements().iter().enumerate() {
            writeln!(out, "  n{i} [label=\"{}\"];", escape(&label(e))).unwrap();
        }
        for r in 0..=self.height() {
            let nodes: Vec<String> = (0..self.size())
                .filter(|&x| self.rank(x) == r)
                .map(|x| format!("n{x};"))
                .collect();
            writeln!(out, "  {{ rank=same; {} }}", nodes.join(" ")).unwrap();
        }
        for (lo, hi) in self.cover_edges() {
            writeln!(out, "  n{lo} -> n{hi};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

impl<T: Display> FiniteLattice<T> {
    pub fn to_dot(&self) -> String {
        self.to_dot_with(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use crate::lattice::fixtures::*;
    use crate::lattice::lattice_from_poset;

    #[test]
    fn pentagon_dot() {
        let dot = pentagon().to_dot();
        assert_eq!(dot.matches(" -> ").count(), 5);
        assert!(dot.contains("n0 [label=\"0\"];"));
        assert!(dot.contains("{ rank=same; n0; }"));
        assert!(dot.contains("{ rank=same; n4; }"));
    }

    #[test]
    fn single_node() {
        let l = lattice_from_poset(vec!["say \"hi\""], |_, _| true).unwrap();
        let dot = l.to_dot();
        assert!(dot.contains(r#"n0 [label="say \"hi\""];"#));
        assert!(!dot.contains("->"));
    }
}
