//! DOT export of Hasse diagrams, bottom-up, with deterministic node order.

use crate::poset::Poset;
use std::fmt::Write;

/// Render a poset's Hasse diagram as a DOT digraph. Nodes are emitted in
/// index order, edges in sorted (lower, upper) order, with rank hints so
/// small elements sit at the bottom.
pub fn export_dot(p: &Poset, graph_name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", escape(graph_name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    for i in 0..p.size() {
        writeln!(out, "  n{i} [label=\"{}\"];", escape(&p.labels[i])).unwrap();
    }
    for &(lo, hi) in &p.hasse {
        writeln!(out, "  n{lo} -> n{hi};").unwrap();
    }
    // group elements of equal height on one rank
    let ranks = height_ranks(p);
    let max_rank = ranks.iter().copied().max().unwrap_or(0);
    for r in 0..=max_rank {
        let members: Vec<String> = (0..p.size())
            .filter(|&i| ranks[i] == r)
            .map(|i| format!("n{i};"))
            .collect();
        if !members.is_empty() {
            writeln!(out, "  {{ rank=same; {} }}", members.join(" ")).unwrap();
        }
    }
    writeln!(out, "}}").unwrap();
    out
}

/// Longest-path height of each element above the minimal elements.
fn height_ranks(p: &Poset) -> Vec<usize> {
    let mut rank = vec![0usize; p.size()];
    // hasse edges go low -> high; process until fixpoint (sizes are tiny)
    let mut changed = true;
    while changed {
        changed = false;
        for &(lo, hi) in &p.hasse {
            if rank[hi] < rank[lo] + 1 {
                rank[hi] = rank[lo] + 1;
                changed = true;
            }
        }
    }
    rank
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_chain() {
        let p = Poset::chain(2);
        let dot = export_dot(&p, "chain2");
        assert!(dot.contains("n0 -> n1;"));
        assert_eq!(dot.matches("->").count(), 1);
    }

    #[test]
    fn pentagon_edges() {
        let p = crate::poset::pentagon();
        let dot = export_dot(&p, "N5");
        assert_eq!(dot.matches("->").count(), 5);
    }

    #[test]
    fn deterministic() {
        let p = crate::poset::diamond();
        assert_eq!(export_dot(&p, "M3"), export_dot(&p, "M3"));
    }
}
