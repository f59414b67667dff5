//! Named graph families with fixed vertex numbering.
//!
//! * `path(n)`: `0 - 1 - ... - (n-1)`
//! * `cycle(n)`: the path plus the edge `(n-1) - 0`
//! * `complete_bipartite(r, s)`: sides `0..r` and `r..r+s`
//! * `family_f1` / `family_f2`: hubs first (`0..3` resp. `0..4`), then the
//!   leaves of hub 0, hub 1 and hub 2 in that order.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexId;

pub fn complete(n: usize) -> Result<Graph> {
    at_least("complete graph order", n, 1)?;
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_edges(n, &edges)?.with_name(format!("K{n}")))
}

pub fn path(n: usize) -> Result<Graph> {
    at_least("path order", n, 1)?;
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Ok(Graph::from_edges(n, &edges)?.with_name(format!("P{n}")))
}

pub fn cycle(n: usize) -> Result<Graph> {
    at_least("cycle order", n, 3)?;
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    Ok(Graph::from_edges(n, &edges)?.with_name(format!("C{n}")))
}

pub fn complete_bipartite(r: usize, s: usize) -> Result<Graph> {
    at_least("bipartite side", r, 1)?;
    at_least("bipartite side", s, 1)?;
    let mut edges = Vec::with_capacity(r * s);
    for a in 0..r {
        for b in r..r + s {
            edges.push((a, b));
        }
    }
    Ok(Graph::from_edges(r + s, &edges)?.with_name(format!("K{r},{s}")))
}

/// Numbers of leaves hung on the first three hub vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LeafCounts {
    pub l1: usize,
    pub l2: usize,
    pub l3: usize,
}

impl LeafCounts {
    pub const fn new(l1: usize, l2: usize, l3: usize) -> Self {
        LeafCounts { l1, l2, l3 }
    }

    pub fn total(&self) -> usize {
        self.l1 + self.l2 + self.l3
    }

    pub fn as_array(&self) -> [usize; 3] {
        [self.l1, self.l2, self.l3]
    }

    pub fn all_positive(&self) -> bool {
        self.l1 > 0 && self.l2 > 0 && self.l3 > 0
    }

    /// Every count triple with `1 <= total <= max_total`, in lexicographic order.
    pub fn up_to(max_total: usize) -> Vec<LeafCounts> {
        let mut out = Vec::new();
        for l1 in 0..=max_total {
            for l2 in 0..=max_total - l1 {
                for l3 in 0..=max_total - l1 - l2 {
                    if l1 + l2 + l3 > 0 {
                        out.push(LeafCounts::new(l1, l2, l3));
                    }
                }
            }
        }
        out
    }
}

impl std::fmt::Display for LeafCounts {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{},{},{}", self.l1, self.l2, self.l3)
    }
}

/// Ids of the leaves on hub `hub` (0, 1 or 2) for a clique of `clique` hubs.
pub fn leaf_ids(clique: usize, leaves: LeafCounts, hub: usize) -> std::ops::Range<VertexId> {
    let c = leaves.as_array();
    let start = clique + c[..hub].iter().sum::<usize>();
    start..start + c[hub]
}

fn clique_with_leaves(clique: usize, leaves: LeafCounts) -> Result<Graph> {
    if leaves.total() == 0 {
        return Err(Error::Input("at least one leaf is required".into()));
    }
    let mut edges = Vec::new();
    for v in 1..clique {
        for u in 0..v {
            edges.push((u, v));
        }
    }
    for hub in 0..3 {
        edges.extend(leaf_ids(clique, leaves, hub).map(|leaf| (hub, leaf)));
    }
    Graph::from_edges(clique + leaves.total(), &edges)
}

/// Triangle on hubs 0, 1, 2 with pendant leaves.
pub fn family_f1(leaves: LeafCounts) -> Result<Graph> {
    Ok(clique_with_leaves(3, leaves)?.with_name(format!("F1({leaves})")))
}

/// K_4 on hubs 0..4 with pendant leaves on hubs 0, 1, 2; hub 3 keeps degree 3.
pub fn family_f2(leaves: LeafCounts) -> Result<Graph> {
    Ok(clique_with_leaves(4, leaves)?.with_name(format!("F2({leaves})")))
}

fn at_least(what: &str, got: usize, min: usize) -> Result<()> {
    if got < min {
        Err(Error::Input(format!("{what} must be at least {min}, got {got}")))
    } else {
        Ok(())
    }
}
