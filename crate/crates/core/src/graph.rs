//! Immutable simple graphs with bit-row adjacency and neighborhood algebra.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::set::{VertexId, VertexSet, CAPACITY};

/// A finite simple graph on vertices `0..n`.
///
/// Row `v` of the adjacency is the open neighborhood of `v`. Equality compares
/// order and adjacency only; the optional name is a display label.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    name: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

/// Order-preserving correspondence between the vertices of a graph and those
/// of a graph derived from it by deleting vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    old_of_new: Vec<VertexId>,
    new_of_old: Vec<Option<VertexId>>,
}

impl VertexMap {
    fn from_kept(kept: VertexSet, old_order: usize) -> Self {
        let old_of_new: Vec<_> = kept.iter().collect();
        let mut new_of_old = vec![None; old_order];
        for (new, &old) in old_of_new.iter().enumerate() {
            new_of_old[old] = Some(new);
        }
        VertexMap {
            old_of_new,
            new_of_old,
        }
    }

    /// Id in the derived graph of an original vertex, if it survived.
    pub fn new_id(&self, old: VertexId) -> Option<VertexId> {
        self.new_of_old.get(old).copied().flatten()
    }

    /// Original id of a vertex in the derived graph.
    pub fn old_id(&self, new: VertexId) -> VertexId {
        self.old_of_new[new]
    }

    pub fn kept(&self) -> &[VertexId] {
        &self.old_of_new
    }

    /// Original vertices corresponding to a set in the derived graph.
    pub fn lift(&self, set: VertexSet) -> VertexSet {
        set.iter().map(|v| self.old_of_new[v]).collect()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
            name: None,
        })
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex {u}")));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        g.assert_simple();
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating symmetry and loops.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let full = VertexSet::full(n);
        for (v, &row) in rows.iter().enumerate() {
            if !row.is_subset(full) {
                return Err(Error::Input(format!("row {v} references vertices >= {n}")));
            }
            if row.contains(v) {
                return Err(Error::Input(format!("self-loop at vertex {v}")));
            }
            for u in row {
                if !rows[u].contains(v) {
                    return Err(Error::Input(format!("asymmetric adjacency {v}->{u}")));
                }
            }
        }
        Ok(Graph {
            n,
            adj: rows,
            name: None,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match (s - self.vertices()).first() {
            None => Ok(()),
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            }),
        }
    }

    /// `N(v)`.
    pub fn open_neighborhood(&self, v: VertexId) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v])
    }

    /// `N[v]`.
    pub fn closed_neighborhood(&self, v: VertexId) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v].with(v))
    }

    /// `N[S] = S ∪ N(S)`.
    pub fn closed_neighborhood_of_set(&self, s: VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        Ok(self.closed_nbhd_set(s))
    }

    /// `N(S)`, the union of the open neighborhoods of members of `S`.
    pub fn open_neighborhood_of_set(&self, s: VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        Ok(s.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v]))
    }

    // Unchecked variants for hot loops. Callers guarantee range.
    #[inline]
    pub(crate) fn nbhd(&self, v: VertexId) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub(crate) fn closed_nbhd(&self, v: VertexId) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub(crate) fn closed_nbhd_set(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(s, |acc, v| acc | self.adj[v])
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    /// `Δ(G)`; zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).min().unwrap_or(0)
    }

    /// Degrees sorted descending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = self.adj.iter().map(|r| r.len()).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_independent(&self, s: VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(s.iter().all(|v| !self.adj[v].intersects(s)))
    }

    /// True iff every pair of distinct vertices is adjacent (K_n, n >= 1).
    pub fn is_complete(&self) -> bool {
        self.n >= 1 && self.adj.iter().all(|r| r.len() == self.n - 1)
    }

    /// Induced subgraph on `s` with an order-preserving vertex map.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, VertexMap)> {
        self.check_set(s)?;
        let map = VertexMap::from_kept(s, self.n);
        let rows = map
            .old_of_new
            .iter()
            .map(|&old| {
                (self.adj[old] & s)
                    .iter()
                    .filter_map(|u| map.new_id(u))
                    .collect()
            })
            .collect();
        Ok((
            Graph {
                n: map.old_of_new.len(),
                adj: rows,
                name: None,
            },
            map,
        ))
    }

    /// `G - S`.
    pub fn remove_vertices(&self, s: VertexSet) -> Result<(Graph, VertexMap)> {
        self.check_set(s)?;
        self.induced_subgraph(self.vertices() - s)
    }

    /// `G - N[I]` for an independent set `I`.
    pub fn remove_closed_neighborhood(&self, independent: VertexSet) -> Result<(Graph, VertexMap)> {
        if !self.is_independent(independent)? {
            return Err(Error::Precondition(format!(
                "{independent} is not independent"
            )));
        }
        self.induced_subgraph(self.vertices() - self.closed_nbhd_set(independent))
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn component_sets(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(root) = left.first() {
            let comp = self.reach(root);
            left -= comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<(Graph, VertexMap)> {
        self.component_sets()
            .into_iter()
            .map(|c| self.induced_subgraph(c).expect("component within range"))
            .collect()
    }

    fn reach(&self, root: VertexId) -> VertexSet {
        let mut seen = VertexSet::singleton(root);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = frontier
                .iter()
                .fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v]);
            frontier = next - seen;
            seen |= frontier;
        }
        seen
    }

    /// Connectivity is undefined for the graph with no vertices.
    pub fn is_connected(&self) -> Result<bool> {
        if self.n == 0 {
            return Err(Error::Input("connectivity of the empty graph".into()));
        }
        Ok(self.reach(0) == self.vertices())
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[u] >= b) {
                    break;
                }
                for w in self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// True when the graph has no cycle shorter than four; forests qualify.
    pub fn girth_at_least_4(&self) -> bool {
        self.girth().is_none_or(|g| g >= 4)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_order(n)?;
        let shift = |s: VertexSet| VertexSet::from_bits(s.bits() << self.n);
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| shift(r)));
        Ok(Graph {
            n,
            adj,
            name: None,
        })
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[VertexId]) -> Result<Graph> {
        if perm.len() != self.n || perm.iter().collect::<VertexSet>() != self.vertices() {
            return Err(Error::Input("not a permutation of the vertex set".into()));
        }
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            adj[perm[v]] = self.adj[v].iter().map(|u| perm[u]).collect();
        }
        Ok(Graph {
            n: self.n,
            adj,
            name: self.name.clone(),
        })
    }

    fn assert_simple(&self) {
        for v in 0..self.n {
            assert!(!self.adj[v].contains(v), "loop at {v}");
            for u in self.adj[v] {
                assert!(self.adj[u].contains(v), "asymmetric {v}-{u}");
            }
        }
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > CAPACITY {
        Err(Error::Capacity {
            what: "graph order",
            requested: n,
            limit: CAPACITY,
        })
    } else {
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("Graph");
        if let Some(name) = &self.name {
            d.field("name", name);
        }
        d.field("n", &self.n).field("edges", &self.edges()).finish()
    }
}
