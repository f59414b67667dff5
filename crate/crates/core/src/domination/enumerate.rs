use crate::graph::Graph;
use crate::set::VertexSet;

use super::privates;

#[derive(Clone, Copy)]
struct DomState {
    chosen: VertexSet,
    /// Vertices dominated at least once by `chosen`.
    once: VertexSet,
    /// Vertices dominated at least twice.
    twice: VertexSet,
    /// Vertices excluded from `chosen` in this subtree.
    forbidden: VertexSet,
}

/// Depth-first branching on the least undominated vertex `v`: the `i`-th
/// child adds the `i`-th allowed member of `N[v]` and forbids the earlier
/// ones, so every dominating set is reached along exactly one path.
///
/// A branch dies as soon as a chosen vertex loses its last private neighbor
/// or some undominated vertex has only forbidden dominators left.
pub struct MinimalDominatingSets<'g> {
    g: &'g Graph,
    all: VertexSet,
    stack: Vec<DomState>,
}

impl<'g> MinimalDominatingSets<'g> {
    pub(super) fn new(g: &'g Graph) -> Self {
        MinimalDominatingSets {
            g,
            all: g.vertices(),
            stack: vec![DomState {
                chosen: VertexSet::EMPTY,
                once: VertexSet::EMPTY,
                twice: VertexSet::EMPTY,
                forbidden: VertexSet::EMPTY,
            }],
        }
    }

    fn is_minimal(&self, s: VertexSet) -> bool {
        s.iter().all(|x| !privates(self.g, s, x).is_empty())
    }
}

impl Iterator for MinimalDominatingSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let g = self.g;
        while let Some(st) = self.stack.pop() {
            let undominated = self.all - st.once;
            let Some(v) = undominated.first() else {
                if self.is_minimal(st.chosen) {
                    return Some(st.chosen);
                }
                continue;
            };
            if undominated
                .iter()
                .any(|w| g.closed_nbhd(w).is_subset(st.forbidden))
            {
                continue;
            }
            let candidates = g.closed_nbhd(v) - st.forbidden;
            let base = self.stack.len();
            let mut forbidden = st.forbidden;
            for u in candidates {
                let nu = g.closed_nbhd(u);
                let twice = st.twice | (st.once & nu);
                let alive = st
                    .chosen
                    .iter()
                    .all(|c| !(g.closed_nbhd(c) - twice).is_empty());
                if alive {
                    self.stack.push(DomState {
                        chosen: st.chosen.with(u),
                        once: st.once | nu,
                        twice,
                        forbidden,
                    });
                }
                forbidden.insert(u);
            }
            self.stack[base..].reverse();
        }
        None
    }
}

#[derive(Clone, Copy)]
struct BkState {
    r: VertexSet,
    p: VertexSet,
    x: VertexSet,
}

/// Bron–Kerbosch with Tomita pivoting on the complement graph.
pub struct MaximalIndependentSets<'g> {
    g: &'g Graph,
    all: VertexSet,
    stack: Vec<BkState>,
}

impl<'g> MaximalIndependentSets<'g> {
    pub(super) fn new(g: &'g Graph) -> Self {
        let all = g.vertices();
        MaximalIndependentSets {
            g,
            all,
            stack: vec![BkState {
                r: VertexSet::EMPTY,
                p: all,
                x: VertexSet::EMPTY,
            }],
        }
    }

    /// Neighbors of `v` in the complement.
    #[inline]
    fn non_nbr(&self, v: usize) -> VertexSet {
        self.all - self.g.closed_nbhd(v)
    }
}

impl Iterator for MaximalIndependentSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        while let Some(BkState { r, mut p, mut x }) = self.stack.pop() {
            if p.is_empty() {
                if x.is_empty() {
                    return Some(r);
                }
                continue;
            }
            let pivot = (p | x)
                .iter()
                .max_by_key(|&u| ((p & self.non_nbr(u)).len(), std::cmp::Reverse(u)))
                .expect("p is nonempty");
            let base = self.stack.len();
            for v in p - self.non_nbr(pivot) {
                let nv = self.non_nbr(v);
                self.stack.push(BkState {
                    r: r.with(v),
                    p: p & nv,
                    x: x & nv,
                });
                p.remove(v);
                x.insert(v);
            }
            self.stack[base..].reverse();
        }
        None
    }
}
