//! Canonical forms for small graphs.
//!
//! The form is the lexicographically smallest upper-triangle bit string
//! (graph6 column order) over all vertex orderings compatible with an
//! isomorphism-invariant ordered partition of the vertices. The partition
//! starts from degrees and is refined by neighbor-color multisets, so only
//! orderings inside each cell are searched.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::{VertexId, VertexSet};

/// Largest order accepted by [`canonical_form`].
pub const ISO_CAP: usize = 10;

/// Order byte followed by the minimized adjacency bits, packed MSB-first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    /// The graph whose column-order adjacency bits are this form.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let bit = |t: usize| (self.0[1 + t / 8] >> (7 - t % 8)) & 1 == 1;
        let mut rows = vec![VertexSet::EMPTY; n];
        let mut t = 0;
        for j in 1..n {
            for i in 0..j {
                if bit(t) {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
                t += 1;
            }
        }
        Graph::from_rows(rows).expect("form encodes a simple graph")
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.order();
    if n > ISO_CAP {
        return Err(Error::Capacity {
            what: "canonical form order",
            requested: n,
            limit: ISO_CAP,
        });
    }
    let bits = min_triangle(g);
    let total = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + total.div_ceil(8));
    out.push(n as u8);
    for chunk in 0..total.div_ceil(8) {
        let mut byte = 0u8;
        for k in 0..8 {
            let t = chunk * 8 + k;
            if t < total && (bits >> (total - 1 - t)) & 1 == 1 {
                byte |= 0x80 >> k;
            }
        }
        out.push(byte);
    }
    Ok(CanonicalForm(out))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        // Still enforce the cap so callers see consistent errors.
        canonical_form(g)?;
        canonical_form(h)?;
        return Ok(false);
    }
    if g.degree_sequence() != h.degree_sequence() {
        canonical_form(g)?;
        canonical_form(h)?;
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// Invariant ordered partition: cell index per vertex, cells numbered in an
/// order that depends only on the isomorphism class.
///
/// A vertex's signature packs its color (bits 40..) above the count of its
/// neighbors in each color (four bits per color), which fits because
/// `n <= ISO_CAP`.
fn refined_cells(g: &Graph) -> [u8; ISO_CAP] {
    let n = g.order();
    let mut color = [0u8; ISO_CAP];
    let mut degrees = [0u64; ISO_CAP];
    for (v, d) in degrees.iter_mut().enumerate().take(n) {
        *d = g.nbhd(v).len() as u64;
    }
    let mut classes = relabel(&degrees[..n], &mut color);
    loop {
        let mut sig = [0u64; ISO_CAP];
        for v in 0..n {
            let mut key = u64::from(color[v]) << 40;
            for u in g.nbhd(v) {
                key += 1 << (4 * color[u]);
            }
            sig[v] = key;
        }
        let next = relabel(&sig[..n], &mut color);
        if next == classes {
            return color;
        }
        classes = next;
    }
}

/// Replaces each key by its rank among the distinct keys; returns the count.
fn relabel(keys: &[u64], color: &mut [u8; ISO_CAP]) -> usize {
    let mut sorted = [0u64; ISO_CAP];
    sorted[..keys.len()].copy_from_slice(keys);
    let sorted = &mut sorted[..keys.len()];
    sorted.sort_unstable();
    let mut distinct = 0;
    for i in 0..sorted.len() {
        if i == 0 || sorted[i] != sorted[i - 1] {
            sorted[distinct] = sorted[i];
            distinct += 1;
        }
    }
    for (v, k) in keys.iter().enumerate() {
        color[v] = sorted[..distinct].binary_search(k).expect("present") as u8;
    }
    distinct
}

struct Search<'a> {
    g: &'a Graph,
    total_bits: usize,
    // cell_of_pos[p] = cell that position p must be filled from
    cell_of_pos: Vec<usize>,
    cells: Vec<VertexSet>,
    placed: Vec<VertexId>,
    best: Option<u64>,
}

impl Search<'_> {
    /// Extends the ordering by one position, pruning prefixes above the best.
    fn run(&mut self, prefix: u64, prefix_len: usize, below_best: bool) {
        let p = self.placed.len();
        if p == self.g.order() {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        let cell = self.cell_of_pos[p];
        for v in self.cells[cell] {
            let mut bits = prefix;
            for &u in &self.placed {
                bits = (bits << 1) | u64::from(self.g.has_edge(u, v));
            }
            let len = prefix_len + p;
            let mut now_below = below_best;
            if !below_best {
                if let Some(best) = self.best {
                    let best_prefix = best >> (self.total_bits - len);
                    if bits > best_prefix {
                        continue;
                    }
                    now_below = bits < best_prefix;
                }
            }
            self.cells[cell].remove(v);
            self.placed.push(v);
            self.run(bits, len, now_below);
            self.placed.pop();
            self.cells[cell].insert(v);
        }
    }
}

fn min_triangle(g: &Graph) -> u64 {
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    let color = refined_cells(g);
    let ncells = color[..n].iter().max().map_or(0, |&c| c as usize + 1);
    let mut cells = vec![VertexSet::EMPTY; ncells];
    for (v, &c) in color[..n].iter().enumerate() {
        cells[c as usize].insert(v);
    }
    let cell_of_pos = cells
        .iter()
        .enumerate()
        .flat_map(|(c, s)| std::iter::repeat_n(c, s.len()))
        .collect();
    let mut search = Search {
        g,
        total_bits: n * (n - 1) / 2,
        cell_of_pos,
        cells,
        placed: Vec::with_capacity(n),
        best: None,
    };
    search.run(0, 0, false);
    search.best.expect("at least one ordering")
}
