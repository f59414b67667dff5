//! Cartesian products with row-major coordinates: `(g, h) -> g * n(H) + h`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::{VertexId, VertexSet, CAPACITY};

/// Bijection between product ids and factor coordinate pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProductMap {
    pub g_order: usize,
    pub h_order: usize,
}

/// Which factor a layer is a copy of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    /// Copy of the first factor, obtained by fixing an `h`.
    G,
    /// Copy of the second factor, obtained by fixing a `g`.
    H,
}

impl ProductMap {
    pub fn order(&self) -> usize {
        self.g_order * self.h_order
    }

    #[inline]
    pub fn encode(&self, g: VertexId, h: VertexId) -> VertexId {
        debug_assert!(g < self.g_order && h < self.h_order);
        g * self.h_order + h
    }

    #[inline]
    pub fn decode(&self, id: VertexId) -> (VertexId, VertexId) {
        debug_assert!(id < self.order());
        (id / self.h_order, id % self.h_order)
    }

    pub fn try_encode(&self, g: VertexId, h: VertexId) -> Result<VertexId> {
        range(g, self.g_order)?;
        range(h, self.h_order)?;
        Ok(self.encode(g, h))
    }

    pub fn try_decode(&self, id: VertexId) -> Result<(VertexId, VertexId)> {
        range(id, self.order())?;
        Ok(self.decode(id))
    }

    /// The layer through the fixed vertex of the other factor.
    pub fn layer(&self, axis: Axis, fixed: VertexId) -> Result<VertexSet> {
        Ok(match axis {
            Axis::H => {
                range(fixed, self.g_order)?;
                (0..self.h_order).map(|h| self.encode(fixed, h)).collect()
            }
            Axis::G => {
                range(fixed, self.h_order)?;
                (0..self.g_order).map(|g| self.encode(g, fixed)).collect()
            }
        })
    }

    /// `A × B`.
    pub fn lift_set(&self, a: VertexSet, b: VertexSet) -> Result<VertexSet> {
        if let Some(v) = (a - VertexSet::full(self.g_order)).first() {
            return Err(oob(v, self.g_order));
        }
        if let Some(v) = (b - VertexSet::full(self.h_order)).first() {
            return Err(oob(v, self.h_order));
        }
        let mut out = VertexSet::EMPTY;
        for g in a {
            // B shifted into the H-layer of g.
            out |= VertexSet::from_bits(b.bits() << (g * self.h_order));
        }
        Ok(out)
    }

    /// `A × V(H)`.
    pub fn lift_g(&self, a: VertexSet) -> Result<VertexSet> {
        self.lift_set(a, VertexSet::full(self.h_order))
    }
}

fn range(v: usize, n: usize) -> Result<()> {
    if v < n {
        Ok(())
    } else {
        Err(oob(v, n))
    }
}

fn oob(vertex: usize, order: usize) -> Error {
    Error::VertexOutOfRange { vertex, order }
}

/// `G □ H`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<(Graph, ProductMap)> {
    let order = g.order() * h.order();
    if order > CAPACITY {
        return Err(Error::Capacity {
            what: "product order",
            requested: order,
            limit: CAPACITY,
        });
    }
    let map = ProductMap {
        g_order: g.order(),
        h_order: h.order(),
    };
    let mut rows = Vec::with_capacity(order);
    for gv in 0..g.order() {
        let g_nb = g.nbhd(gv);
        for hv in 0..h.order() {
            let in_layer = VertexSet::from_bits(h.nbhd(hv).bits() << (gv * h.order()));
            let across: VertexSet = g_nb.iter().map(|g2| map.encode(g2, hv)).collect();
            rows.push(in_layer | across);
        }
    }
    let mut p = Graph::from_rows(rows)?;
    if let (Some(a), Some(b)) = (g.name(), h.name()) {
        p = p.with_name(format!("{a}□{b}"));
    }
    Ok((p, map))
}
