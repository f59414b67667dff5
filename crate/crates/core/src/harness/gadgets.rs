//! Explicit vertex sets used to refute well-domination of particular products.
//!
//! All sets are in product coordinates `(g, h) -> g * n(X) + h`, with the
//! small fixed factor first and `X` second.

use crate::domination::{independence_number, is_dominating, is_minimal_dominating};
use crate::error::{Error, Result};
use crate::families::{family_f1, family_f2, leaf_ids, LeafCounts};
use crate::graph::Graph;
use crate::product::ProductMap;
use crate::set::{VertexId, VertexSet};

fn map(first_order: usize, x: &Graph) -> ProductMap {
    ProductMap {
        g_order: first_order,
        h_order: x.order(),
    }
}

fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

fn require_connected(x: &Graph, min_order: usize) -> Result<()> {
    if x.order() < min_order || !x.is_connected()? {
        return Err(precondition(format!(
            "X must be connected of order at least {min_order}"
        )));
    }
    Ok(())
}

fn require_minimal_dominating(x: &Graph, d: VertexSet) -> Result<()> {
    if !is_minimal_dominating(x, d)? {
        return Err(precondition(format!("{d} is not a minimal dominating set of X")));
    }
    Ok(())
}

/// `({a,b,c} × {x}) ∪ ({b} × (V(X) - N[x]))` in `P3 □ X`, with `a, b, c = 0, 1, 2`.
pub fn gadget_lemma7_set(x_graph: &Graph, x: VertexId) -> Result<VertexSet> {
    require_connected(x_graph, 1)?;
    let deg = x_graph.degree(x)?;
    if deg < 3 {
        return Err(precondition(format!("vertex {x} has degree {deg}, need at least 3")));
    }
    let m = map(3, x_graph);
    let column = m.lift_set(VertexSet::full(3), VertexSet::singleton(x))?;
    let far = x_graph.closed_neighborhood(x)?.complement(x_graph.order());
    Ok(column | m.lift_set(VertexSet::singleton(1), far)?)
}

/// `D1 = ({a1} × (V - D_X)) ∪ ({a2..ar} × D_X)` and `D3 = {a1, b1} × V` in
/// `K_{r,s} □ X`, where `a_i = i - 1` and `b_1 = r`.
pub fn gadget_bipartite_sets(
    r: usize,
    s: usize,
    x_graph: &Graph,
    d_x: VertexSet,
) -> Result<(VertexSet, VertexSet)> {
    if !(2 <= r && r <= s) {
        return Err(precondition(format!("need 2 <= r <= s, got r={r}, s={s}")));
    }
    require_connected(x_graph, 3)?;
    require_minimal_dominating(x_graph, d_x)?;
    let m = map(r + s, x_graph);
    let rest = d_x.complement(x_graph.order());
    let others: VertexSet = (1..r).collect();
    let d1 = m.lift_set(VertexSet::singleton(0), rest)? | m.lift_set(others, d_x)?;
    let d3 = m.lift_g([0, r].into_iter().collect())?;
    Ok((d1, d3))
}

/// `{a1} × V` and `({b1} × (V - D_X)) ∪ ({b2..bs} × D_X)` in `K_{1,s} □ X`,
/// with `D_X` a maximum independent set.
pub fn gadget_star_sets(s: usize, x_graph: &Graph, d_x: VertexSet) -> Result<(VertexSet, VertexSet)> {
    if s < 3 {
        return Err(precondition(format!("need s >= 3, got {s}")));
    }
    require_connected(x_graph, 3)?;
    if !x_graph.is_independent(d_x)? || d_x.len() != independence_number(x_graph)? {
        return Err(precondition(format!("{d_x} is not a maximum independent set of X")));
    }
    let m = map(1 + s, x_graph);
    let center = m.lift_g(VertexSet::singleton(0))?;
    let rest = d_x.complement(x_graph.order());
    let leaves: VertexSet = (2..=s).collect();
    let other = m.lift_set(VertexSet::singleton(1), rest)? | m.lift_set(leaves, d_x)?;
    Ok((center, other))
}

/// `[D1, D2, D2', D2'']` for `F1 □ X`: `D1 = {y1,y2,y3} × V` and, for each hub
/// `y_i`, `({y_i} × V) ∪ (L_j ∪ L_k) × D_X` over the other two hubs.
pub fn gadget_f1_sets(f1: &Graph, x_graph: &Graph, d_x: VertexSet) -> Result<Vec<VertexSet>> {
    let leaves = recognise(f1, 3)?;
    hub_sets(3, leaves, x_graph, d_x)
}

/// The same four sets for `F2 □ X`, with the leafless hub `y4 = 3`.
pub fn gadget_f2_sets(f2: &Graph, x_graph: &Graph, d_x: VertexSet) -> Result<Vec<VertexSet>> {
    let leaves = recognise(f2, 4)?;
    hub_sets(4, leaves, x_graph, d_x)
}

/// Reads the leaf counts off a graph in the fixed numbering, and checks that
/// it is that family member with every count positive.
fn recognise(f: &Graph, clique: usize) -> Result<LeafCounts> {
    if f.order() <= clique {
        return Err(precondition("not a clique-with-leaves graph"));
    }
    let c: Vec<usize> = (0..3)
        .map(|hub| f.degree(hub).map(|d| d.saturating_sub(clique - 1)))
        .collect::<Result<_>>()?;
    let leaves = LeafCounts::new(c[0], c[1], c[2]);
    if !leaves.all_positive() {
        return Err(precondition(format!("leaf counts {leaves} must all be positive")));
    }
    let expected = if clique == 3 { family_f1(leaves)? } else { family_f2(leaves)? };
    if *f != expected {
        return Err(precondition("graph does not match the family numbering"));
    }
    Ok(leaves)
}

fn hub_sets(clique: usize, leaves: LeafCounts, x_graph: &Graph, d_x: VertexSet) -> Result<Vec<VertexSet>> {
    require_connected(x_graph, 3)?;
    require_minimal_dominating(x_graph, d_x)?;
    let m = map(clique + leaves.total(), x_graph);
    let leaf_set = |hub: usize| -> VertexSet { leaf_ids(clique, leaves, hub).collect() };
    let mut out = vec![m.lift_g((0..3).collect())?];
    for hub in 0..3 {
        let others = (0..3).filter(|&j| j != hub).fold(VertexSet::EMPTY, |acc, j| acc | leaf_set(j));
        out.push(m.lift_g(VertexSet::singleton(hub))? | m.lift_set(others, d_x)?);
    }
    Ok(out)
}

/// Drops members in ascending order while the rest still dominates. The
/// result is a minimal dominating subset of `s`.
pub fn reduce_to_minimal(g: &Graph, s: VertexSet) -> Result<VertexSet> {
    if !is_dominating(g, s)? {
        return Err(precondition(format!("{s} does not dominate")));
    }
    let mut cur = s;
    for v in s {
        if is_dominating(g, cur.without(v))? {
            cur.remove(v);
        }
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_bipartite, cycle, path};
    use crate::product::cartesian_product;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn lemma7_examples() {
        let star = complete_bipartite(1, 3).unwrap();
        let s = gadget_lemma7_set(&star, 0).unwrap();
        assert_eq!(s.len(), 3);
        let (p, _) = cartesian_product(&path(3).unwrap(), &star).unwrap();
        assert!(is_dominating(&p, s).unwrap());

        let k5 = complete(5).unwrap();
        let s = gadget_lemma7_set(&k5, 0).unwrap();
        assert_eq!(s, set(&[0, 5, 10]));
        let (p, _) = cartesian_product(&path(3).unwrap(), &k5).unwrap();
        assert!(is_dominating(&p, s).unwrap());

        assert!(matches!(
            gadget_lemma7_set(&cycle(4).unwrap(), 0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn bipartite_examples() {
        for (r, s, x, d, d1_len) in [
            (2, 2, path(3).unwrap(), set(&[1]), 3),
            (2, 3, cycle(5).unwrap(), set(&[0, 2]), 5),
            (3, 3, path(3).unwrap(), set(&[1]), 4),
        ] {
            let (d1, d3) = gadget_bipartite_sets(r, s, &x, d).unwrap();
            assert_eq!(d1.len(), d1_len);
            assert_eq!(d3.len(), 2 * x.order());
            let (p, _) = cartesian_product(&complete_bipartite(r, s).unwrap(), &x).unwrap();
            assert!(is_minimal_dominating(&p, d1).unwrap());
            assert!(is_minimal_dominating(&p, d3).unwrap());
        }
        let p3 = path(3).unwrap();
        assert!(gadget_bipartite_sets(2, 2, &p3, set(&[0])).is_err());
        assert!(gadget_bipartite_sets(1, 3, &p3, set(&[1])).is_err());
    }

    #[test]
    fn star_sets() {
        let p3 = path(3).unwrap();
        let (a, b) = gadget_star_sets(3, &p3, set(&[0, 2])).unwrap();
        assert_eq!((a.len(), b.len()), (3, 5));
        let (p, _) = cartesian_product(&complete_bipartite(1, 3).unwrap(), &p3).unwrap();
        assert!(is_minimal_dominating(&p, a).unwrap() && is_minimal_dominating(&p, b).unwrap());
        assert!(gadget_star_sets(3, &p3, set(&[1])).is_err());
    }

    #[test]
    fn f1_examples() {
        let f = family_f1(LeafCounts::new(1, 1, 1)).unwrap();
        let p3 = path(3).unwrap();
        let sets = gadget_f1_sets(&f, &p3, set(&[1])).unwrap();
        let sizes: Vec<_> = sets.iter().map(|s| s.len()).collect();
        assert_eq!(sizes, vec![9, 5, 5, 5]);
        let (p, _) = cartesian_product(&f, &p3).unwrap();
        assert!(sets.iter().all(|&s| is_minimal_dominating(&p, s).unwrap()));

        let k3 = complete(3).unwrap();
        let sets = gadget_f1_sets(&f, &k3, set(&[0])).unwrap();
        assert_eq!(sets[0].len(), 9);
        assert_eq!(sets[1].len(), 5);

        let f = family_f1(LeafCounts::new(2, 1, 1)).unwrap();
        let sets = gadget_f1_sets(&f, &p3, set(&[1])).unwrap();
        assert_eq!((sets[1].len(), sets[2].len()), (5, 6));
        let (p, _) = cartesian_product(&f, &p3).unwrap();
        assert!(sets.iter().all(|&s| is_minimal_dominating(&p, s).unwrap()));

        let f = family_f1(LeafCounts::new(1, 0, 1)).unwrap();
        assert!(matches!(gadget_f1_sets(&f, &p3, set(&[1])), Err(Error::Precondition(_))));
        assert!(gadget_f1_sets(&path(5).unwrap(), &p3, set(&[1])).is_err());
    }

    #[test]
    fn f2_sets_are_minimal() {
        let f = family_f2(LeafCounts::new(1, 1, 1)).unwrap();
        let k3 = complete(3).unwrap();
        let sets = gadget_f2_sets(&f, &k3, set(&[2])).unwrap();
        let (p, _) = cartesian_product(&f, &k3).unwrap();
        assert!(sets.iter().all(|&s| is_minimal_dominating(&p, s).unwrap()));
        assert!(gadget_f2_sets(&family_f1(LeafCounts::new(1, 1, 1)).unwrap(), &k3, set(&[2])).is_err());
    }

    #[test]
    fn reduction_is_minimal() {
        let (p, _) = cartesian_product(&path(3).unwrap(), &path(4).unwrap()).unwrap();
        let all = p.vertices();
        let m = reduce_to_minimal(&p, all).unwrap();
        assert!(is_minimal_dominating(&p, m).unwrap());
        assert!(reduce_to_minimal(&p, VertexSet::EMPTY).is_err());
    }
}
