//! Domination and independence: predicates, exact enumeration engines,
//! invariants and well-dominated / well-covered verdicts.

mod enumerate;
mod numbers;
pub mod oracle;
mod report;

pub use enumerate::{MaximalIndependentSets, MinimalDominatingSets};
pub use numbers::{domination_number, find_open_irredundant_gamma_set, independence_number};
pub use report::{is_well_covered, is_well_dominated, WellDomReport};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::{VertexId, VertexSet};

pub fn is_dominating(g: &Graph, s: VertexSet) -> Result<bool> {
    Ok(g.closed_neighborhood_of_set(s)? == g.vertices())
}

/// `N[u] - N[A - {u}]`.
pub fn private_neighbors(g: &Graph, a: VertexSet, u: VertexId) -> Result<VertexSet> {
    g.check_set(a)?;
    g.check_vertex(u)?;
    if !a.contains(u) {
        return Err(Error::Input(format!("{u} is not a member of {a}")));
    }
    Ok(privates(g, a, u))
}

#[inline]
pub(crate) fn privates(g: &Graph, a: VertexSet, u: VertexId) -> VertexSet {
    g.closed_nbhd(u) - g.closed_nbhd_set(a.without(u))
}

pub fn is_minimal_dominating(g: &Graph, s: VertexSet) -> Result<bool> {
    Ok(is_dominating(g, s)? && s.iter().all(|x| !privates(g, s, x).is_empty()))
}

pub fn is_irredundant(g: &Graph, a: VertexSet) -> Result<bool> {
    g.check_set(a)?;
    Ok(a.iter().all(|u| !privates(g, a, u).is_empty()))
}

/// Every member has a private neighbor outside the set.
pub fn is_open_irredundant(g: &Graph, a: VertexSet) -> Result<bool> {
    g.check_set(a)?;
    Ok(a.iter().all(|u| !(privates(g, a, u) - a).is_empty()))
}

pub fn is_maximal_independent(g: &Graph, s: VertexSet) -> Result<bool> {
    Ok(g.is_independent(s)? && g.closed_neighborhood_of_set(s)? == g.vertices())
}

/// Branching enumerator over the minimal dominating sets, in deterministic
/// depth-first order.
pub fn enumerate_minimal_dominating_sets(g: &Graph) -> Result<MinimalDominatingSets<'_>> {
    nonempty(g)?;
    Ok(MinimalDominatingSets::new(g))
}

/// Bron–Kerbosch (with pivoting) over the complement, so each emitted set is
/// a maximal independent set of `g`.
pub fn enumerate_maximal_independent_sets(g: &Graph) -> Result<MaximalIndependentSets<'_>> {
    nonempty(g)?;
    Ok(MaximalIndependentSets::new(g))
}

pub(crate) fn nonempty(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        Err(Error::Input("graph has no vertices".into()))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn domination_predicate() {
        let p3 = path(3).unwrap();
        assert!(is_dominating(&p3, set(&[1])).unwrap());
        assert!(!is_dominating(&p3, set(&[0])).unwrap());
        assert!(is_dominating(&p3, p3.vertices()).unwrap());
        assert!(is_dominating(&p3, set(&[5])).is_err());
    }

    #[test]
    fn private_neighbor_sets() {
        let p3 = path(3).unwrap();
        assert_eq!(private_neighbors(&p3, set(&[0, 2]), 0).unwrap(), set(&[0]));
        let k3 = complete(3).unwrap();
        assert_eq!(private_neighbors(&k3, set(&[0, 1]), 0).unwrap(), VertexSet::EMPTY);
        let c5 = cycle(5).unwrap();
        assert_eq!(private_neighbors(&c5, set(&[3]), 3).unwrap(), set(&[2, 3, 4]));
        assert!(private_neighbors(&p3, set(&[0]), 1).is_err());
    }

    #[test]
    fn minimality() {
        let p3 = path(3).unwrap();
        assert!(is_minimal_dominating(&p3, set(&[1])).unwrap());
        assert!(!is_minimal_dominating(&p3, set(&[0, 1])).unwrap());
        assert!(is_minimal_dominating(&cycle(4).unwrap(), set(&[0, 2])).unwrap());
    }

    #[test]
    fn irredundance() {
        let p4 = path(4).unwrap();
        assert!(is_irredundant(&p4, VertexSet::EMPTY).unwrap());
        assert!(is_open_irredundant(&p4, VertexSet::EMPTY).unwrap());
        assert!(is_open_irredundant(&p4, set(&[0, 3])).unwrap());
        let k3 = complete(3).unwrap();
        assert!(!is_irredundant(&k3, set(&[0, 1])).unwrap());
        // {0,2} in P_4: 0's only private neighbor is itself.
        assert!(is_irredundant(&p4, set(&[0, 2])).unwrap());
        assert!(!is_open_irredundant(&p4, set(&[0, 2])).unwrap());
    }

    #[test]
    fn empty_graph_is_rejected() {
        let e = Graph::empty(0).unwrap();
        assert!(enumerate_minimal_dominating_sets(&e).is_err());
        assert!(enumerate_maximal_independent_sets(&e).is_err());
    }
}
