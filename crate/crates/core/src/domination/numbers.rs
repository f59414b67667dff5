use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::{subsets_of_size, VertexSet};

use super::{is_open_irredundant, nonempty};

/// `γ(G)` by branch and bound, independent of the enumerator.
pub fn domination_number(g: &Graph) -> Result<usize> {
    nonempty(g)?;
    let mut best = greedy_dominating(g).len();
    let step = g.max_degree() + 1;
    gamma_search(g, 0, VertexSet::EMPTY, VertexSet::EMPTY, step, &mut best);
    Ok(best)
}

fn greedy_dominating(g: &Graph) -> VertexSet {
    let all = g.vertices();
    let mut chosen = VertexSet::EMPTY;
    let mut dominated = VertexSet::EMPTY;
    while dominated != all {
        let u = (0..g.order())
            .max_by_key(|&u| ((g.closed_nbhd(u) - dominated).len(), std::cmp::Reverse(u)))
            .expect("nonempty graph");
        chosen.insert(u);
        dominated |= g.closed_nbhd(u);
    }
    chosen
}

fn gamma_search(
    g: &Graph,
    size: usize,
    dominated: VertexSet,
    forbidden: VertexSet,
    step: usize,
    best: &mut usize,
) {
    let undominated = g.vertices() - dominated;
    if undominated.is_empty() {
        *best = (*best).min(size);
        return;
    }
    if size + undominated.len().div_ceil(step) >= *best {
        return;
    }
    // Branch on the undominated vertex with the fewest usable dominators.
    let options = undominated
        .iter()
        .map(|w| g.closed_nbhd(w) - forbidden)
        .min_by_key(|opts| opts.len())
        .expect("undominated is nonempty");
    if options.is_empty() {
        return;
    }
    let mut forbidden = forbidden;
    for u in options {
        gamma_search(g, size + 1, dominated | g.closed_nbhd(u), forbidden, step, best);
        forbidden.insert(u);
    }
}

/// `α(G)` by include/exclude branching on a maximum-degree vertex.
pub fn independence_number(g: &Graph) -> Result<usize> {
    nonempty(g)?;
    let mut best = 0;
    alpha_search(g, g.vertices(), 0, &mut best);
    Ok(best)
}

fn alpha_search(g: &Graph, live: VertexSet, size: usize, best: &mut usize) {
    if size + live.len() <= *best {
        return;
    }
    let pick = live
        .iter()
        .map(|v| (v, (g.nbhd(v) & live).len()))
        .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)));
    match pick {
        None => *best = (*best).max(size),
        Some((_, 0)) => *best = (*best).max(size + live.len()),
        Some((v, _)) => {
            alpha_search(g, live - g.closed_nbhd(v), size + 1, best);
            alpha_search(g, live.without(v), size, best);
        }
    }
}

/// First `γ(G)`-set, in lexicographic subset order, that is open irredundant.
///
/// Such a set exists in every connected graph with at least two vertices, so
/// failing to find one is reported as an internal error.
pub fn find_open_irredundant_gamma_set(g: &Graph) -> Result<VertexSet> {
    nonempty(g)?;
    if g.order() < 2 || !g.is_connected()? {
        return Err(Error::Precondition(
            "open irredundant γ-sets need a connected graph with at least two vertices".into(),
        ));
    }
    let gamma = domination_number(g)?;
    let all = g.vertices();
    for s in subsets_of_size(g.order(), gamma) {
        if g.closed_nbhd_set(s) == all && is_open_irredundant(g, s)? {
            return Ok(s);
        }
    }
    Err(Error::Internal(format!(
        "no open irredundant γ-set in a connected graph of order {}",
        g.order()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::oracle;
    use crate::families::{complete, complete_bipartite, cycle, path};
    use crate::product::cartesian_product;

    #[test]
    fn small_invariants() {
        for n in 1..=8 {
            let k = complete(n).unwrap();
            assert_eq!(domination_number(&k).unwrap(), 1);
            assert_eq!(independence_number(&k).unwrap(), 1);
        }
        let p3 = path(3).unwrap();
        assert_eq!(domination_number(&p3).unwrap(), 1);
        assert_eq!(independence_number(&p3).unwrap(), 2);
        let c5 = cycle(5).unwrap();
        assert_eq!(domination_number(&c5).unwrap(), 2);
        assert_eq!(independence_number(&c5).unwrap(), 2);
        assert_eq!(independence_number(&Graph::empty(4).unwrap()), Ok(4));
        assert!(domination_number(&Graph::empty(0).unwrap()).is_err());
    }

    #[test]
    fn products_against_oracle() {
        let pairs = [(path(3), complete(3)), (complete(4), complete(4)), (cycle(4), path(4))];
        for (a, b) in pairs {
            let (p, _) = cartesian_product(&a.unwrap(), &b.unwrap()).unwrap();
            assert_eq!(domination_number(&p).unwrap(), oracle::brute_force_domination_number(&p).unwrap());
            assert_eq!(
                independence_number(&p).unwrap(),
                oracle::brute_force_independence_number(&p).unwrap()
            );
        }
    }

    #[test]
    fn open_irredundant_gamma_sets() {
        for n in 2..=6 {
            assert_eq!(find_open_irredundant_gamma_set(&complete(n).unwrap()).unwrap().to_vec(), vec![0]);
        }
        // {0,2} comes first lexicographically but 0 has no external private neighbor.
        assert_eq!(find_open_irredundant_gamma_set(&path(4).unwrap()).unwrap().to_vec(), vec![0, 3]);
        let c5 = find_open_irredundant_gamma_set(&cycle(5).unwrap()).unwrap();
        assert_eq!(c5.to_vec(), vec![0, 2]);
        assert_eq!(
            find_open_irredundant_gamma_set(&complete_bipartite(2, 3).unwrap()).unwrap().len(),
            2
        );
        let disconnected = complete(2).unwrap().disjoint_union(&complete(2).unwrap()).unwrap();
        assert!(matches!(
            find_open_irredundant_gamma_set(&disconnected),
            Err(Error::Precondition(_))
        ));
        assert!(find_open_irredundant_gamma_set(&complete(1).unwrap()).is_err());
    }
}
