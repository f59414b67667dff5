//! Exhaustive subset oracles. These touch every subset of `V(G)` and exist to
//! cross-check the enumerators; they deliberately avoid the bit-row
//! neighborhood helpers and work from `has_edge` alone.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Largest order the oracles accept.
pub const ORACLE_CAP: usize = 20;

fn check_cap(g: &Graph) -> Result<()> {
    if g.order() > ORACLE_CAP {
        Err(Error::Capacity {
            what: "brute-force oracle order",
            requested: g.order(),
            limit: ORACLE_CAP,
        })
    } else {
        Ok(())
    }
}

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn dominated_by(g: &Graph, s: &[usize], w: usize) -> bool {
    s.iter().any(|&x| x == w || g.has_edge(x, w))
}

fn dominates(g: &Graph, s: &[usize]) -> bool {
    (0..g.order()).all(|w| dominated_by(g, s, w))
}

fn independent(g: &Graph, s: &[usize]) -> bool {
    s.iter().enumerate().all(|(i, &a)| s[i + 1..].iter().all(|&b| !g.has_edge(a, b)))
}

fn subsets(g: &Graph) -> impl Iterator<Item = Vec<usize>> + '_ {
    let n = g.order();
    (0u32..1 << n).map(move |mask| members(mask, n))
}

/// Every minimal dominating set, by testing each subset and each deletion.
pub fn brute_force_minimal_dominating_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    check_cap(g)?;
    Ok(subsets(g)
        .filter(|s| dominates(g, s))
        .filter(|s| {
            (0..s.len()).all(|i| {
                let rest: Vec<_> = s.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                !dominates(g, &rest)
            })
        })
        .map(|s| s.iter().collect())
        .collect())
}

pub fn brute_force_maximal_independent_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    check_cap(g)?;
    Ok(subsets(g)
        .filter(|s| independent(g, s))
        .filter(|s| {
            (0..g.order()).filter(|v| !s.contains(v)).all(|v| s.iter().any(|&x| g.has_edge(x, v)))
        })
        .map(|s| s.iter().collect())
        .collect())
}

pub fn brute_force_domination_number(g: &Graph) -> Result<usize> {
    check_cap(g)?;
    Ok(subsets(g).filter(|s| dominates(g, s)).map(|s| s.len()).min().unwrap_or(0))
}

pub fn brute_force_independence_number(g: &Graph) -> Result<usize> {
    check_cap(g)?;
    Ok(subsets(g).filter(|s| independent(g, s)).map(|s| s.len()).max().unwrap_or(0))
}
