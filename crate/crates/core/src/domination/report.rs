use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::set::VertexSet;

use super::{enumerate_maximal_independent_sets, enumerate_minimal_dominating_sets};

/// Outcome of a well-dominated or well-covered check.
///
/// A positive verdict carries the common cardinality; a negative one carries
/// two sets of the enumerated kind with different sizes, smaller first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WellDomReport {
    pub verdict: bool,
    pub common_size: Option<usize>,
    pub witness_small: Option<VertexSet>,
    pub witness_large: Option<VertexSet>,
}

impl WellDomReport {
    fn from_sets(mut sets: impl Iterator<Item = VertexSet>) -> Self {
        let first = sets.next().expect("nonempty graphs have at least one set");
        match sets.find(|s| s.len() != first.len()) {
            None => WellDomReport {
                verdict: true,
                common_size: Some(first.len()),
                witness_small: None,
                witness_large: None,
            },
            Some(other) => {
                let (small, large) = if first.len() < other.len() {
                    (first, other)
                } else {
                    (other, first)
                };
                WellDomReport {
                    verdict: false,
                    common_size: None,
                    witness_small: Some(small),
                    witness_large: Some(large),
                }
            }
        }
    }

    pub fn witnesses(&self) -> Option<(VertexSet, VertexSet)> {
        self.witness_small.zip(self.witness_large)
    }
}

/// Stops at the first minimal dominating set whose size differs from the first.
pub fn is_well_dominated(g: &Graph) -> Result<WellDomReport> {
    Ok(WellDomReport::from_sets(enumerate_minimal_dominating_sets(g)?))
}

pub fn is_well_covered(g: &Graph) -> Result<WellDomReport> {
    Ok(WellDomReport::from_sets(enumerate_maximal_independent_sets(g)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{is_maximal_independent, is_minimal_dominating};
    use crate::families::{complete, cycle, path};
    use crate::product::cartesian_product;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn well_dominated_examples() {
        let r = is_well_dominated(&path(3).unwrap()).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.witnesses(), Some((set(&[1]), set(&[0, 2]))));
        assert_eq!(r.common_size, None);

        let r = is_well_dominated(&cycle(4).unwrap()).unwrap();
        assert!(r.verdict);
        assert_eq!(r.common_size, Some(2));
        assert_eq!(r.witnesses(), None);

        let (p, _) = cartesian_product(&complete(3).unwrap(), &path(3).unwrap()).unwrap();
        assert_eq!(is_well_dominated(&p).unwrap().common_size, Some(3));

        assert_eq!(is_well_dominated(&complete(1).unwrap()).unwrap().common_size, Some(1));
        assert!(is_well_dominated(&Graph::empty(0).unwrap()).is_err());
    }

    #[test]
    fn well_covered_examples() {
        let r = is_well_covered(&path(4).unwrap()).unwrap();
        assert!(r.verdict);
        assert_eq!(r.common_size, Some(2));
        let r = is_well_covered(&path(3).unwrap()).unwrap();
        assert_eq!(r.witnesses(), Some((set(&[1]), set(&[0, 2]))));
    }

    #[test]
    fn witnesses_are_valid() {
        let (p, _) = cartesian_product(&path(3).unwrap(), &path(3).unwrap()).unwrap();
        let (a, b) = is_well_dominated(&p).unwrap().witnesses().unwrap();
        assert!(a.len() < b.len());
        assert!(is_minimal_dominating(&p, a).unwrap() && is_minimal_dominating(&p, b).unwrap());
        let (a, b) = is_well_covered(&p).unwrap().witnesses().unwrap();
        assert!(a.len() < b.len());
        assert!(is_maximal_independent(&p, a).unwrap() && is_maximal_independent(&p, b).unwrap());
    }
}
