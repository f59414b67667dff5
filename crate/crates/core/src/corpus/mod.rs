//! Graph corpora: graph6 I/O and exhaustive generation of small graphs up to
//! isomorphism.

mod graph6;

pub use graph6::{decode_graph6, encode_graph6, Graph6Record, SHORT_FORM_MAX};

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Largest order accepted by the generators.
pub const GENERATION_CAP: usize = 7;

/// One representative per isomorphism class of connected graphs of order `n`,
/// sorted by canonical form.
pub fn connected_graphs_up_to_iso(n: usize) -> Result<Vec<Graph>> {
    graphs_up_to_iso(n, true)
}

/// One representative per isomorphism class of all graphs of order `n`.
pub fn all_graphs_up_to_iso(n: usize) -> Result<Vec<Graph>> {
    graphs_up_to_iso(n, false)
}

/// Connected classes for every order in `lo..=hi`, concatenated by order.
pub fn connected_graphs_in_range(lo: usize, hi: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in lo..=hi {
        out.extend(connected_graphs_up_to_iso(n)?);
    }
    Ok(out)
}

// Labeled graphs are enumerated as edge masks over the upper triangle. Only
// labelings with non-increasing degrees along the vertex order are passed to
// the canonical form; every class has such a labeling. The mask space is
// split into fixed chunks so that results do not depend on the number of
// worker threads.
const CHUNK: u64 = 1 << 14;

fn graphs_up_to_iso(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if n == 0 || n > GENERATION_CAP {
        return Err(Error::Capacity {
            what: "generation order",
            requested: n,
            limit: GENERATION_CAP,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let masks: u64 = 1 << pairs.len();
    let chunks = masks.div_ceil(CHUNK);
    let classes = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut local: BTreeMap<CanonicalForm, ()> = BTreeMap::new();
            for mask in c * CHUNK..((c + 1) * CHUNK).min(masks) {
                let g = from_mask(n, &pairs, mask);
                if !degrees_non_increasing(&g) {
                    continue;
                }
                if connected_only && !g.is_connected().expect("n >= 1") {
                    continue;
                }
                local.insert(canonical_form(&g).expect("n <= cap"), ());
            }
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(classes.into_keys().map(|form| form.to_graph()).collect())
}

fn degrees_non_increasing(g: &Graph) -> bool {
    (1..g.order()).all(|v| g.nbhd(v - 1).len() >= g.nbhd(v).len())
}

fn from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut rows = vec![VertexSet::EMPTY; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            rows[i].insert(j);
            rows[j].insert(i);
        }
    }
    Graph::from_rows(rows).expect("mask graphs are simple")
}

/// Writes one graph6 record per line.
pub fn write_graph6_lines<W: Write>(graphs: &[Graph], mut out: W) -> Result<()> {
    for g in graphs {
        let rec = encode_graph6(g)?;
        writeln!(out, "{rec}").map_err(|e| Error::Input(format!("write failed: {e}")))?;
    }
    Ok(())
}

/// Reads graph6 records, one per nonblank line. Parse offsets are reported
/// together with the 1-based line number.
pub fn read_graph6_lines<R: BufRead>(input: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::Input(format!("read failed: {e}")))?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(decode_graph6(&line).map_err(|e| match e {
            Error::Parse { offset, reason } => Error::Parse {
                offset,
                reason: format!("line {}: {reason}", i + 1),
            },
            other => other,
        })?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::families::{complete, path};

    #[test]
    fn small_class_counts() {
        assert_eq!(connected_graphs_up_to_iso(1).unwrap().len(), 1);
        let two = connected_graphs_up_to_iso(2).unwrap();
        assert_eq!(two, vec![complete(2).unwrap()]);
        let three = connected_graphs_up_to_iso(3).unwrap();
        assert_eq!(three.len(), 2);
        assert!(three.iter().any(|g| is_isomorphic(g, &path(3).unwrap()).unwrap()));
        assert!(three.iter().any(|g| is_isomorphic(g, &complete(3).unwrap()).unwrap()));
        assert_eq!(connected_graphs_up_to_iso(4).unwrap().len(), 6);
        assert_eq!(connected_graphs_up_to_iso(5).unwrap().len(), 21);
        assert_eq!(all_graphs_up_to_iso(4).unwrap().len(), 11);
        assert_eq!(all_graphs_up_to_iso(5).unwrap().len(), 34);
    }

    #[test]
    fn generation_bounds() {
        assert!(connected_graphs_up_to_iso(0).is_err());
        assert!(matches!(
            connected_graphs_up_to_iso(8),
            Err(Error::Capacity { requested: 8, .. })
        ));
    }

    #[test]
    fn output_is_sorted_and_distinct() {
        let gs = connected_graphs_up_to_iso(5).unwrap();
        let forms: Vec<_> = gs.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert!(forms.windows(2).all(|w| w[0] < w[1]));
        assert!(gs.iter().all(|g| g.is_connected().unwrap()));
        // Representatives are their own canonical relabelling.
        assert!(gs.iter().all(|g| canonical_form(g).unwrap().to_graph() == *g));
    }

    #[test]
    fn line_io() {
        let gs = connected_graphs_up_to_iso(4).unwrap();
        let mut buf = Vec::new();
        write_graph6_lines(&gs, &mut buf).unwrap();
        assert_eq!(buf.iter().filter(|&&b| b == b'\n').count(), 6);
        let back = read_graph6_lines(&buf[..]).unwrap();
        assert_eq!(back, gs);
        let err = read_graph6_lines(&b"Bg\n\nB!\n"[..]).unwrap_err();
        assert!(matches!(err, Error::Parse { offset: 1, ref reason } if reason.starts_with("line 3")));
    }
}
