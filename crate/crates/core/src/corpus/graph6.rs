//! graph6 codec, short form (orders up to 62).
//!
//! Layout: one byte `n + 63`, then the upper triangle of the adjacency matrix
//! in column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) packed six bits per
//! byte, most significant first, each byte offset by 63, zero-padded.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Largest order representable with the one-byte header.
pub const SHORT_FORM_MAX: usize = 62;

const HEADER: &str = ">>graph6<<";

/// A graph6 string. Always printable ASCII in `63..=126`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph6Record(String);

impl Graph6Record {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for Graph6Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl serde::Serialize for Graph6Record {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

pub fn encode_graph6(g: &Graph) -> Result<Graph6Record> {
    let n = g.order();
    if n > SHORT_FORM_MAX {
        return Err(Error::Capacity {
            what: "graph6 short-form order",
            requested: n,
            limit: SHORT_FORM_MAX,
        });
    }
    let total = n * n.saturating_sub(1) / 2;
    let mut out = String::with_capacity(1 + total.div_ceil(6));
    out.push(char::from(n as u8 + 63));
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(char::from(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from((acc << (6 - filled)) + 63));
    }
    Ok(Graph6Record(out))
}

/// Decodes one record. A leading `>>graph6<<` header and trailing whitespace
/// are accepted; offsets in errors are relative to the record itself.
pub fn decode_graph6(record: &str) -> Result<Graph> {
    let body = record.strip_prefix(HEADER).unwrap_or(record).trim_end();
    let bytes = body.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(parse_err(0, "empty record"));
    };
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(i, format!("byte {b} outside 63..=126")));
        }
    }
    if first == 126 {
        return Err(parse_err(0, "long-form header (order > 62) is not supported"));
    }
    let n = (first - 63) as usize;
    let total = n * n.saturating_sub(1) / 2;
    let expected = 1 + total.div_ceil(6);
    if bytes.len() < expected {
        return Err(parse_err(
            bytes.len(),
            format!("truncated: order {n} needs {expected} bytes, got {}", bytes.len()),
        ));
    }
    if bytes.len() > expected {
        return Err(parse_err(expected, format!("trailing data after {expected} bytes")));
    }
    let bit = |t: usize| -> bool {
        let b = bytes[1 + t / 6] - 63;
        (b >> (5 - t % 6)) & 1 == 1
    };
    let pad_start = total;
    for t in pad_start..(expected - 1) * 6 {
        if bit(t) {
            return Err(parse_err(1 + t / 6, "nonzero padding bits"));
        }
    }
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
    Graph::from_rows(rows)
}

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        reason: reason.into(),
    }
}
