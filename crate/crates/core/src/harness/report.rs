use std::collections::BTreeMap;
use std::time::Duration;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::is_isomorphic;
use crate::corpus::{encode_graph6, Graph6Record};
use crate::domination::WellDomReport;
use crate::error::{Error, Result};
use crate::families::{complete_bipartite, cycle, path};
use crate::graph::Graph;
use crate::set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    /// Two minimal dominating sets of different sizes.
    UnequalMinimalDominatingSets,
    /// Two maximal independent sets of different sizes.
    UnequalMaximalIndependentSets,
    /// All minimal dominating sets share `size`.
    WellDominated,
    /// All maximal independent sets share `size`.
    WellCovered,
    /// `sets[0]` was expected to be minimal dominating and is not.
    NotMinimalDominating,
    /// A set with the recorded property; used for constructed gadgets.
    Gadget,
    /// Free-form mismatch description in `note`.
    Mismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub sets: Vec<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Witness {
    pub fn note(kind: WitnessKind, note: impl Into<String>) -> Self {
        Witness {
            kind,
            sets: Vec::new(),
            size: None,
            note: Some(note.into()),
        }
    }

    /// Witness for a domination verdict: the refuting pair, or the common size.
    pub fn domination(report: &WellDomReport) -> Self {
        Self::from_report(
            report,
            WitnessKind::UnequalMinimalDominatingSets,
            WitnessKind::WellDominated,
        )
    }

    pub fn covering(report: &WellDomReport) -> Self {
        Self::from_report(
            report,
            WitnessKind::UnequalMaximalIndependentSets,
            WitnessKind::WellCovered,
        )
    }

    fn from_report(report: &WellDomReport, refuted: WitnessKind, holds: WitnessKind) -> Self {
        match report.witnesses() {
            Some((a, b)) => Witness {
                kind: refuted,
                sets: vec![a, b],
                size: None,
                note: None,
            },
            None => Witness {
                kind: holds,
                sets: Vec::new(),
                size: report.common_size,
                note: None,
            },
        }
    }
}

/// One checked case of a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub label: String,
    /// Factor graphs (or the single input graph), as graph6.
    pub factors: Vec<Graph6Record>,
    pub product_order: usize,
    /// What property `verdict` reports.
    pub check: String,
    pub verdict: bool,
    pub expected: bool,
    pub conforming: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Instance {
    pub fn new(
        label: impl Into<String>,
        factors: &[&Graph],
        product_order: usize,
        check: impl Into<String>,
        verdict: bool,
        expected: bool,
    ) -> Result<Self> {
        Ok(Instance {
            label: label.into(),
            factors: factors.iter().map(|g| encode_graph6(g)).collect::<Result<_>>()?,
            product_order,
            check: check.into(),
            verdict,
            expected,
            conforming: verdict == expected,
            witness: None,
        })
    }

    pub fn with_witness(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }
}

/// Result of running one claim verifier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub claim_id: String,
    pub parameters: BTreeMap<String, usize>,
    pub instances: Vec<Instance>,
    pub conforming: bool,
    pub elapsed_ms: u64,
}

impl SweepReport {
    pub(crate) fn new(
        claim_id: &str,
        parameters: &[(&str, usize)],
        instances: Vec<Instance>,
        elapsed: Duration,
    ) -> Self {
        let conforming = instances.iter().all(|i| i.conforming);
        SweepReport {
            claim_id: claim_id.to_string(),
            parameters: parameters.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            instances,
            conforming,
            elapsed_ms: elapsed.as_millis() as u64,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Instance> {
        self.instances.iter().filter(|i| !i.conforming)
    }

    /// Copy with the wall-clock field zeroed, for run-to-run comparison.
    pub fn without_timing(&self) -> SweepReport {
        SweepReport {
            elapsed_ms: 0,
            ..self.clone()
        }
    }
}

/// Worker configuration for sweeps. Results are merged in input order, so
/// reports do not depend on the worker count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub workers: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { workers: 1 }
    }
}

impl SweepConfig {
    pub fn new(workers: usize) -> Self {
        SweepConfig {
            workers: workers.max(1),
        }
    }

    pub(crate) fn map<T, R, F>(&self, items: &[T], f: F) -> Result<Vec<R>>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Result<R> + Sync + Send,
    {
        if self.workers <= 1 {
            return items.iter().map(f).collect();
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
        pool.install(|| items.par_iter().map(f).collect())
    }
}

/// Short human name for common small graphs, graph6 otherwise.
pub fn describe(g: &Graph) -> String {
    if let Some(name) = g.name() {
        return name.to_string();
    }
    let n = g.order();
    if n == 0 {
        return "K0".into();
    }
    if g.is_complete() {
        return format!("K{n}");
    }
    if n <= crate::canon::ISO_CAP {
        let mut known = vec![(format!("P{n}"), path(n))];
        if n >= 3 {
            known.push((format!("C{n}"), cycle(n)));
        }
        for r in 1..=n / 2 {
            known.push((format!("K{r},{}", n - r), complete_bipartite(r, n - r)));
        }
        for (name, h) in known {
            if let Ok(h) = h {
                if is_isomorphic(g, &h).unwrap_or(false) {
                    return name;
                }
            }
        }
    }
    encode_graph6(g).map_or_else(|_| format!("order-{n}"), |r| r.into_string())
}

/// Label `A□B` for a product instance.
pub fn pair_label(g: &Graph, h: &Graph) -> String {
    format!("{}□{}", describe(g), describe(h))
}
