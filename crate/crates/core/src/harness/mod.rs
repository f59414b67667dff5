//! Claim verifiers: exhaustive sweeps over small corpora with structured,
//! replayable reports.

mod claims;
mod gadgets;
mod report;

pub use claims::*;
pub use gadgets::{
    gadget_bipartite_sets, gadget_f1_sets, gadget_f2_sets, gadget_lemma7_set, gadget_star_sets,
    reduce_to_minimal,
};
pub use report::{describe, pair_label, Instance, SweepConfig, SweepReport, Witness, WitnessKind};
