//! Exact engine for packing colorings of subcubic graphs: graph model and
//! codecs, saturation taxonomy, exact solver, constructive pipelines with
//! machine-checked certificates, and an enumeration/sweep harness.

pub mod canon;
pub mod classify;
pub mod coloring;
pub mod constructive;
pub mod fixtures;
pub mod graph;
pub mod harness;
pub mod seq;
pub mod solver;

pub use classify::{in_class, matching_tags, profile, ClassTag, ClassifyError, SaturationProfile};
pub use harness::chromatic::{packing_chromatic, ChromaticOutcome};
pub use harness::claims::{check_paper_claims, ClaimEntry, ClaimsReport};
pub use harness::enumerate::{enumerate_subcubic, enumerate_subcubic_up_to, ingest_graph6};
pub use harness::hunt::{search_counterexample, HuntOutcome, HuntStatus};
pub use harness::ledger::{read_ledger, Ledger, LedgerHeader, SweepRecord};
pub use harness::subdivision::{subdivision_check, SubdivisionReport};
pub use harness::sweep::{sweep, tally, SweepConfig};
pub use harness::weights_experiment::{phi_weight_experiment, WeightsReport};
pub use harness::HarnessError;
pub use constructive::distance2::{color_1sat_12e4, color_30sat_12e5, ConflictOutcome, GreedyOutcome};
pub use constructive::partition::{partition_1133, PartitionOptions, PartitionOutcome};
pub use constructive::{ConstructError, ConstructionTrace};
pub use coloring::{verify_coloring, verify_with_distances, PackingColoring, VerifyError, Violation};
pub use graph::{
    all_pairs_distances, average_degree, DistanceMatrix, Graph, GraphError, Rational, INFINITY,
};
pub use seq::{PackingSequence, SeqError};
pub use solver::{
    brute_force_colorable, decide_colorable, ColorResult, SolveOutcome, SolverError,
    DEFAULT_BUDGET,
};
