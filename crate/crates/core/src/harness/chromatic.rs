//! Packing chromatic number: the smallest k such that the staircase
//! sequence (1,2,...,k) colors the graph, found by ascending exact search.

use crate::graph::Graph;
use crate::seq::PackingSequence;
use crate::solver::decide_colorable;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChromaticOutcome {
    /// (1,...,k) is feasible and (1,...,k-1) is not.
    Value { k: u32, nodes: u64 },
    /// Every staircase up to (1,...,cap) is infeasible.
    ExceedsCap { cap: u32, nodes: u64 },
    /// The solver ran out of nodes while deciding (1,...,at_k).
    Budget { at_k: u32, nodes: u64 },
}

/// Tries k = 1, 2, ... in order; infeasibility at k implies infeasibility
/// below, so the first feasible staircase is the chromatic value.
pub fn packing_chromatic(g: &Graph, cap: u32, budget: u64) -> ChromaticOutcome {
    let mut nodes = 0u64;
    for k in 1..=cap {
        let seq = PackingSequence::new((1..=k).collect()).expect("staircase is valid");
        let outcome = decide_colorable(g, &seq, budget);
        nodes += outcome.nodes;
        match outcome.result.verdict() {
            "feasible" => return ChromaticOutcome::Value { k, nodes },
            "budget" => return ChromaticOutcome::Budget { at_k: k, nodes },
            _ => {}
        }
    }
    ChromaticOutcome::ExceedsCap { cap, nodes }
}
