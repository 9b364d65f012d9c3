//! Link between a graph and its subdivision: whenever G takes a (1,1,2,2)
//! coloring, the subdivision S(G) must take (1,2,3,4,5).

use super::enumerate::enumerate_subcubic_up_to;
use super::HarnessError;
use crate::graph::{emit_graph6, subdivide};
use crate::seq::PackingSequence;
use crate::solver::decide_colorable;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct SubdivisionReport {
    pub nmax: usize,
    /// Graphs feasible for (1,1,2,2) whose subdivision was then decided.
    pub tested: usize,
    /// Graphs skipped because (1,1,2,2) is infeasible for them.
    pub skipped: usize,
    /// Runs that exhausted the node budget at either stage.
    pub budget_hits: usize,
    /// graph6 of every G where the implication failed.
    pub failures: Vec<String>,
}

impl SubdivisionReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty() && self.budget_hits == 0
    }
}

pub fn subdivision_check(nmax: usize, budget: u64) -> Result<SubdivisionReport, HarnessError> {
    let base: PackingSequence = "1,1,2,2".parse().expect("valid sequence");
    let lifted: PackingSequence = "1,2,3,4,5".parse().expect("valid sequence");
    let graphs = enumerate_subcubic_up_to(nmax)?;

    // Per-graph verdict: Ok(None) = skipped, Ok(Some(g6)) = failure witness,
    // Err(()) = budget hit.
    let verdicts: Vec<Result<Option<String>, ()>> = graphs
        .par_iter()
        .map(|g| {
            let first = decide_colorable(g, &base, budget);
            match first.result.verdict() {
                "infeasible" => return Ok(None),
                "budget" => return Err(()),
                _ => {}
            }
            let second = decide_colorable(&subdivide(g), &lifted, budget);
            match second.result.verdict() {
                "feasible" => Ok(Some(String::new())),
                "infeasible" => Ok(Some(emit_graph6(g))),
                _ => Err(()),
            }
        })
        .collect();

    let mut report = SubdivisionReport {
        nmax,
        tested: 0,
        skipped: 0,
        budget_hits: 0,
        failures: Vec::new(),
    };
    for v in verdicts {
        match v {
            Ok(None) => report.skipped += 1,
            Ok(Some(witness)) => {
                report.tested += 1;
                if !witness.is_empty() {
                    report.failures.push(witness);
                }
            }
            Err(()) => report.budget_hits += 1,
        }
    }
    Ok(report)
}
