//! Exact decision procedures for packing colorability.
//!
//! `decide_colorable` is the production search: backtracking over vertices in
//! descending-degree order with distance pruning and symmetry breaking over
//! equal-bound classes, solved per connected component (distance constraints
//! never cross components). `brute_force_colorable` is the deliberately
//! artless oracle used to cross-check it: fixed vertex order, every class
//! tried, no symmetry breaking, no ordering heuristics.

use crate::coloring::{verify_with_distances, PackingColoring};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};
use crate::seq::PackingSequence;
use thiserror::Error;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, PartialEq)]
pub enum SolverError {
    #[error("brute force would enumerate {states:e} assignments, over the 1e8 guard")]
    TooLarge { states: f64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColorResult {
    Feasible(PackingColoring),
    Infeasible,
    BudgetExhausted,
}

impl ColorResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self, ColorResult::Feasible(_))
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            ColorResult::Feasible(_) => "feasible",
            ColorResult::Infeasible => "infeasible",
            ColorResult::BudgetExhausted => "budget",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub result: ColorResult,
    /// Assignments explored across all components.
    pub nodes: u64,
}

struct ComponentSearch<'a> {
    dm: &'a DistanceMatrix,
    bounds: &'a [u32],
    order: Vec<usize>,
    classes: Vec<u32>,
    members: Vec<Vec<usize>>,
    nodes: u64,
    budget: u64,
}

enum SearchStatus {
    Found,
    Exhausted,
    OutOfBudget,
}

impl<'a> ComponentSearch<'a> {
    fn fits(&self, v: usize, class_idx: usize) -> bool {
        let required = self.bounds[class_idx] + 1;
        self.members[class_idx]
            .iter()
            .all(|&u| self.dm.dist(u, v) >= required)
    }

    /// Symmetry breaking: among empty classes with equal bounds, only the
    /// lowest-indexed one may receive its first vertex.
    fn symmetric_skip(&self, class_idx: usize) -> bool {
        class_idx > 0
            && self.bounds[class_idx - 1] == self.bounds[class_idx]
            && self.members[class_idx - 1].is_empty()
    }

    fn run(&mut self, depth: usize) -> SearchStatus {
        if depth == self.order.len() {
            return SearchStatus::Found;
        }
        let v = self.order[depth];
        for class_idx in 0..self.bounds.len() {
            if self.symmetric_skip(class_idx) || !self.fits(v, class_idx) {
                continue;
            }
            if self.nodes >= self.budget {
                return SearchStatus::OutOfBudget;
            }
            self.nodes += 1;
            self.classes[v] = class_idx as u32 + 1;
            self.members[class_idx].push(v);
            match self.run(depth + 1) {
                SearchStatus::Exhausted => {
                    self.classes[v] = 0;
                    self.members[class_idx].pop();
                }
                found_or_budget => return found_or_budget,
            }
        }
        SearchStatus::Exhausted
    }
}

/// Exact decision with a node budget. Budget exhaustion is a result, not an
/// error; infeasible means the search space was exhausted.
pub fn decide_colorable(g: &Graph, seq: &PackingSequence, budget: u64) -> SolveOutcome {
    let mut coloring = PackingColoring::uncolored(g.n());
    let mut total_nodes = 0u64;
    for comp in g.components() {
        let sub = g.induced(&comp);
        let dm = all_pairs_distances(&sub);
        let mut order: Vec<usize> = (0..sub.n()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(sub.degree(v)), v));
        let mut search = ComponentSearch {
            dm: &dm,
            bounds: seq.values(),
            order,
            classes: vec![0; sub.n()],
            members: vec![Vec::new(); seq.len()],
            nodes: 0,
            budget: budget.saturating_sub(total_nodes),
        };
        let status = search.run(0);
        total_nodes += search.nodes;
        match status {
            SearchStatus::Found => {
                for (local, &global) in comp.iter().enumerate() {
                    coloring.set(global, search.classes[local]);
                }
            }
            SearchStatus::Exhausted => {
                return SolveOutcome {
                    result: ColorResult::Infeasible,
                    nodes: total_nodes,
                };
            }
            SearchStatus::OutOfBudget => {
                return SolveOutcome {
                    result: ColorResult::BudgetExhausted,
                    nodes: total_nodes,
                };
            }
        }
    }
    debug_assert!(verify_with_distances(g, &all_pairs_distances(g), seq, &coloring)
        .map(|v| v.is_empty())
        .unwrap_or(false));
    SolveOutcome {
        result: ColorResult::Feasible(coloring),
        nodes: total_nodes,
    }
}

/// Ground-truth oracle: recursive enumeration of assignments in vertex index
/// order with incremental distance checks. Guarded by k^n <= 1e8.
pub fn brute_force_colorable(g: &Graph, seq: &PackingSequence) -> Result<bool, SolverError> {
    let n = g.n();
    let k = seq.len();
    let states = (k as f64).powi(n as i32);
    if states > 1e8 {
        return Err(SolverError::TooLarge { states });
    }
    let dm = all_pairs_distances(g);
    let mut classes = vec![0u32; n];

    fn rec(
        v: usize,
        n: usize,
        k: usize,
        dm: &DistanceMatrix,
        bounds: &[u32],
        classes: &mut [u32],
    ) -> bool {
        if v == n {
            return true;
        }
        for c in 1..=k as u32 {
            let required = bounds[c as usize - 1] + 1;
            let ok = (0..v).all(|u| classes[u] != c || dm.dist(u, v) >= required);
            if ok {
                classes[v] = c;
                if rec(v + 1, n, k, dm, bounds, classes) {
                    return true;
                }
                classes[v] = 0;
            }
        }
        false
    }

    Ok(rec(0, n, k, &dm, seq.values(), &mut classes))
}
