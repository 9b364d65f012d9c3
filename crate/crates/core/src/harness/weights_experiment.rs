//! Instrument for the open weight question: rerun the partition pipeline
//! with the objective |X1| + a|X0| + b|Y| for a grid of rationals (a, b) and
//! record how far each cell gets. No conclusions drawn; certificates only.

use super::enumerate::enumerate_subcubic_up_to;
use super::HarnessError;
use crate::classify::{in_class, ClassTag};
use crate::constructive::partition::{partition_with, PartitionOptions};
use crate::constructive::weighted::Weights;
use crate::graph::{emit_graph6, Graph, Rational};
use crate::seq::PackingSequence;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct OrientationResult {
    pub c1_class: u32,
    pub c2_class: u32,
    pub attempted: usize,
    pub succeeded: usize,
    /// graph6 of the first in-class graph the pipeline failed on.
    pub first_failure: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightCell {
    pub alpha: String,
    pub beta: String,
    /// Integer (linked, lone, two) weights after clearing denominators.
    pub weights: Option<(i64, i64, i64)>,
    /// Present when the cell was skipped instead of run.
    pub note: Option<String>,
    pub orientations: Vec<OrientationResult>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightsReport {
    pub seq: String,
    pub nmax: usize,
    pub graphs_in_class: usize,
    pub cells: Vec<WeightCell>,
}

fn lcm(a: i64, b: i64) -> i64 {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    a / gcd(a, b) * b
}

/// Clears denominators so the exact search can stay in integers: weight
/// vector (D, a*D, b*D) for D = lcm of the denominators. The canonical
/// (7/10, 7/20) becomes (20, 14, 7).
pub fn scaled_weights(alpha: Rational, beta: Rational) -> Option<Weights> {
    if alpha.num() <= 0 || beta.num() <= 0 {
        return None;
    }
    let d = lcm(alpha.den(), beta.den());
    Some(Weights {
        linked_three: d,
        lone_three: alpha.num() * (d / alpha.den()),
        two: beta.num() * (d / beta.den()),
    })
}

/// Runs the grid over every 1-saturated enumerated graph, trying both
/// assignments of the pair classes to C1/C2. Distance-fact enforcement is
/// off: the instrument measures how often the search still lands a verified
/// coloring, not whether the facts hold.
pub fn phi_weight_experiment(
    alphas: &[Rational],
    betas: &[Rational],
    seq: &PackingSequence,
    nmax: usize,
) -> Result<WeightsReport, HarnessError> {
    if seq.len() != 4 {
        return Err(HarnessError::BadInput(format!(
            "the partition pipeline targets four classes, got ({seq})"
        )));
    }
    let graphs: Vec<Graph> = enumerate_subcubic_up_to(nmax)?
        .into_iter()
        .filter(|g| in_class(g, ClassTag::Sat(1)))
        .collect();

    let mut cells = Vec::new();
    for &alpha in alphas {
        for &beta in betas {
            let Some(weights) = scaled_weights(alpha, beta) else {
                cells.push(WeightCell {
                    alpha: alpha.to_string(),
                    beta: beta.to_string(),
                    weights: None,
                    note: Some("skipped: weights must be positive".into()),
                    orientations: Vec::new(),
                });
                continue;
            };
            let orientations = [(3u32, 4u32), (4u32, 3u32)]
                .into_iter()
                .map(|(c1, c2)| run_orientation(&graphs, seq, weights, c1, c2))
                .collect();
            cells.push(WeightCell {
                alpha: alpha.to_string(),
                beta: beta.to_string(),
                weights: Some((weights.linked_three, weights.lone_three, weights.two)),
                note: None,
                orientations,
            });
        }
    }

    Ok(WeightsReport {
        seq: seq.to_string(),
        nmax,
        graphs_in_class: graphs.len(),
        cells,
    })
}

fn run_orientation(
    graphs: &[Graph],
    seq: &PackingSequence,
    weights: Weights,
    c1_class: u32,
    c2_class: u32,
) -> OrientationResult {
    let opts = PartitionOptions {
        weights,
        c1_class,
        c2_class,
        seq: seq.clone(),
        enforce_claims: false,
        ..PartitionOptions::default()
    };
    let outcomes: Vec<bool> = graphs
        .par_iter()
        .map(|g| partition_with(g, &opts).is_ok())
        .collect();
    let succeeded = outcomes.iter().filter(|&&ok| ok).count();
    let first_failure = outcomes
        .iter()
        .position(|&ok| !ok)
        .map(|i| emit_graph6(&graphs[i]));
    OrientationResult {
        c1_class,
        c2_class,
        attempted: graphs.len(),
        succeeded,
        first_failure,
    }
}
