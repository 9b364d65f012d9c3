//! Exhaustive counterexample hunt: walk the enumeration level by level and
//! report the first in-class graph the solver rejects, or certify that none
//! exists up to the size bound.

use super::enumerate::enumerate_subcubic;
use super::ledger::SweepRecord;
use super::sweep::{record_for, SweepConfig};
use super::HarnessError;
use crate::canon::canonical_code;
use crate::classify::ClassTag;
use crate::graph::Graph;
use crate::seq::PackingSequence;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HuntStatus {
    /// An in-class graph the sequence cannot color.
    Found { graph6: String, n: usize },
    /// Every in-class graph up to the bound was decided feasible.
    Exhausted { decided: usize },
    /// No counterexample seen, but some graphs exhausted the node budget.
    Inconclusive { decided: usize, budget_hits: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct HuntOutcome {
    pub status: HuntStatus,
    /// One record per graph inspected, in inspection order.
    pub records: Vec<SweepRecord>,
}

/// Searches levels 1..=nmax in enumeration order and stops at the first
/// infeasible in-class graph, so reruns find the same witness. Graphs whose
/// canonical code is listed in `exclude` are skipped (recorded as "skip").
pub fn search_counterexample(
    tag: ClassTag,
    seq: &PackingSequence,
    nmax: usize,
    budget: u64,
    exclude: &[String],
) -> Result<HuntOutcome, HarnessError> {
    let cfg = SweepConfig { tag, seq: seq.clone(), budget };
    let mut records = Vec::new();
    let mut decided = 0usize;
    let mut budget_hits = 0usize;

    for n in 1..=nmax {
        for g in enumerate_subcubic(n)? {
            if exclude.iter().any(|code| code == &canonical_code(&g)) {
                records.push(excluded_record(&g, &cfg));
                continue;
            }
            let record = record_for(&g, &cfg);
            let verdict = record.verdict.clone();
            records.push(record);
            match verdict.as_str() {
                "infeasible" => {
                    return Ok(HuntOutcome {
                        status: HuntStatus::Found {
                            graph6: records.last().unwrap().graph6.clone(),
                            n,
                        },
                        records,
                    });
                }
                "feasible" => decided += 1,
                "budget" => budget_hits += 1,
                _ => {}
            }
        }
    }

    let status = if budget_hits == 0 {
        HuntStatus::Exhausted { decided }
    } else {
        HuntStatus::Inconclusive { decided, budget_hits }
    };
    Ok(HuntOutcome { status, records })
}

fn excluded_record(g: &Graph, cfg: &SweepConfig) -> SweepRecord {
    let prof = crate::classify::profile(g).ok();
    SweepRecord {
        graph6: crate::graph::emit_graph6(g),
        n: g.n(),
        sat_level: prof.as_ref().map(|p| p.sat_level as u8),
        heavy_sat_level: prof.as_ref().map(|p| p.heavy_sat_level as u8),
        cubic: prof.as_ref().map(|p| p.is_cubic()),
        class: format!("{}", cfg.tag),
        seq: cfg.seq.to_string(),
        verdict: "skip".into(),
        pipeline: None,
        nodes: 0,
        millis: 0,
        engine: super::engine_version(),
    }
}
