//! Append-only JSON-lines ledger. Every run writes one header line carrying
//! the engine version and configuration, then one self-contained line per
//! record; re-runs append and never rewrite history.

use super::{engine_version, HarnessError};
use serde::{Deserialize, Serialize};
use std::fs::OpenOptions;
use std::io::{BufWriter, Write};
use std::path::Path;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub graph6: String,
    pub n: usize,
    /// None when the graph is not subcubic (possible for ingested corpora).
    pub sat_level: Option<u8>,
    pub heavy_sat_level: Option<u8>,
    pub cubic: Option<bool>,
    /// Class the sweep filtered on.
    pub class: String,
    pub seq: String,
    /// feasible | infeasible | budget | skip
    pub verdict: String,
    /// Constructive-pipeline verdict, when one ran.
    pub pipeline: Option<String>,
    pub nodes: u64,
    pub millis: u64,
    pub engine: String,
}

impl SweepRecord {
    /// Copy with the wall-clock field zeroed; two runs over the same inputs
    /// must agree on everything else.
    pub fn normalized(&self) -> SweepRecord {
        SweepRecord { millis: 0, ..self.clone() }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LedgerHeader {
    pub engine: String,
    pub config: String,
}

pub struct Ledger {
    out: BufWriter<std::fs::File>,
}

impl Ledger {
    /// Opens for appending (creating if absent) and writes this run's header.
    pub fn open(path: &Path, config: &str) -> Result<Ledger, HarnessError> {
        let file = OpenOptions::new().create(true).append(true).open(path)?;
        let mut out = BufWriter::new(file);
        let header = LedgerHeader { engine: engine_version(), config: config.to_string() };
        serde_json::to_writer(&mut out, &header).map_err(io_err)?;
        out.write_all(b"\n")?;
        Ok(Ledger { out })
    }

    pub fn append(&mut self, record: &SweepRecord) -> Result<(), HarnessError> {
        serde_json::to_writer(&mut self.out, record).map_err(io_err)?;
        self.out.write_all(b"\n")?;
        Ok(())
    }

    pub fn append_all(&mut self, records: &[SweepRecord]) -> Result<(), HarnessError> {
        for r in records {
            self.append(r)?;
        }
        Ok(())
    }

    pub fn finish(mut self) -> Result<(), HarnessError> {
        self.out.flush()?;
        Ok(())
    }
}

fn io_err(e: serde_json::Error) -> HarnessError {
    HarnessError::Io(std::io::Error::other(e))
}

/// Reads a ledger back: header lines and records, in file order.
pub fn read_ledger(path: &Path) -> Result<(Vec<LedgerHeader>, Vec<SweepRecord>), HarnessError> {
    let text = std::fs::read_to_string(path)?;
    let mut headers = Vec::new();
    let mut records = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        if let Ok(r) = serde_json::from_str::<SweepRecord>(line) {
            records.push(r);
        } else if let Ok(h) = serde_json::from_str::<LedgerHeader>(line) {
            headers.push(h);
        } else {
            return Err(HarnessError::BadInput(format!(
                "ledger line {} is neither header nor record",
                idx + 1
            )));
        }
    }
    Ok((headers, records))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(verdict: &str) -> SweepRecord {
        SweepRecord {
            graph6: "D?{".into(),
            n: 5,
            sat_level: Some(1),
            heavy_sat_level: Some(0),
            cubic: Some(false),
            class: "sat1".into(),
            seq: "1,1,3,3".into(),
            verdict: verdict.into(),
            pipeline: None,
            nodes: 17,
            millis: 3,
            engine: engine_version(),
        }
    }

    #[test]
    fn append_then_read_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.jsonl");
        let mut ledger = Ledger::open(&path, "first").unwrap();
        ledger.append(&sample("feasible")).unwrap();
        ledger.finish().unwrap();
        let mut ledger = Ledger::open(&path, "second").unwrap();
        ledger.append(&sample("infeasible")).unwrap();
        ledger.finish().unwrap();

        let (headers, records) = read_ledger(&path).unwrap();
        assert_eq!(headers.len(), 2, "one header per run");
        assert_eq!(headers[1].config, "second");
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].verdict, "feasible");
        assert_eq!(records[1].normalized().millis, 0);
    }

    #[test]
    fn junk_lines_are_reported_with_their_number() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.jsonl");
        std::fs::write(&path, "{\"engine\":\"x\",\"config\":\"y\"}\nnot json\n").unwrap();
        let err = read_ledger(&path).unwrap_err();
        assert!(err.to_string().contains("line 2"));
    }
}
