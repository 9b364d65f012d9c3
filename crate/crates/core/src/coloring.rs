//! Colorings and the distance verifier.
//!
//! A coloring assigns every vertex a 1-based class index into a packing
//! sequence. The verifier is the ground truth the rest of the crate is held
//! to: two vertices in class i must be at distance >= a_i + 1.

use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};
use crate::seq::PackingSequence;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("vertex {vertex} is uncolored")]
    PartialColoring { vertex: usize },
    #[error("vertex {vertex} has class {class} out of range 1..={k}")]
    ClassOutOfRange { vertex: usize, class: u32, k: usize },
    #[error("malformed coloring entry {0:?}")]
    Malformed(String),
}

/// Total assignment of classes to vertices; 0 marks "not yet colored" and is
/// rejected by verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingColoring {
    classes: Vec<u32>,
}

impl PackingColoring {
    pub fn uncolored(n: usize) -> Self {
        PackingColoring {
            classes: vec![0; n],
        }
    }

    pub fn from_classes(classes: Vec<u32>) -> Self {
        PackingColoring { classes }
    }

    pub fn n(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, v: usize) -> u32 {
        self.classes[v]
    }

    pub fn set(&mut self, v: usize, class: u32) {
        self.classes[v] = class;
    }

    pub fn classes(&self) -> &[u32] {
        &self.classes
    }

    pub fn members_of(&self, class: u32) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&v| self.classes[v] == class)
            .collect()
    }

    /// Parses "v:class" comma lists, e.g. "0:1,1:2,2:1".
    pub fn parse(s: &str, n: usize) -> Result<Self, VerifyError> {
        let mut classes = vec![0u32; n];
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(PackingColoring { classes });
        }
        for entry in trimmed.split(',') {
            let entry = entry.trim();
            let (v, c) = entry
                .split_once(':')
                .ok_or_else(|| VerifyError::Malformed(entry.to_string()))?;
            let v: usize = v
                .trim()
                .parse()
                .map_err(|_| VerifyError::Malformed(entry.to_string()))?;
            let c: u32 = c
                .trim()
                .parse()
                .map_err(|_| VerifyError::Malformed(entry.to_string()))?;
            if v >= n || classes[v] != 0 {
                return Err(VerifyError::Malformed(entry.to_string()));
            }
            classes[v] = c;
        }
        Ok(PackingColoring { classes })
    }
}

impl fmt::Display for PackingColoring {
    /// Serializes as a "v:class" comma list.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, &c) in self.classes.iter().enumerate() {
            if v > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}:{c}")?;
        }
        Ok(())
    }
}

/// One distance violation: u and v share `class` at distance `dist`,
/// but the class demands at least `required`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub class: u32,
    pub dist: u32,
    pub required: u32,
}

/// Checks a total coloring; Ok(vec![]) means valid.
pub fn verify_coloring(
    g: &Graph,
    seq: &PackingSequence,
    coloring: &PackingColoring,
) -> Result<Vec<Violation>, VerifyError> {
    let dm = all_pairs_distances(g);
    verify_with_distances(g, &dm, seq, coloring)
}

/// Same check against a precomputed distance matrix.
pub fn verify_with_distances(
    g: &Graph,
    dm: &DistanceMatrix,
    seq: &PackingSequence,
    coloring: &PackingColoring,
) -> Result<Vec<Violation>, VerifyError> {
    let n = g.n();
    assert_eq!(coloring.n(), n, "coloring size mismatch");
    let k = seq.len();
    for v in 0..n {
        let c = coloring.class_of(v);
        if c == 0 {
            return Err(VerifyError::PartialColoring { vertex: v });
        }
        if c as usize > k {
            return Err(VerifyError::ClassOutOfRange { vertex: v, class: c, k });
        }
    }
    let mut violations = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let c = coloring.class_of(u);
            if c != coloring.class_of(v) {
                continue;
            }
            let required = seq.bound(c) + 1;
            let dist = dm.dist(u, v);
            if dist < required {
                violations.push(Violation {
                    u,
                    v,
                    class: c,
                    dist,
                    required,
                });
            }
        }
    }
    Ok(violations)
}

/// True when every *colored* vertex pair respects its class distance;
/// uncolored (0) vertices are ignored. Used by in-progress constructions.
pub fn partial_ok(dm: &DistanceMatrix, seq: &PackingSequence, classes: &[u32]) -> bool {
    let n = classes.len();
    for u in 0..n {
        if classes[u] == 0 {
            continue;
        }
        for v in u + 1..n {
            if classes[v] != classes[u] {
                continue;
            }
            if dm.dist(u, v) < seq.bound(classes[u]) + 1 {
                return false;
            }
        }
    }
    true
}
