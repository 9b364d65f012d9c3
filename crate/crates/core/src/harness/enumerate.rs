//! Connected subcubic graphs, one per isomorphism class, in a deterministic
//! order: levels by vertex count, canonical-code order inside a level.
//! Growth step: attach one new vertex to one to three vertices of degree
//! below three. Every connected graph has a non-cut vertex, so every target
//! appears as some parent plus one attachment.

use super::HarnessError;
use crate::canon::canonical_code;
use crate::graph::{parse_graph6, Graph};
use std::collections::BTreeMap;
use std::io::{BufRead, BufReader};
use std::path::Path;

/// Largest order the built-in generator accepts; external corpora go through
/// `ingest_graph6` instead.
pub const MAX_ENUM_N: usize = 12;

/// All connected subcubic graphs with exactly `n` vertices.
pub fn enumerate_subcubic(n: usize) -> Result<Vec<Graph>, HarnessError> {
    if n > MAX_ENUM_N {
        return Err(HarnessError::TooLarge { n, max: MAX_ENUM_N });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level: Vec<Graph> = vec![Graph::new(1, &[]).unwrap()];
    for size in 2..=n {
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for parent in &level {
            let open: Vec<usize> = (0..parent.n()).filter(|&v| parent.degree(v) < 3).collect();
            for subset in subsets_up_to_three(&open) {
                let mut edges = parent.edges();
                for &v in &subset {
                    edges.push((v, size - 1));
                }
                let child = Graph::new(size, &edges).expect("attachment stays valid");
                let code = canonical_code(&child);
                next.entry(code).or_insert(child);
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// All connected subcubic graphs with at most `n` vertices, ascending order.
pub fn enumerate_subcubic_up_to(n: usize) -> Result<Vec<Graph>, HarnessError> {
    let mut out = Vec::new();
    for size in 1..=n {
        out.extend(enumerate_subcubic(size)?);
    }
    Ok(out)
}

fn subsets_up_to_three(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let m = items.len();
    for i in 0..m {
        out.push(vec![items[i]]);
        for j in i + 1..m {
            out.push(vec![items[i], items[j]]);
            for k in j + 1..m {
                out.push(vec![items[i], items[j], items[k]]);
            }
        }
    }
    out
}

/// Reads one graph6 line per graph; blank lines and `#` comments are skipped.
pub fn ingest_graph6(path: &Path) -> Result<Vec<Graph>, HarnessError> {
    let file = std::fs::File::open(path)?;
    let mut out = Vec::new();
    for (idx, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let g = parse_graph6(trimmed).map_err(|e| HarnessError::MalformedGraph6 {
            line: idx + 1,
            msg: e.to_string(),
        })?;
        out.push(g);
    }
    Ok(out)
}

/// Independent census: count isomorphism classes of connected subcubic
/// graphs on `n` labeled vertices by brute force over all edge subsets.
/// Test oracle only; cost grows as 2^(n choose 2).
pub fn labeled_census(n: usize) -> usize {
    assert!(n <= 7, "census oracle is for n <= 7");
    if n == 0 {
        return 0;
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut codes = std::collections::HashSet::new();
    'mask: for mask in 0u32..(1 << pairs.len()) {
        let mut degree = vec![0usize; n];
        let mut edges = Vec::new();
        for (bit, &(u, v)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                degree[u] += 1;
                degree[v] += 1;
                if degree[u] > 3 || degree[v] > 3 {
                    continue 'mask;
                }
                edges.push((u, v));
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        if g.is_connected() {
            codes.insert(canonical_code(&g));
        }
    }
    codes.len()
}
