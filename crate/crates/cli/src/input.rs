//! Argument resolution: graphs by fixture name, literal graph6, or file
//! path (tried in that order); colorings from JSON; rational grids.

use anyhow::{anyhow, bail, Context, Result};
use std::path::Path;
use subpack_core::canon::canonical_code;
use subpack_core::coloring::PackingColoring;
use subpack_core::graph::{parse_graph6, Graph, Rational};
use subpack_core::{fixtures, ingest_graph6};

/// Fixture name first, then literal graph6, then a file whose first
/// non-comment line is graph6.
pub fn resolve_graph(arg: &str) -> Result<Graph> {
    if let Ok(entry) = fixtures::fixture(arg) {
        return Ok(entry.graph);
    }
    if let Ok(g) = parse_graph6(arg) {
        return Ok(g);
    }
    let path = Path::new(arg);
    if path.exists() {
        let graphs = ingest_graph6(path)?;
        return graphs
            .into_iter()
            .next()
            .ok_or_else(|| anyhow!("{arg}: file contains no graphs"));
    }
    bail!(
        "cannot resolve {arg:?}: not a fixture name ({}), not valid graph6, \
         and no such file",
        fixtures::NAMES.join(", ")
    )
}

/// A coloring file is a JSON array of 1-based classes, or any JSON object
/// with such an array under "coloring" (so solver output feeds back in).
pub fn read_coloring(path: &Path, n: usize) -> Result<PackingColoring> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading coloring file {}", path.display()))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).context("coloring file is not JSON")?;
    let array = value
        .as_array()
        .or_else(|| value.get("coloring").and_then(|c| c.as_array()))
        .ok_or_else(|| {
            anyhow!("expected a JSON array of classes or an object with a \"coloring\" array")
        })?;
    let classes: Vec<u32> = array
        .iter()
        .map(|v| {
            v.as_u64()
                .filter(|&c| c >= 1 && c <= u32::MAX as u64)
                .map(|c| c as u32)
                .ok_or_else(|| anyhow!("class entries must be positive integers, got {v}"))
        })
        .collect::<Result<_>>()?;
    if classes.len() != n {
        bail!("coloring has {} entries but the graph has {n} vertices", classes.len());
    }
    Ok(PackingColoring::from_classes(classes))
}

/// Comma-separated rationals: "7/10,1/2,1".
pub fn parse_grid(arg: &str) -> Result<Vec<Rational>> {
    arg.split(',')
        .map(|tok| {
            Rational::parse(tok).ok_or_else(|| anyhow!("bad rational {tok:?} in grid {arg:?}"))
        })
        .collect()
}

/// Exclusion tokens resolve like graphs and collapse to canonical codes, so
/// "petersen", any isomorphic graph6 literal, and files all name one class.
pub fn resolve_exclusions(tokens: &[String]) -> Result<Vec<String>> {
    let mut codes = Vec::new();
    for token in tokens {
        for part in token.split(',').filter(|p| !p.trim().is_empty()) {
            let g = resolve_graph(part.trim())?;
            codes.push(canonical_code(&g));
        }
    }
    Ok(codes)
}
