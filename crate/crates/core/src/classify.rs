//! Saturation taxonomy for subcubic graphs.
//!
//! A graph is subcubic when every degree is at most 3. A 3-vertex is *heavy*
//! when all of its neighbors are 3-vertices. `sat_level` is the largest
//! number of 3-neighbors over all 3-vertices (0 when there is none);
//! `heavy_sat_level` is the largest number of heavy neighbors over all heavy
//! vertices (0 when there is none). Class tags are upward closed in these
//! levels: sat(i) admits every graph with sat_level <= i, so
//! sat(0) ⊂ sat(1) ⊂ sat(2) ⊂ sat(3) = all subcubic, and likewise hsat.

use crate::graph::Graph;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("vertex {vertex} has degree {degree} > 3; graph is not subcubic")]
    NotSubcubic { vertex: usize, degree: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationProfile {
    pub degrees: Vec<usize>,
    pub heavy: Vec<bool>,
    pub sat_level: usize,
    pub heavy_sat_level: usize,
}

impl SaturationProfile {
    pub fn is_cubic(&self) -> bool {
        self.degrees.iter().all(|&d| d == 3)
    }

    pub fn heavy_vertices(&self) -> Vec<usize> {
        (0..self.heavy.len()).filter(|&v| self.heavy[v]).collect()
    }
}

/// Degree and saturation facts; errors on non-subcubic input so bad
/// generators fail loudly instead of sliding into the wrong sweep class.
pub fn profile(g: &Graph) -> Result<SaturationProfile, ClassifyError> {
    let n = g.n();
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    for (v, &d) in degrees.iter().enumerate() {
        if d > 3 {
            return Err(ClassifyError::NotSubcubic { vertex: v, degree: d });
        }
    }
    let heavy: Vec<bool> = (0..n)
        .map(|v| degrees[v] == 3 && g.neighbors(v).iter().all(|&u| degrees[u] == 3))
        .collect();
    let mut sat_level = 0;
    let mut heavy_sat_level = 0;
    for v in 0..n {
        if degrees[v] == 3 {
            let three_nbrs = g.neighbors(v).iter().filter(|&&u| degrees[u] == 3).count();
            sat_level = sat_level.max(three_nbrs);
        }
        if heavy[v] {
            let heavy_nbrs = g.neighbors(v).iter().filter(|&&u| heavy[u]).count();
            heavy_sat_level = heavy_sat_level.max(heavy_nbrs);
        }
    }
    Ok(SaturationProfile {
        degrees,
        heavy,
        sat_level,
        heavy_sat_level,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassTag {
    /// Every 3-vertex has at most i 3-neighbors.
    Sat(u8),
    /// Every heavy vertex has at most i heavy neighbors.
    HeavySat(u8),
    /// 3-regular.
    Cubic,
    /// Any subcubic graph.
    Any,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown class tag {0:?}; expected sat0..sat3, hsat0..hsat3, cubic, or any")]
pub struct TagParseError(String);

impl FromStr for ClassTag {
    type Err = TagParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cubic" => return Ok(ClassTag::Cubic),
            "any" => return Ok(ClassTag::Any),
            _ => {}
        }
        for i in 0..=3u8 {
            if s == format!("sat{i}") {
                return Ok(ClassTag::Sat(i));
            }
            if s == format!("hsat{i}") {
                return Ok(ClassTag::HeavySat(i));
            }
        }
        Err(TagParseError(s.to_string()))
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassTag::Sat(i) => write!(f, "sat{i}"),
            ClassTag::HeavySat(i) => write!(f, "hsat{i}"),
            ClassTag::Cubic => write!(f, "cubic"),
            ClassTag::Any => write!(f, "any"),
        }
    }
}

/// Class membership; false (never an error) on non-subcubic input.
pub fn in_class(g: &Graph, tag: ClassTag) -> bool {
    let Ok(p) = profile(g) else {
        return false;
    };
    match tag {
        ClassTag::Sat(i) => p.sat_level <= i as usize,
        ClassTag::HeavySat(i) => p.heavy_sat_level <= i as usize,
        ClassTag::Cubic => p.is_cubic(),
        ClassTag::Any => true,
    }
}

/// All tags a profiled graph satisfies, in display order.
pub fn matching_tags(p: &SaturationProfile) -> Vec<ClassTag> {
    let mut out = Vec::new();
    for i in 0..=3u8 {
        if p.sat_level <= i as usize {
            out.push(ClassTag::Sat(i));
        }
    }
    for i in 0..=3u8 {
        if p.heavy_sat_level <= i as usize {
            out.push(ClassTag::HeavySat(i));
        }
    }
    if p.is_cubic() {
        out.push(ClassTag::Cubic);
    }
    out.push(ClassTag::Any);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        crate::graph::parse_graph6("C~").unwrap()
    }

    fn c5() -> Graph {
        Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn cycle_is_zero_saturated() {
        let p = profile(&c5()).unwrap();
        assert_eq!(p.sat_level, 0);
        assert_eq!(p.heavy_sat_level, 0);
        assert!(p.heavy_vertices().is_empty());
        assert!(in_class(&c5(), ClassTag::Sat(0)));
        assert!(!in_class(&c5(), ClassTag::Cubic));
    }

    #[test]
    fn k4_is_fully_saturated() {
        let p = profile(&k4()).unwrap();
        assert_eq!(p.sat_level, 3);
        assert_eq!(p.heavy_sat_level, 3);
        assert!(p.is_cubic());
        assert!(!in_class(&k4(), ClassTag::HeavySat(2)));
        assert!(in_class(&k4(), ClassTag::Cubic));
        assert!(in_class(&k4(), ClassTag::Any));
    }

    #[test]
    fn triangle_with_pendants() {
        // Triangle with one pendant per vertex: sat 2, no heavy vertices.
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]).unwrap();
        let p = profile(&g).unwrap();
        assert_eq!(p.sat_level, 2);
        assert_eq!(p.heavy_sat_level, 0);
        assert!(p.heavy_vertices().is_empty());
    }

    #[test]
    fn non_subcubic_fails_loudly() {
        let k5_edges: Vec<(usize, usize)> =
            (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        let k5 = Graph::new(5, &k5_edges).unwrap();
        assert_eq!(
            profile(&k5),
            Err(ClassifyError::NotSubcubic { vertex: 0, degree: 4 })
        );
        for tag in ["sat3", "hsat3", "cubic", "any"] {
            assert!(!in_class(&k5, tag.parse().unwrap()));
        }
    }

    #[test]
    fn tag_parsing_round_trips() {
        for s in ["sat0", "sat3", "hsat0", "hsat2", "cubic", "any"] {
            let tag: ClassTag = s.parse().unwrap();
            assert_eq!(tag.to_string(), s);
        }
        assert!("sat4".parse::<ClassTag>().is_err());
        assert!("".parse::<ClassTag>().is_err());
    }

    #[test]
    fn low_saturation_excludes_heavy_vertices() {
        // sat_level <= 1 forces an empty heavy set.
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        let p = profile(&g).unwrap();
        assert!(p.sat_level <= 1);
        assert!(p.heavy_vertices().is_empty());
    }
}
