//! Named benchmark graphs used across the test suite, the sweep harness, and
//! the CLI. Each entry carries the graph, structural facts that double as
//! transcription checks, and (for two of them) a known-good coloring.
//!
//! Vertex numbering is frozen: tests and certificates depend on it. Notes on
//! each constructor document the numbering.

use crate::classify::profile;
use crate::coloring::PackingColoring;
use crate::graph::{subdivide, Graph};
use crate::seq::PackingSequence;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FixtureError {
    #[error("unknown fixture `{0}`")]
    Unknown(String),
}

/// Structural facts stored alongside each fixture. `check` re-derives all of
/// them from the graph, so a bad transcription fails loudly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassFacts {
    pub order: usize,
    pub size: usize,
    pub sat_level: u8,
    pub heavy_sat_level: u8,
    pub cubic: bool,
}

#[derive(Clone, Debug)]
pub struct DisplayedColoring {
    pub seq: PackingSequence,
    pub coloring: PackingColoring,
}

#[derive(Clone, Debug)]
pub struct FixtureEntry {
    pub name: &'static str,
    pub graph: Graph,
    pub note: &'static str,
    pub facts: ClassFacts,
    pub display: Option<DisplayedColoring>,
}

impl FixtureEntry {
    /// Re-derive the stored facts from the graph.
    pub fn derived_facts(&self) -> ClassFacts {
        let p = profile(&self.graph).expect("fixtures are subcubic");
        ClassFacts {
            order: self.graph.n(),
            size: self.graph.edge_count(),
            sat_level: p.sat_level as u8,
            heavy_sat_level: p.heavy_sat_level as u8,
            cubic: p.is_cubic(),
        }
    }
}

pub const NAMES: [&str; 9] = [
    "petersen",
    "two_k3_star",
    "sk4",
    "c12_three_chords",
    "three_triangle_gadget",
    "c8_two_chords",
    "hex_wheel_left",
    "thirteen_vertex_right",
    "prism_subdivided",
];

/// Kneser graph on the 2-subsets of {0..4} in lexicographic order:
/// vertex i is the i-th pair, edges join disjoint pairs.
fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
        .collect();
    let mut edges = Vec::new();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    Graph::new(10, &edges).unwrap()
}

/// Triangles {0,1,2} and {4,5,6} joined through the middle vertex 3 by the
/// two-edge path 2-3-4.
fn two_k3_star() -> Graph {
    Graph::new(
        7,
        &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)],
    )
    .unwrap()
}

/// K4 with every edge subdivided once. Branch vertices are 0..3, the
/// subdivision vertex of the i-th edge (sorted order) is 4+i.
fn sk4() -> Graph {
    let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    subdivide(&k4)
}

/// C12 on 0..11 plus three chords, each closing a triangle with two
/// consecutive cycle edges.
fn c12_three_chords() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..12).map(|i| (i, (i + 1) % 12)).collect();
    edges.extend_from_slice(&[(2, 4), (6, 8), (0, 10)]);
    Graph::new(12, &edges).unwrap()
}

/// Three triangles {0,1,2}, {3,4,5}, {6,7,8} tied together by two direct
/// bridges (0-5, 1-8), a degree-2 connector 9 between 7 and 4, and a
/// two-vertex chain 2-11-10-3 with an extra edge 6-10.
/// Numbering: s=0 t=1 r=2 u=3 v=4 w=5 x=6 y=7 z=8 b'=9 c'=10 h'=11.
fn three_triangle_gadget() -> Graph {
    Graph::new(
        12,
        &[
            (0, 1),
            (1, 2),
            (2, 0),
            (4, 5),
            (5, 3),
            (3, 4),
            (6, 7),
            (7, 8),
            (8, 6),
            (0, 5),
            (1, 8),
            (7, 9),
            (9, 4),
            (2, 11),
            (11, 10),
            (10, 3),
            (6, 10),
        ],
    )
    .unwrap()
}

/// C8 on 0..7 plus the two diagonals {0,4} and {2,6}.
fn c8_two_chords() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    edges.extend_from_slice(&[(0, 4), (2, 6)]);
    Graph::new(8, &edges).unwrap()
}

/// Six 3-vertices 0..5 on a hexagon with three degree-2 hubs 6,7,8, each
/// linking an opposite pair of hexagon vertices.
/// Numbering: x1..x6 = 0..5, y1 y2 y3 = 6 7 8.
fn hex_wheel_left() -> Graph {
    Graph::new(
        9,
        &[
            (0, 2),
            (2, 5),
            (5, 3),
            (3, 4),
            (4, 1),
            (1, 0),
            (0, 6),
            (6, 3),
            (2, 8),
            (8, 4),
            (5, 7),
            (7, 1),
        ],
    )
    .unwrap()
}

fn hex_wheel_left_display() -> DisplayedColoring {
    DisplayedColoring {
        seq: "1,2^4".parse().unwrap(),
        coloring: PackingColoring::from_classes(vec![1, 4, 2, 3, 1, 1, 5, 5, 5]),
    }
}

/// Thirteen vertices: six 3-vertices 0..5 whose neighborhoods are covered by
/// four heavy hubs 7,8,9,10, one degree-2 hub 6, and two degree-2 links
/// 11, 12. Numbering: x1..x6 = 0..5, y1 y2 y3 = 6 7 8, then 9..12 for the
/// remaining hubs and links.
fn thirteen_vertex_right() -> Graph {
    Graph::new(
        13,
        &[
            (6, 0),
            (0, 7),
            (0, 8),
            (6, 1),
            (2, 7),
            (7, 3),
            (5, 8),
            (8, 4),
            (1, 9),
            (9, 2),
            (9, 5),
            (1, 10),
            (10, 3),
            (10, 4),
            (2, 11),
            (11, 4),
            (3, 12),
            (12, 5),
        ],
    )
    .unwrap()
}

fn thirteen_vertex_right_display() -> DisplayedColoring {
    DisplayedColoring {
        seq: "1,2^4".parse().unwrap(),
        coloring: PackingColoring::from_classes(vec![1, 3, 1, 4, 5, 1, 2, 3, 4, 5, 1, 2, 2]),
    }
}

/// Triangle prism {0,1,2} / {3,4,5} with rungs i - i+3, then edge (0,1)
/// subdivided by 6 and edge (4,5) subdivided by 7.
fn prism_subdivided() -> Graph {
    Graph::new(
        8,
        &[
            (0, 6),
            (6, 1),
            (1, 2),
            (2, 0),
            (3, 4),
            (4, 7),
            (7, 5),
            (5, 3),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .unwrap()
}

pub fn fixture(name: &str) -> Result<FixtureEntry, FixtureError> {
    let entry = match name {
        "petersen" => FixtureEntry {
            name: "petersen",
            graph: petersen(),
            note: "Kneser graph of 2-subsets of a 5-set; cubic, girth 5, diameter 2",
            facts: ClassFacts { order: 10, size: 15, sat_level: 3, heavy_sat_level: 3, cubic: true },
            display: None,
        },
        "two_k3_star" => FixtureEntry {
            name: "two_k3_star",
            graph: two_k3_star(),
            note: "two triangles joined through one middle vertex by a two-edge path",
            facts: ClassFacts { order: 7, size: 8, sat_level: 0, heavy_sat_level: 0, cubic: false },
            display: None,
        },
        "sk4" => FixtureEntry {
            name: "sk4",
            graph: sk4(),
            note: "K4 with every edge subdivided once",
            facts: ClassFacts { order: 10, size: 12, sat_level: 0, heavy_sat_level: 0, cubic: false },
            display: None,
        },
        "c12_three_chords" => FixtureEntry {
            name: "c12_three_chords",
            graph: c12_three_chords(),
            note: "C12 with three chords, each closing a triangle on the cycle",
            facts: ClassFacts { order: 12, size: 15, sat_level: 1, heavy_sat_level: 0, cubic: false },
            display: None,
        },
        "three_triangle_gadget" => FixtureEntry {
            name: "three_triangle_gadget",
            graph: three_triangle_gadget(),
            note: "three triangles linked by two bridges, a connector, and a two-vertex chain",
            facts: ClassFacts { order: 12, size: 17, sat_level: 3, heavy_sat_level: 2, cubic: false },
            display: None,
        },
        "c8_two_chords" => FixtureEntry {
            name: "c8_two_chords",
            graph: c8_two_chords(),
            note: "C8 plus both diagonals of one inscribed square",
            facts: ClassFacts { order: 8, size: 10, sat_level: 1, heavy_sat_level: 0, cubic: false },
            display: None,
        },
        "hex_wheel_left" => FixtureEntry {
            name: "hex_wheel_left",
            graph: hex_wheel_left(),
            note: "hexagon of 3-vertices with three degree-2 hubs across it",
            facts: ClassFacts { order: 9, size: 12, sat_level: 2, heavy_sat_level: 0, cubic: false },
            display: Some(hex_wheel_left_display()),
        },
        "thirteen_vertex_right" => FixtureEntry {
            name: "thirteen_vertex_right",
            graph: thirteen_vertex_right(),
            note: "six 3-vertices whose joint neighborhood is four heavy hubs plus three degree-2 links",
            facts: ClassFacts { order: 13, size: 18, sat_level: 3, heavy_sat_level: 0, cubic: false },
            display: Some(thirteen_vertex_right_display()),
        },
        "prism_subdivided" => FixtureEntry {
            name: "prism_subdivided",
            graph: prism_subdivided(),
            note: "triangle prism with two disjoint edges subdivided once",
            facts: ClassFacts { order: 8, size: 11, sat_level: 3, heavy_sat_level: 0, cubic: false },
            display: None,
        },
        other => return Err(FixtureError::Unknown(other.to_string())),
    };
    Ok(entry)
}

pub fn all() -> Vec<FixtureEntry> {
    NAMES.iter().map(|n| fixture(n).unwrap()).collect()
}
