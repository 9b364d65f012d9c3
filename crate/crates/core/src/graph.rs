//! Simple undirected graphs on vertices `0..n`, the graph6 codec, BFS
//! distance matrices, subdivision, and exact average degree.
//!
//! Graphs are immutable after construction: sorted adjacency lists, no loops,
//! no parallel edges. Everything downstream (classification, solving,
//! constructive pipelines, enumeration) works on this one type.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({u},{v}) out of range for {n} vertices")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("self loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0},{1})")]
    DuplicateEdge(usize, usize),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
    #[error("empty graph has no average degree")]
    EmptyGraph,
}

/// Undirected simple graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Builds a graph, validating vertex range, loops, and duplicates.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].contains(&v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as (u,v) with u < v, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Induced subgraph on `verts` (must be sorted and duplicate-free);
    /// vertex i of the result corresponds to verts[i].
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in verts.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(verts.len(), &edges).expect("induced subgraph of a valid graph is valid")
    }

    /// BFS distances from one source; unreachable = INFINITY.
    pub fn bfs_distances(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![INFINITY; self.n];
        dist[src] = 0;
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == INFINITY {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

/// Sentinel distance for unreachable pairs; strictly larger than any path.
pub const INFINITY: u32 = u32::MAX;

/// All-pairs shortest-path matrix from per-source BFS.
#[derive(Clone)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }
}

pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = Vec::with_capacity(n * n);
    for src in 0..n {
        d.extend(g.bfs_distances(src));
    }
    DistanceMatrix { n, d }
}

/// Replaces every edge (u,v) by a path u-w-v. New vertex ids follow the
/// sorted edge order: edge i becomes vertex n + i.
pub fn subdivide(g: &Graph) -> Graph {
    let n = g.n();
    let old_edges = g.edges();
    let mut edges = Vec::with_capacity(2 * old_edges.len());
    for (i, &(u, v)) in old_edges.iter().enumerate() {
        let w = n + i;
        edges.push((u, w));
        edges.push((w, v));
    }
    Graph::new(n + old_edges.len(), &edges).expect("subdivision of a valid graph is valid")
}

/// Reduced fraction of i64s with positive denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rational {
    num: i64,
    den: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        let sign = if den < 0 { -1 } else { 1 };
        Rational {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    /// Parses "p/q" or a bare integer "p".
    pub fn parse(s: &str) -> Option<Rational> {
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.trim().parse().ok()?;
                let q: i64 = q.trim().parse().ok()?;
                if q == 0 {
                    return None;
                }
                Some(Rational::new(p, q))
            }
            None => Some(Rational::new(s.parse().ok()?, 1)),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// 2|E| / |V| as an exact reduced fraction.
pub fn average_degree(g: &Graph) -> Result<Rational, GraphError> {
    if g.n() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    Ok(Rational::new(2 * g.edge_count() as i64, g.n() as i64))
}

// --- graph6 codec ------------------------------------------------------
//
// Standard format: N(n) followed by the upper triangle of the adjacency
// matrix in column-major order, packed 6 bits per byte, each byte + 63.

const G6_HEADER: &str = ">>graph6<<";

fn g6_size_bytes(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        let mut out = vec![126];
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
        out
    } else {
        // 36-bit form, n < 2^36
        let mut out = vec![126, 126];
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
        out
    }
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = g6_size_bytes(n);
    let nbits = n * n.saturating_sub(1) / 2;
    let mut acc: u8 = 0;
    let mut filled = 0;
    let mut emitted = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
                emitted += 6;
            }
        }
    }
    if emitted < nbits {
        acc <<= 6 - filled;
        bytes.push(acc + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are ASCII")
}

pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let mut s = line.trim();
    if let Some(rest) = s.strip_prefix(G6_HEADER) {
        s = rest;
    }
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::MalformedGraph6("empty line".into()));
    }
    let bad = |msg: &str| GraphError::MalformedGraph6(msg.into());
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(bad(&format!("byte {b} out of graph6 range")));
        }
    }
    let (n, data) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            if bytes.len() < 8 {
                return Err(bad("truncated 36-bit size"));
            }
            let mut n = 0usize;
            for &b in &bytes[2..8] {
                n = (n << 6) | (b - 63) as usize;
            }
            (n, &bytes[8..])
        } else {
            if bytes.len() < 4 {
                return Err(bad("truncated 18-bit size"));
            }
            let mut n = 0usize;
            for &b in &bytes[1..4] {
                n = (n << 6) | (b - 63) as usize;
            }
            (n, &bytes[4..])
        }
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if data.len() != need {
        return Err(bad(&format!(
            "expected {need} data bytes for n={n}, got {}",
            data.len()
        )));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[idx / 6] - 63;
            let bit = (byte >> (5 - idx % 6)) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    // Padding bits beyond the triangle must be zero.
    if nbits > 0 {
        let last = data[need - 1] - 63;
        let pad = need * 6 - nbits;
        if last & ((1 << pad) - 1) != 0 {
            return Err(bad("nonzero padding bits"));
        }
    }
    Graph::new(n, &edges)
}

// --- edge-list text format ---------------------------------------------
//
// First line "n m", then m lines "u v". Used for fixtures and tests.

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let bad = |msg: String| GraphError::MalformedEdgeList(msg);
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| bad("empty input".into()))?;
    let mut head = header.split_whitespace();
    let n: usize = head
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| bad(format!("bad header line {header:?}")))?;
    let m: usize = head
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| bad(format!("bad header line {header:?}")))?;
    if head.next().is_some() {
        return Err(bad(format!("trailing tokens in header {header:?}")));
    }
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| bad(format!("bad edge line {line:?}")))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| bad(format!("bad edge line {line:?}")))?;
        if it.next().is_some() {
            return Err(bad(format!("trailing tokens in edge line {line:?}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(bad(format!("header says {m} edges, found {}", edges.len())));
    }
    Graph::new(n, &edges)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn petersen() -> Graph {
        // Kneser graph on 2-subsets of {0..4}, lexicographic subset order.
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

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::EdgeOutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn basic_accessors() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.degree(0), 2);
        assert!(g.has_edge(0, 3) && g.has_edge(3, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn graph6_k4_is_c_tilde() {
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(emit_graph6(&k4), "C~");
        assert_eq!(parse_graph6("C~").unwrap(), k4);
    }

    #[test]
    fn graph6_isolated_vertices() {
        let g = parse_graph6("D??").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(emit_graph6(&g), "D??");
    }

    #[test]
    fn graph6_strips_file_header() {
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap().n(), 4);
    }

    #[test]
    fn graph6_rejects_malformed() {
        assert!(matches!(
            parse_graph6(""),
            Err(GraphError::MalformedGraph6(_))
        ));
        assert!(matches!(
            parse_graph6("C~~"),
            Err(GraphError::MalformedGraph6(_))
        ));
        assert!(matches!(
            parse_graph6("C"),
            Err(GraphError::MalformedGraph6(_))
        ));
        // 0x20 is outside the printable graph6 byte range.
        assert!(matches!(
            parse_graph6("C \n"),
            Err(GraphError::MalformedGraph6(_))
        ));
    }

    #[test]
    fn graph6_long_form_round_trip() {
        // 63 vertices forces the 18-bit size prefix.
        let edges: Vec<(usize, usize)> = (0..62).map(|i| (i, i + 1)).collect();
        let g = Graph::new(63, &edges).unwrap();
        let s = emit_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip_petersen() {
        let p = petersen();
        assert_eq!(parse_graph6(&emit_graph6(&p)).unwrap(), p);
    }

    #[test]
    fn distances_path_and_cycle() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = all_pairs_distances(&p4);
        assert_eq!(d.dist(0, 3), 3);
        assert_eq!(d.dist(1, 3), 2);
        assert_eq!(d.dist(2, 2), 0);

        let two = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let d = all_pairs_distances(&two);
        assert_eq!(d.dist(0, 2), INFINITY);
    }

    #[test]
    fn petersen_has_eccentricity_two() {
        let p = petersen();
        let d = all_pairs_distances(&p);
        for u in 0..10 {
            for v in 0..10 {
                if u != v {
                    assert!(d.dist(u, v) <= 2);
                }
            }
        }
        assert!(p.neighbors(0).iter().all(|&v| d.dist(0, v) == 1));
    }

    #[test]
    fn distance_one_exactly_on_edges() {
        let g = petersen();
        let d = all_pairs_distances(&g);
        for u in 0..g.n() {
            for v in 0..g.n() {
                assert_eq!(d.dist(u, v) == 1, g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn subdivide_small_cases() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        let p3 = subdivide(&k2);
        assert_eq!((p3.n(), p3.edge_count()), (3, 2));
        assert_eq!(p3.degree(2), 2);

        let c3 = Graph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let c6 = subdivide(&c3);
        assert_eq!((c6.n(), c6.edge_count()), (6, 6));
        assert!(c6.is_connected());
        assert!((0..6).all(|v| c6.degree(v) == 2));
    }

    #[test]
    fn components_and_induced() {
        let g = Graph::new(5, &[(0, 2), (2, 4), (1, 3)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 2, 4], vec![1, 3]]);
        assert!(!g.is_connected());
        let sub = g.induced(&[0, 2, 4]);
        assert_eq!(sub.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn average_degree_exact() {
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(average_degree(&k4).unwrap(), Rational::new(3, 1));
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(average_degree(&c5).unwrap(), Rational::new(2, 1));
        let empty = Graph::new(0, &[]).unwrap();
        assert_eq!(average_degree(&empty), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn rationals_reduce_and_compare() {
        let a = Rational::new(22, 8);
        assert_eq!((a.num(), a.den()), (11, 4));
        assert_eq!(a, Rational::new(11, 4));
        assert!(a > Rational::new(30, 11));
        assert_eq!(a.to_string(), "11/4");
        assert_eq!(Rational::parse("7/10"), Some(Rational::new(7, 10)));
        assert_eq!(Rational::parse("3"), Some(Rational::new(3, 1)));
        assert_eq!(Rational::parse("1/0"), None);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let text = emit_edge_list(&g);
        assert_eq!(text, "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert!(matches!(
            parse_edge_list("4 2\n0 1\n"),
            Err(GraphError::MalformedEdgeList(_))
        ));
    }

    #[test]
    fn bfs_agrees_with_floyd_warshall_on_random_graphs() {
        // Independent oracle: Floyd-Warshall over the same edge set.
        let mut state = 0x1234_5678_9abc_def0_u64;
        let mut rng = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..100 {
            let n = 2 + (rng() % 11) as usize;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng() % 3 == 0 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let d = all_pairs_distances(&g);
            let mut fw = vec![vec![u64::MAX / 4; n]; n];
            for v in 0..n {
                fw[v][v] = 0;
            }
            for &(u, v) in &edges {
                fw[u][v] = 1;
                fw[v][u] = 1;
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        fw[i][j] = fw[i][j].min(fw[i][k] + fw[k][j]);
                    }
                }
            }
            for i in 0..n {
                for j in 0..n {
                    let expect = if fw[i][j] >= u64::MAX / 8 {
                        INFINITY
                    } else {
                        fw[i][j] as u32
                    };
                    assert_eq!(d.dist(i, j), expect);
                }
            }
        }
    }
}
