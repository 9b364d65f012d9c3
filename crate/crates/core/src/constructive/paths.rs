//! Complement structure of a maximal independent set.
//!
//! For a maximal independent set S in a subcubic graph of minimum degree 2,
//! the graph induced on the complement decomposes into maximal paths of at
//! most three vertices:
//!   Lone      single vertex,
//!   TwoTwo    two adjacent 2-vertices,
//!   TwoThree  a 2-vertex adjacent to a 3-vertex,
//!   Mid       2-vertex, 3-vertex, 2-vertex in a row.
//! Any other complement shape is reported as a structure violation rather
//! than silently accepted; the downstream partition relies on this taxonomy.
//!
//! A "bad set" picks exactly one vertex from every TwoTwo and TwoThree path
//! (never from a Mid path). Two picked vertices are siblings when they share
//! a neighbor in S; the engine maximizes the number of members that have a
//! sibling inside the set, then takes the lexicographically smallest members.

use super::ConstructError;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathKind {
    Lone,
    TwoTwo,
    TwoThree,
    Mid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    None,
    Bad2,
    WeakBad3,
    MidBad3,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxPath {
    pub kind: PathKind,
    /// Sorted, except Mid which is [end, middle, end] with sorted ends.
    pub verts: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct PathDecomposition {
    pub paths: Vec<MaxPath>,
    /// Per vertex; S members and Lone vertices get `Role::None`.
    pub roles: Vec<Role>,
}

impl PathDecomposition {
    pub fn count(&self, kind: PathKind) -> usize {
        self.paths.iter().filter(|p| p.kind == kind).count()
    }
}

/// Neighbors of `v` inside S.
pub fn fathers(g: &Graph, in_s: &[bool], v: usize) -> Vec<usize> {
    g.neighbors(v).iter().copied().filter(|&u| in_s[u]).collect()
}

pub fn decompose_paths(g: &Graph, s: &[usize]) -> Result<PathDecomposition, ConstructError> {
    let n = g.n();
    let mut in_s = vec![false; n];
    for &v in s {
        in_s[v] = true;
    }
    for &v in s {
        if let Some(&u) = g.neighbors(v).iter().find(|&&u| in_s[u]) {
            return Err(ConstructError::StructureViolation(format!(
                "set is not independent: edge ({v},{u})"
            )));
        }
    }
    for v in 0..n {
        if in_s[v] {
            continue;
        }
        if !g.neighbors(v).iter().any(|&u| in_s[u]) {
            return Err(ConstructError::StructureViolation(format!(
                "set is not maximal: vertex {v} has no neighbor in it"
            )));
        }
        let d = g.degree(v);
        if d != 2 && d != 3 {
            return Err(ConstructError::StructureViolation(format!(
                "complement vertex {v} has degree {d}, expected 2 or 3"
            )));
        }
    }

    let mut seen = vec![false; n];
    let mut paths = Vec::new();
    let mut roles = vec![Role::None; n];
    for start in 0..n {
        if in_s[start] || seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < comp.len() {
            let v = comp[head];
            head += 1;
            for &u in g.neighbors(v) {
                if !in_s[u] && !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                }
            }
        }
        comp.sort();
        let inner_degree = |v: usize| {
            g.neighbors(v)
                .iter()
                .filter(|&&u| !in_s[u] && comp.contains(&u))
                .count()
        };
        let path = match comp.len() {
            1 => MaxPath { kind: PathKind::Lone, verts: comp },
            2 => {
                let mut degs = [g.degree(comp[0]), g.degree(comp[1])];
                degs.sort();
                match degs {
                    [2, 2] => MaxPath { kind: PathKind::TwoTwo, verts: comp },
                    [2, 3] => MaxPath { kind: PathKind::TwoThree, verts: comp },
                    _ => {
                        return Err(ConstructError::StructureViolation(format!(
                            "adjacent complement 3-vertices {} and {}",
                            comp[0], comp[1]
                        )))
                    }
                }
            }
            3 => {
                let mids: Vec<usize> =
                    comp.iter().copied().filter(|&v| inner_degree(v) == 2).collect();
                let ends: Vec<usize> =
                    comp.iter().copied().filter(|&v| inner_degree(v) == 1).collect();
                if mids.len() != 1 || ends.len() != 2 {
                    return Err(ConstructError::StructureViolation(format!(
                        "complement component {comp:?} is not a path"
                    )));
                }
                let mid = mids[0];
                if g.degree(mid) != 3 || ends.iter().any(|&e| g.degree(e) != 2) {
                    return Err(ConstructError::StructureViolation(format!(
                        "complement path {comp:?} is not 2-3-2 shaped"
                    )));
                }
                MaxPath { kind: PathKind::Mid, verts: vec![ends[0], mid, ends[1]] }
            }
            _ => {
                return Err(ConstructError::StructureViolation(format!(
                    "complement component {comp:?} has more than 3 vertices"
                )))
            }
        };
        for &v in &path.verts {
            roles[v] = match path.kind {
                PathKind::Lone => Role::None,
                PathKind::TwoTwo => Role::Bad2,
                PathKind::TwoThree => {
                    if g.degree(v) == 2 {
                        Role::Bad2
                    } else {
                        Role::WeakBad3
                    }
                }
                PathKind::Mid => {
                    if g.degree(v) == 3 {
                        Role::MidBad3
                    } else {
                        Role::Bad2
                    }
                }
            };
        }
        paths.push(path);
    }
    Ok(PathDecomposition { paths, roles })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MemberStatus {
    Lonely,
    Sib { partner: usize },
}

#[derive(Clone, Debug)]
pub struct BadSet {
    pub members: Vec<usize>,
    /// Parallel to `members`.
    pub status: Vec<MemberStatus>,
    pub gamma: usize,
}

impl BadSet {
    pub fn lonely(&self) -> Vec<usize> {
        self.members
            .iter()
            .zip(&self.status)
            .filter(|(_, s)| matches!(s, MemberStatus::Lonely))
            .map(|(&m, _)| m)
            .collect()
    }

    pub fn sib_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (&m, s) in self.members.iter().zip(&self.status) {
            if let MemberStatus::Sib { partner } = *s {
                if m < partner {
                    out.push((m, partner));
                }
            }
        }
        out
    }
}

fn share_father(fathers: &[Vec<usize>], a: usize, b: usize) -> bool {
    fathers[a].iter().any(|f| fathers[b].contains(f))
}

fn build_status(
    g: &Graph,
    fathers: &[Vec<usize>],
    members: &[usize],
) -> Result<(Vec<MemberStatus>, usize), ConstructError> {
    let mut status = Vec::with_capacity(members.len());
    let mut gamma = 0;
    for &m in members {
        let sibs: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&o| o != m && !g.has_edge(m, o) && share_father(fathers, m, o))
            .collect();
        match sibs.len() {
            0 => status.push(MemberStatus::Lonely),
            1 => {
                status.push(MemberStatus::Sib { partner: sibs[0] });
                gamma += 1;
            }
            _ => {
                return Err(ConstructError::StructureViolation(format!(
                    "member {m} has several siblings {sibs:?} in the bad set"
                )))
            }
        }
    }
    Ok((status, gamma))
}

const EXACT_PATH_LIMIT: usize = 20;

/// Choose the bad set B (max sibling count, then lex-smallest members), then
/// derive B' by swapping each lonely 3-vertex member for the 2-vertex on its
/// path. Returns (B, B').
pub fn best_bad_set(
    g: &Graph,
    s: &[usize],
    decomp: &PathDecomposition,
) -> Result<(BadSet, BadSet), ConstructError> {
    let n = g.n();
    let mut in_s = vec![false; n];
    for &v in s {
        in_s[v] = true;
    }
    let father_of: Vec<Vec<usize>> = (0..n)
        .map(|v| if in_s[v] { Vec::new() } else { fathers(g, &in_s, v) })
        .collect();

    // Two candidates per selectable path, ascending inside each path.
    let selectable: Vec<&MaxPath> = decomp
        .paths
        .iter()
        .filter(|p| matches!(p.kind, PathKind::TwoTwo | PathKind::TwoThree))
        .collect();
    let k = selectable.len();
    if k == 0 {
        let empty = BadSet { members: Vec::new(), status: Vec::new(), gamma: 0 };
        return Ok((empty.clone(), empty));
    }
    let candidates: Vec<[usize; 2]> = selectable.iter().map(|p| [p.verts[0], p.verts[1]]).collect();

    // Candidate-level sibling masks make gamma evaluation cheap: candidate
    // index = 2 * path + side, at most 40 candidates at the exact limit.
    let cand_count = 2 * k;
    let mut sib_mask = vec![0u64; cand_count];
    for i in 0..cand_count {
        for j in 0..cand_count {
            if i / 2 == j / 2 {
                continue;
            }
            let (a, b) = (candidates[i / 2][i % 2], candidates[j / 2][j % 2]);
            if !g.has_edge(a, b) && share_father(&father_of, a, b) {
                sib_mask[i] |= 1 << j;
            }
        }
    }
    let gamma_of = |sides: &[usize]| -> usize {
        let mut chosen = 0u64;
        for (p, &side) in sides.iter().enumerate() {
            chosen |= 1 << (2 * p + side);
        }
        sides
            .iter()
            .enumerate()
            .filter(|&(p, &side)| sib_mask[2 * p + side] & chosen != 0)
            .count()
    };

    let best_sides: Vec<usize> = if k <= EXACT_PATH_LIMIT {
        let mut best: Option<(usize, Vec<usize>, Vec<usize>)> = None;
        for combo in 0u64..1 << k {
            let sides: Vec<usize> = (0..k).map(|p| (combo >> p & 1) as usize).collect();
            let gamma = gamma_of(&sides);
            if let Some((bg, _, _)) = &best {
                if gamma < *bg {
                    continue;
                }
            }
            let mut members: Vec<usize> =
                sides.iter().enumerate().map(|(p, &s)| candidates[p][s]).collect();
            members.sort();
            let better = match &best {
                None => true,
                Some((bg, bm, _)) => gamma > *bg || (gamma == *bg && members < *bm),
            };
            if better {
                best = Some((gamma, members, sides));
            }
        }
        best.unwrap().2
    } else {
        // Flip ascent: improve one path's side at a time until stable.
        let mut sides = vec![0usize; k];
        let mut gamma = gamma_of(&sides);
        loop {
            let mut improved = false;
            for p in 0..k {
                let mut flipped = sides.clone();
                flipped[p] ^= 1;
                let fg = gamma_of(&flipped);
                if fg > gamma {
                    sides = flipped;
                    gamma = fg;
                    improved = true;
                    break;
                }
            }
            if !improved {
                break sides;
            }
        }
    };

    let mut members: Vec<usize> =
        best_sides.iter().enumerate().map(|(p, &s)| candidates[p][s]).collect();
    members.sort();
    let (status, gamma) = build_status(g, &father_of, &members)?;
    let b = BadSet { members, status, gamma };

    // Swap each lonely 3-vertex (necessarily the 3-end of a TwoThree path)
    // for the 2-vertex of the same path.
    let mut prime_members = Vec::with_capacity(b.members.len());
    for (&m, st) in b.members.iter().zip(&b.status) {
        if matches!(st, MemberStatus::Lonely) && g.degree(m) == 3 {
            let path = selectable
                .iter()
                .find(|p| p.verts.contains(&m))
                .expect("member comes from a selectable path");
            debug_assert_eq!(path.kind, PathKind::TwoThree);
            let two_end = path.verts.iter().copied().find(|&v| g.degree(v) == 2).unwrap();
            prime_members.push(two_end);
        } else {
            prime_members.push(m);
        }
    }
    prime_members.sort();
    let (status, gamma) = build_status(g, &father_of, &prime_members)?;
    let b_prime = BadSet { members: prime_members, status, gamma };
    Ok((b, b_prime))
}
