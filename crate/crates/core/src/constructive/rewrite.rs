//! Invertible graph rewrites and coloring replay.
//!
//! Three rules, always applied to the smallest applicable vertex, each
//! removing exactly one vertex:
//!   peel:  delete a degree-1 vertex.
//!   merge: for adjacent 2-vertices u,v with w the other neighbor of v,
//!          delete v and add uw unless it already exists.
//!   drop:  delete a 2-vertex neighbor of a 3-vertex that has two degree-2
//!          neighbors.
//! All three only ever decrease degrees of surviving vertices except merge's
//! added edge, which swaps one neighbor of u and of w for another of the same
//! degree; hence saturation level and the heavy-adjacency level never grow.
//!
//! Replay walks the log backward, restoring one vertex per record and
//! assigning it a class using only moves whose safety the surrounding checks
//! re-verify: a free 1-class, a 2-class empty within distance 2, a single
//! neighbor swap, or (for drop records) an exhaustive joint recoloring of at
//! most two vertices within distance 2.

use std::collections::BTreeSet;

use super::ConstructError;
use crate::coloring::PackingColoring;
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rewrite {
    Peel { v: usize, anchor: usize },
    Merge { v: usize, u: usize, w: usize, added_uw: bool },
    Drop { x: usize, left: usize, right: usize },
}

impl Rewrite {
    pub fn removed_vertex(&self) -> usize {
        match *self {
            Rewrite::Peel { v, .. } | Rewrite::Merge { v, .. } => v,
            Rewrite::Drop { x, .. } => x,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleSet {
    PeelOnly,
    PeelMerge,
    PeelMergeDrop,
}

/// Which extension rules replay uses.
#[derive(Clone, Copy, Debug)]
pub enum ExtendMode {
    /// Two 1-classes available (classes 1 and 2); peel records only.
    TwoOnes,
    /// One 1-class (class 1) plus `twos` 2-classes (classes 2..=twos+1).
    Twos { twos: usize },
}

impl ExtendMode {
    pub fn class_count(&self) -> usize {
        match *self {
            ExtendMode::TwoOnes => 4,
            ExtendMode::Twos { twos } => twos + 1,
        }
    }

    fn bound(&self, class: u32) -> u32 {
        match *self {
            ExtendMode::TwoOnes => {
                if class <= 2 {
                    1
                } else {
                    3
                }
            }
            ExtendMode::Twos { .. } => {
                if class == 1 {
                    1
                } else {
                    2
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct Reduction {
    original: Graph,
    pub reduced: Graph,
    /// reduced index -> original vertex id (ascending).
    pub to_original: Vec<usize>,
    pub log: Vec<Rewrite>,
}

fn neighbors_sorted(adj: &[BTreeSet<usize>], v: usize) -> Vec<usize> {
    adj[v].iter().copied().collect()
}

/// Apply `rules` to fixpoint. Priority peel > merge > drop, smallest vertex
/// first, so the log is deterministic.
pub fn reduce(g: &Graph, rules: RuleSet) -> Reduction {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive = vec![true; n];
    let mut log = Vec::new();

    let use_merge = matches!(rules, RuleSet::PeelMerge | RuleSet::PeelMergeDrop);
    let use_drop = matches!(rules, RuleSet::PeelMergeDrop);

    loop {
        let peel = (0..n).find(|&v| alive[v] && adj[v].len() == 1);
        if let Some(v) = peel {
            let anchor = *adj[v].iter().next().unwrap();
            adj[anchor].remove(&v);
            adj[v].clear();
            alive[v] = false;
            log.push(Rewrite::Peel { v, anchor });
            continue;
        }

        if use_merge {
            // Smallest 2-vertex u with a 2-vertex neighbor; v its smallest
            // such neighbor; w the other neighbor of v.
            let pair = (0..n)
                .filter(|&u| alive[u] && adj[u].len() == 2)
                .find_map(|u| {
                    adj[u]
                        .iter()
                        .copied()
                        .find(|&v| adj[v].len() == 2)
                        .map(|v| (u, v))
                });
            if let Some((u, v)) = pair {
                let w = adj[v].iter().copied().find(|&x| x != u).unwrap();
                let added_uw = !adj[u].contains(&w);
                adj[u].remove(&v);
                adj[w].remove(&v);
                adj[v].clear();
                alive[v] = false;
                if added_uw {
                    adj[u].insert(w);
                    adj[w].insert(u);
                }
                log.push(Rewrite::Merge { v, u, w, added_uw });
                continue;
            }
        }

        if use_drop {
            // Smallest 3-vertex with two degree-2 neighbors; delete its
            // smallest degree-2 neighbor.
            let x = (0..n)
                .filter(|&t| alive[t] && adj[t].len() == 3)
                .find(|&t| adj[t].iter().filter(|&&y| adj[y].len() == 2).count() >= 2)
                .and_then(|t| adj[t].iter().copied().find(|&y| adj[y].len() == 2));
            if let Some(x) = x {
                let nbrs = neighbors_sorted(&adj, x);
                debug_assert_eq!(nbrs.len(), 2);
                let (left, right) = (nbrs[0], nbrs[1]);
                adj[left].remove(&x);
                adj[right].remove(&x);
                adj[x].clear();
                alive[x] = false;
                log.push(Rewrite::Drop { x, left, right });
                continue;
            }
        }

        break;
    }

    let to_original: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let rank: Vec<usize> = {
        let mut r = vec![usize::MAX; n];
        for (i, &v) in to_original.iter().enumerate() {
            r[v] = i;
        }
        r
    };
    let mut edges = Vec::new();
    for &v in &to_original {
        for &u in &adj[v] {
            if v < u {
                edges.push((rank[v], rank[u]));
            }
        }
    }
    let reduced = Graph::new(to_original.len(), &edges).unwrap();
    Reduction { original: g.clone(), reduced, to_original, log }
}

pub fn peel_degree_one(g: &Graph) -> Reduction {
    reduce(g, RuleSet::PeelOnly)
}

pub fn reduce_adjacent_2vertices(g: &Graph) -> Reduction {
    reduce(g, RuleSet::PeelMerge)
}

/// Working state during backward replay: adjacency over original ids plus the
/// partial class assignment.
struct Replay {
    adj: Vec<BTreeSet<usize>>,
    alive: Vec<bool>,
    classes: Vec<u32>,
    mode: ExtendMode,
}

impl Replay {
    /// Compact alive graph, map original id -> compact index, and APSP.
    fn snapshot(&self) -> (Vec<usize>, Vec<usize>, DistanceMatrix) {
        let n = self.alive.len();
        let verts: Vec<usize> = (0..n).filter(|&v| self.alive[v]).collect();
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in verts.iter().enumerate() {
            rank[v] = i;
        }
        let mut edges = Vec::new();
        for &v in &verts {
            for &u in &self.adj[v] {
                if v < u {
                    edges.push((rank[v], rank[u]));
                }
            }
        }
        let g = Graph::new(verts.len(), &edges).unwrap();
        (verts, rank, all_pairs_distances(&g))
    }

    /// True when vertex v may keep class c against every other colored vertex.
    fn fits(
        &self,
        v: usize,
        c: u32,
        verts: &[usize],
        rank: &[usize],
        dm: &DistanceMatrix,
        skip: &[usize],
    ) -> bool {
        let required = self.mode.bound(c) + 1;
        for &u in verts {
            if u == v || self.classes[u] != c || skip.contains(&u) {
                continue;
            }
            if dm.dist(rank[v], rank[u]) < required {
                return false;
            }
        }
        true
    }

    fn restore_vertex(&mut self, v: usize, nbrs: &[usize]) {
        self.alive[v] = true;
        for &u in nbrs {
            self.adj[v].insert(u);
            self.adj[u].insert(v);
        }
    }

    fn extend_peel(&mut self, v: usize, anchor: usize) -> Result<(), ConstructError> {
        match self.mode {
            ExtendMode::TwoOnes => {
                self.classes[v] = if self.classes[anchor] == 1 { 2 } else { 1 };
                Ok(())
            }
            ExtendMode::Twos { twos } => {
                if self.classes[anchor] != 1 {
                    self.classes[v] = 1;
                    return Ok(());
                }
                let (verts, rank, dm) = self.snapshot();
                for c in 2..=(twos as u32 + 1) {
                    if self.fits(v, c, &verts, &rank, &dm, &[]) {
                        self.classes[v] = c;
                        return Ok(());
                    }
                }
                Err(ConstructError::ExtensionStuck { vertex: v })
            }
        }
    }

    fn extend_merge(&mut self, v: usize, u: usize, w: usize) -> Result<(), ConstructError> {
        let ExtendMode::Twos { twos } = self.mode else {
            return Err(ConstructError::ExtensionStuck { vertex: v });
        };
        let (verts, rank, dm) = self.snapshot();
        // Free 1-class first: v's only neighbors are u and w.
        if self.classes[u] != 1 && self.classes[w] != 1 {
            self.classes[v] = 1;
            return Ok(());
        }
        for c in 2..=(twos as u32 + 1) {
            if self.fits(v, c, &verts, &rank, &dm, &[]) {
                self.classes[v] = c;
                return Ok(());
            }
        }
        // Swap move: the non-1 neighbor y releases its 2-class to v and takes
        // color 1 itself. Each precondition is checked, not assumed.
        let y = if self.classes[u] == 1 { w } else { u };
        let y_class = self.classes[y];
        if y_class >= 2
            && self.adj[y]
                .iter()
                .all(|&t| t == v || self.classes[t] != 1)
            && self.fits(v, y_class, &verts, &rank, &dm, &[y])
        {
            self.classes[y] = 1;
            if self.fits(y, 1, &verts, &rank, &dm, &[]) {
                self.classes[v] = y_class;
                return Ok(());
            }
            self.classes[y] = y_class;
        }
        Err(ConstructError::ExtensionStuck { vertex: v })
    }

    fn extend_drop(&mut self, x: usize) -> Result<(), ConstructError> {
        let ExtendMode::Twos { twos } = self.mode else {
            return Err(ConstructError::ExtensionStuck { vertex: x });
        };
        let class_count = twos as u32 + 1;
        let (verts, rank, dm) = self.snapshot();
        for c in 1..=class_count {
            if self.fits(x, c, &verts, &rank, &dm, &[]) {
                self.classes[x] = c;
                return Ok(());
            }
        }
        // Joint repair: recolor up to two vertices within distance 2 of x
        // together with x. Exhaustive and deterministic.
        let ball: Vec<usize> = verts
            .iter()
            .copied()
            .filter(|&t| t != x && dm.dist(rank[x], rank[t]) <= 2)
            .collect();
        let singles: Vec<Vec<usize>> = ball.iter().map(|&b| vec![b]).collect();
        let mut pairs = Vec::new();
        for i in 0..ball.len() {
            for j in i + 1..ball.len() {
                pairs.push(vec![ball[i], ball[j]]);
            }
        }
        for group in singles.into_iter().chain(pairs) {
            let saved: Vec<u32> = group.iter().map(|&b| self.classes[b]).collect();
            let mut assignment = vec![1u32; group.len() + 1];
            loop {
                for (slot, &b) in group.iter().enumerate() {
                    self.classes[b] = assignment[slot];
                }
                self.classes[x] = assignment[group.len()];
                let changed: Vec<usize> =
                    group.iter().copied().chain(std::iter::once(x)).collect();
                let ok = changed
                    .iter()
                    .all(|&t| self.fits(t, self.classes[t], &verts, &rank, &dm, &[]));
                if ok {
                    return Ok(());
                }
                // Next assignment in odometer order.
                let mut pos = 0;
                loop {
                    if pos == assignment.len() {
                        break;
                    }
                    if assignment[pos] < class_count {
                        assignment[pos] += 1;
                        break;
                    }
                    assignment[pos] = 1;
                    pos += 1;
                }
                if pos == assignment.len() {
                    break;
                }
            }
            for (slot, &b) in group.iter().enumerate() {
                self.classes[b] = saved[slot];
            }
            self.classes[x] = 0;
        }
        Err(ConstructError::ExtensionStuck { vertex: x })
    }
}

impl Reduction {
    pub fn original(&self) -> &Graph {
        &self.original
    }

    /// Rebuild the original graph from the reduced one by inverting the log.
    /// Equality with the stored original is the engine's round-trip check.
    pub fn undo_all(&self) -> Graph {
        let n = self.original.n();
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for (ri, &oi) in self.to_original.iter().enumerate() {
            for &rj in self.reduced.neighbors(ri) {
                adj[oi].insert(self.to_original[rj]);
            }
        }
        for rec in self.log.iter().rev() {
            match *rec {
                Rewrite::Peel { v, anchor } => {
                    adj[v].insert(anchor);
                    adj[anchor].insert(v);
                }
                Rewrite::Merge { v, u, w, added_uw } => {
                    if added_uw {
                        adj[u].remove(&w);
                        adj[w].remove(&u);
                    }
                    adj[v].insert(u);
                    adj[u].insert(v);
                    adj[v].insert(w);
                    adj[w].insert(v);
                }
                Rewrite::Drop { x, left, right } => {
                    adj[x].insert(left);
                    adj[left].insert(x);
                    adj[x].insert(right);
                    adj[right].insert(x);
                }
            }
        }
        let mut edges = Vec::new();
        for v in 0..n {
            for &u in &adj[v] {
                if v < u {
                    edges.push((v, u));
                }
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    /// Lift a coloring of the reduced graph to the original by replaying the
    /// log backward. The caller supplies the class layout via `mode`.
    pub fn extend_coloring(
        &self,
        core: &PackingColoring,
        mode: ExtendMode,
    ) -> Result<PackingColoring, ConstructError> {
        assert_eq!(core.n(), self.reduced.n(), "core coloring size mismatch");
        let n = self.original.n();
        let mut replay = Replay {
            adj: vec![BTreeSet::new(); n],
            alive: vec![false; n],
            classes: vec![0; n],
            mode,
        };
        for (ri, &oi) in self.to_original.iter().enumerate() {
            replay.alive[oi] = true;
            replay.classes[oi] = core.class_of(ri);
            for &rj in self.reduced.neighbors(ri) {
                replay.adj[oi].insert(self.to_original[rj]);
            }
        }
        for rec in self.log.iter().rev() {
            match *rec {
                Rewrite::Peel { v, anchor } => {
                    replay.restore_vertex(v, &[anchor]);
                    replay.extend_peel(v, anchor)?;
                }
                Rewrite::Merge { v, u, w, added_uw } => {
                    if added_uw {
                        replay.adj[u].remove(&w);
                        replay.adj[w].remove(&u);
                    }
                    replay.restore_vertex(v, &[u, w]);
                    replay.extend_merge(v, u, w)?;
                }
                Rewrite::Drop { x, left, right } => {
                    replay.restore_vertex(x, &[left, right]);
                    replay.extend_drop(x)?;
                }
            }
        }
        debug_assert_eq!(
            (0..n).filter(|&v| replay.alive[v]).count(),
            n,
            "replay must restore every vertex"
        );
        Ok(PackingColoring::from_classes(replay.classes))
    }

    /// Count of records by rule, for reports.
    pub fn stats(&self) -> (usize, usize, usize) {
        let mut peel = 0;
        let mut merge = 0;
        let mut drop = 0;
        for rec in &self.log {
            match rec {
                Rewrite::Peel { .. } => peel += 1,
                Rewrite::Merge { .. } => merge += 1,
                Rewrite::Drop { .. } => drop += 1,
            }
        }
        (peel, merge, drop)
    }
}
