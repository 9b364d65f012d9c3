//! Canonical labeling by iterated equitable refinement with
//! individualization backtracking.
//!
//! The canonical form is the lexicographically smallest adjacency encoding
//! over every labeling the search visits; visiting at least one labeling per
//! automorphism-class of refinement leaves makes the minimum relabeling
//! invariant. Twin vertices (swappable by a transposition automorphism) are
//! branched only once. Intended scale is small graphs (enumeration n <= 12,
//! fixtures n <= 13); correctness is cross-checked against brute-force
//! permutation search in tests.

use crate::graph::{emit_graph6, Graph};

struct Search<'a> {
    g: &'a Graph,
    masks: Vec<Vec<u64>>,
    words: usize,
    best_bits: Option<Vec<u64>>,
    best_order: Vec<usize>,
}

fn popcount_and(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum()
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let words = g.n().div_ceil(64).max(1);
        let mut masks = vec![vec![0u64; words]; g.n()];
        for v in 0..g.n() {
            for &u in g.neighbors(v) {
                masks[v][u / 64] |= 1 << (u % 64);
            }
        }
        Search {
            g,
            masks,
            words,
            best_bits: None,
            best_order: Vec::new(),
        }
    }

    /// Splits cells by neighbor counts into a coarsest stable partition.
    /// Deterministic: cells are scanned positionally, sub-cells ordered by
    /// ascending count, so the result is relabeling-invariant.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        'outer: loop {
            for s in 0..cells.len() {
                let mut splitter = vec![0u64; self.words];
                for &v in &cells[s] {
                    splitter[v / 64] |= 1 << (v % 64);
                }
                for c in 0..cells.len() {
                    if cells[c].len() <= 1 {
                        continue;
                    }
                    let mut keyed: Vec<(u32, usize)> = cells[c]
                        .iter()
                        .map(|&v| (popcount_and(&self.masks[v], &splitter), v))
                        .collect();
                    keyed.sort_unstable();
                    if keyed.first().unwrap().0 == keyed.last().unwrap().0 {
                        continue;
                    }
                    let mut parts: Vec<Vec<usize>> = Vec::new();
                    for (key, v) in keyed {
                        match parts.last_mut() {
                            Some(last) if {
                                let h = last[0];
                                popcount_and(&self.masks[h], &splitter) == key
                            } =>
                            {
                                last.push(v)
                            }
                            _ => parts.push(vec![v]),
                        }
                    }
                    cells.splice(c..=c, parts);
                    continue 'outer;
                }
            }
            return;
        }
    }

    fn descend(&mut self, mut cells: Vec<Vec<usize>>) {
        self.refine(&mut cells);
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let bits = self.leaf_bits(&order);
            if self.best_bits.as_ref().is_none_or(|b| bits < *b) {
                self.best_bits = Some(bits);
                self.best_order = order;
            }
            return;
        };
        let members = cells[t].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let mut next = cells.clone();
            let rest: Vec<usize> = members.iter().copied().filter(|&x| x != v).collect();
            next.splice(t..=t, [vec![v], rest]);
            self.descend(next);
        }
    }

    /// True if swapping u and v (fixing everything else) is an automorphism.
    fn twins(&self, u: usize, v: usize) -> bool {
        let mut mu = self.masks[u].clone();
        let mut mv = self.masks[v].clone();
        mu[v / 64] &= !(1 << (v % 64));
        mv[u / 64] &= !(1 << (u % 64));
        mu[u / 64] &= !(1 << (u % 64));
        mv[v / 64] &= !(1 << (v % 64));
        mu == mv && self.g.has_edge(u, v) == self.g.has_edge(v, u)
    }

    /// Upper-triangle adjacency bits under `order` (order[new] = old),
    /// packed for lexicographic comparison.
    fn leaf_bits(&self, order: &[usize]) -> Vec<u64> {
        let n = order.len();
        let nbits = n * n.saturating_sub(1) / 2;
        let mut bits = vec![0u64; nbits.div_ceil(64).max(1)];
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if self.g.has_edge(order[i], order[j]) {
                    bits[idx / 64] |= 1 << (63 - idx % 64);
                }
                idx += 1;
            }
        }
        bits
    }
}

/// Canonically relabeled copy of `g` plus the permutation that produced it
/// (perm[old] = new).
pub fn canonical_form(g: &Graph) -> (Graph, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (g.clone(), Vec::new());
    }
    let mut search = Search::new(g);
    search.descend(vec![(0..n).collect()]);
    let order = search.best_order;
    let mut perm = vec![0usize; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    let canon = Graph::new(n, &edges).expect("relabeling preserves validity");
    (canon, perm)
}

/// graph6 line of the canonical form; equal iff isomorphic.
pub fn canonical_code(g: &Graph) -> String {
    emit_graph6(&canonical_form(g).0)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    isomorphism(a, b).is_some()
}

/// Vertex map a -> b realizing an isomorphism, if one exists.
pub fn isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return None;
    }
    let (ca, pa) = canonical_form(a);
    let (cb, pb) = canonical_form(b);
    if ca != cb {
        return None;
    }
    let mut inv_b = vec![0usize; b.n()];
    for (old, &new) in pb.iter().enumerate() {
        inv_b[new] = old;
    }
    let map: Vec<usize> = (0..a.n()).map(|v| inv_b[pa[v]]).collect();
    debug_assert!(a
        .edges()
        .iter()
        .all(|&(u, v)| b.has_edge(map[u], map[v])));
    Some(map)
}
