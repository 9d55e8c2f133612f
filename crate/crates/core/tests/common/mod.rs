//! Brute-force oracles kept independent of the library's own algorithms:
//! ranks drive circuit discovery, circuits drive the closure formula, and
//! cycles are enumerated literally for the chordal-graph definition.

#![allow(dead_code)]

use matroidal::graphs::LabeledGraph;
use matroidal::{BinaryMatroid, ElementSet, Matroid};

/// Rank of every subset, indexed by bit mask. Only uses `rank_of`.
pub fn rank_table(m: &BinaryMatroid) -> Vec<usize> {
    let n = m.ground_size();
    assert!(n <= 16, "rank table is for small ground sets");
    (0u64..(1 << n))
        .map(|mask| m.rank_of(ElementSet::from_bits(mask)))
        .collect()
}

/// Circuits as minimal dependent sets, discovered by a full subset sweep
/// over the rank table.
pub fn oracle_circuits(m: &BinaryMatroid) -> Vec<ElementSet> {
    let n = m.ground_size();
    let ranks = rank_table(m);
    let mut out = Vec::new();
    for mask in 1u64..(1 << n) {
        let size = mask.count_ones() as usize;
        if ranks[mask as usize] >= size {
            continue;
        }
        let minimal = (0..n).filter(|&e| (mask >> e) & 1 == 1).all(|e| {
            let sub = mask & !(1 << e);
            ranks[sub as usize] == size - 1
        });
        if minimal {
            out.push(ElementSet::from_bits(mask));
        }
    }
    out.sort();
    out
}

/// `cl(X) = X + { e : some circuit C has C \ X = {e} }`.
pub fn oracle_closure_from_circuits(x: ElementSet, circuits: &[ElementSet]) -> ElementSet {
    let mut out = x;
    for &c in circuits {
        let rest = c.difference(x);
        if rest.len() == 1 {
            out = out.union(rest);
        }
    }
    out
}

/// Chord existence by scanning all circuit pairs, with no closure
/// shortcut: some pair must share exactly one element and split `c`.
pub fn oracle_chord_exists(circuits: &[ElementSet], c: ElementSet) -> bool {
    for (i, &c1) in circuits.iter().enumerate() {
        for &c2 in &circuits[i + 1..] {
            if c1.intersection(c2).len() == 1 && c1.symmetric_difference(c2) == c {
                return true;
            }
        }
    }
    false
}

/// Literal chordality: enumerate every cycle and demand a chord (an edge
/// between non-consecutive cycle vertices) on each cycle of length >= 4.
pub fn naive_is_chordal(n: usize, adj: &[u64]) -> bool {
    let mut path: Vec<usize> = Vec::with_capacity(n);
    for start in 0..n {
        path.push(start);
        let ok = extend_cycles(start, adj, &mut path, 1u64 << start);
        path.pop();
        if !ok {
            return false;
        }
    }
    true
}

fn extend_cycles(start: usize, adj: &[u64], path: &mut Vec<usize>, visited: u64) -> bool {
    let last = *path.last().unwrap();
    let mut nbrs = adj[last];
    while nbrs != 0 {
        let next = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        if next == start {
            if path.len() >= 4 && !cycle_has_chord(adj, path) {
                return false;
            }
            continue;
        }
        // Keep `start` minimal in the cycle so each cycle is seen from
        // one base vertex only.
        if next < start || (visited >> next) & 1 == 1 {
            continue;
        }
        path.push(next);
        let ok = extend_cycles(start, adj, path, visited | (1 << next));
        path.pop();
        if !ok {
            return false;
        }
    }
    true
}

fn cycle_has_chord(adj: &[u64], cycle: &[usize]) -> bool {
    let k = cycle.len();
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j - i == 1 || (i == 0 && j == k - 1);
            if !consecutive && (adj[cycle[i]] >> cycle[j]) & 1 == 1 {
                return true;
            }
        }
    }
    false
}

/// The `i`-th unordered vertex pair of a `k`-vertex graph, in the order
/// used by [`graph_from_edge_mask`].
pub fn vertex_pairs(k: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(k * (k - 1) / 2);
    for u in 0..k {
        for v in u + 1..k {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Simple labeled graph on `k` vertices from an edge bit mask over the
/// lexicographic vertex pairs.
pub fn graph_from_edge_mask(k: usize, mask: u64, pairs: &[(usize, usize)]) -> LabeledGraph {
    let names = (1..=k).map(|i| format!("v{i}")).collect();
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| (mask >> i) & 1 == 1)
        .map(|(_, &p)| p)
        .collect();
    LabeledGraph::new(names, edges).expect("within caps")
}

/// Adjacency masks straight from an edge mask, bypassing graph
/// construction (for the big sweeps).
pub fn adjacency_from_edge_mask(k: usize, mask: u64, pairs: &[(usize, usize)]) -> Vec<u64> {
    let mut adj = vec![0u64; k];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if (mask >> i) & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    adj
}

pub fn adjacency_is_connected(k: usize, adj: &[u64]) -> bool {
    if k == 0 {
        return true;
    }
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v] & !seen;
        }
        seen |= next;
        frontier = next;
    }
    seen.count_ones() as usize == k
}
