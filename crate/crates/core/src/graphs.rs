//! Edge-labeled graphs, their cycle and cocycle matroids, chordal-graph
//! recognition, S-labelings, S-graphs and the cone construction.
//!
//! The S-labeling convention here is the one matching supersolvability:
//! a vertex order `v1, ..., vm` such that the neighbors of each `vi`
//! among the *earlier* vertices form a clique. This is the reverse of
//! the common perfect-elimination-order convention.

use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, MAX_DIM};
use crate::matroid::{BinaryMatroid, Matroid};
use crate::supersolvable::{validate_mchain, MChain, MPartition};
use std::collections::BTreeSet;
use std::fmt;

/// Cap on vertices for the brute-force isomorphism search.
pub const ISOMORPHISM_VERTEX_CAP: usize = 10;

/// Cap on vertices for exhaustive S-labeling enumeration.
pub const S_LABELING_VERTEX_CAP: usize = 10;

/// A multigraph with named vertices and edges labeled `1..n` (label `i`
/// is stored at position `i-1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    vertex_names: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl LabeledGraph {
    pub fn new(vertex_names: Vec<String>, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_names.len() > MAX_DIM {
            return Err(Error::DimensionTooLarge {
                got: vertex_names.len(),
                max: MAX_DIM,
            });
        }
        if edges.len() > MAX_DIM {
            return Err(Error::DimensionTooLarge {
                got: edges.len(),
                max: MAX_DIM,
            });
        }
        let m = vertex_names.len();
        for &(u, v) in &edges {
            if u >= m || v >= m {
                return Err(Error::Parse(format!(
                    "edge endpoint out of range: ({u},{v}) with {m} vertices"
                )));
            }
        }
        let mut sorted = vertex_names.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse("duplicate vertex name".into()));
        }
        Ok(LabeledGraph {
            vertex_names,
            edges,
        })
    }

    /// Parses the `.graph` format: optional `#` comments, an optional
    /// `vertices v1 v2 ...` header, then one edge per line as
    /// `label u v` or `u v` (labels assigned in file order when omitted).
    pub fn parse_graph(text: &str) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        let mut header = false;
        let mut labeled: Vec<(usize, String, String)> = Vec::new();
        let mut unlabeled: Vec<(String, String)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks[0] == "vertices" {
                if header || !labeled.is_empty() || !unlabeled.is_empty() {
                    return Err(Error::Parse(format!(
                        "line {}: vertices header must come first",
                        lineno + 1
                    )));
                }
                header = true;
                names = toks[1..].iter().map(|s| s.to_string()).collect();
                continue;
            }
            match toks.len() {
                3 => {
                    let label: usize = toks[0].parse().map_err(|_| {
                        Error::Parse(format!("line {}: bad edge label {:?}", lineno + 1, toks[0]))
                    })?;
                    if label == 0 {
                        return Err(Error::Parse(format!(
                            "line {}: edge labels are 1-based",
                            lineno + 1
                        )));
                    }
                    labeled.push((label, toks[1].to_string(), toks[2].to_string()));
                }
                2 => unlabeled.push((toks[0].to_string(), toks[1].to_string())),
                _ => {
                    return Err(Error::Parse(format!(
                        "line {}: expected `label u v` or `u v`",
                        lineno + 1
                    )));
                }
            }
        }
        if !labeled.is_empty() && !unlabeled.is_empty() {
            return Err(Error::Parse(
                "mixing labeled and unlabeled edge lines is not supported".into(),
            ));
        }
        let index_of = |name: &str, names: &mut Vec<String>| -> Result<usize> {
            if let Some(i) = names.iter().position(|n| n == name) {
                return Ok(i);
            }
            if header {
                return Err(Error::Parse(format!(
                    "vertex {name:?} not in the vertices header"
                )));
            }
            names.push(name.to_string());
            Ok(names.len() - 1)
        };
        let edges: Vec<(usize, usize)> = if labeled.is_empty() {
            let mut out = Vec::with_capacity(unlabeled.len());
            for (u, v) in &unlabeled {
                let iu = index_of(u, &mut names)?;
                let iv = index_of(v, &mut names)?;
                out.push((iu, iv));
            }
            out
        } else {
            let n = labeled.len();
            let mut out: Vec<Option<(usize, usize)>> = vec![None; n];
            for (label, u, v) in &labeled {
                if *label > n {
                    return Err(Error::Parse(format!(
                        "edge label {label} exceeds the edge count {n}"
                    )));
                }
                if out[label - 1].is_some() {
                    return Err(Error::Parse(format!("repeated edge label {label}")));
                }
                let iu = index_of(u, &mut names)?;
                let iv = index_of(v, &mut names)?;
                out[label - 1] = Some((iu, iv));
            }
            out.into_iter().map(|e| e.expect("labels are 1..n")).collect()
        };
        Self::new(names, edges)
    }

    /// Serializes back to the `.graph` format.
    pub fn to_graph_format(&self) -> String {
        let mut s = String::from("vertices");
        for name in &self.vertex_names {
            s.push(' ');
            s.push_str(name);
        }
        s.push('\n');
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            s.push_str(&format!(
                "{} {} {}\n",
                i + 1,
                self.vertex_names[u],
                self.vertex_names[v]
            ));
        }
        s
    }

    pub fn n_vertices(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.vertex_names[i]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertex_names.iter().position(|n| n == name)
    }

    /// Endpoints of the edge with label `i+1`.
    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbor bitmasks, ignoring self-loops.
    pub fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n_vertices()];
        for &(u, v) in &self.edges {
            if u != v {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges
            .iter()
            .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    /// No self-loops and no parallel edges.
    pub fn is_simple_graph(&self) -> bool {
        let mut seen = BTreeSet::new();
        for &(u, v) in &self.edges {
            if u == v || !seen.insert((u.min(v), u.max(v))) {
                return false;
            }
        }
        true
    }

    pub fn is_connected(&self) -> bool {
        let m = self.n_vertices();
        if m <= 1 {
            return true;
        }
        let adj = self.adjacency();
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
        seen.count_ones() as usize == m
    }

    /// Connected with no cut vertex (vacuously true for a single edge).
    pub fn is_biconnected(&self) -> bool {
        let m = self.n_vertices();
        if m < 2 || !self.is_connected() {
            return false;
        }
        if m == 2 {
            return !self.edges.is_empty();
        }
        let adj = self.adjacency();
        for cut in 0..m {
            let mut seen = 0u64;
            let start = (0..m).find(|&v| v != cut).unwrap();
            seen |= 1 << start;
            let mut frontier = seen;
            while frontier != 0 {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= adj[v] & !seen & !(1 << cut);
                }
                seen |= next;
                frontier = next;
            }
            if seen.count_ones() as usize != m - 1 {
                return false;
            }
        }
        true
    }

    /// Labels of the edges with both endpoints inside the vertex mask.
    pub fn edges_within(&self, vertex_mask: u64) -> ElementSet {
        ElementSet::from_indices(self.edges.iter().enumerate().filter_map(|(i, &(u, v))| {
            ((vertex_mask >> u) & 1 == 1 && (vertex_mask >> v) & 1 == 1).then_some(i)
        }))
    }
}

/// The vertex-edge incidence matrix over GF(2); circuits of the result
/// are the elementary cycles of the graph.
pub fn cycle_matroid(g: &LabeledGraph) -> Result<BinaryMatroid> {
    let mut rows = vec![0u64; g.n_vertices()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if u != v {
            rows[u] |= 1 << i;
            rows[v] |= 1 << i;
        }
    }
    Ok(BinaryMatroid::from_matrix(Gf2Matrix::from_row_bits(
        rows,
        g.n_edges(),
    )?))
}

/// The dual of the cycle matroid; its circuits are the minimal edge
/// cutsets. Requires a connected graph.
pub fn cocycle_matroid(g: &LabeledGraph) -> Result<BinaryMatroid> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(cycle_matroid(g)?.dual())
}

fn require_simple_graph(g: &LabeledGraph) -> Result<()> {
    if !g.is_simple_graph() {
        return Err(Error::NotSimpleGraph(
            "self-loop or parallel edge present".into(),
        ));
    }
    Ok(())
}

/// Whether each vertex's earlier neighbors form a clique under `order`.
pub fn is_s_labeling(g: &LabeledGraph, order: &[usize]) -> Result<bool> {
    require_simple_graph(g)?;
    let m = g.n_vertices();
    if order.len() != m {
        return Ok(false);
    }
    let mut seen = 0u64;
    for &v in order {
        if v >= m || (seen >> v) & 1 == 1 {
            return Ok(false);
        }
        seen |= 1 << v;
    }
    let adj = g.adjacency();
    let mut placed = 0u64;
    for &v in order {
        let earlier = adj[v] & placed;
        let mut rest = earlier;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if earlier & !(1 << u) & !adj[u] != 0 {
                return Ok(false);
            }
        }
        placed |= 1 << v;
    }
    Ok(true)
}

/// Maximum-cardinality search with lowest-index tie-breaking; the visit
/// order is an S-labeling exactly when the graph is chordal.
pub fn is_chordal_graph(g: &LabeledGraph) -> Result<Option<Vec<usize>>> {
    require_simple_graph(g)?;
    let m = g.n_vertices();
    let adj = g.adjacency();
    let mut weight = vec![0usize; m];
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(m);
    for _ in 0..m {
        let mut best: Option<usize> = None;
        for v in 0..m {
            if (placed >> v) & 1 == 0 && best.is_none_or(|b| weight[v] > weight[b]) {
                best = Some(v);
            }
        }
        let v = best.expect("an unplaced vertex remains");
        order.push(v);
        placed |= 1 << v;
        let mut nbrs = adj[v] & !placed;
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            weight[u] += 1;
        }
    }
    if is_s_labeling(g, &order)? {
        Ok(Some(order))
    } else {
        Ok(None)
    }
}

/// All S-labelings, in lexicographic order of vertex-index sequences.
pub fn s_labelings(g: &LabeledGraph) -> Result<Vec<Vec<usize>>> {
    require_simple_graph(g)?;
    let m = g.n_vertices();
    if m > S_LABELING_VERTEX_CAP {
        return Err(Error::EnumerationCapExceeded {
            what: "S-labeling enumeration (vertex permutations)",
            size: m,
            cap: S_LABELING_VERTEX_CAP,
        });
    }
    let adj = g.adjacency();
    let mut out = Vec::new();
    let mut partial = Vec::with_capacity(m);
    extend_labelings(&adj, m, 0u64, &mut partial, &mut out);
    Ok(out)
}

fn extend_labelings(
    adj: &[u64],
    m: usize,
    placed: u64,
    partial: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if partial.len() == m {
        out.push(partial.clone());
        return;
    }
    for v in 0..m {
        if (placed >> v) & 1 == 1 {
            continue;
        }
        if is_clique(adj, adj[v] & placed) {
            partial.push(v);
            extend_labelings(adj, m, placed | (1 << v), partial, out);
            partial.pop();
        }
    }
}

fn is_clique(adj: &[u64], mask: u64) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if mask & !(1 << u) & !adj[u] != 0 {
            return false;
        }
    }
    true
}

fn slabel_chain_flats(g: &LabeledGraph, order: &[usize]) -> Vec<ElementSet> {
    let mut flats = Vec::with_capacity(order.len());
    let mut mask = 0u64;
    for &v in order {
        mask |= 1 << v;
        flats.push(g.edges_within(mask));
    }
    flats
}

/// The chain of edge sets spanned by the order prefixes, validated as an
/// M-chain of the cycle matroid `m` (which must be `cycle_matroid(g)`).
pub fn slabel_to_mchain_on(
    m: &BinaryMatroid,
    g: &LabeledGraph,
    order: &[usize],
) -> Result<MChain> {
    if !g.is_connected() {
        return Err(Error::InvalidSLabel("graph must be connected".into()));
    }
    if !is_s_labeling(g, order)? {
        return Err(Error::InvalidSLabel(format!(
            "order {order:?} has a vertex whose earlier neighbors are not a clique"
        )));
    }
    let chain = MChain::new(slabel_chain_flats(g, order));
    validate_mchain(m, &chain)?;
    Ok(chain)
}

/// As [`slabel_to_mchain_on`], building the cycle matroid internally.
pub fn slabel_to_mchain(g: &LabeledGraph, order: &[usize]) -> Result<MChain> {
    slabel_to_mchain_on(&cycle_matroid(g)?, g, order)
}

/// The S-graph of a matroid and an M-partition: one vertex per block,
/// an edge between two blocks whenever some nontrivial line meets both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SGraph {
    blocks: Vec<ElementSet>,
    edges: BTreeSet<(usize, usize)>,
}

impl SGraph {
    pub fn n_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[ElementSet] {
        &self.blocks
    }

    /// Edges as 0-based block index pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    pub fn degree(&self, i: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == i || b == i)
            .count()
    }

    pub fn is_complete(&self) -> bool {
        let r = self.n_blocks();
        self.edges.len() == r * (r - 1) / 2
    }

    /// Deterministic DOT rendering; node labels carry the block contents.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph sgraph {\n");
        for (i, b) in self.blocks.iter().enumerate() {
            s.push_str(&format!("  P{} [label=\"P{} {}\"];\n", i + 1, i + 1, b));
        }
        for &(i, j) in &self.edges {
            s.push_str(&format!("  P{} -- P{};\n", i + 1, j + 1));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_simple_graph(&self) -> SimpleGraph {
        let mut adj = vec![0u64; self.blocks.len()];
        for &(i, j) in &self.edges {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        SimpleGraph {
            n: self.blocks.len(),
            adj,
        }
    }

    /// The underlying block graph as a labeled graph on vertices
    /// `P1..Pr`, for reuse of the chordality machinery.
    pub fn to_labeled_graph(&self) -> LabeledGraph {
        let names = (1..=self.blocks.len()).map(|i| format!("P{i}")).collect();
        let edges = self.edges.iter().copied().collect();
        LabeledGraph::new(names, edges).expect("block graph is within caps")
    }
}

impl fmt::Display for SGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, &(i, j)) in self.edges.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "P{} -- P{}", i + 1, j + 1)?;
        }
        Ok(())
    }
}

/// Builds the S-graph of `(m, p)`. The partition must be the block
/// sequence of a valid M-chain of the simple binary matroid `m`.
pub fn sgraph_of(m: &BinaryMatroid, p: &MPartition) -> Result<SGraph> {
    if !m.is_simple() {
        return Err(Error::NotSimple);
    }
    if p.blocks().iter().any(|b| b.is_empty()) {
        return Err(Error::InvalidPartition("empty block".into()));
    }
    let mut union = ElementSet::empty();
    for &b in p.blocks() {
        if union.intersects(b) {
            return Err(Error::InvalidPartition("blocks are not disjoint".into()));
        }
        union = union.union(b);
    }
    if union != m.ground_set() {
        return Err(Error::InvalidPartition(
            "blocks do not cover the ground set".into(),
        ));
    }
    let chain = MChain::new(p.chain_flats());
    validate_mchain(m, &chain)
        .map_err(|e| Error::InvalidPartition(format!("blocks do not come from an M-chain: {e}")))?;
    let mut edges = BTreeSet::new();
    for line in m.nontrivial_lines()? {
        let met: Vec<usize> = (0..p.len())
            .filter(|&i| line.elements.intersects(p.blocks()[i]))
            .collect();
        for (a, &i) in met.iter().enumerate() {
            for &j in &met[a + 1..] {
                edges.insert((i, j));
            }
        }
    }
    Ok(SGraph {
        blocks: p.blocks().to_vec(),
        edges,
    })
}

/// The S-graph of the cycle matroid of a chordal graph under the
/// M-partition induced by an S-labeling, reusing a prebuilt matroid.
pub fn derived_sgraph_on(
    m: &BinaryMatroid,
    g: &LabeledGraph,
    order: &[usize],
) -> Result<SGraph> {
    let chain = slabel_to_mchain_on(m, g, order)?;
    sgraph_of(m, &chain.partition())
}

/// As [`derived_sgraph_on`], building the cycle matroid internally.
pub fn derived_sgraph(g: &LabeledGraph, order: &[usize]) -> Result<SGraph> {
    derived_sgraph_on(&cycle_matroid(g)?, g, order)
}

/// Checks that the derived S-graph embeds into `g` under the map sending
/// block `P_l` to the `(l+1)`-th vertex of the order.
pub fn subgraph_embedding_check(g: &LabeledGraph, order: &[usize], sg: &SGraph) -> bool {
    sg.edges()
        .all(|(i, j)| g.has_edge(order[i + 1], order[j + 1]))
}

/// Extends `g` by a new vertex adjacent to every vertex; the new edges
/// get fresh labels after the original ones, in vertex order.
pub fn cone(g: &LabeledGraph) -> Result<LabeledGraph> {
    require_simple_graph(g)?;
    let m = g.n_vertices();
    let mut name = String::from("v0");
    while g.vertex_index(&name).is_some() {
        name.push('\'');
    }
    let mut names = g.vertex_names().to_vec();
    names.push(name);
    let mut edges = g.edges().to_vec();
    for v in 0..m {
        edges.push((v, m));
    }
    LabeledGraph::new(names, edges)
}

/// An unlabeled simple graph as adjacency bitmasks, the common currency
/// for isomorphism checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            assert!(u < n && v < n && u != v);
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        SimpleGraph { n, adj }
    }

    pub fn from_labeled(g: &LabeledGraph) -> Result<Self> {
        require_simple_graph(g)?;
        Ok(Self::new(g.n_vertices(), g.edges()))
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.adj[u] >> v) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn n_edges(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }
}

/// Brute-force isomorphism with degree-sequence pruning.
pub fn graphs_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> Result<bool> {
    let n = a.n.max(b.n);
    if n > ISOMORPHISM_VERTEX_CAP {
        return Err(Error::EnumerationCapExceeded {
            what: "graph isomorphism (vertex bijections)",
            size: n,
            cap: ISOMORPHISM_VERTEX_CAP,
        });
    }
    if a.n != b.n || a.n_edges() != b.n_edges() {
        return Ok(false);
    }
    let mut deg_a: Vec<usize> = (0..a.n).map(|v| a.degree(v)).collect();
    let mut deg_b: Vec<usize> = (0..b.n).map(|v| b.degree(v)).collect();
    let degrees_a = deg_a.clone();
    let degrees_b = deg_b.clone();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return Ok(false);
    }
    let mut map = vec![usize::MAX; a.n];
    Ok(extend_isomorphism(
        a, b, &degrees_a, &degrees_b, &mut map, 0, 0,
    ))
}

fn extend_isomorphism(
    a: &SimpleGraph,
    b: &SimpleGraph,
    deg_a: &[usize],
    deg_b: &[usize],
    map: &mut Vec<usize>,
    used: u64,
    depth: usize,
) -> bool {
    if depth == a.n {
        return true;
    }
    for cand in 0..b.n {
        if (used >> cand) & 1 == 1 || deg_b[cand] != deg_a[depth] {
            continue;
        }
        let consistent = (0..depth)
            .all(|u| a.has_edge(u, depth) == b.has_edge(map[u], cand));
        if consistent {
            map[depth] = cand;
            if extend_isomorphism(a, b, deg_a, deg_b, map, used | (1 << cand), depth + 1) {
                return true;
            }
        }
    }
    false
}
