//! Named constructions, exhaustive enumeration of small simple binary
//! matroids, and the combined analysis report behind the CLI.

use crate::chordality::{self, EquivalenceReport};
use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::gf2::SpanBasis;
use crate::graphs::LabeledGraph;
use crate::matroid::{BinaryMatroid, GeneralMatroid, Matroid};
use crate::supersolvable::{self, MChain};
use std::collections::BTreeMap;
use std::fmt;

/// Caps for [`enumerate_simple_binary`]: rank 5 would already mean
/// sweeping `2^31` column subsets.
pub const ENUM_RANK_CAP: usize = 4;
pub const ENUM_SIZE_CAP: usize = 12;

/// The `ell` values covered by the per-matroid equivalence reports.
pub const REPORT_ELLS: [usize; 3] = [2, 3, 4];

/// The `ell` values covered by the per-matroid chordality map.
pub const REPORT_CHORDAL_ELLS: [usize; 4] = [3, 4, 5, 6];

/// The Fano plane: all seven nonzero vectors of GF(2)^3, column `j`
/// holding the binary expansion of `j`.
pub fn fano() -> BinaryMatroid {
    BinaryMatroid::from_columns(3, &(1..=7u64).collect::<Vec<_>>()).expect("within caps")
}

/// The uniform rank-2 matroid on four elements: every 3-subset a circuit.
/// The smallest non-binary matroid.
pub fn u24() -> GeneralMatroid {
    let circuits = (0u64..16)
        .map(ElementSet::from_bits)
        .filter(|s| s.len() == 3)
        .collect();
    GeneralMatroid::from_circuits(4, circuits).expect("axioms hold")
}

/// Complete graph on vertices `v1..vk`, edges labeled in lexicographic
/// endpoint order.
pub fn complete_graph(k: usize) -> LabeledGraph {
    assert!(k >= 2, "complete graph needs at least two vertices");
    let names = (1..=k).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::with_capacity(k * (k - 1) / 2);
    for i in 0..k {
        for j in i + 1..k {
            edges.push((i, j));
        }
    }
    LabeledGraph::new(names, edges).expect("within caps")
}

/// Complete bipartite graph on parts `u1..ua` and `w1..wb`, edges in
/// lexicographic order.
pub fn complete_bipartite(a: usize, b: usize) -> LabeledGraph {
    assert!(a >= 1 && b >= 1);
    let names = (1..=a)
        .map(|i| format!("u{i}"))
        .chain((1..=b).map(|j| format!("w{j}")))
        .collect();
    let mut edges = Vec::with_capacity(a * b);
    for i in 0..a {
        for j in 0..b {
            edges.push((i, a + j));
        }
    }
    LabeledGraph::new(names, edges).expect("within caps")
}

/// Fan: apex `v1` joined to every vertex of the path `v2..v(k+1)`, with
/// apex and path edges alternating in the labeling. `fan_graph(4)` is the
/// running 5-vertex, 7-edge chordal example: edges 1={v1,v2}, 2={v2,v3},
/// 3={v1,v3}, 4={v3,v4}, 5={v1,v4}, 6={v4,v5}, 7={v1,v5}.
pub fn fan_graph(k: usize) -> LabeledGraph {
    assert!(k >= 1);
    let names = (1..=k + 1).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::with_capacity(2 * k - 1);
    for i in 1..=k {
        edges.push((0, i));
        if i < k {
            edges.push((i, i + 1));
        }
    }
    LabeledGraph::new(names, edges).expect("within caps")
}

/// Cycle on `k >= 3` vertices, edge `i` joining `vi` and `v(i+1)`.
pub fn cycle_graph(k: usize) -> LabeledGraph {
    assert!(k >= 3, "a cycle needs at least three vertices");
    let names = (1..=k).map(|i| format!("v{i}")).collect();
    let edges = (0..k).map(|i| (i, (i + 1) % k)).collect();
    LabeledGraph::new(names, edges).expect("within caps")
}

/// Path on `k >= 1` vertices.
pub fn path_graph(k: usize) -> LabeledGraph {
    assert!(k >= 1);
    let names = (1..=k).map(|i| format!("v{i}")).collect();
    let edges = (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    LabeledGraph::new(names, edges).expect("within caps")
}

/// A matroid admitted to the catalog.
#[derive(Clone, Debug)]
pub enum CatalogMatroid {
    Binary(BinaryMatroid),
    General(GeneralMatroid),
}

impl CatalogMatroid {
    pub fn as_matroid(&self) -> &dyn Matroid {
        match self {
            CatalogMatroid::Binary(m) => m,
            CatalogMatroid::General(m) => m,
        }
    }

    pub fn as_binary(&self) -> Option<&BinaryMatroid> {
        match self {
            CatalogMatroid::Binary(m) => Some(m),
            CatalogMatroid::General(_) => None,
        }
    }
}

/// A catalog member with a canonical id, stable across runs.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub matroid: CatalogMatroid,
    pub provenance: String,
}

impl CatalogEntry {
    pub fn from_binary(provenance: impl Into<String>, m: BinaryMatroid) -> Self {
        let mut cols = m.columns();
        cols.sort_unstable();
        let id = format!(
            "r{}:{}",
            m.rank(),
            cols.iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(".")
        );
        CatalogEntry {
            id,
            matroid: CatalogMatroid::Binary(m),
            provenance: provenance.into(),
        }
    }

    pub fn from_general(provenance: impl Into<String>, m: GeneralMatroid) -> Self {
        let circuits = m.circuits().expect("circuit list is stored");
        let id = format!(
            "circ{}:{}",
            m.ground_size(),
            circuits
                .iter()
                .map(|c| c.bits().to_string())
                .collect::<Vec<_>>()
                .join(".")
        );
        CatalogEntry {
            id,
            matroid: CatalogMatroid::General(m),
            provenance: provenance.into(),
        }
    }
}

fn columns_have_rank(cols: &[u64], r: usize) -> bool {
    let mut basis = SpanBasis::new();
    for &c in cols {
        basis.insert(c);
    }
    basis.rank() == r
}

/// Streams every simple binary matroid of rank `<= max_r` on at most
/// `max_n` elements, as subsets of the nonzero vectors of GF(2)^r that
/// contain a basis. Ids are canonical column-set keys, so each subset
/// appears exactly once; matroids that agree only up to a linear map are
/// kept as distinct entries.
pub fn enumerate_simple_binary(
    max_r: usize,
    max_n: usize,
) -> Result<impl Iterator<Item = CatalogEntry>> {
    if max_r > ENUM_RANK_CAP {
        return Err(Error::EnumerationCapExceeded {
            what: "simple binary enumeration (rank)",
            size: max_r,
            cap: ENUM_RANK_CAP,
        });
    }
    if max_n > ENUM_SIZE_CAP {
        return Err(Error::EnumerationCapExceeded {
            what: "simple binary enumeration (ground-set size)",
            size: max_n,
            cap: ENUM_SIZE_CAP,
        });
    }
    Ok((1..=max_r).flat_map(move |r| {
        let n_vectors = (1usize << r) - 1;
        (1u64..(1u64 << n_vectors)).filter_map(move |mask| {
            let n = mask.count_ones() as usize;
            if n > max_n || n < r {
                return None;
            }
            let cols: Vec<u64> = (0..n_vectors)
                .filter(|i| (mask >> i) & 1 == 1)
                .map(|i| (i + 1) as u64)
                .collect();
            if !columns_have_rank(&cols, r) {
                return None;
            }
            let m = BinaryMatroid::from_columns(r, &cols).expect("within caps");
            Some(CatalogEntry::from_binary(
                format!("enumerate(r={r},mask={mask})"),
                m,
            ))
        })
    }))
}

/// Everything the CLI reports about one matroid. Fields requiring
/// simplicity or binarity stay `None` when not applicable.
#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub id: String,
    pub n: usize,
    pub rank: usize,
    pub simple: bool,
    pub binary: bool,
    pub circuit_count: usize,
    pub chordal: Option<bool>,
    pub ell_chordal: BTreeMap<usize, bool>,
    pub supersolvable: Option<bool>,
    pub mchain: Option<MChain>,
    pub equivalence: BTreeMap<usize, EquivalenceReport>,
}

impl AnalysisReport {
    fn option_str(v: Option<bool>) -> String {
        match v {
            Some(b) => b.to_string(),
            None => "n/a".to_string(),
        }
    }

    /// Flat key-value rendering for machine consumption.
    pub fn to_kv(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("id={}\n", self.id));
        s.push_str(&format!("n={}\n", self.n));
        s.push_str(&format!("rank={}\n", self.rank));
        s.push_str(&format!("simple={}\n", self.simple));
        s.push_str(&format!("binary={}\n", self.binary));
        s.push_str(&format!("circuits={}\n", self.circuit_count));
        s.push_str(&format!("chordal={}\n", Self::option_str(self.chordal)));
        for (ell, v) in &self.ell_chordal {
            s.push_str(&format!("chordal_ell_{ell}={v}\n"));
        }
        s.push_str(&format!(
            "supersolvable={}\n",
            Self::option_str(self.supersolvable)
        ));
        if let Some(c) = &self.mchain {
            s.push_str(&format!("mchain={c}\n"));
        }
        for (ell, r) in &self.equivalence {
            s.push_str(&format!(
                "eq{ell}_ell_closed={}\neq{ell}_chordal_ell2={}\neq{ell}_delta_generated={}\n",
                r.ell_closed, r.chordal_ell2, r.delta_generated
            ));
        }
        s
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "id: {}", self.id)?;
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "rank: {}", self.rank)?;
        writeln!(f, "simple: {}", self.simple)?;
        writeln!(f, "binary: {}", self.binary)?;
        writeln!(f, "circuits: {}", self.circuit_count)?;
        writeln!(f, "chordal: {}", Self::option_str(self.chordal))?;
        if !self.ell_chordal.is_empty() {
            write!(f, "ell-chordal:")?;
            for (ell, v) in &self.ell_chordal {
                write!(f, " {ell}={v}")?;
            }
            writeln!(f)?;
        }
        writeln!(
            f,
            "supersolvable: {}",
            Self::option_str(self.supersolvable)
        )?;
        if let Some(c) = &self.mchain {
            writeln!(f, "mchain: {c}")?;
        }
        for r in self.equivalence.values() {
            writeln!(f, "equivalence {r}")?;
        }
        Ok(())
    }
}

/// Runs every applicable analysis on an entry. A binary matroid reported
/// supersolvable but not chordal would contradict the supporting theory,
/// so that combination is rejected as an internal error.
pub fn analyze(entry: &CatalogEntry) -> Result<AnalysisReport> {
    let m = entry.matroid.as_matroid();
    let simple = m.is_simple();
    let mut report = AnalysisReport {
        id: entry.id.clone(),
        n: m.ground_size(),
        rank: m.rank(),
        simple,
        binary: m.is_binary(),
        circuit_count: m.circuits()?.len(),
        chordal: None,
        ell_chordal: BTreeMap::new(),
        supersolvable: None,
        mchain: None,
        equivalence: BTreeMap::new(),
    };
    if !simple {
        return Ok(report);
    }
    report.chordal = Some(chordality::is_chordal(m)?);
    for ell in REPORT_CHORDAL_ELLS {
        report
            .ell_chordal
            .insert(ell, chordality::is_ell_chordal(m, ell)?);
    }
    if let Some(b) = entry.matroid.as_binary() {
        report.mchain = supersolvable::find_mchain(b)?;
        report.supersolvable = Some(report.mchain.is_some());
        for ell in REPORT_ELLS {
            report
                .equivalence
                .insert(ell, chordality::equivalence_report(b, ell)?);
        }
        if report.supersolvable == Some(true) && report.chordal != Some(true) {
            return Err(Error::PropertyViolation(format!(
                "{}: supersolvable binary matroid must be chordal",
                entry.id
            )));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{cocycle_matroid, cycle_matroid};

    #[test]
    fn fano_builder() {
        let m = fano();
        assert_eq!(m.ground_size(), 7);
        assert_eq!(m.rank(), 3);
        assert_eq!(m.nontrivial_lines().unwrap().len(), 7);
    }

    #[test]
    fn fan_graph_reproduces_published_labeling() {
        let g = fan_graph(4);
        assert_eq!(g.n_vertices(), 5);
        assert_eq!(
            g.edges(),
            &[(0, 1), (1, 2), (0, 2), (2, 3), (0, 3), (3, 4), (0, 4)]
        );
        assert_eq!(g.vertex_name(0), "v1");
    }

    #[test]
    fn u24_builder() {
        let m = u24();
        assert_eq!(m.ground_size(), 4);
        assert_eq!(m.circuits().unwrap().len(), 4);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn enumeration_small_counts() {
        // Rank 2 on up to 3 elements: subsets of {01,10,11} with a basis.
        let entries: Vec<_> = enumerate_simple_binary(2, 3).unwrap().collect();
        assert_eq!(entries.len(), 5); // {1}, and 3 pairs + 1 triple of rank 2
        let line = entries
            .iter()
            .find(|e| e.id == "r2:1.2.3")
            .expect("three-point line present");
        assert_eq!(line.matroid.as_matroid().rank(), 2);
    }

    #[test]
    fn enumeration_contains_fano() {
        let found = enumerate_simple_binary(3, 7)
            .unwrap()
            .any(|e| e.id == "r3:1.2.3.4.5.6.7");
        assert!(found);
    }

    #[test]
    fn enumeration_ids_are_stable() {
        let a: Vec<String> = enumerate_simple_binary(3, 5)
            .unwrap()
            .map(|e| e.id)
            .collect();
        let b: Vec<String> = enumerate_simple_binary(3, 5)
            .unwrap()
            .map(|e| e.id)
            .collect();
        assert_eq!(a, b);
    }

    #[test]
    fn enumeration_respects_caps() {
        assert!(matches!(
            enumerate_simple_binary(5, 9),
            Err(Error::EnumerationCapExceeded { .. })
        ));
        assert!(matches!(
            enumerate_simple_binary(4, 13),
            Err(Error::EnumerationCapExceeded { .. })
        ));
    }

    #[test]
    fn analyze_fano() {
        let report = analyze(&CatalogEntry::from_binary("fano", fano())).unwrap();
        assert_eq!(report.supersolvable, Some(true));
        assert_eq!(report.chordal, Some(true));
        assert_eq!(report.circuit_count, 14);
        assert!(report.equivalence[&2].consistent());
    }

    #[test]
    fn analyze_cocycle_k33() {
        let m = cocycle_matroid(&complete_bipartite(3, 3)).unwrap();
        let report = analyze(&CatalogEntry::from_binary("cocycle(K3,3)", m)).unwrap();
        assert_eq!(report.chordal, Some(true));
        assert_eq!(report.supersolvable, Some(false));
        assert!(report.mchain.is_none());
    }

    #[test]
    fn analyze_c5() {
        let m = cycle_matroid(&cycle_graph(5)).unwrap();
        let report = analyze(&CatalogEntry::from_binary("cycle(C5)", m)).unwrap();
        assert_eq!(report.chordal, Some(false));
        assert_eq!(report.supersolvable, Some(false));
    }

    #[test]
    fn analyze_u24() {
        let report = analyze(&CatalogEntry::from_general("u24", u24())).unwrap();
        assert!(!report.binary);
        // No circuit has four elements, so 4-chordality is vacuous; the
        // 3-circuits themselves are chordless.
        assert_eq!(report.chordal, Some(true));
        assert!(!report.ell_chordal[&3]);
        assert_eq!(report.supersolvable, None);
        assert!(report.equivalence.is_empty());
    }

    #[test]
    fn analyze_non_simple_reports_basics_only() {
        let loopy = BinaryMatroid::from_matrix(
            crate::gf2::Gf2Matrix::from_row_bits(vec![0b01], 2).unwrap(),
        );
        let report = analyze(&CatalogEntry::from_binary("loopy", loopy)).unwrap();
        assert!(!report.simple);
        assert_eq!(report.chordal, None);
        assert_eq!(report.supersolvable, None);
    }

    #[test]
    fn reports_are_deterministic() {
        let run = || {
            analyze(&CatalogEntry::from_binary("fano", fano()))
                .unwrap()
                .to_kv()
        };
        assert_eq!(run(), run());
    }

    #[test]
    fn report_rendering() {
        let report = analyze(&CatalogEntry::from_binary("fano", fano())).unwrap();
        let text = report.to_string();
        assert!(text.contains("supersolvable: true"));
        let kv = report.to_kv();
        assert!(kv.contains("supersolvable=true"));
        assert!(kv.contains("eq2_delta_generated=true"));
    }
}
