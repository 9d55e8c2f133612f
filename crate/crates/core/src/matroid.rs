//! Matroids on the ground set `{1,...,n}`.
//!
//! [`BinaryMatroid`] wraps a GF(2) representation matrix; every rank and
//! closure query reduces to column arithmetic. [`GeneralMatroid`] is a
//! circuit-list fallback for small non-binary examples and answers the
//! same queries by brute force over its circuits.

use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::gf2::{self, Gf2Matrix, SpanBasis};
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// Cap on the cycle-space dimension for circuit enumeration (the sweep
/// visits `2^(n-r) - 1` vectors).
pub const CIRCUIT_NULLITY_CAP: usize = 24;

/// Cap on the rank for full flat-lattice enumeration.
pub const FLATS_RANK_CAP: usize = 10;

/// Query surface shared by binary and circuit-list matroids.
pub trait Matroid {
    fn ground_size(&self) -> usize;
    fn rank(&self) -> usize;
    fn rank_of(&self, x: ElementSet) -> usize;
    fn closure_of(&self, x: ElementSet) -> ElementSet;
    fn circuits(&self) -> Result<&CircuitFamily>;
    /// Simple means every circuit has at least three elements.
    fn is_simple(&self) -> bool;
    /// Whether the matroid is known to be binary (GF(2)-representable).
    fn is_binary(&self) -> bool;

    fn ground_set(&self) -> ElementSet {
        ElementSet::full(self.ground_size())
    }

    fn is_flat(&self, x: ElementSet) -> bool {
        self.closure_of(x) == x
    }

    fn is_circuit(&self, c: ElementSet) -> Result<bool> {
        Ok(self.circuits()?.contains(c))
    }
}

/// An antichain of nonempty element subsets, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitFamily {
    circuits: Vec<ElementSet>,
}

impl CircuitFamily {
    pub fn empty() -> Self {
        CircuitFamily {
            circuits: Vec::new(),
        }
    }

    /// Validates that the sets are nonempty and form an antichain.
    pub fn new(mut sets: Vec<ElementSet>) -> Result<Self> {
        sets.sort();
        sets.dedup();
        for (i, &a) in sets.iter().enumerate() {
            if a.is_empty() {
                return Err(Error::InvalidCircuitAxioms {
                    c1: a,
                    c2: a,
                    reason: "circuits must be nonempty",
                });
            }
            for &b in &sets[i + 1..] {
                if a.is_subset_of(b) || b.is_subset_of(a) {
                    return Err(Error::InvalidCircuitAxioms {
                        c1: a,
                        c2: b,
                        reason: "not an antichain",
                    });
                }
            }
        }
        Ok(CircuitFamily { circuits: sets })
    }

    /// Wraps sets already known to be a sorted antichain.
    pub(crate) fn from_minimal(sets: Vec<ElementSet>) -> Self {
        debug_assert!(sets.windows(2).all(|w| w[0] < w[1]));
        CircuitFamily { circuits: sets }
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementSet> + '_ {
        self.circuits.iter().copied()
    }

    pub fn as_slice(&self) -> &[ElementSet] {
        &self.circuits
    }

    pub fn contains(&self, c: ElementSet) -> bool {
        self.circuits.binary_search(&c).is_ok()
    }

    /// The subfamily of circuits with at most `k` elements.
    pub fn at_most(&self, k: usize) -> CircuitFamily {
        CircuitFamily {
            circuits: self.iter().filter(|c| c.len() <= k).collect(),
        }
    }

    pub fn max_circuit_size(&self) -> usize {
        self.iter().map(|c| c.len()).max().unwrap_or(0)
    }
}

impl fmt::Display for CircuitFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// A closed set together with its rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flat {
    pub elements: ElementSet,
    pub rank: usize,
}

impl fmt::Display for Flat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.elements)
    }
}

/// All flats, grouped by rank: `level(k)` lists the rank-`k` flats in
/// lexicographic order.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    levels: Vec<Vec<Flat>>,
}

impl FlatLattice {
    pub fn rank(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, k: usize) -> &[Flat] {
        &self.levels[k]
    }

    pub fn levels(&self) -> &[Vec<Flat>] {
        &self.levels
    }

    pub fn iter_all(&self) -> impl Iterator<Item = &Flat> {
        self.levels.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// The rank `r-1` flats; empty for a rank-0 matroid.
    pub fn hyperplanes(&self) -> &[Flat] {
        match self.rank() {
            0 => &[],
            r => &self.levels[r - 1],
        }
    }

    pub fn find(&self, x: ElementSet) -> Option<&Flat> {
        self.levels
            .iter()
            .flatten()
            .find(|f| f.elements == x)
    }
}

/// A binary matroid given by a GF(2) representation matrix; element `i`
/// (1-based label) is column `i-1`.
pub struct BinaryMatroid {
    matrix: Gf2Matrix,
    n: usize,
    rank: usize,
    circuits_cache: OnceLock<CircuitFamily>,
    flats_cache: OnceLock<FlatLattice>,
    // Lazily filled verdicts of "is this flat modular", keyed by the
    // flat's bit pattern.
    modular_memo: Mutex<HashMap<u64, bool>>,
}

impl BinaryMatroid {
    pub fn from_matrix(matrix: Gf2Matrix) -> Self {
        let n = matrix.n_cols();
        let rank = gf2::rank(&matrix);
        BinaryMatroid {
            matrix,
            n,
            rank,
            circuits_cache: OnceLock::new(),
            flats_cache: OnceLock::new(),
            modular_memo: Mutex::new(HashMap::new()),
        }
    }

    /// Builds from column vectors: `cols[j]` holds the bits of column `j`
    /// over `r` rows.
    pub fn from_columns(r: usize, cols: &[u64]) -> Result<Self> {
        if r > gf2::MAX_DIM {
            return Err(Error::DimensionTooLarge {
                got: r,
                max: gf2::MAX_DIM,
            });
        }
        let rows: Vec<u64> = (0..r)
            .map(|i| {
                cols.iter()
                    .enumerate()
                    .fold(0u64, |acc, (j, &c)| acc | (((c >> i) & 1) << j))
            })
            .collect();
        Ok(Self::from_matrix(Gf2Matrix::from_row_bits(rows, cols.len())?))
    }

    /// Parses the `.gf2` matrix format.
    pub fn parse_gf2(text: &str) -> Result<Self> {
        Ok(Self::from_matrix(Gf2Matrix::parse(text)?))
    }

    pub fn matrix(&self) -> &Gf2Matrix {
        &self.matrix
    }

    /// Column bit patterns, in element order.
    pub fn columns(&self) -> Vec<u64> {
        (0..self.n).map(|j| self.matrix.column_bits(j)).collect()
    }

    /// The closure of `x` as a flat (elements plus rank).
    pub fn closure(&self, x: ElementSet) -> Flat {
        let mut basis = SpanBasis::new();
        for j in x.iter() {
            basis.insert(self.matrix.column_bits(j));
        }
        let mut elements = x;
        for e in 0..self.n {
            if !x.contains(e) && basis.contains(self.matrix.column_bits(e)) {
                elements = elements.with(e);
            }
        }
        Flat {
            elements,
            rank: basis.rank(),
        }
    }

    /// The dual matroid: its representation is a basis of the orthogonal
    /// complement of the row space.
    pub fn dual(&self) -> BinaryMatroid {
        let rows: Vec<u64> = gf2::null_space(&self.matrix)
            .iter()
            .map(|v| v.bits())
            .collect();
        Self::from_matrix(Gf2Matrix::from_row_bits(rows, self.n).expect("within caps"))
    }

    /// The restriction to `x`, with columns re-indexed; the returned
    /// handle keeps the map back to original elements.
    pub fn restriction(&self, x: ElementSet) -> Restriction {
        let index_map: Vec<usize> = x.iter().collect();
        let rows: Vec<u64> = self
            .matrix
            .row_bits()
            .iter()
            .map(|&row| {
                index_map
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (new, &old)| acc | (((row >> old) & 1) << new))
            })
            .collect();
        let matrix = Gf2Matrix::from_row_bits(rows, index_map.len()).expect("within caps");
        Restriction {
            matroid: Self::from_matrix(matrix),
            index_map,
        }
    }

    /// All flats, grouped by rank. Level `k+1` is generated as
    /// `cl(F + e)` over the level-`k` flats, deduplicated.
    pub fn flats(&self) -> Result<&FlatLattice> {
        if self.rank > FLATS_RANK_CAP {
            return Err(Error::EnumerationCapExceeded {
                what: "flat lattice (rank)",
                size: self.rank,
                cap: FLATS_RANK_CAP,
            });
        }
        Ok(self.flats_cache.get_or_init(|| self.compute_flats()))
    }

    fn compute_flats(&self) -> FlatLattice {
        let mut levels: Vec<Vec<Flat>> = Vec::with_capacity(self.rank + 1);
        levels.push(vec![self.closure(ElementSet::empty())]);
        for k in 0..self.rank {
            let mut next: BTreeSet<ElementSet> = BTreeSet::new();
            for f in &levels[k] {
                for e in 0..self.n {
                    if !f.elements.contains(e) {
                        let c = self.closure(f.elements.with(e));
                        debug_assert_eq!(c.rank, k + 1);
                        next.insert(c.elements);
                    }
                }
            }
            levels.push(
                next.into_iter()
                    .map(|elements| Flat {
                        elements,
                        rank: k + 1,
                    })
                    .collect(),
            );
        }
        FlatLattice { levels }
    }

    /// Rank-2 flats with at least three elements. A binary matroid never
    /// has a line with more than three points.
    pub fn nontrivial_lines(&self) -> Result<Vec<Flat>> {
        let lattice = self.flats()?;
        if lattice.rank() < 2 {
            return Ok(Vec::new());
        }
        Ok(lattice
            .level(2)
            .iter()
            .filter(|f| f.elements.len() >= 3)
            .copied()
            .collect())
    }

    fn compute_circuits(&self) -> CircuitFamily {
        let basis = gf2::null_space(&self.matrix);
        let k = basis.len();
        let mut supports: Vec<u64> = Vec::with_capacity((1usize << k) - 1);
        let mut cur = 0u64;
        for i in 1u64..(1u64 << k) {
            cur ^= basis[i.trailing_zeros() as usize].bits();
            supports.push(cur);
        }
        supports.sort_unstable_by_key(|&s| (s.count_ones(), ElementSet::from_bits(s)));
        let mut minimal: Vec<ElementSet> = Vec::new();
        'sweep: for &s in &supports {
            for c in &minimal {
                if c.bits() & !s == 0 {
                    continue 'sweep;
                }
            }
            minimal.push(ElementSet::from_bits(s));
        }
        minimal.sort();
        CircuitFamily::from_minimal(minimal)
    }

    pub(crate) fn modular_memo_get(&self, flat: ElementSet) -> Option<bool> {
        self.modular_memo
            .lock()
            .expect("memo lock")
            .get(&flat.bits())
            .copied()
    }

    pub(crate) fn modular_memo_insert(&self, flat: ElementSet, verdict: bool) {
        self.modular_memo
            .lock()
            .expect("memo lock")
            .insert(flat.bits(), verdict);
    }
}

impl Matroid for BinaryMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn rank(&self) -> usize {
        self.rank
    }

    fn rank_of(&self, x: ElementSet) -> usize {
        let mut basis = SpanBasis::new();
        for j in x.iter() {
            basis.insert(self.matrix.column_bits(j));
        }
        basis.rank()
    }

    fn closure_of(&self, x: ElementSet) -> ElementSet {
        self.closure(x).elements
    }

    /// All circuits: the minimal supports of the cycle space, found by a
    /// full sweep over the `2^(n-r) - 1` nonzero kernel vectors.
    fn circuits(&self) -> Result<&CircuitFamily> {
        let nullity = self.n - self.rank;
        if nullity > CIRCUIT_NULLITY_CAP {
            return Err(Error::EnumerationCapExceeded {
                what: "circuit enumeration (cycle-space dimension)",
                size: nullity,
                cap: CIRCUIT_NULLITY_CAP,
            });
        }
        Ok(self.circuits_cache.get_or_init(|| self.compute_circuits()))
    }

    fn is_simple(&self) -> bool {
        let mut cols: Vec<u64> = self.columns();
        if cols.contains(&0) {
            return false;
        }
        cols.sort_unstable();
        cols.windows(2).all(|w| w[0] != w[1])
    }

    fn is_binary(&self) -> bool {
        true
    }
}

impl Clone for BinaryMatroid {
    fn clone(&self) -> Self {
        BinaryMatroid {
            matrix: self.matrix.clone(),
            n: self.n,
            rank: self.rank,
            circuits_cache: self.circuits_cache.clone(),
            flats_cache: self.flats_cache.clone(),
            modular_memo: Mutex::new(self.modular_memo.lock().expect("memo lock").clone()),
        }
    }
}

impl fmt::Debug for BinaryMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatroid(n={}, rank={})", self.n, self.rank)
    }
}

impl PartialEq for BinaryMatroid {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for BinaryMatroid {}

/// A restriction `M|X` with its element re-indexing retained: element `i`
/// of the restriction is element `index_map[i]` of the parent.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub matroid: BinaryMatroid,
    index_map: Vec<usize>,
}

impl Restriction {
    pub fn index_map(&self) -> &[usize] {
        &self.index_map
    }

    /// Maps a set of restricted elements back to parent elements.
    pub fn to_original(&self, x: ElementSet) -> ElementSet {
        ElementSet::from_indices(x.iter().map(|i| self.index_map[i]))
    }

    /// Maps a set of parent elements into the restriction, if contained.
    pub fn to_restricted(&self, x: ElementSet) -> Option<ElementSet> {
        let mut out = ElementSet::empty();
        for e in x.iter() {
            match self.index_map.binary_search(&e) {
                Ok(i) => out = out.with(i),
                Err(_) => return None,
            }
        }
        Some(out)
    }
}

/// A matroid given by an explicit circuit list, validated against the
/// circuit axioms (antichain plus weak elimination) at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralMatroid {
    n: usize,
    rank: usize,
    circuits: CircuitFamily,
}

impl GeneralMatroid {
    pub fn from_circuits(n: usize, sets: Vec<ElementSet>) -> Result<Self> {
        if n > gf2::MAX_DIM {
            return Err(Error::DimensionTooLarge {
                got: n,
                max: gf2::MAX_DIM,
            });
        }
        let ground = ElementSet::full(n);
        for &c in &sets {
            if !c.is_subset_of(ground) {
                return Err(Error::Parse(format!(
                    "circuit {c} has elements outside the ground set of size {n}"
                )));
            }
        }
        let circuits = CircuitFamily::new(sets)?;
        // Weak circuit elimination, by brute force over circuit pairs.
        for (i, c1) in circuits.iter().enumerate() {
            for c2 in circuits.iter().skip(i + 1) {
                for e in c1.intersection(c2).iter() {
                    let inside = c1.union(c2).without(e);
                    if !circuits.iter().any(|c3| c3.is_subset_of(inside)) {
                        return Err(Error::InvalidCircuitAxioms {
                            c1,
                            c2,
                            reason: "weak circuit elimination fails",
                        });
                    }
                }
            }
        }
        let mut m = GeneralMatroid {
            n,
            rank: 0,
            circuits,
        };
        m.rank = m.rank_of(ground);
        Ok(m)
    }

    /// Parses the `.circ` format: first data line `n`, then one circuit
    /// per line as space-separated 1-based element labels. `#` comment
    /// lines are allowed.
    pub fn parse_circ(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut sets: Vec<ElementSet> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if n.is_none() {
                let parsed = line.parse::<usize>().map_err(|_| {
                    Error::Parse(format!(
                        "line {}: expected the ground-set size, found {:?}",
                        lineno + 1,
                        line
                    ))
                })?;
                if parsed > gf2::MAX_DIM {
                    return Err(Error::DimensionTooLarge {
                        got: parsed,
                        max: gf2::MAX_DIM,
                    });
                }
                n = Some(parsed);
                continue;
            }
            let size = n.unwrap();
            let mut set = ElementSet::empty();
            for tok in line.split_whitespace() {
                let label = tok.parse::<usize>().map_err(|_| {
                    Error::Parse(format!("line {}: bad element {:?}", lineno + 1, tok))
                })?;
                if label < 1 || label > size {
                    return Err(Error::Parse(format!(
                        "line {}: element {} outside 1..={}",
                        lineno + 1,
                        label,
                        size
                    )));
                }
                if set.contains(label - 1) {
                    return Err(Error::Parse(format!(
                        "line {}: repeated element {}",
                        lineno + 1,
                        label
                    )));
                }
                set = set.with(label - 1);
            }
            sets.push(set);
        }
        match n {
            None => Err(Error::Parse("circuit file is missing the ground-set size".into())),
            Some(size) => Self::from_circuits(size, sets),
        }
    }
}

impl Matroid for GeneralMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn rank(&self) -> usize {
        self.rank
    }

    /// Greedy maximal independent subset; valid because the circuit
    /// axioms were checked at construction.
    fn rank_of(&self, x: ElementSet) -> usize {
        let mut indep = ElementSet::empty();
        for e in x.iter() {
            let cand = indep.with(e);
            if !self.circuits.iter().any(|c| c.is_subset_of(cand)) {
                indep = cand;
            }
        }
        indep.len()
    }

    /// `cl(X) = X + { x : some circuit C has C \ X = {x} }`. One
    /// application suffices for a valid matroid.
    fn closure_of(&self, x: ElementSet) -> ElementSet {
        let mut out = x;
        for c in self.circuits.iter() {
            let rest = c.difference(x);
            if rest.len() == 1 {
                out = out.union(rest);
            }
        }
        debug_assert_eq!(
            out,
            {
                let mut again = out;
                for c in self.circuits.iter() {
                    let rest = c.difference(out);
                    if rest.len() == 1 {
                        again = again.union(rest);
                    }
                }
                again
            },
            "closure must be idempotent"
        );
        out
    }

    fn circuits(&self) -> Result<&CircuitFamily> {
        Ok(&self.circuits)
    }

    fn is_simple(&self) -> bool {
        self.circuits.iter().all(|c| c.len() >= 3)
    }

    fn is_binary(&self) -> bool {
        false
    }
}
