//! Dense linear algebra over GF(2) on bit-packed vectors and matrices.
//!
//! Both dimensions are capped at 64 so that a row (and a column) fits a
//! single machine word. Row reduction always pivots on the leftmost
//! available column, so echelon forms, ranks and kernel bases are
//! deterministic and reproducible across runs.

use crate::elements::ElementSet;
use crate::error::{Error, Result};
use std::fmt;

/// Hard cap on rows and columns: one 64-bit word per vector.
pub const MAX_DIM: usize = 64;

/// A vector over GF(2) of fixed length at most [`MAX_DIM`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gf2Vector {
    bits: u64,
    len: usize,
}

impl Gf2Vector {
    pub fn zero(len: usize) -> Result<Self> {
        if len > MAX_DIM {
            return Err(Error::DimensionTooLarge {
                got: len,
                max: MAX_DIM,
            });
        }
        Ok(Gf2Vector { bits: 0, len })
    }

    /// Wraps a bit pattern; bits at positions >= len must be clear.
    pub fn from_bits(bits: u64, len: usize) -> Result<Self> {
        let mut v = Self::zero(len)?;
        debug_assert!(len == 64 || bits >> len == 0, "stray bits beyond length");
        v.bits = bits;
        Ok(v)
    }

    pub fn from_support<I: IntoIterator<Item = usize>>(support: I, len: usize) -> Result<Self> {
        let mut v = Self::zero(len)?;
        for i in support {
            assert!(i < len, "support index {i} out of range (len={len})");
            v.bits |= 1u64 << i;
        }
        Ok(v)
    }

    pub const fn len(&self) -> usize {
        self.len
    }

    pub const fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub const fn bits(&self) -> u64 {
        self.bits
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        (self.bits >> i) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len);
        if value {
            self.bits |= 1u64 << i;
        } else {
            self.bits &= !(1u64 << i);
        }
    }

    pub const fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Positions of the 1 entries, as a set.
    pub const fn support(&self) -> ElementSet {
        ElementSet::from_bits(self.bits)
    }

    pub fn xor_assign(&mut self, other: &Gf2Vector) {
        assert_eq!(self.len, other.len, "length mismatch");
        self.bits ^= other.bits;
    }

    /// GF(2) dot product.
    pub fn dot(&self, other: &Gf2Vector) -> bool {
        assert_eq!(self.len, other.len, "length mismatch");
        (self.bits & other.bits).count_ones() & 1 == 1
    }
}

impl fmt::Display for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A rectangular matrix over GF(2); rows are bit-packed words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: Vec<u64>,
    n_cols: usize,
}

impl Gf2Matrix {
    /// A matrix with no rows (rank 0) over `n_cols` columns.
    pub fn empty(n_cols: usize) -> Result<Self> {
        if n_cols > MAX_DIM {
            return Err(Error::DimensionTooLarge {
                got: n_cols,
                max: MAX_DIM,
            });
        }
        Ok(Gf2Matrix {
            rows: Vec::new(),
            n_cols,
        })
    }

    pub fn from_rows(rows: Vec<Gf2Vector>) -> Result<Self> {
        let n_cols = rows.first().map_or(0, Gf2Vector::len);
        for r in &rows {
            if r.len() != n_cols {
                return Err(Error::Parse("matrix rows have unequal lengths".into()));
            }
        }
        Self::from_row_bits(rows.iter().map(|r| r.bits()).collect(), n_cols)
    }

    pub fn from_row_bits(rows: Vec<u64>, n_cols: usize) -> Result<Self> {
        if n_cols > MAX_DIM {
            return Err(Error::DimensionTooLarge {
                got: n_cols,
                max: MAX_DIM,
            });
        }
        if rows.len() > MAX_DIM {
            return Err(Error::DimensionTooLarge {
                got: rows.len(),
                max: MAX_DIM,
            });
        }
        if n_cols < 64 {
            for &r in &rows {
                if r >> n_cols != 0 {
                    return Err(Error::Parse("row has bits beyond the column count".into()));
                }
            }
        }
        Ok(Gf2Matrix { rows, n_cols })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_row_bits((0..n).map(|i| 1u64 << i).collect(), n)
    }

    /// Parses the `.gf2` format: `#` comment lines, then one row of `0`/`1`
    /// characters per line, all of equal length. Columns are elements
    /// `1..n` left to right.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows: Vec<u64> = Vec::new();
        let mut n_cols: Option<usize> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let width = line.chars().count();
            match n_cols {
                None => {
                    if width > MAX_DIM {
                        return Err(Error::DimensionTooLarge {
                            got: width,
                            max: MAX_DIM,
                        });
                    }
                    n_cols = Some(width);
                }
                Some(w) if w != width => {
                    return Err(Error::Parse(format!(
                        "line {}: expected {} columns, found {}",
                        lineno + 1,
                        w,
                        width
                    )));
                }
                _ => {}
            }
            let mut bits = 0u64;
            for (i, c) in line.chars().enumerate() {
                match c {
                    '1' => bits |= 1u64 << i,
                    '0' => {}
                    other => {
                        return Err(Error::Parse(format!(
                            "line {}: unexpected character {:?}",
                            lineno + 1,
                            other
                        )));
                    }
                }
            }
            rows.push(bits);
        }
        match n_cols {
            None => Err(Error::Parse("matrix file contains no rows".into())),
            Some(w) => Self::from_row_bits(rows, w),
        }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub const fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn row(&self, i: usize) -> Gf2Vector {
        Gf2Vector {
            bits: self.rows[i],
            len: self.n_cols,
        }
    }

    pub fn row_bits(&self) -> &[u64] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> bool {
        assert!(j < self.n_cols);
        (self.rows[i] >> j) & 1 == 1
    }

    /// Column `j` as a bit pattern over row indices.
    pub fn column_bits(&self, j: usize) -> u64 {
        assert!(j < self.n_cols);
        let mut bits = 0u64;
        for (i, &row) in self.rows.iter().enumerate() {
            bits |= ((row >> j) & 1) << i;
        }
        bits
    }

    /// Column `j` as a vector of length `n_rows`.
    pub fn column(&self, j: usize) -> Gf2Vector {
        Gf2Vector {
            bits: self.column_bits(j),
            len: self.n_rows(),
        }
    }

    /// Matrix-vector product `m * v` (v indexed by columns).
    pub fn mul_vec(&self, v: &Gf2Vector) -> Gf2Vector {
        assert_eq!(v.len(), self.n_cols, "length mismatch");
        let mut out = 0u64;
        for (i, &row) in self.rows.iter().enumerate() {
            out |= u64::from((row & v.bits()).count_ones() & 1 == 1) << i;
        }
        Gf2Vector {
            bits: out,
            len: self.n_rows(),
        }
    }
}

impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n_rows() {
            writeln!(f, "{}", self.row(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Matrix({}x{})", self.n_rows(), self.n_cols)
    }
}

/// Reduced row echelon form with leftmost pivoting.
/// Returns the nonzero reduced rows and their pivot columns (ascending).
fn rref(rows: &[u64], n_cols: usize) -> (Vec<u64>, Vec<usize>) {
    let mut work: Vec<u64> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut next = 0usize;
    for col in 0..n_cols {
        let Some(found) = (next..work.len()).find(|&i| (work[i] >> col) & 1 == 1) else {
            continue;
        };
        work.swap(next, found);
        let pivot_row = work[next];
        for (i, row) in work.iter_mut().enumerate() {
            if i != next && (*row >> col) & 1 == 1 {
                *row ^= pivot_row;
            }
        }
        pivots.push(col);
        next += 1;
    }
    work.truncate(next);
    (work, pivots)
}

/// GF(2) row rank.
pub fn rank(m: &Gf2Matrix) -> usize {
    rref(&m.rows, m.n_cols).1.len()
}

/// A basis of the right kernel `{ v : m*v = 0 }`, ordered by ascending
/// free column. Its size is `n_cols - rank(m)`.
pub fn null_space(m: &Gf2Matrix) -> Vec<Gf2Vector> {
    let (rows, pivots) = rref(&m.rows, m.n_cols);
    let pivot_mask: u64 = pivots.iter().fold(0, |acc, &c| acc | (1u64 << c));
    let mut basis = Vec::with_capacity(m.n_cols - pivots.len());
    for free in 0..m.n_cols {
        if (pivot_mask >> free) & 1 == 1 {
            continue;
        }
        let mut bits = 1u64 << free;
        for (row, &pc) in rows.iter().zip(&pivots) {
            if (row >> free) & 1 == 1 {
                bits |= 1u64 << pc;
            }
        }
        basis.push(Gf2Vector {
            bits,
            len: m.n_cols,
        });
    }
    basis
}

/// Incrementally reduced basis for span membership tests over row-index
/// bit patterns.
#[derive(Clone, Default)]
pub(crate) struct SpanBasis {
    rows: Vec<u64>,
}

impl SpanBasis {
    pub(crate) fn new() -> Self {
        SpanBasis::default()
    }

    /// Reduces `v` against the basis; the nonzero remainder (if any) is
    /// not inserted. Rows are kept sorted by their leading (lowest) bit,
    /// so one ascending pass clears every leading position.
    pub(crate) fn reduce(&self, mut v: u64) -> u64 {
        for &b in &self.rows {
            let lead = b & b.wrapping_neg();
            if v & lead != 0 {
                v ^= b;
            }
        }
        v
    }

    pub(crate) fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    /// Inserts `v` if independent; returns true when the rank grew.
    pub(crate) fn insert(&mut self, v: u64) -> bool {
        let r = self.reduce(v);
        if r == 0 {
            return false;
        }
        self.rows.push(r);
        self.rows.sort_unstable_by_key(|b| b.trailing_zeros());
        true
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// True iff column vector `v` lies in the GF(2) span of the columns of `m`
/// indexed by `cols`.
pub fn in_column_span(m: &Gf2Matrix, cols: ElementSet, v: &Gf2Vector) -> bool {
    assert_eq!(v.len(), m.n_rows(), "v must have one entry per matrix row");
    let mut basis = SpanBasis::new();
    for j in cols.iter() {
        basis.insert(m.column_bits(j));
    }
    basis.contains(v.bits())
}
