//! Partitions, skew shapes, hook lengths and the closed-form count of
//! semi-standard tableaux.
//!
//! Cells use matrix coordinates: `row` grows downward, `col` grows to the
//! right, both starting at 1.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("partition entries must be nonnegative, got {0}")]
    Negative(i64),
    #[error("partition is not weakly decreasing at position {index}: {prev} < {next}")]
    NotDecreasing { index: usize, prev: u32, next: u32 },
    #[error("partition entry {0} is too large")]
    EntryTooLarge(i64),
    #[error("inner partition {inner} is not contained in outer partition {outer}")]
    NotContained { outer: Partition, inner: Partition },
    #[error("cell ({row},{col}) is not in the diagram")]
    CellOutside { row: u32, col: u32 },
    #[error("cannot parse shape {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("hook formula produced a non-integral count (numerator {num}, denominator {den})")]
    InexactHookDivision { num: BigUint, den: BigUint },
}

/// Largest part accepted by the constructors. Shapes in this crate are
/// enumerated exhaustively, so anything near this bound is already hopeless.
pub const MAX_PART: u32 = 1 << 16;

/// A partition in canonical form: weakly decreasing, no trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: impl IntoIterator<Item = i64>) -> Result<Self, ShapeError> {
        let mut out = Vec::new();
        for p in parts {
            if p < 0 {
                return Err(ShapeError::Negative(p));
            }
            if p > MAX_PART as i64 {
                return Err(ShapeError::EntryTooLarge(p));
            }
            out.push(p as u32);
        }
        Self::from_parts(out)
    }

    pub fn from_parts(mut parts: Vec<u32>) -> Result<Self, ShapeError> {
        if let Some(&p) = parts.iter().find(|&&p| p > MAX_PART) {
            return Err(ShapeError::EntryTooLarge(p as i64));
        }
        for (index, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(ShapeError::NotDecreasing {
                    index: index + 1,
                    prev: w[0],
                    next: w[1],
                });
            }
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// ℓ(λ), the number of positive parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// |λ|
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (1-based), zero beyond the length.
    pub fn part(&self, row: u32) -> u32 {
        if row == 0 {
            return 0;
        }
        self.0.get(row as usize - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.0.iter().take_while(|&&p| p >= c).count() as u32)
            .collect();
        Partition(parts)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// Every partition ν with ν ⊆ self, in lexicographic order of parts.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(outer: &[u32], bound: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if prefix.len() == outer.len() {
                let mut p = prefix.clone();
                while p.last() == Some(&0) {
                    p.pop();
                }
                out.push(Partition(p));
                return;
            }
            let cap = outer[prefix.len()].min(bound);
            for v in 0..=cap {
                prefix.push(v);
                go(outer, v, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.0, u32::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// All partitions of `size`, parts in decreasing lexicographic order.
pub fn partitions_of(size: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(size, size, &mut Vec::new(), &mut out);
    out
}

/// All partitions with at most `max_size` boxes, by size then as in [`partitions_of`].
pub fn partitions_up_to(max_size: u32) -> Vec<Partition> {
    (0..=max_size).flat_map(partitions_of).collect()
}

/// A box of a diagram, 1-based matrix coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub const fn new(row: u32, col: u32) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The skew diagram λ/μ. A straight shape is the case μ = ∅.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
    cells: Vec<Cell>,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, ShapeError> {
        if !outer.contains(&inner) {
            return Err(ShapeError::NotContained { outer, inner });
        }
        let mut cells = Vec::with_capacity((outer.size() - inner.size()) as usize);
        for row in 1..=outer.len() as u32 {
            for col in inner.part(row) + 1..=outer.part(row) {
                cells.push(Cell { row, col });
            }
        }
        Ok(SkewShape { outer, inner, cells })
    }

    pub fn straight(lambda: Partition) -> Self {
        SkewShape::new(lambda, Partition::empty()).expect("∅ is contained in every partition")
    }

    pub fn empty() -> Self {
        SkewShape::straight(Partition::empty())
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// |θ| = |λ| − |μ|
    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Cells sorted by `(row, col)`.
    pub fn cells_row_major(&self) -> &[Cell] {
        &self.cells
    }

    /// Cells sorted by `(col, row)`.
    pub fn cells_column_major(&self) -> Vec<Cell> {
        let mut cells = self.cells.clone();
        cells.sort_by_key(|c| (c.col, c.row));
        cells
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col > self.inner.part(cell.row) && cell.col <= self.outer.part(cell.row)
    }

    /// Position of `cell` within [`Self::cells_row_major`].
    pub fn index_of(&self, cell: Cell) -> Option<usize> {
        self.cells.binary_search(&cell).ok()
    }

    /// Rows `(first, last)` occupied in column `col`, if any. Columns of a
    /// skew shape are contiguous.
    pub fn column_rows(&self, col: u32) -> Option<(u32, u32)> {
        if col == 0 {
            return None;
        }
        let top = self.inner.conjugate().part(col) + 1;
        let bottom = self.outer.conjugate().part(col);
        (top <= bottom).then_some((top, bottom))
    }

    pub fn column_height(&self, col: u32) -> u32 {
        self.column_rows(col).map_or(0, |(t, b)| b - t + 1)
    }

    pub fn max_column_height(&self) -> u32 {
        let inner_c = self.inner.conjugate();
        self.outer
            .conjugate()
            .parts()
            .iter()
            .enumerate()
            .map(|(k, &h)| h - inner_c.part(k as u32 + 1))
            .max()
            .unwrap_or(0)
    }

    /// Whether set-valued tableaux over `[n]` exist: no column taller than `n`.
    pub fn is_feasible(&self, n: u32) -> bool {
        self.max_column_height() <= n
    }

    /// The shape with `cell` added, if the result is still a skew shape with
    /// the same inner partition.
    pub fn with_cell_added(&self, cell: Cell) -> Result<SkewShape, ShapeError> {
        let mut parts = self.outer.parts().to_vec();
        let row = cell.row as usize;
        if row == 0 || row > parts.len() + 1 || cell.col != self.outer.part(cell.row) + 1 {
            return Err(ShapeError::CellOutside { row: cell.row, col: cell.col });
        }
        if row == parts.len() + 1 {
            parts.push(0);
        }
        parts[row - 1] += 1;
        let outer = Partition::from_parts(parts)?;
        let shape = SkewShape::new(outer, self.inner.clone())?;
        if !shape.contains(cell) {
            return Err(ShapeError::CellOutside { row: cell.row, col: cell.col });
        }
        Ok(shape)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

fn parse_parts(text: &str, whole: &str) -> Result<Partition, ShapeError> {
    let err = |reason: String| ShapeError::Parse { text: whole.to_string(), reason };
    if text.is_empty() || text == "()" {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for tok in text.split(',') {
        if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit() || b == b'-') {
            return Err(err(format!("bad part {tok:?}")));
        }
        let v: i64 = tok.parse().map_err(|_| err(format!("bad part {tok:?}")))?;
        parts.push(v);
    }
    Partition::new(parts)
}

impl FromStr for SkewShape {
    type Err = ShapeError;

    /// `"5,3,3,2/3,1,1"`, `"2,1"`, `""` or `"()"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.chars().any(char::is_whitespace) {
            return Err(ShapeError::Parse { text: s.to_string(), reason: "whitespace".into() });
        }
        let (outer, inner) = match s.split_once('/') {
            Some((o, i)) => (o, i),
            None => (s, ""),
        };
        SkewShape::new(parse_parts(outer, s)?, parse_parts(inner, s)?)
    }
}

impl FromStr for Partition {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.chars().any(char::is_whitespace) || s.contains('/') {
            return Err(ShapeError::Parse { text: s.to_string(), reason: "not a partition".into() });
        }
        parse_parts(s, s)
    }
}

/// Arm + leg + 1.
pub fn hook_length(lambda: &Partition, cell: Cell) -> Result<u32, ShapeError> {
    if !lambda.contains_cell(cell) {
        return Err(ShapeError::CellOutside { row: cell.row, col: cell.col });
    }
    let arm = lambda.part(cell.row) - cell.col;
    let leg = lambda.conjugate().part(cell.col) - cell.row;
    Ok(arm + leg + 1)
}

/// |SST(λ, n)| as the product of `(n + j − i) / h(i,j)` over the cells of λ.
pub fn sst_count_hook(lambda: &Partition, n: u32) -> Result<BigUint, ShapeError> {
    if lambda.len() as u32 > n {
        return Ok(BigUint::zero());
    }
    let conj = lambda.conjugate();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, &len) in lambda.parts().iter().enumerate() {
        let i = i as u32 + 1;
        for j in 1..=len {
            // ℓ(λ) ≤ n makes n + j − i ≥ 1 everywhere.
            num *= n + j - i;
            den *= (len - j) + (conj.part(j) - i) + 1;
        }
    }
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(ShapeError::InexactHookDivision { num, den });
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    fn skew(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn cells(v: &[(u32, u32)]) -> Vec<Cell> {
        v.iter().map(|&(r, c)| Cell::new(r, c)).collect()
    }

    #[test]
    fn partition_construction() {
        let l = p(&[2, 1]);
        assert_eq!(l.size(), 3);
        assert_eq!(l.len(), 2);
        assert_eq!(p(&[3, 3, 0, 0]), p(&[3, 3]));
        assert!(matches!(Partition::new([1, 2]), Err(ShapeError::NotDecreasing { .. })));
        assert!(matches!(Partition::new([2, -1]), Err(ShapeError::Negative(-1))));
        assert!(Partition::new([2, 0, 1]).is_err());
    }

    #[test]
    fn skew_construction() {
        let theta = SkewShape::new(p(&[5, 3, 2, 1]), p(&[3, 2])).unwrap();
        assert_eq!(theta.size(), 6);
        let mut expected = cells(&[(3, 1), (4, 1), (3, 2), (2, 3), (1, 4), (1, 5)]);
        expected.sort();
        assert_eq!(theta.cells_row_major(), &expected[..]);

        let straight = SkewShape::new(p(&[2, 1]), Partition::empty()).unwrap();
        assert_eq!(straight.size(), 3);
        assert!(SkewShape::new(p(&[2, 2]), p(&[3])).is_err());
    }

    #[test]
    fn reading_orders() {
        assert_eq!(skew("2,1").cells_row_major(), &cells(&[(1, 1), (1, 2), (2, 1)])[..]);
        assert_eq!(
            skew("5,3,2,1/3,2").cells_row_major(),
            &cells(&[(1, 4), (1, 5), (2, 3), (3, 1), (3, 2), (4, 1)])[..]
        );
        assert!(skew("()/()").cells_row_major().is_empty());

        assert_eq!(skew("2,1").cells_column_major(), cells(&[(1, 1), (2, 1), (1, 2)]));
        assert_eq!(
            skew("5,3,3,2/3,1,1").cells_column_major(),
            cells(&[(4, 1), (2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (1, 4), (1, 5)])
        );
        assert_eq!(skew("2,1/2").cells_column_major(), cells(&[(2, 1)]));
    }

    #[test]
    fn column_heights() {
        assert_eq!(skew("5,3,3,2/3,1,1").column_height(2), 3);
        assert_eq!(skew("2,1").column_height(1), 2);
        assert_eq!(skew("2,1").column_height(3), 0);
        assert_eq!(skew("5,3,3,2/3,1,1").max_column_height(), 3);
        assert!(!skew("2,1").is_feasible(1));
        assert!(skew("").is_feasible(0));
    }

    #[test]
    fn hooks() {
        let l = p(&[2, 1]);
        assert_eq!(hook_length(&l, Cell::new(1, 1)).unwrap(), 3);
        assert_eq!(hook_length(&l, Cell::new(2, 1)).unwrap(), 1);
        assert_eq!(hook_length(&p(&[1]), Cell::new(1, 1)).unwrap(), 1);
        assert!(hook_length(&l, Cell::new(2, 2)).is_err());
    }

    #[test]
    fn hook_symmetric_under_conjugation() {
        for lambda in partitions_up_to(7) {
            let conj = lambda.conjugate();
            for &c in SkewShape::straight(lambda.clone()).cells_row_major() {
                assert_eq!(
                    hook_length(&lambda, c).unwrap(),
                    hook_length(&conj, Cell::new(c.col, c.row)).unwrap()
                );
            }
        }
    }

    #[test]
    fn hook_count() {
        assert_eq!(sst_count_hook(&p(&[2, 1]), 3).unwrap(), BigUint::from(8u32));
        assert_eq!(sst_count_hook(&p(&[2, 1]), 2).unwrap(), BigUint::from(2u32));
        assert_eq!(sst_count_hook(&p(&[1]), 17).unwrap(), BigUint::from(17u32));
        assert_eq!(sst_count_hook(&p(&[2, 1]), 1).unwrap(), BigUint::zero());
        assert_eq!(sst_count_hook(&Partition::empty(), 0).unwrap(), BigUint::one());
    }

    #[test]
    fn parse_and_display() {
        for text in ["5,3,3,2/3,1,1", "2,1", "()", "1"] {
            assert_eq!(skew(text).to_string(), text);
        }
        assert_eq!(skew(""), SkewShape::empty());
        assert_eq!(skew("3,3,0/1,0"), skew("3,3/1"));
        assert_eq!(skew("2,1/"), skew("2,1"));
        for bad in ["1,2", "2, 1", "a", "2,,1", "-1", "2/3", "1/1/1", ",", "+1"] {
            assert!(bad.parse::<SkewShape>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn generation() {
        let counts: Vec<usize> = (0..=7).map(|k| partitions_of(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        let subs = p(&[2, 1]).subpartitions();
        assert_eq!(subs.len(), 5);
        assert!(subs.iter().all(|m| p(&[2, 1]).contains(m)));
    }

    #[test]
    fn add_cell() {
        let theta = skew("3,2,1/2,1");
        assert_eq!(theta.with_cell_added(Cell::new(3, 2)).unwrap(), skew("3,2,2/2,1"));
        assert_eq!(skew("1,1/1,1").with_cell_added(Cell::new(3, 1)).unwrap(), skew("1,1,1/1,1"));
        assert!(theta.with_cell_added(Cell::new(3, 3)).is_err());
        assert!(skew("1").with_cell_added(Cell::new(2, 2)).is_err());
    }
}
