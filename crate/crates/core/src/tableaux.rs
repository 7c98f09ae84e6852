//! Set-valued tableaux: validation, enumeration, counting, weights and
//! serialization.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::shapes::{Cell, Partition, ShapeError, SkewShape};

/// Letters are stored as bits of a `u64`.
pub const MAX_ALPHABET: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("alphabet size {0} exceeds the supported maximum of {MAX_ALPHABET}")]
    AlphabetTooLarge(u32),
    #[error("cell {0} has an empty entry set")]
    EmptyEntry(Cell),
    #[error("cell {0} lies outside the shape")]
    CellOutsideShape(Cell),
    #[error("cell {0} is listed more than once")]
    DuplicateCell(Cell),
    #[error("cell {0} has no entry")]
    MissingCell(Cell),
    #[error("entry {value} at cell {cell} is outside 1..={n}")]
    LetterOutOfRange { cell: Cell, value: u32, n: u32 },
    #[error("entries at cell {0} are not strictly ascending")]
    UnsortedEntries(Cell),
    #[error("expected {expected} entry sets, got {got}")]
    WrongEntryCount { expected: usize, got: usize },
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error("malformed tableau JSON: {0}")]
    Json(String),
}

/// A subset of `{1..64}`; bit `m - 1` stands for the letter `m`.
///
/// The derived ordering is the ascending-bitmask order used by enumeration.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EntrySet(u64);

impl EntrySet {
    pub const fn from_bits(bits: u64) -> Self {
        EntrySet(bits)
    }

    pub fn singleton(m: u32) -> Self {
        debug_assert!((1..=MAX_ALPHABET).contains(&m));
        EntrySet(1 << (m - 1))
    }

    pub fn from_letters(letters: impl IntoIterator<Item = u32>) -> Self {
        letters.into_iter().fold(EntrySet(0), |s, m| s.with(m))
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn min(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }

    pub fn max(self) -> Option<u32> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    pub fn contains(self, m: u32) -> bool {
        (1..=MAX_ALPHABET).contains(&m) && self.0 & (1 << (m - 1)) != 0
    }

    pub fn with(self, m: u32) -> Self {
        EntrySet(self.0 | (1 << (m - 1)))
    }

    pub fn toggled(self, m: u32) -> Self {
        EntrySet(self.0 ^ (1 << (m - 1)))
    }

    /// Letters in ascending order.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let m = bits.trailing_zeros() + 1;
            bits &= bits - 1;
            Some(m)
        })
    }

    pub fn letter_sum(self) -> u64 {
        self.iter().map(u64::from).sum()
    }
}

/// A filling of a skew shape by nonempty subsets of `{1..n}`.
///
/// Construction only checks structure (coverage, nonempty sets, letters in
/// range); use [`SetValuedTableau::is_valid`] for the semi-standard conditions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetValuedTableau {
    shape: SkewShape,
    n: u32,
    /// Aligned with `shape.cells_row_major()`.
    entries: Vec<EntrySet>,
}

impl SetValuedTableau {
    pub fn from_entries(shape: SkewShape, n: u32, entries: Vec<EntrySet>) -> Result<Self, TableauError> {
        if n > MAX_ALPHABET {
            return Err(TableauError::AlphabetTooLarge(n));
        }
        if entries.len() != shape.size() {
            return Err(TableauError::WrongEntryCount { expected: shape.size(), got: entries.len() });
        }
        for (&cell, &e) in shape.cells_row_major().iter().zip(&entries) {
            if e.is_empty() {
                return Err(TableauError::EmptyEntry(cell));
            }
            if let Some(max) = e.max().filter(|&m| m > n) {
                return Err(TableauError::LetterOutOfRange { cell, value: max, n });
            }
        }
        Ok(SetValuedTableau { shape, n, entries })
    }

    /// Builds a tableau from `(cell, letters)` pairs in any order.
    pub fn from_cells<I, L>(shape: SkewShape, n: u32, cells: I) -> Result<Self, TableauError>
    where
        I: IntoIterator<Item = (Cell, L)>,
        L: IntoIterator<Item = u32>,
    {
        if n > MAX_ALPHABET {
            return Err(TableauError::AlphabetTooLarge(n));
        }
        let mut slots: Vec<Option<EntrySet>> = vec![None; shape.size()];
        for (cell, letters) in cells {
            let idx = shape.index_of(cell).ok_or(TableauError::CellOutsideShape(cell))?;
            if slots[idx].is_some() {
                return Err(TableauError::DuplicateCell(cell));
            }
            let mut set = EntrySet::default();
            for value in letters {
                if value == 0 || value > n {
                    return Err(TableauError::LetterOutOfRange { cell, value, n });
                }
                set = set.with(value);
            }
            slots[idx] = Some(set);
        }
        let entries = slots
            .into_iter()
            .zip(shape.cells_row_major())
            .map(|(s, &c)| s.ok_or(TableauError::MissingCell(c)))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_entries(shape, n, entries)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn alphabet_size(&self) -> u32 {
        self.n
    }

    /// Entry sets aligned with `shape().cells_row_major()`.
    pub fn entries(&self) -> &[EntrySet] {
        &self.entries
    }

    pub fn get(&self, cell: Cell) -> Option<EntrySet> {
        self.shape.index_of(cell).map(|i| self.entries[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (Cell, EntrySet)> + '_ {
        self.shape.cells_row_major().iter().copied().zip(self.entries.iter().copied())
    }

    /// The same tableau with the entry at `cell` replaced.
    pub fn with_entry(&self, cell: Cell, set: EntrySet) -> Option<Self> {
        let idx = self.shape.index_of(cell)?;
        let mut t = self.clone();
        t.entries[idx] = set;
        Some(t)
    }

    /// |T|, the total number of letters.
    pub fn size(&self) -> u32 {
        self.entries.iter().map(|e| e.len()).sum()
    }

    pub fn is_single_valued(&self) -> bool {
        self.entries.iter().all(|e| e.len() == 1)
    }

    /// Sum of all letters.
    pub fn letter_sum(&self) -> u64 {
        self.entries.iter().map(|e| e.letter_sum()).sum()
    }

    /// Row condition `max T(i,j) ≤ min T(i,j+1)` and column condition
    /// `max T(i,j) < min T(i+1,j)` at every adjacent pair.
    pub fn is_valid(&self) -> bool {
        self.iter().all(|(cell, e)| {
            let max = match e.max() {
                Some(m) => m,
                None => return false,
            };
            let right_ok = self
                .get(Cell::new(cell.row, cell.col + 1))
                .map_or(true, |r| r.min().is_some_and(|m| max <= m));
            let below_ok = self
                .get(Cell::new(cell.row + 1, cell.col))
                .map_or(true, |b| b.min().is_some_and(|m| max < m));
            right_ok && below_ok
        })
    }

    /// ω(T): entry `i - 1` counts the cells containing `i`.
    pub fn weight(&self) -> WeightVector {
        let mut counts = vec![0u32; self.n as usize];
        for e in &self.entries {
            for m in e.iter() {
                counts[m as usize - 1] += 1;
            }
        }
        WeightVector(counts)
    }

    /// One line per row of the outer shape; inner cells print as `.`.
    pub fn render_text(&self) -> String {
        let compact = self.n <= 9;
        let outer = self.shape.outer();
        let inner = self.shape.inner();
        let mut lines = Vec::with_capacity(outer.len());
        for row in 1..=outer.len() as u32 {
            let mut words = Vec::new();
            for col in 1..=outer.part(row) {
                if col <= inner.part(row) {
                    words.push(".".to_string());
                    continue;
                }
                let e = self.get(Cell::new(row, col)).expect("cell in shape");
                let letters: Vec<String> = e.iter().map(|m| m.to_string()).collect();
                words.push(if compact {
                    letters.concat()
                } else {
                    format!("{{{}}}", letters.join(","))
                });
            }
            lines.push(words.join(" "));
        }
        lines.join("\n")
    }

    pub fn to_json(&self) -> TableauJson {
        TableauJson {
            outer: self.shape.outer().parts().to_vec(),
            inner: self.shape.inner().parts().to_vec(),
            n: self.n,
            cells: self
                .iter()
                .map(|(c, e)| CellJson { row: c.row, col: c.col, entries: e.iter().collect() })
                .collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("tableau JSON is always serializable")
    }

    /// Decodes the JSON form. Structure is checked; semi-standardness is not.
    pub fn from_json_str(text: &str) -> Result<Self, TableauError> {
        let json: TableauJson = serde_json::from_str(text).map_err(|e| TableauError::Json(e.to_string()))?;
        Self::try_from(json)
    }
}

impl fmt::Display for SetValuedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

/// ω(T) = (ω₁, …, ωₙ).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(pub Vec<u32>);

impl WeightVector {
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableauJson {
    pub outer: Vec<u32>,
    pub inner: Vec<u32>,
    pub n: u32,
    pub cells: Vec<CellJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellJson {
    pub row: u32,
    pub col: u32,
    pub entries: Vec<u32>,
}

impl TryFrom<TableauJson> for SetValuedTableau {
    type Error = TableauError;

    fn try_from(json: TableauJson) -> Result<Self, Self::Error> {
        let shape = SkewShape::new(Partition::from_parts(json.outer)?, Partition::from_parts(json.inner)?)?;
        for c in &json.cells {
            if c.entries.windows(2).any(|w| w[0] >= w[1]) {
                return Err(TableauError::UnsortedEntries(Cell::new(c.row, c.col)));
            }
        }
        let n = json.n;
        SetValuedTableau::from_cells(
            shape,
            n,
            json.cells.into_iter().map(|c| (Cell::new(c.row, c.col), c.entries)),
        )
    }
}

/// Depth-first enumeration of SVT(θ, n).
///
/// Cells are filled in row-major order. At each cell the admissible sets are
/// the nonempty subsets of `{a..n}`, where `a` is the larger of
/// `max(above) + 1` and `max(left)` (an absent neighbour gives 1), tried in
/// ascending bitmask order. Subsets of `{a..n}` are exactly the masks that
/// are multiples of `2^(a-1)`, so the next candidate is one step of that size.
#[derive(Debug, Clone)]
pub struct SvtIter {
    shape: SkewShape,
    n: u32,
    singletons: bool,
    left: Vec<Option<usize>>,
    up: Vec<Option<usize>>,
    current: Vec<u64>,
    /// Cells `0..depth` hold a valid partial filling.
    depth: usize,
    fresh: bool,
    done: bool,
}

impl SvtIter {
    fn new(shape: &SkewShape, n: u32, singletons: bool) -> Result<Self, TableauError> {
        if n > MAX_ALPHABET {
            return Err(TableauError::AlphabetTooLarge(n));
        }
        let cells = shape.cells_row_major();
        let left = cells.iter().map(|c| shape.index_of(Cell::new(c.row, c.col - 1))).collect();
        let up = cells.iter().map(|c| shape.index_of(Cell::new(c.row - 1, c.col))).collect();
        Ok(SvtIter {
            shape: shape.clone(),
            n,
            singletons,
            left,
            up,
            current: vec![0; cells.len()],
            depth: 0,
            fresh: true,
            done: !shape.is_feasible(n),
        })
    }

    fn lower_bound(&self, k: usize) -> u32 {
        let max_of = |i: usize| 64 - self.current[i].leading_zeros();
        let from_up = self.up[k].map_or(1, |i| max_of(i) + 1);
        let from_left = self.left[k].map_or(1, max_of);
        from_up.max(from_left)
    }

    fn candidate(&self, k: usize) -> Option<u64> {
        let a = self.lower_bound(k);
        if a > self.n {
            return None;
        }
        let step = 1u64 << (a - 1);
        let next = if self.fresh {
            Some(step)
        } else if self.singletons {
            self.current[k].checked_shl(1).filter(|&v| v != 0)
        } else {
            self.current[k].checked_add(step)
        }?;
        ((next as u128) < (1u128 << self.n)).then_some(next)
    }
}

impl Iterator for SvtIter {
    type Item = SetValuedTableau;

    fn next(&mut self) -> Option<SetValuedTableau> {
        if self.done {
            return None;
        }
        let len = self.current.len();
        if len == 0 {
            self.done = true;
            return Some(SetValuedTableau { shape: self.shape.clone(), n: self.n, entries: Vec::new() });
        }
        loop {
            if self.depth == len {
                let entries = self.current.iter().map(|&b| EntrySet(b)).collect();
                // Resume by advancing the last cell.
                self.depth = len - 1;
                self.fresh = false;
                return Some(SetValuedTableau { shape: self.shape.clone(), n: self.n, entries });
            }
            match self.candidate(self.depth) {
                Some(bits) => {
                    self.current[self.depth] = bits;
                    self.depth += 1;
                    self.fresh = true;
                }
                None => {
                    if self.depth == 0 {
                        self.done = true;
                        return None;
                    }
                    self.depth -= 1;
                    self.fresh = false;
                }
            }
        }
    }
}

/// Every element of SVT(θ, n), each once, in a fixed order.
pub fn enumerate_svt(shape: &SkewShape, n: u32) -> Result<SvtIter, TableauError> {
    SvtIter::new(shape, n, false)
}

/// The single-valued tableaux of [`enumerate_svt`], in the same relative order.
pub fn enumerate_sst(shape: &SkewShape, n: u32) -> Result<SvtIter, TableauError> {
    SvtIter::new(shape, n, true)
}

/// |SVT(θ, n)| by the column-profile dynamic count.
///
/// Columns are processed left to right. The state after a column is the
/// vector of entry maxima down that column; the row condition of the next
/// column only reads those maxima. A cell with lower bound `lo` and maximum
/// `m` admits `2^(m - lo)` entry sets.
pub fn count_svt(shape: &SkewShape, n: u32) -> BigUint {
    if !shape.is_feasible(n) {
        return BigUint::zero();
    }
    let width = shape.outer().part(1);
    let inner = shape.inner();
    // Maxima of the previous column, with the row of its first entry.
    let mut states: HashMap<Vec<u32>, BigUint> = HashMap::from([(Vec::new(), BigUint::one())]);
    let mut prev_top = 0u32;
    for col in 1..=width {
        let Some((top, bottom)) = shape.column_rows(col) else {
            let total: BigUint = states.into_values().sum();
            states = HashMap::from([(Vec::new(), total)]);
            continue;
        };
        let mut next: HashMap<Vec<u32>, BigUint> = HashMap::new();
        for (prev, ways) in states {
            let left_bound = |row: u32| -> u32 {
                // (row, col-1) is in θ iff it lies right of the inner shape.
                if col >= 2 && inner.part(row) < col - 1 && row >= prev_top {
                    prev.get((row - prev_top) as usize).copied().unwrap_or(1)
                } else {
                    1
                }
            };
            let mut column = Vec::with_capacity((bottom - top + 1) as usize);
            fill_column(top, bottom, n, &left_bound, &mut column, ways, &mut next);
        }
        states = next;
        prev_top = top;
    }
    states.into_values().sum()
}

fn fill_column(
    row: u32,
    bottom: u32,
    n: u32,
    left_bound: &dyn Fn(u32) -> u32,
    column: &mut Vec<u32>,
    ways: BigUint,
    out: &mut HashMap<Vec<u32>, BigUint>,
) {
    if row > bottom {
        *out.entry(column.clone()).or_insert_with(BigUint::zero) += ways;
        return;
    }
    let above = column.last().map_or(1, |m| m + 1);
    let lo = above.max(left_bound(row));
    for m in lo..=n {
        column.push(m);
        let w = &ways << (m - lo) as usize;
        fill_column(row + 1, bottom, n, left_bound, column, w, out);
        column.pop();
    }
}

/// |SVT(θ, n)| by running the enumerator.
pub fn count_svt_enumerated(shape: &SkewShape, n: u32) -> Result<BigUint, TableauError> {
    let mut count = 0u64;
    for _ in enumerate_svt(shape, n)? {
        count += 1;
    }
    Ok(BigUint::from(count))
}

/// Σ over SVT(θ, n) of `(-1)^(|T| - |θ|)`.
pub fn signed_excess_count(shape: &SkewShape, n: u32) -> Result<BigInt, TableauError> {
    let base = shape.size() as u32;
    let mut total = 0i64;
    for t in enumerate_svt(shape, n)? {
        total += if (t.size() - base) % 2 == 0 { 1 } else { -1 };
    }
    Ok(BigInt::from(total))
}

/// Groups the tableaux of SVT(θ, n) by weight.
pub fn weight_histogram(shape: &SkewShape, n: u32) -> Result<BTreeMap<WeightVector, u64>, TableauError> {
    let mut hist = BTreeMap::new();
    for t in enumerate_svt(shape, n)? {
        *hist.entry(t.weight()).or_insert(0) += 1;
    }
    Ok(hist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{partitions_up_to, sst_count_hook};
    use std::collections::HashSet;

    fn skew(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn tab(shape: &str, n: u32, cells: &[((u32, u32), &[u32])]) -> SetValuedTableau {
        SetValuedTableau::from_cells(
            skew(shape),
            n,
            cells.iter().map(|&((r, c), e)| (Cell::new(r, c), e.iter().copied())),
        )
        .unwrap()
    }

    /// Every assignment of nonempty subsets, filtered by the validity check.
    fn brute_force(shape: &SkewShape, n: u32) -> HashSet<SetValuedTableau> {
        let k = shape.size();
        let choices = (1u64 << n) - 1;
        let mut out = HashSet::new();
        let total = choices.pow(k as u32);
        for mut code in 0..total {
            let mut entries = Vec::with_capacity(k);
            for _ in 0..k {
                entries.push(EntrySet::from_bits(code % choices + 1));
                code /= choices;
            }
            let t = SetValuedTableau::from_entries(shape.clone(), n, entries).unwrap();
            if t.is_valid() {
                out.insert(t);
            }
        }
        out
    }

    #[test]
    fn validity() {
        assert!(tab("2,1", 3, &[((1, 1), &[1]), ((1, 2), &[1, 2]), ((2, 1), &[2, 3])]).is_valid());
        assert!(!tab("2,1", 3, &[((1, 1), &[2]), ((1, 2), &[1]), ((2, 1), &[3])]).is_valid());
        assert!(!tab("2,1", 3, &[((1, 1), &[2]), ((1, 2), &[2]), ((2, 1), &[2])]).is_valid());
        assert!(tab("1", 1, &[((1, 1), &[1])]).is_valid());
    }

    #[test]
    fn construction_errors() {
        let s = skew("2,1");
        let err = SetValuedTableau::from_cells(s.clone(), 3, [(Cell::new(1, 1), vec![1]), (Cell::new(1, 2), vec![])]);
        assert!(matches!(err, Err(TableauError::EmptyEntry(_)) | Err(TableauError::MissingCell(_))));
        let err = SetValuedTableau::from_cells(s.clone(), 3, [(Cell::new(3, 3), vec![1])]);
        assert!(matches!(err, Err(TableauError::CellOutsideShape(_))));
        let err = SetValuedTableau::from_cells(s.clone(), 2, [(Cell::new(1, 1), vec![3])]);
        assert!(matches!(err, Err(TableauError::LetterOutOfRange { .. })));
        assert!(matches!(
            SetValuedTableau::from_entries(s, 65, vec![]),
            Err(TableauError::AlphabetTooLarge(65))
        ));
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_svt(&skew("2,1"), 3).unwrap().count(), 27);
        let singles: Vec<_> = enumerate_svt(&skew("1"), 3).unwrap().map(|t| t.entries()[0]).collect();
        assert_eq!(singles, (1..8).map(EntrySet::from_bits).collect::<Vec<_>>());
        assert_eq!(enumerate_svt(&skew("2,1"), 1).unwrap().count(), 0);
        assert_eq!(enumerate_svt(&skew(""), 0).unwrap().count(), 1);
        assert_eq!(enumerate_svt(&skew("1"), 0).unwrap().count(), 0);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for lambda in partitions_up_to(4) {
            for mu in lambda.subpartitions() {
                let shape = SkewShape::new(lambda.clone(), mu).unwrap();
                for n in 1..=3 {
                    let listed: Vec<_> = enumerate_svt(&shape, n).unwrap().collect();
                    assert!(listed.iter().all(SetValuedTableau::is_valid));
                    let set: HashSet<_> = listed.iter().cloned().collect();
                    assert_eq!(set.len(), listed.len(), "duplicates for {shape} n={n}");
                    assert_eq!(set, brute_force(&shape, n), "{shape} n={n}");
                }
            }
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        let s = skew("3,2,2/2,1");
        let a: Vec<_> = enumerate_svt(&s, 3).unwrap().collect();
        let b: Vec<_> = enumerate_svt(&s, 3).unwrap().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn sst_enumeration() {
        assert_eq!(enumerate_sst(&skew("2,1"), 3).unwrap().count(), 8);
        assert_eq!(enumerate_sst(&skew("2,1"), 2).unwrap().count(), 2);
        let ones: Vec<_> = enumerate_sst(&skew("1"), 2).unwrap().map(|t| t.entries()[0]).collect();
        assert_eq!(ones, vec![EntrySet::singleton(1), EntrySet::singleton(2)]);
    }

    #[test]
    fn sst_is_filtered_svt() {
        for lambda in partitions_up_to(5) {
            let shape = SkewShape::straight(lambda.clone());
            for n in 1..=3 {
                let filtered: Vec<_> = enumerate_svt(&shape, n)
                    .unwrap()
                    .filter(|t| t.size() as usize == shape.size())
                    .collect();
                let direct: Vec<_> = enumerate_sst(&shape, n).unwrap().collect();
                assert_eq!(filtered, direct);
                assert_eq!(BigUint::from(direct.len()), sst_count_hook(&lambda, n).unwrap());
            }
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count_svt(&skew("2,2"), 3), BigUint::from(13u32));
        assert_eq!(count_svt(&skew("4,3"), 4), BigUint::from(1759u32));
        assert_eq!(count_svt(&skew("1"), 5), BigUint::from(31u32));
        assert_eq!(count_svt(&skew("2,1"), 1), BigUint::zero());
        assert_eq!(count_svt(&skew(""), 3), BigUint::one());
        assert_eq!(count_svt(&skew("1"), 64), (BigUint::one() << 64usize) - 1u32);
    }

    #[test]
    fn dynamic_count_matches_enumerator() {
        for lambda in partitions_up_to(5) {
            for mu in lambda.subpartitions() {
                let shape = SkewShape::new(lambda.clone(), mu).unwrap();
                for n in 0..=3 {
                    assert_eq!(count_svt(&shape, n), count_svt_enumerated(&shape, n).unwrap(), "{shape} n={n}");
                }
            }
        }
        // A shape with an empty column in the middle of its outer width.
        let gap = skew("3,1/2,1");
        assert_eq!(count_svt(&gap, 3), count_svt_enumerated(&gap, 3).unwrap());
    }

    #[test]
    fn weights() {
        let t = tab("2,1", 3, &[((1, 1), &[1]), ((1, 2), &[1, 2]), ((2, 1), &[2, 3])]);
        assert_eq!(t.weight(), WeightVector(vec![2, 2, 1]));
        assert_eq!(t.weight().total(), t.size());
        for t in enumerate_sst(&skew("3,1"), 3).unwrap() {
            assert_eq!(t.weight().total(), 4);
        }
        let empty = enumerate_svt(&skew(""), 2).unwrap().next().unwrap();
        assert_eq!(empty.weight(), WeightVector(vec![0, 0]));
    }

    #[test]
    fn signed_counts() {
        assert_eq!(signed_excess_count(&skew("1"), 2).unwrap(), BigInt::one());
        assert_eq!(signed_excess_count(&skew("2,1"), 3).unwrap(), BigInt::one());
        assert_eq!(signed_excess_count(&skew(""), 4).unwrap(), BigInt::one());
    }

    #[test]
    fn rendering() {
        let t = tab("2,1", 3, &[((1, 1), &[1]), ((1, 2), &[1, 2]), ((2, 1), &[2, 3])]);
        assert_eq!(t.render_text(), "1 12\n23");
        let t = tab(
            "5,3,2,1/3,2",
            3,
            &[((1, 4), &[1]), ((1, 5), &[1, 2, 3]), ((2, 3), &[2, 3]), ((3, 1), &[1]), ((3, 2), &[1, 3]), ((4, 1), &[2])],
        );
        assert_eq!(t.render_text(), ". . . 1 123\n. . 23\n1 13\n2");
        assert_eq!(enumerate_svt(&skew(""), 1).unwrap().next().unwrap().render_text(), "");
        let wide = tab("2", 12, &[((1, 1), &[1, 10]), ((1, 2), &[11])]);
        assert_eq!(wide.render_text(), "{1,10} {11}");
    }

    #[test]
    fn json_round_trip() {
        let t = tab("3,2,2/2,1", 3, &[((1, 3), &[1, 2, 3]), ((2, 2), &[1]), ((3, 1), &[1]), ((3, 2), &[2, 3])]);
        let text = t.to_json_string();
        assert_eq!(
            text,
            r#"{"outer":[3,2,2],"inner":[2,1],"n":3,"cells":[{"row":1,"col":3,"entries":[1,2,3]},{"row":2,"col":2,"entries":[1]},{"row":3,"col":1,"entries":[1]},{"row":3,"col":2,"entries":[2,3]}]}"#
        );
        assert_eq!(SetValuedTableau::from_json_str(&text).unwrap(), t);
        assert!(SetValuedTableau::from_json_str(r#"{"outer":[1],"inner":[],"n":2,"cells":[{"row":1,"col":1,"entries":[2,1]}]}"#).is_err());
        assert!(SetValuedTableau::from_json_str(r#"{"outer":[1],"inner":[],"n":2,"cells":[]}"#).is_err());
        assert!(SetValuedTableau::from_json_str("[]").is_err());
    }
}
