//! The two parity arguments as executable maps.
//!
//! The inductive argument removes the corner box (the rightmost box of the
//! lowest row), splits SVT(θ′, n) into classes by the statistic `h`, and
//! pairs up every class with `h ≠ 0` by the toggle `f`. The direct argument
//! pairs all of SVT(θ, n) except the minimal tableau T₀ by the toggle `g`.
//! Every map re-validates its output; a broken image is reported as an
//! error rather than trusted.

use std::collections::{BTreeMap, HashSet};

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::shapes::{Cell, ShapeError, SkewShape};
use crate::tableaux::{count_svt, enumerate_svt, EntrySet, SetValuedTableau, TableauError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvolutionError {
    #[error("the empty shape has no corner box")]
    EmptyShape,
    #[error("shape {shape} has a column taller than n = {n}")]
    Infeasible { shape: String, n: u32 },
    #[error("tableau shape {got} does not match the expected shape {expected}")]
    ShapeMismatch { expected: String, got: String },
    #[error("fill {fill:?} is not admissible at the corner (lower bound {lower_bound})")]
    InadmissibleFill { fill: Vec<u32>, lower_bound: u32 },
    #[error("f is undefined on the class h = 0")]
    ZeroClass,
    #[error("g is undefined on the minimal tableau")]
    MinimalTableau,
    #[error("{map} produced an invalid tableau:\n{tableau}")]
    InvalidImage { map: &'static str, tableau: String },
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

/// The rightmost box of the lowest nonempty row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CornerBox {
    pub cell: Cell,
}

/// Returns the corner box of θ and the shape θ′ left after removing it.
pub fn corner_box(shape: &SkewShape) -> Result<(CornerBox, SkewShape), InvolutionError> {
    let cell = *shape.cells_row_major().last().ok_or(InvolutionError::EmptyShape)?;
    let mut parts = shape.outer().parts().to_vec();
    parts[cell.row as usize - 1] -= 1;
    let outer = crate::shapes::Partition::from_parts(parts)?;
    let reduced = SkewShape::new(outer, shape.inner().clone())?;
    Ok((CornerBox { cell }, reduced))
}

/// The class of a tableau of SVT(θ′, n) under the statistic `h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HClass(pub u32);

/// B(T): the sets that can be placed in the corner of θ on top of T.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleFills {
    /// `a = max(max T(i−1,j) + 1, max T(i,j−1))` with `max ∅ = 0`.
    pub lower_bound: u32,
    /// Every nonempty subset of `{a..n}`, ascending bitmask order.
    pub fills: Vec<EntrySet>,
}

impl AdmissibleFills {
    pub fn is_empty(&self) -> bool {
        self.fills.is_empty()
    }

    pub fn contains(&self, s: EntrySet) -> bool {
        self.fills.binary_search(&s).is_ok()
    }

    /// |{a..n}|, so that `fills.len() = 2^span − 1`.
    pub fn span(&self, n: u32) -> u32 {
        (n + 1).saturating_sub(self.lower_bound)
    }
}

fn ensure_shape(t: &SetValuedTableau, expected: &SkewShape) -> Result<(), InvolutionError> {
    if t.shape() != expected {
        return Err(InvolutionError::ShapeMismatch { expected: expected.to_string(), got: t.shape().to_string() });
    }
    Ok(())
}

fn max_at(t: &SetValuedTableau, cell: Cell) -> u32 {
    t.get(cell).and_then(EntrySet::max).unwrap_or(0)
}

/// B(T) in closed form: all nonempty subsets of `{a..n}`.
pub fn admissible_fill_set(t: &SetValuedTableau, corner: CornerBox) -> AdmissibleFills {
    let Cell { row, col } = corner.cell;
    let n = t.alphabet_size();
    let above = max_at(t, Cell::new(row - 1, col)) + 1;
    let left = if col > 1 { max_at(t, Cell::new(row, col - 1)) } else { 0 };
    let a = above.max(left);
    let fills = if a > n {
        Vec::new()
    } else {
        let step = 1u64 << (a - 1);
        let limit = 1u128 << n;
        (1..)
            .map(|k: u64| k * step)
            .take_while(|&bits| (bits as u128) < limit)
            .map(EntrySet::from_bits)
            .collect()
    };
    AdmissibleFills { lower_bound: a, fills }
}

/// B(T) by its defining property: every nonempty `S ⊆ [n]` such that
/// attaching `S` at the corner gives a valid tableau of θ.
pub fn admissible_fill_set_brute(t: &SetValuedTableau, corner: CornerBox) -> Result<Vec<EntrySet>, InvolutionError> {
    let n = t.alphabet_size();
    let full = t.shape().with_cell_added(corner.cell)?;
    let mut out = Vec::new();
    for bits in 1..(1u128 << n) {
        let s = EntrySet::from_bits(bits as u64);
        let candidate = place(t, &full, corner, s)?;
        if candidate.is_valid() {
            out.push(s);
        }
    }
    Ok(out)
}

fn place(t: &SetValuedTableau, full: &SkewShape, corner: CornerBox, s: EntrySet) -> Result<SetValuedTableau, InvolutionError> {
    let cells = t.iter().chain(std::iter::once((corner.cell, s))).map(|(c, e)| (c, e.iter()));
    Ok(SetValuedTableau::from_cells(full.clone(), t.alphabet_size(), cells)?)
}

/// A(T, S): T with `s` placed in the corner box.
pub fn attach_cell(t: &SetValuedTableau, corner: CornerBox, s: EntrySet) -> Result<SetValuedTableau, InvolutionError> {
    let b = admissible_fill_set(t, corner);
    if !b.contains(s) {
        return Err(InvolutionError::InadmissibleFill { fill: s.iter().collect(), lower_bound: b.lower_bound });
    }
    let full = t.shape().with_cell_added(corner.cell)?;
    let out = place(t, &full, corner, s)?;
    if !out.is_valid() {
        return Err(InvolutionError::InvalidImage { map: "attach", tableau: out.render_text() });
    }
    Ok(out)
}

/// The length `h` of the longest chain `n ∈ T(i−1,j)`, `n−1 ∈ T(i−2,j)`, …,
/// `n−h+1 ∈ T(i−h,j)` read upward from the corner box.
pub fn h_statistic(t: &SetValuedTableau, corner: CornerBox) -> HClass {
    let Cell { row, col } = corner.cell;
    let n = t.alphabet_size();
    let mut h = 0;
    while h < n && row > h + 1 {
        match t.get(Cell::new(row - h - 1, col)) {
            Some(e) if e.contains(n - h) => h += 1,
            _ => break,
        }
    }
    HClass(h)
}

/// Toggles `n − h` in the cell `(i − h, j)`.
pub fn f_map(t: &SetValuedTableau, corner: CornerBox) -> Result<SetValuedTableau, InvolutionError> {
    let HClass(h) = h_statistic(t, corner);
    if h == 0 {
        return Err(InvolutionError::ZeroClass);
    }
    let n = t.alphabet_size();
    let cell = Cell::new(corner.cell.row - h, corner.cell.col);
    let entry = t.get(cell).expect("chain cells lie in the shape");
    let out = t.with_entry(cell, entry.toggled(n - h)).expect("cell in shape");
    if out.entries().iter().any(|e| e.is_empty()) || !out.is_valid() {
        return Err(InvolutionError::InvalidImage { map: "f", tableau: out.render_text() });
    }
    Ok(out)
}

/// SVT(θ′, n) split into the classes of [`h_statistic`].
pub fn partition_by_h(
    reduced: &SkewShape,
    corner: CornerBox,
    n: u32,
) -> Result<BTreeMap<HClass, Vec<SetValuedTableau>>, InvolutionError> {
    let mut classes: BTreeMap<HClass, Vec<SetValuedTableau>> = BTreeMap::new();
    for t in enumerate_svt(reduced, n)? {
        classes.entry(h_statistic(&t, corner)).or_default().push(t);
    }
    Ok(classes)
}

/// T₀: each column filled with `{1}, {2}, {3}, …` from its top box down.
pub fn minimal_tableau(shape: &SkewShape, n: u32) -> Result<SetValuedTableau, InvolutionError> {
    if !shape.is_feasible(n) {
        return Err(InvolutionError::Infeasible { shape: shape.to_string(), n });
    }
    let inner_conj = shape.inner().conjugate();
    let entries = shape
        .cells_row_major()
        .iter()
        .map(|c| EntrySet::singleton(c.row - inner_conj.part(c.col)))
        .collect();
    let t = SetValuedTableau::from_entries(shape.clone(), n, entries)?;
    if !t.is_valid() {
        return Err(InvolutionError::InvalidImage { map: "minimal_tableau", tableau: t.render_text() });
    }
    Ok(t)
}

/// The locator of `g`: the first cell in column-major order where `t`
/// differs from `minimal`, with the letter `k` of `minimal` there.
pub fn g_locator(t: &SetValuedTableau, minimal: &SetValuedTableau) -> Option<(Cell, u32)> {
    t.shape().cells_column_major().into_iter().find_map(|c| {
        let m = minimal.get(c)?;
        (t.get(c)? != m).then(|| (c, m.min().expect("singleton")))
    })
}

/// Toggles `k` at the locator cell, `minimal` being T₀ of the same shape.
pub fn g_map_with(t: &SetValuedTableau, minimal: &SetValuedTableau) -> Result<SetValuedTableau, InvolutionError> {
    ensure_shape(t, minimal.shape())?;
    let (cell, k) = g_locator(t, minimal).ok_or(InvolutionError::MinimalTableau)?;
    let entry = t.get(cell).expect("locator lies in the shape");
    let out = t.with_entry(cell, entry.toggled(k)).expect("cell in shape");
    if out.entries().iter().any(|e| e.is_empty()) || !out.is_valid() {
        return Err(InvolutionError::InvalidImage { map: "g", tableau: out.render_text() });
    }
    Ok(out)
}

pub fn g_map(t: &SetValuedTableau) -> Result<SetValuedTableau, InvolutionError> {
    let minimal = minimal_tableau(t.shape(), t.alphabet_size())?;
    g_map_with(t, &minimal)
}

/// Outcome of checking one class of the `h` split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCheck {
    pub class: HClass,
    pub size: usize,
    pub problems: Vec<String>,
}

/// Everything the inductive argument asserts about one (θ, n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductionCheck {
    pub corner: CornerBox,
    pub classes: Vec<ClassCheck>,
    /// B(T) = ∅ whenever h ≠ 0.
    pub claim1: bool,
    /// Σ over class 0 of (2^{|{a..n}|} − 1).
    pub class_zero_fill_total: BigUint,
    pub count: BigUint,
    pub problems: Vec<String>,
}

impl InductionCheck {
    pub fn passed(&self) -> bool {
        self.problems.is_empty() && self.classes.iter().all(|c| c.problems.is_empty())
    }

    pub fn class_sizes(&self) -> BTreeMap<u32, u64> {
        self.classes.iter().map(|c| (c.class.0, c.size as u64)).collect()
    }
}

/// Runs the corner-removal argument on θ exhaustively: `f` on every class
/// with `h ≠ 0`, B(T) in closed form against its definition, and the final
/// counting step.
pub fn check_induction(shape: &SkewShape, n: u32) -> Result<InductionCheck, InvolutionError> {
    check_induction_with(shape, n, f_map)
}

/// [`check_induction`] with the toggle supplied by the caller.
pub fn check_induction_with<F>(shape: &SkewShape, n: u32, f: F) -> Result<InductionCheck, InvolutionError>
where
    F: Fn(&SetValuedTableau, CornerBox) -> Result<SetValuedTableau, InvolutionError>,
{
    if !shape.is_feasible(n) {
        return Err(InvolutionError::Infeasible { shape: shape.to_string(), n });
    }
    let (corner, reduced) = corner_box(shape)?;
    let split = partition_by_h(&reduced, corner, n)?;
    let mut problems = Vec::new();
    let mut claim1 = true;
    let mut class_zero_fill_total = BigUint::default();
    let mut fills_total = BigUint::default();
    let mut classes = Vec::new();

    for (&class, members) in &split {
        let mut cp = Vec::new();
        if class.0 >= n.max(1) {
            cp.push(format!("h = {} outside 0..n", class.0));
        }
        let member_set: HashSet<&SetValuedTableau> = members.iter().collect();
        for t in members {
            let fills = admissible_fill_set(t, corner);
            let brute = admissible_fill_set_brute(t, corner)?;
            if fills.fills != brute {
                cp.push(format!("closed-form B(T) disagrees with its definition at\n{}", t.render_text()));
            }
            fills_total += fills.fills.len();
            if class.0 == 0 {
                if !fills.contains(EntrySet::singleton(n)) {
                    cp.push(format!("{{n}} missing from B(T) at\n{}", t.render_text()));
                }
                class_zero_fill_total += (BigUint::one() << fills.span(n) as usize) - 1u32;
                continue;
            }
            if !fills.is_empty() {
                claim1 = false;
                cp.push(format!("B(T) nonempty for h = {} at\n{}", class.0, t.render_text()));
            }
            match f(t, corner) {
                Ok(image) => {
                    if image == *t {
                        cp.push(format!("f has a fixed point\n{}", t.render_text()));
                    } else if !member_set.contains(&image) {
                        cp.push(format!("f leaves class {} at\n{}", class.0, t.render_text()));
                    } else {
                        match f(&image, corner) {
                            Ok(back) if back == *t => {}
                            _ => cp.push(format!("f is not an involution at\n{}", t.render_text())),
                        }
                    }
                }
                Err(e) => cp.push(format!("f failed: {e}")),
            }
        }
        let even_expected = class.0 != 0;
        if (members.len() % 2 == 0) != even_expected {
            cp.push(format!("class {} has size {}", class.0, members.len()));
        }
        classes.push(ClassCheck { class, size: members.len(), problems: cp });
    }

    let count = count_svt(shape, n);
    if class_zero_fill_total != count {
        problems.push(format!("class-0 fill total {class_zero_fill_total} != count {count}"));
    }
    if fills_total != count {
        problems.push(format!("Σ|B(T)| = {fills_total} != count {count}"));
    }
    Ok(InductionCheck { corner, classes, claim1, class_zero_fill_total, count, problems })
}

/// Everything the direct argument asserts about one (θ, n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingCheck {
    pub count: usize,
    pub orbits: usize,
    pub minimal_is_unique_minimum: bool,
    pub problems: Vec<String>,
}

impl PairingCheck {
    pub fn passed(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Checks that `g` pairs SVT(θ, n) ∖ {T₀} into two-element orbits whose
/// members differ in size by one, and that T₀ is the unique minimizer of
/// the letter sum.
pub fn check_pairing(shape: &SkewShape, n: u32) -> Result<PairingCheck, InvolutionError> {
    check_pairing_with(shape, n, g_map_with)
}

/// [`check_pairing`] with the map supplied by the caller.
pub fn check_pairing_with<G>(shape: &SkewShape, n: u32, g: G) -> Result<PairingCheck, InvolutionError>
where
    G: Fn(&SetValuedTableau, &SetValuedTableau) -> Result<SetValuedTableau, InvolutionError>,
{
    let minimal = minimal_tableau(shape, n)?;
    let all: Vec<SetValuedTableau> = enumerate_svt(shape, n)?.collect();
    let members: HashSet<&SetValuedTableau> = all.iter().collect();
    let mut problems = Vec::new();

    let min_sum = minimal.letter_sum();
    let at_min = all.iter().filter(|t| t.letter_sum() <= min_sum).collect::<Vec<_>>();
    let minimal_is_unique_minimum = at_min.len() == 1 && *at_min[0] == minimal;
    if !minimal_is_unique_minimum {
        problems.push("T0 is not the unique minimizer of the letter sum".to_string());
    }
    if !members.contains(&minimal) {
        problems.push("T0 is not among the enumerated tableaux".to_string());
    }

    let mut orbits = 0usize;
    for t in all.iter().filter(|t| **t != minimal) {
        let image = match g(t, &minimal) {
            Ok(image) => image,
            Err(e) => {
                problems.push(format!("g failed at\n{}\n{e}", t.render_text()));
                continue;
            }
        };
        if image == *t {
            problems.push(format!("g has a fixed point\n{}", t.render_text()));
            continue;
        }
        if image == minimal || !members.contains(&image) {
            problems.push(format!("g leaves SVT' at\n{}", t.render_text()));
            continue;
        }
        if t.size().abs_diff(image.size()) != 1 {
            problems.push(format!("g does not change |T| by one at\n{}", t.render_text()));
        }
        match g(&image, &minimal) {
            Ok(back) if back == *t => {}
            _ => problems.push(format!("g is not an involution at\n{}", t.render_text())),
        }
        // Count each orbit once, from its smaller member.
        if t.size() < image.size() {
            orbits += 1;
        }
    }
    if all.len() != 2 * orbits + 1 {
        problems.push(format!("{} tableaux do not split as 2·{orbits} + 1", all.len()));
    }
    Ok(PairingCheck { count: all.len(), orbits, minimal_is_unique_minimum, problems })
}

/// The consolidated parity verdict for one (θ, n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityReport {
    pub shape: SkewShape,
    pub n: u32,
    pub count: BigUint,
    pub claim1: bool,
    pub claim2_sizes: BTreeMap<u32, u64>,
    pub g_orbits: u64,
    pub signed_count: BigInt,
    pub problems: Vec<String>,
}

impl ParityReport {
    pub fn is_odd(&self) -> bool {
        self.count.bit(0)
    }

    pub fn passed(&self) -> bool {
        self.problems.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "shape": self.shape.to_string(),
            "n": self.n,
            "count": self.count.to_string(),
            "parity": if self.is_odd() { "odd" } else { "even" },
            "claim1": self.claim1,
            "claim2_sizes": self.claim2_sizes.iter().map(|(k, v)| (k.to_string(), *v)).collect::<BTreeMap<_, _>>(),
            "g_orbits": self.g_orbits,
            "signed_count": self.signed_count.to_string(),
        })
    }
}

/// Counts SVT(θ, n) and cross-checks the count against both arguments:
/// it must be odd, equal `2·(g-orbits) + 1`, have signed sum 1, and the
/// `h` classes must have the predicted parities.
pub fn verify_parity(shape: &SkewShape, n: u32) -> Result<ParityReport, InvolutionError> {
    if !shape.is_feasible(n) {
        return Err(InvolutionError::Infeasible { shape: shape.to_string(), n });
    }
    let count = count_svt(shape, n);
    let mut problems = Vec::new();
    if !count.bit(0) {
        problems.push(format!("count {count} is even"));
    }

    let (claim1, claim2_sizes) = if shape.is_empty() {
        (true, BTreeMap::new())
    } else {
        let induction = check_induction(shape, n)?;
        problems.extend(induction.problems.iter().cloned());
        for c in &induction.classes {
            problems.extend(c.problems.iter().cloned());
        }
        (induction.claim1, induction.class_sizes())
    };

    let pairing = check_pairing(shape, n)?;
    problems.extend(pairing.problems.iter().cloned());
    if BigUint::from(2 * pairing.orbits + 1) != count {
        problems.push(format!("{} g-orbits do not account for count {count}", pairing.orbits));
    }

    let signed_count = crate::tableaux::signed_excess_count(shape, n)?;
    if !signed_count.is_one() {
        problems.push(format!("signed count is {signed_count}"));
    }

    Ok(ParityReport {
        shape: shape.clone(),
        n,
        count,
        claim1,
        claim2_sizes,
        g_orbits: pairing.orbits as u64,
        signed_count,
        problems,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::partitions_up_to;

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

    fn set(letters: &[u32]) -> EntrySet {
        EntrySet::from_letters(letters.iter().copied())
    }

    fn corner_fixture() -> SetValuedTableau {
        tab("3,2,1/2,1", 3, &[((1, 3), &[1, 2, 3]), ((2, 2), &[1]), ((3, 1), &[1])])
    }

    #[test]
    fn corners() {
        let (c, reduced) = corner_box(&skew("3,2,2/2,1")).unwrap();
        assert_eq!(c.cell, Cell::new(3, 2));
        assert_eq!(reduced, skew("3,2,1/2,1"));
        let (c, reduced) = corner_box(&skew("1")).unwrap();
        assert_eq!(c.cell, Cell::new(1, 1));
        assert!(reduced.is_empty());
        let (c, reduced) = corner_box(&skew("5,3,2,1/3,2")).unwrap();
        assert_eq!(c.cell, Cell::new(4, 1));
        assert_eq!(reduced, skew("5,3,2/3,2"));
        assert_eq!(corner_box(&skew("")), Err(InvolutionError::EmptyShape));
        // A lowest row that is entirely inner does not count.
        let (c, _) = corner_box(&skew("2,1/1,1")).unwrap();
        assert_eq!(c.cell, Cell::new(1, 2));
    }

    #[test]
    fn fills_of_example() {
        let t = corner_fixture();
        let corner = CornerBox { cell: Cell::new(3, 2) };
        let b = admissible_fill_set(&t, corner);
        assert_eq!(b.lower_bound, 2);
        assert_eq!(b.fills, vec![set(&[2]), set(&[3]), set(&[2, 3])]);
        assert_eq!(admissible_fill_set_brute(&t, corner).unwrap(), b.fills);

        let attached: Vec<String> = b.fills.iter().map(|&s| attach_cell(&t, corner, s).unwrap().render_text()).collect();
        assert_eq!(
            attached,
            [". . 123\n. 1\n1 2", ". . 123\n. 1\n1 3", ". . 123\n. 1\n1 23"]
        );
        assert!(matches!(attach_cell(&t, corner, set(&[1])), Err(InvolutionError::InadmissibleFill { .. })));
    }

    #[test]
    fn fills_without_neighbours() {
        let empty = enumerate_svt(&skew(""), 3).unwrap().next().unwrap();
        let corner = CornerBox { cell: Cell::new(1, 1) };
        let b = admissible_fill_set(&empty, corner);
        assert_eq!((b.lower_bound, b.fills.len()), (1, 7));
        let single = attach_cell(&empty, corner, set(&[2, 3])).unwrap();
        assert_eq!(single.render_text(), "23");
    }

    #[test]
    fn top_letter_above_blocks_corner() {
        // (2,1): corner (2,1) under (1,1).
        let corner = CornerBox { cell: Cell::new(2, 1) };
        for t in enumerate_svt(&skew("2"), 3).unwrap() {
            if t.get(Cell::new(1, 1)).unwrap().contains(3) {
                assert!(admissible_fill_set(&t, corner).is_empty());
            }
        }
    }

    #[test]
    fn h_values() {
        let corner = CornerBox { cell: Cell::new(3, 2) };
        assert_eq!(h_statistic(&corner_fixture(), corner), HClass(0));

        let corner = CornerBox { cell: Cell::new(1, 2) };
        let t = tab("1", 3, &[((1, 1), &[3])]);
        assert_eq!(h_statistic(&t, corner), HClass(0));

        let corner = CornerBox { cell: Cell::new(2, 1) };
        let t = tab("2", 3, &[((1, 1), &[3]), ((1, 2), &[3])]);
        assert_eq!(h_statistic(&t, corner), HClass(1));
        let image = f_map(&t, corner).unwrap();
        assert_eq!(image, tab("2", 3, &[((1, 1), &[2, 3]), ((1, 2), &[3])]));
        assert_eq!(h_statistic(&image, corner), HClass(1));
        assert_eq!(f_map(&image, corner).unwrap(), t);
        assert_eq!(f_map(&corner_fixture(), CornerBox { cell: Cell::new(3, 2) }), Err(InvolutionError::ZeroClass));
    }

    #[test]
    fn longer_chain() {
        // Column of three above the corner at (4,1), n = 4: 4 ∈ (3,1), 3 ∈ (2,1).
        let corner = CornerBox { cell: Cell::new(4, 1) };
        let t = tab("1,1,1", 4, &[((1, 1), &[1]), ((2, 1), &[3]), ((3, 1), &[4])]);
        assert_eq!(h_statistic(&t, corner), HClass(2));
        let image = f_map(&t, corner).unwrap();
        assert_eq!(image.get(Cell::new(2, 1)).unwrap(), set(&[2, 3]));
    }

    #[test]
    fn classes_partition_and_claims() {
        for lambda in partitions_up_to(5) {
            for mu in lambda.subpartitions() {
                let shape = SkewShape::new(lambda.clone(), mu).unwrap();
                if shape.is_empty() {
                    continue;
                }
                for n in 1..=3 {
                    if !shape.is_feasible(n) {
                        continue;
                    }
                    let check = check_induction(&shape, n).unwrap();
                    assert!(check.passed(), "{shape} n={n}: {:?}", check);
                    assert!(check.claim1);
                    let (_, reduced) = corner_box(&shape).unwrap();
                    let total: u64 = check.class_sizes().values().sum();
                    assert_eq!(BigUint::from(total), count_svt(&reduced, n));
                }
            }
        }
    }

    #[test]
    fn minimal_tableaux() {
        let t0 = minimal_tableau(&skew("5,3,3,2/3,1,1"), 3).unwrap();
        assert_eq!(t0.render_text(), ". . . 1 1\n. 1 1\n. 2 2\n1 3");
        assert_eq!(minimal_tableau(&skew("1"), 5).unwrap().render_text(), "1");
        assert_eq!(minimal_tableau(&skew("2,2"), 2).unwrap().render_text(), "1 1\n2 2");
        assert!(matches!(minimal_tableau(&skew("1,1,1"), 2), Err(InvolutionError::Infeasible { .. })));
    }

    #[test]
    fn g_on_fixtures() {
        let shape = "5,3,3,2/3,1,1";
        let t1 = tab(
            shape,
            3,
            &[((1, 4), &[1]), ((1, 5), &[1, 2, 3]), ((2, 2), &[1]), ((2, 3), &[1]), ((3, 2), &[2]), ((3, 3), &[2, 3]), ((4, 1), &[1]), ((4, 2), &[3])],
        );
        let g1 = g_map(&t1).unwrap();
        assert_eq!(g1.get(Cell::new(3, 3)).unwrap(), set(&[3]));
        assert_eq!(g1.render_text(), ". . . 1 123\n. 1 1\n. 2 3\n1 3");
        assert_eq!(g_map(&g1).unwrap(), t1);

        let t2 = tab(
            shape,
            3,
            &[((1, 4), &[2]), ((1, 5), &[2, 3]), ((2, 2), &[1]), ((2, 3), &[1]), ((3, 2), &[2]), ((3, 3), &[2]), ((4, 1), &[1]), ((4, 2), &[3])],
        );
        let g2 = g_map(&t2).unwrap();
        assert_eq!(g2.render_text(), ". . . 12 23\n. 1 1\n. 2 2\n1 3");
        assert_eq!(g_map(&g2).unwrap(), t2);

        let t0 = minimal_tableau(&skew(shape), 3).unwrap();
        assert_eq!(g_map(&t0), Err(InvolutionError::MinimalTableau));
    }

    #[test]
    fn parity_reports() {
        let r = verify_parity(&skew("2,1"), 4).unwrap();
        assert!(r.passed(), "{:?}", r.problems);
        assert_eq!(r.count, BigUint::from(159u32));
        assert_eq!(r.g_orbits, 79);
        let r = verify_parity(&skew("1"), 1).unwrap();
        assert_eq!((r.count.clone(), r.g_orbits), (BigUint::one(), 0));
        let r = verify_parity(&skew("3,2,2/2,1"), 3).unwrap();
        assert!(r.passed() && r.is_odd());
        assert_eq!(BigUint::from(2 * r.g_orbits + 1), r.count);
        let r = verify_parity(&skew("2,1/2,1"), 2).unwrap();
        assert!(r.passed());
        assert_eq!(
            r.to_json().to_string(),
            r#"{"claim1":true,"claim2_sizes":{},"count":"1","g_orbits":0,"n":2,"parity":"odd","shape":"2,1/2,1","signed_count":"1"}"#
        );
    }

    #[test]
    fn broken_g_is_caught() {
        // Skipping the toggle turns every tableau into a fixed point.
        let skip = |t: &SetValuedTableau, _: &SetValuedTableau| Ok(t.clone());
        let check = check_pairing_with(&skew("2,1"), 2, skip).unwrap();
        assert!(!check.passed());
    }
}
