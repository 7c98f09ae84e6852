//! Exact polynomials over ℤ in `x1..xn` and `b` (the deformation parameter
//! β), plus single-variable Laurent polynomials for principal
//! specializations.
//!
//! Terms are ordered graded-lexicographically with `x1 > x2 > … > xn > b`.
//! The term map never stores a zero coefficient, so derived equality is
//! polynomial equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

/// Exponents beyond this are rejected by multiplication and parsing.
pub const MAX_EXPONENT: u32 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },
    #[error("exponent exceeds the bound of {MAX_EXPONENT}")]
    ExponentOverflow,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division of {dividend} by {divisor} is not exact (stuck at term {term})")]
    NonExactDivision { dividend: String, divisor: String, term: String },
    #[error("matrix is not square or is empty")]
    BadMatrix,
    #[error("expected {expected} evaluation points, got {got}")]
    WrongPointCount { expected: usize, got: usize },
    #[error("cannot evaluate a Laurent polynomial with negative powers at zero")]
    LaurentAtZero,
    #[error("cannot parse polynomial {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// Exponent vector `(e1, …, en, e_b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Degree in the `x` variables only.
    pub fn x_degree(&self) -> u64 {
        self.0[..self.0.len() - 1].iter().map(|&e| e as u64).sum()
    }

    pub fn beta_exponent(&self) -> u32 {
        *self.0.last().expect("monomials always carry a β slot")
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn checked_mul(&self, other: &Monomial) -> Result<Monomial, PolyError> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).filter(|&e| e <= MAX_EXPONENT).ok_or(PolyError::ExponentOverflow))
            .collect::<Result<_, _>>()
            .map(Monomial)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial(vec![0; nvars + 1]), c.into());
        p
    }

    /// The variable `x_i`, 1-based.
    pub fn x(nvars: usize, i: usize) -> Self {
        assert!((1..=nvars).contains(&i), "x{i} out of range for {nvars} variables");
        let mut e = vec![0; nvars + 1];
        e[i - 1] = 1;
        Self::monomial(nvars, e, 1).expect("well-formed")
    }

    pub fn beta(nvars: usize) -> Self {
        let mut e = vec![0; nvars + 1];
        e[nvars] = 1;
        Self::monomial(nvars, e, 1).expect("well-formed")
    }

    /// `c · x^e` where the last exponent is that of β.
    pub fn monomial(nvars: usize, exponents: Vec<u32>, c: impl Into<BigInt>) -> Result<Self, PolyError> {
        if exponents.len() != nvars + 1 {
            return Err(PolyError::VariableMismatch { left: nvars + 1, right: exponents.len() });
        }
        if exponents.iter().any(|&e| e > MAX_EXPONENT) {
            return Err(PolyError::ExponentOverflow);
        }
        let mut p = Self::zero(nvars);
        p.add_term(Monomial(exponents), c.into());
        Ok(p)
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Vec<u32>, BigInt)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p = p.try_add(&Self::monomial(nvars, e, c)?)?;
        }
        Ok(p)
    }

    /// Number of `x` variables.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending term order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last_key_value()
    }

    pub fn beta_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::beta_exponent).max().unwrap_or(0)
    }

    /// Setting β = 0 keeps exactly the β-free terms.
    pub fn at_beta_zero(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.beta_exponent() == 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &MultiPoly) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::VariableMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_vars(other)?;
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.checked_mul(mb)?, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<MultiPoly, PolyError> {
        let mut acc = MultiPoly::one(self.nvars);
        for _ in 0..k {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, d) in &self.terms {
            out.add_term(m.clone(), c * d);
        }
        out
    }

    /// Quotient of an exact division by multivariate long division.
    ///
    /// Any term of the running dividend not divisible by the leading term of
    /// `divisor` would land in the remainder for good (everything still to be
    /// subtracted is smaller), so the first such term ends the division.
    pub fn divide_exact(&self, divisor: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_vars(divisor)?;
        let (lead_m, lead_c) = divisor.leading_term().ok_or(PolyError::DivisionByZero)?;
        let mut rest = self.clone();
        let mut quotient = MultiPoly::zero(self.nvars);
        while let Some((m, c)) = rest.leading_term() {
            let (q, r) = c.div_rem(lead_c);
            if !lead_m.divides(m) || !r.is_zero() {
                return Err(PolyError::NonExactDivision {
                    dividend: self.to_string(),
                    divisor: divisor.to_string(),
                    term: MultiPoly::monomial(self.nvars, m.0.clone(), c.clone())?.to_string(),
                });
            }
            let shift = m.div(lead_m);
            for (dm, dc) in &divisor.terms {
                rest.add_term(dm.checked_mul(&shift)?, -(&q * dc));
            }
            quotient.add_term(shift, q);
        }
        Ok(quotient)
    }

    /// ∏_{i<j} (x_i − x_j)
    pub fn vandermonde(nvars: usize) -> MultiPoly {
        let mut acc = MultiPoly::one(nvars);
        for i in 1..=nvars {
            for j in i + 1..=nvars {
                acc = &acc * &(&MultiPoly::x(nvars, i) - &MultiPoly::x(nvars, j));
            }
        }
        acc
    }

    /// Exact division by ∏_{i<j} (x_i − x_j), one linear factor at a time.
    pub fn divide_by_vandermonde(&self) -> Result<MultiPoly, PolyError> {
        let n = self.nvars;
        let mut acc = self.clone();
        for i in 1..=n {
            for j in i + 1..=n {
                acc = acc.divide_exact(&(&MultiPoly::x(n, i) - &MultiPoly::x(n, j)))?;
            }
        }
        Ok(acc)
    }

    /// Exact value at `x = xs`, `b = beta`.
    pub fn eval(&self, xs: &[Rational], beta: &Rational) -> Result<Rational, PolyError> {
        if xs.len() != self.nvars {
            return Err(PolyError::WrongPointCount { expected: self.nvars, got: xs.len() });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = Rational::from_integer(c.clone());
            for (x, &e) in xs.iter().chain(std::iter::once(beta)).zip(&m.0) {
                if e > 0 {
                    term *= pow_rational(x, e);
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Substitutes `x_i := t` for all `i` and `b := −1/t`.
    pub fn specialize_principal(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let k = m.beta_exponent();
            let exp = m.x_degree() as i64 - k as i64;
            let c = if k % 2 == 0 { c.clone() } else { -c };
            out.add_term(exp, c);
        }
        out
    }

    /// Parses the text form produced by `Display`, e.g. `x1^2*x2*b + 3*x1 - 1`.
    ///
    /// Terms may be given in any order and factors may repeat; a number may
    /// appear anywhere within a product.
    pub fn parse(text: &str, nvars: usize) -> Result<MultiPoly, PolyError> {
        Parser { text, nvars }.parse()
    }
}

fn pow_rational(x: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    let mut base = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

struct Parser<'a> {
    text: &'a str,
    nvars: usize,
}

impl Parser<'_> {
    fn err(&self, reason: impl Into<String>) -> PolyError {
        PolyError::Parse { text: self.text.to_string(), reason: reason.into() }
    }

    fn parse(&self) -> Result<MultiPoly, PolyError> {
        let s: String = self.text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(self.err("empty input"));
        }
        let mut out = MultiPoly::zero(self.nvars);
        let bytes = s.as_bytes();
        let mut start = 0;
        let mut negative = false;
        if bytes[0] == b'-' || bytes[0] == b'+' {
            negative = bytes[0] == b'-';
            start = 1;
        }
        let mut i = start;
        loop {
            if i == bytes.len() || (i > start && (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^') {
                let term = self.term(&s[start..i])?;
                out = out.try_add(&if negative { -term } else { term })?;
                if i == bytes.len() {
                    break;
                }
                negative = bytes[i] == b'-';
                start = i + 1;
            }
            i += 1;
        }
        Ok(out)
    }

    fn term(&self, s: &str) -> Result<MultiPoly, PolyError> {
        if s.is_empty() {
            return Err(self.err("empty term"));
        }
        let mut coeff = BigInt::one();
        let mut exps = vec![0u32; self.nvars + 1];
        for factor in s.split('*') {
            if factor.is_empty() {
                return Err(self.err("empty factor"));
            }
            if factor.bytes().all(|b| b.is_ascii_digit()) {
                coeff *= factor.parse::<BigInt>().map_err(|_| self.err("bad number"))?;
                continue;
            }
            let (var, power) = match factor.split_once('^') {
                Some((v, p)) => {
                    if p.is_empty() || !p.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(self.err(format!("bad exponent in {factor:?}")));
                    }
                    let p: u32 = p.parse().map_err(|_| PolyError::ExponentOverflow)?;
                    (v, p)
                }
                None => (factor, 1),
            };
            let slot = if var == "b" {
                self.nvars
            } else if let Some(idx) = var.strip_prefix('x') {
                if idx.is_empty() || !idx.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(self.err(format!("bad variable {var:?}")));
                }
                match idx.parse::<usize>() {
                    Ok(k) if (1..=self.nvars).contains(&k) => k - 1,
                    _ => return Err(self.err(format!("variable {var} out of range"))),
                }
            } else {
                return Err(self.err(format!("bad factor {factor:?}")));
            };
            exps[slot] = exps[slot]
                .checked_add(power)
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or(PolyError::ExponentOverflow)?;
        }
        MultiPoly::monomial(self.nvars, exps, coeff)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (k, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let abs = c.abs();
            if m.is_constant() {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            let mut factors = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                let name = if i == self.nvars { "b".to_string() } else { format!("x{}", i + 1) };
                match e {
                    0 => {}
                    1 => factors.push(name),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

// The operator forms panic on mismatched variable counts; use the `try_`
// methods where that can happen.
macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

/// Determinant by cofactor expansion, always along the row or column with the
/// most zero entries.
pub fn det(matrix: &[Vec<MultiPoly>]) -> Result<MultiPoly, PolyError> {
    let size = matrix.len();
    if size == 0 || matrix.iter().any(|row| row.len() != size) {
        return Err(PolyError::BadMatrix);
    }
    let nvars = matrix[0][0].nvars();
    for p in matrix.iter().flatten() {
        if p.nvars() != nvars {
            return Err(PolyError::VariableMismatch { left: nvars, right: p.nvars() });
        }
    }
    let idx: Vec<usize> = (0..size).collect();
    det_minor(matrix, &idx, &idx)
}

fn det_minor(m: &[Vec<MultiPoly>], rows: &[usize], cols: &[usize]) -> Result<MultiPoly, PolyError> {
    if rows.len() == 1 {
        return Ok(m[rows[0]][cols[0]].clone());
    }
    let nvars = m[0][0].nvars();
    let zeros_in_row = |r: usize| cols.iter().filter(|&&c| m[r][c].is_zero()).count();
    let zeros_in_col = |c: usize| rows.iter().filter(|&&r| m[r][c].is_zero()).count();
    let (best_row, row_zeros) = rows.iter().enumerate().map(|(k, &r)| (k, zeros_in_row(r))).max_by_key(|x| x.1).unwrap();
    let (best_col, col_zeros) = cols.iter().enumerate().map(|(k, &c)| (k, zeros_in_col(c))).max_by_key(|x| x.1).unwrap();

    let mut acc = MultiPoly::zero(nvars);
    if row_zeros >= col_zeros {
        let r = rows[best_row];
        let sub_rows: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
        for (k, &c) in cols.iter().enumerate() {
            if m[r][c].is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = m[r][c].try_mul(&det_minor(m, &sub_rows, &sub_cols)?)?;
            acc = if (best_row + k) % 2 == 0 { acc.try_add(&term)? } else { acc.try_sub(&term)? };
        }
    } else {
        let c = cols[best_col];
        let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        for (k, &r) in rows.iter().enumerate() {
            if m[r][c].is_zero() {
                continue;
            }
            let sub_rows: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
            let term = m[r][c].try_mul(&det_minor(m, &sub_rows, &sub_cols)?)?;
            acc = if (best_col + k) % 2 == 0 { acc.try_add(&term)? } else { acc.try_sub(&term)? };
        }
    }
    Ok(acc)
}

/// A Laurent polynomial in one variable `t`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exp: i64, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c.into());
        p
    }

    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().rev().map(|(&e, c)| (e, c))
    }

    /// `Some((e, c))` when the polynomial is the single term `c·t^e`.
    pub fn as_monomial(&self) -> Option<(i64, &BigInt)> {
        match self.terms.len() {
            1 => self.terms.iter().next().map(|(&e, c)| (e, c)),
            _ => None,
        }
    }

    pub fn eval(&self, t: &Rational) -> Result<Rational, PolyError> {
        if t.is_zero() && self.terms.keys().any(|&e| e < 0) {
            return Err(PolyError::LaurentAtZero);
        }
        let mut total = Rational::zero();
        for (&e, c) in &self.terms {
            let power = if e >= 0 {
                pow_rational(t, e as u32)
            } else {
                pow_rational(&t.recip(), (-e) as u32)
            };
            total += power * Rational::from_integer(c.clone());
        }
        Ok(total)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            match e {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if e == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
