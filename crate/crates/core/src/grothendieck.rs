//! Schur and stable Grothendieck polynomials, each built two ways: as a sum
//! over tableaux and as a bi-alternant (determinant over Vandermonde).

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyring::{det, LaurentPoly, MultiPoly, PolyError, Rational};
use crate::shapes::{Partition, SkewShape};
use crate::tableaux::{count_svt, enumerate_sst, enumerate_svt, TableauError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrothendieckError {
    #[error("bi-alternant formula needs a straight shape, got {0}")]
    SkewShape(String),
    #[error("partition {lambda} has more than {n} parts")]
    TooManyParts { lambda: String, n: u32 },
    #[error("expected {expected} evaluation points, got {got}")]
    WrongPointCount { expected: usize, got: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

impl GrothendieckError {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, GrothendieckError::Poly(PolyError::NonExactDivision { .. }))
    }
}

fn tableaux_sum(shape: &SkewShape, n: u32, single_valued: bool) -> Result<MultiPoly, GrothendieckError> {
    let base = shape.size() as u32;
    let mut acc: HashMap<Vec<u32>, i64> = HashMap::new();
    let iter = if single_valued { enumerate_sst(shape, n)? } else { enumerate_svt(shape, n)? };
    for t in iter {
        let mut key = t.weight().0;
        key.push(t.size() - base);
        *acc.entry(key).or_insert(0) += 1;
    }
    Ok(MultiPoly::from_terms(n as usize, acc.into_iter().map(|(e, c)| (e, BigInt::from(c))))?)
}

/// G_θ = Σ_{T ∈ SVT(θ,n)} β^{|T|−|θ|} x^{ω(T)}.
pub fn grothendieck_tableaux(shape: &SkewShape, n: u32) -> Result<MultiPoly, GrothendieckError> {
    tableaux_sum(shape, n, false)
}

/// s_θ = Σ_{T ∈ SST(θ,n)} x^{ω(T)}.
pub fn schur_tableaux(shape: &SkewShape, n: u32) -> Result<MultiPoly, GrothendieckError> {
    tableaux_sum(shape, n, true)
}

fn padded_parts(lambda: &Partition, n: u32) -> Result<Vec<u32>, GrothendieckError> {
    if lambda.len() > n as usize {
        return Err(GrothendieckError::TooManyParts { lambda: lambda.to_string(), n });
    }
    let mut parts = lambda.parts().to_vec();
    parts.resize(n as usize, 0);
    Ok(parts)
}

/// The matrix with entries `x_i^{λ_j + n − j} (1 + β x_i)^{j − 1}`, or just
/// the power of `x_i` when `deformed` is false.
fn alternant_matrix(lambda: &Partition, n: u32, deformed: bool) -> Result<Vec<Vec<MultiPoly>>, GrothendieckError> {
    let parts = padded_parts(lambda, n)?;
    let nv = n as usize;
    let mut rows = Vec::with_capacity(nv);
    for i in 1..=nv {
        let xi = MultiPoly::x(nv, i);
        let shift = &MultiPoly::one(nv) + &(&MultiPoly::beta(nv) * &xi);
        let mut row = Vec::with_capacity(nv);
        for j in 1..=nv {
            let mut entry = xi.pow(parts[j - 1] + (nv - j) as u32)?;
            if deformed {
                entry = entry.try_mul(&shift.pow(j as u32 - 1)?)?;
            }
            row.push(entry);
        }
        rows.push(row);
    }
    Ok(rows)
}

fn bialternant(lambda: &Partition, n: u32, deformed: bool) -> Result<MultiPoly, GrothendieckError> {
    if n == 0 {
        padded_parts(lambda, 0)?;
        return Ok(MultiPoly::one(0));
    }
    let numerator = det(&alternant_matrix(lambda, n, deformed)?)?;
    Ok(numerator.divide_by_vandermonde()?)
}

/// G_λ = |x_i^{λ_j+n−j}(1+βx_i)^{j−1}| / ∏_{i<j}(x_i − x_j), λ zero-padded to length n.
pub fn grothendieck_bialternant(lambda: &Partition, n: u32) -> Result<MultiPoly, GrothendieckError> {
    bialternant(lambda, n, true)
}

/// s_λ = |x_i^{λ_j+n−j}| / ∏_{i<j}(x_i − x_j).
pub fn schur_bialternant(lambda: &Partition, n: u32) -> Result<MultiPoly, GrothendieckError> {
    bialternant(lambda, n, false)
}

/// G_λ(x | 0) = s_λ(x), checked on the tableaux formulas.
pub fn check_beta_zero(lambda: &Partition, n: u32) -> Result<bool, GrothendieckError> {
    let shape = SkewShape::straight(lambda.clone());
    Ok(grothendieck_tableaux(&shape, n)?.at_beta_zero() == schur_tableaux(&shape, n)?)
}

/// G_θ(t, …, t | −1/t) as a Laurent polynomial in `t`.
pub fn principal_specialization(shape: &SkewShape, n: u32) -> Result<LaurentPoly, GrothendieckError> {
    Ok(grothendieck_tableaux(shape, n)?.specialize_principal())
}

/// Whether G_θ(t, …, t | −1/t) is exactly `t^{|θ|}`.
pub fn check_principal_specialization(shape: &SkewShape, n: u32) -> Result<bool, GrothendieckError> {
    Ok(principal_specialization(shape, n)? == LaurentPoly::monomial(shape.size() as i64, 1))
}

/// Value of G_θ at `x = (1, …, 1)` and the given β.
pub fn value_at_ones(g: &MultiPoly, beta: i64) -> Result<Rational, GrothendieckError> {
    let ones = vec![Rational::one(); g.nvars()];
    Ok(g.eval(&ones, &Rational::from_integer(beta.into()))?)
}

/// G_θ(1, …, 1 | 1) = |SVT(θ, n)|.
pub fn check_count_identity(shape: &SkewShape, n: u32) -> Result<bool, GrothendieckError> {
    let g = grothendieck_tableaux(shape, n)?;
    let count = Rational::from_integer(count_svt(shape, n).into());
    Ok(value_at_ones(&g, 1)? == count)
}

/// Checks `G_λ(x_1, …, x_{n−1}, t | −1/t) = t^{λ_1} · G_{λ̂}(x_1, …, x_{n−1} | −1/t)`
/// with λ̂ = (λ_2, …, λ_n), at one point. `xs` holds `x_1..x_{n−1}`; `t ≠ 0`.
pub fn check_peel_off(lambda: &Partition, n: u32, xs: &[Rational], t: &Rational) -> Result<bool, GrothendieckError> {
    if n == 0 || xs.len() != n as usize - 1 {
        return Err(GrothendieckError::WrongPointCount { expected: n.saturating_sub(1) as usize, got: xs.len() });
    }
    let beta = -t.recip();
    let full = grothendieck_bialternant(lambda, n)?;
    let mut point = xs.to_vec();
    point.push(t.clone());
    let lhs = full.eval(&point, &beta)?;

    let lambda_hat = Partition::from_parts(lambda.parts().iter().skip(1).copied().collect())
        .expect("a suffix of a partition is a partition");
    let reduced = grothendieck_bialternant(&lambda_hat, n - 1)?;
    let mut rhs = reduced.eval(xs, &beta)?;
    for _ in 0..lambda.part(1) {
        rhs *= t;
    }
    Ok(lhs == rhs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Formula {
    Tableaux,
    Bialternant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Schur,
    Grothendieck,
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Formula::Tableaux => "tableaux",
            Formula::Bialternant => "bialternant",
        })
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Schur => "schur",
            Basis::Grothendieck => "grothendieck",
        })
    }
}

/// A constructed polynomial together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialReport {
    pub shape: SkewShape,
    pub n: u32,
    pub formula: Formula,
    pub basis: Basis,
    pub value: MultiPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialReportJson {
    pub shape: String,
    pub n: u32,
    pub formula: Formula,
    pub basis: Basis,
    pub poly: String,
}

impl PolynomialReport {
    pub fn build(shape: &SkewShape, n: u32, formula: Formula, basis: Basis) -> Result<Self, GrothendieckError> {
        let value = match formula {
            Formula::Tableaux => match basis {
                Basis::Schur => schur_tableaux(shape, n)?,
                Basis::Grothendieck => grothendieck_tableaux(shape, n)?,
            },
            Formula::Bialternant => {
                if !shape.is_straight() {
                    return Err(GrothendieckError::SkewShape(shape.to_string()));
                }
                match basis {
                    Basis::Schur => schur_bialternant(shape.outer(), n)?,
                    Basis::Grothendieck => grothendieck_bialternant(shape.outer(), n)?,
                }
            }
        };
        debug_assert_eq!(value.nvars(), n as usize);
        debug_assert!(basis == Basis::Grothendieck || value.beta_degree() == 0);
        Ok(PolynomialReport { shape: shape.clone(), n, formula, basis, value })
    }

    pub fn to_json(&self) -> PolynomialReportJson {
        PolynomialReportJson {
            shape: self.shape.to_string(),
            n: self.n,
            formula: self.formula,
            basis: self.basis,
            poly: self.value.to_string(),
        }
    }
}

/// `Σ c` over the coefficients; for G_θ this is G_θ(1,…,1 | 1).
pub fn coefficient_sum(p: &MultiPoly) -> BigInt {
    p.terms().fold(BigInt::zero(), |acc, (_, c)| acc + c)
}
