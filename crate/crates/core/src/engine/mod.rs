//! Correlation matrices and the determinant formulas.
//!
//! For a forbidden set `S_1..S_k`, the avoiders `G` and the quasi-avoiders
//! `B_1..B_k` (compositions ending in `S_i` with no other occurrence of any
//! forbidden word) satisfy the linear system
//!
//! ```text
//! | 1 - x(1+q)      1 - x    ...  1 - x   | | G   |   | 1 - x |
//! | x^w(S_1)q^l(S_1) -c_11   ...  -c_1k   | | B_1 | = |   0   |
//! | ...                                    | | ... |   |  ...  |
//! | x^w(S_k)q^l(S_k) -c_k1   ...  -c_kk   | | B_k |   |   0   |
//! ```
//!
//! where `c_ij` is the correlation polynomial of `S_i` against `S_j`. The
//! first row comes from growing a composition by incrementing its last part
//! or appending a part 1; row `i` from appending `S_i` to an avoider.
//! Cramer's rule gives every unknown as a ratio of exact polynomial
//! determinants, which are expanded as series only at the very end.

mod det;

pub use det::{det, det_bareiss, det_cofactor, MAX_DET_SIZE, MAX_SET_SIZE};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::correlate::{correlation_poly_q, correlation_poly_xq, ForbiddenSet};
use crate::series::{series_div, uni_series_div, BiPoly, BiSeries, UniPoly, UniSeries};
use crate::{Error, Result};

/// Caps on the work a single call may request.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest truncation bound for series.
    pub max_weight: usize,
    /// Largest forbidden set.
    pub max_set_size: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_weight: 128,
            max_set_size: MAX_SET_SIZE,
        }
    }
}

impl Limits {
    fn check(&self, set: &ForbiddenSet, max_weight: usize) -> Result<()> {
        let set_cap = self.max_set_size.min(MAX_SET_SIZE);
        if set.len() > set_cap {
            return Err(Error::SizeLimitExceeded {
                size: set.len(),
                limit: set_cap,
            });
        }
        if max_weight > self.max_weight {
            return Err(Error::BoundTooLarge {
                what: "truncation bound",
                requested: max_weight as u64,
                cap: self.max_weight as u64,
            });
        }
        Ok(())
    }
}

/// Correlation polynomials of every ordered pair of forbidden words:
/// entry `(i, j)` correlates `S_i` against `S_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrelationMatrix<P> {
    entries: Vec<Vec<P>>,
}

impl<P> CorrelationMatrix<P> {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &P {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<P>] {
        &self.entries
    }
}

fn check_unit_diagonal<P>(entries: &[Vec<P>], constant: impl Fn(&P) -> BigInt) -> Result<()> {
    for (i, row) in entries.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            let c = constant(e);
            let expect = if i == j { BigInt::one() } else { BigInt::zero() };
            if c != expect {
                return Err(Error::Invariant(format!(
                    "correlation ({i}, {j}) has constant term {c}, expected {expect}"
                )));
            }
        }
    }
    Ok(())
}

/// Bivariate correlation matrix of a forbidden set.
pub fn build_matrix(set: &ForbiddenSet) -> Result<CorrelationMatrix<BiPoly>> {
    let entries: Vec<Vec<BiPoly>> = set
        .iter()
        .map(|si| set.iter().map(|sj| correlation_poly_xq(si, sj)).collect())
        .collect();
    check_unit_diagonal(&entries, BiPoly::constant_term)?;
    Ok(CorrelationMatrix { entries })
}

/// Correlation matrix in `q` alone, for strings.
pub fn build_string_matrix(set: &ForbiddenSet) -> Result<CorrelationMatrix<UniPoly>> {
    let entries: Vec<Vec<UniPoly>> = set
        .iter()
        .map(|si| set.iter().map(|sj| correlation_poly_q(si, sj)).collect())
        .collect();
    check_unit_diagonal(&entries, |p| p.coeff(0))?;
    Ok(CorrelationMatrix { entries })
}

/// Prepends `corner, border_row...` as row 0 and `border_col[i]` to row
/// `i + 1` of the negated core.
fn bordered<R: crate::series::Ring>(corner: R, border_row: R, border_col: Vec<R>, core: &[Vec<R>]) -> Vec<Vec<R>> {
    let k = core.len();
    let mut rows = Vec::with_capacity(k + 1);
    rows.push(std::iter::once(corner).chain(std::iter::repeat_n(border_row, k)).collect());
    for (col, row) in border_col.into_iter().zip(core) {
        rows.push(std::iter::once(col).chain(row.iter().map(R::negated)).collect());
    }
    rows
}

fn negated<R: crate::series::Ring>(core: &[Vec<R>]) -> Vec<Vec<R>> {
    core.iter().map(|row| row.iter().map(R::negated).collect()).collect()
}

/// Removes row 0 and column `col` from a square matrix.
fn first_row_minor<R: Clone>(m: &[Vec<R>], col: usize) -> Vec<Vec<R>> {
    m[1..]
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|&(j, _)| j != col)
                .map(|(_, e)| e.clone())
                .collect()
        })
        .collect()
}

fn expect_constant(p: &BiPoly, expect: &BigInt, what: &str) -> Result<()> {
    let c = p.constant_term();
    if &c != expect {
        return Err(Error::Invariant(format!(
            "{what} has constant term {c}, expected {expect}"
        )));
    }
    Ok(())
}

/// Series of a composition problem together with the intermediate algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AvoidanceResult {
    /// Avoiders by weight and number of parts, including the empty
    /// composition.
    pub gf: BiSeries,
    /// `quasi[i]`: compositions ending in the `i`-th forbidden word with no
    /// other occurrence of any forbidden word.
    pub quasi: Vec<BiSeries>,
    /// Determinant of the negated correlation matrix.
    pub numer: BiPoly,
    /// Determinant of the bordered system matrix.
    pub denom: BiPoly,
}

pub fn composition_gf(set: &ForbiddenSet, max_weight: usize) -> Result<AvoidanceResult> {
    composition_gf_with(set, max_weight, &Limits::default())
}

/// Counts compositions avoiding every word of `set`, by weight (`x`) and
/// number of parts (`q`), up to weight `max_weight`.
///
/// The empty set yields `(1 - x) / (1 - x(1 + q))`, the series of all
/// compositions.
pub fn composition_gf_with(
    set: &ForbiddenSet,
    max_weight: usize,
    limits: &Limits,
) -> Result<AvoidanceResult> {
    limits.check(set, max_weight)?;
    let matrix = build_matrix(set)?;
    let k = set.len();
    let x = BiPoly::x();
    let one_minus_x = &BiPoly::one() - &x;
    let corner = &one_minus_x - &(&x * &BiPoly::q());
    let heads: Vec<BiPoly> = set
        .iter()
        .map(|w| {
            let weight = u32::try_from(w.weight()).expect("word weight fits in u32");
            BiPoly::monomial(1, weight, w.len() as u32)
        })
        .collect();
    let system = bordered(corner, one_minus_x.clone(), heads, matrix.rows());

    let sign = if k.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let numer = det(&negated(matrix.rows()))?;
    let denom = det(&system)?;
    expect_constant(&numer, &sign, "numerator determinant")?;
    expect_constant(&denom, &sign, "denominator determinant")?;

    let gf = series_div(&(&one_minus_x * &numer), &denom, max_weight)?;
    let quasi = (1..=k)
        .map(|col| {
            let minor = det(&first_row_minor(&system, col))?;
            let cofactor = if col % 2 == 0 { minor } else { -minor };
            series_div(&(&one_minus_x * &cofactor), &denom, max_weight)
        })
        .collect::<Result<Vec<_>>>()?;

    if !gf.coeff(0, 0).is_one() {
        return Err(Error::Invariant("series does not start with 1".into()));
    }
    Ok(AvoidanceResult {
        gf,
        quasi,
        numer,
        denom,
    })
}

/// Counts strings over `1..=alphabet_size` avoiding every word of `set`, by
/// length, up to `max_length`.
pub fn string_gf(set: &ForbiddenSet, alphabet_size: u32, max_length: usize) -> Result<UniSeries> {
    if set.len() > MAX_SET_SIZE {
        return Err(Error::SizeLimitExceeded {
            size: set.len(),
            limit: MAX_SET_SIZE,
        });
    }
    let max_letter = set.max_letter();
    if max_letter > alphabet_size {
        return Err(Error::LetterOutOfAlphabet {
            letter: max_letter,
            alphabet_size,
        });
    }
    let matrix = build_string_matrix(set)?;
    let corner = UniPoly::from_i64s(&[1, -i64::from(alphabet_size)]);
    let heads = set.iter().map(|w| UniPoly::monomial(1, w.len())).collect();
    let system = bordered(corner, UniPoly::one(), heads, matrix.rows());
    let numer = det(&negated(matrix.rows()))?;
    let denom = det(&system)?;
    uni_series_div(&numer, &denom, max_length)
}

/// Outcome of checking the two families of linear relations between `G`
/// and the `B_i` on a computed result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    /// `(1 - x - xq) G + (1 - x) sum_i B_i = 1 - x`.
    pub growth: bool,
    /// For each `i`: `x^w(S_i) q^l(S_i) G = sum_j c_ij B_j`.
    pub tails: Vec<bool>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.growth && self.tails.iter().all(|&t| t)
    }
}

/// Re-derives both relations of the linear system from the expanded series.
/// Failures are reported, not raised; an `Err` means the inputs themselves
/// are inconsistent (e.g. `result` was computed for a different set).
pub fn verify_proof_identities(result: &AvoidanceResult, set: &ForbiddenSet) -> Result<IdentityReport> {
    let n = result.gf.max_weight();
    if result.quasi.len() != set.len() {
        return Err(Error::IndexOutOfRange {
            index: result.quasi.len(),
            len: set.len(),
        });
    }
    let x = BiPoly::x();
    let one_minus_x = &BiPoly::one() - &x;
    let step = &one_minus_x - &(&x * &BiPoly::q());

    let mut quasi_sum = BiSeries::zero(n);
    for b in &result.quasi {
        quasi_sum = quasi_sum.add(b)?;
    }
    let lhs = result.gf.mul_poly(&step)?.add(&quasi_sum.mul_poly(&one_minus_x)?)?;
    let growth = lhs == BiSeries::from_poly(&one_minus_x, n)?;

    let matrix = build_matrix(set)?;
    let tails = set
        .iter()
        .enumerate()
        .map(|(i, word)| {
            let weight = u32::try_from(word.weight()).expect("word weight fits in u32");
            let head = BiPoly::monomial(1, weight, word.len() as u32);
            let lhs = result.gf.mul_poly(&head)?;
            let mut rhs = BiSeries::zero(n);
            for (c, b) in matrix.rows()[i].iter().zip(&result.quasi) {
                rhs = rhs.add(&b.mul_poly(c)?)?;
            }
            Ok(lhs == rhs)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IdentityReport { growth, tails })
}
