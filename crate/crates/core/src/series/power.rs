use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{unit_inverse, BiPoly, UniPoly};
use crate::{Error, Result};

/// Bivariate power series truncated at weight `max_weight`.
///
/// Stored densely as a triangle: row `n` holds the coefficients of
/// `x^n q^m` for `0 <= m <= n`. Every counting series lives inside this
/// triangle since a composition of weight `n` has at most `n` parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiSeries {
    max_weight: usize,
    rows: Vec<Vec<BigInt>>,
}

impl BiSeries {
    pub fn zero(max_weight: usize) -> Self {
        Self {
            max_weight,
            rows: (0..=max_weight).map(|n| vec![BigInt::zero(); n + 1]).collect(),
        }
    }

    pub fn one(max_weight: usize) -> Self {
        let mut s = Self::zero(max_weight);
        s.rows[0][0] = BigInt::from(1);
        s
    }

    /// Builds a series from rows; row `n` must have exactly `n + 1` entries.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Invariant("a series needs at least row 0".into()));
        }
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::Invariant(format!(
                    "row {n} has {} entries, expected {}",
                    row.len(),
                    n + 1
                )));
            }
        }
        Ok(Self {
            max_weight: rows.len() - 1,
            rows,
        })
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    /// Coefficient of `x^weight q^length`; zero outside the stored triangle.
    pub fn coeff(&self, weight: usize, length: usize) -> BigInt {
        self.rows
            .get(weight)
            .and_then(|row| row.get(length))
            .cloned()
            .unwrap_or_default()
    }

    pub fn row(&self, weight: usize) -> &[BigInt] {
        &self.rows[weight]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Zero::is_zero)
    }

    /// Sum of row `weight`, i.e. the series at `q = 1`.
    pub fn row_sum(&self, weight: usize) -> BigInt {
        self.rows[weight].iter().sum()
    }

    /// Row `weight` as a polynomial in `q`.
    pub fn row_poly(&self, weight: usize) -> UniPoly {
        UniPoly::new(self.rows[weight].clone())
    }

    /// The coefficients of `p` up to `x^max_weight`.
    ///
    /// Fails with [`Error::NonTriangular`] if a kept term has more factors of
    /// `q` than of `x`.
    pub fn from_poly(p: &BiPoly, max_weight: usize) -> Result<Self> {
        let mut s = Self::zero(max_weight);
        for ((a, b), c) in p.terms() {
            let (a, b) = (a as usize, b as usize);
            if a > max_weight {
                continue;
            }
            if b > a {
                return Err(Error::NonTriangular {
                    weight: a,
                    length: b,
                });
            }
            s.rows[a][b] = c.clone();
        }
        Ok(s)
    }

    /// Drops all rows above `max_weight`.
    pub fn truncate(&self, max_weight: usize) -> Self {
        let keep = max_weight.min(self.max_weight);
        Self {
            max_weight: keep,
            rows: self.rows[..=keep].to_vec(),
        }
    }

    fn check_bound(&self, other: &Self) -> Result<()> {
        if self.max_weight != other.max_weight {
            return Err(Error::BoundMismatch {
                left: self.max_weight,
                right: other.max_weight,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_bound(other)?;
        let mut out = self.clone();
        for (row, other_row) in out.rows.iter_mut().zip(&other.rows) {
            for (c, d) in row.iter_mut().zip(other_row) {
                *c += d;
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_bound(other)?;
        let mut out = self.clone();
        for (row, other_row) in out.rows.iter_mut().zip(&other.rows) {
            for (c, d) in row.iter_mut().zip(other_row) {
                *c -= d;
            }
        }
        Ok(out)
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_bound(other)?;
        let n_max = self.max_weight;
        let mut out = Self::zero(n_max);
        for (i, row_a) in self.rows.iter().enumerate() {
            for (j, a) in row_a.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (k, row_b) in other.rows[..=n_max - i].iter().enumerate() {
                    for (l, b) in row_b.iter().enumerate() {
                        if !b.is_zero() {
                            out.rows[i + k][j + l] += a * b;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Multiplies by a polynomial, truncating at this series' bound.
    pub fn mul_poly(&self, p: &BiPoly) -> Result<Self> {
        self.mul(&Self::from_poly(p, self.max_weight)?)
    }

    /// Multiplicative inverse up to truncation.
    ///
    /// Requires the constant term to be `+1` or `-1` so that the inverse
    /// has integer coefficients.
    pub fn invert(&self) -> Result<Self> {
        let terms: Vec<(usize, usize, BigInt)> = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(n, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(move |(m, c)| (n, m, c.clone()))
            })
            .collect();
        let one = |n: usize, m: usize| {
            if n == 0 && m == 0 {
                BigInt::from(1)
            } else {
                BigInt::zero()
            }
        };
        let rect = solve_rect(one, &terms, self.max_weight)?;
        rect_to_triangle(rect)
    }
}

impl fmt::Display for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for n in 0..=self.max_weight {
            let row = self.row_poly(n);
            if row.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{row}")?,
                1 => write!(f, "({row})x")?,
                _ => write!(f, "({row})x^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.max_weight + 1)
    }
}

/// Solves `den * out = num` on the rectangle `0 <= n, m <= bound`.
///
/// `den_terms` lists the nonzero terms of the divisor as `(n, m, coeff)`;
/// the `(0, 0)` term must be a unit. Powers of `q` never decrease under
/// multiplication, so entries with `m > bound` cannot feed back into the
/// rectangle and dropping them is exact.
fn solve_rect(
    num: impl Fn(usize, usize) -> BigInt,
    den_terms: &[(usize, usize, BigInt)],
    bound: usize,
) -> Result<Vec<Vec<BigInt>>> {
    let c0 = den_terms
        .iter()
        .find(|(n, m, _)| *n == 0 && *m == 0)
        .map(|(_, _, c)| c.clone())
        .unwrap_or_default();
    let c0_inv = unit_inverse(&c0)?;
    let rest: Vec<_> = den_terms
        .iter()
        .filter(|(n, m, _)| (*n, *m) != (0, 0) && *n <= bound && *m <= bound)
        .collect();
    let mut out = vec![vec![BigInt::zero(); bound + 1]; bound + 1];
    for n in 0..=bound {
        for m in 0..=bound {
            let mut acc = num(n, m);
            for (i, j, c) in &rest {
                if *i <= n && *j <= m {
                    let prev = &out[n - i][m - j];
                    if !prev.is_zero() {
                        acc -= c * prev;
                    }
                }
            }
            out[n][m] = acc * &c0_inv;
        }
    }
    Ok(out)
}

fn rect_to_triangle(rect: Vec<Vec<BigInt>>) -> Result<BiSeries> {
    let mut rows = Vec::with_capacity(rect.len());
    for (n, mut row) in rect.into_iter().enumerate() {
        if let Some(m) = (n + 1..row.len()).find(|&m| !row[m].is_zero()) {
            return Err(Error::NonTriangular {
                weight: n,
                length: m,
            });
        }
        row.truncate(n + 1);
        rows.push(row);
    }
    BiSeries::from_rows(rows)
}

/// Expands `num / den` as a series in `x` and `q` up to weight `max_weight`.
///
/// `num` and `den` are arbitrary integer polynomials; only the quotient is
/// required to lie in the triangle `length <= weight`.
pub fn series_div(num: &BiPoly, den: &BiPoly, max_weight: usize) -> Result<BiSeries> {
    let den_terms: Vec<(usize, usize, BigInt)> = den
        .terms()
        .map(|((a, b), c)| (a as usize, b as usize, c.clone()))
        .collect();
    let num_at = |n: usize, m: usize| num.coeff(n as u32, m as u32);
    let rect = solve_rect(num_at, &den_terms, max_weight)?;
    rect_to_triangle(rect)
}

/// Power series in `q` truncated at `q^max_length`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniSeries {
    coeffs: Vec<BigInt>,
}

impl UniSeries {
    pub fn zero(max_length: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); max_length + 1],
        }
    }

    pub fn from_poly(p: &UniPoly, max_length: usize) -> Self {
        Self {
            coeffs: (0..=max_length).map(|i| p.coeff(i)).collect(),
        }
    }

    pub fn max_length(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, length: usize) -> BigInt {
        self.coeffs.get(length).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.max_length() != other.max_length() {
            return Err(Error::BoundMismatch {
                left: self.max_length(),
                right: other.max_length(),
            });
        }
        let l = self.max_length();
        let mut out = Self::zero(l);
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs[..=l - i].iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        Ok(out)
    }

    pub fn invert(&self) -> Result<Self> {
        let den = UniPoly::new(self.coeffs.clone());
        uni_series_div(&UniPoly::one(), &den, self.max_length())
    }
}

impl fmt::Display for UniSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + O(q^{})",
            UniPoly::new(self.coeffs.clone()),
            self.coeffs.len()
        )
    }
}

/// Expands `num / den` in powers of `q` up to `q^max_length`.
pub fn uni_series_div(num: &UniPoly, den: &UniPoly, max_length: usize) -> Result<UniSeries> {
    let c0_inv = unit_inverse(&den.coeff(0))?;
    let mut out = UniSeries::zero(max_length);
    for n in 0..=max_length {
        let mut acc = num.coeff(n);
        for (i, d) in den.coeffs().iter().enumerate().skip(1).take(n) {
            acc -= d * &out.coeffs[n - i];
        }
        out.coeffs[n] = acc * &c0_inv;
    }
    Ok(out)
}
