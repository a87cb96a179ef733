//! Closed form for avoiding the words `2 1^(a-1) 2`, `a` in an exponent set.
//!
//! Two such words overlap only on a single letter 2, so their correlation
//! polynomials are `[i == j] + x (xq)^a_i` and both determinants collapse.
//! With `P = sum_i (xq)^a_i` the generating function is
//!
//! ```text
//!                     (1 - x)(1 + xP)
//! ---------------------------------------------------------
//! (1 - x(1+q) + (1-x)x^2 q)(1 + xP) - (1 - x) x^2 q
//! ```

use crate::correlate::{ForbiddenSet, Word};
use crate::series::{series_div, BiPoly, BiSeries};
use crate::{Error, Result};

/// Strictly increasing positive exponents `a_1 < a_2 < ... < a_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentSet(Vec<u32>);

impl ExponentSet {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        let increasing = exponents.windows(2).all(|w| w[0] < w[1]);
        if exponents.is_empty() || exponents[0] == 0 || !increasing {
            return Err(Error::InvalidExponents);
        }
        Ok(Self(exponents))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The three families with a printed simplification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `{1, 2, ..., k}`: words `22, 212, ..., 2 1^(k-1) 2`.
    Consecutive(u32),
    /// `{1, 3, ..., 2k+1}`: an even number of 1s between the 2s.
    OddExponents(u32),
    /// `{2, 4, ..., 2k}`: an odd number of 1s between the 2s.
    EvenExponents(u32),
}

impl FamilyKind {
    pub fn exponent_set(self) -> Result<ExponentSet> {
        let exps = match self {
            FamilyKind::Consecutive(k) => (1..=k).collect(),
            FamilyKind::OddExponents(k) if k >= 1 => (0..=k).map(|i| 2 * i + 1).collect(),
            FamilyKind::EvenExponents(k) => (1..=k).map(|i| 2 * i).collect(),
            FamilyKind::OddExponents(_) => Vec::new(),
        };
        ExponentSet::new(exps)
    }

    /// The simplified rational function `(numerator, denominator)`
    /// obtained by summing `P` as a geometric series.
    ///
    /// For [`FamilyKind::OddExponents`] this is the form that follows from
    /// the general closed form, i.e. with `(xq)^(2k+2)` and `x^2 q`; see
    /// [`odd_exponents_as_printed`] for the variant carrying the typo.
    pub fn simplified_form(self) -> Result<(BiPoly, BiPoly)> {
        let (x, q, one) = (BiPoly::x(), BiPoly::q(), BiPoly::one());
        let xq = &x * &q;
        let x2q = &(&x * &x) * &q;
        let one_minus_x = &one - &x;
        // factor by which numerator and denominator were multiplied: 1 - r
        let (geom, inner) = match self {
            FamilyKind::Consecutive(k) => {
                self.exponent_set()?;
                let inner = &(&one - &xq) + &(&x2q * &(&one - &xq.pow(k)));
                (&one - &xq, inner)
            }
            FamilyKind::OddExponents(k) => {
                self.exponent_set()?;
                let r = xq.pow(2);
                let inner = &(&one - &r) + &(&x2q * &(&one - &xq.pow(2 * k + 2)));
                (&one - &r, inner)
            }
            FamilyKind::EvenExponents(k) => {
                self.exponent_set()?;
                let r = xq.pow(2);
                let x3q2 = &x * &r;
                let inner = &(&one - &r) + &(&x3q2 * &(&one - &xq.pow(2 * k)));
                (&one - &r, inner)
            }
        };
        let base = &(&one - &(&x * &(&one + &q))) + &(&one_minus_x * &x2q);
        let num = &one_minus_x * &inner;
        let den = &(&base * &inner) - &(&(&one_minus_x * &geom) * &x2q);
        Ok((num, den))
    }
}

/// The odd-exponent simplification exactly as typeset in the source: its
/// denominator has `x q^2 (1 - (xq)^(2k+1))` while its numerator has
/// `x^2 q (1 - (xq)^(2k+1))`. Kept for comparison only.
pub fn odd_exponents_as_printed(k: u32) -> (BiPoly, BiPoly) {
    let (x, q, one) = (BiPoly::x(), BiPoly::q(), BiPoly::one());
    let xq = &x * &q;
    let one_minus_r = &one - &xq.pow(2);
    let cut = &one - &xq.pow(2 * k + 1);
    let x2q = &(&x * &x) * &q;
    let xq2 = &(&x * &q) * &q;
    let base = &(&one - &(&x * &(&one + &q))) + &(&(&one - &x) * &x2q);
    let num = &(&one - &x) * &(&one_minus_r + &(&x2q * &cut));
    let den = &(&base * &(&one_minus_r + &(&xq2 * &cut)))
        - &(&(&(&one - &x) * &x2q) * &one_minus_r);
    (num, den)
}

/// The words `2 1^(a_i - 1) 2`.
pub fn family_words(e: &ExponentSet) -> ForbiddenSet {
    let words = e
        .exponents()
        .iter()
        .map(|&a| {
            let mut parts = Vec::with_capacity(a as usize + 1);
            parts.push(2);
            parts.extend(std::iter::repeat_n(1, a as usize - 1));
            parts.push(2);
            Word::new(parts).expect("parts are positive")
        })
        .collect();
    ForbiddenSet::new(words).expect("family words of distinct lengths form an antichain")
}

/// Numerator and denominator of the closed form.
pub fn family_rational(e: &ExponentSet) -> (BiPoly, BiPoly) {
    let (x, q, one) = (BiPoly::x(), BiPoly::q(), BiPoly::one());
    let p = BiPoly::from_terms(e.exponents().iter().map(|&a| ((a, a), 1)));
    let one_minus_x = &one - &x;
    let inner = &one + &(&x * &p);
    let x2q = &(&x * &x) * &q;
    let base = &(&one - &(&x * &(&one + &q))) + &(&one_minus_x * &x2q);
    let num = &one_minus_x * &inner;
    let den = &(&base * &inner) - &(&one_minus_x * &x2q);
    (num, den)
}

/// Series of the closed form up to weight `max_weight`.
pub fn family_gf(e: &ExponentSet, max_weight: usize) -> Result<BiSeries> {
    let (num, den) = family_rational(e);
    series_div(&num, &den, max_weight)
}

pub fn family_gf_special(kind: FamilyKind, max_weight: usize) -> Result<BiSeries> {
    family_gf(&kind.exponent_set()?, max_weight)
}
