//! Exact arithmetic on bivariate polynomials in `x` (weight) and `q`
//! (length), their univariate restriction in `q`, and power series
//! truncated at a weight (or length) bound.
//!
//! Every coefficient is a [`BigInt`]; nothing is ever rounded.

mod bipoly;
mod power;
mod unipoly;

pub use bipoly::BiPoly;
pub use power::{series_div, uni_series_div, BiSeries, UniSeries};
pub use unipoly::UniPoly;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Truncation bound used when none is given.
pub const DEFAULT_MAX_WEIGHT: usize = 20;

/// Commutative ring with exact division, the coefficient domain of the
/// determinant routines.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// `self / divisor` when the division is exact, `None` otherwise.
    fn exact_div(&self, divisor: &Self) -> Option<Self>;
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if Zero::is_zero(divisor) {
            return None;
        }
        let (quot, rem) = self.div_rem(divisor);
        Zero::is_zero(&rem).then_some(quot)
    }
}

/// Returns the inverse of a unit constant term, i.e. the term itself.
pub(crate) fn unit_inverse(c: &BigInt) -> crate::Result<BigInt> {
    if c.is_one() || (-c).is_one() {
        Ok(c.clone())
    } else {
        Err(crate::Error::NonUnitConstant(c.to_string()))
    }
}

/// Writes `coeff * mono` in the usual polynomial style, given the rendered
/// monomial (empty for the constant monomial).
pub(crate) fn write_term(
    f: &mut std::fmt::Formatter<'_>,
    first: bool,
    coeff: &BigInt,
    mono: &str,
) -> std::fmt::Result {
    use num_traits::Signed;
    let abs = coeff.abs();
    if first {
        if coeff.is_negative() {
            f.write_str("-")?;
        }
    } else if coeff.is_negative() {
        f.write_str(" - ")?;
    } else {
        f.write_str(" + ")?;
    }
    if mono.is_empty() {
        write!(f, "{abs}")
    } else if abs.is_one() {
        f.write_str(mono)
    } else {
        write!(f, "{abs}{mono}")
    }
}

pub(crate) fn power_name(var: char, exp: u32) -> String {
    match exp {
        0 => String::new(),
        1 => var.to_string(),
        e => format!("{var}^{e}"),
    }
}
