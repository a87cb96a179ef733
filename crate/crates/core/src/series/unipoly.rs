use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{power_name, write_term};

/// Dense polynomial in `q` with integer coefficients, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    /// `c * q^deg`.
    pub fn monomial(c: impl Into<BigInt>, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c.into();
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, deg: usize) -> BigInt {
        self.coeffs.get(deg).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return self.is_zero().then(Self::zero);
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let (c, r) = rem[k + dd].div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        rem.iter().all(Zero::is_zero).then(|| Self::new(quot))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write_term(f, first, c, &power_name('q', deg as u32))?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl super::Ring for UniPoly {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn one() -> Self {
        UniPoly::one()
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
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
        UniPoly::exact_div(self, divisor)
    }
}
