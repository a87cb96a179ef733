use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{power_name, write_term, UniPoly};

/// Sparse polynomial in `x` and `q` with integer coefficients.
///
/// Terms are keyed by `(x_degree, q_degree)`. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * x^x_deg * q^q_deg`.
    pub fn monomial(c: impl Into<BigInt>, x_deg: u32, q_deg: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((x_deg, q_deg), c);
        }
        Self { terms }
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn q() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// Builds a polynomial from `((x_deg, q_deg), coeff)` pairs; repeated
    /// monomials are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = ((u32, u32), C)>) -> Self {
        let mut p = Self::zero();
        for (key, c) in terms {
            p.add_term(key, c.into());
        }
        p
    }

    fn add_term(&mut self, key: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x_deg: u32, q_deg: u32) -> BigInt {
        self.terms.get(&(x_deg, q_deg)).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0, 0)
    }

    /// Nonzero terms in increasing `(x_degree, q_degree)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Highest power of `x` present, `None` for the zero polynomial.
    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, _)| a).max()
    }

    pub fn q_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, b)| b).max()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Specialises `x = 1`, leaving a polynomial in `q`.
    pub fn at_x_one(&self) -> UniPoly {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (&(_, b), c) in &self.terms {
            let b = b as usize;
            if coeffs.len() <= b {
                coeffs.resize(b + 1, BigInt::zero());
            }
            coeffs[b] += c;
        }
        UniPoly::new(coeffs)
    }

    /// Exact quotient `self / divisor` in `Z[x, q]`, or `None` when the
    /// division leaves a remainder.
    ///
    /// Uses lexicographic order with `x > q`; for an exact quotient the
    /// leading term of the dividend is always divisible by the leading term
    /// of the divisor.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (&(dx, dq), dc) = divisor.terms.iter().next_back()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((&(rx, rq), rc)) = rem.terms.iter().next_back() {
            if rx < dx || rq < dq {
                return None;
            }
            let (c, r) = rc.div_rem(dc);
            if !r.is_zero() {
                return None;
            }
            let step = Self::monomial(c, rx - dx, rq - dq);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Some(quot)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&(a, b), c)) in self.terms.iter().enumerate() {
            let mono = format!("{}{}", power_name('x', a), power_name('q', b));
            write_term(f, i == 0, c, &mono)?;
        }
        Ok(())
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, -c);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        -&self
    }
}

impl super::Ring for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn one() -> Self {
        BiPoly::one()
    }
    fn is_zero(&self) -> bool {
        BiPoly::is_zero(self)
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
        BiPoly::exact_div(self, divisor)
    }
}

impl From<&UniPoly> for BiPoly {
    /// Embeds a polynomial in `q` with no `x` dependence.
    fn from(p: &UniPoly) -> Self {
        BiPoly::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(b, c)| ((0, b as u32), c.clone())),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(terms: &[((u32, u32), i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn add_cancels() {
        let a = p(&[((1, 0), 1), ((2, 1), 1)]);
        let b = p(&[((1, 0), -1)]);
        assert_eq!(&a + &b, p(&[((2, 1), 1)]));
    }

    #[test]
    fn add_zero_is_identity() {
        let a = p(&[((0, 0), 3), ((4, 2), -5)]);
        assert_eq!(&a + &BiPoly::zero(), a);
    }

    #[test]
    fn add_doubles() {
        let a = p(&[((0, 0), 1), ((2, 1), 1)]);
        assert_eq!(&a + &a, p(&[((0, 0), 2), ((2, 1), 2)]));
    }

    #[test]
    fn mul_examples() {
        let one_minus_x = p(&[((0, 0), 1), ((1, 0), -1)]);
        let one_plus_x = p(&[((0, 0), 1), ((1, 0), 1)]);
        assert_eq!(&one_minus_x * &one_plus_x, p(&[((0, 0), 1), ((2, 0), -1)]));

        let xq = p(&[((1, 1), 1)]);
        assert_eq!(&BiPoly::x() * &xq.pow(2), p(&[((3, 2), 1)]));

        let a = p(&[((0, 0), 1), ((2, 1), 1)]);
        let b = p(&[((0, 0), 1), ((2, 1), -1)]);
        assert_eq!(&a * &b, p(&[((0, 0), 1), ((4, 2), -1)]));
    }

    #[test]
    fn zero_coefficients_are_never_stored() {
        let a = p(&[((3, 1), 2), ((3, 1), -2)]);
        assert!(a.is_zero());
        assert_eq!(a.num_terms(), 0);
        assert_eq!(BiPoly::monomial(0, 5, 5), BiPoly::zero());
    }

    #[test]
    fn display() {
        let a = p(&[((0, 0), 1), ((2, 1), 1), ((4, 2), -3), ((1, 0), -1)]);
        assert_eq!(a.to_string(), "1 - x + x^2q - 3x^4q^2");
        assert_eq!(BiPoly::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let a = p(&[((0, 0), 1), ((1, 0), -1), ((1, 1), -1)]);
        let b = p(&[((0, 0), 2), ((3, 1), 7)]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(prod.exact_div(&b), Some(a.clone()));
        assert_eq!(a.exact_div(&b), None);
        assert_eq!(BiPoly::x().exact_div(&BiPoly::constant(2)), None);
    }

    #[test]
    fn at_x_one_collects_by_q() {
        let a = p(&[((0, 0), 1), ((2, 1), 1), ((5, 1), 2)]);
        assert_eq!(a.at_x_one(), UniPoly::from_i64s(&[1, 3]));
    }

    fn small_poly() -> impl Strategy<Value = BiPoly> {
        prop::collection::vec(((0u32..4, 0u32..4), -5i64..=5), 0..6).prop_map(BiPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, BiPoly::zero());
            prop_assert_eq!(&a * &BiPoly::one(), a.clone());
        }

        #[test]
        fn exact_div_inverts_mul(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b), Some(a));
        }
    }
}
