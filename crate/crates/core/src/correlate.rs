//! Words, substring containment and correlation polynomials.
//!
//! A [`Word`] is a nonempty sequence of positive integers. It stands for a
//! composition (parts summing to its weight), for a forbidden substring, or
//! for a string over the alphabet `1..=n`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::series::{BiPoly, UniPoly};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyWord);
        }
        if let Some(position) = parts.iter().position(|&p| p == 0) {
            return Err(Error::ZeroPart { position });
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    /// Weight of the last `len` parts.
    pub fn suffix_weight(&self, len: usize) -> u64 {
        self.0[self.0.len() - len..].iter().map(|&p| u64::from(p)).sum()
    }

    pub fn max_part(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn contains(&self, b: &Word) -> bool {
        contains(self.parts(), b.parts())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses whitespace-separated positive integers, e.g. `"2 1 2"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split_whitespace()
            .map(|tok| tok.parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPart(s.trim().to_string()))?;
        Word::new(parts)
    }
}

/// True iff `b` occurs as a contiguous block of `s`.
pub fn contains(s: &[u32], b: &[u32]) -> bool {
    !b.is_empty() && s.len() >= b.len() && s.windows(b.len()).any(|w| w == b)
}

/// A set of words, none of which is a substring of another.
///
/// The empty set is allowed and stands for the unconstrained problem.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ForbiddenSet {
    words: Vec<Word>,
}

impl ForbiddenSet {
    pub fn new(words: Vec<Word>) -> Result<Self> {
        validate_antichain(words)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Word> {
        self.words.iter()
    }

    pub fn max_letter(&self) -> u32 {
        self.words.iter().map(Word::max_part).max().unwrap_or(0)
    }
}

impl<'a> IntoIterator for &'a ForbiddenSet {
    type Item = &'a Word;
    type IntoIter = std::slice::Iter<'a, Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}

impl fmt::Display for ForbiddenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("}")
    }
}

/// Checks that no word repeats and none is a substring of another.
pub fn validate_antichain(words: Vec<Word>) -> Result<ForbiddenSet> {
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            if words[i] == words[j] {
                return Err(Error::DuplicateWord { first: i, second: j });
            }
            if words[j].contains(&words[i]) {
                return Err(Error::ContainmentViolation { inner: i, outer: j });
            }
            if words[i].contains(&words[j]) {
                return Err(Error::ContainmentViolation { inner: j, outer: i });
            }
        }
    }
    Ok(ForbiddenSet { words })
}

/// The correlation of `x1` against `x2`: one bit per shift of `x2` to the
/// left under `x1`, bit `j` set when the overlapping letters agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CorrelationBits(Vec<bool>);

impl CorrelationBits {
    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn get(&self, shift: usize) -> bool {
        self.0[shift]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Shifts whose bit is set.
    pub fn shifts(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &b)| b).map(|(j, _)| j)
    }
}

impl fmt::Display for CorrelationBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Bit `j` is set iff `x2`, right-aligned `j` positions before the end of
/// `x1`, agrees with `x1` wherever the two overlap. The result has one bit
/// per letter of `x1`; the last `j` letters of `x1` form the tail.
pub fn correlation_bits(x1: &Word, x2: &Word) -> CorrelationBits {
    let (a, b) = (x1.parts(), x2.parts());
    let m = a.len();
    let bits = (0..m)
        .map(|j| {
            // x2 covers positions end - b.len() .. end of x1
            let end = m - j;
            let offset = b.len() as isize - end as isize;
            let start = end.saturating_sub(b.len());
            (start..end).all(|p| a[p] == b[(p as isize + offset) as usize])
        })
        .collect();
    CorrelationBits(bits)
}

/// `sum_j c_j q^j` over the correlation bits of `x1` against `x2`.
pub fn correlation_poly_q(x1: &Word, x2: &Word) -> UniPoly {
    let bits = correlation_bits(x1, x2);
    UniPoly::new(
        bits.bits()
            .iter()
            .map(|&b| BigInt::from(u8::from(b)))
            .collect(),
    )
}

/// `sum_j c_j x^w(T_j) q^j`, where `T_j` is the last `j` parts of `x1`.
///
/// The power of `x` is the weight of the tail and the power of `q` its
/// number of parts.
pub fn correlation_poly_xq(x1: &Word, x2: &Word) -> BiPoly {
    let bits = correlation_bits(x1, x2);
    BiPoly::from_terms(bits.shifts().map(|j| {
        let w = u32::try_from(x1.suffix_weight(j)).expect("tail weight fits in u32");
        ((w, j as u32), 1)
    }))
}
