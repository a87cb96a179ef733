//! Brute-force enumeration of compositions and strings.
//!
//! Nothing here shares code with the determinant engine beyond the word
//! types: compositions are generated one part at a time and checked
//! directly for forbidden suffixes.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::correlate::ForbiddenSet;
use crate::series::BiSeries;
use crate::{Error, Result};

/// Largest weight the composition oracle will enumerate.
pub const MAX_ORACLE_WEIGHT: usize = 22;

/// Largest number of strings (`alphabet_size^max_length`) the string
/// oracle will enumerate.
pub const MAX_STRING_SPACE: u64 = 10_000_000;

/// Counts indexed by weight `n` and number of parts `m <= n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoefficientTriangle {
    rows: Vec<Vec<BigInt>>,
}

/// A cell where two triangles disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub weight: usize,
    pub length: usize,
    pub left: BigInt,
    pub right: BigInt,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "weight {}, length {}: {} vs {}",
            self.weight, self.length, self.left, self.right
        )
    }
}

impl CoefficientTriangle {
    pub fn zero(max_weight: usize) -> Self {
        Self {
            rows: (0..=max_weight).map(|n| vec![BigInt::zero(); n + 1]).collect(),
        }
    }

    fn from_counts(counts: Vec<Vec<u64>>) -> Self {
        Self {
            rows: counts
                .into_iter()
                .map(|row| row.into_iter().map(BigInt::from).collect())
                .collect(),
        }
    }

    pub fn max_weight(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn count(&self, weight: usize, length: usize) -> BigInt {
        self.rows
            .get(weight)
            .and_then(|r| r.get(length))
            .cloned()
            .unwrap_or_default()
    }

    pub fn row(&self, weight: usize) -> &[BigInt] {
        &self.rows[weight]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn row_total(&self, weight: usize) -> BigInt {
        self.rows[weight].iter().sum()
    }

    /// Every cell, within the common weight range, where the two differ.
    pub fn mismatches(&self, other: &Self) -> Vec<Mismatch> {
        let top = self.max_weight().min(other.max_weight());
        let mut out = Vec::new();
        for n in 0..=top {
            for m in 0..=n {
                let (l, r) = (&self.rows[n][m], &other.rows[n][m]);
                if l != r {
                    out.push(Mismatch {
                        weight: n,
                        length: m,
                        left: l.clone(),
                        right: r.clone(),
                    });
                }
            }
        }
        out
    }

    pub fn set(&mut self, weight: usize, length: usize, value: BigInt) {
        self.rows[weight][length] = value;
    }
}

impl From<&BiSeries> for CoefficientTriangle {
    fn from(s: &BiSeries) -> Self {
        Self {
            rows: s.rows().to_vec(),
        }
    }
}

/// Avoiders and quasi-avoiders found in one enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub avoiders: CoefficientTriangle,
    pub quasi: Vec<CoefficientTriangle>,
}

fn check_weight(max_weight: usize) -> Result<()> {
    if max_weight > MAX_ORACLE_WEIGHT {
        return Err(Error::BoundTooLarge {
            what: "oracle weight",
            requested: max_weight as u64,
            cap: MAX_ORACLE_WEIGHT as u64,
        });
    }
    Ok(())
}

/// Index of the forbidden word that is a suffix of `comp`, if any. At most
/// one can be, since the set is an antichain.
fn forbidden_suffix(set: &ForbiddenSet, comp: &[u32]) -> Option<usize> {
    set.iter().position(|w| comp.ends_with(w.parts()))
}

struct Walker<'a> {
    set: &'a ForbiddenSet,
    max_weight: usize,
    avoiders: Vec<Vec<u64>>,
    quasi: Vec<Vec<Vec<u64>>>,
    comp: Vec<u32>,
}

impl Walker<'_> {
    /// Visits every extension of the current avoider `comp` of weight
    /// `weight`. The only new occurrences an appended part can create end at
    /// the last position, so checking suffixes suffices.
    fn extend(&mut self, weight: usize) {
        for part in 1..=(self.max_weight - weight) {
            self.comp.push(part as u32);
            let total = weight + part;
            let len = self.comp.len();
            match forbidden_suffix(self.set, &self.comp) {
                None => {
                    self.avoiders[total][len] += 1;
                    self.extend(total);
                }
                Some(i) => self.quasi[i][total][len] += 1,
            }
            self.comp.pop();
        }
    }
}

fn triangle_counts(max_weight: usize) -> Vec<Vec<u64>> {
    (0..=max_weight).map(|n| vec![0; n + 1]).collect()
}

/// Enumerates every composition of weight at most `max_weight`, sorting
/// each into avoiders or quasi-avoiders of some `S_i`.
pub fn census(set: &ForbiddenSet, max_weight: usize) -> Result<Census> {
    check_weight(max_weight)?;
    let mut walker = Walker {
        set,
        max_weight,
        avoiders: triangle_counts(max_weight),
        quasi: vec![triangle_counts(max_weight); set.len()],
        comp: Vec::with_capacity(max_weight),
    };
    walker.avoiders[0][0] = 1;
    walker.extend(0);
    Ok(Census {
        avoiders: CoefficientTriangle::from_counts(walker.avoiders),
        quasi: walker
            .quasi
            .into_iter()
            .map(CoefficientTriangle::from_counts)
            .collect(),
    })
}

/// Compositions (including the empty one) containing no forbidden word.
pub fn enumerate_avoiders(set: &ForbiddenSet, max_weight: usize) -> Result<CoefficientTriangle> {
    Ok(census(set, max_weight)?.avoiders)
}

/// Compositions ending in the `index`-th forbidden word with no other
/// occurrence of any forbidden word.
pub fn enumerate_quasi_avoiders(
    set: &ForbiddenSet,
    index: usize,
    max_weight: usize,
) -> Result<CoefficientTriangle> {
    if index >= set.len() {
        return Err(Error::IndexOutOfRange {
            index,
            len: set.len(),
        });
    }
    Ok(census(set, max_weight)?.quasi.swap_remove(index))
}

/// Number of strings of each length `0..=max_length` over `1..=alphabet_size`
/// that contain no forbidden word.
pub fn enumerate_string_avoiders(
    set: &ForbiddenSet,
    alphabet_size: u32,
    max_length: usize,
) -> Result<Vec<u64>> {
    let space = u32::try_from(max_length)
        .ok()
        .and_then(|l| u64::from(alphabet_size).checked_pow(l));
    match space {
        Some(s) if s <= MAX_STRING_SPACE => {}
        _ => {
            return Err(Error::BoundTooLarge {
                what: "string space alphabet_size^max_length",
                requested: space.unwrap_or(u64::MAX),
                cap: MAX_STRING_SPACE,
            })
        }
    }
    fn extend(
        set: &ForbiddenSet,
        alphabet_size: u32,
        max_length: usize,
        s: &mut Vec<u32>,
        counts: &mut [u64],
    ) {
        if s.len() == max_length {
            return;
        }
        for letter in 1..=alphabet_size {
            s.push(letter);
            if forbidden_suffix(set, s).is_none() {
                counts[s.len()] += 1;
                extend(set, alphabet_size, max_length, s, counts);
            }
            s.pop();
        }
    }
    let mut counts = vec![0u64; max_length + 1];
    counts[0] = 1;
    extend(set, alphabet_size, max_length, &mut Vec::new(), &mut counts);
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlate::{contains, Word};
    use std::collections::HashSet;

    fn w(parts: &[u32]) -> Word {
        Word::new(parts.to_vec()).unwrap()
    }

    fn set(words: &[&[u32]]) -> ForbiddenSet {
        ForbiddenSet::new(words.iter().map(|p| w(p)).collect()).unwrap()
    }

    fn big(v: &[u64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    /// All compositions of `n`, one per subset of the `n - 1` gaps.
    fn all_compositions(n: usize) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![vec![]];
        }
        (0u32..1 << (n - 1))
            .map(|cuts| {
                let mut comp = vec![];
                let mut run = 1;
                for gap in 0..n - 1 {
                    if cuts & (1 << gap) != 0 {
                        comp.push(run);
                        run = 1;
                    } else {
                        run += 1;
                    }
                }
                comp.push(run);
                comp
            })
            .collect()
    }

    fn occurrences(set: &ForbiddenSet, comp: &[u32]) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for (i, word) in set.iter().enumerate() {
            let l = word.len();
            if comp.len() < l {
                continue;
            }
            for start in 0..=comp.len() - l {
                if comp[start..start + l] == *word.parts() {
                    out.push((i, start + l));
                }
            }
        }
        out
    }

    fn is_avoider(set: &ForbiddenSet, comp: &[u32]) -> bool {
        set.iter().all(|word| !contains(comp, word.parts()))
    }

    fn quasi_index(set: &ForbiddenSet, comp: &[u32]) -> Option<usize> {
        match occurrences(set, comp)[..] {
            [(i, end)] if end == comp.len() => Some(i),
            _ => None,
        }
    }

    #[test]
    fn example_one_weight_five() {
        let t = enumerate_avoiders(&set(&[&[2, 2], &[2, 1, 2]]), 5).unwrap();
        assert_eq!(t.row(5), &big(&[0, 1, 4, 3, 4, 1])[..]);
        assert_eq!(t.row_total(5), BigInt::from(13));
    }

    #[test]
    fn example_two_weight_four() {
        let t = enumerate_avoiders(&set(&[&[2, 2], &[2, 1, 1, 2], &[2, 1, 1, 1, 1, 2]]), 4).unwrap();
        assert_eq!(t.row_total(4), BigInt::from(7));
        assert_eq!(t.count(4, 2), BigInt::from(2));
    }

    #[test]
    fn empty_set_gives_binomials() {
        let t = enumerate_avoiders(&ForbiddenSet::empty(), 6).unwrap();
        assert_eq!(t.row(6), &big(&[0, 1, 5, 10, 10, 5, 1])[..]);
        assert_eq!(t.row_total(6), BigInt::from(32));
        assert_eq!(t.count(0, 0), BigInt::from(1));
    }

    #[test]
    fn quasi_avoiders_of_two_two() {
        let s = set(&[&[2, 2]]);
        let t = enumerate_quasi_avoiders(&s, 0, 5).unwrap();
        assert_eq!(t.row(4), &big(&[0, 0, 1, 0, 0])[..]);
        assert_eq!(t.row(5), &big(&[0, 0, 0, 1, 0, 0])[..]);
        for n in 0..4 {
            assert_eq!(t.row_total(n), BigInt::from(0));
        }
    }

    #[test]
    fn oracle_errors() {
        let s = set(&[&[2, 2]]);
        assert!(matches!(enumerate_avoiders(&s, 23), Err(Error::BoundTooLarge { .. })));
        assert_eq!(
            enumerate_quasi_avoiders(&s, 1, 4),
            Err(Error::IndexOutOfRange { index: 1, len: 1 })
        );
        assert!(enumerate_string_avoiders(&s, 10, 8).is_err());
        assert!(enumerate_string_avoiders(&s, 10, 7).is_ok());
    }

    #[test]
    fn strings() {
        let fib = enumerate_string_avoiders(&set(&[&[1, 1]]), 2, 4).unwrap();
        assert_eq!(fib, vec![1, 2, 3, 5, 8]);
        let free = enumerate_string_avoiders(&ForbiddenSet::empty(), 3, 4).unwrap();
        assert_eq!(free[4], 81);
        let ones = enumerate_string_avoiders(&set(&[&[1]]), 2, 9).unwrap();
        assert!(ones.iter().all(|&c| c == 1));
    }

    #[test]
    fn matches_exhaustive_filter() {
        let sets = [
            set(&[&[2, 2], &[2, 1, 2]]),
            set(&[&[1]]),
            set(&[&[1, 1], &[2, 3]]),
            set(&[&[1, 2, 1], &[2, 1, 1], &[3]]),
        ];
        for s in &sets {
            let c = census(s, 10).unwrap();
            for n in 0..=10 {
                let mut avoid = vec![0u64; n + 1];
                let mut quasi = vec![vec![0u64; n + 1]; s.len()];
                for comp in all_compositions(n) {
                    if is_avoider(s, &comp) {
                        avoid[comp.len()] += 1;
                    } else if let Some(i) = quasi_index(s, &comp) {
                        quasi[i][comp.len()] += 1;
                    }
                }
                assert_eq!(c.avoiders.row(n), &big(&avoid)[..], "{s} n={n}");
                for (i, q) in quasi.iter().enumerate() {
                    assert_eq!(c.quasi[i].row(n), &big(q)[..], "{s} B_{i} n={n}");
                }
            }
        }
    }

    #[test]
    fn growth_set_equation() {
        // A u B_1 u ... u B_k = {e} u (A u B - {e})^{+1} u (A x {1})
        for s in [set(&[&[2, 2], &[2, 1, 2]]), set(&[&[1]]), set(&[&[1, 3], &[3, 1, 1]])] {
            let in_union = |c: &[u32]| is_avoider(&s, c) || quasi_index(&s, c).is_some();
            for n in 1..=10 {
                let lhs: HashSet<Vec<u32>> =
                    all_compositions(n).into_iter().filter(|c| in_union(c)).collect();
                let mut rhs = HashSet::new();
                for c in all_compositions(n - 1) {
                    if !c.is_empty() && in_union(&c) {
                        let mut bumped = c.clone();
                        *bumped.last_mut().unwrap() += 1;
                        rhs.insert(bumped);
                    }
                    if is_avoider(&s, &c) {
                        let mut appended = c.clone();
                        appended.push(1);
                        rhs.insert(appended);
                    }
                }
                assert_eq!(lhs, rhs, "{s} n={n}");
            }
        }
    }

    #[test]
    fn rows_bounded_by_all_compositions() {
        let c = census(&set(&[&[1, 2], &[2, 2, 2]]), 14).unwrap();
        for n in 1..=14 {
            assert!(c.avoiders.row_total(n) <= BigInt::from(1u64 << (n - 1)));
        }
    }
}
