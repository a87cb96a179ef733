//! Exact determinants over an integral domain.
//!
//! Small matrices use Laplace expansion memoised over column subsets;
//! larger ones use fraction-free (Bareiss) elimination, whose divisions are
//! all exact.

use crate::series::Ring;
use crate::{Error, Result};

/// Largest forbidden set the engine accepts.
pub const MAX_SET_SIZE: usize = 12;

/// Largest matrix [`det`] accepts: the bordered system of a maximal set.
pub const MAX_DET_SIZE: usize = MAX_SET_SIZE + 1;

/// Matrices up to this size go through cofactor expansion.
const COFACTOR_MAX: usize = 8;

fn check_square<R>(rows: &[Vec<R>]) -> Result<usize> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::NotSquare);
    }
    Ok(n)
}

/// Determinant of a square matrix given by rows. The empty matrix has
/// determinant one.
pub fn det<R: Ring>(rows: &[Vec<R>]) -> Result<R> {
    let n = check_square(rows)?;
    if n > MAX_DET_SIZE {
        return Err(Error::SizeLimitExceeded {
            size: n,
            limit: MAX_DET_SIZE,
        });
    }
    Ok(if n <= COFACTOR_MAX {
        det_cofactor(rows)
    } else {
        det_bareiss(rows)
    })
}

/// Laplace expansion along successive rows, sharing minors across
/// expansions: the minor on the first `r` rows and a given set of `r`
/// columns is computed once. Costs `O(2^n n)` ring operations.
///
/// Panics if the matrix is not square or has more than 20 rows.
pub fn det_cofactor<R: Ring>(rows: &[Vec<R>]) -> R {
    let n = rows.len();
    assert!(n <= 20, "cofactor expansion is limited to 20 rows");
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    let full = (1usize << n) - 1;
    // minors[mask]: det of rows 0..popcount(mask) against the columns in mask
    let mut minors: Vec<Option<R>> = vec![None; full + 1];
    minors[0] = Some(R::one());
    for mask in 1..=full {
        let row = mask.count_ones() as usize - 1;
        let mut acc = R::zero();
        let mut rank = 0;
        for (col, entry) in rows[row].iter().enumerate() {
            if mask & (1 << col) == 0 {
                continue;
            }
            let sub = &minors[mask & !(1 << col)];
            if let Some(sub) = sub {
                if !entry.is_zero() && !sub.is_zero() {
                    let term = entry.times(sub);
                    // expanding along the last row of the minor
                    acc = if (row + rank).is_multiple_of(2) {
                        acc.plus(&term)
                    } else {
                        acc.minus(&term)
                    };
                }
            }
            rank += 1;
        }
        minors[mask] = Some(acc);
    }
    minors[full].take().expect("full minor computed")
}

/// Bareiss elimination with row pivoting.
///
/// Panics if the matrix is not square, or if an intermediate division is
/// inexact (which cannot happen over an integral domain).
pub fn det_bareiss<R: Ring>(rows: &[Vec<R>]) -> R {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return R::one();
    }
    let mut m: Vec<Vec<R>> = rows.to_vec();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = m[i][j].times(&m[k][k]).minus(&m[i][k].times(&m[k][j]));
                m[i][j] = cross
                    .exact_div(&prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.negated()
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{BiPoly, UniPoly};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    /// Leibniz formula over all permutations.
    fn det_leibniz(rows: &[Vec<BigInt>]) -> BigInt {
        fn permute(
            rows: &[Vec<BigInt>],
            row: usize,
            used: &mut Vec<bool>,
            sign: i64,
            acc: BigInt,
            total: &mut BigInt,
        ) {
            let n = rows.len();
            if row == n {
                *total += acc * sign;
                return;
            }
            for col in 0..n {
                if used[col] {
                    continue;
                }
                // inversions contributed by placing `col` at this row
                let inv = (col + 1..n).filter(|&c| used[c]).count() as i64;
                used[col] = true;
                let s = if inv % 2 == 0 { sign } else { -sign };
                permute(rows, row + 1, used, s, &acc * &rows[row][col], total);
                used[col] = false;
            }
        }
        let mut total = BigInt::from(0);
        permute(rows, 0, &mut vec![false; rows.len()], 1, BigInt::from(1), &mut total);
        total
    }

    #[test]
    fn small_integer_determinants() {
        let m = int_matrix(&[&[1, 2], &[3, 4]]);
        assert_eq!(det(&m).unwrap(), BigInt::from(-2));
        assert_eq!(det_bareiss(&m), BigInt::from(-2));
        let m = int_matrix(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        assert_eq!(det_cofactor(&m), BigInt::from(-2));
        assert_eq!(det_bareiss(&m), BigInt::from(-2));
        assert_eq!(det_leibniz(&m), BigInt::from(-2));
        let singular = int_matrix(&[&[1, 2], &[2, 4]]);
        assert_eq!(det_bareiss(&singular), BigInt::from(0));
        assert_eq!(det_cofactor(&singular), BigInt::from(0));
    }

    #[test]
    fn one_by_one_and_identity() {
        let p = BiPoly::from_terms([((0, 0), 1), ((2, 1), 1)]);
        assert_eq!(det(&[vec![p.clone()]]).unwrap(), p);
        for n in 0..=MAX_DET_SIZE {
            let id: Vec<Vec<BiPoly>> = (0..n)
                .map(|i| (0..n).map(|j| if i == j { BiPoly::one() } else { BiPoly::zero() }).collect())
                .collect();
            assert_eq!(det(&id).unwrap(), BiPoly::one(), "n={n}");
        }
    }

    #[test]
    fn size_limits() {
        let n = MAX_DET_SIZE + 1;
        let id: Vec<Vec<UniPoly>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { UniPoly::one() } else { UniPoly::zero() }).collect())
            .collect();
        assert_eq!(det(&id), Err(Error::SizeLimitExceeded { size: n, limit: MAX_DET_SIZE }));
        let ragged = vec![vec![UniPoly::one(), UniPoly::zero()], vec![UniPoly::one()]];
        assert_eq!(det(&ragged), Err(Error::NotSquare));
    }

    #[test]
    fn bareiss_needs_pivoting() {
        let m = int_matrix(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
        assert_eq!(det_bareiss(&m), BigInt::from(-1));
        assert_eq!(det_cofactor(&m), BigInt::from(-1));
    }

    fn poly_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<BiPoly>>> {
        let entry = prop::collection::vec(((0u32..3, 0u32..3), -3i64..=3), 0..3)
            .prop_map(BiPoly::from_terms);
        prop::collection::vec(prop::collection::vec(entry, n), n)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn cofactor_matches_bareiss_on_polynomials(m in (1usize..=5).prop_flat_map(poly_matrix)) {
            prop_assert_eq!(det_cofactor(&m), det_bareiss(&m));
        }

        #[test]
        fn cofactor_matches_leibniz_on_integers(
            m in (1usize..=5).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-9i64..=9, n), n))
        ) {
            let m: Vec<Vec<BigInt>> = m.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
            let expect = det_leibniz(&m);
            prop_assert_eq!(det_cofactor(&m), expect.clone());
            prop_assert_eq!(det_bareiss(&m), expect);
        }
    }
}
