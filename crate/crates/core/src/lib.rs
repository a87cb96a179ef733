//! Exact generating functions for compositions and fixed-alphabet strings
//! that avoid a set of forbidden substrings.
//!
//! The crate is organised bottom-up:
//!
//! - [`series`]: exact bivariate polynomials and truncated power series over
//!   arbitrary-precision integers;
//! - [`correlate`]: words, substring containment and correlation polynomials;
//! - [`engine`]: correlation matrices, exact determinants and the
//!   determinant formulas for compositions (tracked by weight and number of
//!   parts) and for strings (tracked by length);
//! - [`family`]: the closed form for the family of words `2 1^(a-1) 2`;
//! - [`oracle`]: brute-force enumeration used to check every coefficient.
//!
//! ```
//! use avoidgf::{composition_gf, ForbiddenSet, Word};
//!
//! let set = ForbiddenSet::new(vec![
//!     Word::new(vec![2, 2]).unwrap(),
//!     Word::new(vec![2, 1, 2]).unwrap(),
//! ])
//! .unwrap();
//! let result = composition_gf(&set, 5).unwrap();
//! let row: Vec<i64> = (1..=5).map(|m| result.gf.coeff(5, m).try_into().unwrap()).collect();
//! assert_eq!(row, vec![1, 4, 3, 4, 1]);
//! ```

pub mod correlate;
pub mod engine;
mod error;
pub mod family;
pub mod oracle;
pub mod series;

pub use correlate::{ForbiddenSet, Word};
pub use engine::{composition_gf, string_gf, verify_proof_identities, AvoidanceResult};
pub use error::{Error, Result};
pub use family::{family_gf, ExponentSet, FamilyKind};
pub use series::{BiPoly, BiSeries, UniPoly, UniSeries};
