//! Computing a query and the serializable result shared by all formats.

use avoidgf::engine::{composition_gf, string_gf, verify_proof_identities};
use avoidgf::family::family_gf;
use avoidgf::oracle::{census, enumerate_string_avoiders, CoefficientTriangle};
use avoidgf::{BiSeries, ForbiddenSet};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, EXIT_INVARIANT, EXIT_MISMATCH};
use crate::query::{Forbidden, Mode, Query};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coefficient {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<usize>,
    pub length: usize,
    /// Decimal string, since counts outgrow 64 bits.
    pub count: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiSeries {
    pub word: Vec<u32>,
    pub coefficients: Vec<Coefficient>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Identities {
    pub growth: bool,
    /// One entry per forbidden word.
    pub tails: Vec<bool>,
    /// Closed form against the determinant formula, for exponent sets.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<bool>,
}

impl Identities {
    pub fn all_pass(&self) -> bool {
        self.growth && self.tails.iter().all(|&t| t) && self.closed_form != Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleMismatch {
    /// `"avoiders"` or the quasi-avoider word, e.g. `"2 1 2"`.
    pub series: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<usize>,
    pub length: usize,
    pub engine: String,
    pub oracle: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    #[serde(rename = "match")]
    pub matches: bool,
    /// Number of coefficients compared.
    pub checked: usize,
    pub mismatches: Vec<OracleMismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub mode: String,
    pub forbidden: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponents: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphabet_size: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_weight: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_length: Option<usize>,
    pub coefficients: Vec<Coefficient>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub quasi: Vec<QuasiSeries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identities: Option<Identities>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
}

impl Report {
    /// 0, or the status for a failed check. Identity failures outrank
    /// oracle mismatches.
    pub fn exit_code(&self) -> u8 {
        if self.identities.as_ref().is_some_and(|i| !i.all_pass()) {
            EXIT_INVARIANT
        } else if self.oracle.as_ref().is_some_and(|o| !o.matches) {
            EXIT_MISMATCH
        } else {
            0
        }
    }

    pub fn is_strings(&self) -> bool {
        self.alphabet_size.is_some()
    }

    /// Rebuilds the coefficient triangle of a compositions report.
    pub fn triangle(&self) -> Result<CoefficientTriangle, CliError> {
        triangle_of(&self.coefficients, self.max_weight.unwrap_or(0))
    }
}

pub(crate) fn triangle_of(coefficients: &[Coefficient], max_weight: usize) -> Result<CoefficientTriangle, CliError> {
    let mut t = CoefficientTriangle::zero(max_weight);
    for c in coefficients {
        let weight = c
            .weight
            .ok_or_else(|| CliError::Validation("coefficient without a weight".into()))?;
        if weight > max_weight || c.length > weight {
            return Err(CliError::Validation(format!(
                "coefficient at weight {weight}, length {} is outside the triangle",
                c.length
            )));
        }
        let count: BigInt = c
            .count
            .parse()
            .map_err(|_| CliError::Validation(format!("count {:?} is not an integer", c.count)))?;
        t.set(weight, c.length, count);
    }
    Ok(t)
}

fn triangle_entries(rows: &[Vec<BigInt>]) -> Vec<Coefficient> {
    rows.iter()
        .enumerate()
        .flat_map(|(n, row)| {
            row.iter().enumerate().map(move |(m, c)| Coefficient {
                weight: Some(n),
                length: m,
                count: c.to_string(),
            })
        })
        .collect()
}

fn compare(series: String, engine: &BiSeries, oracle: &CoefficientTriangle, out: &mut OracleCheck) {
    out.checked += engine.rows().iter().map(Vec::len).sum::<usize>();
    for m in CoefficientTriangle::from(engine).mismatches(oracle) {
        out.mismatches.push(OracleMismatch {
            series: series.clone(),
            weight: Some(m.weight),
            length: m.length,
            engine: m.left.to_string(),
            oracle: m.right.to_string(),
        });
    }
}

fn word_lists(set: &ForbiddenSet) -> Vec<Vec<u32>> {
    set.iter().map(|w| w.parts().to_vec()).collect()
}

fn compositions(q: &Query) -> Result<Report, CliError> {
    let set = q.forbidden.words();
    let n = q.max_weight;
    let result = composition_gf(&set, n)?;
    let exponents = match &q.forbidden {
        Forbidden::Exponents(e) => Some(e),
        Forbidden::Words(_) => None,
    };
    let closed = match (q.mode, exponents) {
        (Mode::Family | Mode::Verify, Some(e)) => Some(family_gf(e, n)?),
        _ => None,
    };
    let gf = match (q.mode, &closed) {
        (Mode::Family, Some(c)) => c,
        _ => &result.gf,
    };

    let identities = if q.mode == Mode::Verify {
        let r = verify_proof_identities(&result, &set)?;
        Some(Identities {
            growth: r.growth,
            tails: r.tails,
            closed_form: closed.as_ref().map(|c| *c == result.gf),
        })
    } else {
        None
    };

    let oracle = if q.run_oracle {
        let truth = census(&set, n)?;
        let mut check = OracleCheck {
            matches: true,
            checked: 0,
            mismatches: Vec::new(),
        };
        compare("avoiders".into(), gf, &truth.avoiders, &mut check);
        if q.mode == Mode::Verify || q.show_quasi {
            for ((w, b), t) in set.iter().zip(&result.quasi).zip(&truth.quasi) {
                compare(w.to_string(), b, t, &mut check);
            }
        }
        check.matches = check.mismatches.is_empty();
        Some(check)
    } else {
        None
    };

    let quasi = if q.show_quasi {
        set.iter()
            .zip(&result.quasi)
            .map(|(w, b)| QuasiSeries {
                word: w.parts().to_vec(),
                coefficients: triangle_entries(b.rows()),
            })
            .collect()
    } else {
        Vec::new()
    };

    Ok(Report {
        mode: q.mode.name().into(),
        forbidden: word_lists(&set),
        exponents: exponents.map(|e| e.exponents().to_vec()),
        alphabet_size: None,
        max_weight: Some(n),
        max_length: None,
        coefficients: triangle_entries(gf.rows()),
        quasi,
        identities,
        oracle,
    })
}

fn strings(q: &Query) -> Result<Report, CliError> {
    let set = q.forbidden.words();
    let alphabet = q.alphabet_size.expect("strings queries carry an alphabet");
    let series = string_gf(&set, alphabet, q.max_length)?;
    let oracle = if q.run_oracle {
        let truth = enumerate_string_avoiders(&set, alphabet, q.max_length)?;
        let mismatches: Vec<OracleMismatch> = series
            .coeffs()
            .iter()
            .zip(&truth)
            .enumerate()
            .filter(|(_, (a, &b))| **a != BigInt::from(b))
            .map(|(l, (a, b))| OracleMismatch {
                series: "avoiders".into(),
                weight: None,
                length: l,
                engine: a.to_string(),
                oracle: b.to_string(),
            })
            .collect();
        Some(OracleCheck {
            matches: mismatches.is_empty(),
            checked: truth.len(),
            mismatches,
        })
    } else {
        None
    };
    Ok(Report {
        mode: q.mode.name().into(),
        forbidden: word_lists(&set),
        exponents: None,
        alphabet_size: Some(alphabet),
        max_weight: None,
        max_length: Some(q.max_length),
        coefficients: series
            .coeffs()
            .iter()
            .enumerate()
            .map(|(l, c)| Coefficient {
                weight: None,
                length: l,
                count: c.to_string(),
            })
            .collect(),
        quasi: Vec::new(),
        identities: None,
        oracle,
    })
}

/// Runs the computation behind a query.
pub fn compute(q: &Query) -> Result<Report, CliError> {
    match q.mode {
        Mode::Strings => strings(q),
        _ => compositions(q),
    }
}
