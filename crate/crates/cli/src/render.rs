use std::fmt::Write as _;

use avoidgf::UniPoly;
use num_bigint::BigInt;

use crate::error::CliError;
use crate::query::Format;
use crate::report::{Coefficient, Report};

fn words_label(words: &[Vec<u32>]) -> String {
    let words: Vec<String> = words
        .iter()
        .map(|w| w.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
        .collect();
    format!("{{{}}}", words.join("; "))
}

fn joined(parts: &[u32]) -> String {
    parts.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn rows_by_weight(coefficients: &[Coefficient]) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for c in coefficients {
        let n = c.weight.unwrap_or(0);
        if rows.len() <= n {
            rows.resize(n + 1, Vec::new());
        }
        let row = &mut rows[n];
        if row.len() <= c.length {
            row.resize(c.length + 1, BigInt::default());
        }
        row[c.length] = c.count.parse().unwrap_or_default();
    }
    rows
}

fn triangle_table(out: &mut String, coefficients: &[Coefficient]) {
    let rows = rows_by_weight(coefficients);
    let width = (rows.len().saturating_sub(1)).to_string().len().max(1);
    let _ = writeln!(out, "{:>width$} | coefficient of x^n", "n");
    for (n, row) in rows.into_iter().enumerate() {
        let _ = writeln!(out, "{n:>width$} | {}", UniPoly::new(row));
    }
}

fn checks_table(out: &mut String, report: &Report) {
    if let Some(id) = &report.identities {
        let verdict = |ok: bool| if ok { "pass" } else { "FAIL" };
        let _ = writeln!(out, "growth identity: {}", verdict(id.growth));
        for (w, &ok) in report.forbidden.iter().zip(&id.tails) {
            let _ = writeln!(out, "tail identity for {}: {}", joined(w), verdict(ok));
        }
        if let Some(ok) = id.closed_form {
            let _ = writeln!(out, "closed form vs determinant formula: {}", verdict(ok));
        }
    }
    if let Some(o) = &report.oracle {
        if o.matches {
            let _ = writeln!(out, "oracle: all {} coefficients match", o.checked);
        } else {
            let _ = writeln!(out, "oracle: {} of {} coefficients differ", o.mismatches.len(), o.checked);
            for m in &o.mismatches {
                let at = match m.weight {
                    Some(w) => format!("weight {w}, length {}", m.length),
                    None => format!("length {}", m.length),
                };
                let _ = writeln!(out, "  {} at {at}: engine {}, oracle {}", m.series, m.engine, m.oracle);
            }
        }
    }
    if report.mode == "verify" {
        let identities = report.identities.as_ref().is_some_and(|i| i.all_pass());
        let oracle = report.oracle.as_ref().is_some_and(|o| o.matches);
        let _ = writeln!(
            out,
            "{}; {}",
            if identities { "all identities pass" } else { "identity failure" },
            if oracle { "oracle match" } else { "oracle mismatch" }
        );
    }
}

fn table(report: &Report) -> String {
    let mut out = String::new();
    let set = words_label(&report.forbidden);
    if let Some(a) = report.alphabet_size {
        let _ = writeln!(
            out,
            "strings over 1..={a} avoiding {set}, length <= {}",
            report.max_length.unwrap_or(0)
        );
        let width = report.coefficients.len().saturating_sub(1).to_string().len();
        let _ = writeln!(out, "{:>width$} | count", "l");
        for c in &report.coefficients {
            let _ = writeln!(out, "{:>width$} | {}", c.length, c.count);
        }
    } else if report.mode == "verify" {
        let _ = writeln!(out, "verify {set} through weight {}", report.max_weight.unwrap_or(0));
    } else {
        let _ = writeln!(
            out,
            "compositions avoiding {set}, weight <= {}",
            report.max_weight.unwrap_or(0)
        );
        triangle_table(&mut out, &report.coefficients);
    }
    for q in &report.quasi {
        let _ = writeln!(out, "\nending in {} and avoiding the rest", joined(&q.word));
        triangle_table(&mut out, &q.coefficients);
    }
    if report.identities.is_some() || report.oracle.is_some() {
        if report.mode != "verify" {
            out.push('\n');
        }
        checks_table(&mut out, report);
    }
    out
}

fn csv_block(out: &mut String, coefficients: &[Coefficient], strings: bool) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Invariant(e.to_string());
    if strings {
        w.write_record(["length", "count"]).map_err(io)?;
    } else {
        w.write_record(["weight", "length", "count"]).map_err(io)?;
    }
    for c in coefficients {
        let length = c.length.to_string();
        if strings {
            w.write_record([length.as_str(), &c.count]).map_err(io)?;
        } else {
            let weight = c.weight.unwrap_or(0).to_string();
            w.write_record([weight.as_str(), &length, &c.count]).map_err(io)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| CliError::Invariant(e.to_string()))?;
    out.push_str(&String::from_utf8(bytes).expect("csv output is utf-8"));
    Ok(())
}

/// Main triangle first; quasi series and check results follow as
/// `#`-prefixed comment lines and further blocks.
fn csv(report: &Report) -> Result<String, CliError> {
    let mut out = String::new();
    csv_block(&mut out, &report.coefficients, report.is_strings())?;
    for q in &report.quasi {
        let _ = writeln!(out, "# ending in {}", joined(&q.word));
        csv_block(&mut out, &q.coefficients, false)?;
    }
    let mut checks = String::new();
    checks_table(&mut checks, report);
    for line in checks.lines() {
        let _ = writeln!(out, "# {line}");
    }
    Ok(out)
}

pub fn render(report: &Report, format: Format) -> Result<String, CliError> {
    match format {
        Format::Table => Ok(table(report)),
        Format::Json => serde_json::to_string_pretty(report)
            .map(|s| s + "\n")
            .map_err(|e| CliError::Invariant(e.to_string())),
        Format::Csv => csv(report),
    }
}
