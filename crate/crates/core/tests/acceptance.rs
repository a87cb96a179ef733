//! Acceptance suite: one line per criterion, nonzero exit on any failure.
//!
//! Every comparison is exact; time limits are checked on wall-clock time.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use avoidgf::correlate::{correlation_bits, Word};
use avoidgf::engine::{composition_gf, string_gf, verify_proof_identities};
use avoidgf::family::{family_gf, family_words, ExponentSet};
use avoidgf::oracle::{census, enumerate_avoiders, enumerate_string_avoiders, CoefficientTriangle};
use avoidgf::{BiSeries, ForbiddenSet};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

/// Weight at which all cross-checks are run.
const CHECK_WEIGHT: usize = 12;

/// Printed coefficients, row `n` listing `q^0..q^n`.
const EXAMPLE_1: &[&[u64]] = &[
    &[1],
    &[0, 1],
    &[0, 1, 1],
    &[0, 1, 2, 1],
    &[0, 1, 2, 3, 1],
    &[0, 1, 4, 3, 4, 1],
    &[0, 1, 5, 9, 5, 5, 1],
];

const EXAMPLE_2: &[&[u64]] = &[
    &[1],
    &[0, 1],
    &[0, 1, 1],
    &[0, 1, 2, 1],
    &[0, 1, 2, 3, 1],
    &[0, 1, 4, 4, 4, 1],
    &[0, 1, 5, 9, 6, 5, 1],
    &[0, 1, 6, 13, 16, 9, 6, 1],
    &[0, 1, 7, 19, 28, 26, 12, 7, 1],
];

const EXAMPLE_3: &[&[u64]] = &[
    &[1],
    &[0, 1],
    &[0, 1, 1],
    &[0, 1, 2, 1],
    &[0, 1, 3, 3, 1],
    &[0, 1, 4, 5, 4, 1],
    &[0, 1, 5, 10, 8, 5, 1],
    &[0, 1, 6, 15, 18, 11, 6, 1],
    &[0, 1, 7, 21, 33, 30, 15, 7, 1],
];

fn word(parts: &[u32]) -> Word {
    Word::new(parts.to_vec()).expect("valid word")
}

fn set(words: &[&[u32]]) -> ForbiddenSet {
    ForbiddenSet::new(words.iter().map(|p| word(p)).collect()).expect("antichain")
}

fn exps(a: &[u32]) -> ExponentSet {
    ExponentSet::new(a.to_vec()).expect("exponents")
}

fn compare_rows(series: &BiSeries, table: &[&[u64]]) -> Result<(), String> {
    for (n, row) in table.iter().enumerate() {
        for (m, &c) in row.iter().enumerate() {
            let got = series.coeff(n, m);
            if got != BigInt::from(c) {
                return Err(format!("x^{n} q^{m}: got {got}, printed {c}"));
            }
        }
    }
    Ok(())
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let elapsed = start.elapsed();
    if elapsed < limit {
        Ok(elapsed)
    } else {
        Err(format!("took {elapsed:?}, limit {limit:?}"))
    }
}

fn engine_vs_oracle(set: &ForbiddenSet) -> Result<(), String> {
    let result = composition_gf(set, CHECK_WEIGHT).map_err(|e| e.to_string())?;
    let oracle = enumerate_avoiders(set, CHECK_WEIGHT).map_err(|e| e.to_string())?;
    match CoefficientTriangle::from(&result.gf).mismatches(&oracle).first() {
        Some(m) => Err(format!("{set}: {m}")),
        None => Ok(()),
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let result = composition_gf(&set(&[&[2, 2], &[2, 1, 2]]), 6).map_err(|e| e.to_string())?;
    compare_rows(&result.gf, EXAMPLE_1)?;
    let t = within(start, Duration::from_secs(1))?;
    Ok(format!("{{22, 212}} through x^6 matches, {t:?}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let series = family_gf(&exps(&[1, 3, 5]), 8).map_err(|e| e.to_string())?;
    compare_rows(&series, EXAMPLE_2)?;
    let t = within(start, Duration::from_secs(1))?;
    Ok(format!("exponents {{1,3,5}} through x^8 matches, {t:?}"))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let series = family_gf(&exps(&[2, 4]), 8).map_err(|e| e.to_string())?;
    compare_rows(&series, EXAMPLE_3)?;
    let t = within(start, Duration::from_secs(1))?;
    Ok(format!("exponents {{2,4}} through x^8 matches, {t:?}"))
}

/// Every exponent set with at most 3 elements drawn from 1..=5.
fn small_exponent_sets() -> Vec<ExponentSet> {
    (1u32..1 << 5)
        .filter(|mask| mask.count_ones() <= 3)
        .map(|mask| exps(&(1..=5).filter(|a| mask & (1 << (a - 1)) != 0).collect::<Vec<_>>()))
        .collect()
}

/// 25 antichains of at most 3 words, each of at most 4 parts from 1..=3.
fn random_sets() -> Vec<ForbiddenSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2010);
    let mut sets = Vec::new();
    while sets.len() < 25 {
        let k = rng.gen_range(1..=3);
        let words = (0..k)
            .map(|_| {
                let len = rng.gen_range(1..=4);
                word(&(0..len).map(|_| rng.gen_range(1..=3)).collect::<Vec<_>>())
            })
            .collect();
        if let Ok(s) = ForbiddenSet::new(words) {
            sets.push(s);
        }
    }
    sets
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let sets = small_exponent_sets();
    for e in &sets {
        let closed = family_gf(e, CHECK_WEIGHT).map_err(|e| e.to_string())?;
        let words = family_words(e);
        let det = composition_gf(&words, CHECK_WEIGHT).map_err(|e| e.to_string())?;
        if closed != det.gf {
            return Err(format!("{words}: closed form differs from determinant formula"));
        }
        engine_vs_oracle(&words)?;
    }
    let t = within(start, Duration::from_secs(30))?;
    Ok(format!("{} exponent sets agree three ways through weight {CHECK_WEIGHT}, {t:?}", sets.len()))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let sets = random_sets();
    for s in &sets {
        engine_vs_oracle(s)?;
    }
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!("{} random sets match the oracle through weight {CHECK_WEIGHT}, {t:?}", sets.len()))
}

fn criterion_6() -> Outcome {
    let mut sets: Vec<ForbiddenSet> = small_exponent_sets().iter().map(family_words).collect();
    sets.extend(random_sets());
    for s in &sets {
        let result = composition_gf(s, CHECK_WEIGHT).map_err(|e| e.to_string())?;
        let report = verify_proof_identities(&result, s).map_err(|e| e.to_string())?;
        if !report.growth {
            return Err(format!("{s}: growth identity fails"));
        }
        if let Some(i) = report.tails.iter().position(|&ok| !ok) {
            return Err(format!("{s}: tail identity for word {i} fails"));
        }
        let oracle = census(s, CHECK_WEIGHT).map_err(|e| e.to_string())?;
        for (i, (b, expect)) in result.quasi.iter().zip(&oracle.quasi).enumerate() {
            if let Some(m) = CoefficientTriangle::from(b).mismatches(expect).first() {
                return Err(format!("{s}: quasi-avoiders of word {i}: {m}"));
            }
        }
    }
    Ok(format!("both identities hold and quasi-avoiders match on {} sets", sets.len()))
}

fn criterion_7() -> Outcome {
    let s = set(&[&[1, 1]]);
    let series = string_gf(&s, 2, 12).map_err(|e| e.to_string())?;
    let brute = enumerate_string_avoiders(&s, 2, 12).map_err(|e| e.to_string())?;
    let mut fib = vec![1u64, 2];
    while fib.len() < 13 {
        fib.push(fib[fib.len() - 1] + fib[fib.len() - 2]);
    }
    for (l, (&f, &b)) in fib.iter().zip(&brute).enumerate() {
        let got = series.coeff(l);
        if got != BigInt::from(f) || b != f {
            return Err(format!("length {l}: series {got}, brute force {b}, recurrence {f}"));
        }
    }
    Ok(format!("{fib:?} from series, brute force and recurrence"))
}

fn criterion_8() -> Outcome {
    // 1 -> 2, 0 -> 1 keeps the equality pattern of the binary strings
    let x1 = word(&[2, 2, 1]);
    let x2 = word(&[2, 1, 2, 2]);
    let cases = [
        ("c12(110, 1011)", correlation_bits(&x1, &x2).to_string(), "011"),
        ("c21(1011, 110)", correlation_bits(&x2, &x1).to_string(), "0010"),
        ("c11(1011)", correlation_bits(&x2, &x2).to_string(), "1001"),
    ];
    for (name, got, expect) in &cases {
        if got != expect {
            return Err(format!("{name} = {got}, expected {expect}"));
        }
    }
    Ok("011, 0010, 1001".into())
}

fn criterion_9() -> Outcome {
    let all = composition_gf(&ForbiddenSet::empty(), 15).map_err(|e| e.to_string())?;
    for n in 1..=15 {
        let total = all.gf.row_sum(n);
        if total != BigInt::from(1u64 << (n - 1)) {
            return Err(format!("weight {n}: {total} compositions"));
        }
    }
    engine_vs_oracle(&set(&[&[1]]))?;
    Ok("empty set sums to 2^(n-1) for n<=15; forbidding 1 matches the oracle".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("1 Example 1 reproduction", criterion_1),
        ("2 Example 2 reproduction", criterion_2),
        ("3 Example 3 reproduction", criterion_3),
        ("4 closed form / determinant / oracle", criterion_4),
        ("5 oracle equivalence sweep", criterion_5),
        ("6 linear-system identities", criterion_6),
        ("7 strings avoiding 11", criterion_7),
        ("8 correlation tables", criterion_8),
        ("9 degenerate sets", criterion_9),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
