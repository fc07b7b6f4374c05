//! The `verify` command: named checks, each printed as PASS or FAIL.

use std::path::Path;

use autocomplexity::census::reference::{self, LIMIT_HALVES, MAX_COUNTS};
use autocomplexity::census::{eventual_upper_bound, limit_s, oeis, Census};
use autocomplexity::oracle::brute_force_complexity;
use autocomplexity::search::complexity_value;
use autocomplexity::Word;
use num_bigint::BigUint;

use crate::output::{CmdResult, OutputRecord};

type Outcome = Result<String, String>;

fn all_words(max_len: usize) -> impl Iterator<Item = Word> {
    (0..=max_len).flat_map(|n| (0..1u64 << n).map(move |v| Word::from_index(v, n)))
}

fn periodic_counts(oeis_file: Option<&Path>) -> Outcome {
    let values = match oeis_file {
        Some(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            oeis::parse_sequence(&text).map_err(|e| e.to_string())?
        }
        None => reference::a152061(),
    };
    let report = oeis::crosscheck(&values);
    match report.mismatches.first() {
        None => Ok(format!("{} terms", report.checked)),
        Some(m) => Err(format!(
            "{} mismatches, first at n = {}: expected {}, computed {}",
            report.mismatches.len(),
            m.index,
            m.expected,
            m.computed
        )),
    }
}

fn limit_values() -> Outcome {
    for (i, &half) in LIMIT_HALVES.iter().enumerate() {
        let q = i + 1;
        if limit_s(q) != BigUint::from(half) * 2u32 {
            return Err(format!(
                "q = {q}: computed {}, expected 2 * {half}",
                limit_s(q)
            ));
        }
    }
    Ok(format!("q = 1..={}", LIMIT_HALVES.len()))
}

fn bound() -> Outcome {
    for q in 2..=40 {
        let b = eventual_upper_bound(q).map_err(|e| e.to_string())?;
        if limit_s(q) > b {
            return Err(format!("q = {q}: {} > {b}", limit_s(q)));
        }
    }
    Ok("q = 2..=40".into())
}

fn oracle(max_len: usize) -> Outcome {
    let mut checked = 0;
    for x in all_words(max_len) {
        let fast = complexity_value(&x).map_err(|e| e.to_string())?;
        let slow = brute_force_complexity(&x);
        if fast != slow {
            return Err(format!("{x:?}: search {fast}, brute force {slow}"));
        }
        checked += 1;
    }
    Ok(format!("{checked} words"))
}

fn symmetry(max_len: usize) -> Outcome {
    let a = |x: &Word| complexity_value(x).map_err(|e| e.to_string());
    let mut checked = 0;
    for x in all_words(max_len) {
        let q = a(&x)?;
        if a(&x.complement())? != q || a(&x.reverse())? != q {
            return Err(format!("{x}: complement or reversal changes A_N"));
        }
        if x.len() < max_len {
            for b in 0..2 {
                if a(&x.with_appended(b))? > q + 1 {
                    return Err(format!("{x}{b}: grows by more than one"));
                }
            }
        }
        checked += 1;
    }
    Ok(format!("{checked} words"))
}

fn tables(census: &mut Census, max_len: usize) -> Outcome {
    let mut cells = 0;
    for n in 0..=max_len {
        let t = census.table(n).map_err(|e| e.to_string())?;
        t.check_invariants().map_err(|e| format!("n = {n}: {e}"))?;
        if t.max_count() != MAX_COUNTS[n] {
            return Err(format!(
                "n = {n}: max count {}, expected {}",
                t.max_count(),
                MAX_COUNTS[n]
            ));
        }
        for (q, r, s) in reference::proportions(n) {
            if (t.r(q), t.s(q)) != (r, s) {
                return Err(format!(
                    "n = {n}, q = {q}: {}/{}, expected {r}/{s}",
                    t.r(q),
                    t.s(q)
                ));
            }
            cells += 1;
        }
    }
    Ok(format!("n = 0..={max_len}, {cells} proportion cells"))
}

fn two_state_count(census: &mut Census, max_len: usize) -> Outcome {
    for n in 3..=max_len {
        let s = census
            .s_counts(n)
            .map_err(|e| e.to_string())?
            .get(&2)
            .copied()
            .unwrap_or(0);
        if s != 6 {
            return Err(format!("s_2({n}) = {s}"));
        }
    }
    Ok(format!("n = 3..={max_len}"))
}

pub fn run(oeis_file: Option<&Path>, small_n_limit: usize) -> CmdResult {
    if small_n_limit >= MAX_COUNTS.len() {
        return Err(format!("--small-n-limit must be below {}", MAX_COUNTS.len()).into());
    }
    let mut census = Census::default();
    let checks: Vec<(&str, Outcome)> = vec![
        ("periodic-counts", periodic_counts(oeis_file)),
        ("limit-values", limit_values()),
        ("limit-bound", bound()),
        ("oracle-equivalence", oracle(small_n_limit)),
        ("symmetry", symmetry(small_n_limit)),
        ("census-tables", tables(&mut census, small_n_limit)),
        (
            "two-state-count",
            two_state_count(&mut census, small_n_limit),
        ),
    ];
    let mut rec = OutputRecord::new("verify")
        .input("oeis_file", oeis_file.map(|p| p.display().to_string()))
        .input("small_n_limit", small_n_limit);
    for (name, outcome) in checks {
        match outcome {
            Ok(detail) => {
                rec.line(format!("PASS {name} ({detail})"));
                rec.result(name, serde_json::json!({"passed": true, "detail": detail}));
            }
            Err(detail) => {
                rec.line(format!("FAIL {name}: {detail}"));
                rec.result(name, serde_json::json!({"passed": false, "detail": detail}));
                rec.status = 1;
            }
        }
    }
    Ok(rec)
}
