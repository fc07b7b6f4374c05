//! Cross-check of [`periodic_count`] against an external integer sequence.

use num_bigint::BigUint;

use crate::words::periodic_count;
use crate::{Error, Result};

/// Integers separated by commas and/or newlines, indexed from 0. Blank
/// lines and lines starting with `#` are skipped.
pub fn parse_sequence(text: &str) -> Result<Vec<BigUint>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        for field in line.split(',').map(str::trim).filter(|f| !f.is_empty()) {
            let v = field.parse::<BigUint>().map_err(|_| Error::Parse {
                line: i + 1,
                reason: format!("not a nonnegative integer: {field:?}"),
            })?;
            out.push(v);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub index: usize,
    pub expected: BigUint,
    pub computed: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn crosscheck(values: &[BigUint]) -> CrossCheckReport {
    let mismatches = values
        .iter()
        .enumerate()
        .filter_map(|(n, expected)| {
            let computed = periodic_count(n as u32);
            (computed != *expected).then(|| Mismatch {
                index: n,
                expected: expected.clone(),
                computed,
            })
        })
        .collect();
    CrossCheckReport {
        checked: values.len(),
        mismatches,
    }
}
