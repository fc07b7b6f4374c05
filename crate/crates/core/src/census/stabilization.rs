use std::ops::RangeInclusive;

use num_bigint::BigUint;

use super::{limit_s, Census};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizationReport {
    pub q: usize,
    /// `(n, s_q(n))` over the requested range.
    pub values: Vec<(usize, u64)>,
    /// Largest `n` whose value differs from that at `n - 1`.
    pub last_change: Option<usize>,
    pub tail_value: u64,
    pub limit: BigUint,
    pub tail_matches_limit: bool,
}

impl StabilizationReport {
    /// First `n` of the constant tail.
    pub fn stable_from(&self) -> usize {
        self.last_change
            .unwrap_or_else(|| self.values.first().map_or(0, |v| v.0))
    }
}

/// Track `s_q(n)` over `lengths` and compare its tail with [`limit_s`].
pub fn stabilization_report(
    census: &mut Census,
    q: usize,
    lengths: RangeInclusive<usize>,
) -> Result<StabilizationReport> {
    let mut values = Vec::new();
    for n in lengths {
        let counts = census.s_counts(n)?;
        values.push((n, counts.get(&q).copied().unwrap_or(0)));
    }
    let last_change = values
        .windows(2)
        .rev()
        .find(|w| w[0].1 != w[1].1)
        .map(|w| w[1].0);
    let tail_value = values.last().map_or(0, |v| v.1);
    let limit = limit_s(q);
    Ok(StabilizationReport {
        q,
        tail_matches_limit: BigUint::from(tail_value) == limit,
        values,
        last_change,
        tail_value,
        limit,
    })
}
