//! Exhaustive censuses by complexity and the closed-form limits they
//! converge to.
//!
//! `s_q(n)` counts words of length `n` with `A_N = q`; `r_q(n)` counts those
//! that are right inextendible, i.e. `A_N(x0) = A_N(x1) = A_N(x) + 1`.
//! Complexity is invariant under complement, so only words starting with 0
//! are searched and every count is doubled.

mod cache;
mod formats;
mod limits;
pub mod oeis;
pub mod reference;
mod stabilization;

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::search::complexity_value;
use crate::{Error, Result, Word};

pub use cache::CacheDir;
pub use limits::{eventual_upper_bound, limit_r, limit_s, ExponentReading, OneCycleShape};
pub use stabilization::{stabilization_report, StabilizationReport};

/// Version tag written into every persisted artifact.
pub const FORMAT_VERSION: u32 = 1;

/// Default largest `n` a census runs without an explicit override.
pub const DEFAULT_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub s: u64,
    pub r: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusTable {
    pub length: usize,
    /// `q -> (s_q(n), r_q(n))`, only for `q` with `s_q(n) > 0`.
    pub rows: BTreeMap<usize, CensusRow>,
}

impl CensusTable {
    pub fn s(&self, q: usize) -> u64 {
        self.rows.get(&q).map_or(0, |r| r.s)
    }

    pub fn r(&self, q: usize) -> u64 {
        self.rows.get(&q).map_or(0, |r| r.r)
    }

    pub fn max_complexity(&self) -> usize {
        self.rows
            .iter()
            .rev()
            .find(|(_, r)| r.s > 0)
            .map_or(0, |(&q, _)| q)
    }

    pub fn max_count(&self) -> u64 {
        self.s(self.max_complexity())
    }

    pub fn total(&self) -> u128 {
        self.rows.values().map(|r| r.s as u128).sum()
    }

    /// Componentwise sum; both tables must be for the same length.
    pub fn merge(mut self, other: &CensusTable) -> CensusTable {
        assert_eq!(
            self.length, other.length,
            "merging tables of different lengths"
        );
        for (&q, row) in &other.rows {
            let e = self.rows.entry(q).or_default();
            e.s += row.s;
            e.r += row.r;
        }
        self
    }

    /// Σ s = 2^n, every count even for n ≥ 1, r ≤ s.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        if self.total() != 1u128 << self.length {
            return Err(format!(
                "counts sum to {} instead of 2^{}",
                self.total(),
                self.length
            ));
        }
        for (q, row) in &self.rows {
            if self.length >= 1 && (row.s % 2 != 0 || row.r % 2 != 0) {
                return Err(format!("odd count at q = {q}"));
            }
            if row.r > row.s {
                return Err(format!("r_{q} = {} exceeds s_{q} = {}", row.r, row.s));
            }
        }
        Ok(())
    }
}

/// `A_N` of every word of one length that starts with 0 (or of the empty
/// word), indexed by [`Word::index`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexityVector {
    pub length: usize,
    pub values: Vec<u8>,
}

impl ComplexityVector {
    pub fn expected_len(length: usize) -> usize {
        if length == 0 {
            1
        } else {
            1 << (length - 1)
        }
    }

    /// `A_N` of an arbitrary word of this length, via complement symmetry.
    pub fn get(&self, x: &Word) -> u8 {
        assert_eq!(x.len(), self.length);
        let x = if x.bit(0) == Some(1) {
            x.complement()
        } else {
            x.clone()
        };
        self.values[x.index().expect("census words fit in 64 bits") as usize]
    }

    /// Compute with the current rayon pool. Order of the result does not
    /// depend on the number of threads.
    pub fn compute(length: usize) -> Result<Self> {
        if length > crate::search::MAX_WORD_LEN {
            return Err(Error::WordTooLong(length));
        }
        let values = (0..Self::expected_len(length) as u64)
            .into_par_iter()
            .map(|v| {
                let q = complexity_value(&Word::from_index(v, length))?;
                Ok(q as u8)
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(ComplexityVector { length, values })
    }

    /// Histogram `q -> s_q(n)`, doubled for complement pairs.
    pub fn counts(&self) -> BTreeMap<usize, u64> {
        let weight = if self.length == 0 { 1 } else { 2 };
        let mut out = BTreeMap::new();
        for &q in &self.values {
            *out.entry(q as usize).or_insert(0) += weight;
        }
        out
    }
}

/// Chunk size for the parallel table build.
const CHUNK: usize = 1 << 12;

/// Build the length-`n` table from the complexity vectors of lengths `n`
/// and `n + 1`. Contiguous ranges of words are tallied independently and
/// merged.
pub fn table_from_vectors(this: &ComplexityVector, next: &ComplexityVector) -> CensusTable {
    let n = this.length;
    assert_eq!(next.length, n + 1);
    let weight = if n == 0 { 1 } else { 2 };
    let empty = CensusTable {
        length: n,
        rows: BTreeMap::new(),
    };
    this.values
        .par_chunks(CHUNK)
        .enumerate()
        .map(|(chunk, values)| {
            let mut part = empty.clone();
            for (offset, &q) in values.iter().enumerate() {
                let idx = chunk * CHUNK + offset;
                // For n = 0 the word is empty and "1" is the complement of "0".
                let (a, b) = if n == 0 {
                    (0, 0)
                } else {
                    (2 * idx, 2 * idx + 1)
                };
                let inextendible = next.values[a] == q + 1 && next.values[b] == q + 1;
                let row = part.rows.entry(q as usize).or_default();
                row.s += weight;
                row.r += if inextendible { weight } else { 0 };
            }
            part
        })
        .reduce(|| empty.clone(), |a, b| a.merge(&b))
}

#[derive(Clone, Debug)]
pub struct CensusOptions {
    pub limit: usize,
    pub allow_over_limit: bool,
    pub cache: Option<CacheDir>,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            limit: DEFAULT_LIMIT,
            allow_over_limit: false,
            cache: None,
        }
    }
}

/// Memoizing census driver; vectors are kept in memory and, when a cache
/// directory is configured, on disk.
#[derive(Debug, Default)]
pub struct Census {
    options: CensusOptions,
    vectors: HashMap<usize, Arc<ComplexityVector>>,
}

impl Census {
    pub fn new(options: CensusOptions) -> Self {
        Census {
            options,
            vectors: HashMap::new(),
        }
    }

    pub fn options(&self) -> &CensusOptions {
        &self.options
    }

    fn check_limit(&self, n: usize) -> Result<()> {
        if n > self.options.limit && !self.options.allow_over_limit {
            return Err(Error::OverLimit {
                n,
                limit: self.options.limit,
            });
        }
        Ok(())
    }

    pub fn vector(&mut self, n: usize) -> Result<Arc<ComplexityVector>> {
        if let Some(v) = self.vectors.get(&n) {
            return Ok(v.clone());
        }
        let cached = match &self.options.cache {
            Some(dir) => dir.load_vector(n)?,
            None => None,
        };
        let v = match cached {
            Some(v) => v,
            None => {
                let v = ComplexityVector::compute(n)?;
                if let Some(dir) = &self.options.cache {
                    dir.store_vector(&v)?;
                }
                v
            }
        };
        let v = Arc::new(v);
        self.vectors.insert(n, v.clone());
        Ok(v)
    }

    /// `q -> s_q(n)` without the right-inextendible counts.
    pub fn s_counts(&mut self, n: usize) -> Result<BTreeMap<usize, u64>> {
        self.check_limit(n)?;
        Ok(self.vector(n)?.counts())
    }

    pub fn table(&mut self, n: usize) -> Result<CensusTable> {
        self.check_limit(n)?;
        let this = self.vector(n)?;
        let next = self.vector(n + 1)?;
        let table = table_from_vectors(&this, &next);
        if let Some(dir) = &self.options.cache {
            dir.store_table(&table)?;
        }
        Ok(table)
    }
}

/// One-off census with default options and no cache.
pub fn census(n: usize) -> Result<CensusTable> {
    Census::new(CensusOptions::default()).table(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn length_one() {
        let t = census(1).unwrap();
        assert_eq!(t.s(1), 2);
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.max_count(), 2);
    }

    #[test]
    fn length_zero() {
        let t = census(0).unwrap();
        assert_eq!((t.s(1), t.r(1), t.max_count()), (1, 0, 1));
        t.check_invariants().unwrap();
    }

    #[test]
    fn length_three_by_hand() {
        // 000, 111 need one state; the other six need two.
        let t = census(3).unwrap();
        assert_eq!((t.s(1), t.s(2), t.total()), (2, 6, 8));
    }

    #[test]
    fn over_limit_is_refused() {
        let mut c = Census::new(CensusOptions {
            limit: 4,
            ..Default::default()
        });
        assert!(matches!(
            c.table(5),
            Err(Error::OverLimit { n: 5, limit: 4 })
        ));
        assert!(c.table(4).is_ok());
    }

    #[test]
    fn tables_satisfy_invariants() {
        let mut c = Census::default();
        for n in 0..=9 {
            c.table(n).unwrap().check_invariants().unwrap();
        }
    }

    #[test]
    fn merge_is_order_independent() {
        let a = census(6).unwrap();
        let b = census(6).unwrap();
        assert_eq!(a.clone().merge(&b), b.merge(&a));
    }
}
