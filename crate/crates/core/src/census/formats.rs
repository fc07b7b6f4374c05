//! Text renderings of [`CensusTable`]: the `q,s,r` CSV (also the cache
//! format), JSON lines, and an aligned human-readable table.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{CensusRow, CensusTable, FORMAT_VERSION};
use crate::{Error, Result};

const HEADER: &str = "q,s,r";
const META_PREFIX: &str = "# autocomplexity census";

#[derive(Serialize, Deserialize)]
struct JsonRow {
    length: usize,
    q: usize,
    s: u64,
    r: u64,
}

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

impl CensusTable {
    /// Header row, one row per `q`, then a metadata line with the format
    /// version and the length.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(HEADER);
        out.push('\n');
        for (q, row) in &self.rows {
            writeln!(out, "{q},{},{}", row.s, row.r).unwrap();
        }
        writeln!(
            out,
            "{META_PREFIX} v{FORMAT_VERSION} length={}",
            self.length
        )
        .unwrap();
        out
    }

    pub fn from_csv(text: &str) -> Result<CensusTable> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        match lines.next() {
            Some((_, HEADER)) => {}
            Some((n, other)) => {
                return Err(parse_err(
                    n,
                    format!("expected header {HEADER:?}, found {other:?}"),
                ))
            }
            None => return Err(parse_err(1, "empty input")),
        }
        let mut rows = BTreeMap::new();
        let mut length = None;
        for (n, line) in lines {
            if length.is_some() {
                return Err(parse_err(n, "content after the metadata line"));
            }
            if let Some(meta) = line.strip_prefix(META_PREFIX) {
                let mut fields = meta.split_whitespace();
                let version = fields
                    .next()
                    .and_then(|v| v.strip_prefix('v'))
                    .and_then(|v| v.parse::<u32>().ok());
                if version != Some(FORMAT_VERSION) {
                    return Err(parse_err(
                        n,
                        format!("unsupported format version in {line:?}"),
                    ));
                }
                let len = fields
                    .next()
                    .and_then(|f| f.strip_prefix("length="))
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(|| parse_err(n, "missing length in metadata"))?;
                length = Some(len);
                continue;
            }
            let cols: Vec<&str> = line.split(',').map(str::trim).collect();
            let [q, s, r] = cols[..] else {
                return Err(parse_err(
                    n,
                    format!("expected three columns, found {}", cols.len()),
                ));
            };
            let num = |v: &str| {
                v.parse::<u64>()
                    .map_err(|e| parse_err(n, format!("{v:?}: {e}")))
            };
            let q = num(q)? as usize;
            if rows
                .insert(
                    q,
                    CensusRow {
                        s: num(s)?,
                        r: num(r)?,
                    },
                )
                .is_some()
            {
                return Err(parse_err(n, format!("duplicate row for q = {q}")));
            }
        }
        let length =
            length.ok_or_else(|| parse_err(text.lines().count(), "missing metadata line"))?;
        Ok(CensusTable { length, rows })
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for (&q, row) in &self.rows {
            let line = JsonRow {
                length: self.length,
                q,
                s: row.s,
                r: row.r,
            };
            out.push_str(&serde_json::to_string(&line).expect("plain struct serializes"));
            out.push('\n');
        }
        out
    }

    pub fn from_json_lines(text: &str) -> Result<CensusTable> {
        let mut length = None;
        let mut rows = BTreeMap::new();
        for (i, line) in text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
        {
            let row: JsonRow =
                serde_json::from_str(line).map_err(|e| parse_err(i + 1, e.to_string()))?;
            if *length.get_or_insert(row.length) != row.length {
                return Err(parse_err(i + 1, "rows for different lengths"));
            }
            if rows
                .insert(row.q, CensusRow { s: row.s, r: row.r })
                .is_some()
            {
                return Err(parse_err(i + 1, format!("duplicate row for q = {}", row.q)));
            }
        }
        let length = length.ok_or_else(|| parse_err(1, "no rows"))?;
        Ok(CensusTable { length, rows })
    }

    /// Aligned columns `q`, `s_q(n)`, `r_q(n)`, `r/s`, then the maximum.
    pub fn to_pretty(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n = {}", self.length).unwrap();
        writeln!(
            out,
            "{:>4} {:>14} {:>14} {:>9}",
            "q", "s_q(n)", "r_q(n)", "r/s"
        )
        .unwrap();
        for (q, row) in &self.rows {
            writeln!(
                out,
                "{q:>4} {:>14} {:>14} {:>9}",
                row.s,
                row.r,
                format!("{}/{}", row.r, row.s)
            )
            .unwrap();
        }
        writeln!(
            out,
            "max complexity {} with {} of {} words",
            self.max_complexity(),
            self.max_count(),
            self.total()
        )
        .unwrap();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sample() -> CensusTable {
        let mut rows = BTreeMap::new();
        rows.insert(1, CensusRow { s: 2, r: 0 });
        rows.insert(3, CensusRow { s: 20, r: 8 });
        CensusTable { length: 10, rows }
    }

    #[test]
    fn csv_layout() {
        let csv = sample().to_csv();
        assert_eq!(
            csv,
            "q,s,r\n1,2,0\n3,20,8\n# autocomplexity census v1 length=10\n"
        );
    }

    #[test]
    fn csv_rejects_bad_input() {
        assert!(CensusTable::from_csv("").is_err());
        assert!(CensusTable::from_csv("q,s\n").is_err());
        assert!(
            CensusTable::from_csv("q,s,r\n1,2\n# autocomplexity census v1 length=1\n").is_err()
        );
        assert!(CensusTable::from_csv("q,s,r\n1,2,0\n").is_err());
        assert!(
            CensusTable::from_csv("q,s,r\n1,2,0\n# autocomplexity census v9 length=1\n").is_err()
        );
        assert!(CensusTable::from_csv(
            "q,s,r\n1,2,0\n1,2,0\n# autocomplexity census v1 length=1\n"
        )
        .is_err());
    }

    #[test]
    fn json_rejects_mixed_lengths() {
        let text =
            "{\"length\":1,\"q\":1,\"s\":2,\"r\":0}\n{\"length\":2,\"q\":2,\"s\":2,\"r\":0}\n";
        assert!(CensusTable::from_json_lines(text).is_err());
    }

    proptest! {
        #[test]
        fn formats_round_trip(length in 0usize..40, cells in proptest::collection::btree_map(1usize..30, (0u64..1 << 40, 0u64..1 << 40), 1..10)) {
            let rows = cells.into_iter().map(|(q, (s, r))| (q, CensusRow { s, r })).collect();
            let t = CensusTable { length, rows };
            prop_assert_eq!(CensusTable::from_csv(&t.to_csv()).unwrap(), t.clone());
            prop_assert_eq!(CensusTable::from_json_lines(&t.to_json_lines()).unwrap(), t);
        }
    }
}
