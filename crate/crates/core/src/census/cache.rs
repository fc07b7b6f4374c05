//! On-disk census cache.
//!
//! Layout under the cache root: `v<version>/census-<n>.csv` holds the table
//! (see [`CensusTable::to_csv`]) and `v<version>/complexities-<n>.bin` the
//! per-word complexities that tables for `n` and `n - 1` are built from.
//! Every write goes to a temporary file that is then renamed into place.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use super::{CensusTable, ComplexityVector, FORMAT_VERSION};
use crate::{Error, Result};

const VECTOR_MAGIC: &[u8; 4] = b"ACXV";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheDir {
    root: PathBuf,
}

fn cache_err(path: &Path, reason: impl Into<String>) -> Error {
    Error::Cache {
        path: path.to_path_buf(),
        reason: reason.into(),
    }
}

impl CacheDir {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        CacheDir { root: root.into() }
    }

    pub fn dir(&self) -> PathBuf {
        self.root.join(format!("v{FORMAT_VERSION}"))
    }

    pub fn table_path(&self, n: usize) -> PathBuf {
        self.dir().join(format!("census-{n}.csv"))
    }

    pub fn vector_path(&self, n: usize) -> PathBuf {
        self.dir().join(format!("complexities-{n}.bin"))
    }

    fn write_atomic(&self, path: &Path, bytes: &[u8]) -> Result<()> {
        static COUNTER: AtomicU64 = AtomicU64::new(0);
        fs::create_dir_all(self.dir())?;
        let tmp = path.with_extension(format!(
            "tmp-{}-{}",
            std::process::id(),
            COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
        drop(f);
        fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn store_table(&self, table: &CensusTable) -> Result<()> {
        self.write_atomic(&self.table_path(table.length), table.to_csv().as_bytes())
    }

    pub fn load_table(&self, n: usize) -> Result<Option<CensusTable>> {
        let path = self.table_path(n);
        if !path.exists() {
            return Ok(None);
        }
        let table = CensusTable::from_csv(&fs::read_to_string(&path)?)
            .map_err(|e| cache_err(&path, e.to_string()))?;
        if table.length != n {
            return Err(cache_err(
                &path,
                format!("holds length {} instead of {n}", table.length),
            ));
        }
        Ok(Some(table))
    }

    pub fn store_vector(&self, v: &ComplexityVector) -> Result<()> {
        let mut bytes = Vec::with_capacity(v.values.len() + 17);
        bytes.extend_from_slice(VECTOR_MAGIC);
        bytes.extend_from_slice(&FORMAT_VERSION.to_le_bytes());
        bytes.extend_from_slice(&(v.length as u64).to_le_bytes());
        bytes.extend_from_slice(&v.values);
        self.write_atomic(&self.vector_path(v.length), &bytes)
    }

    pub fn load_vector(&self, n: usize) -> Result<Option<ComplexityVector>> {
        let path = self.vector_path(n);
        if !path.exists() {
            return Ok(None);
        }
        let bytes = fs::read(&path)?;
        if bytes.len() < 16 || &bytes[..4] != VECTOR_MAGIC {
            return Err(cache_err(&path, "not a complexity vector"));
        }
        let version = u32::from_le_bytes(bytes[4..8].try_into().expect("4 bytes"));
        if version != FORMAT_VERSION {
            return Err(cache_err(&path, format!("format version {version}")));
        }
        let length = u64::from_le_bytes(bytes[8..16].try_into().expect("8 bytes")) as usize;
        let values = bytes[16..].to_vec();
        if length != n || values.len() != ComplexityVector::expected_len(n) {
            return Err(cache_err(&path, "length does not match"));
        }
        Ok(Some(ComplexityVector { length, values }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::{Census, CensusOptions};

    #[test]
    fn round_trip_through_disk() {
        let tmp = tempfile::tempdir().unwrap();
        let cache = CacheDir::new(tmp.path());
        let opts = CensusOptions {
            cache: Some(cache.clone()),
            ..Default::default()
        };
        let table = Census::new(opts.clone()).table(7).unwrap();
        assert_eq!(cache.load_table(7).unwrap(), Some(table.clone()));
        assert!(cache.load_vector(8).unwrap().is_some());
        // A fresh driver reads everything back instead of recomputing.
        assert_eq!(Census::new(opts).table(7).unwrap(), table);
        let leftovers = fs::read_dir(cache.dir()).unwrap().filter(|e| {
            e.as_ref()
                .unwrap()
                .file_name()
                .to_string_lossy()
                .contains(".tmp-")
        });
        assert_eq!(leftovers.count(), 0);
    }

    #[test]
    fn corrupt_files_are_reported() {
        let tmp = tempfile::tempdir().unwrap();
        let cache = CacheDir::new(tmp.path());
        fs::create_dir_all(cache.dir()).unwrap();
        fs::write(cache.vector_path(3), b"junk").unwrap();
        assert!(matches!(cache.load_vector(3), Err(Error::Cache { .. })));
        fs::write(
            cache.table_path(3),
            "q,s,r\n1,2,0\n# autocomplexity census v1 length=4\n",
        )
        .unwrap();
        assert!(matches!(cache.load_table(3), Err(Error::Cache { .. })));
        assert_eq!(cache.load_table(5).unwrap(), None);
    }
}
