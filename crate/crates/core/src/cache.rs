//! On-disk store of count tables.
//!
//! A single `counts.json` in the cache directory maps each class key (sorted
//! one-line basis strings joined by `;`) to its counts from `n = 1` upward.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::oracle::{ClassSpec, CountSequence, Oracle};

const FILE_NAME: &str = "counts.json";

#[derive(Clone, Debug)]
pub struct CountCache {
    dir: PathBuf,
}

impl CountCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        CountCache { dir: dir.into() }
    }

    pub fn path(&self) -> PathBuf {
        self.dir.join(FILE_NAME)
    }

    fn load_all(&self) -> Result<BTreeMap<String, Vec<u64>>> {
        let path = self.path();
        if !path.exists() {
            return Ok(BTreeMap::new());
        }
        let text = fs::read_to_string(&path).map_err(|e| io_error(&path, e))?;
        serde_json::from_str(&text).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))
    }

    /// Cached counts for `spec` if they reach at least `horizon`.
    pub fn lookup(&self, spec: &ClassSpec, horizon: usize) -> Result<Option<CountSequence>> {
        let all = self.load_all()?;
        Ok(all.get(&spec.key()).filter(|c| c.len() >= horizon).map(|counts| {
            CountSequence::from_counts(counts[..horizon].iter().enumerate().map(|(i, &a)| (i + 1, a)).collect())
        }))
    }

    /// Record `counts`, keeping whichever table for the key is longer.
    pub fn store(&self, spec: &ClassSpec, counts: &CountSequence) -> Result<()> {
        fs::create_dir_all(&self.dir).map_err(|e| io_error(&self.dir, e))?;
        let mut all = self.load_all()?;
        let values = counts.values();
        let entry = all.entry(spec.key()).or_default();
        if values.len() > entry.len() {
            *entry = values;
        }
        let text = serde_json::to_string_pretty(&all).map_err(|e| Error::Cache(e.to_string()))?;
        let path = self.path();
        fs::write(&path, text).map_err(|e| io_error(&path, e))
    }

    /// Serve from the cache when possible, otherwise count and store.
    pub fn count_av(&self, oracle: &Oracle, spec: &ClassSpec, horizon: usize) -> Result<CountSequence> {
        oracle.check_horizon(horizon)?;
        if let Some(hit) = self.lookup(spec, horizon)? {
            return Ok(hit);
        }
        let counts = oracle.count_av(spec, horizon)?;
        self.store(spec, &counts)?;
        Ok(counts)
    }
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Cache(format!("{}: {e}", path.display()))
}
