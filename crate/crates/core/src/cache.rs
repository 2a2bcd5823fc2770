//! On-disk persistence of sequence values.
//!
//! The store is line-delimited JSON, one [`CacheEntry`] per line, sorted by
//! `(family, index, n)`. Numerators and denominators are decimal strings so
//! the file is exact and readable from any language. Writes go to a
//! temporary file in the same directory which is then renamed over the
//! store, so a concurrent reader sees either the old or the new file.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::ExactRational;
use crate::sequences::{global_cache, Family, SequenceCache, SequenceValue};

/// Default store location, relative to the working directory.
pub const DEFAULT_CACHE_PATH: &str = "az-cache.jsonl";

/// One persisted sequence value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub family: Family,
    pub index: u64,
    pub n: u64,
    pub num: String,
    pub den: String,
}

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cannot read cache {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("cache {path} line {line}: {reason}")]
    Malformed {
        path: String,
        line: usize,
        reason: String,
    },
}

impl From<&SequenceValue> for CacheEntry {
    fn from(v: &SequenceValue) -> Self {
        CacheEntry {
            family: v.family,
            index: v.index,
            n: v.n,
            num: v.value.numer().to_string(),
            den: v.value.denom().to_string(),
        }
    }
}

impl CacheEntry {
    /// Converts back to a value, rejecting non-canonical fractions so that
    /// a re-written store is byte-identical to the one that was read.
    pub fn to_value(&self) -> Result<SequenceValue, String> {
        let num: BigInt = self
            .num
            .parse()
            .map_err(|_| format!("bad numerator {:?}", self.num))?;
        let den: BigInt = self
            .den
            .parse()
            .map_err(|_| format!("bad denominator {:?}", self.den))?;
        if den <= BigInt::from(0) {
            return Err(format!("denominator {den} is not positive"));
        }
        let value = ExactRational::new(num.clone(), den.clone());
        if value.numer() != &num || value.denom() != &den {
            return Err(format!("{num}/{den} is not in lowest terms"));
        }
        if self.family.is_integral() && den != BigInt::from(1) {
            return Err(format!(
                "{} values are integers, got {num}/{den}",
                self.family
            ));
        }
        Ok(SequenceValue {
            family: self.family,
            index: self.index,
            n: self.n,
            value,
        })
    }
}

/// Parses a whole store.
pub fn parse(text: &str, path: &str) -> Result<Vec<SequenceValue>, CacheError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let malformed = |reason: String| CacheError::Malformed {
            path: path.to_string(),
            line: i + 1,
            reason,
        };
        let entry: CacheEntry = serde_json::from_str(line).map_err(|e| malformed(e.to_string()))?;
        out.push(entry.to_value().map_err(malformed)?);
    }
    Ok(out)
}

/// Renders values as a store, sorted and deduplicated by key.
pub fn render(values: &[SequenceValue]) -> String {
    let sorted: BTreeMap<(Family, u64, u64), &SequenceValue> = values
        .iter()
        .map(|v| ((v.family, v.index, v.n), v))
        .collect();
    let mut out = String::new();
    for v in sorted.values() {
        out.push_str(
            &serde_json::to_string(&CacheEntry::from(*v)).expect("cache entries serialize"),
        );
        out.push('\n');
    }
    out
}

/// Reads a store. A missing file is an empty store.
pub fn load(path: &Path) -> Result<Vec<SequenceValue>, CacheError> {
    match fs::read_to_string(path) {
        Ok(text) => parse(&text, &path.display().to_string()),
        Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(Vec::new()),
        Err(source) => Err(CacheError::Io {
            path: path.display().to_string(),
            source,
        }),
    }
}

/// Atomically replaces the store at `path` with `values`.
pub fn save(path: &Path, values: &[SequenceValue]) -> io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(render(values).as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// Loads the store at `path` into `cache`.
///
/// An unreadable store is ignored: the values will simply be recomputed and
/// the store rewritten by [`persist_into`]. The returned warnings say why.
pub fn preload_into(cache: &SequenceCache, path: &Path) -> Vec<String> {
    match load(path) {
        Ok(values) => {
            for v in values {
                cache.insert(v);
            }
            Vec::new()
        }
        Err(e) => vec![format!("{e}; recomputing and rewriting the cache")],
    }
}

/// Merges `cache` with whatever readable values are on disk and rewrites
/// the store.
pub fn persist_into(cache: &SequenceCache, path: &Path) -> io::Result<()> {
    let mut values = load(path).unwrap_or_default();
    values.extend(cache.entries());
    save(path, &values)
}

/// [`preload_into`] on the process-wide cache.
pub fn preload(path: &Path) -> Vec<String> {
    preload_into(global_cache(), path)
}

/// [`persist_into`] from the process-wide cache.
pub fn persist(path: &Path) -> io::Result<()> {
    persist_into(global_cache(), path)
}
