//! On-disk cache for symmetric-group character tables.
//!
//! One JSON file per n, named `chartab_v<format-version>_n<k>.json`, carrying
//! the raw table values and a sha256 checksum of the value payload. Corrupt or
//! mismatched files are ignored (with a warning) and recomputed; I/O failures
//! degrade to in-memory computation, never to a hard error.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};
use symchar::symfunc::{character_table, seed_character_table, table_is_memoized, CharacterTable};

/// Bump when the file layout changes; old files are simply never read.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    n: u32,
    values: Vec<Vec<i64>>,
    sha256: String,
}

/// Resolution order: explicit flag, `SYMCHAR_CACHE` env var, then a
/// `symchar` directory under the user cache root.
pub fn resolve_cache_dir(flag: Option<&Path>) -> Option<PathBuf> {
    if let Some(p) = flag {
        return Some(p.to_path_buf());
    }
    if let Ok(p) = std::env::var("SYMCHAR_CACHE") {
        if !p.is_empty() {
            return Some(PathBuf::from(p));
        }
    }
    let home = std::env::var_os("HOME")?;
    Some(PathBuf::from(home).join(".cache").join("symchar"))
}

pub fn cache_path(dir: &Path, n: u32) -> PathBuf {
    dir.join(format!("chartab_v{FORMAT_VERSION}_n{n}.json"))
}

fn checksum(n: u32, values: &[Vec<i64>]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(n.to_le_bytes());
    for row in values {
        for &v in row {
            hasher.update(v.to_le_bytes());
        }
    }
    format!("{:x}", hasher.finalize())
}

/// Try to seed the in-memory table store from disk. Returns true on a clean hit.
pub fn load(dir: &Path, n: u32) -> bool {
    if table_is_memoized(n) {
        return true;
    }
    let path = cache_path(dir, n);
    let data = match std::fs::read(&path) {
        Ok(d) => d,
        Err(_) => return false,
    };
    let file: CacheFile = match serde_json::from_slice(&data) {
        Ok(f) => f,
        Err(_) => {
            eprintln!("warning: ignoring corrupt cache file {}", path.display());
            return false;
        }
    };
    if file.n != n || file.sha256 != checksum(file.n, &file.values) {
        eprintln!("warning: ignoring corrupt cache file {}", path.display());
        return false;
    }
    match CharacterTable::from_values(file.n, file.values) {
        Some(table) => {
            seed_character_table(table);
            true
        }
        None => {
            eprintln!("warning: ignoring corrupt cache file {}", path.display());
            false
        }
    }
}

/// Write the table for `n` to disk, atomically (temp file + rename). Failures
/// are reported but not fatal.
pub fn store(dir: &Path, n: u32) {
    let table = character_table(n);
    let file = CacheFile {
        n,
        values: table.values().to_vec(),
        sha256: checksum(n, table.values()),
    };
    if let Err(e) = store_inner(dir, n, &file) {
        eprintln!("warning: could not write cache for n = {n}: {e}");
    }
}

fn store_inner(dir: &Path, n: u32, file: &CacheFile) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let path = cache_path(dir, n);
    let tmp = dir.join(format!(".chartab_n{n}.{}.tmp", std::process::id()));
    std::fs::write(&tmp, serde_json::to_vec(file)?)?;
    std::fs::rename(&tmp, &path)?;
    Ok(())
}

/// Make character tables for `1..=n_max` available, reading from the cache
/// where possible and writing back what had to be computed. Returns
/// (all-loaded-from-cache, milliseconds spent on tables).
pub fn ensure_tables(dir: Option<&Path>, n_max: u32) -> (bool, u128) {
    let start = std::time::Instant::now();
    let mut all_hit = true;
    for n in 1..=n_max {
        let hit = match dir {
            Some(d) => load(d, n),
            None => table_is_memoized(n),
        };
        if !hit {
            all_hit = false;
            character_table(n);
            if let Some(d) = dir {
                store(d, n);
            }
        }
    }
    (all_hit, start.elapsed().as_millis())
}
