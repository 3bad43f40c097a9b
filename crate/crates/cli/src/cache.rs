//! On-disk cache of count tables: one CSV per column.
//!
//! Each file starts with a version stamp line; a file with any other first
//! line is ignored and rewritten on the next store.

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use xxrx_core::enumerate::{Column, CountTable};

pub const CACHE_DIR_ENV: &str = "XXRX_CACHE_DIR";
pub const VERSION_STAMP: &str = "# xxrx-table-cache v1";

#[derive(Debug, Clone)]
pub struct TableCache {
    dir: PathBuf,
}

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        TableCache { dir: dir.into() }
    }

    /// `$XXRX_CACHE_DIR`, else `$XDG_CACHE_HOME/xxrx`, else `$HOME/.cache/xxrx`.
    pub fn from_env() -> Option<Self> {
        let var = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty());
        var(CACHE_DIR_ENV)
            .map(PathBuf::from)
            .or_else(|| var("XDG_CACHE_HOME").map(|d| Path::new(&d).join("xxrx")))
            .or_else(|| var("HOME").map(|d| Path::new(&d).join(".cache").join("xxrx")))
            .map(TableCache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, column: Column) -> PathBuf {
        self.dir.join(format!("{}.csv", column.name()))
    }

    /// Cached values `0..=limit` of `column`, if the cache covers them.
    pub fn load(&self, column: Column, limit: usize) -> Option<Vec<BigUint>> {
        let text = fs::read_to_string(self.path(column)).ok()?;
        let mut lines = text.lines();
        if lines.next()? != VERSION_STAMP {
            return None;
        }
        if lines.next()? != format!("n,{}", column.name()) {
            return None;
        }
        let mut values = Vec::with_capacity(limit + 1);
        for (expected, line) in lines.take(limit + 1).enumerate() {
            let (n, value) = line.split_once(',')?;
            if n.parse::<usize>().ok()? != expected {
                return None;
            }
            values.push(value.parse().ok()?);
        }
        (values.len() == limit + 1).then_some(values)
    }

    pub fn load_table(&self, limit: usize) -> Option<CountTable> {
        Some(CountTable {
            limit,
            u_tilde: self.load(Column::UTilde, limit)?,
            v: self.load(Column::V, limit)?,
            c: self.load(Column::C, limit)?,
        })
    }

    pub fn store(&self, table: &CountTable) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        for column in Column::ALL {
            let mut text = format!("{VERSION_STAMP}\nn,{}\n", column.name());
            for (n, v) in table.column(column).iter().enumerate() {
                text.push_str(&format!("{n},{v}\n"));
            }
            let path = self.path(column);
            let tmp = path.with_extension("csv.tmp");
            fs::write(&tmp, text)?;
            fs::rename(tmp, path)?;
        }
        Ok(())
    }
}
