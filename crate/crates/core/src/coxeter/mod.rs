//! Finite Coxeter groups: root realizations, element enumeration and
//! parabolic combinatorics.

pub mod cache;
mod classes;
mod dihedral;
mod golden;
mod roots;
mod table;
mod types;

use std::fs;
use std::path::PathBuf;

pub use classes::{ConjugacyClasses, SubsetClasses};
pub use dihedral::{Dihedral, DihedralElem};
pub use golden::Golden;
pub use roots::RootSystem;
pub use table::{ElemId, ElementTable, NOT_SIMPLE, PERM_RETAIN_LIMIT};
pub use types::{CoxeterType, Family, MAX_RANK};

use crate::error::{Error, Result};

/// Default element budget: everything up to and including E6 fits.
pub const DEFAULT_BUDGET: u64 = 200_000;

#[derive(Clone, Debug)]
pub struct BuildOptions {
    pub budget: u64,
    pub allow_large: bool,
    pub cache_dir: Option<PathBuf>,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { budget: DEFAULT_BUDGET, allow_large: false, cache_dir: None }
    }
}

/// Enumerate a Coxeter group, honouring the element budget and the cache.
pub fn build(ty: CoxeterType, opts: &BuildOptions) -> Result<ElementTable> {
    let estimated = ty.order();
    if estimated > opts.budget && !opts.allow_large {
        return Err(Error::BudgetExceeded { estimated, budget: opts.budget });
    }
    let path = opts.cache_dir.as_ref().map(|d| cache::cache_path(d, ty));
    if let Some(p) = path.as_ref().filter(|p| p.exists()) {
        let bytes = fs::read(p)?;
        return cache::decode(ty, &bytes, p);
    }
    let table = ElementTable::build(ty)?;
    if let (Some(p), Some(bytes)) = (path, cache::encode(&table)) {
        cache::write_atomic(&p, &bytes)?;
    }
    Ok(table)
}
