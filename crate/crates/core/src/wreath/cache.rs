//! Exact `H_λ` tables for one `(r, α, n)`, with an on-disk JSON cache.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coeff::{ExactBackend, RatFunc};
use crate::error::{Error, Result};
use crate::partition::{enumerate_with_core, is_core, multipartitions, MultiPartition, Partition};
use crate::symfunc::{schur_to_powersum, ColoredSymFunc};

use super::solver::{solve_h_exact, Normalization};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "WREATH_CACHE_DIR";

/// Bumped whenever the solver or the table layout changes; stale files are
/// recomputed.
pub const TABLE_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableEntry {
    pub lambda: Partition,
    /// Coefficients on `basis`, in order.
    pub schur: Vec<RatFunc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WreathBasisTable {
    pub version: u32,
    pub r: u32,
    pub core: Partition,
    pub n: u32,
    pub normalization: Normalization,
    pub basis: Vec<MultiPartition>,
    pub entries: Vec<TableEntry>,
}

impl WreathBasisTable {
    /// Solves every `H_λ` with core `α` and `|quot λ| = n`, in parallel.
    pub fn compute(r: u32, core: &Partition, n: u32, normalization: Normalization) -> Result<Self> {
        if !is_core(core, r)? {
            return Err(Error::InvalidInput(format!("{} is not a {}-core", core, r)));
        }
        let lambdas = enumerate_with_core(core, r, n)?;
        let entries = lambdas
            .par_iter()
            .map(|lambda| {
                Ok(TableEntry {
                    lambda: lambda.clone(),
                    schur: solve_h_exact(lambda, r, normalization)?.as_ref().clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            version: TABLE_VERSION,
            r,
            core: core.clone(),
            n,
            normalization,
            basis: multipartitions(r, n),
            entries,
        })
    }

    pub fn file_name(r: u32, core: &Partition, n: u32, normalization: Normalization) -> String {
        let core: Vec<String> = core.parts().iter().map(|p| p.to_string()).collect();
        let norm = match normalization {
            Normalization::Color0 => "c0",
            Normalization::AllColors => "all",
        };
        format!(
            "h-r{}-core{}-n{}-{}-v{}.json",
            r,
            core.join("_"),
            n,
            norm,
            TABLE_VERSION
        )
    }

    /// Reads a cached table when present and current, otherwise computes and
    /// writes it. Returns the table and whether the cache was hit.
    pub fn load_or_compute(
        dir: Option<&Path>,
        r: u32,
        core: &Partition,
        n: u32,
        normalization: Normalization,
    ) -> Result<(Self, bool)> {
        let path = dir.map(|d| d.join(Self::file_name(r, core, n, normalization)));
        if let Some(p) = &path {
            if let Ok(text) = fs::read_to_string(p) {
                if let Ok(t) = serde_json::from_str::<Self>(&text) {
                    if t.version == TABLE_VERSION
                        && t.r == r
                        && &t.core == core
                        && t.n == n
                        && t.normalization == normalization
                    {
                        return Ok((t, true));
                    }
                }
            }
        }
        let t = Self::compute(r, core, n, normalization)?;
        if let Some(p) = &path {
            t.write(p)?;
        }
        Ok((t, false))
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent).map_err(|e| Error::Io(e.to_string()))?;
        }
        let text = serde_json::to_string(self).map_err(|e| Error::Io(e.to_string()))?;
        fs::write(path, text).map_err(|e| Error::Io(e.to_string()))
    }

    /// `H_λ` as exact colored power-sum expansions.
    pub fn powersum(&self) -> Result<Vec<(Partition, ColoredSymFunc<RatFunc>)>> {
        let b = ExactBackend::new();
        let schur: Vec<ColoredSymFunc<RatFunc>> = self
            .basis
            .iter()
            .map(|nu| schur_to_powersum(nu, self.n, &b))
            .collect::<Result<_>>()?;
        Ok(self
            .entries
            .iter()
            .map(|e| {
                let mut f = ColoredSymFunc::zero(self.r, self.n);
                for (s, c) in schur.iter().zip(&e.schur) {
                    if !c.is_zero() {
                        f = f.add(&s.scale(c));
                    }
                }
                (e.lambda.clone(), f)
            })
            .collect())
    }
}

/// The cache directory from the environment, if set.
pub fn cache_dir_from_env() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
}
