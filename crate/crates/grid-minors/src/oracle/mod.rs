//! Small-instance ground-truth engines: exact treewidth, minor containment,
//! and planarity. Every certificate produced elsewhere in the crate can be
//! checked against these on instances within the size limits.

mod minor;
mod planarity;
mod treewidth;

pub use minor::{minor_by_enumeration, minor_test, MinorOutcome};
pub use planarity::planarity_test;
pub use treewidth::exact_treewidth;

use crate::error::{Error, Result};

/// Hard size caps enforced before any oracle search starts.
#[derive(Clone, Debug)]
pub struct OracleLimits {
    /// Vertex cap for the exact-treewidth subset DP (table is `2^n` bytes).
    pub max_tw_vertices: usize,
    /// Pattern-vertex cap for minor search.
    pub max_minor_pattern: usize,
    /// Host-vertex cap for minor search (branch sets are 64-bit masks).
    pub max_minor_host: usize,
    /// Step budget per minor-search call; a deterministic stand-in for a
    /// wall-clock budget so identical runs fail identically.
    pub max_search_steps: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_tw_vertices: 18,
            max_minor_pattern: 6,
            max_minor_host: 64,
            max_search_steps: 20_000_000,
        }
    }
}

impl OracleLimits {
    pub fn validate(&self) -> Result<()> {
        if self.max_tw_vertices == 0
            || self.max_minor_pattern == 0
            || self.max_minor_host == 0
            || self.max_search_steps == 0
        {
            return Err(Error::InvalidArgument(
                "oracle limits must be positive".into(),
            ));
        }
        if self.max_tw_vertices > 25 {
            return Err(Error::InvalidArgument(
                "treewidth oracle limit above 25 would need a >32 MiB table".into(),
            ));
        }
        if self.max_minor_host > 64 {
            return Err(Error::InvalidArgument(
                "minor oracle host limit above 64 exceeds the bitmask width".into(),
            ));
        }
        Ok(())
    }
}
