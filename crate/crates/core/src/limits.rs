use crate::error::{Error, Result};

/// Hard ceiling imposed by the one-word adjacency rows of [`crate::SmallGraph`].
pub const MAX_VERTICES: usize = 32;

/// Default vertex limit for enumeration, canonical forms and realization search.
pub const DEFAULT_VERTEX_LIMIT: usize = 12;

/// Work guards shared by the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` accepted by enumeration and realization-space search.
    pub vertex_limit: usize,
    /// Optional cap on the number of isomorphism classes a single
    /// realization walk may visit. Hitting it makes negative verdicts
    /// non-authoritative.
    pub realization_budget: Option<usize>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            vertex_limit: DEFAULT_VERTEX_LIMIT,
            realization_budget: None,
        }
    }
}

impl Limits {
    pub fn new(vertex_limit: usize) -> Result<Self> {
        if vertex_limit > MAX_VERTICES {
            return Err(Error::ResourceLimit {
                what: "vertex limit",
                limit: MAX_VERTICES,
                actual: vertex_limit,
            });
        }
        Ok(Limits {
            vertex_limit,
            realization_budget: None,
        })
    }

    pub fn with_budget(mut self, budget: Option<usize>) -> Self {
        self.realization_budget = budget;
        self
    }

    pub(crate) fn check_vertices(&self, n: usize) -> Result<()> {
        if n > self.vertex_limit {
            Err(Error::ResourceLimit {
                what: "vertex count",
                limit: self.vertex_limit,
                actual: n,
            })
        } else {
            Ok(())
        }
    }
}
