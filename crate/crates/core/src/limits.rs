use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Default cap on the number of faces materialized in one dimension.
pub const DEFAULT_MAX_FACES: usize = 5_000_000;

/// Default cap on the number of tuples examined by a Tverberg search.
pub const DEFAULT_MAX_TUPLES: u64 = 50_000_000;

/// Resource caps shared by every enumeration in the crate.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub max_faces: usize,
    pub max_tuples: u64,
    pub deadline: Option<Instant>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_faces: DEFAULT_MAX_FACES,
            max_tuples: DEFAULT_MAX_TUPLES,
            deadline: None,
        }
    }
}

impl Limits {
    pub fn with_max_faces(mut self, max_faces: usize) -> Self {
        self.max_faces = max_faces;
        self
    }

    pub fn with_max_tuples(mut self, max_tuples: u64) -> Self {
        self.max_tuples = max_tuples;
        self
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.deadline = Some(Instant::now() + limit);
        self
    }

    pub(crate) fn check_faces(&self, dim: usize, count: usize) -> Result<()> {
        if count > self.max_faces {
            return Err(Error::ResourceLimit {
                what: format!("more than {} faces in dimension {dim}", self.max_faces),
                progress: count as u64,
            });
        }
        Ok(())
    }

    pub(crate) fn check_time(&self, progress: u64) -> Result<()> {
        match self.deadline {
            Some(deadline) if Instant::now() > deadline => Err(Error::ResourceLimit {
                what: "time limit".into(),
                progress,
            }),
            _ => Ok(()),
        }
    }
}
