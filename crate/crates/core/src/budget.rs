use crate::error::{Error, Result};

/// Step meter for the exponential searches.
///
/// One step is one search-tree node of the coloring backtracker or one
/// candidate subset in the mitigating-set enumeration.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: Option<u64>,
    used: u64,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { limit: None, used: 0 }
    }

    pub fn steps(limit: u64) -> Self {
        Budget { limit: Some(limit), used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> Option<u64> {
        self.limit
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        match self.limit {
            Some(limit) if self.used > limit => Err(Error::BudgetExceeded(limit)),
            _ => Ok(()),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}
