//! Wall-clock budget for per-graph exact computations.

use std::time::{Duration, Instant};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("per-graph budget exceeded")]
pub struct BudgetExceeded;

/// Optional deadline threaded through the exact search routines. The
/// default unlimited budget never expires.
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget { deadline: None }
    }

    pub fn from_ms(ms: u64) -> Budget {
        Budget {
            deadline: Some(Instant::now() + Duration::from_millis(ms)),
        }
    }

    /// Budget taken from the `CRITCOLOR_BUDGET_MS` environment variable,
    /// unlimited when unset or unparsable.
    pub fn from_env() -> Budget {
        match std::env::var("CRITCOLOR_BUDGET_MS") {
            Ok(v) => v.parse().map(Budget::from_ms).unwrap_or_default(),
            Err(_) => Budget::unlimited(),
        }
    }

    pub fn check(&self) -> Result<(), BudgetExceeded> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(BudgetExceeded),
            _ => Ok(()),
        }
    }
}
