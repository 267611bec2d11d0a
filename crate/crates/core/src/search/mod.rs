// satred - reductions from satisfiability to quantum circuit optimisation
// Copyright (C) 2026 - the satred authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Exhaustive minimal-count searches at desk scale.
//!
//! Each search returns [`MinCount::Exact`] with the least count, or
//! [`MinCount::Exceeds`] when no implementation within `k_max` exists.
//! Running out of nodes or time is an error ([`Error::ResourceCap`]), never
//! a count.

mod hcount;
mod tcount;
mod tofcount;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use hcount::{exact_min_hcount, hfree_closure, HFreeCatalog};
pub use tcount::{exact_min_tcount, MAX_TCOUNT_QUBITS};
pub use tofcount::{exact_min_tofcount, is_linear_reversible, MAX_TOFCOUNT_WIRES};

pub const DEFAULT_NODE_CAP: u64 = 100_000_000;
pub const DEFAULT_TIME_CAP: Duration = Duration::from_secs(300);
pub const DEFAULT_K_MAX: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub k_max: usize,
    pub node_cap: u64,
    pub time_cap: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { k_max: DEFAULT_K_MAX, node_cap: DEFAULT_NODE_CAP, time_cap: DEFAULT_TIME_CAP }
    }
}

impl SearchBudget {
    pub fn with_k_max(k_max: usize) -> Self {
        SearchBudget { k_max, ..Default::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "result", content = "value")]
pub enum MinCount {
    Exact(usize),
    /// No implementation with at most this many gates.
    Exceeds(usize),
}

impl MinCount {
    pub fn exact(self) -> Option<usize> {
        match self {
            MinCount::Exact(k) => Some(k),
            MinCount::Exceeds(_) => None,
        }
    }
}

/// Node and wall-clock accounting shared by the searches.
pub(crate) struct Meter {
    nodes: u64,
    start: Instant,
    budget: SearchBudget,
}

impl Meter {
    pub(crate) fn new(budget: SearchBudget) -> Self {
        Meter { nodes: 0, start: Instant::now(), budget }
    }

    pub(crate) fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget.node_cap {
            return Err(Error::ResourceCap(format!("node cap {} reached", self.budget.node_cap)));
        }
        if self.nodes % 256 == 0 && self.start.elapsed() > self.budget.time_cap {
            return Err(Error::ResourceCap(format!("time cap {:?} reached", self.budget.time_cap)));
        }
        Ok(())
    }
}
