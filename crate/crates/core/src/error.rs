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

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("variable index overflow at position {position}: {text}")]
    VariableIndexOverflow { position: usize, text: String },
    #[error("variable x{index} out of range for {num_vars} declared variables")]
    VariableOutOfRange { index: usize, num_vars: usize },
    #[error("DIMACS line {line}: {message}")]
    Dimacs { line: usize, message: String },
    #[error("{num_vars} variables exceeds the limit of {max}")]
    TooManyVariables { num_vars: usize, max: usize },

    #[error("circuit line {line}: {message}")]
    CircuitFormat { line: usize, message: String },
    #[error("gate {index}: wire {wire} out of range for {num_wires} wires")]
    WireOutOfRange {
        index: usize,
        wire: usize,
        num_wires: usize,
    },
    #[error("gate {index}: duplicate operand wire {wire}")]
    DuplicateOperand { index: usize, wire: usize },
    #[error("{qubits} qubits exceeds the limit of {max} for this operation")]
    TooManyQubits { qubits: usize, max: usize },
    #[error("gate {index} ({kind}) has no exact matrix; resolve G gates numerically")]
    UnresolvedGate { index: usize, kind: &'static str },
    #[error("gate {index} ({kind}) is not a Clifford gate")]
    NonCliffordGate { index: usize, kind: &'static str },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("invalid gate definition: {0}")]
    GateDefinition(String),
    #[error("numeric routine did not converge: {0}")]
    NoConvergence(String),
    #[error("requested precision {requested} cannot be certified (best achieved {achieved})")]
    BudgetExceeded { requested: f64, achieved: f64 },
    #[error("base net too coarse: covering radius {radius} exceeds {requested}")]
    NetTooCoarse { radius: f64, requested: f64 },
    #[error("{0}")]
    InvalidArgument(String),
    #[error("search resource cap exhausted: {0}")]
    ResourceCap(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
