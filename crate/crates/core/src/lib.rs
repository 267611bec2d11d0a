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

//! Reductions from Boolean satisfiability to quantum circuit optimisation
//! problems, with the exact and numeric analysis needed to check them.
//!
//! The pipeline is: a [`boolfn::BoolExpr`] is compiled by [`synth`] into a
//! [`circuit::Circuit`] whose optimal T-, Toffoli-, CNOT-, Hadamard- or
//! G-count is zero exactly when the formula is unsatisfiable or a tautology.
//! The [`exact`], [`numeric`], [`clifford`], [`search`] and [`sk`] modules
//! decide the relevant circuit properties at desk scale.

pub mod boolfn;
pub mod circuit;
pub mod clifford;
pub mod error;
pub mod exact;
pub mod numeric;
pub mod search;
pub mod sk;
pub mod synth;

pub use error::{Error, Result};
