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

//! Stabilizer tableaux, canonical Clifford resynthesis, enumeration of the
//! small Clifford groups and nearest-Clifford distances.

mod catalog;
mod nearest;
mod tableau;

pub use catalog::{enumerate_clifford_group, expected_size, CliffordCatalog};
pub use nearest::{
    nearest_clifford_distance, nearest_in_catalog, round_to_clifford, NearestClifford,
    RoundedClifford, TIE_TOL,
};
pub use tableau::{
    canonical_circuit, tableau_simulate, CliffordTableau, CANONICAL_GATE_FACTOR,
    MAX_TABLEAU_QUBITS,
};
