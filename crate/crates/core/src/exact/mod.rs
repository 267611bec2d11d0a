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

//! Exact linear algebra over `ℤ[ω, 1/√2]`.
//!
//! Every Clifford+T (and Toffoli) circuit has entries in this ring, so
//! equality, Cliffordness, diagonality and Pauli membership are decided
//! exactly rather than up to a tolerance.

mod pauli;
mod ring;
mod unitary;

pub use pauli::{is_clifford_exact, pauli_conjugate, PauliOperator, MAX_CLIFFORD_TEST_QUBITS};
pub use ring::RingElement;
pub use unitary::{exact_simulate, ExactUnitary, MAX_EXACT_QUBITS};

use serde::{Deserialize, Serialize};

/// Diagonal eighth-root unitary `diag(ω^{e(x)})`, exponents mod 8.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PhaseProfile {
    pub exponents: Vec<u8>,
}

impl PhaseProfile {
    /// All exponents even and every third-order finite difference over the
    /// Boolean cube vanishing (mod 8): the diagonal Clifford criterion.
    pub fn is_clifford_diagonal(&self) -> bool {
        if self.exponents.iter().any(|e| e % 2 != 0) {
            return false;
        }
        let n = self.exponents.len().trailing_zeros() as usize;
        let e = |x: usize| i64::from(self.exponents[x]);
        for x in 0..self.exponents.len() {
            for a in 0..n {
                for b in (a + 1)..n {
                    for c in (b + 1)..n {
                        let (ba, bb, bc) = (1 << a, 1 << b, 1 << c);
                        if x & (ba | bb | bc) != 0 {
                            continue;
                        }
                        let mut d = 0i64;
                        for mask in 0..8usize {
                            let mut y = x;
                            if mask & 1 != 0 {
                                y |= ba;
                            }
                            if mask & 2 != 0 {
                                y |= bb;
                            }
                            if mask & 4 != 0 {
                                y |= bc;
                            }
                            let sign = if mask.count_ones() % 2 == 1 { -1 } else { 1 };
                            d += sign * e(y);
                        }
                        if d.rem_euclid(8) != 0 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Exactly one nonzero entry per row and column, each an eighth root of
/// unity.
pub fn is_generalized_permutation(u: &ExactUnitary) -> bool {
    let dim = u.dim();
    let mut col_used = vec![false; dim];
    for r in 0..dim {
        let mut found = None;
        for c in 0..dim {
            let x = u.get(r, c);
            if x.is_zero() {
                continue;
            }
            if found.is_some() || x.as_omega_power().is_none() {
                return false;
            }
            found = Some(c);
        }
        match found {
            Some(c) if !col_used[c] => col_used[c] = true,
            _ => return false,
        }
    }
    true
}

/// Exponents of a diagonal unitary whose entries are eighth roots of unity,
/// or `None` (the "not diagonal eighth-root" case).
pub fn phase_profile(u: &ExactUnitary) -> Option<PhaseProfile> {
    let dim = u.dim();
    let mut exponents = Vec::with_capacity(dim);
    for r in 0..dim {
        for c in 0..dim {
            if r != c && !u.get(r, c).is_zero() {
                return None;
            }
        }
        exponents.push(u.get(r, r).as_omega_power()?);
    }
    Some(PhaseProfile { exponents })
}
