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

use std::fmt;

use serde::{Deserialize, Serialize};

use super::ring::RingElement;
use super::unitary::ExactUnitary;

/// Largest register [`is_clifford_exact`] accepts.
pub const MAX_CLIFFORD_TEST_QUBITS: usize = 8;

/// `i^phase · ⊗_j X^{x_j} Z^{z_j}`. With this convention `Y = i·XZ` has
/// `phase = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PauliOperator {
    pub phase: u8,
    pub x: Vec<bool>,
    pub z: Vec<bool>,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        PauliOperator {
            phase: 0,
            x: vec![false; n],
            z: vec![false; n],
        }
    }

    pub fn x_on(n: usize, wire: usize) -> Self {
        let mut p = Self::identity(n);
        p.x[wire] = true;
        p
    }

    pub fn z_on(n: usize, wire: usize) -> Self {
        let mut p = Self::identity(n);
        p.z[wire] = true;
        p
    }

    /// `X^{bits}` on the first `bits.len()` wires of an `n`-wire register.
    pub fn x_string(n: usize, bits: &[bool]) -> Self {
        let mut p = Self::identity(n);
        p.x[..bits.len()].copy_from_slice(bits);
        p
    }

    pub fn num_qubits(&self) -> usize {
        self.x.len()
    }

    fn mask(bits: &[bool]) -> usize {
        bits.iter()
            .enumerate()
            .fold(0, |m, (i, &b)| m | (usize::from(b) << i))
    }

    pub fn x_mask(&self) -> usize {
        Self::mask(&self.x)
    }

    pub fn z_mask(&self) -> usize {
        Self::mask(&self.z)
    }

    /// Image of basis column `c`: `(row, ω-exponent)` with
    /// `P|c⟩ = ω^e |row⟩`.
    pub fn column_action(&self, c: usize) -> (usize, i64) {
        let sign = ((self.z_mask() & c).count_ones() % 2) as i64;
        (c ^ self.x_mask(), 2 * i64::from(self.phase) + 4 * sign)
    }

    pub fn to_exact(&self) -> ExactUnitary {
        let n = self.num_qubits();
        let dim = 1 << n;
        let mut entries = vec![RingElement::zero(); dim * dim];
        for c in 0..dim {
            let (r, e) = self.column_action(c);
            entries[r * dim + c] = RingElement::omega_pow(e);
        }
        ExactUnitary::from_entries(n, entries).unwrap()
    }

    /// Applies `P` to a column vector.
    fn apply(&self, v: &[RingElement]) -> Vec<RingElement> {
        let mut out = vec![RingElement::zero(); v.len()];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let (r, e) = self.column_action(c);
            out[r] = x.mul_omega(e);
        }
        out
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ph = ["+", "+i", "-", "-i"][self.phase as usize % 4];
        let letters: String = self
            .x
            .iter()
            .zip(&self.z)
            .map(|(&x, &z)| match (x, z) {
                (false, false) => 'I',
                (true, false) => 'X',
                (false, true) => 'Z',
                (true, true) => 'W', // XZ = -iY
            })
            .collect();
        write!(f, "{ph}{letters}")
    }
}

/// Computes `C† P C` exactly and returns it when it is a Pauli operator.
///
/// The candidate is read off the first columns of the product and then
/// confirmed through the equivalent identity `P C = C Q`, which avoids a
/// full cubic product and any enumeration of the Pauli group.
pub fn pauli_conjugate(c: &ExactUnitary, p: &PauliOperator) -> Option<PauliOperator> {
    let n = c.qubits();
    if p.num_qubits() != n {
        return None;
    }
    let adj = c.adjoint();
    let image_column = |col: usize| adj.apply_to_vector(&p.apply(&c.column(col)));

    // Column 0: exactly one nonzero entry, at row x, equal to i^phase.
    let col0 = image_column(0);
    let mut nz = col0.iter().enumerate().filter(|(_, v)| !v.is_zero());
    let (xmask, lead) = nz.next()?;
    if nz.next().is_some() {
        return None;
    }
    let e = lead.as_omega_power()?;
    if e % 2 != 0 {
        return None;
    }
    let phase = e / 2;
    let mut z = vec![false; n];
    for (j, zj) in z.iter_mut().enumerate() {
        let col = image_column(1 << j);
        let entry = &col[(1 << j) ^ xmask];
        let ej = entry.as_omega_power()?;
        match (i64::from(ej) - i64::from(e)).rem_euclid(8) {
            0 => {}
            4 => *zj = true,
            _ => return None,
        }
    }
    let q = PauliOperator {
        phase,
        x: (0..n).map(|i| (xmask >> i) & 1 == 1).collect(),
        z,
    };

    // Confirm P·C = C·Q column by column: (C·Q)|c⟩ = ω^e C|row⟩.
    let dim = c.dim();
    for col in 0..dim {
        let lhs = p.apply(&c.column(col));
        let (row, e) = q.column_action(col);
        for (r, l) in lhs.iter().enumerate() {
            if *l != c.get(r, row).mul_omega(e) {
                return None;
            }
        }
    }
    Some(q)
}

/// Clifford test: every `X_i` and `Z_i` conjugates to a Pauli.
pub fn is_clifford_exact(c: &ExactUnitary) -> bool {
    let n = c.qubits();
    assert!(
        n <= MAX_CLIFFORD_TEST_QUBITS,
        "is_clifford_exact supports at most {MAX_CLIFFORD_TEST_QUBITS} qubits"
    );
    (0..n).all(|i| {
        pauli_conjugate(c, &PauliOperator::x_on(n, i)).is_some()
            && pauli_conjugate(c, &PauliOperator::z_on(n, i)).is_some()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::parse_circuit;
    use crate::exact::exact_simulate;

    fn sim(text: &str) -> ExactUnitary {
        exact_simulate(&parse_circuit(text).unwrap()).unwrap()
    }

    /// Independent route: full matrix product then pattern match.
    fn conjugate_by_product(c: &ExactUnitary, p: &PauliOperator) -> ExactUnitary {
        c.adjoint().mul(&p.to_exact()).mul(c)
    }

    #[test]
    fn hadamard_maps_x_to_z() {
        let q = pauli_conjugate(&sim("qubits 1\nh 0"), &PauliOperator::x_on(1, 0)).unwrap();
        assert_eq!(q, PauliOperator::z_on(1, 0));
    }

    #[test]
    fn t_is_not_clifford() {
        let t = sim("qubits 1\nt 0");
        assert!(pauli_conjugate(&t, &PauliOperator::x_on(1, 0)).is_none());
        assert!(!is_clifford_exact(&t));
    }

    #[test]
    fn s_maps_x_to_y() {
        // S† X S = -Y = -i·XZ  → phase 3 in the i^p X Z convention
        let q = pauli_conjugate(&sim("qubits 1\ns 0"), &PauliOperator::x_on(1, 0)).unwrap();
        assert_eq!(q.x, vec![true]);
        assert_eq!(q.z, vec![true]);
        let direct = conjugate_by_product(&sim("qubits 1\ns 0"), &PauliOperator::x_on(1, 0));
        assert_eq!(direct, q.to_exact());
    }

    #[test]
    fn cliffordness_of_small_gates() {
        assert!(is_clifford_exact(&sim("qubits 2\ncx 0 1")));
        assert!(is_clifford_exact(&sim("qubits 2\nh 0\ns 1\ncz 0 1\nsdg 0")));
        assert!(!is_clifford_exact(&sim("qubits 3\nccx 0 1 2")));
        assert!(is_clifford_exact(&sim("qubits 1\nt 0\nt 0")));
    }

    #[test]
    fn agrees_with_full_product_route() {
        let circuits = [
            "qubits 2\nh 0\ncx 0 1\ns 1",
            "qubits 2\nt 0\ncx 0 1\nh 1",
            "qubits 3\nccx 0 1 2\nh 0",
            "qubits 2\ncz 0 1\nh 1\nsdg 0\nx 1",
        ];
        for text in circuits {
            let c = sim(text);
            for mask in 0..16usize {
                let p = PauliOperator {
                    phase: (mask % 4) as u8,
                    x: vec![mask & 1 != 0, mask & 2 != 0, false][..c.qubits()].to_vec(),
                    z: vec![mask & 4 != 0, mask & 8 != 0, mask & 1 != 0][..c.qubits()].to_vec(),
                };
                let fast = pauli_conjugate(&c, &p);
                let direct = conjugate_by_product(&c, &p);
                match fast {
                    Some(q) => assert_eq!(q.to_exact(), direct, "{text} {p:?}"),
                    None => {
                        // direct result must not be any Pauli matrix
                        let n = c.qubits();
                        for ph in 0..4u8 {
                            for xm in 0..1usize << n {
                                for zm in 0..1usize << n {
                                    let cand = PauliOperator {
                                        phase: ph,
                                        x: (0..n).map(|i| xm >> i & 1 == 1).collect(),
                                        z: (0..n).map(|i| zm >> i & 1 == 1).collect(),
                                    };
                                    assert_ne!(cand.to_exact(), direct);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
