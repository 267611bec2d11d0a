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

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde_json::Value;

use super::ring::RingElement;
use crate::circuit::{Circuit, Gate, GateKind};
use crate::error::{Error, Result};

/// Largest wire count accepted by [`exact_simulate`].
pub const MAX_EXACT_QUBITS: usize = 10;

/// A dense `2^n × 2^n` matrix over `ℤ[ω, 1/√2]`, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactUnitary {
    qubits: usize,
    entries: Vec<RingElement>,
}

impl ExactUnitary {
    pub fn identity(qubits: usize) -> Self {
        let dim = 1usize << qubits;
        let mut entries = vec![RingElement::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = RingElement::one();
        }
        ExactUnitary { qubits, entries }
    }

    /// Builds a matrix from row-major entries; unitarity is the caller's
    /// responsibility (see [`ExactUnitary::is_unitary`]).
    pub fn from_entries(qubits: usize, entries: Vec<RingElement>) -> Result<Self> {
        let dim = 1usize << qubits;
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch(entries.len(), dim * dim));
        }
        Ok(ExactUnitary { qubits, entries })
    }

    pub fn diagonal(qubits: usize, diag: Vec<RingElement>) -> Result<Self> {
        let dim = 1usize << qubits;
        if diag.len() != dim {
            return Err(Error::DimensionMismatch(diag.len(), dim));
        }
        let mut u = ExactUnitary::identity(qubits);
        for (i, d) in diag.into_iter().enumerate() {
            u.entries[i * dim + i] = d;
        }
        Ok(u)
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn dim(&self) -> usize {
        1 << self.qubits
    }

    pub fn get(&self, row: usize, col: usize) -> &RingElement {
        &self.entries[row * self.dim() + col]
    }

    pub fn entries(&self) -> &[RingElement] {
        &self.entries
    }

    fn swap_rows(&mut self, r0: usize, r1: usize) {
        let dim = self.dim();
        for c in 0..dim {
            self.entries.swap(r0 * dim + c, r1 * dim + c);
        }
    }

    fn scale_row_omega(&mut self, r: usize, j: i64) {
        let dim = self.dim();
        for x in &mut self.entries[r * dim..(r + 1) * dim] {
            *x = x.mul_omega(j);
        }
    }

    /// Left-multiplies by `gate`, i.e. applies it after the current operator.
    pub fn apply_gate(&mut self, gate: &Gate, index: usize) -> Result<()> {
        let dim = self.dim();
        let w = gate.wires();
        let bit = |q: usize| 1usize << q;
        match gate.kind {
            GateKind::X => {
                for r in (0..dim).filter(|r| r & bit(w[0]) == 0) {
                    self.swap_rows(r, r | bit(w[0]));
                }
            }
            GateKind::H => {
                let s = RingElement::inv_sqrt2();
                for r0 in (0..dim).filter(|r| r & bit(w[0]) == 0) {
                    let r1 = r0 | bit(w[0]);
                    for c in 0..dim {
                        let a = &self.entries[r0 * dim + c];
                        let b = &self.entries[r1 * dim + c];
                        let (sum, diff) = (a + b, a - b);
                        self.entries[r0 * dim + c] = &sum * &s;
                        self.entries[r1 * dim + c] = &diff * &s;
                    }
                }
            }
            GateKind::S | GateKind::Sdg | GateKind::T | GateKind::Tdg => {
                let j = match gate.kind {
                    GateKind::S => 2,
                    GateKind::Sdg => 6,
                    GateKind::T => 1,
                    _ => 7,
                };
                for r in (0..dim).filter(|r| r & bit(w[0]) != 0) {
                    self.scale_row_omega(r, j);
                }
            }
            GateKind::CX => {
                for r in (0..dim).filter(|r| r & bit(w[0]) != 0 && r & bit(w[1]) == 0) {
                    self.swap_rows(r, r | bit(w[1]));
                }
            }
            GateKind::CZ => {
                for r in (0..dim).filter(|r| r & bit(w[0]) != 0 && r & bit(w[1]) != 0) {
                    self.scale_row_omega(r, 4);
                }
            }
            GateKind::CCX => {
                let controls = bit(w[0]) | bit(w[1]);
                for r in (0..dim).filter(|r| r & controls == controls && r & bit(w[2]) == 0) {
                    self.swap_rows(r, r | bit(w[2]));
                }
            }
            GateKind::G | GateKind::Gdg => {
                return Err(Error::UnresolvedGate {
                    index,
                    kind: gate.kind.mnemonic(),
                })
            }
        }
        Ok(())
    }

    pub fn mul(&self, rhs: &ExactUnitary) -> ExactUnitary {
        assert_eq!(self.qubits, rhs.qubits, "dimension mismatch");
        let dim = self.dim();
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                let mut acc = RingElement::zero();
                for k in 0..dim {
                    let a = self.get(r, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * b);
                }
                entries.push(acc);
            }
        }
        ExactUnitary {
            qubits: self.qubits,
            entries,
        }
    }

    /// Matrix-vector product with column `col` of `rhs`-shaped vector `v`.
    pub fn apply_to_vector(&self, v: &[RingElement]) -> Vec<RingElement> {
        let dim = self.dim();
        (0..dim)
            .map(|r| {
                let mut acc = RingElement::zero();
                for (k, x) in v.iter().enumerate() {
                    let a = self.get(r, k);
                    if !x.is_zero() && !a.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn column(&self, col: usize) -> Vec<RingElement> {
        (0..self.dim()).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn adjoint(&self) -> ExactUnitary {
        let dim = self.dim();
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                entries.push(self.get(c, r).conj());
            }
        }
        ExactUnitary {
            qubits: self.qubits,
            entries,
        }
    }

    pub fn scale_omega(&self, j: i64) -> ExactUnitary {
        ExactUnitary {
            qubits: self.qubits,
            entries: self.entries.iter().map(|x| x.mul_omega(j)).collect(),
        }
    }

    pub fn is_diagonal(&self) -> bool {
        let dim = self.dim();
        (0..dim).all(|r| (0..dim).all(|c| r == c || self.get(r, c).is_zero()))
    }

    pub fn is_identity(&self) -> bool {
        *self == ExactUnitary::identity(self.qubits)
    }

    /// Exact check of `U†U = I`.
    pub fn is_unitary(&self) -> bool {
        self.adjoint().mul(self).is_identity()
    }

    /// Returns `k` with `self = ω^k · other`, reading the candidate phase off
    /// the first nonzero entry of `other`.
    pub fn equal_up_to_phase(&self, other: &ExactUnitary) -> Option<u8> {
        if self.qubits != other.qubits {
            return None;
        }
        let pos = other.entries.iter().position(|x| !x.is_zero())?;
        let k = (0..8u8).find(|&k| self.entries[pos] == other.entries[pos].mul_omega(k as i64))?;
        self.entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| *a == b.mul_omega(k as i64))
            .then_some(k)
    }

    /// Canonical representative of the class `{ω^k · U}`.
    ///
    /// When some multiple makes the first nonzero entry a positive real (true
    /// for every Clifford) that multiple is chosen; otherwise the
    /// lexicographically least of the eight multiples is used.
    pub fn phase_canonical(&self) -> ExactUnitary {
        let Some(pos) = self.entries.iter().position(|x| !x.is_zero()) else {
            return self.clone();
        };
        let lead = &self.entries[pos];
        if let Some(k) = (0..8i64).find(|&k| lead.mul_omega(k).is_positive_real()) {
            return self.scale_omega(k);
        }
        (0..8i64)
            .map(|k| self.scale_omega(k))
            .min_by(|a, b| a.entries.cmp(&b.entries))
            .unwrap()
    }

    pub fn to_numeric(&self) -> DMatrix<Complex64> {
        let dim = self.dim();
        DMatrix::from_fn(dim, dim, |r, c| self.get(r, c).to_complex())
    }

    /// Debug dump: a JSON array of rows of `[a, b, c, d, k]` tuples.
    pub fn to_json(&self) -> Value {
        let dim = self.dim();
        Value::Array(
            (0..dim)
                .map(|r| Value::Array((0..dim).map(|c| self.get(r, c).to_json()).collect()))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        let rows = v.as_array()?;
        let dim = rows.len();
        if !dim.is_power_of_two() {
            return None;
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            let row = row.as_array()?;
            if row.len() != dim {
                return None;
            }
            for x in row {
                entries.push(RingElement::from_json(x)?);
            }
        }
        Some(ExactUnitary {
            qubits: dim.trailing_zeros() as usize,
            entries,
        })
    }

    /// Restricts to the `2×2` block acting on `wire` with every other wire
    /// fixed to the bits of `rest` (bit `wire` of `rest` is ignored).
    pub fn wire_block(&self, wire: usize, rest: usize) -> [RingElement; 4] {
        let base = rest & !(1 << wire);
        let idx = |b: usize| base | (b << wire);
        [
            self.get(idx(0), idx(0)).clone(),
            self.get(idx(0), idx(1)).clone(),
            self.get(idx(1), idx(0)).clone(),
            self.get(idx(1), idx(1)).clone(),
        ]
    }
}

impl fmt::Debug for ExactUnitary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dim = self.dim();
        writeln!(f, "ExactUnitary({} qubits)", self.qubits)?;
        for r in 0..dim {
            let row: Vec<String> = (0..dim).map(|c| format!("{:?}", self.get(r, c))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Exact unitary of a circuit without `g`/`gdg` gates.
pub fn exact_simulate(c: &Circuit) -> Result<ExactUnitary> {
    if c.num_wires() > MAX_EXACT_QUBITS {
        return Err(Error::TooManyQubits {
            qubits: c.num_wires(),
            max: MAX_EXACT_QUBITS,
        });
    }
    let mut u = ExactUnitary::identity(c.num_wires());
    for (i, g) in c.gates().iter().enumerate() {
        u.apply_gate(g, i)?;
    }
    Ok(u)
}
