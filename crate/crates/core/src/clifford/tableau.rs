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

use crate::circuit::{Circuit, Gate, GateKind};
use crate::error::{Error, Result};
use crate::exact::{pauli_conjugate, ExactUnitary, PauliOperator};

/// Largest register a tableau can represent.
pub const MAX_TABLEAU_QUBITS: usize = 64;

/// `i^p · X^x Z^z` with bit-packed masks.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub(crate) struct Row {
    pub x: u64,
    pub z: u64,
    pub p: u8,
}

impl Row {
    fn mul(self, rhs: Row) -> Row {
        let swap = (self.z & rhs.x).count_ones() as u8;
        Row {
            x: self.x ^ rhs.x,
            z: self.z ^ rhs.z,
            p: (self.p + rhs.p + 2 * swap) % 4,
        }
    }

    fn anticommutes(self, rhs: Row) -> bool {
        ((self.x & rhs.z).count_ones() + (self.z & rhs.x).count_ones()) % 2 == 1
    }

    fn is_hermitian(self) -> bool {
        (u32::from(self.p) + (self.x & self.z).count_ones()) % 2 == 0
    }

    /// Sign bit in the `±⊗{I,X,Y,Z}` convention.
    fn sign(self) -> bool {
        let w = (self.x & self.z).count_ones() as u8 % 4;
        (self.p + 4 - w) % 4 == 2
    }

    /// Replaces the row by `g · row · g†`.
    fn conjugate_by(&mut self, g: &Gate) {
        let w = g.wires();
        let bit = |r: u64, q: usize| ((r >> q) & 1) as u8;
        match g.kind {
            GateKind::H => {
                let (xa, za) = (bit(self.x, w[0]), bit(self.z, w[0]));
                self.p = (self.p + 2 * (xa & za)) % 4;
                let m = 1u64 << w[0];
                self.x = (self.x & !m) | (u64::from(za) << w[0]);
                self.z = (self.z & !m) | (u64::from(xa) << w[0]);
            }
            GateKind::S | GateKind::Sdg => {
                let xa = bit(self.x, w[0]);
                let step = if g.kind == GateKind::S { 1 } else { 3 };
                self.p = (self.p + step * xa) % 4;
                self.z ^= u64::from(xa) << w[0];
            }
            GateKind::X => {
                self.p = (self.p + 2 * bit(self.z, w[0])) % 4;
            }
            GateKind::CX => {
                let (c, t) = (w[0], w[1]);
                self.x ^= u64::from(bit(self.x, c)) << t;
                self.z ^= u64::from(bit(self.z, t)) << c;
            }
            GateKind::CZ => {
                let (a, b) = (w[0], w[1]);
                let (xa, xb) = (bit(self.x, a), bit(self.x, b));
                self.p = (self.p + 2 * (xa & xb)) % 4;
                self.z ^= (u64::from(xb) << a) | (u64::from(xa) << b);
            }
            _ => unreachable!("non-Clifford gate reached the tableau"),
        }
    }

    fn from_pauli(p: &PauliOperator) -> Row {
        Row {
            x: p.x_mask() as u64,
            z: p.z_mask() as u64,
            p: p.phase % 4,
        }
    }

    fn to_pauli(self, n: usize) -> PauliOperator {
        PauliOperator {
            phase: self.p,
            x: (0..n).map(|i| (self.x >> i) & 1 == 1).collect(),
            z: (0..n).map(|i| (self.z >> i) & 1 == 1).collect(),
        }
    }
}

/// Conjugation action `P ↦ U P U†` of a Clifford on the generators
/// `X_0..X_{n-1}, Z_0..Z_{n-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CliffordTableau {
    n: usize,
    rows: Vec<Row>,
}

impl CliffordTableau {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_TABLEAU_QUBITS);
        let mut rows = Vec::with_capacity(2 * n);
        rows.extend((0..n).map(|i| Row { x: 1 << i, z: 0, p: 0 }));
        rows.extend((0..n).map(|i| Row { x: 0, z: 1 << i, p: 0 }));
        CliffordTableau { n, rows }
    }

    /// Builds a tableau from the images of `X_i` and `Z_i`; fails unless the
    /// images are Hermitian and satisfy the symplectic commutation relations.
    pub fn from_images(x_images: &[PauliOperator], z_images: &[PauliOperator]) -> Result<Self> {
        let n = x_images.len();
        if z_images.len() != n {
            return Err(Error::DimensionMismatch(n, z_images.len()));
        }
        if n > MAX_TABLEAU_QUBITS {
            return Err(Error::TooManyQubits { qubits: n, max: MAX_TABLEAU_QUBITS });
        }
        if x_images.iter().chain(z_images).any(|p| p.num_qubits() != n) {
            return Err(Error::InvalidArgument("Pauli image has the wrong width".into()));
        }
        let rows = x_images.iter().chain(z_images).map(Row::from_pauli).collect();
        let t = CliffordTableau { n, rows };
        if !t.is_valid() {
            return Err(Error::InvalidArgument(
                "images violate the symplectic commutation relations".into(),
            ));
        }
        Ok(t)
    }

    /// Reads the tableau of an exact Clifford unitary, or `None` when the
    /// unitary is not Clifford.
    pub fn from_exact(u: &ExactUnitary) -> Option<Self> {
        let n = u.qubits();
        let adj = u.adjoint();
        let xs: Option<Vec<_>> = (0..n)
            .map(|i| pauli_conjugate(&adj, &PauliOperator::x_on(n, i)))
            .collect();
        let zs: Option<Vec<_>> = (0..n)
            .map(|i| pauli_conjugate(&adj, &PauliOperator::z_on(n, i)))
            .collect();
        CliffordTableau::from_images(&xs?, &zs?).ok()
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn image_x(&self, i: usize) -> PauliOperator {
        self.rows[i].to_pauli(self.n)
    }

    pub fn image_z(&self, i: usize) -> PauliOperator {
        self.rows[self.n + i].to_pauli(self.n)
    }

    /// Row `r` of the `2n × 2n` binary matrix: `(x bits, z bits)`.
    pub fn symplectic_row(&self, r: usize) -> (Vec<bool>, Vec<bool>) {
        let row = self.rows[r];
        (
            (0..self.n).map(|i| (row.x >> i) & 1 == 1).collect(),
            (0..self.n).map(|i| (row.z >> i) & 1 == 1).collect(),
        )
    }

    /// Phase bits: row `r` is `(−1)^{bit} ⊗ {I,X,Y,Z}`.
    pub fn phase_bits(&self) -> Vec<bool> {
        self.rows.iter().map(|r| r.sign()).collect()
    }

    pub fn is_valid(&self) -> bool {
        let n = self.n;
        if self.rows.len() != 2 * n || !self.rows.iter().all(|r| r.is_hermitian()) {
            return false;
        }
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        if self.rows.iter().any(|r| (r.x | r.z) & !mask != 0) {
            return false;
        }
        for a in 0..2 * n {
            for b in (a + 1)..2 * n {
                let expected = b == a + n;
                if self.rows[a].anticommutes(self.rows[b]) != expected {
                    return false;
                }
            }
        }
        true
    }

    /// Applies a Clifford gate after the operator represented so far.
    pub fn apply_gate(&mut self, gate: &Gate) -> Result<()> {
        self.apply_gate_at(gate, 0)
    }

    fn apply_gate_at(&mut self, gate: &Gate, index: usize) -> Result<()> {
        if !gate.kind.is_clifford() {
            return Err(Error::NonCliffordGate { index, kind: gate.kind.mnemonic() });
        }
        if let Some(&w) = gate.wires().iter().find(|&&w| w >= self.n) {
            return Err(Error::WireOutOfRange { index, wire: w, num_wires: self.n });
        }
        for r in &mut self.rows {
            r.conjugate_by(gate);
        }
        Ok(())
    }

    /// Image of an arbitrary Pauli operator.
    pub fn conjugate(&self, p: &PauliOperator) -> PauliOperator {
        self.conjugate_row(Row::from_pauli(p)).to_pauli(self.n)
    }

    fn conjugate_row(&self, p: Row) -> Row {
        let mut acc = Row { x: 0, z: 0, p: p.p };
        for i in (0..self.n).filter(|i| (p.x >> i) & 1 == 1) {
            acc = acc.mul(self.rows[i]);
        }
        for i in (0..self.n).filter(|i| (p.z >> i) & 1 == 1) {
            acc = acc.mul(self.rows[self.n + i]);
        }
        acc
    }

    /// Tableau of `later ∘ self`.
    pub fn then(&self, later: &CliffordTableau) -> CliffordTableau {
        assert_eq!(self.n, later.n);
        CliffordTableau {
            n: self.n,
            rows: self.rows.iter().map(|&r| later.conjugate_row(r)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == CliffordTableau::identity(self.n)
    }
}

impl fmt::Debug for CliffordTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            writeln!(f, "X{i} -> {:?}   Z{i} -> {:?}", self.image_x(i), self.image_z(i))?;
        }
        Ok(())
    }
}

/// Tableau of a circuit over `{X, H, S, SDG, CX, CZ}`.
pub fn tableau_simulate(c: &Circuit) -> Result<CliffordTableau> {
    let n = c.num_wires();
    if n > MAX_TABLEAU_QUBITS {
        return Err(Error::TooManyQubits { qubits: n, max: MAX_TABLEAU_QUBITS });
    }
    let mut t = CliffordTableau::identity(n);
    for (index, g) in c.gates().iter().enumerate() {
        t.apply_gate_at(g, index)?;
    }
    Ok(t)
}

/// Gate budget of [`canonical_circuit`]: at most `CANONICAL_GATE_FACTOR · n²`.
pub const CANONICAL_GATE_FACTOR: usize = 30;

/// Resynthesises a tableau as a circuit over `{H, S, SDG, CX, X}`.
///
/// The tableau is swept to the identity one qubit at a time and the
/// reducing gates are inverted. Qubit `i` costs at most `5(n−i)+7` gates, so
/// the total stays below `3n² + 7n`.
pub fn canonical_circuit(t: &CliffordTableau) -> Circuit {
    let n = t.n;
    let mut work = t.clone();
    let mut ops: Vec<Gate> = Vec::new();
    let mut apply = |work: &mut CliffordTableau, g: Gate| {
        for r in &mut work.rows {
            r.conjugate_by(&g);
        }
        ops.push(g);
    };
    let bit = |r: u64, q: usize| (r >> q) & 1 == 1;

    for i in 0..n {
        // image of X_i becomes +X_i
        for q in i..n {
            let r = work.rows[i];
            match (bit(r.x, q), bit(r.z, q)) {
                (false, true) => apply(&mut work, Gate::h(q)),
                (true, true) => apply(&mut work, Gate::s(q)),
                _ => {}
            }
        }
        if !bit(work.rows[i].x, i) {
            let k = (i + 1..n)
                .find(|&k| bit(work.rows[i].x, k))
                .expect("valid tableau rows are nonzero");
            apply(&mut work, Gate::cx(k, i));
        }
        for q in i + 1..n {
            if bit(work.rows[i].x, q) {
                apply(&mut work, Gate::cx(i, q));
            }
        }

        // image of Z_i becomes +Z_i
        let zi = n + i;
        if bit(work.rows[zi].x, i) {
            apply(&mut work, Gate::h(i));
            apply(&mut work, Gate::s(i));
            apply(&mut work, Gate::h(i));
        }
        for q in i + 1..n {
            let r = work.rows[zi];
            match (bit(r.x, q), bit(r.z, q)) {
                (true, false) => apply(&mut work, Gate::h(q)),
                (true, true) => {
                    apply(&mut work, Gate::s(q));
                    apply(&mut work, Gate::h(q));
                }
                _ => {}
            }
        }
        for q in i + 1..n {
            if bit(work.rows[zi].z, q) {
                apply(&mut work, Gate::cx(q, i));
            }
        }

        if work.rows[i].sign() {
            apply(&mut work, Gate::s(i));
            apply(&mut work, Gate::s(i));
        }
        if work.rows[zi].sign() {
            apply(&mut work, Gate::x(i));
        }
    }
    debug_assert!(work.is_identity());

    let mut out = Circuit::new(n);
    out.extend(ops.iter().rev().map(Gate::inverse))
        .expect("synthesised gates are in range");
    out
}
