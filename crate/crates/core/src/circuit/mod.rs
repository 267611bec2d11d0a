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

//! Circuit intermediate representation shared by every other module.
//!
//! Wire `i` is bit `i` of a computational basis index (wire 0 least
//! significant). Gate lists are in application order.

mod gatedef;
mod text;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use gatedef::{single_qubit_clifford_matrices, GateDefinition};
pub use text::{emit_circuit, parse_circuit};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GateKind {
    X,
    H,
    S,
    Sdg,
    T,
    Tdg,
    CX,
    CZ,
    CCX,
    G,
    Gdg,
}

impl GateKind {
    pub const ALL: [GateKind; 11] = [
        GateKind::X,
        GateKind::H,
        GateKind::S,
        GateKind::Sdg,
        GateKind::T,
        GateKind::Tdg,
        GateKind::CX,
        GateKind::CZ,
        GateKind::CCX,
        GateKind::G,
        GateKind::Gdg,
    ];

    pub fn arity(self) -> usize {
        match self {
            GateKind::CX | GateKind::CZ => 2,
            GateKind::CCX => 3,
            _ => 1,
        }
    }

    pub fn mnemonic(self) -> &'static str {
        match self {
            GateKind::X => "x",
            GateKind::H => "h",
            GateKind::S => "s",
            GateKind::Sdg => "sdg",
            GateKind::T => "t",
            GateKind::Tdg => "tdg",
            GateKind::CX => "cx",
            GateKind::CZ => "cz",
            GateKind::CCX => "ccx",
            GateKind::G => "g",
            GateKind::Gdg => "gdg",
        }
    }

    pub fn inverse(self) -> GateKind {
        match self {
            GateKind::S => GateKind::Sdg,
            GateKind::Sdg => GateKind::S,
            GateKind::T => GateKind::Tdg,
            GateKind::Tdg => GateKind::T,
            GateKind::G => GateKind::Gdg,
            GateKind::Gdg => GateKind::G,
            k => k,
        }
    }

    pub fn is_clifford(self) -> bool {
        matches!(
            self,
            GateKind::X | GateKind::H | GateKind::S | GateKind::Sdg | GateKind::CX | GateKind::CZ
        )
    }
}

impl FromStr for GateKind {
    type Err = ();

    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        GateKind::ALL
            .into_iter()
            .find(|k| k.mnemonic() == s)
            .ok_or(())
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.mnemonic())
    }
}

/// Named sets of gate kinds used by the cost metrics.
pub mod kinds {
    use super::GateKind::{self, *};

    pub const T_COUNT: &[GateKind] = &[T, Tdg];
    pub const ENTANGLING: &[GateKind] = &[CX, CZ, CCX];
    pub const HADAMARD: &[GateKind] = &[H];
    pub const TOFFOLI: &[GateKind] = &[CCX];
    pub const G_COUNT: &[GateKind] = &[G, Gdg];
    pub const ALL: &[GateKind] = &GateKind::ALL;
}

/// A gate applied to 1-3 wires. For controlled gates the target is last.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Gate {
    pub kind: GateKind,
    operands: [usize; 3],
}

impl Gate {
    /// Panics when the operand count does not match the gate arity; use
    /// [`Circuit::push`] or the text parser for validated construction.
    pub fn new(kind: GateKind, wires: &[usize]) -> Self {
        assert_eq!(wires.len(), kind.arity(), "{kind} takes {} wires", kind.arity());
        let mut operands = [0; 3];
        operands[..wires.len()].copy_from_slice(wires);
        Gate { kind, operands }
    }

    pub fn wires(&self) -> &[usize] {
        &self.operands[..self.kind.arity()]
    }

    pub fn inverse(&self) -> Gate {
        Gate {
            kind: self.kind.inverse(),
            operands: self.operands,
        }
    }

    pub fn x(q: usize) -> Self {
        Gate::new(GateKind::X, &[q])
    }
    pub fn h(q: usize) -> Self {
        Gate::new(GateKind::H, &[q])
    }
    pub fn s(q: usize) -> Self {
        Gate::new(GateKind::S, &[q])
    }
    pub fn sdg(q: usize) -> Self {
        Gate::new(GateKind::Sdg, &[q])
    }
    pub fn t(q: usize) -> Self {
        Gate::new(GateKind::T, &[q])
    }
    pub fn tdg(q: usize) -> Self {
        Gate::new(GateKind::Tdg, &[q])
    }
    pub fn cx(control: usize, target: usize) -> Self {
        Gate::new(GateKind::CX, &[control, target])
    }
    pub fn cz(a: usize, b: usize) -> Self {
        Gate::new(GateKind::CZ, &[a, b])
    }
    pub fn ccx(c0: usize, c1: usize, target: usize) -> Self {
        Gate::new(GateKind::CCX, &[c0, c1, target])
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.mnemonic())?;
        for w in self.wires() {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WireRole {
    #[serde(rename = "input")]
    Input,
    #[serde(rename = "target")]
    Target,
    #[serde(rename = "ancilla-borrowed")]
    AncillaBorrowed,
    #[serde(rename = "ancilla-clean")]
    AncillaClean,
}

impl WireRole {
    pub fn tag(self) -> &'static str {
        match self {
            WireRole::Input => "input",
            WireRole::Target => "target",
            WireRole::AncillaBorrowed => "ancilla-borrowed",
            WireRole::AncillaClean => "ancilla-clean",
        }
    }
}

impl FromStr for WireRole {
    type Err = ();

    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        [
            WireRole::Input,
            WireRole::Target,
            WireRole::AncillaBorrowed,
            WireRole::AncillaClean,
        ]
        .into_iter()
        .find(|r| r.tag() == s)
        .ok_or(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Circuit {
    num_wires: usize,
    gates: Vec<Gate>,
    roles: Option<Vec<WireRole>>,
    pub name: String,
}

impl Circuit {
    pub fn new(num_wires: usize) -> Self {
        Circuit {
            num_wires,
            ..Default::default()
        }
    }

    pub fn num_wires(&self) -> usize {
        self.num_wires
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn roles(&self) -> Option<&[WireRole]> {
        self.roles.as_deref()
    }

    pub fn set_roles(&mut self, roles: Vec<WireRole>) -> Result<()> {
        if roles.len() != self.num_wires {
            return Err(Error::InvalidArgument(format!(
                "{} roles given for {} wires",
                roles.len(),
                self.num_wires
            )));
        }
        self.roles = Some(roles);
        Ok(())
    }

    /// Wires carrying the given role, in increasing order.
    pub fn wires_with_role(&self, role: WireRole) -> Vec<usize> {
        self.roles
            .iter()
            .flatten()
            .enumerate()
            .filter(|(_, r)| **r == role)
            .map(|(i, _)| i)
            .collect()
    }

    /// Appends a gate after checking operand range and distinctness.
    pub fn push(&mut self, gate: Gate) -> Result<()> {
        let index = self.gates.len();
        let wires = gate.wires();
        for (i, &w) in wires.iter().enumerate() {
            if w >= self.num_wires {
                return Err(Error::WireOutOfRange {
                    index,
                    wire: w,
                    num_wires: self.num_wires,
                });
            }
            if wires[..i].contains(&w) {
                return Err(Error::DuplicateOperand { index, wire: w });
            }
        }
        self.gates.push(gate);
        Ok(())
    }

    pub fn extend<I: IntoIterator<Item = Gate>>(&mut self, gates: I) -> Result<()> {
        gates.into_iter().try_for_each(|g| self.push(g))
    }

    /// Appends another circuit on the same wires.
    pub fn append(&mut self, other: &Circuit) -> Result<()> {
        if other.num_wires > self.num_wires {
            return Err(Error::DimensionMismatch(self.num_wires, other.num_wires));
        }
        self.extend(other.gates.iter().copied())
    }

    /// Number of gates whose kind is in `kinds`.
    pub fn count(&self, kinds: &[GateKind]) -> usize {
        self.gates.iter().filter(|g| kinds.contains(&g.kind)).count()
    }

    /// Greedy as-soon-as-possible layering of all gates, counting only the
    /// layers that contain at least one gate from `kinds`.
    pub fn depth(&self, kinds: &[GateKind]) -> usize {
        let mut wire_level = vec![0usize; self.num_wires];
        let mut counted: Vec<bool> = Vec::new();
        for g in &self.gates {
            let level = g.wires().iter().map(|&w| wire_level[w]).max().unwrap_or(0);
            for &w in g.wires() {
                wire_level[w] = level + 1;
            }
            if counted.len() <= level {
                counted.resize(level + 1, false);
            }
            counted[level] |= kinds.contains(&g.kind);
        }
        counted.into_iter().filter(|&c| c).count()
    }

    /// Reversed gate order with every gate replaced by its inverse.
    pub fn invert(&self) -> Circuit {
        Circuit {
            num_wires: self.num_wires,
            gates: self.gates.iter().rev().map(Gate::inverse).collect(),
            roles: self.roles.clone(),
            name: self.name.clone(),
        }
    }

    pub fn contains_kind(&self, kind: GateKind) -> bool {
        self.gates.iter().any(|g| g.kind == kind)
    }

    /// Image of each basis state when every gate is classical
    /// (`X`, `CX`, `CCX`); `None` otherwise or above 24 wires.
    pub fn basis_permutation(&self) -> Option<Vec<usize>> {
        if self.num_wires > 24 {
            return None;
        }
        let classical = |k: GateKind| matches!(k, GateKind::X | GateKind::CX | GateKind::CCX);
        if !self.gates.iter().all(|g| classical(g.kind)) {
            return None;
        }
        Some((0..1usize << self.num_wires).map(|b| self.apply_classical(b)).collect())
    }

    fn apply_classical(&self, mut b: usize) -> usize {
        for g in &self.gates {
            let w = g.wires();
            let (controls, t) = w.split_at(w.len() - 1);
            if controls.iter().all(|&c| b >> c & 1 == 1) {
                b ^= 1 << t[0];
            }
        }
        b
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&emit_circuit(self))
    }
}
