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

use super::{Circuit, Gate, GateKind, WireRole};
use crate::error::{Error, Result};

/// Parses the line-oriented circuit format:
///
/// ```text
/// qubits 3
/// roles input,target,ancilla-borrowed   # optional
/// cx 0 1
/// t 1
/// ```
pub fn parse_circuit(text: &str) -> Result<Circuit> {
    let mut circuit: Option<Circuit> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::CircuitFormat {
            line: lineno + 1,
            message,
        };
        let mut fields = line.split_whitespace();
        let head = fields.next().unwrap();
        let Some(c) = circuit.as_mut() else {
            let n = match (head, fields.next(), fields.next()) {
                ("qubits", Some(n), None) => n
                    .parse::<usize>()
                    .map_err(|_| err(format!("invalid qubit count '{n}'")))?,
                _ => return Err(err("expected 'qubits <n>' header".into())),
            };
            circuit = Some(Circuit::new(n));
            continue;
        };
        if head == "roles" {
            let tags: Vec<&str> = fields.flat_map(|f| f.split(',')).filter(|t| !t.is_empty()).collect();
            let roles = tags
                .iter()
                .map(|t| t.parse::<WireRole>().map_err(|_| err(format!("unknown role '{t}'"))))
                .collect::<Result<Vec<_>>>()?;
            c.set_roles(roles).map_err(|e| err(e.to_string()))?;
            continue;
        }
        let kind: GateKind = head
            .parse()
            .map_err(|_| err(format!("unknown mnemonic '{head}'")))?;
        let wires = fields
            .map(|f| f.parse::<usize>().map_err(|_| err(format!("invalid wire index '{f}'"))))
            .collect::<Result<Vec<_>>>()?;
        if wires.len() != kind.arity() {
            return Err(err(format!(
                "{kind} expects {} wires, got {}",
                kind.arity(),
                wires.len()
            )));
        }
        c.push(Gate::new(kind, &wires))?;
    }
    circuit.ok_or(Error::CircuitFormat {
        line: 0,
        message: "empty circuit file".into(),
    })
}

pub fn emit_circuit(c: &Circuit) -> String {
    let mut out = String::new();
    if !c.name.is_empty() {
        for line in c.name.lines() {
            out.push_str(&format!("# {line}\n"));
        }
    }
    out.push_str(&format!("qubits {}\n", c.num_wires()));
    if let Some(roles) = c.roles() {
        let tags: Vec<&str> = roles.iter().map(|r| r.tag()).collect();
        out.push_str(&format!("roles {}\n", tags.join(",")));
    }
    for g in c.gates() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let c = parse_circuit("qubits 2\ncx 0 1").unwrap();
        assert_eq!(c.num_wires(), 2);
        assert_eq!(c.gates(), &[Gate::cx(0, 1)]);
        let c = parse_circuit("qubits 1\nt 0\ntdg 0").unwrap();
        assert_eq!(c.len(), 2);
        let c = parse_circuit("qubits 3\nccx 0 1 2").unwrap();
        assert_eq!(c.gates(), &[Gate::ccx(0, 1, 2)]);
    }

    #[test]
    fn comments_roles_and_blank_lines() {
        let c = parse_circuit(
            "# header comment\n\nqubits 3 # three\nroles input, target,ancilla-borrowed\nh 0 # hadamard\n",
        )
        .unwrap();
        assert_eq!(
            c.roles().unwrap(),
            &[WireRole::Input, WireRole::Target, WireRole::AncillaBorrowed]
        );
        assert_eq!(c.gates(), &[Gate::h(0)]);
        let again = parse_circuit(&emit_circuit(&c)).unwrap();
        assert_eq!(again.roles(), c.roles());
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_circuit("qubits 2\nfoo 0"),
            Err(Error::CircuitFormat { line: 2, .. })
        ));
        assert!(matches!(
            parse_circuit("qubits 2\ncx 0 2"),
            Err(Error::WireOutOfRange { wire: 2, .. })
        ));
        assert!(matches!(
            parse_circuit("qubits 2\ncx 1 1"),
            Err(Error::DuplicateOperand { .. })
        ));
        assert!(parse_circuit("h 0").is_err());
        assert!(parse_circuit("qubits 1\nh").is_err());
        assert!(parse_circuit("qubits 1\nh 0 0").is_err());
        assert!(parse_circuit("qubits 2\nroles input").is_err());
        assert!(parse_circuit("").is_err());
    }

    fn arb_gate(n: usize) -> impl Strategy<Value = Gate> {
        (0..GateKind::ALL.len(), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
            .prop_map(|(k, wires)| {
                let kind = GateKind::ALL[k];
                Gate::new(kind, &wires[..kind.arity()])
            })
    }

    proptest! {
        #[test]
        fn round_trip(gates in prop::collection::vec(arb_gate(4), 0..40)) {
            let mut c = Circuit::new(4);
            c.extend(gates).unwrap();
            let back = parse_circuit(&emit_circuit(&c)).unwrap();
            prop_assert_eq!(back.gates(), c.gates());
            prop_assert_eq!(back.num_wires(), c.num_wires());
            prop_assert!(c.depth(crate::circuit::kinds::ALL) <= c.len());
            prop_assert_eq!(c.invert().count(crate::circuit::kinds::T_COUNT), c.count(crate::circuit::kinds::T_COUNT));
        }
    }
}
