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

use std::collections::BTreeSet;

use crate::boolfn::BoolExpr;
use crate::circuit::{Circuit, Gate, WireRole};
use crate::error::{Error, Result};

/// Largest formula [`anf`] transforms.
pub const MAX_ANF_VARS: usize = 12;
/// Largest formula [`synth_oracle`] compiles.
pub const MAX_ORACLE_VARS: usize = 4;

/// Algebraic normal form: `f(x) = constant ⊕ ⨁_m ∏_{i∈m} x_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Anf {
    pub num_vars: usize,
    pub constant: bool,
    /// Non-empty monomials, sorted by their variable bitmask.
    pub monomials: Vec<Vec<usize>>,
}

impl Anf {
    pub fn eval(&self, assignment: u64) -> bool {
        let odd = self
            .monomials
            .iter()
            .filter(|m| m.iter().all(|&i| assignment >> i & 1 == 1))
            .count()
            % 2
            == 1;
        odd ^ self.constant
    }
}

/// Möbius transform of the truth table.
pub fn anf(f: &BoolExpr) -> Result<Anf> {
    let v = f.num_vars();
    if v > MAX_ANF_VARS {
        return Err(Error::TooManyVariables { num_vars: v, max: MAX_ANF_VARS });
    }
    let mut coef: Vec<bool> = f.truth_table()?.bits;
    for i in 0..v {
        for m in 0..coef.len() {
            if m >> i & 1 == 1 {
                coef[m] ^= coef[m ^ (1 << i)];
            }
        }
    }
    let monomials = (1..coef.len())
        .filter(|&m| coef[m])
        .map(|m| (0..v).filter(|i| m >> i & 1 == 1).collect())
        .collect();
    Ok(Anf { num_vars: v, constant: coef[0], monomials })
}

/// A classical oracle `|x, y, w⟩ ↦ |x, y ⊕ f(x), w⟩`, valid for every value
/// of the borrowed wires `w`.
#[derive(Clone, Debug)]
pub struct OracleCircuit {
    pub circuit: Circuit,
    pub inputs: Vec<usize>,
    pub target: usize,
    /// Wires toggled as scratch space and restored afterwards.
    pub borrowed: Vec<usize>,
}

impl OracleCircuit {
    /// Checks the oracle action on every basis state.
    pub fn is_oblivious_for(&self, f: &BoolExpr) -> bool {
        let Some(perm) = self.circuit.basis_permutation() else {
            return false;
        };
        perm.iter().enumerate().all(|(b, &img)| {
            let x = self
                .inputs
                .iter()
                .enumerate()
                .fold(0u64, |a, (i, &w)| a | ((b >> w & 1) as u64) << i);
            let flip = usize::from(f.eval(x)) << self.target;
            img == b ^ flip
        })
    }
}

/// Multi-controlled X on `controls → target` using wires from `free` as
/// borrowed scratch whose values are restored.
fn mcx(controls: &[usize], target: usize, free: &[usize], out: &mut Vec<Gate>) -> Result<()> {
    match controls {
        [] => out.push(Gate::x(target)),
        [c] => out.push(Gate::cx(*c, target)),
        [a, b] => out.push(Gate::ccx(*a, *b, target)),
        _ => {
            let (&w, rest) = free.split_first().ok_or_else(|| {
                Error::InvalidArgument(format!("no borrowed wire for a {}-control X", controls.len()))
            })?;
            let (c1, c2) = controls.split_at(controls.len().div_ceil(2));
            let a_controls: Vec<usize> = c2.iter().copied().chain([w]).collect();
            let a_free: Vec<usize> = c1.iter().chain(rest).copied().collect();
            let b_free: Vec<usize> = c2.iter().chain([&target]).chain(rest).copied().collect();
            let mut a = Vec::new();
            let mut b = Vec::new();
            mcx(&a_controls, target, &a_free, &mut a)?;
            mcx(c1, w, &b_free, &mut b)?;
            for _ in 0..2 {
                out.extend_from_slice(&a);
                out.extend_from_slice(&b);
            }
        }
    }
    Ok(())
}

/// True when some monomial has no input outside it and `spare` is empty.
pub(crate) fn needs_dedicated_wire(a: &Anf, spare: usize) -> bool {
    spare == 0 && a.monomials.iter().any(|m| m.len() >= 3 && m.len() == a.num_vars)
}

/// Emits the oracle gates into `c`, with `spare` wires usable as borrowed
/// scratch after the inputs outside each monomial. Returns the wires used as
/// scratch.
pub(crate) fn emit_oracle(
    a: &Anf,
    inputs: &[usize],
    target: usize,
    spare: &[usize],
    c: &mut Circuit,
) -> Result<Vec<usize>> {
    let mut gates = Vec::new();
    if a.constant {
        gates.push(Gate::x(target));
    }
    let mut used = BTreeSet::new();
    for m in &a.monomials {
        let controls: Vec<usize> = m.iter().map(|&i| inputs[i]).collect();
        let free: Vec<usize> = inputs
            .iter()
            .copied()
            .filter(|w| !controls.contains(w))
            .chain(spare.iter().copied())
            .collect();
        let start = gates.len();
        mcx(&controls, target, &free, &mut gates)?;
        for g in &gates[start..] {
            let t = *g.wires().last().unwrap();
            if t != target {
                used.insert(t);
            }
        }
    }
    c.extend(gates)?;
    Ok(used.into_iter().collect())
}

/// Compiles `f` on wires `x_0..x_{v-1}, y` with one extra borrowed wire
/// after `y` when no input can serve.
pub fn synth_oracle(f: &BoolExpr) -> Result<OracleCircuit> {
    let v = f.num_vars();
    if v > MAX_ORACLE_VARS {
        return Err(Error::TooManyVariables { num_vars: v, max: MAX_ORACLE_VARS });
    }
    let a = anf(f)?;
    let extra = needs_dedicated_wire(&a, 0);
    let inputs: Vec<usize> = (0..v).collect();
    let target = v;
    let n = v + 1 + usize::from(extra);
    let mut circuit = Circuit::new(n);
    let spare: Vec<usize> = if extra { vec![v + 1] } else { Vec::new() };
    let borrowed = emit_oracle(&a, &inputs, target, &spare, &mut circuit)?;
    let mut roles = vec![WireRole::Input; v];
    roles.push(WireRole::Target);
    if extra {
        roles.push(WireRole::AncillaBorrowed);
    }
    circuit.set_roles(roles)?;
    Ok(OracleCircuit { circuit, inputs, target, borrowed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::parse_expr;
    use crate::circuit::{kinds, GateKind};

    fn f(text: &str) -> BoolExpr {
        parse_expr(text).unwrap()
    }

    #[test]
    fn anf_examples() {
        let a = anf(&f("x0|x1")).unwrap();
        assert_eq!(a.monomials, vec![vec![0], vec![1], vec![0, 1]]);
        assert!(!a.constant);
        assert_eq!(anf(&f("x0^x1")).unwrap().monomials, vec![vec![0], vec![1]]);
        let z = anf(&f("x0&~x0")).unwrap();
        assert!(z.monomials.is_empty() && !z.constant);
        assert!(anf(&f("x0|~x0")).unwrap().constant);
    }

    #[test]
    fn anf_reproduces_truth_table() {
        for mask in 0..256u64 {
            let e = crate::boolfn::TruthTable::from_mask(3, mask).to_expr();
            let a = anf(&e).unwrap();
            for x in 0..8 {
                assert_eq!(a.eval(x), e.eval(x), "mask {mask:#x} x {x}");
            }
        }
    }

    #[test]
    fn small_oracles() {
        let o = synth_oracle(&f("x0")).unwrap();
        assert_eq!(o.circuit.gates(), &[Gate::cx(0, 1)]);
        assert!(o.borrowed.is_empty());
        let o = synth_oracle(&f("x0&x1")).unwrap();
        assert_eq!(o.circuit.gates(), &[Gate::ccx(0, 1, 2)]);
    }

    #[test]
    fn three_and_four_controls() {
        let o = synth_oracle(&f("x0&x1&x2")).unwrap();
        assert_eq!(o.circuit.num_wires(), 5);
        assert_eq!(o.circuit.count(kinds::TOFFOLI), 4);
        assert_eq!(o.circuit.len(), 4);
        assert_eq!(o.borrowed, vec![4]);
        assert!(o.is_oblivious_for(&f("x0&x1&x2")));
        let o = synth_oracle(&f("x0&x1&x2&x3")).unwrap();
        assert_eq!(o.circuit.count(kinds::TOFFOLI), 10);
        assert!(o.is_oblivious_for(&f("x0&x1&x2&x3")));
    }

    #[test]
    fn input_wire_borrowed_when_available() {
        let e = f("x0&x1&x2 | x3&~x3");
        let e = BoolExpr::with_vars(e.root().clone(), 4).unwrap();
        let o = synth_oracle(&e).unwrap();
        assert_eq!(o.circuit.num_wires(), 5);
        assert_eq!(o.borrowed, vec![3]);
        assert!(o.is_oblivious_for(&e));
    }

    #[test]
    fn oblivious_over_all_three_variable_functions() {
        for mask in 0..256u64 {
            let e = crate::boolfn::TruthTable::from_mask(3, mask).to_expr();
            let o = synth_oracle(&e).unwrap();
            assert!(o.is_oblivious_for(&e), "mask {mask:#x}");
            assert!(o.circuit.gates().iter().all(|g| matches!(
                g.kind,
                GateKind::X | GateKind::CX | GateKind::CCX
            )));
        }
    }
}
