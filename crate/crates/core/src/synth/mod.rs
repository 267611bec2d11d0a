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

//! Reduction instances: the oracle `U_f`, the circuit `C_f` for each cost
//! measure, and the satisfiability decision built on a zero-cost oracle.
//!
//! Wire layouts (little-endian, inputs first):
//!
//! | variant        | wires                                   |
//! |----------------|-----------------------------------------|
//! | `T`, `ENT`, `H`, `G` | `x_0 .. x_{v-1}, y [, w]`         |
//! | `TOF`          | `x_0 .. x_{v-1}, a, y, z`               |
//!
//! `w` is a dedicated borrowed wire, present only when some monomial of the
//! algebraic normal form spans every input.

mod oracle;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::boolfn::{BoolExpr, Witness};
use crate::circuit::{kinds, Circuit, Gate, GateDefinition, GateKind, WireRole};
use crate::clifford::round_to_clifford;
use crate::error::{Error, Result};
use crate::exact::{exact_simulate, is_clifford_exact, is_generalized_permutation};
use crate::numeric::numeric_simulate;
use crate::sk::{translate_circuit, BaseNet};

pub use oracle::{anf, synth_oracle, Anf, OracleCircuit, MAX_ANF_VARS, MAX_ORACLE_VARS};

const SIDECAR_SCHEMA: u64 = 1;

/// Cost measure whose zero-cost question the reduction targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    T,
    Tof,
    Ent,
    H,
    G,
}

impl Variant {
    pub const ALL: [Variant; 5] = [Variant::T, Variant::Tof, Variant::Ent, Variant::H, Variant::G];

    pub fn name(self) -> &'static str {
        match self {
            Variant::T => "t",
            Variant::Tof => "tof",
            Variant::Ent => "ent",
            Variant::H => "h",
            Variant::G => "g",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == lower)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown variant {s:?} (t, tof, ent, h, g)")))
    }
}

/// Parameters of the `G` variant.
#[derive(Clone, Copy, Debug)]
pub struct GSpec<'a> {
    pub net: &'a BaseNet,
    pub epsilon: f64,
}

/// Named wires of a reduction circuit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Wires {
    pub inputs: Vec<usize>,
    pub target: usize,
    /// `a` in the Toffoli variant.
    pub oracle_target: Option<usize>,
    /// `z` in the Toffoli variant.
    pub output: Option<usize>,
    /// Wires used as borrowed scratch by the oracle.
    pub borrowed: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct ReductionInstance {
    pub variant: Variant,
    pub circuit: Circuit,
    pub wires: Wires,
    pub witness: Witness,
    pub epsilon: Option<f64>,
    pub gate: Option<GateDefinition>,
    /// The Clifford+T circuit the `G` variant was translated from.
    pub reference: Option<Circuit>,
    /// Certified bound on `‖C_f − C′_f‖` for the `G` variant.
    pub error_bound: Option<f64>,
}

impl ReductionInstance {
    pub fn sidecar_json(&self) -> Value {
        let roles: Vec<&str> = self
            .circuit
            .roles()
            .map(|r| r.iter().map(|x| x.tag()).collect())
            .unwrap_or_default();
        json!({
            "schema": SIDECAR_SCHEMA,
            "variant": self.variant,
            "roles": roles,
            "wires": self.wires,
            "witness": self.witness,
            "epsilon": self.epsilon,
            "gate": self.gate.as_ref().map(|g| g.label().to_string()),
            "error_bound": self.error_bound,
        })
    }
}

/// Clifford+T expansion of every `CCX` (seven T gates each).
pub fn expand_toffolis(c: &Circuit) -> Result<Circuit> {
    let mut out = Circuit::new(c.num_wires());
    out.name = c.name.clone();
    if let Some(r) = c.roles() {
        out.set_roles(r.to_vec())?;
    }
    for g in c.gates() {
        if g.kind != GateKind::CCX {
            out.push(*g)?;
            continue;
        }
        let [a, b, t] = [g.wires()[0], g.wires()[1], g.wires()[2]];
        out.extend([
            Gate::h(t),
            Gate::cx(b, t),
            Gate::tdg(t),
            Gate::cx(a, t),
            Gate::t(t),
            Gate::cx(b, t),
            Gate::tdg(t),
            Gate::cx(a, t),
            Gate::t(b),
            Gate::t(t),
            Gate::h(t),
            Gate::cx(a, b),
            Gate::t(a),
            Gate::tdg(b),
            Gate::cx(a, b),
        ])?;
    }
    Ok(out)
}

fn phase_layout(f: &BoolExpr, a: &Anf) -> Result<(Circuit, Circuit, Wires)> {
    let v = f.num_vars();
    let extra = oracle::needs_dedicated_wire(a, 0);
    let inputs: Vec<usize> = (0..v).collect();
    let y = v;
    let n = v + 1 + usize::from(extra);
    let spare: Vec<usize> = if extra { vec![v + 1] } else { Vec::new() };
    let mut uf = Circuit::new(n);
    let borrowed = oracle::emit_oracle(a, &inputs, y, &spare, &mut uf)?;
    let mut roles = vec![WireRole::Input; v];
    roles.push(WireRole::Target);
    if extra {
        roles.push(WireRole::AncillaBorrowed);
    }
    let mut c = Circuit::new(n);
    c.set_roles(roles)?;
    c.append(&uf)?;
    c.push(Gate::t(y))?;
    c.append(&uf)?;
    c.push(Gate::tdg(y))?;
    let wires = Wires { inputs, target: y, oracle_target: None, output: None, borrowed };
    Ok((c, uf, wires))
}

fn tof_layout(f: &BoolExpr, a: &Anf) -> Result<(Circuit, Wires)> {
    let v = f.num_vars();
    let inputs: Vec<usize> = (0..v).collect();
    let (oa, y, z) = (v, v + 1, v + 2);
    let mut uf = Circuit::new(v + 3);
    let borrowed = oracle::emit_oracle(a, &inputs, oa, &[y, z], &mut uf)?;
    let mut roles = vec![WireRole::Input; v];
    roles.extend([WireRole::AncillaBorrowed, WireRole::Target, WireRole::Target]);
    let mut c = Circuit::new(v + 3);
    c.set_roles(roles)?;
    for _ in 0..2 {
        c.append(&uf)?;
        c.push(Gate::ccx(oa, y, z))?;
    }
    let wires = Wires { inputs, target: y, oracle_target: Some(oa), output: Some(z), borrowed };
    Ok((c, wires))
}

/// Builds `C_f` for `variant`. The `G` variant needs `g`.
pub fn build_reduction(f: &BoolExpr, variant: Variant, g: Option<&GSpec>) -> Result<ReductionInstance> {
    let v = f.num_vars();
    if v > MAX_ORACLE_VARS {
        return Err(Error::TooManyVariables { num_vars: v, max: MAX_ORACLE_VARS });
    }
    let a = anf(f)?;
    let witness = f.find_witness_pair()?;
    let mut inst = ReductionInstance {
        variant,
        circuit: Circuit::new(0),
        wires: Wires { inputs: vec![], target: 0, oracle_target: None, output: None, borrowed: vec![] },
        witness,
        epsilon: None,
        gate: None,
        reference: None,
        error_bound: None,
    };
    match variant {
        Variant::T | Variant::Ent => {
            let (c, _, w) = phase_layout(f, &a)?;
            inst.circuit = c;
            inst.wires = w;
        }
        Variant::H => {
            let (c, _, w) = phase_layout(f, &a)?;
            let mut out = Circuit::new(c.num_wires());
            out.set_roles(c.roles().unwrap().to_vec())?;
            out.push(Gate::h(w.target))?;
            out.append(&c)?;
            out.push(Gate::h(w.target))?;
            inst.circuit = out;
            inst.wires = w;
        }
        Variant::Tof => {
            let (c, w) = tof_layout(f, &a)?;
            inst.circuit = c;
            inst.wires = w;
        }
        Variant::G => {
            let spec = g.ok_or_else(|| {
                Error::InvalidArgument("the G variant needs a gate definition and epsilon".into())
            })?;
            if spec.epsilon.is_nan() || spec.epsilon <= 0.0 {
                return Err(Error::InvalidArgument(format!("epsilon must be positive, got {}", spec.epsilon)));
            }
            let (c, _, w) = phase_layout(f, &a)?;
            let reference = expand_toffolis(&c)?;
            let tr = translate_circuit(&reference, spec.net, spec.epsilon)?;
            inst.circuit = tr.circuit;
            inst.wires = w;
            inst.epsilon = Some(spec.epsilon);
            inst.gate = Some(spec.net.gate().clone());
            inst.reference = Some(reference);
            inst.error_bound = Some(tr.error_bound);
        }
    }
    inst.circuit.name = format!("C_f {variant}");
    Ok(inst)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Sat,
    Unsat,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TraceStep {
    pub step: String,
    pub detail: Value,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Decision {
    pub verdict: Verdict,
    pub trace: Vec<TraceStep>,
}

/// Decides satisfiability of `f` through one zero-cost query on `C_f`.
pub fn decide_sat(f: &BoolExpr, variant: Variant, g: Option<&GSpec>) -> Result<Decision> {
    let inst = build_reduction(f, variant, g)?;
    let mut trace = vec![TraceStep {
        step: "build".into(),
        detail: json!({
            "variant": variant,
            "wires": inst.circuit.num_wires(),
            "gates": inst.circuit.len(),
            "t_count": inst.circuit.count(kinds::T_COUNT),
            "toffoli_count": inst.circuit.count(kinds::TOFFOLI),
            "g_count": inst.circuit.count(kinds::G_COUNT),
        }),
    }];
    let zero_cost = match variant {
        Variant::T | Variant::Tof | Variant::Ent => {
            let u = exact_simulate(&inst.circuit)?;
            let clifford = is_clifford_exact(&u);
            trace.push(TraceStep {
                step: "oracle".into(),
                detail: json!({ "query": "is_clifford_exact", "answer": clifford }),
            });
            clifford
        }
        Variant::H => {
            let u = exact_simulate(&inst.circuit)?;
            let gp = is_generalized_permutation(&u);
            trace.push(TraceStep {
                step: "oracle".into(),
                detail: json!({ "query": "is_generalized_permutation", "answer": gp }),
            });
            gp
        }
        Variant::G => {
            let eps = inst.epsilon.unwrap();
            let u = numeric_simulate(&inst.circuit, inst.gate.as_ref())?;
            let rounded = round_to_clifford(u.matrix())?;
            let distance = rounded.as_ref().map(|r| r.distance);
            let near = distance.is_some_and(|d| d <= eps);
            trace.push(TraceStep {
                step: "oracle".into(),
                detail: json!({
                    "query": "nearest_clifford_within_epsilon",
                    "epsilon": eps,
                    "distance": distance,
                    "answer": near,
                }),
            });
            near
        }
    };
    let verdict = if !zero_cost {
        Verdict::Sat
    } else if variant == Variant::H {
        Verdict::Unsat
    } else {
        let f0 = f.eval(0);
        trace.push(TraceStep { step: "evaluate_f_zero".into(), detail: json!({ "value": f0 }) });
        if f0 {
            Verdict::Sat
        } else {
            Verdict::Unsat
        }
    };
    Ok(Decision { verdict, trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::{parse_expr, TruthTable};
    use crate::exact::{phase_profile, RingElement};

    fn f(text: &str) -> BoolExpr {
        parse_expr(text).unwrap()
    }

    #[test]
    fn variant_names() {
        for v in Variant::ALL {
            assert_eq!(v.name().parse::<Variant>().unwrap(), v);
        }
        assert!("cnot".parse::<Variant>().is_err());
        assert_eq!(serde_json::to_value(Variant::Tof).unwrap(), "tof");
    }

    #[test]
    fn toffoli_expansion_is_exact() {
        let mut c = Circuit::new(3);
        c.push(Gate::ccx(0, 1, 2)).unwrap();
        let e = expand_toffolis(&c).unwrap();
        assert_eq!(e.count(kinds::T_COUNT), 7);
        assert_eq!(exact_simulate(&e).unwrap(), exact_simulate(&c).unwrap());
    }

    #[test]
    fn t_variant_structure() {
        let inst = build_reduction(&f("x0"), Variant::T, None).unwrap();
        assert_eq!(inst.circuit.count(kinds::T_COUNT), 2);
        let u = exact_simulate(&inst.circuit).unwrap();
        assert!(!is_clifford_exact(&u));
        let inst = build_reduction(&f("x0&~x0"), Variant::T, None).unwrap();
        assert!(exact_simulate(&inst.circuit).unwrap().is_identity());
        let inst = build_reduction(&f("x0|~x0"), Variant::T, None).unwrap();
        let u = exact_simulate(&inst.circuit).unwrap();
        let mut sdg = Circuit::new(2);
        sdg.push(Gate::sdg(1)).unwrap();
        assert_eq!(u, exact_simulate(&sdg).unwrap().scale_omega(1));
    }

    #[test]
    fn t_variant_phase_profile() {
        for mask in 0..256u64 {
            let e = TruthTable::from_mask(3, mask).to_expr();
            let inst = build_reduction(&e, Variant::T, None).unwrap();
            let p = phase_profile(&exact_simulate(&inst.circuit).unwrap()).unwrap();
            let y = inst.wires.target;
            for (b, &ex) in p.exponents.iter().enumerate() {
                let fx = i64::from(e.eval((b & 7) as u64));
                let sign = 1 - 2 * ((b >> y) & 1) as i64;
                assert_eq!(i64::from(ex), (sign * fx).rem_euclid(8), "mask {mask:#x} b {b}");
            }
        }
    }

    #[test]
    fn ent_variant_is_diagonal_and_entangling() {
        use crate::numeric::{is_product_of_single_qubit, DEFAULT_SEPARABILITY_TOL};
        for text in ["x0", "x0&x1", "x0^x1"] {
            let e = f(text);
            let inst = build_reduction(&e, Variant::Ent, None).unwrap();
            let u = exact_simulate(&inst.circuit).unwrap();
            let pair = inst.witness.pair().unwrap();
            let y = inst.wires.target;
            let basis = |z: &[bool]| z.iter().enumerate().fold(1 << y, |acc, (i, &b)| acc | usize::from(b) << i);
            let (b1, b2) = (basis(&pair.z1), basis(&pair.z2));
            // |z1,1> picks up ω⁻¹ and stays put; |z2,1> is fixed
            assert_eq!(*u.get(b1, b1), RingElement::omega_pow(-1), "{text}");
            assert!(u.get(b2, b2).is_one());
            assert!(u.is_diagonal());
            assert!(is_product_of_single_qubit(&u.to_numeric(), DEFAULT_SEPARABILITY_TOL).is_none());
        }
    }

    #[test]
    fn tof_variant_action() {
        for text in ["x0&x1", "x0&~x0", "x0|~x0", "x0^x1"] {
            let e = f(text);
            let inst = build_reduction(&e, Variant::Tof, None).unwrap();
            let perm = inst.circuit.basis_permutation().unwrap();
            let (y, z) = (inst.wires.target, inst.wires.output.unwrap());
            for (b, &img) in perm.iter().enumerate() {
                let fx = e.eval((b & 3) as u64);
                let flip = usize::from(fx && (b >> y) & 1 == 1) << z;
                assert_eq!(img, b ^ flip, "{text}");
            }
        }
    }

    #[test]
    fn h_variant_target_block() {
        let inst = build_reduction(&f("x0"), Variant::H, None).unwrap();
        let u = exact_simulate(&inst.circuit).unwrap();
        let block = u.wire_block(inst.wires.target, 1);
        let half = RingElement::inv_sqrt2();
        let i_half = half.mul_omega(2);
        assert_eq!(block, [half.clone(), i_half.clone(), i_half, half]);
        let unsat = build_reduction(&f("x0&~x0"), Variant::H, None).unwrap();
        assert!(exact_simulate(&unsat.circuit).unwrap().is_identity());
    }

    #[test]
    fn decisions_match_brute_force_on_two_variables() {
        for mask in 0..16u64 {
            let e = TruthTable::from_mask(2, mask).to_expr();
            let truth = e.brute_sat().unwrap().is_sat();
            for v in [Variant::T, Variant::Tof, Variant::Ent, Variant::H] {
                let d = decide_sat(&e, v, None).unwrap();
                assert_eq!(d.verdict == Verdict::Sat, truth, "mask {mask:#x} {v}");
                let f0_step = d.trace.iter().any(|s| s.step == "evaluate_f_zero");
                if v == Variant::H {
                    assert!(!f0_step);
                }
            }
        }
    }

    #[test]
    fn g_variant_within_epsilon() {
        use crate::numeric::phase_min_distance;
        let net = crate::sk::base_net(&GateDefinition::phase_gate("rz1", 1.0).unwrap(), 10).unwrap();
        for text in ["x0", "x0&x1", "x0&~x0"] {
            for eps in [0.15, 0.1, 0.05] {
                let spec = GSpec { net: &net, epsilon: eps };
                let inst = build_reduction(&f(text), Variant::G, Some(&spec)).unwrap();
                assert_eq!(inst.circuit.count(kinds::T_COUNT), 0);
                let exact = numeric_simulate(inst.reference.as_ref().unwrap(), None).unwrap();
                let approx = numeric_simulate(&inst.circuit, inst.gate.as_ref()).unwrap();
                let (d, _) = phase_min_distance(exact.matrix(), approx.matrix()).unwrap();
                assert!(d <= eps, "{text} {eps}: {d}");
                let sat = decide_sat(&f(text), Variant::G, Some(&spec)).unwrap();
                assert_eq!(sat.verdict == Verdict::Sat, text != "x0&~x0");
            }
        }
    }

    #[test]
    fn g_variant_requires_spec() {
        assert!(build_reduction(&f("x0"), Variant::G, None).is_err());
    }
}
