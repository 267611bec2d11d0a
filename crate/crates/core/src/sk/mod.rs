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

//! Solovay-Kitaev approximation of single-qubit unitaries over Clifford+G.
//!
//! Distances are projective: for `2×2` unitaries mapped to unit quaternions
//! `q, r` on `SU(2)`, `min_α ‖A − e^{iα}B‖_∞ = min(‖q − r‖, ‖q + r‖)`.

mod net;
mod su2;

pub use net::{base_net, BaseNet, DEFAULT_NET_LEN, MAX_NET_LEN, RADIUS_SEED};

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::circuit::{Circuit, Gate, GateDefinition, GateKind};
use crate::error::{Error, Result};
use su2::{projective_distance, Su2};

/// Generator labels of a word over Clifford+G.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    H,
    S,
    Sdg,
    G,
    Gdg,
}

impl Label {
    pub const ALL: [Label; 5] = [Label::H, Label::S, Label::Sdg, Label::G, Label::Gdg];

    pub fn inverse(self) -> Label {
        match self {
            Label::H => Label::H,
            Label::S => Label::Sdg,
            Label::Sdg => Label::S,
            Label::G => Label::Gdg,
            Label::Gdg => Label::G,
        }
    }

    pub fn gate_kind(self) -> GateKind {
        match self {
            Label::H => GateKind::H,
            Label::S => GateKind::S,
            Label::Sdg => GateKind::Sdg,
            Label::G => GateKind::G,
            Label::Gdg => GateKind::Gdg,
        }
    }

    pub fn mnemonic(self) -> &'static str {
        self.gate_kind().mnemonic()
    }

    fn matrix(self, gdef: &GateDefinition) -> [Complex64; 4] {
        crate::numeric::single_qubit_matrix(self.gate_kind(), Some(gdef))
            .expect("single-qubit label")
    }
}

impl FromStr for Label {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Label::ALL
            .into_iter()
            .find(|l| l.mnemonic() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown word label {s:?}")))
    }
}

fn mat_mul(a: &[Complex64; 4], b: &[Complex64; 4]) -> [Complex64; 4] {
    [
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    ]
}

/// A word in application order with its cached `2×2` product.
#[derive(Clone, PartialEq)]
pub struct GateWord {
    labels: Vec<Label>,
    matrix: [Complex64; 4],
}

impl GateWord {
    pub fn identity() -> Self {
        let (o, z) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
        GateWord { labels: Vec::new(), matrix: [o, z, z, o] }
    }

    pub fn from_labels(labels: Vec<Label>, gdef: &GateDefinition) -> Self {
        let mut w = GateWord::identity();
        for l in labels {
            w.push(l, gdef);
        }
        w
    }

    pub fn parse(text: &str, gdef: &GateDefinition) -> Result<Self> {
        let labels = text
            .split_whitespace()
            .map(Label::from_str)
            .collect::<Result<Vec<_>>>()?;
        Ok(GateWord::from_labels(labels, gdef))
    }

    pub fn push(&mut self, l: Label, gdef: &GateDefinition) {
        self.matrix = mat_mul(&l.matrix(gdef), &self.matrix);
        self.labels.push(l);
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Row-major product, last label leftmost.
    pub fn matrix(&self) -> &[Complex64; 4] {
        &self.matrix
    }

    pub fn g_count(&self) -> usize {
        self.labels.iter().filter(|l| matches!(l, Label::G | Label::Gdg)).count()
    }

    pub fn inverse(&self) -> GateWord {
        let m = &self.matrix;
        GateWord {
            labels: self.labels.iter().rev().map(|l| l.inverse()).collect(),
            matrix: [m[0].conj(), m[2].conj(), m[1].conj(), m[3].conj()],
        }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &GateWord) -> GateWord {
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        GateWord { labels, matrix: mat_mul(&other.matrix, &self.matrix) }
    }

    /// Cancels adjacent inverse pairs.
    pub fn simplified(&self, gdef: &GateDefinition) -> GateWord {
        let mut out: Vec<Label> = Vec::with_capacity(self.labels.len());
        for &l in &self.labels {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        GateWord::from_labels(out, gdef)
    }

    /// Projective distance to a `2×2` unitary.
    pub fn distance_to(&self, target: &[Complex64; 4]) -> f64 {
        projective_distance(&Su2::from_unitary(&self.matrix), &Su2::from_unitary(target))
    }

    pub fn gates(&self, wire: usize) -> impl Iterator<Item = Gate> + '_ {
        self.labels.iter().map(move |l| Gate::new(l.gate_kind(), &[wire]))
    }
}

impl fmt::Display for GateWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.labels.iter().map(|l| l.mnemonic()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for GateWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GateWord[{self}]")
    }
}

/// Convergence constant of the `ε_{n+1} = c·ε_n^{3/2}` schedule.
pub const SK_CONSTANT: f64 = 4.0 * std::f64::consts::SQRT_2;
/// Deepest recursion attempted before reporting `BudgetExceeded`.
pub const MAX_SK_DEPTH: usize = 5;

/// Depth predicted by the error schedule starting from the net radius `eps0`.
pub fn scheduled_depth(eps0: f64, eps: f64) -> usize {
    let mut e = eps0;
    let mut depth = 0;
    while e > eps && depth < MAX_SK_DEPTH {
        let next = SK_CONSTANT * e.powf(1.5);
        if next >= e {
            break;
        }
        e = next;
        depth += 1;
    }
    depth
}

/// An approximation together with its measured projective error.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub word: GateWord,
    pub error: f64,
    pub depth: usize,
}

/// Solovay-Kitaev recursion of a fixed depth. The result at depth `n` is
/// never worse than at depth `n − 1`.
pub fn sk_recurse(target: &[Complex64; 4], net: &BaseNet, depth: usize) -> GateWord {
    let gdef = net.gate();
    sk_inner(&Su2::from_unitary(target), net, depth).simplified(gdef)
}

fn sk_inner(u: &Su2, net: &BaseNet, depth: usize) -> GateWord {
    if depth == 0 {
        return net.nearest(u).clone();
    }
    let prev = sk_inner(u, net, depth - 1);
    let prev_q = Su2::from_unitary(prev.matrix());
    let delta = u.mul(&prev_q.adjoint());
    let (v, w) = su2::balanced_commutator(&delta);
    let vw = sk_inner(&v, net, depth - 1);
    let ww = sk_inner(&w, net, depth - 1);
    let candidate = prev
        .then(&ww.inverse())
        .then(&vw.inverse())
        .then(&ww)
        .then(&vw);
    let d_new = projective_distance(&Su2::from_unitary(candidate.matrix()), u);
    let d_old = projective_distance(&prev_q, u);
    if d_new < d_old {
        candidate
    } else {
        prev
    }
}

/// Approximates `target` to projective distance at most `eps`.
///
/// The depth starts from the schedule and is increased until the measured
/// error meets the budget; otherwise `BudgetExceeded` reports the best
/// error reached.
pub fn sk_approximate(target: &[Complex64; 4], net: &BaseNet, eps: f64) -> Result<Approximation> {
    if eps <= 0.0 || eps.is_nan() {
        return Err(Error::InvalidArgument(format!("epsilon must be positive, got {eps}")));
    }
    let start = scheduled_depth(net.covering_radius(), eps);
    let mut best: Option<Approximation> = None;
    for depth in std::iter::once(0).chain(start.max(1)..=MAX_SK_DEPTH.max(start)) {
        let word = sk_recurse(target, net, depth);
        let error = word.distance_to(target);
        if best.as_ref().map_or(true, |b| error < b.error) {
            best = Some(Approximation { word, error, depth });
        }
        if best.as_ref().is_some_and(|b| b.error <= eps) {
            return Ok(best.unwrap());
        }
    }
    let achieved = best.map_or(f64::INFINITY, |b| b.error);
    Err(Error::BudgetExceeded { requested: eps, achieved })
}

/// Output of [`translate_circuit`].
#[derive(Clone, Debug)]
pub struct Translation {
    pub circuit: Circuit,
    pub t_word: Option<Approximation>,
    pub per_gate_budget: f64,
    /// Sum of the measured per-gate errors, an upper bound on the
    /// end-to-end error.
    pub error_bound: f64,
}

/// Replaces each `T`/`T†` by a Clifford+G word at budget `eps_total / t_count`.
pub fn translate_circuit(c: &Circuit, net: &BaseNet, eps_total: f64) -> Result<Translation> {
    let t_count = c.count(crate::circuit::kinds::T_COUNT);
    if t_count == 0 {
        return Ok(Translation { circuit: c.clone(), t_word: None, per_gate_budget: eps_total, error_bound: 0.0 });
    }
    if c.contains_kind(GateKind::CCX) {
        return Err(Error::InvalidArgument("translation expects a Clifford+T circuit".into()));
    }
    let budget = eps_total / t_count as f64;
    let t = crate::numeric::single_qubit_matrix(GateKind::T, None).unwrap();
    let approx = sk_approximate(&t, net, budget)?;
    let tdg_word = approx.word.inverse();
    let mut out = Circuit::new(c.num_wires());
    out.name = c.name.clone();
    if let Some(roles) = c.roles() {
        out.set_roles(roles.to_vec())?;
    }
    for g in c.gates() {
        match g.kind {
            GateKind::T => out.extend(approx.word.gates(g.wires()[0]))?,
            GateKind::Tdg => out.extend(tdg_word.gates(g.wires()[0]))?,
            _ => out.push(*g)?,
        }
    }
    Ok(Translation {
        circuit: out,
        per_gate_budget: budget,
        error_bound: approx.error * t_count as f64,
        t_word: Some(approx),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{phase_min_distance, CMatrix};
    use std::sync::OnceLock;

    fn generic() -> &'static BaseNet {
        static NET: OnceLock<BaseNet> = OnceLock::new();
        NET.get_or_init(|| base_net(&GateDefinition::phase_gate("rz1", 1.0).unwrap(), 10).unwrap())
    }

    fn sqrt_t() -> &'static BaseNet {
        static NET: OnceLock<BaseNet> = OnceLock::new();
        NET.get_or_init(|| base_net(&GateDefinition::sqrt_t(), 8).unwrap())
    }

    fn as_cmatrix(m: &[Complex64; 4]) -> CMatrix {
        CMatrix::from_row_slice(2, 2, m)
    }

    #[test]
    fn exact_cases() {
        let t = crate::numeric::single_qubit_matrix(GateKind::T, None).unwrap();
        let a = sk_approximate(&t, sqrt_t(), 1e-3).unwrap();
        assert_eq!(a.word.to_string(), "g g");
        assert!(a.error < 1e-12);
        let h = crate::numeric::single_qubit_matrix(GateKind::H, None).unwrap();
        let a = sk_approximate(&h, generic(), 1e-6).unwrap();
        assert_eq!(a.word.to_string(), "h");
    }

    #[test]
    fn generic_t_within_budget() {
        let t = crate::numeric::single_qubit_matrix(GateKind::T, None).unwrap();
        for eps in [0.05, 0.025, 0.01] {
            let a = sk_approximate(&t, generic(), eps).unwrap();
            let (d, _) = phase_min_distance(&as_cmatrix(a.word.matrix()), &as_cmatrix(&t)).unwrap();
            assert!(d <= eps, "eps {eps}: measured {d}");
            assert!((d - a.error).abs() < 1e-7);
        }
    }

    #[test]
    fn word_product_matches_generators() {
        let g = GateDefinition::phase_gate("rz1", 1.0).unwrap();
        let w = GateWord::parse("h g s gdg h sdg", &g).unwrap();
        let mut c = Circuit::new(1);
        c.extend(w.gates(0)).unwrap();
        let u = crate::numeric::numeric_simulate(&c, Some(&g)).unwrap();
        assert!((u.matrix() - as_cmatrix(w.matrix())).norm() < 1e-12);
        let inv = w.inverse();
        assert!(w.then(&inv).distance_to(GateWord::identity().matrix()) < 1e-12);
        assert!(w.then(&inv).simplified(&g).is_empty());
    }

    #[test]
    fn deeper_is_never_worse() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let q = su2::Su2::random(&mut rng);
            let m = q.to_matrix();
            let mut last = f64::INFINITY;
            for depth in 0..3 {
                let e = sk_recurse(&m, generic(), depth).distance_to(&m);
                assert!(e <= last + 1e-12);
                last = e;
            }
            let _ = rng.gen::<u8>();
        }
    }

    #[test]
    fn schedule() {
        assert_eq!(scheduled_depth(0.01, 0.1), 0);
        assert!(scheduled_depth(0.02, 1e-3) >= 1);
    }
}
