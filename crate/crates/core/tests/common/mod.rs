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

//! Independent reference implementations used as test oracles. None of
//! these call the code under test beyond parsing and circuit construction.
#![allow(dead_code)]

use std::collections::HashSet;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use satred::boolfn::{parse_expr, BoolExpr};
use satred::circuit::{Circuit, Gate, GateKind};
use satred::exact::{ExactUnitary, RingElement};

pub const CORPUS_SEED: u64 = 0xc0ffee;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Satisfiability by enumerating every assignment.
pub fn brute_sat(f: &BoolExpr) -> bool {
    (0..1u64 << f.num_vars()).any(|a| f.eval(a))
}

pub fn is_constant(f: &BoolExpr) -> Option<bool> {
    let first = f.eval(0);
    (0..1u64 << f.num_vars()).all(|a| f.eval(a) == first).then_some(first)
}

/// Random formula text over `x0 .. x{vars-1}` that mentions every variable.
pub fn random_formula(rng: &mut impl Rng, vars: usize, depth: usize) -> String {
    fn node(rng: &mut impl Rng, vars: usize, depth: usize) -> String {
        if depth == 0 || rng.gen_bool(0.25) {
            let v = rng.gen_range(0..vars);
            return if rng.gen_bool(0.3) { format!("~x{v}") } else { format!("x{v}") };
        }
        let op = ["&", "|", "^"][rng.gen_range(0..3)];
        let (a, b) = (node(rng, vars, depth - 1), node(rng, vars, depth - 1));
        let e = format!("({a} {op} {b})");
        if rng.gen_bool(0.15) {
            format!("~{e}")
        } else {
            e
        }
    }
    // pin the variable count by a vacuous conjunct
    let pin: Vec<String> = (0..vars).map(|v| format!("(x{v} | ~x{v})")).collect();
    format!("{} & {}", node(rng, vars, depth), pin.join(" & "))
}

/// Seeded corpus of random formulas with exactly `vars` variables.
pub fn random_corpus(vars: usize, count: usize, seed: u64) -> Vec<BoolExpr> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let text = random_formula(&mut r, vars, 3);
            let f = parse_expr(&text).unwrap();
            assert_eq!(f.num_vars(), vars, "{text}");
            f
        })
        .collect()
}

/// Every truth table on `vars ≤ 3` variables as a sum of minterms.
pub fn all_tables(vars: usize) -> Vec<BoolExpr> {
    (0..1u64 << (1 << vars))
        .map(|mask| satred::boolfn::TruthTable::from_mask(vars, mask).to_expr())
        .collect()
}

/// Classical action of an `{x, cx, ccx}` circuit on one basis state.
pub fn classical_apply(c: &Circuit, mut state: usize) -> usize {
    for g in c.gates() {
        let w = g.wires();
        let (controls, target) = w.split_at(w.len() - 1);
        match g.kind {
            GateKind::X | GateKind::CX | GateKind::CCX => {
                if controls.iter().all(|&q| state >> q & 1 == 1) {
                    state ^= 1 << target[0];
                }
            }
            k => panic!("{k} is not classical"),
        }
    }
    state
}

/// `perm(x) ⊕ perm(0)` is additive.
pub fn is_affine(perm: &[usize]) -> bool {
    let b = perm[0];
    (0..perm.len()).all(|x| (0..perm.len()).all(|y| perm[x ^ y] ^ b == (perm[x] ^ b) ^ (perm[y] ^ b)))
}

/// Dense complex simulation from gate definitions on basis states.
pub fn dense_unitary(c: &Circuit) -> Vec<Vec<Complex64>> {
    let dim = 1usize << c.num_wires();
    let mut cols: Vec<Vec<Complex64>> = (0..dim)
        .map(|j| (0..dim).map(|i| Complex64::new(f64::from(u8::from(i == j)), 0.0)).collect())
        .collect();
    let w8 = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    for g in c.gates() {
        let w = g.wires();
        for col in cols.iter_mut() {
            let mut out = vec![Complex64::new(0.0, 0.0); dim];
            for (b, &amp) in col.iter().enumerate() {
                let bit = |q: usize| b >> q & 1;
                match g.kind {
                    GateKind::H => {
                        let q = w[0];
                        let sign = if bit(q) == 1 { -1.0 } else { 1.0 };
                        out[b & !(1 << q)] += amp * h;
                        out[b | 1 << q] += amp * h * sign;
                    }
                    GateKind::X => out[b ^ 1 << w[0]] += amp,
                    GateKind::CX => out[b ^ (bit(w[0]) << w[1])] += amp,
                    GateKind::CCX => out[b ^ ((bit(w[0]) & bit(w[1])) << w[2])] += amp,
                    GateKind::CZ => out[b] += if bit(w[0]) & bit(w[1]) == 1 { -amp } else { amp },
                    k => {
                        let e = match k {
                            GateKind::S => 2,
                            GateKind::Sdg => 6,
                            GateKind::T => 1,
                            GateKind::Tdg => 7,
                            _ => panic!("no fixed matrix for {k}"),
                        };
                        out[b] += if bit(w[0]) == 1 { amp * w8.powi(e) } else { amp };
                    }
                }
            }
            *col = out;
        }
    }
    (0..dim).map(|r| (0..dim).map(|c| cols[c][r]).collect()).collect()
}

pub fn max_abs_diff(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

const CLIFFORD_T_1Q: [GateKind; 5] = [GateKind::H, GateKind::S, GateKind::Sdg, GateKind::T, GateKind::Tdg];

/// Random Clifford+T circuit with at most `max_t` T/T† gates.
pub fn random_clifford_t(rng: &mut impl Rng, n: usize, len: usize, max_t: usize) -> Circuit {
    let mut c = Circuit::new(n);
    let mut t = 0;
    while c.len() < len {
        if n > 1 && rng.gen_bool(0.3) {
            let a = rng.gen_range(0..n);
            let b = (a + rng.gen_range(1..n)) % n;
            c.push(Gate::cx(a, b)).unwrap();
            continue;
        }
        let k = CLIFFORD_T_1Q[rng.gen_range(0..5)];
        if matches!(k, GateKind::T | GateKind::Tdg) {
            if t == max_t {
                continue;
            }
            t += 1;
        }
        c.push(Gate::new(k, &[rng.gen_range(0..n)])).unwrap();
    }
    c
}

pub fn random_clifford(rng: &mut impl Rng, n: usize, len: usize) -> Circuit {
    let kinds = [GateKind::H, GateKind::S, GateKind::Sdg, GateKind::X, GateKind::CX, GateKind::CZ];
    let mut c = Circuit::new(n);
    for _ in 0..len {
        let k = kinds[rng.gen_range(0..kinds.len())];
        if k.arity() == 2 {
            let a = rng.gen_range(0..n);
            let b = (a + rng.gen_range(1..n)) % n;
            c.push(Gate::new(k, &[a, b])).unwrap();
        } else {
            c.push(Gate::new(k, &[rng.gen_range(0..n)])).unwrap();
        }
    }
    c
}

fn exact_of(gates: &[Gate]) -> ExactUnitary {
    let mut u = ExactUnitary::identity(1);
    for (i, g) in gates.iter().enumerate() {
        u.apply_gate(g, i).unwrap();
    }
    u
}

/// Phase-free key: the matrix scaled so its first nonzero entry is fixed
/// by trying all eight phases and keeping the least.
fn key(u: &ExactUnitary) -> Vec<RingElement> {
    (0..8)
        .map(|k| u.scale_omega(k).entries().to_vec())
        .min()
        .unwrap()
}

/// Single-qubit T-count by plain breadth-first search over words
/// `C_0 T C_1 T ⋯ T C_k`, with the 24 Cliffords enumerated from `{h, s}`.
pub struct NaiveTCount {
    levels: Vec<HashSet<Vec<RingElement>>>,
    cliffords: Vec<ExactUnitary>,
}

impl NaiveTCount {
    pub fn new(max_k: usize) -> Self {
        let mut seen = HashSet::from([key(&ExactUnitary::identity(1))]);
        let mut cliffords = vec![ExactUnitary::identity(1)];
        let mut i = 0;
        while i < cliffords.len() {
            for g in [Gate::h(0), Gate::s(0)] {
                let mut next = cliffords[i].clone();
                next.apply_gate(&g, 0).unwrap();
                if seen.insert(key(&next)) {
                    cliffords.push(next);
                }
            }
            i += 1;
        }
        assert_eq!(cliffords.len(), 24);
        let t = exact_of(&[Gate::t(0)]);
        let mut reached: HashSet<Vec<RingElement>> = seen.clone();
        let mut levels = vec![seen];
        let mut frontier = cliffords.clone();
        for _ in 0..max_k {
            let mut level = HashSet::new();
            let mut next = Vec::new();
            for u in &frontier {
                let ut = t.mul(u);
                for c in &cliffords {
                    let v = c.mul(&ut);
                    let k = key(&v);
                    if reached.insert(k.clone()) {
                        level.insert(k);
                        next.push(v);
                    }
                }
            }
            levels.push(level);
            frontier = next;
        }
        NaiveTCount { levels, cliffords }
    }

    pub fn cliffords(&self) -> &[ExactUnitary] {
        &self.cliffords
    }

    pub fn tcount(&self, u: &ExactUnitary) -> Option<usize> {
        let k = key(u);
        self.levels.iter().position(|l| l.contains(&k))
    }
}

/// Membership in the two-qubit group generated by `{T_i, S_i, CX}` modulo
/// phase: a monomial matrix whose permutation is linear over GF(2) and
/// whose eighth-root exponents have even sum.
pub fn is_hfree_2q(u: &ExactUnitary) -> bool {
    let dim = u.dim();
    let mut perm = vec![usize::MAX; dim];
    let mut exps = 0u32;
    for c in 0..dim {
        let hits: Vec<usize> = (0..dim).filter(|&r| !u.get(r, c).is_zero()).collect();
        let [r] = hits[..] else { return false };
        let Some(e) = u.get(r, c).as_omega_power() else { return false };
        perm[c] = r;
        exps += u32::from(e);
    }
    perm[0] == 0 && is_affine(&perm) && exps % 2 == 0
}
