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

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

use super::{Meter, MinCount, SearchBudget};
use crate::circuit::Gate;
use crate::error::{Error, Result};
use crate::exact::{ExactUnitary, RingElement};

/// A monomial unitary `V|r⟩ = ω^{phase[r]} |perm[r]⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Monomial {
    perm: Vec<usize>,
    phase: Vec<u8>,
}

impl Monomial {
    fn of(u: &ExactUnitary) -> Option<Self> {
        let dim = u.dim();
        let mut perm = vec![0; dim];
        let mut phase = vec![0; dim];
        for c in 0..dim {
            let mut hit = None;
            for r in 0..dim {
                if !u.get(r, c).is_zero() {
                    if hit.is_some() {
                        return None;
                    }
                    hit = Some((r, u.get(r, c).as_omega_power()?));
                }
            }
            let (r, e) = hit?;
            perm[c] = r;
            phase[c] = e;
        }
        Some(Monomial { perm, phase })
    }
}

/// The Hadamard-free group generated by `{T_i, S_i, CX_ij}` modulo global
/// phase, for `n ≤ 2`.
#[derive(Debug)]
pub struct HFreeCatalog {
    n: usize,
    elements: Vec<ExactUnitary>,
    index: HashSet<ExactUnitary>,
    monomials: Vec<Monomial>,
    /// Diagonal exponent vectors of the group, every global phase included.
    diagonals: Vec<Vec<u8>>,
    /// Row permutations of the group.
    perms: Vec<Vec<usize>>,
    /// Per wire: monomials `V` giving distinct cosets `HF·H_i·V`.
    step_reps: OnceLock<Vec<Vec<usize>>>,
}

fn generators(n: usize) -> Vec<Gate> {
    let mut g = Vec::new();
    for i in 0..n {
        g.push(Gate::t(i));
        g.push(Gate::s(i));
    }
    for a in 0..n {
        for b in 0..n {
            if a != b {
                g.push(Gate::cx(a, b));
            }
        }
    }
    g
}

/// Fixed-point closure of the identity under the generators.
pub fn hfree_closure(n: usize) -> Result<HFreeCatalog> {
    if !(1..=2).contains(&n) {
        return Err(Error::InvalidArgument(format!("H-free closure supports n = 1 or 2, got {n}")));
    }
    let gens = generators(n);
    let start = ExactUnitary::identity(n);
    let mut index = HashSet::from([start.clone()]);
    let mut elements = vec![start];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in &gens {
            let mut next = elements[i].clone();
            next.apply_gate(g, 0)?;
            let next = next.phase_canonical();
            if index.insert(next.clone()) {
                queue.push_back(elements.len());
                elements.push(next);
            }
        }
    }
    let monomials: Vec<Monomial> = elements
        .iter()
        .map(|e| Monomial::of(e).expect("H-free elements are monomial"))
        .collect();
    let mut diagonals = HashSet::new();
    let mut perms = HashSet::new();
    for m in &monomials {
        perms.insert(m.perm.clone());
        if m.perm.iter().enumerate().all(|(i, &p)| i == p) {
            for shift in 0..8u8 {
                diagonals.insert(m.phase.iter().map(|e| (e + shift) % 8).collect::<Vec<u8>>());
            }
        }
    }
    let mut diagonals: Vec<Vec<u8>> = diagonals.into_iter().collect();
    diagonals.sort();
    let mut perms: Vec<Vec<usize>> = perms.into_iter().collect();
    perms.sort();
    Ok(HFreeCatalog { n, elements, index, monomials, diagonals, perms, step_reps: OnceLock::new() })
}

type Key = Vec<RingElement>;

impl HFreeCatalog {
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ExactUnitary] {
        &self.elements
    }

    /// Membership modulo global phase.
    pub fn contains(&self, u: &ExactUnitary) -> bool {
        u.qubits() == self.n && self.index.contains(&u.phase_canonical())
    }

    /// Process-wide closure for `n`.
    pub fn shared(n: usize) -> Result<&'static HFreeCatalog> {
        static CATS: [OnceLock<HFreeCatalog>; 2] = [OnceLock::new(), OnceLock::new()];
        if !(1..=2).contains(&n) {
            return Err(Error::TooManyQubits { qubits: n, max: 2 });
        }
        if let Some(c) = CATS[n - 1].get() {
            return Ok(c);
        }
        let built = hfree_closure(n)?;
        Ok(CATS[n - 1].get_or_init(|| built))
    }

    fn rows(u: &ExactUnitary) -> Vec<Vec<RingElement>> {
        (0..u.dim()).map(|r| (0..u.dim()).map(|c| u.get(r, c).clone()).collect()).collect()
    }

    /// Lexicographically least matrix in the left coset `HF·X`.
    fn coset_key(&self, x: &[Vec<RingElement>]) -> Key {
        let dim = x.len();
        let mut best: Option<Key> = None;
        for perm in &self.perms {
            // rows of P·X: row perm[r] is row r of X
            let mut prow = vec![0usize; dim];
            for (r, &p) in perm.iter().enumerate() {
                prow[p] = r;
            }
            let rotated: Vec<Vec<Vec<RingElement>>> = (0..dim)
                .map(|r| {
                    (0..8)
                        .map(|e| x[prow[r]].iter().map(|v| v.mul_omega(e)).collect())
                        .collect()
                })
                .collect();
            let mut alive: Vec<&Vec<u8>> = self.diagonals.iter().collect();
            let mut key = Vec::with_capacity(dim * dim);
            for row in rotated.iter() {
                let r = key.len() / dim;
                let choice = alive
                    .iter()
                    .map(|d| d[r])
                    .min_by(|&a, &b| row[a as usize].cmp(&row[b as usize]))
                    .unwrap();
                alive.retain(|d| d[r] == choice);
                key.extend(row[choice as usize].iter().cloned());
            }
            if best.as_ref().map_or(true, |b| key < *b) {
                best = Some(key);
            }
        }
        best.unwrap()
    }

    fn apply_monomial(m: &Monomial, x: &[Vec<RingElement>]) -> Vec<Vec<RingElement>> {
        let mut out = vec![Vec::new(); x.len()];
        for (r, row) in x.iter().enumerate() {
            out[m.perm[r]] = row.iter().map(|v| v.mul_omega(i64::from(m.phase[r]))).collect();
        }
        out
    }

    fn apply_h(wire: usize, x: &[Vec<RingElement>]) -> Vec<Vec<RingElement>> {
        let s = RingElement::inv_sqrt2();
        let mut out = x.to_vec();
        for r0 in 0..x.len() {
            if r0 >> wire & 1 == 1 {
                continue;
            }
            let r1 = r0 | 1 << wire;
            for c in 0..x.len() {
                out[r0][c] = &(&x[r0][c] + &x[r1][c]) * &s;
                out[r1][c] = &(&x[r0][c] - &x[r1][c]) * &s;
            }
        }
        out
    }

    fn step_reps(&self) -> &[Vec<usize>] {
        self.step_reps.get_or_init(|| {
            let id = Self::rows(&ExactUnitary::identity(self.n));
            (0..self.n)
                .map(|w| {
                    let mut seen = HashSet::new();
                    let mut reps = Vec::new();
                    for (i, m) in self.monomials.iter().enumerate() {
                        let y = Self::apply_h(w, &Self::apply_monomial(m, &id));
                        if seen.insert(self.coset_key(&y)) {
                            reps.push(i);
                        }
                    }
                    reps
                })
                .collect()
        })
    }
}

/// Minimal number of `H` gates over Clifford+T circuits implementing `u`
/// modulo global phase: `u = ω^j V_0 H_{i_1} V_1 ⋯ H_{i_k} V_k`, `V_m`
/// Hadamard-free. Breadth-first over left cosets of the Hadamard-free group.
pub fn exact_min_hcount(u: &ExactUnitary, budget: SearchBudget) -> Result<MinCount> {
    let cat = HFreeCatalog::shared(u.qubits())?;
    if cat.contains(u) {
        return Ok(MinCount::Exact(0));
    }
    let mut meter = Meter::new(budget);
    let goal = cat.coset_key(&HFreeCatalog::rows(&ExactUnitary::identity(cat.n)));
    let start = HFreeCatalog::rows(u);
    let mut seen: HashMap<Key, ()> = HashMap::from([(cat.coset_key(&start), ())]);
    let mut frontier = vec![start];
    let reps = cat.step_reps();
    for k in 1..=budget.k_max {
        let mut next = Vec::new();
        for x in &frontier {
            for (w, wire_reps) in reps.iter().enumerate() {
                for &i in wire_reps {
                    meter.tick()?;
                    let y = HFreeCatalog::apply_h(w, &HFreeCatalog::apply_monomial(&cat.monomials[i], x));
                    let key = cat.coset_key(&y);
                    if key == goal {
                        return Ok(MinCount::Exact(k));
                    }
                    if seen.insert(key, ()).is_none() {
                        next.push(y);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(MinCount::Exceeds(budget.k_max))
}
