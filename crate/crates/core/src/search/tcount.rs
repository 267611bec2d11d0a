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

use std::collections::HashMap;

use super::{Meter, MinCount, SearchBudget};
use crate::error::{Error, Result};
use crate::exact::{ExactUnitary, PauliOperator, RingElement};

pub const MAX_TCOUNT_QUBITS: usize = 2;

/// `a + b√2`.
type Z2 = (i64, i64);

fn times_sqrt2((a, b): Z2) -> Z2 {
    (2 * b, a)
}

fn add((a, b): Z2, (c, d): Z2, sign: i64) -> Z2 {
    (a + sign * c, b + sign * d)
}

fn is_negative((a, b): Z2) -> bool {
    let (a2, b2) = (i128::from(a) * i128::from(a), 2 * i128::from(b) * i128::from(b));
    match (a.signum(), b.signum()) {
        (-1, 1) => a2 > b2,
        (1, -1) => b2 > a2,
        (sa, sb) => sa < 0 || sb < 0,
    }
}

/// Index `x | z << n` of the Hermitian Pauli `i^{|x∧z|} X^x Z^z`.
struct Paulis {
    n: usize,
}

impl Paulis {
    fn count(&self) -> usize {
        1 << (2 * self.n)
    }

    fn split(&self, j: usize) -> (usize, usize) {
        (j & ((1 << self.n) - 1), j >> self.n)
    }

    /// `P_a P_b = i^e P_{a⊕b}`.
    fn product_phase(&self, a: usize, b: usize) -> u32 {
        let (x1, z1) = self.split(a);
        let (x2, z2) = self.split(b);
        let (x3, z3) = (x1 ^ x2, z1 ^ z2);
        let e = (x1 & z1).count_ones() + (x2 & z2).count_ones() + 2 * (z1 & x2).count_ones() + 4
            - (x3 & z3).count_ones() % 4;
        e % 4
    }

    fn operator(&self, j: usize) -> PauliOperator {
        let (x, z) = self.split(j);
        PauliOperator {
            phase: ((x & z).count_ones() % 4) as u8,
            x: (0..self.n).map(|i| x >> i & 1 == 1).collect(),
            z: (0..self.n).map(|i| z >> i & 1 == 1).collect(),
        }
    }
}

/// Pauli-basis channel matrix `M_ij = tr(P_i U P_j U†) / 2^n`, stored as
/// `N / √2^k` with `N` over `ℤ[√2]` and `k` minimal.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Channel {
    dim: usize,
    k: u32,
    n: Vec<Z2>,
}

impl Channel {
    fn identity(dim: usize) -> Self {
        let mut n = vec![(0, 0); dim * dim];
        for i in 0..dim {
            n[i * dim + i] = (1, 0);
        }
        Channel { dim, k: 0, n }
    }

    fn reduce(&mut self) {
        while self.k > 0 && self.n.iter().all(|&(a, _)| a % 2 == 0) {
            for e in &mut self.n {
                *e = (e.1, e.0 / 2);
            }
            self.k -= 1;
        }
    }

    fn from_exact(u: &ExactUnitary, paulis: &Paulis) -> Result<Self> {
        let dim = paulis.count();
        let ops: Vec<ExactUnitary> = (0..dim).map(|j| paulis.operator(j).to_exact()).collect();
        let adj = u.adjoint();
        let mut entries: Vec<RingElement> = Vec::with_capacity(dim * dim);
        let mut images = Vec::with_capacity(dim);
        for op in &ops {
            images.push(u.mul(op).mul(&adj));
        }
        let shrink = RingElement::inv_sqrt2();
        for i in 0..dim {
            let p = paulis.operator(i);
            for a in &images {
                let mut tr = RingElement::zero();
                for r in 0..u.dim() {
                    let (row, e) = p.column_action(r);
                    tr = &tr + &a.get(r, row).mul_omega(e);
                }
                for _ in 0..2 * paulis.n {
                    tr = &tr * &shrink;
                }
                entries.push(tr);
            }
        }
        let big_k = entries.iter().map(RingElement::sde).max().unwrap_or(0);
        let mut n = Vec::with_capacity(entries.len());
        for e in &entries {
            let [a, b, c, d] = e.coeffs();
            let as_i64 = |x: &num_bigint::BigInt| {
                i64::try_from(x).map_err(|_| Error::InvalidArgument("channel entry overflows i64".into()))
            };
            let (a, b, c, d) = (as_i64(a)?, as_i64(b)?, as_i64(c)?, as_i64(d)?);
            if c != 0 || d != -b {
                return Err(Error::InvalidArgument("channel entry is not real".into()));
            }
            let mut z = (a, b);
            for _ in e.sde()..big_k {
                z = times_sqrt2(z);
            }
            n.push(z);
        }
        let mut ch = Channel { dim, k: big_k, n };
        ch.reduce();
        Ok(ch)
    }

    /// `self · R̂(P_p)` for the rotation `exp(−iπ/8 P_p)`.
    fn rotate_right(&self, p: usize, paulis: &Paulis) -> Self {
        let dim = self.dim;
        let mut n = vec![(0, 0); dim * dim];
        for q in 0..dim {
            let e = paulis.product_phase(p, q);
            for r in 0..dim {
                n[r * dim + q] = if e % 2 == 0 {
                    times_sqrt2(self.n[r * dim + q])
                } else {
                    let s = if e == 1 { 1 } else { -1 };
                    add(self.n[r * dim + q], self.n[r * dim + (p ^ q)], s)
                };
            }
        }
        let mut out = Channel { dim, k: self.k + 1, n };
        out.reduce();
        out
    }

    /// `R̂(P_p)ᵀ · self`.
    fn unrotate_left(&self, p: usize, paulis: &Paulis) -> Self {
        let dim = self.dim;
        let mut n = vec![(0, 0); dim * dim];
        for q in 0..dim {
            let e = paulis.product_phase(p, q);
            for c in 0..dim {
                n[q * dim + c] = if e % 2 == 0 {
                    times_sqrt2(self.n[q * dim + c])
                } else {
                    let s = if e == 1 { 1 } else { -1 };
                    add(self.n[q * dim + c], self.n[(p ^ q) * dim + c], s)
                };
            }
        }
        let mut out = Channel { dim, k: self.k + 1, n };
        out.reduce();
        out
    }

    /// Invariant of the right Clifford coset: columns sign-normalised and
    /// sorted.
    fn coset_key(&self) -> (u32, Vec<Z2>) {
        let dim = self.dim;
        let mut cols: Vec<Vec<Z2>> = (0..dim)
            .map(|c| {
                let col: Vec<Z2> = (0..dim).map(|r| self.n[r * dim + c]).collect();
                let lead = col.iter().find(|&&z| z != (0, 0)).copied().unwrap_or((0, 0));
                if is_negative(lead) {
                    col.iter().map(|&(a, b)| (-a, -b)).collect()
                } else {
                    col
                }
            })
            .collect();
        cols.sort_unstable();
        (self.k, cols.concat())
    }
}

/// Minimal T-count of `u` modulo global phase by meet-in-the-middle over
/// Pauli `π/8` rotations: `u = ω^j R(P_1) ⋯ R(P_k) C` with `C` Clifford.
pub fn exact_min_tcount(u: &ExactUnitary, budget: SearchBudget) -> Result<MinCount> {
    let n = u.qubits();
    if n == 0 || n > MAX_TCOUNT_QUBITS {
        return Err(Error::TooManyQubits { qubits: n, max: MAX_TCOUNT_QUBITS });
    }
    let paulis = Paulis { n };
    let dim = paulis.count();
    let mut meter = Meter::new(budget);
    let target = Channel::from_exact(u, &paulis)?;
    let target_key = target.coset_key();

    let id = Channel::identity(dim);
    let mut seen: HashMap<(u32, Vec<Z2>), usize> = HashMap::from([(id.coset_key(), 0)]);
    let mut levels: Vec<Vec<(Channel, Vec<usize>)>> = vec![vec![(id, Vec::new())]];
    if seen.contains_key(&target_key) {
        return Ok(MinCount::Exact(0));
    }
    for k in 1..=budget.k_max {
        let a = k.div_ceil(2);
        let b = k - a;
        while levels.len() <= a {
            let m = levels.len();
            let mut next = Vec::new();
            for (ch, word) in &levels[m - 1] {
                for p in 1..dim {
                    meter.tick()?;
                    let child = ch.rotate_right(p, &paulis);
                    let key = child.coset_key();
                    if seen.contains_key(&key) {
                        continue;
                    }
                    seen.insert(key, m);
                    let mut w = word.clone();
                    w.push(p);
                    next.push((child, w));
                }
            }
            levels.push(next);
        }
        if let Some(&level) = seen.get(&target_key) {
            return Ok(MinCount::Exact(level));
        }
        for (_, word) in &levels[a] {
            meter.tick()?;
            let mut rest = target.clone();
            for &p in word {
                rest = rest.unrotate_left(p, &paulis);
            }
            if seen.get(&rest.coset_key()).is_some_and(|&l| l <= b) {
                return Ok(MinCount::Exact(k));
            }
        }
    }
    Ok(MinCount::Exceeds(budget.k_max))
}
