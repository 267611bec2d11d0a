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

use std::collections::HashSet;

use super::{Meter, MinCount, SearchBudget};
use crate::error::{Error, Result};

pub const MAX_TOFCOUNT_WIRES: usize = 3;

/// True iff `perm(x) = A·x ⊕ b` over GF(2).
pub fn is_linear_reversible(perm: &[usize]) -> bool {
    let len = perm.len();
    if !len.is_power_of_two() {
        return false;
    }
    let n = len.trailing_zeros() as usize;
    let b = perm[0];
    let cols: Vec<usize> = (0..n).map(|i| perm[1 << i] ^ b).collect();
    (0..len).all(|x| {
        let ax = (0..n).filter(|i| x >> i & 1 == 1).fold(0, |acc, i| acc ^ cols[i]);
        perm[x] == ax ^ b
    })
}

fn is_bijection(perm: &[usize]) -> bool {
    let mut hit = vec![false; perm.len()];
    perm.iter().all(|&p| p < perm.len() && !std::mem::replace(&mut hit[p], true))
}

/// All affine bijections of `n`-bit strings.
fn affine_group(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cols = vec![0usize; n];
    fn rec(i: usize, n: usize, cols: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let len = 1usize << n;
        if i == n {
            let lin: Vec<usize> = (0..len)
                .map(|x| (0..n).filter(|j| x >> j & 1 == 1).fold(0, |a, j| a ^ cols[j]))
                .collect();
            if is_bijection(&lin) {
                for b in 0..len {
                    out.push(lin.iter().map(|&y| y ^ b).collect());
                }
            }
            return;
        }
        for c in 1..len {
            cols[i] = c;
            rec(i + 1, n, cols, out);
        }
    }
    rec(0, n, &mut cols, &mut out);
    out
}

fn compose(after: &[usize], before: &[usize]) -> Vec<usize> {
    before.iter().map(|&x| after[x]).collect()
}

fn coset_key(affine: &[Vec<usize>], p: &[usize]) -> Vec<usize> {
    affine.iter().map(|a| compose(a, p)).min().unwrap()
}

/// Toffoli placements: target `t`, controls the other two of three wires.
fn toffolis(n: usize) -> Vec<Vec<usize>> {
    let len = 1usize << n;
    let mut out = Vec::new();
    for t in 0..n {
        for c0 in 0..n {
            for c1 in (c0 + 1)..n {
                if c0 == t || c1 == t {
                    continue;
                }
                out.push(
                    (0..len)
                        .map(|x| if x >> c0 & 1 == 1 && x >> c1 & 1 == 1 { x ^ 1 << t } else { x })
                        .collect(),
                );
            }
        }
    }
    out
}

/// Minimal number of `CCX` gates in an `{X, CX, CCX}` circuit realising the
/// basis permutation `perm` on `n ≤ 3` wires. Breadth-first over left
/// cosets of the affine group.
pub fn exact_min_tofcount(perm: &[usize], budget: SearchBudget) -> Result<MinCount> {
    if !perm.len().is_power_of_two() || !is_bijection(perm) {
        return Err(Error::InvalidArgument("not a permutation of 2^n points".into()));
    }
    let n = perm.len().trailing_zeros() as usize;
    if n > MAX_TOFCOUNT_WIRES {
        return Err(Error::TooManyQubits { qubits: n, max: MAX_TOFCOUNT_WIRES });
    }
    if is_linear_reversible(perm) {
        return Ok(MinCount::Exact(0));
    }
    let mut meter = Meter::new(budget);
    let affine = affine_group(n);
    let gates = toffolis(n);
    let goal = coset_key(&affine, &(0..perm.len()).collect::<Vec<_>>());
    let mut seen = HashSet::from([coset_key(&affine, perm)]);
    let mut frontier = vec![perm.to_vec()];
    for k in 1..=budget.k_max {
        let mut next = Vec::new();
        for p in &frontier {
            for a in &affine {
                let ap = compose(a, p);
                for g in &gates {
                    meter.tick()?;
                    let q = compose(g, &ap);
                    let key = coset_key(&affine, &q);
                    if key == goal {
                        return Ok(MinCount::Exact(k));
                    }
                    if seen.insert(key) {
                        next.push(q);
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::parse_circuit;

    fn perm(text: &str) -> Vec<usize> {
        parse_circuit(text).unwrap().basis_permutation().unwrap()
    }

    #[test]
    fn affine_group_size() {
        assert_eq!(affine_group(1).len(), 2);
        assert_eq!(affine_group(2).len(), 24);
        assert_eq!(affine_group(3).len(), 1344);
    }

    #[test]
    fn linearity() {
        assert!(is_linear_reversible(&perm("qubits 2\ncx 0 1\nx 1")));
        assert!(!is_linear_reversible(&perm("qubits 3\nccx 0 1 2")));
    }

    #[test]
    fn counts() {
        let b = SearchBudget::default();
        assert_eq!(exact_min_tofcount(&perm("qubits 2\ncx 0 1\nx 0"), b).unwrap(), MinCount::Exact(0));
        assert_eq!(exact_min_tofcount(&perm("qubits 3\nccx 0 1 2"), b).unwrap(), MinCount::Exact(1));
        assert_eq!(
            exact_min_tofcount(&perm("qubits 3\nccx 0 1 2\ncx 2 0\nccx 0 2 1"), b).unwrap(),
            MinCount::Exact(2)
        );
        assert_eq!(
            exact_min_tofcount(&perm("qubits 3\nccx 0 1 2\nccx 0 1 2"), b).unwrap(),
            MinCount::Exact(0)
        );
    }

    #[test]
    fn every_three_bit_permutation_is_reached() {
        // 8!/1344 = 30 cosets, all at finite distance
        let affine = affine_group(3);
        let mut keys = HashSet::new();
        let mut p: Vec<usize> = (0..8).collect();
        permute_all(&mut p, 0, &mut |q| {
            keys.insert(coset_key(&affine, q));
        });
        assert_eq!(keys.len(), 30);
    }

    fn permute_all(p: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
        if i == p.len() {
            f(p);
            return;
        }
        for j in i..p.len() {
            p.swap(i, j);
            permute_all(p, i + 1, f);
            p.swap(i, j);
        }
    }
}
