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

mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use satred::boolfn::parse_expr;
use satred::circuit::{emit_circuit, parse_circuit, Circuit, Gate};
use satred::clifford::CliffordCatalog;
use satred::exact::{exact_simulate, is_clifford_exact};
use satred::numeric::numeric_simulate;
use satred::search::{exact_min_tcount, SearchBudget};
use satred::synth::anf;

use common::*;

fn naive() -> &'static NaiveTCount {
    static N: std::sync::OnceLock<NaiveTCount> = std::sync::OnceLock::new();
    N.get_or_init(|| NaiveTCount::new(4))
}

fn matrix_rows(m: &satred::numeric::CMatrix) -> Vec<Vec<num_complex::Complex64>> {
    (0..m.nrows()).map(|r| (0..m.ncols()).map(|c| m[(r, c)]).collect()).collect()
}

#[test]
fn naive_single_qubit_level_sizes() {
    let n = naive();
    let t = exact_simulate(&parse_circuit("qubits 1\nt 0").unwrap()).unwrap();
    assert_eq!(n.tcount(&t), Some(1));
    assert_eq!(n.tcount(&t.mul(&t)), Some(0));
}

#[test]
fn clifford_catalog_matches_naive_closure() {
    let cat = CliffordCatalog::shared(1).unwrap();
    assert_eq!(cat.len(), naive().cliffords().len());
    for c in naive().cliffords() {
        assert!(cat.contains(c));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_and_numeric_agree_with_dense(seed in any::<u64>(), n in 1usize..4, len in 0usize..25) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let c = random_clifford_t(&mut r, n, len, len);
        let dense = dense_unitary(&c);
        let exact = exact_simulate(&c).unwrap().to_numeric();
        let numeric = numeric_simulate(&c, None).unwrap();
        prop_assert!(max_abs_diff(&dense, &matrix_rows(&exact)) < 1e-9);
        prop_assert!(max_abs_diff(&dense, &matrix_rows(numeric.matrix())) < 1e-9);
    }

    #[test]
    fn text_round_trip(seed in any::<u64>(), n in 1usize..5, len in 0usize..30) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let c = random_clifford_t(&mut r, n, len, len);
        let back = parse_circuit(&emit_circuit(&c)).unwrap();
        prop_assert_eq!(back.gates(), c.gates());
        prop_assert_eq!(back.num_wires(), c.num_wires());
    }

    #[test]
    fn basis_permutation_matches_classical(seed in any::<u64>(), len in 0usize..12) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let mut c = Circuit::new(4);
        for _ in 0..len {
            let a = rand::Rng::gen_range(&mut r, 0..4);
            let b = (a + rand::Rng::gen_range(&mut r, 1..4)) % 4;
            let d = (0..4).find(|&d| d != a && d != b).unwrap();
            let g = [Gate::x(a), Gate::cx(a, b), Gate::ccx(a, b, d)][rand::Rng::gen_range(&mut r, 0..3)];
            c.push(g).unwrap();
        }
        let perm = c.basis_permutation().unwrap();
        for (s, &img) in perm.iter().enumerate() {
            prop_assert_eq!(img, classical_apply(&c, s));
        }
    }

    #[test]
    fn anf_agrees_with_evaluation(seed in any::<u64>(), vars in 1usize..5) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let f = parse_expr(&random_formula(&mut r, vars, 4)).unwrap();
        let a = anf(&f).unwrap();
        for x in 0..1u64 << vars {
            prop_assert_eq!(a.eval(x), f.eval(x));
        }
    }

    #[test]
    fn mitm_matches_naive_bfs(seed in any::<u64>(), len in 1usize..16) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let c = random_clifford_t(&mut r, 1, len, 4);
        let u = exact_simulate(&c).unwrap();
        let mitm = exact_min_tcount(&u, SearchBudget::default()).unwrap().exact();
        prop_assert_eq!(mitm, naive().tcount(&u));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn two_qubit_tcount_bounds(seed in any::<u64>(), len in 1usize..10) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let c = random_clifford_t(&mut r, 2, len, 3);
        let u = exact_simulate(&c).unwrap();
        let k = exact_min_tcount(&u, SearchBudget::default()).unwrap().exact().unwrap();
        prop_assert!(k <= c.count(satred::circuit::kinds::T_COUNT));
        prop_assert_eq!(k == 0, is_clifford_exact(&u));
        // invariant under Clifford multiplication on both sides
        let left = random_clifford(&mut r, 2, 6);
        let right = random_clifford(&mut r, 2, 6);
        let mut sandwiched = left.clone();
        sandwiched.append(&c).unwrap();
        sandwiched.append(&right).unwrap();
        let v = exact_simulate(&sandwiched).unwrap();
        prop_assert_eq!(exact_min_tcount(&v, SearchBudget::default()).unwrap().exact(), Some(k));
    }
}
