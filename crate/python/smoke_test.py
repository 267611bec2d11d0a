"""Smoke test for the satred Python bindings.

Build and install first:
    pip install --no-build-isolation -e crates/python
Then run:
    python python/smoke_test.py
"""

import cmath
import itertools
import json
import math

import satred_py as sr


def check_formula():
    f = sr.Formula("(x0 | x1) & ~x2")
    assert f.num_vars == 3
    table = f.truth_table()
    for bits in itertools.product([False, True], repeat=3):
        index = sum(b << i for i, b in enumerate(bits))
        assert table[index] == f(list(bits))
    assert f.is_satisfiable()
    assert not sr.Formula("x0 & ~x0").is_satisfiable()
    g = sr.Formula.from_dimacs("p cnf 2 2\n1 0\n-2 0\n")
    assert g.truth_table() == [False, True, False, False]


def check_circuit():
    c = sr.Circuit("qubits 1\nt 0\n")
    u = c.unitary()
    assert abs(u[1][1] - cmath.exp(1j * math.pi / 4)) < 1e-12
    assert c.count(["t", "tdg"]) == 1
    assert not c.is_clifford()
    d, _alpha, witness = sr.nearest_clifford(c)
    assert abs(d - 2 * math.sin(math.pi / 16)) < 1e-9
    assert witness.num_wires == 1
    d, _alpha = sr.distance(c, sr.Circuit("qubits 1\n"))
    assert abs(d - 2 * math.sin(math.pi / 16)) < 1e-9


def check_reductions():
    for variant in ["t", "tof", "ent", "h"]:
        red = sr.reduce(sr.Formula("x0 & x1"), variant)
        side = json.loads(red.sidecar_json())
        assert side["variant"] == variant
        assert red.inputs == [0, 1]
        sat, trace = sr.decide_sat(sr.Formula("x0 & x1"), variant)
        assert sat and json.loads(trace)[0]["step"] == "build"
        unsat, _ = sr.decide_sat(sr.Formula("x0 & ~x0"), variant)
        assert not unsat
    t = sr.reduce(sr.Formula("x0"), "t").circuit
    assert not t.is_clifford()
    gate = sr.Gate.phase("rz", 1.0)
    sat, _ = sr.decide_sat(sr.Formula("x0"), "g", gate=gate, epsilon=0.1, net_len=8)
    assert sat


def check_searches():
    assert sr.min_tcount(sr.Circuit("qubits 1\nt 0\nh 0\nt 0\n")) == 2
    assert sr.min_tcount(sr.Circuit("qubits 1\nt 0\nh 0\nt 0\n"), k_max=1) is None
    assert sr.min_hcount(sr.Circuit("qubits 1\nh 0\nt 0\nh 0\n")) == 2
    assert sr.min_tofcount(sr.Circuit("qubits 3\nccx 0 1 2\n")) == 1
    try:
        sr.min_hcount(sr.Circuit("qubits 1\nh 0\nt 0\nh 0\n"), node_cap=1)
    except sr.ResourceCapError:
        pass
    else:
        raise AssertionError("node cap not enforced")


def check_sk():
    word, err = sr.sk(sr.Gate.sqrt_t(), "h", 0.01, net_len=6)
    assert err <= 0.01 and word
    try:
        sr.sk(sr.Gate.phase("rz", 1.0), "t", 1e-9, net_len=4)
    except sr.PrecisionError:
        pass
    else:
        raise AssertionError("unreachable precision accepted")


if __name__ == "__main__":
    for check in [check_formula, check_circuit, check_reductions, check_searches, check_sk]:
        check()
        print(f"ok {check.__name__}")
