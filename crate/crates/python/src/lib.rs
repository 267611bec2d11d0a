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

//! Python bindings: formulas, circuits, reductions, the satisfiability
//! decision and the exact counting searches.

use std::path::PathBuf;
use std::time::Duration;

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use satred::boolfn::{parse_dimacs, parse_expr, BoolExpr};
use satred::circuit::{emit_circuit, parse_circuit, Circuit, GateDefinition, GateKind};
use satred::clifford::nearest_clifford_distance;
use satred::exact::{exact_simulate, is_clifford_exact};
use satred::numeric::{numeric_simulate, phase_min_distance, single_qubit_matrix, Complex64};
use satred::search::{exact_min_hcount, exact_min_tcount, exact_min_tofcount, MinCount, SearchBudget};
use satred::sk::{sk_approximate, BaseNet, DEFAULT_NET_LEN};
use satred::synth::{build_reduction, decide_sat as core_decide, GSpec, Variant, Verdict};
use satred::Error;

create_exception!(satred_py, ResourceCapError, PyRuntimeError);
create_exception!(satred_py, PrecisionError, PyRuntimeError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::ResourceCap(_) => ResourceCapError::new_err(e.to_string()),
        Error::BudgetExceeded { .. } | Error::NetTooCoarse { .. } => PrecisionError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// A Boolean formula over `x0, x1, …`.
#[pyclass(name = "Formula", frozen)]
struct PyFormula {
    inner: BoolExpr,
}

#[pymethods]
impl PyFormula {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyFormula { inner: parse_expr(text).map_err(to_py)? })
    }

    #[staticmethod]
    fn from_dimacs(text: &str) -> PyResult<Self> {
        Ok(PyFormula { inner: parse_dimacs(text).map_err(to_py)? })
    }

    #[getter]
    fn num_vars(&self) -> usize {
        self.inner.num_vars()
    }

    fn __call__(&self, bits: Vec<bool>) -> PyResult<bool> {
        if bits.len() != self.inner.num_vars() {
            return Err(PyValueError::new_err(format!("expected {} bits", self.inner.num_vars())));
        }
        Ok(self.inner.eval_bits(&bits))
    }

    /// Values at indices `0 .. 2^n`, bit `i` of the index being `x_i`.
    fn truth_table(&self) -> PyResult<Vec<bool>> {
        let tt = self.inner.truth_table().map_err(to_py)?;
        Ok((0..1u64 << self.inner.num_vars()).map(|i| tt.get(i)).collect())
    }

    fn is_satisfiable(&self) -> PyResult<bool> {
        Ok(self.inner.truth_table().map_err(to_py)?.is_satisfiable())
    }
}

/// A circuit in the line-oriented text format.
#[pyclass(name = "Circuit", frozen)]
struct PyCircuit {
    inner: Circuit,
}

#[pymethods]
impl PyCircuit {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyCircuit { inner: parse_circuit(text).map_err(to_py)? })
    }

    #[getter]
    fn num_wires(&self) -> usize {
        self.inner.num_wires()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __str__(&self) -> String {
        emit_circuit(&self.inner)
    }

    fn gates(&self) -> Vec<String> {
        self.inner.gates().iter().map(ToString::to_string).collect()
    }

    /// Number of gates whose mnemonic is in `kinds`.
    fn count(&self, kinds: Vec<String>) -> PyResult<usize> {
        let parsed = kinds
            .iter()
            .map(|k| k.parse::<GateKind>().map_err(|_| PyValueError::new_err(format!("unknown gate {k:?}"))))
            .collect::<PyResult<Vec<_>>>()?;
        Ok(self.inner.count(&parsed))
    }

    /// Dense unitary, row-major. Circuits using `g` need `gate`.
    #[pyo3(signature = (gate=None))]
    fn unitary(&self, gate: Option<&PyGate>) -> PyResult<Vec<Vec<Complex64>>> {
        let u = numeric_simulate(&self.inner, gate.map(|g| &g.inner)).map_err(to_py)?;
        let m = u.matrix();
        Ok((0..m.nrows()).map(|r| (0..m.ncols()).map(|c| m[(r, c)]).collect()).collect())
    }

    fn is_clifford(&self) -> PyResult<bool> {
        Ok(is_clifford_exact(&exact_simulate(&self.inner).map_err(to_py)?))
    }

    fn basis_permutation(&self) -> Option<Vec<usize>> {
        self.inner.basis_permutation()
    }
}

/// Definition of the non-Clifford gate `g`.
#[pyclass(name = "Gate", frozen)]
struct PyGate {
    inner: GateDefinition,
}

#[pymethods]
impl PyGate {
    #[staticmethod]
    fn sqrt_t() -> Self {
        PyGate { inner: GateDefinition::sqrt_t() }
    }

    #[staticmethod]
    fn phase(label: &str, theta: f64) -> PyResult<Self> {
        Ok(PyGate { inner: GateDefinition::phase_gate(label, theta).map_err(to_py)? })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyGate { inner: GateDefinition::from_json(text).map_err(to_py)? })
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label().to_string()
    }
}

#[pyclass(name = "Reduction", frozen)]
struct PyReduction {
    #[pyo3(get)]
    variant: String,
    #[pyo3(get)]
    circuit: Py<PyCircuit>,
    #[pyo3(get)]
    inputs: Vec<usize>,
    #[pyo3(get)]
    target: usize,
    sidecar: String,
}

#[pymethods]
impl PyReduction {
    fn sidecar_json(&self) -> String {
        self.sidecar.clone()
    }
}

fn variant(name: &str) -> PyResult<Variant> {
    name.parse().map_err(to_py)
}

fn budget(k_max: usize, node_cap: u64, time_cap: f64) -> SearchBudget {
    SearchBudget { k_max, node_cap, time_cap: Duration::from_secs_f64(time_cap) }
}

fn count_result(r: satred::Result<MinCount>) -> PyResult<Option<usize>> {
    Ok(r.map_err(to_py)?.exact())
}

fn with_g<T>(
    v: Variant,
    gate: Option<&PyGate>,
    epsilon: Option<f64>,
    net_len: usize,
    cache_dir: Option<PathBuf>,
    run: impl FnOnce(Option<&GSpec>) -> satred::Result<T>,
) -> PyResult<T> {
    if v != Variant::G {
        return run(None).map_err(to_py);
    }
    let (Some(gate), Some(epsilon)) = (gate, epsilon) else {
        return Err(PyValueError::new_err("the g variant needs gate and epsilon"));
    };
    let net = load_net(&gate.inner, net_len, cache_dir)?;
    run(Some(&GSpec { net: &net, epsilon })).map_err(to_py)
}

fn load_net(gdef: &GateDefinition, len: usize, cache_dir: Option<PathBuf>) -> PyResult<BaseNet> {
    match cache_dir {
        Some(dir) => BaseNet::load_or_build(gdef, len, &dir),
        None => satred::sk::base_net(gdef, len),
    }
    .map_err(to_py)
}

/// Builds the reduction circuit for `formula`.
#[pyfunction]
#[pyo3(signature = (formula, variant_name, gate=None, epsilon=None, net_len=DEFAULT_NET_LEN, cache_dir=None))]
fn reduce(
    py: Python<'_>,
    formula: &PyFormula,
    variant_name: &str,
    gate: Option<&PyGate>,
    epsilon: Option<f64>,
    net_len: usize,
    cache_dir: Option<PathBuf>,
) -> PyResult<PyReduction> {
    let v = variant(variant_name)?;
    let inst = with_g(v, gate, epsilon, net_len, cache_dir, |g| build_reduction(&formula.inner, v, g))?;
    Ok(PyReduction {
        variant: v.name().to_string(),
        inputs: inst.wires.inputs.clone(),
        target: inst.wires.target,
        sidecar: inst.sidecar_json().to_string(),
        circuit: Py::new(py, PyCircuit { inner: inst.circuit })?,
    })
}

/// Returns `(satisfiable, trace_json)`.
#[pyfunction]
#[pyo3(signature = (formula, variant_name, gate=None, epsilon=None, net_len=DEFAULT_NET_LEN, cache_dir=None))]
fn decide_sat(
    formula: &PyFormula,
    variant_name: &str,
    gate: Option<&PyGate>,
    epsilon: Option<f64>,
    net_len: usize,
    cache_dir: Option<PathBuf>,
) -> PyResult<(bool, String)> {
    let v = variant(variant_name)?;
    let d = with_g(v, gate, epsilon, net_len, cache_dir, |g| core_decide(&formula.inner, v, g))?;
    let trace = serde_json::to_string(&d.trace).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok((d.verdict == Verdict::Sat, trace))
}

/// Minimal T-count, or `None` if it exceeds `k_max`.
#[pyfunction]
#[pyo3(signature = (circuit, k_max=8, node_cap=100_000_000, time_cap=300.0))]
fn min_tcount(circuit: &PyCircuit, k_max: usize, node_cap: u64, time_cap: f64) -> PyResult<Option<usize>> {
    let u = exact_simulate(&circuit.inner).map_err(to_py)?;
    count_result(exact_min_tcount(&u, budget(k_max, node_cap, time_cap)))
}

/// Minimal H-count, or `None` if it exceeds `k_max`.
#[pyfunction]
#[pyo3(signature = (circuit, k_max=8, node_cap=100_000_000, time_cap=300.0))]
fn min_hcount(circuit: &PyCircuit, k_max: usize, node_cap: u64, time_cap: f64) -> PyResult<Option<usize>> {
    let u = exact_simulate(&circuit.inner).map_err(to_py)?;
    count_result(exact_min_hcount(&u, budget(k_max, node_cap, time_cap)))
}

/// Minimal Toffoli count of an `{x, cx, ccx}` circuit.
#[pyfunction]
#[pyo3(signature = (circuit, k_max=8, node_cap=100_000_000, time_cap=300.0))]
fn min_tofcount(circuit: &PyCircuit, k_max: usize, node_cap: u64, time_cap: f64) -> PyResult<Option<usize>> {
    let perm = circuit
        .inner
        .basis_permutation()
        .ok_or_else(|| PyValueError::new_err("circuit is not over x, cx, ccx"))?;
    count_result(exact_min_tofcount(&perm, budget(k_max, node_cap, time_cap)))
}

/// `(distance, alpha)` minimising `‖A − e^{iα}B‖` over `α`.
#[pyfunction]
#[pyo3(signature = (a, b, gate=None))]
fn distance(a: &PyCircuit, b: &PyCircuit, gate: Option<&PyGate>) -> PyResult<(f64, f64)> {
    let g = gate.map(|g| &g.inner);
    let ua = numeric_simulate(&a.inner, g).map_err(to_py)?;
    let ub = numeric_simulate(&b.inner, g).map_err(to_py)?;
    phase_min_distance(ua.matrix(), ub.matrix()).map_err(to_py)
}

/// `(distance, alpha, witness)` for the closest Clifford on one or two qubits.
#[pyfunction]
fn nearest_clifford(py: Python<'_>, circuit: &PyCircuit) -> PyResult<(f64, f64, Py<PyCircuit>)> {
    let u = exact_simulate(&circuit.inner).map_err(to_py)?;
    let near = nearest_clifford_distance(&u).map_err(to_py)?;
    let cat = satred::clifford::CliffordCatalog::shared(u.qubits()).map_err(to_py)?;
    Ok((near.distance, near.alpha, Py::new(py, PyCircuit { inner: cat.word(near.index) })?))
}

/// Solovay-Kitaev word over `{h, s, sdg, g, gdg}` for a named target.
/// Returns `(word, projective_error)`.
#[pyfunction]
#[pyo3(signature = (gate, target, epsilon, net_len=DEFAULT_NET_LEN, cache_dir=None))]
fn sk(gate: &PyGate, target: &str, epsilon: f64, net_len: usize, cache_dir: Option<PathBuf>) -> PyResult<(String, f64)> {
    let kind: GateKind = target
        .parse()
        .map_err(|_| PyValueError::new_err(format!("unknown target {target:?}")))?;
    let m = single_qubit_matrix(kind, None)
        .ok_or_else(|| PyValueError::new_err(format!("{target} is not a fixed single-qubit gate")))?;
    let net = load_net(&gate.inner, net_len, cache_dir)?;
    let a = sk_approximate(&m, &net, epsilon).map_err(to_py)?;
    Ok((a.word.to_string(), a.error))
}

#[pymodule]
fn satred_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFormula>()?;
    m.add_class::<PyCircuit>()?;
    m.add_class::<PyGate>()?;
    m.add_class::<PyReduction>()?;
    m.add_function(wrap_pyfunction!(reduce, m)?)?;
    m.add_function(wrap_pyfunction!(decide_sat, m)?)?;
    m.add_function(wrap_pyfunction!(min_tcount, m)?)?;
    m.add_function(wrap_pyfunction!(min_hcount, m)?)?;
    m.add_function(wrap_pyfunction!(min_tofcount, m)?)?;
    m.add_function(wrap_pyfunction!(distance, m)?)?;
    m.add_function(wrap_pyfunction!(nearest_clifford, m)?)?;
    m.add_function(wrap_pyfunction!(sk, m)?)?;
    m.add("ResourceCapError", m.py().get_type::<ResourceCapError>())?;
    m.add("PrecisionError", m.py().get_type::<PrecisionError>())?;
    Ok(())
}
