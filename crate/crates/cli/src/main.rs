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

//! `satred` command-line front end.
//!
//! Exit codes: 0 success, 1 property false (UNSAT, count exceeds `k_max`),
//! 2 input error, 3 resource cap or precision budget exhausted.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use satred::boolfn::{parse_dimacs, parse_expr, BoolExpr};
use satred::circuit::{emit_circuit, kinds, parse_circuit, Circuit, GateDefinition, GateKind};
use satred::clifford::{nearest_in_catalog, round_to_clifford, CliffordCatalog};
use satred::exact::{exact_simulate, is_clifford_exact, is_generalized_permutation, ExactUnitary};
use satred::exact::{MAX_CLIFFORD_TEST_QUBITS, MAX_EXACT_QUBITS};
use satred::numeric::{
    is_product_of_single_qubit, numeric_simulate, phase_min_distance, single_qubit_matrix, CMatrix,
    DEFAULT_SEPARABILITY_TOL,
};
use satred::search::{exact_min_hcount, exact_min_tcount, exact_min_tofcount, MinCount, SearchBudget};
use satred::sk::{sk_approximate, BaseNet, DEFAULT_NET_LEN, RADIUS_SEED};
use satred::synth::{build_reduction, decide_sat, GSpec, Variant, Verdict};

const SCHEMA: u64 = 1;
const NUMERIC_TOL: f64 = 1e-9;

#[derive(Parser)]
#[command(name = "satred", version, about = "Satisfiability reductions to circuit optimisation problems")]
struct Cli {
    /// Seed for every randomised step.
    #[arg(long, global = true, default_value_t = RADIUS_SEED)]
    seed: u64,
    /// Directory for Clifford catalog and base-net caches.
    #[arg(long, global = true, default_value = "./.cache")]
    cache_dir: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the reduction circuit C_f and its JSON sidecar.
    Reduce {
        #[command(flatten)]
        input: FormulaInput,
        #[command(flatten)]
        gate: GateOptions,
        /// Circuit output path; the sidecar goes to `<out>.json`. Without it
        /// the circuit is printed with the sidecar as a leading comment.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report exact and numeric properties of a circuit.
    Analyze {
        circuit: PathBuf,
        /// Definition of `g` for circuits that use it.
        #[arg(long)]
        gate: Option<String>,
    },
    /// Decide satisfiability through one zero-cost query on C_f.
    DecideSat {
        #[command(flatten)]
        input: FormulaInput,
        #[command(flatten)]
        gate: GateOptions,
    },
    /// Exact minimal gate count by exhaustive search.
    Mincount {
        measure: Measure,
        circuit: PathBuf,
        #[arg(long, default_value_t = SearchBudget::default().k_max)]
        k_max: usize,
        #[arg(long, default_value_t = SearchBudget::default().node_cap)]
        node_cap: u64,
        /// Wall-clock cap in seconds.
        #[arg(long, default_value_t = SearchBudget::default().time_cap.as_secs())]
        time_cap: u64,
    },
    /// Solovay-Kitaev approximation of a single-qubit gate over Clifford+G.
    Sk {
        #[arg(long)]
        gate: String,
        #[arg(long, default_value = "t")]
        target: String,
        #[arg(long)]
        epsilon: f64,
        #[arg(long, default_value_t = DEFAULT_NET_LEN)]
        net_len: usize,
    },
    /// Phase-minimised operator-norm distance between two circuits.
    Distance {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        gate: Option<String>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct FormulaSource {
    #[arg(long)]
    formula: Option<String>,
    #[arg(long)]
    dimacs: Option<PathBuf>,
}

#[derive(Args)]
struct FormulaInput {
    #[arg(long, value_parser = parse_variant)]
    variant: Variant,
    #[command(flatten)]
    source: FormulaSource,
}

#[derive(Args)]
struct GateOptions {
    /// Gate definition file, or `sqrtT`, or `rz:<angle>`.
    #[arg(long)]
    gate: Option<String>,
    #[arg(long)]
    epsilon: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_NET_LEN)]
    net_len: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Measure {
    T,
    H,
    Tof,
}

fn parse_variant(s: &str) -> std::result::Result<Variant, String> {
    s.parse().map_err(|e: satred::Error| e.to_string())
}

fn load_formula(src: &FormulaSource) -> Result<BoolExpr> {
    match (&src.formula, &src.dimacs) {
        (Some(text), None) => Ok(parse_expr(text)?),
        (None, Some(path)) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            Ok(parse_dimacs(&text)?)
        }
        _ => bail!("give exactly one of --formula and --dimacs"),
    }
}

fn load_gate(spec: &str) -> Result<GateDefinition> {
    if spec.eq_ignore_ascii_case("sqrtT") {
        return Ok(GateDefinition::sqrt_t());
    }
    if let Some(angle) = spec.strip_prefix("rz:") {
        let theta: f64 = angle.parse().with_context(|| format!("bad angle in {spec:?}"))?;
        return Ok(GateDefinition::phase_gate(spec, theta)?);
    }
    let path = Path::new(spec);
    GateDefinition::load(path).with_context(|| format!("loading gate definition {spec}"))
}

fn load_circuit(path: &Path) -> Result<Circuit> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(parse_circuit(&text)?)
}

fn load_net(cli: &Cli, gdef: &GateDefinition, len: usize) -> Result<BaseNet> {
    let mut net = BaseNet::load_or_build(gdef, len, &cli.cache_dir)?;
    if cli.seed != RADIUS_SEED {
        net.reseed_radius(cli.seed);
    }
    Ok(net)
}

fn print_json(v: &Value) {
    emit(&(serde_json::to_string_pretty(v).expect("JSON values serialise") + "\n"));
}

/// Writes to stdout, tolerating a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn with_g<T>(
    cli: &Cli,
    variant: Variant,
    opts: &GateOptions,
    run: impl FnOnce(Option<&GSpec>) -> Result<T>,
) -> Result<T> {
    if variant != Variant::G {
        return run(None);
    }
    let gate = opts.gate.as_deref().ok_or_else(|| anyhow!("the g variant needs --gate"))?;
    let epsilon = opts.epsilon.ok_or_else(|| anyhow!("the g variant needs --epsilon"))?;
    let gdef = load_gate(gate)?;
    let net = load_net(cli, &gdef, opts.net_len)?;
    run(Some(&GSpec { net: &net, epsilon }))
}

fn reduce(cli: &Cli, input: &FormulaInput, gate: &GateOptions, out: Option<&Path>) -> Result<u8> {
    let f = load_formula(&input.source)?;
    let inst = with_g(cli, input.variant, gate, |g| Ok(build_reduction(&f, input.variant, g)?))?;
    let sidecar = inst.sidecar_json();
    let text = emit_circuit(&inst.circuit);
    match out {
        Some(path) => {
            fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
            let side = PathBuf::from(format!("{}.json", path.display()));
            fs::write(&side, serde_json::to_string_pretty(&sidecar)? + "\n")?;
            print_json(&sidecar);
        }
        None => {
            emit(&format!("# {}\n{text}", serde_json::to_string(&sidecar)?));
        }
    }
    Ok(0)
}

fn numeric_generalized_permutation(m: &CMatrix) -> bool {
    let d = m.nrows();
    let mut used = vec![false; d];
    for r in 0..d {
        let hits: Vec<usize> = (0..d).filter(|&c| m[(r, c)].norm() > NUMERIC_TOL).collect();
        match hits.as_slice() {
            [c] if !used[*c] && (m[(r, *c)].norm() - 1.0).abs() < NUMERIC_TOL => used[*c] = true,
            _ => return false,
        }
    }
    true
}

fn analyze(cli: &Cli, path: &Path, gate: Option<&str>) -> Result<u8> {
    let c = load_circuit(path)?;
    let n = c.num_wires();
    let uses_g = c.contains_kind(GateKind::G) || c.contains_kind(GateKind::Gdg);
    let gdef = gate.map(load_gate).transpose()?;
    if uses_g && gdef.is_none() {
        bail!("circuit uses g; pass --gate");
    }
    let counts = json!({
        "t": c.count(kinds::T_COUNT),
        "h": c.count(&[GateKind::H]),
        "cx": c.count(&[GateKind::CX]),
        "cz": c.count(&[GateKind::CZ]),
        "ccx": c.count(&[GateKind::CCX]),
        "g": c.count(kinds::G_COUNT),
    });
    let mut report = json!({
        "schema": SCHEMA,
        "qubits": n,
        "gates": c.len(),
        "counts": counts,
        "t_depth": c.depth(kinds::T_COUNT),
    });
    let numeric = numeric_simulate(&c, gdef.as_ref())?;
    let m = numeric.matrix();
    let exact: Option<ExactUnitary> = if !uses_g && n <= MAX_EXACT_QUBITS { Some(exact_simulate(&c)?) } else { None };

    let (is_clifford, is_identity, phase_exponent, is_gp) = match &exact {
        Some(u) => {
            let clifford = if n <= MAX_CLIFFORD_TEST_QUBITS {
                Value::from(is_clifford_exact(u))
            } else if c.gates().iter().all(|g| g.kind.is_clifford()) {
                Value::from(true)
            } else {
                Value::Null
            };
            let phase = u.equal_up_to_phase(&ExactUnitary::identity(n));
            (clifford, phase.is_some(), phase.map(Value::from).unwrap_or(Value::Null), is_generalized_permutation(u))
        }
        None => {
            let rounded = round_to_clifford(m)?;
            let clifford = rounded.is_some_and(|r| r.distance < NUMERIC_TOL);
            let id = CMatrix::identity(m.nrows(), m.ncols());
            let (d_id, _) = phase_min_distance(m, &id)?;
            (Value::from(clifford), d_id < NUMERIC_TOL, Value::Null, numeric_generalized_permutation(m))
        }
    };
    report["is_clifford"] = is_clifford;
    report["is_identity"] = Value::from(is_identity);
    report["phase_exponent"] = phase_exponent;
    report["is_generalized_permutation"] = Value::from(is_gp);
    report["is_product"] = Value::from(is_product_of_single_qubit(m, DEFAULT_SEPARABILITY_TOL).is_some());
    if n <= 2 {
        let cat = CliffordCatalog::shared_cached(n, &cli.cache_dir)?;
        let near = nearest_in_catalog(m, cat, |_| true)?;
        report["nearest_clifford_distance"] = Value::from(near.distance);
        report["nearest_clifford_alpha"] = Value::from(near.alpha);
        report["nearest_clifford_witness"] = Value::from(emit_circuit(&cat.word(near.index)));
    } else {
        report["nearest_clifford_distance"] = Value::Null;
    }
    print_json(&report);
    Ok(0)
}

fn decide(cli: &Cli, input: &FormulaInput, gate: &GateOptions) -> Result<u8> {
    let f = load_formula(&input.source)?;
    let d = with_g(cli, input.variant, gate, |g| Ok(decide_sat(&f, input.variant, g)?))?;
    let word = match d.verdict {
        Verdict::Sat => "SAT",
        Verdict::Unsat => "UNSAT",
    };
    emit(&format!("{word}\n"));
    print_json(&json!({
        "schema": SCHEMA,
        "variant": input.variant,
        "verdict": d.verdict,
        "trace": d.trace,
    }));
    Ok(if d.verdict == Verdict::Sat { 0 } else { 1 })
}

fn mincount(measure: Measure, path: &Path, budget: SearchBudget) -> Result<u8> {
    let c = load_circuit(path)?;
    let (name, result) = match measure {
        Measure::T => ("t", exact_min_tcount(&exact_simulate(&c)?, budget)?),
        Measure::H => ("h", exact_min_hcount(&exact_simulate(&c)?, budget)?),
        Measure::Tof => {
            let perm = c
                .basis_permutation()
                .ok_or_else(|| anyhow!("Toffoli count needs a circuit over x, cx, ccx"))?;
            ("tof", exact_min_tofcount(&perm, budget)?)
        }
    };
    print_json(&json!({
        "schema": SCHEMA,
        "measure": name,
        "k_max": budget.k_max,
        "count": result,
    }));
    Ok(match result {
        MinCount::Exact(_) => 0,
        MinCount::Exceeds(_) => 1,
    })
}

fn target_matrix(name: &str) -> Result<[satred::numeric::Complex64; 4]> {
    let kind = match name.to_ascii_lowercase().as_str() {
        "t" => GateKind::T,
        "tdg" => GateKind::Tdg,
        "s" => GateKind::S,
        "sdg" => GateKind::Sdg,
        "h" => GateKind::H,
        "x" => GateKind::X,
        other => bail!("unknown target {other:?} (t, tdg, s, sdg, h, x)"),
    };
    Ok(single_qubit_matrix(kind, None).expect("single-qubit kinds have matrices"))
}

fn sk(cli: &Cli, gate: &str, target: &str, epsilon: f64, net_len: usize) -> Result<u8> {
    let gdef = load_gate(gate)?;
    let net = load_net(cli, &gdef, net_len)?;
    let tm = target_matrix(target)?;
    let a = sk_approximate(&tm, &net, epsilon)?;
    let as_c = |m: &[satred::numeric::Complex64; 4]| CMatrix::from_row_slice(2, 2, m);
    let (measured, alpha) = phase_min_distance(&as_c(&tm), &as_c(a.word.matrix()))?;
    print_json(&json!({
        "schema": SCHEMA,
        "gate": gdef.label(),
        "target": target,
        "epsilon": epsilon,
        "word": a.word.to_string(),
        "length": a.word.len(),
        "g_count": a.word.g_count(),
        "depth": a.depth,
        "projective_error": a.error,
        "distance": measured,
        "alpha": alpha,
        "net_size": net.len(),
        "net_radius": net.covering_radius(),
    }));
    Ok(0)
}

fn distance(a: &Path, b: &Path, gate: Option<&str>) -> Result<u8> {
    let gdef = gate.map(load_gate).transpose()?;
    let ca = load_circuit(a)?;
    let cb = load_circuit(b)?;
    let ua = numeric_simulate(&ca, gdef.as_ref())?;
    let ub = numeric_simulate(&cb, gdef.as_ref())?;
    let (d, alpha) = phase_min_distance(ua.matrix(), ub.matrix())?;
    print_json(&json!({ "schema": SCHEMA, "distance": d, "alpha": alpha }));
    Ok(0)
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Reduce { input, gate, out } => reduce(cli, input, gate, out.as_deref()),
        Command::Analyze { circuit, gate } => analyze(cli, circuit, gate.as_deref()),
        Command::DecideSat { input, gate } => decide(cli, input, gate),
        Command::Mincount { measure, circuit, k_max, node_cap, time_cap } => {
            let budget = SearchBudget { k_max: *k_max, node_cap: *node_cap, time_cap: Duration::from_secs(*time_cap) };
            mincount(*measure, circuit, budget)
        }
        Command::Sk { gate, target, epsilon, net_len } => sk(cli, gate, target, *epsilon, *net_len),
        Command::Distance { a, b, gate } => distance(a, b, gate.as_deref()),
    }
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<satred::Error>() {
        Some(
            satred::Error::ResourceCap(_)
            | satred::Error::BudgetExceeded { .. }
            | satred::Error::NetTooCoarse { .. },
        ) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
