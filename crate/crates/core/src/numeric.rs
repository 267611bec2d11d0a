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

//! Floating-point analysis: operator norms, phase-minimised distances and
//! tensor-product (separability) testing.

use std::f64::consts::{FRAC_1_SQRT_2, TAU};

use nalgebra::{DMatrix, SymmetricEigen};
pub use num_complex::Complex64;

use crate::circuit::{Circuit, GateDefinition, GateKind};
use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;

/// Unitarity tolerance of [`NumericUnitary`].
pub const UNITARY_TOL: f64 = 1e-9;
/// Default threshold on the second operator-Schmidt coefficient.
pub const DEFAULT_SEPARABILITY_TOL: f64 = 1e-7;

const GRID_POINTS: usize = 512;
const ALPHA_TOL: f64 = 1e-9;
const EIGEN_EPS: f64 = 1e-15;
const EIGEN_MAX_ITER: usize = 10_000;

/// A complex unitary matrix, checked on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericUnitary(CMatrix);

impl NumericUnitary {
    pub fn new(m: CMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch(m.nrows(), m.ncols()));
        }
        let dev = &m.adjoint() * &m - CMatrix::identity(m.nrows(), m.ncols());
        let worst = dev.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if worst > UNITARY_TOL || worst.is_nan() {
            return Err(Error::InvalidArgument(format!(
                "matrix deviates from unitarity by {worst:e}"
            )));
        }
        Ok(NumericUnitary(m))
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> CMatrix {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn qubits(&self) -> usize {
        self.dim().trailing_zeros() as usize
    }
}

impl From<&crate::exact::ExactUnitary> for NumericUnitary {
    fn from(u: &crate::exact::ExactUnitary) -> Self {
        NumericUnitary(u.to_numeric())
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// 2×2 matrix of a single-qubit gate kind, row-major.
pub fn single_qubit_matrix(kind: GateKind, gdef: Option<&GateDefinition>) -> Option<[Complex64; 4]> {
    let one = c(1.0, 0.0);
    let zero = c(0.0, 0.0);
    let r = FRAC_1_SQRT_2;
    let phase = |theta: f64| Complex64::from_polar(1.0, theta);
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
    Some(match kind {
        GateKind::X => [zero, one, one, zero],
        GateKind::H => [c(r, 0.0), c(r, 0.0), c(r, 0.0), c(-r, 0.0)],
        GateKind::S => [one, zero, zero, phase(FRAC_PI_2)],
        GateKind::Sdg => [one, zero, zero, phase(-FRAC_PI_2)],
        GateKind::T => [one, zero, zero, phase(FRAC_PI_4)],
        GateKind::Tdg => [one, zero, zero, phase(-FRAC_PI_4)],
        GateKind::G => *gdef?.matrix(),
        GateKind::Gdg => gdef?.adjoint(),
        GateKind::CX | GateKind::CZ | GateKind::CCX => return None,
    })
}

fn apply_single(m: &mut CMatrix, q: usize, g: &[Complex64; 4]) {
    let dim = m.nrows();
    let bit = 1 << q;
    for r0 in (0..dim).filter(|r| r & bit == 0) {
        let r1 = r0 | bit;
        for col in 0..dim {
            let a = m[(r0, col)];
            let b = m[(r1, col)];
            m[(r0, col)] = g[0] * a + g[1] * b;
            m[(r1, col)] = g[2] * a + g[3] * b;
        }
    }
}

/// Numeric unitary of a circuit; `g`/`gdg` gates need a definition.
pub fn numeric_simulate(circuit: &Circuit, gdef: Option<&GateDefinition>) -> Result<NumericUnitary> {
    let n = circuit.num_wires();
    if n > 12 {
        return Err(Error::TooManyQubits { qubits: n, max: 12 });
    }
    let dim = 1usize << n;
    let mut m = CMatrix::identity(dim, dim);
    for (index, g) in circuit.gates().iter().enumerate() {
        let w = g.wires();
        match g.kind {
            GateKind::CX | GateKind::CCX => {
                let controls = w[..w.len() - 1].iter().fold(0, |acc, &q| acc | 1 << q);
                let t = 1 << w[w.len() - 1];
                for r in (0..dim).filter(|r| r & controls == controls && r & t == 0) {
                    m.swap_rows(r, r | t);
                }
            }
            GateKind::CZ => {
                let both = (1 << w[0]) | (1 << w[1]);
                for r in (0..dim).filter(|r| r & both == both) {
                    m.row_mut(r).neg_mut();
                }
            }
            kind => {
                let g2 = single_qubit_matrix(kind, gdef).ok_or(Error::UnresolvedGate {
                    index,
                    kind: kind.mnemonic(),
                })?;
                apply_single(&mut m, w[0], &g2);
            }
        }
    }
    Ok(NumericUnitary(m))
}

fn max_eigenvalue(h: CMatrix) -> Result<f64> {
    if h.nrows() == 0 {
        return Ok(0.0);
    }
    let eig = SymmetricEigen::try_new(h, EIGEN_EPS, EIGEN_MAX_ITER)
        .ok_or_else(|| Error::NoConvergence("Hermitian eigenvalue iteration".into()))?;
    Ok(eig.eigenvalues.iter().copied().fold(f64::NEG_INFINITY, f64::max))
}

/// Largest singular value, from the top eigenvalue of `M†M`.
pub fn operator_norm(m: &CMatrix) -> Result<f64> {
    let gram = m.adjoint() * m;
    Ok(max_eigenvalue(gram)?.max(0.0).sqrt())
}

/// `min_α ‖U − e^{iα}V‖_∞` and its minimiser `α ∈ [0, 2π)`.
///
/// A 512-point grid brackets the minimum, then golden-section search
/// refines `α` to 1e-9.
pub fn phase_min_distance(u: &CMatrix, v: &CMatrix) -> Result<(f64, f64)> {
    if u.shape() != v.shape() {
        return Err(Error::DimensionMismatch(u.nrows(), v.nrows()));
    }
    // (U − e^{iα}V)†(U − e^{iα}V) = A − e^{iα}B − e^{−iα}B†
    let a = u.adjoint() * u + v.adjoint() * v;
    let b = u.adjoint() * v;
    let bh = b.adjoint();
    let eval = |alpha: f64| -> Result<f64> {
        let p = Complex64::from_polar(1.0, alpha);
        let gram = &a - &b * p - &bh * p.conj();
        Ok(max_eigenvalue(gram)?.max(0.0).sqrt())
    };

    let step = TAU / GRID_POINTS as f64;
    let mut best = (f64::INFINITY, 0usize);
    for i in 0..GRID_POINTS {
        let d = eval(i as f64 * step)?;
        if d < best.0 {
            best = (d, i);
        }
    }

    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let (mut lo, mut hi) = ((best.1 as f64 - 1.0) * step, (best.1 as f64 + 1.0) * step);
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let (mut f1, mut f2) = (eval(x1)?, eval(x2)?);
    while hi - lo > ALPHA_TOL {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = eval(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = eval(x2)?;
        }
    }
    let alpha = 0.5 * (lo + hi);
    let d = eval(alpha)?;
    let (dist, alpha) = if d <= best.0 {
        (d, alpha)
    } else {
        (best.0, best.1 as f64 * step)
    };
    let alpha = alpha.rem_euclid(TAU);
    Ok((dist, if TAU - alpha < ALPHA_TOL { 0.0 } else { alpha }))
}

/// Kronecker product with `low` on the least significant wires.
fn kron_low(high: &CMatrix, low: &CMatrix) -> CMatrix {
    high.kronecker(low)
}

/// Splits `U` into single-qubit factors, `factors[i]` acting on wire `i`.
///
/// Wires are peeled one at a time: `U` is reshaped into a
/// `4 × 4^{n−1}` operator-coefficient matrix and must have a second
/// singular value at most `tol`. Returns `None` when some step fails or the
/// reconstructed product differs from `U` by more than `10·tol`.
pub fn is_product_of_single_qubit(u: &CMatrix, tol: f64) -> Option<Vec<CMatrix>> {
    let mut rest = u.clone();
    let mut factors = Vec::new();
    while rest.nrows() > 2 {
        let (a, b, sigma2) = peel_low_wire(&rest)?;
        if sigma2 > tol {
            return None;
        }
        factors.push(a);
        rest = b;
    }
    factors.push(rest);
    let product = factors
        .iter()
        .rev()
        .skip(1)
        .fold(factors.last().unwrap().clone(), |acc, f| kron_low(&acc, f));
    let worst = (&product - u).iter().map(|z| z.norm()).fold(0.0, f64::max);
    (worst <= 10.0 * tol).then_some(factors)
}

/// Second singular value of the wire-0 operator-Schmidt decomposition.
pub fn operator_schmidt_second(u: &CMatrix) -> Option<f64> {
    peel_low_wire(u).map(|(_, _, s)| s)
}

fn peel_low_wire(u: &CMatrix) -> Option<(CMatrix, CMatrix, f64)> {
    let dim = u.nrows();
    let half = dim / 2;
    // R[(ar, ac)][(br, bc)] = U[(br·2 + ar), (bc·2 + ac)]
    let r = CMatrix::from_fn(4, half * half, |i, j| {
        let (ar, ac) = (i >> 1, i & 1);
        let (br, bc) = (j / half, j % half);
        u[(br * 2 + ar, bc * 2 + ac)]
    });
    let gram = &r * r.adjoint();
    let eig = SymmetricEigen::try_new(gram, EIGEN_EPS, EIGEN_MAX_ITER)?;
    let mut order: Vec<usize> = (0..4).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[j].total_cmp(&eig.eigenvalues[i]));
    let sigma2 = eig.eigenvalues[order[1]].max(0.0).sqrt();
    let top = eig.eigenvectors.column(order[0]).into_owned();
    let scale = std::f64::consts::SQRT_2;
    let a = CMatrix::from_fn(2, 2, |i, j| top[i * 2 + j] * scale);
    let coeffs = top.adjoint() * &r;
    let b = CMatrix::from_fn(half, half, |i, j| coeffs[i * half + j] / scale);
    Some((a, b, sigma2))
}
