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

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use super::catalog::CliffordCatalog;
use super::tableau::{canonical_circuit, CliffordTableau};
use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::exact::{ExactUnitary, PauliOperator};
use crate::numeric::{numeric_simulate, phase_min_distance, CMatrix};

/// Distances closer than this are treated as ties, broken by the smaller
/// phase `α`.
pub const TIE_TOL: f64 = 1e-9;

/// Result of a nearest-Clifford scan.
#[derive(Clone, Debug)]
pub struct NearestClifford {
    pub distance: f64,
    pub alpha: f64,
    pub index: usize,
    pub witness: ExactUnitary,
}

/// `min_{V, α} ‖U − e^{iα}V‖_∞` over the Clifford group on `n ≤ 2` qubits.
pub fn nearest_clifford_distance(u: &ExactUnitary) -> Result<NearestClifford> {
    let cat = CliffordCatalog::shared(u.qubits())?;
    nearest_in_catalog(&u.to_numeric(), cat, |_| true)
}

/// Nearest member of `catalog` among those accepted by `filter`.
///
/// Candidates are visited in order of the Frobenius lower bound
/// `sqrt(2 − 2|tr V†U|/d)` and the scan stops once that bound exceeds the
/// best distance found.
pub fn nearest_in_catalog(
    u: &CMatrix,
    catalog: &CliffordCatalog,
    filter: impl Fn(&ExactUnitary) -> bool,
) -> Result<NearestClifford> {
    let d = 1usize << catalog.num_qubits();
    if u.shape() != (d, d) {
        return Err(Error::DimensionMismatch(u.nrows(), d));
    }
    let numeric = catalog.numeric();
    let mut order: Vec<(f64, usize)> = catalog
        .elements()
        .iter()
        .enumerate()
        .filter(|(_, e)| filter(e))
        .map(|(i, _)| {
            let tr: Complex64 = numeric[i].iter().zip(u.iter()).map(|(v, w)| v.conj() * w).sum();
            ((2.0 - 2.0 * tr.norm() / d as f64).max(0.0).sqrt(), i)
        })
        .collect();
    if order.is_empty() {
        return Err(Error::InvalidArgument("no catalog element passes the filter".into()));
    }
    order.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));

    let mut best: Option<(f64, f64, usize)> = None;
    for (lb, i) in order {
        if let Some((bd, _, _)) = best {
            if lb > bd + TIE_TOL {
                break;
            }
        }
        let (dist, alpha) = phase_min_distance(u, &numeric[i])?;
        let better = match best {
            None => true,
            Some((bd, ba, _)) => dist < bd - TIE_TOL || (dist <= bd + TIE_TOL && alpha < ba),
        };
        if better {
            best = Some((dist, alpha, i));
        }
    }
    let (distance, alpha, index) = best.expect("non-empty candidate list");
    Ok(NearestClifford {
        distance,
        alpha,
        index,
        witness: catalog.elements()[index].clone(),
    })
}

/// Clifford recovered from a unitary by rounding its Pauli conjugation
/// action, with its phase-minimised distance.
#[derive(Clone, Debug)]
pub struct RoundedClifford {
    pub tableau: CliffordTableau,
    pub circuit: Circuit,
    pub distance: f64,
    pub alpha: f64,
}

/// Rounds `U P U†` to the nearest Pauli for every generator `P`.
///
/// If `U` lies within `1/4` of some Clifford `V` (up to phase), each image
/// is within `1/2` of `V P V†`, the rounding is unambiguous and the
/// returned Clifford is `V`. Otherwise the result is either `None` or a
/// Clifford whose reported distance certifies how far `U` is from it.
pub fn round_to_clifford(u: &CMatrix) -> Result<Option<RoundedClifford>> {
    let d = u.nrows();
    if !d.is_power_of_two() || u.ncols() != d {
        return Err(Error::DimensionMismatch(u.nrows(), u.ncols()));
    }
    let n = d.trailing_zeros() as usize;
    let adj = u.adjoint();
    let image = |p: &PauliOperator| -> Option<PauliOperator> {
        let mut up = CMatrix::zeros(d, d);
        for c in 0..d {
            let (r, e) = p.column_action(c);
            let f = Complex64::from_polar(1.0, e as f64 * std::f64::consts::FRAC_PI_4);
            up.set_column(c, &(u.column(r) * f));
        }
        round_pauli(&(up * &adj), n)
    };
    let xs: Option<Vec<_>> = (0..n).map(|i| image(&PauliOperator::x_on(n, i))).collect();
    let zs: Option<Vec<_>> = (0..n).map(|i| image(&PauliOperator::z_on(n, i))).collect();
    let (Some(xs), Some(zs)) = (xs, zs) else {
        return Ok(None);
    };
    let Ok(tableau) = CliffordTableau::from_images(&xs, &zs) else {
        return Ok(None);
    };
    let circuit = canonical_circuit(&tableau);
    let v = numeric_simulate(&circuit, None)?;
    let (distance, alpha) = phase_min_distance(u, v.matrix())?;
    Ok(Some(RoundedClifford { tableau, circuit, distance, alpha }))
}

fn round_pauli(m: &CMatrix, n: usize) -> Option<PauliOperator> {
    let d = m.nrows();
    let unit = |p: u8| Complex64::new(0.0, 1.0).powu(u32::from(p));
    let x = (0..d).max_by(|&a, &b| m[(a, 0)].norm().total_cmp(&m[(b, 0)].norm()))?;
    let lead = m[(x, 0)];
    let phase = ((lead.arg() / FRAC_PI_2).round() as i64).rem_euclid(4) as u8;
    if (lead - unit(phase)).norm() > 0.5 {
        return None;
    }
    let mut z = vec![false; n];
    for (j, zj) in z.iter_mut().enumerate() {
        let ratio = m[((1 << j) ^ x, 1 << j)] / unit(phase);
        if (ratio + 1.0).norm() < 0.5 {
            *zj = true;
        } else if (ratio - 1.0).norm() >= 0.5 {
            return None;
        }
    }
    let q = PauliOperator {
        phase,
        x: (0..n).map(|i| (x >> i) & 1 == 1).collect(),
        z,
    };
    let overlap: Complex64 = (0..d)
        .map(|c| {
            let (r, e) = q.column_action(c);
            Complex64::from_polar(1.0, -(e as f64) * std::f64::consts::FRAC_PI_4) * m[(r, c)]
        })
        .sum::<Complex64>()
        / d as f64;
    ((overlap - 1.0).norm() < 0.5).then_some(q)
}
