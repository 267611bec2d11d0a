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

use std::f64::consts::FRAC_1_SQRT_2;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Unitarity tolerance for user supplied gate matrices.
const UNITARY_TOL: f64 = 1e-12;

/// A concrete single-qubit gate bound to the `g`/`gdg` placeholders.
#[derive(Clone, Debug, PartialEq)]
pub struct GateDefinition {
    label: String,
    matrix: [Complex64; 4],
    non_clifford: bool,
}

#[derive(Serialize, Deserialize)]
struct GateFile {
    label: String,
    /// Row-major `[re, im]` pairs.
    matrix: [[f64; 2]; 4],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    is_non_clifford: Option<bool>,
}

impl GateDefinition {
    /// Validates unitarity and classifies the gate against the 24
    /// single-qubit Cliffords.
    pub fn new(label: impl Into<String>, matrix: [Complex64; 4]) -> Result<Self> {
        let [a, b, c, d] = matrix;
        let off = a.conj() * b + c.conj() * d;
        let deviation = [
            (a.norm_sqr() + c.norm_sqr() - 1.0).abs(),
            (b.norm_sqr() + d.norm_sqr() - 1.0).abs(),
            off.norm(),
        ];
        if deviation.iter().any(|&x| x > UNITARY_TOL || x.is_nan()) {
            return Err(Error::GateDefinition(format!(
                "matrix is not unitary within {UNITARY_TOL:e}"
            )));
        }
        let non_clifford = !single_qubit_clifford_matrices()
            .iter()
            .any(|cl| projective_distance(cl, &matrix) < 1e-7);
        Ok(GateDefinition {
            label: label.into(),
            matrix,
            non_clifford,
        })
    }

    /// `diag(1, e^{iπ/8})`, whose square is T.
    pub fn sqrt_t() -> Self {
        let phase = Complex64::from_polar(1.0, std::f64::consts::PI / 8.0);
        let zero = Complex64::new(0.0, 0.0);
        GateDefinition::new("sqrtT", [Complex64::new(1.0, 0.0), zero, zero, phase]).unwrap()
    }

    /// `diag(1, e^{iθ})`.
    pub fn phase_gate(label: &str, theta: f64) -> Result<Self> {
        let zero = Complex64::new(0.0, 0.0);
        GateDefinition::new(
            label,
            [Complex64::new(1.0, 0.0), zero, zero, Complex64::from_polar(1.0, theta)],
        )
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn matrix(&self) -> &[Complex64; 4] {
        &self.matrix
    }

    pub fn adjoint(&self) -> [Complex64; 4] {
        let [a, b, c, d] = self.matrix;
        [a.conj(), c.conj(), b.conj(), d.conj()]
    }

    pub fn is_non_clifford(&self) -> bool {
        self.non_clifford
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: GateFile = serde_json::from_str(text)?;
        let matrix = file.matrix.map(|[re, im]| Complex64::new(re, im));
        let def = GateDefinition::new(file.label, matrix)?;
        if let Some(flag) = file.is_non_clifford {
            if flag != def.non_clifford {
                return Err(Error::GateDefinition(format!(
                    "is_non_clifford = {flag} contradicts the Clifford membership test"
                )));
            }
        }
        Ok(def)
    }

    pub fn to_json(&self) -> String {
        let file = GateFile {
            label: self.label.clone(),
            matrix: self.matrix.map(|z| [z.re, z.im]),
            is_non_clifford: Some(self.non_clifford),
        };
        serde_json::to_string_pretty(&file).unwrap()
    }

    pub fn load(path: &Path) -> Result<Self> {
        GateDefinition::from_json(&std::fs::read_to_string(path)?)
    }

    /// Stable 64-bit FNV-1a fingerprint of the matrix bits, used to key caches.
    pub fn fingerprint(&self) -> u64 {
        let mut h: u64 = 0xcbf29ce484222325;
        for z in &self.matrix {
            for x in [z.re, z.im] {
                for byte in x.to_bits().to_le_bytes() {
                    h ^= u64::from(byte);
                    h = h.wrapping_mul(0x100000001b3);
                }
            }
        }
        h
    }
}

fn mul2(a: &[Complex64; 4], b: &[Complex64; 4]) -> [Complex64; 4] {
    [
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    ]
}

/// `min_α ‖A − e^{iα}B‖` for 2×2 unitaries, via `sqrt(2 − |tr(A†B)|)`.
fn projective_distance(a: &[Complex64; 4], b: &[Complex64; 4]) -> f64 {
    let tr = a[0].conj() * b[0] + a[2].conj() * b[2] + a[1].conj() * b[1] + a[3].conj() * b[3];
    (2.0 - tr.norm()).max(0.0).sqrt()
}

/// The 24 single-qubit Cliffords modulo phase, by closure of `{H, S}`.
pub fn single_qubit_clifford_matrices() -> Vec<[Complex64; 4]> {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let r = Complex64::new(FRAC_1_SQRT_2, 0.0);
    let h = [r, r, r, -r];
    let s = [one, zero, zero, Complex64::new(0.0, 1.0)];
    let mut found = vec![[one, zero, zero, one]];
    let mut frontier = found.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for m in &frontier {
            for g in [&h, &s] {
                let p = mul2(g, m);
                if !found.iter().any(|q| projective_distance(q, &p) < 1e-7) {
                    found.push(p);
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty_four_cliffords() {
        assert_eq!(single_qubit_clifford_matrices().len(), 24);
    }

    #[test]
    fn classification() {
        assert!(GateDefinition::sqrt_t().is_non_clifford());
        assert!(GateDefinition::phase_gate("t", std::f64::consts::FRAC_PI_4)
            .unwrap()
            .is_non_clifford());
        assert!(!GateDefinition::phase_gate("s", std::f64::consts::FRAC_PI_2)
            .unwrap()
            .is_non_clifford());
        assert!(!GateDefinition::phase_gate("z", std::f64::consts::PI)
            .unwrap()
            .is_non_clifford());
    }

    #[test]
    fn rejects_non_unitary() {
        let z = Complex64::new(0.0, 0.0);
        let m = [Complex64::new(1.0, 0.0), z, z, Complex64::new(0.5, 0.0)];
        assert!(GateDefinition::new("bad", m).is_err());
    }

    #[test]
    fn json_round_trip_and_flag_check() {
        let g = GateDefinition::sqrt_t();
        let back = GateDefinition::from_json(&g.to_json()).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.fingerprint(), g.fingerprint());
        let lying = r#"{"label":"s","matrix":[[1,0],[0,0],[0,0],[0,1]],"is_non_clifford":true}"#;
        assert!(GateDefinition::from_json(lying).is_err());
        let plain = r#"{"label":"s","matrix":[[1,0],[0,0],[0,0],[0,1]]}"#;
        assert!(!GateDefinition::from_json(plain).unwrap().is_non_clifford());
    }
}
