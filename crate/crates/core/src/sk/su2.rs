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

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::Rng;

/// Unit quaternion `(w, x, y, z)` for `w·I − i(x·X + y·Y + z·Z)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Su2(pub [f64; 4]);

impl Su2 {
    pub fn identity() -> Self {
        Su2([1.0, 0.0, 0.0, 0.0])
    }

    /// Projects a `2×2` unitary onto `SU(2)` by dividing out `√det`.
    pub fn from_unitary(m: &[Complex64; 4]) -> Self {
        let det = m[0] * m[3] - m[1] * m[2];
        let s = det.sqrt();
        let (a, b) = (m[0] / s, m[1] / s);
        Su2([a.re, -b.im, -b.re, -a.im]).normalized()
    }

    pub fn to_matrix(&self) -> [Complex64; 4] {
        let [w, x, y, z] = self.0;
        let a = Complex64::new(w, -z);
        let b = Complex64::new(-y, -x);
        [a, b, -b.conj(), a.conj()]
    }

    fn normalized(self) -> Self {
        let n = self.0.iter().map(|v| v * v).sum::<f64>().sqrt();
        Su2(self.0.map(|v| v / n))
    }

    pub fn mul(&self, rhs: &Su2) -> Su2 {
        let (a, b) = (self.to_matrix(), rhs.to_matrix());
        let m = [
            a[0] * b[0] + a[1] * b[2],
            a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3],
        ];
        Su2::from_unitary(&m)
    }

    pub fn adjoint(&self) -> Su2 {
        let [w, x, y, z] = self.0;
        Su2([w, -x, -y, -z])
    }

    /// Rotation by `theta` about the unit vector `axis`.
    pub fn rotation(theta: f64, axis: [f64; 3]) -> Su2 {
        let (s, c) = (theta / 2.0).sin_cos();
        Su2([c, s * axis[0], s * axis[1], s * axis[2]])
    }

    /// `(θ, n)` with `θ ∈ [0, π]` for the sign-normalised representative.
    pub fn angle_axis(&self) -> (f64, [f64; 3]) {
        let q = if self.0[0] < 0.0 { self.0.map(|v| -v) } else { self.0 };
        let v = [q[1], q[2], q[3]];
        let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        let theta = 2.0 * norm.atan2(q[0]);
        if norm < 1e-300 {
            (0.0, [0.0, 0.0, 1.0])
        } else {
            (theta, v.map(|c| c / norm))
        }
    }

    /// Haar-random element (Shoemake's construction).
    pub fn random<R: Rng>(rng: &mut R) -> Su2 {
        let (u1, u2, u3): (f64, f64, f64) = (rng.gen(), rng.gen(), rng.gen());
        let (a, b) = ((1.0 - u1).sqrt(), u1.sqrt());
        Su2([a * (TAU * u2).sin(), a * (TAU * u2).cos(), b * (TAU * u3).sin(), b * (TAU * u3).cos()])
    }

    /// Sign-canonical copy: first component of magnitude above `1e-9` positive.
    pub fn canonical(&self) -> [f64; 4] {
        let lead = self.0.iter().find(|v| v.abs() > 1e-9).copied().unwrap_or(1.0);
        if lead < 0.0 {
            self.0.map(|v| -v)
        } else {
            self.0
        }
    }
}

/// `min(‖q − r‖², ‖q + r‖²)`.
pub fn projective_distance_sq(q: &[f64; 4], r: &[f64; 4]) -> f64 {
    let (mut minus, mut plus) = (0.0, 0.0);
    for i in 0..4 {
        minus += (q[i] - r[i]) * (q[i] - r[i]);
        plus += (q[i] + r[i]) * (q[i] + r[i]);
    }
    minus.min(plus)
}

/// Equals `min_α ‖A − e^{iα}B‖_∞` for the underlying unitaries.
pub fn projective_distance(a: &Su2, b: &Su2) -> f64 {
    projective_distance_sq(&a.0, &b.0).sqrt()
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// `(V, W)` with `V W V† W† = Δ` and both rotations of the same angle.
pub fn balanced_commutator(delta: &Su2) -> (Su2, Su2) {
    let (theta, n) = delta.angle_axis();
    let phi = 2.0 * ((1.0 - (theta / 2.0).cos()) / 2.0).powf(0.25).asin();
    let v0 = Su2::rotation(phi, [1.0, 0.0, 0.0]);
    let w0 = Su2::rotation(phi, [0.0, 1.0, 0.0]);
    let comm = v0.mul(&w0).mul(&v0.adjoint()).mul(&w0.adjoint());
    let (_, m) = comm.angle_axis();
    let dot = (m[0] * n[0] + m[1] * n[1] + m[2] * n[2]).clamp(-1.0, 1.0);
    let c = cross(m, n);
    let cn = (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt();
    let s = if cn < 1e-12 {
        if dot > 0.0 {
            Su2::identity()
        } else {
            let perp = if m[0].abs() < 0.9 { cross(m, [1.0, 0.0, 0.0]) } else { cross(m, [0.0, 1.0, 0.0]) };
            let pn = (perp[0] * perp[0] + perp[1] * perp[1] + perp[2] * perp[2]).sqrt();
            Su2::rotation(std::f64::consts::PI, perp.map(|v| v / pn))
        }
    } else {
        Su2::rotation(dot.acos(), c.map(|v| v / cn))
    };
    let conj = |u: &Su2| s.mul(u).mul(&s.adjoint());
    (conj(&v0), conj(&w0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn matrix_round_trip_and_distance() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let q = Su2::random(&mut rng);
            let back = Su2::from_unitary(&q.to_matrix());
            assert!(projective_distance(&q, &back) < 1e-12);
            let phased = q.to_matrix().map(|z| z * Complex64::from_polar(1.0, 0.7));
            assert!(projective_distance(&q, &Su2::from_unitary(&phased)) < 1e-12);
        }
    }

    #[test]
    fn commutator_reproduces_delta() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let r = Su2::random(&mut rng);
            let (theta, axis) = r.angle_axis();
            let delta = Su2::rotation(theta * 0.05, axis);
            let (v, w) = balanced_commutator(&delta);
            let c = v.mul(&w).mul(&v.adjoint()).mul(&w.adjoint());
            assert!(projective_distance(&c, &delta) < 1e-9);
        }
    }
}
