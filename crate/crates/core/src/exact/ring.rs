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

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

/// An element `(a + bω + cω² + dω³) / √2^k` of `ℤ[ω, 1/√2]`, `ω = e^{iπ/4}`.
///
/// Values are kept in canonical form: either `k = 0` or the numerator is not
/// divisible by `√2` in `ℤ[ω]`. Canonical forms are unique, so equality is
/// coefficient-wise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    coeffs: [BigInt; 4],
    k: u32,
}

fn is_even(x: &BigInt) -> bool {
    x.is_even()
}

impl RingElement {
    pub fn new(coeffs: [i64; 4], k: u32) -> Self {
        Self::from_parts(coeffs.map(BigInt::from), k)
    }

    pub fn from_parts(coeffs: [BigInt; 4], k: u32) -> Self {
        let mut r = RingElement { coeffs, k };
        r.normalize();
        r
    }

    pub fn zero() -> Self {
        RingElement {
            coeffs: Default::default(),
            k: 0,
        }
    }

    pub fn one() -> Self {
        Self::omega_pow(0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::new([n, 0, 0, 0], 0)
    }

    /// `ω^j` for any integer `j`.
    pub fn omega_pow(j: i64) -> Self {
        let j = j.rem_euclid(8) as usize;
        let mut coeffs: [BigInt; 4] = Default::default();
        coeffs[j % 4] = if j < 4 { BigInt::one() } else { -BigInt::one() };
        RingElement { coeffs, k: 0 }
    }

    pub fn i() -> Self {
        Self::omega_pow(2)
    }

    pub fn sqrt2() -> Self {
        Self::new([0, 1, 0, -1], 0)
    }

    pub fn inv_sqrt2() -> Self {
        Self::new([1, 0, 0, 0], 1)
    }

    pub fn coeffs(&self) -> &[BigInt; 4] {
        &self.coeffs
    }

    /// Denominator exponent `k` of the canonical form.
    pub fn sde(&self) -> u32 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn normalize(&mut self) {
        if self.is_zero() {
            self.k = 0;
            return;
        }
        while self.k > 0 {
            let [a, b, c, d] = &self.coeffs;
            let ac = a + c;
            let bd = b + d;
            if !is_even(&ac) || !is_even(&bd) {
                break;
            }
            // x / √2 = x·(ω − ω³) / 2
            let two = BigInt::from(2);
            self.coeffs = [(b - d) / &two, ac / &two, bd / &two, (c - a) / &two];
            self.k -= 1;
        }
    }

    /// Multiplies the numerator by `√2` without touching `k`.
    fn numerator_times_sqrt2(coeffs: &[BigInt; 4]) -> [BigInt; 4] {
        let [a, b, c, d] = coeffs;
        [b - d, a + c, b + d, c - a]
    }

    /// Numerator rescaled to denominator exponent `k >= self.k`.
    fn numerator_at(&self, k: u32) -> [BigInt; 4] {
        let diff = k - self.k;
        let mut coeffs = self.coeffs.clone();
        if diff >= 2 {
            let shift = (diff / 2) as usize;
            coeffs = coeffs.map(|x| x << shift);
        }
        if diff % 2 == 1 {
            coeffs = Self::numerator_times_sqrt2(&coeffs);
        }
        coeffs
    }

    pub fn conj(&self) -> Self {
        let [a, b, c, d] = &self.coeffs;
        RingElement {
            coeffs: [a.clone(), -d, -c, -b],
            k: self.k,
        }
    }

    /// `ω^j · self`, a rotation of the coefficient vector.
    pub fn mul_omega(&self, j: i64) -> Self {
        let j = j.rem_euclid(8) as usize;
        let mut out: [BigInt; 4] = Default::default();
        for (i, x) in self.coeffs.iter().enumerate() {
            let t = i + j;
            out[t % 4] = if (t / 4) % 2 == 0 { x.clone() } else { -x };
        }
        RingElement {
            coeffs: out,
            k: self.k,
        }
    }

    /// Returns `j` when `self == ω^j`.
    pub fn as_omega_power(&self) -> Option<u8> {
        if self.k != 0 {
            return None;
        }
        let mut nonzero = self.coeffs.iter().enumerate().filter(|(_, x)| !x.is_zero());
        let (i, x) = nonzero.next()?;
        if nonzero.next().is_some() {
            return None;
        }
        if x.is_one() {
            Some(i as u8)
        } else if (-x).is_one() {
            Some(i as u8 + 4)
        } else {
            None
        }
    }

    /// True for positive elements of the real subring `ℤ[√2, 1/√2]`.
    pub fn is_positive_real(&self) -> bool {
        let [a, b, c, d] = &self.coeffs;
        if !c.is_zero() || *b != -d {
            return false;
        }
        // value ∝ a + b√2
        match (a.sign(), b.sign()) {
            (num_bigint::Sign::Minus, num_bigint::Sign::Minus) => false,
            (_, num_bigint::Sign::NoSign) => a.is_positive(),
            (num_bigint::Sign::NoSign, _) => b.is_positive(),
            (num_bigint::Sign::Plus, num_bigint::Sign::Plus) => true,
            _ => {
                let a2 = a * a;
                let b2 = b * b * 2;
                if a.is_positive() {
                    a2 > b2
                } else {
                    b2 > a2
                }
            }
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let [a, b, c, d] = self.coeffs.each_ref().map(|x| x.to_f64().unwrap_or(f64::NAN));
        let re = a + (b - d) * s;
        let im = c + (b + d) * s;
        let scale = 2f64.powf(-(self.k as f64) / 2.0);
        Complex64::new(re * scale, im * scale)
    }

    /// `[a, b, c, d, k]`, integers rendered as strings when they exceed i64.
    pub fn to_json(&self) -> Value {
        let num = |x: &BigInt| match x.to_i64() {
            Some(v) => Value::from(v),
            None => Value::from(x.to_string()),
        };
        let mut out: Vec<Value> = self.coeffs.iter().map(num).collect();
        out.push(Value::from(self.k));
        Value::Array(out)
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        let arr = v.as_array()?;
        if arr.len() != 5 {
            return None;
        }
        let big = |v: &Value| -> Option<BigInt> {
            match v {
                Value::Number(n) => n.as_i64().map(BigInt::from),
                Value::String(s) => s.parse().ok(),
                _ => None,
            }
        };
        let coeffs = [big(&arr[0])?, big(&arr[1])?, big(&arr[2])?, big(&arr[3])?];
        let k = u32::try_from(arr[4].as_u64()?).ok()?;
        Some(Self::from_parts(coeffs, k))
    }
}

impl Default for RingElement {
    fn default() -> Self {
        Self::zero()
    }
}

impl Ord for RingElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.k
            .cmp(&other.k)
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for RingElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.coeffs;
        write!(f, "({a} + {b}ω + {c}ω² + {d}ω³)/√2^{}", self.k)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add for &RingElement {
    type Output = RingElement;

    fn add(self, rhs: &RingElement) -> RingElement {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let k = self.k.max(rhs.k);
        let x = self.numerator_at(k);
        let y = rhs.numerator_at(k);
        let [a, b, c, d] = &x;
        let [e, f, g, h] = &y;
        RingElement::from_parts([a + e, b + f, c + g, d + h], k)
    }
}

impl Neg for &RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        RingElement {
            coeffs: self.coeffs.each_ref().map(|x| -x),
            k: self.k,
        }
    }
}

impl Sub for &RingElement {
    type Output = RingElement;

    fn sub(self, rhs: &RingElement) -> RingElement {
        self + &(-rhs)
    }
}

impl Mul for &RingElement {
    type Output = RingElement;

    fn mul(self, rhs: &RingElement) -> RingElement {
        if self.is_zero() || rhs.is_zero() {
            return RingElement::zero();
        }
        let x = &self.coeffs;
        let y = &rhs.coeffs;
        let mut out: [BigInt; 4] = Default::default();
        for i in 0..4 {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if y[j].is_zero() {
                    continue;
                }
                let p = &x[i] * &y[j];
                // ω⁴ = −1
                if i + j < 4 {
                    out[i + j] += p;
                } else {
                    out[i + j - 4] -= p;
                }
            }
        }
        RingElement::from_parts(out, self.k + rhs.k)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RingElement {
            type Output = RingElement;
            fn $m(self, rhs: RingElement) -> RingElement {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(j: i64) -> RingElement {
        RingElement::omega_pow(j)
    }

    #[test]
    fn omega_times_omega_cubed_is_minus_one() {
        let p = &w(1) * &w(3);
        assert_eq!(p, RingElement::from_int(-1));
        assert_eq!(p.coeffs()[0], BigInt::from(-1));
    }

    #[test]
    fn sqrt2_squared_is_two() {
        let s = &w(1) - &w(3);
        assert_eq!(s, RingElement::sqrt2());
        assert_eq!(&s * &s, RingElement::from_int(2));
        assert_eq!(&RingElement::inv_sqrt2() * &s, RingElement::one());
    }

    #[test]
    fn normalize_divides_out_sqrt2() {
        let r = RingElement::new([2, 0, 2, 0], 2);
        assert_eq!(r.coeffs(), &RingElement::new([1, 0, 1, 0], 0).coeffs().clone());
        assert_eq!(r.sde(), 0);
        // 1/√2 stays put
        assert_eq!(RingElement::new([1, 0, 0, 0], 1).sde(), 1);
        assert_eq!(RingElement::new([0, 0, 0, 0], 5).sde(), 0);
    }

    #[test]
    fn omega_powers_and_conjugate() {
        for j in 0..8 {
            assert_eq!(w(j).as_omega_power(), Some(j as u8));
            assert_eq!(&w(j) * &w(j).conj(), RingElement::one());
            assert_eq!(w(j).mul_omega(3), w(j + 3));
        }
        assert_eq!(RingElement::sqrt2().as_omega_power(), None);
        assert_eq!(RingElement::from_int(2).as_omega_power(), None);
        assert_eq!(RingElement::zero().as_omega_power(), None);
    }

    #[test]
    fn positivity_in_real_subring() {
        assert!(RingElement::one().is_positive_real());
        assert!(RingElement::sqrt2().is_positive_real());
        assert!(!(-RingElement::sqrt2()).is_positive_real());
        // 1 - √2 < 0, 3 - 2√2 > 0
        assert!(!(&RingElement::one() - &RingElement::sqrt2()).is_positive_real());
        let three_minus = &RingElement::from_int(3) - &(&RingElement::sqrt2() * &RingElement::from_int(2));
        assert!(three_minus.is_positive_real());
        assert!(!w(1).is_positive_real());
        assert!(!RingElement::zero().is_positive_real());
    }

    #[test]
    fn json_round_trip_with_large_values() {
        let mut x = RingElement::new([3, -1, 2, 5], 3);
        for _ in 0..8 {
            x = &x * &x;
        }
        let back = RingElement::from_json(&x.to_json()).unwrap();
        assert_eq!(back, x);
    }

    fn arb() -> impl Strategy<Value = RingElement> {
        (prop::array::uniform4(-20i64..20), 0u32..6).prop_map(|(c, k)| RingElement::new(c, k))
    }

    proptest! {
        #[test]
        fn ring_laws_match_complex_values(a in arb(), b in arb(), c in arb()) {
            let close = |x: Complex64, y: Complex64| (x - y).norm() < 1e-9 * (1.0 + y.norm());
            prop_assert!(close((&a + &b).to_complex(), a.to_complex() + b.to_complex()));
            prop_assert!(close((&a * &b).to_complex(), a.to_complex() * b.to_complex()));
            prop_assert!(close(a.conj().to_complex(), a.to_complex().conj()));
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a - &a), &RingElement::zero());
            prop_assert_eq!(&a * &b, &b * &a);
        }
    }
}
