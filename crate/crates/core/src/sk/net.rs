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
use std::fs;
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::su2::{projective_distance_sq, Su2};
use super::{GateWord, Label};
use crate::circuit::GateDefinition;
use crate::error::{Error, Result};

/// Longest base-net word accepted.
pub const MAX_NET_LEN: usize = 16;
/// Base-net word length used when none is requested.
pub const DEFAULT_NET_LEN: usize = 10;

const RADIUS_SAMPLES: usize = 1000;
/// Seed of the Haar sample used for the covering-radius estimate.
pub const RADIUS_SEED: u64 = 0x5eed_0001;
const DEDUP_GRID: f64 = 1e10;
const CACHE_SCHEMA: u64 = 1;

/// All distinct (projective) products of generator words up to a length,
/// searchable by nearest neighbour.
#[derive(Debug)]
pub struct BaseNet {
    gate: GateDefinition,
    max_len: usize,
    words: Vec<GateWord>,
    points: Vec<[f64; 4]>,
    radius: f64,
}

fn dedup_key(q: &Su2) -> [i64; 4] {
    q.canonical().map(|v| (v * DEDUP_GRID).round() as i64)
}

/// Breadth-first enumeration over `{h, s, sdg, g, gdg}`; shorter words win
/// over longer words with the same product.
pub fn base_net(gdef: &GateDefinition, max_len: usize) -> Result<BaseNet> {
    check(gdef, max_len)?;
    let mut seen = HashSet::new();
    let mut words = vec![GateWord::identity()];
    seen.insert(dedup_key(&Su2::identity()));
    let mut frontier = vec![0usize];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for &i in &frontier {
            for l in Label::ALL {
                if words[i].labels().last() == Some(&l.inverse()) {
                    continue;
                }
                let mut w = words[i].clone();
                w.push(l, gdef);
                if seen.insert(dedup_key(&Su2::from_unitary(w.matrix()))) {
                    next.push(words.len());
                    words.push(w);
                }
            }
        }
        frontier = next;
    }
    Ok(BaseNet::from_words(gdef.clone(), max_len, words))
}

fn check(gdef: &GateDefinition, max_len: usize) -> Result<()> {
    if !gdef.is_non_clifford() {
        return Err(Error::GateDefinition(format!(
            "{} is Clifford; the net would not be dense",
            gdef.label()
        )));
    }
    if max_len > MAX_NET_LEN {
        return Err(Error::InvalidArgument(format!(
            "net length {max_len} exceeds {MAX_NET_LEN}"
        )));
    }
    Ok(())
}

impl BaseNet {
    fn from_words(gate: GateDefinition, max_len: usize, words: Vec<GateWord>) -> Self {
        let points = words.iter().map(|w| Su2::from_unitary(w.matrix()).0).collect();
        let mut net = BaseNet { gate, max_len, words, points, radius: 0.0 };
        net.radius = net.estimate_radius(RADIUS_SAMPLES, RADIUS_SEED);
        net
    }

    /// Re-estimates the covering radius from a different Haar sample.
    pub fn reseed_radius(&mut self, seed: u64) {
        self.radius = self.estimate_radius(RADIUS_SAMPLES, seed);
    }

    pub fn gate(&self) -> &GateDefinition {
        &self.gate
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[GateWord] {
        &self.words
    }

    /// Covering radius estimated on Haar-random samples at build time.
    pub fn covering_radius(&self) -> f64 {
        self.radius
    }

    /// Fails with `NetTooCoarse` when the covering radius exceeds `eps0`.
    pub fn require_radius(&self, eps0: f64) -> Result<()> {
        if self.radius > eps0 {
            return Err(Error::NetTooCoarse { radius: self.radius, requested: eps0 });
        }
        Ok(())
    }

    /// Largest nearest-neighbour distance over `samples` Haar-random targets.
    pub fn estimate_radius(&self, samples: usize, seed: u64) -> f64 {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let targets: Vec<Su2> = (0..samples).map(|_| Su2::random(&mut rng)).collect();
        targets
            .par_iter()
            .map(|t| self.nearest_index(t).1.sqrt())
            .reduce(|| 0.0, f64::max)
    }

    fn nearest_index(&self, q: &Su2) -> (usize, f64) {
        let mut best = (0, f64::INFINITY);
        for (i, p) in self.points.iter().enumerate() {
            let d = projective_distance_sq(&q.0, p);
            if d < best.1 {
                best = (i, d);
            }
        }
        best
    }

    /// Shortest word among the closest ones.
    pub fn nearest(&self, q: &Su2) -> &GateWord {
        &self.words[self.nearest_index(q).0]
    }

    /// Nearest word to a `2×2` unitary and its projective distance.
    pub fn lookup(&self, m: &[num_complex::Complex64; 4]) -> (&GateWord, f64) {
        let (i, d) = self.nearest_index(&Su2::from_unitary(m));
        (&self.words[i], d.sqrt())
    }

    pub fn cache_path(dir: &Path, gdef: &GateDefinition, max_len: usize) -> PathBuf {
        dir.join(format!("sk_net_{:016x}_L{max_len}.json", gdef.fingerprint()))
    }

    fn to_json(&self) -> Value {
        let words: Vec<String> = self.words.iter().map(|w| w.to_string()).collect();
        json!({
            "schema": CACHE_SCHEMA,
            "kind": "sk-net",
            "gate": self.gate.label(),
            "fingerprint": format!("{:016x}", self.gate.fingerprint()),
            "max_len": self.max_len,
            "words": words,
        })
    }

    fn from_json(v: &Value, gdef: &GateDefinition, max_len: usize) -> Option<Self> {
        let ok = v["schema"].as_u64() == Some(CACHE_SCHEMA)
            && v["kind"] == "sk-net"
            && v["fingerprint"].as_str() == Some(&format!("{:016x}", gdef.fingerprint()))
            && v["max_len"].as_u64() == Some(max_len as u64);
        if !ok {
            return None;
        }
        let words = v["words"]
            .as_array()?
            .iter()
            .map(|w| GateWord::parse(w.as_str()?, gdef).ok())
            .collect::<Option<Vec<_>>>()?;
        Some(BaseNet::from_words(gdef.clone(), max_len, words))
    }

    /// Loads the net from `dir`, rebuilding and rewriting the cache when it
    /// is missing, stale or unreadable.
    pub fn load_or_build(gdef: &GateDefinition, max_len: usize, dir: &Path) -> Result<Self> {
        check(gdef, max_len)?;
        let path = Self::cache_path(dir, gdef, max_len);
        if let Ok(text) = fs::read_to_string(&path) {
            if let Some(net) = serde_json::from_str(&text).ok().and_then(|v| Self::from_json(&v, gdef, max_len)) {
                return Ok(net);
            }
        }
        let net = base_net(gdef, max_len)?;
        fs::create_dir_all(dir)?;
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_string(&net.to_json())?)?;
        fs::rename(&tmp, &path)?;
        Ok(net)
    }
}
