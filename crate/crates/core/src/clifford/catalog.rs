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

use std::collections::{HashMap, VecDeque};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use serde_json::{json, Value};

use crate::circuit::{parse_circuit, Circuit, Gate};
use crate::error::{Error, Result};
use crate::exact::ExactUnitary;
use crate::numeric::CMatrix;

const CACHE_SCHEMA: u64 = 1;

/// The Clifford group on `n ≤ 2` qubits modulo global phase, one
/// phase-canonical exact matrix per element, in breadth-first order.
#[derive(Debug)]
pub struct CliffordCatalog {
    n: usize,
    elements: Vec<ExactUnitary>,
    words: Vec<Vec<Gate>>,
    index: OnceLock<HashMap<ExactUnitary, usize>>,
    numeric: OnceLock<Vec<CMatrix>>,
}

/// Expected catalog sizes for `n = 1, 2`.
pub fn expected_size(n: usize) -> Option<usize> {
    match n {
        1 => Some(24),
        2 => Some(11520),
        _ => None,
    }
}

fn generators(n: usize) -> Vec<Gate> {
    let mut g = Vec::new();
    for i in 0..n {
        g.push(Gate::h(i));
        g.push(Gate::s(i));
    }
    for a in 0..n {
        for b in 0..n {
            if a != b {
                g.push(Gate::cx(a, b));
            }
        }
    }
    g
}

/// Closure of `{H_i, S_i, CX_ij}` by breadth-first search.
pub fn enumerate_clifford_group(n: usize) -> Result<CliffordCatalog> {
    if expected_size(n).is_none() {
        return Err(Error::InvalidArgument(format!(
            "Clifford enumeration supports n = 1 or 2, got {n}"
        )));
    }
    let gens = generators(n);
    let start = ExactUnitary::identity(n);
    let mut seen: HashMap<ExactUnitary, usize> = HashMap::new();
    let mut elements = vec![start.clone()];
    let mut words: Vec<Vec<Gate>> = vec![Vec::new()];
    seen.insert(start, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in &gens {
            let mut next = elements[i].clone();
            next.apply_gate(g, 0)?;
            let next = next.phase_canonical();
            if seen.contains_key(&next) {
                continue;
            }
            let mut word = words[i].clone();
            word.push(*g);
            seen.insert(next.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(next);
            words.push(word);
        }
    }
    let cat = CliffordCatalog {
        n,
        elements,
        words,
        index: OnceLock::new(),
        numeric: OnceLock::new(),
    };
    let _ = cat.index.set(seen);
    Ok(cat)
}

impl CliffordCatalog {
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ExactUnitary] {
        &self.elements
    }

    /// A generator word (application order) producing element `i`.
    pub fn word(&self, i: usize) -> Circuit {
        let mut c = Circuit::new(self.n);
        c.extend(self.words[i].iter().copied())
            .expect("catalog words fit the register");
        c
    }

    /// Position of `u` modulo global phase.
    pub fn index_of(&self, u: &ExactUnitary) -> Option<usize> {
        if u.qubits() != self.n {
            return None;
        }
        let index = self.index.get_or_init(|| {
            self.elements
                .iter()
                .enumerate()
                .map(|(i, e)| (e.clone(), i))
                .collect()
        });
        index.get(&u.phase_canonical()).copied()
    }

    pub fn contains(&self, u: &ExactUnitary) -> bool {
        self.index_of(u).is_some()
    }

    pub fn numeric(&self) -> &[CMatrix] {
        self.numeric
            .get_or_init(|| self.elements.iter().map(ExactUnitary::to_numeric).collect())
    }

    pub fn to_json(&self) -> Value {
        let items: Vec<Value> = self
            .elements
            .iter()
            .zip(&self.words)
            .map(|(e, w)| {
                let word: Vec<String> = w.iter().map(|g| g.to_string()).collect();
                json!({ "word": word.join("; "), "matrix": e.to_json() })
            })
            .collect();
        json!({ "schema": CACHE_SCHEMA, "kind": "clifford-catalog", "n": self.n, "elements": items })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::InvalidArgument(format!("catalog cache: {m}"));
        if v["schema"].as_u64() != Some(CACHE_SCHEMA) || v["kind"] != "clifford-catalog" {
            return Err(bad("unknown schema"));
        }
        let n = v["n"].as_u64().ok_or_else(|| bad("missing n"))? as usize;
        let items = v["elements"].as_array().ok_or_else(|| bad("missing elements"))?;
        if Some(items.len()) != expected_size(n) {
            return Err(bad("wrong element count"));
        }
        let mut elements = Vec::with_capacity(items.len());
        let mut words = Vec::with_capacity(items.len());
        for item in items {
            let m = ExactUnitary::from_json(&item["matrix"]).ok_or_else(|| bad("bad matrix"))?;
            if m.qubits() != n {
                return Err(bad("matrix size"));
            }
            let text = item["word"].as_str().ok_or_else(|| bad("bad word"))?;
            let body = text.replace("; ", "\n");
            let circ = parse_circuit(&format!("qubits {n}\n{body}"))?;
            elements.push(m);
            words.push(circ.gates().to_vec());
        }
        Ok(CliffordCatalog {
            n,
            elements,
            words,
            index: OnceLock::new(),
            numeric: OnceLock::new(),
        })
    }

    pub fn cache_path(dir: &Path, n: usize) -> PathBuf {
        dir.join(format!("clifford_n{n}.json"))
    }

    /// Loads the catalog from `dir`, rebuilding and rewriting the cache file
    /// when it is absent or unreadable.
    pub fn load_or_build(n: usize, dir: &Path) -> Result<Self> {
        let path = Self::cache_path(dir, n);
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(cat) = serde_json::from_str(&text).map_err(Error::from).and_then(|v| Self::from_json(&v)) {
                if cat.n == n {
                    return Ok(cat);
                }
            }
        }
        let cat = enumerate_clifford_group(n)?;
        fs::create_dir_all(dir)?;
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_string(&cat.to_json())?)?;
        fs::rename(&tmp, &path)?;
        Ok(cat)
    }

    /// Process-wide catalog, built on first use.
    pub fn shared(n: usize) -> Result<&'static CliffordCatalog> {
        Self::shared_from(n, || enumerate_clifford_group(n))
    }

    /// Process-wide catalog, taken from the cache in `dir` on first use.
    pub fn shared_cached(n: usize, dir: &Path) -> Result<&'static CliffordCatalog> {
        Self::shared_from(n, || Self::load_or_build(n, dir))
    }

    fn shared_from(
        n: usize,
        make: impl FnOnce() -> Result<CliffordCatalog>,
    ) -> Result<&'static CliffordCatalog> {
        static CATALOGS: [OnceLock<CliffordCatalog>; 2] = [OnceLock::new(), OnceLock::new()];
        if expected_size(n).is_none() {
            return Err(Error::TooManyQubits { qubits: n, max: 2 });
        }
        let slot = &CATALOGS[n - 1];
        if let Some(c) = slot.get() {
            return Ok(c);
        }
        let built = make()?;
        Ok(slot.get_or_init(|| built))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::is_clifford_exact;

    #[test]
    fn single_qubit_group() {
        let cat = enumerate_clifford_group(1).unwrap();
        assert_eq!(cat.len(), 24);
        assert!(cat.elements().iter().all(is_clifford_exact));
        for (i, e) in cat.elements().iter().enumerate() {
            let w = crate::exact::exact_simulate(&cat.word(i)).unwrap();
            assert!(w.equal_up_to_phase(e).is_some());
        }
    }

    #[test]
    fn json_round_trip() {
        let cat = enumerate_clifford_group(1).unwrap();
        let back = CliffordCatalog::from_json(&cat.to_json()).unwrap();
        assert_eq!(back.elements(), cat.elements());
        assert_eq!(back.words, cat.words);
        assert!(enumerate_clifford_group(3).is_err());
    }
}
