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

//! Boolean formulas: parsing, evaluation and exhaustive analysis.
//!
//! Assignments are indexed little-endian throughout the crate: variable `x_i`
//! is bit `i` of the assignment index, so index `0b10` means `x0 = 0, x1 = 1`.

mod dimacs;
mod parse;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use dimacs::parse_dimacs;
pub use parse::parse_expr;

use crate::error::{Error, Result};

/// Largest variable count the exhaustive routines will enumerate.
pub const MAX_TABLE_VARS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Var(usize),
    Const(bool),
    Not(Box<Node>),
    And(Box<Node>, Box<Node>),
    Or(Box<Node>, Box<Node>),
    Xor(Box<Node>, Box<Node>),
}

impl Node {
    pub fn eval(&self, assignment: u64) -> bool {
        match self {
            Node::Var(i) => (assignment >> i) & 1 == 1,
            Node::Const(b) => *b,
            Node::Not(a) => !a.eval(assignment),
            Node::And(a, b) => a.eval(assignment) && b.eval(assignment),
            Node::Or(a, b) => a.eval(assignment) || b.eval(assignment),
            Node::Xor(a, b) => a.eval(assignment) ^ b.eval(assignment),
        }
    }

    fn max_var(&self) -> Option<usize> {
        match self {
            Node::Var(i) => Some(*i),
            Node::Const(_) => None,
            Node::Not(a) => a.max_var(),
            Node::And(a, b) | Node::Or(a, b) | Node::Xor(a, b) => a.max_var().max(b.max_var()),
        }
    }

    // Binding strength used when printing: NOT > AND > XOR > OR.
    fn precedence(&self) -> u8 {
        match self {
            Node::Or(..) => 1,
            Node::Xor(..) => 2,
            Node::And(..) => 3,
            Node::Not(_) => 4,
            Node::Var(_) | Node::Const(_) => 5,
        }
    }

    fn write_child(&self, child: &Node, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if child.precedence() < self.precedence() {
            write!(f, "({child})")
        } else {
            write!(f, "{child}")
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Var(i) => write!(f, "x{i}"),
            Node::Const(b) => write!(f, "{}", u8::from(*b)),
            Node::Not(a) => {
                write!(f, "~")?;
                self.write_child(a, f)
            }
            Node::And(a, b) | Node::Or(a, b) | Node::Xor(a, b) => {
                let op = match self {
                    Node::And(..) => " & ",
                    Node::Or(..) => " | ",
                    _ => " ^ ",
                };
                self.write_child(a, f)?;
                f.write_str(op)?;
                // Operators are left-associative, so a right child of equal
                // precedence needs parentheses to survive a round trip.
                if b.precedence() <= self.precedence() {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
        }
    }
}

/// A Boolean formula over `num_vars` variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoolExpr {
    root: Node,
    num_vars: usize,
}

impl BoolExpr {
    /// Wraps a tree. The variable count is `1 + max index`, or zero for a
    /// variable-free formula.
    pub fn new(root: Node) -> Self {
        let num_vars = root.max_var().map_or(0, |m| m + 1);
        BoolExpr { root, num_vars }
    }

    /// Wraps a tree with an explicitly declared variable count, which must
    /// cover every index used.
    pub fn with_vars(root: Node, num_vars: usize) -> Result<Self> {
        if let Some(m) = root.max_var() {
            if m >= num_vars {
                return Err(Error::VariableOutOfRange { index: m, num_vars });
            }
        }
        Ok(BoolExpr { root, num_vars })
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn eval(&self, assignment: u64) -> bool {
        self.root.eval(assignment)
    }

    /// Evaluates at an explicit bit vector (`bits[i]` is `x_i`).
    pub fn eval_bits(&self, bits: &[bool]) -> bool {
        self.root.eval(bits_to_index(bits))
    }

    pub fn truth_table(&self) -> Result<TruthTable> {
        check_table_size(self.num_vars)?;
        let bits = (0..1u64 << self.num_vars).map(|i| self.eval(i)).collect();
        Ok(TruthTable {
            num_vars: self.num_vars,
            bits,
        })
    }

    /// Exhaustive satisfiability check returning the least satisfying
    /// assignment index.
    pub fn brute_sat(&self) -> Result<SatResult> {
        check_table_size(self.num_vars)?;
        Ok((0..1u64 << self.num_vars)
            .find(|&i| self.eval(i))
            .map_or(SatResult::Unsat, |i| {
                SatResult::Sat(index_to_bits(i, self.num_vars))
            }))
    }

    pub fn find_witness_pair(&self) -> Result<Witness> {
        Ok(self.truth_table()?.witness())
    }
}

impl fmt::Display for BoolExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.root)
    }
}

fn check_table_size(num_vars: usize) -> Result<()> {
    if num_vars > MAX_TABLE_VARS {
        Err(Error::TooManyVariables {
            num_vars,
            max: MAX_TABLE_VARS,
        })
    } else {
        Ok(())
    }
}

pub fn index_to_bits(index: u64, len: usize) -> Vec<bool> {
    (0..len).map(|i| (index >> i) & 1 == 1).collect()
}

pub fn bits_to_index(bits: &[bool]) -> u64 {
    bits.iter()
        .enumerate()
        .fold(0, |acc, (i, &b)| acc | (u64::from(b) << i))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruthTable {
    pub num_vars: usize,
    pub bits: Vec<bool>,
}

impl TruthTable {
    /// Builds a table from the low `2^num_vars` bits of `mask`.
    pub fn from_mask(num_vars: usize, mask: u64) -> Self {
        assert!(num_vars <= 6, "mask only holds 64 entries");
        TruthTable {
            num_vars,
            bits: (0..1u64 << num_vars).map(|i| (mask >> i) & 1 == 1).collect(),
        }
    }

    pub fn get(&self, index: u64) -> bool {
        self.bits[index as usize]
    }

    pub fn constant(&self) -> Option<bool> {
        let first = self.bits[0];
        self.bits.iter().all(|&b| b == first).then_some(first)
    }

    pub fn is_satisfiable(&self) -> bool {
        self.bits.iter().any(|&b| b)
    }

    /// `z1` is the least index with value 1, `z2` the least with value 0.
    pub fn witness(&self) -> Witness {
        if let Some(c) = self.constant() {
            return Witness::Constant(c);
        }
        let z1 = self.bits.iter().position(|&b| b).unwrap() as u64;
        let z2 = self.bits.iter().position(|&b| !b).unwrap() as u64;
        Witness::Pair(WitnessPair {
            z1: index_to_bits(z1, self.num_vars),
            z2: index_to_bits(z2, self.num_vars),
        })
    }

    /// Reconstructs a formula with this table as a disjunction of minterms.
    pub fn to_expr(&self) -> BoolExpr {
        let minterm = |i: u64| {
            (0..self.num_vars)
                .map(|v| {
                    let var = Node::Var(v);
                    if (i >> v) & 1 == 1 {
                        var
                    } else {
                        Node::Not(Box::new(var))
                    }
                })
                .reduce(|a, b| Node::And(Box::new(a), Box::new(b)))
                .unwrap_or(Node::Const(true))
        };
        let root = (0..self.bits.len() as u64)
            .filter(|&i| self.get(i))
            .map(minterm)
            .reduce(|a, b| Node::Or(Box::new(a), Box::new(b)))
            .unwrap_or(Node::Const(false));
        BoolExpr {
            root,
            num_vars: self.num_vars,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SatResult {
    Unsat,
    Sat(Vec<bool>),
}

impl SatResult {
    pub fn is_sat(&self) -> bool {
        matches!(self, SatResult::Sat(_))
    }
}

/// Inputs `z1`, `z2` with `f(z1) = 1` and `f(z2) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WitnessPair {
    pub z1: Vec<bool>,
    pub z2: Vec<bool>,
}

impl WitnessPair {
    /// The bitwise XOR `z1 ^ z2`, the support of the distinguishing Pauli X.
    pub fn difference(&self) -> Vec<bool> {
        self.z1.iter().zip(&self.z2).map(|(a, b)| a ^ b).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Pair(WitnessPair),
    Constant(bool),
}

impl Witness {
    pub fn pair(&self) -> Option<&WitnessPair> {
        match self {
            Witness::Pair(p) => Some(p),
            Witness::Constant(_) => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(text: &str) -> BoolExpr {
        parse_expr(text).unwrap()
    }

    #[test]
    fn evaluation_examples() {
        assert!(!f("x0 ^ x1").eval_bits(&[true, true]));
        let g = f("(x0 | x1) & ~x2");
        assert!(!g.eval_bits(&[false, false, false]));
        assert!(g.eval_bits(&[true, false, false]));
    }

    #[test]
    fn truth_tables() {
        assert_eq!(f("x0").truth_table().unwrap().bits, vec![false, true]);
        assert_eq!(
            f("x0&x1").truth_table().unwrap().bits,
            vec![false, false, false, true]
        );
        assert_eq!(f("x0|~x0").truth_table().unwrap().bits, vec![true, true]);
    }

    #[test]
    fn brute_sat_examples() {
        assert_eq!(f("x0&~x0").brute_sat().unwrap(), SatResult::Unsat);
        assert_eq!(
            f("x0&x1").brute_sat().unwrap(),
            SatResult::Sat(vec![true, true])
        );
        assert_eq!(f("x0|~x0").brute_sat().unwrap(), SatResult::Sat(vec![false]));
    }

    #[test]
    fn witness_examples() {
        let w = f("x0").find_witness_pair().unwrap();
        assert_eq!(
            w,
            Witness::Pair(WitnessPair {
                z1: vec![true],
                z2: vec![false]
            })
        );
        assert_eq!(f("1").find_witness_pair().unwrap(), Witness::Constant(true));
        let w = f("x0&x1").find_witness_pair().unwrap();
        let p = w.pair().unwrap();
        assert_eq!(p.z1, vec![true, true]);
        assert_eq!(p.z2, vec![false, false]);
    }

    #[test]
    fn size_limit() {
        let big = f("x20");
        assert_eq!(big.num_vars(), 21);
        assert!(matches!(
            big.truth_table(),
            Err(Error::TooManyVariables { .. })
        ));
        assert!(big.brute_sat().is_err());
    }

    #[test]
    fn declared_vars_must_cover_indices() {
        assert!(BoolExpr::with_vars(Node::Var(3), 2).is_err());
        let e = BoolExpr::with_vars(Node::Var(0), 3).unwrap();
        assert_eq!(e.truth_table().unwrap().bits.len(), 8);
    }

    #[test]
    fn sat_agrees_with_table_exhaustively() {
        for v in 0..=3usize {
            for mask in 0..1u64 << (1 << v) {
                let table = TruthTable::from_mask(v, mask);
                let expr = table.to_expr();
                assert_eq!(expr.truth_table().unwrap(), table);
                assert_eq!(expr.brute_sat().unwrap().is_sat(), table.is_satisfiable());
                let none = matches!(expr.find_witness_pair().unwrap(), Witness::Constant(_));
                assert_eq!(none, table.constant().is_some());
            }
        }
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "x0 & ~x0",
            "(x0 | x1) & ~x2",
            "x0 ^ (x1 ^ x2)",
            "~(x0 & x1) | x2 ^ x3",
            "x0 & (x1 | x2) & 1",
            "~~x0",
        ] {
            let e = f(text);
            let again = f(&e.to_string());
            assert_eq!(e.truth_table().unwrap(), again.truth_table().unwrap(), "{text}");
        }
    }
}
