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

use super::{BoolExpr, Node};
use crate::error::{Error, Result};

/// Parses DIMACS CNF into a conjunction of clauses. Variable `k` in the file
/// becomes `x(k-1)`; the declared variable count is kept even when some
/// variables never occur.
pub fn parse_dimacs(text: &str) -> Result<BoolExpr> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Node> = Vec::new();
    let mut current: Vec<Node> = Vec::new();

    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(dimacs_error(lineno, "duplicate header"));
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parsed = match fields.as_slice() {
                ["p", "cnf", vars, clauses] => vars.parse().ok().zip(clauses.parse().ok()),
                _ => None,
            };
            header = Some(parsed.ok_or_else(|| {
                dimacs_error(lineno, "malformed header, expected 'p cnf <vars> <clauses>'")
            })?);
            continue;
        }
        let (num_vars, _) = header.ok_or_else(|| dimacs_error(lineno, "clause before header"))?;
        for tok in line.split_whitespace() {
            let lit: i64 = tok
                .parse()
                .map_err(|_| dimacs_error(lineno, &format!("invalid literal '{tok}'")))?;
            if lit == 0 {
                let clause = std::mem::take(&mut current)
                    .into_iter()
                    .reduce(|a, b| Node::Or(Box::new(a), Box::new(b)))
                    .unwrap_or(Node::Const(false));
                clauses.push(clause);
                continue;
            }
            let var = lit.unsigned_abs() as usize;
            if var > num_vars {
                return Err(dimacs_error(
                    lineno,
                    &format!("literal {lit} out of range for {num_vars} variables"),
                ));
            }
            let node = Node::Var(var - 1);
            current.push(if lit < 0 {
                Node::Not(Box::new(node))
            } else {
                node
            });
        }
    }

    let (num_vars, num_clauses) =
        header.ok_or_else(|| dimacs_error(0, "missing 'p cnf' header"))?;
    if !current.is_empty() {
        return Err(dimacs_error(
            text.lines().count().saturating_sub(1),
            "missing clause terminator '0'",
        ));
    }
    if clauses.len() != num_clauses {
        return Err(dimacs_error(
            0,
            &format!(
                "header declares {num_clauses} clauses but {} were given",
                clauses.len()
            ),
        ));
    }
    let root = clauses
        .into_iter()
        .reduce(|a, b| Node::And(Box::new(a), Box::new(b)))
        .unwrap_or(Node::Const(true));
    BoolExpr::with_vars(root, num_vars)
}

fn dimacs_error(line: usize, message: &str) -> Error {
    Error::Dimacs {
        line: line + 1,
        message: message.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::parse_expr;

    fn table(e: &BoolExpr) -> Vec<bool> {
        e.truth_table().unwrap().bits
    }

    #[test]
    fn single_unit_clause() {
        let e = parse_dimacs("p cnf 1 1\n1 0").unwrap();
        assert_eq!(*e.root(), Node::Var(0));
    }

    #[test]
    fn contradictory_units() {
        let e = parse_dimacs("p cnf 1 2\n1 0\n-1 0").unwrap();
        assert_eq!(table(&e), table(&parse_expr("x0 & ~x0").unwrap()));
        assert!(!e.brute_sat().unwrap().is_sat());
    }

    #[test]
    fn mixed_clause() {
        let e = parse_dimacs("p cnf 2 1\n1 -2 0").unwrap();
        assert_eq!(table(&e), table(&parse_expr("x0 | ~x1").unwrap()));
    }

    #[test]
    fn comments_and_split_clauses() {
        let e = parse_dimacs("c hello\np cnf 3 2\n1 2\n 0 -3\nc mid\n0\n").unwrap();
        assert_eq!(e.num_vars(), 3);
        assert_eq!(table(&e), table(&parse_expr("(x0 | x1) & ~x2").unwrap()));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_dimacs("p cnf x 1\n1 0"), Err(Error::Dimacs { .. })));
        assert!(matches!(parse_dimacs("p dnf 1 1\n1 0"), Err(Error::Dimacs { .. })));
        assert!(matches!(parse_dimacs("1 0"), Err(Error::Dimacs { .. })));
        assert!(matches!(parse_dimacs("p cnf 1 1\n2 0"), Err(Error::Dimacs { .. })));
        assert!(matches!(parse_dimacs("p cnf 2 1\n1 2"), Err(Error::Dimacs { .. })));
        assert!(matches!(parse_dimacs("p cnf 2 2\n1 2 0"), Err(Error::Dimacs { .. })));
    }
}
