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

/// Upper bound on variable indices accepted by the parser.
const MAX_VAR_INDEX: usize = 1 << 16;

/// Parses a formula such as `(x0 | x1) & ~x2`.
///
/// Precedence from tightest to loosest is `~`, `&`, `^`, `|`; binary
/// operators associate to the left.
pub fn parse_expr(text: &str) -> Result<BoolExpr> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let root = p.or()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(BoolExpr::new(root))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn binary(
        &mut self,
        op: u8,
        next: fn(&mut Self) -> Result<Node>,
        build: fn(Box<Node>, Box<Node>) -> Node,
    ) -> Result<Node> {
        let mut lhs = next(self)?;
        while self.eat(op) {
            let rhs = next(self)?;
            lhs = build(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Node> {
        self.binary(b'|', Self::xor, Node::Or)
    }

    fn xor(&mut self) -> Result<Node> {
        self.binary(b'^', Self::and, Node::Xor)
    }

    fn and(&mut self) -> Result<Node> {
        self.binary(b'&', Self::unary, Node::And)
    }

    fn unary(&mut self) -> Result<Node> {
        if self.eat(b'~') {
            return Ok(Node::Not(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Node> {
        self.skip_ws();
        match self.src.get(self.pos) {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.or()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(b'0') => {
                self.pos += 1;
                Ok(Node::Const(false))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Node::Const(true))
            }
            Some(b'x') => {
                let start = self.pos;
                self.pos += 1;
                let digits_start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if self.pos == digits_start {
                    self.pos = start;
                    return Err(self.error("expected variable index after 'x'"));
                }
                let digits = std::str::from_utf8(&self.src[digits_start..self.pos]).unwrap();
                match digits.parse::<usize>() {
                    Ok(i) if i < MAX_VAR_INDEX => Ok(Node::Var(i)),
                    _ => Err(Error::VariableIndexOverflow {
                        position: start,
                        text: format!("x{digits}"),
                    }),
                }
            }
            Some(_) => Err(self.error("expected variable, constant, '~' or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contradiction_parses() {
        let e = parse_expr("x0 & ~x0").unwrap();
        assert_eq!(e.num_vars(), 1);
        assert_eq!(
            *e.root(),
            Node::And(
                Box::new(Node::Var(0)),
                Box::new(Node::Not(Box::new(Node::Var(0))))
            )
        );
    }

    #[test]
    fn precedence_not_and_xor_or() {
        // x0 | x1 ^ x2 & x3  ==  x0 | (x1 ^ (x2 & x3))
        let e = parse_expr("x0 | x1 ^ x2 & x3").unwrap();
        let g = parse_expr("x0 | (x1 ^ (x2 & x3))").unwrap();
        assert_eq!(e, g);
        let e = parse_expr("~x0 & x1").unwrap();
        assert!(matches!(e.root(), Node::And(..)));
    }

    #[test]
    fn whitespace_is_insignificant() {
        assert_eq!(
            parse_expr("x0&x1").unwrap(),
            parse_expr("  x0 \n&\tx1 ").unwrap()
        );
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_expr("x0 & ") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 5),
            other => panic!("{other:?}"),
        }
        match parse_expr("(x0 | x1") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 8),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_expr("x0 x1"), Err(Error::Syntax { position: 3, .. })));
        assert!(matches!(parse_expr("y0"), Err(Error::Syntax { position: 0, .. })));
        assert!(matches!(parse_expr("x"), Err(Error::Syntax { .. })));
        assert!(parse_expr("").is_err());
    }

    #[test]
    fn index_overflow() {
        assert!(matches!(
            parse_expr("x99999999999999999999999"),
            Err(Error::VariableIndexOverflow { .. })
        ));
        assert!(matches!(
            parse_expr("x0 | x70000"),
            Err(Error::VariableIndexOverflow { position: 5, .. })
        ));
    }
}
