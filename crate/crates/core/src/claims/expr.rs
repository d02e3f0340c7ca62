//! Integer closed-form expressions over the family parameters.
//!
//! Grammar: `+ - * /`, parentheses, unary minus, non-negative integer
//! literals and parameter names. Division must be exact; a formula that is
//! not integer-valued at a point is an error, not a rounded value.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Node {
    Literal(i128),
    Variable(String),
    Negate(Box<Node>),
    Binary(Op, Box<Node>, Box<Node>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    text: String,
    root: Node,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprError(pub String);

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Expr {
    pub fn parse(text: &str) -> Result<Expr, ExprError> {
        let mut parser = Parser {
            chars: text.char_indices().peekable(),
            text,
        };
        let root = parser.sum()?;
        parser.skip_space();
        if let Some(&(pos, c)) = parser.chars.peek() {
            return Err(ExprError(format!("unexpected '{c}' at position {pos}")));
        }
        Ok(Expr {
            text: text.trim().to_string(),
            root,
        })
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn variables(&self) -> Vec<&str> {
        fn walk<'a>(node: &'a Node, out: &mut Vec<&'a str>) {
            match node {
                Node::Literal(_) => {}
                Node::Variable(name) => out.push(name),
                Node::Negate(inner) => walk(inner, out),
                Node::Binary(_, a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(&self.root, &mut out);
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Evaluates with `lookup` supplying parameter values.
    pub fn eval(&self, lookup: &dyn Fn(&str) -> Option<i128>) -> Result<i128, ExprError> {
        fn go(node: &Node, lookup: &dyn Fn(&str) -> Option<i128>) -> Result<i128, ExprError> {
            let overflow = || ExprError("arithmetic overflow".into());
            Ok(match node {
                Node::Literal(v) => *v,
                Node::Variable(name) => {
                    lookup(name).ok_or_else(|| ExprError(format!("unbound parameter '{name}'")))?
                }
                Node::Negate(inner) => -go(inner, lookup)?,
                Node::Binary(op, a, b) => {
                    let (a, b) = (go(a, lookup)?, go(b, lookup)?);
                    match op {
                        Op::Add => a.checked_add(b).ok_or_else(overflow)?,
                        Op::Sub => a.checked_sub(b).ok_or_else(overflow)?,
                        Op::Mul => a.checked_mul(b).ok_or_else(overflow)?,
                        Op::Div => {
                            if b == 0 {
                                return Err(ExprError("division by zero".into()));
                            }
                            if a % b != 0 {
                                return Err(ExprError(format!("{a}/{b} is not an integer")));
                            }
                            a / b
                        }
                    }
                }
            })
        }
        go(&self.root, lookup)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    text: &'a str,
}

impl Parser<'_> {
    fn skip_space(&mut self) {
        while self.chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_space();
        self.chars.peek().map(|&(_, c)| c)
    }

    fn sum(&mut self) -> Result<Node, ExprError> {
        let mut left = self.product()?;
        while let Some(op) = match self.peek() {
            Some('+') => Some(Op::Add),
            Some('-') => Some(Op::Sub),
            _ => None,
        } {
            self.chars.next();
            let right = self.product()?;
            left = Node::Binary(op, Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn product(&mut self) -> Result<Node, ExprError> {
        let mut left = self.unary()?;
        while let Some(op) = match self.peek() {
            Some('*') => Some(Op::Mul),
            Some('/') => Some(Op::Div),
            _ => None,
        } {
            self.chars.next();
            let right = self.unary()?;
            left = Node::Binary(op, Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Node, ExprError> {
        if self.peek() == Some('-') {
            self.chars.next();
            return Ok(Node::Negate(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Node, ExprError> {
        self.skip_space();
        let Some(&(start, c)) = self.chars.peek() else {
            return Err(ExprError("unexpected end of expression".into()));
        };
        if c == '(' {
            self.chars.next();
            let inner = self.sum()?;
            if self.peek() != Some(')') {
                return Err(ExprError(format!("unclosed '(' at position {start}")));
            }
            self.chars.next();
            return Ok(inner);
        }
        let mut end = start;
        if c.is_ascii_digit() {
            while let Some((i, c)) = self.chars.next_if(|(_, c)| c.is_ascii_digit()) {
                end = i + c.len_utf8();
            }
            return self.text[start..end]
                .parse()
                .map(Node::Literal)
                .map_err(|_| ExprError(format!("literal too large at position {start}")));
        }
        if c.is_ascii_alphabetic() || c == '_' {
            while let Some((i, c)) = self
                .chars
                .next_if(|(_, c)| c.is_ascii_alphanumeric() || *c == '_')
            {
                end = i + c.len_utf8();
            }
            return Ok(Node::Variable(self.text[start..end].to_string()));
        }
        Err(ExprError(format!("unexpected '{c}' at position {start}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval_at(text: &str, m: i128, n: i128) -> Result<i128, ExprError> {
        Expr::parse(text)?.eval(&|name| match name {
            "m" => Some(m),
            "n" => Some(n),
            _ => None,
        })
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(eval_at("2*(m-1)+n", 2, 3), Ok(5));
        assert_eq!(eval_at("10 - 3 - 2", 0, 0), Ok(5));
        assert_eq!(eval_at("12/2/3", 0, 0), Ok(2));
        assert_eq!(eval_at("-n + 1", 0, 4), Ok(-3));
        assert_eq!(eval_at("(n+3)*(3*n+1)/4", 0, 5), Ok(32));
        assert_eq!(eval_at("m*n*(m*n-2)/2", 2, 3), Ok(12));
    }

    #[test]
    fn inexact_division_is_an_error() {
        assert!(eval_at("(3*n-2)/2", 0, 3).is_err());
        assert!(eval_at("n/0", 0, 3).is_err());
    }

    #[test]
    fn parse_errors() {
        assert!(Expr::parse("").is_err());
        assert!(Expr::parse("(n+1").is_err());
        assert!(Expr::parse("n+").is_err());
        assert!(Expr::parse("n $ 2").is_err());
        assert!(Expr::parse("n 2").is_err());
        assert!(eval_at("k+1", 0, 0).is_err());
    }

    #[test]
    fn variables_are_reported() {
        assert_eq!(Expr::parse("m*n - n + 2").unwrap().variables(), vec!["m", "n"]);
        assert_eq!(Expr::parse(" 3 ").unwrap().text(), "3");
    }
}
