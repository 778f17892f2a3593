//! Order formulas written in `εq`, and the reference corpus of torus
//! decompositions expressed with them.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := power (('*' | '/') power | power-starting-with-'(')*
//! power := atom ('^' uint)?
//! atom  := uint | 'V' | 'D' | 'D2' | 'D3' | 'D5' | 'D10' | '(' expr ')' | '-' atom
//! ```
//!
//! `V` is `εq`. `D` is `(n, V-1)` and `Dk` is `(k, V-1)`, where `n` is the
//! rank the formula belongs to. Juxtaposed groups multiply, so
//! `(V^3-1)(V+1)` is accepted. Note that `-V^2` parses as `(-V)^2`.
//!
//! Fixture files hold one decomposition per line:
//!
//! ```text
//! FAMILY <TAB> PARTITION <TAB> FACTORS [<TAB> key=value]*
//! ```
//!
//! `FAMILY` is `SL` or `PSL`, `PARTITION` is comma separated with optional
//! `part^count` shorthand, and `FACTORS` is a comma-separated list of
//! `[expr]` or `[expr]^k` where `k` counts equal cyclic factors. The tags
//! `name=...` and `eps=+1|-1` are recognized; others are kept verbatim.
//! Lines starting with `#` and blank lines are skipped.

use std::fmt;
use std::path::Path;

use thiserror::Error;

use crate::abelian::AbelianGroup;
use crate::arith::{gcd2, veq, veq_pow_m1};
use crate::partition::{format_partition, parse_partition};
use crate::tori::GroupFamily;
use crate::{Eps, Error, Result, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundConst {
    /// `(n, V-1)`
    D,
    D2,
    D3,
    D5,
    D10,
}

impl BoundConst {
    fn name(self) -> &'static str {
        match self {
            BoundConst::D => "D",
            BoundConst::D2 => "D2",
            BoundConst::D3 => "D3",
            BoundConst::D5 => "D5",
            BoundConst::D10 => "D10",
        }
    }

    fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "D" => BoundConst::D,
            "D2" => BoundConst::D2,
            "D3" => BoundConst::D3,
            "D5" => BoundConst::D5,
            "D10" => BoundConst::D10,
            _ => return None,
        })
    }

    fn modulus(self, n: u32) -> u32 {
        match self {
            BoundConst::D => n,
            BoundConst::D2 => 2,
            BoundConst::D3 => 3,
            BoundConst::D5 => 5,
            BoundConst::D10 => 10,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
        }
    }

    fn precedence(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Mul | BinOp::Div => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FixtureExpr {
    Int(u64),
    Veq,
    Const(BoundConst),
    Neg(Box<FixtureExpr>),
    Bin(BinOp, Box<FixtureExpr>, Box<FixtureExpr>),
    Pow(Box<FixtureExpr>, u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown identifier `{name}` at position {pos}")]
    UnknownIdentifier { pos: usize, name: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("inexact division {num} / {den}")]
    InexactDivision { num: String, den: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("factor `{0}` evaluates to zero")]
    ZeroOrder(String),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax(&self, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(format!("expected `{}`", c as char)))
        }
    }

    fn expr(&mut self) -> Result<FixtureExpr, ParseError> {
        let mut lhs = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let op = if c == b'+' { BinOp::Add } else { BinOp::Sub };
            let rhs = self.term()?;
            lhs = FixtureExpr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<FixtureExpr, ParseError> {
        let mut lhs = self.power()?;
        loop {
            let op = match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    BinOp::Mul
                }
                Some(b'/') => {
                    self.pos += 1;
                    BinOp::Div
                }
                Some(b'(') => BinOp::Mul,
                _ => break,
            };
            let rhs = self.power()?;
            lhs = FixtureExpr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn power(&mut self) -> Result<FixtureExpr, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let k = self.uint()?;
            let k = u32::try_from(k).map_err(|_| self.syntax("exponent too large"))?;
            return Ok(FixtureExpr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn uint(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected an unsigned integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| ParseError::Syntax {
                pos: start,
                msg: "integer literal too large".into(),
            })
    }

    fn atom(&mut self) -> Result<FixtureExpr, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(FixtureExpr::Neg(Box::new(self.atom()?)))
            }
            Some(c) if c.is_ascii_digit() => Ok(FixtureExpr::Int(self.uint()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if name == "V" {
                    return Ok(FixtureExpr::Veq);
                }
                BoundConst::from_name(name)
                    .map(FixtureExpr::Const)
                    .ok_or_else(|| ParseError::UnknownIdentifier {
                        pos: start,
                        name: name.to_string(),
                    })
            }
            Some(c) => Err(self.syntax(format!("unexpected `{}`", c as char))),
            None => Err(self.syntax("unexpected end of input")),
        }
    }
}

/// Parses a formula; the whole input must be consumed.
pub fn parse_expr(src: &str) -> Result<FixtureExpr, ParseError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    if p.peek().is_none() {
        return Err(p.syntax("empty expression"));
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.syntax("trailing input"));
    }
    Ok(e)
}

/// Evaluates with `V = εq` and `D = (n, V-1)`. Every division must be exact.
pub fn eval_expr<T: Scalar>(e: &FixtureExpr, q: &T, eps: Eps, n: u32) -> Result<T, EvalError> {
    let v = veq(q, eps);
    eval_at(e, &v, n)
}

fn eval_at<T: Scalar>(e: &FixtureExpr, v: &T, n: u32) -> Result<T, EvalError> {
    Ok(match e {
        FixtureExpr::Int(k) => T::from_u64(*k).expect("literal fits the scalar type"),
        FixtureExpr::Veq => v.clone(),
        FixtureExpr::Const(c) => {
            let m = T::from_u32(c.modulus(n)).expect("modulus fits the scalar type");
            gcd2(&m, &veq_pow_m1(v, 1))
        }
        FixtureExpr::Neg(x) => -eval_at(x, v, n)?,
        FixtureExpr::Pow(b, k) => num_traits::pow(eval_at(b, v, n)?, *k as usize),
        FixtureExpr::Bin(op, l, r) => {
            let l = eval_at(l, v, n)?;
            let r = eval_at(r, v, n)?;
            match op {
                BinOp::Add => l + r,
                BinOp::Sub => l - r,
                BinOp::Mul => l * r,
                BinOp::Div => {
                    if r.is_zero() {
                        return Err(EvalError::DivisionByZero);
                    }
                    let (q, rem) = l.div_rem(&r);
                    if !rem.is_zero() {
                        return Err(EvalError::InexactDivision {
                            num: l.to_string(),
                            den: r.to_string(),
                        });
                    }
                    q
                }
            }
        }
    })
}

impl FixtureExpr {
    fn precedence(&self) -> u8 {
        match self {
            FixtureExpr::Bin(op, ..) => op.precedence(),
            FixtureExpr::Pow(..) => 3,
            _ => 4,
        }
    }
}

fn write_wrapped(f: &mut fmt::Formatter<'_>, e: &FixtureExpr, wrap: bool) -> fmt::Result {
    if wrap {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Prints with the minimum parentheses that reparse to the same tree.
impl fmt::Display for FixtureExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureExpr::Int(k) => write!(f, "{k}"),
            FixtureExpr::Veq => f.write_str("V"),
            FixtureExpr::Const(c) => f.write_str(c.name()),
            FixtureExpr::Neg(x) => {
                f.write_str("-")?;
                write_wrapped(f, x, x.precedence() < 4)
            }
            FixtureExpr::Pow(b, k) => {
                write_wrapped(f, b, b.precedence() < 4)?;
                write!(f, "^{k}")
            }
            FixtureExpr::Bin(op, l, r) => {
                let p = op.precedence();
                write_wrapped(f, l, l.precedence() < p)?;
                write!(f, "{}", op.symbol())?;
                write_wrapped(f, r, r.precedence() <= p)
            }
        }
    }
}

/// One decomposition: `∏ Z_{expr}^{k}` for a torus or its projective image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureRow {
    pub family: GroupFamily,
    pub partition: Vec<u32>,
    pub factors: Vec<(FixtureExpr, u32)>,
    /// Set for worked examples; table rows have none.
    pub name: Option<String>,
    /// Restricts the row to one sign of `ε`.
    pub eps: Option<Eps>,
    /// Remaining `key=value` tags.
    pub tags: Vec<(String, String)>,
}

impl FixtureRow {
    pub fn n(&self) -> u32 {
        self.partition.iter().sum()
    }

    pub fn is_table_row(&self) -> bool {
        self.name.is_none()
    }

    pub fn tag(&self, key: &str) -> Option<&str> {
        self.tags
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn applies_to(&self, eps: Eps) -> bool {
        self.eps.is_none_or(|e| e == eps)
    }

    /// The group this row describes at `(q, ε)`.
    pub fn evaluate<T: Scalar>(&self, q: &T, eps: Eps) -> Result<AbelianGroup<T>> {
        let n = self.n();
        let mut orders = Vec::new();
        for (e, k) in &self.factors {
            let value = eval_expr(e, q, eps, n)?;
            if value.is_zero() {
                return Err(EvalError::ZeroOrder(e.to_string()).into());
            }
            orders.extend(std::iter::repeat_n(value, *k as usize));
        }
        AbelianGroup::from_orders(orders)
    }
}

impl fmt::Display for FixtureRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .factors
            .iter()
            .map(|(e, k)| {
                if *k == 1 {
                    format!("[{e}]")
                } else {
                    format!("[{e}]^{k}")
                }
            })
            .collect();
        write!(
            f,
            "{}\t{}\t{}",
            self.family,
            format_partition(&self.partition),
            factors.join(", ")
        )?;
        if let Some(name) = &self.name {
            write!(f, "\tname={name}")?;
        }
        if let Some(eps) = self.eps {
            write!(f, "\teps={eps}")?;
        }
        for (k, v) in &self.tags {
            write!(f, "\t{k}={v}")?;
        }
        Ok(())
    }
}

fn parse_factor(item: &str) -> std::result::Result<(FixtureExpr, u32), String> {
    let item = item.trim();
    let body = item
        .strip_prefix('[')
        .ok_or_else(|| format!("factor `{item}` must start with `[`"))?;
    let close = body
        .rfind(']')
        .ok_or_else(|| format!("factor `{item}` has no closing `]`"))?;
    let expr = parse_expr(&body[..close]).map_err(|e| format!("in `{item}`: {e}"))?;
    let rest = body[close + 1..].trim();
    let mult = if rest.is_empty() {
        1
    } else {
        rest.strip_prefix('^')
            .and_then(|k| k.trim().parse::<u32>().ok())
            .filter(|&k| k >= 1)
            .ok_or_else(|| format!("bad multiplicity `{rest}` in `{item}`"))?
    };
    Ok((expr, mult))
}

fn parse_row(line: &str) -> std::result::Result<FixtureRow, String> {
    let fields: Vec<&str> = line.split('\t').collect();
    if fields.len() < 3 {
        return Err(format!(
            "expected at least 3 TAB-separated fields, got {}",
            fields.len()
        ));
    }
    let family = match fields[0].trim() {
        "SL" => GroupFamily::Sl,
        "PSL" => GroupFamily::Psl,
        other => return Err(format!("unknown family `{other}`")),
    };
    let partition = parse_partition(fields[1])?;
    let factors = fields[2]
        .split(',')
        .map(parse_factor)
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let mut row = FixtureRow {
        family,
        partition,
        factors,
        name: None,
        eps: None,
        tags: Vec::new(),
    };
    for tag in &fields[3..] {
        let (k, v) = tag
            .split_once('=')
            .ok_or_else(|| format!("tag `{tag}` is not key=value"))?;
        match k.trim() {
            "name" => row.name = Some(v.trim().to_string()),
            "eps" => row.eps = Some(v.parse().map_err(|e: Error| e.to_string())?),
            key => row.tags.push((key.to_string(), v.trim().to_string())),
        }
    }
    Ok(row)
}

/// Parses a fixture file.
pub fn parse_fixtures(src: &str) -> Result<Vec<FixtureRow>> {
    src.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            parse_row(l).map_err(|detail| Error::Fixture {
                line: i + 1,
                detail,
            })
        })
        .collect()
}

pub fn load_fixtures(path: impl AsRef<Path>) -> Result<Vec<FixtureRow>> {
    let path = path.as_ref();
    let src = std::fs::read_to_string(path).map_err(|e| Error::Fixture {
        line: 0,
        detail: format!("{}: {e}", path.display()),
    })?;
    parse_fixtures(&src)
}

/// Embedded corpus text.
pub const FIXTURES: &str = include_str!("../fixtures/maximal_tori.tsv");

/// The embedded corpus: every torus of `SL_10` and `PSL_10`, then the
/// worked examples for `n = 21, 24, 30, 31`.
pub fn fixture_rows() -> Vec<FixtureRow> {
    parse_fixtures(FIXTURES).expect("embedded fixtures parse")
}
