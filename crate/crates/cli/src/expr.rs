//! Series expressions: `+ - * / ^`, unary minus, parentheses, integer
//! literals, `x`, `sqrt log exp`, and the named series `catalan`, `geom`,
//! `one_plus_x`.
//!
//! Precedence from tightest: `^`, unary `-`, `* /`, `+ -`. Binary operators
//! are left-associative except `^`. Exponents are literals: `x^3`, `x^-1`,
//! `x^(1/2)`, `x^(-3/2)`; chained exponents fold right to a single rational.

use std::fmt;

use riordan_lab::rational::{exact_root, int, pow_i64, Rational};
use riordan_lab::series::{catalan, geom, one_plus_x};
use riordan_lab::{Error, Ring, Series};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Sqrt,
    Log,
    Exp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Named {
    Catalan,
    Geom,
    OnePlusX,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    X,
    Named(Named),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Rational),
    Call(Func, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {offset}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<String>,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(String),
    Ident(String),
    Sym(char),
    End,
}


struct Lexer<'a> {
    text: &'a str,
    toks: Vec<(usize, Tok)>,
}

impl<'a> Lexer<'a> {
    fn run(text: &'a str) -> Result<Vec<(usize, Tok)>, ParseError> {
        let mut lx = Lexer { text, toks: Vec::new() };
        let bytes = text.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            if c.is_ascii_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                lx.toks.push((start, Tok::Int(text[start..i].to_string())));
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                lx.toks.push((start, Tok::Ident(text[start..i].to_string())));
            } else if "+-*/^()".contains(c) {
                lx.toks.push((i, Tok::Sym(c)));
                i += 1;
            } else {
                let ch = text[i..].chars().next().expect("non-empty");
                return Err(ParseError { offset: i, expected: vec!["an expression".into()], found: format!("{ch:?}") });
            }
        }
        lx.toks.push((lx.text.len(), Tok::End));
        Ok(lx.toks)
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(d) => format!("number {d}"),
        Tok::Ident(s) => format!("name {s:?}"),
        Tok::Sym(c) => format!("{c:?}"),
        Tok::End => "end of input".into(),
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

const OPERAND: [&str; 5] = ["a number", "x", "a function name", "'('", "'-'"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        ParseError {
            offset: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: describe(self.peek()),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&[&format!("'{c}'")]))
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let start = self.offset();
        let mut exps = vec![self.exponent()?];
        while self.eat('^') {
            exps.push(self.exponent()?);
        }
        let mut value = exps.pop().expect("one exponent");
        while let Some(e) = exps.pop() {
            value = literal_power(&e, &value).ok_or_else(|| ParseError {
                offset: start,
                expected: vec!["a rational exponent".into()],
                found: format!("{e}^{value}"),
            })?;
        }
        Ok(Expr::Pow(Box::new(base), value))
    }

    fn integer(&mut self) -> Result<Rational, ParseError> {
        match self.peek().clone() {
            Tok::Int(d) => {
                self.bump();
                Ok(Rational::from_integer(d.parse().expect("digits")))
            }
            _ => Err(self.error(&["a number"])),
        }
    }

    fn exponent(&mut self) -> Result<Rational, ParseError> {
        if self.eat('(') {
            let neg = self.eat('-');
            let mut q = self.integer()?;
            if self.eat('/') {
                let den = self.integer()?;
                if den == int(0) {
                    return Err(ParseError { offset: self.toks[self.pos - 1].0, expected: vec!["a nonzero denominator".into()], found: "0".into() });
                }
                q /= den;
            }
            self.expect(')')?;
            return Ok(if neg { -q } else { q });
        }
        let neg = self.eat('-');
        let q = self.integer().map_err(|_| self.error(&["a number", "'-'", "'('"]))?;
        Ok(if neg { -q } else { q })
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(_) => Ok(Expr::Num(self.integer()?)),
            Tok::Sym('(') => {
                self.bump();
                let e = self.sum()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) => {
                let here = self.offset();
                self.bump();
                let func = match name.as_str() {
                    "x" => return Ok(Expr::X),
                    "catalan" => return Ok(Expr::Named(Named::Catalan)),
                    "geom" => return Ok(Expr::Named(Named::Geom)),
                    "one_plus_x" => return Ok(Expr::Named(Named::OnePlusX)),
                    "sqrt" => Func::Sqrt,
                    "log" => Func::Log,
                    "exp" => Func::Exp,
                    _ => {
                        return Err(ParseError {
                            offset: here,
                            expected: vec!["x".into(), "catalan, geom, one_plus_x".into(), "sqrt, log, exp".into()],
                            found: format!("name {name:?}"),
                        })
                    }
                };
                self.expect('(')?;
                let arg = self.sum()?;
                self.expect(')')?;
                Ok(Expr::Call(func, Box::new(arg)))
            }
            _ => Err(self.error(&OPERAND)),
        }
    }
}

/// `base^exp` when it is rational.
fn literal_power(base: &Rational, exp: &Rational) -> Option<Rational> {
    let den: i64 = exp.denom().try_into().ok()?;
    let num: i64 = exp.numer().try_into().ok()?;
    if *base == int(0) && num < 0 {
        return None;
    }
    let root = if den == 1 { base.clone() } else { exact_root(base, u32::try_from(den).ok()?)? };
    Some(pow_i64(&root, num))
}

pub fn parse_series(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: Lexer::run(text)?, pos: 0 };
    let e = p.sum()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["an operator", "end of input"]));
    }
    Ok(e)
}

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Neg(..) => 3,
        Expr::Pow(..) => 4,
        Expr::Num(q) if !q.is_integer() || *q < int(0) => 2,
        _ => 5,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if prec(e) < min {
        write!(f, "(")?;
        write!(f, "{e}")?;
        write!(f, ")")
    } else {
        write!(f, "{e}")
    }
}

fn write_exponent(f: &mut fmt::Formatter<'_>, q: &Rational) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "({}/{})", q.numer(), q.denom())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Expr::X => write!(f, "x"),
            Expr::Named(Named::Catalan) => write!(f, "catalan"),
            Expr::Named(Named::Geom) => write!(f, "geom"),
            Expr::Named(Named::OnePlusX) => write!(f, "one_plus_x"),
            Expr::Neg(a) => {
                write!(f, "-")?;
                write_at(f, a, 3)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                write_at(f, a, 1)?;
                write!(f, " {} ", if matches!(self, Expr::Add(..)) { '+' } else { '-' })?;
                write_at(f, b, 2)
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                write_at(f, a, 2)?;
                write!(f, "{}", if matches!(self, Expr::Mul(..)) { '*' } else { '/' })?;
                write_at(f, b, 3)
            }
            Expr::Pow(a, q) => {
                write_at(f, a, 5)?;
                write!(f, "^")?;
                write_exponent(f, q)
            }
            Expr::Call(func, a) => {
                let name = match func {
                    Func::Sqrt => "sqrt",
                    Func::Log => "log",
                    Func::Exp => "exp",
                };
                write!(f, "{name}({a})")
            }
        }
    }
}

/// Extra precision carried while evaluating, to absorb divisions by series
/// that vanish at zero.
pub const GUARD: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("division by zero series")]
    DivisionByZero,
    #[error("quotient has a pole at x = 0")]
    Pole,
    #[error("lost too much precision (order {available} < {needed})")]
    Precision { needed: usize, available: usize },
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Series(#[from] Error),
}

fn unit_power(a: &Series<Rational>, q: &Rational) -> Result<Series<Rational>, EvalError> {
    if q.is_integer() {
        let k: i64 = q.numer().try_into().map_err(|_| EvalError::Domain("exponent too large".into()))?;
        return Ok(a.pow_int(k)?);
    }
    let a0 = a.coeff(0);
    if a0 == int(0) {
        return Err(EvalError::Domain("fractional power of a series vanishing at 0".into()));
    }
    let c = literal_power(&a0, q).ok_or_else(|| EvalError::Domain(format!("({a0})^({q}) is irrational")))?;
    let normalized = a.scale(&a0.recip());
    Ok(normalized.pow_rational(q)?.scale(&c))
}

fn eval_at(e: &Expr, order: usize) -> Result<Series<Rational>, EvalError> {
    Ok(match e {
        Expr::Num(q) => Series::constant(q.clone(), order),
        Expr::X => Series::x(order),
        Expr::Named(Named::Catalan) => catalan(order),
        Expr::Named(Named::Geom) => geom(order),
        Expr::Named(Named::OnePlusX) => one_plus_x(order),
        Expr::Neg(a) => eval_at(a, order)?.neg(),
        Expr::Add(a, b) => eval_at(a, order)?.add(&eval_at(b, order)?),
        Expr::Sub(a, b) => eval_at(a, order)?.sub(&eval_at(b, order)?),
        Expr::Mul(a, b) => eval_at(a, order)?.mul(&eval_at(b, order)?),
        Expr::Div(a, b) => {
            let num = eval_at(a, order)?;
            let den = eval_at(b, order)?;
            let v = den.valuation().ok_or(EvalError::DivisionByZero)?;
            if (0..v).any(|k| !num.coeff_ref(k).is_zero()) {
                return Err(EvalError::Pole);
            }
            num.shift_down(v)?.div(&den.shift_down(v)?)?
        }
        Expr::Pow(a, q) => unit_power(&eval_at(a, order)?, q)?,
        Expr::Call(Func::Sqrt, a) => unit_power(&eval_at(a, order)?, &Rational::new(1.into(), 2.into()))?,
        Expr::Call(Func::Log, a) => {
            let s = eval_at(a, order)?;
            if !s.coeff_ref(0).is_one() {
                return Err(EvalError::Domain("log needs constant term 1".into()));
            }
            s.log()?
        }
        Expr::Call(Func::Exp, a) => {
            let s = eval_at(a, order)?;
            if !s.coeff_ref(0).is_zero() {
                return Err(EvalError::Domain("exp needs constant term 0".into()));
            }
            s.exp()?
        }
    })
}

/// The series of `e` to order `order`.
pub fn eval(e: &Expr, order: usize) -> Result<Series<Rational>, EvalError> {
    let s = eval_at(e, order + GUARD)?;
    if s.order() < order {
        return Err(EvalError::Precision { needed: order, available: s.order() });
    }
    Ok(s.truncate(order))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(text: &str, order: usize) -> Vec<Rational> {
        eval(&parse_series(text).unwrap(), order).unwrap().into_coeffs()
    }

    #[test]
    fn precedence() {
        let e = parse_series("-x^2").unwrap();
        assert_eq!(e, Expr::Neg(Box::new(Expr::Pow(Box::new(Expr::X), int(2)))));
        let e = parse_series("1-x-x").unwrap();
        assert!(matches!(e, Expr::Sub(ref a, _) if matches!(**a, Expr::Sub(..))));
        assert_eq!(parse_series("x^2^3").unwrap(), Expr::Pow(Box::new(Expr::X), int(8)));
        assert_eq!(parse_series("x^4^(1/2)").unwrap(), Expr::Pow(Box::new(Expr::X), int(2)));
    }

    #[test]
    fn evaluation() {
        assert_eq!(coeffs("1/(1-x)", 4), vec![int(1); 5]);
        assert_eq!(coeffs("catalan", 4), [1, 2, 5, 14].iter().fold(vec![int(1)], |mut v, &c| { v.push(int(c)); v }));
        assert_eq!(coeffs("(1-sqrt(1-4*x))/(2*x)", 5), coeffs("catalan", 5));
        let root = eval(&parse_series("(1+x)^(1/2)").unwrap(), 8).unwrap();
        assert_eq!(root.mul(&root), eval(&parse_series("1+x").unwrap(), 8).unwrap());
        assert_eq!(coeffs("(4+x)^(1/2)", 1), vec![int(2), Rational::new(1.into(), 4.into())]);
        assert_eq!(coeffs("exp(log(1+x))", 6), coeffs("1+x", 6));
    }

    #[test]
    fn errors_carry_offsets() {
        let e = parse_series("1 + * x").unwrap_err();
        assert_eq!(e.offset, 4);
        assert!(e.expected.iter().any(|s| s == "x"));
        assert_eq!(parse_series("sqrt(x").unwrap_err().offset, 6);
        assert_eq!(parse_series("1 $").unwrap_err().offset, 2);
        assert!(parse_series("foo(x)").is_err());
        assert!(matches!(eval(&parse_series("1/x").unwrap(), 4), Err(EvalError::Pole)));
        assert!(matches!(eval(&parse_series("1/(x-x)").unwrap(), 4), Err(EvalError::DivisionByZero)));
        assert!(matches!(eval(&parse_series("(2+x)^(1/2)").unwrap(), 4), Err(EvalError::Domain(_))));
    }

    #[test]
    fn printing_round_trips() {
        for s in ["-x^2", "1 - (x - x)", "2*-x", "--x", "x^(-1/2)*(1 + x)", "sqrt(1 - 4*x)/(2*x)", "(x*x)^3", "x/(x/x)"] {
            let e = parse_series(s).unwrap();
            assert_eq!(parse_series(&e.to_string()).unwrap(), e, "{s} printed as {e}");
        }
    }
}
