//! Dense univariate polynomials over a [`Ring`], used for the formal
//! parameters (φ, z, β, t) that appear as exponents and scalings.
//!
//! The parameter's name is not stored in the value; it is supplied when the
//! polynomial is rendered (see [`Poly::render`]).

use crate::rational::Rational;
use crate::ring::Ring;

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The parameter itself.
    pub fn var() -> Self {
        Self::new(vec![R::zero(), R::one()])
    }

    /// `c * p^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn eval(&self, at: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.mul(at).add(c))
    }

    /// Substitutes another polynomial for the parameter.
    pub fn compose(&self, inner: &Poly<R>) -> Poly<R> {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| acc.mul(inner).add(&Poly::constant(c.clone())))
    }

    /// `p(x + shift)`.
    pub fn shift(&self, shift: &R) -> Poly<R> {
        self.compose(&Poly::new(vec![shift.clone(), R::one()]))
    }

    /// `p(c x)`.
    pub fn scale_arg(&self, c: &R) -> Poly<R> {
        let mut power = R::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.mul(&power));
            power = power.mul(c);
        }
        Poly::new(coeffs)
    }

    /// `p(x^k)`.
    pub fn substitute_power(&self, k: usize) -> Poly<R> {
        let mut coeffs = vec![R::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = a.clone();
        }
        Poly::new(coeffs)
    }

    pub fn derivative(&self) -> Poly<R> {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a.scale(&crate::rational::int(i as i64)))
                .collect(),
        )
    }

    /// Exact division by a monic-free divisor; `None` if not divisible.
    pub fn div_exact(&self, divisor: &Poly<R>) -> Option<Poly<R>> {
        let d = divisor.degree()?;
        let lead_inv = divisor.coeffs[d].try_inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return self.is_zero().then(Poly::zero);
        }
        let mut quotient = vec![R::zero(); rem.len() - d];
        for k in (0..quotient.len()).rev() {
            let q = rem[k + d].mul(&lead_inv);
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&q.mul(c));
            }
            quotient[k] = q;
        }
        rem.iter().all(Ring::is_zero).then(|| Poly::new(quotient))
    }

    /// Even part test: all odd-degree coefficients vanish.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Ring::is_zero)
    }

    pub fn is_odd(&self) -> bool {
        self.coeffs.iter().step_by(2).all(Ring::is_zero)
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Poly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect())
    }
    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }
    fn neg(&self) -> Self {
        self.map(Ring::neg)
    }
    fn from_rational(q: Rational) -> Self {
        Poly::constant(R::from_rational(q))
    }
    fn scale(&self, q: &Rational) -> Self {
        self.map(|c| c.scale(q))
    }
    fn try_inv(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => c.try_inv().map(Poly::constant),
            _ => None,
        }
    }
    fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.as_slice() {
            [] => Some(crate::rational::int(0)),
            [c] => c.as_rational(),
            _ => None,
        }
    }
}

/// Rendering of ring elements given names for their (nested) parameters,
/// outermost first.
pub trait Render {
    fn render(&self, vars: &[&str]) -> String;
}

impl Render for Rational {
    fn render(&self, _vars: &[&str]) -> String {
        self.to_string()
    }
}

impl<R: Ring + Render> Render for Poly<R> {
    fn render(&self, vars: &[&str]) -> String {
        let (var, rest) = vars.split_first().map_or(("x", &[][..]), |(v, r)| (*v, r));
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let body = c.render(rest);
            let compound = body.chars().skip(1).any(|ch| ch == '+' || ch == '-');
            let coef = if compound { format!("({body})") } else { body };
            let term = match k {
                0 => coef,
                _ => {
                    let mono = if k == 1 { var.to_string() } else { format!("{var}^{k}") };
                    match coef.as_str() {
                        "1" => mono,
                        "-1" => format!("-{mono}"),
                        _ => format!("{coef}*{mono}"),
                    }
                }
            };
            terms.push(term);
        }
        let mut out = String::new();
        for (i, t) in terms.iter().enumerate() {
            if i == 0 {
                out.push_str(t);
            } else if let Some(stripped) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
        out
    }
}
