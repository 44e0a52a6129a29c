//! Truncated formal power series `a_0 + a_1 x + ... + a_N x^N` over a [`Ring`].
//!
//! Every series carries its order `N` explicitly. Binary operations work
//! modulo `x^{N+1}` with `N` the smaller of the two orders.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{int, Rational};
use crate::ring::Ring;

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Series<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Series<R> {
    /// Series whose order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least x^0");
        Series { coeffs }
    }

    /// Builds a series of the given order, padding or truncating `coeffs`.
    pub fn from_coeffs(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        Series { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        Series { coeffs: (0..=order).map(f).collect() }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        Self::from_coeffs(vec![c], order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(R::one(), 1, order)
    }

    pub fn monomial(c: R, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// `1/(1 - c x)`.
    pub fn geometric(c: &R, order: usize) -> Self {
        let mut power = R::one();
        Self::from_fn(order, |_| {
            let out = power.clone();
            power = power.mul(c);
            out
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// `[x^n]`, zero beyond the stored order.
    pub fn coeff(&self, n: usize) -> R {
        self.coeffs.get(n).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeff_ref(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn set_coeff(&mut self, n: usize, c: R) {
        self.coeffs[n] = c;
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs[..=order.min(self.order())].to_vec(), order.min(self.order()))
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Series<S> {
        Series { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |i| self.coeffs[i].add(&other.coeffs[i]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |i| self.coeffs[i].sub(&other.coeffs[i]))
    }

    pub fn neg(&self) -> Self {
        self.map(Ring::neg)
    }

    /// Cauchy product.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Series { coeffs: out }
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.mul(c))
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.map(|a| a.scale(q))
    }

    pub fn add_constant(&self, c: &R) -> Self {
        let mut out = self.clone();
        out.coeffs[0] = out.coeffs[0].add(c);
        out
    }

    pub fn pow_int(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one(self.order());
        let mut power = base;
        let mut e = exp.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&power);
            }
            e >>= 1;
            if e > 0 {
                power = power.mul(&power);
            }
        }
        Ok(acc)
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .try_inv()
            .ok_or(Error::BadConstantTerm("constant term is not invertible"))?;
        let n = self.order();
        let mut out: Vec<R> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = R::zero();
            for i in 1..=k {
                acc = acc.add(&self.coeffs[i].mul(&out[k - i]));
            }
            out.push(acc.neg().mul(&inv0));
        }
        Ok(Series { coeffs: out })
    }

    /// Quotient `self / other` when `other` has a unit constant term.
    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Multiplication by `x^k`; the order grows by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// Division by `x^k`; the order drops by `k`. Fails if a dropped
    /// coefficient is nonzero.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::InsufficientOrder { needed: k, available: self.order() });
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotInvertible("series is not divisible by the requested power of x"));
        }
        Ok(Series { coeffs: self.coeffs[k..].to_vec() })
    }

    /// `a(c x)`.
    pub fn scale_arg(&self, c: &R) -> Self {
        let mut power = R::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let out = a.mul(&power);
                power = power.mul(c);
                out
            })
            .collect();
        Series { coeffs }
    }

    /// `a(-x)`.
    pub fn negate_arg(&self) -> Self {
        Self::from_fn(self.order(), |i| {
            if i % 2 == 1 {
                self.coeffs[i].neg()
            } else {
                self.coeffs[i].clone()
            }
        })
    }

    /// `a(x^k)` for `k >= 1`, keeping every coefficient that is determined.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        let order = k * (self.order() + 1) - 1;
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            out.coeffs[i * k] = a.clone();
        }
        out
    }

    /// Composition `a(g(x))`; `g` must have zero constant term.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstant);
        }
        let n = self.order().min(g.order());
        let g = g.truncate(n);
        let mut acc = Self::constant(self.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            acc = acc.mul(&g).add_constant(&self.coeffs[k]);
        }
        Ok(acc)
    }

    /// Compositional inverse of `g` with `g_0 = 0` and `g_1` a unit, by
    /// Lagrange inversion: `[x^n] g^{-1} = (1/n) [x^{n-1}] (x/g)^n`.
    pub fn revert(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NotReversible("constant term must vanish"));
        }
        let n = self.order();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        if self.coeffs[1].try_inv().is_none() {
            return Err(Error::NotReversible("linear coefficient must be a unit"));
        }
        let quotient = self.shift_down(1)?;
        let psi = quotient.inverse()?;
        let mut out = Self::zero(n);
        let mut power = Self::one(n - 1);
        let psi = psi.truncate(n - 1);
        for k in 1..=n {
            power = power.mul(&psi);
            out.coeffs[k] = power.coeffs[k - 1].scale(&Rational::new(1.into(), (k as i64).into()));
        }
        Ok(out)
    }

    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self::from_fn(self.order() - 1, |i| self.coeffs[i + 1].scale(&int(i as i64 + 1)))
    }

    /// Antiderivative with zero constant term; the order grows by one.
    pub fn integral(&self) -> Self {
        let mut coeffs = vec![R::zero()];
        for (i, a) in self.coeffs.iter().enumerate() {
            coeffs.push(a.scale(&Rational::new(1.into(), (i as i64 + 1).into())));
        }
        Series { coeffs }
    }

    fn require_unit_constant(&self) -> Result<()> {
        if self.coeffs[0].is_one() {
            Ok(())
        } else {
            Err(Error::BadConstantTerm("constant term must be 1"))
        }
    }

    pub fn log(&self) -> Result<Self> {
        self.require_unit_constant()?;
        let n = self.order();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let quotient = self.derivative().div(&self.truncate(n - 1))?;
        Ok(quotient.integral())
    }

    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm("exp needs zero constant term"));
        }
        let n = self.order();
        let mut out: Vec<R> = vec![R::one()];
        for m in 1..=n {
            let mut acc = R::zero();
            for k in 1..=m {
                acc = acc.add(&self.coeffs[k].scale(&int(k as i64)).mul(&out[m - k]));
            }
            out.push(acc.scale(&Rational::new(1.into(), (m as i64).into())));
        }
        Ok(Series { coeffs: out })
    }

    pub fn sqrt(&self) -> Result<Self> {
        self.require_unit_constant()?;
        let n = self.order();
        let half = Rational::new(1.into(), 2.into());
        let mut out: Vec<R> = vec![R::one()];
        for m in 1..=n {
            let mut acc = self.coeffs[m].clone();
            for k in 1..m {
                acc = acc.sub(&out[k].mul(&out[m - k]));
            }
            out.push(acc.scale(&half));
        }
        Ok(Series { coeffs: out })
    }

    /// `a^r` for a ring-valued exponent `r`, with `a_0 = 1`, by the
    /// recurrence `n p_n = Σ_{k=1}^{n} ((r+1)k - n) a_k p_{n-k}`.
    pub fn pow_ring(&self, r: &R) -> Result<Self> {
        self.require_unit_constant()?;
        let n = self.order();
        let mut out: Vec<R> = vec![R::one()];
        for m in 1..=n {
            let mut acc = R::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let weight = r.scale(&int(k as i64)).add(&R::from_int(k as i64 - m as i64));
                acc = acc.add(&weight.mul(&self.coeffs[k]).mul(&out[m - k]));
            }
            out.push(acc.scale(&Rational::new(1.into(), (m as i64).into())));
        }
        Ok(Series { coeffs: out })
    }

    pub fn pow_rational(&self, q: &Rational) -> Result<Self> {
        self.pow_ring(&R::from_rational(q.clone()))
    }

    /// Coefficientwise embedding into the polynomial ring over `R`.
    pub fn lift(&self) -> Series<Poly<R>> {
        self.map(|c| Poly::constant(c.clone()))
    }

    /// `a^φ` with `φ` a formal parameter: `[x^n]` is a polynomial in `φ` of
    /// degree at most `n`.
    pub fn pow_param(&self) -> Result<Series<Poly<R>>> {
        self.lift().pow_ring(&Poly::var())
    }

    pub fn truncate_to(&self, other: &Self) -> Self {
        self.truncate(other.order())
    }
}

impl<R: Ring> Series<Poly<R>> {
    /// Substitutes a value for the parameter in every coefficient.
    pub fn eval_param(&self, at: &R) -> Series<R> {
        self.map(|p| p.eval(at))
    }
}

/// `1/(1-x)`.
pub fn geom(order: usize) -> Series<Rational> {
    Series::geometric(&int(1), order)
}

pub fn one_plus_x(order: usize) -> Series<Rational> {
    Series::from_coeffs(vec![int(1), int(1)], order)
}

/// Catalan series `C(x)`, `C = 1 + x C^2`.
pub fn catalan(order: usize) -> Series<Rational> {
    Series::from_fn(order, |n| crate::rational::big(&crate::rational::catalan(n as u64)))
}

/// `e^x`.
pub fn exp_x(order: usize) -> Series<Rational> {
    Series::from_fn(order, |n| Rational::new(1.into(), crate::rational::factorial(n as u64)))
}
