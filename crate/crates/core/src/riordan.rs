//! Riordan pairs `(f(x), x g(x))`, their matrices and group law.

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::matrix::TriMatrix;
use crate::poly::Poly;
use crate::rational::{factorial, Rational};
use crate::ring::Ring;
use crate::series::Series;

/// The pair `(f, x g)`; both `f_0` and `g_0` are nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RiordanPair<R> {
    pub f: Series<R>,
    pub g: Series<R>,
}

impl<R: Ring> RiordanPair<R> {
    pub fn new(f: Series<R>, g: Series<R>) -> Result<Self> {
        if f.coeff_ref(0).is_zero() || g.coeff_ref(0).is_zero() {
            return Err(Error::BadConstantTerm("Riordan pairs need f0 != 0 and g0 != 0"));
        }
        Ok(RiordanPair { f, g })
    }

    /// Member `(1, x g)` of the Lagrange subgroup.
    pub fn lagrange(g: Series<R>) -> Result<Self> {
        let order = g.order();
        Self::new(Series::one(order), g)
    }

    /// Member `(g, x g)` of the Bell subgroup.
    pub fn bell(g: Series<R>) -> Result<Self> {
        Self::new(g.clone(), g)
    }

    pub fn identity(order: usize) -> Self {
        RiordanPair { f: Series::one(order), g: Series::one(order) }
    }

    pub fn order(&self) -> usize {
        self.f.order().min(self.g.order())
    }

    pub fn truncate(&self, order: usize) -> Self {
        RiordanPair { f: self.f.truncate(order), g: self.g.truncate(order) }
    }

    /// `x g(x)` as a series one order longer than `g`.
    pub fn xg(&self) -> Series<R> {
        self.g.shift_up(1)
    }

    /// Group law `(f, xg)(b, xa) = (f b(xg), x g a(xg))`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let xg = self.xg();
        let f = self.f.mul(&other.f.compose(&xg)?);
        let g = self.g.mul(&other.g.compose(&xg)?);
        Ok(RiordanPair { f, g })
    }

    /// Inverse via reversion of `x g`.
    pub fn inverse(&self) -> Result<Self> {
        let bar = self.xg().revert()?;
        let g = bar.shift_down(1)?;
        let f = self.f.compose(&bar)?.inverse()?;
        let order = self.order();
        Ok(RiordanPair { f: f.truncate(order), g: g.truncate(order) })
    }

    /// `(f(-x), x g(-x))`.
    pub fn reflect(&self) -> Self {
        RiordanPair { f: self.f.negate_arg(), g: self.g.negate_arg() }
    }

    /// `(f, xg)` applied to a column: `f(x) a(x g(x))`.
    pub fn apply(&self, a: &Series<R>) -> Result<Series<R>> {
        Ok(self.f.mul(&a.compose(&self.xg())?))
    }
}

impl RiordanPair<Rational> {
    /// Pascal power `P^φ = (1/(1-φx), 1/(1-φx))`.
    pub fn pascal_power(phi: &Rational, order: usize) -> Self {
        let g = Series::geometric(phi, order);
        RiordanPair { f: g.clone(), g }
    }
}

fn require_order<R: Ring>(p: &RiordanPair<R>, n: usize) -> Result<()> {
    if p.order() < n {
        return Err(Error::InsufficientOrder { needed: n, available: p.order() });
    }
    Ok(())
}

/// Columns `f, f g, f g^2, ...` up to `g^{max_power}`, each of the given order.
fn column_series<R: Ring>(p: &RiordanPair<R>, order: usize) -> Vec<Series<R>> {
    let f = p.f.truncate(order);
    let g = p.g.truncate(order);
    let mut cols = Vec::with_capacity(order + 1);
    let mut current = f;
    for _ in 0..=order {
        let next = current.mul(&g);
        cols.push(current);
        current = next;
    }
    cols
}

/// The `(N+1) x (N+1)` Riordan matrix: entry `(n, m)` is `[x^{n-m}] f g^m`.
pub fn build_riordan<R: Ring>(p: &RiordanPair<R>, order: usize) -> Result<TriMatrix<R>> {
    build_riordan_with(Execution::default(), p, order)
}

pub fn build_riordan_with<R: Ring>(exec: Execution, p: &RiordanPair<R>, order: usize) -> Result<TriMatrix<R>> {
    require_order(p, order)?;
    let cols = column_series(p, order);
    Ok(TriMatrix::from_fn_with(exec, order + 1, |n, m| cols[m].coeff(n - m)))
}

/// Exponential Riordan matrix: entry `(n, m)` scaled by `n!/m!`.
pub fn build_exp_riordan<R: Ring>(p: &RiordanPair<R>, order: usize) -> Result<TriMatrix<R>> {
    require_order(p, order)?;
    let cols = column_series(p, order);
    Ok(TriMatrix::from_fn(order + 1, |n, m| {
        let scale = Rational::new(factorial(n as u64), factorial(m as u64));
        cols[m].coeff(n - m).scale(&scale)
    }))
}

/// The A-function: `g(x) = A(x g(x))`, i.e. `A(y) = y / (x g)^{-1}(y)`.
pub fn a_sequence<R: Ring>(g: &Series<R>) -> Result<Series<R>> {
    let bar = g.shift_up(1).revert()?;
    let a = bar.shift_down(1)?.inverse()?;
    Ok(a.truncate(g.order()))
}

/// Whether `(f, xg)^{-1} = (f(-x), x g(-x))` to the given order.
///
/// Only `g_0 = 1` is treated in general; with `g_0 = -1` the pair must be
/// `(1, -x)` or `(-1, -x)`.
pub fn is_pseudo_involution<R: Ring>(p: &RiordanPair<R>, order: usize) -> bool {
    let g0 = p.g.coeff(0);
    if g0 == R::one().neg() {
        let constant = |s: &Series<R>| s.coeffs().iter().skip(1).all(Ring::is_zero);
        let f0 = p.f.coeff(0);
        return constant(&p.g) && constant(&p.f) && (f0.is_one() || f0 == R::one().neg());
    }
    if !g0.is_one() || p.order() < order {
        return false;
    }
    let p = p.truncate(order);
    match p.inverse() {
        Ok(inv) => inv == p.reflect(),
        Err(_) => false,
    }
}

/// `l_0, ..., l_N` with `l_n(φ) = [x^n] g^φ`.
pub fn conv_polys<R: Ring>(g: &Series<R>) -> Result<Vec<Poly<R>>> {
    Ok(g.pow_param()?.into_coeffs())
}

/// Checks `(φ + n) l_n(φ) = φ l~_n(φ + n)` where `l~` are the convolution
/// polynomials of the A-function, for every `n` up to the order of `g`.
pub fn lagrange_conv_relation<R: Ring>(g: &Series<R>) -> Result<bool> {
    let a = a_sequence(g)?;
    let l = conv_polys(g)?;
    let lt = conv_polys(&a)?;
    let phi = Poly::<R>::var();
    Ok((0..l.len()).all(|n| {
        let shift = R::from_int(n as i64);
        let lhs = phi.add(&Poly::constant(shift.clone())).mul(&l[n]);
        let rhs = phi.mul(&lt[n].shift(&shift));
        lhs == rhs
    }))
}
