//! B-sequences of pseudo-involutions `(1, x g)`: the defining identity
//! `g = 1 + x g B(x^2 g)`, the square-root decomposition, and the
//! B-expansion of the coefficients of `g^φ`.

use crate::combinat::{odd_partitions, OddPartition};
use crate::error::{Error, Result};
use crate::matrix::TriMatrix;
use crate::poly::Poly;
use crate::rational::{binomial, big, factorial, int, ratio, Rational};
use crate::riordan::{build_exp_riordan, build_riordan, RiordanPair};
use crate::ring::{falling_factorial, Ring};
use crate::series::Series;

/// The B-function `B(x) = b_0 + b_1 x + ...`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BFunction<R> {
    pub b: Series<R>,
}

impl<R: Ring> BFunction<R> {
    pub fn new(b: Series<R>) -> Self {
        BFunction { b }
    }

    /// A polynomial B, zero-padded to the given order.
    pub fn polynomial(coeffs: Vec<R>, order: usize) -> Self {
        BFunction { b: Series::from_coeffs(coeffs, order.max(1)) }
    }

    pub fn coeff(&self, k: usize) -> R {
        self.b.coeff(k)
    }

    pub fn order(&self) -> usize {
        self.b.order()
    }

    pub fn scale(&self, c: &R) -> Self {
        BFunction { b: self.b.scale(c) }
    }
}

/// Coefficients of B that can reach `[x^n] g`: `b_k` with `2k + 1 <= n`.
fn needed_b_order(order: usize) -> usize {
    order.saturating_sub(1) / 2
}

/// Tabulates `[x^j] g^p` for `p = 0..=max_power` as coefficients of `g`
/// are appended one at a time.
struct PowerTable<R> {
    g: Vec<R>,
    pow: Vec<Vec<R>>,
}

impl<R: Ring> PowerTable<R> {
    fn new(max_power: usize) -> Self {
        PowerTable { g: Vec::new(), pow: vec![Vec::new(); max_power + 1] }
    }

    fn push(&mut self, c: R) {
        self.g.push(c);
        let n = self.g.len() - 1;
        self.pow[0].push(if n == 0 { R::one() } else { R::zero() });
        for p in 1..self.pow.len() {
            let mut acc = R::zero();
            for i in 0..=n {
                if !self.g[i].is_zero() {
                    acc = acc.add(&self.g[i].mul(&self.pow[p - 1][n - i]));
                }
            }
            self.pow[p].push(acc);
        }
    }

    fn get(&self, p: usize, j: usize) -> &R {
        &self.pow[p][j]
    }
}

/// The solution of `g = 1 + x g (φB)(x^2 g)` to the given order, found one
/// coefficient at a time: `g_n = φ Σ_k b_k [x^{n-1-2k}] g^{k+1}`.
pub fn g_from_b<R: Ring>(b: &BFunction<R>, phi: &R, order: usize) -> Result<Series<R>> {
    let needed = needed_b_order(order);
    if order > 0 && b.order() < needed {
        return Err(Error::InsufficientOrder { needed, available: b.order() });
    }
    let scaled: Vec<R> = (0..=needed).map(|k| b.coeff(k).mul(phi)).collect();
    let mut table = PowerTable::new(needed + 1);
    table.push(R::one());
    for n in 1..=order {
        let mut acc = R::zero();
        for (k, bk) in scaled.iter().enumerate() {
            if 2 * k + 1 > n {
                break;
            }
            if !bk.is_zero() {
                acc = acc.add(&bk.mul(table.get(k + 1, n - 1 - 2 * k)));
            }
        }
        table.push(acc);
    }
    Ok(Series::new(table.g))
}

/// Recovers B from `g`: odd coefficients of the defining identity fix the
/// `b_k`, even ones must then hold identically.
pub fn b_from_g<R: Ring>(g: &Series<R>) -> Result<BFunction<R>> {
    if !g.coeff_ref(0).is_one() {
        return Err(Error::BadConstantTerm("B-sequences need g0 = 1"));
    }
    let order = g.order();
    let kmax = needed_b_order(order);
    let mut table = PowerTable::new(kmax + 1);
    for c in g.coeffs() {
        table.push(c.clone());
    }
    let mut b: Vec<R> = Vec::with_capacity(kmax + 1);
    for n in 1..=order {
        let mut acc = g.coeff(n);
        for (k, bk) in b.iter().enumerate() {
            if 2 * k + 1 > n {
                break;
            }
            acc = acc.sub(&bk.mul(table.get(k + 1, n - 1 - 2 * k)));
        }
        if n % 2 == 1 {
            b.push(acc);
        } else if !acc.is_zero() {
            return Err(Error::NotPseudoInvolution { index: n });
        }
    }
    if b.is_empty() {
        b.push(R::zero());
    }
    Ok(BFunction { b: Series::new(b) })
}

/// `(1, x g) = (1, x √g)(1, x h)` with `h = s + √(s^2 + 1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SqrtDecomposition<R> {
    pub sqrt_g: Series<R>,
    pub h: Series<R>,
    pub s: Series<R>,
}

pub fn sqrt_decompose<R: Ring>(g: &Series<R>) -> Result<SqrtDecomposition<R>> {
    b_from_g(g)?;
    let sqrt_g = g.sqrt()?;
    let inner = sqrt_g.shift_up(1).revert()?;
    let h = sqrt_g.compose(&inner)?;
    let half = ratio(1, 2);
    let s = h.sub(&h.inverse()?).scale_rational(&half);
    Ok(SqrtDecomposition { sqrt_g, h, s })
}

impl<R: Ring> SqrtDecomposition<R> {
    /// `B` read off `2 s(x) = x B(x^2)`.
    pub fn b_function(&self) -> BFunction<R> {
        let n = self.s.order();
        let two = int(2);
        let kmax = needed_b_order(n);
        BFunction { b: Series::from_fn(kmax, |k| self.s.coeff(2 * k + 1).scale(&two)) }
    }
}

/// Coefficient of `∏ b_i^{m_i}` in `[x^n] g^φ`, a polynomial in `φ`:
/// `φ (φ + k - 1)_{q-1} / ∏ m_i!`.
pub fn b_expansion_weight(p: &OddPartition) -> Poly<Rational> {
    let q = p.part_count();
    let k = p.weight();
    let phi = Poly::<Rational>::var();
    let start = phi.add(&Poly::constant(int(k as i64 - 1)));
    let denom: num_bigint::BigInt = p.multiplicities().iter().map(|&m| factorial(m as u64)).product();
    phi.mul(&falling_factorial(&start, q - 1)).scale(&Rational::new(1.into(), denom))
}

fn monomial<R: Ring>(b: &BFunction<R>, p: &OddPartition) -> R {
    let mut acc = R::one();
    for (i, &m) in p.multiplicities().iter().enumerate() {
        if m > 0 {
            acc = acc.mul(&b.coeff(i).pow(m as u32));
        }
    }
    acc
}

/// `[x^n] g^φ` as a polynomial in `φ` via the sum over partitions of `n`
/// into odd parts.
pub fn b_expansion<R: Ring>(b: &BFunction<R>, n: usize) -> Poly<R> {
    if n == 0 {
        return Poly::one();
    }
    let mut acc = Poly::zero();
    for p in odd_partitions(n, None) {
        let weight = b_expansion_weight(&p).map(|c| R::from_rational(c.clone()));
        acc = acc.add(&weight.map(|c| c.mul(&monomial(b, &p))));
    }
    acc
}

/// The monomials of `[x^n] g` (the case `φ = 1`) with their coefficients.
pub fn b1_terms(n: usize) -> Vec<(OddPartition, Rational)> {
    if n == 0 {
        return vec![(OddPartition::from_multiplicities(Vec::new()), int(1))];
    }
    odd_partitions(n, None)
        .into_iter()
        .map(|p| {
            let w = b_expansion_weight(&p).eval(&int(1));
            (p, w)
        })
        .collect()
}

/// `x ∏_{i=1}^{q-1} (x + q - 2i)`.
pub fn arcsinh_row_poly(q: usize) -> Poly<Rational> {
    let x = Poly::<Rational>::var();
    let mut acc = x.clone();
    for i in 1..q {
        acc = acc.mul(&x.add(&Poly::constant(int(q as i64 - 2 * i as i64))));
    }
    acc
}

/// `arcsinh x = log(x + √(x^2 + 1))` as the integral of `(1 + x^2)^{-1/2}`.
pub fn arcsinh_series(order: usize) -> Series<Rational> {
    let one_plus_x2 = Series::from_coeffs(vec![int(1), int(0), int(1)], order.saturating_sub(1));
    one_plus_x2.pow_rational(&ratio(-1, 2)).expect("unit constant term").integral()
}

/// Row `q` of `(1, log(x + √(x^2+1)))_E` against the product formula,
/// for every `q` up to `max_q`.
pub fn arcsinh_rows_check(max_q: usize) -> Result<bool> {
    let g = arcsinh_series(max_q + 1).shift_down(1)?;
    let m = build_exp_riordan(&RiordanPair::lagrange(g)?, max_q)?;
    Ok((1..=max_q).all(|q| m.row_poly(q).map(|p| p == arcsinh_row_poly(q)).unwrap_or(false)))
}

/// `g_n = (2m+1)/(2m+1+(m+1)n) binom(2m+1+(m+1)n, n)`.
pub fn example6_series(m: usize, order: usize) -> Series<Rational> {
    let a = 2 * m as i64 + 1;
    Series::from_fn(order, |n| {
        let top = a + (m as i64 + 1) * n as i64;
        Rational::new(a.into(), top.into()) * big(&binomial(top, n as i64))
    })
}

/// `((1 + x)/(1 - x)^2, x/(1 - x)^2)`; row `m` is the B-sequence of
/// [`example6_series`]`(m)`.
pub fn example6_triangle(order: usize) -> TriMatrix<Rational> {
    let denom = Series::from_coeffs(vec![int(1), int(-1)], order).pow_int(-2).expect("unit");
    let f = Series::from_coeffs(vec![int(1), int(1)], order).mul(&denom);
    build_riordan(&RiordanPair { f, g: denom }, order).expect("orders match")
}

/// `((1 + x^2)/(1 - x^2), x/(1 - x^2))`.
pub fn c_matrix(order: usize) -> TriMatrix<Rational> {
    let g = Series::from_coeffs(vec![int(1), int(0), int(-1)], order).inverse().expect("unit");
    let f = Series::from_coeffs(vec![int(1), int(0), int(1)], order).mul(&g);
    build_riordan(&RiordanPair { f, g }, order).expect("orders match")
}

/// `(1/(1 - x^2), x/(1 - x^2))`.
pub fn s_matrix(order: usize) -> TriMatrix<Rational> {
    let g = Series::from_coeffs(vec![int(1), int(0), int(-1)], order).inverse().expect("unit");
    build_riordan(&RiordanPair { f: g.clone(), g }, order).expect("orders match")
}

/// Row polynomials `(c_n, s_n)`.
pub fn cs_polys(n: usize) -> (Poly<Rational>, Poly<Rational>) {
    let c = c_matrix(n).row_poly(n).expect("in range");
    let s = s_matrix(n).row_poly(n).expect("in range");
    (c, s)
}

/// `s_{2m}^2 (x^2 + 4) = c_{2m+1}^2 + 4` and
/// `c_{2m}^2 = s_{2m-1}^2 (x^2 + 4) + 4` (the latter for `m >= 1`).
pub fn cs_identity_check(m: usize) -> bool {
    let four = Poly::constant(int(4));
    let x2_4 = Poly::new(vec![int(4), int(0), int(1)]);
    let (_, s2m) = cs_polys(2 * m);
    let (c2m1, _) = cs_polys(2 * m + 1);
    let first = s2m.mul(&s2m).mul(&x2_4) == c2m1.mul(&c2m1).add(&four);
    let second = m == 0 || {
        let (c2m, _) = cs_polys(2 * m);
        let (_, s2m1) = cs_polys(2 * m - 1);
        c2m.mul(&c2m) == s2m1.mul(&s2m1).mul(&x2_4).add(&four)
    };
    first && second
}

/// Both sides of the tree-function factorization at a rational `φ`:
/// `(1, x Σ 2(2+n)^{n-1} φ^n x^n/n!)` and
/// `(1, x Σ (1+n)^{n-1} φ^n x^n/n!)(1, x e^{φx})`.
pub fn example4_sides(phi: &Rational, order: usize) -> Result<(RiordanPair<Rational>, RiordanPair<Rational>)> {
    let term = |base: i64, scale: i64, n: usize| -> Rational {
        let mut p = Rational::from_integer(scale.into());
        let e = n as i64 - 1;
        p *= crate::rational::pow_i64(&int(base + n as i64), e);
        p * crate::rational::pow_i64(phi, n as i64) / big(&factorial(n as u64))
    };
    let lhs = Series::from_fn(order, |n| term(2, 2, n));
    let tree = Series::from_fn(order, |n| term(1, 1, n));
    let exp_phi = Series::from_fn(order, |n| crate::rational::pow_i64(phi, n as i64) / big(&factorial(n as u64)));
    let left = RiordanPair::lagrange(lhs)?;
    let right = RiordanPair::lagrange(tree)?.mul(&RiordanPair::lagrange(exp_phi)?)?;
    Ok((left, right.truncate(order)))
}
