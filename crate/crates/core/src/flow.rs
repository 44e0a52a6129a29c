//! Logarithms and flows of Bell-subgroup matrices `(g, x g)`.
//!
//! `log(g, xg) = (b, x) D^T` where `D^T` sends `x^n` to `(n+1) x^{n+1}`;
//! the rows of `L(g)` are the composition polynomials `c_n` with
//! `g^{(φ)} = Σ c_n(φ) x^n`.

use crate::combinat::compositions;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::matrix::TriMatrix;
use crate::poly::Poly;
use crate::rational::{int, Rational};
use crate::riordan::{build_riordan, RiordanPair};
use crate::ring::Ring;
use crate::series::Series;

/// Solves `v(G) = v(x) G'(x)` for the flow generator `v = Σ_{j>=1} w_j x^{j+1}`
/// of `G = x h(x)`, `h_0 = 1`. The first `j` with `h_j != 0` fixes the
/// normalization `w_j = h_j`; later `w_J` follow from the coefficient of
/// `x^{J+1+j}`. Returns `v` of order `h.order() + 1`.
pub fn flow_generator<R: Ring>(h: &Series<R>) -> Result<Series<R>> {
    if !h.coeff_ref(0).is_one() {
        return Err(Error::BadConstantTerm("flow generator needs G = x + ..."));
    }
    let order = h.order();
    let mut v = Series::zero(order + 1);
    let Some(lead) = (1..=order).find(|&j| !h.coeff_ref(j).is_zero()) else {
        return Ok(v);
    };
    let lead_inv = h.coeff_ref(lead).try_inv().ok_or(Error::NotInvertible("leading coefficient"))?;
    let dx = h.shift_up(1).derivative();
    // u[j] = h^{j+1} - (x h)', so that v(G) - v G' = Σ_j w_j x^{j+1} u[j];
    // u[j] starts (j - lead) h_lead x^lead.
    let mut u: Vec<Series<R>> = vec![Series::zero(order)];
    let mut power = h.clone();
    for _ in 1..=order {
        power = power.mul(h);
        u.push(power.sub(&dx));
    }
    let mut w: Vec<R> = vec![R::zero(); order + 1];
    w[lead] = h.coeff(lead);
    for big_j in lead + 1..=order {
        let target = big_j + lead;
        let mut acc = R::zero();
        for (j, wj) in w.iter().enumerate().take(big_j).skip(lead) {
            if !wj.is_zero() {
                acc = acc.add(&wj.mul(&u[j].coeff(target - j)));
            }
        }
        let step = Rational::new(1.into(), (big_j as i64 - lead as i64).into());
        w[big_j] = acc.neg().mul(&lead_inv).scale(&step);
    }
    for (j, wj) in w.into_iter().enumerate().skip(1) {
        v.set_coeff(j + 1, wj);
    }
    Ok(v)
}

/// The generator `b` of `log(g, xg) = (b, x) D^T`; `b_0 = g_1`, order
/// `g.order() - 1`.
pub fn bell_log_generator<R: Ring>(g: &Series<R>) -> Result<Series<R>> {
    if g.order() == 0 {
        return Err(Error::InsufficientOrder { needed: 1, available: 0 });
    }
    flow_generator(g)?.shift_down(2)
}

/// `log M = Σ (-1)^{n-1}/n (M - I)^n`, finite because `M - I` is nilpotent.
pub fn matrix_log(m: &TriMatrix<Rational>) -> TriMatrix<Rational> {
    let size = m.size();
    let nil = m.sub(&TriMatrix::identity(size));
    let mut acc = TriMatrix::from_fn_with(Execution::Sequential, size, |_, _| int(0));
    let mut power = nil.clone();
    for n in 1..size.max(1) {
        let c = Rational::new(if n % 2 == 1 { 1 } else { -1 }.into(), (n as i64).into());
        acc = acc.add(&power.scale(&c));
        power = power.mul(&nil);
    }
    acc
}

/// `D^T a = Σ (n+1) a_n x^{n+1}` at a fixed order.
fn raise<R: Ring>(a: &Series<R>) -> Series<R> {
    let order = a.order();
    Series::from_fn(order, |n| if n == 0 { R::zero() } else { a.coeff(n - 1).scale(&int(n as i64)) })
}

/// `L(g)`: column 0 is `1`, column `n` is `(1/n) b D^T` applied to column
/// `n-1`. Rows are the composition polynomials.
pub fn l_matrix<R: Ring>(g: &Series<R>, order: usize) -> Result<TriMatrix<R>> {
    let b = bell_log_generator(g)?;
    l_matrix_from_generator(&b, order)
}

pub fn l_matrix_from_generator<R: Ring>(b: &Series<R>, order: usize) -> Result<TriMatrix<R>> {
    if order > 0 && b.order() < order - 1 {
        return Err(Error::InsufficientOrder { needed: order - 1, available: b.order() });
    }
    let b = Series::from_coeffs(b.coeffs().to_vec(), order);
    let mut cols = vec![Series::one(order)];
    for n in 1..=order {
        let next = b.mul(&raise(&cols[n - 1])).scale_rational(&Rational::new(1.into(), (n as i64).into()));
        cols.push(next);
    }
    Ok(TriMatrix::from_columns(&cols))
}

/// `g^{(φ)}` from `(g, xg)^φ = Σ binom(φ, n) ((g, xg) - I)^n`.
pub fn bell_power(g: &Series<Rational>, phi: &Rational, order: usize) -> Result<Series<Rational>> {
    let m = build_riordan(&RiordanPair::bell(g.clone())?, order)?;
    let size = m.size();
    let nil = m.sub(&TriMatrix::identity(size));
    let mut acc = TriMatrix::identity(size);
    let mut power = TriMatrix::identity(size);
    let mut binom = int(1);
    for n in 1..size {
        binom = binom * (phi - int(n as i64 - 1)) / int(n as i64);
        power = power.mul(&nil);
        acc = acc.add(&power.scale(&binom));
    }
    acc.col_gf(0)
}

/// `Σ_m t^m/m! Σ_{i_1+...+i_m = n} z (z+i_1) ... (z+i_1+...+i_{m-1}) w_{i_1} ... w_{i_m}`,
/// a polynomial in `t`. With `w_i = b_{i-1}` and `z = β` this is
/// `[x^n] (g^{(t)})^β`; with `w_i = ω_i` it is `[x^n] (g^{(t)}/x)^z` in the
/// Lagrange subgroup.
pub fn composition_convolution<R: Ring>(weights: impl Fn(usize) -> R, z: &R, n: usize) -> Poly<R> {
    if n == 0 {
        return Poly::one();
    }
    let mut out = vec![R::zero(); n + 1];
    let mut fact = int(1);
    for m in 1..=n {
        fact *= int(m as i64);
        let mut acc = R::zero();
        for comp in compositions(n, Some(m)) {
            let mut term = z.clone();
            let mut partial = 0;
            for (idx, &i) in comp.iter().enumerate() {
                term = term.mul(&weights(i));
                if term.is_zero() {
                    break;
                }
                if idx + 1 < comp.len() {
                    partial += i;
                    term = term.mul(&z.add(&R::from_int(partial as i64)));
                }
            }
            acc = acc.add(&term);
        }
        out[m] = acc.scale(&fact.recip());
    }
    Poly::new(out)
}

/// `c_n(φ)` from the composition sum over the coefficients of `b`.
pub fn c_poly_formula<R: Ring>(b: &Series<R>, n: usize) -> Poly<R> {
    composition_convolution(|i| b.coeff(i - 1), &R::one(), n)
}

/// `c_n(β, φ) = [x^n] (g^{(φ)})^β` at a given `β`.
pub fn c_beta_poly<R: Ring>(b: &Series<R>, n: usize, beta: &R) -> Poly<R> {
    composition_convolution(|i| b.coeff(i - 1), beta, n)
}

/// `c_n(β, φ)` with `β` symbolic: outer variable `φ`, inner `β`.
pub fn c_beta_poly_symbolic(b: &Series<Rational>, n: usize) -> Poly<Poly<Rational>> {
    let lifted = b.lift();
    composition_convolution(|i| lifted.coeff(i - 1), &Poly::var(), n)
}

/// Parity of the composition polynomials: `c_{2n}` even and `c_{2n+1}` odd.
pub fn parity_check<R: Ring>(l: &TriMatrix<R>) -> bool {
    (0..l.size()).all(|n| {
        let row = l.row_poly(n).expect("in range");
        if n % 2 == 0 {
            row.is_even()
        } else {
            row.is_odd()
        }
    })
}

/// Compares the matrix power `g^{(φ)}` with the B-scaled series `g^{[φ]}`;
/// `None` when `g` has no B-sequence.
pub fn power_vs_b_scaling(g: &Series<Rational>, phi: &Rational) -> Result<Option<bool>> {
    let Ok(b) = crate::pseudo::b_from_g(g) else {
        return Ok(None);
    };
    let order = g.order();
    let power = bell_power(g, phi, order)?;
    let scaled = crate::pseudo::g_from_b(&b, phi, order)?;
    Ok(Some(power == scaled))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::series::geom;

    #[test]
    fn example1_identity_pair() {
        let b = bell_log_generator(&geom(10)).unwrap();
        assert_eq!(b, Series::one(9));
        let l = l_matrix(&geom(10), 10).unwrap();
        assert_eq!(l, TriMatrix::identity(11));
    }

    #[test]
    fn generator_of_one_is_zero() {
        assert!(bell_log_generator(&Series::<Rational>::one(6)).unwrap().is_zero());
    }

    #[test]
    fn generator_matches_matrix_log() {
        let g = Series::new(vec![int(1), int(2), int(-1), int(3), int(0), int(5), int(1), int(-2)]);
        let b = bell_log_generator(&g).unwrap();
        let m = build_riordan(&RiordanPair::bell(g.clone()).unwrap(), 7).unwrap();
        let log = matrix_log(&m);
        // column 0 of (b, x) D^T is x b(x)
        let col = log.col_gf(0).unwrap().shift_down(1).unwrap();
        assert_eq!(col.truncate(b.order()), b);
    }

    #[test]
    fn composition_sums() {
        let b = Series::new(vec![int(2), int(3), int(0), int(0)]);
        // c_2 = φ b_1 + φ^2 b_0^2
        assert_eq!(c_poly_formula(&b, 2).coeffs(), &[int(0), int(3), int(4)]);
        let one = Series::<Rational>::one(5);
        assert_eq!(c_poly_formula(&one, 2).coeffs(), &[int(0), int(0), int(1)]);
        assert_eq!(c_beta_poly(&b, 4, &int(1)), c_poly_formula(&b, 4));
    }

    #[test]
    fn bell_power_at_one_and_minus_one() {
        let g = crate::pseudo::g_from_b(&crate::pseudo::BFunction::new(geom(6)), &int(1), 10).unwrap();
        assert_eq!(bell_power(&g, &int(1), 10).unwrap(), g);
        assert_eq!(bell_power(&g, &int(-1), 10).unwrap(), g.negate_arg());
        assert_eq!(power_vs_b_scaling(&g, &ratio(1, 3)).unwrap(), Some(true));
    }
}
