//! Factorizations of `(1, g)`, `g = x + g_2 x^2 + ...`, into the elementary
//! matrices `P_k^α = (1, x (1 - kα x^k)^{-1/k})`.
//!
//! Products follow `(1, a)(1, b) = (1, b(a(x)))`. The alpha expansion is
//! `(1, g) = ... P_2^{α_2} P_1^{α_1}`, so `g = p_1 ∘ p_2 ∘ ...`; the beta
//! expansion is `(1, g) = P_1^{β_1} P_2^{β_2} ...`, so `g = ... ∘ p_2 ∘ p_1`.

use crate::combinat::{multiplicities, partitions};
use crate::error::{Error, Result};
use crate::flow::flow_generator;
use crate::poly::Poly;
use crate::rational::{factorial, int, Rational};
use crate::ring::Ring;
use crate::series::Series;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Alpha,
    Beta,
}

/// Exponents `c_1, c_2, ...` of one of the two factorizations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaBetaExpansion<R> {
    pub side: Side,
    pub coeffs: Vec<R>,
}

impl<R: Ring> AlphaBetaExpansion<R> {
    /// The exponent of `P_k`, zero past the stored range.
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k - 1).cloned().unwrap_or_else(R::zero)
    }

    pub fn scale(&self, t: &R) -> Self {
        AlphaBetaExpansion { side: self.side, coeffs: self.coeffs.iter().map(|c| c.mul(t)).collect() }
    }

    pub fn neg(&self) -> Self {
        AlphaBetaExpansion { side: self.side, coeffs: self.coeffs.iter().map(Ring::neg).collect() }
    }

    pub fn with_side(&self, side: Side) -> Self {
        AlphaBetaExpansion { side, coeffs: self.coeffs.clone() }
    }

    pub fn lift(&self) -> AlphaBetaExpansion<Poly<R>> {
        AlphaBetaExpansion { side: self.side, coeffs: self.coeffs.iter().cloned().map(Poly::constant).collect() }
    }

    /// `Σ c_n x^{n+1}`.
    pub fn generating_series(&self, order: usize) -> Series<R> {
        Series::from_fn(order, |n| if n >= 2 { self.coeff(n - 1) } else { R::zero() })
    }
}

/// `x (1 - kα x^k)^{-1/k} = Σ_n (1 (1+k) ... (1+(n-1)k))/n! α^n x^{1+nk}`.
pub fn p_k_series<R: Ring>(k: usize, alpha: &R, order: usize) -> Series<R> {
    assert!(k >= 1);
    let mut s = Series::zero(order);
    let mut n = 0;
    let mut coeff = Rational::from_integer(1.into());
    let mut power = R::one();
    while n * k < order {
        s.set_coeff(1 + n * k, power.scale(&coeff));
        coeff = coeff * int(1 + (n * k) as i64) / int(n as i64 + 1);
        power = power.mul(alpha);
        n += 1;
    }
    s
}

fn require_normalized<R: Ring>(g: &Series<R>) -> Result<()> {
    if g.order() >= 1 && g.coeff_ref(0).is_zero() && g.coeff_ref(1).is_one() {
        Ok(())
    } else {
        Err(Error::NotNormalized)
    }
}

/// Peels `p_k^{-α_k}` off the outside, choosing `α_k` as the `x^{k+1}`
/// coefficient of what remains.
pub fn alpha_expand<R: Ring>(g: &Series<R>) -> Result<AlphaBetaExpansion<R>> {
    require_normalized(g)?;
    let order = g.order();
    let mut rest = g.clone();
    let mut coeffs = Vec::new();
    for k in 1..order {
        let a = rest.coeff(k + 1);
        if !a.is_zero() {
            rest = p_k_series(k, &a.neg(), order).compose(&rest)?;
        }
        coeffs.push(a);
    }
    Ok(AlphaBetaExpansion { side: Side::Alpha, coeffs })
}

/// Peels `p_k^{-β_k}` off the inside.
pub fn beta_expand<R: Ring>(g: &Series<R>) -> Result<AlphaBetaExpansion<R>> {
    require_normalized(g)?;
    let order = g.order();
    let mut rest = g.clone();
    let mut coeffs = Vec::new();
    for k in 1..order {
        let b = rest.coeff(k + 1);
        if !b.is_zero() {
            rest = rest.compose(&p_k_series(k, &b.neg(), order))?;
        }
        coeffs.push(b);
    }
    Ok(AlphaBetaExpansion { side: Side::Beta, coeffs })
}

/// Multiplies the factors back together; factors past `P_{order-1}` do not
/// touch the stored coefficients.
pub fn reconstruct<R: Ring>(e: &AlphaBetaExpansion<R>, order: usize) -> Series<R> {
    let mut acc = Series::x(order);
    let ks: Vec<usize> = match e.side {
        Side::Alpha => (1..order).rev().collect(),
        Side::Beta => (1..order).collect(),
    };
    for k in ks {
        let c = e.coeff(k);
        if !c.is_zero() {
            acc = p_k_series(k, &c, order).compose(&acc).expect("zero constant term");
        }
    }
    acc
}

/// `g_α^{(t)}` or `g_β^{(t)}`: the expansion with every exponent scaled by `t`.
pub fn g_family<R: Ring>(e: &AlphaBetaExpansion<R>, t: &R, order: usize) -> Series<R> {
    reconstruct(&e.scale(t), order)
}

/// The family with `t` kept symbolic.
pub fn g_family_symbolic(e: &AlphaBetaExpansion<Rational>, order: usize) -> Series<Poly<Rational>> {
    g_family(&e.lift(), &Poly::var(), order)
}

/// One term of `s_n(c_i, z)`: the partition as `(part, multiplicity)` pairs
/// and the coefficient of `∏ c_i^{m_i}` as a polynomial in `z`.
pub type SPolyTerm = (Vec<(usize, usize)>, Poly<Rational>);

/// Terms of `s_n(α_i, z)` (parts read non-decreasingly) or `s_n(β_i, z)`
/// (non-increasingly): `z (z + i_1) ... (z + i_1 + ... + i_{m-1}) / ∏ m_i!`.
pub fn s_terms(side: Side, n: usize) -> Vec<SPolyTerm> {
    let z = Poly::<Rational>::var();
    partitions(n)
        .into_iter()
        .map(|mut parts| {
            let mult = multiplicities(&parts);
            if side == Side::Beta {
                parts.reverse();
            }
            let mut w = z.clone();
            let mut partial = 0;
            for &i in &parts[..parts.len().saturating_sub(1)] {
                partial += i;
                w = w.mul(&z.add(&Poly::constant(int(partial as i64))));
            }
            let denom: num_bigint::BigInt = mult.iter().map(|&(_, m)| factorial(m as u64)).product();
            (mult, w.scale(&Rational::new(1.into(), denom)))
        })
        .collect()
}

fn s_poly(side: Side, n: usize, coeffs: &[Rational]) -> Poly<Rational> {
    if n == 0 {
        return Poly::one();
    }
    let mut acc = Poly::zero();
    for (mult, w) in s_terms(side, n) {
        let mut c = int(1);
        for (part, m) in mult {
            c *= crate::rational::pow_i64(&coeffs[part - 1], m as i64);
        }
        acc = acc.add(&w.scale(&c));
    }
    acc
}

/// `s_n(α_i, z)` as a polynomial in `z`; `alphas[0]` is `α_1`.
pub fn s_alpha_poly(n: usize, alphas: &[Rational]) -> Poly<Rational> {
    s_poly(Side::Alpha, n, alphas)
}

pub fn s_beta_poly(n: usize, betas: &[Rational]) -> Poly<Rational> {
    s_poly(Side::Beta, n, betas)
}

/// `ω` with `ω(g) = ω g'`, `ω = Σ ω_n x^{n+1}`, `ω_1 = g_2`.
pub fn omega_generator<R: Ring>(g: &Series<R>) -> Result<Series<R>> {
    require_normalized(g)?;
    flow_generator(&g.shift_down(1)?)
}

/// `z s_n(α, -z-n) = (z + n) s_n(β, z)` with `β = -α`, and the same with
/// the roles of the two sides exchanged.
pub fn lagrange_relation_check(coeffs: &[Rational], n: usize) -> bool {
    let z = Poly::<Rational>::var();
    let reflect = Poly::new(vec![int(-(n as i64)), int(-1)]);
    let z_plus_n = z.add(&Poly::constant(int(n as i64)));
    let negated: Vec<Rational> = coeffs.iter().map(|c| -c.clone()).collect();
    let first = z.mul(&s_alpha_poly(n, coeffs).compose(&reflect)) == z_plus_n.mul(&s_beta_poly(n, &negated));
    let second = z.mul(&s_beta_poly(n, coeffs).compose(&reflect)) == z_plus_n.mul(&s_alpha_poly(n, &negated));
    first && second
}

/// `(1, a)(1, b) = (1, b ∘ a)`.
fn mat_mul(a: &Series<Rational>, b: &Series<Rational>) -> Series<Rational> {
    b.compose(a).expect("zero constant term")
}

/// The squared-product identity in its three forms, with `g^{(-2)} = ḡ ∘ ḡ`:
/// `(1, g_β^{(-1)})(1, g_α^{(-1)})`, `(P_1^{-α_1} P_2^{-α_2} ...)(... P_2^{-β_2} P_1^{-β_1})`
/// and `(... P_2^{-β_2} P_1^{-β_1})(P_1^{-α_1} P_2^{-α_2} ...)` all equal
/// `(1, g)^{-2}`; likewise the mirrored forms equal `(1, g)^2`.
pub fn prop1_check(g: &Series<Rational>) -> Result<bool> {
    let order = g.order();
    let ea = alpha_expand(g)?;
    let eb = beta_expand(g)?;
    let bar = g.revert()?;
    let minus_two = mat_mul(&bar, &bar);
    let plus_two = mat_mul(g, g);
    let r = |e: &AlphaBetaExpansion<Rational>| reconstruct(e, order);
    let na = ea.neg();
    let nb = eb.neg();
    let forms_minus = [
        mat_mul(&r(&nb), &r(&na)),
        mat_mul(&r(&na.with_side(Side::Beta)), &r(&nb.with_side(Side::Alpha))),
        mat_mul(&r(&nb.with_side(Side::Alpha)), &r(&na.with_side(Side::Beta))),
    ];
    let forms_plus = [
        mat_mul(&r(&ea.with_side(Side::Beta)), &r(&eb.with_side(Side::Alpha))),
        mat_mul(&r(&eb), &r(&ea)),
        mat_mul(&r(&ea), &r(&eb)),
    ];
    Ok(forms_minus.iter().all(|f| *f == minus_two) && forms_plus.iter().all(|f| *f == plus_two))
}

/// The split identity `(1, g_α^{(t)})(1, g_β^{(1-t)}) = (1, g)`.
pub fn prop2_check(g: &Series<Rational>, t: &Rational) -> Result<bool> {
    let (left, right) = prop2_sides(g, t)?;
    Ok(left == right)
}

/// `D_t` of a series over `Q[t]`, evaluated at `t = at`.
pub fn d_t_at(s: &Series<Poly<Rational>>, at: &Rational) -> Series<Rational> {
    s.map(|p| p.derivative().eval(at))
}

/// The three parts of the derivative relations, in order: `D_t g^{(t)}|_0`
/// equals `α` and `β`; `f_α = β(g)`; `f_β = α g'`.
pub fn deriv_relations_parts(g: &Series<Rational>) -> Result<[bool; 3]> {
    let order = g.order();
    let ea = alpha_expand(g)?;
    let eb = beta_expand(g)?;
    let ga = g_family_symbolic(&ea, order);
    let gb = g_family_symbolic(&eb, order);
    let alpha = ea.generating_series(order);
    let beta = eb.generating_series(order);
    let at_zero = d_t_at(&ga, &int(0)) == alpha && d_t_at(&gb, &int(0)) == beta;
    let f_alpha = d_t_at(&ga, &int(1));
    let f_beta = d_t_at(&gb, &int(1));
    let rhs_beta = alpha.mul(&g.derivative());
    Ok([at_zero, f_alpha == beta.compose(g)?, f_beta.truncate(rhs_beta.order()) == rhs_beta])
}

pub fn deriv_relations_check(g: &Series<Rational>) -> Result<bool> {
    Ok(deriv_relations_parts(g)?.iter().all(|&b| b))
}

/// Largest `d` such that `a` and `b` agree through `x^d`.
pub fn agreement_degree<R: Ring>(a: &Series<R>, b: &Series<R>) -> usize {
    let order = a.order().min(b.order());
    (0..=order).find(|&n| a.coeff_ref(n) != b.coeff_ref(n)).map_or(order, |n| n.saturating_sub(1))
}

/// Both sides of the first form of the squared-product identity, `g_α^{(-1)} ∘ g_β^{(-1)}`
/// and `ḡ ∘ ḡ`.
pub fn prop1_sides(g: &Series<Rational>) -> Result<(Series<Rational>, Series<Rational>)> {
    let order = g.order();
    let ea = alpha_expand(g)?;
    let eb = beta_expand(g)?;
    let bar = g.revert()?;
    Ok((mat_mul(&reconstruct(&eb.neg(), order), &reconstruct(&ea.neg(), order)), mat_mul(&bar, &bar)))
}

/// Both sides of the split identity, `g_β^{(1-t)} ∘ g_α^{(t)}` and `g`.
pub fn prop2_sides(g: &Series<Rational>, t: &Rational) -> Result<(Series<Rational>, Series<Rational>)> {
    let order = g.order();
    let left = g_family(&alpha_expand(g)?, t, order);
    let right = g_family(&beta_expand(g)?, &(int(1) - t), order);
    Ok((mat_mul(&left, &right), g.clone()))
}

/// `ᾱ_i = -β_i` and `β̄_i = -α_i` for `(1, ḡ) = (1, g)^{-1}`.
pub fn inverse_relations_check(g: &Series<Rational>) -> Result<bool> {
    let bar = g.revert()?;
    let ea = alpha_expand(g)?;
    let eb = beta_expand(g)?;
    let bar_a = alpha_expand(&bar)?;
    let bar_b = beta_expand(&bar)?;
    Ok(bar_a.coeffs == eb.neg().coeffs && bar_b.coeffs == ea.neg().coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn sample(order: usize) -> Series<Rational> {
        let cs = [0, 1, 2, -1, 3, 0, 1, -2, 5, 1, -1, 2, 0, 3, 1, -3, 2];
        Series::from_coeffs(cs[..=order].iter().map(|&c| int(c)).collect(), order)
    }

    #[test]
    fn elementary_factors() {
        let a = ratio(2, 3);
        let p1 = p_k_series(1, &a, 8);
        assert_eq!(p1, Series::x(8).mul(&Series::geometric(&a, 8)));
        let p2 = p_k_series(2, &a, 7);
        assert_eq!(p2.coeff(3), a.clone());
        assert_eq!(p2.coeff(5), ratio(3, 2) * &a * &a);
        let omega = omega_generator(&p_k_series(3, &a, 12)).unwrap();
        assert_eq!(omega, Series::monomial(a, 4, 12));
    }

    #[test]
    fn geometric_is_p1() {
        let g = Series::x(10).mul(&Series::geometric(&int(1), 10));
        let ea = alpha_expand(&g).unwrap();
        let eb = beta_expand(&g).unwrap();
        assert_eq!(ea.coeff(1), int(1));
        assert!(ea.coeffs[1..].iter().all(|c| *c == int(0)));
        assert_eq!(eb.coeffs, ea.coeffs);
    }

    #[test]
    fn round_trips() {
        let g = sample(14);
        assert_eq!(reconstruct(&alpha_expand(&g).unwrap(), 14), g);
        assert_eq!(reconstruct(&beta_expand(&g).unwrap(), 14), g);
        assert!(matches!(alpha_expand(&Series::<Rational>::x(4).scale(&int(2))), Err(Error::NotNormalized)));
    }

    #[test]
    fn s_polys_match_convolution() {
        let g = sample(9);
        let ea = alpha_expand(&g).unwrap();
        let eb = beta_expand(&g).unwrap();
        let conv = g.shift_down(1).unwrap().pow_param().unwrap();
        for n in 0..=8 {
            assert_eq!(s_alpha_poly(n, &ea.coeffs), conv.coeff(n), "alpha n = {n}");
            assert_eq!(s_beta_poly(n, &eb.coeffs), conv.coeff(n), "beta n = {n}");
        }
    }

    #[test]
    fn identities() {
        let g = sample(10);
        for n in 1..=8 {
            assert!(lagrange_relation_check(&alpha_expand(&g).unwrap().coeffs, n));
        }
        assert!(inverse_relations_check(&g).unwrap());
        let low = sample(5);
        assert!(prop1_check(&low).unwrap());
        for t in [ratio(1, 2), int(2), int(-1), int(0)] {
            assert!(prop2_check(&low, &t).unwrap());
        }
        assert!(deriv_relations_check(&low).unwrap());
        assert!(deriv_relations_parts(&g).unwrap()[0]);
    }

    #[test]
    fn product_identities_break_at_degree_six() {
        let g = Series::from_coeffs(vec![int(0), int(1), int(1), int(0), int(0), int(0), int(0)], 6);
        let t = Poly::<Rational>::var();
        let ga = g_family(&alpha_expand(&g).unwrap().lift(), &t, 6);
        let gb = g_family(&beta_expand(&g).unwrap().lift(), &Poly::constant(int(1)).sub(&t), 6);
        let residual = gb.compose(&ga).unwrap().sub(&g.lift());
        assert!((0..6).all(|n| residual.coeff_ref(n).is_zero()));
        assert_eq!(residual.coeff(6), Poly::new(vec![int(0), ratio(1, 2), ratio(-1, 2)]));
        let (l, r) = prop2_sides(&sample(10), &ratio(1, 2)).unwrap();
        assert_eq!(agreement_degree(&l, &r), 5);
        let (l, r) = prop1_sides(&sample(10)).unwrap();
        assert_eq!(agreement_degree(&l, &r), 7);
    }

    #[test]
    fn pseudo_involution_symmetry() {
        let r = crate::bcomp::rna_series(&int(1), 12).unwrap();
        let g = r.negate_arg().shift_up(1).truncate(12);
        assert_eq!(g.revert().unwrap(), g.negate_arg().neg());
        let ea = alpha_expand(&g).unwrap();
        let eb = beta_expand(&g).unwrap();
        assert_eq!(ea.generating_series(12).negate_arg(), eb.generating_series(12));
        let omega = omega_generator(&g).unwrap();
        assert_eq!(omega.negate_arg(), omega);
        assert_eq!(omega.coeff(2), g.coeff(2));
        let lhs = omega.compose(&g).unwrap();
        let rhs = omega.mul(&g.derivative());
        assert_eq!(lhs.truncate(rhs.order()), rhs.truncate(lhs.order()));
    }

    #[test]
    fn family_endpoints() {
        let g = sample(8);
        let ea = alpha_expand(&g).unwrap();
        assert_eq!(g_family(&ea, &int(1), 8), g);
        assert_eq!(g_family(&ea, &int(0), 8), Series::x(8));
    }
}
