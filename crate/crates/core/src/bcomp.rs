//! B-composition matrices `<B(x)>`: row `n` is `u_n` with
//! `u_n(φ) = [x^n] g^{[φ]}`, where `g^{[φ]}` has B-function `φ B(x)`.

use crate::combinat::odd_partitions;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::matrix::TriMatrix;
use crate::poly::Poly;
use crate::pseudo::BFunction;
use crate::rational::{big, binomial, catalan, factorial, int, Rational};
use crate::riordan::{build_exp_riordan, RiordanPair};
use crate::ring::{falling_factorial, Ring};
use crate::series::Series;

/// `[x^m] u_n = ((n+m)/2)_{m-1} Σ ∏ b_i^{m_i}/m_i!` over partitions of `n`
/// into exactly `m` odd parts.
pub fn u_entry<R: Ring>(b: &BFunction<R>, n: usize, m: usize) -> R {
    if m == 0 {
        return if n == 0 { R::one() } else { R::zero() };
    }
    if m > n || (n - m) % 2 == 1 {
        return R::zero();
    }
    let mut sum = R::zero();
    for p in odd_partitions(n, Some(m)) {
        let mut term = R::one();
        let mut denom = num_bigint::BigInt::from(1);
        for (i, &mi) in p.multiplicities().iter().enumerate() {
            if mi > 0 {
                term = term.mul(&b.coeff(i).pow(mi as u32));
                denom *= factorial(mi as u64);
            }
        }
        sum = sum.add(&term.scale(&Rational::new(1.into(), denom)));
    }
    let top = int(((n + m) / 2) as i64);
    sum.scale(&falling_factorial(&top, m - 1))
}

pub fn u_poly<R: Ring>(b: &BFunction<R>, n: usize) -> Poly<R> {
    Poly::new((0..=n).map(|m| u_entry(b, n, m)).collect())
}

/// `<B>` with rows `0..=order`.
pub fn u_matrix<R: Ring>(b: &BFunction<R>, order: usize) -> TriMatrix<R> {
    u_matrix_with(Execution::default(), b, order)
}

pub fn u_matrix_with<R: Ring>(exec: Execution, b: &BFunction<R>, order: usize) -> TriMatrix<R> {
    TriMatrix::from_fn_with(exec, order + 1, |n, m| u_entry(b, n, m))
}

/// The solution of `g = 1 + x g φ/(1 - β x^2 g)` through its closed form
/// `(1 - φx + βx^2 - √((1 - φx + βx^2)^2 - 4βx^2)) / (2βx^2)`.
pub fn rna_beta(beta: &Rational, phi: &Rational, order: usize) -> Result<Series<Rational>> {
    if beta == &int(0) {
        return Err(Error::ZeroDenominator);
    }
    let wide = order + 2;
    let q = Series::from_coeffs(vec![int(1), -phi.clone(), beta.clone()], wide);
    let disc = q.mul(&q).sub(&Series::monomial(beta * int(4), 2, wide));
    let num = q.sub(&disc.sqrt()?);
    Ok(num.shift_down(2)?.scale(&(int(1) / (beta * int(2)))))
}

/// `R^{(φ)}`, the RNA series at parameter `φ`.
pub fn rna_series(phi: &Rational, order: usize) -> Result<Series<Rational>> {
    rna_beta(&int(1), phi, order)
}

/// `B(x) = 1/(1 - x)`, `1 + x` and `C(x)`.
pub fn rna_bfun(order: usize) -> BFunction<Rational> {
    BFunction::new(crate::series::geom(order))
}

pub fn one_plus_x_bfun(order: usize) -> BFunction<Rational> {
    BFunction::new(crate::series::one_plus_x(order))
}

pub fn catalan_bfun(order: usize) -> BFunction<Rational> {
    BFunction::new(crate::series::catalan(order))
}

fn q(n: i64, k: i64) -> Rational {
    big(&binomial(n, k))
}

/// `N_0 = 1`, `N_n(x) = (1/n) Σ binom(n, m-1) binom(n, m) x^m`.
pub fn narayana_poly(n: usize) -> Poly<Rational> {
    if n == 0 {
        return Poly::one();
    }
    let n = n as i64;
    Poly::new((0..=n).map(|m| q(n, m - 1) * q(n, m) / int(n)).collect())
}

pub fn narayana_matrix(order: usize) -> TriMatrix<Rational> {
    TriMatrix::from_fn(order + 1, |n, m| narayana_poly(n).coeff(m))
}

/// `p(x) / (1 - x)^k` as a series of the given order.
fn over_one_minus_x(p: &Poly<Rational>, k: i64, order: usize) -> Series<Rational> {
    let num = Series::from_coeffs(p.coeffs().to_vec(), order);
    let den = Series::from_coeffs(vec![int(1), int(-1)], order).pow_int(-k).expect("unit");
    num.mul(&den)
}

/// Column `n+1` of the Narayana matrix equals `x^n N_n(x)/(1 - x)^{2n+1}`.
pub fn theorem4_check(n: usize, order: usize) -> bool {
    let m = narayana_matrix(order);
    let Ok(col) = m.col_gf(n + 1) else { return false };
    let shifted = Poly::monomial(int(1), n).mul(&narayana_poly(n));
    col == over_one_minus_x(&shifted, 2 * n as i64 + 1, order)
}

/// `[2n, ↗] <1/(1-x)> = N_n(x)`.
pub fn theorem5_check(n: usize) -> bool {
    let r = u_matrix(&rna_bfun(2 * n + 1), 2 * n);
    r.diag_up_poly(2 * n).map(|p| p == narayana_poly(n)).unwrap_or(false)
}

/// Closed forms of the RNA composition polynomials `r_n`.
pub fn r_poly(n: usize) -> Poly<Rational> {
    if n == 0 {
        return Poly::one();
    }
    let half = (n / 2) as i64;
    let mut coeffs = vec![int(0); n + 1];
    if n % 2 == 0 {
        for m in 1..=half {
            let t = half + m;
            coeffs[2 * m as usize] = q(t, 2 * m - 1) * q(t, 2 * m) / int(t);
        }
    } else {
        for m in 0..=half {
            let t = half + m + 1;
            coeffs[2 * m as usize + 1] = q(t, 2 * m) * q(t, 2 * m + 1) / int(t);
        }
    }
    Poly::new(coeffs)
}

/// `C_{(n-m)/2} binom((n+m)/2, (3m-n)/2)`, the entries of `<1 + x>`.
pub fn family1(n: usize, m: usize) -> Rational {
    if m > n || (n - m) % 2 == 1 {
        return int(0);
    }
    let (n, m) = (n as i64, m as i64);
    let lower = 3 * m - n;
    if lower < 0 {
        return int(0);
    }
    big(&catalan(((n - m) / 2) as u64)) * q((n + m) / 2, lower / 2)
}

/// `T_n(x) = (1/(n+1)) Σ binom(n+1, m+1) binom(n+m+2, m) x^m`.
pub fn t_poly(n: usize) -> Poly<Rational> {
    let n = n as i64;
    Poly::new((0..=n).map(|m| q(n + 1, m + 1) * q(n + m + 2, m) / int(n + 1)).collect())
}

/// Column `n+1` of `<1 + x>` equals `x^{n+1} T_n(x^2)(1 + x^2)`.
pub fn theorem6_check(n: usize, order: usize) -> bool {
    let m = u_matrix(&one_plus_x_bfun(order), order);
    let Ok(col) = m.col_gf(n + 1) else { return false };
    let rhs = Poly::monomial(int(1), n + 1)
        .mul(&t_poly(n).substitute_power(2))
        .mul(&Poly::new(vec![int(1), int(0), int(1)]));
    col == Series::from_coeffs(rhs.coeffs().to_vec(), order)
}

/// `C_{(n-m)/2} binom(n-1, m-1)`, the entries of `<C(x)>`.
pub fn family2(n: usize, m: usize) -> Rational {
    if n == 0 && m == 0 {
        return int(1);
    }
    if m == 0 || m > n || (n - m) % 2 == 1 {
        return int(0);
    }
    big(&catalan(((n - m) / 2) as u64)) * q(n as i64 - 1, m as i64 - 1)
}

/// The triangle with column 0 equal to `1` and column `n+1` equal to
/// `x^{n+1} T_n(x)(1 + x)`.
pub fn f_matrix(order: usize) -> TriMatrix<Rational> {
    let mut cols = vec![Series::one(order)];
    for n in 0..order {
        let p = Poly::monomial(int(1), n + 1).mul(&t_poly(n)).mul(&Poly::new(vec![int(1), int(1)]));
        cols.push(Series::from_coeffs(p.coeffs().to_vec(), order));
    }
    TriMatrix::from_columns(&cols)
}

/// `F_n`, row `n` of [`f_matrix`].
pub fn f_poly(n: usize) -> Poly<Rational> {
    f_matrix(n).row_poly(n).expect("in range")
}

/// `[n+1, →] <C(x)> = F_n(x^2) / x^{n-1}`.
pub fn theorem7_check(n: usize) -> bool {
    let m = u_matrix(&catalan_bfun(n + 1), n + 1);
    let row = m.row_poly(n + 1).expect("in range");
    // both sides multiplied by x^n
    row.mul(&Poly::monomial(int(1), n)) == f_poly(n).substitute_power(2).mul(&Poly::var())
}

/// `C̄(x) = Σ C_n x^{2n}/(2n)!`.
pub fn appell_bar_c(order: usize) -> Series<Rational> {
    appell_bar(&catalan_bfun(order / 2 + 1), order)
}

/// `B̄(x) = Σ b_n x^{2n}/(2n)!`.
pub fn appell_bar<R: Ring>(b: &BFunction<R>, order: usize) -> Series<R> {
    Series::from_fn(order, |n| {
        if n % 2 == 1 {
            R::zero()
        } else {
            b.coeff(n / 2).scale(&Rational::new(1.into(), factorial(n as u64)))
        }
    })
}

/// Rows `r̄_n = (1/x) [n+1, →] <C(x)>` against `Σ r̄_n(φ) x^n/n! = C̄(x) e^{φx}`,
/// compared as series over `Q[φ]`.
pub fn appell_rows_check(order: usize) -> bool {
    let m = u_matrix(&catalan_bfun(order / 2 + 2), order + 1);
    let lhs = Series::from_fn(order, |n| {
        let row = m.row_poly(n + 1).expect("in range");
        let shifted = Poly::new(row.coeffs().iter().skip(1).cloned().collect());
        shifted.scale(&Rational::new(1.into(), factorial(n as u64)))
    });
    let exp_phi: Series<Poly<Rational>> = Series::from_fn(order, |n| {
        Poly::monomial(Rational::new(1.into(), factorial(n as u64)), n)
    });
    let rhs = appell_bar_c(order).lift().mul(&exp_phi);
    lhs == rhs
}

/// Whether `<B>_{n+1, m+1} = binom(n, m) b_{(n-m)/2}` (zero for odd `n - m`),
/// i.e. the shifted matrix is the exponential Appell matrix `(B̄, x)_E`.
pub fn is_appell_bfun(b: &BFunction<Rational>, order: usize) -> bool {
    if b.coeff(0) != int(1) {
        return false;
    }
    let m = u_matrix(b, order + 1);
    (0..=order).all(|n| {
        (0..=n).all(|k| {
            let expect = if (n - k) % 2 == 1 {
                int(0)
            } else {
                q(n as i64, k as i64) * b.coeff((n - k) / 2)
            };
            m.get(n + 1, k + 1) == expect
        })
    })
}

/// `<B>_{2n-m, m} = ((1, xB)_E)_{n,m} / (n-m+1)!` for `m <= n <= order`.
pub fn theorem9_check<R: Ring>(b: &BFunction<R>, order: usize) -> Result<bool> {
    if b.order() < order {
        return Err(Error::InsufficientOrder { needed: order, available: b.order() });
    }
    // (1, xB) is built directly so that b_0 = 0 is allowed
    let pair = RiordanPair { f: Series::one(order), g: b.b.truncate(order) };
    let e = build_exp_riordan(&pair, order)?;
    let u = u_matrix(b, 2 * order);
    Ok((0..=order).all(|n| {
        (0..=n).all(|m| {
            let scale = Rational::new(1.into(), factorial((n - m + 1) as u64));
            u.get(2 * n - m, m) == e.get(n, m).scale(&scale)
        })
    }))
}

/// `s_j(m) = [x^j] B^m` for `j <= jmax`, `m <= mmax`.
fn conv_table<R: Ring>(b: &BFunction<R>, jmax: usize, mmax: usize) -> Vec<Vec<R>> {
    let base = Series::from_coeffs(b.b.coeffs().to_vec(), jmax);
    let mut out = Vec::with_capacity(mmax + 1);
    let mut power = Series::one(jmax);
    for _ in 0..=mmax {
        out.push(power.coeffs().to_vec());
        power = power.mul(&base);
    }
    out
}

/// `u_n(β, x) = Σ_m β (β + (n+m)/2 - 1)_{m-1} s_{(n-m)/2}(m)/m! x^m` as a
/// polynomial in `x` with coefficients in `Q[β]`.
pub fn conv_u_beta(b: &BFunction<Rational>, n: usize) -> Poly<Poly<Rational>> {
    if n == 0 {
        return Poly::one();
    }
    let table = conv_table(b, n / 2, n);
    let beta = Poly::<Rational>::var();
    let mut coeffs = vec![Poly::zero(); n + 1];
    for m in 1..=n {
        if (n - m) % 2 == 1 {
            continue;
        }
        let s = table[m][(n - m) / 2].clone();
        let start = beta.add(&Poly::constant(int(((n + m) / 2) as i64 - 1)));
        let weight = beta.mul(&falling_factorial(&start, m - 1));
        coeffs[m] = weight.scale(&(s / big(&factorial(m as u64))));
    }
    Poly::new(coeffs)
}

/// `q_n(x) = Σ_m x (x + (n+m)/2 - 1)_{m-1} s_{(n-m)/2}(m)/m!`, the
/// convolution polynomials of `g` (the series with B-function `B`).
pub fn q_poly(b: &BFunction<Rational>, n: usize) -> Poly<Rational> {
    let u = conv_u_beta(b, n);
    let mut acc = Poly::zero();
    for c in u.coeffs() {
        acc = acc.add(c);
    }
    acc
}

/// `B = e^x`: `u_{2n} = Σ binom(n+m, 2m) (2m)^{n-m}/(n-m+1)! x^{2m}` and
/// `u_{2n+1} = Σ binom(n+m+1, 2m+1) (2m+1)^{n-m}/(n-m+1)! x^{2m+1}`.
pub fn example7_poly(n: usize) -> Poly<Rational> {
    let half = (n / 2) as i64;
    let odd = (n % 2) as i64;
    let mut coeffs = vec![int(0); n + 1];
    for m in 0..=half {
        let deg = 2 * m + odd;
        let base = int(deg);
        let value = q(half + m + odd, deg) * crate::rational::pow_i64(&base, half - m)
            / big(&factorial((half - m + 1) as u64));
        coeffs[deg as usize] = value;
    }
    Poly::new(coeffs)
}

/// `[x^n] R^β` from the closed forms, as a polynomial in `β`.
pub fn example8_poly(n: usize) -> Poly<Rational> {
    let beta = Poly::<Rational>::var();
    let half = (n / 2) as i64;
    let mut acc = Poly::zero();
    if n == 0 {
        return Poly::one();
    }
    if n % 2 == 0 {
        for m in 1..=half {
            let start = beta.add(&Poly::constant(int(half + m - 1)));
            let w = beta.mul(&falling_factorial(&start, 2 * m as usize - 1));
            acc = acc.add(&w.scale(&(q(half + m - 1, half - m) / big(&factorial(2 * m as u64)))));
        }
    } else {
        for m in 0..=half {
            let start = beta.add(&Poly::constant(int(half + m)));
            let w = beta.mul(&falling_factorial(&start, 2 * m as usize));
            acc = acc.add(&w.scale(&(q(half + m, half - m) / big(&factorial(2 * m as u64 + 1)))));
        }
    }
    acc
}

/// `<B(βx)>_{n,m} = β^{(n-m)/2} <B>_{n,m}`.
pub fn scaling_law_check(b: &BFunction<Rational>, beta: &Rational, order: usize) -> bool {
    let scaled = BFunction::new(b.b.scale_arg(beta));
    let lhs = u_matrix(&scaled, order);
    let rhs = u_matrix(b, order);
    (0..=order).all(|n| {
        (0..=n).all(|m| {
            let w = if (n - m) % 2 == 0 {
                crate::rational::pow_i64(beta, ((n - m) / 2) as i64)
            } else {
                int(0)
            };
            lhs.get(n, m) == rhs.get(n, m) * w
        })
    })
}

/// Whether `[2n, ↘] <C(x)> = x^{-(n-1)} [2n, ↘] <1 + x>` holds for
/// `n = 1..=max_n` (compared on the overlap of the stored diagonals).
pub fn catalan_diagonal_relation(max_n: usize, order: usize) -> Vec<(usize, bool)> {
    let c = u_matrix(&catalan_bfun(order), order);
    let one = u_matrix(&one_plus_x_bfun(order), order);
    (1..=max_n)
        .filter(|n| 2 * n <= order)
        .map(|n| {
            let lhs = c.diag_down_gf(2 * n).expect("in range");
            let rhs = one.diag_down_gf(2 * n).expect("in range");
            let shift = n - 1;
            let len = lhs.order() + 1;
            let ok = (0..len).all(|m| {
                let r = if m + shift <= rhs.order() { rhs.coeff(m + shift) } else { return true };
                lhs.coeff(m) == r
            }) && (0..shift.min(rhs.order() + 1)).all(|m| rhs.coeff(m).is_zero());
            (n, ok)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pseudo::g_from_b;
    use crate::rational::ratio;

    fn ints(cs: &[i64]) -> Vec<Rational> {
        cs.iter().map(|&c| int(c)).collect()
    }

    #[test]
    fn rna_rows() {
        let r = u_matrix(&rna_bfun(6), 10);
        assert_eq!(r.get(9, 3), int(50));
        assert_eq!(r.row(10), &ints(&[0, 0, 15, 0, 175, 0, 196, 0, 36, 0, 1])[..]);
        for n in 0..=10 {
            assert_eq!(r.row_poly(n).unwrap(), r_poly(n), "n = {n}");
        }
    }

    #[test]
    fn zero_b() {
        let u = u_matrix(&BFunction::new(Series::<Rational>::zero(4)), 6);
        assert_eq!(u.get(0, 0), int(1));
        assert!((1..=6).all(|n| u.row(n).iter().all(|c| c == &int(0))));
    }

    #[test]
    fn closed_forms_match_fixed_point() {
        for (beta, phi) in [(int(1), int(1)), (int(2), ratio(1, 2)), (ratio(-1, 3), int(3))] {
            let b = BFunction::new(Series::geometric(&beta, 8));
            let closed = rna_beta(&beta, &phi, 16).unwrap();
            assert_eq!(closed, g_from_b(&b, &phi, 16).unwrap());
        }
        assert_eq!(rna_series(&int(0), 8).unwrap(), Series::one(8));
        assert!(matches!(rna_beta(&int(0), &int(1), 4), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn narayana() {
        assert_eq!(narayana_poly(4).coeffs(), &ints(&[0, 1, 6, 6, 1])[..]);
        assert_eq!(narayana_poly(0), Poly::one());
        for n in 1..=5 {
            assert!(theorem4_check(n, 12));
        }
        for n in 0..=5 {
            assert!(theorem5_check(n));
        }
    }

    #[test]
    fn families() {
        assert_eq!(family1(10, 4), int(35));
        assert_eq!(family1(6, 2), int(2));
        assert_eq!(t_poly(2).coeffs(), &ints(&[1, 5, 5])[..]);
        assert_eq!(family2(9, 3), int(140));
        assert_eq!(family2(7, 1), int(5));
        let one = u_matrix(&one_plus_x_bfun(8), 12);
        let cat = u_matrix(&catalan_bfun(8), 12);
        for n in 0..=12 {
            for m in 0..=n {
                assert_eq!(one.get(n, m), family1(n, m));
                assert_eq!(cat.get(n, m), family2(n, m));
            }
        }
        for n in 0..=10 {
            assert!(theorem6_check(n, 12), "thm6 n = {n}");
            assert!(theorem7_check(n), "thm7 n = {n}");
        }
        assert!(appell_rows_check(8));
    }

    #[test]
    fn appell_criterion() {
        assert!(is_appell_bfun(&catalan_bfun(10), 10));
        let c2 = BFunction::new(crate::series::catalan(10).scale_arg(&int(2)));
        assert!(is_appell_bfun(&c2, 10));
        assert!(!is_appell_bfun(&rna_bfun(10), 10));
    }

    #[test]
    fn theorem9() {
        for b in [rna_bfun(8), one_plus_x_bfun(8), catalan_bfun(8)] {
            assert!(theorem9_check(&b, 8).unwrap());
        }
    }

    #[test]
    fn convolution_u_beta() {
        let b = rna_bfun(10);
        for n in 0..=8 {
            let at_one = conv_u_beta(&b, n).map(|c| c.eval(&int(1)));
            assert_eq!(at_one, u_poly(&b, n), "n = {n}");
        }
        let ex7 = BFunction::new(crate::series::exp_x(8));
        for n in 0..=8 {
            assert_eq!(u_poly(&ex7, n), example7_poly(n), "n = {n}");
        }
    }

    #[test]
    fn example8() {
        for beta in [int(1), int(2), int(3)] {
            let r = rna_series(&int(1), 6).unwrap().pow_rational(&beta).unwrap();
            for n in 0..=6 {
                assert_eq!(example8_poly(n).eval(&beta), r.coeff(n), "β = {beta}, n = {n}");
            }
        }
    }

    #[test]
    fn scaling_and_diagonals() {
        for beta in [int(2), int(3)] {
            assert!(scaling_law_check(&rna_bfun(8), &beta, 12));
        }
        assert!(catalan_diagonal_relation(5, 14).iter().all(|(_, ok)| *ok));
    }
}
