use proptest::prelude::*;
use riordan_lab::bcomp::rna_series;
use riordan_lab::fixtures::MatrixFixture;
use riordan_lab::flow::{bell_log_generator, bell_power, c_beta_poly_symbolic, c_poly_formula, l_matrix, matrix_log, parity_check};
use riordan_lab::pseudo::{g_from_b, BFunction};
use riordan_lab::rational::{int, ratio};
use riordan_lab::riordan::build_riordan;
use riordan_lab::{Rational, RiordanPair, Series, TriMatrix};

fn config() -> ProptestConfig {
    ProptestConfig { cases: 16, failure_persistence: None, ..ProptestConfig::default() }
}

fn bell_series(order: usize) -> impl Strategy<Value = Series<Rational>> {
    prop::collection::vec(-3i64..=3, order)
        .prop_map(move |rest| Series::new(std::iter::once(1).chain(rest).map(int).collect()))
}

/// `P_0 = 1`, `P_1 = y`, `(n+1) P_{n+1} = (2n+1) y P_n - n P_{n-1}`.
fn legendre_of(y: &Series<Rational>, max_n: usize) -> Vec<Series<Rational>> {
    let order = y.order();
    let mut out = vec![Series::one(order), y.clone()];
    for n in 1..max_n {
        let next = y
            .mul(&out[n])
            .scale(&int(2 * n as i64 + 1))
            .sub(&out[n - 1].scale(&int(n as i64)))
            .scale(&ratio(1, n as i64 + 1));
        out.push(next);
    }
    out
}

#[test]
fn geometric_log_is_identity_pair() {
    let g = riordan_lab::series::geom(12);
    assert_eq!(bell_log_generator(&g).unwrap(), Series::one(11));
    let l = l_matrix(&g, 12).unwrap();
    assert_eq!(l, TriMatrix::identity(13));
}

#[test]
fn legendre_columns() {
    let order = 12;
    let y = Series::new(vec![int(1), int(0), int(-1)]).truncate(order + 1);
    let y = Series::from_coeffs(y.coeffs().to_vec(), order + 1).sqrt().unwrap();
    let inner = Series::one(order + 1)
        .sub(&y.mul(&Series::x(order + 1)).scale(&int(2)))
        .add(&Series::monomial(int(1), 2, order + 1));
    let g = inner.sqrt().unwrap().inverse().unwrap();
    assert_eq!(bell_log_generator(&g).unwrap().truncate(order - 1), y.truncate(order - 1));
    let l = l_matrix(&g, order).unwrap();
    let p = legendre_of(&y.truncate(order), 8);
    for n in 0..=8 {
        assert_eq!(l.col_gf(n).unwrap(), p[n].shift_up(n).truncate(order), "column {n}");
    }
}

#[test]
fn log_of_rna_series_is_geometric_composition_matrix() {
    let printed = MatrixFixture::RGeom.load();
    let g = rna_series(&int(1), 11).unwrap();
    assert_eq!(l_matrix(&g, 10).unwrap(), printed);
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn pseudo_involution_rows_have_parity(bs in prop::collection::vec(-3i64..=3, 6)) {
        let b = BFunction::polynomial(bs.into_iter().map(int).collect(), 12);
        let g = g_from_b(&b, &int(1), 13).unwrap();
        prop_assert!(parity_check(&l_matrix(&g, 12).unwrap()));
    }

    #[test]
    fn rows_are_composition_sums(g in bell_series(9)) {
        let l = l_matrix(&g, 8).unwrap();
        let b = bell_log_generator(&g).unwrap();
        for n in 0..=8 {
            prop_assert_eq!(l.row_poly(n).unwrap(), c_poly_formula(&b, n));
        }
    }

    #[test]
    fn rows_evaluate_to_matrix_powers(g in bell_series(8), phi in prop::sample::select(vec![int(2), int(-1), ratio(1, 2), ratio(-2, 3)])) {
        let l = l_matrix(&g, 7).unwrap();
        let power = bell_power(&g, &phi, 7).unwrap();
        for n in 0..=7 {
            prop_assert_eq!(l.row_poly(n).unwrap().eval(&phi), power.coeff(n));
        }
        let beta = ratio(3, 2);
        let b = bell_log_generator(&g).unwrap();
        let powered = power.pow_rational(&beta).unwrap();
        for n in 0..=7 {
            prop_assert_eq!(c_beta_poly_symbolic(&b, n).map(|c| c.eval(&beta)).eval(&phi), powered.coeff(n));
        }
    }

    #[test]
    fn powers_form_a_group(g in bell_series(8)) {
        let order = 8;
        let pair = |s: Series<Rational>| RiordanPair::bell(s).unwrap();
        let a = pair(bell_power(&g, &ratio(1, 2), order).unwrap());
        let b = pair(bell_power(&g, &ratio(3, 2), order).unwrap());
        let whole = pair(g.truncate(order));
        prop_assert_eq!(a.mul(&b).unwrap(), whole.mul(&whole).unwrap());
        let c = pair(bell_power(&g, &int(-1), order).unwrap());
        prop_assert_eq!(c.mul(&pair(g.truncate(order))).unwrap(), RiordanPair::identity(order));
        let half = build_riordan(&a, order).unwrap();
        prop_assert_eq!(matrix_log(&half).scale(&int(2)), matrix_log(&build_riordan(&pair(g.truncate(order)), order).unwrap()));
    }
}
