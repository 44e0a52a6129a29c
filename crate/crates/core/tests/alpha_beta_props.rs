use proptest::prelude::*;
use riordan_lab::alpha_beta::{
    agreement_degree, alpha_expand, beta_expand, deriv_relations_parts, g_family, inverse_relations_check,
    lagrange_relation_check, prop1_sides, prop2_sides, reconstruct, s_alpha_poly, s_beta_poly, s_terms, Side,
};
use riordan_lab::fixtures::{s_t_lines, s_z_polynomials};
use riordan_lab::rational::{int, ratio};
use riordan_lab::{Poly, Rational, Ring, Series};

fn config() -> ProptestConfig {
    ProptestConfig { cases: 12, failure_persistence: None, ..ProptestConfig::default() }
}

fn normalized(order: usize) -> impl Strategy<Value = Series<Rational>> {
    prop::collection::vec(-3i64..=3, order - 1)
        .prop_map(move |rest| Series::new([0, 1].into_iter().chain(rest).map(int).collect()))
}

fn expand_parts(mult: &[(usize, usize)]) -> Vec<usize> {
    mult.iter().flat_map(|&(part, m)| std::iter::repeat_n(part, m)).collect()
}

fn computed_terms(side: Side, n: usize) -> Vec<(Vec<usize>, Poly<Rational>)> {
    let mut v: Vec<_> = s_terms(side, n).into_iter().map(|(m, w)| (expand_parts(&m), w)).collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    v
}

#[test]
fn printed_polynomials_in_z() {
    for side in [Side::Alpha, Side::Beta] {
        for (n, mut printed) in s_z_polynomials(side) {
            printed.sort_by(|a, b| a.0.cmp(&b.0));
            assert_eq!(computed_terms(side, n), printed, "{side:?} s_{n}");
        }
    }
}

#[test]
fn printed_lines_in_t() {
    let mut corrected = Vec::new();
    for side in [Side::Alpha, Side::Beta] {
        for (n, printed) in s_t_lines(side) {
            let computed = computed_terms(side, n);
            assert_eq!(computed.len(), printed.len(), "{side:?} s_{n}");
            for term in printed {
                let (_, w) = computed.iter().find(|(p, _)| *p == term.parts).expect("partition present");
                assert_eq!(w.eval(&int(1)), term.coeff, "{side:?} s_{n} {:?}", term.parts);
                if let Some(p) = term.printed {
                    corrected.push((side, n, term.parts.clone(), p));
                }
            }
        }
    }
    assert_eq!(corrected.len(), 2);
    assert_eq!(corrected[0].3, "3");
    assert_eq!(corrected[0].2, vec![1, 2, 2]);
}

#[test]
fn lagrange_relation_at_n_two() {
    let z = Poly::<Rational>::var();
    let a = [ratio(2, 3), int(-5)];
    let lhs = s_alpha_poly(2, &a).compose(&Poly::new(vec![int(-2), int(-1)])).mul(&z);
    let neg: Vec<Rational> = a.iter().map(|c| -c.clone()).collect();
    let rhs = s_beta_poly(2, &neg).mul(&z.add(&Poly::constant(int(2))));
    assert_eq!(lhs, rhs);
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn expansions_round_trip(g in normalized(16)) {
        let a = alpha_expand(&g).unwrap();
        let b = beta_expand(&g).unwrap();
        prop_assert_eq!(a.coeff(1), g.coeff(2));
        prop_assert_eq!(b.coeff(1), g.coeff(2));
        prop_assert_eq!(reconstruct(&a, 16), g.clone());
        prop_assert_eq!(reconstruct(&b, 16), g);
    }

    #[test]
    fn partition_sums_are_convolution_powers(g in normalized(9)) {
        let conv = g.shift_down(1).unwrap().pow_param().unwrap();
        let a = alpha_expand(&g).unwrap();
        let b = beta_expand(&g).unwrap();
        for n in 1..=8 {
            prop_assert_eq!(s_alpha_poly(n, &a.coeffs), conv.coeff(n));
            prop_assert_eq!(s_beta_poly(n, &b.coeffs), conv.coeff(n));
        }
        let z = ratio(-7, 3);
        let direct = g.shift_down(1).unwrap().pow_rational(&z).unwrap();
        prop_assert_eq!(s_alpha_poly(6, &a.coeffs).eval(&z), direct.coeff(6));
    }

    #[test]
    fn lagrange_relations(g in normalized(9)) {
        let a = alpha_expand(&g).unwrap();
        for n in 1..=8 {
            prop_assert!(lagrange_relation_check(&a.coeffs, n));
        }
    }

    #[test]
    fn inverse_expansions(g in normalized(12)) {
        prop_assert!(inverse_relations_check(&g).unwrap());
    }

    #[test]
    fn first_order_in_t(g in normalized(10)) {
        prop_assert!(deriv_relations_parts(&g).unwrap()[0]);
        let a = alpha_expand(&g).unwrap();
        prop_assert_eq!(g_family(&a, &int(0), 10), Series::x(10));
        prop_assert_eq!(g_family(&a, &int(1), 10), g);
    }

    #[test]
    fn product_identities_agree_on_low_degrees(g in normalized(12), t in prop::sample::select(vec![ratio(1, 2), int(2), int(-1)])) {
        let (l, r) = prop2_sides(&g, &t).unwrap();
        prop_assert!(agreement_degree(&l, &r) >= 5);
        let (l, r) = prop1_sides(&g).unwrap();
        prop_assert!(agreement_degree(&l, &r) >= 7);
    }
}
