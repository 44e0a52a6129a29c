use proptest::prelude::*;
use riordan_lab::combinat::{compositions, odd_partitions};
use riordan_lab::rational::{int, ratio};
use riordan_lab::{Rational, Series};

const ORDER: usize = 16;

fn series(lead: Option<i64>) -> impl Strategy<Value = Series<Rational>> {
    prop::collection::vec(-4i64..=4, ORDER + 1).prop_map(move |mut cs| {
        if let Some(c) = lead {
            cs[0] = c;
        }
        Series::new(cs.into_iter().map(int).collect())
    })
}

fn nilpotent() -> impl Strategy<Value = Series<Rational>> {
    series(Some(0))
}

fn odd_partition_count(n: usize) -> usize {
    let mut ways = vec![0usize; n + 1];
    ways[0] = 1;
    for part in (1..=n).step_by(2) {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn multiplication_is_a_commutative_monoid(a in series(None), b in series(None), c in series(None)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&Series::one(ORDER)), a);
    }

    #[test]
    fn composition_is_associative(a in series(None), g in nilpotent(), h in nilpotent()) {
        let left = a.compose(&g).unwrap().compose(&h).unwrap();
        let right = a.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn exp_and_log_are_inverse(a in series(Some(1)), b in nilpotent()) {
        prop_assert_eq!(a.log().unwrap().exp().unwrap(), a);
        prop_assert_eq!(b.exp().unwrap().log().unwrap(), b);
    }

    #[test]
    fn square_root_squares_back(a in series(Some(1))) {
        let r = a.sqrt().unwrap();
        prop_assert_eq!(r.mul(&r), a);
    }

    #[test]
    fn symbolic_power_at_integers(a in series(Some(1)), k in 0i64..5) {
        let symbolic = a.truncate(8).pow_param().unwrap();
        let mut repeated = Series::one(8);
        for _ in 0..k {
            repeated = repeated.mul(&a.truncate(8));
        }
        prop_assert_eq!(symbolic.map(|p| p.eval(&int(k))), repeated);
    }

    #[test]
    fn reversion_inverts_composition(mut g in nilpotent(), c in 1i64..4) {
        g.set_coeff(1, int(c));
        let r = g.revert().unwrap();
        prop_assert_eq!(g.compose(&r).unwrap(), Series::x(ORDER));
        prop_assert_eq!(r.compose(&g).unwrap(), Series::x(ORDER));
    }
}

#[test]
fn rational_powers_compose() {
    let a = Series::new((0..=ORDER).map(|n| int([1, 2, -1, 3][n % 4])).collect());
    let half = a.pow_rational(&ratio(1, 2)).unwrap();
    assert_eq!(half, a.sqrt().unwrap());
    let third = a.pow_rational(&ratio(1, 3)).unwrap();
    assert_eq!(third.mul(&third).mul(&third), a);
}

#[test]
fn odd_partition_counts() {
    for n in 0..=30 {
        assert_eq!(odd_partitions(n, None).len(), odd_partition_count(n), "n = {n}");
    }
    let nine: Vec<Vec<usize>> = odd_partitions(9, Some(3)).iter().map(|p| p.parts()).collect();
    assert_eq!(nine.len(), 3);
    for p in [vec![1, 1, 7], vec![1, 3, 5], vec![3, 3, 3]] {
        assert!(nine.contains(&p), "{p:?}");
    }
}

#[test]
fn composition_counts() {
    for n in 1..=12usize {
        assert_eq!(compositions(n, None).len(), 1 << (n - 1));
    }
    assert_eq!(compositions(3, None).len(), 4);
}
