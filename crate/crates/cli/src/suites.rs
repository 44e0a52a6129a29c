//! Verification suites run by `verify`. Every check is exact; random
//! inputs come from a fixed ChaCha seed so reports are reproducible.

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use riordan_lab::alpha_beta::{
    agreement_degree, alpha_expand, beta_expand, deriv_relations_parts, inverse_relations_check, lagrange_relation_check,
    prop1_check, prop1_sides, prop2_check, prop2_sides, reconstruct, s_terms, Side,
};
use riordan_lab::bcomp::{
    catalan_bfun, conv_u_beta, example8_poly, is_appell_bfun, one_plus_x_bfun, rna_bfun, rna_series, theorem4_check,
    theorem5_check, theorem6_check, theorem7_check, theorem9_check, u_poly,
};
use riordan_lab::fixtures::{s_t_lines, s_z_polynomials, MatrixFixture};
use riordan_lab::flow::{l_matrix, parity_check};
use riordan_lab::pseudo::{b1_terms, b_expansion, b_from_g, g_from_b, sqrt_decompose, BFunction};
use riordan_lab::rational::{int, ratio};
use riordan_lab::riordan::{is_pseudo_involution, lagrange_conv_relation};
use riordan_lab::series::geom;
use riordan_lab::{Rational, RiordanPair, Series, TriMatrix};

pub const SEED: u64 = 0x5eed_2024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Golden,
    BExpansion,
    BComposition,
    Theorem1,
    Theorem2,
    Theorem4,
    Theorem5,
    Theorem6,
    Theorem7,
    Theorem8,
    Theorem9,
    Convolution,
    Flow,
    Alphabeta,
    Pseudo,
    All,
}

impl Suite {
    pub const EACH: [Suite; 15] = [
        Suite::Golden,
        Suite::BExpansion,
        Suite::BComposition,
        Suite::Theorem1,
        Suite::Theorem2,
        Suite::Theorem4,
        Suite::Theorem5,
        Suite::Theorem6,
        Suite::Theorem7,
        Suite::Theorem8,
        Suite::Theorem9,
        Suite::Convolution,
        Suite::Flow,
        Suite::Alphabeta,
        Suite::Pseudo,
    ];

    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

struct Report {
    suite: String,
    checks: Vec<Check>,
}

impl Report {
    fn new(suite: Suite) -> Self {
        Report { suite: suite.name(), checks: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, pass: bool) {
        self.detailed(name, pass, String::new());
    }

    fn detailed(&mut self, name: impl Into<String>, pass: bool, detail: String) {
        self.checks.push(Check { suite: self.suite.clone(), name: name.into(), pass, detail });
    }
}

/// B with `terms` integer coefficients in `[-3, 3]`, padded with zeros.
pub fn random_b(rng: &mut ChaCha8Rng, terms: usize, order: usize) -> BFunction<Rational> {
    let coeffs = (0..terms).map(|_| int(rng.gen_range(-3..=3))).collect();
    BFunction::polynomial(coeffs, order)
}

/// `x + g_2 x^2 + ...` with integer coefficients in `[-3, 3]`.
pub fn random_normalized(rng: &mut ChaCha8Rng, order: usize) -> Series<Rational> {
    Series::from_fn(order, |n| match n {
        0 => int(0),
        1 => int(1),
        _ => int(rng.gen_range(-3..=3)),
    })
}

pub fn phis() -> [Rational; 5] {
    [int(-2), int(-1), ratio(1, 2), int(1), int(3)]
}

pub fn run(suite: Suite, order: usize) -> Vec<Check> {
    if suite == Suite::All {
        return Suite::EACH.iter().flat_map(|&s| run(s, order)).collect();
    }
    let mut r = Report::new(suite);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    match suite {
        Suite::Golden => golden(&mut r),
        Suite::BExpansion => b_expansion_suite(&mut r, &mut rng, order),
        Suite::BComposition => b_composition_suite(&mut r, &mut rng, order),
        Suite::Theorem1 | Suite::Theorem2 => sqrt_suite(&mut r, &mut rng, suite == Suite::Theorem1, order),
        Suite::Theorem4 => (1..=5).for_each(|n| r.check(format!("narayana column {}", n + 1), theorem4_check(n, order))),
        Suite::Theorem5 => (0..=5).for_each(|n| r.check(format!("up-diagonal {}", 2 * n), theorem5_check(n))),
        Suite::Theorem6 => (0..order.saturating_sub(1)).for_each(|n| r.check(format!("column {}", n + 1), theorem6_check(n, order))),
        Suite::Theorem7 => (0..order.saturating_sub(1)).for_each(|n| r.check(format!("row {}", n + 1), theorem7_check(n))),
        Suite::Theorem8 => appell_suite(&mut r, order),
        Suite::Theorem9 => {
            for i in 0..10 {
                let b = random_b(&mut rng, 6, order);
                r.check(format!("random B #{i}"), theorem9_check(&b, order).unwrap_or(false));
            }
        }
        Suite::Convolution => convolution_suite(&mut r, &mut rng, order),
        Suite::Flow => flow_suite(&mut r, order),
        Suite::Alphabeta => alphabeta_suite(&mut r, &mut rng, order),
        Suite::Pseudo => pseudo_suite(&mut r, &mut rng, order),
        Suite::All => unreachable!(),
    }
    r.checks
}

fn golden(r: &mut Report) {
    for f in MatrixFixture::ALL {
        let printed = f.load();
        let ok = f.compute(printed.size()).map(|m| m == printed).unwrap_or(false);
        r.detailed(f.name(), ok, format!("{} rows", printed.size()));
    }
}

fn b_expansion_suite(r: &mut Report, rng: &mut ChaCha8Rng, order: usize) {
    let mut ok = true;
    for _ in 0..25 {
        let b = random_b(rng, 6, order);
        let powers = g_from_b(&b, &int(1), order).and_then(|g| g.pow_param());
        let Ok(powers) = powers else {
            ok = false;
            continue;
        };
        for n in 0..=order {
            let p = b_expansion(&b, n);
            ok &= phis().iter().all(|phi| p.eval(phi) == powers.coeff(n).eval(phi));
        }
    }
    r.detailed("odd-partition sum = [x^n] g^phi", ok, "25 random B".into());
    let constant = g_from_b(&BFunction::polynomial(vec![int(3)], 9), &int(1), 9).expect("order");
    let leading = (1..=9).all(|n| {
        b1_terms(n).iter().any(|(p, c)| p.multiplicities() == [n] && *c == int(1)) && constant.coeff(n) == int(3).pow(n as i32)
    });
    r.check("b0-only term of g_n is b0^n", leading);
}

fn b_composition_suite(r: &mut Report, rng: &mut ChaCha8Rng, order: usize) {
    let mut ok = true;
    for _ in 0..25 {
        let b = random_b(rng, 6, order);
        for phi in phis() {
            let Ok(g) = g_from_b(&b, &phi, order) else {
                ok = false;
                continue;
            };
            ok &= (0..=order).all(|n| u_poly(&b, n).eval(&phi) == g.coeff(n));
        }
    }
    r.detailed("u_n(phi) = [x^n] g for phi*B", ok, "25 random B".into());
}

fn sqrt_suite(r: &mut Report, rng: &mut ChaCha8Rng, reciprocal: bool, order: usize) {
    for i in 0..10 {
        let b = random_b(rng, 6, order);
        let ok = g_from_b(&b, &int(1), order).and_then(|g| sqrt_decompose(&g)).map(|d| {
            if reciprocal {
                d.h.negate_arg().mul(&d.h) == Series::one(d.h.order())
            } else {
                let xb = b.b.substitute_power(2).shift_up(1);
                let two_s = d.s.scale(&int(2));
                let upto = two_s.order().min(xb.order());
                two_s.truncate(upto) == xb.truncate(upto)
            }
        });
        let name = if reciprocal { "h(-x) h(x) = 1" } else { "x B(x^2) = 2 s(x)" };
        r.check(format!("{name}, random B #{i}"), ok.unwrap_or(false));
    }
}

fn appell_suite(r: &mut Report, order: usize) {
    for b1 in [int(1), int(2)] {
        let scaled = BFunction::new(catalan_bfun(order).b.scale_arg(&b1));
        r.check(format!("C({b1} x) is Appell"), is_appell_bfun(&scaled, order));
        let rejected = (1..5).all(|k| {
            let mut bent = scaled.b.clone();
            bent.set_coeff(k, bent.coeff(k) + int(1));
            !is_appell_bfun(&BFunction::new(bent), order)
        });
        r.check(format!("perturbations of C({b1} x) are not"), rejected);
    }
    r.check("1/(1-x) and 1+x are not", !is_appell_bfun(&rna_bfun(order), order) && !is_appell_bfun(&one_plus_x_bfun(order), order));
}

fn convolution_suite(r: &mut Report, rng: &mut ChaCha8Rng, order: usize) {
    let b = rna_bfun(order);
    let mut ok = true;
    for _ in 0..9 {
        let beta = ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3));
        let phi = ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3));
        let power = g_from_b(&b, &phi, order).and_then(|g| g.pow_rational(&beta));
        let Ok(power) = power else {
            ok = false;
            continue;
        };
        ok &= (0..=order).all(|n| conv_u_beta(&b, n).map(|c| c.eval(&beta)).eval(&phi) == power.coeff(n));
    }
    r.detailed("u_n(beta, phi) = [x^n] (g^[phi])^beta", ok, "9 sampled pairs".into());
    let rna = rna_series(&int(1), 6).expect("order");
    let closed = (1..=3).all(|beta| {
        let p = rna.pow_int(beta).expect("unit");
        (0..=6).all(|n| example8_poly(n).eval(&int(beta)) == p.coeff(n))
    });
    r.check("closed form of [x^n] R^beta", closed);
    r.check("A-sequence relation for R", lagrange_conv_relation(&rna_series(&int(1), order).expect("order")).unwrap_or(false));
}

/// `P_0 .. P_max` evaluated at the series `y` by `(n+1) P_{n+1} = (2n+1) y P_n - n P_{n-1}`.
fn legendre_of(y: &Series<Rational>, max_n: usize) -> Vec<Series<Rational>> {
    let mut out = vec![Series::one(y.order()), y.clone()];
    for n in 1..max_n {
        let next = y
            .mul(&out[n])
            .scale(&int(2 * n as i64 + 1))
            .sub(&out[n - 1].scale(&int(n as i64)))
            .scale(&ratio(1, n as i64 + 1));
        out.push(next);
    }
    out.truncate(max_n + 1);
    out
}

fn flow_suite(r: &mut Report, order: usize) {
    let id = l_matrix(&geom(order), order).map(|l| l == TriMatrix::identity(order + 1));
    r.check("L(1/(1-x)) is the identity", id.unwrap_or(false));

    let y = Series::from_coeffs(vec![int(1), int(0), int(-1)], order + 1).sqrt().expect("unit");
    let inner = Series::one(order + 1).sub(&y.shift_up(1).truncate(order + 1).scale(&int(2))).add(&Series::monomial(int(1), 2, order + 1));
    let g = inner.sqrt().and_then(|s| s.inverse()).expect("unit");
    let p = legendre_of(&y.truncate(order), 8.min(order));
    let ok = l_matrix(&g, order)
        .map(|l| (0..p.len()).all(|n| l.col_gf(n).map(|c| c == p[n].shift_up(n).truncate(order)).unwrap_or(false)));
    r.check("Legendre columns", ok.unwrap_or(false));

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let parity = (0..10).all(|_| {
        let b = random_b(&mut rng, 6, order);
        g_from_b(&b, &int(1), order + 1).and_then(|g| l_matrix(&g, order)).map(|l| parity_check(&l)).unwrap_or(false)
    });
    r.check("pseudo-involution rows have parity", parity);

    let printed = MatrixFixture::RGeom.load();
    let size = printed.size();
    let rgeom = rna_series(&int(1), size).and_then(|g| l_matrix(&g, size - 1)).map(|l| l == printed);
    r.check("L(RNA) is the printed <1/(1-x)>", rgeom.unwrap_or(false));
}

fn expand(parts: &[(usize, usize)]) -> Vec<usize> {
    parts.iter().flat_map(|&(p, m)| std::iter::repeat_n(p, m)).collect()
}

fn alphabeta_suite(r: &mut Report, rng: &mut ChaCha8Rng, order: usize) {
    let gs: Vec<Series<Rational>> = (0..10).map(|_| random_normalized(rng, order)).collect();
    let trips = gs.iter().all(|g| {
        let a = alpha_expand(g).map(|e| reconstruct(&e, order) == *g);
        let b = beta_expand(g).map(|e| reconstruct(&e, order) == *g);
        a.unwrap_or(false) && b.unwrap_or(false)
    });
    r.check("alpha and beta round trips", trips);

    for side in [Side::Alpha, Side::Beta] {
        let z_ok = s_z_polynomials(side).into_iter().all(|(n, mut printed)| {
            let mut computed: Vec<_> = s_terms(side, n).into_iter().map(|(m, w)| (expand(&m), w)).collect();
            computed.sort_by(|a, b| a.0.cmp(&b.0));
            printed.sort_by(|a, b| a.0.cmp(&b.0));
            computed == printed
        });
        r.check(format!("{side:?} s_1..s_4 against printed"), z_ok);
        let t_ok = s_t_lines(side).into_iter().all(|(n, printed)| {
            let computed: Vec<_> = s_terms(side, n).into_iter().map(|(m, w)| (expand(&m), w)).collect();
            printed.iter().all(|t| computed.iter().any(|(p, w)| *p == t.parts && w.eval(&int(1)) == t.coeff))
        });
        r.check(format!("{side:?} s_n at z = 1"), t_ok);
    }

    let lagrange = gs.iter().all(|g| {
        let a = alpha_expand(g).expect("normalized");
        (1..=8.min(order - 1)).all(|n| lagrange_relation_check(&a.coeffs, n))
    });
    r.check("Lagrange relation for s_n", lagrange);
    r.check("inverse relations", gs.iter().all(|g| inverse_relations_check(g).unwrap_or(false)));

    let mut p1 = Vec::new();
    let mut p2 = Vec::new();
    for g in &gs {
        let (l, rr) = prop1_sides(g).expect("normalized");
        p1.push((prop1_check(g).unwrap_or(false), agreement_degree(&l, &rr)));
        for t in [ratio(1, 2), int(2), int(-1)] {
            let (l, rr) = prop2_sides(g, &t).expect("normalized");
            p2.push((prop2_check(g, &t).unwrap_or(false), agreement_degree(&l, &rr)));
        }
    }
    let summary = |v: &[(bool, usize)]| {
        let min = v.iter().map(|p| p.1).min().unwrap_or(0);
        format!("{}/{} exact, sides agree through x^{min} at worst", v.iter().filter(|p| p.0).count(), v.len())
    };
    r.detailed("product identity (1,g)^2", p1.iter().all(|p| p.0), summary(&p1));
    r.detailed("product identity g_a^(t) g_b^(1-t)", p2.iter().all(|p| p.0), summary(&p2));

    let parts: Vec<[bool; 3]> = gs.iter().map(|g| deriv_relations_parts(g).unwrap_or([false; 3])).collect();
    r.check("d/dt g^(t) at t = 0", parts.iter().all(|p| p[0]));
    r.check("d/dt g_a^(t) at t = 1 equals beta(g)", parts.iter().all(|p| p[1]));
    r.check("d/dt g_b^(t) at t = 1 equals alpha g'", parts.iter().all(|p| p[2]));
}

fn pseudo_suite(r: &mut Report, rng: &mut ChaCha8Rng, order: usize) {
    let built = (0..10).all(|_| {
        let b = random_b(rng, 6, order);
        g_from_b(&b, &int(1), order)
            .and_then(RiordanPair::bell)
            .map(|p| is_pseudo_involution(&p, order))
            .unwrap_or(false)
    });
    r.check("every (g, xg) from a B-function", built);
    for phi in [int(1), int(2), ratio(1, 2)] {
        let p = RiordanPair::pascal_power(&phi, order);
        r.check(format!("Pascal power {phi}"), is_pseudo_involution(&p, order));
    }
    let mut g = rna_series(&int(1), order).expect("order");
    g.set_coeff(4, g.coeff(4) + int(1));
    let rejected = !is_pseudo_involution(&RiordanPair::bell(g.clone()).expect("unit"), order) && b_from_g(&g).is_err();
    r.check("perturbed RNA series is rejected", rejected);
}
