mod common;

use common::{basis_monomials, ppoly_strategy, strict_partitions};
use proptest::prelude::*;
use qlab_core::hirota::{bkp_check_with, bkp_equation};
use qlab_core::ring::XVar;
use qlab_core::{
    bkp_generate, hirota_apply, is_bkp_tau_bilinear, multiparam_q, p_to_x, q_lambda, rat, ratio,
    schur_q_row, x_to_p, DPoly, PPoly, ParamSeq, XPoly,
};

fn xpoly(max_weight: u32, terms: usize) -> impl Strategy<Value = XPoly> {
    ppoly_strategy(max_weight, terms).prop_map(|f| f.relabel::<XVar>())
}

fn dpoly(max_weight: u32) -> impl Strategy<Value = DPoly> {
    let basis = basis_monomials(max_weight);
    let n = basis.len();
    prop::collection::vec((0..n, -4i64..=4), 1..=3).prop_map(move |terms| {
        DPoly::from_terms(terms.into_iter().map(|(i, c)| (basis[i].clone(), rat(c))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn hirota_is_bilinear(p in dpoly(6), f in xpoly(7, 4), f2 in xpoly(7, 4), g in xpoly(7, 4)) {
        let c = ratio(-3, 5);
        let lhs = hirota_apply(&p, &(&f + &f2.scale(&c)), &g);
        let rhs = &hirota_apply(&p, &f, &g) + &hirota_apply(&p, &f2, &g).scale(&c);
        prop_assert_eq!(lhs, rhs);
        let lhs = hirota_apply(&p, &g, &(&f + &f2));
        let rhs = &hirota_apply(&p, &g, &f) + &hirota_apply(&p, &g, &f2);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn swapping_arguments_gives_degree_sign(d in dpoly(6), f in xpoly(7, 4), g in xpoly(7, 4)) {
        for (m, c) in d.terms() {
            let p = DPoly::term(c.clone(), m.clone());
            let sign = if m.degree() % 2 == 0 { rat(1) } else { rat(-1) };
            prop_assert_eq!(hirota_apply(&p, &f, &g), hirota_apply(&p, &g, &f).scale(&sign));
        }
    }

    #[test]
    fn odd_powers_of_d1_vanish_on_squares(f in xpoly(8, 5)) {
        for n in 0..=3 {
            prop_assert!(hirota_apply(&DPoly::var(1).pow(2 * n + 1), &f, &f).is_zero());
        }
    }

    #[test]
    fn substitution_round_trips(f in ppoly_strategy(12, 6)) {
        prop_assert_eq!(x_to_p(&p_to_x(&f)), f);
    }
}

#[test]
fn substitution_examples() {
    assert_eq!(p_to_x(&schur_q_row(1)), XPoly::var(1));
    let want = &XPoly::var(3) + &XPoly::var(1).pow(3).scale(&ratio(1, 6));
    assert_eq!(p_to_x(&schur_q_row(3)), want);
    assert_eq!(p_to_x(&PPoly::one()), XPoly::one());
}

#[test]
fn hierarchy_shape() {
    let eqs = bkp_generate(10).unwrap();
    let y32 = eqs.iter().find(|e| e.y.render("y") == "y3^2").unwrap();
    assert_eq!(y32.canonical, bkp_equation().scale(&ratio(8, 45)));
    let y1 = eqs.iter().find(|e| e.y.render("y") == "y1").unwrap();
    assert!(y1.is_trivial());
    for e in &eqs {
        for (m, _) in e.raw.terms() {
            assert_eq!(m.weight(), e.y.weight());
        }
        for (m, _) in e.canonical.terms() {
            assert_eq!(m.degree() % 2, 0);
        }
    }
    let mut sorted = eqs.clone();
    sorted.sort_by(|a, b| a.y.cmp(&b.y));
    assert_eq!(sorted, eqs);
    assert!(bkp_generate(1).is_err());
}

#[test]
fn the_two_verifiers_agree() {
    let eqs = bkp_generate(10).unwrap();
    let mut corpus: Vec<PPoly> = strict_partitions(6).iter().map(|l| q_lambda(l)).collect();
    corpus.push(PPoly::one());
    corpus.push(multiparam_q(&[3, 1], &ParamSeq::factorial(4)).unwrap());
    corpus.push(&schur_q_row(1) + &schur_q_row(3));
    corpus.push(&schur_q_row(1) + &PPoly::var(3).scale(&ratio(1, 2)));
    corpus.push(&schur_q_row(2) + &schur_q_row(4));
    corpus.push(&PPoly::var(1).pow(2) + &PPoly::var(3));
    let mut failures = 0;
    for tau in &corpus {
        let bilinear = is_bkp_tau_bilinear(tau).holds;
        let hirota = bkp_check_with(tau, &eqs).pass;
        assert_eq!(bilinear, hirota, "τ={tau}");
        failures += usize::from(!bilinear);
    }
    assert!(failures >= 2);
}

#[test]
fn witness_fails_at_the_lowest_equations() {
    let eqs = bkp_generate(10).unwrap();
    let witness = &schur_q_row(1) + &PPoly::var(3).scale(&ratio(1, 2));
    let report = bkp_check_with(&witness, &eqs);
    assert!(!report.pass);
    let failing: Vec<String> = report.failures().map(|c| c.y.render("y")).collect();
    for y in ["y1^6", "y1^3*y3", "y3^2", "y1*y5"] {
        assert!(failing.iter().any(|f| f == y), "{y} not in {failing:?}");
    }
}
