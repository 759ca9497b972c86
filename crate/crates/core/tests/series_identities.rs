mod common;

use common::{inv_shifted_series, random_rat, rng, shifted_poly};
use num_traits::{One, Zero};
use proptest::prelude::*;
use qlab_core::series::{
    det, exp_series, exp_series_det, exp_series_partition_sum, log_series, log_series_det,
    schur_q_row, shifted_transition, ParamSeq, Transition,
};
use qlab_core::{rat, ratio, PPoly, Rat};

fn random_seq(seed: u64, len: usize) -> ParamSeq {
    let mut r = rng(seed);
    let mut v = vec![rat(0)];
    v.extend((1..len).map(|_| random_rat(&mut r)));
    ParamSeq::new(v).unwrap()
}

fn families() -> Vec<ParamSeq> {
    vec![
        ParamSeq::zero(12),
        ParamSeq::factorial(12),
        random_seq(7, 12),
        random_seq(8, 12),
    ]
}

#[test]
fn power_to_shifted_reassembles_u_to_the_n() {
    for a in families() {
        for n in 0..=6 {
            let c = shifted_transition(n, Transition::PowerToShifted, &a, 0).unwrap();
            let mut total = vec![Rat::zero(); n + 1];
            for (k, ck) in c.iter().enumerate() {
                for (i, v) in shifted_poly(a.values(), k).iter().enumerate() {
                    total[i] += ck * v;
                }
            }
            let mut want = vec![Rat::zero(); n + 1];
            want[n] = Rat::one();
            assert_eq!(total, want, "n={n} a={a}");
        }
    }
}

#[test]
fn shifted_to_power_is_the_expanded_product() {
    for a in families() {
        for n in 0..=6 {
            let c = shifted_transition(n, Transition::ShiftedToPower, &a, 0).unwrap();
            assert_eq!(c, shifted_poly(a.values(), n), "n={n} a={a}");
        }
    }
}

#[test]
fn inverse_power_to_shifted_matches_series() {
    let cutoff = 10;
    for a in families() {
        for n in 1..=6 {
            let c = shifted_transition(n, Transition::InvPowerToShifted, &a, cutoff).unwrap();
            let mut total = vec![Rat::zero(); cutoff + 1];
            for (k, ck) in c.iter().enumerate().skip(n) {
                for (i, v) in inv_shifted_series(a.values(), k, cutoff).iter().enumerate() {
                    total[i] += ck * v;
                }
            }
            let mut want = vec![Rat::zero(); cutoff + 1];
            want[n] = Rat::one();
            assert_eq!(total, want, "n={n} a={a}");
        }
    }
}

#[test]
fn inverse_shifted_to_power_matches_series() {
    let cutoff = 10;
    for a in families() {
        for n in 1..=6 {
            let c = shifted_transition(n, Transition::InvShiftedToPower, &a, cutoff).unwrap();
            assert_eq!(c, inv_shifted_series(a.values(), n, cutoff), "n={n} a={a}");
        }
    }
}

#[test]
fn falling_power_generating_identity() {
    let order = 8;
    let mut r = rng(42);
    for case in 0..5 {
        let x = random_rat(&mut r);
        let a = random_seq(100 + case, order + 2);
        let mut lhs = vec![Rat::zero(); order + 1];
        for m in 0..=order {
            let fm = a.falling(&x, m).unwrap();
            for (i, v) in inv_shifted_series(a.values(), m, order).iter().enumerate() {
                lhs[i] += &fm * v;
            }
        }
        let rhs: Vec<Rat> = (0..=order).map(|m| num_traits::pow(x.clone(), m)).collect();
        assert_eq!(lhs, rhs, "x={x} a={a}");
    }
}

fn generic_x(k: usize) -> Vec<PPoly> {
    (1..=k).map(|i| PPoly::var(2 * i as u32 - 1)).collect()
}

#[test]
fn three_formulas_for_s_k_agree() {
    let x = generic_x(8);
    let rec = exp_series(&x, 8);
    for (k, sk) in rec.iter().enumerate() {
        assert_eq!(&exp_series_partition_sum(&x, k), sk, "k={k}");
        assert_eq!(&exp_series_det(&x, k), sk, "k={k}");
    }
}

#[test]
fn log_determinant_matches_recursion() {
    let s = generic_x(8);
    let mut full = vec![PPoly::one()];
    full.extend(s);
    let rec = log_series(&full, 8).unwrap();
    for k in 1..=8 {
        assert_eq!(log_series_det(&full, k).unwrap(), rec[k - 1], "k={k}");
    }
}

#[test]
fn symbolic_round_trip() {
    let x = generic_x(10);
    let s = exp_series(&x, 10);
    assert_eq!(log_series(&s, 10).unwrap(), x);
}

#[test]
fn determinant_of_triangular_is_diagonal_product() {
    let m = vec![
        vec![rat(2), rat(5), rat(-1)],
        vec![rat(0), ratio(1, 3), rat(4)],
        vec![rat(0), rat(0), rat(-6)],
    ];
    assert_eq!(det(&m), rat(-4));
}

#[test]
fn q_times_q_of_minus_u_is_one() {
    for k in 1..=12i64 {
        let mut total = PPoly::zero();
        for j in 0..=k {
            let term = &schur_q_row(k - j) * &schur_q_row(j);
            if j % 2 == 0 {
                total += &term;
            } else {
                total -= &term;
            }
        }
        assert!(total.is_zero(), "k={k}: {total}");
    }
}

#[test]
fn even_rows_reduce_to_lower_rows() {
    for m in 1..=5i64 {
        let mut rhs = PPoly::zero();
        for r in 1..m {
            let term = &schur_q_row(r) * &schur_q_row(2 * m - r);
            if r % 2 == 1 {
                rhs += &term;
            } else {
                rhs -= &term;
            }
        }
        let sq =
            (&schur_q_row(m) * &schur_q_row(m)).scale(&ratio(if m % 2 == 1 { 1 } else { -1 }, 2));
        rhs += &sq;
        assert_eq!(schur_q_row(2 * m), rhs, "m={m}");
    }
}

#[test]
fn rows_are_homogeneous() {
    for k in 0..=12 {
        let q = schur_q_row(k);
        assert!(q.is_homogeneous());
        assert_eq!(q.max_weight(), Some(k as u32));
    }
}

fn rat_seq(len: usize) -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec((-8i64..=8, 1i64..=5), len)
        .prop_map(|v| v.into_iter().map(|(n, d)| ratio(n, d)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exp_then_log_is_identity(x in rat_seq(10)) {
        let s = exp_series(&x, 10);
        prop_assert_eq!(&s[0], &rat(1));
        prop_assert_eq!(log_series(&s, 10).unwrap(), x);
    }

    #[test]
    fn log_then_exp_is_identity(tail in rat_seq(10)) {
        let mut s = vec![rat(1)];
        s.extend(tail);
        let x = log_series(&s, 10).unwrap();
        prop_assert_eq!(exp_series(&x, 10), s);
    }
}

#[test]
fn log_rejects_bad_constant() {
    assert!(log_series(&[rat(2), rat(1)], 1).is_err());
}
