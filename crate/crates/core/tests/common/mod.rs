#![allow(dead_code)]

use num_traits::{One, Zero};
use proptest::prelude::*;
use qlab_core::hirota::odd_monomials;
use qlab_core::{ratio, Mono, PPoly, ParamSeq, Rat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Monomials in `p1, p3, ...` of weight `0..=max_weight`, the constant first.
pub fn basis_monomials(max_weight: u32) -> Vec<Mono> {
    let mut out = vec![Mono::one()];
    out.extend(odd_monomials(max_weight));
    out
}

/// Strict partitions with `1 <= |λ| <= max_size`.
pub fn strict_partitions(max_size: i64) -> Vec<Vec<i64>> {
    fn go(rem: i64, largest: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        for part in (1..=largest.min(rem)).rev() {
            cur.push(part);
            out.push(cur.clone());
            go(rem - part, part - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max_size, max_size, &mut Vec::new(), &mut out);
    out.sort_by_key(|l| (l.iter().sum::<i64>(), l.clone()));
    out
}

/// Vectors of positive integers with `1 <= Σα <= max_sum`.
pub fn compositions(max_sum: i64) -> Vec<Vec<i64>> {
    fn go(rem: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        for part in 1..=rem {
            cur.push(part);
            out.push(cur.clone());
            go(rem - part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max_sum, &mut Vec::new(), &mut out);
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rat<R: Rng>(rng: &mut R) -> Rat {
    let num: i64 = rng.gen_range(-9..=9);
    let den: i64 = rng.gen_range(1..=7);
    ratio(num, den)
}

/// `n` distinct rationals.
pub fn random_points<R: Rng>(rng: &mut R, n: usize) -> Vec<Rat> {
    let mut out: Vec<Rat> = Vec::with_capacity(n);
    while out.len() < n {
        let r = random_rat(rng);
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

/// The fixed random rational parameter sequence used across the suites.
pub fn random_params(len: usize) -> ParamSeq {
    let mut r = rng(0x05ee_da11);
    let mut values = vec![ratio(0, 1)];
    values.extend((1..len).map(|_| random_rat(&mut r)));
    ParamSeq::new(values).unwrap()
}

pub fn ppoly_strategy(max_weight: u32, max_terms: usize) -> impl Strategy<Value = PPoly> {
    let basis = basis_monomials(max_weight);
    let n = basis.len();
    prop::collection::vec((0..n, -6i64..=6, 1i64..=4), 0..=max_terms).prop_map(move |terms| {
        PPoly::from_terms(
            terms
                .into_iter()
                .map(|(i, num, den)| (basis[i].clone(), ratio(num, den))),
        )
    })
}

pub fn homogeneous_strategy(max_weight: u32, max_terms: usize) -> impl Strategy<Value = PPoly> {
    (0..=max_weight, ppoly_strategy(max_weight, max_terms)).prop_map(|(w, f)| f.weight_part(w))
}

// Truncated series in w = 1/u, coefficient of w^i at index i.
pub fn series_mul(a: &[Rat], b: &[Rat], order: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); order + 1];
    for (i, x) in a.iter().enumerate().take(order + 1) {
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

// 1/((u-a_1)...(u-a_k)) = w^k Π 1/(1 - a_i w).
pub fn inv_shifted_series(a: &[Rat], k: usize, order: usize) -> Vec<Rat> {
    let mut acc = vec![Rat::zero(); order + 1];
    if k <= order {
        acc[k] = Rat::one();
    }
    for ai in &a[1..=k] {
        let geo: Vec<Rat> = (0..=order)
            .map(|j| num_traits::pow(ai.clone(), j))
            .collect();
        acc = series_mul(&acc, &geo, order);
    }
    acc
}

// (u - a_1)...(u - a_k) as coefficients of u^0..u^k.
pub fn shifted_poly(a: &[Rat], k: usize) -> Vec<Rat> {
    let mut acc = vec![Rat::one()];
    for ai in &a[1..=k] {
        let mut next = vec![Rat::zero(); acc.len() + 1];
        for (i, c) in acc.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * ai;
        }
        acc = next;
    }
    acc
}
