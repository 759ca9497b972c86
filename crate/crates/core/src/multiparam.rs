//! Multiparameter Schur Q-functions `Q_α^(a)` expanded in classical `Q_λ`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fermion::{apply_phi_sum, q_lambda};
use crate::oracle::genq_expand;
use crate::ring::{sign_rat, PPoly, Rat};
use crate::series::{elem_sym, shifted_transition, ParamSeq, Transition};

/// An index vector brought to strict-partition form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Normalized {
    /// Some entry repeats; the function vanishes.
    Vanishes,
    /// `sign` of the sorting permutation and the sorted strict partition.
    Signed { sign: i32, partition: Vec<i64> },
}

/// Sorts a vector of positive integers decreasingly, tracking the sign of
/// the permutation.
pub fn normalize_index(alpha: &[i64]) -> Result<Normalized> {
    if let Some(&bad) = alpha.iter().find(|&&v| v <= 0) {
        return Err(Error::NonPositiveEntry(bad));
    }
    let mut v = alpha.to_vec();
    let mut sign = 1;
    // insertion sort, one sign flip per swap
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] < v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return Ok(Normalized::Vanishes);
    }
    Ok(Normalized::Signed { sign, partition: v })
}

fn check_alpha(alpha: &[i64], a: &ParamSeq) -> Result<()> {
    if let Some(&bad) = alpha.iter().find(|&&v| v <= 0) {
        return Err(Error::NonPositiveEntry(bad));
    }
    if let Some(&top) = alpha.iter().max() {
        // needs a_0..a_{top-1}
        a.get(top as usize - 1)?;
    }
    Ok(())
}

/// Coefficients `A_{λ,m} = (-1)^{λ-m} e_{m-λ}(a_1..a_{m-1})` for
/// `λ = 1..=m`; entry `λ - 1`.
pub fn transition_row(m: i64, a: &ParamSeq) -> Result<Vec<Rat>> {
    let args = a.shifted(m as usize - 1)?;
    Ok((1..=m)
        .map(|lambda| sign_rat((m - lambda) % 2 != 0) * elem_sym(m - lambda, args))
        .collect())
}

/// `Q_α^(a) = Σ_λ Π_i (-1)^{λ_i-α_i} e_{α_i-λ_i}(a_1..a_{α_i-1}) Q_λ`
/// summed over the box `1 <= λ_i <= α_i`, each `Q_λ` taken from the
/// fermionic realization as is (no reordering of `λ`).
pub fn multiparam_q(alpha: &[i64], a: &ParamSeq) -> Result<PPoly> {
    check_alpha(alpha, a)?;
    let rows: Vec<Vec<Rat>> = alpha
        .iter()
        .map(|&m| transition_row(m, a))
        .collect::<Result<_>>()?;
    let mut out = PPoly::zero();
    let mut lambda = vec![1i64; alpha.len()];
    loop {
        let coeff: Rat = lambda
            .iter()
            .zip(&rows)
            .map(|(&l, row)| row[l as usize - 1].clone())
            .product();
        if !coeff.is_zero() {
            out += &q_lambda(&lambda).scale(&coeff);
        }
        // odometer over the box
        let mut i = 0;
        loop {
            if i == lambda.len() {
                return Ok(out);
            }
            if lambda[i] < alpha[i] {
                lambda[i] += 1;
                break;
            }
            lambda[i] = 1;
            i += 1;
        }
    }
}

/// Same function as [`multiparam_q`], built as `X_{α_1} ⋯ X_{α_l}(1)` with
/// `X_m = Σ_{s=1..m} (-1)^{s-m} e_{m-s}(a_1..a_{m-1}) φ_s`.
pub fn multiparam_q_operator(alpha: &[i64], a: &ParamSeq) -> Result<PPoly> {
    check_alpha(alpha, a)?;
    let mut acc = PPoly::one();
    for &m in alpha.iter().rev() {
        let coeffs: Vec<(i64, Rat)> = transition_row(m, a)?
            .into_iter()
            .enumerate()
            .map(|(i, c)| (i as i64 + 1, c))
            .collect();
        acc = apply_phi_sum(&coeffs, &acc);
    }
    Ok(acc)
}

/// Re-expands `Σ_λ Q_λ^(a) / Π (u_i|τa)^{λ_i}` in ordinary powers `u_i^{-k}`
/// and compares each coefficient with `k_i <= order` against the classical
/// generating function `Q^+(u_1..u_l)`.
pub fn korotkih_check(l: usize, a: &ParamSeq, order: usize) -> Result<bool> {
    if !(1..=3).contains(&l) {
        return Err(Error::OutOfRange(format!("generating function length {l}")));
    }
    if order == 0 || order > 10 {
        return Err(Error::OutOfRange(format!("order {order}")));
    }
    // inv[λ][k]: coefficient of u^{-k} in 1/(u|τa)^λ
    let inv: Vec<Vec<Rat>> = (0..=order)
        .map(|lam| shifted_transition(lam, Transition::InvShiftedToPower, a, order))
        .collect::<Result<_>>()?;
    let classical = genq_expand(l, order)?;
    let mut multi: BTreeMap<Vec<i64>, PPoly> = BTreeMap::new();
    for k in positive_box(l, order as i64) {
        let mut lhs = PPoly::zero();
        for lambda in positive_box(l, order as i64) {
            if lambda.iter().zip(&k).any(|(x, y)| x > y) {
                continue;
            }
            let coeff: Rat = lambda
                .iter()
                .zip(&k)
                .map(|(&lam, &kk)| inv[lam as usize][kk as usize].clone())
                .product();
            if coeff.is_zero() {
                continue;
            }
            let q = match multi.get(&lambda) {
                Some(q) => q,
                None => {
                    let q = multiparam_q(&lambda, a)?;
                    multi.entry(lambda.clone()).or_insert(q)
                }
            };
            lhs += &q.scale(&coeff);
        }
        let rhs = classical.get(&k).cloned().unwrap_or_default();
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All vectors in `[1, top]^l`, first coordinate fastest.
pub(crate) fn positive_box(l: usize, top: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if top < 1 {
        return out;
    }
    let mut v = vec![1i64; l];
    loop {
        out.push(v.clone());
        let mut i = 0;
        loop {
            if i == l {
                return out;
            }
            if v[i] < top {
                v[i] += 1;
                break;
            }
            v[i] = 1;
            i += 1;
        }
    }
}

/// `Q_α` from the classical basis, with sign from sorting; zero if entries
/// repeat.
pub fn classical_normalized(alpha: &[i64]) -> Result<PPoly> {
    Ok(match normalize_index(alpha)? {
        Normalized::Vanishes => PPoly::zero(),
        Normalized::Signed { sign, partition } => {
            q_lambda(&partition).scale(&Rat::from_integer(sign.into()))
        }
    })
}
