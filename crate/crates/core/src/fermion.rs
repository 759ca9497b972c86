//! Neutral fermions `φ_m` acting on `Q[p1, p3, ...]` through the vertex
//! operator `Φ(v) = Q(v) R(-v)^⊥`, the vertex realization of `Q_λ`, and
//! the bilinear identity `Ω(τ ⊗ τ) = τ ⊗ τ`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::ring::{binomial, sign_rat, Mono, PPoly, Rat, Side, TPoly};
use crate::series::schur_q_rows;

/// Expansion of `f(p_1 + s v, p_3 + s v^3, p_5 + s v^5, ...)` in powers of
/// `v`: entry `k` is the coefficient of `v^k`. With `s = -1` this is
/// `R(-v)^⊥ f`, with `s = +1` it is `R(v)^⊥ f`.
pub fn adjoint_shift(f: &PPoly, s: i64) -> Vec<PPoly> {
    let Some(top) = f.max_weight() else {
        return Vec::new();
    };
    let mut out = vec![PPoly::zero(); top as usize + 1];
    let sign = Rat::from_integer(s.into());
    for (mono, c) in f.terms() {
        // distribute (p_n + s v^n)^{e_n} over all factors
        let mut partial: Vec<(Mono, u32, Rat)> = vec![(Mono::one(), 0, c.clone())];
        for &(n, e) in mono.factors() {
            let mut next = Vec::with_capacity(partial.len() * (e as usize + 1));
            for (m, vdeg, coef) in &partial {
                for j in 0..=e {
                    let mut t = coef * binomial(e, j);
                    for _ in 0..j {
                        t *= &sign;
                    }
                    if t.is_zero() {
                        continue;
                    }
                    next.push((m.mul(&Mono::power(n, e - j)), vdeg + n * j, t));
                }
            }
            partial = next;
        }
        for (m, vdeg, coef) in partial {
            out[vdeg as usize].add_term(m, coef);
        }
    }
    out
}

/// `φ_m f = Σ_{k>=0} Q_{m+k} · [v^k] R(-v)^⊥ f`.
///
/// The sum stops at `k = weight(f)`; for homogeneous `f` the result is
/// homogeneous of weight `weight(f) + m`.
pub fn apply_phi(m: i64, f: &PPoly) -> PPoly {
    let Some(top) = f.max_weight() else {
        return PPoly::zero();
    };
    if m + (top as i64) < 0 {
        return PPoly::zero();
    }
    let shifted = adjoint_shift(f, -1);
    let rows = schur_q_rows((m + top as i64).max(0) as usize);
    let mut out = PPoly::zero();
    for (k, g) in shifted.iter().enumerate() {
        let idx = m + k as i64;
        if idx < 0 || g.is_zero() {
            continue;
        }
        out += &(&rows[idx as usize] * g);
    }
    out
}

/// `Σ A_n φ_n f` for the given `(n, A_n)` pairs.
pub fn apply_phi_sum(coeffs: &[(i64, Rat)], f: &PPoly) -> PPoly {
    let mut out = PPoly::zero();
    for (n, a) in coeffs {
        out += &apply_phi(*n, f).scale(a);
    }
    out
}

/// `Q_λ = φ_{λ_1} ⋯ φ_{λ_l}(1)` for any integer vector; the operators are
/// applied right to left without reordering the entries.
pub fn q_lambda(lambda: &[i64]) -> PPoly {
    lambda
        .iter()
        .rev()
        .fold(PPoly::one(), |acc, &m| apply_phi(m, &acc))
}

/// `Ω T` with `Ω = Σ_n φ_n ⊗ (-1)^n φ_{-n}`, summing over
/// `-W_left <= n <= W_right` where `W` is the largest leg weight on each
/// side; all other terms vanish.
pub fn apply_omega(t: &TPoly) -> TPoly {
    if t.is_zero() {
        return TPoly::zero();
    }
    let wl = t.max_weight(Side::Left).unwrap_or(0) as i64;
    let wr = t.max_weight(Side::Right).unwrap_or(0) as i64;
    apply_omega_range(t, -wl, wr)
}

/// `Σ_{n=lo..=hi} (φ_n ⊗ (-1)^n φ_{-n}) T`.
pub fn apply_omega_range(t: &TPoly, lo: i64, hi: i64) -> TPoly {
    let mut out = TPoly::zero();
    if t.is_zero() || lo > hi {
        return out;
    }
    let images = |side: Side, sign: i64| -> BTreeMap<Mono, Vec<PPoly>> {
        t.legs(side)
            .into_iter()
            .map(|m| {
                let f = PPoly::term(Rat::one(), m.clone());
                let row = (lo..=hi).map(|n| apply_phi(sign * n, &f)).collect();
                (m, row)
            })
            .collect()
    };
    let left = images(Side::Left, 1);
    let right = images(Side::Right, -1);
    let mut rows: BTreeMap<&Mono, Vec<(&Mono, &Rat)>> = BTreeMap::new();
    for (a, b, c) in t.terms() {
        rows.entry(a).or_default().push((b, c));
    }
    for (i, n) in (lo..=hi).enumerate() {
        let sign = sign_rat(n % 2 != 0);
        for (a, row) in &rows {
            let fa = &left[*a][i];
            if fa.is_zero() {
                continue;
            }
            let mut gathered = PPoly::zero();
            for (b, c) in row {
                let fb = &right[*b][i];
                if !fb.is_zero() {
                    gathered += &fb.scale(c);
                }
            }
            if !gathered.is_zero() {
                out.add_product(fa, &gathered, &sign);
            }
        }
    }
    out
}

/// Outcome of checking `Ω(f ⊗ f) = f ⊗ f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearReport {
    pub holds: bool,
    /// `Ω(f ⊗ f) - f ⊗ f`; zero exactly when the identity holds.
    pub discrepancy: TPoly,
}

pub fn is_bkp_tau_bilinear(f: &PPoly) -> BilinearReport {
    let t = TPoly::of(f, f);
    let discrepancy = apply_omega(&t).sub(&t);
    BilinearReport {
        holds: discrepancy.is_zero(),
        discrepancy,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, ratio};
    use crate::series::schur_q_row;

    fn p(n: u32) -> PPoly {
        PPoly::var(n)
    }

    #[test]
    fn apply_phi_examples() {
        let two_p1 = p(1).scale(&rat(2));
        assert_eq!(apply_phi(1, &PPoly::one()), two_p1);
        assert_eq!(apply_phi(-1, &two_p1), PPoly::constant(rat(-2)));
        assert_eq!(apply_phi(0, &two_p1), -&two_p1);
        assert_eq!(apply_phi(-3, &two_p1), PPoly::zero());
        assert_eq!(apply_phi(4, &PPoly::zero()), PPoly::zero());
    }

    #[test]
    fn q_lambda_examples() {
        let expected = &p(1).pow(3).scale(&ratio(4, 3)) - &p(3).scale(&ratio(4, 3));
        assert_eq!(q_lambda(&[2, 1]), expected);
        let via_rows = &(&schur_q_row(2) * &schur_q_row(1)) - &schur_q_row(3).scale(&rat(2));
        assert_eq!(q_lambda(&[2, 1]), via_rows);
        assert_eq!(q_lambda(&[1, 1]), PPoly::zero());
        assert_eq!(q_lambda(&[]), PPoly::one());
        assert_eq!(q_lambda(&[1, 2]), -q_lambda(&[2, 1]));
        for k in 0..6 {
            assert_eq!(q_lambda(&[k]), schur_q_row(k));
        }
    }

    #[test]
    fn adjoint_shift_is_substitution() {
        // f = p1^2 p3: f(p1+v, p3+v^3) = p1^2 p3 + 2 p1 p3 v + p3 v^2 + p1^2 v^3 + 2 p1 v^4 + v^5
        let f = &p(1).pow(2) * &p(3);
        let g = adjoint_shift(&f, 1);
        assert_eq!(g.len(), 6);
        assert_eq!(g[1], (&p(1) * &p(3)).scale(&rat(2)));
        assert_eq!(g[3], p(1).pow(2));
        assert_eq!(g[5], PPoly::one());
        let h = adjoint_shift(&f, -1);
        assert_eq!(h[5], PPoly::constant(rat(-1)));
    }

    #[test]
    fn omega_examples() {
        let one = TPoly::of(&PPoly::one(), &PPoly::one());
        assert_eq!(apply_omega(&one), one);
        let q1 = schur_q_row(1);
        let t = TPoly::of(&q1, &q1);
        assert_eq!(apply_omega(&t), t);
        assert!(apply_omega(&TPoly::zero()).is_zero());
    }

    #[test]
    fn omega_range_is_sufficient() {
        let f = &q_lambda(&[3, 1]) + &p(1).scale(&ratio(1, 2));
        let g = q_lambda(&[2]);
        let t = TPoly::of(&f, &g);
        let wide = apply_omega_range(&t, -9, 9);
        assert_eq!(apply_omega(&t), wide);
    }

    #[test]
    fn bilinear_examples() {
        assert!(is_bkp_tau_bilinear(&PPoly::one()).holds);
        assert!(is_bkp_tau_bilinear(&q_lambda(&[2, 1])).holds);
        assert!(is_bkp_tau_bilinear(&PPoly::zero()).holds);
    }
}
