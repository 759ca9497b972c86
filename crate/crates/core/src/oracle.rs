//! Brute-force constructions in finitely many variables `x_1..x_N`, used
//! to validate the fast routines.
//!
//! Symmetrization runs term by term over the permutations with exact
//! arithmetic. Terms sharing a denominator (same image of the first `l`
//! positions) are collected first, everything is put over the Vandermonde
//! product `Π_{a<b} (x_a - x_b)`, and the final division is checked to be
//! exact.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{rat, PPoly, Rat};
use crate::series::{schur_q_rows, ParamSeq};

pub const MAX_VARS: usize = 8;

type Exps = [u8; MAX_VARS];

/// Polynomial in explicit variables `x_1..x_N`, `N <= 8`.
#[derive(Clone, PartialEq, Eq)]
pub struct XVarsPoly {
    nvars: usize,
    terms: BTreeMap<Exps, Rat>,
}

impl XVarsPoly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term([0; MAX_VARS], c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &Rat)> + '_ {
        self.terms.iter().map(move |(e, c)| (&e[..self.nvars], c))
    }

    fn add_term(&mut self, e: Exps, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(*e, v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars.max(other.nvars));
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = *ea;
                for (x, y) in e.iter_mut().zip(eb) {
                    *x += y;
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Multiplies by `x_a + s x_b` with `s = ±1`.
    fn mul_linear(&self, a: usize, b: usize, s: i64) -> Self {
        let mut out = Self::zero(self.nvars);
        let sign = rat(s);
        for (e, c) in &self.terms {
            let mut ea = *e;
            ea[a] += 1;
            out.add_term(ea, c.clone());
            let mut eb = *e;
            eb[b] += 1;
            out.add_term(eb, c * &sign);
        }
        out
    }

    /// Exact quotient by `x_i - x_j`; `None` when it does not divide.
    pub fn div_difference(&self, i: usize, j: usize) -> Option<Self> {
        // group by the exponents of all other variables; each group is a
        // polynomial in x_i with coefficients in x_j
        let mut groups: BTreeMap<Exps, BTreeMap<u8, BTreeMap<u8, Rat>>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut key = *e;
            key[i] = 0;
            key[j] = 0;
            groups
                .entry(key)
                .or_default()
                .entry(e[i])
                .or_default()
                .insert(e[j], c.clone());
        }
        let mut out = Self::zero(self.nvars);
        for (key, by_i) in groups {
            let top = *by_i.keys().next_back().expect("nonempty group");
            // synthetic division by (x_i - x_j): q_{k-1} = c_k + x_j q_k
            let mut carry: BTreeMap<u8, Rat> = BTreeMap::new();
            for k in (0..=top).rev() {
                let mut cur: BTreeMap<u8, Rat> = by_i.get(&k).cloned().unwrap_or_default();
                for (d, v) in &carry {
                    let slot = cur.entry(d + 1).or_insert_with(Rat::zero);
                    *slot += v;
                }
                cur.retain(|_, v| !v.is_zero());
                if k == 0 {
                    if !cur.is_empty() {
                        return None;
                    }
                    break;
                }
                for (d, v) in &cur {
                    let mut e = key;
                    e[i] = k - 1;
                    e[j] = *d;
                    out.add_term(e, v.clone());
                }
                carry = cur;
            }
        }
        Some(out)
    }

    pub fn evaluate(&self, xs: &[Rat]) -> Rat {
        assert!(xs.len() >= self.nvars, "need a value for every variable");
        let mut total = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in xs.iter().zip(&e[..self.nvars]) {
                for _ in 0..k {
                    t *= v;
                }
            }
            total += t;
        }
        total
    }

    /// Sets the last variable to zero and drops it.
    pub fn drop_last(&self) -> Self {
        assert!(self.nvars > 0);
        let last = self.nvars - 1;
        let mut out = Self::zero(last);
        for (e, c) in &self.terms {
            if e[last] == 0 {
                out.add_term(*e, c.clone());
            }
        }
        out
    }
}

impl fmt::Debug for XVarsPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XVarsPoly[{}](", self.nvars)?;
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for (v, &k) in e[..self.nvars].iter().enumerate() {
                if k > 0 {
                    write!(f, "*x{}^{}", v + 1, k)?;
                }
            }
        }
        f.write_str(")")
    }
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All orderings of `items`.
fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `2^l/(N-l)! Σ_{σ∈S_N} Π_{i<=l} f_i(x_{σ(i)}) Π_{i<=l, i<j<=N} (x_{σ(i)}+x_{σ(j)})/(x_{σ(i)}-x_{σ(j)})`
/// where `rows[i]` lists the coefficients of `f_i` in ascending powers.
pub fn symmetrize(rows: &[Vec<Rat>], nvars: usize) -> Result<XVarsPoly> {
    let l = rows.len();
    if nvars > MAX_VARS {
        return Err(Error::TooManyVariables {
            requested: nvars,
            max: MAX_VARS,
        });
    }
    if l > nvars {
        return Err(Error::TooFewVariables {
            len: l,
            vars: nvars,
        });
    }
    let mut numerator = XVarsPoly::zero(nvars);
    for image in subsets(nvars, l) {
        let rest: Vec<usize> = (0..nvars).filter(|v| !image.contains(v)).collect();
        // Σ over orderings of the image: sgn(σ) Π f_i(x_{σ(i)})
        let mut alternant = XVarsPoly::zero(nvars);
        for order in permutations(&image) {
            let full: Vec<usize> = order.iter().chain(&rest).copied().collect();
            let mut term = XVarsPoly::constant(nvars, rat(permutation_sign(&full)));
            for (row, &var) in rows.iter().zip(&order) {
                let mut f = XVarsPoly::zero(nvars);
                for (k, c) in row.iter().enumerate() {
                    let mut e = [0u8; MAX_VARS];
                    e[var] = k as u8;
                    f.add_term(e, c.clone());
                }
                term = term.mul(&f);
            }
            alternant = alternant.add(&term);
        }
        if alternant.is_zero() {
            continue;
        }
        // pairs touching the image contribute (x_a + x_b); the rest keeps
        // its Vandermonde factor after clearing the common denominator
        let mut t = alternant;
        for a in 0..nvars {
            for b in a + 1..nvars {
                let touches = image.contains(&a) || image.contains(&b);
                t = t.mul_linear(a, b, if touches { 1 } else { -1 });
            }
        }
        numerator = numerator.add(&t);
    }
    let mut q = numerator;
    for a in 0..nvars {
        for b in a + 1..nvars {
            q = q.div_difference(a, b).ok_or_else(|| {
                Error::OutOfRange("symmetrization did not reduce to a polynomial".into())
            })?;
        }
    }
    Ok(q.scale(&rat(1 << l)))
}

/// Direct evaluation of the same symmetrization at a point with distinct
/// coordinates. Orderings of the `N - l` unused variables give equal
/// terms, so the sum runs over injections `{1..l} -> {1..N}` and the
/// `(N-l)!` cancels against the normalization.
pub fn symmetrize_at(rows: &[Vec<Rat>], xs: &[Rat]) -> Result<Rat> {
    let l = rows.len();
    let n = xs.len();
    if n > MAX_VARS {
        return Err(Error::TooManyVariables {
            requested: n,
            max: MAX_VARS,
        });
    }
    if l > n {
        return Err(Error::TooFewVariables { len: l, vars: n });
    }
    let values: Vec<Vec<Rat>> = rows
        .iter()
        .map(|row| {
            xs.iter()
                .map(|x| row.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c))
                .collect()
        })
        .collect();
    let mut pair = vec![vec![Rat::zero(); n]; n];
    for a in 0..n {
        for b in 0..n {
            if a != b {
                pair[a][b] = (&xs[a] + &xs[b]) / (&xs[a] - &xs[b]);
            }
        }
    }
    let mut total = Rat::zero();
    for image in subsets(n, l) {
        let rest: Vec<usize> = (0..n).filter(|v| !image.contains(v)).collect();
        for order in permutations(&image) {
            let mut t = Rat::one();
            for (i, &a) in order.iter().enumerate() {
                t *= &values[i][a];
                for &b in order[i + 1..].iter().chain(&rest) {
                    t *= &pair[a][b];
                }
            }
            total += t;
        }
    }
    Ok(total * rat(1 << l))
}

fn check_strict(lambda: &[i64]) -> Result<()> {
    let positive = lambda.iter().all(|&v| v > 0);
    let strict = lambda.windows(2).all(|w| w[0] > w[1]);
    if !positive || !strict {
        return Err(Error::NotStrict(format!("{lambda:?}")));
    }
    Ok(())
}

fn power_rows(lambda: &[i64]) -> Vec<Vec<Rat>> {
    lambda
        .iter()
        .map(|&k| {
            let mut row = vec![Rat::zero(); k as usize + 1];
            row[k as usize] = Rat::one();
            row
        })
        .collect()
}

fn falling_rows(alpha: &[i64], a: &ParamSeq) -> Result<Vec<Vec<Rat>>> {
    if let Some(&bad) = alpha.iter().find(|&&v| v < 0) {
        return Err(Error::NonPositiveEntry(bad));
    }
    alpha
        .iter()
        .map(|&k| a.falling_coeffs(k as usize))
        .collect()
}

/// Classical `Q_λ(x_1..x_N)` by symmetrization; `λ` must be strict.
pub fn q_lambda_sym(lambda: &[i64], nvars: usize) -> Result<XVarsPoly> {
    check_strict(lambda)?;
    symmetrize(&power_rows(lambda), nvars)
}

pub fn q_lambda_sym_at(lambda: &[i64], xs: &[Rat]) -> Result<Rat> {
    check_strict(lambda)?;
    symmetrize_at(&power_rows(lambda), xs)
}

/// `Q_α^(a)(x_1..x_N)` by symmetrization with falling powers `(x|a)^{α_i}`.
pub fn qa_sym(alpha: &[i64], a: &ParamSeq, nvars: usize) -> Result<XVarsPoly> {
    symmetrize(&falling_rows(alpha, a)?, nvars)
}

pub fn qa_sym_at(alpha: &[i64], a: &ParamSeq, xs: &[Rat]) -> Result<Rat> {
    symmetrize_at(&falling_rows(alpha, a)?, xs)
}

/// `f` at `p_k = Σ_i xs_i^k`.
pub fn eval_powersums(f: &PPoly, xs: &[Rat]) -> Rat {
    f.evaluate(|k| {
        xs.iter()
            .map(|x| {
                let mut t = Rat::one();
                for _ in 0..k {
                    t *= x;
                }
                t
            })
            .sum()
    })
}

/// Coefficients of `Π_{i<j} (u_j-u_i)/(u_j+u_i) Π_i Q(u_i)` at
/// `u_1^{-λ_1} ⋯ u_l^{-λ_l}`, for every `λ` with `|λ_i| <= cutoff`, with
/// `(u_j-u_i)/(u_j+u_i) = 1 + 2 Σ_{r>=1} (-1)^r u_i^r u_j^{-r}`.
/// Zero coefficients are omitted.
pub fn genq_expand(l: usize, cutoff: usize) -> Result<BTreeMap<Vec<i64>, PPoly>> {
    if l > 3 {
        return Err(Error::OutOfRange(format!("length {l} (at most 3)")));
    }
    if cutoff > 10 {
        return Err(Error::OutOfRange(format!("cutoff {cutoff} (at most 10)")));
    }
    let c = cutoff as i64;
    let pair = |r: i64| -> Rat {
        match r {
            0 => Rat::one(),
            r if r % 2 == 0 => rat(2),
            _ => rat(-2),
        }
    };
    let rows = schur_q_rows(3 * cutoff + 1);
    let q = |k: i64| -> &PPoly { &rows[k as usize] };
    let mut out = BTreeMap::new();
    let range = || -c..=c;
    match l {
        0 => {
            out.insert(Vec::new(), PPoly::one());
        }
        1 => {
            for k in 0..=c {
                out.insert(vec![k], q(k).clone());
            }
        }
        2 => {
            for l1 in range() {
                for l2 in 0..=c {
                    let mut acc = PPoly::zero();
                    for r in 0..=l2 {
                        let (k1, k2) = (l1 + r, l2 - r);
                        if k1 < 0 {
                            continue;
                        }
                        acc += &(q(k1) * q(k2)).scale(&pair(r));
                    }
                    if !acc.is_zero() {
                        out.insert(vec![l1, l2], acc);
                    }
                }
            }
        }
        _ => {
            for l1 in range() {
                for l2 in range() {
                    for l3 in 0..=c {
                        let mut acc = PPoly::zero();
                        for r13 in 0..=l3 {
                            for r23 in 0..=(l3 - r13) {
                                for r12 in 0..=(l2 + r23).max(-1) {
                                    let k1 = l1 + r12 + r13;
                                    let k2 = l2 - r12 + r23;
                                    let k3 = l3 - r13 - r23;
                                    if k1 < 0 || k2 < 0 || k3 < 0 {
                                        continue;
                                    }
                                    let coef = pair(r12) * pair(r13) * pair(r23);
                                    acc += &(&(q(k1) * q(k2)) * q(k3)).scale(&coef);
                                }
                            }
                        }
                        if !acc.is_zero() {
                            out.insert(vec![l1, l2, l3], acc);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ratio;
    use crate::series::schur_q_row;

    fn xs(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&k| rat(k)).collect()
    }

    #[test]
    fn q1_two_variables() {
        let q = q_lambda_sym(&[1], 2).unwrap();
        // 2(x1 + x2)
        assert_eq!(q.len(), 2);
        assert_eq!(q.evaluate(&xs(&[3, 5])), rat(16));
        let single = q_lambda_sym(&[1], 1).unwrap();
        assert_eq!(single.evaluate(&xs(&[7])), rat(14));
    }

    #[test]
    fn q21_three_variables_matches_power_sums() {
        let q = q_lambda_sym(&[2, 1], 3).unwrap();
        let p1 = PPoly::var(1);
        let p3 = PPoly::var(3);
        let expected = &p1.pow(3).scale(&ratio(4, 3)) - &p3.scale(&ratio(4, 3));
        for pt in [xs(&[1, 2, 3]), vec![ratio(1, 2), rat(-3), ratio(5, 7)]] {
            assert_eq!(q.evaluate(&pt), eval_powersums(&expected, &pt));
        }
    }

    #[test]
    fn pointwise_matches_polynomial() {
        let pt = vec![ratio(1, 2), rat(-1), ratio(4, 3), rat(2)];
        for lambda in [vec![3, 1], vec![3, 2, 1], vec![4]] {
            let poly = q_lambda_sym(&lambda, 4).unwrap();
            assert_eq!(poly.evaluate(&pt), q_lambda_sym_at(&lambda, &pt).unwrap());
        }
    }

    #[test]
    fn oracle_errors() {
        assert_eq!(
            q_lambda_sym(&[1], 9),
            Err(Error::TooManyVariables {
                requested: 9,
                max: 8
            })
        );
        assert!(matches!(q_lambda_sym(&[1, 2], 3), Err(Error::NotStrict(_))));
        assert!(matches!(q_lambda_sym(&[2, 2], 3), Err(Error::NotStrict(_))));
        assert!(matches!(
            q_lambda_sym(&[3, 2, 1], 2),
            Err(Error::TooFewVariables { .. })
        ));
    }

    #[test]
    fn qa_examples() {
        let a1 = ratio(-5, 3);
        let a = ParamSeq::new(vec![rat(0), a1.clone(), rat(2)]).unwrap();
        let lhs = qa_sym(&[2], &a, 3).unwrap();
        let rhs = q_lambda_sym(&[2], 3)
            .unwrap()
            .sub(&q_lambda_sym(&[1], 3).unwrap().scale(&a1));
        assert_eq!(lhs, rhs);
        let swapped = qa_sym(&[1, 2], &a, 3).unwrap();
        assert_eq!(swapped, qa_sym(&[2, 1], &a, 3).unwrap().scale(&rat(-1)));
        assert!(qa_sym(&[2, 2], &a, 3).unwrap().is_zero());
    }

    #[test]
    fn eval_powersums_examples() {
        assert_eq!(
            eval_powersums(&PPoly::var(1).scale(&rat(2)), &xs(&[1, 2])),
            rat(6)
        );
        assert_eq!(eval_powersums(&schur_q_row(3), &xs(&[1])), rat(2));
        assert_eq!(eval_powersums(&PPoly::zero(), &xs(&[1, 2])), rat(0));
    }

    #[test]
    fn genq_examples() {
        let one = genq_expand(1, 5).unwrap();
        for k in 0..=5 {
            assert_eq!(one[&vec![k]], schur_q_row(k));
        }
        let two = genq_expand(2, 4).unwrap();
        let q21 = &(&schur_q_row(2) * &schur_q_row(1)) - &schur_q_row(3).scale(&rat(2));
        assert_eq!(two[&vec![2, 1]], q21);
        assert!(!two.contains_key(&vec![1, 1]));
        assert_eq!(two[&vec![-1, 1]], PPoly::constant(rat(-2)));
        assert!(genq_expand(4, 2).is_err());
        assert!(genq_expand(2, 11).is_err());
    }

    #[test]
    fn division_rejects_non_multiples() {
        let mut p = XVarsPoly::zero(2);
        p.add_term([1, 0, 0, 0, 0, 0, 0, 0], rat(1));
        assert!(p.div_difference(0, 1).is_none());
        let d = XVarsPoly::constant(2, rat(3)).mul_linear(0, 1, -1);
        assert_eq!(
            d.div_difference(0, 1).unwrap(),
            XVarsPoly::constant(2, rat(3))
        );
    }
}
