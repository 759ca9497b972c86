//! Hirota bilinear calculus in the odd times and the BKP hierarchy
//! obtained from the residue expansion of the bilinear identity.

use std::collections::BTreeMap;

use num_traits::One;

use crate::error::{Error, Result};
use crate::ring::{
    binomial, factorial, rat, ratio, sign_rat, DPoly, Mono, PPoly, Rat, XPoly, YPoly,
};
use crate::series::exp_series;

/// `p_n -> n x_n / 2`: a tau function in power sums read in the times
/// `x_n = 2 p_n / n`.
pub fn p_to_x(f: &PPoly) -> XPoly {
    f.rescale_into(|n| ratio(n as i64, 2))
}

/// Inverse of [`p_to_x`].
pub fn x_to_p(f: &XPoly) -> PPoly {
    f.rescale_into(|n| ratio(2, n as i64))
}

/// Memoized mixed partial derivatives of one polynomial.
struct Derivatives<'a> {
    base: &'a XPoly,
    memo: BTreeMap<Mono, XPoly>,
}

impl<'a> Derivatives<'a> {
    fn new(base: &'a XPoly) -> Self {
        Self {
            base,
            memo: BTreeMap::new(),
        }
    }

    /// `Π ∂_{x_n}^{k_n}` applied to the base, the orders read off `orders`.
    fn get(&mut self, orders: &Mono) -> XPoly {
        if orders.is_one() {
            return self.base.clone();
        }
        if let Some(d) = self.memo.get(orders) {
            return d.clone();
        }
        let &(n, _) = orders.factors().last().expect("nonempty");
        let lower = orders.lower(n, 1).expect("exponent present");
        let prev = self.get(&lower);
        let d = prev.diff(n as i64).expect("odd index");
        self.memo.insert(orders.clone(), d.clone());
        d
    }
}

/// Next exponent split `0 <= k_i <= n_i`; false once all were visited.
fn advance(ks: &mut [u32], factors: &[(u32, u32)]) -> bool {
    for (k, &(_, n)) in ks.iter_mut().zip(factors) {
        if *k < n {
            *k += 1;
            return true;
        }
        *k = 0;
    }
    false
}

fn hirota_with(p: &DPoly, df: &mut Derivatives<'_>, dg: &mut Derivatives<'_>) -> XPoly {
    let mut out = XPoly::zero();
    for (mono, c) in p.terms() {
        // iterate over all splittings k <= n of the exponent vector
        let factors = mono.factors();
        let mut ks = vec![0u32; factors.len()];
        loop {
            let mut coef = c.clone();
            let mut left = Vec::with_capacity(factors.len());
            let mut right = Vec::with_capacity(factors.len());
            for (&(idx, n), &k) in factors.iter().zip(&ks) {
                coef *= binomial(n, k) * sign_rat((n - k) % 2 == 1);
                left.push((idx, k));
                right.push((idx, n - k));
            }
            let fl = df.get(&Mono::from_pairs(left));
            if !fl.is_zero() {
                let gr = dg.get(&Mono::from_pairs(right));
                if !gr.is_zero() {
                    out += &(&fl * &gr).scale(&coef);
                }
            }
            if !advance(&mut ks, factors) {
                break;
            }
        }
    }
    out
}

/// `P(D) f·g = P(∂_z) f(x+z) g(x-z) |_{z=0}`, evaluated per D-monomial as
/// `Π_i Σ_k (-1)^{n_i-k} C(n_i,k) ∂^k f ∂^{n_i-k} g`.
pub fn hirota_apply(p: &DPoly, f: &XPoly, g: &XPoly) -> XPoly {
    let mut df = Derivatives::new(f);
    let mut dg = Derivatives::new(g);
    hirota_with(p, &mut df, &mut dg)
}

/// One coefficient of the expansion in the `y` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HirotaEquation {
    pub y: Mono,
    /// The coefficient as generated.
    pub raw: DPoly,
    /// `raw` with every monomial of odd total D-degree removed; these
    /// vanish identically on `τ·τ`.
    pub canonical: DPoly,
}

impl HirotaEquation {
    pub fn is_trivial(&self) -> bool {
        self.canonical.is_zero()
    }

    /// `y1^a*y3^b : <canonical>`.
    pub fn listing_line(&self) -> String {
        format!("{} : {}", self.y.render("y"), self.canonical)
    }
}

/// All monomials in odd-indexed variables of weight in `1..=max_weight`.
pub fn odd_monomials(max_weight: u32) -> Vec<Mono> {
    fn go(rem: u32, largest: u32, cur: &mut Vec<(u32, u32)>, out: &mut Vec<Mono>) {
        let mut n = largest;
        while n >= 1 {
            if n <= rem {
                for e in 1..=rem / n {
                    cur.push((n, e));
                    out.push(Mono::from_pairs(cur.iter().copied()));
                    let next_largest = if n >= 3 { n - 2 } else { 0 };
                    if next_largest >= 1 {
                        go(rem - n * e, next_largest, cur, out);
                    }
                    cur.pop();
                }
            }
            if n < 2 {
                break;
            }
            n -= 2;
        }
    }
    let mut out = Vec::new();
    let top = if max_weight % 2 == 1 {
        max_weight
    } else {
        max_weight.saturating_sub(1)
    };
    if top >= 1 {
        go(max_weight, top, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

fn odd_d_degree_free(p: &DPoly) -> DPoly {
    p.filter(|m| m.degree() % 2 == 0)
}

/// Expands `Σ_{m>=1} S_m(ỹ) S_m(D̃) exp(Σ_{n odd} y_n D_n)` with
/// `ỹ = (-2y_1, 0, -2y_3, 0, ...)` and `D̃ = (2D_1, 0, 2D_3/3, 0, ...)`,
/// keeping every `y`-monomial of weight at most `max_weight`. Each
/// coefficient is a D-polynomial of the same weight.
pub fn bkp_generate(max_weight: u32) -> Result<Vec<HirotaEquation>> {
    if max_weight < 2 {
        return Err(Error::OutOfRange(format!(
            "max weight {max_weight} (at least 2)"
        )));
    }
    let w = max_weight as usize;
    let y_args: Vec<YPoly> = (1..=w)
        .map(|n| {
            if n % 2 == 1 {
                YPoly::var(n as u32).scale(&rat(-2))
            } else {
                YPoly::zero()
            }
        })
        .collect();
    let d_args: Vec<DPoly> = (1..=w)
        .map(|n| {
            if n % 2 == 1 {
                DPoly::var(n as u32).scale(&ratio(2, n as i64))
            } else {
                DPoly::zero()
            }
        })
        .collect();
    let s_y = exp_series(&y_args, w);
    let s_d = exp_series(&d_args, w);

    // exp(Σ y_n D_n): y^j ↦ D^j / j!
    let mut exponential: Vec<(Mono, Rat)> = vec![(Mono::one(), Rat::one())];
    for m in odd_monomials(max_weight) {
        let denom: Rat = m
            .factors()
            .iter()
            .map(|&(_, e)| factorial(e as usize))
            .product();
        exponential.push((m, denom.recip()));
    }

    let mut coeffs: BTreeMap<Mono, DPoly> = BTreeMap::new();
    for m in 1..=w {
        for (ya, ca) in s_y[m].terms() {
            for (yb, cb) in &exponential {
                if ya.weight() + yb.weight() > max_weight {
                    continue;
                }
                let d_part = s_d[m].mul_mono(yb, &(ca * cb));
                let slot = coeffs.entry(ya.mul(yb)).or_default();
                *slot += &d_part;
            }
        }
    }
    let mut out: Vec<HirotaEquation> = odd_monomials(max_weight)
        .into_iter()
        .map(|y| {
            let raw = coeffs.remove(&y).unwrap_or_default();
            let canonical = odd_d_degree_free(&raw);
            HirotaEquation { y, raw, canonical }
        })
        .collect();
    out.sort_by(|a, b| a.y.cmp(&b.y));
    Ok(out)
}

/// Residual of one hierarchy equation on a tau function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationCheck {
    pub y: Mono,
    pub equation: DPoly,
    /// `P(D) τ·τ`; zero when the equation holds.
    pub residual: XPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BkpReport {
    pub pass: bool,
    /// Nontrivial equations, in canonical `y`-monomial order.
    pub checks: Vec<EquationCheck>,
}

impl BkpReport {
    pub fn failures(&self) -> impl Iterator<Item = &EquationCheck> + '_ {
        self.checks.iter().filter(|c| !c.residual.is_zero())
    }
}

/// Applies every nontrivial equation of weight at most `max_weight` to
/// `τ·τ` with `τ = p_to_x(f)`.
pub fn bkp_check(f: &PPoly, max_weight: u32) -> Result<BkpReport> {
    let equations = bkp_generate(max_weight)?;
    Ok(bkp_check_with(f, &equations))
}

/// [`bkp_check`] against a pre-generated equation list.
pub fn bkp_check_with(f: &PPoly, equations: &[HirotaEquation]) -> BkpReport {
    let tau = p_to_x(f);
    let mut df = Derivatives::new(&tau);
    let mut dg = Derivatives::new(&tau);
    let checks: Vec<EquationCheck> = equations
        .iter()
        .filter(|e| !e.is_trivial())
        .map(|e| EquationCheck {
            y: e.y.clone(),
            equation: e.canonical.clone(),
            residual: hirota_with(&e.canonical, &mut df, &mut dg),
        })
        .collect();
    BkpReport {
        pass: checks.iter().all(|c| c.residual.is_zero()),
        checks,
    }
}

/// `(D_1^6 - 5 D_1^3 D_3 - 5 D_3^2 + 9 D_1 D_5)`, the lowest BKP equation.
pub fn bkp_equation() -> DPoly {
    let d = |n: u32| DPoly::var(n);
    let mut p = d(1).pow(6);
    p -= &(&d(1).pow(3) * &d(3)).scale(&rat(5));
    p -= &d(3).pow(2).scale(&rat(5));
    p += &(&d(1) * &d(5)).scale(&rat(9));
    p
}
