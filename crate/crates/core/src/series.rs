//! Exponential and logarithm of generating series, one-row Schur
//! Q-functions, elementary/complete symmetric polynomials, and the
//! transition coefficients between ordinary and shifted powers.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{factorial, parse_rat, rat, ratio, sign_rat, Algebra, PPoly, Rat};

fn entry<A: Algebra>(xs: &[A], i: usize) -> A {
    xs.get(i).cloned().unwrap_or_else(A::nil)
}

/// Coefficients `S_0..=S_k` of `exp(X(u))`, where `x[i]` holds `X_{i+1}`
/// and missing entries read as zero.
///
/// Uses `k S_k = Σ_{j=1..k} j X_j S_{k-j}`.
pub fn exp_series<A: Algebra>(x: &[A], k: usize) -> Vec<A> {
    let mut s = Vec::with_capacity(k + 1);
    s.push(A::unit());
    for m in 1..=k {
        let mut acc = A::nil();
        for j in 1..=m {
            let xj = entry(x, j - 1);
            if xj.is_nil() {
                continue;
            }
            acc = acc.plus(&xj.times(&s[m - j]).scaled(&rat(j as i64)));
        }
        s.push(acc.scaled(&ratio(1, m as i64)));
    }
    s
}

/// `S_k` as the sum over all `l_1 + 2 l_2 + ... + k l_k = k` of
/// `Π X_i^{l_i} / l_i!`.
pub fn exp_series_partition_sum<A: Algebra>(x: &[A], k: usize) -> A {
    fn walk<A: Algebra>(x: &[A], remaining: usize, part: usize, acc: A, out: &mut A) {
        if remaining == 0 {
            *out = out.plus(&acc);
            return;
        }
        if part == 0 {
            return;
        }
        // multiplicity l of the part `part`
        let xp = entry(x, part - 1);
        let mut term = acc;
        let mut l = 0usize;
        loop {
            walk(
                x,
                remaining - l * part,
                part - 1,
                term.scaled(&factorial(l).recip()),
                out,
            );
            l += 1;
            if l * part > remaining || xp.is_nil() {
                break;
            }
            term = term.times(&xp);
        }
    }
    let mut out = A::nil();
    walk(x, k, k, A::unit(), &mut out);
    out
}

/// Determinant of a square matrix over a commutative algebra, by dynamic
/// programming over the set of used columns (no division).
pub fn det<A: Algebra>(m: &[Vec<A>]) -> A {
    let n = m.len();
    if n == 0 {
        return A::unit();
    }
    assert!(n <= 20, "determinant too large for subset expansion");
    let mut layer: Vec<Option<A>> = vec![None; 1 << n];
    layer[0] = Some(A::unit());
    for (row, entries) in m.iter().enumerate() {
        let mut next: Vec<Option<A>> = vec![None; 1 << n];
        for (mask, value) in layer.iter().enumerate() {
            let Some(value) = value else { continue };
            if (mask as u32).count_ones() as usize != row {
                continue;
            }
            for (col, e) in entries.iter().enumerate() {
                if mask & (1 << col) != 0 || e.is_nil() {
                    continue;
                }
                // inversions added by placing `col` after the used columns
                let above = (mask >> (col + 1)).count_ones();
                let mut t = value.times(e);
                if above % 2 == 1 {
                    t = t.scaled(&rat(-1));
                }
                let slot = &mut next[mask | (1 << col)];
                *slot = Some(match slot.take() {
                    Some(prev) => prev.plus(&t),
                    None => t,
                });
            }
        }
        layer = next;
    }
    layer[(1 << n) - 1].clone().unwrap_or_else(A::nil)
}

/// `S_k = det(M) / k!` with `M[i][j] = (i-j+1) X_{i-j+1}` on and below the
/// diagonal and `M[i][i+1] = -i` (1-based).
pub fn exp_series_det<A: Algebra>(x: &[A], k: usize) -> A {
    if k == 0 {
        return A::unit();
    }
    let mut m = vec![vec![A::nil(); k]; k];
    for i in 1..=k {
        for j in 1..=i {
            let d = i - j + 1;
            m[i - 1][j - 1] = entry(x, d - 1).scaled(&rat(d as i64));
        }
        if i < k {
            m[i - 1][i] = A::unit().scaled(&rat(-(i as i64)));
        }
    }
    det(&m).scaled(&factorial(k).recip())
}

fn check_leading<A: Algebra + PartialEq + fmt::Debug>(s: &[A]) -> Result<()> {
    match s.first() {
        Some(s0) if *s0 == A::unit() => Ok(()),
        Some(s0) => Err(Error::LeadingCoefficient(format!("{s0:?}"))),
        None => Err(Error::LeadingCoefficient("nothing".into())),
    }
}

/// Inverse of [`exp_series`]: returns `X_1..=X_k` (index `i` holds
/// `X_{i+1}`) from `S_0..S_k` with `S_0 = 1`.
pub fn log_series<A: Algebra + PartialEq + fmt::Debug>(s: &[A], k: usize) -> Result<Vec<A>> {
    check_leading(s)?;
    let mut x: Vec<A> = Vec::with_capacity(k);
    for m in 1..=k {
        // m S_m = m X_m + Σ_{j<m} j X_j S_{m-j}
        let mut acc = entry(s, m).scaled(&rat(m as i64));
        for j in 1..m {
            let t = x[j - 1].times(&entry(s, m - j)).scaled(&rat(-(j as i64)));
            acc = acc.plus(&t);
        }
        x.push(acc.scaled(&ratio(1, m as i64)));
    }
    Ok(x)
}

/// `X_k = (-1)^{k-1}/k · det N` with `N[i][1] = i S_i`, `N[i][j] = S_{i-j+1}`
/// for `2 <= j <= i` and ones on the superdiagonal.
pub fn log_series_det<A: Algebra + PartialEq + fmt::Debug>(s: &[A], k: usize) -> Result<A> {
    check_leading(s)?;
    if k == 0 {
        return Ok(A::nil());
    }
    let mut n = vec![vec![A::nil(); k]; k];
    for i in 1..=k {
        n[i - 1][0] = entry(s, i).scaled(&rat(i as i64));
        for j in 2..=i {
            n[i - 1][j - 1] = entry(s, i - j + 1);
        }
        if i < k {
            n[i - 1][i] = A::unit();
        }
    }
    let sign = sign_rat(k.is_multiple_of(2));
    Ok(det(&n).scaled(&(sign * ratio(1, k as i64))))
}

/// Odd normalized power sums `X_n = 2 p_n / n` (zero for even `n`), as the
/// argument list of [`exp_series`] up to `X_k`.
pub fn odd_normalized_power_sums(k: usize) -> Vec<PPoly> {
    (1..=k)
        .map(|n| {
            if n % 2 == 1 {
                PPoly::var(n as u32).scale(&ratio(2, n as i64))
            } else {
                PPoly::zero()
            }
        })
        .collect()
}

static Q_ROWS: RwLock<Option<Arc<Vec<PPoly>>>> = RwLock::new(None);

/// `Q_0..=Q_k`, memoized process-wide.
pub fn schur_q_rows(k: usize) -> Arc<Vec<PPoly>> {
    if let Some(rows) = Q_ROWS.read().expect("q-row cache poisoned").as_ref() {
        if rows.len() > k {
            return Arc::clone(rows);
        }
    }
    let mut guard = Q_ROWS.write().expect("q-row cache poisoned");
    if let Some(rows) = guard.as_ref() {
        if rows.len() > k {
            return Arc::clone(rows);
        }
    }
    let rows = Arc::new(exp_series(&odd_normalized_power_sums(k), k));
    *guard = Some(Arc::clone(&rows));
    rows
}

/// One-row Schur Q-function `Q_k`, the coefficient of `u^{-k}` in
/// `exp(Σ_{n odd} 2 p_n / (n u^n))`. Zero for negative `k`.
pub fn schur_q_row(k: i64) -> PPoly {
    if k < 0 {
        return PPoly::zero();
    }
    schur_q_rows(k as usize)[k as usize].clone()
}

/// Elementary symmetric polynomial `e_k(vals)`; zero for `k < 0` or
/// `k > vals.len()`.
pub fn elem_sym(k: i64, vals: &[Rat]) -> Rat {
    if k < 0 || k as usize > vals.len() {
        return Rat::zero();
    }
    let k = k as usize;
    let mut e = vec![Rat::zero(); k + 1];
    e[0] = Rat::one();
    for v in vals {
        for j in (1..=k).rev() {
            let add = &e[j - 1] * v;
            e[j] += add;
        }
    }
    e.swap_remove(k)
}

/// Complete homogeneous symmetric polynomial `h_k(vals)`; zero for `k < 0`.
pub fn complete_sym(k: i64, vals: &[Rat]) -> Rat {
    if k < 0 {
        return Rat::zero();
    }
    let k = k as usize;
    let mut h = vec![Rat::zero(); k + 1];
    h[0] = Rat::one();
    if vals.is_empty() {
        return h.swap_remove(k);
    }
    for v in vals {
        for j in 1..=k {
            let add = &h[j - 1] * v;
            h[j] += add;
        }
    }
    h.swap_remove(k)
}

/// A finite parameter sequence `a_0, a_1, ..., a_M` with `a_0 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSeq {
    values: Vec<Rat>,
}

impl ParamSeq {
    pub fn new(values: Vec<Rat>) -> Result<Self> {
        match values.first() {
            None => Err(Error::ParamsTooShort { have: 0, need: 0 }),
            Some(a0) if !a0.is_zero() => Err(Error::NonzeroA0(crate::ring::format_rat(a0))),
            Some(_) => Ok(Self { values }),
        }
    }

    /// `(0, 0, ..., 0)` with `len` entries.
    pub fn zero(len: usize) -> Self {
        Self {
            values: vec![Rat::zero(); len.max(1)],
        }
    }

    /// `(0, 1, 2, ..., len - 1)`.
    pub fn factorial(len: usize) -> Self {
        Self {
            values: (0..len.max(1) as i64).map(rat).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn get(&self, i: usize) -> Result<&Rat> {
        self.values.get(i).ok_or(Error::ParamsTooShort {
            have: self.values.len(),
            need: i,
        })
    }

    /// `a_1, ..., a_m`.
    pub fn shifted(&self, m: usize) -> Result<&[Rat]> {
        if m >= self.values.len() {
            return Err(Error::ParamsTooShort {
                have: self.values.len(),
                need: m,
            });
        }
        Ok(&self.values[1..=m])
    }

    /// Coefficients (ascending powers of `x`) of `(x|a)^k = (x-a_0)...(x-a_{k-1})`.
    pub fn falling_coeffs(&self, k: usize) -> Result<Vec<Rat>> {
        if k > 0 {
            self.get(k - 1)?;
        }
        Ok(expand_roots(&self.values[..k]))
    }

    /// `(x|a)^k` at a rational point.
    pub fn falling(&self, x: &Rat, k: usize) -> Result<Rat> {
        if k > 0 {
            self.get(k - 1)?;
        }
        Ok(self.values[..k].iter().map(|a| x - a).product())
    }

    /// `(x|τa)^k = (x-a_1)...(x-a_k)` at a rational point.
    pub fn shifted_falling(&self, x: &Rat, k: usize) -> Result<Rat> {
        Ok(self.shifted(k)?.iter().map(|a| x - a).product())
    }
}

impl fmt::Display for ParamSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(crate::ring::format_rat).collect();
        f.write_str(&parts.join(","))
    }
}

/// Coefficients of `Π (x - r)` in ascending powers.
pub fn expand_roots(roots: &[Rat]) -> Vec<Rat> {
    let mut c = vec![Rat::one()];
    for r in roots {
        let mut next = vec![Rat::zero(); c.len() + 1];
        for (i, ci) in c.iter().enumerate() {
            next[i + 1] += ci;
            next[i] -= ci * r;
        }
        c = next;
    }
    c
}

/// Parameter sequences by name; the named families extend to any length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamFamily {
    Zero,
    Factorial,
    Explicit(ParamSeq),
}

impl ParamFamily {
    /// The first `len` entries; explicit sequences shorter than that are
    /// rejected rather than padded.
    pub fn materialize(&self, len: usize) -> Result<ParamSeq> {
        match self {
            ParamFamily::Zero => Ok(ParamSeq::zero(len)),
            ParamFamily::Factorial => Ok(ParamSeq::factorial(len)),
            ParamFamily::Explicit(seq) => {
                if seq.len() < len {
                    return Err(Error::ParamsTooShort {
                        have: seq.len(),
                        need: len - 1,
                    });
                }
                Ok(seq.clone())
            }
        }
    }
}

impl FromStr for ParamFamily {
    type Err = Error;

    /// `zero`, `factorial`, or comma-separated rationals such as `0,1/2,-1`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "zero" => Ok(ParamFamily::Zero),
            "factorial" => Ok(ParamFamily::Factorial),
            list => {
                let values = list.split(',').map(parse_rat).collect::<Result<Vec<_>>>()?;
                Ok(ParamFamily::Explicit(ParamSeq::new(values)?))
            }
        }
    }
}

impl fmt::Display for ParamFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamFamily::Zero => f.write_str("zero"),
            ParamFamily::Factorial => f.write_str("factorial"),
            ParamFamily::Explicit(seq) => seq.fmt(f),
        }
    }
}

/// The four expansions between ordinary and shifted powers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transition {
    /// `u^n = Σ_{k=0..n} h_{n-k}(a_1..a_{k+1}) (u|τa)^k`; entry `k`.
    PowerToShifted,
    /// `(u|τa)^n = Σ_{k=0..n} (-1)^{n-k} e_{n-k}(a_1..a_n) u^k`; entry `k`.
    ShiftedToPower,
    /// `u^{-n} = Σ_{k>=n} (-1)^{n-k} e_{k-n}(a_1..a_{k-1}) / (u|τa)^k`;
    /// entry `k`, up to the cutoff.
    InvPowerToShifted,
    /// `1/(u|τa)^n = Σ_{k>=n} h_{k-n}(a_1..a_n) u^{-k}`; entry `k`, up to
    /// the cutoff.
    InvShiftedToPower,
}

/// Coefficient sequence of one of the [`Transition`] expansions. The
/// finite ones ignore `cutoff`; the inverse ones are truncated at it.
pub fn shifted_transition(
    n: usize,
    dir: Transition,
    a: &ParamSeq,
    cutoff: usize,
) -> Result<Vec<Rat>> {
    match dir {
        Transition::PowerToShifted => {
            let mut out = Vec::with_capacity(n + 1);
            for k in 0..n {
                out.push(complete_sym((n - k) as i64, a.shifted(k + 1)?));
            }
            out.push(Rat::one());
            Ok(out)
        }
        Transition::ShiftedToPower => {
            let args = a.shifted(n)?;
            Ok((0..=n)
                .map(|k| sign_rat((n - k) % 2 == 1) * elem_sym((n - k) as i64, args))
                .collect())
        }
        Transition::InvPowerToShifted => {
            if cutoff < n {
                return Err(Error::CutoffTooSmall { cutoff, n });
            }
            let mut out = vec![Rat::zero(); cutoff + 1];
            for (k, slot) in out.iter_mut().enumerate().skip(n) {
                let args = a.shifted(k.saturating_sub(1))?;
                *slot = sign_rat((k - n) % 2 == 1) * elem_sym((k - n) as i64, args);
            }
            Ok(out)
        }
        Transition::InvShiftedToPower => {
            if cutoff < n {
                return Err(Error::CutoffTooSmall { cutoff, n });
            }
            let args = a.shifted(n)?;
            let mut out = vec![Rat::zero(); cutoff + 1];
            for (k, slot) in out.iter_mut().enumerate().skip(n) {
                *slot = complete_sym((k - n) as i64, args);
            }
            Ok(out)
        }
    }
}
