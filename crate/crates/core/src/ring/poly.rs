//! Sparse polynomials with exact rational coefficients in one family of
//! graded variables.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::mono::Mono;
use super::rat::{format_rat, rat, Rat};
use crate::error::{Error, Result};

/// A family of variables `s1, s3, s5, ...` sharing a printed symbol.
pub trait Vars:
    Copy + Default + fmt::Debug + PartialEq + Eq + Hash + Send + Sync + 'static
{
    const SYMBOL: &'static str;
}

/// Odd power sums `p1, p3, ...`.
#[derive(Clone, Copy, Default, Debug, PartialEq, Eq, Hash)]
pub struct PVar;
/// Time variables `x1, x3, ...`.
#[derive(Clone, Copy, Default, Debug, PartialEq, Eq, Hash)]
pub struct XVar;
/// Auxiliary variables `y1, y3, ...` indexing the hierarchy equations.
#[derive(Clone, Copy, Default, Debug, PartialEq, Eq, Hash)]
pub struct YVar;
/// Hirota symbols `D1, D3, ...`.
#[derive(Clone, Copy, Default, Debug, PartialEq, Eq, Hash)]
pub struct DVar;

impl Vars for PVar {
    const SYMBOL: &'static str = "p";
}
impl Vars for XVar {
    const SYMBOL: &'static str = "x";
}
impl Vars for YVar {
    const SYMBOL: &'static str = "y";
}
impl Vars for DVar {
    const SYMBOL: &'static str = "D";
}

/// Sparse polynomial: monomial to nonzero coefficient, kept in canonical
/// monomial order. The zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<V: Vars> {
    terms: BTreeMap<Mono, Rat>,
    _vars: PhantomData<V>,
}

/// Element of `Q[p1, p3, p5, ...]`.
pub type PPoly = Poly<PVar>;
/// Polynomial in the times `x1, x3, ...`.
pub type XPoly = Poly<XVar>;
/// Polynomial in `y1, y3, ...`.
pub type YPoly = Poly<YVar>;
/// Polynomial in the Hirota symbols `D1, D3, ...`.
pub type DPoly = Poly<DVar>;

impl<V: Vars> Default for Poly<V> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<V: Vars> Poly<V> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
            _vars: PhantomData,
        }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::term(c, Mono::one())
    }

    pub fn term(c: Rat, mono: Mono) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(mono, c);
        }
        p
    }

    /// The variable of index `n`.
    ///
    /// Panics unless `n` is odd.
    pub fn var(n: u32) -> Self {
        assert!(n % 2 == 1, "variable index {n} must be odd");
        Self::term(Rat::one(), Mono::var(n))
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, Rat)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, mono: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
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

    /// Terms in canonical monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Mono) -> Rat {
        self.terms.get(mono).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Mono::one())
    }

    /// Largest weight among the terms; `None` for zero.
    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Mono::weight)
    }

    pub fn min_weight(&self) -> Option<u32> {
        self.terms.keys().next().map(Mono::weight)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.max_weight() == self.min_weight()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
            _vars: PhantomData,
        }
    }

    pub fn mul_mono(&self, mono: &Mono, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.mul(mono), v * c))
                .collect(),
            _vars: PhantomData,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to the variable of index `n`.
    pub fn diff(&self, n: i64) -> Result<Self> {
        if n < 1 || n % 2 == 0 {
            return Err(Error::NotOddIndex(n));
        }
        let n = n as u32;
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(n);
            if e == 0 {
                continue;
            }
            let lowered = m.lower(n, 1).expect("exponent checked");
            out.add_term(lowered, c * rat(e as i64));
        }
        Ok(out)
    }

    /// Homogeneous component of weight `w`.
    pub fn weight_part(&self, w: u32) -> Self {
        self.filter(|m| m.weight() == w)
    }

    /// Drops every component of weight above `w`.
    pub fn truncate(&self, w: u32) -> Self {
        self.filter(|m| m.weight() <= w)
    }

    pub fn filter<F: Fn(&Mono) -> bool>(&self, keep: F) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            _vars: PhantomData,
        }
    }

    /// Product truncated at weight `w` without forming the higher terms.
    pub fn mul_truncated(&self, other: &Self, w: u32) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            if ma.weight() > w {
                break;
            }
            for (mb, cb) in &other.terms {
                if ma.weight() + mb.weight() > w {
                    break;
                }
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Rescales every variable: `v_n -> factor(n) * w_n`, moving into the
    /// family `W`.
    pub fn rescale_into<W: Vars, F: Fn(u32) -> Rat>(&self, factor: F) -> Poly<W> {
        let mut out = Poly::<W>::zero();
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            for &(n, e) in m.factors() {
                let f = factor(n);
                for _ in 0..e {
                    coef *= &f;
                }
            }
            out.add_term(m.clone(), coef);
        }
        out
    }

    /// Same terms, read in another variable family.
    pub fn relabel<W: Vars>(&self) -> Poly<W> {
        Poly {
            terms: self.terms.clone(),
            _vars: PhantomData,
        }
    }

    /// Evaluates with the variable of index `n` replaced by `value(n)`.
    pub fn evaluate<F: FnMut(u32) -> Rat>(&self, mut value: F) -> Rat {
        let mut cache: BTreeMap<u32, Rat> = BTreeMap::new();
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(n, e) in m.factors() {
                let v = cache.entry(n).or_insert_with(|| value(n));
                for _ in 0..e {
                    t *= &*v;
                }
            }
            total += t;
        }
        total
    }
}

impl<V: Vars> fmt::Display for Poly<V> {
    /// Canonical text form, e.g. `4/3*p1^3 - 4/3*p3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c < &Rat::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                f.write_str(&format_rat(&magnitude))?;
            } else if magnitude.is_one() {
                f.write_str(&m.render(V::SYMBOL))?;
            } else {
                write!(f, "{}*{}", format_rat(&magnitude), m.render(V::SYMBOL))?;
            }
        }
        Ok(())
    }
}

impl<V: Vars> fmt::Debug for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<V: Vars> From<Rat> for Poly<V> {
    fn from(c: Rat) -> Self {
        Self::constant(c)
    }
}

impl<'a, V: Vars> Add<&'a Poly<V>> for &'a Poly<V> {
    type Output = Poly<V>;
    fn add(self, rhs: &'a Poly<V>) -> Poly<V> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<V: Vars> Add for Poly<V> {
    type Output = Poly<V>;
    fn add(mut self, rhs: Poly<V>) -> Poly<V> {
        self += &rhs;
        self
    }
}

impl<V: Vars> AddAssign<&Poly<V>> for Poly<V> {
    fn add_assign(&mut self, rhs: &Poly<V>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<V: Vars> SubAssign<&Poly<V>> for Poly<V> {
    fn sub_assign(&mut self, rhs: &Poly<V>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<'a, V: Vars> Sub<&'a Poly<V>> for &'a Poly<V> {
    type Output = Poly<V>;
    fn sub(self, rhs: &'a Poly<V>) -> Poly<V> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<V: Vars> Sub for Poly<V> {
    type Output = Poly<V>;
    fn sub(mut self, rhs: Poly<V>) -> Poly<V> {
        self -= &rhs;
        self
    }
}

impl<V: Vars> Neg for &Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
            _vars: PhantomData,
        }
    }
}

impl<V: Vars> Neg for Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        -&self
    }
}

impl<'a, V: Vars> Mul<&'a Poly<V>> for &'a Poly<V> {
    type Output = Poly<V>;
    fn mul(self, rhs: &'a Poly<V>) -> Poly<V> {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl<V: Vars> Mul for Poly<V> {
    type Output = Poly<V>;
    fn mul(self, rhs: Poly<V>) -> Poly<V> {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat::ratio;

    fn p(n: u32) -> PPoly {
        PPoly::var(n)
    }

    fn c(n: i64) -> PPoly {
        PPoly::constant(rat(n))
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p(1) * &p(1), PPoly::term(rat(1), Mono::power(1, 2)));
        assert_eq!(&(&c(1) + &p(3)) + &c(-1), p(3));
        let lhs = &p(1).scale(&rat(2)) * &p(1).pow(2).scale(&rat(2));
        assert_eq!(lhs, p(1).pow(3).scale(&rat(4)));
    }

    #[test]
    fn diff_examples() {
        assert_eq!(p(1).pow(3).diff(1).unwrap(), p(1).pow(2).scale(&rat(3)));
        assert_eq!((&p(3) * &p(1)).diff(3).unwrap(), p(1));
        assert_eq!(p(1).diff(3).unwrap(), PPoly::zero());
        assert_eq!(p(1).diff(2), Err(Error::NotOddIndex(2)));
        assert_eq!(p(1).diff(0), Err(Error::NotOddIndex(0)));
        assert_eq!(p(1).diff(-1), Err(Error::NotOddIndex(-1)));
    }

    #[test]
    fn weight_part_and_truncate() {
        let f = &p(1).scale(&rat(2)) + &p(3);
        assert_eq!(f.weight_part(3), p(3));
        assert_eq!((&p(1).pow(5) + &p(1)).truncate(4), p(1));
        let q21 = &p(1).pow(3).scale(&ratio(4, 3)) - &p(3).scale(&ratio(4, 3));
        assert_eq!(q21.weight_part(3), q21);
        assert!(q21.is_homogeneous());
    }

    #[test]
    fn canonical_text() {
        let q21 = &p(1).pow(3).scale(&ratio(4, 3)) - &p(3).scale(&ratio(4, 3));
        assert_eq!(q21.to_string(), "4/3*p1^3 - 4/3*p3");
        assert_eq!(PPoly::zero().to_string(), "0");
        assert_eq!((&c(-2) - &p(1)).to_string(), "-2 - p1");
        assert_eq!(p(5).to_string(), "p5");
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let f = &p(1) - &p(1);
        assert!(f.is_zero());
        assert_eq!(f.len(), 0);
        assert_eq!(p(1).scale(&rat(0)), PPoly::zero());
    }
}
