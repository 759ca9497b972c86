//! Two-sided tensor ring `B ⊗ B`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::mono::Mono;
use super::poly::{Poly, Vars};
use super::rat::{format_rat, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Sparse element of `Poly<V> ⊗ Poly<V>`, keyed by pairs of monomials.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor<V: Vars> {
    terms: BTreeMap<(Mono, Mono), Rat>,
    _vars: std::marker::PhantomData<V>,
}

pub type TPoly = Tensor<super::poly::PVar>;

impl<V: Vars> Default for Tensor<V> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<V: Vars> Tensor<V> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
            _vars: std::marker::PhantomData,
        }
    }

    pub fn add_term(&mut self, left: Mono, right: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        let remove = {
            let slot = self.terms.entry(key.clone()).or_insert_with(Rat::zero);
            *slot += c;
            slot.is_zero()
        };
        if remove {
            self.terms.remove(&key);
        }
    }

    /// `f ⊗ g`, expanded bilinearly.
    pub fn of(f: &Poly<V>, g: &Poly<V>) -> Self {
        let mut out = Self::zero();
        out.add_product(f, g, &Rat::from_integer(1.into()));
        out
    }

    /// Adds `c * (f ⊗ g)`.
    pub fn add_product(&mut self, f: &Poly<V>, g: &Poly<V>, c: &Rat) {
        if c.is_zero() {
            return;
        }
        for (ma, ca) in f.terms() {
            let cac = ca * c;
            for (mb, cb) in g.terms() {
                self.add_term(ma.clone(), mb.clone(), &cac * cb);
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

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Mono, &Rat)> + '_ {
        self.terms.iter().map(|((a, b), c)| (a, b, c))
    }

    pub fn coeff(&self, left: &Mono, right: &Mono) -> Rat {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn max_weight(&self, side: Side) -> Option<u32> {
        self.terms
            .keys()
            .map(|(a, b)| match side {
                Side::Left => a.weight(),
                Side::Right => b.weight(),
            })
            .max()
    }

    /// Distinct monomials occurring on one leg.
    pub fn legs(&self, side: Side) -> Vec<Mono> {
        let mut out: Vec<Mono> = self
            .terms
            .keys()
            .map(|(a, b)| match side {
                Side::Left => a.clone(),
                Side::Right => b.clone(),
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = Self::zero();
        for ((a, b), v) in &self.terms {
            out.add_term(a.clone(), b.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), -c.clone());
        }
        out
    }

    /// Applies the linear map `op` to every monomial on one leg.
    /// `op` is evaluated once per distinct monomial.
    pub fn map_side<F>(&self, side: Side, mut op: F) -> Self
    where
        F: FnMut(&Poly<V>) -> Poly<V>,
    {
        let mut images: BTreeMap<Mono, Poly<V>> = BTreeMap::new();
        for m in self.legs(side) {
            let img = op(&Poly::term(Rat::from_integer(1.into()), m.clone()));
            images.insert(m, img);
        }
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            match side {
                Side::Left => {
                    for (ma, ca) in images[a].terms() {
                        out.add_term(ma.clone(), b.clone(), ca * c);
                    }
                }
                Side::Right => {
                    for (mb, cb) in images[b].terms() {
                        out.add_term(a.clone(), mb.clone(), cb * c);
                    }
                }
            }
        }
        out
    }
}

impl<V: Vars> fmt::Display for Tensor<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(
                f,
                "{}*({} ⊗ {})",
                format_rat(c),
                a.render(V::SYMBOL),
                b.render(V::SYMBOL)
            )?;
        }
        Ok(())
    }
}

impl<V: Vars> fmt::Debug for Tensor<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor({self})")
    }
}
