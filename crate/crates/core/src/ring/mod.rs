//! Exact scalars, sparse graded polynomials in odd-indexed variables, and
//! the tensor square used by the bilinear identity.

mod mono;
mod poly;
mod rat;
mod tensor;

pub use mono::Mono;
pub use poly::{DPoly, DVar, PPoly, PVar, Poly, Vars, XPoly, XVar, YPoly, YVar};
pub use rat::{format_rat, parse_rat, rat, ratio, Rat};
pub use tensor::{Side, TPoly, Tensor};

pub(crate) use rat::{binomial, factorial, sign_rat};

use num_traits::{One, Zero};

/// Commutative algebra over the rationals; lets the series routines run
/// on plain scalars and on polynomial coefficients alike.
pub trait Algebra: Clone {
    fn nil() -> Self;
    fn unit() -> Self;
    fn is_nil(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, c: &Rat) -> Self;
}

impl Algebra for Rat {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, c: &Rat) -> Self {
        self * c
    }
}

impl<V: Vars> Algebra for Poly<V> {
    fn nil() -> Self {
        Poly::zero()
    }
    fn unit() -> Self {
        Poly::one()
    }
    fn is_nil(&self) -> bool {
        Poly::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, c: &Rat) -> Self {
        self.scale(c)
    }
}
