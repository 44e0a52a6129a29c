//! The coefficient rings series and matrices are generic over.
//!
//! Three instances are used: [`Rational`], [`Poly<Rational>`] (one formal
//! parameter) and `Poly<Poly<Rational>>` (two parameters).
//!
//! [`Poly<Rational>`]: crate::poly::Poly

use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::rational::Rational;

pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Embedding of the rationals.
    fn from_rational(q: Rational) -> Self;
    /// Multiplication by a rational scalar.
    fn scale(&self, q: &Rational) -> Self;
    /// Multiplicative inverse, when the element is a unit.
    fn try_inv(&self) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(crate::rational::int(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// The element as a rational, when it is a constant.
    fn as_rational(&self) -> Option<Rational>;
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(q: Rational) -> Self {
        q
    }
    fn scale(&self, q: &Rational) -> Self {
        self * q
    }
    fn try_inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

/// Falling factorial `start (start-1) ... (start-length+1)`; the empty
/// product is one.
pub fn falling_factorial<R: Ring>(start: &R, length: usize) -> R {
    let mut acc = R::one();
    for i in 0..length {
        acc = acc.mul(&start.sub(&R::from_int(i as i64)));
    }
    acc
}

/// Rising product `z (z + step) ... (z + (len-1) step)`.
pub fn rising_step<R: Ring>(start: &R, step: i64, length: usize) -> R {
    let mut acc = R::one();
    for i in 0..length {
        acc = acc.mul(&start.add(&R::from_int(i as i64 * step)));
    }
    acc
}
