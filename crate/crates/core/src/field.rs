//! Scalar fields for the linear algebra and Lie algebra layers.
//!
//! Field elements do not carry their modulus, so arithmetic goes through a
//! field *context* implementing [`Field`]. [`crate::PrimeField`] is the
//! context for `F_p`; [`Exact`] lifts any exact `num_traits::Num` type
//! (e.g. `BigRational`) into a context with no runtime state.

use std::fmt::Debug;
use std::marker::PhantomData;

use num_traits::{FromPrimitive, Num, Signed};

use crate::error::{Error, Result};

pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `acc += c * x`, the inner step of every linear combination.
    fn mul_add_assign(&self, acc: &mut Self::Elem, c: &Self::Elem, x: &Self::Elem) {
        *acc = self.add(acc, &self.mul(c, x));
    }
}

/// Field context for an exact scalar type such as `BigRational`.
pub struct Exact<T>(PhantomData<fn() -> T>);

impl<T> Exact<T> {
    pub fn new() -> Self {
        Exact(PhantomData)
    }
}

impl<T> Default for Exact<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T> Clone for Exact<T> {
    fn clone(&self) -> Self {
        Self::new()
    }
}

impl<T> Debug for Exact<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Exact<{}>", std::any::type_name::<T>())
    }
}

impl<T> Field for Exact<T>
where
    T: Num + Signed + FromPrimitive + Clone + PartialEq + Debug + Send + Sync,
{
    type Elem = T;

    fn zero(&self) -> T {
        T::zero()
    }
    fn one(&self) -> T {
        T::one()
    }
    fn from_i64(&self, v: i64) -> T {
        T::from_i64(v).expect("exact scalar types represent every i64")
    }
    fn is_zero(&self, a: &T) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &T, b: &T) -> T {
        a.clone() + b.clone()
    }
    fn sub(&self, a: &T, b: &T) -> T {
        a.clone() - b.clone()
    }
    fn mul(&self, a: &T, b: &T) -> T {
        a.clone() * b.clone()
    }
    fn neg(&self, a: &T) -> T {
        -a.clone()
    }
    fn inv(&self, a: &T) -> Result<T> {
        if a.is_zero() {
            return Err(Error::DivisionByZero { modulus: 0 });
        }
        Ok(T::one() / a.clone())
    }
}
