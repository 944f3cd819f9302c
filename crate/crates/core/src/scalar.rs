//! Coefficient scalars for linear forms.
//!
//! Every object in this crate is integral, so the scalar is a signed machine
//! integer. Arithmetic is checked: an overflow aborts with a panic instead of
//! wrapping, since a wrapped coefficient would silently corrupt a closure set.

use num_traits::{PrimInt, Signed};
use std::fmt::{Debug, Display};
use std::hash::Hash;

/// Signed integer usable as a linear-form coefficient.
pub trait Coefficient:
    PrimInt + Signed + Hash + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts a small literal, panicking if it does not fit.
    fn lit(v: i64) -> Self {
        Self::from(v).unwrap_or_else(|| panic!("coefficient {v} does not fit the scalar type"))
    }

    fn add_checked(self, rhs: Self) -> Self {
        self.checked_add(&rhs)
            .unwrap_or_else(|| panic!("coefficient overflow: {self} + {rhs}"))
    }

    fn mul_checked(self, rhs: Self) -> Self {
        self.checked_mul(&rhs)
            .unwrap_or_else(|| panic!("coefficient overflow: {self} * {rhs}"))
    }

    fn neg_checked(self) -> Self {
        Self::zero()
            .checked_sub(&self)
            .unwrap_or_else(|| panic!("coefficient overflow: -({self})"))
    }

    fn to_i64_lossless(self) -> i64 {
        self.to_i64()
            .unwrap_or_else(|| panic!("coefficient {self} does not fit in i64"))
    }
}

impl<T> Coefficient for T where
    T: PrimInt + Signed + Hash + Debug + Display + Default + Send + Sync + 'static
{
}
