//! Exact combinatorics of polyhedral realizations of `B(infinity)` for the
//! classical types A, B, C and D.

pub mod cartan;
pub mod closure;
pub mod cone;
pub mod crystal;
pub mod error;
pub mod linform;
pub mod scalar;
pub mod sequence;
pub mod tableaux;

pub use cartan::{CartanData, Entry, Kind, Order};
pub use error::{Error, Result};
pub use linform::{Dominance, DualWeight, LinearForm, Var};
pub use scalar::Coefficient;
pub use sequence::{AdaptedSequence, Orientation, SequenceSpec, Validation};
pub use tableaux::ColumnTableau;

/// Linear forms with the default coefficient type.
pub type Form = LinearForm<i64>;
/// Closure results with the default coefficient type.
pub type Closure = closure::ClosureResult<i64>;
/// Closure-vs-tableaux comparisons with the default coefficient type.
pub type TabComparison = closure::Comparison<i64>;

pub use closure::{
    check_positivity, compare_with_tableaux, compute_closure, ClosureOptions, Positivity,
};
pub use cone::{build_cone, enumerate_points, kostant, raw_cone, simplify, InequalitySystem};
pub use crystal::{generate_binfty, CrystalGraph, CrystalPoint, RootWeight};
