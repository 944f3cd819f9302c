use super::LinearForm;
use crate::cartan::CartanData;
use crate::scalar::Coefficient;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A weight of the Langlands-dual type in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DualWeight(pub Vec<i64>);

impl DualWeight {
    pub fn zero(rank: usize) -> Self {
        DualWeight(vec![0; rank])
    }

    /// The dual simple root `alpha_j`, i.e. row `j` of the Cartan matrix.
    pub fn simple_root(cartan: &CartanData, j: usize) -> Self {
        DualWeight(cartan.indices().map(|i| cartan.a(j, i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        DualWeight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Coordinates in the dual simple roots, if the weight is in their
    /// rational span (always, since the Cartan matrix is invertible).
    pub fn root_coordinates(&self, cartan: &CartanData) -> Vec<Ratio<i64>> {
        // alpha_j = sum_i a(j,i) Lambda_i, so w = A^T c.
        let n = cartan.rank();
        let mut m: Vec<Vec<Ratio<i64>>> = (1..=n)
            .map(|i| {
                let mut row: Vec<Ratio<i64>> = (1..=n)
                    .map(|j| Ratio::from_integer(cartan.a(j, i)))
                    .collect();
                row.push(Ratio::from_integer(self.0[i - 1]));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !m[r][col].is_zero())
                .expect("Cartan matrix is invertible");
            m.swap(col, pivot);
            let p = m[col][col];
            for x in m[col].iter_mut() {
                *x /= p;
            }
            let pivot_row = m[col].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != col && !row[col].is_zero() {
                    let f = row[col];
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        *x -= y * f;
                    }
                }
            }
        }
        m.into_iter().map(|row| row[n]).collect()
    }
}

impl fmt::Display for DualWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Result of comparing two weights in the dominance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Dominance {
    Greater,
    Less,
    Equal,
    Incomparable,
}

/// `wt(phi)` with `wt(x[s,j]) = Lambda_j`.
pub fn weight<C: Coefficient>(cartan: &CartanData, phi: &LinearForm<C>) -> DualWeight {
    let mut w = DualWeight::zero(cartan.rank());
    for &(v, c) in phi.terms() {
        w.0[v.col - 1] += c.to_i64_lossless();
    }
    w
}

/// Compares `w1` and `w2`: `w1 >= w2` iff `w1 - w2` is a nonnegative integer
/// combination of dual simple roots.
pub fn dominance(cartan: &CartanData, w1: &DualWeight, w2: &DualWeight) -> Dominance {
    let c = w1.sub(w2).root_coordinates(cartan);
    if c.iter().any(|x| !x.denom().is_one()) {
        return Dominance::Incomparable;
    }
    if c.iter().all(Zero::is_zero) {
        Dominance::Equal
    } else if c.iter().all(|x| !x.is_negative()) {
        Dominance::Greater
    } else if c.iter().all(|x| !x.is_positive()) {
        Dominance::Less
    } else {
        Dominance::Incomparable
    }
}

pub fn dominance_greater(cartan: &CartanData, w1: &DualWeight, w2: &DualWeight) -> bool {
    dominance(cartan, w1, w2) == Dominance::Greater
}
