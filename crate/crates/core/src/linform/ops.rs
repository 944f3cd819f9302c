use super::{LinearForm, Var};
use crate::scalar::Coefficient;
use crate::sequence::{AdaptedSequence, SequenceSpec};

/// `beta_{s,j}`: `x_k + sum_{k<l<k+} a(i_k, i_l) x_l + x_{k+}` with `k` the
/// position of `(s, j)`, rewritten in double indices. `beta_{0,j} = 0`.
pub fn beta<C: Coefficient>(seq: &SequenceSpec, s: usize, j: usize) -> LinearForm<C> {
    if s == 0 {
        return LinearForm::zero();
    }
    let cartan = seq.cartan();
    let k = seq.position(s, j);
    let k_plus = seq.position(s + 1, j);
    let mut terms = Vec::with_capacity(k_plus - k + 1);
    terms.push((Var::new(s, j), C::one()));
    for l in (k + 1)..k_plus {
        let (r, i) = seq.occurrence(l);
        let a = cartan.a(j, i);
        if a != 0 {
            terms.push((Var::new(r, i), C::lit(a)));
        }
    }
    terms.push((Var::new(s + 1, j), C::one()));
    LinearForm::from_terms(terms)
}

/// `beta_{s,j}` from the orientation bits alone:
/// `x[s,j] + x[s+1,j] + sum_i a(j,i) x[s + p_{i,j}, i]` over neighbors `i` of `j`.
pub fn beta_adapted<C: Coefficient>(seq: &AdaptedSequence, s: usize, j: usize) -> LinearForm<C> {
    if s == 0 {
        return LinearForm::zero();
    }
    let cartan = seq.cartan();
    let mut terms = vec![(Var::new(s, j), C::one()), (Var::new(s + 1, j), C::one())];
    for i in cartan.neighbors(j) {
        let row = s + usize::from(seq.orientation().p(i, j));
        terms.push((Var::new(row, i), C::lit(cartan.a(j, i))));
    }
    LinearForm::from_terms(terms)
}

/// The piecewise-linear operator `S_{s,j}`.
///
/// With `c` the coefficient of `x[s,j]`: `phi - c beta_{s,j}` if `c > 0`,
/// otherwise `phi - c beta_{s-1,j}`.
pub fn apply_s<C: Coefficient>(
    seq: &SequenceSpec,
    s: usize,
    j: usize,
    phi: &LinearForm<C>,
) -> LinearForm<C> {
    assert!(s >= 1, "operator rows start at 1");
    let c = phi.coeff(s, j);
    if c.is_zero() {
        return phi.clone();
    }
    let b = if c.is_positive() {
        beta(seq, s, j)
    } else {
        beta(seq, s - 1, j)
    };
    phi.add_scaled(&b, c.neg_checked())
}
