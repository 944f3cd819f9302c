//! Sparse integer linear forms in the double-index variables `x[s,j]`.

mod ops;
mod weight;

pub use ops::{apply_s, beta, beta_adapted};
pub use weight::{dominance, dominance_greater, weight, Dominance, DualWeight};

use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::sequence::SequenceSpec;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// The variable `x[row, col]`: the `row`-th occurrence of index `col`.
///
/// Ordered row-major, which fixes the canonical traversal of a form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Var {
    pub row: usize,
    pub col: usize,
}

impl Var {
    pub fn new(row: usize, col: usize) -> Self {
        Var { row, col }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.row, self.col)
    }
}

/// A finite linear combination of variables with nonzero integer coefficients.
///
/// Terms are kept sorted by [`Var`] with no zero entries, so structural
/// equality and hashing coincide with equality of forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm<C> {
    terms: Vec<(Var, C)>,
}

impl<C: Coefficient> Default for LinearForm<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> LinearForm<C> {
    pub fn zero() -> Self {
        LinearForm { terms: Vec::new() }
    }

    pub fn var(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1, "variables are indexed from 1");
        LinearForm {
            terms: vec![(Var::new(row, col), C::one())],
        }
    }

    /// Sums the given terms; duplicates are merged and zeros dropped.
    pub fn from_terms(terms: impl IntoIterator<Item = (Var, C)>) -> Self {
        let mut raw: Vec<(Var, C)> = terms.into_iter().collect();
        raw.sort_by_key(|t| t.0);
        let mut out: Vec<(Var, C)> = Vec::with_capacity(raw.len());
        for (v, c) in raw {
            match out.last_mut() {
                Some((w, acc)) if *w == v => *acc = acc.add_checked(c),
                _ => out.push((v, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        LinearForm { terms: out }
    }

    pub fn terms(&self) -> &[(Var, C)] {
        &self.terms
    }

    pub fn support(&self) -> impl Iterator<Item = Var> + '_ {
        self.terms.iter().map(|t| t.0)
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

    pub fn coeff(&self, row: usize, col: usize) -> C {
        let key = Var::new(row, col);
        match self.terms.binary_search_by_key(&key, |t| t.0) {
            Ok(i) => self.terms[i].1,
            Err(_) => C::zero(),
        }
    }

    pub fn max_row(&self) -> usize {
        self.terms.iter().map(|t| t.0.row).max().unwrap_or(0)
    }

    pub fn min_row(&self) -> usize {
        self.terms.iter().map(|t| t.0.row).min().unwrap_or(0)
    }

    /// `self + factor * other`, merged in one pass.
    pub fn add_scaled(&self, other: &Self, factor: C) -> Self {
        if factor.is_zero() || other.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let pick = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => std::cmp::Ordering::Less,
                (None, _) => std::cmp::Ordering::Greater,
            };
            match pick {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, b[j].1.mul_checked(factor)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = a[i].1.add_checked(b[j].1.mul_checked(factor));
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        LinearForm { terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(other, C::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(other, C::one().neg_checked())
    }

    pub fn scale(&self, factor: C) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        LinearForm {
            terms: self
                .terms
                .iter()
                .map(|&(v, c)| (v, c.mul_checked(factor)))
                .collect(),
        }
    }

    /// Drops every variable for which `pred` holds.
    pub fn without(&self, mut pred: impl FnMut(Var) -> bool) -> Self {
        LinearForm {
            terms: self.terms.iter().copied().filter(|t| !pred(t.0)).collect(),
        }
    }

    /// Evaluates the form at a point given as a variable lookup.
    pub fn eval(&self, mut point: impl FnMut(Var) -> i64) -> i128 {
        self.terms
            .iter()
            .map(|&(v, c)| i128::from(c.to_i64_lossless()) * i128::from(point(v)))
            .sum()
    }

    /// Converts the coefficient type, panicking if a coefficient does not fit.
    pub fn cast<D: Coefficient>(&self) -> LinearForm<D> {
        LinearForm {
            terms: self
                .terms
                .iter()
                .map(|&(v, c)| {
                    let d = D::from(c).unwrap_or_else(|| panic!("coefficient {c} does not fit"));
                    (v, d)
                })
                .collect(),
        }
    }

    /// Renders the form in single-index variables `x_k` of the given sequence,
    /// in increasing `k`.
    pub fn single_index(&self, seq: &SequenceSpec) -> String {
        let mut ks: Vec<(usize, C)> = self
            .terms
            .iter()
            .map(|&(v, c)| (seq.position(v.row, v.col), c))
            .collect();
        ks.sort_by_key(|t| t.0);
        render(ks.into_iter().map(|(k, c)| (format!("x{k}"), c)))
    }
}

fn render<C: Coefficient>(terms: impl Iterator<Item = (String, C)>) -> String {
    let mut out = String::new();
    for (name, c) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        out.push_str(&name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<C: Coefficient> fmt::Display for LinearForm<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self.terms.iter().map(|&(v, c)| (v.to_string(), c))))
    }
}

impl<C: Coefficient> FromStr for LinearForm<C> {
    type Err = Error;

    /// Parses the text rendering, e.g. `x[1,2] - 2x[2,1]` or `0`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad linear form `{s}`"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(Self::zero());
        }
        let mut terms = Vec::new();
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let mut sign = 1i64;
            if let Some(r) = rest.strip_prefix('+') {
                rest = r;
            } else if let Some(r) = rest.strip_prefix('-') {
                sign = -1;
                rest = r;
            } else if !first {
                return Err(bad());
            }
            first = false;
            let x = rest.find('x').ok_or_else(bad)?;
            let mag: i64 = if x == 0 {
                1
            } else {
                rest[..x].parse().map_err(|_| bad())?
            };
            let close = rest.find(']').ok_or_else(bad)?;
            let inner = rest[x + 1..close].strip_prefix('[').ok_or_else(bad)?;
            let (r, c) = inner.split_once(',').ok_or_else(bad)?;
            let row: usize = r.parse().map_err(|_| bad())?;
            let col: usize = c.parse().map_err(|_| bad())?;
            if row == 0 || col == 0 {
                return Err(bad());
            }
            terms.push((Var::new(row, col), C::lit(sign * mag)));
            rest = &rest[close + 1..];
        }
        Ok(Self::from_terms(terms))
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    s: usize,
    j: usize,
    c: i64,
}

impl<C: Coefficient> Serialize for LinearForm<C> {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let reprs: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|&(v, c)| TermRepr {
                s: v.row,
                j: v.col,
                c: c.to_i64_lossless(),
            })
            .collect();
        reprs.serialize(ser)
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for LinearForm<C> {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let reprs = Vec::<TermRepr>::deserialize(de)?;
        let mut terms = Vec::with_capacity(reprs.len());
        for t in reprs {
            if t.s == 0 || t.j == 0 {
                return Err(serde::de::Error::custom("variables are indexed from 1"));
            }
            let c =
                C::from(t.c).ok_or_else(|| serde::de::Error::custom("coefficient out of range"))?;
            terms.push((Var::new(t.s, t.j), c));
        }
        Ok(Self::from_terms(terms))
    }
}
