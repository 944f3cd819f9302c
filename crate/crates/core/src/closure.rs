//! The truncated closure of the coordinate forms under the operators `S_{s,j}`.

use crate::error::Result;
use crate::linform::{apply_s, LinearForm, Var};
use crate::scalar::Coefficient;
use crate::sequence::{AdaptedSequence, SequenceSpec};
use crate::tableaux::{enumerate_tab, ColumnTableau, TabIndex};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{HashMap, HashSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureOptions {
    /// Operators `S_{m,i}` are applied for `m <= window`; seeds are `x[s,j]`, `s <= window`.
    pub window: usize,
    /// Forms reaching past row `window + pad` are discarded. Defaults to `rank + 2`.
    pub pad: Option<usize>,
    /// Expand each BFS level in parallel.
    pub parallel: bool,
}

impl ClosureOptions {
    pub fn new(window: usize) -> Self {
        ClosureOptions {
            window,
            pad: None,
            parallel: false,
        }
    }
}

/// How a form was first reached: a seed and the operators applied in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Derivation {
    pub seed: Var,
    /// `(m, i)` for each `S_{m,i}`, first applied first.
    pub word: Vec<(usize, usize)>,
}

#[derive(Debug, Clone)]
struct Node<C> {
    form: LinearForm<C>,
    parent: Option<(usize, (usize, usize))>,
    seed: Var,
}

#[derive(Debug, Clone)]
pub struct ClosureResult<C: Coefficient> {
    pub window: usize,
    pub pad: usize,
    /// Forms supported in rows at most this are in the safe set; may be 0.
    pub safe_rows: usize,
    /// Number of operator applications whose result was discarded for
    /// reaching past row `window + pad`.
    pub overflow_count: usize,
    nodes: Vec<Node<C>>,
    index: HashMap<LinearForm<C>, usize>,
}

impl<C: Coefficient> ClosureResult<C> {
    /// All forms, in BFS discovery order.
    pub fn forms(&self) -> impl Iterator<Item = &LinearForm<C>> {
        self.nodes.iter().map(|n| &n.form)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, phi: &LinearForm<C>) -> bool {
        self.index.contains_key(phi)
    }

    /// Forms supported in rows `1..=safe_rows`, sorted canonically.
    pub fn safe(&self) -> Vec<LinearForm<C>> {
        let mut out: Vec<_> = self
            .forms()
            .filter(|f| f.max_row() <= self.safe_rows)
            .cloned()
            .collect();
        out.sort();
        out
    }

    /// All forms sorted canonically.
    pub fn sorted(&self) -> Vec<LinearForm<C>> {
        let mut out: Vec<_> = self.forms().cloned().collect();
        out.sort();
        out
    }

    /// A shortest operator word producing `phi` from a seed.
    pub fn derivation(&self, phi: &LinearForm<C>) -> Option<Derivation> {
        let mut at = *self.index.get(phi)?;
        let mut word = Vec::new();
        while let Some((parent, op)) = self.nodes[at].parent {
            word.push(op);
            at = parent;
        }
        word.reverse();
        Some(Derivation {
            seed: self.nodes[at].seed,
            word,
        })
    }
}

/// An image form and the operator `(m, i)` producing it.
type Step<C> = (LinearForm<C>, (usize, usize));

fn successors<C: Coefficient>(
    seq: &SequenceSpec,
    phi: &LinearForm<C>,
    window: usize,
    limit: usize,
) -> (Vec<Step<C>>, usize) {
    let mut out = Vec::new();
    let mut overflow = 0;
    for v in phi.support() {
        if v.row > window {
            break;
        }
        let psi = apply_s(seq, v.row, v.col, phi);
        if psi.max_row() > limit {
            overflow += 1;
        } else {
            out.push((psi, (v.row, v.col)));
        }
    }
    (out, overflow)
}

/// Breadth-first closure of the seeds `x[s,j]`, `s <= window`, under the
/// operators `S_{m,i}` with `m <= window`.
///
/// The result is the same whether or not levels are expanded in parallel.
pub fn compute_closure<C: Coefficient>(
    seq: &SequenceSpec,
    opts: ClosureOptions,
) -> ClosureResult<C> {
    assert!(opts.window >= 1, "the window is at least 1");
    let rank = seq.cartan().rank();
    let pad = opts.pad.unwrap_or(rank + 2);
    let window = opts.window;
    let limit = window + pad;
    let mut nodes: Vec<Node<C>> = Vec::new();
    let mut index: HashMap<LinearForm<C>, usize> = HashMap::new();
    let mut frontier: Vec<usize> = Vec::new();
    for s in 1..=window {
        for j in seq.cartan().indices() {
            let seed = Var::new(s, j);
            let form = LinearForm::var(s, j);
            index.insert(form.clone(), nodes.len());
            frontier.push(nodes.len());
            nodes.push(Node {
                form,
                parent: None,
                seed,
            });
        }
    }
    let mut overflow_count = 0;
    while !frontier.is_empty() {
        let expand = |&at: &usize| successors(seq, &nodes[at].form, window, limit);
        let batches: Vec<_> = if opts.parallel {
            frontier.par_iter().map(expand).collect()
        } else {
            frontier.iter().map(expand).collect()
        };
        let mut next = Vec::new();
        for (&parent, (succ, overflow)) in frontier.iter().zip(batches) {
            overflow_count += overflow;
            for (psi, op) in succ {
                if index.contains_key(&psi) {
                    continue;
                }
                let seed = nodes[parent].seed;
                index.insert(psi.clone(), nodes.len());
                next.push(nodes.len());
                nodes.push(Node {
                    form: psi,
                    parent: Some((parent, op)),
                    seed,
                });
            }
        }
        frontier = next;
    }
    ClosureResult {
        window,
        pad,
        safe_rows: window.saturating_sub(rank + 2),
        overflow_count,
        nodes,
        index,
    }
}

/// Outcome of the positivity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Positivity<C: Coefficient> {
    Pass,
    /// A form with a negative coefficient at `x[1, column]`.
    Witness {
        form: LinearForm<C>,
        column: usize,
    },
}

impl<C: Coefficient> Positivity<C> {
    pub fn passed(&self) -> bool {
        matches!(self, Positivity::Pass)
    }
}

/// Checks that every form has nonnegative coefficients in row 1; the witness
/// is the first violating form in iteration order.
pub fn check_positivity<'a, C: Coefficient>(
    forms: impl IntoIterator<Item = &'a LinearForm<C>>,
) -> Positivity<C> {
    for phi in forms {
        for &(v, c) in phi.terms() {
            if v.row > 1 {
                break;
            }
            if c.is_negative() {
                return Positivity::Witness {
                    form: phi.clone(),
                    column: v.col,
                };
            }
        }
    }
    Positivity::Pass
}

/// Result of comparing the safe closure set against the tableau forms.
#[derive(Debug, Clone)]
pub struct Comparison<C: Coefficient> {
    pub equal: bool,
    pub safe_rows: usize,
    pub closure_size: usize,
    pub tableau_count: usize,
    /// Tableau forms absent from the closure, with a tableau producing each.
    pub missing_from_closure: Vec<(LinearForm<C>, ColumnTableau)>,
    /// Closure forms that no tableau expands to.
    pub missing_from_tab: Vec<LinearForm<C>>,
    /// Distinct tableaux within the window that share an expansion.
    pub collisions: Vec<(LinearForm<C>, Vec<ColumnTableau>)>,
    pub overflow_count: usize,
}

/// Compares the safe part of the closure with all tableaux supported in the
/// same rows.
pub fn compare_with_tableaux<C: Coefficient>(
    seq: &SequenceSpec,
    opts: ClosureOptions,
) -> Result<Comparison<C>> {
    let adapted = AdaptedSequence::from_spec(seq)?;
    let closure = compute_closure::<C>(adapted.sequence(), opts);
    Ok(compare_closure(&adapted, &closure))
}

/// [`compare_with_tableaux`] against an already computed closure.
pub fn compare_closure<C: Coefficient>(
    adapted: &AdaptedSequence,
    closure: &ClosureResult<C>,
) -> Comparison<C> {
    let rows = closure.safe_rows;
    let tabs = if rows == 0 {
        Vec::new()
    } else {
        enumerate_tab(adapted, rows)
    };
    let index = TabIndex::<C>::new(adapted, &tabs);
    let safe = closure.safe();
    let safe_set: HashSet<&LinearForm<C>> = safe.iter().collect();
    let mut missing_from_closure: Vec<_> = index
        .forms()
        .filter(|f| !safe_set.contains(f))
        .map(|f| (f.clone(), index.lookup(f)[0].clone()))
        .collect();
    missing_from_closure.sort();
    let missing_from_tab: Vec<_> = safe
        .iter()
        .filter(|f| index.lookup(f).is_empty())
        .cloned()
        .collect();
    Comparison {
        equal: missing_from_closure.is_empty() && missing_from_tab.is_empty(),
        safe_rows: rows,
        closure_size: safe.len(),
        tableau_count: tabs.len(),
        missing_from_closure,
        missing_from_tab,
        collisions: index.collisions(),
        overflow_count: closure.overflow_count,
    }
}

/// Checks that applying any `S_{m,i}`, `m <= safe_rows`, to a safe form whose
/// image stays in the safe rows lands back in the closure. Returns the
/// offending `(form, (m, i))` pairs.
pub fn verify_safe_closed<C: Coefficient>(
    seq: &SequenceSpec,
    closure: &ClosureResult<C>,
) -> Vec<(LinearForm<C>, (usize, usize))> {
    let rows = closure.safe_rows;
    let mut bad = Vec::new();
    for phi in closure.safe() {
        for v in phi.support() {
            if v.row > rows {
                break;
            }
            let psi = apply_s(seq, v.row, v.col, &phi);
            if psi.max_row() <= rows && !closure.contains(&psi) {
                bad.push((phi.clone(), (v.row, v.col)));
            }
        }
    }
    bad
}
