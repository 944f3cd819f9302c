use super::ColumnTableau;
use crate::cartan::{Entry, Kind, Order};
use crate::linform::LinearForm;
use crate::scalar::Coefficient;
use crate::sequence::AdaptedSequence;
use std::collections::HashMap;

/// Every entry list admissible as a column, ignoring the base row.
///
/// Ordered by height, then lexicographically in the alphabet's fixed linear
/// extension.
pub fn enumerate_columns(seq: &AdaptedSequence) -> Vec<Vec<Entry>> {
    let cartan = seq.cartan();
    let n = cartan.rank();
    let alphabet = cartan.alphabet();
    let max_k = match cartan.kind() {
        Kind::A | Kind::B => n,
        Kind::C => n - 1,
        Kind::D => n - 2,
    };
    let next_ok = |a: Entry, b: Entry| match cartan.kind() {
        Kind::D => !matches!(cartan.compare(a, b), Ok(Order::Greater | Order::Equal)),
        _ => cartan.compare(a, b) == Ok(Order::Less),
    };

    let mut by_height: Vec<Vec<Vec<Entry>>> = vec![Vec::new(); n + 2];
    let mut stack: Vec<Vec<Entry>> = alphabet.iter().rev().map(|&e| vec![e]).collect();
    while let Some(col) = stack.pop() {
        let k = col.len();
        let full_b = cartan.kind() == Kind::B && k == n;
        if !full_b || distinct_indices(&col) {
            by_height[k].push(col.clone());
        }
        if k < max_k {
            let last = *col.last().unwrap();
            for &e in alphabet.iter().rev() {
                if next_ok(last, e) {
                    let mut c = col.clone();
                    c.push(e);
                    stack.push(c);
                }
            }
        }
    }

    if matches!(cartan.kind(), Kind::C | Kind::D) {
        let barred: Vec<Entry> = (1..=n).rev().map(Entry::bar).collect();
        for mask in 0u32..(1 << n) {
            let mut col = vec![cartan.spin()];
            col.extend((0..n).filter(|b| mask >> b & 1 == 1).map(|b| barred[b]));
            by_height[col.len()].push(col);
        }
    }

    let rank_of = |e: Entry| {
        if e == cartan.spin() {
            0
        } else {
            1 + alphabet.iter().position(|&a| a == e).unwrap()
        }
    };
    let mut out = Vec::new();
    for mut group in by_height {
        group.sort_by_key(|c| c.iter().map(|&e| rank_of(e)).collect::<Vec<_>>());
        out.extend(group);
    }
    out
}

fn distinct_indices(col: &[Entry]) -> bool {
    let mut seen: Vec<usize> = col.iter().map(|e| e.index()).collect();
    seen.sort_unstable();
    seen.windows(2).all(|w| w[0] != w[1])
}

fn lower_bound(seq: &AdaptedSequence, t: &ColumnTableau) -> i64 {
    let cartan = seq.cartan();
    let n = cartan.rank();
    let k = t.height();
    if t.is_spin(cartan) {
        if cartan.kind() == Kind::D && k.is_multiple_of(2) {
            1 - seq.shift(n - 1)
        } else {
            1 - seq.shift(n)
        }
    } else {
        1 - seq.shift(k)
    }
}

/// Admissible tableaux whose expansion is supported in rows `1..=rows`,
/// ordered by base row and then by column.
pub fn enumerate_tab(seq: &AdaptedSequence, rows: usize) -> Vec<ColumnTableau> {
    assert!(rows >= 1, "the row cap is at least 1");
    let kind = seq.kind();
    let mut out = Vec::new();
    for col in enumerate_columns(seq) {
        let probe = ColumnTableau::new(kind, col, 0);
        // every box form lives in rows >= its base row, so s <= rows
        for s in lower_bound(seq, &probe)..=rows as i64 {
            let t = ColumnTableau::new(kind, probe.entries.clone(), s);
            if t.expand::<i64>(seq).max_row() <= rows {
                out.push(t);
            }
        }
    }
    out.sort_by(|a, b| a.s.cmp(&b.s).then_with(|| a.height().cmp(&b.height())));
    out
}

/// The finite set of admissible tableaux with base row `s <= n`.
pub fn enumerate_tab_n(seq: &AdaptedSequence) -> Vec<ColumnTableau> {
    let kind = seq.kind();
    let n = seq.rank() as i64;
    let mut out = Vec::new();
    for col in enumerate_columns(seq) {
        let probe = ColumnTableau::new(kind, col, 0);
        for s in lower_bound(seq, &probe)..=n {
            out.push(ColumnTableau::new(kind, probe.entries.clone(), s));
        }
    }
    out.sort_by(|a, b| a.s.cmp(&b.s).then_with(|| a.height().cmp(&b.height())));
    out
}

/// Inverse lookup from expanded forms back to tableaux.
#[derive(Debug, Clone)]
pub struct TabIndex<C: Coefficient> {
    by_form: HashMap<LinearForm<C>, Vec<ColumnTableau>>,
}

impl<C: Coefficient> TabIndex<C> {
    pub fn new(seq: &AdaptedSequence, tableaux: &[ColumnTableau]) -> Self {
        let mut by_form: HashMap<LinearForm<C>, Vec<ColumnTableau>> = HashMap::new();
        for t in tableaux {
            by_form.entry(t.expand(seq)).or_default().push(t.clone());
        }
        TabIndex { by_form }
    }

    pub fn lookup(&self, phi: &LinearForm<C>) -> &[ColumnTableau] {
        self.by_form.get(phi).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn len(&self) -> usize {
        self.by_form.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_form.is_empty()
    }

    pub fn forms(&self) -> impl Iterator<Item = &LinearForm<C>> {
        self.by_form.keys()
    }

    /// Groups of distinct tableaux sharing one expansion, sorted.
    pub fn collisions(&self) -> Vec<(LinearForm<C>, Vec<ColumnTableau>)> {
        let mut out: Vec<_> = self
            .by_form
            .iter()
            .filter(|(_, ts)| ts.len() > 1)
            .map(|(f, ts)| (f.clone(), ts.clone()))
            .collect();
        out.sort();
        out
    }
}
