use super::ColumnTableau;
use crate::cartan::{Entry, Kind};
use crate::sequence::AdaptedSequence;

enum Edit {
    Replace(usize, Entry),
    Insert(usize, Vec<Entry>),
    Remove(usize, usize),
}

/// `S_{m,j}` on an admissible tableau, by entry replacement.
///
/// The sign of the coefficient of `x[m,j]` in the expansion selects which
/// family of conditions can fire; every condition of that sign that holds is
/// applied at once (this covers the double replacements). Panics if the
/// coefficient is nonzero but no condition holds.
pub fn tableau_s_action(
    seq: &AdaptedSequence,
    t: &ColumnTableau,
    m: usize,
    j: usize,
) -> ColumnTableau {
    let c = t.expand::<i64>(seq).coeff(m, j);
    if c == 0 {
        return t.clone();
    }
    let edits = if c > 0 {
        raising(seq, t, m as i64, j)
    } else {
        lowering(seq, t, m as i64, j)
    };
    assert!(
        !edits.is_empty(),
        "no replacement rule for S[{m},{j}] on {t} (coefficient {c})"
    );
    apply(t, edits)
}

struct View<'a> {
    entries: &'a [Entry],
    s: i64,
    k: i64,
}

impl View<'_> {
    fn at(&self, i: i64) -> Option<Entry> {
        if i >= 1 && i <= self.k {
            Some(self.entries[(i - 1) as usize])
        } else {
            None
        }
    }

    fn is(&self, i: i64, e: Entry) -> bool {
        self.at(i) == Some(e)
    }

    /// Base row of box `i`.
    fn base(&self, i: i64) -> i64 {
        self.s + self.k - i
    }

    fn positions(&self) -> std::ops::RangeInclusive<i64> {
        1..=self.k
    }
}

fn view(t: &ColumnTableau) -> View<'_> {
    View {
        entries: &t.entries,
        s: t.s,
        k: t.entries.len() as i64,
    }
}

fn plain(j: usize) -> Entry {
    Entry::plain(j)
}

fn bar(j: usize) -> Entry {
    Entry::bar(j)
}

// Conditions under which x[m,j] has positive coefficient.
fn raising(seq: &AdaptedSequence, t: &ColumnTableau, m: i64, j: usize) -> Vec<Edit> {
    let cartan = seq.cartan();
    let n = cartan.rank();
    let nn = n as i64;
    let jj = j as i64;
    let p = |k: usize| seq.shift(k);
    let v = view(t);
    let spin = t.is_spin(cartan);
    let mut out = Vec::new();
    for i in v.positions() {
        let u = i as usize - 1;
        match cartan.kind() {
            Kind::A => {
                if v.is(i, plain(j)) && !v.is(i + 1, plain(j + 1)) && m == v.base(i) + p(j) {
                    out.push(Edit::Replace(u, plain(j + 1)));
                }
            }
            Kind::B | Kind::C if j < n => {
                if !spin && v.is(i, plain(j)) && !v.is(i + 1, plain(j + 1)) && m == v.base(i) + p(j)
                {
                    out.push(Edit::Replace(u, plain(j + 1)));
                }
                if v.is(i, bar(j + 1)) && !v.is(i + 1, bar(j)) && m == v.base(i) + nn - jj + p(j) {
                    out.push(Edit::Replace(u, bar(j)));
                }
            }
            Kind::B | Kind::C => {
                if !spin && v.is(i, plain(n)) && !v.is(i + 1, bar(n)) && m == v.base(i) + p(n) {
                    out.push(Edit::Replace(u, bar(n)));
                }
            }
            Kind::D if j < n => {
                if !spin && v.is(i, plain(j)) && !v.is(i + 1, plain(j + 1)) && m == v.base(i) + p(j)
                {
                    out.push(Edit::Replace(u, plain(j + 1)));
                }
                if v.is(i, bar(j + 1))
                    && !v.is(i + 1, bar(j))
                    && !v.is(i + 1, plain(n))
                    && m == v.base(i) + nn - jj - 1 + p(j)
                {
                    out.push(Edit::Replace(u, bar(j)));
                }
            }
            Kind::D => {
                let next_blocks = v.is(i + 1, bar(n)) || v.is(i + 1, bar(n - 1));
                if !spin && !next_blocks && m == v.base(i) + p(n) {
                    if v.is(i, plain(n - 1)) {
                        out.push(Edit::Replace(u, bar(n)));
                    } else if v.is(i, plain(n)) {
                        out.push(Edit::Replace(u, bar(n - 1)));
                    }
                }
            }
        }
    }
    if spin && j == n {
        match cartan.kind() {
            Kind::C => {
                if !v.is(2, bar(n)) && m == v.base(1) + p(n) {
                    out.push(Edit::Insert(1, vec![bar(n)]));
                }
            }
            Kind::D if !v.is(2, bar(n)) && !v.is(2, bar(n - 1)) && m == v.base(1) + p(n) => {
                out.push(Edit::Insert(1, vec![bar(n), bar(n - 1)]));
            }
            _ => {}
        }
    }
    out
}

// Conditions under which x[m,j] has negative coefficient.
fn lowering(seq: &AdaptedSequence, t: &ColumnTableau, m: i64, j: usize) -> Vec<Edit> {
    let cartan = seq.cartan();
    let n = cartan.rank();
    let nn = n as i64;
    let jj = j as i64;
    let p = |k: usize| seq.shift(k);
    let v = view(t);
    let spin = t.is_spin(cartan);
    let mut out = Vec::new();
    for i in v.positions() {
        let u = i as usize - 1;
        match cartan.kind() {
            Kind::A => {
                if v.is(i, plain(j + 1)) && !v.is(i - 1, plain(j)) && m == v.base(i) + 1 + p(j) {
                    out.push(Edit::Replace(u, plain(j)));
                }
            }
            Kind::B | Kind::C if j < n => {
                if !spin
                    && v.is(i, plain(j + 1))
                    && !v.is(i - 1, plain(j))
                    && m == v.base(i) + 1 + p(j)
                {
                    out.push(Edit::Replace(u, plain(j)));
                }
                if v.is(i, bar(j))
                    && !v.is(i - 1, bar(j + 1))
                    && m == v.base(i) + nn - jj + 1 + p(j)
                {
                    out.push(Edit::Replace(u, bar(j + 1)));
                }
            }
            Kind::B | Kind::C => {
                if v.is(i, bar(n)) && !v.is(i - 1, plain(n)) && m == v.base(i) + 1 + p(n) {
                    if spin {
                        out.push(Edit::Remove(u, 1));
                    } else {
                        out.push(Edit::Replace(u, plain(n)));
                    }
                }
            }
            Kind::D if j < n => {
                if !spin
                    && v.is(i, plain(j + 1))
                    && !v.is(i - 1, plain(j))
                    && !v.is(i - 1, bar(n))
                    && m == v.base(i) + 1 + p(j)
                {
                    out.push(Edit::Replace(u, plain(j)));
                }
                if v.is(i, bar(j)) && !v.is(i - 1, bar(j + 1)) && m == v.base(i) + nn - jj + p(j) {
                    out.push(Edit::Replace(u, bar(j + 1)));
                }
            }
            Kind::D => {
                let prev_blocks = v.is(i - 1, plain(n - 1)) || v.is(i - 1, plain(n));
                if !spin && !prev_blocks && m == v.base(i) + 1 + p(n) {
                    if v.is(i, bar(n)) {
                        out.push(Edit::Replace(u, plain(n - 1)));
                    } else if v.is(i, bar(n - 1)) {
                        out.push(Edit::Replace(u, plain(n)));
                    }
                }
            }
        }
    }
    if spin
        && j == n
        && cartan.kind() == Kind::D
        && v.is(2, bar(n))
        && v.is(3, bar(n - 1))
        && m == v.base(1) - 1 + p(n)
    {
        out.push(Edit::Remove(1, 2));
    }
    out
}

fn apply(t: &ColumnTableau, edits: Vec<Edit>) -> ColumnTableau {
    let mut entries = t.entries.clone();
    let mut structural = None;
    for e in edits {
        match e {
            Edit::Replace(u, x) => entries[u] = x,
            other => {
                assert!(structural.is_none(), "two structural edits on {t}");
                structural = Some(other);
            }
        }
    }
    match structural {
        Some(Edit::Insert(at, xs)) => {
            entries.splice(at..at, xs);
        }
        Some(Edit::Remove(at, len)) => {
            entries.drain(at..at + len);
        }
        _ => {}
    }
    ColumnTableau::new(t.kind, entries, t.s)
}
