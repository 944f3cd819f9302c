//! Column tableaux: box forms, admissibility, expansion and text notation.

mod action;
mod enumerate;
mod recurrence;

pub use action::tableau_s_action;
pub use enumerate::{enumerate_columns, enumerate_tab, enumerate_tab_n, TabIndex};
pub use recurrence::{check_box_recurrences, RecurrenceReport};

use crate::cartan::{CartanData, Entry, Kind, Order};
use crate::error::{Error, Result};
use crate::linform::{LinearForm, Var};
use crate::scalar::Coefficient;
use crate::sequence::AdaptedSequence;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A column `[j_1, ..., j_k]_s`, read top to bottom.
///
/// Entry `j_i` sits in a box with base row `s + k - i`. The spin symbol of
/// types C and D is stored as `Entry::bar(n + 1)` and may only occur on top.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColumnTableau {
    pub kind: Kind,
    pub entries: Vec<Entry>,
    pub s: i64,
}

impl ColumnTableau {
    pub fn new(kind: Kind, entries: Vec<Entry>, s: i64) -> Self {
        ColumnTableau { kind, entries, s }
    }

    pub fn height(&self) -> usize {
        self.entries.len()
    }

    pub fn is_spin(&self, cartan: &CartanData) -> bool {
        matches!(cartan.kind(), Kind::C | Kind::D) && self.entries.first() == Some(&cartan.spin())
    }

    /// Checks the admissibility conditions; the error names the violated one.
    pub fn check(&self, seq: &AdaptedSequence) -> Result<()> {
        let fail = |reason: String| {
            Err(Error::Inadmissible {
                tableau: self.to_string(),
                reason,
            })
        };
        let cartan = seq.cartan();
        let n = cartan.rank();
        let k = self.height();
        if self.kind != cartan.kind() {
            return fail(format!(
                "tableau of type {} used with {}",
                self.kind,
                cartan.name()
            ));
        }
        if k == 0 {
            return fail("a column has at least one box".into());
        }
        let spin = cartan.spin();
        let spin_allowed = matches!(cartan.kind(), Kind::C | Kind::D);
        if let Some(pos) = self.entries.iter().position(|&e| e == spin) {
            if !spin_allowed {
                return Err(Error::SpinNotAllowed);
            }
            if pos != 0 {
                return fail(format!("{spin} may only occur in the top box"));
            }
        }
        let strict = |a: Entry, b: Entry| cartan.compare(a, b).map(|o| o == Order::Less);

        if self.is_spin(cartan) {
            if k > n + 1 {
                return fail(format!("height {k} exceeds {}", n + 1));
            }
            for &e in &self.entries[1..] {
                cartan.check_entry(e)?;
                if !e.is_barred() {
                    return fail(format!("entry {e} below {spin} must be at least ~{n}"));
                }
            }
            for w in self.entries[1..].windows(2) {
                if !strict(w[0], w[1])? {
                    return fail(format!(
                        "entries {} and {} are not strictly increasing",
                        w[0], w[1]
                    ));
                }
            }
            let bound_index = if cartan.kind() == Kind::D && k.is_multiple_of(2) {
                n - 1
            } else {
                n
            };
            let bound = 1 - seq.shift(bound_index);
            if self.s < bound {
                return fail(format!(
                    "s = {} is below 1 - P({bound_index}) = {bound}",
                    self.s
                ));
            }
            return Ok(());
        }

        let max_k = match cartan.kind() {
            Kind::A | Kind::B => n,
            Kind::C => n - 1,
            Kind::D => n - 2,
        };
        if k > max_k {
            return fail(format!("height {k} exceeds {max_k}"));
        }
        for &e in &self.entries {
            cartan.check_entry(e)?;
        }
        for w in self.entries.windows(2) {
            let ok = match cartan.kind() {
                Kind::D => !matches!(cartan.compare(w[0], w[1])?, Order::Greater | Order::Equal),
                _ => strict(w[0], w[1])?,
            };
            if !ok {
                let what = if cartan.kind() == Kind::D {
                    "violate the no-descent condition"
                } else {
                    "are not strictly increasing"
                };
                return fail(format!("entries {} and {} {what}", w[0], w[1]));
            }
        }
        if cartan.kind() == Kind::B && k == n {
            let mut seen = vec![false; n + 1];
            for e in &self.entries {
                if std::mem::replace(&mut seen[e.index()], true) {
                    return fail(format!("|{e}| repeats in a column of full height"));
                }
            }
        }
        let bound = 1 - seq.shift(k);
        if self.s < bound {
            return fail(format!("s = {} is below 1 - P({k}) = {bound}", self.s));
        }
        Ok(())
    }

    pub fn is_admissible(&self, seq: &AdaptedSequence) -> bool {
        self.check(seq).is_ok()
    }

    /// The form `sum_i box(j_i, s + k - i)`; does not check admissibility.
    pub fn expand<C: Coefficient>(&self, seq: &AdaptedSequence) -> LinearForm<C> {
        let k = self.height() as i64;
        let mut out = LinearForm::zero();
        for (i, &e) in self.entries.iter().enumerate() {
            let b = expand_box(seq, e, self.s + k - 1 - i as i64);
            out = out.add(&b);
        }
        out
    }

    /// Parses `[j_1,...,j_k|s=S]`, with an optional `^X` suffix that must agree
    /// with `kind`.
    pub fn parse_with_kind(text: &str, kind: Kind) -> Result<Self> {
        let t: ColumnTableau = parse_body(text, Some(kind))?;
        Ok(t)
    }
}

fn parse_body(text: &str, default_kind: Option<Kind>) -> Result<ColumnTableau> {
    let bad = |msg: &str| {
        Error::Parse(format!(
            "{msg} in tableau `{text}`; expected e.g. [1,~2|s=0]^C"
        ))
    };
    let text_t = text.trim();
    let (body, suffix) = match text_t.rfind('^') {
        Some(p) => (&text_t[..p], Some(text_t[p + 1..].trim())),
        None => (text_t, None),
    };
    let kind = match (suffix, default_kind) {
        (Some(sfx), d) => {
            let k = match sfx.to_ascii_uppercase().as_str() {
                "A" => Kind::A,
                "B" => Kind::B,
                "C" => Kind::C,
                "D" => Kind::D,
                _ => return Err(bad("unknown type suffix")),
            };
            if let Some(d) = d {
                if d != k {
                    return Err(bad("type suffix does not match"));
                }
            }
            k
        }
        (None, Some(d)) => d,
        (None, None) => return Err(bad("missing type suffix")),
    };
    let inner = body
        .trim()
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .ok_or_else(|| bad("missing brackets"))?;
    let (list, s_part) = inner.split_once('|').ok_or_else(|| bad("missing `|s=`"))?;
    let s: i64 = s_part
        .trim()
        .strip_prefix("s=")
        .ok_or_else(|| bad("missing `s=`"))?
        .trim()
        .parse()
        .map_err(|_| bad("bad base row"))?;
    let entries = list
        .split(',')
        .map(Entry::from_str)
        .collect::<Result<Vec<_>>>()?;
    Ok(ColumnTableau { kind, entries, s })
}

impl FromStr for ColumnTableau {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_body(text, None)
    }
}

impl fmt::Display for ColumnTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "[{}|s={}]^{}", parts.join(","), self.s, self.kind)
    }
}

/// The single box form of `entry` at base row `s`, with variables outside
/// rows `>= 1` and columns `1..=n` dropped.
pub fn expand_box<C: Coefficient>(seq: &AdaptedSequence, entry: Entry, s: i64) -> LinearForm<C> {
    let cartan = seq.cartan();
    let n = cartan.rank();
    let p = |k: usize| seq.shift(k);
    let mut terms: Vec<(Var, C)> = Vec::with_capacity(3);
    let mut x = |row: i64, col: usize, c: i64| {
        if row >= 1 && col >= 1 && col <= n {
            terms.push((Var::new(row as usize, col), C::lit(c)));
        }
    };
    let j = entry.index();
    let ni = n as i64;
    let ji = j as i64;
    match (cartan.kind(), entry.is_barred()) {
        (Kind::A, false) => {
            assert!(j <= n + 1, "entry {entry} is not in the A alphabet");
            x(s + p(j), j, 1);
            x(s + p(j - 1) + 1, j - 1, -1);
        }
        (Kind::A, true) => panic!("type A has no barred entries"),
        (Kind::B, true) if j == n + 1 => panic!("type B has no spin symbol"),
        (Kind::C | Kind::D, true) if j == n + 1 => x(s + p(n), n, 1),
        (Kind::C, false) if j == n => {
            x(s + p(n), n, 2);
            x(s + p(n - 1) + 1, n - 1, -1);
        }
        (Kind::C, true) if j == n => {
            x(s + p(n - 1) + 1, n - 1, 1);
            x(s + p(n) + 1, n, -2);
        }
        (Kind::B | Kind::C, false) => {
            assert!(j <= n, "entry {entry} is not in the alphabet");
            x(s + p(j), j, 1);
            x(s + p(j - 1) + 1, j - 1, -1);
        }
        (Kind::B | Kind::C, true) => {
            assert!(j <= n, "entry {entry} is not in the alphabet");
            x(s + p(j - 1) + ni - ji + 1, j - 1, 1);
            x(s + p(j) + ni - ji + 1, j, -1);
        }
        (Kind::D, false) if j == n - 1 => {
            x(s + p(n - 1), n - 1, 1);
            x(s + p(n), n, 1);
            x(s + p(n - 2) + 1, n - 2, -1);
        }
        (Kind::D, false) => {
            assert!(j <= n, "entry {entry} is not in the alphabet");
            x(s + p(j), j, 1);
            x(s + p(j - 1) + 1, j - 1, -1);
        }
        (Kind::D, true) if j == n => {
            x(s + p(n - 1), n - 1, 1);
            x(s + p(n) + 1, n, -1);
        }
        (Kind::D, true) if j == n - 1 => {
            x(s + p(n - 2) + 1, n - 2, 1);
            x(s + p(n - 1) + 1, n - 1, -1);
            x(s + p(n) + 1, n, -1);
        }
        (Kind::D, true) => {
            assert!(j <= n, "entry {entry} is not in the alphabet");
            x(s + p(j - 1) + ni - ji, j - 1, 1);
            x(s + p(j) + ni - ji, j, -1);
        }
    }
    LinearForm::from_terms(terms)
}
