//! Cartan data for the classical types and the column alphabets.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    A,
    B,
    C,
    D,
}

impl Kind {
    pub fn letter(self) -> char {
        match self {
            Kind::A => 'A',
            Kind::B => 'B',
            Kind::C => 'C',
            Kind::D => 'D',
        }
    }

    /// Langlands dual type: B and C swap.
    pub fn dual(self) -> Kind {
        match self {
            Kind::B => Kind::C,
            Kind::C => Kind::B,
            k => k,
        }
    }

    fn min_rank(self) -> (usize, &'static str) {
        match self {
            Kind::A => (1, "n >= 1"),
            Kind::B | Kind::C => (2, "n >= 2"),
            Kind::D => (4, "n >= 4"),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Cartan matrix of a classical type in Kac's numbering.
///
/// Indices are 1-based throughout the crate: `a(i, j)` is `<h_i, alpha_j>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanData {
    kind: Kind,
    rank: usize,
    matrix: Vec<i64>,
}

impl CartanData {
    pub fn new(kind: Kind, rank: usize) -> Result<Self> {
        let (min, bound) = kind.min_rank();
        if rank < min {
            return Err(Error::RankOutOfRange {
                kind: kind.letter(),
                rank,
                bound,
            });
        }
        let n = rank;
        let mut m = vec![0i64; n * n];
        let mut set = |i: usize, j: usize, v: i64| m[(i - 1) * n + (j - 1)] = v;
        for i in 1..=n {
            set(i, i, 2);
        }
        // simple chain 1 - 2 - ... up to the type-specific tail
        let chain_end = match kind {
            Kind::A => n,
            Kind::B | Kind::C => n - 1,
            Kind::D => n - 1,
        };
        for i in 1..chain_end {
            set(i, i + 1, -1);
            set(i + 1, i, -1);
        }
        match kind {
            Kind::A => {}
            Kind::B => {
                set(n - 1, n, -1);
                set(n, n - 1, -2);
            }
            Kind::C => {
                set(n - 1, n, -2);
                set(n, n - 1, -1);
            }
            Kind::D => {
                set(n - 2, n, -1);
                set(n, n - 2, -1);
            }
        }
        Ok(CartanData {
            kind,
            rank,
            matrix: m,
        })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.matrix[(i - 1) * self.rank + (j - 1)]
    }

    /// The matrix as nested rows (row `i - 1` holds `a(i, *)`).
    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.matrix.chunks(self.rank).map(|r| r.to_vec()).collect()
    }

    pub fn indices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.rank
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if (1..=self.rank).contains(&i) {
            Ok(())
        } else {
            Err(Error::InvalidIndex {
                index: i,
                rank: self.rank,
            })
        }
    }

    pub fn neighbors(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.indices().filter(move |&i| i != j && self.a(j, i) != 0)
    }

    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.a(i, j) != 0
    }

    /// Dynkin edges `{i, j}` listed once with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in self.indices() {
            for j in (i + 1)..=self.rank {
                if self.is_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Positive integers `d_i` with `d_i a(i,j) = d_j a(j,i)`.
    pub fn symmetrizer(&self) -> Vec<i64> {
        let n = self.rank;
        match self.kind {
            Kind::A | Kind::D => vec![1; n],
            // long roots 1..n-1, short root n
            Kind::B => (1..=n).map(|i| if i == n { 1 } else { 2 }).collect(),
            Kind::C => (1..=n).map(|i| if i == n { 2 } else { 1 }).collect(),
        }
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }

    // ---- alphabet ----

    /// Checks that `e` belongs to the column alphabet (spin symbol excluded).
    pub fn check_entry(&self, e: Entry) -> Result<()> {
        let n = self.rank as i32;
        let ok = match self.kind {
            Kind::A => e.0 >= 1 && e.0 <= n + 1,
            _ => e.0 != 0 && e.0.abs() <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidEntry {
                kind: self.kind.letter(),
                rank: self.rank,
                entry: e.0,
            })
        }
    }

    /// The spin symbol `~(n+1)`, available for C and D.
    pub fn spin(&self) -> Entry {
        Entry::bar(self.rank + 1)
    }

    fn level(&self, e: Entry) -> i32 {
        let n = self.rank as i32;
        match (self.kind, e.is_barred()) {
            (_, false) => e.index() as i32,
            (Kind::D, true) => 2 * n - e.index() as i32,
            (_, true) => 2 * n + 1 - e.index() as i32,
        }
    }

    /// Compares two alphabet entries in the (partial) order of the alphabet.
    pub fn compare(&self, e1: Entry, e2: Entry) -> Result<Order> {
        self.check_entry(e1)?;
        self.check_entry(e2)?;
        if e1 == e2 {
            return Ok(Order::Equal);
        }
        let (l1, l2) = (self.level(e1), self.level(e2));
        Ok(match l1.cmp(&l2) {
            std::cmp::Ordering::Less => Order::Less,
            std::cmp::Ordering::Greater => Order::Greater,
            // only D's n and ~n share a level
            std::cmp::Ordering::Equal => Order::Incomparable,
        })
    }

    /// All alphabet entries in a fixed linear extension of the order.
    pub fn alphabet(&self) -> Vec<Entry> {
        let n = self.rank;
        match self.kind {
            Kind::A => (1..=n + 1).map(Entry::plain).collect(),
            _ => (1..=n)
                .map(Entry::plain)
                .chain((1..=n).rev().map(Entry::bar))
                .collect(),
        }
    }
}

impl FromStr for CartanData {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Kind::A,
            Some('B') => Kind::B,
            Some('C') => Kind::C,
            Some('D') => Kind::D,
            _ => return Err(Error::BadTypeName(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::BadTypeName(s.to_string()))?;
        CartanData::new(kind, rank)
    }
}

/// Result of comparing two alphabet entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Less,
    Greater,
    Equal,
    Incomparable,
}

/// An alphabet entry: `+j` is `j`, `-j` is the barred letter `~j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Entry(pub i32);

impl Entry {
    pub fn plain(j: usize) -> Entry {
        assert!(j >= 1, "alphabet entries start at 1");
        Entry(j as i32)
    }

    pub fn bar(j: usize) -> Entry {
        assert!(j >= 1, "alphabet entries start at 1");
        Entry(-(j as i32))
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    /// `|j| = |~j| = j`.
    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_barred() {
            write!(f, "~{}", self.index())
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl FromStr for Entry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (barred, digits) = match s.strip_prefix('~') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let j: usize = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad alphabet entry `{s}`")))?;
        if j == 0 {
            return Err(Error::Parse("alphabet entries start at 1".into()));
        }
        Ok(if barred {
            Entry::bar(j)
        } else {
            Entry::plain(j)
        })
    }
}
