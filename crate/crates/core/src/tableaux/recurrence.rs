use super::expand_box;
use crate::cartan::{Entry, Kind};
use crate::linform::{beta, LinearForm};
use crate::sequence::AdaptedSequence;
use std::ops::RangeInclusive;

type F = LinearForm<i64>;

/// Outcome of checking the box recurrences over a range of base rows.
#[derive(Debug, Clone, Default)]
pub struct RecurrenceReport {
    pub checked: usize,
    /// `(label, base row, detail)` for each identity that failed.
    pub failures: Vec<(String, i64, String)>,
}

impl RecurrenceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verifies every box recurrence at each base row of `rows` that lies in the
/// identity's validity range.
pub fn check_box_recurrences(seq: &AdaptedSequence, rows: RangeInclusive<i64>) -> RecurrenceReport {
    let n = seq.rank();
    let nn = n as i64;
    let p = |k: usize| seq.shift(k);
    let bx = |e: Entry, s: i64| expand_box::<i64>(seq, e, s);
    let b = |row: i64, j: usize| -> F {
        assert!(row >= 1, "beta row {row} below 1");
        beta(seq.sequence(), row as usize, j)
    };
    let plain = Entry::plain;
    let bar = Entry::bar;
    let mut report = RecurrenceReport::default();
    let mut check = |label: String, s: i64, lhs: F, rhs: F| {
        report.checked += 1;
        if lhs != rhs {
            report.failures.push((label, s, format!("{lhs} != {rhs}")));
        }
    };

    for s in rows {
        match seq.kind() {
            Kind::A => {
                for j in 1..=n {
                    if s >= 1 - p(j) {
                        let rhs = bx(plain(j), s).sub(&b(s + p(j), j));
                        check(format!("A-box j={j}"), s, bx(plain(j + 1), s), rhs);
                    }
                }
            }
            Kind::B | Kind::C => {
                let tag = if seq.kind() == Kind::B { "B" } else { "C" };
                let twice = if seq.kind() == Kind::B { 1 } else { 2 };
                for j in 1..n {
                    if s >= 1 - p(j) {
                        let rhs = bx(plain(j), s).sub(&b(s + p(j), j));
                        check(format!("{tag}-box1 j={j}"), s, bx(plain(j + 1), s), rhs);
                    }
                }
                if s >= 1 - p(n) {
                    let rhs = bx(plain(n), s).add_scaled(&b(s + p(n), n), -twice);
                    check(format!("{tag}-box2"), s, bx(bar(n), s), rhs);
                }
                for j in 2..=n {
                    let ji = j as i64;
                    if s >= ji - p(j - 1) - nn {
                        let rhs = bx(bar(j), s).sub(&b(s + p(j - 1) + nn - ji + 1, j - 1));
                        check(format!("{tag}-box3 j={j}"), s, bx(bar(j - 1), s), rhs);
                    }
                }
                if seq.kind() == Kind::C && s >= 1 - p(n) {
                    let spin = bar(n + 1);
                    let lhs = bx(spin, s + 1).add(&bx(bar(n), s));
                    let rhs = bx(spin, s).sub(&b(s + p(n), n));
                    check("BC-pr3".into(), s, lhs, rhs);
                }
            }
            Kind::D => {
                for j in 1..n {
                    if s >= 1 - p(j) {
                        let rhs = bx(plain(j), s).sub(&b(s + p(j), j));
                        check(format!("D-box1 j={j}"), s, bx(plain(j + 1), s), rhs);
                    }
                }
                if s >= 1 - p(n) {
                    let rhs = bx(plain(n - 1), s).sub(&b(s + p(n), n));
                    check("D-box2".into(), s, bx(bar(n), s), rhs);
                    let rhs = bx(plain(n), s).sub(&b(s + p(n), n));
                    check("D-box3".into(), s, bx(bar(n - 1), s), rhs);
                    let spin = bar(n + 1);
                    let lhs = bx(spin, s + 2)
                        .add(&bx(bar(n), s + 1))
                        .add(&bx(bar(n - 1), s));
                    let rhs = bx(spin, s).sub(&b(s + p(n), n));
                    check("D-box5".into(), s, lhs, rhs);
                }
                for j in 2..=n {
                    let ji = j as i64;
                    if s >= 1 + ji - p(j - 1) - nn {
                        let rhs = bx(bar(j), s).sub(&b(s + p(j - 1) + nn - ji, j - 1));
                        check(format!("D-box4 j={j}"), s, bx(bar(j - 1), s), rhs);
                    }
                }
            }
        }
    }
    report
}
