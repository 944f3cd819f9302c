//! Infinite index sequences, adaptedness and the orientation bits.
//!
//! A sequence is stored eventually periodic: `prefix` followed by `period`
//! repeated forever. Lists are read with the first element as `i_1`, so the
//! paper-style display `(..., 3, 1, 2)` corresponds to the period `[2, 1, 3]`.
//! Position `k` is 1-based; the double index `(s, j)` names the `s`-th
//! occurrence of the letter `j`.

use crate::cartan::{CartanData, Kind};
use crate::error::{Error, Result};
use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};
use std::fmt;

/// Orientation bits `p_{i,j}` on the Dynkin edges, with `p_{i,j} + p_{j,i} = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation {
    // keyed by (i, j) with i < j, value p_{i,j}
    bits: BTreeMap<(usize, usize), u8>,
}

impl Orientation {
    /// Builds an orientation from any list of `((i, j), p_{i,j})` assignments.
    ///
    /// Each edge must be covered exactly once, in either direction.
    pub fn new(
        cartan: &CartanData,
        assignments: impl IntoIterator<Item = ((usize, usize), u8)>,
    ) -> Result<Self> {
        let mut bits = BTreeMap::new();
        for ((i, j), p) in assignments {
            cartan.check_index(i)?;
            cartan.check_index(j)?;
            if !cartan.is_edge(i, j) {
                return Err(Error::NotAnEdge(i, j));
            }
            if p > 1 {
                return Err(Error::Parse(format!(
                    "orientation bit p_{{{i},{j}}} = {p} is not 0 or 1"
                )));
            }
            let (key, val) = if i < j { ((i, j), p) } else { ((j, i), 1 - p) };
            if let Some(old) = bits.insert(key, val) {
                if old != val {
                    return Err(Error::Parse(format!(
                        "conflicting orientation bits for edge {{{i},{j}}}"
                    )));
                }
            }
        }
        for (i, j) in cartan.edges() {
            if !bits.contains_key(&(i, j)) {
                return Err(Error::MissingOrientation(j, i));
            }
        }
        Ok(Orientation { bits })
    }

    /// Every orientation of the diagram, in a fixed order.
    pub fn all(cartan: &CartanData) -> Vec<Orientation> {
        let edges = cartan.edges();
        (0u32..(1u32 << edges.len()))
            .map(|mask| Orientation {
                bits: edges
                    .iter()
                    .enumerate()
                    .map(|(b, &e)| (e, ((mask >> b) & 1) as u8))
                    .collect(),
            })
            .collect()
    }

    /// `p_{i,j}` for an edge `{i, j}`.
    pub fn p(&self, i: usize, j: usize) -> u8 {
        if i < j {
            self.bits[&(i, j)]
        } else {
            1 - self.bits[&(j, i)]
        }
    }

    /// Assignments in the `p_{j,i}` form with `j > i`, e.g. `2,1=0 3,2=1`.
    pub fn assignments(&self) -> Vec<((usize, usize), u8)> {
        self.bits
            .iter()
            .map(|(&(i, j), &p)| ((j, i), 1 - p))
            .collect()
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .assignments()
            .into_iter()
            .map(|((j, i), p)| format!("{j},{i}={p}"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// An eventually periodic sequence satisfying the no-repeat and
/// infinitely-often conditions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SequenceSpec {
    cartan: CartanData,
    prefix: Vec<usize>,
    period: Vec<usize>,
    // occurrence bookkeeping, indexed by letter j (slot 0 unused)
    prefix_pos: Vec<Vec<usize>>,
    period_pos: Vec<Vec<usize>>,
}

impl SequenceSpec {
    pub fn new(cartan: CartanData, prefix: Vec<usize>, period: Vec<usize>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        for &i in prefix.iter().chain(&period) {
            cartan.check_index(i)?;
        }
        for j in cartan.indices() {
            if !period.contains(&j) {
                return Err(Error::MissingIndex(j));
            }
        }
        let joined: Vec<usize> = prefix
            .iter()
            .chain(&period)
            .chain(&period)
            .copied()
            .collect();
        // In rank 1 the only sequence is 1, 1, 1, ..., so repeats are forced.
        for (k, w) in joined.windows(2).enumerate() {
            if w[0] == w[1] && cartan.rank() > 1 {
                return Err(Error::AdjacentRepeat {
                    index: w[0],
                    position: k + 1,
                    next: k + 2,
                });
            }
        }
        let n = cartan.rank();
        let mut prefix_pos = vec![Vec::new(); n + 1];
        for (k, &j) in prefix.iter().enumerate() {
            prefix_pos[j].push(k + 1);
        }
        let mut period_pos = vec![Vec::new(); n + 1];
        for (k, &j) in period.iter().enumerate() {
            period_pos[j].push(k + 1);
        }
        Ok(SequenceSpec {
            cartan,
            prefix,
            period,
            prefix_pos,
            period_pos,
        })
    }

    pub fn periodic(cartan: CartanData, period: Vec<usize>) -> Result<Self> {
        Self::new(cartan, Vec::new(), period)
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn prefix(&self) -> &[usize] {
        &self.prefix
    }

    pub fn period(&self) -> &[usize] {
        &self.period
    }

    /// `i_k` for `k >= 1`.
    pub fn letter(&self, k: usize) -> usize {
        assert!(k >= 1, "positions start at 1");
        let p = self.prefix.len();
        if k <= p {
            self.prefix[k - 1]
        } else {
            self.period[(k - p - 1) % self.period.len()]
        }
    }

    /// `k -> (s, j)` with `j = i_k` and `s` the occurrence count of `j` up to `k`.
    pub fn occurrence(&self, k: usize) -> (usize, usize) {
        let j = self.letter(k);
        let p = self.prefix.len();
        let s = if k <= p {
            self.prefix_pos[j].partition_point(|&q| q <= k)
        } else {
            let t = k - p - 1;
            let (cycles, r) = (t / self.period.len(), t % self.period.len());
            self.prefix_pos[j].len()
                + cycles * self.period_pos[j].len()
                + self.period_pos[j].partition_point(|&q| q <= r + 1)
        };
        (s, j)
    }

    /// `(s, j) -> k`, the position of the `s`-th occurrence of `j`.
    pub fn position(&self, s: usize, j: usize) -> usize {
        assert!(s >= 1, "occurrence counts start at 1");
        let pre = &self.prefix_pos[j];
        if s <= pre.len() {
            return pre[s - 1];
        }
        let t = s - pre.len() - 1;
        let per = &self.period_pos[j];
        self.prefix.len() + (t / per.len()) * self.period.len() + per[t % per.len()]
    }

    /// `(k^-, k^+)`, with `k^- = 0` when `k` is the first occurrence of its letter.
    pub fn k_bounds(&self, k: usize) -> (usize, usize) {
        let (s, j) = self.occurrence(k);
        let minus = if s == 1 { 0 } else { self.position(s - 1, j) };
        (minus, self.position(s + 1, j))
    }

    /// Checks whether the sequence is adapted to the Cartan matrix.
    pub fn validate(&self) -> Validation {
        let joined: Vec<usize> = self
            .prefix
            .iter()
            .chain(&self.period)
            .chain(&self.period)
            .copied()
            .collect();
        for (i, j) in self.cartan.edges() {
            let window: Vec<usize> = joined
                .iter()
                .copied()
                .filter(|&x| x == i || x == j)
                .collect();
            if window.windows(2).any(|w| w[0] == w[1]) {
                return Validation::NotAdapted {
                    edge: (i, j),
                    window,
                };
            }
        }
        let first = |x: usize| self.position(1, x);
        let orientation = Orientation {
            bits: self
                .cartan
                .edges()
                .into_iter()
                .map(|(i, j)| ((i, j), u8::from(first(i) < first(j))))
                .collect(),
        };
        Validation::Adapted(orientation)
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        if self.prefix.is_empty() {
            write!(f, "period [{}]", join(&self.period))
        } else {
            write!(
                f,
                "prefix [{}] period [{}]",
                join(&self.prefix),
                join(&self.period)
            )
        }
    }
}

/// Outcome of the adaptedness check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validation {
    Adapted(Orientation),
    /// `window` is the pair subsequence (in position order) that fails to alternate.
    NotAdapted {
        edge: (usize, usize),
        window: Vec<usize>,
    },
}

/// A sequence adapted to the Cartan matrix, normalized to the canonical
/// periodic representative of its orientation, with the shifts `P(k)` cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdaptedSequence {
    seq: SequenceSpec,
    orientation: Orientation,
    shifts: Vec<i64>,
}

impl AdaptedSequence {
    pub fn from_orientation(cartan: &CartanData, orientation: Orientation) -> Self {
        let n = cartan.rank();
        // i before j whenever p_{i,j} = 1; Kahn's algorithm with ascending tie-break
        let mut indeg = vec![0usize; n + 1];
        let mut succ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n + 1];
        for (i, j) in cartan.edges() {
            let (a, b) = if orientation.p(i, j) == 1 {
                (i, j)
            } else {
                (j, i)
            };
            succ[a].insert(b);
            indeg[b] += 1;
        }
        let mut ready: BinaryHeap<Reverse<usize>> = cartan
            .indices()
            .filter(|&i| indeg[i] == 0)
            .map(Reverse)
            .collect();
        let mut period = Vec::with_capacity(n);
        while let Some(Reverse(i)) = ready.pop() {
            period.push(i);
            for &b in &succ[i] {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    ready.push(Reverse(b));
                }
            }
        }
        debug_assert_eq!(period.len(), n, "Dynkin diagrams are trees");
        let seq = SequenceSpec::periodic(cartan.clone(), period)
            .expect("a linear extension contains every index once");
        let shifts = shift_table(cartan, &orientation);
        AdaptedSequence {
            seq,
            orientation,
            shifts,
        }
    }

    /// Validates `spec` and normalizes it to the canonical representative.
    pub fn from_spec(spec: &SequenceSpec) -> Result<Self> {
        match spec.validate() {
            Validation::Adapted(o) => Ok(Self::from_orientation(spec.cartan(), o)),
            Validation::NotAdapted { edge, .. } => Err(Error::NotAdapted(edge.0, edge.1)),
        }
    }

    pub fn cartan(&self) -> &CartanData {
        self.seq.cartan()
    }

    pub fn kind(&self) -> Kind {
        self.seq.cartan().kind()
    }

    pub fn rank(&self) -> usize {
        self.seq.cartan().rank()
    }

    pub fn sequence(&self) -> &SequenceSpec {
        &self.seq
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    /// `P(k)` for `0 <= k <= n + 1`.
    pub fn shift(&self, k: usize) -> i64 {
        self.shifts[k]
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }
}

fn shift_table(cartan: &CartanData, o: &Orientation) -> Vec<i64> {
    let n = cartan.rank();
    let mut table = vec![0i64; n + 2];
    let mut acc = 0i64;
    for k in 2..=n {
        if cartan.kind() == Kind::D && k == n {
            // the fork: P(n) branches off at n - 2
            table[k] = table[n - 2] + i64::from(o.p(n, n - 2));
        } else {
            acc += i64::from(o.p(k, k - 1));
            table[k] = acc;
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Kind;

    fn cd(s: &str) -> CartanData {
        s.parse().unwrap()
    }

    fn spec(s: &str, period: &[usize]) -> SequenceSpec {
        SequenceSpec::periodic(cd(s), period.to_vec()).unwrap()
    }

    fn orient(c: &CartanData, a: &[((usize, usize), u8)]) -> Orientation {
        Orientation::new(c, a.iter().copied()).unwrap()
    }

    #[test]
    fn a2_adapted_with_p21_zero() {
        // display (..., 2, 1, 2, 1): i_1 = 1
        let Validation::Adapted(o) = spec("A2", &[1, 2]).validate() else {
            panic!("expected adapted");
        };
        assert_eq!(o.p(2, 1), 0);
        assert_eq!(o.p(1, 2), 1);
    }

    #[test]
    fn a3_counterexample_is_not_adapted() {
        match spec("A3", &[1, 2, 3, 2]).validate() {
            Validation::NotAdapted { edge, window } => {
                assert_eq!(edge, (1, 2));
                assert!(window.windows(2).any(|w| w[0] == w[1]));
            }
            v => panic!("unexpected {v:?}"),
        }
    }

    #[test]
    fn a3_example_orientation_and_shifts() {
        let s = spec("A3", &[2, 1, 3]);
        let Validation::Adapted(o) = s.validate() else {
            panic!()
        };
        assert_eq!(o.p(2, 1), 1);
        assert_eq!(o.p(3, 2), 0);
        let a = AdaptedSequence::from_spec(&s).unwrap();
        assert_eq!(a.shift(2), 1);
        assert_eq!(a.shift(3), 1);
        assert_eq!((a.shift(0), a.shift(1), a.shift(4)), (0, 0, 0));
    }

    #[test]
    fn spec_errors_are_distinct() {
        assert_eq!(
            SequenceSpec::periodic(cd("A3"), vec![1, 2]).unwrap_err(),
            Error::MissingIndex(3)
        );
        assert!(matches!(
            SequenceSpec::periodic(cd("A2"), vec![1, 2, 2, 1]).unwrap_err(),
            Error::AdjacentRepeat { .. }
        ));
        // repeat across the seam period|period
        assert!(matches!(
            SequenceSpec::periodic(cd("A2"), vec![1, 2, 1]).unwrap_err(),
            Error::AdjacentRepeat { .. }
        ));
        assert!(matches!(
            SequenceSpec::new(cd("A2"), vec![2], vec![2, 1]).unwrap_err(),
            Error::AdjacentRepeat { .. }
        ));
        assert_eq!(
            SequenceSpec::periodic(cd("A2"), vec![]).unwrap_err(),
            Error::EmptyPeriod
        );
    }

    #[test]
    fn from_orientation_examples() {
        let a2 = cd("A2");
        let s = AdaptedSequence::from_orientation(&a2, orient(&a2, &[((2, 1), 0)]));
        assert_eq!(s.sequence().period(), &[1, 2]);

        let a3 = cd("A3");
        let o = orient(&a3, &[((2, 1), 1), ((3, 2), 0)]);
        let s = AdaptedSequence::from_orientation(&a3, o.clone());
        assert_eq!(s.sequence().period(), &[2, 1, 3]);
        assert_eq!(s.sequence().validate(), Validation::Adapted(o));

        let d4 = cd("D4");
        let o = orient(&d4, &[((2, 1), 0), ((3, 2), 0), ((4, 2), 0)]);
        let s = AdaptedSequence::from_orientation(&d4, o.clone());
        assert_eq!(s.sequence().period()[0], 1);
        assert_eq!(s.sequence().validate(), Validation::Adapted(o));
    }

    #[test]
    fn position_examples() {
        let s = spec("A2", &[1, 2]);
        assert_eq!(s.position(1, 1), 1);
        assert_eq!(s.position(1, 2), 2);
        assert_eq!(s.position(2, 1), 3);
        assert_eq!(spec("A3", &[2, 1, 3]).position(1, 3), 3);
    }

    #[test]
    fn position_occurrence_inverse_with_prefix() {
        let s = SequenceSpec::new(cd("A3"), vec![3, 1], vec![2, 1, 2, 3]).unwrap();
        for k in 1..200 {
            let (sj, j) = s.occurrence(k);
            assert_eq!(s.position(sj, j), k);
        }
        for j in 1..=3 {
            for occ in 1..=20 {
                assert_eq!(s.occurrence(s.position(occ, j)), (occ, j));
            }
        }
    }

    #[test]
    fn k_bounds_examples() {
        let s = spec("A2", &[1, 2]);
        assert_eq!(s.k_bounds(1), (0, 3));
        assert_eq!(s.k_bounds(2), (0, 4));
        assert_eq!(s.k_bounds(3), (1, 5));
    }

    #[test]
    fn nonempty_prefix_normalizes_to_canonical() {
        // (..., 2, 1, 2, 1, 2) reads i_1 = 2 and has p_{2,1} = 1
        let s = SequenceSpec::new(cd("A2"), vec![2], vec![1, 2]).unwrap();
        let a = AdaptedSequence::from_spec(&s).unwrap();
        assert!(a.sequence().prefix().is_empty());
        assert_eq!(a.orientation().p(2, 1), 1);
        assert_eq!(a.sequence().period(), &[2, 1]);
    }

    fn configs(max_rank: usize) -> Vec<AdaptedSequence> {
        let mut out = Vec::new();
        for kind in [Kind::A, Kind::B, Kind::C, Kind::D] {
            for n in 1..=max_rank {
                let Ok(c) = CartanData::new(kind, n) else {
                    continue;
                };
                for o in Orientation::all(&c) {
                    out.push(AdaptedSequence::from_orientation(&c, o));
                }
            }
        }
        out
    }

    #[test]
    fn neighbors_interleave_by_orientation() {
        for a in configs(5) {
            let seq = a.sequence();
            let c = a.cartan();
            for j in c.indices() {
                for s in 1..=20 {
                    let (lo, hi) = (seq.position(s, j), seq.position(s + 1, j));
                    for i in c.neighbors(j) {
                        let between: Vec<usize> = (lo + 1..hi)
                            .filter(|&k| seq.letter(k) == i)
                            .map(|k| seq.occurrence(k).0)
                            .collect();
                        assert_eq!(between, vec![s + usize::from(a.orientation().p(i, j))]);
                    }
                }
            }
        }
    }

    #[test]
    fn shift_inequalities() {
        for a in configs(8) {
            let n = a.rank();
            let d = a.kind() == Kind::D;
            for k in 1..=n {
                for l in 1..=k {
                    if d && k == n && l == n - 1 {
                        continue;
                    }
                    assert!(a.shift(k) >= a.shift(l));
                    assert!((k - l) as i64 + a.shift(l) >= a.shift(k));
                }
            }
        }
    }

    #[test]
    fn orientation_round_trip() {
        for a in configs(6) {
            assert_eq!(
                a.sequence().validate(),
                Validation::Adapted(a.orientation().clone())
            );
        }
    }

    #[test]
    fn orientation_rejects_non_edges() {
        let a3 = cd("A3");
        assert_eq!(
            Orientation::new(&a3, [((3, 1), 0)]).unwrap_err(),
            Error::NotAnEdge(3, 1)
        );
        assert!(Orientation::new(&a3, [((2, 1), 0)]).is_err());
    }
}
