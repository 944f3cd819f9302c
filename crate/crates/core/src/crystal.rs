//! The crystal structure on nonnegative points of `Z^infinity` and the
//! component of the origin, which realizes `B(infinity)`.

use crate::cartan::CartanData;
use crate::linform::Var;
use crate::sequence::SequenceSpec;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

/// A finitely supported point with values in double-index coordinates.
///
/// Entries are sorted by variable and zero entries are omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CrystalPoint {
    entries: Vec<(Var, i64)>,
}

impl CrystalPoint {
    pub fn origin() -> Self {
        CrystalPoint::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (Var, i64)>) -> Self {
        let mut map: std::collections::BTreeMap<Var, i64> = Default::default();
        for (v, x) in entries {
            *map.entry(v).or_insert(0) += x;
        }
        CrystalPoint {
            entries: map.into_iter().filter(|&(_, x)| x != 0).collect(),
        }
    }

    pub fn entries(&self) -> &[(Var, i64)] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        let v = Var::new(row, col);
        self.entries
            .binary_search_by_key(&v, |e| e.0)
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    pub fn max_row(&self) -> usize {
        self.entries.iter().map(|e| e.0.row).max().unwrap_or(0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|e| e.1 >= 0)
    }

    /// `c_i = sum_s x[s,i]`: the weight is `-sum_i c_i alpha_i`.
    pub fn root_weight(&self, rank: usize) -> RootWeight {
        let mut c = vec![0i64; rank];
        for &(v, x) in &self.entries {
            c[v.col - 1] += x;
        }
        RootWeight(c)
    }

    fn to_dense(&self, seq: &SequenceSpec) -> Vec<i64> {
        let mut out = Vec::new();
        for &(v, x) in &self.entries {
            let k = seq.position(v.row, v.col);
            if out.len() < k {
                out.resize(k, 0);
            }
            out[k - 1] = x;
        }
        out
    }

    fn from_dense(seq: &SequenceSpec, dense: &[i64]) -> Self {
        let mut entries: Vec<(Var, i64)> = dense
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x != 0)
            .map(|(k, &x)| {
                let (s, j) = seq.occurrence(k + 1);
                (Var::new(s, j), x)
            })
            .collect();
        entries.sort();
        CrystalPoint { entries }
    }
}

impl fmt::Display for CrystalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(v, x)| format!("{v}={x}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `mu = (c_1, ..., c_n)` in simple-root coordinates, standing for `-sum c_i alpha_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootWeight(pub Vec<i64>);

impl RootWeight {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for RootWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

// sigma_k for every k up to one period past the support and prefix.
fn sigmas(seq: &SequenceSpec, dense: &[i64]) -> Vec<i64> {
    let cartan = seq.cartan();
    let horizon = dense.len().max(seq.prefix().len()) + seq.period().len();
    let mut out = vec![0i64; horizon];
    for k in (1..=horizon).rev() {
        let ik = seq.letter(k);
        let mut s = dense.get(k - 1).copied().unwrap_or(0);
        for l in k + 1..=dense.len() {
            let x = dense[l - 1];
            if x != 0 {
                s += cartan.a(ik, seq.letter(l)) * x;
            }
        }
        out[k - 1] = s;
    }
    out
}

fn positions_of(seq: &SequenceSpec, len: usize, i: usize) -> impl Iterator<Item = usize> + '_ {
    (1..=len).filter(move |&k| seq.letter(k) == i)
}

/// `epsilon_i`: the maximum of `sigma_k` over positions `k` with `i_k = i`.
pub fn epsilon(seq: &SequenceSpec, point: &CrystalPoint, i: usize) -> i64 {
    let dense = point.to_dense(seq);
    let sig = sigmas(seq, &dense);
    positions_of(seq, sig.len(), i)
        .map(|k| sig[k - 1])
        .max()
        .expect("every index occurs within one period")
}

/// `f_i`: increments the coordinate at the smallest position attaining `epsilon_i`.
pub fn f_tilde(seq: &SequenceSpec, point: &CrystalPoint, i: usize) -> CrystalPoint {
    let mut dense = point.to_dense(seq);
    let sig = sigmas(seq, &dense);
    let eps = positions_of(seq, sig.len(), i)
        .map(|k| sig[k - 1])
        .max()
        .unwrap();
    let k = positions_of(seq, sig.len(), i)
        .find(|&k| sig[k - 1] == eps)
        .unwrap();
    if dense.len() < k {
        dense.resize(k, 0);
    }
    dense[k - 1] += 1;
    CrystalPoint::from_dense(seq, &dense)
}

/// `e_i`: decrements the coordinate at the largest position attaining
/// `epsilon_i`, or `None` when `epsilon_i = 0`.
pub fn e_tilde(seq: &SequenceSpec, point: &CrystalPoint, i: usize) -> Option<CrystalPoint> {
    let mut dense = point.to_dense(seq);
    let sig = sigmas(seq, &dense);
    let eps = positions_of(seq, sig.len(), i)
        .map(|k| sig[k - 1])
        .max()
        .unwrap();
    if eps <= 0 {
        return None;
    }
    let k = positions_of(seq, sig.len(), i)
        .filter(|&k| sig[k - 1] == eps)
        .last()
        .unwrap();
    dense[k - 1] -= 1;
    Some(CrystalPoint::from_dense(seq, &dense))
}

/// `phi_i = epsilon_i + <h_i, wt>`.
pub fn phi(seq: &SequenceSpec, point: &CrystalPoint, i: usize) -> i64 {
    epsilon(seq, point, i) + pairing(seq.cartan(), &point.root_weight(seq.cartan().rank()), i)
}

/// `<h_i, -sum_j c_j alpha_j>`.
fn pairing(cartan: &CartanData, mu: &RootWeight, i: usize) -> i64 {
    -cartan
        .indices()
        .map(|j| cartan.a(i, j) * mu.0[j - 1])
        .sum::<i64>()
}

/// The points reachable from the origin by at most `depth` operators `f_i`,
/// with the graph edges among them.
#[derive(Debug, Clone, Serialize)]
pub struct CrystalGraph {
    /// In BFS order; `points[0]` is the origin.
    pub points: Vec<CrystalPoint>,
    pub depth_of: Vec<usize>,
    /// `(from, to, i)` with `points[to] = f_i(points[from])`.
    pub edges: Vec<(usize, usize, usize)>,
}

impl CrystalGraph {
    /// Number of points per weight.
    pub fn weight_counts(&self, rank: usize) -> HashMap<RootWeight, usize> {
        let mut out = HashMap::new();
        for p in &self.points {
            *out.entry(p.root_weight(rank)).or_insert(0) += 1;
        }
        out
    }

    /// Graphviz rendering with edges labelled by the operator index.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph binfty {\n");
        for (n, p) in self.points.iter().enumerate() {
            out.push_str(&format!("  p{n} [label=\"{p}\"];\n"));
        }
        for &(a, b, i) in &self.edges {
            out.push_str(&format!("  p{a} -> p{b} [label=\"{i}\"];\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Breadth-first generation from the origin. The parallel flag only changes
/// how each level is computed; the output is identical.
pub fn generate_binfty(seq: &SequenceSpec, depth: usize, parallel: bool) -> CrystalGraph {
    let n = seq.cartan().rank();
    let mut points = vec![CrystalPoint::origin()];
    let mut depth_of = vec![0];
    let mut index: HashMap<CrystalPoint, usize> = HashMap::from([(CrystalPoint::origin(), 0)]);
    let mut edges = Vec::new();
    let mut frontier = vec![0usize];
    for d in 1..=depth {
        let step = |&at: &usize| -> Vec<CrystalPoint> {
            (1..=n).map(|i| f_tilde(seq, &points[at], i)).collect()
        };
        let images: Vec<Vec<CrystalPoint>> = if parallel {
            frontier.par_iter().map(step).collect()
        } else {
            frontier.iter().map(step).collect()
        };
        let mut next = Vec::new();
        for (&from, imgs) in frontier.iter().zip(images) {
            for (i, q) in imgs.into_iter().enumerate() {
                let to = match index.get(&q) {
                    Some(&t) => t,
                    None => {
                        let t = points.len();
                        index.insert(q.clone(), t);
                        points.push(q);
                        depth_of.push(d);
                        next.push(t);
                        t
                    }
                };
                edges.push((from, to, i + 1));
            }
        }
        frontier = next;
    }
    CrystalGraph {
        points,
        depth_of,
        edges,
    }
}

/// Checks the crystal axioms on every point of `graph`; returns descriptions
/// of the failures.
pub fn check_axioms(seq: &SequenceSpec, graph: &CrystalGraph) -> Vec<String> {
    let cartan = seq.cartan();
    let n = cartan.rank();
    let mut bad = Vec::new();
    for p in &graph.points {
        if !p.is_nonnegative() {
            bad.push(format!("{p} has a negative entry"));
        }
        let mu = p.root_weight(n);
        for i in 1..=n {
            let eps = epsilon(seq, p, i);
            if eps < 0 {
                bad.push(format!("epsilon_{i}({p}) = {eps} < 0"));
            }
            let f = f_tilde(seq, p, i);
            let mut mu_f = mu.clone();
            mu_f.0[i - 1] += 1;
            if f.root_weight(n) != mu_f {
                bad.push(format!("wt(f_{i} {p}) != wt - alpha_{i}"));
            }
            if epsilon(seq, &f, i) != eps + 1 {
                bad.push(format!("epsilon_{i}(f_{i} {p}) != epsilon + 1"));
            }
            if e_tilde(seq, &f, i).as_ref() != Some(p) {
                bad.push(format!("e_{i} f_{i} {p} != {p}"));
            }
            if phi(seq, &f, i) != phi(seq, p, i) - 1 {
                bad.push(format!("phi_{i}(f_{i} {p}) != phi - 1"));
            }
            match e_tilde(seq, p, i) {
                None if eps > 0 => bad.push(format!("e_{i} {p} undefined with epsilon > 0")),
                Some(e) => {
                    if epsilon(seq, &e, i) != eps - 1 {
                        bad.push(format!("epsilon_{i}(e_{i} {p}) != epsilon - 1"));
                    }
                    if f_tilde(seq, &e, i) != *p {
                        bad.push(format!("f_{i} e_{i} {p} != {p}"));
                    }
                }
                None => {}
            }
        }
    }
    bad
}
