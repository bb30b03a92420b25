//! Total labelings, subtractive weights, classification, duality and the
//! magic-constant bounds.
//!
//! The arc weight of `xy` is `λ(xy) + λ(y) − λ(x)`. The vertex weight of
//! `x` is `λ(x)` plus the labels of arcs entering `x` minus the labels of
//! arcs leaving `x`. Weights are signed: duals routinely push them to zero
//! or below.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Digraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelingError {
    #[error("expected {expected} vertex labels, got {got}")]
    VertexCount { expected: usize, got: usize },
    #[error("expected {expected} arc labels, got {got}")]
    ArcCount { expected: usize, got: usize },
    #[error("labels not a bijection onto 1..{n}")]
    NotBijection { n: usize },
    #[error("vertex index {index} out of range (|V| = {len})")]
    VertexIndex { index: usize, len: usize },
    #[error("arc index {index} out of range (|A| = {len})")]
    ArcIndex { index: usize, len: usize },
}

/// A labeling of vertices and arcs, stored as two index-aligned vectors.
///
/// Construction does not check anything; [`TotalLabeling::validate`] checks
/// the bijection against a graph, and every graph-aware operation calls it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TotalLabeling {
    pub vertex_labels: Vec<u32>,
    pub arc_labels: Vec<u32>,
}

impl TotalLabeling {
    pub fn new(vertex_labels: Vec<u32>, arc_labels: Vec<u32>) -> Self {
        TotalLabeling {
            vertex_labels,
            arc_labels,
        }
    }

    pub fn len(&self) -> usize {
        self.vertex_labels.len() + self.arc_labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Checks lengths against `g` and that the labels are exactly `1..=N`.
    pub fn validate(&self, g: &Digraph) -> Result<(), LabelingError> {
        if self.vertex_labels.len() != g.vertex_count() {
            return Err(LabelingError::VertexCount {
                expected: g.vertex_count(),
                got: self.vertex_labels.len(),
            });
        }
        if self.arc_labels.len() != g.arc_count() {
            return Err(LabelingError::ArcCount {
                expected: g.arc_count(),
                got: self.arc_labels.len(),
            });
        }
        let n = self.len();
        let mut seen = vec![false; n + 1];
        for &l in self.vertex_labels.iter().chain(&self.arc_labels) {
            let l = l as usize;
            if l == 0 || l > n || seen[l] {
                return Err(LabelingError::NotBijection { n });
            }
            seen[l] = true;
        }
        Ok(())
    }

    /// Vertex labels are exactly `1..=|V|`.
    pub fn is_strong(&self) -> bool {
        let v = self.vertex_labels.len() as u32;
        self.vertex_labels.iter().all(|&l| l >= 1 && l <= v)
    }

    /// Arc labels are exactly `1..=|A|`.
    pub fn is_strong_star(&self) -> bool {
        let a = self.arc_labels.len() as u32;
        self.arc_labels.iter().all(|&l| l >= 1 && l <= a)
    }
}

/// Arc and vertex weights of a labeling, in graph order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightProfile {
    pub arc_weights: Vec<i64>,
    pub vertex_weights: Vec<i64>,
}

pub fn arc_weight(g: &Digraph, l: &TotalLabeling, arc: usize) -> Result<i64, LabelingError> {
    l.validate(g)?;
    if arc >= g.arc_count() {
        return Err(LabelingError::ArcIndex {
            index: arc,
            len: g.arc_count(),
        });
    }
    Ok(arc_weight_unchecked(g, l, arc))
}

pub fn vertex_weight(g: &Digraph, l: &TotalLabeling, vertex: usize) -> Result<i64, LabelingError> {
    l.validate(g)?;
    if vertex >= g.vertex_count() {
        return Err(LabelingError::VertexIndex {
            index: vertex,
            len: g.vertex_count(),
        });
    }
    let mut w = i64::from(l.vertex_labels[vertex]);
    for (i, &(t, h)) in g.arcs().iter().enumerate() {
        if h == vertex {
            w += i64::from(l.arc_labels[i]);
        }
        if t == vertex {
            w -= i64::from(l.arc_labels[i]);
        }
    }
    Ok(w)
}

fn arc_weight_unchecked(g: &Digraph, l: &TotalLabeling, arc: usize) -> i64 {
    let (t, h) = g.arcs()[arc];
    i64::from(l.arc_labels[arc]) + i64::from(l.vertex_labels[h]) - i64::from(l.vertex_labels[t])
}

/// Both weight vectors in one pass.
pub fn weight_profile(g: &Digraph, l: &TotalLabeling) -> Result<WeightProfile, LabelingError> {
    l.validate(g)?;
    Ok(weight_profile_unchecked(g, l))
}

pub(crate) fn weight_profile_unchecked(g: &Digraph, l: &TotalLabeling) -> WeightProfile {
    let mut vertex_weights: Vec<i64> = l.vertex_labels.iter().map(|&x| i64::from(x)).collect();
    let mut arc_weights = Vec::with_capacity(g.arc_count());
    for (i, &(t, h)) in g.arcs().iter().enumerate() {
        let a = i64::from(l.arc_labels[i]);
        vertex_weights[h] += a;
        vertex_weights[t] -= a;
        arc_weights.push(arc_weight_unchecked(g, l, i));
    }
    WeightProfile {
        arc_weights,
        vertex_weights,
    }
}

/// Verdict for one side (arcs or vertices) of a labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    /// Every weight equals `mu`.
    Magic { mu: i64 },
    /// Weights are distinct and, sorted, read `a, a+d, ..., a+(k−1)d`, `d ≥ 1`.
    Arithmetic { a: i64, d: i64 },
    /// Weights are distinct but do not form an arithmetic progression.
    Antimagic,
    /// Some weight repeats while not all are equal, or there are no weights.
    None,
}

impl Verdict {
    /// Classifies a weight vector. A single weight is `Magic`; an empty
    /// vector is `None`.
    pub fn of(weights: &[i64]) -> Verdict {
        let Some(&first) = weights.first() else {
            return Verdict::None;
        };
        if weights.iter().all(|&w| w == first) {
            return Verdict::Magic { mu: first };
        }
        let mut sorted = weights.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Verdict::None;
        }
        let d = sorted[1] - sorted[0];
        if sorted.windows(2).all(|w| w[1] - w[0] == d) {
            Verdict::Arithmetic { a: sorted[0], d }
        } else {
            Verdict::Antimagic
        }
    }

    /// All weights pairwise distinct (antimagic in the broad sense, which
    /// includes arithmetic progressions and the one-weight case).
    pub fn is_distinct(self, len: usize) -> bool {
        match self {
            Verdict::Arithmetic { .. } | Verdict::Antimagic => true,
            Verdict::Magic { .. } => len == 1,
            Verdict::None => false,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Magic { mu } => write!(f, "Magic(mu={mu})"),
            Verdict::Arithmetic { a, d } => write!(f, "Arithmetic(a={a}, d={d})"),
            Verdict::Antimagic => f.write_str("Antimagic"),
            Verdict::None => f.write_str("None"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub arc: Verdict,
    pub vertex: Verdict,
    pub strong: bool,
    pub strong_star: bool,
}

pub fn classify(g: &Digraph, l: &TotalLabeling) -> Result<Classification, LabelingError> {
    let profile = weight_profile(g, l)?;
    Ok(classify_profile(&profile, l))
}

pub(crate) fn classify_profile(p: &WeightProfile, l: &TotalLabeling) -> Classification {
    Classification {
        arc: Verdict::of(&p.arc_weights),
        vertex: Verdict::of(&p.vertex_weights),
        strong: l.is_strong(),
        strong_star: l.is_strong_star(),
    }
}

/// Replaces every label `x` by `N + 1 − x`.
pub fn dual(g: &Digraph, l: &TotalLabeling) -> Result<TotalLabeling, LabelingError> {
    l.validate(g)?;
    let top = l.len() as u32 + 1;
    Ok(TotalLabeling {
        vertex_labels: l.vertex_labels.iter().map(|&x| top - x).collect(),
        arc_labels: l.arc_labels.iter().map(|&x| top - x).collect(),
    })
}

/// Length of the longest directed cycle, 0 when acyclic.
///
/// Exhaustive: enumerates simple cycles by their minimum vertex with a DFS,
/// so the cost is exponential in the worst case. Intended for graphs of a
/// few dozen vertices with sparse cycle structure, like the families here.
pub fn longest_circuit(g: &Digraph) -> usize {
    let succ = g.successors();
    let n = g.vertex_count();
    let mut best = 0;
    let mut on_path = vec![false; n];
    for start in 0..n {
        on_path[start] = true;
        longest_from(start, start, 1, &succ, &mut on_path, &mut best);
        on_path[start] = false;
    }
    best
}

fn longest_from(
    start: usize,
    at: usize,
    len: usize,
    succ: &[Vec<usize>],
    on_path: &mut [bool],
    best: &mut usize,
) {
    for &next in &succ[at] {
        if next == start {
            *best = (*best).max(len);
        } else if next > start && !on_path[next] {
            on_path[next] = true;
            longest_from(start, next, len + 1, succ, on_path, best);
            on_path[next] = false;
        }
    }
}

/// An exact multiple of one half.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Half(pub i64);

impl Half {
    /// Smallest integer `≥ self`.
    pub fn ceil(self) -> i64 {
        self.0.div_euclid(2) + i64::from(self.0.rem_euclid(2) != 0)
    }

    /// Largest integer `≤ self`.
    pub fn floor(self) -> i64 {
        self.0.div_euclid(2)
    }

    pub fn contains_le(self, x: i64) -> bool {
        self.0 <= 2 * x
    }

    pub fn contains_ge(self, x: i64) -> bool {
        self.0 >= 2 * x
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Range that an arc-magic constant must fall in, given the longest circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuBound {
    pub s: usize,
    pub lower: Half,
    pub upper: Half,
}

impl MuBound {
    pub fn contains(&self, mu: i64) -> bool {
        self.lower.contains_le(mu) && self.upper.contains_ge(mu)
    }

    /// Integers inside the bound.
    pub fn integers(&self) -> std::ops::RangeInclusive<i64> {
        self.lower.ceil()..=self.upper.floor()
    }
}

pub fn mu_bounds(g: &Digraph) -> MuBound {
    let s = longest_circuit(g) as i64;
    let n = g.order_plus_size() as i64;
    MuBound {
        s: s as usize,
        lower: Half(s + 1),
        upper: Half(2 * n - s + 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, Family, Orientation};

    fn cycle3() -> (Digraph, TotalLabeling) {
        (
            build_family(Family::Cycle, 3, None, None).unwrap(),
            TotalLabeling::new(vec![1, 2, 3], vec![5, 4, 6]),
        )
    }

    #[test]
    fn cycle_weights() {
        let (g, l) = cycle3();
        assert_eq!(arc_weight(&g, &l, 0), Ok(6));
        let p = weight_profile(&g, &l).unwrap();
        assert_eq!(p.arc_weights, [6, 5, 4]);
        assert_eq!(p.vertex_weights, [2, 3, 1]);
        let c = classify(&g, &l).unwrap();
        assert_eq!(c.arc, Verdict::Arithmetic { a: 4, d: 1 });
        assert_eq!(c.vertex, Verdict::Arithmetic { a: 1, d: 1 });
        assert!(c.strong);
        assert!(!c.strong_star);
    }

    #[test]
    fn weights_can_be_zero() {
        let g = Digraph::new(2, vec![(0, 1)]).unwrap();
        // λ(tail) = λ(head) + λ(arc)
        let l = TotalLabeling::new(vec![3, 1], vec![2]);
        assert_eq!(arc_weight(&g, &l, 0), Ok(0));
    }

    #[test]
    fn star_out_saml_weight() {
        let g = build_family(Family::Star, 2, None, Some(Orientation::Out)).unwrap();
        let l = TotalLabeling::new(vec![1, 2, 3], vec![5, 4]);
        assert_eq!(arc_weight(&g, &l, 0), Ok(6));
        assert_eq!(weight_profile(&g, &l).unwrap().arc_weights, [6, 6]);
    }

    #[test]
    fn vertex_weights_of_small_graphs() {
        let g = Digraph::new(1, vec![]).unwrap();
        assert_eq!(
            vertex_weight(&g, &TotalLabeling::new(vec![1], vec![]), 0),
            Ok(1)
        );

        let star = build_family(Family::Star, 2, None, Some(Orientation::In)).unwrap();
        let l = TotalLabeling::new(vec![1, 4, 5], vec![3, 2]);
        assert_eq!(vertex_weight(&star, &l, 0), Ok(6));

        let path = build_family(Family::Path, 3, None, None).unwrap();
        let l = TotalLabeling::new(vec![5, 4, 3], vec![1, 2]);
        assert_eq!(vertex_weight(&path, &l, 1), Ok(3));
    }

    #[test]
    fn index_and_bijection_errors() {
        let (g, l) = cycle3();
        assert_eq!(
            arc_weight(&g, &l, 3),
            Err(LabelingError::ArcIndex { index: 3, len: 3 })
        );
        assert_eq!(
            vertex_weight(&g, &l, 7),
            Err(LabelingError::VertexIndex { index: 7, len: 3 })
        );
        let bad = TotalLabeling::new(vec![1, 2, 3], vec![5, 4, 4]);
        let err = classify(&g, &bad).unwrap_err();
        assert_eq!(err.to_string(), "labels not a bijection onto 1..6");
        let short = TotalLabeling::new(vec![1, 2], vec![5, 4, 3]);
        assert!(matches!(
            weight_profile(&g, &short),
            Err(LabelingError::VertexCount { .. })
        ));
        let zero = TotalLabeling::new(vec![0, 1, 2], vec![3, 4, 5]);
        assert!(zero.validate(&g).is_err());
    }

    #[test]
    fn verdict_shapes() {
        assert_eq!(Verdict::of(&[]), Verdict::None);
        assert_eq!(Verdict::of(&[7]), Verdict::Magic { mu: 7 });
        assert_eq!(Verdict::of(&[3, 3, 3]), Verdict::Magic { mu: 3 });
        assert_eq!(Verdict::of(&[3, 3, 4]), Verdict::None);
        assert_eq!(Verdict::of(&[5, 1, 3]), Verdict::Arithmetic { a: 1, d: 2 });
        assert_eq!(Verdict::of(&[-2, 0]), Verdict::Arithmetic { a: -2, d: 2 });
        assert_eq!(Verdict::of(&[1, 2, 4]), Verdict::Antimagic);
        assert!(Verdict::of(&[7]).is_distinct(1));
        assert!(!Verdict::of(&[7, 7]).is_distinct(2));
    }

    #[test]
    fn dual_of_star_saml() {
        let g = build_family(Family::Star, 2, None, Some(Orientation::Out)).unwrap();
        let l = TotalLabeling::new(vec![1, 2, 3], vec![5, 4]);
        let d = dual(&g, &l).unwrap();
        assert_eq!(d, TotalLabeling::new(vec![5, 4, 3], vec![1, 2]));
        assert_eq!(classify(&g, &d).unwrap().arc, Verdict::Magic { mu: 0 });
        assert_eq!(dual(&g, &d).unwrap(), l);
    }

    #[test]
    fn dual_reverses_identity_order() {
        let (g, _) = cycle3();
        let l = TotalLabeling::new(vec![1, 2, 3], vec![4, 5, 6]);
        assert_eq!(
            dual(&g, &l).unwrap(),
            TotalLabeling::new(vec![6, 5, 4], vec![3, 2, 1])
        );
    }

    #[test]
    fn circuits() {
        let p = build_family(Family::Path, 5, None, None).unwrap();
        assert_eq!(longest_circuit(&p), 0);
        for n in 3..9 {
            let c = build_family(Family::Cycle, n, None, None).unwrap();
            assert_eq!(longest_circuit(&c), n);
        }
        let t = build_family(Family::Tadpole, 4, Some(3), None).unwrap();
        assert_eq!(longest_circuit(&t), 4);
        // rim is the longest; spokes only enter the center
        let w = build_family(Family::Wheel, 5, None, None).unwrap();
        assert_eq!(longest_circuit(&w), 5);
        let two_cycle = Digraph::new(2, vec![(0, 1), (1, 0)]).unwrap();
        assert_eq!(longest_circuit(&two_cycle), 2);
    }

    #[test]
    fn bounds() {
        let c3 = build_family(Family::Cycle, 3, None, None).unwrap();
        let b = mu_bounds(&c3);
        assert_eq!((b.s, b.lower, b.upper), (3, Half(4), Half(10)));
        assert_eq!(b.integers(), 2..=5);
        for n in 3..12 {
            let c = build_family(Family::Cycle, n, None, None).unwrap();
            let b = mu_bounds(&c);
            assert_eq!(b.lower, Half(n as i64 + 1));
            assert_eq!(b.upper, Half(3 * n as i64 + 1));
        }
        let p = build_family(Family::Path, 4, None, None).unwrap();
        let b = mu_bounds(&p);
        assert_eq!(b.lower.to_string(), "1/2");
        assert_eq!(b.lower.ceil(), 1);
        assert_eq!(Half(-3).ceil(), -1);
        assert_eq!(Half(-3).floor(), -2);
    }
}
