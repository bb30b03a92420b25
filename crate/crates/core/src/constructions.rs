//! Explicit labelings for each family, plus the graceful-tree conversion.
//!
//! Every constructor returns the family digraph (see [`crate::graph`] for
//! the index layout) together with one labeling. Formulas are written with
//! the usual 1-based indices and translated to storage order at the end.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{build_family, Digraph, Family, GraphError, Orientation};
use crate::labeling::TotalLabeling;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("no {kind} construction for {family} (valid: {valid})")]
    UnsupportedKind {
        family: Family,
        kind: LabelingKind,
        valid: String,
    },
    #[error("unknown labeling kind '{0}'")]
    UnknownKind(String),
    #[error("input is not a tree: {0}")]
    NotATree(String),
    #[error("vertex labels are not a bijection onto 1..{0}")]
    LabelsNotBijective(usize),
    #[error("labeling is not graceful: edge difference {0} repeats")]
    NotGraceful(usize),
}

/// The labeling classes a construction can target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LabelingKind {
    /// Arc-magic.
    #[serde(rename = "saml")]
    Saml,
    /// Arc weights in arithmetic progression.
    #[serde(rename = "sa-al")]
    SaAl,
    /// Vertex weights in arithmetic progression.
    #[serde(rename = "sv-al")]
    SvAl,
    /// Arc weights distinct.
    #[serde(rename = "saal")]
    Saal,
    /// Vertex weights distinct.
    #[serde(rename = "sval")]
    Sval,
    /// Arc and vertex weights both in arithmetic progression.
    #[serde(rename = "sa-sv-al")]
    SaSvAl,
}

impl LabelingKind {
    pub const ALL: [LabelingKind; 6] = [
        LabelingKind::Saml,
        LabelingKind::SaAl,
        LabelingKind::SvAl,
        LabelingKind::Saal,
        LabelingKind::Sval,
        LabelingKind::SaSvAl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LabelingKind::Saml => "saml",
            LabelingKind::SaAl => "sa-al",
            LabelingKind::SvAl => "sv-al",
            LabelingKind::Saal => "saal",
            LabelingKind::Sval => "sval",
            LabelingKind::SaSvAl => "sa-sv-al",
        }
    }

    /// Kinds with a construction for `family`.
    pub fn available_for(family: Family) -> &'static [LabelingKind] {
        use LabelingKind::*;
        match family {
            Family::Path => &[Saml, SaAl, SvAl],
            Family::Cycle => &[SaSvAl],
            Family::Star => &[Saml, SaAl, Sval],
            Family::Wheel => &[Sval],
            Family::Tadpole => &[Saal, SvAl],
            Family::Friendship => &[SaAl],
            Family::Butterfly => &[SaAl, Sval],
        }
    }

    /// Orientation the construction for `family` uses.
    pub fn orientation(self, family: Family) -> Orientation {
        match (family, self) {
            (Family::Path, LabelingKind::Saml) => Orientation::Alternating,
            (Family::Star, LabelingKind::Saml) => Orientation::Out,
            (Family::Star, _) => Orientation::In,
            _ => family.default_orientation(),
        }
    }
}

impl fmt::Display for LabelingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LabelingKind {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LabelingKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| ConstructionError::UnknownKind(s.to_string()))
    }
}

fn unsupported(family: Family, kind: LabelingKind) -> ConstructionError {
    let valid = LabelingKind::available_for(family)
        .iter()
        .map(|k| k.name())
        .collect::<Vec<_>>()
        .join(", ");
    ConstructionError::UnsupportedKind {
        family,
        kind,
        valid,
    }
}

/// Dispatches to the family constructor.
pub fn construct(
    family: Family,
    n: usize,
    t: Option<usize>,
    kind: LabelingKind,
) -> Result<(Digraph, TotalLabeling), ConstructionError> {
    if !LabelingKind::available_for(family).contains(&kind) {
        return Err(unsupported(family, kind));
    }
    match family {
        Family::Path => construct_path(n, kind),
        Family::Cycle => construct_cycle(n),
        Family::Star => construct_star(n, kind),
        Family::Wheel => construct_wheel(n),
        Family::Tadpole => match t {
            Some(t) => construct_tadpole(n, t, kind),
            None => Err(GraphError::MissingTail.into()),
        },
        Family::Friendship => construct_friendship(n),
        Family::Butterfly => construct_butterfly(n, kind),
    }
}

fn graph(
    family: Family,
    n: usize,
    t: Option<usize>,
    kind: LabelingKind,
) -> Result<Digraph, ConstructionError> {
    Ok(build_family(family, n, t, Some(kind.orientation(family)))?)
}

fn label(x: usize) -> u32 {
    u32::try_from(x).expect("label fits in u32")
}

/// Paths: arc-magic with constant `n` on the alternating orientation,
/// strong arc-arithmetic `(n+2, 1)` and strong* vertex-arithmetic `(n, 1)`
/// on the forward orientation.
///
/// The arc-arithmetic labeling uses `λ(a_i) = 2n − i`; the `2n + 1 − i`
/// variant would need label `2n` on a graph with only `2n − 1` labels.
pub fn construct_path(
    n: usize,
    kind: LabelingKind,
) -> Result<(Digraph, TotalLabeling), ConstructionError> {
    if !LabelingKind::available_for(Family::Path).contains(&kind) {
        return Err(unsupported(Family::Path, kind));
    }
    let g = graph(Family::Path, n, None, kind)?;
    let (vertex, arc): (Vec<usize>, Vec<usize>) = match kind {
        LabelingKind::Saml => (
            (1..=n)
                .map(|i| {
                    if i % 2 == 1 {
                        i.div_ceil(2)
                    } else {
                        n + 1 - i / 2
                    }
                })
                .collect(),
            (1..n).map(|i| 2 * n - i).collect(),
        ),
        LabelingKind::SaAl => ((1..=n).collect(), (1..n).map(|i| 2 * n - i).collect()),
        _ => ((1..=n).map(|i| 2 * n - i).collect(), (1..n).collect()),
    };
    Ok((g, to_labeling(vertex, arc)))
}

/// Dicycle labeling whose arc weights are `n+1..=2n` and vertex weights
/// `1..=n` simultaneously.
pub fn construct_cycle(n: usize) -> Result<(Digraph, TotalLabeling), ConstructionError> {
    let g = graph(Family::Cycle, n, None, LabelingKind::SaSvAl)?;
    let vertex = (1..=n).collect();
    let arc = (1..=n)
        .map(|i| if i < n { 2 * n - i } else { 2 * n })
        .collect();
    Ok((g, to_labeling(vertex, arc)))
}

/// Stars: arc-magic `2n+2` (out), arc-arithmetic `(2n+2, 2)` (in), and a
/// vertex-antimagic labeling (in).
///
/// The vertex-antimagic arcs carry `2..=n+1`, so that labeling is not
/// strong*.
pub fn construct_star(
    n: usize,
    kind: LabelingKind,
) -> Result<(Digraph, TotalLabeling), ConstructionError> {
    if !LabelingKind::available_for(Family::Star).contains(&kind) {
        return Err(unsupported(Family::Star, kind));
    }
    let g = graph(Family::Star, n, None, kind)?;
    // index 0 is the center, index i the leaf v_i
    let (center, leaf_offset) = match kind {
        LabelingKind::Saml => (1, 1),
        LabelingKind::SaAl => (2 * n + 1, 0),
        _ => (1, n + 1),
    };
    let arc_top = match kind {
        LabelingKind::Saml => 2 * (n + 1),
        LabelingKind::SaAl => 2 * n + 1,
        _ => n + 2,
    };
    let mut vertex = vec![center];
    vertex.extend((1..=n).map(|i| leaf_offset + i));
    let arc = (1..=n).map(|i| arc_top - i).collect();
    Ok((g, to_labeling(vertex, arc)))
}

/// Wheel vertex-antimagic labeling; rim weights `n+1, n+3, ..., 3n−1` and
/// center weight `(n+1)(n+2)/2`.
pub fn construct_wheel(n: usize) -> Result<(Digraph, TotalLabeling), ConstructionError> {
    let g = graph(Family::Wheel, n, None, LabelingKind::Sval)?;
    let mut vertex = vec![1];
    vertex.extend((1..=n).map(|i| if i < n { 3 * n + 1 - i } else { 3 * n + 1 }));
    let mut arc: Vec<usize> = (1..=n).map(|i| i + 1).collect();
    arc.extend((1..=n).map(|i| if i < n { n + 2 + i } else { n + 2 }));
    Ok((g, to_labeling(vertex, arc)))
}

/// Tadpoles: strong arc-antimagic (one missing weight at `2n+t+1`) and
/// strong* vertex-arithmetic `(n+t+1, 1)`.
///
/// In the arc-antimagic labeling the path arc entering `u_j` carries
/// `2n + 2t + 2 − j`.
pub fn construct_tadpole(
    n: usize,
    t: usize,
    kind: LabelingKind,
) -> Result<(Digraph, TotalLabeling), ConstructionError> {
    if !LabelingKind::available_for(Family::Tadpole).contains(&kind) {
        return Err(unsupported(Family::Tadpole, kind));
    }
    let g = graph(Family::Tadpole, n, Some(t), kind)?;
    let mut vertex = Vec::with_capacity(n + t);
    let mut arc = Vec::with_capacity(n + t);
    if kind == LabelingKind::Saal {
        vertex.extend((1..=n).map(|i| if i == 1 { t + 1 } else { n + t + 2 - i }));
        vertex.extend(1..=t);
        arc.extend((1..=n).map(|i| n + t + i));
        // b_{j-1} enters u_j
        arc.extend((2..=t).map(|j| 2 * n + 2 * t + 2 - j));
        arc.push(2 * n + t + 1);
    } else {
        vertex.extend((1..=n).map(|i| if i == 1 { n + t + 1 } else { 2 * n + t + 2 - i }));
        vertex.extend((1..=t).map(|i| 2 * n + 2 * t + 1 - i));
        arc.extend((1..=n).map(|i| t + i));
        arc.extend(1..t);
        arc.push(t);
    }
    Ok((g, to_labeling(vertex, arc)))
}

/// Friendship graph arc-arithmetic labeling `(2n+2, 1)`.
pub fn construct_friendship(n: usize) -> Result<(Digraph, TotalLabeling), ConstructionError> {
    let g = graph(Family::Friendship, n, None, LabelingKind::SaAl)?;
    let mut vertex = vec![1];
    vertex.extend((1..=n).map(|i| i + 1));
    vertex.extend((1..=n).map(|i| n + 1 + i));
    let mut arc: Vec<usize> = (1..=n).map(|i| 2 * n + 1 + i).collect();
    arc.extend((1..=n).map(|i| 3 * n + 1 + i));
    arc.extend((1..=n).map(|i| 5 * n + 2 - i));
    Ok((g, to_labeling(vertex, arc)))
}

/// General butterfly: strong arc-arithmetic `(2n, 1)` and strong*
/// vertex-antimagic with weights `{3} ∪ {2n+3..=4n}`.
pub fn construct_butterfly(
    n: usize,
    kind: LabelingKind,
) -> Result<(Digraph, TotalLabeling), ConstructionError> {
    if !LabelingKind::available_for(Family::Butterfly).contains(&kind) {
        return Err(unsupported(Family::Butterfly, kind));
    }
    let g = graph(Family::Butterfly, n, None, kind)?;
    // storage: v_1..v_{n-1}, u_1..u_{n-1}, x; arcs a_1..a_n, b_1..b_n
    let (vertex, arc) = if kind == LabelingKind::SaAl {
        let mut vertex: Vec<usize> = (1..n).map(|i| 2 * n - 1 - 2 * i).collect();
        vertex.extend((1..n).map(|i| 2 * n - 2 * i));
        vertex.push(2 * n - 1);
        let mut arc: Vec<usize> = (1..=n - 2).map(|i| 4 * n - 1 - 2 * i).collect();
        arc.extend([2 * n + 1, 4 * n - 2]);
        arc.extend((1..=n - 2).map(|i| 4 * n - 2 - 2 * i));
        arc.extend([2 * n, 4 * n - 1]);
        (vertex, arc)
    } else {
        let mut vertex: Vec<usize> = (1..n).map(|i| 2 * n - 1 + 2 * i).collect();
        vertex.extend((1..n).map(|i| 2 * n + 2 * i));
        vertex.push(4 * n - 1);
        let mut arc: Vec<usize> = (1..n).map(|i| 2 * n - 1 - 2 * i).collect();
        arc.push(2 * n - 1);
        arc.extend((1..n).map(|i| 2 * n - 2 * i));
        arc.push(2 * n);
        (vertex, arc)
    };
    Ok((g, to_labeling(vertex, arc)))
}

fn to_labeling(vertex: Vec<usize>, arc: Vec<usize>) -> TotalLabeling {
    TotalLabeling::new(
        vertex.into_iter().map(label).collect(),
        arc.into_iter().map(label).collect(),
    )
}

/// Orients a gracefully labeled tree into a strong arc-magic digraph.
///
/// `phi[v]` is the label of vertex `v`, a bijection onto `1..=n` whose edge
/// differences are exactly `1..n`. Each edge points from its larger-label
/// endpoint to its smaller-label endpoint and gets label `n + |difference|`,
/// so every arc weight is `n`.
pub fn graceful_to_strong_saml(
    vertex_count: usize,
    edges: &[(usize, usize)],
    phi: &[u32],
) -> Result<(Digraph, TotalLabeling), ConstructionError> {
    let n = vertex_count;
    if n == 0 {
        return Err(ConstructionError::NotATree("no vertices".into()));
    }
    if edges.len() + 1 != n {
        return Err(ConstructionError::NotATree(format!(
            "{} edges on {n} vertices",
            edges.len()
        )));
    }
    if phi.len() != n {
        return Err(ConstructionError::LabelsNotBijective(n));
    }
    // connectivity via union-find; n-1 edges + connected = tree
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for &(x, y) in edges {
        if x >= n || y >= n {
            return Err(ConstructionError::NotATree(format!(
                "edge ({x}, {y}) leaves 0..{n}"
            )));
        }
        let (rx, ry) = (root(&mut parent, x), root(&mut parent, y));
        if rx == ry {
            return Err(ConstructionError::NotATree(format!(
                "edge ({x}, {y}) closes a cycle"
            )));
        }
        parent[rx] = ry;
    }

    let mut seen = vec![false; n + 1];
    for &p in phi {
        let p = p as usize;
        if p == 0 || p > n || seen[p] {
            return Err(ConstructionError::LabelsNotBijective(n));
        }
        seen[p] = true;
    }

    let mut used = vec![false; n];
    let mut arcs = Vec::with_capacity(n - 1);
    let mut arc_labels = Vec::with_capacity(n - 1);
    for &(x, y) in edges {
        let diff = phi[x].abs_diff(phi[y]) as usize;
        if used[diff] {
            return Err(ConstructionError::NotGraceful(diff));
        }
        used[diff] = true;
        arcs.push(if phi[x] > phi[y] { (x, y) } else { (y, x) });
        arc_labels.push(label(n + diff));
    }

    let g = Digraph::new(n, arcs)?;
    Ok((g, TotalLabeling::new(phi.to_vec(), arc_labels)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::{classify, weight_profile, Verdict};

    fn sorted(mut v: Vec<i64>) -> Vec<i64> {
        v.sort_unstable();
        v
    }

    #[test]
    fn path_examples() {
        let (g, l) = construct_path(4, LabelingKind::Saml).unwrap();
        assert_eq!(g.arcs(), &[(1, 0), (1, 2), (3, 2)]);
        assert_eq!(l, TotalLabeling::new(vec![1, 4, 2, 3], vec![7, 6, 5]));
        assert_eq!(classify(&g, &l).unwrap().arc, Verdict::Magic { mu: 4 });

        let (g, l) = construct_path(3, LabelingKind::SaAl).unwrap();
        assert_eq!(l, TotalLabeling::new(vec![1, 2, 3], vec![5, 4]));
        assert_eq!(
            classify(&g, &l).unwrap().arc,
            Verdict::Arithmetic { a: 5, d: 1 }
        );

        let (g, l) = construct_path(3, LabelingKind::SvAl).unwrap();
        assert_eq!(l, TotalLabeling::new(vec![5, 4, 3], vec![1, 2]));
        let p = weight_profile(&g, &l).unwrap();
        assert_eq!(p.vertex_weights, [4, 3, 5]);
    }

    #[test]
    fn cycle_examples() {
        let (g, l) = construct_cycle(3).unwrap();
        assert_eq!(l, TotalLabeling::new(vec![1, 2, 3], vec![5, 4, 6]));
        let (g4, l4) = construct_cycle(4).unwrap();
        let p = weight_profile(&g4, &l4).unwrap();
        assert_eq!(sorted(p.arc_weights), [5, 6, 7, 8]);
        assert_eq!(sorted(p.vertex_weights), [1, 2, 3, 4]);
        assert!(classify(&g, &l).unwrap().strong);
    }

    #[test]
    fn star_examples() {
        let (g, l) = construct_star(2, LabelingKind::Saml).unwrap();
        assert_eq!(l, TotalLabeling::new(vec![1, 2, 3], vec![5, 4]));
        assert_eq!(weight_profile(&g, &l).unwrap().arc_weights, [6, 6]);

        let (g, l) = construct_star(2, LabelingKind::SaAl).unwrap();
        assert_eq!(l, TotalLabeling::new(vec![5, 1, 2], vec![4, 3]));
        assert_eq!(weight_profile(&g, &l).unwrap().arc_weights, [8, 6]);

        let (g, l) = construct_star(2, LabelingKind::Sval).unwrap();
        assert_eq!(l, TotalLabeling::new(vec![1, 4, 5], vec![3, 2]));
        assert_eq!(weight_profile(&g, &l).unwrap().vertex_weights, [6, 1, 3]);

        let (g, l) = construct_star(3, LabelingKind::Sval).unwrap();
        let c = classify(&g, &l).unwrap();
        assert_eq!(c.vertex, Verdict::Antimagic);
        assert!(!c.strong_star);
        assert_eq!(weight_profile(&g, &l).unwrap().vertex_weights[0], 10);
    }

    #[test]
    fn wheel_examples() {
        let (g, l) = construct_wheel(3).unwrap();
        assert_eq!(
            l,
            TotalLabeling::new(vec![1, 9, 8, 10], vec![2, 3, 4, 6, 7, 5])
        );
        assert_eq!(
            weight_profile(&g, &l).unwrap().vertex_weights,
            [10, 6, 4, 8]
        );
        let (g, l) = construct_wheel(4).unwrap();
        let w = weight_profile(&g, &l).unwrap().vertex_weights;
        assert_eq!(w[0], 15);
        assert_eq!(sorted(w[1..].to_vec()), [5, 7, 9, 11]);
    }

    #[test]
    fn tadpole_examples() {
        let (g, l) = construct_tadpole(3, 2, LabelingKind::Saal).unwrap();
        assert_eq!(
            l,
            TotalLabeling::new(vec![3, 5, 4, 1, 2], vec![6, 7, 8, 10, 9])
        );
        assert_eq!(
            weight_profile(&g, &l).unwrap().arc_weights,
            [8, 6, 7, 11, 10]
        );

        let (g, l) = construct_tadpole(3, 2, LabelingKind::SvAl).unwrap();
        assert_eq!(
            l,
            TotalLabeling::new(vec![6, 8, 7, 10, 9], vec![3, 4, 5, 1, 2])
        );
        assert_eq!(
            weight_profile(&g, &l).unwrap().vertex_weights,
            [10, 7, 6, 9, 8]
        );

        let (g, l) = construct_tadpole(3, 1, LabelingKind::Saal).unwrap();
        assert_eq!(l, TotalLabeling::new(vec![2, 4, 3, 1], vec![5, 6, 7, 8]));
        l.validate(&g).unwrap();
    }

    #[test]
    fn friendship_examples() {
        let (g, l) = construct_friendship(2).unwrap();
        assert_eq!(
            l,
            TotalLabeling::new(vec![1, 2, 3, 4, 5], vec![6, 7, 8, 9, 11, 10])
        );
        assert_eq!(
            weight_profile(&g, &l).unwrap().arc_weights,
            [7, 9, 10, 11, 8, 6]
        );
        let (g, l) = construct_friendship(1).unwrap();
        assert_eq!(
            classify(&g, &l).unwrap().arc,
            Verdict::Arithmetic { a: 4, d: 1 }
        );
    }

    #[test]
    fn butterfly_examples() {
        let (g, l) = construct_butterfly(3, LabelingKind::SaAl).unwrap();
        // v_1, v_2, u_1, u_2, x
        assert_eq!(l.vertex_labels, [3, 1, 4, 2, 5]);
        assert_eq!(l.arc_labels, [9, 7, 10, 8, 6, 11]);
        assert_eq!(
            weight_profile(&g, &l).unwrap().arc_weights,
            [7, 11, 8, 6, 9, 10]
        );

        let (g, l) = construct_butterfly(3, LabelingKind::Sval).unwrap();
        assert_eq!(l.vertex_labels, [7, 9, 8, 10, 11]);
        assert_eq!(l.arc_labels, [3, 1, 5, 4, 2, 6]);
        let w = weight_profile(&g, &l).unwrap().vertex_weights;
        assert_eq!(w, [9, 11, 10, 12, 3]);
        for n in 3..10 {
            let (g, l) = construct_butterfly(n, LabelingKind::Sval).unwrap();
            assert_eq!(
                *weight_profile(&g, &l)
                    .unwrap()
                    .vertex_weights
                    .last()
                    .unwrap(),
                3
            );
        }
    }

    #[test]
    fn graceful_examples() {
        let edges = [(0, 1), (1, 2), (2, 3)];
        let (g, l) = graceful_to_strong_saml(4, &edges, &[4, 1, 3, 2]).unwrap();
        assert_eq!(g.arcs(), &[(0, 1), (2, 1), (2, 3)]);
        assert_eq!(l.arc_labels, [7, 6, 5]);
        assert_eq!(weight_profile(&g, &l).unwrap().arc_weights, [4, 4, 4]);

        let (g, l) = graceful_to_strong_saml(2, &[(0, 1)], &[2, 1]).unwrap();
        assert_eq!(g.arcs(), &[(0, 1)]);
        assert_eq!(l.arc_labels, [3]);
        assert_eq!(weight_profile(&g, &l).unwrap().arc_weights, [2]);

        // K_{1,2}, center first
        let (g, l) = graceful_to_strong_saml(3, &[(0, 1), (0, 2)], &[1, 2, 3]).unwrap();
        assert_eq!(g.arcs(), &[(1, 0), (2, 0)]);
        assert_eq!(l.arc_labels, [4, 5]);
        assert_eq!(classify(&g, &l).unwrap().arc, Verdict::Magic { mu: 3 });
    }

    #[test]
    fn graceful_rejections() {
        assert!(matches!(
            graceful_to_strong_saml(3, &[(0, 1)], &[1, 2, 3]),
            Err(ConstructionError::NotATree(_))
        ));
        assert!(matches!(
            graceful_to_strong_saml(4, &[(0, 1), (1, 2), (2, 0)], &[1, 2, 3, 4]),
            Err(ConstructionError::NotATree(_))
        ));
        assert!(matches!(
            graceful_to_strong_saml(3, &[(0, 1), (1, 2)], &[1, 1, 3]),
            Err(ConstructionError::LabelsNotBijective(3))
        ));
        // differences 1, 1
        assert!(matches!(
            graceful_to_strong_saml(3, &[(0, 1), (1, 2)], &[1, 2, 3]),
            Err(ConstructionError::NotGraceful(1))
        ));
    }

    #[test]
    fn unsupported_kind_lists_valid_ones() {
        let err = construct(Family::Wheel, 4, None, LabelingKind::Saml).unwrap_err();
        assert_eq!(
            err.to_string(),
            "no saml construction for wheel (valid: sval)"
        );
        let err = construct_path(4, LabelingKind::Sval).unwrap_err();
        assert!(err.to_string().contains("saml, sa-al, sv-al"));
        assert!(matches!(
            construct(Family::Cycle, 2, None, LabelingKind::SaSvAl),
            Err(ConstructionError::Graph(
                GraphError::ParameterOutOfRange { .. }
            ))
        ));
    }
}
