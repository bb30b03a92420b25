//! Directed graph model and the seven graph families.
//!
//! Vertices are `0..vertex_count`. Every family builder records a
//! [`FamilyTag`] carrying conventional names (`v_1`, `u_2`, `a_{i0}`, ...)
//! for each vertex and arc so reports can cross-reference the usual
//! notation for that family.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("arc {index} ({tail}, {head}) has an endpoint outside 0..{vertex_count}")]
    EndpointOutOfRange {
        index: usize,
        tail: usize,
        head: usize,
        vertex_count: usize,
    },
    #[error("arc {index} is a self-loop on vertex {vertex}")]
    SelfLoop { index: usize, vertex: usize },
    #[error("arc {index} duplicates arc ({tail}, {head})")]
    DuplicateArc {
        index: usize,
        tail: usize,
        head: usize,
    },
    #[error("parameter {name} = {value} out of range for {family}: {expected}")]
    ParameterOutOfRange {
        family: Family,
        name: &'static str,
        value: usize,
        expected: &'static str,
    },
    #[error("parameter t is required for tadpole")]
    MissingTail,
    #[error("parameter t is only meaningful for tadpole, not {0}")]
    UnexpectedTail(Family),
    #[error("orientation {orientation} is not available for {family} (valid: {valid})")]
    BadOrientation {
        family: Family,
        orientation: Orientation,
        valid: &'static str,
    },
    #[error("unknown family '{0}'")]
    UnknownFamily(String),
    #[error("unknown orientation '{0}'")]
    UnknownOrientation(String),
}

/// The graph families with dedicated builders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Path,
    Cycle,
    Star,
    Wheel,
    Tadpole,
    Friendship,
    Butterfly,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::Wheel,
        Family::Tadpole,
        Family::Friendship,
        Family::Butterfly,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Wheel => "wheel",
            Family::Tadpole => "tadpole",
            Family::Friendship => "friendship",
            Family::Butterfly => "butterfly",
        }
    }

    /// Smallest admissible `n`.
    pub fn min_n(self) -> usize {
        match self {
            Family::Path => 2,
            Family::Star | Family::Friendship => 1,
            Family::Cycle | Family::Wheel | Family::Tadpole | Family::Butterfly => 3,
        }
    }

    /// The orientation used when none is requested.
    pub fn default_orientation(self) -> Orientation {
        match self {
            Family::Path | Family::Cycle | Family::Tadpole | Family::Butterfly => {
                Orientation::Forward
            }
            Family::Star => Orientation::Out,
            Family::Wheel => Orientation::Spokes,
            Family::Friendship => Orientation::Forward,
        }
    }

    fn valid_orientations(self) -> &'static str {
        match self {
            Family::Path => "forward, alternating",
            Family::Star => "out, in",
            Family::Wheel => "spokes",
            _ => "forward",
        }
    }

    fn accepts(self, o: Orientation) -> bool {
        matches!(
            (self, o),
            (
                Family::Path,
                Orientation::Forward | Orientation::Alternating
            ) | (Family::Star, Orientation::Out | Orientation::In)
                | (Family::Wheel, Orientation::Spokes)
                | (
                    Family::Cycle | Family::Tadpole | Family::Friendship | Family::Butterfly,
                    Orientation::Forward
                )
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| GraphError::UnknownFamily(s.to_string()))
    }
}

/// Arc orientation variant of a family.
///
/// `Forward` walks every path and cycle in increasing index order.
/// `Alternating` is the path orientation whose odd arcs point backwards.
/// `Out`/`In` are star orientations (center to leaf, leaf to center).
/// `Spokes` is the wheel orientation: forward rim, spokes into the center.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Forward,
    Alternating,
    Out,
    In,
    Spokes,
}

impl Orientation {
    pub fn name(self) -> &'static str {
        match self {
            Orientation::Forward => "forward",
            Orientation::Alternating => "alternating",
            Orientation::Out => "out",
            Orientation::In => "in",
            Orientation::Spokes => "spokes",
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Orientation {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            Orientation::Forward,
            Orientation::Alternating,
            Orientation::Out,
            Orientation::In,
            Orientation::Spokes,
        ]
        .into_iter()
        .find(|o| o.name().eq_ignore_ascii_case(s))
        .ok_or_else(|| GraphError::UnknownOrientation(s.to_string()))
    }
}

/// Family metadata attached to a generated digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyTag {
    pub family: Family,
    pub n: usize,
    pub t: Option<usize>,
    pub orientation: Orientation,
    /// Conventional vertex name for every vertex index.
    pub vertex_names: Vec<String>,
    /// Conventional arc name for every arc index.
    pub arc_names: Vec<String>,
}

impl FamilyTag {
    pub fn descriptor(&self) -> FamilyDescriptor {
        FamilyDescriptor {
            name: self.family,
            n: self.n,
            t: self.t,
            orientation: self.orientation,
        }
    }
}

/// Serializable family parameters, enough to rebuild the digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDescriptor {
    pub name: Family,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    pub orientation: Orientation,
}

impl FamilyDescriptor {
    pub fn build(&self) -> Result<Digraph, GraphError> {
        build_family(self.name, self.n, self.t, Some(self.orientation))
    }
}

/// A simple digraph: vertex count plus an ordered arc list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    vertex_count: usize,
    arcs: Vec<(usize, usize)>,
    family: Option<FamilyTag>,
}

impl Digraph {
    /// Builds a digraph, rejecting out-of-range endpoints, loops and
    /// repeated arcs.
    pub fn new(vertex_count: usize, arcs: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut seen = HashSet::with_capacity(arcs.len());
        for (index, &(tail, head)) in arcs.iter().enumerate() {
            if tail >= vertex_count || head >= vertex_count {
                return Err(GraphError::EndpointOutOfRange {
                    index,
                    tail,
                    head,
                    vertex_count,
                });
            }
            if tail == head {
                return Err(GraphError::SelfLoop {
                    index,
                    vertex: tail,
                });
            }
            if !seen.insert((tail, head)) {
                return Err(GraphError::DuplicateArc { index, tail, head });
            }
        }
        Ok(Digraph {
            vertex_count,
            arcs,
            family: None,
        })
    }

    pub fn with_family(mut self, tag: FamilyTag) -> Self {
        debug_assert_eq!(tag.vertex_names.len(), self.vertex_count);
        debug_assert_eq!(tag.arc_names.len(), self.arcs.len());
        self.family = Some(tag);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// `|V| + |A|`, the size of the label range.
    pub fn order_plus_size(&self) -> usize {
        self.vertex_count + self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn family(&self) -> Option<&FamilyTag> {
        self.family.as_ref()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(t, _)| t == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(_, h)| h == v).count()
    }

    /// Outgoing and incoming arc indices per vertex.
    pub fn incidence(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let mut out = vec![Vec::new(); self.vertex_count];
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (i, &(t, h)) in self.arcs.iter().enumerate() {
            out[t].push(i);
            inc[h].push(i);
        }
        (out, inc)
    }

    /// Successor lists.
    pub fn successors(&self) -> Vec<Vec<usize>> {
        let mut succ = vec![Vec::new(); self.vertex_count];
        for &(t, h) in &self.arcs {
            succ[t].push(h);
        }
        succ
    }

    /// Reverses the arcs whose bit is set in `flip` (bit `i` for arc `i`).
    /// The result keeps arc order and drops the family tag.
    pub fn reoriented(&self, flip: u64) -> Digraph {
        let arcs = self
            .arcs
            .iter()
            .enumerate()
            .map(|(i, &(t, h))| if flip >> i & 1 == 1 { (h, t) } else { (t, h) })
            .collect();
        Digraph {
            vertex_count: self.vertex_count,
            arcs,
            family: None,
        }
    }

    /// Every orientation of the underlying graph, `2^|A|` in total, in
    /// order of the flip mask. Meant for trees, where reversing arcs cannot
    /// create duplicates.
    pub fn orientations(&self) -> impl Iterator<Item = Digraph> + '_ {
        assert!(
            self.arcs.len() < 64,
            "too many arcs to enumerate orientations"
        );
        (0..1u64 << self.arcs.len()).map(move |m| self.reoriented(m))
    }

    /// Display name of a vertex: the family name when tagged, `v<i>` otherwise.
    pub fn vertex_name(&self, v: usize) -> String {
        match &self.family {
            Some(tag) => tag.vertex_names[v].clone(),
            None => format!("v{v}"),
        }
    }

    pub fn arc_name(&self, a: usize) -> String {
        match &self.family {
            Some(tag) => tag.arc_names[a].clone(),
            None => format!("a{a}"),
        }
    }
}

/// Builds a family member with the given parameters.
///
/// `t` is required for tadpoles and rejected elsewhere. `orientation`
/// defaults to [`Family::default_orientation`].
pub fn build_family(
    family: Family,
    n: usize,
    t: Option<usize>,
    orientation: Option<Orientation>,
) -> Result<Digraph, GraphError> {
    if n < family.min_n() {
        return Err(GraphError::ParameterOutOfRange {
            family,
            name: "n",
            value: n,
            expected: match family.min_n() {
                1 => "n >= 1",
                2 => "n >= 2",
                _ => "n >= 3",
            },
        });
    }
    let t = match (family, t) {
        (Family::Tadpole, None) => return Err(GraphError::MissingTail),
        (Family::Tadpole, Some(0)) => {
            return Err(GraphError::ParameterOutOfRange {
                family,
                name: "t",
                value: 0,
                expected: "t >= 1",
            })
        }
        (Family::Tadpole, Some(t)) => t,
        (_, Some(_)) => return Err(GraphError::UnexpectedTail(family)),
        (_, None) => 0,
    };
    let orientation = orientation.unwrap_or_else(|| family.default_orientation());
    if !family.accepts(orientation) {
        return Err(GraphError::BadOrientation {
            family,
            orientation,
            valid: family.valid_orientations(),
        });
    }

    let (vertex_count, arcs, vertex_names, arc_names) = match family {
        Family::Path => path(n, orientation),
        Family::Cycle => cycle(n),
        Family::Star => star(n, orientation),
        Family::Wheel => wheel(n),
        Family::Tadpole => tadpole(n, t),
        Family::Friendship => friendship(n),
        Family::Butterfly => butterfly(n),
    };
    let tag = FamilyTag {
        family,
        n,
        t: (family == Family::Tadpole).then_some(t),
        orientation,
        vertex_names,
        arc_names,
    };
    Ok(Digraph::new(vertex_count, arcs)
        .expect("family builders emit simple digraphs")
        .with_family(tag))
}

type Parts = (usize, Vec<(usize, usize)>, Vec<String>, Vec<String>);

fn names(prefix: &str, range: std::ops::RangeInclusive<usize>) -> Vec<String> {
    range.map(|i| format!("{prefix}_{i}")).collect()
}

// v_i -> i-1; a_i joins v_i and v_{i+1}.
fn path(n: usize, orientation: Orientation) -> Parts {
    let arcs = (1..n)
        .map(|i| match orientation {
            Orientation::Alternating if i % 2 == 1 => (i, i - 1),
            _ => (i - 1, i),
        })
        .collect();
    (n, arcs, names("v", 1..=n), names("a", 1..=n - 1))
}

fn cycle(n: usize) -> Parts {
    let arcs = (0..n).map(|i| (i, (i + 1) % n)).collect();
    (n, arcs, names("v", 1..=n), names("a", 1..=n))
}

// v_0 is the center at index 0, leaf v_i at index i.
fn star(n: usize, orientation: Orientation) -> Parts {
    let arcs = (1..=n)
        .map(|i| match orientation {
            Orientation::In => (i, 0),
            _ => (0, i),
        })
        .collect();
    (n + 1, arcs, names("v", 0..=n), names("a", 1..=n))
}

// Spokes a_1..a_n = v_i -> v_0, then rim b_1..b_n = v_i -> v_{i+1}.
fn wheel(n: usize) -> Parts {
    let mut arcs: Vec<_> = (1..=n).map(|i| (i, 0)).collect();
    arcs.extend((1..=n).map(|i| (i, i % n + 1)));
    let mut arc_names = names("a", 1..=n);
    arc_names.extend(names("b", 1..=n));
    (n + 1, arcs, names("v", 0..=n), arc_names)
}

// Cycle v_1..v_n at 0..n, path u_1..u_t at n..n+t; arcs a_1..a_n,
// b_1..b_{t-1}, then the connector c = u_t -> v_1.
fn tadpole(n: usize, t: usize) -> Parts {
    let mut arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    arcs.extend((0..t - 1).map(|j| (n + j, n + j + 1)));
    arcs.push((n + t - 1, 0));
    let mut vertex_names = names("v", 1..=n);
    vertex_names.extend(names("u", 1..=t));
    let mut arc_names = names("a", 1..=n);
    if t > 1 {
        arc_names.extend(names("b", 1..=t - 1));
    }
    arc_names.push("c".to_string());
    (n + t, arcs, vertex_names, arc_names)
}

/// Index of `v_{i1}` (`second == false`) or `v_{i2}` in the friendship
/// layout, for triangle `i` in `1..=n`.
pub fn friendship_vertex(n: usize, i: usize, second: bool) -> usize {
    if second {
        n + i
    } else {
        i
    }
}

// x at 0, v_{11}..v_{n1} at 1..=n, v_{12}..v_{n2} at n+1..=2n.
// Arcs grouped by kind: a_{i0} = x -> v_{i1}, a_{i1} = v_{i1} -> v_{i2},
// a_{i2} = v_{i2} -> x.
fn friendship(n: usize) -> Parts {
    let first = |i| friendship_vertex(n, i, false);
    let second = |i| friendship_vertex(n, i, true);
    let mut arcs: Vec<_> = (1..=n).map(|i| (0, first(i))).collect();
    arcs.extend((1..=n).map(|i| (first(i), second(i))));
    arcs.extend((1..=n).map(|i| (second(i), 0)));

    let mut vertex_names = vec!["x".to_string()];
    vertex_names.extend((1..=n).map(|i| format!("v_{{{i}1}}")));
    vertex_names.extend((1..=n).map(|i| format!("v_{{{i}2}}")));
    let arc_names = (0..3)
        .flat_map(|k| (1..=n).map(move |i| format!("a_{{{i}{k}}}")))
        .collect();
    (2 * n + 1, arcs, vertex_names, arc_names)
}

// v_1..v_{n-1} at 0..n-1, u_1..u_{n-1} at n-1..2n-2, shared x = v_n = u_n
// last. Arcs a_1..a_n then b_1..b_n.
fn butterfly(n: usize) -> Parts {
    let x = 2 * n - 2;
    let v = |i: usize| if i == n { x } else { i - 1 };
    let u = |i: usize| if i == n { x } else { n - 2 + i };
    let mut arcs: Vec<_> = (1..=n).map(|i| (v(i), v(i % n + 1))).collect();
    arcs.extend((1..=n).map(|i| (u(i), u(i % n + 1))));
    let mut vertex_names = names("v", 1..=n - 1);
    vertex_names.extend(names("u", 1..=n - 1));
    vertex_names.push("x".to_string());
    let mut arc_names = names("a", 1..=n);
    arc_names.extend(names("b", 1..=n));
    (2 * n - 1, arcs, vertex_names, arc_names)
}
