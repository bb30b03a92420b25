//! Exhaustive enumeration of total labelings of a small digraph.
//!
//! Labels are assigned to slots in a fixed order: vertices by index, then
//! arcs by index, each slot trying the free labels in increasing order. A
//! search therefore visits labelings in lexicographic order over the slot
//! sequence, and that order is the canonical order of reported witnesses.
//!
//! The pruned enumerator cuts a branch only when a necessary condition of
//! the target class fails, and every leaf is re-checked with the full
//! classifier. The main cuts use the weight-sum identities: once all vertex
//! labels are placed, the sum of the vertex weights (`Σ λ(v)`) and the sum
//! of the arc weights (`Σ λ(a) + Σ λ(v)(deg⁻(v) − deg⁺(v))`) are fixed. That
//! pins a magic constant, and an arithmetic progression once `a` or `d` is
//! known. [`search_unpruned`] is the plain permutation enumerator the
//! pruned one is checked against.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Digraph, FamilyDescriptor};
use crate::labeling::{weight_profile_unchecked, TotalLabeling, Verdict, WeightProfile};

/// Default refusal threshold on `|V| + |A|`.
pub const DEFAULT_CAP: usize = 12;

/// Largest `|V| + |A|` the engine supports at all (label sets are `u64`
/// bitmasks).
pub const HARD_LIMIT: usize = 63;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("search space too large: |V|+|A| = {size} exceeds the cap of {cap} (raise the cap to override)")]
    OverCap { size: usize, cap: usize },
    #[error("|V|+|A| = {0} exceeds the hard limit of {HARD_LIMIT}")]
    TooLarge(usize),
    #[error("worker count must be at least 1")]
    NoWorkers,
    #[error("unknown class '{0}'")]
    UnknownClass(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Arc,
    Vertex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum TargetClass {
    Magic,
    Antimagic,
    Arithmetic {
        #[serde(skip_serializing_if = "Option::is_none")]
        a: Option<i64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        d: Option<i64>,
    },
}

/// The labeling class a search looks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Target {
    pub side: Side,
    pub class: TargetClass,
}

impl Target {
    pub const ARC_MAGIC: Target = Target {
        side: Side::Arc,
        class: TargetClass::Magic,
    };
    pub const VERTEX_MAGIC: Target = Target {
        side: Side::Vertex,
        class: TargetClass::Magic,
    };
    pub const ARC_ANTIMAGIC: Target = Target {
        side: Side::Arc,
        class: TargetClass::Antimagic,
    };
    pub const VERTEX_ANTIMAGIC: Target = Target {
        side: Side::Vertex,
        class: TargetClass::Antimagic,
    };

    pub fn arithmetic(side: Side, a: Option<i64>, d: Option<i64>) -> Target {
        Target {
            side,
            class: TargetClass::Arithmetic { a, d },
        }
    }

    /// Whether the weights of a complete labeling belong to the class.
    ///
    /// Antimagic means pairwise distinct, so arithmetic progressions count.
    pub fn matches(&self, profile: &WeightProfile) -> bool {
        let weights = match self.side {
            Side::Arc => &profile.arc_weights,
            Side::Vertex => &profile.vertex_weights,
        };
        let verdict = Verdict::of(weights);
        match self.class {
            TargetClass::Magic => matches!(verdict, Verdict::Magic { .. }),
            TargetClass::Antimagic => verdict.is_distinct(weights.len()),
            TargetClass::Arithmetic { a, d } => match verdict {
                Verdict::Arithmetic { a: wa, d: wd } => {
                    a.is_none_or(|a| a == wa) && d.is_none_or(|d| d == wd)
                }
                _ => false,
            },
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            Side::Arc => "arc",
            Side::Vertex => "vertex",
        };
        match self.class {
            TargetClass::Magic => write!(f, "{side}-magic"),
            TargetClass::Antimagic => write!(f, "{side}-antimagic"),
            TargetClass::Arithmetic { a, d } => {
                let show = |x: Option<i64>| x.map_or("*".to_string(), |x| x.to_string());
                write!(f, "{side}-arithmetic({}, {})", show(a), show(d))
            }
        }
    }
}

impl FromStr for Target {
    type Err = SearchError;

    /// Accepts the short class names (`saml`, `svml`, `saal`, `sval`,
    /// `sa-al`, `sv-al`) and the long ones (`arc-magic`, ...).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = match s.to_ascii_lowercase().as_str() {
            "saml" | "arc-magic" => Target::ARC_MAGIC,
            "svml" | "vertex-magic" => Target::VERTEX_MAGIC,
            "saal" | "arc-antimagic" => Target::ARC_ANTIMAGIC,
            "sval" | "vertex-antimagic" => Target::VERTEX_ANTIMAGIC,
            "sa-al" | "arc-arithmetic" => Target::arithmetic(Side::Arc, None, None),
            "sv-al" | "vertex-arithmetic" => Target::arithmetic(Side::Vertex, None, None),
            _ => return Err(SearchError::UnknownClass(s.to_string())),
        };
        Ok(t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    /// Count every solution; keeps the canonically first one as a witness.
    CountAll,
    /// Stop at the first solution.
    FirstWitness,
    /// Stop once `k` solutions are found, keeping all of them.
    CollectUpTo(usize),
}

impl SearchMode {
    fn limit(self) -> Option<usize> {
        match self {
            SearchMode::CountAll => None,
            SearchMode::FirstWitness => Some(1),
            SearchMode::CollectUpTo(k) => Some(k),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchQuery {
    pub graph: Digraph,
    pub target: Target,
    pub require_strong: bool,
    pub require_strong_star: bool,
    pub mode: SearchMode,
    /// Refuse searches with `|V| + |A|` above this.
    pub cap: usize,
    /// Threads exploring top-level branches. Results do not depend on it.
    pub workers: usize,
}

impl SearchQuery {
    pub fn new(graph: Digraph, target: Target) -> Self {
        SearchQuery {
            graph,
            target,
            require_strong: false,
            require_strong_star: false,
            mode: SearchMode::CountAll,
            cap: DEFAULT_CAP,
            workers: 1,
        }
    }

    pub fn strong(mut self, yes: bool) -> Self {
        self.require_strong = yes;
        self
    }

    pub fn strong_star(mut self, yes: bool) -> Self {
        self.require_strong_star = yes;
        self
    }

    pub fn mode(mut self, mode: SearchMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    fn echo(&self) -> QueryEcho {
        QueryEcho {
            family: self.graph.family().map(|f| f.descriptor()),
            vertex_count: self.graph.vertex_count(),
            arcs: self.graph.arcs().iter().map(|&(t, h)| [t, h]).collect(),
            target: self.target,
            require_strong: self.require_strong,
            require_strong_star: self.require_strong_star,
            mode: self.mode,
            cap: self.cap,
        }
    }

    fn accepts(&self, labeling: &TotalLabeling, profile: &WeightProfile) -> bool {
        self.target.matches(profile)
            && (!self.require_strong || labeling.is_strong())
            && (!self.require_strong_star || labeling.is_strong_star())
    }
}

/// The query as recorded in a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QueryEcho {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyDescriptor>,
    pub vertex_count: usize,
    pub arcs: Vec<[usize; 2]>,
    pub target: Target,
    pub require_strong: bool,
    pub require_strong_star: bool,
    pub mode: SearchMode,
    pub cap: usize,
}

/// Outcome of a search.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchReport {
    pub query: QueryEcho,
    /// True iff every labeling was covered.
    pub exhaustive: bool,
    pub solutions_found: u64,
    /// In canonical order.
    pub witnesses: Vec<TotalLabeling>,
    pub nodes_visited: u64,
    #[serde(rename = "elapsed_ms", serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

fn check_size(q: &SearchQuery) -> Result<usize, SearchError> {
    let size = q.graph.order_plus_size();
    if size > HARD_LIMIT {
        return Err(SearchError::TooLarge(size));
    }
    if size > q.cap {
        return Err(SearchError::OverCap { size, cap: q.cap });
    }
    if q.workers == 0 {
        return Err(SearchError::NoWorkers);
    }
    Ok(size)
}

/// Runs the pruned enumerator.
///
/// With `workers > 1` the branches below the first slot are explored in
/// parallel and merged in branch order. Counts, witnesses and node counts
/// are identical to the single-threaded run.
pub fn search(q: &SearchQuery) -> Result<SearchReport, SearchError> {
    check_size(q)?;
    let start = Instant::now();
    let problem = Problem::new(q);
    let limit = q.mode.limit();

    let first = problem.first_slot_candidates();
    let (solutions, witnesses, nodes, stopped) = if q.workers == 1 || first.len() < 2 {
        let mut acc = Fold::new(limit);
        for &label in &first {
            let remaining = limit.map(|k| k - acc.solutions as usize);
            let branch = problem.run_branch(label, remaining);
            if acc.absorb(branch) {
                break;
            }
        }
        acc.finish()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(q.workers)
            .build()
            .expect("thread pool");
        let branches: Vec<Branch> = pool.install(|| {
            first
                .par_iter()
                .map(|&l| problem.run_branch(l, limit))
                .collect()
        });
        let mut acc = Fold::new(limit);
        for branch in branches {
            if acc.absorb(branch) {
                break;
            }
        }
        acc.finish()
    };

    Ok(SearchReport {
        query: q.echo(),
        exhaustive: !stopped,
        solutions_found: solutions,
        witnesses,
        nodes_visited: nodes,
        elapsed: start.elapsed(),
    })
}

/// Plain enumeration of every bijection with a classifier check at each
/// leaf; no cuts, single-threaded. The reference the pruned search must
/// agree with.
pub fn search_unpruned(q: &SearchQuery) -> Result<SearchReport, SearchError> {
    let size = check_size(q)?;
    let start = Instant::now();
    let nv = q.graph.vertex_count();
    let mut run = Unpruned {
        q,
        size,
        nv,
        labels: Vec::with_capacity(size),
        used: vec![false; size + 1],
        limit: q.mode.limit(),
        keep: q.mode.limit().unwrap_or(1),
        solutions: 0,
        witnesses: Vec::new(),
        nodes: 0,
    };
    let stopped = run.descend();
    Ok(SearchReport {
        query: q.echo(),
        exhaustive: !stopped,
        solutions_found: run.solutions,
        witnesses: run.witnesses,
        nodes_visited: run.nodes,
        elapsed: start.elapsed(),
    })
}

struct Unpruned<'a> {
    q: &'a SearchQuery,
    size: usize,
    nv: usize,
    labels: Vec<u32>,
    used: Vec<bool>,
    limit: Option<usize>,
    keep: usize,
    solutions: u64,
    witnesses: Vec<TotalLabeling>,
    nodes: u64,
}

impl Unpruned<'_> {
    /// Returns true when the solution limit was reached.
    fn descend(&mut self) -> bool {
        if self.labels.len() == self.size {
            let l = TotalLabeling::new(
                self.labels[..self.nv].to_vec(),
                self.labels[self.nv..].to_vec(),
            );
            let profile = weight_profile_unchecked(&self.q.graph, &l);
            if self.q.accepts(&l, &profile) {
                self.solutions += 1;
                if self.witnesses.len() < self.keep {
                    self.witnesses.push(l);
                }
                return self.limit == Some(self.solutions as usize);
            }
            return false;
        }
        for label in 1..=self.size {
            if self.used[label] {
                continue;
            }
            self.nodes += 1;
            self.used[label] = true;
            self.labels.push(label as u32);
            let stop = self.descend();
            self.labels.pop();
            self.used[label] = false;
            if stop {
                return true;
            }
        }
        false
    }
}

/// Result of exploring the subtree under one first-slot label.
struct Branch {
    solutions: u64,
    witnesses: Vec<TotalLabeling>,
    /// Node count at the moment each of the first `limit` solutions was hit.
    solution_nodes: Vec<u64>,
    nodes: u64,
}

/// Merges branches in order, replaying where a sequential run would stop.
struct Fold {
    limit: Option<usize>,
    solutions: u64,
    witnesses: Vec<TotalLabeling>,
    nodes: u64,
    stopped: bool,
}

impl Fold {
    fn new(limit: Option<usize>) -> Self {
        Fold {
            limit,
            solutions: 0,
            witnesses: Vec::new(),
            nodes: 0,
            stopped: false,
        }
    }

    /// Returns true once the limit is reached.
    fn absorb(&mut self, b: Branch) -> bool {
        match self.limit {
            None => {
                self.solutions += b.solutions;
                self.nodes += b.nodes;
                if self.witnesses.is_empty() {
                    self.witnesses.extend(b.witnesses.into_iter().take(1));
                }
                false
            }
            Some(k) => {
                let need = k - self.solutions as usize;
                if (b.solutions as usize) < need {
                    self.solutions += b.solutions;
                    self.nodes += b.nodes;
                    self.witnesses.extend(b.witnesses);
                    false
                } else {
                    // a sequential run stops inside this branch
                    self.solutions += need as u64;
                    self.nodes += b.solution_nodes[need - 1];
                    self.witnesses.extend(b.witnesses.into_iter().take(need));
                    self.stopped = true;
                    true
                }
            }
        }
    }

    fn finish(self) -> (u64, Vec<TotalLabeling>, u64, bool) {
        (self.solutions, self.witnesses, self.nodes, self.stopped)
    }
}

/// What the labels placed so far imply about the target side's weights.
#[derive(Debug, Clone, Copy)]
enum SideShape {
    /// Not yet known (vertices still being placed).
    Unknown,
    /// Every weight equals this.
    Magic(i64),
    /// Weights must be distinct.
    Distinct,
    /// Weights must be exactly `a, a+d, ..., a+(k−1)d`.
    Progression { a: i64, d: i64, k: i64 },
}

impl SideShape {
    fn admits(self, w: i64) -> bool {
        match self {
            SideShape::Magic(mu) => w == mu,
            SideShape::Progression { a, d, k } => w >= a && (w - a) % d == 0 && (w - a) / d < k,
            SideShape::Unknown | SideShape::Distinct => true,
        }
    }

    fn needs_distinct(self) -> bool {
        matches!(self, SideShape::Distinct | SideShape::Progression { .. })
    }
}

/// Immutable search data shared by every branch.
struct Problem<'a> {
    q: &'a SearchQuery,
    size: usize,
    nv: usize,
    arcs: Vec<(usize, usize)>,
    degree: Vec<u32>,
    /// `deg⁻(v) − deg⁺(v)`.
    balance: Vec<i64>,
    vertex_domain: u64,
    arc_domain: u64,
}

/// Mutable state of one depth-first walk.
struct Walk {
    labels: Vec<u32>,
    used: u64,
    vertex_sum: i64,
    /// `λ(v)` plus placed incoming arc labels minus placed outgoing ones.
    partial: Vec<i64>,
    pending: Vec<u32>,
    shape: SideShape,
    seen: Vec<i64>,
    nodes: u64,
    solutions: u64,
    witnesses: Vec<TotalLabeling>,
    solution_nodes: Vec<u64>,
    limit: Option<usize>,
    keep: usize,
}

fn mask_upto(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

impl<'a> Problem<'a> {
    fn new(q: &'a SearchQuery) -> Self {
        let g = &q.graph;
        let size = g.order_plus_size();
        let nv = g.vertex_count();
        let na = g.arc_count();
        let mut degree = vec![0u32; nv];
        let mut balance = vec![0i64; nv];
        for &(t, h) in g.arcs() {
            degree[t] += 1;
            degree[h] += 1;
            balance[h] += 1;
            balance[t] -= 1;
        }
        // bit i stands for label i + 1
        let all = mask_upto(size);
        let mut vertex_domain = all;
        let mut arc_domain = all;
        if q.require_strong {
            vertex_domain &= mask_upto(nv);
            arc_domain &= !mask_upto(nv);
        }
        if q.require_strong_star {
            arc_domain &= mask_upto(na);
            vertex_domain &= !mask_upto(na);
        }
        Problem {
            q,
            size,
            nv,
            arcs: g.arcs().to_vec(),
            degree,
            balance,
            vertex_domain,
            arc_domain,
        }
    }

    fn side_len(&self) -> usize {
        match self.q.target.side {
            Side::Arc => self.arcs.len(),
            Side::Vertex => self.nv,
        }
    }

    fn first_slot_candidates(&self) -> Vec<u32> {
        if self.size == 0 {
            return Vec::new();
        }
        let domain = if self.nv > 0 {
            self.vertex_domain
        } else {
            self.arc_domain
        };
        labels_in(domain).collect()
    }

    fn run_branch(&self, first: u32, limit: Option<usize>) -> Branch {
        let mut walk = Walk {
            labels: Vec::with_capacity(self.size),
            used: 0,
            vertex_sum: 0,
            partial: vec![0; self.nv],
            pending: self.degree.clone(),
            shape: SideShape::Unknown,
            seen: Vec::new(),
            nodes: 0,
            solutions: 0,
            witnesses: Vec::new(),
            solution_nodes: Vec::new(),
            limit,
            keep: limit.unwrap_or(1),
        };
        self.try_label(&mut walk, first);
        Branch {
            solutions: walk.solutions,
            witnesses: walk.witnesses,
            solution_nodes: walk.solution_nodes,
            nodes: walk.nodes,
        }
    }

    /// Places `label` in the next slot, explores below it if feasible, and
    /// undoes the placement. Returns true when the solution limit is hit.
    fn try_label(&self, w: &mut Walk, label: u32) -> bool {
        let slot = w.labels.len();
        w.nodes += 1;
        w.labels.push(label);
        w.used |= 1 << (label - 1);
        let seen_mark = w.seen.len();
        let saved_shape = w.shape;

        let stop = if self.place(w, slot, label) {
            self.descend(w)
        } else {
            false
        };

        self.unplace(w, slot, label);
        w.seen.truncate(seen_mark);
        w.shape = saved_shape;
        w.used &= !(1 << (label - 1));
        w.labels.pop();
        stop
    }

    fn descend(&self, w: &mut Walk) -> bool {
        let slot = w.labels.len();
        if slot == self.size {
            return self.leaf(w);
        }
        if slot < self.nv {
            for label in labels_in(self.vertex_domain & !w.used) {
                if self.try_label(w, label) {
                    return true;
                }
            }
            return false;
        }
        let arc = slot - self.nv;
        match self.forced_arc_label(w, arc) {
            Forced::Free => {
                for label in labels_in(self.arc_domain & !w.used) {
                    if self.try_label(w, label) {
                        return true;
                    }
                }
                false
            }
            Forced::Label(label) => {
                let bit = 1u64 << (label - 1);
                if self.arc_domain & !w.used & bit != 0 {
                    self.try_label(w, label)
                } else {
                    false
                }
            }
            Forced::Impossible => false,
        }
    }

    fn leaf(&self, w: &mut Walk) -> bool {
        let l = TotalLabeling::new(w.labels[..self.nv].to_vec(), w.labels[self.nv..].to_vec());
        let profile = weight_profile_unchecked(&self.q.graph, &l);
        if !self.q.accepts(&l, &profile) {
            return false;
        }
        w.solutions += 1;
        if w.witnesses.len() < w.keep {
            w.witnesses.push(l);
        }
        if let Some(k) = w.limit {
            w.solution_nodes.push(w.nodes);
            return w.solutions as usize >= k;
        }
        false
    }

    /// Applies the bookkeeping for a placement and reports whether the
    /// branch can still lead to a solution.
    fn place(&self, w: &mut Walk, slot: usize, label: u32) -> bool {
        let label = i64::from(label);
        if slot < self.nv {
            w.partial[slot] = label;
            w.vertex_sum += label;
            if slot + 1 == self.nv {
                return self.fix_shape(w);
            }
            return true;
        }
        let arc = slot - self.nv;
        let (t, h) = self.arcs[arc];
        w.partial[h] += label;
        w.partial[t] -= label;
        w.pending[h] -= 1;
        w.pending[t] -= 1;
        match self.q.target.side {
            Side::Arc => {
                let weight = label + i64::from(w.labels[h]) - i64::from(w.labels[t]);
                record(w, weight)
            }
            Side::Vertex => {
                for v in [t, h] {
                    if w.pending[v] == 0 && !record(w, w.partial[v]) {
                        return false;
                    }
                }
                self.vertex_ranges_ok(w)
            }
        }
    }

    fn unplace(&self, w: &mut Walk, slot: usize, label: u32) {
        let label = i64::from(label);
        if slot < self.nv {
            w.partial[slot] = 0;
            w.vertex_sum -= label;
            return;
        }
        let (t, h) = self.arcs[slot - self.nv];
        w.partial[h] -= label;
        w.partial[t] += label;
        w.pending[h] += 1;
        w.pending[t] += 1;
    }

    /// Called once the last vertex label is placed: derives the target
    /// side's shape from the weight-sum identities.
    fn fix_shape(&self, w: &mut Walk) -> bool {
        let k = self.side_len() as i64;
        let total = (self.size * (self.size + 1) / 2) as i64;
        let sum = match self.q.target.side {
            Side::Vertex => w.vertex_sum,
            Side::Arc => {
                let weighted: i64 = (0..self.nv)
                    .map(|v| i64::from(w.labels[v]) * self.balance[v])
                    .sum();
                total - w.vertex_sum + weighted
            }
        };
        w.shape = match self.q.target.class {
            TargetClass::Magic => {
                if k == 0 || sum % k != 0 {
                    return false;
                }
                SideShape::Magic(sum / k)
            }
            TargetClass::Antimagic => {
                if k == 0 {
                    return false;
                }
                SideShape::Distinct
            }
            TargetClass::Arithmetic { a, d } => {
                if k < 2 {
                    return false;
                }
                let steps = k * (k - 1) / 2;
                match (a, d) {
                    (_, Some(d)) => {
                        let rest = sum - d * steps;
                        if d < 1 || rest % k != 0 || a.is_some_and(|a| a != rest / k) {
                            return false;
                        }
                        SideShape::Progression { a: rest / k, d, k }
                    }
                    (Some(a), None) => {
                        let rest = sum - k * a;
                        if rest < steps || rest % steps != 0 {
                            return false;
                        }
                        SideShape::Progression {
                            a,
                            d: rest / steps,
                            k,
                        }
                    }
                    (None, None) => SideShape::Distinct,
                }
            }
        };
        // weights complete already: isolated vertices
        if self.q.target.side == Side::Vertex {
            for v in 0..self.nv {
                if self.degree[v] == 0 && !record(w, w.partial[v]) {
                    return false;
                }
            }
        }
        true
    }

    /// For vertex targets with a known weight range, checks that every
    /// incomplete vertex can still reach it with the labels left.
    fn vertex_ranges_ok(&self, w: &Walk) -> bool {
        let (lo, hi) = match w.shape {
            SideShape::Magic(mu) => (mu, mu),
            SideShape::Progression { a, d, k } => (a, a + (k - 1) * d),
            SideShape::Unknown | SideShape::Distinct => return true,
        };
        let free: Vec<i64> = labels_in(self.arc_domain & !w.used)
            .map(i64::from)
            .collect();
        let mut prefix = Vec::with_capacity(free.len() + 1);
        prefix.push(0i64);
        for &x in &free {
            prefix.push(prefix.last().unwrap() + x);
        }
        let smallest = |c: usize| prefix[c.min(free.len())];
        let largest = |c: usize| prefix[free.len()] - prefix[free.len() - c.min(free.len())];
        let pending = self.pending_by_direction(w);
        for (v, &(pin, pout)) in pending.iter().enumerate() {
            if w.pending[v] == 0 {
                continue;
            }
            let max = w.partial[v] + largest(pin) - smallest(pout);
            let min = w.partial[v] + smallest(pin) - largest(pout);
            if max < lo || min > hi {
                return false;
            }
        }
        true
    }

    /// Unplaced incoming/outgoing arc counts per vertex.
    fn pending_by_direction(&self, w: &Walk) -> Vec<(usize, usize)> {
        let placed = w.labels.len().saturating_sub(self.nv);
        let mut counts = vec![(0usize, 0usize); self.nv];
        for &(t, h) in &self.arcs[placed..] {
            counts[h].0 += 1;
            counts[t].1 += 1;
        }
        counts
    }

    fn forced_arc_label(&self, w: &Walk, arc: usize) -> Forced {
        let (t, h) = self.arcs[arc];
        let mut forced: Option<i64> = None;
        let mut force = |x: i64| match forced {
            Some(y) if y != x => false,
            _ => {
                forced = Some(x);
                true
            }
        };
        match (self.q.target.side, w.shape) {
            (Side::Arc, SideShape::Magic(mu)) => {
                force(mu - i64::from(w.labels[h]) + i64::from(w.labels[t]));
            }
            (Side::Vertex, SideShape::Magic(mu)) => {
                if w.pending[h] == 1 && !force(mu - w.partial[h]) {
                    return Forced::Impossible;
                }
                if w.pending[t] == 1 && !force(w.partial[t] - mu) {
                    return Forced::Impossible;
                }
            }
            _ => {}
        }
        match forced {
            None => Forced::Free,
            Some(x) if x >= 1 && x <= self.size as i64 => Forced::Label(x as u32),
            Some(_) => Forced::Impossible,
        }
    }
}

enum Forced {
    Free,
    Label(u32),
    Impossible,
}

/// Checks a newly determined weight against the side's shape.
fn record(w: &mut Walk, weight: i64) -> bool {
    if !w.shape.admits(weight) {
        return false;
    }
    if w.shape.needs_distinct() {
        if w.seen.contains(&weight) {
            return false;
        }
        w.seen.push(weight);
    }
    true
}

fn labels_in(mask: u64) -> impl Iterator<Item = u32> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let bit = m.trailing_zeros();
        m &= m - 1;
        Some(bit + 1)
    })
}

/// Whether a dicycle of length `n` has an arc-magic labeling exactly when
/// it has a vertex-magic one, decided by two exhaustive counts.
pub fn verify_iff_cycles(n: usize, cap: usize) -> Result<bool, SearchError> {
    let g = crate::graph::build_family(crate::graph::Family::Cycle, n, None, None)
        .map_err(|_| SearchError::TooLarge(2 * n))?;
    let arc = search(&SearchQuery::new(g.clone(), Target::ARC_MAGIC).cap(cap))?;
    let vertex = search(&SearchQuery::new(g, Target::VERTEX_MAGIC).cap(cap))?;
    Ok((arc.solutions_found > 0) == (vertex.solutions_found > 0))
}
