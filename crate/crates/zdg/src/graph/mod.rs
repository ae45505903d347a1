//! Finite labeled graphs and the exact oracles evaluated on them.
//!
//! Vertex indices are always label-ascending, so every oracle that iterates
//! by index iterates in label order and its witnesses are reproducible.

mod basic;
mod bits;
mod chordal;
mod clique;
mod color;
mod domination;
mod holes;
mod iso;
mod planar;
mod report;

pub use basic::{
    basic_invariants, complete_multipartite, degree_sequence, is_bipartite, metric_invariants,
    simplicial_vertices, BasicInvariants, MetricInvariants,
};
pub use bits::Bits;
pub use chordal::{is_chordal, ChordalResult};
pub use clique::{clique_census, clique_number, independence_number, vertex_cover_number};
pub use color::{chromatic_number, is_k_colorable, Chromatic};
pub use domination::{domination_stats, DominationStats};
pub use holes::{find_odd_hole, is_perfect, OddCycleKind, PerfectResult, PerfectWitness};
pub use iso::are_isomorphic;
pub use planar::is_planar;
pub use report::{property_report, PropertyReport, ReportOptions};

use serde::{Serialize, Serializer};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("labels must be strictly ascending (duplicate or out of order at {0})")]
    UnsortedLabels(String),
    #[error("vertex index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("{0} is undefined on graphs with loops")]
    LoopsPresent(&'static str),
    #[error("unknown vertex label {0}")]
    UnknownLabel(String),
    #[error("search budget of {limit} nodes exhausted in {what}")]
    ResourceLimit { what: &'static str, limit: u64 },
    #[error("{vertices} vertices exceeds the cap of {cap} for {what}")]
    TooLarge {
        what: &'static str,
        vertices: usize,
        cap: usize,
    },
}

impl GraphError {
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            GraphError::ResourceLimit { .. } | GraphError::TooLarge { .. }
        )
    }
}

/// Opaque vertex label: a residue, a divisor, or a tuple of residues.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Int(u64),
    Tuple(Vec<u64>),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(x) => write!(f, "{x}"),
            Label::Tuple(t) => {
                let parts: Vec<String> = t.iter().map(u64::to_string).collect();
                write!(f, "{}", parts.join(","))
            }
        }
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Label::Int(x) => s.serialize_u64(*x),
            Label::Tuple(t) => t.serialize(s),
        }
    }
}

impl Label {
    pub fn as_int(&self) -> Option<u64> {
        match self {
            Label::Int(x) => Some(*x),
            Label::Tuple(_) => None,
        }
    }
}

/// A nonnegative count or infinity; infinity serializes as `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(x) => write!(f, "{x}"),
            Extended::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Extended {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(x) => s.serialize_u64(*x),
            Extended::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Node budget shared by one exponential search.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: Option<u64>,
    used: u64,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            limit: None,
            used: 0,
        }
    }

    pub fn new(limit: u64) -> Self {
        Budget {
            limit: Some(limit),
            used: 0,
        }
    }

    pub fn from_option(limit: Option<u64>) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    #[inline]
    pub fn tick(&mut self, what: &'static str) -> Result<(), GraphError> {
        self.used += 1;
        match self.limit {
            Some(limit) if self.used > limit => Err(GraphError::ResourceLimit { what, limit }),
            _ => Ok(()),
        }
    }
}

/// Simple undirected graph with an optional loop set, immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    labels: Vec<Label>,
    adj: Vec<Bits>,
    loops: Bits,
    edge_count: usize,
}

impl LabeledGraph {
    fn check_labels(labels: &[Label]) -> Result<(), GraphError> {
        for w in labels.windows(2) {
            if w[0] >= w[1] {
                return Err(GraphError::UnsortedLabels(w[1].to_string()));
            }
        }
        Ok(())
    }

    /// Builds the graph whose edges are the pairs i < j with `edge(i, j)`.
    pub fn from_fn(
        labels: Vec<Label>,
        mut edge: impl FnMut(usize, usize) -> bool,
        mut looped: impl FnMut(usize) -> bool,
    ) -> Result<Self, GraphError> {
        Self::check_labels(&labels)?;
        let n = labels.len();
        let mut adj = vec![Bits::new(n); n];
        let mut loops = Bits::new(n);
        let mut edge_count = 0;
        for i in 0..n {
            if looped(i) {
                loops.insert(i);
            }
            for j in i + 1..n {
                if edge(i, j) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                    edge_count += 1;
                }
            }
        }
        Ok(LabeledGraph {
            labels,
            adj,
            loops,
            edge_count,
        })
    }

    pub fn from_edges(
        labels: Vec<Label>,
        edges: &[(usize, usize)],
        loops: &[usize],
    ) -> Result<Self, GraphError> {
        Self::check_labels(&labels)?;
        let n = labels.len();
        let mut adj = vec![Bits::new(n); n];
        let mut loop_bits = Bits::new(n);
        let mut edge_count = 0;
        for &(i, j) in edges {
            for k in [i, j] {
                if k >= n {
                    return Err(GraphError::IndexOutOfRange(k));
                }
            }
            if i == j {
                loop_bits.insert(i);
            } else if !adj[i].contains(j) {
                adj[i].insert(j);
                adj[j].insert(i);
                edge_count += 1;
            }
        }
        for &i in loops {
            if i >= n {
                return Err(GraphError::IndexOutOfRange(i));
            }
            loop_bits.insert(i);
        }
        Ok(LabeledGraph {
            labels,
            adj,
            loops: loop_bits,
            edge_count,
        })
    }

    /// Graph on integer labels 0..n.
    pub fn unlabeled(n: usize, edges: &[(usize, usize)]) -> Self {
        let labels = (0..n as u64).map(Label::Int).collect();
        Self::from_edges(labels, edges, &[]).expect("indices checked by caller")
    }

    pub fn empty() -> Self {
        Self::unlabeled(0, &[])
    }

    pub fn complete(n: usize) -> Self {
        let labels = (0..n as u64).map(Label::Int).collect();
        Self::from_fn(labels, |_, _| true, |_| false).expect("ascending labels")
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::unlabeled(n, &edges)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Self::unlabeled(n, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.labels.binary_search(label).ok()
    }

    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    #[inline]
    pub fn neighbors(&self, i: usize) -> &Bits {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count()
    }

    pub fn has_loop(&self, i: usize) -> bool {
        self.loops.contains(i)
    }

    pub fn has_loops(&self) -> bool {
        !self.loops.is_empty()
    }

    pub fn loops(&self) -> impl Iterator<Item = usize> + '_ {
        self.loops.iter()
    }

    /// Edges (i, j) with i < j, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count())
            .flat_map(move |i| self.adj[i].iter().filter(move |&j| j > i).map(move |j| (i, j)))
    }

    pub fn require_loop_free(&self, what: &'static str) -> Result<(), GraphError> {
        if self.has_loops() {
            Err(GraphError::LoopsPresent(what))
        } else {
            Ok(())
        }
    }

    /// Loop-free complement on the same labels.
    pub fn complement(&self) -> LabeledGraph {
        let n = self.vertex_count();
        let mut adj = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = self.adj[i].complement();
            row.remove(i);
            adj.push(row);
        }
        LabeledGraph {
            labels: self.labels.clone(),
            adj,
            loops: Bits::new(n),
            edge_count: n * n.saturating_sub(1) / 2 - self.edge_count,
        }
    }

    /// Induced subgraph on ascending indices.
    pub fn induced(&self, keep: &[usize]) -> LabeledGraph {
        let labels: Vec<Label> = keep.iter().map(|&i| self.labels[i].clone()).collect();
        LabeledGraph::from_fn(
            labels,
            |a, b| self.adjacent(keep[a], keep[b]),
            |a| self.has_loop(keep[a]),
        )
        .expect("subsequence of ascending labels stays ascending")
    }

    /// Drops every vertex whose neighborhood (open for nonadjacent twins,
    /// closed for adjacent ones) repeats an earlier vertex's, until stable.
    /// Returns the kept original indices, ascending.
    pub fn twin_representatives(&self, closed_too: bool) -> Vec<usize> {
        let mut keep: Vec<usize> = (0..self.vertex_count()).collect();
        loop {
            let alive = Bits::from_indices(self.vertex_count(), keep.iter().copied());
            let mut seen_open = std::collections::HashSet::new();
            let mut seen_closed = std::collections::HashSet::new();
            let mut next = Vec::with_capacity(keep.len());
            for &v in &keep {
                let open = self.adj[v].and(&alive);
                let mut closed = open.clone();
                closed.insert(v);
                if seen_open.contains(&open) || (closed_too && seen_closed.contains(&closed)) {
                    continue;
                }
                seen_open.insert(open);
                seen_closed.insert(closed);
                next.push(v);
            }
            if next.len() == keep.len() {
                return keep;
            }
            keep = next;
        }
    }

    /// Checks that `cycle` is an induced cycle of the graph (consecutive
    /// members adjacent, all other pairs not).
    pub fn is_induced_cycle(&self, cycle: &[usize]) -> bool {
        let k = cycle.len();
        if k < 3 {
            return false;
        }
        for a in 0..k {
            for b in a + 1..k {
                let consecutive = b == a + 1 || (a == 0 && b == k - 1);
                if cycle[a] == cycle[b] || self.adjacent(cycle[a], cycle[b]) != consecutive {
                    return false;
                }
            }
        }
        true
    }

    pub fn labels_of(&self, idx: &[usize]) -> Vec<Label> {
        idx.iter().map(|&i| self.labels[i].clone()).collect()
    }
}

pub(crate) fn check_cap(what: &'static str, g: &LabeledGraph, cap: Option<usize>) -> Result<(), GraphError> {
    match cap {
        Some(cap) if g.vertex_count() > cap => Err(GraphError::TooLarge {
            what,
            vertices: g.vertex_count(),
            cap,
        }),
        _ => Ok(()),
    }
}
