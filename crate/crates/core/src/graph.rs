//! Embedded outerplanar beer graphs.
//!
//! The embedding is carried by the vertex numbering alone: `0..n` enumerate the
//! outer face clockwise, so two chords `(a,b)` and `(c,d)` cross exactly when
//! `a < c < b < d`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::Weight;

pub type VertexId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

pub(crate) const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: Weight,
}

impl Edge {
    /// The endpoint that is not `x`.
    #[inline]
    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

/// An undirected graph with positive weights, a set of beer stores, and the
/// outer-face embedding implied by its vertex numbering.
///
/// Edges are stored canonically (`u < v`) and sorted, so structurally equal
/// graphs compare equal. Adjacency lists are sorted by neighbour.
#[derive(Clone, Debug, PartialEq)]
pub struct BeerGraph {
    n: usize,
    edges: Vec<Edge>,
    beer: Vec<bool>,
    offsets: Vec<u32>,
    adj: Vec<(u32, u32)>,
}

impl BeerGraph {
    /// Builds a graph; endpoints must be in range and weights positive (or `+∞`).
    ///
    /// Structural properties (connectivity, planarity, simplicity) are checked
    /// by [`validate`], not here, so that invalid inputs can still be reported.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId, Weight)>,
        beer: impl IntoIterator<Item = VertexId>,
    ) -> Result<Self> {
        let mut list = Vec::new();
        for (a, b, w) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if !(w.value() > 0.0) {
                return Err(Error::InvalidWeight(a, b, w.value()));
            }
            let (u, v) = if a <= b { (a, b) } else { (b, a) };
            list.push(Edge { u, v, weight: w });
        }
        list.sort_by(|x, y| (x.u, x.v).cmp(&(y.u, y.v)).then(x.weight.cmp(&y.weight)));

        let mut is_beer = vec![false; n];
        for b in beer {
            if b >= n {
                return Err(Error::VertexOutOfRange { vertex: b, n });
            }
            is_beer[b] = true;
        }

        let mut deg = vec![0u32; n + 1];
        for e in &list {
            deg[e.u] += 1;
            if e.v != e.u {
                deg[e.v] += 1;
            }
        }
        let mut offsets = vec![0u32; n + 1];
        for i in 0..n {
            offsets[i + 1] = offsets[i] + deg[i];
        }
        let mut fill: Vec<u32> = offsets[..n].to_vec();
        let mut adj = vec![(0u32, 0u32); offsets[n] as usize];
        for (id, e) in list.iter().enumerate() {
            adj[fill[e.u] as usize] = (e.v as u32, id as u32);
            fill[e.u] += 1;
            if e.v != e.u {
                adj[fill[e.v] as usize] = (e.u as u32, id as u32);
                fill[e.v] += 1;
            }
        }
        for v in 0..n {
            adj[offsets[v] as usize..offsets[v + 1] as usize].sort_unstable();
        }
        Ok(BeerGraph {
            n,
            edges: list,
            beer: is_beer,
            offsets,
            adj,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    #[inline]
    pub fn weight(&self, e: EdgeId) -> Weight {
        self.edges[e].weight
    }

    #[inline]
    pub fn is_beer(&self, v: VertexId) -> bool {
        self.beer[v]
    }

    pub fn beer_stores(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.beer
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i)
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        (self.offsets[v + 1] - self.offsets[v]) as usize
    }

    #[inline]
    pub(crate) fn adj_offset(&self, v: VertexId) -> usize {
        self.offsets[v] as usize
    }

    /// `(neighbour, edge id)` pairs of `v`, sorted by neighbour.
    #[inline]
    pub(crate) fn adjacency(&self, v: VertexId) -> &[(u32, u32)] {
        &self.adj[self.offsets[v] as usize..self.offsets[v + 1] as usize]
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency(v).iter().map(|&(u, _)| u as usize)
    }

    /// Incident `(neighbour, edge id)` pairs of `v`, sorted by neighbour.
    pub fn incident(&self, v: VertexId) -> impl Iterator<Item = (VertexId, EdgeId)> + '_ {
        self.adjacency(v)
            .iter()
            .map(|&(u, e)| (u as usize, e as usize))
    }

    /// Index of `u` within the sorted adjacency of `v`.
    #[inline]
    pub(crate) fn adj_index(&self, v: VertexId, u: VertexId) -> Option<usize> {
        self.adjacency(v)
            .binary_search_by(|&(x, _)| (x as usize).cmp(&u))
            .ok()
    }

    /// Id of edge `(u,v)` in either orientation; O(log deg).
    #[inline]
    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.adj_index(a, b)
            .map(|i| self.adjacency(a)[i].1 as usize)
    }

    pub fn edge_weight(&self, u: VertexId, v: VertexId) -> Option<Weight> {
        self.edge_id(u, v).map(|e| self.edges[e].weight)
    }

    /// Same structure and stores, new weights (indexed by edge id).
    pub fn with_weights(&self, weights: &[Weight]) -> BeerGraph {
        let mut g = self.clone();
        for (e, w) in g.edges.iter_mut().zip(weights) {
            e.weight = *w;
        }
        g
    }

    /// Same structure and weights, new beer set.
    pub fn with_beer(&self, beer: impl IntoIterator<Item = VertexId>) -> Result<BeerGraph> {
        let mut g = self.clone();
        g.beer = vec![false; self.n];
        for b in beer {
            if b >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: b,
                    n: self.n,
                });
            }
            g.beer[b] = true;
        }
        Ok(g)
    }

    pub fn from_json(text: &str) -> Result<BeerGraph> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        let mut edges = Vec::with_capacity(file.edges.len());
        for (u, v, w) in file.edges {
            if !w.is_finite() || w <= 0.0 {
                return Err(Error::InvalidWeight(u, v, w));
            }
            edges.push((u, v, Weight::raw(w)));
        }
        BeerGraph::new(file.n, edges, file.beer)
    }

    /// Serializes in the canonical file layout:
    /// `{"n": 4, "edges": [[0,1,1.0],...], "beer": [3]}`.
    ///
    /// Edges are written in the order given by `order` when present (so a
    /// fixture can keep its hand-written listing), otherwise canonically.
    pub fn to_json(&self) -> Result<String> {
        self.to_json_ordered(None)
    }

    pub(crate) fn to_json_ordered(&self, order: Option<&[(VertexId, VertexId)]>) -> Result<String> {
        let mut out = format!("{{\"n\": {}, \"edges\": [", self.n);
        let pairs: Vec<(VertexId, VertexId, Weight)> = match order {
            Some(o) => o
                .iter()
                .map(|&(a, b)| {
                    self.edge_weight(a, b)
                        .map(|w| (a, b, w))
                        .ok_or(Error::NotAnEdge(a, b))
                })
                .collect::<Result<_>>()?,
            None => self.edges.iter().map(|e| (e.u, e.v, e.weight)).collect(),
        };
        for (i, (a, b, w)) in pairs.iter().enumerate() {
            if !w.is_finite() {
                return Err(Error::Format(format!(
                    "edge ({a},{b}) has infinite weight, which the file format cannot express"
                )));
            }
            if i > 0 {
                out.push(',');
            }
            let num =
                serde_json::to_string(&w.value()).map_err(|e| Error::Format(e.to_string()))?;
            out.push_str(&format!("[{a},{b},{num}]"));
        }
        out.push_str("], \"beer\": [");
        let stores: Vec<String> = self.beer_stores().map(|b| b.to_string()).collect();
        out.push_str(&stores.join(","));
        out.push_str("]}");
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    n: usize,
    edges: Vec<(usize, usize, f64)>,
    beer: Vec<usize>,
}

/// One reason a graph is not a valid embedded outerplanar graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Empty,
    SelfLoop(VertexId),
    ParallelEdge(VertexId, VertexId),
    TooManyEdges { edges: usize, limit: usize },
    Crossing((VertexId, VertexId), (VertexId, VertexId)),
    Disconnected,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "empty graph"),
            Violation::SelfLoop(v) => write!(f, "self-loop at {v}"),
            Violation::ParallelEdge(u, v) => write!(f, "parallel edges ({u},{v})"),
            Violation::TooManyEdges { edges, limit } => {
                write!(f, "too many edges: {edges} > {limit}")
            }
            Violation::Crossing((a, b), (c, d)) => write!(f, "crossing chords ({a},{b}),({c},{d})"),
            Violation::Disconnected => write!(f, "disconnected"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(Error::InvalidGraph(self.violations))
        }
    }
}

/// Checks every invariant of an embedded outerplanar beer graph.
pub fn validate(graph: &BeerGraph) -> ValidationReport {
    let mut violations = Vec::new();
    let n = graph.n();
    if n == 0 {
        violations.push(Violation::Empty);
        return ValidationReport { violations };
    }
    for e in graph.edges() {
        if e.u == e.v {
            violations.push(Violation::SelfLoop(e.u));
        }
    }
    for w in graph.edges().windows(2) {
        if (w[0].u, w[0].v) == (w[1].u, w[1].v) && w[0].u != w[0].v {
            violations.push(Violation::ParallelEdge(w[0].u, w[0].v));
        }
    }
    let limit = if n >= 2 { 2 * n - 3 } else { 0 };
    if graph.edge_count() > limit {
        violations.push(Violation::TooManyEdges {
            edges: graph.edge_count(),
            limit,
        });
    }
    if let Some((x, y)) = find_crossing(graph.edges()) {
        violations.push(Violation::Crossing(x, y));
    }
    if !is_connected(graph) {
        violations.push(Violation::Disconnected);
    }
    ValidationReport { violations }
}

/// Returns one crossing pair, if any, in O(E log E).
///
/// Edges sorted by left endpoint ascending and right endpoint descending are
/// scanned with a stack of open right endpoints; an edge crosses the innermost
/// open edge exactly when it starts inside it and ends beyond it.
fn find_crossing(edges: &[Edge]) -> Option<((VertexId, VertexId), (VertexId, VertexId))> {
    let mut sorted: Vec<(VertexId, VertexId)> = edges
        .iter()
        .filter(|e| e.u != e.v)
        .map(|e| (e.u, e.v))
        .collect();
    sorted.sort_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
    sorted.dedup();
    let mut stack: Vec<(VertexId, VertexId)> = Vec::new();
    for &(a, b) in &sorted {
        while let Some(&(_, top)) = stack.last() {
            if top <= a {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&(c, top)) = stack.last() {
            if a < top && top < b {
                return Some(((c, top), (a, b)));
            }
        }
        stack.push((a, b));
    }
    None
}

fn is_connected(graph: &BeerGraph) -> bool {
    let n = graph.n();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for u in graph.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                count += 1;
                queue.push_back(u);
            }
        }
    }
    count == n
}

/// True iff the graph has `2n-3` edges, i.e. every interior face is a triangle.
pub fn is_maximal(graph: &BeerGraph) -> Result<bool> {
    validate(graph).into_result()?;
    let n = graph.n();
    Ok(n >= 3 && graph.edge_count() == 2 * n - 3)
}

/// Dense `n × n` table of distances.
#[derive(Clone, Debug, PartialEq)]
pub struct DistTable {
    n: usize,
    data: Vec<Weight>,
}

impl DistTable {
    pub fn new(n: usize) -> DistTable {
        DistTable {
            n,
            data: vec![Weight::INFINITY; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: VertexId, v: VertexId) -> Weight {
        self.data[u * self.n + v]
    }

    #[inline]
    pub fn set(&mut self, u: VertexId, v: VertexId, w: Weight) {
        self.data[u * self.n + v] = w;
    }

    pub fn row(&self, u: VertexId) -> &[Weight] {
        &self.data[u * self.n..(u + 1) * self.n]
    }
}

/// True iff every edge is a shortest path between its endpoints.
pub fn satisfies_gti(graph: &BeerGraph, dist: &DistTable) -> Result<bool> {
    if dist.n() != graph.n() {
        return Err(Error::DimensionMismatch {
            expected: graph.n(),
            got: dist.n(),
        });
    }
    Ok(graph.edges().iter().all(|e| dist.get(e.u, e.v) == e.weight))
}

/// A walk in a graph: consecutive vertices are adjacent; vertices may repeat.
#[derive(Clone, Debug, PartialEq)]
pub struct PathInG {
    pub vertices: Vec<VertexId>,
    pub weight: Weight,
}

impl PathInG {
    /// Checks adjacency and sums the traversed weights left to right.
    pub fn from_walk(graph: &BeerGraph, vertices: Vec<VertexId>) -> Result<PathInG> {
        if vertices.is_empty() {
            return Err(Error::InvalidParams("empty walk".into()));
        }
        let mut weight = Weight::ZERO;
        for w in vertices.windows(2) {
            let e = graph
                .edge_weight(w[0], w[1])
                .ok_or(Error::NotAnEdge(w[0], w[1]))?;
            weight = weight + e;
        }
        Ok(PathInG { vertices, weight })
    }

    pub fn visits_beer(&self, graph: &BeerGraph) -> bool {
        self.vertices.iter().any(|&v| graph.is_beer(v))
    }

    /// Number of vertices on the walk.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

impl fmt::Display for PathInG {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", vs.join(" "))
    }
}

/// Appends `walk` to `out`, sharing the junction vertex.
pub(crate) fn append_walk(out: &mut Vec<VertexId>, walk: &[VertexId]) {
    match out.last() {
        Some(&last) if walk.first() == Some(&last) => out.extend_from_slice(&walk[1..]),
        _ => out.extend_from_slice(walk),
    }
}
