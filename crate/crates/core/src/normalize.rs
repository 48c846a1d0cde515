//! Completion of an outerplanar graph to a maximal one, and the generalized
//! triangle inequality (every edge is a shortest path).

use crate::dual::DualTree;
use crate::error::{Error, Result};
use crate::graph::{validate, BeerGraph, EdgeId, PathInG, VertexId, NONE};
use crate::weight::Weight;

/// A maximal outerplanar graph in which `ω(u,v) = dist(u,v)` for every edge,
/// with the data needed to translate its edges back to input paths.
#[derive(Clone, Debug)]
pub struct NormalizedGraph {
    graph: BeerGraph,
    added: Vec<EdgeId>,
    gti_parent: Vec<u32>,
    original: BeerGraph,
}

impl NormalizedGraph {
    pub fn graph(&self) -> &BeerGraph {
        &self.graph
    }

    pub fn original(&self) -> &BeerGraph {
        &self.original
    }

    /// Ids (in [`Self::graph`]) of the edges absent from the input, ascending.
    pub fn added_edges(&self) -> &[EdgeId] {
        &self.added
    }

    pub fn is_added(&self, e: EdgeId) -> bool {
        self.added.binary_search(&e).is_ok()
    }

    /// The relaxing vertex `p(u,v)`, if the edge's weight was lowered.
    pub fn gti_parent(&self, u: VertexId, v: VertexId) -> Result<Option<VertexId>> {
        let e = self.graph.edge_id(u, v).ok_or(Error::NotAnEdge(u, v))?;
        Ok(self.gti_parent_of(e))
    }

    #[inline]
    pub fn gti_parent_of(&self, e: EdgeId) -> Option<VertexId> {
        let p = self.gti_parent[e];
        (p != NONE).then_some(p as usize)
    }

    /// Number of edges with a relaxing vertex.
    pub fn relaxed_count(&self) -> usize {
        self.gti_parent.iter().filter(|&&p| p != NONE).count()
    }

    /// The input-graph path realizing the weight of edge `(u,v)`.
    pub fn expand_edge(&self, u: VertexId, v: VertexId) -> Result<PathInG> {
        let mut out = vec![u];
        self.expand_into(u, v, &mut out)?;
        PathInG::from_walk(&self.original, out)
    }

    /// Appends the expansion of `(u,v)` minus its first vertex.
    pub(crate) fn expand_into(
        &self,
        u: VertexId,
        v: VertexId,
        out: &mut Vec<VertexId>,
    ) -> Result<()> {
        let mut stack = vec![(u, v)];
        while let Some((x, y)) = stack.pop() {
            let e = self.graph.edge_id(x, y).ok_or(Error::NotAnEdge(x, y))?;
            match self.gti_parent_of(e) {
                Some(w) => {
                    stack.push((w, y));
                    stack.push((x, w));
                }
                None => out.push(y),
            }
        }
        Ok(())
    }

    /// Translates a walk in the normalized graph into one in the input graph.
    pub fn expand_walk(&self, walk: &[VertexId]) -> Result<PathInG> {
        let first = *walk
            .first()
            .ok_or_else(|| Error::InvalidParams("empty walk".into()))?;
        let mut out = vec![first];
        for w in walk.windows(2) {
            self.expand_into(w[0], w[1], &mut out)?;
        }
        PathInG::from_walk(&self.original, out)
    }
}

/// Adds `+∞` edges until the graph is maximal outerplanar.
///
/// First the hull cycle `0,1,…,n−1` is closed. Every remaining interior face
/// lies directly below exactly one chord `(a,b)`, `b−a ≥ 2`: starting at the
/// largest neighbour of `a` below `b` and repeatedly following the largest
/// neighbour walks the face boundary up to `b`. Faces with more than three
/// vertices are fanned from `a`, their smallest vertex. Each edge bounds at
/// most two faces, so the walk is linear overall.
pub fn maximalize(graph: &BeerGraph) -> Result<(BeerGraph, Vec<EdgeId>)> {
    let n = graph.n();
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    validate(graph).into_result()?;
    let mut extra: Vec<(VertexId, VertexId)> = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        if graph.edge_id(i, j).is_none() {
            extra.push((i.min(j), i.max(j)));
        }
    }
    let hull = BeerGraph::new(
        n,
        graph
            .edges()
            .iter()
            .map(|e| (e.u, e.v, e.weight))
            .chain(extra.iter().map(|&(a, b)| (a, b, Weight::INFINITY))),
        graph.beer_stores(),
    )?;
    for e in hull.edges() {
        let (a, b) = (e.u, e.v);
        if b - a < 2 {
            continue;
        }
        let adj = hull.adjacency(a);
        let below = adj.partition_point(|&(x, _)| (x as usize) < b) - 1;
        let mut x = adj[below].0 as usize;
        while x != b {
            let next = hull
                .adjacency(x)
                .last()
                .expect("hull vertex has neighbours")
                .0 as usize;
            if next != b {
                extra.push((a, next));
            }
            x = next;
        }
    }
    if extra.is_empty() {
        return Ok((hull, Vec::new()));
    }
    let out = BeerGraph::new(
        n,
        graph
            .edges()
            .iter()
            .map(|e| (e.u, e.v, e.weight))
            .chain(extra.iter().map(|&(a, b)| (a, b, Weight::INFINITY))),
        graph.beer_stores(),
    )?;
    let mut added: Vec<EdgeId> = extra
        .iter()
        .map(|&(a, b)| out.edge_id(a, b).expect("just inserted"))
        .collect();
    added.sort_unstable();
    Ok((out, added))
}

/// Lowers every edge weight to the distance between its endpoints.
///
/// Post-order over the dual relaxes each face's parent edge through the
/// face's third vertex, giving distances inside the part below the edge;
/// pre-order then relaxes each face's other two edges through the parent
/// edge, giving full distances. Returns `δ` and `p` indexed by edge id; `p`
/// is set only on strict improvement.
pub fn enforce_gti(graph: &BeerGraph) -> Result<(Vec<Weight>, Vec<Option<VertexId>>)> {
    let dual = DualTree::build(graph, None)?;
    let mut delta: Vec<Weight> = graph.edges().iter().map(|e| e.weight).collect();
    let mut parent: Vec<Option<VertexId>> = vec![None; graph.edge_count()];
    let relax =
        |delta: &mut [Weight], parent: &mut [Option<VertexId>], e: EdgeId, via: Weight, w| {
            if via < delta[e] {
                delta[e] = via;
                parent[e] = Some(w);
            }
        };
    let order: Vec<usize> = dual.preorder().collect();
    for &f in order.iter().rev() {
        if let Some(e) = dual.parent_edge(f) {
            let face = dual.face(f);
            let c = dual.third_vertex(graph, f, e);
            let ci = face.position(c).expect("third vertex");
            let [x, y] = face.edges_at(ci);
            let via = delta[x] + delta[y];
            relax(&mut delta, &mut parent, e, via, c);
        }
    }
    for &f in &order {
        let face = *dual.face(f);
        let snap = face.edges.map(|e| delta[e]);
        match dual.parent_edge(f) {
            None => {
                for k in 0..3 {
                    let (i, j) = ((k + 1) % 3, (k + 2) % 3);
                    // the vertex shared by the other two edges
                    let w = face.vertices[2 - k];
                    relax(&mut delta, &mut parent, face.edges[k], snap[i] + snap[j], w);
                }
            }
            Some(pe) => {
                let pk = face
                    .edges
                    .iter()
                    .position(|&e| e == pe)
                    .expect("parent edge");
                for k in 0..3 {
                    if k == pk {
                        continue;
                    }
                    let other = 3 - k - pk;
                    // vertex shared by the parent edge and the other child edge
                    let w = face.vertices[2 - k];
                    relax(
                        &mut delta,
                        &mut parent,
                        face.edges[k],
                        snap[pk] + snap[other],
                        w,
                    );
                }
            }
        }
    }
    Ok((delta, parent))
}

/// [`maximalize`] followed by [`enforce_gti`].
pub fn normalize(graph: &BeerGraph) -> Result<NormalizedGraph> {
    let (maximal, added) = maximalize(graph)?;
    let (delta, parent) = enforce_gti(&maximal)?;
    let gti_parent = parent
        .iter()
        .map(|p| p.map_or(NONE, |w| w as u32))
        .collect();
    Ok(NormalizedGraph {
        graph: maximal.with_weights(&delta),
        added,
        gti_parent,
        original: graph.clone(),
    })
}
