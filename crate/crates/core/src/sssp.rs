//! Single-source beer distances: one shortest-path pass plus one traversal
//! of the dual from a face containing the source.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::graph::{BeerGraph, PathInG, VertexId, NONE};
use crate::weight::Weight;

/// Distances and beer distances from one source, with predecessors.
///
/// For a vertex `v` first reached through a face `(a, b, v)`, `p(v)` is `a`
/// or `b` and `beer_prefix(v)` tells whether the beer store lies on the
/// `s → p(v)` part (then `p(v) → v` is a single edge) or on the
/// `p(v) → v` part (then `s → p(v)` is a plain shortest path).
#[derive(Clone, Debug)]
pub struct SsspBeerResult {
    source: VertexId,
    dist: Vec<Weight>,
    beer: Vec<Weight>,
    tree: Vec<u32>,
    p: Vec<u32>,
    beer_prefix: Vec<bool>,
}

impl SsspBeerResult {
    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn dist(&self, v: VertexId) -> Weight {
        self.dist[v]
    }

    pub fn beer_dist(&self, v: VertexId) -> Weight {
        self.beer[v]
    }

    pub fn dists(&self) -> &[Weight] {
        &self.dist
    }

    pub fn beer_dists(&self) -> &[Weight] {
        &self.beer
    }

    /// `p(v)` and whether the beer store precedes it; `None` on the source face.
    pub fn predecessor(&self, v: VertexId) -> Option<(VertexId, bool)> {
        let p = self.p[v];
        (p != NONE).then(|| (p as usize, self.beer_prefix[v]))
    }

    /// Shortest path from the source in the normalized graph.
    fn plain_path_into(&self, v: VertexId, out: &mut Vec<VertexId>) {
        let start = out.len();
        let mut x = v;
        out.push(x);
        while x != self.source {
            x = self.tree[x] as usize;
            out.push(x);
        }
        out[start..].reverse();
    }
}

/// Shortest-path distances and tree by Dijkstra with a binary heap.
fn shortest_paths(graph: &BeerGraph, s: VertexId) -> (Vec<Weight>, Vec<u32>) {
    let n = graph.n();
    let mut dist = vec![Weight::INFINITY; n];
    let mut tree = vec![NONE; n];
    let mut heap = BinaryHeap::new();
    dist[s] = Weight::ZERO;
    heap.push(Reverse((Weight::ZERO, s as u32)));
    while let Some(Reverse((d, v))) = heap.pop() {
        let v = v as usize;
        if d > dist[v] {
            continue;
        }
        for (u, e) in graph.incident(v) {
            let nd = d + graph.weight(e);
            if nd < dist[u] {
                dist[u] = nd;
                tree[u] = v as u32;
                heap.push(Reverse((nd, u as u32)));
            }
        }
    }
    (dist, tree)
}

impl Engine {
    /// `dist(s,·)` and `dist_B(s,·)` for all vertices.
    pub fn sssp_beer(&self, s: VertexId) -> Result<SsspBeerResult> {
        self.check(s)?;
        let g = self.graph();
        let d = self.dual();
        let tables = self.tables();
        let n = g.n();
        let (dist, tree) = shortest_paths(g, s);
        let mut beer = vec![Weight::INFINITY; n];
        let mut p = vec![NONE; n];
        let mut beer_prefix = vec![false; n];

        let fs = d.face_of(s);
        for &x in &d.face(fs).vertices {
            beer[x] = tables.beer_dist(g, s, x)?;
        }
        let mut seen = vec![false; d.face_count()];
        seen[fs] = true;
        let mut stack = vec![fs];
        while let Some(f) = stack.pop() {
            for (h, e) in d.neighbors(f) {
                if seen[h] {
                    continue;
                }
                seen[h] = true;
                stack.push(h);
                let (a, b) = (g.edge(e).u, g.edge(e).v);
                let c = d.third_vertex(g, h, e);
                let (eac, ebc) = (g.edge_id(a, c).unwrap(), g.edge_id(b, c).unwrap());
                let candidates = [
                    (dist[a] + tables.edge_beer(eac), a, false),
                    (beer[a] + g.weight(eac), a, true),
                    (dist[b] + tables.edge_beer(ebc), b, false),
                    (beer[b] + g.weight(ebc), b, true),
                ];
                let mut best = candidates[0];
                for cand in &candidates[1..] {
                    if cand.0 < best.0 {
                        best = *cand;
                    }
                }
                beer[c] = best.0;
                p[c] = best.1 as u32;
                beer_prefix[c] = best.2;
            }
        }
        Ok(SsspBeerResult {
            source: s,
            dist,
            beer,
            tree,
            p,
            beer_prefix,
        })
    }

    /// `SP_B(s,v)` in the normalized graph from a single-source result.
    pub fn sssp_beer_walk(&self, result: &SsspBeerResult, v: VertexId) -> Result<PathInG> {
        self.check(v)?;
        let s = result.source;
        if !result.beer[v].is_finite() {
            return Err(Error::Unreachable(s, v));
        }
        let g = self.graph();
        let mut suffix = Vec::new();
        let mut x = v;
        let mut out = Vec::new();
        loop {
            match result.predecessor(x) {
                None => {
                    self.tables().beer_walk_into(g, s, x, &mut out)?;
                    break;
                }
                Some((px, true)) => {
                    suffix.push(x);
                    x = px;
                }
                Some((px, false)) => {
                    result.plain_path_into(px, &mut out);
                    self.tables().beer_walk_into(g, px, x, &mut out)?;
                    break;
                }
            }
        }
        out.extend(suffix.iter().rev());
        PathInG::from_walk(g, out)
    }

    /// `SP_B(s,v)` in the input graph from a single-source result.
    pub fn sssp_beer_path(&self, result: &SsspBeerResult, v: VertexId) -> Result<PathInG> {
        let walk = self.sssp_beer_walk(result, v)?;
        self.normalized().expand_walk(&walk.vertices)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn w(x: f64) -> Weight {
        Weight::raw(x)
    }

    #[test]
    fn triangle() {
        let e = Engine::new(&fixtures::fix_t3()).unwrap();
        let r = e.sssp_beer(0).unwrap();
        assert_eq!(r.dists(), &[w(0.0), w(1.0), w(1.0)]);
        assert_eq!(r.beer_dists(), &[w(2.0), w(2.0), w(1.0)]);
        assert_eq!(e.sssp_beer_path(&r, 1).unwrap().vertices, vec![0, 2, 1]);
        let r2 = e.sssp_beer(2).unwrap();
        assert_eq!(e.sssp_beer_path(&r2, 2).unwrap().vertices, vec![2]);
    }

    #[test]
    fn hexagon_from_one() {
        let e = Engine::new(&fixtures::fix_h6()).unwrap();
        let r = e.sssp_beer(1).unwrap();
        assert_eq!(r.beer_dist(4), w(3.0));
        assert_eq!(r.beer_dist(1), w(4.0));
        assert_eq!(e.sssp_beer_path(&r, 4).unwrap().weight, w(3.0));
    }

    #[test]
    fn store_at_source() {
        let g = fixtures::fix_f4();
        let e = Engine::new(&g).unwrap();
        let r = e.sssp_beer(3).unwrap();
        for v in 0..4 {
            assert_eq!(r.beer_dist(v), r.dist(v));
        }
    }

    #[test]
    fn agrees_with_pair_queries_everywhere() {
        for name in fixtures::NAMES {
            let g = fixtures::fixture(name).unwrap();
            let e = Engine::new(&g).unwrap();
            for s in 0..g.n() {
                let r = e.sssp_beer(s).unwrap();
                for v in 0..g.n() {
                    assert_eq!(r.dist(v), e.dist(s, v).unwrap());
                    assert_eq!(
                        r.beer_dist(v),
                        e.beer_dist(s, v).unwrap(),
                        "{name} {s}->{v}"
                    );
                    let p = e.sssp_beer_path(&r, v).unwrap();
                    assert_eq!(p.weight, r.beer_dist(v));
                    assert!(p.visits_beer(&g));
                    assert_eq!((p.vertices[0], *p.vertices.last().unwrap()), (s, v));
                }
            }
        }
    }
}
