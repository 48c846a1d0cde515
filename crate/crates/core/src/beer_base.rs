//! Beer distances for every edge and every vertex in linear time, and their
//! beer paths in time linear in the path length.
//!
//! Each edge `(u,v)` splits the graph into the part containing the dual root
//! (`R`) and the rest (`¬R`). A post-order pass over the dual fills the `¬R`
//! values, a pre-order pass the `R` values; the answer is the smaller side.

use crate::dual::DualTree;
use crate::error::{Error, Result};
use crate::graph::{BeerGraph, Edge, EdgeId, PathInG, VertexId, NONE};
use crate::weight::Weight;

/// Beer distances restricted to one side of an edge `(lo, hi)`:
/// `pair = dist_B(lo,hi)`, `lo = dist_B(lo,lo)`, `hi = dist_B(hi,hi)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SideValues {
    pub pair: Weight,
    pub lo: Weight,
    pub hi: Weight,
}

impl SideValues {
    const UNKNOWN: SideValues = SideValues {
        pair: Weight::INFINITY,
        lo: Weight::INFINITY,
        hi: Weight::INFINITY,
    };

    #[inline]
    fn at(&self, edge: &Edge, x: VertexId) -> Weight {
        if x == edge.u {
            self.lo
        } else {
            self.hi
        }
    }
}

/// Which subpath of a stored minimum carries the beer store.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    /// An endpoint is a store: the path is `(u)` or `(u,v)`.
    Nil,
    /// `SP_B(u,x)` followed by `v`.
    Left(VertexId),
    /// `u` followed by `SP_B(x,v)`.
    Right(VertexId),
    /// No beer path exists.
    Unreachable,
}

/// Where a witness step continues: a vertex loop or an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Next {
    Vertex,
    Edge(u32),
}

#[derive(Clone, Copy, Debug)]
struct Step {
    witness: Witness,
    next: u32,
}

impl Step {
    const NIL: Step = Step {
        witness: Witness::Nil,
        next: NONE,
    };
    const NONE: Step = Step {
        witness: Witness::Unreachable,
        next: NONE,
    };

    fn next(&self) -> Next {
        if self.next == NONE {
            Next::Vertex
        } else {
            Next::Edge(self.next)
        }
    }
}

/// Per-edge and per-vertex beer distances with reconstruction witnesses.
#[derive(Clone, Debug)]
pub struct BeerBaseTables {
    below: Vec<SideValues>,
    above: Vec<SideValues>,
    edge_beer: Vec<Weight>,
    vertex_beer: Vec<Weight>,
    edge_step: Vec<Step>,
    vertex_step: Vec<Step>,
}

/// Values for edge `(u,v)` on the side of the face `(u,v,w)`, given the
/// values of `(u,w)` and `(v,w)` on their sides away from `(u,v)`.
/// Arguments are `(pair, self at u or v, self at w)`.
#[inline]
fn through(
    wuv: Weight,
    wuw: Weight,
    wvw: Weight,
    uw: (Weight, Weight, Weight),
    vw: (Weight, Weight, Weight),
) -> (Weight, Weight, Weight) {
    let pair = (uw.1 + wuv).min(uw.0 + wvw).min(wuv + vw.1).min(wuw + vw.0);
    let su = uw.1.min(wuw.double() + vw.2).min(wuv.double() + vw.1);
    let sv = vw.1.min(wvw.double() + uw.2).min(wuv.double() + uw.1);
    (pair, su, sv)
}

impl BeerBaseTables {
    /// `graph` must be maximal and satisfy the generalized triangle inequality.
    pub fn build(graph: &BeerGraph, dual: &DualTree) -> BeerBaseTables {
        let m = graph.edge_count();
        let beer = |x: VertexId| graph.is_beer(x);
        let mut below = vec![SideValues::UNKNOWN; m];
        let mut above = vec![SideValues::UNKNOWN; m];
        for (e, edge) in graph.edges().iter().enumerate() {
            if dual.is_hull_edge(e) {
                let (u, v, w) = (edge.u, edge.v, edge.weight);
                let self_of = |a: VertexId, b: VertexId| {
                    if beer(a) {
                        Weight::ZERO
                    } else if beer(b) {
                        w.double()
                    } else {
                        Weight::INFINITY
                    }
                };
                let pair = if beer(u) || beer(v) {
                    w
                } else {
                    Weight::INFINITY
                };
                below[e] = SideValues {
                    pair,
                    lo: self_of(u, v),
                    hi: self_of(v, u),
                };
            }
        }

        // Values of edge `e` of face `f` from the two other edges' sides.
        let apply = |f: usize, e: EdgeId, uw_side: &SideValues, vw_side: &SideValues| {
            let face = dual.face(f);
            let edge = graph.edge(e);
            let (u, v) = (edge.u, edge.v);
            let w = dual.third_vertex(graph, f, e);
            let (pu, pv, pw) = (
                face.position(u).unwrap(),
                face.position(v).unwrap(),
                face.position(w).unwrap(),
            );
            let (euw, evw) = (face.edge_between(pu, pw), face.edge_between(pv, pw));
            let (guw, gvw) = (graph.edge(euw), graph.edge(evw));
            let (pair, su, sv) = through(
                edge.weight,
                guw.weight,
                gvw.weight,
                (uw_side.pair, uw_side.at(guw, u), uw_side.at(guw, w)),
                (vw_side.pair, vw_side.at(gvw, v), vw_side.at(gvw, w)),
            );
            SideValues {
                pair,
                lo: su,
                hi: sv,
            }
        };
        let others = |f: usize, e: EdgeId| {
            let face = dual.face(f);
            let edge = graph.edge(e);
            let w = dual.third_vertex(graph, f, e);
            let pw = face.position(w).unwrap();
            (
                face.edge_between(face.position(edge.u).unwrap(), pw),
                face.edge_between(face.position(edge.v).unwrap(), pw),
            )
        };

        let order: Vec<usize> = dual.preorder().collect();
        for &f in order.iter().rev() {
            if let Some(e) = dual.parent_edge(f) {
                let (euw, evw) = others(f, e);
                below[e] = apply(f, e, &below[euw], &below[evw]);
            }
        }
        for &f in &order {
            let pe = dual.parent_edge(f);
            for &e in &dual.face(f).edges {
                if Some(e) == pe {
                    continue;
                }
                let (euw, evw) = others(f, e);
                let side = |x: EdgeId| if Some(x) == pe { &above[x] } else { &below[x] };
                above[e] = apply(f, e, side(euw), side(evw));
            }
        }

        let edge_beer: Vec<Weight> = (0..m)
            .map(|e| {
                let edge = graph.edge(e);
                if beer(edge.u) || beer(edge.v) {
                    edge.weight
                } else {
                    above[e].pair.min(below[e].pair)
                }
            })
            .collect();
        let vertex_beer: Vec<Weight> = (0..graph.n())
            .map(|u| {
                if beer(u) {
                    return Weight::ZERO;
                }
                match graph.incident(u).next() {
                    Some((_, e)) => {
                        let edge = graph.edge(e);
                        above[e].at(edge, u).min(below[e].at(edge, u))
                    }
                    None => Weight::INFINITY,
                }
            })
            .collect();
        let mut tables = BeerBaseTables {
            below,
            above,
            edge_beer,
            vertex_beer,
            edge_step: Vec::new(),
            vertex_step: Vec::new(),
        };
        tables.edge_step = (0..m)
            .map(|e| tables.edge_witness(graph, dual, e))
            .collect();
        tables.vertex_step = (0..graph.n())
            .map(|u| tables.vertex_witness(graph, u))
            .collect();
        tables
    }

    /// First minimal candidate for `dist_B(lo,hi)`, in order: `Left lo`,
    /// `Right hi`, then per containing face (ascending id) `Left w`, `Right w`.
    /// Candidates use final values only, so witnesses do not depend on the
    /// dual root.
    fn edge_witness(&self, graph: &BeerGraph, dual: &DualTree, e: EdgeId) -> Step {
        let edge = graph.edge(e);
        let (u, v, w) = (edge.u, edge.v, edge.weight);
        if graph.is_beer(u) || graph.is_beer(v) {
            return Step::NIL;
        }
        if !self.edge_beer[e].is_finite() {
            return Step::NONE;
        }
        let mut best = (
            self.vertex_beer[u] + w,
            Step {
                witness: Witness::Left(u),
                next: NONE,
            },
        );
        let mut offer = |val: Weight, step: Step| {
            if val < best.0 {
                best = (val, step);
            }
        };
        offer(
            w + self.vertex_beer[v],
            Step {
                witness: Witness::Right(v),
                next: NONE,
            },
        );
        let (f1, f2) = dual.edge_faces(e);
        for f in std::iter::once(f1).chain(f2) {
            let x = dual.third_vertex(graph, f, e);
            let face = dual.face(f);
            let (pu, pv, px) = (
                face.position(u).unwrap(),
                face.position(v).unwrap(),
                face.position(x).unwrap(),
            );
            let (eux, exv) = (face.edge_between(pu, px), face.edge_between(px, pv));
            offer(
                self.edge_beer[eux] + graph.weight(exv),
                Step {
                    witness: Witness::Left(x),
                    next: eux as u32,
                },
            );
            offer(
                graph.weight(eux) + self.edge_beer[exv],
                Step {
                    witness: Witness::Right(x),
                    next: exv as u32,
                },
            );
        }
        best.1
    }

    /// First neighbour `x` in adjacency order minimizing `ω(u,x) + dist_B(x,u)`.
    fn vertex_witness(&self, graph: &BeerGraph, u: VertexId) -> Step {
        if graph.is_beer(u) {
            return Step::NIL;
        }
        if !self.vertex_beer[u].is_finite() {
            return Step::NONE;
        }
        let mut best: Option<(Weight, Step)> = None;
        for (x, e) in graph.incident(u) {
            let val = graph.weight(e) + self.edge_beer[e];
            if best.is_none_or(|(b, _)| val < b) {
                best = Some((
                    val,
                    Step {
                        witness: Witness::Right(x),
                        next: e as u32,
                    },
                ));
            }
        }
        best.map_or(Step::NONE, |(_, s)| s)
    }

    /// `dist_B(u,v)` on the `¬R` side of edge `e`.
    pub fn below(&self, e: EdgeId) -> SideValues {
        self.below[e]
    }

    /// `dist_B(u,v)` on the `R` side of edge `e`.
    pub fn above(&self, e: EdgeId) -> SideValues {
        self.above[e]
    }

    #[inline]
    pub fn edge_beer(&self, e: EdgeId) -> Weight {
        self.edge_beer[e]
    }

    pub fn edge_beer_all(&self) -> &[Weight] {
        &self.edge_beer
    }

    #[inline]
    pub fn vertex_beer(&self, u: VertexId) -> Weight {
        self.vertex_beer[u]
    }

    /// `dist_B(u,v)` for `u = v` or an edge `(u,v)`.
    pub fn beer_dist(&self, graph: &BeerGraph, u: VertexId, v: VertexId) -> Result<Weight> {
        if u == v {
            return self
                .vertex_beer
                .get(u)
                .copied()
                .ok_or(Error::VertexOutOfRange {
                    vertex: u,
                    n: graph.n(),
                });
        }
        let e = graph.edge_id(u, v).ok_or(Error::NotAnEdge(u, v))?;
        Ok(self.edge_beer[e])
    }

    /// Witness of `dist_B(u,v)` oriented from `u` to `v`.
    pub fn witness(&self, graph: &BeerGraph, u: VertexId, v: VertexId) -> Result<Witness> {
        if u == v {
            return Ok(self.vertex_step[u].witness);
        }
        let e = graph.edge_id(u, v).ok_or(Error::NotAnEdge(u, v))?;
        let w = self.edge_step[e].witness;
        Ok(if u < v { w } else { flip(w) })
    }

    /// `SP_B(u,v)` for `u = v` or an edge `(u,v)`.
    pub fn beer_edge_path(&self, graph: &BeerGraph, u: VertexId, v: VertexId) -> Result<PathInG> {
        let mut out = Vec::new();
        self.beer_walk_into(graph, u, v, &mut out)?;
        PathInG::from_walk(graph, out)
    }

    /// Appends `SP_B(u,v)` to `out`, sharing the junction vertex.
    pub(crate) fn beer_walk_into(
        &self,
        graph: &BeerGraph,
        u: VertexId,
        v: VertexId,
        out: &mut Vec<VertexId>,
    ) -> Result<()> {
        let mut cur = if u == v {
            None
        } else {
            Some(graph.edge_id(u, v).ok_or(Error::NotAnEdge(u, v))?)
        };
        if !self.beer_dist(graph, u, v)?.is_finite() {
            return Err(Error::Unreachable(u, v));
        }
        let (mut a, mut b) = (u, v);
        let mut suffix: Vec<VertexId> = Vec::new();
        if out.last() != Some(&a) {
            out.push(a);
        }
        loop {
            let step = match cur {
                None => self.vertex_step[a],
                Some(e) => self.edge_step[e],
            };
            let w = if cur.is_some() && a > b {
                flip(step.witness)
            } else {
                step.witness
            };
            match w {
                Witness::Nil => {
                    if a != b {
                        out.push(b);
                    }
                    break;
                }
                Witness::Unreachable => return Err(Error::Unreachable(u, v)),
                Witness::Left(x) => {
                    suffix.push(b);
                    b = x;
                }
                Witness::Right(x) => {
                    a = x;
                    out.push(a);
                }
            }
            cur = match step.next() {
                Next::Vertex => None,
                Next::Edge(e) => Some(e as usize),
            };
            // A vertex step always leads to an edge; an edge step reaches a
            // vertex loop exactly when the via vertex is an endpoint.
            debug_assert_eq!(cur.is_none(), a == b);
        }
        out.extend(suffix.iter().rev());
        Ok(())
    }
}

fn flip(w: Witness) -> Witness {
    match w {
        Witness::Left(x) => Witness::Right(x),
        Witness::Right(x) => Witness::Left(x),
        other => other,
    }
}

/// Builds the tables for a normalized graph.
pub fn build_beer_base(graph: &BeerGraph, dual: &DualTree) -> BeerBaseTables {
    BeerBaseTables::build(graph, dual)
}
