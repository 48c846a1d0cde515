//! Shortest beer path reporting in time linear in the path length: fan
//! queries inside `G[P_v]` and the column DAG `H` between distant vertices.

use crate::dual::Chain;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::graph::{append_walk, PathInG, VertexId};
use crate::weight::Weight;

/// Kind of a DAG edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    Plain,
    Beer,
}

/// One or two vertices; two-vertex columns hold a separating edge, lower id first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Column {
    vertices: [VertexId; 2],
    len: u8,
}

impl Column {
    fn one(v: VertexId) -> Column {
        Column {
            vertices: [v, v],
            len: 1,
        }
    }

    fn pair(a: VertexId, b: VertexId) -> Column {
        Column {
            vertices: [a.min(b), a.max(b)],
            len: 2,
        }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices[..self.len as usize]
    }
}

/// The column DAG `H` with its dynamic-programming tables.
///
/// Edges run only between consecutive columns; `fans[i]` is the vertex `x`
/// whose fan `G[P_x]` contains both columns `i` and `i+1`, so edge weights
/// there are fan queries around `x`.
#[derive(Clone, Debug)]
pub struct DagH {
    columns: Vec<Column>,
    fans: Vec<VertexId>,
    plain: Vec<[[Weight; 2]; 2]>,
    beer: Vec<[[Weight; 2]; 2]>,
    dist: Vec<[Weight; 2]>,
    beer_dist: Vec<[Weight; 2]>,
    dist_from: Vec<[u8; 2]>,
    beer_from: Vec<[(u8, EdgeKind); 2]>,
}

impl DagH {
    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, i: usize) -> &[VertexId] {
        self.columns[i].vertices()
    }

    pub fn columns(&self) -> impl Iterator<Item = &[VertexId]> + '_ {
        self.columns.iter().map(Column::vertices)
    }

    /// The fan vertex whose fan holds columns `i` and `i+1`.
    pub fn fan(&self, i: usize) -> VertexId {
        self.fans[i]
    }

    /// Number of DAG edges (one plain and one beer edge per vertex pair).
    pub fn edge_count(&self) -> usize {
        self.columns
            .windows(2)
            .map(|w| 2 * w[0].len as usize * w[1].len as usize)
            .sum()
    }

    /// Weight of the DAG edge from `columns[i][a]` to `columns[i+1][b]`.
    pub fn edge_weight(&self, i: usize, a: usize, b: usize, kind: EdgeKind) -> Weight {
        match kind {
            EdgeKind::Plain => self.plain[i][a][b],
            EdgeKind::Beer => self.beer[i][a][b],
        }
    }

    /// `dist(s, columns[i][k])` as computed by the DP.
    pub fn dist(&self, i: usize, k: usize) -> Weight {
        self.dist[i][k]
    }

    /// `dist_B(s, columns[i][k])` as computed by the DP.
    pub fn beer_dist(&self, i: usize, k: usize) -> Weight {
        self.beer_dist[i][k]
    }

    /// `dist_B(s,t)`.
    pub fn answer(&self) -> Weight {
        self.beer_dist[self.columns.len() - 1][0]
    }

    /// The DAG path realizing `dist_B(s,t)`: `(from, to, kind, fan)` per edge.
    pub fn best_path(&self) -> Vec<(VertexId, VertexId, EdgeKind, VertexId)> {
        let mut out = Vec::with_capacity(self.columns.len());
        let (mut i, mut k, mut need_beer) = (self.columns.len() - 1, 0usize, true);
        while i > 0 {
            let (from, kind) = if need_beer {
                self.beer_from[i][k]
            } else {
                (self.dist_from[i][k], EdgeKind::Plain)
            };
            let from = from as usize;
            out.push((
                self.columns[i - 1].vertices[from],
                self.columns[i].vertices[k],
                kind,
                self.fans[i - 1],
            ));
            if kind == EdgeKind::Beer {
                need_beer = false;
            }
            i -= 1;
            k = from;
        }
        out.reverse();
        out
    }
}

impl Engine {
    fn fan_chain(
        &self,
        v: VertexId,
        u: VertexId,
        w: VertexId,
    ) -> Result<(Chain<'_>, usize, usize)> {
        self.check(v)?;
        let chain = self.chains().chain(self.graph(), v);
        let j = chain.position(u).ok_or(Error::NotInFan(u, v))?;
        let k = chain.position(w).ok_or(Error::NotInFan(w, v))?;
        Ok((chain, j, k))
    }

    fn in_fan(&self, v: VertexId, u: VertexId) -> Result<()> {
        self.check(u)?;
        if u != v && self.graph().edge_id(v, u).is_none() {
            return Err(Error::NotInFan(u, v));
        }
        Ok(())
    }

    fn w(&self, a: VertexId, b: VertexId) -> Weight {
        self.graph().edge_weight(a, b).expect("fan edge")
    }

    /// `dist(u,w)` for `u, w` in `G[P_v]`.
    pub fn fan_dist(&self, v: VertexId, u: VertexId, w: VertexId) -> Result<Weight> {
        self.check(v)?;
        self.in_fan(v, u)?;
        self.in_fan(v, w)?;
        if u == w {
            return Ok(Weight::ZERO);
        }
        if u == v || w == v {
            return Ok(self.w(u, w));
        }
        let (chain, j, k) = self.fan_chain(v, u, w)?;
        Ok(chain.dist_at(j, k).min(self.w(u, v) + self.w(v, w)))
    }

    /// `SP(u,w)` for `u, w` in `G[P_v]`; ties go through `v`.
    pub fn fan_sp(&self, v: VertexId, u: VertexId, w: VertexId) -> Result<PathInG> {
        let mut out = Vec::new();
        self.fan_sp_into(v, u, w, &mut out)?;
        PathInG::from_walk(self.graph(), out)
    }

    fn fan_sp_into(
        &self,
        v: VertexId,
        u: VertexId,
        w: VertexId,
        out: &mut Vec<VertexId>,
    ) -> Result<()> {
        self.check(v)?;
        self.in_fan(v, u)?;
        self.in_fan(v, w)?;
        if u == w {
            append_walk(out, &[u]);
            return Ok(());
        }
        if u == v || w == v {
            append_walk(out, &[u, w]);
            return Ok(());
        }
        let (chain, j, k) = self.fan_chain(v, u, w)?;
        if self.w(u, v) + self.w(v, w) <= chain.dist_at(j, k) {
            append_walk(out, &[u, v, w]);
        } else {
            append_walk(out, &[u]);
            push_chain(&chain, j, k, out);
        }
        Ok(())
    }

    /// `dist_B(u,w)` for `u, w` in `G[P_v]`.
    pub fn fan_beer_dist(&self, v: VertexId, u: VertexId, w: VertexId) -> Result<Weight> {
        Ok(self.fan_beer_plan(v, u, w)?.0)
    }

    /// `SP_B(u,w)` for `u, w` in `G[P_v]`.
    pub fn fan_beer_path(&self, v: VertexId, u: VertexId, w: VertexId) -> Result<PathInG> {
        let mut out = Vec::new();
        self.fan_beer_path_into(v, u, w, &mut out)?;
        PathInG::from_walk(self.graph(), out)
    }

    /// Value and route: through `v` with the beer before (`Left`) or after
    /// (`Right`) `v`, or along the chain with the detour on link `i`.
    fn fan_beer_plan(&self, v: VertexId, u: VertexId, w: VertexId) -> Result<(Weight, FanRoute)> {
        self.check(v)?;
        self.in_fan(v, u)?;
        self.in_fan(v, w)?;
        let tables = self.tables();
        let g = self.graph();
        if u == w || u == v || w == v {
            return Ok((tables.beer_dist(g, u, w)?, FanRoute::Direct));
        }
        let (chain, j, k) = self.fan_chain(v, u, w)?;
        let before = tables.beer_dist(g, u, v)? + self.w(v, w);
        let after = self.w(u, v) + tables.beer_dist(g, v, w)?;
        let mut best = if after < before {
            (after, FanRoute::After)
        } else {
            (before, FanRoute::Before)
        };
        let i = chain.cheapest_detour(j.min(k), j.max(k) - 1);
        let along = chain.dist_at(j, k) + chain.detour(i);
        if along < best.0 {
            best = (along, FanRoute::Chain(i));
        }
        Ok(best)
    }

    fn fan_beer_path_into(
        &self,
        v: VertexId,
        u: VertexId,
        w: VertexId,
        out: &mut Vec<VertexId>,
    ) -> Result<()> {
        let (value, route) = self.fan_beer_plan(v, u, w)?;
        if !value.is_finite() {
            return Err(Error::Unreachable(u, w));
        }
        let tables = self.tables();
        let g = self.graph();
        match route {
            FanRoute::Direct => tables.beer_walk_into(g, u, w, out)?,
            FanRoute::Before => {
                tables.beer_walk_into(g, u, v, out)?;
                out.push(w);
            }
            FanRoute::After => {
                append_walk(out, &[u]);
                tables.beer_walk_into(g, v, w, out)?;
            }
            FanRoute::Chain(i) => {
                let (_, j, k) = self.fan_chain(v, u, w)?;
                let chain = self.chains().chain(g, v);
                let (x, y) = if j < k { (i, i + 1) } else { (i + 1, i) };
                append_walk(out, &[u]);
                push_chain(&chain, j, x, out);
                tables.beer_walk_into(g, chain.vertex(x), chain.vertex(y), out)?;
                push_chain(&chain, y, k, out);
            }
        }
        Ok(())
    }

    /// True iff `t` lies in `G[P_s]`.
    pub fn in_same_fan(&self, s: VertexId, t: VertexId) -> Result<bool> {
        self.check(s)?;
        self.check(t)?;
        if s == t {
            return Ok(true);
        }
        Ok(self.dual().contains(self.first_face(s, t), t))
    }

    /// `F₁`: the face of `P_s` closest to `face_of(t)`.
    fn first_face(&self, s: VertexId, t: VertexId) -> usize {
        let d = self.dual();
        d.colours()
            .closest_unchecked(d.index(), d.face_of(s), d.face_of(t), s)
    }

    /// Builds `H` for `t` outside `G[P_s]` and runs the DP over it.
    pub fn build_dag(&self, s: VertexId, t: VertexId) -> Result<DagH> {
        if self.in_same_fan(s, t)? {
            return Err(Error::SameFan(s, t));
        }
        let d = self.dual();
        let (index, colours) = (d.index(), d.colours());
        let g = self.graph();
        let ft = d.face_of(t);
        let shared = |f: usize, h: usize| {
            let e = g.edge(d.shared_edge(f, h).expect("consecutive path faces"));
            (e.u, e.v)
        };

        let mut columns = vec![Column::one(s)];
        let mut fans = vec![s];
        let f1 = self.first_face(s, t);
        let mut next = index.step_towards(f1, ft);
        let (a, b) = shared(f1, next);
        columns.push(Column::pair(a, b));
        loop {
            let [a, b] = columns.last().unwrap().vertices;
            let fb = colours.closest_unchecked(index, next, ft, b);
            let (fi, x) = if !d.contains(fb, a) {
                (fb, b)
            } else {
                (colours.closest_unchecked(index, next, ft, a), a)
            };
            fans.push(x);
            if d.contains(fi, t) {
                columns.push(Column::one(t));
                break;
            }
            next = index.step_towards(fi, ft);
            let (c, e) = shared(fi, next);
            columns.push(Column::pair(c, e));
        }

        let m = columns.len();
        let mut dag = DagH {
            plain: vec![[[Weight::INFINITY; 2]; 2]; m - 1],
            beer: vec![[[Weight::INFINITY; 2]; 2]; m - 1],
            dist: vec![[Weight::INFINITY; 2]; m],
            beer_dist: vec![[Weight::INFINITY; 2]; m],
            dist_from: vec![[0; 2]; m],
            beer_from: vec![[(0, EdgeKind::Plain); 2]; m],
            columns,
            fans,
        };
        for i in 0..m - 1 {
            let x = dag.fans[i];
            for (p, &from) in dag.columns[i].vertices().iter().enumerate() {
                for (q, &to) in dag.columns[i + 1].vertices().iter().enumerate() {
                    dag.plain[i][p][q] = self.fan_dist(x, from, to)?;
                    dag.beer[i][p][q] = self.fan_beer_dist(x, from, to)?;
                }
            }
        }
        dag.dist[0][0] = Weight::ZERO;
        for q in 0..dag.columns[1].len as usize {
            dag.dist[1][q] = dag.plain[0][0][q];
            dag.beer_dist[1][q] = dag.beer[0][0][q];
            dag.beer_from[1][q] = (0, EdgeKind::Beer);
        }
        for i in 2..m {
            for q in 0..dag.columns[i].len as usize {
                let mut best_b = (Weight::INFINITY, (0u8, EdgeKind::Plain));
                let mut best_d = (Weight::INFINITY, 0u8);
                for p in 0..dag.columns[i - 1].len as usize {
                    let (dp, bp) = (dag.dist[i - 1][p], dag.beer_dist[i - 1][p]);
                    let (pw, bw) = (dag.plain[i - 1][p][q], dag.beer[i - 1][p][q]);
                    for (val, kind) in [(bp + pw, EdgeKind::Plain), (dp + bw, EdgeKind::Beer)] {
                        if val < best_b.0 {
                            best_b = (val, (p as u8, kind));
                        }
                    }
                    if dp + pw < best_d.0 {
                        best_d = (dp + pw, p as u8);
                    }
                }
                dag.beer_dist[i][q] = best_b.0;
                dag.beer_from[i][q] = best_b.1;
                dag.dist[i][q] = best_d.0;
                dag.dist_from[i][q] = best_d.1;
            }
        }
        Ok(dag)
    }

    /// `SP_B(s,t)` as a walk in the normalized graph.
    pub fn beer_walk_normalized(&self, s: VertexId, t: VertexId) -> Result<PathInG> {
        let mut out = Vec::new();
        if self.in_same_fan(s, t)? {
            self.tables().beer_walk_into(self.graph(), s, t, &mut out)?;
        } else {
            let dag = self.build_dag(s, t)?;
            if !dag.answer().is_finite() {
                return Err(Error::Unreachable(s, t));
            }
            for (from, to, kind, fan) in dag.best_path() {
                match kind {
                    EdgeKind::Beer => self.fan_beer_path_into(fan, from, to, &mut out)?,
                    EdgeKind::Plain => self.fan_sp_into(fan, from, to, &mut out)?,
                }
            }
        }
        PathInG::from_walk(self.graph(), out)
    }

    /// `SP_B(s,t)` as a walk in the input graph.
    pub fn query_beer_path(&self, s: VertexId, t: VertexId) -> Result<PathInG> {
        let walk = self.beer_walk_normalized(s, t)?;
        self.normalized().expand_walk(&walk.vertices)
    }
}

#[derive(Clone, Copy, Debug)]
enum FanRoute {
    Direct,
    Before,
    After,
    Chain(usize),
}

/// Appends chain vertices strictly after position `j` up to `k`, either direction.
fn push_chain(chain: &Chain<'_>, j: usize, k: usize, out: &mut Vec<VertexId>) {
    if j <= k {
        out.extend((j + 1..=k).map(|i| chain.vertex(i)));
    } else {
        out.extend((k..j).rev().map(|i| chain.vertex(i)));
    }
}
