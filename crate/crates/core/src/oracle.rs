//! Distance and beer-distance queries between arbitrary vertices through
//! face-pair summaries composed along dual paths.

use crate::beer_base::BeerBaseTables;
use crate::dual::DualTree;
use crate::error::{Error, Result};
use crate::graph::{BeerGraph, FaceId, VertexId};
use crate::normalize::NormalizedGraph;
use crate::tree::{PathSemigroup, PathSumIndex};
use crate::weight::Weight;

/// `dist` and `dist_B` from each vertex of face `source` to each vertex of
/// face `target`, indexed by position in the sorted vertex triples: 18 values.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FacePairSummary {
    pub source: u32,
    pub target: u32,
    pub dist: [[Weight; 3]; 3],
    pub beer: [[Weight; 3]; 3],
}

impl FacePairSummary {
    /// Composition through the shared middle face: every path from the source
    /// to the target face passes through one of its three vertices.
    #[inline]
    fn compose(a: &FacePairSummary, b: &FacePairSummary) -> FacePairSummary {
        let mut dist = [[Weight::INFINITY; 3]; 3];
        let mut beer = [[Weight::INFINITY; 3]; 3];
        for i in 0..3 {
            for k in 0..3 {
                let (mut d, mut bd) = (Weight::INFINITY, Weight::INFINITY);
                for j in 0..3 {
                    d = d.min(a.dist[i][j] + b.dist[j][k]);
                    bd = bd
                        .min(a.beer[i][j] + b.dist[j][k])
                        .min(a.dist[i][j] + b.beer[j][k]);
                }
                dist[i][k] = d;
                beer[i][k] = bd;
            }
        }
        FacePairSummary {
            source: a.source,
            target: b.target,
            dist,
            beer,
        }
    }

    /// The summary of the opposite direction.
    pub fn transpose(&self) -> FacePairSummary {
        let t = |m: &[[Weight; 3]; 3]| std::array::from_fn(|i| std::array::from_fn(|j| m[j][i]));
        FacePairSummary {
            source: self.target,
            target: self.source,
            dist: t(&self.dist),
            beer: t(&self.beer),
        }
    }

    /// Number of stored quantities.
    pub const fn entry_count() -> usize {
        18
    }
}

/// `Q₁ ⊕ Q₂`; fails unless `Q₁`'s target face is `Q₂`'s source face.
pub fn combine(q1: &FacePairSummary, q2: &FacePairSummary) -> Result<FacePairSummary> {
    if q1.target != q2.source {
        return Err(Error::IncompatibleFaces(
            q1.target as usize,
            q2.source as usize,
        ));
    }
    Ok(FacePairSummary::compose(q1, q2))
}

/// Face-pair summaries under composition. Path-sum structures also fold
/// values that are never read together, so composability is not checked.
#[derive(Clone, Copy, Debug, Default)]
pub struct FaceSemigroup;

impl PathSemigroup for FaceSemigroup {
    type Value = FacePairSummary;
    fn combine(&self, a: &FacePairSummary, b: &FacePairSummary) -> FacePairSummary {
        FacePairSummary::compose(a, b)
    }
    fn reverse(&self, a: &FacePairSummary) -> FacePairSummary {
        a.transpose()
    }
}

/// Summary of two adjacent faces from the induced four-vertex graph.
pub fn base_summary(
    graph: &BeerGraph,
    dual: &DualTree,
    tables: &BeerBaseTables,
    f: FaceId,
    g: FaceId,
) -> Result<FacePairSummary> {
    let m = dual.face_count();
    for x in [f, g] {
        if x >= m {
            return Err(Error::UnknownFace(x));
        }
    }
    let shared = dual
        .shared_edge(f, g)
        .filter(|_| f != g)
        .ok_or(Error::NotAdjacentFaces(f, g))?;
    let (a, b) = (graph.edge(shared).u, graph.edge(shared).v);
    let (fv, gv) = (dual.face(f).vertices, dual.face(g).vertices);
    let w = |x: VertexId, y: VertexId| graph.edge_weight(x, y).expect("face edge");
    let mut dist = [[Weight::INFINITY; 3]; 3];
    let mut beer = [[Weight::INFINITY; 3]; 3];
    for (i, &x) in fv.iter().enumerate() {
        for (j, &y) in gv.iter().enumerate() {
            if x == y {
                dist[i][j] = Weight::ZERO;
                beer[i][j] = tables.vertex_beer(x);
            } else if let Some(e) = graph.edge_id(x, y) {
                dist[i][j] = graph.weight(e);
                beer[i][j] = tables.edge_beer(e);
            } else {
                // x and y are the two apexes; {a, b} separates them
                let (da, db) = (w(x, a) + w(a, y), w(x, b) + w(b, y));
                dist[i][j] = da.min(db);
                let bx = |s: VertexId| tables.edge_beer(graph.edge_id(x, s).expect("face edge"));
                let by = |s: VertexId| tables.edge_beer(graph.edge_id(s, y).expect("face edge"));
                beer[i][j] = (bx(a) + w(a, y))
                    .min(w(x, a) + by(a))
                    .min(bx(b) + w(b, y))
                    .min(w(x, b) + by(b));
            }
        }
    }
    Ok(FacePairSummary {
        source: f as u32,
        target: g as u32,
        dist,
        beer,
    })
}

/// `dist` and `dist_B` between one fixed vertex and the three vertices of
/// a face, for folding summaries one at a time.
#[derive(Clone, Copy)]
struct Vector {
    dist: [Weight; 3],
    beer: [Weight; 3],
}

impl Vector {
    fn unit(i: usize) -> Vector {
        let mut dist = [Weight::INFINITY; 3];
        dist[i] = Weight::ZERO;
        Vector {
            dist,
            beer: [Weight::INFINITY; 3],
        }
    }

    /// `self ⊕ q` (or `self ⊕ qᵀ`): extends the far end by one summary.
    #[inline]
    fn times(&mut self, q: &FacePairSummary, transposed: bool) {
        let at =
            |m: &[[Weight; 3]; 3], j: usize, k: usize| if transposed { m[k][j] } else { m[j][k] };
        let mut out = Vector {
            dist: [Weight::INFINITY; 3],
            beer: [Weight::INFINITY; 3],
        };
        for k in 0..3 {
            for j in 0..3 {
                out.dist[k] = out.dist[k].min(self.dist[j] + at(&q.dist, j, k));
                out.beer[k] = out.beer[k]
                    .min(self.beer[j] + at(&q.dist, j, k))
                    .min(self.dist[j] + at(&q.beer, j, k));
            }
        }
        *self = out;
    }

    /// `q ⊕ self` for a column vector: extends the near end by one summary.
    #[inline]
    fn times_from_left(&mut self, q: &FacePairSummary, transposed: bool) {
        // (q ⊕ c)ᵀ = cᵀ ⊕ qᵀ
        self.times(q, !transposed);
    }

    /// Joins a row ending at a face with a column starting at it.
    fn meet(&self, col: &Vector) -> (Weight, Weight) {
        let mut d = Weight::INFINITY;
        let mut b = Weight::INFINITY;
        for j in 0..3 {
            d = d.min(self.dist[j] + col.dist[j]);
            b = b
                .min(self.beer[j] + col.dist[j])
                .min(self.dist[j] + col.beer[j]);
        }
        (d, b)
    }
}

/// Answers `dist(u,v)` and `dist_B(u,v)` for any pair after linear-size
/// preprocessing.
pub struct BeerDistanceOracle {
    norm: NormalizedGraph,
    dual: DualTree,
    tables: BeerBaseTables,
    sums: PathSumIndex<FaceSemigroup>,
}

impl BeerDistanceOracle {
    pub fn build(norm: NormalizedGraph) -> Result<BeerDistanceOracle> {
        Self::build_rooted(norm, None)
    }

    /// Builds with the dual rooted at `root` (default: face 0).
    pub fn build_rooted(norm: NormalizedGraph, root: Option<FaceId>) -> Result<BeerDistanceOracle> {
        let graph = norm.graph();
        let dual = DualTree::build(graph, root)?;
        let tables = BeerBaseTables::build(graph, &dual);
        let tree = dual.tree();
        let values: Vec<Option<FacePairSummary>> = (0..dual.face_count())
            .map(|c| {
                tree.parent(c)
                    .map(|p| base_summary(graph, &dual, &tables, p, c))
                    .transpose()
            })
            .collect::<Result<_>>()?;
        let sums = PathSumIndex::build(tree, values, FaceSemigroup)?;
        Ok(BeerDistanceOracle {
            norm,
            dual,
            tables,
            sums,
        })
    }

    pub fn normalized(&self) -> &NormalizedGraph {
        &self.norm
    }

    /// The normalized graph all queries run on.
    pub fn graph(&self) -> &BeerGraph {
        self.norm.graph()
    }

    pub fn dual(&self) -> &DualTree {
        &self.dual
    }

    pub fn tables(&self) -> &BeerBaseTables {
        &self.tables
    }

    /// Number of dual edges carrying a summary.
    pub fn summary_count(&self) -> usize {
        self.dual.face_count() - 1
    }

    /// `Q_{F,F'}` for distinct faces.
    pub fn summary(&self, f: FaceId, g: FaceId) -> Result<FacePairSummary> {
        let m = self.dual.face_count();
        for x in [f, g] {
            if x >= m {
                return Err(Error::UnknownFace(x));
            }
        }
        self.sums.query(f, g)
    }

    fn check(&self, v: VertexId) -> Result<()> {
        let n = self.graph().n();
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        Ok(())
    }

    /// `(dist(u,v), dist_B(u,v))`.
    pub fn query(&self, u: VertexId, v: VertexId) -> Result<(Weight, Weight)> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.query_unchecked(u, v))
    }

    pub(crate) fn query_unchecked(&self, u: VertexId, v: VertexId) -> (Weight, Weight) {
        let graph = self.graph();
        if u == v {
            return (Weight::ZERO, self.tables.vertex_beer(u));
        }
        if let Some(e) = graph.edge_id(u, v) {
            return (graph.weight(e), self.tables.edge_beer(e));
        }
        let (fu, fv) = (self.dual.face_of(u), self.dual.face_of(v));
        let i = self.dual.face(fu).position(u).expect("face_of contains u");
        let j = self.dual.face(fv).position(v).expect("face_of contains v");
        // vertices sharing a face are adjacent and were answered above
        debug_assert_ne!(fu, fv);
        // only row i of the composed summary and column j are needed, so
        // fold vectors from both ends instead of multiplying summaries
        let mut row = Vector::unit(i);
        let mut col = Vector::unit(j);
        self.sums.visit_path(
            fu,
            fv,
            |q, rev| row.times(q, rev),
            |q, rev| col.times_from_left(q, rev),
        );
        row.meet(&col)
    }

    pub fn query_dist(&self, u: VertexId, v: VertexId) -> Result<Weight> {
        Ok(self.query(u, v)?.0)
    }

    pub fn query_beer_dist(&self, u: VertexId, v: VertexId) -> Result<Weight> {
        Ok(self.query(u, v)?.1)
    }
}

/// Builds the oracle for a normalized graph.
pub fn build_oracle(norm: NormalizedGraph) -> Result<BeerDistanceOracle> {
    BeerDistanceOracle::build(norm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::normalize::normalize;

    fn w(x: f64) -> Weight {
        Weight::raw(x)
    }

    fn oracle(g: &BeerGraph) -> BeerDistanceOracle {
        BeerDistanceOracle::build(normalize(g).unwrap()).unwrap()
    }

    #[test]
    fn square_base_summary() {
        let o = oracle(&fixtures::fix_f4());
        let q = base_summary(o.graph(), o.dual(), o.tables(), 0, 1).unwrap();
        // F = (0,1,2), F' = (0,2,3): entry (1,3) sits at positions (1,2)
        assert_eq!(q.dist[1][2], w(2.0));
        assert_eq!(q.beer[1][2], w(2.0));
        assert_eq!(q.dist[0][0], Weight::ZERO);
        assert_eq!(
            FacePairSummary::entry_count(),
            q.dist.len() * 3 + q.beer.len() * 3
        );
        assert!(matches!(
            base_summary(o.graph(), o.dual(), o.tables(), 0, 0),
            Err(Error::NotAdjacentFaces(0, 0))
        ));
    }

    #[test]
    fn hexagon_composition() {
        let o = oracle(&fixtures::fix_h6());
        let b = |f, g| base_summary(o.graph(), o.dual(), o.tables(), f, g).unwrap();
        let (q1, q2, q3) = (b(0, 1), b(1, 2), b(2, 3));
        let left = combine(&combine(&q1, &q2).unwrap(), &q3).unwrap();
        let right = combine(&q1, &combine(&q2, &q3).unwrap()).unwrap();
        assert_eq!(left, right);
        assert_eq!(left, o.summary(0, 3).unwrap());
        assert_eq!(o.summary(3, 0).unwrap(), left.transpose());
        assert!(matches!(
            combine(&q1, &q3),
            Err(Error::IncompatibleFaces(1, 2))
        ));
        assert_eq!(o.summary_count(), 3);
    }

    #[test]
    fn hexagon_queries() {
        let o = oracle(&fixtures::fix_h6());
        assert_eq!(o.query_dist(1, 4).unwrap(), w(2.0));
        assert_eq!(o.query_beer_dist(1, 4).unwrap(), w(3.0));
        assert_eq!(o.query_beer_dist(2, 2).unwrap(), w(4.0));
        assert_eq!(o.query_dist(3, 3).unwrap(), Weight::ZERO);
        assert!(o.query(0, 6).is_err());
    }

    #[test]
    fn single_face() {
        let o = oracle(&fixtures::fix_t3());
        assert_eq!(o.summary_count(), 0);
        assert_eq!(o.query(0, 1).unwrap(), (w(1.0), w(2.0)));
    }

    #[test]
    fn roots_agree() {
        let g = fixtures::fix_8fan();
        let base = oracle(&g);
        for root in 0..g.n() - 2 {
            let o = BeerDistanceOracle::build_rooted(normalize(&g).unwrap(), Some(root)).unwrap();
            for u in 0..g.n() {
                for v in 0..g.n() {
                    assert_eq!(o.query(u, v).unwrap(), base.query(u, v).unwrap());
                }
            }
        }
    }
}
