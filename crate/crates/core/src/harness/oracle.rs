use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::{BeerGraph, DistTable, VertexId};
use crate::weight::Weight;

/// All-pairs `dist` and `dist_B`.
#[derive(Clone, Debug, PartialEq)]
pub struct OracleTables {
    pub dist: DistTable,
    pub beer: DistTable,
}

/// `(dist(s,·), dist_B(s,·))` by Dijkstra over states `(v, visited a store)`.
/// Reaching a store moves a plain state to the beer state at no cost.
pub fn oracle_beer_sssp(graph: &BeerGraph, s: VertexId) -> Result<(Vec<Weight>, Vec<Weight>)> {
    let n = graph.n();
    if s >= n {
        return Err(Error::VertexOutOfRange { vertex: s, n });
    }
    let mut best = vec![[Weight::INFINITY; 2]; n];
    let mut heap = BinaryHeap::new();
    let start = graph.is_beer(s) as usize;
    best[s][start] = Weight::ZERO;
    heap.push(Reverse((Weight::ZERO, s, start)));
    while let Some(Reverse((d, v, k))) = heap.pop() {
        if d > best[v][k] {
            continue;
        }
        for (u, e) in graph.incident(v) {
            let nd = d + graph.weight(e);
            let nk = (k == 1 || graph.is_beer(u)) as usize;
            if nd < best[u][nk] {
                best[u][nk] = nd;
                heap.push(Reverse((nd, u, nk)));
            }
        }
    }
    // a shortest path either avoids every store or visits one
    let dist = best.iter().map(|b| b[0].min(b[1])).collect::<Vec<_>>();
    let beer = best.iter().map(|b| b[1]).collect();
    Ok((dist, beer))
}

/// [`oracle_beer_sssp`] from every source.
pub fn oracle_all_pairs(graph: &BeerGraph) -> OracleTables {
    let n = graph.n();
    let mut dist = DistTable::new(n);
    let mut beer = DistTable::new(n);
    for s in 0..n {
        let (d, b) = oracle_beer_sssp(graph, s).expect("source in range");
        for v in 0..n {
            dist.set(s, v, d[v]);
            beer.set(s, v, b[v]);
        }
    }
    OracleTables { dist, beer }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn w(x: f64) -> Weight {
        Weight::raw(x)
    }

    #[test]
    fn triangle_from_zero() {
        let (d, b) = oracle_beer_sssp(&fixtures::fix_t3(), 0).unwrap();
        assert_eq!(d, vec![w(0.0), w(1.0), w(1.0)]);
        // dist_B(0,2) = 1: the target itself is the store
        assert_eq!(b, vec![w(2.0), w(2.0), w(1.0)]);
    }

    #[test]
    fn square_from_one() {
        let (_, b) = oracle_beer_sssp(&fixtures::fix_f4(), 1).unwrap();
        assert_eq!(b, vec![w(3.0), w(4.0), w(3.0), w(2.0)]);
    }

    #[test]
    fn no_stores() {
        let g = fixtures::fix_h6().with_beer([]).unwrap();
        let (d, b) = oracle_beer_sssp(&g, 2).unwrap();
        assert!(d.iter().all(|x| x.is_finite()));
        assert!(b.iter().all(|x| !x.is_finite()));
    }

    #[test]
    fn tables_are_symmetric_and_compose_through_stores() {
        for name in fixtures::NAMES {
            let g = fixtures::fixture(name).unwrap();
            let t = oracle_all_pairs(&g);
            for u in 0..g.n() {
                for v in 0..g.n() {
                    assert_eq!(t.dist.get(u, v), t.dist.get(v, u));
                    assert_eq!(t.beer.get(u, v), t.beer.get(v, u));
                    let via = g
                        .beer_stores()
                        .map(|b| t.dist.get(u, b) + t.dist.get(b, v))
                        .min()
                        .unwrap_or(Weight::INFINITY);
                    assert_eq!(t.beer.get(u, v), via);
                }
            }
        }
    }
}
