use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::graph::{BeerGraph, VertexId};
use crate::tree::{RootedTree, TreeIndex};
use crate::weight::Weight;

/// A path-minimum instance encoded as a beer tree.
///
/// Every tree edge `e = (parent(c), c)` is identified by its child `c`. In
/// the beer tree it becomes two unit edges through a new node `x_e`, and a
/// pendant store `x'_e` hangs off `x_e` at weight `s(e)`. The beer tree has
/// `3n − 2` nodes, numbered in depth-first preorder.
#[derive(Clone, Debug)]
pub struct ReductionInstance {
    tree: RootedTree,
    index: TreeIndex,
    values: Vec<f64>,
    graph: BeerGraph,
    node: Vec<VertexId>,
    x: Vec<VertexId>,
    x_store: Vec<VertexId>,
    store_edge: Vec<Option<usize>>,
}

impl ReductionInstance {
    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    /// `s(e)` for the edge above `c`; `None` for the root.
    pub fn value(&self, c: usize) -> Option<f64> {
        self.tree.parent(c).map(|_| self.values[c])
    }

    /// The beer tree.
    pub fn graph(&self) -> &BeerGraph {
        &self.graph
    }

    /// Beer-tree vertex of tree node `v`.
    pub fn vertex(&self, v: usize) -> VertexId {
        self.node[v]
    }

    /// `(x_e, x'_e)` for the edge above `c`.
    pub fn edge_nodes(&self, c: usize) -> Option<(VertexId, VertexId)> {
        self.tree.parent(c).map(|_| (self.x[c], self.x_store[c]))
    }

    /// Naive minimum of `s` over the tree path `u..v`, with its edge.
    pub fn naive_path_min(&self, u: usize, v: usize) -> Result<(f64, usize)> {
        self.check_pair(u, v)?;
        let w = self.index.lca(u, v);
        let mut best: Option<(f64, usize)> = None;
        for mut x in [u, v] {
            while x != w {
                if best.is_none_or(|(b, _)| self.values[x] < b) {
                    best = Some((self.values[x], x));
                }
                x = self.tree.parent(x).expect("below the lca");
            }
        }
        Ok(best.expect("distinct nodes"))
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.tree.len() {
                return Err(Error::NodeOutOfRange(x));
            }
        }
        if u == v {
            return Err(Error::EqualNodes);
        }
        Ok(())
    }
}

/// Builds the beer tree for `tree` with edge values `values[c]` on the edge
/// above each non-root node `c` (the root's entry is ignored).
pub fn reduce_path_min(tree: &RootedTree, values: &[f64]) -> Result<ReductionInstance> {
    let n = tree.len();
    if n < 2 {
        return Err(Error::DegenerateTree(format!(
            "{n} node(s); at least 2 are required"
        )));
    }
    if values.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: values.len(),
        });
    }
    for c in (0..n).filter(|&c| tree.parent(c).is_some()) {
        if !(values[c] > 0.0 && values[c] < 1.0) {
            return Err(Error::InvalidParams(format!(
                "value {} of edge above {c} is outside (0,1)",
                values[c]
            )));
        }
    }
    let total = 3 * n - 2;
    let mut node = vec![0; n];
    let mut x = vec![0; n];
    let mut x_store = vec![0; n];
    let mut store_edge = vec![None; total];
    let mut edges = Vec::with_capacity(total - 1);
    let mut next = 0;
    // explicit preorder: a node is labelled, then each child edge's x_e, x'_e
    // and the child's subtree in turn
    enum Step {
        Node(usize),
        Edge(usize),
    }
    let mut stack = vec![Step::Node(tree.root())];
    while let Some(step) = stack.pop() {
        match step {
            Step::Node(v) => {
                node[v] = next;
                next += 1;
                stack.extend(
                    tree.children_raw(v)
                        .iter()
                        .rev()
                        .map(|&c| Step::Edge(c as usize)),
                );
            }
            Step::Edge(c) => {
                let p = tree.parent(c).expect("child");
                x[c] = next;
                x_store[c] = next + 1;
                store_edge[next + 1] = Some(c);
                next += 2;
                edges.push((node[p], x[c], Weight::raw(1.0)));
                edges.push((x[c], x_store[c], Weight::raw(values[c])));
                stack.push(Step::Node(c));
            }
        }
    }
    // child edges are recorded once the child is labelled
    for c in (0..n).filter(|&c| tree.parent(c).is_some()) {
        edges.push((x[c], node[c], Weight::raw(1.0)));
    }
    let graph = BeerGraph::new(
        total,
        edges,
        (0..n)
            .filter(|&c| tree.parent(c).is_some())
            .map(|c| x_store[c]),
    )?;
    Ok(ReductionInstance {
        tree: tree.clone(),
        index: TreeIndex::build(tree),
        values: values.to_vec(),
        graph,
        node,
        x,
        x_store,
        store_edge,
    })
}

/// Path minimum between tree nodes `u ≠ v` through the beer-distance engine
/// built on `instance.graph()`: the minimum is `(dist_B − 2ℓ)/2` for a path
/// of `ℓ` edges, and the edge is the one whose pendant store the reported
/// beer path visits.
pub fn answer_path_min(
    instance: &ReductionInstance,
    engine: &Engine,
    u: usize,
    v: usize,
) -> Result<(f64, usize)> {
    instance.check_pair(u, v)?;
    let (a, b) = (instance.node[u], instance.node[v]);
    let ell = instance.index.distance(u, v) as f64;
    let beer = engine.beer_dist(a, b)?;
    let walk = engine.query_beer_path(a, b)?;
    let edge = walk
        .vertices
        .iter()
        .find_map(|&y| instance.store_edge.get(y).copied().flatten())
        .ok_or(Error::Unreachable(a, b))?;
    Ok(((beer.value() - 2.0 * ell) / 2.0, edge))
}
