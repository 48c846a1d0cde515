//! Static rooted-tree queries: levels, LCA, subtree and on-path tests,
//! second node on a path, closest-colour queries, ordered path sums and
//! array range minima.

mod colour;
mod hld;
mod pathsum;
mod rmq;

pub use colour::ColourPathSet;
pub use pathsum::{Concat, MinSemigroup, PathSemigroup, PathSumIndex};
pub use rmq::RmqIndex;

use hld::Hld;

use crate::error::{Error, Result};
use crate::graph::NONE;

/// A rooted tree on nodes `0..len`, children kept in increasing id order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    parent: Vec<u32>,
    root: u32,
    child_offsets: Vec<u32>,
    children: Vec<u32>,
}

impl RootedTree {
    /// Builds from a parent map; exactly one node has no parent.
    pub fn from_parents(parents: &[Option<usize>]) -> Result<RootedTree> {
        let n = parents.len();
        if n == 0 {
            return Err(Error::MalformedTree("no nodes".into()));
        }
        let mut root = None;
        let mut parent = vec![NONE; n];
        let mut count = vec![0u32; n + 1];
        for (v, p) in parents.iter().enumerate() {
            match *p {
                None if root.is_some() => {
                    return Err(Error::MalformedTree("more than one root".into()))
                }
                None => root = Some(v),
                Some(p) if p >= n || p == v => {
                    return Err(Error::MalformedTree(format!("bad parent {p} of node {v}")))
                }
                Some(p) => {
                    parent[v] = p as u32;
                    count[p] += 1;
                }
            }
        }
        let root = root.ok_or_else(|| Error::MalformedTree("no root".into()))?;
        let mut child_offsets = vec![0u32; n + 1];
        for v in 0..n {
            child_offsets[v + 1] = child_offsets[v] + count[v];
        }
        let mut fill = child_offsets[..n].to_vec();
        let mut children = vec![0u32; n - 1];
        for v in 0..n {
            if parent[v] != NONE {
                let p = parent[v] as usize;
                children[fill[p] as usize] = v as u32;
                fill[p] += 1;
            }
        }
        let tree = RootedTree {
            parent,
            root: root as u32,
            child_offsets,
            children,
        };
        if tree.preorder().len() != n {
            return Err(Error::MalformedTree("cycle or unreachable node".into()));
        }
        Ok(tree)
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root as usize
    }

    #[inline]
    pub fn parent(&self, v: usize) -> Option<usize> {
        let p = self.parent[v];
        (p != NONE).then_some(p as usize)
    }

    #[inline]
    pub fn children(&self, v: usize) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.children_raw(v).iter().map(|&c| c as usize)
    }

    #[inline]
    pub(crate) fn children_raw(&self, v: usize) -> &[u32] {
        &self.children[self.child_offsets[v] as usize..self.child_offsets[v + 1] as usize]
    }

    /// Nodes in pre-order (children visited in increasing id order).
    pub fn preorder(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            out.push(v);
            if out.len() > self.len() {
                break;
            }
            stack.extend(self.children_raw(v as usize).iter().rev());
        }
        out
    }
}

/// Constant-time level, LCA, subtree and on-path queries, plus
/// second-node-on-path and level-ancestor queries.
///
/// LCA is a range minimum over Euler-tour depths. Level ancestors walk a
/// heavy-path decomposition (O(log n)); second-on-path only needs the child
/// of `u` towards `v`, found among at most `deg(u)` children by entry time.
#[derive(Clone, Debug)]
pub struct TreeIndex {
    tree: RootedTree,
    level: Vec<u32>,
    tin: Vec<u32>,
    tout: Vec<u32>,
    first: Vec<u32>,
    euler: Vec<u32>,
    rmq: RmqIndex<u32>,
    hld: Hld,
}

impl TreeIndex {
    pub fn build(tree: &RootedTree) -> TreeIndex {
        let n = tree.len();
        let mut level = vec![0u32; n];
        let mut tin = vec![0u32; n];
        let mut tout = vec![0u32; n];
        let mut first = vec![0u32; n];
        let mut euler = Vec::with_capacity(2 * n);
        let mut depths = Vec::with_capacity(2 * n);
        let mut timer = 0u32;
        // (node, index of next child to visit)
        let mut stack: Vec<(u32, u32)> = vec![(tree.root, 0)];
        tin[tree.root()] = 0;
        first[tree.root()] = 0;
        euler.push(tree.root);
        depths.push(0);
        while let Some(top) = stack.last_mut() {
            let (v, next) = *top;
            let kids = tree.children_raw(v as usize);
            if (next as usize) < kids.len() {
                let c = kids[next as usize];
                top.1 += 1;
                timer += 1;
                level[c as usize] = level[v as usize] + 1;
                tin[c as usize] = timer;
                first[c as usize] = euler.len() as u32;
                euler.push(c);
                depths.push(level[c as usize]);
                stack.push((c, 0));
            } else {
                tout[v as usize] = timer;
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    euler.push(p);
                    depths.push(level[p as usize]);
                }
            }
        }
        TreeIndex {
            tree: tree.clone(),
            level,
            tin,
            tout,
            first,
            euler,
            rmq: RmqIndex::new(depths),
            hld: Hld::build(tree),
        }
    }

    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    pub fn len(&self) -> usize {
        self.level.len()
    }

    pub fn is_empty(&self) -> bool {
        self.level.is_empty()
    }

    #[inline]
    pub fn level(&self, u: usize) -> usize {
        self.level[u] as usize
    }

    #[inline]
    pub fn parent(&self, u: usize) -> Option<usize> {
        self.tree.parent(u)
    }

    #[inline]
    pub fn lca(&self, u: usize, v: usize) -> usize {
        let (mut i, mut j) = (self.first[u] as usize, self.first[v] as usize);
        if i > j {
            std::mem::swap(&mut i, &mut j);
        }
        self.euler[self.rmq.argmin(i, j)] as usize
    }

    /// True iff `u` lies in the subtree rooted at `v`.
    #[inline]
    pub fn in_subtree(&self, u: usize, v: usize) -> bool {
        self.tin[v] <= self.tin[u] && self.tin[u] <= self.tout[v]
    }

    /// Number of edges on the path between `u` and `v`.
    pub fn distance(&self, u: usize, v: usize) -> usize {
        self.level(u) + self.level(v) - 2 * self.level(self.lca(u, v))
    }

    /// Ancestor of `u` at depth `depth` (`depth <= level(u)`).
    pub fn level_ancestor(&self, u: usize, depth: usize) -> Result<usize> {
        if depth > self.level(u) {
            return Err(Error::InvalidParams(format!(
                "node {u} has no ancestor at level {depth}"
            )));
        }
        Ok(self.hld.level_ancestor(u, depth as u32))
    }

    /// The neighbour of `u` on the path from `u` to `v`.
    pub fn second_on_path(&self, u: usize, v: usize) -> Result<usize> {
        if u == v {
            return Err(Error::EqualNodes);
        }
        Ok(self.step_towards(u, v))
    }

    #[inline]
    pub(crate) fn step_towards(&self, u: usize, v: usize) -> usize {
        if !self.in_subtree(v, u) {
            return self.tree.parent(u).expect("non-root");
        }
        let kids = self.tree.children_raw(u);
        let t = self.tin[v];
        let i = kids.partition_point(|&c| self.tin[c as usize] <= t);
        kids[i - 1] as usize
    }

    /// True iff `w` is on the path between `u` and `v`.
    pub fn on_path(&self, u: usize, v: usize, w: usize) -> bool {
        if self.in_subtree(u, v) {
            return self.lca(u, w) == w && self.in_subtree(w, v);
        }
        if self.in_subtree(v, u) {
            return self.lca(v, w) == w && self.in_subtree(w, u);
        }
        let l = self.lca(u, v);
        self.on_path(u, l, w) || self.on_path(v, l, w)
    }
}
