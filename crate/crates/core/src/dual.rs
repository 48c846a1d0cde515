//! Weak dual of a maximal outerplanar graph, per-vertex face paths `P_v`, and
//! per-vertex fan chains `ρ_v`.

use crate::error::{Error, Result};
use crate::graph::{BeerGraph, EdgeId, FaceId, VertexId, NONE};
use crate::normalize::NormalizedGraph;
use crate::tree::{ColourPathSet, RmqIndex, RootedTree, TreeIndex};
use crate::weight::Weight;

/// An interior triangle; vertices sorted, edges `(v0,v1)`, `(v0,v2)`, `(v1,v2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Face {
    pub vertices: [VertexId; 3],
    pub edges: [EdgeId; 3],
}

impl Face {
    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    /// Index of `v` in the sorted vertex triple.
    #[inline]
    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    /// Edge ids incident to the vertex at position `i`.
    #[inline]
    pub(crate) fn edges_at(&self, i: usize) -> [EdgeId; 2] {
        match i {
            0 => [self.edges[0], self.edges[1]],
            1 => [self.edges[0], self.edges[2]],
            _ => [self.edges[1], self.edges[2]],
        }
    }

    /// Id of the edge between the vertices at positions `i != j`.
    #[inline]
    pub(crate) fn edge_between(&self, i: usize, j: usize) -> EdgeId {
        self.edges[i + j - 1]
    }
}

/// The weak dual `D(G)`: one node per interior face, rooted, with the
/// Lemma-1 index and the closest-colour structure over the paths `P_v`.
#[derive(Clone, Debug)]
pub struct DualTree {
    faces: Vec<Face>,
    edge_faces: Vec<[u32; 2]>,
    parent_edge: Vec<u32>,
    preorder: Vec<u32>,
    tree: RootedTree,
    index: TreeIndex,
    ends: Vec<(u32, u32)>,
    colours: ColourPathSet,
}

/// Faces of a maximal outerplanar graph in lexicographic order of their
/// sorted vertex triples, plus the one or two faces of every edge.
///
/// A face with smallest vertex `a` consists of `a` and two consecutive
/// larger neighbours of `a`; the largest neighbour of the middle vertex is
/// the third vertex, since no edge may leave the chord that spans it.
pub(crate) fn triangulate(graph: &BeerGraph) -> Result<(Vec<Face>, Vec<[u32; 2]>)> {
    let n = graph.n();
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    let not_maximal = || Error::InvalidParams("graph is not maximal outerplanar".into());
    let mut faces = Vec::with_capacity(n - 2);
    let mut edge_faces = vec![[NONE, NONE]; graph.edge_count()];
    for a in 0..n {
        let adj = graph.adjacency(a);
        let start = adj.partition_point(|&(x, _)| (x as usize) < a);
        let up = &adj[start..];
        for k in 1..up.len() {
            let (b, eab) = (up[k - 1].0 as usize, up[k - 1].1 as usize);
            let (c, eac) = (up[k].0 as usize, up[k].1 as usize);
            let &(last, ebc) = graph.adjacency(b).last().ok_or_else(not_maximal)?;
            if last as usize != c {
                return Err(not_maximal());
            }
            let id = faces.len() as u32;
            let face = Face {
                vertices: [a, b, c],
                edges: [eab, eac, ebc as usize],
            };
            for e in face.edges {
                let slot = &mut edge_faces[e];
                if slot[0] == NONE {
                    slot[0] = id;
                } else if slot[1] == NONE {
                    slot[1] = id;
                } else {
                    return Err(not_maximal());
                }
            }
            faces.push(face);
        }
    }
    if faces.len() != n - 2 || edge_faces.iter().any(|s| s[0] == NONE) {
        return Err(not_maximal());
    }
    Ok((faces, edge_faces))
}

impl DualTree {
    /// Builds the dual of a maximal outerplanar graph, rooted at `root`
    /// (default: face 0, the lexicographically smallest triple).
    pub fn build(graph: &BeerGraph, root: Option<FaceId>) -> Result<DualTree> {
        let (faces, edge_faces) = triangulate(graph)?;
        let m = faces.len();
        let root = root.unwrap_or(0);
        if root >= m {
            return Err(Error::UnknownFace(root));
        }
        let mut parent = vec![None; m];
        let mut parent_edge = vec![NONE; m];
        let mut seen = vec![false; m];
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(f) = stack.pop() {
            for e in faces[f].edges {
                let [x, y] = edge_faces[e];
                let g = if x as usize == f { y } else { x };
                if g != NONE && !seen[g as usize] {
                    seen[g as usize] = true;
                    parent[g as usize] = Some(f);
                    parent_edge[g as usize] = e as u32;
                    stack.push(g as usize);
                }
            }
        }
        let tree = RootedTree::from_parents(&parent)?;
        let index = TreeIndex::build(&tree);
        let preorder = tree.preorder();

        // A face ends P_v when at most one of its two edges at v is interior.
        let n = graph.n();
        let mut ends = vec![(NONE, NONE); n];
        for (f, face) in faces.iter().enumerate() {
            for (i, &v) in face.vertices.iter().enumerate() {
                let interior = face
                    .edges_at(i)
                    .iter()
                    .filter(|&&e| edge_faces[e][1] != NONE)
                    .count();
                if interior <= 1 {
                    let slot = &mut ends[v];
                    if slot.0 == NONE {
                        *slot = (f as u32, f as u32);
                    } else {
                        slot.1 = f as u32;
                    }
                }
            }
        }
        let paths: Vec<(usize, usize)> = ends
            .iter()
            .map(|&(a, b)| (a as usize, b as usize))
            .collect();
        let colours = ColourPathSet::new(&index, &paths)?;
        Ok(DualTree {
            faces,
            edge_faces,
            parent_edge,
            preorder,
            tree,
            index,
            ends,
            colours,
        })
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    #[inline]
    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f]
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn root(&self) -> FaceId {
        self.tree.root()
    }

    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    pub fn index(&self) -> &TreeIndex {
        &self.index
    }

    pub fn colours(&self) -> &ColourPathSet {
        &self.colours
    }

    /// Faces in pre-order from the root.
    pub fn preorder(&self) -> impl DoubleEndedIterator<Item = FaceId> + '_ {
        self.preorder.iter().map(|&f| f as usize)
    }

    /// The graph edge shared with the parent face.
    #[inline]
    pub fn parent_edge(&self, f: FaceId) -> Option<EdgeId> {
        let e = self.parent_edge[f];
        (e != NONE).then_some(e as usize)
    }

    /// The one or two faces containing edge `e`.
    #[inline]
    pub fn edge_faces(&self, e: EdgeId) -> (FaceId, Option<FaceId>) {
        let [a, b] = self.edge_faces[e];
        (a as usize, (b != NONE).then_some(b as usize))
    }

    #[inline]
    pub fn is_hull_edge(&self, e: EdgeId) -> bool {
        self.edge_faces[e][1] == NONE
    }

    /// Faces adjacent to `f` in the dual, with the shared graph edge.
    pub fn neighbors(&self, f: FaceId) -> impl Iterator<Item = (FaceId, EdgeId)> + '_ {
        self.faces[f].edges.iter().filter_map(move |&e| {
            let [a, b] = self.edge_faces[e];
            let g = if a as usize == f { b } else { a };
            (g != NONE).then_some((g as usize, e))
        })
    }

    /// The graph edge shared by two faces, if they are adjacent.
    pub fn shared_edge(&self, f: FaceId, g: FaceId) -> Option<EdgeId> {
        let fe = &self.faces[f].edges;
        self.faces[g].edges.iter().copied().find(|e| fe.contains(e))
    }

    /// End faces `(c¹, c²)` of `P_v`, the lower id first.
    pub fn path_ends(&self, v: VertexId) -> (FaceId, FaceId) {
        let (a, b) = self.ends[v];
        (a as usize, b as usize)
    }

    /// The canonical face containing `v`: the lower-id end of `P_v`.
    #[inline]
    pub fn face_of(&self, v: VertexId) -> FaceId {
        self.ends[v].0 as usize
    }

    /// True iff face `f` lies on `P_v`.
    #[inline]
    pub fn contains(&self, f: FaceId, v: VertexId) -> bool {
        self.faces[f].contains(v)
    }

    /// The face vertex not on edge `e` of face `f`.
    pub fn third_vertex(&self, graph: &BeerGraph, f: FaceId, e: EdgeId) -> VertexId {
        let edge = graph.edge(e);
        *self.faces[f]
            .vertices
            .iter()
            .find(|&&x| x != edge.u && x != edge.v)
            .expect("edge belongs to face")
    }
}

/// Builds the dual of a normalized graph.
pub fn build_dual(norm: &NormalizedGraph, root: Option<FaceId>) -> Result<DualTree> {
    DualTree::build(norm.graph(), root)
}

/// All fan chains, stored aligned with the graph's adjacency arrays.
///
/// The chain `ρ_v` lists the neighbours of `v` clockwise starting after `v`:
/// first the larger neighbours ascending, then the smaller ones ascending.
/// Consecutive chain vertices span a face with `v`. For chain position `i`
/// of `v` (slot `adj_offset(v) + i`) we store the prefix weight, the edge to
/// the next chain vertex and its beer surcharge `A_v[i]`.
#[derive(Clone, Debug)]
pub struct Chains {
    rot: Vec<u32>,
    prefix: Vec<Weight>,
    link: Vec<u32>,
    detour: RmqIndex<Weight>,
}

impl Chains {
    /// `edge_beer[e]` is the beer distance across edge `e`.
    pub fn build(graph: &BeerGraph, edge_beer: &[Weight]) -> Result<Chains> {
        let n = graph.n();
        let total = 2 * graph.edge_count();
        let mut rot = vec![0u32; n];
        let mut prefix = vec![Weight::ZERO; total];
        let mut link = vec![NONE; total];
        let mut surcharge = vec![Weight::INFINITY; total];
        for v in 0..n {
            let adj = graph.adjacency(v);
            let d = adj.len();
            let r = adj.partition_point(|&(x, _)| (x as usize) < v);
            rot[v] = r as u32;
            let off = graph.adj_offset(v);
            let mut acc = Weight::ZERO;
            for i in 0..d.saturating_sub(1) {
                let a = adj[(r + i) % d].0 as usize;
                let b = adj[(r + i + 1) % d].0 as usize;
                let e = graph.edge_id(a, b).ok_or(Error::NotAnEdge(a, b))?;
                prefix[off + i] = acc;
                link[off + i] = e as u32;
                surcharge[off + i] = edge_beer[e] - graph.weight(e);
                acc = acc + graph.weight(e);
            }
            if d > 0 {
                prefix[off + d - 1] = acc;
            }
        }
        Ok(Chains {
            rot,
            prefix,
            link,
            detour: RmqIndex::new(surcharge),
        })
    }

    pub fn chain<'a>(&'a self, graph: &'a BeerGraph, v: VertexId) -> Chain<'a> {
        Chain {
            chains: self,
            graph,
            owner: v,
            off: graph.adj_offset(v),
            len: graph.degree(v),
        }
    }
}

/// Read-only view of `ρ_v`.
#[derive(Clone, Copy)]
pub struct Chain<'a> {
    chains: &'a Chains,
    graph: &'a BeerGraph,
    owner: VertexId,
    off: usize,
    len: usize,
}

impl<'a> Chain<'a> {
    pub fn owner(&self) -> VertexId {
        self.owner
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn vertex(&self, i: usize) -> VertexId {
        let r = self.chains.rot[self.owner] as usize;
        self.graph.adjacency(self.owner)[(r + i) % self.len].0 as usize
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        (0..self.len).map(|i| self.vertex(i)).collect()
    }

    /// Edge id of `(owner, ρ_i)`.
    #[inline]
    pub fn spoke(&self, i: usize) -> EdgeId {
        let r = self.chains.rot[self.owner] as usize;
        self.graph.adjacency(self.owner)[(r + i) % self.len].1 as usize
    }

    /// Position of `u` on the chain.
    #[inline]
    pub fn position(&self, u: VertexId) -> Option<usize> {
        let idx = self.graph.adj_index(self.owner, u)?;
        let r = self.chains.rot[self.owner] as usize;
        Some((idx + self.len - r) % self.len)
    }

    /// Weight of the chain from `ρ_0` to `ρ_i`.
    #[inline]
    pub fn prefix(&self, i: usize) -> Weight {
        self.chains.prefix[self.off + i]
    }

    pub fn prefixes(&self) -> Vec<Weight> {
        (0..self.len).map(|i| self.prefix(i)).collect()
    }

    /// Edge id of `(ρ_i, ρ_{i+1})`.
    #[inline]
    pub fn link(&self, i: usize) -> EdgeId {
        self.chains.link[self.off + i] as usize
    }

    /// `A_v[i] = dist_B(ρ_i, ρ_{i+1}) - ω(ρ_i, ρ_{i+1})`.
    #[inline]
    pub fn detour(&self, i: usize) -> Weight {
        self.chains.detour.values()[self.off + i]
    }

    /// Leftmost position of the smallest surcharge among links `i..=j`.
    #[inline]
    pub fn cheapest_detour(&self, i: usize, j: usize) -> usize {
        self.chains.detour.argmin(self.off + i, self.off + j) - self.off
    }

    /// Chain distance between positions.
    #[inline]
    pub fn dist_at(&self, i: usize, j: usize) -> Weight {
        let (a, b) = (self.prefix(i), self.prefix(j));
        if a <= b {
            b - a
        } else {
            a - b
        }
    }

    /// Weight of the chain subpath between two chain vertices.
    pub fn chain_dist(&self, u: VertexId, w: VertexId) -> Result<Weight> {
        let i = self.position(u).ok_or(Error::NotInFan(u, self.owner))?;
        let j = self.position(w).ok_or(Error::NotInFan(w, self.owner))?;
        Ok(self.dist_at(i, j))
    }
}
