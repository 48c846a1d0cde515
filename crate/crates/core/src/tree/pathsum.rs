use super::hld::Hld;
use super::RootedTree;
use crate::error::{Error, Result};

/// An associative, not necessarily commutative, operation on edge values,
/// together with direction reversal.
///
/// Each tree edge carries the value of traversing it from parent to child.
/// `reverse` gives the value of the opposite traversal and must be an
/// anti-homomorphism: `reverse(a ⊕ b) = reverse(b) ⊕ reverse(a)`. For
/// direction-free values over a commutative operation it is the identity;
/// for sequences it is reversal; for face-pair summaries it is transposition.
pub trait PathSemigroup {
    type Value: Clone;
    fn combine(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn reverse(&self, a: &Self::Value) -> Self::Value;
}

/// `(ℝ, min)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct MinSemigroup;

impl PathSemigroup for MinSemigroup {
    type Value = f64;
    fn combine(&self, a: &f64, b: &f64) -> f64 {
        a.min(*b)
    }
    fn reverse(&self, a: &f64) -> f64 {
        *a
    }
}

/// Sequences under concatenation; a path sum lists the path's edge labels.
#[derive(Clone, Copy, Debug, Default)]
pub struct Concat;

impl PathSemigroup for Concat {
    type Value = Vec<u32>;
    fn combine(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        out.extend_from_slice(a);
        out.extend_from_slice(b);
        out
    }
    fn reverse(&self, a: &Vec<u32>) -> Vec<u32> {
        a.iter().rev().copied().collect()
    }
}

/// Ordered path sums over a static tree.
///
/// Heavy-path decomposition splits any path into O(log n) pieces. Every piece
/// except the one on the top heavy path runs from a node up to the parent of
/// its path head and is answered by a stored fold; the top piece is answered
/// by a segment tree over the heavy-path order. Build is O(n) combines,
/// queries are O(log n) combines, storage is about 3n values.
pub struct PathSumIndex<S: PathSemigroup> {
    sg: S,
    /// Per node, everything one heavy-path hop reads, in one cache line slot.
    nodes: Vec<Hop>,
    /// `jump[pos(v)]`: fold from `parent(head(v))` down to `v`, light edge
    /// included; on the root's heavy path, from the root down to `v`.
    jump: Vec<Option<S::Value>>,
    /// Bottom-up segment tree over positions (`seg[size + i]` = edge value).
    seg: Vec<Option<S::Value>>,
    size: usize,
}

#[derive(Clone, Copy, Debug)]
struct Hop {
    head: u32,
    head_depth: u32,
    /// Parent of the head (`NONE` on the root's heavy path).
    up: u32,
    pos: u32,
}

impl<S: PathSemigroup> PathSumIndex<S> {
    /// `edge_values[v]` is the value of traversing the edge from `parent(v)`
    /// to `v`; the root's entry must be `None`.
    pub fn build(tree: &RootedTree, mut edge_values: Vec<Option<S::Value>>, sg: S) -> Result<Self> {
        let n = tree.len();
        if edge_values.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: edge_values.len(),
            });
        }
        for (v, val) in edge_values.iter().enumerate() {
            if val.is_some() != tree.parent(v).is_some() {
                return Err(Error::InvalidParams(format!(
                    "node {v}: edge values are required exactly for non-root nodes"
                )));
            }
        }
        let hld = Hld::build(tree);
        let nodes = (0..n)
            .map(|v| {
                let h = hld.head[v] as usize;
                Hop {
                    head: h as u32,
                    head_depth: hld.depth[h],
                    up: hld.parent[h],
                    pos: hld.pos[v],
                }
            })
            .collect();
        let mut jump: Vec<Option<S::Value>> = Vec::with_capacity(n);
        for i in 0..n {
            let v = hld.order[i] as usize;
            let own = edge_values[v].as_ref();
            let above = if hld.head[v] as usize == v {
                None
            } else {
                jump[i - 1].as_ref()
            };
            jump.push(match (above, own) {
                (Some(a), Some(o)) => Some(sg.combine(a, o)),
                (None, o) => o.cloned(),
                (Some(a), None) => Some(a.clone()),
            });
        }
        let size = n;
        let mut seg: Vec<Option<S::Value>> = vec![None; 2 * size];
        for i in 0..n {
            seg[size + i] = edge_values[hld.order[i] as usize].take();
        }
        for i in (1..size).rev() {
            seg[i] = join(&sg, &seg[2 * i], &seg[2 * i + 1]);
        }
        Ok(PathSumIndex {
            sg,
            nodes,
            jump,
            seg,
            size,
        })
    }

    pub fn semigroup(&self) -> &S {
        &self.sg
    }

    /// Fold of edge values along the path from `u` to `v`, in path order.
    pub fn query(&self, u: usize, v: usize) -> Result<S::Value> {
        let n = self.nodes.len();
        if u >= n || v >= n {
            return Err(Error::NodeOutOfRange(u.max(v)));
        }
        if u == v {
            return Err(Error::EqualNodes);
        }
        Ok(self.query_unchecked(u, v))
    }

    pub(crate) fn query_unchecked(&self, u: usize, v: usize) -> S::Value {
        let sg = &self.sg;
        let fix = |x: &S::Value, rev: bool| if rev { sg.reverse(x) } else { x.clone() };
        let mut up: Option<S::Value> = None;
        let mut down: Option<S::Value> = None;
        self.visit_path(
            u,
            v,
            |x, rev| {
                let x = fix(x, rev);
                up = Some(match up.take() {
                    Some(a) => sg.combine(&a, &x),
                    None => x,
                });
            },
            |x, rev| {
                let x = fix(x, rev);
                down = Some(match down.take() {
                    Some(d) => sg.combine(&x, &d),
                    None => x,
                });
            },
        );
        match (up, down) {
            (Some(a), Some(b)) => sg.combine(&a, &b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => unreachable!("u != v"),
        }
    }

    /// Visits the canonical pieces of the path `u → v` without combining
    /// them. `front` receives pieces in path order starting at `u`; `back`
    /// receives the others in reverse path order starting at `v`. The flag
    /// is set when a piece is traversed upward, i.e. against its stored
    /// direction, so that the caller can apply `reverse` lazily.
    pub(crate) fn visit_path(
        &self,
        u: usize,
        v: usize,
        mut front: impl FnMut(&S::Value, bool),
        mut back: impl FnMut(&S::Value, bool),
    ) {
        let (mut a, mut b) = (self.nodes[u], self.nodes[v]);
        while a.head != b.head {
            if a.head_depth >= b.head_depth {
                front(
                    self.jump[a.pos as usize]
                        .as_ref()
                        .expect("below a light edge"),
                    true,
                );
                a = self.nodes[a.up as usize];
            } else {
                back(
                    self.jump[b.pos as usize]
                        .as_ref()
                        .expect("below a light edge"),
                    false,
                );
                b = self.nodes[b.up as usize];
            }
        }
        let (pu, pv) = (a.pos as usize, b.pos as usize);
        if pu == pv {
            return;
        }
        // segment-tree nodes arrive left-side ascending and right-side
        // descending; each side feeds the end of the path it is adjacent to
        let up = pu > pv;
        let (lo, hi) = if up {
            (pv + 1, pu + 1)
        } else {
            (pu + 1, pv + 1)
        };
        let (mut l, mut r) = (lo + self.size, hi + self.size);
        while l < r {
            if l & 1 == 1 {
                let x = self.seg[l].as_ref().expect("segment");
                if up {
                    back(x, true);
                } else {
                    front(x, false);
                }
                l += 1;
            }
            if r & 1 == 1 {
                r -= 1;
                let x = self.seg[r].as_ref().expect("segment");
                if up {
                    front(x, true);
                } else {
                    back(x, false);
                }
            }
            l >>= 1;
            r >>= 1;
        }
    }
}

fn join<S: PathSemigroup>(sg: &S, a: &Option<S::Value>, b: &Option<S::Value>) -> Option<S::Value> {
    match (a, b) {
        (Some(x), Some(y)) => Some(sg.combine(x, y)),
        (Some(x), None) | (None, Some(x)) => Some(x.clone()),
        (None, None) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::random_tree;
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn naive_path(tree: &RootedTree, u: usize, v: usize) -> Vec<(usize, bool)> {
        // (child endpoint of each edge, traversed downward?)
        let anc = |mut x: usize| {
            let mut out = vec![x];
            while let Some(p) = tree.parent(x) {
                out.push(p);
                x = p;
            }
            out
        };
        let (au, av) = (anc(u), anc(v));
        let l = *au.iter().find(|x| av.contains(x)).unwrap();
        let mut out = Vec::new();
        for &x in au.iter().take_while(|&&x| x != l) {
            out.push((x, false));
        }
        let down: Vec<usize> = av.iter().take_while(|&&x| x != l).copied().collect();
        for &x in down.iter().rev() {
            out.push((x, true));
        }
        out
    }

    #[test]
    fn single_edge_min() {
        let tree = RootedTree::from_parents(&[None, Some(0)]).unwrap();
        let ps = PathSumIndex::build(&tree, vec![None, Some(7.5)], MinSemigroup).unwrap();
        assert_eq!(ps.query(0, 1).unwrap(), 7.5);
        assert_eq!(ps.query(1, 0).unwrap(), 7.5);
        assert!(matches!(ps.query(1, 1), Err(Error::EqualNodes)));
    }

    #[test]
    fn order_sensitive_concat() {
        let tree = RootedTree::from_parents(&[None, Some(0), Some(1)]).unwrap();
        let ps = PathSumIndex::build(
            &tree,
            vec![None, Some(vec![b'a' as u32]), Some(vec![b'b' as u32])],
            Concat,
        )
        .unwrap();
        let s = |v: Vec<u32>| v.into_iter().map(|c| c as u8 as char).collect::<String>();
        assert_eq!(s(ps.query(0, 2).unwrap()), "ab");
        assert_eq!(s(ps.query(2, 0).unwrap()), "ba");
    }

    #[test]
    fn visited_pieces_reassemble_the_path() {
        for seed in 0..20u64 {
            let n = 2 + seed as usize * 7;
            let tree = random_tree(n, seed);
            let values = (0..n)
                .map(|v| tree.parent(v).map(|_| vec![v as u32]))
                .collect();
            let ps = PathSumIndex::build(&tree, values, Concat).unwrap();
            for u in 0..n {
                for v in (0..n).filter(|&v| v != u) {
                    let mut head = Vec::new();
                    let mut tail = Vec::new();
                    let fix =
                        |x: &Vec<u32>, rev: bool| if rev { Concat.reverse(x) } else { x.clone() };
                    ps.visit_path(
                        u,
                        v,
                        |x, r| head.extend(fix(x, r)),
                        |x, r| tail.push(fix(x, r)),
                    );
                    for piece in tail.into_iter().rev() {
                        head.extend(piece);
                    }
                    assert_eq!(head, ps.query(u, v).unwrap(), "{u}->{v}");
                }
            }
        }
    }

    #[test]
    fn rejects_missing_values() {
        let tree = RootedTree::from_parents(&[None, Some(0)]).unwrap();
        assert!(PathSumIndex::build(&tree, vec![None, None], MinSemigroup).is_err());
        assert!(PathSumIndex::build(&tree, vec![Some(1.0), Some(1.0)], MinSemigroup).is_err());
    }

    #[test]
    fn random_min_matches_naive() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let tree = random_tree(50, 9);
        let vals: Vec<Option<f64>> = (0..50)
            .map(|v| tree.parent(v).map(|_| rng.gen_range(0.0..100.0)))
            .collect();
        let ps = PathSumIndex::build(&tree, vals.clone(), MinSemigroup).unwrap();
        for u in 0..50 {
            for v in 0..50 {
                if u != v {
                    let want = naive_path(&tree, u, v)
                        .iter()
                        .map(|&(x, _)| vals[x].unwrap())
                        .fold(f64::INFINITY, f64::min);
                    assert_eq!(ps.query(u, v).unwrap(), want);
                }
            }
        }
    }

    #[test]
    fn tracing_semigroup_lists_edges_in_order() {
        // Label edge (p,v) traversed downward as 2v, upward as 2v+1; reversal
        // maps one to the other, so the trace records direction too.
        #[derive(Clone, Copy)]
        struct Directed;
        impl PathSemigroup for Directed {
            type Value = Vec<u32>;
            fn combine(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
                Concat.combine(a, b)
            }
            fn reverse(&self, a: &Vec<u32>) -> Vec<u32> {
                a.iter().rev().map(|x| x ^ 1).collect()
            }
        }
        for seed in 0..8 {
            let n = 1 + seed as usize * 23;
            let tree = random_tree(n, seed);
            let vals = (0..n)
                .map(|v| tree.parent(v).map(|_| vec![2 * v as u32]))
                .collect();
            let ps = PathSumIndex::build(&tree, vals, Directed).unwrap();
            for u in 0..n {
                for v in 0..n {
                    if u == v {
                        continue;
                    }
                    let want: Vec<u32> = naive_path(&tree, u, v)
                        .iter()
                        .map(|&(x, d)| 2 * x as u32 + u32::from(!d))
                        .collect();
                    assert_eq!(ps.query(u, v).unwrap(), want, "seed {seed} {u}->{v}");
                }
            }
        }
    }
}
