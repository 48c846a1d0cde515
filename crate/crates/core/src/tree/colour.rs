use super::TreeIndex;
use crate::error::{Error, Result};

/// At most three colours may share a node.
const MAX_PER_NODE: usize = 3;

/// A family of coloured paths in a tree with constant-time closest-colour
/// queries.
#[derive(Clone, Debug)]
pub struct ColourPathSet {
    ends: Vec<(u32, u32)>,
    high: Vec<u32>,
    offsets: Vec<u32>,
    members: Vec<u32>,
}

impl ColourPathSet {
    /// `paths[c] = (c¹, c²)` are the end nodes of the path of colour `c`.
    pub fn new(index: &TreeIndex, paths: &[(usize, usize)]) -> Result<ColourPathSet> {
        let n = index.len();
        let mut count = vec![0u32; n + 1];
        let mut high = Vec::with_capacity(paths.len());
        let each_node = |c1: usize, c2: usize, h: usize, f: &mut dyn FnMut(usize)| {
            for mut x in [c1, c2] {
                while x != h {
                    f(x);
                    x = index.parent(x).expect("below the highest node");
                }
            }
            f(h);
        };
        for &(c1, c2) in paths {
            if c1 >= n || c2 >= n {
                return Err(Error::NodeOutOfRange(c1.max(c2)));
            }
            let h = index.lca(c1, c2);
            high.push(h as u32);
            each_node(c1, c2, h, &mut |x| count[x] += 1);
        }
        let mut offsets = vec![0u32; n + 1];
        for v in 0..n {
            if count[v] as usize > MAX_PER_NODE {
                return Err(Error::TooManyColours(v, format!("{} paths", count[v])));
            }
            offsets[v + 1] = offsets[v] + count[v];
        }
        let mut fill = offsets[..n].to_vec();
        let mut members = vec![0u32; offsets[n] as usize];
        for (c, &(c1, c2)) in paths.iter().enumerate() {
            each_node(c1, c2, high[c] as usize, &mut |x| {
                members[fill[x] as usize] = c as u32;
                fill[x] += 1;
            });
        }
        let ends = paths.iter().map(|&(a, b)| (a as u32, b as u32)).collect();
        Ok(ColourPathSet {
            ends,
            high,
            offsets,
            members,
        })
    }

    pub fn colour_count(&self) -> usize {
        self.ends.len()
    }

    /// End nodes `(c¹, c²)` of the path of colour `c`.
    pub fn ends(&self, c: usize) -> (usize, usize) {
        let (a, b) = self.ends[c];
        (a as usize, b as usize)
    }

    /// Highest node `c^h` of the path of colour `c`.
    pub fn highest(&self, c: usize) -> usize {
        self.high[c] as usize
    }

    /// Colours whose paths contain `node`.
    pub fn colours_of(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        self.members[self.offsets[node] as usize..self.offsets[node + 1] as usize]
            .iter()
            .map(|&c| c as usize)
    }

    pub fn contains(&self, index: &TreeIndex, c: usize, node: usize) -> bool {
        let (c1, c2) = self.ends(c);
        index.on_path(c1, c2, node)
    }

    /// The node of `P_c` closest to `v`, given that `u` lies on `P_c`.
    pub fn closest(&self, index: &TreeIndex, u: usize, v: usize, c: usize) -> Result<usize> {
        if c >= self.ends.len() {
            return Err(Error::InvalidParams(format!("unknown colour {c}")));
        }
        if !self.contains(index, c, u) {
            return Err(Error::ColourMismatch { node: u, colour: c });
        }
        Ok(self.closest_unchecked(index, u, v, c))
    }

    pub(crate) fn closest_unchecked(
        &self,
        index: &TreeIndex,
        u: usize,
        v: usize,
        c: usize,
    ) -> usize {
        let (c1, c2) = self.ends(c);
        if u == v || index.on_path(c1, c2, v) {
            return v;
        }
        let ch = self.highest(c);
        let l = index.lca(u, v);
        if l == v {
            return ch;
        }
        if l == u {
            let (a, b) = (index.lca(v, c1), index.lca(v, c2));
            return if index.level(a) > index.level(b) {
                a
            } else {
                b
            };
        }
        match index.level(ch).cmp(&index.level(l)) {
            std::cmp::Ordering::Greater => ch,
            std::cmp::Ordering::Less => l,
            std::cmp::Ordering::Equal => {
                if index.in_subtree(c1, u) {
                    index.lca(v, c2)
                } else {
                    index.lca(v, c1)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::{bfs_dist, random_tree};
    use super::*;
    use crate::tree::RootedTree;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn chain_example() {
        let parents: Vec<Option<usize>> = (0..4).map(|i: usize| i.checked_sub(1)).collect();
        let idx = TreeIndex::build(&RootedTree::from_parents(&parents).unwrap());
        let cps = ColourPathSet::new(&idx, &[(0, 1)]).unwrap();
        assert_eq!(cps.closest(&idx, 1, 3, 0).unwrap(), 1);
        assert_eq!(cps.closest(&idx, 1, 0, 0).unwrap(), 0);
        assert!(matches!(
            cps.closest(&idx, 3, 0, 0),
            Err(Error::ColourMismatch { .. })
        ));
    }

    #[test]
    fn too_many_colours() {
        let idx = TreeIndex::build(&RootedTree::from_parents(&[None, Some(0)]).unwrap());
        assert!(ColourPathSet::new(&idx, &[(0, 1); 4]).is_err());
        assert!(ColourPathSet::new(&idx, &[(0, 1); 3]).is_ok());
    }

    #[test]
    fn exhaustive_against_bfs() {
        for seed in 0..30u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed + 100);
            let n = rng.gen_range(1..=40);
            let tree = random_tree(n, seed);
            let idx = TreeIndex::build(&tree);
            // paths with at most three per node
            let mut load = vec![0usize; n];
            let mut paths = Vec::new();
            for _ in 0..3 * n {
                let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
                let nodes: Vec<usize> = (0..n).filter(|&w| idx.on_path(a, b, w)).collect();
                if nodes.iter().all(|&w| load[w] < 3) {
                    nodes.iter().for_each(|&w| load[w] += 1);
                    paths.push((a, b));
                }
            }
            let cps = ColourPathSet::new(&idx, &paths).unwrap();
            let dist: Vec<Vec<usize>> = (0..n).map(|s| bfs_dist(&tree, s)).collect();
            for (c, &(a, b)) in paths.iter().enumerate() {
                let nodes: Vec<usize> = (0..n).filter(|&w| idx.on_path(a, b, w)).collect();
                for w in 0..n {
                    assert_eq!(cps.colours_of(w).any(|x| x == c), nodes.contains(&w));
                }
                for &u in &nodes {
                    for v in 0..n {
                        let got = cps.closest(&idx, u, v, c).unwrap();
                        let best = nodes.iter().map(|&w| dist[w][v]).min().unwrap();
                        assert!(nodes.contains(&got));
                        assert_eq!(dist[got][v], best, "seed {seed} c {c} u {u} v {v}");
                    }
                }
            }
        }
    }
}
