use super::RootedTree;
use crate::graph::NONE;

/// Heavy-path decomposition: every root-to-node path crosses O(log n)
/// heavy paths, and each heavy path occupies a contiguous position range
/// with its head first.
#[derive(Clone, Debug)]
pub(crate) struct Hld {
    pub parent: Vec<u32>,
    pub depth: Vec<u32>,
    pub head: Vec<u32>,
    pub pos: Vec<u32>,
    pub order: Vec<u32>,
}

impl Hld {
    pub fn build(tree: &RootedTree) -> Hld {
        let n = tree.len();
        let pre = tree.preorder();
        let mut parent = vec![NONE; n];
        let mut depth = vec![0u32; n];
        for &v in &pre {
            for &c in tree.children_raw(v as usize) {
                parent[c as usize] = v;
                depth[c as usize] = depth[v as usize] + 1;
            }
        }
        let mut size = vec![1u32; n];
        for &v in pre.iter().rev() {
            if parent[v as usize] != NONE {
                size[parent[v as usize] as usize] += size[v as usize];
            }
        }
        let mut head = vec![0u32; n];
        let mut pos = vec![0u32; n];
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![tree.root];
        head[tree.root()] = tree.root;
        while let Some(v) = stack.pop() {
            pos[v as usize] = order.len() as u32;
            order.push(v);
            let kids = tree.children_raw(v as usize);
            let heavy = kids
                .iter()
                .copied()
                .fold(None, |best: Option<u32>, c| match best {
                    Some(b) if size[b as usize] >= size[c as usize] => Some(b),
                    _ => Some(c),
                });
            for &c in kids.iter().rev() {
                if Some(c) != heavy {
                    head[c as usize] = c;
                    stack.push(c);
                }
            }
            if let Some(h) = heavy {
                head[h as usize] = head[v as usize];
                stack.push(h);
            }
        }
        Hld {
            parent,
            depth,
            head,
            pos,
            order,
        }
    }

    pub fn level_ancestor(&self, mut u: usize, d: u32) -> usize {
        loop {
            let h = self.head[u] as usize;
            if self.depth[h] <= d {
                return self.order[(self.pos[u] - (self.depth[u] - d)) as usize] as usize;
            }
            u = self.parent[h] as usize;
        }
    }
}
