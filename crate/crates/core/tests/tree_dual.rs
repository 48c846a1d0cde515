use beerpath::dual::DualTree;
use beerpath::tree::{
    ColourPathSet, Concat, MinSemigroup, PathSumIndex, RmqIndex, RootedTree, TreeIndex,
};
use beerpath::{fixtures, BeerGraph, Engine, Weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn chain(n: usize) -> RootedTree {
    let parents: Vec<Option<usize>> = (0..n).map(|i| i.checked_sub(1)).collect();
    RootedTree::from_parents(&parents).unwrap()
}

fn star(leaves: usize) -> RootedTree {
    let parents: Vec<Option<usize>> = (0..=leaves).map(|i| (i > 0).then_some(0)).collect();
    RootedTree::from_parents(&parents).unwrap()
}

fn face_id(d: &DualTree, vs: [usize; 3]) -> usize {
    d.faces()
        .iter()
        .position(|f| f.vertices == vs)
        .expect("face exists")
}

fn h6_dual() -> (BeerGraph, DualTree) {
    let g = fixtures::fix_h6();
    let d = DualTree::build(&g, None).unwrap();
    (g, d)
}

#[test]
fn levels_lca_subtrees() {
    let c = TreeIndex::build(&chain(3));
    assert_eq!((c.level(2), c.lca(1, 2)), (2, 1));
    let s = TreeIndex::build(&star(3));
    assert_eq!(s.lca(1, 2), 0);
    assert!(s.in_subtree(1, 0));
    assert!(!s.in_subtree(1, 2));
}

#[test]
fn second_node_and_on_path() {
    let c = TreeIndex::build(&chain(4));
    assert_eq!(c.second_on_path(0, 3).unwrap(), 1);
    assert_eq!(c.second_on_path(3, 0).unwrap(), 2);
    assert_eq!(TreeIndex::build(&star(3)).second_on_path(1, 2).unwrap(), 0);
    assert!(c.on_path(0, 3, 0));
    assert!(c.on_path(0, 3, 2));
    assert!(!c.on_path(0, 1, 3));
}

#[test]
fn closest_colour_on_a_chain() {
    let idx = TreeIndex::build(&chain(4));
    let cps = ColourPathSet::new(&idx, &[(0, 1)]).unwrap();
    assert_eq!(cps.closest(&idx, 1, 3, 0).unwrap(), 1);
    assert_eq!(cps.closest(&idx, 0, 1, 0).unwrap(), 1);
}

#[test]
fn hexagon_dual_queries() {
    let (_, d) = h6_dual();
    let f012 = face_id(&d, [0, 1, 2]);
    let f023 = face_id(&d, [0, 2, 3]);
    let f045 = face_id(&d, [0, 4, 5]);
    assert_eq!(d.root(), f012);
    assert_eq!(d.index().level(f045), 3);
    assert!(d.index().on_path(f012, f045, f023));
    // the colour of vertex 2 is the path P_2 = {(0,1,2), (0,2,3)}
    assert_eq!(d.colours().closest(d.index(), f012, f045, 2).unwrap(), f023);
}

#[test]
fn path_sums() {
    let one = RootedTree::from_parents(&[None, Some(0)]).unwrap();
    let ps = PathSumIndex::build(&one, vec![None, Some(7.5)], MinSemigroup).unwrap();
    assert_eq!(ps.query(0, 1).unwrap(), 7.5);
    assert_eq!(ps.query(1, 0).unwrap(), 7.5);

    let ps = PathSumIndex::build(
        &chain(3),
        vec![None, Some(vec![b'a' as u32]), Some(vec![b'b' as u32])],
        Concat,
    )
    .unwrap();
    let text = |v: Vec<u32>| {
        v.into_iter()
            .map(|c| char::from_u32(c).unwrap())
            .collect::<String>()
    };
    assert_eq!(text(ps.query(0, 2).unwrap()), "ab");
    assert_eq!(text(ps.query(2, 0).unwrap()), "ba");

    let mut rng = ChaCha8Rng::seed_from_u64(50);
    let parents: Vec<Option<usize>> = (0..50)
        .map(|i| (i > 0).then(|| rng.gen_range(0..i)))
        .collect();
    let tree = RootedTree::from_parents(&parents).unwrap();
    let idx = TreeIndex::build(&tree);
    let vals: Vec<f64> = (0..50).map(|_| rng.gen_range(0.0..100.0)).collect();
    let edge_values = (0..50).map(|v| tree.parent(v).map(|_| vals[v])).collect();
    let ps = PathSumIndex::build(&tree, edge_values, MinSemigroup).unwrap();
    for u in 0..50 {
        for v in 0..50 {
            if u == v {
                continue;
            }
            let l = idx.lca(u, v);
            let mut naive = f64::INFINITY;
            for mut x in [u, v] {
                while x != l {
                    naive = naive.min(vals[x]);
                    x = tree.parent(x).unwrap();
                }
            }
            assert_eq!(ps.query(u, v).unwrap(), naive);
        }
    }
}

#[test]
fn range_minima() {
    assert_eq!(RmqIndex::new(vec![5]).query(0, 0).unwrap(), 0);
    assert_eq!(RmqIndex::new(vec![3, 1, 2, 1]).query(0, 3).unwrap(), 1);
    let mut rng = ChaCha8Rng::seed_from_u64(1000);
    let a: Vec<u32> = (0..1000).map(|_| rng.gen_range(0..100)).collect();
    let r = RmqIndex::new(a.clone());
    for i in (0..1000).step_by(7) {
        for j in (i..1000).step_by(13) {
            let m = *a[i..=j].iter().min().unwrap();
            assert_eq!(
                r.query(i, j).unwrap(),
                i + a[i..=j].iter().position(|&x| x == m).unwrap()
            );
        }
    }
}

#[test]
fn dual_shapes() {
    let t3 = DualTree::build(&fixtures::fix_t3(), None).unwrap();
    assert_eq!(t3.face_count(), 1);
    assert_eq!(t3.face(0).vertices, [0, 1, 2]);
    assert_eq!(t3.face_of(1), 0);

    let f4g = fixtures::fix_f4();
    let f4 = DualTree::build(&f4g, None).unwrap();
    let (a, b) = (face_id(&f4, [0, 1, 2]), face_id(&f4, [0, 2, 3]));
    assert_eq!(f4.shared_edge(a, b), f4g.edge_id(0, 2));

    let (_, d) = h6_dual();
    assert_eq!(d.face_count(), 4);
    assert!((0..4).all(|f| d.neighbors(f).count() <= 2));
    let (lo, hi) = d.path_ends(0);
    assert_eq!(d.index().distance(lo, hi), 3);
    let (lo, hi) = d.path_ends(2);
    let mut ends = [d.face(lo).vertices, d.face(hi).vertices];
    ends.sort();
    assert_eq!(ends, [[0, 1, 2], [0, 2, 3]]);
    assert_eq!(d.face(d.face_of(5)).vertices, [0, 4, 5]);
    assert_eq!(d.face(d.face_of(0)).vertices, [0, 1, 2]);
}

#[test]
fn fan_chains() {
    let h6 = Engine::new(&fixtures::fix_h6()).unwrap();
    let c0 = h6.chain(0).unwrap();
    assert_eq!(c0.vertices(), vec![1, 2, 3, 4, 5]);
    let w = |x: f64| Weight::new(x).unwrap();
    assert_eq!(c0.prefixes(), vec![w(0.0), w(1.0), w(2.0), w(3.0), w(4.0)]);
    assert_eq!(c0.chain_dist(1, 5).unwrap(), w(4.0));
    assert_eq!(c0.chain_dist(3, 5).unwrap(), w(2.0));
    assert_eq!(c0.chain_dist(4, 4).unwrap(), w(0.0));
    // chains run from v+1 around the fan to v−1, like ρ_0 above
    assert_eq!(h6.chain(2).unwrap().vertices(), vec![3, 0, 1]);

    let t3 = Engine::new(&fixtures::fix_t3()).unwrap();
    let c = t3.chain(0).unwrap();
    assert_eq!(
        (c.vertices(), c.prefixes()),
        (vec![1, 2], vec![w(0.0), w(1.0)])
    );
}
