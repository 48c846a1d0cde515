use beerpath::graph::{is_maximal, validate};
use beerpath::harness::{
    answer_path_min, corpus, gen_random_maximal, gen_random_outerplanar, gen_random_tree,
    oracle_all_pairs, oracle_beer_sssp, reduce_path_min, verify, CorpusKind,
};
use beerpath::tree::RootedTree;
use beerpath::{fixtures, Engine, Weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn w(x: f64) -> Weight {
    Weight::new(x).unwrap()
}

#[test]
fn oracle_examples() {
    let t3 = fixtures::fix_t3();
    let (d, b) = oracle_beer_sssp(&t3, 0).unwrap();
    assert_eq!(d, vec![w(0.0), w(1.0), w(1.0)]);
    assert_eq!(b, vec![w(2.0), w(2.0), w(1.0)]);
    let all = oracle_all_pairs(&t3);
    assert_eq!(all.beer.row(0), &b[..]);
    assert_eq!(all.beer.get(2, 2), w(0.0));

    let (_, b) = oracle_beer_sssp(&fixtures::fix_f4(), 1).unwrap();
    assert_eq!(b, vec![w(3.0), w(4.0), w(3.0), w(2.0)]);

    let (_, b) = oracle_beer_sssp(&fixtures::fix_h6().with_beer([]).unwrap(), 0).unwrap();
    assert!(b.iter().all(|x| !x.is_finite()));
}

#[test]
fn oracle_tables_are_symmetric_and_compose() {
    for seed in 0..50 {
        let g = corpus(
            CorpusKind::ALL[seed as usize % 3],
            seed,
            3 + seed as usize % 30,
        )
        .unwrap();
        let t = oracle_all_pairs(&g);
        for u in 0..g.n() {
            for v in 0..g.n() {
                assert_eq!(t.dist.get(u, v), t.dist.get(v, u));
                assert_eq!(t.beer.get(u, v), t.beer.get(v, u));
                let via = g
                    .beer_stores()
                    .map(|s| t.dist.get(u, s) + t.dist.get(s, v))
                    .min();
                assert_eq!(t.beer.get(u, v), via.unwrap_or(Weight::INFINITY));
            }
        }
    }
}

#[test]
fn generator_contracts() {
    let g3 = gen_random_maximal(3, 1, 0.3).unwrap();
    assert_eq!((g3.n(), g3.edge_count()), (3, 3));
    let g = gen_random_maximal(50, 7, 0.1).unwrap();
    assert!(validate(&g).is_ok() && is_maximal(&g).unwrap());
    for n in 3..=100 {
        assert_eq!(
            gen_random_maximal(n, n as u64 + 1000, 0.1)
                .unwrap()
                .edge_count(),
            2 * n - 3
        );
    }
    for seed in 0..30 {
        let o = gen_random_outerplanar(60, seed, 0.5, 0.1).unwrap();
        assert!(validate(&o).is_ok());
        let t = gen_random_tree(60, seed, 0.1).unwrap();
        assert!(validate(&t).is_ok());
        assert_eq!(t.edge_count(), 59);
    }
    assert!(gen_random_maximal(2, 0, 0.1).is_err());
    assert!(gen_random_maximal(10, 0, -0.1).is_err());
    assert!(gen_random_outerplanar(10, 0, 2.0, 0.1).is_err());
    for (a, b) in [
        (
            gen_random_maximal(80, 3, 0.1),
            gen_random_maximal(80, 3, 0.1),
        ),
        (
            gen_random_outerplanar(80, 3, 0.4, 0.1),
            gen_random_outerplanar(80, 3, 0.4, 0.1),
        ),
        (gen_random_tree(80, 3, 0.1), gen_random_tree(80, 3, 0.1)),
    ] {
        assert_eq!(a.unwrap().to_json().unwrap(), b.unwrap().to_json().unwrap());
    }
}

#[test]
fn reduction_examples() {
    let edge = RootedTree::from_parents(&[None, Some(0)]).unwrap();
    let inst = reduce_path_min(&edge, &[0.0, 0.25]).unwrap();
    let e = Engine::new(inst.graph()).unwrap();
    assert_eq!(answer_path_min(&inst, &e, 0, 1).unwrap().0, 0.25);

    let chain = RootedTree::from_parents(&[None, Some(0), Some(1), Some(2)]).unwrap();
    let inst = reduce_path_min(&chain, &[0.0, 0.9, 0.1, 0.5]).unwrap();
    let e = Engine::new(inst.graph()).unwrap();
    let (m, edge) = answer_path_min(&inst, &e, 0, 3).unwrap();
    assert!((m - 0.1).abs() < 1e-12);
    assert_eq!(edge, 2);
}

#[test]
fn reduction_on_random_trees() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..50 {
        let n = rng.gen_range(2..=40);
        let parents: Vec<Option<usize>> = (0..n)
            .map(|i| (i > 0).then(|| rng.gen_range(0..i)))
            .collect();
        let tree = RootedTree::from_parents(&parents).unwrap();
        let values: Vec<f64> = (0..n).map(|_| rng.gen_range(f64::EPSILON..1.0)).collect();
        let inst = reduce_path_min(&tree, &values).unwrap();
        assert_eq!(inst.graph().n(), 3 * n - 2);
        let e = Engine::new(inst.graph()).unwrap();
        for u in 0..n {
            for v in (0..n).filter(|&v| v != u) {
                let (m, edge) = answer_path_min(&inst, &e, u, v).unwrap();
                let (nm, nedge) = inst.naive_path_min(u, v).unwrap();
                assert!((m - nm).abs() <= 1e-9);
                assert_eq!(edge, nedge);
            }
        }
    }
}

#[test]
fn verify_is_deterministic() {
    let a = verify(25, 9, 42).unwrap();
    let b = verify(25, 9, 42).unwrap();
    assert!(a.is_ok(), "{a}");
    assert_eq!(a.to_string(), b.to_string());
    assert_ne!(a.to_string(), verify(25, 9, 43).unwrap().to_string());
}
