use beerpath::graph::{is_maximal, satisfies_gti, validate, Violation};
use beerpath::harness::{
    gen_random_maximal, gen_random_outerplanar, gen_random_tree, oracle_all_pairs,
};
use beerpath::normalize::{enforce_gti, maximalize, normalize};
use beerpath::{fixtures, BeerGraph, Weight};
use proptest::prelude::*;

fn w(x: f64) -> Weight {
    Weight::new(x).unwrap()
}

fn graph(n: usize, edges: &[(usize, usize, f64)], beer: &[usize]) -> BeerGraph {
    BeerGraph::new(
        n,
        edges.iter().map(|&(a, b, x)| (a, b, w(x))),
        beer.iter().copied(),
    )
    .unwrap()
}

fn heavy_triangle() -> BeerGraph {
    graph(3, &[(0, 1, 5.0), (1, 2, 1.0), (0, 2, 1.0)], &[])
}

fn star() -> BeerGraph {
    graph(4, &[(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0)], &[3])
}

#[test]
fn validation_reports_each_violation() {
    assert!(validate(&fixtures::fix_t3()).is_ok());
    let crossing = graph(
        4,
        &[
            (0, 1, 1.0),
            (1, 2, 1.0),
            (2, 3, 1.0),
            (0, 2, 1.0),
            (1, 3, 1.0),
        ],
        &[],
    );
    let v = validate(&crossing).violations;
    assert!(v.contains(&Violation::Crossing((0, 2), (1, 3))));
    assert!(v
        .iter()
        .any(|x| x.to_string() == "crossing chords (0,2),(1,3)"));
    let split = graph(4, &[(0, 1, 1.0), (2, 3, 1.0)], &[]);
    assert_eq!(validate(&split).violations, vec![Violation::Disconnected]);
    assert_eq!(Violation::Disconnected.to_string(), "disconnected");
}

#[test]
fn maximality() {
    assert!(is_maximal(&fixtures::fix_t3()).unwrap());
    assert!(is_maximal(&fixtures::fix_f4()).unwrap());
    let square = graph(
        4,
        &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (0, 3, 1.0)],
        &[3],
    );
    assert!(!is_maximal(&square).unwrap());
}

#[test]
fn triangle_inequality_check() {
    let t3 = fixtures::fix_t3();
    assert!(satisfies_gti(&t3, &oracle_all_pairs(&t3).dist).unwrap());
    let heavy = heavy_triangle();
    assert!(!satisfies_gti(&heavy, &oracle_all_pairs(&heavy).dist).unwrap());
    // every edge of the hexagon fan against Floyd–Warshall
    let h6 = fixtures::fix_h6();
    let n = h6.n();
    let mut fw = vec![vec![f64::INFINITY; n]; n];
    for (i, row) in fw.iter_mut().enumerate() {
        row[i] = 0.0;
    }
    for e in h6.edges() {
        fw[e.u][e.v] = e.weight.value();
        fw[e.v][e.u] = e.weight.value();
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                fw[i][j] = fw[i][j].min(fw[i][k] + fw[k][j]);
            }
        }
    }
    assert!(h6.edges().iter().all(|e| fw[e.u][e.v] == e.weight.value()));
    assert!(satisfies_gti(&h6, &oracle_all_pairs(&h6).dist).unwrap());
}

#[test]
fn maximalize_examples() {
    let (g, added) = maximalize(&fixtures::fix_f4()).unwrap();
    assert_eq!(g, fixtures::fix_f4());
    assert!(added.is_empty());

    let path = graph(3, &[(0, 1, 1.0), (1, 2, 1.0)], &[]);
    let (g, added) = maximalize(&path).unwrap();
    assert_eq!(added.len(), 1);
    let e = g.edge(added[0]);
    assert_eq!((e.u, e.v), (0, 2));
    assert_eq!(e.weight, Weight::INFINITY);

    let (g, added) = maximalize(&star()).unwrap();
    assert_eq!(g.edge_count(), 5);
    assert_eq!(added.len(), 2);
    assert!(added.iter().all(|&e| g.weight(e) == Weight::INFINITY));
}

#[test]
fn enforce_gti_examples() {
    let (delta, p) = enforce_gti(&fixtures::fix_t3()).unwrap();
    assert!(delta.iter().all(|&d| d == w(1.0)));
    assert!(p.iter().all(Option::is_none));

    let heavy = heavy_triangle();
    let (delta, p) = enforce_gti(&heavy).unwrap();
    let e01 = heavy.edge_id(0, 1).unwrap();
    assert_eq!((delta[e01], p[e01]), (w(2.0), Some(2)));

    let (g, _) = maximalize(&star()).unwrap();
    let (delta, p) = enforce_gti(&g).unwrap();
    for (a, b) in [(1, 2), (2, 3)] {
        let e = g.edge_id(a, b).unwrap();
        assert_eq!((delta[e], p[e]), (w(2.0), Some(0)));
    }
    let truth = oracle_all_pairs(&g.with_weights(&delta));
    assert!(g
        .edges()
        .iter()
        .zip(&delta)
        .all(|(e, d)| truth.dist.get(e.u, e.v) == *d));
}

#[test]
fn edge_expansion() {
    let t3 = normalize(&fixtures::fix_t3()).unwrap();
    let p = t3.expand_edge(0, 1).unwrap();
    assert_eq!((p.vertices, p.weight), (vec![0, 1], w(1.0)));

    let heavy = normalize(&heavy_triangle()).unwrap();
    let p = heavy.expand_edge(0, 1).unwrap();
    assert_eq!((p.vertices, p.weight), (vec![0, 2, 1], w(2.0)));

    let st = normalize(&star()).unwrap();
    let p = st.expand_edge(1, 2).unwrap();
    assert_eq!((p.vertices, p.weight), (vec![1, 0, 2], w(2.0)));
}

#[test]
fn normalize_examples() {
    let h6 = normalize(&fixtures::fix_h6()).unwrap();
    assert_eq!(h6.graph(), &fixtures::fix_h6());
    assert!(h6.added_edges().is_empty());
    assert_eq!(h6.relaxed_count(), 0);

    let st = normalize(&star()).unwrap();
    let truth = oracle_all_pairs(st.graph());
    assert_eq!(truth.beer.get(1, 1), w(4.0));

    let path = normalize(&graph(3, &[(0, 1, 1.0), (1, 2, 1.0)], &[])).unwrap();
    let truth = oracle_all_pairs(path.graph());
    assert!((0..3).all(|u| (0..3).all(|v| truth.beer.get(u, v) == Weight::INFINITY)));
}

#[test]
fn normalization_preserves_distances_on_random_graphs() {
    for seed in 0..200u64 {
        let n = 3 + (seed as usize * 7) % 40;
        let g = match seed % 3 {
            0 => gen_random_maximal(n, seed, 0.2).unwrap(),
            1 => gen_random_outerplanar(n, seed, 0.5, 0.2).unwrap(),
            _ => gen_random_tree(n, seed, 0.2).unwrap(),
        };
        let norm = normalize(&g).unwrap();
        assert!(is_maximal(norm.graph()).unwrap());
        let (a, b) = (oracle_all_pairs(&g), oracle_all_pairs(norm.graph()));
        assert_eq!(a, b, "seed {seed}");
        assert!(satisfies_gti(norm.graph(), &b.dist).unwrap());
        // every normalized edge expands to a walk of the same weight in the input
        for e in norm.graph().edges() {
            let p = norm.expand_edge(e.u, e.v).unwrap();
            assert_eq!(p.weight, e.weight);
            assert!(p
                .vertices
                .windows(2)
                .all(|x| g.edge_id(x[0], x[1]).is_some()));
        }
    }
}

proptest! {
    #[test]
    fn normalize_is_idempotent(n in 3usize..40, seed in any::<u64>(), keep in 0.0f64..1.0) {
        let g = gen_random_outerplanar(n, seed, keep, 0.1).unwrap();
        let once = normalize(&g).unwrap();
        let twice = normalize(once.graph()).unwrap();
        prop_assert_eq!(twice.graph(), once.graph());
        prop_assert!(twice.added_edges().is_empty());
        prop_assert_eq!(twice.relaxed_count(), 0);
    }
}
