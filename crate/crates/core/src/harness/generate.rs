use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{BeerGraph, VertexId};
use crate::normalize::enforce_gti;
use crate::weight::Weight;

/// A weight on the grid `0.5 + k/1024`, `k ∈ [0, 1536]`, i.e. in `[0.5, 2.0]`.
///
/// Grid weights make every sum of up to millions of them exact in `f64`, so
/// distances computed in different orders agree bit for bit.
pub fn dyadic_weight(rng: &mut impl Rng) -> Weight {
    Weight::raw(0.5 + f64::from(rng.gen_range(0u32..=1536)) / 1024.0)
}

fn check_params(n: usize, min_n: usize, beer_fraction: f64) -> Result<()> {
    if n < min_n {
        return Err(Error::InvalidParams(format!(
            "n must be at least {min_n}, got {n}"
        )));
    }
    if !(0.0..=1.0).contains(&beer_fraction) {
        return Err(Error::InvalidParams(format!(
            "beer fraction {beer_fraction} is outside [0,1]"
        )));
    }
    Ok(())
}

fn sample_stores(rng: &mut ChaCha8Rng, n: usize, beer_fraction: f64) -> Vec<VertexId> {
    // the slack keeps products such as 0.1·30 from rounding up past an integer
    let k = ((beer_fraction * n as f64 - 1e-9).ceil().max(0.0) as usize).min(n);
    let mut stores = index::sample(rng, n, k).into_vec();
    stores.sort_unstable();
    stores
}

/// Uniform Dyck word with `k` pairs (`true` = open) by the cycle lemma:
/// exactly one rotation of a random arrangement of `k` opens and `k+1`
/// closes has all proper prefixes positive; dropping its last close
/// leaves a uniformly distributed Dyck word.
fn random_dyck(rng: &mut ChaCha8Rng, k: usize) -> Vec<bool> {
    let mut seq: Vec<bool> = (0..2 * k + 1).map(|i| i < k).collect();
    seq.shuffle(rng);
    let (mut height, mut low, mut at) = (0i64, 0i64, 0usize);
    for (i, &open) in seq.iter().enumerate() {
        height += if open { 1 } else { -1 };
        if height < low {
            low = height;
            at = i + 1;
        }
    }
    let len = seq.len();
    seq.rotate_left(at % len);
    // the rotation starting after the first minimum ends with the only
    // sub-zero step
    seq.pop();
    seq
}

/// Chords of the triangulation of the polygon `0..n` encoded by a Dyck word:
/// `( A ) B` puts the triangle `(lo, m, hi)` on the chord `(lo, hi)`, with
/// `A` triangulating `lo..=m` and `B` triangulating `m..=hi`.
fn dyck_chords(word: &[bool], n: usize) -> Vec<(VertexId, VertexId)> {
    let mut matching = vec![0usize; word.len()];
    let mut open = Vec::new();
    for (i, &b) in word.iter().enumerate() {
        if b {
            open.push(i);
        } else {
            matching[open.pop().expect("balanced word")] = i;
        }
    }
    let mut chords = Vec::with_capacity(n.saturating_sub(3));
    let mut stack = vec![(0usize, n - 1, 0usize, word.len())];
    while let Some((lo, hi, i, j)) = stack.pop() {
        if i == j {
            continue;
        }
        let p = matching[i];
        let m = lo + (p - i - 1) / 2 + 1;
        for (a, b) in [(lo, m), (m, hi)] {
            if b - a >= 2 {
                chords.push((a, b));
            }
        }
        stack.push((lo, m, i + 1, p));
        stack.push((m, hi, p + 1, j));
    }
    chords
}

fn hull(n: usize) -> impl Iterator<Item = (VertexId, VertexId)> {
    (0..n).map(move |i| (i.min((i + 1) % n), i.max((i + 1) % n)))
}

/// Uniform random triangulation with grid weights and random chords kept
/// with probability `chord_keep` (1 keeps all). Weights are not repaired.
fn raw_triangulation(
    n: usize,
    seed: u64,
    chord_keep: f64,
    beer_fraction: f64,
) -> Result<BeerGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let word = random_dyck(&mut rng, n - 2);
    let chords = dyck_chords(&word, n);
    let mut edges: Vec<(VertexId, VertexId, Weight)> = hull(n)
        .map(|(a, b)| (a, b, dyadic_weight(&mut rng)))
        .collect();
    for (a, b) in chords {
        let w = dyadic_weight(&mut rng);
        if chord_keep >= 1.0 || rng.gen_bool(chord_keep) {
            edges.push((a, b, w));
        }
    }
    let stores = sample_stores(&mut rng, n, beer_fraction);
    BeerGraph::new(n, edges, stores)
}

/// Maximal outerplanar graph: uniform random triangulation of the `n`-gon,
/// grid weights in `[0.5, 2.0]` lowered to satisfy the generalized triangle
/// inequality, `⌈beer_fraction·n⌉` stores. Deterministic per seed.
pub fn gen_random_maximal(n: usize, seed: u64, beer_fraction: f64) -> Result<BeerGraph> {
    check_params(n, 3, beer_fraction)?;
    let g = raw_triangulation(n, seed, 1.0, beer_fraction)?;
    let (delta, _) = enforce_gti(&g)?;
    Ok(g.with_weights(&delta))
}

/// Outerplanar graph: a random triangulation whose chords are each kept with
/// probability `chord_keep`; the hull cycle always stays. Weights are left
/// unrepaired so that normalization has work to do.
pub fn gen_random_outerplanar(
    n: usize,
    seed: u64,
    chord_keep: f64,
    beer_fraction: f64,
) -> Result<BeerGraph> {
    check_params(n, 3, beer_fraction)?;
    if !(0.0..=1.0).contains(&chord_keep) {
        return Err(Error::InvalidParams(format!(
            "chord probability {chord_keep} is outside [0,1]"
        )));
    }
    raw_triangulation(n, seed, chord_keep, beer_fraction)
}

/// Random recursive tree, relabelled in depth-first preorder so that the
/// numbering is an outerplanar embedding.
pub fn gen_random_tree(n: usize, seed: u64, beer_fraction: f64) -> Result<BeerGraph> {
    check_params(n, 2, beer_fraction)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parent: Vec<usize> = (1..n).map(|i| rng.gen_range(0..i)).collect();
    let mut children = vec![Vec::new(); n];
    for (i, &p) in parent.iter().enumerate() {
        children[p].push(i + 1);
    }
    let mut label = vec![0usize; n];
    let mut next = 0;
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        label[v] = next;
        next += 1;
        stack.extend(children[v].iter().rev());
    }
    let edges: Vec<(VertexId, VertexId, Weight)> = parent
        .iter()
        .enumerate()
        .map(|(i, &p)| (label[p], label[i + 1], dyadic_weight(&mut rng)))
        .collect();
    let stores = sample_stores(&mut rng, n, beer_fraction);
    BeerGraph::new(n, edges, stores)
}

/// Maximal outerplanar strip whose dual is a path: chords zigzag between the
/// two halves of the hull, `(lo, hi)`, `(lo+1, hi)`, `(lo+1, hi−1)`, …
/// Grid weights, repaired to satisfy the generalized triangle inequality;
/// stores are `stores` (all in range).
pub fn gen_zigzag(n: usize, seed: u64, stores: &[VertexId]) -> Result<BeerGraph> {
    check_params(n, 3, 0.0)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(VertexId, VertexId, Weight)> = hull(n)
        .map(|(a, b)| (a, b, dyadic_weight(&mut rng)))
        .collect();
    let (mut lo, mut hi) = (0usize, n - 1);
    let mut advance_lo = true;
    loop {
        if advance_lo {
            lo += 1;
        } else {
            hi -= 1;
        }
        advance_lo = !advance_lo;
        if hi - lo < 2 {
            break;
        }
        if hi - lo < n - 1 {
            edges.push((lo, hi, dyadic_weight(&mut rng)));
        }
    }
    let g = BeerGraph::new(n, edges, stores.iter().copied())?;
    let (delta, _) = enforce_gti(&g)?;
    Ok(g.with_weights(&delta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual::DualTree;
    use crate::graph::{is_maximal, validate};

    #[test]
    fn dyck_words_are_balanced_and_spread() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut shapes = std::collections::HashSet::new();
        for _ in 0..400 {
            let w = random_dyck(&mut rng, 3);
            let mut h = 0i32;
            for &b in &w {
                h += if b { 1 } else { -1 };
                assert!(h >= 0);
            }
            assert_eq!(h, 0);
            shapes.insert(w);
        }
        // Catalan(3) = 5 words, all reached
        assert_eq!(shapes.len(), 5);
    }

    #[test]
    fn maximal_generator_contract() {
        for n in 3..=100 {
            let g = gen_random_maximal(n, n as u64, 0.2).unwrap();
            assert!(is_maximal(&g).unwrap());
            assert_eq!(g.edge_count(), 2 * n - 3);
            assert_eq!(DualTree::build(&g, None).unwrap().face_count(), n - 2);
            let (delta, _) = enforce_gti(&g).unwrap();
            assert!(g.edges().iter().zip(&delta).all(|(e, d)| e.weight == *d));
        }
        assert_eq!(
            gen_random_maximal(50, 7, 0.1).unwrap().to_json().unwrap(),
            gen_random_maximal(50, 7, 0.1).unwrap().to_json().unwrap()
        );
        assert_eq!(gen_random_maximal(3, 9, 0.0).unwrap().edge_count(), 3);
        assert!(gen_random_maximal(2, 0, 0.1).is_err());
        assert!(gen_random_maximal(5, 0, 1.5).is_err());
    }

    #[test]
    fn outerplanar_and_tree_generators_are_valid() {
        for seed in 0..40 {
            let n = 3 + seed as usize * 3;
            let g = gen_random_outerplanar(n, seed, 0.4, 0.1).unwrap();
            assert!(validate(&g).is_ok());
            assert!(g.edge_count() >= n && g.edge_count() <= 2 * n - 3);
            let t = gen_random_tree(n, seed, 0.1).unwrap();
            assert!(validate(&t).is_ok());
            assert_eq!(t.edge_count(), n - 1);
        }
        assert!(gen_random_outerplanar(10, 0, 1.2, 0.1).is_err());
    }

    #[test]
    fn stores_follow_the_fraction() {
        let g = gen_random_maximal(40, 3, 0.25).unwrap();
        assert_eq!(g.beer_stores().count(), 10);
        let g = gen_random_maximal(40, 3, 0.0).unwrap();
        assert_eq!(g.beer_stores().count(), 0);
    }

    #[test]
    fn zigzag_dual_is_a_path() {
        for n in 3..40 {
            let g = gen_zigzag(n, 5, &[0]).unwrap();
            assert!(is_maximal(&g).unwrap(), "n = {n}");
            let d = DualTree::build(&g, None).unwrap();
            assert!((0..d.face_count()).all(|f| d.neighbors(f).count() <= 2));
        }
    }
}
