use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::generate::{gen_random_maximal, gen_random_outerplanar, gen_random_tree};
use super::oracle::oracle_all_pairs;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::graph::{BeerGraph, PathInG};
use crate::weight::Weight;

/// Instance families used for verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusKind {
    Maximal,
    Outerplanar,
    Tree,
}

impl CorpusKind {
    pub const ALL: [CorpusKind; 3] = [
        CorpusKind::Maximal,
        CorpusKind::Outerplanar,
        CorpusKind::Tree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CorpusKind::Maximal => "maximal",
            CorpusKind::Outerplanar => "outerplanar",
            CorpusKind::Tree => "tree",
        }
    }
}

const BEER_FRACTIONS: [f64; 4] = [0.05, 0.1, 0.25, 0.5];

/// One corpus instance: `n` vertices, the store fraction and (for
/// outerplanar instances) the chord probability are derived from `seed`.
pub fn corpus(kind: CorpusKind, seed: u64, n: usize) -> Result<BeerGraph> {
    let beer = BEER_FRACTIONS[(seed % 4) as usize];
    match kind {
        CorpusKind::Maximal => gen_random_maximal(n, seed, beer),
        CorpusKind::Outerplanar => {
            gen_random_outerplanar(n, seed, [0.2, 0.5, 0.8][(seed % 3) as usize], beer)
        }
        CorpusKind::Tree => gen_random_tree(n, seed, beer),
    }
}

/// Agreement of every engine answer on one graph with the brute-force oracle.
///
/// Counts are over ordered vertex pairs; a report is clean when every
/// mismatch count is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InstanceReport {
    pub n: usize,
    pub stores: usize,
    pub pairs: usize,
    /// `dist` differs from the oracle.
    pub dist_mismatches: usize,
    /// `dist_B` differs from the oracle.
    pub beer_mismatches: usize,
    /// A reported beer path is not a walk of the input graph, misses every
    /// store, or does not replay to exactly `dist_B`.
    pub path_failures: usize,
    /// Per-edge or per-vertex base beer distances differ from the oracle, or
    /// `dist_B(u,u) ≠ 2·min_b dist(u,b)`.
    pub base_mismatches: usize,
    /// Normalization changed a distance, or a normalized edge is longer than
    /// the distance between its endpoints.
    pub normalize_mismatches: usize,
    /// Single-source beer distances or paths disagree with the oracle.
    pub sssp_mismatches: usize,
    /// Reported paths change when the dual tree is re-rooted.
    pub reroot_mismatches: usize,
}

impl InstanceReport {
    pub fn mismatches(&self) -> usize {
        self.dist_mismatches
            + self.beer_mismatches
            + self.path_failures
            + self.base_mismatches
            + self.normalize_mismatches
            + self.sssp_mismatches
            + self.reroot_mismatches
    }

    pub fn is_ok(&self) -> bool {
        self.mismatches() == 0
    }
}

impl fmt::Display for InstanceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} stores={} pairs={} dist={} beer={} path={} base={} normalize={} sssp={} reroot={} {}",
            self.n,
            self.stores,
            self.pairs,
            self.dist_mismatches,
            self.beer_mismatches,
            self.path_failures,
            self.base_mismatches,
            self.normalize_mismatches,
            self.sssp_mismatches,
            self.reroot_mismatches,
            if self.is_ok() { "ok" } else { "FAIL" }
        )
    }
}

/// Equal within `1e-9` relative; infinities must match exactly.
fn close(a: Weight, b: Weight) -> bool {
    if !a.is_finite() || !b.is_finite() {
        return a == b;
    }
    (a.value() - b.value()).abs() <= 1e-9 * b.value().abs().max(1.0)
}

fn valid_beer_path(
    graph: &BeerGraph,
    path: &PathInG,
    s: usize,
    t: usize,
    expected: Weight,
) -> bool {
    let ends = path.vertices.first() == Some(&s) && path.vertices.last() == Some(&t);
    // replay the additions in walk order on the input graph
    let replay = PathInG::from_walk(graph, path.vertices.clone());
    ends && path.visits_beer(graph)
        && matches!(replay, Ok(r) if r.weight == expected && path.weight == expected)
}

/// Checks every engine answer on `graph` against the brute-force oracle.
pub fn check_instance(graph: &BeerGraph) -> Result<InstanceReport> {
    let n = graph.n();
    let engine = Engine::new(graph)?;
    let last_face = engine.dual().face_count() - 1;
    let rerooted = Engine::with_root(graph, Some(last_face))?;
    let truth = oracle_all_pairs(graph);
    let norm = engine.graph();
    let norm_truth = oracle_all_pairs(norm);
    let mut r = InstanceReport {
        n,
        stores: graph.beer_stores().count(),
        pairs: n * n,
        ..Default::default()
    };

    for u in 0..n {
        let sssp = engine.sssp_beer(u)?;
        let nearest = graph
            .beer_stores()
            .map(|b| truth.dist.get(u, b))
            .min()
            .unwrap_or(Weight::INFINITY);
        if truth.beer.get(u, u) != nearest.double()
            || !close(engine.tables().vertex_beer(u), truth.beer.get(u, u))
        {
            r.base_mismatches += 1;
        }
        for v in 0..n {
            let (d, b) = (truth.dist.get(u, v), truth.beer.get(u, v));
            if norm_truth.dist.get(u, v) != d || norm_truth.beer.get(u, v) != b {
                r.normalize_mismatches += 1;
            }
            let (ed, eb) = engine.oracle().query(u, v)?;
            if !close(ed, d) {
                r.dist_mismatches += 1;
            }
            if !close(eb, b) {
                r.beer_mismatches += 1;
            }
            if !close(sssp.dist(v), d) || !close(sssp.beer_dist(v), b) {
                r.sssp_mismatches += 1;
            }
            if !b.is_finite() {
                let refused = matches!(engine.query_beer_path(u, v), Err(Error::Unreachable(..)));
                if !refused {
                    r.path_failures += 1;
                }
                continue;
            }
            let path = engine.query_beer_path(u, v)?;
            if !valid_beer_path(graph, &path, u, v, eb) {
                r.path_failures += 1;
            }
            match engine.sssp_beer_path(&sssp, v) {
                Ok(p) if valid_beer_path(graph, &p, u, v, sssp.beer_dist(v)) => {}
                _ => r.sssp_mismatches += 1,
            }
            if rerooted.query_beer_path(u, v)? != path {
                r.reroot_mismatches += 1;
            }
        }
    }
    for (e, edge) in norm.edges().iter().enumerate() {
        if norm_truth.dist.get(edge.u, edge.v) != edge.weight {
            r.normalize_mismatches += 1;
        }
        if !close(engine.tables().edge_beer(e), truth.beer.get(edge.u, edge.v)) {
            r.base_mismatches += 1;
        }
    }
    Ok(r)
}

/// Result of [`verify`]: one line per trial, in trial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub seed: u64,
    pub trials: Vec<(CorpusKind, u64, InstanceReport)>,
}

impl VerifyReport {
    pub fn is_ok(&self) -> bool {
        self.trials.iter().all(|(_, _, r)| r.is_ok())
    }

    pub fn failures(&self) -> usize {
        self.trials.iter().filter(|(_, _, r)| !r.is_ok()).count()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (kind, seed, r)) in self.trials.iter().enumerate() {
            writeln!(f, "trial {i} kind={} seed={seed} {r}", kind.name())?;
        }
        write!(
            f,
            "verified {} instances from seed {}: {} failed",
            self.trials.len(),
            self.seed,
            self.failures()
        )
    }
}

/// `trials` random instances with `3 ≤ n ≤ max_n`, cycling through the
/// corpus kinds; fully determined by `seed` (no timings are reported).
pub fn verify(max_n: usize, trials: usize, seed: u64) -> Result<VerifyReport> {
    if max_n < 3 {
        return Err(Error::InvalidParams(format!(
            "n must be at least 3, got {max_n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(trials);
    for i in 0..trials {
        let kind = CorpusKind::ALL[i % 3];
        let n = rng.gen_range(3..=max_n);
        let instance_seed: u64 = rng.gen();
        let g = corpus(kind, instance_seed, n)?;
        out.push((kind, instance_seed, check_instance(&g)?));
    }
    Ok(VerifyReport { seed, trials: out })
}
