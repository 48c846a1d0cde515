use std::hint::black_box;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::generate::{gen_random_maximal, gen_zigzag};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::graph::VertexId;

/// Timings for one instance size.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    /// Seconds to build the engine (normalization included).
    pub build_secs: f64,
    /// Mean seconds per distance query.
    pub dist_secs: f64,
    /// Mean seconds per beer-distance query.
    pub beer_secs: f64,
}

/// Mean wall-clock seconds per call of `f` over `reps` calls, after one
/// untimed warm-up call.
pub fn time_per_call(reps: usize, mut f: impl FnMut()) -> f64 {
    f();
    let start = Instant::now();
    for _ in 0..reps {
        f();
    }
    start.elapsed().as_secs_f64() / reps.max(1) as f64
}

/// Least-squares line `y = slope·x + intercept` with its coefficient of
/// determination.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
}

pub fn linear_fit(xs: &[f64], ys: &[f64]) -> Result<LinearFit> {
    if xs.len() != ys.len() {
        return Err(Error::DimensionMismatch {
            expected: xs.len(),
            got: ys.len(),
        });
    }
    if xs.len() < 2 {
        return Err(Error::InvalidParams(
            "a fit needs at least two points".into(),
        ));
    }
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidParams("all x values are equal".into()));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let r2 = if syy == 0.0 {
        1.0
    } else {
        sxy * sxy / (sxx * syy)
    };
    Ok(LinearFit {
        slope,
        intercept,
        r2,
    })
}

/// Stores on the zigzag strip used for reporting benchmarks: every 16th vertex.
pub fn zigzag_stores(n: usize) -> Vec<VertexId> {
    (0..n).step_by(16).collect()
}

/// `count` pairs `(i, i + len)` on the lower side of [`gen_zigzag`]'s strip
/// (vertices `0..n/2` in order), so that the reported beer paths have
/// roughly `len` vertices.
pub fn zigzag_pairs_by_length(
    n: usize,
    len: usize,
    count: usize,
    seed: u64,
) -> Result<Vec<(VertexId, VertexId)>> {
    let half = n / 2;
    if len == 0 || len >= half {
        return Err(Error::InvalidParams(format!(
            "length {len} does not fit a strip of {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|_| {
            let s = rng.gen_range(1..half - len);
            (s, s + len)
        })
        .collect())
}

/// Random pairs of distinct vertices.
pub fn random_pairs(n: usize, count: usize, seed: u64) -> Vec<(VertexId, VertexId)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let u = rng.gen_range(0..n);
            let v = (u + rng.gen_range(1..n)) % n;
            (u, v)
        })
        .collect()
}

/// Rounds per [`bench_queries`] measurement; the median is reported.
pub const BENCH_ROUNDS: usize = 3;

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    xs[xs.len() / 2]
}

/// Build and query timings on a random maximal instance of size `n`: the
/// median of [`BENCH_ROUNDS`] builds and of as many batches of `queries`
/// queries each.
pub fn bench_queries(n: usize, queries: usize, seed: u64) -> Result<BenchRow> {
    let g = gen_random_maximal(n, seed, 0.05)?;
    let mut builds = Vec::with_capacity(BENCH_ROUNDS);
    let mut engine = None;
    for _ in 0..BENCH_ROUNDS {
        // free the previous engine first so every round allocates alike
        drop(engine.take());
        let start = Instant::now();
        engine = Some(Engine::new(&g)?);
        builds.push(start.elapsed().as_secs_f64());
    }
    let engine = engine.expect("at least one round");
    let pairs = random_pairs(n, queries, seed ^ 0x5eed);
    let o = engine.oracle();
    let mut it = pairs.iter().cycle();
    let (mut dist, mut beer) = (Vec::new(), Vec::new());
    for _ in 0..BENCH_ROUNDS {
        dist.push(time_per_call(queries, || {
            let &(u, v) = it.next().expect("cycle");
            black_box(o.query_dist(u, v).expect("in range"));
        }));
        beer.push(time_per_call(queries, || {
            let &(u, v) = it.next().expect("cycle");
            black_box(o.query_beer_dist(u, v).expect("in range"));
        }));
    }
    Ok(BenchRow {
        n,
        build_secs: median(builds),
        dist_secs: median(dist),
        beer_secs: median(beer),
    })
}

/// A zigzag strip of size `n` with [`zigzag_stores`], and its engine.
pub fn zigzag_engine(n: usize, seed: u64) -> Result<Engine> {
    Engine::new(&gen_zigzag(n, seed, &zigzag_stores(n))?)
}

/// Mean reported path length (vertices) and mean seconds per
/// `query_beer_path` over `pairs`, each pair repeated `reps` times.
pub fn time_reporting(
    engine: &Engine,
    pairs: &[(VertexId, VertexId)],
    reps: usize,
) -> Result<(f64, f64)> {
    let mut total_len = 0usize;
    for &(s, t) in pairs {
        total_len += engine.query_beer_path(s, t)?.len();
    }
    let mut it = pairs.iter().cycle();
    let secs = time_per_call(pairs.len() * reps.max(1), || {
        let &(s, t) = it.next().expect("cycle");
        black_box(engine.query_beer_path(s, t).expect("reachable"));
    });
    Ok((total_len as f64 / pairs.len() as f64, secs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_line() {
        let f = linear_fit(&[1.0, 2.0, 3.0, 4.0], &[3.0, 5.0, 7.0, 9.0]).unwrap();
        assert!((f.slope - 2.0).abs() < 1e-12 && (f.intercept - 1.0).abs() < 1e-12);
        assert!((f.r2 - 1.0).abs() < 1e-12);
        let g = linear_fit(&[0.0, 1.0, 2.0], &[0.0, 1.0, 0.0]).unwrap();
        assert!(g.r2.abs() < 1e-12);
        assert!(linear_fit(&[1.0], &[1.0]).is_err());
        assert!(linear_fit(&[1.0, 1.0], &[1.0, 2.0]).is_err());
    }

    #[test]
    fn zigzag_pairs_have_the_requested_span() {
        let e = zigzag_engine(400, 1).unwrap();
        let pairs = zigzag_pairs_by_length(400, 50, 20, 3).unwrap();
        assert!(pairs.iter().all(|&(s, t)| t == s + 50 && t < 200));
        let (len, secs) = time_reporting(&e, &pairs, 1).unwrap();
        assert!(len >= 40.0 && len <= 120.0, "{len}");
        assert!(secs > 0.0);
        assert!(zigzag_pairs_by_length(400, 200, 1, 0).is_err());
    }

    #[test]
    fn query_bench_runs() {
        let row = bench_queries(500, 200, 2).unwrap();
        assert_eq!(row.n, 500);
        assert!(row.build_secs > 0.0 && row.dist_secs > 0.0 && row.beer_secs > 0.0);
        assert!(random_pairs(5, 100, 1)
            .iter()
            .all(|&(u, v)| u != v && u < 5 && v < 5));
    }
}
