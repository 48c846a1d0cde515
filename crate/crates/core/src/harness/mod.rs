//! Ground truth and workloads: a brute-force beer-distance oracle, seeded
//! instance generators, the path-minimum reduction, and the `verify` and
//! `bench` drivers.

mod bench;
mod generate;
mod oracle;
mod reduction;
mod verify;

pub use bench::{
    bench_queries, linear_fit, random_pairs, time_per_call, time_reporting, zigzag_engine,
    zigzag_pairs_by_length, zigzag_stores, BenchRow, LinearFit, BENCH_ROUNDS,
};
pub use generate::{
    dyadic_weight, gen_random_maximal, gen_random_outerplanar, gen_random_tree, gen_zigzag,
};
pub use oracle::{oracle_all_pairs, oracle_beer_sssp, OracleTables};
pub use reduction::{answer_path_min, reduce_path_min, ReductionInstance};
pub use verify::{check_instance, corpus, verify, CorpusKind, InstanceReport, VerifyReport};
