use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use beerpath::harness::{
    bench_queries, check_instance, gen_random_maximal, gen_random_outerplanar, gen_random_tree,
    verify,
};
use beerpath::{fixtures, BeerGraph, Engine};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Distance, beer-distance and beer-path queries on outerplanar graphs.
#[derive(Parser)]
#[command(name = "beerpath", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random instance and print it as a graph file.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "beer-frac", default_value_t = 0.1)]
        beer_frac: f64,
        /// Keep each chord with this probability (non-maximal instance).
        #[arg(long, conflicts_with = "tree")]
        chords: Option<f64>,
        /// Generate a random tree.
        #[arg(long)]
        tree: bool,
    },
    /// Print the maximal, triangle-inequality-respecting completion of a graph.
    Normalize(GraphArg),
    /// Print the faces of the weak dual tree, one per line.
    Dual(GraphArg),
    /// Answer one query.
    Query {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, value_enum, default_value_t = Mode::BeerDist)]
        mode: Mode,
    },
    /// Distances and beer distances from one source, one vertex per line.
    Sssp {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        source: usize,
    },
    /// Check every answer against a brute-force oracle; exit status 1 on any mismatch.
    Verify {
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check a named fixture instead of random instances.
        #[arg(long)]
        fixture: Option<String>,
    },
    /// Time engine construction and queries on random maximal instances.
    Bench {
        /// Comma-separated sizes; scientific notation such as 1e5 is accepted.
        #[arg(long, value_delimiter = ',', default_value = "1e4,1e5")]
        sizes: Vec<String>,
        #[arg(long, default_value_t = 100_000)]
        queries: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print a named reference graph or a worked query trace on it.
    Fixtures {
        /// Print the graph file of this fixture.
        #[arg(long, conflicts_with = "trace")]
        emit: Option<String>,
        /// Print the query trace on this fixture (needs --from and --to).
        #[arg(long, requires_all = ["from", "to"])]
        trace: Option<String>,
        #[arg(long)]
        from: Option<usize>,
        #[arg(long)]
        to: Option<usize>,
    },
}

#[derive(Args)]
struct GraphArg {
    /// Graph file: {"n": N, "edges": [[u,v,w],...], "beer": [...]}.
    #[arg(long)]
    graph: PathBuf,
}

impl GraphArg {
    fn load(&self) -> Result<BeerGraph> {
        let text = std::fs::read_to_string(&self.graph)
            .with_context(|| format!("reading {}", self.graph.display()))?;
        let g = BeerGraph::from_json(&text)?;
        beerpath::graph::validate(&g).into_result()?;
        Ok(g)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Dist,
    BeerDist,
    BeerPath,
}

fn parse_size(s: &str) -> Result<usize> {
    let x: f64 = s
        .trim()
        .parse()
        .with_context(|| format!("bad size {s:?}"))?;
    if !(x >= 3.0 && x.fract() == 0.0 && x <= 1e9) {
        bail!("bad size {s:?}");
    }
    Ok(x as usize)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen {
            n,
            seed,
            beer_frac,
            chords,
            tree,
        } => {
            let g = if tree {
                gen_random_tree(n, seed, beer_frac)?
            } else if let Some(p) = chords {
                gen_random_outerplanar(n, seed, p, beer_frac)?
            } else {
                gen_random_maximal(n, seed, beer_frac)?
            };
            println!("{}", g.to_json()?);
        }
        Command::Normalize(arg) => {
            let norm = beerpath::normalize::normalize(&arg.load()?)?;
            println!("{}", norm.graph().to_json()?);
        }
        Command::Dual(arg) => {
            let e = Engine::new(&arg.load()?)?;
            let d = e.dual();
            for (f, face) in d.faces().iter().enumerate() {
                let [a, b, c] = face.vertices;
                match d.index().parent(f) {
                    Some(p) => println!("F{f} {a} {b} {c} parent F{p}"),
                    None => println!("F{f} {a} {b} {c} root"),
                }
            }
        }
        Command::Query {
            graph,
            from,
            to,
            mode,
        } => {
            let e = Engine::new(&graph.load()?)?;
            match mode {
                Mode::Dist => println!("{}", e.dist(from, to)?),
                Mode::BeerDist => println!("{}", e.beer_dist(from, to)?),
                Mode::BeerPath => {
                    let p = e.query_beer_path(from, to)?;
                    println!("{p}");
                    println!("weight {}", p.weight);
                }
            }
        }
        Command::Sssp { graph, source } => {
            let e = Engine::new(&graph.load()?)?;
            let r = e.sssp_beer(source)?;
            for v in 0..e.original().n() {
                println!("{v} {} {}", r.dist(v), r.beer_dist(v));
            }
        }
        Command::Verify {
            n,
            trials,
            seed,
            fixture,
        } => {
            let ok = match fixture {
                Some(name) => {
                    let r = check_instance(&fixtures::fixture(&name)?)?;
                    println!("fixture {name} {r}");
                    r.is_ok()
                }
                None => {
                    let r = verify(n, trials, seed)?;
                    println!("{r}");
                    r.is_ok()
                }
            };
            return Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            });
        }
        Command::Bench {
            sizes,
            queries,
            seed,
        } => {
            println!("n build_s dist_query_ns beer_query_ns");
            for s in &sizes {
                let row = bench_queries(parse_size(s)?, queries, seed)?;
                println!(
                    "{} {:.4} {:.1} {:.1}",
                    row.n,
                    row.build_secs,
                    row.dist_secs * 1e9,
                    row.beer_secs * 1e9
                );
            }
        }
        Command::Fixtures {
            emit,
            trace,
            from,
            to,
        } => match (emit, trace) {
            (Some(name), _) => println!("{}", fixtures::emit_fixture(&name)?),
            (None, Some(name)) => {
                let (s, t) = (from.expect("required"), to.expect("required"));
                print!("{}", fixtures::trace(&name, s, t)?);
            }
            (None, None) => {
                for name in fixtures::NAMES {
                    println!("{name}");
                }
            }
        },
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
