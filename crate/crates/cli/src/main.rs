use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use p3embed::embed::{embed_with, EmbedOptions, Mode, Outcome};
use p3embed::general::embed_general_with_table;
use p3embed::geometry::{Point, DEFAULT_COORD_BOUND};
use p3embed::harness::gen::DEFAULT_GEN_COORD_BOUND;
use p3embed::harness::{
    bench, export_svg, gen_plane3tree, gen_yes_instance_with, mapping_to_json, mapping_to_text, parse_mapping, verify,
    BenchSuite, Expected, GenOptions, InstanceFile, VerifyMode,
};
use p3embed::plane3tree::validate_and_build;
use p3embed::range_oracle::Backend;
use p3embed::Mapping;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EXIT_NO: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "p3embed", version, about = "Point-set embeddings of plane 3-trees")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Baseline,
    Improved,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Brute,
    Kd,
}

#[derive(Subcommand)]
enum Command {
    /// Embed on exactly n points; prints `vertex x y` lines.
    Embed {
        instance: PathBuf,
        #[arg(long, value_enum, default_value = "improved")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "kd")]
        backend: BackendArg,
        /// Write the drawing (or the bare points) as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Print algorithm counters as JSON on stderr.
        #[arg(long)]
        stats: bool,
        /// Print the mapping as JSON.
        #[arg(long)]
        json: bool,
        /// Largest accepted |coordinate|.
        #[arg(long, default_value_t = DEFAULT_COORD_BOUND)]
        coord_bound: i64,
    },
    /// Embed on a superset of the vertices' points.
    EmbedGeneral {
        instance: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        stats: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_COORD_BOUND)]
        coord_bound: i64,
    },
    /// Check a mapping against an instance.
    Verify {
        instance: PathBuf,
        mapping: PathBuf,
        /// Allow unused points (superset problem).
        #[arg(long)]
        generalized: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_COORD_BOUND)]
        coord_bound: i64,
    },
    /// Generate an instance.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Plant an embedding and record it as the witness.
        #[arg(long)]
        yes: bool,
        /// With --yes, allow collinear points.
        #[arg(long)]
        collinear: bool,
        #[arg(long, default_value_t = DEFAULT_GEN_COORD_BOUND)]
        coord_bound: i64,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a benchmark suite and print a JSON report.
    Bench {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Fail(u8, String);

impl Fail {
    fn input(e: impl std::fmt::Display) -> Fail {
        Fail(EXIT_INPUT, e.to_string())
    }
}

fn read_instance(path: &Path, bound: i64) -> Result<InstanceFile, Fail> {
    let text = fs::read_to_string(path).map_err(|e| Fail::input(format!("{}: {e}", path.display())))?;
    InstanceFile::parse_any(&text, bound).map_err(|e| Fail::input(format!("{}: {e}", path.display())))
}

fn emit_mapping(m: &Mapping, json: bool) {
    if json {
        println!("{}", mapping_to_json(m));
    } else {
        print!("{}", mapping_to_text(m));
    }
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), Fail> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Fail::input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn random_points(n: usize, seed: u64, bound: i64) -> Result<Vec<Point>, Fail> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut seen = std::collections::HashSet::new();
    let mut pts = Vec::with_capacity(n);
    let cells = (2 * bound as u128 + 1).pow(2);
    if (n as u128) > cells {
        return Err(Fail::input(format!("coordinate bound {bound} cannot hold {n} distinct points")));
    }
    while pts.len() < n {
        let p = Point::with_bound(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound), bound)
            .map_err(Fail::input)?;
        if seen.insert(p) {
            pts.push(p);
        }
    }
    Ok(pts)
}

fn run(cli: Cli) -> Result<u8, Fail> {
    match cli.cmd {
        Command::Embed { instance, mode, backend, svg, stats, json, coord_bound } => {
            let inst = read_instance(&instance, coord_bound)?;
            let tree = validate_and_build(&inst.graph).map_err(Fail::input)?;
            let opts = EmbedOptions {
                mode: match mode {
                    ModeArg::Baseline => Mode::Baseline,
                    ModeArg::Improved => Mode::Improved,
                },
                backend: match backend {
                    BackendArg::Brute => Backend::BruteForce,
                    BackendArg::Kd => Backend::Hierarchical,
                },
            };
            let r = embed_with(&tree, &inst.points, &opts).map_err(Fail::input)?;
            if stats {
                let s = serde_json::json!({ "stats": r.stats, "attempts": r.attempts });
                eprintln!("{s}");
            }
            if let Some(path) = svg {
                export_svg(&inst.graph, &inst.points, r.outcome.mapping(), &path).map_err(Fail::input)?;
            }
            match r.outcome {
                Outcome::Found(m) => {
                    emit_mapping(&m, json);
                    Ok(0)
                }
                Outcome::NoEmbedding(reason) => {
                    let reason = serde_json::to_value(reason).unwrap_or_default();
                    println!("not embeddable: {}", reason.as_str().unwrap_or("unknown"));
                    Ok(EXIT_NO)
                }
            }
        }
        Command::EmbedGeneral { instance, svg, stats, json, coord_bound } => {
            let inst = read_instance(&instance, coord_bound)?;
            let tree = validate_and_build(&inst.graph).map_err(Fail::input)?;
            let r = embed_general_with_table(&tree, &inst.points).map_err(Fail::input)?;
            if stats {
                eprintln!("{}", serde_json::json!({ "entries_evaluated": r.table.entries_evaluated() }));
            }
            if let Some(path) = svg {
                export_svg(&inst.graph, &inst.points, r.mapping.as_ref(), &path).map_err(Fail::input)?;
            }
            match r.mapping {
                Some(m) => {
                    emit_mapping(&m, json);
                    Ok(0)
                }
                None => {
                    println!("not embeddable");
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Verify { instance, mapping, generalized, json, coord_bound } => {
            let inst = read_instance(&instance, coord_bound)?;
            let text = fs::read_to_string(&mapping).map_err(|e| Fail::input(format!("{}: {e}", mapping.display())))?;
            let m = parse_mapping(&text).map_err(|e| Fail::input(format!("{}: {e}", mapping.display())))?;
            let mode = if generalized { VerifyMode::Generalized } else { VerifyMode::Exact };
            let report = verify(&inst.graph, &inst.points, &m, mode).map_err(Fail::input)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap_or_default());
            } else if report.valid {
                println!("valid");
            } else {
                println!("invalid: {} violation(s)", report.violation_count);
                for v in &report.violations {
                    println!("  {}", serde_json::to_string(v).unwrap_or_default());
                }
            }
            Ok(if report.valid { 0 } else { EXIT_NO })
        }
        Command::Gen { n, seed, yes, collinear, coord_bound, json, out } => {
            let inst = if yes {
                let opts = GenOptions { general_position: !collinear, coord_bound };
                gen_yes_instance_with(n, seed, &opts).map_err(Fail::input)?
            } else {
                InstanceFile {
                    graph: gen_plane3tree(n, seed).map_err(Fail::input)?,
                    points: random_points(n, seed, coord_bound)?,
                    expected: Some(Expected::Unknown),
                    witness: None,
                }
            };
            let text = if json { inst.to_json() + "\n" } else { inst.to_text() };
            write_out(out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Bench { suite, out } => {
            let suite: BenchSuite = suite.parse().map_err(Fail::input)?;
            let report = bench(&suite).map_err(Fail::input)?;
            for row in &report.summary {
                eprintln!(
                    "{:?} n={} runs={} wall_ms={:.2} count_queries={:.1} candidates={:.1}",
                    row.mode, row.n, row.runs, row.mean_wall_ms, row.mean_count_queries, row.mean_candidates_checked
                );
            }
            for f in &report.fits {
                eprintln!("fit {:?} {}: exponent {:.3}", f.mode, f.metric, f.exponent);
            }
            write_out(out.as_deref(), &(report.to_json() + "\n"))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
