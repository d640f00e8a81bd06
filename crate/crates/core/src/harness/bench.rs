//! Benchmark suites over generated yes-instances.
//!
//! A suite is written as `key=value` pairs separated by `;`, for example
//! `sizes=2^8..2^13;reps=3;seed=1;modes=baseline,improved`. Keys:
//!
//! * `sizes`: comma list of `n`, where each item is a number, `2^k`, or a
//!   power-of-two range `2^a..2^b`.
//! * `reps`: instances per size (default 1).
//! * `seed`: base seed (default 0).
//! * `modes`: any of `baseline`, `improved`, `general` (default
//!   `baseline,improved`). `general` runs only for `n <= 12`.
//! * `coord_bound`: generator box (default 10^6).

use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::gen::{gen_yes_instance, DEFAULT_GEN_COORD_BOUND};
use super::HarnessError;
use crate::embed::{embed, AlgoStats, Mode};
use crate::general::embed_general_with_table;
use crate::plane3tree::validate_and_build;

const GENERAL_MAX_N: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BenchMode {
    Baseline,
    Improved,
    General,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchSuite {
    pub sizes: Vec<usize>,
    pub reps: usize,
    pub seed: u64,
    pub modes: Vec<BenchMode>,
    pub coord_bound: i64,
}

fn parse_size(item: &str) -> Result<Vec<usize>, String> {
    let pow = |s: &str| -> Result<usize, String> {
        match s.strip_prefix("2^") {
            Some(k) => {
                let k: u32 = k.parse().map_err(|_| format!("bad exponent in {s:?}"))?;
                1usize.checked_shl(k).ok_or_else(|| format!("{s} is too large"))
            }
            None => s.parse().map_err(|_| format!("bad size {s:?}")),
        }
    };
    match item.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (pow(a)?, pow(b)?);
            if !a.is_power_of_two() || !b.is_power_of_two() || a > b {
                return Err(format!("range {item:?} needs powers of two, low to high"));
            }
            Ok((a.trailing_zeros()..=b.trailing_zeros()).map(|k| 1 << k).collect())
        }
        None => Ok(vec![pow(item)?]),
    }
}

impl FromStr for BenchSuite {
    type Err = HarnessError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = |m: String| HarnessError::Suite(m);
        let mut suite = BenchSuite {
            sizes: Vec::new(),
            reps: 1,
            seed: 0,
            modes: vec![BenchMode::Baseline, BenchMode::Improved],
            coord_bound: DEFAULT_GEN_COORD_BOUND,
        };
        for part in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = part.split_once('=').ok_or_else(|| bad(format!("expected key=value, got {part:?}")))?;
            match k.trim() {
                "sizes" => {
                    for item in v.split(',').map(str::trim) {
                        suite.sizes.extend(parse_size(item).map_err(bad)?);
                    }
                }
                "reps" => suite.reps = v.parse().map_err(|_| bad(format!("bad reps {v:?}")))?,
                "seed" => suite.seed = v.parse().map_err(|_| bad(format!("bad seed {v:?}")))?,
                "coord_bound" => suite.coord_bound = v.parse().map_err(|_| bad(format!("bad coord_bound {v:?}")))?,
                "modes" => {
                    suite.modes = v
                        .split(',')
                        .map(|m| match m.trim() {
                            "baseline" => Ok(BenchMode::Baseline),
                            "improved" => Ok(BenchMode::Improved),
                            "general" => Ok(BenchMode::General),
                            o => Err(bad(format!("unknown mode {o:?}"))),
                        })
                        .collect::<Result<_, _>>()?;
                }
                other => return Err(bad(format!("unknown key {other:?}"))),
            }
        }
        if suite.sizes.is_empty() {
            return Err(bad("no sizes given".into()));
        }
        if let Some(&n) = suite.sizes.iter().find(|&&n| n < 3) {
            return Err(bad(format!("size {n} is below 3")));
        }
        Ok(suite)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub n: usize,
    pub rep: usize,
    pub seed: u64,
    pub mode: BenchMode,
    pub found: bool,
    pub wall_ms: f64,
    pub stats: AlgoStats,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries_evaluated: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub mode: BenchMode,
    pub n: usize,
    pub runs: usize,
    pub mean_wall_ms: f64,
    pub mean_count_queries: f64,
    pub mean_candidates_checked: f64,
    pub mean_binary_search_steps: f64,
}

/// Least-squares slope of `log(metric)` against `log(n)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchFit {
    pub mode: BenchMode,
    pub metric: String,
    pub exponent: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub suite: BenchSuite,
    pub records: Vec<BenchRecord>,
    pub summary: Vec<BenchRow>,
    pub fits: Vec<BenchFit>,
}

impl BenchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialise")
    }

    pub fn from_json(text: &str) -> Result<Self, HarnessError> {
        Ok(serde_json::from_str(text)?)
    }
}

fn instance_seed(base: u64, n: usize, rep: usize) -> u64 {
    base.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ ((n as u64) << 20) ^ rep as u64
}

fn run_job(suite: &BenchSuite, n: usize, rep: usize) -> Result<Vec<BenchRecord>, HarnessError> {
    let seed = instance_seed(suite.seed, n, rep);
    let inst = gen_yes_instance(n, seed, suite.coord_bound)?;
    let tree = validate_and_build(&inst.graph)?;
    let mut out = Vec::new();
    for &mode in &suite.modes {
        let start = Instant::now();
        let (found, stats, entries) = match mode {
            BenchMode::Baseline | BenchMode::Improved => {
                let m = if mode == BenchMode::Baseline { Mode::Baseline } else { Mode::Improved };
                let r = embed(&tree, &inst.points, m)?;
                (r.outcome.is_found(), r.stats, None)
            }
            BenchMode::General => {
                if n > GENERAL_MAX_N {
                    continue;
                }
                let r = embed_general_with_table(&tree, &inst.points)?;
                (r.mapping.is_some(), AlgoStats::default(), Some(r.table.entries_evaluated()))
            }
        };
        out.push(BenchRecord {
            n,
            rep,
            seed,
            mode,
            found,
            wall_ms: start.elapsed().as_secs_f64() * 1e3,
            stats,
            entries_evaluated: entries,
        });
    }
    Ok(out)
}

fn slope(xs: &[f64], ys: &[f64]) -> f64 {
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 {
        f64::NAN
    } else {
        sxy / sxx
    }
}

fn summarise(records: &[BenchRecord]) -> (Vec<BenchRow>, Vec<BenchFit>) {
    let mut keys: Vec<(BenchMode, usize)> = records.iter().map(|r| (r.mode, r.n)).collect();
    keys.sort_unstable();
    keys.dedup();
    let rows: Vec<BenchRow> = keys
        .iter()
        .map(|&(mode, n)| {
            let rs: Vec<&BenchRecord> = records.iter().filter(|r| r.mode == mode && r.n == n).collect();
            let mean = |f: &dyn Fn(&BenchRecord) -> f64| rs.iter().map(|r| f(r)).sum::<f64>() / rs.len() as f64;
            BenchRow {
                mode,
                n,
                runs: rs.len(),
                mean_wall_ms: mean(&|r| r.wall_ms),
                mean_count_queries: mean(&|r| r.stats.count_queries as f64),
                mean_candidates_checked: mean(&|r| r.stats.candidates_checked as f64),
                mean_binary_search_steps: mean(&|r| r.stats.binary_search_steps as f64),
            }
        })
        .collect();

    let mut fits = Vec::new();
    let mut modes: Vec<BenchMode> = rows.iter().map(|r| r.mode).collect();
    modes.dedup();
    for mode in modes {
        let rs: Vec<&BenchRow> = rows.iter().filter(|r| r.mode == mode).collect();
        if rs.len() < 2 {
            continue;
        }
        let metrics: [Metric; 3] = [
            ("count_queries", |r| r.mean_count_queries),
            ("candidates_checked", |r| r.mean_candidates_checked),
            ("wall_ms", |r| r.mean_wall_ms),
        ];
        for (name, f) in metrics {
            let pts: Vec<(f64, f64)> =
                rs.iter().filter(|r| f(r) > 0.0).map(|r| ((r.n as f64).ln(), f(r).ln())).collect();
            if pts.len() < 2 {
                continue;
            }
            let (xs, ys): (Vec<f64>, Vec<f64>) = pts.into_iter().unzip();
            fits.push(BenchFit { mode, metric: name.to_string(), exponent: slope(&xs, &ys) });
        }
    }
    (rows, fits)
}

type Metric = (&'static str, fn(&BenchRow) -> f64);

pub fn bench(suite: &BenchSuite) -> Result<BenchReport, HarnessError> {
    let jobs: Vec<(usize, usize)> =
        suite.sizes.iter().flat_map(|&n| (0..suite.reps).map(move |rep| (n, rep))).collect();
    let results: Vec<Result<Vec<BenchRecord>, HarnessError>> =
        jobs.par_iter().map(|&(n, rep)| run_job(suite, n, rep)).collect();
    let mut records = Vec::new();
    for r in results {
        records.extend(r?);
    }
    records.sort_by_key(|r| (r.n, r.rep, r.mode));
    let (summary, fits) = summarise(&records);
    Ok(BenchReport { suite: suite.clone(), records, summary, fits })
}
