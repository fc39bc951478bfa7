//! Benchmark harness: generated instances × algorithms, optionally checked
//! against the exact oracle.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::burn::{ceil_range, validate, Coef};
use crate::cactus::approx_cactus;
use crate::ditree::{approx_arborescence, approx_arborescence_2, approx_polytree};
use crate::error::{BurnError, Result};
use crate::gen::{generate, GenSpec, GraphClass};
use crate::graph::{AnyGraph, DirectedTree, UndirectedGraph};
use crate::oracle::{baseline_3approx, exact_burning_number_with, oracle_cap, DEFAULT_BUDGET};
use crate::Approximation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Cactus275,
    Baseline3,
    Poly3,
    Arb2,
    Arb1905,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Cactus275,
        Algorithm::Baseline3,
        Algorithm::Poly3,
        Algorithm::Arb2,
        Algorithm::Arb1905,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Cactus275 => "cactus275",
            Algorithm::Baseline3 => "baseline3",
            Algorithm::Poly3 => "poly3",
            Algorithm::Arb2 => "arb2",
            Algorithm::Arb1905 => "arb1905",
        }
    }

    /// Whether the bench pairs this algorithm with generated `class` graphs.
    pub fn supports(self, class: GraphClass) -> bool {
        match self {
            Algorithm::Cactus275 | Algorithm::Baseline3 => class == GraphClass::Cactus,
            Algorithm::Poly3 => class != GraphClass::Cactus,
            Algorithm::Arb2 | Algorithm::Arb1905 => class == GraphClass::Arborescence,
        }
    }

    /// Longest schedule the approximation guarantee allows when the
    /// burning number is `exact`.
    pub fn bound(self, exact: u32) -> u32 {
        match self {
            Algorithm::Cactus275 => ceil_range(exact, Coef::ELEVEN_QUARTERS),
            Algorithm::Baseline3 | Algorithm::Poly3 => 3 * exact,
            Algorithm::Arb2 => 2 * exact,
            Algorithm::Arb1905 => ceil_range(exact, Coef::ARB_BUDGET) + 1,
        }
    }

    fn undirected(self, g: &AnyGraph) -> Result<&UndirectedGraph> {
        match g {
            AnyGraph::Undirected(g) => Ok(g),
            AnyGraph::Directed(_) => Err(self.mismatch("needs an undirected graph")),
        }
    }

    fn directed(self, g: &AnyGraph) -> Result<&DirectedTree> {
        match g {
            AnyGraph::Directed(t) => Ok(t),
            AnyGraph::Undirected(_) => Err(self.mismatch("needs a directed tree")),
        }
    }

    fn mismatch(self, reason: &str) -> BurnError {
        BurnError::ClassMismatch {
            alg: self.name().to_string(),
            reason: reason.to_string(),
        }
    }

    pub fn run(self, g: &AnyGraph) -> Result<Approximation> {
        match self {
            Algorithm::Cactus275 => approx_cactus(self.undirected(g)?),
            Algorithm::Baseline3 => baseline_3approx(self.undirected(g)?),
            Algorithm::Poly3 => approx_polytree(self.directed(g)?),
            Algorithm::Arb2 => approx_arborescence_2(self.directed(g)?),
            Algorithm::Arb1905 => approx_arborescence(self.directed(g)?),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = BurnError;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| BurnError::Infeasible(format!("unknown algorithm `{s}`")))
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub classes: Vec<GraphClass>,
    pub sizes: Vec<usize>,
    pub seeds: Vec<u64>,
    pub algs: Vec<Algorithm>,
    /// Worker threads; 0 lets rayon decide.
    pub workers: usize,
    /// Fill the `ms` column. Off by default so output is reproducible.
    pub timing: bool,
    /// Instances up to this size also get the exact burning number.
    pub oracle_cap: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            classes: GraphClass::ALL.to_vec(),
            sizes: vec![10, 12, 14],
            seeds: vec![1],
            algs: Algorithm::ALL.to_vec(),
            workers: 0,
            timing: false,
            oracle_cap: oracle_cap(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub name: String,
    pub class: String,
    #[serde(rename = "V")]
    pub v: usize,
    #[serde(rename = "E")]
    pub e: usize,
    pub alg: String,
    /// Realized schedule length.
    pub estimate: Option<usize>,
    pub b_star: Option<u32>,
    pub ms: Option<f64>,
    pub seed: u64,
    pub exact: Option<u32>,
    /// `estimate / exact`, rounded to four decimals.
    pub ratio: Option<f64>,
    /// `ok`, `bound-violated`, or `error: ...`.
    pub status: String,
}

impl BenchRecord {
    pub fn is_ok(&self) -> bool {
        self.status == "ok"
    }
}

type RowKey = (GraphClass, usize, u64, Algorithm);

struct Instance {
    class: GraphClass,
    n: usize,
    seed: u64,
}

/// Runs every compatible (instance, algorithm) pair. Rows come back sorted
/// by class, size, seed and algorithm regardless of scheduling.
pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRecord>> {
    if cfg.sizes.is_empty() || cfg.seeds.is_empty() || cfg.classes.is_empty() || cfg.algs.is_empty() {
        return Err(BurnError::Infeasible("bench needs classes, sizes, seeds and algorithms".into()));
    }
    let mut instances = Vec::new();
    for &class in &cfg.classes {
        for &n in &cfg.sizes {
            for &seed in &cfg.seeds {
                instances.push(Instance { class, n, seed });
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| BurnError::Infeasible(e.to_string()))?;
    let mut rows: Vec<(RowKey, BenchRecord)> = pool.install(|| {
        instances
            .par_iter()
            .flat_map_iter(|inst| bench_instance(cfg, inst))
            .collect()
    });
    rows.sort_by_key(|r| r.0);
    Ok(rows.into_iter().map(|r| r.1).collect())
}

fn bench_instance(cfg: &BenchConfig, inst: &Instance) -> Vec<(RowKey, BenchRecord)> {
    let name = format!("{}_n{}_s{}", inst.class, inst.n, inst.seed);
    let algs: Vec<Algorithm> = cfg.algs.iter().copied().filter(|a| a.supports(inst.class)).collect();
    let key = |a: Algorithm| (inst.class, inst.n, inst.seed, a);
    let blank = |a: Algorithm, v: usize, e: usize, status: String| BenchRecord {
        name: name.clone(),
        class: inst.class.to_string(),
        v,
        e,
        alg: a.to_string(),
        estimate: None,
        b_star: None,
        ms: None,
        seed: inst.seed,
        exact: None,
        ratio: None,
        status,
    };

    let g = match generate(&GenSpec::new(inst.class, inst.n, inst.seed)) {
        Ok(g) => g,
        Err(e) => {
            return algs
                .into_iter()
                .map(|a| (key(a), blank(a, inst.n, 0, format!("error: {e}"))))
                .collect()
        }
    };
    let exact = if g.n() <= cfg.oracle_cap {
        let r = match &g {
            AnyGraph::Undirected(u) => exact_burning_number_with(u, cfg.oracle_cap, DEFAULT_BUDGET),
            AnyGraph::Directed(t) => exact_burning_number_with(t, cfg.oracle_cap, DEFAULT_BUDGET),
        };
        r.ok().map(|r| r.b)
    } else {
        None
    };

    algs.into_iter()
        .map(|alg| {
            let mut rec = blank(alg, g.n(), g.edge_count(), String::new());
            rec.exact = exact;
            let start = Instant::now();
            let out = alg.run(&g);
            if cfg.timing {
                rec.ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            rec.status = match out {
                Err(e) => format!("error: {e}"),
                Ok(a) => {
                    let verdict = match &g {
                        AnyGraph::Undirected(u) => validate(u, &a.schedule),
                        AnyGraph::Directed(t) => validate(t, &a.schedule),
                    };
                    if let crate::burn::Verdict::Reject(v) = verdict {
                        format!("error: invalid schedule: {v}")
                    } else {
                        let len = a.schedule.len();
                        rec.estimate = Some(len);
                        rec.b_star = Some(a.b_star);
                        match exact {
                            Some(x) => {
                                rec.ratio = Some((len as f64 / x as f64 * 1e4).round() / 1e4);
                                if len as u32 > alg.bound(x) {
                                    "bound-violated".to_string()
                                } else {
                                    "ok".to_string()
                                }
                            }
                            None => "ok".to_string(),
                        }
                    }
                }
            };
            (key(alg), rec)
        })
        .collect()
}

pub fn to_csv(records: &[BenchRecord]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if records.is_empty() {
        w.write_record(["name", "class", "V", "E", "alg", "estimate", "b_star", "ms", "seed", "exact", "ratio", "status"])
            .map_err(|e| BurnError::Io(e.to_string()))?;
    }
    for r in records {
        w.serialize(r).map_err(|e| BurnError::Io(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| BurnError::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn to_json(records: &[BenchRecord]) -> Result<String> {
    serde_json::to_string_pretty(records).map_err(|e| BurnError::Io(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> BenchConfig {
        BenchConfig {
            classes: GraphClass::ALL.to_vec(),
            sizes: vec![8, 10],
            seeds: vec![1, 2],
            algs: Algorithm::ALL.to_vec(),
            workers: 2,
            timing: false,
            oracle_cap: 14,
        }
    }

    #[test]
    fn rows_and_bounds() {
        let rows = run_bench(&small()).unwrap();
        // cactus: 2 algs, polytree: 1, arborescence: 3; 4 instances each.
        assert_eq!(rows.len(), 4 * (2 + 1 + 3));
        for r in &rows {
            assert!(r.is_ok(), "{r:?}");
            assert!(r.exact.is_some());
            assert!(r.ms.is_none());
        }
        assert_eq!(rows[0].name, "cactus_n8_s1");
        assert_eq!(rows[0].alg, "cactus275");
    }

    #[test]
    fn csv_is_stable_and_headed() {
        let a = to_csv(&run_bench(&small()).unwrap()).unwrap();
        let b = to_csv(&run_bench(&BenchConfig { workers: 1, ..small() }).unwrap()).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with("name,class,V,E,alg,estimate,b_star,ms,seed,exact,ratio,status\n"));
        assert_eq!(
            to_csv(&[]).unwrap(),
            "name,class,V,E,alg,estimate,b_star,ms,seed,exact,ratio,status\n"
        );
        let json = to_json(&run_bench(&small()).unwrap()).unwrap();
        assert!(json.contains("\"V\": 8"));
    }

    #[test]
    fn empty_lists_rejected() {
        assert!(run_bench(&BenchConfig { sizes: vec![], ..small() }).is_err());
    }

    #[test]
    fn algorithm_names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert!("arb3".parse::<Algorithm>().is_err());
        let cactus = AnyGraph::from(UndirectedGraph::star(4));
        assert!(matches!(Algorithm::Poly3.run(&cactus), Err(BurnError::ClassMismatch { .. })));
    }

    #[test]
    fn bounds() {
        assert_eq!(Algorithm::Cactus275.bound(2), 6);
        assert_eq!(Algorithm::Arb1905.bound(2), 5);
        assert_eq!(Algorithm::Arb2.bound(3), 6);
    }
}
