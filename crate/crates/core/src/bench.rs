//! Batch runs over a directory of edge-list files, reported as CSV.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use crate::approx::{approximate, bound_report, Method};
use crate::error::Result;
use crate::exact::{exact_m2vsbss, ExactLimits};
use crate::graph::Digraph;
use crate::sparsify::{DeletionOrder, OrderMode};

pub const CSV_HEADER: [&str; 10] = [
    "name",
    "n",
    "m",
    "method",
    "result_size",
    "bound",
    "lower_bound",
    "exact_size",
    "ratio",
    "wall_time_ms",
];

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub methods: Vec<Method>,
    pub orders: Vec<OrderMode>,
    pub seeds: Vec<u64>,
    pub with_exact: bool,
    pub exact_limits: ExactLimits,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            methods: vec![Method::Alg1, Method::Union],
            orders: vec![OrderMode::Lexicographic],
            seeds: vec![0],
            with_exact: false,
            exact_limits: ExactLimits::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub name: String,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub method: Method,
    pub order: OrderMode,
    pub seed: u64,
    pub outcome: std::result::Result<RowStats, String>,
    pub wall_time_ms: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RowStats {
    pub result_size: usize,
    pub bound: usize,
    pub lower_bound: usize,
    /// Present only when the exact search proved optimality.
    pub exact_size: Option<usize>,
    /// `result_size / exact_size`, or `result_size / lower_bound` without it.
    pub ratio: f64,
}

/// Regular files in `dir` (hidden files skipped), sorted by file name.
pub fn list_inputs(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in fs::read_dir(dir)? {
        let entry = entry?;
        let hidden = entry.file_name().to_string_lossy().starts_with('.');
        if entry.file_type()?.is_file() && !hidden {
            files.push(entry.path());
        }
    }
    files.sort();
    Ok(files)
}

fn file_label(path: &Path) -> String {
    path.file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

/// Rows for one graph, in (method, order, seed) order.
pub fn bench_graph(name: &str, g: &Digraph, config: &BenchConfig) -> Vec<BenchRow> {
    let exact = if config.with_exact {
        exact_m2vsbss(g, config.exact_limits)
            .ok()
            .filter(|r| r.proven_optimal)
            .map(|r| r.size)
    } else {
        None
    };

    let mut rows = Vec::new();
    for &method in &config.methods {
        for &mode in &config.orders {
            for &seed in &config.seeds {
                let start = Instant::now();
                let outcome = approximate(g, method, DeletionOrder { mode, seed })
                    .map(|r| {
                        let rep = bound_report(&r, exact);
                        RowStats {
                            result_size: rep.result_size,
                            bound: rep.bound,
                            lower_bound: rep.lower_bound,
                            exact_size: rep.exact_size,
                            ratio: rep.ratio,
                        }
                    })
                    .map_err(|e| e.to_string());
                rows.push(BenchRow {
                    name: name.to_string(),
                    n: Some(g.n()),
                    m: Some(g.m()),
                    method,
                    order: mode,
                    seed,
                    outcome,
                    wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
                });
            }
        }
    }
    rows
}

/// Benchmarks every file in `dir`. Unreadable or unparsable files yield
/// error rows; the run continues.
pub fn run_bench(dir: &Path, config: &BenchConfig) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for path in list_inputs(dir)? {
        let name = file_label(&path);
        let parsed = fs::read_to_string(&path)
            .map_err(crate::error::Error::from)
            .and_then(|text| Digraph::from_edge_list(&text));
        match parsed {
            Ok(g) => rows.extend(bench_graph(&name, &g, config)),
            Err(e) => {
                for &method in &config.methods {
                    for &order in &config.orders {
                        for &seed in &config.seeds {
                            rows.push(BenchRow {
                                name: name.clone(),
                                n: None,
                                m: None,
                                method,
                                order,
                                seed,
                                outcome: Err(e.to_string()),
                                wall_time_ms: 0.0,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(rows)
}

fn opt(v: Option<usize>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Writes the fixed header and one record per row. Failed rows carry
/// `error: <message>` in the `result_size` column and leave the remaining
/// numeric columns empty.
pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        let timing = format!("{:.3}", row.wall_time_ms);
        let record: Vec<String> = match &row.outcome {
            Ok(s) => vec![
                row.name.clone(),
                opt(row.n),
                opt(row.m),
                row.method.to_string(),
                s.result_size.to_string(),
                s.bound.to_string(),
                s.lower_bound.to_string(),
                opt(s.exact_size),
                format!("{:.6}", s.ratio),
                timing,
            ],
            Err(msg) => vec![
                row.name.clone(),
                opt(row.n),
                opt(row.m),
                row.method.to_string(),
                format!("error: {msg}"),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                timing,
            ],
        };
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}
