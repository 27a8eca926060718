//! Library side of the `tdv` binary: input resolution, the output record,
//! and the `solve`, `verify` and `gen` commands. `main.rs` only parses
//! arguments and maps [`CliError`] to an exit code.

use std::fmt::{self, Write as _};
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};
use tdv_core::io::{parse_edge_list, write_edge_list, IndexBase};
use tdv_core::properties::Verdict;
use tdv_core::{run_all, solve, CheckReport, FamilySpec, Graph, TdvError};

pub mod verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NO_TDS: i32 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<TdvError> for CliError {
    fn from(e: TdvError) -> Self {
        let code = match e {
            TdvError::NoTdsExists { .. } => EXIT_NO_TDS,
            TdvError::Internal(_) => EXIT_VERIFY_FAILED,
            _ => EXIT_INPUT,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

/// Everything `solve` reports about one graph. Field order is the JSON key
/// order; sets are sorted vertex lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spec: Option<String>,
    pub n: usize,
    pub gamma_t: usize,
    pub tau: u64,
    pub tdv: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tdm: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckReport>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SolveOptions {
    pub tdm: bool,
    pub checks: bool,
    pub base: IndexBase,
}

/// A graph together with where it came from.
#[derive(Clone, Debug)]
pub struct LoadedGraph {
    pub graph: Graph,
    pub name: String,
    pub spec: Option<String>,
}

/// Resolves `-` (stdin), an existing file, or a family spec, in that order.
pub fn load_graph(input: &str, base: IndexBase) -> Result<LoadedGraph, CliError> {
    if input == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::input(format!("cannot read stdin: {e}")))?;
        return Ok(LoadedGraph {
            graph: parse_edge_list(&text, base)
                .map_err(|e| CliError::input(format!("stdin: {e}")))?,
            name: "-".into(),
            spec: None,
        });
    }
    if Path::new(input).is_file() {
        let text = std::fs::read_to_string(input)
            .map_err(|e| CliError::input(format!("cannot read {input}: {e}")))?;
        return Ok(LoadedGraph {
            graph: parse_edge_list(&text, base)
                .map_err(|e| CliError::input(format!("{input}: {e}")))?,
            name: input.into(),
            spec: None,
        });
    }
    let spec: FamilySpec = input.parse().map_err(|e: TdvError| {
        CliError::input(format!(
            "`{input}` is not a readable file, and not a family spec ({e})"
        ))
    })?;
    let graph = spec.generate()?;
    let spec = spec.to_string();
    Ok(LoadedGraph {
        graph,
        name: spec.clone(),
        spec: Some(spec),
    })
}

pub fn solve_record(loaded: &LoadedGraph, opts: SolveOptions) -> Result<OutputRecord, CliError> {
    let g = &loaded.graph;
    let report = solve(g, opts.tdm)?;
    Ok(OutputRecord {
        name: loaded.name.clone(),
        spec: loaded.spec.clone(),
        n: g.order(),
        gamma_t: report.gamma_t,
        tau: report.tau,
        tdv: report.tdv,
        tdm: report
            .tdm
            .map(|sets| sets.iter().map(|s| s.to_vec()).collect()),
        checks: if opts.checks { run_all(g) } else { Vec::new() },
    })
}

pub fn render_json(record: &OutputRecord) -> String {
    let mut out = serde_json::to_string_pretty(record).expect("record serializes");
    out.push('\n');
    out
}

pub fn render_table(record: &OutputRecord, g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph    {}", record.name);
    let _ = writeln!(out, "n        {}", record.n);
    let _ = writeln!(out, "edges    {}", g.edge_count());
    let _ = writeln!(out, "gamma_t  {}", record.gamma_t);
    let _ = writeln!(out, "tau      {}", record.tau);
    let _ = writeln!(out);
    let _ = writeln!(out, "{:>6}  {:>6}  {:>8}", "vertex", "degree", "TDV");
    for (i, tdv) in record.tdv.iter().enumerate() {
        let _ = writeln!(out, "{:>6}  {:>6}  {:>8}", i + 1, g.degree(i + 1), tdv);
    }
    if let Some(tdm) = &record.tdm {
        let _ = writeln!(out, "\nTDM ({} sets)", tdm.len());
        for set in tdm {
            let members: Vec<String> = set.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "  {{{}}}", members.join(", "));
        }
    }
    if !record.checks.is_empty() {
        let _ = writeln!(
            out,
            "\n{:<24} {:<8} {:>10} {:>10}  tight",
            "check", "verdict", "lhs", "rhs"
        );
        for c in &record.checks {
            let verdict = match c.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "FAIL",
                Verdict::NotApplicable => "n/a",
            };
            let line = format!(
                "{:<24} {:<8} {:>10} {:>10}  {}",
                c.check_id,
                verdict,
                c.lhs,
                c.rhs,
                c.tight.join(",")
            );
            let _ = writeln!(out, "{}", line.trim_end());
        }
    }
    out
}

/// `solve`: returns the text to print. JSON when `json` is set, a table otherwise.
pub fn cmd_solve(input: &str, opts: SolveOptions, json: bool) -> Result<String, CliError> {
    let loaded = load_graph(input, opts.base)?;
    let record = solve_record(&loaded, opts)?;
    Ok(if json {
        render_json(&record)
    } else {
        render_table(&record, &loaded.graph)
    })
}

/// `gen`: the edge list of a family spec, written to `out` or returned when `out` is `-`.
pub fn cmd_gen(spec: &str, out: &str) -> Result<Option<String>, CliError> {
    let spec: FamilySpec = spec.parse()?;
    let text = write_edge_list(&spec.generate()?);
    if out == "-" {
        return Ok(Some(text));
    }
    std::fs::write(out, text).map_err(|e| CliError::input(format!("cannot write {out}: {e}")))?;
    Ok(None)
}
