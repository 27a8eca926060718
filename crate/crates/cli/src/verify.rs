//! `verify`: closed forms against the exact solver, fixed example values,
//! and the property suite over the corpus.

use std::fmt::{self, Write as _};
use std::ops::RangeInclusive;

use rayon::prelude::*;
use tdv_core::corpus::{compositions, family_corpus, random_corpus};
use tdv_core::formulas::{
    gamma_t_cycle, gamma_t_path, multipartite_tau, multipartite_tdv, tau_cycle, tau_path,
    tdv_cycle, tdv_path,
};
use tdv_core::{run_all, solve, FamilySpec, Graph, Result, TdvReport, VertexSet};

use crate::CliError;

pub const DEFAULT_PATHS: RangeInclusive<usize> = 2..=22;
pub const DEFAULT_CYCLES: RangeInclusive<usize> = 3..=22;
pub const DEFAULT_MULTIPARTITE_MAX: usize = 9;
pub const DEFAULT_RANDOM: usize = 200;
pub const DEFAULT_SEED: u64 = 1;

#[derive(Clone, Debug, Default)]
pub struct VerifyPlan {
    pub paths: Option<RangeInclusive<usize>>,
    pub cycles: Option<RangeInclusive<usize>>,
    pub multipartite_max: Option<usize>,
    pub figures: bool,
    pub queens: bool,
    pub properties: bool,
    /// Seeded random graphs added to the property corpus.
    pub random: usize,
    pub seed: u64,
}

impl VerifyPlan {
    pub fn everything() -> Self {
        VerifyPlan {
            paths: Some(DEFAULT_PATHS),
            cycles: Some(DEFAULT_CYCLES),
            multipartite_max: Some(DEFAULT_MULTIPARTITE_MAX),
            figures: true,
            queens: true,
            properties: true,
            random: DEFAULT_RANDOM,
            seed: DEFAULT_SEED,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_none()
            && self.cycles.is_none()
            && self.multipartite_max.is_none()
            && !self.figures
            && !self.queens
            && !self.properties
    }
}

/// Accepts `A..B`, `A..=B` (both inclusive) or a single `N`.
pub fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("`{t}` is not a number"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok(lo..=hi)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub family: String,
    pub n: usize,
    pub field: String,
    pub expected: String,
    pub got: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MISMATCH family={} n={} field={} expected={} got={}",
            self.family, self.n, self.field, self.expected, self.got
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimTally {
    pub claim: &'static str,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Default)]
pub struct VerifySummary {
    pub tallies: Vec<ClaimTally>,
    pub mismatches: Vec<Mismatch>,
}

impl VerifySummary {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn tally(&self, claim: &str) -> Option<&ClaimTally> {
        self.tallies.iter().find(|t| t.claim == claim)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for m in &self.mismatches {
            let _ = writeln!(out, "{m}");
        }
        for t in &self.tallies {
            let _ = writeln!(
                out,
                "{:<24} {:>5}/{:<5} {}",
                t.claim,
                t.passed,
                t.passed + t.failed,
                if t.failed == 0 { "ok" } else { "FAILED" }
            );
        }
        let _ = writeln!(out, "{} mismatch(es)", self.mismatches.len());
        out
    }

    /// Folds one claim's per-item mismatch lists into the summary.
    fn absorb(&mut self, claim: &'static str, items: Vec<Vec<Mismatch>>) {
        let failed = items.iter().filter(|m| !m.is_empty()).count();
        self.tallies.push(ClaimTally {
            claim,
            passed: items.len() - failed,
            failed,
        });
        self.mismatches.extend(items.into_iter().flatten());
    }
}

pub const CLAIM_PATHS: &str = "path formulas";
pub const CLAIM_CYCLES: &str = "cycle formulas";
pub const CLAIM_MULTIPARTITE: &str = "multipartite formulas";
pub const CLAIM_QUEENS: &str = "queen boards";
pub const CLAIM_FIGURES: &str = "figure graphs";
pub const CLAIM_PROPERTIES: &str = "property suite";

/// Collects `(field, expected, got)` comparisons for one graph.
struct Compare<'a> {
    family: &'a str,
    n: usize,
    out: Vec<Mismatch>,
}

impl<'a> Compare<'a> {
    fn new(family: &'a str, n: usize) -> Self {
        Compare {
            family,
            n,
            out: Vec::new(),
        }
    }

    fn eq<T: PartialEq + ToString>(&mut self, field: impl Into<String>, expected: T, got: T) {
        if expected != got {
            self.out.push(Mismatch {
                family: self.family.to_owned(),
                n: self.n,
                field: field.into(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }
}

fn solved(spec: &FamilySpec) -> Result<(Graph, TdvReport)> {
    let g = spec.generate()?;
    let r = solve(&g, false)?;
    Ok((g, r))
}

pub fn check_path(n: usize) -> Result<Vec<Mismatch>> {
    let (_, r) = solved(&FamilySpec::Path(n))?;
    let mut c = Compare::new("path", n);
    c.eq("gamma_t", gamma_t_path(n)?, r.gamma_t);
    c.eq("tau", tau_path(n)?, r.tau);
    for v in 1..=n {
        c.eq(format!("tdv({v})"), tdv_path(n, v)?, r.tdv_of(v));
    }
    Ok(c.out)
}

pub fn check_cycle(n: usize) -> Result<Vec<Mismatch>> {
    let (_, r) = solved(&FamilySpec::Cycle(n))?;
    let mut c = Compare::new("cycle", n);
    c.eq("gamma_t", gamma_t_cycle(n)?, r.gamma_t);
    c.eq("tau", tau_cycle(n)?, r.tau);
    let expected = tdv_cycle(n)?;
    for v in 1..=n {
        c.eq(format!("tdv({v})"), expected, r.tdv_of(v));
    }
    Ok(c.out)
}

pub fn check_multipartite(parts: &[usize]) -> Result<Vec<Mismatch>> {
    let spec = FamilySpec::CompleteMultipartite(parts.to_vec());
    let (_, r) = solved(&spec)?;
    let label = spec.to_string();
    let mut c = Compare::new(&label, parts.iter().sum());
    c.eq("gamma_t", 2, r.gamma_t);
    c.eq("tau", multipartite_tau(parts)?, r.tau);
    let mut v = 1;
    for (j, &a) in parts.iter().enumerate() {
        let expected = multipartite_tdv(parts, j + 1)?;
        for _ in 0..a {
            c.eq(format!("tdv({v})"), expected, r.tdv_of(v));
            v += 1;
        }
    }
    Ok(c.out)
}

/// Queen boards: `γ_t = 2`; on 3×3 the center has TDV 8 and every other
/// square 4; on 4×4 the four central squares have TDV 3 and the rest 1.
pub fn check_queen(rows: usize) -> Result<Vec<Mismatch>> {
    let spec = FamilySpec::Queen(rows, rows);
    let (g, r) = solved(&spec)?;
    let label = spec.to_string();
    let mut c = Compare::new(&label, g.order());
    c.eq("gamma_t", 2, r.gamma_t);
    let (center, inner, outer): (&[usize], u64, u64) = match rows {
        3 => (&[5], 8, 4),
        _ => (&[6, 7, 10, 11], 3, 1),
    };
    for v in g.vertices().iter() {
        let expected = if center.contains(&v) { inner } else { outer };
        c.eq(format!("tdv({v})"), expected, r.tdv_of(v));
    }
    Ok(c.out)
}

/// Values stated for the figure graphs, checked at the marked vertex `v₀`.
pub fn check_figure(spec: &FamilySpec) -> Result<Vec<Mismatch>> {
    let (g, r) = solved(spec)?;
    let label = spec.to_string();
    let v0 = spec.marked_vertex().unwrap_or(1);
    let mut c = Compare::new(&label, g.order());
    let closed_sum = r.tdv_sum(g.closed_neighborhood(v0)?);
    match spec {
        FamilySpec::FigureA => {
            c.eq("gamma_t", 2, r.gamma_t);
            c.eq("tau", 3, r.tau);
            c.eq("tdv_sum(N[v0])", 6, closed_sum);
        }
        FamilySpec::FigureB => {
            c.eq("gamma_t", 6, r.gamma_t);
            c.eq("tau", 2, r.tau);
            c.eq("deg(v0)", 3, g.degree(v0));
            c.eq("tdv_sum(N[v0])", 8, closed_sum);
        }
        FamilySpec::Figure4A => {
            let n = g.order();
            c.eq("deg(v0)", n - 3, g.degree(v0));
            c.eq("gamma_t", 3, r.gamma_t);
            let far = VertexSet::full(n).difference(g.closed_neighborhood(v0)?);
            let product: u64 = far.iter().map(|u| g.degree(u) as u64).product();
            c.eq("tdv(v0)", product, r.tdv_of(v0));
        }
        FamilySpec::Figure5 => {
            let n = g.order();
            let max_vertices = g
                .vertices()
                .iter()
                .filter(|&v| g.degree(v) == g.max_degree())
                .count();
            c.eq("deg(v0)", n - 3, g.degree(v0));
            c.eq("max-degree vertices", 1, max_vertices);
            c.eq("gamma_t", 2, r.gamma_t);
            c.eq("tau", 1, r.tau);
            c.eq("tdv(v0)", 0, r.tdv_of(v0));
        }
        _ => {
            return Err(tdv_core::TdvError::InvalidInput(format!(
                "{label} is not a figure graph"
            )))
        }
    }
    Ok(c.out)
}

/// `run_all` on one graph; every `Fail` verdict is a mismatch.
pub fn check_properties(g: &Graph) -> Vec<Mismatch> {
    let name = g.name().unwrap_or("unnamed").to_owned();
    run_all(g)
        .into_iter()
        .filter(|r| r.failed_verdict())
        .map(|r| Mismatch {
            family: name.clone(),
            n: g.order(),
            field: r.check_id,
            expected: "pass".into(),
            got: format!("fail(lhs={}, rhs={})", r.lhs, r.rhs),
        })
        .collect()
}

/// Fixed corpus plus `random` seeded random connected graphs.
pub fn property_corpus(random: usize, seed: u64) -> Result<Vec<Graph>> {
    let mut graphs = family_corpus()
        .iter()
        .map(FamilySpec::generate)
        .collect::<Result<Vec<_>>>()?;
    graphs.extend(random_corpus(random, seed)?);
    Ok(graphs)
}

fn run_each<T: Sync>(
    items: &[T],
    check: impl Fn(&T) -> Result<Vec<Mismatch>> + Sync + Send,
) -> Result<Vec<Vec<Mismatch>>> {
    items.par_iter().map(check).collect()
}

pub fn cmd_verify(plan: &VerifyPlan) -> std::result::Result<VerifySummary, CliError> {
    let mut summary = VerifySummary::default();
    if let Some(range) = &plan.paths {
        let ns: Vec<usize> = range.clone().collect();
        summary.absorb(CLAIM_PATHS, run_each(&ns, |&n| check_path(n))?);
    }
    if let Some(range) = &plan.cycles {
        let ns: Vec<usize> = range.clone().collect();
        summary.absorb(CLAIM_CYCLES, run_each(&ns, |&n| check_cycle(n))?);
    }
    if let Some(max) = plan.multipartite_max {
        let parts = compositions(max);
        summary.absorb(
            CLAIM_MULTIPARTITE,
            run_each(&parts, |p| check_multipartite(p))?,
        );
    }
    if plan.queens {
        summary.absorb(CLAIM_QUEENS, run_each(&[3, 4], |&r| check_queen(r))?);
    }
    if plan.figures {
        use FamilySpec::*;
        let figures = [FigureA, FigureB, Figure4A, Figure5];
        summary.absorb(CLAIM_FIGURES, run_each(&figures, check_figure)?);
    }
    if plan.properties {
        let graphs = property_corpus(plan.random, plan.seed)?;
        let items: Vec<Vec<Mismatch>> = graphs.par_iter().map(check_properties).collect();
        summary.absorb(CLAIM_PROPERTIES, items);
    }
    Ok(summary)
}
