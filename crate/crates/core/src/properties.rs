//! Checkable statements about `γ_t`, `τ` and `TDV` on a single graph.
//!
//! Each check returns a [`CheckReport`]. A check whose hypotheses do not hold
//! for the graph reports [`Verdict::NotApplicable`] instead of passing or
//! failing. When a bound is attained, the report carries a tightness label
//! (see the `TIGHT_*` constants).

use serde::{Deserialize, Serialize};

use crate::error::{Result, TdvError};
use crate::graph::Graph;
use crate::solver::{solve, TdvReport};

pub const SUM_IDENTITY: &str = "sum_identity";
pub const TDV_RANGE: &str = "tdv_range";
pub const NEIGHBORHOOD_SUM_BOUNDS: &str = "neighborhood_sum_bounds";
pub const SUPPORT_VERTEX: &str = "support_vertex";
pub const SUBGRAPH_TAU: &str = "subgraph_tau";
pub const TAU_RANGE: &str = "tau_range";
pub const GAMMA_TWO_THIRDS: &str = "gamma_two_thirds";
pub const COMPLEMENT_GAMMA: &str = "complement_gamma";
pub const MK2_COMPLEMENT_TDV: &str = "mk2_complement_tdv";
pub const GAMMA2_DEGREE_BOUND: &str = "gamma2_degree_bound";
pub const MAX_DEGREE_CASES: &str = "max_degree_cases";
pub const TAU_GAMMA2_UPPER: &str = "tau_gamma2_upper";
pub const SOLVE: &str = "solve";

pub const TIGHT_UB1_LOWER: &str = "upperbound1-lower";
pub const TIGHT_UB1_UPPER: &str = "upperbound1-upper";
pub const TIGHT_UB2: &str = "upperbound2";
pub const TIGHT_TAU_RANGE_LOWER: &str = "tau_range-lower";
pub const TIGHT_TAU_RANGE_UPPER: &str = "tau_range-upper";
pub const TIGHT_TAU_GAMMA2: &str = "tau_gamma2_upper";
pub const TIGHT_COMPLEMENT_EQUALITY: &str = "complement_gamma-equality";
pub const TIGHT_GAMMA2_DEGREE: &str = "gamma2_degree_bound";
pub const TIGHT_SUPPORT: &str = "support_vertex";
pub const TIGHT_SUBGRAPH: &str = "subgraph_tau";
pub const TIGHT_TWO_THIRDS: &str = "gamma_two_thirds";
pub const TIGHT_TDV_RANGE: &str = "tdv_range";
pub const TIGHT_DEGREE_N1: &str = "degree_n-1";
pub const TIGHT_DELTA_N3_PRODUCT: &str = "delta_n-3-product";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Vertex(usize),
    Set(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub verdict: Verdict,
    pub lhs: u64,
    pub rhs: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tight: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckReport {
    fn new(check_id: &str, passed: bool, lhs: u64, rhs: u64) -> Self {
        CheckReport {
            check_id: check_id.to_owned(),
            verdict: if passed { Verdict::Pass } else { Verdict::Fail },
            lhs,
            rhs,
            tight: Vec::new(),
            witness: None,
            note: None,
        }
    }

    fn not_applicable(check_id: &str, why: impl Into<String>) -> Self {
        CheckReport {
            verdict: Verdict::NotApplicable,
            note: Some(why.into()),
            ..CheckReport::new(check_id, true, 0, 0)
        }
    }

    fn failed(check_id: &str, err: &TdvError) -> Self {
        CheckReport {
            note: Some(err.to_string()),
            ..CheckReport::new(check_id, false, 0, 0)
        }
    }

    fn tight_if(mut self, cond: bool, label: &str) -> Self {
        if cond {
            self.tight.push(label.to_owned());
        }
        self
    }

    fn at(mut self, v: usize) -> Self {
        self.witness = Some(Witness::Vertex(v));
        self
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed_verdict(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    pub fn is_tight(&self, label: &str) -> bool {
        self.tight.iter().any(|t| t == label)
    }
}

/// `C(n, k)` without overflow for `n <= 64`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// A graph together with its exact solution, so several checks can share
/// one solver run.
pub struct Analysis<'g> {
    graph: &'g Graph,
    report: TdvReport,
}

impl<'g> Analysis<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        Ok(Analysis {
            graph,
            report: solve(graph, false)?,
        })
    }

    pub fn report(&self) -> &TdvReport {
        &self.report
    }

    fn tau(&self) -> u64 {
        self.report.tau
    }

    fn gamma(&self) -> u64 {
        self.report.gamma_t as u64
    }

    fn n(&self) -> usize {
        self.graph.order()
    }

    /// `Σ_v TDV(v) = τ · γ_t`.
    pub fn sum_identity(&self) -> CheckReport {
        let lhs: u64 = self.report.tdv.iter().sum();
        let rhs = self.tau() * self.gamma();
        CheckReport::new(SUM_IDENTITY, lhs == rhs, lhs, rhs)
    }

    /// `0 <= TDV(v) <= τ` for every vertex.
    pub fn tdv_range(&self) -> CheckReport {
        let (argmax, &max) = self
            .report
            .tdv
            .iter()
            .enumerate()
            .max_by_key(|&(i, t)| (*t, std::cmp::Reverse(i)))
            .expect("graph has vertices");
        CheckReport::new(TDV_RANGE, max <= self.tau(), max, self.tau())
            .tight_if(max == self.tau(), TIGHT_TDV_RANGE)
            .at(argmax + 1)
    }

    /// `τ <= Σ_{N[v₀]} TDV <= min(τ·γ_t, τ·(1 + deg v₀))`.
    pub fn neighborhood_sum_bounds(&self, v0: usize) -> Result<CheckReport> {
        let closed = self.graph.closed_neighborhood(v0)?;
        let sum = self.report.tdv_sum(closed);
        let tau = self.tau();
        let ub1 = tau * self.gamma();
        let ub2 = tau * (1 + self.graph.degree(v0) as u64);
        let upper = ub1.min(ub2);
        Ok(CheckReport::new(
            NEIGHBORHOOD_SUM_BOUNDS,
            tau <= sum && sum <= upper,
            sum,
            upper,
        )
        .tight_if(sum == tau, TIGHT_UB1_LOWER)
        .tight_if(sum == ub1, TIGHT_UB1_UPPER)
        .tight_if(sum == ub2, TIGHT_UB2)
        .at(v0)
        .note(format!("tau={tau} tau*gamma_t={ub1} tau*(1+deg)={ub2}")))
    }

    /// A support vertex `s` lies in every γ_t-set and `Σ_{N[s]} TDV >= 2τ`.
    pub fn support_vertex(&self, s: usize) -> Result<CheckReport> {
        let closed = self.graph.closed_neighborhood(s)?;
        if !self.graph.support_vertices().contains(s) {
            return Ok(CheckReport::not_applicable(
                SUPPORT_VERTEX,
                format!("vertex {s} is not adjacent to an end-vertex"),
            ));
        }
        let sum = self.report.tdv_sum(closed);
        let rhs = 2 * self.tau();
        let in_every_set = self.report.tdv_of(s) == self.tau();
        let mut report = CheckReport::new(SUPPORT_VERTEX, sum >= rhs && in_every_set, sum, rhs)
            .tight_if(sum == rhs, TIGHT_SUPPORT)
            .at(s);
        if !in_every_set {
            report = report.note(format!(
                "TDV({s}) = {} but tau = {}",
                self.report.tdv_of(s),
                self.tau()
            ));
        }
        Ok(report)
    }

    /// `1 <= τ <= C(n, ⌊n/2⌋)` for connected graphs on at least 3 vertices.
    pub fn tau_range(&self) -> CheckReport {
        let n = self.n() as u64;
        if n < 3 || !self.graph.is_connected() {
            return CheckReport::not_applicable(TAU_RANGE, "needs a connected graph with n >= 3");
        }
        let upper = binomial(n, n / 2);
        let tau = self.tau();
        CheckReport::new(TAU_RANGE, (1..=upper).contains(&tau), tau, upper)
            .tight_if(tau == 1, TIGHT_TAU_RANGE_LOWER)
            .tight_if(tau == upper, TIGHT_TAU_RANGE_UPPER)
    }

    /// `γ_t <= 2n/3` for connected graphs on at least 3 vertices.
    pub fn gamma_two_thirds(&self) -> CheckReport {
        let n = self.n() as u64;
        if n < 3 || !self.graph.is_connected() {
            return CheckReport::not_applicable(
                GAMMA_TWO_THIRDS,
                "needs a connected graph with n >= 3",
            );
        }
        let rhs = 2 * n / 3;
        CheckReport::new(GAMMA_TWO_THIRDS, self.gamma() <= rhs, self.gamma(), rhs)
            .tight_if(3 * self.gamma() == 2 * n, TIGHT_TWO_THIRDS)
    }

    /// `TDV(v) <= deg(v)` whenever `γ_t = 2`.
    pub fn gamma2_degree_bound(&self) -> CheckReport {
        if self.gamma() != 2 {
            return CheckReport::not_applicable(GAMMA2_DEGREE_BOUND, "needs gamma_t = 2");
        }
        let pairs: Vec<(usize, u64, u64)> = (1..=self.n())
            .map(|v| (v, self.report.tdv_of(v), self.graph.degree(v) as u64))
            .collect();
        let bad = pairs.iter().find(|&&(_, t, d)| t > d);
        let tight = pairs.iter().find(|&&(_, t, d)| t == d);
        let &(v, t, d) = bad.or(tight).unwrap_or(&pairs[0]);
        CheckReport::new(GAMMA2_DEGREE_BOUND, bad.is_none(), t, d)
            .tight_if(tight.is_some(), TIGHT_GAMMA2_DEGREE)
            .at(v)
    }

    /// `τ <= C(n,2) − ⌈n/2⌉` when `γ_t = 2` and `Δ <= n − 2`.
    pub fn tau_gamma2_upper(&self) -> CheckReport {
        let n = self.n();
        if self.gamma() != 2 || self.graph.max_degree() + 2 > n {
            return CheckReport::not_applicable(
                TAU_GAMMA2_UPPER,
                "needs gamma_t = 2 and max degree <= n - 2",
            );
        }
        let n = n as u64;
        let rhs = binomial(n, 2) - n.div_ceil(2);
        CheckReport::new(TAU_GAMMA2_UPPER, self.tau() <= rhs, self.tau(), rhs)
            .tight_if(self.tau() == rhs, TIGHT_TAU_GAMMA2)
    }

    /// Statements for `Δ ∈ {n − 1, n − 2, n − 3}`.
    pub fn max_degree_cases(&self) -> CheckReport {
        let g = self.graph;
        let n = self.n();
        let delta = g.max_degree();
        let tdv = |v: usize| self.report.tdv_of(v);
        let gamma = self.gamma();

        if delta + 1 == n {
            // γ_t = 2, TDV(v) <= n − 1 with equality exactly at degree n − 1
            let bound = (n - 1) as u64;
            let bad =
                (1..=n).find(|&v| tdv(v) > bound || (tdv(v) == bound) != (g.degree(v) + 1 == n));
            let v = bad.unwrap_or_else(|| (1..=n).find(|&v| g.degree(v) == delta).unwrap());
            return CheckReport::new(MAX_DEGREE_CASES, gamma == 2 && bad.is_none(), tdv(v), bound)
                .tight_if(tdv(v) == bound, TIGHT_DEGREE_N1)
                .at(v)
                .note(format!("max degree n-1, gamma_t={gamma}"));
        }

        if delta + 2 == n {
            // γ_t = 2, TDV(v) <= n − 2, and TDV(v) = |N(w)| at a maximum-degree
            // vertex v whose only non-neighbor is w
            let bound = (n - 2) as u64;
            let mut bad = (1..=n).find(|&v| tdv(v) > bound);
            let mut identity = None;
            for v in (1..=n).filter(|&v| g.degree(v) == delta) {
                let w = g
                    .vertices()
                    .difference(g.closed_neighborhood(v).unwrap())
                    .first()
                    .unwrap();
                let expect = g.degree(w) as u64;
                if identity.is_none() {
                    identity = Some((v, expect));
                }
                if tdv(v) != expect && bad.is_none() {
                    bad = Some(v);
                    identity = Some((v, expect));
                }
            }
            let (v, expect) = identity.unwrap();
            return CheckReport::new(
                MAX_DEGREE_CASES,
                gamma == 2 && bad.is_none(),
                tdv(v),
                expect,
            )
            .at(bad.unwrap_or(v))
            .note(format!(
                "max degree n-2, gamma_t={gamma}, TDV(v)=|N(w)| checked"
            ));
        }

        if n >= 4 && delta + 3 == n {
            let connected = g.is_connected();
            let n64 = n as u64;
            let mut first: Option<CheckReport> = None;
            for v in (1..=n).filter(|&v| g.degree(v) == delta) {
                let r = self.delta_n3_at(v, connected, n64);
                let failed = r.failed_verdict();
                if first.is_none() || failed {
                    first = Some(r);
                }
                if failed {
                    break;
                }
            }
            return first.expect("some vertex has maximum degree");
        }

        CheckReport::not_applicable(MAX_DEGREE_CASES, "max degree below n - 3")
    }

    fn delta_n3_at(&self, v: usize, connected: bool, n: u64) -> CheckReport {
        let g = self.graph;
        let t = self.report.tdv_of(v);
        let gamma = self.gamma();
        if !connected {
            // {α, β} is a K₂ component and v is universal in the rest
            return CheckReport::new(MAX_DEGREE_CASES, gamma == 4 && t == n - 3, t, n - 3)
                .at(v)
                .note(format!(
                    "max degree n-3, disconnected, gamma_t={gamma} (expected 4)"
                ));
        }
        match gamma {
            2 => CheckReport::new(MAX_DEGREE_CASES, t <= n - 3, t, n - 3)
                .at(v)
                .note("max degree n-3, connected, gamma_t=2"),
            3 => {
                let bound = (n - 3) * (n - 3) / 4 + 2 * (n - 4);
                let mut report = CheckReport::new(MAX_DEGREE_CASES, t <= bound, t, bound).at(v);
                let mut note = "max degree n-3, connected, gamma_t=3".to_owned();
                // α, β non-adjacent with disjoint non-empty neighborhoods inside N(v):
                // the γ_t-sets through v are exactly {v, x, y}, x ∈ N(α), y ∈ N(β)
                let outside = g
                    .vertices()
                    .difference(g.closed_neighborhood(v).unwrap())
                    .to_vec();
                let (alpha, beta) = (outside[0], outside[1]);
                let (na, nb) = (g.neighbors(alpha), g.neighbors(beta));
                if !g.has_edge(alpha, beta) && !na.intersects(nb) {
                    let product = (na.len() * nb.len()) as u64;
                    note.push_str(&format!(", |N(alpha)|*|N(beta)|={product}"));
                    if t != product {
                        report.verdict = Verdict::Fail;
                    }
                    report = report.tight_if(t == product, TIGHT_DELTA_N3_PRODUCT);
                }
                report.note(note)
            }
            _ => CheckReport::new(MAX_DEGREE_CASES, false, gamma, 3)
                .at(v)
                .note(format!(
                    "max degree n-3, connected, gamma_t={gamma} not in {{2, 3}}"
                )),
        }
    }
}

fn analyse(g: &Graph) -> Result<Analysis<'_>> {
    Analysis::new(g)
}

pub fn check_sum_identity(g: &Graph) -> Result<CheckReport> {
    Ok(analyse(g)?.sum_identity())
}

pub fn check_tdv_range(g: &Graph) -> Result<CheckReport> {
    Ok(analyse(g)?.tdv_range())
}

pub fn check_neighborhood_sum_bounds(g: &Graph, v0: usize) -> Result<CheckReport> {
    analyse(g)?.neighborhood_sum_bounds(v0)
}

pub fn check_support_vertex(g: &Graph, s: usize) -> Result<CheckReport> {
    analyse(g)?.support_vertex(s)
}

pub fn check_tau_range(g: &Graph) -> Result<CheckReport> {
    Ok(analyse(g)?.tau_range())
}

pub fn check_gamma_two_thirds(g: &Graph) -> Result<CheckReport> {
    Ok(analyse(g)?.gamma_two_thirds())
}

pub fn check_gamma2_degree_bound(g: &Graph) -> Result<CheckReport> {
    Ok(analyse(g)?.gamma2_degree_bound())
}

pub fn check_tau_gamma2_upper(g: &Graph) -> Result<CheckReport> {
    Ok(analyse(g)?.tau_gamma2_upper())
}

pub fn check_max_degree_cases(g: &Graph) -> Result<CheckReport> {
    Ok(analyse(g)?.max_degree_cases())
}

/// `τ(H) <= τ(G)` for a spanning subgraph `H` of `G` with `γ_t(H) = γ_t(G)`.
/// Every γ_t-set of `H` is also checked to be a γ_t-set of `G`.
pub fn check_subgraph_tau(h: &Graph, g: &Graph) -> Result<CheckReport> {
    if !h.is_spanning_subgraph_of(g) {
        return Ok(CheckReport::not_applicable(
            SUBGRAPH_TAU,
            "first graph is not a spanning subgraph of the second",
        ));
    }
    let rh = match solve(h, true) {
        Ok(r) => r,
        Err(TdvError::NoTdsExists { vertex }) => {
            return Ok(CheckReport::not_applicable(
                SUBGRAPH_TAU,
                format!("subgraph has isolated vertex {vertex}"),
            ))
        }
        Err(e) => return Err(e),
    };
    let rg = solve(g, true)?;
    if rh.gamma_t != rg.gamma_t {
        return Ok(CheckReport::not_applicable(
            SUBGRAPH_TAU,
            format!(
                "precondition unmet: gamma_t {} vs {}",
                rh.gamma_t, rg.gamma_t
            ),
        ));
    }
    let sets_g = rg.tdm.as_deref().unwrap_or_default();
    let stray = rh.tdm.as_deref().unwrap_or_default().iter().find(|s| {
        sets_g
            .binary_search_by(|x| x.to_vec().cmp(&s.to_vec()))
            .is_err()
    });
    let mut report = CheckReport::new(
        SUBGRAPH_TAU,
        rh.tau <= rg.tau && stray.is_none(),
        rh.tau,
        rg.tau,
    )
    .tight_if(rh.tau == rg.tau, TIGHT_SUBGRAPH);
    if let Some(s) = stray {
        report.witness = Some(Witness::Set(s.to_vec()));
        report = report.note("gamma_t-set of the subgraph is not one of the supergraph");
    }
    Ok(report)
}

/// `γ_t(G) + γ_t(Ḡ) <= n + 2` when neither graph has isolated vertices, with
/// equality exactly when `G` or `Ḡ` is `mK₂`.
pub fn check_complement_gamma(g: &Graph) -> Result<CheckReport> {
    let n = g.order();
    if let Some(v) = g.isolated_vertex() {
        return Ok(CheckReport::not_applicable(
            COMPLEMENT_GAMMA,
            format!("vertex {v} is isolated"),
        ));
    }
    if g.max_degree() + 1 >= n {
        return Ok(CheckReport::not_applicable(
            COMPLEMENT_GAMMA,
            "max degree n-1: the complement has an isolated vertex",
        ));
    }
    let co = g.complement();
    let sum = (solve(g, false)?.gamma_t + solve(&co, false)?.gamma_t) as u64;
    let rhs = n as u64 + 2;
    let matching = g.is_perfect_matching() || co.is_perfect_matching();
    let equal = sum == rhs;
    let mut report = CheckReport::new(COMPLEMENT_GAMMA, sum <= rhs && equal == matching, sum, rhs)
        .tight_if(equal, TIGHT_COMPLEMENT_EQUALITY);
    if equal || matching {
        report = report.note(format!("graph or complement is mK2: {matching}"));
    }
    Ok(report)
}

/// `TDV_G(v) + TDV_Ḡ(v) = n − 1` when `n = 2m >= 4` and `G` or `Ḡ` is `mK₂`.
pub fn check_mk2_complement_tdv(g: &Graph) -> Result<CheckReport> {
    let n = g.order();
    let co = g.complement();
    if n < 4 || !(g.is_perfect_matching() || co.is_perfect_matching()) {
        return Ok(CheckReport::not_applicable(
            MK2_COMPLEMENT_TDV,
            "needs n >= 4 with the graph or its complement a perfect matching",
        ));
    }
    let a = solve(g, false)?;
    let b = solve(&co, false)?;
    let rhs = n as u64 - 1;
    let sums: Vec<u64> = (1..=n).map(|v| a.tdv_of(v) + b.tdv_of(v)).collect();
    let bad = sums.iter().position(|&s| s != rhs);
    let v = bad.unwrap_or(0) + 1;
    Ok(CheckReport::new(MK2_COMPLEMENT_TDV, bad.is_none(), sums[v - 1], rhs).at(v))
}

/// Folds per-vertex reports of one check into a single report: fails if any
/// failed, otherwise shows the first report that attained a bound.
fn aggregate(check_id: &str, reports: Vec<CheckReport>, what: &str) -> CheckReport {
    if reports.iter().all(|r| r.verdict == Verdict::NotApplicable) {
        return reports
            .into_iter()
            .next()
            .unwrap_or_else(|| CheckReport::not_applicable(check_id, format!("no {what}")));
    }
    let applicable = reports
        .iter()
        .filter(|r| r.verdict != Verdict::NotApplicable)
        .count();
    let mut tight: Vec<String> = Vec::new();
    for t in reports.iter().flat_map(|r| &r.tight) {
        if !tight.contains(t) {
            tight.push(t.clone());
        }
    }
    let pick = reports
        .iter()
        .position(|r| r.verdict == Verdict::Fail)
        .or_else(|| reports.iter().position(|r| !r.tight.is_empty()))
        .or_else(|| reports.iter().position(|r| r.verdict == Verdict::Pass))
        .unwrap();
    let mut out = reports.into_iter().nth(pick).unwrap();
    out.tight = tight;
    let prefix = format!("{applicable} {what} checked");
    out.note = Some(match out.note {
        Some(n) => format!("{prefix}; {n}"),
        None => prefix,
    });
    out
}

fn or_failed(check_id: &str, r: Result<CheckReport>) -> CheckReport {
    r.unwrap_or_else(|e| CheckReport::failed(check_id, &e))
}

/// Runs every check on `g`, in `check_id` order. Never fails: solver errors
/// become failed reports, and a graph without a TDS yields a single
/// not-applicable report.
pub fn run_all(g: &Graph) -> Vec<CheckReport> {
    let a = match Analysis::new(g) {
        Ok(a) => a,
        Err(e @ TdvError::NoTdsExists { .. }) => {
            return vec![CheckReport::not_applicable(SOLVE, e.to_string())]
        }
        Err(e) => return vec![CheckReport::failed(SOLVE, &e)],
    };
    let n = g.order();

    let neighborhood = (1..=n)
        .map(|v| or_failed(NEIGHBORHOOD_SUM_BOUNDS, a.neighborhood_sum_bounds(v)))
        .collect();
    let support = g
        .support_vertices()
        .iter()
        .map(|s| or_failed(SUPPORT_VERTEX, a.support_vertex(s)))
        .collect();
    let subgraphs = g
        .edges()
        .into_iter()
        .map(|(u, v)| g.without_edge(u, v))
        .filter(|h| !h.has_isolated_vertex())
        .map(|h| or_failed(SUBGRAPH_TAU, check_subgraph_tau(&h, g)))
        .collect();

    let mut reports = vec![
        or_failed(COMPLEMENT_GAMMA, check_complement_gamma(g)),
        a.gamma2_degree_bound(),
        a.gamma_two_thirds(),
        a.max_degree_cases(),
        or_failed(MK2_COMPLEMENT_TDV, check_mk2_complement_tdv(g)),
        aggregate(NEIGHBORHOOD_SUM_BOUNDS, neighborhood, "vertices"),
        aggregate(SUBGRAPH_TAU, subgraphs, "edge-deleted subgraphs"),
        a.sum_identity(),
        aggregate(SUPPORT_VERTEX, support, "support vertices"),
        a.tau_gamma2_upper(),
        a.tau_range(),
        a.tdv_range(),
    ];
    reports.sort_by(|x, y| x.check_id.cmp(&y.check_id));
    reports
}

/// Connected graphs on `n` vertices attaining `τ = C(n, ⌊n/2⌋)`.
///
/// Attaining the bound forces every γ_t-subset to be a TDS with
/// `γ_t ∈ {⌊n/2⌋, ⌈n/2⌉}`. A vertex with at least `γ_t` non-neighbors
/// (itself included) would be missed by some γ_t-subset, so every degree is
/// at least `n − ⌈n/2⌉ + 1`; equivalently the complement has maximum degree
/// at most `⌈n/2⌉ − 2`. The survey enumerates exactly those labeled graphs
/// and solves each one.
pub fn tau_range_upper_attainers(n: usize) -> Result<TauRangeSurvey> {
    if !(3..=10).contains(&n) {
        return Err(TdvError::InvalidInput(format!(
            "survey supports 3 <= n <= 10, got {n}"
        )));
    }
    let cap = n.div_ceil(2) - 2;
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    let target = binomial(n as u64, (n / 2) as u64);
    let mut survey = TauRangeSurvey {
        examined: 0,
        attainers: Vec::new(),
    };
    let mut degree = vec![0usize; n + 1];
    let mut missing = Vec::new();
    complement_walk(&pairs, 0, cap, &mut degree, &mut missing, &mut |missing| {
        let all: Vec<(usize, usize)> = pairs
            .iter()
            .copied()
            .filter(|p| !missing.contains(p))
            .collect();
        let g = Graph::from_edge_list(n, &all)?;
        if !g.is_connected() {
            return Ok(());
        }
        survey.examined += 1;
        if solve(&g, false)?.tau == target {
            survey.attainers.push(g);
        }
        Ok(())
    })?;
    Ok(survey)
}

#[derive(Debug)]
pub struct TauRangeSurvey {
    /// Connected candidates that were solved.
    pub examined: usize,
    pub attainers: Vec<Graph>,
}

fn complement_walk(
    pairs: &[(usize, usize)],
    idx: usize,
    cap: usize,
    degree: &mut [usize],
    missing: &mut Vec<(usize, usize)>,
    visit: &mut impl FnMut(&[(usize, usize)]) -> Result<()>,
) -> Result<()> {
    if idx == pairs.len() {
        return visit(missing);
    }
    complement_walk(pairs, idx + 1, cap, degree, missing, visit)?;
    let (u, v) = pairs[idx];
    if degree[u] < cap && degree[v] < cap {
        degree[u] += 1;
        degree[v] += 1;
        missing.push((u, v));
        complement_walk(pairs, idx + 1, cap, degree, missing, visit)?;
        missing.pop();
        degree[u] -= 1;
        degree[v] -= 1;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{random_connected_graph, FamilySpec};

    fn gen(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(64, 32), 1_832_624_140_942_590_534);
        assert_eq!(binomial(3, 4), 0);
    }

    #[test]
    fn sum_identity_examples() {
        let r = check_sum_identity(&gen("path:6")).unwrap();
        assert!(r.passed());
        assert_eq!((r.lhs, r.rhs), (16, 16));
        let r = check_sum_identity(&gen("complete:2")).unwrap();
        assert_eq!((r.lhs, r.rhs), (2, 2));
        for seed in 0..10 {
            let g = random_connected_graph(10, 0.3, seed).unwrap();
            assert!(check_sum_identity(&g).unwrap().passed());
        }
    }

    #[test]
    fn neighborhood_sum_examples() {
        let r = check_neighborhood_sum_bounds(&gen("figure:1a"), 1).unwrap();
        assert!(r.passed());
        assert_eq!(r.lhs, 6);
        assert!(r.is_tight(TIGHT_UB1_UPPER));
        assert!(!r.is_tight(TIGHT_UB2));

        let r = check_neighborhood_sum_bounds(&gen("figure:1b"), 1).unwrap();
        assert!(r.passed());
        assert_eq!(r.lhs, 8);
        assert!(r.is_tight(TIGHT_UB2));
        assert!(!r.is_tight(TIGHT_UB1_UPPER));

        for n in 4..=9 {
            let g = gen(&format!("lowersharp:{n}"));
            let r = check_neighborhood_sum_bounds(&g, 1).unwrap();
            assert!(r.passed() && r.is_tight(TIGHT_UB1_LOWER), "{r:?}");
            let r = check_neighborhood_sum_bounds(&g, 2).unwrap();
            assert!(r.passed() && r.is_tight(TIGHT_UB1_UPPER), "{r:?}");
        }
        assert!(check_neighborhood_sum_bounds(&gen("path:4"), 9).is_err());
    }

    #[test]
    fn support_vertex_examples() {
        let r = check_support_vertex(&gen("star:3"), 1).unwrap();
        assert!(r.passed());
        // τ(K_{1,3}) = 3 and the whole star sums to τ·γ_t = 6
        assert_eq!((r.lhs, r.rhs), (6, 6));
        let r = check_support_vertex(&gen("path:4"), 2).unwrap();
        assert!(r.passed());
        assert_eq!((r.lhs, r.rhs), (2, 2));
        assert!(check_support_vertex(&gen("uppersharp:6"), 2)
            .unwrap()
            .passed());
        let r = check_support_vertex(&gen("path:4"), 1).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn subgraph_tau_examples() {
        let r = check_subgraph_tau(&gen("path:4"), &gen("cycle:4")).unwrap();
        assert!(r.passed());
        assert_eq!((r.lhs, r.rhs), (1, 4));
        let r = check_subgraph_tau(&gen("path:6"), &gen("cycle:6")).unwrap();
        assert_eq!((r.lhs, r.rhs), (4, 9));
        let c = gen("cycle:7");
        let r = check_subgraph_tau(&c, &c).unwrap();
        assert!(r.passed() && r.is_tight(TIGHT_SUBGRAPH));
        // P5 has γ_t = 3 = γ_t(C5); P3 ∪ K2 spans C5 minus two edges but has γ_t = 4
        let h = Graph::from_edge_list(5, &[(1, 2), (2, 3), (4, 5)]).unwrap();
        let r = check_subgraph_tau(&h, &gen("cycle:5")).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
        let r = check_subgraph_tau(&gen("cycle:4"), &gen("path:4")).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn tau_range_examples() {
        let r = check_tau_range(&gen("complete:3")).unwrap();
        assert!(r.passed() && r.is_tight(TIGHT_TAU_RANGE_UPPER));
        assert_eq!(r.lhs, 3);
        let r = check_tau_range(&gen("path:8")).unwrap();
        assert!(r.passed() && r.is_tight(TIGHT_TAU_RANGE_LOWER));
        let r = check_tau_range(&gen("complete:5")).unwrap();
        assert_eq!((r.lhs, r.rhs), (10, 10));
        assert!(r.is_tight(TIGHT_TAU_RANGE_UPPER));
        let r = check_tau_range(&gen("extstar:4")).unwrap();
        assert!(r.is_tight(TIGHT_TAU_RANGE_LOWER));
        assert_eq!(
            check_tau_range(&gen("mk2:3")).unwrap().verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn complement_gamma_examples() {
        let r = check_complement_gamma(&gen("mk2:2")).unwrap();
        assert!(r.passed() && r.is_tight(TIGHT_COMPLEMENT_EQUALITY));
        assert_eq!((r.lhs, r.rhs), (6, 6));
        let r = check_complement_gamma(&gen("cycle:5")).unwrap();
        assert!(r.passed() && r.tight.is_empty());
        assert_eq!((r.lhs, r.rhs), (6, 7));
        let r = check_complement_gamma(&gen("path:5")).unwrap();
        assert!(r.passed() && r.lhs <= 7);
        let r = check_complement_gamma(&gen("star:4")).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn gamma2_degree_examples() {
        let r = check_gamma2_degree_bound(&gen("complete:4")).unwrap();
        assert!(r.passed() && r.is_tight(TIGHT_GAMMA2_DEGREE));
        assert_eq!((r.lhs, r.rhs), (3, 3));
        let g = gen("queen:4x4");
        let rep = solve(&g, false).unwrap();
        for center in [6, 7, 10, 11] {
            assert_eq!(rep.tdv_of(center), 3);
        }
        assert!(check_gamma2_degree_bound(&g).unwrap().passed());
        let r = check_gamma2_degree_bound(&gen("star:5")).unwrap();
        assert!(r.passed());
        assert_eq!(r.witness, Some(Witness::Vertex(1)));
        assert_eq!((r.lhs, r.rhs), (5, 5));
        assert_eq!(
            check_gamma2_degree_bound(&gen("cycle:5")).unwrap().verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn max_degree_examples() {
        let r = check_max_degree_cases(&gen("figure:5")).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.lhs, 0);
        assert_eq!(r.witness, Some(Witness::Vertex(1)));

        let k4e = Graph::from_edge_list(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        let r = check_max_degree_cases(&k4e).unwrap();
        assert!(r.passed() && r.is_tight(TIGHT_DEGREE_N1));
        assert_eq!(r.lhs, 3);

        let r = check_max_degree_cases(&gen("figure:4a")).unwrap();
        assert!(r.passed() && r.is_tight(TIGHT_DELTA_N3_PRODUCT), "{r:?}");
        assert_eq!(r.lhs, 4);

        // Δ = n − 2 identity on C4 and the octahedron
        assert!(check_max_degree_cases(&gen("cycle:4")).unwrap().passed());
        assert!(check_max_degree_cases(&gen("kpartite:2,2,2"))
            .unwrap()
            .passed());
        // disconnected Δ = n − 3
        let r = check_max_degree_cases(&gen("union:complete:3+complete:2")).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(
            check_max_degree_cases(&gen("cycle:9")).unwrap().verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn tau_gamma2_examples() {
        let r = check_tau_gamma2_upper(&gen("kpartite:2,2,2")).unwrap();
        assert!(r.passed() && r.is_tight(TIGHT_TAU_GAMMA2));
        assert_eq!(r.lhs, 12);
        let r = check_tau_gamma2_upper(&gen("cycle:4")).unwrap();
        assert!(r.is_tight(TIGHT_TAU_GAMMA2));
        assert_eq!(r.lhs, 4);
        let r = check_tau_gamma2_upper(&gen("kpartite:2,3")).unwrap();
        assert!(r.passed() && r.tight.is_empty());
        assert_eq!((r.lhs, r.rhs), (6, 7));
    }

    #[test]
    fn mk2_complement_examples() {
        for m in 2..=5 {
            let g = gen(&format!("mk2:{m}"));
            let r = check_mk2_complement_tdv(&g).unwrap();
            assert!(r.passed());
            assert_eq!(r.rhs, 2 * m as u64 - 1);
            assert!(check_mk2_complement_tdv(&g.complement()).unwrap().passed());
        }
        assert_eq!(
            check_mk2_complement_tdv(&gen("mk2:1")).unwrap().verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn run_all_examples() {
        let reports = run_all(&gen("path:6"));
        assert!(reports.iter().all(|r| !r.failed_verdict()), "{reports:#?}");
        let ids: Vec<_> = reports.iter().map(|r| r.check_id.as_str()).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);

        let reports = run_all(&gen("mk2:2"));
        let cg = reports
            .iter()
            .find(|r| r.check_id == COMPLEMENT_GAMMA)
            .unwrap();
        assert!(cg.passed() && cg.is_tight(TIGHT_COMPLEMENT_EQUALITY));

        let reports = run_all(&gen("complement:mk2:1"));
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].verdict, Verdict::NotApplicable);

        for seed in 0..10 {
            let g = random_connected_graph(12, 0.25, seed).unwrap();
            assert!(run_all(&g).iter().all(|r| !r.failed_verdict()));
        }
    }
}
