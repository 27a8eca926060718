//! Exact total domination by pruned enumeration of vertex subsets.
//!
//! For `k = 2, 3, ...` the k-subsets of `V` are walked in lexicographic order
//! of their sorted members. A branch is cut as soon as some still-undominated
//! vertex has no neighbor left among the candidates that may still be chosen,
//! or when the remaining picks cannot cover the undominated vertices even at
//! maximum degree. The first `k` with a hit is `γ_t`; that level is then
//! enumerated completely.
//!
//! The top level of the walk (the smallest member of the subset) is
//! partitioned across the current rayon pool. Partial results are merged in
//! prefix order, so output never depends on the thread count.

use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Result, TdvError};
use crate::graph::{Graph, VertexSet};

/// `γ_t`, `τ`, per-vertex `TDV` and optionally all γ_t-sets of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TdvReport {
    pub gamma_t: usize,
    pub tau: u64,
    /// `tdv[v - 1]` is the number of γ_t-sets containing `v`.
    pub tdv: Vec<u64>,
    /// All γ_t-sets in lexicographic order, when requested.
    pub tdm: Option<Vec<VertexSet>>,
}

impl TdvReport {
    pub fn tdv_of(&self, v: usize) -> u64 {
        self.tdv[v - 1]
    }

    /// `Σ_{v ∈ S} TDV(v)`.
    pub fn tdv_sum(&self, set: VertexSet) -> u64 {
        set.iter().map(|v| self.tdv_of(v)).sum()
    }
}

/// True iff every vertex of `g` has a neighbor in `s`.
pub fn is_tds(g: &Graph, s: VertexSet) -> bool {
    (1..=g.order()).all(|v| g.neighbors(v).intersects(s))
}

pub fn gamma_t(g: &Graph) -> Result<usize> {
    let search = Search::new(g)?;
    for k in search.levels() {
        if search.exists(k) {
            return Ok(k);
        }
    }
    Err(search.exhausted())
}

/// All γ_t-sets, each once, in lexicographic order of sorted members.
pub fn enumerate_min_tds(g: &Graph) -> Result<Vec<VertexSet>> {
    let tally = Search::new(g)?.minimum_level(Mode::Collect)?.1;
    Ok(tally.sets.into_iter().map(VertexSet::from_bits).collect())
}

/// Number of γ_t-sets; streams without materializing them.
pub fn tau(g: &Graph) -> Result<u64> {
    Ok(Search::new(g)?.minimum_level(Mode::Count)?.1.tau)
}

pub fn tdv_all(g: &Graph) -> Result<Vec<u64>> {
    Ok(Search::new(g)?.minimum_level(Mode::Tdv)?.1.tdv)
}

pub fn solve(g: &Graph, want_tdm: bool) -> Result<TdvReport> {
    let mode = if want_tdm { Mode::Collect } else { Mode::Tdv };
    let (gamma_t, tally) = Search::new(g)?.minimum_level(mode)?;
    Ok(TdvReport {
        gamma_t,
        tau: tally.tau,
        tdv: tally.tdv,
        tdm: want_tdm.then(|| tally.sets.into_iter().map(VertexSet::from_bits).collect()),
    })
}

/// Runs `f` inside a dedicated rayon pool of `threads` workers.
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| TdvError::Internal(format!("cannot build thread pool: {e}")))?;
    Ok(pool.install(f))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Count,
    Tdv,
    Collect,
}

struct Tally {
    tau: u64,
    tdv: Vec<u64>,
    sets: Vec<u64>,
}

impl Tally {
    fn new(n: usize, mode: Mode) -> Self {
        Tally {
            tau: 0,
            tdv: if mode == Mode::Count {
                Vec::new()
            } else {
                vec![0; n]
            },
            sets: Vec::new(),
        }
    }

    fn record(&mut self, set: u64, mode: Mode) {
        self.tau += 1;
        if mode != Mode::Count {
            let mut bits = set;
            while bits != 0 {
                self.tdv[bits.trailing_zeros() as usize] += 1;
                bits &= bits - 1;
            }
        }
        if mode == Mode::Collect {
            self.sets.push(set);
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.tau += other.tau;
        for (a, b) in self.tdv.iter_mut().zip(other.tdv) {
            *a += b;
        }
        self.sets.extend(other.sets);
        self
    }
}

/// Zero-based bit-mask view of a graph tuned for the subset walk.
struct Search {
    n: usize,
    nbr: Vec<u64>,
    max_degree: u32,
    cutoff: usize,
    connected: bool,
}

impl Search {
    fn new(g: &Graph) -> Result<Self> {
        if let Some(vertex) = g.isolated_vertex() {
            return Err(TdvError::NoTdsExists { vertex });
        }
        let n = g.order();
        let connected = g.is_connected();
        // every connected graph on n >= 3 vertices has γ_t <= 2n/3
        let cutoff = if connected && n >= 3 { 2 * n / 3 } else { n };
        Ok(Search {
            n,
            nbr: (1..=n).map(|v| g.neighbors(v).bits()).collect(),
            max_degree: g.max_degree() as u32,
            cutoff,
            connected,
        })
    }

    /// Candidate sizes, starting at the counting bound `⌈n / Δ⌉`.
    fn levels(&self) -> std::ops::RangeInclusive<usize> {
        let start = self.n.div_ceil(self.max_degree as usize).max(2);
        start..=self.cutoff
    }

    fn exhausted(&self) -> TdvError {
        TdvError::Internal(format!(
            "no total dominating set of size <= {} found on a {} graph with {} vertices",
            self.cutoff,
            if self.connected {
                "connected"
            } else {
                "disconnected"
            },
            self.n
        ))
    }

    fn all(&self) -> u64 {
        VertexSet::full(self.n).bits()
    }

    /// First members allowed at the top of the walk: vertex 0 must be
    /// dominated, so the smallest member cannot exceed its largest neighbor.
    fn prefixes(&self, k: usize) -> std::ops::RangeInclusive<usize> {
        let hi = (63 - self.nbr[0].leading_zeros() as usize).min(self.n - k);
        0..=hi
    }

    fn exists(&self, k: usize) -> bool {
        let all = self.all();
        self.prefixes(k).into_par_iter().any(|w| {
            self.walk(w + 1, 1 << w, all & !self.nbr[w], k - 1, &mut |_| {
                ControlFlow::Break(())
            })
            .is_break()
        })
    }

    fn level(&self, k: usize, mode: Mode) -> Tally {
        let all = self.all();
        self.prefixes(k)
            .into_par_iter()
            .map(|w| {
                let mut tally = Tally::new(self.n, mode);
                let _ = self.walk(w + 1, 1 << w, all & !self.nbr[w], k - 1, &mut |set| {
                    tally.record(set, mode);
                    ControlFlow::Continue(())
                });
                tally
            })
            .collect::<Vec<_>>()
            .into_iter()
            .fold(Tally::new(self.n, mode), Tally::merge)
    }

    fn minimum_level(&self, mode: Mode) -> Result<(usize, Tally)> {
        for k in self.levels() {
            let tally = self.level(k, mode);
            if tally.tau > 0 {
                return Ok((k, tally));
            }
        }
        Err(self.exhausted())
    }

    /// Extends `chosen` by `remaining` members drawn from indices `>= next`.
    fn walk(
        &self,
        next: usize,
        chosen: u64,
        undominated: u64,
        remaining: usize,
        visit: &mut impl FnMut(u64) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if remaining == 0 {
            return if undominated == 0 {
                visit(chosen)
            } else {
                ControlFlow::Continue(())
            };
        }
        // A TDS smaller than the current level would have ended the search
        // at an earlier level.
        if undominated == 0 {
            return ControlFlow::Continue(());
        }
        if (remaining as u32) * self.max_degree < undominated.count_ones() {
            return ControlFlow::Continue(());
        }
        let future = if next >= 64 { 0 } else { !0u64 << next };
        let mut pending = undominated;
        while pending != 0 {
            let u = pending.trailing_zeros() as usize;
            if self.nbr[u] & future == 0 {
                return ControlFlow::Continue(());
            }
            pending &= pending - 1;
        }
        // the lowest undominated vertex needs a neighbor among the picks
        let lowest = undominated.trailing_zeros() as usize;
        let hi = (63 - self.nbr[lowest].leading_zeros() as usize).min(self.n - remaining);
        for w in next..=hi {
            self.walk(
                w + 1,
                chosen | 1 << w,
                undominated & !self.nbr[w],
                remaining - 1,
                visit,
            )?;
        }
        ControlFlow::Continue(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;
    use proptest::prelude::*;

    fn gen(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    fn sets(v: &[&[usize]]) -> Vec<VertexSet> {
        v.iter().map(|s| s.iter().copied().collect()).collect()
    }

    /// Independent oracle: every subset of `V`, smallest TDS size first,
    /// sorted lexicographically on member lists.
    fn brute_force(g: &Graph) -> Option<(usize, Vec<Vec<usize>>)> {
        let n = g.order();
        let mut best: Option<(usize, Vec<Vec<usize>>)> = None;
        for mask in 0u64..(1 << n) {
            let members: Vec<usize> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| i + 1)
                .collect();
            let dominated = (1..=n).all(|v| members.iter().any(|&u| g.has_edge(u, v)));
            if !dominated {
                continue;
            }
            match &mut best {
                Some((size, list)) if members.len() == *size => list.push(members),
                Some((size, _)) if members.len() > *size => {}
                _ => best = Some((members.len(), vec![members])),
            }
        }
        best.map(|(k, mut list)| {
            list.sort();
            (k, list)
        })
    }

    #[test]
    fn is_tds_examples() {
        let p4 = gen("path:4");
        assert!(is_tds(&p4, sets(&[&[2, 3]])[0]));
        assert!(!is_tds(&p4, sets(&[&[1, 2]])[0]));
        assert!(is_tds(&gen("cycle:5"), sets(&[&[1, 2, 3]])[0]));
    }

    #[test]
    fn gamma_t_examples() {
        assert_eq!(gamma_t(&gen("path:4")).unwrap(), 2);
        assert_eq!(gamma_t(&gen("cycle:5")).unwrap(), 3);
        assert_eq!(gamma_t(&gen("queen:4x4")).unwrap(), 2);
    }

    #[test]
    fn tdm_examples() {
        let expect_p6 = sets(&[&[1, 2, 4, 5], &[1, 2, 5, 6], &[2, 3, 4, 5], &[2, 3, 5, 6]]);
        assert_eq!(enumerate_min_tds(&gen("path:6")).unwrap(), expect_p6);
        assert_eq!(
            enumerate_min_tds(&gen("cycle:4")).unwrap(),
            sets(&[&[1, 2], &[1, 4], &[2, 3], &[3, 4]])
        );
        assert_eq!(
            enumerate_min_tds(&gen("complete:3")).unwrap(),
            sets(&[&[1, 2], &[1, 3], &[2, 3]])
        );
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&gen("path:6")).unwrap(), 4);
        assert_eq!(tau(&gen("cycle:5")).unwrap(), 5);
        assert_eq!(tau(&gen("cycle:6")).unwrap(), 9);
    }

    #[test]
    fn tdv_examples() {
        assert_eq!(tdv_all(&gen("path:4")).unwrap(), vec![0, 1, 1, 0]);
        assert_eq!(tdv_all(&gen("path:6")).unwrap(), vec![2, 4, 2, 2, 4, 2]);
        let q3 = tdv_all(&gen("queen:3x3")).unwrap();
        assert_eq!(q3, vec![4, 4, 4, 4, 8, 4, 4, 4, 4]);
    }

    #[test]
    fn solve_examples() {
        let a = solve(&gen("figure:1a"), false).unwrap();
        assert_eq!((a.gamma_t, a.tau), (2, 3));
        assert!(a.tdm.is_none());
        let b = solve(&gen("figure:1b"), true).unwrap();
        assert_eq!((b.gamma_t, b.tau), (6, 2));
        assert_eq!(b.tdm.unwrap().len(), 2);
        let m = solve(&gen("mk2:3"), false).unwrap();
        assert_eq!((m.gamma_t, m.tau), (6, 1));
        assert_eq!(m.tdv, vec![1; 6]);
    }

    #[test]
    fn no_tds_errors() {
        let single = Graph::empty(1).unwrap();
        assert_eq!(
            solve(&single, false),
            Err(TdvError::NoTdsExists { vertex: 1 })
        );
        let g = gen("union:path:3+complement:complete:2");
        assert_eq!(gamma_t(&g), Err(TdvError::NoTdsExists { vertex: 4 }));
        assert!(tau(&g).is_err() && tdv_all(&g).is_err() && enumerate_min_tds(&g).is_err());
    }

    #[test]
    fn union_of_paths_adds() {
        assert_eq!(gamma_t(&gen("union:path:4+path:4")).unwrap(), 4);
    }

    #[test]
    fn thread_count_does_not_change_output() {
        let g = gen("cycle:14");
        let one = with_threads(1, || solve(&g, true)).unwrap().unwrap();
        let many = with_threads(8, || solve(&g, true)).unwrap().unwrap();
        assert_eq!(one, many);
    }

    #[test]
    fn exhaustive_small_levels_have_no_smaller_tds() {
        for seed in 0..30 {
            let n = 5 + (seed as usize % 8);
            let g = crate::family::random_connected_graph(n, 0.35, seed).unwrap();
            let r = solve(&g, true).unwrap();
            for mask in 0u64..(1 << n) {
                if mask.count_ones() as usize == r.gamma_t - 1 {
                    assert!(!is_tds(&g, VertexSet::from_bits(mask)));
                }
            }
            for s in r.tdm.unwrap() {
                assert!(is_tds(&g, s));
                assert_eq!(s.len(), r.gamma_t);
            }
        }
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (2..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut i = 0;
                for u in 1..=n {
                    for v in u + 1..=n {
                        if bits[i] {
                            edges.push((u, v));
                        }
                        i += 1;
                    }
                }
                Graph::from_edge_list(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn matches_brute_force(g in arb_graph(10)) {
            match brute_force(&g) {
                None => {
                    let no_tds = matches!(solve(&g, true), Err(TdvError::NoTdsExists { .. }));
                    prop_assert!(no_tds);
                }
                Some((k, list)) => {
                    let r = solve(&g, true).unwrap();
                    prop_assert_eq!(r.gamma_t, k);
                    prop_assert_eq!(r.tau, list.len() as u64);
                    let got: Vec<Vec<usize>> = r.tdm.clone().unwrap().iter().map(|s| s.to_vec()).collect();
                    prop_assert_eq!(&got, &list);
                    for v in 1..=g.order() {
                        let count = list.iter().filter(|s| s.contains(&v)).count() as u64;
                        prop_assert_eq!(r.tdv_of(v), count);
                        prop_assert!(r.tdv_of(v) <= r.tau);
                    }
                    prop_assert_eq!(r.tdv.iter().sum::<u64>(), r.tau * r.gamma_t as u64);
                    prop_assert_eq!(tau(&g).unwrap(), r.tau);
                    prop_assert_eq!(gamma_t(&g).unwrap(), r.gamma_t);
                    prop_assert_eq!(tdv_all(&g).unwrap(), r.tdv);
                }
            }
        }

        #[test]
        fn relabeling_permutes_tdv(g in arb_graph(9), seed in any::<u64>()) {
            prop_assume!(!g.has_isolated_vertex());
            let n = g.order();
            let mut perm: Vec<usize> = (1..=n).collect();
            // Fisher-Yates driven by a splitmix sequence
            let mut state = seed;
            for i in (1..n).rev() {
                state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
                let mut z = state;
                z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
                perm.swap(i, (z ^ (z >> 31)) as usize % (i + 1));
            }
            let h = g.relabel(&perm).unwrap();
            let a = solve(&g, false).unwrap();
            let b = solve(&h, false).unwrap();
            prop_assert_eq!(a.gamma_t, b.gamma_t);
            prop_assert_eq!(a.tau, b.tau);
            for v in 1..=n {
                prop_assert_eq!(a.tdv_of(v), b.tdv_of(perm[v - 1]));
            }
        }

        #[test]
        fn disjoint_union_multiplies(g1 in arb_graph(6), g2 in arb_graph(6)) {
            prop_assume!(!g1.has_isolated_vertex() && !g2.has_isolated_vertex());
            let a = solve(&g1, false).unwrap();
            let b = solve(&g2, false).unwrap();
            let u = solve(&g1.disjoint_union(&g2).unwrap(), false).unwrap();
            prop_assert_eq!(u.gamma_t, a.gamma_t + b.gamma_t);
            prop_assert_eq!(u.tau, a.tau * b.tau);
            for v in 1..=g1.order() {
                prop_assert_eq!(u.tdv_of(v), a.tdv_of(v) * b.tau);
            }
            for v in 1..=g2.order() {
                prop_assert_eq!(u.tdv_of(g1.order() + v), b.tdv_of(v) * a.tau);
            }
        }
    }
}
