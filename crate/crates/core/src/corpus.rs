//! Named graph collections used by the verification driver and tests.

use crate::error::Result;
use crate::family::{random_connected_graph, FamilySpec};
use crate::graph::Graph;

/// Every composition of `n` into at least two positive parts, for all
/// `2 <= n <= max_total`, in lexicographic order.
pub fn compositions(max_total: usize) -> Vec<Vec<usize>> {
    fn extend(rest: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            if current.len() >= 2 {
                out.push(current.clone());
            }
            return;
        }
        for a in 1..=rest {
            current.push(a);
            extend(rest - a, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    for n in 2..=max_total {
        extend(n, &mut Vec::new(), &mut out);
    }
    out
}

/// Deterministic family of fixed examples: paths, cycles, complete and
/// multipartite graphs, stars, queen boards, the sharpness constructions,
/// matchings and their complements, and the figure graphs.
pub fn family_corpus() -> Vec<FamilySpec> {
    use FamilySpec::*;
    let mut specs = Vec::new();
    specs.extend((2..=22).map(Path));
    specs.extend((3..=22).map(Cycle));
    specs.extend((2..=9).map(Complete));
    specs.extend(compositions(9).into_iter().map(CompleteMultipartite));
    specs.extend((1..=8).map(Star));
    specs.extend((3..=5).map(ExtendedStar));
    specs.extend([Queen(3, 3), Queen(4, 4)]);
    specs.extend((4..=12).map(LowerSharp));
    specs.extend((5..=12).map(UpperSharp));
    for m in 1..=5 {
        specs.push(MK2(m));
        specs.push(Complement(Box::new(MK2(m))));
    }
    specs.extend([FigureA, FigureB, Figure4A, Figure5]);
    specs
}

/// `count` seeded connected random graphs with `4 <= n <= 12`.
pub fn random_corpus(count: usize, base_seed: u64) -> Result<Vec<Graph>> {
    const DENSITIES: [f64; 4] = [0.25, 0.3, 0.4, 0.55];
    (0..count)
        .map(|i| {
            let n = 4 + i % 9;
            let p = DENSITIES[(i / 9) % DENSITIES.len()];
            random_connected_graph(n, p, base_seed + i as u64)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts() {
        // compositions of n into >= 2 parts: 2^(n-1) - 1
        let all = compositions(9);
        assert_eq!(
            all.len(),
            (2..=9).map(|n| (1usize << (n - 1)) - 1).sum::<usize>()
        );
        assert!(all
            .iter()
            .all(|c| c.len() >= 2 && c.iter().sum::<usize>() <= 9));
    }

    #[test]
    fn corpora_generate() {
        for spec in family_corpus() {
            spec.generate().unwrap();
        }
        let graphs = random_corpus(40, 7).unwrap();
        assert!(graphs.iter().all(|g| g.is_connected() && g.order() <= 12));
    }
}
