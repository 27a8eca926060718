//! Parametric graph families and the fixed example graphs.
//!
//! Every family has a one-token textual form (`path:6`, `kpartite:2,3`,
//! `queen:4x4`, `figure:1b`, `complement:mk2:3`, `union:path:4+cycle:3`)
//! that round-trips through [`FamilySpec::from_str`] and `Display`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Result, TdvError};
use crate::graph::{Graph, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// `P_n`, labeled `1..=n` along the path.
    Path(usize),
    /// `C_n`, labeled `1..=n` consecutively around the cycle.
    Cycle(usize),
    Complete(usize),
    /// Parts are labeled consecutively: part 1 gets `1..=a₁`, part 2 the next `a₂`, ...
    CompleteMultipartite(Vec<usize>),
    /// Center `1`, leaves `2..=leaves+1`.
    Star(usize),
    /// Star with every edge subdivided once: center `1`, arm vertices
    /// `2..=arms+1`, and end-vertex `arms+1+i` hanging off arm vertex `1+i`.
    ExtendedStar(usize),
    /// Perfect matching with edges `{2i-1, 2i}`.
    MK2(usize),
    /// Queen's graph on a `rows × cols` board, squares numbered row-major.
    Queen(usize, usize),
    FigureA,
    FigureB,
    Figure4A,
    Figure5,
    /// `P_4` with `n - 4` pendant vertices hung on support vertex `2`.
    LowerSharp(usize),
    /// `P_5` with `n - 5` pendant vertices hung on support vertex `2`.
    UpperSharp(usize),
    Complement(Box<FamilySpec>),
    Union(Vec<FamilySpec>),
}

impl FamilySpec {
    /// Vertex the example is built around, when the family has one: `v₀` of
    /// the neighborhood-sum figures, the maximum-degree vertex of the
    /// `Δ = n-3` figures, the degree-two vertex of `UpperSharp`, the center
    /// of a star.
    pub fn marked_vertex(&self) -> Option<usize> {
        match self {
            FamilySpec::FigureA
            | FamilySpec::FigureB
            | FamilySpec::Figure4A
            | FamilySpec::Figure5
            | FamilySpec::Star(_)
            | FamilySpec::ExtendedStar(_)
            | FamilySpec::LowerSharp(_) => Some(1),
            FamilySpec::UpperSharp(_) => Some(3),
            _ => None,
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        let g = match self {
            FamilySpec::Path(n) => {
                need(*n >= 2, "path needs n >= 2")?;
                let edges: Vec<_> = (1..*n).map(|i| (i, i + 1)).collect();
                Graph::from_edge_list(*n, &edges)?
            }
            FamilySpec::Cycle(n) => {
                need(*n >= 3, "cycle needs n >= 3")?;
                let edges: Vec<_> = (1..=*n).map(|i| (i, i % n + 1)).collect();
                Graph::from_edge_list(*n, &edges)?
            }
            FamilySpec::Complete(n) => {
                need(*n >= 2, "complete graph needs n >= 2")?;
                complete_multipartite(&vec![1; *n])?
            }
            FamilySpec::CompleteMultipartite(parts) => {
                need(
                    parts.len() >= 2,
                    "complete multipartite graph needs at least 2 parts",
                )?;
                need(
                    parts.iter().all(|&a| a >= 1),
                    "every part needs at least one vertex",
                )?;
                complete_multipartite(parts)?
            }
            FamilySpec::Star(leaves) => {
                need(*leaves >= 1, "star needs at least one leaf")?;
                let edges: Vec<_> = (2..=leaves + 1).map(|v| (1, v)).collect();
                Graph::from_edge_list(leaves + 1, &edges)?
            }
            FamilySpec::ExtendedStar(arms) => {
                need(*arms >= 3, "extended star needs at least 3 arms")?;
                let mut edges = Vec::new();
                for i in 1..=*arms {
                    edges.push((1, 1 + i));
                    edges.push((1 + i, arms + 1 + i));
                }
                Graph::from_edge_list(2 * arms + 1, &edges)?
            }
            FamilySpec::MK2(m) => {
                need(*m >= 1, "mK2 needs m >= 1")?;
                let edges: Vec<_> = (1..=*m).map(|i| (2 * i - 1, 2 * i)).collect();
                Graph::from_edge_list(2 * m, &edges)?
            }
            FamilySpec::Queen(rows, cols) => {
                need(
                    matches!(rows, 3 | 4) && matches!(cols, 3 | 4),
                    "queen boards are limited to 3 or 4 rows and columns",
                )?;
                queen_graph(*rows, *cols)?
            }
            FamilySpec::FigureA => figure_a(),
            FamilySpec::FigureB => figure_b(),
            FamilySpec::Figure4A => figure_4a(),
            FamilySpec::Figure5 => figure_5(),
            FamilySpec::LowerSharp(n) => {
                need(*n >= 4, "lowersharp needs n >= 4")?;
                path_with_pendants(4, *n)?
            }
            FamilySpec::UpperSharp(n) => {
                need(*n >= 5, "uppersharp needs n >= 5")?;
                path_with_pendants(5, *n)?
            }
            FamilySpec::Complement(inner) => inner.generate()?.complement(),
            FamilySpec::Union(parts) => {
                need(parts.len() >= 2, "union needs at least 2 graphs")?;
                let mut acc = parts[0].generate()?;
                for p in &parts[1..] {
                    acc = acc.disjoint_union(&p.generate()?)?;
                }
                acc
            }
        };
        Ok(g.with_name(self.to_string()))
    }
}

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(invalid(msg))
    }
}

fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    let n: usize = parts.iter().sum();
    if n > MAX_VERTICES {
        return Err(TdvError::TooLarge { n });
    }
    let mut part_of = Vec::with_capacity(n);
    for (j, &a) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(j, a));
    }
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if part_of[u - 1] != part_of[v - 1] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

fn queen_graph(rows: usize, cols: usize) -> Result<Graph> {
    let square = |r: usize, c: usize| r * cols + c + 1;
    let mut edges = Vec::new();
    for r1 in 0..rows {
        for c1 in 0..cols {
            for r2 in 0..rows {
                for c2 in 0..cols {
                    let (a, b) = (square(r1, c1), square(r2, c2));
                    if a >= b {
                        continue;
                    }
                    if r1 == r2 || c1 == c2 || r1.abs_diff(r2) == c1.abs_diff(c2) {
                        edges.push((a, b));
                    }
                }
            }
        }
    }
    Graph::from_edge_list(rows * cols, &edges)
}

fn path_with_pendants(base: usize, n: usize) -> Result<Graph> {
    let mut edges: Vec<_> = (1..base).map(|i| (i, i + 1)).collect();
    edges.extend((base + 1..=n).map(|w| (2, w)));
    Graph::from_edge_list(n, &edges)
}

fn fixed(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edge_list(n, edges).expect("fixed example graph is well formed")
}

/// Neighborhood-sum example with `τ = 3`, `γ_t = 2`.
///
/// ```text
///     2 --- 3
///      \   /
///        1 (v0, degree 3)
///        |
///        4
/// ```
///
/// The γ_t-sets are `{1,2}`, `{1,3}`, `{1,4}`, all inside `N[1]`.
fn figure_a() -> Graph {
    fixed(4, &[(1, 2), (1, 3), (1, 4), (2, 3)])
}

/// Neighborhood-sum example with `τ = 2`, `γ_t = 6`.
///
/// ```text
///   5 - 2 - 1 - 3 - 6        v0 = 1, adjacent to support vertices 2, 3, 4
///       |   |
///       8   4 - 7
///       |
///       9 - 10
/// ```
///
/// Support vertices `2, 3, 4, 9` lie in every γ_t-set; `1` is the cheapest
/// common neighbor of `2, 3, 4`; `9` needs one of `8` or `10`. So the
/// γ_t-sets are `{1,2,3,4,8,9}` and `{1,2,3,4,9,10}`.
fn figure_b() -> Graph {
    fixed(
        10,
        &[
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 5),
            (3, 6),
            (4, 7),
            (2, 8),
            (8, 9),
            (9, 10),
        ],
    )
}

/// `Δ = n - 3` with the two non-neighbors of the maximum-degree vertex
/// attached to disjoint parts of its neighborhood and not adjacent to each
/// other.
///
/// ```text
///        6 (α)            7 (β)
///       / \              / \
///      2   3            4   5
///       \   \          /   /
///        `---`-- 1 ---'---'     v = 1, deg 4 = n - 3
/// ```
///
/// `γ_t = 3`; the γ_t-sets are `{1, x, y}` with `x ∈ N(α)`, `y ∈ N(β)`.
fn figure_4a() -> Graph {
    fixed(
        7,
        &[
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 6),
            (3, 6),
            (4, 7),
            (5, 7),
        ],
    )
}

/// Maximum-degree vertex outside every γ_t-set.
///
/// ```text
///   4 (α) - 2 (x0) ===== 3 (y0) - 5 (β)
///          /|\         /|\
///         6 7 \       / 8 9
///          \ \ \     / / /
///           `-`-`-1-'-'-'     v = 1, adjacent to 2, 3, 6, 7, 8, 9
/// ```
///
/// `deg(1) = 6 = n - 3` is the unique maximum (`deg 2 = deg 3 = 5`), and
/// `{2, 3}` is the unique γ_t-set since both are support vertices.
fn figure_5() -> Graph {
    fixed(
        9,
        &[
            (1, 2),
            (1, 3),
            (1, 6),
            (1, 7),
            (1, 8),
            (1, 9),
            (2, 3),
            (2, 4),
            (3, 5),
            (2, 6),
            (2, 7),
            (3, 8),
            (3, 9),
        ],
    )
}

/// Seeded `G(n, p)` conditioned on being connected (rejection sampling).
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    need(
        (2..=MAX_VERTICES).contains(&n),
        "random graph needs 2 <= n <= 64",
    )?;
    need(p > 0.0 && p <= 1.0, "edge probability must be in (0, 1]")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges)?;
        if g.is_connected() {
            return Ok(g.with_name(format!("random:{n},{p},{seed}")));
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteMultipartite(parts) => {
                let parts: Vec<_> = parts.iter().map(|a| a.to_string()).collect();
                write!(f, "kpartite:{}", parts.join(","))
            }
            FamilySpec::Star(l) => write!(f, "star:{l}"),
            FamilySpec::ExtendedStar(a) => write!(f, "extstar:{a}"),
            FamilySpec::MK2(m) => write!(f, "mk2:{m}"),
            FamilySpec::Queen(r, c) => write!(f, "queen:{r}x{c}"),
            FamilySpec::FigureA => write!(f, "figure:1a"),
            FamilySpec::FigureB => write!(f, "figure:1b"),
            FamilySpec::Figure4A => write!(f, "figure:4a"),
            FamilySpec::Figure5 => write!(f, "figure:5"),
            FamilySpec::LowerSharp(n) => write!(f, "lowersharp:{n}"),
            FamilySpec::UpperSharp(n) => write!(f, "uppersharp:{n}"),
            FamilySpec::Complement(inner) => write!(f, "complement:{inner}"),
            FamilySpec::Union(parts) => {
                let parts: Vec<_> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "union:{}", parts.join("+"))
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = TdvError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| invalid(format!("family spec `{s}` is missing `:`")))?;
        let num = |a: &str| -> Result<usize> {
            a.trim()
                .parse()
                .map_err(|_| invalid(format!("`{a}` is not a non-negative integer in `{s}`")))
        };
        let spec = match kind.to_ascii_lowercase().as_str() {
            "path" => FamilySpec::Path(num(arg)?),
            "cycle" => FamilySpec::Cycle(num(arg)?),
            "complete" => FamilySpec::Complete(num(arg)?),
            "kpartite" => {
                FamilySpec::CompleteMultipartite(arg.split(',').map(num).collect::<Result<_>>()?)
            }
            "star" => FamilySpec::Star(num(arg)?),
            "extstar" => FamilySpec::ExtendedStar(num(arg)?),
            "mk2" => FamilySpec::MK2(num(arg)?),
            "queen" => {
                let (r, c) = arg
                    .split_once(['x', 'X'])
                    .ok_or_else(|| invalid(format!("queen board `{arg}` should be RxC")))?;
                FamilySpec::Queen(num(r)?, num(c)?)
            }
            "figure" => match arg.to_ascii_lowercase().as_str() {
                "1a" => FamilySpec::FigureA,
                "1b" => FamilySpec::FigureB,
                "4a" => FamilySpec::Figure4A,
                "5" => FamilySpec::Figure5,
                other => return Err(invalid(format!("unknown figure `{other}`"))),
            },
            "lowersharp" => FamilySpec::LowerSharp(num(arg)?),
            "uppersharp" => FamilySpec::UpperSharp(num(arg)?),
            "complement" => FamilySpec::Complement(Box::new(arg.parse()?)),
            "union" => FamilySpec::Union(arg.split('+').map(str::parse).collect::<Result<_>>()?),
            other => return Err(invalid(format!("unknown graph family `{other}`"))),
        };
        Ok(spec)
    }
}
