//! Named graph families, their closed-form `b` values, and seeded random
//! generators (Prüfer trees, random connected graphs, random geometric graphs).
//!
//! Labeling conventions:
//! - path and cycle: consecutive, `0 - 1 - ... - (n-1)`;
//! - star: center `0`;
//! - wheel `W_n`: `n` vertices in total, center `0`, rim cycle `1..n`;
//! - cube: the 3-dimensional hypercube, `u ~ v` iff the labels differ in one bit;
//! - broom `B(l, n-l)`: path `0..l`, then leaves `l..n` attached to `l-1`;
//! - starlike `S(n_1, ..., n_k)`: hub `0`, then each star in argument order,
//!   its center first.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{ratio, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Star {
        n: usize,
    },
    Complete {
        n: usize,
    },
    Wheel {
        n: usize,
    },
    Cube,
    /// Path of `path_len` vertices with `n - path_len` leaves on its last vertex.
    Broom {
        path_len: usize,
        n: usize,
    },
    /// Star sizes (vertex counts) `n_1, ..., n_k`.
    Starlike {
        parts: Vec<usize>,
    },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamily(msg));
        match *self {
            FamilySpec::Path { n } | FamilySpec::Star { n } | FamilySpec::Complete { n }
                if n < 2 =>
            {
                bad(format!("{self} needs n >= 2"))
            }
            FamilySpec::Cycle { n } if n < 3 => bad(format!("{self} needs n >= 3")),
            FamilySpec::Wheel { n } if n < 4 => bad(format!("{self} needs n >= 4")),
            FamilySpec::Broom { path_len, n } if path_len < 2 || n < path_len => {
                bad(format!("{self} needs 2 <= l <= n"))
            }
            FamilySpec::Starlike { ref parts } if parts.len() < 2 || parts.contains(&0) => bad(
                format!("{self} needs at least two stars, each of size >= 1"),
            ),
            _ => Ok(()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Star { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Wheel { n }
            | FamilySpec::Broom { n, .. } => n,
            FamilySpec::Cube => 8,
            FamilySpec::Starlike { ref parts } => parts.iter().sum::<usize>() + 1,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path { n } => write!(f, "path({n})"),
            FamilySpec::Cycle { n } => write!(f, "cycle({n})"),
            FamilySpec::Star { n } => write!(f, "star({n})"),
            FamilySpec::Complete { n } => write!(f, "complete({n})"),
            FamilySpec::Wheel { n } => write!(f, "wheel({n})"),
            FamilySpec::Cube => write!(f, "cube"),
            FamilySpec::Broom { path_len, n } => write!(f, "broom({path_len}, {n})"),
            FamilySpec::Starlike { parts } => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "starlike({})", parts.join(","))
            }
        }
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let mut edges = Vec::new();
    let n = spec.vertex_count();
    match *spec {
        FamilySpec::Path { n } => edges.extend((1..n).map(|v| (v - 1, v))),
        FamilySpec::Cycle { n } => {
            edges.extend((1..n).map(|v| (v - 1, v)));
            edges.push((n - 1, 0));
        }
        FamilySpec::Star { n } => edges.extend((1..n).map(|v| (0, v))),
        FamilySpec::Complete { n } => {
            for u in 0..n {
                edges.extend((u + 1..n).map(|v| (u, v)));
            }
        }
        FamilySpec::Wheel { n } => {
            edges.extend((1..n).map(|v| (0, v)));
            edges.extend((2..n).map(|v| (v - 1, v)));
            edges.push((n - 1, 1));
        }
        FamilySpec::Cube => {
            for u in 0..8usize {
                for bit in 0..3 {
                    let v = u ^ (1 << bit);
                    if u < v {
                        edges.push((u, v));
                    }
                }
            }
        }
        FamilySpec::Broom { path_len, n } => {
            edges.extend((1..path_len).map(|v| (v - 1, v)));
            edges.extend((path_len..n).map(|v| (path_len - 1, v)));
        }
        FamilySpec::Starlike { ref parts } => {
            let mut next = 1;
            for &size in parts {
                let center = next;
                edges.push((0, center));
                edges.extend((1..size).map(|j| (center, center + j)));
                next += size;
            }
        }
    }
    Graph::new(n, edges)
}

/// Closed-form `b(G)` for each family.
///
/// For the wheel this is `(n/2)` times the smallest density among the center
/// singleton and the rim arcs of `i` consecutive vertices, `(i + 2) / (i (n - i))`.
/// That minimum sits at `i = 2`, giving `n / (n - 2)` (see [`wheel_two_arc_b`]),
/// only for `n <= 8`; from `n = 9` on a longer arc is sparser.
pub fn closed_form_b(spec: &FamilySpec) -> Result<Rational> {
    spec.validate()?;
    let n = spec.vertex_count() as i64;
    let b = match *spec {
        FamilySpec::Complete { .. } => ratio(n, 2),
        FamilySpec::Cycle { .. } if n % 2 == 0 => ratio(4, n),
        FamilySpec::Cycle { .. } => ratio(n, (n / 2) * (n - n / 2)),
        FamilySpec::Path { .. } if n % 2 == 0 => ratio(2, n),
        FamilySpec::Path { .. } => ratio(2 * n, n * n - 1),
        FamilySpec::Star { .. } => ratio(1, 2) + ratio(1, 2 * (n - 1)),
        FamilySpec::Wheel { .. } => {
            let arcs = (1..=n - 2).map(|i| ratio(i + 2, i * (n - i)));
            let min_density = arcs.fold(ratio(1, 1), |best, r| best.min(r));
            ratio(n, 2) * min_density
        }
        FamilySpec::Cube => ratio(1, 1),
        FamilySpec::Broom { path_len, .. } => {
            let l = path_len as i64;
            if 2 * l <= n {
                ratio(n, 2 * (l - 1) * (n - l + 1))
            } else if n % 2 == 0 {
                ratio(2, n)
            } else {
                ratio(2 * n, n * n - 1)
            }
        }
        FamilySpec::Starlike { ref parts } => {
            let largest = *parts.iter().max().expect("validated") as i64;
            ratio(n, 2 * largest * (n - largest))
        }
    };
    Ok(b)
}

/// `n / (n - 2)`: the value of `(n/2) ρ(S)` for a two-vertex rim arc of `W_n`.
/// Equals `b(W_n)` for `4 <= n <= 8` only.
pub fn wheel_two_arc_b(n: usize) -> Result<Rational> {
    FamilySpec::Wheel { n }.validate()?;
    Ok(ratio(n as i64, n as i64 - 2))
}

/// Uniformly random labeled tree on `n` vertices via a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let edges = match n {
        0 | 1 => Vec::new(),
        2 => vec![(0, 1)],
        _ => {
            let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            prufer_decode(n, &code)
        }
    };
    Graph::new(n, edges).expect("Prüfer decoding yields a simple tree")
}

fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(Reverse(c));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    edges
}

/// Every rooted tree on `n` vertices, one per canonical level sequence
/// (Beyer-Hedetniemi). Each unlabeled free tree appears at least once, so
/// this covers every tree shape of order `n`.
pub fn rooted_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut levels: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    loop {
        out.push(tree_from_levels(&levels));
        let Some(p) = levels.iter().rposition(|&l| l > 2) else {
            break;
        };
        let q = levels[..p]
            .iter()
            .rposition(|&l| l == levels[p] - 1)
            .expect("a parent level precedes every level > 1");
        for i in p..n {
            levels[i] = levels[i - (p - q)];
        }
    }
    out
}

fn tree_from_levels(levels: &[usize]) -> Graph {
    let edges = (1..levels.len()).map(|i| {
        let parent = levels[..i]
            .iter()
            .rposition(|&l| l + 1 == levels[i])
            .expect("level sequences descend by one");
        (parent, i)
    });
    Graph::new(levels.len(), edges).expect("level sequence yields a tree")
}

/// Random Prüfer tree plus each remaining vertex pair independently with
/// probability `p`. Always connected.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::TooSmall { n, required: 1 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tree = random_tree(n, &mut rng);
    let mut edges = tree.edges().to_vec();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeometricGraph {
    pub graph: Graph,
    pub points: Vec<(f64, f64)>,
    /// The seed that produced this instance.
    pub seed: u64,
}

/// `n` uniform points in the unit square, an edge whenever two points are at
/// Euclidean distance strictly below `radius`.
pub fn random_geometric(n: usize, radius: f64, seed: u64) -> Result<GeometricGraph> {
    if !(radius.is_finite() && radius > 0.0) {
        return Err(Error::InvalidFamily(format!(
            "radius must be positive, got {radius}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<(f64, f64)> = (0..n).map(|_| (rng.gen(), rng.gen())).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let (dx, dy) = (points[u].0 - points[v].0, points[u].1 - points[v].1);
            if (dx * dx + dy * dy).sqrt() < radius {
                edges.push((u, v));
            }
        }
    }
    Ok(GeometricGraph {
        graph: Graph::new(n, edges)?,
        points,
        seed,
    })
}

/// Tries seeds `seed, seed + 1, ...` until the geometric graph is connected.
pub fn random_geometric_connected(
    n: usize,
    radius: f64,
    seed: u64,
    max_attempts: u32,
) -> Result<GeometricGraph> {
    for attempt in 0..max_attempts {
        let g = random_geometric(n, radius, seed.wrapping_add(attempt as u64))?;
        if g.graph.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::RetriesExhausted {
        seed,
        attempts: max_attempts,
    })
}
