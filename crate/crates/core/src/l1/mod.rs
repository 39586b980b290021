//! The l1 graph smoothing problem
//!
//! ```text
//! b(G) = min { Σ_{uv ∈ E} |x_u - x_v| : Σ x_v = 0, ‖x‖₁ = 1 }
//! ```
//!
//! is solved exactly through its sparsest-cut form: `b(G) = (n/2) min ρ(S)`
//! over nonempty proper `S` such that both `S` and `V \ S` induce connected
//! subgraphs. An optimal vector takes the value `1/(2|S|)` on `S` and
//! `-1/(2|V \ S|)` off it.
//!
//! Computing `b` is NP-hard in general, so [`b_exact`] enumerates subsets and
//! refuses graphs above a vertex cap. [`heuristic_b_upper`] gives a
//! polynomial-time upper bound from a global minimum cut.
//!
//! Independent oracles used to cross-check the enumeration:
//! - [`b_quasi_oracle`]: minimum of `(ξ(S1) + ξ(S2)) / 2` over all disjoint
//!   nonempty pairs, with no partition or connectivity requirement;
//! - [`sparsest_cut_unrestricted`]: minimum density over every nonempty proper
//!   subset, no connectivity pruning.

mod mincut;
mod model;

pub use mincut::{heuristic_b_upper, min_cut, MinCut};
pub use model::{
    export_complementarity_model, ComplementarityModel, LinearConstraint, ModelCheck, Sense,
};

use std::cmp::Ordering;

use crate::cut::{cut, cut_from_parts, mask_boundary, Cut};
use crate::error::{Error, Result};
use crate::graph::{mask_connected, Graph};
use crate::rational::{ratio, to_f64, Rational};
use crate::smoothing::{f1_exact, Regime, SmoothingVector};
use crate::vertex_set::{low_bits, VertexSet};

/// Default vertex cap for exact enumeration.
pub const DEFAULT_CAP: usize = 26;
/// Masks are `u64` with vertex 0 fixed, so the enumeration itself stops here.
pub const MAX_ENUMERATION_N: usize = 63;
pub const QUASI_ORACLE_CAP: usize = 12;
pub const UNRESTRICTED_CAP: usize = 20;

/// Disjoint nonempty vertex sets, not necessarily covering `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiBipartition {
    s1: VertexSet,
    s2: VertexSet,
}

impl QuasiBipartition {
    pub fn new(s1: VertexSet, s2: VertexSet) -> Result<Self> {
        if s1.universe() != s2.universe() {
            return Err(Error::VertexSetMismatch {
                expected: s1.universe(),
                actual: s2.universe(),
            });
        }
        if s1.is_empty() || s2.is_empty() || !s1.is_disjoint(&s2) {
            return Err(Error::TrivialVertexSet);
        }
        Ok(QuasiBipartition { s1, s2 })
    }

    pub fn first(&self) -> &VertexSet {
        &self.s1
    }

    pub fn second(&self) -> &VertexSet {
        &self.s2
    }

    /// `(ξ(S1) + ξ(S2)) / 2`
    pub fn half_xi_sum(&self, g: &Graph) -> Result<Rational> {
        g.check_set(&self.s1)?;
        let xi = |s: &VertexSet| ratio(g.boundary_size(s) as i64, s.len() as i64);
        Ok((xi(&self.s1) + xi(&self.s2)) / 2)
    }

    /// `1/(2|S1|)` on `S1`, `-1/(2|S2|)` on `S2`, zero elsewhere.
    pub fn vector_exact(&self) -> Vec<Rational> {
        let n = self.s1.universe();
        let pos = ratio(1, 2 * self.s1.len() as i64);
        let neg = ratio(-1, 2 * self.s2.len() as i64);
        (0..n)
            .map(|v| {
                if self.s1.contains(v) {
                    pos
                } else if self.s2.contains(v) {
                    neg
                } else {
                    Rational::from_integer(0)
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct L1Result {
    pub b: Rational,
    /// Canonical sparsest cut; its set contains vertex 0.
    pub sparsest: Cut,
    pub vector: SmoothingVector,
    /// The same vector in exact arithmetic.
    pub vector_exact: Vec<Rational>,
    /// Number of candidate sets inspected.
    pub enumerated: u64,
}

/// Exact `b(G)` by enumerating every vertex set containing vertex 0.
///
/// The witness is canonical: among all sparsest cuts whose two sides are
/// connected, the set containing vertex 0 of smallest size, then the one
/// whose sorted vertex list is lexicographically smallest.
pub fn b_exact(g: &Graph, cap: usize) -> Result<L1Result> {
    let workers = std::thread::available_parallelism().map_or(1, |p| p.get());
    b_exact_with_workers(g, cap, workers)
}

/// [`b_exact`] with an explicit worker count. The result does not depend on it.
pub fn b_exact_with_workers(g: &Graph, cap: usize, workers: usize) -> Result<L1Result> {
    let n = g.n();
    let cap = cap.min(MAX_ENUMERATION_N);
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    if n < 2 {
        return Err(Error::TooSmall { n, required: 2 });
    }
    g.require_connected()?;
    let adj = g.masks().expect("n <= 63");

    let free_bits = n - 1;
    let total: u64 = 1 << free_bits;
    // small ranges are not worth a thread
    let workers = if total < 1 << 14 {
        1
    } else {
        workers.max(1) as u64
    };
    let chunk = total.div_ceil(workers);

    let best = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let start = (w * chunk).min(total);
                let end = ((w + 1) * chunk).min(total);
                scope.spawn(move || scan_range(adj, n, start, end))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("enumeration worker panicked"))
            .fold(None, |a, b| merge_best(n, a, b))
    });

    let (mask, boundary) =
        best.expect("a connected graph on >= 2 vertices has a connected bipartition");
    let sparsest = cut_from_parts(n, VertexSet::from_mask(n, mask), boundary as usize);
    let b = sparsest.half_n_density();
    let vector_exact = l1_fiedler_from_cut_exact(g, &sparsest.set)?;
    let vector = to_smoothing_vector(g, &vector_exact)?;
    debug_assert_eq!(f1_exact(g, &vector_exact)?, b);
    Ok(L1Result {
        b,
        sparsest,
        vector,
        vector_exact,
        enumerated: total - 1,
    })
}

type Candidate = Option<(u64, u32)>;

/// Scans Gray-code indices `start..end`; `S = {0} ∪ (gray(i) << 1)`.
fn scan_range(adj: &[u64], n: usize, start: u64, end: u64) -> Candidate {
    if start >= end {
        return None;
    }
    let full = low_bits(n);
    let gray = |i: u64| i ^ (i >> 1);
    let mut set = 1 | (gray(start) << 1);
    let mut boundary = mask_boundary(adj, set);
    let mut best: Candidate = None;

    let mut i = start;
    loop {
        if set != full {
            consider(adj, n, set, boundary, &mut best);
        }
        i += 1;
        if i == end {
            break;
        }
        let v = i.trailing_zeros() as usize + 1;
        let bit = 1u64 << v;
        let inside = (adj[v] & set & !bit).count_ones();
        let degree = adj[v].count_ones();
        if set & bit == 0 {
            boundary = boundary + degree - 2 * inside;
        } else {
            boundary = boundary + 2 * inside - degree;
        }
        set ^= bit;
    }
    best
}

#[inline]
fn consider(adj: &[u64], n: usize, set: u64, boundary: u32, best: &mut Candidate) {
    let size = set.count_ones() as u64;
    let pairs = size * (n as u64 - size);
    if let Some((best_set, best_boundary)) = *best {
        let best_size = best_set.count_ones() as u64;
        let best_pairs = best_size * (n as u64 - best_size);
        // ρ = boundary / pairs, compared by cross-multiplication
        let lhs = boundary as u64 * best_pairs;
        let rhs = best_boundary as u64 * pairs;
        if lhs > rhs || (lhs == rhs && !canonical_before(set, best_set)) {
            return;
        }
    }
    let full = low_bits(n);
    if mask_connected(adj, set) && mask_connected(adj, full & !set) {
        *best = Some((set, boundary));
    }
}

/// Deterministic min-reduce of two worker results.
fn merge_best(n: usize, a: Candidate, b: Candidate) -> Candidate {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some((sa, da)), Some((sb, db))) => {
            let pairs = |s: u64| s.count_ones() as u64 * (n as u64 - s.count_ones() as u64);
            let lhs = da as u64 * pairs(sb);
            let rhs = db as u64 * pairs(sa);
            if lhs < rhs || (lhs == rhs && canonical_before(sa, sb)) {
                a
            } else {
                b
            }
        }
    }
}

/// Tie-break between two equally sparse sets: smaller first, then the
/// lexicographically smaller sorted vertex list.
fn canonical_before(a: u64, b: u64) -> bool {
    match a.count_ones().cmp(&b.count_ones()) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => {
            let diff = a ^ b;
            diff != 0 && a & diff & diff.wrapping_neg() != 0
        }
    }
}

fn to_smoothing_vector(g: &Graph, exact: &[Rational]) -> Result<SmoothingVector> {
    SmoothingVector::new(g, exact.iter().map(to_f64).collect(), Regime::L1)
}

/// `1/(2|S|)` on `S`, `-1/(2|V \ S|)` off `S`, in exact arithmetic.
pub fn l1_fiedler_from_cut_exact(g: &Graph, s: &VertexSet) -> Result<Vec<Rational>> {
    g.check_set(s)?;
    let size = s.len();
    if size == 0 || size == g.n() {
        return Err(Error::TrivialVertexSet);
    }
    let pos = ratio(1, 2 * size as i64);
    let neg = ratio(-1, 2 * (g.n() - size) as i64);
    Ok((0..g.n())
        .map(|v| if s.contains(v) { pos } else { neg })
        .collect())
}

/// Feasible l1 vector with objective `(n/2) ρ(S)`; optimal when `δ(S)` is a
/// sparsest cut.
pub fn l1_fiedler_from_cut(g: &Graph, s: &VertexSet) -> Result<SmoothingVector> {
    to_smoothing_vector(g, &l1_fiedler_from_cut_exact(g, s)?)
}

/// `(1/2) min (ξ(S1) + ξ(S2))` over all quasi-bipartitions, by brute force.
pub fn b_quasi_oracle(g: &Graph) -> Result<Rational> {
    let n = g.n();
    if n > QUASI_ORACLE_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: QUASI_ORACLE_CAP,
        });
    }
    if n < 2 {
        return Err(Error::TooSmall { n, required: 2 });
    }
    g.require_connected()?;
    let adj = g.masks().expect("small graph");
    let full = low_bits(n);
    let boundary: Vec<u64> = (0..=full).map(|s| mask_boundary(adj, s) as u64).collect();

    // best value as a fraction num/den
    let mut best: Option<(u64, u64)> = None;
    for s1 in 1..=full {
        let k1 = s1.count_ones() as u64;
        let rest = full & !s1;
        // nonempty submasks of the rest
        let mut s2 = rest;
        while s2 != 0 {
            let k2 = s2.count_ones() as u64;
            let num = boundary[s1 as usize] * k2 + boundary[s2 as usize] * k1;
            let den = k1 * k2;
            if best.is_none_or(|(bn, bd)| num * bd < bn * den) {
                best = Some((num, den));
            }
            s2 = (s2 - 1) & rest;
        }
    }
    let (num, den) = best.expect("n >= 2 admits a pair");
    Ok(ratio(num as i64, 2 * den as i64))
}

/// Sparsest cut over every nonempty proper subset, no connectivity filter.
/// Returns the lowest-mask minimiser containing vertex 0.
pub fn sparsest_cut_unrestricted(g: &Graph) -> Result<Cut> {
    let n = g.n();
    if n > UNRESTRICTED_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: UNRESTRICTED_CAP,
        });
    }
    if n < 2 {
        return Err(Error::TooSmall { n, required: 2 });
    }
    let mut best: Option<(u64, usize, Rational)> = None;
    for rest in 0..(1u64 << (n - 1)) - 1 {
        let mask = 1 | (rest << 1);
        let boundary = g
            .edges()
            .iter()
            .filter(|&&(u, v)| (mask >> u & 1) != (mask >> v & 1))
            .count();
        let size = mask.count_ones() as i64;
        let density = ratio(boundary as i64, size * (n as i64 - size));
        if best.as_ref().is_none_or(|(_, _, d)| density < *d) {
            best = Some((mask, boundary, density));
        }
    }
    let (mask, _, _) = best.expect("n >= 2");
    cut(g, &VertexSet::from_mask(n, mask))
}
