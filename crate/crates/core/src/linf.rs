//! The l-infinity smoothing problem
//!
//! ```text
//! γ(G) = min { max_{uv ∈ E} |x_u - x_v| : Σ x_v = 0, ‖x‖∞ = 1 }
//! ```
//!
//! Some coordinate of an optimum equals 1 (negate otherwise), so γ is the
//! minimum over `k` of the linear program LP(k): minimize `y` subject to
//! `±(x_i - x_j) <= y` on every edge, `Σ x = 0`, `-1 <= x <= 1`, `x_k = 1`.

use std::thread;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lp::{solve_lp, LinearProgram, LpStatus, DEFAULT_TOL};
use crate::smoothing::{Regime, SmoothingVector};

#[derive(Debug, Clone, PartialEq)]
pub struct LinfResult {
    pub gamma: f64,
    pub x: SmoothingVector,
    pub argmin_k: usize,
}

/// LP(k) over variables `x_0, ..., x_{n-1}, y` (y last, free).
pub fn build_lp_k(g: &Graph, k: usize) -> Result<LinearProgram> {
    let n = g.n();
    if k >= n {
        return Err(Error::InvalidGraph(format!(
            "vertex {k} out of range (n = {n})"
        )));
    }
    let mut objective = vec![0.0; n + 1];
    objective[n] = 1.0;
    let mut lp = LinearProgram::new(objective);
    for &(i, j) in g.edges() {
        for sign in [1.0, -1.0] {
            let mut row = vec![0.0; n + 1];
            row[i] = sign;
            row[j] = -sign;
            row[n] = -1.0;
            lp.inequalities.push((row, 0.0));
        }
    }
    let mut sum = vec![1.0; n + 1];
    sum[n] = 0.0;
    lp.equalities.push((sum, 0.0));
    for (v, bound) in lp.bounds.iter_mut().take(n).enumerate() {
        *bound = if v == k {
            (Some(1.0), Some(1.0))
        } else {
            (Some(-1.0), Some(1.0))
        };
    }
    Ok(lp)
}

fn solve_k(g: &Graph, k: usize) -> Result<(f64, Vec<f64>)> {
    let lp = build_lp_k(g, k)?;
    let s = solve_lp(&lp, DEFAULT_TOL)?;
    if s.status != LpStatus::Optimal {
        return Err(Error::LinfSubproblem {
            k,
            reason: format!("{:?}", s.status).to_lowercase(),
        });
    }
    let mut z = s.z;
    let y = z.pop().expect("LP(k) has n + 1 variables");
    Ok((y, z))
}

/// Solves LP(k) for every vertex, in parallel, and keeps the smallest
/// optimum; the smallest `k` wins ties.
pub fn gamma(g: &Graph) -> Result<LinfResult> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooSmall { n, required: 2 });
    }
    g.require_connected()?;

    let workers = thread::available_parallelism()
        .map_or(1, |w| w.get())
        .min(n);
    let chunk = n.div_ceil(workers);
    let solved: Vec<Result<(f64, Vec<f64>)>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..n)
            .step_by(chunk)
            .map(|start| {
                scope.spawn(move || {
                    (start..(start + chunk).min(n))
                        .map(|k| solve_k(g, k))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("LP worker panicked"))
            .collect()
    });

    let mut best: Option<(usize, f64, Vec<f64>)> = None;
    for (k, r) in solved.into_iter().enumerate() {
        let (y, x) = r?;
        if best.as_ref().is_none_or(|(_, b, _)| y < *b - DEFAULT_TOL) {
            best = Some((k, y, x));
        }
    }
    let (argmin_k, _, x) = best.expect("n >= 2");
    let x = SmoothingVector::new(g, x, Regime::Linf)?;
    Ok(LinfResult {
        gamma: x.objective,
        x,
        argmin_k,
    })
}

/// `γ(P_n) = 2/(n-1)` with the arithmetic progression `x_i = 1 - iγ`.
pub fn gamma_path_closed_form(n: usize) -> Result<(f64, Vec<f64>)> {
    if n < 2 {
        return Err(Error::TooSmall { n, required: 2 });
    }
    let gamma = 2.0 / (n - 1) as f64;
    let x = (0..n).map(|i| 1.0 - i as f64 * gamma).collect();
    Ok((gamma, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, random_connected, FamilySpec};
    use crate::smoothing::max_edge_difference;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn path(n: usize) -> Graph {
        generate(&FamilySpec::Path { n }).unwrap()
    }

    fn assert_invariants(g: &Graph, r: &LinfResult) {
        let x = &r.x.values;
        assert!(x.iter().sum::<f64>().abs() <= 1e-7);
        let sup = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        assert!((sup - 1.0).abs() <= 1e-7);
        assert!((x[r.argmin_k] - 1.0).abs() <= 1e-7);
        assert!((max_edge_difference(g, x).unwrap() - r.gamma).abs() <= 1e-7);
    }

    #[test]
    fn lp_shape() {
        let lp = build_lp_k(&path(3), 0).unwrap();
        assert_eq!(lp.num_vars(), 4);
        assert_eq!(lp.inequalities.len(), 4);
        assert_eq!(lp.equalities.len(), 1);
        assert_eq!(lp.bounds[0], (Some(1.0), Some(1.0)));
        assert_eq!(lp.bounds[1], (Some(-1.0), Some(1.0)));
        assert_eq!(lp.bounds[3], (None, None));
        assert!(build_lp_k(&path(3), 3).is_err());
    }

    #[test]
    fn p2_is_forced() {
        let (y, x) = solve_k(&path(2), 0).unwrap();
        assert!((y - 2.0).abs() < 1e-9);
        assert!((x[0] - 1.0).abs() < 1e-9 && (x[1] + 1.0).abs() < 1e-9);
        let r = gamma(&path(2)).unwrap();
        assert!((r.gamma - 2.0).abs() < 1e-9);
    }

    #[test]
    fn p6() {
        let (y, _) = solve_k(&path(6), 0).unwrap();
        assert!((y - 0.4).abs() < 1e-9);
        let r = gamma(&path(6)).unwrap();
        assert!((r.gamma - 0.4).abs() < 1e-7);
        assert_invariants(&path(6), &r);

        let (g, x) = gamma_path_closed_form(6).unwrap();
        assert_eq!(g, 0.4);
        let expected = [1.0, 0.6, 0.2, -0.2, -0.6, -1.0];
        assert!(x.iter().zip(expected).all(|(a, b)| (a - b).abs() < 1e-15));
        assert!((max_edge_difference(&path(6), &x).unwrap() - 0.4).abs() < 1e-15);
    }

    #[test]
    fn closed_form_small() {
        assert_eq!(gamma_path_closed_form(2).unwrap(), (2.0, vec![1.0, -1.0]));
        assert_eq!(
            gamma_path_closed_form(5).unwrap(),
            (0.5, vec![1.0, 0.5, 0.0, -0.5, -1.0])
        );
        assert!(gamma_path_closed_form(1).is_err());
    }

    #[test]
    fn paths_match_closed_form() {
        for n in 2..=20 {
            let r = gamma(&path(n)).unwrap();
            let (expected, _) = gamma_path_closed_form(n).unwrap();
            assert!((r.gamma - expected).abs() <= 1e-7, "n = {n}");
            assert_invariants(&path(n), &r);
        }
    }

    #[test]
    fn complete_graphs() {
        // every pair is adjacent, so the objective is max x - min x; with a
        // coordinate at 1 and Σx = 0 the rest spread -1/(n-1) evenly
        for n in 2..=8 {
            let k = generate(&FamilySpec::Complete { n }).unwrap();
            let expected = n as f64 / (n - 1) as f64;
            assert!(
                (gamma(&k).unwrap().gamma - expected).abs() < 1e-7,
                "n = {n}"
            );
        }
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(gamma(&g), Err(Error::Disconnected));
    }

    #[test]
    fn adding_edges_never_lowers_lp_k() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for seed in 0..40 {
            let n = rng.gen_range(3..9);
            let g = random_connected(n, 0.2, seed).unwrap();
            let missing: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| !g.has_edge(u, v))
                .collect();
            if missing.is_empty() {
                continue;
            }
            let (u, v) = missing[rng.gen_range(0..missing.len())];
            let h = g.with_edge(u, v).unwrap();
            for k in 0..n {
                let (before, _) = solve_k(&g, k).unwrap();
                let (after, _) = solve_k(&h, k).unwrap();
                assert!(after >= before - 1e-9);
            }
        }
    }

    #[test]
    fn random_vectors_never_beat_gamma() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for seed in 0..4 {
            let g = random_connected(8, 0.3, seed).unwrap();
            let gamma = gamma(&g).unwrap().gamma;
            let mut tried = 0;
            while tried < 10_000 {
                let raw: Vec<f64> = (0..8).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let mean = raw.iter().sum::<f64>() / 8.0;
                let shifted: Vec<f64> = raw.iter().map(|v| v - mean).collect();
                let sup = shifted.iter().fold(0.0f64, |m, v| m.max(v.abs()));
                if sup < 1e-12 {
                    continue;
                }
                // scaling keeps Σx = 0 and makes ‖x‖∞ = 1
                let x: Vec<f64> = shifted.iter().map(|v| v / sup).collect();
                assert!(max_edge_difference(&g, &x).unwrap() >= gamma - 1e-9);
                tried += 1;
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]

        #[test]
        fn result_invariants(n in 2usize..=10, p in 0.0f64..0.6, seed in any::<u64>()) {
            let g = random_connected(n, p, seed).unwrap();
            let r = gamma(&g).unwrap();
            assert_invariants(&g, &r);
            for k in 0..r.argmin_k {
                let (y, _) = solve_k(&g, k).unwrap();
                prop_assert!(y > r.gamma - 1e-7);
            }
        }
    }
}
