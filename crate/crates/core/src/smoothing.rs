//! Vectors over the vertices and the three smoothing objectives.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    L1,
    L2,
    Linf,
}

/// A vertex vector together with the norm regime it is normalised for and its
/// objective: `f1` for L1, `x^T L x` for L2, the largest edge difference for Linf.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SmoothingVector {
    pub values: Vec<f64>,
    pub regime: Regime,
    pub objective: f64,
}

impl SmoothingVector {
    pub fn new(g: &Graph, values: Vec<f64>, regime: Regime) -> Result<Self> {
        let objective = match regime {
            Regime::L1 => f1(g, &values)?,
            Regime::L2 => quadratic_form(g, &values)?,
            Regime::Linf => max_edge_difference(g, &values)?,
        };
        Ok(SmoothingVector {
            values,
            regime,
            objective,
        })
    }

    /// Sum zero and unit norm (in the vector's own regime), both within `tol`.
    pub fn is_normalized(&self, tol: f64) -> bool {
        let sum: f64 = self.values.iter().sum();
        let norm = match self.regime {
            Regime::L1 => self.values.iter().map(|x| x.abs()).sum(),
            Regime::L2 => self.values.iter().map(|x| x * x).sum::<f64>().sqrt(),
            Regime::Linf => self.values.iter().fold(0.0f64, |m, x| m.max(x.abs())),
        };
        sum.abs() <= tol && (norm - 1.0).abs() <= tol
    }
}

fn check_len(g: &Graph, len: usize) -> Result<()> {
    if len != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            actual: len,
        });
    }
    Ok(())
}

/// `f1(x) = Σ_{uv ∈ E} |x_u - x_v|`
pub fn f1(g: &Graph, x: &[f64]) -> Result<f64> {
    check_len(g, x.len())?;
    Ok(g.edges().iter().map(|&(u, v)| (x[u] - x[v]).abs()).sum())
}

/// [`f1`] in exact arithmetic.
pub fn f1_exact(g: &Graph, x: &[Rational]) -> Result<Rational> {
    check_len(g, x.len())?;
    Ok(g.edges()
        .iter()
        .fold(Rational::zero(), |acc, &(u, v)| acc + (x[u] - x[v]).abs()))
}

/// `x^T L x = Σ_{uv ∈ E} (x_u - x_v)^2`
pub fn quadratic_form(g: &Graph, x: &[f64]) -> Result<f64> {
    check_len(g, x.len())?;
    Ok(g.edges().iter().map(|&(u, v)| (x[u] - x[v]).powi(2)).sum())
}

/// `max_{uv ∈ E} |x_u - x_v|`, zero for an edgeless graph.
pub fn max_edge_difference(g: &Graph, x: &[f64]) -> Result<f64> {
    check_len(g, x.len())?;
    Ok(g.edges()
        .iter()
        .map(|&(u, v)| (x[u] - x[v]).abs())
        .fold(0.0, f64::max))
}

/// Both descriptions of the l1 feasible set evaluated on one vector:
/// `(Σx = 0, ‖x‖₁ = 1)` and `(Σ_{x≥0} x = 1/2, Σ_{x≤0} x = -1/2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct L1Feasibility {
    pub sum: f64,
    pub l1_norm: f64,
    pub positive_part: f64,
    pub negative_part: f64,
    pub by_norm: bool,
    pub by_parts: bool,
}

impl L1Feasibility {
    pub fn forms_agree(&self) -> bool {
        self.by_norm == self.by_parts
    }
}

pub fn l1_feasibility(x: &[f64], tol: f64) -> L1Feasibility {
    let sum: f64 = x.iter().sum();
    let l1_norm: f64 = x.iter().map(|v| v.abs()).sum();
    let positive_part: f64 = x.iter().filter(|&&v| v >= 0.0).sum();
    let negative_part: f64 = x.iter().filter(|&&v| v <= 0.0).sum();
    L1Feasibility {
        sum,
        l1_norm,
        positive_part,
        negative_part,
        by_norm: sum.abs() <= tol && (l1_norm - 1.0).abs() <= tol,
        by_parts: (positive_part - 0.5).abs() <= tol && (negative_part + 0.5).abs() <= tol,
    }
}

/// `Σx = 0` and `‖x‖₁ = 1` within `tol`. Logs a warning when the
/// positive/negative-part form gives a different verdict, which can only
/// happen for vectors within a few `tol` of the boundary.
pub fn is_feasible_l1(x: &[f64], tol: f64) -> bool {
    let check = l1_feasibility(x, tol);
    if !check.forms_agree() {
        log::warn!(
            "l1 feasibility forms disagree at tol {tol:e}: sum {:e}, norm {}, parts {} / {}",
            check.sum,
            check.l1_norm,
            check.positive_part,
            check.negative_part
        );
    }
    check.by_norm
}

/// Exact version of the feasibility test, for two-valued cut vectors.
pub fn is_feasible_l1_exact(x: &[Rational]) -> bool {
    let sum = x.iter().fold(Rational::zero(), |a, v| a + v);
    let norm = x.iter().fold(Rational::zero(), |a, v| a + v.abs());
    let positive = x
        .iter()
        .filter(|v| !v.is_negative())
        .fold(Rational::zero(), |a, v| a + v);
    sum.is_zero() && norm == Rational::from_integer(1) && positive == Rational::new(1, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, random_connected, FamilySpec};
    use proptest::prelude::*;

    fn p4() -> Graph {
        generate(&FamilySpec::Path { n: 4 }).unwrap()
    }

    #[test]
    fn f1_path_examples() {
        assert_eq!(f1(&p4(), &[-0.5, 0.0, 0.0, 0.5]).unwrap(), 1.0);
        assert_eq!(f1(&p4(), &[-0.25, -0.25, 0.25, 0.25]).unwrap(), 0.5);
        assert_eq!(f1(&p4(), &[3.0; 4]).unwrap(), 0.0);
        assert!(matches!(
            f1(&p4(), &[1.0, 2.0]),
            Err(Error::LengthMismatch {
                expected: 4,
                actual: 2
            })
        ));
    }

    #[test]
    fn feasibility_examples() {
        assert!(is_feasible_l1(&[0.5, -0.5], 1e-12));
        let x2 = [0.25, 0.25, -0.25, -0.25];
        let check = l1_feasibility(&x2, 1e-12);
        assert!(check.by_norm && check.by_parts);
        assert_eq!(check.positive_part, 0.5);
        assert!(!is_feasible_l1(&[1.0, -1.0], 1e-12));
        assert!(!is_feasible_l1(&[0.5, 0.5], 1e-12));
    }

    #[test]
    fn exact_feasibility() {
        let x = [
            Rational::new(1, 4),
            Rational::new(1, 4),
            Rational::new(-1, 4),
            Rational::new(-1, 4),
        ];
        assert!(is_feasible_l1_exact(&x));
        assert_eq!(f1_exact(&p4(), &x).unwrap(), Rational::new(1, 2));
        assert!(!is_feasible_l1_exact(&[
            Rational::new(1, 1),
            Rational::new(-1, 1)
        ]));
    }

    #[test]
    fn normalization_per_regime() {
        let g = generate(&FamilySpec::Path { n: 2 }).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let v = SmoothingVector::new(&g, vec![s, -s], Regime::L2).unwrap();
        assert!(v.is_normalized(1e-12));
        assert!((v.objective - 2.0).abs() < 1e-12);
        let v = SmoothingVector::new(&g, vec![1.0, -1.0], Regime::Linf).unwrap();
        assert!(v.is_normalized(0.0));
        assert_eq!(v.objective, 2.0);
        let v = SmoothingVector::new(&g, vec![1.0, -1.0], Regime::L1).unwrap();
        assert!(!v.is_normalized(1e-9));
    }

    proptest! {
        #[test]
        fn f1_scales_with_abs_lambda(
            seed in any::<u64>(),
            xs in prop::collection::vec(-10.0f64..10.0, 8),
            lambda in -5.0f64..5.0,
        ) {
            let g = random_connected(8, 0.4, seed).unwrap();
            let scaled: Vec<f64> = xs.iter().map(|x| lambda * x).collect();
            let lhs = f1(&g, &scaled).unwrap();
            let rhs = lambda.abs() * f1(&g, &xs).unwrap();
            prop_assert!((lhs - rhs).abs() <= 1e-9 * (1.0 + rhs));
        }

        #[test]
        fn feasibility_forms_agree_on_projected_vectors(xs in prop::collection::vec(-1.0f64..1.0, 2..12)) {
            let mean = xs.iter().sum::<f64>() / xs.len() as f64;
            let centered: Vec<f64> = xs.iter().map(|x| x - mean).collect();
            let norm: f64 = centered.iter().map(|x| x.abs()).sum();
            prop_assume!(norm > 1e-6);
            let x: Vec<f64> = centered.iter().map(|v| v / norm).collect();
            let check = l1_feasibility(&x, 1e-9);
            prop_assert!(check.by_norm);
            prop_assert!(check.forms_agree());
        }
    }
}
