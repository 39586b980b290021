//! Export of the l1 smoothing problem as a linear program with
//! complementarity constraints, over variables `x1_j, x2_j >= 0` (positive and
//! negative parts of `x`) and free `y_ij` per edge:
//!
//! ```text
//! minimize   Σ y_ij
//!            x1_i - x2_i - x1_j + x2_j <= y_ij        (ij ∈ E)
//!           -x1_i + x2_i + x1_j - x2_j <= y_ij        (ij ∈ E)
//!            Σ x1_j = 1/2,  Σ x2_j = 1/2
//!            x1_j x2_j = 0                            (j < n)
//! ```
//!
//! The model is only rendered and checked here, never solved.

use std::fmt::Write as _;

use crate::graph::Graph;
use crate::rational::{ratio, to_f64, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub name: String,
    /// `(variable index, coefficient)`
    pub terms: Vec<(usize, i64)>,
    pub sense: Sense,
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementarityModel {
    n: usize,
    edges: Vec<(usize, usize)>,
    pub variables: Vec<String>,
    pub objective: Vec<usize>,
    pub constraints: Vec<LinearConstraint>,
    /// Index pairs `(x1_j, x2_j)` whose product must vanish.
    pub complementarity: Vec<(usize, usize)>,
    pub nonnegative: Vec<usize>,
    pub free: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModelCheck {
    pub objective: f64,
    pub violations: Vec<String>,
}

impl ModelCheck {
    pub fn feasible(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn export_complementarity_model(g: &Graph) -> ComplementarityModel {
    let n = g.n();
    let edges = g.edges().to_vec();
    let x1 = |j: usize| j;
    let x2 = |j: usize| n + j;
    let y = |e: usize| 2 * n + e;

    let mut variables: Vec<String> = (0..n).map(|j| format!("x1_{j}")).collect();
    variables.extend((0..n).map(|j| format!("x2_{j}")));
    variables.extend(edges.iter().map(|(i, j)| format!("y_{i}_{j}")));

    let mut constraints = Vec::with_capacity(2 * edges.len() + 2);
    for (e, &(i, j)) in edges.iter().enumerate() {
        for (suffix, sign) in [("a", 1), ("b", -1)] {
            constraints.push(LinearConstraint {
                name: format!("edge_{i}_{j}_{suffix}"),
                terms: vec![
                    (x1(i), sign),
                    (x2(i), -sign),
                    (x1(j), -sign),
                    (x2(j), sign),
                    (y(e), -1),
                ],
                sense: Sense::Le,
                rhs: ratio(0, 1),
            });
        }
    }
    for (name, offset) in [("sum_x1", 0), ("sum_x2", n)] {
        constraints.push(LinearConstraint {
            name: name.to_string(),
            terms: (0..n).map(|j| (offset + j, 1)).collect(),
            sense: Sense::Eq,
            rhs: ratio(1, 2),
        });
    }

    ComplementarityModel {
        n,
        objective: (0..edges.len()).map(y).collect(),
        complementarity: (0..n).map(|j| (x1(j), x2(j))).collect(),
        nonnegative: (0..2 * n).collect(),
        free: (0..edges.len()).map(y).collect(),
        edges,
        variables,
        constraints,
    }
}

fn linear_expr(names: &[String], terms: &[(usize, i64)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, &(var, coef)) in terms.iter().enumerate() {
        let sign = if coef < 0 { "-" } else { "+" };
        match (k, coef.abs()) {
            (0, _) if coef > 0 => {}
            (0, _) => out.push_str("- "),
            _ => {
                let _ = write!(out, " {sign} ");
            }
        }
        if coef.abs() != 1 {
            let _ = write!(out, "{} ", coef.abs());
        }
        out.push_str(&names[var]);
    }
    out
}

impl ComplementarityModel {
    pub fn inequality_count(&self) -> usize {
        self.constraints
            .iter()
            .filter(|c| c.sense == Sense::Le)
            .count()
    }

    pub fn equality_count(&self) -> usize {
        self.constraints
            .iter()
            .filter(|c| c.sense == Sense::Eq)
            .count()
    }

    /// Plain-text rendering; see FORMATS.md for the grammar.
    pub fn render(&self) -> String {
        let names = &self.variables;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# l1 graph smoothing model: n = {}, m = {}",
            self.n,
            self.edges.len()
        );
        out.push_str("VARIABLES\n");
        for name in names {
            let _ = writeln!(out, "{name}");
        }
        out.push_str("MINIMIZE\n");
        let objective: Vec<(usize, i64)> = self.objective.iter().map(|&v| (v, 1)).collect();
        let _ = writeln!(out, "obj: {}", linear_expr(names, &objective));
        out.push_str("SUBJECT_TO\n");
        for c in &self.constraints {
            let op = match c.sense {
                Sense::Le => "<=",
                Sense::Eq => "=",
            };
            let _ = writeln!(
                out,
                "{}: {} {op} {}",
                c.name,
                linear_expr(names, &c.terms),
                c.rhs
            );
        }
        out.push_str("COMPLEMENTARITY\n");
        for &(a, b) in &self.complementarity {
            let _ = writeln!(out, "{} * {} = 0", names[a], names[b]);
        }
        out.push_str("BOUNDS\n");
        for &v in &self.nonnegative {
            let _ = writeln!(out, "{} >= 0", names[v]);
        }
        for &v in &self.free {
            let _ = writeln!(out, "{} free", names[v]);
        }
        out.push_str("END\n");
        out
    }

    /// The natural assignment for a vertex vector: `x1 = x⁺`, `x2 = x⁻`,
    /// `y_ij = |x_i - x_j|`.
    pub fn assignment_from_vector(&self, x: &[f64]) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
        let x1 = x.iter().map(|v| v.max(0.0)).collect();
        let x2 = x.iter().map(|v| (-v).max(0.0)).collect();
        let y = self
            .edges
            .iter()
            .map(|&(i, j)| (x[i] - x[j]).abs())
            .collect();
        (x1, x2, y)
    }

    /// Evaluates every constraint, bound and complementarity pair at the
    /// given point, within `tol`.
    pub fn check(&self, x1: &[f64], x2: &[f64], y: &[f64], tol: f64) -> ModelCheck {
        let mut violations = Vec::new();
        if x1.len() != self.n || x2.len() != self.n || y.len() != self.edges.len() {
            violations.push(format!(
                "dimension mismatch: expected {} + {} + {} values",
                self.n,
                self.n,
                self.edges.len()
            ));
            return ModelCheck {
                objective: f64::NAN,
                violations,
            };
        }
        let values: Vec<f64> = x1.iter().chain(x2).chain(y).copied().collect();

        for c in &self.constraints {
            let lhs: f64 = c.terms.iter().map(|&(v, k)| k as f64 * values[v]).sum();
            let rhs = to_f64(&c.rhs);
            let ok = match c.sense {
                Sense::Le => lhs <= rhs + tol,
                Sense::Eq => (lhs - rhs).abs() <= tol,
            };
            if !ok {
                violations.push(format!("{}: lhs {lhs} vs rhs {rhs}", c.name));
            }
        }
        for &v in &self.nonnegative {
            if values[v] < -tol {
                violations.push(format!("{} = {} is negative", self.variables[v], values[v]));
            }
        }
        for &(a, b) in &self.complementarity {
            if (values[a] * values[b]).abs() > tol {
                violations.push(format!(
                    "complementarity {} * {} = {}",
                    self.variables[a],
                    self.variables[b],
                    values[a] * values[b]
                ));
            }
        }
        ModelCheck {
            objective: self.objective.iter().map(|&v| values[v]).sum(),
            violations,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, random_connected, FamilySpec};
    use crate::l1::b_exact;

    #[test]
    fn p2_counts() {
        let g = generate(&FamilySpec::Path { n: 2 }).unwrap();
        let model = export_complementarity_model(&g);
        assert_eq!(model.inequality_count(), 2);
        assert_eq!(model.equality_count(), 2);
        assert_eq!(model.complementarity.len(), 2);
        assert_eq!(
            model.variables,
            vec!["x1_0", "x1_1", "x2_0", "x2_1", "y_0_1"]
        );
    }

    #[test]
    fn counts_follow_graph_size() {
        for seed in 0..10 {
            let g = random_connected(7, 0.4, seed).unwrap();
            let model = export_complementarity_model(&g);
            assert_eq!(model.inequality_count(), 2 * g.m());
            assert_eq!(model.equality_count(), 2);
            assert_eq!(model.complementarity.len(), g.n());
            assert_eq!(model.nonnegative.len(), 2 * g.n());
            assert_eq!(model.free.len(), g.m());
        }
    }

    #[test]
    fn optimal_split_is_feasible() {
        let g = generate(&FamilySpec::Path { n: 4 }).unwrap();
        let model = export_complementarity_model(&g);
        let result = b_exact(&g, 26).unwrap();
        let (x1, x2, y) = model.assignment_from_vector(&result.vector.values);
        let check = model.check(&x1, &x2, &y, 1e-12);
        assert!(check.feasible(), "{:?}", check.violations);
        assert_eq!(check.objective, 0.5);
    }

    #[test]
    fn overlapping_support_flagged() {
        let g = generate(&FamilySpec::Path { n: 3 }).unwrap();
        let model = export_complementarity_model(&g);
        let x1 = vec![0.25, 0.25, 0.0];
        let x2 = vec![0.25, 0.0, 0.25];
        let y = vec![1.0, 1.0];
        let check = model.check(&x1, &x2, &y, 1e-12);
        assert!(!check.feasible());
        assert!(check
            .violations
            .iter()
            .any(|v| v.starts_with("complementarity x1_0 * x2_0")));
        assert_eq!(check.violations.len(), 1);
    }

    #[test]
    fn violated_sums_and_edges_flagged() {
        let g = generate(&FamilySpec::Path { n: 2 }).unwrap();
        let model = export_complementarity_model(&g);
        let check = model.check(&[1.0, 0.0], &[0.0, 0.5], &[0.0], 1e-12);
        let names: Vec<&str> = check
            .violations
            .iter()
            .map(|v| v.split(':').next().unwrap())
            .collect();
        assert_eq!(names, vec!["edge_0_1_a", "sum_x1"]);
        assert!(!model.check(&[0.5], &[0.5], &[0.0], 1e-12).feasible());
    }

    #[test]
    fn rendering() {
        let g = generate(&FamilySpec::Path { n: 2 }).unwrap();
        let text = export_complementarity_model(&g).render();
        let expected = "\
# l1 graph smoothing model: n = 2, m = 1
VARIABLES
x1_0
x1_1
x2_0
x2_1
y_0_1
MINIMIZE
obj: y_0_1
SUBJECT_TO
edge_0_1_a: x1_0 - x2_0 - x1_1 + x2_1 - y_0_1 <= 0
edge_0_1_b: - x1_0 + x2_0 + x1_1 - x2_1 - y_0_1 <= 0
sum_x1: x1_0 + x1_1 = 1/2
sum_x2: x2_0 + x2_1 = 1/2
COMPLEMENTARITY
x1_0 * x2_0 = 0
x1_1 * x2_1 = 0
BOUNDS
x1_0 >= 0
x1_1 >= 0
x2_0 >= 0
x2_1 >= 0
y_0_1 free
END
";
        assert_eq!(text, expected);
    }
}
