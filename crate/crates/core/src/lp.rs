//! Dense two-phase primal simplex with Bland's rule.
//!
//! Problems are given as
//!
//! ```text
//! minimize c·z  subject to  A z <= b,  E z = f,  l <= z <= u
//! ```
//!
//! with each bound optionally infinite. The solver shifts bounded variables to
//! start at zero, mirrors variables bounded only above, splits free variables
//! into a difference of nonnegative parts, adds a slack per inequality and an
//! artificial per row, and runs phase 1 on the artificials before phase 2 on
//! `c`. Bland's rule (lowest eligible index enters, lowest basic index leaves
//! on ratio ties) rules out cycling.

use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-9;

/// Pivots allowed per phase before the solve is declared a breakdown.
const MAX_PIVOTS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Default)]
pub struct LinearProgram {
    pub objective: Vec<f64>,
    /// `(row, rhs)` meaning `row · z <= rhs`.
    pub inequalities: Vec<(Vec<f64>, f64)>,
    /// `(row, rhs)` meaning `row · z = rhs`.
    pub equalities: Vec<(Vec<f64>, f64)>,
    /// `(lower, upper)` per variable; `None` is infinite.
    pub bounds: Vec<(Option<f64>, Option<f64>)>,
}

impl LinearProgram {
    /// A program over `n` free variables with no constraints.
    pub fn new(objective: Vec<f64>) -> Self {
        let n = objective.len();
        LinearProgram {
            objective,
            inequalities: Vec::new(),
            equalities: Vec::new(),
            bounds: vec![(None, None); n],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.num_vars();
        let rows = self.inequalities.iter().chain(&self.equalities);
        for (k, (row, rhs)) in rows.enumerate() {
            if row.len() != n {
                return Err(Error::Lp(format!(
                    "dimension mismatch: constraint {k} has {} coefficients, expected {n}",
                    row.len()
                )));
            }
            if !rhs.is_finite() || row.iter().any(|v| !v.is_finite()) {
                return Err(Error::Lp(format!("non-finite value in constraint {k}")));
            }
        }
        if self.bounds.len() != n {
            return Err(Error::Lp(format!(
                "dimension mismatch: {} bounds for {n} variables",
                self.bounds.len()
            )));
        }
        if self.objective.iter().any(|v| !v.is_finite()) {
            return Err(Error::Lp("non-finite objective coefficient".to_string()));
        }
        for (j, &(lo, hi)) in self.bounds.iter().enumerate() {
            if lo.is_some_and(|v| v.is_nan() || v == f64::INFINITY)
                || hi.is_some_and(|v| v.is_nan() || v == f64::NEG_INFINITY)
            {
                return Err(Error::Lp(format!("invalid bound on variable {j}")));
            }
        }
        Ok(())
    }

    /// Largest violation of any constraint or bound at `z`.
    pub fn max_violation(&self, z: &[f64]) -> f64 {
        let dot = |row: &[f64]| row.iter().zip(z).map(|(a, b)| a * b).sum::<f64>();
        let ineq = self.inequalities.iter().map(|(row, rhs)| dot(row) - rhs);
        let eq = self
            .equalities
            .iter()
            .map(|(row, rhs)| (dot(row) - rhs).abs());
        let bounds = self
            .bounds
            .iter()
            .zip(z)
            .flat_map(|(&(lo, hi), &v)| [lo.map_or(0.0, |l| l - v), hi.map_or(0.0, |u| v - u)]);
        ineq.chain(eq).chain(bounds).fold(0.0, f64::max)
    }

    pub fn objective_at(&self, z: &[f64]) -> f64 {
        self.objective.iter().zip(z).map(|(c, v)| c * v).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
    /// Pivot limit hit, or the final point failed its feasibility check.
    Breakdown,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LPSolution {
    pub status: LpStatus,
    /// The optimum when `status` is `Optimal`, empty otherwise.
    pub z: Vec<f64>,
    pub objective_value: f64,
}

impl LPSolution {
    fn without_point(status: LpStatus) -> Self {
        let objective_value = match status {
            LpStatus::Unbounded => f64::NEG_INFINITY,
            _ => f64::NAN,
        };
        LPSolution {
            status,
            z: Vec::new(),
            objective_value,
        }
    }
}

/// How an original variable is recovered from standard-form columns:
/// `z = offset + sign * s[col] (- s[neg])`.
#[derive(Debug, Clone, Copy)]
struct Substitution {
    offset: f64,
    col: usize,
    sign: f64,
    neg: Option<usize>,
}

struct Tableau {
    /// Constraint rows, each `cols` coefficients followed by the rhs.
    rows: Vec<Vec<f64>>,
    basis: Vec<usize>,
    cols: usize,
}

enum Outcome {
    Optimal,
    Unbounded,
    PivotLimit,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c];
        for v in self.rows[r].iter_mut() {
            *v /= p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[c];
            if f != 0.0 {
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= f * pv;
                }
                row[c] = 0.0;
            }
        }
        self.basis[r] = c;
    }

    fn rhs(&self, r: usize) -> f64 {
        self.rows[r][self.cols]
    }

    /// Primal simplex on `cost` over the columns with `allowed[j]`.
    fn run(&mut self, cost: &[f64], allowed: &[bool], tol: f64) -> Outcome {
        for _ in 0..MAX_PIVOTS {
            let entering = (0..self.cols).find(|&j| {
                allowed[j] && !self.basis.contains(&j) && {
                    let reduced = cost[j]
                        - self
                            .rows
                            .iter()
                            .zip(&self.basis)
                            .map(|(row, &b)| cost[b] * row[j])
                            .sum::<f64>();
                    reduced < -tol
                }
            });
            let Some(c) = entering else {
                return Outcome::Optimal;
            };
            let mut leaving: Option<(usize, f64)> = None;
            for r in 0..self.rows.len() {
                let a = self.rows[r][c];
                if a <= tol {
                    continue;
                }
                let ratio = self.rhs(r) / a;
                let better = match leaving {
                    None => true,
                    Some((best, best_ratio)) => {
                        ratio < best_ratio - tol
                            || (ratio <= best_ratio + tol && self.basis[r] < self.basis[best])
                    }
                };
                if better {
                    leaving = Some((r, ratio));
                }
            }
            let Some((r, _)) = leaving else {
                return Outcome::Unbounded;
            };
            self.pivot(r, c);
        }
        Outcome::PivotLimit
    }
}

pub fn solve_lp(lp: &LinearProgram, tol: f64) -> Result<LPSolution> {
    lp.validate()?;
    let n = lp.num_vars();

    // substitute every original variable by nonnegative columns
    let mut subs = Vec::with_capacity(n);
    let mut cols = 0;
    let mut upper_rows: Vec<(usize, f64)> = Vec::new();
    for &(lo, hi) in &lp.bounds {
        let lo = lo.filter(|v| v.is_finite());
        let hi = hi.filter(|v| v.is_finite());
        let sub = match (lo, hi) {
            (Some(l), hi) => {
                if let Some(u) = hi {
                    if u < l - tol {
                        return Ok(LPSolution::without_point(LpStatus::Infeasible));
                    }
                    upper_rows.push((cols, (u - l).max(0.0)));
                }
                Substitution {
                    offset: l,
                    col: cols,
                    sign: 1.0,
                    neg: None,
                }
            }
            (None, Some(u)) => Substitution {
                offset: u,
                col: cols,
                sign: -1.0,
                neg: None,
            },
            (None, None) => {
                cols += 1;
                Substitution {
                    offset: 0.0,
                    col: cols - 1,
                    sign: 1.0,
                    neg: Some(cols),
                }
            }
        };
        subs.push(sub);
        cols += 1;
    }
    let structural = cols;

    // rows over structural columns: (coefficients, rhs, is_equality)
    let expand = |row: &[f64], rhs: f64| {
        let mut out = vec![0.0; structural];
        let mut rhs = rhs;
        for (a, s) in row.iter().zip(&subs) {
            rhs -= a * s.offset;
            out[s.col] += a * s.sign;
            if let Some(neg) = s.neg {
                out[neg] -= a;
            }
        }
        (out, rhs)
    };
    let mut rows: Vec<(Vec<f64>, f64, bool)> = Vec::new();
    for (row, rhs) in &lp.inequalities {
        let (r, b) = expand(row, *rhs);
        rows.push((r, b, false));
    }
    for &(col, width) in &upper_rows {
        let mut r = vec![0.0; structural];
        r[col] = 1.0;
        rows.push((r, width, false));
    }
    for (row, rhs) in &lp.equalities {
        let (r, b) = expand(row, *rhs);
        rows.push((r, b, true));
    }

    // slack columns, then one artificial per row
    let slacks = rows.iter().filter(|r| !r.2).count();
    let first_artificial = structural + slacks;
    let total = first_artificial + rows.len();
    let mut tableau = Tableau {
        rows: Vec::with_capacity(rows.len()),
        basis: Vec::with_capacity(rows.len()),
        cols: total,
    };
    let mut slack = structural;
    for (i, (coeffs, rhs, is_eq)) in rows.into_iter().enumerate() {
        let mut row = vec![0.0; total + 1];
        row[..structural].copy_from_slice(&coeffs);
        if !is_eq {
            row[slack] = 1.0;
            slack += 1;
        }
        row[total] = rhs;
        if rhs < 0.0 {
            for v in row.iter_mut() {
                *v = -*v;
            }
        }
        row[first_artificial + i] = 1.0;
        tableau.rows.push(row);
        tableau.basis.push(first_artificial + i);
    }

    // phase 1
    let mut cost = vec![0.0; total];
    for c in cost.iter_mut().skip(first_artificial) {
        *c = 1.0;
    }
    let everything = vec![true; total];
    match tableau.run(&cost, &everything, tol) {
        Outcome::Optimal => {}
        Outcome::PivotLimit => return Ok(LPSolution::without_point(LpStatus::Breakdown)),
        Outcome::Unbounded => unreachable!("phase 1 is bounded below by zero"),
    }
    let infeasibility: f64 = (0..tableau.rows.len())
        .filter(|&r| tableau.basis[r] >= first_artificial)
        .map(|r| tableau.rhs(r))
        .sum();
    let scale = 1.0
        + tableau
            .rows
            .iter()
            .map(|r| r[total].abs())
            .fold(0.0, f64::max);
    if infeasibility > tol.sqrt() * scale {
        return Ok(LPSolution::without_point(LpStatus::Infeasible));
    }

    // drive artificials out of the basis; rows where that is impossible are redundant
    let mut r = 0;
    while r < tableau.rows.len() {
        if tableau.basis[r] >= first_artificial {
            let replacement = (0..first_artificial).find(|&j| tableau.rows[r][j].abs() > tol);
            match replacement {
                Some(c) => tableau.pivot(r, c),
                None => {
                    tableau.rows.remove(r);
                    tableau.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }

    // phase 2
    let mut cost = vec![0.0; total];
    for (c, s) in lp.objective.iter().zip(&subs) {
        cost[s.col] += c * s.sign;
        if let Some(neg) = s.neg {
            cost[neg] -= c;
        }
    }
    let allowed: Vec<bool> = (0..total).map(|j| j < first_artificial).collect();
    match tableau.run(&cost, &allowed, tol) {
        Outcome::Optimal => {}
        Outcome::Unbounded => return Ok(LPSolution::without_point(LpStatus::Unbounded)),
        Outcome::PivotLimit => return Ok(LPSolution::without_point(LpStatus::Breakdown)),
    }

    let mut values = vec![0.0; total];
    for (r, &b) in tableau.basis.iter().enumerate() {
        values[b] = tableau.rhs(r).max(0.0);
    }
    let z: Vec<f64> = subs
        .iter()
        .map(|s| s.offset + s.sign * values[s.col] - s.neg.map_or(0.0, |c| values[c]))
        .collect();
    if lp.max_violation(&z) > tol.sqrt() * scale {
        log::warn!(
            "simplex optimum violates its constraints by {:e}",
            lp.max_violation(&z)
        );
        return Ok(LPSolution::without_point(LpStatus::Breakdown));
    }
    Ok(LPSolution {
        status: LpStatus::Optimal,
        objective_value: lp.objective_at(&z),
        z,
    })
}
