//! Inequalities tying `b(G)` and edge densities to the Laplacian spectrum,
//! degrees and minimum cuts, evaluated on a concrete graph.
//!
//! For a connected graph of order `n` with `m` edges, algebraic connectivity
//! `a`, largest Laplacian eigenvalue `λ₁`, and degrees in `[d_min, d_max]`:
//!
//! ```text
//! a/n <= ρ(S) <= λ₁/n                          (every nonempty proper S)
//! min ρ <= (2/n) √(a (2 d_max - a))            (m >= 2)
//! a/2 <= b <= λ₁/2
//! min ξ <= b <= n d_min / (2(n - 1))
//! b <= n mc / (2 s (n - s))                    (s = size of a minimum-cut side)
//! b <= √(m a)
//! ```

use serde::Serialize;

use crate::cut::{mask_boundary, Cut};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::l1::{b_exact, heuristic_b_upper, min_cut, L1Result};
use crate::rational::{ratio, to_f64, Rational, RationalValue};
use crate::spectral::{spectral_analysis, SpectralOptions, SpectralResult};
use crate::vertex_set::low_bits;

/// Largest order for the brute-force `ξ` minima.
pub const XI_CAP: usize = 20;
/// Tolerance for records that involve eigenvalues.
pub const SPECTRAL_TOL: f64 = 1e-7;

fn xi_minimum(g: &Graph, max_size: usize) -> Result<Rational> {
    let n = g.n();
    if n > XI_CAP {
        return Err(Error::CapExceeded { n, cap: XI_CAP });
    }
    if n < 2 {
        return Err(Error::TooSmall { n, required: 2 });
    }
    g.require_connected()?;
    let adj = g.masks().expect("n <= 64");
    let mut best: Option<Rational> = None;
    for set in 1..low_bits(n) {
        let size = set.count_ones() as usize;
        if size > max_size {
            continue;
        }
        let xi = ratio(mask_boundary(adj, set) as i64, size as i64);
        if best.is_none_or(|b| xi < b) {
            best = Some(xi);
        }
    }
    Ok(best.expect("some set has size 1"))
}

/// `min ξ(S)` over every nonempty proper `S`.
pub fn xi_min(g: &Graph) -> Result<Rational> {
    xi_minimum(g, g.n().saturating_sub(1))
}

/// The isoperimetric number: `min ξ(S)` over nonempty `S` with `|S| <= ⌊n/2⌋`.
pub fn isoperimetric(g: &Graph) -> Result<Rational> {
    xi_minimum(g, g.n() / 2)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundRecord {
    pub name: &'static str,
    /// The inequality being checked, `lhs <= rhs`.
    pub statement: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    /// Exact sides where both are rational.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs_exact: Option<RationalValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs_exact: Option<RationalValue>,
    /// `None` when the record does not apply to this graph.
    pub holds: Option<bool>,
    /// `rhs - lhs`
    pub slack: f64,
    /// Evaluated with an upper estimate of `b` instead of its exact value.
    pub partial: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl BoundRecord {
    fn real(name: &'static str, statement: &'static str, lhs: f64, rhs: f64, tol: f64) -> Self {
        BoundRecord {
            name,
            statement,
            lhs,
            rhs,
            lhs_exact: None,
            rhs_exact: None,
            holds: Some(lhs <= rhs + tol),
            slack: rhs - lhs,
            partial: false,
            note: None,
        }
    }

    fn exact(name: &'static str, statement: &'static str, lhs: Rational, rhs: Rational) -> Self {
        BoundRecord {
            name,
            statement,
            lhs: to_f64(&lhs),
            rhs: to_f64(&rhs),
            lhs_exact: Some(lhs.into()),
            rhs_exact: Some(rhs.into()),
            holds: Some(lhs <= rhs),
            slack: to_f64(&(rhs - lhs)),
            partial: false,
            note: None,
        }
    }

    fn partial(mut self) -> Self {
        self.partial = true;
        self.note = Some(
            "b replaced by the minimum-cut upper estimate; not a verification of the bound".into(),
        );
        self
    }

    fn not_applicable(mut self, why: &str) -> Self {
        self.holds = None;
        self.note = Some(why.to_string());
        self
    }

    pub fn failed(&self) -> bool {
        self.holds == Some(false)
    }
}

/// `b` itself, or an interval when the graph is above the enumeration cap.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum BValue {
    Exact {
        value: RationalValue,
        witness: Vec<usize>,
    },
    Interval {
        /// Largest available lower bound: `a/2`, or `min ξ` when computed.
        lower: f64,
        /// `(n/2) ρ` at a minimum-cut witness.
        upper: RationalValue,
        witness: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub m: usize,
    pub d_min: usize,
    pub d_max: usize,
    pub a: f64,
    pub lambda_max: f64,
    pub b: BValue,
    /// Over every nonempty proper set; `None` above the brute-force cap.
    pub xi_min: Option<RationalValue>,
    /// Over sets of at most half the vertices; `None` above the brute-force cap.
    pub i_g: Option<RationalValue>,
    pub mc: usize,
    /// Size of the minimum-cut side used in the min-cut bound.
    pub mc_side: usize,
    pub records: Vec<BoundRecord>,
    pub notes: Vec<String>,
}

impl BoundsReport {
    pub fn all_hold(&self) -> bool {
        !self.records.iter().any(BoundRecord::failed)
    }

    pub fn record(&self, name: &str) -> Option<&BoundRecord> {
        self.records.iter().find(|r| r.name == name)
    }
}

/// Full report, computing the spectrum and, when `n <= cap`, the exact `b`.
pub fn bounds_report(g: &Graph, cap: usize) -> Result<BoundsReport> {
    let spectral = spectral_analysis(g, SpectralOptions::default())?;
    let exact = if g.n() <= cap {
        Some(b_exact(g, cap)?)
    } else {
        None
    };
    bounds_report_from(g, &spectral, exact.as_ref(), SPECTRAL_TOL)
}

/// Report from precomputed spectral and (optional) exact-`b` results.
pub fn bounds_report_from(
    g: &Graph,
    spectral: &SpectralResult,
    exact: Option<&L1Result>,
    tol: f64,
) -> Result<BoundsReport> {
    g.require_connected()?;
    let n = g.n();
    let m = g.m();
    let nf = n as f64;
    let (a, lambda) = (spectral.a, spectral.lambda_max);
    let degrees = g.degree_stats();
    let mc = min_cut(g)?;
    let s = mc.witness.len();
    let mut notes = Vec::new();

    let (xi, iso) = if n <= XI_CAP {
        (Some(xi_min(g)?), Some(isoperimetric(g)?))
    } else {
        notes.push(format!(
            "min ξ and i(G) need n <= {XI_CAP}; their records are skipped"
        ));
        (None, None)
    };
    notes.push(
        "the lower bound min ξ <= b minimises over every nonempty proper S; i_g restricts to |S| <= n/2"
            .to_string(),
    );

    // the cut used for the density records and the value standing in for b
    let (witness, b, partial): (Cut, Rational, bool) = match exact {
        Some(r) => (r.sparsest.clone(), r.b, false),
        None => {
            let (upper, c) = heuristic_b_upper(g)?;
            notes.push(
                "exact b unavailable above the enumeration cap; b-records use an upper estimate"
                    .into(),
            );
            (c, upper, true)
        }
    };
    let bf = to_f64(&b);
    let rho = to_f64(&witness.density);
    let mark = |r: BoundRecord| if partial { r.partial() } else { r };

    let mut records = vec![
        BoundRecord::real("density_spectral_lower", "a/n <= ρ(S)", a / nf, rho, tol),
        BoundRecord::real(
            "density_spectral_upper",
            "ρ(S) <= λ₁/n",
            rho,
            lambda / nf,
            tol,
        ),
    ];

    let d_max = degrees.max as f64;
    let cheeger_rhs = (2.0 / nf) * (a * (2.0 * d_max - a)).max(0.0).sqrt();
    let cheeger = BoundRecord::real(
        "min_density_upper",
        "min ρ <= (2/n) √(a (2 d_max - a))",
        rho,
        cheeger_rhs,
        tol,
    );
    records.push(if m < 2 {
        cheeger.not_applicable("needs at least two edges")
    } else {
        mark(cheeger)
    });

    if !partial {
        records.push(BoundRecord::real(
            "b_spectral_lower",
            "a/2 <= b",
            a / 2.0,
            bf,
            tol,
        ));
    }
    records.push(mark(BoundRecord::real(
        "b_spectral_upper",
        "b <= λ₁/2",
        bf,
        lambda / 2.0,
        tol,
    )));

    if let (Some(xi), false) = (xi, partial) {
        records.push(BoundRecord::exact("b_xi_lower", "min ξ <= b", xi, b));
    }
    let degree_rhs = ratio((n * degrees.min) as i64, 2 * (n as i64 - 1));
    records.push(mark(BoundRecord::exact(
        "b_degree_upper",
        "b <= n d_min / (2(n-1))",
        b,
        degree_rhs,
    )));

    let mincut_rhs = ratio((n * mc.size) as i64, 2 * (s * (n - s)) as i64);
    records.push(mark(BoundRecord::exact(
        "b_mincut_upper",
        "b <= n mc / (2 s (n-s))",
        b,
        mincut_rhs,
    )));

    records.push(mark(BoundRecord::real(
        "b_sqrt_upper",
        "b <= √(m a)",
        bf,
        (m as f64 * a).sqrt(),
        tol,
    )));

    let b = match exact {
        Some(r) => BValue::Exact {
            value: r.b.into(),
            witness: r.sparsest.set.to_vec(),
        },
        None => BValue::Interval {
            lower: xi.map_or(a / 2.0, |x| to_f64(&x).max(a / 2.0)),
            upper: b.into(),
            witness: witness.set.to_vec(),
        },
    };
    Ok(BoundsReport {
        n,
        m,
        d_min: degrees.min,
        d_max: degrees.max,
        a,
        lambda_max: lambda,
        b,
        xi_min: xi.map(Into::into),
        i_g: iso.map(Into::into),
        mc: mc.size,
        mc_side: s,
        records,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cut::cut;
    use crate::families::{generate, random_connected, FamilySpec};
    use crate::l1::DEFAULT_CAP;
    use crate::vertex_set::VertexSet;
    use proptest::prelude::*;

    fn family(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    #[test]
    fn xi_examples() {
        assert_eq!(
            isoperimetric(&family(FamilySpec::Cycle { n: 6 })).unwrap(),
            ratio(2, 3)
        );
        assert_eq!(
            xi_min(&family(FamilySpec::Star { n: 5 })).unwrap(),
            ratio(1, 4)
        );
        assert_eq!(
            isoperimetric(&family(FamilySpec::Star { n: 5 })).unwrap(),
            ratio(1, 1)
        );
        assert_eq!(
            isoperimetric(&family(FamilySpec::Complete { n: 4 })).unwrap(),
            ratio(2, 1)
        );
        assert_eq!(
            xi_min(&family(FamilySpec::Path { n: 21 })),
            Err(Error::CapExceeded { n: 21, cap: XI_CAP })
        );
    }

    #[test]
    fn p4_report() {
        let r = bounds_report(&family(FamilySpec::Path { n: 4 }), DEFAULT_CAP).unwrap();
        assert!(r.all_hold());
        let sqrt = r.record("b_sqrt_upper").unwrap();
        assert_eq!(sqrt.lhs, 0.5);
        assert!((sqrt.rhs - 1.3256).abs() < 1e-4);
        assert_eq!(r.records.len(), 9);
    }

    #[test]
    fn star_degree_bound_is_tight() {
        let r = bounds_report(&family(FamilySpec::Star { n: 5 }), DEFAULT_CAP).unwrap();
        let rec = r.record("b_degree_upper").unwrap();
        assert_eq!(rec.rhs_exact.as_ref().unwrap().value, "5/8");
        assert_eq!(rec.slack, 0.0);
        assert_eq!(rec.holds, Some(true));
    }

    #[test]
    fn complete_graph_lower_bound_is_tight() {
        for n in 3..=10 {
            let r = bounds_report(&family(FamilySpec::Complete { n }), DEFAULT_CAP).unwrap();
            let rec = r.record("b_spectral_lower").unwrap();
            assert!((rec.lhs - rec.rhs).abs() <= SPECTRAL_TOL, "n = {n}");
            assert!(r.all_hold());
        }
    }

    #[test]
    fn single_edge_disables_cheeger_record() {
        let r = bounds_report(&family(FamilySpec::Path { n: 2 }), DEFAULT_CAP).unwrap();
        let rec = r.record("min_density_upper").unwrap();
        assert_eq!(rec.holds, None);
        assert!(rec.note.is_some());
        assert!(r.all_hold());
    }

    #[test]
    fn above_cap_is_partial() {
        let g = family(FamilySpec::Path { n: 8 });
        let r = bounds_report(&g, 6).unwrap();
        assert!(matches!(r.b, BValue::Interval { .. }));
        assert!(r.record("b_spectral_lower").is_none());
        assert!(r.record("b_xi_lower").is_none());
        assert!(r.record("b_sqrt_upper").unwrap().partial);
        assert!(!r.record("density_spectral_lower").unwrap().partial);
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(bounds_report(&g, DEFAULT_CAP), Err(Error::Disconnected));
    }

    #[test]
    fn all_families_satisfy_every_bound() {
        let mut specs = vec![FamilySpec::Cube];
        for n in 2..=14 {
            specs.push(FamilySpec::Path { n });
            specs.push(FamilySpec::Star { n });
            specs.push(FamilySpec::Complete { n });
        }
        for n in 3..=14 {
            specs.push(FamilySpec::Cycle { n });
        }
        for n in 4..=14 {
            specs.push(FamilySpec::Wheel { n });
        }
        for spec in specs {
            let r = bounds_report(&family(spec.clone()), DEFAULT_CAP).unwrap();
            assert!(r.all_hold(), "{spec}: {:?}", r.records);
        }
    }

    #[test]
    fn density_bounds_hold_for_every_set() {
        for seed in 0..30 {
            let n = 2 + seed as usize % 9;
            let g = random_connected(n, 0.3, seed).unwrap();
            let s = spectral_analysis(&g, SpectralOptions::default()).unwrap();
            for mask in 1..low_bits(n) {
                let c = cut(&g, &VertexSet::from_mask(n, mask)).unwrap();
                let rho = to_f64(&c.density);
                assert!(s.a / n as f64 <= rho + SPECTRAL_TOL);
                assert!(rho <= s.lambda_max / n as f64 + SPECTRAL_TOL);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(150))]

        #[test]
        fn random_graphs_satisfy_every_bound(n in 2usize..=12, p in 0.0f64..0.7, seed in any::<u64>()) {
            let g = random_connected(n, p, seed).unwrap();
            let r = bounds_report(&g, DEFAULT_CAP).unwrap();
            prop_assert!(r.all_hold(), "{:?}", r.records);
            let xi = r.xi_min.as_ref().unwrap().float;
            let iso = r.i_g.as_ref().unwrap().float;
            prop_assert!(xi <= iso);
        }
    }
}
