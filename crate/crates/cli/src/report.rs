//! JSON report types and the per-graph computation cache behind them.

use std::cell::OnceCell;
use std::collections::BTreeMap;

use clap::ValueEnum;
use serde::Serialize;
use smoothcut::bounds::{bounds_report_from, BoundsReport, SPECTRAL_TOL};
use smoothcut::cut::{cut, Cut};
use smoothcut::l1::{b_exact, heuristic_b_upper, L1Result};
use smoothcut::linf::gamma;
use smoothcut::spectral::{spectral_analysis, SpectralOptions, SpectralResult};
use smoothcut::{Error, Graph, RationalValue, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Sparsest cut (exact b witness).
    L1,
    /// Sign pattern of the Fiedler vector.
    L2,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::L1 => "l1",
            Method::L2 => "l2",
        }
    }
}

#[derive(Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
}

#[derive(Serialize)]
pub struct AReport {
    pub value: f64,
    pub lambda_max: f64,
    pub fiedler: Vec<f64>,
    pub bisection: Vec<usize>,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum BReport {
    Exact {
        value: RationalValue,
        witness: Vec<usize>,
        cut_size: usize,
        density: RationalValue,
        /// The optimal two-valued vector, entries as "p/q".
        vector: Vec<String>,
        enumerated: u64,
    },
    /// Upper estimate from a minimum cut, used above the cap with --heuristic.
    Heuristic {
        upper: RationalValue,
        witness: Vec<usize>,
        cut_size: usize,
        density: RationalValue,
    },
}

#[derive(Serialize)]
pub struct GammaReport {
    pub value: f64,
    pub argmin_k: usize,
    pub x: Vec<f64>,
}

#[derive(Serialize)]
pub struct ComputeReport {
    pub graph: GraphSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<AReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<BReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<GammaReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

impl ComputeReport {
    pub fn new(g: &Graph) -> Self {
        ComputeReport {
            graph: GraphSummary { n: g.n(), m: g.m() },
            a: None,
            b: None,
            gamma: None,
            bounds: None,
            timings_ms: None,
        }
    }
}

#[derive(Serialize)]
pub struct PartitionSummary {
    pub method: &'static str,
    pub side: Vec<usize>,
    pub complement: Vec<usize>,
    pub sizes: [usize; 2],
    pub cut_size: usize,
    pub density: RationalValue,
    /// Both sides induce connected subgraphs.
    pub parts_connected: bool,
    /// The l1 side is an exact sparsest cut (always false for l2).
    pub exact: bool,
}

#[derive(Serialize)]
pub struct Comparison {
    pub graph: GraphSummary,
    pub l1: PartitionSummary,
    pub l2: PartitionSummary,
    /// density(l1) <= density(l2)
    pub l1_not_worse: bool,
    pub equal_density: bool,
}

pub struct PartitionSide<'g> {
    g: &'g Graph,
    method: Method,
    pub cut: Cut,
    exact: bool,
}

impl PartitionSide<'_> {
    pub fn summary(&self) -> PartitionSummary {
        let complement = self.cut.set.complement();
        PartitionSummary {
            method: self.method.name(),
            side: self.cut.set.to_vec(),
            complement: complement.to_vec(),
            sizes: [self.cut.size(), self.cut.complement_size()],
            cut_size: self.cut.boundary_size,
            density: self.cut.density.into(),
            parts_connected: self.g.induced_connected(&self.cut.set).unwrap_or(false)
                && self.g.induced_connected(&complement).unwrap_or(false),
            exact: self.exact,
        }
    }
}

/// Computes spectral and l1 results at most once per graph.
pub struct Analysis<'g> {
    g: &'g Graph,
    cap: usize,
    heuristic: bool,
    options: SpectralOptions,
    spectral: OnceCell<SpectralResult>,
    exact: OnceCell<Option<L1Result>>,
}

impl<'g> Analysis<'g> {
    pub fn new(g: &'g Graph, cap: usize, heuristic: bool, options: SpectralOptions) -> Self {
        Analysis {
            g,
            cap,
            heuristic,
            options,
            spectral: OnceCell::new(),
            exact: OnceCell::new(),
        }
    }

    fn spectral(&self) -> Result<&SpectralResult> {
        if let Some(s) = self.spectral.get() {
            return Ok(s);
        }
        let s = spectral_analysis(self.g, self.options)?;
        Ok(self.spectral.get_or_init(|| s))
    }

    /// The exact result, or `None` above the cap when the heuristic is allowed.
    fn exact(&self) -> Result<Option<&L1Result>> {
        if let Some(r) = self.exact.get() {
            return Ok(r.as_ref());
        }
        self.g.require_connected()?;
        let r = if self.g.n() <= self.cap {
            Some(b_exact(self.g, self.cap)?)
        } else if self.heuristic {
            None
        } else {
            return Err(Error::CapExceeded {
                n: self.g.n(),
                cap: self.cap,
            });
        };
        Ok(self.exact.get_or_init(|| r).as_ref())
    }

    pub fn a_report(&self) -> Result<AReport> {
        let s = self.spectral()?;
        Ok(AReport {
            value: s.a,
            lambda_max: s.lambda_max,
            fiedler: s.fiedler.values.clone(),
            bisection: s.bisection.to_vec(),
        })
    }

    pub fn b_report(&self) -> Result<BReport> {
        Ok(match self.exact()? {
            Some(r) => BReport::Exact {
                value: r.b.into(),
                witness: r.sparsest.set.to_vec(),
                cut_size: r.sparsest.boundary_size,
                density: r.sparsest.density.into(),
                vector: r.vector_exact.iter().map(|v| v.to_string()).collect(),
                enumerated: r.enumerated,
            },
            None => {
                let (upper, c) = heuristic_b_upper(self.g)?;
                BReport::Heuristic {
                    upper: upper.into(),
                    witness: c.set.to_vec(),
                    cut_size: c.boundary_size,
                    density: c.density.into(),
                }
            }
        })
    }

    pub fn gamma_report(&self) -> Result<GammaReport> {
        let r = gamma(self.g)?;
        Ok(GammaReport {
            value: r.gamma,
            argmin_k: r.argmin_k,
            x: r.x.values,
        })
    }

    pub fn bounds(&self) -> Result<BoundsReport> {
        let exact = self.exact()?;
        bounds_report_from(self.g, self.spectral()?, exact, SPECTRAL_TOL)
    }

    pub fn partition(&self, method: Method) -> Result<PartitionSide<'g>> {
        let (cut, exact) = match method {
            Method::L1 => match self.exact()? {
                Some(r) => (r.sparsest.clone(), true),
                None => (heuristic_b_upper(self.g)?.1, false),
            },
            Method::L2 => (cut(self.g, &self.spectral()?.bisection)?, false),
        };
        Ok(PartitionSide {
            g: self.g,
            method,
            cut,
            exact,
        })
    }

    pub fn compare(&self) -> Result<Comparison> {
        let l1 = self.partition(Method::L1)?;
        let l2 = self.partition(Method::L2)?;
        Ok(Comparison {
            graph: GraphSummary {
                n: self.g.n(),
                m: self.g.m(),
            },
            l1_not_worse: l1.cut.density <= l2.cut.density,
            equal_density: l1.cut.density == l2.cut.density,
            l1: l1.summary(),
            l2: l2.summary(),
        })
    }
}
