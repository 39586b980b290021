//! Dense symmetric eigendecomposition (cyclic Jacobi) and the Laplacian
//! quantities built on it: algebraic connectivity, largest eigenvalue,
//! Fiedler vector and sign-based bisection.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::smoothing::{Regime, SmoothingVector};
use crate::vertex_set::VertexSet;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiOptions {
    /// Stop once the off-diagonal Frobenius norm falls below this.
    pub tol: f64,
    pub max_sweeps: usize,
}

impl Default for JacobiOptions {
    fn default() -> Self {
        JacobiOptions {
            tol: DEFAULT_TOL,
            max_sweeps: DEFAULT_MAX_SWEEPS,
        }
    }
}

/// Eigenvalues in ascending order; `vectors[i]` is the unit eigenvector of
/// `values[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

fn off_diagonal_norm(a: &[Vec<f64>]) -> f64 {
    let mut sum = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j {
                sum += x * x;
            }
        }
    }
    sum.sqrt()
}

pub fn eig_symmetric(m: &[Vec<f64>], opts: JacobiOptions) -> Result<EigenDecomposition> {
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: row.len(),
            });
        }
        for j in 0..i {
            let diff = (m[i][j] - m[j][i]).abs();
            if diff > opts.tol || !diff.is_finite() {
                return Err(Error::NotSymmetric { i, j, diff });
            }
        }
    }

    let mut a: Vec<Vec<f64>> = m.to_vec();
    // symmetrise so rounding in the input cannot bias the rotations
    for i in 0..n {
        for j in 0..i {
            let avg = 0.5 * (a[i][j] + a[j][i]);
            a[i][j] = avg;
            a[j][i] = avg;
        }
    }
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off < opts.tol {
            break;
        }
        if sweeps == opts.max_sweeps {
            return Err(Error::NoConvergence { sweeps, off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (akp, akq) = (row[p], row[q]);
                    row[p] = c * akp - s * akq;
                    row[q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for row in v.iter_mut() {
                    let (vkp, vkq) = (row[p], row[q]);
                    row[p] = c * vkp - s * vkq;
                    row[q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i][i].total_cmp(&a[j][j]));
    Ok(EigenDecomposition {
        values: order.iter().map(|&i| a[i][i]).collect(),
        vectors: order
            .iter()
            .map(|&i| (0..n).map(|k| v[k][i]).collect())
            .collect(),
    })
}

pub fn laplacian_spectrum(g: &Graph, opts: JacobiOptions) -> Result<EigenDecomposition> {
    eig_symmetric(&g.laplacian_f64(), opts)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult {
    /// Second-smallest Laplacian eigenvalue.
    pub a: f64,
    pub lambda_max: f64,
    pub fiedler: SmoothingVector,
    pub bisection: VertexSet,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralOptions {
    pub jacobi: JacobiOptions,
    /// Fiedler components this small count as zero (sign normalisation and
    /// bisection).
    pub zero_tol: f64,
}

impl Default for SpectralOptions {
    fn default() -> Self {
        SpectralOptions {
            jacobi: JacobiOptions::default(),
            zero_tol: 1e-9,
        }
    }
}

pub fn algebraic_connectivity(g: &Graph) -> Result<f64> {
    if g.n() < 2 {
        return Err(Error::TooSmall {
            n: g.n(),
            required: 2,
        });
    }
    Ok(laplacian_spectrum(g, JacobiOptions::default())?.values[1])
}

pub fn spectral_analysis(g: &Graph, opts: SpectralOptions) -> Result<SpectralResult> {
    if g.n() < 2 {
        return Err(Error::TooSmall {
            n: g.n(),
            required: 2,
        });
    }
    g.require_connected()?;
    let eig = laplacian_spectrum(g, opts.jacobi)?;

    // λ2 is simple-or-not; the null vector is e, so any λ2 eigenvector is
    // orthogonal to e up to rounding. Remove that rounding explicitly.
    let mut x = eig.vectors[1].clone();
    let mean = x.iter().sum::<f64>() / x.len() as f64;
    x.iter_mut().for_each(|c| *c -= mean);
    let norm = x.iter().map(|c| c * c).sum::<f64>().sqrt();
    if norm <= opts.zero_tol {
        return Err(Error::DegenerateFiedler);
    }
    x.iter_mut().for_each(|c| *c /= norm);
    let Some(first) = x.iter().copied().find(|c| c.abs() > opts.zero_tol) else {
        return Err(Error::DegenerateFiedler);
    };
    if first < 0.0 {
        x.iter_mut().for_each(|c| *c = -*c);
    }

    let bisection = VertexSet::from_vertices(
        g.n(),
        (0..g.n()).filter(|&v| x[v] > 0.0 || x[v].abs() <= opts.zero_tol),
    );
    Ok(SpectralResult {
        a: eig.values[1],
        lambda_max: *eig.values.last().expect("n >= 2"),
        fiedler: SmoothingVector::new(g, x, Regime::L2)?,
        bisection,
    })
}

/// Unit Fiedler vector, orthogonal to the all-ones vector, with its first
/// nonzero component positive. Any vector of the λ2 eigenspace is valid when
/// λ2 is repeated.
pub fn fiedler_vector(g: &Graph) -> Result<SmoothingVector> {
    Ok(spectral_analysis(g, SpectralOptions::default())?.fiedler)
}

/// `{v : x_v > 0}` for the sign-normalised Fiedler vector; near-zero
/// components join this side.
pub fn spectral_bisection(g: &Graph) -> Result<VertexSet> {
    Ok(spectral_analysis(g, SpectralOptions::default())?.bisection)
}
