//! Adjacency spectra and spreads.
//!
//! The spread of a graph is `lambda_1 - lambda_n`, the diameter of its
//! adjacency spectrum. Everything here is dense and deterministic: the
//! eigensolver certifies itself with the max residual `||A v - lambda v||`
//! over all returned pairs.

mod symeig;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default absolute residual demanded from [`spectrum`].
pub const DEFAULT_TOL: f64 = 1e-10;

/// All adjacency eigenvalues of one graph, sorted descending, plus the
/// residual certificate they were accepted under.
#[derive(Clone, Debug)]
pub struct Spectrum {
    /// `lambda_1 >= ... >= lambda_n`.
    pub eigenvalues: Vec<f64>,
    /// max over i of `||A v_i - lambda_i v_i||_2` with unit `v_i`.
    pub max_residual: f64,
}

impl Spectrum {
    pub fn lambda_1(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn lambda_n(&self) -> f64 {
        *self.eigenvalues.last().unwrap()
    }

    pub fn spread(&self) -> f64 {
        self.lambda_1() - self.lambda_n()
    }
}

/// Full adjacency spectrum of `g` with residual at most `tol`.
pub fn spectrum(g: &Graph, tol: f64) -> Result<Spectrum> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidParameter("spectrum of the empty graph".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter("tolerance must be positive".into()));
    }
    let a = g.adjacency_matrix();
    let eig = symeig::symmetric_eigen(&a, n);

    // Residual certificate against the original matrix.
    let mut max_residual = 0.0f64;
    for j in 0..n {
        let mut norm2 = 0.0;
        let mut vnorm2 = 0.0;
        for i in 0..n {
            let mut av = 0.0;
            let row = &a[i * n..(i + 1) * n];
            for (k, &aik) in row.iter().enumerate() {
                if aik != 0.0 {
                    av += eig.vectors[k * n + j];
                }
            }
            let r = av - eig.values[j] * eig.vectors[i * n + j];
            norm2 += r * r;
            vnorm2 += eig.vectors[i * n + j] * eig.vectors[i * n + j];
        }
        max_residual = max_residual.max(norm2.sqrt() / vnorm2.sqrt());
    }

    if !eig.converged || max_residual > tol {
        return Err(Error::EigenNoConvergence {
            achieved: max_residual,
            requested: tol,
        });
    }

    let mut eigenvalues = eig.values;
    eigenvalues.reverse();
    Ok(Spectrum { eigenvalues, max_residual })
}

/// `S(G) = lambda_1 - lambda_n` at the default tolerance.
pub fn spread(g: &Graph) -> Result<f64> {
    Ok(spectrum(g, DEFAULT_TOL)?.spread())
}

/// Spectrum of the join of a k-regular graph and an l-regular graph from
/// their own spectra: both Perron roots are replaced by the two roots of
/// `(x - k)(x - l) = m*n`, everything else survives.
pub fn join_regular_spectrum(
    eigs_g: &[f64],
    k: f64,
    eigs_h: &[f64],
    l: f64,
) -> Result<Vec<f64>> {
    if eigs_g.is_empty() || eigs_h.is_empty() {
        return Err(Error::InvalidParameter("join of an empty spectrum".into()));
    }
    for (name, eigs, deg) in [("G", eigs_g, k), ("H", eigs_h, l)] {
        if (eigs[0] - deg).abs() > 1e-9 {
            return Err(Error::InvalidParameter(format!(
                "{name} is not {deg}-regular: leading eigenvalue {}",
                eigs[0]
            )));
        }
        if eigs.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(format!(
                "{name} eigenvalues are not sorted descending"
            )));
        }
    }
    let m = eigs_g.len() as f64;
    let n = eigs_h.len() as f64;
    let disc = ((k - l) * (k - l) + 4.0 * m * n).sqrt();
    let mut out = Vec::with_capacity(eigs_g.len() + eigs_h.len());
    out.push((k + l + disc) / 2.0);
    out.push((k + l - disc) / 2.0);
    out.extend_from_slice(&eigs_g[1..]);
    out.extend_from_slice(&eigs_h[1..]);
    out.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(out)
}

/// Closed form `S(K_1 v qK_t) = sqrt(4qt + t^2 - 2t + 1)`.
///
/// Valid as a spread only for q >= 1: at q = 0 the formula evaluates to
/// t - 1, which is not S(K_1) = 0. Kept total so scans need no gating.
pub fn spread_closed_form(q: u64, t: u64) -> f64 {
    let q = q as f64;
    let t = t as f64;
    (4.0 * q * t + t * t - 2.0 * t + 1.0).sqrt()
}

/// Rayleigh quotient `2 sum_{ij in E} w_i w_j / w'w`.
pub fn rayleigh(g: &Graph, w: &[f64]) -> Result<f64> {
    let n = g.vertex_count();
    if w.len() != n {
        return Err(Error::InvalidParameter(format!(
            "vector length {} does not match n = {n}",
            w.len()
        )));
    }
    let denom: f64 = w.iter().map(|x| x * x).sum();
    if denom == 0.0 {
        return Err(Error::InvalidParameter("zero vector".into()));
    }
    let mut num = 0.0;
    for u in 0..n {
        for v in g.neighbors(u) {
            if v > u {
                num += w[u] * w[v];
            }
        }
    }
    Ok(2.0 * num / denom)
}

/// `(t-1)/2 + sqrt(n + (t^2 - 2t - 3)/4)`: the spectral-radius bound for
/// K_{2,t}-minor-free graphs. Informational; the hypothesis (t >= 3,
/// n >= 400 t^6) is not enforced. Equality holds at `K_1 v (n/t) K_t`
/// whenever n = qt + 1.
pub fn nikiforov_bound(n: u64, t: u64) -> f64 {
    let n = n as f64;
    let t = t as f64;
    (t - 1.0) / 2.0 + (n + (t * t - 2.0 * t - 3.0) / 4.0).sqrt()
}
