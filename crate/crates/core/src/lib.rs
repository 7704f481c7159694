//! Maximum-spread K_{2,t}-minor-free graphs.
//!
//! For every t >= 2 and large n, the K_{2,t}-minor-free graph of maximum
//! spread (largest minus smallest adjacency eigenvalue) is an apex over
//! disjoint t-cliques: `K_1 v (l_0 K_t + (n - 1 - l_0 t) P_1)` with
//! `l_0 = floor((2n + xi_t) / (3t))` for an explicit integer offset `xi_t`
//! — uniquely, except for an exact two-way tie when `t = 4 (mod 12)` and
//! `(2n + xi_t)/(3t)` is an integer.
//!
//! This crate makes that whole story executable:
//!
//! - [`graph`]: bitset graphs, the family constructors, graph6 I/O;
//! - [`spectral`]: a dense symmetric eigensolver with residual
//!   certificates, spreads, join spectra, closed forms;
//! - [`minor`]: exact K_{2,t}-minor testing by branch-set search;
//! - [`family`]: the offsets `xi_t`/`eta_t`, the characteristic cubic of
//!   the family and its exact roots, the tie parameterization;
//! - [`expansion`]: walk moments and the asymptotic spread series with
//!   its c2/c4/c6 coefficients;
//! - [`search`]: scans over the family and brute-force searches over all
//!   small minor-free graphs;
//! - [`report`]: the CLI commands and their JSON reports.

pub mod dd;
pub mod error;
pub mod expansion;
pub mod family;
pub mod graph;
pub mod minor;
pub mod report;
pub mod search;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::Graph;
