//! Normalized Laplacian spectra.
//!
//! `L = I − D⁻¹A` is not symmetric, but it is similar to
//! `𝓛 = I − D^{-1/2} A D^{-1/2}` through `L = D^{-1/2} 𝓛 D^{1/2}`. All
//! eigenvalue work is done on `𝓛`; eigenvectors `u` of `𝓛` are carried back to
//! eigenfunctions `f = D^{-1/2} u` of `L`, which are then orthonormal for the
//! degree-weighted inner product `⟨f, g⟩ = Σ deg v · f(v) · g(v)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Fingerprint, Graph};
use crate::linalg::{symmetric_eigen, symmetric_eigenvalues, DenseMatrix};

/// Default absolute tolerance for grouping eigenvalues into multiplicities.
pub const GROUPING_TOL: f64 = 1e-8;
/// Default relative tolerance for accepting an eigenpair.
pub const VERIFY_TOL: f64 = 1e-9;

/// A real-valued function on the vertices of one graph.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexFunction {
    parent: Fingerprint,
    values: Vec<f64>,
}

impl VertexFunction {
    pub fn new(g: &Graph, values: Vec<f64>) -> Result<Self> {
        if values.len() != g.n() {
            return Err(Error::LengthMismatch { expected: g.n(), got: values.len() });
        }
        if let Some(v) = values.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFinite(v));
        }
        Ok(VertexFunction { parent: g.fingerprint(), values })
    }

    pub fn constant(g: &Graph, c: f64) -> Self {
        VertexFunction { parent: g.fingerprint(), values: vec![c; g.n()] }
    }

    pub fn zero(g: &Graph) -> Self {
        Self::constant(g, 0.0)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn belongs_to(&self, g: &Graph) -> bool {
        self.parent == g.fingerprint() && self.values.len() == g.n()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&x| x == 0.0)
    }

    pub fn scaled(&self, c: f64) -> Self {
        VertexFunction { parent: self.parent, values: self.values.iter().map(|x| x * c).collect() }
    }

    pub(crate) fn from_parts(parent: Fingerprint, values: Vec<f64>) -> Self {
        VertexFunction { parent, values }
    }

    pub(crate) fn parent(&self) -> Fingerprint {
        self.parent
    }
}

impl std::ops::Index<usize> for VertexFunction {
    type Output = f64;
    fn index(&self, v: usize) -> &f64 {
        &self.values[v]
    }
}

fn check_owned(g: &Graph, f: &VertexFunction) -> Result<()> {
    if f.belongs_to(g) {
        Ok(())
    } else {
        Err(Error::ForeignObject)
    }
}

/// One cluster of numerically equal eigenvalues.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EigenGroup {
    pub value: f64,
    pub mult: usize,
}

/// Sorted normalized-Laplacian eigenvalues with tolerance-grouped
/// multiplicities.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum {
    pub n: usize,
    pub tol: f64,
    pub eigenvalues: Vec<f64>,
    pub groups: Vec<EigenGroup>,
}

impl Spectrum {
    /// Groups sorted values: a new group starts wherever the gap to the
    /// previous value exceeds `tol`. Representatives are group means.
    pub fn from_eigenvalues(mut eigenvalues: Vec<f64>, tol: f64) -> Self {
        eigenvalues.sort_by(f64::total_cmp);
        let groups = group_by_gap(&eigenvalues, tol)
            .into_iter()
            .map(|(start, end)| EigenGroup {
                value: eigenvalues[start..end].iter().sum::<f64>() / (end - start) as f64,
                mult: end - start,
            })
            .collect();
        Spectrum { n: eigenvalues.len(), tol, eigenvalues, groups }
    }

    /// Multiplicity of the group whose representative is within `tol` of `lambda`.
    pub fn multiplicity_of(&self, lambda: f64) -> usize {
        self.groups.iter().find(|g| (g.value - lambda).abs() <= self.tol).map_or(0, |g| g.mult)
    }

    /// Top group: `(λ_max, multiplicity)`.
    pub fn largest_eigenvalue(&self) -> (f64, usize) {
        let top = self.groups.last().expect("spectrum of a non-empty graph");
        (top.value, top.mult)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spectrum serializes")
    }
}

pub(crate) fn group_by_gap(sorted: &[f64], tol: f64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=sorted.len() {
        if i == sorted.len() || sorted[i] - sorted[i - 1] > tol {
            if i > start {
                out.push((start, i));
            }
            start = i;
        }
    }
    out
}

/// A candidate eigenpair with its measured defect.
#[derive(Clone, Debug)]
pub struct EigenPair {
    pub eigenvalue: f64,
    pub function: VertexFunction,
    /// `max_v |(1−λ)f(v) − (1/deg v)Σ_{w∼v} f(w)| / ‖f‖_∞`
    pub residual: f64,
    pub valid: bool,
}

/// `L = I − D⁻¹A`.
pub fn normalized_laplacian(g: &Graph) -> Result<DenseMatrix> {
    g.require_positive_degrees()?;
    let n = g.n();
    let mut m = DenseMatrix::identity(n);
    for v in 0..n {
        let inv = 1.0 / g.degree(v) as f64;
        for &w in g.neighbors(v) {
            m.set(v, w, -inv);
        }
    }
    Ok(m)
}

/// `𝓛 = I − D^{-1/2} A D^{-1/2}`, exactly symmetric.
pub fn symmetrized_laplacian(g: &Graph) -> Result<DenseMatrix> {
    g.require_positive_degrees()?;
    let n = g.n();
    let mut m = DenseMatrix::identity(n);
    for (u, v) in g.edges() {
        let x = -1.0 / ((g.degree(u) * g.degree(v)) as f64).sqrt();
        m.set(u, v, x);
        m.set(v, u, x);
    }
    Ok(m)
}

pub fn adjacency_matrix(g: &Graph) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(g.n());
    for (u, v) in g.edges() {
        m.set(u, v, 1.0);
        m.set(v, u, 1.0);
    }
    m
}

/// Smallest and largest adjacency eigenvalues `(μ_min, μ_max)`.
pub fn adjacency_extremes(g: &Graph) -> Result<(f64, f64)> {
    let vals = symmetric_eigenvalues(&adjacency_matrix(g))?;
    Ok((vals[0], vals[vals.len() - 1]))
}

pub fn spectrum(g: &Graph, tol: f64) -> Result<Spectrum> {
    let vals = symmetric_eigenvalues(&symmetrized_laplacian(g)?)?;
    Ok(Spectrum::from_eigenvalues(vals, tol))
}

/// Eigenvalues of `L` with eigenfunctions orthonormal in the degree-weighted
/// inner product.
#[derive(Clone, Debug)]
pub struct Eigensystem {
    pub values: Vec<f64>,
    pub functions: Vec<VertexFunction>,
}

impl Eigensystem {
    /// Eigenfunctions whose eigenvalue is within `tol` of `lambda`.
    pub fn eigenspace(&self, lambda: f64, tol: f64) -> Vec<VertexFunction> {
        self.values
            .iter()
            .zip(&self.functions)
            .filter(|(v, _)| (*v - lambda).abs() <= tol)
            .map(|(_, f)| f.clone())
            .collect()
    }
}

pub fn eigensystem(g: &Graph) -> Result<Eigensystem> {
    let eig = symmetric_eigen(&symmetrized_laplacian(g)?)?;
    let scale: Vec<f64> = g.degrees().iter().map(|&d| 1.0 / (d as f64).sqrt()).collect();
    let functions = eig
        .vectors
        .into_iter()
        .map(|u| {
            let vals = u.iter().zip(&scale).map(|(x, s)| x * s).collect();
            VertexFunction::from_parts(g.fingerprint(), vals)
        })
        .collect();
    Ok(Eigensystem { values: eig.values, functions })
}

/// `⟨f, h⟩ = Σ deg v · f(v) · h(v)`.
pub fn degree_inner_product(g: &Graph, f: &VertexFunction, h: &VertexFunction) -> Result<f64> {
    check_owned(g, f)?;
    check_owned(g, h)?;
    Ok((0..g.n()).map(|v| g.degree(v) as f64 * f[v] * h[v]).sum())
}

/// `Σ_{v∼w} (f(v) − f(w))² / Σ_v deg v · f(v)²`.
pub fn rayleigh_quotient(g: &Graph, f: &VertexFunction) -> Result<f64> {
    check_owned(g, f)?;
    let denom = degree_inner_product(g, f, f)?;
    if denom == 0.0 {
        return Err(Error::ZeroFunction);
    }
    let numer: f64 = g.edges().map(|(u, v)| (f[u] - f[v]).powi(2)).sum();
    Ok(numer / denom)
}

/// Checks `(1−λ) f(v) = (1/deg v) Σ_{w∼v} f(w)` at every vertex.
pub fn verify_eigenpair(g: &Graph, lambda: f64, f: &VertexFunction, tol: f64) -> Result<EigenPair> {
    check_owned(g, f)?;
    g.require_positive_degrees()?;
    let norm = f.max_abs();
    if norm == 0.0 {
        return Err(Error::ZeroFunction);
    }
    let residual = (0..g.n())
        .map(|v| {
            let avg = g.neighbors(v).iter().map(|&w| f[w]).sum::<f64>() / g.degree(v) as f64;
            ((1.0 - lambda) * f[v] - avg).abs()
        })
        .fold(0.0, f64::max)
        / norm;
    Ok(EigenPair { eigenvalue: lambda, function: f.clone(), residual, valid: residual <= tol })
}

pub fn multiplicity_of(s: &Spectrum, lambda: f64) -> usize {
    s.multiplicity_of(lambda)
}

pub fn largest_eigenvalue(s: &Spectrum) -> (f64, usize) {
    s.largest_eigenvalue()
}
