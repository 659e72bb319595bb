//! 1-sums, joins and edge-disjoint unions, gluing of vertex functions along
//! them, and the multiplicity calculus for the top eigenvalue of a 1-sum.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Fingerprint, Graph};
use crate::rational::Rational;
use crate::spectral::{eigensystem, spectrum, verify_eigenpair, VertexFunction, GROUPING_TOL, VERIFY_TOL};

/// Relative size below which a value at the glue vertex counts as zero.
pub const VANISH_TOL: f64 = 1e-9;

/// A composed graph together with where each summand landed in it.
#[derive(Clone, Debug)]
pub struct GluedGraph {
    pub result: Graph,
    /// `embeddings[i][v]` is the image of vertex `v` of summand `i`.
    pub embeddings: Vec<Vec<usize>>,
    /// Result vertices covered by more than one summand, ascending. For a
    /// 1-sum this is `[0]`.
    pub shared: Vec<usize>,
    parents: Vec<Fingerprint>,
}

impl GluedGraph {
    pub fn summands(&self) -> usize {
        self.embeddings.len()
    }

    /// The common extension of one function per summand. Functions must
    /// agree exactly wherever their images overlap.
    pub fn glue(&self, parts: &[&VertexFunction]) -> Result<VertexFunction> {
        if parts.len() != self.summands() {
            return Err(Error::LengthMismatch { expected: self.summands(), got: parts.len() });
        }
        let mut out: Vec<Option<f64>> = vec![None; self.result.n()];
        for ((f, emb), &parent) in parts.iter().zip(&self.embeddings).zip(&self.parents) {
            if f.parent() != parent || f.len() != emb.len() {
                return Err(Error::ForeignObject);
            }
            for (v, &w) in emb.iter().enumerate() {
                match out[w] {
                    Some(x) if x != f[v] => return Err(Error::GlueMismatch(w)),
                    _ => out[w] = Some(f[v]),
                }
            }
        }
        let values = out.into_iter().map(|x| x.expect("embeddings cover the result")).collect();
        VertexFunction::new(&self.result, values)
    }

    /// `f` on summand `i` and zero on every other summand.
    pub fn zero_extend(&self, i: usize, f: &VertexFunction) -> Result<VertexFunction> {
        if i >= self.summands() {
            return Err(Error::Domain(format!("no summand {i}")));
        }
        let zeros: Vec<VertexFunction> = self
            .embeddings
            .iter()
            .zip(&self.parents)
            .map(|(emb, &p)| VertexFunction::from_parts(p, vec![0.0; emb.len()]))
            .collect();
        let parts: Vec<&VertexFunction> = (0..self.summands()).map(|j| if j == i { f } else { &zeros[j] }).collect();
        self.glue(&parts)
    }
}

/// `G1[x1] ⊕ G2[x2]`. The glue vertex `y` is 0; the other vertices of `g1`
/// follow in order, then those of `g2`.
pub fn one_sum(g1: &Graph, x1: usize, g2: &Graph, x2: usize) -> Result<GluedGraph> {
    one_sum_many(&[(g1, x1), (g2, x2)])
}

/// The 1-sum of several graphs, all glue vertices identified with `y = 0`.
pub fn one_sum_many(summands: &[(&Graph, usize)]) -> Result<GluedGraph> {
    if summands.is_empty() {
        return Err(Error::Domain("1-sum needs at least one summand".into()));
    }
    let mut next = 1;
    let mut embeddings = Vec::with_capacity(summands.len());
    let mut edges = Vec::new();
    for &(g, x) in summands {
        g.check_vertex(x)?;
        let emb: Vec<usize> = (0..g.n())
            .map(|v| {
                if v == x {
                    0
                } else {
                    next += 1;
                    next - 1
                }
            })
            .collect();
        edges.extend(g.edges().map(|(u, v)| (emb[u], emb[v])));
        embeddings.push(emb);
    }
    Ok(GluedGraph {
        result: Graph::from_edge_list(next, &edges)?,
        embeddings,
        shared: vec![0],
        parents: summands.iter().map(|(g, _)| g.fingerprint()).collect(),
    })
}

/// `G1 ∨ G2`: disjoint union (vertices of `g2` shifted by `|g1|`) plus every
/// edge between the two sides.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let shift = g1.n();
    let mut edges: Vec<(usize, usize)> = g1.edges().chain(g2.edges().map(|(a, b)| (a + shift, b + shift))).collect();
    for u in 0..g1.n() {
        for v in 0..g2.n() {
            edges.push((u, v + shift));
        }
    }
    Graph::from_edge_list(g1.n() + g2.n(), &edges).expect("join of valid graphs")
}

/// Edge-disjoint union over a shared label space where vertex `v` of either
/// input is label `v`: the result lives on `0..max(n1, n2)` and the first
/// `min(n1, n2)` vertices are shared.
pub fn edge_disjoint_union(g1: &Graph, g2: &Graph) -> Result<GluedGraph> {
    let l1: Vec<usize> = (0..g1.n()).collect();
    let l2: Vec<usize> = (0..g2.n()).collect();
    edge_disjoint_union_labeled(g1, &l1, g2, &l2)
}

/// Edge-disjoint union where vertex `v` of `g_i` carries label `l_i[v]`.
/// Result vertices are the distinct labels, numbered in increasing label
/// order.
pub fn edge_disjoint_union_labeled(g1: &Graph, l1: &[usize], g2: &Graph, l2: &[usize]) -> Result<GluedGraph> {
    for (g, l) in [(g1, l1), (g2, l2)] {
        if l.len() != g.n() {
            return Err(Error::LengthMismatch { expected: g.n(), got: l.len() });
        }
        let mut seen = BTreeSet::new();
        if let Some(&dup) = l.iter().find(|&&x| !seen.insert(x)) {
            return Err(Error::DuplicateVertex(dup));
        }
    }
    let labels: Vec<usize> = l1.iter().chain(l2).copied().collect::<BTreeSet<_>>().into_iter().collect();
    let index = |label: usize| labels.binary_search(&label).expect("label present");

    let labeled_edges = |g: &Graph, l: &[usize]| -> BTreeSet<(usize, usize)> {
        g.edges().map(|(u, v)| (l[u].min(l[v]), l[u].max(l[v]))).collect()
    };
    let e1 = labeled_edges(g1, l1);
    let e2 = labeled_edges(g2, l2);
    let common: Vec<(usize, usize)> = e1.intersection(&e2).copied().collect();
    if !common.is_empty() {
        return Err(Error::SharedEdges(common));
    }
    let edges: Vec<(usize, usize)> = e1.union(&e2).map(|&(a, b)| (index(a), index(b))).collect();
    let in2: BTreeSet<usize> = l2.iter().copied().collect();
    let shared = l1.iter().filter(|x| in2.contains(x)).map(|&x| index(x)).collect::<BTreeSet<_>>();
    Ok(GluedGraph {
        result: Graph::from_edge_list(labels.len(), &edges)?,
        embeddings: vec![l1.iter().map(|&x| index(x)).collect(), l2.iter().map(|&x| index(x)).collect()],
        shared: shared.into_iter().collect(),
        parents: vec![g1.fingerprint(), g2.fingerprint()],
    })
}

/// `f1 ⊕ f2` on a two-summand glued graph.
pub fn glue_functions(f1: &VertexFunction, f2: &VertexFunction, glue: &GluedGraph) -> Result<VertexFunction> {
    glue.glue(&[f1, f2])
}

fn top_eigenvalue(g: &Graph) -> Result<f64> {
    Ok(*spectrum(g, GROUPING_TOL)?.eigenvalues.last().expect("non-empty graph"))
}

/// `(λ_max(G1 ⊕ G2), max(λ_max G1, λ_max G2), ok)` where `ok` means the
/// first does not exceed the second by more than `1e−8`.
pub fn one_sum_lambda_max_check(g1: &Graph, x1: usize, g2: &Graph, x2: usize) -> Result<(f64, f64, bool)> {
    let glued = one_sum(g1, x1, g2, x2)?;
    let result = top_eigenvalue(&glued.result)?;
    let bound = top_eigenvalue(g1)?.max(top_eigenvalue(g2)?);
    Ok((result, bound, result <= bound + GROUPING_TOL))
}

/// Whether every top eigenfunction on both sides vanishes at the glue vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlueCase {
    BothVanish,
    Otherwise,
}

/// Multiplicity of `λ_max(G1)` in `G1 ⊕ G2` when `λ_max(G1) ≥ λ_max(G2)`,
/// from the two side multiplicities at that value.
pub fn one_sum_multiplicity_prediction(m1: usize, m2: usize, case: GlueCase) -> usize {
    match case {
        GlueCase::BothVanish => m1 + m2,
        GlueCase::Otherwise => (m1 + m2).saturating_sub(1),
    }
}

/// Lower bound `m1 + m2 − 1` valid for every common value `λ`.
pub fn one_sum_multiplicity_lower_bound(m1: usize, m2: usize) -> usize {
    (m1 + m2).saturating_sub(1)
}

/// Predicted and measured multiplicity of the larger top eigenvalue in a 1-sum.
#[derive(Clone, Debug, PartialEq)]
pub struct TopMultiplicity {
    pub lambda: f64,
    /// Multiplicities of `lambda` in the side with the larger top
    /// eigenvalue and in the other side.
    pub m1: usize,
    pub m2: usize,
    pub case: GlueCase,
    /// The arguments were exchanged because `λ_max(G2) > λ_max(G1)`.
    pub swapped: bool,
    pub predicted: usize,
    pub measured: usize,
}

/// Applies the multiplicity rule with the side of larger `λ_max` first and
/// compares against the spectrum of the 1-sum.
pub fn one_sum_top_multiplicity(g1: &Graph, x1: usize, g2: &Graph, x2: usize) -> Result<TopMultiplicity> {
    let glued = one_sum(g1, x1, g2, x2)?;
    let (l1, l2) = (top_eigenvalue(g1)?, top_eigenvalue(g2)?);
    let swapped = l2 > l1 + GROUPING_TOL;
    let ((a, xa), (b, xb)) = if swapped { ((g2, x2), (g1, x1)) } else { ((g1, x1), (g2, x2)) };
    let lambda = l1.max(l2);

    let mut vanish_everywhere = true;
    let mut mults = [0; 2];
    for (slot, (g, x)) in [(a, xa), (b, xb)].into_iter().enumerate() {
        let space = eigensystem(g)?.eigenspace(lambda, GROUPING_TOL);
        mults[slot] = space.len();
        vanish_everywhere &= space.iter().all(|f| vanishes_at(f.values(), x));
    }
    let case = if vanish_everywhere { GlueCase::BothVanish } else { GlueCase::Otherwise };
    let measured = spectrum(&glued.result, GROUPING_TOL)?.multiplicity_of(lambda);
    Ok(TopMultiplicity {
        lambda,
        m1: mults[0],
        m2: mults[1],
        case,
        swapped,
        predicted: one_sum_multiplicity_prediction(mults[0], mults[1], case),
        measured,
    })
}

fn euclid(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn vanishes_at(v: &[f64], x: usize) -> bool {
    v[x].abs() <= VANISH_TOL * euclid(v)
}

/// Rotates a basis so that at most one element is non-zero at `x`.
/// Returns that element, if any, and the rest (exactly zero at `x`).
fn split_at_glue(mut basis: Vec<Vec<f64>>, x: usize) -> (Option<Vec<f64>>, Vec<Vec<f64>>) {
    for b in basis.iter_mut() {
        if vanishes_at(b, x) {
            b[x] = 0.0;
        }
    }
    let a: Vec<f64> = basis.iter().map(|b| b[x]).collect();
    let norm = euclid(&a);
    if norm == 0.0 {
        return (None, basis);
    }
    // Householder reflection H with H·a = alpha·e_0
    let alpha = if a[0] > 0.0 { -norm } else { norm };
    let mut u = a.clone();
    u[0] -= alpha;
    let uu: f64 = u.iter().map(|x| x * x).sum();
    let m = basis.len();
    let n = basis[0].len();
    let mut rotated: Vec<Vec<f64>> = (0..m)
        .map(|i| {
            let mut out = vec![0.0; n];
            for (k, b) in basis.iter().enumerate() {
                let h = f64::from(u8::from(i == k)) - 2.0 * u[i] * u[k] / uu;
                if h != 0.0 {
                    out.iter_mut().zip(b).for_each(|(o, bv)| *o += h * bv);
                }
            }
            out
        })
        .collect();
    rotated[0][x] = alpha;
    for r in rotated.iter_mut().skip(1) {
        r[x] = 0.0;
    }
    let first = rotated.remove(0);
    (Some(first), rotated)
}

/// Eigenfunctions of `G1[x1] ⊕ G2[x2]` for `lambda` built from eigenbases of
/// the two sides: each basis is rotated so at most one element is non-zero
/// at the glue vertex, the rest are extended by zero, and the two
/// distinguished elements are glued when both exist. A lone distinguished
/// element is dropped.
///
/// The functions live on `one_sum(g1, x1, g2, x2)`.
pub fn glue_eigenbasis(
    g1: &Graph,
    x1: usize,
    basis1: &[VertexFunction],
    g2: &Graph,
    x2: usize,
    basis2: &[VertexFunction],
    lambda: f64,
) -> Result<Vec<VertexFunction>> {
    let glued = one_sum(g1, x1, g2, x2)?;
    for (g, basis) in [(g1, basis1), (g2, basis2)] {
        for f in basis {
            let check = verify_eigenpair(g, lambda, f, VERIFY_TOL)?;
            if !check.valid {
                return Err(Error::NotEigenpair { residual: check.residual });
            }
        }
    }
    let (d1, rest1) = split_at_glue(basis1.iter().map(|f| f.values().to_vec()).collect(), x1);
    let (d2, rest2) = split_at_glue(basis2.iter().map(|f| f.values().to_vec()).collect(), x2);

    let mut out = Vec::new();
    for (side, g, rest) in [(0, g1, rest1), (1, g2, rest2)] {
        for vals in rest {
            out.push(glued.zero_extend(side, &VertexFunction::new(g, vals)?)?);
        }
    }
    if let (Some(f1), Some(f2)) = (d1, d2) {
        let scale = f1[x1] / f2[x2];
        let mut f2: Vec<f64> = f2.iter().map(|v| v * scale).collect();
        f2[x2] = f1[x1];
        let h1 = VertexFunction::new(g1, f1)?;
        let h2 = VertexFunction::new(g2, f2)?;
        out.push(glue_functions(&h1, &h2, &glued)?);
    }
    for f in &out {
        let check = verify_eigenpair(&glued.result, lambda, f, VERIFY_TOL)?;
        if !check.valid {
            return Err(Error::NotEigenpair { residual: check.residual });
        }
    }
    Ok(out)
}

/// `(a + b)/(c + d)` for positive `a, b, c, d`.
pub fn mediant(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Result<Rational> {
    let zero = Rational::from_integer(0.into());
    if [a, b, c, d].iter().any(|x| **x <= zero) {
        return Err(Error::Domain("mediant needs positive arguments".into()));
    }
    Ok((a + b) / (c + d))
}

/// Checks exactly that the mediant lies between `a/c` and `b/d`, and that it
/// meets either end only when `a/c = b/d`.
pub fn fraction_lemma_holds(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Result<bool> {
    let m = mediant(a, b, c, d)?;
    let (p, q) = (a / c, b / d);
    let (lo, hi) = if p <= q { (&p, &q) } else { (&q, &p) };
    let touches = m == *lo || m == *hi;
    Ok(*lo <= m && m <= *hi && touches == (p == q))
}
