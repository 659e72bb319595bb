//! Exact chromatic numbers, enumeration of χ-colorings, equitable-coloring
//! tests, and the ±1 test functions built from colorings.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Fingerprint, Graph, VertexSubset};
use crate::rational::{rat, Rational};
use crate::spectral::{rayleigh_quotient, VertexFunction};

/// Largest graph accepted by [`chromatic_number`].
pub const CHROMATIC_CAP: usize = 64;
/// Largest graph accepted by [`enumerate_chi_colorings`].
pub const ENUMERATION_CAP: usize = 32;

/// A vertex coloring using exactly `k` colors `0..k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    parent: Fingerprint,
    assignment: Vec<usize>,
    k: usize,
}

#[derive(Serialize)]
struct ColoringJson<'a> {
    k: usize,
    classes: &'a [Vec<usize>],
}

impl Coloring {
    /// Every color in `0..k` must be used, where `k − 1` is the largest color.
    pub fn new(g: &Graph, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != g.n() {
            return Err(Error::LengthMismatch { expected: g.n(), got: assignment.len() });
        }
        let k = assignment.iter().max().map_or(0, |m| m + 1);
        let mut used = vec![false; k];
        for &c in &assignment {
            used[c] = true;
        }
        if let Some(c) = used.iter().position(|u| !u) {
            return Err(Error::InvalidColoring(format!("color {c} is unused")));
        }
        Ok(Coloring { parent: g.fingerprint(), assignment, k })
    }

    pub fn from_classes(g: &Graph, classes: &[Vec<usize>]) -> Result<Self> {
        let mut assignment = vec![usize::MAX; g.n()];
        for (c, class) in classes.iter().enumerate() {
            for &v in class {
                g.check_vertex(v)?;
                if assignment[v] != usize::MAX {
                    return Err(Error::DuplicateVertex(v));
                }
                assignment[v] = c;
            }
        }
        if let Some(v) = assignment.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidColoring(format!("vertex {v} has no class")));
        }
        Self::new(g, assignment)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Classes `V_0, …, V_{k−1}`, each in increasing vertex order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k];
        for (v, &c) in self.assignment.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    pub fn class_subset(&self, g: &Graph, i: usize) -> Result<VertexSubset> {
        self.check(g)?;
        VertexSubset::new(g, self.assignment.iter().enumerate().filter(|(_, &c)| c == i).map(|(v, _)| v))
    }

    /// Relabels classes in order of their least vertex.
    pub fn canonical(&self) -> Coloring {
        let mut map = vec![usize::MAX; self.k];
        let mut next = 0;
        let assignment = self
            .assignment
            .iter()
            .map(|&c| {
                if map[c] == usize::MAX {
                    map[c] = next;
                    next += 1;
                }
                map[c]
            })
            .collect();
        Coloring { parent: self.parent, assignment, k: self.k }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ColoringJson { k: self.k, classes: &self.classes() }).expect("coloring serializes")
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if self.parent == g.fingerprint() && self.assignment.len() == g.n() {
            Ok(())
        } else {
            Err(Error::ForeignObject)
        }
    }

    /// `counts[v][i] = e(v, V_i)`.
    fn neighbor_class_counts(&self, g: &Graph) -> Vec<Vec<usize>> {
        (0..g.n())
            .map(|v| {
                let mut row = vec![0; self.k];
                for &w in g.neighbors(v) {
                    row[self.assignment[w]] += 1;
                }
                row
            })
            .collect()
    }
}

fn first_monochromatic_edge(g: &Graph, c: &Coloring) -> Option<(usize, usize)> {
    g.edges().find(|&(u, v)| c.color(u) == c.color(v))
}

pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    c.check(g)?;
    Ok(first_monochromatic_edge(g, c).is_none())
}

fn require_proper(g: &Graph, c: &Coloring) -> Result<()> {
    c.check(g)?;
    match first_monochromatic_edge(g, c) {
        Some((u, v)) => Err(Error::ImproperColoring(u, v)),
        None => Ok(()),
    }
}

/// Bitmask adjacency for graphs on at most 64 vertices.
struct MaskGraph {
    n: usize,
    adj: Vec<u64>,
}

impl MaskGraph {
    fn new(g: &Graph) -> Self {
        MaskGraph { n: g.n(), adj: (0..g.n()).map(|v| g.row(v)[0]).collect() }
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Size of a maximum clique (Carraghan–Pardalos style branch and bound).
    fn max_clique(&self) -> usize {
        fn expand(adj: &[u64], size: usize, mut cand: u64, best: &mut usize) {
            if cand == 0 {
                *best = (*best).max(size);
                return;
            }
            while cand != 0 {
                if size + cand.count_ones() as usize <= *best {
                    return;
                }
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                expand(adj, size + 1, cand & adj[v], best);
            }
        }
        let mut best = 0;
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        expand(&self.adj, 0, all, &mut best);
        best
    }

    /// DSATUR greedy coloring: highest saturation, then highest degree, then
    /// lowest index. Returns `(colors, number used)`.
    fn dsatur(&self) -> (Vec<usize>, usize) {
        let n = self.n;
        let mut color = vec![usize::MAX; n];
        let mut sat = vec![0u64; n];
        let mut used = 0;
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| color[v] == usize::MAX)
                .max_by(|&a, &b| {
                    sat[a]
                        .count_ones()
                        .cmp(&sat[b].count_ones())
                        .then(self.degree(a).cmp(&self.degree(b)))
                        .then(b.cmp(&a))
                })
                .expect("uncolored vertex remains");
            let c = (!sat[v]).trailing_zeros() as usize;
            color[v] = c;
            used = used.max(c + 1);
            let mut nb = self.adj[v];
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                sat[w] |= 1 << c;
            }
        }
        (color, used)
    }
}

/// Backtracking over vertices in a fixed order; a vertex may open a new
/// color only as `max_used + 1`, so every assignment visited is canonical
/// with respect to that order.
struct ColorSearch<'a> {
    g: &'a MaskGraph,
    order: &'a [usize],
    k: usize,
    color: Vec<usize>,
    // blocked[v][c]: number of colored neighbors of v using color c
    blocked: Vec<Vec<u32>>,
}

impl<'a> ColorSearch<'a> {
    fn new(g: &'a MaskGraph, order: &'a [usize], k: usize) -> Self {
        ColorSearch { g, order, k, color: vec![usize::MAX; g.n], blocked: vec![vec![0; k]; g.n] }
    }

    fn assign(&mut self, v: usize, c: usize, delta: i32) -> bool {
        let mut ok = true;
        let mut nb = self.g.adj[v];
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let slot = &mut self.blocked[w][c];
            *slot = (*slot as i32 + delta) as u32;
            if delta > 0 && self.color[w] == usize::MAX && self.blocked[w].iter().all(|&b| b > 0) {
                ok = false;
            }
        }
        ok
    }

    /// Visits every complete proper coloring; `visit` returns `false` to stop.
    fn run(&mut self, depth: usize, max_used: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            return visit(&self.color);
        }
        let v = self.order[depth];
        let limit = (max_used + 1).min(self.k);
        for c in 0..limit {
            if self.blocked[v][c] > 0 {
                continue;
            }
            self.color[v] = c;
            let ok = self.assign(v, c, 1);
            let keep_going = if ok { self.run(depth + 1, max_used.max(c + 1), visit) } else { true };
            self.assign(v, c, -1);
            self.color[v] = usize::MAX;
            if !keep_going {
                return false;
            }
        }
        true
    }
}

/// Exact chromatic number by branch and bound: DSATUR upper bound, maximum
/// clique lower bound, then a colorability search for each intermediate `k`.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    if g.n() > CHROMATIC_CAP {
        return Err(Error::SizeCap { what: "chromatic number", n: g.n(), cap: CHROMATIC_CAP });
    }
    Ok(exact_coloring(g).1)
}

/// A proper coloring with exactly `χ(g)` colors, in canonical form.
pub fn optimal_coloring(g: &Graph) -> Result<Coloring> {
    if g.n() > CHROMATIC_CAP {
        return Err(Error::SizeCap { what: "chromatic number", n: g.n(), cap: CHROMATIC_CAP });
    }
    let (assignment, _) = exact_coloring(g);
    Ok(Coloring::new(g, assignment)?.canonical())
}

fn exact_coloring(g: &Graph) -> (Vec<usize>, usize) {
    if g.edge_count() == 0 {
        return (vec![0; g.n()], 1);
    }
    let mg = MaskGraph::new(g);
    let (greedy, upper) = mg.dsatur();
    let lower = mg.max_clique();
    if lower == upper {
        return (greedy, upper);
    }
    // static order: DSATUR visiting order approximated by degree, ties by index
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&a, &b| mg.degree(b).cmp(&mg.degree(a)).then(a.cmp(&b)));
    for k in lower..upper {
        let mut found = None;
        ColorSearch::new(&mg, &order, k).run(0, 0, &mut |col| {
            found = Some(col.to_vec());
            false
        });
        if let Some(col) = found {
            return (col, k);
        }
    }
    (greedy, upper)
}

/// All proper `chi`-colorings up to permutation of the classes, in canonical
/// form and lexicographic order of their assignments.
pub fn enumerate_chi_colorings(g: &Graph, chi: usize) -> Result<Vec<Coloring>> {
    enumerate_chi_colorings_limited(g, chi, usize::MAX).map(|(all, _)| all)
}

/// Like [`enumerate_chi_colorings`] but stops after `limit` colorings. The
/// flag reports whether the enumeration ran to completion.
pub fn enumerate_chi_colorings_limited(g: &Graph, chi: usize, limit: usize) -> Result<(Vec<Coloring>, bool)> {
    if g.n() > ENUMERATION_CAP {
        return Err(Error::SizeCap { what: "coloring enumeration", n: g.n(), cap: ENUMERATION_CAP });
    }
    let actual = chromatic_number(g)?;
    if actual != chi {
        return Err(Error::ChiMismatch { expected: chi, got: actual });
    }
    let mg = MaskGraph::new(g);
    let order: Vec<usize> = (0..g.n()).collect();
    let mut out = Vec::new();
    let complete = ColorSearch::new(&mg, &order, chi).run(0, 0, &mut |col| {
        if out.len() == limit {
            return false;
        }
        out.push(Coloring { parent: g.fingerprint(), assignment: col.to_vec(), k: chi });
        true
    });
    Ok((out, complete))
}

/// `(k−1)·e(v, V_i) = deg v` for every vertex `v` and every class `V_i ∌ v`,
/// checked in integer arithmetic.
pub fn is_equitable_dinva(g: &Graph, c: &Coloring) -> Result<bool> {
    require_proper(g, c)?;
    let counts = c.neighbor_class_counts(g);
    Ok((0..g.n()).all(|v| (0..c.k).all(|i| i == c.color(v) || (c.k - 1) * counts[v][i] == g.degree(v))))
}

/// For all classes `i, j` (including `i = j`), `e(v, V_j)` is the same for
/// every `v ∈ V_i`.
pub fn is_equitable_a(g: &Graph, c: &Coloring) -> Result<bool> {
    c.check(g)?;
    let counts = c.neighbor_class_counts(g);
    let mut first: Vec<Option<usize>> = vec![None; c.k];
    for v in 0..g.n() {
        let i = c.color(v);
        match first[i] {
            None => first[i] = Some(v),
            Some(u) if counts[u] != counts[v] => return Ok(false),
            Some(_) => {}
        }
    }
    Ok(true)
}

/// `f_ij`: +1 on `V_i`, −1 on `V_j`, 0 elsewhere.
pub fn class_indicator_pm(g: &Graph, c: &Coloring, i: usize, j: usize) -> Result<VertexFunction> {
    c.check(g)?;
    if i == j || i >= c.k || j >= c.k {
        return Err(Error::Domain(format!("need distinct classes below {}, got {i} and {j}", c.k)));
    }
    let vals = c
        .assignment
        .iter()
        .map(|&x| {
            if x == i {
                1.0
            } else if x == j {
                -1.0
            } else {
                0.0
            }
        })
        .collect();
    VertexFunction::new(g, vals)
}

/// `f_{v,w}`: +1 at `v`, −1 at `w`, 0 elsewhere.
pub fn pair_pm(g: &Graph, v: usize, w: usize) -> Result<VertexFunction> {
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    if v == w {
        return Err(Error::SameVertex(v));
    }
    let mut vals = vec![0.0; g.n()];
    vals[v] = 1.0;
    vals[w] = -1.0;
    VertexFunction::new(g, vals)
}

/// Decides exactly whether the ±1 indicator of `(V₊, V₋)` is an eigenfunction.
///
/// Outside vertices must see `V₊` and `V₋` equally often, and
/// `(e(v, opposite) − e(v, own side)) / deg v` must take one common value
/// `λ − 1` over `V₊ ∪ V₋`. Returns that `λ`.
pub fn plus_minus_check(g: &Graph, vplus: &VertexSubset, vminus: &VertexSubset) -> Result<Option<Rational>> {
    for s in [vplus, vminus] {
        if s.parent() != g.fingerprint() {
            return Err(Error::ForeignObject);
        }
        if s.is_empty() {
            return Err(Error::EmptySubset);
        }
    }
    if let Some(v) = vplus.iter().find(|&v| vminus.contains(v)) {
        return Err(Error::OverlappingSubsets(v));
    }
    g.require_positive_degrees()?;

    let mut ratio: Option<(i64, i64)> = None;
    for v in 0..g.n() {
        let plus = g.neighbors_in(v, vplus) as i64;
        let minus = g.neighbors_in(v, vminus) as i64;
        let deg = g.degree(v) as i64;
        let num = if vplus.contains(v) {
            minus - plus
        } else if vminus.contains(v) {
            plus - minus
        } else {
            if plus != minus {
                return Ok(None);
            }
            continue;
        };
        match ratio {
            None => ratio = Some((num, deg)),
            Some((a, b)) if a * deg != num * b => return Ok(None),
            Some(_) => {}
        }
    }
    let (num, den) = ratio.expect("subsets are non-empty");
    Ok(Some(rat(num + den, den)))
}

/// Both sides of the support decomposition for an equitable coloring:
/// `RQ_G(f)` and `((|I|−1)/(k−1))·RQ_{G_I}(f_I) + (k−|I|)/(k−1)`, where
/// `G_I` is induced by the classes listed in `classes`.
pub fn support_rq_decomposition(g: &Graph, c: &Coloring, f: &VertexFunction, classes: &[usize]) -> Result<(f64, f64)> {
    if !is_equitable_dinva(g, c)? {
        return Err(Error::NotEquitable);
    }
    let mut selected = vec![false; c.k];
    for &i in classes {
        if i >= c.k || std::mem::replace(&mut selected[i], true) {
            return Err(Error::Domain(format!("invalid class list {classes:?}")));
        }
    }
    if classes.is_empty() {
        return Err(Error::EmptySubset);
    }
    if let Some(v) = (0..g.n()).find(|&v| f[v] != 0.0 && !selected[c.color(v)]) {
        return Err(Error::SupportViolation(v));
    }
    let lhs = rayleigh_quotient(g, f)?;

    let k = c.k as f64;
    let size = classes.len() as f64;
    let tail = (k - size) / (k - 1.0);
    let rhs = if classes.len() == 1 {
        tail
    } else {
        let members = VertexSubset::new(g, (0..g.n()).filter(|&v| selected[c.color(v)]))?;
        let (sub, relabel) = g.induced_subgraph(&members)?;
        let mut vals = vec![0.0; sub.n()];
        for (old, new) in relabel.iter().enumerate() {
            if let Some(new) = new {
                vals[*new] = f[old];
            }
        }
        let restricted = VertexFunction::new(&sub, vals)?;
        (size - 1.0) / (k - 1.0) * rayleigh_quotient(&sub, &restricted)? + tail
    };
    Ok((lhs, rhs))
}

/// Eigenvalue of an eigenfunction supported on `|I|` classes of an
/// equitable `k`-coloring, once restricted to the subgraph those classes
/// induce: `1 + (k−1)(λ−1)/(|I|−1)`.
pub fn restricted_eigenvalue_prediction(lambda: f64, k: usize, class_count: usize) -> Result<f64> {
    if class_count < 2 {
        return Err(Error::Domain("restriction needs at least two classes".into()));
    }
    Ok(1.0 + (k as f64 - 1.0) * (lambda - 1.0) / (class_count as f64 - 1.0))
}
