//! Graph families with closed-form spectra, their generators and exact
//! spectrum oracles.
//!
//! Vertex numbering is fixed so that explicit eigenfunctions can be written
//! against indices:
//! - complete multipartite graphs (including Turán and split graphs) list
//!   their parts as consecutive blocks;
//! - `petal(m)`: hub `x = 0`, then `v_1..v_m` at `1..=m`, then `w_1..w_m`;
//! - `generalized_petal(m, n)`: hub 0, then the `m` copies of `K_{n−1}` as
//!   consecutive blocks;
//! - `g_ktd(k, θ, d)`: `v_j^i` (1-indexed) sits at `(i−1)·k + (j−1)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{display, int, rat, to_f64, Rational};
use crate::spectral::Spectrum;

/// A multiset of exact eigenvalues, stored as distinct values in increasing
/// order with their multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSpectrum {
    groups: Vec<(Rational, usize)>,
}

impl ExactSpectrum {
    /// Merges equal values, drops empty groups and sorts. Every value must
    /// lie in `[0, 2]`.
    pub fn new(groups: impl IntoIterator<Item = (Rational, usize)>) -> Result<Self> {
        let mut merged: Vec<(Rational, usize)> = Vec::new();
        for (value, mult) in groups {
            if mult == 0 {
                continue;
            }
            if value < int(0) || value > int(2) {
                return Err(Error::Domain(format!("eigenvalue {} outside [0, 2]", display(&value))));
            }
            match merged.iter_mut().find(|(v, _)| *v == value) {
                Some(slot) => slot.1 += mult,
                None => merged.push((value, mult)),
            }
        }
        merged.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(ExactSpectrum { groups: merged })
    }

    pub fn groups(&self) -> &[(Rational, usize)] {
        &self.groups
    }

    /// Total multiplicity, i.e. the vertex count.
    pub fn n(&self) -> usize {
        self.groups.iter().map(|g| g.1).sum()
    }

    pub fn largest(&self) -> (Rational, usize) {
        self.groups.last().cloned().expect("non-empty spectrum")
    }

    pub fn multiplicity_of(&self, value: &Rational) -> usize {
        self.groups.iter().find(|g| &g.0 == value).map_or(0, |g| g.1)
    }

    /// Spectrum of `m` disjoint copies.
    pub fn repeated(&self, m: usize) -> ExactSpectrum {
        ExactSpectrum { groups: self.groups.iter().map(|(v, k)| (v.clone(), k * m)).collect() }
    }

    /// Group-wise agreement: same number of groups, each representative
    /// within `tol` of its rational and with the same multiplicity.
    pub fn matches(&self, s: &Spectrum, tol: f64) -> bool {
        self.groups.len() == s.groups.len()
            && self.groups.iter().zip(&s.groups).all(|((v, m), g)| *m == g.mult && (to_f64(v) - g.value).abs() <= tol)
    }
}

impl fmt::Display for ExactSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (v, m)) in self.groups.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{} x{}", display(v), m)?;
        }
        f.write_str("}")
    }
}

fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::from_edge_list(n, &edges).expect("generator produces valid edges")
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return domain("complete graph needs N >= 1");
    }
    complete_multipartite(&vec![1; n])
}

/// Complete multipartite graph whose parts are consecutive blocks of the
/// given sizes.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return domain("parts must be non-empty");
    }
    let n: usize = parts.iter().sum();
    let part: Vec<usize> = parts.iter().enumerate().flat_map(|(i, &s)| std::iter::repeat_n(i, s)).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                edges.push((u, v));
            }
        }
    }
    Ok(build(n, edges))
}

pub fn complete_bipartite(n1: usize, n2: usize) -> Result<Graph> {
    complete_multipartite(&[n1, n2])
}

/// `T(N, k)`: `k` parts of size `N/k`.
pub fn turan(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || n == 0 || !n.is_multiple_of(k) {
        return domain(format!("T({n},{k}) needs k | N with N, k >= 1"));
    }
    complete_multipartite(&vec![n / k; k])
}

/// `m` triangles sharing the hub vertex.
pub fn petal(m: usize) -> Result<Graph> {
    if m == 0 {
        return domain("petal graph needs m >= 1");
    }
    let mut edges = Vec::new();
    for i in 1..=m {
        edges.extend([(0, i), (0, m + i), (i, m + i)]);
    }
    Ok(build(2 * m + 1, edges))
}

/// `K_1 ∨ m·K_{n−1}`: `m` copies of `K_n` sharing vertex 0.
pub fn generalized_petal(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n < 2 {
        return domain("generalized petal needs m >= 1 and n >= 2");
    }
    let size = n - 1;
    let mut edges = Vec::new();
    for c in 0..m {
        let base = 1 + c * size;
        for a in base..base + size {
            edges.push((0, a));
            for b in a + 1..base + size {
                edges.push((a, b));
            }
        }
    }
    Ok(build(1 + m * size, edges))
}

/// `G_{k,θ}^d`: `θ` classes of `k` vertices; `v_{j1}^{i1}` and `v_{j2}^{i2}`
/// are non-adjacent iff `i1 = i2`, or `j1 = j2 ≤ d`.
pub fn g_ktd(k: usize, theta: usize, d: usize) -> Result<Graph> {
    if k == 0 || theta == 0 || d > k {
        return domain(format!("G(k={k}, theta={theta}, d={d}) needs k, theta >= 1 and d <= k"));
    }
    let n = k * theta;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let (i1, j1) = (u / k, u % k);
            let (i2, j2) = (v / k, v % k);
            if i1 != i2 && !(j1 == j2 && j1 < d) {
                edges.push((u, v));
            }
        }
    }
    Ok(build(n, edges))
}

/// Complete multipartite graph with parts `(t, 1, …, 1)` and `χ` parts in all.
pub fn complete_split(t: usize, chi: usize) -> Result<Graph> {
    if t == 0 || chi < 2 {
        return domain("complete split graph needs t >= 1 and chi >= 2");
    }
    let mut parts = vec![1; chi];
    parts[0] = t;
    complete_multipartite(&parts)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return domain("cycle needs n >= 3");
    }
    Ok(build(n, (0..n).map(|i| (i, (i + 1) % n)).collect()))
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return domain("path needs n >= 1");
    }
    Ok(build(n, (1..n).map(|i| (i - 1, i)).collect()))
}

pub fn oracle_spectrum_complete(n: usize) -> Result<ExactSpectrum> {
    if n < 2 {
        return domain("K_1 has an isolated vertex");
    }
    let n = n as i64;
    ExactSpectrum::new([(rat(n, n - 1), n as usize - 1), (int(0), 1)])
}

pub fn oracle_spectrum_bipartite(n1: usize, n2: usize) -> Result<ExactSpectrum> {
    if n1 == 0 || n2 == 0 {
        return domain("both sides must be non-empty");
    }
    ExactSpectrum::new([(int(2), 1), (int(1), n1 + n2 - 2), (int(0), 1)])
}

pub fn oracle_spectrum_turan(n: usize, k: usize) -> Result<ExactSpectrum> {
    if k < 2 || !n.is_multiple_of(k) {
        return domain(format!("T({n},{k}) oracle needs k >= 2 and k | N"));
    }
    let ki = k as i64;
    ExactSpectrum::new([(rat(ki, ki - 1), k - 1), (int(1), n - k), (int(0), 1)])
}

pub fn oracle_spectrum_petal(m: usize) -> Result<ExactSpectrum> {
    if m == 0 {
        return domain("petal graph needs m >= 1");
    }
    ExactSpectrum::new([(rat(3, 2), m + 1), (rat(1, 2), m - 1), (int(0), 1)])
}

/// `{n/(n−1) ×(m(n−2)+1), 1/(n−1) ×(m−1), 0 ×1}`.
pub fn oracle_spectrum_generalized_petal(m: usize, n: usize) -> Result<ExactSpectrum> {
    if m == 0 || n < 2 {
        return domain("generalized petal needs m >= 1 and n >= 2");
    }
    let ni = n as i64;
    ExactSpectrum::new([(rat(ni, ni - 1), m * (n - 2) + 1), (rat(1, ni - 1), m - 1), (int(0), 1)])
}

/// Exact spectrum of `G_{k,θ}^d` for `d = 0`, for `0 < d < k`, and for
/// `d = k ≥ θ` with `kθ > 4`. Other parameters are rejected.
pub fn oracle_spectrum_g_ktd(k: usize, theta: usize, d: usize) -> Result<ExactSpectrum> {
    if k < 2 || theta < 2 || d > k {
        return domain(format!("oracle needs k, theta >= 2 and d <= k, got ({k},{theta},{d})"));
    }
    if d == 0 {
        return oracle_spectrum_turan(k * theta, theta);
    }
    let (ki, ti, di) = (k as i64, theta as i64, d as i64);
    let top_class = (rat(ti, ti - 1), theta - 1);
    let h_value = int(1) - rat(1, (ki - 1) * (ti - 1));
    if d < k {
        return ExactSpectrum::new([
            (rat(ki, ki - 1), d - 1),
            (rat(ki * ki - di, ki * (ki - 1)), 1),
            top_class,
            (int(1), (k - d - 1) * theta),
            (int(1) - rat(ki - di, ki * (ki - 1) * (ti - 1)), theta - 1),
            (h_value, (d - 1) * (theta - 1)),
            (int(0), 1),
        ]);
    }
    if k < theta {
        return domain(format!(
            "no closed form for d = k < theta ({k},{theta},{d}); use G({theta},{k},{theta}), which is isomorphic"
        ));
    }
    if k * theta <= 4 {
        return domain(format!("d = k case needs k*theta > 4, got ({k},{theta},{d})"));
    }
    ExactSpectrum::new([top_class, (rat(ki, ki - 1), k - 1), (h_value, (k - 1) * (theta - 1)), (int(0), 1)])
}

/// Which of the six largest-eigenvalue cases applies to `G_{k,θ}^d`, with
/// the resulting `(λ_max, multiplicity, case)`.
pub fn g_ktd_lambda_max_case(k: usize, theta: usize, d: usize) -> Result<(Rational, usize, u8)> {
    if k < 2 || theta < 2 || d == 0 || d > k {
        return domain(format!("needs k, theta > 1 and 0 < d <= k, got ({k},{theta},{d})"));
    }
    if (k, theta, d) == (2, 2, 2) {
        return domain("k, theta and d must not all equal 2");
    }
    if d == k && k < theta {
        return domain(format!("d = k requires k >= theta, got ({k},{theta},{d})"));
    }
    let (ki, ti) = (k as i64, theta as i64);
    let chi = rat(ti, ti - 1);
    Ok(if theta < k {
        (chi, theta - 1, 1)
    } else if theta == k && d > 1 {
        (chi, theta + d - 2, 2)
    } else if theta == k {
        (chi, theta - 1, 3)
    } else if theta == k + 1 && d == 1 {
        (chi, theta, 4)
    } else if d == 1 {
        (rat(ki + 1, ki), 1, 5)
    } else {
        (rat(ki, ki - 1), d - 1, 6)
    })
}

/// `λ_max = 1 + t/(N−1)` with `N = t + χ − 1`.
pub fn oracle_lambda_max_complete_split(t: usize, chi: usize) -> Result<Rational> {
    if t == 0 || chi < 2 {
        return domain("complete split graph needs t >= 1 and chi >= 2");
    }
    let n = (t + chi - 1) as i64;
    Ok(int(1) + rat(t as i64, n - 1))
}

/// Explicit eigenfunctions of `G_{k,θ}^d` for `0 < d ≤ k`.
pub mod certificates {
    use super::*;
    use crate::spectral::VertexFunction;

    /// One explicit eigenfunction with its claimed eigenvalue.
    #[derive(Clone, Debug)]
    pub struct Certificate {
        pub family: &'static str,
        pub eigenvalue: Rational,
        pub function: VertexFunction,
    }

    /// All functions from the six families, indexed with 1-based `(i, j)`
    /// for `v_j^i`. The two-level function vanishes when `d = k` and is
    /// then left out.
    pub fn g_ktd(g: &Graph, k: usize, theta: usize, d: usize) -> Result<Vec<Certificate>> {
        if k < 2 || theta < 2 || d == 0 || d > k {
            return domain(format!("certificates need k, theta > 1 and 0 < d <= k, got ({k},{theta},{d})"));
        }
        if *g != super::g_ktd(k, theta, d)? {
            return Err(Error::ForeignObject);
        }
        let (ki, ti, di) = (k as i64, theta as i64, d as i64);
        let at = |i: usize, j: usize| (i - 1) * k + (j - 1);
        let n = k * theta;
        let mut out = Vec::new();
        let mut push = |family, eigenvalue, vals: Vec<f64>| -> Result<()> {
            out.push(Certificate { family, eigenvalue, function: VertexFunction::new(g, vals)? });
            Ok(())
        };

        for j in 2..=d {
            let mut f = vec![0.0; n];
            for i in 1..=theta {
                f[at(i, 1)] = 1.0;
                f[at(i, j)] = -1.0;
            }
            push("f'_1j", rat(ki, ki - 1), f)?;
        }
        if d < k {
            let f = (0..n).map(|v| if v % k < d { -(ki * (ki - di)) as f64 } else { (di * (ki - 1)) as f64 }).collect();
            push("two-level", rat(ki * ki - di, ki * (ki - 1)), f)?;
        }
        for i in 2..=theta {
            let mut f = vec![0.0; n];
            for j in 1..=k {
                f[at(1, j)] = 1.0;
                f[at(i, j)] = -1.0;
            }
            push("f_1i", rat(ti, ti - 1), f)?;
        }
        for i in 1..=theta {
            for j in d + 2..=k {
                let mut f = vec![0.0; n];
                f[at(i, d + 1)] = 1.0;
                f[at(i, j)] = -1.0;
                push("f_pair", int(1), f)?;
            }
        }
        if d < k {
            for i in 2..=theta {
                let mut f = vec![0.0; n];
                for j in 1..=k {
                    let x = if j <= d { (ki * (ki - di)) as f64 } else { -(di * (ki - 1)) as f64 };
                    f[at(1, j)] = x;
                    f[at(i, j)] = -x;
                }
                push("g_1i", int(1) - rat(ki - di, ki * (ki - 1) * (ti - 1)), f)?;
            }
        }
        for i in 2..=theta {
            for j in 2..=d {
                let mut f = vec![0.0; n];
                f[at(1, 1)] = 1.0;
                f[at(i, j)] = 1.0;
                f[at(1, j)] = -1.0;
                f[at(i, 1)] = -1.0;
                push("h_ij", int(1) - rat(1, (ki - 1) * (ti - 1)), f)?;
            }
        }
        Ok(out)
    }
}

/// A named family instance, as written on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Multipartite(Vec<usize>),
    Turan(usize, usize),
    Petal(usize),
    GeneralizedPetal(usize, usize),
    Gktd(usize, usize, usize),
    Split(usize, usize),
    Cycle(usize),
    Path(usize),
    /// Disjoint union of `m` copies.
    Copies(usize, Box<Family>),
}

impl Family {
    /// Parses `K_n`, `K_{a,b,…}`, `T(N,k)`, `petal(m)`, `gpetal(m,n)`,
    /// `Gktd(k,t,d)`, `split(t,chi)`, `C_n`, `P_n` and `<m>x<spec>`.
    pub fn parse(spec: &str) -> Result<Family> {
        let s: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::FamilySpec(spec.to_string());
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let list = |t: &str| t.split(',').map(num).collect::<Result<Vec<usize>>>();
        let call = |name: &str, arity: usize| -> Option<Result<Vec<usize>>> {
            let inner = s.strip_prefix(name)?.strip_prefix('(')?.strip_suffix(')')?;
            Some(list(inner).and_then(|v| if v.len() == arity { Ok(v) } else { Err(bad()) }))
        };

        if let Some(pos) = s.find('x') {
            let (count, rest) = (&s[..pos], &s[pos + 1..]);
            if !count.is_empty() && count.bytes().all(|b| b.is_ascii_digit()) {
                return Ok(Family::Copies(num(count)?, Box::new(Family::parse(rest)?)));
            }
        }
        if let Some(rest) = s.strip_prefix("K_") {
            if let Some(inner) = rest.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
                let parts = list(inner)?;
                return Ok(if parts.len() == 1 { Family::Complete(parts[0]) } else { Family::Multipartite(parts) });
            }
            return Ok(Family::Complete(num(rest)?));
        }
        if let Some(rest) = s.strip_prefix("C_") {
            return Ok(Family::Cycle(num(rest)?));
        }
        if let Some(rest) = s.strip_prefix("P_") {
            return Ok(Family::Path(num(rest)?));
        }
        if let Some(v) = call("T", 2) {
            let v = v?;
            return Ok(Family::Turan(v[0], v[1]));
        }
        if let Some(v) = call("petal", 1) {
            return Ok(Family::Petal(v?[0]));
        }
        if let Some(v) = call("gpetal", 2) {
            let v = v?;
            return Ok(Family::GeneralizedPetal(v[0], v[1]));
        }
        if let Some(v) = call("Gktd", 3) {
            let v = v?;
            return Ok(Family::Gktd(v[0], v[1], v[2]));
        }
        if let Some(v) = call("split", 2) {
            let v = v?;
            return Ok(Family::Split(v[0], v[1]));
        }
        Err(bad())
    }

    pub fn graph(&self) -> Result<Graph> {
        match self {
            Family::Complete(n) => complete(*n),
            Family::Multipartite(p) => complete_multipartite(p),
            Family::Turan(n, k) => turan(*n, *k),
            Family::Petal(m) => petal(*m),
            Family::GeneralizedPetal(m, n) => generalized_petal(*m, *n),
            Family::Gktd(k, t, d) => g_ktd(*k, *t, *d),
            Family::Split(t, chi) => complete_split(*t, *chi),
            Family::Cycle(n) => cycle(*n),
            Family::Path(n) => path(*n),
            Family::Copies(m, inner) => {
                if *m == 0 {
                    return domain("need at least one copy");
                }
                let one = inner.graph()?;
                Ok((1..*m).fold(one.clone(), |acc, _| acc.disjoint_union(&one)))
            }
        }
    }

    /// The exact spectrum when the family has a closed form and the
    /// parameters are in its domain.
    pub fn oracle(&self) -> Option<ExactSpectrum> {
        match self {
            Family::Complete(n) => oracle_spectrum_complete(*n).ok(),
            Family::Multipartite(p) if p.len() == 2 => oracle_spectrum_bipartite(p[0], p[1]).ok(),
            Family::Multipartite(p) if p.iter().all(|&s| s == p[0]) => {
                oracle_spectrum_turan(p[0] * p.len(), p.len()).ok()
            }
            Family::Turan(n, k) => oracle_spectrum_turan(*n, *k).ok(),
            Family::Petal(m) => oracle_spectrum_petal(*m).ok(),
            Family::GeneralizedPetal(m, n) => oracle_spectrum_generalized_petal(*m, *n).ok(),
            Family::Gktd(k, t, d) => oracle_spectrum_g_ktd(*k, *t, *d).ok(),
            Family::Copies(m, inner) if *m > 0 => inner.oracle().map(|s| s.repeated(*m)),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "K_{n}"),
            Family::Multipartite(p) => {
                let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                write!(f, "K_{{{}}}", parts.join(","))
            }
            Family::Turan(n, k) => write!(f, "T({n},{k})"),
            Family::Petal(m) => write!(f, "petal({m})"),
            Family::GeneralizedPetal(m, n) => write!(f, "gpetal({m},{n})"),
            Family::Gktd(k, t, d) => write!(f, "Gktd({k},{t},{d})"),
            Family::Split(t, chi) => write!(f, "split({t},{chi})"),
            Family::Cycle(n) => write!(f, "C_{n}"),
            Family::Path(n) => write!(f, "P_{n}"),
            Family::Copies(m, inner) => write!(f, "{m}x{inner}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{spectrum, GROUPING_TOL};

    fn spec(groups: &[(i64, i64, usize)]) -> ExactSpectrum {
        ExactSpectrum::new(groups.iter().map(|&(p, q, m)| (rat(p, q), m))).unwrap()
    }

    fn numeric(g: &Graph) -> Spectrum {
        spectrum(g, GROUPING_TOL).unwrap()
    }

    #[test]
    fn generators() {
        assert_eq!(turan(9, 3).unwrap(), complete_multipartite(&[3, 3, 3]).unwrap());
        assert_eq!(petal(1).unwrap(), complete(3).unwrap());
        let star = complete_bipartite(4, 1).unwrap();
        assert_eq!(star.degrees(), vec![1, 1, 1, 1, 4]);
        assert!(turan(10, 3).is_err());

        let bowtie = generalized_petal(2, 3).unwrap();
        assert_eq!((bowtie.n(), bowtie.edge_count()), (5, 6));
        assert_eq!(generalized_petal(1, 5).unwrap(), complete(5).unwrap());
        let kite = generalized_petal(4, 4).unwrap();
        assert_eq!((kite.n(), kite.degree(0)), (13, 12));

        let p = petal(3).unwrap();
        assert!(p.adjacent(1, 4) && p.adjacent(0, 6) && !p.adjacent(1, 2));
        assert_eq!(complete_split(4, 3).unwrap().n(), 6);
    }

    #[test]
    fn g_ktd_structure() {
        for (k, t) in [(2, 3), (3, 3), (4, 2)] {
            assert_eq!(g_ktd(k, t, 0).unwrap(), turan(k * t, t).unwrap());
        }
        let g = g_ktd(2, 3, 1).unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 9));
        // v_1^1 = 0 misses v_1^2 = 2; v_2^1 = 1 sees v_2^2 = 3
        assert!(!g.adjacent(0, 2) && g.adjacent(1, 3) && !g.adjacent(0, 1));

        // G(k,θ,k) ≅ G(θ,k,θ) under v_j^i ↦ v_i^j
        for (k, t) in [(2, 3), (3, 4), (4, 2), (5, 3)] {
            let a = g_ktd(k, t, k).unwrap();
            let b = g_ktd(t, k, t).unwrap();
            let perm: Vec<usize> = (0..k * t).map(|v| (v % k) * t + v / k).collect();
            assert_eq!(a.permute(&perm).unwrap(), b);
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(oracle_spectrum_complete(5).unwrap(), spec(&[(5, 4, 4), (0, 1, 1)]));
        assert_eq!(oracle_spectrum_bipartite(3, 2).unwrap(), spec(&[(2, 1, 1), (1, 1, 3), (0, 1, 1)]));
        assert_eq!(oracle_spectrum_petal(6).unwrap(), spec(&[(3, 2, 7), (1, 2, 5), (0, 1, 1)]));
        assert_eq!(
            oracle_spectrum_g_ktd(4, 3, 2).unwrap(),
            spec(&[(4, 3, 1), (7, 6, 1), (3, 2, 2), (1, 1, 3), (11, 12, 2), (5, 6, 2), (0, 1, 1)])
        );
        assert_eq!(oracle_spectrum_g_ktd(3, 3, 3).unwrap(), spec(&[(3, 2, 4), (3, 4, 4), (0, 1, 1)]));
        // 1 − (k−d)/(k(k−1)(θ−1)) = 3/4 at (2,3,1); the h-family is empty
        assert_eq!(oracle_spectrum_g_ktd(2, 3, 1).unwrap(), spec(&[(3, 2, 3), (3, 4, 2), (0, 1, 1)]));
        assert!(oracle_spectrum_g_ktd(2, 3, 2).is_err());
        assert!(oracle_spectrum_g_ktd(2, 2, 2).is_err());
        assert_eq!(oracle_spectrum_g_ktd(3, 2, 0).unwrap(), oracle_spectrum_turan(6, 2).unwrap());
    }

    #[test]
    fn oracles_agree_with_eigensolver_on_examples() {
        for (k, t, d) in [(4, 3, 2), (2, 3, 1), (3, 3, 3), (3, 2, 3), (5, 3, 4)] {
            let g = g_ktd(k, t, d).unwrap();
            let o = oracle_spectrum_g_ktd(k, t, d).unwrap();
            assert!(o.matches(&numeric(&g), 1e-8), "({k},{t},{d}): {o}");
        }
        for (m, n) in [(2, 3), (4, 4), (3, 2), (1, 6)] {
            let o = oracle_spectrum_generalized_petal(m, n).unwrap();
            assert!(o.matches(&numeric(&generalized_petal(m, n).unwrap()), 1e-8));
        }
    }

    #[test]
    fn lambda_max_cases() {
        assert_eq!(g_ktd_lambda_max_case(4, 3, 2).unwrap(), (rat(3, 2), 2, 1));
        assert_eq!(g_ktd_lambda_max_case(2, 5, 1).unwrap(), (rat(3, 2), 1, 5));
        assert_eq!(g_ktd_lambda_max_case(3, 3, 2).unwrap(), (rat(3, 2), 3, 2));
        assert_eq!(g_ktd_lambda_max_case(3, 3, 1).unwrap().2, 3);
        assert_eq!(g_ktd_lambda_max_case(2, 3, 1).unwrap(), (rat(3, 2), 3, 4));
        assert_eq!(g_ktd_lambda_max_case(3, 5, 2).unwrap(), (rat(3, 2), 1, 6));
        assert!(g_ktd_lambda_max_case(2, 2, 2).is_err());
        assert!(g_ktd_lambda_max_case(2, 3, 2).is_err());
        assert!(g_ktd_lambda_max_case(3, 3, 0).is_err());
    }

    #[test]
    fn complete_split_lambda_max() {
        assert_eq!(oracle_lambda_max_complete_split(4, 3).unwrap(), rat(9, 5));
        for chi in 2..7 {
            assert_eq!(oracle_lambda_max_complete_split(1, chi).unwrap(), rat(chi as i64, chi as i64 - 1));
        }
        let seq: Vec<f64> =
            [10, 100, 1000].iter().map(|&t| to_f64(&oracle_lambda_max_complete_split(t, 3).unwrap())).collect();
        assert!(seq[0] < seq[1] && seq[1] < seq[2] && seq[2] < 2.0 && 2.0 - seq[2] < 1e-2);
    }

    #[test]
    fn merging_and_validation() {
        let s = ExactSpectrum::new([(rat(3, 2), 2), (int(0), 1), (rat(6, 4), 2), (int(1), 0)]).unwrap();
        assert_eq!(s.groups(), &[(int(0), 1), (rat(3, 2), 4)]);
        assert_eq!(s.n(), 5);
        assert!(ExactSpectrum::new([(rat(5, 2), 1)]).is_err());
        assert_eq!(s.to_string(), "{0 x1, 3/2 x4}");
    }

    #[test]
    fn certificates_are_eigenfunctions() {
        use crate::spectral::{verify_eigenpair, VERIFY_TOL};
        for (k, t, d) in [(4, 3, 2), (2, 3, 1), (3, 3, 3), (5, 2, 3)] {
            let g = g_ktd(k, t, d).unwrap();
            let certs = certificates::g_ktd(&g, k, t, d).unwrap();
            assert_eq!(certs.len(), k * t - 1);
            for c in &certs {
                let r = verify_eigenpair(&g, to_f64(&c.eigenvalue), &c.function, VERIFY_TOL).unwrap();
                assert!(r.valid, "{} at ({k},{t},{d}): residual {}", c.family, r.residual);
            }
        }
    }

    #[test]
    fn family_specs() {
        let cases = [
            ("K_5", Family::Complete(5)),
            ("K_{3,2}", Family::Multipartite(vec![3, 2])),
            ("T(9,3)", Family::Turan(9, 3)),
            ("petal(4)", Family::Petal(4)),
            ("gpetal(2, 3)", Family::GeneralizedPetal(2, 3)),
            ("Gktd(4,3,2)", Family::Gktd(4, 3, 2)),
            ("split(4,3)", Family::Split(4, 3)),
            ("C_7", Family::Cycle(7)),
            ("P_3", Family::Path(3)),
            ("3xK_4", Family::Copies(3, Box::new(Family::Complete(4)))),
        ];
        for (s, f) in cases {
            let parsed = Family::parse(s).unwrap();
            assert_eq!(parsed, f, "{s}");
            assert_eq!(Family::parse(&parsed.to_string()).unwrap(), f);
        }
        for bad in ["", "K_", "T(9)", "petal(x)", "foo(1)", "Gktd(1,2)"] {
            assert!(matches!(Family::parse(bad), Err(Error::FamilySpec(_))), "{bad}");
        }
        let g = Family::parse("2xK_3").unwrap();
        assert_eq!(g.graph().unwrap().n(), 6);
        assert_eq!(g.oracle().unwrap(), spec(&[(3, 2, 4), (0, 1, 2)]));
        assert!(Family::parse("C_5").unwrap().oracle().is_none());
    }
}
