//! Exhaustive search over small connected graphs.
//!
//! Every connected graph on `n ≥ 2` vertices has a vertex whose removal
//! leaves it connected, so level `n` is produced by attaching a new vertex
//! to every nonempty subset of every connected graph on `n − 1` vertices,
//! and isomorphic copies are merged by canonical code.

use serde::Serialize;

use crate::bounds::BOUND_TOL;
use crate::coloring::chromatic_number;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::Graph;
use crate::rational::{chi_ratio, to_f64};
use crate::spectral::spectrum;

pub const SEARCH_CAP: usize = 9;

/// Largest order whose upper triangle fits in a `u64` code.
pub const CANONICAL_CAP: usize = 11;

fn pair_bit(p: usize, q: usize) -> u32 {
    // (0,1), (0,2), (1,2), (0,3), …
    (q * (q - 1) / 2 + p) as u32
}

/// Upper-triangle code of `g` with position `p` holding vertex `order[p]`.
fn code_for(g: &Graph, order: &[usize]) -> u64 {
    let mut code = 0u64;
    for q in 1..order.len() {
        for p in 0..q {
            if g.adjacent(order[p], order[q]) {
                code |= 1 << pair_bit(p, q);
            }
        }
    }
    code
}

/// Rebuilds the graph a code describes.
pub fn from_code(n: usize, code: u64) -> Result<Graph> {
    if n > CANONICAL_CAP {
        return Err(Error::SizeCap { what: "canonical code", n, cap: CANONICAL_CAP });
    }
    let mut edges = Vec::new();
    for q in 1..n {
        for p in 0..q {
            if code >> pair_bit(p, q) & 1 == 1 {
                edges.push((p, q));
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// Splits cells by neighbor counts into every cell until nothing changes.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let k = cells.len();
        let mut next = Vec::with_capacity(k);
        for c in cells.iter() {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = c
                .iter()
                .map(|&v| {
                    let mut sig = vec![0usize; k];
                    for &w in g.neighbors(v) {
                        sig[cell_of[w]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|x| x.1).collect());
                    start = i;
                }
            }
        }
        let done = next.len() == k;
        *cells = next;
        if done {
            return;
        }
    }
}

fn search_leaves(g: &Graph, cells: Vec<Vec<usize>>, best: &mut u64) {
    let Some(target) =
        cells.iter().enumerate().filter(|(_, c)| c.len() > 1).min_by_key(|(i, c)| (c.len(), *i)).map(|(i, _)| i)
    else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        *best = (*best).max(code_for(g, &order));
        return;
    };
    let cell = &cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        // swapping twins or duplicates is an automorphism fixing the partition
        if tried.iter().any(|&w| same_type(g, v, w)) {
            continue;
        }
        tried.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(vec![v]);
        next.push(cell.iter().copied().filter(|&x| x != v).collect());
        next.extend_from_slice(&cells[target + 1..]);
        refine(g, &mut next);
        search_leaves(g, next, best);
    }
}

fn same_type(g: &Graph, v: usize, w: usize) -> bool {
    g.classify_pair(v, w).map(|k| k != crate::graph::PairKind::Neither).unwrap_or(false)
}

/// Isomorphism-invariant code: the largest upper-triangle code over the
/// leaves of the individualization-refinement tree. Two graphs of the same
/// order are isomorphic exactly when their codes agree.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    if g.n() > CANONICAL_CAP {
        return Err(Error::SizeCap { what: "canonical code", n: g.n(), cap: CANONICAL_CAP });
    }
    let mut cells = vec![(0..g.n()).collect()];
    refine(g, &mut cells);
    let mut best = 0;
    search_leaves(g, cells, &mut best);
    Ok(best)
}

pub fn canonical_form(g: &Graph) -> Result<Graph> {
    from_code(g.n(), canonical_code(g)?)
}

/// Sorted canonical codes of all connected graphs on `2..=max_n` vertices,
/// one vector per order.
pub fn connected_codes(max_n: usize, exec: Execution) -> Result<Vec<(usize, Vec<u64>)>> {
    if max_n > SEARCH_CAP {
        return Err(Error::SizeCap { what: "search", n: max_n, cap: SEARCH_CAP });
    }
    let mut levels = Vec::new();
    if max_n < 2 {
        return Ok(levels);
    }
    let mut current = vec![1u64];
    levels.push((2, current.clone()));
    for n in 3..=max_n {
        let parent_n = n - 1;
        let chunks = exec.map(&current, |&code| {
            let parent = from_code(parent_n, code).expect("stored code is valid");
            let base: Vec<(usize, usize)> = parent.edges().collect();
            (1u32..1 << parent_n)
                .map(|mask| {
                    let mut edges = base.clone();
                    edges.extend((0..parent_n).filter(|&i| mask >> i & 1 == 1).map(|i| (i, parent_n)));
                    let g = Graph::from_edge_list(n, &edges).expect("valid augmentation");
                    canonical_code(&g).expect("under cap")
                })
                .collect::<Vec<u64>>()
        });
        let mut next: Vec<u64> = chunks.into_iter().flatten().collect();
        next.sort_unstable();
        next.dedup();
        levels.push((n, next.clone()));
        current = next;
    }
    Ok(levels)
}

/// Multiplicity target: absolute, or `N − k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultTarget {
    Exactly(usize),
    OrderMinus(usize),
}

impl MultTarget {
    fn resolve(self, n: usize) -> Option<usize> {
        match self {
            MultTarget::Exactly(m) => Some(m),
            MultTarget::OrderMinus(k) => n.checked_sub(k),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicate {
    Sharp,
    SharpMult(MultTarget),
}

impl Predicate {
    /// `sharp`, `sharp-mult=3` or `sharp-mult=N-2`.
    pub fn parse(text: &str) -> Result<Predicate> {
        let bad =
            || Error::Domain(format!("unknown predicate {text:?}; expected sharp, sharp-mult=K or sharp-mult=N-K"));
        let t = text.trim();
        if t == "sharp" {
            return Ok(Predicate::Sharp);
        }
        let rest = t.strip_prefix("sharp-mult=").ok_or_else(bad)?.replace(' ', "");
        let target = match rest.strip_prefix("N-").or_else(|| rest.strip_prefix("n-")) {
            Some(k) => MultTarget::OrderMinus(k.parse().map_err(|_| bad())?),
            None => MultTarget::Exactly(rest.parse().map_err(|_| bad())?),
        };
        Ok(Predicate::SharpMult(target))
    }
}

impl std::fmt::Display for Predicate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Predicate::Sharp => write!(f, "sharp"),
            Predicate::SharpMult(MultTarget::Exactly(m)) => write!(f, "sharp-mult={m}"),
            Predicate::SharpMult(MultTarget::OrderMinus(k)) => write!(f, "sharp-mult=N-{k}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchHit {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub chi: usize,
    pub lambda: f64,
    pub mult: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LevelCount {
    pub n: usize,
    pub graphs: usize,
    pub hits: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchResult {
    pub max_n: usize,
    pub predicate: String,
    pub levels: Vec<LevelCount>,
    pub hits: Vec<SearchHit>,
}

impl SearchResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        use std::fmt::Write as _;
        let mut out = format!("search {} up to n = {}\n", self.predicate, self.max_n);
        for l in &self.levels {
            let _ = writeln!(out, "  n = {}: {} connected graphs, {} hits", l.n, l.graphs, l.hits);
        }
        for h in &self.hits {
            let edges: Vec<String> = h.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
            let _ = writeln!(
                out,
                "n={} chi={} lambda={} mult={} edges: {}",
                h.n,
                h.chi,
                crate::bounds::sig12(h.lambda),
                h.mult,
                edges.join(" ")
            );
        }
        out
    }
}

/// Scans all connected graphs with `2 ≤ n ≤ max_n`. Hits are ordered by
/// order and then canonical code.
pub fn search(max_n: usize, predicate: Predicate, exec: Execution) -> Result<SearchResult> {
    search_with_tol(max_n, predicate, BOUND_TOL, exec)
}

/// [`search`] with `tol` for sharpness and eigenvalue grouping.
pub fn search_with_tol(max_n: usize, predicate: Predicate, tol: f64, exec: Execution) -> Result<SearchResult> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let levels = connected_codes(max_n, exec)?;
    let mut counts = Vec::new();
    let mut hits = Vec::new();
    for (n, codes) in levels {
        let found = exec.map(&codes, |&code| -> Result<Option<SearchHit>> {
            let g = from_code(n, code)?;
            let chi = chromatic_number(&g)?;
            let spec = spectrum(&g, tol)?;
            let (lambda, mult) = spec.largest_eigenvalue();
            if (lambda - to_f64(&chi_ratio(chi))).abs() > tol {
                return Ok(None);
            }
            let keep = match predicate {
                Predicate::Sharp => true,
                Predicate::SharpMult(t) => t.resolve(n) == Some(mult),
            };
            Ok(keep.then(|| SearchHit { n, edges: g.edges().collect(), chi, lambda, mult }))
        });
        let level_hits: Vec<SearchHit> = found.into_iter().collect::<Result<Vec<_>>>()?.into_iter().flatten().collect();
        counts.push(LevelCount { n, graphs: codes.len(), hits: level_hits.len() });
        hits.extend(level_hits);
    }
    Ok(SearchResult { max_n, predicate: predicate.to_string(), levels: counts, hits })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use proptest::prelude::*;

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn brute_code(g: &Graph, perms: &[Vec<usize>]) -> u64 {
        perms.iter().map(|p| code_for(g, p)).max().unwrap()
    }

    fn graphs_from_mask(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        (0u64..1 << pairs.len()).map(move |m| {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &e)| e).collect();
            Graph::from_edge_list(n, &edges).unwrap()
        })
    }

    #[test]
    fn canonical_code_agrees_with_exhaustive_permutation() {
        for n in 1..=5 {
            let perms = all_permutations(n);
            let mut pairs = Vec::new();
            for g in graphs_from_mask(n) {
                pairs.push((canonical_code(&g).unwrap(), brute_code(&g, &perms)));
            }
            // fast codes are invariant and separate exactly the brute-force classes
            for a in &pairs {
                for b in &pairs {
                    assert_eq!(a.0 == b.0, a.1 == b.1, "n = {n}");
                }
            }
        }
    }

    #[test]
    fn levels_match_bitmask_enumeration() {
        let levels = connected_codes(6, Execution::Parallel).unwrap();
        let counts: Vec<usize> = levels.iter().map(|(_, c)| c.len()).collect();
        assert_eq!(counts, vec![1, 2, 6, 21, 112]);
        for (n, codes) in levels {
            let mut brute: Vec<u64> =
                graphs_from_mask(n).filter(Graph::is_connected).map(|g| canonical_code(&g).unwrap()).collect();
            brute.sort_unstable();
            brute.dedup();
            assert_eq!(brute, codes);
        }
    }

    #[test]
    fn sharp_mult_order_minus_one_is_complete_graph() {
        let r = search(5, Predicate::parse("sharp-mult=N-1").unwrap(), Execution::Parallel).unwrap();
        assert_eq!(r.hits.len(), 4);
        for h in &r.hits {
            assert_eq!(h.edges.len(), h.n * (h.n - 1) / 2);
        }
    }

    #[test]
    fn predicates_and_caps() {
        assert_eq!(Predicate::parse("sharp").unwrap(), Predicate::Sharp);
        assert_eq!(Predicate::parse("sharp-mult=3").unwrap(), Predicate::SharpMult(MultTarget::Exactly(3)));
        assert_eq!(Predicate::parse("sharp-mult=N-2").unwrap().to_string(), "sharp-mult=N-2");
        assert!(Predicate::parse("blunt").is_err());
        assert!(matches!(search(10, Predicate::Sharp, Execution::Sequential), Err(Error::SizeCap { .. })));
        let k4 = families::complete(4).unwrap();
        assert_eq!(from_code(4, canonical_code(&k4).unwrap()).unwrap(), k4);
    }

    proptest! {
        #[test]
        fn code_is_relabeling_invariant(
            (n, perm) in (2usize..=9).prop_flat_map(|n| (Just(n), Just((0..n).collect::<Vec<_>>()).prop_shuffle())),
            mask in any::<u64>(),
        ) {
            let g = from_code(n, mask & ((1u64 << (n * (n - 1) / 2)) - 1)).unwrap();
            let h = g.permute(&perm).unwrap();
            prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
            prop_assert_eq!(canonical_form(&g).unwrap().edge_count(), g.edge_count());
        }
    }
}
