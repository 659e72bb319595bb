//! Lower and upper bounds linking `λ_max` of the normalized Laplacian to the
//! chromatic number, and a per-graph report that evaluates all of them.

use std::fmt::Write as _;

use serde::Serialize;

use crate::coloring::{
    chromatic_number, enumerate_chi_colorings_limited, is_equitable_a, is_equitable_dinva, is_proper, Coloring,
    CHROMATIC_CAP, ENUMERATION_CAP,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, PairKind, VertexSubset};
use crate::rational::{chi_ratio, display, int, rat, to_f64, Rational};
use crate::spectral::{adjacency_extremes, spectrum, GROUPING_TOL};

/// Tolerance for every bound comparison and sharpness decision.
pub const BOUND_TOL: f64 = 1e-8;
/// Colorings examined by [`full_report`] before it reports a partial result.
pub const REPORT_COLORING_LIMIT: usize = 10_000;

/// A bound value, or the reason its hypotheses fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundOutcome {
    Value(Rational),
    Inapplicable(String),
}

impl BoundOutcome {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            BoundOutcome::Value(v) => Some(v),
            BoundOutcome::Inapplicable(_) => None,
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        self.value().map(to_f64)
    }

    fn reason(&self) -> Option<String> {
        match self {
            BoundOutcome::Value(_) => None,
            BoundOutcome::Inapplicable(r) => Some(r.clone()),
        }
    }
}

/// `λ/(λ−1)`, a lower bound on `χ` for `λ = λ_max > 1`.
pub fn chromatic_lower_bound_from_spectrum(lambda_max: f64) -> Result<f64> {
    if lambda_max.is_nan() || lambda_max <= 1.0 {
        return Err(Error::Domain(format!("need lambda_max > 1, got {lambda_max}")));
    }
    Ok(lambda_max / (lambda_max - 1.0))
}

/// Hoffman's bound `χ ≥ 1 − μ_max/μ_min` from the adjacency spectrum.
pub fn hoffman_bound(g: &Graph) -> Result<f64> {
    if g.edge_count() == 0 {
        return Err(Error::Domain("edgeless graph: smallest adjacency eigenvalue is 0".into()));
    }
    let (lo, hi) = adjacency_extremes(g)?;
    Ok(1.0 - hi / lo)
}

fn require_chi_coloring(g: &Graph, c: &Coloring) -> Result<usize> {
    if !is_proper(g, c)? {
        let (u, v) = g.edges().find(|&(u, v)| c.color(u) == c.color(v)).expect("improper coloring has a bad edge");
        return Err(Error::ImproperColoring(u, v));
    }
    let chi = chromatic_number(g)?;
    if c.k() != chi {
        return Err(Error::ChiMismatch { expected: chi, got: c.k() });
    }
    Ok(chi)
}

/// Bounds on the multiplicity of `χ/(χ−1)` for a graph where it is the top
/// eigenvalue, from disjoint sets of pairwise duplicate vertices `D_i` and
/// pairwise twin vertices `T_i`:
///
/// `Σ(|T_i| − 1) + χ − max(y, 1) ≤ m ≤ N − Σ|D_i| + #D − 1`,
///
/// where `y` is the number of colour classes of `c` meeting `∪T_i`.
pub fn multiplicity_bounds_from_structure(
    g: &Graph,
    c: &Coloring,
    duplicates: &[VertexSubset],
    twins: &[VertexSubset],
) -> Result<(usize, usize)> {
    let chi = require_chi_coloring(g, c)?;
    let top = *spectrum(g, GROUPING_TOL)?.eigenvalues.last().expect("non-empty graph");
    let gap = top - to_f64(&chi_ratio(chi));
    if gap.abs() > BOUND_TOL {
        return Err(Error::NotSharp { gap });
    }

    let mut owner = vec![false; g.n()];
    for set in duplicates.iter().chain(twins) {
        if set.parent() != g.fingerprint() {
            return Err(Error::ForeignObject);
        }
        for v in set.iter() {
            if std::mem::replace(&mut owner[v], true) {
                return Err(Error::OverlappingSubsets(v));
            }
        }
    }
    for (sets, kind) in [(duplicates, PairKind::Duplicate), (twins, PairKind::Twin)] {
        for set in sets {
            let m = set.members();
            for (a, &v) in m.iter().enumerate() {
                for &w in &m[a + 1..] {
                    if g.classify_pair(v, w)? != kind {
                        return Err(Error::Structure(format!("{v} and {w} are not {kind:?} vertices")));
                    }
                }
            }
        }
    }

    let mut touched = vec![false; chi];
    for v in twins.iter().flat_map(|s| s.iter()) {
        touched[c.color(v)] = true;
    }
    let y = touched.iter().filter(|&&t| t).count();
    let twin_part: usize = twins.iter().map(|s| s.len().saturating_sub(1)).sum();
    let lower = twin_part + chi - y.max(1);
    let dup_total: usize = duplicates.iter().map(VertexSubset::len).sum();
    let upper = g.n() + duplicates.len() - dup_total - 1;
    Ok((lower, upper))
}

/// Maximal classes of pairwise twin vertices and of pairwise duplicate
/// vertices with at least two members, as `(duplicates, twins)`.
pub fn twin_duplicate_classes(g: &Graph) -> (Vec<VertexSubset>, Vec<VertexSubset>) {
    let mut dup_of = vec![usize::MAX; g.n()];
    let mut twin_of = vec![usize::MAX; g.n()];
    let mut dups: Vec<Vec<usize>> = Vec::new();
    let mut twins: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.n() {
        for w in v + 1..g.n() {
            let (slot, groups) = match g.classify_pair(v, w).expect("vertices in range") {
                PairKind::Duplicate => (&mut dup_of, &mut dups),
                PairKind::Twin => (&mut twin_of, &mut twins),
                PairKind::Neither => continue,
            };
            if slot[w] != usize::MAX {
                continue;
            }
            if slot[v] == usize::MAX {
                slot[v] = groups.len();
                groups.push(vec![v]);
            }
            slot[w] = slot[v];
            groups[slot[v]].push(w);
        }
    }
    let to_subsets =
        |gs: Vec<Vec<usize>>| gs.into_iter().map(|s| VertexSubset::new(g, s).expect("valid vertices")).collect();
    (to_subsets(dups), to_subsets(twins))
}

/// `N/δ` when `c` is a proper `χ`-coloring with all classes of equal size.
pub fn upper_bound_equal_classes(g: &Graph, c: &Coloring) -> Result<BoundOutcome> {
    let chi = require_chi_coloring(g, c)?;
    if !g.n().is_multiple_of(chi) || c.classes().iter().any(|cl| cl.len() != g.n() / chi) {
        return Ok(BoundOutcome::Inapplicable("coloring classes differ in size".into()));
    }
    let delta = g.min_degree();
    if delta == 0 {
        return Err(Error::IsolatedVertex(g.isolated_vertex().expect("min degree 0")));
    }
    Ok(BoundOutcome::Value(rat(g.n() as i64, delta as i64)))
}

/// `(1/x)·N/(N − N_1)` with `N_1` the largest class and
/// `x = min_v deg v / (N − N_{c(v)})`, for a proper `χ`-coloring.
pub fn upper_bound_general(g: &Graph, c: &Coloring) -> Result<Rational> {
    require_chi_coloring(g, c)?;
    if c.k() < 2 {
        return Err(Error::Domain("needs at least two colour classes".into()));
    }
    let sizes: Vec<i64> = c.classes().iter().map(|cl| cl.len() as i64).collect();
    let n = g.n() as i64;
    let x = (0..g.n()).map(|v| rat(g.degree(v) as i64, n - sizes[c.color(v)])).min().expect("non-empty graph");
    if x == int(0) {
        return Err(Error::IsolatedVertex(g.isolated_vertex().expect("min degree 0")));
    }
    let n1 = *sizes.iter().max().expect("k >= 2");
    Ok(rat(n, n - n1) / x)
}

/// `max{(N/d)(χ−1)/χ, χ/(χ−1)}` for a `d`-regular graph whose `χ`-coloring
/// `c` is equitable with respect to `D⁻¹A`.
pub fn upper_bound_regular_equitable(g: &Graph, c: &Coloring) -> Result<BoundOutcome> {
    let chi = require_chi_coloring(g, c)?;
    let Some(d) = g.regular_degree() else {
        return Ok(BoundOutcome::Inapplicable("graph is not regular".into()));
    };
    if d == 0 {
        return Err(Error::IsolatedVertex(0));
    }
    if !is_equitable_dinva(g, c)? {
        return Ok(BoundOutcome::Inapplicable("coloring is not equitable".into()));
    }
    let chi_i = chi as i64;
    let spread = rat(g.n() as i64 * (chi_i - 1), d as i64 * chi_i);
    Ok(BoundOutcome::Value(spread.max(chi_ratio(chi))))
}

#[derive(Clone, Debug, Serialize)]
pub struct LambdaMax {
    pub value: f64,
    pub mult: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChiLowerBound {
    /// `χ/(χ−1)` as a float and as an exact fraction.
    pub value: f64,
    pub exact: String,
    /// `λ_max − χ/(χ−1)`.
    pub gap: f64,
    pub sharp: bool,
    /// Multiplicity of `χ/(χ−1)` in the spectrum (0 unless sharp).
    pub mult: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct HoffmanEntry {
    pub value: f64,
    /// For regular graphs this bound agrees with the normalized one.
    pub regular: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct UpperBoundEntry {
    pub name: &'static str,
    pub value: Option<f64>,
    pub exact: Option<String>,
    pub applicable: bool,
    /// `λ_max ≤ value + tol`; `None` when inapplicable.
    pub satisfied: Option<bool>,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MultiplicityEntry {
    pub lower: usize,
    pub upper: usize,
    pub measured: usize,
    pub duplicate_sets: Vec<Vec<usize>>,
    pub twin_sets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EquitableEntry {
    /// Number of `χ`-colorings examined.
    pub colorings: usize,
    /// All `χ`-colorings were examined.
    pub complete: bool,
    pub dinva_all: bool,
    pub dinva_any: bool,
    pub a_all: bool,
    pub a_any: bool,
}

/// Everything [`full_report`] computes for one graph.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub schema: u32,
    pub n: usize,
    pub edges: usize,
    pub connected: bool,
    pub chi: Option<usize>,
    pub lambda_max: LambdaMax,
    pub chi_from_spectrum: f64,
    pub lower_bound: Option<ChiLowerBound>,
    pub hoffman: Option<HoffmanEntry>,
    pub upper_bounds: Vec<UpperBoundEntry>,
    pub multiplicity_bounds: Option<MultiplicityEntry>,
    pub equitable: Option<EquitableEntry>,
    pub omissions: Vec<String>,
}

fn upper_entry(name: &'static str, outcome: Result<BoundOutcome>, lambda: f64, tol: f64) -> UpperBoundEntry {
    let outcome = outcome.unwrap_or_else(|e| BoundOutcome::Inapplicable(e.to_string()));
    let value = outcome.as_f64();
    UpperBoundEntry {
        name,
        value,
        exact: outcome.value().map(display),
        applicable: value.is_some(),
        satisfied: value.map(|v| lambda <= v + tol),
        reason: outcome.reason(),
    }
}

/// Evaluates every bound on a connected graph. Parts whose solvers exceed
/// their size caps are left out and listed under `omissions`.
pub fn full_report(g: &Graph) -> Result<BoundReport> {
    full_report_with_tol(g, BOUND_TOL)
}

/// [`full_report`] with `tol` for eigenvalue grouping, sharpness and the
/// upper-bound comparisons.
pub fn full_report_with_tol(g: &Graph, tol: f64) -> Result<BoundReport> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let spec = spectrum(g, tol)?;
    let (lambda, mult) = spec.largest_eigenvalue();
    let mut omissions = Vec::new();

    let hoffman = match hoffman_bound(g) {
        Ok(value) => Some(HoffmanEntry { value, regular: g.regular_degree().is_some() }),
        Err(e) => {
            omissions.push(format!("hoffman: {e}"));
            None
        }
    };
    let chi_from_spectrum = chromatic_lower_bound_from_spectrum(lambda).unwrap_or(f64::INFINITY);

    let mut report = BoundReport {
        schema: 1,
        n: g.n(),
        edges: g.edge_count(),
        connected: true,
        chi: None,
        lambda_max: LambdaMax { value: lambda, mult },
        chi_from_spectrum,
        lower_bound: None,
        hoffman,
        upper_bounds: Vec::new(),
        multiplicity_bounds: None,
        equitable: None,
        omissions,
    };
    if g.n() > CHROMATIC_CAP {
        report.omissions.push(format!("chromatic number: n = {} exceeds cap {CHROMATIC_CAP}", g.n()));
        return Ok(report);
    }
    let chi = chromatic_number(g)?;
    report.chi = Some(chi);
    let ratio = chi_ratio(chi);
    let gap = lambda - to_f64(&ratio);
    let sharp = gap.abs() <= tol;
    report.lower_bound = Some(ChiLowerBound {
        value: to_f64(&ratio),
        exact: display(&ratio),
        gap,
        sharp,
        mult: spec.multiplicity_of(to_f64(&ratio)),
    });

    let colorings = if g.n() <= ENUMERATION_CAP {
        let (all, complete) = enumerate_chi_colorings_limited(g, chi, REPORT_COLORING_LIMIT)?;
        if !complete {
            report.omissions.push(format!("equitability: stopped after {REPORT_COLORING_LIMIT} colorings"));
        }
        report.equitable = Some(equitable_summary(g, &all, complete)?);
        all
    } else {
        report.omissions.push(format!("coloring enumeration: n = {} exceeds cap {ENUMERATION_CAP}", g.n()));
        let c = crate::coloring::optimal_coloring(g)?;
        report.equitable = Some(equitable_summary(g, std::slice::from_ref(&c), false)?);
        vec![c]
    };

    // the best applicable value over the examined colorings
    let pick = |f: &dyn Fn(&Coloring) -> Result<BoundOutcome>| -> Result<BoundOutcome> {
        let mut best: Option<Rational> = None;
        let mut reason = None;
        for c in &colorings {
            match f(c)? {
                BoundOutcome::Value(v) => best = Some(best.map_or(v.clone(), |b: Rational| b.min(v))),
                BoundOutcome::Inapplicable(r) => reason = reason.or(Some(r)),
            }
        }
        Ok(best.map_or_else(|| BoundOutcome::Inapplicable(reason.unwrap_or_default()), BoundOutcome::Value))
    };
    if chi >= 2 {
        report.upper_bounds = vec![
            upper_entry("equal_classes", pick(&|c| upper_bound_equal_classes(g, c)), lambda, tol),
            upper_entry("general", pick(&|c| upper_bound_general(g, c).map(BoundOutcome::Value)), lambda, tol),
            upper_entry("regular_equitable", pick(&|c| upper_bound_regular_equitable(g, c)), lambda, tol),
        ];
    }

    if sharp && chi >= 2 {
        let (dups, twins) = twin_duplicate_classes(g);
        match multiplicity_bounds_from_structure(g, &colorings[0], &dups, &twins) {
            Ok((lower, upper)) => {
                let sets = |s: &[VertexSubset]| s.iter().map(|x| x.members().to_vec()).collect();
                report.multiplicity_bounds = Some(MultiplicityEntry {
                    lower,
                    upper,
                    measured: mult,
                    duplicate_sets: sets(&dups),
                    twin_sets: sets(&twins),
                });
            }
            // sharp only under a tolerance looser than the structural check
            Err(Error::NotSharp { gap }) => report.omissions.push(format!("multiplicity bounds: gap {gap:e}")),
            Err(e) => return Err(e),
        }
    } else {
        report.omissions.push("multiplicity bounds: lambda_max is not chi/(chi-1)".into());
    }
    Ok(report)
}

fn equitable_summary(g: &Graph, colorings: &[Coloring], complete: bool) -> Result<EquitableEntry> {
    let mut dinva = Vec::with_capacity(colorings.len());
    let mut a = Vec::with_capacity(colorings.len());
    for c in colorings {
        dinva.push(is_equitable_dinva(g, c)?);
        a.push(is_equitable_a(g, c)?);
    }
    Ok(EquitableEntry {
        colorings: colorings.len(),
        complete,
        dinva_all: dinva.iter().all(|&x| x),
        dinva_any: dinva.iter().any(|&x| x),
        a_all: a.iter().all(|&x| x),
        a_any: a.iter().any(|&x| x),
    })
}

/// Twelve significant digits, trailing zeros dropped.
pub fn sig12(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    rounded.to_string()
}

impl BoundReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "vertices          {}", self.n);
        let _ = writeln!(s, "edges             {}", self.edges);
        match self.chi {
            Some(chi) => {
                let _ = writeln!(s, "chromatic number  {chi}");
            }
            None => {
                let _ = writeln!(s, "chromatic number  (omitted)");
            }
        }
        let _ =
            writeln!(s, "lambda_max        {} (multiplicity {})", sig12(self.lambda_max.value), self.lambda_max.mult);
        let _ = writeln!(s, "chi >= l/(l-1)    {}", sig12(self.chi_from_spectrum));
        if let Some(lb) = &self.lower_bound {
            let _ = writeln!(
                s,
                "chi/(chi-1)       {} = {}  gap {}  sharp {}",
                lb.exact,
                sig12(lb.value),
                sig12(lb.gap),
                lb.sharp
            );
        }
        if let Some(h) = &self.hoffman {
            let _ = writeln!(s, "hoffman           {}{}", sig12(h.value), if h.regular { "  (regular)" } else { "" });
        }
        for ub in &self.upper_bounds {
            match (&ub.exact, ub.value, ub.satisfied) {
                (Some(exact), Some(v), Some(ok)) => {
                    let _ = writeln!(s, "upper {:<17} {exact} = {}  holds {ok}", ub.name, sig12(v));
                }
                _ => {
                    let _ = writeln!(s, "upper {:<17} n/a ({})", ub.name, ub.reason.as_deref().unwrap_or(""));
                }
            }
        }
        if let Some(m) = &self.multiplicity_bounds {
            let _ = writeln!(s, "multiplicity      {} <= {} <= {}", m.lower, m.measured, m.upper);
        }
        if let Some(e) = &self.equitable {
            let _ = writeln!(
                s,
                "equitable         {} of {} colorings{}",
                if e.dinva_all {
                    "all"
                } else if e.dinva_any {
                    "some"
                } else {
                    "none"
                },
                e.colorings,
                if e.complete { "" } else { " (partial)" }
            );
        }
        for o in &self.omissions {
            let _ = writeln!(s, "omitted           {o}");
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::optimal_coloring;
    use crate::families::{complete, complete_split, cycle, g_ktd, petal, turan};

    fn coloring(g: &Graph, a: Vec<usize>) -> Coloring {
        Coloring::new(g, a).unwrap()
    }

    fn lambda_max(g: &Graph) -> f64 {
        spectrum(g, GROUPING_TOL).unwrap().largest_eigenvalue().0
    }

    #[test]
    fn spectral_lower_bound() {
        assert_eq!(chromatic_lower_bound_from_spectrum(2.0).unwrap(), 2.0);
        assert!((chromatic_lower_bound_from_spectrum(1.5).unwrap() - 3.0).abs() < 1e-15);
        for n in 2..10 {
            let l = n as f64 / (n as f64 - 1.0);
            assert!((chromatic_lower_bound_from_spectrum(l).unwrap() - n as f64).abs() < 1e-9);
        }
        assert!(chromatic_lower_bound_from_spectrum(1.0).is_err());
    }

    #[test]
    fn hoffman() {
        for n in 2..8 {
            assert!((hoffman_bound(&complete(n).unwrap()).unwrap() - n as f64).abs() < 1e-10);
        }
        // C5: adjacency eigenvalues 2cos(2πk/5)
        let mu_min = 2.0 * (4.0 * std::f64::consts::PI / 5.0).cos();
        let h = hoffman_bound(&cycle(5).unwrap()).unwrap();
        assert!((h - (1.0 - 2.0 / mu_min)).abs() < 1e-10);
        assert!((h - 2.2360679775).abs() < 1e-9 && h <= 3.0);
        assert!(hoffman_bound(&Graph::empty(3).unwrap()).is_err());

        // regular and sharp: Hoffman attains χ too
        let t = turan(9, 3).unwrap();
        assert!((hoffman_bound(&t).unwrap() - 3.0).abs() < 1e-10);
    }

    #[test]
    fn multiplicity_bounds() {
        let t = turan(9, 3).unwrap();
        let c = coloring(&t, (0..9).map(|v| v / 3).collect());
        let classes: Vec<VertexSubset> = c.classes().into_iter().map(|cl| VertexSubset::new(&t, cl).unwrap()).collect();
        let (lower, upper) = multiplicity_bounds_from_structure(&t, &c, &classes, &[]).unwrap();
        assert_eq!((lower, upper), (2, 2));
        assert_eq!(spectrum(&t, GROUPING_TOL).unwrap().multiplicity_of(1.5), 2);

        for n in 2..7 {
            let k = complete(n).unwrap();
            let c = coloring(&k, (0..n).collect());
            let all = [VertexSubset::all(&k)];
            assert_eq!(multiplicity_bounds_from_structure(&k, &c, &[], &all).unwrap(), (n - 1, n - 1));
        }

        let p = petal(3).unwrap();
        let c = optimal_coloring(&p).unwrap();
        let twins: Vec<VertexSubset> = (1..=3).map(|i| VertexSubset::new(&p, [i, i + 3]).unwrap()).collect();
        let (lower, upper) = multiplicity_bounds_from_structure(&p, &c, &[], &twins).unwrap();
        let measured = spectrum(&p, GROUPING_TOL).unwrap().multiplicity_of(1.5);
        assert_eq!(measured, 4);
        assert!(lower <= measured && measured <= upper);
        assert_eq!(lower, 4);

        let bad = [VertexSubset::new(&p, [1, 2]).unwrap()];
        assert!(matches!(multiplicity_bounds_from_structure(&p, &c, &bad, &[]), Err(Error::Structure(_))));
        let c5 = cycle(5).unwrap();
        let c = optimal_coloring(&c5).unwrap();
        assert!(matches!(multiplicity_bounds_from_structure(&c5, &c, &[], &[]), Err(Error::NotSharp { .. })));
    }

    #[test]
    fn structural_classes() {
        let t = turan(6, 2).unwrap();
        let (d, tw) = twin_duplicate_classes(&t);
        assert_eq!(d.iter().map(|s| s.members().to_vec()).collect::<Vec<_>>(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(tw.is_empty());
        let (d, tw) = twin_duplicate_classes(&complete(4).unwrap());
        assert!(d.is_empty());
        assert_eq!(tw[0].members(), &[0, 1, 2, 3]);
    }

    #[test]
    fn equal_classes_bound() {
        let t = turan(9, 3).unwrap();
        let c = coloring(&t, (0..9).map(|v| v / 3).collect());
        assert_eq!(upper_bound_equal_classes(&t, &c).unwrap(), BoundOutcome::Value(rat(3, 2)));

        let g = g_ktd(4, 3, 2).unwrap();
        let c = optimal_coloring(&g).unwrap();
        let bound = upper_bound_equal_classes(&g, &c).unwrap();
        // δ = 8 − 2 for the vertices v_1, v_2 that miss a clique
        assert_eq!(bound, BoundOutcome::Value(rat(12, 6)));
        assert!(lambda_max(&g) <= bound.as_f64().unwrap() + BOUND_TOL);

        let k = complete(5).unwrap();
        let c = coloring(&k, (0..5).collect());
        assert_eq!(upper_bound_equal_classes(&k, &c).unwrap(), BoundOutcome::Value(rat(5, 4)));

        let s = complete_split(3, 3).unwrap();
        let c = optimal_coloring(&s).unwrap();
        assert!(matches!(upper_bound_equal_classes(&s, &c).unwrap(), BoundOutcome::Inapplicable(_)));
    }

    #[test]
    fn general_bound() {
        for (n, k) in [(6, 2), (9, 3), (12, 4)] {
            let t = turan(n, k).unwrap();
            let c = coloring(&t, (0..n).map(|v| v / (n / k)).collect());
            assert_eq!(upper_bound_general(&t, &c).unwrap(), rat(k as i64, k as i64 - 1));
        }
        // split(4,3): the big class has degree 2 = N − N_1, the singletons 5 = N − 1
        let s = complete_split(4, 3).unwrap();
        let c = optimal_coloring(&s).unwrap();
        let b = upper_bound_general(&s, &c).unwrap();
        assert_eq!(b, rat(3, 1));
        assert!(to_f64(&b) >= lambda_max(&s) - BOUND_TOL);
        assert!((lambda_max(&s) - 1.8).abs() < 1e-10);

        let g = g_ktd(3, 3, 3).unwrap();
        let c = optimal_coloring(&g).unwrap();
        assert_eq!(
            upper_bound_general(&g, &c).unwrap(),
            upper_bound_equal_classes(&g, &c).unwrap().value().unwrap().clone()
        );
    }

    #[test]
    fn regular_equitable_bound() {
        let t = turan(9, 3).unwrap();
        let c = coloring(&t, (0..9).map(|v| v / 3).collect());
        assert_eq!(upper_bound_regular_equitable(&t, &c).unwrap(), BoundOutcome::Value(rat(3, 2)));

        let g = g_ktd(3, 3, 3).unwrap();
        assert_eq!(g.regular_degree(), Some(9 - 3 - 2));
        let c = optimal_coloring(&g).unwrap();
        let b = upper_bound_regular_equitable(&g, &c).unwrap();
        assert_eq!(b, BoundOutcome::Value(rat(3, 2)));
        assert!(lambda_max(&g) <= b.as_f64().unwrap() + BOUND_TOL);

        let p = petal(2).unwrap();
        let c = optimal_coloring(&p).unwrap();
        assert!(matches!(upper_bound_regular_equitable(&p, &c).unwrap(), BoundOutcome::Inapplicable(_)));
    }

    #[test]
    fn reports() {
        let r = full_report(&petal(3).unwrap()).unwrap();
        assert_eq!(r.chi, Some(3));
        let lb = r.lower_bound.as_ref().unwrap();
        assert!(lb.sharp && lb.mult == 4);
        assert!(r.equitable.as_ref().unwrap().dinva_all);
        let m = r.multiplicity_bounds.as_ref().unwrap();
        assert!(m.lower <= m.measured && m.measured <= m.upper);

        let r = full_report(&g_ktd(2, 5, 1).unwrap()).unwrap();
        assert_eq!(r.chi, Some(5));
        let lb = r.lower_bound.as_ref().unwrap();
        assert!((r.lambda_max.value - 1.5).abs() < 1e-10);
        assert!((lb.gap - 0.25).abs() < 1e-10 && !lb.sharp);
        assert!(r.equitable.as_ref().unwrap().dinva_all);

        let r = full_report(&cycle(5).unwrap()).unwrap();
        assert_eq!(r.chi, Some(3));
        let expected = 1.0 - (4.0 * std::f64::consts::PI / 5.0).cos();
        assert!((r.lambda_max.value - expected).abs() < 1e-10);
        assert!(!r.lower_bound.as_ref().unwrap().sharp);
        assert!(r.upper_bounds.iter().all(|u| u.satisfied != Some(false)));

        let json = r.to_json();
        assert!(json.contains("\"schema\": 1"));
        assert!(r.to_text().contains("chromatic number  3"));
        let two = complete(2).unwrap().disjoint_union(&complete(2).unwrap());
        assert_eq!(full_report(&two).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn significant_digits() {
        assert_eq!(sig12(1.5), "1.5");
        assert_eq!(sig12(1.0 / 3.0), "0.333333333333");
        assert_eq!(sig12(2.0f64.sqrt() * 1000.0), "1414.21356237");
    }
}
