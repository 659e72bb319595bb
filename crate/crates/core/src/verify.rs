//! Verification suites over seeded and exhaustive graph corpora.
//!
//! Each [`Check`] runs one family of claims over a deterministic corpus and
//! counts cases and failures. Checks carry the number of the acceptance
//! criterion they belong to.

use std::fmt::Write as _;

use serde::Serialize;

use crate::bounds::{
    twin_duplicate_classes, upper_bound_equal_classes, upper_bound_general, upper_bound_regular_equitable, BoundOutcome,
};
use crate::coloring::{
    chromatic_number, class_indicator_pm, enumerate_chi_colorings_limited, is_equitable_dinva, optimal_coloring,
    pair_pm, Coloring,
};
use crate::compose::{
    edge_disjoint_union_labeled, glue_eigenbasis, one_sum, one_sum_lambda_max_check, one_sum_many,
    one_sum_top_multiplicity,
};
use crate::error::Result;
use crate::exec::Execution;
use crate::families::{self, certificates, Family};
use crate::graph::{Graph, PairKind};
use crate::random;
use crate::rational::{chi_ratio, rat, to_f64};
use crate::search::{self, canonical_code, MultTarget, Predicate};
use crate::spectral::{eigensystem, spectrum, verify_eigenpair, VERIFY_TOL};

/// Tolerance of the exact clique-sum fixtures.
pub const FIXTURE_TOL: f64 = 1e-10;

/// How many colorings per graph the coloring-based checks examine.
const COLORING_LIMIT: usize = 2_000;

const EXAMPLES_KEPT: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Families,
    Sharp,
    OneSum,
    Bounds,
    All,
}

impl Suite {
    pub fn parse(text: &str) -> Option<Suite> {
        Some(match text {
            "families" => Suite::Families,
            "sharp" => Suite::Sharp,
            "onesum" => Suite::OneSum,
            "bounds" => Suite::Bounds,
            "all" => Suite::All,
            _ => return None,
        })
    }

    fn criteria(self) -> &'static [u8] {
        match self {
            Suite::Families => &[1, 2, 3],
            Suite::Sharp => &[4, 5, 6, 9, 11],
            Suite::OneSum => &[7, 8],
            Suite::Bounds => &[10],
            Suite::All => &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11],
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub tol: f64,
    pub random_graphs: usize,
    pub random_pairs: usize,
    pub overlays: usize,
    pub max_n: usize,
    /// Largest order scanned exhaustively for extra sharp instances.
    pub search_n: usize,
    pub exec: Execution,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            tol: 1e-8,
            random_graphs: 500,
            random_pairs: 200,
            overlays: 100,
            max_n: 10,
            search_n: 7,
            exec: Execution::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    /// The first few failing cases.
    pub examples: Vec<String>,
}

impl Check {
    fn new(criterion: u8, name: &str) -> Self {
        Check { criterion, name: name.into(), cases: 0, failures: 0, examples: Vec::new() }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < EXAMPLES_KEPT {
                self.examples.push(what());
            }
        }
    }

    fn error(&mut self, what: String) {
        self.record(false, || what);
    }

    /// Passes when at least one case ran and none failed.
    pub fn passed(&self) -> bool {
        self.cases > 0 && self.failures == 0
    }
}

/// Per-criterion verdicts, in criterion order.
pub fn criterion_verdicts(checks: &[Check]) -> Vec<(u8, bool)> {
    let mut ids: Vec<u8> = checks.iter().map(|c| c.criterion).collect();
    ids.sort_unstable();
    ids.dedup();
    ids.into_iter().map(|id| (id, checks.iter().filter(|c| c.criterion == id).all(Check::passed))).collect()
}

pub fn render_table(checks: &[Check]) -> String {
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for c in checks {
        let status = if c.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{status}  [{:>2}] {:<width$}  {} cases, {} failures",
            c.criterion, c.name, c.cases, c.failures
        );
        for e in &c.examples {
            let _ = writeln!(out, "          {e}");
        }
    }
    out
}

/// A graph together with the quantities most checks need.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub graph: Graph,
    pub chi: usize,
    pub lambda: f64,
    pub mult: usize,
    /// Multiplicity of `χ/(χ−1)`.
    pub chi_mult: usize,
    pub sharp: bool,
}

impl Instance {
    pub fn analyze(name: String, graph: Graph, tol: f64) -> Result<Instance> {
        let chi = chromatic_number(&graph)?;
        let spec = spectrum(&graph, tol)?;
        let (lambda, mult) = spec.largest_eigenvalue();
        let ratio = to_f64(&chi_ratio(chi));
        Ok(Instance {
            name,
            chi,
            lambda,
            mult,
            chi_mult: spec.multiplicity_of(ratio),
            sharp: (lambda - ratio).abs() <= tol,
            graph,
        })
    }
}

/// Connected members of every named family at desk scale.
pub fn family_corpus() -> Vec<Family> {
    let mut out = Vec::new();
    for n in 2..=12 {
        out.push(Family::Complete(n));
    }
    for a in 1..=6 {
        for b in a..=12 - a {
            out.push(Family::Multipartite(vec![a, b]));
        }
    }
    for n in 2..=12 {
        for k in 2..n {
            if n % k == 0 {
                out.push(Family::Turan(n, k));
            }
        }
    }
    for m in 1..=6 {
        out.push(Family::Petal(m));
    }
    for n in 2..=4 {
        for m in 1..=5 {
            out.push(Family::GeneralizedPetal(m, n));
        }
    }
    for (k, t, d) in g_ktd_grid() {
        if (k, t, d) != (2, 2, 2) {
            out.push(Family::Gktd(k, t, d));
        }
    }
    for t in 1..=8 {
        for chi in 2..=5 {
            out.push(Family::Split(t, chi));
        }
    }
    for n in 3..=12 {
        out.push(Family::Cycle(n));
    }
    for n in 2..=12 {
        out.push(Family::Path(n));
    }
    out
}

/// `2 ≤ k, θ ≤ 5`, `0 < d ≤ k`.
fn g_ktd_grid() -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for k in 2..=5 {
        for t in 2..=5 {
            for d in 1..=k {
                out.push((k, t, d));
            }
        }
    }
    out
}

/// Parameters the closed-form spectrum covers.
fn g_ktd_spectrum_domain(k: usize, t: usize, d: usize) -> bool {
    d < k || (k >= t && k * t > 4)
}

struct Pool {
    families: Vec<(Family, Instance)>,
    random: Vec<Instance>,
    searched: Vec<Instance>,
}

impl Pool {
    fn build(cfg: &VerifyConfig, need_search: bool) -> Result<Pool> {
        let fams = family_corpus();
        let families = cfg
            .exec
            .map(&fams, |f| -> Result<(Family, Instance)> {
                let g = f.graph()?;
                Ok((f.clone(), Instance::analyze(f.to_string(), g, cfg.tol)?))
            })
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
        let graphs = random::corpus(cfg.seed, cfg.random_graphs, cfg.max_n, cfg.exec);
        let random = cfg
            .exec
            .map_range(graphs.len(), |i| Instance::analyze(format!("random #{i}"), graphs[i].clone(), cfg.tol))
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
        let mut searched = Vec::new();
        if need_search && cfg.search_n >= 2 {
            let found = search::search(cfg.search_n, Predicate::Sharp, cfg.exec)?;
            for (i, h) in found.hits.iter().enumerate() {
                let g = Graph::from_edge_list(h.n, &h.edges)?;
                searched.push(Instance::analyze(format!("search n={} #{i}", h.n), g, cfg.tol)?);
            }
        }
        Ok(Pool { families, random, searched })
    }

    fn all(&self) -> impl Iterator<Item = &Instance> {
        self.families.iter().map(|(_, i)| i).chain(&self.random).chain(&self.searched)
    }

    fn sharp(&self) -> Vec<&Instance> {
        self.all().filter(|i| i.sharp).collect()
    }
}

fn colorings(inst: &Instance) -> Result<(Vec<Coloring>, bool)> {
    enumerate_chi_colorings_limited(&inst.graph, inst.chi, COLORING_LIMIT)
}

/// Runs every check of `suite`.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let wanted = suite.criteria();
    let has = |c: u8| wanted.contains(&c);
    let need_pool = [4, 5, 6, 9, 10].iter().any(|&c| has(c));
    let pool = if need_pool { Some(Pool::build(cfg, [5, 6, 9].iter().any(|&c| has(c)))?) } else { None };
    let mut out = Vec::new();
    for &c in wanted {
        let checks = match c {
            1 => vec![family_spectra(cfg)?],
            2 => vec![g_ktd_spectra(cfg)?],
            3 => vec![g_ktd_cases(cfg)?],
            4 => lower_bounds(pool.as_ref().expect("pool built"), cfg),
            5 => vec![equitable_necessity(pool.as_ref().expect("pool built"))?],
            6 => multiplicity_floor(pool.as_ref().expect("pool built"))?,
            7 => one_sum_calculus(cfg)?,
            8 => edge_disjoint(cfg)?,
            9 => certificate_checks(pool.as_ref().expect("pool built"), cfg)?,
            10 => upper_bounds(pool.as_ref().expect("pool built"), cfg)?,
            11 => search_ground_truth(cfg)?,
            _ => unreachable!("unknown criterion"),
        };
        out.extend(checks);
    }
    Ok(out)
}

fn family_spectra(cfg: &VerifyConfig) -> Result<Check> {
    let mut check = Check::new(1, "family spectra match closed forms");
    let fams: Vec<Family> = family_corpus()
        .into_iter()
        .filter(|f| matches!(f, Family::Complete(_) | Family::Multipartite(_) | Family::Turan(..) | Family::Petal(_)))
        .collect();
    let results = cfg.exec.map(&fams, |f| -> Result<(String, bool, String)> {
        let oracle = f.oracle().expect("closed form exists");
        let s = spectrum(&f.graph()?, cfg.tol)?;
        Ok((f.to_string(), oracle.matches(&s, cfg.tol), oracle.to_string()))
    });
    for r in results {
        let (name, ok, oracle) = r?;
        check.record(ok, || format!("{name}: expected {oracle}"));
    }
    Ok(check)
}

fn g_ktd_spectra(cfg: &VerifyConfig) -> Result<Check> {
    let mut check = Check::new(2, "G(k,theta,d) spectrum matches closed form");
    for (k, t, d) in g_ktd_grid().into_iter().filter(|&(k, t, d)| g_ktd_spectrum_domain(k, t, d)) {
        let oracle = families::oracle_spectrum_g_ktd(k, t, d)?;
        let s = spectrum(&families::g_ktd(k, t, d)?, cfg.tol)?;
        check.record(oracle.matches(&s, cfg.tol), || format!("G({k},{t},{d}): expected {oracle}"));
    }
    Ok(check)
}

fn g_ktd_cases(cfg: &VerifyConfig) -> Result<Check> {
    let mut check = Check::new(3, "G(k,theta,d) largest eigenvalue case table");
    let mut seen = [false; 6];
    for (k, t, d) in g_ktd_grid() {
        let Ok((value, mult, case)) = families::g_ktd_lambda_max_case(k, t, d) else { continue };
        seen[case as usize - 1] = true;
        let s = spectrum(&families::g_ktd(k, t, d)?, cfg.tol)?;
        let (lambda, m) = s.largest_eigenvalue();
        check.record((lambda - to_f64(&value)).abs() <= cfg.tol && m == mult, || {
            format!("G({k},{t},{d}) case {case}: measured ({lambda}, {m}), expected ({value}, {mult})")
        });
    }
    for (i, hit) in seen.iter().enumerate() {
        check.record(*hit, || format!("case {} never exercised", i + 1));
    }
    // the case-5 instance exceeds the chromatic bound
    let g = families::g_ktd(2, 5, 1)?;
    let chi = chromatic_number(&g)?;
    let (lambda, _) = spectrum(&g, cfg.tol)?.largest_eigenvalue();
    check.record(chi == 5 && (lambda - 1.5).abs() <= cfg.tol && lambda > to_f64(&chi_ratio(chi)) + cfg.tol, || {
        format!("G(2,5,1): chi {chi}, lambda {lambda}")
    });
    Ok(check)
}

fn lower_bounds(pool: &Pool, cfg: &VerifyConfig) -> Vec<Check> {
    let mut chi_bound = Check::new(4, "lambda_N >= chi/(chi-1)");
    let mut noncomplete = Check::new(4, "lambda_N >= (N+1)/(N-1) off complete and bipartite");
    for inst in pool.families.iter().map(|(_, i)| i).chain(&pool.random) {
        let bound = to_f64(&chi_ratio(inst.chi));
        chi_bound.record(inst.lambda >= bound - cfg.tol, || format!("{}: {} < {bound}", inst.name, inst.lambda));
        let n = inst.graph.n();
        let complete = inst.graph.edge_count() == n * (n - 1) / 2;
        if inst.chi >= 3 && !complete {
            let b = to_f64(&rat(n as i64 + 1, n as i64 - 1));
            noncomplete.record(inst.lambda >= b - cfg.tol, || format!("{}: {} < {b}", inst.name, inst.lambda));
        }
    }
    vec![chi_bound, noncomplete]
}

fn equitable_necessity(pool: &Pool) -> Result<Check> {
    let mut check = Check::new(5, "sharp graphs: every chi-coloring equitable for D^-1 A");
    for inst in pool.sharp() {
        let (all, complete) = colorings(inst)?;
        check.record(complete, || format!("{}: more than {COLORING_LIMIT} colorings", inst.name));
        for c in &all {
            let ok = is_equitable_dinva(&inst.graph, c)?;
            check.record(ok, || format!("{}: coloring {} not equitable", inst.name, c.to_json()));
        }
    }
    Ok(check)
}

fn multiplicity_floor(pool: &Pool) -> Result<Vec<Check>> {
    let mut floor = Check::new(6, "sharp graphs: multiplicity >= chi-1");
    let mut unique = Check::new(6, "sharp with multiplicity chi-1: unique chi-coloring");
    for inst in pool.sharp() {
        floor.record(inst.chi_mult + 1 >= inst.chi, || {
            format!("{}: multiplicity {} with chi {}", inst.name, inst.chi_mult, inst.chi)
        });
        if inst.chi_mult + 1 == inst.chi {
            let (all, _) = colorings(inst)?;
            unique.record(all.len() == 1, || format!("{}: {} chi-colorings", inst.name, all.len()));
        }
    }
    Ok(vec![floor, unique])
}

/// Sharp building blocks for the 1-sum checks.
fn sharp_blocks() -> Result<Vec<(String, Graph)>> {
    let mut fams: Vec<Family> = (2..=5).map(Family::Complete).collect();
    fams.extend([(4, 2), (6, 2), (6, 3), (8, 2), (8, 4), (9, 3)].map(|(n, k)| Family::Turan(n, k)));
    fams.extend((1..=4).map(Family::Petal));
    let mut out: Vec<(String, Graph)> = fams.iter().map(|f| Ok((f.to_string(), f.graph()?))).collect::<Result<_>>()?;
    let k3 = families::complete(3)?;
    out.push(("bowtie".into(), one_sum(&k3, 0, &k3, 0)?.result));
    Ok(out)
}

fn one_sum_calculus(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let pairs = random::glue_pairs(cfg.seed.wrapping_add(1), cfg.random_pairs, cfg.max_n, cfg.exec);
    let mut interlace = Check::new(7, "1-sum: lambda_max <= max of the sides");
    let mut chi = Check::new(7, "1-sum: chi = max(chi_1, chi_2)");
    struct PairOutcome {
        lambda: (f64, f64, bool),
        chi: usize,
        sides: (usize, usize),
    }
    let results = cfg.exec.map(&pairs, |p| -> Result<PairOutcome> {
        let glued = one_sum(&p.g1, p.x1, &p.g2, p.x2)?;
        Ok(PairOutcome {
            lambda: one_sum_lambda_max_check(&p.g1, p.x1, &p.g2, p.x2)?,
            chi: chromatic_number(&glued.result)?,
            sides: (chromatic_number(&p.g1)?, chromatic_number(&p.g2)?),
        })
    });
    for (i, r) in results.into_iter().enumerate() {
        let PairOutcome { lambda: (value, bound, ok), chi: c, sides: (c1, c2) } = r?;
        interlace.record(ok, || format!("pair #{i}: {value} > {bound}"));
        chi.record(c == c1.max(c2), || format!("pair #{i}: chi {c}, sides {c1} and {c2}"));
    }

    let mut sharp_sum = Check::new(7, "sharp (+) sharp: sharp with multiplicity m1+m2-1");
    let blocks = sharp_blocks()?;
    let mut jobs = Vec::new();
    for (a, (_, g1)) in blocks.iter().enumerate() {
        for (b, (_, g2)) in blocks.iter().enumerate().skip(a) {
            if chromatic_number(g1)? != chromatic_number(g2)? {
                continue;
            }
            for x1 in 0..g1.n() {
                for x2 in 0..g2.n() {
                    jobs.push((a, b, x1, x2));
                }
            }
        }
    }
    let results = cfg.exec.map(&jobs, |&(a, b, x1, x2)| -> Result<bool> {
        let (g1, g2) = (&blocks[a].1, &blocks[b].1);
        let ratio = to_f64(&chi_ratio(chromatic_number(g1)?));
        let m1 = spectrum(g1, cfg.tol)?.multiplicity_of(ratio);
        let m2 = spectrum(g2, cfg.tol)?.multiplicity_of(ratio);
        let glued = one_sum(g1, x1, g2, x2)?;
        let s = spectrum(&glued.result, cfg.tol)?;
        let (lambda, mult) = s.largest_eigenvalue();
        let top = one_sum_top_multiplicity(g1, x1, g2, x2)?;
        Ok((lambda - ratio).abs() <= cfg.tol && mult == m1 + m2 - 1 && top.predicted == mult)
    });
    for (&(a, b, x1, x2), r) in jobs.iter().zip(results) {
        sharp_sum.record(r?, || format!("{}[{x1}] (+) {}[{x2}]", blocks[a].0, blocks[b].0));
    }

    let mut petal = Check::new(7, "generalized petal: n/(n-1) with multiplicity |V|-m");
    for n in 2..=4 {
        for m in 1..=5 {
            let kn = families::complete(n)?;
            let summands: Vec<(&Graph, usize)> = (0..m).map(|_| (&kn, 0)).collect();
            let g = one_sum_many(&summands)?.result;
            let s = spectrum(&g, cfg.tol)?;
            let (lambda, mult) = s.largest_eigenvalue();
            let expected = n as f64 / (n as f64 - 1.0);
            let same = g == families::generalized_petal(m, n)?;
            petal.record((lambda - expected).abs() <= cfg.tol && mult == g.n() - m && same, || {
                format!("m={m}, n={n}: ({lambda}, {mult})")
            });
        }
    }

    let mut fixtures = Check::new(7, "clique-sum fixtures C4 and K4-e");
    let c4 = families::cycle(4)?;
    let k4e = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])?;
    for (name, g, expected) in [("C_4", &c4, 2.0), ("K_4 - e", &k4e, 5.0 / 3.0)] {
        let (lambda, _) = spectrum(g, cfg.tol)?.largest_eigenvalue();
        fixtures.record((lambda - expected).abs() <= FIXTURE_TOL, || format!("{name}: {lambda}"));
    }
    Ok(vec![interlace, chi, sharp_sum, petal, fixtures])
}

fn edge_disjoint(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut interlace = Check::new(8, "edge-disjoint union: lambda_max <= max of the sides");
    let overlays = random::overlays(cfg.seed.wrapping_add(2), cfg.overlays, cfg.max_n, cfg.exec);
    let results = cfg.exec.map(&overlays, |o| -> Result<(f64, f64)> {
        let top = |g: &Graph| -> Result<f64> { Ok(spectrum(g, cfg.tol)?.largest_eigenvalue().0) };
        Ok((top(&o.union.result)?, top(&o.g1)?.max(top(&o.g2)?)))
    });
    for (i, r) in results.into_iter().enumerate() {
        let (value, bound) = r?;
        interlace.record(value <= bound + cfg.tol, || format!("overlay #{i}: {value} > {bound}"));
    }

    let mut agree = Check::new(8, "edge-disjoint union on one shared vertex equals the 1-sum");
    let pairs = random::glue_pairs(cfg.seed.wrapping_add(1), cfg.random_pairs, cfg.max_n, cfg.exec);
    for (i, p) in pairs.iter().enumerate() {
        let labels = |n: usize, x: usize, first: usize| -> Vec<usize> {
            let mut next = first;
            (0..n)
                .map(|v| {
                    if v == x {
                        0
                    } else {
                        next += 1;
                        next - 1
                    }
                })
                .collect()
        };
        let l1 = labels(p.g1.n(), p.x1, 1);
        let l2 = labels(p.g2.n(), p.x2, p.g1.n());
        let union = edge_disjoint_union_labeled(&p.g1, &l1, &p.g2, &l2)?;
        let sum = one_sum(&p.g1, p.x1, &p.g2, p.x2)?;
        let same = union.result.to_edge_list_string() == sum.result.to_edge_list_string()
            && union.embeddings == sum.embeddings
            && union.shared == sum.shared;
        agree.record(same, || format!("pair #{i}"));
    }
    Ok(vec![interlace, agree])
}

fn certificate_checks(pool: &Pool, cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut fij = Check::new(9, "f_ij on D^-1 A-equitable colorings at k/(k-1)");
    let mut pairs = Check::new(9, "f_vw on twins at (d+1)/d and duplicates at 1");
    let all: Vec<&Instance> = pool.all().collect();
    let outcomes = cfg.exec.map(&all, |inst| -> Result<Vec<(bool, bool, String)>> {
        let g = &inst.graph;
        let mut out = Vec::new();
        if inst.chi >= 2 {
            let (cs, _) = colorings(inst)?;
            let value = to_f64(&chi_ratio(inst.chi));
            for c in cs.iter().filter(|c| is_equitable_dinva(g, c).unwrap_or(false)) {
                for i in 0..c.k() {
                    for j in i + 1..c.k() {
                        let r = verify_eigenpair(g, value, &class_indicator_pm(g, c, i, j)?, VERIFY_TOL)?;
                        out.push((true, r.valid, format!("{}: f_{i}{j}, residual {:e}", inst.name, r.residual)));
                    }
                }
            }
        }
        let (dups, twins) = twin_duplicate_classes(g);
        for set in dups.iter().chain(&twins) {
            let m = set.members();
            for (a, &v) in m.iter().enumerate() {
                for &w in &m[a + 1..] {
                    let value = match g.classify_pair(v, w)? {
                        PairKind::Twin => (g.degree(v) as f64 + 1.0) / g.degree(v) as f64,
                        PairKind::Duplicate => 1.0,
                        PairKind::Neither => {
                            out.push((false, false, format!("{}: {v},{w} misclassified", inst.name)));
                            continue;
                        }
                    };
                    let r = verify_eigenpair(g, value, &pair_pm(g, v, w)?, VERIFY_TOL)?;
                    out.push((false, r.valid, format!("{}: f_({v},{w}), residual {:e}", inst.name, r.residual)));
                }
            }
        }
        Ok(out)
    });
    for o in outcomes {
        for (is_fij, ok, what) in o? {
            if is_fij {
                fij.record(ok, || what)
            } else {
                pairs.record(ok, || what)
            }
        }
    }

    let mut gktd = Check::new(9, "G(k,theta,d) certificate families");
    for (k, t, d) in g_ktd_grid() {
        let g = families::g_ktd(k, t, d)?;
        let certs = certificates::g_ktd(&g, k, t, d)?;
        gktd.record(certs.len() == k * t - 1, || format!("G({k},{t},{d}): {} certificates", certs.len()));
        for c in certs {
            let r = verify_eigenpair(&g, to_f64(&c.eigenvalue), &c.function, VERIFY_TOL)?;
            gktd.record(r.valid, || format!("G({k},{t},{d}) {}: residual {:e}", c.family, r.residual));
        }
    }

    let mut glued = Check::new(9, "glued eigenbases on 1-sums");
    let blocks = sharp_blocks()?;
    for (a, (n1, g1)) in blocks.iter().enumerate() {
        for (n2, g2) in blocks.iter().skip(a) {
            let chi = chromatic_number(g1)?;
            if chi != chromatic_number(g2)? {
                continue;
            }
            let ratio = to_f64(&chi_ratio(chi));
            let b1 = eigensystem(g1)?.eigenspace(ratio, cfg.tol);
            let b2 = eigensystem(g2)?.eigenspace(ratio, cfg.tol);
            for (x1, x2) in [(0, 0), (g1.n() - 1, 0), (0, g2.n() - 1)] {
                let what = || format!("{n1}[{x1}] (+) {n2}[{x2}]");
                match glue_eigenbasis(g1, x1, &b1, g2, x2, &b2, ratio) {
                    Ok(basis) => {
                        let rows: Vec<&[f64]> = basis.iter().map(|f| f.values()).collect();
                        let rank = crate::linalg::numerical_rank(&rows, 1e-10)?;
                        glued.record(rank == b1.len() + b2.len() - 1 && basis.len() == rank, what);
                    }
                    Err(e) => glued.error(format!("{}: {e}", what())),
                }
            }
        }
    }
    Ok(vec![fij, pairs, gktd, glued])
}

fn upper_bounds(pool: &Pool, cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut equal = Check::new(10, "N/delta attained on Turan graphs");
    let mut general = Check::new(10, "(1/x) N/(N-N1) bound");
    let mut regular = Check::new(10, "d-regular equitable bound");
    let mut split = Check::new(10, "complete split graphs: 1 + t/(N-1)");

    for (fam, inst) in &pool.families {
        if let Family::Turan(..) = fam {
            let c = optimal_coloring(&inst.graph)?;
            match upper_bound_equal_classes(&inst.graph, &c)? {
                BoundOutcome::Value(v) => equal.record((to_f64(&v) - inst.lambda).abs() <= cfg.tol, || {
                    format!("{}: bound {v}, lambda {}", inst.name, inst.lambda)
                }),
                BoundOutcome::Inapplicable(r) => equal.error(format!("{}: {r}", inst.name)),
            }
        }
        if let Family::Split(t, chi) = fam {
            let expected = to_f64(&families::oracle_lambda_max_complete_split(*t, *chi)?);
            split.record((inst.lambda - expected).abs() <= cfg.tol, || {
                format!("{}: {} vs {expected}", inst.name, inst.lambda)
            });
        }
    }

    let targets: Vec<&Instance> = pool.families.iter().map(|(_, i)| i).chain(&pool.random).collect();
    let outcomes = cfg.exec.map(&targets, |inst| -> Result<Vec<(bool, bool, String)>> {
        let g = &inst.graph;
        let mut out = Vec::new();
        let (cs, _) = colorings(inst)?;
        for c in &cs {
            let b = to_f64(&upper_bound_general(g, c)?);
            out.push((false, inst.lambda <= b + cfg.tol, format!("{}: {} > {b}", inst.name, inst.lambda)));
            if let BoundOutcome::Value(v) = upper_bound_regular_equitable(g, c)? {
                let v = to_f64(&v);
                out.push((true, inst.lambda <= v + cfg.tol, format!("{}: {} > {v}", inst.name, inst.lambda)));
            }
        }
        Ok(out)
    });
    for o in outcomes {
        for (is_regular, ok, what) in o? {
            if is_regular {
                regular.record(ok, || what)
            } else {
                general.record(ok, || what)
            }
        }
    }
    Ok(vec![equal, general, regular, split])
}

fn search_ground_truth(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut check = Check::new(11, "search at n=5: K5 unique for N-1, bowtie unique for N-2");
    let k3 = families::complete(3)?;
    let bowtie = one_sum(&k3, 0, &k3, 0)?.result;
    for (k, expected) in [(1, families::complete(5)?), (2, bowtie)] {
        let predicate = Predicate::SharpMult(MultTarget::OrderMinus(k));
        let found = search::search(5, predicate, cfg.exec)?;
        let at5: Vec<_> = found.hits.iter().filter(|h| h.n == 5).collect();
        let want = canonical_code(&expected)?;
        let ok = at5.len() == 1 && canonical_code(&Graph::from_edge_list(5, &at5[0].edges)?)? == want;
        check.record(ok, || format!("{predicate}: {} hits at n = 5", at5.len()));
    }
    Ok(vec![check])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            random_graphs: 40,
            random_pairs: 20,
            overlays: 10,
            max_n: 8,
            search_n: 5,
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn family_suite_passes() {
        let checks = run_suite(Suite::Families, &small()).unwrap();
        assert_eq!(checks.len(), 3);
        assert!(checks.iter().all(Check::passed), "{}", render_table(&checks));
    }

    #[test]
    fn corpus_is_connected() {
        for f in family_corpus() {
            assert!(f.graph().unwrap().is_connected(), "{f}");
        }
    }

    #[test]
    fn verdicts_group_by_criterion() {
        let mut a = Check::new(7, "a");
        a.record(true, String::new);
        let mut b = Check::new(7, "b");
        b.record(false, || "x".into());
        let c = Check::new(8, "empty");
        assert_eq!(criterion_verdicts(&[a, b, c]), vec![(7, false), (8, false)]);
        assert_eq!(Suite::parse("onesum"), Some(Suite::OneSum));
        assert_eq!(Suite::parse("nope"), None);
    }
}
