//! Claims about graphs attaining `λ_N = χ/(χ−1)`, checked on every
//! connected graph with at most seven vertices.

mod common;

use spectral_chi::bounds::twin_duplicate_classes;
use spectral_chi::coloring::{chromatic_number, enumerate_chi_colorings, is_equitable_dinva};
use spectral_chi::rational::{chi_ratio, to_f64};
use spectral_chi::spectral::{eigensystem, spectrum, GROUPING_TOL};
use spectral_chi::{Graph, PairKind};

struct Case {
    g: Graph,
    chi: usize,
    lambda: f64,
    sharp: bool,
}

fn cases() -> Vec<Case> {
    common::all_connected(7)
        .into_iter()
        .map(|g| {
            let chi = chromatic_number(&g).unwrap();
            let lambda = spectrum(&g, GROUPING_TOL).unwrap().largest_eigenvalue().0;
            let sharp = (lambda - to_f64(&chi_ratio(chi))).abs() <= 1e-8;
            Case { g, chi, lambda, sharp }
        })
        .collect()
}

#[test]
fn exhaustive_small_graph_claims() {
    let all = cases();
    assert_eq!(all.len(), 1 + 2 + 6 + 21 + 112 + 853);
    let mut sharp_count = 0;
    for c in &all {
        let ratio = to_f64(&chi_ratio(c.chi));
        assert!(c.lambda >= ratio - 1e-8);
        let n = c.g.n();
        if c.chi >= 3 && c.g.edge_count() < n * (n - 1) / 2 {
            assert!(c.lambda >= (n as f64 + 1.0) / (n as f64 - 1.0) - 1e-8);
        }
        if !c.sharp {
            continue;
        }
        sharp_count += 1;
        let colorings = enumerate_chi_colorings(&c.g, c.chi).unwrap();
        let mult = spectrum(&c.g, GROUPING_TOL).unwrap().multiplicity_of(ratio);
        assert!(mult + 1 >= c.chi);
        if mult + 1 == c.chi {
            assert_eq!(colorings.len(), 1);
        }
        for col in &colorings {
            assert!(is_equitable_dinva(&c.g, col).unwrap());
        }
        let (dups, twins) = twin_duplicate_classes(&c.g);
        for t in &twins {
            for v in t.iter() {
                assert_eq!(c.g.degree(v), c.chi - 1, "twin degree");
            }
        }
        for d in &dups {
            let m = d.members();
            for col in &colorings {
                assert!(m.iter().all(|&v| col.color(v) == col.color(m[0])), "duplicates split");
            }
        }
    }
    // K_2, …, K_7 at least
    assert!(sharp_count >= 6, "only {sharp_count} sharp graphs");
}

#[test]
fn eigenfunctions_balance_over_equitable_classes() {
    let mut tested = 0;
    for c in cases() {
        let g = &c.g;
        let colorings: Vec<_> = enumerate_chi_colorings(g, c.chi)
            .unwrap()
            .into_iter()
            .filter(|col| is_equitable_dinva(g, col).unwrap())
            .collect();
        if colorings.is_empty() {
            continue;
        }
        let es = eigensystem(g).unwrap();
        let k = c.chi as f64;
        for col in &colorings {
            for (lambda, f) in es.values.iter().zip(&es.functions) {
                if lambda.abs() <= 1e-6 || (lambda - k / (k - 1.0)).abs() <= 1e-6 {
                    continue;
                }
                let norm = f.values().iter().map(|x| x * x).sum::<f64>().sqrt();
                for j in 0..col.k() {
                    let s: f64 = (0..g.n()).filter(|&v| col.color(v) == j).map(|v| g.degree(v) as f64 * f[v]).sum();
                    assert!(s.abs() <= 1e-7 * norm, "class sum {s}");
                }
                tested += 1;
            }
        }
    }
    assert!(tested > 0);
}

#[test]
fn pair_kinds_are_disjoint_classes() {
    for g in common::all_connected(6) {
        let (dups, twins) = twin_duplicate_classes(&g);
        for (sets, kind) in [(&dups, PairKind::Duplicate), (&twins, PairKind::Twin)] {
            for s in sets.iter() {
                let m = s.members();
                assert!(m.len() >= 2);
                assert!(m.windows(2).all(|w| g.classify_pair(w[0], w[1]).unwrap() == kind));
            }
        }
    }
}
