use spectral_chi::coloring::{chromatic_number, enumerate_chi_colorings, is_equitable_dinva, Coloring};
use spectral_chi::families::{self, Family};
use spectral_chi::spectral::{spectrum, GROUPING_TOL};

fn agrees(f: &Family) {
    let oracle = f.oracle().unwrap_or_else(|| panic!("{f} has no closed form"));
    let s = spectrum(&f.graph().unwrap(), 1e-8).unwrap();
    assert!(oracle.matches(&s, 1e-8), "{f}: oracle {oracle}");
}

#[test]
fn closed_forms_over_the_parameter_grid() {
    for n in 2..=14 {
        agrees(&Family::Complete(n));
        for k in 2..=n {
            if n % k == 0 {
                agrees(&Family::Turan(n, k));
            }
        }
    }
    for a in 1..=7 {
        for b in a..=14 - a {
            agrees(&Family::Multipartite(vec![a, b]));
        }
    }
    for m in 1..=6 {
        agrees(&Family::Petal(m));
        for n in 2..=4 {
            agrees(&Family::GeneralizedPetal(m, n));
        }
    }
    for k in 2..=5 {
        for t in 2..=5 {
            for d in 0..=k {
                let f = Family::Gktd(k, t, d);
                if d < k || (k >= t && k * t > 4) {
                    agrees(&f);
                } else {
                    assert!(f.oracle().is_none(), "{f}");
                }
            }
        }
    }
}

#[test]
fn g_ktd_coloring_structure() {
    for k in 2..=5 {
        for t in 2..=5 {
            for d in 0..=k {
                let g = families::g_ktd(k, t, d).unwrap();
                if d < k || k >= t {
                    assert_eq!(chromatic_number(&g).unwrap(), t, "G({k},{t},{d})");
                }
                // colour v_j^i by its superscript i
                let by_level = Coloring::new(&g, (0..k * t).map(|v| v / k).collect()).unwrap();
                if g.isolated_vertex().is_none() {
                    assert!(is_equitable_dinva(&g, &by_level).unwrap(), "G({k},{t},{d})");
                }
                if d < k {
                    let all = enumerate_chi_colorings(&g, t).unwrap();
                    assert_eq!(all.len(), 1, "G({k},{t},{d})");
                    assert_eq!(all[0], by_level.canonical());
                }
            }
        }
    }
}

#[test]
fn complete_split_top_eigenvalue() {
    for t in 1..=8 {
        for chi in 2..=5 {
            let g = families::complete_split(t, chi).unwrap();
            assert_eq!(chromatic_number(&g).unwrap(), chi);
            let (lambda, _) = spectrum(&g, GROUPING_TOL).unwrap().largest_eigenvalue();
            let n = (t + chi - 1) as f64;
            // independent evaluation of 1 + t/(N-1)
            assert!((lambda - (1.0 + t as f64 / (n - 1.0))).abs() <= 1e-8, "split({t},{chi})");
        }
    }
}
