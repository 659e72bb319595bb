mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use spectral_chi::coloring::chromatic_number;
use spectral_chi::compose::{fraction_lemma_holds, mediant, one_sum, one_sum_lambda_max_check};
use spectral_chi::spectral::{spectrum, GROUPING_TOL};
use spectral_chi::Rational;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn one_sum_interlacing_and_chromatic_number(
        g1 in common::connected(2, 10),
        g2 in common::connected(2, 10),
        x in any::<(usize, usize)>(),
    ) {
        let (x1, x2) = (x.0 % g1.n(), x.1 % g2.n());
        let (value, bound, ok) = one_sum_lambda_max_check(&g1, x1, &g2, x2).unwrap();
        prop_assert!(ok, "{} > {}", value, bound);
        let glued = one_sum(&g1, x1, &g2, x2).unwrap().result;
        prop_assert_eq!(glued.n(), g1.n() + g2.n() - 1);
        prop_assert_eq!(
            chromatic_number(&glued).unwrap(),
            chromatic_number(&g1).unwrap().max(chromatic_number(&g2).unwrap())
        );
    }

    #[test]
    fn common_eigenvalues_keep_multiplicity(
        g1 in common::connected(2, 9),
        g2 in common::connected(2, 9),
        x in any::<(usize, usize)>(),
    ) {
        let (x1, x2) = (x.0 % g1.n(), x.1 % g2.n());
        let s1 = spectrum(&g1, GROUPING_TOL).unwrap();
        let s2 = spectrum(&g2, GROUPING_TOL).unwrap();
        let s = spectrum(&one_sum(&g1, x1, &g2, x2).unwrap().result, GROUPING_TOL).unwrap();
        for grp in &s1.groups {
            let m2 = s2.multiplicity_of(grp.value);
            if m2 > 0 {
                prop_assert!(s.multiplicity_of(grp.value) + 1 >= grp.mult + m2, "at {}", grp.value);
            }
        }
    }

    #[test]
    fn fraction_lemma(a in 1i64..200, b in 1i64..200, c in 1i64..200, d in 1i64..200) {
        let (a, b, c, d) = (r(a, 1), r(b, 1), r(c, 1), r(d, 1));
        prop_assert!(fraction_lemma_holds(&a, &b, &c, &d).unwrap());
        // the mediant against a direct cross-multiplication oracle
        let m = mediant(&a, &b, &c, &d).unwrap();
        let (p, q) = (&a / &c, &b / &d);
        prop_assert!(p.clone().min(q.clone()) <= m && m <= p.clone().max(q.clone()));
        prop_assert_eq!(m == p, &a * &d == &b * &c);
    }
}

#[test]
fn fraction_lemma_equality_case() {
    assert!(fraction_lemma_holds(&r(2, 1), &r(3, 1), &r(4, 1), &r(6, 1)).unwrap());
    assert_eq!(mediant(&r(2, 1), &r(3, 1), &r(4, 1), &r(6, 1)).unwrap(), r(1, 2));
}
