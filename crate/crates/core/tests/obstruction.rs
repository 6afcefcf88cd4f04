use cellar_core::obstruction::{determinant, gram_factorizations, order_consistency, recheck, DecompCandidate};
use proptest::prelude::*;

mod common;
use common::{oracle, symmetric_matrices, Matrix, MAX_TRACE};

#[test]
fn gram_factorizations_match_brute_force() {
    let mut checked = 0;
    let mut nonempty = 0;
    let factor = |c: &Matrix| -> Vec<Matrix> {
        gram_factorizations(c, MAX_TRACE).unwrap().into_iter().map(|d| d.rows).collect()
    };
    for n in 1..=4 {
        let oracle = oracle(n);
        for c in symmetric_matrices(n) {
            let want = oracle.get(&c).cloned().unwrap_or_default();
            assert_eq!(factor(&c), want, "{c:?}");
            checked += 1;
            nonempty += usize::from(!want.is_empty());
        }
    }
    assert!(checked > 1000 && nonempty > 50, "{checked} {nonempty}");
    // Larger sizes: every factorizable matrix is a key of the oracle, and the enumerator only
    // returns natural matrices with the right Gram matrix.
    for n in 5..=MAX_TRACE {
        for (c, want) in oracle(n) {
            assert_eq!(factor(&c), want, "{c:?}");
        }
    }
}

fn candidate() -> impl Strategy<Value = DecompCandidate> {
    (1usize..4).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0usize..3, n), 1..6).prop_map(move |mut rows| {
            rows.retain(|r| r.iter().any(|&x| x > 0));
            rows.sort_by(|a, b| b.cmp(a));
            DecompCandidate { rows }
        })
    })
}

fn det_by_cofactors(c: &[Vec<i64>]) -> i64 {
    if c.len() == 1 {
        return c[0][0];
    }
    (0..c.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> =
                c[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, &x)| x).collect()).collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * c[0][j] * det_by_cofactors(&minor)
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn every_natural_matrix_is_found(d in candidate()) {
        prop_assume!(d.cols() > 0 && d.is_valid());
        let c = d.gram();
        let found = gram_factorizations(&c, 64).unwrap();
        prop_assert!(found.contains(&d));
        for f in &found {
            prop_assert_eq!(&f.gram(), &c);
            prop_assert!(f.rows.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn order_certificates_recheck(d in candidate(), si in any::<bool>()) {
        prop_assume!(d.cols() > 0 && d.is_valid());
        let cert = order_consistency(&d, si);
        if cert.consistent {
            prop_assert!(recheck(&d, &cert, si));
        } else {
            prop_assert!(cert.chain.is_none());
        }
        if !order_consistency(&d, false).consistent {
            prop_assert!(!order_consistency(&d, true).consistent);
        }
    }

    #[test]
    fn determinant_matches_cofactors(d in candidate()) {
        prop_assume!(d.cols() > 0);
        let c = d.gram();
        let ci: Vec<Vec<i64>> = c.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
        prop_assert_eq!(determinant(&c), det_by_cofactors(&ci));
    }
}
