use std::collections::BTreeMap;

use cellar_core::algebra::{FdAlgebra, DEFAULT_CAP};
use cellar_core::catalog::{self, BrauerGraph};
use cellar_core::cellular::verify_c3;
use cellar_core::linalg::Mat;
use cellar_core::module::{cartan, projective, weakly_symmetric};
use cellar_core::obstruction::{determinant, VerdictKind, DEFAULT_TRACE_CAP};
use cellar_core::scalar::Field;
use cellar_core::Error;
use proptest::prelude::*;

mod common;
use common::{all, built, subsets, INSTANCES};

/// Row `i` is the dimension vector of `A e_i`, computed as ranks of the idempotent actions.
fn cartan_by_projectives(a: &FdAlgebra) -> Vec<Vec<usize>> {
    (0..a.num_vertices()).map(|i| projective(a, i).dimension_vector()).collect()
}

#[test]
fn every_entry_is_swept() {
    for e in catalog::registry() {
        let prefix = format!("catalog:{}", e.name());
        assert!(
            INSTANCES.iter().any(|u| *u == prefix || u.starts_with(&format!("{prefix}?"))),
            "{} not covered",
            e.name()
        );
    }
}

#[test]
fn metadata_is_reproduced() {
    for (uri, b, a) in all() {
        let md = &b.metadata;
        let c = cartan(&a);
        assert_eq!(c, cartan_by_projectives(&a), "{uri}");
        if let Some(d) = md.expected_dimension {
            assert_eq!(a.dim(), d, "{uri} dimension");
        }
        if let Some(e) = &md.expected_cartan {
            assert_eq!(&c, e, "{uri} cartan");
        }
        let v = b.report(DEFAULT_CAP, DEFAULT_TRACE_CAP).unwrap();
        assert_eq!(v.full_cartan, c, "{uri}");
        if let Some(e) = &md.expected_target_cartan {
            assert_eq!(&v.target_cartan, e, "{uri} target cartan");
        }
        if let Some(e) = &md.expected_candidates {
            let got: Vec<Vec<Vec<usize>>> = v.candidates.iter().map(|d| d.rows.clone()).collect();
            assert_eq!(&got, e, "{uri} candidates");
        }
        if let Some(e) = md.expected_verdict {
            assert_eq!(v.verdict, e, "{uri} verdict: {:?}", v.reason);
        }
    }
}

#[test]
fn projectives_have_simple_tops() {
    for (uri, _, a) in all() {
        let n = a.num_vertices();
        let mut total = 0;
        for i in 0..n {
            let p = projective(&a, i);
            let unit: Vec<usize> = (0..n).map(|j| usize::from(i == j)).collect();
            assert_eq!(p.top_dims(&a), unit, "{uri} P{i}");
            let series = p.radical_series(&a);
            assert_eq!((series[0], series[1]), (p.dim(), p.dim() - 1), "{uri} P{i}");
            total += p.dim();
        }
        assert_eq!(total, a.dim(), "{uri}");
    }
}

#[test]
fn associativity_on_basis_triples() {
    for (uri, _, a) in all() {
        assert_eq!(a.associativity_failure(), None, "{uri}");
    }
}

#[test]
fn self_injective_entries_are_weakly_symmetric() {
    for (uri, b, a) in all() {
        if b.metadata.self_injective {
            assert!(weakly_symmetric(&a).0, "{uri}");
        }
    }
}

#[test]
fn verified_entries_have_positive_determinant() {
    for (uri, b, a) in all() {
        if b.metadata.expected_verdict == Some(VerdictKind::CellularVerified) {
            assert!(determinant(&cartan(&a)) > 0, "{uri}");
        }
    }
}

#[test]
fn truncation_cartan_is_a_submatrix() {
    for (uri, _, a) in all() {
        let c = cartan(&a);
        for s in subsets(a.num_vertices(), 4) {
            let t = a.truncate(&s).unwrap();
            let sub: Vec<Vec<usize>> = s.iter().map(|&i| s.iter().map(|&j| c[i][j]).collect()).collect();
            assert_eq!(cartan(&t), sub, "{uri} {s:?}");
            assert_eq!(t.dim(), sub.iter().flatten().sum::<usize>(), "{uri} {s:?}");
        }
    }
}

#[test]
fn bundled_data_are_involutive_and_satisfy_c3() {
    let mut seen = 0;
    for (uri, b, a) in all() {
        let Some(d) = b.cell_datum(&a).unwrap() else { continue };
        seen += 1;
        let iota = a.reversal_matrix(&d.vertex_map, &d.arrow_map);
        assert!(iota.mul(&iota) == Mat::identity(a.field, a.dim()), "{uri}");
        assert!(verify_c3(&d, &a).0, "{uri}");
    }
    assert!(seen >= 10);
}

#[test]
fn lambda_prime_is_symmetric_in_l_and_m() {
    for (l, m) in [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)] {
        let x = built(&format!("catalog:LambdaPrime?l={l}&m={m}")).algebra(DEFAULT_CAP).unwrap();
        let y = built(&format!("catalog:LambdaPrime?l={m}&m={l}")).algebra(DEFAULT_CAP).unwrap();
        assert_eq!(x.dim(), y.dim(), "({l},{m})");
        let mut cx: Vec<usize> = cartan(&x).into_iter().flatten().collect();
        let mut cy: Vec<usize> = cartan(&y).into_iter().flatten().collect();
        cx.sort();
        cy.sort();
        assert_eq!(cx, cy, "({l},{m})");
    }
}

#[test]
fn single_arrow_double_quiver_is_infinite() {
    let b = built("catalog:DoubleQuiver?edges=1>2");
    assert!(matches!(b.algebra(200), Err(Error::Cap(_))));
}

#[test]
fn field_parameter() {
    let q = built("catalog:A1?field=7").algebra(DEFAULT_CAP).unwrap();
    assert_eq!(q.field, Field::prime(7).unwrap());
    assert_eq!(q.dim(), 20);
    assert!(catalog::build_uri("catalog:Lambda1?field=Q").is_err());
    assert!(catalog::build_uri("catalog:A1?field=2").is_err());
}

/// Line `v0 - ... - vn`: `dim = m_0 + m_n + 4 * sum of inner m_k`, `c_ii = m_{i-1} + m_i`,
/// `c_{i,i+1} = m_i`.
fn line_oracle(n: usize, m: &[usize]) -> (usize, Vec<Vec<usize>>) {
    let dim = m[0] + m[n] + 4 * m[1..n].iter().sum::<usize>();
    let mut c = vec![vec![0; n]; n];
    for i in 0..n {
        c[i][i] = m[i] + m[i + 1];
        if i + 1 < n {
            c[i][i + 1] = m[i + 1];
            c[i + 1][i] = m[i + 1];
        }
    }
    (dim, c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn brauer_lines_match_the_oracle(m in prop::collection::vec(1usize..4, 2..5)) {
        let n = m.len() - 1;
        let mults: BTreeMap<usize, usize> = m.iter().copied().enumerate().collect();
        let g = BrauerGraph::line(n, &mults).unwrap();
        let a = FdAlgebra::from_presentation(&g.presentation(Field::Rational).unwrap(), DEFAULT_CAP).unwrap();
        let (dim, c) = line_oracle(n, &m);
        prop_assert_eq!(a.dim(), dim);
        prop_assert_eq!(g.dimension_formula(), dim);
        prop_assert_eq!(&cartan(&a), &c);
        prop_assert_eq!(&g.cartan_formula(), &c);
        prop_assert!(weakly_symmetric(&a).0);
    }
}
