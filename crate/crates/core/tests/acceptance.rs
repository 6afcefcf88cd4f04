use std::panic::{catch_unwind, AssertUnwindSafe};

use cellar_core::algebra::DEFAULT_CAP;
use cellar_core::catalog::Built;
use cellar_core::cellular::{verify, verify_c3};
use cellar_core::linalg::Mat;
use cellar_core::module::{cartan, weakly_symmetric};
use cellar_core::obstruction::{
    determinant, gram_factorizations, order_consistency, Status, Verdict, VerdictKind, DEFAULT_TRACE_CAP,
};

mod common;
use common::{all, built, oracle, subsets, symmetric_matrices, Matrix, MAX_TRACE};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn m(rows: &[&[usize]]) -> Matrix {
    rows.iter().map(|r| r.to_vec()).collect()
}

fn report(b: &Built) -> Result<Verdict, String> {
    b.report(DEFAULT_CAP, DEFAULT_TRACE_CAP).map_err(|e| e.to_string())
}

fn rows(v: &Verdict) -> Vec<Matrix> {
    v.candidates.iter().map(|d| d.rows.clone()).collect()
}

fn failing_check(v: &Verdict) -> Option<&str> {
    v.reason.as_ref().map(|c| c.check.as_str())
}

/// Builds the datum, verifies it and returns the dimension and the decomposition matrix.
fn verified(uri: &str) -> Result<(usize, Matrix), String> {
    let b = built(uri);
    let a = b.algebra(DEFAULT_CAP).map_err(|e| format!("{uri}: {e}"))?;
    let d = b.cell_datum(&a).map_err(|e| format!("{uri}: {e}"))?.ok_or(format!("{uri}: no bundled datum"))?;
    let v = verify(&d, &a).map_err(|e| format!("{uri}: {e}"))?;
    ensure!(v.ok(), "{uri}: C1 {} C2 {} C3 {} DtD {:?}", v.c1, v.c2, v.c3, v.cartan_identity);
    ensure!(report(&b)?.verdict == VerdictKind::CellularVerified, "{uri}: verdict");
    Ok((a.dim(), v.structure.unwrap().decomposition))
}

fn criterion_1() -> Outcome {
    let b = built("catalog:LoopedPair");
    let a = b.algebra(DEFAULT_CAP).map_err(|e| e.to_string())?;
    ensure!(a.dim() == 10, "dim {}", a.dim());
    let c = cartan(&a);
    ensure!(c == m(&[&[4, 2], &[2, 2]]), "cartan {c:?}");
    let d: Vec<Matrix> = gram_factorizations(&c, DEFAULT_TRACE_CAP).unwrap().into_iter().map(|d| d.rows).collect();
    ensure!(d == vec![m(&[&[1, 1], &[1, 1], &[1, 0], &[1, 0]])], "candidates {d:?}");
    Ok(())
}

fn criterion_2() -> Outcome {
    for (uri, l) in [("catalog:OddCycle?n=1", 3), ("catalog:OddCycle?n=2", 5)] {
        let v = report(&built(uri))?;
        ensure!(v.target_cartan.len() == l, "{uri}: size");
        for i in 0..l {
            for j in 0..l {
                let want = if i == j { 2 } else { usize::from((i + 1) % l == j || (j + 1) % l == i) };
                ensure!(v.target_cartan[i][j] == want, "{uri}: cartan {:?}", v.target_cartan);
            }
        }
        ensure!(!v.candidates.is_empty(), "{uri}: no factorizations");
        ensure!(v.orders.len() == v.candidates.len() && v.orders.iter().all(|o| !o.consistent), "{uri}: a candidate survives");
        ensure!(v.verdict == VerdictKind::NotCellular && failing_check(&v) == Some("order_consistency"), "{uri}: {:?}", v.reason);
    }
    let branch = m(&[&[2, 1, 0, 0], &[1, 2, 1, 1], &[0, 1, 2, 0], &[0, 1, 0, 2]]);
    ensure!(gram_factorizations(&branch, DEFAULT_TRACE_CAP).unwrap().is_empty(), "branch factorizes");
    let v = report(&built("catalog:DoubleQuiverBranch"))?;
    ensure!(v.full_cartan == branch, "branch cartan {:?}", v.full_cartan);
    ensure!(v.verdict == VerdictKind::NotCellular && failing_check(&v) == Some("gram_factorizations"), "{:?}", v.reason);
    Ok(())
}

fn criterion_3() -> Outcome {
    let b = built("catalog:Kronecker");
    let a = b.algebra(DEFAULT_CAP).map_err(|e| e.to_string())?;
    let d = b.cell_datum(&a).map_err(|e| e.to_string())?.ok_or("no datum")?;
    let v = verify(&d, &a).map_err(|e| e.to_string())?;
    ensure!(v.ok(), "datum fails");
    let s = v.structure.unwrap();
    ensure!(s.lambda_plus.len() == 1, "lambda plus {:?}", s.lambda_plus);
    ensure!(s.decomposition == m(&[&[1], &[1], &[1], &[1]]), "D {:?}", s.decomposition);
    let dtd: usize = s.decomposition.iter().map(|r| r[0] * r[0]).sum();
    ensure!(dtd == 4 && cartan(&a) == m(&[&[4]]), "DtD {dtd}");
    Ok(())
}

fn criterion_4() -> Outcome {
    let (d1, _) = verified("catalog:LambdaPrime?l=0&m=1")?;
    let (d2, _) = verified("catalog:GammaZero?m=1")?;
    ensure!((d1, d2) == (10, 19), "dims {d1} {d2}");
    let want = m(&[&[3, 2, 1, 0], &[2, 4, 2, 0], &[1, 2, 2, 1], &[0, 0, 1, 2]]);
    for mm in [2, 3] {
        let v = report(&built(&format!("catalog:GammaZero?m={mm}")))?;
        ensure!(v.target_cartan == want, "m={mm}: {:?}", v.target_cartan);
        ensure!(v.candidates.is_empty(), "m={mm}: candidates");
        ensure!(v.verdict == VerdictKind::NotCellular, "m={mm}: verdict");
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let want = m(&[&[2, 2, 1], &[2, 4, 2], &[1, 2, 2]]);
    let d = m(&[&[1, 1, 1], &[1, 1, 0], &[0, 1, 1], &[0, 1, 0]]);
    for (l, mm) in [(1, 1), (1, 2), (2, 2)] {
        let v = report(&built(&format!("catalog:LambdaPrime?l={l}&m={mm}")))?;
        ensure!(v.target_cartan == want, "({l},{mm}): {:?}", v.target_cartan);
        ensure!(rows(&v) == vec![d.clone()], "({l},{mm}): {:?}", rows(&v));
        ensure!(v.orders.iter().all(|o| !o.consistent), "({l},{mm}): order");
        ensure!(v.verdict == VerdictKind::NotCellular, "({l},{mm}): verdict");
    }
    let v = report(&built("catalog:LambdaPrime?l=0&m=2"))?;
    ensure!(v.target_cartan == m(&[&[4, 2, 0], &[2, 2, 1], &[0, 1, 2]]), "(0,2): {:?}", v.target_cartan);
    ensure!(v.candidates.is_empty() && v.verdict == VerdictKind::NotCellular, "(0,2): candidates");
    Ok(())
}

fn criterion_6() -> Outcome {
    let corner = |c: usize| m(&[&[2, 1, 0, 0], &[1, 2, 1, 1], &[0, 1, 2, 0], &[0, 1, 0, c]]);
    let cases = [
        ("l=2&m=3", corner(2)),
        ("l=2&m=4", corner(2)),
        ("l=2&m=2", corner(2)),
        ("l=1&m=1", corner(3)),
        ("l=1&m=2", corner(3)),
        ("l=0&m=1", m(&[&[2, 1, 0, 0], &[1, 3, 1, 2], &[0, 1, 2, 0], &[0, 2, 0, 3]])),
        ("l=0&m=2", m(&[&[2, 1, 0, 0], &[1, 3, 1, 2], &[0, 1, 2, 0], &[0, 2, 0, 3]])),
        ("l=-1&m=1", m(&[&[3, 2, 1, 0], &[2, 3, 2, 1], &[1, 2, 3, 0], &[0, 1, 0, 2]])),
        ("l=-1&m=2", m(&[&[3, 2, 1, 0], &[2, 3, 2, 1], &[1, 2, 3, 0], &[0, 1, 0, 2]])),
    ];
    for (q, want) in cases {
        let v = report(&built(&format!("catalog:GammaTwo?{q}")))?;
        ensure!(v.target_cartan == want, "{q}: {:?}", v.target_cartan);
        let stage = failing_check(&v);
        ensure!(
            v.verdict == VerdictKind::NotCellular && matches!(stage, Some("gram_factorizations" | "order_consistency")),
            "{q}: {} {:?}",
            v.verdict,
            stage
        );
    }
    let (d1, _) = verified("catalog:GammaTwo?l=0&m=0")?;
    let (d2, _) = verified("catalog:GammaTwo?l=-1&m=0")?;
    ensure!((d1, d2) == (11, 19), "dims {d1} {d2}");
    Ok(())
}

fn criterion_7() -> Outcome {
    for (name, dim) in [("A1?lambda=2", 20), ("A2?lambda=2", 12), ("A4", 28), ("A7", 28), ("A11", 23)] {
        let (d, _) = verified(&format!("catalog:{name}"))?;
        ensure!(d == dim, "{name}: dim {d}");
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let v = report(&built("catalog:A3"))?;
    ensure!(v.candidates.len() == 2 && v.orders.iter().all(|o| !o.consistent), "A3: {:?}", rows(&v));
    ensure!(v.verdict == VerdictKind::NotCellular && failing_check(&v) == Some("order_consistency"), "A3: {:?}", v.reason);
    for name in ["A8", "A9", "A10", "A12", "A15", "A16", "GammaOne"] {
        let v = report(&built(&format!("catalog:{name}")))?;
        ensure!(v.verdict == VerdictKind::NotCellular, "{name}: {}", v.verdict);
        let ext = v.certificates.iter().find(|c| c.check == "ext1_symmetric").ok_or("no ext1 certificate")?;
        ensure!(ext.status == Status::Fail, "{name}: Ext1 symmetric");
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    let db = vec![m(&[&[1, 1], &[1, 1], &[1, 0], &[1, 0]])];
    let a5 = vec![m(&[&[2, 1], &[1, 1], &[0, 1]]), m(&[&[1, 1], &[1, 1], &[1, 1], &[1, 0], &[1, 0]])];
    let a6 = vec![m(&[&[2, 1], &[1, 0], &[0, 1]]), m(&[&[1, 1], &[1, 1], &[1, 0], &[1, 0], &[1, 0]])];
    let cases = [
        ("LoopedPair", m(&[&[4, 2], &[2, 2]]), db.clone()),
        ("A5", m(&[&[5, 3], &[3, 3]]), a5.clone()),
        ("A6", m(&[&[5, 2], &[2, 2]]), a6.clone()),
        ("Lambda1", m(&[&[5, 3], &[3, 3]]), a5),
        ("Lambda2", m(&[&[5, 2], &[2, 2]]), a6),
        ("Omega?n=2", m(&[&[4, 2], &[2, 2]]), db.clone()),
        ("Omega?n=3", m(&[&[4, 2], &[2, 2]]), db.clone()),
        ("Omega?n=4", m(&[&[4, 2], &[2, 2]]), db),
    ];
    for (name, c, d) in cases {
        let v = report(&built(&format!("catalog:{name}")))?;
        ensure!(v.target_cartan == c, "{name}: {:?}", v.target_cartan);
        ensure!(rows(&v) == d, "{name}: {:?}", rows(&v));
        ensure!(v.verdict == VerdictKind::Undecided, "{name}: {} {:?}", v.verdict, v.reason);
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    let algebras = all();
    for (uri, b, a) in &algebras {
        ensure!(a.associativity_failure().is_none(), "{uri}: associativity");
        let c = cartan(a);
        for s in subsets(a.num_vertices(), 4) {
            let t = a.truncate(&s).map_err(|e| e.to_string())?;
            let sub: Matrix = s.iter().map(|&i| s.iter().map(|&j| c[i][j]).collect()).collect();
            ensure!(cartan(&t) == sub, "{uri}: truncation {s:?}");
        }
        if b.metadata.self_injective {
            ensure!(weakly_symmetric(a).0, "{uri}: weakly symmetric");
        }
        if let Some(d) = b.cell_datum(a).map_err(|e| e.to_string())? {
            let iota = a.reversal_matrix(&d.vertex_map, &d.arrow_map);
            ensure!(iota.mul(&iota) == Mat::identity(a.field, a.dim()), "{uri}: involution");
            ensure!(verify_c3(&d, a).0, "{uri}: C3");
        }
        if b.metadata.expected_verdict == Some(VerdictKind::CellularVerified) {
            ensure!(report(b)?.verdict == VerdictKind::CellularVerified, "{uri}: verdict");
            ensure!(determinant(&c) > 0, "{uri}: det");
        }
    }
    let factor = |c: &Matrix| -> Vec<Matrix> {
        gram_factorizations(c, MAX_TRACE).unwrap().into_iter().map(|d| d.rows).collect()
    };
    for n in 1..=MAX_TRACE {
        let o = oracle(n);
        if n <= 3 {
            for c in symmetric_matrices(n) {
                ensure!(factor(&c) == o.get(&c).cloned().unwrap_or_default(), "gram {c:?}");
            }
        }
        for (c, want) in o {
            ensure!(factor(&c) == want, "gram {c:?}");
        }
    }
    let refuted = m(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
    let d = cellar_core::obstruction::DecompCandidate { rows: refuted };
    ensure!(!order_consistency(&d, true).consistent, "order sanity");
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("looped pair: dimension, Cartan matrix, unique candidate", criterion_1),
        ("odd cycles refuted by order consistency; branch has no factorization", criterion_2),
        ("Kronecker datum verifies with D = (1,1,1,1)", criterion_3),
        ("LambdaPrime(0,1) and GammaZero(1) data; GammaZero(2,3) truncations", criterion_4),
        ("LambdaPrime truncations and candidates", criterion_5),
        ("GammaTwo truncations and data", criterion_6),
        ("sporadic positives A1, A2, A4, A7, A11", criterion_7),
        ("sporadic negatives: A3 by order, the rest by Ext1", criterion_8),
        ("undecided set with exact candidate sets", criterion_9),
        ("property suites", criterion_10),
    ];
    let mut failed = Vec::new();
    for (k, (label, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {label}", k + 1),
            Err(e) => {
                println!("criterion {:>2}: FAIL  {label}: {e}", k + 1);
                failed.push(k + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
