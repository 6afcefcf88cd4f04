#![allow(dead_code)]

use std::collections::BTreeMap;

use cellar_core::algebra::{FdAlgebra, DEFAULT_CAP};
use cellar_core::catalog::{self, Built};

/// Instances covering every entry and every branch of the parameterised families.
pub const INSTANCES: &[&str] = &[
    "catalog:Kronecker",
    "catalog:LocalA",
    "catalog:LocalA?lambda=3",
    "catalog:LoopedPair",
    "catalog:ModifiedBrauerLine?n=2",
    "catalog:ModifiedBrauerLine?n=3",
    "catalog:ModifiedBrauerLine?n=4",
    "catalog:DoubleQuiver",
    "catalog:DoubleQuiver?edges=1>2,2>3",
    "catalog:DoubleQuiverCycle?l=3",
    "catalog:DoubleQuiverCycle?l=4",
    "catalog:DoubleQuiverCycle?l=5",
    "catalog:DoubleQuiverBranch",
    "catalog:BrauerLine?n=1",
    "catalog:BrauerLine?n=2",
    "catalog:BrauerLine?n=3&mults=0:3",
    "catalog:BrauerLine?n=3&mults=0:2,3:2",
    "catalog:OddCycle?n=1",
    "catalog:OddCycle?n=2",
    "catalog:LambdaPrime?l=0&m=0",
    "catalog:LambdaPrime?l=0&m=1",
    "catalog:LambdaPrime?l=1&m=0",
    "catalog:LambdaPrime?l=0&m=2",
    "catalog:LambdaPrime?l=2&m=0",
    "catalog:LambdaPrime?l=1&m=1",
    "catalog:LambdaPrime?l=1&m=2",
    "catalog:LambdaPrime?l=2&m=1",
    "catalog:LambdaPrime?l=2&m=2",
    "catalog:GammaZero?m=1",
    "catalog:GammaZero?m=2",
    "catalog:GammaZero?m=3",
    "catalog:GammaOne",
    "catalog:GammaTwo?l=0&m=0",
    "catalog:GammaTwo?l=-1&m=0",
    "catalog:GammaTwo?l=-1&m=1",
    "catalog:GammaTwo?l=-1&m=2",
    "catalog:GammaTwo?l=0&m=1",
    "catalog:GammaTwo?l=0&m=2",
    "catalog:GammaTwo?l=1&m=1",
    "catalog:GammaTwo?l=1&m=2",
    "catalog:GammaTwo?l=1&m=3",
    "catalog:GammaTwo?l=2&m=2",
    "catalog:GammaTwo?l=2&m=3",
    "catalog:GammaTwo?l=2&m=4",
    "catalog:Omega?n=1",
    "catalog:Omega?n=2",
    "catalog:Omega?n=3",
    "catalog:Omega?n=4",
    "catalog:A1",
    "catalog:A2",
    "catalog:A3",
    "catalog:A4",
    "catalog:A5",
    "catalog:A6",
    "catalog:A7",
    "catalog:A8",
    "catalog:A9",
    "catalog:A10",
    "catalog:A11",
    "catalog:A12",
    "catalog:A13",
    "catalog:A14",
    "catalog:A15",
    "catalog:A16",
    "catalog:Lambda1",
    "catalog:Lambda2",
];

pub fn built(uri: &str) -> Built {
    catalog::build_uri(uri).unwrap_or_else(|e| panic!("{uri}: {e}"))
}

pub fn all() -> Vec<(&'static str, Built, FdAlgebra)> {
    INSTANCES
        .iter()
        .map(|uri| {
            let b = built(uri);
            let a = b.algebra(DEFAULT_CAP).unwrap_or_else(|e| panic!("{uri}: {e}"));
            (*uri, b, a)
        })
        .collect()
}

pub fn subsets(n: usize, max: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << n))
        .filter(|m| m.count_ones() as usize <= max)
        .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
        .collect()
}

pub const MAX_TRACE: usize = 8;

pub type Matrix = Vec<Vec<usize>>;

pub fn gram(rows: &[Vec<usize>], n: usize) -> Matrix {
    let mut g = vec![vec![0; n]; n];
    for r in rows {
        for i in 0..n {
            for j in 0..n {
                g[i][j] += r[i] * r[j];
            }
        }
    }
    g
}

pub fn natural(rows: &[Vec<usize>], n: usize) -> bool {
    rows.iter().all(|r| r.iter().any(|&x| x > 0)) && (0..n).all(|j| rows.iter().any(|r| r[j] == 1))
}

/// Every natural matrix with `n` columns and total squared norm at most `MAX_TRACE`, as a
/// multiset of rows, grouped by Gram matrix.
pub fn oracle(n: usize) -> BTreeMap<Matrix, Vec<Matrix>> {
    let mut vectors: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..n {
        vectors = vectors.into_iter().flat_map(|v| (0..=2).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    let norm = |v: &Vec<usize>| v.iter().map(|x| x * x).sum::<usize>();
    vectors.retain(|v| (1..=MAX_TRACE).contains(&norm(v)));
    vectors.sort_by(|a, b| b.cmp(a));
    let mut out: BTreeMap<Matrix, Vec<Matrix>> = BTreeMap::new();
    fn go(
        vs: &[Vec<usize>],
        start: usize,
        budget: usize,
        n: usize,
        cur: &mut Vec<Vec<usize>>,
        out: &mut BTreeMap<Matrix, Vec<Matrix>>,
    ) {
        if !cur.is_empty() && natural(cur, n) {
            out.entry(gram(cur, n)).or_default().push(cur.clone());
        }
        let uncovered = (0..n).filter(|&j| !cur.iter().any(|r| r[j] == 1)).count();
        if uncovered > budget {
            return;
        }
        for k in start..vs.len() {
            let w: usize = vs[k].iter().map(|x| x * x).sum();
            if w <= budget {
                cur.push(vs[k].clone());
                go(vs, k, budget - w, n, cur, out);
                cur.pop();
            }
        }
    }
    go(&vectors, 0, MAX_TRACE, n, &mut Vec::new(), &mut out);
    for ds in out.values_mut() {
        ds.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    }
    out
}

/// Symmetric matrices with positive diagonal, trace at most `MAX_TRACE` and off-diagonal
/// entries up to one past the Cauchy-Schwarz bound.
pub fn symmetric_matrices(n: usize) -> Vec<Matrix> {
    let mut diags: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..n {
        diags = diags
            .into_iter()
            .flat_map(|d| {
                let used: usize = d.iter().sum();
                (1..=MAX_TRACE.saturating_sub(used)).map(move |x| [d.clone(), vec![x]].concat())
            })
            .collect();
    }
    let mut out = Vec::new();
    for d in diags {
        let mut ms = vec![{
            let mut m = vec![vec![0; n]; n];
            for i in 0..n {
                m[i][i] = d[i];
            }
            m
        }];
        for i in 0..n {
            for j in i + 1..n {
                let bound = ((d[i] * d[j]) as f64).sqrt() as usize + 1;
                ms = ms
                    .into_iter()
                    .flat_map(|m| {
                        (0..=bound).map(move |x| {
                            let mut m = m.clone();
                            m[i][j] = x;
                            m[j][i] = x;
                            m
                        })
                    })
                    .collect();
            }
        }
        out.extend(ms);
    }
    out
}

