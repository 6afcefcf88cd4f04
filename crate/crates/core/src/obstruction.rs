//! Necessary conditions for cellularity: determinant, Ext¹-symmetry, weak symmetry,
//! factorizations `C = DᵀD` and order consistency of decomposition matrices.

use serde::Serialize;

use crate::algebra::FdAlgebra;
use crate::cellular::{verify, CellDatum};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::module::{cartan, ext1_symmetric, weakly_symmetric};
use crate::scalar::Field;

pub const DEFAULT_TRACE_CAP: usize = 24;

/// A candidate decomposition matrix, rows lexicographically nonincreasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompCandidate {
    pub rows: Vec<Vec<usize>>,
}

impl DecompCandidate {
    pub fn cols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn gram(&self) -> Vec<Vec<usize>> {
        let n = self.cols();
        let mut g = vec![vec![0; n]; n];
        for r in &self.rows {
            for i in 0..n {
                for j in 0..n {
                    g[i][j] += r[i] * r[j];
                }
            }
        }
        g
    }

    /// No zero row and a 1 in every column.
    pub fn is_valid(&self) -> bool {
        let n = self.cols();
        self.rows.iter().all(|r| r.iter().any(|&x| x > 0)) && (0..n).all(|j| self.rows.iter().any(|r| r[j] == 1))
    }
}

pub fn check_cartan(c: &[Vec<usize>]) -> Result<()> {
    let n = c.len();
    for (i, row) in c.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Invalid("Cartan matrix must be square".into()));
        }
        if row[i] == 0 {
            return Err(Error::Invalid("Cartan matrix must have a positive diagonal".into()));
        }
        for j in 0..n {
            if c[j][i] != row[j] {
                return Err(Error::Invalid("Cartan matrix is not symmetric".into()));
            }
        }
    }
    Ok(())
}

pub fn trace(c: &[Vec<usize>]) -> usize {
    (0..c.len()).map(|i| c[i][i]).sum()
}

fn isqrt(x: usize) -> usize {
    let mut r = 0;
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// All decomposition candidates `D` with `DᵀD = C`, up to row order. At most `trace(C)` rows.
/// Sorted by row count, then lexicographically.
pub fn gram_factorizations(c: &[Vec<usize>], trace_cap: usize) -> Result<Vec<DecompCandidate>> {
    check_cartan(c)?;
    let t = trace(c);
    if t > trace_cap {
        return Err(Error::Cap(format!("trace {t} exceeds the factorization cap {trace_cap}")));
    }
    let n = c.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let bounds: Vec<usize> = (0..n).map(|i| isqrt(c[i][i])).collect();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new()];
    for &b in &bounds {
        rows = rows.into_iter().flat_map(|r| (0..=b).map(move |x| [r.clone(), vec![x]].concat())).collect();
    }
    rows.retain(|r| r.iter().any(|&x| x > 0));
    rows.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = Vec::new();
    let mut stack = Vec::new();
    let mut rem: Vec<Vec<usize>> = c.to_vec();
    search(&rows, 0, &mut rem, &mut stack, &mut out);
    out.retain(|d: &DecompCandidate| d.is_valid());
    out.sort_by(|a, b| (a.rows.len(), &a.rows).cmp(&(b.rows.len(), &b.rows)));
    for d in &out {
        debug_assert_eq!(d.gram(), c);
        debug_assert!(d.rows.len() <= t);
    }
    Ok(out)
}

fn search(rows: &[Vec<usize>], start: usize, rem: &mut Vec<Vec<usize>>, stack: &mut Vec<usize>, out: &mut Vec<DecompCandidate>) {
    let n = rem.len();
    if (0..n).all(|i| rem[i][i] == 0) {
        if rem.iter().all(|r| r.iter().all(|&x| x == 0)) {
            out.push(DecompCandidate { rows: stack.iter().map(|&k| rows[k].clone()).collect() });
        }
        return;
    }
    for i in 0..n {
        if rem[i][i] == 0 && rem[i].iter().any(|&x| x > 0) {
            return;
        }
    }
    for k in start..rows.len() {
        let r = &rows[k];
        let fits = (0..n).all(|i| r[i] == 0 || (i..n).all(|j| r[i] * r[j] <= rem[i][j]));
        if !fits {
            continue;
        }
        for i in 0..n {
            for j in 0..n {
                rem[i][j] -= r[i] * r[j];
            }
        }
        stack.push(k);
        search(rows, k, rem, stack, out);
        stack.pop();
        for i in 0..n {
            for j in 0..n {
                rem[i][j] += r[i] * r[j];
            }
        }
    }
}

/// Outcome of the order-consistency test for one candidate. Rows and columns are 0-based;
/// a forced pair `(a, b)` means row `a` lies strictly below row `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderCertificate {
    pub consistent: bool,
    pub phi: Vec<usize>,
    pub forced: Vec<(usize, usize)>,
    /// Bottom to top.
    pub chain: Option<Vec<usize>>,
    pub reason: String,
}

fn acyclic_order(k: usize, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; k];
    for &(_, b) in edges {
        indeg[b] += 1;
    }
    let mut done = vec![false; k];
    let mut out = Vec::with_capacity(k);
    while out.len() < k {
        let next = (0..k).find(|&x| !done[x] && indeg[x] == 0)?;
        done[next] = true;
        out.push(next);
        for &(a, b) in edges {
            if a == next {
                indeg[b] -= 1;
            }
        }
    }
    Some(out)
}

fn forced_relations(d: &DecompCandidate, phi: &[usize]) -> Vec<(usize, usize)> {
    let mut f = Vec::new();
    for (mu, &p) in phi.iter().enumerate() {
        for (l, row) in d.rows.iter().enumerate() {
            if l != p && row[mu] != 0 {
                f.push((p, l));
            }
        }
    }
    f.sort_unstable();
    f.dedup();
    f
}

fn assignments(choices: &dyn Fn(usize) -> Vec<usize>, cols: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(cols);
    fn rec(cur: &mut Vec<usize>, cols: usize, choices: &dyn Fn(usize) -> Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == cols {
            out.push(cur.clone());
            return;
        }
        for r in choices(cur.len()) {
            if !cur.contains(&r) {
                cur.push(r);
                rec(cur, cols, choices, out);
                cur.pop();
            }
        }
    }
    rec(&mut cur, cols, choices, &mut out);
    out
}

/// Searches for an assignment of columns to rows (`d[φ(μ)][μ] = 1`) and a total order on the
/// rows compatible with the forced relations `φ(μ) < λ` for every other row `λ` in the
/// support of column `μ`. Under `self_injective`, the last support row of each column must
/// carry the entry 1 and differ from column to column.
pub fn order_consistency(d: &DecompCandidate, self_injective: bool) -> OrderCertificate {
    let n = d.cols();
    let k = d.rows.len();
    let ones = |mu: usize| -> Vec<usize> { (0..k).filter(|&l| d.rows[l][mu] == 1).collect() };
    let phis = assignments(&ones, n);
    if phis.is_empty() {
        return OrderCertificate {
            consistent: false,
            phi: Vec::new(),
            forced: Vec::new(),
            chain: None,
            reason: "no injective assignment of columns to rows with entry 1".into(),
        };
    }
    let lasts = assignments(&ones, n);
    let mut first_acyclic: Option<(Vec<usize>, Vec<(usize, usize)>)> = None;
    for phi in &phis {
        let forced = forced_relations(d, phi);
        let Some(chain) = acyclic_order(k, &forced) else { continue };
        if !self_injective {
            return OrderCertificate {
                consistent: true,
                phi: phi.clone(),
                forced,
                chain: Some(chain),
                reason: "consistent".into(),
            };
        }
        if first_acyclic.is_none() {
            first_acyclic = Some((phi.clone(), forced.clone()));
        }
        for last in &lasts {
            let mut edges = forced.clone();
            for (mu, &top) in last.iter().enumerate() {
                for l in 0..k {
                    if l != top && d.rows[l][mu] != 0 {
                        edges.push((l, top));
                    }
                }
            }
            edges.sort_unstable();
            edges.dedup();
            if let Some(chain) = acyclic_order(k, &edges) {
                return OrderCertificate {
                    consistent: true,
                    phi: phi.clone(),
                    forced,
                    chain: Some(chain),
                    reason: "consistent".into(),
                };
            }
        }
    }
    match first_acyclic {
        Some((phi, forced)) => OrderCertificate {
            consistent: false,
            phi,
            forced,
            chain: None,
            reason: "no order has admissible maximal rows".into(),
        },
        None => {
            let phi = phis[0].clone();
            let forced = forced_relations(d, &phi);
            OrderCertificate { consistent: false, phi, forced, chain: None, reason: "every assignment forces a directed cycle".into() }
        }
    }
}

/// Re-checks a consistent certificate against the conditions it claims.
pub fn recheck(d: &DecompCandidate, cert: &OrderCertificate, self_injective: bool) -> bool {
    let Some(chain) = &cert.chain else { return false };
    let k = d.rows.len();
    let mut pos = vec![usize::MAX; k];
    for (i, &r) in chain.iter().enumerate() {
        pos[r] = i;
    }
    if chain.len() != k || pos.iter().any(|&p| p == usize::MAX) {
        return false;
    }
    for (mu, &p) in cert.phi.iter().enumerate() {
        if d.rows[p][mu] != 1 {
            return false;
        }
        if (0..k).any(|l| d.rows[l][mu] != 0 && pos[l] < pos[p]) {
            return false;
        }
    }
    let unit = |r: usize| d.rows[r].iter().filter(|&&x| x > 0).count() == 1 && d.rows[r].contains(&1);
    if !unit(chain[0]) {
        return false;
    }
    if self_injective {
        if !unit(chain[k - 1]) {
            return false;
        }
        let mut tops = Vec::new();
        for mu in 0..d.cols() {
            let top = *chain.iter().rev().find(|&&r| d.rows[r][mu] != 0).unwrap();
            if d.rows[top][mu] != 1 || tops.contains(&top) {
                return false;
            }
            tops.push(top);
        }
    }
    true
}

/// `det C` over the rationals.
pub fn determinant(c: &[Vec<usize>]) -> i64 {
    let f = Field::Rational;
    let rows: Vec<_> = c.iter().map(|r| r.iter().map(|&x| f.from_i64(x as i64)).collect()).collect();
    Mat::from_rows(f, c.len(), &rows).det().to_i64().expect("integer determinant")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub check: String,
    pub status: Status,
    pub detail: String,
}

/// Shared state of one report run.
pub struct Context<'a> {
    pub full: &'a FdAlgebra,
    pub target: &'a FdAlgebra,
    pub self_injective: bool,
    pub trace_cap: usize,
    pub full_cartan: Vec<Vec<usize>>,
    pub target_cartan: Vec<Vec<usize>>,
    pub candidates: Option<Vec<DecompCandidate>>,
    pub orders: Vec<OrderCertificate>,
}

impl<'a> Context<'a> {
    pub fn new(full: &'a FdAlgebra, target: &'a FdAlgebra, self_injective: bool, trace_cap: usize) -> Context<'a> {
        Context {
            full,
            target,
            self_injective,
            trace_cap,
            full_cartan: cartan(full),
            target_cartan: cartan(target),
            candidates: None,
            orders: Vec::new(),
        }
    }
}

/// A necessary condition for cellularity.
pub trait Obstruction: Send + Sync {
    fn name(&self) -> &'static str;
    fn run(&self, ctx: &mut Context) -> Result<Certificate>;
}

fn cert(check: &str, status: Status, detail: impl Into<String>) -> Certificate {
    Certificate { check: check.into(), status, detail: detail.into() }
}

struct Determinant;
impl Obstruction for Determinant {
    fn name(&self) -> &'static str {
        "det_positive"
    }
    fn run(&self, ctx: &mut Context) -> Result<Certificate> {
        let d = determinant(&ctx.full_cartan);
        let status = if d > 0 { Status::Pass } else { Status::Fail };
        Ok(cert(self.name(), status, format!("det C = {d}")))
    }
}

struct Ext1Symmetry;
impl Obstruction for Ext1Symmetry {
    fn name(&self) -> &'static str {
        "ext1_symmetric"
    }
    fn run(&self, ctx: &mut Context) -> Result<Certificate> {
        let (ok, w) = ext1_symmetric(ctx.full);
        Ok(match w {
            None if ok => cert(self.name(), Status::Pass, "Gabriel quiver is symmetric"),
            Some((i, j)) => {
                let v = &ctx.full.vertices;
                cert(self.name(), Status::Fail, format!("Ext1 asymmetric at vertices {} and {}", v[i], v[j]))
            }
            None => cert(self.name(), Status::Fail, "Ext1 asymmetric"),
        })
    }
}

struct WeakSymmetry;
impl Obstruction for WeakSymmetry {
    fn name(&self) -> &'static str {
        "weakly_symmetric"
    }
    fn run(&self, ctx: &mut Context) -> Result<Certificate> {
        if !ctx.self_injective {
            return Ok(cert(self.name(), Status::Skipped, "not declared self-injective"));
        }
        let (ok, w) = weakly_symmetric(ctx.full);
        Ok(match (ok, w) {
            (true, _) => cert(self.name(), Status::Pass, "top and socle agree for every projective"),
            (false, Some(v)) => cert(self.name(), Status::Fail, format!("projective at vertex {} has top and socle that differ", ctx.full.vertices[v])),
            (false, None) => cert(self.name(), Status::Fail, "not weakly symmetric"),
        })
    }
}

struct Factorization;
impl Obstruction for Factorization {
    fn name(&self) -> &'static str {
        "gram_factorizations"
    }
    fn run(&self, ctx: &mut Context) -> Result<Certificate> {
        match gram_factorizations(&ctx.target_cartan, ctx.trace_cap) {
            Ok(c) => {
                let n = c.len();
                ctx.candidates = Some(c);
                if n == 0 {
                    Ok(cert(self.name(), Status::Fail, "no natural matrix D with DtD = C"))
                } else {
                    Ok(cert(self.name(), Status::Pass, format!("{n} candidate{}", if n == 1 { "" } else { "s" })))
                }
            }
            Err(Error::Cap(m)) => Ok(cert(self.name(), Status::Skipped, m)),
            Err(e) => Err(e),
        }
    }
}

struct OrderConsistency;
impl Obstruction for OrderConsistency {
    fn name(&self) -> &'static str {
        "order_consistency"
    }
    fn run(&self, ctx: &mut Context) -> Result<Certificate> {
        let Some(cands) = ctx.candidates.as_ref().filter(|c| !c.is_empty()) else {
            return Ok(cert(self.name(), Status::Skipped, "no candidates"));
        };
        ctx.orders = cands.iter().map(|d| order_consistency(d, ctx.self_injective)).collect();
        let good = ctx.orders.iter().filter(|o| o.consistent).count();
        if good > 0 {
            return Ok(cert(self.name(), Status::Pass, format!("{good} of {} candidates consistent", cands.len())));
        }
        let what = match cands.len() {
            1 => "the only candidate".to_string(),
            2 => "both candidates".to_string(),
            n => format!("all {n} candidates"),
        };
        Ok(cert(self.name(), Status::Fail, format!("order_consistency refuted {what}")))
    }
}

/// The registered checks, in the order they are run.
pub fn registry() -> Vec<Box<dyn Obstruction>> {
    vec![Box::new(Determinant), Box::new(Ext1Symmetry), Box::new(WeakSymmetry), Box::new(Factorization), Box::new(OrderConsistency)]
}

pub fn by_name(name: &str) -> Option<Box<dyn Obstruction>> {
    registry().into_iter().find(|o| o.name() == name)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VerdictKind {
    #[serde(rename = "NOT-CELLULAR")]
    NotCellular,
    #[serde(rename = "UNDECIDED")]
    Undecided,
    #[serde(rename = "CELLULAR-VERIFIED")]
    CellularVerified,
}

impl std::fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            VerdictKind::NotCellular => "NOT-CELLULAR",
            VerdictKind::Undecided => "UNDECIDED",
            VerdictKind::CellularVerified => "CELLULAR-VERIFIED",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub verdict: VerdictKind,
    /// The first failing certificate, if any.
    pub reason: Option<Certificate>,
    pub certificates: Vec<Certificate>,
    pub full_cartan: Vec<Vec<usize>>,
    pub target_cartan: Vec<Vec<usize>>,
    pub candidates: Vec<DecompCandidate>,
    pub orders: Vec<OrderCertificate>,
}

/// Runs every registered check; a verifying datum upgrades the verdict.
pub fn necessary_conditions_report(
    full: &FdAlgebra,
    target: &FdAlgebra,
    self_injective: bool,
    trace_cap: usize,
    datum: Option<&CellDatum>,
) -> Result<Verdict> {
    let mut ctx = Context::new(full, target, self_injective, trace_cap);
    let mut certificates = Vec::new();
    for check in registry() {
        certificates.push(check.run(&mut ctx)?);
    }
    if let Some(d) = datum {
        let v = verify(d, full)?;
        let detail = if v.ok() {
            "C1, C2, C3 and DtD = C hold".to_string()
        } else {
            format!("C1 {}, C2 {}, C3 {}, DtD = C {}", v.c1, v.c2, v.c3, v.cartan_identity.unwrap_or(false))
        };
        certificates.push(cert("cell_datum", if v.ok() { Status::Pass } else { Status::Fail }, detail));
    }
    let reason = certificates.iter().find(|c| c.status == Status::Fail && c.check != "cell_datum").cloned();
    let verified = certificates.iter().any(|c| c.check == "cell_datum" && c.status == Status::Pass);
    let verdict = if verified {
        VerdictKind::CellularVerified
    } else if reason.is_some() {
        VerdictKind::NotCellular
    } else {
        VerdictKind::Undecided
    };
    Ok(Verdict {
        verdict,
        reason,
        certificates,
        full_cartan: ctx.full_cartan,
        target_cartan: ctx.target_cartan,
        candidates: ctx.candidates.unwrap_or_default(),
        orders: ctx.orders,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cand(rows: &[&[usize]]) -> DecompCandidate {
        DecompCandidate { rows: rows.iter().map(|r| r.to_vec()).collect() }
    }

    #[test]
    fn small_factorizations() {
        assert_eq!(gram_factorizations(&[vec![1]], 24).unwrap(), vec![cand(&[&[1]])]);
        assert_eq!(
            gram_factorizations(&[vec![4, 2], vec![2, 2]], 24).unwrap(),
            vec![cand(&[&[1, 1], &[1, 1], &[1, 0], &[1, 0]])]
        );
        let branch = [vec![2, 1, 0, 0], vec![1, 2, 1, 1], vec![0, 1, 2, 0], vec![0, 1, 0, 2]];
        assert!(gram_factorizations(&branch, 24).unwrap().is_empty());
        let a5 = gram_factorizations(&[vec![5, 3], vec![3, 3]], 24).unwrap();
        assert_eq!(a5, vec![cand(&[&[2, 1], &[1, 1], &[0, 1]]), cand(&[&[1, 1], &[1, 1], &[1, 1], &[1, 0], &[1, 0]])]);
    }

    #[test]
    fn cap_and_shape_errors() {
        assert!(matches!(gram_factorizations(&[vec![25]], 24), Err(Error::Cap(_))));
        assert!(gram_factorizations(&[vec![1, 0], vec![1, 1]], 24).is_err());
    }

    #[test]
    fn order_examples() {
        let id = order_consistency(&cand(&[&[1, 0], &[0, 1]]), true);
        assert!(id.consistent);
        let db = cand(&[&[1, 1], &[1, 1], &[1, 0], &[1, 0]]);
        let c = order_consistency(&db, true);
        assert!(c.consistent);
        assert_eq!(c.chain, Some(vec![2, 0, 1, 3]));
        assert!(recheck(&db, &c, true));
        let circ = cand(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let r = order_consistency(&circ, true);
        assert!(!r.consistent);
        assert_eq!(r.reason, "every assignment forces a directed cycle");
        let second = cand(&[&[1, 1, 1], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(!order_consistency(&second, true).consistent);
        assert!(order_consistency(&second, false).consistent);
    }

    #[test]
    fn determinant_values() {
        assert_eq!(determinant(&[vec![4, 2], vec![2, 2]]), 4);
        assert_eq!(determinant(&[vec![1, 1], vec![1, 1]]), 0);
    }

    #[test]
    fn registry_names() {
        let names: Vec<&str> = registry().iter().map(|o| o.name()).collect();
        assert_eq!(names, ["det_positive", "ext1_symmetric", "weakly_symmetric", "gram_factorizations", "order_consistency"]);
        assert!(by_name("order_consistency").is_some());
    }
}
