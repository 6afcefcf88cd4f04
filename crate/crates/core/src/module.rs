//! Left modules over an [`FdAlgebra`], projectives, radical and socle data, Cartan
//! matrices, Gabriel quivers and isomorphism tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::FdAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{zero_vec, Mat, Span, Vector};
use crate::scalar::{Field, Scalar};

/// Default seed for the randomized invertibility shortcut.
pub const DEFAULT_SEED: u64 = 0x5eed_ce11;

/// A finite-dimensional left module, stored as the action matrix of every basis
/// element of the ambient algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule {
    pub field: Field,
    pub labels: Vec<String>,
    pub actions: Vec<Mat>,
    pub num_vertices: usize,
    idempotents: Vec<usize>,
}

/// Composition multiplicities indexed by vertex.
pub type DimensionVector = Vec<usize>;

impl LeftModule {
    pub fn new(a: &FdAlgebra, labels: Vec<String>, actions: Vec<Mat>) -> Result<LeftModule> {
        let m = LeftModule {
            field: a.field,
            labels,
            actions,
            num_vertices: a.num_vertices(),
            idempotents: a.idempotents.clone(),
        };
        m.validate(a)?;
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Checks the module axioms against the structure constants.
    pub fn validate(&self, a: &FdAlgebra) -> Result<()> {
        let n = self.dim();
        if self.actions.len() != a.dim() || self.actions.iter().any(|m| m.rows != n || m.cols != n) {
            return Err(Error::Invalid("action matrices have the wrong shape".into()));
        }
        let mut sum = Mat::zeros(self.field, n, n);
        for &e in &a.idempotents {
            sum = sum.add(&self.actions[e]);
        }
        if sum != Mat::identity(self.field, n) {
            return Err(Error::Invalid("vertex idempotents do not sum to the identity".into()));
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = self.actions[i].mul(&self.actions[j]);
                let mut rhs = Mat::zeros(self.field, n, n);
                for (k, c) in a.product_of_basis(i, j) {
                    rhs = rhs.add(&self.actions[*k].scaled(c));
                }
                if lhs != rhs {
                    return Err(Error::Invalid(format!(
                        "action does not respect the product {} * {}",
                        a.basis[i].label, a.basis[j].label
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn act(&self, x: &[Scalar]) -> Mat {
        let n = self.dim();
        let mut m = Mat::zeros(self.field, n, n);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.actions[i].scaled(c));
            }
        }
        m
    }

    pub fn whole(&self) -> Span {
        let n = self.dim();
        let mut s = Span::new(self.field, n);
        for i in 0..n {
            let mut v = zero_vec(self.field, n);
            v[i] = self.field.one();
            s.insert(&v);
        }
        s
    }

    /// Dimension vector of a submodule.
    pub fn dims_of(&self, u: &Span) -> DimensionVector {
        self.idempotents
            .iter()
            .map(|&e| Span::from_vectors(self.field, self.dim(), &u.basis().iter().map(|v| self.actions[e].apply(v)).collect::<Vec<_>>()).dim())
            .collect()
    }

    pub fn dimension_vector(&self) -> DimensionVector {
        self.dims_of(&self.whole())
    }

    /// `J U` for a submodule `U`.
    pub fn radical_of(&self, a: &FdAlgebra, u: &Span) -> Span {
        let mut s = Span::new(self.field, self.dim());
        for r in a.radical_basis() {
            for v in u.basis() {
                s.insert(&self.actions[r].apply(v));
            }
        }
        s
    }

    /// Annihilator of the radical.
    pub fn socle(&self, a: &FdAlgebra) -> Span {
        let n = self.dim();
        let mut rows: Vec<Vector> = Vec::new();
        for r in a.radical_basis() {
            rows.extend(self.actions[r].row_vecs());
        }
        if rows.is_empty() {
            return self.whole();
        }
        let m = Mat::from_rows(self.field, n, &rows);
        Span::from_vectors(self.field, n, &m.kernel())
    }

    pub fn socle_dims(&self, a: &FdAlgebra) -> DimensionVector {
        self.dims_of(&self.socle(a))
    }

    pub fn top_dims(&self, a: &FdAlgebra) -> DimensionVector {
        let all = self.dimension_vector();
        let rad = self.dims_of(&self.radical_of(a, &self.whole()));
        all.iter().zip(rad).map(|(x, y)| x - y).collect()
    }

    /// Dimensions of `M ⊃ JM ⊃ J²M ⊃ … ⊃ 0`.
    pub fn radical_series(&self, a: &FdAlgebra) -> Vec<usize> {
        let mut cur = self.whole();
        let mut out = vec![cur.dim()];
        while cur.dim() > 0 {
            let next = self.radical_of(a, &cur);
            assert!(next.dim() < cur.dim(), "radical series must decrease");
            cur = next;
            out.push(cur.dim());
        }
        out
    }

    /// Smallest submodule containing the given vectors.
    pub fn generated(&self, a: &FdAlgebra, vs: &[Vector]) -> Span {
        let mut s = Span::new(self.field, self.dim());
        let mut todo: Vec<Vector> = vs.to_vec();
        while let Some(v) = todo.pop() {
            if s.insert(&v) {
                for i in 0..a.dim() {
                    let w = self.actions[i].apply(&v);
                    if !s.contains(&w) {
                        todo.push(w);
                    }
                }
            }
        }
        s
    }

    pub fn is_submodule(&self, u: &Span) -> bool {
        self.actions.iter().all(|m| u.basis().iter().all(|v| u.contains(&m.apply(v))))
    }

    /// The subquotient `U / W` for submodules `W ⊆ U`.
    pub fn subquotient(&self, a: &FdAlgebra, u: &Span, w: &Span) -> Result<LeftModule> {
        if !self.is_submodule(u) || !self.is_submodule(w) {
            return Err(Error::Invalid("subquotient of non-submodules".into()));
        }
        let mut s = Span::new(self.field, self.dim());
        for v in w.basis() {
            s.insert(v);
        }
        let offset = w.basis().len();
        let mut complement: Vec<(usize, Vector)> = Vec::new();
        for (k, v) in u.basis().iter().enumerate() {
            if s.insert(v) {
                complement.push((offset + k, v.clone()));
            }
        }
        if s.dim() != u.dim() {
            return Err(Error::Invalid("W is not contained in U".into()));
        }
        let q = complement.len();
        let mut actions = Vec::with_capacity(a.dim());
        for m in &self.actions {
            let mut act = Mat::zeros(self.field, q, q);
            for (j, (_, v)) in complement.iter().enumerate() {
                let img = m.apply(v);
                let c = s.coords(&img).expect("image stays in U");
                for (i, (gi, _)) in complement.iter().enumerate() {
                    act.set(i, j, c[*gi].clone());
                }
            }
            actions.push(act);
        }
        let labels = (0..q).map(|i| format!("q{i}")).collect();
        LeftModule::new(a, labels, actions)
    }

    pub fn direct_sum(&self, copies: usize) -> LeftModule {
        let n = self.dim();
        let actions = self
            .actions
            .iter()
            .map(|m| {
                let mut big = Mat::zeros(self.field, n * copies, n * copies);
                for c in 0..copies {
                    for i in 0..n {
                        for j in 0..n {
                            big.set(c * n + i, c * n + j, m.get(i, j).clone());
                        }
                    }
                }
                big
            })
            .collect();
        let labels = (0..copies).flat_map(|c| self.labels.iter().map(move |l| format!("{l}#{c}"))).collect();
        LeftModule { labels, actions, ..self.clone() }
    }
}

/// The indecomposable projective `A e_i`, spanned by the normal words ending at `i`.
pub fn projective(a: &FdAlgebra, i: usize) -> LeftModule {
    let idx: Vec<usize> = (0..a.dim()).filter(|&k| a.basis[k].target == i).collect();
    let mut pos = vec![usize::MAX; a.dim()];
    for (r, &k) in idx.iter().enumerate() {
        pos[k] = r;
    }
    let n = idx.len();
    let actions = (0..a.dim())
        .map(|b| {
            let mut m = Mat::zeros(a.field, n, n);
            for (col, &k) in idx.iter().enumerate() {
                for (t, c) in a.product_of_basis(b, k) {
                    m.set(pos[*t], col, c.clone());
                }
            }
            m
        })
        .collect();
    LeftModule {
        field: a.field,
        labels: idx.iter().map(|&k| a.basis[k].label.clone()).collect(),
        actions,
        num_vertices: a.num_vertices(),
        idempotents: a.idempotents.clone(),
    }
}

/// The simple module at vertex `i`.
pub fn simple(a: &FdAlgebra, i: usize) -> LeftModule {
    let actions = (0..a.dim())
        .map(|b| {
            let mut m = Mat::zeros(a.field, 1, 1);
            if b == a.idempotents[i] {
                m.set(0, 0, a.field.one());
            }
            m
        })
        .collect();
    LeftModule {
        field: a.field,
        labels: vec![format!("L[{}]", a.vertices[i])],
        actions,
        num_vertices: a.num_vertices(),
        idempotents: a.idempotents.clone(),
    }
}

/// `c[i][j] = [P_i : L_j] = dim e_j A e_i`.
pub fn cartan(a: &FdAlgebra) -> Vec<Vec<usize>> {
    let d = a.pair_dims();
    let n = a.num_vertices();
    (0..n).map(|i| (0..n).map(|j| d[j][i]).collect()).collect()
}

/// `g[i][j]` = number of arrows from `i` to `j` in the Gabriel quiver, i.e. `dim e_i (J/J²) e_j`.
pub fn gabriel_quiver(a: &FdAlgebra) -> Vec<Vec<usize>> {
    let n = a.num_vertices();
    let rad: Vec<Vector> = a.radical_basis().into_iter().map(|i| a.unit(i)).collect();
    let j2 = a.product_span(&rad, &rad);
    let mut g = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            let block: Vec<usize> = a
                .radical_basis()
                .into_iter()
                .filter(|&k| a.basis[k].source == i && a.basis[k].target == j)
                .collect();
            let proj: Vec<Vector> = j2.basis().iter().map(|v| block.iter().map(|&k| v[k].clone()).collect()).collect();
            let r = if proj.is_empty() { 0 } else { Mat::from_rows(a.field, block.len(), &proj).rank() };
            g[i][j] = block.len() - r;
        }
    }
    g
}

/// Symmetry of the Gabriel quiver; the witness is an arrow pair `(i, j)` with unequal counts.
pub fn ext1_symmetric(a: &FdAlgebra) -> (bool, Option<(usize, usize)>) {
    let g = gabriel_quiver(a);
    let n = g.len();
    for i in 0..n {
        for j in i + 1..n {
            if g[i][j] != g[j][i] {
                return (false, Some(if g[i][j] > g[j][i] { (i, j) } else { (j, i) }));
            }
        }
    }
    (true, None)
}

fn unit_vector(n: usize, i: usize) -> DimensionVector {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Every projective has simple socle isomorphic to its top. Returns the first failing vertex.
pub fn weakly_symmetric(a: &FdAlgebra) -> (bool, Option<usize>) {
    let n = a.num_vertices();
    for i in 0..n {
        let p = projective(a, i);
        if p.socle_dims(a) != unit_vector(n, i) || p.top_dims(a) != unit_vector(n, i) {
            return (false, Some(i));
        }
    }
    (true, None)
}

/// Basis of `Hom_A(M, N)` as `dim N × dim M` matrices.
pub fn hom_basis(a: &FdAlgebra, m: &LeftModule, n: &LeftModule) -> Vec<Mat> {
    let (dm, dn) = (m.dim(), n.dim());
    let unknowns = dm * dn;
    if unknowns == 0 {
        return Vec::new();
    }
    let mut gens: Vec<Vector> = a.idempotents.iter().map(|&e| a.unit(e)).collect();
    gens.extend(a.generators.iter().map(|(_, v)| v.clone()));
    let mut rows: Vec<Vector> = Vec::new();
    for g in &gens {
        let rm = m.act(g);
        let rn = n.act(g);
        // (X rm - rn X)[i][j] = Σ_k X[i][k] rm[k][j] - Σ_k rn[i][k] X[k][j]
        for i in 0..dn {
            for j in 0..dm {
                let mut row = zero_vec(a.field, unknowns);
                for k in 0..dm {
                    let c = rm.get(k, j);
                    if !c.is_zero() {
                        row[i * dm + k] = row[i * dm + k].add(c);
                    }
                }
                for k in 0..dn {
                    let c = rn.get(i, k);
                    if !c.is_zero() {
                        row[k * dm + j] = row[k * dm + j].sub(c);
                    }
                }
                rows.push(row);
            }
        }
    }
    let sys = Mat::from_rows(a.field, unknowns, &rows);
    sys.kernel()
        .into_iter()
        .map(|v| {
            let mut x = Mat::zeros(a.field, dn, dm);
            for i in 0..dn {
                for j in 0..dm {
                    x.set(i, j, v[i * dm + j].clone());
                }
            }
            x
        })
        .collect()
}

fn seed() -> u64 {
    std::env::var("CELLAR_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_SEED)
}

const GRID_LIMIT: u64 = 2_000_000;

/// True iff some element of `Hom_A(M, N)` is invertible.
pub fn module_isomorphic(a: &FdAlgebra, m: &LeftModule, n: &LeftModule) -> Result<bool> {
    if m.dim() != n.dim() || m.dimension_vector() != n.dimension_vector() {
        return Ok(false);
    }
    if m.dim() == 0 {
        return Ok(true);
    }
    let hom = hom_basis(a, m, n);
    if hom.is_empty() {
        return Ok(false);
    }
    let field = a.field;
    let combine = |coeffs: &[Scalar]| -> Mat {
        let mut x = Mat::zeros(field, n.dim(), m.dim());
        for (c, h) in coeffs.iter().zip(&hom) {
            if !c.is_zero() {
                x = x.add(&h.scaled(c));
            }
        }
        x
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed());
    for _ in 0..4 {
        let coeffs: Vec<Scalar> = (0..hom.len())
            .map(|_| match field.size() {
                Some(p) => field.from_i64(rng.gen_range(0..p as i64)),
                None => field.from_i64(rng.gen_range(-97..=97)),
            })
            .collect();
        if !combine(&coeffs).det().is_zero() {
            return Ok(true);
        }
    }
    // Exhaustive grid: either the whole prime field or a set larger than the degree.
    let side = match field.size() {
        Some(p) if p <= m.dim() as u64 => p,
        _ => m.dim() as u64 + 1,
    };
    let k = hom.len() as u32;
    let total = side.checked_pow(k).filter(|&t| t <= GRID_LIMIT).ok_or_else(|| {
        Error::Cap(format!("isomorphism grid of {side}^{k} points exceeds the limit"))
    })?;
    for idx in 0..total {
        let mut r = idx;
        let coeffs: Vec<Scalar> = (0..k)
            .map(|_| {
                let d = r % side;
                r /= side;
                field.from_i64(d as i64)
            })
            .collect();
        if !combine(&coeffs).det().is_zero() {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::DEFAULT_CAP;
    use crate::presentation::Builder;

    fn alg(b: &Builder) -> FdAlgebra {
        FdAlgebra::from_presentation(&b.build().unwrap(), DEFAULT_CAP).unwrap()
    }

    fn db2() -> FdAlgebra {
        let mut b = Builder::new(Field::Rational);
        b.vertices([1, 2]).arrow("gamma", 1, 1).arrow("alpha1", 1, 2).arrow("beta1", 2, 1);
        b.rel("beta1 alpha1").rel("gamma^2 - alpha1 beta1");
        alg(&b)
    }

    #[test]
    fn db2_projectives() {
        let a = db2();
        let p1 = projective(&a, 0);
        let p2 = projective(&a, 1);
        assert_eq!((p1.dim(), p2.dim()), (6, 4));
        p1.validate(&a).unwrap();
        assert_eq!(cartan(&a), vec![vec![4, 2], vec![2, 2]]);
        let soc = p1.socle(&a);
        assert_eq!(soc.dim(), 1);
        let g3 = a.parse_element("gamma^3").unwrap();
        let idx: Vec<usize> = (0..a.dim()).filter(|&k| a.basis[k].target == 0).collect();
        let local: Vec<Scalar> = idx.iter().map(|&k| g3[k].clone()).collect();
        assert!(soc.contains(&local));
        assert_eq!(p1.top_dims(&a), vec![1, 0]);
        assert!(weakly_symmetric(&a).0);
    }

    #[test]
    fn semisimple_and_path_algebra() {
        let mut b = Builder::new(Field::Rational);
        b.vertices([1, 2]);
        let ss = alg(&b);
        assert_eq!(cartan(&ss), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(projective(&ss, 0).dim(), 1);
        assert!(!module_isomorphic(&ss, &simple(&ss, 0), &simple(&ss, 1)).unwrap());
        let mut b = Builder::new(Field::Rational);
        b.vertices([1, 2]).arrow("a", 1, 2);
        let pa = alg(&b);
        let (ok, bad) = weakly_symmetric(&pa);
        assert!(!ok);
        assert_eq!(bad, Some(1));
        assert_eq!(projective(&pa, 0).socle_dims(&pa), vec![1, 0]);
        assert_eq!(projective(&pa, 1).socle_dims(&pa), vec![1, 0]);
        assert_eq!(ext1_symmetric(&pa), (false, Some((0, 1))));
    }

    #[test]
    fn gabriel_drops_redundant_arrows() {
        let mut b = Builder::new(Field::Rational);
        b.vertex("1").arrow("X", 1, 1).arrow("Y", 1, 1).arrow("Z", 1, 1);
        b.rel("X X").rel("Y Y").rel("X Y - Y X").rel("Z - X Y");
        let a = alg(&b);
        assert_eq!(a.dim(), 4);
        assert_eq!(gabriel_quiver(&a), vec![vec![2]]);
        assert_eq!(projective(&a, 0).radical_series(&a), vec![4, 3, 1, 0]);
    }

    #[test]
    fn isomorphism_is_reflexive() {
        let a = db2();
        let p = projective(&a, 0);
        assert!(module_isomorphic(&a, &p, &p).unwrap());
        assert!(!module_isomorphic(&a, &p, &projective(&a, 1)).unwrap());
        let soc = p.socle(&a);
        let zero = Span::new(a.field, p.dim());
        let s = p.subquotient(&a, &soc, &zero).unwrap();
        assert!(module_isomorphic(&a, &s, &simple(&a, 0)).unwrap());
        let d = simple(&a, 1).direct_sum(2);
        d.validate(&a).unwrap();
        assert_eq!(d.dimension_vector(), vec![0, 2]);
    }
}
