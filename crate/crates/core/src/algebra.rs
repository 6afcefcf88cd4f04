//! Finite-dimensional algebras given by a basis of normal paths and structure constants.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::Rewriter;
use crate::linalg::{axpy, is_zero_vec, zero_vec, Mat, Span, Vector};
use crate::presentation::Presentation;
use crate::quiver::{Element, Path};
use crate::scalar::{Field, Scalar};

pub const DEFAULT_CAP: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElem {
    /// Normal path in the ambient presentation.
    pub path: Path,
    pub label: String,
    /// Local vertex indices.
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug)]
pub struct FdAlgebra {
    pub field: Field,
    pub vertices: Vec<String>,
    pub basis: Vec<BasisElem>,
    /// Basis index of each vertex idempotent.
    pub idempotents: Vec<usize>,
    /// Generators of the radical modulo its square: arrow images for presented
    /// algebras, a complement of J^2 in J for truncations.
    pub generators: Vec<(String, Vector)>,
    table: Vec<Vec<Vec<(usize, Scalar)>>>,
    index: HashMap<Path, usize>,
    /// Ambient vertex of each local vertex.
    ambient_vertex: Vec<usize>,
    rewriter: Arc<Rewriter>,
    presentation: Arc<Presentation>,
    truncated: bool,
}

/// Outcome of an anti-automorphism check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiCheck {
    pub ok: bool,
    pub failure: Option<String>,
}

impl FdAlgebra {
    /// Normalizes a presentation into a finite-dimensional algebra.
    pub fn from_presentation(p: &Presentation, cap: usize) -> Result<FdAlgebra> {
        let rels = p.relation_elements()?;
        let rw = Rewriter::new(p.field, &p.quiver, &rels, cap)?;
        let words = rw.normal_words(cap)?;
        let q = &p.quiver;
        let basis: Vec<BasisElem> = words
            .iter()
            .map(|w| BasisElem { path: w.clone(), label: q.path_label(w), source: q.source(w), target: q.target(w) })
            .collect();
        let index: HashMap<Path, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let n = basis.len();
        let mut table = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                if basis[i].target != basis[j].source {
                    continue;
                }
                let prod = q.concat(&basis[i].path, &basis[j].path).unwrap();
                let red = rw.reduce(&Element::monomial(prod, p.field.one()));
                table[i][j] = red.terms.iter().map(|(w, c)| (index[w], c.clone())).collect();
            }
        }
        let nv = q.num_vertices();
        let mut alg = FdAlgebra {
            field: p.field,
            vertices: q.vertices.clone(),
            idempotents: (0..nv).collect(),
            basis,
            generators: Vec::new(),
            table,
            index,
            ambient_vertex: (0..nv).collect(),
            rewriter: Arc::new(rw),
            presentation: Arc::new(p.clone()),
            truncated: false,
        };
        alg.generators = q
            .arrows
            .iter()
            .enumerate()
            .map(|(a, arr)| {
                let v = alg.path_vector(&Path::Word(vec![a])).expect("arrow reduces inside the algebra");
                (arr.name.clone(), v)
            })
            .collect();
        alg.check_radical()?;
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::Invalid(format!("unknown vertex {name:?}")))
    }

    pub fn unit(&self, i: usize) -> Vector {
        let mut v = zero_vec(self.field, self.dim());
        v[i] = self.field.one();
        v
    }

    pub fn one(&self) -> Vector {
        let mut v = zero_vec(self.field, self.dim());
        for &e in &self.idempotents {
            v[e] = self.field.one();
        }
        v
    }

    /// Structure constants of `b_i * b_j`.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i][j]
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.field, self.dim());
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul(b);
                for (k, c) in &self.table[i][j] {
                    out[*k] = out[*k].add(&ab.mul(c));
                }
            }
        }
        out
    }

    /// Matrix of `y -> x y`.
    pub fn left_matrix(&self, x: &[Scalar]) -> Mat {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(x, &self.unit(j))).collect();
        Mat::from_cols(self.field, n, &cols)
    }

    /// Matrix of `y -> y x`.
    pub fn right_matrix(&self, x: &[Scalar]) -> Mat {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(&self.unit(j), x)).collect();
        Mat::from_cols(self.field, n, &cols)
    }

    /// Coordinates of an ambient path after reduction.
    pub fn path_vector(&self, p: &Path) -> Result<Vector> {
        self.element_vector(&Element::monomial(p.clone(), self.field.one()))
    }

    /// Coordinates of an ambient path-algebra element after reduction.
    pub fn element_vector(&self, e: &Element) -> Result<Vector> {
        let red = self.rewriter.reduce(e);
        let mut v = zero_vec(self.field, self.dim());
        for (w, c) in &red.terms {
            let i = self.index.get(w).ok_or_else(|| {
                Error::Invalid(format!(
                    "{} does not lie in the algebra",
                    self.presentation.quiver.path_label(w)
                ))
            })?;
            v[*i] = v[*i].add(c);
        }
        Ok(v)
    }

    /// Parses and reduces a compact expression such as `"a b - 2*c"`.
    pub fn parse_element(&self, expr: &str) -> Result<Vector> {
        self.element_vector(&self.presentation.element(expr)?)
    }

    pub fn display(&self, v: &[Scalar]) -> String {
        let mut e = Element::zero();
        for (i, c) in v.iter().enumerate() {
            e.add_term(self.basis[i].path.clone(), c.clone());
        }
        e.display(&self.presentation.quiver)
    }

    /// Basis indices of the radical (non-trivial normal words).
    pub fn radical_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.basis[i].path.is_trivial()).collect()
    }

    /// Span of all products of one element of `a` and one element of `b`.
    pub fn product_span(&self, a: &[Vector], b: &[Vector]) -> Span {
        let mut s = Span::new(self.field, self.dim());
        for x in a {
            for y in b {
                let p = self.mul(x, y);
                if !is_zero_vec(&p) {
                    s.insert(&p);
                }
            }
        }
        s
    }

    /// Dimensions of J, J^2, ... down to zero.
    pub fn radical_powers(&self) -> Result<Vec<usize>> {
        let j: Vec<Vector> = self.radical_basis().into_iter().map(|i| self.unit(i)).collect();
        let mut dims = vec![j.len()];
        let mut cur = j.clone();
        while !cur.is_empty() {
            let next = self.product_span(&j, &cur);
            if next.dim() >= cur.len() {
                return Err(Error::Invalid("the arrow ideal is not nilpotent".into()));
            }
            cur = next.basis().to_vec();
            dims.push(cur.len());
        }
        Ok(dims)
    }

    fn check_radical(&self) -> Result<()> {
        self.radical_powers()?;
        Ok(())
    }

    /// First basis triple violating associativity, if any.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                if self.table[i][j].is_empty() && self.basis[i].target != self.basis[j].source {
                    continue;
                }
                let ij = self.mul(&self.unit(i), &self.unit(j));
                for k in 0..n {
                    if self.basis[j].target != self.basis[k].source {
                        continue;
                    }
                    let left = self.mul(&ij, &self.unit(k));
                    let jk = self.mul(&self.unit(j), &self.unit(k));
                    let right = self.mul(&self.unit(i), &jk);
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// `dims[i][j] = dim e_i A e_j`, the number of basis words from `i` to `j`.
    pub fn pair_dims(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut d = vec![vec![0; n]; n];
        for b in &self.basis {
            d[b.source][b.target] += 1;
        }
        d
    }

    /// The idempotent truncation `eAe` for `e` the sum of the listed vertices, in the given order.
    pub fn truncate(&self, vertices: &[usize]) -> Result<FdAlgebra> {
        if vertices.is_empty() {
            return Err(Error::Invalid("empty vertex selection".into()));
        }
        let mut local = vec![None; self.num_vertices()];
        for (k, &v) in vertices.iter().enumerate() {
            if v >= self.num_vertices() || local[v].is_some() {
                return Err(Error::Invalid("bad vertex selection".into()));
            }
            local[v] = Some(k);
        }
        let keep: Vec<usize> = (0..self.dim())
            .filter(|&i| local[self.basis[i].source].is_some() && local[self.basis[i].target].is_some())
            .collect();
        // Idempotents first, in the order of the selection, then the remaining words.
        let mut order: Vec<usize> = vertices.iter().map(|&v| self.idempotents[v]).collect();
        order.extend(keep.iter().copied().filter(|i| !self.basis[*i].path.is_trivial()));
        let mut pos = vec![usize::MAX; self.dim()];
        for (k, &i) in order.iter().enumerate() {
            pos[i] = k;
        }
        let basis: Vec<BasisElem> = order
            .iter()
            .map(|&i| {
                let b = &self.basis[i];
                BasisElem {
                    path: b.path.clone(),
                    label: b.label.clone(),
                    source: local[b.source].unwrap(),
                    target: local[b.target].unwrap(),
                }
            })
            .collect();
        let table: Vec<Vec<Vec<(usize, Scalar)>>> = order
            .iter()
            .map(|&i| {
                order
                    .iter()
                    .map(|&j| self.table[i][j].iter().map(|(k, c)| (pos[*k], c.clone())).collect())
                    .collect()
            })
            .collect();
        let index = basis.iter().enumerate().map(|(k, b)| (b.path.clone(), k)).collect();
        let mut alg = FdAlgebra {
            field: self.field,
            vertices: vertices.iter().map(|&v| self.vertices[v].clone()).collect(),
            idempotents: (0..vertices.len()).collect(),
            basis,
            generators: Vec::new(),
            table,
            index,
            ambient_vertex: vertices.iter().map(|&v| self.ambient_vertex[v]).collect(),
            rewriter: self.rewriter.clone(),
            presentation: self.presentation.clone(),
            truncated: true,
        };
        alg.generators = alg.radical_complement();
        Ok(alg)
    }

    pub fn truncate_by_names(&self, names: &[&str]) -> Result<FdAlgebra> {
        let ids = names.iter().map(|n| self.vertex(n)).collect::<Result<Vec<_>>>()?;
        self.truncate(&ids)
    }

    /// Basis elements of J completing a basis of J^2 to one of J.
    fn radical_complement(&self) -> Vec<(String, Vector)> {
        let j: Vec<Vector> = self.radical_basis().into_iter().map(|i| self.unit(i)).collect();
        let mut span = self.product_span(&j, &j);
        let mut out = Vec::new();
        for i in self.radical_basis() {
            let v = self.unit(i);
            if span.insert(&v) {
                out.push((self.basis[i].label.clone(), v));
            }
        }
        out
    }

    /// Reverses a basis path and applies `vmap`/`amap`.
    fn reversal_image(&self, p: &Path, vmap: &[usize], amap: &[Vector]) -> Vector {
        match p {
            Path::Trivial(v) => self.unit(self.idempotents[vmap[*v]]),
            Path::Word(w) => {
                let mut acc = amap[*w.last().unwrap()].clone();
                for &a in w.iter().rev().skip(1) {
                    acc = self.mul(&acc, &amap[a]);
                }
                acc
            }
        }
    }

    /// Matrix of the linear extension of the reversal map, on this algebra's basis.
    pub fn reversal_matrix(&self, vmap: &[usize], amap: &[Vector]) -> Mat {
        let cols: Vec<Vector> = self.basis.iter().map(|b| self.reversal_image(&b.path, vmap, amap)).collect();
        Mat::from_cols(self.field, self.dim(), &cols)
    }

    /// Checks that the arrow map extends to an anti-automorphism of order two.
    /// Only available on algebras built directly from a presentation.
    pub fn check_anti_automorphism(&self, vmap: &[usize], amap: &[Vector]) -> Result<AntiCheck> {
        if self.truncated {
            return Err(Error::Invalid("anti-automorphisms are checked on presented algebras only".into()));
        }
        let q = &self.presentation.quiver;
        if vmap.len() != q.num_vertices() || amap.len() != q.arrows.len() {
            return Err(Error::Invalid("involution must map every vertex and arrow".into()));
        }
        for (v, &w) in vmap.iter().enumerate() {
            if w >= vmap.len() {
                return Err(Error::Invalid("vertex image out of range".into()));
            }
            if vmap[w] != v {
                return Ok(AntiCheck { ok: false, failure: Some(format!("vertex map is not an involution at {}", q.vertices[v])) });
            }
        }
        for (a, arr) in q.arrows.iter().enumerate() {
            let (s, t) = (vmap[arr.target], vmap[arr.source]);
            for (i, c) in amap[a].iter().enumerate() {
                if !c.is_zero() && (self.basis[i].source != s || self.basis[i].target != t) {
                    return Err(Error::Invalid(format!(
                        "image of {} must run from {} to {}",
                        arr.name, q.vertices[s], q.vertices[t]
                    )));
                }
            }
        }
        let rels = self.presentation.relation_elements()?;
        for (k, r) in rels.iter().enumerate() {
            let mut img = zero_vec(self.field, self.dim());
            for (p, c) in &r.terms {
                axpy(&mut img, c, &self.reversal_image(p, vmap, amap));
            }
            if !is_zero_vec(&img) {
                let text = r.display(q);
                return Ok(AntiCheck { ok: false, failure: Some(format!("relation {k} ({text}) is not preserved")) });
            }
        }
        let m = self.reversal_matrix(vmap, amap);
        for (a, arr) in q.arrows.iter().enumerate() {
            let img = self.path_vector(&Path::Word(vec![a]))?;
            if m.apply(&m.apply(&img)) != img {
                return Ok(AntiCheck { ok: false, failure: Some(format!("map does not square to the identity on {}", arr.name)) });
            }
        }
        Ok(AntiCheck { ok: true, failure: None })
    }

    /// Vertex map, arrow map parsed from names and compact expressions; arrows not listed are fixed.
    pub fn involution_from_names(
        &self,
        vertex_map: &[(String, String)],
        arrow_map: &[(String, String)],
    ) -> Result<(Vec<usize>, Vec<Vector>)> {
        let q = &self.presentation.quiver;
        let mut vmap: Vec<usize> = (0..q.num_vertices()).collect();
        for (a, b) in vertex_map {
            vmap[q.vertex(a)?] = q.vertex(b)?;
        }
        let mut amap = Vec::with_capacity(q.arrows.len());
        for a in 0..q.arrows.len() {
            amap.push(self.path_vector(&Path::Word(vec![a]))?);
        }
        for (a, expr) in arrow_map {
            amap[q.arrow(a)?] = self.parse_element(expr)?;
        }
        Ok((vmap, amap))
    }

    /// Local vertex of an ambient vertex, if kept.
    pub fn local_vertex(&self, ambient: usize) -> Option<usize> {
        self.ambient_vertex.iter().position(|&v| v == ambient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Builder;

    fn db2() -> FdAlgebra {
        let mut b = Builder::new(Field::Rational);
        b.vertices([1, 2]).arrow("gamma", 1, 1).arrow("alpha1", 1, 2).arrow("beta1", 2, 1);
        b.rel("beta1 alpha1").rel("gamma^2 - alpha1 beta1");
        FdAlgebra::from_presentation(&b.build().unwrap(), DEFAULT_CAP).unwrap()
    }

    #[test]
    fn db2_dimension_and_products() {
        let a = db2();
        assert_eq!(a.dim(), 10);
        assert!(a.associativity_failure().is_none());
        let g = a.parse_element("gamma").unwrap();
        assert_eq!(a.mul(&g, &g), a.parse_element("alpha1 beta1").unwrap());
        assert_eq!(a.pair_dims(), vec![vec![4, 2], vec![2, 2]]);
        let e1 = a.unit(a.idempotents[0]);
        assert_eq!(a.mul(&e1, &e1), e1);
    }

    #[test]
    fn truncation_keeps_words() {
        let a = db2();
        let t = a.truncate(&[0]).unwrap();
        assert_eq!(t.dim(), 4);
        assert!(t.associativity_failure().is_none());
        assert_eq!(t.generators.len(), 1);
        let all = a.truncate(&[0, 1]).unwrap();
        assert_eq!(all.dim(), 10);
    }

    #[test]
    fn non_nilpotent_radical_is_rejected() {
        let mut b = Builder::new(Field::Rational);
        b.vertex("1").arrow("x", 1, 1).rel("x - x^2");
        let p = b.build().unwrap();
        assert!(FdAlgebra::from_presentation(&p, DEFAULT_CAP).is_err());
    }

    #[test]
    fn local_anti_automorphism_depends_on_parameter() {
        for (lambda, ok) in [("1", true), ("2", false)] {
            let mut b = Builder::new(Field::Rational);
            b.param("lambda", &crate::presentation::rational(lambda).unwrap(), &["0"]);
            b.vertex("1").arrow("a", 1, 1).arrow("b", 1, 1).rel("a^2").rel("b^2").rel("a b - lambda*b a");
            let alg = FdAlgebra::from_presentation(&b.build().unwrap(), DEFAULT_CAP).unwrap();
            let (v, m) = alg.involution_from_names(&[], &[]).unwrap();
            let r = alg.check_anti_automorphism(&v, &m).unwrap();
            assert_eq!(r.ok, ok, "{r:?}");
            if !ok {
                assert!(r.failure.unwrap().contains("relation 2"));
            }
        }
    }
}
