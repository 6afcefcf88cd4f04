//! Cell data and their verification: axioms (C1)–(C3), cell modules, Gram forms,
//! decomposition matrices and the chain of cell ideals.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::FdAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{zero_vec, Mat, Span, Vector};
use crate::module::{cartan, module_isomorphic, projective, LeftModule};
use crate::presentation::parse_terms;
use crate::quiver::{Element, Path, Quiver};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermSpec {
    pub coeff: String,
    pub path: PathSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PathSpec {
    Arrows(Vec<String>),
    Vertex { vertex: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetSpec {
    pub elements: Vec<String>,
    pub strict_pairs: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvolutionSpec {
    pub vertex_map: BTreeMap<String, String>,
    pub arrow_map: BTreeMap<String, Vec<TermSpec>>,
}

/// The cell datum file format. A strict pair `(a, b)` means `a < b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellDatumFile {
    pub poset: PosetSpec,
    pub tableaux: BTreeMap<String, usize>,
    pub basis: BTreeMap<String, Vec<Vec<Vec<TermSpec>>>>,
    pub involution: InvolutionSpec,
}

impl CellDatumFile {
    pub fn from_json(text: &str) -> Result<CellDatumFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    /// Builds a file from compact expressions. `chain` lists the elements from bottom to top.
    pub fn from_compact(
        q: &Quiver,
        chain: &[&str],
        cells: &[Vec<Vec<&str>>],
        vertex_map: &[(&str, &str)],
        arrow_map: &[(&str, &str)],
    ) -> Result<CellDatumFile> {
        let terms = |expr: &str| -> Result<Vec<TermSpec>> {
            Ok(parse_terms(q, expr)?
                .into_iter()
                .map(|t| TermSpec {
                    coeff: t.coeff,
                    path: match t.path {
                        Path::Trivial(v) => PathSpec::Vertex { vertex: q.vertices[v].clone() },
                        Path::Word(w) => PathSpec::Arrows(w.iter().map(|&x| q.arrows[x].name.clone()).collect()),
                    },
                })
                .collect())
        };
        let mut basis = BTreeMap::new();
        let mut tableaux = BTreeMap::new();
        for (name, cell) in chain.iter().zip(cells) {
            tableaux.insert(name.to_string(), cell.len());
            let m = cell
                .iter()
                .map(|row| row.iter().map(|e| terms(e)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            basis.insert(name.to_string(), m);
        }
        Ok(CellDatumFile {
            poset: PosetSpec {
                elements: chain.iter().map(|s| s.to_string()).collect(),
                strict_pairs: chain.windows(2).map(|w| (w[0].to_string(), w[1].to_string())).collect(),
            },
            tableaux,
            basis,
            involution: InvolutionSpec {
                vertex_map: vertex_map.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
                arrow_map: arrow_map
                    .iter()
                    .map(|(k, e)| Ok((k.to_string(), terms(e)?)))
                    .collect::<Result<BTreeMap<_, _>>>()?,
            },
        })
    }
}

/// A validated cell datum over a presented algebra.
#[derive(Clone, Debug)]
pub struct CellDatum {
    pub elements: Vec<String>,
    /// `less[a][b]` iff `a < b`, transitively closed.
    pub less: Vec<Vec<bool>>,
    pub sizes: Vec<usize>,
    /// `entries[λ][s][t]`.
    pub entries: Vec<Vec<Vec<Vector>>>,
    pub vertex_map: Vec<usize>,
    pub arrow_map: Vec<Vector>,
    /// `(λ, s, t)` of each flat index.
    pub flat: Vec<(usize, usize, usize)>,
}

fn terms_to_element(a: &FdAlgebra, terms: &[TermSpec]) -> Result<Vector> {
    let p = a.presentation();
    let q = &p.quiver;
    let values = p.param_values()?;
    let mut e = Element::zero();
    for t in terms {
        let path = match &t.path {
            PathSpec::Vertex { vertex } => Path::Trivial(q.vertex(vertex)?),
            PathSpec::Arrows(names) => {
                let ids = names.iter().map(|n| q.arrow(n)).collect::<Result<Vec<_>>>()?;
                q.word(ids)?
            }
        };
        e.add_term(path, crate::presentation::eval_coeff(&t.coeff, a.field, &values)?);
    }
    a.element_vector(&e)
}

impl CellDatum {
    pub fn load(text: &str, a: &FdAlgebra) -> Result<CellDatum> {
        CellDatum::from_file(&CellDatumFile::from_json(text)?, a)
    }

    pub fn from_file(f: &CellDatumFile, a: &FdAlgebra) -> Result<CellDatum> {
        if a.is_truncated() {
            return Err(Error::Invalid("cell data are supported on presented algebras only".into()));
        }
        let elements = f.poset.elements.clone();
        let n = elements.len();
        let ix = |name: &str| -> Result<usize> {
            elements
                .iter()
                .position(|e| e == name)
                .ok_or_else(|| Error::Invalid(format!("unknown poset element {name:?}")))
        };
        for (i, e) in elements.iter().enumerate() {
            if elements[..i].contains(e) {
                return Err(Error::Invalid(format!("duplicate poset element {e:?}")));
            }
        }
        let mut less = vec![vec![false; n]; n];
        for (x, y) in &f.poset.strict_pairs {
            less[ix(x)?][ix(y)?] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if less[i][k] {
                    for j in 0..n {
                        if less[k][j] {
                            less[i][j] = true;
                        }
                    }
                }
            }
        }
        if (0..n).any(|i| less[i][i]) {
            return Err(Error::Invalid("order relation is cyclic".into()));
        }
        let mut sizes = Vec::with_capacity(n);
        let mut entries = Vec::with_capacity(n);
        for e in &elements {
            let size = *f.tableaux.get(e).ok_or_else(|| Error::Invalid(format!("no tableau size for {e:?}")))?;
            let m = f.basis.get(e).ok_or_else(|| Error::Invalid(format!("no basis matrix for {e:?}")))?;
            if size == 0 || m.len() != size || m.iter().any(|r| r.len() != size) {
                return Err(Error::Invalid(format!("basis matrix of {e:?} is not {size}x{size}")));
            }
            let cell = m
                .iter()
                .map(|row| row.iter().map(|t| terms_to_element(a, t)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            sizes.push(size);
            entries.push(cell);
        }
        let total: usize = sizes.iter().map(|s| s * s).sum();
        if total != a.dim() {
            return Err(Error::Invalid(format!("tableau sizes give {total} basis elements but the algebra has dimension {}", a.dim())));
        }
        let vmap: Vec<(String, String)> = f.involution.vertex_map.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        let (vertex_map, mut arrow_map) = a.involution_from_names(&vmap, &[])?;
        let q = &a.presentation().quiver;
        for (name, terms) in &f.involution.arrow_map {
            arrow_map[q.arrow(name)?] = terms_to_element(a, terms)?;
        }
        let mut flat = Vec::new();
        for (l, &s) in sizes.iter().enumerate() {
            for i in 0..s {
                for j in 0..s {
                    flat.push((l, i, j));
                }
            }
        }
        Ok(CellDatum { elements, less, sizes, entries, vertex_map, arrow_map, flat })
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    fn flat_vectors(&self) -> Vec<Vector> {
        self.flat.iter().map(|&(l, s, t)| self.entries[l][s][t].clone()).collect()
    }

    /// Coordinates in the cellular basis; requires (C1).
    fn coordinates(&self, a: &FdAlgebra) -> Option<Mat> {
        let b = Mat::from_cols(a.field, a.dim(), &self.flat_vectors());
        b.inverse()
    }
}

/// A failure of (C3): expanding `generator · c^λ_{s,t}` either leaves the allowed span
/// (`t_prime == None`) or gives coefficients that depend on `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct C3Witness {
    pub generator: String,
    pub lambda: String,
    pub s: usize,
    pub t: usize,
    pub t_prime: Option<usize>,
}

pub fn verify_c1(d: &CellDatum, a: &FdAlgebra) -> bool {
    d.flat.len() == a.dim() && Mat::from_cols(a.field, a.dim(), &d.flat_vectors()).rank() == a.dim()
}

/// (C2): the involution is an anti-automorphism and swaps `c_{s,t}` with `c_{t,s}`.
pub fn verify_c2(d: &CellDatum, a: &FdAlgebra) -> Result<(bool, Option<String>)> {
    let anti = a.check_anti_automorphism(&d.vertex_map, &d.arrow_map)?;
    if !anti.ok {
        return Ok((false, anti.failure));
    }
    let m = a.reversal_matrix(&d.vertex_map, &d.arrow_map);
    for (l, cell) in d.entries.iter().enumerate() {
        for s in 0..d.sizes[l] {
            for t in 0..d.sizes[l] {
                if m.apply(&cell[s][t]) != cell[t][s] {
                    return Ok((false, Some(format!("involution does not send c[{}]({s},{t}) to c({t},{s})", d.elements[l]))));
                }
            }
        }
    }
    Ok((true, None))
}

/// Left-action coefficients `r[b][λ][s]` = vector over `u`, for every basis element `b`.
type ActionTable = Vec<Vec<Vec<Vector>>>;

fn left_actions(d: &CellDatum, a: &FdAlgebra, coords: &Mat) -> std::result::Result<ActionTable, C3Witness> {
    let mut out = Vec::with_capacity(a.dim());
    for b in 0..a.dim() {
        let bv = a.unit(b);
        let mut per_cell = Vec::with_capacity(d.sizes.len());
        for (l, cell) in d.entries.iter().enumerate() {
            let size = d.sizes[l];
            let mut rows = Vec::with_capacity(size);
            for s in 0..size {
                let mut first: Option<Vector> = None;
                for t in 0..size {
                    let x = coords.apply(&a.mul(&bv, &cell[s][t]));
                    let mut r = zero_vec(a.field, size);
                    for (k, c) in x.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let (m, u, tt) = d.flat[k];
                        if m == l && tt == t {
                            r[u] = c.clone();
                        } else if !d.less[l][m] {
                            return Err(C3Witness {
                                generator: a.basis[b].label.clone(),
                                lambda: d.elements[l].clone(),
                                s,
                                t,
                                t_prime: None,
                            });
                        }
                    }
                    match &first {
                        None => first = Some(r),
                        Some(f) if *f != r => {
                            return Err(C3Witness {
                                generator: a.basis[b].label.clone(),
                                lambda: d.elements[l].clone(),
                                s,
                                t: 0,
                                t_prime: Some(t),
                            })
                        }
                        _ => {}
                    }
                }
                rows.push(first.unwrap());
            }
            per_cell.push(rows);
        }
        out.push(per_cell);
    }
    Ok(out)
}

/// (C3) for every basis element of the algebra (which contains the arrow generators).
pub fn verify_c3(d: &CellDatum, a: &FdAlgebra) -> (bool, Option<C3Witness>) {
    let Some(coords) = d.coordinates(a) else {
        return (false, None);
    };
    match left_actions(d, a, &coords) {
        Ok(_) => (true, None),
        Err(w) => (false, Some(w)),
    }
}

/// Everything derived from a datum that satisfies (C1) and (C3).
#[derive(Clone, Debug)]
pub struct CellStructure {
    pub cell_modules: Vec<LeftModule>,
    pub gram: Vec<Mat>,
    pub lambda_plus: Vec<usize>,
    /// Vertex of the simple head of each element of Λ⁺.
    pub head_vertex: BTreeMap<usize, usize>,
    /// Rows indexed by Λ, columns by Λ⁺ in the order of `lambda_plus`.
    pub decomposition: Vec<Vec<usize>>,
}

pub fn cell_structure(d: &CellDatum, a: &FdAlgebra) -> Result<CellStructure> {
    let coords = d.coordinates(a).ok_or_else(|| Error::Invalid("(C1) fails".into()))?;
    let acts = left_actions(d, a, &coords).map_err(|w| Error::Invalid(format!("(C3) fails: {w:?}")))?;
    let mut cell_modules = Vec::new();
    let mut gram = Vec::new();
    for (l, &size) in d.sizes.iter().enumerate() {
        let actions: Vec<Mat> = (0..a.dim())
            .map(|b| {
                let mut m = Mat::zeros(a.field, size, size);
                for s in 0..size {
                    for u in 0..size {
                        m.set(u, s, acts[b][l][s][u].clone());
                    }
                }
                m
            })
            .collect();
        let labels = (0..size).map(|s| format!("c[{}]_{s}", d.elements[l])).collect();
        cell_modules.push(LeftModule::new(a, labels, actions)?);
        gram.push(gram_form(d, a, &coords, l)?);
    }
    let lambda_plus: Vec<usize> = (0..d.sizes.len()).filter(|&l| !gram[l].is_zero()).collect();
    let mut head_vertex = BTreeMap::new();
    for &l in &lambda_plus {
        let m = &cell_modules[l];
        let rad = Span::from_vectors(a.field, m.dim(), &gram[l].transpose().kernel());
        let top = m.subquotient(a, &m.whole(), &rad)?;
        let dv = top.dimension_vector();
        let support: Vec<usize> = (0..dv.len()).filter(|&i| dv[i] > 0).collect();
        if support.len() != 1 || dv[support[0]] != 1 {
            return Err(Error::Invalid(format!("head of the cell module of {} is not a single simple module", d.elements[l])));
        }
        head_vertex.insert(l, support[0]);
    }
    let decomposition = cell_modules
        .iter()
        .map(|m| {
            let dv = m.dimension_vector();
            lambda_plus.iter().map(|l| dv[head_vertex[l]]).collect()
        })
        .collect();
    Ok(CellStructure { cell_modules, gram, lambda_plus, head_vertex, decomposition })
}

/// Gram matrix `r_{st}` from `c_{us} c_{tv} ≡ r_{st} c_{uv}` modulo higher cells,
/// checked for every choice of `u, v`.
fn gram_form(d: &CellDatum, a: &FdAlgebra, coords: &Mat, l: usize) -> Result<Mat> {
    let size = d.sizes[l];
    let cell = &d.entries[l];
    let mut g = Mat::zeros(a.field, size, size);
    for u in 0..size {
        for v in 0..size {
            for s in 0..size {
                for t in 0..size {
                    let x = coords.apply(&a.mul(&cell[u][s], &cell[t][v]));
                    let mut r = a.field.zero();
                    for (k, c) in x.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let (m, uu, vv) = d.flat[k];
                        if m == l && uu == u && vv == v {
                            r = c.clone();
                        } else if !d.less[l][m] {
                            return Err(Error::Invalid(format!(
                                "product of entries of {} leaves the expected span",
                                d.elements[l]
                            )));
                        }
                    }
                    if u == 0 && v == 0 {
                        g.set(s, t, r);
                    } else if *g.get(s, t) != r {
                        return Err(Error::Invalid(format!("bilinear form of {} depends on the outer indices", d.elements[l])));
                    }
                }
            }
        }
    }
    Ok(g)
}

/// Result of the full verification of a datum.
#[derive(Clone, Debug)]
pub struct Verification {
    pub c1: bool,
    pub c2: bool,
    pub c2_failure: Option<String>,
    pub c3: bool,
    pub c3_witness: Option<C3Witness>,
    pub structure: Option<CellStructure>,
    /// `DᵀD` equals the Cartan matrix under the head matching.
    pub cartan_identity: Option<bool>,
}

impl Verification {
    pub fn ok(&self) -> bool {
        self.c1 && self.c2 && self.c3 && self.cartan_identity == Some(true)
    }
}

pub fn verify(d: &CellDatum, a: &FdAlgebra) -> Result<Verification> {
    let c1 = verify_c1(d, a);
    let (c2, c2_failure) = verify_c2(d, a)?;
    let (c3, c3_witness) = if c1 { verify_c3(d, a) } else { (false, None) };
    let mut v = Verification { c1, c2, c2_failure, c3, c3_witness, structure: None, cartan_identity: None };
    if c1 && c3 {
        let s = cell_structure(d, a)?;
        v.cartan_identity = Some(cartan_identity(&s, a));
        v.structure = Some(s);
    }
    Ok(v)
}

/// `DᵀD = C`, with Λ⁺ matched to vertices through the heads of the cell modules.
pub fn cartan_identity(s: &CellStructure, a: &FdAlgebra) -> bool {
    let n = a.num_vertices();
    let mut verts: Vec<usize> = s.lambda_plus.iter().map(|l| s.head_vertex[l]).collect();
    verts.sort_unstable();
    verts.dedup();
    if verts.len() != n || s.lambda_plus.len() != n {
        return false;
    }
    let c = cartan(a);
    let k = s.lambda_plus.len();
    for i in 0..k {
        for j in 0..k {
            let dtd: usize = s.decomposition.iter().map(|row| row[i] * row[j]).sum();
            let (vi, vj) = (s.head_vertex[&s.lambda_plus[i]], s.head_vertex[&s.lambda_plus[j]]);
            if dtd != c[vi][vj] {
                return false;
            }
        }
    }
    true
}

/// One step of the cell chain.
#[derive(Clone, Debug, Serialize)]
pub struct ChainStep {
    pub lambda: String,
    pub ideal_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainReport {
    pub steps: Vec<ChainStep>,
    pub ok: bool,
    pub failures: Vec<String>,
}

/// Verifies the ideal chain `A(μ₁) ⊃ A(μ₂) ⊃ …` for a linear extension listed bottom to top,
/// and the filtration quotients of the projectives.
pub fn cell_chain(d: &CellDatum, a: &FdAlgebra, extension: &[usize]) -> Result<ChainReport> {
    let n = d.elements.len();
    let mut seen = vec![false; n];
    for &x in extension {
        if x >= n || seen[x] {
            return Err(Error::Invalid("linear extension must list every element once".into()));
        }
        seen[x] = true;
    }
    if extension.len() != n {
        return Err(Error::Invalid("linear extension must list every element once".into()));
    }
    for i in 0..n {
        for j in 0..i {
            if d.less[extension[i]][extension[j]] {
                return Err(Error::Invalid("sequence is not a linear extension of the order".into()));
            }
        }
    }
    let s = cell_structure(d, a)?;
    let mut failures = Vec::new();
    let mut ideals: Vec<Span> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut sp = Span::new(a.field, a.dim());
        for &l in &extension[i..] {
            for row in &d.entries[l] {
                for x in row {
                    sp.insert(x);
                }
            }
        }
        ideals.push(sp);
    }
    let mut steps = Vec::new();
    for i in 0..n {
        let sp = &ideals[i];
        for b in 0..a.dim() {
            let bv = a.unit(b);
            for x in sp.basis() {
                if !sp.contains(&a.mul(&bv, x)) || !sp.contains(&a.mul(x, &bv)) {
                    failures.push(format!("A({}) is not a two-sided ideal", d.elements[extension[i]]));
                    break;
                }
            }
        }
        steps.push(ChainStep { lambda: d.elements[extension[i]].clone(), ideal_dim: sp.dim() });
    }
    for (col, &lp) in s.lambda_plus.iter().enumerate() {
        let j = s.head_vertex[&lp];
        let p = projective(a, j);
        let idx: Vec<usize> = (0..a.dim()).filter(|&k| a.basis[k].target == j).collect();
        let ej = a.unit(a.idempotents[j]);
        let restrict = |sp: &Span| -> Span {
            let vs: Vec<Vector> = sp
                .basis()
                .iter()
                .map(|x| {
                    let y = a.mul(x, &ej);
                    idx.iter().map(|&k| y[k].clone()).collect()
                })
                .collect();
            Span::from_vectors(a.field, idx.len(), &vs)
        };
        for i in 0..n {
            let mu = extension[i];
            let upper = restrict(&ideals[i]);
            let lower = restrict(&ideals[i + 1]);
            let mult = s.decomposition[mu][col];
            let q = p.subquotient(a, &upper, &lower)?;
            if q.dim() != d.sizes[mu] * mult {
                failures.push(format!(
                    "P({})_{} quotient has dimension {} instead of {}",
                    d.elements[lp],
                    d.elements[mu],
                    q.dim(),
                    d.sizes[mu] * mult
                ));
                continue;
            }
            if mult > 0 && !module_isomorphic(a, &q, &s.cell_modules[mu].direct_sum(mult))? {
                failures.push(format!("P({})_{} quotient is not a sum of cell modules", d.elements[lp], d.elements[mu]));
            }
        }
    }
    Ok(ChainReport { ok: failures.is_empty(), steps, failures })
}

/// A linear extension of the datum's order, listing smaller elements first and
/// breaking ties by file order.
pub fn default_extension(d: &CellDatum) -> Vec<usize> {
    let n = d.elements.len();
    let mut done = vec![false; n];
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let next = (0..n).find(|&x| !done[x] && (0..n).all(|y| done[y] || !d.less[y][x])).expect("acyclic");
        done[next] = true;
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Builder;
    use crate::scalar::Field;

    fn kronecker() -> FdAlgebra {
        let mut b = Builder::new(Field::Rational);
        b.vertex("1").arrow("X", 1, 1).arrow("Y", 1, 1).rel("X X").rel("Y Y").rel("X Y - Y X");
        FdAlgebra::from_presentation(&b.build().unwrap(), 32).unwrap()
    }

    fn datum(a: &FdAlgebra, cells: [&str; 4]) -> CellDatumFile {
        let cells: Vec<Vec<Vec<&str>>> = cells.iter().map(|c| vec![vec![*c]]).collect();
        CellDatumFile::from_compact(&a.presentation().quiver, &["l1", "l2", "l3", "l4"], &cells, &[], &[]).unwrap()
    }

    #[test]
    fn kronecker_chain() {
        let a = kronecker();
        let f = datum(&a, ["e[1]", "X", "Y", "X Y"]);
        let d = CellDatum::from_file(&f, &a).unwrap();
        let v = verify(&d, &a).unwrap();
        assert!(v.c1 && v.c2 && v.c3, "{v:?}");
        let s = v.structure.as_ref().unwrap();
        assert_eq!(s.lambda_plus, vec![0]);
        assert_eq!(s.decomposition, vec![vec![1], vec![1], vec![1], vec![1]]);
        assert_eq!(v.cartan_identity, Some(true));
        let chain = cell_chain(&d, &a, &default_extension(&d)).unwrap();
        assert!(chain.ok, "{:?}", chain.failures);
        let dims: Vec<usize> = chain.steps.iter().map(|s| s.ideal_dim).collect();
        assert_eq!(dims, [4, 3, 2, 1]);
    }

    #[test]
    fn reversed_order_breaks_c3() {
        let a = kronecker();
        let f = datum(&a, ["X Y", "Y", "X", "e[1]"]);
        let d = CellDatum::from_file(&f, &a).unwrap();
        assert!(verify_c1(&d, &a));
        let (ok, w) = verify_c3(&d, &a);
        assert!(!ok);
        assert!(w.is_some());
    }

    #[test]
    fn datum_json_round_trip() {
        let a = kronecker();
        let f = datum(&a, ["e[1]", "X", "Y", "X Y"]);
        let g = CellDatumFile::from_json(&f.to_json()).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn wrong_size_is_rejected() {
        let a = kronecker();
        let cells = vec![vec![vec!["e[1]"]], vec![vec!["X"]]];
        let f = CellDatumFile::from_compact(&a.presentation().quiver, &["l1", "l2"], &cells, &[], &[]).unwrap();
        assert!(CellDatum::from_file(&f, &a).is_err());
    }
}
