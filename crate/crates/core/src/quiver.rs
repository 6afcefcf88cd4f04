//! Quivers, paths and path-algebra elements. Paths compose left to right:
//! the word `a b` means `a` first, then `b`, and needs `target(a) = source(b)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    vertex_ix: HashMap<String, usize>,
    arrow_ix: HashMap<String, usize>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Quiver> {
        let mut q = Quiver::default();
        for v in vertices {
            if v.is_empty() {
                return Err(Error::Invalid("empty vertex name".into()));
            }
            if q.vertex_ix.insert(v.clone(), q.vertices.len()).is_some() {
                return Err(Error::Invalid(format!("duplicate vertex {v:?}")));
            }
            q.vertices.push(v);
        }
        for (name, from, to) in arrows {
            if !valid_arrow_name(&name) {
                return Err(Error::Invalid(format!("bad arrow name {name:?}")));
            }
            let source = q.vertex(&from)?;
            let target = q.vertex(&to)?;
            if q.arrow_ix.insert(name.clone(), q.arrows.len()).is_some() {
                return Err(Error::Invalid(format!("duplicate arrow {name:?}")));
            }
            q.arrows.push(Arrow { name, source, target });
        }
        Ok(q)
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.vertex_ix
            .get(name)
            .copied()
            .ok_or_else(|| Error::Invalid(format!("unknown vertex {name:?}")))
    }

    pub fn arrow(&self, name: &str) -> Result<usize> {
        self.arrow_ix
            .get(name)
            .copied()
            .ok_or_else(|| Error::Invalid(format!("unknown arrow {name:?}")))
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Checks composability of an arrow sequence.
    pub fn word(&self, arrows: Vec<usize>) -> Result<Path> {
        if arrows.is_empty() {
            return Err(Error::Invalid("empty arrow sequence".into()));
        }
        for w in arrows.windows(2) {
            let (a, b) = (&self.arrows[w[0]], &self.arrows[w[1]]);
            if a.target != b.source {
                return Err(Error::Invalid(format!(
                    "non-composable path: {} ends at {} but {} starts at {}",
                    a.name, self.vertices[a.target], b.name, self.vertices[b.source]
                )));
            }
        }
        Ok(Path::Word(arrows))
    }

    pub fn word_by_names(&self, names: &[&str]) -> Result<Path> {
        let ids = names.iter().map(|n| self.arrow(n)).collect::<Result<Vec<_>>>()?;
        self.word(ids)
    }

    pub fn source(&self, p: &Path) -> usize {
        match p {
            Path::Trivial(v) => *v,
            Path::Word(w) => self.arrows[w[0]].source,
        }
    }

    pub fn target(&self, p: &Path) -> usize {
        match p {
            Path::Trivial(v) => *v,
            Path::Word(w) => self.arrows[*w.last().unwrap()].target,
        }
    }

    /// `p` followed by `q`, or `None` when they do not compose.
    pub fn concat(&self, p: &Path, q: &Path) -> Option<Path> {
        if self.target(p) != self.source(q) {
            return None;
        }
        Some(match (p, q) {
            (Path::Trivial(_), _) => q.clone(),
            (_, Path::Trivial(_)) => p.clone(),
            (Path::Word(a), Path::Word(b)) => {
                let mut w = a.clone();
                w.extend_from_slice(b);
                Path::Word(w)
            }
        })
    }

    pub fn path_label(&self, p: &Path) -> String {
        match p {
            Path::Trivial(v) => format!("e[{}]", self.vertices[*v]),
            Path::Word(w) => w.iter().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join("."),
        }
    }
}

pub(crate) fn valid_arrow_name(name: &str) -> bool {
    !name.is_empty()
        && name != "e"
        && name.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
        && !name.chars().next().unwrap().is_ascii_digit()
}

/// A trivial path at a vertex or a nonempty composable arrow word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Path {
    Trivial(usize),
    Word(Vec<usize>),
}

impl Path {
    pub fn len(&self) -> usize {
        match self {
            Path::Trivial(_) => 0,
            Path::Word(w) => w.len(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, Path::Trivial(_))
    }

    pub fn arrows(&self) -> &[usize] {
        match self {
            Path::Trivial(_) => &[],
            Path::Word(w) => w,
        }
    }
}

/// Graded lexicographic order: trivial paths first, then by length, then by arrow index.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Path::Trivial(a), Path::Trivial(b)) => a.cmp(b),
            (Path::Trivial(_), Path::Word(_)) => Ordering::Less,
            (Path::Word(_), Path::Trivial(_)) => Ordering::Greater,
            (Path::Word(a), Path::Word(b)) => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
        }
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Finitely supported combination of paths; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Element {
    pub terms: BTreeMap<Path, Scalar>,
}

impl Element {
    pub fn zero() -> Element {
        Element::default()
    }

    pub fn monomial(p: Path, c: Scalar) -> Element {
        let mut e = Element::zero();
        e.add_term(p, c);
        e
    }

    pub fn add_term(&mut self, p: Path, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(x) => {
                *x = x.add(&c);
                if x.is_zero() {
                    self.terms.remove(&p);
                }
            }
            None => {
                self.terms.insert(p, c);
            }
        }
    }

    pub fn add(&self, o: &Element) -> Element {
        let mut r = self.clone();
        for (p, c) in &o.terms {
            r.add_term(p.clone(), c.clone());
        }
        r
    }

    pub fn scaled(&self, c: &Scalar) -> Element {
        let mut r = Element::zero();
        for (p, x) in &self.terms {
            r.add_term(p.clone(), x.mul(c));
        }
        r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading path in the graded lexicographic order.
    pub fn tip(&self) -> Option<&Path> {
        self.terms.keys().next_back()
    }

    /// Path-algebra product (no reduction).
    pub fn mul(&self, q: &Quiver, o: &Element) -> Element {
        let mut r = Element::zero();
        for (p, a) in &self.terms {
            for (s, b) in &o.terms {
                if let Some(ps) = q.concat(p, s) {
                    r.add_term(ps, a.mul(b));
                }
            }
        }
        r
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (p, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                s.push_str(&format!("{abs}*"));
            }
            s.push_str(&q.path_label(p));
        }
        s
    }
}
