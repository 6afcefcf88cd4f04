//! Bound-quiver presentations and their JSON file format.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{valid_arrow_name, Element, Path, Quiver};
use crate::scalar::{parse_rational, Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Param {
    pub name: String,
    pub value: String,
    pub forbidden: Vec<String>,
}

/// One term of a relation: a coefficient expression (kept verbatim) times a path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: String,
    pub path: Path,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub field: Field,
    /// Sorted by name.
    pub params: Vec<Param>,
    pub quiver: Quiver,
    pub relations: Vec<Vec<Term>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawField {
    Named(String),
    Prime { prime: u64 },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawParam {
    value: String,
    #[serde(default)]
    forbidden: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawArrow {
    name: String,
    from: String,
    to: String,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawPath {
    Arrows(Vec<String>),
    Vertex { vertex: String },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerm {
    coeff: String,
    path: RawPath,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPresentation {
    field: RawField,
    #[serde(default)]
    params: BTreeMap<String, RawParam>,
    vertices: Vec<String>,
    arrows: Vec<RawArrow>,
    relations: Vec<Vec<RawTerm>>,
}

impl Presentation {
    /// Builds and validates a presentation.
    pub fn new(field: Field, mut params: Vec<Param>, quiver: Quiver, relations: Vec<Vec<Term>>) -> Result<Presentation> {
        if field == Field::Prime(2) {
            return Err(Error::Invalid("characteristic 2 is not supported".into()));
        }
        params.sort_by(|a, b| a.name.cmp(&b.name));
        let p = Presentation { field, params, quiver, relations };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        for w in self.params.windows(2) {
            if w[0].name == w[1].name {
                return Err(Error::Invalid(format!("duplicate parameter {:?}", w[0].name)));
            }
        }
        let values = self.param_values()?;
        for p in &self.params {
            for f in &p.forbidden {
                if self.field.parse(f)? == values[&p.name] {
                    return Err(Error::Invalid(format!(
                        "forbidden parameter value {}={} (excluded: {})",
                        p.name,
                        p.value,
                        p.forbidden.join(", ")
                    )));
                }
            }
        }
        for (i, rel) in self.relations.iter().enumerate() {
            if rel.is_empty() {
                return Err(Error::Invalid(format!("relation {i} is empty")));
            }
            for t in rel {
                if t.path.is_trivial() {
                    return Err(Error::Invalid(format!(
                        "relation {i} contains a trivial path; relations must lie in the arrow ideal"
                    )));
                }
                eval_coeff(&t.coeff, self.field, &values)?;
            }
        }
        Ok(())
    }

    pub fn param_values(&self) -> Result<HashMap<String, Scalar>> {
        self.params
            .iter()
            .map(|p| Ok((p.name.clone(), self.field.parse(&p.value)?)))
            .collect()
    }

    /// Relations as path-algebra elements with parameters substituted.
    pub fn relation_elements(&self) -> Result<Vec<Element>> {
        let values = self.param_values()?;
        self.relations
            .iter()
            .map(|rel| {
                let mut e = Element::zero();
                for t in rel {
                    e.add_term(t.path.clone(), eval_coeff(&t.coeff, self.field, &values)?);
                }
                Ok(e)
            })
            .collect()
    }

    /// Evaluates a compact expression such as `"a b - lambda*c (d e)^2"`.
    pub fn element(&self, expr: &str) -> Result<Element> {
        let values = self.param_values()?;
        let mut e = Element::zero();
        for t in parse_terms(&self.quiver, expr)? {
            e.add_term(t.path, eval_coeff(&t.coeff, self.field, &values)?);
        }
        Ok(e)
    }

    pub fn from_json(text: &str) -> Result<Presentation> {
        let raw: RawPresentation = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let field = match raw.field {
            RawField::Named(s) if s == "rational" => Field::Rational,
            RawField::Named(s) => return Err(Error::Parse(format!("unknown field {s:?}"))),
            RawField::Prime { prime } => Field::prime(prime)?,
        };
        let params = raw
            .params
            .into_iter()
            .map(|(name, p)| Param { name, value: p.value, forbidden: p.forbidden })
            .collect();
        let quiver = Quiver::new(raw.vertices, raw.arrows.into_iter().map(|a| (a.name, a.from, a.to)).collect())?;
        let relations = raw
            .relations
            .into_iter()
            .map(|rel| {
                rel.into_iter()
                    .map(|t| {
                        let path = match t.path {
                            RawPath::Vertex { vertex } => Path::Trivial(quiver.vertex(&vertex)?),
                            RawPath::Arrows(names) => {
                                let ids = names.iter().map(|n| quiver.arrow(n)).collect::<Result<Vec<_>>>()?;
                                quiver.word(ids)?
                            }
                        };
                        Ok(Term { coeff: t.coeff, path })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(field, params, quiver, relations)
    }

    pub fn to_json(&self) -> String {
        let raw = RawPresentation {
            field: match self.field {
                Field::Rational => RawField::Named("rational".into()),
                Field::Prime(p) => RawField::Prime { prime: p },
            },
            params: self
                .params
                .iter()
                .map(|p| (p.name.clone(), RawParam { value: p.value.clone(), forbidden: p.forbidden.clone() }))
                .collect(),
            vertices: self.quiver.vertices.clone(),
            arrows: self
                .quiver
                .arrows
                .iter()
                .map(|a| RawArrow {
                    name: a.name.clone(),
                    from: self.quiver.vertices[a.source].clone(),
                    to: self.quiver.vertices[a.target].clone(),
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|rel| {
                    rel.iter()
                        .map(|t| RawTerm {
                            coeff: t.coeff.clone(),
                            path: match &t.path {
                                Path::Trivial(v) => RawPath::Vertex { vertex: self.quiver.vertices[*v].clone() },
                                Path::Word(w) => {
                                    RawPath::Arrows(w.iter().map(|&a| self.quiver.arrows[a].name.clone()).collect())
                                }
                            },
                        })
                        .collect()
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&raw).expect("serializable");
        s.push('\n');
        s
    }
}

/// Evaluates `[-]factor(*factor)*` with factors that are exact numbers or `param[^k]`.
pub fn eval_coeff(expr: &str, field: Field, params: &HashMap<String, Scalar>) -> Result<Scalar> {
    let s = expr.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, s),
    };
    if body.is_empty() {
        return Err(Error::Parse(format!("empty coefficient {expr:?}")));
    }
    let mut acc = field.one();
    for f in body.split('*') {
        let f = f.trim();
        let (base, exp) = match f.split_once('^') {
            Some((b, e)) => (b.trim(), e.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in {expr:?}")))?),
            None => (f, 1),
        };
        let v = if base.chars().next().is_some_and(|c| c.is_ascii_digit()) {
            field.parse(base)?
        } else {
            params
                .get(base)
                .cloned()
                .ok_or_else(|| Error::Invalid(format!("unknown parameter {base:?} in coefficient {expr:?}")))?
        };
        acc = acc.mul(&v.pow(exp));
    }
    Ok(if neg { acc.neg() } else { acc })
}

/// Parses a compact expression into terms, merging nothing: each summand becomes one term.
pub fn parse_terms(q: &Quiver, expr: &str) -> Result<Vec<Term>> {
    let mut out = Vec::new();
    for (neg, chunk) in split_summands(expr)? {
        let pieces: Vec<&str> = chunk.split('*').map(str::trim).collect();
        let (path_src, factors) = pieces.split_last().unwrap();
        for f in factors {
            if f.is_empty() {
                return Err(Error::Parse(format!("empty factor in {expr:?}")));
            }
        }
        let mut coeff = if factors.is_empty() { "1".to_string() } else { factors.join("*") };
        if neg {
            coeff = format!("-{coeff}");
        }
        let path = parse_path(q, path_src)?;
        out.push(Term { coeff, path });
    }
    Ok(out)
}

fn split_summands(expr: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut depth = 0i32;
    for c in expr.chars() {
        match c {
            '[' | '(' => {
                depth += 1;
                cur.push(c);
            }
            ']' | ')' => {
                depth -= 1;
                cur.push(c);
            }
            '+' | '-' if depth == 0 => {
                if !cur.trim().is_empty() {
                    out.push((neg, cur.trim().to_string()));
                } else if !out.is_empty() {
                    return Err(Error::Parse(format!("dangling sign in {expr:?}")));
                }
                cur.clear();
                neg = c == '-';
            }
            _ => cur.push(c),
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in {expr:?}")));
    }
    if cur.trim().is_empty() {
        return Err(Error::Parse(format!("missing term in {expr:?}")));
    }
    out.push((neg, cur.trim().to_string()));
    Ok(out)
}

fn parse_path(q: &Quiver, src: &str) -> Result<Path> {
    let chars: Vec<char> = src.chars().collect();
    let mut pos = 0;
    let items = parse_seq(q, &chars, &mut pos)?;
    if pos != chars.len() {
        return Err(Error::Parse(format!("unexpected {:?} in path {src:?}", chars[pos])));
    }
    let mut vertex = None;
    let mut arrows = Vec::new();
    for it in items {
        match it {
            PathItem::Vertex(v) => {
                if vertex.is_some() {
                    return Err(Error::Parse(format!("several trivial paths in {src:?}")));
                }
                vertex = Some(v);
            }
            PathItem::Arrows(a) => arrows.extend(a),
        }
    }
    match (vertex, arrows.is_empty()) {
        (Some(v), true) => Ok(Path::Trivial(v)),
        (None, false) => q.word(arrows),
        (Some(v), false) => {
            let w = q.word(arrows)?;
            if q.source(&w) != v {
                return Err(Error::Invalid(format!("non-composable path {src:?}")));
            }
            Ok(w)
        }
        (None, true) => Err(Error::Parse(format!("empty path {src:?}"))),
    }
}

enum PathItem {
    Vertex(usize),
    Arrows(Vec<usize>),
}

fn parse_seq(q: &Quiver, c: &[char], pos: &mut usize) -> Result<Vec<PathItem>> {
    let mut items = Vec::new();
    loop {
        while *pos < c.len() && (c[*pos].is_whitespace() || c[*pos] == '.') {
            *pos += 1;
        }
        if *pos >= c.len() || c[*pos] == ')' {
            return Ok(items);
        }
        if c[*pos] == '(' {
            *pos += 1;
            let inner = parse_seq(q, c, pos)?;
            if *pos >= c.len() || c[*pos] != ')' {
                return Err(Error::Parse("missing ')'".into()));
            }
            *pos += 1;
            let k = parse_exponent(c, pos)?.unwrap_or(1);
            let mut flat = Vec::new();
            for it in inner {
                match it {
                    PathItem::Arrows(a) => flat.extend(a),
                    PathItem::Vertex(_) => return Err(Error::Parse("trivial path inside a power".into())),
                }
            }
            items.push(PathItem::Arrows(flat.repeat(k)));
            continue;
        }
        let start = *pos;
        while *pos < c.len() && (c[*pos].is_alphanumeric() || c[*pos] == '_' || c[*pos] == '\'') {
            *pos += 1;
        }
        if start == *pos {
            return Err(Error::Parse(format!("unexpected {:?}", c[*pos])));
        }
        let name: String = c[start..*pos].iter().collect();
        if name == "e" && *pos < c.len() && c[*pos] == '[' {
            let close = c[*pos..].iter().position(|&x| x == ']').ok_or_else(|| Error::Parse("missing ']'".into()))?;
            let v: String = c[*pos + 1..*pos + close].iter().collect();
            *pos += close + 1;
            items.push(PathItem::Vertex(q.vertex(v.trim())?));
            continue;
        }
        if !valid_arrow_name(&name) {
            return Err(Error::Parse(format!("bad arrow name {name:?}")));
        }
        let a = q.arrow(&name)?;
        let k = parse_exponent(c, pos)?.unwrap_or(1);
        items.push(PathItem::Arrows(vec![a; k]));
    }
}

fn parse_exponent(c: &[char], pos: &mut usize) -> Result<Option<usize>> {
    if *pos < c.len() && c[*pos] == '^' {
        *pos += 1;
        let start = *pos;
        while *pos < c.len() && c[*pos].is_ascii_digit() {
            *pos += 1;
        }
        let s: String = c[start..*pos].iter().collect();
        let k: usize = s.parse().map_err(|_| Error::Parse("bad exponent".into()))?;
        if k == 0 {
            return Err(Error::Parse("zero exponent".into()));
        }
        return Ok(Some(k));
    }
    Ok(None)
}

/// Convenience constructor used by the catalog.
pub struct Builder {
    field: Field,
    params: Vec<Param>,
    vertices: Vec<String>,
    arrows: Vec<(String, String, String)>,
    relations: Vec<String>,
}

impl Builder {
    pub fn new(field: Field) -> Builder {
        Builder { field, params: Vec::new(), vertices: Vec::new(), arrows: Vec::new(), relations: Vec::new() }
    }

    pub fn param(&mut self, name: &str, value: &BigRational, forbidden: &[&str]) -> &mut Self {
        self.params.push(Param {
            name: name.into(),
            value: value.to_string(),
            forbidden: forbidden.iter().map(|s| s.to_string()).collect(),
        });
        self
    }

    pub fn vertex(&mut self, v: impl Into<String>) -> &mut Self {
        self.vertices.push(v.into());
        self
    }

    pub fn vertices<S: ToString>(&mut self, vs: impl IntoIterator<Item = S>) -> &mut Self {
        for v in vs {
            self.vertices.push(v.to_string());
        }
        self
    }

    pub fn arrow(&mut self, name: impl Into<String>, from: impl ToString, to: impl ToString) -> &mut Self {
        self.arrows.push((name.into(), from.to_string(), to.to_string()));
        self
    }

    pub fn rel(&mut self, expr: impl Into<String>) -> &mut Self {
        self.relations.push(expr.into());
        self
    }

    pub fn build(&self) -> Result<Presentation> {
        let quiver = Quiver::new(self.vertices.clone(), self.arrows.clone())?;
        let relations = self.relations.iter().map(|r| parse_terms(&quiver, r)).collect::<Result<Vec<_>>>()?;
        Presentation::new(self.field, self.params.clone(), quiver, relations)
    }
}

/// Parses an exact rational for parameter values.
pub fn rational(s: &str) -> Result<BigRational> {
    parse_rational(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    const KRONECKER: &str = r#"{
  "field": "rational",
  "vertices": ["1"],
  "arrows": [{"name": "X", "from": "1", "to": "1"}, {"name": "Y", "from": "1", "to": "1"}],
  "relations": [
    [{"coeff": "1", "path": ["X", "X"]}],
    [{"coeff": "1", "path": ["Y", "Y"]}],
    [{"coeff": "1", "path": ["X", "Y"]}, {"coeff": "-1", "path": ["Y", "X"]}]
  ]
}"#;

    #[test]
    fn parses_and_round_trips() {
        let p = Presentation::from_json(KRONECKER).unwrap();
        assert_eq!(p.relations.len(), 3);
        let text = p.to_json();
        let again = Presentation::from_json(&text).unwrap();
        assert_eq!(again, p);
        assert_eq!(again.to_json(), text);
    }

    #[test]
    fn rejects_non_composable() {
        let t = r#"{"field":"rational","vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"}],
            "relations":[[{"coeff":"1","path":["a","a"]}]]}"#;
        let e = Presentation::from_json(t).unwrap_err();
        assert!(e.to_string().contains("non-composable"), "{e}");
    }

    #[test]
    fn rejects_forbidden_and_char_two() {
        let t = r#"{"field":"rational","params":{"lambda":{"value":"0","forbidden":["0"]}},"vertices":["1"],
            "arrows":[{"name":"a","from":"1","to":"1"},{"name":"b","from":"1","to":"1"}],
            "relations":[[{"coeff":"1","path":["a","b"]},{"coeff":"-lambda","path":["b","a"]}]]}"#;
        assert!(Presentation::from_json(t).unwrap_err().to_string().contains("forbidden"));
        let t2 = r#"{"field":{"prime":2},"vertices":["1"],"arrows":[],"relations":[]}"#;
        assert!(Presentation::from_json(t2).is_err());
    }

    #[test]
    fn compact_expressions() {
        let mut b = Builder::new(Field::Rational);
        b.param("lambda", &rational("3").unwrap(), &["0"]);
        b.vertices(["-1", "0"]).arrow("a", "-1", "0").arrow("b", "0", "-1").arrow("c", "0", "0");
        b.rel("(a b)^2 a - lambda*a c^2").rel("e[0] c - 2/3*c");
        let p = b.build().unwrap();
        let r = p.relation_elements().unwrap();
        assert_eq!(r[0].terms.len(), 2);
        assert_eq!(p.relations[0][1].coeff, "-lambda");
        assert_eq!(p.relations[0][0].path.len(), 5);
        assert_eq!(r[1].terms.len(), 1);
        assert!(b.rel("a a").build().is_err());
    }
}
