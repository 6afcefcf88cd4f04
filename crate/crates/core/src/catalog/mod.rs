//! Named constructors for the algebras of the classification, with metadata and
//! bundled cell data.
//!
//! Entries are looked up by name; inputs may also be written as
//! `catalog:NAME?key=value&key=value`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::FdAlgebra;
use crate::cellular::{CellDatum, CellDatumFile};
use crate::error::{Error, Result};
use crate::obstruction::{necessary_conditions_report, Verdict, VerdictKind};
use crate::presentation::{Builder, Presentation};
use crate::scalar::{parse_rational, Field};

pub mod brauer;
mod data;
mod families;
mod sporadic;

pub use brauer::{BrauerGraph, BrauerVertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ParamKind {
    Int,
    Rational,
    Text,
}

#[derive(Clone, Debug, Serialize)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
    pub default: &'static str,
    pub constraint: &'static str,
}

const fn int(name: &'static str, default: &'static str, constraint: &'static str) -> ParamSpec {
    ParamSpec { name, kind: ParamKind::Int, default, constraint }
}

const fn rat(name: &'static str, default: &'static str, constraint: &'static str) -> ParamSpec {
    ParamSpec { name, kind: ParamKind::Rational, default, constraint }
}

const fn text(name: &'static str, default: &'static str, constraint: &'static str) -> ParamSpec {
    ParamSpec { name, kind: ParamKind::Text, default, constraint }
}

/// Parameter values after defaults are applied. `field` is accepted by every entry.
#[derive(Clone, Debug)]
pub struct Params {
    values: BTreeMap<String, String>,
    pub field: Field,
}

impl Params {
    fn resolve(specs: &[ParamSpec], given: &BTreeMap<String, String>, default_field: Field) -> Result<Params> {
        let mut values = BTreeMap::new();
        let mut field = default_field;
        for (k, v) in given {
            if k == "field" {
                field = parse_field(v)?;
            } else if !specs.iter().any(|s| s.name == k) {
                let known: Vec<&str> = specs.iter().map(|s| s.name).collect();
                return Err(Error::Invalid(format!("unknown parameter {k:?} (known: {})", known.join(", "))));
            }
        }
        for s in specs {
            let v = given.get(s.name).cloned().unwrap_or_else(|| s.default.to_string());
            match s.kind {
                ParamKind::Int => {
                    v.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Invalid(format!("parameter {} must be an integer, got {v:?}", s.name)))?;
                }
                ParamKind::Rational => {
                    parse_rational(&v)?;
                }
                ParamKind::Text => {}
            }
            values.insert(s.name.to_string(), v.trim().to_string());
        }
        Ok(Params { values, field })
    }

    pub fn int(&self, name: &str) -> i64 {
        self.values[name].parse().expect("validated")
    }

    pub fn text(&self, name: &str) -> &str {
        &self.values[name]
    }

    pub fn values(&self) -> &BTreeMap<String, String> {
        &self.values
    }
}

fn parse_field(s: &str) -> Result<Field> {
    match s.trim() {
        "Q" | "rational" | "0" => Ok(Field::Rational),
        p => Field::prime(p.parse().map_err(|_| Error::Invalid(format!("bad field {s:?}")))?),
    }
}

/// What the engine is expected to reproduce for an entry.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Metadata {
    pub family: String,
    pub self_injective: bool,
    pub expected_dimension: Option<usize>,
    pub expected_cartan: Option<Vec<Vec<usize>>>,
    /// Vertex names of the idempotent truncation used by `report`, in order.
    pub truncation: Option<Vec<String>>,
    pub expected_target_cartan: Option<Vec<Vec<usize>>>,
    pub expected_candidates: Option<Vec<Vec<Vec<usize>>>>,
    pub expected_verdict: Option<VerdictKind>,
    pub notes: Vec<String>,
}

impl Metadata {
    fn new(family: &str) -> Metadata {
        Metadata { family: family.to_string(), self_injective: true, ..Default::default() }
    }

    fn dim(mut self, d: usize) -> Self {
        self.expected_dimension = Some(d);
        self
    }

    fn cartan(mut self, c: Vec<Vec<usize>>) -> Self {
        self.expected_cartan = Some(c);
        self
    }

    fn truncated(mut self, vs: &[&str], c: Vec<Vec<usize>>) -> Self {
        self.truncation = Some(vs.iter().map(|s| s.to_string()).collect());
        self.expected_target_cartan = Some(c);
        self
    }

    fn candidates(mut self, c: Vec<Vec<Vec<usize>>>) -> Self {
        self.expected_candidates = Some(c);
        self
    }

    fn verdict(mut self, v: VerdictKind) -> Self {
        self.expected_verdict = Some(v);
        self
    }

    fn note(mut self, n: &str) -> Self {
        self.notes.push(n.to_string());
        self
    }
}

pub struct Built {
    pub presentation: Presentation,
    pub metadata: Metadata,
    pub datum: Option<CellDatumFile>,
}

impl Built {
    pub fn algebra(&self, cap: usize) -> Result<FdAlgebra> {
        FdAlgebra::from_presentation(&self.presentation, cap)
    }

    /// The truncation named in the metadata, or the whole algebra.
    pub fn target(&self, full: &FdAlgebra) -> Result<FdAlgebra> {
        match &self.metadata.truncation {
            Some(vs) => full.truncate_by_names(&vs.iter().map(String::as_str).collect::<Vec<_>>()),
            None => Ok(full.clone()),
        }
    }

    pub fn cell_datum(&self, full: &FdAlgebra) -> Result<Option<CellDatum>> {
        self.datum.as_ref().map(|f| CellDatum::from_file(f, full)).transpose()
    }

    /// The necessary-condition report with the bundled datum, if any.
    pub fn report(&self, cap: usize, trace_cap: usize) -> Result<Verdict> {
        let full = self.algebra(cap)?;
        let target = self.target(&full)?;
        let datum = self.cell_datum(&full)?;
        necessary_conditions_report(&full, &target, self.metadata.self_injective, trace_cap, datum.as_ref())
    }
}

pub trait CatalogEntry: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn params(&self) -> &'static [ParamSpec];
    fn default_field(&self) -> Field {
        Field::Rational
    }
    fn build(&self, p: &Params) -> Result<Built>;
}

/// A catalog entry backed by a plain constructor function.
struct Entry {
    name: &'static str,
    summary: &'static str,
    params: &'static [ParamSpec],
    field: Field,
    build: fn(&Params) -> Result<Built>,
}

impl CatalogEntry for Entry {
    fn name(&self) -> &'static str {
        self.name
    }
    fn summary(&self) -> &'static str {
        self.summary
    }
    fn params(&self) -> &'static [ParamSpec] {
        self.params
    }
    fn default_field(&self) -> Field {
        self.field
    }
    fn build(&self, p: &Params) -> Result<Built> {
        (self.build)(p)
    }
}

fn entry(
    name: &'static str,
    summary: &'static str,
    params: &'static [ParamSpec],
    build: fn(&Params) -> Result<Built>,
) -> Box<dyn CatalogEntry> {
    Box::new(Entry { name, summary, params, field: Field::Rational, build })
}

const NONE: &[ParamSpec] = &[];
const LAMBDA: &[ParamSpec] = &[rat("lambda", "2", "lambda not in {0, 1}")];
const LOCAL: &[ParamSpec] = &[rat("lambda", "1", "lambda != 0")];
const LINE_N: &[ParamSpec] = &[int("n", "3", "n >= 2")];
const OMEGA_N: &[ParamSpec] = &[int("n", "2", "n >= 1")];
const ODD_N: &[ParamSpec] = &[int("n", "1", "n >= 1; the cycle has 2n+1 vertices")];
const CYCLE_L: &[ParamSpec] = &[int("l", "3", "l >= 3")];
const EDGES: &[ParamSpec] = &[text("edges", "1>2,2>3,2>4", "comma-separated arrows s>t of a connected acyclic quiver")];
const LM: &[ParamSpec] = &[int("l", "1", "l >= 0"), int("m", "1", "m >= 0")];
const GAMMA0: &[ParamSpec] = &[int("m", "1", "m >= 1")];
const GAMMA2: &[ParamSpec] = &[int("l", "1", "-1 <= l <= m"), int("m", "2", "m >= 0; if m = 0 then l in {-1, 0}")];
const BRAUER_LINE: &[ParamSpec] = &[
    int("n", "2", "n >= 1 edges"),
    text("mults", "", "vertex:multiplicity pairs, vertices 0..n; unlisted vertices have multiplicity 1"),
];

/// All entries, in listing order.
pub fn registry() -> Vec<Box<dyn CatalogEntry>> {
    use families as f;
    use sporadic as s;
    let mut v = vec![
        entry("Kronecker", "K<X,Y>/(X^2, Y^2, XY - YX)", NONE, f::kronecker),
        entry("LocalA", "local algebra K<X,Y>/(X^2, Y^2, XY - lambda YX)", LOCAL, f::local_a),
        entry("LoopedPair", "loop and a 2-cycle on two vertices, relations b1 a1, g^2 - a1 b1", NONE, f::looped_pair),
        entry("ModifiedBrauerLine", "modified Brauer tree algebra of a line with n edges", LINE_N, f::modified_brauer_line),
        entry("DoubleQuiver", "double quiver algebra of an acyclic quiver (trivial extension of KQ/R^2)", EDGES, f::double_quiver),
        entry("DoubleQuiverCycle", "double quiver algebra of a cycle with l vertices", CYCLE_L, f::double_quiver_cycle),
        entry("DoubleQuiverBranch", "double quiver algebra of the star with centre 2 and leaves 1, 3, 4", NONE, f::double_quiver_branch),
        entry("BrauerLine", "Brauer graph algebra of a line with n edges and chosen multiplicities", BRAUER_LINE, f::brauer_line),
        entry("OddCycle", "nonstandard-cycle algebra on an odd cycle with 2n+1 vertices", ODD_N, f::odd_cycle),
        entry("LambdaPrime", "algebra with one loop at each end of a line through a centre vertex", LM, f::lambda_prime),
        entry("GammaZero", "algebra with one loop, on vertices a, b, 1..m", GAMMA0, f::gamma_zero),
        entry("GammaOne", "algebra on an oriented triangle a, b, c", NONE, f::gamma_one),
        entry("GammaTwo", "algebra with an extra vertex w and one exceptional cycle", GAMMA2, f::gamma_two),
        entry("Omega", "nonstandard algebra of a line with a loop at vertex 1", OMEGA_N, f::omega),
    ];
    v.push(entry("A1", "three vertices in a line, two 2-cycles", LAMBDA, s::a1));
    v.push(entry("A2", "two loops and a 2-cycle", LAMBDA, s::a2));
    for (name, build) in s::FIXED {
        v.push(entry(name, "weakly symmetric algebra of polynomial growth", NONE, *build));
    }
    for (name, build) in s::CHAR3 {
        v.push(Box::new(Entry {
            name,
            summary: "nonstandard weakly symmetric algebra over a field of characteristic 3",
            params: NONE,
            field: Field::Prime(3),
            build: *build,
        }));
    }
    v
}

pub fn lookup(name: &str) -> Result<Box<dyn CatalogEntry>> {
    registry()
        .into_iter()
        .find(|e| e.name() == name)
        .ok_or_else(|| Error::Invalid(format!("unknown catalog entry {name:?}")))
}

/// Builds an entry from raw `key=value` parameters.
pub fn build(name: &str, given: &BTreeMap<String, String>) -> Result<Built> {
    let e = lookup(name)?;
    let p = Params::resolve(e.params(), given, e.default_field())?;
    e.build(&p)
}

/// Splits `catalog:NAME?k=v&k2=v2`; returns `None` for other inputs.
pub fn parse_uri(s: &str) -> Option<Result<(String, BTreeMap<String, String>)>> {
    let rest = s.strip_prefix("catalog:")?;
    let (name, query) = match rest.split_once('?') {
        Some((n, q)) => (n, q),
        None => (rest, ""),
    };
    let mut params = BTreeMap::new();
    for kv in query.split('&').filter(|s| !s.is_empty()) {
        match kv.split_once('=') {
            Some((k, v)) => {
                params.insert(k.to_string(), v.to_string());
            }
            None => return Some(Err(Error::Parse(format!("bad catalog parameter {kv:?}")))),
        }
    }
    if name.is_empty() {
        return Some(Err(Error::Parse("empty catalog name".into())));
    }
    Some(Ok((name.to_string(), params)))
}

/// Builds from a `catalog:` URI.
pub fn build_uri(s: &str) -> Result<Built> {
    let (name, params) = parse_uri(s).ok_or_else(|| Error::Parse(format!("not a catalog URI: {s:?}")))??;
    build(&name, &params)
}

fn builder(p: &Params) -> Builder {
    Builder::new(p.field)
}

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Invalid(msg.to_string()))
    }
}

fn param_value(p: &Params, name: &str) -> Result<num_rational::BigRational> {
    parse_rational(p.text(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uri_round_trip() {
        let (n, p) = parse_uri("catalog:GammaTwo?l=1&m=2").unwrap().unwrap();
        assert_eq!(n, "GammaTwo");
        assert_eq!(p["l"], "1");
        assert!(parse_uri("file.json").is_none());
        assert!(parse_uri("catalog:A3?x").unwrap().is_err());
    }

    #[test]
    fn unknown_names_and_params() {
        assert!(build("Nope", &BTreeMap::new()).is_err());
        let mut p = BTreeMap::new();
        p.insert("q".to_string(), "1".to_string());
        assert!(build("A3", &p).is_err());
    }

    #[test]
    fn names_are_unique() {
        let mut names: Vec<&str> = registry().iter().map(|e| e.name()).collect();
        let n = names.len();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), n);
    }
}
