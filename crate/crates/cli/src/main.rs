use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use cellar_core::algebra::{FdAlgebra, DEFAULT_CAP};
use cellar_core::catalog::{self, Built};
use cellar_core::cellular::{cell_chain, default_extension, verify, CellDatum, CellDatumFile};
use cellar_core::module::{cartan, ext1_symmetric, gabriel_quiver, projective, weakly_symmetric};
use cellar_core::obstruction::{
    gram_factorizations, necessary_conditions_report, order_consistency, DecompCandidate, VerdictKind,
    DEFAULT_TRACE_CAP,
};
use cellar_core::presentation::Presentation;
use cellar_core::Error;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Parser)]
#[command(name = "cellar", version, about = "Exact computations with bound quiver algebras and cell data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Write the JSON report to FILE (`catalog build` writes the presentation instead).
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Cap on the length of normal words during rewriting.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Cap on trace(C), which bounds the rows of a factorization.
    #[arg(long, global = true, default_value_t = DEFAULT_TRACE_CAP)]
    trace_cap: usize,
    /// Include wall-clock timings in the report.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Args, Clone)]
struct Input {
    /// Presentation JSON file or `catalog:NAME?k=v&...`.
    input: String,
    /// Idempotent truncation, as comma-separated vertex names.
    #[arg(long, value_name = "a,b,c", allow_hyphen_values = true)]
    vertices: Option<String>,
}

#[derive(Args, Clone)]
struct MatrixInput {
    /// Presentation JSON file or catalog URI.
    input: Option<String>,
    #[arg(long, value_name = "a,b,c", allow_hyphen_values = true)]
    vertices: Option<String>,
    /// Cartan matrix inline, e.g. "[[4,2],[2,2]]".
    #[arg(long)]
    cartan: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Normal-word basis.
    Basis(Input),
    /// Cartan matrix.
    Cartan(Input),
    /// Indecomposable projectives: dimension vectors, radical layers, top and socle.
    Projectives(Input),
    /// Arrow counts of the Gabriel quiver.
    Gabriel(Input),
    /// Symmetry of the Gabriel quiver.
    ExtSym(Input),
    /// Weak symmetry of the projectives.
    WeakSym(Input),
    /// Idempotent truncation eAe.
    Truncate(Input),
    /// All decomposition candidates D with DtD = C.
    GramFactor(MatrixInput),
    /// Order consistency of each candidate, or of one given matrix.
    OrderCheck {
        #[command(flatten)]
        m: MatrixInput,
        /// Check this matrix instead of the factorizations of C.
        #[arg(long)]
        decomposition: Option<String>,
        /// Impose the conditions for self-injective algebras.
        #[arg(long)]
        self_injective: bool,
    },
    /// Axioms C1, C2, C3 and DtD = C for a cell datum.
    VerifyCell {
        input: String,
        /// Datum JSON file or `bundled`.
        #[arg(long)]
        datum: String,
    },
    /// The ideal chain of a cell datum and the filtrations of the projectives.
    Chain {
        input: String,
        #[arg(long)]
        datum: String,
        /// Linear extension, bottom to top, as comma-separated poset elements.
        #[arg(long)]
        extension: Option<String>,
    },
    /// Full necessary-condition pipeline, with cellular verification when a datum is present.
    Report {
        #[command(flatten)]
        i: Input,
        /// Datum JSON file, `bundled` (the default for catalog inputs) or `none`.
        #[arg(long)]
        datum: Option<String>,
        /// Treat a file input as self-injective.
        #[arg(long)]
        self_injective: bool,
    },
    /// The built-in catalog.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Entries with parameter schemas.
    List,
    /// Writes the presentation of an entry.
    Build {
        name: String,
        /// Parameter k=v, repeatable.
        #[arg(long = "param", value_name = "k=v")]
        params: Vec<String>,
        /// Also write the bundled cell datum.
        #[arg(long, value_name = "FILE")]
        datum_out: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = if matches!(e, Error::Cap(_)) { 3 } else { 2 };
        let message = match &e {
            Error::Parse(m) | Error::Invalid(m) | Error::Cap(m) => m.clone(),
        };
        Failure { code, kind: e.kind(), message }
    }
}

fn io_failure(what: &str, e: std::io::Error) -> Failure {
    Failure { code: 2, kind: "io", message: format!("{what}: {e}") }
}

type Run<T> = Result<T, Failure>;

/// A resolved input: the presentation, catalog metadata if any, and the bytes hashed into the digest.
struct Loaded {
    presentation: Presentation,
    built: Option<Built>,
    digest_parts: Vec<String>,
}

impl Loaded {
    fn algebra(&self, cap: usize) -> Run<FdAlgebra> {
        Ok(FdAlgebra::from_presentation(&self.presentation, cap)?)
    }

    fn self_injective(&self, flag: bool) -> bool {
        flag || self.built.as_ref().is_some_and(|b| b.metadata.self_injective)
    }
}

fn load(input: &str) -> Run<Loaded> {
    if catalog::parse_uri(input).is_some() {
        let built = catalog::build_uri(input)?;
        let presentation = built.presentation.clone();
        return Ok(Loaded { digest_parts: vec![presentation.to_json()], presentation, built: Some(built) });
    }
    let text = std::fs::read_to_string(input).map_err(|e| io_failure(input, e))?;
    let presentation = Presentation::from_json(&text)?;
    Ok(Loaded { digest_parts: vec![presentation.to_json()], presentation, built: None })
}

fn names(list: &str) -> Vec<&str> {
    list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
}

fn target(full: &FdAlgebra, vertices: &Option<String>) -> Run<FdAlgebra> {
    match vertices {
        Some(v) => Ok(full.truncate_by_names(&names(v))?),
        None => Ok(full.clone()),
    }
}

fn vertex_names(a: &FdAlgebra) -> Value {
    json!(a.vertices)
}

fn load_datum(loaded: &mut Loaded, spec: &str, full: &FdAlgebra) -> Run<Option<CellDatum>> {
    let file = match spec {
        "none" => return Ok(None),
        "bundled" => match loaded.built.as_ref().and_then(|b| b.datum.clone()) {
            Some(f) => f,
            None => return Err(Failure { code: 2, kind: "invalid", message: "no bundled cell datum for this input".into() }),
        },
        path => {
            let text = std::fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
            CellDatumFile::from_json(&text)?
        }
    };
    loaded.digest_parts.push(file.to_json());
    Ok(Some(CellDatum::from_file(&file, full)?))
}

fn required_datum(loaded: &mut Loaded, spec: &str, full: &FdAlgebra) -> Run<CellDatum> {
    load_datum(loaded, spec, full)?
        .ok_or_else(|| Failure { code: 2, kind: "invalid", message: "this command needs a cell datum".into() })
}

fn parse_matrix(s: &str) -> Run<Vec<Vec<usize>>> {
    serde_json::from_str(s)
        .map_err(|e| Failure { code: 2, kind: "parse", message: format!("matrix {s:?}: {e}") })
}

/// Cartan matrix from `--cartan` or from an input algebra.
fn cartan_input(m: &MatrixInput, cap: usize, digest: &mut Vec<String>) -> Run<(Vec<Vec<usize>>, Option<Loaded>)> {
    match (&m.cartan, &m.input) {
        (Some(c), None) => {
            digest.push(c.clone());
            Ok((parse_matrix(c)?, None))
        }
        (None, Some(i)) => {
            let loaded = load(i)?;
            let full = loaded.algebra(cap)?;
            let c = cartan(&target(&full, &m.vertices)?);
            digest.extend(loaded.digest_parts.iter().cloned());
            Ok((c, Some(loaded)))
        }
        _ => Err(Failure { code: 2, kind: "invalid", message: "give either an input or --cartan".into() }),
    }
}

fn candidates_json(ds: &[DecompCandidate]) -> Value {
    json!(ds.iter().map(|d| &d.rows).collect::<Vec<_>>())
}

/// Runs a command; returns the results object, the exit code and the digest inputs.
fn execute(cli: &Cli) -> Run<(Value, u8, Vec<String>)> {
    let cap = cli.cap;
    match &cli.command {
        Command::Basis(i) => {
            let l = load(&i.input)?;
            let a = target(&l.algebra(cap)?, &i.vertices)?;
            let basis: Vec<Value> = a
                .basis
                .iter()
                .map(|b| json!({"label": b.label, "source": a.vertices[b.source], "target": a.vertices[b.target]}))
                .collect();
            Ok((json!({"dimension": a.dim(), "vertices": vertex_names(&a), "basis": basis}), 0, l.digest_parts))
        }
        Command::Cartan(i) => {
            let l = load(&i.input)?;
            let a = target(&l.algebra(cap)?, &i.vertices)?;
            Ok((json!({"dimension": a.dim(), "vertices": vertex_names(&a), "cartan": cartan(&a)}), 0, l.digest_parts))
        }
        Command::Projectives(i) => {
            let l = load(&i.input)?;
            let a = target(&l.algebra(cap)?, &i.vertices)?;
            let ps: Vec<Value> = (0..a.num_vertices())
                .map(|v| {
                    let p = projective(&a, v);
                    json!({
                        "vertex": a.vertices[v],
                        "dimension": p.dim(),
                        "dimension_vector": p.dimension_vector(),
                        "radical_layers": p.radical_series(&a),
                        "top": p.top_dims(&a),
                        "socle": p.socle_dims(&a),
                    })
                })
                .collect();
            Ok((json!({"vertices": vertex_names(&a), "projectives": ps}), 0, l.digest_parts))
        }
        Command::Gabriel(i) => {
            let l = load(&i.input)?;
            let a = target(&l.algebra(cap)?, &i.vertices)?;
            Ok((json!({"vertices": vertex_names(&a), "arrows": gabriel_quiver(&a)}), 0, l.digest_parts))
        }
        Command::ExtSym(i) => {
            let l = load(&i.input)?;
            let a = target(&l.algebra(cap)?, &i.vertices)?;
            let (ok, w) = ext1_symmetric(&a);
            let witness = w.map(|(x, y)| json!([a.vertices[x], a.vertices[y]]));
            let r = json!({"vertices": vertex_names(&a), "arrows": gabriel_quiver(&a), "symmetric": ok, "witness": witness});
            Ok((r, u8::from(!ok), l.digest_parts))
        }
        Command::WeakSym(i) => {
            let l = load(&i.input)?;
            let a = target(&l.algebra(cap)?, &i.vertices)?;
            let (ok, w) = weakly_symmetric(&a);
            let r = json!({"weakly_symmetric": ok, "failing_vertex": w.map(|v| a.vertices[v].clone())});
            Ok((r, u8::from(!ok), l.digest_parts))
        }
        Command::Truncate(i) => {
            let Some(vs) = &i.vertices else {
                return Err(Failure { code: 2, kind: "invalid", message: "truncate needs --vertices".into() });
            };
            let l = load(&i.input)?;
            let full = l.algebra(cap)?;
            let t = full.truncate_by_names(&names(vs))?;
            let basis: Vec<&str> = t.basis.iter().map(|b| b.label.as_str()).collect();
            let r = json!({
                "vertices": vertex_names(&t),
                "dimension": t.dim(),
                "cartan": cartan(&t),
                "basis": basis,
                "full_dimension": full.dim(),
            });
            Ok((r, 0, l.digest_parts))
        }
        Command::GramFactor(m) => {
            let mut digest = Vec::new();
            let (c, _) = cartan_input(m, cap, &mut digest)?;
            let ds = gram_factorizations(&c, cli.trace_cap)?;
            Ok((json!({"cartan": c, "count": ds.len(), "candidates": candidates_json(&ds)}), 0, digest))
        }
        Command::OrderCheck { m, decomposition, self_injective } => {
            let mut digest = Vec::new();
            let (ds, si) = match decomposition {
                Some(d) => {
                    digest.push(d.clone());
                    let mut rows = parse_matrix(d)?;
                    rows.sort_by(|a, b| b.cmp(a));
                    let d = DecompCandidate { rows };
                    if d.rows.is_empty() || d.rows.iter().any(|r| r.len() != d.cols()) {
                        return Err(Failure { code: 2, kind: "invalid", message: "decomposition matrix must be rectangular".into() });
                    }
                    (vec![d], *self_injective)
                }
                None => {
                    let (c, l) = cartan_input(m, cap, &mut digest)?;
                    let si = *self_injective || l.is_some_and(|l| l.self_injective(false));
                    (gram_factorizations(&c, cli.trace_cap)?, si)
                }
            };
            let certs: Vec<Value> = ds
                .iter()
                .map(|d| json!({"candidate": d.rows, "certificate": order_consistency(d, si)}))
                .collect();
            let any = certs.iter().any(|c| c["certificate"]["consistent"] == json!(true));
            Ok((json!({"self_injective": si, "results": certs, "consistent": any}), u8::from(!any), digest))
        }
        Command::VerifyCell { input, datum } => {
            let mut l = load(input)?;
            let a = l.algebra(cap)?;
            let d = required_datum(&mut l, datum, &a)?;
            let v = verify(&d, &a)?;
            let mut r = json!({
                "dimension": a.dim(),
                "c1": v.c1,
                "c2": v.c2,
                "c2_failure": v.c2_failure,
                "c3": v.c3,
                "c3_witness": v.c3_witness.as_ref().map(|w| json!({
                    "generator": w.generator, "lambda": w.lambda, "s": w.s, "t": w.t, "t_prime": w.t_prime,
                })),
                "cartan_identity": v.cartan_identity,
                "verified": v.ok(),
            });
            if let Some(s) = &v.structure {
                r["lambda_plus"] = json!(s.lambda_plus.iter().map(|&l| d.elements[l].clone()).collect::<Vec<_>>());
                r["decomposition"] = json!(s.decomposition);
                r["cartan"] = json!(cartan(&a));
            }
            Ok((r, u8::from(!v.ok()), l.digest_parts))
        }
        Command::Chain { input, datum, extension } => {
            let mut l = load(input)?;
            let a = l.algebra(cap)?;
            let d = required_datum(&mut l, datum, &a)?;
            let ext = match extension {
                Some(e) => names(e)
                    .into_iter()
                    .map(|x| {
                        d.index(x).ok_or_else(|| Failure {
                            code: 2,
                            kind: "invalid",
                            message: format!("unknown poset element {x:?}"),
                        })
                    })
                    .collect::<Run<Vec<_>>>()?,
                None => default_extension(&d),
            };
            let c = cell_chain(&d, &a, &ext)?;
            let ok = c.ok;
            Ok((json!({"chain": c}), u8::from(!ok), l.digest_parts))
        }
        Command::Report { i, datum, self_injective } => {
            let mut l = load(&i.input)?;
            let full = l.algebra(cap)?;
            let vertices = i.vertices.clone().or_else(|| {
                l.built.as_ref().and_then(|b| b.metadata.truncation.as_ref()).map(|v| v.join(","))
            });
            let t = target(&full, &vertices)?;
            let spec = datum.clone().unwrap_or_else(|| {
                if l.built.as_ref().is_some_and(|b| b.datum.is_some()) { "bundled".into() } else { "none".into() }
            });
            let d = load_datum(&mut l, &spec, &full)?;
            let si = l.self_injective(*self_injective);
            let v = necessary_conditions_report(&full, &t, si, cli.trace_cap, d.as_ref())?;
            let code = u8::from(v.verdict == VerdictKind::NotCellular);
            let mut r = json!({
                "verdict": v.verdict,
                "reason": v.reason.as_ref().map(|c| c.detail.clone()),
                "certificates": v.certificates,
                "dimension": full.dim(),
                "cartan": v.full_cartan,
                "target_vertices": vertex_names(&t),
                "target_cartan": v.target_cartan,
                "candidates": candidates_json(&v.candidates),
                "orders": v.orders,
                "self_injective": si,
            });
            if let Some(b) = &l.built {
                r["metadata"] = json!(b.metadata);
            }
            Ok((r, code, l.digest_parts))
        }
        Command::Catalog(CatalogCommand::List) => {
            let entries: Vec<Value> = catalog::registry()
                .iter()
                .map(|e| json!({"name": e.name(), "summary": e.summary(), "params": e.params(), "default_field": e.default_field().to_string()}))
                .collect();
            Ok((json!({"entries": entries}), 0, Vec::new()))
        }
        Command::Catalog(CatalogCommand::Build { name, params, datum_out }) => {
            let mut given = BTreeMap::new();
            for p in params {
                let (k, v) = p.split_once('=').ok_or_else(|| Failure {
                    code: 2,
                    kind: "parse",
                    message: format!("bad --param {p:?}, expected k=v"),
                })?;
                given.insert(k.to_string(), v.to_string());
            }
            let b = catalog::build(name, &given)?;
            let text = b.presentation.to_json();
            let mut r = json!({"name": name, "params": given, "metadata": b.metadata});
            match &cli.out {
                Some(path) => {
                    std::fs::write(path, &text).map_err(|e| io_failure(&path.display().to_string(), e))?;
                    r["written"] = json!(path.display().to_string());
                }
                None => r["presentation"] = serde_json::from_str(&text).expect("valid json"),
            }
            if let Some(path) = datum_out {
                let d = b.datum.as_ref().ok_or_else(|| Failure {
                    code: 2,
                    kind: "invalid",
                    message: format!("{name} has no bundled cell datum"),
                })?;
                std::fs::write(path, d.to_json()).map_err(|e| io_failure(&path.display().to_string(), e))?;
                r["datum_written"] = json!(path.display().to_string());
            }
            Ok((r, 0, vec![text]))
        }
    }
}

fn digest(parts: &[String]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p.as_bytes());
    }
    hex::encode(h.finalize())
}

fn is_matrix(v: &Value) -> bool {
    matches!(v, Value::Array(rows) if !rows.is_empty()
        && rows.iter().all(|r| matches!(r, Value::Array(xs) if xs.iter().all(|x| !x.is_array() && !x.is_object()))))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Object(m) if m.is_empty() => "{}".into(),
        Value::Array(xs) => format!("[{}]", xs.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(xs) => xs.iter().all(|x| !x.is_object() && !x.is_array()),
        Value::Object(m) => m.is_empty(),
        _ => true,
    }
}

/// Plain-text rendering of a JSON report.
fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if is_flat(x) {
                    out.push_str(&format!("{pad}{k}: {}\n", scalar(x)));
                } else if is_matrix(x) {
                    out.push_str(&format!("{pad}{k}:\n"));
                    for row in x.as_array().unwrap() {
                        out.push_str(&format!("{pad}  {}\n", scalar(row)));
                    }
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render(x, indent + 2, out);
                }
            }
        }
        Value::Array(xs) => {
            for x in xs {
                if is_flat(x) || is_matrix(x) {
                    out.push_str(&format!("{pad}- {}\n", scalar(x)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render(x, indent + 2, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let start = Instant::now();
    let (report, code) = match execute(&cli) {
        Ok((results, code, parts)) => {
            let mut r = json!({"command": argv, "inputs_digest": digest(&parts), "results": results});
            if cli.timings {
                r["timings"] = json!({"total_ms": start.elapsed().as_secs_f64() * 1000.0});
            }
            if let (Some(path), false) = (&cli.out, matches!(cli.command, Command::Catalog(CatalogCommand::Build { .. }))) {
                let mut text = serde_json::to_string_pretty(&r).expect("serializable");
                text.push('\n');
                if let Err(e) = std::fs::write(path, text) {
                    let f = io_failure(&path.display().to_string(), e);
                    eprintln!("error ({}): {}", f.kind, f.message);
                    return ExitCode::from(f.code);
                }
            }
            (r, code)
        }
        Err(f) => {
            let r = json!({"command": argv, "error": {"kind": f.kind, "message": f.message}});
            if !cli.json {
                eprintln!("error ({}): {}", f.kind, f.message);
                return ExitCode::from(f.code);
            }
            (r, f.code)
        }
    };
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    } else {
        let mut text = String::new();
        render(&report, 0, &mut text);
        print!("{text}");
    }
    ExitCode::from(code)
}
