//! Parameterised families.

use std::collections::BTreeMap;

use super::{builder, data, need, param_value, Built, Metadata, Params};
use crate::catalog::brauer::BrauerGraph;
use crate::error::{Error, Result};
use crate::obstruction::VerdictKind::{CellularVerified, NotCellular, Undecided};

fn m(rows: &[&[usize]]) -> Vec<Vec<usize>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

fn circulant(l: usize) -> Vec<Vec<usize>> {
    (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    if i == j {
                        2
                    } else if (i + 1) % l == j || (j + 1) % l == i {
                        1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

pub fn kronecker(p: &Params) -> Result<Built> {
    let mut b = builder(p);
    b.vertex("1").arrow("X", 1, 1).arrow("Y", 1, 1).rel("X^2").rel("Y^2").rel("X Y - Y X");
    let presentation = b.build()?;
    let datum = Some(data::kronecker(&presentation.quiver)?);
    let metadata = Metadata::new("local algebra, lambda = 1").dim(4).cartan(m(&[&[4]])).verdict(CellularVerified);
    Ok(Built { presentation, metadata, datum })
}

pub fn local_a(p: &Params) -> Result<Built> {
    let lambda = param_value(p, "lambda")?;
    let mut b = builder(p);
    b.param("lambda", &lambda, &["0"]);
    b.vertex("1").arrow("X", 1, 1).arrow("Y", 1, 1).rel("X^2").rel("Y^2").rel("X Y - lambda*Y X");
    let presentation = b.build()?;
    let is_one = presentation.field.from_rational(&lambda)? == presentation.field.one();
    let datum = if is_one { Some(data::kronecker(&presentation.quiver)?) } else { None };
    let mut metadata = Metadata::new("local self-injective algebra of Euclidean type").dim(4).cartan(m(&[&[4]]));
    metadata = if is_one {
        metadata.verdict(CellularVerified)
    } else {
        metadata.verdict(Undecided).note("not cellular for lambda != 1; needs an argument on anti-involutions")
    };
    Ok(Built { presentation, metadata, datum })
}

pub fn looped_pair(p: &Params) -> Result<Built> {
    let mut b = builder(p);
    b.vertices([1, 2]).arrow("g", 1, 1).arrow("a1", 1, 2).arrow("b1", 2, 1).rel("b1 a1").rel("g^2 - a1 b1");
    let metadata = Metadata::new("two-vertex truncation of a modified Brauer tree algebra")
        .dim(10)
        .cartan(m(&[&[4, 2], &[2, 2]]))
        .candidates(vec![m(&[&[1, 1], &[1, 1], &[1, 0], &[1, 0]])])
        .verdict(Undecided)
        .note("not cellular; the remaining argument uses the cell ideals of the unique candidate");
    Ok(Built { presentation: b.build()?, metadata, datum: None })
}

pub fn modified_brauer_line(p: &Params) -> Result<Built> {
    let n = p.int("n");
    need(n >= 2, "ModifiedBrauerLine needs n >= 2")?;
    let mut b = builder(p);
    b.vertices(1..=n).arrow("g", 1, 1);
    for i in 1..n {
        b.arrow(format!("a{i}"), i, i + 1).arrow(format!("b{i}"), i + 1, i);
    }
    for i in 1..=n - 2 {
        b.rel(format!("a{i} a{}", i + 1)).rel(format!("b{} b{i}", i + 1));
    }
    b.rel("b1 a1")
        .rel(format!("a{0} b{0} a{0}", n - 1))
        .rel(format!("b{0} a{0} b{0}", n - 1))
        .rel("g^2 - a1 b1");
    if n >= 3 {
        b.rel("a2 b2 - b1 g a1");
    }
    for i in 2..=n - 2 {
        b.rel(format!("b{i} a{i} - a{0} b{0}", i + 1));
    }
    let metadata = Metadata::new("modified Brauer tree algebra, straight line")
        .truncated(&["1", "2"], m(&[&[4, 2], &[2, 2]]))
        .candidates(vec![m(&[&[1, 1], &[1, 1], &[1, 0], &[1, 0]])])
        .verdict(Undecided)
        .note("not cellular; the truncation to vertices 1, 2 is LoopedPair");
    Ok(Built { presentation: b.build()?, metadata, datum: None })
}

/// Double quiver of an acyclic quiver given by `(name, source, target)` arrows.
fn double_quiver_of(p: &Params, vertices: &[String], arrows: &[(String, String, String)]) -> Result<crate::presentation::Presentation> {
    let mut b = builder(p);
    b.vertices(vertices.iter());
    for (a, s, t) in arrows {
        b.arrow(a.clone(), s, t).arrow(format!("{a}s"), t, s);
    }
    let star = |a: &String| format!("{a}s");
    for (a, sa, ta) in arrows {
        for (c, sc, tc) in arrows {
            if ta == sc {
                b.rel(format!("{a} {c}"));
                b.rel(format!("{} {}", star(c), star(a)));
            }
            if a != c {
                if ta == tc {
                    b.rel(format!("{a} {}", star(c)));
                }
                if sc == sa {
                    b.rel(format!("{} {a}", star(c)));
                }
                if sa == tc {
                    b.rel(format!("{a} {} - {} {c}", star(a), star(c)));
                }
                if sa == sc && a < c {
                    b.rel(format!("{a} {} - {c} {}", star(a), star(c)));
                }
                if ta == tc && a < c {
                    b.rel(format!("{} {a} - {} {c}", star(a), star(c)));
                }
            }
        }
    }
    b.build()
}

fn double_quiver_meta(vertices: &[String], arrows: &[(String, String, String)]) -> Metadata {
    let n = vertices.len();
    let mut c = vec![vec![0; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (_, s, t) in arrows {
        let i = vertices.iter().position(|v| v == s).unwrap();
        let j = vertices.iter().position(|v| v == t).unwrap();
        c[i][j] += 1;
        c[j][i] += 1;
    }
    Metadata::new("trivial extension of KQ/R^2, Q acyclic").dim(2 * (n + arrows.len())).cartan(c)
}

fn acyclic(vertices: &[String], arrows: &[(String, String, String)]) -> bool {
    let mut left: Vec<&String> = vertices.iter().collect();
    let mut edges: Vec<(&String, &String)> = arrows.iter().map(|(_, s, t)| (s, t)).collect();
    while let Some(k) = left.iter().position(|v| !edges.iter().any(|(_, t)| t == v)) {
        let v = left.remove(k);
        edges.retain(|(s, _)| *s != v);
    }
    left.is_empty()
}

pub fn double_quiver(p: &Params) -> Result<Built> {
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows = Vec::new();
    for (k, e) in p.text("edges").split(',').map(str::trim).filter(|s| !s.is_empty()).enumerate() {
        let (s, t) = e.split_once('>').ok_or_else(|| Error::Invalid(format!("bad edge {e:?}, expected s>t")))?;
        for v in [s.trim(), t.trim()] {
            if !vertices.iter().any(|x| x == v) {
                vertices.push(v.to_string());
            }
        }
        arrows.push((format!("x{}", k + 1), s.trim().to_string(), t.trim().to_string()));
    }
    need(!arrows.is_empty(), "DoubleQuiver needs at least one arrow")?;
    need(acyclic(&vertices, &arrows), "DoubleQuiver needs an acyclic quiver")?;
    let presentation = double_quiver_of(p, &vertices, &arrows)?;
    let metadata = double_quiver_meta(&vertices, &arrows);
    Ok(Built { presentation, metadata, datum: None })
}

pub fn double_quiver_cycle(p: &Params) -> Result<Built> {
    let l = p.int("l");
    need(l >= 3, "DoubleQuiverCycle needs l >= 3")?;
    let vertices: Vec<String> = (1..=l).map(|i| i.to_string()).collect();
    let mut arrows: Vec<(String, String, String)> =
        (1..l).map(|i| (format!("x{i}"), i.to_string(), (i + 1).to_string())).collect();
    arrows.push((format!("x{l}"), "1".into(), l.to_string()));
    let presentation = double_quiver_of(p, &vertices, &arrows)?;
    let mut metadata = double_quiver_meta(&vertices, &arrows);
    if l % 2 == 1 {
        metadata = metadata.verdict(NotCellular).note("every decomposition candidate forces a cyclic order");
    }
    Ok(Built { presentation, metadata, datum: None })
}

pub fn double_quiver_branch(p: &Params) -> Result<Built> {
    let vertices: Vec<String> = ["1", "2", "3", "4"].iter().map(|s| s.to_string()).collect();
    let arrows: Vec<(String, String, String)> = [("x1", "1", "2"), ("x2", "2", "3"), ("x3", "2", "4")]
        .iter()
        .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string()))
        .collect();
    let presentation = double_quiver_of(p, &vertices, &arrows)?;
    let metadata = double_quiver_meta(&vertices, &arrows)
        .candidates(Vec::new())
        .verdict(NotCellular)
        .note("the Cartan matrix has no decomposition factorization");
    Ok(Built { presentation, metadata, datum: None })
}

pub fn brauer_line(p: &Params) -> Result<Built> {
    let n = p.int("n");
    need(n >= 1, "BrauerLine needs n >= 1")?;
    let mut mults = BTreeMap::new();
    for kv in p.text("mults").split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| Error::Invalid(format!("bad multiplicity entry {kv:?}")));
        let (k, v) = kv.split_once(':').ok_or_else(|| Error::Invalid(format!("bad multiplicity entry {kv:?}")))?;
        mults.insert(parse(k)?, parse(v)?);
    }
    let g = BrauerGraph::line(n as usize, &mults)?;
    let exceptional = g.vertices.iter().filter(|v| v.multiplicity > 1).count();
    let mut metadata = Metadata::new("Brauer graph algebra of a straight line")
        .dim(g.dimension_formula())
        .cartan(g.cartan_formula());
    if exceptional <= 1 {
        metadata = metadata.note("cellular: straight line with at most one exceptional vertex");
    } else if exceptional == 2 && g.vertices.iter().all(|v| v.multiplicity <= 2) {
        metadata = metadata.note("two exceptional vertices of multiplicity 2: a cellular class of the classification");
    }
    Ok(Built { presentation: g.presentation(p.field)?, metadata, datum: None })
}

pub fn odd_cycle(p: &Params) -> Result<Built> {
    let n = p.int("n");
    need(n >= 1, "OddCycle needs n >= 1")?;
    let top = 2 * n + 1;
    let mut b = builder(p);
    b.vertices(1..=top);
    for k in 1..=n {
        b.arrow(format!("a{}", 2 * k - 1), 2 * k - 1, 2 * k).arrow(format!("a{}", 2 * k), 2 * k, 2 * k - 1);
        b.arrow(format!("b{}", 2 * k), 2 * k, 2 * k + 1).arrow(format!("b{}", 2 * k + 1), 2 * k + 1, 2 * k);
    }
    b.arrow("g1", 1, top).arrow(format!("g{top}"), top, 1);
    for k in 1..=n {
        b.rel(format!("a{} b{}", 2 * k - 1, 2 * k)).rel(format!("b{} a{}", 2 * k + 1, 2 * k));
    }
    for k in 1..n {
        b.rel(format!("a{} a{} - b{} b{}", 2 * k + 1, 2 * k + 2, 2 * k + 1, 2 * k));
        b.rel(format!("b{} a{}", 2 * k, 2 * k + 1)).rel(format!("a{} b{}", 2 * k + 2, 2 * k + 1));
    }
    b.rel(format!("b{} g{top}", 2 * n)).rel(format!("g1 b{top}")).rel(format!("g{top} a1")).rel("a2 g1");
    for k in 1..=n {
        b.rel(format!("a{} a{} - b{} b{}", 2 * k, 2 * k - 1, 2 * k, 2 * k + 1));
    }
    b.rel(format!("a1 a2 - g1 g{top}")).rel(format!("b{top} b{} - g{top} g1", 2 * n));
    let l = top as usize;
    let metadata = Metadata::new("Brauer graph with exactly one cycle, of odd length")
        .dim(4 * l)
        .cartan(circulant(l))
        .verdict(NotCellular)
        .note("every decomposition candidate forces a cyclic order");
    Ok(Built { presentation: b.build()?, metadata, datum: None })
}

/// Both sides are built by the same rule; the left side is the mirror image.
pub fn lambda_prime(p: &Params) -> Result<Built> {
    let (l, mm) = (p.int("l"), p.int("m"));
    need(l >= 0 && mm >= 0, "LambdaPrime needs l, m >= 0")?;
    let name = |s: &str, i: i64| if i < 0 { format!("{s}m{}", -i) } else { format!("{s}{i}") };
    let mut b = builder(p);
    b.vertices(-l..=mm);
    // Right side: a_i: i -> i+1, b_{i+1}: i+1 -> i, loop a_m; centre arrows g0, g1.
    if mm == 0 {
        b.arrow("g0", 0, 0);
    } else {
        b.arrow("g0", 0, 1).arrow("g1", 1, 0);
        for i in 1..mm {
            b.arrow(name("a", i), i, i + 1).arrow(name("b", i + 1), i + 1, i);
        }
        b.arrow(name("a", mm), mm, mm);
    }
    // Left side: a_i: i -> i+1, b_{i+1}: i+1 -> i for -l <= i <= -2, loop b_{-l}; centre d0, dm1.
    if l == 0 {
        b.arrow("d0", 0, 0);
    } else {
        b.arrow("dm1", -1, 0).arrow("d0", 0, -1);
        for i in -l..=-2 {
            b.arrow(name("a", i), i, i + 1).arrow(name("b", i + 1), i + 1, i);
        }
        b.arrow(name("b", -l), -l, -l);
    }
    let c0 = if mm == 0 { "g0" } else { "g0 g1" };
    let d0 = if l == 0 { "d0" } else { "d0 dm1" };
    // Right-side generators.
    if mm >= 1 {
        for i in 1..mm {
            b.rel(format!("{} {}", name("a", i), name("a", i + 1)));
        }
        for i in 3..=mm {
            b.rel(format!("{} {}", name("b", i), name("b", i - 1)));
        }
        let bm = if mm == 1 { "g1".to_string() } else { name("b", mm) };
        b.rel(format!("{} {bm}", name("a", mm)));
        b.rel("g0 a1");
        if mm >= 2 {
            b.rel("b2 g1");
        }
        for i in 2..mm {
            b.rel(format!("{} {} - {} {}", name("a", i), name("b", i + 1), name("b", i), name("a", i - 1)));
        }
        if mm >= 2 {
            b.rel(format!("{} - {} {}", name("a", mm), name("b", mm), name("a", mm - 1)));
            b.rel(format!("a1 b2 - g1 {d0} g0"));
        } else {
            b.rel(format!("a1 - g1 {d0} g0"));
        }
    }
    // Left-side generators (mirror).
    if l >= 1 {
        for i in -l..=-3 {
            b.rel(format!("{} {}", name("a", i), name("a", i + 1)));
        }
        for i in (-l + 1)..=-1 {
            b.rel(format!("{} {}", name("b", i), name("b", i - 1)));
        }
        b.rel("d0 bm1");
        let al = if l == 1 { "dm1".to_string() } else { name("a", -l) };
        b.rel(format!("{} {al}", name("b", -l)));
        if l >= 2 {
            b.rel("am2 dm1");
        }
        for i in (-l + 1)..=-2 {
            b.rel(format!("{} {} - {} {}", name("a", i), name("b", i + 1), name("b", i), name("a", i - 1)));
        }
        if l >= 2 {
            b.rel(format!("{} - {} {}", name("b", -l), name("a", -l), name("b", -l + 1)));
            b.rel(format!("bm1 am2 - dm1 {c0} d0"));
        } else {
            b.rel(format!("bm1 - dm1 {c0} d0"));
        }
    }
    // Centre.
    if mm >= 1 {
        b.rel("g1 g0");
    } else {
        b.rel("g0^2");
    }
    if l >= 1 {
        b.rel("dm1 d0");
    } else {
        b.rel("d0^2");
    }
    b.rel(format!("{c0} {d0} - {d0} {c0}"));
    let presentation = b.build()?;
    let family = "Brauer graph with exactly one cycle, of odd length; here a loop";
    let (metadata, datum) = match (l.min(mm), l.max(mm)) {
        (0, 0) => (
            Metadata::new(family).dim(4).cartan(m(&[&[4]])).verdict(Undecided).note("isomorphic to Kronecker"),
            None,
        ),
        (0, 1) => {
            let d = if mm == 1 { Some(data::lambda_prime_01(&presentation.quiver)?) } else { None };
            let v = if d.is_some() { CellularVerified } else { Undecided };
            (Metadata::new(family).dim(10).verdict(v), d)
        }
        (0, _) => {
            let t: &[&str] = if l == 0 { &["0", "1", "2"] } else { &["0", "-1", "-2"] };
            (
                Metadata::new(family)
                    .truncated(t, m(&[&[4, 2, 0], &[2, 2, 1], &[0, 1, 2]]))
                    .candidates(Vec::new())
                    .verdict(NotCellular),
                None,
            )
        }
        _ => (
            Metadata::new(family)
                .truncated(&["-1", "0", "1"], m(&[&[2, 2, 1], &[2, 4, 2], &[1, 2, 2]]))
                .candidates(vec![m(&[&[1, 1, 1], &[1, 1, 0], &[0, 1, 1], &[0, 1, 0]])])
                .verdict(NotCellular),
            None,
        ),
    };
    Ok(Built { presentation, metadata, datum })
}

pub fn gamma_zero(p: &Params) -> Result<Built> {
    let mm = p.int("m");
    need(mm >= 1, "GammaZero needs m >= 1")?;
    let mut b = builder(p);
    b.vertices(["a", "b"]).vertices(1..=mm);
    b.arrow("da", "a", "b").arrow("db", "b", "a").arrow("gb", "b", 1).arrow("g1", 1, "b");
    let family = "Brauer graph with exactly one loop";
    if mm == 1 {
        b.rel("gb g1 db da gb")
            .rel("g1 db da gb g1")
            .rel("da gb g1 db da")
            .rel("db da gb g1 db")
            .rel("g1 gb")
            .rel("da gb g1 - da db da")
            .rel("gb g1 db - db da db");
        let presentation = b.build()?;
        let datum = Some(data::gamma_zero_1(&presentation.quiver)?);
        let metadata = Metadata::new(family).dim(19).verdict(CellularVerified);
        return Ok(Built { presentation, metadata, datum });
    }
    for i in 1..mm {
        b.arrow(format!("a{i}"), i, i + 1).arrow(format!("b{}", i + 1), i + 1, i);
    }
    b.arrow("aa", "a", "a").arrow(format!("a{mm}"), mm, mm);
    for i in 1..mm {
        b.rel(format!("a{i} a{}", i + 1));
    }
    for i in 3..=mm {
        b.rel(format!("b{i} b{}", i - 1));
    }
    b.rel(format!("a{mm} b{mm}")).rel("b2 g1").rel("gb a1").rel("aa da").rel("db aa");
    for i in 2..mm {
        b.rel(format!("a{i} b{} - b{i} a{}", i + 1, i - 1));
    }
    b.rel(format!("a{mm} - b{mm} a{}", mm - 1))
        .rel("aa - da gb g1 db")
        .rel("a1 b2 - g1 db da gb")
        .rel("g1 gb")
        .rel("da gb g1 - da db da")
        .rel("gb g1 db - db da db");
    let metadata = Metadata::new(family)
        .truncated(&["a", "b", "1", "2"], m(&[&[3, 2, 1, 0], &[2, 4, 2, 0], &[1, 2, 2, 1], &[0, 0, 1, 2]]))
        .candidates(Vec::new())
        .verdict(NotCellular);
    Ok(Built { presentation: b.build()?, metadata, datum: None })
}

pub fn gamma_one(p: &Params) -> Result<Built> {
    let mut b = builder(p);
    b.vertices(["a", "b", "c"])
        .arrow("gb", "b", "a")
        .arrow("ga", "a", "b")
        .arrow("aa", "a", "c")
        .arrow("ac", "c", "a")
        .arrow("bc", "c", "b")
        .arrow("bb", "b", "c");
    b.rel("bb ac")
        .rel("ac ga")
        .rel("ga bb")
        .rel("ga gb aa")
        .rel("ac aa bc")
        .rel("bb bc gb")
        .rel("bb - gb aa")
        .rel("ga - aa bc")
        .rel("ac aa ac - bc gb");
    let metadata = Metadata::new("Brauer graph whose unique cycle has length three")
        .verdict(NotCellular)
        .note("the Gabriel quiver contains an oriented triangle without reverse arrows");
    Ok(Built { presentation: b.build()?, metadata, datum: None })
}

pub fn gamma_two(p: &Params) -> Result<Built> {
    let (l, mm) = (p.int("l"), p.int("m"));
    need(mm >= 0, "GammaTwo needs m >= 0")?;
    need((-1..=mm).contains(&l), "GammaTwo needs -1 <= l <= m")?;
    let a = |i: i64| if i < 0 { format!("am{}", -i) } else { format!("a{i}") };
    let bb = |i: i64| if i < 0 { format!("bm{}", -i) } else { format!("b{i}") };
    let mut b = builder(p);
    b.vertices(["-1", "0", "w"]).vertices(1..=mm);
    for i in -1..mm {
        b.arrow(a(i), i, i + 1).arrow(bb(i + 1), i + 1, i);
    }
    b.arrow("bm1", -1, -1).arrow(a(mm), mm, mm);
    b.arrow("g1", 0, "w").arrow("g2", "w", 0).arrow("g3", "w", "w");
    let family = "Brauer tree with a unique exceptional vertex of multiplicity 2 and an extra vertex w";
    let footnote = "only v2 is exceptional; the other named vertex v1 has multiplicity 1";
    if mm == 0 {
        let presentation = if l == 0 {
            b.rel("am1 a0")
                .rel("b0 bm1")
                .rel("bm1 am1")
                .rel("a0 b0")
                .rel("a0^2 - b0 am1")
                .rel("bm1 - am1 b0")
                .rel("g2 a0")
                .rel("a0 g1")
                .rel("g1 g3")
                .rel("g3 g2")
                .rel("g2 b0")
                .rel("am1 g1")
                .rel("b0 am1 - g1 g2")
                .rel("g3 - g2 b0 am1 g1");
            b.build()?
        } else {
            b.rel("am1 a0")
                .rel("b0 bm1")
                .rel("bm1 am1")
                .rel("a0 b0")
                .rel("a0 - (b0 am1)^2")
                .rel("bm1 - (am1 b0)^2")
                .rel("g2 a0")
                .rel("a0 g1")
                .rel("g1 g3")
                .rel("g3 g2")
                .rel("g2 g1 g2 b0")
                .rel("am1 b0 am1 g1")
                .rel("b0 am1 - g1 g2")
                .rel("g3 - (g2 b0 am1 g1)^2");
            b.build()?
        };
        let (dim, datum) = if l == 0 {
            (11, data::gamma_two_00(&presentation.quiver)?)
        } else {
            (19, data::gamma_two_m10(&presentation.quiver)?)
        };
        let metadata = Metadata::new(family).dim(dim).verdict(CellularVerified).note(footnote);
        return Ok(Built { presentation, metadata, datum: Some(datum) });
    }
    let chains = |b: &mut crate::presentation::Builder| {
        for i in -1..mm {
            b.rel(format!("{} {}", a(i), a(i + 1)));
        }
        for i in 0..=mm {
            b.rel(format!("{} {}", bb(i), bb(i - 1)));
        }
        b.rel("bm1 am1").rel(format!("{} {}", a(mm), bb(mm)));
    };
    let gammas = |b: &mut crate::presentation::Builder, minus_one: bool| {
        if minus_one {
            b.rel("g2 a0").rel("b1 g1").rel("g1 g3").rel("g3 g2");
            b.rel("g2 g1 g2 b0").rel("am1 b0 am1 g1");
            b.rel("b0 am1 - g1 g2").rel("(g2 b0 am1 g1)^2 - g3");
        } else {
            b.rel("g2 a0").rel("b1 g1").rel("g1 g3").rel("g3 g2").rel("g2 b0").rel("am1 g1");
            b.rel("b0 am1 - g1 g2").rel("g2 b0 am1 g1 - g3");
        }
    };
    let commute = |i: i64| format!("{} {} - {} {}", a(i), bb(i + 1), bb(i), a(i - 1));
    chains(&mut b);
    let truncated: Vec<Vec<usize>>;
    match l {
        -1 => {
            for i in 1..mm {
                b.rel(commute(i));
            }
            b.rel("bm1 - (am1 b0)^2").rel(format!("{} - {} {}", a(mm), bb(mm), a(mm - 1)));
            b.rel("a0 b1 - (b0 am1)^2");
            gammas(&mut b, true);
            truncated = m(&[&[3, 2, 1, 0], &[2, 3, 2, 1], &[1, 2, 3, 0], &[0, 1, 0, 2]]);
        }
        0 => {
            for i in 2..mm {
                b.rel(commute(i));
            }
            b.rel("bm1 - am1 b0");
            if mm >= 2 {
                b.rel(format!("{} - {} {}", a(mm), bb(mm), a(mm - 1)));
            }
            b.rel("(a0 b1)^2 - b0 am1");
            if mm == 1 {
                b.rel("a1 - (b1 a0)^2");
            } else {
                b.rel("a1 b2 - (b1 a0)^2");
            }
            gammas(&mut b, false);
            truncated = m(&[&[2, 1, 0, 0], &[1, 3, 1, 2], &[0, 1, 2, 0], &[0, 2, 0, 3]]);
        }
        _ if l == mm => {
            for i in 0..mm {
                b.rel(commute(i));
            }
            b.rel("bm1 - am1 b0").rel(format!("{}^2 - {} {}", a(mm), bb(mm), a(mm - 1)));
            gammas(&mut b, false);
            truncated = corner(l);
        }
        _ => {
            for i in (0..mm).filter(|&i| i != l && i != l + 1) {
                b.rel(commute(i));
            }
            b.rel("bm1 - am1 b0");
            b.rel(format!("({} {})^2 - {} {}", a(l), bb(l + 1), bb(l), a(l - 1)));
            if l + 1 == mm {
                b.rel(format!("{} - ({} {})^2", a(mm), bb(mm), a(mm - 1)));
            } else {
                b.rel(format!("{} - {} {}", a(mm), bb(mm), a(mm - 1)));
                b.rel(format!("{} {} - ({} {})^2", a(l + 1), bb(l + 2), bb(l + 1), a(l)));
            }
            gammas(&mut b, false);
            truncated = corner(l);
        }
    }
    let metadata = Metadata::new(family)
        .truncated(&["-1", "0", "w", "1"], truncated)
        .verdict(NotCellular)
        .note(footnote);
    Ok(Built { presentation: b.build()?, metadata, datum: None })
}

fn corner(l: i64) -> Vec<Vec<usize>> {
    let c = if l == 1 { 3 } else { 2 };
    m(&[&[2, 1, 0, 0], &[1, 2, 1, 1], &[0, 1, 2, 0], &[0, 1, 0, c]])
}

pub fn omega(p: &Params) -> Result<Built> {
    let n = p.int("n");
    need(n >= 1, "Omega needs n >= 1")?;
    let family = "nonstandard self-injective algebra of domestic infinite type";
    let mut b = builder(p);
    if n == 1 {
        b.vertex("1").arrow("X", 1, 1).arrow("Y", 1, 1).rel("X^2 - X Y").rel("X Y + Y X").rel("Y^2");
        let metadata = Metadata::new(family)
            .dim(4)
            .cartan(m(&[&[4]]))
            .candidates(vec![m(&[&[1], &[1], &[1], &[1]])])
            .verdict(Undecided)
            .note("not cellular: an anti-involution fixing every element contradicts XY = -YX");
        return Ok(Built { presentation: b.build()?, metadata, datum: None });
    }
    b.vertices(1..=n).arrow("g", 1, 1);
    for i in 1..n {
        b.arrow(format!("a{i}"), i, i + 1).arrow(format!("b{i}"), i + 1, i);
    }
    b.arrow(format!("b{n}"), n, n);
    for i in 1..=n - 2 {
        b.rel(format!("a{i} a{}", i + 1));
    }
    for i in 1..n {
        b.rel(format!("b{} b{i}", i + 1));
    }
    b.rel("b1 a1").rel(format!("a{} b{n}", n - 1));
    for i in 3..n {
        b.rel(format!("a{i} b{i} - b{0} a{0}", i - 1));
    }
    if n >= 3 {
        b.rel("a2 b2 - b1 g a1");
    }
    b.rel(format!("b{n} - b{0} a{0}", n - 1)).rel("g^2 - g a1 b1").rel("g a1 b1 + a1 b1 g");
    let metadata = Metadata::new(family)
        .truncated(&["1", "2"], m(&[&[4, 2], &[2, 2]]))
        .candidates(vec![m(&[&[1, 1], &[1, 1], &[1, 0], &[1, 0]])])
        .verdict(Undecided)
        .note("not cellular; the remaining argument uses the anti-involution on the cell ideals");
    Ok(Built { presentation: b.build()?, metadata, datum: None })
}
