//! The finitely many algebras A1, ..., A16, Lambda1 and Lambda2.

use super::{builder, data, need, param_value, Built, Metadata, Params};
use crate::error::Result;
use crate::obstruction::VerdictKind::{CellularVerified, NotCellular, Undecided};
use crate::presentation::Builder;
use crate::scalar::Field;

type Ctor = fn(&Params) -> Result<Built>;

pub const FIXED: &[(&str, Ctor)] = &[
    ("A3", a3),
    ("A4", a4),
    ("A5", a5),
    ("A6", a6),
    ("A7", a7),
    ("A8", a8),
    ("A9", a9),
    ("A10", a10),
    ("A11", a11),
    ("A12", a12),
    ("A13", a13),
    ("A14", a14),
    ("A15", a15),
    ("A16", a16),
];

pub const CHAR3: &[(&str, Ctor)] = &[("Lambda1", lambda1), ("Lambda2", lambda2)];

const STANDARD: &str = "standard nondomestic weakly symmetric algebra of polynomial growth";
const NONSTANDARD: &str = "nonstandard nondomestic weakly symmetric algebra of polynomial growth";

fn m(rows: &[&[usize]]) -> Vec<Vec<usize>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

fn quiver(b: &mut Builder, vertices: usize, arrows: &[(&str, usize, usize)]) {
    b.vertices(1..=vertices);
    for (a, s, t) in arrows {
        b.arrow(*a, s, t);
    }
}

fn rels(b: &mut Builder, rs: &[&str]) {
    for r in rs {
        b.rel(*r);
    }
}

fn plain(p: &Params, vertices: usize, arrows: &[(&str, usize, usize)], rs: &[&str]) -> Result<crate::presentation::Presentation> {
    let mut b = builder(p);
    quiver(&mut b, vertices, arrows);
    rels(&mut b, rs);
    b.build()
}

fn ext_asymmetric() -> Metadata {
    Metadata::new(STANDARD).verdict(NotCellular).note("excluded by an asymmetric Gabriel quiver")
}

pub fn a1(p: &Params) -> Result<Built> {
    let lambda = param_value(p, "lambda")?;
    let mut b = builder(p);
    b.param("lambda", &lambda, &["0", "1"]);
    quiver(&mut b, 3, &[("a", 1, 2), ("g", 2, 1), ("s", 2, 3), ("b", 3, 2)]);
    rels(&mut b, &["a g a - a s b", "b g a - lambda*b s b", "g a g - s b g", "g a s - lambda*s b s"]);
    let presentation = b.build()?;
    let datum = Some(data::a1(&presentation.quiver)?);
    Ok(Built { presentation, metadata: Metadata::new(STANDARD).dim(20).verdict(CellularVerified), datum })
}

pub fn a2(p: &Params) -> Result<Built> {
    let lambda = param_value(p, "lambda")?;
    let mut b = builder(p);
    b.param("lambda", &lambda, &["0", "1"]);
    quiver(&mut b, 2, &[("a", 1, 1), ("b", 2, 2), ("s", 1, 2), ("g", 2, 1)]);
    rels(&mut b, &["a^2 - s g", "lambda*b^2 - g s", "g a - b g", "s b - a s"]);
    let presentation = b.build()?;
    let datum = Some(data::a2(&presentation.quiver)?);
    Ok(Built { presentation, metadata: Metadata::new(STANDARD).dim(12).verdict(CellularVerified), datum })
}

const FOUR_ARMS: &[(&str, usize, usize)] = &[("a", 1, 2), ("b", 2, 1), ("d", 2, 3), ("g", 3, 2), ("ep", 2, 4), ("ze", 4, 2)];

pub fn a3(p: &Params) -> Result<Built> {
    let presentation = plain(p, 4, FOUR_ARMS, &["b a + d g + ep ze", "a b", "g d", "ze ep"])?;
    let metadata = Metadata::new(STANDARD)
        .cartan(m(&[&[2, 2, 1, 1], &[2, 4, 2, 2], &[1, 2, 2, 1], &[1, 2, 1, 2]]))
        .candidates(vec![
            m(&[&[1, 1, 1, 0], &[1, 1, 0, 1], &[0, 1, 1, 1], &[0, 1, 0, 0]]),
            m(&[&[1, 1, 1, 1], &[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 1, 0, 1]]),
        ])
        .verdict(NotCellular)
        .note("both decomposition candidates are refuted by the order conditions");
    Ok(Built { presentation, metadata, datum: None })
}

pub fn a4(p: &Params) -> Result<Built> {
    let presentation = plain(p, 4, FOUR_ARMS, &["b a + d g + ep ze", "a b", "g ep", "ze d"])?;
    let datum = Some(data::a4(&presentation.quiver)?);
    Ok(Built { presentation, metadata: Metadata::new(STANDARD).dim(28).verdict(CellularVerified), datum })
}

const LOOP_PAIR: &[(&str, usize, usize)] = &[("a", 1, 1), ("g", 1, 2), ("b", 2, 1)];

pub fn a5(p: &Params) -> Result<Built> {
    let presentation = plain(p, 2, LOOP_PAIR, &["a^2 - g b", "b a g"])?;
    let metadata = Metadata::new(STANDARD)
        .cartan(m(&[&[5, 3], &[3, 3]]))
        .candidates(a5_candidates())
        .verdict(Undecided)
        .note("not cellular; the remaining argument uses submodules of the projectives");
    Ok(Built { presentation, metadata, datum: None })
}

fn a5_candidates() -> Vec<Vec<Vec<usize>>> {
    vec![m(&[&[2, 1], &[1, 1], &[0, 1]]), m(&[&[1, 1], &[1, 1], &[1, 1], &[1, 0], &[1, 0]])]
}

fn a6_candidates() -> Vec<Vec<Vec<usize>>> {
    vec![m(&[&[2, 1], &[1, 0], &[0, 1]]), m(&[&[1, 1], &[1, 1], &[1, 0], &[1, 0], &[1, 0]])]
}

pub fn a6(p: &Params) -> Result<Built> {
    let presentation = plain(p, 2, LOOP_PAIR, &["a^3 - g b", "b g", "b a^2", "a^2 g"])?;
    let metadata = Metadata::new(STANDARD)
        .cartan(m(&[&[5, 2], &[2, 2]]))
        .candidates(a6_candidates())
        .verdict(Undecided)
        .note("not cellular; the remaining argument uses submodules of the projectives");
    Ok(Built { presentation, metadata, datum: None })
}

pub fn a7(p: &Params) -> Result<Built> {
    let presentation = plain(
        p,
        4,
        &[("a", 1, 2), ("b", 2, 1), ("d", 2, 3), ("g", 3, 2), ("ep", 3, 4), ("ze", 4, 3)],
        &["b a - d g", "g d - ep ze", "a d ep", "ze g b"],
    )?;
    let datum = Some(data::a7(&presentation.quiver)?);
    Ok(Built { presentation, metadata: Metadata::new(STANDARD).dim(28).verdict(CellularVerified), datum })
}

pub fn a8(p: &Params) -> Result<Built> {
    let presentation = plain(
        p,
        4,
        &[("s", 1, 2), ("ze", 2, 3), ("g", 3, 4), ("d", 4, 1), ("a", 1, 3), ("b", 3, 1)],
        &["a b a - s ze", "b a b - g d", "ze b a", "d a b", "b a g", "a b s", "ze g", "d s"],
    )?;
    Ok(Built { presentation, metadata: ext_asymmetric(), datum: None })
}

pub fn a9(p: &Params) -> Result<Built> {
    let presentation = plain(
        p,
        4,
        &[("a", 1, 2), ("s", 2, 3), ("b", 3, 2), ("g", 3, 4), ("ep", 4, 3), ("d", 4, 1)],
        &["d a - ep b", "g ep - b s", "a s b", "ep g d", "s g ep g"],
    )?;
    Ok(Built { presentation, metadata: ext_asymmetric(), datum: None })
}

pub fn a10(p: &Params) -> Result<Built> {
    let presentation = plain(
        p,
        4,
        &[("b", 1, 2), ("a", 2, 1), ("d", 2, 3), ("g", 3, 4), ("ep", 4, 2)],
        &["ep a b - ep d g ep", "a b d - d g ep d", "b a", "(g ep d)^2 g"],
    )?;
    Ok(Built { presentation, metadata: ext_asymmetric(), datum: None })
}

pub fn a11(p: &Params) -> Result<Built> {
    let presentation = plain(
        p,
        4,
        &[("b", 1, 2), ("a", 2, 1), ("h", 2, 3), ("g", 3, 2), ("ze", 3, 4), ("d", 4, 3)],
        &["g a b - g h g", "a b h - h g h", "b a", "d g", "h ze", "(g h)^2 - ze d"],
    )?;
    let datum = Some(data::a11(&presentation.quiver)?);
    Ok(Built { presentation, metadata: Metadata::new(STANDARD).dim(23).verdict(CellularVerified), datum })
}

pub fn a12(p: &Params) -> Result<Built> {
    let presentation =
        plain(p, 3, &[("a", 1, 2), ("g", 2, 3), ("b", 3, 1), ("d", 1, 3)], &["d b d - a g", "g b a", "b (d b)^3"])?;
    Ok(Built { presentation, metadata: ext_asymmetric(), datum: None })
}

pub fn a13(p: &Params) -> Result<Built> {
    let presentation = plain(
        p,
        3,
        &[("a", 2, 2), ("b", 1, 2), ("g", 2, 1), ("d", 2, 3), ("s", 3, 2)],
        &["a^2 - g b", "b d", "b g", "s g", "a d", "s a", "a^3 - d s"],
    )?;
    let metadata = Metadata::new(STANDARD)
        .dim(14)
        .cartan(m(&[&[2, 2, 0], &[2, 4, 1], &[0, 1, 2]]))
        .truncated(&["2", "1"], m(&[&[4, 2], &[2, 2]]))
        .candidates(vec![m(&[&[1, 1], &[1, 1], &[1, 0], &[1, 0]])])
        .verdict(Undecided)
        .note("uses the corrected generator b g")
        .note("not cellular: the truncation to vertices 1, 2 is isomorphic to LoopedPair");
    Ok(Built { presentation, metadata, datum: None })
}

pub fn a14(p: &Params) -> Result<Built> {
    let presentation = plain(
        p,
        3,
        &[("a", 1, 2), ("b", 2, 1), ("d", 2, 3), ("g", 3, 2)],
        &["b a - (d g)^2", "a d g d", "g d g b", "a b"],
    )?;
    let metadata = Metadata::new(STANDARD)
        .dim(22)
        .cartan(m(&[&[2, 2, 1], &[2, 4, 3], &[1, 3, 4]]))
        .verdict(NotCellular)
        .note("the truncation to vertices 1, 2 is isomorphic to LoopedPair")
        .note("the order conditions already refute the only candidate for the full Cartan matrix");
    Ok(Built { presentation, metadata, datum: None })
}

pub fn a15(p: &Params) -> Result<Built> {
    let presentation = plain(
        p,
        3,
        &[("a", 1, 1), ("s", 1, 2), ("g", 2, 3), ("b", 3, 1), ("d", 1, 3)],
        &["g b a", "a^2 - d b", "b d", "a s", "a d - s g"],
    )?;
    Ok(Built { presentation, metadata: ext_asymmetric(), datum: None })
}

pub fn a16(p: &Params) -> Result<Built> {
    let presentation = plain(
        p,
        3,
        &[("a", 1, 1), ("s", 2, 1), ("g", 3, 2), ("b", 1, 3), ("d", 3, 1)],
        &["a b g", "a^2 - b d", "d b", "s a", "d a - g s"],
    )?;
    Ok(Built { presentation, metadata: ext_asymmetric(), datum: None })
}

fn char3(p: &Params) -> Result<()> {
    need(p.field == Field::Prime(3), "Lambda1 and Lambda2 are defined over a field of characteristic 3")
}

pub fn lambda1(p: &Params) -> Result<Built> {
    char3(p)?;
    let presentation = plain(p, 2, LOOP_PAIR, &["a^2 - g b", "b a g - b a^2 g", "b a g b", "g b a g"])?;
    let metadata = Metadata::new(NONSTANDARD)
        .cartan(m(&[&[5, 3], &[3, 3]]))
        .candidates(a5_candidates())
        .verdict(Undecided)
        .note("not cellular; the remaining argument uses submodules of the projectives");
    Ok(Built { presentation, metadata, datum: None })
}

pub fn lambda2(p: &Params) -> Result<Built> {
    char3(p)?;
    let presentation =
        plain(p, 2, LOOP_PAIR, &["a^2 g", "b a^2", "g b g", "b g b", "b g - b a g", "a^3 - g b"])?;
    let metadata = Metadata::new(NONSTANDARD)
        .cartan(m(&[&[5, 2], &[2, 2]]))
        .candidates(a6_candidates())
        .verdict(Undecided)
        .note("not cellular; the remaining argument uses submodules of the projectives");
    Ok(Built { presentation, metadata, datum: None })
}
