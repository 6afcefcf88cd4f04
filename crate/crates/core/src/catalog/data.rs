//! Bundled cell data. Each cell is written row by row; the order is the chain
//! `l1 < l2 < ...`.

use crate::cellular::CellDatumFile;
use crate::error::Result;
use crate::quiver::Quiver;

fn chain(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("l{i}")).collect()
}

fn datum(q: &Quiver, cells: &[&[&[&str]]], arrow_map: &[(&str, &str)]) -> Result<CellDatumFile> {
    let names = chain(cells.len());
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let cells: Vec<Vec<Vec<&str>>> = cells.iter().map(|c| c.iter().map(|r| r.to_vec()).collect()).collect();
    CellDatumFile::from_compact(q, &names, &cells, &[], arrow_map)
}

pub fn kronecker(q: &Quiver) -> Result<CellDatumFile> {
    datum(q, &[&[&["e[1]"]], &[&["X"]], &[&["Y"]], &[&["X Y"]]], &[])
}

pub fn lambda_prime_01(q: &Quiver) -> Result<CellDatumFile> {
    datum(
        q,
        &[
            &[&["e[0]"]],
            &[&["e[1]", "g1"], &["g0", "g0 g1"]],
            &[&["d0", "d0 g0"], &["g1 d0", "g1 d0 g0"]],
            &[&["g0 g1 d0"]],
        ],
        &[("g0", "g1"), ("g1", "g0")],
    )
}

pub fn gamma_zero_1(q: &Quiver) -> Result<CellDatumFile> {
    datum(
        q,
        &[
            &[&["e[b]"]],
            &[&["e[1]", "g1"], &["gb", "gb g1"]],
            &[
                &["e[a]", "da", "da gb"],
                &["db", "db da", "db da gb"],
                &["g1 db", "g1 db da", "g1 db da gb"],
            ],
            &[&["da db", "da db da"], &["db da db", "db da db da"]],
            &[&["da db da db"]],
        ],
        &[("da", "db"), ("db", "da"), ("gb", "g1"), ("g1", "gb")],
    )
}

const GAMMA_TWO_INVOLUTION: &[(&str, &str)] = &[("am1", "b0"), ("b0", "am1"), ("g1", "g2"), ("g2", "g1")];

pub fn gamma_two_00(q: &Quiver) -> Result<CellDatumFile> {
    datum(
        q,
        &[
            &[&["e[w]"]],
            &[&["e[0]", "g1"], &["g2", "g2 g1"]],
            &[&["a0"]],
            &[&["e[-1]", "am1"], &["b0", "b0 am1"]],
            &[&["am1 b0"]],
        ],
        GAMMA_TWO_INVOLUTION,
    )
}

pub fn gamma_two_m10(q: &Quiver) -> Result<CellDatumFile> {
    datum(
        q,
        &[
            &[&["e[w]"]],
            &[&["e[0]", "g1"], &["g2", "g2 g1"]],
            &[
                &["e[-1]", "am1", "am1 g1"],
                &["b0", "b0 am1", "b0 am1 g1"],
                &["g2 b0", "g2 b0 am1", "(g2 g1)^2"],
            ],
            &[&["am1 b0", "am1 b0 am1"], &["b0 am1 b0", "(b0 am1)^2"]],
            &[&["(am1 b0)^2"]],
        ],
        GAMMA_TWO_INVOLUTION,
    )
}

pub fn a1(q: &Quiver) -> Result<CellDatumFile> {
    datum(
        q,
        &[
            &[&["e[2]"]],
            &[&["e[1]", "a"], &["g", "g a"]],
            &[&["e[3]", "b"], &["s", "s b"]],
            &[&["a g", "a s", "a g a"], &["b g", "lambda*b s", "b g a"], &["g a g", "g a s", "g a g a"]],
            &[&["a g a g"]],
            &[&["b g a s"]],
        ],
        &[("a", "g"), ("g", "a"), ("b", "s"), ("s", "b")],
    )
}

pub fn a2(q: &Quiver) -> Result<CellDatumFile> {
    datum(
        q,
        &[
            &[&["e[1]"]],
            &[&["e[2]"]],
            &[&["a", "s"], &["g", "b"]],
            &[&["a^2", "a s"], &["g a", "b^2"]],
            &[&["a^3"]],
            &[&["b^3"]],
        ],
        &[("s", "g"), ("g", "s")],
    )
}

const SWAP_PAIRS: &[(&str, &str)] = &[("a", "b"), ("b", "a"), ("g", "d"), ("d", "g"), ("ep", "ze"), ("ze", "ep")];

pub fn a4(q: &Quiver) -> Result<CellDatumFile> {
    datum(
        q,
        &[
            &[&["e[3]"]],
            &[&["e[2]", "d"], &["g", "g d"]],
            &[&["e[1]", "a", "a d"], &["b", "b a", "b a d"], &["g b", "g b a", "g b a d"]],
            &[&["e[4]", "ze", "ze b"], &["ep", "ep ze", "ep ze b"], &["a ep", "a ep ze", "a ep ze b"]],
            &[&["ze ep", "ze ep ze"], &["ep ze ep", "ep ze ep ze"]],
            &[&["ze ep ze ep"]],
        ],
        SWAP_PAIRS,
    )
}

pub fn a7(q: &Quiver) -> Result<CellDatumFile> {
    datum(
        q,
        &[
            &[&["e[4]"]],
            &[&["e[3]", "ep"], &["ze", "ze ep"]],
            &[&["e[2]", "d", "d ep"], &["g", "g d", "g d ep"], &["ze g", "ze g d", "ze g d ep"]],
            &[&["e[1]", "a", "a d"], &["b", "b a", "b a d"], &["g b", "g b a", "g b a d"]],
            &[&["a b", "a b a"], &["b a b", "b a b a"]],
            &[&["a b a b"]],
        ],
        SWAP_PAIRS,
    )
}

pub fn a11(q: &Quiver) -> Result<CellDatumFile> {
    datum(
        q,
        &[
            &[&["e[2]"]],
            &[&["e[1]", "b"], &["a", "a b"]],
            &[&["e[3]", "g", "g a"], &["h", "h g", "h g a"], &["b h", "b h g", "b h g a"]],
            &[&["g h", "g h g"], &["h g h", "h g h g"]],
            &[&["e[4]", "d"], &["ze", "ze d"]],
            &[&["d ze"]],
        ],
        &[("a", "b"), ("b", "a"), ("g", "h"), ("h", "g"), ("d", "ze"), ("ze", "d")],
    )
}
