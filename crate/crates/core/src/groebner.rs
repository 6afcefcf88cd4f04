//! Noncommutative Gröbner bases for two-sided ideals of a path algebra,
//! graded lexicographic order on arrow words.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::quiver::{Element, Path, Quiver};
use crate::scalar::{Field, Scalar};

/// Arrow word with the graded lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<usize>);

impl Ord for Word {
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.len().cmp(&o.0.len()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

type Poly = BTreeMap<Word, Scalar>;

fn poly_add_term(p: &mut Poly, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match p.get_mut(&w) {
        Some(x) => {
            *x = x.add(&c);
            if x.is_zero() {
                p.remove(&w);
            }
        }
        None => {
            p.insert(w, c);
        }
    }
}

/// A rewriting rule `tip -> tail`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub tip: Vec<usize>,
    pub tail: Vec<(Vec<usize>, Scalar)>,
}

#[derive(Clone, Debug, Default)]
struct TipIndex {
    by_word: HashMap<Vec<usize>, usize>,
    lens: BTreeMap<usize, usize>,
}

impl TipIndex {
    fn insert(&mut self, w: Vec<usize>, id: usize) {
        *self.lens.entry(w.len()).or_default() += 1;
        self.by_word.insert(w, id);
    }

    fn remove(&mut self, w: &[usize]) {
        if self.by_word.remove(w).is_some() {
            let n = self.lens.get_mut(&w.len()).unwrap();
            *n -= 1;
            if *n == 0 {
                self.lens.remove(&w.len());
            }
        }
    }

    /// Leftmost occurrence of a tip inside `w`, shortest tips first.
    fn find(&self, w: &[usize]) -> Option<(usize, usize)> {
        for &l in self.lens.keys() {
            if l > w.len() {
                break;
            }
            for pos in 0..=w.len() - l {
                if let Some(&id) = self.by_word.get(&w[pos..pos + l]) {
                    return Some((id, pos));
                }
            }
        }
        None
    }

    fn has_suffix_tip(&self, w: &[usize]) -> bool {
        self.lens.keys().any(|&l| l <= w.len() && self.by_word.contains_key(&w[w.len() - l..]))
    }

    fn contains_tip(&self, w: &[usize]) -> bool {
        self.find(w).is_some()
    }
}

/// Confluent rewriting system for a presentation.
#[derive(Clone, Debug)]
pub struct Rewriter {
    pub field: Field,
    pub quiver: Quiver,
    pub rules: Vec<Rule>,
    index: TipIndex,
}

struct Engine {
    elems: Vec<Option<Poly>>,
    index: TipIndex,
    queue: BTreeSet<(usize, usize, usize, usize)>,
    cap: usize,
    steps: usize,
}

const MAX_ELEMENTS: usize = 20_000;
const MAX_STEPS: usize = 2_000_000;

impl Engine {
    fn reduce(&mut self, mut f: Poly) -> Result<Poly> {
        let mut out = Poly::new();
        while let Some((w, c)) = f.pop_last() {
            self.steps += 1;
            if self.steps > MAX_STEPS {
                return Err(Error::Cap("rewriting step limit reached".into()));
            }
            match self.index.find(&w.0) {
                Some((id, pos)) => {
                    let g = self.elems[id].as_ref().unwrap();
                    let tip_len = g.keys().next_back().unwrap().0.len();
                    for (t, tc) in g.iter().rev().skip(1) {
                        let mut nw = w.0[..pos].to_vec();
                        nw.extend_from_slice(&t.0);
                        nw.extend_from_slice(&w.0[pos + tip_len..]);
                        poly_add_term(&mut f, Word(nw), c.mul(tc).neg());
                    }
                }
                None => {
                    out.insert(w, c);
                }
            }
        }
        Ok(out)
    }

    fn monic(&self, mut p: Poly) -> Poly {
        let lc = p.values().next_back().unwrap().inv();
        for v in p.values_mut() {
            *v = v.mul(&lc);
        }
        p
    }

    fn insert(&mut self, p: Poly) -> Result<()> {
        let mut pending = vec![p];
        while let Some(p) = pending.pop() {
            let r = self.reduce(p)?;
            if r.is_empty() {
                continue;
            }
            let r = self.monic(r);
            let tip = r.keys().next_back().unwrap().0.clone();
            if tip.len() > 2 * self.cap {
                return Err(Error::Cap(format!("rewriting rule of length {} exceeds twice the cap {}", tip.len(), self.cap)));
            }
            // Retire rules whose tips contain the new tip.
            let mut single = TipIndex::default();
            single.insert(tip.clone(), 0);
            let retired: Vec<usize> = self
                .index
                .by_word
                .iter()
                .filter(|(w, _)| single.contains_tip(w))
                .map(|(_, &id)| id)
                .collect();
            let mut retired = retired;
            retired.sort_unstable();
            for id in retired {
                let g = self.elems[id].take().unwrap();
                self.index.remove(&g.keys().next_back().unwrap().0);
                pending.push(g);
            }
            let id = self.elems.len();
            if id >= MAX_ELEMENTS {
                return Err(Error::Cap("too many rewriting rules".into()));
            }
            self.elems.push(Some(r));
            self.index.insert(tip.clone(), id);
            let alive: Vec<(usize, Vec<usize>)> =
                self.index.by_word.iter().map(|(w, &i)| (i, w.clone())).collect();
            for (j, other) in alive {
                self.enqueue(id, &tip, j, &other);
                if j != id {
                    self.enqueue(j, &other, id, &tip);
                }
            }
        }
        Ok(())
    }

    fn enqueue(&mut self, i: usize, a: &[usize], j: usize, b: &[usize]) {
        for k in 1..a.len().min(b.len()) {
            if a[a.len() - k..] == b[..k] {
                self.queue.insert((a.len() + b.len() - k, i, j, k));
            }
        }
    }

    fn s_poly(&self, i: usize, j: usize, k: usize) -> Option<Poly> {
        let f = self.elems[i].as_ref()?;
        let g = self.elems[j].as_ref()?;
        let a = &f.keys().next_back().unwrap().0;
        let b = &g.keys().next_back().unwrap().0;
        let right = &b[k..];
        let left = &a[..a.len() - k];
        let mut s = Poly::new();
        for (w, c) in f {
            let mut nw = w.0.clone();
            nw.extend_from_slice(right);
            poly_add_term(&mut s, Word(nw), c.clone());
        }
        for (w, c) in g {
            let mut nw = left.to_vec();
            nw.extend_from_slice(&w.0);
            poly_add_term(&mut s, Word(nw), c.neg());
        }
        Some(s)
    }

    fn run(&mut self) -> Result<()> {
        loop {
            while let Some(item) = self.queue.pop_first() {
                let (len, i, j, k) = item;
                if len > 2 * self.cap {
                    return Err(Error::Cap(format!(
                        "overlap of length {len} exceeds twice the cap {}; the algebra may be infinite-dimensional",
                        self.cap
                    )));
                }
                if let Some(s) = self.s_poly(i, j, k) {
                    self.insert(s)?;
                }
            }
            // Interreduce tails, then re-check every overlap of the final system.
            let ids: Vec<usize> = {
                let mut v: Vec<usize> = self.index.by_word.values().copied().collect();
                v.sort_unstable();
                v
            };
            for &id in &ids {
                let g = self.elems[id].take().unwrap();
                let (tip, lc) = g.iter().next_back().map(|(w, c)| (w.clone(), c.clone())).unwrap();
                let mut tail = g;
                tail.remove(&tip);
                self.index.remove(&tip.0);
                let mut red = self.reduce(tail)?;
                self.index.insert(tip.0.clone(), id);
                red.insert(tip, lc);
                self.elems[id] = Some(red);
            }
            let tips: Vec<(usize, Vec<usize>)> = ids
                .iter()
                .map(|&i| (i, self.elems[i].as_ref().unwrap().keys().next_back().unwrap().0.clone()))
                .collect();
            for (i, a) in &tips {
                for (j, b) in &tips {
                    self.enqueue(*i, a, *j, b);
                }
            }
            let mut dirty = false;
            let items: Vec<_> = std::mem::take(&mut self.queue).into_iter().collect();
            for (len, i, j, k) in items {
                if len > 2 * self.cap {
                    return Err(Error::Cap(format!("overlap of length {len} exceeds twice the cap {}", self.cap)));
                }
                if let Some(s) = self.s_poly(i, j, k) {
                    let r = self.reduce(s)?;
                    if !r.is_empty() {
                        self.insert(r)?;
                        dirty = true;
                    }
                }
            }
            if !dirty {
                return Ok(());
            }
        }
    }
}

impl Rewriter {
    /// Computes the reduced Gröbner basis of the ideal generated by `relations`.
    /// Relations are first split into their vertex-uniform components.
    pub fn new(field: Field, quiver: &Quiver, relations: &[Element], cap: usize) -> Result<Rewriter> {
        let mut engine = Engine {
            elems: Vec::new(),
            index: TipIndex::default(),
            queue: BTreeSet::new(),
            cap,
            steps: 0,
        };
        let mut inputs: Vec<Poly> = Vec::new();
        for r in relations {
            let mut parts: BTreeMap<(usize, usize), Poly> = BTreeMap::new();
            for (p, c) in &r.terms {
                match p {
                    Path::Trivial(_) => {
                        return Err(Error::Invalid("relation contains a trivial path".into()));
                    }
                    Path::Word(w) => {
                        let key = (quiver.source(p), quiver.target(p));
                        poly_add_term(parts.entry(key).or_default(), Word(w.clone()), c.clone());
                    }
                }
            }
            inputs.extend(parts.into_values().filter(|p| !p.is_empty()));
        }
        inputs.sort_by(|a, b| a.keys().next_back().cmp(&b.keys().next_back()));
        for p in inputs {
            engine.insert(p)?;
        }
        engine.run()?;
        let mut rules: Vec<Rule> = engine
            .index
            .by_word
            .values()
            .map(|&id| {
                let g = engine.elems[id].as_ref().unwrap();
                let tip = g.keys().next_back().unwrap().0.clone();
                let tail = g.iter().rev().skip(1).map(|(w, c)| (w.0.clone(), c.neg())).collect();
                Rule { tip, tail }
            })
            .collect();
        rules.sort_by(|a, b| Word(a.tip.clone()).cmp(&Word(b.tip.clone())));
        let mut index = TipIndex::default();
        for (i, r) in rules.iter().enumerate() {
            index.insert(r.tip.clone(), i);
        }
        Ok(Rewriter { field, quiver: quiver.clone(), rules, index })
    }

    /// Normal form of a path-algebra element.
    pub fn reduce(&self, e: &Element) -> Element {
        let mut f: Poly = Poly::new();
        let mut out = Element::zero();
        for (p, c) in &e.terms {
            match p {
                Path::Trivial(_) => out.add_term(p.clone(), c.clone()),
                Path::Word(w) => poly_add_term(&mut f, Word(w.clone()), c.clone()),
            }
        }
        while let Some((w, c)) = f.pop_last() {
            match self.index.find(&w.0) {
                Some((id, pos)) => {
                    let rule = &self.rules[id];
                    for (t, tc) in &rule.tail {
                        let mut nw = w.0[..pos].to_vec();
                        nw.extend_from_slice(t);
                        nw.extend_from_slice(&w.0[pos + rule.tip.len()..]);
                        poly_add_term(&mut f, Word(nw), c.mul(tc));
                    }
                }
                None => out.add_term(Path::Word(w.0), c),
            }
        }
        out
    }

    pub fn is_normal(&self, w: &[usize]) -> bool {
        self.index.find(w).is_none()
    }

    /// All normal paths: trivial paths by vertex, then words in graded lexicographic order.
    /// Fails if a normal word of length `cap` exists.
    pub fn normal_words(&self, cap: usize) -> Result<Vec<Path>> {
        let q = &self.quiver;
        let mut out: Vec<Path> = (0..q.num_vertices()).map(Path::Trivial).collect();
        let mut level: Vec<Vec<usize>> = (0..q.arrows.len()).filter(|&a| self.is_normal(&[a])).map(|a| vec![a]).collect();
        let mut len = 1;
        while !level.is_empty() {
            if len >= cap {
                return Err(Error::Cap(format!(
                    "normal words of length {len} exist; the cap {cap} was reached without stabilization"
                )));
            }
            let mut next = Vec::new();
            for w in &level {
                let t = q.arrows[*w.last().unwrap()].target;
                for (a, arr) in q.arrows.iter().enumerate() {
                    if arr.source != t {
                        continue;
                    }
                    let mut nw = w.clone();
                    nw.push(a);
                    if !self.index.has_suffix_tip(&nw) {
                        next.push(nw);
                    }
                }
            }
            level.sort_by(|a, b| Word(a.clone()).cmp(&Word(b.clone())));
            out.extend(level.drain(..).map(Path::Word));
            level = next;
            len += 1;
        }
        Ok(out)
    }
}
