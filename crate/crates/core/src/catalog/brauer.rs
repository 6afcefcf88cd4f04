//! Brauer graph algebras.
//!
//! A graph is given by its vertices, each with a multiplicity and the clockwise
//! cyclic ordering of the edge-ends around it. A loop edge appears twice in the
//! ordering of its vertex.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentation::{Builder, Presentation};
use crate::quiver::valid_arrow_name;
use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrauerVertex {
    pub name: String,
    pub multiplicity: usize,
    pub ordering: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrauerGraph {
    pub edges: Vec<String>,
    pub vertices: Vec<BrauerVertex>,
}

/// A half-edge: position `j` in the ordering of vertex `k`.
type Half = (usize, usize);

impl BrauerGraph {
    /// The straight line `v0 - v1 - ... - vn` with edges `1..n`.
    pub fn line(n: usize, mults: &BTreeMap<usize, usize>) -> Result<BrauerGraph> {
        if n == 0 {
            return Err(Error::Invalid("a line needs at least one edge".into()));
        }
        if let Some(k) = mults.keys().find(|&&k| k > n) {
            return Err(Error::Invalid(format!("no vertex v{k} on a line with {n} edges")));
        }
        let vertices = (0..=n)
            .map(|k| {
                let mut ordering = Vec::new();
                if k > 0 {
                    ordering.push(k.to_string());
                }
                if k < n {
                    ordering.push((k + 1).to_string());
                }
                BrauerVertex { name: format!("v{k}"), multiplicity: mults.get(&k).copied().unwrap_or(1), ordering }
            })
            .collect();
        let g = BrauerGraph { edges: (1..=n).map(|i| i.to_string()).collect(), vertices };
        g.validate()?;
        Ok(g)
    }

    fn halves(&self) -> Result<BTreeMap<usize, Vec<Half>>> {
        let mut by_edge: BTreeMap<usize, Vec<Half>> = BTreeMap::new();
        for (k, v) in self.vertices.iter().enumerate() {
            for (j, e) in v.ordering.iter().enumerate() {
                let i = self
                    .edges
                    .iter()
                    .position(|x| x == e)
                    .ok_or_else(|| Error::Invalid(format!("vertex {} lists unknown edge {e:?}", v.name)))?;
                by_edge.entry(i).or_default().push((k, j));
            }
        }
        Ok(by_edge)
    }

    pub fn validate(&self) -> Result<()> {
        if self.edges.is_empty() {
            return Err(Error::Invalid("a Brauer graph needs an edge".into()));
        }
        for (i, e) in self.edges.iter().enumerate() {
            if self.edges[..i].contains(e) {
                return Err(Error::Invalid(format!("duplicate edge {e:?}")));
            }
        }
        for (k, v) in self.vertices.iter().enumerate() {
            if self.vertices[..k].iter().any(|w| w.name == v.name) {
                return Err(Error::Invalid(format!("duplicate vertex {:?}", v.name)));
            }
            if !valid_arrow_name(&v.name) {
                return Err(Error::Invalid(format!("vertex name {:?} cannot prefix arrow names", v.name)));
            }
            if v.multiplicity == 0 {
                return Err(Error::Invalid(format!("vertex {} has multiplicity 0", v.name)));
            }
            if v.ordering.is_empty() {
                return Err(Error::Invalid(format!("vertex {} has no edges", v.name)));
            }
        }
        let halves = self.halves()?;
        for (i, e) in self.edges.iter().enumerate() {
            let n = halves.get(&i).map_or(0, |h| h.len());
            if n != 2 {
                return Err(Error::Invalid(format!("edge {e:?} has {n} ends in the cyclic orderings, expected 2")));
            }
        }
        // Connectivity by union-find over vertices.
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for h in halves.values() {
            let (a, b) = (find(&mut parent, h[0].0), find(&mut parent, h[1].0));
            parent[a] = b;
        }
        let root = find(&mut parent, 0);
        if (0..self.vertices.len()).any(|k| find(&mut parent, k) != root) {
            return Err(Error::Invalid("Brauer graph is not connected".into()));
        }
        let rank = self.edges.len() + 1 - self.vertices.len();
        if rank > 1 {
            return Err(Error::Invalid(format!("Brauer graph has {rank} independent cycles; at most one is supported")));
        }
        if rank == 1 {
            let len = self.cycle_length(&halves);
            if len % 2 == 0 {
                return Err(Error::Invalid(format!("the cycle of the Brauer graph has even length {len}")));
            }
        }
        Ok(())
    }

    /// Length of the unique cycle: strip leaves until none remain.
    fn cycle_length(&self, halves: &BTreeMap<usize, Vec<Half>>) -> usize {
        let mut alive: Vec<bool> = vec![true; self.edges.len()];
        loop {
            let mut degree = vec![0usize; self.vertices.len()];
            for (i, h) in halves {
                if alive[*i] {
                    degree[h[0].0] += 1;
                    degree[h[1].0] += 1;
                }
            }
            let leaf = halves.iter().find(|(i, h)| alive[**i] && (degree[h[0].0] == 1 || degree[h[1].0] == 1));
            match leaf {
                Some((i, _)) => alive[*i] = false,
                None => return alive.iter().filter(|a| **a).count(),
            }
        }
    }

    fn arrow_name(&self, (k, j): Half) -> String {
        format!("{}_{}", self.vertices[k].name, j)
    }

    /// The standard presentation: one quiver vertex per edge, one arrow per edge-end
    /// to the next end in the cyclic ordering, the cycle differences at each edge and
    /// the products of consecutive arrows from different cycles.
    pub fn presentation(&self, field: Field) -> Result<Presentation> {
        self.validate()?;
        let halves = self.halves()?;
        let mut b = Builder::new(field);
        b.vertices(self.edges.iter());
        for (k, v) in self.vertices.iter().enumerate() {
            let val = v.ordering.len();
            for j in 0..val {
                b.arrow(self.arrow_name((k, j)), &v.ordering[j], &v.ordering[(j + 1) % val]);
            }
        }
        let cycle = |(k, j): Half| -> String {
            let val = self.vertices[k].ordering.len();
            let word: Vec<String> = (0..val).map(|s| self.arrow_name((k, (j + s) % val))).collect();
            format!("({})^{}", word.join(" "), self.vertices[k].multiplicity)
        };
        for h in halves.values() {
            b.rel(format!("{} - {}", cycle(h[0]), cycle(h[1])));
        }
        for h in halves.values() {
            for (x, y) in [(h[0], h[1]), (h[1], h[0])] {
                let val = self.vertices[x.0].ordering.len();
                let into = self.arrow_name((x.0, (x.1 + val - 1) % val));
                b.rel(format!("{} {}", into, self.arrow_name(y)));
            }
        }
        b.build()
    }

    /// `sum_v m_v * val_v^2`.
    pub fn dimension_formula(&self) -> usize {
        self.vertices.iter().map(|v| v.multiplicity * v.ordering.len() * v.ordering.len()).sum()
    }

    /// `c_ij = sum_v m_v * (ends of i at v) * (ends of j at v)`.
    pub fn cartan_formula(&self) -> Vec<Vec<usize>> {
        let n = self.edges.len();
        let mut c = vec![vec![0; n]; n];
        for v in &self.vertices {
            let count = |e: &String| v.ordering.iter().filter(|x| *x == e).count();
            for i in 0..n {
                for j in 0..n {
                    c[i][j] += v.multiplicity * count(&self.edges[i]) * count(&self.edges[j]);
                }
            }
        }
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FdAlgebra;
    use crate::module::cartan;

    fn alg(g: &BrauerGraph) -> FdAlgebra {
        FdAlgebra::from_presentation(&g.presentation(Field::Rational).unwrap(), 64).unwrap()
    }

    #[test]
    fn single_edge_is_dual_numbers() {
        let g = BrauerGraph::line(1, &BTreeMap::new()).unwrap();
        let a = alg(&g);
        assert_eq!(a.dim(), 2);
        assert_eq!(cartan(&a), vec![vec![2]]);
    }

    #[test]
    fn two_edge_line() {
        let g = BrauerGraph::line(2, &BTreeMap::new()).unwrap();
        let a = alg(&g);
        assert_eq!(a.dim(), 6);
        assert_eq!(cartan(&a), vec![vec![2, 1], vec![1, 2]]);
    }

    #[test]
    fn loop_edge() {
        let g = BrauerGraph {
            edges: vec!["1".into()],
            vertices: vec![BrauerVertex { name: "v".into(), multiplicity: 1, ordering: vec!["1".into(), "1".into()] }],
        };
        let a = alg(&g);
        assert_eq!(a.dim(), 4);
        assert_eq!(g.dimension_formula(), 4);
    }

    #[test]
    fn rejects_bad_graphs() {
        let square = BrauerGraph {
            edges: vec!["1".into(), "2".into()],
            vertices: vec![
                BrauerVertex { name: "u".into(), multiplicity: 1, ordering: vec!["1".into(), "2".into()] },
                BrauerVertex { name: "v".into(), multiplicity: 1, ordering: vec!["1".into(), "2".into()] },
            ],
        };
        assert!(square.validate().unwrap_err().to_string().contains("even length 2"));
        let dangling = BrauerGraph {
            edges: vec!["1".into()],
            vertices: vec![BrauerVertex { name: "u".into(), multiplicity: 1, ordering: vec!["1".into()] }],
        };
        assert!(dangling.validate().is_err());
    }
}
