//! Dense exact linear algebra over a [`Field`].

use std::fmt;

use crate::scalar::{Field, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero_vec(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = a.add(&c.mul(x));
        }
    }
}

pub fn scale(v: &[Scalar], c: &Scalar) -> Vector {
    v.iter().map(|x| x.mul(c)).collect()
}

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub field: Field,
    data: Vec<Scalar>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, field, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vector]) -> Mat {
        let mut m = Mat::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            for (j, x) in r.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(field: Field, rows: usize, cols: &[Vector]) -> Mat {
        Mat::from_rows(field, rows, cols).transpose()
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows);
        let mut r = Mat::zeros(self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let v = r.get(i, j).add(&a.mul(b));
                        r.set(i, j, v);
                    }
                }
            }
        }
        r
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len());
        let mut out = zero_vec(self.field, self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o = o.add(&a.mul(x));
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect();
        Mat { data, ..*self }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect();
        Mat { data, ..*self }
    }

    pub fn scaled(&self, c: &Scalar) -> Mat {
        Mat { data: self.data.iter().map(|a| a.mul(c)).collect(), ..*self }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv();
            for j in 0..m.cols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..m.cols {
                    let v = m.get(i, j).sub(&f.mul(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn kernel(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = zero_vec(self.field, self.cols);
            v[free] = self.field.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = r.get(i, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let mut det = self.field.one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return self.field.zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = det.neg();
            }
            let piv = m.get(c, c).clone();
            det = det.mul(&piv);
            let inv = piv.inv();
            for i in c + 1..m.rows {
                let f = m.get(i, c).mul(&inv);
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j).sub(&f.mul(m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Mat::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Integer entries, if every entry is an integer.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_i64()).collect())
            .collect()
    }
}

/// An echelonized subspace of `K^n` that remembers how its rows combine the
/// vectors that were inserted.
#[derive(Clone, Debug)]
pub struct Span {
    field: Field,
    n: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
    combos: Vec<Vector>,
    inserted: usize,
}

impl Span {
    pub fn new(field: Field, n: usize) -> Span {
        Span { field, n, rows: Vec::new(), pivots: Vec::new(), combos: Vec::new(), inserted: 0 }
    }

    pub fn from_vectors(field: Field, n: usize, vs: &[Vector]) -> Span {
        let mut s = Span::new(field, n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    /// Remainder of `v` modulo the span, with the combination of echelon rows removed.
    fn reduce_tracked(&self, v: &[Scalar]) -> (Vector, Vec<Scalar>) {
        let mut r = v.to_vec();
        let mut used = vec![self.field.zero(); self.rows.len()];
        for (k, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let c = r[p].clone();
            if !c.is_zero() {
                axpy(&mut r, &c.neg(), row);
                used[k] = c;
            }
        }
        (r, used)
    }

    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        self.reduce_tracked(v).0
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Inserts `v`; returns true if the dimension grew. Every call counts as an
    /// inserted generator for [`Span::coords`].
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.n);
        let idx = self.inserted;
        self.inserted += 1;
        for c in self.combos.iter_mut() {
            c.push(self.field.zero());
        }
        let (mut r, used) = self.reduce_tracked(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else { return false };
        let mut combo = zero_vec(self.field, self.inserted);
        combo[idx] = self.field.one();
        for (k, c) in used.iter().enumerate() {
            if !c.is_zero() {
                let ck = self.combos[k].clone();
                axpy(&mut combo, &c.neg(), &ck);
            }
        }
        let inv = r[p].inv();
        r = scale(&r, &inv);
        combo = scale(&combo, &inv);
        for k in 0..self.rows.len() {
            let c = self.rows[k][p].clone();
            if !c.is_zero() {
                let neg = c.neg();
                axpy(&mut self.rows[k], &neg, &r);
                axpy(&mut self.combos[k], &neg, &combo);
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        self.combos.push(combo);
        true
    }

    /// Coordinates of `v` in terms of the inserted generators, if `v` lies in the span.
    /// Generators that did not enlarge the span get coefficient zero.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        let (r, used) = self.reduce_tracked(v);
        if !is_zero_vec(&r) {
            return None;
        }
        let mut out = zero_vec(self.field, self.inserted);
        for (k, c) in used.iter().enumerate() {
            axpy(&mut out, c, &self.combos[k]);
        }
        Some(out)
    }

    /// Echelon basis.
    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn intersect(&self, other: &Span) -> Span {
        // x = Σ a_i u_i = Σ b_j w_j  <=>  [U; -W]^T (a, b) = 0
        let field = self.field;
        let mut cols: Vec<Vector> = self.rows.clone();
        cols.extend(other.rows.iter().map(|w| scale(w, &field.one().neg())));
        if cols.is_empty() {
            return Span::new(field, self.n);
        }
        let m = Mat::from_cols(field, self.n, &cols);
        let mut out = Span::new(field, self.n);
        for k in m.kernel() {
            let mut x = zero_vec(field, self.n);
            for (i, u) in self.rows.iter().enumerate() {
                axpy(&mut x, &k[i], u);
            }
            out.insert(&x);
        }
        out
    }
}
