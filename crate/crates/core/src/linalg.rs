//! Dense matrices over a base Euclidean domain, with Smith and Hermite normal
//! forms, right kernels and linear solving.
//!
//! Elimination always pivots on the entry of smallest Euclidean norm, ties
//! broken by lowest `(row, col)`, so every output is a deterministic function
//! of the input.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{BaseRing, Element};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: BaseRing,
    rows: usize,
    cols: usize,
    data: Vec<Element>,
}

impl Matrix {
    pub fn zeros(ring: BaseRing, rows: usize, cols: usize) -> Self {
        Matrix { ring, rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: BaseRing, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m[(i, i)] = ring.one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have `cols` entries.
    pub fn from_rows(ring: BaseRing, cols: usize, rows: Vec<Vec<Element>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            for e in &row {
                if !ring.contains(e) {
                    return Err(Error::ElementOutsideContext(e.to_string()));
                }
            }
            data.extend(row);
        }
        Ok(Matrix { ring, rows: nrows, cols, data })
    }

    /// Integer matrix from small entries.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&x| Element::int(x)).collect()).collect();
        Self::from_rows(BaseRing::Integers, cols, rows).expect("rectangular")
    }

    pub fn ring(&self) -> BaseRing {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Element] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Element>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Element> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Element::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let r = self.ring;
        let mut out = Matrix::zeros(r, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = r.mul(a, &other[(k, j)]);
                    out[(i, j)] = r.add(&out[(i, j)], &prod);
                }
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[Element]) -> Result<Vec<Element>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        let r = self.ring;
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(r.zero(), |acc, (a, b)| r.add(&acc, &r.mul(a, b))))
            .collect())
    }

    /// Row vector times matrix: `v * self`.
    pub fn apply_left(&self, v: &[Element]) -> Vec<Element> {
        assert_eq!(v.len(), self.rows);
        let r = self.ring;
        let mut out = vec![r.zero(); self.cols];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = r.add(o, &r.mul(c, &self[(i, j)]));
            }
        }
        out
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!("stacking {} and {} columns", self.cols, other.cols)));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { ring: self.ring, rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.ring, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += c * row[src]`
    fn add_row(&mut self, dst: usize, src: usize, c: &Element) {
        if c.is_zero() {
            return;
        }
        let r = self.ring;
        for j in 0..self.cols {
            let t = r.mul(c, &self[(src, j)]);
            self[(dst, j)] = r.add(&self[(dst, j)], &t);
        }
    }

    /// `col[dst] += c * col[src]`
    fn add_col(&mut self, dst: usize, src: usize, c: &Element) {
        if c.is_zero() {
            return;
        }
        let r = self.ring;
        for i in 0..self.rows {
            let t = r.mul(c, &self[(i, src)]);
            self[(i, dst)] = r.add(&self[(i, dst)], &t);
        }
    }

    fn scale_row(&mut self, i: usize, c: &Element) {
        let r = self.ring;
        for j in 0..self.cols {
            self[(i, j)] = r.mul(&self[(i, j)], c);
        }
    }

    fn scale_col(&mut self, j: usize, c: &Element) {
        let r = self.ring;
        for i in 0..self.rows {
            self[(i, j)] = r.mul(&self[(i, j)], c);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Element;
    fn index(&self, (i, j): (usize, usize)) -> &Element {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Element {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// `u * a * v = d` with `u`, `v` invertible and `d` diagonal in Smith form.
///
/// The inverses of `u` and `v` are tracked alongside, since module code
/// needs them to move between the original and the diagonal basis.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: Matrix,
    pub d: Matrix,
    pub v: Matrix,
    pub u_inv: Matrix,
    pub v_inv: Matrix,
}

impl SmithDecomposition {
    /// Nonzero diagonal entries, in order. They form a divisibility chain.
    pub fn diagonal(&self) -> Vec<Element> {
        let n = self.d.rows.min(self.d.cols);
        (0..n).map(|i| self.d[(i, i)].clone()).take_while(|e| !e.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().len()
    }
}

struct SmithState {
    d: Matrix,
    u: Matrix,
    u_inv: Matrix,
    v: Matrix,
    v_inv: Matrix,
}

impl SmithState {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    fn add_row(&mut self, dst: usize, src: usize, c: &Element) {
        let neg = self.d.ring.neg(c);
        self.d.add_row(dst, src, c);
        self.u.add_row(dst, src, c);
        self.u_inv.add_col(src, dst, &neg);
    }

    fn add_col(&mut self, dst: usize, src: usize, c: &Element) {
        let neg = self.d.ring.neg(c);
        self.d.add_col(dst, src, c);
        self.v.add_col(dst, src, c);
        self.v_inv.add_row(src, dst, &neg);
    }

    fn scale_row(&mut self, i: usize, unit: &Element) {
        let inv = self.d.ring.unit_inverse(unit);
        self.d.scale_row(i, unit);
        self.u.scale_row(i, unit);
        self.u_inv.scale_col(i, &inv);
    }
}

/// Position of the smallest-norm nonzero entry in the block `[t.., t..]`.
fn smallest_pivot(m: &Matrix, t: usize) -> Option<(usize, usize)> {
    let r = m.ring;
    let mut best: Option<(usize, usize)> = None;
    for i in t..m.rows {
        for j in t..m.cols {
            let e = &m[(i, j)];
            if e.is_zero() {
                continue;
            }
            match best {
                Some(b) if r.cmp_norm(e, &m[b]) != std::cmp::Ordering::Less => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

pub fn smith_normal_form(a: &Matrix) -> SmithDecomposition {
    let ring = a.ring;
    let (m, n) = (a.rows, a.cols);
    let mut s = SmithState {
        d: a.clone(),
        u: Matrix::identity(ring, m),
        u_inv: Matrix::identity(ring, m),
        v: Matrix::identity(ring, n),
        v_inv: Matrix::identity(ring, n),
    };
    for t in 0..m.min(n) {
        while let Some((pi, pj)) = smallest_pivot(&s.d, t) {
            s.swap_rows(t, pi);
            s.swap_cols(t, pj);
            let pivot = s.d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..m {
                if s.d[(i, t)].is_zero() {
                    continue;
                }
                let (q, r) = ring.div_rem(&s.d[(i, t)], &pivot);
                s.add_row(i, t, &ring.neg(&q));
                clean &= r.is_zero();
            }
            for j in t + 1..n {
                if s.d[(t, j)].is_zero() {
                    continue;
                }
                let (q, r) = ring.div_rem(&s.d[(t, j)], &pivot);
                s.add_col(j, t, &ring.neg(&q));
                clean &= r.is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !ring.divides(&pivot, &s.d[(i, j)])));
            match offender {
                Some(i) => s.add_row(t, i, &ring.one()),
                None => break,
            }
        }
        let unit = ring.unit_part(&s.d[(t, t)]);
        if !s.d[(t, t)].is_zero() && unit != ring.one() {
            s.scale_row(t, &ring.unit_inverse(&unit));
        }
    }
    SmithDecomposition { u: s.u, d: s.d, v: s.v, u_inv: s.u_inv, v_inv: s.v_inv }
}

/// Row-style Hermite normal form `t * a = h`.
///
/// Pivots are canonical associates and entries above each pivot are
/// canonical remainders modulo it, so `h` is unique for the row space of `a`.
#[derive(Clone, Debug)]
pub struct HermiteForm {
    pub h: Matrix,
    pub t: Matrix,
    /// `(row, column)` of each pivot, in row order.
    pub pivots: Vec<(usize, usize)>,
}

impl HermiteForm {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn hermite_form(a: &Matrix) -> HermiteForm {
    let ring = a.ring;
    let (m, n) = (a.rows, a.cols);
    let mut h = a.clone();
    let mut t = Matrix::identity(ring, m);
    let mut pivots = Vec::new();
    let mut r = 0;
    for j in 0..n {
        if r == m {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..m {
                if h[(i, j)].is_zero() {
                    continue;
                }
                match best {
                    Some(b) if ring.cmp_norm(&h[(i, j)], &h[(b, j)]) != std::cmp::Ordering::Less => {}
                    _ => best = Some(i),
                }
            }
            let Some(b) = best else { break };
            h.swap_rows(r, b);
            t.swap_rows(r, b);
            let pivot = h[(r, j)].clone();
            let mut done = true;
            for i in r + 1..m {
                if h[(i, j)].is_zero() {
                    continue;
                }
                let (q, rem) = ring.div_rem(&h[(i, j)], &pivot);
                let nq = ring.neg(&q);
                h.add_row(i, r, &nq);
                t.add_row(i, r, &nq);
                done &= rem.is_zero();
            }
            if done {
                break;
            }
        }
        if h[(r, j)].is_zero() {
            continue;
        }
        let unit = ring.unit_part(&h[(r, j)]);
        if unit != ring.one() {
            let inv = ring.unit_inverse(&unit);
            h.scale_row(r, &inv);
            t.scale_row(r, &inv);
        }
        let pivot = h[(r, j)].clone();
        for i in 0..r {
            let q = ring.div_rem(&h[(i, j)], &pivot).0;
            let nq = ring.neg(&q);
            h.add_row(i, r, &nq);
            t.add_row(i, r, &nq);
        }
        pivots.push((r, j));
        r += 1;
    }
    HermiteForm { h, t, pivots }
}

/// Hermite form of `a`, its transform, and a matrix whose columns generate
/// the right kernel `{x : a x = 0}`.
pub fn hermite_form_and_kernel(a: &Matrix) -> (Matrix, Matrix, Matrix) {
    let hf = hermite_form(a);
    let k = kernel(a);
    (hf.h, hf.t, k)
}

/// Columns generate the right kernel of `a`.
pub fn kernel(a: &Matrix) -> Matrix {
    let at = hermite_form(&a.transpose());
    let rank = at.rank();
    let rows: Vec<Vec<Element>> = (rank..a.cols).map(|i| at.t.row(i).to_vec()).collect();
    let k = Matrix::from_rows(a.ring, a.cols, rows).expect("kernel rows are rectangular");
    k.transpose()
}

/// Some `x` with `a x = b`, if one exists.
pub fn solve_membership(a: &Matrix, b: &[Element]) -> Result<Option<Vec<Element>>> {
    if b.len() != a.rows {
        return Err(Error::DimensionMismatch(format!("right-hand side of length {} for {} rows", b.len(), a.rows)));
    }
    let ring = a.ring;
    let snf = smith_normal_form(a);
    let c = snf.u.apply(b)?;
    let diag = snf.diagonal();
    let mut y = vec![ring.zero(); a.cols];
    for (i, ci) in c.iter().enumerate() {
        match diag.get(i) {
            Some(d) => match ring.exact_div(ci, d) {
                Some(q) => y[i] = q,
                None => return Ok(None),
            },
            None if !ci.is_zero() => return Ok(None),
            None => {}
        }
    }
    Ok(Some(snf.v.apply(&y)?))
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(a: &Matrix) -> Result<Element> {
    if a.rows != a.cols {
        return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
    }
    let ring = a.ring;
    let n = a.rows;
    let mut m = a.clone();
    let mut sign = ring.one();
    let mut prev = ring.one();
    for k in 0..n {
        if m[(k, k)].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                return Ok(ring.zero());
            };
            m.swap_rows(k, swap);
            sign = ring.neg(&sign);
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = ring.sub(&ring.mul(&m[(i, j)], &m[(k, k)]), &ring.mul(&m[(i, k)], &m[(k, j)]));
                m[(i, j)] = ring.exact_div(&num, &prev).expect("Bareiss division is exact");
            }
            m[(i, k)] = ring.zero();
        }
        prev = m[(k, k)].clone();
    }
    if n == 0 {
        return Ok(ring.one());
    }
    Ok(ring.mul(&sign, &m[(n - 1, n - 1)]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Element> {
        v.iter().map(|&x| Element::int(x)).collect()
    }

    fn check_smith(a: &Matrix) -> SmithDecomposition {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).unwrap().mul(&s.v).unwrap(), s.d);
        assert_eq!(s.u.mul(&s.u_inv).unwrap(), Matrix::identity(a.ring(), a.rows()));
        assert_eq!(s.v.mul(&s.v_inv).unwrap(), Matrix::identity(a.ring(), a.cols()));
        s
    }

    #[test]
    fn smith_examples() {
        let s = check_smith(&Matrix::from_ints(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.diagonal(), ints(&[1, 6]));
        let s = check_smith(&Matrix::from_ints(&[&[4, 6], &[2, 2]]));
        assert_eq!(s.diagonal(), ints(&[2, 2]));
        let z = Matrix::zeros(BaseRing::Integers, 2, 2);
        let s = check_smith(&z);
        assert!(s.d.is_zero());
        assert_eq!(s.u, Matrix::identity(BaseRing::Integers, 2));
        assert_eq!(s.v, Matrix::identity(BaseRing::Integers, 2));
    }

    #[test]
    fn smith_of_empty_matrices() {
        let e = Matrix::zeros(BaseRing::Integers, 0, 3);
        let s = check_smith(&e);
        assert_eq!(s.rank(), 0);
        let e = Matrix::zeros(BaseRing::Integers, 2, 0);
        assert_eq!(check_smith(&e).rank(), 0);
    }

    #[test]
    fn kernel_examples() {
        let k = kernel(&Matrix::from_ints(&[&[2, 4]]));
        assert_eq!(k.cols(), 1);
        let v = k.column(0);
        assert!(v == ints(&[2, -1]) || v == ints(&[-2, 1]));
        assert_eq!(kernel(&Matrix::identity(BaseRing::Integers, 3)).cols(), 0);
        assert_eq!(kernel(&Matrix::from_ints(&[&[0]])).column(0), ints(&[1]));
    }

    #[test]
    fn solve_examples() {
        let a = Matrix::from_ints(&[&[2]]);
        assert_eq!(solve_membership(&a, &ints(&[6])).unwrap(), Some(ints(&[3])));
        assert_eq!(solve_membership(&a, &ints(&[3])).unwrap(), None);
        let a = Matrix::from_ints(&[&[2, 3]]);
        let x = solve_membership(&a, &ints(&[1])).unwrap().unwrap();
        assert_eq!(a.apply(&x).unwrap(), ints(&[1]));
        assert!(matches!(solve_membership(&a, &ints(&[1, 2])), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn hermite_is_reduced_echelon() {
        let a = Matrix::from_ints(&[&[4, 6, 2], &[2, 2, 8], &[6, 9, 3]]);
        let hf = hermite_form(&a);
        assert_eq!(hf.t.mul(&a).unwrap(), hf.h);
        for &(r, c) in &hf.pivots {
            let p = hf.h[(r, c)].as_int().unwrap().clone();
            assert!(p > 0.into());
            for i in 0..r {
                let above = hf.h[(i, c)].as_int().unwrap().clone();
                assert!(above >= 0.into() && above < p);
            }
        }
        assert!(determinant(&hf.t).map(|d| BaseRing::Integers.is_unit(&d)).unwrap());
    }

    #[test]
    fn determinant_small() {
        let a = Matrix::from_ints(&[&[0, 2, 1], &[3, 1, 0], &[1, 1, 1]]);
        assert_eq!(determinant(&a).unwrap(), Element::int(-4));
    }

    #[test]
    fn polynomial_smith() {
        let f2 = BaseRing::Polynomials { characteristic: 2 };
        let x = f2.poly(&[0, 1]);
        let x1 = f2.poly(&[1, 1]);
        let a = Matrix::from_rows(f2, 2, vec![vec![x.clone(), f2.zero()], vec![f2.zero(), x1.clone()]]).unwrap();
        let s = check_smith(&a);
        assert_eq!(s.diagonal(), vec![f2.one(), f2.mul(&x, &x1)]);
    }
}
