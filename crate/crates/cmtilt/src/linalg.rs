//! Dense exact linear algebra with deterministic pivoting.
//!
//! Vectors are rows throughout the crate: a linear map is applied as `v * M`.
//! Pivot selection is always "first nonzero entry in row-major order", so
//! every basis this module produces is reproducible.

use crate::scalar::{Field, Scalar};
use crate::{Error, Result};
use std::fmt;

pub type Vector = Vec<Scalar>;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    pub field: Field,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vector]) -> Self {
        let mut m = Matrix::zero(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged row");
            for (j, s) in r.iter().enumerate() {
                m.set(i, j, s.clone());
            }
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut m = Matrix::zero(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
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

    pub fn rows_vec(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| s.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j).add(other.get(i, j)))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j).sub(other.get(i, j)))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j).mul(c))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Matrix::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    /// Row-vector application `v * self`.
    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.rows, "vector/matrix shape mismatch");
        let mut out = vec![self.field.zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let b = self.get(i, j);
                if !b.is_zero() {
                    out[j] = out[j].add(&a.mul(b));
                }
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = self.get(r, c).inv().expect("pivot nonzero");
            for j in c..self.cols {
                let v = self.get(r, j).mul(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.get(i, c).is_zero() {
                    let f = self.get(i, c).clone();
                    for j in c..self.cols {
                        let v = self.get(i, j).sub(&f.mul(self.get(r, j)));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
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
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of `{ v : v * self = 0 }` (the left kernel), as reduced echelon rows.
    pub fn left_kernel(&self) -> Vec<Vector> {
        // Solve x * M = 0  <=>  M^T x^T = 0; echelonize M^T augmented trick:
        // row-reduce [M | I] by rows: rows of I-part where M-part became zero.
        let f = self.field;
        let n = self.rows;
        let mut aug = Matrix::zero(f, n, self.cols + n);
        for i in 0..n {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols + i, f.one());
        }
        aug.rref();
        let mut out = Vec::new();
        for i in 0..n {
            if (0..self.cols).all(|j| aug.get(i, j).is_zero()) {
                let row: Vector = (0..n).map(|j| aug.get(i, self.cols + j).clone()).collect();
                if row.iter().any(|s| !s.is_zero()) {
                    out.push(row);
                }
            }
        }
        // normalize to reduced echelon form for determinism
        let mut m = Matrix::from_rows(f, n, &out);
        m.rref();
        (0..out.len()).map(|i| m.row(i)).collect()
    }

    /// Basis of `{ v : self * v^T = 0 }` (the right kernel).
    pub fn right_kernel(&self) -> Vec<Vector> {
        self.transpose().left_kernel()
    }

    /// Solve `x * self = b` for a row vector x; None if inconsistent.
    pub fn solve_left(&self, b: &[Scalar]) -> Option<Vector> {
        assert_eq!(b.len(), self.cols);
        let f = self.field;
        let n = self.rows;
        // Row-reduce [self | I]; express b against reduced self-part rows.
        let mut aug = Matrix::zero(f, n, self.cols + n);
        for i in 0..n {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols + i, f.one());
        }
        aug.rref();
        let mut residual: Vector = b.to_vec();
        let mut combo = vec![f.zero(); n];
        for i in 0..n {
            let Some(p) = (0..self.cols).find(|&j| !aug.get(i, j).is_zero()) else {
                continue;
            };
            let c = residual[p].clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                residual[j] = residual[j].sub(&c.mul(aug.get(i, j)));
            }
            for j in 0..n {
                combo[j] = combo[j].add(&c.mul(aug.get(i, self.cols + j)));
            }
        }
        if residual.iter().all(|s| s.is_zero()) {
            Some(combo)
        } else {
            None
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn vec_scale(a: &[Scalar], c: &Scalar) -> Vector {
    a.iter().map(|x| x.mul(c)).collect()
}

pub fn vec_is_zero(a: &[Scalar]) -> bool {
    a.iter().all(|s| s.is_zero())
}

/// An echelonized subspace of K^n supporting incremental insertion,
/// membership tests and canonical quotient coordinates.
#[derive(Clone)]
pub struct Subspace {
    pub field: Field,
    pub ambient: usize,
    rows: Vec<Vector>,   // reduced echelon rows
    pivots: Vec<usize>,  // strictly increasing? no: pivot col of rows[i]; kept sorted by insertion order
}

impl Subspace {
    pub fn new(field: Field, ambient: usize) -> Self {
        Subspace { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` modulo the subspace; the result has zeros in all pivot columns.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = w[p].clone();
            if !c.is_zero() {
                for j in 0..self.ambient {
                    w[j] = w[j].sub(&c.mul(&row[j]));
                }
            }
        }
        w
    }

    /// Reduce and also report the coefficients of the reduction against `basis()`.
    pub fn reduce_with_coords(&self, v: &[Scalar]) -> (Vector, Vector) {
        let mut w = v.to_vec();
        let mut coords = vec![self.field.zero(); self.rows.len()];
        for (i, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let c = w[p].clone();
            if !c.is_zero() {
                for j in 0..self.ambient {
                    w[j] = w[j].sub(&c.mul(&row[j]));
                }
                coords[i] = c;
            }
        }
        (w, coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        vec_is_zero(&self.reduce(v))
    }

    /// Insert a vector; returns true if the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|s| !s.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().expect("nonzero");
        for s in w.iter_mut() {
            *s = s.mul(&inv);
        }
        // back-substitute into existing rows to stay fully reduced
        for row in self.rows.iter_mut() {
            let c = row[p].clone();
            if !c.is_zero() {
                for j in 0..self.ambient {
                    row[j] = row[j].sub(&c.mul(&w[j]));
                }
            }
        }
        self.rows.push(w);
        self.pivots.push(p);
        true
    }

    pub fn insert_all<'a>(&mut self, vs: impl IntoIterator<Item = &'a Vector>) {
        for v in vs {
            self.insert(v);
        }
    }

    /// Coordinates of `v` with respect to `basis()`; None if v is outside.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        let (res, coords) = self.reduce_with_coords(v);
        if vec_is_zero(&res) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }
}

/// Representatives in `span(u_basis)` completing `span(w_basis)` to the bigger
/// space: returns vectors of `u_basis` whose classes form a basis of U/W.
/// Errors when W is not contained in U.
pub fn quotient_basis(field: Field, ambient: usize, u_basis: &[Vector], w_basis: &[Vector]) -> Result<Vec<Vector>> {
    let mut u = Subspace::new(field, ambient);
    u.insert_all(u_basis);
    let mut acc = Subspace::new(field, ambient);
    for w in w_basis {
        if !u.contains(w) {
            return Err(Error::Internal("quotient_basis: W not contained in U".into()));
        }
        acc.insert(w);
    }
    let w_dim = acc.dim();
    let mut reps = Vec::new();
    for v in u_basis {
        if acc.insert(v) {
            reps.push(v.clone());
        }
    }
    debug_assert_eq!(acc.dim(), u.dim());
    debug_assert_eq!(reps.len(), u.dim() - w_dim);
    Ok(reps)
}

// ---------------------------------------------------------------------------
// Polynomials (dense, low-to-high coefficients) and characteristic polynomials
// ---------------------------------------------------------------------------

pub type Poly = Vec<Scalar>;

pub fn poly_trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn poly_deg(p: &Poly) -> Option<usize> {
    let mut d = None;
    for (i, c) in p.iter().enumerate() {
        if !c.is_zero() {
            d = Some(i);
        }
    }
    d
}

pub fn poly_is_zero(p: &Poly) -> bool {
    poly_deg(p).is_none()
}

fn poly_monic(p: &Poly) -> Poly {
    let Some(d) = poly_deg(p) else { return Vec::new() };
    let inv = p[d].inv().expect("leading coefficient nonzero");
    p[..=d].iter().map(|c| c.mul(&inv)).collect()
}

/// Quotient and remainder of monic-capable division.
pub fn poly_divmod(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let db = poly_deg(b).expect("division by zero polynomial");
    let f = b[db].field();
    let mut rem = a.clone();
    poly_trim(&mut rem);
    if rem.len() < db + 1 {
        return (Vec::new(), rem);
    }
    let mut quo = vec![f.zero(); rem.len() - db];
    let lead_inv = b[db].inv().expect("nonzero lead");
    while let Some(da) = poly_deg(&rem) {
        if da < db {
            break;
        }
        let c = rem[da].mul(&lead_inv);
        quo[da - db] = c.clone();
        for i in 0..=db {
            rem[da - db + i] = rem[da - db + i].sub(&c.mul(&b[i]));
        }
        poly_trim(&mut rem);
    }
    (quo, rem)
}

pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let mut x = a.clone();
    let mut y = b.clone();
    poly_trim(&mut x);
    poly_trim(&mut y);
    while !poly_is_zero(&y) {
        let (_, r) = poly_divmod(&x, &y);
        x = y;
        y = r;
    }
    poly_monic(&x)
}

pub fn poly_derivative(p: &Poly, field: Field) -> Poly {
    let mut out = Vec::new();
    for (i, c) in p.iter().enumerate().skip(1) {
        out.push(c.mul(&field.from_i64(i as i64)));
    }
    poly_trim(&mut out);
    out
}

/// Squarefree part (the radical: product of the distinct irreducible
/// factors) of a polynomial. Correct in characteristic p over the prime
/// field: factors with multiplicity divisible by p hide inside gcd(f, f')
/// and are recovered through the Frobenius (`u(t^p) = u(t)^p` over F_p).
pub fn poly_squarefree_part(p: &Poly, field: Field) -> Poly {
    let f = poly_monic(p);
    if poly_deg(&f).unwrap_or(0) <= 1 {
        return f;
    }
    let df = poly_derivative(&f, field);
    if poly_is_zero(&df) {
        // f = u(t^p); over the prime field u's coefficients are their own
        // p-th roots, so radical(f) = radical(u).
        let Field::Fp(pr) = field else { unreachable!("zero derivative in char 0") };
        let pr = pr as usize;
        let mut u = Vec::new();
        for (i, c) in f.iter().enumerate() {
            if i % pr == 0 {
                u.push(c.clone());
            } else {
                debug_assert!(c.is_zero());
            }
        }
        poly_trim(&mut u);
        return poly_squarefree_part(&u, field);
    }
    let g = poly_gcd(&f, &df);
    if poly_deg(&g).unwrap_or(0) == 0 {
        return f;
    }
    // w carries each factor of multiplicity not divisible by p exactly once
    let (w, r) = poly_divmod(&f, &g);
    debug_assert!(poly_is_zero(&r));
    let w = poly_monic(&w);
    // strip w's factors out of g entirely; the leftover is a p-th power
    let mut s = g;
    loop {
        let d = poly_gcd(&s, &w);
        if poly_deg(&d).unwrap_or(0) == 0 {
            break;
        }
        let (q, r2) = poly_divmod(&s, &d);
        debug_assert!(poly_is_zero(&r2));
        s = q;
    }
    if poly_deg(&s).unwrap_or(0) == 0 {
        return w;
    }
    let rest = poly_squarefree_part(&s, field);
    // factor sets of w and rest are disjoint by construction
    let mut prod = vec![field.zero(); w.len() + rest.len() - 1];
    for (i, a) in w.iter().enumerate() {
        for (j, b) in rest.iter().enumerate() {
            prod[i + j] = prod[i + j].add(&a.mul(b));
        }
    }
    prod
}

/// Characteristic polynomial via the Berkowitz algorithm (division-free,
/// deterministic, any field). Returns monic coefficients low-to-high.
pub fn char_poly(a: &Matrix) -> Poly {
    assert_eq!(a.rows, a.cols);
    let n = a.rows;
    let f = a.field;
    if n == 0 {
        return vec![f.one()];
    }
    // c: coefficients of char poly of leading principal minor, high-to-low
    let mut c: Vec<Scalar> = vec![f.one(), a.get(0, 0).neg()];
    for r in 1..n {
        // R = row (a_{r,0..r}), S = col (a_{0..r,r}), M = leading r x r block
        let s: Vec<Scalar> = (0..r).map(|i| a.get(i, r).clone()).collect();
        let row: Vec<Scalar> = (0..r).map(|j| a.get(r, j).clone()).collect();
        // sequence: 1, -a_rr, -(R S), -(R M S), -(R M^2 S), ...
        let mut seq = vec![f.one(), a.get(r, r).neg()];
        let mut cur = s.clone();
        for _ in 0..r {
            let dot = row.iter().zip(&cur).fold(f.zero(), |acc, (x, y)| acc.add(&x.mul(y)));
            seq.push(dot.neg());
            // cur = M * cur
            let mut next = vec![f.zero(); r];
            for i in 0..r {
                for k in 0..r {
                    let m = a.get(i, k);
                    if !m.is_zero() && !cur[k].is_zero() {
                        next[i] = next[i].add(&m.mul(&cur[k]));
                    }
                }
            }
            cur = next;
        }
        // Toeplitz multiply: new_c[i] = sum_j seq[i - j] * c[j]
        let mut new_c = vec![f.zero(); r + 2];
        for (i, nc) in new_c.iter_mut().enumerate() {
            for (j, cj) in c.iter().enumerate() {
                if i >= j && i - j < seq.len() && !cj.is_zero() {
                    *nc = nc.add(&seq[i - j].mul(cj));
                }
            }
        }
        c = new_c;
    }
    c.reverse(); // low-to-high
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    fn m(field: Field, rows: usize, cols: usize, e: &[i64]) -> Matrix {
        Matrix::from_fn(field, rows, cols, |i, j| field.from_i64(e[i * cols + j]))
    }

    #[test]
    fn rank_identity() {
        assert_eq!(Matrix::identity(q(), 3).rank(), 3);
    }

    #[test]
    fn rank_dependent_rows() {
        assert_eq!(m(q(), 2, 2, &[1, 2, 2, 4]).rank(), 1);
        assert_eq!(m(Field::Fp(2), 2, 2, &[1, 1, 1, 1]).rank(), 1);
    }

    #[test]
    fn rank_plus_nullity() {
        let a = m(q(), 3, 4, &[1, 2, 3, 4, 0, 1, 1, 0, 1, 3, 4, 4]);
        let r = a.rank();
        let k = a.left_kernel();
        assert_eq!(r + k.len(), 3);
        for v in &k {
            assert!(vec_is_zero(&a.apply(v)));
        }
    }

    #[test]
    fn solve_left_consistent() {
        let a = m(q(), 2, 3, &[1, 0, 2, 0, 1, 1]);
        let b: Vec<_> = [3, 4, 10].iter().map(|&x| q().from_i64(x)).collect();
        let x = a.solve_left(&b).unwrap();
        assert_eq!(a.apply(&x), b);
        let bad: Vec<_> = [0, 0, 1].iter().map(|&x| q().from_i64(x)).collect();
        assert!(a.solve_left(&bad).is_none());
    }

    #[test]
    fn subspace_quotient() {
        let f = q();
        let e = |i: usize| -> Vector {
            (0..3).map(|j| f.from_i64((i == j) as i64)).collect()
        };
        let u = vec![e(0), e(1), e(2)];
        let w = vec![vec_add(&e(0), &e(1))];
        let reps = quotient_basis(f, 3, &u, &w).unwrap();
        assert_eq!(reps.len(), 2);
        // containment violation
        let w_bad = vec![e(0)];
        assert!(quotient_basis(f, 3, &[e(1)], &w_bad).is_err());
    }

    #[test]
    fn subspace_coords_roundtrip() {
        let f = Field::Fp(5);
        let mut s = Subspace::new(f, 4);
        let v1: Vector = [1, 2, 0, 3].iter().map(|&x| f.from_i64(x)).collect();
        let v2: Vector = [0, 1, 1, 1].iter().map(|&x| f.from_i64(x)).collect();
        assert!(s.insert(&v1));
        assert!(s.insert(&v2));
        assert!(!s.insert(&vec_add(&v1, &v2)));
        let target = vec_add(&vec_scale(&v1, &f.from_i64(2)), &v2);
        let coords = s.coords(&target).unwrap();
        let mut rebuilt = vec![f.zero(); 4];
        for (c, b) in coords.iter().zip(s.basis()) {
            rebuilt = vec_add(&rebuilt, &vec_scale(b, c));
        }
        assert_eq!(rebuilt, target);
    }

    #[test]
    fn char_poly_companion() {
        // companion matrix of t^3 - 2t - 5
        let a = m(q(), 3, 3, &[0, 1, 0, 0, 0, 1, 5, 2, 0]);
        let p = char_poly(&a);
        let expect: Vec<_> = [-5, -2, 0, 1].iter().map(|&c| q().from_i64(c)).collect();
        assert_eq!(p, expect);
    }

    #[test]
    fn char_poly_nilpotent_and_identity() {
        let n = m(q(), 2, 2, &[0, 1, 0, 0]);
        assert_eq!(char_poly(&n), vec![q().zero(), q().zero(), q().one()]);
        let i = Matrix::identity(Field::Fp(3), 2);
        // (t-1)^2 = t^2 - 2t + 1 = t^2 + t + 1 mod 3
        let f = Field::Fp(3);
        assert_eq!(char_poly(&i), vec![f.one(), f.one(), f.one()]);
    }

    #[test]
    fn squarefree_part_char_p() {
        let f = Field::Fp(2);
        // (t-1)^2 = t^2 + 1 over F_2: derivative vanishes, radical = t + 1
        let p: Poly = vec![f.one(), f.zero(), f.one()];
        assert_eq!(poly_squarefree_part(&p, f), vec![f.one(), f.one()]);
        // (t)^2 (t+1) over F_2: multiplicity of t is p -> hidden in gcd
        // t^2(t+1) = t^3 + t^2
        let p2: Poly = vec![f.zero(), f.zero(), f.one(), f.one()];
        let sf = poly_squarefree_part(&p2, f);
        // radical = t(t+1) = t^2 + t
        assert_eq!(sf, vec![f.zero(), f.one(), f.one()]);
        // char 0 sanity: (t-2)^3 -> t - 2
        let fq = Field::Rationals;
        let mut cube: Poly = vec![fq.one()];
        for _ in 0..3 {
            // multiply by (t - 2)
            let mut nxt = vec![fq.zero(); cube.len() + 1];
            for (i, c) in cube.iter().enumerate() {
                nxt[i + 1] = nxt[i + 1].add(c);
                nxt[i] = nxt[i].sub(&c.mul(&fq.from_i64(2)));
            }
            cube = nxt;
        }
        assert_eq!(poly_squarefree_part(&cube, fq), vec![fq.from_i64(-2), fq.one()]);
    }

    #[test]
    fn deterministic_kernel_basis() {
        let a = m(q(), 3, 3, &[1, 2, 3, 2, 4, 6, 0, 0, 1]);
        assert_eq!(a.left_kernel(), a.left_kernel());
    }
}
