//! Dense matrices over a finite field. All entries are element codes of one
//! fixed field, passed explicitly to every operation.

use alloc::vec;
use alloc::vec::Vec;

use super::ff::FiniteField;
use super::poly::{self, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl FMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        FMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<u64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        FMat { rows: r, cols: c, data }
    }

    pub fn scalar(n: usize, c: u64) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = c;
        }
        m
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self[(i, j)] == u64::from(i == j)))
    }

    pub fn mul(&self, k: &FiniteField, other: &FMat) -> FMat {
        assert_eq!(self.cols, other.rows);
        let mut out = FMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self[(i, l)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other[(l, j)];
                    if b == 0 {
                        continue;
                    }
                    out[(i, j)] = k.add(out[(i, j)], k.mul(a, b));
                }
            }
        }
        out
    }

    pub fn add(&self, k: &FiniteField, other: &FMat) -> FMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.data.len() {
            out.data[i] = k.add(out.data[i], other.data[i]);
        }
        out
    }

    pub fn sub(&self, k: &FiniteField, other: &FMat) -> FMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.data.len() {
            out.data[i] = k.sub(out.data[i], other.data[i]);
        }
        out
    }

    pub fn scale(&self, k: &FiniteField, c: u64) -> FMat {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x = k.mul(*x, c);
        }
        out
    }

    pub fn transpose(&self) -> FMat {
        let mut out = FMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn pow(&self, k: &FiniteField, mut e: u64) -> FMat {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = FMat::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(k, &base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(k, &base);
            }
        }
        acc
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, k: &FiniteField, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![0u64; self.cols];
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for j in 0..self.cols {
                let a = self[(i, j)];
                if a != 0 {
                    out[j] = k.add(out[j], k.mul(c, a));
                }
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self, k: &FiniteField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let pivot_row = (r..self.rows).find(|&i| self[(i, c)] != 0);
            let pi = match pivot_row {
                None => continue,
                Some(pi) => pi,
            };
            for j in 0..self.cols {
                self.data.swap(r * self.cols + j, pi * self.cols + j);
            }
            let inv = k.inv(self[(r, c)]);
            for j in 0..self.cols {
                self[(r, j)] = k.mul(self[(r, j)], inv);
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)] == 0 {
                    continue;
                }
                let f = self[(i, c)];
                for j in 0..self.cols {
                    let t = k.mul(f, self[(r, j)]);
                    self[(i, j)] = k.sub(self[(i, j)], t);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, k: &FiniteField) -> usize {
        let mut m = self.clone();
        m.rref(k).len()
    }

    /// Basis of { v : A v = 0 }, vectors as rows of the result.
    pub fn nullspace(&self, k: &FiniteField) -> Vec<Vec<u64>> {
        let mut m = self.clone();
        let pivots = m.rref(k);
        let mut basis = Vec::new();
        let mut piv_iter = pivots.iter().copied().collect::<Vec<_>>();
        piv_iter.sort_unstable();
        for free in 0..self.cols {
            if piv_iter.binary_search(&free).is_ok() {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = k.neg(m[(r, free)]);
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of { x : x A = 0 }.
    pub fn left_nullspace(&self, k: &FiniteField) -> Vec<Vec<u64>> {
        self.transpose().nullspace(k)
    }

    pub fn inverse(&self, k: &FiniteField) -> Option<FMat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = FMat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = 1;
        }
        let pivots = aug.rref(k);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut out = FMat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = aug[(i, n + j)];
            }
        }
        Some(out)
    }

    /// Evaluates a polynomial at the matrix.
    pub fn eval_poly(&self, k: &FiniteField, f: &Poly) -> FMat {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut acc = FMat::zero(n, n);
        for &c in f.iter().rev() {
            acc = acc.mul(k, self);
            if c != 0 {
                acc = acc.add(k, &FMat::scalar(n, c));
            }
        }
        acc
    }

    /// Characteristic polynomial via Hessenberg reduction, monic, ascending.
    pub fn charpoly(&self, k: &FiniteField) -> Poly {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return vec![1];
        }
        let mut h = self.clone();
        // similarity reduction to upper Hessenberg form
        for c in 0..n.saturating_sub(2) {
            let pivot = (c + 1..n).find(|&i| h[(i, c)] != 0);
            let pi = match pivot {
                None => continue,
                Some(p) => p,
            };
            if pi != c + 1 {
                for j in 0..n {
                    h.data.swap((c + 1) * n + j, pi * n + j);
                }
                for i in 0..n {
                    h.data.swap(i * n + c + 1, i * n + pi);
                }
            }
            let inv = k.inv(h[(c + 1, c)]);
            for i in c + 2..n {
                let f = k.mul(h[(i, c)], inv);
                if f == 0 {
                    continue;
                }
                // row_i -= f * row_{c+1}; col_{c+1} += f * col_i
                for j in 0..n {
                    let t = k.mul(f, h[(c + 1, j)]);
                    h[(i, j)] = k.sub(h[(i, j)], t);
                }
                for i2 in 0..n {
                    let t = k.mul(f, h[(i2, i)]);
                    h[(i2, c + 1)] = k.add(h[(i2, c + 1)], t);
                }
            }
        }
        // recurrence on leading principal characteristic polynomials
        let mut polys: Vec<Poly> = vec![vec![1]];
        for m in 1..=n {
            // (x - h[m-1][m-1]) * p_{m-1}
            let lin = vec![k.neg(h[(m - 1, m - 1)]), 1];
            let mut pm = poly::mul(k, &lin, &polys[m - 1]);
            let mut subdiag = 1u64;
            for i in 1..m {
                subdiag = k.mul(subdiag, h[(m - i, m - i - 1)]);
                if subdiag == 0 {
                    break;
                }
                let coef = k.mul(h[(m - 1 - i, m - 1)], subdiag);
                if coef == 0 {
                    continue;
                }
                let term = poly::scale(k, &polys[m - 1 - i], coef);
                pm = poly::sub(k, &pm, &term);
            }
            polys.push(pm);
        }
        polys.pop().unwrap()
    }
}

impl core::ops::Index<(usize, usize)> for FMat {
    type Output = u64;
    fn index(&self, (r, c): (usize, usize)) -> &u64 {
        &self.data[r * self.cols + c]
    }
}

impl core::ops::IndexMut<(usize, usize)> for FMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut u64 {
        &mut self.data[r * self.cols + c]
    }
}

/// Row-echelon span with online insertion, used for spinning vectors.
pub struct RowSpan {
    pub basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl RowSpan {
    pub fn new() -> Self {
        RowSpan {
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Reduces v against the basis; if a nonzero remainder survives it is
    /// normalized, inserted, and true is returned.
    pub fn insert(&mut self, k: &FiniteField, mut v: Vec<u64>) -> bool {
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if v[p] != 0 {
                let f = v[p];
                for (x, y) in v.iter_mut().zip(b.iter()) {
                    *x = k.sub(*x, k.mul(f, *y));
                }
            }
        }
        if let Some(p) = v.iter().position(|&x| x != 0) {
            let inv = k.inv(v[p]);
            for x in v.iter_mut() {
                *x = k.mul(*x, inv);
            }
            self.basis.push(v);
            self.pivots.push(p);
            true
        } else {
            false
        }
    }
}
