//! Dense integer matrices, Smith normal form, and finitely generated
//! abelian group (lattice) computations built on it.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from(*v);
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = &self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * &other[(l, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
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

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self[(a, j)].clone();
            self[(a, j)] = v;
        }
    }

    /// row[a] += q * row[b]
    fn add_row(&mut self, a: usize, b: usize, q: &BigInt) {
        for j in 0..self.cols {
            let t = q * &self[(b, j)];
            self[(a, j)] += t;
        }
    }

    /// col[a] += q * col[b]
    fn add_col(&mut self, a: usize, b: usize, q: &BigInt) {
        for i in 0..self.rows {
            let t = q * &self[(i, b)];
            self[(i, a)] += t;
        }
    }
}

impl core::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        &self.data[r * self.cols + c]
    }
}

impl core::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        &mut self.data[r * self.cols + c]
    }
}

/// U * A * V = D with D diagonal, d_i | d_{i+1}, U and V unimodular.
/// `vinv` is maintained alongside V for lattice computations.
pub struct SmithNormalForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub vinv: IntMatrix,
}

impl SmithNormalForm {
    /// Diagonal entries, including zeros, length min(rows, cols).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }
}

/// Elementary row/column reduction with the pivot chosen as the smallest
/// nonzero absolute value in the remaining block.
pub fn smith_normal_form(a: &IntMatrix) -> SmithNormalForm {
    let mut b = a.clone();
    let mut u = IntMatrix::identity(a.rows);
    let mut v = IntMatrix::identity(a.cols);
    let mut vinv = IntMatrix::identity(a.cols);

    let n = a.rows.min(a.cols);
    for t in 0..n {
        'pivot: loop {
            // smallest nonzero |entry| in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..b.rows {
                for j in t..b.cols {
                    if b[(i, j)].is_zero() {
                        continue;
                    }
                    match best {
                        None => best = Some((i, j)),
                        Some((bi, bj)) => {
                            if b[(i, j)].abs() < b[(bi, bj)].abs() {
                                best = Some((i, j));
                            }
                        }
                    }
                }
            }
            let (pi, pj) = match best {
                None => return SmithNormalForm { d: b, u, v, vinv },
                Some(p) => p,
            };
            b.swap_rows(t, pi);
            u.swap_rows(t, pi);
            b.swap_cols(t, pj);
            v.swap_cols(t, pj);
            vinv.swap_rows(t, pj);
            if b[(t, t)].is_negative() {
                b.negate_row(t);
                u.negate_row(t);
            }

            let mut dirty = false;
            for i in t + 1..b.rows {
                if b[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&b[(i, t)] / &b[(t, t)]);
                if !q.is_zero() {
                    b.add_row(i, t, &q);
                    u.add_row(i, t, &q);
                }
                if !b[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..b.cols {
                if b[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&b[(t, j)] / &b[(t, t)]);
                if !q.is_zero() {
                    b.add_col(j, t, &q);
                    v.add_col(j, t, &q);
                    vinv.add_row(t, j, &(-q));
                }
                if !b[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot;
            }

            // enforce divisibility of the trailing block by the pivot
            let mut fixed = true;
            'div: for i in t + 1..b.rows {
                for j in t + 1..b.cols {
                    if !(&b[(i, j)] % &b[(t, t)]).is_zero() {
                        let one = BigInt::one();
                        b.add_row(t, i, &one);
                        u.add_row(t, i, &one);
                        fixed = false;
                        break 'div;
                    }
                }
            }
            if fixed {
                break 'pivot;
            }
        }
    }
    SmithNormalForm { d: b, u, v, vinv }
}

/// Solves x * a = b over the integers, if a solution exists.
pub fn solve_left(a: &IntMatrix, snf: &SmithNormalForm, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(b.len(), a.cols);
    // x a = b  <=>  (x u^-1) d = b v  with z = x u^-1, x = z u
    let bv = IntMatrix::from_rows(vec![b.to_vec()]).mul(&snf.v);
    let n = a.rows.min(a.cols);
    let mut z = vec![BigInt::zero(); a.rows];
    for j in 0..a.cols {
        let target = &bv[(0, j)];
        if j < n && !snf.d[(j, j)].is_zero() {
            let (q, r) = target.div_rem(&snf.d[(j, j)]);
            if !r.is_zero() {
                return None;
            }
            z[j] = q;
        } else if !target.is_zero() {
            return None;
        }
    }
    let x = IntMatrix::from_rows(vec![z]).mul(&snf.u);
    Some(x.row(0).to_vec())
}

/// Basis for { x : x * a = 0 }, as rows.
pub fn left_kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(a);
    let n = a.rows.min(a.cols);
    let mut rows = Vec::new();
    for i in 0..a.rows {
        let zero_diag = i >= n || snf.d[(i, i)].is_zero();
        if zero_diag {
            rows.push(snf.u.row(i).to_vec());
        }
    }
    rows
}

/// A finitely generated subgroup of Z^n / (moduli), described by generators.
/// `moduli[j] = 0` would mean a free coordinate; all uses here are finite.
pub struct Lattice {
    /// Square basis matrix of the lattice, rows are basis vectors.
    pub basis: IntMatrix,
}

/// Full-rank lattice spanned by the generator rows together with the
/// coordinate moduli m_j e_j. Fails if the span is not full rank, which
/// cannot happen when all moduli are nonzero.
pub fn lattice_from_generators(gens: &[Vec<BigInt>], moduli: &[BigInt]) -> Result<Lattice> {
    let n = moduli.len();
    let mut rows: Vec<Vec<BigInt>> = gens.to_vec();
    for (j, m) in moduli.iter().enumerate() {
        let mut r = vec![BigInt::zero(); n];
        r[j] = m.clone();
        rows.push(r);
    }
    let g = IntMatrix::from_rows(rows);
    let snf = smith_normal_form(&g);
    let mut basis_rows = Vec::with_capacity(n);
    for i in 0..n {
        let d = if i < g.rows.min(g.cols) {
            snf.d[(i, i)].clone()
        } else {
            BigInt::zero()
        };
        if d.is_zero() {
            return Err(Error::Internal(alloc::string::String::from(
                "lattice is not full rank",
            )));
        }
        let mut row = snf.vinv.row(i).to_vec();
        for x in row.iter_mut() {
            *x *= &d;
        }
        basis_rows.push(row);
    }
    Ok(Lattice {
        basis: IntMatrix::from_rows(basis_rows),
    })
}

/// Invariant factors and generator representatives of L / M for lattices
/// M <= L of equal full rank. Returns (invariants, representative rows),
/// keeping only the factors with invariant > 1.
pub fn lattice_quotient(l: &Lattice, m_gens: &[Vec<BigInt>]) -> Result<(Vec<BigInt>, Vec<Vec<BigInt>>)> {
    let n = l.basis.rows;
    let snf_basis = smith_normal_form(&l.basis);
    let mut coord_rows = Vec::with_capacity(m_gens.len());
    for g in m_gens {
        let y = solve_left(&l.basis, &snf_basis, g)
            .ok_or_else(|| Error::Internal(alloc::string::String::from("subgroup not inside lattice")))?;
        coord_rows.push(y);
    }
    let c = IntMatrix::from_rows(coord_rows);
    let snf = smith_normal_form(&c);
    let newbasis = snf.vinv.mul(&l.basis);
    let mut invariants = Vec::new();
    let mut reps = Vec::new();
    for i in 0..n {
        let d = if i < c.rows.min(c.cols) {
            snf.d[(i, i)].clone()
        } else {
            BigInt::zero()
        };
        if d.is_zero() {
            return Err(Error::Internal(alloc::string::String::from(
                "infinite quotient in lattice computation",
            )));
        }
        if d > BigInt::one() {
            invariants.push(d);
            reps.push(newbasis.row(i).to_vec());
        }
    }
    Ok((invariants, reps))
}

/// Membership of a vector in the lattice spanned by the generator rows plus
/// moduli; on success returns coefficients for the generator rows only.
pub fn express_in_generators(
    gens: &[Vec<BigInt>],
    moduli: &[BigInt],
    target: &[BigInt],
) -> Option<Vec<BigInt>> {
    let n = moduli.len();
    let mut rows: Vec<Vec<BigInt>> = gens.to_vec();
    for (j, m) in moduli.iter().enumerate() {
        let mut r = vec![BigInt::zero(); n];
        r[j] = m.clone();
        rows.push(r);
    }
    let g = IntMatrix::from_rows(rows);
    let snf = smith_normal_form(&g);
    let x = solve_left(&g, &snf, target)?;
    Some(x[..gens.len()].to_vec())
}
