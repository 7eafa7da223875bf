//! Exact linear algebra over a [`Field`].

use num_bigint::BigInt;
use num_traits::Zero;

use crate::field::Field;

/// A subspace of `F^n` held as rows in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F: Field> {
    field: F,
    dim: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(field: F, dim: usize) -> Self {
        EchelonBasis { field, dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors<'a, I>(field: F, dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a Vec<F::Elem>>,
        F::Elem: 'a,
    {
        let mut b = EchelonBasis::new(field, dim);
        for v in vectors {
            b.insert(v.clone());
        }
        b
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
        let f = &self.field;
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&v[c]) {
                continue;
            }
            let coef = v[c].clone();
            for (x, r) in v.iter_mut().zip(row).skip(c) {
                if !f.is_zero(r) {
                    *x = f.sub(x, &f.mul(&coef, r));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v.to_vec()).iter().all(|x| self.field.is_zero(x))
    }

    /// Add `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        let f = self.field.clone();
        let mut v = self.reduce(v);
        let Some(c) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[c]).expect("nonzero pivot");
        for x in v.iter_mut().skip(c) {
            *x = f.mul(x, &inv);
        }
        for row in &mut self.rows {
            if f.is_zero(&row[c]) {
                continue;
            }
            let coef = row[c].clone();
            for (x, r) in row.iter_mut().zip(&v).skip(c) {
                if !f.is_zero(r) {
                    *x = f.sub(x, &f.mul(&coef, r));
                }
            }
        }
        let pos = self.pivots.partition_point(|&p| p < c);
        self.pivots.insert(pos, c);
        self.rows.insert(pos, v);
        true
    }

    /// Coordinates of a vector known to lie in the span, relative to [`Self::rows`].
    pub fn coordinates(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.pivots.iter().map(|&c| v[c].clone()).collect()
    }
}

/// Rank of a list of vectors.
pub fn rank<F: Field>(field: &F, dim: usize, rows: &[Vec<F::Elem>]) -> usize {
    EchelonBasis::from_vectors(field.clone(), dim, rows).rank()
}

/// Solve `A x = b` for square or rectangular `A` given by rows; `None` when inconsistent.
pub fn solve<F: Field>(field: &F, a: &[Vec<F::Elem>], b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let f = field;
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<F::Elem>> = a
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut row = r.clone();
            row.push(x.clone());
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(k) = (r..rows).find(|&k| !f.is_zero(&m[k][c])) else {
            continue;
        };
        m.swap(r, k);
        let inv = f.inv(&m[r][c]).expect("nonzero");
        for x in m[r].iter_mut() {
            *x = f.mul(x, &inv);
        }
        for k in 0..rows {
            if k != r && !f.is_zero(&m[k][c]) {
                let coef = m[k][c].clone();
                let pivot_row = m[r].clone();
                for (x, p) in m[k].iter_mut().zip(&pivot_row) {
                    *x = f.sub(x, &f.mul(&coef, p));
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !f.is_zero(&row[cols])) {
        return None;
    }
    let mut x = f.zeros(cols);
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}

/// Basis of `{x : A x = 0}`.
pub fn nullspace<F: Field>(field: &F, a: &[Vec<F::Elem>], cols: usize) -> Vec<Vec<F::Elem>> {
    let f = field;
    let basis = EchelonBasis::from_vectors(f.clone(), cols, a);
    let free: Vec<usize> = (0..cols).filter(|c| !basis.pivots().contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut x = f.zeros(cols);
            x[fc] = f.one();
            for (row, &pc) in basis.rows().iter().zip(basis.pivots()) {
                x[pc] = f.neg(&row[fc]);
            }
            x
        })
        .collect()
}

/// Product of matrices given by rows.
pub fn mat_mul<F: Field>(field: &F, a: &[Vec<F::Elem>], b: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            let mut out = field.zeros(cols);
            for (x, brow) in row.iter().zip(b) {
                if field.is_zero(x) {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(brow) {
                    field.mul_add_assign(o, x, y);
                }
            }
            out
        })
        .collect()
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..nrows).find(|&k| !m[k][c].is_zero()) else {
            continue;
        };
        m.swap(r, k);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
        if r == nrows {
            break;
        }
    }
    r
}
