//! Dense square matrices over a [`FieldCtx`], entries stored packed and row-major.

use std::fmt::Write as _;

use crate::error::FieldError;
use crate::field::{format_element, FieldCtx};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    dim: usize,
    entries: Vec<u32>,
}

pub(crate) fn mul_slices(ctx: &FieldCtx, d: usize, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; d * d];
    for i in 0..d {
        for k in 0..d {
            let x = a[i * d + k];
            if x == 0 {
                continue;
            }
            for j in 0..d {
                let y = b[k * d + j];
                if y != 0 {
                    out[i * d + j] = ctx.add(out[i * d + j], ctx.mul(x, y));
                }
            }
        }
    }
    out
}

impl Matrix {
    pub fn new(dim: usize, entries: Vec<u32>) -> Self {
        assert_eq!(entries.len(), dim * dim, "matrix entry count");
        Matrix { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        Matrix { dim, entries }
    }

    pub fn from_ints(ctx: &FieldCtx, rows: &[&[i64]]) -> Self {
        let dim = rows.len();
        let entries = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), dim, "matrix must be square");
                r.iter().map(|&v| ctx.from_int(v))
            })
            .collect();
        Matrix { dim, entries }
    }

    /// Diagonal matrix with the given packed entries.
    pub fn diagonal(diag: &[u32]) -> Self {
        let dim = diag.len();
        let mut m = Matrix::new(dim, vec![0; dim * dim]);
        for (i, &v) in diag.iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.entries[r * self.dim + c] = v;
    }

    pub fn mul(&self, other: &Matrix, ctx: &FieldCtx) -> Matrix {
        assert_eq!(self.dim, other.dim);
        Matrix {
            dim: self.dim,
            entries: mul_slices(ctx, self.dim, &self.entries, &other.entries),
        }
    }

    pub fn pow(&self, mut e: u64, ctx: &FieldCtx) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.dim);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, ctx);
            }
            base = base.mul(&base, ctx);
            e >>= 1;
        }
        acc
    }

    /// `M v` for a column vector `v`.
    pub fn apply(&self, v: &[u32], ctx: &FieldCtx) -> Vec<u32> {
        (0..self.dim)
            .map(|i| (0..self.dim).fold(0, |acc, j| ctx.add(acc, ctx.mul(self.get(i, j), v[j]))))
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        let d = self.dim;
        let mut out = self.clone();
        for i in 0..d {
            for j in 0..d {
                out.entries[j * d + i] = self.entries[i * d + j];
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(u32) -> u32) -> Matrix {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn scale(&self, lambda: u32, ctx: &FieldCtx) -> Matrix {
        self.map(|v| ctx.mul(lambda, v))
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.dim)
    }

    /// Determinant and inverse by Gauss-Jordan elimination.
    fn eliminate(&self, ctx: &FieldCtx) -> (u32, Option<Matrix>) {
        let d = self.dim;
        let mut a = self.entries.clone();
        let mut inv = Matrix::identity(d).entries;
        let mut det = 1u32;
        for col in 0..d {
            let Some(piv) = (col..d).find(|&r| a[r * d + col] != 0) else {
                return (0, None);
            };
            if piv != col {
                for j in 0..d {
                    a.swap(piv * d + j, col * d + j);
                    inv.swap(piv * d + j, col * d + j);
                }
                det = ctx.neg(det);
            }
            let pv = a[col * d + col];
            det = ctx.mul(det, pv);
            let pinv = ctx.inv(pv).expect("nonzero pivot");
            for j in 0..d {
                a[col * d + j] = ctx.mul(a[col * d + j], pinv);
                inv[col * d + j] = ctx.mul(inv[col * d + j], pinv);
            }
            for r in 0..d {
                let f = a[r * d + col];
                if r == col || f == 0 {
                    continue;
                }
                for j in 0..d {
                    a[r * d + j] = ctx.sub(a[r * d + j], ctx.mul(f, a[col * d + j]));
                    inv[r * d + j] = ctx.sub(inv[r * d + j], ctx.mul(f, inv[col * d + j]));
                }
            }
        }
        (det, Some(Matrix { dim: d, entries: inv }))
    }

    pub fn det(&self, ctx: &FieldCtx) -> u32 {
        self.eliminate(ctx).0
    }

    pub fn inverse(&self, ctx: &FieldCtx) -> Option<Matrix> {
        self.eliminate(ctx).1
    }

    /// Multiplicative order, giving up after `limit` steps.
    pub fn order(&self, ctx: &FieldCtx, limit: u64) -> Option<u64> {
        let mut cur = self.clone();
        for k in 1..=limit {
            if cur.is_identity() {
                return Some(k);
            }
            cur = cur.mul(self, ctx);
        }
        None
    }

    pub fn format(&self, ctx: &FieldCtx) -> String {
        format_entries(ctx, self.dim, &self.entries)
    }
}

pub(crate) fn format_entries(ctx: &FieldCtx, d: usize, entries: &[u32]) -> String {
    let mut s = String::from("[");
    for i in 0..d {
        if i > 0 {
            s.push(',');
        }
        s.push('[');
        for j in 0..d {
            if j > 0 {
                s.push(',');
            }
            s.push_str(&format_element(ctx, entries[i * d + j]));
        }
        s.push(']');
    }
    let _ = write!(s, "]@GF({}^{})", ctx.characteristic(), ctx.degree());
    s
}

/// Companion matrix of a monic polynomial (constant term first): ones on the
/// subdiagonal and the negated coefficients in the last column.
pub fn companion_matrix(ctx: &FieldCtx, poly: &[u32]) -> Result<Matrix, FieldError> {
    if poly.len() < 2 || *poly.last().unwrap() != 1 {
        return Err(FieldError::NotMonic);
    }
    let r = poly.len() - 1;
    let mut m = Matrix::new(r, vec![0; r * r]);
    for i in 1..r {
        m.set(i, i - 1, 1);
    }
    for (i, &c) in poly[..r].iter().enumerate() {
        m.set(i, r - 1, ctx.neg(c));
    }
    Ok(m)
}
