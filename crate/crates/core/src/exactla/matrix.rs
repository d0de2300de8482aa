//! Sparse matrices over a single coefficient field.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::field::Field;
use super::{Rational, Scalar};
use crate::{Error, Result};

/// A sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Sparse matrix stored by rows. Every entry lives in `field`.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    nrows: usize,
    ncols: usize,
    field: Field,
    rows: Vec<SparseVec>,
}

pub(crate) fn check_field(expected: &Field, s: &Scalar) -> Result<()> {
    match s {
        Scalar::Rational(_) => Ok(()),
        Scalar::Algebraic(_) => {
            let f = s.field();
            if &f == expected {
                Ok(())
            } else {
                Err(Error::DescriptorMismatch {
                    left: expected.to_string(),
                    right: f.to_string(),
                })
            }
        }
    }
}

/// Adds `coef * w` into `v` (both sorted sparse vectors).
pub(crate) fn axpy(v: &SparseVec, coef: &Scalar, w: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        let take_v = j >= w.len() || (i < v.len() && v[i].0 < w[j].0);
        let take_w = i >= v.len() || (j < w.len() && w[j].0 < v[i].0);
        if take_v {
            out.push(v[i].clone());
            i += 1;
        } else if take_w {
            out.push((w[j].0, coef * &w[j].1));
            j += 1;
        } else {
            let s = &v[i].1 + &(coef * &w[j].1);
            if !s.is_zero() {
                out.push((v[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub(crate) fn scale_vec(v: &SparseVec, c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * c)).collect()
}

/// Dot product of a sparse and a dense vector.
pub(crate) fn dot_dense(v: &SparseVec, w: &[Scalar], field: &Field) -> Scalar {
    let mut acc = field.zero();
    for (i, x) in v {
        if !w[*i].is_zero() {
            acc = &acc + &(x * &w[*i]);
        }
    }
    acc
}

impl Matrix {
    pub fn zeros(field: Field, nrows: usize, ncols: usize) -> Self {
        Matrix { nrows, ncols, field, rows: vec![Vec::new(); nrows] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let one = field.one();
        Matrix {
            nrows: n,
            ncols: n,
            rows: (0..n).map(|i| vec![(i, one.clone())]).collect(),
            field,
        }
    }

    /// Builds a matrix from `(row, col, value)` triplets; repeated positions
    /// are summed and zeros dropped.
    pub fn from_triplets<I>(field: Field, nrows: usize, ncols: usize, triplets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut t: Vec<(usize, usize, Scalar)> = triplets.into_iter().collect();
        for (r, c, v) in &t {
            if *r >= nrows || *c >= ncols {
                return Err(Error::Validation(format!(
                    "entry ({r}, {c}) outside a {nrows}x{ncols} matrix"
                )));
            }
            check_field(&field, v)?;
        }
        t.sort_by_key(|a| (a.0, a.1));
        let mut rows: Vec<SparseVec> = vec![Vec::new(); nrows];
        let mut iter = t.into_iter().peekable();
        while let Some((r, c, mut v)) = iter.next() {
            while let Some((r2, c2, _)) = iter.peek() {
                if *r2 == r && *c2 == c {
                    v = &v + &iter.next().unwrap().2;
                } else {
                    break;
                }
            }
            if !v.is_zero() {
                rows[r].push((c, v));
            }
        }
        Ok(Matrix { nrows, ncols, field, rows })
    }

    /// Rational matrix from integer-valued triplets.
    pub fn from_int_triplets<I>(nrows: usize, ncols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        Self::from_triplets(
            Field::Rational,
            nrows,
            ncols,
            triplets
                .into_iter()
                .map(|(r, c, v)| (r, c, Scalar::Rational(Rational::from_integer(v)))),
        )
        .expect("rational triplets are always valid")
    }

    pub fn from_dense(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch { expected: ncols, found: bad.len() });
        }
        let triplets = rows
            .into_iter()
            .enumerate()
            .flat_map(|(i, r)| r.into_iter().enumerate().map(move |(j, v)| (i, j, v)));
        Self::from_triplets(field, nrows, ncols, triplets)
    }

    pub fn from_rationals(rows: &[Vec<Rational>]) -> Self {
        Self::from_dense(
            Field::Rational,
            rows.iter()
                .map(|r| r.iter().cloned().map(Scalar::Rational).collect())
                .collect(),
        )
        .expect("rectangular rational data")
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Self {
        Self::from_rationals(
            &rows
                .iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v)).collect())
                .collect::<Vec<_>>(),
        )
    }

    /// Matrix whose columns are the given sparse vectors.
    pub fn from_columns(field: Field, nrows: usize, cols: &[SparseVec]) -> Result<Self> {
        let triplets = cols
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, v)| (*i, j, v.clone())));
        Self::from_triplets(field, nrows, cols.len(), triplets)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match self.rows[i].binary_search_by_key(&j, |e| e.0) {
            Ok(k) => self.rows[i][k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    /// Iterates over the stored entries as `(row, col, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn transpose(&self) -> Matrix {
        let mut cols: Vec<SparseVec> = vec![Vec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r {
                cols[*j].push((i, v.clone()));
            }
        }
        Matrix { nrows: self.ncols, ncols: self.nrows, field: self.field.clone(), rows: cols }
    }

    /// The columns of the matrix as sparse vectors.
    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().rows
    }

    fn check_same_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::DescriptorMismatch {
                left: self.field.to_string(),
                right: other.field.to_string(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_field(other)?;
        if self.ncols != other.nrows {
            return Err(Error::DimensionMismatch { expected: self.ncols, found: other.nrows });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc: SparseVec = Vec::new();
                for (k, v) in r {
                    acc = axpy(&acc, v, &other.rows[*k]);
                }
                acc
            })
            .collect();
        Ok(Matrix { nrows: self.nrows, ncols: other.ncols, field: self.field.clone(), rows })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.ncols {
            return Err(Error::DimensionMismatch { expected: self.ncols, found: v.len() });
        }
        Ok(self.rows.iter().map(|r| dot_dense(r, v, &self.field)).collect())
    }

    /// Image of a sparse vector.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut dense: Vec<Option<&Scalar>> = vec![None; self.ncols];
        for (k, x) in v {
            dense[*k] = Some(x);
        }
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| {
                let mut acc = self.field.zero();
                for (j, m) in r {
                    if let Some(x) = dense[*j] {
                        acc = &acc + &(m * x);
                    }
                }
                (!acc.is_zero()).then_some((i, acc))
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.lin_comb(&self.field.one(), other, &self.field.one())
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.lin_comb(&self.field.one(), other, &self.field.from_int(-1))
    }

    /// `a * self + b * other`.
    pub fn lin_comb(&self, a: &Scalar, other: &Matrix, b: &Scalar) -> Result<Matrix> {
        self.check_same_field(other)?;
        if (self.nrows, self.ncols) != (other.nrows, other.ncols) {
            return Err(Error::DimensionMismatch {
                expected: self.nrows * self.ncols,
                found: other.nrows * other.ncols,
            });
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(x, y)| axpy(&scale_vec(x, a), b, y))
            .collect();
        Ok(Matrix { nrows: self.nrows, ncols: self.ncols, field: self.field.clone(), rows })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            nrows: self.nrows,
            ncols: self.ncols,
            field: self.field.clone(),
            rows: self.rows.iter().map(|r| scale_vec(r, c)).collect(),
        }
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_field(other)?;
        if self.nrows != other.nrows {
            return Err(Error::DimensionMismatch { expected: self.nrows, found: other.nrows });
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut r = a.clone();
                r.extend(b.iter().map(|(j, v)| (j + self.ncols, v.clone())));
                r
            })
            .collect();
        Ok(Matrix { nrows: self.nrows, ncols: self.ncols + other.ncols, field: self.field.clone(), rows })
    }

    /// `[self ; other]`
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_field(other)?;
        if self.ncols != other.ncols {
            return Err(Error::DimensionMismatch { expected: self.ncols, found: other.ncols });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Matrix { nrows: self.nrows + other.nrows, ncols: self.ncols, field: self.field.clone(), rows })
    }

    /// Restriction to the given rows and columns (in the given order).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut col_pos = vec![usize::MAX; self.ncols];
        for (k, &c) in cols.iter().enumerate() {
            col_pos[c] = k;
        }
        let out = rows
            .iter()
            .map(|&r| {
                let mut v: SparseVec = self.rows[r]
                    .iter()
                    .filter(|(c, _)| col_pos[*c] != usize::MAX)
                    .map(|(c, x)| (col_pos[*c], x.clone()))
                    .collect();
                v.sort_by_key(|e| e.0);
                v
            })
            .collect();
        Matrix { nrows: rows.len(), ncols: cols.len(), field: self.field.clone(), rows: out }
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.nrows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        (0..self.nrows)
            .map(|i| {
                let mut r = vec![self.field.zero(); self.ncols];
                for (j, v) in &self.rows[i] {
                    r[*j] = v.clone();
                }
                r
            })
            .collect()
    }

    /// Dense rational entries; `None` if some entry is irrational.
    pub fn to_rationals(&self) -> Option<Vec<Vec<Rational>>> {
        self.to_dense()
            .into_iter()
            .map(|r| r.iter().map(|s| s.as_rational().cloned()).collect())
            .collect()
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = self.field.zero();
        for i in 0..self.nrows.min(self.ncols) {
            acc = &acc + &self.get(i, i);
        }
        acc
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.nrows, self.ncols, self.field)?;
        if self.nrows * self.ncols <= 400 {
            for r in self.to_dense() {
                let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
                writeln!(f, "  [{}]", cells.join(", "))?;
            }
        }
        Ok(())
    }
}

/// Serializable dense rational matrix, used by the JSON formats.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Rational>>,
}

impl RationalMatrix {
    pub fn to_matrix(&self) -> Result<Matrix> {
        if self.data.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.data.len() });
        }
        if let Some(r) = self.data.iter().find(|r| r.len() != self.cols) {
            return Err(Error::DimensionMismatch { expected: self.cols, found: r.len() });
        }
        let triplets = self.data.iter().enumerate().flat_map(|(i, r)| {
            r.iter().enumerate().map(move |(j, v)| (i, j, Scalar::Rational(v.clone())))
        });
        Matrix::from_triplets(Field::Rational, self.rows, self.cols, triplets)
    }

    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        let data = m
            .to_rationals()
            .ok_or_else(|| Error::Domain("matrix has irrational entries".into()))?;
        Ok(RationalMatrix { rows: m.nrows(), cols: m.ncols(), data })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::cyclotomic_field;

    #[test]
    fn triplets_merge_and_drop_zeros() {
        let m = Matrix::from_int_triplets(2, 2, [(0, 0, 1), (0, 0, -1), (1, 1, 2), (1, 1, 3)]);
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.get(1, 1), Scalar::Rational(Rational::from_integer(5)));
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let f3 = cyclotomic_field(3).unwrap();
        let f4 = cyclotomic_field(4).unwrap();
        let err = Matrix::from_triplets(f3.clone(), 1, 1, [(0, 0, f4.generator())]).unwrap_err();
        assert!(matches!(err, Error::DescriptorMismatch { .. }));
        let a = Matrix::identity(f3, 2);
        let b = Matrix::identity(f4, 2);
        assert!(matches!(a.mul(&b), Err(Error::DescriptorMismatch { .. })));
    }

    #[test]
    fn product_and_stacking() {
        let a = Matrix::from_ints(&[vec![1, 2], vec![0, 1]]);
        let b = Matrix::from_ints(&[vec![1, -2], vec![0, 1]]);
        assert_eq!(a.mul(&b).unwrap(), Matrix::identity(Field::Rational, 2));
        let h = a.hstack(&b).unwrap();
        assert_eq!((h.nrows(), h.ncols()), (2, 4));
        assert_eq!(h.get(0, 3), Scalar::Rational(Rational::from_integer(-2)));
        assert_eq!(a.vstack(&b).unwrap().transpose(), a.transpose().hstack(&b.transpose()).unwrap());
    }
}
