//! Sparse exact elimination: rank, kernel, image, cokernel.
//!
//! Forward elimination is fraction-free over Q: a row is reduced by
//! `r <- lead(p) * r - r[c] * p` and then divided by its content, so rows
//! stay primitive integer vectors and the inline small-integer path of
//! [`Rational`] is hit almost always. Rows are normalized to a leading one
//! only at the end, when a reduced echelon form is requested.

use std::collections::HashMap;

use super::matrix::{axpy, scale_vec, Matrix, SparseVec};
use super::rational::content;
use super::{Field, Rational, Scalar};
use crate::Result;

/// Incremental row echelon form.
pub(crate) struct Echelon {
    rows: Vec<SparseVec>,
    pivot_of_col: HashMap<usize, usize>,
}

fn make_primitive(v: &mut SparseVec) {
    if v.is_empty() {
        return;
    }
    let all_rational = v.iter().all(|(_, x)| matches!(x, Scalar::Rational(_)));
    if all_rational {
        let vals: Vec<&Rational> = v
            .iter()
            .map(|(_, x)| match x {
                Scalar::Rational(r) => r,
                Scalar::Algebraic(_) => unreachable!(),
            })
            .collect();
        let mut c = content(&vals);
        if v[0].1.as_rational().unwrap().signum() < 0 {
            c = -c;
        }
        if !c.is_one() {
            let inv = Scalar::Rational(c.recip().unwrap());
            *v = scale_vec(v, &inv);
        }
    } else {
        let inv = v[0].1.inv().expect("leading entry of a nonzero row is invertible");
        *v = scale_vec(v, &inv);
    }
}

impl Echelon {
    pub(crate) fn new() -> Self {
        Echelon { rows: Vec::new(), pivot_of_col: HashMap::new() }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// One elimination step of `v` against the pivot row for column `c`.
    fn eliminate(&self, v: &SparseVec, pivot: &SparseVec) -> SparseVec {
        let a = &v[0].1;
        let p = &pivot[0].1;
        let mut out = match (a, p) {
            (Scalar::Rational(_), Scalar::Rational(_)) if !p.is_one() => {
                axpy(&scale_vec(v, p), &(-a), pivot)
            }
            _ => {
                let coef = -&(a * &p.inv().expect("nonzero pivot"));
                axpy(v, &coef, pivot)
            }
        };
        debug_assert!(out.first().is_none_or(|e| e.0 != pivot[0].0));
        make_primitive(&mut out);
        out
    }

    /// Reduces until the leading column has no pivot.
    pub(crate) fn reduce_leading(&self, mut v: SparseVec) -> SparseVec {
        make_primitive(&mut v);
        while let Some(&(c, _)) = v.first() {
            match self.pivot_of_col.get(&c) {
                Some(&k) => v = self.eliminate(&v, &self.rows[k]),
                None => break,
            }
        }
        v
    }

    /// Inserts a vector; returns whether the rank increased.
    pub(crate) fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce_leading(v);
        match v.first() {
            Some(&(c, _)) => {
                self.pivot_of_col.insert(c, self.rows.len());
                self.rows.push(v);
                true
            }
            None => false,
        }
    }

    /// Reduced row echelon form: rows sorted by pivot, leading ones, zero
    /// above and below every pivot.
    pub(crate) fn into_rref(self) -> Vec<SparseVec> {
        let mut rows = self.rows;
        rows.sort_by_key(|r| r[0].0);
        let mut done: Vec<SparseVec> = Vec::with_capacity(rows.len());
        let mut pos: HashMap<usize, usize> = HashMap::new();
        // Back substitution from the last pivot; finished rows are already
        // reduced against every later pivot.
        for row in rows.into_iter().rev() {
            let lead = row[0].1.clone();
            let mut v = scale_vec(&row, &lead.inv().unwrap());
            let mut k = 1;
            while k < v.len() {
                let c = v[k].0;
                if let Some(&idx) = pos.get(&c) {
                    let coef = -&v[k].1;
                    v = axpy(&v, &coef, &done[idx]);
                } else {
                    k += 1;
                }
            }
            pos.insert(v[0].0, done.len());
            done.push(v);
        }
        done.reverse();
        done
    }
}

fn echelon_of_rows(_field: &Field, ncols: usize, rows: &[SparseVec], bound: Option<usize>) -> Echelon {
    let mut order: Vec<&SparseVec> = rows.iter().filter(|r| !r.is_empty()).collect();
    order.sort_by_key(|r| (r.len(), r[0].0));
    let mut e = Echelon::new();
    let cap = bound.unwrap_or(usize::MAX).min(ncols);
    for r in order {
        if e.rank() >= cap {
            break;
        }
        e.insert(r.clone());
    }
    e
}

/// Rank of a matrix.
pub fn rank(m: &Matrix) -> usize {
    rank_bounded(m, None)
}

/// Rank of a matrix, stopping early once `bound` pivots are found. The
/// result is exact whenever the true rank is at most `bound`.
pub fn rank_bounded(m: &Matrix, bound: Option<usize>) -> usize {
    if m.nrows() <= m.ncols() {
        echelon_of_rows(m.field(), m.ncols(), m.rows(), bound).rank()
    } else {
        let t = m.transpose();
        echelon_of_rows(t.field(), t.ncols(), t.rows(), bound).rank()
    }
}

/// A linear subspace of `F^n`, stored canonically by the reduced echelon
/// form of a basis (so two subspaces are equal iff their bases are).
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    ambient: usize,
    field: Field,
    basis: Vec<SparseVec>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace { ambient, field, basis: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        let one = field.one();
        Subspace { ambient, basis: (0..ambient).map(|i| vec![(i, one.clone())]).collect(), field }
    }

    /// Span of sparse vectors in `F^ambient`.
    pub fn span(field: Field, ambient: usize, vectors: &[SparseVec]) -> Self {
        let e = echelon_of_rows(&field, ambient, vectors, None);
        Subspace { ambient, basis: e.into_rref(), field }
    }

    /// Span of dense vectors.
    pub fn span_dense(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        let sparse: Vec<SparseVec> = vectors.iter().map(|v| to_sparse(v)).collect();
        Self::span(field, ambient, &sparse)
    }

    /// Column space of a matrix.
    pub fn column_space(m: &Matrix) -> Self {
        Self::span(m.field().clone(), m.nrows(), &m.columns())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Basis vectors in reduced echelon form.
    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|b| b[0].0).collect()
    }

    /// The `ambient x dim` matrix whose columns are the canonical basis.
    /// Its columns are in reduced column echelon form.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.field.clone(), self.ambient, &self.basis)
            .expect("basis lives in the subspace field")
    }

    /// Residue of `v` modulo the subspace: zero at every pivot position.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let pos: HashMap<usize, usize> =
            self.basis.iter().enumerate().map(|(i, b)| (b[0].0, i)).collect();
        let mut v = v.clone();
        let mut k = 0;
        while k < v.len() {
            match pos.get(&v[k].0) {
                Some(&i) => {
                    let coef = -&v[k].1;
                    v = axpy(&v, &coef, &self.basis[i]);
                }
                None => k += 1,
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        let dense = to_dense(v, self.ambient, &self.field);
        Some(self.basis.iter().map(|b| dense[b[0].0].clone()).collect())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(self.field.clone(), self.ambient, &vs)
    }

    /// Image of the subspace under a linear map.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        let imgs: Vec<SparseVec> = self.basis.iter().map(|b| m.apply(b)).collect();
        Subspace::span(self.field.clone(), m.nrows(), &imgs)
    }
}

/// `V / im(M)` with the canonical complement spanned by the standard basis
/// vectors at the non-pivot positions of the image.
#[derive(Clone, Debug)]
pub struct Quotient {
    image: Subspace,
    complement: Vec<usize>,
}

impl Quotient {
    pub fn of_image(image: Subspace) -> Self {
        let pivots: std::collections::HashSet<usize> = image.pivots().into_iter().collect();
        let complement = (0..image.ambient()).filter(|i| !pivots.contains(i)).collect();
        Quotient { image, complement }
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn image(&self) -> &Subspace {
        &self.image
    }

    /// Canonical complement as a subspace of the ambient space.
    pub fn complement(&self) -> Subspace {
        let one = self.image.field().one();
        Subspace {
            ambient: self.image.ambient(),
            field: self.image.field().clone(),
            basis: self.complement.iter().map(|&i| vec![(i, one.clone())]).collect(),
        }
    }

    /// Coordinates of the class of `v` in the quotient.
    pub fn project(&self, v: &SparseVec) -> Vec<Scalar> {
        let r = self.image.reduce(v);
        let dense = to_dense(&r, self.image.ambient(), self.image.field());
        self.complement.iter().map(|&i| dense[i].clone()).collect()
    }

    /// The vector supported on the complement positions whose class has the
    /// given quotient coordinates.
    pub fn lift(&self, coords: &SparseVec) -> SparseVec {
        coords.iter().map(|(i, c)| (self.complement[*i], c.clone())).collect()
    }

    /// Matrix of the projection `F^ambient -> quotient`.
    pub fn projection_matrix(&self) -> Matrix {
        let field = self.image.field().clone();
        let one = field.one();
        let cols: Vec<SparseVec> = (0..self.image.ambient())
            .map(|j| to_sparse(&self.project(&vec![(j, one.clone())])))
            .collect();
        Matrix::from_columns(field, self.dim(), &cols).unwrap()
    }
}

pub fn to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn to_dense(v: &SparseVec, n: usize, field: &Field) -> Vec<Scalar> {
    let mut d = vec![field.zero(); n];
    for (i, x) in v {
        d[*i] = x.clone();
    }
    d
}

/// Rank and kernel of a matrix. The kernel is returned in canonical form.
pub fn rank_kernel(m: &Matrix) -> (usize, Subspace) {
    let field = m.field().clone();
    let e = echelon_of_rows(&field, m.ncols(), m.rows(), None);
    let rank = e.rank();
    let rref = e.into_rref();
    let pivots: std::collections::HashSet<usize> = rref.iter().map(|r| r[0].0).collect();
    let one = field.one();
    let mut kernel: HashMap<usize, SparseVec> = (0..m.ncols())
        .filter(|c| !pivots.contains(c))
        .map(|c| (c, vec![(c, one.clone())]))
        .collect();
    for row in &rref {
        let p = row[0].0;
        for (c, v) in &row[1..] {
            if let Some(k) = kernel.get_mut(c) {
                k.push((p, -v));
            }
        }
    }
    let vectors: Vec<SparseVec> = kernel
        .into_values()
        .map(|mut v| {
            v.sort_by_key(|e| e.0);
            v
        })
        .collect();
    (rank, Subspace::span(field, m.ncols(), &vectors))
}

/// Canonical complement of the image of `m` in its target space.
pub fn cokernel(m: &Matrix) -> Subspace {
    Quotient::of_image(Subspace::column_space(m)).complement()
}

/// Solves `m x = b` for one particular solution, if any.
pub fn solve(m: &Matrix, b: &SparseVec) -> Result<Option<Vec<Scalar>>> {
    let field = m.field().clone();
    // Columns of [m | b]: b lies in the column space iff appending it does
    // not raise the rank; coordinates come from the kernel of [m | -b].
    let bcol = Matrix::from_columns(field.clone(), m.nrows(), &[scale_vec(b, &field.from_int(-1))])?;
    let aug = m.hstack(&bcol)?;
    let (_, ker) = rank_kernel(&aug);
    let last = m.ncols();
    for v in ker.basis() {
        if let Some((_, x)) = v.iter().find(|(i, _)| *i == last) {
            let inv = x.inv().unwrap();
            let sol = to_dense(&scale_vec(v, &inv), last + 1, &field);
            return Ok(Some(sol[..last].to_vec()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::cyclotomic_field;
    use proptest::prelude::*;

    fn q(n: i64) -> Scalar {
        Scalar::Rational(Rational::from_integer(n))
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let (r, k) = rank_kernel(&Matrix::identity(Field::Rational, 3));
        assert_eq!(r, 3);
        assert!(k.is_zero());
    }

    #[test]
    fn rank_one_symmetric() {
        let (r, k) = rank_kernel(&Matrix::from_ints(&[vec![1, 1], vec![1, 1]]));
        assert_eq!(r, 1);
        assert_eq!(k, Subspace::span(Field::Rational, 2, &[vec![(0, q(1)), (1, q(-1))]]));
    }

    #[test]
    fn gaussian_integer_example() {
        // [[ζ, 1], [1, -ζ]] over Q(i): second row is -ζ times the first.
        let f = cyclotomic_field(4).unwrap();
        let z = f.generator();
        let m = Matrix::from_dense(f.clone(), vec![vec![z.clone(), f.one()], vec![f.one(), -&z]]).unwrap();
        let (r, k) = rank_kernel(&m);
        assert_eq!(r, 1);
        // (ζ, 1) is a kernel vector? ζ·ζ + 1·1 = 0.
        let expected = Subspace::span(f.clone(), 2, &[vec![(0, z.clone()), (1, f.one())]]);
        assert_eq!(k, expected);
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(cokernel(&Matrix::zeros(Field::Rational, 2, 1)).dim(), 2);
        assert_eq!(cokernel(&Matrix::from_ints(&[vec![1, 0, 1], vec![0, 1, 1]])).dim(), 0);
        let c = cokernel(&Matrix::from_ints(&[vec![2], vec![0]]));
        assert_eq!(c.dim(), 1);
        assert_eq!(c, Subspace::span(Field::Rational, 2, &[vec![(1, q(1))]]));
    }

    #[test]
    fn quotient_projection() {
        let quo = Quotient::of_image(Subspace::span(Field::Rational, 3, &[vec![(0, q(1)), (1, q(1))]]));
        assert_eq!(quo.dim(), 2);
        // e_0 ≡ -e_1 modulo the image
        assert_eq!(quo.project(&vec![(0, q(1))]), vec![q(-1), q(0)]);
        assert_eq!(quo.project(&vec![(0, q(1)), (1, q(1))]), vec![q(0), q(0)]);
    }

    #[test]
    fn solve_finds_solution() {
        let m = Matrix::from_ints(&[vec![1, 2], vec![3, 4]]);
        let x = solve(&m, &vec![(0, q(5)), (1, q(11))]).unwrap().unwrap();
        assert_eq!(x, vec![q(1), q(2)]);
        let sing = Matrix::from_ints(&[vec![1, 1], vec![1, 1]]);
        assert!(solve(&sing, &vec![(0, q(1))]).unwrap().is_none());
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(-3i64..4, c), r)
                .prop_map(|rows| Matrix::from_ints(&rows))
        })
    }

    proptest! {
        #[test]
        fn rank_of_transpose(m in small_matrix()) {
            prop_assert_eq!(rank(&m), rank(&m.transpose()));
        }

        #[test]
        fn rank_nullity_and_kernel(m in small_matrix()) {
            let (r, k) = rank_kernel(&m);
            prop_assert_eq!(r + k.dim(), m.ncols());
            for v in k.basis() {
                prop_assert!(m.apply(v).is_empty());
            }
            prop_assert_eq!(cokernel(&m).dim() + r, m.nrows());
        }

        #[test]
        fn entry_order_is_irrelevant(m in small_matrix(), seed in any::<u64>()) {
            let mut trip: Vec<_> = m.entries().map(|(i, j, v)| (i, j, v.clone())).collect();
            let n = trip.len().max(1);
            trip.rotate_left((seed as usize) % n);
            let m2 = Matrix::from_triplets(Field::Rational, m.nrows(), m.ncols(), trip).unwrap();
            prop_assert_eq!(rank_kernel(&m).1, rank_kernel(&m2).1);
        }

        #[test]
        fn span_is_canonical(m in small_matrix()) {
            // Row space equals the row space of an invertible recombination.
            let rows = m.rows().to_vec();
            let mut mixed = rows.clone();
            if rows.len() > 1 {
                mixed[0] = axpy(&rows[0], &q(3), &rows[1]);
            }
            let a = Subspace::span(Field::Rational, m.ncols(), &rows);
            let b = Subspace::span(Field::Rational, m.ncols(), &mixed);
            prop_assert_eq!(a, b);
        }
    }
}
