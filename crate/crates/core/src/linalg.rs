//! Dense exact linear algebra: matrices, reduced row echelon form, rank,
//! kernels and canonical subspaces.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// Dense row-major matrix over a single field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for x in row {
                check_field(field, &x)?;
                data.push(x);
            }
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix literal");
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = field.from_i64(x);
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_field(rhs)?;
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip(rhs, |a, b| a - b)
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// Matrix-vector product `self * v`.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        for x in v {
            check_field(self.field, x)?;
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Reduces `self` to reduced row echelon form, returning pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inverse().expect("pivot is nonzero");
            for j in c..self.cols {
                self[(r, j)] = &self[(r, j)] * &inv;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let factor = self[(i, c)].clone();
                for j in c..self.cols {
                    if !self[(r, j)].is_zero() {
                        let d = &factor * &self[(r, j)];
                        self[(i, j)] -= &d;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = self.field.one();
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn zip(&self, rhs: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        self.same_field(rhs)?;
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: rhs.rows * rhs.cols,
            });
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    fn same_field(&self, rhs: &Matrix) -> Result<()> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: rhs.field,
            });
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub(crate) fn check_field(field: FieldSpec, x: &Scalar) -> Result<()> {
    if x.field() != field {
        return Err(Error::FieldMismatch {
            left: field,
            right: x.field(),
        });
    }
    Ok(())
}

/// A subspace of `field^ambient_dim`, stored by its reduced echelon basis.
///
/// The echelon basis is unique per subspace, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldSpec,
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Matrix::identity(field, ambient_dim).row_vectors(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        let mut vectors = self.basis.clone();
        vectors.push(v.to_vec());
        Ok(span(self.field, vectors, self.ambient_dim)?.dim() == self.dim())
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        subspace_equal(self, other)
    }
}

/// Linear hull of `vectors`, canonicalized to reduced echelon form.
pub fn span(field: FieldSpec, vectors: Vec<Vec<Scalar>>, ambient_dim: usize) -> Result<Subspace> {
    for v in &vectors {
        if v.len() != ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: v.len(),
            });
        }
    }
    if vectors.is_empty() {
        return Ok(Subspace::zero(field, ambient_dim));
    }
    let mut m = Matrix::from_rows(field, vectors)?;
    let rank = m.rref_in_place().len();
    let basis = (0..rank).map(|i| m.row(i).to_vec()).collect();
    Ok(Subspace {
        field,
        ambient_dim,
        basis,
    })
}

pub fn subspace_equal(a: &Subspace, b: &Subspace) -> Result<bool> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: a.ambient_dim,
            found: b.ambient_dim,
        });
    }
    if a.field != b.field {
        return Err(Error::FieldMismatch {
            left: a.field,
            right: b.field,
        });
    }
    Ok(a.basis == b.basis)
}

/// Rank of `m` together with its right kernel `{v : m v = 0}`.
pub fn rank_kernel(m: &Matrix) -> (usize, Subspace) {
    let mut r = m.clone();
    let pivots = r.rref_in_place();
    let field = m.field();
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    let kernel = free
        .iter()
        .map(|&f| {
            let mut v = vec![field.zero(); m.cols()];
            v[f] = field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&r[(row, f)];
            }
            v
        })
        .collect();
    let kernel = span(field, kernel, m.cols()).expect("kernel vectors have ambient length");
    (pivots.len(), kernel)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn vecq(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Q.from_i64(x)).collect()
    }

    #[test]
    fn identity_and_zero() {
        let (r, k) = rank_kernel(&Matrix::identity(Q, 3));
        assert_eq!((r, k.dim()), (3, 0));
        let (r, k) = rank_kernel(&Matrix::zeros(Q, 2, 4));
        assert_eq!((r, k.dim()), (0, 4));
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = Matrix::from_i64(Q, &[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, -1, 2]]);
        let (r, k) = rank_kernel(&m);
        assert_eq!(r + k.dim(), 4);
        for v in k.basis() {
            assert!(m.apply(v).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn span_examples() {
        assert_eq!(span(Q, vec![], 3).unwrap().dim(), 0);
        assert_eq!(
            span(Q, vec![vecq(&[1, 0]), vecq(&[0, 1]), vecq(&[1, 1])], 2)
                .unwrap()
                .dim(),
            2
        );
        // Cyclic shifts of (1,-1,0) span the sum-zero plane.
        let shifts = vec![vecq(&[1, -1, 0]), vecq(&[0, 1, -1]), vecq(&[-1, 0, 1])];
        assert_eq!(span(Q, shifts, 3).unwrap().dim(), 2);
        assert!(span(Q, vec![vecq(&[1, 2])], 3).is_err());
    }

    #[test]
    fn subspace_equality() {
        let a = span(Q, vec![vecq(&[1, 0])], 2).unwrap();
        let b = span(Q, vec![vecq(&[2, 0])], 2).unwrap();
        let c = span(Q, vec![vecq(&[0, 1])], 2).unwrap();
        assert!(subspace_equal(&a, &b).unwrap());
        assert!(!subspace_equal(&a, &c).unwrap());
        assert!(subspace_equal(&a, &Subspace::zero(Q, 3)).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_i64(Q, &[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(Q, 2));
        let singular = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        assert_eq!(singular.inverse(), Err(Error::Singular));
    }

    #[test]
    fn prime_field_rank_differs() {
        let rows: &[&[i64]] = &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]];
        assert_eq!(Matrix::from_i64(Q, rows).rank(), 3);
        assert_eq!(
            Matrix::from_i64(FieldSpec::prime(2).unwrap(), rows).rank(),
            2
        );
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = Matrix::identity(Q, 2);
        let b = Matrix::identity(FieldSpec::prime(3).unwrap(), 2);
        assert!(matches!(a.mul(&b), Err(Error::FieldMismatch { .. })));
    }
}
