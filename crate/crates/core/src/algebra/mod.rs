//! Finite-dimensional algebras given by structure constants.
//!
//! An [`Algebra`] of dimension `n` stores the tensor `c[i][j][k]` with
//! `e_i * e_j = sum_k c[i][j][k] e_k`. Everything else in the crate is built
//! on top of the basis products exposed here.

mod fingerprint;
pub(crate) mod identities;
pub(crate) mod json;

pub use fingerprint::{fingerprint, Fingerprint};
pub use identities::{
    check_acaa, check_acaa_admissible, check_antiassociative, check_anticommutative,
    check_cyclic_triple, check_jacobi, check_quadratic_identity, check_rho_associative, rho,
    QuadIdentityCoeffs, Verdict, Witness, MONOMIAL_PERMS,
};
pub use json::{AlgebraFile, FieldFile};

use crate::error::{Error, Result};
use crate::linalg::{check_field, Matrix};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Default)]
pub enum Symmetry {
    #[default]
    None,
    Skew,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    name: Option<String>,
    field: FieldSpec,
    dim: usize,
    labels: Option<Vec<String>>,
    tensor: Vec<Scalar>,
    symmetry: Symmetry,
}

/// A coordinate vector in some algebra's basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    field: FieldSpec,
    coords: Vec<Scalar>,
}

impl Element {
    pub fn new(field: FieldSpec, coords: Vec<Scalar>) -> Result<Self> {
        for x in &coords {
            check_field(field, x)?;
        }
        Ok(Element { field, coords })
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Element {
            field,
            coords: vec![field.zero(); dim],
        }
    }

    pub fn from_i64(field: FieldSpec, coords: &[i64]) -> Self {
        Element {
            field,
            coords: coords.iter().map(|&x| field.from_i64(x)).collect(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element length mismatch");
        let coords = self
            .coords
            .iter()
            .zip(&rhs.coords)
            .map(|(a, b)| a + b)
            .collect();
        Element {
            field: self.field,
            coords,
        }
    }

    pub fn sub(&self, rhs: &Element) -> Element {
        self.add(&rhs.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element {
            field: self.field,
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }
}

impl Algebra {
    /// Builds an algebra from a full `dim^3` tensor, validating skewness when
    /// `symmetry` is [`Symmetry::Skew`].
    pub fn new(
        field: FieldSpec,
        dim: usize,
        tensor: Vec<Scalar>,
        symmetry: Symmetry,
    ) -> Result<Self> {
        if tensor.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: tensor.len(),
            });
        }
        for x in &tensor {
            check_field(field, x)?;
        }
        let alg = Algebra {
            name: None,
            field,
            dim,
            labels: None,
            tensor,
            symmetry,
        };
        if symmetry == Symmetry::Skew {
            if let Verdict::Fails(w) = check_anticommutative(&alg) {
                return Err(Error::InvalidAlgebra(format!(
                    "declared skew but product is not anticommutative at {:?}",
                    w.indices
                )));
            }
        }
        Ok(alg)
    }

    pub fn abelian(field: FieldSpec, dim: usize) -> Self {
        Algebra {
            name: None,
            field,
            dim,
            labels: None,
            tensor: vec![field.zero(); dim * dim * dim],
            symmetry: Symmetry::Skew,
        }
    }

    /// Builds an algebra from `(i, j, k, c)` entries meaning `e_i e_j += c e_k`.
    ///
    /// With [`Symmetry::Skew`] each entry also sets `e_j e_i -= c e_k`, and
    /// diagonal entries are rejected.
    pub fn from_table(
        field: FieldSpec,
        dim: usize,
        entries: &[(usize, usize, usize, i64)],
        symmetry: Symmetry,
    ) -> Result<Self> {
        let mut tensor = vec![field.zero(); dim * dim * dim];
        for &(i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidAlgebra(format!(
                    "index out of range in ({i},{j},{k})"
                )));
            }
            let c = field.from_i64(c);
            tensor[(i * dim + j) * dim + k] += &c;
            if symmetry == Symmetry::Skew {
                if i == j {
                    return Err(Error::InvalidAlgebra(format!(
                        "diagonal product e{i}e{i} in skew table"
                    )));
                }
                tensor[(j * dim + i) * dim + k] -= &c;
            }
        }
        Algebra::new(field, dim, tensor, symmetry)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Basis label, falling back to `e1`, `e2`, ...
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("e{}", i + 1),
        }
    }

    pub fn tensor(&self) -> &[Scalar] {
        &self.tensor
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.tensor[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `e_i * e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.tensor[start..start + self.dim]
    }

    pub fn basis(&self, i: usize) -> Element {
        let mut coords = vec![self.field.zero(); self.dim];
        coords[i] = self.field.one();
        Element {
            field: self.field,
            coords,
        }
    }

    pub fn element(&self, coords: Vec<Scalar>) -> Result<Element> {
        if coords.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: coords.len(),
            });
        }
        Element::new(self.field, coords)
    }

    pub fn zero_element(&self) -> Element {
        Element::zero(self.field, self.dim)
    }

    pub fn check_element(&self, x: &Element) -> Result<()> {
        if x.field != self.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: x.field,
            });
        }
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.dim(),
            });
        }
        Ok(())
    }

    /// Bilinear product `x * y`.
    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(Element {
            field: self.field,
            coords: self.mul_coords(&x.coords, &y.coords),
        })
    }

    pub(crate) fn mul_coords(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (o, c) in out.iter_mut().zip(self.basis_product(i, j)) {
                    if !c.is_zero() {
                        *o += &(&ab * c);
                    }
                }
            }
        }
        out
    }

    /// `e_i * y` for a coordinate vector `y`.
    pub(crate) fn left_basis_mul(&self, i: usize, y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (j, b) in y.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(self.basis_product(i, j)) {
                if !c.is_zero() {
                    *o += &(b * c);
                }
            }
        }
        out
    }

    /// `x * e_j` for a coordinate vector `x`.
    pub(crate) fn right_basis_mul(&self, x: &[Scalar], j: usize) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(self.basis_product(i, j)) {
                if !c.is_zero() {
                    *o += &(a * c);
                }
            }
        }
        out
    }

    /// Splits the product into its skew part `xy - yx` and symmetric part
    /// `xy + yx`.
    pub fn polarize(&self) -> (Algebra, Algebra) {
        let n = self.dim;
        let mut minus = Vec::with_capacity(self.tensor.len());
        let mut plus = Vec::with_capacity(self.tensor.len());
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let a = self.structure_constant(i, j, k);
                    let b = self.structure_constant(j, i, k);
                    minus.push(a - b);
                    plus.push(a + b);
                }
            }
        }
        let mut a_minus = self.derived(minus, Symmetry::Skew);
        let mut a_plus = self.derived(plus, Symmetry::None);
        a_minus.name = self.name.as_ref().map(|n| format!("{n}-"));
        a_plus.name = self.name.as_ref().map(|n| format!("{n}+"));
        (a_minus, a_plus)
    }

    /// The commutator algebra `[x, y] = xy - yx`.
    pub fn commutator_algebra(&self) -> Algebra {
        let mut c = self.polarize().0;
        c.name = self.name.as_ref().map(|n| format!("[{n}]"));
        c
    }

    pub fn direct_sum(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        let n = self.dim + other.dim;
        let mut tensor = vec![self.field.zero(); n * n * n];
        let (a, b) = (self.dim, other.dim);
        for i in 0..a {
            for j in 0..a {
                for k in 0..a {
                    tensor[(i * n + j) * n + k] = self.structure_constant(i, j, k).clone();
                }
            }
        }
        for i in 0..b {
            for j in 0..b {
                for k in 0..b {
                    tensor[((a + i) * n + a + j) * n + a + k] =
                        other.structure_constant(i, j, k).clone();
                }
            }
        }
        let symmetry = if self.symmetry == Symmetry::Skew && other.symmetry == Symmetry::Skew {
            Symmetry::Skew
        } else {
            Symmetry::None
        };
        let mut sum = Algebra {
            name: None,
            field: self.field,
            dim: n,
            labels: None,
            tensor,
            symmetry,
        };
        if let (Some(x), Some(y)) = (&self.name, &other.name) {
            sum.name = Some(format!("{x}+{y}"));
        }
        Ok(sum)
    }

    /// Re-expresses the product in the basis `f_i = sum_a P[a][i] e_a`
    /// (columns of `p`).
    pub fn change_basis(&self, p: &Matrix) -> Result<Algebra> {
        if p.field() != self.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: p.field(),
            });
        }
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: p.rows(),
            });
        }
        let inv = p.inverse()?;
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|i| p.column(i)).collect();
        let mut tensor = Vec::with_capacity(self.tensor.len());
        for fi in &cols {
            for fj in &cols {
                let v = self.mul_coords(fi, fj);
                tensor.extend(inv.apply(&v)?);
            }
        }
        Ok(self.derived(tensor, self.symmetry))
    }

    fn derived(&self, tensor: Vec<Scalar>, symmetry: Symmetry) -> Algebra {
        Algebra {
            name: None,
            field: self.field,
            dim: self.dim,
            labels: self.labels.clone(),
            tensor,
            symmetry,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn heisenberg_products() {
        let h3 = catalog::heisenberg3(Q);
        assert_eq!(
            h3.multiply(&h3.basis(0), &h3.basis(1)).unwrap(),
            h3.basis(2)
        );
        assert_eq!(
            h3.multiply(&h3.basis(1), &h3.basis(0)).unwrap(),
            h3.basis(2).scale(&Q.from_i64(-1))
        );
        assert!(h3.multiply(&h3.basis(0), &h3.basis(0)).unwrap().is_zero());
    }

    #[test]
    fn multiply_rejects_foreign_elements() {
        let h3 = catalog::heisenberg3(Q);
        let short = Element::from_i64(Q, &[1, 0]);
        assert!(h3.multiply(&short, &h3.basis(0)).is_err());
        let f3 = Element::from_i64(FieldSpec::prime(3).unwrap(), &[1, 0, 0]);
        assert!(matches!(
            h3.multiply(&f3, &h3.basis(0)),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn skew_declaration_is_validated() {
        let bad = Algebra::from_table(Q, 2, &[(0, 1, 0, 1)], Symmetry::None).unwrap();
        assert!(Algebra::new(Q, 2, bad.tensor().to_vec(), Symmetry::Skew).is_err());
        assert!(Algebra::from_table(Q, 2, &[(0, 0, 1, 1)], Symmetry::Skew).is_err());
    }

    #[test]
    fn polarization_examples() {
        // Commutative input has no skew part.
        let comm = Algebra::from_table(Q, 2, &[(0, 0, 1, 1)], Symmetry::None).unwrap();
        let (minus, plus) = comm.polarize();
        assert!(minus.tensor().iter().all(Scalar::is_zero));
        assert_eq!(*plus.structure_constant(0, 0, 1), Q.from_i64(2));
        assert_eq!(minus.symmetry(), Symmetry::Skew);

        // Anticommutative input: skew part doubles, symmetric part vanishes.
        let h3 = catalog::heisenberg3(Q);
        let (minus, plus) = h3.polarize();
        let doubled: Vec<Scalar> = h3.tensor().iter().map(|x| x * &Q.from_i64(2)).collect();
        assert_eq!(minus.tensor(), &doubled[..]);
        assert!(plus.tensor().iter().all(Scalar::is_zero));
    }

    #[test]
    fn commutator_of_upper_triangular() {
        let t2 = catalog::upper_triangular2(Q);
        let c = t2.commutator_algebra();
        // basis E11, E12, E22
        let expected =
            Algebra::from_table(Q, 3, &[(0, 1, 1, 1), (1, 2, 1, 1)], Symmetry::Skew).unwrap();
        assert_eq!(c.tensor(), expected.tensor());
    }

    #[test]
    fn direct_sum_examples() {
        let h3 = catalog::heisenberg3(Q);
        let sum = h3.direct_sum(&Algebra::abelian(Q, 1)).unwrap();
        assert_eq!(sum.tensor(), catalog::h3_plus_k(Q).tensor());
        assert_eq!(
            h3.direct_sum(&Algebra::abelian(Q, 0)).unwrap().tensor(),
            h3.tensor()
        );
        let ab = Algebra::abelian(Q, 2)
            .direct_sum(&Algebra::abelian(Q, 3))
            .unwrap();
        assert!(ab.tensor().iter().all(Scalar::is_zero));
        assert!(h3
            .direct_sum(&Algebra::abelian(FieldSpec::prime(3).unwrap(), 1))
            .is_err());
    }

    #[test]
    fn change_basis_identity_is_noop() {
        let f3 = crate::free::free_acaa(3).unwrap();
        let same = f3.algebra().change_basis(&Matrix::identity(Q, 7)).unwrap();
        assert_eq!(same.tensor(), f3.algebra().tensor());
    }
}
