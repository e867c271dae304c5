//! Identity checkers over basis tuples.
//!
//! Every checker here is multilinear in its arguments, so checking on basis
//! tuples is sufficient. Tuples are visited in lexicographic order and the
//! first failing tuple is reported.

use super::{Algebra, Element};
use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// Basis indices of the first failing tuple and the nonzero value found there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub residual: Vec<Scalar>,
}

impl Witness {
    pub fn labels(&self, alg: &Algebra) -> Vec<String> {
        self.indices.iter().map(|&i| alg.label(i)).collect()
    }
}

#[must_use]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Witness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }

    /// Runs `check` over tuples until one yields a nonzero residual.
    pub(crate) fn first_failure<I>(
        tuples: I,
        mut check: impl FnMut(&[usize]) -> Vec<Scalar>,
    ) -> Verdict
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        for t in tuples {
            let residual = check(&t);
            if !residual.iter().all(Scalar::is_zero) {
                return Verdict::Fails(Witness {
                    indices: t,
                    residual,
                });
            }
        }
        Verdict::Holds
    }
}

pub(crate) fn pairs(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).flat_map(move |i| (0..n).map(move |j| vec![i, j]))
}

pub(crate) fn triples(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| vec![i, j, k])))
}

fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `e_i (e_j e_k)`
fn right_nested(alg: &Algebra, i: usize, j: usize, k: usize) -> Vec<Scalar> {
    alg.left_basis_mul(i, alg.basis_product(j, k))
}

/// `(e_i e_j) e_k`
fn left_nested(alg: &Algebra, i: usize, j: usize, k: usize) -> Vec<Scalar> {
    alg.right_basis_mul(alg.basis_product(i, j), k)
}

/// Checks `e_i e_j = -e_j e_i` and `e_i e_i = 0` over pairs `i <= j`.
pub fn check_anticommutative(alg: &Algebra) -> Verdict {
    let n = alg.dim();
    let tuples = (0..n).flat_map(move |i| (i..n).map(move |j| vec![i, j]));
    Verdict::first_failure(tuples, |t| {
        let (i, j) = (t[0], t[1]);
        if i == j {
            alg.basis_product(i, i).to_vec()
        } else {
            add(alg.basis_product(i, j), alg.basis_product(j, i))
        }
    })
}

/// Checks the linearized Acaa identity `[e_i,[e_j,e_k]] + [e_k,[e_j,e_i]] = 0`.
///
/// This is equivalent to `[x,[y,x]] = 0` for all `x, y` when the
/// characteristic is not 2; characteristic-2 fields are rejected.
pub fn check_acaa(alg: &Algebra) -> Result<Verdict> {
    if alg.field().characteristic() == 2 {
        return Err(Error::Unsupported(
            "the Acaa check needs characteristic != 2".into(),
        ));
    }
    if let Verdict::Fails(w) = check_anticommutative(alg) {
        return Err(Error::Precondition(format!(
            "product is not anticommutative at ({})",
            w.labels(alg).join(",")
        )));
    }
    Ok(Verdict::first_failure(triples(alg.dim()), |t| {
        let (i, j, k) = (t[0], t[1], t[2]);
        add(&right_nested(alg, i, j, k), &right_nested(alg, k, j, i))
    }))
}

/// Checks the cyclic triple equality `[e_i,[e_j,e_k]] = [e_j,[e_k,e_i]] = [e_k,[e_i,e_j]]`.
///
/// The residual concatenates the two differences.
pub fn check_cyclic_triple(alg: &Algebra) -> Verdict {
    Verdict::first_failure(triples(alg.dim()), |t| {
        let (i, j, k) = (t[0], t[1], t[2]);
        let a = right_nested(alg, i, j, k);
        let b = right_nested(alg, j, k, i);
        let c = right_nested(alg, k, i, j);
        let mut r = sub(&a, &b);
        r.extend(sub(&b, &c));
        r
    })
}

/// Checks antiassociativity `(e_i e_j) e_k + e_i (e_j e_k) = 0`.
pub fn check_antiassociative(alg: &Algebra) -> Verdict {
    Verdict::first_failure(triples(alg.dim()), |t| {
        let (i, j, k) = (t[0], t[1], t[2]);
        add(&left_nested(alg, i, j, k), &right_nested(alg, i, j, k))
    })
}

/// Variable orders of the twelve degree-3 monomials: entry `p` stands for
/// `(x_p0 x_p1) x_p2` in the left-bracketed block and `x_p0 (x_p1 x_p2)` in
/// the right-bracketed block (0-based variable indices).
pub const MONOMIAL_PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [1, 0, 2],
    [2, 1, 0],
    [0, 2, 1],
    [1, 2, 0],
    [2, 0, 1],
];

/// Coefficients of a general quadratic identity
/// `sum_s a_s (x x) x + sum_s b_s x (x x) = 0`, in the order of
/// [`MONOMIAL_PERMS`]: `a` for left-bracketed, `b` for right-bracketed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadIdentityCoeffs {
    pub a: [Scalar; 6],
    pub b: [Scalar; 6],
}

impl QuadIdentityCoeffs {
    pub fn from_i64(field: FieldSpec, coeffs: [i64; 12]) -> Self {
        let s = |i: usize| field.from_i64(coeffs[i]);
        QuadIdentityCoeffs {
            a: [s(0), s(1), s(2), s(3), s(4), s(5)],
            b: [s(6), s(7), s(8), s(9), s(10), s(11)],
        }
    }

    /// Parses twelve comma-separated scalars.
    pub fn parse(field: FieldSpec, text: &str) -> Result<Self> {
        let parts: Vec<Scalar> = text
            .split(',')
            .map(|s| field.parse(s))
            .collect::<Result<_>>()?;
        if parts.len() != 12 {
            return Err(Error::Invalid(format!(
                "expected 12 coefficients, found {}",
                parts.len()
            )));
        }
        let mut it = parts.into_iter();
        let a = std::array::from_fn(|_| it.next().unwrap());
        let b = std::array::from_fn(|_| it.next().unwrap());
        Ok(QuadIdentityCoeffs { a, b })
    }

    /// `x1(x2x3) + x2(x3x1) + x3(x1x2) = 0`
    pub fn jacobi(field: FieldSpec) -> Self {
        Self::from_i64(field, [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1])
    }

    /// `x1(x2x3) - x2(x3x1) = 0`
    pub fn acaa(field: FieldSpec) -> Self {
        Self::from_i64(field, [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0])
    }

    /// Jacobi identity of the commutator `xy - yx`, expanded in the product.
    pub fn lie_admissible(field: FieldSpec) -> Self {
        Self::from_i64(field, [1, -1, -1, -1, 1, 1, -1, 1, 1, 1, -1, -1])
    }
}

/// Evaluates the twelve-term identity on every basis triple.
pub fn check_quadratic_identity(alg: &Algebra, coeffs: &QuadIdentityCoeffs) -> Result<Verdict> {
    let field = alg.field();
    for c in coeffs.a.iter().chain(&coeffs.b) {
        if c.field() != field {
            return Err(Error::FieldMismatch {
                left: field,
                right: c.field(),
            });
        }
    }
    Ok(Verdict::first_failure(triples(alg.dim()), |t| {
        let mut acc = vec![field.zero(); alg.dim()];
        for (s, p) in MONOMIAL_PERMS.iter().enumerate() {
            let (x, y, z) = (t[p[0]], t[p[1]], t[p[2]]);
            if !coeffs.a[s].is_zero() {
                for (o, v) in acc.iter_mut().zip(left_nested(alg, x, y, z)) {
                    *o += &(&coeffs.a[s] * &v);
                }
            }
            if !coeffs.b[s].is_zero() {
                for (o, v) in acc.iter_mut().zip(right_nested(alg, x, y, z)) {
                    *o += &(&coeffs.b[s] * &v);
                }
            }
        }
        acc
    }))
}

pub fn check_jacobi(alg: &Algebra) -> Verdict {
    check_quadratic_identity(alg, &QuadIdentityCoeffs::jacobi(alg.field()))
        .expect("coefficients share the field")
}

/// `(b1 b2) b3 - b3 (b1 b2)`
pub fn rho(alg: &Algebra, b1: &Element, b2: &Element, b3: &Element) -> Result<Element> {
    let p = alg.multiply(b1, b2)?;
    let l = alg.multiply(&p, b3)?;
    let r = alg.multiply(b3, &p)?;
    Ok(l.sub(&r))
}

fn rho_basis(alg: &Algebra, i: usize, j: usize, k: usize) -> Vec<Scalar> {
    sub(
        &left_nested(alg, i, j, k),
        &alg.left_basis_mul(k, alg.basis_product(i, j)),
    )
}

pub fn check_rho_associative(alg: &Algebra) -> Verdict {
    Verdict::first_failure(triples(alg.dim()), |t| rho_basis(alg, t[0], t[1], t[2]))
}

/// Checks `rho(b1,b2,b3) - rho(b2,b1,b3) + rho(b1,b3,b2) - rho(b3,b1,b2) = 0`,
/// which holds exactly when the commutator bracket is an Acaa bracket.
pub fn check_acaa_admissible(alg: &Algebra) -> Verdict {
    Verdict::first_failure(triples(alg.dim()), |t| {
        let (i, j, k) = (t[0], t[1], t[2]);
        let a = sub(&rho_basis(alg, i, j, k), &rho_basis(alg, j, i, k));
        let b = sub(&rho_basis(alg, i, k, j), &rho_basis(alg, k, i, j));
        add(&a, &b)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Symmetry;
    use crate::catalog;
    use crate::free::free_acaa;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn anticommutativity_witness() {
        assert!(check_anticommutative(&catalog::heisenberg3(Q)).holds());
        let sq = Algebra::from_table(Q, 2, &[(0, 0, 1, 1)], Symmetry::None).unwrap();
        let w = check_anticommutative(&sq);
        assert_eq!(w.witness().unwrap().indices, vec![0, 0]);
        assert!(check_anticommutative(&catalog::example_seven(Q)).holds());
    }

    #[test]
    fn acaa_examples() {
        assert!(check_acaa(&catalog::heisenberg3(Q)).unwrap().holds());
        assert!(check_acaa(&catalog::example_seven(Q)).unwrap().holds());
        let so3 = catalog::so3(Q);
        let v = check_acaa(&so3).unwrap();
        assert!(!v.holds());
        // [e1,[e1,e1]] + [e1,[e1,e1]] = 0, so the first failure has i=0, j=0, k=1:
        // [e1,[e1,e2]] + [e2,[e1,e1]] = [e1,e3] = -e2.
        let w = v.witness().unwrap();
        assert_eq!(w.indices, vec![0, 0, 1]);
        assert_eq!(w.residual, Element::from_i64(Q, &[0, -1, 0]).into_coords());
    }

    #[test]
    fn acaa_preconditions() {
        let sq = Algebra::from_table(Q, 2, &[(0, 0, 1, 1)], Symmetry::None).unwrap();
        assert!(matches!(check_acaa(&sq), Err(Error::Precondition(_))));
        let f2 = FieldSpec::prime(2).unwrap();
        assert!(matches!(
            check_acaa(&Algebra::abelian(f2, 2)),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn quadratic_identity_examples() {
        let jac = QuadIdentityCoeffs::jacobi(Q);
        assert!(check_quadratic_identity(&catalog::heisenberg3(Q), &jac)
            .unwrap()
            .holds());
        let acaa = QuadIdentityCoeffs::acaa(Q);
        assert!(check_quadratic_identity(&catalog::example_seven(Q), &acaa)
            .unwrap()
            .holds());

        let f3 = free_acaa(3).unwrap();
        let v = check_quadratic_identity(f3.algebra(), &jac).unwrap();
        let w = v.witness().expect("free(3) is not Lie");
        assert_eq!(w.indices, vec![0, 1, 2]);
        assert_eq!(
            w.residual,
            f3.algebra().basis(6).scale(&Q.from_i64(3)).into_coords()
        );
    }

    #[test]
    fn lie_admissible_coefficients_match_jacobi_of_commutator() {
        // Associative algebras are Lie-admissible; so(3) as a product is too
        // (its commutator is twice a Lie bracket).
        for alg in [
            catalog::upper_triangular2(Q),
            catalog::matrix_algebra2(Q),
            catalog::so3(Q),
        ] {
            let direct =
                check_quadratic_identity(&alg, &QuadIdentityCoeffs::lie_admissible(Q)).unwrap();
            assert!(direct.holds());
            assert!(check_jacobi(&alg.commutator_algebra()).holds());
        }
        // A product whose commutator is so(3)-like but twisted fails both.
        let twisted = Algebra::from_table(
            Q,
            3,
            &[(0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 2)],
            Symmetry::None,
        )
        .unwrap();
        let direct =
            check_quadratic_identity(&twisted, &QuadIdentityCoeffs::lie_admissible(Q)).unwrap();
        assert_eq!(
            direct.holds(),
            check_jacobi(&twisted.commutator_algebra()).holds()
        );
    }

    #[test]
    fn coefficient_parsing() {
        let c = QuadIdentityCoeffs::parse(Q, "0,0,0,0,0,0,1,0,0,0,-1,0").unwrap();
        assert_eq!(c, QuadIdentityCoeffs::acaa(Q));
        assert!(QuadIdentityCoeffs::parse(Q, "1,2").is_err());
    }

    #[test]
    fn rho_examples() {
        let t2 = catalog::upper_triangular2(Q);
        let (e11, e12, e22) = (t2.basis(0), t2.basis(1), t2.basis(2));
        assert_eq!(rho(&t2, &e11, &e12, &e22).unwrap(), e12);
        assert!(!check_rho_associative(&t2).holds());

        let h3 = catalog::heisenberg3(Q);
        assert!(rho(&h3, &h3.basis(0), &h3.basis(1), &h3.basis(0))
            .unwrap()
            .is_zero());
        assert!(check_rho_associative(&h3).holds());

        let comm = Algebra::from_table(
            Q,
            2,
            &[(0, 0, 1, 1), (0, 1, 1, 2), (1, 0, 1, 2)],
            Symmetry::None,
        )
        .unwrap();
        assert!(check_rho_associative(&comm).holds());
    }

    #[test]
    fn admissibility_examples() {
        let comm = Algebra::from_table(Q, 2, &[(0, 0, 1, 1)], Symmetry::None).unwrap();
        assert!(check_acaa_admissible(&comm).holds());
        assert!(check_acaa_admissible(&catalog::heisenberg3(Q)).holds());
        assert!(!check_acaa_admissible(&catalog::matrix_algebra2(Q)).holds());
    }
}
