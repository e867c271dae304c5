//! Arity-3 quadratic data for the Acaa operad and its dual.
//!
//! Two monomial spaces are used. `Full12` is the span of all twelve
//! bracketings `(x_a x_b) x_c` and `x_a (x_b x_c)` of a generic binary
//! operation, in [`MONOMIAL_PERMS`] order (left-bracketed block first).
//! `Skew3` is the quotient for a skew operation, with basis
//! `m1 = (x1x2)x3`, `m2 = (x2x3)x1`, `m3 = (x3x1)x2`.

use serde::{Deserialize, Serialize};

use crate::algebra::MONOMIAL_PERMS;
use crate::error::{Error, Result};
use crate::linalg::{rank_kernel, span, Matrix, Subspace};
use crate::scalar::{permutation_sign, FieldSpec, Scalar};

/// `dim Acaa(n)` for `n = 1..=len`: one operation in arities 1 to 3, none above.
pub fn acaa_dims(len: usize) -> Vec<u64> {
    (1..=len).map(|n| u64::from(n <= 3)).collect()
}

/// `dim Acaa^!(n)`: the dual operad governs 2-step nilpotent Lie algebras.
pub fn dual_dims(len: usize) -> Vec<u64> {
    (1..=len).map(|n| u64::from(n <= 2)).collect()
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MonomialSpace {
    Full12,
    Skew3,
}

fn var(i: usize) -> String {
    format!("x{}", i + 1)
}

impl MonomialSpace {
    pub fn dim(self) -> usize {
        match self {
            MonomialSpace::Full12 => 12,
            MonomialSpace::Skew3 => 3,
        }
    }

    pub fn labels(self) -> Vec<String> {
        match self {
            MonomialSpace::Full12 => {
                let left = MONOMIAL_PERMS
                    .iter()
                    .map(|p| format!("({}{}){}", var(p[0]), var(p[1]), var(p[2])));
                let right = MONOMIAL_PERMS
                    .iter()
                    .map(|p| format!("{}({}{})", var(p[0]), var(p[1]), var(p[2])));
                left.chain(right).collect()
            }
            MonomialSpace::Skew3 => vec!["(x1x2)x3".into(), "(x2x3)x1".into(), "(x3x1)x2".into()],
        }
    }

    /// Image of basis monomial `k` under the relabeling `x_i -> x_sigma(i)`,
    /// as `(sign, index)`.
    pub fn act_on_basis(self, sigma: [usize; 3], k: usize) -> (i64, usize) {
        match self {
            MonomialSpace::Full12 => {
                let (block, tau) = (k / 6, MONOMIAL_PERMS[k % 6]);
                let image = [sigma[tau[0]], sigma[tau[1]], sigma[tau[2]]];
                let pos = MONOMIAL_PERMS
                    .iter()
                    .position(|p| *p == image)
                    .expect("a permutation");
                (1, block * 6 + pos)
            }
            MonomialSpace::Skew3 => {
                // m_k = (x_a x_b) x_c with b the cyclic successor of a and c = a + 2.
                let (a, b, c) = (k, (k + 1) % 3, (k + 2) % 3);
                let (sa, sb, sc) = (sigma[a], sigma[b], sigma[c]);
                let target = (sc + 1) % 3;
                let sign = if (sa + 1) % 3 == sb { 1 } else { -1 };
                (sign, target)
            }
        }
    }

    pub fn act(self, sigma: [usize; 3], v: &[Scalar]) -> Vec<Scalar> {
        let field = v.first().map(Scalar::field).unwrap_or(FieldSpec::Rationals);
        let mut out = vec![field.zero(); self.dim()];
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, t) = self.act_on_basis(sigma, k);
            out[t] += &(c * &field.from_i64(sign));
        }
        out
    }

    /// The symmetric bilinear form: `+-eps(sigma)` on `Full12` and the standard
    /// inner product on `Skew3`, where all basis monomials are cyclic shifts.
    pub fn pairing_matrix(self, field: FieldSpec) -> Matrix {
        match self {
            MonomialSpace::Full12 => pairing_matrix(field),
            MonomialSpace::Skew3 => Matrix::identity(field, 3),
        }
    }
}

/// The 12x12 diagonal pairing on `Full12`: `eps(sigma)` on `(x_s1 x_s2) x_s3`
/// and `-eps(sigma)` on `x_s1 (x_s2 x_s3)`.
pub fn pairing_matrix(field: FieldSpec) -> Matrix {
    let mut m = Matrix::zeros(field, 12, 12);
    for (i, p) in MONOMIAL_PERMS.iter().enumerate() {
        let eps = permutation_sign(p);
        m[(i, i)] = field.from_i64(eps);
        m[(i + 6, i + 6)] = field.from_i64(-eps);
    }
    m
}

/// Sub-Sigma_3-module generated by `generators`.
pub fn sigma3_span(
    space: MonomialSpace,
    field: FieldSpec,
    generators: &[Vec<Scalar>],
) -> Result<Subspace> {
    let mut vectors = Vec::new();
    for g in generators {
        if g.len() != space.dim() {
            return Err(Error::DimensionMismatch {
                expected: space.dim(),
                found: g.len(),
            });
        }
        for sigma in MONOMIAL_PERMS {
            vectors.push(space.act(sigma, g));
        }
    }
    span(field, vectors, space.dim())
}

/// `{w : <w, v> = 0 for all v in V}` for the space's pairing.
pub fn orthogonal_complement(space: MonomialSpace, v: &Subspace) -> Result<Subspace> {
    if v.ambient_dim() != space.dim() {
        return Err(Error::DimensionMismatch {
            expected: space.dim(),
            found: v.ambient_dim(),
        });
    }
    let field = v.field();
    if v.dim() == 0 {
        return Ok(Subspace::full(field, space.dim()));
    }
    let pairing = space.pairing_matrix(field);
    let rows = v
        .basis()
        .iter()
        .map(|b| pairing.apply(b))
        .collect::<Result<Vec<_>>>()?;
    Ok(rank_kernel(&Matrix::from_rows(field, rows)?).1)
}

/// The relation `(x1x2)x3 + sign (x2x3)x1` in the given space.
pub fn cyclic_relation(space: MonomialSpace, field: FieldSpec, sign: i64) -> Vec<Scalar> {
    let mut v = vec![field.zero(); space.dim()];
    let (first, second) = match space {
        MonomialSpace::Full12 => (0, 4),
        MonomialSpace::Skew3 => (0, 1),
    };
    v[first] = field.one();
    v[second] = field.from_i64(sign);
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilpotencyReport {
    pub field: String,
    /// Rows `m1+m2`, `m2+m3`, `m3+m1` in the `Skew3` basis.
    pub relation_matrix: Vec<Vec<String>>,
    pub rank: usize,
    /// Rank 3 kills every `(x_i x_j) x_k`.
    pub forces_nilpotency: bool,
}

/// Cyclic images of `(x1x2)x3 + (x2x3)x1` in `Skew3` span the whole space
/// exactly when 2 is invertible.
pub fn dual_relations_force_nilpotency(field: FieldSpec) -> NilpotencyReport {
    let space = MonomialSpace::Skew3;
    let r = cyclic_relation(space, field, 1);
    let rows: Vec<Vec<Scalar>> = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
        .iter()
        .map(|&c| space.act(c, &r))
        .collect();
    let m = Matrix::from_rows(field, rows.clone()).expect("3x3");
    let rank = m.rank();
    NilpotencyReport {
        field: field.to_string(),
        relation_matrix: rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect(),
        rank,
        forces_nilpotency: rank == 3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn dims() {
        assert_eq!(acaa_dims(5), vec![1, 1, 1, 0, 0]);
        assert_eq!(dual_dims(4), vec![1, 1, 0, 0]);
    }

    #[test]
    fn labels() {
        let l = MonomialSpace::Full12.labels();
        assert_eq!(l[0], "(x1x2)x3");
        assert_eq!(l[1], "(x2x1)x3");
        assert_eq!(l[6], "x1(x2x3)");
        assert_eq!(l[10], "x2(x3x1)");
    }

    #[test]
    fn pairing_entries() {
        let m = pairing_matrix(Q);
        assert_eq!(m[(0, 0)], Q.one());
        assert_eq!(m[(6, 6)], Q.from_i64(-1));
        assert_eq!(m[(1, 1)], Q.from_i64(-1));
        let eps = [1, -1, -1, -1, 1, 1];
        for i in 0..12 {
            for j in 0..12 {
                let expected = if i != j {
                    0
                } else if i < 6 {
                    eps[i]
                } else {
                    -eps[i - 6]
                };
                assert_eq!(m[(i, j)], Q.from_i64(expected));
            }
        }
        assert_eq!(m.transpose(), m);
        assert_eq!(m.rank(), 12);
    }

    #[test]
    fn action_is_a_group_action() {
        for space in [MonomialSpace::Full12, MonomialSpace::Skew3] {
            for s in MONOMIAL_PERMS {
                for t in MONOMIAL_PERMS {
                    let st = [s[t[0]], s[t[1]], s[t[2]]];
                    for k in 0..space.dim() {
                        let mut v = vec![Q.zero(); space.dim()];
                        v[k] = Q.one();
                        assert_eq!(space.act(s, &space.act(t, &v)), space.act(st, &v));
                    }
                }
            }
        }
    }

    #[test]
    fn skew3_action() {
        let s = MonomialSpace::Skew3;
        assert_eq!(s.act_on_basis([1, 2, 0], 0), (1, 1));
        assert_eq!(s.act_on_basis([1, 0, 2], 0), (-1, 0));
        assert_eq!(s.act_on_basis([1, 0, 2], 1), (-1, 2));
    }

    #[test]
    fn complement_examples() {
        let sp = MonomialSpace::Full12;
        let zero = Subspace::zero(Q, 12);
        assert_eq!(
            orthogonal_complement(sp, &zero).unwrap(),
            Subspace::full(Q, 12)
        );
        assert_eq!(
            orthogonal_complement(sp, &Subspace::full(Q, 12)).unwrap(),
            zero
        );
        let five: Vec<Vec<Scalar>> = (0..5)
            .map(|i| {
                (0..12)
                    .map(|j| {
                        Q.from_i64(if j == i {
                            1
                        } else if j == i + 6 {
                            2
                        } else {
                            0
                        })
                    })
                    .collect()
            })
            .collect();
        let v = span(Q, five, 12).unwrap();
        assert_eq!(v.dim(), 5);
        let perp = orthogonal_complement(sp, &v).unwrap();
        assert_eq!(perp.dim(), 7);
        assert_eq!(orthogonal_complement(sp, &perp).unwrap(), v);
        assert!(orthogonal_complement(sp, &Subspace::zero(Q, 3)).is_err());
    }

    #[test]
    fn relation_modules() {
        let r = sigma3_span(
            MonomialSpace::Full12,
            Q,
            &[cyclic_relation(MonomialSpace::Full12, Q, -1)],
        )
        .unwrap();
        assert_eq!(r.dim(), 4);
        assert_eq!(
            orthogonal_complement(MonomialSpace::Full12, &r)
                .unwrap()
                .dim(),
            8
        );

        let s = MonomialSpace::Skew3;
        let r = sigma3_span(s, Q, &[cyclic_relation(s, Q, -1)]).unwrap();
        assert_eq!(r.dim(), 2);
        let perp = orthogonal_complement(s, &r).unwrap();
        assert_eq!(perp.basis(), &[vec![Q.one(), Q.one(), Q.one()]]);
        assert_eq!(
            sigma3_span(s, Q, &[cyclic_relation(s, Q, 1)])
                .unwrap()
                .dim(),
            3
        );
    }

    #[test]
    fn nilpotency() {
        let q = dual_relations_force_nilpotency(Q);
        assert_eq!(q.rank, 3);
        assert!(q.forces_nilpotency);
        assert_eq!(q.relation_matrix[0], vec!["1", "1", "0"]);
        assert_eq!(q.relation_matrix[1], vec!["0", "1", "1"]);
        let f2 = dual_relations_force_nilpotency(FieldSpec::prime(2).unwrap());
        assert_eq!(f2.rank, 2);
        assert!(!f2.forces_nilpotency);
    }
}
