use std::fmt;

use serde::{Deserialize, Serialize};

use super::Algebra;
use crate::linalg::{span, Matrix};
use crate::scalar::Scalar;

/// Isomorphism invariants `(dim, dim A^2, dim Ann(A), dim A^3)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub derived_dim: usize,
    pub ann_dim: usize,
    pub cube_dim: usize,
}

impl Fingerprint {
    pub const fn new(dim: usize, derived_dim: usize, ann_dim: usize, cube_dim: usize) -> Self {
        Fingerprint {
            dim,
            derived_dim,
            ann_dim,
            cube_dim,
        }
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{})",
            self.dim, self.derived_dim, self.ann_dim, self.cube_dim
        )
    }
}

fn nonzero(v: &[Scalar]) -> bool {
    v.iter().any(|x| !x.is_zero())
}

pub fn fingerprint(alg: &Algebra) -> Fingerprint {
    let n = alg.dim();
    let field = alg.field();

    let products: Vec<Vec<Scalar>> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| alg.basis_product(i, j).to_vec())
        .filter(|v| nonzero(v))
        .collect();
    let derived = span(field, products, n).expect("products have length dim");

    // A^3 is spanned by A^2 * A and A * A^2, and A^2 by the echelon basis above.
    let mut cubes = Vec::new();
    for d in derived.basis() {
        for k in 0..n {
            cubes.push(alg.right_basis_mul(d, k));
            cubes.push(alg.left_basis_mul(k, d));
        }
    }
    cubes.retain(|v| nonzero(v));
    let cube = span(field, cubes, n).expect("products have length dim");

    // x is in the annihilator iff x e_j = e_j x = 0 for all j; one row per
    // (j, side, output coordinate), one column per coordinate of x.
    let mut m = Matrix::zeros(field, 2 * n * n, n);
    for j in 0..n {
        for k in 0..n {
            for i in 0..n {
                m[((2 * j) * n + k, i)] = alg.structure_constant(i, j, k).clone();
                m[((2 * j + 1) * n + k, i)] = alg.structure_constant(j, i, k).clone();
            }
        }
    }
    let ann_dim = n - m.rank();

    Fingerprint {
        dim: n,
        derived_dim: derived.dim(),
        ann_dim,
        cube_dim: cube.dim(),
    }
}
