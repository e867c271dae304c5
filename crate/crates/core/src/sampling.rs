//! Seeded pseudo-random exact objects for property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Element};
use crate::linalg::Matrix;
use crate::scalar::{FieldSpec, Scalar};

/// All randomized sampling goes through one of these, so a seed fixes
/// every sampled object.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Small scalar: integers in `[-3, 3]`, occasionally halved or thirded over Q.
    pub fn scalar(&mut self, field: FieldSpec) -> Scalar {
        let num = self.rng.gen_range(-3..=3);
        match field {
            FieldSpec::Rationals => {
                let den = [1, 1, 1, 2, 3][self.rng.gen_range(0..5)];
                field.from_ratio(num, den).expect("nonzero denominator")
            }
            FieldSpec::Prime(_) => field.from_i64(num),
        }
    }

    pub fn vector(&mut self, field: FieldSpec, len: usize) -> Vec<Scalar> {
        (0..len).map(|_| self.scalar(field)).collect()
    }

    pub fn element(&mut self, alg: &Algebra) -> Element {
        alg.element(self.vector(alg.field(), alg.dim()))
            .expect("length matches")
    }

    pub fn matrix(&mut self, field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = self.scalar(field);
            }
        }
        m
    }

    /// Rejection-samples an invertible square matrix.
    pub fn invertible(&mut self, field: FieldSpec, n: usize) -> Matrix {
        loop {
            let m = self.matrix(field, n, n);
            if m.rank() == n {
                return m;
            }
        }
    }

    /// Dense tensor of length `len`; used for cochains.
    pub fn tensor(&mut self, field: FieldSpec, len: usize) -> Vec<Scalar> {
        self.vector(field, len)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_streams_repeat() {
        let q = FieldSpec::Rationals;
        let a = Sampler::new(7).matrix(q, 3, 3);
        let b = Sampler::new(7).matrix(q, 3, 3);
        assert_eq!(a, b);
        assert_eq!(Sampler::new(1).invertible(q, 4).rank(), 4);
    }
}
