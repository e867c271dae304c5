//! Adjoint operators and associative representations of Acaa algebras.
//!
//! A representation assigns a matrix `rho(e_i)` to each basis vector so that
//! `rho([x,y]) = -rho(x) rho(y) = rho(y) rho(x)`. The adjoint map
//! `x -> ad x` is the basic example; it is never faithful on a nonzero
//! Acaa algebra with nontrivial center.

use serde::{Deserialize, Serialize};

use crate::algebra::{check_acaa, identities::pairs, Algebra, Element, Verdict};
use crate::enumerate::chunked;
use crate::error::{Error, Result};
use crate::linalg::{span, Matrix};
use crate::scalar::{is_prime, Scalar};

/// Matrix of `y -> [x, y]`; column `j` holds the coordinates of `[x, e_j]`.
pub fn ad_matrix(alg: &Algebra, x: &Element) -> Result<Matrix> {
    alg.check_element(x)?;
    let n = alg.dim();
    let mut m = Matrix::zeros(alg.field(), n, n);
    for j in 0..n {
        let col = alg.right_basis_mul(x.coords(), j);
        for (i, c) in col.into_iter().enumerate() {
            m[(i, j)] = c;
        }
    }
    Ok(m)
}

fn ad_basis(alg: &Algebra) -> Vec<Matrix> {
    (0..alg.dim())
        .map(|i| ad_matrix(alg, &alg.basis(i)).expect("basis vector"))
        .collect()
}

fn flatten(m: &Matrix) -> Vec<Scalar> {
    m.row_vectors().concat()
}

fn combine(alg: &Algebra, coords: &[Scalar], mats: &[Matrix]) -> Matrix {
    let mut acc = Matrix::zeros(alg.field(), mats[0].rows(), mats[0].cols());
    for (c, m) in coords.iter().zip(mats) {
        if !c.is_zero() {
            acc = acc.add(&m.scale(c)).expect("same shape");
        }
    }
    acc
}

/// Checks, for all basis pairs `(i, j)`:
/// `ad e_i ad e_j + ad e_j ad e_i = 0`, `(ad e_i)^2 = 0` and
/// `2 ad[e_i,e_j] = -(ad e_i ad e_j - ad e_j ad e_i)`.
///
/// The residual of a failure is the two flattened matrices concatenated.
pub fn check_ad_identities(alg: &Algebra) -> Result<Verdict> {
    if let Some(w) = check_acaa(alg)?.witness() {
        return Err(Error::Precondition(format!(
            "not an Acaa algebra at ({})",
            w.labels(alg).join(",")
        )));
    }
    let ads = ad_basis(alg);
    let two = alg.field().from_i64(2);
    Ok(Verdict::first_failure(pairs(alg.dim()), |t| {
        let (i, j) = (t[0], t[1]);
        let ij = ads[i].mul(&ads[j]).unwrap();
        let ji = ads[j].mul(&ads[i]).unwrap();
        // For i == j the first identity is 2 (ad e_i)^2 = 0.
        let anti = ij.add(&ji).unwrap();
        let bracket = alg.basis_product(i, j);
        let lhs = combine(alg, bracket, &ads).scale(&two);
        let weighted = lhs.add(&ij.sub(&ji).unwrap()).unwrap();
        let mut r = flatten(&anti);
        r.extend(flatten(&weighted));
        r
    }))
}

/// Checks `k f([e_i,e_j]) + [e_i, f(e_j)] + [f(e_i), e_j] = 0` for all pairs.
pub fn check_weighted_antiderivation(alg: &Algebra, f: &Matrix, k: i64) -> Result<Verdict> {
    if f.field() != alg.field() {
        return Err(Error::FieldMismatch {
            left: alg.field(),
            right: f.field(),
        });
    }
    if f.rows() != alg.dim() || f.cols() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: f.rows(),
        });
    }
    if k <= 0 {
        return Err(Error::Invalid(
            "the weight must be a positive integer".into(),
        ));
    }
    let weight = alg.field().from_i64(k);
    let images: Vec<Vec<Scalar>> = (0..alg.dim()).map(|j| f.column(j)).collect();
    Ok(Verdict::first_failure(pairs(alg.dim()), |t| {
        let (i, j) = (t[0], t[1]);
        let fij = f.apply(alg.basis_product(i, j)).unwrap();
        let a = alg.left_basis_mul(i, &images[j]);
        let b = alg.right_basis_mul(&images[i], j);
        fij.iter()
            .zip(a.iter().zip(&b))
            .map(|(x, (y, z))| &(&(&weight * x) + y) + z)
            .collect()
    }))
}

/// A linear map from an Acaa algebra to square matrices, given on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    source: Algebra,
    target_dim: usize,
    images: Vec<Matrix>,
}

impl Representation {
    pub fn new(source: Algebra, target_dim: usize, images: Vec<Matrix>) -> Result<Self> {
        if images.len() != source.dim() {
            return Err(Error::DimensionMismatch {
                expected: source.dim(),
                found: images.len(),
            });
        }
        for m in &images {
            if m.field() != source.field() {
                return Err(Error::FieldMismatch {
                    left: source.field(),
                    right: m.field(),
                });
            }
            if m.rows() != target_dim || m.cols() != target_dim {
                return Err(Error::DimensionMismatch {
                    expected: target_dim,
                    found: m.rows(),
                });
            }
        }
        Ok(Representation {
            source,
            target_dim,
            images,
        })
    }

    pub fn adjoint(source: &Algebra) -> Self {
        Representation {
            source: source.clone(),
            target_dim: source.dim(),
            images: ad_basis(source),
        }
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn images(&self) -> &[Matrix] {
        &self.images
    }

    pub fn image(&self, x: &Element) -> Result<Matrix> {
        self.source.check_element(x)?;
        if self.images.is_empty() {
            return Ok(Matrix::zeros(
                self.source.field(),
                self.target_dim,
                self.target_dim,
            ));
        }
        Ok(combine(&self.source, x.coords(), &self.images))
    }
}

/// Checks `rho([e_i,e_j]) = -rho(e_i) rho(e_j)` and
/// `rho(e_i) rho(e_j) = -rho(e_j) rho(e_i)` for all basis pairs; the
/// diagonal pairs cover `rho(e_i)^2 = 0`.
pub fn check_representation(r: &Representation) -> Result<Verdict> {
    let alg = &r.source;
    if let Some(w) = check_acaa(alg)?.witness() {
        return Err(Error::Precondition(format!(
            "source is not Acaa at ({})",
            w.labels(alg).join(",")
        )));
    }
    Ok(Verdict::first_failure(pairs(alg.dim()), |t| {
        let (i, j) = (t[0], t[1]);
        let ij = r.images[i].mul(&r.images[j]).unwrap();
        let ji = r.images[j].mul(&r.images[i]).unwrap();
        let bracket = if r.images.is_empty() {
            Matrix::zeros(alg.field(), r.target_dim, r.target_dim)
        } else {
            combine(alg, alg.basis_product(i, j), &r.images)
        };
        let mut res = flatten(&bracket.add(&ij).unwrap());
        res.extend(flatten(&ij.add(&ji).unwrap()));
        if i == j {
            res.extend(flatten(&ij));
        }
        res
    }))
}

/// Injectivity of the linear map `rho`, i.e. linear independence of the
/// basis images.
pub fn is_faithful(r: &Representation) -> Result<bool> {
    if let Some(w) = check_representation(r)?.witness() {
        return Err(Error::Precondition(format!(
            "not a representation at {:?}",
            w.indices
        )));
    }
    let field = r.source.field();
    let vectors: Vec<Vec<Scalar>> = r.images.iter().map(flatten).collect();
    let rank = span(field, vectors, r.target_dim * r.target_dim)?.dim();
    Ok(rank == r.source.dim())
}

/// JSON form: `{"source": "<name or file>", "target_dim": d, "images": [[["1","0"],...],...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationFile {
    pub source: serde_json::Value,
    pub target_dim: usize,
    pub images: Vec<Vec<Vec<serde_json::Value>>>,
}

impl RepresentationFile {
    pub fn from_representation(r: &Representation, source: serde_json::Value) -> Self {
        let images = r
            .images
            .iter()
            .map(|m| {
                m.row_vectors()
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(crate::algebra::json::scalar_to_json)
                            .collect()
                    })
                    .collect()
            })
            .collect();
        RepresentationFile {
            source,
            target_dim: r.target_dim,
            images,
        }
    }

    /// Builds the representation given an already resolved source algebra.
    pub fn to_representation(&self, source: Algebra) -> Result<Representation> {
        let field = source.field();
        let images = self
            .images
            .iter()
            .map(|rows| {
                let rows = rows
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|v| crate::algebra::json::scalar_from_json(field, v))
                            .collect()
                    })
                    .collect::<Result<Vec<Vec<Scalar>>>>()?;
                if rows.len() != self.target_dim {
                    return Err(Error::DimensionMismatch {
                        expected: self.target_dim,
                        found: rows.len(),
                    });
                }
                if self.target_dim == 0 {
                    return Ok(Matrix::zeros(field, 0, 0));
                }
                Matrix::from_rows(field, rows)
            })
            .collect::<Result<Vec<_>>>()?;
        Representation::new(source, self.target_dim, images)
    }
}

/// Outcome of [`h3_faithfulness_search`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchOutcome {
    /// Every admissible pair satisfies `XY = 0`.
    Exhausted { square_zero: u64, pairs: u64 },
    /// `X^2 = Y^2 = 0`, `XY = -YX`, but `XY != 0` (row-major entries).
    Counterexample { x: Vec<u32>, y: Vec<u32> },
}

/// Upper bound on matrices enumerated by [`h3_faithfulness_search`].
pub const SEARCH_LIMIT: u128 = 10_000_000;

fn mat_mul(a: &[u32], b: &[u32], d: usize, p: u32) -> Vec<u32> {
    let mut out = vec![0u32; d * d];
    for i in 0..d {
        for k in 0..d {
            let x = a[i * d + k];
            if x == 0 {
                continue;
            }
            for j in 0..d {
                out[i * d + j] += x * b[k * d + j];
            }
        }
    }
    out.iter_mut().for_each(|v| *v %= p);
    out
}

/// Exhaustively looks for a faithful representation of `h3 = <e1, e2, e3 = [e1,e2]>`
/// by `d x d` matrices over `F_p`.
///
/// Such a representation needs `X = rho(e1)`, `Y = rho(e2)` with
/// `X^2 = Y^2 = 0` and `XY = -YX`, and then `rho(e3) = -XY`. The search
/// enumerates every square-zero matrix first and then every pair of them;
/// any pair with `XY != 0` is returned as a counterexample.
pub fn h3_faithfulness_search(p: u64, d: usize, jobs: usize) -> Result<SearchOutcome> {
    if p == 2 || !is_prime(p) {
        return Err(Error::Unsupported(format!(
            "the search needs an odd prime, got {p}"
        )));
    }
    if d != 3 {
        return Err(Error::Unsupported(format!(
            "the search is defined for 3x3 matrices, got {d}"
        )));
    }
    let total = (p as u128).pow((d * d) as u32);
    if total > SEARCH_LIMIT {
        return Err(Error::TooLarge {
            candidates: total,
            limit: SEARCH_LIMIT,
        });
    }
    let p = p as u32;
    let decode = |mut code: u64| -> Vec<u32> {
        (0..d * d)
            .map(|_| {
                let v = (code % p as u64) as u32;
                code /= p as u64;
                v
            })
            .collect()
    };
    let square_zero: Vec<Vec<u32>> = chunked(total as u64, jobs, |lo, hi| {
        (lo..hi)
            .map(decode)
            .filter(|m| mat_mul(m, m, d, p).iter().all(|&v| v == 0))
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect();

    let count = square_zero.len() as u64;
    let results = chunked(count, jobs, |lo, hi| {
        let mut pairs = 0u64;
        for a in lo..hi {
            let x = &square_zero[a as usize];
            for y in &square_zero {
                let xy = mat_mul(x, y, d, p);
                let yx = mat_mul(y, x, d, p);
                if xy.iter().zip(&yx).any(|(u, v)| (u + v) % p != 0) {
                    continue;
                }
                pairs += 1;
                if xy.iter().any(|&v| v != 0) {
                    return Err((x.clone(), y.clone()));
                }
            }
        }
        Ok(pairs)
    });
    let mut pairs = 0;
    for r in results {
        match r {
            Ok(n) => pairs += n,
            Err((x, y)) => return Ok(SearchOutcome::Counterexample { x, y }),
        }
    }
    Ok(SearchOutcome::Exhausted {
        square_zero: count,
        pairs,
    })
}
