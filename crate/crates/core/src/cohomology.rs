//! Low-degree cochains of an Acaa algebra with values in itself.
//!
//! `C^1` is `End(A)`, `C^2` the skew bilinear maps and `C^3` the trilinear
//! maps symmetric in their first two arguments. The differentials are:
//!
//! ```text
//! d1 f (u,v)         = f[u,v] - [u,f v] - [f u,v]
//! d2 phi (X,Y,Z)     = phi(X,[Y,Z]) + [X,phi(Y,Z)] - phi(Y,[Z,X]) - [Y,phi(Z,X)]
//! d3 psi (X1,..,X4)  = psi(X1,X2,[X3,X4]) + psi(X1,[X3,X4],X2) + psi(X2,[X3,X4],X1)
//!                    + [X1,psi(X2,X3,X4)] + [X1,psi(X2,X4,X3)] + [X1,psi(X4,X3,X2)]
//! ```
//!
//! `d2 . d1 = 0` on Acaa algebras. Nothing is claimed about `d3 . d2`; it is
//! exposed so its residual can be inspected.

use serde::{Deserialize, Serialize};

use crate::algebra::json::{scalar_from_json, scalar_to_json};
use crate::algebra::{
    check_acaa, check_anticommutative, identities::triples, Algebra, Element, FieldFile, Verdict,
};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::repr::ad_matrix;
use crate::sampling::Sampler;
use crate::scalar::{FieldSpec, Scalar};

/// A `k`-linear map `A^k -> A`, stored densely on basis tuples.
///
/// The value on `(e_a1, ..., e_ak)` occupies `dim` consecutive entries
/// starting at `((a1 * dim + a2) * dim + ... + ak) * dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    field: FieldSpec,
    dim: usize,
    arity: usize,
    values: Vec<Scalar>,
}

impl Cochain {
    pub fn new(field: FieldSpec, dim: usize, arity: usize, values: Vec<Scalar>) -> Result<Self> {
        let expected = dim.pow(arity as u32 + 1);
        if values.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: values.len(),
            });
        }
        for v in &values {
            crate::linalg::check_field(field, v)?;
        }
        Ok(Cochain {
            field,
            dim,
            arity,
            values,
        })
    }

    pub fn zero(field: FieldSpec, dim: usize, arity: usize) -> Self {
        Cochain {
            field,
            dim,
            arity,
            values: vec![field.zero(); dim.pow(arity as u32 + 1)],
        }
    }

    pub fn from_matrix(f: &Matrix) -> Result<Self> {
        if !f.is_square() {
            return Err(Error::DimensionMismatch {
                expected: f.rows(),
                found: f.cols(),
            });
        }
        let n = f.rows();
        let values = (0..n).flat_map(|j| f.column(j)).collect();
        Ok(Cochain {
            field: f.field(),
            dim: n,
            arity: 1,
            values,
        })
    }

    /// The bracket of `alg` viewed as a 2-cochain.
    pub fn from_bracket(alg: &Algebra) -> Self {
        Cochain {
            field: alg.field(),
            dim: alg.dim(),
            arity: 2,
            values: alg.tensor().to_vec(),
        }
    }

    /// Random skew 2-cochain: a random tensor minus its transpose.
    pub fn random_skew(sampler: &mut Sampler, field: FieldSpec, dim: usize) -> Self {
        let raw = sampler.tensor(field, dim * dim * dim);
        let mut values = Vec::with_capacity(raw.len());
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    values.push(&raw[(i * dim + j) * dim + k] - &raw[(j * dim + i) * dim + k]);
                }
            }
        }
        Cochain {
            field,
            dim,
            arity: 2,
            values,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Scalar::is_zero)
    }

    pub fn to_matrix(&self) -> Result<Matrix> {
        if self.arity != 1 {
            return Err(Error::Invalid(format!(
                "a {}-cochain is not a matrix",
                self.arity
            )));
        }
        let n = self.dim;
        let mut m = Matrix::zeros(self.field, n, n);
        for j in 0..n {
            for i in 0..n {
                m[(i, j)] = self.values[j * n + i].clone();
            }
        }
        Ok(m)
    }

    /// Value on a tuple of basis vectors.
    pub fn on_basis(&self, args: &[usize]) -> &[Scalar] {
        debug_assert_eq!(args.len(), self.arity);
        let start = args.iter().fold(0, |acc, &a| acc * self.dim + a) * self.dim;
        &self.values[start..start + self.dim]
    }

    /// Value on arbitrary coordinate vectors, expanded multilinearly.
    pub fn eval(&self, args: &[&[Scalar]]) -> Vec<Scalar> {
        assert_eq!(args.len(), self.arity, "wrong number of arguments");
        let mut out = vec![self.field.zero(); self.dim];
        let mut idx = vec![0usize; self.arity];
        self.eval_rec(args, 0, self.field.one(), &mut idx, &mut out);
        out
    }

    fn eval_rec(
        &self,
        args: &[&[Scalar]],
        pos: usize,
        coeff: Scalar,
        idx: &mut Vec<usize>,
        out: &mut [Scalar],
    ) {
        if pos == args.len() {
            for (o, v) in out.iter_mut().zip(self.on_basis(idx)) {
                if !v.is_zero() {
                    *o += &(&coeff * v);
                }
            }
            return;
        }
        for (a, c) in args[pos].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            idx[pos] = a;
            self.eval_rec(args, pos + 1, &coeff * c, idx, out);
        }
    }

    /// `phi(e_i, e_j) = -phi(e_j, e_i)` and `phi(e_i, e_i) = 0`.
    pub fn check_skew(&self) -> Verdict {
        assert_eq!(self.arity, 2, "skewness is a property of 2-cochains");
        let n = self.dim;
        let tuples = (0..n).flat_map(move |i| (i..n).map(move |j| vec![i, j]));
        Verdict::first_failure(tuples, |t| {
            let (i, j) = (t[0], t[1]);
            if i == j {
                self.on_basis(&[i, i]).to_vec()
            } else {
                add(self.on_basis(&[i, j]), self.on_basis(&[j, i]))
            }
        })
    }

    /// `psi(X,Y,Z) = psi(Y,X,Z)`, the defining condition of `C^3`.
    pub fn check_symmetric_first_two(&self) -> Verdict {
        assert_eq!(self.arity, 3, "this symmetry applies to 3-cochains");
        Verdict::first_failure(triples(self.dim), |t| {
            sub(
                self.on_basis(&[t[0], t[1], t[2]]),
                self.on_basis(&[t[1], t[0], t[2]]),
            )
        })
    }
}

fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn require_anticommutative(alg: &Algebra) -> Result<()> {
    if let Some(w) = check_anticommutative(alg).witness() {
        return Err(Error::Precondition(format!(
            "product is not anticommutative at {:?}",
            w.indices
        )));
    }
    Ok(())
}

fn require_shape(alg: &Algebra, c: &Cochain, arity: usize) -> Result<()> {
    if c.field != alg.field() {
        return Err(Error::FieldMismatch {
            left: alg.field(),
            right: c.field,
        });
    }
    if c.dim != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: c.dim,
        });
    }
    if c.arity != arity {
        return Err(Error::Invalid(format!(
            "expected a {arity}-cochain, got arity {}",
            c.arity
        )));
    }
    Ok(())
}

/// `ad a`. This is only a convenient default for the first arrow: in general
/// `d1(ad a)(u,v) = 3[a,[u,v]]`, so `d1 . d0 != 0`.
pub fn delta0(alg: &Algebra, a: &Element) -> Result<Matrix> {
    ad_matrix(alg, a)
}

pub fn delta1(alg: &Algebra, f: &Matrix) -> Result<Cochain> {
    require_anticommutative(alg)?;
    let f = Cochain::from_matrix(f)?;
    require_shape(alg, &f, 1)?;
    let n = alg.dim();
    let mut values = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            let a = f.eval(&[alg.basis_product(i, j)]);
            let b = alg.left_basis_mul(i, f.on_basis(&[j]));
            let c = alg.right_basis_mul(f.on_basis(&[i]), j);
            values.extend(sub(&sub(&a, &b), &c));
        }
    }
    Ok(Cochain {
        field: alg.field(),
        dim: n,
        arity: 2,
        values,
    })
}

pub fn delta2(alg: &Algebra, phi: &Cochain) -> Result<Cochain> {
    require_anticommutative(alg)?;
    require_shape(alg, phi, 2)?;
    if let Some(w) = phi.check_skew().witness() {
        return Err(Error::Precondition(format!(
            "2-cochain is not skew at {:?}",
            w.indices
        )));
    }
    let n = alg.dim();
    let mut values = Vec::with_capacity(n.pow(4));
    for (x, y, z) in (0..n).flat_map(|x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z)))) {
        let e = |i: usize| alg.basis(i).into_coords();
        let t1 = phi.eval(&[&e(x), alg.basis_product(y, z)]);
        let t2 = alg.left_basis_mul(x, phi.on_basis(&[y, z]));
        let t3 = phi.eval(&[&e(y), alg.basis_product(z, x)]);
        let t4 = alg.left_basis_mul(y, phi.on_basis(&[z, x]));
        values.extend(sub(&sub(&add(&t1, &t2), &t3), &t4));
    }
    Ok(Cochain {
        field: alg.field(),
        dim: n,
        arity: 3,
        values,
    })
}

pub fn delta3(alg: &Algebra, psi: &Cochain) -> Result<Cochain> {
    require_anticommutative(alg)?;
    require_shape(alg, psi, 3)?;
    if let Some(w) = psi.check_symmetric_first_two().witness() {
        return Err(Error::Precondition(format!(
            "3-cochain is not in C^3 at {:?}",
            w.indices
        )));
    }
    let n = alg.dim();
    let e: Vec<Vec<Scalar>> = (0..n).map(|i| alg.basis(i).into_coords()).collect();
    let mut values = Vec::with_capacity(n.pow(5));
    for x1 in 0..n {
        for x2 in 0..n {
            for x3 in 0..n {
                for x4 in 0..n {
                    let b34 = alg.basis_product(x3, x4);
                    let mut acc = psi.eval(&[&e[x1], &e[x2], b34]);
                    acc = add(&acc, &psi.eval(&[&e[x1], b34, &e[x2]]));
                    acc = add(&acc, &psi.eval(&[&e[x2], b34, &e[x1]]));
                    acc = add(&acc, &alg.left_basis_mul(x1, psi.on_basis(&[x2, x3, x4])));
                    acc = add(&acc, &alg.left_basis_mul(x1, psi.on_basis(&[x2, x4, x3])));
                    acc = add(&acc, &alg.left_basis_mul(x1, psi.on_basis(&[x4, x3, x2])));
                    values.extend(acc);
                }
            }
        }
    }
    Ok(Cochain {
        field: alg.field(),
        dim: n,
        arity: 4,
        values,
    })
}

/// Checks `d2 phi (X,Y,Z) + d2 phi (Y,Z,X) + d2 phi (Z,X,Y) = 0` on basis triples.
pub fn check_cyclic_sum(alg: &Algebra, phi: &Cochain) -> Result<Verdict> {
    let psi = delta2(alg, phi)?;
    Ok(Verdict::first_failure(triples(alg.dim()), |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        add(
            &add(psi.on_basis(&[x, y, z]), psi.on_basis(&[y, z, x])),
            psi.on_basis(&[z, x, y]),
        )
    }))
}

/// An Acaa algebra with a degree in `{1, 2, 3}` for each basis vector,
/// compatible with the product: `e_i e_j` lies in degree `deg i + deg j`.
#[derive(Clone, Debug)]
pub struct GradedAcaa {
    algebra: Algebra,
    degrees: Vec<usize>,
}

impl GradedAcaa {
    pub fn new(algebra: Algebra, degrees: Vec<usize>) -> Result<Self> {
        if degrees.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                found: degrees.len(),
            });
        }
        if let Some(d) = degrees.iter().find(|d| !(1..=3).contains(*d)) {
            return Err(Error::Invalid(format!("degree {d} outside 1..=3")));
        }
        if let Some(w) = check_acaa(&algebra)?.witness() {
            return Err(Error::Precondition(format!(
                "not an Acaa algebra at {:?}",
                w.indices
            )));
        }
        let n = algebra.dim();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in algebra.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() && degrees[k] != degrees[i] + degrees[j] {
                        return Err(Error::Invalid(format!(
                            "grading incompatible with product e{}e{} -> e{}",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(GradedAcaa { algebra, degrees })
    }

    pub fn free(n: usize) -> Result<Self> {
        let f = crate::free::free_acaa(n)?;
        let degrees = f.degrees();
        GradedAcaa::new(f.into_algebra(), degrees)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }
}

/// `g_X(e) = (-1)^(i+j) i j [X, e]` for homogeneous `X = e_x` of degree `i`
/// and basis vectors `e` of degree `j`; zero when `i + j >= 4`.
pub fn g_map(g: &GradedAcaa, x: usize) -> Result<Matrix> {
    let alg = &g.algebra;
    if x >= alg.dim() {
        return Err(Error::Invalid(format!("basis index {x} out of range")));
    }
    let n = alg.dim();
    let i = g.degrees[x] as i64;
    let mut m = Matrix::zeros(alg.field(), n, n);
    for e in 0..n {
        let j = g.degrees[e] as i64;
        if i + j >= 4 {
            continue;
        }
        let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
        let c = alg.field().from_i64(sign * i * j);
        for (r, v) in alg.basis_product(x, e).iter().enumerate() {
            m[(r, e)] = &c * v;
        }
    }
    Ok(m)
}

/// Which sampled cohomology check to run.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CohomologyCheck {
    D2D1,
    Cyclic,
    D3D2,
    GMap,
}

/// Summary of a sampled cohomology check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: CohomologyCheck,
    pub samples: usize,
    /// Samples (or basis vectors, for `GMap`) where the expected identity failed.
    pub failures: usize,
    /// Index of the first failing sample and its basis witness.
    pub first_failure: Option<(usize, Vec<usize>)>,
    /// For `D3D2`: number of nonzero entries of `d3(d2 phi)` per sample.
    pub residual_support: Vec<usize>,
}

fn record(report: &mut CheckReport, sample: usize, witness: Option<Vec<usize>>) {
    if let Some(w) = witness {
        report.failures += 1;
        if report.first_failure.is_none() {
            report.first_failure = Some((sample, w));
        }
    }
}

/// Checks a single cochain: an endomorphism (arity 1) for `D2D1`, a skew
/// 2-cochain for `Cyclic` and `D3D2`. Returns the failing basis tuple, if any,
/// and for `D3D2` the number of nonzero entries of `d3(d2 phi)`.
fn check_one(
    alg: &Algebra,
    check: CohomologyCheck,
    c: &Cochain,
) -> Result<(Option<Vec<usize>>, usize)> {
    let n = alg.dim();
    match check {
        CohomologyCheck::D2D1 => {
            let out = delta2(alg, &delta1(alg, &c.to_matrix()?)?)?;
            let pos = out.values.iter().position(|v| !v.is_zero());
            Ok((pos.map(|p| unflatten(p / n, n, 3)), 0))
        }
        CohomologyCheck::Cyclic => {
            let psi = delta2(alg, c)?;
            if let Some(w) = psi.check_symmetric_first_two().witness() {
                return Ok((Some(w.indices.clone()), 0));
            }
            Ok((
                check_cyclic_sum(alg, c)?
                    .witness()
                    .map(|w| w.indices.clone()),
                0,
            ))
        }
        CohomologyCheck::D3D2 => {
            let out = delta3(alg, &delta2(alg, c)?)?;
            Ok((None, out.values.iter().filter(|v| !v.is_zero()).count()))
        }
        CohomologyCheck::GMap => Err(Error::Invalid("the g_X check takes no cochain".into())),
    }
}

/// Runs one of the sampled checks:
///
/// * `D2D1`: `d2(d1 f) = 0` for random endomorphisms `f`.
/// * `Cyclic`: `d2 phi` is in `C^3` and has vanishing cyclic sum, random skew `phi`.
/// * `D3D2`: reports the support of `d3(d2 phi)`; never counted as a failure.
/// * `GMap`: `d1(g_X)` vanishes on degree-1 arguments for every basis vector `X`
///   (needs a grading; `samples` is ignored).
pub fn run_check(
    alg: &Algebra,
    grading: Option<&GradedAcaa>,
    check: CohomologyCheck,
    samples: usize,
    seed: u64,
) -> Result<CheckReport> {
    let mut sampler = Sampler::new(seed);
    let (field, n) = (alg.field(), alg.dim());
    let mut report = CheckReport {
        check,
        samples,
        failures: 0,
        first_failure: None,
        residual_support: Vec::new(),
    };
    if check == CohomologyCheck::GMap {
        let g =
            grading.ok_or_else(|| Error::Invalid("the g_X check needs a graded algebra".into()))?;
        report.samples = n;
        let ones: Vec<usize> = (0..n).filter(|&e| g.degrees[e] == 1).collect();
        for x in 0..n {
            let d = delta1(alg, &g_map(g, x)?)?;
            let bad = ones
                .iter()
                .flat_map(|&y| ones.iter().map(move |&z| (y, z)))
                .find(|&(y, z)| d.on_basis(&[y, z]).iter().any(|v| !v.is_zero()));
            record(&mut report, x, bad.map(|(y, z)| vec![x, y, z]));
        }
        return Ok(report);
    }
    for s in 0..samples {
        let c = match check {
            CohomologyCheck::D2D1 => Cochain::from_matrix(&sampler.matrix(field, n, n))?,
            _ => Cochain::random_skew(&mut sampler, field, n),
        };
        let (witness, support) = check_one(alg, check, &c)?;
        record(&mut report, s, witness);
        if check == CohomologyCheck::D3D2 {
            report.residual_support.push(support);
        }
    }
    Ok(report)
}

/// Runs `D2D1`, `Cyclic` or `D3D2` on one given cochain.
pub fn check_cochain(alg: &Algebra, check: CohomologyCheck, c: &Cochain) -> Result<CheckReport> {
    let expected = if check == CohomologyCheck::D2D1 { 1 } else { 2 };
    require_shape(alg, c, expected)?;
    let mut report = CheckReport {
        check,
        samples: 1,
        failures: 0,
        first_failure: None,
        residual_support: Vec::new(),
    };
    let (witness, support) = check_one(alg, check, c)?;
    record(&mut report, 0, witness);
    if check == CohomologyCheck::D3D2 {
        report.residual_support.push(support);
    }
    Ok(report)
}

/// JSON form of a cochain: `{"field": {...}, "dim": n, "arity": k, "values": [...]}`
/// with `values` the dense tensor in [`Cochain`] order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainFile {
    pub field: FieldFile,
    pub dim: usize,
    pub arity: usize,
    pub values: Vec<serde_json::Value>,
}

impl CochainFile {
    pub fn from_cochain(c: &Cochain) -> Self {
        CochainFile {
            field: FieldFile::from_field(c.field),
            dim: c.dim,
            arity: c.arity,
            values: c.values.iter().map(scalar_to_json).collect(),
        }
    }

    pub fn to_cochain(&self) -> Result<Cochain> {
        let field = self.field.to_field()?;
        let values = self
            .values
            .iter()
            .map(|v| scalar_from_json(field, v))
            .collect::<Result<Vec<_>>>()?;
        Cochain::new(field, self.dim, self.arity, values)
    }
}

fn unflatten(mut pos: usize, n: usize, arity: usize) -> Vec<usize> {
    let mut idx = vec![0; arity];
    for slot in idx.iter_mut().rev() {
        *slot = pos % n;
        pos /= n;
    }
    idx
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::free::free_acaa;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn delta1_examples() {
        let h3 = catalog::heisenberg3(Q);
        let d = delta1(&h3, &Matrix::identity(Q, 3)).unwrap();
        let minus: Vec<Scalar> = h3.tensor().iter().map(|x| -x).collect();
        assert_eq!(d.values(), &minus[..]);
        assert!(delta1(&h3, &Matrix::zeros(Q, 3, 3)).unwrap().is_zero());
        assert!(d.check_skew().holds());
    }

    #[test]
    fn delta1_of_ad_on_free3() {
        let f = free_acaa(3).unwrap();
        let a = f.algebra();
        for g in 0..a.dim() {
            let d = delta1(a, &delta0(a, &a.basis(g)).unwrap()).unwrap();
            for u in 0..3 {
                for v in 0..3 {
                    let expected: Vec<Scalar> = a
                        .left_basis_mul(g, a.basis_product(u, v))
                        .iter()
                        .map(|x| x * &Q.from_i64(3))
                        .collect();
                    assert_eq!(d.on_basis(&[u, v]), &expected[..]);
                }
            }
        }
    }

    #[test]
    fn delta2_examples() {
        let h3 = catalog::heisenberg3(Q);
        assert!(delta2(&h3, &Cochain::from_bracket(&h3)).unwrap().is_zero());
        assert!(delta2(&h3, &Cochain::zero(Q, 3, 2)).unwrap().is_zero());
        let f3 = free_acaa(3).unwrap().into_algebra();
        let mut s = Sampler::new(3);
        for _ in 0..5 {
            let f = s.matrix(Q, 7, 7);
            assert!(delta2(&f3, &delta1(&f3, &f).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn delta2_rejects_non_skew() {
        let h3 = catalog::heisenberg3(Q);
        let mut v = vec![Q.zero(); 27];
        v[0] = Q.one();
        let phi = Cochain::new(Q, 3, 2, v).unwrap();
        assert!(matches!(delta2(&h3, &phi), Err(Error::Precondition(_))));
        assert!(delta2(&h3, &Cochain::zero(Q, 3, 3)).is_err());
    }

    #[test]
    fn delta3_examples() {
        let h3 = catalog::heisenberg3(Q);
        assert!(delta3(&h3, &Cochain::zero(Q, 3, 3)).unwrap().is_zero());
        let mut s = Sampler::new(11);
        for _ in 0..5 {
            let phi = Cochain::random_skew(&mut s, Q, 3);
            let psi = delta2(&h3, &phi).unwrap();
            assert!(delta3(&h3, &psi).unwrap().is_zero());
        }
    }

    #[test]
    fn g_map_examples() {
        let g = GradedAcaa::free(3).unwrap();
        let a = g.algebra();
        let m = g_map(&g, 0).unwrap();
        assert_eq!(
            m.apply(a.basis(1).coords()).unwrap(),
            a.basis(3).into_coords()
        );
        let m = g_map(&g, 3).unwrap();
        assert!(m
            .apply(a.basis(4).coords())
            .unwrap()
            .iter()
            .all(Scalar::is_zero));
        let r = run_check(a, Some(&g), CohomologyCheck::GMap, 0, 0).unwrap();
        assert_eq!(r.failures, 0);
    }

    #[test]
    fn grading_is_validated() {
        let h3 = catalog::heisenberg3(Q);
        assert!(GradedAcaa::new(h3.clone(), vec![1, 1, 2]).is_ok());
        assert!(GradedAcaa::new(h3.clone(), vec![1, 1, 1]).is_err());
        assert!(GradedAcaa::new(h3.clone(), vec![1, 1]).is_err());
        assert!(GradedAcaa::new(h3, vec![1, 1, 4]).is_err());
        assert!(GradedAcaa::new(catalog::so3(Q), vec![1, 1, 2]).is_err());
    }

    #[test]
    fn cyclic_sum_on_heisenberg() {
        let h3 = catalog::heisenberg3(Q);
        assert!(check_cyclic_sum(&h3, &Cochain::zero(Q, 3, 2))
            .unwrap()
            .holds());
        let r = run_check(&h3, None, CohomologyCheck::Cyclic, 10, 5).unwrap();
        assert_eq!(r.failures, 0);
    }

    #[test]
    fn cochain_file_round_trip() {
        let mut s = Sampler::new(4);
        let phi = Cochain::random_skew(&mut s, Q, 3);
        let file = CochainFile::from_cochain(&phi);
        let text = serde_json::to_string(&file).unwrap();
        let back: CochainFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_cochain().unwrap(), phi);
        let h3 = catalog::heisenberg3(Q);
        assert_eq!(
            check_cochain(&h3, CohomologyCheck::Cyclic, &phi)
                .unwrap()
                .failures,
            0
        );
        assert!(check_cochain(&h3, CohomologyCheck::D2D1, &phi).is_err());
    }

    #[test]
    fn cochain_eval_is_multilinear() {
        let f3 = free_acaa(3).unwrap().into_algebra();
        let mut s = Sampler::new(2);
        let phi = Cochain::random_skew(&mut s, Q, 7);
        let (x, y) = (s.vector(Q, 7), s.vector(Q, 7));
        let direct = phi.eval(&[&x, &y]);
        let swapped = phi.eval(&[&y, &x]);
        assert_eq!(direct, swapped.iter().map(|v| -v).collect::<Vec<_>>());
        let m = s.matrix(Q, 7, 7);
        assert_eq!(Cochain::from_matrix(&m).unwrap().to_matrix().unwrap(), m);
        assert_eq!(
            Cochain::from_matrix(&m).unwrap().eval(&[&x]),
            m.apply(&x).unwrap()
        );
        let _ = f3;
    }
}
