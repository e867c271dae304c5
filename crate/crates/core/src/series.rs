//! Truncated power series over Q without constant term, as used for the
//! generating series of operads.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `c_1 t + ... + c_N t^N`; anything of degree above `N` is dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

impl TruncatedSeries {
    /// Coefficients `c_1..c_N`; the order is the length.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigRational::zero(); order],
        }
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = BigRational::one();
        }
        s
    }

    /// From `(numerator, denominator)` pairs.
    pub fn from_ratios(coeffs: &[(i64, i64)]) -> Self {
        TruncatedSeries {
            coeffs: coeffs
                .iter()
                .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `t^k`, zero for `k = 0` or beyond the order.
    pub fn coeff(&self, k: usize) -> BigRational {
        if k == 0 {
            return BigRational::zero();
        }
        self.coeffs
            .get(k - 1)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Lowest `k` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|i| i + 1)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order, BigRational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (1..=n).map(|k| self.coeff(k) + rhs.coeff(k)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `f(-t)`.
    pub fn negate_argument(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 0 { -c } else { c.clone() })
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![BigRational::zero(); n];
        for i in 1..=n {
            let a = self.coeff(i);
            if a.is_zero() {
                continue;
            }
            for j in 1..=n - i {
                let b = rhs.coeff(j);
                if !b.is_zero() {
                    coeffs[i + j - 1] += &a * &b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    /// `self^k` for `k >= 1`.
    pub fn pow(&self, k: usize) -> Self {
        assert!(
            k >= 1,
            "series have no constant term, so only positive powers exist"
        );
        let mut out = self.clone();
        for _ in 1..k {
            out = out.mul(self);
        }
        out
    }

    /// `self(g(t))`, truncated at the smaller order.
    pub fn compose(&self, g: &Self) -> Self {
        let n = self.order().min(g.order());
        let g = g.truncate(n);
        let mut out = Self::zero(n);
        let mut power = g.clone();
        for k in 1..=n {
            let c = self.coeff(k);
            if !c.is_zero() {
                out = out.add(&power.scale(&c));
            }
            power = power.mul(&g);
        }
        out
    }

    /// Compositional inverse, solved one coefficient at a time.
    ///
    /// `Direct` gives `u` with `f(u(t)) = t`; `NegatedArgument` gives `v` with
    /// `f(-v(t)) = t`, i.e. `v = -u`.
    pub fn compositional_inverse(&self, convention: InverseConvention) -> Result<Self> {
        let n = self.order();
        let c1 = self.coeff(1);
        if c1.is_zero() {
            return Err(Error::Precondition(
                "series has zero linear coefficient".into(),
            ));
        }
        let mut u = Self::zero(n);
        if n > 0 {
            u.coeffs[0] = c1.recip();
        }
        for k in 2..=n {
            // With u_k = 0 the t^k coefficient of f(u) is the part not involving u_k;
            // u_k contributes c_1 u_k, which must cancel it.
            let rest = self.compose(&u).coeff(k);
            u.coeffs[k - 1] = -rest / &c1;
        }
        Ok(match convention {
            InverseConvention::Direct => u,
            InverseConvention::NegatedArgument => u.neg(),
        })
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = i + 1;
            let abs = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let var = if k == 1 {
                "t".to_string()
            } else {
                format!("t^{k}")
            };
            if abs.is_one() {
                f.write_str(&var)?;
            } else if abs.is_integer() {
                write!(f, "{abs}{var}")?;
            } else {
                if !abs.numer().is_one() {
                    write!(f, "{}", abs.numer())?;
                }
                write!(f, "{var}/{}", abs.denom())?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InverseConvention {
    #[default]
    Direct,
    NegatedArgument,
}

/// Which operad plays `P` in `g_{P!}(-g_P(-t)) = t`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum KoszulRoles {
    #[default]
    Standard,
    Swapped,
}

/// `sum_n (-1)^n dims[n-1] / n! t^n`; missing dimensions count as zero.
pub fn generating_series(dims: &[u64], order: usize) -> TruncatedSeries {
    TruncatedSeries {
        coeffs: (1..=order)
            .map(|n| {
                let d = dims.get(n - 1).copied().unwrap_or(0);
                let sign = if n % 2 == 0 { 1 } else { -1 };
                BigRational::new(BigInt::from(sign) * BigInt::from(d), factorial(n))
            })
            .collect(),
    }
}

/// `gDual(-gP(-t)) - t`, or `gP(-gDual(-t)) - t` with swapped roles.
pub fn koszul_residual(
    gp: &TruncatedSeries,
    gdual: &TruncatedSeries,
    order: usize,
    roles: KoszulRoles,
) -> TruncatedSeries {
    let (outer, inner) = match roles {
        KoszulRoles::Standard => (gdual, gp),
        KoszulRoles::Swapped => (gp, gdual),
    };
    let inner = inner.truncate(order).negate_argument().neg();
    outer
        .truncate(order)
        .compose(&inner)
        .sub(&TruncatedSeries::t(order))
}

/// Generating series of `Acaa`: `-t + t^2/2 - t^3/6`.
pub fn acaa_series(order: usize) -> TruncatedSeries {
    generating_series(&crate::operad::acaa_dims(order), order)
}

/// Generating series of the dual operad: `-t + t^2/2`.
pub fn dual_series(order: usize) -> TruncatedSeries {
    generating_series(&crate::operad::dual_dims(order), order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[(i64, i64)]) -> TruncatedSeries {
        TruncatedSeries::from_ratios(c)
    }

    #[test]
    fn generating_series_examples() {
        assert_eq!(acaa_series(4), s(&[(-1, 1), (1, 2), (-1, 6), (0, 1)]));
        assert_eq!(dual_series(3), s(&[(-1, 1), (1, 2), (0, 1)]));
        assert_eq!(generating_series(&[1], 3), s(&[(-1, 1), (0, 1), (0, 1)]));
    }

    #[test]
    fn compose_examples() {
        let g = s(&[(1, 1), (1, 1), (0, 1), (0, 1)]);
        let t2 = s(&[(0, 1), (1, 1), (0, 1), (0, 1)]);
        assert_eq!(t2.compose(&g), s(&[(0, 1), (1, 1), (2, 1), (1, 1)]));
        assert_eq!(TruncatedSeries::t(4).compose(&g), g);
    }

    #[test]
    fn inverse_examples() {
        let t = TruncatedSeries::t(5);
        assert_eq!(
            t.compositional_inverse(InverseConvention::Direct).unwrap(),
            t
        );
        let m = t.neg();
        assert_eq!(
            m.compositional_inverse(InverseConvention::Direct).unwrap(),
            m
        );
        assert!(s(&[(0, 1), (1, 1)])
            .compositional_inverse(InverseConvention::Direct)
            .is_err());
    }

    #[test]
    fn minimal_model_series() {
        let u = acaa_series(8)
            .compositional_inverse(InverseConvention::Direct)
            .unwrap();
        let expected = s(&[
            (-1, 1),
            (1, 2),
            (-1, 3),
            (5, 24),
            (-1, 12),
            (-7, 144),
            (13, 72),
            (-341, 1152),
        ]);
        assert_eq!(u, expected);
        let v = acaa_series(8)
            .compositional_inverse(InverseConvention::NegatedArgument)
            .unwrap();
        assert_eq!(v, expected.neg());
        assert_eq!(acaa_series(8).compose(&v.neg()), TruncatedSeries::t(8));
    }

    #[test]
    fn koszul_residuals() {
        let r = koszul_residual(&acaa_series(6), &dual_series(6), 6, KoszulRoles::Standard);
        assert_eq!(r, s(&[(0, 1), (1, 1), (2, 3), (7, 24), (1, 12), (1, 72)]));
        let r = koszul_residual(&acaa_series(6), &dual_series(6), 6, KoszulRoles::Swapped);
        assert_eq!(r, s(&[(0, 1), (1, 1), (2, 3), (3, 8), (1, 8), (1, 48)]));
        let d = dual_series(6);
        let r = koszul_residual(&d, &d, 6, KoszulRoles::Standard);
        assert_eq!(r, s(&[(0, 1), (1, 1), (1, 2), (1, 8), (0, 1), (0, 1)]));
        let a = TruncatedSeries::t(6).neg();
        assert!(koszul_residual(&a, &a, 6, KoszulRoles::Standard).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(acaa_series(3).to_string(), "-t + t^2/2 - t^3/6 + O(t^4)");
        assert_eq!(TruncatedSeries::zero(2).to_string(), "0 + O(t^3)");
        assert_eq!(s(&[(0, 1), (-3, 1)]).to_string(), "-3t^2 + O(t^3)");
    }
}
