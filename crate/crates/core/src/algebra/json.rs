//! The algebra file format.
//!
//! ```json
//! { "name": "h3", "field": {"type": "Q"}, "dim": 3, "basis": ["e1","e2","e3"],
//!   "symmetry": "skew",
//!   "products": [ {"left": 0, "right": 1, "value": {"2": "1"}} ] }
//! ```
//!
//! Omitted pairs are zero products. For `"skew"` files only `left < right`
//! entries may appear; the opposite products are filled in by negation.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use super::{Algebra, Symmetry};
use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum FieldFile {
    Q,
    Fp { p: u64 },
}

impl FieldFile {
    pub fn to_field(&self) -> Result<FieldSpec> {
        match self {
            FieldFile::Q => Ok(FieldSpec::Rationals),
            FieldFile::Fp { p } => FieldSpec::prime(*p),
        }
    }

    pub fn from_field(field: FieldSpec) -> Self {
        match field {
            FieldSpec::Rationals => FieldFile::Q,
            FieldSpec::Prime(p) => FieldFile::Fp { p: p.get() },
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum SymmetryFile {
    #[default]
    None,
    Skew,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductFile {
    pub left: usize,
    pub right: usize,
    pub value: Map<String, Value>,
}

/// Serialized form of an [`Algebra`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub field: FieldFile,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub symmetry: SymmetryFile,
    #[serde(default)]
    pub products: Vec<ProductFile>,
}

pub(crate) fn scalar_to_json(x: &Scalar) -> Value {
    match x {
        Scalar::Rational(_) => Value::String(x.to_string()),
        Scalar::Modular { value, .. } => Value::from(*value),
    }
}

pub(crate) fn scalar_from_json(field: FieldSpec, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => field.parse(s),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(field.from_i64(i)),
            None => field.parse(&n.to_string()),
        },
        other => Err(Error::ParseScalar(other.to_string())),
    }
}

impl AlgebraFile {
    pub fn from_algebra(alg: &Algebra) -> Self {
        let n = alg.dim();
        let skew = alg.symmetry() == Symmetry::Skew;
        let mut products = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if skew && i >= j {
                    continue;
                }
                let mut value = Map::new();
                for (k, c) in alg.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        value.insert(k.to_string(), scalar_to_json(c));
                    }
                }
                if !value.is_empty() {
                    products.push(ProductFile {
                        left: i,
                        right: j,
                        value,
                    });
                }
            }
        }
        AlgebraFile {
            name: alg.name().map(str::to_string),
            field: FieldFile::from_field(alg.field()),
            dim: n,
            basis: alg.labels().map(<[String]>::to_vec),
            symmetry: if skew {
                SymmetryFile::Skew
            } else {
                SymmetryFile::None
            },
            products,
        }
    }

    pub fn to_algebra(&self) -> Result<Algebra> {
        let field = self.field.to_field()?;
        let n = self.dim;
        let skew = self.symmetry == SymmetryFile::Skew;
        let mut tensor = vec![field.zero(); n * n * n];
        let mut seen = std::collections::HashSet::new();
        for p in &self.products {
            let (i, j) = (p.left, p.right);
            if i >= n || j >= n {
                return Err(Error::InvalidAlgebra(format!(
                    "product ({i},{j}) out of range for dim {n}"
                )));
            }
            if skew && i >= j {
                return Err(Error::InvalidAlgebra(format!(
                    "skew algebras list only left < right products, found ({i},{j})"
                )));
            }
            if !seen.insert((i, j)) {
                return Err(Error::InvalidAlgebra(format!(
                    "duplicate product ({i},{j})"
                )));
            }
            for (key, v) in &p.value {
                let k: usize = key.parse().ok().filter(|&k| k < n).ok_or_else(|| {
                    Error::InvalidAlgebra(format!("bad output index `{key}` in ({i},{j})"))
                })?;
                let c = scalar_from_json(field, v)?;
                tensor[(i * n + j) * n + k] = c.clone();
                if skew {
                    tensor[(j * n + i) * n + k] = -c;
                }
            }
        }
        let symmetry = if skew { Symmetry::Skew } else { Symmetry::None };
        let mut alg = Algebra::new(field, n, tensor, symmetry)?;
        if let Some(name) = &self.name {
            alg = alg.with_name(name.clone());
        }
        if let Some(labels) = &self.basis {
            alg = alg.with_labels(labels.clone())?;
        }
        Ok(alg)
    }
}

impl Algebra {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&AlgebraFile::from_algebra(self))
            .expect("algebra files serialize")
    }

    pub fn from_json(text: &str) -> Result<Algebra> {
        let file: AlgebraFile =
            serde_json::from_str(text).map_err(|e| Error::Invalid(e.to_string()))?;
        file.to_algebra()
    }
}
