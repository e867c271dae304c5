//! Named algebras: the small-dimensional Acaa classification lists, a few
//! larger examples, and some non-Acaa reference algebras used in tests.

use crate::algebra::{check_acaa, fingerprint, Algebra, Fingerprint, Symmetry};
use crate::error::{Error, Result};
use crate::scalar::FieldSpec;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: Algebra,
    pub fingerprint: Fingerprint,
    pub reference: &'static str,
}

fn skew(field: FieldSpec, dim: usize, name: &str, table: &[(usize, usize, usize, i64)]) -> Algebra {
    Algebra::from_table(field, dim, table, Symmetry::Skew)
        .expect("catalog tables are well formed")
        .with_name(name)
}

pub fn abelian(field: FieldSpec, dim: usize) -> Algebra {
    Algebra::abelian(field, dim).with_name(format!("abelian{dim}"))
}

/// `[e1,e2] = e3`
pub fn heisenberg3(field: FieldSpec) -> Algebra {
    skew(field, 3, "h3", &[(0, 1, 2, 1)])
}

/// `[e1,e2] = e3` in dimension 4.
pub fn h3_plus_k(field: FieldSpec) -> Algebra {
    skew(field, 4, "h3+K", &[(0, 1, 2, 1)])
}

/// `[e1,e2] = e3` in dimension 5.
pub fn h3_plus_k2(field: FieldSpec) -> Algebra {
    skew(field, 5, "h3+K2", &[(0, 1, 2, 1)])
}

/// `[e1,e2] = e3, [e1,e4] = e5`
pub fn l5(field: FieldSpec) -> Algebra {
    skew(field, 5, "L5", &[(0, 1, 2, 1), (0, 3, 4, 1)])
}

/// `[e1,e2] = e5 = [e3,e4]`
pub fn heisenberg5(field: FieldSpec) -> Algebra {
    skew(field, 5, "h5", &[(0, 1, 4, 1), (2, 3, 4, 1)])
}

/// Free 2-step nilpotent Lie algebra on three generators:
/// `[e1,e2] = e4, [e1,e3] = e5, [e2,e3] = e6`.
pub fn n6(field: FieldSpec) -> Algebra {
    skew(field, 6, "n6", &[(0, 1, 3, 1), (0, 2, 4, 1), (1, 2, 5, 1)])
}

/// The seven-dimensional non-Lie Acaa algebra:
/// `[e1,e2] = e4, [e1,e3] = e5, [e2,e3] = e6, [e1,e6] = -[e2,e5] = [e3,e4] = e7`.
pub fn example_seven(field: FieldSpec) -> Algebra {
    skew(
        field,
        7,
        "acaa7",
        &[
            (0, 1, 3, 1),
            (0, 2, 4, 1),
            (1, 2, 5, 1),
            (0, 5, 6, 1),
            (1, 4, 6, -1),
            (2, 3, 6, 1),
        ],
    )
}

pub fn free3(field: FieldSpec) -> Algebra {
    crate::free::free_acaa_over(field, 3)
        .expect("three generators are supported")
        .into_algebra()
}

/// `so(3)`: `[e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2`. Lie, not Acaa.
pub fn so3(field: FieldSpec) -> Algebra {
    skew(field, 3, "so3", &[(0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1)])
}

/// Upper-triangular 2x2 matrices on the basis `E11, E12, E22`.
pub fn upper_triangular2(field: FieldSpec) -> Algebra {
    Algebra::from_table(
        field,
        3,
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)],
        Symmetry::None,
    )
    .expect("well formed")
    .with_name("t2")
}

/// Full 2x2 matrices on the basis `E11, E12, E21, E22`.
pub fn matrix_algebra2(field: FieldSpec) -> Algebra {
    let mut table = Vec::new();
    let idx = |r: usize, c: usize| 2 * r + c;
    for (i, j) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        for l in 0..2 {
            table.push((idx(i, j), idx(j, l), idx(i, l), 1));
        }
    }
    Algebra::from_table(field, 4, &table, Symmetry::None)
        .expect("well formed")
        .with_name("gl2")
}

fn entry(algebra: Algebra, fp: Fingerprint, reference: &'static str) -> CatalogEntry {
    CatalogEntry {
        name: algebra
            .name()
            .expect("catalog algebras are named")
            .to_string(),
        algebra,
        fingerprint: fp,
        reference,
    }
}

const Q: FieldSpec = FieldSpec::Rationals;

/// The classification list for dimension 2 to 5: every Acaa algebra of that
/// dimension over a field of characteristic zero is isomorphic to exactly one
/// entry.
pub fn catalog(dim: usize) -> Result<Vec<CatalogEntry>> {
    let ab = |d| entry(abelian(Q, d), Fingerprint::new(d, 0, d, 0), "abelian");
    Ok(match dim {
        2 => vec![ab(2)],
        3 => vec![
            ab(3),
            entry(
                heisenberg3(Q),
                Fingerprint::new(3, 1, 1, 0),
                "Heisenberg algebra",
            ),
        ],
        4 => vec![
            ab(4),
            entry(h3_plus_k(Q), Fingerprint::new(4, 1, 2, 0), "h3 plus a line"),
        ],
        5 => vec![
            ab(5),
            entry(
                h3_plus_k2(Q),
                Fingerprint::new(5, 1, 3, 0),
                "h3 plus a plane",
            ),
            entry(
                l5(Q),
                Fingerprint::new(5, 2, 2, 0),
                "[e1,e2]=e3, [e1,e4]=e5",
            ),
            entry(
                heisenberg5(Q),
                Fingerprint::new(5, 1, 1, 0),
                "Heisenberg algebra",
            ),
        ],
        _ => {
            return Err(Error::Unsupported(format!(
                "no classification list for dimension {dim}; see extra_entries()"
            )))
        }
    })
}

/// Named algebras outside the classification lists.
pub fn extra_entries() -> Vec<CatalogEntry> {
    vec![
        entry(
            free3(Q),
            Fingerprint::new(7, 4, 1, 1),
            "free Acaa algebra on three generators",
        ),
        entry(
            example_seven(Q),
            Fingerprint::new(7, 4, 1, 1),
            "seven-dimensional non-Lie example",
        ),
        entry(
            n6(Q),
            Fingerprint::new(6, 3, 3, 0),
            "free 2-step nilpotent Lie algebra on three generators",
        ),
    ]
}

pub fn all_entries() -> Vec<CatalogEntry> {
    let mut all: Vec<CatalogEntry> = (2..=5)
        .flat_map(|d| catalog(d).expect("supported"))
        .collect();
    all.extend(extra_entries());
    all
}

pub fn lookup(name: &str) -> Option<CatalogEntry> {
    all_entries().into_iter().find(|e| e.name == name)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recognition {
    Known(String),
    Unknown,
}

impl std::fmt::Display for Recognition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Recognition::Known(n) => f.write_str(n),
            Recognition::Unknown => f.write_str("unknown"),
        }
    }
}

/// Identifies an Acaa algebra of dimension 2 to 5 over the rationals by
/// fingerprint. Other dimensions are reported as unknown.
pub fn recognize(alg: &Algebra) -> Result<Recognition> {
    if alg.field() != FieldSpec::Rationals {
        return Err(Error::Precondition(
            "recognition works over the rationals".into(),
        ));
    }
    if let Some(w) = check_acaa(alg)?.witness() {
        return Err(Error::Precondition(format!(
            "not an Acaa algebra: fails at ({})",
            w.labels(alg).join(",")
        )));
    }
    if !(2..=5).contains(&alg.dim()) {
        return Ok(Recognition::Unknown);
    }
    let fp = fingerprint(alg);
    Ok(catalog(alg.dim())?
        .into_iter()
        .find(|e| e.fingerprint == fp)
        .map_or(Recognition::Unknown, |e| Recognition::Known(e.name)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_jacobi, Symmetry};

    #[test]
    fn list_sizes() {
        assert_eq!(catalog(2).unwrap().len(), 1);
        assert_eq!(catalog(3).unwrap().len(), 2);
        assert_eq!(catalog(4).unwrap().len(), 2);
        assert_eq!(catalog(5).unwrap().len(), 4);
        assert!(catalog(6).is_err());
        assert!(catalog(1).is_err());
    }

    #[test]
    fn entries_are_acaa_with_expected_fingerprints() {
        for e in all_entries() {
            assert!(check_acaa(&e.algebra).unwrap().holds(), "{}", e.name);
            assert_eq!(fingerprint(&e.algebra), e.fingerprint, "{}", e.name);
            let lie = check_jacobi(&e.algebra).holds();
            assert_eq!(lie, e.fingerprint.cube_dim == 0, "{}", e.name);
        }
    }

    #[test]
    fn recognize_examples() {
        assert_eq!(
            recognize(&Algebra::abelian(Q, 4)).unwrap(),
            Recognition::Known("abelian4".into())
        );
        let sum = heisenberg3(Q).direct_sum(&Algebra::abelian(Q, 2)).unwrap();
        assert_eq!(recognize(&sum).unwrap(), Recognition::Known("h3+K2".into()));
        assert_eq!(recognize(&n6(Q)).unwrap(), Recognition::Unknown);
        assert!(recognize(&so3(Q)).is_err());
        assert!(recognize(&heisenberg3(FieldSpec::prime(3).unwrap())).is_err());
        let not_anti = Algebra::from_table(Q, 2, &[(0, 0, 1, 1)], Symmetry::None).unwrap();
        assert!(recognize(&not_anti).is_err());
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(lookup("h5").unwrap().algebra, heisenberg5(Q));
        assert!(lookup("free3").is_some());
        assert!(lookup("nope").is_none());
    }
}
