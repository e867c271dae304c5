use std::fmt;
use std::path::{Path, PathBuf};

use acaa_core::catalog;
use acaa_core::free::free_acaa;
use acaa_core::{Algebra, FieldSpec, Scalar};

/// Anything that should exit with status 2: bad flags, unreadable or
/// malformed files, violated preconditions.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<acaa_core::Error> for InputError {
    fn from(e: acaa_core::Error) -> Self {
        InputError(e.to_string())
    }
}

pub type CliResult<T> = Result<T, InputError>;

pub fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

pub fn parse_json<T: serde::de::DeserializeOwned>(path: &Path, text: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn named(name: &str) -> Option<Algebra> {
    const Q: FieldSpec = FieldSpec::Rationals;
    if let Some(e) = catalog::lookup(name) {
        return Some(e.algebra);
    }
    match name {
        "so3" => Some(catalog::so3(Q)),
        "t2" => Some(catalog::upper_triangular2(Q)),
        "gl2" => Some(catalog::matrix_algebra2(Q)),
        _ => {
            let n: usize = name.strip_prefix("free")?.parse().ok()?;
            free_acaa(n).ok().map(|f| f.into_algebra())
        }
    }
}

/// Resolves an algebra argument: an existing file (relative to `base` when
/// given), otherwise a catalog name such as `h3`, `L5`, `free3` or `so3`.
pub fn resolve_algebra(arg: &str, base: Option<&Path>) -> CliResult<Algebra> {
    let path = match base {
        Some(dir) => dir.join(arg),
        None => PathBuf::from(arg),
    };
    if path.is_file() {
        let text = read_file(&path)?;
        let file: acaa_core::algebra::AlgebraFile = parse_json(&path, &text)?;
        return file
            .to_algebra()
            .map_err(|e| InputError(format!("{}: {e}", path.display())));
    }
    named(arg).ok_or_else(|| {
        InputError(format!(
            "`{arg}` is neither a readable file nor a catalog name"
        ))
    })
}

pub fn parse_scalars(field: FieldSpec, text: &str) -> CliResult<Vec<Scalar>> {
    text.split(',')
        .map(|s| field.parse(s.trim()).map_err(InputError::from))
        .collect()
}

pub fn parse_usizes(text: &str) -> CliResult<Vec<usize>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| InputError(format!("`{s}` is not a natural number")))
        })
        .collect()
}

/// Degree of each basis vector of a free algebra, recovered from its labels
/// (`X1` has degree 1, `X12` degree 2, `X123` degree 3).
pub fn free_degrees(alg: &Algebra) -> Option<Vec<usize>> {
    let labels = alg.labels()?;
    labels
        .iter()
        .map(|l| {
            l.strip_prefix('X')
                .map(str::len)
                .filter(|d| (1..=3).contains(d))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        assert_eq!(resolve_algebra("h3", None).unwrap().dim(), 3);
        assert_eq!(resolve_algebra("free4", None).unwrap().dim(), 14);
        assert_eq!(resolve_algebra("gl2", None).unwrap().dim(), 4);
        assert!(resolve_algebra("free99", None).is_err());
        assert!(resolve_algebra("nope", None).is_err());
    }

    #[test]
    fn degrees_from_labels() {
        let f = resolve_algebra("free3", None).unwrap();
        assert_eq!(free_degrees(&f).unwrap(), vec![1, 1, 1, 2, 2, 2, 3]);
        assert!(free_degrees(&resolve_algebra("h3", None).unwrap()).is_none());
    }

    #[test]
    fn scalar_lists() {
        let q = FieldSpec::Rationals;
        assert_eq!(
            parse_scalars(q, "1, -1/2").unwrap(),
            vec![q.one(), q.from_ratio(-1, 2).unwrap()]
        );
        assert!(parse_scalars(q, "1,x").is_err());
        assert_eq!(parse_usizes("1,2").unwrap(), vec![1, 2]);
    }
}
