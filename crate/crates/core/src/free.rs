//! Free Acaa algebras on `n` generators and normal forms of bracket words.
//!
//! The free algebra is graded with components of dimension `n`, `C(n,2)` and
//! `C(n,3)` in degrees 1 to 3; every product of degree 4 or more vanishes.
//! Basis order: generators `X_i`, then `X_ij = [X_i, X_j]` for `i < j`, then
//! `X_ijk = [X_i, [X_j, X_k]]` for `i < j < k`, each block lexicographic.

use std::collections::HashMap;
use std::fmt;

use crate::algebra::{Algebra, Element, Symmetry};
use crate::error::{Error, Result};
use crate::scalar::{binomial, permutation_sign, FieldSpec};

/// Largest generator count accepted by [`free_acaa`].
pub const MAX_GENERATORS: usize = 8;

#[derive(Clone, Debug)]
pub struct FreeAcaaAlgebra {
    n: usize,
    algebra: Algebra,
    /// Sorted generator indices making up each basis vector.
    supports: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl FreeAcaaAlgebra {
    pub fn generators(&self) -> usize {
        self.n
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn into_algebra(self) -> Algebra {
        self.algebra
    }

    pub fn degree(&self, basis_index: usize) -> usize {
        self.supports[basis_index].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.supports.iter().map(Vec::len).collect()
    }

    /// Basis index of `X_S` for a sorted generator set `S` of size 1 to 3.
    pub fn basis_index(&self, generators: &[usize]) -> Option<usize> {
        self.index.get(generators).copied()
    }

    /// Folds `multiply` over the word, without any rewriting.
    pub fn evaluate(&self, word: &BracketWord) -> Result<Element> {
        match word {
            BracketWord::Gen(g) => {
                self.check_gen(*g)?;
                Ok(self.algebra.basis(*g))
            }
            BracketWord::Bracket(l, r) => self
                .algebra
                .multiply(&self.evaluate(l)?, &self.evaluate(r)?),
        }
    }

    fn check_gen(&self, g: usize) -> Result<()> {
        if g >= self.n {
            return Err(Error::Invalid(format!(
                "generator X{} does not exist (n = {})",
                g + 1,
                self.n
            )));
        }
        Ok(())
    }
}

fn label(gens: &[usize]) -> String {
    let digits: String = gens.iter().map(|g| (g + 1).to_string()).collect();
    format!("X{digits}")
}

/// Sign of `[X_a, X_{bc}]` relative to `X_{sorted(a,b,c)}`.
fn triple_sign(a: usize, b: usize, c: usize) -> i64 {
    permutation_sign(&[a, b, c])
}

pub fn graded_dims(n: usize) -> Vec<usize> {
    vec![n, binomial(n, 2), binomial(n, 3)]
}

pub fn free_acaa(n: usize) -> Result<FreeAcaaAlgebra> {
    free_acaa_over(FieldSpec::Rationals, n)
}

pub fn free_acaa_over(field: FieldSpec, n: usize) -> Result<FreeAcaaAlgebra> {
    if n == 0 {
        return Err(Error::Invalid(
            "the free algebra needs at least one generator".into(),
        ));
    }
    if n > MAX_GENERATORS {
        return Err(Error::Unsupported(format!(
            "at most {MAX_GENERATORS} generators"
        )));
    }
    let mut supports: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    for i in 0..n {
        for j in i + 1..n {
            supports.push(vec![i, j]);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                supports.push(vec![i, j, k]);
            }
        }
    }
    let index: HashMap<Vec<usize>, usize> = supports
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();
    let dim = supports.len();

    let mut table = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            table.push((a, b, index[&vec![a, b]], 1));
        }
        for pair in supports.iter().filter(|s| s.len() == 2) {
            let (b, c) = (pair[0], pair[1]);
            if a == b || a == c {
                continue;
            }
            let mut sorted = vec![a, b, c];
            sorted.sort_unstable();
            table.push((a, index[pair], index[&sorted], triple_sign(a, b, c)));
        }
    }
    let labels = supports.iter().map(|s| label(s)).collect();
    let algebra = Algebra::from_table(field, dim, &table, Symmetry::Skew)?
        .with_name(format!("free{n}"))
        .with_labels(labels)?;
    Ok(FreeAcaaAlgebra {
        n,
        algebra,
        supports,
        index,
    })
}

/// A fully parenthesized bracket word over generators `X1..Xn`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BracketWord {
    /// 0-based generator index.
    Gen(usize),
    Bracket(Box<BracketWord>, Box<BracketWord>),
}

impl BracketWord {
    pub fn bracket(l: BracketWord, r: BracketWord) -> Self {
        BracketWord::Bracket(Box::new(l), Box::new(r))
    }

    pub fn degree(&self) -> usize {
        match self {
            BracketWord::Gen(_) => 1,
            BracketWord::Bracket(l, r) => l.degree() + r.degree(),
        }
    }

    /// Parses `X1`, `(X1 X2)`, `((X1 X2) X3)`, ... Generators are 1-based in text.
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser {
            text: text.as_bytes(),
            pos: 0,
        };
        let w = p.word()?;
        p.skip_ws();
        if p.pos != p.text.len() {
            return Err(p.error("trailing input"));
        }
        Ok(w)
    }

    /// Every bracketing of every word of the given degree over `n` generators.
    pub fn all_of_degree(n: usize, degree: usize) -> Vec<BracketWord> {
        if degree == 1 {
            return (0..n).map(BracketWord::Gen).collect();
        }
        let mut out = Vec::new();
        for left in 1..degree {
            for l in BracketWord::all_of_degree(n, left) {
                for r in BracketWord::all_of_degree(n, degree - left) {
                    out.push(BracketWord::bracket(l.clone(), r));
                }
            }
        }
        out
    }
}

impl fmt::Display for BracketWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketWord::Gen(g) => write!(f, "X{}", g + 1),
            BracketWord::Bracket(l, r) => write!(f, "({l} {r})"),
        }
    }
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn word(&mut self) -> Result<BracketWord> {
        self.skip_ws();
        match self.text.get(self.pos) {
            Some(b'(') => {
                self.pos += 1;
                let l = self.word()?;
                let r = self.word()?;
                self.skip_ws();
                if self.text.get(self.pos) != Some(&b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(BracketWord::bracket(l, r))
            }
            Some(b'X') => {
                self.pos += 1;
                let start = self.pos;
                while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
                match digits.parse::<usize>() {
                    Ok(g) if g >= 1 => Ok(BracketWord::Gen(g - 1)),
                    _ => Err(self.error("expected a generator number >= 1")),
                }
            }
            _ => Err(self.error("expected `(` or a generator `X<k>`")),
        }
    }
}

/// Result of [`normal_form`]: zero or `sign * X_S` for a basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalForm {
    Zero,
    Term { sign: i64, index: usize },
}

impl NormalForm {
    pub fn to_element(&self, f: &FreeAcaaAlgebra) -> Element {
        match self {
            NormalForm::Zero => f.algebra.zero_element(),
            NormalForm::Term { sign, index } => f
                .algebra
                .basis(*index)
                .scale(&f.algebra.field().from_i64(*sign)),
        }
    }

    pub fn display(&self, f: &FreeAcaaAlgebra) -> String {
        match self {
            NormalForm::Zero => "0".to_string(),
            NormalForm::Term { sign, index } => {
                let l = f.algebra.label(*index);
                if *sign < 0 {
                    format!("-{l}")
                } else {
                    l
                }
            }
        }
    }
}

/// Rewrites a bracket word to a signed basis monomial.
///
/// Works on generator sets rather than the structure tensor: words of degree
/// four or more vanish, repeated generators vanish (`[x,[y,x]] = 0`), and
/// degree-3 brackets are rotated into `[X_a, X_bc]` by anticommutativity.
pub fn normal_form(f: &FreeAcaaAlgebra, word: &BracketWord) -> Result<NormalForm> {
    fn check(f: &FreeAcaaAlgebra, w: &BracketWord) -> Result<()> {
        match w {
            BracketWord::Gen(g) => f.check_gen(*g),
            BracketWord::Bracket(l, r) => check(f, l).and_then(|_| check(f, r)),
        }
    }
    fn reduce(w: &BracketWord) -> Option<(i64, Vec<usize>)> {
        match w {
            BracketWord::Gen(g) => Some((1, vec![*g])),
            BracketWord::Bracket(l, r) => {
                if w.degree() >= 4 {
                    return None;
                }
                let (sl, a) = reduce(l)?;
                let (sr, b) = reduce(r)?;
                if a.iter().any(|g| b.contains(g)) {
                    return None;
                }
                let sign = sl * sr;
                let mut gens: Vec<usize> = a.iter().chain(&b).copied().collect();
                gens.sort_unstable();
                let s = match (a.as_slice(), b.as_slice()) {
                    (&[x], &[y]) => {
                        if x < y {
                            1
                        } else {
                            -1
                        }
                    }
                    (&[x], &[y, z]) => triple_sign(x, y, z),
                    (&[y, z], &[x]) => -triple_sign(x, y, z),
                    _ => unreachable!("degree bound excludes other shapes"),
                };
                Some((sign * s, gens))
            }
        }
    }
    check(f, word)?;
    Ok(match reduce(word) {
        None => NormalForm::Zero,
        Some((sign, gens)) => NormalForm::Term {
            sign,
            index: f.index[&gens],
        },
    })
}
