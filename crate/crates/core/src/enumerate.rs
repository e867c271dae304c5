//! Exhaustive classification of small alternating algebras over `F_p`.
//!
//! Every alternating tensor in dimension 2 or 3 is enumerated, the Acaa ones
//! are kept, and the isomorphism classes are counted as explicit orbits of
//! `GL(dim, p)` acting by change of basis.

#![allow(clippy::needless_range_loop)] // index loops mirror c[i][j][k]

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::is_prime;

/// Upper bound on enumerated tensors.
pub const CANDIDATE_LIMIT: u128 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationSummary {
    pub dim: usize,
    pub p: u32,
    pub candidates: u64,
    pub acaa_count: u64,
    pub iso_classes: usize,
    /// Orbit size of each class, in order of the smallest code in the orbit.
    pub orbit_sizes: Vec<u64>,
}

type Table = [[[u32; 3]; 3]; 3];

#[derive(Copy, Clone)]
struct Space {
    dim: usize,
    p: u32,
    pairs: &'static [(usize, usize)],
}

impl Space {
    fn coords(&self) -> usize {
        self.pairs.len() * self.dim
    }

    fn decode(&self, mut code: u64) -> Table {
        let p = self.p as u64;
        let mut t = [[[0u32; 3]; 3]; 3];
        for &(i, j) in self.pairs {
            for k in 0..self.dim {
                let c = (code % p) as u32;
                code /= p;
                t[i][j][k] = c;
                t[j][i][k] = (self.p - c) % self.p;
            }
        }
        t
    }

    fn encode(&self, t: &Table) -> u64 {
        let p = self.p as u64;
        let mut code = 0;
        let mut place = 1;
        for &(i, j) in self.pairs {
            for k in 0..self.dim {
                code += t[i][j][k] as u64 * place;
                place *= p;
            }
        }
        code
    }

    /// Linearized Acaa identity `[e_i,[e_j,e_k]] + [e_k,[e_j,e_i]] = 0`.
    fn is_acaa(&self, t: &Table) -> bool {
        let (d, p) = (self.dim, self.p);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for out in 0..d {
                        let mut s = 0u32;
                        for m in 0..d {
                            s += t[j][k][m] * t[i][m][out] + t[j][i][m] * t[k][m][out];
                        }
                        if !s.is_multiple_of(p) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// `g . t`, i.e. `(x, y) -> g t(g^-1 x, g^-1 y)`, given `g` and its inverse.
    fn act(&self, t: &Table, g: &[u32; 9], ginv: &[u32; 9]) -> Table {
        let (d, p) = (self.dim, self.p);
        let mut out = [[[0u32; 3]; 3]; 3];
        for &(i, j) in self.pairs {
            // v = t(h e_i, h e_j) with h = g^-1, then out = g v.
            let mut v = [0u32; 3];
            for a in 0..d {
                let ha = ginv[a * d + i];
                if ha == 0 {
                    continue;
                }
                for b in 0..d {
                    let hb = ginv[b * d + j];
                    if hb == 0 {
                        continue;
                    }
                    let w = ha * hb % p;
                    for m in 0..d {
                        v[m] = (v[m] + w * t[a][b][m]) % p;
                    }
                }
            }
            for r in 0..d {
                let mut s = 0;
                for m in 0..d {
                    s += g[r * d + m] * v[m];
                }
                out[i][j][r] = s % p;
                out[j][i][r] = (p - s % p) % p;
            }
        }
        out
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut acc, mut base, mut e) = (1u64, a as u64, (p - 2) as u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Decodes group element `code` as a `d x d` matrix and returns it with its
/// inverse, or `None` if singular.
fn group_element(code: u64, d: usize, p: u32) -> Option<([u32; 9], [u32; 9])> {
    let mut m = [0u32; 9];
    let mut c = code;
    for x in m.iter_mut().take(d * d) {
        *x = (c % p as u64) as u32;
        c /= p as u64;
    }
    let pi = p as i64;
    let at = |r: usize, s: usize| m[r * d + s] as i64;
    let mut inv = [0u32; 9];
    match d {
        2 => {
            let det = (at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0)).rem_euclid(pi) as u32;
            if det == 0 {
                return None;
            }
            let di = inv_mod(det, p) as i64;
            let adj = [at(1, 1), -at(0, 1), -at(1, 0), at(0, 0)];
            for (o, a) in inv.iter_mut().zip(adj) {
                *o = (a * di).rem_euclid(pi) as u32;
            }
        }
        3 => {
            let cof = |r: usize, s: usize| {
                let (r1, r2) = ((r + 1) % 3, (r + 2) % 3);
                let (s1, s2) = ((s + 1) % 3, (s + 2) % 3);
                at(r1, s1) * at(r2, s2) - at(r1, s2) * at(r2, s1)
            };
            let det = (0..3)
                .map(|s| at(0, s) * cof(0, s))
                .sum::<i64>()
                .rem_euclid(pi) as u32;
            if det == 0 {
                return None;
            }
            let di = inv_mod(det, p) as i64;
            for r in 0..3 {
                for s in 0..3 {
                    // inverse = adjugate / det, adjugate[r][s] = cofactor[s][r]
                    inv[r * 3 + s] = (cof(s, r) * di).rem_euclid(pi) as u32;
                }
            }
        }
        _ => unreachable!("dimension is validated"),
    }
    Some((m, inv))
}

/// Splits `0..total` into `jobs` contiguous chunks and runs `work` on each.
pub(crate) fn chunked<T: Send>(
    total: u64,
    jobs: usize,
    work: impl Fn(u64, u64) -> T + Sync,
) -> Vec<T> {
    let jobs = jobs.max(1) as u64;
    let step = total.div_ceil(jobs).max(1);
    let work = &work;
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|c| (c * step, ((c + 1) * step).min(total)))
            .filter(|(lo, hi)| lo < hi)
            .map(|(lo, hi)| s.spawn(move || work(lo, hi)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

pub fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

pub fn enumerate_finite(dim: usize, p: u64) -> Result<EnumerationSummary> {
    enumerate_finite_with_jobs(dim, p, default_jobs())
}

pub fn enumerate_finite_with_jobs(dim: usize, p: u64, jobs: usize) -> Result<EnumerationSummary> {
    static PAIRS2: [(usize, usize); 1] = [(0, 1)];
    static PAIRS3: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];
    let pairs: &'static [(usize, usize)] = match dim {
        2 => &PAIRS2,
        3 => &PAIRS3,
        _ => {
            return Err(Error::Unsupported(format!(
                "enumeration covers dimensions 2 and 3, not {dim}"
            )))
        }
    };
    if p == 2 || !is_prime(p) {
        return Err(Error::Unsupported(format!(
            "enumeration needs an odd prime, got {p}"
        )));
    }
    let space_size = (p as u128)
        .checked_pow((pairs.len() * dim) as u32)
        .unwrap_or(u128::MAX);
    let group_size = (p as u128)
        .checked_pow((dim * dim) as u32)
        .unwrap_or(u128::MAX);
    let worst = space_size.max(group_size);
    if worst > CANDIDATE_LIMIT {
        return Err(Error::TooLarge {
            candidates: worst,
            limit: CANDIDATE_LIMIT,
        });
    }
    let space = Space {
        dim,
        p: p as u32,
        pairs,
    };
    debug_assert_eq!(space.coords(), pairs.len() * dim);
    let total = space_size as u64;

    let acaa: Vec<u64> = chunked(total, jobs, |lo, hi| {
        (lo..hi)
            .filter(|&c| space.is_acaa(&space.decode(c)))
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect();

    let mut is_acaa = vec![false; total as usize];
    for &c in &acaa {
        is_acaa[c as usize] = true;
    }
    let mut visited = vec![false; total as usize];
    let mut orbit_sizes = Vec::new();
    let group_codes = group_size as u64;
    for &rep in &acaa {
        if visited[rep as usize] {
            continue;
        }
        let t = space.decode(rep);
        let parts = chunked(group_codes, jobs, |lo, hi| {
            let mut codes: Vec<u64> = (lo..hi)
                .filter_map(|g| group_element(g, dim, space.p))
                .map(|(g, ginv)| space.encode(&space.act(&t, &g, &ginv)))
                .collect();
            codes.sort_unstable();
            codes.dedup();
            codes
        });
        let mut size = 0;
        for code in parts.into_iter().flatten() {
            let c = code as usize;
            assert!(is_acaa[c], "group action left the Acaa locus");
            if !visited[c] {
                visited[c] = true;
                size += 1;
            }
        }
        orbit_sizes.push(size);
    }

    Ok(EnumerationSummary {
        dim,
        p: p as u32,
        candidates: total,
        acaa_count: acaa.len() as u64,
        iso_classes: orbit_sizes.len(),
        orbit_sizes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_acaa, Algebra, Symmetry};
    use crate::scalar::FieldSpec;

    #[test]
    fn dimension_two() {
        for p in [3, 5, 7] {
            let s = enumerate_finite_with_jobs(2, p, 2).unwrap();
            assert_eq!(s.candidates, p * p);
            assert_eq!((s.acaa_count, s.iso_classes), (1, 1));
        }
    }

    #[test]
    fn dimension_three_mod_three() {
        let s = enumerate_finite_with_jobs(3, 3, 3).unwrap();
        assert_eq!(s.candidates, 19683);
        assert_eq!(s.iso_classes, 2);
        assert_eq!(s.orbit_sizes.iter().sum::<u64>(), s.acaa_count);
        assert_eq!(s.orbit_sizes[0], 1);
    }

    #[test]
    fn fast_filter_matches_generic_check() {
        let f3 = FieldSpec::prime(3).unwrap();
        let space = Space {
            dim: 3,
            p: 3,
            pairs: &[(0, 1), (0, 2), (1, 2)],
        };
        for code in (0..19683).step_by(37) {
            let t = space.decode(code);
            let mut table = Vec::new();
            for &(i, j) in space.pairs {
                for k in 0..3 {
                    table.push((i, j, k, t[i][j][k] as i64));
                }
            }
            let alg = Algebra::from_table(f3, 3, &table, Symmetry::Skew).unwrap();
            assert_eq!(
                space.is_acaa(&t),
                check_acaa(&alg).unwrap().holds(),
                "code {code}"
            );
            assert_eq!(space.encode(&t), code);
        }
    }

    #[test]
    fn group_inverse_is_inverse() {
        for code in 0..19683u64 {
            if let Some((g, h)) = group_element(code, 3, 3) {
                for r in 0..3 {
                    for c in 0..3 {
                        let s: u32 = (0..3).map(|m| g[r * 3 + m] * h[m * 3 + c]).sum();
                        assert_eq!(s % 3, u32::from(r == c));
                    }
                }
            }
        }
    }

    #[test]
    fn job_count_does_not_change_result() {
        let a = enumerate_finite_with_jobs(3, 3, 1).unwrap();
        let b = enumerate_finite_with_jobs(3, 3, 5).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn guards() {
        assert!(matches!(enumerate_finite(4, 3), Err(Error::Unsupported(_))));
        assert!(matches!(enumerate_finite(3, 2), Err(Error::Unsupported(_))));
        assert!(matches!(enumerate_finite(3, 9), Err(Error::Unsupported(_))));
        assert!(matches!(
            enumerate_finite(3, 7),
            Err(Error::TooLarge { .. })
        ));
    }
}
