//! LLL reduction and Fincke-Pohst enumeration for small real lattices.
//!
//! Everything here is double precision and only decides which integer
//! vectors to look at; callers re-check every candidate exactly.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exec::Executor;

/// A lattice basis (rows, embedded in R^n) together with the integer
/// transform from the original basis.
#[derive(Debug, Clone)]
pub struct ReducedBasis {
    pub rows: Vec<Vec<f64>>,
    /// `rows = transform * original`.
    pub transform: Vec<Vec<i64>>,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Gram-Schmidt coefficients and squared lengths of the orthogonalized rows.
pub fn gram_schmidt(rows: &[Vec<f64>]) -> (Vec<Vec<f64>>, Vec<f64>) {
    let n = rows.len();
    let mut star: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut mu = alloc::vec![alloc::vec![0.0; n]; n];
    let mut norms = alloc::vec![0.0; n];
    for i in 0..n {
        let mut v = rows[i].clone();
        for j in 0..i {
            mu[i][j] = dot(&rows[i], &star[j]) / norms[j];
            for (vk, sk) in v.iter_mut().zip(&star[j]) {
                *vk -= mu[i][j] * sk;
            }
        }
        mu[i][i] = 1.0;
        norms[i] = dot(&v, &v);
        star.push(v);
    }
    (mu, norms)
}

/// LLL with parameter `delta`.
pub fn lll(rows: &[Vec<f64>], delta: f64) -> ReducedBasis {
    let n = rows.len();
    let mut b = rows.to_vec();
    let mut u: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i64).collect())
        .collect();
    let mut k = 1;
    let mut guard = 0u32;
    while k < n && guard < 100_000 {
        guard += 1;
        let (mut mu, _) = gram_schmidt(&b);
        for j in (0..k).rev() {
            let q = libm::round(mu[k][j]);
            if q != 0.0 {
                let qi = q as i64;
                for c in 0..b[k].len() {
                    b[k][c] -= q * b[j][c];
                }
                for c in 0..n {
                    u[k][c] -= qi * u[j][c];
                }
                for i in 0..j {
                    mu[k][i] -= q * mu[j][i];
                }
                mu[k][j] -= q;
            }
        }
        let (mu, norms) = gram_schmidt(&b);
        if norms[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norms[k - 1] {
            k += 1;
        } else {
            b.swap(k, k - 1);
            u.swap(k, k - 1);
            k = core::cmp::max(k - 1, 1);
        }
    }
    // recompute from the integer transform to shed accumulated rounding
    let dim = rows.first().map_or(0, Vec::len);
    let b = u
        .iter()
        .map(|t| {
            (0..dim)
                .map(|c| t.iter().zip(rows).map(|(&k, r)| k as f64 * r[c]).sum())
                .collect()
        })
        .collect();
    ReducedBasis {
        rows: b,
        transform: u,
    }
}

/// Solves `c * rows = target` for the row vector `c`.
pub fn coordinates(rows: &[Vec<f64>], target: &[f64]) -> Vec<f64> {
    let n = rows.len();
    // columns of the augmented system are the rows of `rows`
    let mut m: Vec<Vec<f64>> = (0..n)
        .map(|r| {
            let mut row: Vec<f64> = (0..n).map(|c| rows[c][r]).collect();
            row.push(target[r]);
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&a, &b| libm::fabs(m[a][col]).total_cmp(&libm::fabs(m[b][col])))
            .expect("nonempty");
        m.swap(col, pivot);
        let p = m[col][col];
        for r in 0..n {
            if r != col {
                let f = m[r][col] / p;
                for c in col..=n {
                    m[r][c] -= f * m[col][c];
                }
            }
        }
    }
    (0..n).map(|r| m[r][n] / m[r][r]).collect()
}

struct Search<'a> {
    mu: &'a [Vec<f64>],
    norms: &'a [f64],
    center: &'a [f64],
    bound: f64,
    node_limit: u64,
}

impl Search<'_> {
    fn level_center(&self, level: usize, x: &[i64]) -> f64 {
        let n = x.len();
        let mut c = self.center[level];
        for i in level + 1..n {
            c -= self.mu[i][level] * (x[i] as f64 - self.center[i]);
        }
        c
    }

    fn range(&self, level: usize, x: &[i64], partial: f64) -> Option<(f64, i64, i64)> {
        let rem = self.bound - partial;
        if rem < 0.0 {
            return None;
        }
        let c = self.level_center(level, x);
        let r = libm::sqrt(rem / self.norms[level]);
        Some((c, libm::ceil(c - r) as i64, libm::floor(c + r) as i64))
    }

    fn descend(
        &self,
        level: usize,
        x: &mut Vec<i64>,
        partial: f64,
        out: &mut Vec<Vec<i64>>,
        nodes: &mut u64,
    ) -> bool {
        *nodes += 1;
        if *nodes > self.node_limit {
            return false;
        }
        let Some((c, lo, hi)) = self.range(level, x, partial) else {
            return true;
        };
        for v in lo..=hi {
            let d = v as f64 - c;
            let p = partial + self.norms[level] * d * d;
            if p > self.bound {
                continue;
            }
            x[level] = v;
            if level == 0 {
                out.push(x.clone());
            } else if !self.descend(level - 1, x, p, out, nodes) {
                return false;
            }
        }
        x[level] = 0;
        true
    }
}

/// All integer vectors `x` with `|(x - center) * rows|^2 <= bound`, in a
/// deterministic order. The two outermost levels are split into tasks.
pub fn enumerate<E: Executor>(
    rows: &[Vec<f64>],
    center: &[f64],
    bound: f64,
    node_limit: u64,
    exec: &E,
) -> Result<Vec<Vec<i64>>> {
    let n = rows.len();
    let (mu, norms) = gram_schmidt(rows);
    let search = Search {
        mu: &mu,
        norms: &norms,
        center,
        bound,
        node_limit,
    };
    let mut prefixes: Vec<(Vec<i64>, f64)> = alloc::vec![(alloc::vec![0; n], 0.0)];
    for level in (n.saturating_sub(2)..n).rev() {
        let mut next = Vec::new();
        for (x, partial) in &prefixes {
            if let Some((c, lo, hi)) = search.range(level, x, *partial) {
                for v in lo..=hi {
                    let d = v as f64 - c;
                    let p = partial + norms[level] * d * d;
                    if p <= bound {
                        let mut y = x.clone();
                        y[level] = v;
                        next.push((y, p));
                    }
                }
            }
        }
        prefixes = next;
    }
    let top = n.saturating_sub(2);
    let results = exec.map(&prefixes, |(x, partial)| {
        let mut out = Vec::new();
        let mut nodes = 0u64;
        let mut x = x.clone();
        let ok = if top == 0 {
            out.push(x.clone());
            true
        } else {
            search.descend(top - 1, &mut x, *partial, &mut out, &mut nodes)
        };
        (ok, out)
    });
    let mut all = Vec::new();
    for (ok, out) in results {
        if !ok {
            return Err(Error::Consistency(alloc::format!(
                "enumeration exceeded {node_limit} nodes per task"
            )));
        }
        all.extend(out);
    }
    Ok(all)
}
