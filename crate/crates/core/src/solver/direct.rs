//! Banded LU with partial pivoting after reverse Cuthill-McKee reordering.
//!
//! Used as the reference solution for the iterative solver and as its
//! fallback. Memory is `n * (3 * bandwidth + 1)` values.

use std::collections::VecDeque;

use super::sparse::CsrMatrix;
use crate::{Error, Result};

/// Pivots below this fraction of the largest matrix entry count as zero.
const SINGULAR_RTOL: f64 = 1e-13;

/// Solves `A x = b`.
pub fn direct_solve(a: &CsrMatrix, b: &[f64]) -> Result<Vec<f64>> {
    let n = a.nrows();
    if a.ncols() != n || b.len() != n {
        return Err(Error::Dimension(format!(
            "direct_solve: A is {}x{}, b has {}",
            n,
            a.ncols(),
            b.len()
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let perm = reverse_cuthill_mckee(a);
    let pa = a.permute_symmetric(&perm);
    let pb: Vec<f64> = perm.iter().map(|&old| b[old]).collect();
    let lu = BandLu::factor(&pa)?;
    let px = lu.solve(pb);
    let mut x = vec![0.0; n];
    for (new, &old) in perm.iter().enumerate() {
        x[old] = px[new];
    }
    Ok(x)
}

/// Ordering (`perm[new] = old`) that narrows the band of the symmetrised
/// sparsity pattern.
pub fn reverse_cuthill_mckee(a: &CsrMatrix) -> Vec<usize> {
    let n = a.nrows();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for &j in a.row(i).0 {
            if i != j {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    for nb in &mut adj {
        nb.sort_unstable();
        nb.dedup();
    }
    let degree: Vec<usize> = adj.iter().map(Vec::len).collect();

    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let seed = (0..n)
            .filter(|&v| !visited[v])
            .min_by_key(|&v| degree[v])
            .expect("unvisited vertex");
        let start = pseudo_peripheral(&adj, seed);
        visited[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            let mut next: Vec<usize> = adj[v].iter().copied().filter(|&u| !visited[u]).collect();
            next.sort_by_key(|&u| (degree[u], u));
            for u in next {
                visited[u] = true;
                queue.push_back(u);
            }
        }
    }
    order.reverse();
    order
}

fn pseudo_peripheral(adj: &[Vec<usize>], seed: usize) -> usize {
    let mut start = seed;
    let mut ecc = 0;
    for _ in 0..8 {
        let (far, e) = farthest(adj, start);
        if e <= ecc {
            break;
        }
        ecc = e;
        start = far;
    }
    start
}

fn farthest(adj: &[Vec<usize>], start: usize) -> (usize, usize) {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[start] = 0;
    let mut queue = VecDeque::from([start]);
    let mut last = (start, 0);
    while let Some(v) = queue.pop_front() {
        let d = dist[v];
        if d > last.1 || (d == last.1 && adj[v].len() < adj[last.0].len()) {
            last = (v, d);
        }
        for &u in &adj[v] {
            if dist[u] == usize::MAX {
                dist[u] = d + 1;
                queue.push_back(u);
            }
        }
    }
    last
}

pub fn bandwidth(a: &CsrMatrix) -> usize {
    (0..a.nrows())
        .flat_map(|i| a.row(i).0.iter().map(move |&j| i.abs_diff(j)))
        .max()
        .unwrap_or(0)
}

struct BandLu {
    n: usize,
    kl: usize,
    width: usize,
    /// Row at position `i` stores columns `i - kl ..= i + 2 kl`.
    band: Vec<f64>,
    pivots: Vec<usize>,
    /// Multipliers of step `k` for rows `k+1 ..= k+kl`.
    mult: Vec<f64>,
}

impl BandLu {
    fn at(&self, row: usize, col: usize) -> usize {
        row * self.width + (col + self.kl - row)
    }

    fn factor(a: &CsrMatrix) -> Result<Self> {
        let n = a.nrows();
        let kl = bandwidth(a);
        let width = 3 * kl + 1;
        let mut lu = BandLu {
            n,
            kl,
            width,
            band: vec![0.0; n * width],
            pivots: vec![0; n],
            mult: vec![0.0; n * kl.max(1)],
        };
        for i in 0..n {
            let (cols, vals) = a.row(i);
            for (&c, &v) in cols.iter().zip(vals) {
                let idx = lu.at(i, c);
                lu.band[idx] = v;
            }
        }
        let threshold = SINGULAR_RTOL * a.max_abs();

        for k in 0..n {
            let last_row = (k + kl).min(n - 1);
            let last_col = (k + 2 * kl).min(n - 1);
            let p = (k..=last_row)
                .max_by(|&r1, &r2| {
                    let v1 = lu.band[lu.at(r1, k)].abs();
                    let v2 = lu.band[lu.at(r2, k)].abs();
                    v1.total_cmp(&v2).then(r2.cmp(&r1))
                })
                .expect("nonempty pivot range");
            let pivot = lu.band[lu.at(p, k)];
            if !(pivot.abs() > threshold) {
                return Err(Error::Singular { column: k, pivot });
            }
            lu.pivots[k] = p;
            if p != k {
                for c in k..=last_col {
                    let (ik, ip) = (lu.at(k, c), lu.at(p, c));
                    lu.band.swap(ik, ip);
                }
            }
            for r in k + 1..=last_row {
                let irk = lu.at(r, k);
                let m = lu.band[irk] / pivot;
                lu.mult[k * kl + (r - k - 1)] = m;
                lu.band[irk] = 0.0;
                if m != 0.0 {
                    for c in k + 1..=last_col {
                        let (irc, ikc) = (lu.at(r, c), lu.at(k, c));
                        lu.band[irc] -= m * lu.band[ikc];
                    }
                }
            }
        }
        Ok(lu)
    }

    fn solve(&self, mut b: Vec<f64>) -> Vec<f64> {
        let (n, kl) = (self.n, self.kl);
        for k in 0..n {
            b.swap(k, self.pivots[k]);
            let bk = b[k];
            for r in k + 1..=(k + kl).min(n - 1) {
                b[r] -= self.mult[k * kl + (r - k - 1)] * bk;
            }
        }
        for k in (0..n).rev() {
            let mut s = b[k];
            for c in k + 1..=(k + 2 * kl).min(n - 1) {
                s -= self.band[self.at(k, c)] * b[c];
            }
            b[k] = s / self.band[self.at(k, k)];
        }
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::sparse::relative_residual;
    use crate::solver::TripletBuilder;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn diagonal_two_by_two() {
        let a = CsrMatrix::from_dense(&[vec![2.0, 0.0], vec![0.0, 3.0]]);
        let x = direct_solve(&a, &[2.0, 3.0]).unwrap();
        assert_eq!(x, vec![1.0, 1.0]);
    }

    #[test]
    fn needs_pivoting() {
        let a = CsrMatrix::from_dense(&[vec![0.0, 1.0, 0.0], vec![1.0, 0.0, 1.0], vec![0.0, 1.0, 1.0]]);
        let b = [1.0, 2.0, 3.0];
        let x = direct_solve(&a, &b).unwrap();
        assert!(relative_residual(&a, &x, &b) < 1e-15);
    }

    #[test]
    fn singular_is_detected() {
        let a = CsrMatrix::from_dense(&[vec![1.0, 2.0], vec![2.0, 4.0]]);
        assert!(matches!(direct_solve(&a, &[1.0, 1.0]), Err(Error::Singular { .. })));
    }

    #[test]
    fn random_well_conditioned_50() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let n = 50;
        let mut t = TripletBuilder::new(n, n);
        for i in 0..n {
            t.add(i, i, 10.0 + rng.gen::<f64>());
            for _ in 0..4 {
                let j = rng.gen_range(0..n);
                t.add(i, j, rng.gen::<f64>() * 2.0 - 1.0);
            }
        }
        let a = t.build();
        let b: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
        let x = direct_solve(&a, &b).unwrap();
        assert!(relative_residual(&a, &x, &b) <= 1e-12);
    }

    #[test]
    fn rcm_is_a_permutation_and_narrows_band() {
        // Path graph numbered badly.
        let n = 30;
        let label: Vec<usize> = (0..n).map(|i| (i * 7) % n).collect();
        let mut t = TripletBuilder::new(n, n);
        for i in 0..n {
            t.add(label[i], label[i], 2.0);
            if i + 1 < n {
                t.add(label[i], label[i + 1], -1.0);
                t.add(label[i + 1], label[i], -1.0);
            }
        }
        let a = t.build();
        let perm = reverse_cuthill_mckee(&a);
        let mut sorted = perm.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..n).collect::<Vec<_>>());
        assert_eq!(bandwidth(&a.permute_symmetric(&perm)), 1);
    }
}
