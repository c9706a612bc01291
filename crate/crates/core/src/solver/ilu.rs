//! Threshold incomplete LU (ILUT) without pivoting.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use super::sparse::{norm2, CsrMatrix};
use super::Preconditioner;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct FillStats {
    pub nnz_a: usize,
    pub nnz_l: usize,
    pub nnz_u: usize,
}

impl FillStats {
    /// `(nnz(L) + nnz(U)) / nnz(A)`, counting the unit diagonal of L once.
    pub fn fill_ratio(&self) -> f64 {
        (self.nnz_l + self.nnz_u) as f64 / self.nnz_a.max(1) as f64
    }
}

/// Factors `L U ≈ A`; `L` is unit lower triangular (diagonal not stored),
/// `U` upper triangular with its diagonal kept separately.
#[derive(Clone, Debug)]
pub struct Ilut {
    n: usize,
    l_ptr: Vec<usize>,
    l_idx: Vec<usize>,
    l_val: Vec<f64>,
    u_ptr: Vec<usize>,
    u_idx: Vec<usize>,
    u_val: Vec<f64>,
    u_diag: Vec<f64>,
    pub stats: FillStats,
}

/// Row-wise ILUT. Entries smaller than `droptol * ‖a_i‖₂` are discarded
/// while row `i` is being eliminated; `droptol = 0` gives the exact LU
/// factors (no pivoting). `max_fill`, when set, keeps only that many
/// largest entries per row in each of `L` and `U`.
pub fn ilu_factor(a: &CsrMatrix, droptol: f64, max_fill: Option<usize>) -> Result<Ilut> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::Dimension(format!("ILU needs a square matrix, got {}x{}", n, a.ncols())));
    }
    let mut f = Ilut {
        n,
        l_ptr: vec![0],
        l_idx: Vec::new(),
        l_val: Vec::new(),
        u_ptr: vec![0],
        u_idx: Vec::new(),
        u_val: Vec::new(),
        u_diag: Vec::with_capacity(n),
        stats: FillStats {
            nnz_a: a.nnz(),
            ..Default::default()
        },
    };

    let mut w = vec![0.0f64; n];
    let mut in_row = vec![false; n];
    let mut pattern: Vec<usize> = Vec::new();
    let mut heap: BinaryHeap<Reverse<usize>> = BinaryHeap::new();
    let mut lower: Vec<(usize, f64)> = Vec::new();
    let mut upper: Vec<(usize, f64)> = Vec::new();

    for i in 0..n {
        let (cols, vals) = a.row(i);
        for (&c, &v) in cols.iter().zip(vals) {
            w[c] = v;
            in_row[c] = true;
            pattern.push(c);
            if c < i {
                heap.push(Reverse(c));
            }
        }
        let row_norm = norm2(vals);
        let tau = droptol * row_norm;

        lower.clear();
        while let Some(Reverse(k)) = heap.pop() {
            let lik = w[k] / f.u_diag[k];
            w[k] = 0.0;
            if lik.abs() <= tau || lik == 0.0 {
                continue;
            }
            lower.push((k, lik));
            let r = f.u_ptr[k]..f.u_ptr[k + 1];
            for (&j, &ukj) in f.u_idx[r.clone()].iter().zip(&f.u_val[r]) {
                if !in_row[j] {
                    in_row[j] = true;
                    pattern.push(j);
                    w[j] = 0.0;
                    if j < i {
                        heap.push(Reverse(j));
                    }
                }
                w[j] -= lik * ukj;
            }
        }

        let diag = if in_row[i] { w[i] } else { 0.0 };
        upper.clear();
        for &j in &pattern {
            if j > i && w[j] != 0.0 && w[j].abs() > tau {
                upper.push((j, w[j]));
            }
        }
        for &j in &pattern {
            w[j] = 0.0;
            in_row[j] = false;
        }
        pattern.clear();

        if !(diag.is_finite() && diag.abs() > f64::EPSILON * row_norm) {
            return Err(Error::ZeroPivot { row: i });
        }
        if let Some(p) = max_fill {
            keep_largest(&mut lower, p);
            keep_largest(&mut upper, p);
        }
        lower.sort_unstable_by_key(|e| e.0);
        upper.sort_unstable_by_key(|e| e.0);
        for &(j, v) in &lower {
            f.l_idx.push(j);
            f.l_val.push(v);
        }
        f.l_ptr.push(f.l_idx.len());
        for &(j, v) in &upper {
            f.u_idx.push(j);
            f.u_val.push(v);
        }
        f.u_ptr.push(f.u_idx.len());
        f.u_diag.push(diag);
    }
    f.stats.nnz_l = f.l_idx.len();
    f.stats.nnz_u = f.u_idx.len() + n;
    Ok(f)
}

fn keep_largest(entries: &mut Vec<(usize, f64)>, p: usize) {
    if entries.len() > p {
        entries.select_nth_unstable_by(p, |a, b| b.1.abs().total_cmp(&a.1.abs()));
        entries.truncate(p);
    }
}

impl Ilut {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Lower factor with its unit diagonal, as a matrix.
    pub fn l_matrix(&self) -> CsrMatrix {
        let mut t = super::TripletBuilder::new(self.n, self.n);
        for i in 0..self.n {
            for k in self.l_ptr[i]..self.l_ptr[i + 1] {
                t.add(i, self.l_idx[k], self.l_val[k]);
            }
            t.add(i, i, 1.0);
        }
        t.build()
    }

    pub fn u_matrix(&self) -> CsrMatrix {
        let mut t = super::TripletBuilder::new(self.n, self.n);
        for i in 0..self.n {
            t.add(i, i, self.u_diag[i]);
            for k in self.u_ptr[i]..self.u_ptr[i + 1] {
                t.add(i, self.u_idx[k], self.u_val[k]);
            }
        }
        t.build()
    }
}

impl Preconditioner for Ilut {
    /// Solves `L U z = r` by forward then backward substitution.
    fn apply(&self, r: &[f64], z: &mut [f64]) {
        z.copy_from_slice(r);
        for i in 0..self.n {
            let mut s = z[i];
            for k in self.l_ptr[i]..self.l_ptr[i + 1] {
                s -= self.l_val[k] * z[self.l_idx[k]];
            }
            z[i] = s;
        }
        for i in (0..self.n).rev() {
            let mut s = z[i];
            for k in self.u_ptr[i]..self.u_ptr[i + 1] {
                s -= self.u_val[k] * z[self.u_idx[k]];
            }
            z[i] = s / self.u_diag[i];
        }
    }
}
