//! Right-preconditioned GMRES with Givens rotations.
//!
//! With right preconditioning the minimised quantity is the true residual
//! `‖b - A x‖`, so the reported history is directly comparable with the
//! convergence tolerance.

use super::sparse::{dot, norm2, relative_residual, CsrMatrix};
use super::{Preconditioner, SolveReport, SolverConfig};
use crate::{Error, Result};

pub struct GmresOutcome {
    pub x: Vec<f64>,
    pub report: SolveReport,
}

/// Solves `A x = b` from `x0` (zero when `None`). Reaching `max_iterations`
/// is not an error: the best iterate comes back with `converged = false`.
pub fn gmres(
    a: &CsrMatrix,
    b: &[f64],
    precond: &dyn Preconditioner,
    config: &SolverConfig,
    x0: Option<&[f64]>,
) -> Result<GmresOutcome> {
    let n = a.nrows();
    if a.ncols() != n || b.len() != n || x0.is_some_and(|x| x.len() != n) {
        return Err(Error::Dimension(format!(
            "gmres: A is {}x{}, b has {}",
            n,
            a.ncols(),
            b.len()
        )));
    }
    let mut x = x0.map_or_else(|| vec![0.0; n], <[f64]>::to_vec);
    let bnorm = norm2(b);
    let scale = if bnorm > 0.0 { bnorm } else { 1.0 };
    let restart = if config.restart == 0 {
        config.max_iterations.max(1)
    } else {
        config.restart
    };

    let mut history = Vec::new();
    let mut iterations = 0;
    let mut r = residual(a, &x, b);
    let mut beta = norm2(&r);
    history.push(beta / scale);

    let mut tmp = vec![0.0; n];
    while beta / scale > config.tolerance && iterations < config.max_iterations {
        let m = restart.min(config.max_iterations - iterations);
        let mut v: Vec<Vec<f64>> = Vec::with_capacity(m + 1);
        v.push(r.iter().map(|ri| ri / beta).collect());
        let mut h = vec![vec![0.0; m]; m + 1];
        let (mut cs, mut sn) = (vec![0.0; m], vec![0.0; m]);
        let mut g = vec![0.0; m + 1];
        g[0] = beta;
        let mut k_used = 0;

        for k in 0..m {
            precond.apply(&v[k], &mut tmp);
            let mut w = a.mul_vec(&tmp);
            // Modified Gram-Schmidt, applied twice for stability.
            for _ in 0..2 {
                for (j, vj) in v.iter().enumerate() {
                    let hij = dot(&w, vj);
                    h[j][k] += hij;
                    w.iter_mut().zip(vj).for_each(|(wi, vji)| *wi -= hij * vji);
                }
            }
            let hnext = norm2(&w);
            h[k + 1][k] = hnext;

            for j in 0..k {
                let t = cs[j] * h[j][k] + sn[j] * h[j + 1][k];
                h[j + 1][k] = -sn[j] * h[j][k] + cs[j] * h[j + 1][k];
                h[j][k] = t;
            }
            let denom = h[k][k].hypot(h[k + 1][k]);
            if denom == 0.0 {
                cs[k] = 1.0;
                sn[k] = 0.0;
            } else {
                cs[k] = h[k][k] / denom;
                sn[k] = h[k + 1][k] / denom;
            }
            h[k][k] = cs[k] * h[k][k] + sn[k] * h[k + 1][k];
            h[k + 1][k] = 0.0;
            g[k + 1] = -sn[k] * g[k];
            g[k] *= cs[k];

            iterations += 1;
            k_used = k + 1;
            history.push(g[k + 1].abs() / scale);
            if g[k + 1].abs() / scale <= config.tolerance || hnext == 0.0 {
                break;
            }
            v.push(w.iter().map(|wi| wi / hnext).collect());
        }

        // Back substitution for the Krylov coefficients, then x += M^{-1} V y.
        let mut y = vec![0.0; k_used];
        for i in (0..k_used).rev() {
            let s: f64 = (i + 1..k_used).map(|j| h[i][j] * y[j]).sum();
            y[i] = (g[i] - s) / h[i][i];
        }
        let mut update = vec![0.0; n];
        for (yj, vj) in y.iter().zip(&v) {
            update.iter_mut().zip(vj).for_each(|(u, vi)| *u += yj * vi);
        }
        precond.apply(&update, &mut tmp);
        x.iter_mut().zip(&tmp).for_each(|(xi, ti)| *xi += ti);

        r = residual(a, &x, b);
        let true_beta = norm2(&r);
        if true_beta >= beta && k_used < m && true_beta / scale > config.tolerance {
            // Breakdown without progress.
            break;
        }
        beta = true_beta;
    }

    let achieved = relative_residual(a, &x, b);
    Ok(GmresOutcome {
        report: SolveReport {
            iterations,
            relative_residual: achieved,
            converged: achieved <= config.tolerance,
            residual_history: history,
            ..Default::default()
        },
        x,
    })
}

fn residual(a: &CsrMatrix, x: &[f64], b: &[f64]) -> Vec<f64> {
    let ax = a.mul_vec(x);
    b.iter().zip(ax).map(|(bi, ai)| bi - ai).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{ilu_factor, IdentityPreconditioner, TripletBuilder};

    fn config(tol: f64) -> SolverConfig {
        SolverConfig {
            tolerance: tol,
            ..Default::default()
        }
    }

    fn laplacian_1d(n: usize) -> CsrMatrix {
        let mut t = TripletBuilder::new(n, n);
        for i in 0..n {
            t.add(i, i, 2.0);
            if i > 0 {
                t.add(i, i - 1, -1.0);
            }
            if i + 1 < n {
                t.add(i, i + 1, -1.0);
            }
        }
        t.build()
    }

    #[test]
    fn identity_in_one_step() {
        let a = CsrMatrix::identity(5);
        let b = [1.0, -2.0, 3.0, 0.5, 7.0];
        let out = gmres(&a, &b, &IdentityPreconditioner, &config(1e-12), None).unwrap();
        assert_eq!(out.report.iterations, 1);
        assert!(out.report.converged);
        for (x, y) in out.x.iter().zip(&b) {
            assert!((x - y).abs() < 1e-14);
        }
    }

    #[test]
    fn residuals_never_increase_without_restart() {
        let a = laplacian_1d(60);
        let b: Vec<f64> = (0..60).map(|i| ((i * 7) % 11) as f64 - 5.0).collect();
        let out = gmres(&a, &b, &IdentityPreconditioner, &config(1e-10), None).unwrap();
        assert!(out.report.converged);
        for w in out.report.residual_history.windows(2) {
            assert!(w[1] <= w[0] * (1.0 + 1e-12));
        }
        assert!(relative_residual(&a, &out.x, &b) <= 1e-10);
    }

    #[test]
    fn exact_lu_converges_immediately() {
        let a = laplacian_1d(40);
        let b = vec![1.0; 40];
        let f = ilu_factor(&a, 0.0, None).unwrap();
        let out = gmres(&a, &b, &f, &config(1e-12), None).unwrap();
        assert!(out.report.converged);
        assert!(out.report.iterations <= 2);
    }

    #[test]
    fn max_iterations_gives_unconverged_best_iterate() {
        let a = laplacian_1d(100);
        let b = vec![1.0; 100];
        let cfg = SolverConfig {
            tolerance: 1e-14,
            max_iterations: 5,
            ..Default::default()
        };
        let out = gmres(&a, &b, &IdentityPreconditioner, &cfg, None).unwrap();
        assert!(!out.report.converged);
        assert_eq!(out.report.iterations, 5);
        assert!(out.report.relative_residual < 1.0);
    }

    #[test]
    fn restarted_variant_converges() {
        let a = laplacian_1d(50);
        let b = vec![1.0; 50];
        let cfg = SolverConfig {
            tolerance: 1e-10,
            restart: 10,
            max_iterations: 5000,
            ..Default::default()
        };
        let out = gmres(&a, &b, &IdentityPreconditioner, &cfg, None).unwrap();
        assert!(out.report.converged, "{:?}", out.report.relative_residual);
    }
}
