//! Symmetric tridiagonal eigensolver: Sturm-sequence bisection for the
//! eigenvalues plus inverse iteration for the eigenvectors.  Fully
//! deterministic — identical inputs yield bit-for-bit identical output.

use super::{Eigenpair, Tridiag};
use crate::error::{EopError, Result};
use crate::numverify::tolerances::EIGEN_RESIDUAL_TOL;
use crate::par::map_batch;

/// Number of eigenvalues of T strictly below x, via the LDLᵀ pivot signs of
/// T − xI (Sturm count).
fn count_below(diag: &[f64], off: &[f64], x: f64) -> usize {
    let mut count = 0usize;
    let mut d = 1.0f64;
    for i in 0..diag.len() {
        let sub = if i > 0 { off[i - 1] * off[i - 1] / d } else { 0.0 };
        d = diag[i] - x - sub;
        if d == 0.0 || d.is_nan() {
            d = -1e-300;
        }
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

/// Gershgorin interval containing the whole spectrum.
fn gershgorin(diag: &[f64], off: &[f64]) -> (f64, f64) {
    let n = diag.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let left = if i > 0 { off[i - 1].abs() } else { 0.0 };
        let right = if i + 1 < n { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - left - right);
        hi = hi.max(diag[i] + left + right);
    }
    (lo, hi)
}

/// j-th (0-based, ascending) eigenvalue by bisection on the Sturm count.
fn bisect_eigenvalue(diag: &[f64], off: &[f64], j: usize, glo: f64, ghi: f64) -> f64 {
    let mut lo = glo;
    let mut hi = ghi;
    let scale = glo.abs().max(ghi.abs()).max(1.0);
    for _ in 0..140 {
        let mid = 0.5 * (lo + hi);
        if count_below(diag, off, mid) <= j {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-15 * scale {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Solve (T − μI)x = b by LU factorization with partial pivoting
/// (tridiagonal bands plus one fill-in superdiagonal).  Near-singular
/// pivots are clamped to a tiny value — exactly what inverse iteration
/// wants when μ sits on an eigenvalue.
fn solve_shifted(diag: &[f64], off: &[f64], mu: f64, b: &[f64]) -> Vec<f64> {
    let n = diag.len();
    let mut dl: Vec<f64> = off.to_vec(); // subdiagonal, becomes multipliers
    let mut d: Vec<f64> = diag.iter().map(|&x| x - mu).collect();
    let mut du: Vec<f64> = off.to_vec(); // superdiagonal
    let mut du2 = vec![0.0f64; n.saturating_sub(2)];
    let mut swapped = vec![false; n.saturating_sub(1)];
    let scale = diag.iter().fold(0.0f64, |a, &x| a.max(x.abs()))
        + 2.0 * off.iter().fold(0.0f64, |a, &x| a.max(x.abs()));
    let tiny = 1e-290 * scale.max(1.0);
    let clamp = |x: f64| {
        if x.abs() < tiny {
            if x >= 0.0 {
                tiny
            } else {
                -tiny
            }
        } else {
            x
        }
    };
    for i in 0..n.saturating_sub(1) {
        if dl[i].abs() <= d[i].abs() {
            d[i] = clamp(d[i]);
            let f = dl[i] / d[i];
            dl[i] = f;
            d[i + 1] -= f * du[i];
            if i + 1 < n - 1 {
                du2[i] = 0.0;
            }
        } else {
            // Pivot: swap rows i and i+1 before eliminating.
            let f = d[i] / dl[i];
            d[i] = dl[i];
            dl[i] = f;
            let tmp = du[i];
            du[i] = d[i + 1];
            d[i + 1] = tmp - f * d[i + 1];
            if i + 1 < n - 1 {
                du2[i] = du[i + 1];
                du[i + 1] = -f * du[i + 1];
            }
            swapped[i] = true;
        }
    }
    if n >= 1 {
        d[n - 1] = clamp(d[n - 1]);
    }
    // Forward elimination of the right-hand side.
    let mut rhs = b.to_vec();
    for i in 0..n.saturating_sub(1) {
        if swapped[i] {
            rhs.swap(i, i + 1);
        }
        let update = dl[i] * rhs[i];
        rhs[i + 1] -= update;
    }
    // Back substitution.
    let mut x = vec![0.0f64; n];
    x[n - 1] = rhs[n - 1] / d[n - 1];
    if n >= 2 {
        x[n - 2] = (rhs[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
    }
    for i in (0..n.saturating_sub(2)).rev() {
        x[i] = (rhs[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / d[i];
    }
    x
}

fn matvec(diag: &[f64], off: &[f64], v: &[f64]) -> Vec<f64> {
    let n = diag.len();
    (0..n)
        .map(|i| {
            let mut s = diag[i] * v[i];
            if i > 0 {
                s += off[i - 1] * v[i - 1];
            }
            if i + 1 < n {
                s += off[i] * v[i + 1];
            }
            s
        })
        .collect()
}

fn normalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
    // Deterministic sign: first significant component positive.
    let peak = v.iter().fold(0.0f64, |a, &x| a.max(x.abs()));
    if let Some(first) = v.iter().find(|x| x.abs() > 1e-3 * peak) {
        if *first < 0.0 {
            for x in v.iter_mut() {
                *x = -*x;
            }
        }
    }
}

fn eigenvector(diag: &[f64], off: &[f64], mu: f64, j: usize, scale: f64) -> Result<(f64, Vec<f64>)> {
    let n = diag.len();
    // Deterministic start with guaranteed overlap for ordered spectra:
    // the j-th sine mode.
    let mut v: Vec<f64> = (0..n)
        .map(|i| ((j as f64 + 1.0) * std::f64::consts::PI * (i as f64 + 1.0) / (n as f64 + 1.0)).sin())
        .collect();
    normalize(&mut v);
    let maxit = 30usize;
    for _ in 1..=maxit {
        let mut w = solve_shifted(diag, off, mu, &v);
        normalize(&mut w);
        let tv = matvec(diag, off, &w);
        let rayleigh: f64 = w.iter().zip(&tv).map(|(a, b)| a * b).sum();
        let resid: f64 = tv
            .iter()
            .zip(&w)
            .map(|(t, x)| (t - rayleigh * x) * (t - rayleigh * x))
            .sum::<f64>()
            .sqrt();
        if resid <= EIGEN_RESIDUAL_TOL * scale {
            return Ok((rayleigh, w));
        }
        v = w;
    }
    Err(EopError::SolverError {
        message: format!("inverse iteration stalled for eigenvalue index {j} (μ = {mu})"),
        iterations: maxit,
    })
}

/// k lowest eigenpairs of a real symmetric tridiagonal matrix, ascending,
/// eigenvectors normalized in the discrete L² norm.  Bisection on the Sturm
/// count brackets each eigenvalue; inverse iteration recovers the vector;
/// the final eigenvalue is the Rayleigh quotient.  The residual contract is
/// ‖Tv − μv‖ ≤ 1e−10·‖T‖.
pub fn eigen_tridiag(t: &Tridiag, k: usize) -> Result<Vec<Eigenpair>> {
    let n = t.diag.len();
    if n == 0 || t.off.len() + 1 != n {
        return Err(EopError::SolverError {
            message: format!("malformed tridiagonal: n = {n}, off = {}", t.off.len()),
            iterations: 0,
        });
    }
    if k == 0 || k > n {
        return Err(EopError::SolverError {
            message: format!("requested {k} eigenpairs from dimension {n}"),
            iterations: 0,
        });
    }
    let (glo, ghi) = gershgorin(&t.diag, &t.off);
    let scale = glo.abs().max(ghi.abs()).max(1.0);
    let pairs = map_batch((0..k).collect::<Vec<_>>(), |j| {
        let mu = bisect_eigenvalue(&t.diag, &t.off, j, glo, ghi);
        eigenvector(&t.diag, &t.off, mu, j, scale)
    });
    let mut out = Vec::with_capacity(k);
    for p in pairs {
        let (value, samples) = p?;
        out.push(Eigenpair { value, samples });
    }
    out.sort_by(|a, b| a.value.partial_cmp(&b.value).unwrap());
    Ok(out)
}
