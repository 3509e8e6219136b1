//! Eigenvalues of small Hermitian matrices.

use num_complex::Complex64;

/// Jacobi sweeps stop once the off-diagonal Frobenius mass drops below this.
const OFF_DIAGONAL_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 64;

/// Eigenvalues of the `n x n` Hermitian matrix `h` (row-major), descending.
pub(crate) fn hermitian_eigenvalues(h: &[Complex64], n: usize) -> Vec<f64> {
    debug_assert_eq!(h.len(), n * n);
    let mut values = match n {
        0 => Vec::new(),
        1 => vec![h[0].re],
        2 => {
            // Roots of x^2 - tr x + det, written to avoid cancellation.
            let (a, d, b) = (h[0].re, h[3].re, h[1]);
            let mean = 0.5 * (a + d);
            let radius = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
            vec![mean + radius, mean - radius]
        }
        _ => {
            // H = A + iB maps to the real symmetric [[A, -B], [B, A]], whose
            // spectrum is that of H with every eigenvalue doubled.
            let m = 2 * n;
            let mut real = vec![0.0; m * m];
            for i in 0..n {
                for j in 0..n {
                    let z = h[i * n + j];
                    real[i * m + j] = z.re;
                    real[(i + n) * m + j + n] = z.re;
                    real[i * m + j + n] = -z.im;
                    real[(i + n) * m + j] = z.im;
                }
            }
            let mut doubled = symmetric_jacobi(real, m);
            doubled.sort_by(|a, b| b.total_cmp(a));
            doubled.into_iter().step_by(2).collect()
        }
    };
    values.sort_by(|a, b| b.total_cmp(a));
    values
}

/// Cyclic Jacobi rotations on a real symmetric matrix; returns the diagonal.
fn symmetric_jacobi(mut a: Vec<f64>, n: usize) -> Vec<f64> {
    let off_mass = |a: &[f64]| -> f64 {
        let mut sum = 0.0;
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    sum += a[p * n + q] * a[p * n + q];
                }
            }
        }
        sum.sqrt()
    };
    for _ in 0..MAX_SWEEPS {
        if off_mass(&a) < OFF_DIAGONAL_TOL {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta == 0.0 {
                    1.0
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = (t * t + 1.0).sqrt().recip();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i * n + i]).collect()
}
