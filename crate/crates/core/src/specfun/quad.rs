//! Gauss-Legendre nodes/weights for the fixed-order panel quadrature used by
//! the large-degree Legendre evaluation path.

use std::sync::OnceLock;

/// Nodes and weights on [-1, 1] for an n-point rule, by Newton iteration on
/// the Legendre polynomial.
pub(crate) fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre recurrence for P_n(x) and P'_n(x).
            let mut p0 = 1.0;
            let mut p1 = x;
            for j in 2..=n {
                let jf = j as f64;
                let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                // one clean-up pass after convergence
                let mut q0 = 1.0;
                let mut q1 = x;
                for j in 2..=n {
                    let jf = j as f64;
                    let q2 = ((2.0 * jf - 1.0) * x * q1 - (jf - 1.0) * q0) / jf;
                    q0 = q1;
                    q1 = q2;
                }
                dp = n as f64 * (x * q1 - q0) / (x * x - 1.0);
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Cached 24-point rule for the Laplace-integral panels.
pub(crate) fn rule24() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(24))
}
