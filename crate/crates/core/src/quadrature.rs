//! Small deterministic quadrature helpers shared across the crate.

/// Gauss-Legendre nodes and weights on [-1, 1].
///
/// Nodes are found by Newton iteration on the Legendre polynomial, seeded
/// with the Chebyshev asymptotic guess; converges to machine precision for
/// the orders used here (< 200).
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..(n + 1) / 2 {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Evaluate P_n and P_n' by the three-term recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let pk = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = pk;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
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

/// Trapezoid weights for a sorted abscissa vector; weights sum to the span.
pub fn trapezoid_weights(ts: &[f64]) -> Vec<f64> {
    let n = ts.len();
    if n <= 1 {
        return vec![1.0; n];
    }
    let mut w = vec![0.0; n];
    for i in 0..n - 1 {
        let h = ts[i + 1] - ts[i];
        w[i] += 0.5 * h;
        w[i + 1] += 0.5 * h;
    }
    w
}

/// Trapezoid rule for samples on a sorted abscissa vector.
pub fn trapezoid(ts: &[f64], values: &[f64]) -> f64 {
    assert_eq!(ts.len(), values.len());
    trapezoid_weights(ts)
        .iter()
        .zip(values)
        .map(|(w, v)| w * v)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        // n-point rule is exact up to degree 2n-1.
        let (x, w) = gauss_legendre(8);
        for deg in 0..16 {
            let got: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(deg)).sum();
            let exact = if deg % 2 == 0 {
                2.0 / (deg as f64 + 1.0)
            } else {
                0.0
            };
            assert!((got - exact).abs() < 1e-13, "degree {deg}: {got} vs {exact}");
        }
    }

    #[test]
    fn gauss_legendre_weights_sum_to_two() {
        for n in [1, 2, 5, 33, 48, 64] {
            let (_, w) = gauss_legendre(n);
            let s: f64 = w.iter().sum();
            assert!((s - 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn trapezoid_is_exact_for_affine_functions() {
        let ts: Vec<f64> = (0..=10).map(|i| i as f64 * 0.1).collect();
        let vals: Vec<f64> = ts.iter().map(|t| 3.0 * t + 1.0).collect();
        assert!((trapezoid(&ts, &vals) - (1.5 + 1.0)).abs() < 1e-14);
    }
}
