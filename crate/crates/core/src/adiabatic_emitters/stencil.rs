//! Central finite-difference weights on a uniform grid (Fornberg's recursion).

/// Accuracy order of the central stencils used for sampled trajectories.
pub const ACCURACY: usize = 6;

/// Half-width of the central stencil for derivative `order` at accuracy `accuracy`.
pub fn half_width(order: usize, accuracy: usize) -> usize {
    (order + 1) / 2 + accuracy / 2 - 1
}

/// Weights for offsets `-p..=p` (unit spacing) approximating the
/// `order`-th derivative at 0.
pub fn central_weights(order: usize, accuracy: usize) -> Vec<f64> {
    let p = half_width(order, accuracy) as i64;
    let nodes: Vec<f64> = (-p..=p).map(|i| i as f64).collect();
    fornberg(0.0, &nodes, order)
}

fn fornberg(z: f64, x: &[f64], m: usize) -> Vec<f64> {
    let n = x.len();
    // c[j][k]: weight of node j for derivative k
    let mut c = vec![vec![0.0; m + 1]; n];
    c[0][0] = 1.0;
    let mut c1 = 1.0;
    let mut c4 = x[0] - z;
    for i in 1..n {
        let mn = i.min(m);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = x[i] - z;
        for j in 0..i {
            let c3 = x[i] - x[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    c.into_iter().map(|row| row[m]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn classic_second_order_stencils() {
        let d1 = central_weights(1, 2);
        assert_eq!(d1.len(), 3);
        assert_relative_eq!(d1[0], -0.5, epsilon = 1e-15);
        assert_relative_eq!(d1[2], 0.5, epsilon = 1e-15);
        let d2 = central_weights(2, 2);
        assert_relative_eq!(d2[0], 1.0, epsilon = 1e-15);
        assert_relative_eq!(d2[1], -2.0, epsilon = 1e-15);
    }

    #[test]
    fn fourth_order_first_derivative() {
        let w = central_weights(1, 4);
        let expect = [1.0 / 12.0, -2.0 / 3.0, 0.0, 2.0 / 3.0, -1.0 / 12.0];
        for (a, b) in w.iter().zip(expect) {
            assert_relative_eq!(*a, b, epsilon = 1e-15);
        }
    }

    #[test]
    fn stencils_are_exact_on_monomials() {
        for order in 1..=5 {
            let w = central_weights(order, ACCURACY);
            let p = half_width(order, ACCURACY) as i32;
            let fact: f64 = (1..=order).map(|k| k as f64).product();
            // x^order has derivative order!; lower powers vanish
            for power in 0..=(order + ACCURACY - 1) {
                let d: f64 = w
                    .iter()
                    .zip(-p..=p)
                    .map(|(w, i)| w * (i as f64).powi(power as i32))
                    .sum();
                let expect = if power == order { fact } else { 0.0 };
                assert!(
                    (d - expect).abs() < 1e-9,
                    "order {order} power {power}: {d}"
                );
            }
        }
    }
}
