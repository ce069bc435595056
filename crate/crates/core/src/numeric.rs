//! Small floating-point helpers.

/// Neumaier's variant of Kahan summation.
pub fn neumaier_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0f64;
    let mut compensation = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            compensation += (sum - t) + v;
        } else {
            compensation += (v - t) + sum;
        }
        sum = t;
    }
    sum + compensation
}

/// `alpha (alpha - 1) ... (alpha - order + 1)`, the factor produced by differentiating
/// `x^alpha` `order` times.
pub fn falling_factorial(alpha: f64, order: u32) -> f64 {
    (0..order).map(|j| alpha - j as f64).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_sum_recovers_cancellation() {
        let values = [1e16, 1.0, -1e16];
        assert_eq!(values.iter().sum::<f64>(), 0.0);
        assert_eq!(neumaier_sum(values), 1.0);
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(3.0, 0), 1.0);
        assert_eq!(falling_factorial(3.0, 2), 6.0);
        assert_eq!(falling_factorial(2.0, 3), 0.0);
        assert_eq!(falling_factorial(0.5, 2), -0.25);
    }
}
