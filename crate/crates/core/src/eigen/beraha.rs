use std::f64::consts::PI;

use num_complex::Complex64;

use super::pair::eigen_pair;
use crate::error::{Error, Result};

/// `b_r = 2 + 2 cos(2 pi / r)`.
pub fn beraha(r: u32) -> f64 {
    2.0 + 2.0 * (2.0 * PI / r as f64).cos()
}

/// Parameters `a` whose eigenvalue pairs make up the characteristic
/// polynomial of the width-`ly` strip attached to an external vertex.
pub fn beraha_parameters(ly: u32) -> Result<Vec<f64>> {
    match ly {
        2 => Ok(vec![beraha(5), 3.0 - beraha(5)]),
        3 => {
            let b7 = beraha(7);
            Ok(vec![b7, 2.0 - b7.sqrt(), 3.0 - b7 + b7.sqrt()])
        }
        _ => Err(Error::InvalidRange(format!("strip width {ly} not available (use 2 or 3)"))),
    }
}

/// Coefficients (constant term first) of the characteristic polynomial in
/// `lambda`, written in `s = x + y` and `p = xy`.
fn characteristic(ly: u32, s: Complex64, p: Complex64) -> Vec<Complex64> {
    let sq = s * s - 2.0 * p; // x^2 + y^2
    match ly {
        2 => {
            vec![p * p, -p * (2.0 * s + 3.0), sq + 3.0 * s + 4.0 * p + 1.0, -(2.0 * s + 3.0), Complex64::new(1.0, 0.0)]
        }
        _ => {
            let cube = s * s * s - 3.0 * s * p; // x^3 + y^3
            let quad = 3.0 * sq + 10.0 * s + 9.0 * p + 6.0;
            vec![
                p * p * p,
                -p * p * (3.0 * s + 5.0),
                p * quad,
                -(cube + 5.0 * sq + 9.0 * p * s + 20.0 * p + 6.0 * s),
                quad,
                -(3.0 * s + 5.0),
                Complex64::new(1.0, 0.0),
            ]
        }
    }
}

/// Largest relative residual `|P(lambda)| / sum_k |c_k lambda^k|` of the
/// strip characteristic polynomial at both branches `lambda_a^(+/-)(z)`,
/// over every sample and every parameter `a` of the width.
pub fn verify_beraha_factorization(ly: u32, samples: &[Complex64], q: f64) -> Result<f64> {
    let params = beraha_parameters(ly)?;
    let mut worst = 0.0f64;
    for &z in samples {
        let (s, p) = (z + 2.0, z + q + 1.0);
        let coeffs = characteristic(ly, s, p);
        for &a in &params {
            let pair = eigen_pair(a, q, z);
            for lam in [pair.lambda_plus, pair.lambda_minus] {
                let mut val = Complex64::new(0.0, 0.0);
                let mut scale = 0.0;
                let mut pw = Complex64::new(1.0, 0.0);
                for c in &coeffs {
                    let t = c * pw;
                    val += t;
                    scale += t.norm();
                    pw *= lam;
                }
                worst = worst.max(val.norm() / scale);
            }
        }
    }
    Ok(worst)
}
