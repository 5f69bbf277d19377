use std::f64::consts::PI;

use num_complex::Complex64;

use super::dominance::classify_dominance;
use crate::error::{Error, Result};
use crate::families::SpectralForm;

/// `ln|f|` below this counts as a zero of the partition function.
const LN_TINY: f64 = -690.7755278982137; // ln(1e-300)
/// Relative cancellation at which `f_n(z)` is numerically zero.
const CANCELLATION: f64 = 1e-12;

/// `ln(1 + s)` without losing digits for small `s`.
fn ln_1p(s: Complex64) -> Complex64 {
    if s.norm() < 1e-4 {
        let s2 = s * s;
        s - s2 / 2.0 + s2 * s / 3.0 - s2 * s2 / 4.0
    } else {
        (s + 1.0).ln()
    }
}

/// A logarithm of `f_n(z)` continued from the largest term:
/// `ln c_d + e ln lambda_d + ln(1 + sum_(k != d) c_k lambda_k^e / (c_d lambda_d^e))`.
pub fn log_partition(form: &SpectralForm, n: usize, z: Complex64) -> Result<Complex64> {
    let e = form.exponent(n) as f64;
    let logs: Vec<Complex64> = form
        .term_values(z)
        .into_iter()
        .filter(|t| t.coefficient.norm() > 0.0)
        .filter_map(|t| {
            if e == 0.0 {
                Some(t.coefficient.ln())
            } else if t.lambda.norm() == 0.0 {
                None
            } else {
                Some(t.coefficient.ln() + t.lambda.ln() * e)
            }
        })
        .collect();
    let Some(d) = (0..logs.len()).max_by(|&i, &j| logs[i].re.total_cmp(&logs[j].re)) else {
        return Err(Error::ZeroOfPartition);
    };
    let mut rest = Complex64::new(0.0, 0.0);
    let mut scale = 1.0;
    for (k, l) in logs.iter().enumerate() {
        if k != d {
            let r = (l - logs[d]).exp();
            rest += r;
            scale += r.norm();
        }
    }
    if (rest + 1.0).norm() <= CANCELLATION * scale {
        return Err(Error::ZeroOfPartition);
    }
    let ln_f = logs[d] + ln_1p(rest);
    if ln_f.re < LN_TINY {
        return Err(Error::ZeroOfPartition);
    }
    Ok(ln_f)
}

/// `p_n(z) = ln(f_n(z)) / n` on the logarithm branch that follows the
/// dominant eigenvalue; this is the branch along which `p_n` converges to
/// `ln lambda_dominant`.
pub fn pressure(form: &SpectralForm, n: usize, z: Complex64) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::InvalidRange("pressure needs n >= 1".into()));
    }
    Ok(log_partition(form, n, z)? / n as f64)
}

/// `Ln(f_n(z)) / n` with the principal logarithm.
pub fn pressure_principal(form: &SpectralForm, n: usize, z: Complex64) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::InvalidRange("pressure needs n >= 1".into()));
    }
    let ln_f = log_partition(form, n, z)?;
    let im = (ln_f.im + PI).rem_euclid(2.0 * PI) - PI;
    Ok(Complex64::new(ln_f.re, im) / n as f64)
}

/// `ln lambda` of the unique dominant eigenvalue among terms present with a
/// nonzero coefficient.
pub fn pressure_limit(form: &SpectralForm, z: Complex64) -> Result<Complex64> {
    let verdict = classify_dominance(z, &form.term_specs(), form.q)?;
    let i = verdict.dominant_index().ok_or(Error::NoUniqueDominant)?;
    let t = form.term_values(z)[i];
    Ok(t.lambda.ln())
}
