//! Error-free evaluation of rational polynomials at double-precision points.
//!
//! A double is a dyadic rational, so `p(z)` can be computed exactly over the
//! Gaussian integers and only rounded once at the end. Root polishing and
//! residual checks on high-degree family polynomials depend on this: their
//! double-precision Horner evaluation loses every significant digit.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};

use super::ZPoly;

/// `mantissa * 2^exp`, for magnitudes beyond the double exponent range.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScaledComplex {
    pub mantissa: Complex64,
    pub exp: i64,
}

impl ScaledComplex {
    pub fn is_zero(&self) -> bool {
        self.mantissa.re == 0.0 && self.mantissa.im == 0.0
    }

    /// Natural log of the modulus; `-inf` for zero.
    pub fn ln_norm(&self) -> f64 {
        self.mantissa.norm().ln() + self.exp as f64 * std::f64::consts::LN_2
    }

    /// Nearest double, possibly infinite or zero.
    pub fn to_complex(&self) -> Complex64 {
        self.mantissa * pow2(self.exp)
    }

    pub fn div(&self, rhs: &ScaledComplex) -> Complex64 {
        (self.mantissa / rhs.mantissa) * pow2(self.exp - rhs.exp)
    }
}

fn pow2(e: i64) -> f64 {
    2f64.powi(e.clamp(-2000, 2000) as i32)
}

/// A rational polynomial cleared of denominators. Same roots as the source.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegerPoly {
    coeffs: Vec<BigInt>,
    ln_abs: Vec<f64>,
}

impl IntegerPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let ln_abs = coeffs.iter().map(ln_abs_big).collect();
        Self { coeffs, ln_abs }
    }

    pub fn from_zpoly(p: &ZPoly) -> Self {
        let lcm = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        Self::new(p.coeffs().iter().map(|c| c.numer() * (&lcm / c.denom())).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect())
    }

    /// Natural logs of `|c_k|` (`-inf` for zero coefficients).
    pub fn ln_abs_coeffs(&self) -> &[f64] {
        &self.ln_abs
    }

    /// Exact `p(z)`, rounded once.
    pub fn eval(&self, z: Complex64) -> ScaledComplex {
        let Some(d) = self.degree() else {
            return ScaledComplex { mantissa: Complex64::zero(), exp: 0 };
        };
        let (a, b, e) = dyadic(z);
        // z = (a + bi) 2^e; with s = max(0, -e) the Horner sum is scaled by 2^(s d).
        let (wa, wb, s) = if e >= 0 { (a << e as usize, b << e as usize, 0usize) } else { (a, b, (-e) as usize) };
        let mut re = self.coeffs[d].clone();
        let mut im = BigInt::zero();
        for k in (0..d).rev() {
            let nr = &re * &wa - &im * &wb;
            let ni = &re * &wb + &im * &wa;
            re = nr + (&self.coeffs[k] << (s * (d - k)));
            im = ni;
        }
        round_scaled(&re, &im, -((s * d) as i64))
    }

    /// `|p(z)| / sum_k |c_k| |z|^k`, the backward-error measure used for root
    /// residuals; scale-free in the coefficients.
    pub fn relative_residual(&self, z: Complex64) -> f64 {
        let v = self.eval(z);
        if v.is_zero() {
            return 0.0;
        }
        (v.ln_norm() - self.ln_magnitude_bound(z.norm())).exp()
    }

    /// `ln sum_k |c_k| r^k` via log-sum-exp.
    pub fn ln_magnitude_bound(&self, r: f64) -> f64 {
        let lr = r.ln();
        let logs: Vec<f64> = self
            .ln_abs
            .iter()
            .enumerate()
            .filter(|(_, l)| l.is_finite())
            .map(|(k, l)| if k == 0 { *l } else { l + k as f64 * lr })
            .collect();
        let m = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if !m.is_finite() {
            return m;
        }
        m + logs.iter().map(|l| (l - m).exp()).sum::<f64>().ln()
    }
}

/// Splits a finite complex double into integers `a`, `b` and a shared
/// exponent `e` with `z = (a + bi) 2^e`.
fn dyadic(z: Complex64) -> (BigInt, BigInt, i64) {
    let parts = [z.re, z.im].map(|x| {
        if x == 0.0 {
            None
        } else {
            let (m, e, s) = x.integer_decode();
            Some((BigInt::from(m) * BigInt::from(s), e as i64))
        }
    });
    let e = parts.iter().flatten().map(|(_, e)| *e).min().unwrap_or(0);
    let [a, b] = parts.map(|p| match p {
        Some((m, pe)) => m << (pe - e) as usize,
        None => BigInt::zero(),
    });
    (a, b, e)
}

fn round_scaled(re: &BigInt, im: &BigInt, exp: i64) -> ScaledComplex {
    let bits = re.bits().max(im.bits()) as i64;
    let shift = (bits - 62).max(0);
    let top = |x: &BigInt| -> f64 {
        let t: BigInt = if shift > 0 { x >> shift as usize } else { x.clone() };
        t.to_f64().unwrap_or(0.0)
    };
    ScaledComplex { mantissa: Complex64::new(top(re), top(im)), exp: exp + shift }
}

fn ln_abs_big(x: &BigInt) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits() as i64;
    let shift = (bits - 62).max(0);
    let t: BigInt = x.abs() >> shift as usize;
    t.to_f64().unwrap_or(1.0).ln() + shift as f64 * std::f64::consts::LN_2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::rat;
    use num_rational::BigRational;

    #[test]
    fn matches_double_horner_when_well_conditioned() {
        let p = ZPoly::from_integers([218, 12, 6, 1]);
        let ip = IntegerPoly::from_zpoly(&p);
        for z in [Complex64::new(0.5, -1.25), Complex64::new(-3.0, 2.0), Complex64::new(1e-3, 7.0)] {
            let exact = ip.eval(z).to_complex();
            let approx = p.eval(z).unwrap();
            assert!((exact - approx).norm() <= 1e-12 * approx.norm().max(1.0));
        }
    }

    #[test]
    fn clears_denominators() {
        let p = ZPoly::new(vec![BigRational::new(1.into(), 2.into()), BigRational::new(1.into(), 3.into())]);
        let ip = IntegerPoly::from_zpoly(&p);
        assert_eq!(ip.coeffs(), &[BigInt::from(3), BigInt::from(2)]);
    }

    #[test]
    fn exact_zero_at_dyadic_root() {
        // (z - 0.375)(z + 2)
        let p = ZPoly::new(vec![rat(-3) / rat(4), rat(13) / rat(8), rat(1)]);
        let ip = IntegerPoly::from_zpoly(&p);
        assert!(ip.eval(Complex64::new(0.375, 0.0)).is_zero());
        assert_eq!(ip.relative_residual(Complex64::new(-2.0, 0.0)), 0.0);
        assert!(ip.relative_residual(Complex64::new(1.0, 0.0)) > 0.1);
    }

    #[test]
    fn huge_values_stay_finite_in_log() {
        let p = ZPoly::from_integers([1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]).pow(40);
        let ip = IntegerPoly::from_zpoly(&p);
        let v = ip.eval(Complex64::new(1e3, 1e3));
        assert!(v.ln_norm().is_finite());
        assert!((v.ln_norm() - 400.0 * (2f64.sqrt() * 1e3).ln()).abs() < 1e-6);
    }

    #[test]
    fn newton_ratio_from_scaled_values() {
        let p = ZPoly::from_integers([-2, 0, 1]);
        let ip = IntegerPoly::from_zpoly(&p);
        let dp = ip.derivative();
        let z = Complex64::new(1.5, 0.0);
        let step = ip.eval(z).div(&dp.eval(z));
        assert!((step.re - (0.25 / 3.0)).abs() < 1e-15);
    }
}
