use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default relative band within which two magnitudes count as equal.
pub const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn symbol(self) -> char {
        match self {
            Branch::Plus => '+',
            Branch::Minus => '-',
        }
    }

    pub fn other(self) -> Branch {
        match self {
            Branch::Plus => Branch::Minus,
            Branch::Minus => Branch::Plus,
        }
    }
}

/// The roots of `X^2 - (z + 2 + a) X + (z + q + 1)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenPair {
    pub a: f64,
    pub q: f64,
    pub z: Complex64,
    pub lambda_plus: Complex64,
    pub lambda_minus: Complex64,
    /// 0 when `a + Re z > 0`, else 1.
    pub n_sign: u8,
    /// 0 when `Im z > 0`, else 1.
    pub p_sign: u8,
}

impl EigenPair {
    pub fn get(&self, b: Branch) -> Complex64 {
        match b {
            Branch::Plus => self.lambda_plus,
            Branch::Minus => self.lambda_minus,
        }
    }

    /// Same pair with the two labels exchanged.
    pub fn swapped(&self) -> Self {
        Self { lambda_plus: self.lambda_minus, lambda_minus: self.lambda_plus, ..*self }
    }

    /// `|sum - (z + a + 2)|`, `|product - (z + q + 1)|` and
    /// `|(l+ - 1)(l- - 1) - (q - a)|`.
    pub fn identity_defects(&self) -> [f64; 3] {
        let (lp, lm) = (self.lambda_plus, self.lambda_minus);
        [
            (lp + lm - (self.z + self.a + 2.0)).norm(),
            (lp * lm - (self.z + self.q + 1.0)).norm(),
            ((lp - 1.0) * (lm - 1.0) - (self.q - self.a)).norm(),
        ]
    }
}

fn sign_flags(a: f64, z: Complex64) -> (u8, u8) {
    (u8::from(a + z.re <= 0.0), u8::from(z.im <= 0.0))
}

/// Quadratic formula with the principal square root; `+` takes `+sqrt`.
/// The smaller root is recovered from the product to avoid cancellation.
pub fn eigen_pair(a: f64, q: f64, z: Complex64) -> EigenPair {
    let sum = z + 2.0 + a;
    let prod = z + q + 1.0;
    let s = ((z + a) * (z + a) - 4.0 * (q - a)).sqrt();
    let mut lp = (sum + s) * 0.5;
    let mut lm = (sum - s) * 0.5;
    if lp.norm() >= lm.norm() {
        if lp.norm() > 0.0 {
            lm = prod / lp;
        }
    } else {
        lp = prod / lm;
    }
    let (n_sign, p_sign) = sign_flags(a, z);
    EigenPair { a, q, z, lambda_plus: lp, lambda_minus: lm, n_sign, p_sign }
}

/// Real/imaginary component formulas written out with
/// `A = (a+c)^2 - d^2 - 4(q-a)` and `B = sqrt(A^2 + 4 d^2 (a+c)^2)`.
pub fn eigen_explicit(a: f64, q: f64, z: Complex64) -> Result<EigenPair> {
    let (c, d) = (z.re, z.im);
    if d == 0.0 {
        return Err(Error::RealAxis);
    }
    let ac = a + c;
    let big_a = ac * ac - d * d - 4.0 * (q - a);
    let big_b = big_a.hypot(2.0 * d * ac);
    let re_root = ((big_a + big_b) / 2.0).max(0.0).sqrt();
    let im_root = ((big_b - big_a) / 2.0).max(0.0).sqrt();
    let (n_sign, p_sign) = sign_flags(a, z);
    let sn = if n_sign == 0 { 1.0 } else { -1.0 };
    let sp = if p_sign == 0 { 1.0 } else { -1.0 };
    let lp = Complex64::new(0.5 * (ac + 2.0 + sn * re_root), 0.5 * (d + sp * im_root));
    let lm = Complex64::new(0.5 * (ac + 2.0 - sn * re_root), 0.5 * (d - sp * im_root));
    Ok(EigenPair { a, q, z, lambda_plus: lp, lambda_minus: lm, n_sign, p_sign })
}

/// Labeled branch value used by spectral forms. For `a = q` the roots are
/// `z + q + 1` and `1` identically; that labeling is kept everywhere rather
/// than the principal one, which swaps the two where `Re(z + q) < 0`.
pub fn branch_value(a: f64, q: f64, z: Complex64, b: Branch) -> Complex64 {
    if a == q {
        return match b {
            Branch::Plus => z + q + 1.0,
            Branch::Minus => Complex64::new(1.0, 0.0),
        };
    }
    eigen_pair(a, q, z).get(b)
}

/// Both branches under the [`branch_value`] labeling.
pub fn labeled_pair(a: f64, q: f64, z: Complex64) -> EigenPair {
    let p = eigen_pair(a, q, z);
    if a == q && (p.lambda_minus - 1.0).norm() > (p.lambda_plus - 1.0).norm() {
        p.swapped()
    } else {
        p
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dominant {
    pub branch: Branch,
    pub value: Complex64,
    pub tied: bool,
}

/// The larger-magnitude root; `tied` when the magnitudes agree to `tol`
/// relative.
pub fn dominant_with(a: f64, q: f64, z: Complex64, tol: f64) -> Dominant {
    let p = eigen_pair(a, q, z);
    let (mp, mm) = (p.lambda_plus.norm(), p.lambda_minus.norm());
    let tied = (mp - mm).abs() <= tol * mp.max(mm);
    if mp >= mm {
        Dominant { branch: Branch::Plus, value: p.lambda_plus, tied }
    } else {
        Dominant { branch: Branch::Minus, value: p.lambda_minus, tied }
    }
}

pub fn dominant(a: f64, q: f64, z: Complex64) -> Dominant {
    dominant_with(a, q, z, TIE_TOLERANCE)
}
