use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::FamilyId;
use crate::eigen::{labeled_pair, Branch, TermSpec};
use crate::error::{Error, Result};

/// How a term's coefficient depends on `z`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Coefficient {
    Constant(f64),
    /// `(lambda_self - 1) / (lambda_self - lambda_other)` within the same pair.
    ShiftedRatio,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralTerm {
    pub a: f64,
    pub branch: Branch,
    pub coefficient: Coefficient,
}

impl SpectralTerm {
    /// True when the coefficient is identically zero.
    pub fn is_vanishing(&self) -> bool {
        self.coefficient == Coefficient::Constant(0.0)
    }
}

/// `f_n(z) = sum_k coeff_k(z) lambda_k(z)^(n + exponent_offset)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralForm {
    pub family: FamilyId,
    pub q: f64,
    pub exponent_offset: usize,
    pub terms: Vec<SpectralTerm>,
}

/// A term evaluated at one point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TermValue {
    pub coefficient: Complex64,
    pub lambda: Complex64,
}

pub fn spectral_form(id: FamilyId, q: f64) -> Result<SpectralForm> {
    let t = |a: f64, branch: Branch, coefficient: Coefficient| SpectralTerm { a, branch, coefficient };
    let (exponent_offset, terms) = match id {
        FamilyId::TriangleStrip => {
            (1, vec![t(1.0, Branch::Plus, Coefficient::ShiftedRatio), t(1.0, Branch::Minus, Coefficient::ShiftedRatio)])
        }
        FamilyId::Wheel => (
            0,
            vec![
                t(q, Branch::Minus, Coefficient::Constant(q - 2.0)),
                t(1.0, Branch::Plus, Coefficient::Constant(1.0)),
                t(1.0, Branch::Minus, Coefficient::Constant(1.0)),
            ],
        ),
        FamilyId::CycleMultiEdge => (
            0,
            vec![
                t(q, Branch::Plus, Coefficient::Constant(1.0 / q)),
                t(q, Branch::Minus, Coefficient::Constant((1.0 - q) / q)),
                t(0.0, Branch::Plus, Coefficient::Constant((q - 1.0) / q)),
                t(0.0, Branch::Minus, Coefficient::Constant((q - 1.0) / q)),
            ],
        ),
        FamilyId::CounterexampleC => {
            return Err(Error::Unsupported("the counterexample is a single graph, not a family".into()))
        }
    };
    Ok(SpectralForm { family: id, q, exponent_offset, terms })
}

impl SpectralForm {
    pub fn exponent(&self, n: usize) -> usize {
        n + self.exponent_offset
    }

    /// Terms that can carry zeros, for dominance classification.
    pub fn term_specs(&self) -> Vec<TermSpec> {
        self.terms.iter().map(|t| TermSpec { a: t.a, branch: t.branch, nonzero: !t.is_vanishing() }).collect()
    }

    pub fn vanishing_terms(&self) -> Vec<usize> {
        self.terms.iter().enumerate().filter(|(_, t)| t.is_vanishing()).map(|(i, _)| i).collect()
    }

    pub fn term_values(&self, z: Complex64) -> Vec<TermValue> {
        self.terms
            .iter()
            .map(|t| {
                let pair = labeled_pair(t.a, self.q, z);
                let lambda = pair.get(t.branch);
                let coefficient = match t.coefficient {
                    Coefficient::Constant(c) => Complex64::new(c, 0.0),
                    Coefficient::ShiftedRatio => {
                        let other = pair.get(t.branch.other());
                        (lambda - 1.0) / (lambda - other)
                    }
                };
                TermValue { coefficient, lambda }
            })
            .collect()
    }

    pub fn eval(&self, z: Complex64, n: usize) -> Complex64 {
        let e = self.exponent(n) as i32;
        self.term_values(z).iter().map(|t| t.coefficient * t.lambda.powi(e)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::parse_rational;
    use crate::families::family_zpoly;

    #[test]
    fn wheel_at_two_has_vanishing_term() {
        let f = spectral_form(FamilyId::Wheel, 2.0).unwrap();
        assert_eq!(f.vanishing_terms(), vec![0]);
        assert!(!f.term_specs()[0].nonzero);
    }

    #[test]
    fn cycle_coefficients_sum_to_one() {
        for q in [1.5, 3.0, 9.0] {
            let f = spectral_form(FamilyId::CycleMultiEdge, q).unwrap();
            let s: f64 = f
                .terms
                .iter()
                .map(|t| match t.coefficient {
                    Coefficient::Constant(c) => c,
                    Coefficient::ShiftedRatio => unreachable!(),
                })
                .sum();
            assert!((s - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn strip_reconstruction() {
        let f = spectral_form(FamilyId::TriangleStrip, 3.0).unwrap();
        let z = Complex64::new(5.0, 2.0);
        let exact = family_zpoly(FamilyId::TriangleStrip, 7, &parse_rational("3").unwrap()).unwrap();
        let want = exact.eval(z).unwrap();
        assert!((f.eval(z, 7) - want).norm() <= 1e-9 * want.norm());
    }

    #[test]
    fn counterexample_has_no_form() {
        assert!(spectral_form(FamilyId::CounterexampleC, 16.0).is_err());
    }
}
