use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exponent pair `(i, j)` standing for `x^i y^j`.
pub type Exponents = (u32, u32);

/// Sparse bivariate polynomial in `x`, `y` with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, BigInt::one())
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, BigInt::one())
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, 0, BigInt::from(c))
    }

    pub fn monomial(i: u32, j: u32, c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term((i, j), &c);
        p
    }

    /// Builds a polynomial from `(i, j, coefficient)` triples; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term((i, j), &c.into());
        }
        p
    }

    /// Adds `c·x^i y^j` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, exps: Exponents, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Exponents, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Lexicographically largest term (highest `x` power, then `y`).
    pub fn leading_term(&self) -> Option<(Exponents, &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|(i, _)| *i).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|(_, j)| *j).max()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `p(y, x)`.
    pub fn swap_xy(&self) -> Self {
        Self { terms: self.terms.iter().map(|((i, j), c)| ((*j, *i), c.clone())).collect() }
    }

    /// True iff the coefficient of `x^i y^j` equals that of `x^j y^i` for all pairs.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|((i, j), c)| self.terms.get(&(*j, *i)) == Some(c))
    }

    pub fn eval_int(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for ((i, j), c) in &self.terms {
            acc += c * num_traits::pow(x.clone(), *i as usize) * num_traits::pow(y.clone(), *j as usize);
        }
        acc
    }

    /// Floating evaluation; coefficients are rounded to the nearest double.
    pub fn eval_complex(&self, x: Complex64, y: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|((i, j), c)| {
                let c = c.to_f64().unwrap_or(f64::NAN);
                x.powu(*i) * y.powu(*j) * c
            })
            .sum()
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly { (&self).$m(&rhs) }
        }
        impl $tr<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: &BiPoly) -> BiPoly { (&self).$m(rhs) }
        }
        impl $tr<BiPoly> for &BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        -&self
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, var: &str, e: u32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{var}"),
        _ => write!(f, "{var}^{e}"),
    }
}

/// Terms are printed by descending total degree, then descending `x` power,
/// e.g. `x^2 + x*y + y^2 + x + y`.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.0 + k.1, k.0)));
        for (k, (i, j)) in keys.into_iter().enumerate() {
            let c = &self.terms[&(i, j)];
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let has_vars = i + j > 0;
            if !has_vars || !mag.is_one() {
                write!(f, "{mag}")?;
                if has_vars {
                    write!(f, "*")?;
                }
            }
            write_monomial(f, "x", i)?;
            if i > 0 && j > 0 {
                write!(f, "*")?;
            }
            write_monomial(f, "y", j)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_normalizes() {
        let p = BiPoly::x() + BiPoly::y();
        let q = BiPoly::x() - BiPoly::y();
        let s = &p + &q;
        assert_eq!(s, BiPoly::monomial(1, 0, BigInt::from(2)));
        assert_eq!(s.len(), 1);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn product_of_variables() {
        assert_eq!(BiPoly::x() * BiPoly::y(), BiPoly::monomial(1, 1, BigInt::one()));
    }

    #[test]
    fn strip_seed_expansion() {
        // (1+x+y)(x+y) - xy, expanded by hand
        let s = BiPoly::one() + BiPoly::x() + BiPoly::y();
        let e1 = BiPoly::x() + BiPoly::y();
        let got = &s * &e1 - BiPoly::x() * BiPoly::y();
        let want = BiPoly::from_terms([(2, 0, 1), (0, 2, 1), (1, 1, 1), (1, 0, 1), (0, 1, 1)]);
        assert_eq!(got, want);
    }

    #[test]
    fn symmetry_test() {
        assert!((BiPoly::x() * BiPoly::y()).is_symmetric());
        assert!(!(BiPoly::x().pow(2) + BiPoly::y()).is_symmetric());
        assert!(BiPoly::zero().is_symmetric());
    }

    #[test]
    fn display_orders_by_degree() {
        let p = BiPoly::from_terms([(3, 0, 1), (0, 3, 1), (2, 0, 3), (0, 2, 3), (1, 1, 4), (1, 0, 2), (0, 1, 2)]);
        assert_eq!(p.to_string(), "x^3 + y^3 + 3*x^2 + 4*x*y + 3*y^2 + 2*x + 2*y");
        let n = BiPoly::from_terms([(0, 0, -2), (1, 0, -1)]);
        assert_eq!(n.to_string(), "-x - 2");
    }

    #[test]
    fn evaluation() {
        let p = BiPoly::from_terms([(2, 1, 3), (0, 0, -1)]);
        assert_eq!(p.eval_int(&BigInt::from(2), &BigInt::from(5)), BigInt::from(59));
        let v = p.eval_complex(Complex64::new(2.0, 0.0), Complex64::new(5.0, 0.0));
        assert!((v.re - 59.0).abs() < 1e-12);
    }
}
