use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;

use super::{BiPoly, ZPoly};
use crate::error::{Error, Result};

/// Rewrites a symmetric polynomial in the elementary symmetric polynomials
/// `e1 = x + y`, `e2 = xy`. The result maps `(k, j)` to the coefficient of
/// `e1^k e2^j`.
///
/// Each step removes the lexicographically leading term `c x^i y^j` (which
/// has `i >= j` for symmetric input) by subtracting `c e1^(i-j) e2^j`.
pub fn to_elementary(p: &BiPoly) -> Result<BTreeMap<(u32, u32), BigInt>> {
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    while let Some(((i, j), c)) = rest.leading_term() {
        assert!(i >= j, "symmetric reduction left a non-symmetric remainder");
        let c = c.clone();
        let k = i - j;
        // e1^k e2^j = sum_m C(k, m) x^(m+j) y^(k-m+j)
        for m in 0..=k {
            let b = binomial(BigInt::from(k), BigInt::from(m));
            rest.add_term((m + j, k - m + j), &-(&c * b));
        }
        out.insert((k, j), c);
    }
    Ok(out)
}

/// Restricts a symmetric `p(x, y)` to the hyperbola `(x-1)(y-1) = q` by
/// substituting `x + y = z + 2` and `xy = z + q + 1`.
pub fn symmetric_to_z(p: &BiPoly, q: &BigRational) -> Result<ZPoly> {
    let elem = to_elementary(p)?;
    let one = BigRational::from_integer(BigInt::from(1));
    let s = ZPoly::linear(BigRational::from_integer(BigInt::from(2)));
    let t = ZPoly::linear(q + &one);

    let max_k = elem.keys().map(|(k, _)| *k).max().unwrap_or(0) as usize;
    let max_j = elem.keys().map(|(_, j)| *j).max().unwrap_or(0) as usize;
    let s_pows = powers(&s, max_k);
    let t_pows = powers(&t, max_j);

    let mut by_j: BTreeMap<u32, ZPoly> = BTreeMap::new();
    for ((k, j), c) in &elem {
        let term = s_pows[*k as usize].scale(&BigRational::from_integer(c.clone()));
        let slot = by_j.entry(*j).or_insert_with(ZPoly::zero);
        *slot = &*slot + &term;
    }
    let mut acc = ZPoly::zero();
    for (j, poly) in by_j {
        acc = &acc + &(&poly * &t_pows[j as usize]);
    }
    Ok(acc)
}

fn powers(base: &ZPoly, max: usize) -> Vec<ZPoly> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(ZPoly::one());
    for k in 1..=max {
        out.push(&out[k - 1] * base);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::rat as q;

    #[test]
    fn product_goes_to_shifted_line() {
        let p = BiPoly::x() * BiPoly::y();
        assert_eq!(symmetric_to_z(&p, &q(16)).unwrap(), ZPoly::from_integers([17, 1]));
    }

    #[test]
    fn sum_goes_to_z_plus_two() {
        let p = BiPoly::x() + BiPoly::y();
        for qq in [2, 5, 16] {
            assert_eq!(symmetric_to_z(&p, &q(qq)).unwrap(), ZPoly::from_integers([2, 1]));
        }
    }

    #[test]
    fn rejects_asymmetric() {
        let p = BiPoly::x().pow(2) + BiPoly::y();
        assert!(matches!(symmetric_to_z(&p, &q(3)), Err(Error::NotSymmetric)));
    }

    #[test]
    fn elementary_form_of_power_sum() {
        // x^2 + y^2 = e1^2 - 2 e2
        let p = BiPoly::x().pow(2) + BiPoly::y().pow(2);
        let e = to_elementary(&p).unwrap();
        assert_eq!(e.get(&(2, 0)), Some(&BigInt::from(1)));
        assert_eq!(e.get(&(0, 1)), Some(&BigInt::from(-2)));
        assert_eq!(e.len(), 2);
    }

    #[test]
    fn rational_q_stays_exact() {
        let half = BigRational::new(BigInt::from(3), BigInt::from(2));
        let p = BiPoly::x() * BiPoly::y();
        let z = symmetric_to_z(&p, &half).unwrap();
        assert_eq!(z.coeff(0), BigRational::new(BigInt::from(5), BigInt::from(2)));
    }
}
