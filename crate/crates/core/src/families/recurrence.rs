use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::FamilyId;
use crate::error::Result;
use crate::exact_poly::{symmetric_to_z, to_elementary, BiPoly, ZPoly};

/// Linear recurrence `t_n = sum_k coeffs[k] t_(n-1-k)` for `n >= start + seeds.len()`,
/// with `t_(start + i) = seeds[i]`.
#[derive(Clone, Debug)]
pub struct Recurrence<T> {
    pub start: usize,
    pub seeds: Vec<T>,
    pub coeffs: Vec<T>,
}

impl<T> Recurrence<T> {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Recurrence<U> {
        Recurrence {
            start: self.start,
            seeds: self.seeds.iter().map(&mut f).collect(),
            coeffs: self.coeffs.iter().map(&mut f).collect(),
        }
    }
}

macro_rules! exact_nth {
    ($t:ty) => {
        impl Recurrence<$t> {
            /// `t_start ..= t_n`.
            pub fn terms_through(&self, n: usize) -> Vec<$t> {
                assert!(n >= self.start, "index below recurrence start");
                let count = n - self.start + 1;
                let mut out: Vec<$t> = self.seeds.iter().take(count).cloned().collect();
                while out.len() < count {
                    let len = out.len();
                    let mut next = <$t>::zero();
                    for (k, c) in self.coeffs.iter().enumerate() {
                        next = &next + &(c * &out[len - 1 - k]);
                    }
                    out.push(next);
                }
                out
            }

            pub fn nth(&self, n: usize) -> $t {
                self.terms_through(n).pop().expect("nonempty")
            }
        }
    };
}
exact_nth!(BiPoly);
exact_nth!(ZPoly);

fn xy_poly(terms: &[(u32, u32, i64)]) -> BiPoly {
    BiPoly::from_terms(terms.iter().copied())
}

/// The recurrence that builds each family in `(x, y)`.
pub fn family_recurrence(id: FamilyId) -> Recurrence<BiPoly> {
    let (x, y) = (BiPoly::x(), BiPoly::y());
    let one = BiPoly::one();
    let xy = &x * &y;
    let s1 = &(&one + &x) + &y;
    match id {
        FamilyId::TriangleStrip => Recurrence {
            start: 0,
            seeds: vec![&x + &y, xy_poly(&[(2, 0, 1), (0, 2, 1), (1, 1, 1), (1, 0, 1), (0, 1, 1)])],
            coeffs: vec![s1, -&xy],
        },
        FamilyId::Wheel => Recurrence {
            start: 1,
            seeds: vec![
                xy.clone(),
                xy_poly(&[(2, 0, 1), (0, 2, 1), (1, 1, 1), (1, 0, 1), (0, 1, 1)]),
                xy_poly(&[(3, 0, 1), (0, 3, 1), (2, 0, 3), (0, 2, 3), (1, 1, 4), (1, 0, 2), (0, 1, 2)]),
            ],
            coeffs: vec![&s1 + &one, -(&s1 + &xy), xy],
        },
        FamilyId::CycleMultiEdge | FamilyId::CounterexampleC => {
            let gamma = &s1 + &xy;
            let second = &(&gamma - &one) + &(&xy * &s1);
            Recurrence {
                start: 0,
                seeds: vec![
                    one.clone(),
                    &x + &y,
                    xy_poly(&[(2, 0, 1), (0, 2, 1), (1, 1, 1), (1, 0, 1), (0, 1, 1)]),
                    xy_poly(&[
                        (3, 0, 1),
                        (0, 3, 1),
                        (1, 2, 1),
                        (2, 1, 1),
                        (2, 2, 1),
                        (2, 0, 1),
                        (0, 2, 1),
                        (1, 1, 1),
                        (1, 0, 1),
                        (0, 1, 1),
                    ]),
                ],
                coeffs: vec![gamma.clone(), -second, &gamma * &xy, -(&xy * &xy)],
            }
        }
    }
}

fn effective_n(id: FamilyId, n: usize) -> usize {
    if id == FamilyId::CounterexampleC {
        3
    } else {
        n
    }
}

/// Exact `T(x, y)` of the member of size `n` (ignored for the counterexample).
pub fn family_bipoly(id: FamilyId, n: usize) -> Result<BiPoly> {
    id.check_n(n)?;
    Ok(family_recurrence(id).nth(effective_n(id, n)))
}

/// Exact restriction to the hyperbola at rational `q`, built by running the
/// recurrence directly in `z`; never expands the bivariate polynomial.
pub fn family_zpoly(id: FamilyId, n: usize, q: &BigRational) -> Result<ZPoly> {
    id.check_n(n)?;
    let rec = family_recurrence(id);
    let zrec = Recurrence {
        start: rec.start,
        seeds: rec.seeds.iter().map(|p| symmetric_to_z(p, q)).collect::<Result<_>>()?,
        coeffs: rec.coeffs.iter().map(|p| symmetric_to_z(p, q)).collect::<Result<_>>()?,
    };
    Ok(zrec.nth(effective_n(id, n)))
}

pub fn triangle_strip_poly(n: usize) -> BiPoly {
    family_recurrence(FamilyId::TriangleStrip).nth(n)
}

/// Panics for `n = 0`; the wheel starts at one spoke.
pub fn wheel_poly(n: usize) -> BiPoly {
    assert!(n >= 1, "wheel needs n >= 1");
    family_recurrence(FamilyId::Wheel).nth(n)
}

pub fn cycle_multi_poly(n: usize) -> BiPoly {
    family_recurrence(FamilyId::CycleMultiEdge).nth(n)
}

pub fn counterexample_poly() -> BiPoly {
    cycle_multi_poly(3)
}

/// A symmetric polynomial stored in the elementary basis so it can be
/// evaluated, with its `z`-derivative, at any real `q`.
#[derive(Clone, Debug)]
struct ElementaryPoly {
    terms: Vec<(u32, u32, f64)>,
}

impl ElementaryPoly {
    fn new(p: &BiPoly) -> Self {
        let elem: BTreeMap<(u32, u32), BigInt> = to_elementary(p).expect("family polynomials are symmetric");
        Self { terms: elem.into_iter().map(|((k, j), c)| (k, j, c.to_f64().unwrap_or(f64::NAN))).collect() }
    }

    /// Value and derivative in `z`, where `e1 = z + 2` and `e2 = z + q + 1`.
    fn eval(&self, e1: Complex64, e2: Complex64) -> (Complex64, Complex64) {
        let mut v = Complex64::new(0.0, 0.0);
        let mut d = Complex64::new(0.0, 0.0);
        for &(k, j, c) in &self.terms {
            let a = e1.powu(k);
            let b = e2.powu(j);
            v += a * b * c;
            if k > 0 {
                d += e1.powu(k - 1) * b * (c * k as f64);
            }
            if j > 0 {
                d += a * e2.powu(j - 1) * (c * j as f64);
            }
        }
        (v, d)
    }
}

/// Floating evaluation of `f_n(z)` and `f_n'(z)` by running the recurrence in
/// `z`. Values are rescaled as they grow, so the pair is returned together
/// with a log-scale `s`: the true values are `exp(s)` times the returned ones.
#[derive(Clone, Debug)]
pub struct FamilyEvaluator {
    id: FamilyId,
    n: usize,
    q: f64,
    rec: Recurrence<ElementaryPoly>,
}

impl FamilyEvaluator {
    pub fn new(id: FamilyId, n: usize, q: f64) -> Result<Self> {
        id.check_n(n)?;
        Ok(Self { id, n: effective_n(id, n), q, rec: family_recurrence(id).map(ElementaryPoly::new) })
    }

    pub fn id(&self) -> FamilyId {
        self.id
    }

    pub fn degree(&self) -> usize {
        self.id.z_degree(self.n)
    }

    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64, f64) {
        let e1 = z + 2.0;
        let e2 = z + self.q + 1.0;
        let seeds: Vec<(Complex64, Complex64)> = self.rec.seeds.iter().map(|p| p.eval(e1, e2)).collect();
        let idx = self.n - self.rec.start;
        if idx < seeds.len() {
            let (v, d) = seeds[idx];
            return (v, d, 0.0);
        }
        let coeffs: Vec<(Complex64, Complex64)> = self.rec.coeffs.iter().map(|p| p.eval(e1, e2)).collect();
        let order = coeffs.len();
        let mut window = seeds;
        let mut log_scale = 0.0;
        for _ in window.len()..=idx {
            let len = window.len();
            let mut v = Complex64::new(0.0, 0.0);
            let mut d = Complex64::new(0.0, 0.0);
            for (k, (c, dc)) in coeffs.iter().enumerate() {
                let (tv, td) = window[len - 1 - k];
                v += c * tv;
                d += dc * tv + c * td;
            }
            window.push((v, d));
            if window.len() > order {
                window.remove(0);
            }
            let big = window.iter().map(|(a, b)| a.norm().max(b.norm())).fold(0.0, f64::max);
            if big > 1e150 || (big < 1e-150 && big > 0.0) {
                let s = big.ln();
                let f = (-s).exp();
                for w in window.iter_mut() {
                    w.0 *= f;
                    w.1 *= f;
                }
                log_scale += s;
            }
        }
        let (v, d) = *window.last().expect("nonempty");
        (v, d, log_scale)
    }

    /// `f_n(z)`, possibly overflowing to infinity for large arguments.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let (v, _, s) = self.eval_with_derivative(z);
        v * s.exp()
    }
}

/// Cross-check for the cycle family: the closed form with the division by
/// `(x-1)(y-1) = q` carried out numerically.
pub fn cycle_multi_closed_form(x: Complex64, y: Complex64, n: i32) -> Complex64 {
    let q = (x - 1.0) * (y - 1.0);
    (x * y - x - y) / q * (x.powi(n) + y.powi(n) - 1.0) + (x * y).powi(n) / q
}
