use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_poly::{rational_to_f64, squarefree_decomposition, IntegerPoly, ZPoly};

/// Sweep cap for the simultaneous iteration.
pub const MAX_SWEEPS: usize = 1000;
/// Roots closer than this are reported as one cluster.
pub const CLUSTER_RADIUS: f64 = 1e-7;
/// Largest admissible relative residual on a returned root.
pub const RESIDUAL_BOUND: f64 = 1e-8;
const POLISH_STEPS: usize = 30;
const STALL: f64 = 1e-7;
const JITTER: f64 = 1e-3;
const GOLDEN_ANGLE: f64 = 2.399_963_229_728_653;

/// Source of Newton corrections `p(z)/p'(z)` for the iteration.
pub trait Evaluator: Sync {
    fn degree(&self) -> usize;
    fn newton_ratio(&self, z: Complex64) -> Complex64;
}

/// Double-precision Horner on coefficients scaled to unit maximum; points
/// outside the unit disc go through the reversed polynomial so nothing
/// overflows.
#[derive(Clone, Debug)]
pub struct ScaledHorner {
    coeffs: Vec<f64>,
}

impl ScaledHorner {
    pub fn new(p: &ZPoly) -> Self {
        let ip = IntegerPoly::from_zpoly(p);
        let ln = ip.ln_abs_coeffs();
        let m = ln.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let coeffs = ip
            .coeffs()
            .iter()
            .zip(ln)
            .map(|(c, l)| {
                if l.is_finite() {
                    let sign = if c.sign() == num_bigint::Sign::Minus { -1.0 } else { 1.0 };
                    sign * (l - m).exp()
                } else {
                    0.0
                }
            })
            .collect();
        Self { coeffs }
    }

    fn horner(c: impl DoubleEndedIterator<Item = f64>, z: Complex64) -> (Complex64, Complex64) {
        let mut v = Complex64::new(0.0, 0.0);
        let mut d = Complex64::new(0.0, 0.0);
        for a in c.rev() {
            d = d * z + v;
            v = v * z + a;
        }
        (v, d)
    }
}

impl Evaluator for ScaledHorner {
    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn newton_ratio(&self, z: Complex64) -> Complex64 {
        if z.norm() <= 1.0 {
            let (v, d) = Self::horner(self.coeffs.iter().copied(), z);
            return v / d;
        }
        // p(z) = z^n r(w), w = 1/z, r(w) = sum c_k w^(n-k)
        let n = self.degree() as f64;
        let w = z.inv();
        let (r, dr) = Self::horner(self.coeffs.iter().rev().copied(), w);
        z * r / (n * r - w * dr)
    }
}

/// Newton corrections from error-free evaluation; slow but immune to
/// cancellation.
#[derive(Clone, Debug)]
pub struct ExactRatio {
    p: IntegerPoly,
    dp: IntegerPoly,
}

impl ExactRatio {
    pub fn new(p: IntegerPoly) -> Self {
        let dp = p.derivative();
        Self { p, dp }
    }
}

impl Evaluator for ExactRatio {
    fn degree(&self) -> usize {
        self.p.degree().unwrap_or(0)
    }

    fn newton_ratio(&self, z: Complex64) -> Complex64 {
        let v = self.p.eval(z);
        if v.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        v.div(&self.dp.eval(z))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Root {
    pub z: Complex64,
    /// `|p(z)| / sum_k |c_k| |z|^k`, evaluated exactly.
    pub residual: f64,
    /// Size of the cluster this root belongs to; each member is listed.
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootSet {
    pub polynomial_degree: usize,
    pub roots: Vec<Root>,
    pub converged: bool,
    pub sweeps: usize,
}

impl RootSet {
    pub fn points(&self) -> Vec<Complex64> {
        self.roots.iter().map(|r| r.z).collect()
    }

    pub fn residuals(&self) -> Vec<f64> {
        self.roots.iter().map(|r| r.residual).collect()
    }

    pub fn max_residual(&self) -> f64 {
        self.roots.iter().map(|r| r.residual).fold(0.0, f64::max)
    }

    pub fn require_converged(self) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::NoConvergence { sweeps: self.sweeps })
        }
    }
}

/// All roots of `p` with multiplicity, default seed.
pub fn find_roots(p: &ZPoly) -> Result<RootSet> {
    find_roots_seeded(p, 0)
}

pub fn find_roots_seeded(p: &ZPoly, seed: u64) -> Result<RootSet> {
    let (stripped, zeros) = strip_zero_roots(p)?;
    let original = IntegerPoly::from_zpoly(p);
    let sp = exact_to_zpoly(&stripped);
    let factors = squarefree_decomposition(&sp);
    let mut points = Vec::new();
    let mut converged = true;
    let mut sweeps = 0;
    // Repeated factors are split off exactly; iterating on a multiple root
    // only reaches a ring of radius eps^(1/m) around it. The cofactors are
    // evaluated exactly since their expanded coefficients cancel badly.
    for (k, (f, mult)) in factors.iter().enumerate() {
        let exact = IntegerPoly::from_zpoly(f);
        let seed = seed.wrapping_add(k as u64);
        let run = if factors.len() == 1 {
            iterate(&ScaledHorner::new(f), &exact, seed)
        } else {
            iterate(&ExactRatio::new(exact.clone()), &exact, seed)
        };
        converged &= run.converged;
        sweeps = sweeps.max(run.sweeps);
        for z in run.points {
            points.extend(std::iter::repeat_n(z, *mult));
        }
    }
    points.extend(std::iter::repeat_n(Complex64::new(0.0, 0.0), zeros));
    Ok(RootSet { polynomial_degree: points.len(), roots: cluster(&original, &points), converged, sweeps })
}

/// Runs the iteration with `eval` and finishes with exact residuals,
/// polishing and clustering against `exact`, which must have the same roots
/// and no repeated factor.
pub fn find_roots_with<E: Evaluator>(eval: &E, exact: &IntegerPoly, seed: u64) -> Result<RootSet> {
    if exact.degree().is_none() {
        return Err(Error::InvalidRange("the zero polynomial has no finite root set".into()));
    }
    let run = iterate(eval, exact, seed);
    Ok(RootSet {
        polynomial_degree: run.points.len(),
        roots: cluster(exact, &run.points),
        converged: run.converged,
        sweeps: run.sweeps,
    })
}

fn exact_to_zpoly(p: &IntegerPoly) -> ZPoly {
    ZPoly::from_integers(p.coeffs().iter().cloned())
}

/// Factors out `z^k`, which the exact representation handles for free.
fn strip_zero_roots(p: &ZPoly) -> Result<(IntegerPoly, usize)> {
    if p.is_zero() {
        return Err(Error::InvalidRange("the zero polynomial has no finite root set".into()));
    }
    let ip = IntegerPoly::from_zpoly(p);
    let k = ip.coeffs().iter().take_while(|c| num_traits::Zero::is_zero(*c)).count();
    Ok((IntegerPoly::new(ip.coeffs()[k..].to_vec()), k))
}

/// Positive root of `|c_n| r^n = sum_{k<n} |c_k| r^k`, bisected on `ln r`.
pub fn cauchy_radius(p: &IntegerPoly) -> f64 {
    let ln = p.ln_abs_coeffs();
    let n = ln.len() - 1;
    let f = |lr: f64| -> f64 {
        let lead = ln[n] + n as f64 * lr;
        let lower: Vec<f64> = (0..n).filter(|&k| ln[k].is_finite()).map(|k| ln[k] + k as f64 * lr).collect();
        let m = lower.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if !m.is_finite() {
            return 1.0;
        }
        lead - (m + lower.iter().map(|l| (l - m).exp()).sum::<f64>().ln())
    };
    let (mut lo, mut hi) = (-800.0, 800.0);
    if f(lo) >= 0.0 {
        return lo.exp();
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) >= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi.exp()
}

fn initial_guesses(n: usize, radius: f64, seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|k| {
            let r = radius * (1.0 + JITTER * (rng.gen::<f64>() - 0.5));
            Complex64::from_polar(r, 0.4 + GOLDEN_ANGLE * k as f64)
        })
        .collect()
}

struct Run {
    points: Vec<Complex64>,
    converged: bool,
    sweeps: usize,
}

fn iterate<E: Evaluator>(eval: &E, exact: &IntegerPoly, seed: u64) -> Run {
    let n = exact.degree().unwrap_or(0);
    if n == 0 {
        return Run { points: Vec::new(), converged: true, sweeps: 0 };
    }
    let mut z = initial_guesses(n, cauchy_radius(exact), seed);
    let mut done = vec![false; n];
    let mut last_step = vec![f64::INFINITY; n];
    let mut sweeps = 0;
    while sweeps < MAX_SWEEPS && done.iter().any(|d| !d) {
        sweeps += 1;
        for i in 0..n {
            if done[i] {
                continue;
            }
            let ratio = eval.newton_ratio(z[i]);
            if ratio == Complex64::new(0.0, 0.0) {
                done[i] = true;
                continue;
            }
            let repulsion: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let mut step = ratio / (1.0 - ratio * repulsion);
            if !step.re.is_finite() || !step.im.is_finite() {
                step = if ratio.re.is_finite() && ratio.im.is_finite() {
                    ratio
                } else {
                    Complex64::from_polar(1e-6 * z[i].norm().max(1.0), i as f64)
                };
            }
            z[i] -= step;
            let size = step.norm();
            let scale = z[i].norm();
            // Done at machine precision, or once corrections that were already
            // tiny stop shrinking: the evaluator has hit its rounding floor.
            if size <= 4.0 * f64::EPSILON * scale || (last_step[i] < STALL * scale && size >= last_step[i]) {
                done[i] = true;
            }
            last_step[i] = size;
        }
    }
    let converged = done.iter().all(|&d| d);
    let dp = exact.derivative();
    let points = z.into_iter().map(|r| polish(exact, &dp, r)).collect();
    Run { points, converged, sweeps }
}

/// Exact Newton steps while the corrections keep shrinking; the float
/// iteration only gets within its own rounding floor.
fn polish(p: &IntegerPoly, dp: &IntegerPoly, z0: Complex64) -> Complex64 {
    let mut z = z0;
    let mut last = f64::INFINITY;
    for _ in 0..POLISH_STEPS {
        let v = p.eval(z);
        let d = dp.eval(z);
        if v.is_zero() || d.is_zero() {
            break;
        }
        let step = v.div(&d);
        let size = step.norm();
        if !size.is_finite() || size >= last {
            break;
        }
        z -= step;
        last = size;
        if size <= f64::EPSILON * z.norm() {
            break;
        }
    }
    if p.relative_residual(z) <= p.relative_residual(z0) {
        z
    } else {
        z0
    }
}

/// Groups roots within [`CLUSTER_RADIUS`] (transitively) and moves every
/// member to the cluster centroid.
fn cluster(p: &IntegerPoly, z: &[Complex64]) -> Vec<Root> {
    let n = z.len();
    let mut label: Vec<usize> = (0..n).collect();
    fn find(l: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while l[r] != r {
            r = l[r];
        }
        l[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if (z[i] - z[j]).norm() < CLUSTER_RADIUS * z[i].norm().max(1.0) {
                let (a, b) = (find(&mut label, i), find(&mut label, j));
                label[a.max(b)] = a.min(b);
            }
        }
    }
    let groups: Vec<usize> = (0..n).map(|i| find(&mut label, i)).collect();
    (0..n)
        .map(|i| {
            let members: Vec<usize> = (0..n).filter(|&j| groups[j] == groups[i]).collect();
            let zc = if members.len() == 1 {
                z[i]
            } else {
                members.iter().map(|&j| z[j]).sum::<Complex64>() / members.len() as f64
            };
            Root { z: zc, residual: p.relative_residual(zc), multiplicity: members.len() }
        })
        .collect()
}

/// Float coefficients for display or reconstruction checks.
pub fn monic_coefficients(p: &ZPoly) -> Vec<f64> {
    let lead = p.leading().map(rational_to_f64).unwrap_or(1.0);
    p.coeffs().iter().map(|c| rational_to_f64(c) / lead).collect()
}
