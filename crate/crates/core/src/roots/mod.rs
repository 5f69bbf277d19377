//! All complex zeros of the finite family polynomials by simultaneous
//! (Aberth) iteration, their images in the `v` plane, and their distance to
//! the limiting zero sets as the size grows.

mod aberth;
mod family;

pub use aberth::{
    cauchy_radius, find_roots, find_roots_seeded, find_roots_with, monic_coefficients, Evaluator, ExactRatio, Root,
    RootSet, ScaledHorner, CLUSTER_RADIUS, MAX_SWEEPS, RESIDUAL_BOUND,
};
pub use family::{
    convergence_report, convergence_report_seeded, find_family_roots, find_family_roots_seeded, root_distance,
    roots_in_v, ConvergenceRow, HalfPlane, ISOLATION_DISTANCE, ISOLATION_STABILITY,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::{rat, ZPoly};
    use crate::families::FamilyId;
    use num_complex::Complex64;

    fn product(roots: &[i64]) -> ZPoly {
        roots.iter().fold(ZPoly::one(), |acc, &r| acc * ZPoly::linear(rat(-r)))
    }

    #[test]
    fn counterexample_cubic() {
        let p = ZPoly::from_integers([218, 12, 6, 1]);
        let rs = find_roots(&p).unwrap().require_converged().unwrap();
        let c = 210f64.cbrt();
        let want = [
            Complex64::new(-2.0 - c, 0.0),
            Complex64::new(c / 2.0 - 2.0, c * 3f64.sqrt() / 2.0),
            Complex64::new(c / 2.0 - 2.0, -c * 3f64.sqrt() / 2.0),
        ];
        for w in want {
            let best = rs.points().iter().map(|z| (z - w).norm()).fold(f64::INFINITY, f64::min);
            assert!(best < 1e-10, "{w}: {best}");
        }
        assert!(rs.max_residual() < RESIDUAL_BOUND);
    }

    #[test]
    fn imaginary_pair() {
        let rs = find_roots(&ZPoly::from_integers([1, 0, 1])).unwrap();
        let mut ims: Vec<f64> = rs.points().iter().map(|z| z.im).collect();
        ims.sort_by(f64::total_cmp);
        assert!((ims[0] + 1.0).abs() < 1e-12 && (ims[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn integer_roots_to_twelve() {
        let ks: Vec<i64> = (1..=12).collect();
        let rs = find_roots(&product(&ks)).unwrap().require_converged().unwrap();
        let mut re: Vec<f64> = rs.points().iter().map(|z| z.re).collect();
        re.sort_by(f64::total_cmp);
        for (k, r) in ks.iter().zip(re) {
            assert!((r - *k as f64).abs() < 1e-8, "{k} {r}");
        }
    }

    #[test]
    fn double_root_is_clustered() {
        let rs = find_roots(&product(&[2, 2, -1])).unwrap();
        assert_eq!(rs.roots.len(), 3);
        let doubled: Vec<&Root> = rs.roots.iter().filter(|r| r.multiplicity == 2).collect();
        assert_eq!(doubled.len(), 2);
        assert!((doubled[0].z - 2.0).norm() < 1e-6);
    }

    #[test]
    fn zero_roots_are_exact() {
        let rs = find_roots(&ZPoly::from_integers([0, 0, -4, 1])).unwrap();
        assert_eq!(rs.polynomial_degree, 3);
        assert_eq!(rs.points().iter().filter(|z| z.norm() == 0.0).count(), 2);
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert!(find_roots(&ZPoly::zero()).is_err());
        assert!(find_roots(&ZPoly::one()).unwrap().roots.is_empty());
    }

    #[test]
    fn family_roots_meet_residual_bound() {
        for id in FamilyId::SWEEPABLE {
            let rs = find_family_roots(id, 30, "3").unwrap().require_converged().unwrap();
            assert_eq!(rs.roots.len(), id.z_degree(30));
            assert!(rs.max_residual() < RESIDUAL_BOUND, "{id}: {}", rs.max_residual());
        }
    }

    #[test]
    fn v_images() {
        let q = 16.0f64;
        let rs = RootSet {
            polynomial_degree: 1,
            roots: vec![Root { z: Complex64::new(2.0 * q.sqrt(), 0.0), residual: 0.0, multiplicity: 1 }],
            converged: true,
            sweeps: 0,
        };
        let v = roots_in_v(&rs, q, None);
        assert_eq!(v.len(), 2);
        assert!(v.iter().all(|v| (v - 1.0).norm() < 1e-7));
        let empty = RootSet { polynomial_degree: 0, roots: vec![], converged: true, sweeps: 0 };
        assert!(roots_in_v(&empty, q, None).is_empty());

        let rs = find_family_roots(FamilyId::CounterexampleC, 3, "16").unwrap();
        let pos = roots_in_v(&rs, q, Some(HalfPlane::PositiveRe));
        // v and 1/v share the sign of their real part, so each complex root
        // contributes both preimages.
        assert_eq!(pos.len(), 4);
        assert!(pos.iter().all(|v| (v.norm() - 1.0).abs() > 0.05));
    }
}
