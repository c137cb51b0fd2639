//! Numeric check of the braid relation for Householder reflections on the unit sphere.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::ConstructionError;

type Vector = Vec<f64>;

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `H_v(x) = 2⟨x, v⟩v − x`.
pub fn householder(v: &[f64], x: &[f64]) -> Vector {
    let c = 2.0 * dot(x, v);
    v.iter().zip(x).map(|(vi, xi)| c * vi - xi).collect()
}

fn random_unit(rng: &mut ChaCha8Rng, dim: usize) -> Vector {
    loop {
        let v: Vector = (0..dim).map(|_| StandardNormal.sample(rng)).collect();
        let norm = dot(&v, &v).sqrt();
        if norm > 1e-6 {
            return v.into_iter().map(|x| x / norm).collect();
        }
    }
}

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HouseholderReport {
    pub dim: usize,
    pub trials: usize,
    /// Largest sup-norm residual of `r12 r23 r12 = r23 r12 r23` over both braidings.
    pub braid_residual: f64,
    /// Largest residual of `H_v(H_v(x)) = x`.
    pub involution_residual: f64,
    /// Largest residual of `H_v(v) = v`.
    pub fixed_point_residual: f64,
}

impl HouseholderReport {
    pub fn worst(&self) -> f64 {
        self.braid_residual.max(self.involution_residual).max(self.fixed_point_residual)
    }
}

type Triple = (Vector, Vector, Vector);

fn braid_residual(r: &dyn Fn(&[f64], &[f64]) -> (Vector, Vector), t: &Triple) -> f64 {
    let r12 = |(a, b, c): Triple| {
        let (x, y) = r(&a, &b);
        (x, y, c)
    };
    let r23 = |(a, b, c): Triple| {
        let (x, y) = r(&b, &c);
        (a, x, y)
    };
    let lhs = r12(r23(r12(t.clone())));
    let rhs = r23(r12(r23(t.clone())));
    distance(&lhs.0, &rhs.0).max(distance(&lhs.1, &rhs.1)).max(distance(&lhs.2, &rhs.2))
}

/// Samples `trials` triples of random unit vectors and checks both braidings
/// `(x, y) ↦ (H_x(y), x)` and `(x, y) ↦ (H_x(H_o(y)), H_o(x))`.
pub fn householder_braiding_check(dim: usize, trials: usize, tol: f64, seed: u64) -> Result<HouseholderReport, ConstructionError> {
    if dim < 2 {
        return Err(ConstructionError::BadParams(format!("dimension {dim} must be at least 2")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let o = random_unit(&mut rng, dim);
    let first = |x: &[f64], y: &[f64]| (householder(x, y), x.to_vec());
    let second = |x: &[f64], y: &[f64]| (householder(x, &householder(&o, y)), householder(&o, x));
    let mut report =
        HouseholderReport { dim, trials, braid_residual: 0.0, involution_residual: 0.0, fixed_point_residual: 0.0 };
    for _ in 0..trials {
        let t = (random_unit(&mut rng, dim), random_unit(&mut rng, dim), random_unit(&mut rng, dim));
        report.braid_residual = report.braid_residual.max(braid_residual(&first, &t)).max(braid_residual(&second, &t));
        report.involution_residual = report.involution_residual.max(distance(&householder(&t.0, &householder(&t.0, &t.1)), &t.1));
        report.fixed_point_residual = report.fixed_point_residual.max(distance(&householder(&t.0, &t.0), &t.0));
    }
    if report.worst() > tol {
        return Err(ConstructionError::ToleranceExceeded { worst: report.worst(), tol });
    }
    Ok(report)
}
