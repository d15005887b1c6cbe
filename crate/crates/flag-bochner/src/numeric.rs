//! Floating-point evaluation of the potential, used to cross-check the exact
//! truncated expansion.
//!
//! The reference value is `Σ c_k ln Δ_{l_k}` computed from numeric
//! determinants of `ᵀ(exp Z)‾ exp Z`, with no series truncation anywhere.

use flag_bochner_core::expansion::{diastasis_on, quadratic_coefficient, AdmissibleMinors, KahlerParams};
use flag_bochner_core::lie::PaintedDiagram;
use flag_bochner_core::poly::{Coefficient, RatPoly, Rational};
use flag_bochner_core::realization::CoordinateAtlas;
use nalgebra::{Complex, DMatrix};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub type C64 = Complex<f64>;

/// Finite-difference step for [`hessian_fd`].
pub const FD_STEP: f64 = 1e-4;
pub const HESSIAN_TOLERANCE: f64 = 1e-6;
/// Default `‖z‖∞` of the sampled points.
pub const DEFAULT_RADIUS: f64 = 0.05;
pub const TRUNCATION_TOLERANCE: f64 = 1e-5;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NumericError {
    #[error("leading minor of size {size} is {value:e} at the evaluation point")]
    NonPositiveMinor { size: usize, value: f64 },
    #[error("expected {expected} coordinates, got {got}")]
    Dimension { expected: usize, got: usize },
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().expect("rationals here are small")
}

/// `Z(z)` at a numeric point.
pub fn z_numeric(atlas: &CoordinateAtlas, z: &[C64]) -> DMatrix<C64> {
    let m = atlas.matrix_size();
    let mut out = DMatrix::zeros(m, m);
    for ((r, c), e) in atlas.entries() {
        out[(r, c)] = z[e.var] * e.sign as f64;
    }
    out
}

/// `exp Z` as the finite sum `Σ_{k<m} Z^k / k!`.
pub fn exp_numeric(atlas: &CoordinateAtlas, z: &[C64]) -> DMatrix<C64> {
    let zm = z_numeric(atlas, z);
    let m = atlas.matrix_size();
    let mut out = DMatrix::identity(m, m);
    let mut power = DMatrix::identity(m, m);
    for k in 1..m {
        power = &power * &zm / C64::from(k as f64);
        out += &power;
    }
    out
}

/// `Σ c_k ln Δ_{l_k}(ᵀ(exp Z)‾ exp Z)` at `z`.
pub fn potential_exact(
    atlas: &CoordinateAtlas,
    minors: &AdmissibleMinors,
    c: &[f64],
    z: &[C64],
) -> Result<f64, NumericError> {
    if z.len() != atlas.num_vars() {
        return Err(NumericError::Dimension { expected: atlas.num_vars(), got: z.len() });
    }
    let e = exp_numeric(atlas, z);
    let a = e.adjoint() * &e;
    let mut total = 0.0;
    for (&size, ck) in minors.sizes().iter().zip(c) {
        let det = a.view((0, 0), (size, size)).clone_owned().determinant().re;
        if det.is_nan() || det <= 0.0 {
            return Err(NumericError::NonPositiveMinor { size, value: det });
        }
        total += ck * det.ln();
    }
    Ok(total)
}

/// Value of a truncated expansion with rational coefficients at `z`.
pub fn eval_polynomial(p: &RatPoly, z: &[C64]) -> f64 {
    let mut acc = C64::new(0.0, 0.0);
    for (m, c) in p.terms() {
        let mut t = C64::from(to_f64(c));
        for (v, e) in m.holo() {
            t *= z[v].powu(e);
        }
        for (v, e) in m.anti() {
            t *= z[v].conj().powu(e);
        }
        acc += t;
    }
    acc.re
}

/// Central-difference complex Hessian `∂²D/∂z_α∂z̄_β` at the origin.
pub fn hessian_fd(
    atlas: &CoordinateAtlas,
    minors: &AdmissibleMinors,
    c: &[f64],
    h: f64,
) -> Result<DMatrix<C64>, NumericError> {
    let n = atlas.num_vars();
    let f = |x: &[f64]| -> Result<f64, NumericError> {
        let z: Vec<C64> = (0..n).map(|k| C64::new(x[2 * k], x[2 * k + 1])).collect();
        potential_exact(atlas, minors, c, &z)
    };
    let mut x = vec![0.0; 2 * n];
    let f0 = f(&x)?;
    let mut real = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for a in 0..2 * n {
        x[a] = h;
        let plus = f(&x)?;
        x[a] = -h;
        let minus = f(&x)?;
        x[a] = 0.0;
        real[(a, a)] = (plus - 2.0 * f0 + minus) / (h * h);
        for b in (a + 1)..2 * n {
            let mut corner = |sa: f64, sb: f64| {
                x[a] = sa * h;
                x[b] = sb * h;
                let v = f(&x);
                x[a] = 0.0;
                x[b] = 0.0;
                v
            };
            let v = (corner(1.0, 1.0)? - corner(1.0, -1.0)? - corner(-1.0, 1.0)? + corner(-1.0, -1.0)?) / (4.0 * h * h);
            real[(a, b)] = v;
            real[(b, a)] = v;
        }
    }
    // ∂_α ∂̄_β = ¼[(∂xα∂xβ + ∂yα∂yβ) + i(∂xα∂yβ − ∂yα∂xβ)]
    Ok(DMatrix::from_fn(n, n, |i, j| {
        let (xi, yi, xj, yj) = (2 * i, 2 * i + 1, 2 * j, 2 * j + 1);
        C64::new(real[(xi, xj)] + real[(yi, yj)], real[(xi, yj)] - real[(yi, xj)]) * 0.25
    }))
}

/// Whether a Hermitian matrix is positive definite.
pub fn is_positive_definite(h: &DMatrix<C64>) -> bool {
    let sym = (h + h.adjoint()) * C64::from(0.5);
    nalgebra::Cholesky::new(sym).is_some()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    /// `(re, im)` per coordinate.
    pub point: Vec<(f64, f64)>,
    pub exact: f64,
    pub truncated: f64,
    pub error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumericCheck {
    pub seed: u64,
    pub radius: f64,
    pub degree: u32,
    pub hessian_max_error: f64,
    pub hessian_tolerance: f64,
    pub positive_definite: bool,
    pub origin_potential: f64,
    pub truncation_tolerance: f64,
    pub samples: Vec<Sample>,
}

impl NumericCheck {
    pub fn worst_sample(&self) -> Option<&Sample> {
        self.samples.iter().max_by(|a, b| a.error.total_cmp(&b.error))
    }

    pub fn hessian_ok(&self) -> bool {
        self.hessian_max_error <= self.hessian_tolerance && self.positive_definite
    }

    pub fn truncation_ok(&self) -> bool {
        self.samples.iter().all(|s| s.error <= self.truncation_tolerance)
    }

    pub fn passed(&self) -> bool {
        self.hessian_ok() && self.truncation_ok() && self.origin_potential == 0.0
    }
}

/// Numeric parameters of a check.
#[derive(Debug, Clone)]
pub struct CheckConfig {
    pub samples: usize,
    pub seed: u64,
    pub radius: f64,
    /// Degree of the truncated expansion compared against the exact potential.
    pub degree: u32,
}

/// Point with every `|z_k| ≤ radius` and `max |z_k| = radius`.
pub fn sample_point(rng: &mut ChaCha8Rng, n: usize, radius: f64) -> Vec<C64> {
    let mut z: Vec<C64> = (0..n)
        .map(|_| C64::from_polar(radius * rng.random::<f64>().sqrt(), rng.random_range(0.0..std::f64::consts::TAU)))
        .collect();
    let max = z.iter().map(|w| w.norm()).fold(0.0, f64::max);
    if max > 0.0 {
        z.iter_mut().for_each(|w| *w *= radius / max);
    }
    z
}

/// Hessian and truncation checks for one diagram with numeric parameters.
pub fn run_numeric_check(
    diagram: &PaintedDiagram,
    coeffs: &[Rational],
    config: &CheckConfig,
) -> Result<NumericCheck, crate::Failure> {
    let atlas = CoordinateAtlas::build(diagram).map_err(crate::Failure::Core)?;
    let expansion =
        diastasis_on(atlas, config.degree, &KahlerParams::Numeric(coeffs.to_vec())).map_err(crate::Failure::Core)?;
    let poly: RatPoly = expansion.poly.map_coeffs(|f| f.as_rational().cloned().expect("numeric parameters"));
    let c: Vec<f64> = coeffs.iter().map(to_f64).collect();
    let atlas = &expansion.atlas;
    let n = atlas.num_vars();

    let hessian = hessian_fd(atlas, &expansion.minors, &c, FD_STEP).map_err(crate::Failure::Numeric)?;
    let mut hessian_max_error: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let expect = if i == j {
                to_f64(quadratic_coefficient(&expansion, i).as_rational().expect("numeric parameters"))
            } else {
                0.0
            };
            hessian_max_error = hessian_max_error.max((hessian[(i, j)] - C64::from(expect)).norm());
        }
    }

    let origin = vec![C64::new(0.0, 0.0); n];
    let origin_potential = potential_exact(atlas, &expansion.minors, &c, &origin).map_err(crate::Failure::Numeric)?;

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut samples = Vec::with_capacity(config.samples);
    for _ in 0..config.samples {
        let z = sample_point(&mut rng, n, config.radius);
        let exact = potential_exact(atlas, &expansion.minors, &c, &z).map_err(crate::Failure::Numeric)?;
        let truncated = eval_polynomial(&poly, &z);
        samples.push(Sample {
            point: z.iter().map(|w| (w.re, w.im)).collect(),
            exact,
            truncated,
            error: (exact - truncated).abs(),
        });
    }
    Ok(NumericCheck {
        seed: config.seed,
        radius: config.radius,
        degree: config.degree,
        hessian_max_error,
        hessian_tolerance: HESSIAN_TOLERANCE,
        positive_definite: is_positive_definite(&hessian),
        origin_potential,
        truncation_tolerance: TRUNCATION_TOLERANCE,
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use flag_bochner_core::expansion::admissible_minors;
    use flag_bochner_core::lie::{Family, GroupSpec};
    use flag_bochner_core::poly::q;

    #[test]
    fn grassmannian_hessian_is_the_identity() {
        let d = PaintedDiagram::new(GroupSpec::new(Family::A, 3).unwrap(), &[1]).unwrap();
        let atlas = CoordinateAtlas::build(&d).unwrap();
        let h = hessian_fd(&atlas, &admissible_minors(&d), &[1.0], FD_STEP).unwrap();
        let id = DMatrix::<C64>::identity(2, 2);
        assert!((h - id).norm() < 1e-6);
    }

    #[test]
    fn origin_and_determinism() {
        let d = PaintedDiagram::new(GroupSpec::new(Family::C, 2).unwrap(), &[2]).unwrap();
        let cfg = CheckConfig { samples: 4, seed: 9, radius: 0.05, degree: 6 };
        let a = run_numeric_check(&d, &[q(3, 2)], &cfg).unwrap();
        let b = run_numeric_check(&d, &[q(3, 2)], &cfg).unwrap();
        assert_eq!(a.origin_potential, 0.0);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        assert!(a.passed());
    }
}
