//! The Möbius gyrogroup on the open unit disk, checked numerically.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::MobiusError;

/// Sampled points are rejected above this modulus; `1 + āb` stays away from 0.
pub const MOBIUS_MODULUS_CAP: f64 = 0.95;

/// A point of the open unit disk.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MobiusPoint(Complex64);

impl MobiusPoint {
    pub fn new(re: f64, im: f64) -> Result<MobiusPoint, MobiusError> {
        let z = Complex64::new(re, im);
        if z.norm_sqr().is_nan() || z.norm_sqr() >= 1.0 {
            return Err(MobiusError::PointOutsideDisk { re, im });
        }
        Ok(MobiusPoint(z))
    }

    pub const ORIGIN: MobiusPoint = MobiusPoint(Complex64::new(0.0, 0.0));

    pub fn re(&self) -> f64 {
        self.0.re
    }

    pub fn im(&self) -> f64 {
        self.0.im
    }

    pub fn as_complex(&self) -> Complex64 {
        self.0
    }

    /// Möbius addition `(a + b) / (1 + āb)`.
    pub fn oplus(self, b: MobiusPoint) -> MobiusPoint {
        let (a, b) = (self.0, b.0);
        MobiusPoint((a + b) / (1.0 + a.conj() * b))
    }

    /// The unimodular factor `(1 + ab̄) / (1 + āb)` by which `gyr[a,b]` rotates.
    pub fn gyr_factor(self, b: MobiusPoint) -> Complex64 {
        let (a, b) = (self.0, b.0);
        (1.0 + a * b.conj()) / (1.0 + a.conj() * b)
    }

    /// `gyr[self, b] z`.
    pub fn gyr(self, b: MobiusPoint, z: MobiusPoint) -> MobiusPoint {
        MobiusPoint(self.gyr_factor(b) * z.0)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MobiusReport {
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub modulus_cap: f64,
    /// max |a ⊕ (b ⊕ c) − (a ⊕ b) ⊕ gyr[a,b]c|
    pub max_left_gyroassociativity: f64,
    /// max |gyr[a ⊕ b, b] − gyr[a,b]| as rotation factors
    pub max_left_loop: f64,
    /// max ||gyr[a,b]| − 1|
    pub max_unimodularity: f64,
    pub passed: bool,
}

fn sample_point(rng: &mut ChaCha8Rng) -> MobiusPoint {
    loop {
        let re = rng.random_range(-MOBIUS_MODULUS_CAP..=MOBIUS_MODULUS_CAP);
        let im = rng.random_range(-MOBIUS_MODULUS_CAP..=MOBIUS_MODULUS_CAP);
        if re * re + im * im <= MOBIUS_MODULUS_CAP * MOBIUS_MODULUS_CAP {
            return MobiusPoint(Complex64::new(re, im));
        }
    }
}

/// Draws `samples` triples `(a, b, c)` from the disk (deterministic in `seed`)
/// and records the worst residual of each closed-form identity.
pub fn mobius_sample_check(samples: usize, tol: f64, seed: u64) -> Result<MobiusReport, MobiusError> {
    if samples == 0 {
        return Err(MobiusError::InvalidSampleCount);
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(MobiusError::InvalidTolerance(tol));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut assoc, mut looped, mut unimodular) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..samples {
        let a = sample_point(&mut rng);
        let b = sample_point(&mut rng);
        let c = sample_point(&mut rng);
        let lhs = a.oplus(b.oplus(c));
        let rhs = a.oplus(b).oplus(a.gyr(b, c));
        assoc = assoc.max((lhs.0 - rhs.0).norm());
        looped = looped.max((a.oplus(b).gyr_factor(b) - a.gyr_factor(b)).norm());
        unimodular = unimodular.max((a.gyr_factor(b).norm() - 1.0).abs());
    }
    Ok(MobiusReport {
        samples,
        seed,
        tolerance: tol,
        modulus_cap: MOBIUS_MODULUS_CAP,
        max_left_gyroassociativity: assoc,
        max_left_loop: looped,
        max_unimodularity: unimodular,
        passed: assoc < tol && looped < tol && unimodular < tol,
    })
}
