//! Zero tests shared by every module.
//!
//! Quantities are compared against an epsilon scaled by the magnitude of the
//! inputs raised to the degree of the quantity, so that mixed-degree identities
//! (Q is quadratic in the coefficients, the minors are cubic) get comparable
//! treatment.

use crate::circle::CircleCoeffs;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Acceptance of a raw quadruple's normalization defect.
    pub norm: f64,
    /// Coefficient agreement for coincidence tests.
    pub coeff: f64,
    /// Zero test for Q and relations derived from it.
    pub q: f64,
    /// Zero test for minors, U, V, G and products of Q.
    pub zero: f64,
    /// Maximum accepted tangency or angle residual of an emitted solution.
    pub residual: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            norm: 1e-9,
            coeff: 1e-9,
            q: 1e-9,
            zero: 1e-9,
            residual: 1e-8,
        }
    }
}

impl Tolerances {
    /// Every zero-test epsilon set to `eps`; the residual limit is left alone.
    pub fn uniform(eps: f64) -> Self {
        Self {
            norm: eps,
            coeff: eps,
            q: eps,
            zero: eps,
            ..Self::default()
        }
    }

    pub fn is_zero(&self, value: f64, scale: f64) -> bool {
        value.abs() <= self.zero * scale.max(1.0)
    }

    pub fn q_is_zero(&self, value: f64, scale: f64) -> bool {
        value.abs() <= self.q * scale.max(1.0)
    }
}

/// Largest absolute coefficient over a set of circles, never below one.
pub fn coeff_scale(circles: &[CircleCoeffs]) -> f64 {
    circles
        .iter()
        .flat_map(|k| k.to_array())
        .fold(1.0_f64, |m, x| m.max(x.abs()))
}

/// Magnitude of a set of Q values, never below one.
pub fn q_scale(q: &[f64]) -> f64 {
    q.iter().fold(1.0_f64, |m, x| m.max(x.abs()))
}
