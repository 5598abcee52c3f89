//! The Hankel-determinant bound and the majorizing surface it is derived
//! from.
//!
//! For `c = |c1|` in `[0, 1]` and `(nu, mu) = (|x|, |y|)` in the unit square,
//!
//! ```text
//! |a2 a4 - a3^2| <= B1 |tau|^2 F(nu, mu),
//! F(nu, mu) = T1 + (nu + mu) T2 + (nu^2 + mu^2) T3 + (nu + mu)^2 T4.
//! ```
//!
//! Taking `F` at the corner `(1, 1)` and substituting `t = c^2` gives
//! `B1 |tau|^2 (P t^2 + Q t + R)`, maximized at `t = 1`.

mod corollary;
mod maximize;

pub use corollary::{Corollary, CorollaryArgs};
pub use maximize::{
    maximize_surface, record_for_terms, verify_max_structure, MaxRecord, MaxReport,
    MaximizerConfig, SurfaceMax,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::minda::{ClassParams, PhiSpec};

/// Number of points in the default `c` profile attached to a breakdown.
pub const PROFILE_STEPS: usize = 11;

/// `|B3 / (d2 d4) - B1^3 tau^2 / d2^4|`, shared by `T1` and `P`.
fn leading_modulus(params: &ClassParams, phi: &PhiSpec) -> f64 {
    let (d2, d4) = (params.d2(), params.d4());
    let tau = params.tau();
    (phi.b3() / (d2 * d4) - phi.b1().powi(3) * tau * tau / d2.powi(4)).norm()
}

/// Coefficients of the surface `F` at a fixed `c`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TTerms {
    pub c: f64,
    pub t1: f64,
    pub t2: f64,
    pub t3: f64,
    pub t4: f64,
}

impl TTerms {
    pub fn new(params: &ClassParams, phi: &PhiSpec, c: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&c) {
            return Err(Error::Usage(format!("c must lie in [0, 1], got {c}")));
        }
        let (d2, d3, d4) = (params.d2(), params.d3(), params.d4());
        let (b1, b2) = (phi.b1(), phi.b2());
        let tau_abs = params.tau().norm();
        let one_c2 = 1.0 + c * c;

        let t1 = leading_modulus(params, phi) * c.powi(4) + b1 * c * one_c2 / (d2 * d4);
        let t2 = c * c * one_c2 / d2 * (b1 * b1 * tau_abs / (4.0 * d2 * d3) + b2.abs() / d4);
        let t3 = b1 * c * (c - 1.0) * one_c2 / (2.0 * d2 * d4);
        let t4 = b1 * one_c2 * one_c2 / (4.0 * d3 * d3);
        Ok(Self { c, t1, t2, t3, t4 })
    }

    /// Arbitrary coefficients, for probing the maximizer.
    pub fn from_raw(c: f64, t1: f64, t2: f64, t3: f64, t4: f64) -> Self {
        Self { c, t1, t2, t3, t4 }
    }

    pub fn surface(&self, nu: f64, mu: f64) -> Result<f64> {
        let unit = 0.0..=1.0;
        if !unit.contains(&nu) || !unit.contains(&mu) {
            return Err(Error::Usage(format!(
                "(nu, mu) = ({nu}, {mu}) is outside [0, 1]^2"
            )));
        }
        Ok(self.eval(nu, mu))
    }

    pub(crate) fn eval(&self, nu: f64, mu: f64) -> f64 {
        let s = nu + mu;
        self.t1 + s * self.t2 + (nu * nu + mu * mu) * self.t3 + s * s * self.t4
    }

    /// Edge `nu = 0`: `T1 + mu T2 + mu^2 (T3 + T4)`.
    pub fn phi_slice(&self, mu: f64) -> Result<f64> {
        self.surface(0.0, mu)
    }

    /// Edge `nu = 1`: `T1 + T2 + T3 + T4 + mu (T2 + 2 T4) + mu^2 (T3 + T4)`.
    pub fn psi_slice(&self, mu: f64) -> Result<f64> {
        self.surface(1.0, mu)
    }

    /// `F(1, 1) = T1 + 2 T2 + 2 T3 + 4 T4`.
    pub fn corner(&self) -> f64 {
        self.eval(1.0, 1.0)
    }

    /// `-(T3 + T4)`; positive exactly when the edge slices are concave.
    pub fn theta(&self) -> f64 {
        -(self.t3 + self.t4)
    }

    /// `F_nn F_mm - F_nm^2 = 4 T3 (T3 + 2 T4)`.
    pub fn hessian_discriminant(&self) -> f64 {
        4.0 * self.t3 * (self.t3 + 2.0 * self.t4)
    }
}

/// Convenience wrapper over [`TTerms::new`].
pub fn t_terms(params: &ClassParams, phi: &PhiSpec, c: f64) -> Result<TTerms> {
    TTerms::new(params, phi, c)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Pqr {
    pub p: f64,
    pub q: f64,
    pub r: f64,
}

impl Pqr {
    pub fn sum(&self) -> f64 {
        self.p + self.q + self.r
    }
}

pub fn pqr(params: &ClassParams, phi: &PhiSpec) -> Pqr {
    let (d2, d3, d4) = (params.d2(), params.d3(), params.d4());
    let (b1, b2) = (phi.b1(), phi.b2());
    let tau_abs = params.tau().norm();

    let mixed = b1 * b1 * tau_abs / (2.0 * d2 * d2 * d3);
    let b_terms = (b1 + 2.0 * b2.abs()) / (d2 * d4);
    let r = b1 / (d3 * d3);
    let p = leading_modulus(params, phi) + r + mixed + b_terms;
    let q = b_terms + 2.0 * r + mixed;
    Pqr { p, q, r }
}

/// `B1 |tau|^2 (P t^2 + Q t + R)` for `t = c^2` in `[0, 1]`.
pub fn omega(params: &ClassParams, phi: &PhiSpec, t: f64) -> f64 {
    let Pqr { p, q, r } = pqr(params, phi);
    phi.b1() * params.tau().norm_sqr() * (p * t * t + q * t + r)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundBreakdown {
    pub params: ClassParams,
    pub phi: PhiSpec,
    pub p: f64,
    pub q: f64,
    pub r: f64,
    /// `B1 |tau|^2 (P + Q + R)`.
    pub bound: f64,
    /// Surface coefficients at `c = 1`, where the bound is attained.
    pub corner_terms: TTerms,
    pub profile: Vec<TTerms>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximizer: Option<MaxReport>,
}

impl BoundBreakdown {
    pub fn with_maximizer(mut self, report: MaxReport) -> Self {
        self.maximizer = Some(report);
        self
    }
}

/// Upper bound on `|a2 a4 - a3^2|` over the class.
pub fn theorem_bound(params: &ClassParams, phi: &PhiSpec) -> BoundBreakdown {
    let Pqr { p, q, r } = pqr(params, phi);
    let bound = phi.b1() * params.tau().norm_sqr() * (p + q + r);
    let profile = (0..PROFILE_STEPS)
        .map(|i| {
            let c = i as f64 / (PROFILE_STEPS - 1) as f64;
            TTerms::new(params, phi, c).expect("c in [0, 1]")
        })
        .collect();
    BoundBreakdown {
        params: *params,
        phi: *phi,
        p,
        q,
        r,
        bound,
        corner_terms: TTerms::new(params, phi, 1.0).expect("c = 1 is valid"),
        profile,
        maximizer: None,
    }
}
