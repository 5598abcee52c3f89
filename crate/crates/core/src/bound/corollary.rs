//! Closed-form bounds for the named subclasses obtained by specializing
//! `(tau, lambda, delta, phi)`.
//!
//! Two of the closed forms as originally typeset disagree with the general
//! bound they specialize: the third has `alpha^3 / (4 (1+beta)^4)` where the
//! specialization gives `alpha^3 / (2 (1+beta)^4)`, and the sixth has
//! `(1+delta)^2` where it gives `(1+delta)^4`. [`Corollary::bound`] returns
//! the consistent form; [`Corollary::printed_bound`] keeps the typeset one.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::minda::{ClassParams, PhiFamily, PhiSpec};
use crate::series::Complex;

/// Relative slack used when recognising a specialization from a parameter
/// point (e.g. `tau == 1`).
const MATCH_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "id")]
pub enum Corollary {
    /// `tau = 1`, `delta = 0`, any `phi`.
    #[serde(rename = "1")]
    One { lambda: f64, phi: PhiSpec },
    /// `tau = 1`, `delta = 0`, `phi = ((1+z)/(1-z))^alpha`.
    #[serde(rename = "2")]
    Two { alpha: f64, lambda: f64 },
    /// `tau = 1`, `lambda = 1`, `delta = beta`, power `phi`.
    #[serde(rename = "3")]
    Three { alpha: f64, beta: f64 },
    /// `tau = 1`, `lambda = 1`, `delta = 0`, power `phi`.
    #[serde(rename = "4")]
    Four { alpha: f64 },
    /// `tau = 1 - alpha`, Caratheodory `phi`.
    #[serde(rename = "5")]
    Five { alpha: f64, lambda: f64, delta: f64 },
    /// `tau = 1 - alpha`, `lambda = 1`, Caratheodory `phi`.
    #[serde(rename = "6")]
    Six { alpha: f64, delta: f64 },
    /// `tau = 1 - alpha`, `lambda = 1`, `delta = 0`, Caratheodory `phi`.
    #[serde(rename = "7")]
    Seven { alpha: f64 },
}

/// Loose argument bag, as collected from a command line.
#[derive(Debug, Clone, Copy, Default)]
pub struct CorollaryArgs {
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub lambda: Option<f64>,
    pub delta: Option<f64>,
    pub phi: Option<PhiSpec>,
}

fn require<T>(value: Option<T>, id: u8, name: &str) -> Result<T> {
    value.ok_or_else(|| Error::Usage(format!("corollary {id} needs --{name}")))
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Usage(msg()))
    }
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= MATCH_TOL * a.abs().max(b.abs()).max(1.0)
}

impl Corollary {
    pub fn from_args(id: u8, args: CorollaryArgs) -> Result<Self> {
        let c = match id {
            1 => Corollary::One {
                lambda: require(args.lambda, id, "lambda")?,
                phi: require(args.phi, id, "phi")?,
            },
            2 => Corollary::Two {
                alpha: require(args.alpha, id, "alpha")?,
                lambda: require(args.lambda, id, "lambda")?,
            },
            3 => Corollary::Three {
                alpha: require(args.alpha, id, "alpha")?,
                beta: require(args.beta.or(args.delta), id, "beta")?,
            },
            4 => Corollary::Four {
                alpha: require(args.alpha, id, "alpha")?,
            },
            5 => Corollary::Five {
                alpha: require(args.alpha, id, "alpha")?,
                lambda: require(args.lambda, id, "lambda")?,
                delta: require(args.delta, id, "delta")?,
            },
            6 => Corollary::Six {
                alpha: require(args.alpha, id, "alpha")?,
                delta: require(args.delta.or(args.beta), id, "delta")?,
            },
            7 => Corollary::Seven {
                alpha: require(args.alpha, id, "alpha")?,
            },
            _ => {
                return Err(Error::Usage(format!(
                    "unknown corollary id {id} (expected 1..=7)"
                )))
            }
        };
        c.validate()?;
        Ok(c)
    }

    pub fn id(&self) -> u8 {
        match self {
            Corollary::One { .. } => 1,
            Corollary::Two { .. } => 2,
            Corollary::Three { .. } => 3,
            Corollary::Four { .. } => 4,
            Corollary::Five { .. } => 5,
            Corollary::Six { .. } => 6,
            Corollary::Seven { .. } => 7,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let id = self.id();
        let power_alpha = |a: f64| {
            check(a > 0.0 && a <= 1.0, || {
                format!("corollary {id}: alpha must lie in (0, 1], got {a}")
            })
        };
        let shift_alpha = |a: f64| {
            check((0.0..1.0).contains(&a), || {
                format!("corollary {id}: alpha must lie in [0, 1), got {a}")
            })
        };
        let lambda_ok = |l: f64| {
            check(l >= 1.0 && l.is_finite(), || {
                format!("corollary {id}: lambda must be >= 1, got {l}")
            })
        };
        let unit = |v: f64, name: &str| {
            check((0.0..=1.0).contains(&v), || {
                format!("corollary {id}: {name} must lie in [0, 1], got {v}")
            })
        };
        match *self {
            Corollary::One { lambda, .. } => lambda_ok(lambda),
            Corollary::Two { alpha, lambda } => {
                power_alpha(alpha)?;
                lambda_ok(lambda)
            }
            Corollary::Three { alpha, beta } => {
                power_alpha(alpha)?;
                unit(beta, "beta")
            }
            Corollary::Four { alpha } => power_alpha(alpha),
            Corollary::Five {
                alpha,
                lambda,
                delta,
            } => {
                shift_alpha(alpha)?;
                lambda_ok(lambda)?;
                unit(delta, "delta")
            }
            Corollary::Six { alpha, delta } => {
                shift_alpha(alpha)?;
                unit(delta, "delta")
            }
            Corollary::Seven { alpha } => shift_alpha(alpha),
        }
    }

    /// The `(tau, lambda, delta, phi)` this corollary specializes.
    pub fn specialization(&self) -> Result<(ClassParams, PhiSpec)> {
        self.validate()?;
        let power = |a: f64| PhiSpec::resolve(PhiFamily::Power(a));
        let carath = PhiSpec::caratheodory();
        Ok(match *self {
            Corollary::One { lambda, phi } => (ClassParams::real(1.0, lambda, 0.0)?, phi),
            Corollary::Two { alpha, lambda } => {
                (ClassParams::real(1.0, lambda, 0.0)?, power(alpha)?)
            }
            Corollary::Three { alpha, beta } => (ClassParams::real(1.0, 1.0, beta)?, power(alpha)?),
            Corollary::Four { alpha } => (ClassParams::real(1.0, 1.0, 0.0)?, power(alpha)?),
            Corollary::Five {
                alpha,
                lambda,
                delta,
            } => (ClassParams::real(1.0 - alpha, lambda, delta)?, carath),
            Corollary::Six { alpha, delta } => {
                (ClassParams::real(1.0 - alpha, 1.0, delta)?, carath)
            }
            Corollary::Seven { alpha } => (ClassParams::real(1.0 - alpha, 1.0, 0.0)?, carath),
        })
    }

    /// Every corollary whose specialization is `(params, phi)`.
    pub fn applicable(params: &ClassParams, phi: &PhiSpec) -> Vec<Corollary> {
        let tau = params.tau();
        let (lambda, delta) = (params.lambda(), params.delta());
        let tau_is_one = (tau - Complex::new(1.0, 0.0)).norm() <= MATCH_TOL;
        let lambda_one = close(lambda, 1.0);
        let delta_zero = delta == 0.0;
        let mut out = Vec::new();

        if tau_is_one && delta_zero {
            out.push(Corollary::One { lambda, phi: *phi });
        }
        if let PhiFamily::Power(alpha) = phi.family() {
            if tau_is_one && delta_zero {
                out.push(Corollary::Two { alpha, lambda });
            }
            if tau_is_one && lambda_one {
                out.push(Corollary::Three { alpha, beta: delta });
            }
            if tau_is_one && lambda_one && delta_zero {
                out.push(Corollary::Four { alpha });
            }
        }
        let real_shift = tau.im.abs() <= MATCH_TOL && tau.re > 0.0 && tau.re <= 1.0;
        if phi.family() == PhiFamily::Caratheodory && real_shift {
            let alpha = 1.0 - tau.re;
            out.push(Corollary::Five {
                alpha,
                lambda,
                delta,
            });
            if lambda_one {
                out.push(Corollary::Six { alpha, delta });
                if delta_zero {
                    out.push(Corollary::Seven { alpha });
                }
            }
        }
        out.retain(|c| c.validate().is_ok());
        out
    }

    /// The closed form, consistent with the general bound.
    pub fn bound(&self) -> Result<f64> {
        self.validate()?;
        Ok(self.closed_form(Typeset::Consistent))
    }

    /// The closed form exactly as originally typeset. Differs from
    /// [`Corollary::bound`] only for ids 3 and 6.
    pub fn printed_bound(&self) -> Result<f64> {
        self.validate()?;
        Ok(self.closed_form(Typeset::Printed))
    }

    fn closed_form(&self, form: Typeset) -> f64 {
        let printed = form == Typeset::Printed;
        match *self {
            Corollary::One { lambda: l, phi } => {
                let (b1, b2, b3) = (phi.b1(), phi.b2(), phi.b3());
                b1 * ((b3 / ((1.0 + l) * (1.0 + 3.0 * l)) - b1.powi(3) / (1.0 + l).powi(4)).abs()
                    + 4.0 * b1 / (1.0 + 2.0 * l).powi(2)
                    + b1 * b1 / ((1.0 + l).powi(2) * (1.0 + 2.0 * l))
                    + (2.0 * b1 + 4.0 * b2.abs()) / ((1.0 + l) * (1.0 + 3.0 * l)))
            }
            Corollary::Two {
                alpha: a,
                lambda: l,
            } => {
                2.0 * a
                    * (((4.0 * a.powi(3) + 2.0 * a) / (3.0 * (1.0 + l) * (1.0 + 3.0 * l))
                        - 8.0 * a.powi(3) / (1.0 + l).powi(4))
                    .abs()
                        + 8.0 * a / (1.0 + 2.0 * l).powi(2)
                        + 4.0 * a * a / ((1.0 + l).powi(2) * (1.0 + 2.0 * l))
                        + (4.0 * a + 8.0 * a * a) / ((1.0 + l) * (1.0 + 3.0 * l)))
            }
            Corollary::Three { alpha: a, beta: b } => {
                let cube_den = if printed { 4.0 } else { 2.0 };
                2.0 * a
                    * (((2.0 * a.powi(3) + a) / (12.0 * (1.0 + b) * (1.0 + 3.0 * b))
                        - a.powi(3) / (cube_den * (1.0 + b).powi(4)))
                    .abs()
                        + 8.0 * a / (9.0 * (1.0 + 2.0 * b).powi(2))
                        + a * a / (3.0 * (1.0 + b).powi(2) * (1.0 + 2.0 * b))
                        + (a + 2.0 * a * a) / (2.0 * (1.0 + b) * (1.0 + 3.0 * b)))
            }
            Corollary::Four { alpha: a } => {
                2.0 * a
                    * (((4.0 * a.powi(3) - a) / 12.0).abs() + 25.0 * a / 18.0 + 4.0 * a * a / 3.0)
            }
            Corollary::Five {
                alpha: a,
                lambda: l,
                delta: d,
            } => {
                let d2 = 1.0 + l + 2.0 * d;
                let d3 = 1.0 + 2.0 * l + 6.0 * d;
                let d4 = 1.0 + 3.0 * l + 12.0 * d;
                let s = 1.0 - a;
                2.0 * s
                    * s
                    * (8.0 / (d3 * d3)
                        + (2.0 / (d2 * d4) - 8.0 * s * s / d2.powi(4)).abs()
                        + 4.0 * s / (d2 * d2 * d3)
                        + 12.0 / (d2 * d4))
            }
            Corollary::Six { alpha: a, delta: d } => {
                let s = 1.0 - a;
                let power = if printed { 2 } else { 4 };
                2.0 * s
                    * s
                    * (8.0 / (9.0 * (1.0 + 2.0 * d).powi(2))
                        + (1.0 / (4.0 * (1.0 + d) * (1.0 + 3.0 * d))
                            - s * s / (2.0 * (1.0 + d).powi(power)))
                        .abs()
                        + s / (3.0 * (1.0 + d).powi(2) * (1.0 + 2.0 * d))
                        + 3.0 / (2.0 * (1.0 + d) * (1.0 + 3.0 * d)))
            }
            Corollary::Seven { alpha: a } => {
                let s = 1.0 - a;
                2.0 * s * s * (49.0 / 18.0 - a / 3.0 + (0.25 - s * s / 2.0).abs())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Typeset {
    Consistent,
    Printed,
}
