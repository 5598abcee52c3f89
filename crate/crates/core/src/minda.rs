//! Subordinating functions `phi(z) = 1 + B1 z + B2 z^2 + B3 z^3 + ...` and
//! the class parameters `(tau, lambda, delta)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{Complex, TruncatedSeries};

/// Built-in families of subordinating functions.
///
/// String syntax: `caratheodory`, `order_beta:0.25`, `janowski:0.5,-0.5`,
/// `power:0.75`, `custom:2.0,1.0,0.5`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum PhiFamily {
    /// `(1 + z) / (1 - z)`
    Caratheodory,
    /// `(1 + (1 - 2 beta) z) / (1 - z)`, `0 <= beta < 1`
    OrderBeta(f64),
    /// `(1 + A z) / (1 + B z)`, `-1 <= B < A <= 1`
    Janowski {
        a: f64,
        b: f64,
    },
    /// `((1 + z) / (1 - z))^alpha`, `0 < alpha <= 1`
    Power(f64),
    Custom {
        b1: f64,
        b2: f64,
        b3: f64,
    },
}

impl PhiFamily {
    pub fn validate(&self) -> Result<()> {
        let finite = |v: f64, name: &str| {
            if v.is_finite() {
                Ok(())
            } else {
                Err(Error::Validation(format!("{name} must be finite, got {v}")))
            }
        };
        match *self {
            PhiFamily::Caratheodory => Ok(()),
            PhiFamily::OrderBeta(beta) => {
                finite(beta, "beta")?;
                if !(0.0..1.0).contains(&beta) {
                    return Err(Error::Validation(format!(
                        "order_beta needs 0 <= beta < 1, got {beta}"
                    )));
                }
                Ok(())
            }
            PhiFamily::Janowski { a, b } => {
                finite(a, "A")?;
                finite(b, "B")?;
                if !(-1.0 <= b && b < a && a <= 1.0) {
                    return Err(Error::Validation(format!(
                        "janowski needs -1 <= B < A <= 1, got A={a}, B={b}"
                    )));
                }
                Ok(())
            }
            PhiFamily::Power(alpha) => {
                finite(alpha, "alpha")?;
                if !(alpha > 0.0 && alpha <= 1.0) {
                    return Err(Error::Validation(format!(
                        "power needs 0 < alpha <= 1, got {alpha}"
                    )));
                }
                Ok(())
            }
            PhiFamily::Custom { b1, b2, b3 } => {
                for (v, name) in [(b1, "B1"), (b2, "B2"), (b3, "B3")] {
                    if !v.is_finite() {
                        return Err(Error::InvalidPhi(format!("{name} must be finite, got {v}")));
                    }
                }
                Ok(())
            }
        }
    }

    /// `(B1, B2, B3)` of the family, without validation.
    fn coefficients(&self) -> (f64, f64, f64) {
        match *self {
            PhiFamily::Caratheodory => (2.0, 2.0, 2.0),
            PhiFamily::OrderBeta(beta) => PhiFamily::Janowski {
                a: 1.0 - 2.0 * beta,
                b: -1.0,
            }
            .coefficients(),
            PhiFamily::Janowski { a, b } => {
                let d = a - b;
                (d, -b * d, b * b * d)
            }
            PhiFamily::Power(alpha) => (
                2.0 * alpha,
                2.0 * alpha * alpha,
                2.0 * alpha * (2.0 * alpha * alpha + 1.0) / 3.0,
            ),
            PhiFamily::Custom { b1, b2, b3 } => (b1, b2, b3),
        }
    }
}

impl fmt::Display for PhiFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhiFamily::Caratheodory => write!(f, "caratheodory"),
            PhiFamily::OrderBeta(beta) => write!(f, "order_beta:{beta}"),
            PhiFamily::Janowski { a, b } => write!(f, "janowski:{a},{b}"),
            PhiFamily::Power(alpha) => write!(f, "power:{alpha}"),
            PhiFamily::Custom { b1, b2, b3 } => write!(f, "custom:{b1},{b2},{b3}"),
        }
    }
}

fn parse_numbers(family: &str, args: &str, count: usize) -> Result<Vec<f64>> {
    let values = args
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|e| Error::Validation(format!("{family}: cannot parse {s:?}: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if values.len() != count {
        return Err(Error::Validation(format!(
            "{family} takes {count} parameter(s), got {}",
            values.len()
        )));
    }
    Ok(values)
}

impl FromStr for PhiFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, args) = match s.split_once(':') {
            Some((name, args)) => (name.trim(), Some(args)),
            None => (s, None),
        };
        let family = match (name, args) {
            ("caratheodory", None) => PhiFamily::Caratheodory,
            ("order_beta", Some(args)) => PhiFamily::OrderBeta(parse_numbers(name, args, 1)?[0]),
            ("janowski", Some(args)) => {
                let v = parse_numbers(name, args, 2)?;
                PhiFamily::Janowski { a: v[0], b: v[1] }
            }
            ("power", Some(args)) => PhiFamily::Power(parse_numbers(name, args, 1)?[0]),
            ("custom", Some(args)) => {
                let v = parse_numbers(name, args, 3)?;
                PhiFamily::Custom {
                    b1: v[0],
                    b2: v[1],
                    b3: v[2],
                }
            }
            _ => return Err(Error::Validation(format!("unrecognised phi family {s:?}"))),
        };
        Ok(family)
    }
}

impl TryFrom<String> for PhiFamily {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<PhiFamily> for String {
    fn from(f: PhiFamily) -> String {
        f.to_string()
    }
}

/// A resolved subordinating function truncated after `B3`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhiSpec {
    family: PhiFamily,
    b1: f64,
    b2: f64,
    b3: f64,
}

impl PhiSpec {
    pub fn resolve(family: PhiFamily) -> Result<Self> {
        family.validate()?;
        let (b1, b2, b3) = family.coefficients();
        if !(b1 > 0.0) {
            return Err(Error::InvalidPhi(format!("B1 must be positive, got {b1}")));
        }
        Ok(Self { family, b1, b2, b3 })
    }

    pub fn caratheodory() -> Self {
        Self::resolve(PhiFamily::Caratheodory).expect("caratheodory is valid")
    }

    pub fn family(&self) -> PhiFamily {
        self.family
    }

    pub fn b1(&self) -> f64 {
        self.b1
    }

    pub fn b2(&self) -> f64 {
        self.b2
    }

    pub fn b3(&self) -> f64 {
        self.b3
    }

    /// `1 + B1 z + B2 z^2 + B3 z^3`, zero-padded to `order`.
    pub fn series(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_real(&[1.0, self.b1, self.b2, self.b3], order)
    }
}

impl FromStr for PhiSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PhiSpec::resolve(s.parse()?)
    }
}

impl fmt::Display for PhiSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.family.fmt(f)
    }
}

/// Convenience: `resolve_phi(family)`.
pub fn resolve_phi(family: PhiFamily) -> Result<PhiSpec> {
    PhiSpec::resolve(family)
}

/// Parses `re,im` (or a bare `re`) into a complex `tau`.
pub fn parse_tau(text: &str) -> Result<Complex> {
    let parts = parse_numbers("tau", text, text.split(',').count())?;
    match parts.as_slice() {
        [re] => Ok(Complex::new(*re, 0.0)),
        [re, im] => Ok(Complex::new(*re, *im)),
        _ => Err(Error::Validation(format!(
            "tau must be `re,im` or `re`, got {text:?}"
        ))),
    }
}

/// `(tau, lambda, delta)` with `tau != 0`, `lambda >= 1`, `0 <= delta <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClassParams {
    tau: Complex,
    lambda: f64,
    delta: f64,
}

impl ClassParams {
    pub fn new(tau: Complex, lambda: f64, delta: f64) -> Result<Self> {
        if !(tau.re.is_finite() && tau.im.is_finite()) || tau.norm() == 0.0 {
            return Err(Error::Validation(format!(
                "tau must be finite and nonzero, got {tau}"
            )));
        }
        if !(lambda >= 1.0 && lambda.is_finite()) {
            return Err(Error::Validation(format!(
                "lambda must be >= 1, got {lambda}"
            )));
        }
        if !(0.0..=1.0).contains(&delta) {
            return Err(Error::Validation(format!(
                "delta must lie in [0, 1], got {delta}"
            )));
        }
        Ok(Self { tau, lambda, delta })
    }

    /// Real `tau`.
    pub fn real(tau: f64, lambda: f64, delta: f64) -> Result<Self> {
        Self::new(Complex::new(tau, 0.0), lambda, delta)
    }

    pub fn tau(&self) -> Complex {
        self.tau
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// `1 + (n - 1)(lambda + n delta)`; equals `d2`, `d3`, `d4` for n = 2, 3, 4.
    pub fn denominator(&self, n: usize) -> f64 {
        let n = n as f64;
        1.0 + (n - 1.0) * (self.lambda + n * self.delta)
    }

    /// `1 + lambda + 2 delta`
    pub fn d2(&self) -> f64 {
        self.denominator(2)
    }

    /// `1 + 2 lambda + 6 delta`
    pub fn d3(&self) -> f64 {
        self.denominator(3)
    }

    /// `1 + 3 lambda + 12 delta`
    pub fn d4(&self) -> f64 {
        self.denominator(4)
    }

    /// Weight multiplying `a_n z^{n-1}` in the operator series.
    pub fn operator_weight(&self, n: usize) -> Result<Complex> {
        if n < 2 {
            return Err(Error::Usage(format!(
                "operator weight needs n >= 2, got {n}"
            )));
        }
        Ok(Complex::new(self.denominator(n), 0.0) / self.tau)
    }

    /// `1 + (1/tau) ((1 - lambda) f/z + lambda f' + delta z f'' - 1)` as a
    /// series, i.e. `1 + sum_{n>=2} w_n a_n z^{n-1}`. The result has order
    /// `f.order() - 1`.
    pub fn apply_operator(&self, f: &TruncatedSeries) -> Result<TruncatedSeries> {
        let a = f.coeffs();
        if f.order() < 1 {
            return Err(Error::Domain(
                "operator needs a series of order >= 1".into(),
            ));
        }
        if a[0].norm() > 1e-12 || (a[1] - 1.0).norm() > 1e-12 {
            return Err(Error::Domain(format!(
                "operator needs f(0) = 0 and f'(0) = 1, got a0 = {}, a1 = {}",
                a[0], a[1]
            )));
        }
        let mut out = vec![Complex::new(1.0, 0.0)];
        for (n, &an) in a.iter().enumerate().skip(2) {
            out.push(self.operator_weight(n)? * an);
        }
        Ok(TruncatedSeries::with_order(out, f.order() - 1))
    }
}
