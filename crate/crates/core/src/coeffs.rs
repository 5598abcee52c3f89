//! The subordination coefficient system.
//!
//! A function in the class and its inverse are each subordinate to `phi`
//! through Schwarz functions `u(z) = c1 z + c2 z^2 + c3 z^3 + ...` and
//! `v(w) = d1 w + d2 w^2 + d3 w^3 + ...`. Matching the first three
//! coefficients on both sides gives six equations; solving them yields
//! closed forms for `a2`, `a3`, `a4` in terms of the Schwarz data, which we
//! parametrize as `(c1, x, xi, y, eta)` with `d1 = -c1`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::minda::{ClassParams, PhiSpec};
use crate::series::{invert_coefficients, Complex, TruncatedSeries};

/// Slack allowed on every `|.| <= 1` check.
pub const ADMISSIBILITY_TOL: f64 = 1e-12;

fn check_unit(value: Complex, name: &str) -> Result<()> {
    let r = value.norm();
    if !(r <= 1.0 + ADMISSIBILITY_TOL) {
        return Err(Error::Admissibility(format!("|{name}| = {r} exceeds 1")));
    }
    Ok(())
}

/// `(c2, c3)` of a Schwarz function with leading coefficient `c1`:
///
/// `c2 = (1 - c1^2) x`, `c3 = (1 - c1^2)(1 - |x|^2) xi - c1 (1 - c1^2) x^2`.
pub fn schwarz_tail(c1: Complex, x: Complex, xi: Complex) -> Result<(Complex, Complex)> {
    check_unit(c1, "c1")?;
    check_unit(x, "x")?;
    check_unit(xi, "xi")?;
    Ok(schwarz_tail_unchecked(c1, x, xi))
}

fn schwarz_tail_unchecked(c1: Complex, x: Complex, xi: Complex) -> (Complex, Complex) {
    let k = 1.0 - c1 * c1;
    let c2 = k * x;
    let c3 = k * (1.0 - x.norm_sqr()) * xi - c1 * k * x * x;
    (c2, c3)
}

/// Admissible Schwarz parameters. `x, xi` describe `u`; `y, eta` describe
/// `v`, whose leading coefficient is `-c1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SchwarzTuple {
    c1: Complex,
    x: Complex,
    xi: Complex,
    y: Complex,
    eta: Complex,
}

impl SchwarzTuple {
    pub fn new(c1: Complex, x: Complex, xi: Complex, y: Complex, eta: Complex) -> Result<Self> {
        for (v, name) in [(c1, "c1"), (x, "x"), (xi, "xi"), (y, "y"), (eta, "eta")] {
            check_unit(v, name)?;
        }
        Ok(Self { c1, x, xi, y, eta })
    }

    pub fn real(c1: f64, x: f64, xi: f64, y: f64, eta: f64) -> Result<Self> {
        let r = |v: f64| Complex::new(v, 0.0);
        Self::new(r(c1), r(x), r(xi), r(y), r(eta))
    }

    pub fn zero() -> Self {
        let z = Complex::new(0.0, 0.0);
        Self {
            c1: z,
            x: z,
            xi: z,
            y: z,
            eta: z,
        }
    }

    pub fn c1(&self) -> Complex {
        self.c1
    }
    pub fn x(&self) -> Complex {
        self.x
    }
    pub fn xi(&self) -> Complex {
        self.xi
    }
    pub fn y(&self) -> Complex {
        self.y
    }
    pub fn eta(&self) -> Complex {
        self.eta
    }

    /// `d1`, always `-c1`.
    pub fn d1(&self) -> Complex {
        -self.c1
    }

    /// `(c1, c2, c3)` of `u`.
    pub fn u_coefficients(&self) -> [Complex; 3] {
        let (c2, c3) = schwarz_tail_unchecked(self.c1, self.x, self.xi);
        [self.c1, c2, c3]
    }

    /// `(d1, d2, d3)` of `v`.
    pub fn v_coefficients(&self) -> [Complex; 3] {
        let d1 = self.d1();
        let (d2, d3) = schwarz_tail_unchecked(d1, self.y, self.eta);
        [d1, d2, d3]
    }

    pub fn u_series(&self, order: usize) -> TruncatedSeries {
        let [c1, c2, c3] = self.u_coefficients();
        TruncatedSeries::with_order(vec![Complex::new(0.0, 0.0), c1, c2, c3], order)
    }

    pub fn v_series(&self, order: usize) -> TruncatedSeries {
        let [d1, d2, d3] = self.v_coefficients();
        TruncatedSeries::with_order(vec![Complex::new(0.0, 0.0), d1, d2, d3], order)
    }

    /// Entry-wise complex conjugate.
    pub fn conj(&self) -> Self {
        Self {
            c1: self.c1.conj(),
            x: self.x.conj(),
            xi: self.xi.conj(),
            y: self.y.conj(),
            eta: self.eta.conj(),
        }
    }

    /// Same tuple with `y` replaced.
    pub fn with_y(&self, y: Complex) -> Result<Self> {
        check_unit(y, "y")?;
        Ok(Self { y, ..*self })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoefficientTriple {
    pub a2: Complex,
    pub a3: Complex,
    pub a4: Complex,
}

impl CoefficientTriple {
    pub fn new(a2: Complex, a3: Complex, a4: Complex) -> Self {
        Self { a2, a3, a4 }
    }

    /// `f(z) = z + a2 z^2 + a3 z^3 + a4 z^4`.
    pub fn series(&self) -> TruncatedSeries {
        TruncatedSeries::normalized(&[self.a2, self.a3, self.a4], 4)
    }

    /// Coefficients of the inverse function.
    pub fn inverse(&self) -> CoefficientTriple {
        let [a2, a3, a4] = invert_coefficients(self.a2, self.a3, self.a4);
        CoefficientTriple { a2, a3, a4 }
    }

    pub fn conj(&self) -> Self {
        Self {
            a2: self.a2.conj(),
            a3: self.a3.conj(),
            a4: self.a4.conj(),
        }
    }
}

/// Closed forms for `a2`, `a3`, `a4` given the Schwarz data.
pub fn coefficients_from_schwarz(
    params: &ClassParams,
    phi: &PhiSpec,
    s: &SchwarzTuple,
) -> CoefficientTriple {
    let tau = params.tau();
    let (d2, d3, d4) = (params.d2(), params.d3(), params.d4());
    let (b1, b2, b3) = (phi.b1(), phi.b2(), phi.b3());
    let [c1, c2, c3] = s.u_coefficients();
    let [_, e2, e3] = s.v_coefficients();

    let a2 = b1 * c1 * tau / d2;
    let a3 = a2 * a2 + b1 * tau * (c2 - e2) / (2.0 * d3);
    let a4 = 5.0 * b1 * b1 * c1 * tau * tau * (c2 - e2) / (4.0 * d2 * d3)
        + b1 * tau * (c3 - e3) / (2.0 * d4)
        + b3 * c1 * c1 * c1 * tau / d4
        + b2 * c1 * tau * (c2 + e2) / d4;
    CoefficientTriple { a2, a3, a4 }
}

/// `|a2 a4 - a3^2|`.
pub fn second_hankel(t: &CoefficientTriple) -> f64 {
    (t.a2 * t.a4 - t.a3 * t.a3).norm()
}

/// Weight used on the left side of the inverse-function `w^3` equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InverseZ3Weight {
    /// `(1 + 3 lambda + 12 delta) / tau`, the weight of `A4`.
    #[default]
    Corrected,
    /// `(1 + lambda + 2 delta) / tau`, as typeset in the source derivation.
    AsPrinted,
}

/// Left-minus-right residuals of the six coefficient equations, two per
/// power of `z` (function side, then inverse side).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residuals {
    pub f_z1: Complex,
    pub g_w1: Complex,
    pub f_z2: Complex,
    pub g_w2: Complex,
    pub f_z3: Complex,
    pub g_w3: Complex,
}

impl Residuals {
    pub fn all(&self) -> [Complex; 6] {
        [
            self.f_z1, self.g_w1, self.f_z2, self.g_w2, self.f_z3, self.g_w3,
        ]
    }

    /// Residual of the `a3` relation obtained by subtracting the two `z^2`
    /// equations.
    pub fn a3_difference(&self) -> Complex {
        self.f_z2 - self.g_w2
    }

    /// Residual of the `a4` relation obtained by subtracting the two `z^3`
    /// equations.
    pub fn a4_difference(&self) -> Complex {
        self.f_z3 - self.g_w3
    }

    /// The four combinations the closed forms are solved from.
    pub fn solvable(&self) -> [Complex; 4] {
        [
            self.f_z1,
            self.g_w1,
            self.a3_difference(),
            self.a4_difference(),
        ]
    }

    pub fn max_solvable(&self) -> f64 {
        self.solvable().iter().map(|r| r.norm()).fold(0.0, f64::max)
    }
}

/// Evaluates both sides of the six coefficient equations.
///
/// Left sides come from applying the class operator to `f` and to its
/// inverse; right sides from composing `phi` with `u` and `v`. Nothing here
/// uses the closed forms, so it serves as an independent check on them.
pub fn pipeline_residuals(
    params: &ClassParams,
    phi: &PhiSpec,
    s: &SchwarzTuple,
    t: &CoefficientTriple,
    weight: InverseZ3Weight,
) -> Result<Residuals> {
    let f = t.series();
    let g = t.inverse().series();
    let left_f = params.apply_operator(&f)?;
    let left_g = params.apply_operator(&g)?;

    let phi3 = phi.series(3);
    let right_u = phi3.compose(&s.u_series(3))?;
    let right_v = phi3.compose(&s.v_series(3))?;

    let g_w3_left = match weight {
        InverseZ3Weight::Corrected => left_g.coeff(3),
        InverseZ3Weight::AsPrinted => params.operator_weight(2)? * t.inverse().a4,
    };

    Ok(Residuals {
        f_z1: left_f.coeff(1) - right_u.coeff(1),
        g_w1: left_g.coeff(1) - right_v.coeff(1),
        f_z2: left_f.coeff(2) - right_u.coeff(2),
        g_w2: left_g.coeff(2) - right_v.coeff(2),
        f_z3: left_f.coeff(3) - right_u.coeff(3),
        g_w3: g_w3_left - right_v.coeff(3),
    })
}

/// Solves the compatibility condition of the two `z^2` equations,
/// `2 a2^2 = tau (B1 (c2 + d2) + B2 (c1^2 + d1^2)) / d3`, for `y`.
///
/// Returns `None` when `c1^2 = 1`, where `d2` is forced to zero and `y` is
/// undetermined. The result is not checked against `|y| <= 1`.
pub fn solve_compatible_y(
    params: &ClassParams,
    phi: &PhiSpec,
    c1: Complex,
    x: Complex,
) -> Option<Complex> {
    let k = 1.0 - c1 * c1;
    if k.norm() < ADMISSIBILITY_TOL {
        return None;
    }
    let tau = params.tau();
    let (b1, b2) = (phi.b1(), phi.b2());
    let a2 = b1 * c1 * tau / params.d2();
    let sum = (2.0 * params.d3() * a2 * a2 / tau - 2.0 * b2 * c1 * c1) / b1;
    let d2 = sum - k * x;
    Some(d2 / k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minda::PhiFamily;
    use proptest::prelude::*;

    fn r(v: f64) -> Complex {
        Complex::new(v, 0.0)
    }

    fn running() -> (ClassParams, PhiSpec) {
        (
            ClassParams::real(1.0, 1.0, 0.0).unwrap(),
            PhiSpec::caratheodory(),
        )
    }

    fn worked_tuple() -> SchwarzTuple {
        SchwarzTuple::real(0.5, 0.5, 1.0, 0.0, 0.0).unwrap()
    }

    #[test]
    fn schwarz_tail_examples() {
        let any = Complex::new(0.3, -0.4);
        assert_eq!(schwarz_tail(r(0.0), r(1.0), any).unwrap(), (r(1.0), r(0.0)));
        assert_eq!(schwarz_tail(r(1.0), any, any).unwrap(), (r(0.0), r(0.0)));
        let (c2, c3) = schwarz_tail(r(0.5), r(0.5), r(1.0)).unwrap();
        assert!((c2 - r(3.0 / 8.0)).norm() < 1e-15);
        assert!((c3 - r(15.0 / 32.0)).norm() < 1e-15);
    }

    #[test]
    fn schwarz_tail_rejects_large_parameters() {
        assert!(matches!(
            schwarz_tail(r(1.1), r(0.0), r(0.0)),
            Err(Error::Admissibility(_))
        ));
        assert!(matches!(
            schwarz_tail(r(0.0), Complex::new(0.8, 0.8), r(0.0)),
            Err(Error::Admissibility(_))
        ));
        assert!(matches!(
            schwarz_tail(r(0.0), r(0.0), r(-1.0 - 1e-9)),
            Err(Error::Admissibility(_))
        ));
        assert!(schwarz_tail(r(1.0 + 1e-13), r(0.0), r(0.0)).is_ok());
        assert!(SchwarzTuple::real(0.0, 0.0, 0.0, 0.0, 1.5).is_err());
    }

    #[test]
    fn zero_tuple_gives_zero_coefficients() {
        let (p, phi) = running();
        let t = coefficients_from_schwarz(&p, &phi, &SchwarzTuple::zero());
        assert_eq!(t, CoefficientTriple::new(r(0.0), r(0.0), r(0.0)));
        let res = pipeline_residuals(
            &p,
            &phi,
            &SchwarzTuple::zero(),
            &t,
            InverseZ3Weight::Corrected,
        )
        .unwrap();
        assert!(res.all().iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn worked_example_coefficients() {
        let (p, phi) = running();
        let t = coefficients_from_schwarz(&p, &phi, &worked_tuple());
        assert!((t.a2 - r(0.5)).norm() < 1e-15);
        assert!((t.a3 - r(3.0 / 8.0)).norm() < 1e-15);
        assert!((t.a4 - r(55.0 / 128.0)).norm() < 1e-15);
        assert!((second_hankel(&t) - 19.0 / 256.0).abs() < 1e-15);
    }

    #[test]
    fn worked_example_residuals() {
        let (p, phi) = running();
        let s = worked_tuple();
        let t = coefficients_from_schwarz(&p, &phi, &s);
        let res = pipeline_residuals(&p, &phi, &s, &t, InverseZ3Weight::Corrected).unwrap();
        assert!(res.max_solvable() <= 1e-12, "{res:?}");
        // 2 a2^2 - (B1 (c2 + d2) + B2 (c1^2 + d1^2)) / d3 differs from zero:
        // the relaxation leaves the individual z^2 equations unsatisfied.
        assert!(res.f_z2.norm() > 1e-3);
        assert!(res.g_w2.norm() > 1e-3);
    }

    #[test]
    fn printed_weight_breaks_the_a4_relation() {
        let (p, phi) = running();
        let s = worked_tuple();
        let t = coefficients_from_schwarz(&p, &phi, &s);
        let res = pipeline_residuals(&p, &phi, &s, &t, InverseZ3Weight::AsPrinted).unwrap();
        assert!(res.f_z1.norm() < 1e-12 && res.a3_difference().norm() < 1e-12);
        assert!(res.a4_difference().norm() > 1e-3);
    }

    #[test]
    fn unit_c1_boundary() {
        let phi = PhiSpec::resolve(PhiFamily::Janowski { a: 0.7, b: -0.4 }).unwrap();
        let p = ClassParams::new(Complex::new(0.6, 0.3), 2.0, 0.5).unwrap();
        let s = SchwarzTuple::new(r(1.0), Complex::new(0.2, 0.5), r(0.9), r(-0.3), r(0.1)).unwrap();
        let t = coefficients_from_schwarz(&p, &phi, &s);
        let tau = p.tau();
        let a2 = phi.b1() * tau / p.d2();
        assert!((t.a2 - a2).norm() < 1e-15);
        assert!((t.a3 - a2 * a2).norm() < 1e-15);
        assert!((t.a4 - phi.b3() * tau / p.d4()).norm() < 1e-15);
    }

    #[test]
    fn second_hankel_examples() {
        assert_eq!(
            second_hankel(&CoefficientTriple::new(r(1.0), r(1.0), r(1.0))),
            0.0
        );
        let a3 = Complex::new(0.3, 0.4);
        assert!(
            (second_hankel(&CoefficientTriple::new(r(0.0), a3, r(0.0))) - a3.norm_sqr()).abs()
                < 1e-15
        );
    }

    #[test]
    fn compatible_y_satisfies_both_z2_equations() {
        let (p, phi) = running();
        let c1 = r(0.6);
        let x = r(0.1);
        let y = solve_compatible_y(&p, &phi, c1, x).unwrap();
        assert!(y.norm() <= 1.0);
        let s = SchwarzTuple::new(c1, x, r(0.2), y, r(-0.3)).unwrap();
        let t = coefficients_from_schwarz(&p, &phi, &s);
        let res = pipeline_residuals(&p, &phi, &s, &t, InverseZ3Weight::Corrected).unwrap();
        assert!(
            res.f_z2.norm() < 1e-12 && res.g_w2.norm() < 1e-12,
            "{res:?}"
        );
        assert!(solve_compatible_y(&p, &phi, r(1.0), x).is_none());
    }

    fn unit_disk() -> impl Strategy<Value = Complex> {
        (0.0f64..=1.0, -std::f64::consts::PI..std::f64::consts::PI)
            .prop_map(|(rad, arg)| Complex::from_polar(rad, arg))
    }

    fn tuple() -> impl Strategy<Value = SchwarzTuple> {
        (
            unit_disk(),
            unit_disk(),
            unit_disk(),
            unit_disk(),
            unit_disk(),
        )
            .prop_map(|(c1, x, xi, y, eta)| SchwarzTuple::new(c1, x, xi, y, eta).unwrap())
    }

    fn setting() -> impl Strategy<Value = (ClassParams, PhiSpec)> {
        let params = (0.1f64..2.0, -3.0f64..3.0, 1.0f64..6.0, 0.0f64..=1.0)
            .prop_map(|(m, a, l, d)| ClassParams::new(Complex::from_polar(m, a), l, d).unwrap());
        let phi =
            prop_oneof![
                Just(PhiFamily::Caratheodory),
                (0.05f64..=1.0).prop_map(PhiFamily::Power),
                (0.0f64..0.99).prop_map(PhiFamily::OrderBeta),
                (-1.0f64..0.0, 0.01f64..1.0).prop_map(|(b, a)| PhiFamily::Janowski { a, b }),
                (0.1f64..3.0, -3.0f64..3.0, -3.0f64..3.0)
                    .prop_map(|(b1, b2, b3)| PhiFamily::Custom { b1, b2, b3 }),
            ]
            .prop_map(|f| PhiSpec::resolve(f).unwrap());
        (params, phi)
    }

    proptest! {
        #[test]
        fn closed_forms_solve_the_system((p, phi) in setting(), s in tuple()) {
            let t = coefficients_from_schwarz(&p, &phi, &s);
            let res = pipeline_residuals(&p, &phi, &s, &t, InverseZ3Weight::Corrected).unwrap();
            prop_assert!(res.max_solvable() <= 1e-10, "{:?}", res);
        }

        #[test]
        fn conjugation_symmetry((p, phi) in setting(), s in tuple()) {
            let t = coefficients_from_schwarz(&p, &phi, &s);
            let pc = ClassParams::new(p.tau().conj(), p.lambda(), p.delta()).unwrap();
            let tc = coefficients_from_schwarz(&pc, &phi, &s.conj());
            let want = t.conj();
            prop_assert!((tc.a2 - want.a2).norm() <= 1e-12);
            prop_assert!((tc.a3 - want.a3).norm() <= 1e-12);
            prop_assert!((tc.a4 - want.a4).norm() <= 1e-12);
            prop_assert!((second_hankel(&tc) - second_hankel(&t)).abs() <= 1e-12);
        }

        /// z -> -z maps u(z) to u(-z), i.e. (c1, x, xi) -> (-c1, x, -xi), and
        /// f(z) to -f(-z); |a2 a4 - a3^2| is unchanged.
        #[test]
        fn reflection_symmetry((p, phi) in setting(), s in tuple()) {
            let t = coefficients_from_schwarz(&p, &phi, &s);
            let reflected = SchwarzTuple::new(-s.c1(), s.x(), -s.xi(), s.y(), -s.eta()).unwrap();
            let tr = coefficients_from_schwarz(&p, &phi, &reflected);
            prop_assert!((tr.a2 + t.a2).norm() <= 1e-12);
            prop_assert!((tr.a3 - t.a3).norm() <= 1e-12);
            prop_assert!((tr.a4 + t.a4).norm() <= 1e-12);
            prop_assert!((second_hankel(&tr) - second_hankel(&t)).abs() <= 1e-12);
        }

        /// With B2 = 0, flipping tau together with every Schwarz parameter
        /// leaves H2(2) unchanged. (For B2 != 0 the B2 c1 tau (c2 + d2) term
        /// of a4 changes sign, so this is not a general symmetry.)
        #[test]
        fn tau_negation_with_vanishing_b2(
            p in (0.1f64..2.0, -3.0f64..3.0, 1.0f64..6.0, 0.0f64..=1.0)
                .prop_map(|(m, a, l, d)| ClassParams::new(Complex::from_polar(m, a), l, d).unwrap()),
            b1 in 0.1f64..3.0, b3 in -3.0f64..3.0, s in tuple()
        ) {
            let phi = PhiSpec::resolve(PhiFamily::Custom { b1, b2: 0.0, b3 }).unwrap();
            let t = coefficients_from_schwarz(&p, &phi, &s);
            let pn = ClassParams::new(-p.tau(), p.lambda(), p.delta()).unwrap();
            let sn = SchwarzTuple::new(-s.c1(), -s.x(), -s.xi(), -s.y(), -s.eta()).unwrap();
            let tn = coefficients_from_schwarz(&pn, &phi, &sn);
            prop_assert!((second_hankel(&tn) - second_hankel(&t)).abs() <= 1e-12);
        }

        #[test]
        fn zero_c1_collapse((p, phi) in setting(), s in tuple()) {
            let s0 = SchwarzTuple::new(r(0.0), s.x(), s.xi(), s.y(), s.eta()).unwrap();
            let t = coefficients_from_schwarz(&p, &phi, &s0);
            prop_assert_eq!(t.a2, r(0.0));
            let [_, c2, _] = s0.u_coefficients();
            let [_, d2, _] = s0.v_coefficients();
            let a3 = phi.b1() * p.tau() * (c2 - d2) / (2.0 * p.d3());
            prop_assert!((t.a3 - a3).norm() <= 1e-12);
            prop_assert!((second_hankel(&t) - a3.norm_sqr()).abs() <= 1e-12);
        }
    }
}
