//! Independent oracles shared by the integration tests. Nothing in here
//! calls into the library's closed forms.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_f64(r: &BigRational) -> f64 {
    // Numerator and denominator stay far below 2^53 for every test input.
    let n: f64 = r.numer().to_string().parse().unwrap();
    let d: f64 = r.denom().to_string().parse().unwrap();
    n / d
}

/// Exact inputs for a real `tau`.
#[derive(Clone)]
pub struct ExactPoint {
    pub tau: BigRational,
    pub lambda: BigRational,
    pub delta: BigRational,
    pub b: [BigRational; 3],
}

impl ExactPoint {
    pub fn new(
        tau: BigRational,
        lambda: BigRational,
        delta: BigRational,
        b: [BigRational; 3],
    ) -> Self {
        Self {
            tau,
            lambda,
            delta,
            b,
        }
    }

    fn den(&self, n: i64) -> BigRational {
        let n = BigRational::from_integer(n.into());
        BigRational::one() + (&n - BigRational::one()) * (&self.lambda + &n * &self.delta)
    }

    fn k(&self) -> BigRational {
        let (d2, d4) = (self.den(2), self.den(4));
        let [b1, _, b3] = &self.b;
        (b3 / (&d2 * &d4) - b1 * b1 * b1 * &self.tau * &self.tau / (&d2 * &d2 * &d2 * &d2)).abs()
    }

    /// `B1 |tau|^2 (P + Q + R)` with P, Q, R written out term by term.
    pub fn bound_pqr(&self) -> BigRational {
        let (d2, d3, d4) = (self.den(2), self.den(3), self.den(4));
        let [b1, b2, _] = &self.b;
        let tau_abs = self.tau.abs();
        let two = q(2, 1);
        let r = b1 / (&d3 * &d3);
        let mixed = b1 * b1 * &tau_abs / (&two * &d2 * &d2 * &d3);
        let linear = (b1 + &two * b2.abs()) / (&d2 * &d4);
        let p = self.k() + &r + &mixed + &linear;
        let qq = &linear + &two * &r + &mixed;
        b1 * &self.tau * &self.tau * (p + qq + r)
    }

    /// The same quantity reached through the surface
    /// `F = T1 + (nu+mu) T2 + (nu^2+mu^2) T3 + (nu+mu)^2 T4` at `nu = mu = c = 1`.
    pub fn bound_corner(&self) -> BigRational {
        let (d2, d3, d4) = (self.den(2), self.den(3), self.den(4));
        let [b1, b2, _] = &self.b;
        let c = BigRational::one();
        let one_c2 = BigRational::one() + &c * &c;
        let tau_abs = self.tau.abs();
        let t1 = self.k() * &c * &c * &c * &c + b1 * &c * &one_c2 / (&d2 * &d4);
        let t2 =
            &c * &c * &one_c2 / &d2 * (b1 * b1 * &tau_abs / (q(4, 1) * &d2 * &d3) + b2.abs() / &d4);
        let t3 = b1 * &c * (&c - BigRational::one()) * &one_c2 / (q(2, 1) * &d2 * &d4);
        let t4 = b1 * &one_c2 * &one_c2 / (q(4, 1) * &d3 * &d3);
        let f = t1 + q(2, 1) * t2 + q(2, 1) * t3 + q(4, 1) * t4;
        b1 * &self.tau * &self.tau * f
    }

    pub fn bound(&self) -> BigRational {
        let a = self.bound_pqr();
        let b = self.bound_corner();
        assert_eq!(a, b, "oracle routes disagree");
        a
    }
}

/// Power-family coefficients `(2a, 2a^2, 2a(2a^2+1)/3)`, exact.
pub fn power_b(a: &BigRational) -> [BigRational; 3] {
    let two = q(2, 1);
    [
        &two * a,
        &two * a * a,
        &two * a * (&two * a * a + BigRational::one()) / q(3, 1),
    ]
}

pub fn caratheodory_b() -> [BigRational; 3] {
    [q(2, 1), q(2, 1), q(2, 1)]
}

// ---- plain f64 series helpers, length 5 = coefficients of z^0..z^4 ----

pub type Poly = [f64; 5];

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = [0.0; 5];
    for i in 0..5 {
        for j in 0..5 - i {
            out[i + j] += a[i] * b[j];
        }
    }
    out
}

/// `f(g(z))` for `g(0) = 0`, by summing powers of `g`.
pub fn poly_compose(f: &Poly, g: &Poly) -> Poly {
    let mut out = [0.0; 5];
    let mut power = [1.0, 0.0, 0.0, 0.0, 0.0];
    for coeff in f {
        for k in 0..5 {
            out[k] += coeff * power[k];
        }
        power = poly_mul(&power, g);
    }
    out
}

/// Inverse of `z + a2 z^2 + a3 z^3 + a4 z^4` by the fixed-point iteration
/// `g <- w - (f(g) - g)`, which gains one correct order per pass.
pub fn revert(a: [f64; 3]) -> [f64; 3] {
    let f: Poly = [0.0, 1.0, a[0], a[1], a[2]];
    let mut g: Poly = [0.0, 1.0, 0.0, 0.0, 0.0];
    for _ in 0..6 {
        let fg = poly_compose(&f, &g);
        let mut next = [0.0; 5];
        next[1] = 1.0;
        for k in 2..5 {
            next[k] = -(fg[k] - g[k]);
        }
        g = next;
    }
    [g[2], g[3], g[4]]
}
