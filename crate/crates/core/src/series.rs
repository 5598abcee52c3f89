//! Truncated complex power series.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of
//! `z^0 ..= z^N`; every operation discards powers above `N`.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type Complex = Complex64;

const ZERO: Complex = Complex::new(0.0, 0.0);
const ONE: Complex = Complex::new(1.0, 0.0);

/// Order used throughout the crate: enough for a4 and A4.
pub const DEFAULT_ORDER: usize = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex>,
}

impl TruncatedSeries {
    /// Builds a series from `coeffs[k]` = coefficient of `z^k`. The order is
    /// `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Complex>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Usage(
                "a series needs at least one coefficient".into(),
            ));
        }
        Ok(Self { coeffs })
    }

    /// Like [`TruncatedSeries::new`], padding with zeros (or truncating) to
    /// exactly `order + 1` coefficients.
    pub fn with_order(mut coeffs: Vec<Complex>, order: usize) -> Self {
        coeffs.resize(order + 1, ZERO);
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64], order: usize) -> Self {
        Self::with_order(
            coeffs.iter().map(|&c| Complex::new(c, 0.0)).collect(),
            order,
        )
    }

    pub fn zero(order: usize) -> Self {
        Self::with_order(Vec::new(), order)
    }

    /// The constant series `1`.
    pub fn one(order: usize) -> Self {
        Self::with_order(vec![ONE], order)
    }

    /// The identity function `z` (requires `order >= 1` to be nontrivial).
    pub fn identity(order: usize) -> Self {
        Self::with_order(vec![ZERO, ONE], order)
    }

    /// `z + a2 z^2 + ... + a_{N} z^{N}` from `tail = [a2, a3, ...]`.
    pub fn normalized(tail: &[Complex], order: usize) -> Self {
        let mut coeffs = vec![ZERO, ONE];
        coeffs.extend_from_slice(tail);
        Self::with_order(coeffs, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero beyond the order.
    pub fn coeff(&self, k: usize) -> Complex {
        self.coeffs.get(k).copied().unwrap_or(ZERO)
    }

    fn check_same_order(&self, other: &Self, op: &str) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::Usage(format!(
                "{op}: order mismatch ({} vs {})",
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other, "add")?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other, "sub")?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self { coeffs })
    }

    pub fn scale(&self, factor: Complex) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other, "multiply")?;
        let n = self.order();
        let mut out = vec![ZERO; n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == ZERO {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self { coeffs: out })
    }

    /// `self(inner(z))` truncated at the common order, by Horner's scheme.
    ///
    /// `inner` must vanish at the origin, otherwise the truncation would not
    /// be exact.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_same_order(inner, "compose")?;
        if inner.coeffs[0] != ZERO {
            return Err(Error::Domain(format!(
                "compose: inner series has nonzero constant term {}",
                inner.coeffs[0]
            )));
        }
        let n = self.order();
        let mut acc = Self::zero(n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.multiply(inner)?;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Largest coefficient-wise distance to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_same_order(other, "max_abs_diff")?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }
}

/// Coefficients `A2, A3, A4` of the inverse `g = f^{-1}` of
/// `f(z) = z + a2 z^2 + a3 z^3 + a4 z^4 + ...`.
pub fn invert_coefficients(a2: Complex, a3: Complex, a4: Complex) -> [Complex; 3] {
    let big_a2 = -a2;
    let big_a3 = 2.0 * a2 * a2 - a3;
    let big_a4 = -(5.0 * a2 * a2 * a2 - 5.0 * a2 * a3 + a4);
    [big_a2, big_a3, big_a4]
}

/// The `q`-th Hankel determinant `H_q(n)` of a coefficient sequence.
///
/// `coeffs[0]` holds `a1` (conventionally 1), `coeffs[k]` holds `a_{k+1}`.
/// Entry `(i, j)` of the matrix (0-based) is `a_{n+i+j}`.
pub fn hankel(coeffs: &[Complex], q: usize, n: usize) -> Result<Complex> {
    if q == 0 || n == 0 {
        return Err(Error::Usage(format!(
            "hankel: q and n must be positive (q={q}, n={n})"
        )));
    }
    let needed = n + 2 * q - 2;
    if coeffs.len() < needed {
        return Err(Error::Usage(format!(
            "hankel: H_{q}({n}) needs a1..a{needed}, got {} coefficients",
            coeffs.len()
        )));
    }
    let a = |k: usize| coeffs[k - 1];
    match q {
        1 => Ok(a(n)),
        2 => Ok(a(n) * a(n + 2) - a(n + 1) * a(n + 1)),
        _ => {
            let matrix: Vec<Vec<Complex>> = (0..q)
                .map(|i| (0..q).map(|j| a(n + i + j)).collect())
                .collect();
            Ok(determinant(matrix))
        }
    }
}

/// Gaussian elimination with partial pivoting.
fn determinant(mut m: Vec<Vec<Complex>>) -> Complex {
    let size = m.len();
    let mut det = ONE;
    for col in 0..size {
        let pivot = (col..size)
            .max_by(|&i, &j| m[i][col].norm().total_cmp(&m[j][col].norm()))
            .expect("non-empty range");
        if m[pivot][col] == ZERO {
            return ZERO;
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        for row in col + 1..size {
            let factor = m[row][col] / m[col][col];
            let (upper, lower) = m.split_at_mut(row);
            for (dst, src) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *dst -= factor * src;
            }
        }
    }
    det
}

/// The generalized Fekete-Szego functional `a3 - mu a2^2`.
pub fn fekete_szego(a2: Complex, a3: Complex, mu: f64) -> Complex {
    a3 - mu * a2 * a2
}
