//! Numerical maximization of `F(nu, mu)` over the unit square, used to test
//! the claim that the maximum always sits at the corner `(1, 1)`.
//!
//! The search combines an exhaustive grid, a few rounds of local grid
//! refinement around the incumbent, and the analytic candidates of a
//! quadratic on a square: four corners, the stationary points of the four
//! edge slices, and the interior stationary point.

use rayon::prelude::*;
use serde::Serialize;

use super::TTerms;
use crate::error::{Error, Result};
use crate::minda::{ClassParams, PhiSpec};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MaximizerConfig {
    pub c_steps: usize,
    pub grid: usize,
    pub refine_rounds: usize,
    /// Allowed excess of the maximum over `F(1, 1)` before a row is flagged.
    pub tolerance: f64,
}

impl Default for MaximizerConfig {
    fn default() -> Self {
        Self {
            c_steps: 51,
            grid: 101,
            refine_rounds: 3,
            tolerance: 1e-9,
        }
    }
}

impl MaximizerConfig {
    pub fn validate(&self) -> Result<()> {
        if self.c_steps < 2 {
            return Err(Error::Usage(format!(
                "c_steps must be >= 2, got {}",
                self.c_steps
            )));
        }
        if self.grid < 11 {
            return Err(Error::Usage(format!(
                "grid must be >= 11, got {}",
                self.grid
            )));
        }
        if !(self.tolerance >= 0.0) {
            return Err(Error::Usage(format!(
                "tolerance must be >= 0, got {}",
                self.tolerance
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SurfaceMax {
    pub argmax: [f64; 2],
    pub max: f64,
}

impl SurfaceMax {
    fn offer(&mut self, terms: &TTerms, nu: f64, mu: f64) {
        let value = terms.eval(nu, mu);
        if value > self.max {
            *self = SurfaceMax {
                argmax: [nu, mu],
                max: value,
            };
        }
    }
}

fn scan(terms: &TTerms, best: &mut SurfaceMax, lo: [f64; 2], hi: [f64; 2], points: usize) {
    let step = [
        (hi[0] - lo[0]) / (points - 1) as f64,
        (hi[1] - lo[1]) / (points - 1) as f64,
    ];
    for i in 0..points {
        let nu = if i + 1 == points {
            hi[0]
        } else {
            lo[0] + i as f64 * step[0]
        };
        for j in 0..points {
            let mu = if j + 1 == points {
                hi[1]
            } else {
                lo[1] + j as f64 * step[1]
            };
            best.offer(terms, nu, mu);
        }
    }
}

/// Stationary points of a quadratic `F` restricted to the square.
fn analytic_candidates(t: &TTerms) -> Vec<[f64; 2]> {
    let mut out = vec![[0.0, 0.0], [0.0, 1.0], [1.0, 0.0], [1.0, 1.0]];
    let curvature = t.t3 + t.t4;
    if curvature != 0.0 {
        // d/dmu F(0, mu) = T2 + 2 mu (T3 + T4)
        let low_edge = -t.t2 / (2.0 * curvature);
        // d/dmu F(1, mu) = T2 + 2 T4 + 2 mu (T3 + T4)
        let high_edge = -(t.t2 + 2.0 * t.t4) / (2.0 * curvature);
        for (fixed, m) in [(0.0, low_edge), (1.0, high_edge)] {
            if (0.0..=1.0).contains(&m) {
                out.push([fixed, m]);
                out.push([m, fixed]);
            }
        }
    }
    // grad F = 0 forces nu = mu = s with T2 + 2 s (T3 + 2 T4) = 0.
    let diag = t.t3 + 2.0 * t.t4;
    if diag != 0.0 {
        let s = -t.t2 / (2.0 * diag);
        if (0.0..=1.0).contains(&s) {
            out.push([s, s]);
        }
    }
    out
}

/// Maximum of `F` over `[0, 1]^2`.
pub fn maximize_surface(terms: &TTerms, grid: usize, refine_rounds: usize) -> SurfaceMax {
    let grid = grid.max(2);
    let mut best = SurfaceMax {
        argmax: [0.0, 0.0],
        max: f64::NEG_INFINITY,
    };
    scan(terms, &mut best, [0.0, 0.0], [1.0, 1.0], grid);

    let mut width = 1.0;
    for _ in 0..refine_rounds {
        width /= 10.0;
        let [nu, mu] = best.argmax;
        let window = |x: f64| {
            let lo = (x - width / 2.0).clamp(0.0, 1.0 - width);
            (lo, lo + width)
        };
        let (nu_lo, nu_hi) = window(nu);
        let (mu_lo, mu_hi) = window(mu);
        scan(terms, &mut best, [nu_lo, mu_lo], [nu_hi, mu_hi], grid);
    }

    for [nu, mu] in analytic_candidates(terms) {
        best.offer(terms, nu, mu);
    }
    best
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MaxRecord {
    pub c: f64,
    pub argmax: [f64; 2],
    pub max: f64,
    pub corner: f64,
    pub t3_plus_t4: f64,
    pub t3_plus_2t4: f64,
    pub discriminant: f64,
    pub argmax_at_corner: bool,
    pub flagged: bool,
}

/// Maximizes `F` for one set of terms and compares with the corner.
pub fn record_for_terms(terms: &TTerms, config: &MaximizerConfig) -> MaxRecord {
    let found = maximize_surface(terms, config.grid, config.refine_rounds);
    let corner = terms.corner();
    MaxRecord {
        c: terms.c,
        argmax: found.argmax,
        max: found.max,
        corner,
        t3_plus_t4: terms.t3 + terms.t4,
        t3_plus_2t4: terms.t3 + 2.0 * terms.t4,
        discriminant: terms.hessian_discriminant(),
        argmax_at_corner: found.argmax == [1.0, 1.0],
        flagged: found.max - corner > config.tolerance,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MaxReport {
    pub params: ClassParams,
    pub phi: PhiSpec,
    pub config: MaximizerConfig,
    pub records: Vec<MaxRecord>,
    pub flagged_count: usize,
}

/// Runs the maximizer on a uniform `c` grid over `[0, 1]`. Rows are
/// computed in parallel and returned in grid order.
pub fn verify_max_structure(
    params: &ClassParams,
    phi: &PhiSpec,
    config: &MaximizerConfig,
) -> Result<MaxReport> {
    config.validate()?;
    let last = (config.c_steps - 1) as f64;
    let records: Vec<MaxRecord> = (0..config.c_steps)
        .into_par_iter()
        .map(|i| {
            let c = if i + 1 == config.c_steps {
                1.0
            } else {
                i as f64 / last
            };
            let terms = TTerms::new(params, phi, c).expect("c in [0, 1]");
            record_for_terms(&terms, config)
        })
        .collect();
    let flagged_count = records.iter().filter(|r| r.flagged).count();
    Ok(MaxReport {
        params: *params,
        phi: *phi,
        config: *config,
        records,
        flagged_count,
    })
}
