use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::rng::{disk_point, sample_rng, uniform};
use crate::bound::theorem_bound;
use crate::coeffs::{
    coefficients_from_schwarz, second_hankel, solve_compatible_y, CoefficientTriple, SchwarzTuple,
    ADMISSIBILITY_TOL,
};
use crate::error::{Error, Result};
use crate::minda::{ClassParams, PhiSpec};

/// Absolute slack on `|H2(2)| <= bound` before a sample counts as a
/// violation.
pub const VIOLATION_TOL: f64 = 1e-9;

/// Violations kept verbatim in a report; the count is always exact.
pub const MAX_STORED_VIOLATIONS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SamplingMode {
    /// All five Schwarz parameters drawn independently.
    #[default]
    Relaxed,
    /// `y` solved from the compatibility of the two `z^2` equations; draws
    /// with `|y| > 1` are rejected.
    Constrained,
}

impl fmt::Display for SamplingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SamplingMode::Relaxed => "relaxed",
            SamplingMode::Constrained => "constrained",
        })
    }
}

impl FromStr for SamplingMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "relaxed" => Ok(SamplingMode::Relaxed),
            "constrained" => Ok(SamplingMode::Constrained),
            other => Err(Error::Validation(format!(
                "unknown sampling mode {other:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FalsifyConfig {
    pub params: ClassParams,
    pub phi: PhiSpec,
    pub samples: u64,
    pub seed: u64,
    pub mode: SamplingMode,
    /// Draw `c1` from the unit disk instead of `[0, 1)`.
    pub complex_c1: bool,
    /// Put `x` and `y` on the unit circle for half of the draws.
    pub boundary_bias: bool,
}

impl FalsifyConfig {
    pub fn new(params: ClassParams, phi: PhiSpec, samples: u64, seed: u64) -> Self {
        Self {
            params,
            phi,
            samples,
            seed,
            mode: SamplingMode::Relaxed,
            complex_c1: false,
            boundary_bias: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::Validation("samples must be >= 1".into()));
        }
        Ok(())
    }
}

/// Draws Schwarz tuples from eleven uniforms per sample:
/// `[bias, c1 (2), x (2), xi (2), y (2), eta (2)]`. The count is fixed so
/// every option reads the same stream positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TupleSampler {
    pub complex_c1: bool,
    pub boundary_bias: bool,
}

impl TupleSampler {
    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> SchwarzTuple {
        let u: [f64; 11] = std::array::from_fn(|_| uniform(rng));
        let on_edge = self.boundary_bias && u[0] < 0.5;
        let c1 = if self.complex_c1 {
            disk_point(u[1], u[2], false)
        } else {
            crate::series::Complex::new(u[1], 0.0)
        };
        SchwarzTuple::new(
            c1,
            disk_point(u[3], u[4], on_edge),
            disk_point(u[5], u[6], false),
            disk_point(u[7], u[8], on_edge),
            disk_point(u[9], u[10], false),
        )
        .expect("disk samples are admissible")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Violation {
    pub index: u64,
    pub tuple: SchwarzTuple,
    pub value: f64,
    pub excess: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FalsifyReport {
    pub params: ClassParams,
    pub phi: PhiSpec,
    pub seed: u64,
    pub mode: SamplingMode,
    pub complex_c1: bool,
    pub boundary_bias: bool,
    pub bound: f64,
    pub max_observed: f64,
    /// `max_observed / bound`.
    pub ratio: f64,
    pub argmax_index: Option<u64>,
    pub argmax_tuple: Option<SchwarzTuple>,
    pub argmax_coefficients: Option<CoefficientTriple>,
    pub samples_run: u64,
    pub samples_rejected: u64,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
}

impl FalsifyReport {
    pub fn has_violations(&self) -> bool {
        self.violation_count > 0
    }
}

/// Running state for one contiguous index range.
#[derive(Debug, Clone)]
struct Tally {
    max: f64,
    argmax: Option<(u64, SchwarzTuple, CoefficientTriple)>,
    rejected: u64,
    violation_count: u64,
    violations: Vec<Violation>,
}

impl Tally {
    fn empty() -> Self {
        Self {
            max: 0.0,
            argmax: None,
            rejected: 0,
            violation_count: 0,
            violations: Vec::new(),
        }
    }

    fn observe(&mut self, index: u64, tuple: SchwarzTuple, t: CoefficientTriple, bound: f64) {
        let value = second_hankel(&t);
        if self.argmax.is_none() || value > self.max {
            self.max = value;
            self.argmax = Some((index, tuple, t));
        }
        if value > bound + VIOLATION_TOL {
            self.violation_count += 1;
            if self.violations.len() < MAX_STORED_VIOLATIONS {
                self.violations.push(Violation {
                    index,
                    tuple,
                    value,
                    excess: value - bound,
                });
            }
        }
    }

    /// Associative merge; `self` must cover lower indices than `later`, so
    /// ties keep the earliest sample.
    fn merge(mut self, later: Tally) -> Tally {
        if let Some(arg) = later.argmax {
            if self.argmax.is_none() || later.max > self.max {
                self.max = later.max;
                self.argmax = Some(arg);
            }
        }
        self.rejected += later.rejected;
        self.violation_count += later.violation_count;
        self.violations.extend(later.violations);
        self.violations.truncate(MAX_STORED_VIOLATIONS);
        self
    }
}

fn run_range(config: &FalsifyConfig, bound: f64, start: u64, end: u64) -> Tally {
    let sampler = TupleSampler {
        complex_c1: config.complex_c1,
        boundary_bias: config.boundary_bias,
    };
    let mut tally = Tally::empty();
    for index in start..end {
        let mut rng = sample_rng(config.seed, index);
        let mut tuple = sampler.draw(&mut rng);
        if config.mode == SamplingMode::Constrained {
            let solved = solve_compatible_y(&config.params, &config.phi, tuple.c1(), tuple.x())
                .filter(|y| y.norm() <= 1.0 + ADMISSIBILITY_TOL)
                .and_then(|y| tuple.with_y(y).ok());
            match solved {
                Some(t) => tuple = t,
                None => {
                    tally.rejected += 1;
                    continue;
                }
            }
        }
        let t = coefficients_from_schwarz(&config.params, &config.phi, &tuple);
        tally.observe(index, tuple, t, bound);
    }
    tally
}

fn assemble(config: &FalsifyConfig, bound: f64, tally: Tally) -> FalsifyReport {
    let (argmax_index, argmax_tuple, argmax_coefficients) = match tally.argmax {
        Some((i, s, t)) => (Some(i), Some(s), Some(t)),
        None => (None, None, None),
    };
    FalsifyReport {
        params: config.params,
        phi: config.phi,
        seed: config.seed,
        mode: config.mode,
        complex_c1: config.complex_c1,
        boundary_bias: config.boundary_bias,
        bound,
        max_observed: tally.max,
        ratio: tally.max / bound,
        argmax_index,
        argmax_tuple,
        argmax_coefficients,
        samples_run: config.samples,
        samples_rejected: tally.rejected,
        violation_count: tally.violation_count,
        violations: tally.violations,
    }
}

/// Splits `[0, samples)` into `partitions` contiguous ranges, runs them in
/// parallel and max-merges. The report does not depend on `partitions`.
pub fn falsify_partitioned(config: &FalsifyConfig, partitions: usize) -> Result<FalsifyReport> {
    config.validate()?;
    if partitions == 0 {
        return Err(Error::Usage("partitions must be >= 1".into()));
    }
    let bound = theorem_bound(&config.params, &config.phi).bound;
    let n = config.samples;
    let k = (partitions as u64).min(n);
    let ranges: Vec<(u64, u64)> = (0..k).map(|p| (p * n / k, (p + 1) * n / k)).collect();
    let tallies: Vec<Tally> = ranges
        .par_iter()
        .map(|&(s, e)| run_range(config, bound, s, e))
        .collect();
    let tally = tallies.into_iter().fold(Tally::empty(), Tally::merge);
    Ok(assemble(config, bound, tally))
}

/// Draws `config.samples` tuples and compares the largest `|a2 a4 - a3^2|`
/// with the bound. Uses one partition per worker thread.
pub fn falsify(config: &FalsifyConfig) -> Result<FalsifyReport> {
    falsify_partitioned(config, rayon::current_num_threads().max(1))
}

/// Evaluates explicit tuples instead of random draws (index = position).
pub fn falsify_tuples(
    params: &ClassParams,
    phi: &PhiSpec,
    tuples: &[SchwarzTuple],
) -> Result<FalsifyReport> {
    if tuples.is_empty() {
        return Err(Error::Validation("need at least one tuple".into()));
    }
    let bound = theorem_bound(params, phi).bound;
    let mut tally = Tally::empty();
    for (i, s) in tuples.iter().enumerate() {
        tally.observe(
            i as u64,
            *s,
            coefficients_from_schwarz(params, phi, s),
            bound,
        );
    }
    let config = FalsifyConfig::new(*params, *phi, tuples.len() as u64, 0);
    Ok(assemble(&config, bound, tally))
}
