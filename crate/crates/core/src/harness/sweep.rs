use std::io::Write;

use serde::{Deserialize, Serialize};

use super::falsify::{falsify, FalsifyConfig, SamplingMode};
use crate::bound::{theorem_bound, Corollary};
use crate::error::{Error, Result};
use crate::minda::{ClassParams, PhiSpec};
use crate::series::Complex;

fn default_tau_arg() -> Vec<f64> {
    vec![0.0]
}

fn default_seed() -> u64 {
    42
}

/// Grid over `(tau, lambda, delta, phi)`, read from JSON.
///
/// The `tau` axis is the explicit `tau` list (each `[re, im]`) followed by
/// every `tau_abs x tau_arg` polar combination. An empty axis yields an
/// empty table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    #[serde(default)]
    pub tau: Vec<[f64; 2]>,
    #[serde(default)]
    pub tau_abs: Vec<f64>,
    #[serde(default = "default_tau_arg")]
    pub tau_arg: Vec<f64>,
    #[serde(default)]
    pub lambda: Vec<f64>,
    #[serde(default)]
    pub delta: Vec<f64>,
    /// Subordinating functions in the `family:args` syntax.
    #[serde(default)]
    pub phi: Vec<String>,
    /// Monte-Carlo samples per grid point; 0 skips falsification.
    #[serde(default)]
    pub samples: u64,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default)]
    pub mode: SamplingMode,
    #[serde(default)]
    pub complex_c1: bool,
    #[serde(default)]
    pub boundary_bias: bool,
}

impl SweepSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Validation(format!("sweep config: {e}")))
    }

    fn taus(&self) -> Vec<Complex> {
        let mut out: Vec<Complex> = self
            .tau
            .iter()
            .map(|&[re, im]| Complex::new(re, im))
            .collect();
        for &m in &self.tau_abs {
            for &a in &self.tau_arg {
                out.push(if a == 0.0 {
                    Complex::new(m, 0.0)
                } else {
                    Complex::from_polar(m, a)
                });
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub index: usize,
    pub tau: [f64; 2],
    pub lambda: f64,
    pub delta: f64,
    pub phi: String,
    pub b1: Option<f64>,
    pub b2: Option<f64>,
    pub b3: Option<f64>,
    pub p: Option<f64>,
    pub q: Option<f64>,
    pub r: Option<f64>,
    pub bound: Option<f64>,
    pub samples: u64,
    pub max_observed: Option<f64>,
    pub ratio: Option<f64>,
    pub violations: Option<u64>,
    /// Closed-form corollary values where the grid point is a
    /// specialization; index `k` holds corollary `k + 1`.
    pub corollaries: [Option<f64>; 7],
    /// Largest `|corollary - bound|` over the applicable corollaries.
    pub corollary_max_abs_diff: Option<f64>,
    pub error: Option<String>,
}

impl SweepRow {
    fn failed(index: usize, tau: Complex, lambda: f64, delta: f64, phi: &str, err: Error) -> Self {
        Self {
            index,
            tau: [tau.re, tau.im],
            lambda,
            delta,
            phi: phi.to_string(),
            b1: None,
            b2: None,
            b3: None,
            p: None,
            q: None,
            r: None,
            bound: None,
            samples: 0,
            max_observed: None,
            ratio: None,
            violations: None,
            corollaries: [None; 7],
            corollary_max_abs_diff: None,
            error: Some(err.to_string()),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct SweepTable {
    pub rows: Vec<SweepRow>,
}

const CSV_HEADER: [&str; 28] = [
    "index",
    "tau_re",
    "tau_im",
    "lambda",
    "delta",
    "phi",
    "b1",
    "b2",
    "b3",
    "p",
    "q",
    "r",
    "bound",
    "samples",
    "max_observed",
    "ratio",
    "violations",
    "co1",
    "co2",
    "co3",
    "co4",
    "co5",
    "co6",
    "co7",
    "corollary_max_abs_diff",
    "error",
    "ok",
    "row_kind",
];

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

impl SweepTable {
    pub fn any_violation(&self) -> bool {
        self.rows.iter().any(|r| r.violations.unwrap_or(0) > 0)
    }

    pub fn error_count(&self) -> usize {
        self.rows.iter().filter(|r| r.error.is_some()).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("rows serialize")
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let io = |e: csv::Error| Error::Usage(format!("writing csv: {e}"));
        let mut w = csv::Writer::from_writer(out);
        w.write_record(CSV_HEADER).map_err(io)?;
        for row in &self.rows {
            let mut rec = vec![
                row.index.to_string(),
                row.tau[0].to_string(),
                row.tau[1].to_string(),
                row.lambda.to_string(),
                row.delta.to_string(),
                row.phi.clone(),
                opt(row.b1),
                opt(row.b2),
                opt(row.b3),
                opt(row.p),
                opt(row.q),
                opt(row.r),
                opt(row.bound),
                row.samples.to_string(),
                opt(row.max_observed),
                opt(row.ratio),
                opt(row.violations),
            ];
            rec.extend(row.corollaries.iter().map(|c| opt(*c)));
            rec.push(opt(row.corollary_max_abs_diff));
            rec.push(row.error.clone().unwrap_or_default());
            rec.push((row.error.is_none() && row.violations.unwrap_or(0) == 0).to_string());
            rec.push(
                if row.error.is_some() {
                    "error"
                } else {
                    "point"
                }
                .to_string(),
            );
            w.write_record(&rec).map_err(io)?;
        }
        w.flush()
            .map_err(|e| Error::Usage(format!("writing csv: {e}")))?;
        Ok(())
    }
}

fn evaluate(
    spec: &SweepSpec,
    index: usize,
    tau: Complex,
    lambda: f64,
    delta: f64,
    phi_text: &str,
) -> Result<SweepRow> {
    let params = ClassParams::new(tau, lambda, delta)?;
    let phi: PhiSpec = phi_text.parse()?;
    let breakdown = theorem_bound(&params, &phi);

    let mut corollaries = [None; 7];
    let mut worst: Option<f64> = None;
    for c in Corollary::applicable(&params, &phi) {
        let value = c.bound()?;
        corollaries[usize::from(c.id()) - 1] = Some(value);
        let diff = (value - breakdown.bound).abs();
        worst = Some(worst.map_or(diff, |w| w.max(diff)));
    }

    let (max_observed, ratio, violations) = if spec.samples > 0 {
        let mut cfg = FalsifyConfig::new(params, phi, spec.samples, spec.seed);
        cfg.mode = spec.mode;
        cfg.complex_c1 = spec.complex_c1;
        cfg.boundary_bias = spec.boundary_bias;
        let report = falsify(&cfg)?;
        (
            Some(report.max_observed),
            Some(report.ratio),
            Some(report.violation_count),
        )
    } else {
        (None, None, None)
    };

    Ok(SweepRow {
        index,
        tau: [tau.re, tau.im],
        lambda,
        delta,
        phi: phi.to_string(),
        b1: Some(phi.b1()),
        b2: Some(phi.b2()),
        b3: Some(phi.b3()),
        p: Some(breakdown.p),
        q: Some(breakdown.q),
        r: Some(breakdown.r),
        bound: Some(breakdown.bound),
        samples: spec.samples,
        max_observed,
        ratio,
        violations,
        corollaries,
        corollary_max_abs_diff: worst,
        error: None,
    })
}

/// One row per grid point, in `tau`, `lambda`, `delta`, `phi` order.
/// Invalid points become error rows; the sweep always completes.
pub fn sweep(spec: &SweepSpec) -> SweepTable {
    let mut rows = Vec::new();
    for tau in spec.taus() {
        for &lambda in &spec.lambda {
            for &delta in &spec.delta {
                for phi in &spec.phi {
                    let index = rows.len();
                    let row = evaluate(spec, index, tau, lambda, delta, phi)
                        .unwrap_or_else(|e| SweepRow::failed(index, tau, lambda, delta, phi, e));
                    rows.push(row);
                }
            }
        }
    }
    SweepTable { rows }
}
