//! Seeded Monte-Carlo search for coefficient tuples exceeding the bound.
use bihankel::harness::{falsify, falsify_partitioned, FalsifyConfig, SamplingMode};
use bihankel::minda::ClassParams;
use bihankel::series::Complex;

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = ClassParams::new(Complex::new(0.5, 0.5), 1.0, 0.0)?;
    let mut cfg = FalsifyConfig::new(params, "caratheodory".parse()?, 50_000, 42);
    cfg.boundary_bias = true;

    let report = falsify(&cfg)?;
    println!(
        "relaxed:     max {:.6} of bound {:.6} (ratio {:.4}), {} violations",
        report.max_observed, report.bound, report.ratio, report.violation_count
    );

    // Splitting the run does not change the result.
    let split = falsify_partitioned(&cfg, 7)?;
    println!(
        "7 partitions reproduce max exactly: {}",
        split.max_observed == report.max_observed
    );

    cfg.mode = SamplingMode::Constrained;
    let constrained = falsify(&cfg)?;
    println!(
        "constrained: max {:.6}, {} of {} tuples rejected",
        constrained.max_observed, constrained.samples_rejected, constrained.samples_run
    );
    Ok(())
}
