//! Grid maximization of the majorizing surface, compared with its corner.
use bihankel::bound::{record_for_terms, verify_max_structure, MaximizerConfig, TTerms};
use bihankel::minda::{ClassParams, PhiSpec};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = ClassParams::real(1.0, 2.0, 0.5)?;
    let phi: PhiSpec = "power:0.5".parse()?;
    let cfg = MaximizerConfig::default();
    let report = verify_max_structure(&params, &phi, &cfg)?;
    let worst = report
        .records
        .iter()
        .map(|r| r.max - r.corner)
        .fold(f64::MIN, f64::max);
    println!(
        "{} values of c, {} flagged, largest max - F(1,1) = {worst:e}",
        report.records.len(),
        report.flagged_count
    );

    // A surface with T3 + T4 < 0 peaks inside the square and is flagged.
    let concave = TTerms::from_raw(0.5, 0.0, 1.0, -2.0, 0.1);
    let rec = record_for_terms(&concave, &cfg);
    println!(
        "concave surface: argmax {:?}, max {:.6}, corner {:.6}, flagged {}",
        rec.argmax, rec.max, rec.corner, rec.flagged
    );
    Ok(())
}
