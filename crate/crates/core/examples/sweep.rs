//! A parameter sweep from a JSON config, written as CSV to stdout.
use bihankel::harness::{sweep, SweepSpec};

const CONFIG: &str = r#"{
    "tau": [[1.0, 0.0], [0.5, 0.5]],
    "lambda": [1.0, 2.0],
    "delta": [0.0, 0.5],
    "phi": ["caratheodory", "power:0.5"],
    "samples": 2000,
    "seed": 42
}"#;

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let table = sweep(&SweepSpec::from_json(CONFIG)?);
    table.write_csv(std::io::stdout().lock())?;
    eprintln!(
        "{} rows, {} errors, violations: {}",
        table.rows.len(),
        table.error_count(),
        table.any_violation()
    );
    Ok(())
}
