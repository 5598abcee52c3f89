//! The upper bound on |a2 a4 - a3^2| and its P, Q, R breakdown.
use bihankel::bound::{omega, theorem_bound};
use bihankel::minda::{ClassParams, PhiSpec};
use bihankel::series::Complex;

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = ClassParams::real(1.0, 1.0, 0.0)?;
    let b = theorem_bound(&params, &PhiSpec::caratheodory());
    println!("P={} Q={} R={}", b.p, b.q, b.r);
    println!("bound = {} (107/18 = {})", b.bound, 107.0 / 18.0);

    let phi: PhiSpec = "janowski:0.5,-0.5".parse()?;
    for tau in [
        Complex::new(1.0, 0.0),
        Complex::new(0.5, 0.5),
        Complex::new(0.0, 2.0),
    ] {
        let params = ClassParams::new(tau, 2.0, 0.5)?;
        println!(
            "tau={tau:<8} bound={:.6}",
            theorem_bound(&params, &phi).bound
        );
    }

    // The quadratic in t = c^2 grows on [0, 1], so it peaks at t = 1.
    let samples: Vec<String> = (0..=4)
        .map(|i| {
            format!(
                "{:.4}",
                omega(&params, &PhiSpec::caratheodory(), i as f64 / 4.0)
            )
        })
        .collect();
    println!("Omega(t) at t = 0, 1/4, .., 1: {}", samples.join(" "));
    Ok(())
}
