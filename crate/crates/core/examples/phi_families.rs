//! The subordinating functions and their first three coefficients.
use bihankel::minda::{PhiFamily, PhiSpec};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in [
        "caratheodory",
        "order_beta:0.25",
        "janowski:0.5,-0.5",
        "power:0.75",
        "custom:2.0,1.0,0.5",
    ] {
        let phi: PhiSpec = text.parse()?;
        println!(
            "{text:<20} B1={:<8} B2={:<8} B3={}",
            phi.b1(),
            phi.b2(),
            phi.b3()
        );
    }

    // Janowski needs -1 <= B < A <= 1.
    match PhiSpec::resolve(PhiFamily::Janowski { a: 0.2, b: 0.4 }) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }

    let phi = PhiSpec::resolve(PhiFamily::Power(0.5))?;
    let series = phi.series(3);
    println!(
        "power:0.5 as a series: {:?}",
        series.coeffs().iter().map(|c| c.re).collect::<Vec<_>>()
    );
    Ok(())
}
