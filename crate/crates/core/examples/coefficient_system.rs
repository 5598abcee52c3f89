//! Coefficients of a class member from Schwarz parameters, checked against
//! the operator and subordination equations they must satisfy.
use bihankel::coeffs::{
    coefficients_from_schwarz, pipeline_residuals, second_hankel, solve_compatible_y,
    InverseZ3Weight, SchwarzTuple,
};
use bihankel::minda::{ClassParams, PhiSpec};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = ClassParams::real(1.0, 1.0, 0.0)?;
    let phi = PhiSpec::caratheodory();

    let s = SchwarzTuple::real(0.5, 0.5, 1.0, 0.0, 0.0)?;
    let t = coefficients_from_schwarz(&params, &phi, &s);
    println!("a2={} a3={} a4={}", t.a2, t.a3, t.a4);
    println!("|a2 a4 - a3^2| = {}", second_hankel(&t));

    let r = pipeline_residuals(&params, &phi, &s, &t, InverseZ3Weight::Corrected)?;
    println!(
        "largest residual of the solvable equations: {:e}",
        r.max_solvable()
    );
    println!(
        "each z^2 equation on its own is off by {:.6}",
        r.f_z2.norm()
    );

    // Choosing y to match the other side closes the individual equations too.
    if let Some(y) = solve_compatible_y(&params, &phi, s.c1(), s.x()) {
        let matched = s.with_y(y)?;
        let t = coefficients_from_schwarz(&params, &phi, &matched);
        let r = pipeline_residuals(&params, &phi, &matched, &t, InverseZ3Weight::Corrected)?;
        println!(
            "compatible y = {y}: z^2 residuals {:e}, {:e}",
            r.f_z2.norm(),
            r.g_w2.norm()
        );
    }
    Ok(())
}
