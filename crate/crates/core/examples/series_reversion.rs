//! Truncated power series: composition, inverse coefficients and the
//! second Hankel determinant.
use bihankel::series::{fekete_szego, hankel, invert_coefficients, Complex, TruncatedSeries};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let re = |v: f64| Complex::new(v, 0.0);

    // -log(1 - z) = z + z^2/2 + z^3/3 + z^4/4 and its inverse 1 - e^{-w}.
    let (a2, a3, a4) = (re(0.5), re(1.0 / 3.0), re(0.25));
    let inv = invert_coefficients(a2, a3, a4);
    println!(
        "inverse of -log(1-z): A2={} A3={} A4={}",
        inv[0].re, inv[1].re, inv[2].re
    );

    let f = TruncatedSeries::normalized(&[a2, a3, a4], 4);
    let g = TruncatedSeries::normalized(&inv, 4);
    let round = f.compose(&g)?;
    println!(
        "f(g(w)) - w, max coefficient error: {:e}",
        round.max_abs_diff(&TruncatedSeries::identity(4))?
    );

    let coeffs = [re(1.0), a2, a3, a4];
    println!("H_2(2) = a2 a4 - a3^2 = {}", hankel(&coeffs, 2, 2)?.re);
    println!(
        "Fekete-Szego a3 - mu a2^2 at mu = 1: {}",
        fekete_szego(a2, a3, 1.0).re
    );
    Ok(())
}
