//! Checking that `H(w,w)` stays in the closed cone, and finding a positive
//! definite combination of the components.
//!
//!     cargo run --example hermitian_forms

use siegel_aut::exact_linalg::{format_rational, int};
use siegel_aut::hermitian_forms::{is_omega_hermitian, positive_definite_combination, HermitianFamily, OmegaHermitianVerdict};
use siegel_aut::{CatalogCone, ConeSpec};

fn main() -> Result<(), siegel_aut::Error> {
    let omega1 = ConeSpec::catalog(CatalogCone::Omega1);
    let omega3 = ConeSpec::catalog(CatalogCone::Omega3);

    // (|w1|², |w1|² + |w2|²) on the quadrant: decided exactly
    let d3 = HermitianFamily::diagonal(&[vec![int(1), int(0)], vec![int(1), int(1)]])?;
    println!("D3 form: {:?}", is_omega_hermitian(&d3, &omega1, 32, 0)?);
    let c: Vec<String> = positive_definite_combination(&d3, &omega1)?.iter().map(format_rational).collect();
    println!("positive definite combination: ({})", c.join(", "));

    // (|w|², |w|², 0) on the light cone: checked on samples
    let d6 = HermitianFamily::diagonal(&[vec![int(1)], vec![int(1)], vec![int(0)]])?;
    println!("D6 form: {:?}", is_omega_hermitian(&d6, &omega3, 32, 0)?);

    // (|w|², −|w|²) leaves the quadrant
    let bad = HermitianFamily::diagonal(&[vec![int(1)], vec![int(-1)]])?;
    if let OmegaHermitianVerdict::Counterexample(w) = is_omega_hermitian(&bad, &omega1, 32, 0)? {
        let w: Vec<String> = w.iter().map(ToString::to_string).collect();
        println!("bad form: H(w,w) leaves the quadrant at w = ({})", w.join(", "));
    }
    Ok(())
}
