//! The six catalog cones: dimension of `g(Ω)` against the isotropy bound, and
//! exact membership of a few points.
//!
//!     cargo run --example cone_catalog

use siegel_aut::exact_linalg::{format_rational, int};
use siegel_aut::{isotropy_bound, CatalogCone, ConeSpec};

fn main() -> Result<(), siegel_aut::Error> {
    println!("{:<8} {:>2} {:>6} {:>6}", "cone", "k", "dim g", "bound");
    for id in CatalogCone::ALL {
        let cone = ConeSpec::catalog(id);
        println!("{:<8} {:>2} {:>6} {:>6}", id, cone.k, cone.dim_g(), format_rational(&isotropy_bound(cone.k)));
    }

    let omega3 = ConeSpec::catalog(CatalogCone::Omega3);
    for x in [[2, 1, 0], [1, 1, 0], [1, 2, 0]] {
        println!("{x:?} in omega3: {:?}", omega3.contains_in_closure(&x.map(int))?);
    }
    Ok(())
}
