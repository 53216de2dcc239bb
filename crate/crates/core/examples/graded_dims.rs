//! Graded components of the automorphism algebra for a few domains, with the
//! explicit degree-one generator for D6.
//!
//!     cargo run --example graded_dims

use siegel_aut::catalog::{build, DomainId};
use siegel_aut::exact_linalg::{format_rational, int};
use siegel_aut::graded_algebra::solve_all;
use siegel_aut::CatalogCone;

fn main() -> Result<(), siegel_aut::Error> {
    let ids = [
        DomainId::Ball(3),
        DomainId::D1(4),
        DomainId::d6([1, 1, 0]),
        DomainId::TubeOmega(CatalogCone::Omega2),
        DomainId::T4,
    ];
    println!("{:<14} {:<18} total  s", "domain", "dims");
    for id in &ids {
        let alg = solve_all(&build(id)?);
        println!("{:<14} {:<18} {:<6} {}", id.to_string(), format!("{:?}", alg.dims.components()), alg.dims.total, alg.l.s);
    }

    let alg = solve_all(&build(&DomainId::d6([1, 1, 0]))?);
    let g = &alg.g1.basis[0];
    for x in [[1, 0, 0], [0, 0, 1], [2, 1, 3]] {
        let a: Vec<String> = g.a_quadratic(&x.map(int)).iter().map(format_rational).collect();
        println!("a(x,x) at x = {x:?}: ({})", a.join(", "));
    }
    Ok(())
}
