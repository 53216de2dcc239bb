//! The algebra as explicit polynomial vector fields, with the grading and the
//! bracket identities checked exactly.
//!
//!     cargo run --example vector_fields

use siegel_aut::catalog::{build, DomainId};
use siegel_aut::graded_algebra::solve_all;
use siegel_aut::vector_fields::{check_bracket_identities, check_grading, euler_field, materialize};

fn main() -> Result<(), siegel_aut::Error> {
    let spec = build(&DomainId::d6([1, 1, 0]))?;
    let fields = materialize(&spec, &solve_all(&spec))?;
    println!("euler field {}", euler_field(&spec));
    for f in &fields {
        println!("{:<10} {}", f.name, f);
    }
    let grading = check_grading(&spec, &fields);
    println!("grading: {} eigen checks, {} bracket checks, passed = {}", grading.eigen_checked, grading.brackets_checked, grading.passed());
    let ids = check_bracket_identities(&fields);
    println!("antisymmetry on {} pairs, jacobi on {} triples, failures: {}", ids.pairs_checked, ids.triples_checked, ids.failures.len());
    Ok(())
}
