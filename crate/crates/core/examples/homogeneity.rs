//! Generic orbit rank of `G(Ω,H)` on `Ω`: rank below `k` rules out
//! homogeneity.
//!
//!     cargo run --example homogeneity

use siegel_aut::catalog::{build, DomainId};
use siegel_aut::homogeneity::homogeneity_verdict;

fn main() -> Result<(), siegel_aut::Error> {
    let ids = [
        DomainId::D1(4),
        DomainId::D2(4),
        DomainId::d5([1, 0, 0]),
        DomainId::d5([1, 1, 0]),
        DomainId::d6([1, 1, 0]),
        DomainId::d6([2, 1, 0]),
    ];
    for id in ids {
        let v = homogeneity_verdict(&build(&id)?);
        println!("{:<10} a-part dim {}  generic rank {}  {:?}", id.to_string(), v.a_part_dim, v.generic_rank, v.verdict);
    }
    Ok(())
}
