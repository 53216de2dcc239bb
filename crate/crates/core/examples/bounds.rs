//! The dimension bound chain and the sweep ruling out `k ≥ 3` for `n ≥ 5`.
//!
//!     cargo run --example bounds

use siegel_aut::bounds::{bound_chain, large_k_sweep, s_formula};
use siegel_aut::exact_linalg::format_rational;

fn main() -> Result<(), siegel_aut::Error> {
    // D3 branch: s = 2, dim g(Ω) = 2, g½ = 0, g₁ through its bound
    let r = bound_chain(4, 2, Some(2), Some(2), Some(0), None)?;
    let chain: Vec<String> = r.all().iter().map(|b| format_rational(b)).collect();
    println!("n=4 k=2 chain: {}", chain.join(" <= "));

    println!("s for eigenvalue multiplicities (1,2), n=5: {}", s_formula(5, &[1, 2])?);

    for e in large_k_sweep(7)? {
        println!("n={} k={} bound={} target={} margin={}", e.n, e.k, format_rational(&e.estimate), e.target, format_rational(&e.margin));
    }
    Ok(())
}
