//! Case analysis over the named families for `2 ≤ n ≤ 5`, reporting the
//! homogeneous models and those with `d = n² − 2`.
//!
//!     cargo run --release --example classify

use siegel_aut::catalog::classify;

fn main() -> Result<(), siegel_aut::Error> {
    for n in 2..=5 {
        let r = classify(n, 32, 0)?;
        let list: Vec<String> = r.homogeneous.iter().map(|e| format!("{} {}", e.model, e.total)).collect();
        let survivors: Vec<String> = r.survivors.iter().map(|e| e.model.clone()).collect();
        println!("n={n}: {}", list.join(", "));
        println!("     d = {}: {}", r.target, survivors.join(", "));
    }
    Ok(())
}
