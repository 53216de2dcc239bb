//! All reference checks, then a negative control with a wrong expected value.
//!
//!     cargo run --release --example verify_paper

use siegel_aut::catalog::{verify_paper, VerifyOptions};

fn main() {
    let report = verify_paper(VerifyOptions::default());
    println!("passed {}, failed {}", report.summary.passed, report.summary.failed);

    let broken = verify_paper(VerifyOptions { d6_total_expected: 11, ..Default::default() });
    for c in broken.failures() {
        println!("negative control: {} expected {} computed {}", c.name, c.expected, c.computed);
    }
}
