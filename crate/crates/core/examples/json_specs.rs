//! Loading a domain from a JSON document and writing it back.
//!
//!     cargo run --example json_specs

use siegel_aut::graded_algebra::graded_dims;
use siegel_aut::io::{emit_spec, load_domain_spec};

const D6: &str = r#"{
  "n": 4,
  "k": 3,
  "cone": "omega3",
  "H": [[["1"]], [["1"]], [["0"]]]
}"#;

fn main() -> Result<(), siegel_aut::Error> {
    let loaded = load_domain_spec(D6, 32, 0)?;
    println!("verdict: {:?}", loaded.omega_hermitian);
    println!("dims: {:?}", graded_dims(&loaded.spec));
    println!("{}", emit_spec(&loaded.spec));

    let bad = r#"{"n": 3, "k": 2, "cone": "omega1", "H": [[["1"]], [["-1"]]]}"#;
    if let Err(e) = load_domain_spec(bad, 32, 0) {
        println!("rejected: {e}");
    }
    Ok(())
}
